#![no_main]

use apery_zeta_cli::{Cli, Command, VerifyPlan};
use clap::Parser;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let args = std::iter::once("apery-zeta").chain(text.split_whitespace());
    let Ok(cli) = Cli::try_parse_from(args) else {
        return;
    };
    // Only planning is exercised; running would make inputs arbitrarily slow.
    if let Command::Verify(args) = &cli.command {
        let _ = VerifyPlan::from_args(args);
    }
});
