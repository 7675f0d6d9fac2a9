//! One line per criterion; nonzero exit if any fails.

use std::process::ExitCode;

use rackhom::verify::{run_all, sign_error_is_caught};

fn main() -> ExitCode {
    let outcomes = run_all();
    for o in &outcomes {
        println!("{}", o.line());
    }
    let control = sign_error_is_caught();
    println!("[{}] control: a flipped face sign is rejected", if control { "PASS" } else { "FAIL" });
    let failed: Vec<_> = outcomes.iter().filter(|o| !o.passed).map(|o| o.id).collect();
    if outcomes.len() == 10 && failed.is_empty() && control {
        println!("acceptance: all {} criteria passed", outcomes.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}, control {}", if control { "ok" } else { "failed" });
        ExitCode::FAILURE
    }
}
