//! Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

use radii_atlas::acceptance::{run, Config, Level};

fn main() {
    let level = match std::env::var("ACCEPTANCE_LEVEL").as_deref() {
        Ok("smoke") => Level::Smoke,
        _ => Level::Full,
    };
    let outcomes = run(Config { level, ..Config::default() }, |o| println!("{}", o.line()));
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    println!("{} of {} criteria passed", outcomes.len() - failed, outcomes.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
