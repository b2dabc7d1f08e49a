// Seeded cross-check of every closed form against the simulated collision.

use ri_collide::cli::verify;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let report = verify(7, 200);
    for failure in &report.failures {
        println!("{failure}");
    }
    println!(
        "{} trials, {} checks, {} failures",
        report.trials,
        report.checks,
        report.failures.len()
    );
    if report.passed() {
        Ok(())
    } else {
        Err("oracle suite reported failures".into())
    }
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
