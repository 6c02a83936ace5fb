//! Runs the acceptance battery; pass criterion numbers to pick a subset.
//!
//!     cargo run --example acceptance_suite -- 2 3 12

use taukit::suite::{Suite, CRITERIA};

fn main() -> taukit::Result<()> {
    let suite = Suite::from_env()?;
    let ids: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let ids = if ids.is_empty() { (1..=CRITERIA).collect() } else { ids };
    println!("seed {}", suite.seed);
    for id in ids {
        println!("{}", suite.run(id).line());
    }
    Ok(())
}
