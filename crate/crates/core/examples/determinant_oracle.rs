//! τ as the determinant of a finite block of U⁺(t)U⁻(M, β).

use std::time::Instant;

use taukit::rspec::RSpec;
use taukit::scalar::rat;
use taukit::verify::det_oracle_tau;

fn main() -> taukit::Result<()> {
    let r = RSpec::rational(&[rat(1, 2)], &[rat(1, 3)]);
    for d in 2..=5 {
        for window in [d, d + 2] {
            let start = Instant::now();
            let out = det_oracle_tau(&r, 0, d, window)?;
            println!(
                "d={d} window={window}: {} terms, matches series {}, stable {} ({:.2?})",
                out.det.len(),
                out.report.pass,
                out.stable,
                start.elapsed()
            );
        }
    }
    let small = det_oracle_tau(&RSpec::rational(&[rat(0, 1)], &[]), 1, 2, 2)?;
    println!("\nr = D, M = 1:\n{}", small.det);
    Ok(())
}
