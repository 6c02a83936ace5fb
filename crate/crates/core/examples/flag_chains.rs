//! Sums over nested partitions, and the two-sided product rule.

use taukit::poly::Family;
use taukit::rspec::RSpec;
use taukit::scalar::rat;
use taukit::schur::TimesSpec;
use taukit::tau::{tau_general, tau_series, tau_two_sided, ChainSpec};

fn main() -> taukit::Result<()> {
    let (t, b) = (TimesSpec::Generic(Family::T), TimesSpec::Generic(Family::B));
    let rt = RSpec::rational(&[rat(1, 2)], &[]);
    let r = RSpec::rational(&[rat(2, 3)], &[rat(5, 7)]);
    let two = tau_two_sided(&rt, &r, 1, 3, &t, &b)?;
    let one = tau_series(&rt.product(&r)?, 1, 3, &t, &b)?;
    println!("two-sided == series of the product: {}", two == one);

    // one Miwa variable on the left, two single times on the right
    let chain = ChainSpec::new(
        vec![(RSpec::rational(&[rat(1, 2)], &[rat(7, 3)]), TimesSpec::MiwaPlus(vec![rat(2, 3)]))],
        vec![
            (RSpec::rational(&[rat(-2, 5)], &[rat(3, 4)]), TimesSpec::Single(Family::B)),
            (RSpec::one(), TimesSpec::Single(Family::T)),
        ],
    )?;
    let tau = tau_general(&chain, 1, 3)?;
    println!("\nτ in β1 and t1:\n{}", tau.as_poly().expect("formal"));
    Ok(())
}
