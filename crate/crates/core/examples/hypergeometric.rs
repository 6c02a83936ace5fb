//! pF_s and pΦ_s read off the tau-function, next to their term-ratio series.

use taukit::scalar::{rat, Scalar};
use taukit::schur::TimesSpec;
use taukit::tau::{classical_reference, pfs_coefficients, pfs_multivar, qphi_coefficients, qphi_multivar};

fn main() -> taukit::Result<()> {
    let (a, b) = (vec![rat(1, 2), rat(1, 3)], vec![rat(5, 7)]);
    let tau = pfs_coefficients(&a, &b, 0, 6)?;
    let direct = classical_reference(&a, &b, &Scalar::one(), 6, None)?;
    println!("2F1(1/2, 1/3; 5/7; x) coefficients");
    for (k, (c, d)) in tau.iter().zip(&direct).enumerate() {
        println!("  x^{k}: {c:<24} {d}");
    }

    // two variables
    let x = TimesSpec::MiwaPlus(vec![rat(1, 10), rat(1, 7)]);
    println!("2F1 at (1/10, 1/7), degree ≤ 6: {}", pfs_multivar(&a, &b, 0, &x, 6)?.as_value().expect("numeric"));

    // q^a must be rational, so a = 1/2 goes with q = 1/9
    let q = rat(1, 9);
    let (a, b) = (vec![rat(1, 2)], vec![rat(3, 2)]);
    println!("\n1Φ1(q^(1/2); q^(3/2); q, x) at q = 1/9: {:?}", qphi_coefficients(&a, &b, 0, &q, 4)?);
    println!("value at x = 2/7, degree ≤ 6: {}", qphi_multivar(&a, &b, 0, &q, &[rat(2, 7)], 6)?);
    Ok(())
}
