//! q-Clebsch-Gordan coefficients and q-numbers.

use taukit::scalar::{rat, Scalar};
use taukit::tau::{cg_phi, clebsch_gordan_q, q_bracket, Spins};

fn main() -> taukit::Result<()> {
    let q = rat(1, 2);
    let half =
        |a: i64, b: i64, c: i64, d: i64, e: i64| Spins::new(rat(a, 2), rat(b, 2), rat(c, 2), rat(d, 2), rat(e, 2));
    for sp in [half(1, 1, 2, 1, 1), half(2, 2, 2, 0, 0), half(3, 1, 2, 1, 1), half(4, 2, 4, 2, 0)] {
        let c = clebsch_gordan_q(&sp, &q)?;
        println!(
            "l1={} l2={} l={} j={} k={}: 3Φ2 = {}, C = {} · q^({}) · √{} ≈ {:.6}",
            sp.l1,
            sp.l2,
            sp.l,
            sp.j,
            sp.k,
            cg_phi(&sp, &q)?,
            c.rational,
            c.q_exponent,
            c.radicand,
            c.to_f64()
        );
    }

    println!("\n[3] as q -> 1");
    for k in [1, 2, 4, 8, 12] {
        let qk = Scalar::one() - rat(1, 1 << k);
        println!("  q = 1 - 2^-{k:<2}: {:.9}", q_bracket(3, &qk)?.to_f64());
    }
    Ok(())
}
