//! The series Σ r_λ(M) s_λ(t) s_λ(β): coefficients, then the polynomial.

use taukit::partitions::Partition;
use taukit::poly::Family;
use taukit::rspec::RSpec;
use taukit::scalar::rat;
use taukit::schur::TimesSpec;
use taukit::tau::TauExpansion;

fn main() -> taukit::Result<()> {
    let r = RSpec::from_json(r#"{"constant":"2","num":[{"lin":{"shift":"1/2"}}],"den":[{"lin":{"shift":"1/3"}}]}"#)?;
    let e = TauExpansion::new(&r, 1, 3);
    for (lam, c) in e.coeffs()? {
        println!("r_{lam}(1) = {c}");
    }

    let tau = e.evaluate(&TimesSpec::Generic(Family::T), &TimesSpec::Single(Family::B))?;
    println!("\nτ(1, t, β1) through grade 3:\n{}", tau.as_poly().expect("formal"));

    // fully numeric times give a partial sum
    let x = TimesSpec::MiwaPlus(vec![rat(1, 4), rat(1, 5)]);
    let v = e.evaluate(&x, &TimesSpec::PrincipalInfinity)?;
    println!("\nτ at x = (1/4, 1/5), β = (1, 0, …): {}", v.as_value().expect("numeric"));

    // a pole of r on a content is only reported when that partition is needed
    let pole = RSpec::rational(&[], &[rat(-2, 1)]);
    let e = TauExpansion::new(&pole, 0, 3);
    println!(
        "\nr = 1/(D-2): r_[2] = {}, r_[3] -> {:?}",
        e.coeff(&Partition::new(vec![2])?)?,
        e.coeff(&Partition::new(vec![3])?)
    );
    Ok(())
}
