//! Partitions, hook lengths and Schur functions in several specialisations.

use taukit::partitions::{partitions_of, Partition};
use taukit::poly::Family;
use taukit::scalar::rat;
use taukit::schur::{schur_poly, schur_principal_value, TimesSpec};

fn main() -> taukit::Result<()> {
    let lam = Partition::new(vec![3, 1])?;
    println!("λ = {lam}, conjugate {}, contents {:?}", lam.conjugate(), lam.contents());
    println!("hooks {:?}, H_λ = {}", lam.hook_lengths(), lam.hook_product());

    // quasi-homogeneous polynomial in t_1, t_2, …
    let s = schur_poly(&lam, &TimesSpec::Generic(Family::T), 4)?;
    println!("s_λ(t) = {}", s.as_poly().expect("formal"));

    // three Miwa variables; a fourth row would make it vanish
    let x = vec![rat(1, 2), rat(1, 3), rat(1, 5)];
    for mu in partitions_of(4) {
        let v = schur_poly(&mu, &TimesSpec::MiwaPlus(x.clone()), 4)?;
        println!("s_{mu}(1/2, 1/3, 1/5) = {}", v.as_value().expect("numeric"));
    }

    let a = rat(5, 2);
    let direct = schur_poly(&lam, &TimesSpec::PrincipalRational(a.clone()), 4)?;
    println!("s_λ(t(a)) = {} = {}", direct.as_value().expect("numeric"), schur_principal_value(&lam, &a, None)?);
    Ok(())
}
