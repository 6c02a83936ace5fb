//! Askey-Wilson polynomials from a terminating tau-function.

use taukit::scalar::rat;
use taukit::tau::AskeyWilson;

fn main() -> taukit::Result<()> {
    let base =
        AskeyWilson { n: 0, a: rat(1, 5), b: rat(1, 7), c: rat(2, 7), d: rat(1, 11), q: rat(1, 3), cos_eta: rat(1, 2) };
    for n in 0..=4 {
        let p = AskeyWilson { n, ..base.clone() };
        println!("p_{n}(1/2) = {}   next term {}", p.value()?, p.tail_term(0)?);
    }

    // symmetric in a, b, c, d
    let p = AskeyWilson { n: 3, ..base.clone() };
    let mut swapped = p.clone();
    std::mem::swap(&mut swapped.a, &mut swapped.d);
    println!("a<->d: {} == {}", p.value()?, swapped.value()?);

    // a few points of p_2 on [-1, 1]
    for k in -2..=2 {
        let x = rat(k, 2);
        let p = AskeyWilson { n: 2, cos_eta: x.clone(), ..base.clone() };
        println!("p_2({x}) ≈ {:.6}", p.value()?.to_f64());
    }
    Ok(())
}
