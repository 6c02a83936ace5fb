use crate::error::Result;
use crate::rspec::RSpec;
use crate::scalar::Scalar;
use crate::schur::{SchurValue, TimesSpec};
use crate::tau::{pfs_coefficients, prop4_pair, prop4_pair_qb, q_rspec_from_values, qphi_coefficients_qa};

use super::report::CheckReport;

fn list(v: &[Scalar]) -> String {
    v.iter().map(Scalar::to_string).collect::<Vec<_>>().join(",")
}

/// `(∂_x - r(D)) F = 0` with `r(D) = ∏(D + a_k)/∏(D + b_k)`, `D = x∂_x`.
///
/// On coefficients: `(n+1) c_{n+1} = r(n) c_n` for `n = 0..order`.
pub fn check_ode(a: &[Scalar], b: &[Scalar], order: usize) -> Result<CheckReport> {
    let c = pfs_coefficients(a, b, 0, order + 1)?;
    let r = RSpec::rational(a, b);
    let mut rep = CheckReport::new("ode", order as i64).param("a", list(a)).param("b", list(b));
    for n in 0..=order {
        let lhs = Scalar::from_int(n as i64 + 1) * &c[n + 1];
        let rhs = r.r_eval(n as i64)? * &c[n];
        rep.compare_values(format!("x^{n}"), &lhs, &rhs);
    }
    Ok(rep)
}

/// `(x^{-1}(1 - q^D) - r^{(q)}(D)) Φ = 0` with exponents `a_k`, `b_k`.
pub fn check_qdiff(a: &[Scalar], b: &[Scalar], q: &Scalar, order: usize) -> Result<CheckReport> {
    let qa: Vec<Scalar> = a.iter().map(|x| q.rpow(x)).collect::<Result<_>>()?;
    let qb: Vec<Scalar> = b.iter().map(|x| q.rpow(x)).collect::<Result<_>>()?;
    let rep = check_qdiff_qa(&qa, &qb, q, order)?;
    Ok(rep.param("a", list(a)).param("b", list(b)))
}

/// [`check_qdiff`] with the bases `q^{a_k}`, `q^{b_k}` given as values.
///
/// On coefficients: `(1 - q^{n+1}) c_{n+1} = r(n) c_n`, plus the `x^{-1}`
/// term `(1 - q^0) c_0 = 0`.
pub fn check_qdiff_qa(qa: &[Scalar], qb: &[Scalar], q: &Scalar, order: usize) -> Result<CheckReport> {
    let c = qphi_coefficients_qa(qa, qb, 0, q, order + 1)?;
    let r = q_rspec_from_values(qa, qb, q)?;
    let mut rep = CheckReport::new("qdiff", order as i64).param("qa", list(qa)).param("qb", list(qb)).param("q", q);
    let one = Scalar::one();
    rep.compare_values("x^-1", &((&one - q.pow(0)?) * &c[0]), &Scalar::zero());
    for n in 0..=order {
        let lhs = (&one - q.pow(n as i64 + 1)?) * &c[n + 1];
        let rhs = r.r_eval(n as i64)? * &c[n];
        rep.compare_values(format!("x^{n}"), &lhs, &rhs);
    }
    Ok(rep)
}

fn compare_sides(rep: &mut CheckReport, lhs: &SchurValue, rhs: &SchurValue) {
    match (lhs, rhs) {
        (SchurValue::Poly(l), SchurValue::Poly(r)) => rep.compare_polys(l, r, l.cap().min(r.cap())),
        (SchurValue::Value(l), SchurValue::Value(r)) => rep.compare_values("value", l, r),
        _ => rep.fail("kind", Scalar::zero(), Scalar::one()),
    }
}

/// Both sides of the `b`-reparametrisation agree through grade `d`.
pub fn check_prop4(r: &RSpec, b: &Scalar, m: i64, d: usize, t: &TimesSpec) -> Result<CheckReport> {
    let (lhs, rhs) = prop4_pair(r, b, m, d, t)?;
    let mut rep =
        CheckReport::new("prop4", d as i64).param("rspec", r.to_json()).param("b", b).param("M", m).param("d", d);
    compare_sides(&mut rep, &lhs, &rhs);
    Ok(rep)
}

/// q variant of [`check_prop4`] with `q^b` given as a value.
pub fn check_prop4_qb(r: &RSpec, qb: &Scalar, m: i64, d: usize, t: &TimesSpec) -> Result<CheckReport> {
    let (lhs, rhs) = prop4_pair_qb(r, qb, m, d, t)?;
    let mut rep =
        CheckReport::new("prop4", d as i64).param("rspec", r.to_json()).param("qb", qb).param("M", m).param("d", d);
    compare_sides(&mut rep, &lhs, &rhs);
    Ok(rep)
}
