use crate::error::{Result, TauError};
use crate::poly::{hirota_d, Family, GradedPoly, VarId};
use crate::rspec::{h_from_r, RSpec, ZeroPole};
use crate::scalar::Scalar;
use crate::schur::TimesSpec;
use crate::tau::tau_series;

use super::report::CheckReport;

/// `τ_r(M, t, β)` with both sides formal; exact through total weight `2d`.
pub(crate) fn generic_tau(r: &RSpec, m: i64, d: usize) -> Result<GradedPoly> {
    let v = tau_series(r, m, d, &TimesSpec::Generic(Family::T), &TimesSpec::Generic(Family::B))?;
    Ok(v.as_poly().expect("formal times give a polynomial").clone())
}

fn base_report(name: &str, r: &RSpec, m: i64, d: usize, grade: i64) -> CheckReport {
    CheckReport::new(name, grade).param("rspec", r.to_json()).param("M", m).param("d", d)
}

/// `τ(M) ∂_{β1}∂_{t1} τ(M) - ∂_{t1}τ(M) ∂_{β1}τ(M) = r(M) τ(M-1) τ(M+1)`.
///
/// Both derivatives lower the cap by one, so the left side is exact through
/// total weight `2d - 2`: diagonal degree `d - 1`.
pub fn check_hirota(r: &RSpec, m: i64, d: usize) -> Result<CheckReport> {
    let (t1, b1) = (VarId::t(1), VarId::b(1));
    let tau = generic_tau(r, m, d)?;
    let minus = generic_tau(r, m - 1, d)?;
    let plus = generic_tau(r, m + 1, d)?;
    let dt = tau.derivative(t1);
    let db = tau.derivative(b1);
    let dtb = dt.derivative(b1);
    let lhs = &(&tau * &dtb) - &(&dt * &db);
    let rhs = (&minus * &plus).scale(&r.r_eval(m)?);
    let cap = lhs.cap().min(rhs.cap());
    let mut rep = base_report("hirota", r, m, d, cap / 2);
    rep.compare_polys(&lhs, &rhs, cap);
    Ok(rep)
}

/// Which form of the Toda equation to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gauge {
    /// `∂_{t1}∂_{β1}φ_n = r(n) e^{φ_{n-1}-φ_n} - r(n+1) e^{φ_n-φ_{n+1}}`.
    Generalized,
    /// `∂_{t1}∂_{β1}φ̃_n = e^{φ̃_{n+1}-φ̃_n} - e^{φ̃_n-φ̃_{n-1}}` with `φ̃_n = -φ_n - log h(n)`.
    Standard,
}

/// Toda lattice at site `n = M`, with `e^{-φ_k} = τ(k+1)/τ(k)`.
pub fn check_toda(r: &RSpec, m: i64, d: usize, gauge: Gauge) -> Result<CheckReport> {
    let (t1, b1) = (VarId::t(1), VarId::b(1));
    if gauge == Gauge::Standard {
        // h(n) is only defined on all of Z when r has no integer zero
        if let Some((n, _)) = r.integer_points()?.into_iter().find(|(_, k)| *k == ZeroPole::Zero) {
            return Err(TauError::Zero { point: n });
        }
    }
    let logs: Vec<GradedPoly> = (m - 1..=m + 2).map(|k| generic_tau(r, k, d)?.log()).collect::<Result<_>>()?;
    // φ_k = log τ(k) - log τ(k+1), for k = M-1, M, M+1
    let phi: Vec<GradedPoly> = (0..3).map(|i| &logs[i] - &logs[i + 1]).collect();
    let lhs = phi[1].derivative(t1).derivative(b1);
    let down = (&phi[0] - &phi[1]).exp()?;
    let up = (&phi[1] - &phi[2]).exp()?;
    let (name, lhs, rhs) = match gauge {
        Gauge::Generalized => {
            let rhs = &down.scale(&r.r_eval(m)?) - &up.scale(&r.r_eval(m + 1)?);
            ("toda", lhs, rhs)
        }
        Gauge::Standard => {
            // e^{φ̃_{n+1}-φ̃_n} = e^{φ_n-φ_{n+1}} h(n)/h(n+1), e^{φ̃_n-φ̃_{n-1}} = e^{φ_{n-1}-φ_n} h(n-1)/h(n)
            let h = h_from_r(r, m - 1, m + 1)?;
            let up_ratio = h.get(m)? / h.get(m + 1)?;
            let down_ratio = h.get(m - 1)? / h.get(m)?;
            let rhs = &up.scale(&up_ratio) - &down.scale(&down_ratio);
            ("toda-standard", -&lhs, rhs)
        }
    };
    let cap = lhs.cap().min(rhs.cap());
    let mut rep = base_report(name, r, m, d, cap / 2);
    rep.compare_polys(&lhs, &rhs, cap);
    Ok(rep)
}

/// `(D_1^4 + 3 D_2^2 - 4 D_1 D_3) τ·τ = 0` in the `t` times, `β` as spectators.
///
/// A coefficient of `β`-weight `w` only sees terms of `τ` of weight ≤ `w`,
/// so everything with `β`-weight ≤ `d` is exact.
pub fn check_kp_bilinear(r: &RSpec, m: i64, d: usize) -> Result<CheckReport> {
    let tau = generic_tau(r, m, d)?;
    let (t1, t2, t3) = (VarId::t(1), VarId::t(2), VarId::t(3));
    let a = hirota_d(&tau, &tau, &[(t1, 4)]);
    let b = hirota_d(&tau, &tau, &[(t2, 2)]).scale(&Scalar::from_int(3));
    let c = hirota_d(&tau, &tau, &[(t1, 1), (t3, 1)]).scale(&Scalar::from_int(4));
    let kp = &(&a + &b) - &c;
    // every term has t-weight = β-weight - 4, so cap 2d - 4 is β-weight ≤ d
    let mut rep = base_report("kp", r, m, d, d as i64);
    rep.compare_polys(&kp, &GradedPoly::zero(kp.cap()), kp.cap());
    Ok(rep)
}
