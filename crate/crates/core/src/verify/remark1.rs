//! Two ways to restrict the sum to partitions of bounded length.

use crate::error::{Result, TauError};
use crate::partitions::enumerate_up_to;
use crate::rspec::{RFactor, RSpec};
use crate::scalar::Scalar;
use crate::schur::{check_q, schur_poly, TimesSpec};

use super::report::CheckReport;

#[derive(Clone, Debug, PartialEq)]
pub enum Remark1Mode {
    /// A factor `1 - q^{N+D}` in `r`: `r_λ(0) = 0` exactly when `l(λ) > N`,
    /// and likewise `s_λ(t(N, q)) = 0`.
    QSpec { n: usize, q: Scalar },
    /// `t_m = Σ_{i ≤ N} x_i^m / m`: `s_λ = 0` exactly when `l(λ) > N`.
    Miwa { x: Vec<Scalar> },
    /// `a_j = -K` and the dual Miwa change with `K` variables: vanishing
    /// exactly when `λ_1 = l(λ') > K`.
    Dual { k: usize, q: Scalar },
}

impl Remark1Mode {
    pub fn name(&self) -> &'static str {
        match self {
            Remark1Mode::QSpec { .. } => "q-spec",
            Remark1Mode::Miwa { .. } => "miwa",
            Remark1Mode::Dual { .. } => "dual",
        }
    }
}

/// Distinct positive sample points `1/2, 1/3, …` for the Miwa modes.
fn sample_points(n: usize) -> Vec<Scalar> {
    (0..n).map(|i| Scalar::new(1, i as i64 + 2)).collect()
}

/// Checks the vanishing pattern over all partitions of weight ≤ `d`.
pub fn check_remark1(mode: &Remark1Mode, d: usize) -> Result<CheckReport> {
    let mut rep = CheckReport::new("remark1", d as i64).param("mode", mode.name());
    let zero = Scalar::zero();
    match mode {
        Remark1Mode::QSpec { n, q } => {
            check_q(q, (d + n) as i64)?;
            rep = rep.param("N", n).param("q", q);
            let r =
                RSpec::new(Scalar::one(), vec![RFactor::qlin(Scalar::from_int(*n as i64))], vec![], Some(q.clone()))?;
            let times = TimesSpec::principal_q(&Scalar::from_int(*n as i64), q)?;
            for lam in enumerate_up_to(d) {
                let expect_zero = lam.len() > *n;
                let c = r.content_product(&lam, 0)?;
                let s = schur_poly(&lam, &times, d)?;
                let s = s.as_value().expect("numeric");
                if c.is_zero() != expect_zero {
                    rep.fail(format!("r_{lam}(0)"), c, zero.clone());
                }
                if s.is_zero() != expect_zero {
                    rep.fail(format!("s_{lam}(t(N,q))"), s.clone(), zero.clone());
                }
            }
        }
        Remark1Mode::Miwa { x } => {
            if x.is_empty() || x.iter().any(|v| v.is_zero()) {
                return Err(TauError::InvalidParams("Miwa mode needs nonzero variables".into()));
            }
            rep = rep.param("N", x.len());
            let times = TimesSpec::MiwaPlus(x.clone());
            for lam in enumerate_up_to(d) {
                let expect_zero = lam.len() > x.len();
                let s = schur_poly(&lam, &times, d)?;
                let s = s.as_value().expect("numeric");
                if s.is_zero() != expect_zero {
                    rep.fail(format!("s_{lam}(x)"), s.clone(), zero.clone());
                }
            }
        }
        Remark1Mode::Dual { k, q } => {
            check_q(q, (d + k) as i64)?;
            rep = rep.param("K", k).param("q", q);
            let kk = Scalar::from_int(-(*k as i64));
            let r = RSpec::new(Scalar::one(), vec![RFactor::qlin(kk.clone())], vec![], Some(q.clone()))?;
            let principal = TimesSpec::principal_q(&kk, q)?;
            // t(-K, q) is the dual Miwa change at x_i = q^{-i}
            let q_inv: Vec<Scalar> = (1..=*k as i64).map(|i| q.pow(-i)).collect::<Result<_>>()?;
            let dual_q = TimesSpec::MiwaMinus(q_inv.clone());
            let dual = TimesSpec::MiwaMinus(sample_points(*k));
            for lam in enumerate_up_to(d) {
                let expect_zero = lam.part(1) > *k;
                let c = r.content_product(&lam, 0)?;
                if c.is_zero() != expect_zero {
                    rep.fail(format!("r_{lam}(0)"), c, zero.clone());
                }
                let sp = schur_poly(&lam, &principal, d)?.as_value().expect("numeric").clone();
                if sp.is_zero() != expect_zero {
                    rep.fail(format!("s_{lam}(t(-K,q))"), sp.clone(), zero.clone());
                }
                let sq = schur_poly(&lam, &dual_q, d)?.as_value().expect("numeric").clone();
                if sq != sp {
                    rep.fail(format!("s_{lam}(t(-K,q)) vs dual Miwa at q^-i"), sp.clone(), sq);
                }
                // s_λ(-x) = (-1)^{|λ|} s_{λ'}(x)
                let conj = lam.conjugate();
                let sd = schur_poly(&lam, &dual, d)?.as_value().expect("numeric").clone();
                let mut sc =
                    schur_poly(&conj, &TimesSpec::MiwaPlus(sample_points(*k)), d)?.as_value().expect("numeric").clone();
                if lam.weight() % 2 == 1 {
                    sc = -sc;
                }
                if sd != sc {
                    rep.fail(format!("s_{lam}(-x) vs s_{conj}(x)"), sd.clone(), sc);
                }
                if sd.is_zero() != expect_zero {
                    rep.fail(format!("s_{lam}(-x)"), sd, zero.clone());
                }
            }
        }
    }
    Ok(rep)
}
