//! Determinant representation of the tau-function.
//!
//! `U = U⁺(t) U⁻(M, β)` with `U⁺ = exp(Σ t_n Λ^n)` and
//! `U⁻ = exp(Σ β_n L^n)`, `L = Λ^{-1} r(Δ + M)`, so `L_{k+1,k} = r(k + M)`.
//! Powers of `L` commute, hence `U⁻_{l+n,l} = p_n(β) ∏_{i=0}^{n-1} r(l + i + M)`
//! and `U⁺_{jk} = p_{k-j}(t)`. The tau-function is the determinant of the
//! block of `U` with indices in `[-W, 0]`.
//!
//! Entries are kept modulo terms of `t`-weight or `β`-weight above `d`. Both
//! weights only add under multiplication, so every kept coefficient is exact.

use std::collections::HashMap;

use crate::error::{Result, TauError};
use crate::poly::{Family, GradedPoly, Monomial};
use crate::rspec::RSpec;
use crate::scalar::Scalar;
use crate::schur::power_sums_basis;

use super::bilinear::generic_tau;
use super::report::CheckReport;

/// Determinant of the window `[-W, 0]`, its comparison with the series, and
/// whether it is unchanged at window `W + 1`.
#[derive(Clone, Debug)]
pub struct OracleResult {
    pub det: GradedPoly,
    pub stable: bool,
    pub report: CheckReport,
}

#[derive(Clone)]
struct Entry {
    // (t-weight, β-weight, monomial, coefficient)
    terms: Vec<(i64, i64, Monomial, Scalar)>,
}

impl Entry {
    fn from_poly(p: &GradedPoly, d: i64) -> Self {
        let mut terms: Vec<_> = p
            .terms()
            .map(|(m, c)| (m.weight_in(Family::T), m.weight_in(Family::B), m.clone(), c.clone()))
            .filter(|(tw, bw, _, _)| *tw <= d && *bw <= d)
            .collect();
        terms.sort_by_key(|t| t.0);
        Entry { terms }
    }

    fn from_map(map: HashMap<Monomial, Scalar>) -> Self {
        let mut terms: Vec<_> = map
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m.weight_in(Family::T), m.weight_in(Family::B), m, c))
            .collect();
        terms.sort_by_key(|t| t.0);
        Entry { terms }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn constant(&self) -> Scalar {
        self.terms.iter().find(|(_, _, m, _)| m.is_one()).map(|t| t.3.clone()).unwrap_or_else(Scalar::zero)
    }

    fn mul(&self, other: &Entry, d: i64) -> Entry {
        let mut acc: HashMap<Monomial, Scalar> = HashMap::new();
        for (tw1, bw1, m1, c1) in &self.terms {
            for (tw2, bw2, m2, c2) in &other.terms {
                if tw1 + tw2 > d {
                    break;
                }
                if bw1 + bw2 > d {
                    continue;
                }
                let c = c1 * c2;
                match acc.entry(m1.mul(m2)) {
                    std::collections::hash_map::Entry::Occupied(mut e) => *e.get_mut() += c,
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        Entry::from_map(acc)
    }

    fn sub_assign(&mut self, other: &Entry) {
        let mut acc: HashMap<Monomial, Scalar> = self.terms.drain(..).map(|(_, _, m, c)| (m, c)).collect();
        for (_, _, m, c) in &other.terms {
            *acc.entry(m.clone()).or_insert_with(Scalar::zero) -= c;
        }
        *self = Entry::from_map(acc);
    }

    fn scale(&self, c: &Scalar) -> Entry {
        Entry { terms: self.terms.iter().map(|(a, b, m, x)| (*a, *b, m.clone(), x * c)).collect() }
    }

    // 1/(c(1 + x)) = c^{-1} Σ (-x)^k; x has no constant term, so the sum is finite.
    fn inverse(&self, d: i64) -> Result<Entry> {
        let c0 = self.constant();
        let inv0 = c0
            .recip()
            .map_err(|_| TauError::ConstantTerm { expected: Box::new(Scalar::one()), found: Box::new(c0.clone()) })?;
        let mut x = self.scale(&inv0);
        x.terms.retain(|t| !t.2.is_one());
        let neg_x = x.scale(&-Scalar::one());
        let mut out: HashMap<Monomial, Scalar> = HashMap::new();
        let mut power = Entry { terms: vec![(0, 0, Monomial::one(), Scalar::one())] };
        while !power.is_zero() {
            for (_, _, m, c) in &power.terms {
                *out.entry(m.clone()).or_insert_with(Scalar::zero) += c;
            }
            power = power.mul(&neg_x, d);
        }
        Ok(Entry::from_map(out).scale(&inv0))
    }

    fn into_poly(self, cap: i64) -> GradedPoly {
        GradedPoly::from_terms(cap, self.terms.into_iter().map(|(_, _, m, c)| (m, c)))
    }
}

// elimination reads row i while writing row jr, so index loops are clearer here
#[allow(clippy::needless_range_loop)]
fn block_det(r: &RSpec, m: i64, d: usize, window: usize) -> Result<GradedPoly> {
    let di = d as i64;
    let w = window as i64;
    let pt = power_sums_basis(d, Family::T);
    let pb = power_sums_basis(d, Family::B);
    // rho[l][n] = ∏_{i=0}^{n-1} r(l + i + M) for l in [-W, 0]
    let mut ev = r.evaluator();
    let rho = |l: i64, n: i64, ev: &mut crate::rspec::REvaluator<'_>| -> Result<Scalar> {
        let mut acc = Scalar::one();
        for i in 0..n {
            acc *= ev.r(l + i + m)?;
        }
        Ok(acc)
    };
    let idx: Vec<i64> = (-w..=0).collect();
    let mut a: Vec<Vec<Entry>> = Vec::with_capacity(idx.len());
    for &j in &idx {
        let mut row = Vec::with_capacity(idx.len());
        for &l in &idx {
            let mut acc = GradedPoly::zero(2 * di);
            for k in j.max(l)..=(j + di).min(l + di) {
                let c = rho(l, k - l, &mut ev)?;
                if c.is_zero() {
                    continue;
                }
                let term = pt[(k - j) as usize].mul_to_cap(&pb[(k - l) as usize], 2 * di).scale(&c);
                acc = &acc + &term;
            }
            row.push(Entry::from_poly(&acc, di));
        }
        a.push(row);
    }
    let n = idx.len();
    let mut det = Entry { terms: vec![(0, 0, Monomial::one(), Scalar::one())] };
    for i in 0..n {
        let pivot = a[i][i].clone();
        let inv = pivot.inverse(di)?;
        for jr in i + 1..n {
            if a[jr][i].is_zero() {
                continue;
            }
            let f = a[jr][i].mul(&inv, di);
            for l in i + 1..n {
                if a[i][l].is_zero() {
                    continue;
                }
                let prod = f.mul(&a[i][l], di);
                a[jr][l].sub_assign(&prod);
            }
        }
        det = det.mul(&pivot, di);
    }
    Ok(det.into_poly(2 * di))
}

fn within(p: &GradedPoly, d: i64) -> GradedPoly {
    GradedPoly::from_terms(
        p.cap(),
        p.terms()
            .filter(|(m, _)| m.weight_in(Family::T) <= d && m.weight_in(Family::B) <= d)
            .map(|(m, c)| (m.clone(), c.clone())),
    )
}

/// Builds the determinant at window `W = window` and compares it with the
/// Schur series through diagonal grade `d`. Also recomputes at `W + 1`.
pub fn det_oracle_tau(r: &RSpec, m: i64, d: usize, window: usize) -> Result<OracleResult> {
    if window < d {
        return Err(TauError::InvalidParams(format!("window {window} is smaller than grade {d}")));
    }
    let di = d as i64;
    let det = block_det(r, m, d, window)?;
    let wider = block_det(r, m, d, window + 1)?;
    let stable = det == wider;
    let tau = within(&generic_tau(r, m, d)?, di);
    let mut report = CheckReport::new("oracle", di)
        .param("rspec", r.to_json())
        .param("M", m)
        .param("d", d)
        .param("window", window)
        .param("stable", stable);
    report.compare_polys(&det, &tau, 2 * di);
    if !stable {
        if let Some((mono, a, b)) = det.first_difference(&wider, 2 * di) {
            report.fail(format!("window {window} vs {}: {mono}", window + 1), a, b);
        }
    }
    Ok(OracleResult { det, stable, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn beta_zero_gives_one() {
        // setting β = 0 leaves the unipotent U⁺ block, whose determinant is 1
        let r = RSpec::rational(&[rat(1, 2)], &[rat(1, 3)]);
        let det = block_det(&r, 0, 3, 3).unwrap();
        let at_zero: Vec<_> = det.terms().filter(|(m, _)| m.weight_in(Family::B) == 0).collect();
        assert_eq!(at_zero.len(), 1);
        assert!(det.constant_term().is_one());
    }

    #[test]
    fn matches_series_small() {
        let r = RSpec::rational(&[Scalar::zero()], &[]);
        let out = det_oracle_tau(&r, 1, 3, 3).unwrap();
        assert!(out.report.pass, "{:?}", out.report);
        let r = RSpec::rational(&[rat(1, 2)], &[rat(1, 3)]);
        let out = det_oracle_tau(&r, 0, 4, 6).unwrap();
        assert!(out.report.pass && out.stable);
    }

    #[test]
    fn too_small_window_rejected() {
        assert!(det_oracle_tau(&RSpec::one(), 0, 4, 2).is_err());
    }
}
