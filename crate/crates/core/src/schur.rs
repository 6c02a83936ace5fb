//! Schur and skew Schur functions in KP times.
//!
//! Everything goes through Jacobi–Trudi determinants of the complete
//! polynomials `p_m(t)` defined by `Σ p_m z^m = exp(Σ t_k z^k)`. The times
//! can be formal ([`TimesSpec::Generic`]) or specialised: explicit values,
//! Miwa variables, or principal specialisations.

use std::collections::BTreeMap;

use crate::error::{Result, TauError};
use crate::partitions::{Partition, SkewShape};
use crate::poly::{Family, GradedPoly, Monomial, VarId};
use crate::scalar::Scalar;

/// How the times `t = (t_1, t_2, …)` are chosen.
#[derive(Clone, Debug, PartialEq)]
pub enum TimesSpec {
    /// All times are formal variables of the family.
    Generic(Family),
    /// `(v_1, 0, 0, …)` with `v_1` formal.
    Single(Family),
    /// One Miwa variable kept formal: `t_m = v^m / m`, stored as `v = v_1`.
    MiwaFormal(Family),
    /// Explicit `t_1, t_2, …`; missing entries are zero.
    Numeric(Vec<Scalar>),
    /// `t_m = Σ x_i^m / m`.
    MiwaPlus(Vec<Scalar>),
    /// `t_m = -Σ x_i^m / m`.
    MiwaMinus(Vec<Scalar>),
    /// `t_m = (1 - qa^m) / (m (1 - q^m))` where `qa` stands for `q^a`.
    PrincipalQ { qa: Scalar, q: Scalar },
    /// `t_m = a / m`.
    PrincipalRational(Scalar),
    /// Limit `a → ∞` of the rescaled rational principal times; `s_λ = 1/H_λ`.
    PrincipalInfinity,
    /// Limit `q^a → 0` of the q-principal times; `s_λ = q^{n(λ)}/H_λ(q)`.
    PrincipalInfinityQ(Scalar),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MiwaSign {
    Plus,
    Minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrincipalKind {
    Q,
    Rational,
    Infinity,
    InfinityQ,
}

impl TimesSpec {
    pub fn is_formal(&self) -> bool {
        matches!(self, TimesSpec::Generic(_) | TimesSpec::Single(_) | TimesSpec::MiwaFormal(_))
    }

    pub fn family(&self) -> Option<Family> {
        match self {
            TimesSpec::Generic(f) | TimesSpec::Single(f) | TimesSpec::MiwaFormal(f) => Some(*f),
            _ => None,
        }
    }

    /// `q^a`-form principal times from an exponent `a`; needs `q^a` rational.
    pub fn principal_q(a: &Scalar, q: &Scalar) -> Result<TimesSpec> {
        Ok(TimesSpec::PrincipalQ { qa: q.rpow(a)?, q: q.clone() })
    }

    /// `t_1, …, t_d` for the non-formal kinds.
    pub fn values(&self, d: usize) -> Result<Vec<Scalar>> {
        let m_range = 1..=d as i64;
        Ok(match self {
            TimesSpec::Generic(_) | TimesSpec::Single(_) | TimesSpec::MiwaFormal(_) => {
                return Err(TauError::InvalidParams("formal times have no values".into()))
            }
            TimesSpec::Numeric(v) => (0..d).map(|i| v.get(i).cloned().unwrap_or_else(Scalar::zero)).collect(),
            TimesSpec::MiwaPlus(x) => miwa_values(x, 1, d),
            TimesSpec::MiwaMinus(x) => miwa_values(x, -1, d),
            TimesSpec::PrincipalQ { qa, q } => {
                check_q(q, d as i64)?;
                m_range
                    .map(|m| {
                        let num = Scalar::one() - qa.pow(m)?;
                        let den = Scalar::from_int(m) * (Scalar::one() - q.pow(m)?);
                        Ok(num / den)
                    })
                    .collect::<Result<_>>()?
            }
            TimesSpec::PrincipalRational(a) => m_range.map(|m| a / &Scalar::from_int(m)).collect(),
            TimesSpec::PrincipalInfinity => {
                let mut v = vec![Scalar::zero(); d];
                if d > 0 {
                    v[0] = Scalar::one();
                }
                v
            }
            TimesSpec::PrincipalInfinityQ(q) => {
                return TimesSpec::PrincipalQ { qa: Scalar::zero(), q: q.clone() }.values(d)
            }
        })
    }
}

fn miwa_values(x: &[Scalar], sign: i64, d: usize) -> Vec<Scalar> {
    (1..=d as i64)
        .map(|m| {
            let s: Scalar = x.iter().map(|xi| xi.pow(m).expect("positive exponent")).sum();
            s * Scalar::new(sign, m)
        })
        .collect()
}

/// Rejects `q = 0` and `q` with `q^m = 1` for some `1 ≤ m ≤ d`.
pub fn check_q(q: &Scalar, d: i64) -> Result<()> {
    if q.is_zero() {
        return Err(TauError::InvalidParams("q must be nonzero".into()));
    }
    for m in 1..=d.max(1) {
        if q.pow(m)?.is_one() {
            return Err(TauError::RootOfUnity { q: Box::new(q.clone()), order: m });
        }
    }
    Ok(())
}

/// Numeric times for a Miwa substitution, `m = 1..=d`.
pub fn miwa_times(x: &[Scalar], sign: MiwaSign, d: usize) -> TimesSpec {
    let s = match sign {
        MiwaSign::Plus => 1,
        MiwaSign::Minus => -1,
    };
    TimesSpec::Numeric(miwa_values(x, s, d))
}

/// Principal times. `PrincipalKind::Q` needs `q` and a rational `q^a`.
pub fn principal_times(kind: PrincipalKind, a: &Scalar, q: Option<&Scalar>, d: usize) -> Result<TimesSpec> {
    let need_q = || q.cloned().ok_or_else(|| TauError::InvalidParams("q required".into()));
    match kind {
        PrincipalKind::Q => {
            let q = need_q()?;
            check_q(&q, d as i64)?;
            TimesSpec::principal_q(a, &q)
        }
        PrincipalKind::Rational => Ok(TimesSpec::PrincipalRational(a.clone())),
        PrincipalKind::Infinity => Ok(TimesSpec::PrincipalInfinity),
        PrincipalKind::InfinityQ => {
            let q = need_q()?;
            check_q(&q, d as i64)?;
            Ok(TimesSpec::PrincipalInfinityQ(q))
        }
    }
}

/// A Schur value: a polynomial for formal times, a number otherwise.
#[derive(Clone, Debug, PartialEq)]
pub enum SchurValue {
    Poly(GradedPoly),
    Value(Scalar),
}

impl SchurValue {
    pub fn as_value(&self) -> Option<&Scalar> {
        match self {
            SchurValue::Value(v) => Some(v),
            SchurValue::Poly(_) => None,
        }
    }

    pub fn as_poly(&self) -> Option<&GradedPoly> {
        match self {
            SchurValue::Poly(p) => Some(p),
            SchurValue::Value(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            SchurValue::Poly(p) => p.is_zero(),
            SchurValue::Value(v) => v.is_zero(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> SchurValue {
        match self {
            SchurValue::Poly(p) => SchurValue::Poly(p.scale(c)),
            SchurValue::Value(v) => SchurValue::Value(v * c),
        }
    }
}

/// `p_0, …, p_d` as polynomials in the times of `family`, capped at `d`.
pub fn power_sums_basis(d: usize, family: Family) -> Vec<GradedPoly> {
    let cap = d as i64;
    let mut p = vec![GradedPoly::one(cap)];
    // m p_m = Σ_{k=1..m} k t_k p_{m-k}
    for m in 1..=d {
        let mut acc = GradedPoly::zero(cap);
        for k in 1..=m {
            let tk = GradedPoly::var(VarId::new(family, k as u32), cap).scale(&Scalar::from_int(k as i64));
            acc = &acc + &tk.mul_to_cap(&p[m - k], cap);
        }
        p.push(acc.scale(&Scalar::new(1, m as i64)));
    }
    p
}

/// `p_0, …, p_d` at numeric times.
pub fn power_sums_numeric(times: &[Scalar], d: usize) -> Vec<Scalar> {
    let mut p = vec![Scalar::one()];
    for m in 1..=d {
        let mut acc = Scalar::zero();
        for k in 1..=m {
            if let Some(tk) = times.get(k - 1) {
                if !tk.is_zero() {
                    acc += Scalar::from_int(k as i64) * tk * &p[m - k];
                }
            }
        }
        p.push(acc * Scalar::new(1, m as i64));
    }
    p
}

/// Minimal ring interface for the subset-expansion determinant.
pub(crate) trait DetEntry: Clone {
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
}

impl DetEntry for Scalar {
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

impl DetEntry for GradedPoly {
    fn is_zero(&self) -> bool {
        GradedPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

/// Determinant by row-wise expansion over used-column subsets; works in any
/// commutative ring and costs `O(2^n n)` products.
pub(crate) fn subset_det<T: DetEntry>(m: &[Vec<T>], zero: &T, one: &T) -> T {
    let n = m.len();
    if n == 0 {
        return one.clone();
    }
    assert!(n < 26, "matrix too large for subset expansion");
    let mut layer: BTreeMap<u32, T> = BTreeMap::new();
    layer.insert(0, one.clone());
    for row in m.iter() {
        let mut next: BTreeMap<u32, T> = BTreeMap::new();
        for (&mask, val) in &layer {
            for (c, entry) in row.iter().enumerate() {
                if mask & (1 << c) != 0 || entry.is_zero() {
                    continue;
                }
                let higher = (mask >> (c + 1)).count_ones();
                let prod = val.mul(entry);
                let slot = next.entry(mask | (1 << c)).or_insert_with(|| zero.clone());
                *slot = if higher % 2 == 1 { slot.sub(&prod) } else { slot.add(&prod) };
            }
        }
        layer = next;
    }
    layer.remove(&((1u32 << n) - 1)).unwrap_or_else(|| zero.clone())
}

/// Jacobi–Trudi matrix indices `λ_ρ - μ_ν - ρ + ν` for `outer / inner`.
fn jt_indices(outer: &Partition, inner: &Partition) -> Vec<Vec<i64>> {
    let l = outer.len();
    (1..=l)
        .map(|r| (1..=l).map(|c| outer.part(r) as i64 - inner.part(c) as i64 - r as i64 + c as i64).collect())
        .collect()
}

fn jt_numeric(outer: &Partition, inner: &Partition, times: &[Scalar]) -> Scalar {
    let w = outer.weight() - inner.weight();
    let p = power_sums_numeric(times, w);
    let mat: Vec<Vec<Scalar>> = jt_indices(outer, inner)
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|k| if k < 0 || k as usize > w { Scalar::zero() } else { p[k as usize].clone() })
                .collect()
        })
        .collect();
    subset_det(&mat, &Scalar::zero(), &Scalar::one())
}

fn jt_formal(outer: &Partition, inner: &Partition, family: Family, cap: i64) -> GradedPoly {
    let w = outer.weight() - inner.weight();
    let p = power_sums_basis(w, family);
    let zero = GradedPoly::zero(cap);
    let mat: Vec<Vec<GradedPoly>> = jt_indices(outer, inner)
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|k| if k < 0 || k as usize > w { zero.clone() } else { p[k as usize].clone() })
                .collect()
        })
        .collect();
    // s_{λ/μ} is homogeneous of weight |λ/μ|, so the full polynomial is exact at any cap.
    subset_det(&mat, &GradedPoly::zero(w as i64), &GradedPoly::one(w as i64)).with_cap_unchecked(cap)
}

// Both one-variable kinds are `t_m = c_m v^m`; s_λ is then `s_λ(c) v^{|λ|}`.
fn ray_direction(times: &TimesSpec, w: usize) -> Vec<Scalar> {
    match times {
        TimesSpec::MiwaFormal(_) => miwa_values(&[Scalar::one()], 1, w),
        _ => vec![Scalar::one()],
    }
}

fn single_formal(coef: Scalar, weight: usize, family: Family, cap: i64) -> GradedPoly {
    let m = Monomial::from_pairs([(VarId::new(family, 1), weight as u32)]);
    GradedPoly::from_terms(cap, [(m, coef)])
}

/// `s_λ` at the given times. For formal times the polynomial is capped at `d`.
pub fn schur_poly(lambda: &Partition, times: &TimesSpec, d: usize) -> Result<SchurValue> {
    match times {
        TimesSpec::Generic(f) => {
            if lambda.weight() > d {
                return Err(TauError::InvalidParams(format!("|{lambda}| exceeds grade {d}")));
            }
            Ok(SchurValue::Poly(jt_formal(lambda, &Partition::empty(), *f, d as i64)))
        }
        TimesSpec::Single(f) | TimesSpec::MiwaFormal(f) => {
            let c = jt_numeric(lambda, &Partition::empty(), &ray_direction(times, lambda.weight()));
            Ok(SchurValue::Poly(single_formal(c, lambda.weight(), *f, d as i64)))
        }
        TimesSpec::PrincipalInfinity => Ok(SchurValue::Value(lambda.hook_product().recip()?)),
        TimesSpec::PrincipalInfinityQ(q) => {
            check_q(q, lambda.weight() as i64)?;
            let num = q.pow(lambda.n_stat() as i64)?;
            Ok(SchurValue::Value(num / lambda.q_hook_product(q)))
        }
        _ => {
            let t = times.values(lambda.weight())?;
            Ok(SchurValue::Value(jt_numeric(lambda, &Partition::empty(), &t)))
        }
    }
}

/// `s_{λ/μ}` by the skew Jacobi–Trudi determinant.
pub fn skew_schur_poly(shape: &SkewShape, times: &TimesSpec, d: usize) -> Result<SchurValue> {
    let (outer, inner) = (shape.outer(), shape.inner());
    match times {
        TimesSpec::Generic(f) => {
            if shape.weight() > d {
                return Err(TauError::InvalidParams(format!("|{outer}/{inner}| exceeds grade {d}")));
            }
            Ok(SchurValue::Poly(jt_formal(outer, inner, *f, d as i64)))
        }
        TimesSpec::Single(f) | TimesSpec::MiwaFormal(f) => {
            let c = jt_numeric(outer, inner, &ray_direction(times, shape.weight()));
            Ok(SchurValue::Poly(single_formal(c, shape.weight(), *f, d as i64)))
        }
        _ => {
            let t = times.values(shape.weight())?;
            Ok(SchurValue::Value(jt_numeric(outer, inner, &t)))
        }
    }
}

/// Closed product form of `s_λ` at principal times.
///
/// With `q`: `∏_{cells} (1 - q^{a+j-i}) · q^{n(λ)} / H_λ(q)`;
/// without: `∏_{cells} (a + j - i) / H_λ`.
pub fn schur_principal_value(lambda: &Partition, a: &Scalar, q: Option<&Scalar>) -> Result<Scalar> {
    match q {
        Some(q) => schur_principal_value_qa(lambda, &q.rpow(a)?, q),
        None => {
            let num: Scalar = lambda.contents().into_iter().map(|c| a + &Scalar::from_int(c)).product();
            Ok(num / lambda.hook_product())
        }
    }
}

/// q-form of [`schur_principal_value`] with `qa = q^a` given directly.
pub fn schur_principal_value_qa(lambda: &Partition, qa: &Scalar, q: &Scalar) -> Result<Scalar> {
    check_q(q, lambda.weight() as i64)?;
    let mut num = Scalar::one();
    for c in lambda.contents() {
        num *= Scalar::one() - qa * &q.pow(c)?;
    }
    let hook = lambda.q_hook_product(q);
    Ok(num * q.pow(lambda.n_stat() as i64)? / hook)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_up_to;
    use crate::scalar::rat;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn tpoly(terms: &[(&[(u32, u32)], Scalar)], cap: i64) -> GradedPoly {
        GradedPoly::from_terms(
            cap,
            terms.iter().map(|(m, c)| (Monomial::from_pairs(m.iter().map(|&(i, e)| (VarId::t(i), e))), c.clone())),
        )
    }

    #[test]
    fn complete_polynomials() {
        let ps = power_sums_basis(3, Family::T);
        assert_eq!(ps[1], tpoly(&[(&[(1, 1)], Scalar::one())], 3));
        // oracle: expand exp(t1 z + t2 z^2 + t3 z^3) by hand to order 3
        assert_eq!(ps[2], tpoly(&[(&[(1, 2)], rat(1, 2)), (&[(2, 1)], Scalar::one())], 3));
        assert_eq!(
            ps[3],
            tpoly(&[(&[(1, 3)], rat(1, 6)), (&[(1, 1), (2, 1)], Scalar::one()), (&[(3, 1)], Scalar::one())], 3)
        );
    }

    #[test]
    fn small_schur_functions() {
        let g = TimesSpec::Generic(Family::T);
        let s1 = schur_poly(&p(&[1]), &g, 3).unwrap();
        assert_eq!(s1.as_poly().unwrap(), &tpoly(&[(&[(1, 1)], Scalar::one())], 3));
        // det [[p1, p2], [1, p1]] = p1^2 - p2 = t1^2/2 - t2
        let s11 = schur_poly(&p(&[1, 1]), &g, 3).unwrap();
        assert_eq!(s11.as_poly().unwrap(), &tpoly(&[(&[(1, 2)], rat(1, 2)), (&[(2, 1)], Scalar::from_int(-1))], 3));
        assert_eq!(schur_poly(&Partition::empty(), &g, 0).unwrap().as_poly().unwrap(), &GradedPoly::one(0));
        let miwa1 = TimesSpec::MiwaPlus(vec![rat(3, 7)]);
        assert!(schur_poly(&p(&[1, 1]), &miwa1, 2).unwrap().is_zero());
    }

    #[test]
    fn homogeneous_of_weight() {
        let g = TimesSpec::Generic(Family::B);
        for lam in enumerate_up_to(6) {
            let s = schur_poly(&lam, &g, 6).unwrap();
            let poly = s.as_poly().unwrap();
            assert!(poly.terms().all(|(m, _)| m.wdeg() == lam.weight() as i64));
            assert!(!poly.is_zero());
        }
    }

    #[test]
    fn skew_schur_examples() {
        let g = TimesSpec::Generic(Family::T);
        let sk = SkewShape::new(p(&[2, 1]), p(&[1])).unwrap();
        let v = skew_schur_poly(&sk, &g, 3).unwrap();
        let s2 = schur_poly(&p(&[2]), &g, 3).unwrap();
        let s11 = schur_poly(&p(&[1, 1]), &g, 3).unwrap();
        let sum = s2.as_poly().unwrap() + s11.as_poly().unwrap();
        assert_eq!(v.as_poly().unwrap(), &sum);
        assert_eq!(v.as_poly().unwrap(), &tpoly(&[(&[(1, 2)], Scalar::one())], 3));
        for lam in enumerate_up_to(5) {
            let whole = SkewShape::new(lam.clone(), Partition::empty()).unwrap();
            assert_eq!(skew_schur_poly(&whole, &g, 5).unwrap(), schur_poly(&lam, &g, 5).unwrap());
            let same = SkewShape::new(lam.clone(), lam.clone()).unwrap();
            assert_eq!(skew_schur_poly(&same, &g, 5).unwrap().as_poly().unwrap(), &GradedPoly::one(5));
        }
    }

    #[test]
    fn miwa_time_values() {
        let t = miwa_times(&[Scalar::one()], MiwaSign::Plus, 4);
        assert_eq!(t, TimesSpec::Numeric((1..=4).map(|m| rat(1, m)).collect()));
        let t = miwa_times(&[Scalar::one(), rat(1, 2)], MiwaSign::Plus, 2);
        assert_eq!(t, TimesSpec::Numeric(vec![rat(3, 2), rat(5, 8)]));
    }

    /// Oracle: bialternant `a_{λ+δ} / a_δ` with Leibniz determinants.
    fn bialternant(lambda: &Partition, x: &[Scalar]) -> Scalar {
        let n = x.len();
        let det = |exps: &[usize]| -> Scalar {
            let m: Vec<Vec<Scalar>> =
                (0..n).map(|i| (0..n).map(|j| x[i].pow(exps[j] as i64).unwrap()).collect()).collect();
            leibniz(&m)
        };
        let delta: Vec<usize> = (0..n).map(|j| n - 1 - j).collect();
        let shifted: Vec<usize> = (0..n).map(|j| lambda.part(j + 1) + n - 1 - j).collect();
        det(&shifted) / det(&delta)
    }

    fn leibniz(m: &[Vec<Scalar>]) -> Scalar {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        perms(m.len())
            .into_iter()
            .map(|s| {
                let inv = (0..s.len())
                    .flat_map(|i| (i + 1..s.len()).map(move |j| (i, j)))
                    .filter(|&(i, j)| s[i] > s[j])
                    .count();
                let prod: Scalar = s.iter().enumerate().map(|(i, &j)| m[i][j].clone()).product();
                if inv % 2 == 1 {
                    -prod
                } else {
                    prod
                }
            })
            .sum()
    }

    #[test]
    fn bialternant_agreement() {
        let xs = [rat(1, 2), rat(-2, 3), rat(3, 5), rat(5, 7)];
        for n in 1..=4 {
            let x = &xs[..n];
            let times = TimesSpec::MiwaPlus(x.to_vec());
            for lam in enumerate_up_to(5) {
                let s = schur_poly(&lam, &times, 5).unwrap();
                let v = s.as_value().unwrap().clone();
                if lam.len() > n {
                    assert!(v.is_zero(), "{lam} with {n} variables");
                } else {
                    assert_eq!(v, bialternant(&lam, x), "{lam} with {n} variables");
                }
            }
        }
    }

    #[test]
    fn dual_miwa_is_conjugate_up_to_sign() {
        let x = vec![rat(1, 3), rat(2, 5), rat(-1, 4)];
        for lam in enumerate_up_to(5) {
            let minus = schur_poly(&lam, &TimesSpec::MiwaMinus(x.clone()), 5).unwrap();
            let plus = schur_poly(&lam.conjugate(), &TimesSpec::MiwaPlus(x.clone()), 5).unwrap();
            let sign = if lam.weight() % 2 == 0 { Scalar::one() } else { Scalar::from_int(-1) };
            assert_eq!(minus.as_value().unwrap(), &(plus.as_value().unwrap() * &sign));
        }
    }

    #[test]
    fn principal_specialisations() {
        let a = rat(5, 7);
        let t = principal_times(PrincipalKind::Rational, &a, None, 6).unwrap();
        assert_eq!(t.values(3).unwrap(), vec![a.clone(), &a / &Scalar::from_int(2), &a / &Scalar::from_int(3)]);

        // one cell: (1 - q^a)/(1 - q) and a
        let q = rat(1, 4);
        let half = rat(1, 2);
        assert_eq!(
            schur_principal_value(&p(&[1]), &half, Some(&q)).unwrap(),
            (Scalar::one() - rat(1, 2)) / (Scalar::one() - &q)
        );
        assert_eq!(schur_principal_value(&p(&[1]), &a, None).unwrap(), a);

        // closed form against Jacobi–Trudi at the principal times, both variants
        let q = rat(2, 3);
        let qa = rat(5, 7); // stands for q^a with a generic
        let tq = TimesSpec::PrincipalQ { qa: qa.clone(), q: q.clone() };
        let tr = TimesSpec::PrincipalRational(a.clone());
        for lam in enumerate_up_to(6) {
            let jt = schur_poly(&lam, &tq, 6).unwrap();
            assert_eq!(jt.as_value().unwrap(), &schur_principal_value_qa(&lam, &qa, &q).unwrap());
            let jt = schur_poly(&lam, &tr, 6).unwrap();
            assert_eq!(jt.as_value().unwrap(), &schur_principal_value(&lam, &a, None).unwrap());
        }
    }

    #[test]
    fn infinity_limits_match_numeric_times() {
        let q = rat(1, 3);
        for lam in enumerate_up_to(6) {
            let sym = schur_poly(&lam, &TimesSpec::PrincipalInfinityQ(q.clone()), 6).unwrap();
            let num =
                jt_numeric(&lam, &Partition::empty(), &TimesSpec::PrincipalInfinityQ(q.clone()).values(6).unwrap());
            assert_eq!(sym.as_value().unwrap(), &num);
            let sym = schur_poly(&lam, &TimesSpec::PrincipalInfinity, 6).unwrap();
            let num = jt_numeric(&lam, &Partition::empty(), &[Scalar::one()]);
            assert_eq!(sym.as_value().unwrap(), &num);
        }
    }

    #[test]
    fn principal_n_vanishing() {
        // a = N integer: s_λ(1, q, …, q^{N-1}), zero beyond length N
        let q = rat(1, 2);
        for n in 1..=3i64 {
            let t = principal_times(PrincipalKind::Q, &Scalar::from_int(n), Some(&q), 6).unwrap();
            let x: Vec<Scalar> = (0..n).map(|k| q.pow(k).unwrap()).collect();
            for lam in enumerate_up_to(6) {
                let v = schur_poly(&lam, &t, 6).unwrap();
                let w = schur_poly(&lam, &TimesSpec::MiwaPlus(x.clone()), 6).unwrap();
                assert_eq!(v, w);
                if lam.len() as i64 > n {
                    assert!(v.is_zero());
                }
            }
        }
    }

    #[test]
    fn root_of_unity_rejected() {
        assert!(matches!(
            principal_times(PrincipalKind::Q, &Scalar::one(), Some(&Scalar::from_int(-1)), 3),
            Err(TauError::RootOfUnity { order: 2, .. })
        ));
        assert!(principal_times(PrincipalKind::Q, &Scalar::one(), Some(&Scalar::one()), 3).is_err());
    }

    #[test]
    fn single_times() {
        let s = schur_poly(&p(&[2, 1]), &TimesSpec::Single(Family::B), 5).unwrap();
        let m = Monomial::from_pairs([(VarId::b(1), 3)]);
        assert_eq!(s.as_poly().unwrap().coeff(&m), rat(1, 3));
    }

    #[test]
    fn formal_miwa_variable() {
        let v3 = Monomial::from_pairs([(VarId::t(1), 3)]);
        for lam in enumerate_up_to(4) {
            let s = schur_poly(&lam, &TimesSpec::MiwaFormal(Family::T), 4).unwrap();
            let expected = if lam.len() <= 1 { Scalar::one() } else { Scalar::zero() };
            let m = Monomial::from_pairs([(VarId::t(1), lam.weight() as u32)]);
            assert_eq!(s.as_poly().unwrap().coeff(&m), expected, "{lam}");
        }
        let sk = SkewShape::new(p(&[3, 1]), p(&[1])).unwrap();
        let s = skew_schur_poly(&sk, &TimesSpec::MiwaFormal(Family::T), 4).unwrap();
        assert_eq!(s.as_poly().unwrap().coeff(&v3), Scalar::one());
    }
}
