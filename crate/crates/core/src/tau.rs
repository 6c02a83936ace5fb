//! Tau-functions of hypergeometric type and their special cases.
//!
//! The basic object is `τ_r(M, t, β) = Σ_λ r_λ(M) s_λ(t) s_λ(β)`, truncated
//! at `|λ| ≤ d`. With formal times on both sides every monomial has equal
//! `t`- and `β`-weight, so the truncation is exact through total weight `2d`;
//! with one side specialised to numbers it is exact through weight `d`.

use crate::error::{Result, TauError};
use crate::partitions::{enumerate_up_to, Partition, SkewShape};
use crate::poly::{Family, GradedPoly, Monomial, VarId};
use crate::rspec::{q_pochhammer, RFactor, RSpec};
use crate::scalar::Scalar;
use crate::schur::{check_q, schur_poly, skew_schur_poly, SchurValue, TimesSpec};

/// The coefficients `r_λ(M)` for `|λ| ≤ d`.
///
/// A coefficient that needs a pole of `r` is stored as the error; it only
/// surfaces if the matching Schur values are nonzero.
#[derive(Clone, Debug)]
pub struct TauExpansion {
    r: RSpec,
    m: i64,
    d: usize,
    coeffs: Vec<(Partition, Result<Scalar>)>,
}

impl TauExpansion {
    pub fn new(r: &RSpec, m: i64, d: usize) -> Self {
        let mut ev = r.evaluator();
        let coeffs = enumerate_up_to(d)
            .into_iter()
            .map(|lam| {
                let c = ev.content_product(&lam, m);
                (lam, c)
            })
            .collect();
        TauExpansion { r: r.clone(), m, d, coeffs }
    }

    pub fn rspec(&self) -> &RSpec {
        &self.r
    }

    pub fn charge(&self) -> i64 {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    /// All coefficients, grade ascending and reverse-lex within a grade.
    pub fn coeffs(&self) -> Result<Vec<(Partition, Scalar)>> {
        self.coeffs.iter().map(|(l, c)| Ok((l.clone(), c.clone()?))).collect()
    }

    pub fn coeff(&self, lambda: &Partition) -> Result<Scalar> {
        self.coeffs
            .iter()
            .find(|(l, _)| l == lambda)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| Err(TauError::InvalidParams(format!("{lambda} beyond grade {}", self.d))))
    }

    /// `Σ r_λ(M) s_λ(t) s_λ(β)` over the stored partitions.
    pub fn evaluate(&self, t: &TimesSpec, beta: &TimesSpec) -> Result<SchurValue> {
        let cap = pair_cap(t, beta, self.d)?;
        let mut acc = Accumulator::new(cap);
        for (lam, c) in &self.coeffs {
            let st = schur_at(lam, t, cap, self.d)?;
            if st.is_zero() {
                continue;
            }
            let sb = schur_at(lam, beta, cap, self.d)?;
            if sb.is_zero() {
                continue;
            }
            let c = c.clone()?;
            if c.is_zero() {
                continue;
            }
            acc.add(&product(&st, &sb, cap).scale(&c));
        }
        Ok(acc.finish())
    }
}

fn pair_cap(t: &TimesSpec, beta: &TimesSpec, d: usize) -> Result<Option<i64>> {
    match (t.family(), beta.family()) {
        (Some(a), Some(b)) if a == b => {
            Err(TauError::InvalidParams("both sides use formal times of the same family".into()))
        }
        (Some(_), Some(_)) => Ok(Some(2 * d as i64)),
        (Some(_), None) | (None, Some(_)) => Ok(Some(d as i64)),
        (None, None) => Ok(None),
    }
}

fn schur_at(lam: &Partition, times: &TimesSpec, cap: Option<i64>, d: usize) -> Result<SchurValue> {
    schur_poly(lam, times, cap.map_or(d, |c| c as usize))
}

fn skew_at(shape: &SkewShape, times: &TimesSpec, cap: Option<i64>, d: usize) -> Result<SchurValue> {
    skew_schur_poly(shape, times, cap.map_or(d, |c| c as usize))
}

fn product(a: &SchurValue, b: &SchurValue, cap: Option<i64>) -> SchurValue {
    match (a, b) {
        (SchurValue::Poly(x), SchurValue::Poly(y)) => {
            SchurValue::Poly(x.mul_to_cap(y, cap.expect("formal product has a cap")))
        }
        (SchurValue::Poly(x), SchurValue::Value(v)) | (SchurValue::Value(v), SchurValue::Poly(x)) => {
            SchurValue::Poly(x.scale(v))
        }
        (SchurValue::Value(x), SchurValue::Value(y)) => SchurValue::Value(x * y),
    }
}

struct Accumulator {
    poly: Option<GradedPoly>,
    value: Scalar,
}

impl Accumulator {
    fn new(cap: Option<i64>) -> Self {
        Accumulator { poly: cap.map(GradedPoly::zero), value: Scalar::zero() }
    }

    fn add(&mut self, v: &SchurValue) {
        match (v, &mut self.poly) {
            (SchurValue::Poly(p), Some(acc)) => {
                for (m, c) in p.terms() {
                    acc.add_term(m.clone(), c.clone());
                }
            }
            (SchurValue::Value(x), Some(acc)) => acc.add_term(Monomial::one(), x.clone()),
            (SchurValue::Value(x), None) => self.value += x,
            (SchurValue::Poly(_), None) => unreachable!("numeric sum received a polynomial"),
        }
    }

    fn finish(self) -> SchurValue {
        match self.poly {
            Some(p) => SchurValue::Poly(p),
            None => SchurValue::Value(self.value),
        }
    }
}

/// `Σ_{|λ| ≤ d} r_λ(M) s_λ(t) s_λ(β)`.
pub fn tau_series(r: &RSpec, m: i64, d: usize, t: &TimesSpec, beta: &TimesSpec) -> Result<SchurValue> {
    TauExpansion::new(r, m, d).evaluate(t, beta)
}

/// `Σ (r̃ r)_λ(M) s_λ(t̃) s_λ(β)`, with the two content products taken separately.
pub fn tau_two_sided(
    r_tilde: &RSpec,
    r: &RSpec,
    m: i64,
    d: usize,
    t_tilde: &TimesSpec,
    beta: &TimesSpec,
) -> Result<SchurValue> {
    let left = TauExpansion::new(r_tilde, m, d);
    let right = TauExpansion::new(r, m, d);
    let cap = pair_cap(t_tilde, beta, d)?;
    let mut acc = Accumulator::new(cap);
    for ((lam, cl), (_, cr)) in left.coeffs.iter().zip(&right.coeffs) {
        let st = schur_at(lam, t_tilde, cap, d)?;
        let sb = schur_at(lam, beta, cap, d)?;
        if st.is_zero() || sb.is_zero() {
            continue;
        }
        let c = cl.clone()? * cr.clone()?;
        acc.add(&product(&st, &sb, cap).scale(&c));
    }
    Ok(acc.finish())
}

/// The two chains of a generalised two-dimensional Toda tau-function.
///
/// Each side lists `(r^i, γ_i)` pairs from the innermost partition outwards:
/// the first pair carries `s_{λ_1}` and the last one `s_{λ/λ_m}`.
#[derive(Clone, Debug)]
pub struct ChainSpec {
    pub left: Vec<(RSpec, TimesSpec)>,
    pub right: Vec<(RSpec, TimesSpec)>,
}

impl ChainSpec {
    pub fn new(left: Vec<(RSpec, TimesSpec)>, right: Vec<(RSpec, TimesSpec)>) -> Result<Self> {
        if left.is_empty() || right.is_empty() {
            return Err(TauError::InvalidParams("each chain side needs at least one pair".into()));
        }
        Ok(ChainSpec { left, right })
    }

    fn cap(&self, d: usize) -> Result<Option<i64>> {
        let side_kind = |side: &[(RSpec, TimesSpec)]| {
            let formal = side.iter().filter(|(_, t)| t.is_formal()).count();
            (formal == side.len(), formal > 0)
        };
        let (lf, la) = side_kind(&self.left);
        let (rf, ra) = side_kind(&self.right);
        let families: Vec<Family> = self.left.iter().chain(&self.right).filter_map(|(_, t)| t.family()).collect();
        for (i, f) in families.iter().enumerate() {
            let generic_clash = families[i + 1..].contains(f)
                && self.left.iter().chain(&self.right).any(|(_, t)| matches!(t, TimesSpec::Generic(g) if g == f));
            if generic_clash {
                return Err(TauError::InvalidParams("generic times share a family with another chain element".into()));
            }
        }
        match (lf, rf, la || ra) {
            (true, true, _) => Ok(Some(2 * d as i64)),
            (true, false, _) | (false, true, _) => Ok(Some(d as i64)),
            (false, false, false) => Ok(None),
            (false, false, true) => Err(TauError::InvalidParams(
                "truncation is only exact when one side is entirely formal or no side is".into(),
            )),
        }
    }
}

// v_i(λ) = Σ_{μ ⊆ λ} v_{i-1}(μ) r^i_{λ/μ}(M) s_{λ/μ}(γ_i), starting from δ_∅.
fn chain_vector(
    side: &[(RSpec, TimesSpec)],
    parts: &[Partition],
    m: i64,
    cap: Option<i64>,
    d: usize,
) -> Result<Vec<Option<SchurValue>>> {
    let mut v: Vec<Option<SchurValue>> = parts
        .iter()
        .map(|p| {
            p.is_empty().then(|| match cap {
                Some(c) => SchurValue::Poly(GradedPoly::one(c)),
                None => SchurValue::Value(Scalar::one()),
            })
        })
        .collect();
    for (r, times) in side {
        let mut ev = r.evaluator();
        let mut next = Vec::with_capacity(parts.len());
        for lam in parts {
            let mut acc = Accumulator::new(cap);
            let mut any = false;
            for (mu, vm) in parts.iter().zip(&v) {
                let Some(vm) = vm else { continue };
                if mu.weight() > lam.weight() || !lam.contains(mu) {
                    continue;
                }
                let shape = SkewShape::new(lam.clone(), mu.clone())?;
                let s = skew_at(&shape, times, cap, d)?;
                if s.is_zero() {
                    continue;
                }
                let c = ev.skew_content_product(&shape, m)?;
                if c.is_zero() {
                    continue;
                }
                acc.add(&product(vm, &s, cap).scale(&c));
                any = true;
            }
            let out = acc.finish();
            next.push((any && !out.is_zero()).then_some(out));
        }
        v = next;
    }
    Ok(v)
}

/// Sum over flags of nested partitions, computed as a product of transition
/// matrices indexed by partitions of weight ≤ `d`.
pub fn tau_general(chain: &ChainSpec, m: i64, d: usize) -> Result<SchurValue> {
    let cap = chain.cap(d)?;
    let parts = enumerate_up_to(d);
    let left = chain_vector(&chain.left, &parts, m, cap, d)?;
    let right = chain_vector(&chain.right, &parts, m, cap, d)?;
    let mut acc = Accumulator::new(cap);
    for (a, b) in left.iter().zip(&right) {
        if let (Some(a), Some(b)) = (a, b) {
            acc.add(&product(a, b, cap));
        }
    }
    Ok(acc.finish())
}

/// Multivariate `pF_s`: `Σ ∏(a_k+M)_λ / ∏(b_k+M)_λ · s_λ(t) / H_λ`.
pub fn pfs_multivar(a: &[Scalar], b: &[Scalar], m: i64, t: &TimesSpec, d: usize) -> Result<SchurValue> {
    tau_series(&RSpec::rational(a, b), m, d, t, &TimesSpec::PrincipalInfinity)
}

/// Taylor coefficients `c_0..c_order` of the one-variable `pF_s` at charge `M`,
/// read off the multivariate series with a single formal Miwa variable.
pub fn pfs_coefficients(a: &[Scalar], b: &[Scalar], m: i64, order: usize) -> Result<Vec<Scalar>> {
    let s = pfs_multivar(a, b, m, &TimesSpec::MiwaFormal(Family::T), order)?;
    one_var_coefficients(&s, order)
}

/// q-analogue: `Σ ∏(q^{a_k+M};q)_λ / ∏(q^{b_k+M};q)_λ · q^{n(λ)}/H_λ(q) · s_λ(x)`.
///
/// The exponents must make every `q^{a_k}` rational; see [`qphi_multivar_qa`].
pub fn qphi_multivar(a: &[Scalar], b: &[Scalar], m: i64, q: &Scalar, x: &[Scalar], d: usize) -> Result<Scalar> {
    let qa = q_values(a, q)?;
    let qb = q_values(b, q)?;
    qphi_multivar_qa(&qa, &qb, m, q, x, d)
}

/// [`qphi_multivar`] with the bases `q^{a_k}`, `q^{b_k}` given as values.
pub fn qphi_multivar_qa(qa: &[Scalar], qb: &[Scalar], m: i64, q: &Scalar, x: &[Scalar], d: usize) -> Result<Scalar> {
    check_q(q, d as i64)?;
    let r = q_rspec_from_values(qa, qb, q)?;
    let v = tau_series(&r, m, d, &TimesSpec::MiwaPlus(x.to_vec()), &TimesSpec::PrincipalInfinityQ(q.clone()))?;
    Ok(v.as_value().expect("numeric times give a number").clone())
}

/// One-variable `pΦ_s` coefficients `c_0..c_order` at charge `M`, from bases `q^{a_k}`, `q^{b_k}`.
pub fn qphi_coefficients_qa(qa: &[Scalar], qb: &[Scalar], m: i64, q: &Scalar, order: usize) -> Result<Vec<Scalar>> {
    check_q(q, order as i64)?;
    let r = q_rspec_from_values(qa, qb, q)?;
    let s = tau_series(&r, m, order, &TimesSpec::MiwaFormal(Family::T), &TimesSpec::PrincipalInfinityQ(q.clone()))?;
    one_var_coefficients(&s, order)
}

pub fn qphi_coefficients(a: &[Scalar], b: &[Scalar], m: i64, q: &Scalar, order: usize) -> Result<Vec<Scalar>> {
    qphi_coefficients_qa(&q_values(a, q)?, &q_values(b, q)?, m, q, order)
}

fn q_values(e: &[Scalar], q: &Scalar) -> Result<Vec<Scalar>> {
    e.iter().map(|x| q.rpow(x)).collect()
}

/// `∏ (1 - qa_k q^D) / ∏ (1 - qb_k q^D)`.
pub fn q_rspec_from_values(qa: &[Scalar], qb: &[Scalar], q: &Scalar) -> Result<RSpec> {
    let f = |c: &Scalar| RFactor::QLin { coeff: c.clone(), shift: Scalar::zero() };
    RSpec::new(Scalar::one(), qa.iter().map(f).collect(), qb.iter().map(f).collect(), Some(q.clone()))
}

fn one_var_coefficients(s: &SchurValue, order: usize) -> Result<Vec<Scalar>> {
    let p = s.as_poly().ok_or_else(|| TauError::InvalidParams("expected a formal series".into()))?;
    let mut out = vec![Scalar::zero(); order + 1];
    for (mono, c) in p.terms() {
        let e = mono.exponent(VarId::t(1)) as usize;
        if e <= order {
            out[e] += c;
        }
    }
    Ok(out)
}

/// Terms `c_k x^k`, `k = 0..=order`, of `pF_s(a; b; x)` (or `pΦ_s(a; b; q, x)`
/// when `q` is given) by the term ratio `c_{k+1}/c_k`.
pub fn classical_reference(
    a: &[Scalar],
    b: &[Scalar],
    x: &Scalar,
    order: usize,
    q: Option<&Scalar>,
) -> Result<Vec<Scalar>> {
    match q {
        None => {
            let mut out = vec![Scalar::one()];
            for k in 0..order as i64 {
                let kk = Scalar::from_int(k);
                let num: Scalar = a.iter().map(|ai| ai + &kk).product();
                let mut den: Scalar = b.iter().map(|bi| bi + &kk).product();
                den *= Scalar::from_int(k + 1);
                if den.is_zero() {
                    return Err(TauError::Pole { point: k });
                }
                let next = out.last().expect("nonempty") * &num / den * x;
                out.push(next);
            }
            Ok(out)
        }
        Some(q) => classical_reference_qa(&q_values(a, q)?, &q_values(b, q)?, x, order, q),
    }
}

/// q-form of [`classical_reference`] with bases `q^{a_k}` given as values.
pub fn classical_reference_qa(
    qa: &[Scalar],
    qb: &[Scalar],
    x: &Scalar,
    order: usize,
    q: &Scalar,
) -> Result<Vec<Scalar>> {
    let mut out = vec![Scalar::one()];
    let mut qk = Scalar::one();
    for k in 0..order as i64 {
        let num: Scalar = qa.iter().map(|c| Scalar::one() - c * &qk).product();
        let mut den: Scalar = qb.iter().map(|c| Scalar::one() - c * &qk).product();
        den *= Scalar::one() - &qk * q;
        if den.is_zero() {
            return Err(TauError::Pole { point: k });
        }
        let next = out.last().expect("nonempty") * &num / den * x;
        out.push(next);
        qk *= q;
    }
    Ok(out)
}

/// Both sides of the `b`-reparametrisation.
///
/// Rational `r`: `τ_r(M, t(∞), t)` and `τ_{r/(b+D)}(M, t(b+M), t)`.
/// q-rational `r`: `τ_r(M, t(∞,q), t)` and `τ_{r/(1-q^{b+D})}(M, t(b+M,q), t)`.
pub fn prop4_pair(r: &RSpec, b: &Scalar, m: i64, d: usize, t: &TimesSpec) -> Result<(SchurValue, SchurValue)> {
    match &r.q {
        None => {
            let rb = r.divided_by(RFactor::lin(b.clone()), None)?;
            let lhs = tau_series(r, m, d, &TimesSpec::PrincipalInfinity, t)?;
            let bm = b + &Scalar::from_int(m);
            let rhs = tau_series(&rb, m, d, &TimesSpec::PrincipalRational(bm), t)?;
            Ok((lhs, rhs))
        }
        Some(q) => prop4_pair_qb(r, &q.rpow(b)?, m, d, t),
    }
}

/// q variant of [`prop4_pair`] with `q^b` supplied as a value.
pub fn prop4_pair_qb(r: &RSpec, qb: &Scalar, m: i64, d: usize, t: &TimesSpec) -> Result<(SchurValue, SchurValue)> {
    let q = r.q.clone().ok_or_else(|| TauError::InvalidParams("q variant needs a q-rational r".into()))?;
    check_q(&q, d as i64)?;
    let rb = r.divided_by(RFactor::QLin { coeff: qb.clone(), shift: Scalar::zero() }, None)?;
    let lhs = tau_series(r, m, d, &TimesSpec::PrincipalInfinityQ(q.clone()), t)?;
    let qa = qb * &q.pow(m)?;
    let rhs = tau_series(&rb, m, d, &TimesSpec::PrincipalQ { qa, q }, t)?;
    Ok((lhs, rhs))
}

/// Parameters of a q-Askey–Wilson polynomial; `a e^{±iη}` enters through `cos η`.
#[derive(Clone, Debug, PartialEq)]
pub struct AskeyWilson {
    pub n: i64,
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
    pub d: Scalar,
    pub q: Scalar,
    pub cos_eta: Scalar,
}

impl AskeyWilson {
    /// The operator `₄r₃^{(q)}(D)`.
    pub fn rspec(&self) -> Result<RSpec> {
        let (a, b, c, d, q) = (&self.a, &self.b, &self.c, &self.d, &self.q);
        let abcd = a * b * c * d * q.pow(self.n - 1)?;
        let num = vec![
            RFactor::qlin(Scalar::from_int(-self.n)),
            RFactor::QLin { coeff: abcd, shift: Scalar::zero() },
            RFactor::QPair { amp: a.clone(), cosv: self.cos_eta.clone() },
        ];
        let den =
            [a * b, a * c, a * d].into_iter().map(|coeff| RFactor::QLin { coeff, shift: Scalar::zero() }).collect();
        RSpec::new(Scalar::one(), num, den, Some(q.clone()))
    }

    /// `₄τ₃^{(q)}(M, t, β)` with `t = (q, q²/2, …)` and `β_i = 1/(i(1-q^i))`.
    ///
    /// At charge `M ≤ n` the series stops after `m = n - M`.
    pub fn phi(&self, m: i64) -> Result<Scalar> {
        if self.n < 0 {
            return Err(TauError::InvalidParams("degree must be non-negative".into()));
        }
        let len = (self.n - m).max(0) as usize;
        check_q(&self.q, len as i64 + 1)?;
        let v = tau_series(
            &self.rspec()?,
            m,
            len,
            &TimesSpec::MiwaPlus(vec![self.q.clone()]),
            &TimesSpec::PrincipalInfinityQ(self.q.clone()),
        )?;
        Ok(v.as_value().expect("numeric").clone())
    }

    /// The first omitted term, `m = n - M + 1`; zero by termination.
    pub fn tail_term(&self, m: i64) -> Result<Scalar> {
        let k = (self.n - m + 1).max(0) as usize;
        let row = Partition::new(if k == 0 { vec![] } else { vec![k] })?;
        let coeff = self.rspec()?.content_product(&row, m)?;
        let qk = self.q.pow(k as i64)?;
        Ok(coeff * qk / q_pochhammer(&self.q, &self.q, k as i64)?)
    }

    /// `a^{-n} (ab;q)_n (ac;q)_n (ad;q)_n`.
    pub fn prefactor(&self) -> Result<Scalar> {
        let (a, q, n) = (&self.a, &self.q, self.n);
        let mut acc = a.pow(-n)?;
        for x in [&self.b, &self.c, &self.d] {
            acc *= q_pochhammer(&(a * x), q, n)?;
        }
        Ok(acc)
    }

    /// `p_n(cos η; a, b, c, d | q)`.
    pub fn value(&self) -> Result<Scalar> {
        Ok(self.prefactor()? * self.phi(0)?)
    }
}

/// `p_n(cos η; a, b, c, d | q)` through the tau-function at `M = 0`.
pub fn askey_wilson(
    n: i64,
    a: &Scalar,
    b: &Scalar,
    c: &Scalar,
    d: &Scalar,
    q: &Scalar,
    cos_eta: &Scalar,
) -> Result<Scalar> {
    AskeyWilson { n, a: a.clone(), b: b.clone(), c: c.clone(), d: d.clone(), q: q.clone(), cos_eta: cos_eta.clone() }
        .value()
}

/// An exact number of the form `rational · q^{q_exponent} · √radicand`.
#[derive(Clone, Debug, PartialEq)]
pub struct SurdValue {
    pub rational: Scalar,
    pub q: Scalar,
    pub q_exponent: Scalar,
    pub radicand: Scalar,
}

impl SurdValue {
    pub fn to_f64(&self) -> f64 {
        self.rational.to_f64() * self.q.to_f64().powf(self.q_exponent.to_f64()) * self.radicand.to_f64().sqrt()
    }

    /// The square, which is rational whenever `2·q_exponent` is an integer power of a rational `q`.
    pub fn square(&self) -> Result<Scalar> {
        let e2 = &self.q_exponent * &Scalar::from_int(2);
        Ok(&self.rational * &self.rational * self.q.rpow(&e2)? * &self.radicand)
    }
}

/// q-number `[a] = q^{(1-a)/2} (1 - q^a)/(1 - q)` as `rational · q^{(1-a)/2}`.
pub fn q_bracket(a: i64, q: &Scalar) -> Result<SurdValue> {
    let rational = (Scalar::one() - q.pow(a)?) / (Scalar::one() - q);
    Ok(SurdValue { rational, q: q.clone(), q_exponent: Scalar::new(1 - a, 2), radicand: Scalar::one() })
}

/// `[n]! = q^{-n(n-1)/4} (q;q)_n / (1-q)^n`, returned as `(rational, q-exponent)`.
fn q_factorial(n: i64, q: &Scalar) -> Result<(Scalar, Scalar)> {
    if n < 0 {
        return Err(TauError::InvalidParams(format!("[{n}]! of a negative argument")));
    }
    let rat = q_pochhammer(q, q, n)? / (Scalar::one() - q).pow(n)?;
    Ok((rat, Scalar::new(-n * (n - 1), 4)))
}

/// Spins for the q-Clebsch–Gordan coefficient; half-integers are allowed.
#[derive(Clone, Debug, PartialEq)]
pub struct Spins {
    pub l1: Scalar,
    pub l2: Scalar,
    pub l: Scalar,
    pub j: Scalar,
    pub k: Scalar,
}

impl Spins {
    pub fn new(l1: Scalar, l2: Scalar, l: Scalar, j: Scalar, k: Scalar) -> Self {
        Spins { l1, l2, l, j, k }
    }

    pub fn m(&self) -> Scalar {
        &self.j + &self.k
    }

    fn int(x: Scalar, what: &str) -> Result<i64> {
        match x.to_i64() {
            Some(v) if x.is_integer() && v >= 0 => Ok(v),
            _ => Err(TauError::InvalidParams(format!("{what} = {x} must be a non-negative integer"))),
        }
    }

    /// All factorial arguments, checked to be non-negative integers.
    fn arguments(&self) -> Result<CgArgs> {
        let (l1, l2, l, j, k) = (&self.l1, &self.l2, &self.l, &self.j, &self.k);
        let m = self.m();
        let two = Scalar::from_int(2);
        for (x, name) in [(l1, "2·l1"), (l2, "2·l2"), (l, "2·l")] {
            Self::int(x * &two, name)?;
        }
        let i = |x: Scalar, w: &str| Self::int(x, w);
        Ok(CgArgs {
            l1_plus_j: i(l1 + j, "l1+j")?,
            l1_minus_j: i(l1 - j, "l1-j")?,
            l2_plus_k: i(l2 + k, "l2+k")?,
            l2_minus_k: i(l2 - k, "l2-k")?,
            l_plus_m: i(l + &m, "l+m")?,
            l_minus_m: i(l - &m, "l-m")?,
            d1: i(l1 + l2 - l, "l1+l2-l")?,
            d2: i(l1 - l2 + l, "l1-l2+l")?,
            d3: i(l - l1 + l2, "l-l1+l2")?,
            d4: i(l1 + l2 + l + Scalar::one(), "l1+l2+l+1")?,
            e1: i(l + l2 - j, "l+l2-j")?,
            e2: i(l2 - l + j, "l2-l+j")?,
            two_l_plus_1: i(&two * l + Scalar::one(), "2l+1")?,
        })
    }

    /// Upper parameters `(j-l1, l1+j+1, -l+m)` and lower `(l2-l+j+1, -l-l2+j)`.
    pub fn phi_exponents(&self) -> (Vec<Scalar>, Vec<Scalar>) {
        let (l1, l2, l, j) = (&self.l1, &self.l2, &self.l, &self.j);
        let one = Scalar::one();
        let a = vec![j - l1, l1 + j + &one, &self.m() - l];
        let b = vec![l2 - l + j + &one, j - l - l2];
        (a, b)
    }
}

struct CgArgs {
    l1_plus_j: i64,
    l1_minus_j: i64,
    l2_plus_k: i64,
    l2_minus_k: i64,
    l_plus_m: i64,
    l_minus_m: i64,
    d1: i64,
    d2: i64,
    d3: i64,
    d4: i64,
    e1: i64,
    e2: i64,
    two_l_plus_1: i64,
}

/// `₃Φ₂(j-l1, l1+j+1, -l+m; l2-l+j+1, -l-l2+j | q, q)` via `₃τ₂^{(q)}(0, t, β)`
/// with `t = (q, q²/2, …)` and `β_i = 1/(i(1-q^i))`.
///
/// The series stops after `l1 - j` terms.
pub fn cg_phi(spins: &Spins, q: &Scalar) -> Result<Scalar> {
    let args = spins.arguments()?;
    let (a, b) = spins.phi_exponents();
    let len = args.l1_minus_j as usize;
    check_q(q, len as i64 + 1)?;
    let r = RSpec::q_rational(&a, &b, q)?;
    let v = tau_series(&r, 0, len, &TimesSpec::MiwaPlus(vec![q.clone()]), &TimesSpec::PrincipalInfinityQ(q.clone()))?;
    Ok(v.as_value().expect("numeric").clone())
}

/// q-Clebsch–Gordan coefficient `C_q(l, j)`.
///
/// The bracket `[l2+k]!` occurs both inside `[l, j]` and in the denominator;
/// both occurrences are kept.
pub fn clebsch_gordan_q(spins: &Spins, q: &Scalar) -> Result<SurdValue> {
    let a = spins.arguments()?;
    let phi = cg_phi(spins, q)?;
    let f = |n: i64| q_factorial(n, q);

    let mut rational = phi;
    let mut q_exp = Scalar::zero();
    if a.l1_minus_j % 2 == 1 {
        rational = -rational;
    }
    let (l1, l2, l, j, m) = (&spins.l1, &spins.l2, &spins.l, &spins.j, spins.m());
    let one = Scalar::one();
    let b = (l2 * &(l2 + &one) - l1 * &(l1 + &one) - l * &(l + &one) + Scalar::from_int(2) * j * &(&m + &one))
        / Scalar::from_int(4);
    q_exp += b;

    let (fr, fe) = f(a.e1)?;
    rational *= fr;
    q_exp += fe;
    for n in [a.d2, a.d3, a.e2, a.l1_minus_j, a.l2_plus_k, a.l_minus_m] {
        let (fr, fe) = f(n)?;
        rational = rational / fr;
        q_exp -= fe;
    }

    // radicand: Δ(l)² · [l, j] · [2l+1]
    let mut rad = Scalar::one();
    let mut rad_exp = Scalar::zero();
    for n in [a.d1, a.d2, a.d3, a.l1_plus_j, a.l1_minus_j, a.l2_plus_k, a.l2_minus_k, a.l_plus_m, a.l_minus_m] {
        let (fr, fe) = f(n)?;
        rad *= fr;
        rad_exp += fe;
    }
    let (fr, fe) = f(a.d4)?;
    rad = rad / fr;
    rad_exp -= fe;
    let br = q_bracket(a.two_l_plus_1, q)?;
    rad *= br.rational;
    rad_exp += br.q_exponent;
    q_exp += rad_exp / Scalar::from_int(2);

    if let Some(root) = rad.nth_root_exact(2) {
        rational *= root;
        rad = Scalar::one();
    }
    Ok(SurdValue { rational, q: q.clone(), q_exponent: q_exp, radicand: rad })
}
