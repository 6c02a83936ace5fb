//! The operator symbol `r(D)`.
//!
//! `r` acts diagonally, `r(D) z^n = r(n) z^n`, so it is fully described by its
//! values at integers. [`RSpec`] is a constant times a ratio of products of
//! simple factors that are either linear in `D` or built from `q^D`, which
//! covers every rational-in-`D` and rational-in-`q^D` symbol the
//! hypergeometric families need. All values are exact rationals; complex
//! conjugate pairs `a e^{±iη}` enter only through their real quadratic.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Result, TauError};
use crate::partitions::{Partition, SkewShape};
use crate::scalar::Scalar;

/// One factor of `r(D)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub enum RFactor {
    /// `D + shift`.
    #[serde(rename = "lin")]
    LinD { shift: Scalar },
    /// `1 - coeff·q^{shift + D}`.
    #[serde(rename = "qlin")]
    QLin { coeff: Scalar, shift: Scalar },
    /// `(1 - amp e^{iη} q^D)(1 - amp e^{-iη} q^D) = 1 - 2·amp·cos η·q^D + amp²·q^{2D}`.
    #[serde(rename = "qpair")]
    QPair {
        amp: Scalar,
        #[serde(rename = "cos")]
        cosv: Scalar,
    },
}

impl RFactor {
    pub fn lin(shift: Scalar) -> Self {
        RFactor::LinD { shift }
    }

    /// `1 - q^{shift + D}`.
    pub fn qlin(shift: Scalar) -> Self {
        RFactor::QLin { coeff: Scalar::one(), shift }
    }

    pub fn is_q(&self) -> bool {
        !matches!(self, RFactor::LinD { .. })
    }

    /// Value at the integer `n`.
    pub fn eval(&self, n: i64, q: Option<&Scalar>) -> Result<Scalar> {
        let need_q = || q.ok_or_else(|| TauError::InvalidParams("q-factor without q".into()));
        match self {
            RFactor::LinD { shift } => Ok(shift + &Scalar::from_int(n)),
            RFactor::QLin { coeff, shift } => {
                let q = need_q()?;
                let pw = q.rpow(shift)? * q.pow(n)?;
                Ok(Scalar::one() - coeff * &pw)
            }
            RFactor::QPair { amp, cosv } => {
                let q = need_q()?;
                let qn = q.pow(n)?;
                let lin = Scalar::from_int(2) * amp * cosv * &qn;
                let quad = amp * amp * &qn * &qn;
                Ok(Scalar::one() - lin + quad)
            }
        }
    }

    /// The factor of `r(D + m)`.
    pub fn shifted(&self, m: i64, q: Option<&Scalar>) -> Result<RFactor> {
        Ok(match self {
            RFactor::LinD { shift } => RFactor::LinD { shift: shift + &Scalar::from_int(m) },
            RFactor::QLin { coeff, shift } => {
                RFactor::QLin { coeff: coeff.clone(), shift: shift + &Scalar::from_int(m) }
            }
            RFactor::QPair { amp, cosv } => {
                let q = q.ok_or_else(|| TauError::InvalidParams("q-factor without q".into()))?;
                RFactor::QPair { amp: amp * &q.pow(m)?, cosv: cosv.clone() }
            }
        })
    }
}

/// `r(D) = constant · ∏ numerator / ∏ denominator`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RSpecJson", into = "RSpecJson")]
pub struct RSpec {
    pub constant: Scalar,
    pub numerator: Vec<RFactor>,
    pub denominator: Vec<RFactor>,
    pub q: Option<Scalar>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RSpecJson {
    #[serde(default = "Scalar::one")]
    constant: Scalar,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    q: Option<Scalar>,
    #[serde(default)]
    num: Vec<RFactor>,
    #[serde(default)]
    den: Vec<RFactor>,
}

impl TryFrom<RSpecJson> for RSpec {
    type Error = TauError;

    fn try_from(j: RSpecJson) -> Result<Self> {
        RSpec::new(j.constant, j.num, j.den, j.q)
    }
}

impl From<RSpec> for RSpecJson {
    fn from(r: RSpec) -> Self {
        RSpecJson { constant: r.constant, q: r.q, num: r.numerator, den: r.denominator }
    }
}

/// Integer zero or pole of `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ZeroPole {
    Zero,
    Pole,
}

impl RSpec {
    pub fn new(
        constant: Scalar,
        numerator: Vec<RFactor>,
        denominator: Vec<RFactor>,
        q: Option<Scalar>,
    ) -> Result<Self> {
        if constant.is_zero() {
            return Err(TauError::InvalidParams("r must have a nonzero constant".into()));
        }
        let has_q = numerator.iter().chain(&denominator).any(RFactor::is_q);
        match (&q, has_q) {
            (None, true) => return Err(TauError::InvalidParams("q-factors need q".into())),
            (Some(_), false) => return Err(TauError::InvalidParams("q given but no q-factor present".into())),
            (Some(q), true) if q.is_zero() => return Err(TauError::InvalidParams("q must be nonzero".into())),
            _ => {}
        }
        Ok(RSpec { constant, numerator, denominator, q })
    }

    /// `r ≡ 1`.
    pub fn one() -> Self {
        RSpec { constant: Scalar::one(), numerator: vec![], denominator: vec![], q: None }
    }

    /// `∏ (D + a_k) / ∏ (D + b_k)`.
    pub fn rational(a: &[Scalar], b: &[Scalar]) -> Self {
        RSpec {
            constant: Scalar::one(),
            numerator: a.iter().cloned().map(RFactor::lin).collect(),
            denominator: b.iter().cloned().map(RFactor::lin).collect(),
            q: None,
        }
    }

    /// `∏ (1 - q^{a_k + D}) / ∏ (1 - q^{b_k + D})`.
    pub fn q_rational(a: &[Scalar], b: &[Scalar], q: &Scalar) -> Result<Self> {
        RSpec::new(
            Scalar::one(),
            a.iter().cloned().map(RFactor::qlin).collect(),
            b.iter().cloned().map(RFactor::qlin).collect(),
            Some(q.clone()),
        )
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| TauError::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("RSpec serializes")
    }

    pub fn is_q(&self) -> bool {
        self.q.is_some()
    }

    /// Pointwise product `r₁·r₂`. Both sides must agree on `q` when both use it.
    pub fn product(&self, other: &RSpec) -> Result<RSpec> {
        let q = match (&self.q, &other.q) {
            (Some(a), Some(b)) if a != b => return Err(TauError::InvalidParams(format!("mismatched q: {a} vs {b}"))),
            (Some(a), _) => Some(a.clone()),
            (None, b) => b.clone(),
        };
        let mut numerator = self.numerator.clone();
        numerator.extend(other.numerator.iter().cloned());
        let mut denominator = self.denominator.clone();
        denominator.extend(other.denominator.iter().cloned());
        Ok(RSpec { constant: &self.constant * &other.constant, numerator, denominator, q })
    }

    /// `r / f`.
    pub fn divided_by(&self, f: RFactor, q: Option<&Scalar>) -> Result<RSpec> {
        let extra = RSpec::new(Scalar::one(), vec![], vec![f], if q.is_some() { q.cloned() } else { self.q.clone() })?;
        self.product(&extra)
    }

    /// The symbol `n ↦ r(n + m)`.
    pub fn shifted(&self, m: i64) -> Result<RSpec> {
        let q = self.q.as_ref();
        Ok(RSpec {
            constant: self.constant.clone(),
            numerator: self.numerator.iter().map(|f| f.shifted(m, q)).collect::<Result<_>>()?,
            denominator: self.denominator.iter().map(|f| f.shifted(m, q)).collect::<Result<_>>()?,
            q: self.q.clone(),
        })
    }

    /// `r(n)`; fails with [`TauError::Pole`] when a denominator factor vanishes.
    pub fn r_eval(&self, n: i64) -> Result<Scalar> {
        let q = self.q.as_ref();
        let mut den = Scalar::one();
        for f in &self.denominator {
            let v = f.eval(n, q)?;
            if v.is_zero() {
                return Err(TauError::Pole { point: n });
            }
            den *= v;
        }
        let mut num = self.constant.clone();
        for f in &self.numerator {
            num *= f.eval(n, q)?;
        }
        Ok(num / den)
    }

    /// Integer zeros and poles of `r` in `lo..=hi`, one entry per vanishing factor.
    pub fn zero_pole_scan(&self, lo: i64, hi: i64) -> Result<Vec<(i64, ZeroPole)>> {
        let q = self.q.as_ref();
        let mut out = Vec::new();
        for n in lo..=hi {
            for f in &self.numerator {
                if f.eval(n, q)?.is_zero() {
                    out.push((n, ZeroPole::Zero));
                }
            }
            for f in &self.denominator {
                if f.eval(n, q)?.is_zero() {
                    out.push((n, ZeroPole::Pole));
                }
            }
        }
        Ok(out)
    }

    /// Every integer zero and pole of `r`, not just those in a range.
    ///
    /// Linear factors are solved exactly. For q-factors a floating-point
    /// estimate of `n` from `q^n = x` proposes candidates, which are then
    /// confirmed in exact arithmetic.
    pub fn integer_points(&self) -> Result<Vec<(i64, ZeroPole)>> {
        let mut out = Vec::new();
        for (list, kind) in [(&self.numerator, ZeroPole::Zero), (&self.denominator, ZeroPole::Pole)] {
            for f in list {
                for n in self.factor_candidates(f)? {
                    if f.eval(n, self.q.as_ref())?.is_zero() {
                        out.push((n, kind));
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }

    fn factor_candidates(&self, f: &RFactor) -> Result<Vec<i64>> {
        let roots: Vec<f64> = match f {
            RFactor::LinD { shift } => {
                return Ok(if shift.is_integer() {
                    shift.to_i64().map(|s| vec![-s]).unwrap_or_default()
                } else {
                    vec![]
                })
            }
            // 1 - c q^s q^n = 0
            RFactor::QLin { coeff, shift } => {
                let q = self.q.as_ref().expect("validated");
                let base = coeff * &q.rpow(shift)?;
                if base.is_zero() {
                    return Ok(vec![]);
                }
                vec![1.0 / base.to_f64()]
            }
            // amp² x² - 2 amp cos x + 1 = 0 in x = q^n
            RFactor::QPair { amp, cosv } => {
                if amp.is_zero() {
                    return Ok(vec![]);
                }
                let (a, c) = (amp.to_f64(), cosv.to_f64());
                let disc = c * c - 1.0;
                if disc < -1e-12 {
                    return Ok(vec![]);
                }
                let s = disc.max(0.0).sqrt();
                vec![(c + s) / a, (c - s) / a]
            }
        };
        let q = self.q.as_ref().expect("validated").to_f64();
        let mut out = Vec::new();
        for x in roots {
            if x == 0.0 || !x.is_finite() {
                continue;
            }
            // sign must match q^n; with q < 0 both parities are possible
            let est = x.abs().ln() / q.abs().ln();
            if !est.is_finite() {
                continue;
            }
            let n0 = est.round() as i64;
            out.extend(n0 - 1..=n0 + 1);
        }
        Ok(out)
    }

    /// `r_λ(M) = ∏_{(i,j) ∈ λ} r(j - i + M)`, with `r_∅ = 1`.
    pub fn content_product(&self, lambda: &Partition, m: i64) -> Result<Scalar> {
        let mut acc = Scalar::one();
        for c in lambda.contents() {
            acc *= self.r_eval(c + m)?;
        }
        Ok(acc)
    }

    /// Product of `r(j - i + M)` over the cells of `outer / inner`.
    pub fn skew_content_product(&self, shape: &SkewShape, m: i64) -> Result<Scalar> {
        let mut acc = Scalar::one();
        for (i, j) in shape.cells() {
            acc *= self.r_eval(j as i64 - i as i64 + m)?;
        }
        Ok(acc)
    }

    /// A memoizing evaluator for repeated content products.
    pub fn evaluator(&self) -> REvaluator<'_> {
        REvaluator { spec: self, memo: BTreeMap::new() }
    }
}

/// Caches `r(n)` so that content products over many partitions reuse values.
pub struct REvaluator<'a> {
    spec: &'a RSpec,
    memo: BTreeMap<i64, Result<Scalar>>,
}

impl REvaluator<'_> {
    pub fn r(&mut self, n: i64) -> Result<Scalar> {
        self.memo.entry(n).or_insert_with(|| self.spec.r_eval(n)).clone()
    }

    pub fn content_product(&mut self, lambda: &Partition, m: i64) -> Result<Scalar> {
        let mut acc = Scalar::one();
        for c in lambda.contents() {
            acc *= self.r(c + m)?;
        }
        Ok(acc)
    }

    pub fn skew_content_product(&mut self, shape: &SkewShape, m: i64) -> Result<Scalar> {
        let mut acc = Scalar::one();
        for (i, j) in shape.cells() {
            acc *= self.r(j as i64 - i as i64 + m)?;
        }
        Ok(acc)
    }
}

/// Generalised Pochhammer symbol of a partition.
///
/// With `q`: `(q^a; q)_λ = ∏_i (q^{a-i+1}; q)_{λ_i}`. Without: `(a)_λ = ∏_i (a-i+1)_{λ_i}`.
pub fn poch_partition(a: &Scalar, lambda: &Partition, q: Option<&Scalar>) -> Result<Scalar> {
    match q {
        Some(q) => poch_partition_qa(&q.rpow(a)?, lambda, q),
        None => {
            let mut acc = Scalar::one();
            for (i0, &row) in lambda.parts().iter().enumerate() {
                let base = a - &Scalar::from_int(i0 as i64);
                for k in 0..row {
                    acc *= &base + &Scalar::from_int(k as i64);
                }
            }
            Ok(acc)
        }
    }
}

/// q-form of [`poch_partition`] with `qa = q^a` supplied directly.
pub fn poch_partition_qa(qa: &Scalar, lambda: &Partition, q: &Scalar) -> Result<Scalar> {
    let mut acc = Scalar::one();
    for (i0, &row) in lambda.parts().iter().enumerate() {
        // (q^{a-i+1}; q)_{row} with i = i0 + 1
        let base = qa * &q.pow(-(i0 as i64))?;
        acc *= q_pochhammer(&base, q, row as i64)?;
    }
    Ok(acc)
}

/// `(x; q)_n = ∏_{k=0}^{n-1} (1 - x q^k)`.
pub fn q_pochhammer(x: &Scalar, q: &Scalar, n: i64) -> Result<Scalar> {
    let mut acc = Scalar::one();
    let mut qk = Scalar::one();
    for _ in 0..n {
        acc *= Scalar::one() - x * &qk;
        qk *= q;
    }
    Ok(acc)
}

/// Rising factorial `(a)_n`.
pub fn pochhammer(a: &Scalar, n: i64) -> Scalar {
    (0..n).map(|k| a + &Scalar::from_int(k)).product()
}

/// Values of `h` on `lo..=hi` solving `h^{-1}(n-1) r(n) h(n) = 1`, normalised by `h(lo) = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct HTable {
    lo: i64,
    values: Vec<Scalar>,
}

impl HTable {
    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.values.len() as i64 - 1
    }

    pub fn get(&self, n: i64) -> Result<Scalar> {
        if n < self.lo || n > self.hi() {
            return Err(TauError::InvalidParams(format!("h({n}) outside table range {}..={}", self.lo, self.hi())));
        }
        Ok(self.values[(n - self.lo) as usize].clone())
    }

    /// The constant table `h ≡ 1`.
    pub fn ones(lo: i64, hi: i64) -> Self {
        HTable { lo, values: vec![Scalar::one(); (hi - lo + 1).max(0) as usize] }
    }
}

pub fn h_from_r(r: &RSpec, lo: i64, hi: i64) -> Result<HTable> {
    if hi < lo {
        return Err(TauError::InvalidParams(format!("empty range {lo}..={hi}")));
    }
    let mut values = vec![Scalar::one()];
    for n in lo + 1..=hi {
        let rn = r.r_eval(n)?;
        if rn.is_zero() {
            return Err(TauError::Zero { point: n });
        }
        let prev = values.last().expect("nonempty");
        values.push(prev / &rn);
    }
    Ok(HTable { lo, values })
}

/// `C_n`: `∏_{k=0}^{n-1} 1/(h(k) h̃(k))` for `n > 0`, `∏_{k=n}^{-1} h(k) h̃(k)` for `n < 0`, `C_0 = 1`.
pub fn c_constants(h: &HTable, h_tilde: &HTable, n: i64) -> Result<Scalar> {
    let mut acc = Scalar::one();
    if n > 0 {
        for k in 0..n {
            acc *= (h.get(k)? * h_tilde.get(k)?).recip()?;
        }
    } else {
        for k in n..0 {
            acc *= h.get(k)? * h_tilde.get(k)?;
        }
    }
    Ok(acc)
}
