//! The acceptance battery: fourteen property checks with exact equality.
//!
//! Random parameters come from a ChaCha stream seeded by `TAUKIT_SEED`
//! (default [`DEFAULT_SEED`]). Each criterion derives its own stream from the
//! seed, so any one of them can be rerun alone.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Result, TauError};
use crate::partitions::{enumerate_up_to, Partition};
use crate::poly::{Family, Monomial, VarId};
use crate::rspec::{poch_partition, poch_partition_qa, pochhammer, RFactor, RSpec, ZeroPole};
use crate::scalar::{rat, Scalar};
use crate::schur::{schur_poly, schur_principal_value, schur_principal_value_qa, TimesSpec};
use crate::tau::{
    cg_phi, classical_reference, pfs_multivar, q_bracket, q_rspec_from_values, tau_general, tau_series, tau_two_sided,
    AskeyWilson, ChainSpec, Spins,
};
use crate::verify::{
    check_hirota, check_kp_bilinear, check_ode, check_prop4, check_prop4_qb, check_qdiff_qa, check_remark1, check_toda,
    det_oracle_tau, CheckReport, Gauge, Remark1Mode,
};

pub const DEFAULT_SEED: u64 = 20011;
pub const CRITERIA: u32 = 14;

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u32,
    pub title: &'static str,
    pub pass: bool,
    /// Number of individual comparisons or reports behind the verdict.
    pub checks: usize,
    pub detail: Option<String>,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        let mut s = format!("{verdict} {:>2} {} ({} checks)", self.id, self.title, self.checks);
        if let Some(d) = &self.detail {
            s.push_str(": ");
            s.push_str(d);
        }
        s
    }
}

#[derive(Default)]
struct Tally {
    checks: usize,
    failure: Option<String>,
}

impl Tally {
    fn report(&mut self, r: Result<CheckReport>) {
        match r {
            Ok(rep) => self.expect(rep.pass, || rep.to_json()),
            Err(e) => self.expect(false, || e.to_string()),
        }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn equal<T: PartialEq + std::fmt::Debug>(&mut self, label: &str, a: &T, b: &T) {
        self.expect(a == b, || format!("{label}: {a:?} != {b:?}"));
    }

    fn value<T>(&mut self, label: &str, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.expect(false, || format!("{label}: {e}"));
                None
            }
        }
    }
}

/// Runs criteria with a fixed seed.
#[derive(Clone, Debug)]
pub struct Suite {
    pub seed: u64,
}

impl Default for Suite {
    fn default() -> Self {
        Suite { seed: DEFAULT_SEED }
    }
}

impl Suite {
    pub fn new(seed: u64) -> Self {
        Suite { seed }
    }

    /// Seed from `TAUKIT_SEED`, falling back to [`DEFAULT_SEED`].
    pub fn from_env() -> Result<Self> {
        match std::env::var("TAUKIT_SEED") {
            Ok(s) => s
                .trim()
                .parse()
                .map(Suite::new)
                .map_err(|_| TauError::Parse(format!("TAUKIT_SEED must be an unsigned integer, got {s:?}"))),
            Err(_) => Ok(Suite::default()),
        }
    }

    fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }

    pub fn title(id: u32) -> &'static str {
        match id {
            1 => "determinant oracle equals the Schur series",
            2 => "Hirota bilinear identity",
            3 => "Toda equations in both gauges",
            4 => "KP bilinear identity",
            5 => "one-variable classical reduction",
            6 => "q-difference equation",
            7 => "hypergeometric ODE",
            8 => "b-reparametrisation",
            9 => "bounded-length truncations",
            10 => "Pochhammer and principal Schur values",
            11 => "two-chain closed form",
            12 => "Askey-Wilson termination and symmetry",
            13 => "two-sided multiplicativity",
            14 => "Clebsch-Gordan series and q-brackets",
            _ => "unknown",
        }
    }

    pub fn run(&self, id: u32) -> CriterionResult {
        let mut t = Tally::default();
        match id {
            1 => self.oracle(&mut t),
            2 => self.hirota(&mut t),
            3 => self.toda(&mut t),
            4 => self.kp(&mut t),
            5 => self.classical(&mut t),
            6 => self.qdiff(&mut t),
            7 => self.ode(&mut t),
            8 => self.prop4(&mut t),
            9 => self.remark1(&mut t),
            10 => self.pochhammer(&mut t),
            11 => self.chain(&mut t),
            12 => self.askey_wilson(&mut t),
            13 => self.two_sided(&mut t),
            14 => self.clebsch_gordan(&mut t),
            _ => t.expect(false, || format!("no criterion {id}")),
        }
        CriterionResult {
            id,
            title: Self::title(id),
            pass: t.failure.is_none() && t.checks > 0,
            checks: t.checks,
            detail: t.failure,
        }
    }

    pub fn run_all(&self) -> Vec<CriterionResult> {
        (1..=CRITERIA).map(|id| self.run(id)).collect()
    }

    /// Five rational specs followed by three q-rational ones.
    pub fn battery(&self) -> Vec<RSpec> {
        let mut rng = self.rng(100);
        let mut out: Vec<RSpec> = (0..5).map(|_| random_rational_spec(&mut rng)).collect();
        for q in [rat(1, 2), rat(1, 3), rat(2, 5)] {
            out.push(random_q_spec(&mut rng, &q));
        }
        out
    }

    fn oracle(&self, t: &mut Tally) {
        let specs = [
            RSpec::one(),
            RSpec::rational(&[rat(1, 2)], &[rat(1, 3)]),
            q_rspec_from_values(&[rat(3, 4)], &[rat(2, 5)], &rat(1, 2)).expect("valid"),
        ];
        let d = 6;
        for r in &specs {
            for m in -1..=2 {
                // windows d and d+1 are built by the first call, d+1 and d+2 by the second
                let a = det_oracle_tau(r, m, d, d);
                let b = det_oracle_tau(r, m, d, d + 1);
                match (a, b) {
                    (Ok(a), Ok(b)) => {
                        t.expect(a.stable && b.stable, || format!("window not stable for {} at M={m}", r.to_json()));
                        t.report(Ok(a.report));
                        t.report(Ok(b.report));
                    }
                    (Err(e), _) | (_, Err(e)) => t.report(Err(e)),
                }
            }
        }
    }

    fn hirota(&self, t: &mut Tally) {
        for r in self.battery() {
            for m in -1..=1 {
                t.report(check_hirota(&r, m, 5));
            }
        }
    }

    fn toda(&self, t: &mut Tally) {
        for r in self.battery() {
            let standard = match r.zero_pole_scan(-3, 3) {
                Ok(pts) => !pts.iter().any(|(_, k)| *k == ZeroPole::Zero),
                Err(e) => {
                    t.report(Err(e));
                    continue;
                }
            };
            for m in -1..=1 {
                t.report(check_toda(&r, m, 5, Gauge::Generalized));
                if standard {
                    t.report(check_toda(&r, m, 5, Gauge::Standard));
                }
            }
        }
    }

    fn kp(&self, t: &mut Tally) {
        let battery = self.battery();
        let mut rng = self.rng(4);
        let specs = [battery[0].clone(), RSpec::rational(&[rat(2, 3)], &[]), battery[5].clone()];
        for r in &specs {
            t.report(check_kp_bilinear(r, rng.gen_range(-2..=2), 5));
        }
    }

    fn classical(&self, t: &mut Tally) {
        let mut rng = self.rng(5);
        let order = 10;
        let one = Scalar::one();
        for (p, s) in [(1usize, 0usize), (2, 1), (3, 2)] {
            let rest: Vec<Scalar> = (1..p).map(|_| draw(&mut rng, true)).collect();
            let b: Vec<Scalar> = (0..s).map(|_| draw(&mut rng, true)).collect();
            let mut a = vec![Scalar::zero()];
            a.extend(rest.iter().cloned());
            let r = RSpec::rational(&a, &b);
            for m in [1i64, -1] {
                // M = 1 keeps one-row partitions: pF_s(a+1; b+1; x).
                // M = -1 keeps one-column partitions: pF_s(1-a; 1-b; -x).
                let (ra, rb, x) = if m == 1 {
                    (shift_all(&rest, &one), shift_all(&b, &one), one.clone())
                } else {
                    (reflect_all(&rest), reflect_all(&b), -one.clone())
                };
                let Some(reference) = t.value("reference", classical_reference(&ra, &rb, &x, order, None)) else {
                    continue;
                };
                let two = tau_series(&r, m, order, &TimesSpec::Single(Family::T), &TimesSpec::Single(Family::B));
                if let Some(v) = t.value("tau", two) {
                    let poly = v.as_poly().expect("formal");
                    for (n, c) in reference.iter().enumerate() {
                        let mono = Monomial::from_pairs([(VarId::t(1), n as u32), (VarId::b(1), n as u32)]);
                        t.equal(&format!("p={p} M={m} n={n}"), &poly.coeff(&mono), c);
                    }
                }
                // the same with β = (1, 0, …) through the multivariate pF_s
                if let Some(v) = t.value("pfs", pfs_multivar(&a, &b, m, &TimesSpec::Single(Family::T), order)) {
                    let poly = v.as_poly().expect("formal");
                    for (n, c) in reference.iter().enumerate() {
                        let mono = Monomial::from_pairs([(VarId::t(1), n as u32)]);
                        t.equal(&format!("pfs p={p} M={m} n={n}"), &poly.coeff(&mono), c);
                    }
                }
                if p == 1 {
                    let mut fact = Scalar::one();
                    for (n, c) in reference.iter().enumerate() {
                        if n > 0 {
                            fact *= Scalar::from_int(n as i64);
                        }
                        let expected = x.pow(n as i64).expect("integer power") / &fact;
                        t.equal(&format!("exp n={n}"), c, &expected);
                    }
                }
            }
        }
    }

    fn qdiff(&self, t: &mut Tally) {
        let mut rng = self.rng(6);
        let q = rat(1, 3);
        for _ in 0..3 {
            let (qa, qb) = loop {
                let qa: Vec<Scalar> = (0..rng.gen_range(1..=3)).map(|_| draw_base(&mut rng)).collect();
                let qb: Vec<Scalar> = (0..rng.gen_range(0..=2)).map(|_| draw_base(&mut rng)).collect();
                if pole_free(&q_rspec_from_values(&qa, &qb, &q)) {
                    break (qa, qb);
                }
            };
            t.report(check_qdiff_qa(&qa, &qb, &q, 10));
        }
    }

    fn ode(&self, t: &mut Tally) {
        let mut rng = self.rng(7);
        for (p, s) in [(2, 1), (2, 1), (1, 1), (1, 1)] {
            let a: Vec<Scalar> = (0..p).map(|_| draw(&mut rng, false)).collect();
            let b: Vec<Scalar> = (0..s).map(|_| draw_positive(&mut rng)).collect();
            t.report(check_ode(&a, &b, 10));
        }
    }

    fn prop4(&self, t: &mut Tally) {
        let mut rng = self.rng(8);
        let times = TimesSpec::Generic(Family::T);
        for _ in 0..3 {
            let r = random_rational_spec(&mut rng);
            let b = draw(&mut rng, true);
            t.report(check_prop4(&r, &b, rng.gen_range(-2..=2), 5, &times));
        }
        for q in [rat(1, 2), rat(1, 3), rat(2, 5)] {
            let r = random_q_spec(&mut rng, &q);
            let qb = loop {
                let qb = draw_base(&mut rng);
                let rb = r.divided_by(RFactor::QLin { coeff: qb.clone(), shift: Scalar::zero() }, None);
                if pole_free(&rb) {
                    break qb;
                }
            };
            t.report(check_prop4_qb(&r, &qb, rng.gen_range(-2..=2), 5, &times));
        }
    }

    fn remark1(&self, t: &mut Tally) {
        let q = rat(1, 2);
        for n in 1..=3usize {
            let x: Vec<Scalar> = (0..n).map(|i| rat(1, i as i64 + 2)).collect();
            for mode in [
                Remark1Mode::QSpec { n, q: q.clone() },
                Remark1Mode::Miwa { x },
                Remark1Mode::Dual { k: n, q: q.clone() },
            ] {
                t.report(check_remark1(&mode, 7));
            }
        }
    }

    fn pochhammer(&self, t: &mut Tally) {
        let mut rng = self.rng(10);
        let parts = enumerate_up_to(6);
        for q in [rat(1, 2), rat(2, 3)] {
            let infinity = TimesSpec::PrincipalInfinityQ(q.clone());
            let mut bases: Vec<(Option<Scalar>, Scalar)> =
                [-2i64, 1, 3].into_iter().map(|a| (Some(Scalar::from_int(a)), q.pow(a).expect("nonzero q"))).collect();
            bases.push((None, draw_base(&mut rng)));
            for (a, qa) in &bases {
                let Some(spec) = t.value(
                    "spec",
                    RSpec::new(
                        Scalar::one(),
                        vec![RFactor::QLin { coeff: qa.clone(), shift: Scalar::zero() }],
                        vec![],
                        Some(q.clone()),
                    ),
                ) else {
                    continue;
                };
                let times = TimesSpec::PrincipalQ { qa: qa.clone(), q: q.clone() };
                for lam in &parts {
                    let label = format!("q={q} qa={qa} {lam}");
                    let poch = match a {
                        Some(a) => poch_partition(a, lam, Some(&q)),
                        None => poch_partition_qa(qa, lam, &q),
                    };
                    let (Some(poch), Some(c)) = (t.value(&label, poch), t.value(&label, spec.content_product(lam, 0)))
                    else {
                        continue;
                    };
                    t.equal(&label, &poch, &c);
                    let s = schur_value(lam, &times);
                    let s_inf = schur_value(lam, &infinity);
                    let closed = schur_principal_value_qa(lam, qa, &q);
                    if let (Some(s), Some(s_inf), Some(closed)) =
                        (t.value(&label, s), t.value(&label, s_inf), t.value(&label, closed))
                    {
                        t.equal(&label, &s, &closed);
                        t.equal(&label, &s, &(&poch * &s_inf));
                    }
                }
            }
        }
        // rational limit
        let a = draw(&mut rng, false);
        let spec = RSpec::rational(std::slice::from_ref(&a), &[]);
        for lam in &parts {
            let label = format!("a={a} {lam}");
            let values = (
                poch_partition(&a, lam, None),
                spec.content_product(lam, 0),
                schur_value(lam, &TimesSpec::PrincipalRational(a.clone())),
                schur_value(lam, &TimesSpec::PrincipalInfinity),
                schur_principal_value(lam, &a, None),
            );
            if let (Ok(p), Ok(c), Ok(s), Ok(si), Ok(cl)) = values {
                t.equal(&label, &p, &c);
                t.equal(&label, &s, &cl);
                t.equal(&label, &s, &(&p * &si));
            } else {
                t.expect(false, || format!("{label}: evaluation failed"));
            }
        }
    }

    fn chain(&self, t: &mut Tally) {
        let mut rng = self.rng(11);
        let (at, bt, a, b) = (draw(&mut rng, false), draw(&mut rng, true), draw(&mut rng, false), draw(&mut rng, true));
        let x = draw(&mut rng, false);
        let m = rng.gen_range(-2..=2);
        let d = 5;
        let chain = ChainSpec::new(
            vec![(
                RSpec::rational(std::slice::from_ref(&at), std::slice::from_ref(&bt)),
                TimesSpec::MiwaPlus(vec![x.clone()]),
            )],
            vec![
                (RSpec::rational(std::slice::from_ref(&a), std::slice::from_ref(&b)), TimesSpec::Single(Family::B)),
                (RSpec::one(), TimesSpec::Single(Family::T)),
            ],
        );
        let Some(chain) = t.value("chain", chain) else { return };
        let Some(tau) = t.value("tau", tau_general(&chain, m, d)) else { return };
        let tau = tau.as_poly().expect("formal");
        let mm = Scalar::from_int(m);
        let fact = |n: i64| -> Scalar { (1..=n).map(Scalar::from_int).product() };
        for n1 in 0..=d as i64 {
            for n2 in 0..=(d as i64 - n1) {
                let n = n1 + n2;
                let c = pochhammer(&(&at + &mm), n) * pochhammer(&(&a + &mm), n1)
                    / (pochhammer(&(&bt + &mm), n) * pochhammer(&(&b + &mm), n1))
                    * x.pow(n).expect("integer power")
                    / (fact(n1) * fact(n2));
                let mono = Monomial::from_pairs([(VarId::b(1), n1 as u32), (VarId::t(1), n2 as u32)]);
                t.equal(&format!("n1={n1} n2={n2}"), &tau.coeff(&mono), &c);
            }
        }
    }

    fn askey_wilson(&self, t: &mut Tally) {
        let base = AskeyWilson {
            n: 0,
            a: rat(1, 5),
            b: rat(1, 7),
            c: rat(2, 7),
            d: rat(1, 11),
            q: rat(1, 3),
            cos_eta: rat(1, 2),
        };
        for n in 0..=5 {
            let p = AskeyWilson { n, ..base.clone() };
            let Some(r) = t.value("rspec", p.rspec()) else { continue };
            // every row longer than n contains the content -n cell hit by (q^{-n}; q)
            for k in n + 1..=n + 3 {
                let row = Partition::new(vec![k as usize]).expect("row");
                if let Some(c) = t.value("row", r.content_product(&row, 0)) {
                    t.equal(&format!("n={n} row {k}"), &c, &Scalar::zero());
                }
            }
            if let Some(tail) = t.value("tail", p.tail_term(0)) {
                t.equal(&format!("n={n} tail"), &tail, &Scalar::zero());
            }
            if n == 0 {
                continue;
            }
            let Some(v) = t.value("value", p.value()) else { continue };
            let mut bc = p.clone();
            std::mem::swap(&mut bc.b, &mut bc.c);
            let mut bd = p.clone();
            std::mem::swap(&mut bd.b, &mut bd.d);
            let mut ab = p.clone();
            std::mem::swap(&mut ab.a, &mut ab.b);
            for (name, s) in [("b<->c", bc), ("b<->d", bd), ("a<->b", ab)] {
                if let Some(w) = t.value(name, s.value()) {
                    t.equal(&format!("n={n} {name}"), &v, &w);
                }
            }
        }
    }

    fn two_sided(&self, t: &mut Tally) {
        let mut rng = self.rng(13);
        let times = (TimesSpec::Generic(Family::T), TimesSpec::Generic(Family::B));
        let q = rat(1, 2);
        let pairs = [
            (random_rational_spec(&mut rng), random_rational_spec(&mut rng)),
            (random_rational_spec(&mut rng), random_rational_spec(&mut rng)),
            (random_q_spec(&mut rng, &q), random_q_spec(&mut rng, &q)),
        ];
        for (rt, r) in &pairs {
            let m = rng.gen_range(-2..=2);
            let Some(prod) = t.value("product", rt.product(r)) else { continue };
            let lhs = tau_two_sided(rt, r, m, 5, &times.0, &times.1);
            let rhs = tau_series(&prod, m, 5, &times.0, &times.1);
            if let (Some(l), Some(rr)) = (t.value("two-sided", lhs), t.value("series", rhs)) {
                t.equal(&format!("M={m}"), &l, &rr);
            }
        }
    }

    fn clebsch_gordan(&self, t: &mut Tally) {
        let q = rat(1, 2);
        let s =
            |a: i64, b: i64, c: i64, d: i64, e: i64| Spins::new(rat(a, 2), rat(b, 2), rat(c, 2), rat(d, 2), rat(e, 2));
        for sp in [s(2, 2, 2, 0, 0), s(3, 1, 2, 1, 1), s(4, 2, 4, 2, 0)] {
            let (a, b) = sp.phi_exponents();
            let len = (&sp.l1 - &sp.j).to_i64().expect("integer") as usize;
            let direct = term_recursion(&a, &b, &q, len);
            if let (Some(v), Some(d)) = (t.value("cg_phi", cg_phi(&sp, &q)), t.value("direct", direct)) {
                t.equal(&format!("{sp:?}"), &v, &d);
            }
        }
        // [a] → a along q = 1 - 2^{-k}; compare squares so even a stays rational
        for a in 1..=5i64 {
            let target = Scalar::from_int(a * a);
            let mut prev: Option<Scalar> = None;
            for k in 1..=10 {
                let qk = Scalar::one() - rat(1, 1 << k);
                let Some(sq) = t.value("bracket", q_bracket(a, &qk).and_then(|b| b.square())) else { break };
                let err = (&sq - &target).abs();
                if a == 1 {
                    t.equal("[1]", &err, &Scalar::zero());
                } else if let Some(p) = &prev {
                    t.expect(err < *p, || format!("[{a}] error not decreasing at k={k}"));
                }
                prev = Some(err);
            }
        }
    }
}

// Σ_m Π (1 - q^{a_i+m-1}) / Π (1 - q^{b_i+m-1}) · q^m / (q;q)_m, term by term.
fn term_recursion(a: &[Scalar], b: &[Scalar], q: &Scalar, len: usize) -> Result<Scalar> {
    let one = Scalar::one();
    let mut term = one.clone();
    let mut sum = one.clone();
    for m in 0..len as i64 {
        let mut num = one.clone();
        for x in a {
            num *= &one - q.rpow(&(x + &Scalar::from_int(m)))?;
        }
        let mut den = &one - q.pow(m + 1)?;
        for x in b {
            den *= &one - q.rpow(&(x + &Scalar::from_int(m)))?;
        }
        term = term * num / den * q;
        sum += &term;
    }
    Ok(sum)
}

fn schur_value(lam: &Partition, times: &TimesSpec) -> Result<Scalar> {
    Ok(schur_poly(lam, times, lam.weight())?.as_value().expect("numeric").clone())
}

fn shift_all(v: &[Scalar], by: &Scalar) -> Vec<Scalar> {
    v.iter().map(|x| x + by).collect()
}

fn reflect_all(v: &[Scalar]) -> Vec<Scalar> {
    v.iter().map(|x| Scalar::one() - x).collect()
}

fn pole_free(r: &Result<RSpec>) -> bool {
    match r {
        Ok(r) => r.integer_points().map(|p| p.iter().all(|(_, k)| *k == ZeroPole::Zero)).unwrap_or(false),
        Err(_) => false,
    }
}

/// A rational with small numerator and denominator; `non_integer` forces a
/// denominator above one.
fn draw(rng: &mut ChaCha8Rng, non_integer: bool) -> Scalar {
    loop {
        let num = rng.gen_range(-9i64..=9);
        let den = rng.gen_range(if non_integer { 2i64 } else { 1 }..=7);
        let x = rat(num, den);
        if !(non_integer && x.is_integer()) && !x.is_zero() {
            return x;
        }
    }
}

fn draw_positive(rng: &mut ChaCha8Rng) -> Scalar {
    loop {
        let x = draw(rng, true);
        if !x.is_negative() {
            return x;
        }
    }
}

/// A value for `q^a` in `(0, 2)` other than 1.
fn draw_base(rng: &mut ChaCha8Rng) -> Scalar {
    loop {
        let den = rng.gen_range(2i64..=9);
        let x = rat(rng.gen_range(1..2 * den), den);
        if !x.is_one() {
            return x;
        }
    }
}

/// `c ∏(D + a_k) / ∏(D + b_k)` with `0..=2` factors each. An `a_k` is an
/// integer in `[-3, 3]` one time in five; the `b_k` never are.
fn random_rational_spec(rng: &mut ChaCha8Rng) -> RSpec {
    let p = rng.gen_range(0..=2);
    let s = rng.gen_range(0..=2);
    let a: Vec<Scalar> = (0..p)
        .map(|_| if rng.gen_bool(0.2) { Scalar::from_int(rng.gen_range(-3..=3)) } else { draw(rng, true) })
        .collect();
    let b: Vec<Scalar> = (0..s).map(|_| draw(rng, true)).collect();
    let mut r = RSpec::rational(&a, &b);
    r.constant = draw(rng, false);
    r
}

/// Linear q-factors with random bases, sometimes a `QPair` with `|cos| < 1`.
/// Redrawn until there is no integer pole and every integer zero lies in `[-3, 3]`.
fn random_q_spec(rng: &mut ChaCha8Rng, q: &Scalar) -> RSpec {
    loop {
        let qlin = |c: Scalar| RFactor::QLin { coeff: c, shift: Scalar::zero() };
        let mut num: Vec<RFactor> = (0..rng.gen_range(1..=2)).map(|_| qlin(draw_base(rng))).collect();
        if rng.gen_bool(0.3) {
            let cosv = rat(rng.gen_range(-4..=4), 5);
            num.push(RFactor::QPair { amp: draw_base(rng), cosv });
        }
        let den: Vec<RFactor> = (0..rng.gen_range(0..=2)).map(|_| qlin(draw_base(rng))).collect();
        let Ok(r) = RSpec::new(Scalar::one(), num, den, Some(q.clone())) else { continue };
        let ok = r
            .integer_points()
            .map(|pts| pts.iter().all(|(n, k)| *k == ZeroPole::Zero && (-3..=3).contains(n)))
            .unwrap_or(false);
        if ok {
            return r;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn battery_is_deterministic() {
        let a = Suite::new(7).battery();
        let b = Suite::new(7).battery();
        assert_eq!(a, b);
        assert_eq!(a.len(), 8);
        assert!(a[5..].iter().all(RSpec::is_q));
        for r in &a {
            assert!(r.integer_points().unwrap().iter().all(|(_, k)| *k == ZeroPole::Zero));
        }
    }

    #[test]
    fn unknown_criterion_fails() {
        assert!(!Suite::default().run(99).pass);
    }
}
