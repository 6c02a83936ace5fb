//! Integer partitions and the combinatorics the series need: conjugates,
//! contents, hooks, the `n(λ)` statistic, Frobenius coordinates and skew
//! shapes.
//!
//! Cells are 1-based `(row, column)` pairs; the content of `(i, j)` is `j - i`.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Result, TauError};
use crate::scalar::Scalar;

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(TauError::InvalidParams(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(TauError::InvalidParams(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Builds from a list that may end in zeros.
    pub fn from_padded(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i` with 1-based `i`, zero past the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(1);
        let parts = (1..=first).map(|j| self.parts.iter().filter(|&&p| p >= j).count()).collect();
        Partition { parts }
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().enumerate().flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    pub fn contents(&self) -> Vec<i64> {
        self.cells().map(|(i, j)| j as i64 - i as i64).collect()
    }

    /// `inner ⊆ self` as Young diagrams.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n_stat(&self) -> u64 {
        self.parts.iter().enumerate().map(|(i, &p)| (i * p) as u64).sum()
    }

    /// Hook lengths, row by row.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i0, &p)| {
                let i = i0 + 1;
                (1..=p).map(|j| p + conj.part(j) + 1 - i - j).collect()
            })
            .collect()
    }

    pub fn hook_data(&self, q: Option<&Scalar>) -> HookData {
        let hooks = self.hook_lengths();
        let hook_product = hooks.iter().flatten().map(|&h| Scalar::from_int(h as i64)).product();
        let q_hook = q.map(|q| {
            hooks.iter().flatten().map(|&h| Scalar::one() - q.pow(h as i64).expect("positive exponent")).product()
        });
        HookData { hooks, hook_product, q_hook, n_stat: self.n_stat() }
    }

    /// `H_λ = ∏ h_{ij}`.
    pub fn hook_product(&self) -> Scalar {
        self.hook_lengths().iter().flatten().map(|&h| Scalar::from_int(h as i64)).product()
    }

    /// `H_λ(q) = ∏ (1 - q^{h_{ij}})`.
    pub fn q_hook_product(&self, q: &Scalar) -> Scalar {
        self.hook_lengths()
            .iter()
            .flatten()
            .map(|&h| Scalar::one() - q.pow(h as i64).expect("positive exponent"))
            .product()
    }

    /// Frobenius coordinates `(a | b)` with `a_i = λ_i - i`, `b_i = λ'_i - i`
    /// for `i` along the main diagonal.
    pub fn frobenius(&self) -> (Vec<usize>, Vec<usize>) {
        let conj = self.conjugate();
        let r = (1..=self.len()).take_while(|&i| self.part(i) >= i).count();
        let a = (1..=r).map(|i| self.part(i) - i).collect();
        let b = (1..=r).map(|i| conj.part(i) - i).collect();
        (a, b)
    }

    pub fn from_frobenius(a: &[usize], b: &[usize]) -> Result<Partition> {
        if a.len() != b.len() || a.windows(2).any(|w| w[0] <= w[1]) || b.windows(2).any(|w| w[0] <= w[1]) {
            return Err(TauError::InvalidParams(format!("invalid Frobenius coordinates ({a:?} | {b:?})")));
        }
        let r = a.len();
        let rows = b.first().map_or(0, |b1| b1 + 1);
        let mut parts = vec![0usize; rows];
        for i in 1..=r {
            parts[i - 1] = a[i - 1] + i;
        }
        // rows below the Durfee square: one cell per column j with λ'_j = b_j + j ≥ row
        for (i, part) in parts.iter_mut().enumerate().skip(r) {
            let row = i + 1;
            *part = (1..=r).filter(|&j| b[j - 1] + j >= row).count();
        }
        Partition::from_padded(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct HookData {
    pub hooks: Vec<Vec<usize>>,
    pub hook_product: Scalar,
    pub q_hook: Option<Scalar>,
    pub n_stat: u64,
}

/// All partitions of `n`, largest first part first (reverse lexicographic).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=n.min(max)).rev() {
            prefix.push(p);
            rec(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every partition of weight `0..=d`, grade ascending, reverse lexicographic within a grade.
pub fn enumerate_up_to(d: usize) -> Vec<Partition> {
    (0..=d).flat_map(partitions_of).collect()
}

/// Partitions contained in `outer` (including `∅` and `outer` itself).
pub fn sub_partitions(outer: &Partition) -> Vec<Partition> {
    fn rec(outer: &Partition, i: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i > outer.len() {
            out.push(Partition::from_padded(prefix.clone()).expect("weakly decreasing by construction"));
            return;
        }
        let hi = outer.part(i).min(max);
        for p in (0..=hi).rev() {
            prefix.push(p);
            rec(outer, i + 1, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(outer, 1, usize::MAX, &mut Vec::new(), &mut out);
    out
}

/// `outer / inner` with `inner ⊆ outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(TauError::NotContained { outer: outer.to_string(), inner: inner.to_string() });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn weight(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }

    /// Cells of the outer diagram not in the inner one, row-major.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (1..=self.outer.len())
            .flat_map(|i| (self.inner.part(i) + 1..=self.outer.part(i)).map(move |j| (i, j)))
            .collect()
    }
}

/// Cells of `outer / inner`; fails when `inner ⊄ outer`.
pub fn skew_cells(outer: &Partition, inner: &Partition) -> Result<Vec<(usize, usize)>> {
    Ok(SkewShape::new(outer.clone(), inner.clone())?.cells())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use std::collections::BTreeSet;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Oracle: every weakly decreasing sequence found by filtering all
    /// compositions of `n`.
    fn brute_partitions(n: usize) -> BTreeSet<Vec<usize>> {
        fn comps(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for first in 1..=n {
                for mut rest in comps(n - first) {
                    rest.insert(0, first);
                    out.push(rest);
                }
            }
            out
        }
        comps(n).into_iter().filter(|c| c.windows(2).all(|w| w[0] >= w[1])).collect()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_up_to(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(5).len(), 7);
        assert_eq!(enumerate_up_to(3).len(), 7);
        for n in 0..=8 {
            let ours: BTreeSet<Vec<usize>> = partitions_of(n).iter().map(|p| p.parts().to_vec()).collect();
            assert_eq!(ours, brute_partitions(n));
            assert_eq!(ours.len(), partitions_of(n).len());
        }
    }

    #[test]
    fn enumeration_order() {
        let w3: Vec<String> = partitions_of(3).iter().map(|p| p.to_string()).collect();
        assert_eq!(w3, ["[3]", "[2,1]", "[1,1,1]"]);
        let d2: Vec<String> = enumerate_up_to(2).iter().map(|p| p.to_string()).collect();
        assert_eq!(d2, ["[]", "[1]", "[2]", "[1,1]"]);
    }

    #[test]
    fn conjugation() {
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[3]).conjugate(), p(&[1, 1, 1]));
        for lam in enumerate_up_to(8) {
            let c = lam.conjugate();
            assert_eq!(c.conjugate(), lam);
            assert_eq!(c.weight(), lam.weight());
            assert_eq!(lam.len(), c.part(1));
        }
    }

    /// Oracle: arm and leg counted by walking the diagram cell by cell.
    fn brute_hooks(lam: &Partition) -> Vec<usize> {
        let cells: BTreeSet<(usize, usize)> = lam.cells().collect();
        cells
            .iter()
            .map(|&(i, j)| {
                let arm = cells.iter().filter(|&&(a, b)| a == i && b > j).count();
                let leg = cells.iter().filter(|&&(a, b)| b == j && a > i).count();
                arm + leg + 1
            })
            .collect()
    }

    #[test]
    fn hooks_match_brute_force() {
        let h = p(&[2, 1]).hook_data(Some(&rat(1, 3)));
        assert_eq!(h.hooks, vec![vec![3, 1], vec![1]]);
        assert_eq!(h.hook_product, Scalar::from_int(3));
        assert_eq!(h.n_stat, 1);
        let q = rat(1, 3);
        let one = Scalar::one();
        let expected = (&one - q.pow(3).unwrap()) * (&one - &q) * (&one - &q);
        assert_eq!(h.q_hook, Some(expected));

        let e = Partition::empty().hook_data(Some(&q));
        assert_eq!(e.hook_product, Scalar::one());
        assert_eq!(e.q_hook, Some(Scalar::one()));
        assert_eq!(e.n_stat, 0);

        for lam in enumerate_up_to(8) {
            let flat: Vec<usize> = lam.hook_lengths().into_iter().flatten().collect();
            assert_eq!(flat, brute_hooks(&lam));
            assert_eq!(lam.cells().count(), lam.weight());
            let mut a = flat.clone();
            let mut b: Vec<usize> = lam.conjugate().hook_lengths().into_iter().flatten().collect();
            a.sort();
            b.sort();
            assert_eq!(a, b);
            let alt: u64 = lam.conjugate().parts().iter().map(|&c| (c * c.saturating_sub(1) / 2) as u64).sum();
            assert_eq!(lam.n_stat(), alt);
        }
    }

    #[test]
    fn frobenius_coordinates() {
        assert_eq!(p(&[2, 1]).frobenius(), (vec![1], vec![1]));
        assert_eq!(p(&[1]).frobenius(), (vec![0], vec![0]));
        assert_eq!(p(&[3, 3, 1]).frobenius(), (vec![2, 1], vec![2, 0]));
        for lam in enumerate_up_to(8) {
            let (a, b) = lam.frobenius();
            // diagonal length by brute force
            let diag = lam.cells().filter(|&(i, j)| i == j).count();
            assert_eq!(a.len(), diag);
            assert_eq!(Partition::from_frobenius(&a, &b).unwrap(), lam);
        }
    }

    #[test]
    fn skew_shapes() {
        assert_eq!(skew_cells(&p(&[2, 1]), &p(&[1])).unwrap(), vec![(1, 2), (2, 1)]);
        assert!(skew_cells(&p(&[2, 1]), &p(&[2, 1])).unwrap().is_empty());
        assert!(skew_cells(&p(&[2]), &p(&[1, 1])).is_err());
        // brute-force set difference
        let outer = p(&[3, 2]);
        let inner = p(&[1, 1]);
        let a: BTreeSet<_> = outer.cells().collect();
        let b: BTreeSet<_> = inner.cells().collect();
        let diff: Vec<_> = a.difference(&b).copied().collect();
        assert_eq!(skew_cells(&outer, &inner).unwrap(), diff);
        assert_eq!(diff, vec![(1, 2), (1, 3), (2, 2)]);
    }

    #[test]
    fn sub_partitions_are_contained() {
        let outer = p(&[3, 2, 1]);
        let subs = sub_partitions(&outer);
        let expected: Vec<_> = enumerate_up_to(6).into_iter().filter(|m| outer.contains(m)).collect();
        assert_eq!(subs.len(), expected.len());
        assert!(subs.iter().all(|m| outer.contains(m)));
    }

    #[test]
    fn json_form() {
        assert_eq!(serde_json::to_string(&p(&[2, 1])).unwrap(), "[2,1]");
        let q: Partition = serde_json::from_str("[3,1]").unwrap();
        assert_eq!(q, p(&[3, 1]));
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}
