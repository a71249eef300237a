//! Partitions, μ-vectors and inner corners.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A partition in canonical form: weakly decreasing positive parts, no
/// trailing zeros. The empty partition is a regular value.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Canonicalizes a list of non-negative integers, stripping trailing zeros.
    pub fn new(raw: &[u32]) -> Result<Self> {
        if let Some(position) = raw.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing { position: position + 1 });
        }
        let len = raw.iter().rposition(|&p| p > 0).map_or(0, |i| i + 1);
        Ok(Partition { parts: raw[..len].to_vec() })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// Rectangle `(width^rows)`.
    pub fn rectangle(width: u32, rows: usize) -> Self {
        if width == 0 {
            return Partition::empty();
        }
        Partition { parts: alloc::vec![width; rows] }
    }

    /// Builds a partition from signed parts, stripping zeros. Used where a
    /// formula may legitimately produce trailing zeros but never negatives.
    pub(crate) fn from_signed(raw: &[i64]) -> Result<Self> {
        if let Some(position) = raw.iter().position(|&p| p < 0) {
            return Err(Error::NegativePart { position: position + 1 });
        }
        let parts: Vec<u32> = raw.iter().map(|&p| p as u32).collect();
        Partition::new(&parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// ℓ(λ), the number of non-zero parts.
    pub fn height(&self) -> usize {
        self.parts.len()
    }

    /// |λ|, the sum of parts.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// λ_i with 1-based `i`; zero beyond the height.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// The conjugate partition, λ'_i = #{ j : λ_j ≥ i }.
    pub fn conjugate(&self) -> Partition {
        let first = self.part(1);
        let parts = (1..=first)
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count() as u32)
            .collect();
        Partition { parts }
    }

    /// μ = λ − δ^(N), i.e. μ_i = λ_i − i + 1 for i = 1..N.
    pub fn to_mu(&self, n: usize) -> Result<MuVector> {
        if n < self.height() || n == 0 {
            return Err(Error::NTooSmall { n, height: self.height() });
        }
        let entries = (1..=n).map(|i| self.part(i) as i64 - i as i64 + 1).collect();
        Ok(MuVector { entries })
    }

    /// Distinct parts with multiplicities, `[(ξ_1, m_1), …, (ξ_k, m_k)]`.
    pub fn distinct_parts(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((value, mult)) if *value == p => *mult += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Cumulative multiplicities `y_0 = 0, y_i = y_{i−1} + m_i`, i = 0..k.
    pub fn corner_heights(&self) -> Vec<usize> {
        let mut ys = Vec::with_capacity(self.parts.len() + 1);
        ys.push(0);
        for (_, m) in self.distinct_parts() {
            let last = *ys.last().unwrap();
            ys.push(last + m);
        }
        ys
    }

    /// The inner corner set `(ξ_i, y_{i−1})`, i = 1..k+1, with ξ_{k+1} = 0.
    /// The empty diagram has the single degenerate corner (0,0).
    pub fn inner_corners(&self) -> Vec<InnerCorner> {
        let distinct = self.distinct_parts();
        let ys = self.corner_heights();
        distinct
            .iter()
            .map(|&(xi, _)| xi)
            .chain(core::iter::once(0))
            .zip(ys)
            .enumerate()
            .map(|(i, (x, y))| InnerCorner { x, y: y as u32, index: i + 1 })
            .collect()
    }

    /// Rebuilds a diagram from corner coordinates `(x, y)` ordered top to
    /// bottom. Neighbouring corners may coincide in one coordinate, in which
    /// case the rows merge; the last corner must sit on the y axis.
    pub fn from_corners(corners: &[(u32, u32)]) -> Result<Self> {
        let (first, last) = match (corners.first(), corners.last()) {
            (Some(f), Some(l)) => (f, l),
            _ => return Err(Error::MalformedCorners),
        };
        if first.1 != 0 || last.0 != 0 {
            return Err(Error::MalformedCorners);
        }
        if corners.windows(2).any(|w| w[0].0 < w[1].0 || w[0].1 > w[1].1) {
            return Err(Error::MalformedCorners);
        }
        let mut parts = Vec::new();
        for w in corners.windows(2) {
            let rows = (w[1].1 - w[0].1) as usize;
            parts.extend(core::iter::repeat_n(w[0].0, rows));
        }
        Partition::new(&parts)
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_weight(n: u32) -> Vec<Partition> {
        fn rec(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: prefix.clone() });
                return;
            }
            for first in (1..=rest.min(max)).rev() {
                prefix.push(first);
                rec(rest - first, first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of weight at most `n`, ordered by weight.
    pub fn all_up_to_weight(n: u32) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of_weight).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// A corner `α_i = (ξ_i, y_{i−1})` of the inner corner set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct InnerCorner {
    /// Column coordinate ξ_i.
    pub x: u32,
    /// Row coordinate y_{i−1}.
    pub y: u32,
    /// 1-based position in the corner set, counted from the top.
    pub index: usize,
}

/// Strictly decreasing vector `μ = λ − δ^(N)` labelling Jacobi–Trudi rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MuVector {
    entries: Vec<i64>,
}

impl MuVector {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if let Some(position) = entries.windows(2).position(|w| w[0] <= w[1]) {
            return Err(Error::NotStrictlyDecreasing { position: position + 1 });
        }
        Ok(MuVector { entries })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// N, the number of Jacobi–Trudi rows.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Inverse of [`Partition::to_mu`]: λ_i = μ_i + i − 1.
    pub fn to_partition(&self) -> Result<Partition> {
        let raw: Vec<i64> =
            self.entries.iter().enumerate().map(|(i, &m)| m + i as i64).collect();
        if let Some(position) = raw.iter().position(|&p| p < 0) {
            return Err(Error::NegativePart { position: position + 1 });
        }
        Partition::from_signed(&raw)
    }

    /// Complete peeling at μ level: drop μ_1, append 1 − N.
    pub fn peel_complete(&self) -> MuVector {
        let n = self.entries.len() as i64;
        let mut entries: Vec<i64> = self.entries.iter().skip(1).copied().collect();
        entries.push(1 - n);
        MuVector { entries }
    }

    /// Partial down-peeling at row `r` (1-based): drop μ_r, append 1 − N.
    pub fn peel_down(&self, r: usize) -> Result<MuVector> {
        let n = self.entries.len();
        if r == 0 || r > n {
            return Err(Error::RowOutOfRange { row: r, height: n });
        }
        let mut entries = self.entries.clone();
        entries.remove(r - 1);
        entries.push(1 - n as i64);
        Ok(MuVector { entries })
    }

    /// Partial up-peeling from box `(r, s)`:
    /// `[μ_2, …, μ_r, μ_{r+1} + s, μ_{r+1}, …, μ_N]`, with `μ_{N+1}` read as
    /// `−N` when `r = N`.
    pub fn peel_up(&self, r: usize, s: u32) -> Result<MuVector> {
        let n = self.entries.len();
        if r == 0 || r > n {
            return Err(Error::RowOutOfRange { row: r, height: n });
        }
        let next = self.entries.get(r).copied().unwrap_or(-(n as i64));
        let mut entries: Vec<i64> = self.entries[1..r].to_vec();
        entries.push(next + s as i64);
        entries.extend_from_slice(&self.entries[r..]);
        MuVector::new(entries).map_err(|_| Error::InvalidStartBox { row: r, offset: s })
    }

    /// Border-strip addition at μ level: for a strip in rows `r..=r_m`
    /// the entries `μ_r, …, μ_{r_m − 1}` move down one place, `μ_{r_m}`
    /// disappears and `μ_r + t` takes position `r`.
    pub fn add_strip(&self, r: usize, m: usize, t: u32) -> Result<MuVector> {
        let n = self.entries.len();
        let end = r + m - 1;
        if r == 0 || m == 0 || end > n {
            return Err(Error::RowOutOfRange { row: end, height: n });
        }
        let mut entries = self.entries.clone();
        let head = entries[r - 1] + t as i64;
        for i in (r..end).rev() {
            entries[i] = entries[i - 1];
        }
        entries[r - 1] = head;
        MuVector::new(entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(raw: &[u32]) -> Partition {
        Partition::new(raw).unwrap()
    }

    #[test]
    fn canonical_form_strips_zeros() {
        assert_eq!(p(&[2, 1, 1, 0, 0]).parts(), &[2, 1, 1]);
        assert_eq!(p(&[8, 7, 4, 4, 4, 2, 2]).parts(), &[8, 7, 4, 4, 4, 2, 2]);
        assert_eq!(Partition::new(&[1, 2]), Err(Error::NotWeaklyDecreasing { position: 1 }));
        assert_eq!(Partition::new(&[2, 0, 1]), Err(Error::NotWeaklyDecreasing { position: 2 }));
        assert!(p(&[0, 0]).is_empty());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[2, 1, 1]).conjugate(), p(&[3, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[3, 3]).conjugate(), p(&[2, 2, 2]));
    }

    #[test]
    fn mu_examples() {
        assert_eq!(p(&[2, 1, 1]).to_mu(3).unwrap().entries(), &[2, 0, -1]);
        assert_eq!(p(&[2, 1, 1]).to_mu(5).unwrap().entries(), &[2, 0, -1, -3, -4]);
        assert_eq!(Partition::empty().to_mu(2).unwrap().entries(), &[0, -1]);
        assert_eq!(p(&[2, 1, 1]).to_mu(2), Err(Error::NTooSmall { n: 2, height: 3 }));

        let mu = MuVector::new(vec![2, 0, -1]).unwrap();
        assert_eq!(mu.to_partition().unwrap(), p(&[2, 1, 1]));
        let mu = MuVector::new(vec![5, 4, 3]).unwrap();
        assert_eq!(mu.to_partition().unwrap(), p(&[5, 5, 5]));
        assert_eq!(
            MuVector::new(vec![2, 2, 0]),
            Err(Error::NotStrictlyDecreasing { position: 1 })
        );
        let mu = MuVector::new(vec![0, -3]).unwrap();
        assert_eq!(mu.to_partition(), Err(Error::NegativePart { position: 2 }));
    }

    #[test]
    fn distinct_parts_and_corners() {
        let lam = p(&[6, 5, 2, 2, 1]);
        assert_eq!(lam.distinct_parts(), vec![(6, 1), (5, 1), (2, 2), (1, 1)]);
        assert_eq!(p(&[3, 3]).distinct_parts(), vec![(3, 2)]);
        assert!(Partition::empty().distinct_parts().is_empty());
        assert_eq!(lam.corner_heights(), vec![0, 1, 2, 4, 5]);

        let xy = |l: &Partition| l.inner_corners().iter().map(|c| (c.x, c.y)).collect::<Vec<_>>();
        assert_eq!(xy(&lam), vec![(6, 0), (5, 1), (2, 2), (1, 4), (0, 5)]);
        assert_eq!(xy(&p(&[3, 3])), vec![(3, 0), (0, 2)]);
        assert_eq!(xy(&Partition::empty()), vec![(0, 0)]);
    }

    #[test]
    fn corners_rebuild_every_small_diagram() {
        for lam in Partition::all_up_to_weight(12) {
            let corners: Vec<_> = lam.inner_corners().iter().map(|c| (c.x, c.y)).collect();
            assert_eq!(Partition::from_corners(&corners).unwrap(), lam);
            let ys: Vec<u32> = corners.iter().map(|c| c.1).collect();
            assert!(corners.windows(2).all(|w| w[0].0 > w[1].0));
            assert!(ys.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn conjugation_is_an_involution() {
        for lam in Partition::all_up_to_weight(12) {
            let c = lam.conjugate();
            assert_eq!(c.conjugate(), lam);
            assert_eq!(c.weight(), lam.weight());
            assert_eq!(c.height() as u32, lam.part(1));
        }
    }

    #[test]
    fn mu_round_trip() {
        for lam in Partition::all_up_to_weight(10) {
            for n in lam.height().max(1)..=lam.height() + 3 {
                let mu = lam.to_mu(n).unwrap();
                assert!(mu.entries().windows(2).all(|w| w[0] > w[1]));
                assert_eq!(mu.to_partition().unwrap(), lam);
            }
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| Partition::all_of_weight(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }
}
