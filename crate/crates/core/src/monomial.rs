//! Exponent vectors.

use std::cmp::Ordering;

/// Exponent vector of a monomial (or a derivative order), one entry per
/// variable.
///
/// The `Ord` impl is graded lexicographic: total degree first, then
/// lexicographic with the first variable most significant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(exponents: Vec<u32>) -> Self {
        MultiIndex(exponents)
    }

    pub fn zero(n: usize) -> Self {
        MultiIndex(vec![0; n])
    }

    /// The unit index `e_j` in `n` variables.
    pub fn unit(n: usize, j: usize) -> Self {
        let mut e = vec![0; n];
        e[j] = 1;
        MultiIndex(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Order `|α|`.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Componentwise `self <= other`, i.e. `x^self` divides `x^other`.
    pub fn divides(&self, other: &MultiIndex) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other`, or `None` when `other` does not divide `self`.
    pub fn checked_sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(MultiIndex)
    }

    pub fn lcm(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &MultiIndex) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// If this is a pure power `x_j^k` with `k >= 1`, returns `j`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut nonzero = self.0.iter().enumerate().filter(|(_, &e)| e > 0);
        match (nonzero.next(), nonzero.next()) {
            (Some((j, _)), None) => Some(j),
            _ => None,
        }
    }

    /// All exponent vectors in `n` variables of order at most `d`, in
    /// ascending graded-lex order.
    pub fn all_up_to(n: usize, d: u32) -> Vec<MultiIndex> {
        let mut out = Vec::new();
        for total in 0..=d {
            let mut level = Vec::new();
            let mut cur = vec![0u32; n];
            compositions(&mut cur, 0, total, &mut level);
            level.sort();
            out.extend(level);
        }
        out
    }
}

fn compositions(cur: &mut Vec<u32>, pos: usize, left: u32, out: &mut Vec<MultiIndex>) {
    if pos + 1 >= cur.len() {
        if let Some(last) = cur.last_mut() {
            *last = left;
            out.push(MultiIndex(cur.clone()));
        } else if left == 0 {
            out.push(MultiIndex(Vec::new()));
        }
        return;
    }
    for e in 0..=left {
        cur[pos] = e;
        compositions(cur, pos + 1, left - e, out);
    }
    cur[pos] = 0;
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<u32>> for MultiIndex {
    fn from(v: Vec<u32>) -> Self {
        MultiIndex(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex::new(v.to_vec())
    }

    #[test]
    fn grlex_order() {
        assert!(mi(&[0, 1]) < mi(&[1, 0]));
        assert!(mi(&[1, 0]) < mi(&[0, 2]));
        assert!(mi(&[1, 1]) < mi(&[2, 0]));
        assert!(mi(&[0, 0]) < mi(&[0, 1]));
    }

    #[test]
    fn enumeration_counts() {
        // binomial(n + d, d)
        assert_eq!(MultiIndex::all_up_to(2, 3).len(), 10);
        assert_eq!(MultiIndex::all_up_to(3, 4).len(), 35);
        assert_eq!(MultiIndex::all_up_to(1, 5).len(), 6);
        let v = MultiIndex::all_up_to(2, 2);
        assert!(v.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(v[0], mi(&[0, 0]));
    }

    #[test]
    fn divisibility() {
        assert!(mi(&[1, 0]).divides(&mi(&[2, 1])));
        assert!(!mi(&[0, 2]).divides(&mi(&[2, 1])));
        assert_eq!(mi(&[2, 1]).checked_sub(&mi(&[1, 1])), Some(mi(&[1, 0])));
        assert_eq!(mi(&[0, 3]).pure_power_var(), Some(1));
        assert_eq!(mi(&[1, 3]).pure_power_var(), None);
        assert_eq!(mi(&[0, 0]).pure_power_var(), None);
    }
}
