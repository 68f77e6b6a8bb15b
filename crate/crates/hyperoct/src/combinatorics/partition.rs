//! Integer partitions and compositions.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// An integer partition: a weakly decreasing sequence of positive parts.
/// The empty partition is valid and denotes the unique partition of 0.
///
/// Partitions serialize as plain integer arrays, e.g. `[3,2,1]`; the empty
/// partition serializes as `[]`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
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

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

impl Partition {
    /// Builds a partition, rejecting zero parts and non-decreasing order.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidArgument("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "partition parts must be weakly decreasing, got {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from an unordered list of parts, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part, or 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Transpose of the Young diagram. Involutive; `[] -> []`.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let mut parts = Vec::with_capacity(cols);
        for c in 0..cols as u32 {
            parts.push(self.parts.iter().filter(|&&p| p > c).count() as u32);
        }
        Partition { parts }
    }

    /// Containment of Young diagrams: `self_i <= other_i` for all rows.
    pub fn contained_in(&self, other: &Partition) -> bool {
        self.parts
            .iter()
            .enumerate()
            .all(|(i, &p)| p <= other.part(i))
    }

    /// All partitions obtained by adding one box.
    pub fn add_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for row in 0..=self.parts.len() {
            let cur = self.part(row);
            let above = if row == 0 { u32::MAX } else { self.part(row - 1) };
            if cur < above {
                let mut parts = self.parts.clone();
                if row == self.parts.len() {
                    parts.push(1);
                } else {
                    parts[row] += 1;
                }
                out.push(Partition { parts });
            }
        }
        out.sort_by(|a, b| a.cmp_revlex(b));
        out
    }

    /// All partitions obtained from `self` by adding a `k`-strip of the given
    /// orientation. For `k = 1` the orientation is ignored. A horizontal
    /// strip places no two boxes in the same column; a vertical strip no two
    /// in the same row. Results come back sorted in the canonical
    /// reverse-lexicographic order.
    pub fn add_strip(&self, k: u32, orientation: StripOrientation) -> Vec<Partition> {
        assert!(k == 1 || k == 2, "strips of size 1 or 2 only");
        if k == 1 {
            return self.add_box();
        }
        let mut out = Vec::new();
        for candidate in partitions_of(self.size() + k) {
            if !self.contained_in(&candidate) {
                continue;
            }
            let ok = match orientation {
                StripOrientation::Horizontal => {
                    let sc = self.conjugate();
                    let cc = candidate.conjugate();
                    (0..cc.len()).all(|i| cc.part(i) - sc.part(i) <= 1)
                }
                StripOrientation::Vertical => {
                    (0..candidate.len()).all(|i| candidate.part(i) - self.part(i) <= 1)
                }
            };
            if ok {
                out.push(candidate);
            }
        }
        out
    }

    /// Canonical order: reverse-lexicographic for equal sizes, smaller size
    /// first otherwise. `(3) < (2,1) < (1,1,1)` within size 3.
    pub fn cmp_revlex(&self, other: &Partition) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| {
                for i in 0..self.parts.len().max(other.parts.len()) {
                    match other.part(i).cmp(&self.part(i)) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_revlex(other)
    }
}

/// Orientation of a 2-strip: horizontal strips arise from inducing with a
/// trivial `S_2` factor, vertical strips from a sign factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StripOrientation {
    Horizontal,
    Vertical,
}

/// All partitions of `n` in reverse-lexicographic order: `(n)` first,
/// `(1^n)` last. Deterministic.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: current.clone() });
            return;
        }
        let top = remaining.min(max_part);
        for p in (1..=top).rev() {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out
}

/// A composition: a finite sequence of nonnegative integers. Zero parts are
/// permitted (they index empty tensor factors in Young-subgroup inductions).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Composition {
    pub parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Composition { parts }
    }

    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
    }

    #[test]
    fn conjugate_involutive() {
        for n in 0..=12 {
            for lam in partitions_of(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
    }

    #[test]
    fn partitions_of_order_and_count() {
        let p3 = partitions_of(3);
        assert_eq!(p3, vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(5).len(), 7);
    }

    #[test]
    fn strip_examples() {
        assert_eq!(p(&[1]).add_strip(1, StripOrientation::Horizontal), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(
            p(&[1]).add_strip(2, StripOrientation::Horizontal),
            vec![p(&[3]), p(&[2, 1])]
        );
        assert_eq!(
            p(&[1]).add_strip(2, StripOrientation::Vertical),
            vec![p(&[2, 1]), p(&[1, 1, 1])]
        );
        // Horizontal 2-strip on the empty partition is (2) alone.
        assert_eq!(
            Partition::empty().add_strip(2, StripOrientation::Horizontal),
            vec![p(&[2])]
        );
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn serde_as_int_array() {
        let lam = p(&[3, 2, 1]);
        assert_eq!(serde_json::to_string(&lam).unwrap(), "[3,2,1]");
        assert_eq!(serde_json::to_string(&Partition::empty()).unwrap(), "[]");
        let back: Partition = serde_json::from_str("[3,2,1]").unwrap();
        assert_eq!(back, lam);
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}
