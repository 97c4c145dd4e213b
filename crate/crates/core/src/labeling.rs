use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A bijection from vertices `1..=n` to labels `1..=n`.
///
/// Serialized as the permutation array `[L(1), L(2), ..., L(n)]`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Labeling {
    perm: Vec<usize>,
}

impl Labeling {
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        if n > MAX_VERTICES {
            return Err(Error::Guard {
                what: "labeling length",
                limit: MAX_VERTICES,
                got: n,
            });
        }
        let mut seen = VertexSet::EMPTY;
        for &l in &perm {
            if l == 0 || l > n || seen.contains(l) {
                return Err(Error::invalid(format!(
                    "{perm:?} is not a permutation of 1..={n}"
                )));
            }
            seen = seen.with(l);
        }
        Ok(Labeling { perm })
    }

    pub fn identity(n: usize) -> Self {
        Labeling {
            perm: (1..=n).collect(),
        }
    }

    /// The labeling that gives label `i + 1` to `order[i]`.
    pub fn from_order(order: &[usize]) -> Result<Self> {
        let n = order.len();
        let mut perm = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            if v == 0 || v > n || perm[v - 1] != 0 {
                return Err(Error::invalid(format!(
                    "{order:?} is not an ordering of 1..={n}"
                )));
            }
            perm[v - 1] = i + 1;
        }
        Ok(Labeling { perm })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.perm.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    #[inline]
    pub fn label_of(&self, v: usize) -> usize {
        self.perm[v - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.perm
    }

    /// Vertices listed by increasing label.
    pub fn order(&self) -> Vec<usize> {
        let mut order = vec![0; self.len()];
        for (i, &l) in self.perm.iter().enumerate() {
            order[l - 1] = i + 1;
        }
        order
    }

    pub fn inverse(&self) -> Labeling {
        Labeling { perm: self.order() }
    }

    /// Image of a vertex set.
    #[inline]
    pub fn apply(&self, s: VertexSet) -> VertexSet {
        s.iter().map(|v| self.perm[v - 1]).collect()
    }

    /// Every labeling of `1..=n`, in lexicographic order of the permutation array.
    pub fn all(n: usize) -> impl Iterator<Item = Labeling> {
        itertools::Itertools::permutations(1..=n, n).map(|perm| Labeling { perm })
    }
}

impl TryFrom<Vec<usize>> for Labeling {
    type Error = Error;
    fn try_from(perm: Vec<usize>) -> Result<Self> {
        Labeling::new(perm)
    }
}

impl From<Labeling> for Vec<usize> {
    fn from(l: Labeling) -> Vec<usize> {
        l.perm
    }
}

impl fmt::Debug for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Labeling{:?}", self.perm)
    }
}

impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.perm.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Parses `2,1,3` (commas or whitespace).
impl FromStr for Labeling {
    type Err = Error;
    fn from_str(s: &str) -> Result<Labeling> {
        let perm = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::invalid(format!("bad label `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Labeling::new(perm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_inverse() {
        let l = Labeling::new(vec![3, 1, 2]).unwrap();
        assert_eq!(l.order(), vec![2, 3, 1]);
        assert_eq!(Labeling::from_order(&[2, 3, 1]).unwrap(), l);
        assert_eq!(l.inverse().inverse(), l);
        let s: VertexSet = [1, 2].iter().collect();
        assert_eq!(l.apply(s).to_vec(), vec![1, 3]);
        assert!(Labeling::new(vec![1, 1]).is_err());
        assert!(Labeling::new(vec![0, 1]).is_err());
        assert!(Labeling::from_order(&[1, 1]).is_err());
        assert_eq!("2, 1,3".parse::<Labeling>().unwrap().as_slice(), &[2, 1, 3]);
        assert_eq!(Labeling::all(4).count(), 24);
    }

    #[test]
    fn serde_as_array() {
        let l = Labeling::new(vec![2, 1, 3]).unwrap();
        let json = serde_json::to_string(&l).unwrap();
        assert_eq!(json, "[2,1,3]");
        assert_eq!(serde_json::from_str::<Labeling>(&json).unwrap(), l);
        assert!(serde_json::from_str::<Labeling>("[1,1]").is_err());
    }
}
