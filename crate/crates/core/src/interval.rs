//! Closed intervals with exact rational endpoints.

use std::fmt;

use num_rational::Rational64;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

pub type Endpoint = Rational64;

/// Formats as `p/q` always, including integers (`3/1`).
pub fn format_rational(r: &Endpoint) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `p/q` or a bare integer `p`.
pub fn parse_rational(s: &str) -> Result<Endpoint> {
    let bad = || Error::invalid(format!("bad rational `{s}`"));
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Rational64::new(p, q))
        }
        None => Ok(Rational64::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    left: Endpoint,
    right: Endpoint,
}

impl Interval {
    pub fn new(left: Endpoint, right: Endpoint) -> Result<Self> {
        if left > right {
            return Err(Error::invalid(format!(
                "interval [{}, {}] has left > right",
                format_rational(&left),
                format_rational(&right)
            )));
        }
        Ok(Interval { left, right })
    }

    pub fn from_integers(left: i64, right: i64) -> Result<Self> {
        Interval::new(left.into(), right.into())
    }

    pub fn left(&self) -> Endpoint {
        self.left
    }

    pub fn right(&self) -> Endpoint {
        self.right
    }

    pub fn length(&self) -> Endpoint {
        self.right - self.left
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.left <= other.right && other.left <= self.right
    }

    /// `self ⊊ other`.
    pub fn properly_inside(&self, other: &Interval) -> bool {
        other.left <= self.left && self.right <= other.right && self != other
    }

    pub fn shifted(&self, by: Endpoint) -> Interval {
        Interval {
            left: self.left + by,
            right: self.right + by,
        }
    }

    pub fn scaled(&self, by: Endpoint) -> Interval {
        debug_assert!(by > Endpoint::zero());
        Interval {
            left: self.left * by,
            right: self.right * by,
        }
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.left, self.right)
    }
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [format_rational(&self.left), format_rational(&self.right)].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Interval {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [l, r] = <[String; 2]>::deserialize(d)?;
        let l = parse_rational(&l).map_err(serde::de::Error::custom)?;
        let r = parse_rational(&r).map_err(serde::de::Error::custom)?;
        Interval::new(l, r).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationFlags {
    pub unit: bool,
    pub proper: bool,
}

/// One closed interval per vertex; `intervals[v - 1]` belongs to vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntervalSystem {
    intervals: Vec<Interval>,
}

impl IntervalSystem {
    pub fn new(intervals: Vec<Interval>) -> Self {
        IntervalSystem { intervals }
    }

    pub fn from_integer_pairs(pairs: &[(i64, i64)]) -> Result<Self> {
        pairs
            .iter()
            .map(|&(l, r)| Interval::from_integers(l, r))
            .collect::<Result<Vec<_>>>()
            .map(IntervalSystem::new)
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn get(&self, v: usize) -> &Interval {
        &self.intervals[v - 1]
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    /// Whether the union of the intervals of `s` is a single interval.
    ///
    /// Sort by left endpoint and sweep the running right maximum; closed
    /// intervals that only touch still merge. The empty union is not an interval.
    pub fn union_is_interval(&self, s: VertexSet) -> bool {
        let mut members: Vec<&Interval> = s.iter().map(|v| &self.intervals[v - 1]).collect();
        if members.is_empty() {
            return false;
        }
        members.sort_by_key(|a| a.left);
        let mut reach = members[0].right;
        for iv in &members[1..] {
            if iv.left > reach {
                return false;
            }
            reach = reach.max(iv.right);
        }
        true
    }

    pub fn flags(&self) -> RepresentationFlags {
        let unit = match self.intervals.first() {
            None => true,
            Some(first) => self.intervals.iter().all(|i| i.length() == first.length()),
        };
        let proper = !self.intervals.iter().enumerate().any(|(a, x)| {
            self.intervals
                .iter()
                .enumerate()
                .any(|(b, y)| a != b && x.properly_inside(y))
        });
        RepresentationFlags { unit, proper }
    }

    pub fn shifted(&self, by: Endpoint) -> IntervalSystem {
        IntervalSystem::new(self.intervals.iter().map(|i| i.shifted(by)).collect())
    }

    /// Vertices sorted by `(left, right)`, ties by vertex.
    pub fn sorted_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (1..=self.len()).collect();
        order.sort_by(|&a, &b| {
            let (x, y) = (self.get(a), self.get(b));
            (x.left, x.right, a).cmp(&(y.left, y.right, b))
        });
        order
    }

    /// Text form: `n <count>` then `v left right` per vertex.
    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\n", self.len());
        for (i, iv) in self.intervals.iter().enumerate() {
            out.push_str(&format!(
                "{} {} {}\n",
                i + 1,
                format_rational(&iv.left),
                format_rational(&iv.right)
            ));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hl, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing `n <count>` header"))?;
        let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
            ["n", c] => c
                .parse::<usize>()
                .map_err(|_| Error::parse(hl, format!("bad count `{c}`")))?,
            _ => return Err(Error::parse(hl, "expected `n <count>`")),
        };
        let mut slots: Vec<Option<Interval>> = vec![None; n];
        for (line, l) in lines {
            let toks: Vec<&str> = l.split_whitespace().collect();
            if toks.len() != 3 {
                return Err(Error::parse(line, "expected `v left right`"));
            }
            let v: usize = toks[0]
                .parse()
                .map_err(|_| Error::parse(line, format!("bad vertex `{}`", toks[0])))?;
            if v == 0 || v > n || slots[v - 1].is_some() {
                return Err(Error::parse(line, format!("vertex {v} missing from 1..={n} or repeated")));
            }
            let left = parse_rational(toks[1]).map_err(|e| Error::parse(line, e.to_string()))?;
            let right = parse_rational(toks[2]).map_err(|e| Error::parse(line, e.to_string()))?;
            slots[v - 1] = Some(Interval::new(left, right).map_err(|e| Error::parse(line, e.to_string()))?);
        }
        let intervals = slots
            .into_iter()
            .enumerate()
            .map(|(i, s)| s.ok_or_else(|| Error::invalid(format!("no interval for vertex {}", i + 1))))
            .collect::<Result<Vec<_>>>()?;
        Ok(IntervalSystem::new(intervals))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(p: &[(i64, i64)]) -> IntervalSystem {
        IntervalSystem::from_integer_pairs(p).unwrap()
    }

    #[test]
    fn flags_examples() {
        assert_eq!(
            sys(&[(0, 1), (1, 2), (2, 3), (2, 3)]).flags(),
            RepresentationFlags { unit: true, proper: true }
        );
        assert_eq!(
            sys(&[(0, 3), (1, 2)]).flags(),
            RepresentationFlags { unit: false, proper: false }
        );
        assert_eq!(
            sys(&[(0, 1), (0, 1)]).flags(),
            RepresentationFlags { unit: true, proper: true }
        );
        assert!(Interval::from_integers(2, 1).is_err());
    }

    #[test]
    fn union_sweep() {
        let r = sys(&[(0, 1), (1, 2), (2, 3), (2, 3)]);
        let s = |v: &[usize]| v.iter().collect::<VertexSet>();
        assert!(r.union_is_interval(s(&[1, 2, 3])));
        assert!(!r.union_is_interval(s(&[1, 3, 4])));
        assert!(r.union_is_interval(s(&[3, 4])));
        assert!(!r.union_is_interval(VertexSet::EMPTY));
    }

    #[test]
    fn rational_text_round_trip() {
        let r = IntervalSystem::new(vec![
            Interval::new(Rational64::new(1, 3), Rational64::new(5, 2)).unwrap(),
            Interval::from_integers(-1, 4).unwrap(),
        ]);
        assert_eq!(IntervalSystem::parse(&r.to_text()).unwrap(), r);
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(json, r#"[["1/3","5/2"],["-1/1","4/1"]]"#);
        assert_eq!(serde_json::from_str::<IntervalSystem>(&json).unwrap(), r);
        assert!(parse_rational("1/0").is_err());
        assert_eq!(parse_rational("7").unwrap(), Rational64::from_integer(7));
    }
}
