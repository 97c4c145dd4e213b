//! Per-labeling predicates on a complex that is already written in its labels.
//!
//! Every condition attached to a facet `F` only mentions labels up to
//! `max F`, so each predicate is evaluated group by group: the facets sharing a
//! largest label are checked together. The labeling search in
//! [`crate::recognition`] runs the same group check the moment the last vertex
//! of a group receives its label.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::complex::PureComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::{IntervalSystem, RepresentationFlags};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Predicate {
    /// Pushed-down tuples `j_1 = i_1`, `j_k <= i_k` are facets.
    UnderClosedDef,
    /// `{i_1, ..., i_d, j}` is a facet for every gap `j` in the span.
    UnderClosed,
    /// Every `(d + 1)`-subset of a facet's span is a facet.
    UnitInterval,
    /// Every facet vertex shares a facet with each gap and can be exchanged for it.
    Cond2,
    /// Some facet vertex shares a facet with each gap, and all that do can be exchanged.
    Cond3,
    /// Facet vertices that share a facet with a gap can be exchanged for it.
    ConditionStar,
    /// Facets with the same largest vertex span a full skeleton.
    ChordalComplex,
    /// [`Predicate::UnderClosed`] with the check of the gap just below the top dropped.
    #[doc(hidden)]
    MutatedUnderClosed,
}

impl Predicate {
    pub const ALL: [Predicate; 7] = [
        Predicate::UnderClosedDef,
        Predicate::UnderClosed,
        Predicate::UnitInterval,
        Predicate::Cond2,
        Predicate::Cond3,
        Predicate::ConditionStar,
        Predicate::ChordalComplex,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::UnderClosedDef => "under-closed-def",
            Predicate::UnderClosed => "under-closed",
            Predicate::UnitInterval => "unit-interval",
            Predicate::Cond2 => "cond2",
            Predicate::Cond3 => "cond3",
            Predicate::ConditionStar => "condition-star",
            Predicate::ChordalComplex => "chordal-complex",
            Predicate::MutatedUnderClosed => "mutated-under-closed",
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Predicate {
    type Err = Error;
    fn from_str(s: &str) -> Result<Predicate> {
        Predicate::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown predicate `{s}`")))
    }
}

/// The two alternative forms of the unit-interval condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EquivVariant {
    Cond2,
    Cond3,
}

/// First failure found by a predicate, in label space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub facet: VertexSet,
    /// The set that should have been a facet (empty for a missing shared facet).
    pub missing: VertexSet,
    pub kind: ViolationKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "type")]
pub enum ViolationKind {
    PushedDownTuple,
    GapReplacesTop { gap: usize },
    SpanSubset,
    Exchange { gap: usize, replaced: usize },
    NoSharedFacet { gap: usize, with: Option<usize> },
    SkeletonFace { other: VertexSet },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (facet, missing) = (self.facet, self.missing);
        match &self.kind {
            ViolationKind::PushedDownTuple => {
                write!(f, "facet {facet}: pushed-down tuple {missing} is not a facet")
            }
            ViolationKind::GapReplacesTop { gap } => write!(
                f,
                "facet {facet}: gap {gap} replacing the top vertex gives {missing}, not a facet"
            ),
            ViolationKind::SpanSubset => {
                write!(f, "facet {facet}: {missing} lies in its span but is not a facet")
            }
            ViolationKind::Exchange { gap, replaced } => write!(
                f,
                "facet {facet}: exchanging {replaced} for gap {gap} gives {missing}, not a facet"
            ),
            ViolationKind::NoSharedFacet { gap, with: Some(v) } => {
                write!(f, "facet {facet}: gap {gap} shares no facet with {v}")
            }
            ViolationKind::NoSharedFacet { gap, with: None } => {
                write!(f, "facet {facet}: gap {gap} shares no facet with any of its vertices")
            }
            ViolationKind::SkeletonFace { other } => write!(
                f,
                "facets {facet} and {other} share a top vertex but {missing} is not a facet"
            ),
        }
    }
}

/// Facet membership and the shared-facet relation, both in label space.
pub trait FacetLookup {
    fn is_facet(&self, s: VertexSet) -> bool;
    fn share_facet(&self, a: usize, b: usize) -> bool;
}

/// A relabeled complex together with its shared-facet relation.
pub struct LabeledComplex<'a> {
    complex: &'a PureComplex,
    shared: Vec<VertexSet>,
}

impl<'a> LabeledComplex<'a> {
    pub fn new(complex: &'a PureComplex) -> Self {
        LabeledComplex {
            complex,
            shared: complex.shared_facet_masks(),
        }
    }
}

impl FacetLookup for LabeledComplex<'_> {
    #[inline]
    fn is_facet(&self, s: VertexSet) -> bool {
        self.complex.is_facet(s)
    }

    #[inline]
    fn share_facet(&self, a: usize, b: usize) -> bool {
        self.shared[a - 1].contains(b)
    }
}

/// Checks every facet of `group`; all of them have the same largest label.
pub fn check_group<L: FacetLookup>(
    pred: Predicate,
    lookup: &L,
    d: usize,
    group: &[VertexSet],
) -> Option<Violation> {
    match pred {
        Predicate::ChordalComplex => return chordal_group(lookup, d, group),
        _ => {
            for &f in group {
                let v = match pred {
                    Predicate::UnderClosedDef => pushed_down(lookup, f),
                    Predicate::UnderClosed => gap_replaces_top(lookup, f, false),
                    Predicate::MutatedUnderClosed => gap_replaces_top(lookup, f, true),
                    Predicate::UnitInterval => span_subsets(lookup, d, f),
                    Predicate::Cond2 => exchange(lookup, f, Exchange::Every),
                    Predicate::Cond3 => exchange(lookup, f, Exchange::SomeThenAll),
                    Predicate::ConditionStar => exchange(lookup, f, Exchange::Conditional),
                    Predicate::ChordalComplex => unreachable!(),
                };
                if v.is_some() {
                    return v;
                }
            }
        }
    }
    None
}

fn pushed_down<L: FacetLookup>(lookup: &L, f: VertexSet) -> Option<Violation> {
    let top: Vec<usize> = f.to_vec();
    let mut tuple = Vec::with_capacity(top.len());
    tuple.push(top[0]);
    pushed_down_rec(lookup, f, &top, &mut tuple)
}

fn pushed_down_rec<L: FacetLookup>(
    lookup: &L,
    f: VertexSet,
    top: &[usize],
    tuple: &mut Vec<usize>,
) -> Option<Violation> {
    let k = tuple.len();
    if k == top.len() {
        let s: VertexSet = tuple.iter().collect();
        return (!lookup.is_facet(s)).then_some(Violation {
            facet: f,
            missing: s,
            kind: ViolationKind::PushedDownTuple,
        });
    }
    for j in tuple[k - 1] + 1..=top[k] {
        tuple.push(j);
        let v = pushed_down_rec(lookup, f, top, tuple);
        tuple.pop();
        if v.is_some() {
            return v;
        }
    }
    None
}

#[inline]
fn gaps(f: VertexSet) -> VertexSet {
    VertexSet::range(f.min().unwrap(), f.max().unwrap()).difference(f)
}

fn gap_replaces_top<L: FacetLookup>(lookup: &L, f: VertexSet, mutated: bool) -> Option<Violation> {
    let top = f.max().unwrap();
    let base = f.without(top);
    for j in gaps(f) {
        if mutated && j + 1 == top {
            continue;
        }
        let s = base.with(j);
        if !lookup.is_facet(s) {
            return Some(Violation {
                facet: f,
                missing: s,
                kind: ViolationKind::GapReplacesTop { gap: j },
            });
        }
    }
    None
}

fn span_subsets<L: FacetLookup>(lookup: &L, d: usize, f: VertexSet) -> Option<Violation> {
    let window = VertexSet::range(f.min().unwrap(), f.max().unwrap());
    if window.len() == d + 1 {
        return None;
    }
    window
        .subsets_of_size(d + 1)
        .find(|&s| !lookup.is_facet(s))
        .map(|s| Violation {
            facet: f,
            missing: s,
            kind: ViolationKind::SpanSubset,
        })
}

#[derive(Clone, Copy)]
enum Exchange {
    Every,
    SomeThenAll,
    Conditional,
}

fn exchange<L: FacetLookup>(lookup: &L, f: VertexSet, mode: Exchange) -> Option<Violation> {
    for j in gaps(f) {
        let mut any_shared = false;
        for i in f {
            if !lookup.share_facet(j, i) {
                if let Exchange::Every = mode {
                    return Some(Violation {
                        facet: f,
                        missing: VertexSet::EMPTY,
                        kind: ViolationKind::NoSharedFacet { gap: j, with: Some(i) },
                    });
                }
                continue;
            }
            any_shared = true;
            let s = f.without(i).with(j);
            if !lookup.is_facet(s) {
                return Some(Violation {
                    facet: f,
                    missing: s,
                    kind: ViolationKind::Exchange { gap: j, replaced: i },
                });
            }
        }
        if let (Exchange::SomeThenAll, false) = (mode, any_shared) {
            return Some(Violation {
                facet: f,
                missing: VertexSet::EMPTY,
                kind: ViolationKind::NoSharedFacet { gap: j, with: None },
            });
        }
    }
    None
}

fn chordal_group<L: FacetLookup>(lookup: &L, d: usize, group: &[VertexSet]) -> Option<Violation> {
    for (a, &f) in group.iter().enumerate() {
        for &g in &group[a + 1..] {
            if let Some(s) = f
                .union(g)
                .subsets_of_size(d + 1)
                .find(|&s| !lookup.is_facet(s))
            {
                return Some(Violation {
                    facet: f,
                    missing: s,
                    kind: ViolationKind::SkeletonFace { other: g },
                });
            }
        }
    }
    None
}

/// First violation of `pred`, scanning groups by increasing top label.
pub fn first_violation(pred: Predicate, complex: &PureComplex) -> Option<Violation> {
    let lookup = LabeledComplex::new(complex);
    complex
        .facets_by_max()
        .iter()
        .find_map(|group| check_group(pred, &lookup, complex.d(), group))
}

pub fn holds(pred: Predicate, complex: &PureComplex) -> bool {
    first_violation(pred, complex).is_none()
}

pub fn is_under_closed_def(c: &PureComplex) -> bool {
    holds(Predicate::UnderClosedDef, c)
}

pub fn is_under_closed_local(c: &PureComplex) -> bool {
    holds(Predicate::UnderClosed, c)
}

pub fn is_unit_interval_def(c: &PureComplex) -> bool {
    holds(Predicate::UnitInterval, c)
}

pub fn satisfies_equiv_condition(c: &PureComplex, variant: EquivVariant) -> bool {
    match variant {
        EquivVariant::Cond2 => holds(Predicate::Cond2, c),
        EquivVariant::Cond3 => holds(Predicate::Cond3, c),
    }
}

pub fn satisfies_condition_star(c: &PureComplex) -> bool {
    holds(Predicate::ConditionStar, c)
}

pub fn is_chordal_complex(c: &PureComplex) -> bool {
    holds(Predicate::ChordalComplex, c)
}

/// A failed closure requirement: edges `a-b` and `b-c` (or `a-c`, `b-c`) force `missing`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedViolation {
    pub first: (usize, usize),
    pub second: (usize, usize),
    pub missing: (usize, usize),
}

/// Edges `ij`, `ik` with `i < j < k` force `jk`; edges `ij`, `kj` with `i < k < j` force `ik`.
pub fn closed_graph_violation(g: &Graph) -> Option<ClosedViolation> {
    for i in 1..=g.n() {
        let above: Vec<usize> = g.neighbors(i).iter().filter(|&v| v > i).collect();
        for (a, &j) in above.iter().enumerate() {
            for &k in &above[a + 1..] {
                if !g.has_edge(j, k) {
                    return Some(ClosedViolation {
                        first: (i, j),
                        second: (i, k),
                        missing: (j, k),
                    });
                }
            }
        }
        let below: Vec<usize> = g.neighbors(i).iter().filter(|&v| v < i).collect();
        for (a, &lo) in below.iter().enumerate() {
            for &mid in &below[a + 1..] {
                if !g.has_edge(lo, mid) {
                    return Some(ClosedViolation {
                        first: (lo, i),
                        second: (mid, i),
                        missing: (lo, mid),
                    });
                }
            }
        }
    }
    None
}

pub fn is_closed_graph(g: &Graph) -> bool {
    closed_graph_violation(g).is_none()
}

/// First `(d + 1)`-set on which facet membership and the union test disagree.
pub fn representation_mismatch(c: &PureComplex, r: &IntervalSystem) -> Result<Option<VertexSet>> {
    if r.len() != c.n() {
        return Err(Error::invalid(format!(
            "{} intervals for a complex on {} vertices",
            r.len(),
            c.n()
        )));
    }
    Ok(VertexSet::full(c.n())
        .subsets_of_size(c.d() + 1)
        .find(|&s| c.is_facet(s) != r.union_is_interval(s)))
}

/// A `(d + 1)`-set is a facet exactly when the union of its intervals is an interval.
pub fn validate_interval_representation(c: &PureComplex, r: &IntervalSystem) -> Result<bool> {
    Ok(representation_mismatch(c, r)?.is_none())
}

pub fn representation_flags(r: &IntervalSystem) -> RepresentationFlags {
    r.flags()
}
