//! Existential recognizers: labeling searches, strong interval representations,
//! and the clique construction for interval graphs.

mod clique;
mod search;
mod strong;

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

pub use clique::{build_clique_interval_representation, clique_representation_candidate};

use crate::complex::{delta_d, PureComplex};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::{Interval, IntervalSystem};
use crate::labeling::Labeling;
use crate::predicates::{holds, representation_mismatch, Predicate};
use crate::vertex_set::VertexSet;
use search::LabelSearch;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecognitionResult {
    pub found: bool,
    pub labeling: Option<Labeling>,
    pub representation: Option<IntervalSystem>,
    pub nodes_explored: u64,
    /// False only when the bounded unit-length search gave up on a candidate.
    pub search_exhaustive: bool,
}

impl RecognitionResult {
    fn not_found(nodes_explored: u64, search_exhaustive: bool) -> Self {
        RecognitionResult {
            found: false,
            labeling: None,
            representation: None,
            nodes_explored,
            search_exhaustive,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_labeling_n: usize,
    pub max_strong_n: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_labeling_n: 9,
            max_strong_n: 5,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StrongMode {
    General,
    Unit,
    Proper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphClass {
    UnderClosed,
    UnitInterval,
    StrongInterval,
    StrongUnit,
    StrongProper,
    ConditionStar,
}

impl GraphClass {
    pub const ALL: [GraphClass; 6] = [
        GraphClass::UnderClosed,
        GraphClass::UnitInterval,
        GraphClass::StrongInterval,
        GraphClass::StrongUnit,
        GraphClass::StrongProper,
        GraphClass::ConditionStar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::UnderClosed => "under_closed",
            GraphClass::UnitInterval => "unit_interval",
            GraphClass::StrongInterval => "strong_interval",
            GraphClass::StrongUnit => "strong_unit",
            GraphClass::StrongProper => "strong_proper",
            GraphClass::ConditionStar => "condition_star",
        }
    }

    fn kind(self) -> ClassKind {
        match self {
            GraphClass::UnderClosed => ClassKind::Labeling(Predicate::UnderClosed),
            GraphClass::UnitInterval => ClassKind::Labeling(Predicate::UnitInterval),
            GraphClass::ConditionStar => ClassKind::Labeling(Predicate::ConditionStar),
            GraphClass::StrongInterval => ClassKind::Strong(StrongMode::General),
            GraphClass::StrongUnit => ClassKind::Strong(StrongMode::Unit),
            GraphClass::StrongProper => ClassKind::Strong(StrongMode::Proper),
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        GraphClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown class `{s}`")))
    }
}

enum ClassKind {
    Labeling(Predicate),
    Strong(StrongMode),
}

fn check_labeling_guard(n: usize, limits: &SearchLimits) -> Result<()> {
    if n > limits.max_labeling_n {
        return Err(Error::Guard {
            what: "labeling search vertex count",
            limit: limits.max_labeling_n,
            got: n,
        });
    }
    Ok(())
}

/// Lexicographically least vertex order (by label) satisfying `pred`.
pub fn find_labeling(
    c: &PureComplex,
    pred: Predicate,
    limits: &SearchLimits,
) -> Result<RecognitionResult> {
    check_labeling_guard(c.n(), limits)?;
    let mut search = LabelSearch::new(c, pred);
    let mut hit = None;
    let _ = search.run(&mut |order: &[usize]| {
        hit = Some(order.to_vec());
        ControlFlow::Break(())
    });
    let Some(order) = hit else {
        return Ok(RecognitionResult::not_found(search.nodes, true));
    };
    let labeling = Labeling::from_order(&order)?;
    if !holds(pred, &c.relabel(&labeling)?) {
        return Err(Error::TheoremViolation(format!(
            "search returned labeling {labeling} that fails {pred}"
        )));
    }
    Ok(RecognitionResult {
        found: true,
        labeling: Some(labeling),
        representation: None,
        nodes_explored: search.nodes,
        search_exhaustive: true,
    })
}

/// Visits every labeling satisfying `pred`, in lexicographic order of vertex sequence.
///
/// Returns the number of search nodes.
pub fn for_each_valid_labeling<F>(
    c: &PureComplex,
    pred: Predicate,
    limits: &SearchLimits,
    mut visit: F,
) -> Result<u64>
where
    F: FnMut(&Labeling) -> ControlFlow<()>,
{
    check_labeling_guard(c.n(), limits)?;
    let mut search = LabelSearch::new(c, pred);
    let _ = search.run(&mut |order: &[usize]| {
        visit(&Labeling::from_order(order).expect("search orders are permutations"))
    });
    Ok(search.nodes)
}

pub fn find_under_closed_labeling(c: &PureComplex, limits: &SearchLimits) -> Result<RecognitionResult> {
    find_labeling(c, Predicate::UnderClosed, limits)
}

pub fn find_unit_interval_labeling(c: &PureComplex, limits: &SearchLimits) -> Result<RecognitionResult> {
    find_labeling(c, Predicate::UnitInterval, limits)
}

pub fn find_condition_star_labeling(c: &PureComplex, limits: &SearchLimits) -> Result<RecognitionResult> {
    find_labeling(c, Predicate::ConditionStar, limits)
}

/// Searches all `2n`-endpoint orders for a representation of the mode's kind.
///
/// The labeling in the certificate sorts vertices by `(left, right)`.
pub fn find_strong_interval_representation(
    c: &PureComplex,
    mode: StrongMode,
    limits: &SearchLimits,
) -> Result<RecognitionResult> {
    let n = c.n();
    let limit = limits.max_strong_n.min(strong::MAX_TABLE_N);
    if n > limit {
        return Err(Error::Guard {
            what: "strong representation search vertex count",
            limit,
            got: n,
        });
    }
    let table = strong::model_table(n);
    let subsets: Vec<VertexSet> = VertexSet::full(n).subsets_of_size(c.d() + 1).collect();
    let mut examined = 0u64;
    let mut exhaustive = true;
    for m in table.models.values() {
        examined += 1;
        if !subsets
            .iter()
            .all(|&s| c.is_facet(s) == m.graph.connected_within(s))
        {
            continue;
        }
        let pairs = match mode {
            StrongMode::General => Some(&m.general),
            StrongMode::Proper => m.proper.as_ref(),
            StrongMode::Unit => {
                if m.unit.is_none() && m.proper.is_some() {
                    exhaustive = false;
                }
                m.unit.as_ref()
            }
        };
        if let Some(pairs) = pairs {
            let rep = IntervalSystem::from_integer_pairs(pairs)?;
            let labeling = Labeling::from_order(&rep.sorted_order())?;
            check_representation(c, &rep, mode)?;
            return Ok(RecognitionResult {
                found: true,
                labeling: Some(labeling),
                representation: Some(rep),
                nodes_explored: examined,
                search_exhaustive: true,
            });
        }
    }
    Ok(RecognitionResult::not_found(examined, exhaustive))
}

fn check_representation(c: &PureComplex, rep: &IntervalSystem, mode: StrongMode) -> Result<()> {
    if let Some(s) = representation_mismatch(c, rep)? {
        return Err(Error::TheoremViolation(format!(
            "representation disagrees with the complex on {s}"
        )));
    }
    let flags = rep.flags();
    let ok = match mode {
        StrongMode::General => true,
        StrongMode::Unit => flags.unit,
        StrongMode::Proper => flags.proper,
    };
    if !ok {
        return Err(Error::TheoremViolation(format!(
            "representation lacks the {mode:?} property"
        )));
    }
    Ok(())
}

/// The complex Δ_d(G), empty when `G` has fewer than `d + 1` vertices.
fn delta_or_empty(g: &Graph, d: usize) -> Result<PureComplex> {
    if d == 0 {
        return Err(Error::invalid("d must be a positive integer"));
    }
    if d + 1 > g.n() {
        return PureComplex::new(g.n(), d, Vec::new());
    }
    delta_d(g, d)
}

/// Recognizes each connected component and composes the certificates.
///
/// Components are taken in order of their smallest vertex and occupy
/// consecutive label blocks; their intervals are shifted apart (and scaled to
/// length 1 for unit representations). Components with at most `d` vertices
/// carry no facet and are accepted with label order by vertex and `[0, 1]`
/// intervals. The composite certificate is re-validated on the whole complex.
pub fn recognize_graph_class(
    g: &Graph,
    d: usize,
    class: GraphClass,
    limits: &SearchLimits,
) -> Result<RecognitionResult> {
    let whole = delta_or_empty(g, d)?;
    let kind = class.kind();
    let mut order = Vec::with_capacity(g.n());
    let mut intervals: Vec<Option<Interval>> = vec![None; g.n()];
    let mut offset = Rational64::from_integer(0);
    let mut nodes = 0u64;
    let mut exhaustive = true;

    for comp in g.components() {
        let (h, names) = g.compress(comp)?;
        let (local_order, local_rep) = if comp.len() < d + 1 {
            let rep = IntervalSystem::from_integer_pairs(&vec![(0, 1); h.n()])?;
            ((1..=h.n()).collect::<Vec<_>>(), Some(rep))
        } else {
            let c = delta_d(&h, d)?;
            let r = match kind {
                ClassKind::Labeling(p) => find_labeling(&c, p, limits)?,
                ClassKind::Strong(mode) => find_strong_interval_representation(&c, mode, limits)?,
            };
            nodes += r.nodes_explored;
            exhaustive &= r.search_exhaustive;
            if !r.found {
                return Ok(RecognitionResult::not_found(nodes, exhaustive));
            }
            let rep = r.representation.map(|rep| match kind {
                ClassKind::Strong(StrongMode::Unit) => {
                    let len = rep.get(1).length();
                    IntervalSystem::new(
                        rep.intervals().iter().map(|i| i.scaled(len.recip())).collect(),
                    )
                }
                _ => rep,
            });
            (r.labeling.expect("found results carry a labeling").order(), rep)
        };
        order.extend(local_order.iter().map(|&v| names[v - 1]));
        if let Some(rep) = local_rep {
            let low = rep.intervals().iter().map(|i| i.left()).min().expect("nonempty");
            let high = rep.intervals().iter().map(|i| i.right()).max().expect("nonempty");
            let shift = offset - low;
            for (i, iv) in rep.intervals().iter().enumerate() {
                intervals[names[i] - 1] = Some(iv.shifted(shift));
            }
            offset = offset + (high - low) + Rational64::from_integer(1);
        }
    }

    let labeling = Labeling::from_order(&order)?;
    let representation = match kind {
        ClassKind::Labeling(p) => {
            if !holds(p, &whole.relabel(&labeling)?) {
                return Err(Error::TheoremViolation(format!(
                    "composed labeling {labeling} fails {p}"
                )));
            }
            None
        }
        ClassKind::Strong(mode) => {
            let rep = IntervalSystem::new(
                intervals
                    .into_iter()
                    .map(|i| i.expect("every vertex lies in a component"))
                    .collect(),
            );
            check_representation(&whole, &rep, mode)?;
            Some(rep)
        }
    };
    Ok(RecognitionResult {
        found: true,
        labeling: Some(labeling),
        representation,
        nodes_explored: nodes,
        search_exhaustive: exhaustive,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphEnumeration;

    fn limits() -> SearchLimits {
        SearchLimits::default()
    }

    fn example_graph() -> Graph {
        Graph::from_edges(4, [(1, 2), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn under_closed_search_examples() {
        let c4 = Graph::cycle(4);
        let r = find_under_closed_labeling(&delta_d(&c4, 3).unwrap(), &limits()).unwrap();
        assert!(r.found);
        assert_eq!(r.labeling.unwrap(), Labeling::identity(4));
        assert!(!find_under_closed_labeling(&delta_d(&c4, 1).unwrap(), &limits()).unwrap().found);
        let p4 = delta_d(&Graph::path(4), 1).unwrap();
        assert!(find_under_closed_labeling(&p4, &limits()).unwrap().found);
    }

    #[test]
    fn unit_and_star_search_examples() {
        let claw = delta_d(&Graph::star(3), 1).unwrap();
        assert!(!find_unit_interval_labeling(&claw, &limits()).unwrap().found);
        assert!(!find_condition_star_labeling(&claw, &limits()).unwrap().found);
        let p4 = delta_d(&Graph::path(4), 1).unwrap();
        assert!(find_condition_star_labeling(&p4, &limits()).unwrap().found);
        let c4 = delta_d(&Graph::cycle(4), 1).unwrap();
        assert!(!find_condition_star_labeling(&c4, &limits()).unwrap().found);
        for n in 4..=6 {
            let c = Graph::cycle(n);
            for d in 1..n {
                let r = recognize_graph_class(&c, d, GraphClass::UnitInterval, &limits()).unwrap();
                assert_eq!(r.found, d + 2 >= n, "C_{n}, d = {d}");
            }
        }
        let example = delta_d(&example_graph(), 2).unwrap();
        assert!(!find_unit_interval_labeling(&example, &limits()).unwrap().found);
    }

    #[test]
    fn search_returns_lexicographically_least_order() {
        for g in GraphEnumeration::new(4, true).unwrap().iter() {
            let c = delta_d(&g, 1).unwrap();
            for p in [Predicate::UnderClosed, Predicate::UnitInterval, Predicate::ConditionStar] {
                let brute = crate::labeling::Labeling::all(4)
                    .filter(|l| holds(p, &c.relabel(l).unwrap()))
                    .map(|l| l.order())
                    .min();
                let r = find_labeling(&c, p, &limits()).unwrap();
                assert_eq!(r.labeling.map(|l| l.order()), brute);
                let mut count = 0;
                for_each_valid_labeling(&c, p, &limits(), |_| {
                    count += 1;
                    ControlFlow::Continue(())
                })
                .unwrap();
                let brute_count = crate::labeling::Labeling::all(4)
                    .filter(|l| holds(p, &c.relabel(l).unwrap()))
                    .count();
                assert_eq!(count, brute_count);
            }
        }
    }

    #[test]
    fn strong_search_examples() {
        let example = delta_d(&example_graph(), 2).unwrap();
        for mode in [StrongMode::General, StrongMode::Unit, StrongMode::Proper] {
            let r = find_strong_interval_representation(&example, mode, &limits()).unwrap();
            assert!(r.found, "{mode:?}");
        }
        let c4 = delta_d(&Graph::cycle(4), 3).unwrap();
        let k4 = delta_d(&Graph::complete(4), 3).unwrap();
        let a = find_strong_interval_representation(&c4, StrongMode::General, &limits()).unwrap();
        let b = find_strong_interval_representation(&k4, StrongMode::General, &limits()).unwrap();
        assert!(a.found && b.found);
        assert!(crate::predicates::validate_interval_representation(&k4, a.representation.as_ref().unwrap()).unwrap());
        let c4 = delta_d(&Graph::cycle(4), 1).unwrap();
        let r = find_strong_interval_representation(&c4, StrongMode::General, &limits()).unwrap();
        assert!(!r.found && r.search_exhaustive);
        let big = delta_d(&Graph::path(6), 1).unwrap();
        assert!(matches!(
            find_strong_interval_representation(&big, StrongMode::General, &limits()),
            Err(Error::Guard { .. })
        ));
    }

    #[test]
    fn labeling_guard() {
        let c = delta_d(&Graph::path(10), 1).unwrap();
        assert!(matches!(find_unit_interval_labeling(&c, &limits()), Err(Error::Guard { .. })));
    }

    #[test]
    fn components_are_composed() {
        let two = Graph::from_edges(4, [(1, 3), (2, 4)]).unwrap();
        let r = recognize_graph_class(&two, 1, GraphClass::UnitInterval, &limits()).unwrap();
        assert!(r.found);
        assert_eq!(r.labeling.unwrap().order(), vec![1, 3, 2, 4]);
        for class in [GraphClass::StrongInterval, GraphClass::StrongUnit, GraphClass::StrongProper] {
            let r = recognize_graph_class(&two, 1, class, &limits()).unwrap();
            assert!(r.found, "{class}");
            let flags = r.representation.unwrap().flags();
            assert!(class != GraphClass::StrongUnit || flags.unit);
        }
        let mixed = Graph::from_edges(7, [(1, 2), (2, 3), (5, 6), (6, 7), (5, 7)]).unwrap();
        for class in GraphClass::ALL {
            let r = recognize_graph_class(&mixed, 2, class, &limits()).unwrap();
            assert!(r.found, "{class}");
        }
        let tiny = Graph::path(2);
        assert!(recognize_graph_class(&tiny, 3, GraphClass::UnitInterval, &limits()).unwrap().found);
        assert!(recognize_graph_class(&tiny, 0, GraphClass::UnitInterval, &limits()).is_err());
    }

    #[test]
    fn class_names_round_trip() {
        for c in GraphClass::ALL {
            assert_eq!(c.name().parse::<GraphClass>().unwrap(), c);
        }
    }
}
