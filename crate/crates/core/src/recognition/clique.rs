//! Interval representations of interval graphs from ordered maximal cliques.
//!
//! Maximal cliques are ordered by `(min, max)`; vertex `v` gets the interval
//! from the first to the last clique containing it. Under an under-closed
//! labeling of the edge complex that order is a consecutive clique arrangement.

use super::RecognitionResult;
use crate::complex::delta_d;
use crate::error::{Error, Result};
use crate::graph::{maximal_cliques, Graph};
use crate::interval::IntervalSystem;
use crate::labeling::Labeling;
use crate::predicates::{first_violation, Predicate};
use crate::vertex_set::VertexSet;

/// Builds the clique representation of `g` in its current labeling.
///
/// The labeling must make the edge complex under-closed (local form); the
/// construction is then guaranteed to work, and a failed check is reported as
/// [`Error::TheoremViolation`].
pub fn build_clique_interval_representation(g: &Graph) -> Result<RecognitionResult> {
    if g.n() >= 2 {
        let c = delta_d(g, 1)?;
        if let Some(v) = first_violation(Predicate::UnderClosed, &c) {
            return Err(Error::invalid(format!(
                "the labeling is not 1-under-closed: {v}"
            )));
        }
    }
    let rep = construct(g).map_err(Error::TheoremViolation)?;
    Ok(RecognitionResult {
        found: true,
        labeling: Some(Labeling::identity(g.n())),
        representation: Some(rep),
        nodes_explored: 0,
        search_exhaustive: true,
    })
}

/// The same construction without the precondition; `None` when a check fails.
pub fn clique_representation_candidate(g: &Graph) -> Option<IntervalSystem> {
    construct(g).ok()
}

fn construct(g: &Graph) -> std::result::Result<IntervalSystem, String> {
    let mut cliques = maximal_cliques(g);
    let key = |&c: &VertexSet| (c.min().unwrap(), c.max().unwrap());
    cliques.sort_by_key(key);
    for w in cliques.windows(2) {
        if key(&w[0]) == key(&w[1]) {
            return Err(format!(
                "maximal cliques {} and {} share their minimum and maximum",
                w[0], w[1]
            ));
        }
    }
    let mut pairs = Vec::with_capacity(g.n());
    for v in 1..=g.n() {
        let hits: Vec<usize> = (0..cliques.len())
            .filter(|&i| cliques[i].contains(v))
            .collect();
        let (first, last) = (hits[0], hits[hits.len() - 1]);
        if hits.len() != last - first + 1 {
            return Err(format!("the cliques containing vertex {v} are not consecutive"));
        }
        pairs.push((first as i64 + 1, last as i64 + 1));
    }
    let rep = IntervalSystem::from_integer_pairs(&pairs).map_err(|e| e.to_string())?;
    for u in 1..=g.n() {
        for v in u + 1..=g.n() {
            if g.has_edge(u, v) != rep.get(u).intersects(rep.get(v)) {
                return Err(format!(
                    "intervals of {u} and {v} disagree with the edge relation"
                ));
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(r: &IntervalSystem) -> Vec<(i64, i64)> {
        r.intervals()
            .iter()
            .map(|i| (*i.left().numer(), *i.right().numer()))
            .collect()
    }

    #[test]
    fn small_examples() {
        let r = build_clique_interval_representation(&Graph::path(3)).unwrap();
        assert_eq!(pairs(r.representation.as_ref().unwrap()), vec![(1, 1), (1, 2), (2, 2)]);

        let g = Graph::from_edges(4, [(1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let r = build_clique_interval_representation(&g).unwrap();
        assert_eq!(
            pairs(r.representation.as_ref().unwrap()),
            vec![(1, 1), (1, 2), (2, 2), (2, 2)]
        );

        let r = build_clique_interval_representation(&Graph::complete(5)).unwrap();
        assert_eq!(pairs(r.representation.as_ref().unwrap()), vec![(1, 1); 5]);
    }

    #[test]
    fn precondition_is_checked() {
        assert!(matches!(
            build_clique_interval_representation(&Graph::cycle(4)),
            Err(Error::InvalidInput(_))
        ));
        // path 1-3-2: not under-closed, although the clique order still works here
        let g = Graph::from_edges(3, [(1, 3), (2, 3)]).unwrap();
        assert!(build_clique_interval_representation(&g).is_err());
        assert!(clique_representation_candidate(&g).is_some());
        assert!(clique_representation_candidate(&Graph::cycle(4)).is_none());
    }
}
