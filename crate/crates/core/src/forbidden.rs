//! Forbidden induced structures: long induced cycles, d-claws and d-paws.

use serde::Serialize;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PatternKind {
    Cycle,
    Claw,
    Paw,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClawParts {
    pub center: usize,
    pub parts: [VertexSet; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PatternWitness {
    pub kind: PatternKind,
    pub vertices: VertexSet,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub claw: Option<ClawParts>,
}

fn is_induced_cycle(g: &Graph, s: VertexSet) -> bool {
    s.len() >= 3
        && s.iter().all(|v| g.neighbors(v).intersection(s).len() == 2)
        && g.connected_within(s)
}

/// Smallest, then lexicographically first, vertex set of size `>= min_len`
/// inducing a chordless cycle. Lengths below 3 are treated as 3.
pub fn find_induced_cycle_geq(g: &Graph, min_len: usize) -> Option<PatternWitness> {
    (min_len.max(3)..=g.n())
        .flat_map(|k| g.vertices().subsets_of_size(k))
        .find(|&s| is_induced_cycle(g, s))
        .map(|s| PatternWitness {
            kind: PatternKind::Cycle,
            vertices: s,
            claw: None,
        })
}

pub fn is_chordal_graph(g: &Graph) -> bool {
    find_induced_cycle_geq(g, 4).is_none()
}

/// Connected vertex sets containing `c` with `2..=max` vertices, ordered by size then lexicographically.
fn parts_through(g: &Graph, c: usize, max: usize) -> Vec<VertexSet> {
    let others = g.vertices().without(c);
    (1..max)
        .flat_map(|k| others.subsets_of_size(k))
        .map(|s| s.with(c))
        .filter(|&s| g.connected_within(s))
        .collect()
}

fn neighborhood(g: &Graph, s: VertexSet) -> VertexSet {
    s.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(g.neighbors(v)))
}

fn parts_compatible(g: &Graph, d: usize, c: usize, a: VertexSet, b: VertexSet) -> bool {
    let (ra, rb) = (a.without(c), b.without(c));
    a.intersection(b) == VertexSet::singleton(c)
        && neighborhood(g, ra).intersection(rb).is_empty()
        && a.union(b).len() > d
}

/// First d-claw: center ascending, then parts in order of (size, vertex list).
pub fn find_d_claw(g: &Graph, d: usize) -> Option<PatternWitness> {
    for c in g.vertices() {
        let parts = parts_through(g, c, d + 1);
        for (i, &a) in parts.iter().enumerate() {
            for (j, &b) in parts.iter().enumerate().skip(i + 1) {
                if !parts_compatible(g, d, c, a, b) {
                    continue;
                }
                for &e in &parts[j + 1..] {
                    if parts_compatible(g, d, c, a, e) && parts_compatible(g, d, c, b, e) {
                        return Some(PatternWitness {
                            kind: PatternKind::Claw,
                            vertices: a.union(b).union(e),
                            claw: Some(ClawParts {
                                center: c,
                                parts: [a, b, e],
                            }),
                        });
                    }
                }
            }
        }
    }
    None
}

fn leaf_count(g: &Graph, s: VertexSet) -> usize {
    s.iter()
        .filter(|&v| g.neighbors(v).intersection(s).len() == 1)
        .count()
}

/// First `(d + 2)`-set inducing a connected graph with exactly three leaves; none for `d = 1`.
pub fn find_d_paw(g: &Graph, d: usize) -> Option<PatternWitness> {
    if d < 2 || d + 2 > g.n() {
        return None;
    }
    g.vertices()
        .subsets_of_size(d + 2)
        .find(|&s| g.connected_within(s) && leaf_count(g, s) == 3)
        .map(|s| PatternWitness {
            kind: PatternKind::Paw,
            vertices: s,
            claw: None,
        })
}

/// Re-checks a witness against its defining conditions.
///
/// `param` is the minimum cycle length for cycles and `d` otherwise.
pub fn validate_witness(g: &Graph, param: usize, w: &PatternWitness) -> bool {
    if !w.vertices.is_subset(g.vertices()) {
        return false;
    }
    match w.kind {
        PatternKind::Cycle => w.vertices.len() >= param && is_induced_cycle(g, w.vertices),
        PatternKind::Paw => {
            param >= 2
                && w.vertices.len() == param + 2
                && g.connected_within(w.vertices)
                && leaf_count(g, w.vertices) == 3
        }
        PatternKind::Claw => {
            let Some(ClawParts { center, parts }) = w.claw else {
                return false;
            };
            let union = parts.iter().fold(VertexSet::EMPTY, |acc, &p| acc.union(p));
            union == w.vertices
                && parts.iter().all(|&p| {
                    p.contains(center)
                        && (2..=param + 1).contains(&p.len())
                        && g.connected_within(p)
                })
                && (0..3).all(|i| {
                    (i + 1..3).all(|j| parts_compatible(g, param, center, parts[i], parts[j]))
                })
        }
    }
}
