//! The sorting operator on squarefree monomials and sort-closed face sets.
//!
//! For monomials `u`, `v` of the same degree, merge the supports, sort the
//! `2t` indices and deal them out alternately. A set of monomials is sortable
//! when it is closed under this operation.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::complex::FaceSetByCardinality;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labeling::Labeling;
use crate::vertex_set::VertexSet;

/// `x^F` for `F` the support.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SquarefreeMonomial {
    pub support: VertexSet,
}

impl SquarefreeMonomial {
    pub fn new(support: VertexSet) -> Self {
        SquarefreeMonomial { support }
    }

    pub fn degree(&self) -> usize {
        self.support.len()
    }
}

fn sort_sets(u: VertexSet, v: VertexSet) -> (VertexSet, VertexSet) {
    let mut out = [VertexSet::EMPTY; 2];
    let mut turn = 0;
    for i in u.union(v) {
        let copies = u.contains(i) as usize + v.contains(i) as usize;
        for _ in 0..copies {
            out[turn] = out[turn].with(i);
            turn ^= 1;
        }
    }
    (out[0], out[1])
}

pub fn sort_pair(
    u: SquarefreeMonomial,
    v: SquarefreeMonomial,
) -> Result<(SquarefreeMonomial, SquarefreeMonomial)> {
    if u.degree() != v.degree() {
        return Err(Error::invalid(format!(
            "cannot sort monomials of degrees {} and {}",
            u.degree(),
            v.degree()
        )));
    }
    let (a, b) = sort_sets(u.support, v.support);
    Ok((SquarefreeMonomial::new(a), SquarefreeMonomial::new(b)))
}

fn sort_closed(faces: &[VertexSet], contains: impl Fn(VertexSet) -> bool) -> bool {
    faces.iter().enumerate().all(|(i, &u)| {
        faces[i..].iter().all(|&v| {
            let (a, b) = sort_sets(u, v);
            contains(a) && contains(b)
        })
    })
}

pub fn is_sortable_set(b: &[SquarefreeMonomial], t: usize) -> Result<bool> {
    if let Some(m) = b.iter().find(|m| m.degree() != t) {
        return Err(Error::invalid(format!(
            "monomial with support {} does not have degree {t}",
            m.support
        )));
    }
    let faces: Vec<VertexSet> = b.iter().map(|m| m.support).collect();
    let members: HashSet<VertexSet> = faces.iter().copied().collect();
    Ok(sort_closed(&faces, |s| members.contains(&s)))
}

/// Sortable at every cardinality; the list must cover `1..=k` without gaps.
pub fn is_sortable_complex(faces_by_t: &[FaceSetByCardinality]) -> Result<bool> {
    let mut ts: Vec<usize> = faces_by_t.iter().map(|l| l.t).collect();
    ts.sort_unstable();
    if ts.iter().enumerate().any(|(i, &t)| t != i + 1) {
        return Err(Error::invalid(format!(
            "face cardinalities {ts:?} do not cover 1..={} exactly once",
            ts.len()
        )));
    }
    for level in faces_by_t {
        let monomials: Vec<SquarefreeMonomial> =
            level.faces.iter().map(|&f| SquarefreeMonomial::new(f)).collect();
        if !is_sortable_set(&monomials, level.t)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether Ind_d(G) is sortable once `G` is relabeled by `labeling`.
///
/// Same answer as [`is_sortable_complex`] on the relabeled face sets, without
/// building them; cardinalities up to `d` hold every subset and are skipped.
pub fn ind_sortable_under(g: &Graph, d: usize, labeling: &Labeling) -> Result<bool> {
    let h = g.relabel(labeling)?;
    for t in d + 1..=h.n() {
        let faces: Vec<VertexSet> = h
            .vertices()
            .subsets_of_size(t)
            .filter(|&s| h.d_independent_unchecked(s, d))
            .collect();
        if faces.is_empty() {
            break;
        }
        if !sort_closed(&faces, |s| h.d_independent_unchecked(s, d)) {
            return Ok(false);
        }
    }
    Ok(true)
}
