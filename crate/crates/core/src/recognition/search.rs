//! Depth-first labeling search with per-group pruning.
//!
//! Labels are handed out in increasing order; label `m` goes to each unplaced
//! vertex in turn, smallest first. Once a vertex receives label `m`, every
//! facet whose vertices are now all placed has largest label `m`, so that group
//! can be checked right away: the predicates only look at labels up to a
//! facet's maximum. The first complete labeling reached therefore has the
//! lexicographically least vertex order.

use std::ops::ControlFlow;

use crate::complex::PureComplex;
use crate::predicates::{check_group, FacetLookup, Predicate};
use crate::vertex_set::VertexSet;

struct Partial<'a> {
    complex: &'a PureComplex,
    shared: &'a [VertexSet],
    order: &'a [usize],
}

impl Partial<'_> {
    #[inline]
    fn vertices(&self, labels: VertexSet) -> VertexSet {
        labels
            .iter()
            .fold(VertexSet::EMPTY, |acc, l| acc.with(self.order[l - 1]))
    }
}

impl FacetLookup for Partial<'_> {
    #[inline]
    fn is_facet(&self, s: VertexSet) -> bool {
        self.complex.is_facet(self.vertices(s))
    }

    #[inline]
    fn share_facet(&self, a: usize, b: usize) -> bool {
        self.shared[self.order[a - 1] - 1].contains(self.order[b - 1])
    }
}

pub(crate) struct LabelSearch<'a> {
    complex: &'a PureComplex,
    pred: Predicate,
    shared: Vec<VertexSet>,
    by_vertex: Vec<Vec<VertexSet>>,
    order: Vec<usize>,
    label: Vec<usize>,
    placed: VertexSet,
    group: Vec<VertexSet>,
    pub(crate) nodes: u64,
}

impl<'a> LabelSearch<'a> {
    pub(crate) fn new(complex: &'a PureComplex, pred: Predicate) -> Self {
        let n = complex.n();
        let mut by_vertex = vec![Vec::new(); n];
        for &f in complex.facets() {
            for v in f {
                by_vertex[v - 1].push(f);
            }
        }
        LabelSearch {
            complex,
            pred,
            shared: complex.shared_facet_masks(),
            by_vertex,
            order: Vec::with_capacity(n),
            label: vec![0; n],
            placed: VertexSet::EMPTY,
            group: Vec::new(),
            nodes: 0,
        }
    }

    /// Calls `visit` with the vertex order of every valid labeling, lexicographically.
    pub(crate) fn run<F>(&mut self, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let n = self.complex.n();
        if self.order.len() == n {
            return visit(&self.order);
        }
        let m = self.order.len() + 1;
        for v in VertexSet::full(n).difference(self.placed) {
            self.nodes += 1;
            self.order.push(v);
            self.label[v - 1] = m;
            self.placed = self.placed.with(v);
            if self.group_ok(v) {
                self.run(visit)?;
            }
            self.placed = self.placed.without(v);
            self.label[v - 1] = 0;
            self.order.pop();
        }
        ControlFlow::Continue(())
    }

    fn group_ok(&mut self, v: usize) -> bool {
        self.group.clear();
        for &f in &self.by_vertex[v - 1] {
            if f.is_subset(self.placed) {
                let labels = f
                    .iter()
                    .fold(VertexSet::EMPTY, |acc, u| acc.with(self.label[u - 1]));
                self.group.push(labels);
            }
        }
        if self.group.is_empty() {
            return true;
        }
        let lookup = Partial {
            complex: self.complex,
            shared: &self.shared,
            order: &self.order,
        };
        check_group(self.pred, &lookup, self.complex.d(), &self.group).is_none()
    }
}
