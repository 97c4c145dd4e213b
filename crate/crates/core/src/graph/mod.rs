//! Simple undirected graphs on vertices `1..=n`.

mod cliques;
mod corona;
mod enumerate;
mod format;

pub use cliques::maximal_cliques;
pub use corona::{corona, Attachment, Corona};
pub use enumerate::{
    canonical_form, edge_mask, GraphEnumeration, IsoClasses, MAX_CLASSES_N, MAX_LABELED_N,
};

use crate::error::{Error, Result};
use crate::labeling::Labeling;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Guard {
                what: "vertex count",
                limit: MAX_VERTICES,
                got: n,
            });
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `uv`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::invalid(format!("self-loop at vertex {u}")));
        }
        self.adj[u - 1] = self.adj[u - 1].with(v);
        self.adj[v - 1] = self.adj[v - 1].with(u);
        Ok(())
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n).expect("vertex count within limit");
        for v in 1..=n {
            g.adj[v - 1] = VertexSet::full(n).without(v);
        }
        g
    }

    /// The path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i, i + 1))).expect("valid path")
    }

    /// The cycle `1 - 2 - ... - n - 1`, `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut g = Graph::path(n);
        g.add_edge(1, n).expect("valid cycle");
        g
    }

    /// `K_{1,leaves}` with center `1`.
    pub fn star(leaves: usize) -> Self {
        Graph::from_edges(leaves + 1, (2..=leaves + 1).map(|v| (1, v))).expect("valid star")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v - 1]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && u <= self.n && self.adj[u - 1].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.n).flat_map(move |u| {
            self.adj[u - 1]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(|a| a.is_empty())
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            return Err(Error::invalid(format!(
                "vertex {v} outside 1..={}",
                self.n
            )));
        }
        Ok(())
    }

    pub(crate) fn check_subset(&self, u: VertexSet) -> Result<()> {
        if !u.is_subset(self.vertices()) {
            let bad = u.difference(self.vertices()).min().unwrap_or(0);
            return Err(Error::invalid(format!(
                "vertex {bad} outside 1..={}",
                self.n
            )));
        }
        Ok(())
    }

    /// Vertices of `u` reachable from `start` inside `G[u]`.
    #[inline]
    pub(crate) fn reach_within(&self, start: usize, u: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.adj[v - 1]);
            }
            frontier = next.intersection(u).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Connectivity of `G[u]` without range checks; the empty set counts as connected.
    #[inline]
    pub(crate) fn connected_within(&self, u: VertexSet) -> bool {
        match u.min() {
            None => true,
            Some(s) => self.reach_within(s, u) == u,
        }
    }

    /// Vertex sets of the connected components of `G[u]`, ordered by smallest vertex.
    pub fn components_within(&self, u: VertexSet) -> Vec<VertexSet> {
        let mut rest = u.intersection(self.vertices());
        let mut out = Vec::new();
        while let Some(s) = rest.min() {
            let comp = self.reach_within(s, rest);
            out.push(comp);
            rest = rest.difference(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.connected_within(self.vertices())
    }

    /// `G[u]`. The result keeps the original labels.
    pub fn induced_subgraph(&self, u: VertexSet) -> Result<InducedSubgraph> {
        self.check_subset(u)?;
        let adj = (1..=self.n)
            .map(|v| {
                if u.contains(v) {
                    self.adj[v - 1].intersection(u)
                } else {
                    VertexSet::EMPTY
                }
            })
            .collect();
        Ok(InducedSubgraph {
            vertices: u,
            graph: Graph { n: self.n, adj },
        })
    }

    /// Whether `G[u]` is connected. `u` must be nonempty.
    pub fn is_connected_subset(&self, u: VertexSet) -> Result<bool> {
        self.check_subset(u)?;
        if u.is_empty() {
            return Err(Error::invalid("connectivity of the empty vertex set"));
        }
        Ok(self.connected_within(u))
    }

    /// Every connected component of `G[u]` has at most `d` vertices.
    pub fn is_d_independent(&self, u: VertexSet, d: usize) -> Result<bool> {
        self.check_subset(u)?;
        if d == 0 {
            return Err(Error::invalid("d must be positive"));
        }
        Ok(self.d_independent_unchecked(u, d))
    }

    #[inline]
    pub(crate) fn d_independent_unchecked(&self, u: VertexSet, d: usize) -> bool {
        if u.len() <= d {
            return true;
        }
        let mut rest = u;
        while let Some(s) = rest.min() {
            let comp = self.reach_within(s, rest);
            if comp.len() > d {
                return false;
            }
            rest = rest.difference(comp);
        }
        true
    }

    /// The graph whose vertex `L(v)` corresponds to vertex `v` of `self`.
    pub fn relabel(&self, labeling: &Labeling) -> Result<Graph> {
        if labeling.len() != self.n {
            return Err(Error::invalid(format!(
                "labeling has {} entries for a graph on {} vertices",
                labeling.len(),
                self.n
            )));
        }
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for v in 1..=self.n {
            adj[labeling.label_of(v) - 1] = labeling.apply(self.adj[v - 1]);
        }
        Ok(Graph { n: self.n, adj })
    }

    /// `G[u]` renumbered to `1..=|u|` in increasing order of the original labels.
    pub fn compress(&self, u: VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_subset(u)?;
        let names = u.to_vec();
        let mut pos = vec![0usize; self.n + 1];
        for (i, &v) in names.iter().enumerate() {
            pos[v] = i + 1;
        }
        let mut g = Graph::new(names.len())?;
        for (i, &v) in names.iter().enumerate() {
            g.adj[i] = self.adj[v - 1].intersection(u).iter().map(|w| pos[w]).collect();
        }
        Ok((g, names))
    }

    /// Whether the graph is acyclic.
    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.n
    }

    /// Connected with every degree at most two and not a cycle (or a single vertex).
    pub fn is_path(&self) -> bool {
        self.is_connected() && self.is_forest() && (1..=self.n).all(|v| self.degree(v) <= 2)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}{}{v}", if self.n >= 10 { "-" } else { "" })?;
        }
        f.write_str("])")
    }
}

/// An induced subgraph that answers queries in the parent graph's labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    vertices: VertexSet,
    graph: Graph,
}

impl InducedSubgraph {
    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    pub fn has_vertex(&self, v: usize) -> bool {
        self.vertices.contains(v)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.graph.has_edge(u, v)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.graph.edges()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn is_connected(&self) -> bool {
        self.graph.connected_within(self.vertices)
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.graph.components_within(self.vertices)
    }
}
