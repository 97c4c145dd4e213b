//! Exhaustive enumeration of small labeled graphs and of isomorphism classes.

use std::collections::HashMap;

use super::Graph;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Largest `n` for labeled enumeration.
pub const MAX_LABELED_N: usize = 8;
/// Largest `n` for isomorphism-class enumeration.
pub const MAX_CLASSES_N: usize = 7;

/// All labeled graphs on `1..=n`, ordered by edge-set bitmask.
///
/// Bit `i` of the mask is the `i`-th vertex pair in lexicographic order
/// `(1,2), (1,3), ..., (1,n), (2,3), ...`. Any sub-range of masks can be
/// walked independently, so the stream can be split across workers.
#[derive(Clone, Debug)]
pub struct GraphEnumeration {
    n: usize,
    connected_only: bool,
    pairs: Vec<(usize, usize)>,
}

impl GraphEnumeration {
    pub fn new(n: usize, connected_only: bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("graph enumeration needs n >= 1"));
        }
        if n > MAX_LABELED_N {
            return Err(Error::Guard {
                what: "labeled graph enumeration",
                limit: MAX_LABELED_N,
                got: n,
            });
        }
        let pairs = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .collect();
        Ok(GraphEnumeration {
            n,
            connected_only,
            pairs,
        })
    }

    /// Number of masks, `2^(n(n-1)/2)`.
    pub fn mask_count(&self) -> u64 {
        1u64 << self.pairs.len()
    }

    pub fn graph_at(&self, mask: u64) -> Graph {
        let mut g = Graph::new(self.n).expect("n within limit");
        for (i, &(u, v)) in self.pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.adj[u - 1] = g.adj[u - 1].with(v);
                g.adj[v - 1] = g.adj[v - 1].with(u);
            }
        }
        g
    }

    /// Graphs whose mask lies in `range`, after the connectivity filter.
    pub fn iter_range(&self, range: std::ops::Range<u64>) -> impl Iterator<Item = Graph> + '_ {
        range
            .map(move |m| self.graph_at(m))
            .filter(move |g| !self.connected_only || g.is_connected())
    }

    pub fn iter(&self) -> impl Iterator<Item = Graph> + '_ {
        self.iter_range(0..self.mask_count())
    }
}

/// Edge mask in the pair order used by [`GraphEnumeration`].
pub fn edge_mask(g: &Graph) -> u64 {
    let n = g.n();
    let mut mask = 0u64;
    let mut i = 0;
    for u in 1..=n {
        for v in u + 1..=n {
            if g.has_edge(u, v) {
                mask |= 1 << i;
            }
            i += 1;
        }
    }
    mask
}

/// One representative per isomorphism class of graphs on `n` vertices.
#[derive(Clone, Debug)]
pub struct IsoClasses {
    graphs: Vec<Graph>,
}

impl IsoClasses {
    /// Built by vertex extension from the classes on `n - 1` vertices, deduplicated by
    /// [`canonical_form`]. Representatives are in canonical labeling, sorted by edge mask.
    pub fn new(n: usize, connected_only: bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("graph enumeration needs n >= 1"));
        }
        if n > MAX_CLASSES_N {
            return Err(Error::Guard {
                what: "isomorphism class enumeration",
                limit: MAX_CLASSES_N,
                got: n,
            });
        }
        let mut level = vec![Graph::new(1).expect("K1")];
        for k in 2..=n {
            let mut found: HashMap<u64, Graph> = HashMap::new();
            for h in &level {
                for nb in 0u32..1 << (k - 1) {
                    let mut g = Graph::new(k).expect("k within limit");
                    for (u, v) in h.edges() {
                        g.add_edge(u, v).expect("valid edge");
                    }
                    for u in VertexSet::from_bits(nb) {
                        g.add_edge(u, k).expect("valid edge");
                    }
                    let (code, rep) = canonical_form(&g);
                    found.entry(code).or_insert(rep);
                }
            }
            level = found.into_values().collect();
        }
        let mut graphs: Vec<Graph> = level
            .into_iter()
            .filter(|g| !connected_only || g.is_connected())
            .collect();
        graphs.sort_by_key(edge_mask);
        Ok(IsoClasses { graphs })
    }

    pub fn graphs(&self) -> &[Graph] {
        &self.graphs
    }

    pub fn into_graphs(self) -> Vec<Graph> {
        self.graphs
    }
}

/// Minimum adjacency code over all `n!` relabelings, and the graph achieving it.
///
/// The code reads vertex pairs in colex order `(1,2), (1,3), (2,3), (1,4), ...`
/// as a binary number, most significant bit first. Positions are filled one at
/// a time; a partial relabeling whose code prefix already exceeds the best
/// complete code is abandoned, which never changes the minimum.
pub fn canonical_form(g: &Graph) -> (u64, Graph) {
    let n = g.n();
    let total_bits = n * n.saturating_sub(1) / 2;
    let mut state = Canon {
        g,
        n,
        total_bits,
        order: Vec::with_capacity(n),
        best: None,
    };
    state.search(VertexSet::EMPTY, 0, 0, true);
    let (code, order) = state.best.expect("at least one relabeling");
    let mut rep = Graph::new(n).expect("n within limit");
    for p in 1..=n {
        for q in p + 1..=n {
            if g.has_edge(order[p - 1], order[q - 1]) {
                rep.add_edge(p, q).expect("valid edge");
            }
        }
    }
    (code, rep)
}

struct Canon<'a> {
    g: &'a Graph,
    n: usize,
    total_bits: usize,
    order: Vec<usize>,
    best: Option<(u64, Vec<usize>)>,
}

impl Canon<'_> {
    /// `tight`: the prefix built so far equals the best code's prefix.
    fn search(&mut self, used: VertexSet, prefix: u64, bits: usize, tight: bool) {
        if self.order.len() == self.n {
            let better = match &self.best {
                None => true,
                Some((b, _)) => prefix < *b,
            };
            if better {
                self.best = Some((prefix, self.order.clone()));
            }
            return;
        }
        for w in VertexSet::full(self.n).difference(used) {
            let mut code = prefix;
            for &q in &self.order {
                code = code << 1 | u64::from(self.g.has_edge(q, w));
            }
            let nbits = bits + self.order.len();
            let mut next_tight = false;
            if let (true, Some((b, _))) = (tight, &self.best) {
                let best_prefix = b >> (self.total_bits - nbits);
                if code > best_prefix {
                    continue;
                }
                next_tight = code == best_prefix;
            }
            self.order.push(w);
            self.search(used.with(w), code, nbits, next_tight || self.best.is_none());
            self.order.pop();
        }
    }
}
