//! Strong interval representations by exhaustive endpoint-order search.
//!
//! Whether the union of a vertex set's intervals is one interval depends only
//! on which intervals meet, i.e. on the intersection graph. Any family of
//! closed intervals can be perturbed to `2n` distinct endpoints without
//! changing which pairs meet or creating a proper containment (break ties
//! left-before-right, and equal intervals in a fixed vertex order). So the
//! orders of `2n` distinct endpoints, written as ranks `1..=2n`, cover every
//! realizable intersection pattern. They are enumerated once per `n` and the
//! first model of each intersection graph is kept, together with the first
//! containment-free model and a unit-length model where one was found.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::graph::{edge_mask, Graph};
use crate::vertex_set::VertexSet;

/// Largest `n` for which the endpoint table can be built.
pub(crate) const MAX_TABLE_N: usize = 6;

pub(crate) type Pairs = Vec<(i64, i64)>;

#[derive(Debug)]
pub(crate) struct Models {
    pub(crate) graph: Graph,
    pub(crate) general: Pairs,
    pub(crate) proper: Option<Pairs>,
    pub(crate) unit: Option<Pairs>,
}

#[derive(Debug)]
pub(crate) struct ModelTable {
    /// Keyed by the edge mask of the intersection graph.
    pub(crate) models: BTreeMap<u64, Models>,
    pub(crate) orders: u64,
}

pub(crate) fn model_table(n: usize) -> &'static ModelTable {
    static TABLES: [OnceLock<ModelTable>; MAX_TABLE_N + 1] =
        [const { OnceLock::new() }; MAX_TABLE_N + 1];
    assert!(n <= MAX_TABLE_N, "endpoint table requested for n = {n}");
    TABLES[n].get_or_init(|| build(n))
}

fn build(n: usize) -> ModelTable {
    let mut table = ModelTable {
        models: BTreeMap::new(),
        orders: 0,
    };
    let mut left = vec![0i64; n];
    let mut right = vec![0i64; n];
    place(n, 1, VertexSet::EMPTY, VertexSet::full(n), &mut left, &mut right, &mut table);
    table
}

fn place(
    n: usize,
    pos: i64,
    open: VertexSet,
    fresh: VertexSet,
    left: &mut [i64],
    right: &mut [i64],
    table: &mut ModelTable,
) {
    if open.is_empty() && fresh.is_empty() {
        record(n, left, right, table);
        return;
    }
    for v in fresh {
        left[v - 1] = pos;
        place(n, pos + 1, open.with(v), fresh.without(v), left, right, table);
    }
    for v in open {
        right[v - 1] = pos;
        place(n, pos + 1, open.without(v), fresh, left, right, table);
    }
}

fn record(n: usize, left: &[i64], right: &[i64], table: &mut ModelTable) {
    table.orders += 1;
    let mut g = Graph::new(n).expect("table sizes are small");
    for u in 0..n {
        for v in u + 1..n {
            if left[u] < right[v] && left[v] < right[u] {
                g.add_edge(u + 1, v + 1).expect("distinct vertices");
            }
        }
    }
    let pairs: Pairs = left.iter().copied().zip(right.iter().copied()).collect();
    let proper = !(0..n).any(|u| (0..n).any(|v| left[u] < left[v] && right[v] < right[u]));
    let entry = table.models.entry(edge_mask(&g)).or_insert_with(|| Models {
        graph: g.clone(),
        general: pairs.clone(),
        proper: None,
        unit: None,
    });
    if proper && entry.proper.is_none() {
        entry.proper = Some(pairs.clone());
    }
    if proper && entry.unit.is_none() {
        entry.unit = unit_realization(&g, &pairs);
    }
}

/// Integer left endpoints in `0..=2n²` for intervals of length `n` with the
/// same intersection graph, keeping the left-endpoint order of `pairs`.
///
/// Difference constraints along that order: meeting pairs stay within `n`,
/// disjoint pairs at least `n + 1` apart. Solved by Bellman-Ford.
pub(crate) fn unit_realization(g: &Graph, pairs: &[(i64, i64)]) -> Option<Pairs> {
    let n = g.n();
    let len = n as i64;
    let mut order: Vec<usize> = (1..=n).collect();
    order.sort_by_key(|&v| (pairs[v - 1].0, v));
    // edge (a, b, w): x_b - x_a <= w
    let mut edges = Vec::new();
    for (i, &a) in order.iter().enumerate() {
        for &b in &order[i + 1..] {
            edges.push((b, a, 0));
            if g.has_edge(a, b) {
                edges.push((a, b, len));
            } else {
                edges.push((b, a, -(len + 1)));
            }
        }
    }
    let mut dist = vec![0i64; n + 1];
    for _ in 0..=n {
        let mut changed = false;
        for &(a, b, w) in &edges {
            if dist[a] + w < dist[b] {
                dist[b] = dist[a] + w;
                changed = true;
            }
        }
        if !changed {
            let low = dist[1..].iter().copied().min().unwrap_or(0);
            let out: Pairs = dist[1..].iter().map(|&x| (x - low, x - low + len)).collect();
            let bound = 2 * len * len;
            let meets = |u: usize, v: usize| {
                out[u - 1].0 <= out[v - 1].1 && out[v - 1].0 <= out[u - 1].1
            };
            let ok = out.iter().all(|&(l, _)| l <= bound)
                && (1..=n).all(|u| (u + 1..=n).all(|v| meets(u, v) == g.has_edge(u, v)));
            return ok.then_some(out);
        }
    }
    None
}
