//! Instance streams: enumerated graphs, labeled trees and corona samples.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::Result;
use crate::graph::{corona, Attachment, Graph, GraphEnumeration, IsoClasses};
use crate::vertex_set::VertexSet;

/// Every graph on `n` vertices: labeled when `n <= labeled_up_to`, else one per class.
pub(crate) fn graphs(n: usize, connected_only: bool, labeled_up_to: usize) -> Result<Vec<Graph>> {
    if n <= labeled_up_to {
        Ok(GraphEnumeration::new(n, connected_only)?.iter().collect())
    } else {
        Ok(IsoClasses::new(n, connected_only)?.into_graphs())
    }
}

/// All `n^(n-2)` labeled trees on `1..=n`, decoded from Prüfer sequences in lexicographic order.
pub fn labeled_trees(n: usize) -> Result<Vec<Graph>> {
    match n {
        0 => return Ok(Vec::new()),
        1 => return Ok(vec![Graph::new(1)?]),
        2 => return Ok(vec![Graph::path(2)]),
        _ => {}
    }
    let len = n - 2;
    let mut seq = vec![1usize; len];
    let mut out = Vec::with_capacity(n.pow(len as u32));
    loop {
        out.push(decode_prufer(n, &seq)?);
        let mut i = len;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if seq[i] < n {
                seq[i] += 1;
                break;
            }
            seq[i] = 1;
        }
    }
}

fn decode_prufer(n: usize, seq: &[usize]) -> Result<Graph> {
    let mut degree = vec![1usize; n + 1];
    for &v in seq {
        degree[v] += 1;
    }
    let mut g = Graph::new(n)?;
    for &v in seq {
        let leaf = (1..=n).find(|&u| degree[u] == 1).expect("a leaf remains");
        g.add_edge(leaf, v)?;
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (1..=n).filter(|&u| degree[u] == 1).collect();
    g.add_edge(rest[0], rest[1])?;
    Ok(g)
}

#[derive(Clone, Debug)]
pub struct CoronaSample {
    pub graph: Graph,
    pub base: Graph,
    /// The connected base subset with `d - 1` vertices.
    pub hub: VertexSet,
    /// Corona vertices hung on hub vertices.
    pub hub_attached: VertexSet,
    /// Three pairwise non-adjacent vertices of `hub_attached`.
    pub independent: VertexSet,
}

fn random_graph<R: Rng>(rng: &mut R, n: usize) -> Result<Graph> {
    let mut g = Graph::new(n)?;
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(0.5) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// Draws a corona graph with at most `max_n` vertices meeting the hypotheses for `d`:
/// a connected base subset `G'` of `d - 1` vertices whose attachments together hold an
/// independent triple. Needs `d >= 2` and `max_n >= d + 2`.
pub fn sample_corona<R: Rng>(rng: &mut R, d: usize, max_n: usize) -> Result<CoronaSample> {
    assert!(d >= 2 && max_n >= d + 2, "no corona instance fits");
    loop {
        let base_n = rng.gen_range(d - 1..=max_n - 3);
        let base = random_graph(rng, base_n)?;
        let hubs: Vec<VertexSet> = base
            .vertices()
            .subsets_of_size(d - 1)
            .filter(|&s| base.connected_within(s))
            .collect();
        let Some(&hub) = hubs.choose(rng) else {
            continue;
        };
        let hub_list = hub.to_vec();
        let m = rng.gen_range(3..=max_n - base_n);
        let mut sizes = vec![0usize; base_n];
        for i in 0..m {
            let owner = if i < 3 {
                *hub_list.choose(rng).expect("hub is non-empty")
            } else {
                rng.gen_range(1..=base_n)
            };
            sizes[owner - 1] += 1;
        }
        let mut family = Vec::with_capacity(base_n);
        let mut next = base_n + 1;
        let mut hub_attached = VertexSet::default();
        for x in 1..=base_n {
            let k = sizes[x - 1];
            let names: Vec<usize> = (next..next + k).collect();
            if hub.contains(x) {
                for &v in &names {
                    hub_attached = hub_attached.with(v);
                }
            }
            next += k;
            family.push(Attachment::new(names, random_graph(rng, k)?)?);
        }
        let graph = corona(&base, &family)?.graph;
        let independent = hub_attached
            .subsets_of_size(3)
            .find(|&s| s.iter().all(|v| graph.neighbors(v).intersection(s).is_empty()));
        if let Some(independent) = independent {
            return Ok(CoronaSample {
                graph,
                base,
                hub,
                hub_attached,
                independent,
            });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn tree_counts_follow_cayley() {
        for n in 1..=6 {
            let trees = labeled_trees(n).unwrap();
            let expected = if n == 1 { 1 } else { n.pow(n as u32 - 2) };
            assert_eq!(trees.len(), expected);
            assert!(trees.iter().all(|t| t.is_forest() && t.is_connected()));
            let distinct: std::collections::HashSet<_> = trees.iter().collect();
            assert_eq!(distinct.len(), expected);
        }
    }

    #[test]
    fn enumerated_graph_counts() {
        assert_eq!(graphs(4, false, 4).unwrap().len(), 64);
        assert_eq!(graphs(4, true, 4).unwrap().len(), 38);
        assert_eq!(graphs(4, false, 3).unwrap().len(), 11);
        assert_eq!(graphs(4, true, 3).unwrap().len(), 6);
    }

    #[test]
    fn corona_samples_meet_hypotheses() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for d in 2..=4 {
            for _ in 0..20 {
                let s = sample_corona(&mut rng, d, 8).unwrap();
                assert!(s.graph.n() <= 8);
                assert_eq!(s.hub.len(), d - 1);
                assert!(s.base.connected_within(s.hub));
                assert!(s.independent.is_subset(s.hub_attached));
                for v in s.hub_attached.iter() {
                    let owners = s.graph.neighbors(v).intersection(s.base.vertices());
                    assert_eq!(owners.len(), 1);
                    assert!(owners.is_subset(s.hub));
                }
            }
        }
    }

    #[test]
    fn corona_sampling_is_seeded() {
        let a = sample_corona(&mut ChaCha8Rng::seed_from_u64(3), 3, 8).unwrap();
        let b = sample_corona(&mut ChaCha8Rng::seed_from_u64(3), 3, 8).unwrap();
        assert_eq!(a.graph, b.graph);
    }
}
