use super::Graph;
use crate::vertex_set::VertexSet;

/// Inclusion-maximal cliques, sorted lexicographically.
///
/// Bron–Kerbosch with Tomita pivoting over bitmask candidate sets.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    if g.n() == 0 {
        return out;
    }
    expand(g, VertexSet::EMPTY, g.vertices(), VertexSet::EMPTY, &mut out);
    out.sort();
    out
}

fn expand(g: &Graph, r: VertexSet, p: VertexSet, x: VertexSet, out: &mut Vec<VertexSet>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = p
        .union(x)
        .iter()
        .max_by_key(|&u| g.neighbors(u).intersection(p).len())
        .expect("p is nonempty");
    let mut p = p;
    let mut x = x;
    for v in p.difference(g.neighbors(pivot)) {
        let nv = g.neighbors(v);
        expand(g, r.with(v), p.intersection(nv), x.intersection(nv), out);
        p = p.without(v);
        x = x.with(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Subset brute force: every clique that no single vertex extends.
    fn brute_force(g: &Graph) -> Vec<VertexSet> {
        let n = g.n();
        let is_clique = |s: VertexSet| {
            s.iter()
                .all(|u| s.without(u).is_subset(g.neighbors(u)))
        };
        let mut out: Vec<VertexSet> = (1u32..1 << n)
            .map(VertexSet::from_bits)
            .filter(|&s| is_clique(s))
            .filter(|&s| {
                g.vertices()
                    .difference(s)
                    .iter()
                    .all(|v| !is_clique(s.with(v)))
            })
            .collect();
        out.sort();
        out
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    #[test]
    fn examples() {
        assert_eq!(maximal_cliques(&Graph::complete(4)), vec![VertexSet::full(4)]);
        let example = Graph::from_edges(4, [(1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(maximal_cliques(&example), brute_force(&example));
        assert_eq!(maximal_cliques(&example), vec![set(&[1, 2]), set(&[2, 3, 4])]);
        let c5 = Graph::cycle(5);
        assert_eq!(maximal_cliques(&c5), brute_force(&c5));
        assert_eq!(
            maximal_cliques(&c5),
            vec![set(&[1, 2]), set(&[1, 5]), set(&[2, 3]), set(&[3, 4]), set(&[4, 5])]
        );
        assert_eq!(maximal_cliques(&Graph::new(0).unwrap()), vec![]);
        assert_eq!(
            maximal_cliques(&Graph::new(2).unwrap()),
            vec![set(&[1]), set(&[2])]
        );
    }

    #[test]
    fn agrees_with_brute_force_on_all_graphs_up_to_five() {
        for n in 1..=5 {
            for g in super::super::GraphEnumeration::new(n, false).unwrap().iter() {
                assert_eq!(maximal_cliques(&g), brute_force(&g), "{g:?}");
            }
        }
    }
}
