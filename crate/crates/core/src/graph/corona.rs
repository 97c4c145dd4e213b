use std::collections::HashSet;

use super::Graph;
use crate::error::{Error, Result};

/// A graph hung on one base vertex, with caller-chosen external vertex names.
#[derive(Clone, Debug)]
pub struct Attachment {
    /// `names[i]` is the external name of local vertex `i + 1`.
    pub names: Vec<usize>,
    pub graph: Graph,
}

impl Attachment {
    pub fn new(names: Vec<usize>, graph: Graph) -> Result<Self> {
        if names.len() != graph.n() {
            return Err(Error::invalid(format!(
                "{} names for a graph on {} vertices",
                names.len(),
                graph.n()
            )));
        }
        Ok(Attachment { names, graph })
    }

    pub fn empty() -> Self {
        Attachment {
            names: Vec::new(),
            graph: Graph::new(0).expect("empty graph"),
        }
    }
}

/// Result of [`corona`], relabeled onto `1..=N`.
#[derive(Clone, Debug)]
pub struct Corona {
    pub graph: Graph,
    /// `names[v - 1]` is the external name of corona vertex `v`. Base vertices keep their labels.
    pub names: Vec<usize>,
}

/// Disjoint union of `base` and every `family[x - 1]`, with `x` joined to all of its attachment.
///
/// Base vertices keep labels `1..=n`; attached vertices follow in order of their base vertex.
pub fn corona(base: &Graph, family: &[Attachment]) -> Result<Corona> {
    let n = base.n();
    if family.len() != n {
        return Err(Error::invalid(format!(
            "corona needs one attachment per base vertex: got {} for {n}",
            family.len()
        )));
    }
    let mut seen: HashSet<usize> = (1..=n).collect();
    for att in family {
        for &name in &att.names {
            if !seen.insert(name) {
                return Err(Error::invalid(format!(
                    "vertex name {name} is used more than once"
                )));
            }
        }
    }
    let total = n + family.iter().map(|a| a.graph.n()).sum::<usize>();
    let mut g = Graph::new(total)?;
    for (u, v) in base.edges() {
        g.add_edge(u, v)?;
    }
    let mut names: Vec<usize> = (1..=n).collect();
    let mut offset = n;
    for (x, att) in (1..=n).zip(family) {
        for (u, v) in att.graph.edges() {
            g.add_edge(offset + u, offset + v)?;
        }
        for w in 1..=att.graph.n() {
            g.add_edge(x, offset + w)?;
        }
        names.extend_from_slice(&att.names);
        offset += att.graph.n();
    }
    Ok(Corona { graph: g, names })
}
