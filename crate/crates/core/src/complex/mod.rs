//! Pure simplicial complexes given by their facets, and the two graph builders.

mod format;

pub use format::{parse_face_list, write_face_list};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labeling::Labeling;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A pure `d`-dimensional complex on vertices `1..=n`: every facet has `d + 1` vertices.
///
/// Vertices that lie in no facet are allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PureComplex {
    n: usize,
    d: usize,
    facets: Vec<VertexSet>,
    table: Vec<u64>,
}

impl PureComplex {
    /// Duplicate facets are merged; facets are kept in lexicographic order.
    pub fn new<I>(n: usize, d: usize, facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        if n > MAX_VERTICES {
            return Err(Error::Guard {
                what: "vertex count",
                limit: MAX_VERTICES,
                got: n,
            });
        }
        let mut list: Vec<VertexSet> = facets.into_iter().collect();
        for f in &list {
            if f.len() != d + 1 {
                return Err(Error::invalid(format!(
                    "facet {f} has {} vertices, expected {}",
                    f.len(),
                    d + 1
                )));
            }
            if !f.is_subset(VertexSet::full(n)) {
                return Err(Error::invalid(format!("facet {f} leaves 1..={n}")));
            }
        }
        list.sort();
        list.dedup();
        Ok(Self::from_sorted(n, d, list))
    }

    fn from_sorted(n: usize, d: usize, facets: Vec<VertexSet>) -> Self {
        let mut table = vec![0u64; (1usize << n).div_ceil(64)];
        for f in &facets {
            let b = f.bits() as usize;
            table[b / 64] |= 1 << (b % 64);
        }
        PureComplex {
            n,
            d,
            facets,
            table,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn d(&self) -> usize {
        self.d
    }

    #[inline]
    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    #[inline]
    pub fn is_facet(&self, s: VertexSet) -> bool {
        let b = s.bits() as usize;
        b >> self.n == 0 && self.table[b / 64] >> (b % 64) & 1 == 1
    }

    pub fn covered_vertices(&self) -> VertexSet {
        self.facets
            .iter()
            .fold(VertexSet::EMPTY, |acc, &f| acc.union(f))
    }

    /// Some vertex of `1..=n` lies in no facet.
    pub fn has_uncovered_vertices(&self) -> bool {
        self.covered_vertices() != VertexSet::full(self.n)
    }

    /// For each vertex, the vertices sharing at least one facet with it (itself included when covered).
    pub fn shared_facet_masks(&self) -> Vec<VertexSet> {
        let mut out = vec![VertexSet::EMPTY; self.n];
        for &f in &self.facets {
            for v in f {
                out[v - 1] = out[v - 1].union(f);
            }
        }
        out
    }

    /// Whether the facet-overlap walk joins every pair of covered vertices.
    ///
    /// Uncovered vertices are ignored; see [`PureComplex::has_uncovered_vertices`].
    pub fn is_connected_complex(&self) -> Result<bool> {
        let Some(&first) = self.facets.first() else {
            return Err(Error::invalid("connectivity of a complex with no facets"));
        };
        let mut reached = first;
        loop {
            let grown = self
                .facets
                .iter()
                .filter(|f| !f.intersection(reached).is_empty())
                .fold(reached, |acc, &f| acc.union(f));
            if grown == reached {
                break;
            }
            reached = grown;
        }
        Ok(reached == self.covered_vertices())
    }

    /// The pure `k`-complex of all `(k + 1)`-subsets of facets.
    pub fn k_skeleton(&self, k: usize) -> Result<PureComplex> {
        if k > self.d {
            return Err(Error::invalid(format!(
                "skeleton dimension {k} exceeds complex dimension {}",
                self.d
            )));
        }
        if k == self.d {
            return Ok(self.clone());
        }
        let faces = self
            .facets
            .iter()
            .flat_map(|f| f.subsets_of_size(k + 1));
        PureComplex::new(self.n, k, faces)
    }

    /// The complex with every vertex `v` renamed to `L(v)`.
    pub fn relabel(&self, labeling: &Labeling) -> Result<PureComplex> {
        if labeling.len() != self.n {
            return Err(Error::invalid(format!(
                "labeling has {} entries for a complex on {} vertices",
                labeling.len(),
                self.n
            )));
        }
        let mut facets: Vec<VertexSet> = self.facets.iter().map(|&f| labeling.apply(f)).collect();
        facets.sort();
        Ok(Self::from_sorted(self.n, self.d, facets))
    }

    /// Facets whose largest vertex is `m`, for each `m` in `1..=n`.
    pub(crate) fn facets_by_max(&self) -> Vec<Vec<VertexSet>> {
        let mut groups = vec![Vec::new(); self.n + 1];
        for &f in &self.facets {
            groups[f.max().expect("facets are nonempty")].push(f);
        }
        groups
    }
}

impl std::fmt::Debug for PureComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PureComplex(n={}, d={}, facets={:?})", self.n, self.d, self.facets)
    }
}

/// All faces of one cardinality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSetByCardinality {
    pub t: usize,
    pub faces: Vec<VertexSet>,
}

impl FaceSetByCardinality {
    pub fn new(t: usize, faces: Vec<VertexSet>) -> Result<Self> {
        if let Some(f) = faces.iter().find(|f| f.len() != t) {
            return Err(Error::invalid(format!("face {f} does not have {t} vertices")));
        }
        Ok(FaceSetByCardinality { t, faces })
    }

    pub fn relabel(&self, labeling: &Labeling) -> FaceSetByCardinality {
        let mut faces: Vec<VertexSet> = self.faces.iter().map(|&f| labeling.apply(f)).collect();
        faces.sort();
        FaceSetByCardinality { t: self.t, faces }
    }
}

fn check_d(d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::invalid("d must be a positive integer"));
    }
    Ok(())
}

/// Δ_d(G): facets are the `(d + 1)`-subsets inducing connected subgraphs.
pub fn delta_d(g: &Graph, d: usize) -> Result<PureComplex> {
    check_d(d)?;
    if d + 1 > g.n() {
        return Err(Error::invalid(format!(
            "d + 1 = {} exceeds the {} vertices of the graph",
            d + 1,
            g.n()
        )));
    }
    let facets: Vec<VertexSet> = g
        .vertices()
        .subsets_of_size(d + 1)
        .filter(|&u| g.connected_within(u))
        .collect();
    Ok(PureComplex::from_sorted(g.n(), d, facets))
}

/// The `t`-element faces of Ind_d(G), i.e. the `d`-independent `t`-subsets.
pub fn ind_faces(g: &Graph, d: usize, t: usize) -> Result<FaceSetByCardinality> {
    check_d(d)?;
    if t > g.n() {
        return Err(Error::invalid(format!(
            "face cardinality {t} exceeds the {} vertices",
            g.n()
        )));
    }
    let faces = g
        .vertices()
        .subsets_of_size(t)
        .filter(|&u| g.d_independent_unchecked(u, d))
        .collect();
    Ok(FaceSetByCardinality { t, faces })
}

/// Face sets of Ind_d(G) for every cardinality `1..=dim + 1`.
pub fn ind_face_sets(g: &Graph, d: usize) -> Result<Vec<FaceSetByCardinality>> {
    check_d(d)?;
    let mut out = Vec::new();
    for t in 1..=g.n() {
        let level = ind_faces(g, d, t)?;
        if level.faces.is_empty() {
            break;
        }
        out.push(level);
    }
    Ok(out)
}

/// Inclusion-maximal `d`-independent sets, lexicographic order.
pub fn ind_facets(g: &Graph, d: usize) -> Result<Vec<VertexSet>> {
    check_d(d)?;
    let all = g.vertices();
    let mut out: Vec<VertexSet> = (0u32..1 << g.n())
        .map(VertexSet::from_bits)
        .filter(|&u| g.d_independent_unchecked(u, d))
        .filter(|&u| {
            all.difference(u)
                .iter()
                .all(|v| !g.d_independent_unchecked(u.with(v), d))
        })
        .collect();
    out.sort();
    Ok(out)
}
