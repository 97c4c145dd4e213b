pub mod complex;
pub mod error;
pub mod forbidden;
pub mod graph;
pub mod harness;
pub mod interval;
pub mod labeling;
pub mod predicates;
pub mod recognition;
pub mod sortability;
pub mod vertex_set;

pub use complex::{delta_d, ind_face_sets, ind_faces, ind_facets, FaceSetByCardinality, PureComplex};
pub use error::{Error, Result};
pub use graph::{maximal_cliques, Graph};
pub use interval::{Interval, IntervalSystem, RepresentationFlags};
pub use labeling::Labeling;
pub use vertex_set::{VertexSet, MAX_VERTICES};
