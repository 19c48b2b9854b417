//! The ℓ-link graph calculus on finite loopless multigraphs.
//!
//! An ℓ-link is a walk of length ℓ with no two consecutive edges equal,
//! identified with its reversal. The ℓ-link graph of `G` has the ℓ-links as
//! vertices and one edge per (ℓ+1)-link joining its initial and final
//! ℓ-links. This crate builds link graphs and path graphs, decides
//! ℓ-incidence and ℓ-minimality, counts cyclic components of partitioned
//! graphs and enumerates minimal roots.

pub mod canon;
pub mod construct;
pub mod dot;
pub mod error;
pub mod graph;
pub mod incidence;
pub mod metrics;
pub mod partition;
pub mod search;
pub mod tree;
pub mod walk;

pub use canon::{canonical_form, find_isomorphism, is_isomorphic, CanonicalForm, Isomorphism};
pub use error::{Error, Result};
pub use graph::{Multigraph, Subgraph};
pub use metrics::{metrics, subdivision, Dist, GraphMetrics};
pub use partition::{PartitionViolation, PartitionedGraph};
pub use walk::{enumerate_links, enumerate_paths, Arc, Link};
pub use construct::{link_graph, partitioned_link_graph, path_graph, LinkGraphResult};
pub use incidence::{incidence_subgraph, is_l_equivalent, is_l_minimal, IncidenceReport, Unit};
pub use search::{minimal_link_roots, minimal_path_roots, RootSet, SearchBounds, SearchOptions};
