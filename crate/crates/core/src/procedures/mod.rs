//! Copy-finding and relation procedures, with their intermediate guarantees checked at runtime.

pub mod case2;
pub mod cut;
pub mod glued;
pub mod packing;
pub mod partition;

pub use case2::{case2_relation_pipeline, path_prism_hypothesis, Trace};
pub use cut::{balanced_bipartite_subgraph, min_degree_peel, Peeled};
pub use glued::{find_glued_copy, GluedOutcome, Route, Stage};
pub use packing::{greedy_pack, PackingError, PackingResult};
pub use partition::{good_partition, GoodPartition, PartitionFailure};
