//! Subgraph embeddings, homomorphism counts and the quantities built on them.

pub mod bounds;
pub mod embed;
pub mod fourcycle;
pub mod hom;
pub mod relation;

pub use embed::{
    contains, count_copies, count_embeddings, find_embedding, verify_embedding, EmbedConstraints,
    Embedding,
};
pub use fourcycle::{four_cycle_census, thin_cycle_auxiliary, FourCycleCensus, ThinCycleParams};
pub use hom::{bad_hom_cycle_count, hom_cycle, path_hom_between, profile_alpha_beta_gamma};
pub use relation::{find_good_hom_cycle, min_nice_beta, Relation};
