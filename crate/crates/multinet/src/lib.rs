//! Classification of abstract light dual multinets of order 6 with a
//! unique long line, and the decision procedure for their weak projective
//! embeddings over characteristic-zero fields.
//!
//! The pipeline: catalog quasigroups and their subsquares (`quasigroup`)
//! feed the multinet constructions and the isomorphism classification
//! (`incidence`, `iso`, `classify`); each class representative gets a
//! parametric coordinate pre-embedding whose collinearity ideal is split
//! into minimal components, tested for admissibility and measured
//! (`preembed`, `embedding`), reproducing the embedded reference tables
//! (`golden`).

pub mod classify;
pub mod embedding;
pub mod exec;
pub mod golden;
pub mod incidence;
pub mod iso;
pub mod preembed;
pub mod quasigroup;

pub use classify::{classify_order6, Classification, MultinetClass};
pub use embedding::{
    analyze_class, collinearity_ideal, embedding_verdict, is_admissible, merged_blocks,
    minimal_primes, ComponentReport, EmbeddingError, MergedBlock, MergedBlockKind, Verdict,
};
pub use exec::ExecMode;
pub use incidence::{
    dual_3net, is_well_indexed, multinet_with_superline, well_index, IncidenceError,
    IncidenceStructure, Multinet,
};
pub use iso::{automorphism_group, is_isomorphic, AutomorphismGroup, IsoCertificate};
pub use preembed::{
    standard_preembedding, standard_preembedding_with_order, z3_example_preembedding,
    z3_example_preembedding_with_order, PreEmbedding, PreEmbeddingError,
};
pub use quasigroup::{
    catalog, catalog_table, parse_latin_square, Isostrophism, LatinSquare, QuasigroupError,
    RolePermutation, SubsquareTriple,
};
