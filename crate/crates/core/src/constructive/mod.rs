//! Explicit coloring constructions. Every public colorer verifies its output
//! before returning it.

pub mod lemma;

pub use lemma::{
    avoiding_set, check_help_set, cover_set, independent_complement_set, lemma_help_set, HelpSet, HelpVariant,
};
pub mod prism;

pub use prism::{color_prism_1122, normalize_prism, CaseTrace, PrismColorResult, PrismFrame};
pub mod two_factor;

pub use two_factor::{color_gpg_1122, color_two_factor_1122, gpg_two_factor_spec};
pub mod subdivision;
pub mod witness;

pub use subdivision::{color_bipartite_subdivision, color_si_complete, color_si_graph, color_si_tree};
pub use witness::{petersen_subdivision_witness, PETERSEN_SUBDIVISION_CLASSES};
