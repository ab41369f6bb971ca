//! Experiments on hereditary classes: conjecture checks, slack, antichains
//! and corpora.

pub mod antichain;
pub mod conjectures;
pub mod corpus;
pub mod planar;
pub mod slack;

pub use antichain::{
    class_membership, enumerate_connected_4_regular, realize_forbidden_sequence, verify_antichain, AntichainReport,
    ForbiddenSequenceRealization, SizeStatus,
};
pub use conjectures::{
    check_bipartition_conjecture, check_bipartition_conjecture_with, check_chi_omega_sq, f4_search, f_search,
    BipartitionVerdict, ChiOmegaSquare, SearchBudget, SearchReport,
};
pub use corpus::{corpus, random_chordal, random_long_hole_free, random_substitution, CorpusKind, CorpusParams};
pub use planar::is_planar;
pub use slack::{
    eh_exponent, gyarfas_slack, gyarfas_slack_capped, max_anticomplete_odd_holes, AnticompleteHoles, EHReport,
    SlackReport,
};
