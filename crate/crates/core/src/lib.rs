//! Virtual link diagrams as multi-component Gauss codes.
//!
//! The crate covers parsing and validation of Gauss codes, Reidemeister
//! moves as rewrite rules with a bounded equivalence search, the disk-band
//! surface of a diagram with its genus, and linking numbers together with
//! the link-homology classification they give.

pub mod diagram;
pub mod fixtures;
pub mod invariants;
pub mod moves;
pub mod presentation;
pub mod r3;
pub mod report;
pub mod ribbon;
pub mod search;
pub mod universe;

#[cfg(feature = "generate")]
pub mod generate;

pub use diagram::{validate, Crossing, LinkDiagram, ParseError, Pass, Role, Sign, Violation};
pub use invariants::{
    classicality_certificate, compare_homology, homology_class, linking_matrix, linking_number,
    pseudo_hopf_decomposition, self_writhe, ClassicalityCertificate, ClassicalityVerdict,
    HomologyClass, HomologyVerdict, LinkingMatrix, PseudoHopfDecomposition,
};
pub use moves::{apply_move, apply_to_universe, enumerate_moves, Move, MoveError, MoveKind};
pub use presentation::{presentations, Presentation};
pub use report::Report;
pub use ribbon::{build_ribbon, is_classically_realizable, surface_report, RibbonSurface, SurfaceReport};
pub use search::{
    ground_genus_upper_bound, search_equivalent, Exhaustion, GenusBound, MoveSequence,
    SearchBounds, SearchOutcome,
};
pub use universe::{universe, Universe};
