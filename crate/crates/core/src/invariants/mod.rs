pub mod betti;
pub mod cohomology;
pub mod hilbert;
pub mod resolution;

pub use betti::BettiTable;
pub use cohomology::{cohomology_profile, derived_invariants, CohomologyProfile, DerivedInvariants};
pub use hilbert::{HilbertPolynomial, HilbertSeries};
pub use resolution::{minimal_free_resolution, PolyMatrix, Resolution};
