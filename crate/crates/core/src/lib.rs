//! Contact sub-Lorentzian structures in three dimensions: Reeb apparatus,
//! the invariants h~, chi and kappa, symmetry tests, Lie algebras and the
//! construction from second-order ODEs.

pub mod calculus;
pub mod contact;
pub mod definition;
pub mod error;
pub mod fixtures;
pub mod frame;
pub mod invariants;
pub mod lie_algebra;
pub mod matrix;
pub mod ode;
pub mod poisson;
pub mod symmetry;

pub use calculus::{Form, VectorField};
pub use contact::{build_apparatus, ContactApparatus};
pub use definition::{parse_structure_file, StructureDefinition};
pub use error::CoreError;
pub use frame::{AbstractStructure, Frame, Structure};
pub use invariants::{
    analyze_abstract, analyze_frame, classify, Classification, Invariants, Label, Mode, Setting,
    StructureFunctions,
};
pub use lie_algebra::{catalog_algebra, LieAlgebra};
pub use ode::{build_from_ode, OdeStructure};
pub use poisson::{poisson_bracket, FiberPolynomial};
pub use symmetry::{ConformalVerdict, Field, Geometry};
