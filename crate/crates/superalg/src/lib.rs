//! Exact computational workbench for the restricted enveloping algebras of
//! sl2 and osp(1|2) over prime fields, quantum complete intersection algebras,
//! and their module theory: simples, projectives, string and tube families,
//! Hom/End spaces, blocks, minimal resolutions, complexity, Koszul-type
//! resolutions with their cohomology operations, and Frobenius-extension
//! splitting certificates.
//!
//! Everything is computed with exact linear algebra over F_p; there are no
//! floating-point tolerances anywhere.

pub mod error;
pub mod field;
pub mod matrix;
pub mod pbw;
pub mod restricted;
pub mod module;
pub mod families;
pub mod hom;
pub mod endring;
pub mod factors;
pub mod resolution;
pub mod ext;
pub mod complexity;
pub mod blocks;
pub mod extensions;
pub mod iso;
pub mod koszul;
pub mod cocycle;
pub mod oracle;
pub mod frob;
pub mod report;
pub mod catalogue;
pub mod suites;

pub use error::AlgError;
pub use field::Fp;
pub use matrix::{Matrix, SolveResult};
pub use pbw::{build_preset, build_qci, osp12, sl2, smash, straighten, AlgElt, AlgRef, PBWAlgebra};
