//! Extended affine Weyl groups, mod-p Iwahori-Hecke algebras, admissible
//! sets and the Satake/Bernstein maps for split groups of small rank.

pub mod affine_weyl;
pub mod error;
pub mod harness;
pub mod hecke;
pub mod root_datum;
pub mod satake;

pub use affine_weyl::{AffineWeylGroup, ExtAffineElement, ReducedWord, WeylElement};
pub use error::{Error, Result};
pub use harness::{Suite, SuiteConfig, VerificationReport};
pub use hecke::{specialize, CoefficientRing, Coefficients, GenericQ, HeckeElement, IwahoriHecke, Poly, PrimeField};
pub use root_datum::{Cocharacter, RootDatum, PRESETS};
pub use satake::{DominantCombination, DominantMonomial, Satake, SphericalElement};
