//! Invariants of closed braids: Bennequin numbers, cabled diagrams, Euler
//! characteristics of Seifert-type surfaces, the HOMFLY braid polynomial and
//! brackets for the Thurston norm.

pub mod bennequin;
pub mod braid;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod homfly;
pub mod poly;
pub mod verify;

pub use bennequin::{CablePair, CohClass, NormBracket};
pub use braid::{BraidLetter, BraidWord, Sign};
pub use diagram::ClosureProfile;
pub use error::{Error, Result};
pub use poly::{LaurentVZ, MultiPoly};
