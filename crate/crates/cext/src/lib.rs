//! Computational small-cancellation theory and central-extension arithmetic.
//!
//! The crate mechanizes a family of constructions around a finitely generated
//! group given by an infinite `C'(1/7)` presentation:
//!
//! - [`words`]: free-group words over a finite symmetric alphabet;
//! - [`presentations`]: the relator family, the genus-2 surface presentation,
//!   substitution homomorphisms, and the metric small-cancellation checker;
//! - [`dehn`]: a Greendlinger-based Dehn algorithm producing weighted area
//!   certificates, plus the integer lift of trivial words against a slow
//!   coefficient sequence;
//! - [`cayley`]: exact Cayley-ball enumeration with shortlex canonical forms;
//! - [`extensions`]: 2-cocycles from sections, central-extension arithmetic,
//!   weak-boundedness profiles, and the capped maximizing section;
//! - [`finite`]: brute-force bar-complex cohomology for finite groups with
//!   exact integer and rational linear algebra;
//! - [`report`] and [`cli`]: reproducible JSON reports and the `cext` binary.
//!
//! See the crate examples for one runnable program per capability.

pub mod words;
pub mod presentations;
pub mod dehn;
pub mod cayley;
pub mod extensions;
pub mod finite;
pub mod report;
pub mod cli;

pub use presentations::{Presentation, RelatorForm};
pub use words::{Alphabet, Word};
