//! Combinatorial invariants of polyhedral products.
//!
//! `polyprod` works with finite simplicial complexes `K` on a ground set
//! `[m]` and computes the combinatorial data that governs the homotopy type
//! of polyhedral products over them:
//!
//! * [`flag`]: the flagification `K^f`, the smallest flag complex containing `K`;
//! * [`chordal`]: chordality of the 1-skeleton, certified either way;
//! * [`wedge`]: the wedge decomposition of `(CY, Y)^K` for flag `K` with
//!   chordal 1-skeleton, including the moment-angle complex `Z_K`;
//! * [`homology`]: exact Betti numbers of full subcomplexes and of `Z_K`,
//!   an independent oracle for every decomposition;
//! * [`lie`]: Lyndon words, Witt numbers and the Hilton–Milnor factors of
//!   `ΩZ_K`.
//!
//! ```
//! use polyprod::{SimplicialComplex, wedge::{decompose, Pairs}, homology::betti_zk};
//!
//! let path = SimplicialComplex::path(3)?;
//! let dec = decompose(&path, &Pairs::MomentAngle)?;
//! assert_eq!(dec.summands.len(), 1);
//! assert_eq!(dec.summands[0].sphere_dim, Some(3));
//! assert!(betti_zk(&path)?.matches(&dec.poincare_polynomial()?));
//! # Ok::<(), polyprod::Error>(())
//! ```

pub mod chordal;
pub mod cli;
pub mod complex;
mod error;
pub mod face;
pub mod flag;
pub mod graph;
pub mod homology;
pub mod io;
pub mod lie;
pub mod report;
pub mod series;
pub mod wedge;

pub use complex::{SimplicialComplex, DEFAULT_VERTEX_GUARD, MAX_VERTICES};
pub use error::{Error, Result};
pub use face::FaceSet;
pub use graph::Graph;
pub use series::PoincareSeries;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/complexes.md")]
    mod complexes {}
    #[doc = include_str!("../../../book/src/flagification.md")]
    mod flagification {}
    #[doc = include_str!("../../../book/src/chordality.md")]
    mod chordality {}
    #[doc = include_str!("../../../book/src/wedge.md")]
    mod wedge {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/loop_spaces.md")]
    mod loop_spaces {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
