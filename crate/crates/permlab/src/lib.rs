//! Exact-arithmetic toolkit for descent and excedance statistics on
//! colored permutation groups.
//!
//! The crate revolves around a handful of small, composable pieces:
//!
//! * [`perm`] — colored permutations (a permutation word with a color on
//!   each letter), exhaustive enumeration, and the decorated cycle form;
//! * [`order`] — total orders on colored alphabets: the color-major,
//!   min-one, and symmetric orders, plus arbitrary and seeded random ones;
//! * [`stats`] — descents, ascents, and excedances relative to an order,
//!   together with the classical type A and type B specializations;
//! * [`biject`] — bijections that transport excedance statistics to
//!   descent statistics, with their inverses;
//! * [`poly`], [`eulerian`], [`gamma`], [`sturm`], [`series`] — exact
//!   integer polynomials, restricted Eulerian families and their
//!   recurrences, gamma-vector expansions, Sturm-chain real-rootedness
//!   certificates, and truncated power series for Carlitz-type identities;
//! * [`harness`] — a registry of named identity checks, each reporting
//!   pass/fail with a re-checkable counterexample on failure.
//!
//! Everything is computed in exact integer arithmetic; no floating point
//! is used anywhere.
//!
//! ```
//! use permlab::{ColoredPerm, GroupSpec, LinearOrder};
//! use permlab::stats::{ldes, lexc};
//! use permlab::biject::phi;
//!
//! # fn main() -> permlab::Result<()> {
//! let spec = GroupSpec::unsigned(6, 4)?;
//! let p = ColoredPerm::new(vec![2, 4, 1, 5, 6, 3], vec![0, 1, 3, 3, 0, 2], spec)?;
//! let order = LinearOrder::color_major(6, 4)?;
//!
//! assert_eq!(ldes(&p, &order)?, 1);
//! assert_eq!(lexc(&p, &order)?, 4);
//!
//! // phi turns excedances into descents, pointwise.
//! let image = phi(&p, &order)?;
//! assert_eq!(ldes(&image, &order)?, 4);
//! # Ok(())
//! # }
//! ```

pub mod biject;
pub mod error;
pub mod eulerian;
pub mod gamma;
pub mod harness;
pub mod order;
pub mod perm;
pub mod poly;
pub mod series;
pub mod stats;
pub mod sturm;

pub use error::{Error, Result};
pub use harness::{Bounds, CheckSpec, IdentityReport, OutputFormat, TableFamily};
pub use gamma::GammaVector;
pub use order::{Alphabet, LinearOrder};
pub use perm::{ColorScheme, ColoredPerm, CycleForm, GroupSpec, Letter};
pub use poly::IntPoly;
pub use series::TruncatedSeries;
pub use stats::StatName;

/// Runs every code snippet of the guide in `book/` as a doctest, so the
/// book cannot drift from the library.
#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/colored-permutations.md")]
    pub mod colored_permutations {}
    #[doc = include_str!("../../../book/src/linear-orders.md")]
    pub mod linear_orders {}
    #[doc = include_str!("../../../book/src/statistics.md")]
    pub mod statistics {}
    #[doc = include_str!("../../../book/src/bijections.md")]
    pub mod bijections {}
    #[doc = include_str!("../../../book/src/eulerian-families.md")]
    pub mod eulerian_families {}
    #[doc = include_str!("../../../book/src/gamma-and-real-roots.md")]
    pub mod gamma_and_real_roots {}
    #[doc = include_str!("../../../book/src/carlitz-identities.md")]
    pub mod carlitz_identities {}
    #[doc = include_str!("../../../book/src/cli-and-checks.md")]
    pub mod cli_and_checks {}
}
