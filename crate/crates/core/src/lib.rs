//! Exact invariants of normal filtrations and their associated graded rings.
//!
//! Two ring families are covered in closed form:
//!
//! * numerical semigroup rings `K[[t^m1, ..., t^mn]]` ([`semigroup`]),
//! * Zariski-type hypersurfaces `K[[x, y1..ym]]/(x^a - g(y))` with
//!   `2 <= a <= b = ord(g)` ([`zariski`]).
//!
//! [`hilbert`] holds the filtration-agnostic numerics (Hilbert coefficients,
//! h-vectors, reduction-number bounds, Gorenstein criteria), and [`oracle`]
//! recomputes every closed form by brute force so that [`sweep`] can cross-check
//! them over whole parameter ranges.
//!
//! All arithmetic is exact; nothing in this crate touches floating point.

pub mod hilbert;
pub mod oracle;
pub mod report;
pub mod semigroup;
pub mod sweep;
pub mod verdict;
pub mod zariski;

mod combinat;

pub use hilbert::{Assumptions, FiltrationProfile, HVector, HilbertCoefficients, HilbertError};
pub use report::Report;
pub use semigroup::NumericalSemigroup;
pub use verdict::{Criterion, Status, Verdict};
pub use zariski::ZariskiParams;
