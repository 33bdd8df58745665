//! Exact toric cohomology for smooth complete fans, and the invariants of
//! the Calabi-Yau fourfold obtained by doubling a toric Fano fourfold along
//! an anticanonical divisor.
//!
//! The pipeline, in order: validate the fan ([`fan`]), compute the Chow
//! grading ([`grading`]), build the cohomology ring ([`ring`]), then the
//! Chern classes and characteristic numbers ([`pipeline`]).
//!
//! ```
//! use toric_cy4::{compute_report, known_fans};
//!
//! let report = compute_report(&known_fans::cp4()).unwrap();
//! assert_eq!((report.chi_m, report.tau_m, report.a_hat), (2160, 752, 2));
//! ```

pub mod error;
pub mod fan;
pub mod grading;
pub mod groebner;
pub mod known_fans;
pub mod linalg;
pub mod oracle;
pub mod pipeline;
pub mod poly;
pub mod ring;
pub mod snf;

pub use error::{Error, Result};
pub use fan::{validate_fan, Cone, Fan, PrimitiveCollection, RayVector, ValidationReport};
pub use grading::{ChowPresentation, Degree, DivisorMapMatrix};
pub use oracle::multilinear_oracle;
pub use pipeline::{
    compute_report, compute_report_with, ChernSeries, DoublingReport, HodgeDiamondCY3, HodgeDiamondSurface,
    Holonomy, PipelineOptions,
};
pub use poly::{Monomial, MultiPoly, TermOrder};
pub use ring::{CohomClass, RingContext};
