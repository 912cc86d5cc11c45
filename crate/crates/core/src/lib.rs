//! Exact truncated q-series arithmetic and a certification engine for
//! identities and Ramanujan-type congruences between q-series built from
//! mock theta functions, theta functions, and eta quotients.
//!
//! The crate is `no_std` and needs only `alloc`. Timing, parallel execution,
//! report formats, and the command line live in the `qcert` crate.
#![no_std]

extern crate alloc;

pub mod fps;
pub mod oracle;
pub mod progression;
pub mod qprod;
pub mod scan;
pub mod special;
pub mod verify;

pub use fps::{Coefficient, Series, SeriesError, Sign};

/// Default truncation order for the certification suite.
pub const DEFAULT_PREC: usize = 1000;
