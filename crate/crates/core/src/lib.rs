//! Coxeter-group combinatorics: Bruhat intervals, parabolic cosets, coset
//! maxima and Poincaré polynomial decompositions.
//!
//! ```
//! use coxbruhat::{coset_max, presets};
//!
//! let sys = presets::type_a(3);
//! let w = sys.parse_element("s1 s2 s3 s2 s1").unwrap();
//! let x = sys.parse_element("s2 s3").unwrap();
//! let j = sys.parse_genset("s1,s2").unwrap();
//! let r = coset_max::max_in_coset(&sys, &w, &x, j).unwrap();
//! assert_eq!(sys.format(&r.q), "s2s3s2s1");
//! assert_eq!(sys.format(&r.m), "s2s1");
//! ```

pub mod bruhat;
pub mod coset_max;
pub mod coxeter;
pub mod error;
pub mod hasse;
pub mod oracle;
pub mod parabolic;
pub mod poincare;
pub mod polynomial;
pub mod presets;

pub use coxeter::{CoxeterSystem, Element, GenSet, Side, INFINITY};
pub use error::{Error, Result};
pub use polynomial::IntPolynomial;
