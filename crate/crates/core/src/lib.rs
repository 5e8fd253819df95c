//! Reversed Dickson polynomials over odd-characteristic prime fields,
//! Dembowski-Ostrom (DO) detection, closed-form classification oracles and
//! the harness that checks them against each other.
//!
//! ```
//! use dickson_do::{classify::is_do, dickson::first_kind_closed};
//!
//! let f = first_kind_closed(7, 2, 3).unwrap();
//! assert_eq!(f.to_string(), "2*x^2 + 2*x^4 + 2*x^6");
//! assert!(is_do(&f).unwrap().is_do);
//! ```

pub mod catalog;
pub mod classify;
pub mod cli;
pub mod dickson;
pub mod error;
pub mod field;
pub mod poly;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use field::{FieldElement, FieldParams};
pub use poly::SparsePoly;
