//! Exact Ehrhart h*-polynomials of order polytopes and lattice simplices,
//! chromatic series numerators, and their symmetric decompositions.
//!
//! ```
//! use hstar_decomp::{decomp::order_decomposition, Poset};
//!
//! let chain = Poset::chain(2);
//! let h = chain.descent_h_star();
//! let dec = order_decomposition(&h, 2).unwrap();
//! assert_eq!(dec.b.to_decimal_strings(0), ["1", "1", "1"]);
//! assert!(dec.signs_hold());
//! ```

pub mod budget;
pub mod cli;
pub mod decomp;
pub mod ehrhart;
pub mod error;
pub mod graph;
pub mod harness;
pub mod polynomial;
pub mod poset;

pub use budget::Budget;
pub use ehrhart::LatticePolytope;
pub use error::{Error, Result};
pub use graph::Graph;
pub use polynomial::{IntPolynomial, RatPolynomial};
pub use poset::Poset;
