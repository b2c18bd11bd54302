//! Exact multivariate polynomial arithmetic over the rationals with
//! monomial orders, Buchberger's algorithm, normal forms, ideal membership
//! and containment, saturation, elimination and Krull dimension, plus the
//! content/primitive-part factor splitting used by minimal-prime searches.
//!
//! Polynomials are immutable values; a [`Ring`] carries arity, variable
//! names and the active monomial order and performs all arithmetic, so a
//! polynomial's term list is always sorted under the order it was built
//! with. Bases are cached per order inside [`Ideal`] and shareable across
//! threads.

pub mod budget;
pub mod divide;
pub mod error;
pub mod factor;
pub mod groebner;
pub mod ideal;
pub mod io;
pub mod monomial;
pub mod poly;

pub use budget::Budget;
pub use error::PolyError;
pub use ideal::{GroebnerBasis, Ideal};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{Polynomial, Ring};
