//! Exact computation with birational transformations of projective space.
//!
//! The crate represents a rational self-map of `P^n` by an `(n+1)`-tuple of
//! homogeneous polynomials of one degree over an exact coefficient field
//! (the rationals or a prime field). Dividing the tuple by the gcd of its
//! components gives the canonical representative whose common degree is the
//! degree of the map; composing, iterating, and cancelling exactly makes the
//! degree sequence `deg(f^m)` computable, and boundedness of that sequence
//! is the working criterion for an element being algebraic (contained in an
//! algebraic subgroup).
//!
//! Two explicit families with known behaviour are built in, together with
//! their closed-form iterates, inverses, and conjugators to normal forms:
//! a unipotent family `rho(t)` acting in the affine chart by
//! `(x1, ..., xn) -> (x1 + 1, x2 (x1 + t)/x1, x3, ..., xn)` and a
//! semi-simple family `rho(a, xi)` acting by
//! `(x1, ..., xn) -> (xi x1, x2 (x1 + a)/(x1 + 1), x3, ..., xn)`.
//!
//! ```
//! use cremona::{FieldScalar, FieldSpec, RationalMap};
//! use cremona::dynamics::{degree_sequence, classify_growth, GrowthClass};
//!
//! let q = FieldSpec::rationals();
//! // the standard quadratic involution of P^2: (x1 x2 : x0 x2 : x0 x1)
//! let f = RationalMap::parse(q, "x1*x2; x0*x2; x0*x1").unwrap();
//! assert_eq!(f.degree(), 2);
//! assert!(f.verify_inverse(&f));
//! // an involution has bounded iterate degrees
//! let seq = degree_sequence(&f, 8).unwrap();
//! assert_eq!(seq.degrees(), &[2, 1, 2, 1, 2, 1, 2, 1]);
//! ```

mod error;
mod field;
mod gcd;
mod parse;
mod poly;

pub mod dynamics;
pub mod families;
pub mod ratmap;

pub use error::{Error, Result};
pub use field::{FieldScalar, FieldSpec};
pub use poly::{Monomial, Polynomial};
pub use ratmap::{AffineMap, PointImage, ProjectivePoint, RationalMap, WdPoint};
