//! Field arithmetic, sparse polynomials, gcd, exact linear algebra.

pub mod field;
pub mod gcd;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod transform;
pub mod univariate;

pub use field::{Coeff, FieldKind, FieldSpec};
pub use gcd::{gcd, gcd_all};
pub use linalg::LinearSystem;
pub use monomial::{Monomial, TermOrder, Var, VarSet};
pub use parse::parse_polynomial;
pub use poly::Polynomial;
pub use transform::LinearChange;
