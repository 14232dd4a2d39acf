//! Exact computation of Rees algebras of finitely presented modules over
//! affine rings, torsionless quotients, total blow-ups with explicit Proj
//! charts, and the Nash transform.
//!
//! The layers, bottom up: [`coeff`], [`monomial`], [`poly`] and [`ring`]
//! provide exact arithmetic in `k[x]/I`; [`groebner`] is the Buchberger
//! engine with elimination, colon and saturation; [`modsyz`] handles
//! submodules of free modules and syzygies; [`fpmod`] works with finitely
//! presented modules; [`rees`] builds symmetric and Rees algebras; [`projgeo`]
//! takes charts and closures; [`dsl`] is the script language behind the
//! `reeskit` binary.

pub mod coeff;
pub mod dsl;
pub mod error;
pub mod fpmod;
pub mod groebner;
pub mod modsyz;
pub mod monomial;
pub mod poly;
pub mod projgeo;
pub mod rees;
pub mod ring;
pub mod verify;

pub use error::{AlgebraError, Result};
