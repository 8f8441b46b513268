//! Gröbner bases under weight orders, initial ideals, and homological
//! invariants of monomial quotients.
//!
//! The crate is organized bottom-up:
//!
//! - [`field`] and [`polyring`]: exact coefficients, monomials, polynomials, ideals.
//! - [`orders`]: lex and weight-then-tie monomial orders.
//! - [`groebner`]: division, Buchberger completion, basis verification, initial ideals.
//! - [`monomial_invariants`]: Hilbert series, Betti tables, depth, regularity.
//! - [`family`]: the block family whose initial ideals realize every depth,
//!   plus join-meet ideals of distributive lattices and an order explorer.

pub mod family;
pub mod field;
pub mod groebner;
pub mod linalg;
pub mod monomial_invariants;
pub mod orders;
pub mod polyring;

pub use field::{Field, Gf32003, Rational, Zp};
pub use groebner::{
    buchberger, ideal_member, initial_ideal, normal_form, s_polynomial, verify_gb, GbCheck, GroebnerBasis,
    GroebnerConfig, GroebnerError, MonomialIdeal, Witness,
};
pub use monomial_invariants::{
    betti_table, invariant_report, BettiTable, InvariantConfig, InvariantError, InvariantReport,
};
pub use orders::{family_order, validate_order, MonomialOrder, MonomialOrderSpec, OrderError, WeightVector};
pub use polyring::{Ideal, Monomial, Polynomial, RingError, Term};
