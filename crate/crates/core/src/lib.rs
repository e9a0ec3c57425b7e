//! Idempotent graphs of finite commutative rings.
//!
//! [`ring`] builds rings of the form `Z_n[x]/(f) × ...` and computes their
//! idempotents and local-factor decomposition, [`graph`] builds the
//! idempotent graph `x ~ y ⟺ x + y idempotent`, [`recognize`] decides graph
//! classes, and [`theorems`] predicts those classes from ring structure and
//! cross-checks the two.

pub mod graph;
pub mod recognize;
pub mod ring;
pub mod selftest;
pub mod sweep;
pub mod theorems;
