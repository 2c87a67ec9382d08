//! Exact symbol calculus for equivariant Burnside groups.
//!
//! The crate is organized bottom-up:
//!
//! - [`zlinalg`]: integer matrices, Smith and Hermite normal forms.
//! - [`abelian`]: finite abelian groups, characters, kernels and quotients,
//!   and the wedge invariant of faithful representations.
//! - [`groups`]: finite groups by Cayley table, abelian subgroup classes,
//!   normalizers and the induced action on character groups.
//! - [`symbols`]: symbols `(H, K, β)` with formal field labels, their
//!   canonical forms, and free-module sums of symbols.
//! - [`relations`]: the blow-up relations and their iterated form.
//! - [`bng`]: the groups `B_n(G)` for abelian `G` and the projection from
//!   symbols.
//! - [`cli`]: the command-line front end behind the `burnside` binary.

pub mod abelian;
pub mod bng;
pub mod cli;
pub mod groups;
pub mod relations;
pub mod symbols;
pub mod zlinalg;
