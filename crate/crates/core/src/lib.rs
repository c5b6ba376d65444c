//! Total Stiefel-Whitney classes of orthogonal representations of the finite
//! symplectic groups Sp(2n,q), q odd, computed from character values at the
//! involution classes.
//!
//! The crate is organized around five pieces:
//!
//! - [`polyring`]: truncated sparse polynomial arithmetic over GF(2) and the
//!   integers, with cohomological gradings and big-exponent powering;
//! - [`symfunc`]: elementary symmetric polynomials, orbit products, the
//!   symmetric-to-elementary reduction, Dickson factors `D^[k]`, and the
//!   two-alphabet tensor polynomial `P_{m,n}`;
//! - [`characters`]: involution character vectors, the multiplicity
//!   transform and its inverse, orthogonality validation, and a small
//!   catalog of built-in representations (regular, Weil, two Sp(4,q)
//!   families);
//! - [`swc`]: the product formula for the total class, its Gow-simplified
//!   variants, the Sp(4,q) closed form, universal w_4/w_8, and a
//!   restriction-based self check;
//! - [`tensor`]: classes of external tensor products and the mod-2 Chern
//!   class.
//!
//! The default `std` feature only adds memoization of the Dickson factors,
//! sigma tables and `P_{m,n}` bodies; the library itself is `no_std`
//! (with `alloc`).

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod characters;
pub mod error;
pub mod polyring;
pub mod swc;
pub mod symfunc;
pub mod tensor;

pub use characters::{CharacterData, MultiplicityVector};
pub use error::{Error, Result};
pub use polyring::{CoeffDomain, GradedPoly, Monomial, PolyRing};
pub use swc::SWClass;
pub use symfunc::PmnPolynomial;
pub use tensor::ClassVector;
