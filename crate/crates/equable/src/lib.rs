//! Exact arithmetic for **lattice equable parallelograms**: parallelograms
//! with vertices in `Z^2` whose area equals their perimeter.
//!
//! A side pair `(a, b)` admits such a parallelogram exactly when
//! `a^2 b^2 - 4(a + b)^2` is a perfect square. Every admissible pair has
//! `gcd(a, b)` in `{3, 4, 5}`, and for fixed gcd the pairs form an infinite
//! tree generated from a fundamental pair by Vieta-style involutions, in
//! direct analogy with the Markov equation. Fixing one side instead slices
//! the trees into branches governed by Pell equations, which is what makes
//! the families easy to enumerate.
//!
//! The crate is organised bottom-up:
//!
//! - [`intmath`]: exact square roots, perfect squares, two-square splits;
//! - [`lep`]: pair certification, `(k, m, n)` decomposition, side/diagonal/
//!   altitude geometry, special cases, equable triangles;
//! - [`forest`]: Markov-style triples and the three pair trees;
//! - [`pell`]: fixed-side branch recurrences and the five Pell families;
//! - [`lattice`]: integer-coordinate realizations, verification, and
//!   canonical forms under the symmetries of `Z^2`;
//! - [`cli`]: the command-line front end and SVG rendering.
//!
//! Every runnable example under `examples/` exercises one capability; start
//! with `cargo run --example check_pair`.
//!
//! All arithmetic is arbitrary-precision and exact; results never pass
//! through floating point.

#![forbid(unsafe_code)]

pub mod cli;
pub mod forest;
pub mod intmath;
pub mod lattice;
pub mod lep;
pub mod pell;

pub use intmath::{Int, Nat};
pub use lep::{GcdClass, LepPair};
