//! Exact integer arithmetic used by every other module: arbitrary-precision
//! floor square roots, perfect-square detection, gcd, and enumeration of the
//! ways an integer splits into an ordered sum of two squares.
//!
//! Everything here is exact. No float ever touches a value on the
//! certification path, so there is no width at which results degrade.

use num::bigint::{BigInt, BigUint};
use num::{Integer, One, Signed, Zero};
use std::collections::BTreeSet;

/// Unsigned arbitrary-precision integer.
pub type Nat = BigUint;
/// Signed arbitrary-precision integer.
pub type Int = BigInt;

/// Floor of `sqrt(n)` by Newton iteration.
///
/// The starting iterate `2^ceil(bits/2)` lies strictly above the root, and
/// each step decreases strictly until it reaches `floor(sqrt(n))`; the first
/// non-decreasing step therefore stops the loop at the answer.
pub fn isqrt(n: &Nat) -> Nat {
    if n.is_zero() {
        return Nat::zero();
    }
    let mut x: Nat = Nat::one() << n.bits().div_ceil(2);
    loop {
        let next: Nat = (&x + n / &x) >> 1;
        if next >= x {
            return x;
        }
        x = next;
    }
}

/// `Some(r)` with `r * r == n` when `n` is a perfect square; `None` for
/// negative input or a non-square.
pub fn is_perfect_square(n: &Int) -> Option<Nat> {
    if n.is_negative() {
        return None;
    }
    exact_sqrt(n.magnitude())
}

/// Exact square root of a natural number, if it has one.
pub(crate) fn exact_sqrt(n: &Nat) -> Option<Nat> {
    let r = isqrt(n);
    (&r * &r == *n).then_some(r)
}

/// Greatest common divisor.
pub fn gcd(a: &Nat, b: &Nat) -> Nat {
    a.gcd(b)
}

/// All ordered signed pairs `(p, q)` with `p^2 + q^2 = n`, sorted
/// lexicographically. `n = 0` yields exactly `[(0, 0)]`.
pub fn two_square_representations(n: &Nat) -> Vec<(Int, Int)> {
    let mut reps: BTreeSet<(Int, Int)> = BTreeSet::new();
    let root = isqrt(n);
    let mut p = Nat::zero();
    while p <= root {
        if let Some(q) = exact_sqrt(&(n - &p * &p)) {
            let p = Int::from(p.clone());
            let q = Int::from(q);
            reps.insert((p.clone(), q.clone()));
            reps.insert((p.clone(), -&q));
            reps.insert((-&p, q.clone()));
            reps.insert((-&p, -&q));
        }
        p += 1u32;
    }
    reps.into_iter().collect()
}
