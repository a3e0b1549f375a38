//! Fixed-side branches and the Pell equations behind them.
//!
//! Holding one side `a` fixed slices the trees into branches: the admissible
//! partner sides `b` are the orbit of an increasing algebraic map, satisfy a
//! third-order linear recurrence with coefficient `a^2 - 1`, and for
//! `a` in `{3, 4, 5, 6, 10}` are parametrised by the solutions of a Pell-type
//! equation `c y^2 - (c + 4) x^2 = d`. Those five single-`a` families are
//! exactly the pairs with a lattice point at the foot of an altitude.
//!
//! Several derived sequences appear in the OEIS: the `a = 3` area sequence
//! 1, 2, 10, 65, 442 is related to A064170 (conjecturally the same
//! recurrence), the `a = 4` quarter-`b` sequence 1, 5, 65, 901 is A103974,
//! the `a = 4` areas 1, 3, 33, 451 are A011922, and the solution components
//! behind families F3 and F5 are characterised by `21m^2 - 20` resp.
//! `6m^2 - 5` being square (A237254, A080806).

use crate::intmath::{self, Nat};
use crate::lep::{is_pythagorean, lep_check};
use num::rational::BigRational;
use num::{Integer as _, One, Zero};
use std::fmt;
use std::str::FromStr;

/// Errors from branch and family operations.
#[derive(Debug, PartialEq, Eq, thiserror::Error)]
pub enum PellError {
    /// The starting pair does not certify.
    #[error("({0}, {1}) is not a certified pair")]
    InvalidPair(Nat, Nat),
    /// An odd-`c` family was stepped from a solution with `x + y` odd.
    #[error("step requires x + y even for this family")]
    ParityViolation,
    /// The coordinates do not solve the family equation.
    #[error("({0}, {1}) does not solve the family equation")]
    NotASolution(Nat, Nat),
}

/// An increasing map `f(x) = u x + v + sqrt((u^2 - 1) x^2 + 2 (u + 1) v x + w)`
/// with rational coefficients and `u > 1`.
///
/// Orbits of such maps satisfy the third-order linear recurrence
/// `x_i = (2u + 1)(x_{i-1} - x_{i-2}) + x_{i-3}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceSpec {
    u: BigRational,
    v: BigRational,
    w: BigRational,
}

impl RecurrenceSpec {
    /// Build a spec; `u` must exceed 1.
    pub fn new(u: BigRational, v: BigRational, w: BigRational) -> RecurrenceSpec {
        assert!(u > BigRational::one(), "the map is increasing only for u > 1");
        RecurrenceSpec { u, v, w }
    }

    /// Coefficients `(u, v, w)`.
    pub fn coefficients(&self) -> (&BigRational, &BigRational, &BigRational) {
        (&self.u, &self.v, &self.w)
    }

    /// The recurrence coefficient `2u + 1`.
    pub fn order3_coeff(&self) -> BigRational {
        &self.u * BigRational::from_integer(2.into()) + BigRational::one()
    }

    /// Apply the map exactly. `None` when the radicand is negative or not a
    /// rational square, i.e. when `x` is not on an orbit of the map.
    pub fn step(&self, x: &BigRational) -> Option<BigRational> {
        let one = BigRational::one();
        let radicand = (&self.u * &self.u - &one) * x * x
            + (&self.u + &one) * &self.v * x * BigRational::from_integer(2.into())
            + &self.w;
        if radicand < BigRational::zero() {
            return None;
        }
        let root_num = intmath::exact_sqrt(radicand.numer().magnitude())?;
        let root_den = intmath::exact_sqrt(radicand.denom().magnitude())?;
        let root = BigRational::new(root_num.into(), root_den.into());
        Some(&self.u * x + &self.v + root)
    }

    /// Next term from the last three orbit terms (oldest first).
    pub fn order3_next(
        &self,
        x0: &BigRational,
        x1: &BigRational,
        x2: &BigRational,
    ) -> BigRational {
        self.order3_coeff() * (x2 - x1) + x0
    }

    /// The spec governing the orbit of `X = r x + s` when `x` follows `self`
    /// (`r` nonzero): `u` is unchanged, `v` becomes `r v - u s + s`, and `w`
    /// becomes `(u^2 - 1) s^2 - 2 (u + 1) r v s + w r^2`.
    pub fn affine_image(&self, r: &BigRational, s: &BigRational) -> RecurrenceSpec {
        assert!(!r.is_zero());
        let one = BigRational::one();
        let u2m1 = &self.u * &self.u - &one;
        let v = r * &self.v - &self.u * s + s;
        let w = &u2m1 * s * s
            - (&self.u + &one) * r * &self.v * s * BigRational::from_integer(2.into())
            + &self.w * r * r;
        RecurrenceSpec {
            u: self.u.clone(),
            v,
            w,
        }
    }
}

fn rational(n: &Nat) -> BigRational {
    BigRational::from_integer(n.clone().into())
}

/// The spec whose orbit is the ascending `b`-branch for fixed side `a`:
/// `u = (a^2 - 2)/2`, `v = -2a`, `w = -a^4`, recurrence coefficient
/// `a^2 - 1`.
pub fn branch_spec_for_fixed_a(a: &Nat) -> RecurrenceSpec {
    let a = rational(a);
    let two = BigRational::from_integer(2.into());
    let a2 = &a * &a;
    RecurrenceSpec::new(
        (&a2 - &two) / &two,
        -(&a * &two),
        -(&a2 * &a2),
    )
}

/// One ascending branch step: the partner side
/// `(a^2 b + a disc_root)/2 - 2a - b` for the certified pair `{a, b}`.
/// The fixed side goes first; `b` may be smaller than `a`.
pub fn branch_step(a: &Nat, b: &Nat) -> Result<Nat, PellError> {
    let p = lep_check(a, b).ok_or_else(|| PellError::InvalidPair(a.clone(), b.clone()))?;
    let numerator = a * a * b + a * p.disc_root();
    debug_assert!(numerator.is_even());
    let next = numerator / 2u32 - a * 2u32 - b;
    debug_assert!(lep_check(a, &next).is_some());
    Ok(next)
}

/// First `count` terms of the ascending branch from `b0` with `a` fixed.
///
/// Terms beyond the third are produced by the linear recurrence with
/// coefficient `a^2 - 1` and cross-checked against [`branch_step`].
pub fn branch_sequence(a: &Nat, b0: &Nat, count: usize) -> Result<Vec<Nat>, PellError> {
    if count == 0 {
        return Ok(Vec::new());
    }
    lep_check(a, b0).ok_or_else(|| PellError::InvalidPair(a.clone(), b0.clone()))?;
    let coeff = a * a - 1u32;
    let mut terms = vec![b0.clone()];
    while terms.len() < count {
        let next = if terms.len() < 3 {
            branch_step(a, terms.last().unwrap())?
        } else {
            let [x0, x1, x2]: &[Nat; 3] = terms.last_chunk().unwrap();
            let by_recurrence = &coeff * (x2 - x1) + x0;
            assert_eq!(by_recurrence, branch_step(a, x2)?, "recurrence diverged from the map");
            by_recurrence
        };
        terms.push(next);
    }
    Ok(terms)
}

/// Labels for the five Pell families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[allow(missing_docs)]
pub enum Family {
    F1,
    F2,
    F3,
    F4,
    F5,
}

impl Family {
    /// All five labels in order.
    pub fn all() -> [Family; 5] {
        [Family::F1, Family::F2, Family::F3, Family::F4, Family::F5]
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", *self as u8 + 1)
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Family, String> {
        match s.to_ascii_uppercase().as_str() {
            "F1" => Ok(Family::F1),
            "F2" => Ok(Family::F2),
            "F3" => Ok(Family::F3),
            "F4" => Ok(Family::F4),
            "F5" => Ok(Family::F5),
            _ => Err(format!("unknown family {s:?}; expected F1..F5")),
        }
    }
}

/// A solution `(x, y)` of one family's equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PellSolution {
    family: Family,
    x: Nat,
    y: Nat,
}

impl PellSolution {
    /// `x` coordinate.
    pub fn x(&self) -> &Nat {
        &self.x
    }

    /// `y` coordinate.
    pub fn y(&self) -> &Nat {
        &self.y
    }

    /// The family this solution belongs to.
    pub fn family(&self) -> Family {
        self.family
    }
}

impl fmt::Display for PellSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// One of the five families `c y^2 - (c + 4) x^2 = d`, each attached to a
/// fixed short side `a` and a rule recovering `b` from a solution.
#[derive(Clone, Debug)]
pub struct PellFamily {
    label: Family,
    c: u32,
    d: u32,
    a_side: u32,
    /// `b = scale * (x^2 + y^2) / div`
    b_scale: u32,
    b_div: u32,
    seeds: Vec<(u32, u32)>,
}

/// The family data for a label.
///
/// | family | equation              | a  | b from (x, y)      | seed orbits        |
/// |--------|-----------------------|----|--------------------|--------------------|
/// | F1     | `y^2 - 5x^2 = 4`      | 3  | `3(x^2 + y^2)/2`   | (0, 2)             |
/// | F2     | `2y^2 - 6x^2 = 2`     | 4  | `4(x^2 + y^2)`     | (0, 1)             |
/// | F3     | `3y^2 - 7x^2 = 20`    | 5  | `(x^2 + y^2)/2`    | (1, 3), (2, 4)     |
/// | F4     | `4y^2 - 8x^2 = 4`     | 6  | `3(x^2 + y^2)`     | (0, 1)             |
/// | F5     | `8y^2 - 12x^2 = 20`   | 10 | `x^2 + y^2`        | (1, 2), (3, 4)     |
pub fn pell_family(label: Family) -> PellFamily {
    let (c, d, a_side, b_scale, b_div, seeds) = match label {
        Family::F1 => (1, 4, 3, 3, 2, vec![(0, 2)]),
        Family::F2 => (2, 2, 4, 4, 1, vec![(0, 1)]),
        Family::F3 => (3, 20, 5, 1, 2, vec![(1, 3), (2, 4)]),
        Family::F4 => (4, 4, 6, 3, 1, vec![(0, 1)]),
        Family::F5 => (8, 20, 10, 1, 1, vec![(1, 2), (3, 4)]),
    };
    let family = PellFamily {
        label,
        c,
        d,
        a_side,
        b_scale,
        b_div,
        seeds,
    };
    for &(x, y) in &family.seeds {
        debug_assert!(family.satisfies(&Nat::from(x), &Nat::from(y)));
    }
    family
}

impl PellFamily {
    /// The family label.
    pub fn label(&self) -> Family {
        self.label
    }

    /// Equation coefficients `(c, d)` in `c y^2 - (c + 4) x^2 = d`.
    pub fn equation(&self) -> (u32, u32) {
        (self.c, self.d)
    }

    /// The fixed short side attached to the family.
    pub fn a_side(&self) -> Nat {
        Nat::from(self.a_side)
    }

    /// Whether `(x, y)` solves the family equation.
    pub fn satisfies(&self, x: &Nat, y: &Nat) -> bool {
        let lhs = num::BigInt::from(y * y * self.c) - num::BigInt::from(x * x * (self.c + 4));
        lhs == num::BigInt::from(self.d)
    }

    /// Wrap coordinates as a solution, checking the equation.
    pub fn solution(&self, x: Nat, y: Nat) -> Result<PellSolution, PellError> {
        if !self.satisfies(&x, &y) {
            return Err(PellError::NotASolution(x, y));
        }
        Ok(PellSolution {
            family: self.label,
            x,
            y,
        })
    }

    /// The next solution on the same orbit:
    /// `(x, y) -> (x + c(x + y)/2, 2x + y + c(x + y)/2)`.
    ///
    /// For odd `c` the sum `x + y` must be even; solutions reachable from
    /// the seeds always satisfy that, so `ParityViolation` only arises on
    /// hand-made inputs.
    pub fn step(&self, s: &PellSolution) -> Result<PellSolution, PellError> {
        let sum = &s.x + &s.y;
        let shift = if self.c.is_multiple_of(2) {
            sum * (self.c / 2)
        } else {
            if sum.is_odd() {
                return Err(PellError::ParityViolation);
            }
            sum / 2u32 * self.c
        };
        let x = &s.x + &shift;
        let y = &s.x * 2u32 + &s.y + &shift;
        debug_assert!(self.satisfies(&x, &y));
        Ok(PellSolution {
            family: self.label,
            x,
            y,
        })
    }

    /// The partner side for a solution: `b = b_scale (x^2 + y^2) / b_div`,
    /// always exact.
    pub fn b_value(&self, s: &PellSolution) -> Nat {
        let norm = (&s.x * &s.x + &s.y * &s.y) * self.b_scale;
        assert!((&norm % Nat::from(self.b_div)).is_zero());
        norm / self.b_div
    }

    /// First `count` solutions, interleaving the seed orbits in seed order
    /// (single-orbit families just walk their orbit).
    pub fn solutions(&self, count: usize) -> Vec<PellSolution> {
        let mut orbits: Vec<PellSolution> = self
            .seeds
            .iter()
            .map(|&(x, y)| self.solution(Nat::from(x), Nat::from(y)).unwrap())
            .collect();
        let mut out = Vec::with_capacity(count);
        for i in 0..count {
            let slot = i % orbits.len();
            let next = self.step(&orbits[slot]).unwrap();
            out.push(std::mem::replace(&mut orbits[slot], next));
        }
        out
    }

    /// First `count` partner sides `b`, merged across the seed orbits in
    /// increasing order. Every `(a_side, b)` certifies and admits a lattice
    /// point at the foot of an altitude.
    pub fn b_values(&self, count: usize) -> Vec<Nat> {
        struct OrbitHead {
            current: PellSolution,
            b: Nat,
        }
        let mut heads: Vec<OrbitHead> = self
            .seeds
            .iter()
            .map(|&(x, y)| {
                let current = self.solution(Nat::from(x), Nat::from(y)).unwrap();
                let b = self.b_value(&current);
                OrbitHead { current, b }
            })
            .collect();
        let mut out = Vec::with_capacity(count);
        while out.len() < count {
            let head = heads
                .iter_mut()
                .min_by(|p, q| p.b.cmp(&q.b))
                .expect("at least one seed orbit");
            assert!(!head.b.is_zero());
            out.push(head.b.clone());
            head.current = self.step(&head.current).unwrap();
            head.b = self.b_value(&head.current);
        }
        debug_assert!(out.iter().all(|b| {
            let p = lep_check(&self.a_side(), b).unwrap();
            is_pythagorean(&p)
        }));
        out
    }
}

/// The short sides that admit a lattice point at the foot of an altitude;
/// every certified pair with `a` outside this list lacks one.
pub fn pythagorean_short_sides() -> Vec<Nat> {
    [3u32, 4, 5, 6, 10].map(Nat::from).to_vec()
}
