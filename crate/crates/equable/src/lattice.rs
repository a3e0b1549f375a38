//! Integer-lattice realizations and their equivalence classes.
//!
//! Every certified pair can be drawn as a parallelogram with vertices on the
//! integer lattice. This module constructs such drawings, verifies candidate
//! vertex lists, and reduces drawings to a canonical form under the lattice
//! isometries (the eight signed axis permutations plus translations), so two
//! drawings are equivalent exactly when their canonical forms are equal.

use crate::intmath::{self, Int, Nat};
use crate::lep::{lep_check, LepPair};
use num::Zero;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Sub};

/// A point of the integer lattice.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    /// Horizontal coordinate.
    pub x: Int,
    /// Vertical coordinate.
    pub y: Int,
}

impl LatticePoint {
    /// Build a point from anything convertible to big integers.
    pub fn new(x: impl Into<Int>, y: impl Into<Int>) -> LatticePoint {
        LatticePoint {
            x: x.into(),
            y: y.into(),
        }
    }

    /// Squared distance to the origin.
    pub fn norm_sq(&self) -> Nat {
        (&self.x * &self.x + &self.y * &self.y).magnitude().clone()
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Add for &LatticePoint {
    type Output = LatticePoint;

    fn add(self, rhs: &LatticePoint) -> LatticePoint {
        LatticePoint::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl Sub for &LatticePoint {
    type Output = LatticePoint;

    fn sub(self, rhs: &LatticePoint) -> LatticePoint {
        LatticePoint::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

fn cross(u: &LatticePoint, v: &LatticePoint) -> Int {
    &u.x * &v.y - &u.y * &v.x
}

/// Four lattice points in cyclic order around a (claimed) parallelogram.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeParallelogram {
    vertices: [LatticePoint; 4],
}

/// Why a vertex list fails verification.
#[derive(Debug, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    /// The vertices do not close into a nondegenerate parallelogram.
    #[error("vertices do not form a parallelogram")]
    NotParallelogram,
    /// Some side has irrational length.
    #[error("side lengths are not integers")]
    NonIntegerSides,
    /// A genuine integer-sided parallelogram whose area differs from its
    /// perimeter.
    #[error("area does not equal perimeter")]
    NotEquable,
}

impl LatticeParallelogram {
    /// Wrap four vertices given in cyclic order. No validation happens here;
    /// use [`LatticeParallelogram::verify`] to check the shape.
    pub fn new(vertices: [LatticePoint; 4]) -> LatticeParallelogram {
        LatticeParallelogram { vertices }
    }

    /// The vertices in cyclic order.
    pub fn vertices(&self) -> &[LatticePoint; 4] {
        &self.vertices
    }

    /// The same shape translated by `offset`.
    pub fn translated(&self, offset: &LatticePoint) -> LatticeParallelogram {
        LatticeParallelogram {
            vertices: self.vertices.clone().map(|v| &v + offset),
        }
    }

    /// Check the vertex list and recover the certified side pair.
    ///
    /// Succeeds iff the vertices close into a nondegenerate parallelogram,
    /// both side lengths are integers, and the area equals the perimeter.
    /// Equable integer-sided lattice parallelograms always certify, so the
    /// recovered pair is a genuine [`LepPair`].
    pub fn verify(&self) -> Result<LepPair, VerifyError> {
        let [v0, v1, v2, v3] = &self.vertices;
        let side1 = v1 - v0;
        let side2 = v3 - v0;
        if (v2 - v1) != side2 {
            return Err(VerifyError::NotParallelogram);
        }
        let area = cross(&side1, &side2);
        if area.is_zero() {
            return Err(VerifyError::NotParallelogram);
        }
        let len1 = intmath::is_perfect_square(&side1.norm_sq().into())
            .ok_or(VerifyError::NonIntegerSides)?;
        let len2 = intmath::is_perfect_square(&side2.norm_sq().into())
            .ok_or(VerifyError::NonIntegerSides)?;
        if area.magnitude() != &((&len1 + &len2) * 2u32) {
            return Err(VerifyError::NotEquable);
        }
        Ok(lep_check(&len1, &len2)
            .expect("equable integer-sided lattice parallelograms always certify"))
    }

    /// The least representative of this shape's equivalence class.
    ///
    /// The class is the orbit under the eight signed axis permutations,
    /// translations, and relabelings of the vertex cycle (four starting
    /// points, two directions). The representative is the lexicographically
    /// least vertex sequence after translating the least vertex to the
    /// origin, so two shapes are lattice-equivalent iff their canonical
    /// forms are equal.
    pub fn canonical_form(&self) -> LatticeParallelogram {
        // Signed axis permutations: (x, y) -> (±x, ±y) and (±y, ±x).
        const SYMMETRIES: [[i8; 4]; 8] = [
            [1, 0, 0, 1],
            [1, 0, 0, -1],
            [-1, 0, 0, 1],
            [-1, 0, 0, -1],
            [0, 1, 1, 0],
            [0, 1, -1, 0],
            [0, -1, 1, 0],
            [0, -1, -1, 0],
        ];
        let mut best: Option<[LatticePoint; 4]> = None;
        for m in SYMMETRIES {
            let mapped = self.vertices.clone().map(|v| {
                LatticePoint::new(&v.x * m[0] + &v.y * m[1], &v.x * m[2] + &v.y * m[3])
            });
            let least = mapped.iter().min().unwrap().clone();
            let shifted = mapped.map(|v| &v - &least);
            for start in 0..4 {
                for step in [1usize, 3] {
                    let sequence = [0, 1, 2, 3].map(|i| shifted[(start + i * step) % 4].clone());
                    if best.as_ref().is_none_or(|b| sequence < *b) {
                        best = Some(sequence);
                    }
                }
            }
        }
        LatticeParallelogram {
            vertices: best.unwrap(),
        }
    }
}

impl fmt::Display for LatticeParallelogram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [v0, v1, v2, v3] = &self.vertices;
        write!(f, "[{v0}, {v1}, {v2}, {v3}]")
    }
}

fn representation_points(side: &Nat) -> Vec<LatticePoint> {
    intmath::two_square_representations(&(side * side))
        .into_iter()
        .map(|(x, y)| LatticePoint { x, y })
        .collect()
}

fn from_side_vectors(u: &LatticePoint, v: &LatticePoint) -> LatticeParallelogram {
    LatticeParallelogram {
        vertices: [LatticePoint::new(0, 0), u.clone(), u + v, v.clone()],
    }
}

/// Draw a certified pair on the lattice.
///
/// Returns vertices `(0,0), u, u+v, v` where `|u| = a`, `|v| = b` and the
/// cross product of `u` and `v` is `2(a+b)`, found as the first hit in the
/// ordered search over two-square representations of `a^2` and `b^2`. Such a
/// drawing exists for every certified pair.
pub fn realize(p: &LepPair) -> LatticeParallelogram {
    let target = Int::from(p.sum() * 2u32);
    let us = representation_points(p.a());
    let vs = representation_points(p.b());
    for u in &us {
        for v in &vs {
            if cross(u, v) == target {
                return from_side_vectors(u, v);
            }
        }
    }
    unreachable!("every certified pair has a lattice drawing: {p}")
}

/// All lattice-equivalence classes of drawings of a certified pair, as
/// sorted canonical representatives.
///
/// The search over representation pairs is complete: any drawing translates
/// to one with a vertex at the origin whose side vectors are two-square
/// representations, and orientation-reversing cases are absorbed by the
/// reflections inside [`LatticeParallelogram::canonical_form`].
pub fn realization_classes(p: &LepPair) -> Vec<LatticeParallelogram> {
    let target = Int::from(p.sum() * 2u32);
    let us = representation_points(p.a());
    let vs = representation_points(p.b());
    let mut classes = BTreeSet::new();
    for u in &us {
        for v in &vs {
            if cross(u, v) == target {
                classes.insert(from_side_vectors(u, v).canonical_form());
            }
        }
    }
    classes.into_iter().collect()
}
