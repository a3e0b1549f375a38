//! The tree structure on certified pairs.
//!
//! At the triple level, the `(m, n, q)` data of a pair with `a = f s q`
//! solves `m^2 + n^2 + f q^2 = f s m n q`, one of the six solvable
//! Markov-style equations `c_a x^2 + c_b y^2 + c_c z^2 = c_d xyz`. Vieta
//! involutions act on each coordinate, and the induced maps on side pairs
//! organise all certified pairs into three trees, one per gcd class, rooted
//! at `(3, 6)`, `(4, 4)`, and `(5, 5)`.

use crate::intmath::{Int, Nat};
use crate::lep::{lep_check, GcdClass, LepPair};
use num::{Integer as _, Signed, Zero};
use std::collections::BTreeSet;
use std::collections::VecDeque;
use std::fmt;

/// Errors from triple-level operations.
#[derive(Debug, PartialEq, Eq, thiserror::Error)]
pub enum ForestError {
    /// A Vieta partner came out zero or negative.
    #[error("Vieta partner along {0:?} is not positive")]
    NonPositivePartner(Axis),
    /// No solution found within the fundamental-search bound.
    #[error("no solution with coordinates <= {0}")]
    NoSolutionInBound(u32),
}

/// The six solvable equations `c_a x^2 + c_b y^2 + c_c z^2 = c_d xyz`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MrEquation {
    /// `x^2 + y^2 + z^2 = 3xyz` (the Markov equation)
    M,
    /// `x^2 + y^2 + 2z^2 = 4xyz`
    R1,
    /// `x^2 + 2y^2 + 3z^2 = 6xyz`
    R2,
    /// `x^2 + y^2 + 5z^2 = 5xyz`
    R3,
    /// `x^2 + y^2 + z^2 = xyz`
    R4,
    /// `x^2 + y^2 + 2z^2 = 2xyz`
    R5,
}

impl MrEquation {
    /// Coefficients `(c_a, c_b, c_c, c_d)`; each of the first three divides
    /// the last.
    pub fn coefficients(self) -> (u32, u32, u32, u32) {
        match self {
            MrEquation::M => (1, 1, 1, 3),
            MrEquation::R1 => (1, 1, 2, 4),
            MrEquation::R2 => (1, 2, 3, 6),
            MrEquation::R3 => (1, 1, 5, 5),
            MrEquation::R4 => (1, 1, 1, 1),
            MrEquation::R5 => (1, 1, 2, 2),
        }
    }

    /// The equation solved by the `(m, n, q)` triples of a gcd class:
    /// `m^2 + n^2 + f q^2 = f s m n q`.
    pub fn for_class(class: GcdClass) -> MrEquation {
        match class {
            GcdClass::G3 => MrEquation::M,
            GcdClass::G4 => MrEquation::R1,
            GcdClass::G5 => MrEquation::R3,
        }
    }

    fn holds(self, x: &Nat, y: &Nat, z: &Nat) -> bool {
        let (ca, cb, cc, cd) = self.coefficients();
        x * x * ca + y * y * cb + z * z * cc == x * y * z * cd
    }
}

/// Coordinate axes of a triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    /// first coordinate
    X,
    /// second coordinate
    Y,
    /// third coordinate
    Z,
}

/// A positive solution of one of the six equations. The equation is checked
/// at construction and preserved by every operation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MrTriple {
    eq: MrEquation,
    x: Nat,
    y: Nat,
    z: Nat,
}

impl MrTriple {
    /// Wrap a solution, rejecting non-solutions and zero coordinates.
    pub fn new(eq: MrEquation, x: Nat, y: Nat, z: Nat) -> Option<MrTriple> {
        if x.is_zero() || y.is_zero() || z.is_zero() || !eq.holds(&x, &y, &z) {
            return None;
        }
        Some(MrTriple { eq, x, y, z })
    }

    /// The equation this triple solves.
    pub fn equation(&self) -> MrEquation {
        self.eq
    }

    /// Coordinates `(x, y, z)`.
    pub fn coords(&self) -> (&Nat, &Nat, &Nat) {
        (&self.x, &self.y, &self.z)
    }
}

impl fmt::Display for MrTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// Vieta involution along one axis: the chosen coordinate `t` is replaced
/// by `(c_d / c_t) * (product of the other two) - t`, the second root of
/// the equation viewed as a quadratic in that coordinate.
pub fn mr_involution(t: &MrTriple, axis: Axis) -> Result<MrTriple, ForestError> {
    let (ca, cb, cc, cd) = t.eq.coefficients();
    let (coeff, others, current) = match axis {
        Axis::X => (cd / ca, &t.y * &t.z, &t.x),
        Axis::Y => (cd / cb, &t.x * &t.z, &t.y),
        Axis::Z => (cd / cc, &t.x * &t.y, &t.z),
    };
    let partner = Int::from(others * coeff) - Int::from(current.clone());
    if !partner.is_positive() {
        return Err(ForestError::NonPositivePartner(axis));
    }
    let partner = partner.magnitude().clone();
    let (x, y, z) = match axis {
        Axis::X => (partner, t.y.clone(), t.z.clone()),
        Axis::Y => (t.x.clone(), partner, t.z.clone()),
        Axis::Z => (t.x.clone(), t.y.clone(), partner),
    };
    Ok(MrTriple::new(t.eq, x, y, z).expect("Vieta partner solves the same equation"))
}

/// Smallest positive solution of an equation: exhaustive scan of
/// coordinates up to 16, minimising `x + y + z` and breaking ties
/// lexicographically.
pub fn mr_fundamental(eq: MrEquation) -> Result<MrTriple, ForestError> {
    const BOUND: u32 = 16;
    let mut best: Option<(u32, [u32; 3])> = None;
    for x in 1..=BOUND {
        for y in 1..=BOUND {
            for z in 1..=BOUND {
                if eq.holds(&Nat::from(x), &Nat::from(y), &Nat::from(z)) {
                    let key = (x + y + z, [x, y, z]);
                    if best.is_none() || key < best.unwrap() {
                        best = Some(key);
                    }
                }
            }
        }
    }
    let (_, [x, y, z]) = best.ok_or(ForestError::NoSolutionInBound(BOUND))?;
    Ok(MrTriple::new(eq, Nat::from(x), Nat::from(y), Nat::from(z)).unwrap())
}

/// Second component of the Vieta partner when the first component stays
/// fixed: `(first^2 * second +- first * disc_root) / 2 - 2 * first - second`.
///
/// Role order matters here: callers that want to move the *first* component
/// swap the arguments. The value can be non-positive only on uncertified
/// input, hence the signed return.
fn partner_second(first: &Nat, second: &Nat, disc_root: &Nat, plus: bool) -> Int {
    let core = first * first * second;
    let spread = first * disc_root;
    let numerator = if plus { core + spread } else { core - spread };
    debug_assert!(numerator.is_even());
    Int::from(numerator / 2u32) - Int::from(first * 2u32) - Int::from(second.clone())
}

fn certify(a: &Nat, b: &Nat) -> LepPair {
    lep_check(a, b).expect("tree step must land on a certified pair")
}

/// Vieta step that grows the second component: `(a, b)` to
/// `(a, (a^2 b + a disc_root)/2 - 2a - b)`.
pub fn phi1(p: &LepPair) -> LepPair {
    let image = partner_second(p.a(), p.b(), p.disc_root(), true);
    assert!(image.is_positive(), "growing step left the positive range");
    certify(p.a(), image.magnitude())
}

/// Vieta step with the minus sign, shrinking the second component; the
/// image is reordered. Returns `None` if the partner is not a positive
/// certified side, which does not happen on certified input (the partner is
/// the branch predecessor, or coincides with [`phi1`] when `disc_root = 0`).
pub fn phi2(p: &LepPair) -> Option<LepPair> {
    let image = partner_second(p.a(), p.b(), p.disc_root(), false);
    if !image.is_positive() {
        return None;
    }
    lep_check(p.a(), image.magnitude())
}

/// Mirror of [`phi1`] acting on the first component; the image is reordered.
pub fn psi1(p: &LepPair) -> LepPair {
    let image = partner_second(p.b(), p.a(), p.disc_root(), true);
    assert!(image.is_positive(), "growing step left the positive range");
    certify(p.b(), image.magnitude())
}

/// Mirror of [`phi2`] acting on the first component; the image is reordered.
pub fn psi2(p: &LepPair) -> Option<LepPair> {
    let image = partner_second(p.b(), p.a(), p.disc_root(), false);
    if !image.is_positive() {
        return None;
    }
    lep_check(p.b(), image.magnitude())
}

/// Edge labels of the tree, naming the map that produced the child.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeLabel {
    /// [`phi1`]
    Phi1,
    /// [`phi2`]
    Phi2,
    /// [`psi1`]
    Psi1,
    /// [`psi2`]
    Psi2,
}

impl EdgeLabel {
    /// Stable lower-case name used in serialized output.
    pub fn name(self) -> &'static str {
        match self {
            EdgeLabel::Phi1 => "phi1",
            EdgeLabel::Phi2 => "phi2",
            EdgeLabel::Psi1 => "psi1",
            EdgeLabel::Psi2 => "psi2",
        }
    }
}

/// One node of a materialised tree. Nodes refer to each other by index
/// into [`Tree::nodes`].
#[derive(Clone, Debug)]
pub struct TreeNode {
    /// The certified pair at this node.
    pub pair: LepPair,
    /// Index of the parent; `None` at the root.
    pub parent: Option<usize>,
    /// Label of the edge from the parent; `None` at the root.
    pub edge_from_parent: Option<EdgeLabel>,
    /// Children in generation order.
    pub children: Vec<usize>,
}

/// A tree of certified pairs for one gcd class, truncated to a sum bound,
/// in breadth-first order with the root at index 0.
#[derive(Clone, Debug)]
pub struct Tree {
    /// The gcd class of every node.
    pub class: GcdClass,
    /// Breadth-first node list; empty when the root exceeds the bound.
    pub nodes: Vec<TreeNode>,
}

impl Tree {
    /// Iterate over `(index, node)` pairs in breadth-first order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &TreeNode)> {
        self.nodes.iter().enumerate()
    }

    /// The child of `index` reached along `label`, if present.
    pub fn child_via(&self, index: usize, label: EdgeLabel) -> Option<usize> {
        self.nodes[index]
            .children
            .iter()
            .copied()
            .find(|&c| self.nodes[c].edge_from_parent == Some(label))
    }
}

/// Root pair of a class tree.
pub fn fundamental_pair(class: GcdClass) -> LepPair {
    let (a, b) = match class {
        GcdClass::G3 => (3u32, 6u32),
        GcdClass::G4 => (4, 4),
        GcdClass::G5 => (5, 5),
    };
    lep_check(&Nat::from(a), &Nat::from(b)).unwrap()
}

/// Materialise the tree of one gcd class, keeping exactly the nodes with
/// `a + b <= bound_sum`.
///
/// Children are generated in the fixed order `phi1`, `psi1`, `psi2`, `phi2`,
/// dropping images already seen; `phi2` normally points back at the parent
/// and contributes a child only where maps coincide near the root. Every
/// child has a strictly larger side sum than its parent, so the truncation
/// is complete.
pub fn enumerate_tree(class: GcdClass, bound_sum: &Nat) -> Tree {
    let root = fundamental_pair(class);
    let mut tree = Tree {
        class,
        nodes: Vec::new(),
    };
    if &root.sum() > bound_sum {
        return tree;
    }
    let mut seen: BTreeSet<(Nat, Nat)> = BTreeSet::new();
    seen.insert((root.a().clone(), root.b().clone()));
    tree.nodes.push(TreeNode {
        pair: root,
        parent: None,
        edge_from_parent: None,
        children: Vec::new(),
    });
    let mut queue: VecDeque<usize> = VecDeque::from([0]);
    while let Some(index) = queue.pop_front() {
        let p = tree.nodes[index].pair.clone();
        let candidates = [
            (EdgeLabel::Phi1, Some(phi1(&p))),
            (EdgeLabel::Psi1, Some(psi1(&p))),
            (EdgeLabel::Psi2, psi2(&p)),
            (EdgeLabel::Phi2, phi2(&p)),
        ];
        for (label, child) in candidates {
            let Some(child) = child else { continue };
            assert_eq!(child.gcd_class(), class, "tree step must preserve the class");
            if &child.sum() > bound_sum
                || !seen.insert((child.a().clone(), child.b().clone()))
            {
                continue;
            }
            // Unseen images are genuine children; steps back towards the
            // root always land on already-visited pairs in BFS order.
            assert!(child.sum() > p.sum(), "tree step must grow the side sum");
            let child_index = tree.nodes.len();
            tree.nodes.push(TreeNode {
                pair: child,
                parent: Some(index),
                edge_from_parent: Some(label),
                children: Vec::new(),
            });
            tree.nodes[index].children.push(child_index);
            queue.push_back(child_index);
        }
    }
    tree
}

/// All certified pairs with `a + b <= bound_sum`, from all three trees,
/// sorted by `(a + b, a)`.
pub fn enumerate_all(bound_sum: &Nat) -> Vec<LepPair> {
    let mut pairs: Vec<LepPair> = [GcdClass::G3, GcdClass::G4, GcdClass::G5]
        .into_iter()
        .flat_map(|class| enumerate_tree(class, bound_sum).nodes)
        .map(|node| node.pair)
        .collect();
    pairs.sort_by_key(|p| (p.sum(), p.a().clone()));
    pairs
}
