//! Certification and basic geometry of lattice equable parallelograms.
//!
//! A parallelogram with integer side lengths `a <= b`, vertices in `Z^2`,
//! and area equal to perimeter exists exactly when
//! `disc = a^2 b^2 - 4(a + b)^2` is a perfect square. [`lep_check`] decides
//! that criterion and hands back a certified [`LepPair`] carrying the root;
//! everything else in the crate consumes certified pairs.

use crate::intmath::{self, Int, Nat};
use num::rational::BigRational;
use num::{One, Zero};
use std::fmt;

/// The three possible values of `gcd(a, b)` for a certified pair, together
/// with the constants attached to each class.
///
/// Writing `k = f * s^2`, the class determines `(f, s)`: gcd 3 gives
/// `(1, 3)` and `k = 9`, gcd 4 gives `(2, 2)` and `k = 8`, gcd 5 gives
/// `(5, 1)` and `k = 5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GcdClass {
    /// `gcd(a, b) = 3`
    G3,
    /// `gcd(a, b) = 4`
    G4,
    /// `gcd(a, b) = 5`
    G5,
}

impl GcdClass {
    /// Class for a given gcd value, if it is one of 3, 4, 5.
    pub fn from_gcd(g: &Nat) -> Option<GcdClass> {
        match u32::try_from(g).ok()? {
            3 => Some(GcdClass::G3),
            4 => Some(GcdClass::G4),
            5 => Some(GcdClass::G5),
            _ => None,
        }
    }

    /// The gcd value itself.
    pub fn gcd(self) -> u32 {
        match self {
            GcdClass::G3 => 3,
            GcdClass::G4 => 4,
            GcdClass::G5 => 5,
        }
    }

    /// The decomposition constant `k` with `ab = k(m^2 + n^2)`.
    pub fn k(self) -> u32 {
        match self {
            GcdClass::G3 => 9,
            GcdClass::G4 => 8,
            GcdClass::G5 => 5,
        }
    }

    /// The factorisation `k = f * s^2`.
    pub fn f_s(self) -> (u32, u32) {
        match self {
            GcdClass::G3 => (1, 3),
            GcdClass::G4 => (2, 2),
            GcdClass::G5 => (5, 1),
        }
    }
}

impl fmt::Display for GcdClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.gcd())
    }
}

/// A certified side pair `a <= b` admitting a lattice equable parallelogram,
/// carrying the square root of its discriminant.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LepPair {
    a: Nat,
    b: Nat,
    disc_root: Nat,
    class: GcdClass,
}

impl LepPair {
    /// Shorter side.
    pub fn a(&self) -> &Nat {
        &self.a
    }

    /// Longer side.
    pub fn b(&self) -> &Nat {
        &self.b
    }

    /// `sqrt(a^2 b^2 - 4(a + b)^2)`.
    pub fn disc_root(&self) -> &Nat {
        &self.disc_root
    }

    /// gcd class of the pair.
    pub fn gcd_class(&self) -> GcdClass {
        self.class
    }

    /// `a + b`.
    pub fn sum(&self) -> Nat {
        &self.a + &self.b
    }

    /// Common area and perimeter, `2(a + b)`.
    pub fn area(&self) -> Nat {
        self.sum() * 2u32
    }
}

impl fmt::Display for LepPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// Error for side pairs handed in the wrong order or with a zero side.
#[derive(Debug, PartialEq, Eq, thiserror::Error)]
#[error("sides must satisfy 1 <= a <= b")]
pub struct SideOrderError;

/// Whether **any** equable parallelogram with side lengths `a <= b` exists
/// (lattice vertices not required): `ab >= 2(a + b)`, equivalently
/// `(a - 2)(b - 2) >= 4`.
pub fn equable_parallelogram_exists(a: &Nat, b: &Nat) -> Result<bool, SideOrderError> {
    if a.is_zero() || a > b {
        return Err(SideOrderError);
    }
    Ok(a * b >= (a + b) * 2u32)
}

/// Decide the lattice criterion for an unordered side pair.
///
/// Returns the certified pair when `a^2 b^2 - 4(a + b)^2` is a perfect
/// square, `None` otherwise. Certified pairs always have gcd 3, 4, or 5;
/// a hit outside those classes would be a contradiction and panics.
pub fn lep_check(a: &Nat, b: &Nat) -> Option<LepPair> {
    if a.is_zero() || b.is_zero() {
        return None;
    }
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    let sum = a + b;
    let ab = a * b;
    let disc = Int::from(&ab * &ab) - Int::from(4u32 * (&sum * &sum));
    let disc_root = intmath::is_perfect_square(&disc)?;
    let class = GcdClass::from_gcd(&intmath::gcd(a, b))
        .expect("certified pair must have gcd 3, 4, or 5");
    Some(LepPair {
        a: a.clone(),
        b: b.clone(),
        disc_root,
        class,
    })
}

/// The `(k, m, n, q, r)` decomposition of a certified pair:
/// `ab = k(m^2 + n^2)`, `a + b = kmn`, `a = gcd * q`, `b = gcd * r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// Class constant: 9, 8, or 5.
    pub k: Nat,
    /// Smaller inner parameter, `m <= n`, `gcd(m, n) = 1`.
    pub m: Nat,
    /// Larger inner parameter.
    pub n: Nat,
    /// `a / gcd(a, b)`.
    pub q: Nat,
    /// `b / gcd(a, b)`.
    pub r: Nat,
}

/// Split a certified pair into its `(k, m, n, q, r)` data.
///
/// `k n^2 = (ab + disc_root)/2` and `k m^2 = (ab - disc_root)/2`; both
/// quotients are exact and both cofactors are perfect squares for every
/// certified pair, so any failure here is an internal invariant violation
/// and panics.
pub fn decompose(p: &LepPair) -> Decomposition {
    let k = Nat::from(p.gcd_class().k());
    let ab = p.a() * p.b();
    let plus = &ab + p.disc_root();
    let minus = &ab - p.disc_root();
    let square_part = |t: &Nat| -> Nat {
        assert!(t.is_even(), "k-part of {p} is not even");
        let half = t / 2u32;
        assert!((&half % &k).is_zero(), "k does not divide half of {p}");
        intmath::exact_sqrt(&(half / &k)).expect("k-part cofactor must be a perfect square")
    };
    let n = square_part(&plus);
    let m = square_part(&minus);
    assert!(intmath::gcd(&m, &n).is_one(), "inner parameters of {p} not coprime");
    assert_eq!(&k * (&m * &m + &n * &n), ab, "ab identity broken for {p}");
    assert_eq!(&k * &m * &n, p.sum(), "a+b identity broken for {p}");
    let g = Nat::from(p.gcd_class().gcd());
    Decomposition {
        k,
        m,
        n,
        q: p.a() / &g,
        r: p.b() / &g,
    }
    // `is_even` comes from num::Integer.
}

use num::Integer as _;

/// Exact squared diagonals, altitudes, and normalised altitudes of a
/// certified pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Geometry {
    /// Squared long diagonal, `a^2 + b^2 + 2 disc_root`.
    pub d_long_sq: Nat,
    /// Squared short diagonal, `a^2 + b^2 - 2 disc_root`.
    pub d_short_sq: Nat,
    /// Altitude onto the longer side pair: `2(a + b)/a`.
    pub h_long: BigRational,
    /// Altitude onto the shorter side pair: `2(a + b)/b`.
    pub h_short: BigRational,
    /// Square of the diagonal-normalised altitude `2(a + b)/d_short`.
    pub eta_long_sq: BigRational,
    /// Square of `2(a + b)/d_long`.
    pub eta_short_sq: BigRational,
}

/// Compute the exact geometry of a certified pair.
pub fn geometry(p: &LepPair) -> Geometry {
    let a2b2 = p.a() * p.a() + p.b() * p.b();
    let two_root = p.disc_root() * 2u32;
    let d_long_sq = &a2b2 + &two_root;
    let d_short_sq = &a2b2 - &two_root;
    let twice_sum = Int::from(p.area());
    let four_sum_sq = &twice_sum * &twice_sum;
    Geometry {
        h_long: BigRational::new(twice_sum.clone(), Int::from(p.a().clone())),
        h_short: BigRational::new(twice_sum, Int::from(p.b().clone())),
        eta_long_sq: BigRational::new(four_sum_sq.clone(), Int::from(d_short_sq.clone())),
        eta_short_sq: BigRational::new(four_sum_sq, Int::from(d_long_sq.clone())),
        d_long_sq,
        d_short_sq,
    }
}

/// Whether the pair admits a realization with a corner lattice point at
/// foot-of-altitude distance, i.e. whether `a` divides `2b`.
pub fn is_pythagorean(p: &LepPair) -> bool {
    ((p.b() * 2u32) % p.a()).is_zero()
}

/// The finitely many special side patterns, plus `Generic` for the rest.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialClass {
    /// The rhombus `(4, 4)`.
    Rhombus4,
    /// The rhombus `(5, 5)`.
    Rhombus5,
    /// The double-ratio pair `(3, 6)`.
    DoubleRatio3,
    /// The double-ratio pair `(5, 10)`.
    DoubleRatio5,
    /// Neither a rhombus nor a `b = 2a` pair.
    Generic,
}

impl SpecialClass {
    /// Stable lower-case name used in serialized output.
    pub fn name(self) -> &'static str {
        match self {
            SpecialClass::Rhombus4 => "rhombus_4",
            SpecialClass::Rhombus5 => "rhombus_5",
            SpecialClass::DoubleRatio3 => "double_ratio_3",
            SpecialClass::DoubleRatio5 => "double_ratio_5",
            SpecialClass::Generic => "generic",
        }
    }
}

/// Classify the special side patterns. Rhombi occur only at `a = 4, 5` and
/// `b = 2a` only at `a = 3, 5`; any other match would contradict the
/// certification and panics.
pub fn classify_special(p: &LepPair) -> SpecialClass {
    if p.a() == p.b() {
        return match u32::try_from(p.a()) {
            Ok(4) => SpecialClass::Rhombus4,
            Ok(5) => SpecialClass::Rhombus5,
            _ => unreachable!("rhombus with side {} cannot be certified", p.a()),
        };
    }
    if *p.b() == p.a() * 2u32 {
        return match u32::try_from(p.a()) {
            Ok(3) => SpecialClass::DoubleRatio3,
            Ok(5) => SpecialClass::DoubleRatio5,
            _ => unreachable!("double-ratio pair with a = {} cannot be certified", p.a()),
        };
    }
    SpecialClass::Generic
}

/// Side triples `(a, b, c)`, sorted, of all triangles with integer sides
/// whose area equals their perimeter.
///
/// With `x = -a + b + c`, `y = a - b + c`, `z = a + b - c` (all positive and
/// even up to a factor shared below), equability reduces to
/// `xyz = 4(x + y + z)` with `x <= y <= z`, which forces `x <= 3` and
/// `y <= 8`; the scan below is exhaustive.
pub fn enumerate_equable_triangles() -> Vec<(Nat, Nat, Nat)> {
    let mut triples: Vec<(u64, u64, u64)> = Vec::new();
    for x in 1u64..=3 {
        for y in x..=8 {
            if x * y <= 4 {
                continue;
            }
            let (num, den) = (4 * (x + y), x * y - 4);
            if num % den != 0 {
                continue;
            }
            let z = num / den;
            if z < y {
                continue;
            }
            let mut sides = [y + z, x + z, x + y];
            sides.sort();
            triples.push((sides[0], sides[1], sides[2]));
        }
    }
    triples.sort();
    triples
        .into_iter()
        .map(|(a, b, c)| (Nat::from(a), Nat::from(b), Nat::from(c)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(n: u128) -> Nat {
        Nat::from(n)
    }

    fn pair(a: u128, b: u128) -> LepPair {
        lep_check(&nat(a), &nat(b)).expect("expected a certified pair")
    }

    fn rational(num: i128, den: i128) -> BigRational {
        BigRational::new(Int::from(num), Int::from(den))
    }

    #[test]
    fn existence_inequality() {
        assert_eq!(equable_parallelogram_exists(&nat(3), &nat(5)), Ok(false));
        assert_eq!(equable_parallelogram_exists(&nat(3), &nat(6)), Ok(true));
        assert_eq!(equable_parallelogram_exists(&nat(2), &nat(1000)), Ok(false));
        assert_eq!(equable_parallelogram_exists(&nat(4), &nat(4)), Ok(true));
        assert_eq!(equable_parallelogram_exists(&nat(6), &nat(3)), Err(SideOrderError));
        assert_eq!(equable_parallelogram_exists(&nat(0), &nat(9)), Err(SideOrderError));
    }

    #[test]
    fn certification_known_pairs() {
        let p = pair(3, 6);
        assert_eq!((p.a(), p.b()), (&nat(3), &nat(6)));
        assert_eq!(p.disc_root(), &nat(0));
        assert_eq!(p.gcd_class(), GcdClass::G3);

        let p = pair(5, 5);
        assert_eq!(p.disc_root(), &nat(15));
        assert_eq!(p.gcd_class(), GcdClass::G5);

        // 7^4 - 4 * 14^2 = 1617 falls between 40^2 and 41^2.
        assert_eq!(lep_check(&nat(7), &nat(7)), None);
        assert_eq!(lep_check(&nat(1), &nat(1)), None);
        assert_eq!(lep_check(&nat(0), &nat(6)), None);
    }

    #[test]
    fn certification_ignores_argument_order() {
        assert_eq!(lep_check(&nat(10), &nat(5)), lep_check(&nat(5), &nat(10)));
        let p = pair(10, 5);
        assert_eq!((p.a(), p.b()), (&nat(5), &nat(10)));
    }

    #[test]
    fn area_is_twice_the_sum() {
        assert_eq!(pair(3, 6).area(), nat(18));
        assert_eq!(pair(25, 65).area(), nat(180));
    }

    /// Independent certification oracle on machine integers: binary-search
    /// floor square root, no calls into the library.
    fn is_lep_oracle(a: u64, b: u64) -> bool {
        let (a, b) = (a as i128, b as i128);
        if a == 0 || b == 0 {
            return false;
        }
        let disc = a * a * b * b - 4 * (a + b) * (a + b);
        if disc < 0 {
            return false;
        }
        let (mut lo, mut hi) = (0i128, 1i128);
        while hi * hi <= disc {
            hi *= 2;
        }
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if mid * mid <= disc {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo * lo == disc
    }

    #[test]
    fn certification_matches_oracle_to_300() {
        for a in 1u64..=300 {
            for b in a..=300 {
                let got = lep_check(&nat(a as u128), &nat(b as u128)).is_some();
                assert_eq!(got, is_lep_oracle(a, b), "(a, b) = ({a}, {b})");
            }
        }
    }

    #[test]
    fn certification_of_large_pairs() {
        assert!(lep_check(&nat(85), &nat(1525)).is_some());
        assert!(lep_check(&nat(445), &nat(1165)).is_some());
        let p = pair(1930, 17838985);
        assert_eq!(p.gcd_class(), GcdClass::G5);
        assert!(lep_check(&nat(1930), &nat(17838986)).is_none());
    }

    #[test]
    fn certified_pairs_have_gcd_3_4_5() {
        for p in all_pairs_to(1000) {
            assert!([3, 4, 5].contains(&p.gcd_class().gcd()), "{p}");
        }
    }

    #[test]
    fn decompose_known_pairs() {
        let d = decompose(&pair(3, 6));
        assert_eq!(
            (d.k, d.m, d.n, d.q, d.r),
            (nat(9), nat(1), nat(1), nat(1), nat(2))
        );
        let d = decompose(&pair(5, 10));
        assert_eq!(
            (d.k, d.m, d.n, d.q, d.r),
            (nat(5), nat(1), nat(3), nat(1), nat(2))
        );
        let d = decompose(&pair(4, 20));
        assert_eq!(
            (d.k, d.m, d.n, d.q, d.r),
            (nat(8), nat(1), nat(3), nat(1), nat(5))
        );
    }

    #[test]
    fn decomposition_quadratic_identities() {
        // q + r and qr satisfy one quadratic relation per class.
        for (a, b) in [(3u128, 6), (3, 15), (6, 39), (4, 4), (4, 20), (20, 116), (5, 5), (5, 10), (10, 25), (5, 85)] {
            let p = pair(a, b);
            let d = decompose(&p);
            let mn = &d.m * &d.n;
            let m2n2 = &d.m * &d.m + &d.n * &d.n;
            let (sum, prod) = (&d.q + &d.r, &d.q * &d.r);
            match p.gcd_class() {
                GcdClass::G3 => {
                    assert_eq!(sum, &mn * 3u32);
                    assert_eq!(prod, m2n2);
                }
                GcdClass::G4 => {
                    assert_eq!(sum, &mn * 2u32);
                    assert_eq!(prod * 2u32, m2n2);
                }
                GcdClass::G5 => {
                    assert_eq!(sum, mn);
                    assert_eq!(prod * 5u32, m2n2);
                }
            }
        }
    }

    #[test]
    fn geometry_known_pairs() {
        let g = geometry(&pair(5, 5));
        assert_eq!(g.d_long_sq, nat(80));
        assert_eq!(g.d_short_sq, nat(20));

        let g = geometry(&pair(3, 6));
        assert_eq!(g.h_long, rational(6, 1));
        assert_eq!(g.h_short, rational(3, 1));
        assert_eq!(g.eta_long_sq, rational(36, 5));

        let g = geometry(&pair(4, 4));
        assert_eq!(g.d_long_sq, nat(32));
        assert_eq!(g.d_short_sq, nat(32));
        assert_eq!(g.eta_short_sq, rational(8, 1));
    }

    /// Certified pairs with both sides at most `bound_each_side`; candidates
    /// are narrowed with the machine-integer oracle so the scan stays fast.
    fn all_pairs_to(bound_each_side: u64) -> Vec<LepPair> {
        let mut v = Vec::new();
        for a in 1..=bound_each_side {
            for b in a..=bound_each_side {
                if is_lep_oracle(a, b) {
                    v.push(pair(a as u128, b as u128));
                }
            }
        }
        v
    }

    #[test]
    fn geometry_identities_on_certified_pairs() {
        for p in all_pairs_to(300) {
            let g = geometry(&p);
            // Product of squared diagonals.
            let sum = p.sum();
            let diff = Int::from(p.b().clone()) - Int::from(p.a().clone());
            let expect = Int::from(&sum * &sum) * (Int::from(16) + &diff * &diff);
            assert_eq!(Int::from(&g.d_long_sq * &g.d_short_sq), expect);
            // Altitude relation (h_short - 2)(h_long - 2) = 4.
            let two = rational(2, 1);
            assert_eq!(
                (&g.h_short - &two) * (&g.h_long - &two),
                rational(4, 1)
            );
            // Bounds 4 < eta_long^2 <= 20 and 4 < eta_short^2 <= 8.
            let four = rational(4, 1);
            assert!(g.eta_long_sq > four && g.eta_long_sq <= rational(20, 1));
            assert!(g.eta_short_sq > four && g.eta_short_sq <= rational(8, 1));
            // Diagonals and altitudes of an equable parallelogram are never
            // integers (squared diagonals are never perfect squares).
            assert_eq!(intmath::is_perfect_square(&Int::from(g.d_long_sq)), None);
            assert_eq!(intmath::is_perfect_square(&Int::from(g.d_short_sq)), None);
        }
    }

    #[test]
    fn pythagorean_known_pairs() {
        assert!(!is_pythagorean(&pair(25, 65)));
        assert!(is_pythagorean(&pair(3, 87)));
        assert!(is_pythagorean(&pair(10, 25)));
    }

    #[test]
    fn special_classification() {
        assert_eq!(classify_special(&pair(4, 4)), SpecialClass::Rhombus4);
        assert_eq!(classify_special(&pair(5, 5)), SpecialClass::Rhombus5);
        assert_eq!(classify_special(&pair(3, 6)), SpecialClass::DoubleRatio3);
        assert_eq!(classify_special(&pair(5, 10)), SpecialClass::DoubleRatio5);
        assert_eq!(classify_special(&pair(3, 15)), SpecialClass::Generic);
    }

    fn has_prime_factor_3_mod_4(mut n: u64) -> bool {
        let mut d = 2;
        while d * d <= n {
            while n.is_multiple_of(d) {
                if d % 4 == 3 {
                    return true;
                }
                n /= d;
            }
            d += 1;
        }
        n % 4 == 3 && n > 1
    }

    #[test]
    fn divisibility_facts_on_certified_pairs() {
        for p in all_pairs_to(1000) {
            let a = u64::try_from(p.a()).unwrap();
            let b = u64::try_from(p.b()).unwrap();
            match p.gcd_class() {
                GcdClass::G3 => {
                    assert_eq!((a + b) % 9, 0);
                    assert_ne!(a % 9, 0);
                    assert_ne!(b % 9, 0);
                    assert!(!has_prime_factor_3_mod_4(a / 3));
                    assert!(!has_prime_factor_3_mod_4(b / 3));
                }
                GcdClass::G4 => {
                    assert_eq!((a + b) % 8, 0);
                    assert_ne!(a % 8, 0);
                    assert_ne!(b % 8, 0);
                    assert!(!has_prime_factor_3_mod_4(a));
                    assert!(!has_prime_factor_3_mod_4(b));
                }
                GcdClass::G5 => {
                    assert!(!has_prime_factor_3_mod_4(a));
                    assert!(!has_prime_factor_3_mod_4(b));
                }
            }
        }
        // A pair built purely from primes 1 mod 4 (and the gcd factor).
        let p = pair(85, 1525);
        assert_eq!(p.gcd_class(), GcdClass::G5);
    }

    #[test]
    fn equable_triangles_exact_list() {
        let expect: Vec<(Nat, Nat, Nat)> = [
            (5u64, 12, 13),
            (6, 8, 10),
            (6, 25, 29),
            (7, 15, 20),
            (9, 10, 17),
        ]
        .iter()
        .map(|&(a, b, c): &(u64, u64, u64)| (Nat::from(a), Nat::from(b), Nat::from(c)))
        .collect();
        assert_eq!(enumerate_equable_triangles(), expect);
    }

    #[test]
    fn equable_triangles_are_equable() {
        // 16 * area^2 = (a+b+c)(-a+b+c)(a-b+c)(a+b-c); area = perimeter
        // exactly when that product equals 16 (a+b+c)^2.
        for (a, b, c) in enumerate_equable_triangles() {
            let (a, b, c) = (
                Int::from(a),
                Int::from(b),
                Int::from(c),
            );
            let p = &a + &b + &c;
            let heron = &p * (-&a + &b + &c) * (&a - &b + &c) * (&a + &b - &c);
            assert_eq!(heron, Int::from(16) * &p * &p);
        }
    }
}
