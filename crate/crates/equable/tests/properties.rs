//! Randomized properties checked against brute-force oracles.

use equable::intmath::{gcd, is_perfect_square, isqrt, two_square_representations, Int, Nat};
use equable::lattice::{LatticeParallelogram, LatticePoint};
use equable::lep::lep_check;
use num::One;
use proptest::prelude::*;

fn arbitrary_nat() -> impl Strategy<Value = Nat> {
    proptest::collection::vec(any::<u8>(), 0..48).prop_map(|bytes| Nat::from_bytes_be(&bytes))
}

proptest! {
    #[test]
    fn isqrt_is_the_integer_square_root(n in arbitrary_nat()) {
        let r = isqrt(&n);
        prop_assert!(&r * &r <= n);
        let next = &r + 1u32;
        prop_assert!(&next * &next > n);
    }

    #[test]
    fn perfect_squares_round_trip(r in arbitrary_nat(), offset in 1u32..1000) {
        let square = &r * &r;
        prop_assert_eq!(is_perfect_square(&square.clone().into()), Some(r.clone()));
        // Anything strictly between r^2 and (r+1)^2 is not a square.
        let gap = &r * 2u32;
        if Nat::from(offset) <= gap {
            let inside = &square + offset;
            prop_assert_eq!(is_perfect_square(&inside.into()), None);
        }
    }

    #[test]
    fn negative_numbers_are_never_squares(n in arbitrary_nat()) {
        let negative = -Int::from(n) - Int::one();
        prop_assert_eq!(is_perfect_square(&negative), None);
    }

    #[test]
    fn two_square_representations_match_brute_force(n in 0u32..400) {
        let got = two_square_representations(&Nat::from(n));
        let mut expect = Vec::new();
        let bound = n.isqrt() as i64;
        for p in -bound..=bound {
            for q in -bound..=bound {
                if p * p + q * q == n as i64 {
                    expect.push((Int::from(p), Int::from(q)));
                }
            }
        }
        if n == 0 {
            expect.push((Int::from(0), Int::from(0)));
        }
        expect.sort();
        expect.dedup();
        prop_assert_eq!(got, expect);
    }

    #[test]
    fn certification_matches_integer_oracle(a in 1u64..400, b in 1u64..400) {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        let disc = (a * a * b * b) as i128 - 4 * ((a + b) * (a + b)) as i128;
        let oracle = disc >= 0 && {
            let mut r = (disc as f64).sqrt() as i128;
            while r > 0 && r * r > disc { r -= 1; }
            while (r + 1) * (r + 1) <= disc { r += 1; }
            r * r == disc
        };
        let checked = lep_check(&Nat::from(a), &Nat::from(b));
        prop_assert_eq!(checked.is_some(), oracle);
        if let Some(p) = checked {
            prop_assert_eq!(u64::try_from(gcd(p.a(), p.b())).unwrap(), num::integer::gcd(a, b));
        }
    }

    #[test]
    fn canonical_form_constant_on_random_orbit_elements(
        symmetry in 0usize..8,
        start in 0usize..4,
        reverse in any::<bool>(),
        dx in -50i64..50,
        dy in -50i64..50,
    ) {
        let p = lep_check(&Nat::from(5u32), &Nat::from(10u32)).unwrap();
        let base = equable::lattice::realize(&p);
        let matrices: [[i64; 4]; 8] = [
            [1, 0, 0, 1], [1, 0, 0, -1], [-1, 0, 0, 1], [-1, 0, 0, -1],
            [0, 1, 1, 0], [0, 1, -1, 0], [0, -1, 1, 0], [0, -1, -1, 0],
        ];
        let m = matrices[symmetry];
        let mut vertices: Vec<LatticePoint> = base
            .vertices()
            .iter()
            .map(|v| LatticePoint::new(&v.x * m[0] + &v.y * m[1], &v.x * m[2] + &v.y * m[3]))
            .map(|v| LatticePoint::new(v.x + Int::from(dx), v.y + Int::from(dy)))
            .collect();
        vertices.rotate_left(start);
        if reverse {
            vertices.reverse();
        }
        let moved = LatticeParallelogram::new(vertices.try_into().unwrap());
        prop_assert_eq!(moved.canonical_form(), base.canonical_form());
    }
}
