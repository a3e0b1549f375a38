//! Certify side pairs and print everything the library knows about them.
//!
//! ```bash
//! cargo run --example check_pair
//! ```

use equable::lep::{classify_special, decompose, geometry, is_pythagorean, lep_check};
use equable::Nat;

fn main() {
    for (a, b) in [(3u32, 6u32), (5, 5), (4, 20), (25, 65), (3, 5), (7, 7)] {
        let (a, b) = (Nat::from(a), Nat::from(b));
        match lep_check(&a, &b) {
            None => println!("({a}, {b}): no lattice equable parallelogram"),
            Some(p) => {
                let d = decompose(&p);
                let g = geometry(&p);
                println!(
                    "{p}: gcd class {}, area {}, k={} m={} n={} q={} r={}",
                    p.gcd_class(),
                    p.area(),
                    d.k,
                    d.m,
                    d.n,
                    d.q,
                    d.r
                );
                println!(
                    "        diagonals^2 {} / {}, heights {} / {}, pythagorean: {}, special: {}",
                    g.d_long_sq,
                    g.d_short_sq,
                    g.h_long,
                    g.h_short,
                    is_pythagorean(&p),
                    classify_special(&p).name()
                );
            }
        }
    }
}
