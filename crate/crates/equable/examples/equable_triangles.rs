//! Enumerate every triangle with integer sides whose area equals its
//! perimeter. There are exactly five.
//!
//! ```bash
//! cargo run --example equable_triangles
//! ```

use equable::lep::enumerate_equable_triangles;
use equable::Nat;

fn main() {
    for (a, b, c) in enumerate_equable_triangles() {
        let perimeter = &a + &b + &c;
        // Heron: 16 A^2 = (a+b+c)(-a+b+c)(a-b+c)(a+b-c); equability means
        // A = a+b+c, so the product equals 16 (a+b+c)^2.
        let heron = &perimeter
            * (&b + &c - &a)
            * (&a + &c - &b)
            * (&a + &b - &c);
        assert_eq!(heron, &perimeter * &perimeter * Nat::from(16u32));
        println!("({a}, {b}, {c}): perimeter = area = {perimeter}");
    }
}
