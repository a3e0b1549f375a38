//! Fix one side and follow the ascending branch of partner sides.
//!
//! For fixed `a` the partner sides obey a third-order linear recurrence
//! with coefficient `a^2 - 1`; affine images such as the area sequence
//! obey the same recurrence.
//!
//! ```bash
//! cargo run --example branch_recurrences
//! ```

use equable::pell::{branch_sequence, branch_spec_for_fixed_a};
use equable::Nat;
use num::rational::BigRational;

fn main() {
    for (a, b0) in [(3u32, 6u32), (4, 4), (5, 5), (6, 3)] {
        let (a, b0) = (Nat::from(a), Nat::from(b0));
        let terms = branch_sequence(&a, &b0, 6).unwrap();
        let spec = branch_spec_for_fixed_a(&a);
        println!("a = {a}: coefficient {}, b = {terms:?}", spec.order3_coeff());
    }

    // The gcd-3 branch has integer areas (a + b)/9 * 9 = 2(a + b); scaled by
    // the affine map A = (3 + b)/9 the same recurrence produces 1, 2, 10, ...
    let spec = branch_spec_for_fixed_a(&Nat::from(3u32));
    let area_spec = spec.affine_image(
        &BigRational::new(1.into(), 9.into()),
        &BigRational::new(1.into(), 3.into()),
    );
    let mut area = BigRational::from_integer(1.into());
    let mut areas = vec![area.clone()];
    for _ in 0..5 {
        area = area_spec.step(&area).unwrap();
        areas.push(area.clone());
    }
    let shown: Vec<String> = areas.iter().map(|r| r.to_string()).collect();
    println!("a = 3 scaled areas (3 + b)/9: {}", shown.join(", "));
}
