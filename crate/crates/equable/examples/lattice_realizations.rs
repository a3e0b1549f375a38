//! Draw certified pairs on the integer lattice and compare drawings up to
//! lattice isometry.
//!
//! ```bash
//! cargo run --example lattice_realizations
//! ```

use equable::lattice::{realization_classes, realize, LatticeParallelogram, LatticePoint};
use equable::lep::lep_check;
use equable::Nat;

fn quad(coords: [(i64, i64); 4]) -> LatticeParallelogram {
    LatticeParallelogram::new(coords.map(|(x, y)| LatticePoint::new(x, y)))
}

fn main() {
    for (a, b) in [(3u32, 6u32), (5, 5), (5, 10), (3, 15)] {
        let p = lep_check(&Nat::from(a), &Nat::from(b)).unwrap();
        let drawing = realize(&p);
        println!("{p} drawn as {drawing}");
        assert_eq!(drawing.verify().unwrap(), p);
    }

    // Two classically known drawings of (5, 10) that no lattice isometry
    // maps onto each other.
    let first = quad([(0, 0), (6, 8), (6, 13), (0, 5)]);
    let second = quad([(0, 0), (10, 0), (14, 3), (4, 3)]);
    println!("\nboth {first} and {second} verify as (5, 10):");
    println!("  {:?} and {:?}", first.verify().unwrap().to_string(), second.verify().unwrap().to_string());
    println!("  canonical forms {} vs {}", first.canonical_form(), second.canonical_form());
    assert_ne!(first.canonical_form(), second.canonical_form());

    let p = lep_check(&Nat::from(5u32), &Nat::from(10u32)).unwrap();
    let classes = realization_classes(&p);
    println!("\n(5, 10) has {} drawing classes:", classes.len());
    for class in classes {
        println!("  {class}");
    }
}
