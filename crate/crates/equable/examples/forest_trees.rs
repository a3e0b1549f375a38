//! Walk the three solution trees and show how the four pair maps
//! navigate them.
//!
//! Every certified pair sits in exactly one tree, rooted at (3, 6), (4, 4),
//! or (5, 5). The maps phi1/psi1/psi2 step away from the root and phi2 steps
//! back towards it.
//!
//! ```bash
//! cargo run --example forest_trees
//! ```

use equable::forest::{enumerate_all, enumerate_tree, phi1, phi2, psi1, psi2};
use equable::{GcdClass, Nat};

fn main() {
    let bound = Nat::from(2_000u32);
    for class in [GcdClass::G3, GcdClass::G4, GcdClass::G5] {
        let tree = enumerate_tree(class, &bound);
        println!("gcd-{class} tree, side sums up to {bound}:");
        for node in &tree.nodes {
            match (node.parent, node.edge_from_parent) {
                (Some(parent), Some(edge)) => {
                    println!("  {} --{}--> {}", tree.nodes[parent].pair, edge.name(), node.pair)
                }
                _ => println!("  root {}", node.pair),
            }
        }
    }

    let root = equable::lep::lep_check(&Nat::from(5u32), &Nat::from(5u32)).unwrap();
    let up = phi1(&root);
    let side = psi1(&up);
    println!("\nphi1{root} = {up}, psi1{up} = {side}");
    println!("phi2 undoes both: phi2{up} = {:?}, phi2{side} = {:?}",
        phi2(&up).unwrap().to_string(),
        phi2(&side).unwrap().to_string());
    println!("psi2{up} = {:?}", psi2(&up).map(|p| p.to_string()));

    let all = enumerate_all(&Nat::from(200u32));
    println!("\nall certified pairs with a + b <= 200:");
    for p in all {
        print!("  {p}");
    }
    println!();
}
