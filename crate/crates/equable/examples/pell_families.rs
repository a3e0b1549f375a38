//! The five Pell families behind pairs with a lattice altitude foot.
//!
//! A certified pair (a, b) admits a lattice point at the foot of an altitude
//! exactly when a divides 2b; this forces a into {3, 4, 5, 6, 10} and the
//! admissible b for each such a are parametrised by a Pell-type equation
//! c y^2 - (c + 4) x^2 = d.
//!
//! ```bash
//! cargo run --example pell_families
//! ```

use equable::pell::{pell_family, pythagorean_short_sides, Family};

fn main() {
    let sides: Vec<String> = pythagorean_short_sides()
        .iter()
        .map(|a| a.to_string())
        .collect();
    println!("short sides with altitude feet on the lattice: {}\n", sides.join(", "));

    for label in Family::all() {
        let fam = pell_family(label);
        let (c, d) = fam.equation();
        println!("{label}: {c} y^2 - {} x^2 = {d}, fixed a = {}", c + 4, fam.a_side());
        let solutions: Vec<String> = fam.solutions(5).iter().map(|s| s.to_string()).collect();
        println!("  solutions  {}", solutions.join(", "));
        let bs: Vec<String> = fam.b_values(5).iter().map(|b| b.to_string()).collect();
        println!("  b values   {}", bs.join(", "));
    }
}
