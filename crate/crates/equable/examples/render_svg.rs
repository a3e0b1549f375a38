//! Write an SVG figure of a certified pair.
//!
//! ```bash
//! cargo run --example render_svg -- 5 10 figure.svg
//! ```
//!
//! With no arguments, draws (5, 10) into `equable_5_10.svg`.

use equable::cli::render_svg;
use equable::lattice::realize;
use equable::lep::lep_check;
use equable::Nat;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (a, b, path) = match args.as_slice() {
        [a, b, path] => (a.parse().unwrap(), b.parse().unwrap(), path.clone()),
        [] => (Nat::from(5u32), Nat::from(10u32), "equable_5_10.svg".into()),
        _ => {
            eprintln!("usage: render_svg [A B FILE.svg]");
            std::process::exit(2);
        }
    };
    let Some(p) = lep_check(&a, &b) else {
        eprintln!("({a}, {b}) is not a lattice equable parallelogram");
        std::process::exit(1);
    };
    let svg = render_svg(&p, &realize(&p));
    std::fs::write(&path, svg).unwrap();
    println!("wrote {path}: {p}, area {}", p.area());
}
