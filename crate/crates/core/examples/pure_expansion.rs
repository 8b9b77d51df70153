//! Pure expansions, where b_N = b₀, and their smaller orbit.

use hyperfrac::datasets;
use hyperfrac::{orbit, pure_expand};

fn main() {
    let d = datasets::pure_n3();
    let e = pure_expand(&d.triple, &d.alpha).unwrap();
    println!("{e}");
    for x in &orbit(&e, true).unwrap().expansions {
        println!("  {x}");
    }

    let sect4 = datasets::sect4();
    match pure_expand(&sect4.triple, &sect4.alpha) {
        Ok(e) => println!("unexpected: {e}"),
        Err(err) => println!("sect4 has no pure expansion: {err}"),
    }
}
