//! Walk one expansion around its orbit under σ_k and επ.

use hyperfrac::polyring::int;
use hyperfrac::{apply_word, orbit, AlphaSequence, Expansion, GroupWord};

fn main() {
    let alpha = AlphaSequence::from_ints(&[1, 3, 4]).unwrap();
    let e = Expansion::new(int(1), vec![int(-3), int(1), int(3)], alpha).unwrap();

    let word: GroupWord = ["sigma:1", "epspi", "sigma:2"].iter().map(|s| s.parse().unwrap()).collect();
    println!("{e} · {:?} = {}", word.letters(), apply_word(&e, &word).unwrap());

    let o = orbit(&e, false).unwrap();
    println!("orbit of size {} (complete: {})", o.len(), o.is_complete());
    for x in &o.expansions {
        println!("  {x}");
    }
}
