//! Build the transfer matrix of an expansion and peel it back into factors.

use hyperfrac::polyring::int;
use hyperfrac::{
    build_transfer_matrix, convergents, expansion_to_triple, factorize_transfer_matrix,
    AlphaSequence, Expansion,
};

fn main() {
    let alpha = AlphaSequence::from_ints(&[1, 3, 4]).unwrap();
    let e = Expansion::new(int(1), vec![int(-3), int(1), int(3)], alpha.clone()).unwrap();

    for c in convergents(&e) {
        println!("P_{} = {:<24} Q_{} = {}", c.index, c.p.to_string(), c.index, c.q);
    }

    let (triple, t) = expansion_to_triple(&e).unwrap();
    let tm = build_transfer_matrix(&triple, &t, &alpha).unwrap();
    let m = tm.matrix();
    println!("M = [[{}, {}], [{}, {}]]", m.entries[0][0], m.entries[0][1], m.entries[1][0], m.entries[1][1]);
    println!("det M = {}", m.det());
    println!("factorized: {}", factorize_transfer_matrix(&tm, &alpha).unwrap());
}
