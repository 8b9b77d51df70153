//! Check A φ² + 2B φ + C ≈ 0 numerically on both branches.

use hyperfrac::datasets;
use hyperfrac::polyring::frac;
use hyperfrac::{numeric_residual, verify_expansion, Branch};

fn main() {
    let d = datasets::sect4();
    for lambda in [frac(0, 1), frac(2, 1), frac(-7, 3), frac(10, 1)] {
        for branch in [Branch::Plus, Branch::Minus] {
            let r = numeric_residual(&d.triple, &lambda, branch).unwrap();
            println!("λ = {lambda:>5}, {branch:?}: {r:.3e}");
        }
    }
    let report = verify_expansion(&d.expansions[0], &d.triple);
    for c in &report.checks {
        println!("{:<22} {} {}", c.name, if c.pass { "ok" } else { "FAILED" }, c.detail);
    }
}
