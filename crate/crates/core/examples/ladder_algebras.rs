//! Deform the third-order ladder operators into su(2) and su(1,1) triples
//! and verify the commutation relations and Casimir constancy exactly.
//!
//! Run with: cargo run --example ladder_algebras

use painleve_hermite::algebra::{check_su11, check_su2, solve_fg};
use painleve_hermite::model::ModelParams;

fn main() {
    for (p, q) in [(2u32, 1u32), (3, 2), (4, 1)] {
        let m = ModelParams::new(p, q);
        let (f, g) = solve_fg(&m).unwrap();
        println!("(p,q) = ({p},{q})");
        println!(
            "  deformation shifts: a0 = {}, a1 = {};  b0 = {}, b1 = {}",
            f.shift, f.shift_const, g.shift, g.shift_const
        );
        let su2 = check_su2(&m).unwrap();
        println!(
            "  su(2) on the {}-dim multiplet: {} (Casimir {})",
            p + 1,
            if su2.pass() {
                "closes exactly"
            } else {
                "FAILS"
            },
            su2.casimir().unwrap()
        );
        let su11 = check_su11(&m, 10).unwrap();
        println!(
            "  su(1,1) on a dim-10 truncation, {} interior rows: {} (Casimir {})",
            su11.rows_checked,
            if su11.pass() {
                "closes exactly"
            } else {
                "FAILS"
            },
            su11.casimir().unwrap()
        );
        assert!(su2.pass() && su11.pass());
        println!();
    }
    println!("all commutators, ladder relations and Casimirs exact over the rationals");
}
