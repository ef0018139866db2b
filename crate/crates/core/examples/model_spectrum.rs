//! Assemble one model: the exact potential split, the gapped spectrum with
//! its ladder constants and relative norms, and the zero-mode polynomials.
//!
//! Run with: cargo run --example model_spectrum -- 2 1
//! (defaults to p = 2, q = 1)

use painleve_hermite::model::{potential, spectrum, zero_mode_polys, ModelParams};

fn main() {
    let args: Vec<u32> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (p, q) = match args.as_slice() {
        [p, q, ..] => (*p, *q),
        _ => (2, 1),
    };
    let m = ModelParams::new(p, q);

    let v = potential(&m);
    println!("model (p,q) = ({p},{q})");
    println!(
        "V(x) = x^2 + {} + R(x),   R = ({}) / ({})",
        v.quadratic_shift,
        v.rational_part.num(),
        v.rational_part.den()
    );
    println!(
        "gap between the ladders: {} (finite top {} -> infinite foot {})\n",
        m.gap_width(),
        m.eps2(),
        m.eps1() + 2
    );

    println!("seq  n   E     C^2_n           N^2_n / N^2_0");
    for s in spectrum(&m, 4) {
        println!(
            "  {}  {}  {:>3}   {:>12}   {}",
            s.seq.index(),
            s.n,
            s.energy,
            s.csq,
            s.rel_norm_sq
        );
    }

    let zm = zero_mode_polys(&m);
    println!("\nzero-mode polynomials (times the weight exp(-x^2/2)/H_{{p+1,2q}}):");
    println!("  ground (E = 0):            {}", *zm.ground);
    println!("  finite top (E = {}):        {}", m.eps2(), *zm.finite_top);
    println!(
        "  infinite anchor (E = {}):  {}",
        m.eps1() + 2,
        *zm.infinite_anchor
    );
}
