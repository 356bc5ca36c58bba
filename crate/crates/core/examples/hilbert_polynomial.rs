//! Hilbert polynomial from the staircase, next to the brute-force Hilbert
//! function.
//!
//! Run with `cargo run --example hilbert_polynomial`.

use affine_cm::{class_staircase, hilbert_data, subgroup, Oracle, RingSpec};

fn main() -> affine_cm::Result<()> {
    let ring = RingSpec::new(2, 3, [(1, 4), (5, 2)])?;
    let hd = hilbert_data(&ring)?;
    println!("{ring}: e = {}, C = {}, N = {}", hd.multiplicity, hd.constant_c, hd.stabilization_n);

    // per-class contributions
    for class in subgroup(&ring).iter() {
        let st = class_staircase(&ring, class)?;
        println!(
            "  class ({}, {}): alpha_pq = x^{}y^{}, s = {}, t = {}, u = {}, u' = {}",
            class.p, class.q, st.alpha_pq.alpha, st.alpha_pq.beta, st.s, st.t, st.u, st.u_prime
        );
    }

    let oracle = Oracle::new(&ring)?;
    let hi = hd.stabilization_n + 3;
    let hf = oracle.hilbert_function_range(0, hi)?;
    println!(" n  HF(n)  P(n)");
    for (n, v) in (0..=hi).zip(hf) {
        println!("{n:>2} {v:>6} {:>5}", hd.polynomial(n));
    }
    Ok(())
}
