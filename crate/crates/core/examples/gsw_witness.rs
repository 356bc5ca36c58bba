//! Brute-force CM test: a monomial `v` outside `S` with `v + (a,0)` and
//! `v + (0,b)` both in `S` shows the ring is not Cohen-Macaulay.
//!
//! Run with `cargo run --example gsw_witness`.

use affine_cm::{hilbert_data, Oracle, RingSpec};

fn main() -> affine_cm::Result<()> {
    let rings = [
        RingSpec::new(4, 4, [(3, 1), (1, 3)])?,
        RingSpec::new(4, 4, [(3, 1), (1, 3), (2, 2)])?,
        RingSpec::new(5, 7, [(2, 3), (9, 1), (1, 12)])?,
    ];
    for ring in &rings {
        let oracle = Oracle::new(ring)?;
        let verdict = oracle.gsw_cm_check()?;
        let hd = hilbert_data(ring)?;
        match verdict.witness {
            Some(w) => println!("{ring}: not CM, witness x^{}y^{}", w.alpha, w.beta),
            None => println!("{ring}: CM"),
        }
        // CM exactly when the length equals the multiplicity
        assert_eq!(verdict.cohen_macaulay, oracle.length() as u64 == hd.multiplicity);
    }
    Ok(())
}
