//! The classic non-Cohen-Macaulay ring `k[x^4, x^3y, xy^3, y^4]`.
//!
//! Run with `cargo run --example macaulay`.

use affine_cm::{hilbert_data, is_cm_general, oracle, RingSpec};

fn main() -> affine_cm::Result<()> {
    let ring = RingSpec::new(4, 4, [(3, 1), (1, 3)])?;
    let hd = hilbert_data(&ring)?;
    let length = oracle::length_mod_parameters(&ring)?;

    println!("ring: {ring}");
    println!("multiplicity e = {}", hd.multiplicity);
    println!("length of R/(x^4, y^4) = {length}");
    println!("Hilbert polynomial: {}(n+1) + {}", hd.multiplicity, hd.constant_c);
    println!("agrees with the Hilbert function from n = {}", hd.stabilization_n);
    println!("Cohen-Macaulay: {}", is_cm_general(&ring)?);

    for c in oracle::corners(&ring)?.corners {
        println!("  corner x^{}y^{}", c.alpha, c.beta);
    }
    Ok(())
}
