//! Build a ring with prescribed class group, Hilbert constant and
//! stabilization index, then read the data back.
//!
//! Run with `cargo run --example construct_ring`.

use affine_cm::{construct_ring, hilbert_data, ClassVec, Error};

fn main() -> affine_cm::Result<()> {
    let modulus = (3, 4);
    let gens = [ClassVec::new(1, 2, modulus)];
    for (c, m) in [(0, 0), (1, 0), (3, 1), (4, 2), (2, 2)] {
        match construct_ring(modulus, &gens, c, m) {
            Ok(ring) => {
                let hd = hilbert_data(&ring)?;
                println!(
                    "C = {c}, N = {m}: {} generators, read back (e, C, N) = {:?}",
                    ring.gens().len(),
                    hd.triple()
                );
            }
            Err(Error::UnattainableHilbertData { .. }) => {
                println!("C = {c}, N = {m}: no ring has this data");
            }
            Err(e) => return Err(e),
        }
    }
    Ok(())
}
