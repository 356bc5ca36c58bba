//! Monomial basis of `R/(x^d, y^n)` for a four-generator ring, with the
//! step-by-step trace.
//!
//! Run with `cargo run --example fourgen_basis`.

use affine_cm::{
    basis_algorithm, fourgen_constants, is_cm_fourgen, length_bound_check, oracle, FourGenInput,
};

fn main() -> affine_cm::Result<()> {
    let input = FourGenInput::new(2, 3, (7, 1), (1, 7))?;
    let consts = fourgen_constants(&input)?;
    consts.check()?;
    println!("ring: {}", input.spec()?);
    println!("joint      {:?}", consts.joint);
    println!("f-relation {:?}", consts.f_relation);
    println!("e-relation {:?}", consts.e_relation);
    println!("|H| = {}, CM: {}", consts.group_order(), is_cm_fourgen(&consts));

    let basis = basis_algorithm(&consts)?;
    println!("step  base  a*  b*   g*   h*  added  size");
    for r in &basis.trace {
        println!(
            "{:>4} {:>5} {:>3} {:>3} {:>4} {:>4} {:>6} {:>5}",
            r.step.number(), r.base, r.a_star, r.b_star, r.g_star, r.h_star, r.added, r.size
        );
    }
    println!("basis size {} (upper bound attained: {})", basis.len(), length_bound_check(&consts, &basis)?);

    let corners = oracle::corners(&input.spec()?)?;
    assert_eq!(corners.corners, basis.monomials);
    println!("matches the brute-force corner set");
    Ok(())
}
