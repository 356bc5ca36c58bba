//! Projective monomial curves `(s^n, s^(n-l) t^l, s^(n-m) t^m, t^n)`.
//!
//! Run with `cargo run --example curve_p3 -- 23 2 18`.

use affine_cm::{
    cm_special_cases, curve::curve_basis_from, curve_constants, determinant_identities, is_cm_curve,
    CurveSpec,
};

fn main() -> affine_cm::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let (n, l, m) = match args[..] {
        [n, l, m] => (n, l, m),
        _ => (23, 2, 18),
    };
    let spec = CurveSpec::new(n, l, m)?;
    let consts = curve_constants(&spec)?;
    let dets = determinant_identities(&consts)?;
    println!("curve n = {n}, l = {l}, m = {m}, gcd = {}", consts.d);
    println!("joint {:?}\nf     {:?}\ne     {:?}", consts.joint, consts.f_relation, consts.e_relation);
    println!("2x2 minors: n {:?}, m {:?}, l {:?}", dets.n, dets.m, dets.l);
    println!("CM: {} (closed form: {:?})", is_cm_curve(&consts), cm_special_cases(&spec));

    let basis = curve_basis_from(&consts)?;
    println!("step  a*  b*   g*   c*  added  size");
    for r in &basis.trace {
        println!(
            "{:>4} {:>3} {:>3} {:>4} {:>4} {:>6} {:>5}",
            r.step.number(), r.a_star, r.b_star, r.g_star, r.c_star.unwrap_or(0), r.added, r.size
        );
    }
    println!("basis of size {} over |H| = {}", basis.len(), consts.group_order());
    Ok(())
}
