//! Acceptance suite. Runs every criterion, prints one line each, and exits
//! non-zero if any criterion fails other than the known-red ones listed in
//! `KNOWN_RED`, whose failure mode is itself checked.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use affine_cm::curve::{cm_special_cases, curve_basis_from, curve_constants, is_cm_curve};
use affine_cm::fourgen::{basis_algorithm, fourgen_constants, is_cm_fourgen, length_bound_check};
use affine_cm::hilbert::{construct_ring, hilbert_data, hilbert_data_from, is_cm_from};
use affine_cm::oracle::{fourgen_constants_bruteforce, Oracle};
use affine_cm::{determinant_identities, subgroup, ClassGroup, ClassVec, CurveSpec, ExpVec, FourGenInput, RingSpec};

/// Criterion 8 asks for every `(C, m)` with `C, m <= 4`, but the stabilization
/// index of any ring is 0 when its constant is 0 and at most `C - 1`
/// otherwise. 14 of the 25 pairs cannot be realized by any ring.
const KNOWN_RED: &[u32] = &[8];

struct Outcome {
    passed: bool,
    detail: String,
}

type Pair = ((u64, u64), (u64, u64));
type Quick = (u32, &'static str, fn() -> Outcome);

fn check(cond: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed: cond,
        detail: detail.into(),
    }
}

fn ring(a: u64, b: u64, gens: &[(u64, u64)]) -> RingSpec {
    RingSpec::new(a, b, gens.iter().copied()).expect("valid ring")
}

fn exps(v: &[(u64, u64)]) -> Vec<ExpVec> {
    let mut out: Vec<ExpVec> = v.iter().map(|&p| p.into()).collect();
    out.sort();
    out
}

fn criterion_1() -> Outcome {
    let spec = ring(4, 4, &[(3, 1), (1, 3)]);
    let report = affine_cm::cli::analyze(&spec, false, false, affine_cm::oracle::DEFAULT_BUDGET).unwrap();
    check(
        report.length == 5 && report.multiplicity == 4 && !report.is_cm && report.disagreement.is_none(),
        format!("length {} multiplicity {} cm {}", report.length, report.multiplicity, report.is_cm),
    )
}

fn criterion_2() -> Outcome {
    let spec = ring(2, 3, &[(11, 1), (1, 11)]);
    let consts = fourgen_constants(&FourGenInput::from_spec(&spec).unwrap()).unwrap();
    let res = basis_algorithm(&consts).unwrap();
    let want = exps(&[
        (0, 0), (11, 1), (22, 2), (33, 3), (44, 4), (55, 5),
        (1, 11), (2, 22), (3, 33), (4, 44), (5, 55),
    ]);
    check(res.monomials == want, format!("{} monomials", res.len()))
}

fn criterion_3() -> Outcome {
    let spec = ring(2, 3, &[(7, 1), (1, 7)]);
    let consts = fourgen_constants(&FourGenInput::from_spec(&spec).unwrap()).unwrap();
    let res = basis_algorithm(&consts).unwrap();
    let mut want = Vec::new();
    for u in 0..6u64 {
        for v in 0..6 - u {
            want.push((7 * u + v, u + 7 * v));
        }
    }
    let attained = length_bound_check(&consts, &res).unwrap();
    let h = consts.group_order();
    check(
        res.monomials == exps(&want) && attained && res.len() as u64 == h * (h + 1) / 2,
        format!("{} monomials, |H| = {h}, bound attained {attained}", res.len()),
    )
}

fn criterion_4() -> Outcome {
    let consts = curve_constants(&CurveSpec::new(23, 2, 18).unwrap()).unwrap();
    let res = curve_basis_from(&consts).unwrap();
    let sizes: Vec<u64> = res.trace.iter().map(|r| r.size).collect();
    let bases: Vec<u64> = res.trace.iter().map(|r| r.base).collect();
    let mut ys: Vec<u64> = res.monomials.iter().map(|v| v.beta).collect();
    ys.sort();
    let mut want: Vec<u64> = (0..=34).step_by(2).collect();
    want.extend((36..=44).step_by(2));
    want.extend((54..=62).step_by(2));
    want.extend((72..=80).step_by(2));
    want.extend((90..=216).step_by(18));
    check(
        sizes == [23, 34, 36, 39, 41] && bases == [5, 1, 1, 1, 1] && ys == want,
        format!("|B| {sizes:?}, base {bases:?}, {} y-degrees", ys.len()),
    )
}

fn criterion_5() -> Outcome {
    let c = curve_constants(&CurveSpec::new(23, 2, 18).unwrap()).unwrap();
    let j = (c.joint.a, c.joint.b, c.joint.c);
    let f = (c.f_relation.a, c.f_relation.b, c.f_relation.c);
    check(
        j == (5, 2, 2) && f == (4, 3, 2) && !is_cm_curve(&c),
        format!("(a1,b1,c1) = {j:?}, (a2,b2,c2) = {f:?}, cm {}", is_cm_curve(&c)),
    )
}

fn gen_pool(max: u64) -> Vec<(u64, u64)> {
    let mut v = Vec::new();
    for p in 0..=max {
        for q in 0..=max {
            if (p, q) != (0, 0) {
                v.push((p, q));
            }
        }
    }
    v
}

fn criterion_6() -> Outcome {
    let pool = gen_pool(12);
    let mut specs = 0u64;
    let mut failures = Vec::new();
    let mut sharp = 0u64;
    for a in 1..=4 {
        for b in 1..=4 {
            let mut gen_sets: Vec<Vec<(u64, u64)>> = vec![vec![]];
            for (i, &g) in pool.iter().enumerate() {
                gen_sets.push(vec![g]);
                for &h in &pool[i + 1..] {
                    gen_sets.push(vec![g, h]);
                }
            }
            for gens in gen_sets {
                let spec = ring(a, b, &gens);
                let oracle = Oracle::new(&spec).unwrap();
                let hd = hilbert_data_from(&spec, oracle.corners()).unwrap();
                let n0 = hd.stabilization_n;
                let lo = n0.saturating_sub(1);
                let hf = oracle.hilbert_function_range(lo, n0 + 3).unwrap();
                let ok = (lo..=n0 + 3).zip(&hf).all(|(n, &v)| (v == hd.polynomial(n)) == (n >= n0));
                if n0 >= 1 {
                    sharp += 1;
                }
                if !ok {
                    failures.push(format!("{spec}: {hf:?} vs {hd:?}"));
                }
                specs += 1;
            }
        }
    }
    check(
        failures.is_empty(),
        format!("{specs} rings, {sharp} with N >= 1{}", fmt_failures(&failures)),
    )
}

fn fmt_failures(f: &[String]) -> String {
    if f.is_empty() {
        String::new()
    } else {
        let shown: Vec<&str> = f.iter().take(5).map(String::as_str).collect();
        format!("; first failures: {}", shown.join(" | "))
    }
}

/// Results of the shared sweep over curves with `n <= 30` and four-generator
/// rings with `d, n <= 6`, exponents `<= 12`.
#[derive(Default)]
struct Sweep {
    curves: u64,
    fourgen: u64,
    cm_disagreements: Vec<String>,
    basis_mismatches: Vec<String>,
    iteration_violations: Vec<String>,
    constant_mismatches: Vec<String>,
    elapsed: Duration,
}

fn push(v: &mut Vec<String>, s: impl FnOnce() -> String) {
    v.push(s());
}

fn sweep() -> Sweep {
    let start = Instant::now();
    let mut sw = Sweep::default();

    for n in 3..=30u64 {
        for l in 1..n {
            for m in l + 1..n {
                let cs = CurveSpec::new(n, l, m).unwrap();
                let consts = curve_constants(&cs).unwrap();
                let four = consts.to_fourgen();
                let spec = four.input.spec().unwrap();
                let oracle = Oracle::new(&spec).unwrap();
                let gsw = oracle.gsw_cm_check().unwrap().cohen_macaulay;
                let unique = is_cm_from(oracle.corners());
                let fast = is_cm_curve(&consts);
                if fast != unique || fast != gsw || fast != is_cm_fourgen(&four) {
                    push(&mut sw.cm_disagreements, || format!("curve {cs:?}"));
                }
                if fourgen_constants(&four.input).unwrap() != four {
                    push(&mut sw.constant_mismatches, || format!("curve {cs:?}"));
                }
                let res = curve_basis_from(&consts).unwrap();
                if res.monomials != oracle.corners().corners {
                    push(&mut sw.basis_mismatches, || format!("curve {cs:?}"));
                }
                let a3 = consts.e_relation.a;
                if res.iterations() as u64 > a3 || a3 > four.group_order() {
                    push(&mut sw.iteration_violations, || format!("curve {cs:?}"));
                }
                sw.curves += 1;
            }
        }
    }

    let pool = gen_pool(12);
    for d in 1..=6u64 {
        for nn in 1..=6u64 {
            for (i, &e) in pool.iter().enumerate() {
                for &f in &pool[i..] {
                    // the ring does not depend on the order of the middle generators
                    let spec = ring(d, nn, &[e, f]);
                    let oracle = Oracle::new(&spec).unwrap();
                    let gsw = oracle.gsw_cm_check().unwrap().cohen_macaulay;
                    let unique = is_cm_from(oracle.corners());
                    let orders: &[Pair] = if e == f { &[(e, f)] } else { &[(e, f), (f, e)] };
                    for &(x, y) in orders {
                        let input = FourGenInput::new(d, nn, x, y).unwrap();
                        let consts = fourgen_constants(&input).unwrap();
                        let label = || format!("d={d} n={nn} {x:?} {y:?}");
                        if fourgen_constants_bruteforce(&input).unwrap() != consts || consts.check().is_err() {
                            push(&mut sw.constant_mismatches, label);
                        }
                        let cm = is_cm_fourgen(&consts);
                        if cm != unique || cm != gsw {
                            push(&mut sw.cm_disagreements, label);
                        }
                        let h = subgroup(&spec).len() as i128;
                        let res = basis_algorithm(&consts).unwrap();
                        if res.monomials != oracle.corners().corners {
                            push(&mut sw.basis_mismatches, label);
                        }
                        let a3 = consts.e_relation.a;
                        if res.iterations() as u64 > a3 || a3 as i128 > h {
                            push(&mut sw.iteration_violations, label);
                        }
                        sw.fourgen += 1;
                    }
                }
            }
        }
    }
    sw.elapsed = start.elapsed();
    sw
}

fn criterion_7(sw: &Sweep) -> Outcome {
    check(
        sw.cm_disagreements.is_empty(),
        format!(
            "{} curves, {} four-generator rings, {} disagreements{}",
            sw.curves,
            sw.fourgen,
            sw.cm_disagreements.len(),
            fmt_failures(&sw.cm_disagreements)
        ),
    )
}

fn criterion_8() -> Outcome {
    let mut feasible = 0;
    let mut roundtrips = 0;
    let mut unattainable = Vec::new();
    let mut wrong = Vec::new();
    for a in 2..=4u64 {
        for b in 2..=4u64 {
            // one representative generator per distinct cyclic subgroup
            let mut seen = BTreeSet::new();
            for p in 0..a {
                for q in 0..b {
                    let g = ClassVec { p, q };
                    let group = ClassGroup::generated_by((a, b), [g]);
                    if group.is_trivial() || !seen.insert(group.iter().collect::<Vec<_>>()) {
                        continue;
                    }
                    for c in 0..=4u64 {
                        for m in 0..=4u64 {
                            match construct_ring((a, b), &[g], c, m) {
                                Ok(spec) => {
                                    feasible += 1;
                                    let got = hilbert_data(&spec).unwrap().triple();
                                    if got == (group.len() as u64, c, m) {
                                        roundtrips += 1;
                                    } else {
                                        push(&mut wrong, || format!("{a},{b} {g} C={c} m={m}: {got:?}"));
                                    }
                                }
                                Err(affine_cm::Error::UnattainableHilbertData { .. }) => {
                                    unattainable.push((c, m))
                                }
                                Err(e) => push(&mut wrong, || format!("{a},{b} {g} C={c} m={m}: {e}")),
                            }
                        }
                    }
                }
            }
        }
    }
    let pairs: BTreeSet<(u64, u64)> = unattainable.iter().copied().collect();
    let proven = pairs.iter().all(|&(c, m)| (c == 0 && m > 0) || (c > 0 && m >= c));
    let detail = format!(
        "{roundtrips}/{feasible} attainable cases round-trip; {} cases with {} distinct (C,m) pairs \
         unattainable (stabilization index must be 0 for C=0 and < C otherwise){}",
        unattainable.len(),
        pairs.len(),
        fmt_failures(&wrong)
    );
    Outcome {
        passed: unattainable.is_empty() && wrong.is_empty(),
        detail: if wrong.is_empty() && proven && pairs.len() == 14 {
            detail
        } else {
            format!("UNEXPECTED: {detail}")
        },
    }
}

/// The known-red analysis of criterion 8 must itself hold: every failing
/// pair is one of the 14 impossible ones and every other pair round-trips.
fn criterion_8_analysis_holds(o: &Outcome) -> bool {
    !o.detail.starts_with("UNEXPECTED")
}

fn criterion_9() -> Outcome {
    let mut violations = Vec::new();
    let mut disagreements = Vec::new();
    let (mut curves, mut rings, mut closed_forms) = (0u64, 0u64, 0u64);
    for n in 3..=30u64 {
        for l in 1..n {
            for m in l + 1..n {
                let cs = CurveSpec::new(n, l, m).unwrap();
                let consts = curve_constants(&cs).unwrap();
                let dets_ok = determinant_identities(&consts).is_ok()
                    && consts.to_fourgen().determinants() == [(n / consts.d) as i128; 3];
                if !dets_ok {
                    push(&mut violations, || format!("curve {cs:?}"));
                }
                if let Some(sc) = cm_special_cases(&cs) {
                    closed_forms += 1;
                    if sc != is_cm_curve(&consts) {
                        push(&mut disagreements, || format!("curve {cs:?}"));
                    }
                }
                curves += 1;
            }
        }
    }
    let pool = gen_pool(12);
    for d in 1..=6u64 {
        for nn in 1..=6u64 {
            for &e in &pool {
                for &f in &pool {
                    let input = FourGenInput::new(d, nn, e, f).unwrap();
                    let consts = fourgen_constants(&input).unwrap();
                    let h = ClassGroup::generated_by((d, nn), [input.e_class(), input.f_class()]).len() as i128;
                    if consts.determinants() != [h; 3] {
                        push(&mut violations, || format!("d={d} n={nn} {e:?} {f:?}"));
                    }
                    rings += 1;
                }
            }
        }
    }
    let c413 = cm_special_cases(&CurveSpec::new(4, 1, 3).unwrap());
    let c523 = cm_special_cases(&CurveSpec::new(5, 2, 3).unwrap());
    check(
        violations.is_empty() && disagreements.is_empty() && c413 == Some(false) && c523 == Some(true),
        format!(
            "{curves} curves and {rings} four-generator rings: {} determinant violations; \
             {closed_forms} closed-form verdicts, {} disagreements{}",
            violations.len(),
            disagreements.len(),
            fmt_failures(&[&violations[..], &disagreements[..]].concat())
        ),
    )
}

fn criterion_10(sw: &Sweep) -> Outcome {
    let all: Vec<String> = [
        &sw.basis_mismatches[..],
        &sw.iteration_violations[..],
        &sw.constant_mismatches[..],
    ]
    .concat();
    check(
        all.is_empty(),
        format!(
            "{} basis mismatches, {} iteration-bound violations, {} constant mismatches{}",
            sw.basis_mismatches.len(),
            sw.iteration_violations.len(),
            sw.constant_mismatches.len(),
            fmt_failures(&all)
        ),
    )
}

fn timed<F: FnOnce() -> Outcome>(f: F) -> (Outcome, Duration) {
    let start = Instant::now();
    let o = f();
    (o, start.elapsed())
}

fn main() -> ExitCode {
    // libtest-style arguments (filters, --nocapture) are accepted and ignored
    let secs = Duration::from_secs_f64;
    let mut results: Vec<(u32, &str, Outcome, Duration, Duration)> = Vec::new();

    let quick: [Quick; 5] = [
        (1, "Macaulay example", criterion_1),
        (2, "eleven-element basis", criterion_2),
        (3, "triangular basis attains the bound", criterion_3),
        (4, "curve 23/2/18 trace", criterion_4),
        (5, "curve 23/2/18 constants", criterion_5),
    ];
    for (id, name, f) in quick {
        let (o, t) = timed(f);
        results.push((id, name, o, t, secs(0.1)));
    }
    let (o, t) = timed(criterion_6);
    results.push((6, "Hilbert function stabilizes exactly at N", o, t, secs(120.0)));

    let sw = sweep();
    results.push((7, "CM criteria agree", criterion_7(&sw), sw.elapsed, secs(120.0)));
    let (o, t) = timed(criterion_8);
    results.push((8, "constructor round-trip", o, t, secs(60.0)));
    let (o, t) = timed(criterion_9);
    results.push((9, "determinant identities and closed forms", o, t, secs(30.0)));
    results.push((10, "basis equals corners", criterion_10(&sw), sw.elapsed, secs(120.0)));

    let mut unexpected = 0;
    for (id, name, o, t, limit) in &results {
        let in_time = t <= limit;
        let ok = o.passed && in_time;
        let tag = match (ok, KNOWN_RED.contains(id)) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
        };
        println!(
            "{tag:<12} criterion {id:>2}: {name} [{:.3} s, limit {:.1} s] {}",
            t.as_secs_f64(),
            limit.as_secs_f64(),
            o.detail
        );
        let analysed = *id == 8 && criterion_8_analysis_holds(o) && in_time;
        if !ok && !(KNOWN_RED.contains(id) && analysed) {
            unexpected += 1;
        }
    }
    println!("note: criteria 7 and 10 share one sweep; the time shown for both is the whole sweep");
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} unexpected failure(s)");
        ExitCode::FAILURE
    }
}
