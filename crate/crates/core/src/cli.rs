//! Command-line front end. The binary only parses arguments and calls
//! [`run`]; everything else lives here so it can be tested in-process.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::curve::{batch_classify, curve_basis_from, curve_constants, BatchRow, CurveSpec};
use crate::error::Error;
use crate::fourgen::{
    basis_algorithm, candidate_basis_b0, fourgen_constants, is_cm_fourgen, FourGenInput,
    TraceRecord,
};
use crate::hilbert::{aggregate, is_cm_from, staircases, HilbertData};
use crate::oracle::{fourgen_constants_bruteforce, Oracle, DEFAULT_BUDGET};
use crate::ring::{subgroup, ClassGroup, ClassVec, ExpVec, RawRing, RingSpec};

pub const EXIT_CM: i32 = 0;
pub const EXIT_NOT_CM: i32 = 3;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_BUDGET: i32 = 69;
pub const EXIT_INTERNAL: i32 = 70;
pub const EXIT_IO: i32 = 74;

#[derive(Debug, Parser)]
#[command(name = "affine-cm", version, about = "Cohen-Macaulay tests and Hilbert data for k[x^a, x^p y^q, ..., y^b]")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Emit JSON only.
    #[arg(long, global = true)]
    pub json: bool,

    /// Include the basis algorithm trace.
    #[arg(long, global = true)]
    pub trace: bool,

    /// Cross-check fast paths against brute force.
    #[arg(long, global = true)]
    pub oracle: bool,

    /// Work budget for brute-force searches.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Length, multiplicity, Hilbert polynomial and CM verdict of a ring.
    Analyze {
        /// Ring as JSON {"a":A,"b":B,"gens":[[p,q],...]} or "A,B;p:q,...".
        ring: String,
        /// Draw the corner staircase (text mode only).
        #[arg(long)]
        plot: bool,
    },
    /// Monomial basis of R/(X,Y) for a four-generator ring or a curve.
    Basis {
        ring: Option<String>,
        #[command(flatten)]
        curve: CurveArgs,
        /// Print lattice pairs <a,b> instead of exponents.
        #[arg(long)]
        log: bool,
    },
    /// Build a ring with prescribed Hilbert polynomial and stabilization.
    Construct {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        /// Subgroup generators as JSON, e.g. '[[1,1]]'.
        #[arg(long = "subgroup-gens")]
        subgroup_gens: String,
        #[arg(long)]
        constant: u64,
        #[arg(long)]
        stab: u64,
    },
    /// Classify every curve up to a given n.
    Batch {
        #[arg(long)]
        curves: bool,
        #[arg(long = "max-n")]
        max_n: u64,
        #[arg(long = "oracle-up-to")]
        oracle_up_to: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare every fast path with brute force on one ring.
    Verify {
        ring: String,
        /// Inclusive range, e.g. 0..12.
        #[arg(long = "hf-range")]
        hf_range: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, Args)]
pub struct CurveArgs {
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long)]
    pub l: Option<u64>,
    #[arg(long)]
    pub m: Option<u64>,
}

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn new(code: i32, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded { .. } => EXIT_BUDGET,
            Error::NotFourGen { .. } => EXIT_USAGE,
            Error::NonTermination { .. }
            | Error::IdentityViolation(_)
            | Error::BoundViolated { .. }
            | Error::Internal(_) => EXIT_INTERNAL,
            _ => EXIT_DATA,
        };
        CliError::new(code, e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        // a closed pipe downstream is not worth reporting
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return CliError::new(0, "");
        }
        CliError::new(EXIT_IO, e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Accepts JSON or the compact form `A,B;p1:q1,p2:q2`.
pub fn parse_ring(text: &str) -> CliResult<RingSpec> {
    let text = text.trim();
    let raw: RawRing = if text.starts_with('{') {
        serde_json::from_str(text).map_err(|e| CliError::new(EXIT_DATA, format!("bad ring JSON: {e}")))?
    } else {
        parse_compact(text).ok_or_else(|| {
            CliError::new(EXIT_DATA, format!("cannot parse ring {text:?}; expected A,B;p:q,..."))
        })?
    };
    Ok(crate::ring::validate(&raw)?)
}

fn parse_compact(text: &str) -> Option<RawRing> {
    let (head, tail) = text.split_once(';').unwrap_or((text, ""));
    let (a, b) = head.split_once(',')?;
    let gens = tail
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|g| {
            let (p, q) = g.split_once(':')?;
            Some([p.trim().parse().ok()?, q.trim().parse().ok()?])
        })
        .collect::<Option<Vec<[i64; 2]>>>()?;
    Some(RawRing {
        a: a.trim().parse().ok()?,
        b: b.trim().parse().ok()?,
        gens,
    })
}

fn parse_range(text: &str) -> CliResult<(u64, u64)> {
    let bad = || CliError::new(EXIT_USAGE, format!("bad range {text:?}; expected lo..hi"));
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: u64 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> CliResult<()> {
    // Value's map is ordered, which gives sorted keys
    let v = serde_json::to_value(value).map_err(|e| CliError::new(EXIT_INTERNAL, e.to_string()))?;
    let text = serde_json::to_string_pretty(&v).map_err(|e| CliError::new(EXIT_INTERNAL, e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub spec: RingSpec,
    pub subgroup_size: u64,
    pub length: u64,
    pub multiplicity: u64,
    #[serde(rename = "constant_C")]
    pub constant_c: u64,
    #[serde(rename = "stabilization_N")]
    pub stabilization_n: u64,
    pub is_cm: bool,
    /// Verdict of each criterion that was evaluated.
    pub criteria: BTreeMap<String, bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub disagreement: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gsw_witness: Option<ExpVec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<ExpVec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceRecord>>,
    pub oracle_checked: bool,
}

pub fn analyze(spec: &RingSpec, with_oracle: bool, with_trace: bool, budget: u64) -> crate::Result<AnalysisReport> {
    let oracle = Oracle::with_budget(spec, budget)?;
    let group = subgroup(spec);
    let hd = aggregate(group.len() as u64, &staircases(spec, oracle.corners(), &group)?);
    let length = oracle.length() as u64;

    let mut criteria = BTreeMap::new();
    criteria.insert("corner_uniqueness".to_string(), is_cm_from(oracle.corners()));
    criteria.insert("length_equals_multiplicity".to_string(), length == hd.multiplicity);
    let (mut basis, mut trace) = (None, None);
    if spec.gens().len() == 2 {
        let consts = fourgen_constants(&FourGenInput::from_spec(spec)?)?;
        criteria.insert("four_generator".to_string(), is_cm_fourgen(&consts));
        let res = basis_algorithm(&consts)?;
        criteria.insert("basis_length".to_string(), res.len() as u64 == hd.multiplicity);
        basis = Some(res.monomials);
        if with_trace {
            trace = Some(res.trace);
        }
    }
    let mut gsw_witness = None;
    let mut disagreement = None;
    if with_oracle {
        let gsw = oracle.gsw_cm_check()?;
        criteria.insert("gsw".to_string(), gsw.cohen_macaulay);
        gsw_witness = gsw.witness;
        let (lo, hi) = (hd.stabilization_n, hd.stabilization_n + 3);
        let hf = oracle.hilbert_function_range(lo, hi)?;
        if hf.iter().zip(lo..).any(|(&v, n)| v != hd.polynomial(n)) {
            disagreement = Some(format!("Hilbert function {hf:?} differs from P on {lo}..={hi}"));
        }
        if let Some(b) = &basis {
            if *b != oracle.corners().corners {
                disagreement = Some("basis algorithm output differs from the corner set".into());
            }
        }
    }
    let is_cm = criteria["corner_uniqueness"];
    if criteria.values().any(|&v| v != is_cm) {
        disagreement = Some(format!("CM criteria disagree: {criteria:?}"));
    }
    Ok(AnalysisReport {
        spec: spec.clone(),
        subgroup_size: group.len() as u64,
        length,
        multiplicity: hd.multiplicity,
        constant_c: hd.constant_c,
        stabilization_n: hd.stabilization_n,
        is_cm,
        criteria,
        disagreement,
        gsw_witness,
        basis,
        trace,
        oracle_checked: with_oracle,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisReport {
    pub spec: RingSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub curve: Option<CurveSpec>,
    pub size: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub monomials: Option<Vec<ExpVec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice: Option<Vec<(u64, u64)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceRecord>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructReport {
    pub spec: RingSpec,
    pub verification: HilbertData,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// `None` when the check does not apply to this ring.
    pub passed: Option<bool>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub spec: RingSpec,
    pub checks: Vec<Check>,
    pub all_passed: bool,
}

pub fn verify(spec: &RingSpec, hf_range: Option<(u64, u64)>, budget: u64) -> crate::Result<VerifyReport> {
    let oracle = Oracle::with_budget(spec, budget)?;
    let group = subgroup(spec);
    let stairs = staircases(spec, oracle.corners(), &group)?;
    let hd = aggregate(group.len() as u64, &stairs);
    let corners = oracle.corners();
    let mut checks = Vec::new();
    let mut check = |name: &str, passed: Option<bool>, detail: String| {
        checks.push(Check {
            name: name.to_string(),
            passed,
            detail,
        })
    };

    let cm = is_cm_from(corners);
    check(
        "length",
        Some(cm == (corners.len() as u64 == hd.multiplicity)),
        format!("length {} multiplicity {}", corners.len(), hd.multiplicity),
    );

    let (lo, hi) = hf_range.unwrap_or((0, hd.stabilization_n + 3));
    let hf = oracle.hilbert_function_range(lo, hi)?;
    let bad: Vec<u64> = (lo..=hi)
        .zip(&hf)
        .filter(|&(n, &v)| (v == hd.polynomial(n)) != (n >= hd.stabilization_n))
        .map(|(n, _)| n)
        .collect();
    check(
        "hilbert_function",
        Some(bad.is_empty()),
        format!(
            "HF({lo}..={hi}) = {hf:?}, P(n) = {}n + {}, N = {}{}",
            hd.slope,
            hd.intercept,
            hd.stabilization_n,
            if bad.is_empty() { String::new() } else { format!(", wrong at {bad:?}") }
        ),
    );

    let ladder_total: usize = stairs
        .iter()
        .map(|st| {
            1 + st
                .beta_ladder
                .iter()
                .chain(&st.underbeta_ladder)
                .filter(|v| corners.contains(**v))
                .count()
        })
        .sum();
    check(
        "staircase",
        Some(ladder_total == corners.len()),
        format!("classes plus ladder corners {ladder_total}, corners {}", corners.len()),
    );

    let gsw = oracle.gsw_cm_check()?;
    check(
        "gsw",
        Some(gsw.cohen_macaulay == cm),
        match gsw.witness {
            Some(w) => format!("witness {w}, corner verdict {cm}"),
            None => format!("no witness, corner verdict {cm}"),
        },
    );

    if spec.gens().len() == 2 {
        let input = FourGenInput::from_spec(spec)?;
        let fast = fourgen_constants(&input)?;
        let slow = fourgen_constants_bruteforce(&input)?;
        check("constants", Some(fast == slow), format!("{:?}", fast));
        let res = basis_algorithm(&fast)?;
        check(
            "basis",
            Some(res.monomials == corners.corners && is_cm_fourgen(&fast) == cm),
            format!("{} basis elements, {} corners", res.len(), corners.len()),
        );
    } else {
        check("constants", None, "needs exactly two middle generators".into());
        check("basis", None, "needs exactly two middle generators".into());
    }

    let all_passed = checks.iter().all(|c| c.passed != Some(false));
    Ok(VerifyReport {
        spec: spec.clone(),
        checks,
        all_passed,
    })
}

/// ASCII picture of the corners: `o` for the initial candidate block of a
/// four-generator ring, `#` for the remaining corners.
pub fn render_staircase(spec: &RingSpec, corners: &[ExpVec], marked: &[ExpVec]) -> String {
    const MAX_SIDE: u64 = 72;
    let w = corners.iter().map(|c| c.alpha).max().unwrap_or(0);
    let h = corners.iter().map(|c| c.beta).max().unwrap_or(0);
    let mut s = String::new();
    if w >= MAX_SIDE || h >= MAX_SIDE {
        let _ = writeln!(s, "(staircase {}x{} too large to draw)", w + 1, h + 1);
        return s;
    }
    for beta in (0..=h).rev() {
        let _ = write!(s, "{beta:>4} ");
        for alpha in 0..=w {
            let v = ExpVec::new(alpha, beta);
            let ch = if marked.contains(&v) {
                'o'
            } else if corners.contains(&v) {
                '#'
            } else if alpha % spec.a() == 0 && beta % spec.b() == 0 {
                '+'
            } else {
                '.'
            };
            s.push(ch);
        }
        s.push('\n');
    }
    s
}

fn text_analysis(report: &AnalysisReport, plot: Option<String>) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "ring: {}", report.spec);
    let _ = writeln!(s, "subgroup size: {}", report.subgroup_size);
    let _ = writeln!(s, "length: {}", report.length);
    let _ = writeln!(s, "multiplicity: {}", report.multiplicity);
    let _ = writeln!(
        s,
        "hilbert polynomial: P(n) = {}n + {}",
        report.multiplicity,
        report.multiplicity + report.constant_c
    );
    let _ = writeln!(s, "constant C: {}", report.constant_c);
    let _ = writeln!(s, "stabilization N: {}", report.stabilization_n);
    let names: Vec<&str> = report.criteria.keys().map(String::as_str).collect();
    let _ = writeln!(s, "cohen-macaulay: {} ({})", report.is_cm, names.join(", "));
    if let Some(w) = report.gsw_witness {
        let _ = writeln!(s, "gsw witness: {w}");
    }
    if let Some(basis) = &report.basis {
        let items: Vec<String> = basis.iter().map(ToString::to_string).collect();
        let _ = writeln!(s, "basis: {}", items.join(" "));
    }
    if let Some(trace) = &report.trace {
        s.push_str(&text_trace(trace, false));
    }
    if let Some(d) = &report.disagreement {
        let _ = writeln!(s, "DISAGREEMENT: {d}");
    }
    if let Some(p) = plot {
        s.push_str(&p);
    }
    s
}

fn text_trace(trace: &[TraceRecord], curve: bool) -> String {
    let mut s = String::new();
    let third = if curve { "c*" } else { "g*" };
    let _ = writeln!(s, "step base a* b* {third} h* |B|");
    for r in trace {
        let mid = if curve { r.c_star.unwrap_or(0) } else { r.g_star };
        let _ = writeln!(
            s,
            "{} {} {} {} {} {} {}",
            r.step.number(),
            r.base,
            r.a_star,
            r.b_star,
            mid,
            r.h_star,
            r.size
        );
    }
    s
}

/// Runs one command, writing its normal output to `out`. Returns the exit
/// code on success.
pub fn run(cli: &Cli, out: &mut dyn Write) -> CliResult<i32> {
    match &cli.command {
        Command::Analyze { ring, plot } => {
            let spec = parse_ring(ring)?;
            let report = analyze(&spec, cli.oracle, cli.trace, cli.budget)?;
            if cli.json {
                emit_json(out, &report)?;
            } else {
                let picture = plot.then(|| {
                    let corners = crate::oracle::Oracle::with_budget(&spec, cli.budget)
                        .map(|o| o.corners().corners.clone())
                        .unwrap_or_default();
                    let marked = b0_monomials(&spec).unwrap_or_default();
                    render_staircase(&spec, &corners, &marked)
                });
                write!(out, "{}", text_analysis(&report, picture))?;
            }
            if report.disagreement.is_some() {
                return Err(CliError::new(
                    EXIT_INTERNAL,
                    report.disagreement.clone().unwrap_or_default(),
                ));
            }
            Ok(if report.is_cm { EXIT_CM } else { EXIT_NOT_CM })
        }
        Command::Basis { ring, curve, log } => {
            let (spec, curve_spec, res) = match (ring, curve.n, curve.l, curve.m) {
                (None, Some(n), Some(l), Some(m)) => {
                    let cs = CurveSpec::new(n, l, m)?;
                    let consts = curve_constants(&cs)?;
                    let res = curve_basis_from(&consts)?;
                    (cs.fourgen_input().spec()?, Some(cs), res)
                }
                (Some(text), None, None, None) => {
                    let spec = parse_ring(text)?;
                    let consts = fourgen_constants(&FourGenInput::from_spec(&spec)?)?;
                    (spec, None, basis_algorithm(&consts)?)
                }
                _ => {
                    return Err(CliError::new(
                        EXIT_USAGE,
                        "give either a ring or all of --n --l --m",
                    ))
                }
            };
            if cli.oracle {
                let oracle = Oracle::with_budget(&spec, cli.budget)?;
                if oracle.corners().corners != res.monomials {
                    return Err(CliError::new(EXIT_INTERNAL, "basis differs from the oracle corner set"));
                }
            }
            let report = BasisReport {
                spec,
                curve: curve_spec,
                size: res.len() as u64,
                monomials: (!log).then(|| res.monomials.clone()),
                lattice: log.then(|| res.lattice.iter().copied().collect()),
                trace: cli.trace.then(|| res.trace.clone()),
            };
            if cli.json {
                emit_json(out, &report)?;
            } else {
                if let Some(trace) = &report.trace {
                    write!(out, "{}", text_trace(trace, curve_spec.is_some()))?;
                }
                if let Some(ms) = &report.monomials {
                    for m in ms {
                        writeln!(out, "{m}")?;
                    }
                }
                if let Some(ls) = &report.lattice {
                    for (a, b) in ls {
                        writeln!(out, "<{a},{b}>")?;
                    }
                }
            }
            let cm = res.iterations() == 0;
            Ok(if cm { EXIT_CM } else { EXIT_NOT_CM })
        }
        Command::Construct {
            a,
            b,
            subgroup_gens,
            constant,
            stab,
        } => {
            let gens: Vec<[u64; 2]> = serde_json::from_str(subgroup_gens)
                .map_err(|e| CliError::new(EXIT_DATA, format!("bad --subgroup-gens: {e}")))?;
            let classes: Vec<ClassVec> = gens.into_iter().map(ClassVec::from).collect();
            let spec = crate::hilbert::construct_ring((*a, *b), &classes, *constant, *stab)?;
            let oracle = Oracle::with_budget(&spec, cli.budget)?;
            let hd = crate::hilbert::hilbert_data_from(&spec, oracle.corners())?;
            let group = ClassGroup::generated_by((*a, *b), classes.iter().copied());
            let matches = hd.triple() == (group.len() as u64, *constant, *stab);
            let report = ConstructReport {
                spec,
                verification: hd,
                matches,
            };
            if cli.json {
                emit_json(out, &report)?;
            } else {
                let raw = RawRing::from(report.spec.clone());
                let json = serde_json::to_string(&raw).map_err(|e| CliError::new(EXIT_INTERNAL, e.to_string()))?;
                writeln!(out, "{json}")?;
                writeln!(
                    out,
                    "verification: multiplicity {} constant {} stabilization {}",
                    hd.multiplicity, hd.constant_c, hd.stabilization_n
                )?;
            }
            if !matches {
                return Err(CliError::new(EXIT_INTERNAL, "constructed ring has different Hilbert data"));
            }
            Ok(EXIT_CM)
        }
        Command::Batch {
            curves,
            max_n,
            oracle_up_to,
            out: path,
        } => {
            if !curves {
                return Err(CliError::new(EXIT_USAGE, "batch currently supports --curves only"));
            }
            if *max_n < 3 {
                return Err(CliError::new(EXIT_USAGE, "--max-n must be at least 3"));
            }
            let rows = batch_classify(*max_n, *oracle_up_to, cli.budget)?;
            let mut buffer = Vec::new();
            if cli.json {
                emit_json(&mut buffer, &rows)?;
            } else {
                write_csv(&mut buffer, &rows, oracle_up_to.is_some())?;
            }
            match path {
                Some(p) => std::fs::write(p, &buffer)?,
                None => out.write_all(&buffer)?,
            }
            if rows.iter().any(|r| r.agrees == Some(false)) {
                return Err(CliError::new(EXIT_INTERNAL, "oracle disagreement in batch"));
            }
            Ok(EXIT_CM)
        }
        Command::Verify { ring, hf_range } => {
            let spec = parse_ring(ring)?;
            let range = hf_range.as_deref().map(parse_range).transpose()?;
            let report = verify(&spec, range, cli.budget)?;
            if cli.json {
                emit_json(out, &report)?;
            } else {
                for c in &report.checks {
                    let verdict = match c.passed {
                        Some(true) => "pass",
                        Some(false) => "FAIL",
                        None => "skip",
                    };
                    writeln!(out, "{verdict:<4} {:<16} {}", c.name, c.detail)?;
                }
            }
            Ok(if report.all_passed { EXIT_CM } else { EXIT_INTERNAL })
        }
    }
}

fn b0_monomials(spec: &RingSpec) -> Option<Vec<ExpVec>> {
    let input = FourGenInput::from_spec(spec).ok()?;
    let consts = fourgen_constants(&input).ok()?;
    candidate_basis_b0(&consts)
        .into_iter()
        .map(|(a, b)| input.monomial(a, b).ok())
        .collect()
}

pub fn write_csv(out: &mut dyn Write, rows: &[BatchRow], with_oracle: bool) -> CliResult<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    let mut header = vec!["n", "l", "m", "is_cm", "H", "basis_size", "bound_attained"];
    if with_oracle {
        header.extend(["oracle_checked", "agrees"]);
    }
    let csv_err = |e: csv::Error| CliError::new(EXIT_IO, e.to_string());
    w.write_record(&header).map_err(csv_err)?;
    for r in rows {
        let mut rec = vec![
            r.n.to_string(),
            r.l.to_string(),
            r.m.to_string(),
            r.is_cm.to_string(),
            r.h.to_string(),
            r.basis_size.to_string(),
            r.bound_attained.to_string(),
        ];
        if with_oracle {
            rec.push(r.oracle_checked.unwrap_or(false).to_string());
            rec.push(r.agrees.map_or(String::new(), |a| a.to_string()));
        }
        w.write_record(&rec).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}
