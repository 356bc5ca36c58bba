//! Rings with four generators, `k[x^d, x^e y^l, x^f y^m, y^n]`.
//!
//! Everything here is driven by three integer relations among the middle
//! generators `E = (e,l)` and `F = (f,m)` modulo `dZ + nZ`:
//!
//! ```text
//!   joint:       a1*E + b1*F = (g1, h1)
//!   f_relation: -a2*E + b2*F = (g2, h2)    b2 minimal
//!   e_relation:  a3*E - b3*F = (g3, h3)    a3 minimal
//! ```
//!
//! with `(gi, hi)` in `dZ + nZ`. The joint relation is the sum of the other
//! two. From these we get the candidate set `B0`, the Cohen-Macaulay test
//! `g2, h2 >= 0`, and an iterative construction of the full monomial basis
//! of `R/(x^d, y^n)`.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{order_of, ClassVec, ExpVec, RingSpec};

/// Parameters `d, n, (e,l), (f,m)` of a four-generator ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FourGenInput {
    pub d: u64,
    pub n: u64,
    pub e: u64,
    pub l: u64,
    pub f: u64,
    pub m: u64,
}

impl FourGenInput {
    pub fn new(d: u64, n: u64, (e, l): (u64, u64), (f, m): (u64, u64)) -> Result<Self> {
        if d == 0 || n == 0 {
            return Err(Error::InvalidDN { d, n });
        }
        if (e, l) == (0, 0) {
            return Err(Error::ZeroGenerator { index: 0 });
        }
        if (f, m) == (0, 0) {
            return Err(Error::ZeroGeneratorPair);
        }
        Ok(FourGenInput { d, n, e, l, f, m })
    }

    /// Reads the parameters off a ring with exactly two middle generators,
    /// in the ring's generator order.
    pub fn from_spec(spec: &RingSpec) -> Result<Self> {
        match spec.gens() {
            [first, second] => Self::new(
                spec.a(),
                spec.b(),
                (first.alpha, first.beta),
                (second.alpha, second.beta),
            ),
            gens => Err(Error::NotFourGen { count: gens.len() }),
        }
    }

    pub fn spec(&self) -> Result<RingSpec> {
        RingSpec::new(self.d, self.n, [(self.e, self.l), (self.f, self.m)])
    }

    pub fn modulus(&self) -> (u64, u64) {
        (self.d, self.n)
    }

    pub fn e_class(&self) -> ClassVec {
        ClassVec::new(self.e, self.l, self.modulus())
    }

    pub fn f_class(&self) -> ClassVec {
        ClassVec::new(self.f, self.m, self.modulus())
    }

    pub fn e_order(&self) -> u64 {
        order_of(self.e_class(), self.modulus())
    }

    pub fn f_order(&self) -> u64 {
        order_of(self.f_class(), self.modulus())
    }

    /// `<a,b> = a*(e,l) + b*(f,m)`.
    pub fn monomial(&self, a: u64, b: u64) -> Result<ExpVec> {
        let alpha = lin(a, self.e, b, self.f)?;
        let beta = lin(a, self.l, b, self.m)?;
        Ok(ExpVec::new(alpha, beta))
    }

    /// `sa*a*(e,l) + sb*b*(f,m)` as signed integers.
    pub(crate) fn signed_combo(&self, a: i64, b: i64) -> Result<(i64, i64)> {
        let ovf = || Error::Overflow { what: "relation" };
        let g = a
            .checked_mul(self.e as i64)
            .and_then(|x| x.checked_add(b.checked_mul(self.f as i64)?))
            .ok_or_else(ovf)?;
        let h = a
            .checked_mul(self.l as i64)
            .and_then(|x| x.checked_add(b.checked_mul(self.m as i64)?))
            .ok_or_else(ovf)?;
        Ok((g, h))
    }
}

fn lin(a: u64, x: u64, b: u64, y: u64) -> Result<u64> {
    a.checked_mul(x)
        .and_then(|ax| ax.checked_add(b.checked_mul(y)?))
        .ok_or(Error::Overflow { what: "lattice monomial" })
}

/// One relation: multipliers `(a, b)` and the resulting `(g, h)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Relation {
    pub a: u64,
    pub b: u64,
    pub g: i64,
    pub h: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FourGenConstants {
    pub input: FourGenInput,
    /// `a1*E + b1*F = (g1,h1)`.
    pub joint: Relation,
    /// `-a2*E + b2*F = (g2,h2)`.
    pub f_relation: Relation,
    /// `a3*E - b3*F = (g3,h3)`.
    pub e_relation: Relation,
}

impl FourGenConstants {
    /// `|H| = a3*b2 - a2*b3`.
    pub fn group_order(&self) -> u64 {
        self.e_relation.a * self.f_relation.b - self.f_relation.a * self.e_relation.b
    }

    /// The three 2x2 determinants that all equal `|H|`.
    pub fn determinants(&self) -> [i128; 3] {
        let (j, f, e) = (&self.joint, &self.f_relation, &self.e_relation);
        let (a1, b1) = (j.a as i128, j.b as i128);
        let (a2, b2) = (f.a as i128, f.b as i128);
        let (a3, b3) = (e.a as i128, e.b as i128);
        [a3 * b2 - a2 * b3, a3 * b1 + a1 * b3, a1 * b2 + a2 * b1]
    }

    /// Checks the defining equations and the ordering facts `a3 > a2`,
    /// `b2 > b3` that every derived quantity relies on.
    pub fn check(&self) -> Result<()> {
        let inp = &self.input;
        let (d, n) = (inp.d as i64, inp.n as i64);
        let eqs = [
            ("joint", self.joint, 1, 1),
            ("f_relation", self.f_relation, -1, 1),
            ("e_relation", self.e_relation, 1, -1),
        ];
        for (name, r, sa, sb) in eqs {
            let (g, h) = inp.signed_combo(sa * r.a as i64, sb * r.b as i64)?;
            if (g, h) != (r.g, r.h) || g % d != 0 || h % n != 0 {
                return Err(Error::IdentityViolation(format!("{name} relation {r:?}")));
            }
        }
        let (f, e, j) = (&self.f_relation, &self.e_relation, &self.joint);
        if !(e.a > f.a && f.b > e.b) {
            return Err(Error::IdentityViolation(format!(
                "expected a3 > a2 and b2 > b3, got {e:?} {f:?}"
            )));
        }
        if (j.a, j.b, j.g, j.h) != (e.a - f.a, f.b - e.b, f.g + e.g, f.h + e.h) {
            return Err(Error::IdentityViolation("joint != f_relation + e_relation".into()));
        }
        Ok(())
    }
}

/// Computes the three relations. The joint relation is derived as the sum
/// of the other two.
pub fn fourgen_constants(input: &FourGenInput) -> Result<FourGenConstants> {
    let input = FourGenInput::new(input.d, input.n, (input.e, input.l), (input.f, input.m))?;
    let modulus = input.modulus();
    let (e_ord, f_ord) = (input.e_order(), input.f_order());
    let (ec, fc) = (input.e_class(), input.f_class());

    // class of k*E -> k, for 0 <= k < ord(E); likewise for F
    let multiples = |c: ClassVec, ord: u64| -> HashMap<ClassVec, u64> {
        let mut out = HashMap::with_capacity(ord as usize);
        let mut acc = ClassVec::ZERO;
        for k in 0..ord {
            out.insert(acc, k);
            acc = acc.add(c, modulus);
        }
        out
    };
    let e_mult = multiples(ec, e_ord);
    let f_mult = multiples(fc, f_ord);

    let mut f_relation = None;
    let mut acc = ClassVec::ZERO;
    for b in 1..=f_ord {
        acc = acc.add(fc, modulus);
        let Some(&a) = e_mult.get(&acc) else { continue };
        let (g, h) = input.signed_combo(-(a as i64), b as i64)?;
        if g > 0 || h > 0 || (g == 0 && h == 0) {
            f_relation = Some(Relation { a, b, g, h });
            break;
        }
    }

    let mut e_relation = None;
    let mut acc = ClassVec::ZERO;
    for a in 1..=e_ord {
        acc = acc.add(ec, modulus);
        let Some(&b) = f_mult.get(&acc) else { continue };
        let (g, h) = input.signed_combo(a as i64, -(b as i64))?;
        if g >= 0 && h >= 0 && (g, h) != (0, 0) {
            e_relation = Some(Relation { a, b, g, h });
            break;
        }
    }

    let (Some(f_relation), Some(e_relation)) = (f_relation, e_relation) else {
        return Err(Error::Internal("relation search exhausted the orders".into()));
    };
    if !(e_relation.a > f_relation.a && f_relation.b > e_relation.b) {
        return Err(Error::Internal(format!(
            "ordering a3 > a2, b2 > b3 failed: {e_relation:?} {f_relation:?}"
        )));
    }
    let joint = Relation {
        a: e_relation.a - f_relation.a,
        b: f_relation.b - e_relation.b,
        g: f_relation.g + e_relation.g,
        h: f_relation.h + e_relation.h,
    };
    Ok(FourGenConstants {
        input,
        joint,
        f_relation,
        e_relation,
    })
}

/// `B0 = {a < a1, b < b2} u {a < a3, b < b1}` as lattice pairs `(a, b)`.
pub fn candidate_basis_b0(consts: &FourGenConstants) -> BTreeSet<(u64, u64)> {
    let (a1, b1) = (consts.joint.a, consts.joint.b);
    let b2 = consts.f_relation.b;
    let a3 = consts.e_relation.a;
    let mut out = BTreeSet::new();
    for b in 0..b2 {
        let width = if b < b1 { a3 } else { a1 };
        for a in 0..width {
            out.insert((a, b));
        }
    }
    out
}

/// Cohen-Macaulay iff `g2 >= 0` and `h2 >= 0`.
pub fn is_cm_fourgen(consts: &FourGenConstants) -> bool {
    consts.f_relation.g >= 0 && consts.f_relation.h >= 0
}

/// `k[x^d, x^e y^l, y^n]` is always Cohen-Macaulay; this only validates the
/// parameters.
pub fn is_cm_three_generator(d: u64, n: u64, (e, l): (u64, u64)) -> Result<bool> {
    if d == 0 || n == 0 {
        return Err(Error::InvalidDN { d, n });
    }
    if (e, l) == (0, 0) {
        return Err(Error::ZeroGenerator { index: 0 });
    }
    Ok(true)
}

/// Which branch of the basis loop produced a trace record.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum Step {
    /// Initial state, `B = B0`.
    Initial,
    /// `a* >= a1`: add the joint relation.
    AddJoint,
    /// `a* <= a1 - base`: add the f-relation.
    AddF,
    /// `a1 - base < a* < a1`: add the f-relation and shrink `base`.
    AddFShrink,
}

impl Step {
    /// Step number in the usual six-step statement of the algorithm.
    pub fn number(self) -> u8 {
        match self {
            Step::Initial => 1,
            Step::AddJoint => 4,
            Step::AddF => 5,
            Step::AddFShrink => 6,
        }
    }
}

impl From<Step> for u8 {
    fn from(s: Step) -> u8 {
        s.number()
    }
}

impl TryFrom<u8> for Step {
    type Error = String;

    fn try_from(v: u8) -> std::result::Result<Self, String> {
        match v {
            1 => Ok(Step::Initial),
            4 => Ok(Step::AddJoint),
            5 => Ok(Step::AddF),
            6 => Ok(Step::AddFShrink),
            other => Err(format!("no basis step {other}")),
        }
    }
}

/// State after one pass of the basis loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceRecord {
    pub step: Step,
    pub base: u64,
    pub a_star: u64,
    pub b_star: u64,
    pub g_star: i64,
    pub h_star: i64,
    /// Only for projective curves: `c*` with `h* = c* * n`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c_star: Option<i64>,
    pub added: u64,
    pub size: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisResult {
    /// Lattice pairs `(a, b)`.
    pub lattice: BTreeSet<(u64, u64)>,
    /// `a*(e,l) + b*(f,m)` for each pair, sorted by `(beta, alpha)`.
    pub monomials: Vec<ExpVec>,
    pub trace: Vec<TraceRecord>,
}

impl BasisResult {
    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lattice.is_empty()
    }

    pub fn iterations(&self) -> usize {
        self.trace.len().saturating_sub(1)
    }
}

/// Loop exit rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum StopRule {
    /// Stop once `g* >= 0` and `h* >= 0`.
    NonNegative,
    /// Projective curves: stop once `b* >= a* + c*`.
    Curve { c1: i64, c2: i64 },
}

pub fn basis_algorithm(consts: &FourGenConstants) -> Result<BasisResult> {
    run_basis(consts, StopRule::NonNegative)
}

pub(crate) fn run_basis(consts: &FourGenConstants, rule: StopRule) -> Result<BasisResult> {
    let (a1, b1) = (consts.joint.a, consts.joint.b);
    let (a2, b2) = (consts.f_relation.a, consts.f_relation.b);
    let (g1, h1) = (consts.joint.g, consts.joint.h);
    let (g2, h2) = (consts.f_relation.g, consts.f_relation.h);

    let mut set = candidate_basis_b0(consts);
    let limit = set.len() + 1;
    let (mut base, mut a_star, mut b_star) = (a1, a2, b2);
    let (mut g_star, mut h_star) = (g2, h2);
    let (c1, mut c_star) = match rule {
        StopRule::NonNegative => (0, None),
        StopRule::Curve { c1, c2 } => (c1, Some(c2)),
    };
    let mut trace = vec![TraceRecord {
        step: Step::Initial,
        base,
        a_star,
        b_star,
        g_star,
        h_star,
        c_star,
        added: set.len() as u64,
        size: set.len() as u64,
    }];

    let done = |a: u64, b: u64, g: i64, h: i64, c: Option<i64>| match (rule, c) {
        (StopRule::Curve { .. }, Some(c)) => b as i128 >= a as i128 + c as i128,
        _ => g >= 0 && h >= 0,
    };

    while !done(a_star, b_star, g_star, h_star, c_star) {
        if trace.len() > limit {
            return Err(Error::NonTermination { limit });
        }
        if base == 0 {
            return Err(Error::Internal("base dropped to 0".into()));
        }
        let before = set.len();
        // every branch reads the pre-iteration values and assigns at once
        let step = if a_star >= a1 {
            add_block(&mut set, b_star, base, b1);
            a_star -= a1;
            b_star += b1;
            g_star += g1;
            h_star += h1;
            c_star = c_star.map(|c| c + c1);
            Step::AddJoint
        } else if a_star + base <= a1 {
            add_block(&mut set, b_star, base, b2);
            a_star += a2;
            b_star += b2;
            g_star += g2;
            h_star += h2;
            c_star = c_star.map(|c| c + c2_of(rule));
            Step::AddF
        } else {
            add_block(&mut set, b_star, base, b1);
            add_block(&mut set, b_star, a1 - a_star, b2);
            let new_base = a1 - a_star;
            a_star += a2;
            b_star += b2;
            g_star += g2;
            h_star += h2;
            c_star = c_star.map(|c| c + c2_of(rule));
            base = new_base;
            Step::AddFShrink
        };
        debug_assert!(is_downward_closed(&set));
        trace.push(TraceRecord {
            step,
            base,
            a_star,
            b_star,
            g_star,
            h_star,
            c_star,
            added: (set.len() - before) as u64,
            size: set.len() as u64,
        });
    }

    let mut monomials = set
        .iter()
        .map(|&(a, b)| consts.input.monomial(a, b))
        .collect::<Result<Vec<_>>>()?;
    monomials.sort();
    Ok(BasisResult {
        lattice: set,
        monomials,
        trace,
    })
}

fn c2_of(rule: StopRule) -> i64 {
    match rule {
        StopRule::Curve { c2, .. } => c2,
        StopRule::NonNegative => 0,
    }
}

/// Adds `(u, b_star + v)` for `u < width`, `v < height`.
fn add_block(set: &mut BTreeSet<(u64, u64)>, b_star: u64, width: u64, height: u64) {
    for v in 0..height {
        for u in 0..width {
            set.insert((u, b_star + v));
        }
    }
}

pub fn is_downward_closed(set: &BTreeSet<(u64, u64)>) -> bool {
    set.iter().all(|&(a, b)| {
        (a == 0 || set.contains(&(a - 1, b))) && (b == 0 || set.contains(&(a, b - 1)))
    })
}

/// Checks `|B| <= |H|(|H|+1)/2` and `|H| <= d*n`; returns whether the first
/// bound is attained.
pub fn length_bound_check(consts: &FourGenConstants, basis: &BasisResult) -> Result<bool> {
    let h = consts.group_order();
    let dn = consts.input.d as u128 * consts.input.n as u128;
    if h as u128 > dn {
        return Err(Error::BoundViolated {
            length: h,
            bound: dn.min(u64::MAX as u128) as u64,
        });
    }
    let bound = h * (h + 1) / 2;
    let length = basis.len() as u64;
    if length > bound {
        return Err(Error::BoundViolated { length, bound });
    }
    Ok(length == bound)
}
