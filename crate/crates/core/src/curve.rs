//! Projective monomial curves `k[x^n, x^(n-l) y^l, x^(n-m) y^m, y^n]`.
//!
//! Same relations as the four-generator case, but with the `x`-coordinate
//! eliminated: `a*l + b*m = c*n`, with only the multiplier `c` tracked.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fourgen::{
    length_bound_check, run_basis, BasisResult, FourGenConstants, FourGenInput, Relation, StopRule,
};
use crate::oracle::Oracle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveSpec {
    pub n: u64,
    pub l: u64,
    pub m: u64,
}

impl CurveSpec {
    pub fn new(n: u64, l: u64, m: u64) -> Result<Self> {
        if !(0 < l && l < m && m < n) {
            return Err(Error::InvalidCurve { n, l, m });
        }
        Ok(CurveSpec { n, l, m })
    }

    pub fn fourgen_input(&self) -> FourGenInput {
        FourGenInput {
            d: self.n,
            n: self.n,
            e: self.n - self.l,
            l: self.l,
            f: self.n - self.m,
            m: self.m,
        }
    }

    /// `gcd(l, m, n)`.
    pub fn gcd(&self) -> u64 {
        self.l.gcd(&self.m).gcd(&self.n)
    }
}

/// Multipliers `(a, b, c)` of one relation `a*l + b*m = c*n` (signs per row).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveRelation {
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveConstants {
    pub spec: CurveSpec,
    /// `gcd(l, m, n)`.
    pub d: u64,
    /// `a1*l + b1*m = c1*n`.
    pub joint: CurveRelation,
    /// `-a2*l + b2*m = c2*n`.
    pub f_relation: CurveRelation,
    /// `a3*l - b3*m = c3*n`.
    pub e_relation: CurveRelation,
}

pub fn curve_constants(spec: &CurveSpec) -> Result<CurveConstants> {
    let spec = CurveSpec::new(spec.n, spec.l, spec.m)?;
    let (n, l, m) = (spec.n as i64, spec.l as i64, spec.m as i64);
    let a_range = n / l.gcd(&n);
    let b_range = n / m.gcd(&n);

    let mut f_relation = None;
    'search: for b in 1..=n {
        for a in 0..a_range {
            let h = b * m - a * l;
            if h % n != 0 {
                continue;
            }
            let c = h / n;
            // a nonnegative x-coordinate forces a positive y-coordinate
            if b - a - c >= 0 && c <= 0 {
                return Err(Error::IdentityViolation(format!(
                    "sign lemma fails at a={a}, b={b}, c={c}"
                )));
            }
            if c > 0 {
                f_relation = Some(CurveRelation {
                    a: a as u64,
                    b: b as u64,
                    c: c as u64,
                });
                break 'search;
            }
        }
    }
    let mut e_relation = None;
    'search: for a in 1..=n {
        for b in 0..b_range {
            let h = a * l - b * m;
            if h % n != 0 || h < 0 {
                continue;
            }
            let c = h / n;
            if a - b - c <= 0 {
                return Err(Error::IdentityViolation(format!(
                    "mirrored sign lemma fails at a={a}, b={b}, c={c}"
                )));
            }
            e_relation = Some(CurveRelation {
                a: a as u64,
                b: b as u64,
                c: c as u64,
            });
            break 'search;
        }
    }
    let (Some(f), Some(e)) = (f_relation, e_relation) else {
        return Err(Error::Internal(format!("curve relation search failed for {spec:?}")));
    };
    if !(e.a > f.a && f.b > e.b) {
        return Err(Error::Internal(format!("ordering a3 > a2, b2 > b3 failed: {e:?} {f:?}")));
    }
    let joint = CurveRelation {
        a: e.a - f.a,
        b: f.b - e.b,
        c: f.c + e.c,
    };
    Ok(CurveConstants {
        spec,
        d: spec.gcd(),
        joint,
        f_relation: f,
        e_relation: e,
    })
}

impl CurveConstants {
    /// The same relations in four-generator form with `d = n`,
    /// `e = n - l`, `f = n - m`.
    pub fn to_fourgen(&self) -> FourGenConstants {
        let n = self.spec.n as i64;
        let rel = |r: &CurveRelation, g_mult: i64| Relation {
            a: r.a,
            b: r.b,
            g: g_mult * n,
            h: r.c as i64 * n,
        };
        let (j, f, e) = (&self.joint, &self.f_relation, &self.e_relation);
        let g2 = f.b as i64 - f.a as i64 - f.c as i64;
        let g3 = e.a as i64 - e.b as i64 - e.c as i64;
        FourGenConstants {
            input: self.spec.fourgen_input(),
            joint: rel(j, g2 + g3),
            f_relation: rel(f, g2),
            e_relation: rel(e, g3),
        }
    }

    /// `|H| = n / gcd(l, m, n)`.
    pub fn group_order(&self) -> u64 {
        self.spec.n / self.d
    }
}

/// CM iff `b2 >= a2 + c2`.
pub fn is_cm_curve(consts: &CurveConstants) -> bool {
    let f = &consts.f_relation;
    f.b >= f.a + f.c
}

/// The nine 2x2 determinants, each multiplied by `gcd(l, m, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeterminantIdentities {
    pub n: [i64; 3],
    pub m: [i64; 3],
    pub l: [i64; 3],
}

pub fn determinant_identities(consts: &CurveConstants) -> Result<DeterminantIdentities> {
    let (j, f, e) = (&consts.joint, &consts.f_relation, &consts.e_relation);
    let v = |x: u64| x as i64;
    let (a1, b1, c1) = (v(j.a), v(j.b), v(j.c));
    let (a2, b2, c2) = (v(f.a), v(f.b), v(f.c));
    let (a3, b3, c3) = (v(e.a), v(e.b), v(e.c));
    let d = v(consts.d);
    let out = DeterminantIdentities {
        n: [a3 * b2 - a2 * b3, a3 * b1 + a1 * b3, a1 * b2 + a2 * b1].map(|x| d * x),
        m: [a3 * c2 + a2 * c3, a3 * c1 - a1 * c3, a1 * c2 + a2 * c1].map(|x| d * x),
        l: [c3 * b2 + b3 * c2, c3 * b1 + b3 * c1, c1 * b2 - b1 * c2].map(|x| d * x),
    };
    let spec = consts.spec;
    for (name, vals, want) in [("n", out.n, spec.n), ("m", out.m, spec.m), ("l", out.l, spec.l)] {
        if vals.iter().any(|&x| x != want as i64) {
            return Err(Error::IdentityViolation(format!(
                "{name} = {want} but determinants give {vals:?} for {spec:?}"
            )));
        }
    }
    Ok(out)
}

/// Closed-form verdicts for `l = 1` and for coprime `l + m = n`; `None`
/// when neither applies.
pub fn cm_special_cases(spec: &CurveSpec) -> Option<bool> {
    if spec.l == 1 {
        let (q, r) = spec.n.div_rem(&spec.m);
        return Some(r == 0 || q + r >= spec.m);
    }
    if spec.l.gcd(&spec.m) == 1 && spec.l + spec.m == spec.n {
        return Some(spec.m == spec.l + 1);
    }
    None
}

/// Basis of `R/(x^n, y^n)`; the loop stops once `b* >= a* + c*`.
pub fn curve_basis(spec: &CurveSpec) -> Result<BasisResult> {
    let consts = curve_constants(spec)?;
    curve_basis_from(&consts)
}

pub fn curve_basis_from(consts: &CurveConstants) -> Result<BasisResult> {
    let rule = StopRule::Curve {
        c1: consts.joint.c as i64,
        c2: consts.f_relation.c as i64,
    };
    run_basis(&consts.to_fourgen(), rule)
}

/// One row of the curve survey.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatchRow {
    pub n: u64,
    pub l: u64,
    pub m: u64,
    pub is_cm: bool,
    #[serde(rename = "H")]
    pub h: u64,
    pub basis_size: u64,
    pub bound_attained: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_checked: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agrees: Option<bool>,
}

pub fn classify(spec: &CurveSpec, with_oracle: bool, budget: u64) -> Result<BatchRow> {
    let consts = curve_constants(spec)?;
    determinant_identities(&consts)?;
    let is_cm = is_cm_curve(&consts);
    if let Some(special) = cm_special_cases(spec) {
        if special != is_cm {
            return Err(Error::IdentityViolation(format!(
                "closed-form verdict {special} disagrees with {is_cm} for {spec:?}"
            )));
        }
    }
    let four = consts.to_fourgen();
    let basis = curve_basis_from(&consts)?;
    let bound_attained = length_bound_check(&four, &basis)?;
    let agrees = if with_oracle {
        let oracle = Oracle::with_budget(&four.input.spec()?, budget)?;
        let gsw = oracle.gsw_cm_check()?;
        Some(oracle.corners().corners == basis.monomials && gsw.cohen_macaulay == is_cm)
    } else {
        None
    };
    Ok(BatchRow {
        n: spec.n,
        l: spec.l,
        m: spec.m,
        is_cm,
        h: consts.group_order(),
        basis_size: basis.len() as u64,
        bound_attained,
        oracle_checked: with_oracle.then_some(true),
        agrees,
    })
}

/// Every curve with `n <= n_max`, ordered by `(n, l, m)`. Rows with
/// `n <= oracle_up_to` are also checked against the oracle.
pub fn batch_classify(n_max: u64, oracle_up_to: Option<u64>, budget: u64) -> Result<Vec<BatchRow>> {
    let mut rows = Vec::new();
    for n in 3..=n_max {
        for l in 1..n {
            for m in l + 1..n {
                let spec = CurveSpec::new(n, l, m)?;
                let checked = oracle_up_to.is_some_and(|k| n <= k);
                let mut row = classify(&spec, checked, budget)?;
                if oracle_up_to.is_some() && !checked {
                    row.oracle_checked = Some(false);
                }
                rows.push(row);
            }
        }
    }
    Ok(rows)
}
