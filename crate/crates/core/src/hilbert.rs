//! Hilbert polynomial of the parameter ideal `(X, Y) = (x^a, y^b)` from the
//! per-class staircase.
//!
//! For each class, `alpha_pq` is a corner of least weighted degree. Walking
//! down from it one `Y` at a time gives the ladder `beta_1, .., beta_s`: the
//! leftmost monomial of `S` in each lower row of the class. Walking left one
//! `X` at a time gives the mirror ladder of length `t`. Then
//! `P(n) = |H|(n+1) + sum(s + t)`, and the Hilbert function agrees with `P`
//! exactly from `max(u, u')` on, where `u` is the longest run of ladder
//! steps skipped by the greedy degree chain.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::{CornerSet, Oracle, DEFAULT_BUDGET};
use crate::ring::{subgroup, ClassGroup, ClassVec, ExpVec, RingSpec};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StaircaseClass {
    pub class: ClassVec,
    pub alpha_pq: ExpVec,
    /// Sorted by `beta` ascending.
    pub corners: Vec<ExpVec>,
    pub s: u64,
    pub t: u64,
    /// `beta_1 .. beta_s`, each one row further down.
    pub beta_ladder: Vec<ExpVec>,
    /// `_1beta .. _tbeta`, each one column further left.
    pub underbeta_ladder: Vec<ExpVec>,
    pub u: u64,
    pub u_prime: u64,
    pub n_pq: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    pub multiplicity: u64,
    #[serde(rename = "constant_C")]
    pub constant_c: u64,
    #[serde(rename = "stabilization_N")]
    pub stabilization_n: u64,
    pub slope: u64,
    pub intercept: u64,
}

impl HilbertData {
    /// `P(n) = |H|(n+1) + C`.
    pub fn polynomial(&self, n: u64) -> u64 {
        self.slope * n + self.intercept
    }

    pub fn triple(&self) -> (u64, u64, u64) {
        (self.multiplicity, self.constant_c, self.stabilization_n)
    }
}

pub fn class_staircase(spec: &RingSpec, class: ClassVec) -> Result<StaircaseClass> {
    let oracle = Oracle::new(spec)?;
    staircase_from(spec, oracle.corners(), class)
}

/// Builds the staircase of one class from an already computed corner set.
pub fn staircase_from(spec: &RingSpec, set: &CornerSet, class: ClassVec) -> Result<StaircaseClass> {
    let corners = set
        .by_class
        .get(&class)
        .ok_or(Error::ClassNotInSubgroup { class })?
        .clone();
    let (a, b) = (spec.a(), spec.b());

    let alpha_pq = *corners
        .iter()
        .min_by_key(|c| (spec.weighted_degree(**c), c.beta, c.alpha))
        .expect("every class has a corner");
    let min_beta = corners[0].beta;
    let min_alpha = corners[corners.len() - 1].alpha;
    let s = (alpha_pq.beta - min_beta) / b;
    let t = (alpha_pq.alpha - min_alpha) / a;

    // corners are sorted by beta ascending, alpha descending
    let beta_ladder: Vec<ExpVec> = (1..=s)
        .map(|i| {
            let row = alpha_pq.beta - i * b;
            let below = corners.partition_point(|c| c.beta <= row);
            ExpVec::new(corners[below - 1].alpha, row)
        })
        .collect();
    let underbeta_ladder: Vec<ExpVec> = (1..=t)
        .map(|i| {
            let col = alpha_pq.alpha - i * a;
            let left = corners.partition_point(|c| c.alpha > col);
            ExpVec::new(col, corners[left].beta)
        })
        .collect();

    let degrees = |ladder: &[ExpVec]| -> Vec<u128> {
        std::iter::once(alpha_pq)
            .chain(ladder.iter().copied())
            .map(|v| spec.weighted_degree(v))
            .collect()
    };
    let u = greedy_gap(&degrees(&beta_ladder));
    let u_prime = greedy_gap(&degrees(&underbeta_ladder));

    Ok(StaircaseClass {
        class,
        alpha_pq,
        corners,
        s,
        t,
        beta_ladder,
        underbeta_ladder,
        u,
        u_prime,
        n_pq: u.max(u_prime),
    })
}

/// From the top index, repeatedly step to the largest lower index whose
/// degree is at most the current one; returns the longest skipped run.
/// `deg[0]` is the minimum, so the chain always reaches 0.
pub(crate) fn greedy_gap(deg: &[u128]) -> u64 {
    let mut i = deg.len() - 1;
    let mut gap = 0;
    while i > 0 {
        let j = (0..i).rev().find(|&j| deg[j] <= deg[i]).unwrap_or(0);
        gap = gap.max(i - j - 1);
        i = j;
    }
    gap as u64
}

pub fn hilbert_data(spec: &RingSpec) -> Result<HilbertData> {
    let oracle = Oracle::with_budget(spec, DEFAULT_BUDGET)?;
    hilbert_data_from(spec, oracle.corners())
}

pub fn hilbert_data_from(spec: &RingSpec, set: &CornerSet) -> Result<HilbertData> {
    let group = subgroup(spec);
    let staircases = staircases(spec, set, &group)?;
    Ok(aggregate(group.len() as u64, &staircases))
}

pub fn staircases(spec: &RingSpec, set: &CornerSet, group: &ClassGroup) -> Result<Vec<StaircaseClass>> {
    group.iter().map(|c| staircase_from(spec, set, c)).collect()
}

pub(crate) fn aggregate(multiplicity: u64, staircases: &[StaircaseClass]) -> HilbertData {
    let constant_c: u64 = staircases.iter().map(|s| s.s + s.t).sum();
    let stabilization_n = staircases.iter().map(|s| s.n_pq).max().unwrap_or(0);
    HilbertData {
        multiplicity,
        constant_c,
        stabilization_n,
        slope: multiplicity,
        intercept: multiplicity + constant_c,
    }
}

/// CM iff every class has exactly one corner.
pub fn is_cm_general(spec: &RingSpec) -> Result<bool> {
    let oracle = Oracle::new(spec)?;
    Ok(is_cm_from(oracle.corners()))
}

pub fn is_cm_from(set: &CornerSet) -> bool {
    set.by_class.values().all(|c| c.len() == 1)
}

/// A ring with the given class group whose Hilbert polynomial is
/// `|H|(n+1) + constant` and whose Hilbert function agrees with it exactly
/// from `stabilization` on.
///
/// Each nonzero class gets one generator far out on the diagonal; the class
/// `(p0, q0)` also gets a run of generators stepping one `X` right and one
/// `Y` down, with a hole of length `stabilization` before the last one.
/// That run makes `s = constant` and `u = stabilization`. Since `u <= s - 1`
/// for every class, pairs with `0 < constant <= stabilization`, or with
/// `constant = 0 < stabilization`, cannot be realized.
pub fn construct_ring(
    modulus: (u64, u64),
    subgroup_gens: &[ClassVec],
    constant: u64,
    stabilization: u64,
) -> Result<RingSpec> {
    let (a, b) = modulus;
    if a == 0 || b == 0 {
        return Err(Error::NonPositiveAB {
            a: a as i64,
            b: b as i64,
        });
    }
    let reduced: Vec<ClassVec> = subgroup_gens
        .iter()
        .map(|c| ClassVec::new(c.p, c.q, modulus))
        .collect();
    let group = ClassGroup::generated_by(modulus, reduced);
    if group.is_trivial() {
        return Err(Error::TrivialSubgroup);
    }
    let feasible = (constant == 0 && stabilization == 0) || stabilization < constant;
    if !feasible {
        return Err(Error::UnattainableHilbertData {
            constant,
            stabilization,
        });
    }
    let big_n = constant + stabilization + 1;
    let ovf = || Error::Overflow { what: "constructed generator" };
    let point = |p: u64, q: u64, i: u64, j: u64| -> Result<(u64, u64)> {
        let x = i.checked_mul(a).and_then(|v| v.checked_add(p)).ok_or_else(ovf)?;
        let y = j.checked_mul(b).and_then(|v| v.checked_add(q)).ok_or_else(ovf)?;
        Ok((x, y))
    };

    let mut gens = Vec::new();
    for c in group.iter().filter(|c| !c.is_zero()) {
        gens.push(point(c.p, c.q, big_n, big_n + constant)?);
    }
    let first = group.iter().find(|c| !c.is_zero()).expect("nontrivial group");
    if constant > 0 {
        let steps = (0..constant - stabilization).chain(std::iter::once(constant));
        for j in steps {
            gens.push(point(first.p, first.q, big_n + j, big_n + constant - j)?);
        }
    }
    for &(x, y) in &gens {
        for v in [x, y] {
            if v as i64 > crate::ring::MAX_EXPONENT {
                return Err(Error::ExponentTooLarge { value: v as i64 });
            }
        }
    }
    RingSpec::new(a, b, gens)
}
