//! Brute-force ground truth.
//!
//! Nothing here is clever: corners are found by enumerating every bounded
//! combination of generators and testing divisibility by `X = x^a` and
//! `Y = y^b` against the membership table; the Hilbert function is counted
//! point by point; the CM check searches for a Goto-Suzuki-Watanabe witness
//! `v` with `v + (a,0)`, `v + (0,b)` in `S` but `v` not in `S`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fourgen::{FourGenConstants, FourGenInput, Relation};
use crate::lattice::Lattice2;
use crate::ring::{order_of, ClassVec, ExpVec, RingSpec};
use crate::semigroup::{shifted_down, MembershipGrid, Semigroup};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Monomials of `R` outside `(X, Y)`: the monomial basis of `R/(X,Y)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CornerSet {
    /// Sorted by `(beta, alpha)`.
    pub corners: Vec<ExpVec>,
    /// Per class, sorted by `beta` ascending (so `alpha` descending).
    pub by_class: BTreeMap<ClassVec, Vec<ExpVec>>,
}

impl CornerSet {
    pub fn len(&self) -> usize {
        self.corners.len()
    }

    pub fn is_empty(&self) -> bool {
        self.corners.is_empty()
    }

    pub fn contains(&self, v: ExpVec) -> bool {
        self.corners.binary_search(&v).is_ok()
    }

    pub fn max_alpha(&self) -> u64 {
        self.corners.iter().map(|c| c.alpha).max().unwrap_or(0)
    }

    pub fn max_beta(&self) -> u64 {
        self.corners.iter().map(|c| c.beta).max().unwrap_or(0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GswVerdict {
    pub cohen_macaulay: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<ExpVec>,
}

/// Brute-force evaluator for one ring, sharing one membership table across
/// queries.
#[derive(Debug)]
pub struct Oracle {
    spec: RingSpec,
    semigroup: Semigroup,
    corners: CornerSet,
    budget: u64,
}

impl Oracle {
    pub fn new(spec: &RingSpec) -> Result<Self> {
        Self::with_budget(spec, DEFAULT_BUDGET)
    }

    pub fn with_budget(spec: &RingSpec, budget: u64) -> Result<Self> {
        let semigroup = Semigroup::new(spec);
        let corners = enumerate_corners(spec, &semigroup, budget)?;
        Ok(Oracle {
            spec: spec.clone(),
            semigroup,
            corners,
            budget,
        })
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn corners(&self) -> &CornerSet {
        &self.corners
    }

    pub fn length(&self) -> usize {
        self.corners.len()
    }

    pub fn contains(&self, v: ExpVec) -> Result<bool> {
        self.grid(v.alpha, v.beta).map(|g| g.get(v) == Some(true))
    }

    fn grid(&self, max_alpha: u64, max_beta: u64) -> Result<std::sync::Arc<MembershipGrid>> {
        let words = MembershipGrid::word_count(max_alpha + 1, max_beta + 1);
        if words > self.budget as u128 {
            return Err(Error::BudgetExceeded {
                required: words,
                budget: self.budget,
            });
        }
        Ok(self.semigroup.grid_covering(max_alpha, max_beta))
    }

    /// `lambda((X,Y)^n / (X,Y)^(n+1))` by direct count.
    pub fn hilbert_function(&self, n: u64) -> Result<u64> {
        Ok(self.hilbert_function_range(n, n)?[0])
    }

    /// Hilbert function values for `lo..=hi` from a single scan.
    ///
    /// Every monomial of `S` in a class is `corner * X^i * Y^j` for a corner
    /// of that class, and its order is the largest `i + j` over such
    /// factorizations. A monomial of order `n` lies within `n` steps of the
    /// class's corner bounding box, so scanning that box is exhaustive.
    pub fn hilbert_function_range(&self, lo: u64, hi: u64) -> Result<Vec<u64>> {
        assert!(lo <= hi, "empty range");
        let mut counts = vec![0u64; (hi - lo + 1) as usize];
        let mut work: u128 = 0;
        for class_corners in self.corners.by_class.values() {
            let min_alpha = class_corners.iter().map(|c| c.alpha).min().unwrap_or(0);
            let min_beta = class_corners.iter().map(|c| c.beta).min().unwrap_or(0);
            // corners in (X, Y)-steps from the class origin
            let steps: Vec<(u64, u64)> = class_corners
                .iter()
                .map(|c| {
                    (
                        (c.alpha - min_alpha) / self.spec.a(),
                        (c.beta - min_beta) / self.spec.b(),
                    )
                })
                .collect();
            let max_i = steps.iter().map(|s| s.0).max().unwrap_or(0) + hi;
            let max_j = steps.iter().map(|s| s.1).max().unwrap_or(0) + hi;
            work += (max_i as u128 + 1) * (max_j as u128 + 1) * steps.len() as u128;
            if work > self.budget as u128 {
                return Err(Error::BudgetExceeded {
                    required: work,
                    budget: self.budget,
                });
            }
            for i in 0..=max_i {
                for j in 0..=max_j {
                    let ord = steps
                        .iter()
                        .filter(|&&(ci, cj)| ci <= i && cj <= j)
                        .map(|&(ci, cj)| (i - ci) + (j - cj))
                        .max();
                    if let Some(ord) = ord {
                        if (lo..=hi).contains(&ord) {
                            counts[(ord - lo) as usize] += 1;
                        }
                    }
                }
            }
        }
        Ok(counts)
    }

    /// Exact Goto-Suzuki-Watanabe test with rays `(a,0)` and `(0,b)`.
    ///
    /// A witness needs `v + (0,b)` in `S`, so `alpha >= 0`, and likewise
    /// `beta >= 0`. If `v` lies beyond every corner of its class in one
    /// coordinate, then `v + (a,0)` in `S` forces `v` in `S`, so the search
    /// stops at the largest corner coordinates. Returns the first witness in
    /// `(beta, alpha)` order.
    pub fn gsw_cm_check(&self) -> Result<GswVerdict> {
        let (a, b) = (self.spec.a(), self.spec.b());
        let (max_alpha, max_beta) = (self.corners.max_alpha(), self.corners.max_beta());
        let grid = self.grid(max_alpha + a, max_beta + b)?;
        let lattice = Lattice2::for_ring(&self.spec);
        let words = grid.words_per_row();
        let mut shifted = vec![0u64; words];
        let limit_words = (max_alpha as usize + 1).div_ceil(64);
        for beta in 0..=max_beta as usize {
            let row = grid.row(beta);
            let above = grid.row(beta + b as usize);
            shifted_down(row, a as usize, &mut shifted);
            for k in 0..limit_words {
                let hits = !row[k] & shifted[k] & above[k];
                if hits != 0 {
                    let alpha = k * 64 + hits.trailing_zeros() as usize;
                    if alpha as u64 > max_alpha {
                        break;
                    }
                    let v = ExpVec::new(alpha as u64, beta as u64);
                    if !lattice.contains((alpha as i64, beta as i64)) {
                        return Err(Error::Internal(format!(
                            "GSW candidate {v} outside the group lattice"
                        )));
                    }
                    return Ok(GswVerdict {
                        cohen_macaulay: false,
                        witness: Some(v),
                    });
                }
            }
        }
        Ok(GswVerdict {
            cohen_macaulay: true,
            witness: None,
        })
    }
}

fn enumerate_corners(spec: &RingSpec, sg: &Semigroup, budget: u64) -> Result<CornerSet> {
    let modulus = spec.modulus();
    let (a, b) = (spec.a(), spec.b());
    let over = |required: u128| Error::BudgetExceeded { required, budget };

    // Sums of generators with c_i < ord(g_i), built one generator at a time.
    // A partial sum divisible by x^a or y^b inside S stays divisible after
    // adding more generators, so it is dropped at once.
    let mut grid = sg.grid_covering(0, 0);
    let mut work: u128 = 0;
    let mut frontier = BTreeSet::from([ExpVec::ZERO]);
    for &g in spec.gens() {
        let ord = order_of(spec.class_of(g), modulus);
        let mut next = BTreeSet::new();
        for &p in &frontier {
            let mut v = p;
            for c in 0..ord {
                work += 1;
                if work > budget as u128 {
                    return Err(over(work));
                }
                if !grid.covers(v) {
                    let w = (grid.width() as u64 * 2).max(v.alpha + 1);
                    let h = (grid.height() as u64 * 2).max(v.beta + 1);
                    let words = MembershipGrid::word_count(w, h);
                    if words > budget as u128 {
                        return Err(over(words));
                    }
                    grid = sg.grid_covering(w - 1, h - 1);
                }
                let below_x = v.alpha >= a && grid.get(ExpVec::new(v.alpha - a, v.beta)) == Some(true);
                let below_y = v.beta >= b && grid.get(ExpVec::new(v.alpha, v.beta - b)) == Some(true);
                if below_x || below_y {
                    break;
                }
                next.insert(v);
                if c + 1 < ord {
                    v = ExpVec::new(
                        v.alpha.checked_add(g.alpha).ok_or(Error::Overflow { what: "corner search" })?,
                        v.beta.checked_add(g.beta).ok_or(Error::Overflow { what: "corner search" })?,
                    );
                }
            }
        }
        frontier = next;
    }
    Ok(corner_set(spec, frontier))
}

fn corner_set(spec: &RingSpec, found: BTreeSet<ExpVec>) -> CornerSet {
    let corners: Vec<ExpVec> = found.into_iter().collect();
    let mut by_class: BTreeMap<ClassVec, Vec<ExpVec>> = BTreeMap::new();
    for &c in &corners {
        by_class.entry(spec.class_of(c)).or_default().push(c);
    }
    CornerSet { corners, by_class }
}

pub fn corners(spec: &RingSpec) -> Result<CornerSet> {
    Ok(Oracle::new(spec)?.corners)
}

pub fn length_mod_parameters(spec: &RingSpec) -> Result<usize> {
    Ok(Oracle::new(spec)?.length())
}

pub fn hilbert_function(spec: &RingSpec, n: u64) -> Result<u64> {
    Oracle::new(spec)?.hilbert_function(n)
}

pub fn gsw_cm_check(spec: &RingSpec) -> Result<GswVerdict> {
    Oracle::new(spec)?.gsw_cm_check()
}

/// The three relations by literal double-loop search, including the direct
/// minimal search for the joint relation.
pub fn fourgen_constants_bruteforce(input: &FourGenInput) -> Result<FourGenConstants> {
    let input = FourGenInput::new(input.d, input.n, (input.e, input.l), (input.f, input.m))?;
    let (d, n) = (input.d as i64, input.n as i64);
    let (e_ord, f_ord) = (input.e_order(), input.f_order());
    let in_lattice = |(g, h): (i64, i64)| g % d == 0 && h % n == 0;

    let mut f_relation = None;
    'outer: for b in 1..=f_ord {
        for a in 0..e_ord {
            let (g, h) = input.signed_combo(-(a as i64), b as i64)?;
            if in_lattice((g, h)) && (g > 0 || h > 0 || (g, h) == (0, 0)) {
                f_relation = Some(Relation { a, b, g, h });
                break 'outer;
            }
        }
    }
    let mut e_relation = None;
    'outer: for a in 1..=e_ord {
        for b in 0..f_ord {
            let (g, h) = input.signed_combo(a as i64, -(b as i64))?;
            if in_lattice((g, h)) && g >= 0 && h >= 0 && (g, h) != (0, 0) {
                e_relation = Some(Relation { a, b, g, h });
                break 'outer;
            }
        }
    }
    let (Some(f_relation), Some(e_relation)) = (f_relation, e_relation) else {
        return Err(Error::Internal("brute-force relation search failed".into()));
    };

    // (g,h) < (g',h') iff h < h', or h = h' and g < g'
    let mut joint: Option<Relation> = None;
    for b in 1..=f_relation.b {
        for a in 1..=e_ord {
            let (g, h) = input.signed_combo(a as i64, b as i64)?;
            if !in_lattice((g, h)) {
                continue;
            }
            if joint.is_none_or(|best| (h, g) < (best.h, best.g)) {
                joint = Some(Relation { a, b, g, h });
            }
        }
    }
    let joint = joint.ok_or_else(|| Error::Internal("no joint relation found".into()))?;
    Ok(FourGenConstants {
        input,
        joint,
        f_relation,
        e_relation,
    })
}
