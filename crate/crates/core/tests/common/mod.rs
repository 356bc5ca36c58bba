//! Slow reference implementations written straight from the definitions.
//! They share nothing with the library beyond the input types.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use affine_cm::{ExpVec, RingSpec};
use proptest::prelude::*;

/// Recursive membership with memo.
pub struct NaiveSemigroup {
    gens: Vec<(u64, u64)>,
    memo: HashMap<(u64, u64), bool>,
}

impl NaiveSemigroup {
    pub fn new(spec: &RingSpec) -> Self {
        let mut gens = vec![(spec.a(), 0), (0, spec.b())];
        gens.extend(spec.gens().iter().map(|g| (g.alpha, g.beta)));
        NaiveSemigroup {
            gens,
            memo: HashMap::new(),
        }
    }

    pub fn contains(&mut self, v: (u64, u64)) -> bool {
        if v == (0, 0) {
            return true;
        }
        if let Some(&r) = self.memo.get(&v) {
            return r;
        }
        let mut r = false;
        for i in 0..self.gens.len() {
            let g = self.gens[i];
            if g.0 <= v.0 && g.1 <= v.1 && self.contains((v.0 - g.0, v.1 - g.1)) {
                r = true;
                break;
            }
        }
        self.memo.insert(v, r);
        r
    }

    pub fn contains_signed(&mut self, v: (i64, i64)) -> bool {
        v.0 >= 0 && v.1 >= 0 && self.contains((v.0 as u64, v.1 as u64))
    }
}

pub fn naive_order(c: (u64, u64), modulus: (u64, u64)) -> u64 {
    (1..).find(|&k| (k * c.0).is_multiple_of(modulus.0) && (k * c.1).is_multiple_of(modulus.1)).unwrap()
}

/// Closure of the generator classes under addition.
pub fn naive_subgroup(spec: &RingSpec) -> BTreeSet<(u64, u64)> {
    let (a, b) = (spec.a(), spec.b());
    let gens: Vec<(u64, u64)> = spec.gens().iter().map(|g| (g.alpha % a, g.beta % b)).collect();
    let mut set = BTreeSet::from([(0, 0)]);
    loop {
        let mut grown = set.clone();
        for &x in &set {
            for &g in &gens {
                grown.insert(((x.0 + g.0) % a, (x.1 + g.1) % b));
            }
        }
        if grown.len() == set.len() {
            return set;
        }
        set = grown;
    }
}

/// A box that contains every corner: a corner is a sum of generators with
/// each one used fewer times than its class order.
pub fn corner_box(spec: &RingSpec) -> (u64, u64) {
    let m = (spec.a(), spec.b());
    spec.gens().iter().fold((0, 0), |acc, g| {
        let o = naive_order((g.alpha % m.0, g.beta % m.1), m);
        (acc.0 + (o - 1) * g.alpha, acc.1 + (o - 1) * g.beta)
    })
}

/// Members of `S` in the box not divisible by `x^a` or `y^b` within `S`.
pub fn naive_corners(spec: &RingSpec) -> Vec<ExpVec> {
    let (a, b) = (spec.a(), spec.b());
    let (w, h) = corner_box(spec);
    let mut sg = NaiveSemigroup::new(spec);
    let mut out = Vec::new();
    for beta in 0..=h {
        for alpha in 0..=w {
            if !sg.contains((alpha, beta)) {
                continue;
            }
            let by_x = alpha >= a && sg.contains((alpha - a, beta));
            let by_y = beta >= b && sg.contains((alpha, beta - b));
            if !by_x && !by_y {
                out.push(ExpVec::new(alpha, beta));
            }
        }
    }
    out
}

/// Largest `n` with `v` in `(X,Y)^n`, i.e. `v - (i*a, j*b)` in `S` for some
/// `i + j = n`.
pub fn naive_order_of_monomial(sg: &mut NaiveSemigroup, a: u64, b: u64, v: (u64, u64)) -> Option<u64> {
    if !sg.contains(v) {
        return None;
    }
    let mut best = 0;
    for i in 0..=v.0 / a {
        for j in 0..=v.1 / b {
            if i + j > best && sg.contains((v.0 - i * a, v.1 - j * b)) {
                best = i + j;
            }
        }
    }
    Some(best)
}

/// `lambda((X,Y)^n / (X,Y)^(n+1))` by counting monomials of order exactly `n`.
pub fn naive_hilbert_function(spec: &RingSpec, n: u64) -> u64 {
    let (a, b) = (spec.a(), spec.b());
    let (w, h) = corner_box(spec);
    let mut sg = NaiveSemigroup::new(spec);
    let mut count = 0;
    for beta in 0..=h + n * b {
        for alpha in 0..=w + n * a {
            if naive_order_of_monomial(&mut sg, a, b, (alpha, beta)) == Some(n) {
                count += 1;
            }
        }
    }
    count
}

pub fn ring_strategy(max_ab: u64, max_exp: u64, max_gens: usize) -> impl Strategy<Value = RingSpec> {
    (
        1..=max_ab,
        1..=max_ab,
        prop::collection::vec((0..=max_exp, 0..=max_exp), 0..=max_gens),
    )
        .prop_filter_map("zero generator", |(a, b, gens)| {
            RingSpec::new(a, b, gens.into_iter().filter(|g| *g != (0, 0))).ok()
        })
}

pub fn two_gen_strategy(max_dn: u64, max_exp: u64) -> impl Strategy<Value = (u64, u64, (u64, u64), (u64, u64))> {
    let g = (0..=max_exp, 0..=max_exp).prop_filter("nonzero", |g| *g != (0, 0));
    (1..=max_dn, 1..=max_dn, g.clone(), g)
}
