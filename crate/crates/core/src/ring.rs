//! Ring data: the generator list of `k[x^a, x^p1 y^q1, ..., x^pt y^qt, y^b]`,
//! exponent vectors, residue classes mod `(a, b)` and the class subgroup.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest exponent accepted on input. Keeps every product of two inputs
/// well inside `i64`, so intermediate arithmetic only needs checks where
/// longer chains are formed.
pub const MAX_EXPONENT: i64 = 1 << 24;

/// Exponent vector `(alpha, beta)` of the monomial `x^alpha y^beta`.
///
/// Ordered by `beta` first, then `alpha`, which is the order every listing in
/// this crate uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "[u64; 2]", into = "[u64; 2]")]
pub struct ExpVec {
    pub alpha: u64,
    pub beta: u64,
}

impl ExpVec {
    pub const ZERO: ExpVec = ExpVec { alpha: 0, beta: 0 };

    pub const fn new(alpha: u64, beta: u64) -> Self {
        ExpVec { alpha, beta }
    }

    /// Componentwise `self <= other`.
    pub fn divides(self, other: ExpVec) -> bool {
        self.alpha <= other.alpha && self.beta <= other.beta
    }

    pub fn checked_add(self, other: ExpVec) -> Option<ExpVec> {
        Some(ExpVec {
            alpha: self.alpha.checked_add(other.alpha)?,
            beta: self.beta.checked_add(other.beta)?,
        })
    }

    pub fn checked_sub(self, other: ExpVec) -> Option<ExpVec> {
        Some(ExpVec {
            alpha: self.alpha.checked_sub(other.alpha)?,
            beta: self.beta.checked_sub(other.beta)?,
        })
    }
}

impl Ord for ExpVec {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.beta, self.alpha).cmp(&(other.beta, other.alpha))
    }
}

impl PartialOrd for ExpVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<[u64; 2]> for ExpVec {
    fn from([alpha, beta]: [u64; 2]) -> Self {
        ExpVec { alpha, beta }
    }
}

impl From<ExpVec> for [u64; 2] {
    fn from(v: ExpVec) -> Self {
        [v.alpha, v.beta]
    }
}

impl From<(u64, u64)> for ExpVec {
    fn from((alpha, beta): (u64, u64)) -> Self {
        ExpVec { alpha, beta }
    }
}

impl fmt::Display for ExpVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.alpha, self.beta)
    }
}

/// Residue class in `Z/a + Z/b`, always with canonical representatives
/// `0 <= p < a`, `0 <= q < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[u64; 2]", into = "[u64; 2]")]
pub struct ClassVec {
    pub p: u64,
    pub q: u64,
}

impl ClassVec {
    pub const ZERO: ClassVec = ClassVec { p: 0, q: 0 };

    pub fn new(p: u64, q: u64, modulus: (u64, u64)) -> Self {
        ClassVec {
            p: p % modulus.0,
            q: q % modulus.1,
        }
    }

    pub fn is_zero(self) -> bool {
        self.p == 0 && self.q == 0
    }

    pub fn add(self, other: ClassVec, modulus: (u64, u64)) -> ClassVec {
        ClassVec {
            p: (self.p + other.p) % modulus.0,
            q: (self.q + other.q) % modulus.1,
        }
    }
}

impl From<[u64; 2]> for ClassVec {
    fn from([p, q]: [u64; 2]) -> Self {
        ClassVec { p, q }
    }
}

impl From<ClassVec> for [u64; 2] {
    fn from(c: ClassVec) -> Self {
        [c.p, c.q]
    }
}

impl fmt::Display for ClassVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// Unvalidated ring data, as read from JSON or the compact syntax.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawRing {
    pub a: i64,
    pub b: i64,
    #[serde(default)]
    pub gens: Vec<[i64; 2]>,
}

/// A validated ring `k[x^a, x^p1 y^q1, ..., x^pt y^qt, y^b]`.
///
/// Middle generators are deduplicated (first occurrence wins) and otherwise
/// kept in input order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawRing", into = "RawRing")]
pub struct RingSpec {
    a: u64,
    b: u64,
    gens: Vec<ExpVec>,
}

impl RingSpec {
    pub fn new<I, G>(a: u64, b: u64, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = G>,
        G: Into<ExpVec>,
    {
        let raw = RawRing {
            a: to_signed(a)?,
            b: to_signed(b)?,
            gens: gens
                .into_iter()
                .map(|g| {
                    let g = g.into();
                    Ok([to_signed(g.alpha)?, to_signed(g.beta)?])
                })
                .collect::<Result<_>>()?,
        };
        validate(&raw)
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn modulus(&self) -> (u64, u64) {
        (self.a, self.b)
    }

    /// The middle generators `(p_i, q_i)`.
    pub fn gens(&self) -> &[ExpVec] {
        &self.gens
    }

    /// All semigroup generators: `(a,0)`, the middle generators, `(0,b)`.
    pub fn all_generators(&self) -> Vec<ExpVec> {
        let mut all = Vec::with_capacity(self.gens.len() + 2);
        all.push(ExpVec::new(self.a, 0));
        all.extend_from_slice(&self.gens);
        all.push(ExpVec::new(0, self.b));
        all
    }

    pub fn class_of(&self, v: ExpVec) -> ClassVec {
        class_of(v, self)
    }

    pub fn weighted_degree(&self, v: ExpVec) -> u128 {
        weighted_degree(v, self)
    }

    /// The isomorphic ring under `x -> x^b`, `y -> y^a`, which has both pure
    /// powers equal to `x^(ab)` and `y^(ab)`.
    pub fn rescaled_to_square(&self) -> Result<RingSpec> {
        let ab = checked_mul(self.a, self.b, "rescaled modulus")?;
        let gens = self
            .gens
            .iter()
            .map(|g| {
                Ok(ExpVec::new(
                    checked_mul(self.b, g.alpha, "rescaled generator")?,
                    checked_mul(self.a, g.beta, "rescaled generator")?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        RingSpec::new(ab, ab, gens)
    }

    /// Compact form `A,B;p1:q1,p2:q2`.
    pub fn to_compact(&self) -> String {
        let gens: Vec<String> = self
            .gens
            .iter()
            .map(|g| format!("{}:{}", g.alpha, g.beta))
            .collect();
        format!("{},{};{}", self.a, self.b, gens.join(","))
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let power = |var: char, e: u64| match e {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{e}"),
        };
        write!(f, "k[{}", power('x', self.a))?;
        for g in &self.gens {
            write!(f, ", {}{}", power('x', g.alpha), power('y', g.beta))?;
        }
        write!(f, ", {}]", power('y', self.b))
    }
}

impl TryFrom<RawRing> for RingSpec {
    type Error = Error;

    fn try_from(raw: RawRing) -> Result<Self> {
        validate(&raw)
    }
}

impl From<RingSpec> for RawRing {
    fn from(spec: RingSpec) -> Self {
        RawRing {
            a: spec.a as i64,
            b: spec.b as i64,
            gens: spec
                .gens
                .iter()
                .map(|g| [g.alpha as i64, g.beta as i64])
                .collect(),
        }
    }
}

fn to_signed(v: u64) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::ExponentTooLarge { value: i64::MAX })
}

pub(crate) fn checked_mul(x: u64, y: u64, what: &'static str) -> Result<u64> {
    x.checked_mul(y).ok_or(Error::Overflow { what })
}

pub fn validate(raw: &RawRing) -> Result<RingSpec> {
    if raw.a <= 0 || raw.b <= 0 {
        return Err(Error::NonPositiveAB { a: raw.a, b: raw.b });
    }
    for &value in [raw.a, raw.b].iter() {
        if value > MAX_EXPONENT {
            return Err(Error::ExponentTooLarge { value });
        }
    }
    let mut gens: Vec<ExpVec> = Vec::with_capacity(raw.gens.len());
    for (index, &[p, q]) in raw.gens.iter().enumerate() {
        if p < 0 || q < 0 {
            return Err(Error::NegativeExponent { index, p, q });
        }
        if p == 0 && q == 0 {
            return Err(Error::ZeroGenerator { index });
        }
        if p > MAX_EXPONENT || q > MAX_EXPONENT {
            return Err(Error::ExponentTooLarge { value: p.max(q) });
        }
        let g = ExpVec::new(p as u64, q as u64);
        if !gens.contains(&g) {
            gens.push(g);
        }
    }
    Ok(RingSpec {
        a: raw.a as u64,
        b: raw.b as u64,
        gens,
    })
}

pub fn class_of(v: ExpVec, spec: &RingSpec) -> ClassVec {
    ClassVec::new(v.alpha, v.beta, spec.modulus())
}

/// `b*alpha + a*beta`, so that `x^a` and `y^b` both have degree `a*b`.
pub fn weighted_degree(v: ExpVec, spec: &RingSpec) -> u128 {
    spec.b as u128 * v.alpha as u128 + spec.a as u128 * v.beta as u128
}

/// Order of `c` in `Z/a + Z/b`.
pub fn order_of(c: ClassVec, modulus: (u64, u64)) -> u64 {
    let (a, b) = modulus;
    let oa = a / c.p.gcd(&a);
    let ob = b / c.q.gcd(&b);
    oa.lcm(&ob)
}

/// A subgroup of `Z/a + Z/b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassGroup {
    modulus: (u64, u64),
    elements: BTreeSet<ClassVec>,
}

impl ClassGroup {
    /// Closure of `generators` under addition.
    pub fn generated_by<I>(modulus: (u64, u64), generators: I) -> ClassGroup
    where
        I: IntoIterator<Item = ClassVec>,
    {
        let gens: Vec<ClassVec> = generators
            .into_iter()
            .map(|c| ClassVec::new(c.p, c.q, modulus))
            .filter(|c| !c.is_zero())
            .collect();
        let mut elements = BTreeSet::from([ClassVec::ZERO]);
        let mut frontier = vec![ClassVec::ZERO];
        while let Some(c) = frontier.pop() {
            for &g in &gens {
                let next = c.add(g, modulus);
                if elements.insert(next) {
                    frontier.push(next);
                }
            }
        }
        ClassGroup { modulus, elements }
    }

    pub fn modulus(&self) -> (u64, u64) {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn contains(&self, c: ClassVec) -> bool {
        self.elements.contains(&c)
    }

    /// Elements in lexicographic `(p, q)` order.
    pub fn iter(&self) -> impl Iterator<Item = ClassVec> + '_ {
        self.elements.iter().copied()
    }
}

/// The subgroup `H` generated by the classes of the middle generators.
pub fn subgroup(spec: &RingSpec) -> ClassGroup {
    ClassGroup::generated_by(
        spec.modulus(),
        spec.gens.iter().map(|&g| class_of(g, spec)),
    )
}
