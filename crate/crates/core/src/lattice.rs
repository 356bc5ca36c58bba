//! Membership in the group `G` generated by the semigroup, via a 2x2
//! Hermite normal form of the generator list.

use num_integer::Integer;

use crate::ring::RingSpec;

/// Full-rank sublattice of `Z^2` with basis rows `(x1, y1)` and `(0, y2)`,
/// `x1 > 0`, `y2 > 0`, `0 <= y1 < y2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lattice2 {
    x1: i128,
    y1: i128,
    y2: i128,
}

impl Lattice2 {
    /// Lattice spanned by `(a, 0)`, `(0, b)` and `extra`.
    pub fn spanned_by<I>(a: u64, b: u64, extra: I) -> Self
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        assert!(a > 0 && b > 0, "lattice needs both axis generators");
        let mut lat = Lattice2 {
            x1: a as i128,
            y1: 0,
            y2: b as i128,
        };
        for (u, w) in extra {
            lat.absorb(u as i128, w as i128);
        }
        lat
    }

    pub fn for_ring(spec: &RingSpec) -> Self {
        Self::spanned_by(
            spec.a(),
            spec.b(),
            spec.gens().iter().map(|g| (g.alpha as i64, g.beta as i64)),
        )
    }

    fn absorb(&mut self, u: i128, w: i128) {
        // unimodular row operation on {(x1, y1), (u, w)}
        let eg = self.x1.extended_gcd(&u);
        let sign = eg.gcd.signum();
        let g = eg.gcd * sign;
        let top_y = sign * (eg.x * self.y1 + eg.y * w);
        let kernel_y = (u / g) * self.y1 - (self.x1 / g) * w;
        self.x1 = g;
        self.y2 = self.y2.gcd(&kernel_y);
        self.y1 = top_y.mod_floor(&self.y2);
    }

    /// Basis rows `((x1, y1), (0, y2))`.
    pub fn basis(&self) -> ((i128, i128), (i128, i128)) {
        ((self.x1, self.y1), (0, self.y2))
    }

    /// Index of the lattice in `Z^2`.
    pub fn index(&self) -> i128 {
        self.x1 * self.y2
    }

    pub fn contains(&self, v: (i64, i64)) -> bool {
        let (u, w) = (v.0 as i128, v.1 as i128);
        if u.mod_floor(&self.x1) != 0 {
            return false;
        }
        let k = u / self.x1;
        (w - k * self.y1).mod_floor(&self.y2) == 0
    }
}

pub fn lattice_contains(spec: &RingSpec, v: (i64, i64)) -> bool {
    Lattice2::for_ring(spec).contains(v)
}
