//! Membership in the semigroup `S` spanned by the ring's exponent vectors.
//!
//! `v` is in `S` iff `v = (0,0)` or `v - g` is in `S` for some generator
//! `g <= v`. The table is filled row by row (`beta` ascending) as bitsets, so
//! a whole row is updated with a few word shifts per generator.

use std::sync::{Arc, RwLock};

use crate::ring::{ExpVec, RingSpec};

/// Membership table for `0 <= alpha < width`, `0 <= beta < height`.
#[derive(Debug, Clone)]
pub struct MembershipGrid {
    width: usize,
    height: usize,
    words: usize,
    bits: Vec<u64>,
}

impl MembershipGrid {
    /// Words needed for a `width x height` table.
    pub fn word_count(width: u64, height: u64) -> u128 {
        (width as u128).div_ceil(64) * height as u128
    }

    pub fn build(spec: &RingSpec, width: usize, height: usize) -> Self {
        let words = width.div_ceil(64).max(1);
        let mut grid = MembershipGrid {
            width,
            height,
            words,
            bits: vec![0; words * height],
        };
        if width == 0 || height == 0 {
            return grid;
        }
        let gens = spec.all_generators();
        let (horizontal, climbing): (Vec<ExpVec>, Vec<ExpVec>) =
            gens.into_iter().partition(|g| g.beta == 0);
        let mut scratch = vec![0u64; words];
        for row in 0..height {
            let (done, rest) = grid.bits.split_at_mut(row * words);
            let cur = &mut rest[..words];
            if row == 0 {
                cur[0] = 1;
            }
            for g in &climbing {
                let Ok(dy) = usize::try_from(g.beta) else { continue };
                if dy > row {
                    continue;
                }
                let src = &done[(row - dy) * words..(row - dy + 1) * words];
                or_shifted(cur, src, g.alpha);
            }
            // closure under horizontal generators: doubling shifts
            for g in &horizontal {
                let mut step = g.alpha;
                while step < width as u64 {
                    scratch.copy_from_slice(cur);
                    or_shifted(cur, &scratch, step);
                    step = step.saturating_mul(2);
                }
            }
            mask_tail(cur, width);
        }
        grid
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// `None` when `v` lies outside the table.
    pub fn get(&self, v: ExpVec) -> Option<bool> {
        let (x, y) = (usize::try_from(v.alpha).ok()?, usize::try_from(v.beta).ok()?);
        if x >= self.width || y >= self.height {
            return None;
        }
        Some(self.bits[y * self.words + x / 64] >> (x % 64) & 1 == 1)
    }

    /// Signed lookup; anything with a negative coordinate is outside `S`.
    pub fn get_signed(&self, alpha: i64, beta: i64) -> Option<bool> {
        if alpha < 0 || beta < 0 {
            return Some(false);
        }
        self.get(ExpVec::new(alpha as u64, beta as u64))
    }

    pub fn covers(&self, v: ExpVec) -> bool {
        (v.alpha as u128) < self.width as u128 && (v.beta as u128) < self.height as u128
    }

    /// Raw bit row for `beta`.
    pub fn row(&self, beta: usize) -> &[u64] {
        &self.bits[beta * self.words..(beta + 1) * self.words]
    }

    pub fn words_per_row(&self) -> usize {
        self.words
    }
}

/// `dst |= src << shift` on little-endian multiword bitsets of equal length.
pub(crate) fn or_shifted(dst: &mut [u64], src: &[u64], shift: u64) {
    let n = dst.len();
    let Ok(shift) = usize::try_from(shift) else { return };
    let word_shift = shift / 64;
    let bit_shift = shift % 64;
    if word_shift >= n {
        return;
    }
    for k in (word_shift..n).rev() {
        let s = k - word_shift;
        let mut v = src[s] << bit_shift;
        if bit_shift > 0 && s > 0 {
            v |= src[s - 1] >> (64 - bit_shift);
        }
        dst[k] |= v;
    }
}

/// Bits `alpha + shift` of `src` moved down to position `alpha`.
pub(crate) fn shifted_down(src: &[u64], shift: usize, out: &mut [u64]) {
    let n = src.len();
    let word_shift = shift / 64;
    let bit_shift = shift % 64;
    for (k, o) in out.iter_mut().enumerate() {
        let s = k + word_shift;
        if s >= n {
            *o = 0;
            continue;
        }
        let mut v = src[s] >> bit_shift;
        if bit_shift > 0 && s + 1 < n {
            v |= src[s + 1] << (64 - bit_shift);
        }
        *o = v;
    }
}

pub(crate) fn mask_tail(row: &mut [u64], width: usize) {
    let used = width % 64;
    if used != 0 {
        if let Some(last) = row.get_mut(width / 64) {
            *last &= (1u64 << used) - 1;
        }
    }
    for w in row.iter_mut().skip(width.div_ceil(64)) {
        *w = 0;
    }
}

/// Semigroup of a ring with a lazily grown, shared membership table.
///
/// The table only ever grows; answers never depend on its current size.
#[derive(Debug)]
pub struct Semigroup {
    spec: RingSpec,
    grid: RwLock<Option<Arc<MembershipGrid>>>,
}

impl Semigroup {
    pub fn new(spec: &RingSpec) -> Self {
        Semigroup {
            spec: spec.clone(),
            grid: RwLock::new(None),
        }
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    /// A table covering `[0, max_alpha] x [0, max_beta]`.
    pub fn grid_covering(&self, max_alpha: u64, max_beta: u64) -> Arc<MembershipGrid> {
        let corner = ExpVec::new(max_alpha, max_beta);
        if let Some(g) = self.grid.read().expect("membership lock").as_ref() {
            if g.covers(corner) {
                return Arc::clone(g);
            }
        }
        let mut slot = self.grid.write().expect("membership lock");
        if let Some(g) = slot.as_ref() {
            if g.covers(corner) {
                return Arc::clone(g);
            }
        }
        let (old_w, old_h) = slot.as_ref().map_or((0, 0), |g| (g.width, g.height));
        let need_w = max_alpha as usize + 1;
        let need_h = max_beta as usize + 1;
        let grow = |old: usize, need: usize| {
            if need <= old {
                old
            } else if old == 0 {
                need
            } else {
                need.max(old * 2)
            }
        };
        let grid = Arc::new(MembershipGrid::build(
            &self.spec,
            grow(old_w, need_w),
            grow(old_h, need_h),
        ));
        *slot = Some(Arc::clone(&grid));
        grid
    }

    pub fn contains(&self, v: ExpVec) -> bool {
        self.grid_covering(v.alpha, v.beta)
            .get(v)
            .expect("grid covers the query")
    }
}

/// One-off membership query. Use [`Semigroup`] to reuse the table.
pub fn semigroup_contains(spec: &RingSpec, v: ExpVec) -> bool {
    if v == ExpVec::ZERO {
        return true;
    }
    Semigroup::new(spec).contains(v)
}
