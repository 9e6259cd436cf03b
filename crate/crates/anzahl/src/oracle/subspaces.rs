//! Exhaustive, streaming enumeration of subspaces of `F_p^n`.
//!
//! Every `j`-dimensional subspace has a unique reduced-row-echelon basis, so
//! we enumerate by choosing the pivot columns and then sweeping the free
//! entries with an odometer. Nothing is stored; callers fold over the stream.

use itertools::Itertools;

use super::field::{rref, Mat, PrimeFieldCtx};

/// A subspace, held as its canonical RREF basis (one row per dimension).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    pub basis: Mat,
}

impl Subspace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Canonicalize an arbitrary spanning set.
    pub fn from_rows(ctx: &PrimeFieldCtx, rows: &Mat) -> Subspace {
        let mut m = rows.clone();
        let pivots = rref(ctx, &mut m);
        m.truncate(pivots.len());
        Subspace { basis: m }
    }

    pub fn contains(&self, ctx: &PrimeFieldCtx, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        for row in &self.basis {
            let lead = row.iter().position(|&x| x != 0).expect("no zero rows in a basis");
            let f = w[lead];
            if f != 0 {
                for (wc, &rc) in w.iter_mut().zip(row) {
                    let t = ctx.mul(f, rc);
                    *wc = ctx.sub(*wc, t);
                }
            }
        }
        w.iter().all(|&x| x == 0)
    }

    pub fn contains_space(&self, ctx: &PrimeFieldCtx, other: &Subspace) -> bool {
        other.basis.iter().all(|r| self.contains(ctx, r))
    }
}

/// All `j`-dimensional subspaces of `F_p^n`, in a fixed deterministic order.
pub fn enumerate_subspaces(ctx: &PrimeFieldCtx, n: usize, j: usize) -> SubspaceIter<'_> {
    let combos = if j <= n { (0..n).combinations(j).collect() } else { Vec::new() };
    SubspaceIter { ctx, n, combos, at: 0, block: None }
}

pub struct SubspaceIter<'a> {
    ctx: &'a PrimeFieldCtx,
    n: usize,
    combos: Vec<Vec<usize>>,
    at: usize,
    block: Option<PivotBlock>,
}

/// Odometer over the free entries of one pivot-column choice.
struct PivotBlock {
    pivots: Vec<usize>,
    free: Vec<(usize, usize)>,
    counters: Vec<u32>,
    exhausted: bool,
}

impl PivotBlock {
    fn new(pivots: Vec<usize>, n: usize) -> PivotBlock {
        // Free entries sit right of the row's pivot, off the pivot columns.
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &pc)| {
                let pivots = &pivots;
                (pc + 1..n).filter(move |c| !pivots.contains(c)).map(move |c| (r, c))
            })
            .collect();
        let counters = vec![0; free.len()];
        PivotBlock { pivots, free, counters, exhausted: false }
    }

    fn emit(&self, n: usize) -> Mat {
        let mut m = vec![vec![0u32; n]; self.pivots.len()];
        for (r, &pc) in self.pivots.iter().enumerate() {
            m[r][pc] = 1;
        }
        for (&(r, c), &v) in self.free.iter().zip(&self.counters) {
            m[r][c] = v;
        }
        m
    }

    fn advance(&mut self, p: u32) {
        for slot in self.counters.iter_mut().rev() {
            *slot += 1;
            if *slot < p {
                return;
            }
            *slot = 0;
        }
        self.exhausted = true;
    }
}

impl Iterator for SubspaceIter<'_> {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        loop {
            match &mut self.block {
                Some(b) if !b.exhausted => {
                    let basis = b.emit(self.n);
                    b.advance(self.ctx.p);
                    return Some(Subspace { basis });
                }
                _ => {
                    let pivots = self.combos.get(self.at)?.clone();
                    self.at += 1;
                    self.block = Some(PivotBlock::new(pivots, self.n));
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn counts_match_gaussian_binomials() {
        let f = PrimeFieldCtx::new(3).unwrap();
        // [4, j]_3 for j = 0..=4, frozen from the product formula.
        let expected = [1usize, 40, 130, 40, 1];
        for (j, &want) in expected.iter().enumerate() {
            assert_eq!(enumerate_subspaces(&f, 4, j).count(), want, "j = {j}");
        }
        assert_eq!(enumerate_subspaces(&f, 4, 5).count(), 0);
    }

    #[test]
    fn bases_are_canonical_and_distinct() {
        let f = PrimeFieldCtx::new(5).unwrap();
        let mut seen = HashSet::new();
        for s in enumerate_subspaces(&f, 3, 2) {
            // RREF: re-reducing is a no-op, and each basis appears once.
            assert_eq!(Subspace::from_rows(&f, &s.basis), s);
            assert!(seen.insert(s.basis.clone()));
        }
        assert_eq!(seen.len(), 31); // [3, 2]_5
    }

    #[test]
    fn membership_respects_span() {
        let f = PrimeFieldCtx::new(3).unwrap();
        let plane = Subspace::from_rows(&f, &vec![vec![1, 0, 2], vec![0, 1, 1]]);
        assert!(plane.contains(&f, &[1, 1, 0]));
        assert!(!plane.contains(&f, &[0, 0, 1]));
        let line = Subspace::from_rows(&f, &vec![vec![2, 2, 0]]);
        assert!(plane.contains_space(&f, &line));
        assert!(!line.contains_space(&f, &plane));
        // Scaled and mixed rows canonicalize to the same basis.
        let again = Subspace::from_rows(&f, &vec![vec![2, 0, 1], vec![1, 1, 0]]);
        assert_eq!(again, plane);
    }
}
