//! Arithmetic and linear algebra over `F_p`, `p` an odd prime.
//!
//! Matrices are dense `Vec<Vec<u32>>` with entries already reduced mod `p`;
//! everything here is sized for exhaustive enumeration in dimension ≤ 6 over
//! `p ≤ 13`, so clarity wins over cleverness.

use super::OracleError;

pub type Mat = Vec<Vec<u32>>;

/// Field context: the modulus plus a squares table and a fixed non-square.
#[derive(Debug, Clone)]
pub struct PrimeFieldCtx {
    pub p: u32,
    /// Least quadratic non-residue.
    pub nonsquare: u32,
    squares: Vec<bool>,
}

impl PrimeFieldCtx {
    pub fn new(p: u32) -> Result<Self, OracleError> {
        let is_prime = p >= 2 && (2..=p.isqrt()).all(|d| p % d != 0);
        if p % 2 == 0 || !is_prime {
            return Err(OracleError::NotOddPrime(p));
        }
        let mut squares = vec![false; p as usize];
        for x in 0..p {
            squares[(x as u64 * x as u64 % p as u64) as usize] = true;
        }
        let nonsquare = (2..p).find(|&x| !squares[x as usize]).expect("odd p has a non-residue");
        Ok(PrimeFieldCtx { p, nonsquare, squares })
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        (a as u64 * b as u64 % self.p as u64) as u32
    }

    pub fn pow(&self, mut base: u32, mut e: u32) -> u32 {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        debug_assert!(a != 0, "inverting zero");
        self.pow(a, self.p - 2)
    }

    /// The inverse of 2, used in the hyperbolic Gram blocks.
    pub fn half(&self) -> u32 {
        (self.p + 1) / 2
    }

    pub fn is_square(&self, a: u32) -> bool {
        self.squares[(a % self.p) as usize]
    }
}

/// Reduce `m` to reduced row echelon form in place; returns the pivot
/// columns in increasing order. Zero rows sink to the bottom.
pub fn rref(ctx: &PrimeFieldCtx, m: &mut Mat) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&rr| m[rr][c] != 0) else { continue };
        m.swap(r, pr);
        let inv = ctx.inv(m[r][c]);
        for x in m[r].iter_mut() {
            *x = ctx.mul(*x, inv);
        }
        for rr in 0..rows {
            if rr != r && m[rr][c] != 0 {
                let f = m[rr][c];
                for cc in 0..cols {
                    let t = ctx.mul(f, m[r][cc]);
                    m[rr][cc] = ctx.sub(m[rr][cc], t);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

pub fn rank(ctx: &PrimeFieldCtx, m: &Mat) -> usize {
    let mut c = m.clone();
    rref(ctx, &mut c).len()
}

/// Basis of the right kernel `{x : m xᵀ = 0}` of an `r × cols` matrix,
/// one row per free column of the reduced form.
pub fn kernel(ctx: &PrimeFieldCtx, m: &Mat, cols: usize) -> Mat {
    let mut red = m.clone();
    let pivots = rref(ctx, &mut red);
    let mut basis = Vec::with_capacity(cols - pivots.len());
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u32; cols];
        v[free] = 1;
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = ctx.neg(red[row][free]);
        }
        basis.push(v);
    }
    basis
}

/// `a · b` for compatibly sized matrices.
pub fn mat_mul(ctx: &PrimeFieldCtx, a: &Mat, b: &Mat) -> Mat {
    let (ra, ca) = (a.len(), if a.is_empty() { 0 } else { a[0].len() });
    let cb = if b.is_empty() { 0 } else { b[0].len() };
    debug_assert!(a.is_empty() || ca == b.len());
    let mut out = vec![vec![0u32; cb]; ra];
    for i in 0..ra {
        for (k, &aik) in a[i].iter().enumerate().take(ca) {
            if aik == 0 {
                continue;
            }
            for j in 0..cb {
                out[i][j] = ctx.add(out[i][j], ctx.mul(aik, b[k][j]));
            }
        }
    }
    out
}

pub fn transpose(m: &Mat) -> Mat {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    (0..cols).map(|c| (0..rows).map(|r| m[r][c]).collect()).collect()
}

/// Determinant of a square matrix by Gaussian elimination.
pub fn det(ctx: &PrimeFieldCtx, m: &Mat) -> u32 {
    let n = m.len();
    let mut a = m.clone();
    let mut d = 1u32;
    for c in 0..n {
        let Some(pr) = (c..n).find(|&r| a[r][c] != 0) else { return 0 };
        if pr != c {
            a.swap(c, pr);
            d = ctx.neg(d);
        }
        d = ctx.mul(d, a[c][c]);
        let inv = ctx.inv(a[c][c]);
        for r in c + 1..n {
            if a[r][c] != 0 {
                let f = ctx.mul(a[r][c], inv);
                for cc in c..n {
                    let t = ctx.mul(f, a[c][cc]);
                    a[r][cc] = ctx.sub(a[r][cc], t);
                }
            }
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn context_rejects_non_odd_primes() {
        assert!(PrimeFieldCtx::new(2).is_err());
        assert!(PrimeFieldCtx::new(9).is_err());
        assert!(PrimeFieldCtx::new(1).is_err());
        assert!(PrimeFieldCtx::new(3).is_ok());
        assert!(PrimeFieldCtx::new(13).is_ok());
    }

    #[test]
    fn least_nonsquares() {
        assert_eq!(PrimeFieldCtx::new(3).unwrap().nonsquare, 2);
        assert_eq!(PrimeFieldCtx::new(5).unwrap().nonsquare, 2);
        assert_eq!(PrimeFieldCtx::new(7).unwrap().nonsquare, 3);
        assert_eq!(PrimeFieldCtx::new(11).unwrap().nonsquare, 2);
    }

    #[test]
    fn field_arithmetic() {
        let f = PrimeFieldCtx::new(7).unwrap();
        assert_eq!(f.add(5, 4), 2);
        assert_eq!(f.sub(2, 5), 4);
        assert_eq!(f.mul(3, 5), 1);
        assert_eq!(f.inv(3), 5);
        assert_eq!(f.mul(f.half(), 2), 1);
        assert!(f.is_square(2) && !f.is_square(3));
    }

    #[test]
    fn rref_and_kernel() {
        let f = PrimeFieldCtx::new(5).unwrap();
        let mut m = vec![vec![2, 4, 1], vec![1, 2, 0]];
        let pivots = rref(&f, &mut m);
        assert_eq!(pivots, vec![0, 2]);
        assert_eq!(m, vec![vec![1, 2, 0], vec![0, 0, 1]]);
        let ker = kernel(&f, &m, 3);
        assert_eq!(ker, vec![vec![3, 1, 0]]);
        // Kernel vectors are annihilated.
        let prod = mat_mul(&f, &vec![vec![2, 4, 1], vec![1, 2, 0]], &transpose(&ker));
        assert!(prod.iter().flatten().all(|&x| x == 0));
    }

    #[test]
    fn determinants() {
        let f = PrimeFieldCtx::new(7).unwrap();
        assert_eq!(det(&f, &vec![vec![1, 2], vec![3, 4]]), f.sub(4, 6));
        assert_eq!(det(&f, &vec![vec![1, 2], vec![2, 4]]), 0);
        assert_eq!(det(&f, &Vec::new()), 1);
    }
}
