//! Exact scalars and sparse Laurent polynomials in the indeterminate `q`.
//!
//! Every quantity in this crate is either a [`Rat`] (arbitrary-precision
//! rational) or a [`LaurentPoly`]: a finite sum `Σ c_e · q^e` with `c_e ∈ ℚ`
//! and `e ∈ ℤ`. Negative exponents and non-integral coefficients both occur
//! naturally in intermediate counting expressions (final counts are ordinary
//! polynomials with halves at worst), so the representation supports them
//! from the start. No floating point anywhere.
//!
//! Invariants maintained by every constructor and operation:
//!
//! * sparse map exponent → coefficient, no explicit zero coefficients;
//! * the zero polynomial is the empty map;
//! * rendering is deterministic: descending exponents, e.g.
//!   `1/2*q^4 - 1/2*q^2 + 1`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational scalar.
pub type Rat = BigRational;

/// Build a `Rat` from an integer numerator and denominator.
///
/// Panics on a zero denominator (a programming error, not an input error).
pub fn rat(num: i64, den: i64) -> Rat {
    assert!(den != 0, "rational with zero denominator");
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Errors from exact polynomial arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    /// `div_exact` was called with a divisor that does not divide the
    /// dividend in `ℚ[q, q⁻¹]`.
    #[error("polynomial division is not exact")]
    NotDivisible,
    /// `div_exact` was called with the zero polynomial as divisor.
    #[error("polynomial division by zero")]
    DivisionByZero,
    /// Evaluation at `q = 0` of a polynomial with negative exponents.
    #[error("evaluation at q = 0 with negative exponents present")]
    ZeroBase,
}

/// A Laurent polynomial `Σ c_e · q^e` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    /// Exponent → coefficient; coefficients are never zero.
    terms: BTreeMap<i64, Rat>,
}

impl LaurentPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::monomial(0, Rat::one())
    }

    /// A constant polynomial.
    pub fn constant(c: Rat) -> Self {
        Self::monomial(0, c)
    }

    /// The constant polynomial `n`.
    pub fn from_int(n: i64) -> Self {
        Self::monomial(0, Rat::from(BigInt::from(n)))
    }

    /// The monomial `q^exp` with coefficient 1 (`exp` may be negative).
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(exp, Rat::one())
    }

    /// The monomial `c · q^exp`.
    pub fn monomial(exp: i64, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// Build from raw (exponent, coefficient) pairs; repeated exponents are
    /// summed. Mostly a test convenience.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rat)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in iter {
            out.add_term(e, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(Rat::is_one)
    }

    /// Largest exponent with a nonzero coefficient, if any.
    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Smallest exponent with a nonzero coefficient, if any.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Coefficient of `q^exp` (zero when absent).
    pub fn coeff(&self, exp: i64) -> Rat {
        self.terms.get(&exp).cloned().unwrap_or_else(Rat::zero)
    }

    /// Iterate terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rat)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, exp: i64, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Multiply by the scalar `c`.
    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (*e, a.clone() * c.clone()))
                .collect(),
        }
    }

    /// Multiply by `q^shift`.
    pub fn mul_q_pow(&self, shift: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (e + shift, a.clone()))
                .collect(),
        }
    }

    /// Substitute `q ↦ q^k` for `k ≥ 1` (exponents scale by `k`).
    pub fn compose_q_pow(&self, k: i64) -> Self {
        assert!(k >= 1, "compose_q_pow requires k >= 1");
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (e * k, a.clone()))
                .collect(),
        }
    }

    /// `self^n` by repeated squaring (`n ≥ 0`).
    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        result
    }

    /// Exact division: returns `t` with `self = t · divisor`, or
    /// [`ExactError::NotDivisible`] if no such Laurent polynomial exists.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, ExactError> {
        if divisor.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // Long division from the top exponent. Laurent units q^s are
        // invertible, so divisibility is unaffected by the overall shift and
        // the loop below cannot run forever: the dividend's top exponent
        // strictly decreases while its bottom exponent is bounded below by
        // rem_min_exp - d_max + d_min ... in fact dividing the ordinary
        // polynomial parts (after factoring out q^min) is cleanest.
        let d_max = divisor.max_exp().unwrap();
        let d_min = divisor.min_exp().unwrap();
        let s_min = self.min_exp().unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        let d_lead = divisor.coeff(d_max);
        loop {
            if rem.is_zero() {
                return Ok(quot);
            }
            let r_max = rem.max_exp().unwrap();
            // Once the remainder's span drops below the divisor's span the
            // division cannot terminate exactly.
            if r_max - rem.min_exp().unwrap() < d_max - d_min || rem.min_exp().unwrap() < s_min - (d_max - d_min) {
                return Err(ExactError::NotDivisible);
            }
            let t = Self::monomial(r_max - d_max, rem.coeff(r_max) / d_lead.clone());
            quot = &quot + &t;
            rem = &rem - &(&t * divisor);
        }
    }

    /// Evaluate at `q = q0` exactly.
    ///
    /// Fails with [`ExactError::ZeroBase`] when `q0 = 0` and a negative
    /// exponent is present; `0^0 = 1` by the usual convention.
    pub fn eval_at(&self, q0: &Rat) -> Result<Rat, ExactError> {
        if q0.is_zero() {
            if self.min_exp().is_some_and(|e| e < 0) {
                return Err(ExactError::ZeroBase);
            }
            return Ok(self.coeff(0));
        }
        // Horner in two sweeps: nonnegative exponents with base q0,
        // negative exponents with base 1/q0.
        let inv = Rat::one() / q0.clone();
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let (base, k) = if *e >= 0 { (q0, *e as u64) } else { (&inv, e.unsigned_abs()) };
            let mut p = Rat::one();
            let mut b = base.clone();
            let mut k = k;
            while k > 0 {
                if k & 1 == 1 {
                    p *= b.clone();
                }
                b = b.clone() * b;
                k >>= 1;
            }
            acc += c.clone() * p;
        }
        Ok(acc)
    }

    /// Evaluate at an integer point.
    pub fn eval_at_int(&self, q0: i64) -> Result<Rat, ExactError> {
        self.eval_at(&Rat::from(BigInt::from(q0)))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            match (*e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag}*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                $trait::$method(self, &rhs)
            }
        }
    )*};
}
forward_owned_binop!(Add::add, Sub::sub, Mul::mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(pairs: &[(i64, i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(pairs.iter().map(|&(e, n, d)| (e, rat(n, d))))
    }

    #[test]
    fn canonical_no_zero_terms() {
        let a = p(&[(2, 1, 1), (2, -1, 1), (0, 3, 1)]);
        assert_eq!(a.term_count(), 1);
        assert_eq!(a, LaurentPoly::from_int(3));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn display_descending_exponents() {
        let a = p(&[(4, 1, 2), (2, -1, 2), (0, 1, 1)]);
        assert_eq!(a.to_string(), "1/2*q^4 - 1/2*q^2 + 1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p(&[(1, 1, 1), (0, 1, 1)]).to_string(), "q + 1");
        assert_eq!(p(&[(1, -1, 1)]).to_string(), "-q");
        assert_eq!(p(&[(-2, 3, 4), (3, -2, 1)]).to_string(), "-2*q^3 + 3/4*q^-2");
        assert_eq!(p(&[(0, -5, 3)]).to_string(), "-5/3");
    }

    #[test]
    fn mul_and_pow() {
        let q = LaurentPoly::q_pow(1);
        let a = &q + &LaurentPoly::one(); // q + 1
        let b = &q - &LaurentPoly::one(); // q - 1
        assert_eq!((&a * &b).to_string(), "q^2 - 1");
        assert_eq!(a.pow(2).to_string(), "q^2 + 2*q + 1");
        assert_eq!(a.pow(0), LaurentPoly::one());
        assert_eq!(LaurentPoly::q_pow(-1).pow(3), LaurentPoly::q_pow(-3));
    }

    #[test]
    fn div_exact_roundtrip_and_failures() {
        let a = p(&[(3, 1, 1), (0, -1, 1)]); // q^3 - 1
        let b = p(&[(1, 1, 1), (0, -1, 1)]); // q - 1
        assert_eq!(a.div_exact(&b).unwrap().to_string(), "q^2 + q + 1");
        assert_eq!(
            p(&[(2, 1, 1), (0, 1, 1)]).div_exact(&b),
            Err(ExactError::NotDivisible)
        );
        assert_eq!(
            a.div_exact(&LaurentPoly::zero()),
            Err(ExactError::DivisionByZero)
        );
        // Laurent shifts are units.
        let c = p(&[(-2, 1, 2), (1, 1, 1)]);
        let d = p(&[(-3, 5, 1)]);
        let t = c.div_exact(&d).unwrap();
        assert_eq!(&t * &d, c);
        assert_eq!(LaurentPoly::zero().div_exact(&b).unwrap(), LaurentPoly::zero());
    }

    #[test]
    fn eval_exact_points() {
        let a = p(&[(4, 1, 2), (2, -1, 2), (0, 1, 1)]); // 1/2 q^4 - 1/2 q^2 + 1
        assert_eq!(a.eval_at_int(3).unwrap(), rat(37, 1));
        assert_eq!(a.eval_at(&rat(1, 2)).unwrap(), rat(29, 32));
        let b = p(&[(-1, 1, 1), (1, 1, 1)]); // q^-1 + q
        assert_eq!(b.eval_at_int(2).unwrap(), rat(5, 2));
        assert_eq!(b.eval_at_int(0), Err(ExactError::ZeroBase));
        assert_eq!(a.eval_at_int(0).unwrap(), rat(1, 1));
        assert_eq!(LaurentPoly::zero().eval_at_int(0).unwrap(), rat(0, 1));
    }

    #[test]
    fn compose_q_pow_squares_base() {
        let a = p(&[(2, 1, 1), (1, 1, 1), (0, 1, 1)]);
        assert_eq!(a.compose_q_pow(2).to_string(), "q^4 + q^2 + 1");
        assert_eq!(a.compose_q_pow(1), a);
    }
}
