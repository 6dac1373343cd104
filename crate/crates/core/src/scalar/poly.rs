//! Dense univariate polynomials over the integers.
//!
//! Coefficients are stored lowest degree first with no trailing zeros, so the
//! zero polynomial is the empty vector and equality is structural.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * q^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    /// Builds a polynomial from coefficients listed lowest degree first.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Lowest power of `q` with a nonzero coefficient.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divides every coefficient by `c`; `c` must divide the content.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a / c).collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Divides by `q^k`; the low `k` coefficients must vanish.
    pub fn shift_down(&self, k: usize) -> Self {
        debug_assert!(self.coeffs.iter().take(k).all(Zero::is_zero));
        Self {
            coeffs: self.coeffs.iter().skip(k).cloned().collect(),
        }
    }

    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        self.div_scalar_exact(&c)
    }

    /// Pseudo-remainder of `self` by `divisor`: `lc(divisor)^(deg self - deg divisor + 1) * self mod divisor`.
    fn pseudo_rem(&self, divisor: &Self) -> Self {
        let dv = divisor.degree().expect("division by zero polynomial");
        let lc = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        while rem.len() > dv && !rem.is_empty() {
            let top = rem.len() - 1;
            let lead = rem[top].clone();
            if lead.is_zero() {
                rem.pop();
                continue;
            }
            for c in rem.iter_mut() {
                *c *= &lc;
            }
            let shift = top - dv;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] -= &lead * d;
            }
            debug_assert!(rem[top].is_zero());
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Self::from_coeffs(rem)
    }

    /// Exact division in `Z[q]`. Returns `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dv = divisor.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        if divisor.is_one() {
            return Some(self.clone());
        }
        let lc = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let top_deg = self.degree().filter(|&d| d >= dv)?;
        let mut quot = vec![BigInt::zero(); top_deg - dv + 1];
        while rem.len() > dv {
            let top = rem.len() - 1;
            if rem[top].is_zero() {
                rem.pop();
                continue;
            }
            let (qc, r) = rem[top].div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            let shift = top - dv;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] -= &qc * d;
            }
            quot[shift] = qc;
            rem.pop();
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(quot))
    }

    /// Greatest common divisor in `Z[q]`, normalized to a positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.with_positive_leading();
        }
        if other.is_zero() {
            return self.with_positive_leading();
        }
        let content = self.content().gcd(&other.content());
        // monomial fast path: covers the ubiquitous q^k denominators
        let ord = self.order().unwrap().min(other.order().unwrap());
        let a_mono = self.coeffs.len() == self.order().unwrap() + 1;
        let b_mono = other.coeffs.len() == other.order().unwrap() + 1;
        if self.is_constant() || other.is_constant() || a_mono || b_mono {
            return Self::monomial(content, ord);
        }
        let mut u = self.shift_down(self.order().unwrap()).primitive_part();
        let mut v = other.shift_down(other.order().unwrap()).primitive_part();
        if u.degree() < v.degree() {
            std::mem::swap(&mut u, &mut v);
        }
        while !v.is_zero() {
            let r = u.pseudo_rem(&v);
            u = v;
            v = r.primitive_part();
        }
        u.primitive_part().with_positive_leading().scale(&content).shift_up(ord)
    }

    fn with_positive_leading(&self) -> Self {
        match self.leading() {
            Some(lc) if lc.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| {
            acc * x + BigRational::from_integer(c.clone())
        })
    }

    /// Evaluates modulo the prime `p` at `x` (already reduced).
    pub fn eval_mod(&self, x: u64, p: u64) -> u64 {
        let pb = BigInt::from(p);
        self.coeffs.iter().rev().fold(0u64, |acc, c| {
            let c = c.mod_floor(&pb);
            let c: u64 = c.try_into().expect("reduced coefficient fits in u64");
            ((acc as u128 * x as u128 + c as u128) % p as u128) as u64
        })
    }
}

impl fmt::Display for Poly {
    /// Integer coefficients in descending degree, e.g. `q^2 - 1` or `-2*q + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let var = match k {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{k}"),
            };
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64s(c)
    }

    #[test]
    fn gcd_of_difference_of_squares() {
        // q^2 - 1 and q^2 - 2q + 1 share q - 1
        let g = p(&[-1, 0, 1]).gcd(&p(&[1, -2, 1]));
        assert_eq!(g, p(&[-1, 1]));
    }

    #[test]
    fn gcd_carries_content_and_q_power() {
        let g = p(&[0, 4, 4]).gcd(&p(&[0, 0, 6, 6]));
        assert_eq!(g, p(&[0, 2, 2]));
    }

    #[test]
    fn exact_division() {
        assert_eq!(p(&[-1, 0, 1]).div_exact(&p(&[-1, 1])), Some(p(&[1, 1])));
        assert_eq!(p(&[1, 0, 1]).div_exact(&p(&[-1, 1])), None);
        assert_eq!(p(&[2, 2]).div_exact(&p(&[2])), Some(p(&[1, 1])));
    }

    #[test]
    fn display_descending() {
        assert_eq!(p(&[-1, 0, 1]).to_string(), "q^2 - 1");
        assert_eq!(p(&[3, -2]).to_string(), "-2*q + 3");
        assert_eq!(Poly::zero().to_string(), "0");
    }
}
