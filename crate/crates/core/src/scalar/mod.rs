//! Scalars: the rational function field `Q(q)` and its specializations.
//!
//! All linear algebra in the crate is generic over [`Field`]. Three fields are
//! provided: [`ExactField`] (symbolic `q`), [`RationalField`] (`q` set to a
//! rational number) and [`PrimeField`] (`q` set to a residue modulo a large
//! prime).

mod config;
mod poly;
mod prime;
mod ratfunc;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

pub use config::{FieldConfig, ScalarMode, DEFAULT_PRIME};
pub use poly::Poly;
pub use prime::{is_prime, Fp};
pub use ratfunc::RationalFunction;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at q = {at}")]
    Pole { at: String },
    #[error("invalid field configuration: {0}")]
    InvalidConfig(String),
}

/// Arithmetic every coefficient type supports. Values are immutable and
/// results are always in canonical form, so `==` is exact equality.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self, ScalarError>;
}

/// A field containing a distinguished invertible element `q`.
pub trait Field: Clone + fmt::Debug + Send + Sync + 'static {
    type Elem: Scalar;

    #[allow(clippy::wrong_self_convention)]
    fn from_int(&self, n: i64) -> Self::Elem;
    fn q(&self) -> Self::Elem;
    fn q_inv(&self) -> Self::Elem;
    /// Maps an element of `Q(q)` into this field.
    fn specialize(&self, a: &RationalFunction) -> Result<Self::Elem, ScalarError>;
    fn config(&self) -> FieldConfig;

    fn zero(&self) -> Self::Elem {
        self.from_int(0)
    }

    fn one(&self) -> Self::Elem {
        self.from_int(1)
    }

    fn q_pow(&self, k: i64) -> Self::Elem {
        let base = if k >= 0 { self.q() } else { self.q_inv() };
        (0..k.unsigned_abs()).fold(self.one(), |acc, _| acc.mul(&base))
    }

    /// `q^{-1} - q`, the off-diagonal Hecke coefficient.
    fn hecke_defect(&self) -> Self::Elem {
        self.q_inv().sub(&self.q())
    }
}

impl Scalar for RationalFunction {
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn is_one(&self) -> bool {
        RationalFunction::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        RationalFunction::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        RationalFunction::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        RationalFunction::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        RationalFunction::neg(self)
    }
    fn inv(&self) -> Result<Self, ScalarError> {
        RationalFunction::inv(self)
    }
}

/// An exact rational number.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Rational(pub BigRational);

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Scalar for Rational {
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
    fn add(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Rational(&self.0 - &rhs.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }
    fn neg(&self) -> Self {
        Rational(-&self.0)
    }
    fn inv(&self) -> Result<Self, ScalarError> {
        if self.0.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }
}

impl Scalar for Fp {
    fn is_zero(&self) -> bool {
        self.value() == 0
    }
    fn is_one(&self) -> bool {
        self.value() == 1
    }
    fn add(&self, rhs: &Self) -> Self {
        Fp::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Fp::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Fp::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        Fp::neg(self)
    }
    fn inv(&self) -> Result<Self, ScalarError> {
        Fp::inv(self).ok_or(ScalarError::DivisionByZero)
    }
}

/// `Q(q)` with `q` transcendental.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ExactField;

impl Field for ExactField {
    type Elem = RationalFunction;

    fn from_int(&self, n: i64) -> RationalFunction {
        RationalFunction::from_int(n)
    }
    fn q(&self) -> RationalFunction {
        RationalFunction::q()
    }
    fn q_inv(&self) -> RationalFunction {
        RationalFunction::q_pow(-1)
    }
    fn q_pow(&self, k: i64) -> RationalFunction {
        RationalFunction::q_pow(k)
    }
    fn specialize(&self, a: &RationalFunction) -> Result<RationalFunction, ScalarError> {
        Ok(a.clone())
    }
    fn config(&self) -> FieldConfig {
        FieldConfig::Exact
    }
}

/// `Q` with `q` evaluated at a rational `q0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalField {
    q0: Rational,
    q0_inv: Rational,
}

impl RationalField {
    pub fn new(q0: BigRational) -> Result<Self, ScalarError> {
        if q0.is_zero() || q0.is_one() || q0 == -BigRational::one() {
            return Err(ScalarError::InvalidConfig(format!("q0 = {q0} must avoid 0 and ±1")));
        }
        Ok(Self {
            q0_inv: Rational(q0.recip()),
            q0: Rational(q0),
        })
    }

    pub fn q0(&self) -> &BigRational {
        &self.q0.0
    }
}

impl Field for RationalField {
    type Elem = Rational;

    fn from_int(&self, n: i64) -> Rational {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }
    fn q(&self) -> Rational {
        self.q0.clone()
    }
    fn q_inv(&self) -> Rational {
        self.q0_inv.clone()
    }
    fn specialize(&self, a: &RationalFunction) -> Result<Rational, ScalarError> {
        a.evaluate(&self.q0.0).map(Rational)
    }
    fn config(&self) -> FieldConfig {
        FieldConfig::Rational { q0: self.q0.0.clone() }
    }
}

/// `F_p` with `q` evaluated at a residue `q0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
    q0: Fp,
    q0_inv: Fp,
}

impl PrimeField {
    pub fn new(p: u64, q0: u64) -> Result<Self, ScalarError> {
        if !is_prime(p) || p <= 1 << 30 || p >= 1 << 62 {
            return Err(ScalarError::InvalidConfig(format!(
                "modulus {p} must be a prime in (2^30, 2^62)"
            )));
        }
        let q0 = Fp::new(q0 as i128, p);
        if q0.value() == 0 || q0.value() == 1 || q0.value() == p - 1 {
            return Err(ScalarError::InvalidConfig(format!(
                "q0 = {} must avoid 0 and ±1 mod {p}",
                q0.value()
            )));
        }
        Ok(Self {
            p,
            q0,
            q0_inv: q0.inv().expect("nonzero residue"),
        })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn q0(&self) -> u64 {
        self.q0.value()
    }
}

impl Field for PrimeField {
    type Elem = Fp;

    fn from_int(&self, n: i64) -> Fp {
        Fp::new(n as i128, self.p)
    }
    fn q(&self) -> Fp {
        self.q0
    }
    fn q_inv(&self) -> Fp {
        self.q0_inv
    }
    fn q_pow(&self, k: i64) -> Fp {
        let base = if k >= 0 { self.q0 } else { self.q0_inv };
        base.pow(k.unsigned_abs())
    }
    fn specialize(&self, a: &RationalFunction) -> Result<Fp, ScalarError> {
        a.evaluate_mod(self.q0.value(), self.p).map(|v| Fp::raw(v, self.p))
    }
    fn config(&self) -> FieldConfig {
        FieldConfig::Prime {
            p: self.p,
            q0: self.q0.value(),
        }
    }
}

/// Runs `$body` with `$f` bound to a reference to the concrete field named by
/// a [`FieldConfig`]. The body must evaluate to the same type in every arm.
#[macro_export]
macro_rules! with_field {
    ($cfg:expr, $f:ident => $body:expr) => {{
        match $cfg.clone() {
            $crate::scalar::FieldConfig::Exact => {
                let $f = &$crate::scalar::ExactField;
                $body
            }
            $crate::scalar::FieldConfig::Rational { q0 } => {
                let field = $crate::scalar::RationalField::new(q0).expect("FieldConfig is validated on construction");
                let $f = &field;
                $body
            }
            $crate::scalar::FieldConfig::Prime { p, q0 } => {
                let field = $crate::scalar::PrimeField::new(p, q0).expect("FieldConfig is validated on construction");
                let $f = &field;
                $body
            }
        }
    }};
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specialize_evaluates() {
        let f = RationalField::new(BigRational::from_integer(2.into())).unwrap();
        let a = RationalFunction::q().add(&RationalFunction::one());
        assert_eq!(f.specialize(&a).unwrap(), f.from_int(3));
    }

    #[test]
    fn specialization_pole_is_reported() {
        let f = PrimeField::new(DEFAULT_PRIME, 5).unwrap();
        // 1/(q - 5) at q0 = 5
        let a = RationalFunction::new(Poly::one(), Poly::from_i64s(&[-5, 1])).unwrap();
        assert!(matches!(f.specialize(&a), Err(ScalarError::Pole { .. })));
    }

    #[test]
    fn field_rejects_degenerate_q() {
        assert!(RationalField::new(BigRational::one()).is_err());
        assert!(PrimeField::new(DEFAULT_PRIME, DEFAULT_PRIME - 1).is_err());
        assert!(PrimeField::new(1_000_003, 7).is_err());
    }

    #[test]
    fn q_powers_agree_across_fields() {
        let f = PrimeField::new(DEFAULT_PRIME, 12345).unwrap();
        let e = ExactField;
        for k in -4..=4 {
            assert_eq!(f.specialize(&e.q_pow(k)).unwrap(), f.q_pow(k));
        }
    }
}
