use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::prime::{is_prime, pow_mod};
use super::ScalarError;

/// 2^31 - 1.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

/// A fully resolved choice of scalar field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldConfig {
    Exact,
    Rational { q0: BigRational },
    Prime { p: u64, q0: u64 },
}

impl FieldConfig {
    pub fn rational(q0: BigRational) -> Result<Self, ScalarError> {
        super::RationalField::new(q0.clone())?;
        Ok(Self::Rational { q0 })
    }

    pub fn prime(p: u64, q0: u64) -> Result<Self, ScalarError> {
        let f = super::PrimeField::new(p, q0)?;
        Ok(Self::Prime { p, q0: f.q0() })
    }

    /// Draws `q0` uniformly from the residues modulo `p` whose multiplicative
    /// order exceeds `order_bound`, so that `q0^k != 1` for `1 <= k <= order_bound`.
    pub fn random_prime(p: u64, seed: u64, order_bound: u64) -> Result<Self, ScalarError> {
        if !is_prime(p) || p <= 1 << 30 || p >= 1 << 62 {
            return Err(ScalarError::InvalidConfig(format!(
                "modulus {p} must be a prime in (2^30, 2^62)"
            )));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let q0 = rng.gen_range(2..p - 1);
            if (1..=order_bound).all(|k| pow_mod(q0, k, p) != 1) {
                return Self::prime(p, q0);
            }
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Self::Exact)
    }
}

impl fmt::Display for FieldConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Exact => write!(f, "exact"),
            Self::Rational { q0 } => write!(f, "qnum:{q0}"),
            Self::Prime { p, q0 } => write!(f, "fp:{p}:q0={q0}"),
        }
    }
}

/// A scalar choice as written on the command line, before any random `q0`
/// has been drawn: `exact`, `qnum:<rational>`, `fp` or `fp:<prime>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScalarMode {
    Exact,
    QNum(BigRational),
    Fp(u64),
}

impl ScalarMode {
    /// Resolves to a concrete field; `attempt` perturbs the seed for retries.
    pub fn resolve(&self, seed: u64, attempt: u64, order_bound: u64) -> Result<FieldConfig, ScalarError> {
        match self {
            Self::Exact => Ok(FieldConfig::Exact),
            Self::QNum(q0) => FieldConfig::rational(q0.clone()),
            Self::Fp(p) => FieldConfig::random_prime(
                *p,
                seed.wrapping_add(attempt.wrapping_mul(0x9E37_79B9_7F4A_7C15)),
                order_bound,
            ),
        }
    }

    pub fn is_specialization(&self) -> bool {
        !matches!(self, Self::Exact)
    }
}

impl FromStr for ScalarMode {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |msg: String| ScalarError::InvalidConfig(msg);
        match s {
            "exact" => return Ok(Self::Exact),
            "fp" => return Ok(Self::Fp(DEFAULT_PRIME)),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("qnum:") {
            let q0 = parse_rational(rest).ok_or_else(|| bad(format!("bad rational `{rest}`")))?;
            if q0.is_zero() || q0.is_one() || q0 == -BigRational::one() {
                return Err(bad(format!("q0 = {q0} must avoid 0 and ±1")));
            }
            return Ok(Self::QNum(q0));
        }
        if let Some(rest) = s.strip_prefix("fp:") {
            let p: u64 = rest.parse().map_err(|_| bad(format!("bad prime `{rest}`")))?;
            if !is_prime(p) || p <= 1 << 30 || p >= 1 << 62 {
                return Err(bad(format!("modulus {p} must be a prime in (2^30, 2^62)")));
            }
            return Ok(Self::Fp(p));
        }
        Err(bad(format!(
            "unknown scalar mode `{s}` (expected exact, qnum:<rational> or fp[:<prime>])"
        )))
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            (!d.is_zero()).then(|| BigRational::new(n, d))
        }
        None => s.trim().parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_modes() {
        assert_eq!("exact".parse::<ScalarMode>().unwrap(), ScalarMode::Exact);
        assert_eq!("fp".parse::<ScalarMode>().unwrap(), ScalarMode::Fp(DEFAULT_PRIME));
        assert_eq!(
            "qnum:3/2".parse::<ScalarMode>().unwrap(),
            ScalarMode::QNum(BigRational::new(3.into(), 2.into()))
        );
        assert!("qnum:1".parse::<ScalarMode>().is_err());
        assert!("qnum:-2/2".parse::<ScalarMode>().is_err());
        assert!("fp:97".parse::<ScalarMode>().is_err());
        assert!("float".parse::<ScalarMode>().is_err());
    }

    #[test]
    fn random_prime_is_seeded() {
        let a = FieldConfig::random_prime(DEFAULT_PRIME, 7, 10).unwrap();
        let b = FieldConfig::random_prime(DEFAULT_PRIME, 7, 10).unwrap();
        let c = FieldConfig::random_prime(DEFAULT_PRIME, 8, 10).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }
}
