use std::fmt;

/// A residue modulo a prime. The modulus travels with the value.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    pub fn new(value: i128, modulus: u64) -> Self {
        let m = modulus as i128;
        Self {
            value: value.rem_euclid(m) as u64,
            modulus,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub(crate) fn raw(value: u64, modulus: u64) -> Self {
        debug_assert!(value < modulus);
        Self { value, modulus }
    }

    pub fn add(&self, o: &Self) -> Self {
        debug_assert_eq!(self.modulus, o.modulus);
        let s = (self.value as u128 + o.value as u128) % self.modulus as u128;
        Self::raw(s as u64, self.modulus)
    }

    pub fn neg(&self) -> Self {
        if self.value == 0 {
            *self
        } else {
            Self::raw(self.modulus - self.value, self.modulus)
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        debug_assert_eq!(self.modulus, o.modulus);
        Self::raw(mul_mod(self.value, o.value, self.modulus), self.modulus)
    }

    pub fn inv(&self) -> Option<Self> {
        (self.value != 0).then(|| Self::raw(inv_mod(self.value, self.modulus), self.modulus))
    }

    pub fn pow(&self, e: u64) -> Self {
        Self::raw(pow_mod(self.value, e, self.modulus), self.modulus)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo a prime (Fermat).
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(2_147_483_647));
        assert!(is_prime(4_294_967_291));
        assert!(!is_prime(2_147_483_649));
        assert!(!is_prime(1));
        assert!(is_prime(3));
    }

    #[test]
    fn inverse_round_trip() {
        let p = 2_147_483_647;
        let a = Fp::new(123_456_789, p);
        assert_eq!(a.mul(&a.inv().unwrap()), Fp::new(1, p));
        assert_eq!(Fp::new(-1, p).value(), p - 1);
    }
}
