//! Exact arithmetic in the prime field GF(p), plus the number-theoretic
//! helpers the transform construction needs: modular square roots, element
//! orders, and validation of the (p, N) parameter pair.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("{0} is not an odd prime >= 3")]
    NotAnOddPrime(u64),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
}

/// Deterministic trial division up to sqrt(n).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// A validated odd prime modulus p >= 3.
///
/// p = 2 is excluded: halving by 2^-1 is used throughout the even/odd
/// sequence decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self, GfError> {
        if p < 3 || !is_prime(p) {
            return Err(GfError::NotAnOddPrime(p));
        }
        Ok(Self(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// The residue of `value`, reduced into [0, p-1].
    pub fn residue(self, value: u64) -> Residue {
        Residue {
            value: value % self.0,
            modulus: self,
        }
    }

    pub fn zero(self) -> Residue {
        self.residue(0)
    }

    pub fn one(self) -> Residue {
        self.residue(1)
    }

    /// -1 has a square root in GF(p) exactly when p = 1 (mod 4).
    pub fn has_root_of_minus_one(self) -> bool {
        self.0 % 4 == 1
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An element of GF(p); the value is always reduced into [0, p-1].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    modulus: PrimeModulus,
}

impl Residue {
    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> PrimeModulus {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn same_field(self, other: Residue) -> u64 {
        assert_eq!(
            self.modulus, other.modulus,
            "modulus mismatch: {} vs {}",
            self.modulus, other.modulus
        );
        self.modulus.0
    }

    /// a^e mod p by square-and-multiply.
    pub fn pow(self, mut e: u64) -> Residue {
        let p = self.modulus.0;
        let mut base = self.value;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_mod(acc, base, p);
            }
            base = mul_mod(base, base, p);
            e >>= 1;
        }
        self.modulus.residue(acc)
    }

    /// a^(p-2) mod p, by Fermat.
    pub fn inv(self) -> Result<Residue, GfError> {
        if self.value == 0 {
            return Err(GfError::ZeroInverse);
        }
        Ok(self.pow(self.modulus.0 - 2))
    }
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

impl Add for Residue {
    type Output = Residue;
    fn add(self, rhs: Residue) -> Residue {
        let p = self.same_field(rhs);
        self.modulus.residue((self.value + rhs.value) % p)
    }
}

impl Sub for Residue {
    type Output = Residue;
    fn sub(self, rhs: Residue) -> Residue {
        let p = self.same_field(rhs);
        self.modulus.residue((self.value + p - rhs.value) % p)
    }
}

impl Mul for Residue {
    type Output = Residue;
    fn mul(self, rhs: Residue) -> Residue {
        let p = self.same_field(rhs);
        self.modulus.residue(mul_mod(self.value, rhs.value, p))
    }
}

impl Neg for Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        let p = self.modulus.0;
        self.modulus.residue((p - self.value) % p)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Both square roots of `a` in GF(p), or `None` when `a` is a non-residue.
///
/// The first root is the canonical representative in [1, (p-1)/2]; the
/// second is its negation. `sqrt_mod(0)` is `(0, 0)`. Roots are found by
/// exhaustive scan, which is exact and fast at desk-scale p.
pub fn sqrt_mod(a: Residue) -> Option<(Residue, Residue)> {
    let p = a.modulus().get();
    if a.is_zero() {
        return Some((a, a));
    }
    if a.pow((p - 1) / 2).value() != 1 {
        return None;
    }
    for b in 1..=(p - 1) / 2 {
        if mul_mod(b, b, p) == a.value() {
            return Some((a.modulus().residue(b), a.modulus().residue(p - b)));
        }
    }
    unreachable!("quadratic residue with no root");
}

/// True when `a` has multiplicative order exactly `n`.
pub fn has_order(a: Residue, n: u64) -> bool {
    if a.is_zero() || n == 0 {
        return false;
    }
    if a.pow(n).value() != 1 {
        return false;
    }
    for q in prime_factors(n) {
        if a.pow(n / q).value() == 1 {
            return false;
        }
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// The smallest residue with multiplicative order exactly `n`, or `None`
/// when no such element exists (i.e. when n does not divide p-1).
pub fn element_of_order(n: u64, p: PrimeModulus) -> Option<Residue> {
    if n == 0 || (p.get() - 1) % n != 0 {
        return None;
    }
    if n == 1 {
        return Some(p.one());
    }
    (2..p.get())
        .map(|a| p.residue(a))
        .find(|&a| has_order(a, n))
}

/// Definition-level validity of the (p, N) pair: N divides p-1 and N is a
/// quadratic residue of p, so that an order-N element and sqrt(N) both exist.
pub fn is_valid_fntt_params(p: PrimeModulus, n: u64) -> bool {
    if n == 0 || (p.get() - 1) % n != 0 {
        return false;
    }
    p.residue(n).pow((p.get() - 1) / 2).value() == 1
}
