use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// An odd prime `p`, validated on construction.
///
/// Raw residues are passed around as `u32` in `[0, p)`; all products go
/// through `u64` so any prime below `2^31` is safe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeModulus(u32);

impl PrimeModulus {
    pub const MAX: u64 = (1 << 31) - 1;

    pub fn new(p: u64) -> Result<Self> {
        if p < 3 || p.is_multiple_of(2) || p > Self::MAX || !is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        Ok(PrimeModulus(p as u32))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn reduce(self, v: i64) -> u32 {
        v.rem_euclid(self.0 as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (s % self.0 as u64) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + (self.0 - b)
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    pub fn pow(self, base: u32, mut e: u64) -> u32 {
        let mut acc = 1u32;
        let mut b = base % self.0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    /// Inverse by Fermat; `None` for zero.
    pub fn inv(self, a: u32) -> Option<u32> {
        if a.is_multiple_of(self.0) {
            None
        } else {
            Some(self.pow(a, self.0 as u64 - 2))
        }
    }

    pub fn scalar(self, v: i64) -> FpScalar {
        FpScalar {
            value: self.reduce(v),
            modulus: self,
        }
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for PrimeModulus {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u32(self.0)
    }
}

/// Trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Odd primes in `[3, upper]`, ascending.
pub fn odd_primes_up_to(upper: u64) -> Vec<u64> {
    (3..=upper).step_by(2).filter(|&n| is_prime(n)).collect()
}

/// A residue mod `p` in canonical form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FpScalar {
    value: u32,
    modulus: PrimeModulus,
}

impl FpScalar {
    pub fn new(modulus: PrimeModulus, v: i64) -> Self {
        modulus.scalar(v)
    }

    pub fn zero(modulus: PrimeModulus) -> Self {
        FpScalar { value: 0, modulus }
    }

    pub fn one(modulus: PrimeModulus) -> Self {
        FpScalar { value: 1, modulus }
    }

    #[inline]
    pub fn value(self) -> u32 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> PrimeModulus {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inv(self) -> Option<FpScalar> {
        self.modulus.inv(self.value).map(|value| FpScalar {
            value,
            modulus: self.modulus,
        })
    }

    pub fn pow(self, e: u64) -> FpScalar {
        FpScalar {
            value: self.modulus.pow(self.value, e),
            modulus: self.modulus,
        }
    }

    fn check(self, other: FpScalar) -> PrimeModulus {
        assert_eq!(
            self.modulus, other.modulus,
            "scalar arithmetic across different moduli"
        );
        self.modulus
    }
}

impl fmt::Display for FpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for FpScalar {
    type Output = FpScalar;
    fn add(self, rhs: FpScalar) -> FpScalar {
        let m = self.check(rhs);
        FpScalar {
            value: m.add(self.value, rhs.value),
            modulus: m,
        }
    }
}

impl Sub for FpScalar {
    type Output = FpScalar;
    fn sub(self, rhs: FpScalar) -> FpScalar {
        let m = self.check(rhs);
        FpScalar {
            value: m.sub(self.value, rhs.value),
            modulus: m,
        }
    }
}

impl Mul for FpScalar {
    type Output = FpScalar;
    fn mul(self, rhs: FpScalar) -> FpScalar {
        let m = self.check(rhs);
        FpScalar {
            value: m.mul(self.value, rhs.value),
            modulus: m,
        }
    }
}

impl Neg for FpScalar {
    type Output = FpScalar;
    fn neg(self) -> FpScalar {
        FpScalar {
            value: self.modulus.neg(self.value),
            modulus: self.modulus,
        }
    }
}

/// Binomial coefficients mod `p` via Lucas' theorem.
#[derive(Clone, Debug)]
pub struct Binomials {
    modulus: PrimeModulus,
    fact: Vec<u32>,
    inv_fact: Vec<u32>,
}

impl Binomials {
    pub fn new(modulus: PrimeModulus) -> Self {
        let p = modulus.get() as usize;
        let mut fact = vec![1u32; p];
        for i in 1..p {
            fact[i] = modulus.mul(fact[i - 1], i as u32);
        }
        let inv_fact = fact
            .iter()
            .map(|&f| modulus.inv(f).expect("factorials below p are units"))
            .collect();
        Binomials {
            modulus,
            fact,
            inv_fact,
        }
    }

    pub fn choose(&self, mut n: u64, mut k: u64) -> u32 {
        if k > n {
            return 0;
        }
        let p = self.modulus.get() as u64;
        let mut acc = 1u32;
        while k > 0 || n > 0 {
            let (nd, kd) = ((n % p) as usize, (k % p) as usize);
            if kd > nd {
                return 0;
            }
            let c = self.modulus.mul(
                self.fact[nd],
                self.modulus.mul(self.inv_fact[kd], self.inv_fact[nd - kd]),
            );
            acc = self.modulus.mul(acc, c);
            n /= p;
            k /= p;
        }
        acc
    }
}
