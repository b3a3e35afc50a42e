use std::ops::{Add, Mul};

use crate::ffpoly::bipoly::BiPoly;
use crate::ffpoly::scalar::PrimeModulus;

/// A polynomial in an extra variable `K` with coefficients in `F_p[t, x]`.
///
/// `coeffs[e]` is the coefficient of `K^e`; the highest entry is nonzero,
/// and the zero polynomial has no entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriPoly {
    modulus: PrimeModulus,
    coeffs: Vec<BiPoly>,
}

impl TriPoly {
    pub fn zero(modulus: PrimeModulus) -> Self {
        TriPoly {
            modulus,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: BiPoly) -> Self {
        Self::from_coeffs(c.modulus(), vec![c])
    }

    /// The variable `K`.
    pub fn k(modulus: PrimeModulus) -> Self {
        Self::from_coeffs(modulus, vec![BiPoly::zero(modulus), BiPoly::one(modulus)])
    }

    pub fn from_coeffs(modulus: PrimeModulus, mut coeffs: Vec<BiPoly>) -> Self {
        assert!(
            coeffs.iter().all(|c| c.modulus() == modulus),
            "K-coefficients over different primes"
        );
        while coeffs.last().is_some_and(BiPoly::is_zero) {
            coeffs.pop();
        }
        TriPoly { modulus, coeffs }
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn coeffs(&self) -> &[BiPoly] {
        &self.coeffs
    }

    pub fn deg_k(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Substitutes a value for `K` (Horner).
    pub fn eval_k(&self, k: &BiPoly) -> BiPoly {
        self.coeffs
            .iter()
            .rev()
            .fold(BiPoly::zero(self.modulus), |acc, c| &(&acc * k) + c)
    }

    pub fn pow(&self, e: u32) -> TriPoly {
        (0..e).fold(TriPoly::constant(BiPoly::one(self.modulus)), |acc, _| {
            &acc * self
        })
    }
}

impl Add<&TriPoly> for &TriPoly {
    type Output = TriPoly;
    fn add(self, rhs: &TriPoly) -> TriPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BiPoly::zero(self.modulus);
        let coeffs = (0..n)
            .map(|e| {
                let a = self.coeffs.get(e).unwrap_or(&zero);
                let b = rhs.coeffs.get(e).unwrap_or(&zero);
                a + b
            })
            .collect();
        TriPoly::from_coeffs(self.modulus, coeffs)
    }
}

impl Mul<&TriPoly> for &TriPoly {
    type Output = TriPoly;
    fn mul(self, rhs: &TriPoly) -> TriPoly {
        if self.is_zero() || rhs.is_zero() {
            return TriPoly::zero(self.modulus);
        }
        let mut coeffs = vec![BiPoly::zero(self.modulus); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        TriPoly::from_coeffs(self.modulus, coeffs)
    }
}
