use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::ffpoly::scalar::{FpScalar, PrimeModulus};

/// `t^tau * x^x`. Algebraic degree is `tau + x`.
///
/// The derived order compares the `x` exponent first, so iterating a map of
/// monomials backwards yields the canonical order: highest x-power first,
/// ties broken by highest t-power.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub x: u32,
    pub tau: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, tau: 0 };

    pub fn new(tau: u32, x: u32) -> Self {
        Monomial { x, tau }
    }

    pub fn degree(self) -> u32 {
        self.tau + self.x
    }

    pub fn times(self, other: Monomial) -> Monomial {
        Monomial {
            x: self.x + other.x,
            tau: self.tau + other.tau,
        }
    }
}

/// An element of `F_p[t, x]`, stored sparsely with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BiPoly {
    modulus: PrimeModulus,
    terms: BTreeMap<Monomial, u32>,
}

impl BiPoly {
    pub fn zero(modulus: PrimeModulus) -> Self {
        BiPoly {
            modulus,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(modulus: PrimeModulus) -> Self {
        Self::constant(modulus, 1)
    }

    pub fn constant(modulus: PrimeModulus, c: i64) -> Self {
        Self::monomial(modulus, 0, 0, c)
    }

    pub fn tau(modulus: PrimeModulus) -> Self {
        Self::monomial(modulus, 1, 0, 1)
    }

    pub fn x(modulus: PrimeModulus) -> Self {
        Self::monomial(modulus, 0, 1, 1)
    }

    /// `c * t^tau * x^x`
    pub fn monomial(modulus: PrimeModulus, tau: u32, x: u32, c: i64) -> Self {
        Self::from_terms(modulus, [(tau, x, c)])
    }

    /// `x - kappa * t`
    pub fn linear(modulus: PrimeModulus, kappa: i64) -> Self {
        Self::from_terms(modulus, [(0, 1, 1), (1, 0, -kappa)])
    }

    /// Builds from `(tau_exp, x_exp, coefficient)` triples; repeated
    /// monomials are summed.
    pub fn from_terms<I>(modulus: PrimeModulus, terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, i64)>,
    {
        let mut out = BiPoly::zero(modulus);
        for (tau, x, c) in terms {
            out.add_term(Monomial::new(tau, x), modulus.reduce(c));
        }
        out
    }

    pub(crate) fn from_raw(modulus: PrimeModulus, terms: BTreeMap<Monomial, u32>) -> Self {
        debug_assert!(terms.values().all(|&c| c != 0 && c < modulus.get()));
        BiPoly { modulus, terms }
    }

    /// Univariate polynomial in t with dense coefficients `coeffs[i]` of `t^i`.
    pub fn from_tau_coeffs(modulus: PrimeModulus, coeffs: &[u32]) -> Self {
        let terms = coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c % modulus.get() != 0)
            .map(|(i, &c)| (Monomial::new(i as u32, 0), c % modulus.get()))
            .collect();
        BiPoly { modulus, terms }
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order (highest x-power first, then highest t-power).
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Monomial, FpScalar)> + '_ {
        let m = self.modulus;
        self.terms
            .iter()
            .rev()
            .map(move |(&mono, &c)| (mono, m.scalar(c as i64)))
    }

    pub(crate) fn raw_terms(&self) -> &BTreeMap<Monomial, u32> {
        &self.terms
    }

    pub fn coeff(&self, tau: u32, x: u32) -> FpScalar {
        let c = self.terms.get(&Monomial::new(tau, x)).copied().unwrap_or(0);
        self.modulus.scalar(c as i64)
    }

    /// Total algebraic degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn low_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).min()
    }

    pub fn deg_x(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.x)
    }

    pub fn deg_tau(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.tau).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree() == self.low_degree()
    }

    /// True when the polynomial lies in `F_p[t]`.
    pub fn is_tau_only(&self) -> bool {
        self.terms.keys().all(|m| m.x == 0)
    }

    /// Coefficient of the top x-power, as a polynomial in t.
    pub fn leading_x_coeff(&self) -> BiPoly {
        let Some(d) = self.deg_x() else {
            return BiPoly::zero(self.modulus);
        };
        let terms = self
            .terms
            .range(Monomial::new(0, d)..)
            .map(|(m, &c)| (Monomial::new(m.tau, 0), c))
            .collect();
        BiPoly::from_raw(self.modulus, terms)
    }

    pub fn is_monic_in_x(&self) -> bool {
        let lead = self.leading_x_coeff();
        lead.len() == 1 && lead.coeff(0, 0).value() == 1
    }

    fn add_term(&mut self, mono: Monomial, c: u32) {
        if c == 0 {
            return;
        }
        let m = self.modulus;
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = m.add(*e.get(), c);
                if s == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn same_modulus(&self, other: &BiPoly) -> Result<PrimeModulus> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(
                self.modulus.get(),
                other.modulus.get(),
            ));
        }
        Ok(self.modulus)
    }

    pub fn checked_add(&self, other: &BiPoly) -> Result<BiPoly> {
        self.same_modulus(other)?;
        let mut out = self.clone();
        for (&mono, &c) in &other.terms {
            out.add_term(mono, c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &BiPoly) -> Result<BiPoly> {
        let m = self.same_modulus(other)?;
        let mut out = self.clone();
        for (&mono, &c) in &other.terms {
            out.add_term(mono, m.neg(c));
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &BiPoly) -> Result<BiPoly> {
        let m = self.same_modulus(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(BiPoly::zero(m));
        }
        let p = m.get() as u64;
        let mut acc: HashMap<Monomial, u64> =
            HashMap::with_capacity(self.len().saturating_mul(other.len()).min(1 << 16));
        for (&ma, &ca) in &self.terms {
            for (&mb, &cb) in &other.terms {
                let slot = acc.entry(ma.times(mb)).or_insert(0);
                *slot = (*slot + ca as u64 * cb as u64) % p;
            }
        }
        let terms = acc
            .into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|(k, c)| (k, c as u32))
            .collect();
        Ok(BiPoly::from_raw(m, terms))
    }

    pub fn scale(&self, c: FpScalar) -> BiPoly {
        assert_eq!(c.modulus(), self.modulus, "scalar from a different field");
        if c.is_zero() {
            return BiPoly::zero(self.modulus);
        }
        let m = self.modulus;
        let terms = self
            .terms
            .iter()
            .map(|(&k, &v)| (k, m.mul(v, c.value())))
            .collect();
        BiPoly::from_raw(m, terms)
    }

    /// Multiplies by `t^tau * x^x`.
    pub fn shift(&self, mono: Monomial) -> BiPoly {
        let terms = self
            .terms
            .iter()
            .map(|(&k, &v)| (k.times(mono), v))
            .collect();
        BiPoly::from_raw(self.modulus, terms)
    }

    /// `self^e` by repeated squaring; `a^0 = 1`.
    pub fn pow(&self, mut e: u64) -> BiPoly {
        let mut acc = BiPoly::one(self.modulus);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Sum of the monomials of algebraic degree exactly `d`.
    pub fn homogeneous_component(&self, d: u32) -> BiPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(k, _)| k.degree() == d)
            .map(|(&k, &v)| (k, v))
            .collect();
        BiPoly::from_raw(self.modulus, terms)
    }

    /// Long division in `x` by a divisor that is monic in `x`.
    ///
    /// Returns `(q, r)` with `self = q * divisor + r` and `deg_x r < deg_x divisor`.
    pub fn divmod_x(&self, divisor: &BiPoly) -> Result<(BiPoly, BiPoly)> {
        let m = self.same_modulus(divisor)?;
        if !divisor.is_monic_in_x() {
            return Err(Error::NonMonicDivisor);
        }
        let d = divisor.deg_x().unwrap_or(0) as usize;
        let n = match self.deg_x() {
            Some(n) if n as usize >= d => n as usize,
            _ => return Ok((BiPoly::zero(m), self.clone())),
        };

        // Dense in t for every x-level; the divisor's lower levels stay sparse.
        let mut levels: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
        for (mono, &c) in &self.terms {
            let row = &mut levels[mono.x as usize];
            let t = mono.tau as usize;
            if row.len() <= t {
                row.resize(t + 1, 0);
            }
            row[t] = c;
        }
        let mut lower: Vec<Vec<(usize, u32)>> = vec![Vec::new(); d];
        for (mono, &c) in &divisor.terms {
            if (mono.x as usize) < d {
                lower[mono.x as usize].push((mono.tau as usize, m.neg(c)));
            }
        }

        let mut quotient = BTreeMap::new();
        for j in (d..=n).rev() {
            let row = std::mem::take(&mut levels[j]);
            let shift = j - d;
            for (t, &c) in row.iter().enumerate() {
                if c != 0 {
                    quotient.insert(Monomial::new(t as u32, shift as u32), c);
                }
            }
            for (k, terms) in lower.iter().enumerate() {
                if terms.is_empty() {
                    continue;
                }
                let target = &mut levels[shift + k];
                for &(gt, gc) in terms {
                    for (t, &c) in row.iter().enumerate() {
                        if c == 0 {
                            continue;
                        }
                        let idx = t + gt;
                        if target.len() <= idx {
                            target.resize(idx + 1, 0);
                        }
                        target[idx] = m.add(target[idx], m.mul(c, gc));
                    }
                }
            }
        }

        let mut remainder = BTreeMap::new();
        for (j, row) in levels.iter().enumerate().take(d) {
            for (t, &c) in row.iter().enumerate() {
                if c != 0 {
                    remainder.insert(Monomial::new(t as u32, j as u32), c);
                }
            }
        }
        Ok((
            BiPoly::from_raw(m, quotient),
            BiPoly::from_raw(m, remainder),
        ))
    }

    pub fn rem_x(&self, divisor: &BiPoly) -> Result<BiPoly> {
        self.divmod_x(divisor).map(|(_, r)| r)
    }

    pub fn is_divisible(&self, divisor: &BiPoly) -> Result<bool> {
        Ok(self.rem_x(divisor)?.is_zero())
    }

    /// Exact quotient, or `None` when the division leaves a remainder.
    pub fn exact_div_x(&self, divisor: &BiPoly) -> Result<Option<BiPoly>> {
        let (q, r) = self.divmod_x(divisor)?;
        Ok(r.is_zero().then_some(q))
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly[p={}]({})", self.modulus, self)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&BiPoly> for &BiPoly {
            type Output = BiPoly;
            /// Panics if the operands live over different primes; use the
            /// `checked_*` form to get an error instead.
            fn $method(self, rhs: &BiPoly) -> BiPoly {
                self.$checked(rhs).expect("polynomial modulus mismatch")
            }
        }

        impl $trait<BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: BiPoly) -> BiPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        let m = self.modulus;
        let terms = self.terms.iter().map(|(&k, &v)| (k, m.neg(v))).collect();
        BiPoly::from_raw(m, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    fn poly(p: u64, s: &str) -> BiPoly {
        BiPoly::parse(s, fp(p)).unwrap()
    }

    #[test]
    fn addition_examples() {
        assert_eq!(poly(3, "x + t") + poly(3, "x + 2*t"), poly(3, "2*x"));
        let m = poly(5, "x^3 + 3*t*x + 1");
        assert_eq!(&m + &BiPoly::zero(fp(5)), m);
        assert_eq!(poly(3, "x^3 + 2*t^2*x") + poly(3, "t^2*x"), poly(3, "x^3"));
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(
            poly(5, "x + 4*t") * poly(5, "x + t"),
            poly(5, "x^2 + 4*t^2")
        );
        let m = fp(3);
        let r = (0..3).fold(BiPoly::one(m), |acc, l| acc * BiPoly::linear(m, l));
        assert_eq!(r, poly(3, "x^3 + 2*t^2*x"));
        let a = poly(7, "3*t^2*x + x^4 + 6");
        assert_eq!(&a * &BiPoly::one(fp(7)), a);
    }

    #[test]
    fn power_examples() {
        let e = poly(3, "1 + t^2");
        let by_mul = (0..3).fold(BiPoly::one(fp(3)), |acc, _| &acc * &e);
        assert_eq!(e.pow(3), by_mul);
        assert_eq!(e.pow(3), poly(3, "1 + t^6"));
        assert_eq!(e.pow(1), e);
        assert_eq!(e.pow(0), BiPoly::one(fp(3)));
        assert_eq!(poly(5, "x + 4*t").pow(5), poly(5, "x^5 + 4*t^5"));
    }

    #[test]
    fn division_examples() {
        let m = fp(3);
        let r = poly(3, "x^3 + 2*t^2*x");
        let (q, rem) = poly(3, "x^3").divmod_x(&r).unwrap();
        assert_eq!(q, BiPoly::one(m));
        assert_eq!(rem, poly(3, "t^2*x"));

        for p in [3, 5, 7] {
            let r = poly(p, &format!("x^{p} + {}*t^{}*x", p - 1, p - 1));
            let (q, rem) = r.pow(3).divmod_x(&r.pow(2)).unwrap();
            assert_eq!(q, r);
            assert!(rem.is_zero());
        }
    }

    #[test]
    fn division_below_divisor_degree_is_identity() {
        let a = poly(5, "t^7*x + 3*t^2");
        let (q, r) = a.divmod_x(&poly(5, "x^2 + t*x + t^9")).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, a);
    }

    #[test]
    fn non_monic_divisor_rejected() {
        let a = poly(5, "x^3");
        assert_eq!(a.divmod_x(&poly(5, "2*x + t")), Err(Error::NonMonicDivisor));
        assert_eq!(a.divmod_x(&poly(5, "t*x + 1")), Err(Error::NonMonicDivisor));
        assert_eq!(
            a.divmod_x(&BiPoly::zero(fp(5))),
            Err(Error::NonMonicDivisor)
        );
        // A constant 1 is monic of x-degree 0.
        assert!(a.is_divisible(&BiPoly::one(fp(5))).unwrap());
    }

    #[test]
    fn divisibility_examples() {
        assert!(poly(5, "x^2 + 4*t^2")
            .is_divisible(&poly(5, "x + 4*t"))
            .unwrap());
        for p in [3, 5, 7, 11] {
            assert!(!poly(p, "x")
                .is_divisible(&BiPoly::linear(fp(p), 1))
                .unwrap());
        }
    }

    #[test]
    fn modulus_mismatch_is_an_error() {
        let a = poly(3, "x");
        let b = poly(5, "x");
        assert_eq!(a.checked_add(&b), Err(Error::ModulusMismatch(3, 5)));
        assert_eq!(a.checked_mul(&b), Err(Error::ModulusMismatch(3, 5)));
        assert_eq!(a.divmod_x(&b).unwrap_err(), Error::ModulusMismatch(3, 5));
    }

    #[test]
    fn homogeneous_components() {
        let a = poly(5, "1 + t^2 + t^4");
        assert_eq!(a.homogeneous_component(2), poly(5, "t^2"));
        assert!(a.homogeneous_component(9).is_zero());
        assert_eq!(poly(5, "x + x^5").homogeneous_component(1), poly(5, "x"));
    }

    #[test]
    fn degrees_and_leading_coefficient() {
        let a = poly(7, "t^3*x^2 + 2*t^5*x^2 + x + t^9");
        assert_eq!(a.degree(), Some(9));
        assert_eq!(a.low_degree(), Some(1));
        assert_eq!(a.deg_x(), Some(2));
        assert_eq!(a.deg_tau(), Some(9));
        assert_eq!(a.leading_x_coeff(), poly(7, "2*t^5 + t^3"));
        assert!(!a.is_monic_in_x());
        assert!(BiPoly::zero(fp(7)).degree().is_none());
    }
}
