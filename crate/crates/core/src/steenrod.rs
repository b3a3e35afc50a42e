//! The total Steenrod power on `F_p[t, x]` and the parameters attached to
//! the pair `(p, a)`.
//!
//! `P` is the ring endomorphism with `t -> t + t^p` and `x -> x + x^p`.
//! Its homogeneous components are the individual reduced powers; `P^0` is
//! the identity, so the bottom component of `P(m)` is `m` itself.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::{out_of_range, Result};
use crate::ffpoly::{BiPoly, Binomials, FpScalar, Monomial, PrimeModulus};

/// Coefficients of `(1 + y^(p-1))^n` indexed by the exponent of `y`.
fn power_series_of_e(binom: &Binomials, p: u32, n: u32) -> Vec<(u32, u32)> {
    (0..=n)
        .filter_map(|l| {
            let c = binom.choose(n as u64, l as u64);
            (c != 0).then_some((l * (p - 1), c))
        })
        .collect()
}

/// `P(m)`, expanded from the closed form
/// `P(t^i x^j) = t^i (1 + t^(p-1))^i * x^j (1 + x^(p-1))^j`.
pub fn total_power(m: &BiPoly) -> BiPoly {
    let modulus = m.modulus();
    let p = modulus.get();
    let binom = Binomials::new(modulus);
    let mut tau_cache: HashMap<u32, Vec<(u32, u32)>> = HashMap::new();
    let mut x_cache: HashMap<u32, Vec<(u32, u32)>> = HashMap::new();
    let mut acc: HashMap<Monomial, u32> = HashMap::new();

    for (mono, c) in m.terms() {
        let ts = tau_cache
            .entry(mono.tau)
            .or_insert_with(|| power_series_of_e(&binom, p, mono.tau))
            .clone();
        let xs = x_cache
            .entry(mono.x)
            .or_insert_with(|| power_series_of_e(&binom, p, mono.x));
        for &(te, tc) in &ts {
            let tc = modulus.mul(tc, c.value());
            for &(xe, xc) in xs.iter() {
                let key = Monomial::new(mono.tau + te, mono.x + xe);
                let slot = acc.entry(key).or_insert(0);
                *slot = modulus.add(*slot, modulus.mul(tc, xc));
            }
        }
    }
    let terms: BTreeMap<Monomial, u32> = acc.into_iter().filter(|&(_, c)| c != 0).collect();
    BiPoly::from_raw(modulus, terms)
}

/// The integers attached to `(p, a)`: `epsilon = (2a-1)(p-1)/2` and
/// `delta = pa - (p+3)/2`, the algebraic degree of `M_a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Parameters {
    pub p: PrimeModulus,
    pub a: u32,
    pub epsilon: u32,
    pub delta: u32,
}

impl Parameters {
    pub fn new(p: PrimeModulus, a: u32) -> Result<Self> {
        if a < 2 {
            return Err(out_of_range("a", a, "a >= 2"));
        }
        let q = p.get();
        let epsilon = (2 * a - 1) * (q - 1) / 2;
        let delta = q * a - (q + 3) / 2;
        Ok(Parameters {
            p,
            a,
            epsilon,
            delta,
        })
    }
}

pub fn parameters(p: PrimeModulus, a: u32) -> Result<Parameters> {
    Parameters::new(p, a)
}

/// `(1 + t^(p-1))^n`, written out from binomial coefficients.
pub fn e_tau_pow(p: PrimeModulus, n: u32) -> BiPoly {
    let binom = Binomials::new(p);
    let terms = power_series_of_e(&binom, p.get(), n)
        .into_iter()
        .map(|(e, c)| (Monomial::new(e, 0), c))
        .collect();
    BiPoly::from_raw(p, terms)
}

/// `h_a = (1 + t^(p-1))^epsilon_a`.
pub fn h_poly(p: PrimeModulus, a: u32) -> Result<BiPoly> {
    let params = Parameters::new(p, a)?;
    Ok(e_tau_pow(p, params.epsilon))
}

/// `unit * t^tau_power * prod_j (x - kappa_j t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPoly {
    modulus: PrimeModulus,
    unit: FpScalar,
    factors: Vec<FpScalar>,
    tau_power: u32,
}

impl SplitPoly {
    pub fn new(modulus: PrimeModulus, unit: i64, factors: &[i64], tau_power: u32) -> Self {
        SplitPoly {
            modulus,
            unit: modulus.scalar(unit),
            factors: factors.iter().map(|&k| modulus.scalar(k)).collect(),
            tau_power,
        }
    }

    /// `r = prod over all kappa in F_p of (x - kappa t)`.
    pub fn r(modulus: PrimeModulus) -> Self {
        let all: Vec<i64> = (0..modulus.get() as i64).collect();
        Self::new(modulus, 1, &all, 0)
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn factors(&self) -> &[FpScalar] {
        &self.factors
    }

    pub fn tau_power(&self) -> u32 {
        self.tau_power
    }

    pub fn degree(&self) -> u32 {
        self.tau_power + self.factors.len() as u32
    }

    /// Product of the two factorizations.
    pub fn times(&self, other: &SplitPoly) -> SplitPoly {
        assert_eq!(self.modulus, other.modulus);
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        SplitPoly {
            modulus: self.modulus,
            unit: self.unit * other.unit,
            factors,
            tau_power: self.tau_power + other.tau_power,
        }
    }

    pub fn expand(&self) -> BiPoly {
        let m = self.modulus;
        let start = BiPoly::monomial(m, self.tau_power, 0, self.unit.value() as i64);
        self.factors
            .iter()
            .fold(start, |acc, k| &acc * &BiPoly::linear(m, k.value() as i64))
    }
}

/// `Q(m) = P(m) / m` for split `m`:
/// `(1 + t^(p-1))^e * prod_j (1 + (x - kappa_j t)^(p-1))`.
pub fn q_of_split(m: &SplitPoly) -> BiPoly {
    let modulus = m.modulus;
    let pm1 = modulus.get() as u64 - 1;
    let one = BiPoly::one(modulus);
    m.factors
        .iter()
        .fold(e_tau_pow(modulus, m.tau_power), |acc, k| {
            let l = BiPoly::linear(modulus, k.value() as i64);
            &acc * &(&one + &l.pow(pm1))
        })
}
