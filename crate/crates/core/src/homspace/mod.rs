//! Hom-spaces as kernels of a linear map over `F_p`.
//!
//! A problem `(f, delta, h)` asks for the homogeneous `m` of degree `delta`
//! in `F_p[t][x] / f` with `f | P(m) - h m`. The domain is spanned by
//! `t^i x^j` with `i + j = delta` and `j < deg_x f`. With `f = r^a`,
//! `delta = delta_a`, `h = h_a` the kernel is `M_a`, which is isomorphic to
//! `Hom^1` from `b*S^{W_a}` into `b*CP(V_a)_+`; other `f(V)` give the Hom
//! groups along the projective-space filtration.

mod matrix;

use std::collections::BTreeMap;

use serde::Serialize;

pub use matrix::FpMatrix;

use crate::error::{out_of_range, Error, Result};
use crate::ffpoly::{BiPoly, Monomial, PrimeModulus, TriPoly};
use crate::reps::{r_poly, Representation};
use crate::steenrod::{e_tau_pow, h_poly, q_of_split, total_power, Parameters, SplitPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomProblem {
    modulus: PrimeModulus,
    f: BiPoly,
    delta: u32,
    h: BiPoly,
}

impl HomProblem {
    pub fn new(f: BiPoly, delta: u32, h: BiPoly) -> Result<Self> {
        let modulus = f.modulus();
        if h.modulus() != modulus {
            return Err(Error::ModulusMismatch(modulus.get(), h.modulus().get()));
        }
        if !f.is_monic_in_x() {
            return Err(Error::NonMonicDivisor);
        }
        if !h.is_tau_only() || h.coeff(0, 0).is_zero() {
            return Err(Error::InvalidProblem(
                "h must be a polynomial in t with nonzero constant term".into(),
            ));
        }
        Ok(HomProblem {
            modulus,
            f,
            delta,
            h,
        })
    }

    /// The problem for `Hom^1(b*S^{W_a}, b*CP(V)_+)`.
    pub fn for_representation(v: &Representation, params: &Parameters) -> Self {
        assert_eq!(v.modulus(), params.p);
        HomProblem {
            modulus: params.p,
            f: v.f_poly(),
            delta: params.delta,
            h: e_tau_pow(params.p, params.epsilon),
        }
    }

    /// `(r^a, delta_a, h_a)`.
    pub fn for_ma(p: PrimeModulus, a: u32) -> Result<Self> {
        let params = Parameters::new(p, a)?;
        Ok(HomProblem {
            modulus: p,
            f: r_poly(p).pow(a as u64),
            delta: params.delta,
            h: h_poly(p, a)?,
        })
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn f(&self) -> &BiPoly {
        &self.f
    }

    pub fn delta(&self) -> u32 {
        self.delta
    }

    pub fn h(&self) -> &BiPoly {
        &self.h
    }

    fn deg_x_f(&self) -> u32 {
        self.f.deg_x().unwrap_or(0)
    }

    /// `t^(delta-j) x^j` for `j = min(delta, d-1)` down to 0, which is the
    /// canonical monomial order. Empty when `f` is constant.
    pub fn domain_basis(&self) -> Vec<Monomial> {
        let d = self.deg_x_f();
        if d == 0 {
            return Vec::new();
        }
        let top = self.delta.min(d - 1);
        (0..=top)
            .rev()
            .map(|j| Monomial::new(self.delta - j, j))
            .collect()
    }

    /// Remainder of `P(m) - h m` modulo `f`.
    pub fn defect(&self, m: &BiPoly) -> Result<BiPoly> {
        let image = total_power(m).checked_sub(&self.h.checked_mul(m)?)?;
        image.rem_x(&self.f)
    }

    /// Direct membership test: correct degree, reduced below `deg_x f`, and
    /// `f | P(m) - h m`.
    pub fn is_member(&self, m: &BiPoly) -> Result<bool> {
        if m.modulus() != self.modulus {
            return Err(Error::ModulusMismatch(
                self.modulus.get(),
                m.modulus().get(),
            ));
        }
        if m.is_zero() {
            return Ok(true);
        }
        if !m.is_homogeneous() || m.degree() != Some(self.delta) {
            return Err(Error::WrongDegree {
                expected: self.delta,
            });
        }
        if m.deg_x().unwrap_or(0) >= self.deg_x_f() {
            return Ok(false);
        }
        Ok(self.defect(m)?.is_zero())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSpace {
    problem: HomProblem,
    basis: Vec<BiPoly>,
    a: Option<u32>,
}

impl HomSpace {
    pub fn problem(&self) -> &HomProblem {
        &self.problem
    }

    /// Reduced echelon basis, leading monomials in canonical order.
    pub fn basis(&self) -> &[BiPoly] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn a(&self) -> Option<u32> {
        self.a
    }

    pub fn with_a(mut self, a: u32) -> Self {
        self.a = Some(a);
        self
    }

    /// Membership by direct divisibility; never consults the stored basis.
    pub fn contains(&self, m: &BiPoly) -> Result<bool> {
        self.problem.is_member(m)
    }

    pub fn to_report(&self) -> HomSpaceReport {
        HomSpaceReport {
            p: self.problem.modulus.get(),
            a: self.a,
            f: self.problem.f.to_string(),
            delta: self.problem.delta,
            dim: self.dim(),
            basis: self.basis.iter().map(ToString::to_string).collect(),
        }
    }
}

/// Wire form of a [`HomSpace`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomSpaceReport {
    pub p: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<u32>,
    pub f: String,
    pub delta: u32,
    pub dim: usize,
    pub basis: Vec<String>,
}

/// Computes the kernel of `m -> (P(m) - h m) mod f` on the domain basis.
pub fn hom_space(problem: &HomProblem) -> Result<HomSpace> {
    let modulus = problem.modulus;
    let domain = problem.domain_basis();

    let mut columns = Vec::with_capacity(domain.len());
    for &mono in &domain {
        let m = BiPoly::monomial(modulus, mono.tau, mono.x, 1);
        columns.push(problem.defect(&m)?);
    }

    let mut row_index: BTreeMap<Monomial, usize> = BTreeMap::new();
    for col in &columns {
        for &mono in col.raw_terms().keys() {
            let next = row_index.len();
            row_index.entry(mono).or_insert(next);
        }
    }
    let mut matrix = FpMatrix::zeros(modulus, row_index.len(), domain.len());
    for (j, col) in columns.iter().enumerate() {
        for (mono, &c) in col.raw_terms() {
            matrix.set(row_index[mono], j, c);
        }
    }

    let basis = matrix
        .nullspace()
        .into_iter()
        .map(|v| {
            let terms = domain
                .iter()
                .zip(&v)
                .filter(|(_, &c)| c != 0)
                .map(|(&mono, &c)| (mono, c))
                .collect();
            BiPoly::from_raw(modulus, terms)
        })
        .collect();

    Ok(HomSpace {
        problem: problem.clone(),
        basis,
        a: None,
    })
}

/// `M_a`.
pub fn ma_space(p: PrimeModulus, a: u32) -> Result<HomSpace> {
    Ok(hom_space(&HomProblem::for_ma(p, a)?)?.with_a(a))
}

/// Rank of the span of `polys` inside `F_p[t, x]`.
pub fn span_rank(modulus: PrimeModulus, polys: &[BiPoly]) -> usize {
    let mut cols: BTreeMap<Monomial, usize> = BTreeMap::new();
    for q in polys {
        for &mono in q.raw_terms().keys() {
            let next = cols.len();
            cols.entry(mono).or_insert(next);
        }
    }
    let rows: Vec<Vec<u32>> = polys
        .iter()
        .map(|q| {
            let mut row = vec![0u32; cols.len()];
            for (mono, &c) in q.raw_terms() {
                row[cols[mono]] = c;
            }
            row
        })
        .collect();
    FpMatrix::from_rows(modulus, cols.len(), &rows).rank()
}

/// `t^((p-1)/2 - k) x^k (k x^(p-1) + (1-k) t^(p-1))`, an element of `M_2`
/// for `0 <= k <= (p-1)/2`.
pub fn family_element(p: PrimeModulus, k: u32) -> Result<BiPoly> {
    let half = (p.get() - 1) / 2;
    if k > half {
        return Err(out_of_range("k", k, "0 <= k <= (p-1)/2"));
    }
    let q = p.get();
    let inner = BiPoly::from_terms(p, [(0, q - 1, k as i64), (q - 1, 0, 1 - k as i64)]);
    Ok(inner.shift(Monomial::new(half - k, k)))
}

pub fn family(p: PrimeModulus) -> Vec<BiPoly> {
    (0..=(p.get() - 1) / 2)
        .map(|k| family_element(p, k).expect("k in range"))
        .collect()
}

/// `m * r^(b-a)`, checked to land in `M_b`.
pub fn mul_r_shift(p: PrimeModulus, a: u32, b: u32, m: &BiPoly) -> Result<BiPoly> {
    if a < 2 || a + 1 > p.get() {
        return Err(out_of_range("a", a, "2 <= a <= p-1"));
    }
    if b < a {
        return Err(out_of_range("b", b, "b >= a"));
    }
    if !HomProblem::for_ma(p, a)?.is_member(m)? {
        return Err(Error::InvalidProblem(format!("{m} is not in M_{a}")));
    }
    let shifted = m.checked_mul(&r_poly(p).pow((b - a) as u64))?;
    if !HomProblem::for_ma(p, b)?.is_member(&shifted)? {
        return Err(Error::Consistency(format!(
            "r^{} * ({m}) is not in M_{b} for p = {p}",
            b - a
        )));
    }
    Ok(shifted)
}

/// `m / r`, checked to land in `M_{a-1}`.
pub fn div_r_shift(p: PrimeModulus, a: u32, m: &BiPoly) -> Result<BiPoly> {
    if a < 3 || a > p.get() {
        return Err(out_of_range("a", a, "3 <= a <= p"));
    }
    if !HomProblem::for_ma(p, a)?.is_member(m)? {
        return Err(Error::InvalidProblem(format!("{m} is not in M_{a}")));
    }
    let Some(q) = m.exact_div_x(&r_poly(p))? else {
        return Err(Error::Consistency(format!(
            "element {m} of M_{a} is not divisible by r for p = {p}"
        )));
    };
    if !HomProblem::for_ma(p, a - 1)?.is_member(&q)? {
        return Err(Error::Consistency(format!(
            "({m}) / r is not in M_{} for p = {p}",
            a - 1
        )));
    }
    Ok(q)
}

/// `Q(r) = r^(p-1) + (1 + t^(p-1))^(p-1)`.
pub fn verify_qr_identity(p: PrimeModulus) -> bool {
    let r = r_poly(p);
    let q = p.get();
    q_of_split(&SplitPoly::r(p)) == &r.pow(q as u64 - 1) + &e_tau_pow(p, q - 1)
}

/// For every `kappa`: `(x - kappa t)^p - t^(p-1)(x - kappa t) = r`, and the
/// factored form `-(x - kappa t)(t^(p-1) - (x - kappa t)^(p-1)) = r`.
pub fn verify_substitution_identity(p: PrimeModulus) -> bool {
    let r = r_poly(p);
    let q = p.get();
    let t_pm1 = BiPoly::monomial(p, q - 1, 0, 1);
    (0..q).all(|kappa| {
        let l = BiPoly::linear(p, kappa as i64);
        let expanded = &l.pow(q as u64) - &(&t_pm1 * &l);
        let factored = -&(&l * &(&t_pm1 - &l.pow(q as u64 - 1)));
        expanded == r && factored == r
    })
}

/// `prod_lambda (K + (x - lambda t)^(p-1)) = r^(p-1) + K (K + t^(p-1))^(p-1)`
/// in `F_p[t, x][K]`.
pub fn verify_k_lemma(p: PrimeModulus) -> bool {
    let (lhs, rhs) = k_lemma_sides(p);
    lhs == rhs
}

pub fn k_lemma_sides(p: PrimeModulus) -> (TriPoly, TriPoly) {
    let q = p.get();
    let k = TriPoly::k(p);
    let lhs = (0..q).fold(TriPoly::constant(BiPoly::one(p)), |acc, lambda| {
        let l = BiPoly::linear(p, lambda as i64).pow(q as u64 - 1);
        &acc * &(&k + &TriPoly::constant(l))
    });
    let shifted = &k + &TriPoly::constant(BiPoly::monomial(p, q - 1, 0, 1));
    let rhs = &TriPoly::constant(r_poly(p).pow(q as u64 - 1)) + &(&k * &shifted.pow(q - 1));
    (lhs, rhs)
}
