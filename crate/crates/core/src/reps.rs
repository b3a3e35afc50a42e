//! Complex representations of the cyclic group of order `p`, stored as
//! weight multisets, and their polynomials `f(V) = prod_j (x - alpha_j t)`.
//!
//! `F_p[t][x] / f(V)` models the Borel cohomology of `CP(V)_+` with `x`
//! standing for the first Chern class of the tautological line.

use serde::{Serialize, Serializer};

use crate::error::{out_of_range, Result};
use crate::ffpoly::{BiPoly, FpScalar, PrimeModulus};

/// `V = ⊕ C(alpha_j)`, weights kept sorted as residues in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Representation {
    modulus: PrimeModulus,
    weights: Vec<u32>,
}

impl Representation {
    pub fn new<I: IntoIterator<Item = i64>>(modulus: PrimeModulus, weights: I) -> Self {
        let mut weights: Vec<u32> = weights.into_iter().map(|w| modulus.reduce(w)).collect();
        weights.sort_unstable();
        Representation { modulus, weights }
    }

    pub fn zero(modulus: PrimeModulus) -> Self {
        Representation {
            modulus,
            weights: Vec::new(),
        }
    }

    /// The regular representation `CG`: every weight once.
    pub fn regular(modulus: PrimeModulus) -> Self {
        Self::new(modulus, 0..modulus.get() as i64)
    }

    /// `V_n = n CG`.
    pub fn regular_multiple(modulus: PrimeModulus, n: u32) -> Self {
        let regular = Self::regular(modulus);
        (0..n).fold(Self::zero(modulus), |acc, _| acc.direct_sum(&regular))
    }

    /// `U_k = C(0) ⊕ … ⊕ C(k-1)`, the k-th step of the flag in `CG`.
    pub fn flag(modulus: PrimeModulus, k: u32) -> Result<Self> {
        if k > modulus.get() {
            return Err(out_of_range("k", k, "0 <= k <= p"));
        }
        Ok(Self::new(modulus, 0..k as i64))
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn direct_sum(&self, other: &Representation) -> Representation {
        assert_eq!(
            self.modulus, other.modulus,
            "representations of different groups"
        );
        let mut weights = self.weights.clone();
        weights.extend_from_slice(&other.weights);
        weights.sort_unstable();
        Representation {
            modulus: self.modulus,
            weights,
        }
    }

    /// `f(V)`: monic in `x` of x-degree `dim V`, homogeneous of degree `dim V`.
    pub fn f_poly(&self) -> BiPoly {
        let m = self.modulus;
        self.weights.iter().fold(BiPoly::one(m), |acc, &w| {
            &acc * &BiPoly::linear(m, w as i64)
        })
    }

    /// Scalars `e_j` with `c_j(V) = e_j t^j`: the elementary symmetric
    /// functions of the weights, `j = 0..=dim V`.
    pub fn chern_classes(&self) -> Vec<FpScalar> {
        let m = self.modulus;
        let mut e = vec![0u32; self.dim() + 1];
        e[0] = 1;
        for (n, &w) in self.weights.iter().enumerate() {
            for j in (1..=n + 1).rev() {
                e[j] = m.add(e[j], m.mul(e[j - 1], w));
            }
        }
        e.into_iter().map(|c| m.scalar(c as i64)).collect()
    }

    /// Reassembles `sum_j (-1)^j c_j t^j x^(n-j)`, which equals `f(V)`.
    pub fn polynomial_from_chern(classes: &[FpScalar]) -> Option<BiPoly> {
        let m = classes.first()?.modulus();
        let n = classes.len() as u32 - 1;
        let terms = classes.iter().enumerate().map(|(j, c)| {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            (j as u32, n - j as u32, sign * c.value() as i64)
        });
        Some(BiPoly::from_terms(m, terms))
    }
}

impl Serialize for Representation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            p: u32,
            weights: &'a [u32],
        }
        Wire {
            p: self.modulus.get(),
            weights: &self.weights,
        }
        .serialize(s)
    }
}

/// `r = x^p - t^(p-1) x`, the polynomial of the regular representation.
pub fn r_poly(modulus: PrimeModulus) -> BiPoly {
    let p = modulus.get();
    BiPoly::from_terms(modulus, [(0, p, 1), (p - 1, 1, -1)])
}

/// `V_{a-1} ⊕ U_k`, interpolating between `V_{a-1}` (k = 0) and `V_a` (k = p).
pub fn filtration_rep(modulus: PrimeModulus, a: u32, k: u32) -> Result<Representation> {
    if a < 2 {
        return Err(out_of_range("a", a, "a >= 2"));
    }
    Ok(Representation::regular_multiple(modulus, a - 1)
        .direct_sum(&Representation::flag(modulus, k)?))
}

/// `V_{a-2} ⊕ U_k`, interpolating between `V_{a-2}` and `V_{a-1}`.
pub fn pre_filtration_rep(modulus: PrimeModulus, a: u32, k: u32) -> Result<Representation> {
    if a < 2 {
        return Err(out_of_range("a", a, "a >= 2"));
    }
    Ok(Representation::regular_multiple(modulus, a - 2)
        .direct_sum(&Representation::flag(modulus, k)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fp(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    fn poly(p: u64, s: &str) -> BiPoly {
        BiPoly::parse(s, fp(p)).unwrap()
    }

    #[test]
    fn f_examples() {
        assert_eq!(Representation::new(fp(5), [1]).f_poly(), poly(5, "x + 4*t"));
        assert_eq!(
            Representation::regular(fp(3)).f_poly(),
            poly(3, "x^3 + 2*t^2*x")
        );
        for p in [3u64, 5, 7] {
            let m = fp(p);
            let r = Representation::regular(m).f_poly();
            assert_eq!(Representation::regular_multiple(m, 2).f_poly(), r.pow(2));
            assert_eq!(r_poly(m), r);
        }
        assert_eq!(r_poly(fp(5)), poly(5, "x^5 + 4*t^4*x"));
    }

    #[test]
    fn weights_are_canonical_residues() {
        let v = Representation::new(fp(5), [7, -1, 0, 12]);
        assert_eq!(v.weights(), &[0, 2, 2, 4]);
    }

    #[test]
    fn chern_class_examples() {
        let m = fp(5);
        let v = Representation::new(m, [1, 2]);
        let c: Vec<u32> = v.chern_classes().iter().map(|c| c.value()).collect();
        assert_eq!(c, vec![1, 3, 2]);
        assert_eq!(
            &BiPoly::linear(m, 1) * &BiPoly::linear(m, 2),
            Representation::polynomial_from_chern(&v.chern_classes()).unwrap()
        );
        for p in [3u64, 5, 7, 11] {
            let c = Representation::regular(fp(p)).chern_classes();
            let pi = p as usize;
            assert_eq!(c[0].value(), 1);
            for (j, cj) in c.iter().enumerate().take(pi - 1).skip(1) {
                assert!(cj.is_zero(), "c_{j} for p = {p}");
            }
            assert_eq!(c[pi - 1].value() as u64, p - 1);
            assert!(c[pi].is_zero());
        }
        assert_eq!(Representation::zero(m).chern_classes()[0].value(), 1);
    }

    #[test]
    fn filtration_examples() {
        let v = filtration_rep(fp(3), 2, 0).unwrap();
        assert_eq!(v.weights(), &[0, 1, 2]);
        let v = filtration_rep(fp(3), 2, 3).unwrap();
        assert_eq!(v.weights(), &[0, 0, 1, 1, 2, 2]);
        assert_eq!(filtration_rep(fp(5), 2, 2).unwrap().dim(), 7);
        assert!(filtration_rep(fp(5), 2, 6).is_err());
        assert!(filtration_rep(fp(5), 1, 0).is_err());
        assert_eq!(
            pre_filtration_rep(fp(5), 2, 3).unwrap().weights(),
            &[0, 1, 2]
        );
    }

    #[test]
    fn filtration_polynomials() {
        for p in [3u64, 5, 7] {
            let m = fp(p);
            for a in 2..4 {
                let base = r_poly(m).pow(a as u64 - 1);
                for k in 0..=p as u32 {
                    let expected =
                        (0..k).fold(base.clone(), |acc, al| &acc * &BiPoly::linear(m, al as i64));
                    assert_eq!(filtration_rep(m, a, k).unwrap().f_poly(), expected);
                }
            }
        }
    }

    #[test]
    fn json_encoding() {
        let v = Representation::new(fp(5), [3, 1, 1]);
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"p":5,"weights":[1,1,3]}"#
        );
    }

    fn rep_strategy() -> impl Strategy<Value = (Representation, Representation)> {
        (
            prop::sample::select(vec![3u64, 5, 7, 11]),
            prop::collection::vec(0i64..11, 0..7),
            prop::collection::vec(0i64..11, 0..7),
        )
            .prop_map(|(p, a, b)| (Representation::new(fp(p), a), Representation::new(fp(p), b)))
    }

    proptest! {
        #[test]
        fn f_is_multiplicative((v, w) in rep_strategy()) {
            prop_assert_eq!(v.direct_sum(&w).f_poly(), &v.f_poly() * &w.f_poly());
        }

        #[test]
        fn f_is_monic_of_degree_dim((v, _w) in rep_strategy()) {
            let f = v.f_poly();
            prop_assert_eq!(f.deg_x(), Some(v.dim() as u32));
            prop_assert!(f.is_monic_in_x());
            prop_assert!(f.is_homogeneous());
        }

        #[test]
        fn chern_round_trip((v, _w) in rep_strategy()) {
            prop_assert_eq!(Representation::polynomial_from_chern(&v.chern_classes()).unwrap(), v.f_poly());
        }
    }
}
