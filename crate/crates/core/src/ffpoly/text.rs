//! Canonical text form: terms in canonical monomial order joined by `" + "`,
//! each written `c*t^i*x^j` with `c` in `[1, p)`, dropping a coefficient of
//! one and exponents of one (`x^3 + 2*t^2*x`). The zero polynomial is `0`.

use std::fmt;

use crate::error::{Error, Result};
use crate::ffpoly::bipoly::{BiPoly, Monomial};
use crate::ffpoly::scalar::PrimeModulus;

fn write_factor(out: &mut Vec<String>, var: &str, e: u32) {
    match e {
        0 => {}
        1 => out.push(var.to_string()),
        _ => out.push(format!("{var}^{e}")),
    }
}

fn term_text(mono: Monomial, c: u32) -> String {
    let mut factors = Vec::with_capacity(3);
    if c != 1 || mono == Monomial::ONE {
        factors.push(c.to_string());
    }
    write_factor(&mut factors, "t", mono.tau);
    write_factor(&mut factors, "x", mono.x);
    factors.join("*")
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (mono, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            f.write_str(&term_text(mono, c.value()))?;
        }
        Ok(())
    }
}

impl BiPoly {
    /// Parses the canonical text form. Whitespace is ignored, factors may
    /// repeat or come in any order, and coefficients are reduced mod `p`.
    pub fn parse(input: &str, modulus: PrimeModulus) -> Result<BiPoly> {
        let err = |reason: &str| Error::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty input"));
        }
        let mut out = Vec::new();
        for term in compact.split('+') {
            if term.is_empty() {
                return Err(err("empty term"));
            }
            let mut coeff: i64 = 1;
            let mut tau = 0u32;
            let mut x = 0u32;
            for factor in term.split('*') {
                let (base, exp) = match factor.split_once('^') {
                    Some((b, e)) => {
                        let e: u32 = e.parse().map_err(|_| err("bad exponent"))?;
                        (b, e)
                    }
                    None => (factor, 1),
                };
                match base {
                    "t" => tau += exp,
                    "x" => x += exp,
                    "" => return Err(err("empty factor")),
                    digits => {
                        if factor.contains('^') {
                            return Err(err("exponent on a coefficient"));
                        }
                        let v: i64 = digits.parse().map_err(|_| err("unknown factor"))?;
                        coeff = modulus.reduce(coeff * modulus.reduce(v) as i64) as i64;
                    }
                }
            }
            out.push((tau, x, coeff));
        }
        Ok(BiPoly::from_terms(modulus, out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fp(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    #[test]
    fn renders_canonical_order() {
        let m = fp(3);
        let r = BiPoly::from_terms(m, [(2, 1, 2), (0, 3, 1)]);
        assert_eq!(r.to_string(), "x^3 + 2*t^2*x");
        assert_eq!(BiPoly::zero(m).to_string(), "0");
        assert_eq!(BiPoly::constant(m, 2).to_string(), "2");
        assert_eq!(BiPoly::one(m).to_string(), "1");
        let p = BiPoly::from_terms(fp(5), [(1, 0, 1), (0, 0, 4), (3, 1, 1), (0, 1, 3)]);
        assert_eq!(p.to_string(), "t^3*x + 3*x + t + 4");
    }

    #[test]
    fn parses_loosely() {
        let m = fp(5);
        assert_eq!(
            BiPoly::parse(" x * t^2 + 7 * x + t*t ", m)
                .unwrap()
                .to_string(),
            "t^2*x + 2*x + t^2"
        );
        assert!(BiPoly::parse("0", m).unwrap().is_zero());
        assert!(BiPoly::parse("", m).is_err());
        assert!(BiPoly::parse("x + ", m).is_err());
        assert!(BiPoly::parse("y^2", m).is_err());
        assert!(BiPoly::parse("x^-1", m).is_err());
        assert!(BiPoly::parse("2^3", m).is_err());
    }

    proptest! {
        #[test]
        fn text_round_trips(
            p in prop::sample::select(vec![3u64, 5, 7, 11]),
            terms in prop::collection::vec((0u32..12, 0u32..12, 0i64..50), 0..12),
        ) {
            let m = fp(p);
            let a = BiPoly::from_terms(m, terms);
            prop_assert_eq!(BiPoly::parse(&a.to_string(), m).unwrap(), a);
        }
    }
}
