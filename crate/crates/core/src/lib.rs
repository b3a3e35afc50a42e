//! Exact computations with the total Steenrod power on `F_p[t, x]`.
//!
//! The central object is `M_a`: homogeneous polynomials `m` of degree
//! `delta_a = pa - (p+3)/2` such that `r^a` divides `P(m) - h_a m`, where
//! `r = x^p - t^(p-1) x`, `h_a = (1 + t^(p-1))^((2a-1)(p-1)/2)` and `P` is
//! the total power. `M_a` computes the `Hom^1` group from the Borel
//! cohomology of `S^{W_a}` into that of `CP(V_a)_+` for the cyclic group of
//! order `p`, and `p - dim M_a` is the E_2 rank of the p-torsion in
//! `[CP(V_a)_+, S^{W_a}]^G`.
//!
//! Modules, bottom up:
//! - [`ffpoly`]: `F_p` scalars, `F_p[t, x]`, division by divisors monic in `x`.
//! - [`steenrod`]: the total power, `epsilon_a`, `delta_a`, `h_a`, `Q(m)`.
//! - [`reps`]: weight multisets and their polynomials `f(V)`.
//! - [`homspace`]: kernels over `F_p`, `M_a`, the shift maps by `r`.
//! - [`bounds`]: filtration tables, rank reports, parameter sweeps.
//! - [`cli`]: the `ghostkernel` command.

pub mod bounds;
pub mod cli;
pub mod error;
pub mod ffpoly;
pub mod homspace;
pub mod reps;
pub mod steenrod;

pub use error::{Error, Result};
pub use ffpoly::{BiPoly, FpScalar, Monomial, PrimeModulus, TriPoly};
