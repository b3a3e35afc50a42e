//! Dimension bookkeeping along the filtration of `CP(V_a)_+` by the
//! projective subspaces `CP(V_{a-1} ⊕ U_k)_+`, and the rank bounds that
//! follow from it.
//!
//! For `(p+1)/2 <= k <= p` the dimensions of `Ext^{1,1}` and `Hom^1` at
//! step `k` add up to `p`, so `Ext^{1,1}` is never computed from a
//! resolution: it is read off from the Hom dimension. At `k = p` the Hom
//! group is `M_a` and `ext11 = p - dim M_a` is the E_2 rank of the
//! p-torsion of `[CP(V_a)_+, S^{W_a}]^G`.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{out_of_range, Error, Result};
use crate::ffpoly::{odd_primes_up_to, PrimeModulus};
use crate::homspace::{hom_space, ma_space, HomProblem};
use crate::reps::{filtration_rep, pre_filtration_rep};
use crate::steenrod::Parameters;

pub const ENGINE: &str = concat!("ghostkernel ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiltrationRow {
    pub k: u32,
    /// Complex dimension of `V_{a-1} ⊕ U_k`.
    pub rep_dim: usize,
    pub hom_dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ext11: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiltrationTable {
    pub p: u32,
    pub a: u32,
    pub rows: Vec<FiltrationRow>,
}

impl FiltrationTable {
    pub fn hom_dims(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.hom_dim).collect()
    }

    /// `Hom^1` into `CP(V_a)_+`, i.e. `dim M_a`.
    pub fn last_hom_dim(&self) -> usize {
        self.rows.last().map(|r| r.hom_dim).unwrap_or(0)
    }

    pub fn last_ext11(&self) -> Option<usize> {
        self.rows.last().and_then(|r| r.ext11)
    }

    fn check(&self) -> Result<()> {
        let p = self.p as usize;
        let half = (p - 1) / 2;
        for row in &self.rows[..=half] {
            if row.hom_dim != p {
                return Err(Error::Consistency(format!(
                    "hom_dim({}) = {} but the plateau value is p = {p} (p = {p}, a = {})",
                    row.k, row.hom_dim, self.a
                )));
            }
        }
        for w in self.rows.windows(2) {
            let (prev, next) = (w[0].hom_dim, w[1].hom_dim);
            if next > prev || prev - next > 1 {
                return Err(Error::Consistency(format!(
                    "hom_dim drops from {prev} to {next} at k = {} (p = {p}, a = {})",
                    w[1].k, self.a
                )));
            }
        }
        Ok(())
    }
}

/// Hom dimensions for `V_{a-1} ⊕ U_k`, `k = 0..=p`, with `ext11` filled in
/// by the complement rule on the top half.
pub fn filtration_table(p: PrimeModulus, a: u32) -> Result<FiltrationTable> {
    let params = Parameters::new(p, a)?;
    let q = p.get();
    let rows = (0..=q)
        .map(|k| {
            let v = filtration_rep(p, a, k)?;
            let dim = hom_space(&HomProblem::for_representation(&v, &params))?.dim();
            Ok(FiltrationRow {
                k,
                rep_dim: v.dim(),
                hom_dim: dim,
                ext11: (k >= q.div_ceil(2)).then(|| q as usize - dim),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let table = FiltrationTable { p: q, a, rows };
    table.check()?;
    Ok(table)
}

/// Hom dimensions for `V_{a-2} ⊕ U_k`, `k = 0..=p`; these are `0, 1, …, p`.
pub fn pre_filtration_dims(p: PrimeModulus, a: u32) -> Result<Vec<usize>> {
    let params = Parameters::new(p, a)?;
    (0..=p.get())
        .map(|k| {
            let v = pre_filtration_rep(p, a, k)?;
            Ok(hom_space(&HomProblem::for_representation(&v, &params))?.dim())
        })
        .collect()
}

pub const ORDER_STATEMENT: &str = "all p-power torsion has order p";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankReport {
    pub p: u32,
    pub a: u32,
    pub dim_ma: usize,
    pub ext11: usize,
    pub rank_lower: usize,
    pub rank_upper: usize,
    /// E_2 value of the rank; equal to the rank given that the classes survive.
    pub rank_e2: usize,
    /// `ext11 == 1`, i.e. the torsion would be `Z/p`.
    pub conjecture_zp: bool,
    pub order_statement: &'static str,
}

impl RankReport {
    pub fn within_bounds(&self) -> bool {
        (self.rank_lower..=self.rank_upper).contains(&self.ext11)
    }
}

pub fn rank_report(p: PrimeModulus, a: u32) -> Result<RankReport> {
    let dim_ma = ma_space(p, a)?.dim();
    let q = p.get() as usize;
    let lower_dim = q.div_ceil(2);
    if dim_ma < lower_dim {
        return Err(Error::Consistency(format!(
            "dim M_{a} = {dim_ma} < (p+1)/2 = {lower_dim} for p = {q}"
        )));
    }
    let ext11 = q.saturating_sub(dim_ma);
    Ok(RankReport {
        p: q as u32,
        a,
        dim_ma,
        ext11,
        rank_lower: 1,
        rank_upper: lower_dim,
        rank_e2: ext11,
        conjecture_zp: ext11 == 1,
        order_statement: ORDER_STATEMENT,
    })
}

/// One sweep row; `ms` is wall time and the only nondeterministic field.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub p: u32,
    pub a: u32,
    pub dim_ma: usize,
    pub ext11: usize,
    pub rank_lower: usize,
    pub rank_upper: usize,
    pub conjecture_zp: bool,
    pub ms: f64,
}

impl From<(&RankReport, f64)> for SweepRow {
    fn from((r, ms): (&RankReport, f64)) -> Self {
        SweepRow {
            p: r.p,
            a: r.a,
            dim_ma: r.dim_ma,
            ext11: r.ext11,
            rank_lower: r.rank_lower,
            rank_upper: r.rank_upper,
            conjecture_zp: r.conjecture_zp,
            ms,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepReport {
    pub max_pa: u32,
    pub engine: &'static str,
    pub rows: Vec<SweepRow>,
}

pub const CSV_HEADER: &str = "p,a,dim_ma,ext11,rank_lower,rank_upper,conjecture_zp,ms";

impl SweepReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("sweep report serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{:.3}\n",
                r.p, r.a, r.dim_ma, r.ext11, r.rank_lower, r.rank_upper, r.conjecture_zp, r.ms
            ));
        }
        out
    }

    /// Copy with every timing field zeroed, for comparing runs.
    pub fn without_timing(&self) -> SweepReport {
        let mut out = self.clone();
        for r in &mut out.rows {
            r.ms = 0.0;
        }
        out
    }
}

/// Every `(p, a)` with `p` an odd prime, `a >= 2`, `p a <= max_pa`, ordered
/// by `p` then `a`.
pub fn sweep_pairs(max_pa: u32) -> Vec<(u32, u32)> {
    odd_primes_up_to(max_pa as u64 / 2)
        .into_iter()
        .flat_map(|p| {
            let p = p as u32;
            (2..=max_pa / p).map(move |a| (p, a))
        })
        .collect()
}

pub fn sweep(max_pa: u32, parallelism: usize) -> Result<SweepReport> {
    if max_pa < 6 {
        return Err(out_of_range("max_pa", max_pa, "max_pa >= 6"));
    }
    if parallelism == 0 {
        return Err(out_of_range("jobs", 0, "jobs >= 1"));
    }
    let pairs = sweep_pairs(max_pa);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(parallelism)
        .build()
        .map_err(|e| Error::InvalidProblem(format!("cannot start worker pool: {e}")))?;
    let rows = pool.install(|| {
        pairs
            .par_iter()
            .map(|&(p, a)| {
                let start = Instant::now();
                let modulus = PrimeModulus::new(p as u64)?;
                let report = rank_report(modulus, a)?;
                let ms = (start.elapsed().as_secs_f64() * 1e6).round() / 1e3;
                Ok(SweepRow::from((&report, ms)))
            })
            .collect::<Result<Vec<_>>>()
    })?;
    Ok(SweepReport {
        max_pa,
        engine: ENGINE,
        rows,
    })
}
