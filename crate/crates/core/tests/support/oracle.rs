//! Deliberately naive reference for dim M: nothing here touches the library's
//! polynomial, power, division or elimination code.
//!
//! Polynomials are `HashMap<(t_exp, x_exp), coeff>`; the total power is
//! applied by substituting `t -> t + t^p`, `x -> x + x^p` and multiplying out.

use std::collections::HashMap;

pub type Poly = HashMap<(u32, u32), i64>;

fn clean(p: i64, mut a: Poly) -> Poly {
    a.retain(|_, c| {
        *c = c.rem_euclid(p);
        *c != 0
    });
    a
}

pub fn mul(p: i64, a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (&(i1, j1), &c1) in a {
        for (&(i2, j2), &c2) in b {
            *out.entry((i1 + i2, j1 + j2)).or_insert(0) += c1 * c2 % p;
        }
    }
    clean(p, out)
}

pub fn sub(p: i64, a: &Poly, b: &Poly) -> Poly {
    let mut out = a.clone();
    for (&k, &c) in b {
        *out.entry(k).or_insert(0) -= c;
    }
    clean(p, out)
}

fn one() -> Poly {
    Poly::from([((0, 0), 1)])
}

fn power(p: i64, base: &Poly, n: u32) -> Poly {
    (0..n).fold(one(), |acc, _| mul(p, &acc, base))
}

/// P(t^i x^j) = (t + t^p)^i (x + x^p)^j, extended linearly.
pub fn steenrod_total(p: i64, m: &Poly) -> Poly {
    let q = p as u32;
    let pt = Poly::from([((1, 0), 1), ((q, 0), 1)]);
    let px = Poly::from([((0, 1), 1), ((0, q), 1)]);
    let mut out = Poly::new();
    for (&(i, j), &c) in m {
        let term = mul(p, &power(p, &pt, i), &power(p, &px, j));
        for (k, v) in term {
            *out.entry(k).or_insert(0) += c * v;
        }
    }
    clean(p, out)
}

/// prod over weights of (x - w t).
pub fn f_of_weights(p: i64, weights: &[i64]) -> Poly {
    weights.iter().fold(one(), |acc, &w| {
        let lin = clean(p, Poly::from([((0, 1), 1), ((1, 0), -w)]));
        mul(p, &acc, &lin)
    })
}

/// Remainder on division by `f`, which must be monic in x of x-degree `d`.
/// Schoolbook: repeatedly cancel the highest x-power.
pub fn remainder(p: i64, a: &Poly, f: &Poly, d: u32) -> Poly {
    let mut r = a.clone();
    loop {
        let Some(top) = r.keys().map(|&(_, j)| j).max() else {
            return r;
        };
        if top < d {
            return r;
        }
        let leading: Vec<((u32, u32), i64)> = r
            .iter()
            .filter(|(k, _)| k.1 == top)
            .map(|(&k, &c)| (k, c))
            .collect();
        for ((i, _), c) in leading {
            let shift: Poly = f
                .iter()
                .map(|(&(fi, fj), &fc)| ((fi + i, fj + top - d), fc * c % p))
                .collect();
            r = sub(p, &r, &shift);
        }
    }
}

/// Rank by textbook Gaussian elimination on a dense i64 matrix.
pub fn rank(p: i64, mut rows: Vec<Vec<i64>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let inverse = |a: i64| (1..p).find(|b| a * b % p == 1).unwrap();
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][c] % p != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = inverse(rows[rank][c].rem_euclid(p));
        for v in rows[rank].iter_mut() {
            *v = (*v * inv).rem_euclid(p);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let factor = row[c];
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v = (*v - factor * pv).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn epsilon(p: i64, a: i64) -> u32 {
    ((2 * a - 1) * (p - 1) / 2) as u32
}

pub fn delta(p: i64, a: i64) -> u32 {
    (p * a - (p + 3) / 2) as u32
}

pub fn h(p: i64, a: i64) -> Poly {
    let base = Poly::from([((0, 0), 1), ((p as u32 - 1, 0), 1)]);
    power(p, &base, epsilon(p, a))
}

/// Nullity of m -> (P(m) - h m) mod f on span{t^(delta-j) x^j : j < deg f, j <= delta}.
pub fn hom_dim(p: i64, weights: &[i64], delta: u32, h: &Poly) -> usize {
    let f = f_of_weights(p, weights);
    let d = weights.len() as u32;
    let top = delta.min(d.saturating_sub(1));
    if d == 0 {
        return 0;
    }
    let images: Vec<Poly> = (0..=top)
        .map(|j| {
            let m = Poly::from([((delta - j, j), 1)]);
            remainder(p, &sub(p, &steenrod_total(p, &m), &mul(p, h, &m)), &f, d)
        })
        .collect();
    let mut keys: Vec<(u32, u32)> = images.iter().flat_map(|im| im.keys().copied()).collect();
    keys.sort_unstable();
    keys.dedup();
    // One row per domain monomial: rank of the transpose equals rank.
    let rows: Vec<Vec<i64>> = images
        .iter()
        .map(|im| keys.iter().map(|k| *im.get(k).unwrap_or(&0)).collect())
        .collect();
    images.len() - if keys.is_empty() { 0 } else { rank(p, rows) }
}

pub fn regular_weights(p: i64, copies: i64) -> Vec<i64> {
    (0..copies).flat_map(|_| 0..p).collect()
}

pub fn ma_dim(p: i64, a: i64) -> usize {
    hom_dim(p, &regular_weights(p, a), delta(p, a), &h(p, a))
}

/// hom dim for V_{a-1} + U_k.
pub fn filtration_dim(p: i64, a: i64, k: i64) -> usize {
    let mut w = regular_weights(p, a - 1);
    w.extend(0..k);
    hom_dim(p, &w, delta(p, a), &h(p, a))
}

pub fn pairs_up_to(max_pa: i64) -> Vec<(i64, i64)> {
    let is_prime = |n: i64| n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
    (3..=max_pa / 2)
        .filter(|&p| p % 2 == 1 && is_prime(p))
        .flat_map(|p| (2..=max_pa / p).map(move |a| (p, a)))
        .collect()
}
