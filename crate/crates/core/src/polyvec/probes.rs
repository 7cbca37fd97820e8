//! Real-rootedness (Sturm sequences) and Kruskal–Katona checks.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::IntPoly;
use crate::error::{Error, Result};
use crate::words::binomial;

type RatPoly = Vec<BigRational>;

fn trim(mut p: RatPoly) -> RatPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn rem_quo(a: &RatPoly, b: &RatPoly) -> (RatPoly, RatPoly) {
    let mut r = a.clone();
    let db = b.len() - 1;
    let lead = &b[db];
    let mut q = vec![BigRational::zero(); a.len().saturating_sub(db).max(1)];
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = r.last().unwrap() / lead;
        for (k, bk) in b.iter().enumerate() {
            r[shift + k] -= &c * bk;
        }
        q[shift] = c;
        r.pop();
        r = trim(r);
    }
    (trim(r), trim(q))
}

fn gcd(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let (r, _) = rem_quo(&a, &b);
        a = b;
        b = r;
    }
    a
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let nonzero: Vec<i8> = signs.filter(|&s| s != 0).collect();
    nonzero.windows(2).filter(|w| w[0] != w[1]).count()
}

fn sign(x: &BigRational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Whether every complex root of `p` is real. Counts the distinct real roots of
/// the squarefree part with a Sturm sequence and compares with its degree.
pub fn sturm_real_rooted(p: &IntPoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let rat: RatPoly = p
        .coeffs()
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    let deriv = trim(
        rat.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
            .collect(),
    );
    let squarefree = if deriv.is_empty() {
        rat
    } else {
        rem_quo(&rat, &gcd(&rat, &deriv)).1
    };
    let degree = squarefree.len() - 1;
    if degree == 0 {
        return Ok(true);
    }

    let mut seq = vec![squarefree.clone()];
    seq.push(trim(
        squarefree
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
            .collect(),
    ));
    loop {
        let n = seq.len();
        let (r, _) = rem_quo(&seq[n - 2], &seq[n - 1]);
        if r.is_empty() {
            break;
        }
        seq.push(r.into_iter().map(|c| -c).collect());
    }

    let at_pos_inf = sign_changes(seq.iter().map(|s| sign(s.last().unwrap())));
    let at_neg_inf = sign_changes(seq.iter().map(|s| {
        let lead = sign(s.last().unwrap());
        if (s.len() - 1) % 2 == 1 {
            -lead
        } else {
            lead
        }
    }));
    Ok(at_neg_inf - at_pos_inf == degree)
}

/// The k-cascade `m = binom(a_k,k) + binom(a_{k-1},k-1) + ... + binom(a_j,j)`
/// with `a_k > a_{k-1} > ... > a_j >= j >= 1`, as `(a_i, i)` pairs.
fn cascade(m: &BigInt, k: usize) -> Vec<(i64, i64)> {
    let mut rest = m.clone();
    let mut out = Vec::new();
    let mut i = k as i64;
    while !rest.is_zero() && i >= 1 {
        // largest a with binom(a, i) <= rest
        let (mut lo, mut hi) = (i, i64::MAX / 4);
        let mut probe = i;
        while binomial(probe, i) <= rest {
            lo = probe;
            probe = probe.saturating_mul(2).max(probe + 1);
            if probe >= hi {
                break;
            }
        }
        hi = probe;
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if binomial(mid, i) <= rest {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        rest -= binomial(lo, i);
        out.push((lo, i));
        i -= 1;
    }
    out
}

/// The largest `v_{k+1}` that `v_k` allows: `Σ binom(a_i, i+1)` over the k-cascade of `v_k`.
pub fn kk_upper_bound(v_k: &BigInt, k: usize) -> BigInt {
    cascade(v_k, k)
        .into_iter()
        .map(|(a, i)| binomial(a, i + 1))
        .sum()
}

/// Whether `v = (1, v_1, v_2, ...)` satisfies `v_{k+1} <= ∂(v_k)` for every `k >= 1`.
/// Trailing zeros are ignored.
pub fn kruskal_katona_ok(v: &[BigInt]) -> bool {
    let end = v.iter().rposition(|x| !x.is_zero()).map_or(0, |i| i + 1);
    let v = &v[..end];
    if v.first().is_some_and(|v0| !v0.is_one()) || v.iter().any(Signed::is_negative) {
        return false;
    }
    (1..v.len().saturating_sub(1)).all(|k| v[k + 1] <= kk_upper_bound(&v[k], k))
}
