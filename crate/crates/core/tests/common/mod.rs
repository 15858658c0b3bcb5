//! Brute-force oracles that do not go through the library's own code paths.
#![allow(dead_code)]

use std::collections::BTreeMap;

use bn_invariants::{Monomial, QPolynomial, Rational};
use num_traits::{One, Zero};

/// All permutations of `1..=n` as plain vectors, by recursion.
pub fn plain_permutations(n: usize) -> Vec<Vec<i32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for smaller in plain_permutations(n - 1) {
        for pos in 0..=smaller.len() {
            let mut v = smaller.clone();
            v.insert(pos, n as i32);
            out.push(v);
        }
    }
    out
}

/// All signed windows of rank `n`: every permutation times every sign vector.
pub fn signed_windows(n: usize) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    for perm in plain_permutations(n) {
        for mask in 0..(1u32 << n) {
            out.push(
                perm.iter()
                    .enumerate()
                    .map(|(i, &v)| if mask >> i & 1 == 1 { -v } else { v })
                    .collect(),
            );
        }
    }
    out
}

/// `f_i` from the raw definitions: descents, then suffix counts, then signs.
pub fn f_seq(window: &[i32]) -> Vec<u32> {
    let n = window.len();
    (0..n)
        .map(|i| {
            let d = (i..n.saturating_sub(1)).filter(|&j| window[j] > window[j + 1]).count() as u32;
            2 * d + u32::from(window[i] < 0)
        })
        .collect()
}

pub fn inverse_window(window: &[i32]) -> Vec<i32> {
    let mut inv = vec![0; window.len()];
    for (i, &v) in window.iter().enumerate() {
        let k = i as i32 + 1;
        inv[v.unsigned_abs() as usize - 1] = if v > 0 { k } else { -k };
    }
    inv
}

/// `(1/|B_n|) Σ_σ σ·x^p y^q` expanded term by term with explicit signs.
pub fn brute_rho(p: &[u32], q: &[u32]) -> BTreeMap<(Vec<u32>, Vec<u32>), Rational> {
    let n = p.len();
    let group = signed_windows(n);
    let order = Rational::from_integer((group.len() as i64).into());
    let mut acc: BTreeMap<(Vec<u32>, Vec<u32>), Rational> = BTreeMap::new();
    for w in &group {
        let mut np = vec![0; n];
        let mut nq = vec![0; n];
        let mut sign = 1i64;
        for i in 0..n {
            let t = w[i].unsigned_abs() as usize - 1;
            np[t] = p[i];
            nq[t] = q[i];
            if w[i] < 0 && (p[i] + q[i]) % 2 == 1 {
                sign = -sign;
            }
        }
        *acc.entry((np, nq)).or_insert_with(Rational::zero) += Rational::from_integer(sign.into()) / &order;
    }
    acc.retain(|_, c| !c.is_zero());
    acc
}

pub fn as_map(f: &QPolynomial) -> BTreeMap<(Vec<u32>, Vec<u32>), Rational> {
    f.terms()
        .map(|(m, c)| ((m.p().to_vec(), m.q().to_vec()), c.clone()))
        .collect()
}

pub fn twist(v: u32) -> i64 {
    if v.is_multiple_of(2) {
        v as i64
    } else {
        -(v as i64)
    }
}

/// Ordered-ness straight from the three defining conditions.
pub fn ordered_by_conditions(p: &[u32], q: &[u32]) -> bool {
    let n = p.len();
    if (0..n).any(|k| (p[k] + q[k]) % 2 == 1) {
        return false;
    }
    (1..n).all(|i| {
        let (a, b) = (i - 1, i);
        if p[a] < p[b] {
            return false;
        }
        if p[a] == p[b] {
            if p[a].is_multiple_of(2) {
                q[a] >= q[b]
            } else {
                q[a] <= q[b]
            }
        } else {
            true
        }
    })
}

/// Every exponent vector of length `len` with entries in `0..=max`.
pub fn grid(len: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=max).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out
}

pub fn single(p: &[u32], q: &[u32]) -> QPolynomial {
    QPolynomial::from_monomial(Monomial::new(p, q).unwrap(), Rational::one())
}
