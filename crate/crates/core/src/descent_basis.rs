//! Descent monomials, ordered monomials and their exponent decomposition.
//!
//! The ordered class consists of monomials `x^p y^q` with every `p_k + q_k`
//! even and the pairs `(p_k, s(q_k))` lexicographically weakly decreasing,
//! where `s` negates odd integers. Every nonzero `ρ(x^p y^q)` contains exactly
//! one ordered monomial, so ordered monomials index a basis of the invariants.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::poly::{Bidegree, Monomial};
use crate::signed_perm::SignedPermutation;

fn require_unsigned(pi: &SignedPermutation) -> Result<()> {
    if pi.is_unsigned() {
        Ok(())
    } else {
        Err(Error::NotUnsigned(pi.to_string()))
    }
}

/// `a_π = Π x_{π(i)}^{d_i(π)}`.
pub fn descent_monomial_a(pi: &SignedPermutation) -> Result<Monomial> {
    require_unsigned(pi)?;
    let n = pi.n();
    let mut p = vec![0; n];
    for (&v, d) in pi.window().iter().zip(pi.d_sequence()) {
        p[v as usize - 1] = d;
    }
    Ok(Monomial::from_parts(p, vec![0; n]))
}

/// `b_σ = Π x_{|σ(i)|}^{f_i(σ)}`.
pub fn signed_descent_monomial_b(sigma: &SignedPermutation) -> Monomial {
    let n = sigma.n();
    let mut p = vec![0; n];
    for (&v, f) in sigma.window().iter().zip(sigma.f_sequence()) {
        p[v.unsigned_abs() as usize - 1] = f;
    }
    Monomial::from_parts(p, vec![0; n])
}

/// `e_π = Π x_i^{d_i(π⁻¹)} y_{π(i)}^{d_i(π)}`.
pub fn diagonal_descent_monomial_e(pi: &SignedPermutation) -> Result<Monomial> {
    require_unsigned(pi)?;
    let n = pi.n();
    let p = pi.inverse().d_sequence();
    let mut q = vec![0; n];
    for (&v, d) in pi.window().iter().zip(pi.d_sequence()) {
        q[v as usize - 1] = d;
    }
    Ok(Monomial::from_parts(p, q))
}

/// `c_σ = Π x_i^{f_i(σ⁻¹)} y_{|σ(i)|}^{f_i(σ)}`.
pub fn diagonal_signed_descent_monomial_c(sigma: &SignedPermutation) -> Monomial {
    let n = sigma.n();
    let p = sigma.inverse().f_sequence();
    let mut q = vec![0; n];
    for (&v, f) in sigma.window().iter().zip(sigma.f_sequence()) {
        q[v.unsigned_abs() as usize - 1] = f;
    }
    Monomial::from_parts(p, q)
}

/// Identity on even integers, negation on odd ones.
pub fn sign_twist(q: u32) -> i64 {
    if q.is_multiple_of(2) {
        i64::from(q)
    } else {
        -i64::from(q)
    }
}

fn pair_key(m: &Monomial, k: usize) -> (u32, i64) {
    (m.p()[k], sign_twist(m.q()[k]))
}

pub fn is_ordered(m: &Monomial) -> bool {
    m.has_even_pairs() && (1..m.n()).all(|k| pair_key(m, k - 1) >= pair_key(m, k))
}

fn require_ordered(m: &Monomial) -> Result<()> {
    if is_ordered(m) {
        Ok(())
    } else {
        Err(Error::NotOrdered(format!("{m:?}")))
    }
}

/// The unique ordered monomial in the `ρ`-orbit of `m`.
pub fn ordered_representative(m: &Monomial) -> Result<Monomial> {
    if !m.has_even_pairs() {
        return Err(Error::ParityViolation(format!("{m:?}")));
    }
    let mut pairs: Vec<(u32, u32)> = m.p().iter().copied().zip(m.q().iter().copied()).collect();
    pairs.sort_by_key(|&(p, q)| std::cmp::Reverse((p, sign_twist(q))));
    let (p, q) = pairs.into_iter().unzip();
    Ok(Monomial::from_parts(p, q))
}

/// The signed permutation sorting `q` decreasingly, with `σ(i) > 0` exactly
/// when `q_{|σ(i)|}` is even and increasing window values on equal runs.
pub fn signed_index_permutation(m: &Monomial) -> Result<SignedPermutation> {
    require_ordered(m)?;
    Ok(index_permutation_of(m.q()))
}

fn index_permutation_of(q: &[u32]) -> SignedPermutation {
    let mut entries: Vec<(u32, i32)> = q
        .iter()
        .enumerate()
        .map(|(j, &qj)| {
            let v = j as i32 + 1;
            (qj, if qj % 2 == 0 { v } else { -v })
        })
        .collect();
    entries.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    SignedPermutation::new(entries.into_iter().map(|(_, v)| v).collect()).expect("sorting positions yields a bijection")
}

/// Both exponent vectors sorted decreasingly.
pub fn ordering_key(m: &Monomial) -> (Vec<u32>, Vec<u32>) {
    let mut p = m.p().to_vec();
    let mut q = m.q().to_vec();
    p.sort_unstable_by(|a, b| b.cmp(a));
    q.sort_unstable_by(|a, b| b.cmp(a));
    (p, q)
}

fn twisted(m: &Monomial) -> (Vec<u32>, Vec<i64>) {
    (m.p().to_vec(), m.q().iter().map(|&v| sign_twist(v)).collect())
}

/// Total order on ordered monomials: sorted exponents first, then `(p, s(q))`.
pub fn compare(m: &Monomial, w: &Monomial) -> Result<Ordering> {
    if m.n() != w.n() {
        return Err(Error::RankMismatch {
            left: m.n(),
            right: w.n(),
        });
    }
    require_ordered(m)?;
    require_ordered(w)?;
    Ok(compare_unchecked(m, w))
}

pub(crate) fn compare_unchecked(m: &Monomial, w: &Monomial) -> Ordering {
    ordering_key(m)
        .cmp(&ordering_key(w))
        .then_with(|| twisted(m).cmp(&twisted(w)))
}

/// Witness of `p = 2ν + δ`, `q = 2μ + γ` with `x^δ y^γ = c_σ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub sigma: SignedPermutation,
    pub nu: Vec<u32>,
    pub delta: Vec<u32>,
    pub mu: Vec<u32>,
    pub gamma: Vec<u32>,
}

pub fn decompose(m: &Monomial) -> Result<Decomposition> {
    let sigma = signed_index_permutation(m)?;
    let n = m.n();
    let delta = sigma.inverse().f_sequence();
    let f = sigma.f_sequence();
    let mut gamma = vec![0; n];
    for (&v, &fi) in sigma.window().iter().zip(&f) {
        gamma[v.unsigned_abs() as usize - 1] = fi;
    }

    let halve = |full: &[u32], part: &[u32], name: &str| -> Result<Vec<u32>> {
        full.iter()
            .zip(part)
            .map(|(&a, &b)| {
                if a < b || (a - b) % 2 != 0 {
                    Err(Error::BrokenInvariant(format!(
                        "{name}: {a} - {b} is not a non-negative even integer for {m:?}"
                    )))
                } else {
                    Ok((a - b) / 2)
                }
            })
            .collect()
    };
    let nu = halve(m.p(), &delta, "p - delta")?;
    let mu = halve(m.q(), &gamma, "q - gamma")?;
    let d = Decomposition {
        sigma,
        nu,
        delta,
        mu,
        gamma,
    };
    d.check(m)?;
    Ok(d)
}

fn weakly_decreasing(v: impl IntoIterator<Item = u32>) -> bool {
    let v: Vec<u32> = v.into_iter().collect();
    v.windows(2).all(|w| w[0] >= w[1])
}

impl Decomposition {
    fn along_sigma<'a>(&'a self, seq: &'a [u32]) -> impl Iterator<Item = u32> + 'a {
        self.sigma
            .window()
            .iter()
            .map(move |&v| seq[v.unsigned_abs() as usize - 1])
    }

    /// Checks every structural property the decomposition of `m` must satisfy.
    pub fn check(&self, m: &Monomial) -> Result<()> {
        let broken = |what: &str| Err(Error::BrokenInvariant(format!("{what} fails for {m:?}")));
        let n = m.n();
        let recon_p: Vec<u32> = self.nu.iter().zip(&self.delta).map(|(a, b)| 2 * a + b).collect();
        let recon_q: Vec<u32> = self.mu.iter().zip(&self.gamma).map(|(a, b)| 2 * a + b).collect();
        if recon_p != m.p() || recon_q != m.q() {
            return broken("reconstruction");
        }
        if !weakly_decreasing(self.nu.iter().copied()) || !weakly_decreasing(self.delta.iter().copied()) {
            return broken("monotonicity of nu/delta");
        }
        if !weakly_decreasing(self.along_sigma(&self.mu)) || !weakly_decreasing(self.along_sigma(&self.gamma)) {
            return broken("monotonicity of mu/gamma along sigma");
        }
        let q = m.q();
        for i in 0..n {
            for j in i + 1..n {
                let twist_ok = sign_twist(q[i]) >= sign_twist(q[j]);
                if self.delta[i] == self.delta[j] && !twist_ok {
                    return broken("tie condition on delta");
                }
                if self.gamma[i] == self.gamma[j] && !twist_ok {
                    return broken("tie condition on gamma");
                }
            }
        }
        Ok(())
    }
}

/// All ordered monomials in `n` variable pairs of bidegree `bd`, in increasing
/// lexicographic order of their exponent vectors.
pub fn ordered_monomials(n: usize, bd: Bidegree) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut pairs = Vec::with_capacity(n);
    fill_ordered(n, bd.a, bd.b, None, &mut pairs, &mut out);
    out.sort();
    out
}

fn fill_ordered(
    n: usize,
    rest_a: u32,
    rest_b: u32,
    prev: Option<(u32, i64)>,
    pairs: &mut Vec<(u32, u32)>,
    out: &mut Vec<Monomial>,
) {
    let slots_left = n - pairs.len();
    if slots_left == 0 {
        if rest_a == 0 && rest_b == 0 {
            let (p, q) = pairs.iter().copied().unzip();
            out.push(Monomial::from_parts(p, q));
        }
        return;
    }
    let max_p = prev.map_or(rest_a, |(pp, _)| pp.min(rest_a));
    for p in 0..=max_p {
        // the remaining slots each take at most p, so they cannot absorb more than that
        if p * (slots_left as u32) < rest_a {
            continue;
        }
        for q in 0..=rest_b {
            if (p + q) % 2 != 0 {
                continue;
            }
            let key = (p, sign_twist(q));
            if prev.is_some_and(|pk| key > pk) {
                continue;
            }
            pairs.push((p, q));
            fill_ordered(n, rest_a - p, rest_b - q, Some(key), pairs, out);
            pairs.pop();
        }
    }
}
