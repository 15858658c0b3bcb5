//! Signed permutations in window notation and their descent statistics.
//!
//! An element of `B_n` is stored as its window `[σ(1), …, σ(n)]`; the values
//! on negative arguments follow from `σ(-k) = -σ(k)` and are never stored.
//! Ordinary permutations are the elements whose windows are all positive.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest rank for which full-group enumeration is allowed (`2^8·8!` elements).
pub const ENUMERATION_GUARD: usize = 8;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

impl SignedPermutation {
    /// Builds an element from its window, checking bijectivity.
    pub fn new(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        if n == 0 {
            return Err(Error::EmptyRank);
        }
        let mut seen = vec![false; n + 1];
        for (idx, &v) in window.iter().enumerate() {
            let position = idx + 1;
            if v == 0 {
                return Err(Error::ZeroEntry { position });
            }
            let a = v.unsigned_abs() as usize;
            if a > n {
                return Err(Error::OutOfRange { value: v, position, n });
            }
            if seen[a] {
                return Err(Error::RepeatedValue { value: v, position });
            }
            seen[a] = true;
        }
        Ok(Self { window })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            window: (1..=n as i32).collect(),
        }
    }

    /// The sign change `[-1, 2, …, n]`.
    pub fn first_sign_change(n: usize) -> Self {
        let mut w = Self::identity(n);
        w.window[0] = -1;
        w
    }

    /// The adjacent transposition swapping `k` and `k+1` (1-based).
    pub fn adjacent_transposition(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::IndexOutOfRange {
                k,
                n: n.saturating_sub(1),
            });
        }
        let mut w = Self::identity(n);
        w.window.swap(k - 1, k);
        Ok(w)
    }

    /// Generators of `B_n`: the `n-1` adjacent transpositions and one sign change.
    pub fn generators(n: usize) -> Vec<Self> {
        let mut gens: Vec<Self> = (1..n).map(|k| Self::adjacent_transposition(n, k).unwrap()).collect();
        gens.push(Self::first_sign_change(n));
        gens
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// `σ(k)` for `k ∈ ±{1..n}`.
    pub fn apply(&self, k: i32) -> i32 {
        debug_assert!(k != 0 && k.unsigned_abs() as usize <= self.n());
        let v = self.window[k.unsigned_abs() as usize - 1];
        if k < 0 {
            -v
        } else {
            v
        }
    }

    pub fn is_unsigned(&self) -> bool {
        self.window.iter().all(|&v| v > 0)
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &v)| v == i as i32 + 1)
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::RankMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let window = other.window.iter().map(|&k| self.apply(k)).collect();
        Ok(Self { window })
    }

    pub fn inverse(&self) -> Self {
        let mut window = vec![0; self.n()];
        for (i, &v) in self.window.iter().enumerate() {
            let target = v.unsigned_abs() as usize - 1;
            window[target] = if v > 0 { i as i32 + 1 } else { -(i as i32 + 1) };
        }
        Self { window }
    }

    /// Positions `1 ≤ i < n` with `σ(i) > σ(i+1)`.
    pub fn descent_set(&self) -> Vec<usize> {
        self.window
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// `d_i`: number of descents at positions `≥ i`.
    pub fn d_sequence(&self) -> Vec<u32> {
        let n = self.n();
        let mut d = vec![0u32; n];
        for i in (0..n.saturating_sub(1)).rev() {
            d[i] = d[i + 1] + u32::from(self.window[i] > self.window[i + 1]);
        }
        d
    }

    /// `f_i = 2·d_i + ε_i`.
    pub fn f_sequence(&self) -> Vec<u32> {
        self.d_sequence()
            .into_iter()
            .zip(&self.window)
            .map(|(d, &v)| 2 * d + u32::from(v < 0))
            .collect()
    }

    pub fn maj(&self) -> u32 {
        self.descent_set().into_iter().map(|i| i as u32).sum()
    }

    pub fn neg(&self) -> u32 {
        self.window.iter().filter(|&&v| v < 0).count() as u32
    }

    pub fn fmaj(&self) -> u32 {
        self.f_sequence().into_iter().sum()
    }

    /// Classical inversions: pairs `i < j` with `σ(i) > σ(j)` in integer order.
    pub fn inversions(&self) -> u32 {
        let w = &self.window;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn statistics(&self) -> StatisticsProfile {
        let d = self.d_sequence();
        let eps: Vec<u8> = self.window.iter().map(|&v| u8::from(v < 0)).collect();
        let f: Vec<u32> = d.iter().zip(&eps).map(|(&d, &e)| 2 * d + u32::from(e)).collect();
        let descent_set = self.descent_set();
        let maj = descent_set.iter().map(|&i| i as u32).sum();
        let neg = eps.iter().map(|&e| u32::from(e)).sum();
        let fmaj = f.iter().sum();
        StatisticsProfile {
            descent_set,
            d,
            eps,
            f,
            maj,
            fmaj,
            neg,
        }
    }

    /// All `2^n·n!` elements of `B_n` in lexicographic window order.
    pub fn enumerate(n: usize) -> Result<Enumeration> {
        Enumeration::new(n, true)
    }

    /// All `n!` elements of `Σ_n ⊂ B_n` in lexicographic window order.
    pub fn permutations(n: usize) -> Result<Enumeration> {
        Enumeration::new(n, false)
    }
}

/// `2^n·n!`
pub fn group_order(n: usize) -> BigUint {
    let mut c = BigUint::from(1u32) << n;
    for k in 2..=n {
        c *= k;
    }
    c
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.window.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    /// Parses `"[a1,a2,...,an]"`; whitespace is tolerated.
    fn from_str(text: &str) -> Result<Self> {
        let t = text.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected a bracketed list, got {t:?}")))?;
        if inner.trim().is_empty() {
            return Err(Error::EmptyRank);
        }
        let window = inner
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad entry {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(window)
    }
}

pub fn parse_window(text: &str) -> Result<SignedPermutation> {
    text.parse()
}

/// JSON form `{"n": int, "window": [int,...]}`.
#[derive(Serialize, Deserialize)]
struct PermRepr {
    n: usize,
    window: Vec<i32>,
}

impl Serialize for SignedPermutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PermRepr {
            n: self.n(),
            window: self.window.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SignedPermutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = PermRepr::deserialize(d)?;
        if repr.n != repr.window.len() {
            return Err(serde::de::Error::custom(format!(
                "n = {} but window has {} entries",
                repr.n,
                repr.window.len()
            )));
        }
        SignedPermutation::new(repr.window).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatisticsProfile {
    pub descent_set: Vec<usize>,
    pub d: Vec<u32>,
    pub eps: Vec<u8>,
    pub f: Vec<u32>,
    pub maj: u32,
    pub fmaj: u32,
    pub neg: u32,
}

/// Lazy lexicographic enumeration of `B_n` (or of `Σ_n` when unsigned).
#[derive(Debug, Clone)]
pub struct Enumeration {
    signed: bool,
    next: Option<Vec<i32>>,
}

impl Enumeration {
    fn new(n: usize, signed: bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyRank);
        }
        if n > ENUMERATION_GUARD {
            let count = if signed {
                group_order(n)
            } else {
                (2..=n).fold(BigUint::from(1u32), |acc, k| acc * k)
            };
            return Err(Error::GuardExceeded {
                n,
                guard: ENUMERATION_GUARD,
                count: count.to_string(),
            });
        }
        let first = if signed {
            (1..=n as i32).rev().map(|k| -k).collect()
        } else {
            (1..=n as i32).collect()
        };
        Ok(Self {
            signed,
            next: Some(first),
        })
    }

    fn advance(&self, w: &[i32]) -> Option<Vec<i32>> {
        let n = w.len();
        let mut used = vec![false; n + 1];
        for i in (0..n).rev() {
            used.iter_mut().for_each(|u| *u = false);
            for &v in &w[..i] {
                used[v.unsigned_abs() as usize] = true;
            }
            let candidate = self
                .candidates(n)
                .filter(|&v| v > w[i] && !used[v.unsigned_abs() as usize])
                .min();
            if let Some(v) = candidate {
                let mut out = w[..i].to_vec();
                out.push(v);
                used[v.unsigned_abs() as usize] = true;
                while out.len() < n {
                    let smallest = self
                        .candidates(n)
                        .filter(|&c| !used[c.unsigned_abs() as usize])
                        .min()
                        .unwrap();
                    used[smallest.unsigned_abs() as usize] = true;
                    out.push(smallest);
                }
                return Some(out);
            }
        }
        None
    }

    fn candidates(&self, n: usize) -> impl Iterator<Item = i32> {
        let n = n as i32;
        let signed = self.signed;
        (-n..=n).filter(move |&v| v != 0 && (signed || v > 0))
    }
}

impl Iterator for Enumeration {
    type Item = SignedPermutation;

    fn next(&mut self) -> Option<SignedPermutation> {
        let current = self.next.take()?;
        self.next = self.advance(&current);
        Some(SignedPermutation { window: current })
    }
}
