//! Sparse polynomials in `x_1..x_n, y_1..y_n` and the diagonal signed action.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{from_i64, from_u64, Scalar};
use crate::signed_perm::{SignedPermutation, ENUMERATION_GUARD};

/// Which alphabet a symmetric function lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    X,
    Y,
}

/// `x^p y^q`, stored as the dense vector `p ++ q`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bidegree {
    pub a: u32,
    pub b: u32,
}

impl Bidegree {
    pub fn new(a: u32, b: u32) -> Self {
        Self { a, b }
    }
}

impl Monomial {
    pub fn new(p: &[u32], q: &[u32]) -> Result<Self> {
        if p.len() != q.len() {
            return Err(Error::LengthMismatch {
                got: q.len(),
                n: p.len(),
            });
        }
        if p.is_empty() {
            return Err(Error::EmptyRank);
        }
        let mut exps = p.to_vec();
        exps.extend_from_slice(q);
        Ok(Self { exps })
    }

    pub(crate) fn from_parts(p: Vec<u32>, q: Vec<u32>) -> Self {
        debug_assert_eq!(p.len(), q.len());
        let mut exps = p;
        exps.extend(q);
        Self { exps }
    }

    pub fn unit(n: usize) -> Self {
        Self { exps: vec![0; 2 * n] }
    }

    pub fn n(&self) -> usize {
        self.exps.len() / 2
    }

    pub fn p(&self) -> &[u32] {
        &self.exps[..self.n()]
    }

    pub fn q(&self) -> &[u32] {
        &self.exps[self.n()..]
    }

    pub fn bidegree(&self) -> Bidegree {
        Bidegree {
            a: self.p().iter().sum(),
            b: self.q().iter().sum(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// `p_k + q_k` even for every `k`.
    pub fn has_even_pairs(&self) -> bool {
        self.p().iter().zip(self.q()).all(|(a, b)| (a + b) % 2 == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n(), "monomial rank mismatch");
        Self {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// Image under `σ`, together with the sign picked up (`true` for `-1`).
    pub(crate) fn act_raw(&self, sigma: &SignedPermutation, family: Option<Family>) -> (Self, bool) {
        let n = self.n();
        let mut exps = vec![0u32; 2 * n];
        let mut negative = false;
        for (i, &s) in sigma.window().iter().enumerate() {
            let target = s.unsigned_abs() as usize - 1;
            let (p, q) = (self.exps[i], self.exps[n + i]);
            let (move_x, move_y) = match family {
                None => (true, true),
                Some(Family::X) => (true, false),
                Some(Family::Y) => (false, true),
            };
            if move_x {
                exps[target] += p;
                negative ^= s < 0 && p % 2 == 1;
            } else {
                exps[i] += p;
            }
            if move_y {
                exps[n + target] += q;
                negative ^= s < 0 && q % 2 == 1;
            } else {
                exps[n + i] += q;
            }
        }
        (Self { exps }, negative)
    }

    /// Image under a plain permutation of positions: exponent at `i` moves to `perm[i]-1`.
    fn permuted(&self, perm: &[i32]) -> Self {
        let n = self.n();
        let mut exps = vec![0u32; 2 * n];
        for (i, &s) in perm.iter().enumerate() {
            let t = s as usize - 1;
            exps[t] = self.exps[i];
            exps[n + t] = self.exps[n + i];
        }
        Self { exps }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (name, exps) in [("x", self.p()), ("y", self.q())] {
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, " ")?;
                }
                first = false;
                write!(f, "{name}{}", i + 1)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{:?} y^{:?}", self.p(), self.q())
    }
}

/// A finite sum of monomials with nonzero coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct Polynomial<T> {
    n: usize,
    terms: BTreeMap<Monomial, T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::from_monomial(Monomial::unit(n), T::one())
    }

    pub fn constant(n: usize, c: T) -> Self {
        Self::from_monomial(Monomial::unit(n), c)
    }

    pub fn from_monomial(m: Monomial, c: T) -> Self {
        let mut f = Self::zero(m.n());
        f.add_term(m, c);
        f
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Monomial, T)>) -> Result<Self> {
        let mut f = Self::zero(n);
        for (m, c) in terms {
            if m.n() != n {
                return Err(Error::RankMismatch { left: n, right: m.n() });
            }
            f.add_term(m, c);
        }
        Ok(f)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &T)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&T> {
        self.terms.get(m)
    }

    /// Adds `c·m`, dropping the entry if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: T) {
        assert_eq!(m.n(), self.n, "monomial rank mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, v)| (m.clone(), v.clone() * c.clone()))
            .collect();
        Self { n: self.n, terms }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        let terms = self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect();
        Self { n: self.n, terms }
    }

    /// Every term has bidegree `bd`.
    pub fn is_bihomogeneous_of(&self, bd: Bidegree) -> bool {
        self.terms.keys().all(|m| m.bidegree() == bd)
    }

    pub fn bidegree_components(&self) -> BTreeMap<Bidegree, Polynomial<T>> {
        let mut out: BTreeMap<Bidegree, Polynomial<T>> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.bidegree())
                .or_insert_with(|| Polynomial::zero(self.n))
                .terms
                .insert(m.clone(), c.clone());
        }
        out
    }

    /// Diagonal action: `x_i ↦ sgn σ(i)·x_{|σ(i)|}`, and likewise for `y_i`.
    pub fn act(&self, sigma: &SignedPermutation) -> Result<Self> {
        self.act_on(sigma, None)
    }

    /// Action on one alphabet only; the other is left fixed.
    pub fn act_family(&self, sigma: &SignedPermutation, family: Family) -> Result<Self> {
        self.act_on(sigma, Some(family))
    }

    fn act_on(&self, sigma: &SignedPermutation, family: Option<Family>) -> Result<Self> {
        if sigma.n() != self.n {
            return Err(Error::RankMismatch {
                left: sigma.n(),
                right: self.n,
            });
        }
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            let (image, negative) = m.act_raw(sigma, family);
            out.add_term(image, if negative { -c.clone() } else { c.clone() });
        }
        Ok(out)
    }

    /// A generator of `B_n` that does not fix `self`, if any.
    pub fn invariance_violation(&self) -> Option<SignedPermutation> {
        SignedPermutation::generators(self.n)
            .into_iter()
            .find(|g| self.act(g).map(|img| &img != self).unwrap_or(true))
    }

    pub fn is_invariant(&self) -> bool {
        self.invariance_violation().is_none()
    }

    /// Invariant under `B_n` acting on `x` alone and on `y` alone, i.e. a
    /// member of `ℚ[x]^{B_n} ⊗ ℚ[y]^{B_n}`.
    pub fn is_separately_invariant(&self) -> bool {
        SignedPermutation::generators(self.n).iter().all(|g| {
            [Family::X, Family::Y]
                .into_iter()
                .all(|fam| self.act_family(g, fam).map(|img| &img == self).unwrap_or(false))
        })
    }

    /// Averaging operator `(1/|B_n|) Σ_σ σ·f`.
    ///
    /// Monomials with every `p_k + q_k` even are averaged over `Σ_n` only,
    /// since the sign changes fix them; the rest go through the full group.
    pub fn rho(&self) -> Result<Self> {
        check_guard(self.n)?;
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            let avg = if m.has_even_pairs() {
                average_over_permutations(m)?
            } else {
                average_over_group(m)?
            };
            out += &avg.scale(c);
        }
        Ok(out)
    }

    /// `ρ` by the defining sum over all `2^n·n!` elements.
    pub fn rho_full_group(&self) -> Result<Self> {
        check_guard(self.n)?;
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            out += &average_over_group(m)?.scale(c);
        }
        Ok(out)
    }
}

fn check_guard(n: usize) -> Result<()> {
    if n > ENUMERATION_GUARD {
        return Err(Error::GuardExceeded {
            n,
            guard: ENUMERATION_GUARD,
            count: crate::signed_perm::group_order(n).to_string(),
        });
    }
    Ok(())
}

fn average_over_permutations<T: Scalar>(m: &Monomial) -> Result<Polynomial<T>> {
    let mut counts: BTreeMap<Monomial, u64> = BTreeMap::new();
    let mut total = 0u64;
    for alpha in SignedPermutation::permutations(m.n())? {
        *counts.entry(m.permuted(alpha.window())).or_default() += 1;
        total += 1;
    }
    let denom: T = from_u64(total);
    let terms = counts
        .into_iter()
        .map(|(k, c)| (k, from_u64::<T>(c) / denom.clone()))
        .collect();
    Ok(Polynomial { n: m.n(), terms })
}

fn average_over_group<T: Scalar>(m: &Monomial) -> Result<Polynomial<T>> {
    let mut counts: BTreeMap<Monomial, i64> = BTreeMap::new();
    let mut total = 0u64;
    for sigma in SignedPermutation::enumerate(m.n())? {
        let (image, negative) = m.act_raw(&sigma, None);
        *counts.entry(image).or_default() += if negative { -1 } else { 1 };
        total += 1;
    }
    let denom: T = from_u64(total);
    let terms = counts
        .into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|(k, c)| (k, from_i64::<T>(c) / denom.clone()))
        .collect();
    Ok(Polynomial { n: m.n(), terms })
}

/// `e_k(z_1², …, z_n²)` in the chosen alphabet.
pub fn elementary_sym_squares<T: Scalar>(k: usize, family: Family, n: usize) -> Result<Polynomial<T>> {
    if n == 0 {
        return Err(Error::EmptyRank);
    }
    if k == 0 || k > n {
        return Err(Error::IndexOutOfRange { k, n });
    }
    let mut pattern = vec![0u32; n];
    pattern[..k].iter_mut().for_each(|e| *e = 1);
    monomial_sym_squares(&pattern, family, n)
}

/// `m_{2λ}`: one term `z^{2α(λ)}` per distinct rearrangement `α(λ)`.
pub fn monomial_sym_squares<T: Scalar>(lambda: &[u32], family: Family, n: usize) -> Result<Polynomial<T>> {
    if lambda.len() != n {
        return Err(Error::LengthMismatch { got: lambda.len(), n });
    }
    if n == 0 {
        return Err(Error::EmptyRank);
    }
    let zeros = vec![0u32; n];
    let mut f = Polynomial::zero(n);
    for arrangement in distinct_rearrangements(lambda) {
        let doubled: Vec<u32> = arrangement.iter().map(|e| 2 * e).collect();
        let m = match family {
            Family::X => Monomial::from_parts(doubled, zeros.clone()),
            Family::Y => Monomial::from_parts(zeros.clone(), doubled),
        };
        f.add_term(m, T::one());
    }
    Ok(f)
}

/// Distinct permutations of a multiset, in increasing lexicographic order.
pub(crate) fn distinct_rearrangements(values: &[u32]) -> Vec<Vec<u32>> {
    let mut cur = values.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    // step to the next lexicographic permutation until none is left
    while let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) {
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
    out
}

impl<T: Scalar> std::ops::AddAssign<&Polynomial<T>> for Polynomial<T> {
    fn add_assign(&mut self, rhs: &Polynomial<T>) {
        assert_eq!(self.n, rhs.n, "polynomial rank mismatch");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl<T: Scalar> std::ops::SubAssign<&Polynomial<T>> for Polynomial<T> {
    fn sub_assign(&mut self, rhs: &Polynomial<T>) {
        assert_eq!(self.n, rhs.n, "polynomial rank mismatch");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl<T: Scalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<T: Scalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<T: Scalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect();
        Polynomial { n: self.n, terms }
    }
}

impl<T: Scalar> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        assert_eq!(self.n, rhs.n, "polynomial rank mismatch");
        let mut out = Polynomial::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.mul(b), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = *c < T::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_unit() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag} {m}")?;
            }
        }
        Ok(())
    }
}
