//! Expansion of invariants in the basis `{ρ(c_σ)}` over `ℚ[x]^{B_n} ⊗ ℚ[y]^{B_n}`.
//!
//! Each bihomogeneous component is reduced by repeatedly taking its largest
//! ordered monomial `m`, decomposing `m = x^{2ν} y^{2μ} c_σ`, and subtracting
//! the matching multiple of `m_{2ν}(x)·m_{2μ}(y)·ρ(c_σ)`. Every ordered
//! monomial left behind is strictly smaller than `m`, so the loop terminates.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::descent_basis::{
    compare_unchecked, decompose, diagonal_signed_descent_monomial_c, is_ordered, ordered_monomials,
};
use crate::error::{Error, Result};
use crate::poly::{monomial_sym_squares, Bidegree, Family, Monomial, Polynomial};
use crate::scalar::Scalar;
use crate::signed_perm::{SignedPermutation, ENUMERATION_GUARD};

/// `f = Σ_σ entries[σ] · ρ(c_σ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Expansion<T> {
    n: usize,
    entries: BTreeMap<SignedPermutation, Polynomial<T>>,
}

impl<T: Scalar> Expansion<T> {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            entries: BTreeMap::new(),
        }
    }

    /// `{σ: 1}`
    pub fn unit(sigma: SignedPermutation) -> Self {
        let n = sigma.n();
        let mut e = Self::new(n);
        e.add(sigma, &Polynomial::one(n));
        e
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, sigma: &SignedPermutation) -> Option<&Polynomial<T>> {
        self.entries.get(sigma)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&SignedPermutation, &Polynomial<T>)> {
        self.entries.iter()
    }

    /// Adds `coeff` to the entry of `sigma`, dropping it if it cancels.
    pub fn add(&mut self, sigma: SignedPermutation, coeff: &Polynomial<T>) {
        assert_eq!(sigma.n(), self.n, "expansion rank mismatch");
        assert_eq!(coeff.n(), self.n, "expansion rank mismatch");
        let slot = self.entries.entry(sigma).or_insert_with(|| Polynomial::zero(self.n));
        *slot += coeff;
        self.entries.retain(|_, c| !c.is_zero());
    }

    pub fn merge(&mut self, other: &Self) {
        for (s, c) in &other.entries {
            self.add(s.clone(), c);
        }
    }

    /// Every coefficient lies in `ℚ[x]^{B_n} ⊗ ℚ[y]^{B_n}`.
    pub fn coefficients_separately_invariant(&self) -> bool {
        self.entries.values().all(|c| c.is_separately_invariant())
    }
}

/// Reassembles `Σ_σ coeff_σ · ρ(c_σ)`.
pub fn evaluate<T: Scalar>(exp: &Expansion<T>) -> Result<Polynomial<T>> {
    let mut out = Polynomial::zero(exp.n);
    for (sigma, coeff) in &exp.entries {
        let basis = Polynomial::from_monomial(diagonal_signed_descent_monomial_c(sigma), T::one()).rho()?;
        out += &(coeff * &basis);
    }
    Ok(out)
}

fn check_preconditions<T: Scalar>(f: &Polynomial<T>, bd: Bidegree) -> Result<()> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_bihomogeneous_of(bd) {
        return Err(Error::NotBihomogeneous { a: bd.a, b: bd.b });
    }
    if let Some(g) = f.invariance_violation() {
        return Err(Error::NotInvariant(g));
    }
    Ok(())
}

/// Largest ordered monomial of a bihomogeneous invariant, with its coefficient.
pub fn leading_term<T: Scalar>(f: &Polynomial<T>, bd: Bidegree) -> Result<(Monomial, T)> {
    check_preconditions(f, bd)?;
    leading_unchecked(f)
}

fn leading_unchecked<T: Scalar>(f: &Polynomial<T>) -> Result<(Monomial, T)> {
    f.terms()
        .filter(|(m, _)| is_ordered(m))
        .max_by(|a, b| compare_unchecked(a.0, b.0))
        .map(|(m, c)| (m.clone(), c.clone()))
        .ok_or_else(|| Error::BrokenInvariant("nonzero invariant without an ordered monomial".into()))
}

/// One reduction of a bihomogeneous invariant against its leading ordered monomial.
#[derive(Debug, Clone, PartialEq)]
pub struct ReductionStep<T> {
    pub leading: Monomial,
    pub leading_coeff: T,
    pub sigma: SignedPermutation,
    pub nu: Vec<u32>,
    pub mu: Vec<u32>,
    /// Coefficient of `leading` in `m_{2ν}(x)·m_{2μ}(y)·ρ(c_σ)`; always positive.
    pub k: T,
    /// `(leading_coeff / k)·m_{2ν}(x)·m_{2μ}(y)`, the contribution to the entry of `sigma`.
    pub multiplier: Polynomial<T>,
    pub remainder: Polynomial<T>,
}

pub fn reduce_step<T: Scalar>(f: &Polynomial<T>, bd: Bidegree) -> Result<ReductionStep<T>> {
    check_preconditions(f, bd)?;
    reduce_unchecked(f)
}

fn reduce_unchecked<T: Scalar>(f: &Polynomial<T>) -> Result<ReductionStep<T>> {
    let n = f.n();
    let (leading, leading_coeff) = leading_unchecked(f)?;
    let dec = decompose(&leading)?;
    let sym = &monomial_sym_squares::<T>(&dec.nu, Family::X, n)? * &monomial_sym_squares::<T>(&dec.mu, Family::Y, n)?;
    let basis = Polynomial::from_monomial(diagonal_signed_descent_monomial_c(&dec.sigma), T::one()).rho()?;
    let product = &sym * &basis;
    let k = product.coeff(&leading).cloned().unwrap_or_else(T::zero);
    if k.partial_cmp(&T::zero()) != Some(std::cmp::Ordering::Greater) {
        return Err(Error::BrokenInvariant(format!(
            "leading coefficient {k:?} of {leading:?} in m_2nu m_2mu rho(c_sigma) is not positive"
        )));
    }
    let factor = leading_coeff.clone() / k.clone();
    let remainder = f - &product.scale(&factor);
    let multiplier = sym.scale(&factor);
    Ok(ReductionStep {
        leading,
        leading_coeff,
        sigma: dec.sigma,
        nu: dec.nu,
        mu: dec.mu,
        k,
        multiplier,
        remainder,
    })
}

/// The full reduction chain of one bihomogeneous component.
pub fn reduction_chain<T: Scalar>(f: &Polynomial<T>, bd: Bidegree) -> Result<Vec<ReductionStep<T>>> {
    check_preconditions(f, bd)?;
    let bound = ordered_monomials(f.n(), bd).len();
    let mut steps: Vec<ReductionStep<T>> = Vec::new();
    let mut current = f.clone();
    while !current.is_zero() {
        if steps.len() >= bound {
            return Err(Error::NonTermination { bound });
        }
        let step = reduce_unchecked(&current)?;
        if let Some(prev) = steps.last() {
            if compare_unchecked(&step.leading, &prev.leading) != Ordering::Less {
                return Err(Error::BrokenInvariant(format!(
                    "leading monomial {:?} did not decrease below {:?}",
                    step.leading, prev.leading
                )));
            }
        }
        current = step.remainder.clone();
        steps.push(step);
    }
    Ok(steps)
}

/// Writes an invariant `f` as `Σ_σ coeff_σ·ρ(c_σ)` with separately invariant coefficients.
pub fn straighten<T: Scalar>(f: &Polynomial<T>) -> Result<Expansion<T>> {
    let n = f.n();
    if n > ENUMERATION_GUARD {
        return Err(Error::GuardExceeded {
            n,
            guard: ENUMERATION_GUARD,
            count: crate::signed_perm::group_order(n).to_string(),
        });
    }
    if let Some(g) = f.invariance_violation() {
        return Err(Error::NotInvariant(g));
    }
    let mut out = Expansion::new(n);
    for (bd, part) in f.bidegree_components() {
        for step in reduction_chain(&part, bd)? {
            out.add(step.sigma, &step.multiplier);
        }
    }
    Ok(out)
}
