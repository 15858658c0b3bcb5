//! Bigraded Hilbert series, invariant dimensions and degreewise freeness checks.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::descent_basis::{diagonal_signed_descent_monomial_c, ordered_monomials};
use crate::error::{Error, Result};
use crate::linalg::rank_rational;
use crate::poly::{monomial_sym_squares, Bidegree, Family, Monomial, Polynomial};
use crate::signed_perm::SignedPermutation;

/// Largest total degree accepted by the dimension and rank routines.
pub const DEGREE_GUARD: u32 = 64;

/// Largest rank for the maj/inversion comparison over `Σ_n`.
pub const MACMAHON_GUARD: usize = 7;

/// Truncated bivariate series `Σ c_{a,b} s^a t^b` with non-negative integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiSeries {
    truncation: u32,
    coeffs: BTreeMap<(u32, u32), u64>,
}

impl BiSeries {
    fn from_dense(dense: &[Vec<u64>], truncation: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        for (a, row) in dense.iter().enumerate() {
            for (b, &c) in row.iter().enumerate() {
                if c > 0 && (a + b) as u32 <= truncation {
                    coeffs.insert((a as u32, b as u32), c);
                }
            }
        }
        Self { truncation, coeffs }
    }

    /// Terms with `a + b` above this bound are not represented.
    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn coefficient(&self, a: u32, b: u32) -> u64 {
        self.coeffs.get(&(a, b)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((u32, u32), u64)> + '_ {
        self.coeffs.iter().map(|(&k, &v)| (k, v))
    }

    /// Value at `s = t = 1` of the stored terms.
    pub fn total(&self) -> u64 {
        self.coeffs.values().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().all(|(&(a, b), &c)| self.coefficient(b, a) == c)
    }

    /// Coefficients of `Σ_b c_{·,b} t^b`, i.e. the series at `s = 1`.
    pub fn t_marginal(&self) -> Vec<u64> {
        let top = self.coeffs.keys().map(|&(_, b)| b).max().map_or(0, |b| b as usize + 1);
        let mut out = vec![0u64; top];
        for (&(_, b), &c) in &self.coeffs {
            out[b as usize] += c;
        }
        out
    }
}

/// `Σ_{σ∈B_n} s^{fmaj(σ⁻¹)} t^{fmaj(σ)}`.
pub fn fmaj_numerator(n: usize) -> Result<BiSeries> {
    let mut coeffs: BTreeMap<(u32, u32), u64> = BTreeMap::new();
    for sigma in SignedPermutation::enumerate(n)? {
        *coeffs.entry((sigma.inverse().fmaj(), sigma.fmaj())).or_default() += 1;
    }
    // fmaj ≤ n², so nothing is lost at this truncation
    Ok(BiSeries {
        truncation: 2 * (n * n) as u32,
        coeffs,
    })
}

/// The numerator divided by `Π_{i=1..n} (1 - s^{2i})(1 - t^{2i})`, up to total degree `max_degree`.
pub fn hilbert_series(n: usize, max_degree: u32) -> Result<BiSeries> {
    let numerator = fmaj_numerator(n)?;
    let size = max_degree as usize + 1;
    let mut dense = vec![vec![0u64; size]; size];
    for ((a, b), c) in numerator.iter() {
        if a + b <= max_degree {
            dense[a as usize][b as usize] += c;
        }
    }
    for i in 1..=n {
        let stride = 2 * i;
        // 1/(1 - s^stride): running sum along a with the given stride
        for a in stride..size {
            let (done, rest) = dense.split_at_mut(a);
            for (cell, below) in rest[0].iter_mut().zip(&done[a - stride]) {
                *cell += below;
            }
        }
        for row in dense.iter_mut() {
            for b in stride..size {
                row[b] += row[b - stride];
            }
        }
    }
    Ok(BiSeries::from_dense(&dense, max_degree))
}

/// Coefficient of `s^a t^b` in the bigraded Hilbert series of the diagonal invariants.
pub fn series_coefficient(n: usize, a: u32, b: u32) -> Result<u64> {
    Ok(hilbert_series(n, a + b)?.coefficient(a, b))
}

fn check_degree(a: u32, b: u32) -> Result<()> {
    if a + b > DEGREE_GUARD {
        return Err(Error::DegreeGuardExceeded {
            degree: a + b,
            guard: DEGREE_GUARD,
        });
    }
    Ok(())
}

fn check_rank(n: usize) -> Result<()> {
    // surfaces the enumeration guard without enumerating
    SignedPermutation::enumerate(n).map(|_| ())
}

/// Dimension of the bidegree-`(a, b)` invariants, counted as the number of
/// ordered monomials of that bidegree (their averages have disjoint supports).
pub fn invariant_dimension(n: usize, a: u32, b: u32) -> Result<usize> {
    check_rank(n)?;
    check_degree(a, b)?;
    Ok(ordered_monomials(n, Bidegree::new(a, b)).len())
}

/// The same dimension as the rank of `{ρ(m)}` over every monomial of bidegree `(a, b)`.
pub fn invariant_dimension_by_elimination(n: usize, a: u32, b: u32) -> Result<usize> {
    check_rank(n)?;
    check_degree(a, b)?;
    let mut averages = Vec::new();
    for p in compositions(a, n) {
        for q in compositions(b, n) {
            let m = Monomial::new(&p, &q)?;
            averages.push(Polynomial::from_monomial(m, BigRational::one()).rho()?);
        }
    }
    Ok(rank_of(&averages))
}

fn rank_of(polys: &[Polynomial<BigRational>]) -> usize {
    let mut index: BTreeMap<&Monomial, usize> = BTreeMap::new();
    for f in polys {
        for m in f.monomials() {
            let next = index.len();
            index.entry(m).or_insert(next);
        }
    }
    let rows: Vec<Vec<BigRational>> = polys
        .iter()
        .map(|f| {
            let mut row = vec![BigRational::zero(); index.len()];
            for (m, c) in f.terms() {
                row[index[m]] = c.clone();
            }
            row
        })
        .collect();
    rank_rational(&rows)
}

/// Outcome of the degreewise freeness check at one bidegree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellReport {
    pub n: usize,
    pub a: u32,
    pub b: u32,
    pub rank: usize,
    pub dim: usize,
    pub series: u64,
    pub generators: usize,
    pub pass: bool,
}

/// The products `m_{2ν}(x)·m_{2μ}(y)·ρ(c_σ)` of bidegree `(a, b)`.
pub fn basis_products(n: usize, a: u32, b: u32) -> Result<Vec<(SignedPermutation, Polynomial<BigRational>)>> {
    check_degree(a, b)?;
    let mut out = Vec::new();
    for sigma in SignedPermutation::enumerate(n)? {
        let (da, db) = (sigma.inverse().fmaj(), sigma.fmaj());
        if da > a || db > b || !(a - da).is_multiple_of(2) || !(b - db).is_multiple_of(2) {
            continue;
        }
        let basis = Polynomial::from_monomial(diagonal_signed_descent_monomial_c(&sigma), BigRational::one()).rho()?;
        for nu in partitions((a - da) / 2, n) {
            let sx = monomial_sym_squares::<BigRational>(&nu, Family::X, n)?;
            let with_x = &sx * &basis;
            for mu in partitions((b - db) / 2, n) {
                let sy = monomial_sym_squares::<BigRational>(&mu, Family::Y, n)?;
                out.push((sigma.clone(), &sy * &with_x));
            }
        }
    }
    Ok(out)
}

pub fn verify_basis_rank(n: usize, a: u32, b: u32) -> Result<CellReport> {
    check_rank(n)?;
    check_degree(a, b)?;
    let ordered = ordered_monomials(n, Bidegree::new(a, b));
    let products = basis_products(n, a, b)?;
    // an invariant is determined by its coefficients on ordered monomials
    let rows: Vec<Vec<BigRational>> = products
        .iter()
        .map(|(_, f)| {
            ordered
                .iter()
                .map(|m| f.coeff(m).cloned().unwrap_or_else(BigRational::zero))
                .collect()
        })
        .collect();
    let rank = if ordered.is_empty() { 0 } else { rank_rational(&rows) };
    let dim = ordered.len();
    let series = series_coefficient(n, a, b)?;
    let generators = products.len();
    let pass = rank == dim && dim as u64 == series && generators == dim;
    Ok(CellReport {
        n,
        a,
        b,
        rank,
        dim,
        series,
        generators,
        pass,
    })
}

/// Reports for every bidegree with `a + b ≤ max_degree`, ordered by `(a, b)`.
pub fn verify_cells(n: usize, max_degree: u32) -> Result<Vec<CellReport>> {
    check_rank(n)?;
    check_degree(max_degree, 0)?;
    let mut out = Vec::new();
    for a in 0..=max_degree {
        for b in 0..=max_degree - a {
            out.push(verify_basis_rank(n, a, b)?);
        }
    }
    Ok(out)
}

fn check_macmahon(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyRank);
    }
    if n > MACMAHON_GUARD {
        let count: u64 = (1..=n as u64).product();
        return Err(Error::GuardExceeded {
            n,
            guard: MACMAHON_GUARD,
            count: count.to_string(),
        });
    }
    Ok(())
}

fn distribution(n: usize, stat: impl Fn(&SignedPermutation) -> u32) -> Result<Vec<u64>> {
    check_macmahon(n)?;
    let mut out = vec![0u64; n * (n - 1) / 2 + 1];
    for pi in SignedPermutation::permutations(n)? {
        out[stat(&pi) as usize] += 1;
    }
    Ok(out)
}

/// Number of permutations of `1..n` by major index.
pub fn maj_distribution(n: usize) -> Result<Vec<u64>> {
    distribution(n, SignedPermutation::maj)
}

/// Number of permutations of `1..n` by inversion count.
pub fn inversion_distribution(n: usize) -> Result<Vec<u64>> {
    distribution(n, SignedPermutation::inversions)
}

pub fn maj_inv_equidistribution(n: usize) -> Result<bool> {
    Ok(maj_distribution(n)? == inversion_distribution(n)?)
}

/// Non-increasing sequences of length `parts` summing to `total`.
pub fn partitions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for v in (0..=max.min(rest)).rev() {
            if v * (slots as u32) < rest {
                break;
            }
            cur.push(v);
            go(rest - v, v, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, total, parts, &mut Vec::with_capacity(parts), &mut out);
    out
}

/// All length-`parts` sequences of non-negative integers summing to `total`.
pub fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    fn go(rest: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            cur.push(rest);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for v in 0..=rest {
            cur.push(v);
            go(rest - v, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 {
        go(total, parts, &mut Vec::with_capacity(parts), &mut out);
    }
    out
}
