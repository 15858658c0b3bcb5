//! JSON schemas for polynomials, expansions and decompositions.
//!
//! Coefficients are written as exact fraction strings `"num/den"`; on input a
//! bare integer `"num"` is accepted too.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::descent_basis::Decomposition;
use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial};
use crate::signed_perm::SignedPermutation;
use crate::straighten::Expansion;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub p: Vec<u32>,
    pub q: Vec<u32>,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub n: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionEntryJson {
    pub sigma: Vec<i32>,
    pub coeff: PolynomialJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionJson {
    pub n: usize,
    pub entries: Vec<ExpansionEntryJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub sigma: Vec<i32>,
    pub nu: Vec<u32>,
    pub delta: Vec<u32>,
    pub mu: Vec<u32>,
    pub gamma: Vec<u32>,
}

pub fn format_rational(c: &BigRational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

pub fn parse_rational(text: &str) -> Result<BigRational> {
    let t = text.trim();
    let bad = || Error::Parse(format!("bad coefficient {t:?}"));
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let num: num_bigint::BigInt = num.parse().map_err(|_| bad())?;
    let den: num_bigint::BigInt = den.parse().map_err(|_| bad())?;
    if den == 0.into() {
        return Err(Error::Parse(format!("zero denominator in {t:?}")));
    }
    Ok(BigRational::new(num, den))
}

impl From<&Polynomial<BigRational>> for PolynomialJson {
    fn from(f: &Polynomial<BigRational>) -> Self {
        let terms = f
            .terms()
            .map(|(m, c)| TermJson {
                p: m.p().to_vec(),
                q: m.q().to_vec(),
                coeff: format_rational(c),
            })
            .collect();
        Self { n: f.n(), terms }
    }
}

impl PolynomialJson {
    pub fn to_polynomial(&self) -> Result<Polynomial<BigRational>> {
        if self.n == 0 {
            return Err(Error::EmptyRank);
        }
        let mut f = Polynomial::zero(self.n);
        for t in &self.terms {
            if t.p.len() != self.n {
                return Err(Error::LengthMismatch {
                    got: t.p.len(),
                    n: self.n,
                });
            }
            if t.q.len() != self.n {
                return Err(Error::LengthMismatch {
                    got: t.q.len(),
                    n: self.n,
                });
            }
            f.add_term(Monomial::new(&t.p, &t.q)?, parse_rational(&t.coeff)?);
        }
        Ok(f)
    }
}

impl From<&Expansion<BigRational>> for ExpansionJson {
    fn from(e: &Expansion<BigRational>) -> Self {
        let entries = e
            .entries()
            .map(|(s, c)| ExpansionEntryJson {
                sigma: s.window().to_vec(),
                coeff: c.into(),
            })
            .collect();
        Self { n: e.n(), entries }
    }
}

impl ExpansionJson {
    pub fn to_expansion(&self) -> Result<Expansion<BigRational>> {
        let mut e = Expansion::new(self.n);
        for entry in &self.entries {
            let sigma = SignedPermutation::new(entry.sigma.clone())?;
            if sigma.n() != self.n || entry.coeff.n != self.n {
                return Err(Error::RankMismatch {
                    left: self.n,
                    right: sigma.n().max(entry.coeff.n),
                });
            }
            e.add(sigma, &entry.coeff.to_polynomial()?);
        }
        Ok(e)
    }
}

impl From<&Decomposition> for DecompositionJson {
    fn from(d: &Decomposition) -> Self {
        Self {
            sigma: d.sigma.window().to_vec(),
            nu: d.nu.clone(),
            delta: d.delta.clone(),
            mu: d.mu.clone(),
            gamma: d.gamma.clone(),
        }
    }
}

pub fn polynomial_to_json(f: &Polynomial<BigRational>) -> String {
    serde_json::to_string(&PolynomialJson::from(f)).expect("serializable")
}

pub fn polynomial_from_json(text: &str) -> Result<Polynomial<BigRational>> {
    let repr: PolynomialJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    repr.to_polynomial()
}

pub fn expansion_to_json(e: &Expansion<BigRational>) -> String {
    serde_json::to_string(&ExpansionJson::from(e)).expect("serializable")
}

pub fn expansion_from_json(text: &str) -> Result<Expansion<BigRational>> {
    let repr: ExpansionJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    repr.to_expansion()
}
