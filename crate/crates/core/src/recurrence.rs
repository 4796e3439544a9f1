//! Scaled convolution identities `Σᵢ cᵢ·F((n−eᵢ)/s) = R(n)`.
//!
//! A term contributes only when `eᵢ ≤ n` and `s | (n−eᵢ)`. The engine evaluates
//! both sides against a table of `F`, solves for `F` when the identity has a
//! unit leading term, and checks identities against the three oracles.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::counting;
use crate::error::{usage, Error, Result};
use crate::family::FamilySpec;
use crate::figurate::{Parity, SparseSeries, Term};
use crate::qseries::{self, Count, DenseSeries};

/// Right-hand side of an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RhsSpec {
    /// Coefficient of `q^n` in a sparse series.
    Sparse(SparseSeries),
    /// `(−1)^{n·alternating} · G(n/divisor)` when `divisor | n` and `n` matches
    /// the parity mask; zero otherwise.
    FamilyRef {
        family: FamilySpec,
        divisor: u64,
        parity_mask: Option<Parity>,
        alternating: bool,
    },
}

impl RhsSpec {
    pub fn family(family: FamilySpec) -> RhsSpec {
        RhsSpec::FamilyRef { family, divisor: 1, parity_mask: None, alternating: false }
    }

    pub fn referenced_family(&self) -> Option<FamilySpec> {
        match self {
            RhsSpec::FamilyRef { family, .. } => Some(*family),
            RhsSpec::Sparse(_) => None,
        }
    }

    /// Largest aux-table index needed to evaluate `R(0..=n_max)`.
    fn aux_len(&self, n_max: usize) -> usize {
        match self {
            RhsSpec::FamilyRef { divisor, .. } => n_max / *divisor as usize,
            RhsSpec::Sparse(_) => 0,
        }
    }
}

/// Which `n` an identity is claimed for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    All,
    Even,
    Odd,
}

impl Domain {
    pub fn contains(self, n: u64) -> bool {
        match self {
            Domain::All => true,
            Domain::Even => n % 2 == 0,
            Domain::Odd => n % 2 == 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identity {
    pub id: String,
    pub multiplier: SparseSeries,
    pub family: FamilySpec,
    pub scale: u64,
    pub rhs: RhsSpec,
    pub domain: Domain,
}

impl Identity {
    /// Structural equality ignoring the id.
    pub fn same_statement(&self, other: &Identity) -> bool {
        self.multiplier == other.multiplier
            && self.family == other.family
            && self.scale == other.scale
            && self.rhs == other.rhs
            && self.domain == other.domain
    }

    /// `Ok` when [`solve`] can compute the family from this identity.
    pub fn check_solvable(&self) -> Result<i64> {
        if self.scale != 1 {
            return Err(usage(format!("{}: cannot solve an identity with scale {}", self.id, self.scale)));
        }
        let lead = self.multiplier.terms().next();
        let c0 = match lead {
            Some(Term { exponent: 0, coeff }) if coeff.abs() == 1 => coeff,
            _ => return Err(usage(format!("{}: multiplier has no unit constant term", self.id))),
        };
        if self.rhs.referenced_family() == Some(self.family) {
            return Err(usage(format!("{}: right-hand side refers to the solved family", self.id)));
        }
        if self.domain != Domain::All {
            return Err(usage(format!("{}: identity holds only on {:?} n", self.id, self.domain)));
        }
        Ok(c0)
    }
}

/// `acc += c · x` for the small coefficients multipliers carry.
fn add_scaled(acc: &mut BigInt, c: i64, x: &BigInt) {
    match c {
        1 => *acc += x,
        -1 => *acc -= x,
        2 => {
            *acc += x;
            *acc += x;
        }
        -2 => {
            *acc -= x;
            *acc -= x;
        }
        _ => *acc += x * c,
    }
}

/// Left-hand side at `n` over pre-collected multiplier terms.
fn lhs_with_terms(terms: &[Term], scale: u64, table: &[Count], n: u64) -> BigInt {
    let mut acc = BigInt::zero();
    for t in terms.iter().take_while(|t| t.exponent <= n) {
        let gap = n - t.exponent;
        if gap % scale == 0 {
            add_scaled(&mut acc, t.coeff, &table[(gap / scale) as usize]);
        }
    }
    acc
}

pub fn lhs_apply(ident: &Identity, f_table: &[Count], n: u64) -> Result<BigInt> {
    let need = (n / ident.scale) as usize;
    if f_table.len() <= need {
        return Err(usage(format!(
            "{}: table of {} values too short for n = {n} (needs index {need})",
            ident.id,
            f_table.len()
        )));
    }
    Ok(lhs_with_terms(&ident.multiplier.terms_upto(n), ident.scale, f_table, n))
}

pub fn rhs_apply(ident: &Identity, aux: Option<&[Count]>, n: u64) -> Result<BigInt> {
    match &ident.rhs {
        RhsSpec::Sparse(series) => Ok(BigInt::from(series.coeff_at(n))),
        RhsSpec::FamilyRef { family, divisor, parity_mask, alternating } => {
            if n % divisor != 0 || parity_mask.is_some_and(|p| !p.matches(n)) {
                return Ok(BigInt::zero());
            }
            let table = aux.ok_or_else(|| usage(format!("{}: needs a {family} table", ident.id)))?;
            let k = (n / divisor) as usize;
            let value = table
                .get(k)
                .ok_or_else(|| usage(format!("{}: {family} table too short for index {k}", ident.id)))?;
            Ok(if *alternating && n % 2 == 1 { -value } else { value.clone() })
        }
    }
}

/// Computes `F(0..=n_max)` from `F(n) = c₀⁻¹·(R(n) − Σ_{e>0} c·F(n−e))`.
pub fn solve(ident: &Identity, n_max: usize, aux: Option<&[Count]>) -> Result<Vec<Count>> {
    let c0 = ident.check_solvable()?;
    let terms = ident.multiplier.terms_upto(n_max as u64);
    let mut table: Vec<Count> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut acc = rhs_apply(ident, aux, n as u64)?;
        for t in terms.iter().skip(1).take_while(|t| t.exponent <= n as u64) {
            add_scaled(&mut acc, -t.coeff, &table[n - t.exponent as usize]);
        }
        if c0 < 0 {
            acc = -acc;
        }
        if acc.is_negative() {
            return Err(Error::Integrity(format!("{}: solved value at n = {n} is negative ({acc})", ident.id)));
        }
        table.push(acc);
    }
    Ok(table)
}

/// The identity's left-hand side over a whole `F` table: `L(n)` for `n ≤ n_max`.
/// Used to derive the right-hand family from a solved `F`.
pub fn lhs_table(ident: &Identity, f_table: &[Count], n_max: usize) -> Result<Vec<BigInt>> {
    let need = n_max / ident.scale as usize;
    if f_table.len() <= need {
        return Err(usage(format!("{}: table too short for n = {n_max}", ident.id)));
    }
    let terms = ident.multiplier.terms_upto(n_max as u64);
    Ok((0..=n_max as u64).map(|n| lhs_with_terms(&terms, ident.scale, f_table, n)).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Oracle {
    Series,
    Dp,
    Enum,
}

impl Oracle {
    /// Family table `0..=n_max` from this oracle.
    pub fn table(self, family: &FamilySpec, n_max: usize) -> Result<Vec<Count>> {
        match self {
            Oracle::Series => Ok(qseries::family_series(family, n_max)?.into_coeffs()),
            Oracle::Dp => Ok(counting::dp_table(family, n_max)),
            Oracle::Enum => counting::enum_table(family, n_max),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Oracle::Series => "series",
            Oracle::Dp => "dp",
            Oracle::Enum => "enum",
        }
    }
}

impl fmt::Display for Oracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub n: u64,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub id: String,
    pub max_n: u64,
    pub oracle: Oracle,
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `lhs = rhs` for every `n ≤ n_max` in the identity's domain, with
/// `F` and any referenced family tabulated by `oracle`.
pub fn verify(ident: &Identity, n_max: usize, oracle: Oracle) -> Result<VerifyReport> {
    let f_table = oracle.table(&ident.family, n_max / ident.scale as usize)?;
    let aux = match ident.rhs.referenced_family() {
        Some(g) => Some(oracle.table(&g, ident.rhs.aux_len(n_max))?),
        None => None,
    };
    let terms = ident.multiplier.terms_upto(n_max as u64);
    let mut violations = Vec::new();
    for n in (0..=n_max as u64).filter(|&n| ident.domain.contains(n)) {
        let lhs = lhs_with_terms(&terms, ident.scale, &f_table, n);
        let rhs = rhs_apply(ident, aux.as_deref(), n)?;
        if lhs != rhs {
            violations.push(Violation { n, lhs, rhs });
        }
    }
    Ok(VerifyReport { id: ident.id.clone(), max_n: n_max as u64, oracle, violations })
}

/// Dense right-hand side `R(0..=order)`.
pub fn rhs_series(rhs: &RhsSpec, order: usize) -> Result<DenseSeries> {
    match rhs {
        RhsSpec::Sparse(series) => Ok(qseries::dense_from_sparse(series, order)),
        RhsSpec::FamilyRef { family, divisor, parity_mask, alternating } => {
            let mut g = qseries::family_series(family, order / *divisor as usize)?.substitute_power(*divisor as usize, order);
            if *alternating {
                g = g.negate_variable();
            }
            let coeffs = g
                .into_coeffs()
                .into_iter()
                .enumerate()
                .map(|(n, c)| if parity_mask.is_some_and(|p| !p.matches(n as u64)) { BigInt::zero() } else { c })
                .collect();
            Ok(DenseSeries::from_coeffs(coeffs))
        }
    }
}

/// Whole-series check of `M(q)·F(q^s) = R(q)` to `order`; returns the first
/// in-domain coefficient that differs.
pub fn series_verify(ident: &Identity, order: usize) -> Result<Option<u64>> {
    let s = ident.scale as usize;
    let f = qseries::family_series(&ident.family, order / s)?.substitute_power(s, order);
    let m = qseries::dense_from_sparse(&ident.multiplier, order);
    let lhs = qseries::mul_trunc(&m, &f)?;
    let rhs = rhs_series(&ident.rhs, order)?;
    Ok((0..=order)
        .filter(|&n| ident.domain.contains(n as u64))
        .find(|&n| lhs.coeff(n) != rhs.coeff(n))
        .map(|n| n as u64))
}
