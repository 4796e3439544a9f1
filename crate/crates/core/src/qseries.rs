//! Truncated formal power series over arbitrary-precision integers.
//!
//! This is the generating-function oracle: every family's product form is
//! expanded here, and series identities are checked coefficient by
//! coefficient up to an explicit truncation order.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{domain, usage, Result};
use crate::family::{FamilySpec, ProductFactor};
use crate::figurate::{Sign, SparseSeries};

pub type Count = BigInt;

/// Coefficients `a_0..=a_N` of a series truncated after `q^N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseSeries {
    coeffs: Vec<BigInt>,
}

impl DenseSeries {
    pub fn zero(order: usize) -> DenseSeries {
        DenseSeries { coeffs: vec![BigInt::zero(); order + 1] }
    }

    pub fn one(order: usize) -> DenseSeries {
        let mut s = DenseSeries::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Panics on an empty coefficient table (a series has at least `a_0`).
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> DenseSeries {
        assert!(!coeffs.is_empty(), "a dense series needs at least one coefficient");
        DenseSeries { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> DenseSeries {
        DenseSeries::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Same series at a smaller or larger order (new coefficients are zero).
    pub fn truncate(&self, order: usize) -> DenseSeries {
        let mut coeffs: Vec<BigInt> = self.coeffs.iter().take(order + 1).cloned().collect();
        coeffs.resize(order + 1, BigInt::zero());
        DenseSeries { coeffs }
    }

    /// `A(q^s)` truncated at `order`.
    pub fn substitute_power(&self, s: usize, order: usize) -> DenseSeries {
        assert!(s >= 1, "substitution power must be ≥ 1");
        let mut out = DenseSeries::zero(order);
        for (k, c) in self.coeffs.iter().enumerate() {
            match k.checked_mul(s) {
                Some(e) if e <= order => out.coeffs[e] = c.clone(),
                _ => break,
            }
        }
        out
    }

    /// `A(−q)`.
    pub fn negate_variable(&self) -> DenseSeries {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| if n % 2 == 1 { -c } else { c.clone() })
            .collect();
        DenseSeries { coeffs }
    }

    pub fn add(&self, other: &DenseSeries) -> Result<DenseSeries> {
        check_orders(self, other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(DenseSeries { coeffs })
    }

    pub fn sub(&self, other: &DenseSeries) -> Result<DenseSeries> {
        check_orders(self, other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(DenseSeries { coeffs })
    }

    /// In-place multiplication by `(1 + sign·q^d)`.
    fn mul_binomial(&mut self, sign: Sign, d: usize) {
        if d == 0 || d > self.order() {
            return;
        }
        for n in (d..=self.order()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            let src = &lo[n - d];
            if src.is_zero() {
                continue;
            }
            match sign {
                Sign::Plus => hi[0] += src,
                Sign::Minus => hi[0] -= src,
            }
        }
    }
}

fn check_orders(a: &DenseSeries, b: &DenseSeries) -> Result<()> {
    if a.order() != b.order() {
        return Err(usage(format!("series order mismatch: {} vs {}", a.order(), b.order())));
    }
    Ok(())
}

pub fn dense_from_sparse(sparse: &SparseSeries, order: usize) -> DenseSeries {
    let mut out = DenseSeries::zero(order);
    for t in sparse.terms().take_while(|t| t.exponent <= order as u64) {
        out.coeffs[t.exponent as usize] = BigInt::from(t.coeff);
    }
    out
}

/// Cauchy product truncated at the common order.
pub fn mul_trunc(a: &DenseSeries, b: &DenseSeries) -> Result<DenseSeries> {
    check_orders(a, b)?;
    let order = a.order();
    let mut out = DenseSeries::zero(order);
    let b_nonzero: Vec<usize> = (0..=order).filter(|&j| !b.coeffs[j].is_zero()).collect();
    for (i, ai) in a.coeffs.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        let unit = if ai.is_one() {
            Some(Sign::Plus)
        } else if (-ai).is_one() {
            Some(Sign::Minus)
        } else {
            None
        };
        for &j in b_nonzero.iter().take_while(|&&j| i + j <= order) {
            let target = &mut out.coeffs[i + j];
            match unit {
                Some(Sign::Plus) => *target += &b.coeffs[j],
                Some(Sign::Minus) => *target -= &b.coeffs[j],
                None => *target += ai * &b.coeffs[j],
            }
        }
    }
    Ok(out)
}

/// Multiplicative inverse; requires a unit (±1) constant term.
pub fn inv_trunc(a: &DenseSeries) -> Result<DenseSeries> {
    let a0 = &a.coeffs[0];
    let negate = if a0.is_one() {
        false
    } else if (-a0).is_one() {
        true
    } else {
        return Err(domain(format!("constant term {a0} is not a unit")));
    };
    let order = a.order();
    let support: Vec<(usize, &BigInt)> = a.coeffs.iter().enumerate().skip(1).filter(|(_, c)| !c.is_zero()).collect();
    let mut out: Vec<BigInt> = Vec::with_capacity(order + 1);
    out.push(a0.clone());
    for n in 1..=order {
        // a0·b_n = −Σ_{k≥1} a_k b_{n−k}
        let mut acc = BigInt::zero();
        for &(k, ak) in support.iter().take_while(|(k, _)| *k <= n) {
            acc -= ak * &out[n - k];
        }
        if negate {
            acc = -acc;
        }
        out.push(acc);
    }
    Ok(DenseSeries { coeffs: out })
}

/// Expands a product of Pochhammer-type factors to `order`.
///
/// Positive-exponent factors multiply in place; negative-exponent factors are
/// expanded with the exponent negated and then inverted once.
pub fn pochhammer(factors: &[ProductFactor], order: usize) -> Result<DenseSeries> {
    for f in factors {
        ProductFactor::new(f.sign, f.residue, f.modulus, f.exponent)?;
    }
    let expand = |pick: fn(i32) -> Option<u32>| {
        let mut s = DenseSeries::one(order);
        for f in factors {
            let Some(times) = pick(f.exponent) else { continue };
            for d in f.exponents(order as u64) {
                for _ in 0..times {
                    s.mul_binomial(f.sign, d as usize);
                }
            }
        }
        s
    };
    let numerator = expand(|e| (e > 0).then_some(e as u32));
    if factors.iter().all(|f| f.exponent >= 0) {
        return Ok(numerator);
    }
    let denominator = expand(|e| (e < 0).then_some(e.unsigned_abs()));
    mul_trunc(&numerator, &inv_trunc(&denominator)?)
}

/// Generating function of a family; coefficient `n` is the family count at `n`.
pub fn family_series(spec: &FamilySpec, order: usize) -> Result<DenseSeries> {
    pochhammer(&spec.product_factors(), order)
}

pub fn first_mismatch(a: &DenseSeries, b: &DenseSeries) -> Result<Option<usize>> {
    check_orders(a, b)?;
    Ok(a.coeffs.iter().zip(&b.coeffs).position(|(x, y)| x != y))
}

/// Product side of the Jacobi triple product for `f(σa·q^u, σb·q^v)`:
/// `(−a;ab)∞ (−b;ab)∞ (ab;ab)∞` as canonical factors.
pub fn triple_product_factors(u: u64, v: u64, sign_a: Sign, sign_b: Sign) -> Result<Vec<ProductFactor>> {
    if u == 0 || v == 0 {
        return Err(domain("triple product needs u, v ≥ 1"));
    }
    let w = u + v;
    let flip = |s: Sign| if s == Sign::Plus { Sign::Minus } else { Sign::Plus };
    // (−a;ab)∞ = ∏_k (1 + σa·(σaσb)^k·q^{u+wk}), likewise for b.
    if sign_a == sign_b {
        return Ok(vec![
            ProductFactor::new(sign_a, u, w, 1)?,
            ProductFactor::new(sign_b, v, w, 1)?,
            ProductFactor::new(Sign::Minus, w, w, 1)?,
        ]);
    }
    // ab = −q^w: powers of ab alternate in sign, so split each product by the
    // parity of k over modulus 2w.
    Ok(vec![
        ProductFactor::new(sign_a, u, 2 * w, 1)?,
        ProductFactor::new(flip(sign_a), u + w, 2 * w, 1)?,
        ProductFactor::new(sign_b, v, 2 * w, 1)?,
        ProductFactor::new(flip(sign_b), v + w, 2 * w, 1)?,
        ProductFactor::new(Sign::Plus, w, 2 * w, 1)?,
        ProductFactor::new(Sign::Minus, 2 * w, 2 * w, 1)?,
    ])
}

/// True when every coefficient is non-negative.
pub fn is_nonnegative(s: &DenseSeries) -> bool {
    s.coeffs.iter().all(|c| !c.is_negative())
}
