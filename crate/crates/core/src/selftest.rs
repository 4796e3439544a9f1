//! Series identity suite: each check compares a product expansion against
//! its theta-series side, coefficient by coefficient, to a fixed order.

use crate::error::Result;
use crate::family::ProductFactor;
use crate::figurate::{residue_pair_theta, theta_series, Sign, SparseSeries, Term, ThetaSpec};
use crate::qseries::{dense_from_sparse, first_mismatch, pochhammer, triple_product_factors, DenseSeries};

/// Outcome of one series identity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub first_mismatch: Option<usize>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Deliberate faults for exercising the failure path.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Faults {
    /// Drop the `q^5` term from the pentagonal theta series.
    pub corrupt_euler: bool,
}

/// `(u, v, σa, σb)` instantiations of the triple product that are checked.
pub const TRIPLE_PRODUCT_CASES: [(u64, u64, Sign, Sign); 6] = [
    (1, 3, Sign::Plus, Sign::Plus),
    (1, 5, Sign::Minus, Sign::Minus),
    (4, 1, Sign::Minus, Sign::Minus),
    (3, 2, Sign::Minus, Sign::Minus),
    (5, 1, Sign::Minus, Sign::Minus),
    (4, 2, Sign::Minus, Sign::Minus),
];

/// Residue pairs `(m, c)` for the three-factor product check.
pub const RESIDUE_PAIR_CASES: [(u64, u64); 7] = [(5, 1), (5, 2), (6, 1), (6, 2), (7, 1), (7, 2), (7, 3)];

fn theta(spec: ThetaSpec) -> SparseSeries {
    theta_series(spec).expect("self-test theta specs are valid")
}

fn euler_series(faults: Faults, order: usize) -> Result<SparseSeries> {
    let euler = theta(ThetaSpec::Euler { scale: 1 });
    if !faults.corrupt_euler {
        return Ok(euler);
    }
    let terms: Vec<Term> = euler.terms_upto(order as u64).into_iter().filter(|t| t.exponent != 5).collect();
    SparseSeries::from_terms(terms)
}

fn check(name: impl Into<String>, a: &DenseSeries, b: &DenseSeries) -> Result<Check> {
    Ok(Check { name: name.into(), first_mismatch: first_mismatch(a, b)? })
}

fn sign_char(s: Sign) -> char {
    if s == Sign::Plus {
        '+'
    } else {
        '-'
    }
}

pub fn run(order: usize, faults: Faults) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let dense = |s: &SparseSeries| dense_from_sparse(s, order);

    let qq = pochhammer(&[ProductFactor::pochhammer(1, 1, 1)?], order)?;
    checks.push(check("pentagonal number theorem", &qq, &dense(&euler_series(faults, order)?))?);

    for (u, v, sa, sb) in TRIPLE_PRODUCT_CASES {
        let series = dense(&theta(ThetaSpec::FTheta { u, v, sign_a: sa, sign_b: sb }));
        let product = pochhammer(&triple_product_factors(u, v, sa, sb)?, order)?;
        let name = format!("triple product f({}q^{u}, {}q^{v})", sign_char(sa), sign_char(sb));
        checks.push(check(name, &product, &series)?);
    }

    let psi = dense(&theta(ThetaSpec::FTheta { u: 1, v: 3, sign_a: Sign::Plus, sign_b: Sign::Plus }));
    let psi_product = pochhammer(&[ProductFactor::pochhammer(2, 2, 1)?, ProductFactor::pochhammer(1, 2, -1)?], order)?;
    checks.push(check("psi product form", &psi_product, &psi)?);

    let three_factor = |m: u64, c: u64| -> Result<DenseSeries> {
        pochhammer(
            &[
                ProductFactor::pochhammer(c, m, 1)?,
                ProductFactor::pochhammer(m - c, m, 1)?,
                ProductFactor::pochhammer(m, m, 1)?,
            ],
            order,
        )
    };
    let f15 = dense(&theta(ThetaSpec::FTheta { u: 1, v: 5, sign_a: Sign::Minus, sign_b: Sign::Minus }));
    checks.push(check("f(-q,-q^5) as (q;q^6)(q^5;q^6)(q^6;q^6)", &three_factor(6, 1)?, &f15)?);
    for (m, c) in RESIDUE_PAIR_CASES {
        let name = format!("residue pair product m={m} c={c}");
        checks.push(check(name, &three_factor(m, c)?, &dense(&residue_pair_theta(m, c)?))?);
    }

    let even = dense(&theta(ThetaSpec::EvenValuedTriangular));
    let odd = dense(&theta(ThetaSpec::OddValuedTriangular));
    checks.push(check("psi(q) = even + odd triangular", &psi, &even.add(&odd)?)?);
    checks.push(check("psi(-q) = even - odd triangular", &psi.negate_variable(), &even.sub(&odd)?)?);

    Ok(checks)
}
