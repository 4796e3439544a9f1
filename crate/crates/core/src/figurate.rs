//! Figurate numbers and the sparse signed theta series built from them.
//!
//! Every multiplier and indicator right-hand side in the recurrence catalog is
//! a [`SparseSeries`]: an ordered, lazily generated stream of
//! `(exponent, coefficient)` terms. Two-sided sums over `j ∈ ℤ` are generated as
//! independent monotone branches and merged by exponent.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use crate::error::{domain, Result};

/// The four figurate families used by the recurrences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FigurateKind {
    /// `k(k+1)/2`, `k ≥ 0`.
    Triangular,
    /// `j(3j−1)/2`, `j ∈ ℤ`.
    GenPentagonal,
    /// `j(5j−3)/2`, `j ∈ ℤ`.
    GenHeptagonal,
    /// `k²`, `k ≥ 0`.
    Square,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: u64) -> Parity {
        if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn matches(self, n: u64) -> bool {
        Parity::of(n) == self
    }
}

/// Closed-form value of a figurate number.
///
/// Fits in 64 bits for `|index| ≤ 2³⁰`; larger indices are rejected rather
/// than wrapped.
pub fn figurate_value(kind: FigurateKind, index: i64) -> Result<u64> {
    let j = index as i128;
    let value = match kind {
        FigurateKind::Triangular | FigurateKind::Square if index < 0 => {
            return Err(domain(format!("{kind:?} index must be non-negative, got {index}")));
        }
        FigurateKind::Triangular => j * (j + 1) / 2,
        FigurateKind::Square => j * j,
        FigurateKind::GenPentagonal => j * (3 * j - 1) / 2,
        FigurateKind::GenHeptagonal => j * (5 * j - 3) / 2,
    };
    u64::try_from(value).map_err(|_| domain(format!("{kind:?}({index}) exceeds 64 bits")))
}

/// Inverse of [`figurate_value`]: the unique index hitting `n`, if any.
pub fn figurate_index(kind: FigurateKind, n: u64) -> Option<i64> {
    let n = n as u128;
    match kind {
        FigurateKind::Square => exact_sqrt(n).map(|r| r as i64),
        FigurateKind::Triangular => {
            // 8n+1 = (2k+1)²
            let r = exact_sqrt(8 * n + 1)?;
            Some(((r - 1) / 2) as i64)
        }
        FigurateKind::GenPentagonal => {
            // 24n+1 = (6j−1)²; r ≡ 5 (mod 6) for j > 0, r ≡ 1 (mod 6) for j ≤ 0
            let r = exact_sqrt(24 * n + 1)? as i128;
            match r % 6 {
                5 => Some(((r + 1) / 6) as i64),
                1 => Some(((1 - r) / 6) as i64),
                _ => None,
            }
        }
        FigurateKind::GenHeptagonal => {
            // 40n+9 = (10j−3)²
            let r = exact_sqrt(40 * n + 9)? as i128;
            match r % 10 {
                7 => Some(((r + 3) / 10) as i64),
                3 => Some(((3 - r) / 10) as i64),
                _ => None,
            }
        }
    }
}

fn exact_sqrt(n: u128) -> Option<u128> {
    let r = n.isqrt();
    (r * r == n).then_some(r)
}

/// Parity of the k-th triangular number `k(k+1)/2`.
///
/// Even exactly for `k ≡ 0, 3 (mod 4)`: the classes `4i` and `4i−1` give
/// `8i²+2i` and `8i²−2i`, while `4i−2` and `4i−3` give `8i²−6i+1` and
/// `8i²−10i+3`.
pub fn triangular_parity(k: u64) -> Parity {
    match k % 4 {
        0 | 3 => Parity::Even,
        _ => Parity::Odd,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    fn pow(self, e: i128) -> i64 {
        if self == Sign::Minus && e % 2 != 0 {
            -1
        } else {
            1
        }
    }
}

/// One term `coeff · q^exponent` of a sparse series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Term {
    pub exponent: u64,
    pub coeff: i64,
}

impl Term {
    pub const fn new(exponent: u64, coeff: i64) -> Term {
        Term { exponent, coeff }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:+}q^{}", self.coeff, self.exponent)
    }
}

/// The theta-type sums used as multipliers and indicator right-hand sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ThetaSpec {
    /// `Σ_{j∈ℤ} (−1)^j q^{s·j(3j−1)/2}`, i.e. `(q^s;q^s)∞`.
    Euler { scale: u64 },
    /// `Σ_{k≥0} q^{s·k(k+1)/2}`.
    Triangular { scale: u64 },
    /// Triangular numbers of even value, coefficient +1.
    EvenValuedTriangular,
    /// Triangular numbers of odd value, coefficient +1.
    OddValuedTriangular,
    /// `φ(−q^s) = 1 + 2 Σ_{k≥1} (−1)^k q^{s·k²}`.
    PhiNeg { scale: u64 },
    /// `Σ_{k≥1} (−1)^k q^{s·k²}` (no constant term).
    SignedSquareTail { scale: u64 },
    /// Ramanujan's `f(a, b)` at `a = σa·q^u`, `b = σb·q^v`.
    FTheta { u: u64, v: u64, sign_a: Sign, sign_b: Sign },
    /// `Σ_{j∈ℤ} (−1)^j q^{j(5j−3)/2}`.
    SignedHeptagonal,
    /// The constant series 1.
    Delta0,
}

impl ThetaSpec {
    fn validate(&self) -> Result<()> {
        match *self {
            ThetaSpec::Euler { scale }
            | ThetaSpec::Triangular { scale }
            | ThetaSpec::PhiNeg { scale }
            | ThetaSpec::SignedSquareTail { scale }
                if scale == 0 =>
            {
                Err(domain(format!("{self:?}: scale must be ≥ 1")))
            }
            ThetaSpec::FTheta { u, v, .. } if u == 0 || v == 0 => {
                Err(domain(format!("{self:?}: u and v must be ≥ 1")))
            }
            _ => Ok(()),
        }
    }

    /// Monotone branches whose merge is the series.
    fn branches(self) -> Vec<TermIter<'static>> {
        match self {
            ThetaSpec::Euler { scale } => {
                let s = scale as i128;
                two_sided(move |j| term(s * j * (3 * j - 1) / 2, Sign::Minus.pow(j)))
            }
            ThetaSpec::Triangular { scale } => {
                let s = scale as i128;
                one_sided(0, move |k| term(s * k * (k + 1) / 2, 1))
            }
            ThetaSpec::EvenValuedTriangular => parity_triangular(Parity::Even),
            ThetaSpec::OddValuedTriangular => parity_triangular(Parity::Odd),
            ThetaSpec::PhiNeg { scale } => {
                let s = scale as i128;
                let mut out = vec![single(Term::new(0, 1))];
                out.extend(one_sided(1, move |k| term(s * k * k, 2 * Sign::Minus.pow(k))));
                out
            }
            ThetaSpec::SignedSquareTail { scale } => {
                let s = scale as i128;
                one_sided(1, move |k| term(s * k * k, Sign::Minus.pow(k)))
            }
            ThetaSpec::FTheta { u, v, sign_a, sign_b } => {
                let (u, v) = (u as i128, v as i128);
                two_sided(move |n| {
                    let ea = n * (n + 1) / 2;
                    let eb = n * (n - 1) / 2;
                    term(u * ea + v * eb, sign_a.pow(ea) * sign_b.pow(eb))
                })
            }
            ThetaSpec::SignedHeptagonal => two_sided(|j| term(j * (5 * j - 3) / 2, Sign::Minus.pow(j))),
            ThetaSpec::Delta0 => vec![single(Term::new(0, 1))],
        }
    }

    /// Coefficient at `n` through the figurate inverse, where a closed form exists.
    fn coeff_closed_form(self, n: u64) -> Option<i64> {
        let scaled = |s: u64| (n % s == 0).then_some(n / s);
        let sign = |j: i64| if j % 2 == 0 { 1 } else { -1 };
        let c = match self {
            ThetaSpec::Euler { scale } => scaled(scale)
                .and_then(|m| figurate_index(FigurateKind::GenPentagonal, m))
                .map_or(0, sign),
            ThetaSpec::Triangular { scale } => scaled(scale)
                .and_then(|m| figurate_index(FigurateKind::Triangular, m))
                .map_or(0, |_| 1),
            ThetaSpec::EvenValuedTriangular | ThetaSpec::OddValuedTriangular => {
                let want = if self == ThetaSpec::EvenValuedTriangular { Parity::Even } else { Parity::Odd };
                let hit = figurate_index(FigurateKind::Triangular, n).is_some() && want.matches(n);
                i64::from(hit)
            }
            ThetaSpec::PhiNeg { .. } if n == 0 => 1,
            ThetaSpec::PhiNeg { scale } => scaled(scale)
                .and_then(|m| figurate_index(FigurateKind::Square, m))
                .map_or(0, |k| 2 * sign(k)),
            ThetaSpec::SignedSquareTail { .. } if n == 0 => 0,
            ThetaSpec::SignedSquareTail { scale } => scaled(scale)
                .and_then(|m| figurate_index(FigurateKind::Square, m))
                .map_or(0, sign),
            ThetaSpec::SignedHeptagonal => figurate_index(FigurateKind::GenHeptagonal, n).map_or(0, sign),
            ThetaSpec::Delta0 => i64::from(n == 0),
            ThetaSpec::FTheta { .. } => return None,
        };
        Some(c)
    }
}

type TermIter<'a> = Box<dyn Iterator<Item = Term> + Send + 'a>;

fn term(exponent: i128, coeff: i64) -> Option<Term> {
    u64::try_from(exponent).ok().map(|e| Term::new(e, coeff))
}

fn single(t: Term) -> TermIter<'static> {
    Box::new(std::iter::once(t))
}

fn one_sided<F>(start: i128, f: F) -> Vec<TermIter<'static>>
where
    F: Fn(i128) -> Option<Term> + Send + 'static,
{
    vec![Box::new((start..).map_while(f))]
}

/// Branches `j = 0`, `j ≥ 1` and `j ≤ −1` of a sum over `ℤ`, positive first.
fn two_sided<F>(f: F) -> Vec<TermIter<'static>>
where
    F: Fn(i128) -> Option<Term> + Clone + Send + 'static,
{
    let neg = f.clone();
    let zero = f(0).expect("zero index term fits");
    vec![
        single(zero),
        Box::new((1..).map_while(f)),
        Box::new((1..).map_while(move |k: i128| neg(-k))),
    ]
}

fn parity_triangular(parity: Parity) -> Vec<TermIter<'static>> {
    let all = (0..).map_while(|k: i128| term(k * (k + 1) / 2, 1));
    vec![Box::new(all.filter(move |t| parity.matches(t.exponent)))]
}

/// K-way merge of monotone term streams; equal exponents are summed and
/// zero sums dropped. Ties pop in branch order, so `j > 0` precedes `j < 0`.
struct Merge<'a> {
    branches: Vec<TermIter<'a>>,
    heads: BinaryHeap<Reverse<(u64, usize, i64)>>,
}

impl<'a> Merge<'a> {
    fn new(mut branches: Vec<TermIter<'a>>) -> Self {
        let mut heads = BinaryHeap::new();
        for (i, b) in branches.iter_mut().enumerate() {
            if let Some(t) = b.next() {
                heads.push(Reverse((t.exponent, i, t.coeff)));
            }
        }
        Merge { branches, heads }
    }

    fn advance(&mut self, branch: usize, after: u64) {
        if let Some(t) = self.branches[branch].next() {
            debug_assert!(t.exponent > after, "branch {branch} not strictly increasing");
            self.heads.push(Reverse((t.exponent, branch, t.coeff)));
        }
    }
}

impl Iterator for Merge<'_> {
    type Item = Term;

    fn next(&mut self) -> Option<Term> {
        loop {
            let Reverse((exp, branch, coeff)) = self.heads.pop()?;
            let mut total = coeff;
            self.advance(branch, exp);
            while let Some(&Reverse((e, b, c))) = self.heads.peek() {
                if e != exp {
                    break;
                }
                self.heads.pop();
                total += c;
                self.advance(b, e);
            }
            if total != 0 {
                return Some(Term::new(exp, total));
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Source {
    Theta(ThetaSpec),
    Sum(Vec<SparseSeries>),
    Finite(Vec<Term>),
}

/// A lazily generated sparse series with strictly increasing exponents and
/// nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SparseSeries {
    source: Source,
}

impl SparseSeries {
    pub fn theta(spec: ThetaSpec) -> Result<SparseSeries> {
        spec.validate()?;
        Ok(SparseSeries { source: Source::Theta(spec) })
    }

    /// A finite series from explicit terms.
    pub fn from_terms(terms: Vec<Term>) -> Result<SparseSeries> {
        if let Some(w) = terms.windows(2).find(|w| w[0].exponent >= w[1].exponent) {
            return Err(domain(format!("exponents not strictly increasing at {} → {}", w[0], w[1])));
        }
        if let Some(t) = terms.iter().find(|t| t.coeff == 0) {
            return Err(domain(format!("zero coefficient at exponent {}", t.exponent)));
        }
        Ok(SparseSeries { source: Source::Finite(terms) })
    }

    /// Coefficient-wise sum; colliding exponents add.
    pub fn sum(parts: Vec<SparseSeries>) -> SparseSeries {
        SparseSeries { source: Source::Sum(parts) }
    }

    pub fn spec(&self) -> Option<ThetaSpec> {
        match self.source {
            Source::Theta(spec) => Some(spec),
            _ => None,
        }
    }

    fn branches(&self) -> Vec<TermIter<'_>> {
        match &self.source {
            Source::Theta(spec) => spec.branches(),
            Source::Finite(terms) => vec![Box::new(terms.iter().copied())],
            Source::Sum(parts) => parts.iter().map(|p| Box::new(p.terms()) as TermIter<'_>).collect(),
        }
    }

    /// All terms in increasing exponent order. Infinite for theta sources.
    pub fn terms(&self) -> impl Iterator<Item = Term> + Send + '_ {
        Merge::new(self.branches())
    }

    pub fn terms_upto(&self, bound: u64) -> Vec<Term> {
        self.terms().take_while(|t| t.exponent <= bound).collect()
    }

    /// Number of raw branch terms up to `bound` before merging. Equal to
    /// `terms_upto(bound).len()` exactly when no exponent collides.
    pub fn raw_term_count(&self, bound: u64) -> usize {
        self.branches()
            .into_iter()
            .map(|b| b.take_while(|t| t.exponent <= bound).count())
            .sum()
    }

    pub fn constant_term(&self) -> i64 {
        self.coeff_at(0)
    }

    /// Coefficient at `n`; closed-form figurate lookup where available,
    /// otherwise a scan of the term stream.
    pub fn coeff_at(&self, n: u64) -> i64 {
        if let Some(c) = self.spec().and_then(|s| s.coeff_closed_form(n)) {
            return c;
        }
        self.terms()
            .take_while(|t| t.exponent <= n)
            .find(|t| t.exponent == n)
            .map_or(0, |t| t.coeff)
    }
}

pub fn theta_series(spec: ThetaSpec) -> Result<SparseSeries> {
    SparseSeries::theta(spec)
}

/// `f(−q^{m−c}, −q^c) = Σ_{j∈ℤ} (−1)^j q^{(mj² + (m−2c)j)/2}`, the product
/// `(q^c;q^m)∞ (q^{m−c};q^m)∞ (q^m;q^m)∞`.
pub fn residue_pair_theta(m: u64, c: u64) -> Result<SparseSeries> {
    if m < 3 {
        return Err(domain(format!("m ≥ 3 required, got m = {m}")));
    }
    if c == 0 || c >= m {
        return Err(domain(format!("1 ≤ c ≤ m−1 required, got c = {c}, m = {m}")));
    }
    if 2 * c == m {
        return Err(domain(format!("2c = m degenerate (c = {c}, m = {m})")));
    }
    SparseSeries::theta(ThetaSpec::FTheta { u: m - c, v: c, sign_a: Sign::Minus, sign_b: Sign::Minus })
}
