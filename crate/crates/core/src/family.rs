//! Partition families and their generating-function product forms.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{domain, usage, Error, Result};
use crate::figurate::Sign;

/// A partition family with validated parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilySpec {
    /// Unrestricted partitions, `p(n)`.
    P,
    /// Distinct parts.
    Pd,
    /// Odd parts.
    Po,
    /// Distinct odd parts.
    QQ,
    /// Overpartitions.
    OverP,
    /// Overpartitions into distinct parts, `∏(1+q^k)²`.
    OverPd,
    /// ℓ-regular partitions (no part divisible by ℓ).
    Bl { ell: u64 },
    /// Parts congruent to `±c (mod m)`, `c` stored canonically as `min(c, m−c)`.
    Pcm { m: u64, c: u64 },
}

/// `∏_{k≥0} (1 + sign·q^{residue + modulus·k})^exponent`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductFactor {
    pub sign: Sign,
    pub residue: u64,
    pub modulus: u64,
    pub exponent: i32,
}

impl ProductFactor {
    pub fn new(sign: Sign, residue: u64, modulus: u64, exponent: i32) -> Result<ProductFactor> {
        if modulus == 0 || residue == 0 || residue > modulus {
            return Err(domain(format!(
                "product factor needs 1 ≤ residue ≤ modulus, got residue {residue}, modulus {modulus}"
            )));
        }
        Ok(ProductFactor { sign, residue, modulus, exponent })
    }

    /// `(q^r; q^m)∞^e`.
    pub fn pochhammer(residue: u64, modulus: u64, exponent: i32) -> Result<ProductFactor> {
        ProductFactor::new(Sign::Minus, residue, modulus, exponent)
    }

    /// Exponents `r, r+m, r+2m, …` up to `bound`.
    pub fn exponents(&self, bound: u64) -> impl Iterator<Item = u64> {
        (self.residue..=bound).step_by(self.modulus as usize)
    }
}

impl FamilySpec {
    pub fn regular(ell: u64) -> Result<FamilySpec> {
        if ell == 0 {
            return Err(domain("ℓ ≥ 1 required for ℓ-regular partitions"));
        }
        Ok(FamilySpec::Bl { ell })
    }

    pub fn residue_pair(m: u64, c: u64) -> Result<FamilySpec> {
        if m < 3 {
            return Err(domain(format!("m ≥ 3 required, got m = {m}")));
        }
        if c == 0 || c >= m {
            return Err(domain(format!("1 ≤ c ≤ m−1 required, got c = {c}, m = {m}")));
        }
        if 2 * c == m {
            return Err(domain(format!("2c = m degenerate (c = {c}, m = {m})")));
        }
        Ok(FamilySpec::Pcm { m, c: c.min(m - c) })
    }

    /// Builds a family from its CLI name and `key=value` parameters.
    pub fn from_name(name: &str, params: &Params) -> Result<FamilySpec> {
        let family = match name {
            "P" => FamilySpec::P,
            "Pd" => FamilySpec::Pd,
            "Po" => FamilySpec::Po,
            "QQ" => FamilySpec::QQ,
            "OverP" => FamilySpec::OverP,
            "OverPd" => FamilySpec::OverPd,
            "Bl" => {
                params.expect_only(&["ell"])?;
                return FamilySpec::regular(params.require("ell")?);
            }
            "Pcm" => {
                params.expect_only(&["m", "c"])?;
                return FamilySpec::residue_pair(params.require("m")?, params.require("c")?);
            }
            other => return Err(usage(format!("unknown family `{other}`"))),
        };
        params.expect_only(&[])?;
        Ok(family)
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::P => "P",
            FamilySpec::Pd => "Pd",
            FamilySpec::Po => "Po",
            FamilySpec::QQ => "QQ",
            FamilySpec::OverP => "OverP",
            FamilySpec::OverPd => "OverPd",
            FamilySpec::Bl { .. } => "Bl",
            FamilySpec::Pcm { .. } => "Pcm",
        }
    }

    pub fn params(&self) -> Params {
        let mut p = Params::default();
        match *self {
            FamilySpec::Bl { ell } => {
                p.insert("ell", ell);
            }
            FamilySpec::Pcm { m, c } => {
                p.insert("m", m);
                p.insert("c", c);
            }
            _ => {}
        }
        p
    }

    /// Generating function as a product of Pochhammer-type factors.
    pub fn product_factors(&self) -> Vec<ProductFactor> {
        let f = |sign, r, m, e| ProductFactor { sign, residue: r, modulus: m, exponent: e };
        use Sign::{Minus, Plus};
        match *self {
            FamilySpec::P => vec![f(Minus, 1, 1, -1)],
            FamilySpec::Pd => vec![f(Plus, 1, 1, 1)],
            FamilySpec::Po => vec![f(Minus, 1, 2, -1)],
            FamilySpec::QQ => vec![f(Plus, 1, 2, 1)],
            FamilySpec::OverP => vec![f(Plus, 1, 1, 1), f(Minus, 1, 1, -1)],
            FamilySpec::OverPd => vec![f(Plus, 1, 1, 2)],
            FamilySpec::Bl { ell } => vec![f(Minus, ell, ell, 1), f(Minus, 1, 1, -1)],
            FamilySpec::Pcm { m, c } => vec![f(Minus, c, m, -1), f(Minus, m - c, m, -1)],
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())?;
        let params = self.params();
        if !params.is_empty() {
            write!(f, "({params})")?;
        }
        Ok(())
    }
}

/// Named non-negative integer parameters, e.g. `m=5,c=2`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Params(BTreeMap<String, u64>);

impl Params {
    pub fn new() -> Params {
        Params::default()
    }

    pub fn with(mut self, key: &str, value: u64) -> Params {
        self.insert(key, value);
        self
    }

    pub fn insert(&mut self, key: &str, value: u64) {
        let key = if key == "l" { "ell" } else { key };
        self.0.insert(key.to_string(), value);
    }

    pub fn get(&self, key: &str) -> Option<u64> {
        self.0.get(key).copied()
    }

    pub fn require(&self, key: &str) -> Result<u64> {
        self.get(key).ok_or_else(|| usage(format!("missing parameter `{key}`")))
    }

    pub fn expect_only(&self, allowed: &[&str]) -> Result<()> {
        match self.0.keys().find(|k| !allowed.contains(&k.as_str())) {
            Some(k) => Err(usage(format!("unexpected parameter `{k}`"))),
            None => Ok(()),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, u64)> {
        self.0.iter().map(|(k, v)| (k.as_str(), *v))
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Params {
    type Err = Error;

    fn from_str(s: &str) -> Result<Params> {
        let mut params = Params::new();
        for item in s.split(',').map(str::trim).filter(|i| !i.is_empty()) {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| usage(format!("parameter `{item}` is not key=value")))?;
            let v = v
                .trim()
                .parse()
                .map_err(|_| usage(format!("parameter `{item}` needs a non-negative integer value")))?;
            params.insert(k.trim(), v);
        }
        Ok(params)
    }
}
