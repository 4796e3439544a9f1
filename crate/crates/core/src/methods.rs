//! Computing a family table by any of the four methods.

use std::fmt;
use std::str::FromStr;

use crate::catalog;
use crate::counting;
use crate::error::{usage, Error, Result};
use crate::family::FamilySpec;
use crate::qseries::{self, Count};
use crate::recurrence::{self, Domain, Identity, RhsSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Recurrence,
    Series,
    Dp,
    Enum,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Recurrence, Method::Series, Method::Dp, Method::Enum];

    pub fn name(self) -> &'static str {
        match self {
            Method::Recurrence => "recurrence",
            Method::Series => "series",
            Method::Dp => "dp",
            Method::Enum => "enum",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Method> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| usage(format!("unknown method `{s}` (expected recurrence, series, dp or enum)")))
    }
}

/// Family counts `0..=n_max` by `method`. `via` selects the identity used by
/// the recurrence method; other methods ignore it.
pub fn compute(family: &FamilySpec, n_max: usize, method: Method, via: Option<&Identity>) -> Result<Vec<Count>> {
    match method {
        Method::Recurrence => match via {
            Some(ident) => by_identity(family, n_max, ident, 0),
            None => by_identity(family, n_max, &catalog::default_identity(family), 0),
        },
        Method::Series => Ok(qseries::family_series(family, n_max)?.into_coeffs()),
        Method::Dp => Ok(counting::dp_table(family, n_max)),
        Method::Enum => counting::enum_table(family, n_max),
    }
}

const MAX_CHAIN: usize = 4;

fn by_identity(family: &FamilySpec, n_max: usize, ident: &Identity, depth: usize) -> Result<Vec<Count>> {
    if depth > MAX_CHAIN {
        return Err(usage(format!("{}: recurrence chain too deep", ident.id)));
    }
    let nested = |g: &FamilySpec, len: usize| by_identity(g, len, &catalog::default_identity(g), depth + 1);

    if ident.family == *family {
        ident.check_solvable()?;
        let aux = match ident.rhs.referenced_family() {
            Some(g) => Some(nested(&g, n_max)?),
            None => None,
        };
        return recurrence::solve(ident, n_max, aux.as_deref());
    }

    let derives_family = matches!(
        ident.rhs,
        RhsSpec::FamilyRef { family: g, divisor: 1, parity_mask: None, alternating: false } if g == *family
    );
    if derives_family && ident.domain == Domain::All {
        let f_table = nested(&ident.family, n_max / ident.scale as usize)?;
        return recurrence::lhs_table(ident, &f_table, n_max);
    }
    Err(usage(format!("{} cannot compute {family} for every n", ident.id)))
}
