//! The recurrence catalog: every identity as a named, parameterized
//! [`Identity`]. Entry ids are stable strings used by the CLI.

use crate::error::{usage, Result};
use crate::family::{FamilySpec, Params};
use crate::figurate::{residue_pair_theta, theta_series, Parity, Sign, SparseSeries, ThetaSpec};
use crate::recurrence::{Domain, Identity, RhsSpec};

pub struct CatalogEntry {
    pub id: &'static str,
    /// Human-readable statement of the identity and its attribution.
    pub citation: &'static str,
    /// Parameter names with their default values.
    pub defaults: &'static [(&'static str, u64)],
}

const ELL: &[(&str, u64)] = &[("ell", 2)];
const MC: &[(&str, u64)] = &[("m", 5), ("c", 1)];

pub const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry { id: "euler-pentagonal", citation: "Euler: Σ_j (−1)^j p(n − j(3j−1)/2) = [n = 0]", defaults: &[] },
    CatalogEntry {
        id: "ewell-triangular",
        citation: "Ewell: Σ_j (−1)^j p(n − j(2j−1)) = p_d(n/2) for even n, 0 for odd n",
        defaults: &[],
    },
    CatalogEntry {
        id: "cks-squares",
        citation: "Choliy–Kolitsch–Sills: p(n) + Σ_{j≥1} (−1)^j [p(n − j²) + p(n − 2j²)] = qq(n) for even n, 0 for odd n",
        defaults: &[],
    },
    CatalogEntry {
        id: "cks-alt-squares",
        citation: "Choliy–Kolitsch–Sills: p(n) + 2 Σ_{j≥1} (−1)^j p(n − j²) = (−1)^n qq(n)",
        defaults: &[],
    },
    CatalogEntry { id: "thm1-even", citation: "Σ_j p((n − t)/2) over even-valued triangular t = p_d(n), n even", defaults: &[] },
    CatalogEntry { id: "thm1-odd", citation: "Σ_j p((n − t)/2) over odd-valued triangular t = p_o(n), n odd", defaults: &[] },
    CatalogEntry {
        id: "thm2-overpartition",
        citation: "overpartitions: p̄(n) + 2 Σ_{j≥1} (−1)^j p̄(n − j²) = [n = 0]",
        defaults: &[],
    },
    CatalogEntry {
        id: "thm3-overpartition-pd",
        citation: "overpartitions: Σ_j (−1)^j p̄(n − j(3j−1)/2) = p_d(n)",
        defaults: &[],
    },
    CatalogEntry {
        id: "thm4-overpartition-distinct",
        citation: "overpartitions: Σ_j (−1)^j p̄(n − j(3j−1)) = p̄_d(n), overpartitions into distinct parts",
        defaults: &[],
    },
    CatalogEntry {
        id: "thm5-qq",
        citation: "distinct odd parts: Σ_j (−1)^j qq(n − 2j(3j−1)) = [n is triangular]",
        defaults: &[],
    },
    CatalogEntry {
        id: "ono-thm1",
        citation: "Ono–Robbins–Wilson: Σ_j (−1)^j p_d(n − j(3j−1)) = [n is triangular]",
        defaults: &[],
    },
    CatalogEntry {
        id: "thm6-po",
        citation: "odd parts: Σ_j (−1)^j p_o(n − j(3j−2)) = [n is 3 times a triangular number]",
        defaults: &[],
    },
    CatalogEntry {
        id: "thm7-ell-regular",
        citation: "ℓ-regular: Σ_j (−1)^j p(n − ℓ·j(3j−1)/2) = b_ℓ(n)",
        defaults: ELL,
    },
    CatalogEntry {
        id: "thm8-pm",
        citation: "parts ≡ ±c (mod m): Σ_j (−1)^j p^c_m(n − (mj² + (m−2c)j)/2) = (−1)^j at n = m·j(3j−1)/2, else 0",
        defaults: MC,
    },
    CatalogEntry { id: "cor1-R1", citation: "Rogers–Ramanujan parts ≡ ±1 (mod 5): the (5,1) case of thm8-pm", defaults: &[] },
    CatalogEntry { id: "cor1-R2-direct", citation: "Rogers–Ramanujan parts ≡ ±2 (mod 5): the (5,2) case of thm8-pm", defaults: &[] },
    CatalogEntry {
        id: "cor1-R2-pentagonal",
        citation: "parts ≡ ±2 (mod 5): Σ_j (−1)^j p_R2(n − j(3j−1)/2) = (−1)^j at generalized heptagonal n = j(5j−3)/2",
        defaults: &[],
    },
    CatalogEntry { id: "cor2-s1", citation: "parts ≡ ±1 (mod 6): the (6,1) case of thm8-pm", defaults: &[] },
    CatalogEntry { id: "cor2-s2", citation: "parts ≡ ±2 (mod 6): the (6,2) case of thm8-pm", defaults: &[] },
];

/// Parameter matrix used for full-catalog verification.
pub const ELL_MATRIX: &[u64] = &[1, 2, 3, 5, 7];
pub const MC_MATRIX: &[(u64, u64)] = &[(5, 1), (5, 2), (6, 1), (6, 2), (7, 1), (7, 2), (7, 3)];

pub fn all_ids() -> Vec<&'static str> {
    ENTRIES.iter().map(|e| e.id).collect()
}

pub fn entry(id: &str) -> Result<&'static CatalogEntry> {
    ENTRIES.iter().find(|e| e.id == id).ok_or_else(|| usage(format!("unknown identity `{id}`")))
}

/// Every catalog identity, with parametric entries expanded over the matrix.
pub fn full_matrix() -> Vec<Identity> {
    let mut out = Vec::new();
    for e in ENTRIES {
        match e.id {
            "thm7-ell-regular" => {
                out.extend(ELL_MATRIX.iter().map(|&l| build(e.id, &Params::new().with("ell", l)).unwrap()));
            }
            "thm8-pm" => out.extend(
                MC_MATRIX.iter().map(|&(m, c)| build(e.id, &Params::new().with("m", m).with("c", c)).unwrap()),
            ),
            id => out.push(build(id, &Params::new()).unwrap()),
        }
    }
    out
}

fn theta(spec: ThetaSpec) -> SparseSeries {
    theta_series(spec).expect("catalog theta specs are valid")
}

fn euler(scale: u64) -> SparseSeries {
    theta(ThetaSpec::Euler { scale })
}

fn sparse(spec: ThetaSpec) -> RhsSpec {
    RhsSpec::Sparse(theta(spec))
}

fn identity(id: String, multiplier: SparseSeries, family: FamilySpec, rhs: RhsSpec) -> Identity {
    Identity { id, multiplier, family, scale: 1, rhs, domain: Domain::All }
}

fn residue_pair(id: String, m: u64, c: u64) -> Result<Identity> {
    let multiplier = residue_pair_theta(m, c)?;
    let family = FamilySpec::residue_pair(m, c)?;
    Ok(identity(id, multiplier, family, sparse(ThetaSpec::Euler { scale: m })))
}

/// Builds a catalog identity. Missing parameters take the entry's defaults;
/// the resulting id carries the parameters, e.g. `thm8-pm(m=7,c=3)`.
pub fn build(id: &str, params: &Params) -> Result<Identity> {
    let entry = entry(id)?;
    let allowed: Vec<&str> = entry.defaults.iter().map(|(k, _)| *k).collect();
    params.expect_only(&allowed)?;
    let param = |key: &str| {
        let default = entry.defaults.iter().find(|(k, _)| *k == key).map(|(_, v)| *v);
        params.get(key).or(default).expect("parameter has a default")
    };
    let name = if entry.defaults.is_empty() {
        id.to_string()
    } else {
        let shown: Vec<String> = entry.defaults.iter().map(|(k, _)| format!("{k}={}", param(k))).collect();
        format!("{id}({})", shown.join(","))
    };

    let minus = Sign::Minus;
    let ident = match id {
        "euler-pentagonal" => identity(name, euler(1), FamilySpec::P, sparse(ThetaSpec::Delta0)),
        "ewell-triangular" => identity(
            name,
            theta(ThetaSpec::FTheta { u: 1, v: 3, sign_a: minus, sign_b: minus }),
            FamilySpec::P,
            RhsSpec::FamilyRef { family: FamilySpec::Pd, divisor: 2, parity_mask: None, alternating: false },
        ),
        "cks-squares" => identity(
            name,
            SparseSeries::sum(vec![
                theta(ThetaSpec::Delta0),
                theta(ThetaSpec::SignedSquareTail { scale: 1 }),
                theta(ThetaSpec::SignedSquareTail { scale: 2 }),
            ]),
            FamilySpec::P,
            RhsSpec::FamilyRef { family: FamilySpec::QQ, divisor: 1, parity_mask: Some(Parity::Even), alternating: false },
        ),
        "cks-alt-squares" => identity(
            name,
            theta(ThetaSpec::PhiNeg { scale: 1 }),
            FamilySpec::P,
            RhsSpec::FamilyRef { family: FamilySpec::QQ, divisor: 1, parity_mask: None, alternating: true },
        ),
        "thm1-even" | "thm1-odd" => {
            let (spec, rhs, domain) = if id == "thm1-even" {
                (ThetaSpec::EvenValuedTriangular, FamilySpec::Pd, Domain::Even)
            } else {
                (ThetaSpec::OddValuedTriangular, FamilySpec::Po, Domain::Odd)
            };
            Identity { id: name, multiplier: theta(spec), family: FamilySpec::P, scale: 2, rhs: RhsSpec::family(rhs), domain }
        }
        "thm2-overpartition" => {
            identity(name, theta(ThetaSpec::PhiNeg { scale: 1 }), FamilySpec::OverP, sparse(ThetaSpec::Delta0))
        }
        "thm3-overpartition-pd" => identity(name, euler(1), FamilySpec::OverP, RhsSpec::family(FamilySpec::Pd)),
        "thm4-overpartition-distinct" => {
            identity(name, euler(2), FamilySpec::OverP, RhsSpec::family(FamilySpec::OverPd))
        }
        "thm5-qq" => identity(name, euler(4), FamilySpec::QQ, sparse(ThetaSpec::Triangular { scale: 1 })),
        "ono-thm1" => identity(name, euler(2), FamilySpec::Pd, sparse(ThetaSpec::Triangular { scale: 1 })),
        "thm6-po" => identity(
            name,
            theta(ThetaSpec::FTheta { u: 1, v: 5, sign_a: minus, sign_b: minus }),
            FamilySpec::Po,
            sparse(ThetaSpec::Triangular { scale: 3 }),
        ),
        "thm7-ell-regular" => {
            let ell = param("ell");
            let family = FamilySpec::regular(ell)?;
            identity(name, euler(ell), FamilySpec::P, RhsSpec::family(family))
        }
        "thm8-pm" => residue_pair(name, param("m"), param("c"))?,
        "cor1-R1" => residue_pair(name, 5, 1)?,
        "cor1-R2-direct" => residue_pair(name, 5, 2)?,
        "cor1-R2-pentagonal" => {
            identity(name, euler(1), FamilySpec::residue_pair(5, 2)?, sparse(ThetaSpec::SignedHeptagonal))
        }
        "cor2-s1" => residue_pair(name, 6, 1)?,
        "cor2-s2" => residue_pair(name, 6, 2)?,
        _ => unreachable!("every catalog entry has a builder"),
    };
    Ok(ident)
}

/// Identity used to compute a family by recurrence when none is requested.
///
/// Families with a solvable identity are solved directly; `Bl(ℓ)` and
/// `OverPd` appear only as right-hand sides and are derived from a solved
/// `p` or `p̄` table instead.
pub fn default_identity(family: &FamilySpec) -> Identity {
    let plain = |id: &str| build(id, &Params::new()).expect("catalog entry builds");
    match *family {
        FamilySpec::P => plain("euler-pentagonal"),
        FamilySpec::Pd => plain("ono-thm1"),
        FamilySpec::Po => plain("thm6-po"),
        FamilySpec::QQ => plain("thm5-qq"),
        FamilySpec::OverP => plain("thm2-overpartition"),
        FamilySpec::OverPd => plain("thm4-overpartition-distinct"),
        FamilySpec::Bl { ell } => build("thm7-ell-regular", &Params::new().with("ell", ell)).expect("ℓ ≥ 1"),
        FamilySpec::Pcm { m, c } => {
            build("thm8-pm", &Params::new().with("m", m).with("c", c)).expect("validated residue pair")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    fn offsets(id: &str, params: Params, count: usize) -> Vec<u64> {
        build(id, &params).unwrap().multiplier.terms().take(count).map(|t| t.exponent).collect()
    }

    #[test]
    fn ids() {
        let ids = all_ids();
        assert_eq!(ids.len(), 19);
        assert!(ids.contains(&"euler-pentagonal"));
        let mut dedup = ids.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), ids.len());
        for id in ids {
            assert!(build(id, &Params::new()).is_ok(), "{id}");
        }
        assert_eq!(full_matrix().len(), 19 - 2 + ELL_MATRIX.len() + MC_MATRIX.len());
    }

    #[test]
    fn offsets_of_entries() {
        assert_eq!(offsets("thm5-qq", Params::new(), 7), vec![0, 4, 8, 20, 28, 48, 60]);
        assert_eq!(offsets("thm8-pm", Params::new().with("m", 5).with("c", 1), 5), vec![0, 1, 4, 7, 13]);
        assert_eq!(offsets("ewell-triangular", Params::new(), 7), vec![0, 1, 3, 6, 10, 15, 21]);
        assert_eq!(offsets("cks-squares", Params::new(), 8), vec![0, 1, 2, 4, 8, 9, 16, 18]);
        let signs: Vec<i64> = build("ewell-triangular", &Params::new()).unwrap().multiplier.terms().take(7).map(|t| t.coeff).collect();
        assert_eq!(signs, vec![1, -1, -1, 1, 1, -1, -1]);
    }

    #[test]
    fn parameter_errors() {
        let err = build("thm8-pm", &Params::new().with("m", 6).with("c", 3)).unwrap_err();
        assert!(matches!(&err, Error::Domain(msg) if msg.contains("2c = m")), "{err}");
        assert!(matches!(build("thm7-ell-regular", &Params::new().with("ell", 0)), Err(Error::Domain(_))));
        assert!(matches!(build("bogus", &Params::new()), Err(Error::Usage(_))));
        assert!(matches!(build("euler-pentagonal", &Params::new().with("m", 5)), Err(Error::Usage(_))));
    }

    #[test]
    fn aliases() {
        let r1 = build("cor1-R1", &Params::new()).unwrap();
        let pm = build("thm8-pm", &Params::new().with("m", 5).with("c", 1)).unwrap();
        assert!(r1.same_statement(&pm));
        assert_eq!(pm.id, "thm8-pm(m=5,c=1)");
        let s2 = build("cor2-s2", &Params::new()).unwrap();
        assert!(s2.same_statement(&build("thm8-pm", &Params::new().with("m", 6).with("c", 2)).unwrap()));
        // c and m−c describe the same identity
        let a = build("thm8-pm", &Params::new().with("m", 7).with("c", 2)).unwrap();
        let b = build("thm8-pm", &Params::new().with("m", 7).with("c", 5)).unwrap();
        assert_eq!(a.family, b.family);
        assert_eq!(a.multiplier.terms_upto(2000), b.multiplier.terms_upto(2000));
    }

    #[test]
    fn defaults_solve_their_family() {
        for fam in [FamilySpec::P, FamilySpec::Pd, FamilySpec::Po, FamilySpec::QQ, FamilySpec::OverP, FamilySpec::Pcm { m: 7, c: 3 }] {
            let ident = default_identity(&fam);
            assert_eq!(ident.family, fam);
            assert!(ident.check_solvable().is_ok(), "{}", ident.id);
        }
        assert_eq!(default_identity(&FamilySpec::Bl { ell: 3 }).rhs.referenced_family(), Some(FamilySpec::Bl { ell: 3 }));
    }
}
