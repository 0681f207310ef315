//! Catalog entries and their resolution to concrete groups and automorphisms.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::automorphism::{automorphism_from_map, parse_automorphism_text, Automorphism, AutomorphismText};
use crate::constructions::{companion_action, shift_power, stock, DDomain, Psl2};
use crate::group::{self, direct_product, Group, Permutation};
use crate::poly::{IntPolynomial, UnorderedIdentity};

use super::search::{identity_search, SearchLimits};
use super::HarnessError;

/// The file shipped as the builtin catalog.
pub const BUILTIN_CATALOG: &str = include_str!("../../catalog/builtin.json");

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CatalogEntry {
    pub label: String,
    pub group: GroupSpec,
    pub automorphism: AutSpec,
    pub identity: IdentitySpec,
    #[serde(default)]
    pub expect: Expectation,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupSpec {
    Stock { name: String },
    Ddomain { p: u64, e: u32, n: i64 },
    Psl2 { q: u64 },
    ShiftPower { base: Box<GroupSpec>, n: usize },
    Companion { p: u64, coeffs: Vec<i64> },
    DirectProduct { factors: Vec<GroupSpec> },
    File { path: PathBuf },
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AutSpec {
    Identity,
    /// The automorphism a construction comes with: the shift, the companion
    /// map, or the first Frobenius power.
    Builtin,
    Frobenius { k: u32 },
    PowerMap { k: i64 },
    Inner { element: String },
    Map { pairs: Vec<(String, String)> },
    File { path: PathBuf },
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IdentitySpec {
    Ordered { coeffs: Vec<i64> },
    Unordered { terms: Vec<(usize, i64)> },
    /// `-1 + x^n` with `n` the order of the automorphism.
    OrderIdentity,
    /// The first primitive identity found by the search.
    Search { max_degree: usize, coeff_bound: i64 },
}

#[derive(Clone, Copy, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum ExpectedOutcome {
    #[default]
    Pass,
    HypothesisFailure,
}

/// What an entry should produce. Unset regression values are not checked.
#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq)]
#[serde(default)]
pub struct Expectation {
    pub outcome: ExpectedOutcome,
    pub reason_contains: Option<String>,
    pub order: Option<u64>,
    pub phi_order: Option<u64>,
    pub m: Option<u64>,
    pub d: Option<u64>,
    pub radical_order: Option<u64>,
    pub h_radical: Option<u64>,
    pub h_centraliser: Option<u64>,
}

/// An identity in either form, as handed to verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Identity {
    Ordered(IntPolynomial),
    Unordered(UnorderedIdentity),
}

impl Identity {
    /// The polynomial whose content decides primitivity.
    pub fn polynomial(&self) -> IntPolynomial {
        match self {
            Identity::Ordered(f) => f.clone(),
            Identity::Unordered(u) => u.underlying(),
        }
    }

    /// The degree parameter: `deg f`, or the largest exponent for unordered
    /// identities.
    pub fn d(&self) -> u64 {
        match self {
            Identity::Ordered(f) => f.degree().unwrap_or(0) as u64,
            Identity::Unordered(u) => u.max_exponent() as u64,
        }
    }

    pub fn witness(&self, phi: &Automorphism) -> Option<usize> {
        match self {
            Identity::Ordered(f) => phi.ordered_identity_witness(f),
            Identity::Unordered(u) => phi.unordered_identity_witness(u),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Identity::Ordered(f) => f.to_string(),
            Identity::Unordered(u) => {
                let terms: Vec<String> = u
                    .terms()
                    .iter()
                    .map(|(m, b)| format!("phi^{m}(g)^{b}"))
                    .collect();
                terms.join(" * ")
            }
        }
    }
}

/// A resolved entry.
#[derive(Clone, Debug)]
pub struct Resolved {
    pub group: Group,
    pub automorphism: Automorphism,
    pub identity: Identity,
    pub description: String,
}

/// The construction behind a group, kept for builtin automorphisms.
enum Built {
    Plain(Group),
    Ddomain(DDomain),
    Psl2(Psl2),
    WithMap(Group, Automorphism),
}

impl Built {
    fn group(&self) -> &Group {
        match self {
            Built::Plain(g) | Built::WithMap(g, _) => g,
            Built::Ddomain(d) => d.group(),
            Built::Psl2(p) => p.group(),
        }
    }

    fn frobenius(&self, k: u32) -> Result<Automorphism, HarnessError> {
        match self {
            Built::Ddomain(d) => Ok(d.frobenius(k)?),
            Built::Psl2(p) => Ok(p.frobenius_action(k)?),
            _ => Err(HarnessError::Resolution(
                "frobenius needs a ddomain or psl2 group".into(),
            )),
        }
    }
}

fn describe_group(spec: &GroupSpec) -> String {
    match spec {
        GroupSpec::Stock { name } => name.clone(),
        GroupSpec::Ddomain { p, e, n } => format!("D(N={n}, K=GF({p}^{}))", 2 * e),
        GroupSpec::Psl2 { q } => format!("PSL(2,{q})"),
        GroupSpec::ShiftPower { base, n } => format!("({})^{n}", describe_group(base)),
        GroupSpec::Companion { p, coeffs } => {
            format!("(Z/{p})^{} companion of {}", coeffs.len().saturating_sub(1), IntPolynomial::from_i64(coeffs))
        }
        GroupSpec::DirectProduct { factors } => factors
            .iter()
            .map(describe_group)
            .collect::<Vec<_>>()
            .join(" x "),
        GroupSpec::File { path } => path.display().to_string(),
    }
}

fn build(spec: &GroupSpec, base_dir: &Path) -> Result<Built, HarnessError> {
    Ok(match spec {
        GroupSpec::Stock { name } => Built::Plain(stock(name)?),
        GroupSpec::Ddomain { p, e, n } => Built::Ddomain(DDomain::new(*p, *e, *n)?),
        GroupSpec::Psl2 { q } => Built::Psl2(Psl2::new(*q)?),
        GroupSpec::ShiftPower { base, n } => {
            let s = build(base, base_dir)?;
            let (g, phi) = shift_power(s.group(), *n)?;
            Built::WithMap(g, phi)
        }
        GroupSpec::Companion { p, coeffs } => {
            let c = companion_action(*p, &IntPolynomial::from_i64(coeffs))?;
            Built::WithMap(c.group, c.automorphism)
        }
        GroupSpec::DirectProduct { factors } => {
            let groups = factors
                .iter()
                .map(|f| build(f, base_dir).map(|b| b.group().clone()))
                .collect::<Result<Vec<_>, _>>()?;
            Built::Plain(direct_product(&groups)?.0)
        }
        GroupSpec::File { path } => Built::Plain(group::io::load_group(&base_dir.join(path))?),
    })
}

fn resolve_automorphism(
    spec: &AutSpec,
    built: &Built,
    base_dir: &Path,
) -> Result<Automorphism, HarnessError> {
    let g = built.group();
    match spec {
        AutSpec::Identity => Ok(Automorphism::identity(g)),
        AutSpec::Builtin => match built {
            Built::WithMap(_, phi) => Ok(phi.clone()),
            Built::Ddomain(_) | Built::Psl2(_) => built.frobenius(1),
            Built::Plain(_) => Err(HarnessError::Resolution(
                "group has no builtin automorphism".into(),
            )),
        },
        AutSpec::Frobenius { k } => built.frobenius(*k),
        AutSpec::PowerMap { k } => Ok(Automorphism::power_map(g, *k)?),
        AutSpec::Inner { element } => {
            let x = match g.degree() {
                Some(d) => g.index_of(&Permutation::parse(element, Some(d))?),
                None => element.parse::<usize>().ok().filter(|&i| (1..=g.order()).contains(&i)).map(|i| i - 1),
            }
            .ok_or_else(|| HarnessError::Resolution(format!("{element} is not in the group")))?;
            Ok(Automorphism::inner(g, x))
        }
        AutSpec::Map { pairs } => Ok(automorphism_from_map(g, pairs)?),
        AutSpec::File { path } => {
            let full = base_dir.join(path);
            let text = std::fs::read_to_string(&full)
                .map_err(|e| HarnessError::Io(format!("{}: {e}", full.display())))?;
            match parse_automorphism_text(&text)? {
                AutomorphismText::Frobenius(k) => built.frobenius(k),
                AutomorphismText::Map(pairs) => Ok(automorphism_from_map(g, &pairs)?),
            }
        }
    }
}

pub fn resolve_identity(spec: &IdentitySpec, phi: &Automorphism) -> Result<Identity, HarnessError> {
    Ok(match spec {
        IdentitySpec::Ordered { coeffs } => Identity::Ordered(IntPolynomial::from_i64(coeffs)),
        IdentitySpec::Unordered { terms } => Identity::Unordered(UnorderedIdentity::from_i64(terms)),
        IdentitySpec::OrderIdentity => {
            Identity::Ordered(IntPolynomial::order_identity(phi.order() as usize))
        }
        IdentitySpec::Search {
            max_degree,
            coeff_bound,
        } => {
            let found = identity_search(phi, *max_degree, *coeff_bound, SearchLimits::default());
            let f = found.identities.into_iter().next().ok_or_else(|| {
                HarnessError::Resolution(format!(
                    "no primitive identity of degree <= {max_degree} with coefficients within {coeff_bound}"
                ))
            })?;
            Identity::Ordered(f)
        }
    })
}

impl CatalogEntry {
    /// `base_dir` anchors relative file paths.
    pub fn resolve(&self, base_dir: &Path) -> Result<Resolved, HarnessError> {
        let built = build(&self.group, base_dir)?;
        let automorphism = resolve_automorphism(&self.automorphism, &built, base_dir)?;
        let identity = resolve_identity(&self.identity, &automorphism)?;
        Ok(Resolved {
            group: built.group().clone(),
            automorphism,
            identity,
            description: describe_group(&self.group),
        })
    }
}

impl Catalog {
    pub fn parse(text: &str) -> Result<Catalog, HarnessError> {
        serde_json::from_str(text).map_err(|e| HarnessError::Catalog(e.to_string()))
    }

    pub fn builtin() -> Catalog {
        Self::parse(BUILTIN_CATALOG).expect("the builtin catalog is well formed")
    }

    pub fn load(path: &Path) -> Result<Catalog, HarnessError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| HarnessError::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_parses_and_is_large_enough() {
        let c = Catalog::builtin();
        assert!(c.entries.len() >= 12);
        let labels: std::collections::HashSet<_> = c.entries.iter().map(|e| &e.label).collect();
        assert_eq!(labels.len(), c.entries.len(), "labels are unique");
    }

    #[test]
    fn entry_round_trips_through_json() {
        let e = CatalogEntry {
            label: "c7".into(),
            group: GroupSpec::Stock { name: "C7".into() },
            automorphism: AutSpec::PowerMap { k: 2 },
            identity: IdentitySpec::Ordered { coeffs: vec![-2, 1] },
            expect: Expectation::default(),
        };
        let text = serde_json::to_string(&e).unwrap();
        assert_eq!(serde_json::from_str::<CatalogEntry>(&text).unwrap(), e);
    }

    #[test]
    fn resolution_errors_are_reported() {
        let e = CatalogEntry {
            label: "bad".into(),
            group: GroupSpec::Stock { name: "C7".into() },
            automorphism: AutSpec::Frobenius { k: 1 },
            identity: IdentitySpec::OrderIdentity,
            expect: Expectation::default(),
        };
        assert!(matches!(e.resolve(Path::new(".")), Err(HarnessError::Resolution(_))));
        assert!(Catalog::parse("{\"entries\": [{}]}").is_err());
    }

    #[test]
    fn identities_describe_themselves() {
        let u = Identity::Unordered(UnorderedIdentity::from_i64(&[(1, 1), (0, -2)]));
        assert_eq!(u.describe(), "phi^1(g)^1 * phi^0(g)^-2");
        assert_eq!(u.d(), 1);
        assert_eq!(Identity::Ordered(IntPolynomial::from_i64(&[60])).d(), 0);
    }
}
