use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use functors::weyl::rad_and_schur;
use functors::FunctorExpr;
use partitions::{enumerate_up_to, Partition};
use serde::{Deserialize, Serialize};

use crate::chop::chop;
use crate::iso::{fingerprint, iso_simple};
use crate::module::GModule;
use crate::MeatAxeError;

/// Seed used for the pairwise checks inside a catalog.
const CATALOG_SEED: u64 = 0x5eed;

/// Simple modules `S_λ(F₂ᵏ)` for the regular partitions `1 ≤ |λ| ≤ d`.
#[derive(Clone, Debug)]
pub struct Catalog {
    pub k: usize,
    pub max_degree: usize,
    pub entries: Vec<(Partition, GModule)>,
}

impl Catalog {
    pub fn get(&self, lambda: &Partition) -> Option<&GModule> {
        self.entries.iter().find(|(l, _)| l == lambda).map(|(_, m)| m)
    }

    /// The catalog label of a simple module, if any entry is isomorphic.
    pub fn identify(&self, m: &GModule, rng_seed: u64) -> Result<Option<&Partition>, MeatAxeError> {
        for (lambda, entry) in &self.entries {
            if entry.dim() == m.dim() && iso_simple(entry, m, rng_seed)? {
                return Ok(Some(lambda));
            }
        }
        Ok(None)
    }
}

/// The top of `W_λ`, i.e. `W_λ / rad`, as a quotient of the Weyl submodule
/// of `Λ^λ(F₂ᵏ)`.
pub fn schur_module(lambda: &Partition, k: usize) -> Result<GModule, MeatAxeError> {
    let data = rad_and_schur(lambda, k)?;
    let ambient = GModule::from_functor(&data.ambient, k)?;
    ambient.subquotient(&data.weyl.to_dense(), &data.rad.to_dense())
}

pub fn simple_catalog(k: usize, max_degree: usize) -> Result<Catalog, MeatAxeError> {
    if k < max_degree || k == 0 {
        return Err(MeatAxeError::InvalidParameters(format!("catalog needs 1 ≤ max_degree ≤ k, got k = {k}, max_degree = {max_degree}")));
    }
    let mut entries: Vec<(Partition, GModule)> = Vec::new();
    for lambda in enumerate_up_to(max_degree, true).into_iter().filter(|l| l.degree() > 0) {
        let m = schur_module(&lambda, k)?;
        if m.dim() == 0 {
            return Err(MeatAxeError::InvalidParameters(format!("S_({lambda}) vanishes at k = {k}")));
        }
        for (other, e) in &entries {
            if e.dim() == m.dim() && iso_simple(e, &m, CATALOG_SEED)? {
                return Err(MeatAxeError::CatalogCollision(other.clone(), lambda.clone()));
            }
        }
        entries.push((lambda, m));
    }
    Ok(Catalog { k, max_degree, entries })
}

/// Memoized [`simple_catalog`].
pub fn cached_catalog(k: usize, max_degree: usize) -> Result<Arc<Catalog>, MeatAxeError> {
    type Cache = Mutex<HashMap<(usize, usize), Arc<Catalog>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(c) = cache.lock().expect("catalog cache").get(&(k, max_degree)) {
        return Ok(c.clone());
    }
    let c = Arc::new(simple_catalog(k, max_degree)?);
    cache.lock().expect("catalog cache").insert((k, max_degree), c.clone());
    Ok(c)
}

/// Label of a composition factor; serialized as `"2,1"` or
/// `"unidentified(dim;fingerprint)"`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Label {
    Simple(Partition),
    /// No catalog entry matched; kept with its dimension and fingerprint.
    Unidentified { dim: usize, fingerprint: Vec<usize> },
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Simple(p) => write!(f, "{p}"),
            Label::Unidentified { dim, fingerprint } => {
                let fp: Vec<String> = fingerprint.iter().map(ToString::to_string).collect();
                write!(f, "unidentified({dim};{})", fp.join(","))
            }
        }
    }
}

impl FromStr for Label {
    type Err = MeatAxeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || MeatAxeError::InvalidParameters(format!("bad factor label {s:?}"));
        if let Some(body) = s.strip_prefix("unidentified(").and_then(|r| r.strip_suffix(')')) {
            let (dim, fp) = body.split_once(';').ok_or_else(bad)?;
            let fingerprint = if fp.is_empty() {
                Vec::new()
            } else {
                fp.split(',').map(|x| x.parse().map_err(|_| bad())).collect::<Result<_, _>>()?
            };
            return Ok(Label::Unidentified { dim: dim.parse().map_err(|_| bad())?, fingerprint });
        }
        if s == "()" {
            return Ok(Label::Simple(Partition::empty()));
        }
        s.parse::<Partition>().map(Label::Simple).map_err(|_| bad())
    }
}

impl From<Label> for String {
    fn from(l: Label) -> String {
        l.to_string()
    }
}

impl TryFrom<String> for Label {
    type Error = MeatAxeError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factor {
    pub label: Label,
    pub dim: usize,
    pub mult: usize,
}

/// Composition factors of `F(F₂ᵏ)` with multiplicities, together with the
/// parameters the labels depend on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstituentTable {
    pub module: String,
    pub k: usize,
    pub max_degree: usize,
    pub seed: u64,
    pub factors: Vec<Factor>,
}

impl ConstituentTable {
    pub fn total_dim(&self) -> usize {
        self.factors.iter().map(|f| f.dim * f.mult).sum()
    }

    pub fn multiplicity(&self, lambda: &Partition) -> usize {
        self.factors.iter().filter(|f| f.label == Label::Simple(lambda.clone())).map(|f| f.mult).sum()
    }

    pub fn labels(&self) -> impl Iterator<Item = &Partition> {
        self.factors.iter().filter_map(|f| match &f.label {
            Label::Simple(p) => Some(p),
            Label::Unidentified { .. } => None,
        })
    }

    pub fn has_unidentified(&self) -> bool {
        self.factors.iter().any(|f| matches!(f.label, Label::Unidentified { .. }))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("table serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

/// Chops `m` and labels each factor against the catalog. Factors are listed
/// in catalog order, unidentified ones last.
pub fn label_module(module: String, m: &GModule, catalog: &Catalog, rng_seed: u64) -> Result<ConstituentTable, MeatAxeError> {
    let factors = chop(m, rng_seed)?;
    let mut counts: Vec<(Label, usize, usize)> = Vec::new();
    for f in &factors {
        let label = match catalog.identify(f, rng_seed)? {
            Some(p) => Label::Simple(p.clone()),
            None => Label::Unidentified { dim: f.dim(), fingerprint: fingerprint(f) },
        };
        match counts.iter_mut().find(|(l, _, _)| *l == label) {
            Some(c) => c.2 += 1,
            None => counts.push((label, f.dim(), 1)),
        }
    }
    let rank = |l: &Label| match l {
        Label::Simple(p) => catalog.entries.iter().position(|(q, _)| q == p).unwrap_or(usize::MAX),
        Label::Unidentified { .. } => usize::MAX,
    };
    counts.sort_by(|a, b| rank(&a.0).cmp(&rank(&b.0)).then_with(|| a.0.to_string().cmp(&b.0.to_string())));
    let table = ConstituentTable {
        module,
        k: catalog.k,
        max_degree: catalog.max_degree,
        seed: rng_seed,
        factors: counts.into_iter().map(|(label, dim, mult)| Factor { label, dim, mult }).collect(),
    };
    debug_assert_eq!(table.total_dim(), m.dim());
    Ok(table)
}

pub fn constituents(e: &FunctorExpr, k: usize, max_degree: usize, rng_seed: u64) -> Result<ConstituentTable, MeatAxeError> {
    let catalog = cached_catalog(k, max_degree)?;
    let m = GModule::from_functor(e, k)?;
    label_module(e.to_string(), &m, &catalog, rng_seed)
}
