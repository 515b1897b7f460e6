//! Built-in base surfaces.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::SurfaceInvariants;
use crate::torsion::FiniteAbelianGroup;

const CATALOG_JSON: &str = include_str!("catalog.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub invariants: SurfaceInvariants,
    /// Torsion group (or the relevant subgroup of it), when known.
    pub torsion: Option<FiniteAbelianGroup>,
    pub bicanonical_map_degree: Option<u64>,
    pub miyaoka_yau: bool,
    /// Whether every holomorphic or anti-holomorphic automorphism is holomorphic.
    pub kl_equals_aut: Option<bool>,
    pub notes: String,
}

#[derive(Deserialize)]
struct RawEntry {
    name: String,
    pg: i64,
    q: i64,
    #[serde(rename = "K2")]
    k2: i64,
    torsion: Option<FiniteAbelianGroup>,
    bicanonical_map_degree: Option<u64>,
    miyaoka_yau: bool,
    kl_equals_aut: Option<bool>,
    notes: String,
}

fn parse(text: &str) -> Result<Vec<CatalogEntry>> {
    let raw: Vec<RawEntry> = serde_json::from_str(text)?;
    raw.into_iter()
        .map(|r| {
            let invariants = SurfaceInvariants::new(r.pg, r.q, r.k2)?;
            if invariants.is_miyaoka_yau() != r.miyaoka_yau {
                return Err(Error::Validation(format!(
                    "catalog entry {}: miyaoka_yau flag disagrees with K^2 = 3e",
                    r.name
                )));
            }
            Ok(CatalogEntry {
                name: r.name,
                invariants,
                torsion: r.torsion,
                bicanonical_map_degree: r.bicanonical_map_degree,
                miyaoka_yau: r.miyaoka_yau,
                kl_equals_aut: r.kl_equals_aut,
                notes: r.notes,
            })
        })
        .collect()
}

pub fn catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| parse(CATALOG_JSON).expect("embedded catalog is valid"))
}

pub fn lookup(name: &str) -> Result<&'static CatalogEntry> {
    catalog()
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| {
            let names: Vec<&str> = catalog().iter().map(|e| e.name.as_str()).collect();
            Error::Validation(format!("unknown surface {name:?}; known: {}", names.join(", ")))
        })
}
