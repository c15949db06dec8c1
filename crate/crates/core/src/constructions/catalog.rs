use std::fmt;

use crate::collapse::{core_erosion, free_faces, search_collapse, Certificate, SearchBudget};
use crate::complex::SimplicialComplex;
use crate::duality::{alexander_dual, is_anticollapsible};
use crate::error::{Error, Result};
use crate::face::Face;
use crate::homology::{field_betti, homology, Coefficients};

const Y28_2: [[u32; 3]; 21] = [
    [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 3, 8], [1, 6, 8], [1, 7, 8],
    [2, 3, 7], [3, 4, 6], [2, 4, 6], [2, 5, 8], [2, 6, 7], [2, 7, 8], [3, 4, 7],
    [3, 5, 7], [3, 5, 8], [4, 5, 8], [4, 6, 8], [4, 7, 8], [5, 6, 7], [1, 2, 6],
];

const Y38_3: [[u32; 4]; 35] = [
    [4, 6, 7, 8], [2, 5, 7, 8], [1, 5, 7, 8], [3, 4, 7, 8], [2, 4, 7, 8], [2, 3, 7, 8],
    [1, 3, 7, 8], [2, 5, 6, 8], [3, 4, 6, 8], [1, 4, 6, 8], [2, 3, 6, 8], [1, 3, 6, 8],
    [3, 4, 5, 8], [2, 4, 5, 8], [1, 3, 5, 8], [1, 2, 5, 8], [2, 3, 4, 8], [1, 2, 4, 8],
    [4, 5, 6, 7], [3, 5, 6, 7], [2, 5, 6, 7], [1, 4, 6, 7], [1, 3, 6, 7], [1, 2, 6, 7],
    [1, 4, 5, 7], [1, 3, 4, 7], [1, 2, 4, 7], [3, 4, 5, 6], [1, 4, 5, 6], [2, 3, 5, 6],
    [2, 3, 4, 6], [1, 2, 4, 6], [1, 3, 4, 5], [1, 2, 3, 5], [1, 2, 3, 4],
];

const C38_3: [[u32; 4]; 35] = [
    [1, 5, 7, 8], [3, 4, 5, 8], [1, 2, 6, 7], [1, 2, 3, 5], [1, 3, 4, 6], [2, 4, 7, 8],
    [4, 5, 6, 7], [2, 3, 7, 8], [1, 3, 5, 6], [2, 4, 5, 8], [1, 3, 4, 8], [2, 3, 4, 5],
    [1, 2, 4, 6], [2, 4, 6, 7], [2, 4, 5, 7], [1, 3, 5, 7], [1, 3, 4, 5], [2, 3, 6, 7],
    [3, 5, 7, 8], [3, 4, 5, 7], [1, 3, 4, 7], [2, 3, 6, 8], [2, 3, 4, 6], [1, 3, 7, 8],
    [1, 5, 6, 7], [2, 5, 6, 8], [4, 6, 7, 8], [1, 5, 6, 8], [2, 3, 5, 6], [1, 2, 3, 8],
    [3, 4, 6, 8], [1, 2, 5, 7], [1, 2, 4, 8], [5, 6, 7, 8], [3, 4, 6, 7],
];

const RP2_6: [[u32; 3]; 10] = [
    [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
    [2, 3, 5], [2, 4, 5], [2, 4, 6], [3, 4, 6], [3, 5, 6],
];

const BASE8_2_FACETS: &str = include_str!("../../data/base8_2.facets");
const BASE8_2_CERT: &str = include_str!("../../data/base8_2.anticollapse.cert");
const BASE8_3_FACETS: &str = include_str!("../../data/base8_3.facets");
const BASE8_3_CERT: &str = include_str!("../../data/base8_3.anticollapse.cert");

pub const CATALOG_NAMES: &[&str] = &[
    "Y28_2", "Y38_3", "C38_3", "Y28_2_dual", "Y38_3_dual", "C38_3_dual", "RP2_6", "B8_2",
    "B8_3",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Claim {
    Collapsible,
    Anticollapsible,
    NoFreeFaces,
    QAcyclic,
    ZAcyclic,
    /// Top-dimensional erosion leaves a core.
    HasCore,
    /// The dual has a core.
    DualHasCore,
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Claim::Collapsible => "collapsible",
            Claim::Anticollapsible => "anticollapsible",
            Claim::NoFreeFaces => "no free faces",
            Claim::QAcyclic => "Q-acyclic",
            Claim::ZAcyclic => "Z-acyclic",
            Claim::HasCore => "has a core",
            Claim::DualHasCore => "dual has a core",
        })
    }
}

/// A named complex whose claims have been checked.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub complex: SimplicialComplex,
    pub claims: Vec<Claim>,
    /// Witness for [`Claim::Collapsible`].
    pub collapse_certificate: Option<Certificate>,
    /// Witness for [`Claim::Anticollapsible`].
    pub anticollapse_certificate: Option<Certificate>,
}

fn from_rows<const K: usize>(rows: &[[u32; K]]) -> SimplicialComplex {
    SimplicialComplex::from_facets(rows.iter().map(|r| Face::of(r)))
        .with_ground(Face::range(8))
        .expect("labels within 1..8")
}

/// The complex and its claimed properties, before verification.
pub fn catalog_complex(name: &str) -> Result<(SimplicialComplex, Vec<Claim>)> {
    use Claim::*;
    let (base, dual) = match name.strip_suffix("_dual") {
        Some(b) => (b, true),
        None => (name, false),
    };
    let (x, claims) = match base {
        "Y28_2" => (from_rows(&Y28_2), vec![Collapsible, QAcyclic, ZAcyclic]),
        "Y38_3" => (from_rows(&Y38_3), vec![Collapsible, QAcyclic, ZAcyclic]),
        "C38_3" => (from_rows(&C38_3), vec![QAcyclic, ZAcyclic, HasCore, DualHasCore]),
        "RP2_6" if !dual => (
            SimplicialComplex::from_facets(RP2_6.iter().map(|r| Face::of(r))),
            vec![QAcyclic],
        ),
        "B8_2" if !dual => (
            SimplicialComplex::parse_facet_file(BASE8_2_FACETS)?,
            vec![Anticollapsible, NoFreeFaces, ZAcyclic],
        ),
        "B8_3" if !dual => (
            SimplicialComplex::parse_facet_file(BASE8_3_FACETS)?,
            vec![Anticollapsible, NoFreeFaces, ZAcyclic],
        ),
        _ => return Err(Error::Input(format!("unknown catalog entry {name:?}"))),
    };
    if !dual {
        return Ok((x, claims));
    }
    let claims = match base {
        "C38_3" => vec![ZAcyclic, HasCore, DualHasCore],
        "Y38_3" => vec![Anticollapsible, ZAcyclic, HasCore],
        _ => vec![Anticollapsible, NoFreeFaces, ZAcyclic],
    };
    Ok((alexander_dual(&x), claims))
}

/// Loads `name` and re-verifies every claim; a failing claim is an error.
pub fn catalog(name: &str) -> Result<CatalogEntry> {
    let (complex, claims) = catalog_complex(name)?;
    let golden = match name {
        "B8_2" => Some(Certificate::from_json(BASE8_2_CERT)?),
        "B8_3" => Some(Certificate::from_json(BASE8_3_CERT)?),
        _ => None,
    };
    let mut entry = CatalogEntry {
        name: name.to_string(),
        complex,
        claims: claims.clone(),
        collapse_certificate: None,
        anticollapse_certificate: None,
    };
    let fail = |c: Claim| Error::Certificate(format!("{name}: claim '{c}' failed"));
    let x = &entry.complex;
    for c in claims {
        let ok = match c {
            Claim::Collapsible => {
                entry.collapse_certificate = search_collapse(x, SearchBudget::default(), 0);
                entry.collapse_certificate.is_some()
            }
            Claim::Anticollapsible => {
                let cert = match &golden {
                    Some(g) => {
                        let end = g.replay(x)?;
                        end.is_full_simplex().then(|| g.clone())
                    }
                    None => is_anticollapsible(x, SearchBudget::default(), 0),
                };
                entry.anticollapse_certificate = cert;
                entry.anticollapse_certificate.is_some()
            }
            Claim::NoFreeFaces => free_faces(x).is_empty(),
            Claim::QAcyclic => field_betti(x, Coefficients::Rationals)?.iter().all(|&b| b == 0),
            Claim::ZAcyclic => homology(x)?.is_trivial(),
            Claim::HasCore => !core_erosion(x).d_collapsible,
            Claim::DualHasCore => !core_erosion(&alexander_dual(x)).d_collapsible,
        };
        if !ok {
            return Err(fail(c));
        }
    }
    Ok(entry)
}
