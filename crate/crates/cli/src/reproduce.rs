use std::fs;
use std::path::{Path, PathBuf};

use simplex_collapse::collapse::{Certificate, Direction, SearchBudget};
use simplex_collapse::constructions::{catalog, catalog_complex, refusal, construct_stuck, Outcome, CATALOG_NAMES};
use simplex_collapse::hypertree::survey;
use simplex_collapse::SimplicialComplex;

pub fn default_data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/data")
}

struct Row {
    name: String,
    ok: bool,
    detail: String,
}

/// Golden files: facet file, catalog name, optional certificate.
const GOLDEN: &[(&str, &str, Option<&str>)] = &[
    ("y28_2.facets", "Y28_2", Some("y28_2.collapse.cert")),
    ("y38_3.facets", "Y38_3", Some("y38_3.collapse.cert")),
    ("c38_3.facets", "C38_3", None),
    ("rp2_6.facets", "RP2_6", None),
    ("base8_2.facets", "B8_2", Some("base8_2.anticollapse.cert")),
    ("base8_3.facets", "B8_3", Some("base8_3.anticollapse.cert")),
];

fn golden_row(dir: &Path, file: &str, name: &str, cert: Option<&str>) -> Result<String, String> {
    let text = fs::read_to_string(dir.join(file)).map_err(|e| e.to_string())?;
    let x = SimplicialComplex::parse_facet_file(&text).map_err(|e| e.to_string())?;
    let (expect, _) = catalog_complex(name).map_err(|e| e.to_string())?;
    if x.digest() != expect.digest() {
        return Err(format!("digest mismatch: {} vs {}", &x.digest()[..12], &expect.digest()[..12]));
    }
    let Some(cert) = cert else {
        return Ok(format!("digest {}", &x.digest()[..12]));
    };
    let text = fs::read_to_string(dir.join(cert)).map_err(|e| e.to_string())?;
    let c = Certificate::from_json(&text).map_err(|e| e.to_string())?;
    let end = c.replay(&x).map_err(|e| e.to_string())?;
    let reached = match c.kind {
        Direction::Collapse => end.is_single_vertex(),
        Direction::Anticollapse => end.is_full_simplex(),
    };
    if !reached {
        return Err("certificate stops short".into());
    }
    Ok(format!("{} steps replay", c.len()))
}

fn construct_row(n: u32, d: u32) -> Row {
    let name = format!("construct n={n} d={d}");
    let admissible = refusal(n, d).is_none();
    let (ok, detail) = match construct_stuck(n, d, 0) {
        Ok(Outcome::Built(c)) => (admissible, format!("built, f-vector {:?}", c.complex.f_vector())),
        Ok(Outcome::Refused(r)) => (!admissible, r.to_string()),
        Err(e) => (false, e.to_string()),
    };
    Row { name, ok, detail }
}

/// Prints a pass/fail table and returns the exit code.
pub fn run(dir: &Path, quick: bool, trials: usize) -> u8 {
    let mut rows = Vec::new();
    for name in CATALOG_NAMES {
        let (ok, detail) = match catalog(name) {
            Ok(e) => {
                let claims: Vec<String> = e.claims.iter().map(|c| c.to_string()).collect();
                (true, claims.join(", "))
            }
            Err(e) => (false, e.to_string()),
        };
        rows.push(Row {
            name: format!("catalog {name}"),
            ok,
            detail,
        });
    }
    for &(file, name, cert) in GOLDEN {
        let (ok, detail) = match golden_row(dir, file, name, cert) {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        rows.push(Row {
            name: format!("golden {file}"),
            ok,
            detail,
        });
    }
    for n in 8..=10 {
        for d in 0..n {
            rows.push(construct_row(n, d));
        }
    }
    if !quick {
        let (ok, detail) = match survey(8, 3, trials, 1, SearchBudget::default()) {
            Ok((reports, sum)) => {
                let valid = reports.iter().all(|r| r.facet_count == 35 && r.q_acyclic);
                let detail = format!(
                    "{} trials, {} collapsible-not-anticollapsible, {} with torsion",
                    sum.trials,
                    sum.collapsible_not_anticollapsible.len(),
                    sum.with_torsion
                );
                (valid, detail)
            }
            Err(e) => (false, e.to_string()),
        };
        rows.push(Row {
            name: "survey n=8 d=3".into(),
            ok,
            detail,
        });
    }
    let width = rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
    for r in &rows {
        let tag = if r.ok { "PASS" } else { "FAIL" };
        println!("{tag}  {:width$}  {}", r.name, r.detail);
    }
    let failed = rows.iter().filter(|r| !r.ok).count();
    println!("{} rows, {failed} failed", rows.len());
    u8::from(failed > 0)
}
