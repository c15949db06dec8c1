//! Random hypertrees (Q-acyclic complexes) by a Kruskal-type process, their
//! classification, and the weighted count of hypertrees as a cross-check.

use std::fmt;

use rand::seq::SliceRandom;
use rayon::prelude::*;
use serde::Serialize;

use crate::collapse::{core_erosion, free_faces, search_collapse_steps, SearchBudget};
use crate::complex::SimplicialComplex;
use crate::duality::alexander_dual;
use crate::error::{Error, Result};
use crate::face::{binomial, k_subsets, Face};
use crate::homology::{homology, TopCycleTracker};
use crate::rng;

/// Starts from the complete `(d-1)`-skeleton on `n` vertices and scans all
/// `d`-faces in random order, keeping a face unless it closes a rational
/// `d`-cycle, until `C(n-1, d)` faces are kept.
pub fn kruskal_generate(n: u32, d: usize, seed: u64) -> Result<SimplicialComplex> {
    if d < 1 || (n as usize) < d + 1 || n > 64 {
        return Err(Error::Input(format!("need 1 <= d < n <= 64, got n={n}, d={d}")));
    }
    let ground = Face::range(n);
    let mut candidates = k_subsets(ground, d + 1);
    candidates.shuffle(&mut rng::seeded(seed));
    let target = binomial(n as usize - 1, d) as usize;
    let mut tracker = TopCycleTracker::new(ground, d);
    let mut kept = Vec::with_capacity(target);
    for sigma in candidates {
        if kept.len() == target {
            break;
        }
        if tracker.try_add(sigma) {
            kept.push(sigma);
        }
    }
    let mut facets = k_subsets(ground, d);
    facets.extend(kept);
    SimplicialComplex::from_facets(facets).with_ground(ground)
}

/// Three-valued outcome of a budgeted search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Found,
    /// A surviving core rules the property out.
    Refuted,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Found => "found",
            Verdict::Refuted => "refuted",
            Verdict::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypertreeReport {
    pub complex: SimplicialComplex,
    pub seed: Option<u64>,
    pub facet_count: usize,
    pub q_acyclic: bool,
    /// `|H_{d-1}(X; Z)|`; meaningful when `q_acyclic`.
    pub torsion_order: u128,
    pub d_collapsible: bool,
    pub collapsible: Verdict,
    pub anticollapsible: Verdict,
    pub free_faces: usize,
    pub dual_free_faces: usize,
}

impl HypertreeReport {
    /// Collapsible, with anticollapsibility ruled out by a core of the dual.
    pub fn is_collapsible_not_anticollapsible(&self) -> bool {
        self.collapsible == Verdict::Found && self.anticollapsible == Verdict::Refuted
    }

    /// Z-acyclic, with both a core and a dual core.
    pub fn is_neither(&self) -> bool {
        self.torsion_order == 1
            && self.collapsible == Verdict::Refuted && self.anticollapsible == Verdict::Refuted
    }

    pub fn has_no_free_faces(&self) -> bool {
        self.free_faces == 0
    }
}

/// Classifies a `d`-complex. Collapse searches run only where no core
/// already settles the question.
pub fn is_hypertree(x: &SimplicialComplex, d: usize, budget: SearchBudget, seed: u64) -> Result<HypertreeReport> {
    if x.dim() != d as isize {
        return Err(Error::Precondition(format!("complex has dimension {}, expected {d}", x.dim())));
    }
    let h = homology(x)?;
    let q_acyclic = h.is_rationally_trivial();
    let torsion_order = if d >= 1 { h.torsion_order(d - 1) } else { 1 };
    let erosion = core_erosion(x);
    let collapsible = if !erosion.d_collapsible || !q_acyclic {
        Verdict::Refuted
    } else if search_collapse_steps(x, budget, rng::derive_seed(seed, 1)).is_some() {
        Verdict::Found
    } else {
        Verdict::Unknown
    };
    let dual = alexander_dual(x);
    let dual_free_faces = free_faces(&dual).len();
    let dual_stuck = dual.dim() >= 1 && !core_erosion(&dual).d_collapsible;
    // anticollapsible exactly when the dual collapses
    let anticollapsible = if dual.is_void() {
        Verdict::Found
    } else if dual_stuck || !q_acyclic {
        Verdict::Refuted
    } else if search_collapse_steps(&dual, budget, rng::derive_seed(seed, 2)).is_some() {
        Verdict::Found
    } else {
        Verdict::Unknown
    };
    Ok(HypertreeReport {
        facet_count: x.facets().len(),
        free_faces: free_faces(x).len(),
        complex: x.clone(),
        seed: None,
        q_acyclic,
        torsion_order,
        d_collapsible: erosion.d_collapsible,
        collapsible,
        anticollapsible,
        dual_free_faces,
    })
}

/// `(weighted_sum, expected)` with `weighted_sum = Σ |H_{d-1}(X)|²` over all
/// Q-acyclic `X` with complete `(d-1)`-skeleton and `C(n-1, d)` faces of
/// dimension `d`, and `expected = n^C(n-2, d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KalaiCheck {
    pub weighted_sum: u128,
    pub expected: u128,
    pub ok: bool,
}

pub const KALAI_LIMIT: u128 = 25;

pub fn kalai_check(n: u32, d: usize) -> Result<KalaiCheck> {
    if d < 1 || (n as usize) < d + 1 {
        return Err(Error::Input(format!("need 1 <= d < n, got n={n}, d={d}")));
    }
    let candidates = binomial(n as usize, d + 1);
    if candidates > KALAI_LIMIT {
        return Err(Error::Size(format!(
            "C({n},{}) = {candidates} candidate faces exceeds the enumeration limit {KALAI_LIMIT}",
            d + 1
        )));
    }
    let ground = Face::range(n);
    let top = k_subsets(ground, d + 1);
    let skeleton = k_subsets(ground, d);
    let size = binomial(n as usize - 1, d) as usize;
    let mut weighted_sum = 0u128;
    let mut pick = Vec::with_capacity(size);
    for mask in 0u32..(1u32 << top.len()) {
        if mask.count_ones() as usize != size {
            continue;
        }
        pick.clear();
        pick.extend(skeleton.iter().copied());
        pick.extend((0..top.len()).filter(|i| mask >> i & 1 == 1).map(|i| top[i]));
        let x = SimplicialComplex::from_facets(pick.iter().copied()).with_ground(ground)?;
        let h = homology(&x)?;
        if h.is_rationally_trivial() {
            let t = h.torsion_order(d - 1);
            weighted_sum += t * t;
        }
    }
    let exponent = binomial(n as usize - 2, d) as u32;
    let expected = (n as u128)
        .checked_pow(exponent)
        .ok_or_else(|| Error::Size("expected count overflows".into()))?;
    Ok(KalaiCheck {
        weighted_sum,
        expected,
        ok: weighted_sum == expected,
    })
}

/// Tallies of a survey run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SurveySummary {
    pub trials: usize,
    pub q_acyclic: usize,
    pub with_torsion: usize,
    pub collapsible_found: usize,
    pub anticollapsible_found: usize,
    /// Seeds of complexes found collapsible whose dual has a core.
    pub collapsible_not_anticollapsible: Vec<u64>,
    /// Seeds of Z-acyclic complexes where both a core and a dual core survive.
    pub neither: Vec<u64>,
    /// Seeds of complexes without free faces.
    pub no_free_faces: Vec<u64>,
}

impl fmt::Display for SurveySummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "trials: {}", self.trials)?;
        writeln!(f, "q-acyclic: {}", self.q_acyclic)?;
        writeln!(f, "with torsion: {}", self.with_torsion)?;
        writeln!(f, "collapsible (found): {}", self.collapsible_found)?;
        writeln!(f, "anticollapsible (found): {}", self.anticollapsible_found)?;
        writeln!(f, "collapsible, not anticollapsible: {} {:?}", self.collapsible_not_anticollapsible.len(), self.collapsible_not_anticollapsible)?;
        writeln!(f, "neither: {} {:?}", self.neither.len(), self.neither)?;
        write!(f, "no free faces: {} {:?}", self.no_free_faces.len(), self.no_free_faces)
    }
}

/// Generates and classifies `trials` hypertrees. Trial `i` uses the seed
/// `derive_seed(seed, i)`; reports come back in trial order.
pub fn survey(n: u32, d: usize, trials: usize, seed: u64, budget: SearchBudget) -> Result<(Vec<HypertreeReport>, SurveySummary)> {
    if trials == 0 {
        return Err(Error::Input("trials must be at least 1".into()));
    }
    let reports: Vec<HypertreeReport> = (0..trials as u64)
        .into_par_iter()
        .map(|i| {
            let s = rng::derive_seed(seed, i);
            let x = kruskal_generate(n, d, s)?;
            let mut r = is_hypertree(&x, d, budget, s)?;
            r.seed = Some(s);
            Ok(r)
        })
        .collect::<Result<_>>()?;
    let mut sum = SurveySummary {
        trials,
        ..Default::default()
    };
    for r in &reports {
        let s = r.seed.expect("set above");
        sum.q_acyclic += r.q_acyclic as usize;
        sum.with_torsion += (r.torsion_order > 1) as usize;
        sum.collapsible_found += (r.collapsible == Verdict::Found) as usize;
        sum.anticollapsible_found += (r.anticollapsible == Verdict::Found) as usize;
        if r.is_collapsible_not_anticollapsible() {
            sum.collapsible_not_anticollapsible.push(s);
        }
        if r.is_neither() {
            sum.neither.push(s);
        }
        if r.has_no_free_faces() {
            sum.no_free_faces.push(s);
        }
    }
    Ok((reports, sum))
}

pub const SURVEY_CSV_HEADER: &str = "seed,facets,q_acyclic,torsion,dcollapsible,collapsible,anticollapsible,free_faces";

pub fn survey_csv_row(r: &HypertreeReport) -> String {
    format!(
        "{},{},{},{},{},{},{},{}",
        r.seed.map_or(String::new(), |s| s.to_string()),
        r.facet_count,
        r.q_acyclic,
        r.torsion_order,
        r.d_collapsible,
        r.collapsible,
        r.anticollapsible,
        r.free_faces
    )
}
