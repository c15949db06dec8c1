//! Elementary collapses and anticollapses, certificates, and the searches
//! and invariants built on them.

mod erosion;
mod evasive;
mod matching;
mod rdm;
mod search;
pub(crate) mod state;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;

pub use erosion::{core_erosion, core_erosion_shuffled, Erosion};
pub use evasive::is_non_evasive;
pub use matching::{verify_matching_acyclic, Matching, MorseVector};
pub use rdm::{random_discrete_morse, RdmRun};
pub use search::{search_collapse, SearchBudget};
pub(crate) use search::{greedy_collapse, search_collapse_steps};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Collapse,
    Anticollapse,
}

impl Direction {
    pub fn flip(self) -> Direction {
        match self {
            Direction::Collapse => Direction::Anticollapse,
            Direction::Anticollapse => Direction::Collapse,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Collapse => "collapse",
            Direction::Anticollapse => "anticollapse",
        })
    }
}

/// One elementary move: `free` is the codimension-one face of `coface`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StepPair {
    pub free: Face,
    pub coface: Face,
    pub direction: Direction,
}

impl StepPair {
    pub fn collapse(free: Face, coface: Face) -> StepPair {
        StepPair {
            free,
            coface,
            direction: Direction::Collapse,
        }
    }

    pub fn anticollapse(free: Face, coface: Face) -> StepPair {
        StepPair {
            free,
            coface,
            direction: Direction::Anticollapse,
        }
    }

    /// The inverse move.
    pub fn inverse(self) -> StepPair {
        StepPair {
            direction: self.direction.flip(),
            ..self
        }
    }

    /// Involves the empty face (the trivial move on a one-vertex complex).
    pub fn is_trivial(&self) -> bool {
        self.free.is_empty()
    }
}

fn step_error(s: &StepPair, reason: impl Into<String>) -> Error {
    Error::Step {
        free: s.free,
        coface: s.coface,
        reason: reason.into(),
    }
}

/// Checks a move against a face family; `Ok` means it may be applied.
pub(crate) fn check_step(
    faces: &BTreeSet<Face>,
    ground: Face,
    s: &StepPair,
    allow_trivial: bool,
) -> Result<()> {
    let (tau, sigma) = (s.free, s.coface);
    if !tau.is_subset(sigma) || sigma.len() != tau.len() + 1 {
        return Err(step_error(s, "not a Hasse edge (free must be a facet of coface)"));
    }
    if tau.is_empty() && !allow_trivial {
        return Err(step_error(s, "trivial step on the empty face is not enabled"));
    }
    match s.direction {
        Direction::Collapse => {
            if !faces.contains(&sigma) {
                return Err(step_error(s, "coface not in the complex"));
            }
            let w = sigma.difference(tau);
            for u in ground.difference(sigma).vertices() {
                if faces.contains(&sigma.with(u)) {
                    return Err(step_error(s, format!("coface is not maximal: {} present", sigma.with(u))));
                }
                if faces.contains(&tau.with(u)) {
                    return Err(step_error(s, format!("free face also lies in {}", tau.with(u))));
                }
            }
            debug_assert_eq!(w.len(), 1);
            Ok(())
        }
        Direction::Anticollapse => {
            if !sigma.is_subset(ground) {
                return Err(step_error(s, "coface uses a vertex outside the ground set"));
            }
            if faces.contains(&tau) {
                return Err(step_error(s, "free face already present"));
            }
            if let Some(g) = sigma.facets().find(|&g| g != tau && !faces.contains(&g)) {
                return Err(step_error(s, format!("facet {g} of the coface is missing")));
            }
            Ok(())
        }
    }
}

pub(crate) fn apply_in_place(
    faces: &mut BTreeSet<Face>,
    ground: Face,
    s: &StepPair,
    allow_trivial: bool,
) -> Result<()> {
    check_step(faces, ground, s, allow_trivial)?;
    match s.direction {
        Direction::Collapse => {
            faces.remove(&s.free);
            faces.remove(&s.coface);
        }
        Direction::Anticollapse => {
            faces.insert(s.free);
            faces.insert(s.coface);
        }
    }
    Ok(())
}

/// Applies one elementary move. The ground set is never enlarged.
pub fn apply_step(x: &SimplicialComplex, s: &StepPair, allow_trivial: bool) -> Result<SimplicialComplex> {
    let mut faces = x.face_set().clone();
    apply_in_place(&mut faces, x.ground(), s, allow_trivial)?;
    Ok(SimplicialComplex::from_parts_unchecked(x.ground(), faces))
}

/// Every collapsible pair `(τ, σ)`: `τ` lies in exactly one other face `σ`.
pub fn free_faces(x: &SimplicialComplex) -> Vec<StepPair> {
    free_faces_with(x, false)
}

/// As [`free_faces`], optionally admitting `∅` as the free face of a
/// one-vertex complex.
pub fn free_faces_with(x: &SimplicialComplex, allow_trivial: bool) -> Vec<StepPair> {
    let mut out = Vec::new();
    for tau in x.faces() {
        if tau.is_empty() && !allow_trivial {
            continue;
        }
        let mut cof = x.cofacets(tau);
        let (Some(sigma), None) = (cof.next(), cof.next()) else {
            continue;
        };
        if x.is_maximal(sigma) {
            out.push(StepPair::collapse(tau, sigma));
        }
    }
    out
}

/// A replayable sequence of elementary moves of a single kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub kind: Direction,
    pub steps: Vec<StepPair>,
    pub start_digest: String,
    pub end_digest: String,
    pub allow_trivial: bool,
}

#[derive(Deserialize)]
struct CertificateFile {
    kind: Direction,
    #[serde(default)]
    allow_trivial: bool,
    start: String,
    end: String,
    steps: Vec<(Face, Face)>,
}

impl Certificate {
    /// Replays `steps` from `start` and records both digests.
    pub fn record(
        start: &SimplicialComplex,
        kind: Direction,
        steps: Vec<(Face, Face)>,
    ) -> Result<(Certificate, SimplicialComplex)> {
        let allow_trivial = steps.iter().any(|(t, _)| t.is_empty());
        let steps: Vec<StepPair> = steps
            .into_iter()
            .map(|(free, coface)| StepPair {
                free,
                coface,
                direction: kind,
            })
            .collect();
        let end = replay_steps(start, &steps, allow_trivial)?;
        let cert = Certificate {
            kind,
            steps,
            start_digest: start.digest(),
            end_digest: end.digest(),
            allow_trivial,
        };
        Ok((cert, end))
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Replays on `start`, checking both digests and every step.
    pub fn replay(&self, start: &SimplicialComplex) -> Result<SimplicialComplex> {
        if start.digest() != self.start_digest {
            return Err(Error::Certificate(format!(
                "start digest mismatch: certificate {}, complex {}",
                self.start_digest,
                start.digest()
            )));
        }
        if let Some(s) = self.steps.iter().find(|s| s.direction != self.kind) {
            return Err(Error::Certificate(format!(
                "{} step inside a {} certificate",
                s.direction, self.kind
            )));
        }
        let end = replay_steps(start, &self.steps, self.allow_trivial)?;
        if end.digest() != self.end_digest {
            return Err(Error::Certificate(format!(
                "end digest mismatch: certificate {}, replay {}",
                self.end_digest,
                end.digest()
            )));
        }
        Ok(end)
    }

    /// The matching formed by the step pairs.
    pub fn matching(&self) -> Matching {
        Matching::new(self.steps.iter().map(|s| (s.free, s.coface)).collect())
    }

    /// The same moves run backwards: a collapse certificate from `X` to `Y`
    /// becomes an anticollapse certificate from `Y` to `X`.
    pub fn reversed(&self) -> Certificate {
        Certificate {
            kind: self.kind.flip(),
            steps: self.steps.iter().rev().map(|s| s.inverse()).collect(),
            start_digest: self.end_digest.clone(),
            end_digest: self.start_digest.clone(),
            allow_trivial: self.allow_trivial,
        }
    }

    /// Concatenation; `next` must start where `self` ends.
    pub fn then(&self, next: &Certificate) -> Result<Certificate> {
        if self.kind != next.kind {
            return Err(Error::Certificate("cannot chain certificates of different kinds".into()));
        }
        if self.end_digest != next.start_digest {
            return Err(Error::Certificate("chained certificates do not meet".into()));
        }
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&next.steps);
        Ok(Certificate {
            kind: self.kind,
            steps,
            start_digest: self.start_digest.clone(),
            end_digest: next.end_digest.clone(),
            allow_trivial: self.allow_trivial || next.allow_trivial,
        })
    }

    /// JSON with one step per line.
    pub fn to_json(&self) -> String {
        let mut out = String::from("{\n");
        let kind = serde_json::to_string(&self.kind).expect("serializable");
        out += &format!("  \"kind\": {kind},\n");
        out += &format!("  \"allow_trivial\": {},\n", self.allow_trivial);
        out += &format!("  \"start\": \"{}\",\n", self.start_digest);
        out += &format!("  \"end\": \"{}\",\n", self.end_digest);
        if self.steps.is_empty() {
            out += "  \"steps\": []\n}\n";
            return out;
        }
        out += "  \"steps\": [\n";
        for (i, s) in self.steps.iter().enumerate() {
            let pair = serde_json::to_string(&(s.free, s.coface)).expect("serializable");
            let sep = if i + 1 < self.steps.len() { "," } else { "" };
            out += &format!("    {pair}{sep}\n");
        }
        out += "  ]\n}\n";
        out
    }

    /// Inverse of [`Certificate::to_json`]. Leading `#` lines are skipped.
    pub fn from_json(text: &str) -> Result<Certificate> {
        let body: String = text
            .lines()
            .skip_while(|l| l.trim_start().starts_with('#'))
            .collect::<Vec<_>>()
            .join("\n");
        let file: CertificateFile =
            serde_json::from_str(&body).map_err(|e| Error::Certificate(e.to_string()))?;
        Ok(Certificate {
            kind: file.kind,
            steps: file
                .steps
                .into_iter()
                .map(|(free, coface)| StepPair {
                    free,
                    coface,
                    direction: file.kind,
                })
                .collect(),
            start_digest: file.start,
            end_digest: file.end,
            allow_trivial: file.allow_trivial,
        })
    }
}

pub(crate) fn replay_steps(
    start: &SimplicialComplex,
    steps: &[StepPair],
    allow_trivial: bool,
) -> Result<SimplicialComplex> {
    let mut faces = start.face_set().clone();
    for s in steps {
        apply_in_place(&mut faces, start.ground(), s, allow_trivial)?;
    }
    Ok(SimplicialComplex::from_parts_unchecked(start.ground(), faces))
}
