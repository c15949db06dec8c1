use std::fmt;

use crate::collapse::{free_faces, greedy_collapse, Certificate, Direction, SearchBudget};
use crate::complex::SimplicialComplex;
use crate::duality::is_anticollapsible;
use crate::error::{Error, Result};
use crate::homology::homology;
use crate::hypertree::kruskal_generate;
use crate::rng;

/// Where the random collapses start.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseStrategy {
    /// From the full simplex; stuck residues are anticollapsible by reversal.
    Simplex,
    /// From a random hypertree that anticollapses to the simplex.
    Hypertree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BaseBudget {
    pub trials: u64,
    pub strategy: BaseStrategy,
}

impl Default for BaseBudget {
    fn default() -> Self {
        BaseBudget {
            trials: 200_000,
            strategy: BaseStrategy::Hypertree,
        }
    }
}

/// A stuck complex with the moves that take it to the full simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseCase {
    pub complex: SimplicialComplex,
    pub certificate: Certificate,
    /// Master seed and the trial index that produced the complex.
    pub seed: u64,
    pub trial: u64,
}

/// Counts from an exhausted search.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BaseStats {
    pub trials: u64,
    pub stuck: u64,
    pub stuck_in_dimension: u64,
}

impl fmt::Display for BaseStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} trials, {} stuck, {} stuck in the target dimension",
            self.trials, self.stuck, self.stuck_in_dimension
        )
    }
}

/// Random collapse runs until one gets stuck on a `d`-dimensional complex
/// that still spans `n` vertices, Z-acyclic with no free faces.
pub fn find_stuck_complex(n: u32, d: usize, seed: u64, budget: BaseBudget) -> Result<BaseCase> {
    let mut stats = BaseStats::default();
    let full = SimplicialComplex::simplex(n);
    for trial in 0..budget.trials {
        stats.trials += 1;
        let s = rng::derive_seed(seed, trial);
        let start = match budget.strategy {
            BaseStrategy::Simplex => full.clone(),
            BaseStrategy::Hypertree => kruskal_generate(n, d, s)?,
        };
        let (steps, st) = greedy_collapse(&start, rng::derive_seed(s, 0));
        if st.is_single_vertex() {
            continue;
        }
        stats.stuck += 1;
        let (down, residue) = Certificate::record(&start, Direction::Collapse, steps)?;
        if residue.dim() != d as isize || residue.support().len() != n as usize {
            continue;
        }
        stats.stuck_in_dimension += 1;
        debug_assert!(free_faces(&residue).is_empty());
        if !homology(&residue)?.is_trivial() {
            continue;
        }
        let up = down.reversed();
        let certificate = match budget.strategy {
            BaseStrategy::Simplex => up,
            BaseStrategy::Hypertree => {
                let Some(rest) = is_anticollapsible(&start, SearchBudget::default(), s) else {
                    continue;
                };
                up.then(&rest)?
            }
        };
        return Ok(BaseCase {
            complex: residue,
            certificate,
            seed,
            trial,
        });
    }
    Err(Error::Budget(format!("no stuck {d}-complex on {n} vertices: {stats}")))
}

/// Random collapses of `start` until one gets stuck in the same dimension on
/// all of its vertices. `cert` anticollapses `start` to the full simplex; the
/// returned certificate goes from the residue through `start`.
pub fn stuck_residue(start: &SimplicialComplex, cert: &Certificate, seed: u64, trials: u64) -> Result<BaseCase> {
    let mut stats = BaseStats::default();
    let n = start.support().len();
    for trial in 0..trials {
        stats.trials += 1;
        let (steps, st) = greedy_collapse(start, rng::derive_seed(seed, trial));
        if st.is_single_vertex() {
            continue;
        }
        stats.stuck += 1;
        let (down, residue) = Certificate::record(start, Direction::Collapse, steps)?;
        if residue.dim() != start.dim() || residue.support().len() != n {
            continue;
        }
        return Ok(BaseCase {
            complex: residue,
            certificate: down.reversed().then(cert)?,
            seed,
            trial,
        });
    }
    Err(Error::Budget(format!("no stuck residue: {stats}")))
}

/// The 8-vertex, 2-dimensional case.
pub fn find_base_case(seed: u64, budget: BaseBudget) -> Result<BaseCase> {
    find_stuck_complex(8, 2, seed, budget)
}
