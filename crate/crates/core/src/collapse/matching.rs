use std::collections::HashMap;
use std::fmt;

use petgraph::algo::is_cyclic_directed;
use petgraph::graph::DiGraph;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;

/// A set of Hasse-diagram edges `(lower, upper)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Matching {
    pub pairs: Vec<(Face, Face)>,
}

/// Critical cells per dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MorseVector {
    pub counts: Vec<usize>,
}

impl MorseVector {
    pub fn alternating_sum(&self) -> i64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// `(1, 0, ..., 0)`.
    pub fn is_perfect_point(&self) -> bool {
        self.counts.first() == Some(&1) && self.counts[1..].iter().all(|&c| c == 0)
    }
}

impl fmt::Display for MorseVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Matching {
    pub fn new(pairs: Vec<(Face, Face)>) -> Matching {
        Matching { pairs }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Checks that every pair is a Hasse edge of `x` and no face repeats.
    pub fn validate(&self, x: &SimplicialComplex) -> Result<()> {
        let mut used = std::collections::HashSet::new();
        for &(lo, hi) in &self.pairs {
            if !lo.is_subset(hi) || hi.len() != lo.len() + 1 || !x.contains(lo) || !x.contains(hi) {
                return Err(Error::Input(format!("({lo}, {hi}) is not a Hasse edge of the complex")));
            }
            for f in [lo, hi] {
                if !used.insert(f) {
                    return Err(Error::Input(format!("face {f} is matched twice")));
                }
            }
        }
        Ok(())
    }

    /// Unmatched nonempty faces.
    pub fn critical_cells(&self, x: &SimplicialComplex) -> Vec<Face> {
        let used: std::collections::HashSet<Face> = self.pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        x.faces().filter(|f| !f.is_empty() && !used.contains(f)).collect()
    }

    pub fn morse_vector(&self, x: &SimplicialComplex) -> MorseVector {
        let dim = x.dim().max(0) as usize;
        let mut counts = vec![0; dim + 1];
        for f in self.critical_cells(x) {
            counts[f.len() - 1] += 1;
        }
        MorseVector { counts }
    }
}

/// Whether the Hasse diagram of `x`, with matched edges pointing down and all
/// others pointing up, is free of directed cycles.
pub fn verify_matching_acyclic(x: &SimplicialComplex, m: &Matching) -> Result<bool> {
    m.validate(x)?;
    let partner: HashMap<Face, Face> = m.pairs.iter().copied().collect();
    let mut g = DiGraph::<(), ()>::new();
    let index: HashMap<Face, _> = x.faces().map(|f| (f, g.add_node(()))).collect();
    for e in x.hasse_edges() {
        let (lo, hi) = (index[&e.lower], index[&e.upper]);
        if partner.get(&e.lower) == Some(&e.upper) {
            g.add_edge(hi, lo, ());
        } else {
            g.add_edge(lo, hi, ());
        }
    }
    Ok(!is_cyclic_directed(&g))
}
