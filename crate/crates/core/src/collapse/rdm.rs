use super::state::CollapseState;
use super::{Matching, MorseVector};
use crate::complex::SimplicialComplex;
use crate::face::Face;
use crate::rng;

/// Outcome of one Random Discrete Morse run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RdmRun {
    pub morse: MorseVector,
    pub matching: Matching,
    pub critical: Vec<Face>,
}

/// Collapses at random from the top dimension down; when stuck, a random
/// top-dimensional face is declared critical and deleted.
pub fn random_discrete_morse(x: &SimplicialComplex, seed: u64) -> RdmRun {
    let mut r = rng::seeded(seed);
    let mut st = CollapseState::new(x, false);
    let mut pairs = Vec::new();
    let mut critical = Vec::new();
    while st.num_nonempty() > 0 {
        if let Some((t, s)) = st.random_top_free(&mut r) {
            st.collapse(t, s);
            pairs.push((t, s));
        } else {
            let f = st.random_top_face(&mut r).expect("nonempty");
            st.remove_facet(f);
            critical.push(f);
        }
    }
    let dim = x.dim().max(0) as usize;
    let mut counts = vec![0; dim + 1];
    for f in &critical {
        counts[f.len() - 1] += 1;
    }
    RdmRun {
        morse: MorseVector { counts },
        matching: Matching::new(pairs),
        critical,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::collapse::verify_matching_acyclic;

    #[test]
    fn single_vertex() {
        let x = SimplicialComplex::from_lists::<&[u32]>(&[&[1]]).unwrap();
        assert_eq!(random_discrete_morse(&x, 0).morse.counts, vec![1]);
    }

    #[test]
    fn simplex_is_perfect() {
        let x = SimplicialComplex::simplex(5);
        for seed in 0..20 {
            assert_eq!(random_discrete_morse(&x, seed).morse.counts, vec![1, 0, 0, 0, 0]);
        }
    }

    #[test]
    fn alternating_sum_and_acyclicity() {
        let x = SimplicialComplex::from_lists::<&[u32]>(&[&[1, 2, 3], &[2, 3, 4], &[3, 4, 1], &[1, 2, 4], &[4, 5], &[5, 6, 7]])
            .unwrap();
        for seed in 0..20 {
            let run = random_discrete_morse(&x, seed);
            assert_eq!(run.morse.alternating_sum(), x.reduced_euler_characteristic() + 1);
            assert!(verify_matching_acyclic(&x, &run.matching).unwrap());
            assert!(run.morse.counts[2] >= 1);
        }
    }
}
