//! Batch evaluation over independent inputs.
//!
//! With the `parallel` feature the `*_par` entry points fan out over rayon's
//! pool; without it they fall back to the sequential versions.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::arrows::ArrowTerm;
use crate::brauer::BrauerArrow;
use crate::cutelim::{eliminate, TraceStep};
use crate::decide::{equal_graphwise, Decision};
use crate::error::Error;
use crate::gentzen::Net;
use crate::graph::graph_of;

/// Order-preserving map, parallel when the feature is enabled.
pub fn par_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

pub fn seq_map<T, U, F: Fn(&T) -> U>(items: &[T], f: F) -> Vec<U> {
    items.iter().map(f).collect()
}

pub type Pair = (ArrowTerm, ArrowTerm);

pub fn decide_pairs(pairs: &[Pair]) -> Vec<Result<Decision, Error>> {
    par_map(pairs, |(a, b)| equal_graphwise(a, b))
}

pub fn decide_pairs_seq(pairs: &[Pair]) -> Vec<Result<Decision, Error>> {
    seq_map(pairs, |(a, b)| equal_graphwise(a, b))
}

pub fn graphs(terms: &[ArrowTerm]) -> Vec<Result<BrauerArrow, Error>> {
    par_map(terms, graph_of)
}

pub fn graphs_seq(terms: &[ArrowTerm]) -> Vec<Result<BrauerArrow, Error>> {
    seq_map(terms, graph_of)
}

pub type Eliminated = Result<(Net, Vec<TraceStep>), Error>;

pub fn eliminate_all(nets: &[Net]) -> Vec<Eliminated> {
    par_map(nets, eliminate)
}

pub fn eliminate_all_seq(nets: &[Net]) -> Vec<Eliminated> {
    seq_map(nets, eliminate)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrows::System;
    use crate::random;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn parallel_matches_sequential() {
        let mut rng = StdRng::seed_from_u64(5);
        let pairs: Vec<Pair> = (0..40)
            .map(|_| {
                let t = random::term(&mut rng, System::Pn, 4, 5);
                let (m, _) = random::mutate(&mut rng, &t, System::Pn, 2);
                (t, m)
            })
            .collect();
        assert_eq!(decide_pairs(&pairs), decide_pairs_seq(&pairs));
        let nets: Vec<Net> = (0..10).map(|_| random::cut_net(&mut rng, 4, 2)).collect();
        assert_eq!(eliminate_all(&nets), eliminate_all_seq(&nets));
    }
}
