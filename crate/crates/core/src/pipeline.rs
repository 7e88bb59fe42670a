//! Running a back-end end to end with phase timings.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::clique::CliqueIndex;
use crate::error::{Error, Result};
use crate::fnd;
use crate::graph::Graph;
use crate::hierarchy::{condense, NucleusTree};
use crate::lcps::lcps_core;
use crate::peeling::{set_lambda, LambdaTable};
use crate::traversal::{df_traversal, naive_traversal, plain_traversal};
use crate::Rs;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    /// One breadth-first search per k.
    Naive,
    /// Single traversal over the disjoint-set forest.
    Dft,
    /// Fragments found during peeling, no traversal.
    Fnd,
    /// Priority search, k-cores only.
    Lcps,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [Algorithm::Naive, Algorithm::Dft, Algorithm::Fnd, Algorithm::Lcps];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Naive => "naive",
            Algorithm::Dft => "dft",
            Algorithm::Fnd => "fnd",
            Algorithm::Lcps => "lcps",
        }
    }

    pub fn supports(self, rs: Rs) -> bool {
        self != Algorithm::Lcps || rs == Rs::OneTwo
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown algorithm '{s}', expected naive, dft, fnd or lcps")))
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Wall-clock time per phase. [`PhaseTimes::total`] is their sum.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct PhaseTimes {
    pub index: Duration,
    pub peel: Duration,
    pub post: Duration,
}

impl PhaseTimes {
    pub fn total(&self) -> Duration {
        self.index + self.peel + self.post
    }
}

#[derive(Debug, Clone)]
pub struct Decomposition {
    pub rs: Rs,
    pub algorithm: Algorithm,
    pub lambda: LambdaTable,
    pub tree: NucleusTree,
    pub times: PhaseTimes,
    /// Sub-nuclei in the skeleton: maximal ones for DFT, fragments for FND.
    pub subnuclei: Option<usize>,
    pub adj_pairs: Option<usize>,
    pub queue_pushes: Option<u64>,
}

/// Builds the clique index and runs `algo`.
pub fn decompose(g: &Graph, rs: Rs, algo: Algorithm) -> Result<Decomposition> {
    let start = Instant::now();
    let idx = CliqueIndex::build(g, rs);
    let index = start.elapsed();
    let mut out = decompose_indexed(&idx, algo)?;
    out.times.index = index;
    Ok(out)
}

/// Runs `algo` on a prebuilt index. `times.index` is left at zero.
pub fn decompose_indexed(idx: &CliqueIndex, algo: Algorithm) -> Result<Decomposition> {
    let rs = idx.rs();
    if !algo.supports(rs) {
        return Err(Error::Config(format!("{algo} only supports (r,s) = (1,2), got {rs}")));
    }
    let mut times = PhaseTimes::default();
    let mut subnuclei = None;
    let mut adj_pairs = None;
    let mut queue_pushes = None;

    let (lambda, tree) = match algo {
        Algorithm::Fnd => {
            let t0 = Instant::now();
            let peeled = fnd::peel(idx);
            times.peel = t0.elapsed();
            let t1 = Instant::now();
            let res = peeled.finish()?;
            let tree = condense(&res.skeleton)?;
            times.post = t1.elapsed();
            subnuclei = Some(res.fragment_count());
            adj_pairs = Some(res.adj_pairs);
            (res.lambda, tree)
        }
        _ => {
            let t0 = Instant::now();
            let lambda = set_lambda(idx);
            times.peel = t0.elapsed();
            let t1 = Instant::now();
            let tree = match algo {
                Algorithm::Naive => naive_traversal(idx, &lambda)?,
                Algorithm::Dft => {
                    let skel = df_traversal(idx, &lambda);
                    subnuclei = Some(skel.subnucleus_count());
                    condense(&skel)?
                }
                Algorithm::Lcps => {
                    let out = lcps_core(idx.graph(), &lambda, rs)?;
                    queue_pushes = Some(out.queue_pushes);
                    out.tree
                }
                Algorithm::Fnd => unreachable!(),
            };
            times.post = t1.elapsed();
            (lambda, tree)
        }
    };
    Ok(Decomposition {
        rs,
        algorithm: algo,
        lambda,
        tree,
        times,
        subnuclei,
        adj_pairs,
        queue_pushes,
    })
}

/// Peeling followed by one plain traversal with no hierarchy bookkeeping.
/// Returns the timings and the number of connected components found.
pub fn hypo_baseline(idx: &CliqueIndex) -> (PhaseTimes, usize) {
    let t0 = Instant::now();
    std::hint::black_box(set_lambda(idx));
    let peel = t0.elapsed();
    let t1 = Instant::now();
    let components = plain_traversal(idx);
    let post = t1.elapsed();
    (
        PhaseTimes {
            index: Duration::ZERO,
            peel,
            post,
        },
        components,
    )
}
