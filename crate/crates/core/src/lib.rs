//! k-(r,s) nucleus decomposition with the full nucleus hierarchy.
//!
//! Supported orders are (1,2) (k-core), (2,3) (k-truss communities) and
//! (3,4). Every back-end produces the same [`NucleusTree`]:
//!
//! ```
//! use nucleus::{decompose, gen, Algorithm, Rs};
//!
//! let g = gen::two_k4_path();
//! let out = decompose(&g, Rs::OneTwo, Algorithm::Fnd).unwrap();
//! let ks: Vec<u32> = out.tree.nodes().iter().map(|n| n.k).collect();
//! assert_eq!(ks, [0, 2, 3, 3]);
//! ```

use std::fmt;
use std::str::FromStr;

pub mod bucket;
pub mod clique;
pub mod dsf;
pub mod error;
pub mod fnd;
pub mod gen;
pub mod graph;
pub mod hierarchy;
pub mod lcps;
pub mod oracle;
pub mod peeling;
pub mod pipeline;
pub mod traversal;

pub use clique::{CliqueIndex, KrId, KsNeighborhood};
pub use error::{Error, Result};
pub use graph::{load_graph, Graph, VertexId};
pub use hierarchy::{condense, to_json, HierarchySkeleton, NucleusNode, NucleusTree};
pub use peeling::{set_lambda, LambdaTable};
pub use pipeline::{decompose, Algorithm, Decomposition, PhaseTimes};

/// The (r,s) pair of a decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rs {
    /// Vertices in edges: k-cores.
    OneTwo,
    /// Edges in triangles: k-truss communities.
    TwoThree,
    /// Triangles in four-cliques.
    ThreeFour,
}

impl Rs {
    pub const ALL: [Rs; 3] = [Rs::OneTwo, Rs::TwoThree, Rs::ThreeFour];

    pub fn r(self) -> usize {
        match self {
            Rs::OneTwo => 1,
            Rs::TwoThree => 2,
            Rs::ThreeFour => 3,
        }
    }

    pub fn s(self) -> usize {
        self.r() + 1
    }

    pub fn from_r(r: usize) -> Result<Self> {
        match r {
            1 => Ok(Rs::OneTwo),
            2 => Ok(Rs::TwoThree),
            3 => Ok(Rs::ThreeFour),
            _ => Err(Error::Config(format!("unsupported clique order r = {r}"))),
        }
    }
}

impl FromStr for Rs {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "12" | "1,2" => Ok(Rs::OneTwo),
            "23" | "2,3" => Ok(Rs::TwoThree),
            "34" | "3,4" => Ok(Rs::ThreeFour),
            other => Err(Error::Config(format!(
                "unsupported (r,s) pair '{other}', expected 12, 23 or 34"
            ))),
        }
    }
}

impl fmt::Display for Rs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.r(), self.s())
    }
}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/peeling.md")]
    mod peeling {}
    #[doc = include_str!("../../../book/src/forest.md")]
    mod forest {}
    #[doc = include_str!("../../../book/src/traversal.md")]
    mod traversal {}
    #[doc = include_str!("../../../book/src/fast.md")]
    mod fast {}
    #[doc = include_str!("../../../book/src/lcps.md")]
    mod lcps {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rs_parsing() {
        assert_eq!("12".parse::<Rs>().unwrap(), Rs::OneTwo);
        assert_eq!("3,4".parse::<Rs>().unwrap(), Rs::ThreeFour);
        assert!(matches!("45".parse::<Rs>(), Err(Error::Config(_))));
        assert_eq!(Rs::TwoThree.to_string(), "(2,3)");
        assert!(Rs::from_r(4).is_err());
    }
}
