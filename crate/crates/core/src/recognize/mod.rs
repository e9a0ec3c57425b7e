//! Graph-class recognition.
//!
//! Each class has a fast decision procedure and an independent brute-force
//! oracle. The oracles search for forbidden induced subgraphs or forbidden
//! minors directly and are meant for small graphs and for testing the fast
//! paths.

mod classes;
mod induced;
mod minor;
mod planarity;

use std::fmt;

use crate::graph::Graph;

pub use classes::{
    cograph_oracle, is_cactus, is_cograph, is_outerplanar, is_split, is_threshold, is_unicyclic,
    split_oracle, threshold_oracle,
};
pub use induced::{find_any_induced, find_induced, MAX_PATTERN_VERTICES};
pub use minor::{
    has_minor, kuratowski_oracle, outerplanar_oracle, MinorTarget, MAX_ORACLE_VERTICES,
};
pub use planarity::is_planar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RecognizeError {
    #[error("pattern {pattern} has {size} vertices; at most {max} are supported")]
    PatternTooLarge {
        pattern: Pattern,
        size: usize,
        max: usize,
    },
    #[error("brute-force oracle limited to {max} vertices, graph has {n}")]
    GraphTooLarge { n: usize, max: usize },
}

/// Small named graphs used as forbidden patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pattern {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Path(usize),
    Cycle(usize),
    /// Two disjoint edges.
    TwoK2,
}

impl Pattern {
    pub fn graph(&self) -> Graph {
        match *self {
            Pattern::Complete(n) => Graph::complete(n),
            Pattern::CompleteBipartite(m, n) => Graph::complete_bipartite(m, n),
            Pattern::Path(n) => Graph::path(n),
            Pattern::Cycle(n) => Graph::cycle(n),
            Pattern::TwoK2 => Graph::complete(2).disjoint_union(&Graph::complete(2)),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            Pattern::Complete(n) | Pattern::Path(n) | Pattern::Cycle(n) => n,
            Pattern::CompleteBipartite(m, n) => m + n,
            Pattern::TwoK2 => 4,
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Pattern::Complete(n) => write!(f, "K{n}"),
            Pattern::CompleteBipartite(m, n) => write!(f, "K{m},{n}"),
            Pattern::Path(n) => write!(f, "P{n}"),
            Pattern::Cycle(n) => write!(f, "C{n}"),
            Pattern::TwoK2 => write!(f, "2K2"),
        }
    }
}

/// A forbidden induced subgraph: `vertices[i]` plays pattern vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub pattern: Pattern,
    pub vertices: Vec<usize>,
}

impl Witness {
    /// Re-checks that the vertices induce a copy of the pattern, in any order.
    pub fn holds_in(&self, g: &Graph) -> bool {
        let mut vs = self.vertices.clone();
        vs.sort_unstable();
        vs.dedup();
        vs.len() == self.pattern.vertex_count()
            && vs.iter().all(|&v| v < g.n())
            && isomorphic_small(&g.induced(&self.vertices), &self.pattern.graph())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub value: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn yes() -> Self {
        Verdict {
            value: true,
            witness: None,
        }
    }

    pub fn no() -> Self {
        Verdict {
            value: false,
            witness: None,
        }
    }

    pub fn from_bool(value: bool) -> Self {
        Verdict {
            value,
            witness: None,
        }
    }

    pub fn refuted_by(pattern: Pattern, vertices: Vec<usize>) -> Self {
        Verdict {
            value: false,
            witness: Some(Witness { pattern, vertices }),
        }
    }

    /// True when there is no witness or the witness re-validates.
    pub fn witness_valid(&self, g: &Graph) -> bool {
        self.witness
            .as_ref()
            .is_none_or(|w| !self.value && w.holds_in(g))
    }
}

/// Isomorphism by trying every bijection; only for tiny graphs.
pub(crate) fn isomorphic_small(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let mut perm: Vec<usize> = (0..a.n()).collect();
    permutations_any(&mut perm, 0, &mut |p| a.permuted(p) == *b)
}

fn permutations_any(p: &mut [usize], k: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if k == p.len() {
        return f(p);
    }
    for i in k..p.len() {
        p.swap(k, i);
        if permutations_any(p, k + 1, f) {
            return true;
        }
        p.swap(k, i);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pattern_graphs_match_definitions() {
        let k23 = Pattern::CompleteBipartite(2, 3).graph();
        assert_eq!(k23.edge_count(), 6);
        assert!(!k23.has_edge(0, 1) && !k23.has_edge(2, 3) && k23.has_edge(1, 4));
        assert_eq!(Pattern::TwoK2.graph().edge_count(), 2);
        assert_eq!(Pattern::Path(4).graph().edge_count(), 3);
        assert_eq!(Pattern::Complete(5).vertex_count(), 5);
        assert_eq!(Pattern::CompleteBipartite(3, 3).to_string(), "K3,3");
    }

    #[test]
    fn small_isomorphism() {
        let p4 = Graph::path(4);
        assert!(isomorphic_small(&p4, &p4.permuted(&[2, 0, 3, 1])));
        assert!(!isomorphic_small(&p4, &Graph::complete_bipartite(1, 3)));
    }

    #[test]
    fn witnesses_recheck() {
        let g = Graph::cycle(5);
        let w = Witness {
            pattern: Pattern::Path(4),
            vertices: vec![0, 1, 2, 3],
        };
        assert!(w.holds_in(&g));
        let bad = Witness {
            pattern: Pattern::Path(4),
            vertices: vec![0, 1, 2, 2],
        };
        assert!(!bad.holds_in(&g));
    }
}
