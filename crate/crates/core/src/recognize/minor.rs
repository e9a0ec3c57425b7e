//! Brute-force minor search for small graphs.
//!
//! A connected graph `G` has a minor `H` (with `H` connected and without
//! isolated vertices) iff `V(G)` splits into `|V(H)|` connected branch sets
//! whose quotient graph contains `H` as a subgraph: vertices left out of a
//! model can always be absorbed into a neighbouring branch set. The search
//! enumerates every such partition of each component, branch set by branch
//! set, each set grown as a connected vertex set containing the lowest
//! unassigned vertex.

use super::RecognizeError;
use crate::graph::Graph;

pub const MAX_ORACLE_VERTICES: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinorTarget {
    K4,
    K5,
    K23,
    K33,
}

impl MinorTarget {
    fn parts(self) -> usize {
        match self {
            MinorTarget::K4 => 4,
            MinorTarget::K5 | MinorTarget::K23 => 5,
            MinorTarget::K33 => 6,
        }
    }

    fn is_complete(self) -> bool {
        matches!(self, MinorTarget::K4 | MinorTarget::K5)
    }

    /// Whether a quotient on `parts()` vertices contains the target as a subgraph.
    fn embeds_in(self, quotient: &[u32]) -> bool {
        let k = quotient.len() as u32;
        let all = (1u32 << k) - 1;
        match self {
            MinorTarget::K4 | MinorTarget::K5 => {
                (0..k as usize).all(|i| quotient[i] | (1 << i) == all)
            }
            // small side of size `s`: every small vertex sees every big vertex
            MinorTarget::K23 | MinorTarget::K33 => {
                let s = if self == MinorTarget::K23 { 2 } else { 3 };
                (0..=all)
                    .filter(|m: &u32| m.count_ones() == s)
                    .any(|small| {
                        let big = all & !small;
                        (0..k as usize)
                            .filter(|i| small >> i & 1 == 1)
                            .all(|i| quotient[i] & big == big)
                    })
            }
        }
    }
}

/// Whether `g` has `target` as a minor. Exponential; `g` must be small.
pub fn has_minor(g: &Graph, target: MinorTarget) -> Result<bool, RecognizeError> {
    if g.n() > MAX_ORACLE_VERTICES {
        return Err(RecognizeError::GraphTooLarge {
            n: g.n(),
            max: MAX_ORACLE_VERTICES,
        });
    }
    let adj: Vec<u32> = (0..g.n())
        .map(|v| g.neighbors(v).fold(0u32, |m, w| m | 1 << w))
        .collect();
    Ok(g.components().into_iter().any(|comp| {
        let mask = comp.iter().fold(0u32, |m, &v| m | 1 << v);
        let mut search = Search {
            adj: &adj,
            target,
            parts: Vec::with_capacity(target.parts()),
        };
        comp.len() >= target.parts() && search.partition(mask)
    }))
}

/// Planarity by exhaustive search for `K5` and `K3,3` minors.
pub fn kuratowski_oracle(g: &Graph) -> Result<bool, RecognizeError> {
    Ok(!has_minor(g, MinorTarget::K5)? && !has_minor(g, MinorTarget::K33)?)
}

/// Outerplanarity by exhaustive search for `K4` and `K2,3` minors.
pub fn outerplanar_oracle(g: &Graph) -> Result<bool, RecognizeError> {
    Ok(!has_minor(g, MinorTarget::K4)? && !has_minor(g, MinorTarget::K23)?)
}

struct Search<'a> {
    adj: &'a [u32],
    target: MinorTarget,
    parts: Vec<u32>,
}

impl Search<'_> {
    fn neighborhood(&self, set: u32) -> u32 {
        let mut out = 0;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= self.adj[v];
        }
        out & !set
    }

    fn component_count(&self, set: u32) -> usize {
        let mut left = set;
        let mut count = 0;
        while left != 0 {
            let mut comp = left & left.wrapping_neg();
            loop {
                let grown = comp | (self.neighborhood(comp) & set);
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            left &= !comp;
            count += 1;
        }
        count
    }

    /// Splits `remaining` into the still-missing branch sets.
    fn partition(&mut self, remaining: u32) -> bool {
        let needed = self.target.parts() - self.parts.len();
        if needed == 0 {
            return remaining == 0 && self.quotient_ok();
        }
        if (remaining.count_ones() as usize) < needed {
            return false;
        }
        // every component of what is left must be a union of branch sets
        if self.component_count(remaining) > needed {
            return false;
        }
        let start = remaining & remaining.wrapping_neg();
        self.grow(start, 0, remaining)
    }

    /// Enumerates each connected `set` inside `remaining` exactly once:
    /// `banned` holds frontier vertices already branched on.
    fn grow(&mut self, set: u32, banned: u32, remaining: u32) -> bool {
        if self.try_part(set, remaining) {
            return true;
        }
        let mut frontier = self.neighborhood(set) & remaining & !banned;
        let mut banned = banned;
        while frontier != 0 {
            let v = frontier & frontier.wrapping_neg();
            frontier &= !v;
            if self.grow(set | v, banned, remaining) {
                return true;
            }
            banned |= v;
        }
        false
    }

    fn try_part(&mut self, set: u32, remaining: u32) -> bool {
        if self.target.is_complete() {
            let nb = self.neighborhood(set);
            if self.parts.iter().any(|&p| p & nb == 0) {
                return false;
            }
        }
        self.parts.push(set);
        let found = self.partition(remaining & !set);
        self.parts.pop();
        found
    }

    fn quotient_ok(&self) -> bool {
        let quotient: Vec<u32> = self
            .parts
            .iter()
            .map(|&p| {
                let nb = self.neighborhood(p);
                self.parts
                    .iter()
                    .enumerate()
                    .filter(|(_, &q)| q & nb != 0)
                    .fold(0u32, |m, (j, _)| m | 1 << j)
            })
            .collect();
        self.target.embeds_in(&quotient)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kuratowski_graphs() {
        assert!(!kuratowski_oracle(&Graph::complete(5)).unwrap());
        assert!(!kuratowski_oracle(&Graph::complete_bipartite(3, 3)).unwrap());
        assert!(kuratowski_oracle(&Graph::cycle(8)).unwrap());
        let mut k5_minus = Graph::complete(5);
        k5_minus.remove_edge(0, 1);
        assert!(kuratowski_oracle(&k5_minus).unwrap());
    }

    #[test]
    fn subdivisions_and_petersen() {
        // K3,3 with one edge subdivided
        let mut g = Graph::empty(7);
        for (u, v) in Graph::complete_bipartite(3, 3).edges() {
            if (u, v) != (0, 3) {
                g.add_edge(u, v);
            }
        }
        g.add_edge(0, 6);
        g.add_edge(6, 3);
        assert!(!kuratowski_oracle(&g).unwrap());
        let petersen = Graph::from_edges(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        )
        .unwrap();
        assert!(!kuratowski_oracle(&petersen).unwrap());
    }

    #[test]
    fn outerplanar_minors() {
        assert!(!outerplanar_oracle(&Graph::complete(4)).unwrap());
        assert!(!outerplanar_oracle(&Graph::complete_bipartite(2, 3)).unwrap());
        assert!(outerplanar_oracle(&Graph::cycle(6)).unwrap());
        // fan: a path plus a vertex seeing all of it
        assert!(outerplanar_oracle(&Graph::path(5).with_apex()).unwrap());
        assert!(!outerplanar_oracle(&Graph::cycle(5).with_apex()).unwrap());
    }

    #[test]
    fn minors_in_disconnected_graphs() {
        let g = Graph::complete(5).disjoint_union(&Graph::path(3));
        assert!(has_minor(&g, MinorTarget::K5).unwrap());
        assert!(!has_minor(&g, MinorTarget::K33).unwrap());
    }

    #[test]
    fn size_guard() {
        assert!(matches!(
            kuratowski_oracle(&Graph::empty(13)),
            Err(RecognizeError::GraphTooLarge { n: 13, max: 12 })
        ));
    }
}
