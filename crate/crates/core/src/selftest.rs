//! Fast recognizers against brute-force oracles, on every labeled graph of
//! one small order plus a seeded sample of larger random graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::graph::{EdgeList, Graph};
use crate::recognize::{
    cograph_oracle, is_cograph, is_outerplanar, is_planar, is_split, is_threshold,
    kuratowski_oracle, outerplanar_oracle, split_oracle, threshold_oracle, Verdict,
    MAX_ORACLE_VERTICES,
};

pub const MAX_EXHAUSTIVE_N: usize = 7;

/// Disagreements beyond this many are counted but not listed.
const LISTED_DISAGREEMENTS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SelftestError {
    #[error("exhaustive order {0} exceeds the limit {MAX_EXHAUSTIVE_N}")]
    ExhaustiveTooLarge(usize),
    #[error("random graph order {0} exceeds the oracle limit {MAX_ORACLE_VERTICES}")]
    RandomTooLarge(usize),
    #[error("thread pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelftestConfig {
    pub exhaustive_n: usize,
    pub random_count: usize,
    pub random_n: usize,
    pub seed: u64,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig {
            exhaustive_n: 6,
            random_count: 500,
            random_n: 12,
            seed: 0,
        }
    }
}

pub const CLASSES: [&str; 5] = ["planar", "outerplanar", "split", "threshold", "cograph"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassTally {
    pub class: String,
    pub members: usize,
    pub disagreements: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disagreement {
    pub class: String,
    pub source: String,
    pub fast: bool,
    pub oracle: bool,
    pub graph: EdgeList,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelftestSummary {
    pub config: SelftestConfig,
    pub exhaustive_graphs: usize,
    pub random_graphs: usize,
    pub classes: Vec<ClassTally>,
    pub invalid_witnesses: usize,
    pub disagreement_count: usize,
    pub disagreements: Vec<Disagreement>,
}

impl SelftestSummary {
    pub fn agreed(&self) -> bool {
        self.disagreement_count == 0 && self.invalid_witnesses == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summary serializes")
    }
}

/// Per-graph result: which classes it belongs to (per oracle), where the
/// fast recognizer disagreed, and how many oracle witnesses failed to check.
#[derive(Default)]
struct Check {
    members: [bool; 5],
    wrong: Vec<(usize, bool, bool)>,
    invalid_witnesses: usize,
}

fn check(g: &Graph) -> Check {
    let fast = [
        is_planar(g).value,
        is_outerplanar(g).value,
        is_split(g).value,
        is_threshold(g).value,
        is_cograph(g).value,
    ];
    let planar = kuratowski_oracle(g).expect("graph within oracle limit");
    let outer = outerplanar_oracle(g).expect("graph within oracle limit");
    let induced: [Verdict; 3] = [split_oracle(g), threshold_oracle(g), cograph_oracle(g)];
    let oracle = [
        planar,
        outer,
        induced[0].value,
        induced[1].value,
        induced[2].value,
    ];
    Check {
        members: oracle,
        wrong: (0..5)
            .filter(|&i| fast[i] != oracle[i])
            .map(|i| (i, fast[i], oracle[i]))
            .collect(),
        invalid_witnesses: induced.iter().filter(|v| !v.witness_valid(g)).count(),
    }
}

/// The labeled graph on `n` vertices whose edge set is given by the bits of
/// `mask`, pairs `(u, v)` with `u < v` taken in lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("mask edges are in range")
}

/// Random graphs drawn from a rotation of families, so the sample contains
/// members and near-members of every tested class, not only dense `G(n, p)`.
pub fn random_graphs(count: usize, n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let mut g = match i % 5 {
                0 => gnp(&mut rng, n),
                1 => random_threshold(&mut rng, n),
                2 => random_cograph(&mut rng, n),
                3 => random_split(&mut rng, n),
                _ => sparse(&mut rng, n),
            };
            if n >= 2 && rng.gen_bool(0.4) {
                let u = rng.gen_range(0..n);
                let v = (u + rng.gen_range(1..n)) % n;
                flip(&mut g, u, v);
            }
            shuffle(&mut rng, &g)
        })
        .collect()
}

fn flip(g: &mut Graph, u: usize, v: usize) {
    let n = g.n();
    let mut edges = g.edges();
    let pair = (u.min(v), u.max(v));
    match edges.iter().position(|&e| e == pair) {
        Some(i) => {
            edges.remove(i);
        }
        None => edges.push(pair),
    }
    *g = Graph::from_edges(n, &edges).expect("flip stays in range");
}

fn shuffle(rng: &mut ChaCha8Rng, g: &Graph) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    g.permuted(&perm)
}

fn gnp(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let p = rng.gen_range(0.1..0.7);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("in range")
}

/// Between `n` and `3n - 6` edges chosen uniformly: the density band where
/// planarity is undecided.
fn sparse(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(rng);
    let hi = (3 * n).saturating_sub(6).max(n).min(pairs.len());
    let m = rng.gen_range(n.min(hi)..=hi);
    pairs.truncate(m);
    Graph::from_edges(n, &pairs).expect("in range")
}

fn random_threshold(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        if rng.gen_bool(0.5) {
            edges.extend((0..v).map(|u| (u, v)));
        }
    }
    Graph::from_edges(n, &edges).expect("in range")
}

/// Repeatedly merges two random pieces by disjoint union or join.
fn random_cograph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut pieces: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let mut edges = Vec::new();
    while pieces.len() > 1 {
        let a = pieces.swap_remove(rng.gen_range(0..pieces.len()));
        let b = pieces.swap_remove(rng.gen_range(0..pieces.len()));
        if rng.gen_bool(0.5) {
            for &u in &a {
                edges.extend(b.iter().map(|&v| (u, v)));
            }
        }
        pieces.push([a, b].concat());
    }
    Graph::from_edges(n, &edges).expect("in range")
}

fn random_split(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let k = rng.gen_range(0..=n);
    let p = rng.gen_range(0.2..0.8);
    let mut edges = Vec::new();
    for u in 0..k {
        edges.extend((u + 1..k).map(|v| (u, v)));
        for v in k..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("in range")
}

/// Runs on a dedicated pool of `threads` workers (0 lets the pool pick).
pub fn run_selftest_with_threads(
    config: &SelftestConfig,
    threads: usize,
) -> Result<SelftestSummary, SelftestError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| SelftestError::Pool(e.to_string()))?
        .install(|| run_selftest(config))
}

pub fn run_selftest(config: &SelftestConfig) -> Result<SelftestSummary, SelftestError> {
    if config.exhaustive_n > MAX_EXHAUSTIVE_N {
        return Err(SelftestError::ExhaustiveTooLarge(config.exhaustive_n));
    }
    if config.random_n > MAX_ORACLE_VERTICES {
        return Err(SelftestError::RandomTooLarge(config.random_n));
    }
    let n = config.exhaustive_n;
    let exhaustive = 1u64 << (n * n.saturating_sub(1) / 2);
    let random = random_graphs(config.random_count, config.random_n, config.seed);

    let exhaustive_checks: Vec<(String, Graph, Check)> = (0..exhaustive)
        .into_par_iter()
        .map(|mask| {
            let g = graph_from_mask(n, mask);
            let c = check(&g);
            (format!("exhaustive n={n} mask={mask}"), g, c)
        })
        .collect();
    let random_checks: Vec<(String, Graph, Check)> = random
        .into_par_iter()
        .enumerate()
        .map(|(i, g)| {
            let c = check(&g);
            (format!("random #{i} seed={}", config.seed), g, c)
        })
        .collect();

    let mut classes: Vec<ClassTally> = CLASSES
        .iter()
        .map(|c| ClassTally {
            class: c.to_string(),
            members: 0,
            disagreements: 0,
        })
        .collect();
    let mut summary = SelftestSummary {
        config: config.clone(),
        exhaustive_graphs: exhaustive as usize,
        random_graphs: config.random_count,
        classes: Vec::new(),
        invalid_witnesses: 0,
        disagreement_count: 0,
        disagreements: Vec::new(),
    };
    for (source, g, c) in exhaustive_checks.into_iter().chain(random_checks) {
        for (tally, &member) in classes.iter_mut().zip(&c.members) {
            tally.members += member as usize;
        }
        summary.invalid_witnesses += c.invalid_witnesses;
        for (i, fast, oracle) in c.wrong {
            classes[i].disagreements += 1;
            summary.disagreement_count += 1;
            if summary.disagreements.len() < LISTED_DISAGREEMENTS {
                summary.disagreements.push(Disagreement {
                    class: CLASSES[i].to_string(),
                    source: source.clone(),
                    fast,
                    oracle,
                    graph: g.to_edge_list(),
                });
            }
        }
    }
    summary.classes = classes;
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn masks_enumerate_labeled_graphs() {
        assert_eq!(graph_from_mask(4, 0).edge_count(), 0);
        assert_eq!(graph_from_mask(4, 63), Graph::complete(4));
        assert_eq!(
            graph_from_mask(3, 0b101),
            Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()
        );
    }

    #[test]
    fn four_vertex_run() {
        let s = run_selftest(&SelftestConfig {
            exhaustive_n: 4,
            random_count: 0,
            ..SelftestConfig::default()
        })
        .unwrap();
        assert_eq!(s.exhaustive_graphs, 64);
        assert!(s.agreed(), "{:?}", s.disagreements);
        // 11 unlabeled graphs on 4 vertices, all planar; only K4 is not outerplanar
        assert_eq!(s.classes[0].members, 64);
        assert_eq!(s.classes[1].members, 63);
    }

    #[test]
    fn random_sample_is_seeded() {
        let a = random_graphs(20, 9, 7);
        assert_eq!(a, random_graphs(20, 9, 7));
        assert_ne!(a, random_graphs(20, 9, 8));
        assert!(a.iter().all(|g| g.n() == 9));
    }

    #[test]
    fn guards() {
        let too_big = SelftestConfig {
            exhaustive_n: 8,
            ..SelftestConfig::default()
        };
        assert_eq!(
            run_selftest(&too_big),
            Err(SelftestError::ExhaustiveTooLarge(8))
        );
        let too_big = SelftestConfig {
            random_n: 13,
            ..SelftestConfig::default()
        };
        assert_eq!(
            run_selftest(&too_big),
            Err(SelftestError::RandomTooLarge(13))
        );
    }
}
