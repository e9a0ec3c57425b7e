use std::cmp::Reverse;

use super::{find_any_induced, is_planar, Pattern, Verdict};
use crate::graph::{bitset, Graph};

/// Outerplanar iff adding one vertex adjacent to everything keeps the graph planar.
pub fn is_outerplanar(g: &Graph) -> Verdict {
    is_planar(&g.with_apex())
}

/// Degree-sequence test: with degrees sorted descending and
/// `m = max{i : d_i >= i - 1}`, the graph is split iff
/// `d_1 + ... + d_m = m(m - 1) + d_{m+1} + ... + d_n`.
pub fn is_split(g: &Graph) -> Verdict {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| Reverse(g.degree(v)));
    let d: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let m = (1..=d.len())
        .filter(|&i| d[i - 1] + 1 >= i)
        .max()
        .unwrap_or(0);
    let head: usize = d[..m].iter().sum();
    let tail: usize = d[m..].iter().sum();
    Verdict::from_bool(head == m * m.saturating_sub(1) + tail)
}

/// Repeatedly strips an isolated or dominating vertex; threshold iff this empties the graph.
pub fn is_threshold(g: &Graph) -> Verdict {
    let mut alive = vec![true; g.n()];
    let mut degree = g.degrees();
    for remaining in (1..=g.n()).rev() {
        let Some(v) =
            (0..g.n()).find(|&v| alive[v] && (degree[v] == 0 || degree[v] + 1 == remaining))
        else {
            return Verdict::no();
        };
        alive[v] = false;
        for u in g.neighbors(v) {
            if alive[u] {
                degree[u] -= 1;
            }
        }
    }
    Verdict::yes()
}

/// Cotree decomposition: every induced subgraph on two or more vertices
/// must be disconnected or have a disconnected complement. The vertex sets
/// still to split are kept on a work stack.
pub fn is_cograph(g: &Graph) -> Verdict {
    let words = bitset::words_for(g.n());
    let mut all = vec![0u64; words];
    for v in 0..g.n() {
        bitset::set(&mut all, v);
    }
    let mut work = vec![all];
    while let Some(set) = work.pop() {
        if bitset::count(&set) < 2 {
            continue;
        }
        let parts = split_components(g, &set, false);
        if parts.len() > 1 {
            work.extend(parts);
            continue;
        }
        let coparts = split_components(g, &set, true);
        if coparts.len() > 1 {
            work.extend(coparts);
            continue;
        }
        return Verdict::no();
    }
    Verdict::yes()
}

/// Components of the subgraph (or of its complement) induced by `set`.
fn split_components(g: &Graph, set: &[u64], complement: bool) -> Vec<Vec<u64>> {
    let mut left = set.to_vec();
    let mut out = Vec::new();
    while let Some(start) = bitset::first(&left) {
        let mut comp = vec![0u64; left.len()];
        bitset::set(&mut comp, start);
        bitset::clear(&mut left, start);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            let row = g.row(u);
            let reach: Vec<u64> = left
                .iter()
                .zip(row)
                .map(|(&l, &r)| l & if complement { !r } else { r })
                .collect();
            for v in bitset::ones(&reach) {
                bitset::clear(&mut left, v);
                bitset::set(&mut comp, v);
                stack.push(v);
            }
        }
        out.push(comp);
    }
    out
}

/// Connected and every block is a single edge or a cycle.
pub fn is_cactus(g: &Graph) -> Verdict {
    if g.n() == 0 || !g.is_connected() {
        return Verdict::no();
    }
    Verdict::from_bool(
        blocks(g)
            .iter()
            .all(|&(vertices, edges)| edges == 1 || edges == vertices),
    )
}

/// Connected with exactly one cycle, i.e. `|E| = |V|`.
pub fn is_unicyclic(g: &Graph) -> Verdict {
    Verdict::from_bool(g.n() > 0 && g.is_connected() && g.edge_count() == g.n())
}

/// `(vertex count, edge count)` of every biconnected block, by an iterative
/// Hopcroft-Tarjan pass with an edge stack.
fn blocks(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.n();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent, next neighbour position)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (v, parent, ref mut pos)) = stack.last_mut() {
            if *pos < adj[v].len() {
                let w = adj[v][*pos];
                *pos += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            stack.pop();
            if parent == usize::MAX {
                continue;
            }
            low[parent] = low[parent].min(low[v]);
            if low[v] >= disc[parent] {
                let mut vertices = Vec::new();
                let mut edges = 0;
                while let Some((a, b)) = edge_stack.pop() {
                    edges += 1;
                    vertices.push(a);
                    vertices.push(b);
                    if (a, b) == (parent, v) {
                        break;
                    }
                }
                vertices.sort_unstable();
                vertices.dedup();
                out.push((vertices.len(), edges));
            }
        }
    }
    out
}

/// Split test by search for an induced `2K2`, `C4` or `C5`.
pub fn split_oracle(g: &Graph) -> Verdict {
    forbidden(g, &[Pattern::TwoK2, Pattern::Cycle(4), Pattern::Cycle(5)])
}

/// Threshold test by search for an induced `P4`, `C4` or `2K2`.
pub fn threshold_oracle(g: &Graph) -> Verdict {
    forbidden(g, &[Pattern::Path(4), Pattern::Cycle(4), Pattern::TwoK2])
}

/// Cograph test by search for an induced `P4`.
pub fn cograph_oracle(g: &Graph) -> Verdict {
    forbidden(g, &[Pattern::Path(4)])
}

fn forbidden(g: &Graph, patterns: &[Pattern]) -> Verdict {
    match find_any_induced(g, patterns).expect("forbidden patterns are small") {
        Some((pattern, vertices)) => Verdict::refuted_by(pattern, vertices),
        None => Verdict::yes(),
    }
}
