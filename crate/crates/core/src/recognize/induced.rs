use super::{Pattern, RecognizeError};
use crate::graph::{bitset, Graph};

pub const MAX_PATTERN_VERTICES: usize = 6;

/// Exhaustive search for an induced copy of `pattern`.
///
/// Pattern vertices are mapped one at a time; the candidates for the next
/// one are the unused vertices whose adjacency to every already-mapped
/// vertex matches the pattern exactly and whose degree is large enough.
/// On success, `result[i]` is the image of pattern vertex `i`.
pub fn find_induced(g: &Graph, pattern: Pattern) -> Result<Option<Vec<usize>>, RecognizeError> {
    let size = pattern.vertex_count();
    if size > MAX_PATTERN_VERTICES {
        return Err(RecognizeError::PatternTooLarge {
            pattern,
            size,
            max: MAX_PATTERN_VERTICES,
        });
    }
    let p = pattern.graph();
    if size > g.n() {
        return Ok(None);
    }
    let degrees = g.degrees();
    let mut map = Vec::with_capacity(size);
    Ok(extend(g, &p, &degrees, &mut map).then_some(map))
}

/// First pattern from `patterns` found as an induced subgraph.
pub fn find_any_induced(
    g: &Graph,
    patterns: &[Pattern],
) -> Result<Option<(Pattern, Vec<usize>)>, RecognizeError> {
    for &pattern in patterns {
        if let Some(vs) = find_induced(g, pattern)? {
            return Ok(Some((pattern, vs)));
        }
    }
    Ok(None)
}

fn extend(g: &Graph, p: &Graph, degrees: &[usize], map: &mut Vec<usize>) -> bool {
    let i = map.len();
    if i == p.n() {
        return true;
    }
    let words = bitset::words_for(g.n());
    let mut cand = vec![u64::MAX; words];
    if !g.n().is_multiple_of(64) {
        cand[words - 1] = (1u64 << (g.n() % 64)) - 1;
    }
    for (j, &u) in map.iter().enumerate() {
        let row = g.row(u);
        let adjacent = p.has_edge(i, j);
        for (c, &r) in cand.iter_mut().zip(row) {
            *c &= if adjacent { r } else { !r };
        }
        bitset::clear(&mut cand, u);
    }
    let need = p.degree(i);
    for v in bitset::ones(&cand).collect::<Vec<_>>() {
        if degrees[v] < need {
            continue;
        }
        map.push(v);
        if extend(g, p, degrees, map) {
            return true;
        }
        map.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paths_in_cycles() {
        let vs = find_induced(&Graph::cycle(5), Pattern::Path(4))
            .unwrap()
            .unwrap();
        assert_eq!(vs.len(), 4);
        assert_eq!(Graph::cycle(5).induced(&vs), Graph::path(4));
    }

    #[test]
    fn no_two_k2_in_complete_graph() {
        assert_eq!(
            find_induced(&Graph::complete(4), Pattern::TwoK2).unwrap(),
            None
        );
        assert_eq!(
            find_induced(&Graph::complete(3), Pattern::Path(4)).unwrap(),
            None
        );
    }

    #[test]
    fn induced_means_induced() {
        // C4 contains P3 as a subgraph but never P4 induced
        assert_eq!(
            find_induced(&Graph::cycle(4), Pattern::Path(4)).unwrap(),
            None
        );
        assert!(find_induced(&Graph::cycle(4), Pattern::Cycle(4))
            .unwrap()
            .is_some());
    }

    #[test]
    fn pattern_size_guard() {
        assert!(matches!(
            find_induced(&Graph::complete(8), Pattern::Complete(7)),
            Err(RecognizeError::PatternTooLarge { size: 7, .. })
        ));
    }

    #[test]
    fn large_sparse_graph() {
        let g = Graph::path(300);
        let vs = find_induced(&g, Pattern::Path(4)).unwrap().unwrap();
        assert_eq!(g.induced(&vs), Graph::path(4));
        assert_eq!(find_induced(&g, Pattern::Cycle(5)).unwrap(), None);
    }
}
