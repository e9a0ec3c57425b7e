//! Left-right planarity test.
//!
//! Two depth-first passes: the first orients the graph into a DFS tree with
//! back edges and computes lowpoints and nesting depths; the second walks the
//! out-edges of each vertex in nesting order and maintains a stack of
//! conflict pairs of return-edge intervals. The graph is planar iff every
//! constraint can be satisfied by a left/right assignment. Only the decision
//! is produced; no embedding is built.
//!
//! Both passes are iterative so deep DFS trees do not touch the call stack.

use super::Verdict;
use crate::graph::Graph;

type EdgeId = usize;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct Interval {
    low: Option<EdgeId>,
    high: Option<EdgeId>,
}

impl Interval {
    fn single(e: EdgeId) -> Self {
        Interval {
            low: Some(e),
            high: Some(e),
        }
    }

    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct LrState {
    /// Neighbours of each vertex with the id of the connecting edge.
    adj: Vec<Vec<(usize, EdgeId)>>,
    /// Orientation chosen for each edge by the first pass.
    src: Vec<usize>,
    dst: Vec<usize>,
    oriented: Vec<bool>,
    height: Vec<Option<usize>>,
    parent_edge: Vec<Option<EdgeId>>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<usize>,
    /// Out-edges per vertex sorted by nesting depth.
    ordered: Vec<Vec<EdgeId>>,
    stack: Vec<ConflictPair>,
    /// Stack height when each edge was first visited in the testing pass.
    stack_bottom: Vec<usize>,
    lowpt_edge: Vec<EdgeId>,
    /// Links each return edge to the next lower one in its interval.
    link: Vec<Option<EdgeId>>,
}

/// Planarity of the whole graph.
pub fn is_planar(g: &Graph) -> Verdict {
    let n = g.n();
    let edges = g.edges();
    let m = edges.len();
    if n > 2 && m > 3 * n - 6 {
        return Verdict::no();
    }
    let mut adj = vec![Vec::new(); n];
    for (id, &(u, v)) in edges.iter().enumerate() {
        adj[u].push((v, id));
        adj[v].push((u, id));
    }
    let mut st = LrState {
        adj,
        src: vec![0; m],
        dst: vec![0; m],
        oriented: vec![false; m],
        height: vec![None; n],
        parent_edge: vec![None; n],
        lowpt: vec![0; m],
        lowpt2: vec![0; m],
        nesting_depth: vec![0; m],
        ordered: vec![Vec::new(); n],
        stack: Vec::new(),
        stack_bottom: vec![0; m],
        lowpt_edge: vec![0; m],
        link: vec![None; m],
    };
    let mut roots = Vec::new();
    for v in 0..n {
        if st.height[v].is_none() {
            st.height[v] = Some(0);
            roots.push(v);
            st.orient(v);
        }
    }
    for v in 0..n {
        let mut out: Vec<EdgeId> = st.adj[v]
            .iter()
            .map(|&(_, e)| e)
            .filter(|&e| st.src[e] == v)
            .collect();
        out.sort_by_key(|&e| st.nesting_depth[e]);
        st.ordered[v] = out;
    }
    Verdict::from_bool(roots.into_iter().all(|r| st.test(r)))
}

impl LrState {
    fn h(&self, v: usize) -> usize {
        self.height[v].expect("vertex visited")
    }

    fn orient(&mut self, root: usize) {
        // (vertex, next adjacency position, edge to finish after returning from a child)
        let mut stack: Vec<(usize, usize, Option<EdgeId>)> = vec![(root, 0, None)];
        while let Some((v, mut pos, pending)) = stack.pop() {
            if let Some(vw) = pending {
                self.finish_orient_edge(v, vw);
                pos += 1;
            }
            while pos < self.adj[v].len() {
                let (w, vw) = self.adj[v][pos];
                if self.oriented[vw] {
                    pos += 1;
                    continue;
                }
                self.oriented[vw] = true;
                self.src[vw] = v;
                self.dst[vw] = w;
                let hv = self.h(v);
                self.lowpt[vw] = hv;
                self.lowpt2[vw] = hv;
                match self.height[w] {
                    None => {
                        self.parent_edge[w] = Some(vw);
                        self.height[w] = Some(hv + 1);
                        stack.push((v, pos, Some(vw)));
                        stack.push((w, 0, None));
                        break;
                    }
                    Some(hw) => {
                        self.lowpt[vw] = hw;
                        self.finish_orient_edge(v, vw);
                        pos += 1;
                    }
                }
            }
        }
    }

    /// Nesting depth of `vw` and lowpoint propagation into the parent edge of `v`.
    fn finish_orient_edge(&mut self, v: usize, vw: EdgeId) {
        let hv = self.h(v);
        self.nesting_depth[vw] = 2 * self.lowpt[vw] + usize::from(self.lowpt2[vw] < hv);
        if let Some(e) = self.parent_edge[v] {
            if self.lowpt[vw] < self.lowpt[e] {
                self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                self.lowpt[e] = self.lowpt[vw];
            } else if self.lowpt[vw] > self.lowpt[e] {
                self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
            } else {
                self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
            }
        }
    }

    fn test(&mut self, root: usize) -> bool {
        // (vertex, next position in ordered out-edges, returning from a tree edge)
        let mut stack: Vec<(usize, usize, bool)> = vec![(root, 0, false)];
        while let Some((v, mut pos, returning)) = stack.pop() {
            let e = self.parent_edge[v];
            if returning {
                let ei = self.ordered[v][pos];
                if !self.integrate(v, ei, e) {
                    return false;
                }
                pos += 1;
            }
            let mut descended = false;
            while pos < self.ordered[v].len() {
                let ei = self.ordered[v][pos];
                let w = self.dst[ei];
                self.stack_bottom[ei] = self.stack.len();
                if self.parent_edge[w] == Some(ei) {
                    stack.push((v, pos, true));
                    stack.push((w, 0, false));
                    descended = true;
                    break;
                }
                self.lowpt_edge[ei] = ei;
                self.stack.push(ConflictPair {
                    left: Interval::default(),
                    right: Interval::single(ei),
                });
                if !self.integrate(v, ei, e) {
                    return false;
                }
                pos += 1;
            }
            if !descended {
                if let Some(e) = e {
                    self.remove_back_edges(e);
                }
            }
        }
        true
    }

    /// Merges the return edges of `ei` into the constraints of the parent edge `e`.
    fn integrate(&mut self, v: usize, ei: EdgeId, e: Option<EdgeId>) -> bool {
        if self.lowpt[ei] < self.h(v) {
            let e = e.expect("an edge with a return edge below v has a parent edge");
            if ei == self.ordered[v][0] {
                self.lowpt_edge[e] = self.lowpt_edge[ei];
            } else if !self.add_constraints(ei, e) {
                return false;
            }
        }
        true
    }

    fn conflicting(&self, iv: &Interval, b: EdgeId) -> bool {
        iv.high.is_some_and(|h| self.lowpt[h] > self.lowpt[b])
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        let low = |iv: &Interval| self.lowpt[iv.low.expect("nonempty interval has a low edge")];
        if p.left.is_empty() {
            low(&p.right)
        } else if p.right.is_empty() {
            low(&p.left)
        } else {
            low(&p.left).min(low(&p.right))
        }
    }

    fn add_constraints(&mut self, ei: EdgeId, e: EdgeId) -> bool {
        let mut p = ConflictPair::default();
        // Return edges of ei all go into p.right.
        loop {
            let mut q = self.stack.pop().expect("conflict stack underflow");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let qlow = q.right.low.expect("nonempty right interval");
            if self.lowpt[qlow] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.link[p.right.low.unwrap()] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.link[qlow] = Some(self.lowpt_edge[e]);
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        // Conflicting return edges of earlier siblings go into p.left.
        while let Some(top) = self.stack.last().copied() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(low) = p.right.low {
                self.link[low] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else if let Some(low) = p.left.low {
                self.link[low] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: EdgeId) {
        let u = self.src[e];
        let hu = self.h(u);
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != hu {
                break;
            }
            self.stack.pop();
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high {
                if self.dst[h] != u {
                    break;
                }
                p.left.high = self.link[h];
            }
            if p.left.high.is_none() && p.left.low.is_some() {
                p.left.low = None;
            }
            while let Some(h) = p.right.high {
                if self.dst[h] != u {
                    break;
                }
                p.right.high = self.link[h];
            }
            if p.right.high.is_none() && p.right.low.is_some() {
                p.right.low = None;
            }
            self.stack.push(p);
        }
    }
}
