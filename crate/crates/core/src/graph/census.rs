use serde::{Deserialize, Serialize};

use super::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Shape {
    /// Includes the single vertex and the single edge.
    Path,
    EvenCycle,
    OddCycle,
    Complete,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentRecord {
    pub size: usize,
    pub shape: Shape,
}

/// Shape of every connected component, ordered by smallest vertex.
///
/// Shapes are tested in the order path, cycle, complete, so `K_1` and `K_2`
/// count as paths and `K_3` as an odd cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentCensus {
    pub components: Vec<ComponentRecord>,
}

impl ComponentCensus {
    pub fn of(g: &Graph) -> Self {
        let components = g
            .components()
            .into_iter()
            .map(|comp| ComponentRecord {
                size: comp.len(),
                shape: classify(g, &comp),
            })
            .collect();
        ComponentCensus { components }
    }

    pub fn total_size(&self) -> usize {
        self.components.iter().map(|c| c.size).sum()
    }

    /// Sorted `(shape, size)` pairs, one per component.
    pub fn signature(&self) -> Vec<(Shape, usize)> {
        let mut sig: Vec<_> = self.components.iter().map(|c| (c.shape, c.size)).collect();
        sig.sort_unstable();
        sig
    }

    pub fn all(&self, shapes: &[Shape]) -> bool {
        self.components.iter().all(|c| shapes.contains(&c.shape))
    }
}

fn classify(g: &Graph, comp: &[usize]) -> Shape {
    let k = comp.len();
    let degrees: Vec<usize> = comp.iter().map(|&v| g.degree(v)).collect();
    let edges = degrees.iter().sum::<usize>() / 2;
    let max_deg = degrees.iter().copied().max().unwrap_or(0);
    if edges + 1 == k && max_deg <= 2 {
        Shape::Path
    } else if edges == k && degrees.iter().all(|&d| d == 2) {
        if k.is_multiple_of(2) {
            Shape::EvenCycle
        } else {
            Shape::OddCycle
        }
    } else if edges == k * (k - 1) / 2 {
        Shape::Complete
    } else {
        Shape::Other
    }
}
