//! Closed-form predictions of graph properties from ring structure, and the
//! report that compares them with what the recognizers see.
//!
//! The class predictions (planar, outerplanar, split, threshold, cograph,
//! cactus, unicyclic) are characterizations for non-local rings only; for a
//! local ring they are [`Prediction::NotApplicable`]. All factor data comes
//! from the primitive idempotents of the whole ring, never from the shape of
//! the spec the user typed.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{build_idempotent_graph, ComponentCensus, Graph, Shape};
use crate::recognize::{
    is_cactus, is_cograph, is_outerplanar, is_planar, is_split, is_threshold, is_unicyclic,
};
use crate::ring::{BuildError, FiniteRing, LocalFactorProfile, RingSpec};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TheoremError {
    #[error("ring {0} has nontrivial idempotents")]
    NontrivialIdempotents(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Prediction {
    True,
    False,
    NotApplicable,
}

impl Prediction {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Prediction::True
        } else {
            Prediction::False
        }
    }

    pub fn as_bool(self) -> Option<bool> {
        match self {
            Prediction::True => Some(true),
            Prediction::False => Some(false),
            Prediction::NotApplicable => None,
        }
    }

    /// `NotApplicable` for local rings, otherwise the given value.
    fn for_nonlocal(local: bool, value: impl FnOnce() -> bool) -> Self {
        if local {
            Prediction::NotApplicable
        } else {
            Prediction::from_bool(value())
        }
    }
}

impl fmt::Display for Prediction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Prediction::True => "true",
            Prediction::False => "false",
            Prediction::NotApplicable => "not-applicable",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremPrediction {
    pub connected: Prediction,
    pub path_graph: Prediction,
    pub planar: Prediction,
    pub outerplanar: Prediction,
    pub split: Prediction,
    pub threshold: Prediction,
    pub cograph: Prediction,
    pub cactus: Prediction,
    pub unicyclic: Prediction,
    pub note: String,
}

/// Structure shared by all predictions: `Id(R)` and the local factors.
struct Structure {
    idempotent_count: usize,
    generated: bool,
    profiles: Vec<LocalFactorProfile>,
}

impl Structure {
    fn of(ring: &FiniteRing) -> Self {
        let ids = ring.idempotent_indices();
        Structure {
            idempotent_count: ids.len(),
            generated: ring.closure_indices(&ids).len() == ring.size(),
            profiles: ring.primitive_idempotents(),
        }
    }

    fn local(&self) -> bool {
        self.idempotent_count == 2
    }

    fn planar(&self) -> Prediction {
        Prediction::for_nonlocal(self.local(), || match self.profiles.as_slice() {
            [a, b] => {
                let gen = |p: &LocalFactorProfile| p.generated_by_idempotents;
                let char2 = |p: &LocalFactorProfile| p.factor_char == 2;
                (gen(a) && gen(b))
                    || (gen(a) && char2(b))
                    || (gen(b) && char2(a))
                    || (char2(a) && char2(b))
            }
            _ => false,
        })
    }

    fn split(&self) -> Prediction {
        Prediction::for_nonlocal(self.local(), || self.profiles.iter().all(|p| p.is_z2))
    }

    fn cograph(&self) -> Prediction {
        Prediction::for_nonlocal(self.local(), || {
            let char2 = self.profiles.iter().filter(|p| p.factor_char == 2).count();
            let z3 = self.profiles.iter().filter(|p| p.is_z3).count();
            char2 == self.profiles.len() || (z3 == 1 && char2 + 1 == self.profiles.len())
        })
    }

    fn never(&self) -> Prediction {
        Prediction::for_nonlocal(self.local(), || false)
    }

    fn predictions(&self) -> TheoremPrediction {
        let path = self.generated && self.local();
        let note = if self.local() {
            "local ring: class characterizations apply to non-local rings only"
        } else {
            "non-local ring: all characterizations apply"
        };
        TheoremPrediction {
            connected: Prediction::from_bool(self.generated),
            path_graph: Prediction::from_bool(path),
            planar: self.planar(),
            outerplanar: self.never(),
            split: self.split(),
            threshold: self.split(),
            cograph: self.cograph(),
            cactus: self.never(),
            unicyclic: self.never(),
            note: note.to_string(),
        }
    }
}

/// The idempotent graph is connected iff `(R, +)` is generated by `Id(R)`.
pub fn predict_connected(ring: &FiniteRing) -> bool {
    ring.generated_by_idempotents()
}

/// A path graph iff connected and `Id(R) = {0, 1}`.
pub fn predict_path(ring: &FiniteRing) -> bool {
    ring.is_local() && predict_connected(ring)
}

/// Planar iff `R` has exactly two local factors and either both are
/// additively generated by their idempotents, one is generated and the other
/// has characteristic 2, or both have characteristic 2.
pub fn predict_planar(ring: &FiniteRing) -> Prediction {
    Structure::of(ring).planar()
}

pub fn predict_outerplanar(ring: &FiniteRing) -> Prediction {
    Structure::of(ring).never()
}

pub fn predict_cactus(ring: &FiniteRing) -> Prediction {
    Structure::of(ring).never()
}

pub fn predict_unicyclic(ring: &FiniteRing) -> Prediction {
    Structure::of(ring).never()
}

/// Split iff every local factor is `Z_2`.
pub fn predict_split(ring: &FiniteRing) -> Prediction {
    Structure::of(ring).split()
}

/// Same as [`predict_split`]: for non-local rings the two classes coincide.
pub fn predict_threshold(ring: &FiniteRing) -> Prediction {
    predict_split(ring)
}

/// Cograph iff every local factor has characteristic 2, or exactly one
/// factor is `Z_3` and all others have characteristic 2.
pub fn predict_cograph(ring: &FiniteRing) -> Prediction {
    Structure::of(ring).cograph()
}

pub fn predict_all(ring: &FiniteRing) -> TheoremPrediction {
    Structure::of(ring).predictions()
}

/// `deg(x) = |Id(R)| - 1` when `2x` is idempotent, `|Id(R)|` otherwise, for every `x`.
pub fn verify_degree_formula(ring: &FiniteRing, g: &Graph) -> bool {
    let ids = ring.idempotent_indices();
    let mut is_id = vec![false; ring.size()];
    ids.iter().for_each(|&e| is_id[e] = true);
    g.n() == ring.size()
        && (0..ring.size()).all(|x| {
            let expected = if is_id[ring.add_indices(x, x)] {
                ids.len() - 1
            } else {
                ids.len()
            };
            g.degree(x) == expected
        })
}

/// For rings without nontrivial idempotents: every component is a path or
/// an even cycle, all path components have one common size and all cycle
/// components have one common size.
pub fn verify_component_structure(ring: &FiniteRing, g: &Graph) -> Result<bool, TheoremError> {
    if !ring.is_local() {
        return Err(TheoremError::NontrivialIdempotents(ring.spec().to_string()));
    }
    Ok(component_structure_holds(&g.census()))
}

fn component_structure_holds(census: &ComponentCensus) -> bool {
    let sizes = |shape: Shape| {
        let mut s: Vec<usize> = census
            .components
            .iter()
            .filter(|c| c.shape == shape)
            .map(|c| c.size)
            .collect();
        s.dedup();
        s
    };
    census.all(&[Shape::Path, Shape::EvenCycle])
        && sizes(Shape::Path).len() <= 1
        && sizes(Shape::EvenCycle).len() <= 1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileRecord {
    pub idempotent: String,
    pub factor_size: u64,
    pub factor_char: u64,
    pub generated_by_idempotents: bool,
    pub is_z2: bool,
    pub is_z3: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphStats {
    pub n: usize,
    pub edges: usize,
    pub components: usize,
    pub census: ComponentCensus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecognizedClasses {
    pub connected: bool,
    pub path_graph: bool,
    pub planar: bool,
    pub outerplanar: bool,
    pub split: bool,
    pub threshold: bool,
    pub cograph: bool,
    pub cactus: bool,
    pub unicyclic: bool,
    pub bipartite: bool,
}

impl RecognizedClasses {
    pub fn of(g: &Graph) -> Self {
        let census = g.census();
        RecognizedClasses {
            connected: census.components.len() == 1,
            path_graph: census.components.len() == 1 && census.components[0].shape == Shape::Path,
            planar: is_planar(g).value,
            outerplanar: is_outerplanar(g).value,
            split: is_split(g).value,
            threshold: is_threshold(g).value,
            cograph: is_cograph(g).value,
            cactus: is_cactus(g).value,
            unicyclic: is_unicyclic(g).value,
            bipartite: g.is_bipartite(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub property: String,
    pub predicted: String,
    pub recognized: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub spec: String,
    pub size: usize,
    pub characteristic: u64,
    pub idempotent_count: usize,
    pub local: bool,
    pub profiles: Vec<ProfileRecord>,
    pub graph: GraphStats,
    pub recognized: RecognizedClasses,
    pub predicted: TheoremPrediction,
    pub degree_formula: bool,
    /// Only checked for rings without nontrivial idempotents.
    pub component_structure: Option<bool>,
    pub mismatches: Vec<Mismatch>,
}

impl ClassificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Number of individual comparisons behind `mismatches`.
    pub fn properties_checked(&self) -> usize {
        self.comparisons().len()
    }

    fn comparisons(&self) -> Vec<(&'static str, Prediction, bool)> {
        let p = &self.predicted;
        let r = &self.recognized;
        let mut out = vec![
            ("connected", p.connected, r.connected),
            ("path_graph", p.path_graph, r.path_graph),
            ("planar", p.planar, r.planar),
            ("outerplanar", p.outerplanar, r.outerplanar),
            ("split", p.split, r.split),
            ("threshold", p.threshold, r.threshold),
            ("cograph", p.cograph, r.cograph),
            ("cactus", p.cactus, r.cactus),
            ("unicyclic", p.unicyclic, r.unicyclic),
            ("degree_formula", Prediction::True, self.degree_formula),
        ];
        if let Some(ok) = self.component_structure {
            out.push(("component_structure", Prediction::True, ok));
        }
        out.retain(|(_, pred, _)| pred.as_bool().is_some());
        out
    }
}

/// Builds the graph, runs every recognizer and prediction, and lists the disagreements.
pub fn cross_validate(ring: &FiniteRing) -> ClassificationReport {
    let g = build_idempotent_graph(ring);
    let structure = Structure::of(ring);
    let census = g.census();
    let mut report = ClassificationReport {
        spec: ring.spec().to_string(),
        size: ring.size(),
        characteristic: ring.characteristic(),
        idempotent_count: structure.idempotent_count,
        local: structure.local(),
        profiles: structure
            .profiles
            .iter()
            .map(|p| ProfileRecord {
                idempotent: ring.format_element(&p.idempotent),
                factor_size: p.factor_size,
                factor_char: p.factor_char,
                generated_by_idempotents: p.generated_by_idempotents,
                is_z2: p.is_z2,
                is_z3: p.is_z3,
            })
            .collect(),
        graph: GraphStats {
            n: g.n(),
            edges: g.edge_count(),
            components: census.components.len(),
            census: census.clone(),
        },
        recognized: RecognizedClasses::of(&g),
        predicted: structure.predictions(),
        degree_formula: verify_degree_formula(ring, &g),
        component_structure: structure
            .local()
            .then(|| component_structure_holds(&census)),
        mismatches: Vec::new(),
    };
    report.mismatches = report
        .comparisons()
        .into_iter()
        .filter(|&(_, pred, seen)| pred.as_bool() != Some(seen))
        .map(|(property, pred, seen)| Mismatch {
            property: property.to_string(),
            predicted: pred.to_string(),
            recognized: seen,
        })
        .collect();
    report
}

/// Parses `text`, builds the ring under `bound` and cross-validates it.
pub fn classify(text: &str, bound: usize) -> Result<ClassificationReport, BuildError> {
    let spec = RingSpec::parse(text)?;
    let ring = FiniteRing::with_bound(spec, bound)?;
    Ok(cross_validate(&ring))
}
