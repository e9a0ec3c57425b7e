//! Cross-validation over every product of small local rings.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::ring::{BuildError, FiniteRing, RingSpec, DEFAULT_SIZE_BOUND};
use crate::theorems::{cross_validate, ClassificationReport, Mismatch, RecognizedClasses};

pub const DEFAULT_CATALOG: [&str; 13] = [
    "Z2",
    "Z3",
    "Z4",
    "Z5",
    "Z7",
    "Z8",
    "Z9",
    "GF(4)",
    "GF(8)",
    "GF(9)",
    "Z2[x]/(x^2)",
    "Z2[x]/(x^3)",
    "Z3[x]/(x^2)",
];

#[derive(Debug, thiserror::Error)]
pub enum SweepError {
    #[error("max ring size {size} exceeds the global bound {bound}")]
    SizeBound { size: usize, bound: usize },
    #[error("max factors must be at least 1")]
    NoFactors,
    #[error("catalog is empty")]
    EmptyCatalog,
    #[error("catalog entry {entry:?}: {source}")]
    BadEntry {
        entry: String,
        #[source]
        source: BuildError,
    },
    #[error("catalog entry {0:?} is not a local ring")]
    NotLocal(String),
    #[error("catalog line {line}: {message}")]
    CatalogFile { line: usize, message: String },
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub max_ring_size: usize,
    pub max_factors: usize,
    pub catalog: Vec<String>,
    pub random_seed: u64,
    /// Worker threads; 0 lets the pool pick.
    pub parallelism: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_ring_size: 256,
            max_factors: 3,
            catalog: DEFAULT_CATALOG.iter().map(|s| s.to_string()).collect(),
            random_seed: 0,
            parallelism: 0,
        }
    }
}

/// Reads a catalog: one spec per line, `#` starts a comment, blank lines skipped.
pub fn parse_catalog(text: &str) -> Result<Vec<String>, SweepError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        RingSpec::parse(body).map_err(|e| SweepError::CatalogFile {
            line: i + 1,
            message: e.to_string(),
        })?;
        out.push(body.to_string());
    }
    Ok(out)
}

struct CatalogRing {
    spec: RingSpec,
    size: usize,
}

impl SweepConfig {
    fn validated_catalog(&self) -> Result<Vec<CatalogRing>, SweepError> {
        if self.max_ring_size > DEFAULT_SIZE_BOUND {
            return Err(SweepError::SizeBound {
                size: self.max_ring_size,
                bound: DEFAULT_SIZE_BOUND,
            });
        }
        if self.max_factors == 0 {
            return Err(SweepError::NoFactors);
        }
        if self.catalog.is_empty() {
            return Err(SweepError::EmptyCatalog);
        }
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for entry in &self.catalog {
            let bad = |source| SweepError::BadEntry {
                entry: entry.clone(),
                source,
            };
            let spec = RingSpec::parse(entry).map_err(|e| bad(e.into()))?;
            let ring = FiniteRing::new(spec.clone()).map_err(|e| bad(e.into()))?;
            if !ring.is_local() {
                return Err(SweepError::NotLocal(entry.clone()));
            }
            // entries that print the same are the same ring
            if seen.insert(spec.to_string()) {
                out.push(CatalogRing {
                    size: ring.size(),
                    spec,
                });
            }
        }
        Ok(out)
    }

    /// Every ring the sweep visits: each catalog ring alone, then every
    /// multiset of 2..=max_factors catalog rings whose product fits the size bound.
    pub fn rings(&self) -> Result<Vec<RingSpec>, SweepError> {
        let catalog = self.validated_catalog()?;
        let mut out: Vec<RingSpec> = catalog
            .iter()
            .filter(|c| c.size <= self.max_ring_size)
            .map(|c| c.spec.clone())
            .collect();
        let mut picks = Vec::new();
        multisets(&catalog, self, 0, 1, &mut picks, &mut out);
        Ok(out)
    }
}

fn multisets(
    catalog: &[CatalogRing],
    config: &SweepConfig,
    start: usize,
    size: usize,
    picks: &mut Vec<usize>,
    out: &mut Vec<RingSpec>,
) {
    if picks.len() >= 2 {
        out.push(RingSpec {
            factors: picks
                .iter()
                .flat_map(|&i| catalog[i].spec.factors.iter().cloned())
                .collect(),
        });
    }
    if picks.len() == config.max_factors {
        return;
    }
    for i in start..catalog.len() {
        let next = size * catalog[i].size;
        if next > config.max_ring_size {
            continue;
        }
        picks.push(i);
        multisets(catalog, config, i, next, picks, out);
        picks.pop();
    }
}

/// All reports of one sweep, sorted by spec text.
#[derive(Debug, Clone)]
pub struct SweepOutcome {
    pub config: SweepConfig,
    pub reports: Vec<ClassificationReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingOutcome {
    pub spec: String,
    pub size: usize,
    pub local: bool,
    pub idempotents: usize,
    pub edges: usize,
    pub components: usize,
    pub recognized: RecognizedClasses,
    pub mismatches: Vec<Mismatch>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub max_ring_size: usize,
    pub max_factors: usize,
    pub catalog: Vec<String>,
    pub random_seed: u64,
    pub rings_checked: usize,
    pub product_rings: usize,
    pub local_rings: usize,
    pub properties_checked: usize,
    pub vertices_checked: usize,
    pub mismatch_count: usize,
    pub rings: Vec<RingOutcome>,
}

impl SweepSummary {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summary serializes")
    }
}

impl SweepOutcome {
    pub fn mismatch_count(&self) -> usize {
        self.reports.iter().map(|r| r.mismatches.len()).sum()
    }

    /// Rings built from two or more catalog entries.
    pub fn product_rings(&self) -> usize {
        self.reports
            .iter()
            .filter(|r| r.spec.contains(" * "))
            .count()
    }

    /// Parallelism is deliberately left out so that summaries compare equal across `--jobs`.
    pub fn summary(&self) -> SweepSummary {
        SweepSummary {
            max_ring_size: self.config.max_ring_size,
            max_factors: self.config.max_factors,
            catalog: self.config.catalog.clone(),
            random_seed: self.config.random_seed,
            rings_checked: self.reports.len(),
            product_rings: self.product_rings(),
            local_rings: self.reports.iter().filter(|r| r.local).count(),
            properties_checked: self.reports.iter().map(|r| r.properties_checked()).sum(),
            vertices_checked: self.reports.iter().map(|r| r.size).sum(),
            mismatch_count: self.mismatch_count(),
            rings: self
                .reports
                .iter()
                .map(|r| RingOutcome {
                    spec: r.spec.clone(),
                    size: r.size,
                    local: r.local,
                    idempotents: r.idempotent_count,
                    edges: r.graph.edges,
                    components: r.graph.components,
                    recognized: r.recognized.clone(),
                    mismatches: r.mismatches.clone(),
                })
                .collect(),
        }
    }
}

pub fn run_sweep(config: &SweepConfig) -> Result<SweepOutcome, SweepError> {
    let specs = config.rings()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.parallelism)
        .build()?;
    let mut reports: Vec<ClassificationReport> = pool.install(|| {
        specs
            .into_par_iter()
            .map(|spec| {
                let ring = FiniteRing::new(spec).expect("sweep rings fit the size bound");
                cross_validate(&ring)
            })
            .collect()
    });
    reports.sort_by(|a, b| a.spec.cmp(&b.spec));
    Ok(SweepOutcome {
        config: config.clone(),
        reports,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(catalog: &[&str], max_ring_size: usize, max_factors: usize) -> SweepConfig {
        SweepConfig {
            max_ring_size,
            max_factors,
            catalog: catalog.iter().map(|s| s.to_string()).collect(),
            random_seed: 0,
            parallelism: 1,
        }
    }

    fn names(c: &SweepConfig) -> Vec<String> {
        c.rings().unwrap().iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn powers_of_z2() {
        let c = config(&["Z2"], 4096, 4);
        assert_eq!(
            names(&c),
            ["Z2", "Z2 * Z2", "Z2 * Z2 * Z2", "Z2 * Z2 * Z2 * Z2"]
        );
    }

    #[test]
    fn size_bound_limits_products() {
        let c = SweepConfig {
            max_ring_size: 10,
            ..SweepConfig::default()
        };
        let products: Vec<String> = names(&c)
            .into_iter()
            .filter(|s| s.contains(" * "))
            .collect();
        assert_eq!(
            products,
            [
                "Z2 * Z2",
                "Z2 * Z2 * Z2",
                "Z2 * Z3",
                "Z2 * Z4",
                "Z2 * Z5",
                "Z2 * GF(4)",
                "Z2 * Z2[x]/(x^2)",
                "Z3 * Z3",
            ]
        );
    }

    #[test]
    fn multisets_not_tuples() {
        let c = config(&["Z2", "Z3"], 4096, 2);
        assert_eq!(names(&c), ["Z2", "Z3", "Z2 * Z2", "Z2 * Z3", "Z3 * Z3"]);
    }

    #[test]
    fn config_validation() {
        assert!(matches!(
            config(&["Z6"], 256, 3).rings(),
            Err(SweepError::NotLocal(_))
        ));
        assert!(matches!(
            config(&["Z1"], 256, 3).rings(),
            Err(SweepError::BadEntry { .. })
        ));
        assert!(matches!(
            config(&["Z2"], 5000, 3).rings(),
            Err(SweepError::SizeBound { .. })
        ));
        assert!(matches!(
            config(&[], 256, 3).rings(),
            Err(SweepError::EmptyCatalog)
        ));
        assert!(matches!(
            config(&["Z2"], 256, 0).rings(),
            Err(SweepError::NoFactors)
        ));
    }

    #[test]
    fn catalog_files() {
        let text = "# local rings\nZ4\n\n  GF(4)  # field\nZ3[x]/(x^2)\n";
        assert_eq!(parse_catalog(text).unwrap(), ["Z4", "GF(4)", "Z3[x]/(x^2)"]);
        assert!(matches!(
            parse_catalog("Z2\nZ0\n"),
            Err(SweepError::CatalogFile { line: 2, .. })
        ));
    }

    #[test]
    fn small_sweep_has_no_mismatches() {
        let outcome = run_sweep(&config(&["Z2", "Z3", "Z4"], 64, 3)).unwrap();
        assert_eq!(outcome.mismatch_count(), 0);
        let specs: Vec<&str> = outcome.reports.iter().map(|r| r.spec.as_str()).collect();
        let mut sorted = specs.clone();
        sorted.sort();
        assert_eq!(specs, sorted);
    }
}
