//! Plumbing behind the `nzflow` binary: reading graphs, running the library
//! pipeline and shaping JSON reports. Kept out of `main.rs` so the tests can
//! drive it without spawning processes.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::Context;
use nzflow::factors::oddness_analysis_bounded;
use nzflow::generate::random::random_connected_subset;
use nzflow::graph_core::{parse_graph, Format};
use nzflow::proof_lab::{
    certify, lemma_violations, verify_counting_propositions, Bounds, Certificate, CertifyConfig, Status,
};
use nzflow::valuations::flow_partition;
use nzflow::{Error, Exec, Multigraph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNRESOLVED: i32 = 3;

/// Options shared by every subcommand.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    #[serde(skip)]
    pub format: Option<Format>,
    pub max_bf_dim: usize,
    pub max_balance_n: usize,
    pub max_oddness_n: usize,
    /// Worker threads; 1 runs everything sequentially, 0 lets rayon decide.
    pub jobs: usize,
    pub seed: u64,
    /// Random connected sets per minimum 2-factor fed to the counting checks.
    pub samples: usize,
    #[serde(skip)]
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        let c = CertifyConfig::default();
        RunConfig {
            format: None,
            max_bf_dim: c.max_bf_dim,
            max_balance_n: c.max_balance_n,
            max_oddness_n: c.bounds.max_oddness_n,
            jobs: 0,
            seed: 0,
            samples: 0,
            timings: false,
        }
    }
}

impl RunConfig {
    pub fn exec(&self) -> Exec {
        if self.jobs == 1 {
            Exec::Sequential
        } else {
            Exec::Parallel
        }
    }

    pub fn certify_config(&self) -> CertifyConfig {
        CertifyConfig {
            max_bf_dim: self.max_bf_dim,
            max_balance_n: self.max_balance_n,
            exec: self.exec(),
            timings: self.timings,
            bounds: Bounds {
                max_oddness_n: self.max_oddness_n,
                ..Bounds::default()
            },
        }
    }

    /// Runs `f` inside a pool of `jobs` threads when that is meaningful.
    pub fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        #[cfg(feature = "parallel")]
        if self.jobs > 1 {
            if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(self.jobs).build() {
                return pool.install(f);
            }
        }
        f()
    }
}

/// An error tagged with the exit code it should produce.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub error: anyhow::Error,
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        let error = e.into();
        let code = match error.downcast_ref::<Error>() {
            Some(Error::Internal(_)) => 1,
            _ => EXIT_INPUT,
        };
        Failure { code, error }
    }
}

pub fn load_graph(path: &Path, format: Option<Format>) -> anyhow::Result<Multigraph> {
    let bytes = fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
    let format = format.unwrap_or_else(|| Format::from_extension(path.extension().and_then(|e| e.to_str())));
    let g = parse_graph(&bytes, format).with_context(|| format!("cannot parse {}", path.display()))?;
    let name = path
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    Ok(g.with_name(name))
}

pub fn info_line(g: &Multigraph) -> String {
    format!(
        "n={} m={} {} {} girth={}",
        g.vertex_count(),
        g.edge_count(),
        if g.is_cubic() { "cubic" } else { "not cubic" },
        if g.is_bridgeless().is_ok() {
            "bridgeless"
        } else {
            "bridged"
        },
        g.girth()
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyChecks {
    pub seed: u64,
    pub sets_checked: usize,
    pub counting_violations: Vec<String>,
    pub lemma_violations: Vec<String>,
}

/// Samples random connected vertex sets for every minimum 2-factor and runs
/// the counting identities and the structural lemmas on them.
pub fn property_checks(g: &Multigraph, cfg: &RunConfig) -> anyhow::Result<PropertyChecks> {
    let analysis = oddness_analysis_bounded(g, cfg.max_oddness_n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = PropertyChecks {
        seed: cfg.seed,
        sets_checked: 0,
        counting_violations: Vec::new(),
        lemma_violations: Vec::new(),
    };
    for (i, f) in analysis.minimum_factors.iter().enumerate() {
        let p = flow_partition(g, f, None)?;
        out.lemma_violations
            .extend(lemma_violations(g, &p).into_iter().map(|s| format!("factor {i}: {s}")));
        for _ in 0..cfg.samples {
            let s = random_connected_subset(g, &mut rng);
            let r = verify_counting_propositions(g, &s, &p)?;
            out.sets_checked += 1;
            for name in r.violations() {
                out.counting_violations
                    .push(format!("factor {i}, set {:?}: {name}", s.iter().collect::<Vec<_>>()));
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct CertifyReport {
    pub seed: u64,
    #[serde(flatten)]
    pub certificate: Certificate,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub property_checks: Option<PropertyChecks>,
}

pub fn certify_report(g: &Multigraph, cfg: &RunConfig) -> anyhow::Result<CertifyReport> {
    let certificate = certify(g, &cfg.certify_config())?;
    let property_checks = if cfg.samples > 0 {
        Some(property_checks(g, cfg)?)
    } else {
        None
    };
    Ok(CertifyReport {
        seed: cfg.seed,
        certificate,
        property_checks,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanEntry {
    pub file: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<CertifyReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ScanCounts {
    pub files: usize,
    pub certified: usize,
    pub unresolved: usize,
    pub hypothesis_satisfied: usize,
    pub errors: usize,
    pub flagged: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub config: RunConfig,
    pub counts: ScanCounts,
    pub entries: Vec<ScanEntry>,
}

/// Regular, non-hidden files of `dir`, sorted by file name.
pub fn scan_inputs(dir: &Path) -> anyhow::Result<Vec<PathBuf>> {
    let mut files = Vec::new();
    for entry in fs::read_dir(dir).with_context(|| format!("cannot read directory {}", dir.display()))? {
        let entry = entry?;
        let hidden = entry.file_name().to_string_lossy().starts_with('.');
        if !hidden && entry.file_type()?.is_file() {
            files.push(entry.path());
        }
    }
    files.sort_by_key(|p| p.file_name().map(|s| s.to_owned()));
    Ok(files)
}

pub fn scan(dir: &Path, cfg: &RunConfig) -> anyhow::Result<ScanReport> {
    let files = scan_inputs(dir)?;
    let one = |path: &PathBuf| {
        let file = path.file_name().unwrap().to_string_lossy().into_owned();
        match load_graph(path, cfg.format).and_then(|g| certify_report(&g, cfg)) {
            Ok(r) => ScanEntry {
                file,
                report: Some(r),
                error: None,
            },
            Err(e) => ScanEntry {
                file,
                report: None,
                error: Some(format!("{e:#}")),
            },
        }
    };
    let entries = cfg.install(|| cfg.exec().map_slice(&files, one));
    let mut counts = ScanCounts {
        files: entries.len(),
        ..ScanCounts::default()
    };
    for e in &entries {
        match &e.report {
            None => counts.errors += 1,
            Some(r) => {
                let c = &r.certificate;
                match c.status {
                    Status::Certified => counts.certified += 1,
                    Status::Unresolved => counts.unresolved += 1,
                }
                if c.theorem2 == Some(true) {
                    counts.hypothesis_satisfied += 1;
                }
                let checks_clean = r
                    .property_checks
                    .as_ref()
                    .is_none_or(|p| p.counting_violations.is_empty() && p.lemma_violations.is_empty());
                if !c.flags.is_empty() || !checks_clean {
                    counts.flagged += 1;
                }
            }
        }
    }
    Ok(ScanReport {
        config: cfg.clone(),
        counts,
        entries,
    })
}

/// Pretty JSON with a trailing newline, to stdout or to `out`.
pub fn emit<T: Serialize>(value: &T, out: Option<&Path>) -> anyhow::Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use nzflow::generate::corpus;

    #[test]
    fn info_for_petersen_and_triangle() {
        assert_eq!(info_line(&corpus::petersen()), "n=10 m=15 cubic bridgeless girth=5");
        let tri = Multigraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(info_line(&tri).contains("not cubic"));
    }

    #[test]
    fn property_checks_are_seeded() {
        let cfg = RunConfig {
            samples: 25,
            seed: 11,
            ..RunConfig::default()
        };
        let g = corpus::petersen();
        let a = property_checks(&g, &cfg).unwrap();
        assert_eq!(a, property_checks(&g, &cfg).unwrap());
        assert_eq!(a.sets_checked, 25 * 6);
        assert!(a.counting_violations.is_empty() && a.lemma_violations.is_empty());
    }

    #[test]
    fn failure_codes() {
        let f: Failure = Error::NotCubic { vertex: 0, degree: 2 }.into();
        assert_eq!(f.code, EXIT_INPUT);
        let f: Failure = Error::Internal("x".into()).into();
        assert_eq!(f.code, 1);
    }
}
