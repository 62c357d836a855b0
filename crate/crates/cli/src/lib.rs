//! Command-line pipeline: load a target skeleton, synthesize the walk, and
//! write the word, trace and convergence report.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use boundwalk::cat0::{walk_from_word, Word};
use boundwalk::verify::{verify_phase, ConvergenceReport};
use boundwalk::walk::{synthesize, PhaseBlock};
use boundwalk::{LatticePoint, LatticeWalk, SpherePoint, TargetSet};
use serde::Deserialize;
use thiserror::Error;

/// Tolerance for unit-norm input vertices.
pub const VERTEX_NORM_TOLERANCE: f64 = 1e-9;

/// Default cap on the number of steps written to word or trace files.
pub const DEFAULT_OUTPUT_LIMIT: u128 = 50_000_000;

#[derive(Debug, Error)]
pub enum CliError {
    /// The target file is unreadable or describes an invalid skeleton.
    #[error("invalid target: {0}")]
    Target(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("i/o error on {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error(transparent)]
    Synthesis(#[from] boundwalk::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Target(_) => 2,
            _ => 1,
        }
    }
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> CliError + '_ {
    move |source| CliError::Io { path: path.to_path_buf(), source }
}

/// On-disk target description.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TargetFile {
    pub dimension: usize,
    pub vertices: Vec<Vec<f64>>,
    #[serde(default)]
    pub edges: Vec<[usize; 2]>,
    #[serde(default)]
    pub basepoint: usize,
}

impl TargetFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Target(e.to_string()))
    }

    pub fn into_target(self) -> Result<TargetSet, CliError> {
        let n = self.dimension;
        let mut vertices = Vec::with_capacity(self.vertices.len());
        for (i, v) in self.vertices.iter().enumerate() {
            if v.len() != n {
                return Err(CliError::Target(format!(
                    "vertex {i} has {} coordinates, dimension is {n}",
                    v.len()
                )));
            }
            if let Some(c) = v.iter().find(|c| !c.is_finite() || **c < 0.0) {
                return Err(CliError::Target(format!(
                    "vertex {i} has coordinate {c} outside the simplex"
                )));
            }
            let norm = v.iter().map(|c| c * c).sum::<f64>().sqrt();
            if (norm - 1.0).abs() > VERTEX_NORM_TOLERANCE {
                return Err(CliError::Target(format!("vertex {i} has norm {norm}, expected 1")));
            }
            let p = boundwalk::sphere::radial_project(v).map_err(|e| CliError::Target(e.to_string()))?;
            vertices.push(p);
        }
        let edges = self.edges.iter().map(|[a, b]| (*a, *b)).collect();
        TargetSet::new(n, vertices, edges, self.basepoint).map_err(|e| CliError::Target(e.to_string()))
    }
}

pub fn load_target(path: &Path) -> Result<TargetSet, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Target(format!("cannot read {}: {e}", path.display())))?;
    TargetFile::parse(&text)?.into_target()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stop {
    /// Run through the end of this many phases.
    Phases(usize),
    /// Emit exactly this many steps.
    Prefix(u128),
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub dimension: usize,
    pub target: PathBuf,
    pub stop: Stop,
    pub word: Option<PathBuf>,
    pub trace: Option<PathBuf>,
    pub report: Option<PathBuf>,
    pub verify: bool,
    /// Replacement tolerances keyed by phase.
    pub tolerance_overrides: BTreeMap<usize, f64>,
    pub output_limit: u128,
}

impl RunConfig {
    pub fn new(dimension: usize, target: PathBuf, stop: Stop) -> Self {
        RunConfig {
            dimension,
            target,
            stop,
            word: None,
            trace: None,
            report: None,
            verify: false,
            tolerance_overrides: BTreeMap::new(),
            output_limit: DEFAULT_OUTPUT_LIMIT,
        }
    }

    fn validate(&self) -> Result<(), CliError> {
        if self.dimension < 2 {
            return Err(CliError::Config(format!("dimension must be at least 2, got {}", self.dimension)));
        }
        if self.stop == Stop::Phases(0) {
            return Err(CliError::Config("at least one phase is required".into()));
        }
        if let Some((k, t)) = self.tolerance_overrides.iter().find(|(k, t)| **k == 0 || !(**t >= 0.0)) {
            return Err(CliError::Config(format!("bad tolerance override {k}={t}")));
        }
        Ok(())
    }
}

/// Parses a `phase=value` tolerance override.
pub fn parse_override(s: &str) -> Result<(usize, f64), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("expected PHASE=VALUE, got {s:?}"))?;
    let k = k.trim().parse::<usize>().map_err(|e| format!("bad phase {k:?}: {e}"))?;
    let v = v.trim().parse::<f64>().map_err(|e| format!("bad tolerance {v:?}: {e}"))?;
    Ok((k, v))
}

/// What a run produced.
#[derive(Debug, Clone)]
pub struct RunSummary {
    pub steps: u128,
    pub end: LatticePoint,
    /// Present when the run verified at least one phase.
    pub report: Option<ConvergenceReport>,
}

impl RunSummary {
    pub fn pass(&self) -> bool {
        self.report.as_ref().is_none_or(|r| r.pass())
    }
}

struct Outputs {
    word: Option<(PathBuf, BufWriter<File>)>,
    trace: Option<(PathBuf, BufWriter<File>)>,
    written: u128,
    limit: u128,
}

impl Outputs {
    fn open(config: &RunConfig) -> Result<Self, CliError> {
        let open = |p: &Option<PathBuf>| -> Result<_, CliError> {
            p.as_ref()
                .map(|p| File::create(p).map(|f| (p.clone(), BufWriter::new(f))).map_err(io_err(p)))
                .transpose()
        };
        Ok(Outputs { word: open(&config.word)?, trace: open(&config.trace)?, written: 0, limit: config.output_limit })
    }

    fn active(&self) -> bool {
        self.word.is_some() || self.trace.is_some()
    }

    fn trace_header(&mut self, dim: usize) -> Result<(), CliError> {
        if let Some((path, w)) = self.trace.as_mut() {
            let mut cols = vec!["step".to_string()];
            cols.extend((1..=dim).map(|i| format!("x{i}")));
            cols.extend((1..=dim).map(|i| format!("s{i}")));
            cols.push("dist_to_z".into());
            writeln!(w, "{}", cols.join(",")).map_err(io_err(path))?;
        }
        Ok(())
    }

    fn trace_row(&mut self, step: u128, pos: &LatticePoint, target: &TargetSet) -> Result<(), CliError> {
        if let Some((path, w)) = self.trace.as_mut() {
            let row = trace_row(step, pos, target)?;
            writeln!(w, "{row}").map_err(io_err(path))?;
        }
        Ok(())
    }

    /// Writes the first `take` steps of `walk`; `first_step` is the global
    /// index of its start position.
    fn block(&mut self, walk: &LatticeWalk, take: u128, first_step: u128, target: &TargetSet) -> Result<(), CliError> {
        if !self.active() || take == 0 {
            return Ok(());
        }
        self.written += take;
        if self.written > self.limit {
            return Err(CliError::Config(format!(
                "more than {} steps would be written; use --prefix-length or raise --output-limit",
                self.limit
            )));
        }
        let mut pos = walk.start().clone();
        let mut step = first_step;
        let mut left = take;
        let mut line = Vec::new();
        'runs: for run in walk.runs() {
            for _ in 0..run.count {
                if left == 0 {
                    break 'runs;
                }
                pos.advance(run.axis, 1)?;
                step += 1;
                left -= 1;
                line.push(run.axis as i32 + 1);
                self.trace_row(step, &pos, target)?;
            }
        }
        if let Some((path, w)) = self.word.as_mut() {
            writeln!(w, "{}", Word(line)).map_err(io_err(path))?;
        }
        Ok(())
    }

    fn finish(self) -> Result<(), CliError> {
        for (path, mut w) in self.word.into_iter().chain(self.trace) {
            w.flush().map_err(io_err(&path))?;
        }
        Ok(())
    }
}

/// One trace row: step, integer coordinates, sphere coordinates with 17
/// significant digits, and the distance to the target.
pub fn trace_row(step: u128, pos: &LatticePoint, target: &TargetSet) -> Result<String, CliError> {
    let mut row = step.to_string();
    for c in pos.coords() {
        row.push(',');
        row.push_str(&c.to_string());
    }
    if pos.coords().iter().all(|&c| c == 0) {
        for _ in 0..pos.dim() {
            row.push_str(",nan");
        }
        row.push_str(",nan");
        return Ok(row);
    }
    let s: SpherePoint = pos.project()?;
    for c in s.coords() {
        row.push_str(&format!(",{c:.16e}"));
    }
    row.push_str(&format!(",{:.16e}", target.distance(&s)));
    Ok(row)
}

/// Runs the pipeline described by `config`.
pub fn run(config: &RunConfig) -> Result<RunSummary, CliError> {
    config.validate()?;
    let target = load_target(&config.target)?;
    if target.dim() != config.dimension {
        return Err(CliError::Target(format!(
            "target has dimension {}, but dimension {} was requested",
            target.dim(),
            config.dimension
        )));
    }
    let mut out = Outputs::open(config)?;
    out.trace_header(target.dim())?;
    out.trace_row(0, &LatticePoint::origin(target.dim()), &target)?;

    let verify = config.verify || config.report.is_some();
    let mut report = ConvergenceReport::default();
    let mut synth = synthesize(&target)?;
    let mut steps: u128 = 0;
    let mut end = LatticePoint::origin(target.dim());
    loop {
        if let Stop::Prefix(n) = config.stop {
            if steps >= n {
                break;
            }
        }
        let block: PhaseBlock = synth.next_block()?;
        let len = block.walk.len();
        let take = match config.stop {
            Stop::Prefix(n) => len.min(n - steps),
            Stop::Phases(_) => len,
        };
        out.block(&block.walk, take, steps, &target)?;
        steps += take;
        end = if take == len { block.walk.end().clone() } else { advance_partial(&block.walk, take)? };
        if block.phase > 0 && take == len && verify {
            let over = config.tolerance_overrides.get(&block.phase).copied();
            report.phases.push(verify_phase(&block, &target, steps, over)?);
        }
        if let Stop::Phases(k) = config.stop {
            if block.phase >= k {
                break;
            }
        }
    }
    out.finish()?;

    let report = verify.then_some(report);
    if let (Some(path), Some(r)) = (&config.report, &report) {
        std::fs::write(path, r.to_string()).map_err(io_err(path))?;
    }
    Ok(RunSummary { steps, end, report })
}

fn advance_partial(walk: &LatticeWalk, take: u128) -> Result<LatticePoint, CliError> {
    let mut pos = walk.start().clone();
    let mut left = take;
    for run in walk.runs() {
        let c = run.count.min(left);
        pos.advance(run.axis, c)?;
        left -= c;
        if left == 0 {
            break;
        }
    }
    Ok(pos)
}

/// Reads a word file and replays it as a positive walk from the origin,
/// checking it against the half-plane walk of the same word.
pub fn replay_word_file(path: &Path, dim: usize) -> Result<Vec<LatticePoint>, CliError> {
    let text = std::fs::read_to_string(path).map_err(io_err(path))?;
    let mut letters = Vec::new();
    for line in text.lines() {
        let w: Word = line.parse()?;
        letters.extend(w.0);
    }
    let half = walk_from_word(&letters, dim)?;
    Ok(half.into_iter().map(|p| LatticePoint::new(p[1..].iter().map(|&c| c as i128).collect())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides() {
        assert_eq!(parse_override("3=0.25"), Ok((3, 0.25)));
        assert_eq!(parse_override(" 1 = 0 "), Ok((1, 0.0)));
        assert!(parse_override("3").is_err());
        assert!(parse_override("x=1").is_err());
    }

    #[test]
    fn target_files() {
        let t = TargetFile::parse("dimension = 2\nvertices = [[0.6, 0.8], [1.0, 0.0]]\nedges = [[1, 0]]\nbasepoint = 1\n")
            .unwrap()
            .into_target()
            .unwrap();
        assert_eq!(t.basepoint_index(), 1);
        assert_eq!(t.edges(), &[(1, 0)]);
        let bad = TargetFile::parse("dimension = 2\nvertices = [[1.0, 0.0]]\ncolor = 3\n");
        assert!(matches!(bad, Err(CliError::Target(_))));
    }

    #[test]
    fn trace_rows() {
        let t = TargetSet::point(SpherePoint::vertex(2, 0)).unwrap();
        let row = trace_row(4, &LatticePoint::new(vec![4, 0]), &t).unwrap();
        let cols: Vec<&str> = row.split(',').collect();
        assert_eq!(&cols[..3], &["4", "4", "0"]);
        assert_eq!(cols[3].parse::<f64>().unwrap(), 1.0);
        assert_eq!(cols[5].parse::<f64>().unwrap(), 0.0);
        assert!(trace_row(0, &LatticePoint::origin(2), &t).unwrap().ends_with("nan"));
    }
}
