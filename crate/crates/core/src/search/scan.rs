//! Conjecture scans over graph6 streams: classify each connected graph as
//! block / chordal, audit the connectivity of its fair sets, and keep the
//! graphs that break one of the candidate characterizations.

use std::fmt;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fairness::{
    connectivity_audit, enumerate_fair_sets, DisconnectedFairSet, EnumerationOptions,
    DEFAULT_CEILING,
};
use crate::graph::{format_graph6, is_block_graph, is_chordal, parse_graph6, Graph};
use crate::parallel::with_workers;
use crate::search::trees::free_trees;
use crate::vertex_set::VertexSet;

/// Largest tree order [`tree_lemma_scan`] accepts.
pub const MAX_TREE_SCAN_ORDER: usize = 10;

const DEFAULT_BATCH: usize = 256;

/// Shard `index` of `count`: owns the stream lines whose 0-based index is
/// congruent to `index` mod `count`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Shard {
    pub index: usize,
    pub count: usize,
}

impl Shard {
    pub const WHOLE: Shard = Shard { index: 0, count: 1 };

    pub fn new(index: usize, count: usize) -> Result<Shard> {
        if count == 0 || index >= count {
            return Err(Error::InvalidParameter(format!(
                "bad shard {index}/{count}"
            )));
        }
        Ok(Shard { index, count })
    }

    pub fn owns(&self, line: u64) -> bool {
        line % self.count as u64 == self.index as u64
    }
}

impl Default for Shard {
    fn default() -> Self {
        Shard::WHOLE
    }
}

impl fmt::Display for Shard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.index, self.count)
    }
}

impl FromStr for Shard {
    type Err = Error;

    fn from_str(s: &str) -> Result<Shard> {
        let bad = || Error::InvalidParameter(format!("shard must look like k/K, got {s:?}"));
        let (k, total) = s.split_once('/').ok_or_else(bad)?;
        Shard::new(
            k.trim().parse().map_err(|_| bad())?,
            total.trim().parse().map_err(|_| bad())?,
        )
    }
}

/// Configuration of one scan run.
///
/// Only the mathematical fields and the shard are serialized; execution
/// knobs do not affect the result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanTask {
    pub include_singleton_s: bool,
    /// Skip non-chordal graphs (restricts the scan to the chordal cells).
    pub chordal_only: bool,
    /// Graphs with more vertices are skipped.
    pub ceiling: usize,
    pub shard: Shard,
    #[serde(skip)]
    pub workers: Option<usize>,
    /// JSON-lines checkpoint file; the scan resumes from its last record.
    #[serde(skip)]
    pub checkpoint: Option<PathBuf>,
    /// Graphs per checkpoint batch (0 means the default).
    #[serde(skip)]
    pub batch_size: usize,
    /// Stop after roughly this many graphs, leaving an incomplete report.
    #[serde(skip)]
    pub stop_after: Option<u64>,
}

impl Default for ScanTask {
    fn default() -> Self {
        ScanTask {
            include_singleton_s: false,
            chordal_only: false,
            ceiling: DEFAULT_CEILING,
            shard: Shard::WHOLE,
            workers: None,
            checkpoint: None,
            batch_size: 0,
            stop_after: None,
        }
    }
}

impl ScanTask {
    /// Same serialized configuration, ignoring the shard when `any_shard`.
    fn same_scan(&self, other: &ScanTask, any_shard: bool) -> bool {
        self.include_singleton_s == other.include_singleton_s
            && self.chordal_only == other.chordal_only
            && self.ceiling == other.ceiling
            && (any_shard || self.shard == other.shard)
    }

    fn enumeration_options(&self) -> EnumerationOptions {
        EnumerationOptions {
            include_singleton_s: self.include_singleton_s,
            ceiling: self.ceiling,
            ..EnumerationOptions::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CellRow {
    pub n: usize,
    pub block: bool,
    pub chordal: bool,
    pub all_fair_sets_connected: bool,
    pub count: u64,
}

/// Block-graph versus all-fair-sets-connected totals.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub block_connected: u64,
    pub block_disconnected: u64,
    pub nonblock_connected: u64,
    pub nonblock_disconnected: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Survivor {
    /// 0-based line index in the input stream.
    pub line: u64,
    pub graph6: String,
    pub n: usize,
    pub fair_set_count: usize,
    /// A disconnected fair set with its witness, when there is one.
    pub offending: Option<DisconnectedFairSet>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CardinalityViolation {
    pub line: u64,
    pub graph6: String,
    pub set: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedLine {
    pub line: u64,
    pub reason: String,
}

/// Result of a scan (or of a shard of one).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub task: ScanTask,
    pub complete: bool,
    /// Index of the first stream line not yet consumed.
    pub next_line: u64,
    pub graphs_scanned: u64,
    pub filtered_non_chordal: u64,
    pub cells: Vec<CellRow>,
    pub summary: Summary,
    /// Non-block graphs whose fair sets are all connected.
    pub survivors_nonblock_connected: Vec<Survivor>,
    /// Block graphs with a disconnected fair set.
    pub survivors_block_disconnected: Vec<Survivor>,
    /// Chordal non-block graphs whose fair sets are all connected.
    pub survivors_chordal_nonblock_connected: Vec<Survivor>,
    /// Fair sets of size `n - 1`.
    pub cardinality_violations: Vec<CardinalityViolation>,
    pub skipped: Vec<SkippedLine>,
}

impl ScanReport {
    fn new(task: &ScanTask) -> ScanReport {
        ScanReport {
            task: task.clone(),
            complete: false,
            next_line: 0,
            graphs_scanned: 0,
            filtered_non_chordal: 0,
            cells: Vec::new(),
            summary: Summary::default(),
            survivors_nonblock_connected: Vec::new(),
            survivors_block_disconnected: Vec::new(),
            survivors_chordal_nonblock_connected: Vec::new(),
            cardinality_violations: Vec::new(),
            skipped: Vec::new(),
        }
    }

    fn add_cell(&mut self, row: CellRow) {
        let key = |r: &CellRow| (r.n, r.block, r.chordal, r.all_fair_sets_connected);
        match self.cells.binary_search_by(|r| key(r).cmp(&key(&row))) {
            Ok(i) => self.cells[i].count += row.count,
            Err(i) => self.cells.insert(i, row),
        }
    }

    pub fn count(&self, n: usize, block: bool, chordal: bool, all_connected: bool) -> u64 {
        self.cells
            .iter()
            .find(|r| {
                (r.n, r.block, r.chordal, r.all_fair_sets_connected)
                    == (n, block, chordal, all_connected)
            })
            .map_or(0, |r| r.count)
    }

    /// Connected graphs scanned with `n` vertices.
    pub fn graphs_of_order(&self, n: usize) -> u64 {
        self.cells
            .iter()
            .filter(|r| r.n == n)
            .map(|r| r.count)
            .sum()
    }

    /// Block graph iff all fair sets connected held on every graph scanned.
    pub fn block_characterization_holds(&self) -> bool {
        self.survivors_nonblock_connected.is_empty() && self.survivors_block_disconnected.is_empty()
    }

    fn fold(&mut self, outcome: LineOutcome) {
        match outcome {
            LineOutcome::Blank => {}
            LineOutcome::Skipped(s) => self.skipped.push(s),
            LineOutcome::Filtered => self.filtered_non_chordal += 1,
            LineOutcome::Graph(r) => {
                self.graphs_scanned += 1;
                self.add_cell(CellRow {
                    n: r.n,
                    block: r.block,
                    chordal: r.chordal,
                    all_fair_sets_connected: r.offending.is_none(),
                    count: 1,
                });
                for set in r.cardinality_violations {
                    self.cardinality_violations.push(CardinalityViolation {
                        line: r.line,
                        graph6: r.graph6.clone(),
                        set,
                    });
                }
                let survivor = Survivor {
                    line: r.line,
                    graph6: r.graph6,
                    n: r.n,
                    fair_set_count: r.fair_set_count,
                    offending: r.offending,
                };
                let connected = survivor.offending.is_none();
                if r.block && !connected {
                    self.survivors_block_disconnected.push(survivor);
                } else if !r.block && connected {
                    if r.chordal {
                        self.survivors_chordal_nonblock_connected
                            .push(survivor.clone());
                    }
                    self.survivors_nonblock_connected.push(survivor);
                }
            }
        }
    }

    fn finalize(&mut self) {
        let mut s = Summary::default();
        for r in &self.cells {
            match (r.block, r.all_fair_sets_connected) {
                (true, true) => s.block_connected += r.count,
                (true, false) => s.block_disconnected += r.count,
                (false, true) => s.nonblock_connected += r.count,
                (false, false) => s.nonblock_disconnected += r.count,
            }
        }
        self.summary = s;
        self.survivors_nonblock_connected.sort_by_key(|s| s.line);
        self.survivors_block_disconnected.sort_by_key(|s| s.line);
        self.survivors_chordal_nonblock_connected
            .sort_by_key(|s| s.line);
        self.cardinality_violations.sort_by_key(|c| (c.line, c.set));
        self.skipped.sort_by_key(|s| s.line);
    }
}

struct GraphRecord {
    line: u64,
    graph6: String,
    n: usize,
    block: bool,
    chordal: bool,
    fair_set_count: usize,
    offending: Option<DisconnectedFairSet>,
    cardinality_violations: Vec<VertexSet>,
}

enum LineOutcome {
    Blank,
    Skipped(SkippedLine),
    Filtered,
    Graph(GraphRecord),
}

fn analyze(task: &ScanTask, line: u64, text: &str) -> LineOutcome {
    let skip = |reason: String| LineOutcome::Skipped(SkippedLine { line, reason });
    if text.trim().is_empty() {
        return LineOutcome::Blank;
    }
    let g = match parse_graph6(text) {
        Ok(g) => g,
        Err(e) => return skip(e.to_string()),
    };
    if let Some((u, v)) = g.disconnected_pair() {
        return skip(format!("disconnected: no path from {u} to {v}"));
    }
    if g.n() > task.ceiling {
        return skip(format!(
            "{} vertices exceeds the ceiling of {}",
            g.n(),
            task.ceiling
        ));
    }
    let chordal = is_chordal(&g);
    if task.chordal_only && !chordal {
        return LineOutcome::Filtered;
    }
    let block = match is_block_graph(&g) {
        Ok(b) => b,
        Err(e) => return skip(e.to_string()),
    };
    match analyze_graph(task, &g) {
        Ok((fair_set_count, offending, cardinality_violations)) => {
            LineOutcome::Graph(GraphRecord {
                line,
                graph6: format_graph6(&g),
                n: g.n(),
                block,
                chordal,
                fair_set_count,
                offending,
                cardinality_violations,
            })
        }
        Err(e) => skip(e.to_string()),
    }
}

fn analyze_graph(
    task: &ScanTask,
    g: &Graph,
) -> Result<(usize, Option<DisconnectedFairSet>, Vec<VertexSet>)> {
    let inv = enumerate_fair_sets(g, &task.enumeration_options())?;
    let audit = connectivity_audit(g, &inv)?;
    Ok((
        inv.len(),
        audit.disconnected.into_iter().next(),
        inv.cardinality_violations(),
    ))
}

fn load_checkpoint(path: &Path, task: &ScanTask) -> Result<Option<ScanReport>> {
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let mut last = None;
    for line in BufReader::new(file).lines() {
        let line = line?;
        if !line.trim().is_empty() {
            last = Some(line);
        }
    }
    let Some(last) = last else { return Ok(None) };
    let report: ScanReport = serde_json::from_str(&last)
        .map_err(|e| Error::Checkpoint(format!("unreadable record: {e}")))?;
    if !report.task.same_scan(task, false) {
        return Err(Error::Checkpoint(
            "checkpoint was written by a different scan configuration".into(),
        ));
    }
    Ok(Some(report))
}

fn append_checkpoint(path: &Path, report: &ScanReport) -> Result<()> {
    let mut file = OpenOptions::new().create(true).append(true).open(path)?;
    let line = serde_json::to_string(report).map_err(|e| Error::Checkpoint(e.to_string()))?;
    writeln!(file, "{line}")?;
    file.sync_data()?;
    Ok(())
}

/// Scans a graph6 stream, one graph per line.
///
/// Lines are processed in parallel batches and folded in stream order, so the
/// report does not depend on the worker count. With a checkpoint path the
/// report is appended after every batch and a rerun resumes from it.
pub fn scan_stream(task: &ScanTask, text: &str) -> Result<ScanReport> {
    let mut report = match &task.checkpoint {
        Some(path) => load_checkpoint(path, task)?,
        None => None,
    }
    .unwrap_or_else(|| ScanReport::new(task));
    if report.complete {
        return Ok(report);
    }
    let batch_size = if task.batch_size == 0 {
        DEFAULT_BATCH
    } else {
        task.batch_size
    };
    let mut lines = text
        .lines()
        .enumerate()
        .skip(report.next_line as usize)
        .peekable();
    let mut processed = 0u64;
    loop {
        let mut batch: Vec<(u64, &str)> = Vec::with_capacity(batch_size);
        while batch.len() < batch_size {
            let Some((i, l)) = lines.next() else { break };
            report.next_line = i as u64 + 1;
            if task.shard.owns(i as u64) {
                batch.push((i as u64, l));
            }
        }
        let outcomes: Vec<LineOutcome> = with_workers(task.workers, || {
            batch
                .par_iter()
                .map(|&(i, l)| analyze(task, i, l))
                .collect()
        });
        processed += outcomes.len() as u64;
        for o in outcomes {
            report.fold(o);
        }
        let done = lines.peek().is_none();
        report.complete = done;
        report.finalize();
        if let Some(path) = &task.checkpoint {
            append_checkpoint(path, &report)?;
        }
        if done || task.stop_after.is_some_and(|cap| processed >= cap) {
            return Ok(report);
        }
    }
}

/// Combines the complete reports of shards `0/K .. K-1/K` into the report an
/// unsharded run would produce.
pub fn merge_reports(parts: &[ScanReport]) -> Result<ScanReport> {
    let first = parts
        .first()
        .ok_or_else(|| Error::InvalidParameter("nothing to merge".into()))?;
    let count = first.task.shard.count;
    let mut seen = vec![false; count];
    let task = ScanTask {
        shard: Shard::WHOLE,
        workers: None,
        checkpoint: None,
        batch_size: 0,
        stop_after: None,
        ..first.task.clone()
    };
    let mut out = ScanReport::new(&task);
    out.complete = true;
    for p in parts {
        if !p.task.same_scan(&task, true) || p.task.shard.count != count {
            return Err(Error::InvalidParameter(
                "shards come from different scans".into(),
            ));
        }
        if !p.complete {
            return Err(Error::InvalidParameter(format!(
                "shard {} is incomplete",
                p.task.shard
            )));
        }
        if std::mem::replace(&mut seen[p.task.shard.index], true) {
            return Err(Error::InvalidParameter(format!(
                "shard {} given twice",
                p.task.shard
            )));
        }
        out.next_line = out.next_line.max(p.next_line);
        out.graphs_scanned += p.graphs_scanned;
        out.filtered_non_chordal += p.filtered_non_chordal;
        for &row in &p.cells {
            out.add_cell(row);
        }
        out.survivors_nonblock_connected
            .extend(p.survivors_nonblock_connected.iter().cloned());
        out.survivors_block_disconnected
            .extend(p.survivors_block_disconnected.iter().cloned());
        out.survivors_chordal_nonblock_connected
            .extend(p.survivors_chordal_nonblock_connected.iter().cloned());
        out.cardinality_violations
            .extend(p.cardinality_violations.iter().cloned());
        out.skipped.extend(p.skipped.iter().cloned());
    }
    if let Some(missing) = seen.iter().position(|&s| !s) {
        return Err(Error::InvalidParameter(format!(
            "shard {missing}/{count} missing"
        )));
    }
    out.finalize();
    Ok(out)
}

/// Recomputes a survivor from its graph6 string and reports whether the
/// stored fair-set count and offending set are reproduced.
pub fn reverify_survivor(s: &Survivor, include_singleton_s: bool) -> Result<bool> {
    let g = parse_graph6(&s.graph6)?;
    let task = ScanTask {
        include_singleton_s,
        ceiling: g.n(),
        ..ScanTask::default()
    };
    let (count, offending, _) = analyze_graph(&task, &g)?;
    Ok(g.n() == s.n && count == s.fair_set_count && offending == s.offending)
}

/// graph6 stream of the given graphs, one per line.
pub fn graph6_lines<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> String {
    graphs
        .into_iter()
        .map(|g| format_graph6(g) + "\n")
        .collect()
}

/// Scans every free tree with `1..=max_n` vertices. Trees are block graphs,
/// so the scan confirms the tree case when `survivors_block_disconnected`
/// comes back empty.
pub fn tree_lemma_scan(max_n: usize, task: &ScanTask) -> Result<ScanReport> {
    if max_n == 0 || max_n > MAX_TREE_SCAN_ORDER {
        return Err(Error::InvalidParameter(format!(
            "tree scan order must be in 1..={MAX_TREE_SCAN_ORDER}, got {max_n}"
        )));
    }
    let mut text = String::new();
    for n in 1..=max_n {
        text += &graph6_lines(&free_trees(n)?);
    }
    scan_stream(task, &text)
}

/// Chordal-only scan. On chordal graphs the block characterization
/// reduces to "non-block implies some disconnected fair set", so any
/// chordal non-block survivor or block survivor is a counterexample.
pub fn chordal_equivalence_scan(task: &ScanTask, text: &str) -> Result<ScanReport> {
    let task = ScanTask {
        chordal_only: true,
        ..task.clone()
    };
    scan_stream(&task, text)
}
