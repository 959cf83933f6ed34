//! Verification campaigns: each one checks a family of instances against the
//! closed form, the exact solver or the constructive algorithm, and collects
//! counterexamples and extremal witnesses into a [`VerificationReport`].
//!
//! Campaigns are deterministic in their parameters. Random instances come
//! from a ChaCha stream keyed by the seed and the grid cell, so cells can be
//! evaluated in any order (and in parallel) without changing the outcome.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canonical::{extremal_partition, generate_canonical};
use crate::coloring::{check_partition, choose2, merge_colors, Color, Edge, EdgeColoring, RawColoring};
use crate::constructive::partition_complete;
use crate::error::{Error, Result};
use crate::formula::partition_number;
use crate::io::{parse_coloring, write_coloring};
use crate::solver::{solve, solve_with, SolveOptions};

pub const THEOREM_MAX_N: usize = 10;
pub const CUTEDGE_MAX_N: usize = 7;
pub const CONSTRUCTIVE_MAX_N: usize = 12;

/// One grid point of a campaign.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellSummary {
    pub n: usize,
    pub r: usize,
    pub instances: u64,
    pub failures: u64,
    pub max_observed: Option<usize>,
    pub formula: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub message: String,
    /// CLI subcommand that reproduces the failure on `instance`.
    pub command: String,
    /// Coloring file text.
    pub instance: String,
}

/// An instance attaining the bound being checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub label: String,
    pub value: usize,
    /// Coloring file text.
    pub instance: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub campaign: String,
    pub parameters: BTreeMap<String, String>,
    pub instances: u64,
    pub failures: Vec<Failure>,
    pub witnesses: Vec<Witness>,
    pub cells: Vec<CellSummary>,
    pub wall_clock_ms: u64,
    /// Slowest single instance, where the campaign times instances.
    pub max_instance_ms: Option<f64>,
}

/// Deterministic per-cell summary: everything except timings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportSummary {
    pub campaign: String,
    pub parameters: BTreeMap<String, String>,
    pub passed: bool,
    pub cells: Vec<CellSummary>,
}

impl VerificationReport {
    fn new(campaign: &str, parameters: &[(&str, String)]) -> Self {
        VerificationReport {
            campaign: campaign.to_string(),
            parameters: parameters
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
            instances: 0,
            failures: Vec::new(),
            witnesses: Vec::new(),
            cells: Vec::new(),
            wall_clock_ms: 0,
            max_instance_ms: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn cell(&self, n: usize, r: usize) -> Option<&CellSummary> {
        self.cells.iter().find(|c| c.n == n && c.r == r)
    }

    fn absorb(&mut self, cell: CellOutcome) {
        self.instances += cell.summary.instances;
        self.failures.extend(cell.failures);
        self.witnesses.extend(cell.witnesses);
        self.cells.push(cell.summary);
    }

    /// Every witness parses back into a valid coloring.
    pub fn witnesses_revalidate(&self) -> bool {
        self.witnesses.iter().all(|w| parse_coloring(&w.instance).is_ok())
    }

    pub fn summary(&self) -> ReportSummary {
        ReportSummary {
            campaign: self.campaign.clone(),
            parameters: self.parameters.clone(),
            passed: self.passed(),
            cells: self.cells.clone(),
        }
    }

    pub fn summary_json(&self) -> String {
        serde_json::to_string_pretty(&self.summary()).expect("summary serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })
    }

    /// Line-oriented rendering.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "campaign {}", self.campaign).unwrap();
        for (k, v) in &self.parameters {
            writeln!(out, "param {k}={v}").unwrap();
        }
        for c in &self.cells {
            writeln!(
                out,
                "cell n={} r={} instances={} failures={} max={} formula={}",
                c.n,
                c.r,
                c.instances,
                c.failures,
                opt(c.max_observed),
                opt(c.formula)
            )
            .unwrap();
        }
        for w in &self.witnesses {
            writeln!(out, "witness {} value={}", w.label, w.value).unwrap();
            for line in w.instance.lines() {
                writeln!(out, "  | {line}").unwrap();
            }
        }
        for f in &self.failures {
            writeln!(out, "failure {}", f.message).unwrap();
            writeln!(
                out,
                "  reproduce: save the lines below as case.txt and run `heterotree {} case.txt`",
                f.command
            )
            .unwrap();
            for line in f.instance.lines() {
                writeln!(out, "  | {line}").unwrap();
            }
        }
        writeln!(out, "instances {}", self.instances).unwrap();
        if let Some(ms) = self.max_instance_ms {
            writeln!(out, "max_instance_ms {ms:.3}").unwrap();
        }
        writeln!(out, "wall_clock_ms {}", self.wall_clock_ms).unwrap();
        writeln!(out, "result {}", if self.passed() { "PASS" } else { "FAIL" }).unwrap();
        out
    }
}

fn opt(x: Option<usize>) -> String {
    x.map_or_else(|| "-".to_string(), |v| v.to_string())
}

struct CellOutcome {
    summary: CellSummary,
    failures: Vec<Failure>,
    witnesses: Vec<Witness>,
}

impl CellOutcome {
    fn new(n: usize, r: usize, formula: Option<usize>) -> Self {
        CellOutcome {
            summary: CellSummary {
                n,
                r,
                instances: 0,
                failures: 0,
                max_observed: None,
                formula,
            },
            failures: Vec::new(),
            witnesses: Vec::new(),
        }
    }

    fn observe(&mut self, value: usize) {
        self.summary.instances += 1;
        self.summary.max_observed = Some(self.summary.max_observed.map_or(value, |m| m.max(value)));
    }

    fn fail(&mut self, message: String, command: &str, c: &EdgeColoring) {
        self.summary.failures += 1;
        self.failures.push(Failure {
            message,
            command: command.to_string(),
            instance: write_coloring(c),
        });
    }
}

/// RNG for one cell of a campaign.
pub fn cell_rng(seed: u64, n: usize, r: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((n as u64) << 32) | r as u64);
    rng
}

/// Uniformly random colors on `K_n`, redrawn until every color occurs; after
/// 100 rejections the last draw is repaired by moving edges from repeated
/// colors onto the missing ones.
pub fn random_surjective_coloring<R: Rng>(n: usize, r: usize, rng: &mut R) -> Result<EdgeColoring> {
    let m = choose2(n);
    if r == 0 || r > m {
        return Err(Error::InvalidArgument(format!(
            "no surjective {r}-coloring of K_{n}"
        )));
    }
    let mut colors: Vec<Color> = Vec::with_capacity(m);
    for _ in 0..100 {
        colors.clear();
        colors.extend((0..m).map(|_| rng.gen_range(1..=r as Color)));
        if is_surjective(&colors, r) {
            return coloring_from_list(n, r, &colors);
        }
    }
    let mut count = vec![0usize; r + 1];
    for &c in &colors {
        count[c as usize] += 1;
    }
    let mut order: Vec<usize> = (0..m).collect();
    order.shuffle(rng);
    let mut missing: Vec<Color> = (1..=r as Color).filter(|&c| count[c as usize] == 0).collect();
    for i in order {
        let Some(&want) = missing.last() else { break };
        let have = colors[i] as usize;
        if count[have] > 1 {
            count[have] -= 1;
            colors[i] = want;
            count[want as usize] += 1;
            missing.pop();
        }
    }
    coloring_from_list(n, r, &colors)
}

fn is_surjective(colors: &[Color], r: usize) -> bool {
    let mut seen = vec![false; r + 1];
    for &c in colors {
        seen[c as usize] = true;
    }
    seen[1..].iter().all(|&s| s)
}

/// `K_n` colored by a list in lexicographic edge order.
pub fn coloring_from_list(n: usize, r: usize, colors: &[Color]) -> Result<EdgeColoring> {
    let mut it = colors.iter();
    EdgeColoring::complete(n, r as Color, |_| *it.next().expect("one color per edge"))
}

/// Calls `f` on every surjective `r`-coloring of `K_n` (all `r^C(n,2)` maps,
/// filtered).
pub fn for_each_surjective_coloring(n: usize, r: usize, mut f: impl FnMut(&EdgeColoring)) {
    let m = choose2(n);
    if r == 0 || r > m {
        return;
    }
    let mut digits = vec![1 as Color; m];
    loop {
        if is_surjective(&digits, r) {
            f(&coloring_from_list(n, r, &digits).expect("surjective by construction"));
        }
        let mut i = m;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if (digits[i] as usize) < r {
                digits[i] += 1;
                break;
            }
            digits[i] = 1;
        }
    }
}

/// Calls `f` on one coloring of `K_n` per class under color permutation,
/// for every color count: restricted growth strings over the edge list.
pub fn for_each_coloring_up_to_permutation(n: usize, mut f: impl FnMut(&EdgeColoring)) {
    let m = choose2(n);
    if m == 0 {
        f(&EdgeColoring::monochromatic(n).expect("single vertex"));
        return;
    }
    let mut labels = vec![0usize; m];
    loop {
        let r = labels.iter().max().unwrap() + 1;
        let colors: Vec<Color> = labels.iter().map(|&l| l as Color + 1).collect();
        f(&coloring_from_list(n, r, &colors).expect("growth strings are surjective"));
        if !crate::solver::next_growth_string(&mut labels) {
            return;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem1Config {
    pub max_n: usize,
    pub min_n: usize,
    pub samples_per_cell: usize,
    pub seed: u64,
    /// Colorings of `K_n` for `n` up to this are enumerated exhaustively.
    pub exhaustive_max_n: usize,
    /// When set, only these color counts (where valid) are sampled randomly;
    /// canonical and exhaustive checks still cover every `r`.
    pub sampled_r: Option<Vec<usize>>,
}

impl Theorem1Config {
    pub fn new(max_n: usize, samples_per_cell: usize, seed: u64) -> Self {
        Theorem1Config {
            max_n,
            min_n: 1,
            samples_per_cell,
            seed,
            exhaustive_max_n: 4,
            sampled_r: None,
        }
    }
}

/// Closed form against the exact solver: equality on canonical colorings
/// and on exhaustive maxima, never exceeded on random colorings.
pub fn campaign_theorem1(cfg: &Theorem1Config) -> Result<VerificationReport> {
    if cfg.max_n > THEOREM_MAX_N {
        return Err(Error::GuardExceeded {
            what: "theorem campaign (max n)",
            limit: THEOREM_MAX_N,
            actual: cfg.max_n,
        });
    }
    let start = Instant::now();
    let mut report = VerificationReport::new(
        "theorem1",
        &[
            ("max_n", cfg.max_n.to_string()),
            ("min_n", cfg.min_n.to_string()),
            ("samples_per_cell", cfg.samples_per_cell.to_string()),
            ("seed", cfg.seed.to_string()),
            ("exhaustive_max_n", cfg.exhaustive_max_n.to_string()),
            (
                "sampled_r",
                cfg.sampled_r
                    .as_ref()
                    .map_or_else(|| "all".to_string(), |v| format!("{v:?}")),
            ),
        ],
    );
    let grid: Vec<(usize, usize)> = (cfg.min_n.max(1)..=cfg.max_n)
        .flat_map(|n| {
            let lo = if n == 1 { 0 } else { 1 };
            (lo..=choose2(n)).map(move |r| (n, r))
        })
        .collect();
    let cells: Vec<Result<CellOutcome>> = grid
        .par_iter()
        .map(|&(n, r)| theorem1_cell(cfg, n, r))
        .collect();
    for cell in cells {
        report.absorb(cell?);
    }
    report.wall_clock_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

fn theorem1_cell(cfg: &Theorem1Config, n: usize, r: usize) -> Result<CellOutcome> {
    let formula = partition_number(n, r)?;
    let mut cell = CellOutcome::new(n, r, Some(formula));
    let check_upper = |cell: &mut CellOutcome, c: &EdgeColoring| -> Result<usize> {
        let res = solve(c)?;
        if check_partition(c, &res.partition).is_err() {
            cell.fail("solver returned an invalid partition".into(), "solve", c);
        }
        cell.observe(res.count);
        if res.count > formula {
            cell.fail(
                format!("n={n} r={r}: exact value {} exceeds formula {formula}", res.count),
                "solve",
                c,
            );
        }
        Ok(res.count)
    };

    if r <= 1 {
        let c = EdgeColoring::monochromatic(n)?;
        let v = check_upper(&mut cell, &c)?;
        if v != formula {
            cell.fail(format!("n={n} r={r}: value {v} != formula {formula}"), "solve", &c);
        }
        return Ok(cell);
    }

    if n >= 3 {
        let (c, layout) = generate_canonical(n, r)?;
        let explicit = extremal_partition(&c, &layout)?;
        if check_partition(&c, &explicit).is_err() || explicit.count() != formula {
            cell.fail(
                format!("n={n} r={r}: explicit canonical partition is invalid or off the formula"),
                "solve",
                &c,
            );
        }
        let v = check_upper(&mut cell, &c)?;
        if v == formula {
            cell.witnesses.push(Witness {
                label: format!("canonical n={n} r={r}"),
                value: v,
                instance: write_coloring(&c),
            });
        } else {
            cell.fail(
                format!("n={n} r={r}: canonical coloring has value {v}, formula {formula}"),
                "solve",
                &c,
            );
        }
    }

    if n <= cfg.exhaustive_max_n {
        let mut max_seen = 0;
        let mut result = Ok(());
        for_each_surjective_coloring(n, r, |c| {
            if result.is_ok() {
                match check_upper(&mut cell, c) {
                    Ok(v) => max_seen = max_seen.max(v),
                    Err(e) => result = Err(e),
                }
            }
        });
        result?;
        if max_seen != formula {
            let c = generate_canonical(n, r)?.0;
            cell.fail(
                format!("n={n} r={r}: exhaustive maximum {max_seen} != formula {formula}"),
                "solve",
                &c,
            );
        }
    }

    let sampled = cfg.sampled_r.as_ref().is_none_or(|rs| rs.contains(&r));
    if sampled {
        let mut rng = cell_rng(cfg.seed, n, r);
        for _ in 0..cfg.samples_per_cell {
            let c = random_surjective_coloring(n, r, &mut rng)?;
            check_upper(&mut cell, &c)?;
        }
    }
    Ok(cell)
}

/// Merging two colors never lowers the exact partition number.
pub fn campaign_monotonicity(trials: usize, seed: u64, max_n: usize) -> Result<VerificationReport> {
    if max_n > THEOREM_MAX_N || max_n < 3 {
        return Err(Error::InvalidArgument(format!(
            "monotonicity campaign needs 3 <= max n <= {THEOREM_MAX_N}"
        )));
    }
    let start = Instant::now();
    let mut report = VerificationReport::new(
        "monotonicity",
        &[
            ("trials", trials.to_string()),
            ("seed", seed.to_string()),
            ("max_n", max_n.to_string()),
        ],
    );
    let mut rng = cell_rng(seed, 0, 0);
    let mut cells: BTreeMap<(usize, usize), CellOutcome> = BTreeMap::new();
    for _ in 0..trials {
        let n = rng.gen_range(3..=max_n);
        let r = rng.gen_range(2..=choose2(n));
        let c = random_surjective_coloring(n, r, &mut rng)?;
        let from = rng.gen_range(1..=r as Color);
        let mut to = rng.gen_range(1..r as Color);
        if to >= from {
            to += 1;
        }
        let merged = merge_colors(&c, from, to)?;
        let before = solve(&c)?.count;
        let after = solve(&merged)?.count;
        let cell = cells
            .entry((n, r))
            .or_insert_with(|| CellOutcome::new(n, r, None));
        cell.observe(after);
        if before > after {
            cell.fail(
                format!("merging {from} into {to} lowered the value from {before} to {after}"),
                "solve",
                &c,
            );
        }
    }
    for (_, cell) in cells {
        report.absorb(cell);
    }
    report.wall_clock_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Simple graph on `n` vertices as adjacency bitmasks from an edge mask over
/// the lexicographic pair list.
fn adjacency(n: usize, pairs: &[Edge], mask: u32) -> Vec<u32> {
    let mut adj = vec![0u32; n];
    for (i, e) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            adj[e.u()] |= 1 << e.v();
            adj[e.v()] |= 1 << e.u();
        }
    }
    adj
}

fn connected(adj: &[u32], skip: Option<Edge>) -> bool {
    let n = adj.len();
    if n <= 1 {
        return true;
    }
    let full = (1u32 << n) - 1;
    let mut seen = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let x = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let mut nb = adj[x];
        if let Some(e) = skip {
            if x == e.u() {
                nb &= !(1 << e.v());
            } else if x == e.v() {
                nb &= !(1 << e.u());
            }
        }
        let new = nb & !seen;
        seen |= new;
        frontier |= new;
    }
    seen == full
}

fn is_complete_plus_pendant(adj: &[u32]) -> bool {
    let n = adj.len();
    if n < 2 {
        return false;
    }
    let degrees: Vec<u32> = adj.iter().map(|a| a.count_ones()).collect();
    let Some(leaf) = (0..n).find(|&x| degrees[x] == 1) else {
        return false;
    };
    let rest: Vec<usize> = (0..n).filter(|&x| x != leaf).collect();
    let hub = adj[leaf].trailing_zeros() as usize;
    rest.iter().all(|&x| {
        let others = rest.iter().filter(|&&y| y != x).fold(0u32, |m, &y| m | 1 << y);
        adj[x] & others == others
    }) && adj[hub] >> leaf & 1 == 1
}

/// Exhaustive check that graphs with a bridge have at most `C(n-1,2) + 1`
/// edges, with a tight `K_{n-1}` plus pendant witness per `n >= 2`.
pub fn campaign_cutedge(max_n: usize) -> Result<VerificationReport> {
    if max_n > CUTEDGE_MAX_N {
        return Err(Error::GuardExceeded {
            what: "cut-edge campaign (max n)",
            limit: CUTEDGE_MAX_N,
            actual: max_n,
        });
    }
    let start = Instant::now();
    let mut report = VerificationReport::new("cutedge", &[("max_n", max_n.to_string())]);
    for n in 1..=max_n {
        let bound = choose2(n.saturating_sub(1)) + 1;
        let pairs: Vec<Edge> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| Edge::new(u, v)))
            .collect();
        let masks: u32 = 1 << pairs.len();
        // (bridged graphs, max edges, first tight K_{n-1}+pendant, first violator)
        type Acc = (u64, usize, Option<u32>, Option<u32>);
        let merge = |a: Acc, b: Acc| -> Acc {
            (a.0 + b.0, a.1.max(b.1), a.2.or(b.2), a.3.or(b.3))
        };
        let acc: Acc = (0..masks)
            .into_par_iter()
            .with_min_len(1 << 12)
            .fold(
                || (0, 0, None, None),
                |mut acc: Acc, mask| {
                    let adj = adjacency(n, &pairs, mask);
                    if !connected(&adj, None) {
                        return acc;
                    }
                    let has_bridge = pairs
                        .iter()
                        .enumerate()
                        .any(|(i, &e)| mask >> i & 1 == 1 && !connected(&adj, Some(e)));
                    if !has_bridge {
                        return acc;
                    }
                    let m = mask.count_ones() as usize;
                    acc.0 += 1;
                    acc.1 = acc.1.max(m);
                    if m == bound && acc.2.is_none() && is_complete_plus_pendant(&adj) {
                        acc.2 = Some(mask);
                    }
                    if m > bound && acc.3.is_none() {
                        acc.3 = Some(mask);
                    }
                    acc
                },
            )
            .reduce(|| (0, 0, None, None), merge);
        let (count, max_edges, tight, violator) = acc;
        let as_coloring = |mask: u32| -> EdgeColoring {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, e)| (e.u(), e.v(), 1))
                .collect();
            EdgeColoring::from_raw(&RawColoring {
                n,
                r: 1,
                complete: false,
                edges,
            })
            .expect("nonempty edge set")
        };
        let mut cell = CellOutcome::new(n, 0, Some(bound));
        cell.summary.instances = count;
        cell.summary.max_observed = (count > 0).then_some(max_edges);
        if let Some(mask) = violator {
            cell.fail(
                format!("n={n}: bridged graph with {} edges exceeds {bound}", mask.count_ones()),
                "solve",
                &as_coloring(mask),
            );
        }
        match tight {
            Some(mask) => cell.witnesses.push(Witness {
                label: format!("cut-edge tight n={n}"),
                value: bound,
                instance: write_coloring(&as_coloring(mask)),
            }),
            None if n >= 2 => {
                cell.summary.failures += 1;
                cell.failures.push(Failure {
                    message: format!("n={n}: no tight K_(n-1) plus pendant witness"),
                    command: "verify cutedge".into(),
                    instance: String::new(),
                });
            }
            None => {}
        }
        report.absorb(cell);
    }
    report.wall_clock_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructiveConfig {
    pub max_n: usize,
    pub samples: usize,
    pub seed: u64,
    /// Every coloring (up to color permutation) of `K_n` for `n` up to this.
    pub exhaustive_max_n: usize,
    /// Canonical colorings are checked for equality up to this `n`.
    pub canonical_max_n: usize,
    /// The exact solver cross-check runs up to this `n`.
    pub solver_max_n: usize,
}

impl ConstructiveConfig {
    pub fn new(max_n: usize, samples: usize, seed: u64) -> Self {
        ConstructiveConfig {
            max_n,
            samples,
            seed,
            exhaustive_max_n: 5,
            canonical_max_n: 10,
            solver_max_n: 12,
        }
    }
}

/// Checks one constructive run; returns its tree count and elapsed time, or
/// `None` when the run itself reported a defect.
fn check_constructive(
    cell: &mut CellOutcome,
    c: &EdgeColoring,
    solver_max_n: usize,
) -> Result<Option<(usize, f64)>> {
    let t0 = Instant::now();
    let res = match partition_complete(c) {
        Ok(res) => res,
        Err(Error::Defect { message, .. }) => {
            cell.summary.instances += 1;
            cell.fail(message, "construct", c);
            return Ok(None);
        }
        Err(e) => return Err(e),
    };
    let ms = t0.elapsed().as_secs_f64() * 1e3;
    let count = res.partition.count();
    cell.observe(count);
    if let Err(v) = check_partition(c, &res.partition) {
        cell.fail(format!("constructive partition invalid: {v}"), "construct", c);
    }
    for level in &res.levels {
        if level.swaps + 2 > level.n.max(2) {
            cell.fail(
                format!("{} swaps at a level with {} vertices", level.swaps, level.n),
                "construct",
                c,
            );
        }
    }
    if c.n() <= solver_max_n {
        let exact = solve_with(c, SolveOptions { max_n: solver_max_n })?.count;
        if count < exact {
            cell.fail(
                format!("constructive count {count} below exact minimum {exact}"),
                "construct",
                c,
            );
        }
    }
    Ok(Some((count, ms)))
}

/// The constructive algorithm is valid, within the closed form, never below
/// the exact optimum, and tight on canonical colorings.
pub fn campaign_constructive(cfg: &ConstructiveConfig) -> Result<VerificationReport> {
    if cfg.max_n > CONSTRUCTIVE_MAX_N {
        return Err(Error::GuardExceeded {
            what: "constructive campaign (max n)",
            limit: CONSTRUCTIVE_MAX_N,
            actual: cfg.max_n,
        });
    }
    let start = Instant::now();
    let mut report = VerificationReport::new(
        "constructive",
        &[
            ("max_n", cfg.max_n.to_string()),
            ("samples", cfg.samples.to_string()),
            ("seed", cfg.seed.to_string()),
            ("exhaustive_max_n", cfg.exhaustive_max_n.to_string()),
            ("canonical_max_n", cfg.canonical_max_n.to_string()),
            ("solver_max_n", cfg.solver_max_n.to_string()),
        ],
    );
    let mut cells: BTreeMap<(usize, usize), CellOutcome> = BTreeMap::new();
    let mut slowest: f64 = 0.0;

    // Exhaustive small orders.
    for n in 1..=cfg.exhaustive_max_n.min(cfg.max_n) {
        let mut result = Ok(());
        for_each_coloring_up_to_permutation(n, |c| {
            if result.is_err() {
                return;
            }
            let r = c.r() as usize;
            let bound = partition_number(n, r).ok();
            let cell = cells
                .entry((n, r))
                .or_insert_with(|| CellOutcome::new(n, r, bound));
            match check_constructive(cell, c, cfg.solver_max_n) {
                Ok(run) => slowest = slowest.max(run.map_or(0.0, |(_, ms)| ms)),
                Err(e) => result = Err(e),
            }
        });
        result?;
    }

    // Canonical colorings: the closed form is attained, so the count must match.
    for n in 3..=cfg.canonical_max_n.min(cfg.max_n) {
        for r in 2..=choose2(n) {
            let (c, _) = generate_canonical(n, r)?;
            let bound = partition_number(n, r)?;
            let cell = cells
                .entry((n, r))
                .or_insert_with(|| CellOutcome::new(n, r, Some(bound)));
            let Some((count, ms)) = check_constructive(cell, &c, cfg.solver_max_n)? else {
                continue;
            };
            slowest = slowest.max(ms);
            if count != bound {
                cell.fail(
                    format!("canonical n={n} r={r}: constructive count {count} != {bound}"),
                    "construct",
                    &c,
                );
            }
        }
    }

    // Random colorings, grouped per n.
    let first_random = cfg.exhaustive_max_n.max(2) + 1;
    let sampled: Vec<Result<(usize, Vec<((usize, usize), CellOutcome)>, f64)>> = (first_random
        ..=cfg.max_n)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&n| {
            let mut rng = cell_rng(cfg.seed, n, 0);
            let mut local: BTreeMap<(usize, usize), CellOutcome> = BTreeMap::new();
            let mut slow: f64 = 0.0;
            for _ in 0..cfg.samples {
                let r = rng.gen_range(2..=choose2(n));
                let c = random_surjective_coloring(n, r, &mut rng)?;
                let bound = partition_number(n, r)?;
                let cell = local
                    .entry((n, r))
                    .or_insert_with(|| CellOutcome::new(n, r, Some(bound)));
                if let Some((_, ms)) = check_constructive(cell, &c, cfg.solver_max_n)? {
                    slow = slow.max(ms);
                }
            }
            Ok((n, local.into_iter().collect(), slow))
        })
        .collect();
    for item in sampled {
        let (_, local, slow) = item?;
        slowest = slowest.max(slow);
        for (key, cell) in local {
            match cells.get_mut(&key) {
                Some(existing) => {
                    existing.summary.instances += cell.summary.instances;
                    existing.summary.failures += cell.summary.failures;
                    existing.summary.max_observed =
                        existing.summary.max_observed.max(cell.summary.max_observed);
                    existing.failures.extend(cell.failures);
                    existing.witnesses.extend(cell.witnesses);
                }
                None => {
                    cells.insert(key, cell);
                }
            }
        }
    }

    for (_, cell) in cells {
        report.absorb(cell);
    }
    report.max_instance_ms = Some(slowest);
    report.wall_clock_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}
