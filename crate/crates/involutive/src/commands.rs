//! Algorithm dispatch, report verification and the benchmark driver.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use involutive_core::division::DivisionKind;
use involutive_core::groebner::{
    ideal_equal, monomial_ideal_dimension, reduced_groebner, schreyer_syzygies, sort_by_lead, wall_syzygies,
};
use involutive_core::invbasis::{bounded_completeness, gerdt_classic, inv_basis, syzygies_direct, InvOptions};
use involutive_core::quasistable::{quasi_stable, test_pommaret, LinearChange, QuasiStableOptions};
use involutive_core::siginv::{st_inv_basis, CoverMode, SigOptions};
use involutive_core::{Coeff, Error, ModuleElement, ModuleMonomial, Monomial, MonomialOrder, Polynomial, Ring};
use num_traits::Zero;

use crate::parse::{parse_polynomial, parse_system_file, ParseError, SystemFile};
use crate::report::{BenchReport, BenchRun, RunReport, Stats, SyzygyBlock};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    Groebner,
    InvBasis,
    Gerdt,
    Syzygy,
    QuasiStable,
    StInvBasis,
    Dim,
}

impl Algorithm {
    pub const ALL: [Algorithm; 7] = [
        Algorithm::Groebner,
        Algorithm::InvBasis,
        Algorithm::Gerdt,
        Algorithm::Syzygy,
        Algorithm::QuasiStable,
        Algorithm::StInvBasis,
        Algorithm::Dim,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Groebner => "groebner",
            Algorithm::InvBasis => "invbasis",
            Algorithm::Gerdt => "gerdt",
            Algorithm::Syzygy => "syzygy",
            Algorithm::QuasiStable => "quasistable",
            Algorithm::StInvBasis => "stinvbasis",
            Algorithm::Dim => "dim",
        }
    }

    pub fn from_name(s: &str) -> Option<Algorithm> {
        Self::ALL.into_iter().find(|a| a.name() == s)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SyzMethod {
    #[default]
    Wall,
    Schreyer,
    Direct,
}

impl SyzMethod {
    pub fn name(self) -> &'static str {
        match self {
            SyzMethod::Wall => "wall",
            SyzMethod::Schreyer => "schreyer",
            SyzMethod::Direct => "direct",
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub division: DivisionKind,
    /// Overrides the ordering declared in the file.
    pub order: Option<MonomialOrder>,
    pub seed: u64,
    pub max_iter: Option<usize>,
    /// Include syzygies in invbasis reports.
    pub syzygies: bool,
    pub syz_method: SyzMethod,
    /// Criterion C2 in `gerdt`.
    pub c2: bool,
    pub cover: CoverMode,
    pub timing: bool,
    pub verify: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            division: DivisionKind::Janet,
            order: None,
            seed: 1,
            max_iter: None,
            syzygies: false,
            syz_method: SyzMethod::Wall,
            c2: true,
            cover: CoverMode::Live,
            timing: false,
            verify: false,
        }
    }
}

#[derive(Debug)]
pub enum RunError {
    Parse(ParseError),
    Cap(String),
    Verify(String),
    Other(String),
}

impl RunError {
    pub fn exit_code(&self) -> u8 {
        match self {
            RunError::Parse(_) => 2,
            RunError::Cap(_) => 3,
            RunError::Verify(_) => 4,
            RunError::Other(_) => 1,
        }
    }
}

impl fmt::Display for RunError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RunError::Parse(e) => write!(f, "parse error: {e}"),
            RunError::Cap(m) => write!(f, "iteration cap exceeded: {m}"),
            RunError::Verify(m) => write!(f, "verification failed: {m}"),
            RunError::Other(m) => write!(f, "error: {m}"),
        }
    }
}

impl std::error::Error for RunError {}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        match e {
            Error::IterationCap { .. } | Error::ChangeCap { .. } => RunError::Cap(e.to_string()),
            _ => RunError::Other(e.to_string()),
        }
    }
}

impl From<ParseError> for RunError {
    fn from(e: ParseError) -> Self {
        RunError::Parse(e)
    }
}

fn render(f: &Polynomial, names: &[String]) -> String {
    f.display(names).to_string()
}

fn render_module_monomial(m: &ModuleMonomial, names: &[String]) -> String {
    if m.mono.is_one() {
        format!("e{}", m.slot + 1)
    } else {
        format!("{}*e{}", m.mono.display(names), m.slot + 1)
    }
}

fn monic_sorted(polys: &[Polynomial], ord: MonomialOrder) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = polys.iter().map(|f| f.monic().expect("nonzero")).collect();
    sort_by_lead(&mut out, ord);
    out
}

fn syzygy_block(syz: &[ModuleElement], rank: usize, over: &str, names: &[String]) -> SyzygyBlock {
    SyzygyBlock {
        over: over.to_string(),
        elements: syz.iter().map(|s| s.to_dense(rank).iter().map(|c| render(c, names)).collect()).collect(),
    }
}

fn leads(ps: &[Polynomial]) -> Vec<Monomial> {
    ps.iter().map(|p| p.lm().expect("nonzero").clone()).collect()
}

fn max_degree(ps: &[Polynomial]) -> u32 {
    ps.iter().filter_map(Polynomial::degree).max().unwrap_or(0)
}

/// A stable echo of the command and the options that affect its output.
pub fn command_echo(alg: Algorithm, ord: MonomialOrder, opts: &RunOptions) -> String {
    let mut s = format!("{} --order {}", alg.name(), ord.name());
    match alg {
        Algorithm::InvBasis | Algorithm::Gerdt | Algorithm::StInvBasis => {
            s.push_str(&format!(" --division {}", opts.division.name()))
        }
        Algorithm::Syzygy => s.push_str(&format!(" --method {}", opts.syz_method.name())),
        Algorithm::QuasiStable => s.push_str(&format!(" --seed {}", opts.seed)),
        _ => {}
    }
    if alg == Algorithm::Gerdt && !opts.c2 {
        s.push_str(" --no-c2");
    }
    if alg == Algorithm::StInvBasis && opts.cover == CoverMode::BasisOnly {
        s.push_str(" --cover basis");
    }
    s
}

pub fn run(alg: Algorithm, sys: &SystemFile, name: Option<&str>, opts: &RunOptions) -> Result<RunReport, RunError> {
    let sys = match opts.order {
        Some(o) if o != sys.order() => sys.with_order(o),
        _ => sys.clone(),
    };
    let ord = sys.order();
    let names = sys.names();
    let n = names.len();
    let f = &sys.polys;
    if f.is_empty() && alg != Algorithm::Dim {
        return Err(RunError::Other(format!("{} needs at least one nonzero generator", alg.name())));
    }
    let inv_opts = InvOptions { max_iter: opts.max_iter, ..Default::default() };
    let start = Instant::now();
    let mut stats = Stats::default();
    let mut division = None;
    let mut syzygies = None;
    let mut phi = None;
    let mut syz_lms = None;
    let basis: Vec<Polynomial> = match alg {
        Algorithm::Groebner => {
            let gb = reduced_groebner(f, ord)?;
            stats.deg = Some(max_degree(&gb));
            gb
        }
        Algorithm::Dim if f.is_empty() => {
            stats.dim = Some(n);
            Vec::new()
        }
        Algorithm::Dim => {
            let gb = reduced_groebner(f, ord)?;
            stats.dim = Some(monomial_ideal_dimension(&leads(&gb), n));
            gb
        }
        Algorithm::InvBasis => {
            let res = inv_basis(f, opts.division, ord, inv_opts)?;
            division = Some(opts.division);
            stats.c1 = Some(res.stats.c1);
            stats.redz = Some(res.stats.redz);
            stats.deg = Some(res.stats.max_deg);
            stats.queue_peak = Some(res.stats.queue_peak);
            if opts.syzygies {
                syzygies = Some(syzygy_block(&res.syzygies, res.basis.len(), "basis", names));
            }
            if res.basis.iter().any(|b| !b.is_monic()) {
                // Input elements kept as given; syzygies refer to them, so rescale both.
                let scaled: Vec<Polynomial> = res.basis.iter().map(|b| b.monic().unwrap()).collect();
                if let Some(block) = syzygies.as_mut() {
                    let rescaled: Vec<ModuleElement> = res
                        .syzygies
                        .iter()
                        .map(|s| {
                            ModuleElement::from_coords(
                                s.coords().map(|(i, c)| (i, c.scale(res.basis[i].lc().unwrap()))),
                            )
                        })
                        .collect();
                    *block = syzygy_block(&rescaled, scaled.len(), "basis", names);
                }
                scaled
            } else {
                res.basis
            }
        }
        Algorithm::Gerdt => {
            let res = gerdt_classic(f, opts.division, ord, opts.c2, inv_opts)?;
            division = Some(opts.division);
            stats.c1 = Some(res.stats.c1);
            stats.c2 = Some(res.stats.c2);
            stats.redz = Some(res.stats.redz);
            stats.deg = Some(res.stats.max_deg);
            stats.queue_peak = Some(res.stats.queue_peak);
            monic_sorted(&res.basis, ord)
        }
        Algorithm::Syzygy => match opts.syz_method {
            SyzMethod::Wall => {
                let syz = wall_syzygies(f, ord)?;
                stats.syz = Some(syz.len());
                syzygies = Some(syzygy_block(&syz, f.len(), "input", names));
                reduced_groebner(f, ord)?
            }
            SyzMethod::Schreyer => {
                let gb = reduced_groebner(f, ord)?;
                let syz = schreyer_syzygies(&gb, ord)?;
                stats.syz = Some(syz.len());
                syzygies = Some(syzygy_block(&syz, gb.len(), "basis", names));
                gb
            }
            SyzMethod::Direct => {
                let res = inv_basis(f, opts.division, ord, inv_opts)?;
                division = Some(opts.division);
                let basis: Vec<Polynomial> = res.basis.iter().map(|b| b.monic().unwrap()).collect();
                let syz = syzygies_direct(&basis, opts.division, ord)?;
                stats.syz = Some(syz.len());
                syzygies = Some(syzygy_block(&syz, basis.len(), "basis", names));
                basis
            }
        },
        Algorithm::QuasiStable => {
            let qopts = QuasiStableOptions { seed: opts.seed, max_changes: None, inv: inv_opts };
            let res = quasi_stable(f, ord, qopts)?;
            division = Some(DivisionKind::Pommaret);
            stats.c1 = Some(res.stats.c1);
            stats.syz = Some(res.stats.syz);
            stats.redz = Some(res.stats.redz);
            stats.lin = Some(res.stats.lin);
            stats.deg = Some(res.stats.max_deg);
            stats.dim = Some(res.stats.dim);
            phi = Some(res.phi.matrix.iter().map(|row| row.iter().map(|c| c.to_string()).collect()).collect());
            monic_sorted(&res.basis, ord)
        }
        Algorithm::StInvBasis => {
            let sopts = SigOptions { cover: opts.cover, max_iter: opts.max_iter, ..Default::default() };
            let res = st_inv_basis(f, opts.division, ord, sopts)?;
            division = Some(opts.division);
            stats.cover = Some(res.stats.cover_skips);
            stats.redz = Some(res.stats.redz);
            stats.deg = Some(res.stats.max_deg);
            stats.queue_peak = Some(res.stats.queue_peak);
            // Slots of the signatures refer to the input in file order.
            let lms = res.syz_lms.iter().map(|m| ModuleMonomial::new(m.mono.clone(), res.input_order[m.slot]));
            syz_lms = Some(lms.map(|m| render_module_monomial(&m, names)).collect());
            res.basis
        }
    };
    if opts.timing {
        stats.wall_time = Some(start.elapsed().as_secs_f64());
    }
    let report = RunReport {
        command: command_echo(alg, ord, opts),
        system: name.map(str::to_string),
        ring: names.to_vec(),
        order: ord.name().to_string(),
        division: division.map(|d| d.name().to_string()),
        seed: opts.seed,
        input: f.iter().map(|p| render(p, names)).collect(),
        basis: basis.iter().map(|p| render(p, names)).collect(),
        syzygies,
        phi,
        syz_lms,
        stats,
    };
    if opts.verify {
        check_report(&report)?;
    }
    Ok(report)
}

fn parse_all(items: &[String], ring: &Ring) -> Result<Vec<Polynomial>, RunError> {
    items.iter().map(|s| parse_polynomial(s, ring).map_err(RunError::Parse)).collect()
}

fn determinant(m: &[Vec<Coeff>]) -> Coeff {
    let mut a: Vec<Vec<Coeff>> = m.to_vec();
    let n = a.len();
    let mut det = Coeff::ONE;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Coeff::zero();
        };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        let pivot_row = a[col].clone();
        for row in a.iter_mut().skip(col + 1) {
            let factor = &row[col] / &p;
            if factor.is_zero() {
                continue;
            }
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x -= &factor * y;
            }
        }
    }
    det
}

/// Re-verifies a saved report: ideal equality against the (transformed)
/// input, syzygy sums, involutive completeness up to a degree bound, the
/// Pommaret test and the dimension.
pub fn check_report(report: &RunReport) -> Result<(), RunError> {
    let ord = MonomialOrder::from_name(&report.order)
        .ok_or_else(|| RunError::Verify(format!("unknown order `{}`", report.order)))?;
    let ring = Ring::new(report.ring.clone(), ord);
    let n = ring.nvars();
    let input = parse_all(&report.input, &ring)?;
    let basis = parse_all(&report.basis, &ring)?;
    let fail = |m: String| Err(RunError::Verify(m));
    if basis.iter().any(Polynomial::is_zero) {
        return fail("basis contains zero".into());
    }
    let target = match &report.phi {
        Some(rows) => {
            let matrix: Vec<Vec<Coeff>> = rows
                .iter()
                .map(|r| r.iter().map(|c| c.parse::<Coeff>()).collect::<Result<Vec<_>, _>>())
                .collect::<Result<_, _>>()
                .map_err(|e| RunError::Verify(format!("bad matrix entry: {e}")))?;
            if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
                return fail("coordinate change has the wrong shape".into());
            }
            if determinant(&matrix).is_zero() {
                return fail("coordinate change is singular".into());
            }
            LinearChange { matrix, log: Vec::new() }.apply_all(&input, ord)
        }
        None => input.clone(),
    };
    if target.is_empty() || basis.is_empty() {
        if !(target.is_empty() && basis.is_empty()) {
            return fail("basis does not generate the input ideal".into());
        }
        return match report.stats.dim {
            Some(d) if d != n => fail(format!("dimension {d} reported, {n} recomputed")),
            _ => Ok(()),
        };
    }
    if !ideal_equal(&basis, &target, ord)? {
        return fail("basis does not generate the input ideal".into());
    }
    if let Some(block) = &report.syzygies {
        let gens = match block.over.as_str() {
            "basis" => &basis,
            "input" => &input,
            other => return fail(format!("unknown syzygy target `{other}`")),
        };
        for (k, row) in block.elements.iter().enumerate() {
            if row.len() != gens.len() {
                return fail(format!("syzygy {} has {} coordinates, expected {}", k + 1, row.len(), gens.len()));
            }
            let coords = parse_all(row, &ring)?;
            let s = ModuleElement::from_dense(coords);
            if !s.is_syzygy_of(gens, ord) {
                return fail(format!("syzygy {} does not vanish", k + 1));
            }
        }
    }
    if let Some(d) = &report.division {
        let kind = DivisionKind::from_name(d).ok_or_else(|| RunError::Verify(format!("unknown division `{d}`")))?;
        let mut ls = leads(&basis);
        ls.sort();
        ls.dedup();
        if let Some(w) = bounded_completeness(&ls, kind, 2) {
            return fail(format!("{} is not covered by the involutive cones", w.display(&report.ring)));
        }
        if kind == DivisionKind::Pommaret && !test_pommaret(&ls, ord)?.is_pass() {
            return fail("leading monomials are not quasi-stable".into());
        }
    }
    if let Some(d) = report.stats.dim {
        let gb = reduced_groebner(&target, ord)?;
        let got = monomial_ideal_dimension(&leads(&gb), n);
        if got != d {
            return fail(format!("dimension {d} reported, {got} recomputed"));
        }
    }
    Ok(())
}

/// Keys of the reference values compared for each algorithm.
fn expected_keys(alg: Algorithm) -> &'static [(&'static str, &'static str)] {
    match alg {
        Algorithm::QuasiStable => &[("dim", "dim"), ("qs_deg", "deg"), ("qs_lin", "lin")],
        Algorithm::Dim => &[("dim", "dim")],
        Algorithm::StInvBasis => &[("st_deg", "deg")],
        _ => &[],
    }
}

fn stat_value(stats: &Stats, key: &str) -> Option<i64> {
    match key {
        "dim" => stats.dim.map(|v| v as i64),
        "deg" => stats.deg.map(i64::from),
        "lin" => stats.lin.map(|v| v as i64),
        _ => None,
    }
}

/// System files of a corpus directory, sorted by name.
pub fn corpus_files(dir: &Path) -> std::io::Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "sys"))
        .collect();
    files.sort();
    Ok(files)
}

pub fn system_name(path: &Path) -> String {
    path.file_stem().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned())
}

/// Runs every algorithm on every system. Systems are distributed over
/// `jobs` worker threads; the result does not depend on `jobs`.
pub fn bench(systems: &[PathBuf], algorithms: &[Algorithm], opts: &RunOptions, jobs: usize) -> BenchReport {
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<Vec<BenchRun>>>> = Mutex::new(vec![None; systems.len()]);
    std::thread::scope(|scope| {
        for _ in 0..jobs.max(1).min(systems.len().max(1)) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(path) = systems.get(i) else {
                    break;
                };
                let runs = bench_system(path, algorithms, opts);
                slots.lock().unwrap()[i] = Some(runs);
            });
        }
    });
    let runs = slots.into_inner().unwrap().into_iter().flatten().flatten().collect();
    BenchReport { seed: opts.seed, runs }
}

fn bench_system(path: &Path, algorithms: &[Algorithm], opts: &RunOptions) -> Vec<BenchRun> {
    let name = system_name(path);
    let sys = match parse_system_file(path) {
        Ok(s) => s,
        Err(e) => {
            return algorithms
                .iter()
                .map(|a| BenchRun {
                    system: name.clone(),
                    algorithm: a.name().into(),
                    expected: BTreeMap::new(),
                    report: None,
                    error: Some(RunError::Parse(e.clone()).to_string()),
                    mismatches: Vec::new(),
                })
                .collect();
        }
    };
    algorithms
        .iter()
        .map(|&alg| {
            let expected = sys.expect.clone();
            match run(alg, &sys, Some(&name), opts) {
                Ok(report) => {
                    let mismatches = expected_keys(alg)
                        .iter()
                        .filter_map(|(k, stat)| {
                            let want = *expected.get(*k)?;
                            let got = stat_value(&report.stats, stat)?;
                            (want != got).then(|| format!("{k}: {want} -> {got}"))
                        })
                        .collect();
                    BenchRun {
                        system: name.clone(),
                        algorithm: alg.name().into(),
                        expected,
                        report: Some(report),
                        error: None,
                        mismatches,
                    }
                }
                Err(e) => BenchRun {
                    system: name.clone(),
                    algorithm: alg.name().into(),
                    expected,
                    report: None,
                    error: Some(e.to_string()),
                    mismatches: Vec::new(),
                },
            }
        })
        .collect()
}

fn cell<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

/// Human-readable table, one block per system as in the benchmark tables.
pub fn bench_table(report: &BenchReport) -> String {
    let mut out = String::new();
    let header = ["time", "dim", "C1", "C2", "cover", "HD", "syz", "redz", "lin", "deg"];
    let mut systems: Vec<&str> = report.runs.iter().map(|r| r.system.as_str()).collect();
    systems.dedup();
    for sys in systems {
        out.push_str(&format!("{:<14}", sys));
        for h in header {
            out.push_str(&format!("{h:>8}"));
        }
        out.push('\n');
        for run in report.runs.iter().filter(|r| r.system == sys) {
            out.push_str(&format!("  {:<12}", run.algorithm));
            match (&run.report, &run.error) {
                (Some(r), _) => {
                    let s = &r.stats;
                    let time = s.wall_time.map(|t| format!("{t:.2}"));
                    for c in [
                        cell(time),
                        cell(s.dim),
                        cell(s.c1),
                        cell(s.c2),
                        cell(s.cover),
                        cell(s.hd),
                        cell(s.syz),
                        cell(s.redz),
                        cell(s.lin),
                        cell(s.deg),
                    ] {
                        out.push_str(&format!("{c:>8}"));
                    }
                    if !run.mismatches.is_empty() {
                        out.push_str(&format!("   [differs: {}]", run.mismatches.join("; ")));
                    }
                }
                (None, Some(e)) => out.push_str(&format!("  {e}")),
                (None, None) => {}
            }
            out.push('\n');
        }
    }
    out
}

/// Human-readable rendering of a single report.
pub fn report_table(r: &RunReport) -> String {
    let mut out = format!("{}\n", r.command);
    if let Some(sys) = &r.system {
        out.push_str(&format!("system: {sys}\n"));
    }
    out.push_str(&format!("ring: {} ({})\n", r.ring.join(", "), r.order));
    out.push_str(&format!("basis ({}):\n", r.basis.len()));
    for b in &r.basis {
        out.push_str(&format!("  {b}\n"));
    }
    if let Some(phi) = &r.phi {
        out.push_str("coordinate change:\n");
        for row in phi {
            out.push_str(&format!("  [{}]\n", row.join(", ")));
        }
    }
    if let Some(block) = &r.syzygies {
        out.push_str(&format!("syzygies over {} ({}):\n", block.over, block.elements.len()));
        for s in &block.elements {
            out.push_str(&format!("  ({})\n", s.join(", ")));
        }
    }
    if let Some(lms) = &r.syz_lms {
        out.push_str(&format!("syzygy signatures ({}): {}\n", lms.len(), lms.join(", ")));
    }
    let s = &r.stats;
    let time = s.wall_time.map(|t| format!("{t:.3}s"));
    out.push_str(&format!(
        "stats: c1={} c2={} cover={} hd={} syz={} redz={} lin={} deg={} dim={} queue_peak={} time={}\n",
        cell(s.c1),
        cell(s.c2),
        cell(s.cover),
        cell(s.hd),
        cell(s.syz),
        cell(s.redz),
        cell(s.lin),
        cell(s.deg),
        cell(s.dim),
        cell(s.queue_peak),
        cell(time)
    ));
    out
}
