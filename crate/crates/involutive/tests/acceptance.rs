//! Acceptance suite: one line per criterion.
//!
//! Criterion numbers given as arguments select a subset. The exit status is
//! non-zero on a failure only when `ACCEPTANCE_STRICT=1`.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use involutive::parse::{parse_polynomial, parse_system_file};
use involutive_core::division::{check_division_axioms, DivisionKind};
use involutive_core::groebner::{
    buchberger, ideal_dimension, ideal_equal, module_buchberger, module_equal, reduced_groebner, same_monomial_ideal,
    same_monomial_submodule, schreyer_syzygies, wall_syzygies, BuchbergerOptions,
};
use involutive_core::invbasis::{
    bounded_completeness, gerdt_classic, inv_basis, next_inv_basis, syzygies_direct, InvOptions,
};
use involutive_core::poly::rat;
use involutive_core::quasistable::{
    homogenize, quasi_stable, test_pommaret, LinearChange, QuasiStableOptions, QuasiStableResult,
};
use involutive_core::sample::{random_monomials, random_system, SystemShape};
use involutive_core::siginv::{st_inv_basis, strong_basis_check, SigOptions};
use involutive_core::{Error, ModuleElement, ModuleOrder, Monomial, MonomialOrder, Polynomial, Ring};

/// Wall-clock budget of each small worked example.
const EXAMPLE_LIMIT: Duration = Duration::from_secs(1);
/// Wall-clock budget of the corpus dimension run.
const CORPUS_LIMIT: Duration = Duration::from_secs(300);
/// Extra degrees explored by the bounded completeness check.
const COMPLETENESS_EXTRA: u32 = 2;
const RANDOM_SYSTEMS: u64 = 100;
const MONOMIAL_SETS: u64 = 200;
const ORDERS: [MonomialOrder; 3] = [MonomialOrder::DegRevLex, MonomialOrder::DegLex, MonomialOrder::Lex];

/// Systems whose dimension row is checked, with their file stems.
const DIM_ROWS: [(&str, &str); 6] = [
    ("Weispfenning94", "weispfenning94"),
    ("Liu", "liu"),
    ("Noon", "noon3"),
    ("Katsura5", "katsura5"),
    ("Vermeer", "vermeer"),
    ("Butcher", "butcher"),
];

type Outcome = Result<String, String>;

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

fn polys(ring: &Ring, items: &[&str]) -> Vec<Polynomial> {
    items.iter().map(|s| parse_polynomial(s, ring).expect("valid polynomial")).collect()
}

fn module(ring: &Ring, rows: &[&[&str]]) -> Vec<ModuleElement> {
    rows.iter().map(|r| ModuleElement::from_dense(polys(ring, r))).collect()
}

fn ring(names: &[&str], ord: MonomialOrder) -> Ring {
    Ring::new(names.iter().map(|s| s.to_string()).collect(), ord)
}

fn leads(ps: &[Polynomial]) -> Vec<Monomial> {
    ps.iter().map(|p| p.lm().expect("nonzero").clone()).collect()
}

fn distinct_leads(ps: &[Polynomial]) -> Vec<Monomial> {
    let mut l = leads(ps);
    l.sort();
    l.dedup();
    l
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {:.2}s, limit {:.0?}", t.as_secs_f64(), limit))
}

fn shape(seed: u64) -> SystemShape {
    SystemShape { nvars: 1 + (seed % 3) as usize, ..SystemShape::default() }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    // x < y in deglex: y is the greater variable
    let r = ring(&["y", "x"], MonomialOrder::DegLex);
    let ord = r.order;
    let f = polys(&r, &["x*y - x", "x^2 - y"]);
    let want = polys(&r, &["x*y - x", "x^2 - y", "y^2 - y"]);
    let gb = buchberger(&f, ord, BuchbergerOptions::default()).map_err(|e| e.to_string())?;
    let mut got = gb.basis.clone();
    got.sort_by(|a, b| ord.compare(a.lm().unwrap(), b.lm().unwrap()));
    let mut want_sorted = want.clone();
    want_sorted.sort_by(|a, b| ord.compare(a.lm().unwrap(), b.lm().unwrap()));
    ensure(got == want_sorted, || format!("basis {:?}", got.iter().map(|p| p.display(&r.names).to_string())))?;
    ensure(got.iter().all(Polynomial::is_monic), || "basis not monic".into())?;
    let listed = module(&r, &[&["x", "-y + 1", "-1"], &["-x", "y^2 - 1", "-x^2 + y + 1"], &["y", "0", "-x"]]);
    ensure(listed.iter().all(|s| s.is_syzygy_of(&want, ord)), || "listed generators are not syzygies".into())?;
    let syz = schreyer_syzygies(&want, ord).map_err(|e| e.to_string())?;
    let order = ModuleOrder::schreyer_for(ord, &want).map_err(|e| e.to_string())?;
    ensure(module_equal(&syz, &listed, &order), || "syzygy modules differ".into())?;
    within(EXAMPLE_LIMIT, start)?;
    Ok(format!("basis of 3, {} Schreyer syzygies span the listed module", syz.len()))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let r = ring(&["x", "y", "z"], MonomialOrder::DegRevLex);
    let f = polys(&r, &["x*y", "y^2", "z"]);
    let res = inv_basis(&f, DivisionKind::Janet, r.order, InvOptions::default()).map_err(|e| e.to_string())?;
    let mut got = leads(&res.basis);
    got.sort();
    let mut want = leads(&polys(&r, &["x*y", "y^2", "z", "x*z", "y*z"]));
    want.sort();
    ensure(got == want, || format!("Janet leads {got:?}"))?;
    match inv_basis(&f, DivisionKind::Pommaret, r.order, InvOptions::default()) {
        Err(Error::IterationCap { limit }) => {
            within(EXAMPLE_LIMIT, start)?;
            Ok(format!("Janet basis of 5; Pommaret stops at the cap of {limit} iterations"))
        }
        Err(e) => Err(format!("Pommaret: unexpected error {e}")),
        Ok(res) => Err(format!("Pommaret completion returned {} elements", res.basis.len())),
    }
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let r = ring(&["x", "y", "z"], MonomialOrder::DegRevLex);
    let ord = r.order;
    let f = polys(&r, &["z^2", "z*y", "x*z - y", "y^2", "x*y - y", "x^2 - x + z"]);
    let res = inv_basis(&f, DivisionKind::Janet, ord, InvOptions::default()).map_err(|e| e.to_string())?;
    ensure(res.basis == f, || format!("basis has {} elements and differs from the input", res.basis.len()))?;
    let listed = module(
        &r,
        &[
            &["y", "-z", "0", "0", "0", "0"],
            &["x", "-1", "-z", "0", "0", "0"],
            &["0", "y", "0", "-z", "0", "0"],
            &["0", "x - 1", "0", "0", "-z", "0"],
            &["0", "-1", "y", "1", "-z", "0"],
            &["1", "0", "x - 1", "0", "1", "-z"],
            &["0", "0", "0", "x - 1", "-y", "0"],
            &["0", "1", "0", "0", "x", "-y"],
        ],
    );
    ensure(listed.iter().all(|s| s.is_syzygy_of(&f, ord)), || "listed generators are not syzygies".into())?;
    let order = ModuleOrder::schreyer_for(ord, &f).map_err(|e| e.to_string())?;
    ensure(module_equal(&res.syzygies, &listed, &order), || "inv_basis syzygies span a different module".into())?;
    let direct = syzygies_direct(&f, DivisionKind::Janet, ord).map_err(|e| e.to_string())?;
    ensure(direct.len() == 8, || format!("{} direct syzygies", direct.len()))?;
    for s in &direct {
        let s = s.monic(&order).map_err(|e| e.to_string())?;
        let hit = listed.iter().any(|l| l.monic(&order).is_ok_and(|l| l == s));
        ensure(hit, || format!("direct syzygy {} is not listed", s.display(&r.names)))?;
    }
    within(EXAMPLE_LIMIT, start)?;
    Ok("basis = input (6), 8 syzygies match the listed generators".into())
}

struct CorpusRun {
    label: &'static str,
    input: Vec<Polynomial>,
    ord: MonomialOrder,
    result: QuasiStableResult,
}

fn criterion_4(runs: &mut Vec<CorpusRun>) -> Outcome {
    let cancel = Arc::new(AtomicBool::new(false));
    let watchdog = {
        let cancel = Arc::clone(&cancel);
        std::thread::spawn(move || {
            let start = Instant::now();
            while start.elapsed() < CORPUS_LIMIT {
                if cancel.load(Ordering::Relaxed) {
                    return;
                }
                std::thread::sleep(Duration::from_millis(50));
            }
            cancel.store(true, Ordering::Relaxed);
        })
    };
    let start = Instant::now();
    let mut problems = Vec::new();
    let mut notes = Vec::new();
    for (label, stem) in DIM_ROWS {
        let path = corpus_dir().join(format!("{stem}.sys"));
        if !path.exists() {
            problems.push(format!("{label}: no system file"));
            continue;
        }
        let sys = parse_system_file(&path).map_err(|e| format!("{label}: {e}"))?;
        let want = sys.expect.get("dim").copied();
        let opts = QuasiStableOptions {
            inv: InvOptions { cancel: Some(&cancel), ..Default::default() },
            ..Default::default()
        };
        let t = Instant::now();
        match quasi_stable(&sys.polys, sys.order(), opts) {
            Ok(res) => {
                let dim = res.stats.dim as i64;
                let deg = res.stats.max_deg as i64;
                if want != Some(dim) {
                    problems.push(format!("{label}: dim {dim}, expected {want:?}"));
                }
                let deg_note = match sys.expect.get("qs_deg") {
                    Some(&d) if d != deg => format!(" (deg {deg}, table {d})"),
                    _ => String::new(),
                };
                notes.push(format!("{label} dim {dim} deg {deg}{deg_note} {:.1}s", t.elapsed().as_secs_f64()));
                runs.push(CorpusRun { label, input: sys.polys.clone(), ord: sys.order(), result: res });
            }
            Err(Error::Cancelled) => problems.push(format!("{label}: not finished within the time budget")),
            Err(e) => problems.push(format!("{label}: {e}")),
        }
    }
    cancel.store(true, Ordering::Relaxed);
    watchdog.join().ok();
    let total = start.elapsed().as_secs_f64();
    let summary = format!("{}; total {total:.1}s", notes.join(", "));
    if problems.is_empty() {
        Ok(summary)
    } else {
        Err(format!("{}; {summary}", problems.join("; ")))
    }
}

fn criterion_5() -> Outcome {
    let mut count = 0usize;
    for seed in 0..RANDOM_SYSTEMS {
        let ord = ORDERS[seed as usize % 3];
        let f = random_system(seed, shape(seed), ord);
        let tag = |what: &str| format!("seed {seed}: {what} syzygy does not vanish");
        let wall = wall_syzygies(&f, ord).map_err(|e| e.to_string())?;
        ensure(wall.iter().all(|s| s.is_syzygy_of(&f, ord)), || tag("Wall"))?;
        let gb = reduced_groebner(&f, ord).map_err(|e| e.to_string())?;
        let sch = schreyer_syzygies(&gb, ord).map_err(|e| e.to_string())?;
        ensure(sch.iter().all(|s| s.is_syzygy_of(&gb, ord)), || tag("Schreyer"))?;
        let inv = inv_basis(&f, DivisionKind::Janet, ord, InvOptions::default()).map_err(|e| e.to_string())?;
        ensure(inv.syzygies.iter().all(|s| s.is_syzygy_of(&inv.basis, ord)), || tag("InvBasis"))?;
        let direct = syzygies_direct(&inv.basis, DivisionKind::Janet, ord).map_err(|e| e.to_string())?;
        ensure(direct.iter().all(|s| s.is_syzygy_of(&inv.basis, ord)), || tag("direct"))?;
        count += wall.len() + sch.len() + inv.syzygies.len() + direct.len();
    }
    Ok(format!("{count} syzygies from {RANDOM_SYSTEMS} systems evaluate to 0"))
}

fn criterion_6() -> Outcome {
    let mut skips = 0usize;
    for seed in 0..RANDOM_SYSTEMS {
        let ord = ORDERS[seed as usize % 3];
        let sh = shape(seed);
        let f = random_system(seed, sh, ord);
        let err = |e: Error| format!("seed {seed}: {e}");
        let gb = reduced_groebner(&f, ord).map_err(err)?;
        let inv = inv_basis(&f, DivisionKind::Janet, ord, InvOptions::default()).map_err(err)?;
        let gerdt = gerdt_classic(&f, DivisionKind::Janet, ord, true, InvOptions::default()).map_err(err)?;
        ensure(same_monomial_ideal(&leads(&inv.basis), &leads(&gb)), || format!("seed {seed}: inv_basis leads"))?;
        ensure(same_monomial_ideal(&leads(&gerdt.basis), &leads(&gb)), || format!("seed {seed}: gerdt leads"))?;

        if sh.nvars > 1 {
            let phi = LinearChange::elementary(sh.nvars, sh.nvars - 1, 0, rat(1 + (seed % 7) as i64)).map_err(err)?;
            let tj = phi.apply_all(&inv.basis, ord);
            let ts: Vec<ModuleElement> = inv.syzygies.iter().map(|s| phi.apply_module(s, ord)).collect();
            let next = next_inv_basis(&tj, &ts, DivisionKind::Janet, ord, InvOptions::default()).map_err(err)?;
            let plain = inv_basis(&tj, DivisionKind::Janet, ord, InvOptions::default()).map_err(err)?;
            ensure(distinct_leads(&next.basis) == distinct_leads(&plain.basis), || {
                format!("seed {seed}: next_inv_basis leads differ from inv_basis")
            })?;
            ensure(ideal_equal(&next.basis, &tj, ord).map_err(err)?, || format!("seed {seed}: next_inv_basis ideal"))?;
            skips += next.stats.syz;
        }

        let st = st_inv_basis(&f, DivisionKind::Janet, ord, SigOptions::default()).map_err(err)?;
        ensure(same_monomial_ideal(&leads(&st.basis), &leads(&gb)), || format!("seed {seed}: st_inv_basis leads"))?;
        let syz = module_buchberger(&wall_syzygies(&st.input, ord).map_err(err)?, &st.order);
        let syz_leads: Vec<_> = syz.iter().filter_map(|s| s.lm(&st.order)).collect();
        ensure(same_monomial_submodule(&st.syz_lms, &syz_leads), || format!("seed {seed}: <H> differs"))?;
    }
    Ok(format!("{RANDOM_SYSTEMS} systems agree; {skips} syzygy skips in next_inv_basis"))
}

fn criterion_7() -> Outcome {
    for seed in 0..MONOMIAL_SETS {
        let n = 1 + (seed % 4) as usize;
        let set = random_monomials(seed, n, 6, 5);
        for kind in [DivisionKind::Janet, DivisionKind::Pommaret] {
            let v = check_division_axioms(&set, kind);
            ensure(v.is_empty(), || format!("seed {seed} {kind:?}: {v:?}"))?;
        }
    }
    Ok(format!("{MONOMIAL_SETS} sets, both divisions, all subsets"))
}

fn determinant_nonzero(m: &[Vec<involutive_core::Coeff>]) -> bool {
    let n = m.len();
    let mut a = m.to_vec();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return false;
        };
        a.swap(p, col);
        let pivot = a[col].clone();
        for row in a.iter_mut().skip(col + 1) {
            let f = &row[col] / &pivot[col];
            for (x, y) in row.iter_mut().zip(&pivot) {
                *x -= &f * y;
            }
        }
    }
    true
}

fn certify(input: &[Polynomial], ord: MonomialOrder, res: &QuasiStableResult) -> Result<(), String> {
    let ls = distinct_leads(&res.basis);
    ensure(test_pommaret(&ls, ord).map_err(|e| e.to_string())?.is_pass(), || "Test fails".into())?;
    ensure(bounded_completeness(&ls, DivisionKind::Pommaret, COMPLETENESS_EXTRA).is_none(), || {
        "Pommaret completeness fails".into()
    })?;
    let phi = &res.phi;
    ensure(determinant_nonzero(&phi.matrix), || "singular change".into())?;
    ensure(phi.then(&phi.inverse()).is_identity(), || "inverse does not undo the change".into())?;
    let moved = phi.apply_all(input, ord);
    ensure(phi.inverse().apply_all(&moved, ord) == input, || "inverse does not restore the input".into())?;
    ensure(ideal_equal(&res.basis, &moved, ord).map_err(|e| e.to_string())?, || "basis ideal differs".into())?;
    let d0 = ideal_dimension(input, ord).map_err(|e| e.to_string())?;
    let d1 = ideal_dimension(&moved, ord).map_err(|e| e.to_string())?;
    ensure(d0 == d1 && d1 == res.stats.dim, || format!("dims {d0}, {d1}, reported {}", res.stats.dim))
}

fn criterion_8(corpus: &[CorpusRun]) -> Outcome {
    let mut passes = 0usize;
    let mut changes = 0usize;
    let r = ring(&["x", "y", "z"], MonomialOrder::DegRevLex);
    let mut cases: Vec<(String, Vec<Polynomial>, MonomialOrder)> =
        vec![("xy, y^2, z".into(), polys(&r, &["x*y", "y^2", "z"]), r.order), ("x".into(), polys(&r, &["x"]), r.order)];
    for seed in 0..30u64 {
        let ord = ORDERS[seed as usize % 3];
        let sh = SystemShape { nvars: 1 + (seed % 3) as usize, max_gens: 3, ..SystemShape::default() };
        let f = homogenize(&random_system(seed, sh, ord), ord);
        cases.push((format!("random {seed}"), f, ord));
    }
    for (tag, f, ord) in &cases {
        let res = quasi_stable(f, *ord, QuasiStableOptions::default()).map_err(|e| format!("{tag}: {e}"))?;
        certify(f, *ord, &res).map_err(|e| format!("{tag}: {e}"))?;
        passes += 1;
        changes += res.stats.lin;
    }
    for run in corpus {
        certify(&run.input, run.ord, &run.result).map_err(|e| format!("{}: {e}", run.label))?;
        passes += 1;
        changes += run.result.stats.lin;
    }
    Ok(format!("{passes} results certified ({} corpus), {changes} committed changes", corpus.len()))
}

fn criterion_9() -> Outcome {
    let mut files = involutive::commands::corpus_files(&corpus_dir()).map_err(|e| e.to_string())?;
    files.retain(|p| p.file_stem().is_some_and(|s| s != "butcher"));
    let mut notes = Vec::new();
    for path in files {
        let name = involutive::commands::system_name(&path);
        let sys = parse_system_file(&path).map_err(|e| format!("{name}: {e}"))?;
        let ord = sys.order();
        let kind = DivisionKind::Janet;
        let res = st_inv_basis(&sys.polys, kind, ord, SigOptions::default()).map_err(|e| format!("{name}: {e}"))?;
        let report = strong_basis_check(&res.pairs, &res.syz_lms, &res.input, kind, &res.order);
        ensure(report.is_empty(), || format!("{name}: {report:?}"))?;
        // an element whose lead is a minimal generator held by no other pair
        let ls = leads(&res.basis);
        let necessary = (0..ls.len()).find(|&i| ls.iter().enumerate().all(|(j, l)| j == i || !l.divides(&ls[i])));
        let i = necessary.ok_or_else(|| format!("{name}: no necessary element"))?;
        let mut mutated = res.pairs.clone();
        mutated.remove(i);
        let report = strong_basis_check(&mutated, &res.syz_lms, &res.input, kind, &res.order);
        ensure(!report.is_empty(), || format!("{name}: deleting pair {i} went unnoticed"))?;
        notes.push(format!("{name} {} pairs", res.pairs.len()));
    }
    Ok(notes.join(", "))
}

fn run(number: u32, title: &str, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    });
    let secs = start.elapsed().as_secs_f64();
    let (tag, detail) = match &outcome {
        Ok(d) => ("PASS", d),
        Err(d) => ("FAIL", d),
    };
    println!("criterion {number} {tag} {title} [{secs:.2}s]: {detail}");
    outcome.is_ok()
}

fn main() -> ExitCode {
    let only: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let wanted = |n: u32| only.is_empty() || only.contains(&n);
    let mut corpus = Vec::new();
    let mut results = Vec::new();
    let criteria: [(u32, &str); 9] = [
        (1, "Groebner basis and syzygies of the two-polynomial example"),
        (2, "Janet basis of <xy, y^2, z>, Pommaret non-termination"),
        (3, "six-polynomial Janet basis and its eight syzygies"),
        (4, "corpus dimensions under quasi-stable coordinates"),
        (5, "syzygy soundness on random systems"),
        (6, "oracle equivalence on random systems"),
        (7, "involutive division axioms on random monomial sets"),
        (8, "quasi-stable certification"),
        (9, "strong involutive basis certificates and mutation"),
    ];
    for (number, title) in criteria {
        if !wanted(number) {
            continue;
        }
        let ok = match number {
            1 => run(number, title, criterion_1),
            2 => run(number, title, criterion_2),
            3 => run(number, title, criterion_3),
            4 => run(number, title, || criterion_4(&mut corpus)),
            5 => run(number, title, criterion_5),
            6 => run(number, title, criterion_6),
            7 => run(number, title, criterion_7),
            8 => run(number, title, || criterion_8(&corpus)),
            _ => run(number, title, criterion_9),
        };
        results.push(ok);
    }
    let failed = results.iter().filter(|ok| !**ok).count();
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    let strict = std::env::var_os("ACCEPTANCE_STRICT").is_some_and(|v| v == "1");
    if failed == 0 || !strict {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
