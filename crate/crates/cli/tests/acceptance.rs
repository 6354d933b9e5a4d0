//! Exit criteria. Prints one PASS/FAIL line per criterion and exits non-zero
//! if any criterion fails.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use girth4_core::bounds::closed_form_lower_bound;
use girth4_core::construction::{build_case_4k, build_case_4k_plus_2};
use girth4_core::graph::{Girth, Graph};
use girth4_core::kuratowski::find_subdivision;
use girth4_core::planarity::is_planar_edges;
use girth4_core::search::{search_decomposition, SearchConfig, SearchStatus};
use girth4_core::verification::verify;
use girth4_core::Decomposition;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

#[path = "../../core/tests/support/mod.rs"]
mod support;

const SWEEP_MAX_N: usize = 60;
const SWEEP_LIMIT: Duration = Duration::from_secs(10);
const RAMSEY_LIMIT: Duration = Duration::from_secs(1);
const K6_SEARCH_LIMIT: Duration = Duration::from_secs(60);
const K9_NODE_BUDGET: &str = "1e8";
const K9_SEED: &str = "0";
const K9_LIMIT: Duration = Duration::from_secs(600);
const PLANARITY_SAMPLES_ON_EIGHT: usize = 20_000;

type Verdict = Result<String, String>;

fn workspace_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn girth4_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_girth4")).args(args).current_dir(dir).output().expect("binary runs")
}

fn girth4(args: &[&str]) -> Output {
    girth4_in(&workspace_root(), args)
}

fn json(bytes: &[u8]) -> Result<Value, String> {
    serde_json::from_slice(bytes).map_err(|e| format!("bad JSON ({e}): {}", String::from_utf8_lossy(bytes)))
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn read_decomposition(path: &Path) -> Result<Decomposition, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Decomposition::from_json(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn expected_parts(n: usize) -> usize {
    match n {
        6 => 3,
        10 => 4,
        _ => closed_form_lower_bound(n),
    }
}

fn sweep() -> Verdict {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let start = Instant::now();
    for n in 1..=SWEEP_MAX_N {
        let out = dir.path().join(format!("k{n}.json"));
        let o = girth4(&["decompose", "--n", &n.to_string(), "--out", out.to_str().unwrap()]);
        check(o.status.success(), || format!("decompose --n {n} exited {:?}", o.status.code()))?;
        let d = read_decomposition(&out)?;
        check(d.girth_claim == 4, || format!("n={n}: girth_claim {}", d.girth_claim))?;
        let report = verify(&d);
        check(report.ok, || format!("n={n}: {:?}", report.violations))?;
        check(d.parts.len() == expected_parts(n), || format!("n={n}: {} parts, want {}", d.parts.len(), expected_parts(n)))?;
    }
    let took = start.elapsed();
    check(took < SWEEP_LIMIT, || format!("sweep took {took:?}, limit {SWEEP_LIMIT:?}"))?;
    Ok(format!("n=1..{SWEEP_MAX_N} verified in {took:.2?}"))
}

fn binom2(n: usize) -> usize {
    n * (n - 1) / 2
}

fn sizes() -> Verdict {
    for k in 2..=10 {
        let d = build_case_4k(k).map_err(|e| e.to_string())?;
        let mut want = vec![8 * k - 4; k];
        want.push(2 * k);
        check(d.part_sizes() == want, || format!("4k, k={k}: sizes {:?}", d.part_sizes()))?;
        check(want.iter().sum::<usize>() == binom2(4 * k), || format!("4k, k={k}: sum"))?;
    }
    for k in 3..=8 {
        let d = build_case_4k_plus_2(k).map_err(|e| e.to_string())?;
        let mut want = vec![8 * k; k];
        want.push(6 * k + 1);
        check(d.part_sizes() == want, || format!("4k+2, k={k}: sizes {:?}", d.part_sizes()))?;
        check(want.iter().sum::<usize>() == binom2(4 * k + 2), || format!("4k+2, k={k}: sum"))?;
    }
    Ok("4k for k=2..10 and 4k+2 for k=3..8 match exactly".into())
}

fn girths() -> Verdict {
    for k in 2..=10 {
        let d = build_case_4k(k).map_err(|e| e.to_string())?;
        let report = verify(&d);
        check(report.ok, || format!("4k, k={k}: {:?}", report.violations))?;
        for (i, r) in report.part_results.iter().enumerate() {
            let want = if i < k { Girth::Finite(4) } else { Girth::Infinite };
            check(r.girth == want, || format!("4k, k={k}, part {i}: girth {}", r.girth))?;
        }
    }
    for k in 3..=8 {
        let d = build_case_4k_plus_2(k).map_err(|e| e.to_string())?;
        let report = verify(&d);
        check(report.ok, || format!("4k+2, k={k}: {:?}", report.violations))?;
        for (i, r) in report.part_results.iter().take(k).enumerate() {
            check(r.girth == Girth::Finite(4), || format!("4k+2, k={k}, part {i}: girth {}", r.girth))?;
        }
    }
    Ok("chain and hub parts have girth 4, matchings are acyclic".into())
}

fn k6_lower_bound() -> Verdict {
    let start = Instant::now();
    let o = girth4(&["ramsey-k6"]);
    let ramsey_took = start.elapsed();
    let v = json(&o.stdout)?;
    check(v["total_colorings"] == 32768 && v["triangle_free"] == 0, || format!("ramsey-k6 reported {v}"))?;
    check(ramsey_took < RAMSEY_LIMIT, || format!("ramsey-k6 took {ramsey_took:?}"))?;

    let start = Instant::now();
    let o = girth4(&["search", "--n", "6", "--parts", "2", "--girth", "4"]);
    let search_took = start.elapsed();
    let v = json(&o.stdout)?;
    check(v["status"] == "ExhaustedNoSolution" && o.status.code() == Some(3), || format!("search 6/2 reported {v}"))?;
    check(search_took < K6_SEARCH_LIMIT, || format!("search 6/2 took {search_took:?}"))?;

    let o = girth4(&["decompose", "--n", "6"]);
    let v = json(&o.stdout)?;
    check(o.status.success() && v["parts"].as_array().map(Vec::len) == Some(3), || "decompose --n 6 is not 3 parts".into())?;
    Ok(format!("(32768, 0) in {ramsey_took:.2?}; 2 parts exhausted in {search_took:.2?}; 3 parts verified"))
}

fn k9() -> Verdict {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let out = dir.path().join("k9.json");
    let start = Instant::now();
    let o = girth4(&[
        "search", "--n", "9", "--parts", "3", "--girth", "4", "--node-budget", K9_NODE_BUDGET, "--seed", K9_SEED, "--out",
        out.to_str().unwrap(),
    ]);
    let took = start.elapsed();
    let v = json(&o.stdout)?;
    check(v["status"] == "Found" && o.status.code() == Some(0), || format!("search 9/3 reported {v}"))?;
    check(took < K9_LIMIT, || format!("search 9/3 took {took:?}"))?;
    let d = read_decomposition(&out)?;
    let report = verify(&d);
    check(report.ok && d.parts.len() == 3, || format!("{:?}", report.violations))?;
    Ok(format!("seed {K9_SEED}: found after {} nodes in {took:.2?}, verified", v["stats"]["nodes"]))
}

fn k10() -> Verdict {
    let o = girth4(&["bound", "--n", "10"]);
    let v = json(&o.stdout)?;
    check(v["lower_bound"] == 3, || format!("bound --n 10 reported {v}"))?;
    let o = girth4(&["decompose", "--n", "10"]);
    let d = Decomposition::from_json(&String::from_utf8_lossy(&o.stdout)).map_err(|e| e.to_string())?;
    check(verify(&d).ok && d.parts.len() == 4, || "decompose --n 10 is not a verified 4-part decomposition".into())?;

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let o = girth4_in(dir.path(), &["k10"]);
    let v = json(&o.stdout)?;
    let log = fs::read_to_string(dir.path().join("k10-log.jsonl")).map_err(|e| format!("k10 log: {e}"))?;
    let record = json(log.lines().last().unwrap_or("").as_bytes())?;
    check(record["status"] == v["status"], || format!("log status {} != outcome status {}", record["status"], v["status"]))?;
    check(v["status"] == "BudgetExceeded" && o.status.code() == Some(4), || {
        format!(
            "bracket 3 <= theta <= 4 holds and the run is logged, but the default-budget run ended {} after {} nodes (exit {:?}), not BudgetExceeded",
            v["status"],
            v["stats"]["nodes"],
            o.status.code()
        )
    })?;
    Ok(format!("bracket 3 <= theta <= 4; default-budget run BudgetExceeded after {} nodes, logged", v["stats"]["nodes"]))
}

fn lr_planar(g: &Graph) -> bool {
    is_planar_edges(g.order(), &g.edges().collect::<Vec<_>>())
}

/// Exhaustive up to 7 vertices, sampled on 8.
fn oracles() -> Verdict {
    let mut girth_checked = 0u64;
    let mut planarity_checked = 0u64;
    for n in 1..=7 {
        for mask in 0..1u64 << binom2(n) {
            let g = support::graph_from_mask(n, mask);
            check(g.girth() == support::girth_by_enumeration(&g), || format!("girth differs: n={n} mask={mask:#x}"))?;
            girth_checked += 1;
            check(lr_planar(&g) == find_subdivision(&g).is_none(), || format!("planarity differs: n={n} mask={mask:#x}"))?;
            planarity_checked += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..PLANARITY_SAMPLES_ON_EIGHT {
        let n = 8;
        let density: f64 = rng.gen_range(0.2..0.8);
        let edges: Vec<(usize, usize)> =
            (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|_| rng.gen_bool(density)).collect();
        let g = Graph::from_edges(n, edges).unwrap();
        check(lr_planar(&g) == find_subdivision(&g).is_none(), || format!("planarity differs on {:?}", g.edges().collect::<Vec<_>>()))?;
        planarity_checked += 1;
    }
    let cases = support::enumerable_cases();
    for &(n, t, g) in &cases {
        let expected = support::exists_by_enumeration(n, t, g);
        for symmetry_breaking in [true, false] {
            let mut cfg = SearchConfig::new(n, t, g);
            cfg.symmetry_breaking = symmetry_breaking;
            let s = search_decomposition(&cfg).map_err(|e| e.to_string())?.status;
            let agrees = match s {
                SearchStatus::Found => expected,
                SearchStatus::ExhaustedNoSolution => !expected,
                SearchStatus::BudgetExceeded => false,
            };
            check(agrees, || format!("search n={n} t={t} g={g} symmetry={symmetry_breaking}: {s:?}, enumeration {expected}"))?;
        }
    }
    Ok(format!(
        "girth {girth_checked} graphs, planarity {planarity_checked} graphs, search {} configurations: all agree",
        cases.len()
    ))
}

fn determinism() -> Verdict {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let d = dir.path();
    let file = |name: &str| d.join(name).to_str().unwrap().to_owned();
    let (a, b) = (file("a.json"), file("b.json"));
    let verify_target = file("k13.json");
    girth4(&["decompose", "--n", "13", "--out", &verify_target]);
    // "{out}" is replaced by a distinct file per run
    let runs: [&[&str]; 8] = [
        &["bound", "--n", "41"],
        &["decompose", "--n", "33"],
        &["decompose", "--n", "18", "--format", "dot", "--labels", "paper"],
        &["decompose", "--n", "21", "--out", "{out}"],
        &["verify", "--in", &verify_target],
        &["search", "--n", "9", "--parts", "3", "--seed", "7", "--out", "{out}"],
        &["search", "--n", "10", "--parts", "3", "--node-budget", "1e5"],
        &["ramsey-k6"],
    ];
    for args in runs {
        let with = |target: &str| -> Vec<String> { args.iter().map(|s| s.replace("{out}", target)).collect() };
        let (first, second) = (with(&a), with(&b));
        let o1 = girth4(&first.iter().map(String::as_str).collect::<Vec<_>>());
        let o2 = girth4(&second.iter().map(String::as_str).collect::<Vec<_>>());
        check(o1.stdout == o2.stdout && o1.status == o2.status, || format!("stdout differs for {args:?}"))?;
        if args.contains(&"{out}") {
            check(fs::read(&a).ok() == fs::read(&b).ok(), || format!("--out files differ for {args:?}"))?;
        }
    }
    Ok(format!("{} commands byte-identical across two runs", runs.len()))
}

type Criterion = (&'static str, fn() -> Verdict);

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 construction sweep", sweep),
        ("2 part sizes", sizes),
        ("3 part girths", girths),
        ("4 K_6 lower bound", k6_lower_bound),
        ("5 K_9 in three parts", k9),
        ("6 K_10 bracket and budgeted run", k10),
        ("7 oracle agreement", oracles),
        ("8 determinism", determinism),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
