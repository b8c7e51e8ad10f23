//! Acceptance criteria. Runs without the test harness and prints one
//! PASS/FAIL line per criterion; exits non-zero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use serde_json::Value;

use ktreg_core::graph::{
    induces_connected, is_kt_regular, ladder, octahedron, petersen, Graph, VertexSet,
};
use ktreg_core::linalg::{
    characteristic_vector, eigenvalue_of, int, integer_eigen_multiplicity, Rational, RationalMatrix,
};
use ktreg_core::oracle::{self, corpus};
use ktreg_core::solver::enumerate_kt_sets;
use ktreg_core::spectral::{
    eigenvector_from_two_sets, is_main, main_eigenvalue_from_solution, nonmain_criterion, spectrum,
};
use ktreg_core::structures::{
    self, hamiltonian_cycle, hamiltonian_via_subdivision, is_hamilton_cycle, srg_check,
    srg_stable_set_size,
};
use ktreg_core::Solver;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn data(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name);
    p.to_str().unwrap().to_string()
}

fn cli(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_ktreg"))
        .arg("--json")
        .args(args)
        .output()
        .expect("binary runs");
    let report = serde_json::from_slice(&out.stdout).expect("json report");
    (out.status.code().unwrap_or(-1), report)
}

fn vertex_lists(report: &Value) -> Vec<Vec<usize>> {
    report["certificates"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| {
            c["vertices"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap() as usize).collect()
        })
        .collect()
}

fn sorted(mut sets: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    sets.sort();
    sets
}

fn set(n: usize, members: &[usize]) -> VertexSet {
    VertexSet::new(n, members.iter().copied()).unwrap()
}

fn members(g: &Graph, k: usize, t: usize) -> Vec<Vec<usize>> {
    enumerate_kt_sets(g, k, t).unwrap().into_iter().map(|c| c.set.members().to_vec()).collect()
}

fn petersen_tables() -> Outcome {
    let start = Instant::now();
    let file = data("petersen.txt");
    let (code, r02) = cli(&["enum", "-k", "0", "-t", "2", &file]);
    ensure!(code == 0, "enum (0,2) exit {code}");
    let (code, r13) = cli(&["enum", "-k", "1", "-t", "3", &file]);
    ensure!(code == 0, "enum (1,3) exit {code}");
    let elapsed = start.elapsed();

    let s1 = sorted(vertex_lists(&r02));
    let s2 = sorted(vertex_lists(&r13));
    let table1 = sorted(vec![
        vec![4, 5, 7, 10],
        vec![3, 5, 8, 9],
        vec![2, 6, 7, 9],
        vec![1, 6, 8, 10],
        vec![1, 2, 3, 4],
    ]);
    let table2 = sorted(vec![
        vec![5, 6, 7, 8, 9, 10],
        vec![2, 3, 4, 5, 7, 9],
        vec![1, 3, 4, 5, 8, 10],
        vec![1, 2, 3, 6, 8, 9],
        vec![1, 2, 4, 6, 7, 10],
    ]);
    ensure!(s1 == table1, "(0,2) sets {s1:?}");
    ensure!(s2 == table2, "(1,3) sets {s2:?}");
    let complements = sorted(s1.iter().map(|s| set(10, s).complement().members().to_vec()).collect());
    ensure!(complements == s2, "(1,3) sets are not the complements of the (0,2) sets");
    ensure!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    Ok(format!("5 + 5 sets match the tables, complements pair up, {:.0} ms", elapsed.as_secs_f64() * 1e3))
}

fn particular_solutions() -> Outcome {
    let file = data("petersen.txt");
    let (_, r02) = cli(&["enum", "-k", "0", "-t", "2", &file]);
    let (_, r13) = cli(&["enum", "-k", "1", "-t", "3", &file]);
    let a = &r02["diagnostics"]["predicted_cardinality"];
    let b = &r13["diagnostics"]["predicted_cardinality"];
    ensure!(a == "4" && b == "6", "e'x = {a}, {b}");
    Ok("e'x = 4 and 6".into())
}

fn octahedron_example() -> Outcome {
    let g = octahedron();
    let report = spectrum(&g);
    let got: Vec<(Option<i64>, usize)> =
        report.eigenvalues.iter().map(|e| (e.exact_integer, e.multiplicity)).collect();
    ensure!(got == vec![(Some(4), 1), (Some(0), 3), (Some(-2), 2)], "spectrum {got:?}");
    let a = RationalMatrix::adjacency(&g);
    for (l, m) in [(4, 1), (0, 3), (-2, 2)] {
        ensure!(integer_eigen_multiplicity(&a, l).unwrap() == m, "multiplicity of {l}");
    }

    let (code, r) = cli(&["maxreg", "-k", "2", &data("octahedron.txt")]);
    ensure!(code == 0, "maxreg exit {code}");
    ensure!(r["certificates"][0]["maximum"] == true, "not flagged maximum");
    let s = set(6, &vertex_lists(&r)[0]);
    ensure!(s.len() == 4, "size {}", s.len());
    ensure!(is_kt_regular(&g, &s, 2, 4), "{s:?} is not (2,4)-regular");
    ensure!(induces_connected(&g, &s).unwrap(), "{s:?} does not induce a 4-cycle");
    let best = oracle::brute_force_max_regular_induced(&g, 2).unwrap();
    ensure!(best.len() == 4, "oracle maximum {}", best.len());

    let p = srg_check(&g).ok_or("not strongly regular")?;
    ensure!((p.n, p.p, p.a, p.c) == (6, 4, 2, 4) && !p.is_primitive(), "srg {p:?}");
    Ok(format!("spectrum 4^1 0^3 (-2)^2, maximum set {:?}, srg (6,4,2,4) imprimitive", s.members()))
}

fn ladder_example() -> Outcome {
    let g = ladder();
    let s2 = 2f64.sqrt();
    let want = [1.0 + s2, 1.0, -1.0 + s2, 1.0 - s2, -1.0, -1.0 - s2];
    let got = spectrum(&g).values();
    ensure!(got.len() == 6, "{} eigenvalues", got.len());
    for (x, w) in got.iter().zip(want) {
        ensure!((x - w).abs() < 1e-9, "eigenvalue {x} vs {w}");
    }

    let a = RationalMatrix::adjacency(&g);
    ensure!(integer_eigen_multiplicity(&a, 0).unwrap() == 0, "0 is an eigenvalue");
    let solver = Solver::new(&g);
    let sys = solver.prepare(1, 1).unwrap();
    ensure!(sys.t() == 0, "t = {} on the (1,1) query", sys.t());
    let be = sys.find().unwrap().ok_or("no (1,1) set")?;
    ensure!(be.set.members() == [2, 5], "(1,1) set {:?}", be.set.members());

    let expect = [
        ((2, 1), vec![vec![1, 2, 5, 6], vec![2, 3, 4, 5]]),
        ((1, 2), vec![vec![1, 3, 4, 6]]),
        ((0, 1), vec![vec![1, 4], vec![3, 6]]),
    ];
    for ((k, t), sets) in expect {
        let got = sorted(members(&g, k, t));
        ensure!(got == sets, "({k},{t}) sets {got:?}");
    }

    let ints = |v: &[i64]| v.iter().map(|&x| int(x)).collect::<Vec<Rational>>();
    let u = eigenvector_from_two_sets(&g, (&set(6, &[1, 2, 5, 6]), 2, 1), (&set(6, &[2, 3, 4, 5]), 2, 1))
        .map_err(|e| e.to_string())?;
    ensure!(u == ints(&[1, 0, -1, -1, 0, 1]), "first vector {u:?}");
    let w = eigenvector_from_two_sets(&g, (&set(6, &[1, 4]), 0, 1), (&set(6, &[3, 6]), 0, 1))
        .map_err(|e| e.to_string())?;
    ensure!(w == ints(&[1, 0, -1, 1, 0, -1]), "second vector {w:?}");
    Ok("spectrum, {b,e} with t=0, listed sets and both eigenvectors reproduced".into())
}

fn structure_detections() -> Outcome {
    let (code, r) = cli(&["eds", &data("c4.txt")]);
    ensure!(code == 1 && r["status"] == "not_found", "C4 eds exit {code}");

    let (code, r) = cli(&["hamilton", &data("hexagon_hub.txt")]);
    ensure!(code == 0, "H hamilton exit {code}");
    let edges = &r["certificates"][0]["edges"];
    let a_to_g = serde_json::json!([[1, 2], [1, 6], [2, 3], [3, 4], [4, 5], [5, 7], [6, 7]]);
    ensure!(*edges == a_to_g, "H cycle edges {edges}");
    ensure!(r["certificates"][0]["cycle"].as_array().map(Vec::len) == Some(7), "not a 7-cycle");

    let graphs: Vec<Graph> = corpus().into_iter().filter(|g| g.n() >= 3).collect();
    let step = graphs.len() / 30;
    let sample: Vec<&Graph> = graphs.iter().step_by(step).take(30).collect();
    ensure!(sample.len() == 30, "sample of {}", sample.len());
    let mut hamiltonian = 0;
    for g in &sample {
        let line = hamiltonian_cycle(g).map_err(|e| e.to_string())?.cycle;
        let sub = hamiltonian_via_subdivision(g).map_err(|e| e.to_string())?.cycle;
        let truth = oracle::is_hamiltonian(g).unwrap();
        ensure!(line.is_some() == sub.is_some(), "paths disagree on {:?}", g.edges());
        ensure!(line.is_some() == truth, "oracle disagrees on {:?}", g.edges());
        for c in line.iter().chain(&sub) {
            ensure!(is_hamilton_cycle(g, c), "bad cycle {c:?}");
        }
        hamiltonian += truth as usize;
    }

    let start = Instant::now();
    let p = hamiltonian_cycle(&petersen()).map_err(|e| e.to_string())?;
    let q = hamiltonian_via_subdivision(&petersen()).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure!(p.cycle.is_none() && q.cycle.is_none(), "Petersen reported Hamiltonian");
    ensure!(elapsed < Duration::from_secs(60), "Petersen took {elapsed:?}");
    Ok(format!(
        "C4 no eds, H cycle a-g, 30-graph agreement ({hamiltonian} Hamiltonian), Petersen none (t={} in L, {} candidates, {:.0} ms)",
        p.t,
        p.candidates,
        elapsed.as_secs_f64() * 1e3
    ))
}

fn srg_petersen() -> Outcome {
    let p = srg_check(&petersen()).ok_or("Petersen not strongly regular")?;
    ensure!((p.n, p.p, p.a, p.c) == (10, 3, 0, 1) && p.is_primitive(), "{p:?}");
    let size = srg_stable_set_size(p.p, 2, p.c).map_err(|e| e.to_string())?;
    ensure!(size == int(4), "formula gives {size}");
    let s1 = enumerate_kt_sets(&petersen(), 0, 2).unwrap();
    ensure!(s1.iter().all(|c| c.set.len() == 4), "|S1| differs from 4");
    Ok("(10,3,0,1) primitive; stable-set formula 4 = |S1|".into())
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let graphs = corpus();
    let mut queries = 0;
    for g in &graphs {
        let d = g.max_degree();
        for k in 0..=d {
            for t in 1..=d {
                let got: Vec<VertexSet> =
                    enumerate_kt_sets(g, k, t).unwrap().into_iter().map(|c| c.set).collect();
                let want = oracle::brute_force_kt_sets(g, k, t).unwrap();
                ensure!(got == want, "({k},{t}) on {:?}", g.edges());
                queries += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(600), "sweep took {elapsed:?}");
    Ok(format!("{} graphs, {queries} queries, {:.1} s", graphs.len(), elapsed.as_secs_f64()))
}

fn spectral_consistency() -> Outcome {
    let graphs = corpus();
    let mut certificates = 0;
    let mut formula_checks = 0;
    let mut criterion_checks = 0;
    for g in &graphs {
        let report = spectrum(g);
        ensure!(
            g.regularity().is_some() == (report.main_count() == 1),
            "main count {} on {:?}",
            report.main_count(),
            g.edges()
        );
        let a = RationalMatrix::adjacency(g);
        let ints: Vec<i64> = report.eigenvalues.iter().filter_map(|e| e.exact_integer).collect();
        let d = g.max_degree();
        let mut formula_done = false;
        for k in 0..=d {
            for t in 1..=d {
                let lambda = k as i64 - t as i64;
                let found = enumerate_kt_sets(g, k, t).unwrap();
                if is_main(g, lambda) == Ok(true) {
                    ensure!(found.is_empty(), "main {lambda} yet sets exist on {:?}", g.edges());
                }
                if let (Some(p), Some(c)) = (g.regularity(), found.first()) {
                    if c.set.len() < g.n() {
                        let shift = Rational::new((t as i64).into(), ((p + t - k) as i64).into());
                        let v: Vec<Rational> =
                            characteristic_vector(&c.set).iter().map(|x| x - &shift).collect();
                        ensure!(
                            eigenvalue_of(&a, &v) == Some(int(lambda)),
                            "eigenvector membership fails on {:?}",
                            g.edges()
                        );
                        certificates += 1;
                    }
                    if !formula_done {
                        let sys = Solver::new(g).prepare(k, t).unwrap();
                        let ones = vec![int(1); g.n()];
                        let mu = main_eigenvalue_from_solution(g, &ones, sys.particular(), k, t)
                            .map_err(|e| e.to_string())?;
                        ensure!(mu == int(p as i64), "formula gives {mu} on {:?}", g.edges());
                        formula_checks += 1;
                        formula_done = true;
                    }
                }
                if let Some(c) = found.first() {
                    for &l in &ints {
                        let crit = nonmain_criterion(g, &c.set, k, t, l).map_err(|e| e.to_string())?;
                        ensure!(crit == !is_main(g, l).unwrap(), "criterion at {l} on {:?}", g.edges());
                        criterion_checks += 1;
                    }
                }
            }
        }
    }
    Ok(format!(
        "{} graphs; {certificates} eigenvector checks, {formula_checks} main-eigenvalue formula checks, {criterion_checks} criterion checks",
        graphs.len()
    ))
}

fn design_join_family() -> Outcome {
    let mut worst: f64 = 0.0;
    for n in 3..=5 {
        for s in 1..=3 {
            let g = structures::pendant_unicyclic(n, s).map_err(|e| e.to_string())?;
            let pendants = VertexSet::new(g.n(), 1..=s * n).unwrap();
            ensure!(is_kt_regular(&g, &pendants, 0, s), "pendant side ({n},{s})");
            ensure!(is_kt_regular(&g, &pendants.complement(), 2, 1), "cycle side ({n},{s})");
            let mains: Vec<f64> = spectrum(&g).main_eigenvalues().map(|e| e.value).collect();
            ensure!(mains.len() == 2, "({n},{s}) has {} main eigenvalues", mains.len());
            let r = (1.0 + s as f64).sqrt();
            let want = [1.0 + r, 1.0 - r];
            for (x, w) in mains.iter().zip(want) {
                worst = worst.max((x - w).abs());
                ensure!((x - w).abs() < 1e-9, "({n},{s}) main {x} vs {w}");
            }
            let formula = structures::main_eigenvalues_of_join(0, 2, s as u64, 1);
            ensure!((formula.plus() - want[0]).abs() < 1e-12, "formula ({n},{s})");
        }
    }
    Ok(format!("9 graphs, two main eigenvalues each, max deviation {worst:.1e}"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("Petersen enumeration", petersen_tables),
        ("particular solutions", particular_solutions),
        ("octahedron", octahedron_example),
        ("ladder", ladder_example),
        ("structure detections", structure_detections),
        ("strongly regular Petersen", srg_petersen),
        ("oracle equivalence", oracle_equivalence),
        ("spectral consistency", spectral_consistency),
        ("design join", design_join_family),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|p| Err(format!("panicked: {:?}", p.downcast_ref::<String>())));
        match result {
            Ok(detail) => println!("PASS  {}. {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {}. {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
