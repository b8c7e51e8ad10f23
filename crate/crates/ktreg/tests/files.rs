use std::path::{Path, PathBuf};
use std::process::Command;

use ktreg::GraphFile;
use ktreg_core::graph::{cycle, hexagon_with_hub, ladder, octahedron, petersen, Graph};
use ktreg_core::oracle::corpus;
use serde_json::Value;

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn read(name: &str) -> GraphFile {
    GraphFile::read(&data_dir().join(name)).unwrap()
}

#[test]
fn data_files_hold_the_named_graphs() {
    let expect: [(&str, Graph); 5] = [
        ("petersen.txt", petersen()),
        ("octahedron.txt", octahedron()),
        ("ladder.txt", ladder()),
        ("hexagon_hub.txt", hexagon_with_hub()),
        ("c4.txt", cycle(4)),
    ];
    for (name, g) in expect {
        assert_eq!(read(name).graph, g, "{name}");
    }
    let ladder = read("ladder.txt");
    assert_eq!(ladder.resolve("b"), Some(2));
    assert_eq!(ladder.name_of(5), Some("e"));
}

#[test]
fn print_then_parse_round_trips() {
    for g in corpus() {
        let text = GraphFile::new(g.clone()).print();
        assert_eq!(GraphFile::parse(&text).unwrap().graph, g);
    }
    let named = read("ladder.txt");
    assert_eq!(GraphFile::parse(&named.print()).unwrap(), named);
}

fn schema() -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/report.schema.json");
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&doc).unwrap()
}

#[test]
fn reports_match_the_schema() {
    let validator = schema();
    let d = |n: &str| data_dir().join(n).to_str().unwrap().to_string();
    let runs: Vec<Vec<String>> = vec![
        vec!["enum".into(), "-k".into(), "0".into(), "-t".into(), "2".into(), d("petersen.txt")],
        vec!["find".into(), "-k".into(), "1".into(), "-t".into(), "1".into(), d("ladder.txt")],
        vec!["check".into(), "-k".into(), "1".into(), "-t".into(), "1".into(), "-s".into(), "b,e".into(), d("ladder.txt")],
        vec!["bounds".into(), "-k".into(), "0".into(), "-t".into(), "1".into(), d("c4.txt")],
        vec!["eds".into(), d("c4.txt")],
        vec!["dim".into(), d("petersen.txt")],
        vec!["matching".into(), d("k2.txt")],
        vec!["hamilton".into(), d("hexagon_hub.txt")],
        vec!["hamilton".into(), "--via-subdivision".into(), d("petersen.txt")],
        vec!["maxreg".into(), "-k".into(), "2".into(), d("octahedron.txt")],
        vec!["srg".into(), d("octahedron.txt")],
        vec!["spectrum".into(), d("ladder.txt")],
        vec!["join".into(), d("c4.txt"), d("c4.txt"), d("c4_pairs.blocks")],
        vec!["unicyclic".into(), "-n".into(), "4".into(), "-s".into(), "2".into()],
        vec!["find".into(), "-k".into(), "0".into(), "-t".into(), "1".into(), "/nonexistent".into()],
        vec!["--max-t".into(), "2".into(), "enum".into(), "-k".into(), "0".into(), "-t".into(), "2".into(), d("petersen.txt")],
        vec!["--timing".into(), "spectrum".into(), d("c4.txt")],
    ];
    for args in runs {
        let out = Command::new(env!("CARGO_BIN_EXE_ktreg")).arg("--json").args(&args).output().unwrap();
        let report: Value = serde_json::from_slice(&out.stdout).unwrap();
        let errors: Vec<String> = validator.iter_errors(&report).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
    }
}
