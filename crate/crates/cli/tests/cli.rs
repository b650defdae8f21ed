use std::path::PathBuf;
use std::process::{Command, Output};

use graphmml::context::{chain_information, conditional_table, information_content, ContextModel};
use graphmml::samples::{k33, near_k33, utility_degrees, CONNECTIONS, DRUGS};
use graphmml::smiles::{molecule_model, read_molecule, ValenceConfig};

fn data(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name]
        .iter()
        .collect();
    path.display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_graphmml"))
        .args(args)
        .env_remove("GRAPHMML_DEPTH")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .skip(1)
        .map(|l| l.split('\t').map(String::from).collect())
        .collect()
}

fn drugs() -> Vec<(String, graphmml::smiles::Molecule)> {
    let config = ValenceConfig::default();
    DRUGS
        .iter()
        .map(|(n, s)| (n.to_string(), read_molecule(s, &config).unwrap().0))
        .collect()
}

#[test]
fn info_matches_library_for_utility_graphs() {
    let k33_file = data("k33.graph");
    let near_file = data("near_k33.graph");
    let flags = ["--valence", "Utility=4", "--valence", "House=4"];
    let mut args = vec!["info", &k33_file, "--given", &near_file];
    args.extend(flags);
    let out = stdout(&args);
    let model = ContextModel::new(utility_degrees(), CONNECTIONS);
    let expected = information_content(&k33(), &[near_k33()], &model)
        .unwrap()
        .total;
    assert_eq!(
        rows(&out),
        vec![vec![
            "k33".to_string(),
            format!("{:.6}", expected.0),
            "6".to_string(),
            "9".to_string(),
        ]]
    );
}

#[test]
fn table_and_chain_match_library() {
    let smi = data("drugs.smi");
    let model = molecule_model(&ValenceConfig::default());
    let graphs = drugs();

    let table = conditional_table(&graphs, &model).unwrap();
    let out = stdout(&["table", &smi]);
    assert_eq!(
        out.lines().next().unwrap(),
        "name\tviagra\tcialis\tvalium\txanax"
    );
    for (i, row) in rows(&out).iter().enumerate() {
        assert_eq!(row[0], DRUGS[i].0);
        let expected: Vec<String> = table.cells[i]
            .iter()
            .map(|b| format!("{:.6}", b.0))
            .collect();
        assert_eq!(row[1..], expected[..]);
    }

    let chain = chain_information(&graphs, &model).unwrap();
    let out = stdout(&["chain", &smi]);
    let rows = rows(&out);
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[0][1], "-");
    assert_eq!(rows[2][1], "viagra,cialis");
    assert_eq!(rows[4][0], "total");
    assert_eq!(rows[4][2], format!("{:.6}", chain.total.0));
}

#[test]
fn depth_flag_and_env_agree() {
    let smi = data("drugs.smi");
    let flag = stdout(&["info", &smi, "--depth", "1"]);
    let env = Command::new(env!("CARGO_BIN_EXE_graphmml"))
        .args(["info", &smi])
        .env("GRAPHMML_DEPTH", "1")
        .output()
        .unwrap();
    assert_eq!(flag.as_bytes(), env.stdout);
    let model = molecule_model(&ValenceConfig::default()).with_depth(1);
    let valium = &drugs()[2].1;
    let expected = information_content(valium, &[], &model).unwrap().total;
    assert_eq!(rows(&flag)[2][1], format!("{:.6}", expected.0));
}

#[test]
fn steps_sum_to_total() {
    let smi = data("drugs.smi");
    let totals = rows(&stdout(&["info", &smi]));
    let steps = rows(&stdout(&["info", &smi, "--steps"]));
    for total in &totals {
        let sum: f64 = steps
            .iter()
            .filter(|r| r[0] == total[0])
            .map(|r| r[4].parse::<f64>().unwrap())
            .sum();
        let expected: f64 = total[1].parse().unwrap();
        // Each printed step is rounded to 1e-6.
        assert!(
            (sum - expected).abs() < 1e-4,
            "{} {sum} {expected}",
            total[0]
        );
    }
}

#[test]
fn disconnected_graphs_sum_components() {
    let two = data("two_edges.graph");
    let one = data("edge.graph");
    let two_bits: f64 = rows(&stdout(&["info", &two]))[0][1].parse().unwrap();
    let one_bits: f64 = rows(&stdout(&["info", &one]))[0][1].parse().unwrap();
    assert!((two_bits - 2.0 * one_bits).abs() < 1e-9);
    let out = run(&["table", &two, &one]);
    assert_eq!(out.status.code(), Some(6));
}

#[test]
fn human_format() {
    let out = stdout(&["table", &data("drugs.smi"), "--format", "human"]);
    let first = out.lines().nth(1).unwrap();
    assert!(first.starts_with("viagra"));
    assert!(first.contains('(') && first.contains(')'));
    assert!(!first.contains('\t'));
}

#[test]
fn tree_commands() {
    assert_eq!(stdout(&["tree", "encode", "strict", "(L)"]), "L\n");
    assert_eq!(
        stdout(&["tree", "encode", "strict", "(F (L) (L))"]),
        "FLL\n"
    );
    assert_eq!(stdout(&["tree", "decode", "general", "duduu"]), "(() ())\n");
    assert_eq!(stdout(&["tree", "encode", "general", "(() ())"]), "duduu\n");
    assert_eq!(
        run(&["tree", "decode", "strict", "FLX"]).status.code(),
        Some(3)
    );
}

#[test]
fn ordering_examples() {
    let out = stdout(&[
        "ordering",
        &data("c4.graph"),
        &data("k4.graph"),
        &data("edge.graph"),
        &data("square_diagonal.graph"),
        &data("wb_square.graph"),
    ]);
    let rows = rows(&out);
    let summary: Vec<(&str, &str, &str)> = rows
        .iter()
        .map(|r| (r[0].as_str(), r[2].as_str(), r[3].as_str()))
        .collect();
    assert_eq!(
        summary,
        [
            ("c4", "8", "1.584963"),
            ("k4", "24", "0.000000"),
            ("edge", "2", "0.000000"),
            ("square_diagonal", "4", "2.584963"),
            ("wb_square", "4", "2.584963"),
        ]
    );
    let out = run(&["ordering", &data("c4.graph"), "--limit", "3"]);
    assert_eq!(out.status.code(), Some(5));
}

#[test]
fn parse_dumps_edge_lists() {
    let out = stdout(&["parse", "--smiles", "C=O"]);
    assert_eq!(out, "# smiles\nundirected\nv 0 C\nv 1 O\ne 0 1 =\n");
    let out = stdout(&["parse", &data("drugs.smi")]);
    assert_eq!(out.matches("# ").count(), 4);
    assert_eq!(
        out.lines().filter(|l| l.starts_with("v ")).count(),
        32 + 29 + 20 + 22
    );
}

#[test]
fn exit_codes() {
    let missing = data("no_such_file.graph");
    let out = run(&["info", &missing]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no_such_file.graph"));

    assert_eq!(
        run(&["info", &data("k33.graph"), "--given", &data("drugs.smi")])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["info", &data("broken.smi")]).status.code(), Some(3));
    assert_eq!(
        run(&["info", &data("hypervalent.smi")]).status.code(),
        Some(4)
    );
    assert_eq!(
        run(&["info", &data("drugs.smi"), "--valence", "C=0"])
            .status
            .code(),
        Some(4)
    );
    assert_eq!(
        run(&["info", &data("drugs.smi"), "--valence", "Xx=2"])
            .status
            .code(),
        Some(4)
    );
    // Clap's own usage errors also exit with 2.
    assert_eq!(run(&["info"]).status.code(), Some(2));
}

#[test]
fn valence_config_then_flags() {
    let smi = data("drugs.smi");
    let config = data("nitrogen2.valence");
    assert_eq!(
        run(&["info", &smi, "--valence-config", &config])
            .status
            .code(),
        Some(4)
    );
    let out = run(&[
        "info",
        &smi,
        "--valence-config",
        &config,
        "--valence",
        "N=3",
    ]);
    assert!(out.status.success());

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("wide.valence");
    std::fs::write(&path, "# wider carbon\nC=5\n").unwrap();
    let wide = stdout(&["info", &smi, "--valence-config", path.to_str().unwrap()]);
    let plain = stdout(&["info", &smi]);
    assert_ne!(wide, plain);
    let mut config = ValenceConfig::default();
    config.set(graphmml::smiles::Element::Carbon, 5);
    let model = molecule_model(&config);
    let expected = information_content(&drugs()[0].1, &[], &model)
        .unwrap()
        .total;
    assert_eq!(rows(&wide)[0][1], format!("{:.6}", expected.0));
}

#[test]
fn repeated_runs_are_identical() {
    let smi = data("drugs.smi");
    for args in [
        vec!["table", &smi],
        vec!["chain", &smi],
        vec!["info", &smi, "--steps"],
    ] {
        let a = stdout(&args);
        let b = stdout(&[&args[..], &["--jobs", "1"]].concat());
        assert_eq!(a, b);
    }
}
