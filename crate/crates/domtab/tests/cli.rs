use std::io::Write;
use std::process::{Command, Output, Stdio};

use domtab::core::{
    apply_word, domino_from_tableau, enumerate_domino, enumerate_tableaux, kostka, kostka2,
    parse_word, Bounds, DominoWeight, Partition, Tableau, Weight,
};
use domtab::format::{render_domino, DominoJson, ReportJson, TableauJson};
use domtab::harness;

fn domtab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_domtab"))
        .args(args)
        .output()
        .unwrap()
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_domtab"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn grid(rows: &[&[usize]], n: usize) -> Tableau {
    Tableau::from_grid(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>(), n).unwrap()
}

fn part(p: &[usize]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

#[test]
fn apply_matches_library() {
    let o = domtab(&[
        "apply",
        "--n",
        "3",
        "--word",
        "t1 t2 t1",
        "--grid",
        "[[1,2],[3]]",
    ]);
    assert_eq!(code(&o), 0);
    let t = grid(&[&[1, 2], &[3]], 3);
    let expect = apply_word(&parse_word("S", 3).unwrap(), &t).unwrap();
    assert_eq!(stdout(&o), format!("{expect}\n"));

    let o = domtab(&[
        "apply",
        "--json",
        "--n",
        "3",
        "--word",
        "t1 t2 t1",
        "--grid",
        "[[1,2],[3]]",
    ]);
    let back: TableauJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(back.to_tableau().unwrap(), expect);
}

#[test]
fn apply_empty_word_and_errors() {
    let o = domtab(&["apply", "--word", "", "--n", "2", "--grid", "[[1,2]]"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "1 2\n"));
    let o = domtab(&["apply", "--word", "t9", "--n", "3", "--grid", "[[1]]"]);
    assert_eq!(code(&o), 2);
    assert!(!o.stderr.is_empty());
    assert_eq!(
        code(&domtab(&[
            "apply", "--word", "t1", "--n", "2", "--grid", "[[2,1]]"
        ])),
        2
    );
    assert_eq!(
        code(&domtab(&["apply", "--word", "t1", "--grid", "[[1]]"])),
        2
    );
}

#[test]
fn tableau_sources() {
    let json = r#"{"n": 3, "chain": [[], [1], [2], [2,1]]}"#;
    let inline = domtab(&["apply", "--word", "P", "--tableau", json]);
    assert_eq!(code(&inline), 0);
    let piped = with_stdin(&["apply", "--word", "P", "--tableau", "-"], json);
    assert_eq!(stdout(&piped), stdout(&inline));
    let path = std::env::temp_dir().join(format!("domtab-cli-{}.json", std::process::id()));
    std::fs::write(&path, json).unwrap();
    let file = domtab(&["apply", "--word", "P", "--tableau", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(stdout(&file), stdout(&inline));
    assert_eq!(
        code(&domtab(&[
            "apply",
            "--word",
            "P",
            "--tableau",
            "/nonexistent/x.json"
        ])),
        2
    );
}

#[test]
fn convert_round_trip() {
    let o = domtab(&["convert", "to-domino", "--grid", "[[1,2]]", "--n", "2"]);
    assert_eq!(code(&o), 0);
    let dt = domino_from_tableau(&grid(&[&[1, 2]], 2)).unwrap();
    assert_eq!(stdout(&o), format!("{}\n", render_domino(&dt)));
    assert_eq!(dt.tilings().iter().map(Vec::len).sum::<usize>(), 1);

    let o = domtab(&[
        "--json",
        "convert",
        "to-domino",
        "--grid",
        "[[1,1],[2,3]]",
        "--n",
        "3",
    ]);
    let text = stdout(&o);
    let back = domtab(&[
        "convert",
        "to-tableau",
        "--domino",
        text.trim(),
        "--format",
        "json",
    ]);
    let t: TableauJson = serde_json::from_str(&stdout(&back)).unwrap();
    assert_eq!(t.to_tableau().unwrap(), grid(&[&[1, 1], &[2, 3]], 3));
}

#[test]
fn convert_not_fixed() {
    let o = domtab(&["convert", "to-domino", "--grid", "[[1,1]]", "--n", "2"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("t1"));
    assert_eq!(
        code(&domtab(&["convert", "to-tableau", "--domino", "{\"n\":2}"])),
        2
    );
}

#[test]
fn count_examples() {
    let o = domtab(&[
        "count", "kostka2", "--shape", "2,2", "--weight", "2", "--n", "2",
    ]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "1\n"));
    let o = domtab(&[
        "count", "selfevac", "--shape", "2", "--weight", "1,1", "--n", "2",
    ]);
    assert_eq!(stdout(&o), "1\n");
    let o = domtab(&[
        "count", "kostka", "--shape", "1,1", "--weight", "2", "--n", "2",
    ]);
    assert_eq!(stdout(&o), "0\n");
    assert_eq!(
        code(&domtab(&[
            "count", "kostka", "--shape", "2", "--weight", "1", "--n", "2"
        ])),
        2
    );
    assert_eq!(
        code(&domtab(&[
            "count", "kostka", "--shape", "2", "--weight", "1,0,1", "--n", "2"
        ])),
        2
    );
}

#[test]
fn count_tables_match_library() {
    let o = domtab(&[
        "count",
        "kostka",
        "--shape",
        "2,1",
        "--n",
        "3",
        "--all-weights",
    ]);
    let shape = part(&[2, 1]);
    for line in stdout(&o).lines() {
        let (w, k) = line.split_once('\t').unwrap();
        let w: Vec<usize> = w.split(',').map(|x| x.parse().unwrap()).collect();
        assert_eq!(k.parse::<u64>().unwrap(), kostka(&shape, &Weight(w)));
    }
    let o = domtab(&[
        "--json",
        "count",
        "kostka2",
        "--shape",
        "3,3",
        "--n",
        "5",
        "--all-weights",
    ]);
    let shape = part(&[3, 3]);
    let mut total = 0;
    for line in stdout(&o).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        let w: Vec<usize> = serde_json::from_value(v["weight"].clone()).unwrap();
        let k = v["count"].as_u64().unwrap();
        assert_eq!(k, kostka2(&shape, &DominoWeight(w), 5));
        total += k;
    }
    assert!(total > 0);
}

#[test]
fn verify_examples() {
    let o = domtab(&["verify", "lemma13", "--n", "4", "--box", "3x4"]);
    assert_eq!(code(&o), 0);
    let mut lib = harness::run_named("lemma13", &Bounds::boxed(4, 3, 4), 1).unwrap();
    lib.elapsed = None;
    assert_eq!(stdout(&o), format!("{lib}\n"));
    assert_eq!(
        code(&domtab(&[
            "verify",
            "thm16b",
            "--n",
            "7",
            "--box",
            "3x4",
            "--threads",
            "4"
        ])),
        0
    );
    assert_eq!(code(&domtab(&["verify", "unknown-suite"])), 2);
    assert_eq!(
        code(&domtab(&["verify", "lemma13", "--n", "4", "--box", "3by4"])),
        2
    );
}

#[test]
fn verify_counterexample_and_json() {
    let o = domtab(&[
        "verify", "identity", "--n", "3", "--box", "2x2", "--lhs", "t1", "--rhs", "t2",
    ]);
    assert_eq!(code(&o), 1);
    let text = stdout(&o);
    let json = text
        .lines()
        .find_map(|l| l.strip_prefix("witness json: "))
        .unwrap();
    let w: serde_json::Value = serde_json::from_str(json).unwrap();
    let t: TableauJson = serde_json::from_value(w["tableau"].clone()).unwrap();
    let t = t.to_tableau().unwrap();
    let n = t.n();
    assert_ne!(
        apply_word(&parse_word("t1", n).unwrap(), &t).unwrap(),
        apply_word(&parse_word("t2", n).unwrap(), &t).unwrap()
    );

    let o = domtab(&["verify", "thm16a", "--n", "5", "--box", "3x3", "--json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let lib = harness::run_named("thm16a", &Bounds::boxed(5, 3, 3), 1).unwrap();
    let mut expect = serde_json::to_value(ReportJson::of(&lib)).unwrap();
    expect.as_object_mut().unwrap().remove("elapsed_ms");
    assert_eq!(v, expect);
}

#[test]
fn verify_config_file() {
    let path = std::env::temp_dir().join(format!("domtab-suite-{}.json", std::process::id()));
    std::fs::write(&path, r#"{"suite": "eq15", "n": 4, "box": [2,3]}"#).unwrap();
    let o = domtab(&["verify", "--config", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("eq15"));
}

#[test]
fn enumerate_examples() {
    let o = domtab(&[
        "enumerate",
        "tableaux",
        "--shape",
        "2,1",
        "--n",
        "3",
        "--count",
    ]);
    assert_eq!(stdout(&o), "8\n");
    let o = domtab(&["enumerate", "domino", "--shape", "2", "--n", "2"]);
    assert_eq!(stdout(&o).lines().count(), 1);
    let o = domtab(&[
        "enumerate",
        "tableaux",
        "--shape",
        "1,1,1",
        "--n",
        "2",
        "--count",
    ]);
    assert_eq!(stdout(&o), "0\n");
    assert_eq!(
        code(&domtab(&[
            "enumerate",
            "tableaux",
            "--shape",
            "2,3",
            "--n",
            "2"
        ])),
        2
    );
}

#[test]
fn enumerate_matches_library() {
    let shape = part(&[3, 1]);
    let o = domtab(&["enumerate", "tableaux", "--shape", "3,1", "--n", "3"]);
    let got: Vec<Tableau> = stdout(&o)
        .lines()
        .map(|l| {
            serde_json::from_str::<TableauJson>(l)
                .unwrap()
                .to_tableau()
                .unwrap()
        })
        .collect();
    assert_eq!(got, enumerate_tableaux(&shape, 3).collect::<Vec<_>>());
    let o = domtab(&[
        "enumerate",
        "tableaux",
        "--shape",
        "3,1",
        "--n",
        "3",
        "--limit",
        "2",
    ]);
    assert_eq!(stdout(&o).lines().count(), 2);

    let shape = part(&[2, 2]);
    let w = DominoWeight(vec![1, 1]);
    let o = domtab(&[
        "enumerate",
        "domino",
        "--shape",
        "2,2",
        "--n",
        "4",
        "--weight",
        "1,1",
    ]);
    let expect: Vec<String> = enumerate_domino(&shape, &w, 4)
        .map(|dt| serde_json::to_string(&DominoJson::of(&dt)).unwrap())
        .collect();
    assert_eq!(stdout(&o).lines().collect::<Vec<_>>(), expect);
}

#[test]
fn in_process_run() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = domtab::cli::run(
        [
            "domtab", "count", "kostka", "--shape", "2", "--weight", "1,1", "--n", "2",
        ],
        &mut out,
        &mut err,
    );
    assert_eq!((code, out.as_slice()), (0, b"1\n".as_slice()));
    let code = domtab::cli::run(["domtab", "--help"], &mut out, &mut err);
    assert_eq!(code, 0);
    let code = domtab::cli::run(["domtab", "frobnicate"], &mut out, &mut err);
    assert_eq!(code, 2);
}
