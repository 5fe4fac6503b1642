use std::path::PathBuf;
use std::process::{Command, Output};

use ordered_ramsey::{EdgeColoring, OrderedGraph};

const P3: &str = "n=3;e=1-2,2-3";
const CHORD: &str = "n=5;e=1-2,2-3,3-4,4-5,2-4";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ordram"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ordram-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

/// Graph body of a `construct` output: everything after the header.
fn body(text: &str) -> String {
    text.lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| format!("{l}\n"))
        .collect()
}

#[test]
fn arrows_from_files() {
    let f = scratch("f.og", &OrderedGraph::parse_inline(CHORD).unwrap().to_text());
    let h = scratch("h.og", "# monotone path\nn 3\n1 2\n2 3\n");
    let (f, h) = (f.to_str().unwrap(), h.to_str().unwrap());
    let o = run(&["arrows", "-F", f, "-H", h, "-H2", h]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("ARROWS"));
}

#[test]
fn not_arrows_prints_a_checkable_witness() {
    let o = run(&["arrows", "-F", "n=5;e=1-2,2-3,3-4,4-5", "-H", P3, "--h2", P3]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().next(), Some("NOT_ARROWS"));
    let witness: String = out
        .lines()
        .skip(1)
        .filter(|l| !l.starts_with('#'))
        .map(|l| format!("{l}\n"))
        .collect();
    let host = OrderedGraph::monotone_path(5);
    let c = EdgeColoring::parse(&host, &witness).unwrap();
    let p3 = OrderedGraph::monotone_path(3);
    assert!(c.check_avoids(&p3, &p3).is_ok());
}

#[test]
fn enumerate_finds_the_single_star() {
    let o = run(&["enumerate", "-H", "n=3;e=1-2,1-3", "--max-n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "n=4;e=1-2,1-3,1-4");
}

#[test]
fn density_of_triangle() {
    let o = run(&["density", "-G", "n=3;e=1-2,1-3,2-3", "--two"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "2/1");
    assert_eq!(stdout(&run(&["density", "-G", "n=3;e=1-2,1-3,2-3"])).trim(), "1/1");
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(&["arrows", "-F", "n=3;e=1-4", "-H", P3, "--h2", P3]).status.code(),
        Some(1)
    );
    assert_eq!(run(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    let tight = run(&[
        "--budget",
        "1",
        "arrows",
        "-F",
        "n=10;e=1-2",
        "-H",
        "n=4;e=1-2,2-3,3-4",
        "--h2",
        "n=4;e=1-2,2-3,3-4",
    ]);
    let full = OrderedGraph::complete(10).to_inline();
    let hard = run(&[
        "--budget",
        "1",
        "arrows",
        "-F",
        &full,
        "-H",
        "n=4;e=1-2,2-3,3-4",
        "--h2",
        "n=4;e=1-2,2-3,3-4",
    ]);
    assert_eq!(tight.status.code(), Some(0));
    assert_eq!(hard.status.code(), Some(2));
    assert!(stdout(&hard).starts_with("UNKNOWN"));
}

#[test]
fn malformed_files_report_line_numbers() {
    let bad = scratch("bad.og", "n 3\n1 2\n3 x\n");
    let o = run(&["density", "-G", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8(o.stderr).unwrap().contains("line 3"));
}

#[test]
fn classify_reports_every_question() {
    let o = run(&["classify", "-H", "n=4;e=1-2,1-3,1-4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("YES"));
    let o = run(&["classify", "-H", P3, "--h2", P3]);
    assert!(stdout(&o).contains("pseudoforest-ramsey-graph: YES"));
}

#[test]
fn constructions_round_trip() {
    for args in [
        vec!["construct", "forest-ramsey", "-H", "n=3;e=1-2,1-3", "--h2", P3],
        vec!["construct", "pseudoforest"],
        vec!["construct", "caterpillar", "--d", "2,1,3"],
        vec!["construct", "left-determiner", "--s", "2", "--d", "1,1", "--i", "2"],
        vec!["construct", "gamma"],
        vec!["construct", "f-n"],
    ] {
        let o = run(&args);
        assert_eq!(
            o.status.code(),
            Some(0),
            "{args:?}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
        let text = stdout(&o);
        assert!(text.starts_with("# construction:"), "{args:?}");
        let g = OrderedGraph::parse(&body(&text)).unwrap();
        assert_eq!(g.to_text(), body(&text));
    }
}

#[test]
fn family_lines_parse() {
    let o = run(&["construct", "family-fj", "--s", "2", "--d", "1,1", "--level", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = body(&stdout(&o)).lines().map(str::to_owned).collect();
    assert_eq!(lines.len(), 25);
    for l in lines {
        assert_eq!(OrderedGraph::parse_inline(&l).unwrap().to_inline(), l);
    }
}

#[test]
fn refute_and_verify_agree() {
    let f = "n=5;e=1-2,2-3,3-4,4-5";
    let o = run(&["refute", "-F", f, "-H", P3, "--h2", P3]);
    assert_eq!(o.status.code(), Some(0));
    let coloring: String = stdout(&o)
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| format!("{l}\n"))
        .collect();
    let file = scratch("coloring.txt", &coloring);
    let v = run(&[
        "verify",
        "-F",
        f,
        "-H",
        P3,
        "--h2",
        P3,
        "--coloring",
        file.to_str().unwrap(),
    ]);
    assert_eq!(v.status.code(), Some(0), "{}", stdout(&v));
    let built = run(&["construct", "left-determiner", "--s", "2", "--d", "1,1", "--i", "2"]);
    let det = scratch("determiner.og", &body(&stdout(&built)));
    let args = [
        "verify",
        "-F",
        det.to_str().unwrap(),
        "--determiner",
        "left",
        "--s",
        "2",
        "--d",
        "1,1",
        "--index",
        "2",
    ];
    let d = run(&args);
    assert_eq!(d.status.code(), Some(0), "{}", stdout(&d));
    assert!(stdout(&d).starts_with("VALID"));
    let edge = run(&[
        "verify",
        "-F",
        "n=2;e=1-2",
        "--determiner",
        "left",
        "--s",
        "2",
        "--d",
        "1",
        "--index",
        "1",
    ]);
    assert!(stdout(&edge).starts_with("INVALID\n# forcing: false"));
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        vec![
            "random-scan",
            "-H",
            P3,
            "-n",
            "8",
            "--p",
            "0.2,0.5,0.9",
            "--trials",
            "20",
            "--seed",
            "7",
        ],
        vec![
            "--threads",
            "2",
            "arrows",
            "-F",
            "n=6;e=1-2,2-3,3-4,4-5,5-6",
            "-H",
            P3,
            "--h2",
            P3,
        ],
        vec![
            "--json",
            "construct",
            "forest-ramsey",
            "-H",
            "n=4;e=1-2,3-4",
            "--h2",
            P3,
        ],
    ] {
        assert_eq!(run(&args).stdout, run(&args).stdout, "{args:?}");
    }
    let csv = stdout(&run(&[
        "random-scan",
        "-H",
        P3,
        "-n",
        "6",
        "--p",
        "0,1",
        "--trials",
        "3",
        "--seed",
        "1",
    ]));
    assert_eq!(csv, "p,trials,arrows,not_arrows,unknown\n0,3,0,3,0\n1,3,3,0,0\n");
}

#[test]
fn json_output_is_valid() {
    let o = run(&["--json", "arrows", "-F", CHORD, "-H", P3, "--h2", P3]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "ARROWS");
}
