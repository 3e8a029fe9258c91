use std::path::PathBuf;
use std::process::{Command, Output as ProcOutput};

use serde::de::DeserializeOwned;
use serde::Serialize;
use torsion_core::cyclic::CyclicizerSubgroupCheck;
use torsion_core::sweep::SweepReport;
use torsion_count::report::{
    CountOutput, CyclicizerOutput, EnumerateOutput, GapscriptOutput, TableOutput,
};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_torsion-count"));
    c.env_remove("TORSION_COUNT_CAP");
    c
}

fn run(args: &[&str]) -> ProcOutput {
    bin().args(args).output().expect("spawn torsion-count")
}

fn stdout(o: &ProcOutput) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("torsion-count-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn count_small_group_matches_oracle() {
    let o = run(&["count", "--n", "1", "--p", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let c: CountOutput = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!((c.subgroups.closed_form, c.subgroups.oracle), (6, Some(6)));
    assert_eq!((c.cyclic.closed_form, c.cyclic.oracle), (6, Some(6)));
}

#[test]
fn exit_codes() {
    let o = run(&["count", "--n", "5", "--p", "5"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("p must not divide n"));
    assert_eq!(
        run(&["count", "--n", "4", "--p", "9"]).status.code(),
        Some(3)
    );
    assert_eq!(
        run(&["table", "--n", "6", "--p", "3"]).status.code(),
        Some(3)
    );
    assert_eq!(
        run(&["prop46", "--n", "450", "--m", "7"]).status.code(),
        Some(4)
    );
    assert_eq!(
        run(&["cyclicizer", "--n", "30", "--m", "7", "--cap", "100"])
            .status
            .code(),
        Some(4)
    );
    assert_eq!(
        run(&["count", "--n", "1", "--p", "3", "--cap", "0"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["count", "--n", "0", "--p", "3"]).status.code(),
        Some(1)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(
        run(&["gapscript", "--n", "5", "--p", "3", "--format", "csv"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn cap_from_flag_and_environment() {
    let o = run(&[
        "count", "--n", "1", "--p", "3", "--format", "json", "--cap", "11",
    ]);
    let c: CountOutput = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(c.subgroups.oracle, None);
    assert_eq!(c.cap, 11);

    let o = bin()
        .args(["count", "--n", "1", "--p", "3", "--format", "json"])
        .env("TORSION_COUNT_CAP", "11")
        .output()
        .unwrap();
    let c: CountOutput = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(c.cap, 11);
    assert_eq!(c.cyclic.oracle, None);
}

#[test]
fn enumerate_layouts() {
    let o = run(&["enumerate", "--n", "1", "--p", "3", "--format", "json"]);
    let e: EnumerateOutput = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(e.subgroups.len(), 6);

    let csv = stdout(&run(&[
        "enumerate",
        "--n",
        "450",
        "--p",
        "7",
        "--format",
        "csv",
    ]));
    let mut reader = csv::Reader::from_reader(csv.as_bytes());
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 2472);
    assert_eq!(&rows[0][3], "⟨a⟩");
    assert_eq!(&rows[0][4], "900");
    assert!(!csv.contains('\r'));

    let text = stdout(&run(&["enumerate", "--n", "450", "--p", "7"]));
    let first_row = text
        .lines()
        .find(|l| l.trim_start().starts_with('⟨'))
        .unwrap();
    let cells: Vec<&str> = first_row.split_whitespace().collect();
    assert_eq!(&cells[..2], ["⟨a⟩", "900"]);

    let o = run(&[
        "enumerate",
        "--n",
        "6",
        "--p",
        "5",
        "--materialize",
        "--format",
        "json",
    ]);
    let e: EnumerateOutput = serde_json::from_slice(&o.stdout).unwrap();
    assert!(e.materialized);
    assert!(e
        .subgroups
        .iter()
        .all(|r| r.materialized_order == Some(r.order)));
}

#[test]
fn table_shapes_and_files() {
    let t: TableOutput =
        serde_json::from_slice(&run(&["table", "--n", "8", "--p", "3", "--format", "json"]).stdout)
            .unwrap();
    assert_eq!(t.parts[0].columns.len(), 6);
    let t: TableOutput =
        serde_json::from_slice(&run(&["table", "--n", "1", "--p", "3", "--format", "json"]).stdout)
            .unwrap();
    assert_eq!(t.parts[0].rows.keys().copied().collect::<Vec<_>>(), vec![1]);

    let out = tmp("t450.csv");
    let o = run(&[
        "table",
        "--n",
        "450",
        "--p",
        "7",
        "--format",
        "csv",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let [p1, p2] = torsion_count::part_paths(&out);
    let first = std::fs::read_to_string(p1).unwrap();
    let second = std::fs::read_to_string(p2).unwrap();
    assert!(first.starts_with("k,1,2,4,8\n1,1,1,451,225\n"));
    assert!(first.ends_with("sum,9,9,815,403\n"));
    assert!(second.contains("\n1575,1,1,3,1\n"));
}

#[test]
fn gapscript_substitution() {
    let s = stdout(&run(&["gapscript", "--n", "450", "--p", "7"]));
    assert!(s.contains("n:=450;"));
    assert!(s.contains("CyclicGroup(7)"));
    assert!(s.trim_end().ends_with("Size(s);"));
    let s = stdout(&run(&[
        "gapscript",
        "--n",
        "450",
        "--p",
        "7",
        "--mode",
        "cyclic",
    ]));
    assert!(s.contains("dd := IsCyclic(t);"));
}

#[test]
fn verify_reports_errata_without_failing() {
    let o = run(&["verify", "--n", "1", "--p", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("equality case: NS = CyS = 6"));
    assert!(s.contains("result: PASS"));

    let csv = stdout(&run(&[
        "verify", "--n", "1..3", "--p", "5", "--format", "csv",
    ]));
    assert_eq!(csv.lines().count(), 1 + 3 * 2);
    assert_eq!(
        run(&["verify", "--n", "3..1", "--p", "5"]).status.code(),
        Some(1)
    );
}

fn round_trip<T: DeserializeOwned + Serialize>(args: &[&str]) {
    let text = run(args);
    assert_eq!(text.status.code(), Some(0), "{args:?}");
    assert!(!text.stdout.is_empty());
    let mut with_json = args.to_vec();
    with_json.extend(["--format", "json"]);
    let raw = stdout(&run(&with_json));
    let doc: T = serde_json::from_str(&raw).unwrap();
    assert_eq!(
        serde_json::to_string_pretty(&doc).unwrap() + "\n",
        raw,
        "{args:?}"
    );
}

#[test]
fn every_verb_has_a_json_twin_that_round_trips() {
    round_trip::<CountOutput>(&["count", "--n", "6", "--p", "5"]);
    round_trip::<EnumerateOutput>(&["enumerate", "--n", "4", "--p", "3"]);
    round_trip::<TableOutput>(&["table", "--n", "12", "--p", "5"]);
    round_trip::<SweepReport>(&["verify", "--n", "1..4", "--p", "3,5"]);
    round_trip::<GapscriptOutput>(&["gapscript", "--n", "5", "--p", "3"]);
    round_trip::<CyclicizerSubgroupCheck>(&["prop46", "--n", "2"]);
    round_trip::<CyclicizerOutput>(&["cyclicizer", "--n", "3", "--a-exp", "1"]);
}

#[test]
fn exit_code_mapping() {
    use torsion_core::{Error, Hypothesis};
    let h = anyhow::Error::from(Error::HypothesisViolation {
        n: 3,
        p: 3,
        violated: Hypothesis::CoprimeToN,
    });
    assert_eq!(torsion_count::exit_code(&h), 3);
    let r = anyhow::Error::from(Error::MemoryBudget {
        needed: 2,
        budget: 1,
    });
    assert_eq!(torsion_count::exit_code(&r), 4);
    assert_eq!(torsion_count::exit_code(&anyhow::anyhow!("other")), 1);
}
