use std::fs;
use std::process::{Command, Output};

fn onelevel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_onelevel"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_is_deterministic() {
    let a = onelevel(&["gen", "--n", "5", "--seed", "7"]);
    let b = onelevel(&["gen", "--n", "5", "--seed", "7"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    let t = onelevel(&["gen", "--kind", "tree", "--n", "1"]);
    assert_eq!(stdout(&t).trim_end(), "1\n-1");
}

#[test]
fn verify_sequence_and_tree() {
    let dir = tempfile::tempdir().unwrap();
    let seq = dir.path().join("s.txt");
    fs::write(&seq, "6\n1 0 1 2 1 2\n").unwrap();
    let o = onelevel(&["verify", seq.to_str().unwrap(), "--kappa", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["pass"], true);
    assert_eq!(report["total_queries"], 40);

    let tree = dir.path().join("t.txt");
    fs::write(&tree, "4\n-1 0 1 2\n").unwrap();
    let o = onelevel(&["verify", tree.to_str().unwrap(), "--format", "parent"]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["total_queries"], 10);

    let parens = dir.path().join("p.txt");
    fs::write(&parens, "(()(()))").unwrap();
    let out = dir.path().join("r.json");
    let o = onelevel(&[
        "verify",
        parens.to_str().unwrap(),
        "--format",
        "parens",
        "--mode",
        "random",
        "--queries",
        "25",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(report["total_queries"], 25);
}

#[test]
fn usage_and_parse_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "0 2 3").unwrap();
    assert_eq!(onelevel(&["verify", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(onelevel(&["verify", "/nonexistent/file"]).status.code(), Some(2));
    assert_eq!(onelevel(&["gen", "--n", "3", "--kappa", "2"]).status.code(), Some(2));
    let ok = dir.path().join("ok.txt");
    fs::write(&ok, "0 1").unwrap();
    assert_eq!(
        onelevel(&["verify", ok.to_str().unwrap(), "--kappa", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(onelevel(&["frobnicate"]).status.code(), Some(2));
    let cyc = dir.path().join("cyc.txt");
    fs::write(&cyc, "2\n0 1").unwrap();
    let o = onelevel(&["verify", cyc.to_str().unwrap(), "--format", "parent"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cycle"));
}

#[test]
fn bench_writes_csv() {
    let o = onelevel(&[
        "bench",
        "--n",
        "3000",
        "--queries",
        "20000",
        "--structures",
        "onelevel,doubling,naive",
        "--seed",
        "4",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "structure_name,n,kappa,build_ns,mean_query_ns,p99_query_ns,entries,bytes,seed"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 3);
    assert!(rows[0].starts_with("onelevel,3000,5,"));
    assert!(rows[2].ends_with(",4"));
}

#[test]
fn inspect_dump() {
    let dir = tempfile::tempdir().unwrap();
    let seq = dir.path().join("s.txt");
    fs::write(&seq, "1 0 1 2 1 2").unwrap();
    let o = onelevel(&["inspect", seq.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("Jump: 0 5 5 5 5 5"));
    fs::write(&seq, "0").unwrap();
    assert!(stdout(&onelevel(&["inspect", seq.to_str().unwrap()])).contains("Valley: 0 0"));
}
