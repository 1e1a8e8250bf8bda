use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn kconn(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_kconn"))
        .args(args)
        .env("KCONN_THREADS", "2")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    // Early exits close the pipe before reading it.
    let _ = child.stdin.take().unwrap().write_all(stdin.as_bytes());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("kconn-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

const HUB: &str = "5 12 d\n0 1\n1 0\n0 2\n2 0\n1 2\n2 1\n2 3\n3 2\n2 4\n4 2\n3 4\n4 3\n";

#[test]
fn decomposes_standard_input() {
    let o = kconn(&["--mode", "2vcs", "-"], HUB);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0 1 2\n2 3 4\n");
    let o = kconn(&["--mode", "2ecs", "--algorithm", "baseline", "-"], HUB);
    assert_eq!(stdout(&o), "0 1 2 3 4\n");
}

#[test]
fn json_carries_stats() {
    let o = kconn(&["--mode", "2ecs", "--format", "json", "--delta", "3", "-"], HUB);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["stats"]["delta"], 3);
    assert_eq!(v["components"], serde_json::json!([[0, 1, 2, 3, 4]]));
}

#[test]
fn undirected_mode_reports_its_delta() {
    // Two 4-cliques joined by two edges: n = 8, m = 14, ceil(14 / sqrt 8) = 5.
    let mut text = String::from("8 14 u\n");
    for base in [0, 4] {
        for i in 0..4 {
            for j in i + 1..4 {
                text.push_str(&format!("{} {}\n", base + i, base + j));
            }
        }
    }
    text.push_str("0 4\n1 5\n");
    let o = kconn(&["--mode", "kecs-undirected", "-k", "3", "--format", "json", "-"], &text);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["components"], serde_json::json!([[0, 1, 2, 3], [4, 5, 6, 7]]));
    assert_eq!(v["stats"]["delta"], 5);
    let o = kconn(&["--mode", "kecs", "-k", "3", "-"], &text);
    assert_eq!(stdout(&o), "0 1 2 3\n4 5 6 7\n");
}

#[test]
fn input_errors_exit_with_one() {
    let o = kconn(&["--mode", "2ecs", "-"], "3 2 d\n0 1\n1 9\n");
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    assert_eq!(kconn(&["--mode", "kecs", "-"], HUB).status.code(), Some(1));
    assert_eq!(kconn(&["--mode", "kecs-undirected", "-k", "3", "-"], HUB).status.code(), Some(1));
    assert_eq!(kconn(&["--mode", "nope", "-"], HUB).status.code(), Some(1));
    assert_eq!(kconn(&["--mode", "2ecs", "--delta", "0", "-"], HUB).status.code(), Some(1));
    assert_eq!(kconn(&["--help"], "").status.code(), Some(0));
}

#[test]
fn generation_is_reproducible() {
    let args = ["gen", "--family", "random-digraph", "--n", "10", "--m", "25", "--seed", "1"];
    let (a, b) = (kconn(&args, ""), kconn(&args, ""));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).starts_with("10 25 d\n"));
    let chain = kconn(&["gen", "--family", "cycle-chain", "--cycles", "2", "--len", "3"], "");
    let o = kconn(&["--mode", "2ecs", "--include-singletons", "-"], &stdout(&chain));
    assert_eq!(stdout(&o), "0\n1\n2\n3\n4\n5\n");
}

#[test]
fn bench_writes_csv() {
    let out = scratch("bench.csv");
    let o = kconn(
        &["bench", "--out", out.to_str().unwrap(), "--modes", "2ecs,2vcs", "--families", "cycle-chain,random-digraph", "--sizes", "200,400", "--seeds", "1,2"],
        "",
    );
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let csv = std::fs::read_to_string(&out).unwrap();
    let mut lines = csv.lines();
    assert!(lines.next().unwrap().starts_with("generator,seed,n,m,k,mode,algorithm,"));
    // 2 families x 2 sizes x 2 seeds x 2 modes, fast and baseline each.
    assert_eq!(lines.count(), 32);
}
