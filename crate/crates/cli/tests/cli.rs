//! End-to-end checks of the `itg` binary: output formats, exit codes,
//! determinism of generation.

use std::path::PathBuf;
use std::process::{Command, Output};

fn itg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_itg"))
        .args(args)
        .output()
        .expect("spawn itg")
}

fn write_tmp(name: &str, content: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("itg-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn profile_single_edge_output() {
    let f = write_tmp("single.tg", "tg 2 1 undirected\n1 2 0 5 0\n");
    let out = itg(&["profile", f.to_str().unwrap(), "--source", "1", "--target", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0 0 0\n5 5 1\nfastest 0 depart 0\n");
}

#[test]
fn profile_disconnected_prints_unreachable() {
    let f = write_tmp("disc.tg", "tg 4 2 undirected\n1 2 0 5 0\n3 4 0 5 0\n");
    let out = itg(&["profile", f.to_str().unwrap(), "--source", "1", "--target", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "unreachable\n");
}

#[test]
fn profile_rejects_nonzero_delay_with_exit_4() {
    let f = write_tmp("delay.tg", "tg 2 1 undirected\n1 2 0 5 1\n");
    let out = itg(&["profile", f.to_str().unwrap(), "--source", "1", "--target", "2"]);
    assert_eq!(out.status.code(), Some(4));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("nonzero delay"), "stderr: {err}");
}

#[test]
fn profile_rejects_equal_endpoints_with_exit_2() {
    let f = write_tmp("single2.tg", "tg 2 1 undirected\n1 2 0 5 0\n");
    let out = itg(&["profile", f.to_str().unwrap(), "--source", "1", "--target", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn parse_errors_exit_3() {
    let f = write_tmp("broken.tg", "tg 2 junk undirected\n");
    let out = itg(&["profile", f.to_str().unwrap(), "--source", "1", "--target", "2"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn foremost_outputs_per_vertex() {
    let f = write_tmp("delayed.tg", "tg 2 1 undirected\n1 2 3 7 2\n");
    let out = itg(&["foremost", f.to_str().unwrap(), "--source", "1", "--depart", "0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1 0\n2 5\n");
    let out = itg(&["foremost", f.to_str().unwrap(), "--source", "1", "--depart", "8"]);
    assert_eq!(stdout(&out), "1 8\n2 unreachable\n");
    let out = itg(&["foremost", f.to_str().unwrap(), "--source", "1", "--depart", "3"]);
    assert_eq!(stdout(&out), "1 3\n2 5\n");
}

#[test]
fn gen_random_is_byte_identical_for_same_seed() {
    let out_a = write_tmp("rand_a.tg", "");
    let out_b = write_tmp("rand_b.tg", "");
    for out in [&out_a, &out_b] {
        let st = itg(&[
            "gen", "random", "--n", "20", "--records", "50", "--time-max", "90",
            "--zero-delay", "--seed", "7", "--out", out.to_str().unwrap(),
        ]);
        assert!(st.status.success());
    }
    let a = std::fs::read(&out_a).unwrap();
    let b = std::fs::read(&out_b).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn gen_thm1_has_8m_temporal_edges_and_parses_back() {
    let g = write_tmp("k3w.txt", "graph 3 3\n1 2 -1\n1 3 -1\n2 3 -1\n");
    let out_file = write_tmp("thm1.tg", "");
    let st = itg(&["gen", "thm1", "--input", g.to_str().unwrap(), "--out", out_file.to_str().unwrap()]);
    assert!(st.status.success());
    let text = std::fs::read_to_string(&out_file).unwrap();
    assert!(text.starts_with("# s=1 t=2 T="));
    let parsed = itg_core::io::parse(&text).unwrap();
    assert_eq!(parsed.record_count(), 4 * 3);
    assert_eq!(parsed.temporal_edge_count(), 8 * 3);
}

#[test]
fn gen_thm2_instance_answers_duration_four() {
    let g = write_tmp("k3.txt", "graph 3 3\n1 2\n1 3\n2 3\n");
    let out_file = write_tmp("thm2.tg", "");
    let st = itg(&["gen", "thm2", "--input", g.to_str().unwrap(), "--out", out_file.to_str().unwrap()]);
    assert!(st.status.success());
    let text = std::fs::read_to_string(&out_file).unwrap();
    let sidecar = text.lines().next().unwrap().to_string();
    assert!(sidecar.contains("s=1 t=2"));
    let candidates: Vec<i64> = sidecar
        .split("candidates=")
        .nth(1)
        .unwrap()
        .split(',')
        .map(|c| c.trim().parse().unwrap())
        .collect();
    let parsed = itg_core::io::parse(&text).unwrap();
    let best = itg_core::fastest_by_departure_sweep(&parsed, 1, 2, &candidates)
        .unwrap()
        .unwrap();
    assert_eq!(best.duration, 4);
}

#[test]
fn bench_header_only_for_empty_sizes() {
    let out = itg(&["bench", "--seed", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "label,n,records,M,t_profile_ns,t_oracle_ns,duration\n");
}

#[test]
fn bench_duration_column_is_deterministic() {
    let durations = |out: &Output| -> Vec<String> {
        stdout(out)
            .lines()
            .skip(1)
            .map(|l| l.rsplit(',').next().unwrap().to_string())
            .collect()
    };
    let a = itg(&["bench", "--sizes", "200,400", "--seed", "11"]);
    let b = itg(&["bench", "--sizes", "200,400", "--seed", "11"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(durations(&a), durations(&b));
    assert_eq!(durations(&a).len(), 2);
}
