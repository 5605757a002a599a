//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line (run with `--nocapture` to see them live). Tests share a lock so
//! the wall-clock criterion is never timed under parallel load.

use std::collections::HashMap;
use std::sync::Mutex;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use itg_core::graph::{build_event_list, EventKind, TemporalGraph, Time, Vertex};
use itg_core::path::{duration, validate_path};
use itg_core::profile::{compact_profile, fastest_from_profile, fastest_path, profile_st, profile_st_traced};
use itg_core::reductions::{
    detect_negative_triangle, detect_triangle, gen_negative_triangle_instance, gen_random_temporal,
    gen_shortest_instance, gen_triangle_delay_one, gen_triangle_directed_zero, random_simple_graph,
    random_weighted_graph,
};
use itg_core::routing::{fastest_by_departure_sweep, oracle_time_expanded};
use itg_core::DynConn;

static GATE: Mutex<()> = Mutex::new(());

fn criterion<F>(id: u32, name: &str, f: F)
where
    F: FnOnce() -> Result<String, String>,
{
    let _g = GATE.lock().unwrap_or_else(|p| p.into_inner());
    match f() {
        Ok(detail) => println!("criterion {id} ({name}): PASS - {detail}"),
        Err(msg) => {
            println!("criterion {id} ({name}): FAIL - {msg}");
            panic!("criterion {id} ({name}) failed: {msg}");
        }
    }
}

/// Criterion-1 corpus: seeded zero-delay undirected instances with
/// n <= 8, records <= 20, times in [0, 30], random distinct endpoints.
fn small_corpus_instance(i: u64) -> (TemporalGraph, Vertex, Vertex) {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE ^ i);
    let n: u32 = rng.random_range(2..=8);
    let records: usize = rng.random_range(1..=20);
    let seed = i.wrapping_mul(2654435761).wrapping_add(17);
    let g = gen_random_temporal(n, records, 30, true, seed).unwrap();
    let s = rng.random_range(1..=n);
    let mut t = rng.random_range(1..=n);
    while t == s {
        t = rng.random_range(1..=n);
    }
    (g, s, t)
}

#[test]
fn criterion_01_profile_matches_time_expanded_oracle() {
    criterion(1, "profile oracle equivalence", || {
        for i in 0..1000u64 {
            let (g, s, t) = small_corpus_instance(i);
            let pr = profile_st(&g, s, t).map_err(|e| format!("instance {i}: {e}"))?;
            let oracle = oracle_time_expanded(&g, s, t).map_err(|e| format!("instance {i}: {e}"))?;
            for tau in -1..=31 {
                let got = pr.evaluate(tau);
                let want = oracle.profile_value(tau);
                if got != want {
                    return Err(format!(
                        "instance {i} (n={}, records={}, s={s}, t={t}): profile({tau}) = {got:?}, oracle says {want:?}",
                        g.n(),
                        g.record_count()
                    ));
                }
            }
        }
        Ok("1000 instances, every departure in [-1, 31] agrees".into())
    });
}

#[test]
fn criterion_02_fastest_matches_oracle_and_paths_validate() {
    criterion(2, "fastest correctness", || {
        let mut reachable = 0usize;
        for i in 0..1000u64 {
            let (g, s, t) = small_corpus_instance(i);
            let pr = profile_st(&g, s, t).map_err(|e| e.to_string())?;
            let fast = fastest_from_profile(&pr).map_err(|e| e.to_string())?;
            let oracle = oracle_time_expanded(&g, s, t).map_err(|e| e.to_string())?;
            let want = oracle.fastest().map(|f| f.duration);
            let got = fast.map(|f| f.duration);
            if got != want {
                return Err(format!(
                    "instance {i}: fastest duration {got:?} but oracle says {want:?}"
                ));
            }
            let path = fastest_path(&g, s, t).map_err(|e| e.to_string())?;
            match (fast, path) {
                (None, None) => {}
                (Some(f), Some(p)) => {
                    reachable += 1;
                    if !validate_path(&g, &p, s, t).map_err(|e| e.to_string())? {
                        return Err(format!("instance {i}: fastest path fails validation"));
                    }
                    let d = duration(&p).map_err(|e| e.to_string())?;
                    if d != f.duration {
                        return Err(format!(
                            "instance {i}: fastest path duration {d} != profile duration {}",
                            f.duration
                        ));
                    }
                }
                (f, p) => {
                    return Err(format!(
                        "instance {i}: fastest {f:?} but witness path presence {}",
                        p.is_some()
                    ))
                }
            }
        }
        Ok(format!("1000 instances, {reachable} reachable, durations and witness paths agree"))
    });
}

#[test]
fn criterion_03_delay_one_triangle_roundtrip() {
    criterion(3, "delay-one triangle round-trip", || {
        let probs = [0.1, 0.3, 0.5];
        for i in 0..200u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(0x7431 ^ i);
            let n: u32 = rng.random_range(3..=30);
            let g = random_simple_graph(n, probs[i as usize % 3], i.wrapping_mul(31) ^ 0x2222);
            let has = detect_triangle(&g);
            let (inst, _) = gen_triangle_delay_one(&g).map_err(|e| e.to_string())?;
            let best = fastest_by_departure_sweep(&inst.graph, inst.source, inst.target, &inst.candidates)
                .map_err(|e| e.to_string())?;
            if let Some(f) = best {
                if f.duration < 4 {
                    return Err(format!(
                        "instance {i}: duration {} below 4, construction violated",
                        f.duration
                    ));
                }
            }
            let four = best.map(|f| f.duration) == Some(4);
            if has != four {
                return Err(format!(
                    "instance {i} (n={n}): triangle={has} but sweep duration {:?}",
                    best.map(|f| f.duration)
                ));
            }
        }
        Ok("200 graphs, duration-4 equivalence holds".into())
    });
}

#[test]
fn criterion_04_negative_triangle_roundtrip() {
    criterion(4, "negative-triangle round-trip", || {
        let probs = [0.2, 0.5, 0.8];
        for i in 0..200u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(0x7731 ^ i);
            let n: u32 = rng.random_range(3..=20);
            let g = random_weighted_graph(n, probs[i as usize % 3], 10, i.wrapping_mul(37) ^ 0x4444);
            let has = detect_negative_triangle(&g);
            let (inst, t_bound) =
                gen_negative_triangle_instance(&g).map_err(|e| e.to_string())?;
            let best = fastest_by_departure_sweep(&inst.graph, inst.source, inst.target, &inst.candidates)
                .map_err(|e| e.to_string())?;
            let below = best.is_some_and(|f| f.duration < 2 * t_bound);
            if has != below {
                return Err(format!(
                    "instance {i} (n={n}): negative triangle={has} but duration {:?} vs 2T={}",
                    best.map(|f| f.duration),
                    2 * t_bound
                ));
            }
        }
        Ok("200 weighted graphs, below-2T equivalence holds".into())
    });
}

#[test]
fn criterion_05_directed_zero_triangle_roundtrip() {
    criterion(5, "directed zero-delay triangle round-trip", || {
        let probs = [0.1, 0.3, 0.5];
        for i in 0..200u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(0x7531 ^ i);
            let n: u32 = rng.random_range(3..=30);
            let g = random_simple_graph(n, probs[i as usize % 3], i.wrapping_mul(41) ^ 0x3333);
            let has = detect_triangle(&g);
            let inst = gen_triangle_directed_zero(&g).map_err(|e| e.to_string())?;
            let best = fastest_by_departure_sweep(&inst.graph, inst.source, inst.target, &inst.candidates)
                .map_err(|e| e.to_string())?;
            if let Some(f) = best {
                if f.duration < 3 {
                    return Err(format!(
                        "instance {i}: duration {} below 3, construction violated",
                        f.duration
                    ));
                }
            }
            let three = best.map(|f| f.duration) == Some(3);
            if has != three {
                return Err(format!(
                    "instance {i} (n={n}): triangle={has} but sweep duration {:?}",
                    best.map(|f| f.duration)
                ));
            }
        }
        Ok("200 graphs, duration-3 equivalence holds".into())
    });
}

#[test]
fn criterion_06_shortest_gadget_roundtrip() {
    criterion(6, "shortest-path gadget round-trip", || {
        let probs = [0.15, 0.3, 0.5];
        for i in 0..100u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5105 ^ i);
            let n: u32 = rng.random_range(3..=12);
            let g = random_simple_graph(n, probs[i as usize % 3], i.wrapping_mul(43) ^ 0x5555);
            let has = detect_triangle(&g);
            let (inst, threshold) = gen_shortest_instance(&g).map_err(|e| e.to_string())?;
            let oracle = oracle_time_expanded(&inst.graph, inst.source, inst.target)
                .map_err(|e| e.to_string())?;
            let short = oracle.shortest_len().is_some_and(|l| l <= threshold);
            if has != short {
                return Err(format!(
                    "instance {i} (n={n}): triangle={has} but shortest {:?} vs threshold {threshold}",
                    oracle.shortest_len()
                ));
            }
        }
        Ok("100 graphs, length-threshold equivalence holds".into())
    });
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn build(n: u32, edges: impl Iterator<Item = (u32, u32)>) -> Self {
        let mut uf = UnionFind {
            parent: (0..=n).collect(),
        };
        for (u, v) in edges {
            let (ru, rv) = (uf.find(u), uf.find(v));
            if ru != rv {
                uf.parent[ru.max(rv) as usize] = ru.min(rv);
            }
        }
        uf
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            self.parent[x as usize] = self.parent[self.parent[x as usize] as usize];
            x = self.parent[x as usize];
        }
        x
    }
}

#[test]
fn criterion_07_dynconn_matches_union_find() {
    criterion(7, "dynamic connectivity oracle", || {
        let n: u32 = 100;
        let mut rng = ChaCha8Rng::seed_from_u64(0xD15C);
        let mut dc = DynConn::new(n).map_err(|e| e.to_string())?;
        let mut live: HashMap<u64, (u32, u32)> = HashMap::new();
        let mut next_handle = 0u64;
        for op in 0..10_000usize {
            match rng.random_range(0..10) {
                0..=3 => {
                    let u = rng.random_range(1..=n);
                    let mut v = rng.random_range(1..=n);
                    while v == u {
                        v = rng.random_range(1..=n);
                    }
                    dc.insert(u, v, next_handle).map_err(|e| e.to_string())?;
                    live.insert(next_handle, (u, v));
                    next_handle += 1;
                }
                4..=6 if !live.is_empty() => {
                    let keys: Vec<u64> = live.keys().copied().collect();
                    let h = keys[rng.random_range(0..keys.len())];
                    dc.delete(h).map_err(|e| e.to_string())?;
                    live.remove(&h);
                }
                _ => {
                    let u = rng.random_range(1..=n);
                    let r = dc.rep(u).map_err(|e| e.to_string())?;
                    if r == 0 || r > n {
                        return Err(format!("op {op}: rep({u}) = {r} outside [1, {n}]"));
                    }
                }
            }
            let mut uf = UnionFind::build(n, live.values().copied());
            let reps: Vec<u32> = (1..=n)
                .map(|v| dc.rep(v))
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?;
            for u in 1..=n {
                let r = reps[u as usize - 1];
                if uf.find(r) != uf.find(u) {
                    return Err(format!("op {op}: rep({u}) = {r} is not in {u}'s component"));
                }
                for v in u + 1..=n {
                    let dc_conn = reps[u as usize - 1] == reps[v as usize - 1];
                    let uf_conn = uf.find(u) == uf.find(v);
                    if dc_conn != uf_conn {
                        return Err(format!(
                            "op {op}: connected({u}, {v}) = {dc_conn}, union-find says {uf_conn}"
                        ));
                    }
                }
            }
        }
        Ok("10000 ops on n=100, full partition agreement after every op".into())
    });
}

#[test]
fn criterion_08_quasilinear_scaling() {
    criterion(8, "quasilinear scaling", || {
        let sizes = [10_000usize, 100_000, 1_000_000];
        let mut medians = Vec::new();
        for (i, &records) in sizes.iter().enumerate() {
            let n = (records / 10) as u32;
            let g = gen_random_temporal(n, records, 2 * records as Time, true, 42 + i as u64)
                .map_err(|e| e.to_string())?;
            let mut times = Vec::new();
            for _ in 0..5 {
                let start = Instant::now();
                let pr = profile_st(&g, 1, 2).map_err(|e| e.to_string())?;
                times.push(start.elapsed());
                std::hint::black_box(pr);
            }
            times.sort();
            medians.push(times[2]);
        }
        let detail = format!(
            "medians: 1e4 -> {:?}, 1e5 -> {:?}, 1e6 -> {:?}",
            medians[0], medians[1], medians[2]
        );
        for w in medians.windows(2) {
            let ratio = w[1].as_secs_f64() / w[0].as_secs_f64().max(1e-9);
            if ratio > 13.0 {
                return Err(format!("growth {ratio:.1}x per decade exceeds 13x ({detail})"));
            }
        }
        if medians[2].as_secs_f64() >= 60.0 {
            return Err(format!("1e6 records took {:?}, budget is 60 s", medians[2]));
        }
        Ok(detail)
    });
}

#[test]
fn criterion_09_profile_output_is_minimal() {
    criterion(9, "profile minimality", || {
        for i in 0..1000u64 {
            let (g, s, t) = small_corpus_instance(i);
            let pr = profile_st(&g, s, t).map_err(|e| e.to_string())?;
            let compacted = compact_profile(pr.clone());
            if compacted != pr {
                return Err(format!(
                    "instance {i}: sweep output is not a fixed point of compaction: {pr:?} vs {compacted:?}"
                ));
            }
        }
        Ok("1000 instances, sweep output is a compaction fixed point".into())
    });
}

/// Maximum integer departure from `s` that still reaches `w` by `deadline`
/// in the prefix graph, by brute-force time-stepped reachability. Edges
/// are the prefix's records with their full presence intervals.
fn brute_last_departures(
    g: &TemporalGraph,
    prefix_handles: &[u32],
    s: Vertex,
    deadline: Time,
) -> Vec<Option<Time>> {
    let n = g.n() as usize;
    let mut best: Vec<Option<Time>> = vec![None; n + 1];
    let lo = prefix_handles
        .iter()
        .map(|&h| g.edge(h).unwrap().start)
        .min()
        .unwrap_or(deadline);
    let mut lambda = deadline;
    while lambda >= lo.min(deadline) {
        let mut reach = vec![false; n + 1];
        reach[s as usize] = true;
        for tau in lambda..=deadline {
            loop {
                let mut grew = false;
                for &h in prefix_handles {
                    let e = g.edge(h).unwrap();
                    if e.start <= tau && tau <= e.end {
                        let (a, b) = (e.tail as usize, e.head as usize);
                        if reach[a] != reach[b] {
                            reach[a] = true;
                            reach[b] = true;
                            grew = true;
                        }
                    }
                }
                if !grew {
                    break;
                }
            }
        }
        for w in 1..=n {
            if reach[w] && best[w].is_none() {
                best[w] = Some(lambda);
            }
        }
        lambda -= 1;
    }
    best
}

#[test]
fn criterion_10_last_departure_table_audit() {
    criterion(10, "last-departure table audit", || {
        let mut events_checked = 0usize;
        for i in 0..100u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(0x1D7 ^ i);
            let n: u32 = rng.random_range(2..=6);
            let records: usize = rng.random_range(1..=12);
            let g = gen_random_temporal(n, records, 12, true, i.wrapping_mul(53) ^ 0x6666).unwrap();
            let s = rng.random_range(1..=n);
            let mut t = rng.random_range(1..=n);
            while t == s {
                t = rng.random_range(1..=n);
            }
            let events = build_event_list(&g);
            // prefix graph after each event: records whose start event
            // has been processed
            let mut started: Vec<u32> = Vec::new();
            let mut failure: Option<String> = None;
            let mut cursor = 0usize;
            profile_st_traced(&g, s, t, |idx, dc, ldt| {
                if failure.is_some() {
                    return;
                }
                while cursor <= idx {
                    if events[cursor].kind == EventKind::Start {
                        started.push(events[cursor].handle);
                    }
                    cursor += 1;
                }
                let tau = events[idx].time;
                let want = brute_last_departures(&g, &started, s, tau);
                for w in 1..=n {
                    if w == s {
                        continue;
                    }
                    let rep = dc.rep(w).unwrap();
                    let got = ldt[rep as usize];
                    if got != want[w as usize] {
                        failure = Some(format!(
                            "instance {i}, event {idx} (time {tau}): slot for vertex {w} holds {got:?}, brute force says {:?}",
                            want[w as usize]
                        ));
                        return;
                    }
                    events_checked += 1;
                }
            })
            .map_err(|e| e.to_string())?;
            if let Some(f) = failure {
                return Err(f);
            }
        }
        Ok(format!("100 instances, {events_checked} per-event slot checks agree"))
    });
}
