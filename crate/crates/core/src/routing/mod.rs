//! General-delay earliest-arrival search and exact desk-scale oracles.
//!
//! The earliest-arrival query is a temporal Dijkstra: presences of each
//! underlying directed edge are preprocessed into a lower envelope (the
//! per-edge arrival profile), so relaxing an edge for a given time at its
//! tail is a binary search.

mod oracle;

pub use oracle::{oracle_time_expanded, TimeExpandedOracle};

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap};

use crate::error::Result;
use crate::graph::{EdgeHandle, TemporalGraph, Time, Vertex};
use crate::path::{PathStep, TemporalPath};
use crate::profile::Fastest;

#[derive(Debug, Clone, Copy)]
struct Segment {
    alpha: Time,
    beta: Time,
    slope: u8,
    handle: EdgeHandle,
}

/// Arrival profile of one underlying directed edge: for a time `tau` at the
/// tail, the earliest arrival at the head over all presences still usable,
/// as a polyline with slopes 0 (wait for a later presence) and 1 (traverse
/// an active presence now). Each piece records a presence achieving it.
pub struct EdgeTimetable {
    segs: Vec<Segment>,
}

impl EdgeTimetable {
    /// `presences`: (start, end, delay, handle) of every presence of the
    /// directed pair.
    fn build(presences: &[(Time, Time, Time, EdgeHandle)]) -> Self {
        // sweep boundaries: each start opens a presence, each end+1 closes one
        let mut times: Vec<Time> = Vec::with_capacity(2 * presences.len());
        let mut opens: BTreeMap<Time, Vec<usize>> = BTreeMap::new();
        let mut closes: BTreeMap<Time, Vec<usize>> = BTreeMap::new();
        for (i, &(start, end, _, _)) in presences.iter().enumerate() {
            times.push(start);
            times.push(end + 1);
            opens.entry(start).or_default().push(i);
            closes.entry(end + 1).or_default().push(i);
        }
        times.sort_unstable();
        times.dedup();

        // suffix minima of start+delay over presences sorted by start
        let mut by_start: Vec<(Time, Time, EdgeHandle)> = presences
            .iter()
            .map(|&(start, _, delay, handle)| (start, start + delay, handle))
            .collect();
        by_start.sort_unstable();
        let mut suffix_best: Vec<(Time, EdgeHandle)> = vec![(0, 0); by_start.len()];
        let mut best = (Time::MAX, EdgeHandle::MAX);
        for i in (0..by_start.len()).rev() {
            let cand = (by_start[i].1, by_start[i].2);
            if cand < best {
                best = cand;
            }
            suffix_best[i] = best;
        }
        let future_from = |bound: Time| -> Option<(Time, EdgeHandle)> {
            let i = by_start.partition_point(|p| p.0 < bound);
            suffix_best.get(i).copied()
        };

        let mut segs = Vec::new();
        if let Some(&first) = times.first() {
            // before anything opens, the best is the cheapest future start
            let (fv, fh) = future_from(first).expect("nonempty presence list");
            segs.push(Segment {
                alpha: first - 1,
                beta: fv,
                slope: 0,
                handle: fh,
            });
        }

        let mut active: BTreeSet<(Time, EdgeHandle)> = BTreeSet::new();
        for w in times.windows(2) {
            let (a, b) = (w[0], w[1] - 1);
            if let Some(close) = closes.get(&a) {
                for &i in close {
                    let (_, _, delay, handle) = presences[i];
                    active.remove(&(delay, handle));
                }
            }
            if let Some(open) = opens.get(&a) {
                for &i in open {
                    let (_, _, delay, handle) = presences[i];
                    active.insert((delay, handle));
                }
            }
            let min_active = active.first().copied();
            let future = future_from(w[1]);
            match (min_active, future) {
                (None, None) => {}
                (None, Some((fv, fh))) => segs.push(Segment {
                    alpha: b,
                    beta: fv,
                    slope: 0,
                    handle: fh,
                }),
                (Some((d, h)), None) => segs.push(Segment {
                    alpha: b,
                    beta: b + d,
                    slope: 1,
                    handle: h,
                }),
                (Some((d, h)), Some((fv, fh))) => {
                    if b + d <= fv {
                        segs.push(Segment {
                            alpha: b,
                            beta: b + d,
                            slope: 1,
                            handle: h,
                        });
                    } else if a + d >= fv {
                        segs.push(Segment {
                            alpha: b,
                            beta: fv,
                            slope: 0,
                            handle: fh,
                        });
                    } else {
                        let cross = fv - d;
                        segs.push(Segment {
                            alpha: cross,
                            beta: fv,
                            slope: 1,
                            handle: h,
                        });
                        segs.push(Segment {
                            alpha: b,
                            beta: fv,
                            slope: 0,
                            handle: fh,
                        });
                    }
                }
            }
        }
        EdgeTimetable { segs }
    }

    /// Earliest arrival at the head given time `tau` at the tail, with a
    /// presence achieving it. `None` once every presence has ended.
    pub fn query(&self, tau: Time) -> Option<(Time, EdgeHandle)> {
        let i = self.segs.partition_point(|s| s.alpha < tau);
        let s = self.segs.get(i)?;
        Some((s.beta + s.slope as Time * (tau - s.alpha), s.handle))
    }
}

/// Per-edge arrival envelopes plus adjacency for a whole graph.
pub struct Timetable {
    adj: Vec<Vec<(Vertex, u32)>>,
    tables: Vec<EdgeTimetable>,
}

impl Timetable {
    pub fn build(g: &TemporalGraph) -> Self {
        let mut groups: BTreeMap<(Vertex, Vertex), Vec<(Time, Time, Time, EdgeHandle)>> =
            BTreeMap::new();
        for e in g.edges() {
            let rec = (e.start, e.end, e.delay, e.handle);
            groups.entry((e.tail, e.head)).or_default().push(rec);
            if !g.directed() {
                groups.entry((e.head, e.tail)).or_default().push(rec);
            }
        }
        let mut adj: Vec<Vec<(Vertex, u32)>> = vec![Vec::new(); g.n() as usize + 1];
        let mut tables = Vec::with_capacity(groups.len());
        for ((u, v), presences) in groups {
            adj[u as usize].push((v, tables.len() as u32));
            tables.push(EdgeTimetable::build(&presences));
        }
        Timetable { adj, tables }
    }

    fn out(&self, u: Vertex) -> &[(Vertex, u32)] {
        &self.adj[u as usize]
    }

    fn table(&self, i: u32) -> &EdgeTimetable {
        &self.tables[i as usize]
    }
}

#[derive(Debug, Clone, Copy)]
struct PredStep {
    from: Vertex,
    handle: EdgeHandle,
    time: Time,
}

/// Result of an earliest-arrival search: per-vertex arrival times plus
/// predecessor records sufficient to extract witness paths.
pub struct EarliestArrival {
    depart: Time,
    arrival: Vec<Option<Time>>,
    pred: Vec<Option<PredStep>>,
}

impl EarliestArrival {
    pub fn depart(&self) -> Time {
        self.depart
    }

    /// Earliest arrival at `v` over walks leaving the source no earlier
    /// than the departure bound, or `None` if unreachable.
    pub fn arrival(&self, v: Vertex) -> Option<Time> {
        self.arrival.get(v as usize).copied().flatten()
    }

    /// Extracts the witness path to `v` from the predecessor records.
    pub fn path_to(&self, g: &TemporalGraph, v: Vertex) -> Option<TemporalPath> {
        self.arrival(v)?;
        let mut steps = Vec::new();
        let mut cur = v;
        while let Some(p) = self.pred.get(cur as usize).copied().flatten() {
            let stored = *g.edge(p.handle).expect("predecessor references a stored edge");
            let edge = if stored.tail == p.from { stored } else { stored.reversed() };
            steps.push(PathStep { edge, time: p.time });
            cur = p.from;
        }
        if steps.is_empty() {
            return None; // v is the source itself
        }
        steps.reverse();
        Some(TemporalPath::new(steps))
    }
}

/// Temporal Dijkstra from `s` with first traversal no earlier than
/// `depart`. With non-negative delays the per-vertex walk optimum equals
/// the path optimum, so witness paths are simple.
pub fn earliest_arrival(g: &TemporalGraph, s: Vertex, depart: Time) -> Result<EarliestArrival> {
    let tt = Timetable::build(g);
    earliest_arrival_with(g, &tt, s, depart)
}

/// Like [`earliest_arrival`] but reusing a prebuilt timetable, for query
/// batches over one graph.
pub fn earliest_arrival_with(
    g: &TemporalGraph,
    tt: &Timetable,
    s: Vertex,
    depart: Time,
) -> Result<EarliestArrival> {
    g.check_vertex(s)?;
    let n = g.n() as usize;
    let mut arrival: Vec<Option<Time>> = vec![None; n + 1];
    let mut pred: Vec<Option<PredStep>> = vec![None; n + 1];
    let mut heap: BinaryHeap<Reverse<(Time, Vertex)>> = BinaryHeap::new();
    arrival[s as usize] = Some(depart);
    heap.push(Reverse((depart, s)));
    while let Some(Reverse((d, u))) = heap.pop() {
        if arrival[u as usize] != Some(d) {
            continue;
        }
        for &(v, ti) in tt.out(u) {
            let Some((arr, handle)) = tt.table(ti).query(d) else {
                continue;
            };
            if arrival[v as usize].is_none_or(|cur| arr < cur) {
                arrival[v as usize] = Some(arr);
                let start = g.edge(handle).unwrap().start;
                pred[v as usize] = Some(PredStep {
                    from: u,
                    handle,
                    time: d.max(start),
                });
                heap.push(Reverse((arr, v)));
            }
        }
    }
    Ok(EarliestArrival { depart, arrival, pred })
}

/// Minimum duration over the given departure candidates: for each `c`, an
/// earliest-arrival run bounds the duration by `arrival - c`. Exact when
/// every optimal departure is among the candidates, which holds for the
/// reduction instances whose source-incident presences are points.
pub fn fastest_by_departure_sweep(
    g: &TemporalGraph,
    s: Vertex,
    t: Vertex,
    candidates: &[Time],
) -> Result<Option<Fastest>> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    let tt = Timetable::build(g);
    let mut sorted: Vec<Time> = candidates.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut best: Option<Fastest> = None;
    for &c in &sorted {
        let ea = earliest_arrival_with(g, &tt, s, c)?;
        if let Some(arr) = ea.arrival(t) {
            let duration = arr - c;
            if best.is_none_or(|b| duration < b.duration) {
                best = Some(Fastest { duration, depart: c });
            }
        }
    }
    Ok(best)
}

/// All simple temporal `s`-`t` paths with at most `max_len` edges, one per
/// feasible presence sequence. Traversal times are canonical: the latest
/// feasible departure followed by earliest feasible traversals, which
/// realizes the minimum duration of each sequence. Exponential; intended
/// for tiny instances.
pub fn enumerate_paths(
    g: &TemporalGraph,
    s: Vertex,
    t: Vertex,
    max_len: usize,
) -> Result<Vec<TemporalPath>> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t || max_len == 0 {
        return Ok(Vec::new());
    }
    let mut adj: Vec<Vec<(EdgeHandle, bool)>> = vec![Vec::new(); g.n() as usize + 1];
    for e in g.edges() {
        adj[e.tail as usize].push((e.handle, true));
        if !g.directed() {
            adj[e.head as usize].push((e.handle, false));
        }
    }

    struct Dfs<'a> {
        g: &'a TemporalGraph,
        adj: &'a [Vec<(EdgeHandle, bool)>],
        t: Vertex,
        max_len: usize,
        visited: Vec<bool>,
        shape: Vec<(EdgeHandle, bool)>,
        out: Vec<TemporalPath>,
    }

    impl Dfs<'_> {
        fn run(&mut self, v: Vertex, arrived: Option<Time>) {
            if v == self.t {
                self.out.push(retime_shape(self.g, &self.shape));
                return;
            }
            if self.shape.len() == self.max_len {
                return;
            }
            let adj = self.adj;
            for &(handle, forward) in &adj[v as usize] {
                let e = self.g.edge(handle).unwrap();
                let w = if forward { e.head } else { e.tail };
                if self.visited[w as usize] {
                    continue;
                }
                let traverse = match arrived {
                    None => e.start,
                    Some(a) => a.max(e.start),
                };
                if traverse > e.end {
                    continue;
                }
                self.visited[w as usize] = true;
                self.shape.push((handle, forward));
                self.run(w, Some(traverse + e.delay));
                self.shape.pop();
                self.visited[w as usize] = false;
            }
        }
    }

    let mut visited = vec![false; g.n() as usize + 1];
    visited[s as usize] = true;
    let mut dfs = Dfs {
        g,
        adj: &adj,
        t,
        max_len,
        visited,
        shape: Vec::new(),
        out: Vec::new(),
    };
    dfs.run(s, None);
    Ok(dfs.out)
}

/// Latest feasible departure for a fixed presence sequence, then earliest
/// traversals forward.
fn retime_shape(g: &TemporalGraph, shape: &[(EdgeHandle, bool)]) -> TemporalPath {
    let edges: Vec<_> = shape
        .iter()
        .map(|&(h, forward)| {
            let stored = *g.edge(h).unwrap();
            if forward {
                stored
            } else {
                stored.reversed()
            }
        })
        .collect();
    let k = edges.len();
    let mut latest = vec![0; k];
    latest[k - 1] = edges[k - 1].end;
    for i in (0..k - 1).rev() {
        latest[i] = edges[i].end.min(latest[i + 1] - edges[i].delay);
    }
    let mut steps = Vec::with_capacity(k);
    let mut tau = latest[0];
    for (i, e) in edges.iter().enumerate() {
        if i > 0 {
            tau = tau.max(e.start);
        }
        steps.push(PathStep { edge: *e, time: tau });
        tau += e.delay;
    }
    TemporalPath::new(steps)
}
