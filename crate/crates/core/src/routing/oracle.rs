//! Exact ground truth over the time-expanded graph.
//!
//! The instance is unrolled over its integer time horizon: one cell per
//! (vertex, time), wait steps to the next time, traversal steps per active
//! presence. A backward pass over the grid yields the earliest arrival at
//! the target for every departure time at once; a 0-1 breadth-first search
//! yields the minimum edge count. Exponential in nothing, linear in the
//! grid, and therefore capped: usable at desk scale only, as a
//! cross-check for everything else.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{TemporalGraph, Time, Vertex};
use crate::profile::Fastest;

const GRID_CELL_LIMIT: i128 = 10_000_000;

/// Exact per-departure arrivals, fastest duration, and shortest length for
/// one source/target pair.
pub struct TimeExpandedOracle {
    lo: Time,
    hi: Time,
    /// earliest arrival at the target for departures lo..=hi
    profile: Vec<Option<Time>>,
    fastest: Option<Fastest>,
    shortest: Option<u32>,
}

impl TimeExpandedOracle {
    /// Earliest arrival at the target for departures no earlier than
    /// `tau`. Departures before the first presence behave like the first
    /// one; departures after the last presence end are unreachable.
    pub fn profile_value(&self, tau: Time) -> Option<Time> {
        if self.profile.is_empty() || tau > self.hi {
            return None;
        }
        self.profile[(tau.max(self.lo) - self.lo) as usize]
    }

    pub fn fastest(&self) -> Option<Fastest> {
        self.fastest
    }

    /// Minimum edge count over all temporal source-target walks, which
    /// equals the path minimum since dropping loops never lengthens.
    pub fn shortest_len(&self) -> Option<u32> {
        self.shortest
    }
}

pub fn oracle_time_expanded(g: &TemporalGraph, s: Vertex, t: Vertex) -> Result<TimeExpandedOracle> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t {
        return Err(Error::InvalidInput(
            "time-expanded oracle requires distinct source and target".into(),
        ));
    }
    let Some((lo, hi)) = g.time_bounds() else {
        return Ok(TimeExpandedOracle {
            lo: 0,
            hi: -1,
            profile: Vec::new(),
            fastest: None,
            shortest: None,
        });
    };
    let top = hi + g.max_delay();
    let span = (top - lo + 1) as i128;
    let n = g.n() as i128;
    if span * n > GRID_CELL_LIMIT {
        return Err(Error::Capacity(format!(
            "time-expanded grid needs {} cells, limit is {GRID_CELL_LIMIT}",
            span * n
        )));
    }
    let grid = Grid::new(g, lo, top);
    let ea = grid.earliest_arrival_to(t);
    let profile: Vec<Option<Time>> = (lo..=hi).map(|tau| ea.get(&grid, s, tau)).collect();

    let mut fastest: Option<Fastest> = None;
    for (i, arr) in profile.iter().enumerate() {
        if let Some(arr) = arr {
            let depart = lo + i as Time;
            let duration = arr - depart;
            if fastest.is_none_or(|b| duration < b.duration) {
                fastest = Some(Fastest { duration, depart });
            }
        }
    }
    let shortest = grid.shortest_len(s, t);
    Ok(TimeExpandedOracle {
        lo,
        hi,
        profile,
        fastest,
        shortest,
    })
}

struct Grid<'a> {
    g: &'a TemporalGraph,
    lo: Time,
    top: Time,
    span: usize,
    /// presences leaving each vertex: (neighbor, start, end, delay)
    out: Vec<Vec<(Vertex, Time, Time, Time)>>,
}

impl<'a> Grid<'a> {
    fn new(g: &'a TemporalGraph, lo: Time, top: Time) -> Self {
        let mut out: Vec<Vec<(Vertex, Time, Time, Time)>> = vec![Vec::new(); g.n() as usize + 1];
        for e in g.edges() {
            out[e.tail as usize].push((e.head, e.start, e.end, e.delay));
            if !g.directed() {
                out[e.head as usize].push((e.tail, e.start, e.end, e.delay));
            }
        }
        Grid {
            g,
            lo,
            top,
            span: (top - lo + 1) as usize,
            out,
        }
    }

    fn cell(&self, v: Vertex, tau: Time) -> usize {
        (v as usize - 1) * self.span + (tau - self.lo) as usize
    }

    /// Earliest arrival at `t` from every cell, by a backward pass over
    /// time layers. Within one layer, zero-delay presences move without
    /// advancing time; their effect is closed per layer.
    fn earliest_arrival_to(&self, t: Vertex) -> ArrivalGrid {
        let n = self.g.n() as usize;
        let mut ea = vec![Time::MAX; n * self.span];
        let mut tent = vec![Time::MAX; n + 1];
        let mut comp = vec![0u32; n + 1];
        let mut stamp = 0u32;
        let mut queue = Vec::new();

        for tau in (self.lo..=self.top).rev() {
            for v in 1..=n as u32 {
                let mut best = if v == t { tau } else { Time::MAX };
                if tau < self.top {
                    best = best.min(ea[self.cell(v, tau + 1)]);
                }
                for &(w, start, end, delay) in &self.out[v as usize] {
                    if delay > 0 && start <= tau && tau <= end {
                        let arr = tau + delay;
                        if arr <= self.top {
                            best = best.min(ea[self.cell(w, arr)]);
                        }
                    }
                }
                tent[v as usize] = best;
            }
            if self.g.directed() {
                // directed zero-delay moves: relax to a fixpoint
                loop {
                    let mut changed = false;
                    for v in 1..=n as u32 {
                        let mut best = tent[v as usize];
                        for &(w, start, end, delay) in &self.out[v as usize] {
                            if delay == 0 && start <= tau && tau <= end {
                                best = best.min(tent[w as usize]);
                            }
                        }
                        if best < tent[v as usize] {
                            tent[v as usize] = best;
                            changed = true;
                        }
                    }
                    if !changed {
                        break;
                    }
                }
                for v in 1..=n as u32 {
                    ea[self.cell(v, tau)] = tent[v as usize];
                }
            } else {
                // undirected zero-delay moves: per-component minimum
                stamp += 1;
                for v in 1..=n as u32 {
                    if comp[v as usize] == stamp {
                        continue;
                    }
                    queue.clear();
                    queue.push(v);
                    comp[v as usize] = stamp;
                    let mut best = tent[v as usize];
                    let mut i = 0;
                    while i < queue.len() {
                        let x = queue[i];
                        i += 1;
                        for &(w, start, end, delay) in &self.out[x as usize] {
                            if delay == 0 && start <= tau && tau <= end && comp[w as usize] != stamp
                            {
                                comp[w as usize] = stamp;
                                best = best.min(tent[w as usize]);
                                queue.push(w);
                            }
                        }
                    }
                    for &x in &queue {
                        ea[self.cell(x, tau)] = best;
                    }
                }
            }
        }
        ArrivalGrid { ea }
    }

    /// Minimum traversal count from `(s, lo)` to the target at any time:
    /// waiting is free, traversing costs one.
    fn shortest_len(&self, s: Vertex, t: Vertex) -> Option<u32> {
        let n = self.g.n() as usize;
        let mut dist = vec![u32::MAX; n * self.span];
        let mut dq: VecDeque<(Vertex, Time)> = VecDeque::new();
        dist[self.cell(s, self.lo)] = 0;
        dq.push_back((s, self.lo));
        let mut best = u32::MAX;
        while let Some((v, tau)) = dq.pop_front() {
            let d = dist[self.cell(v, tau)];
            if v == t {
                best = best.min(d);
                continue;
            }
            if d >= best {
                continue;
            }
            if tau < self.top {
                let c = self.cell(v, tau + 1);
                if dist[c] > d {
                    dist[c] = d;
                    dq.push_front((v, tau + 1));
                }
            }
            for &(w, start, end, delay) in &self.out[v as usize] {
                if start <= tau && tau <= end && tau + delay <= self.top {
                    let c = self.cell(w, tau + delay);
                    if dist[c] > d + 1 {
                        dist[c] = d + 1;
                        dq.push_back((w, tau + delay));
                    }
                }
            }
        }
        (best != u32::MAX).then_some(best)
    }
}

struct ArrivalGrid {
    ea: Vec<Time>,
}

impl ArrivalGrid {
    fn get(&self, grid: &Grid, v: Vertex, tau: Time) -> Option<Time> {
        let x = self.ea[grid.cell(v, tau)];
        (x != Time::MAX).then_some(x)
    }
}
