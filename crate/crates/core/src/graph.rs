//! Interval temporal graphs: vertices connected by edges that are present
//! over integer time intervals and carry a constant traversal delay.

use crate::error::{Error, Result};

/// Vertex id, 1-based: valid ids are `1..=n`.
pub type Vertex = u32;

/// Integer time. Negative infinity is never encoded as a time; absence is
/// expressed with `Option<Time>` throughout.
pub type Time = i64;

/// Identifies one stored presence of an edge. Handles are assigned densely
/// in insertion order and distinguish parallel presences of the same pair.
pub type EdgeHandle = u32;

/// One presence of an edge: traversable from `tail` at any `t` in
/// `[start, end]`, arriving at `head` at `t + delay`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TemporalEdge {
    pub tail: Vertex,
    pub head: Vertex,
    pub start: Time,
    pub end: Time,
    pub delay: Time,
    pub handle: EdgeHandle,
}

impl TemporalEdge {
    /// The same presence traversed in the opposite direction.
    pub fn reversed(&self) -> TemporalEdge {
        TemporalEdge {
            tail: self.head,
            head: self.tail,
            ..*self
        }
    }
}

/// An interval temporal graph on vertices `1..=n`.
///
/// Undirected graphs store one record per symmetric pair and interpret it
/// both ways; the temporal edge count `M` then reports two per record.
/// Parallel and overlapping presences of the same pair are permitted,
/// loops are not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemporalGraph {
    n: u32,
    directed: bool,
    edges: Vec<TemporalEdge>,
}

impl TemporalGraph {
    pub fn new(n: u32, directed: bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("vertex count must be at least 1".into()));
        }
        Ok(TemporalGraph {
            n,
            directed,
            edges: Vec::new(),
        })
    }

    /// Adds a presence and returns its handle. Rejects loops, endpoints
    /// outside `1..=n`, inverted intervals and negative delays.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex, start: Time, end: Time, delay: Time) -> Result<EdgeHandle> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidInput(format!("loop at vertex {u}")));
        }
        if start > end {
            return Err(Error::InvalidInput(format!(
                "presence interval [{start}, {end}] is inverted"
            )));
        }
        if delay < 0 {
            return Err(Error::InvalidInput(format!("negative delay {delay}")));
        }
        let handle = self.edges.len() as EdgeHandle;
        self.edges.push(TemporalEdge {
            tail: u,
            head: v,
            start,
            end,
            delay,
            handle,
        });
        Ok(handle)
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v == 0 || v > self.n {
            return Err(Error::InvalidInput(format!(
                "vertex {v} out of range [1, {}]",
                self.n
            )));
        }
        Ok(())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn directed(&self) -> bool {
        self.directed
    }

    pub fn edges(&self) -> &[TemporalEdge] {
        &self.edges
    }

    pub fn edge(&self, handle: EdgeHandle) -> Option<&TemporalEdge> {
        self.edges.get(handle as usize)
    }

    /// Number of stored presence records.
    pub fn record_count(&self) -> usize {
        self.edges.len()
    }

    /// Temporal edge count M: equals the record count for directed graphs
    /// and twice the record count for undirected ones, where each record
    /// also stands for its symmetric twin.
    pub fn temporal_edge_count(&self) -> u64 {
        if self.directed {
            self.edges.len() as u64
        } else {
            2 * self.edges.len() as u64
        }
    }

    pub fn has_zero_delays(&self) -> bool {
        self.edges.iter().all(|e| e.delay == 0)
    }

    /// `(min start, max end)` over all presences, or `None` for an
    /// edgeless graph.
    pub fn time_bounds(&self) -> Option<(Time, Time)> {
        let lo = self.edges.iter().map(|e| e.start).min()?;
        let hi = self.edges.iter().map(|e| e.end).max()?;
        Some((lo, hi))
    }

    pub fn max_delay(&self) -> Time {
        self.edges.iter().map(|e| e.delay).max().unwrap_or(0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EventKind {
    Start,
    End,
}

/// A presence boundary: the moment an edge appears or disappears.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Event {
    pub u: Vertex,
    pub v: Vertex,
    pub time: Time,
    pub kind: EventKind,
    pub handle: EdgeHandle,
}

pub type EventList = Vec<Event>;

/// Expands each stored presence into a start and an end event and sorts by
/// time, with all start events before all end events at equal times. Ties
/// within a kind keep input order, so the result is deterministic.
pub fn build_event_list(g: &TemporalGraph) -> EventList {
    let mut events = Vec::with_capacity(2 * g.record_count());
    for e in g.edges() {
        events.push(Event {
            u: e.tail,
            v: e.head,
            time: e.start,
            kind: EventKind::Start,
            handle: e.handle,
        });
        events.push(Event {
            u: e.tail,
            v: e.head,
            time: e.end,
            kind: EventKind::End,
            handle: e.handle,
        });
    }
    events.sort_by_key(|ev| (ev.time, ev.kind == EventKind::End));
    events
}
