//! Temporal paths: edge sequences traversed one after another in time,
//! visiting pairwise distinct vertices.

use crate::error::{Error, Result};
use crate::graph::{TemporalEdge, TemporalGraph, Time, Vertex};

/// One traversal: an oriented copy of the presence (tail is where the step
/// leaves from) together with the time it is traversed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathStep {
    pub edge: TemporalEdge,
    pub time: Time,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemporalPath {
    pub steps: Vec<PathStep>,
}

impl TemporalPath {
    pub fn new(steps: Vec<PathStep>) -> Self {
        TemporalPath { steps }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Departure time: traversal time of the first step.
    pub fn departure(&self) -> Option<Time> {
        self.steps.first().map(|s| s.time)
    }

    /// Arrival time: traversal time of the last step plus its delay.
    pub fn arrival(&self) -> Option<Time> {
        self.steps.last().map(|s| s.time + s.edge.delay)
    }
}

/// Duration of a valid path: arrival minus departure.
pub fn duration(p: &TemporalPath) -> Result<Time> {
    let (Some(dep), Some(arr)) = (p.departure(), p.arrival()) else {
        return Err(Error::InvalidInput("empty path has no duration".into()));
    };
    Ok(arr - dep)
}

/// Checks that `p` is a valid temporal path from `s` to `t` in `g`: every
/// step matches a stored presence (orientation per `g.directed()`), is
/// traversed inside its window, steps chain in space and time, and visited
/// vertices are pairwise distinct.
pub fn validate_path(g: &TemporalGraph, p: &TemporalPath, s: Vertex, t: Vertex) -> Result<bool> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if p.is_empty() {
        return Err(Error::InvalidInput("empty path cannot be validated".into()));
    }

    if p.steps[0].edge.tail != s || p.steps.last().unwrap().edge.head != t {
        return Ok(false);
    }

    let mut visited = vec![p.steps[0].edge.tail];
    let mut prev: Option<&PathStep> = None;
    for step in &p.steps {
        let Some(stored) = g.edge(step.edge.handle) else {
            return Ok(false);
        };
        let forward = step.edge == *stored;
        let backward = !g.directed() && step.edge == stored.reversed();
        if !forward && !backward {
            return Ok(false);
        }
        if step.time < step.edge.start || step.time > step.edge.end {
            return Ok(false);
        }
        if let Some(prev) = prev {
            if prev.edge.head != step.edge.tail {
                return Ok(false);
            }
            if prev.time + prev.edge.delay > step.time {
                return Ok(false);
            }
        }
        if visited.contains(&step.edge.head) {
            return Ok(false);
        }
        visited.push(step.edge.head);
        prev = Some(step);
    }
    Ok(true)
}
