//! Earliest-arrival profiles for zero-delay undirected interval temporal
//! graphs.
//!
//! The profile of a source/target pair maps each departure time to the
//! earliest achievable arrival. It is piecewise linear with slopes 0 and 1
//! and represented by triples `(alpha, beta, slope)`: the triple covers
//! departure times in `(alpha_prev, alpha]` with value
//! `beta + slope * (tau - alpha)`. Beyond the last alpha the target is
//! unreachable.
//!
//! `profile_st` computes a minimal representation with one sweep over
//! presence events, maintaining connected components under edge insertions
//! and deletions and, per component, the last departure time from the
//! source that still reaches it.

use crate::dynconn::DynConn;
use crate::error::{Error, Result};
use crate::graph::{build_event_list, EventKind, TemporalGraph, Time, Vertex};
use crate::path::TemporalPath;
use crate::routing;

/// One linear piece of a profile. `slope` is 0 or 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Triple {
    pub alpha: Time,
    pub beta: Time,
    pub slope: u8,
}

impl Triple {
    pub fn new(alpha: Time, beta: Time, slope: u8) -> Self {
        assert!(slope <= 1, "profile slopes are 0 or 1");
        Triple { alpha, beta, slope }
    }
}

/// A piecewise-linear earliest-arrival function.
///
/// `Identity` is the dedicated representation for the source-equals-target
/// case, where every departure arrives instantly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Profile {
    Identity,
    Polyline(Vec<Triple>),
}

impl Profile {
    pub fn empty() -> Self {
        Profile::Polyline(Vec::new())
    }

    pub fn triples(&self) -> &[Triple] {
        match self {
            Profile::Identity => &[],
            Profile::Polyline(ts) => ts,
        }
    }

    /// Earliest arrival when departing no earlier than `tau`, or `None`
    /// when the target is unreachable from then on.
    pub fn evaluate(&self, tau: Time) -> Option<Time> {
        match self {
            Profile::Identity => Some(tau),
            Profile::Polyline(ts) => {
                let i = ts.partition_point(|t| t.alpha < tau);
                let t = ts.get(i)?;
                Some(t.beta + t.slope as Time * (tau - t.alpha))
            }
        }
    }
}

/// Removes redundant triples: pieces with an empty domain and consecutive
/// collinear pieces. Function values are unchanged at every time; in the
/// result no triple can be dropped without changing the function.
pub fn compact_profile(raw: Profile) -> Profile {
    let Profile::Polyline(triples) = raw else {
        return raw;
    };
    let mut out: Vec<Triple> = Vec::with_capacity(triples.len().min(16));
    for t in triples {
        debug_assert!(t.slope <= 1);
        if let Some(top) = out.last_mut() {
            assert!(t.alpha >= top.alpha, "profile alphas must be non-decreasing");
            if t.alpha == top.alpha {
                // empty domain: the earlier triple already covers alpha
                continue;
            }
            let collinear = t.slope == top.slope
                && match t.slope {
                    0 => t.beta == top.beta,
                    _ => t.beta - t.alpha == top.beta - top.alpha,
                };
            if collinear {
                *top = t;
                continue;
            }
        }
        out.push(t);
    }
    Profile::Polyline(out)
}

/// Duration and departure of a fastest temporal path, read off a profile.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fastest {
    pub duration: Time,
    pub depart: Time,
}

/// Minimum of `beta - alpha` over the triples: slope-1 pieces have that
/// duration everywhere, slope-0 pieces attain it at their right endpoint.
/// Departure is the alpha of the earliest minimizing triple. Empty profile
/// means unreachable; identity profiles are rejected.
pub fn fastest_from_profile(pr: &Profile) -> Result<Option<Fastest>> {
    let triples = match pr {
        Profile::Identity => {
            return Err(Error::Usage(
                "fastest path is undefined when source equals target".into(),
            ))
        }
        Profile::Polyline(ts) => ts,
    };
    let mut best: Option<Fastest> = None;
    for t in triples {
        let duration = t.beta - t.alpha;
        if best.map_or(true, |b| duration < b.duration) {
            best = Some(Fastest {
                duration,
                depart: t.alpha,
            });
        }
    }
    Ok(best)
}

fn check_sweep_input(g: &TemporalGraph, s: Vertex, t: Vertex) -> Result<()> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if g.directed() {
        return Err(Error::Unsupported(
            "profile sweep requires an undirected graph".into(),
        ));
    }
    if !g.has_zero_delays() {
        return Err(Error::Unsupported(
            "profile sweep requires all delays to be zero (nonzero delay present)".into(),
        ));
    }
    Ok(())
}

/// The profile of the `s`/`t` pair in an undirected zero-delay graph, as a
/// minimal triple list. `s == t` yields the identity profile.
///
/// Runs in `O(M (log M + log^2 n))`: one sorted event sweep with a
/// fully-dynamic connectivity structure underneath.
pub fn profile_st(g: &TemporalGraph, s: Vertex, t: Vertex) -> Result<Profile> {
    profile_st_traced(g, s, t, |_, _, _| {})
}

/// `profile_st` with a per-event observer, called after each event with the
/// event index, the connectivity structure and the last-departure table
/// (indexed by component id). Used to audit the sweep's invariants.
pub fn profile_st_traced<F>(g: &TemporalGraph, s: Vertex, t: Vertex, mut observe: F) -> Result<Profile>
where
    F: FnMut(usize, &mut DynConn, &[Option<Time>]),
{
    check_sweep_input(g, s, t)?;
    if s == t {
        return Ok(Profile::Identity);
    }

    let n = g.n();
    let events = build_event_list(g);
    let mut dc = DynConn::new(n)?;
    // last departure time per component id; None stands for minus infinity
    let mut ldt: Vec<Option<Time>> = vec![None; n as usize + 1];
    let mut raw: Vec<Triple> = Vec::new();

    for (idx, ev) in events.iter().enumerate() {
        let tau = ev.time;
        let cs = dc.rep(s)?;
        let ct = dc.rep(t)?;
        ldt[cs as usize] = Some(tau);
        let lambda_t = ldt[ct as usize];
        let st_connected = cs == ct;

        match ev.kind {
            EventKind::Start => {
                let lambda = ldt[dc.rep(ev.u)? as usize].max(ldt[dc.rep(ev.v)? as usize]);
                dc.insert(ev.u, ev.v, ev.handle as u64)?;
                let c = dc.rep(ev.u)?;
                ldt[c as usize] = lambda;
                if dc.rep(t)? == c && lambda > lambda_t {
                    raw.push(Triple::new(lambda.unwrap(), tau, 0));
                }
            }
            EventKind::End => {
                let lambda = ldt[dc.rep(ev.u)? as usize];
                dc.delete(ev.handle as u64)?;
                ldt[dc.rep(ev.u)? as usize] = lambda;
                ldt[dc.rep(ev.v)? as usize] = lambda;
            }
        }
        if st_connected {
            raw.push(Triple::new(tau, tau, 1));
        }
        observe(idx, &mut dc, &ldt);
    }

    Ok(compact_profile(Profile::Polyline(raw)))
}

/// A fastest temporal path: the profile gives the optimal departure, an
/// earliest-arrival run from that departure yields a witness path.
pub fn fastest_path(g: &TemporalGraph, s: Vertex, t: Vertex) -> Result<Option<TemporalPath>> {
    let pr = profile_st(g, s, t)?;
    let Some(best) = fastest_from_profile(&pr)? else {
        return Ok(None);
    };
    let ea = routing::earliest_arrival(g, s, best.depart)?;
    let path = ea
        .path_to(g, t)
        .expect("profile reported a departure but no earliest-arrival path exists");
    debug_assert_eq!(path.arrival(), Some(best.depart + best.duration));
    Ok(Some(path))
}
