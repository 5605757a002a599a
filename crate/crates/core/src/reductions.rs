//! Instance generators built from triangle-detection reductions, brute
//! force triangle detectors, and random instance generators.
//!
//! Each generator maps a static graph to a temporal instance whose optimal
//! path answer encodes the presence of a (negative) triangle, so the
//! routing and profile machinery can be cross-validated end to end: the
//! brute-force detector on the static graph and the path query on the
//! gadget must always agree.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{TemporalGraph, Time, Vertex};

/// Simple undirected loopless graph, edges normalized to `u < v`.
#[derive(Debug, Clone)]
pub struct SimpleGraph {
    n: u32,
    edges: Vec<(Vertex, Vertex)>,
}

impl SimpleGraph {
    pub fn new(n: u32, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut norm = Vec::new();
        for (u, v) in edges {
            norm.push(normalize_edge(n, u, v)?);
        }
        check_no_duplicates(&norm)?;
        Ok(SimpleGraph { n, edges: norm })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self) -> Vec<Vec<Vertex>> {
        let mut adj = vec![Vec::new(); self.n as usize + 1];
        for &(u, v) in &self.edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        adj
    }
}

/// Simple undirected loopless graph with integer edge weights.
#[derive(Debug, Clone)]
pub struct WeightedGraph {
    n: u32,
    edges: Vec<(Vertex, Vertex, i64)>,
}

impl WeightedGraph {
    pub fn new(n: u32, edges: impl IntoIterator<Item = (Vertex, Vertex, i64)>) -> Result<Self> {
        let mut norm = Vec::new();
        for (u, v, w) in edges {
            let (u, v) = normalize_edge(n, u, v)?;
            norm.push((u, v, w));
        }
        let pairs: Vec<_> = norm.iter().map(|&(u, v, _)| (u, v)).collect();
        check_no_duplicates(&pairs)?;
        Ok(WeightedGraph { n, edges: norm })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn edges(&self) -> &[(Vertex, Vertex, i64)] {
        &self.edges
    }
}

fn normalize_edge(n: u32, u: Vertex, v: Vertex) -> Result<(Vertex, Vertex)> {
    if u == 0 || u > n || v == 0 || v > n {
        return Err(Error::InvalidInput(format!(
            "edge ({u}, {v}) out of range [1, {n}]"
        )));
    }
    if u == v {
        return Err(Error::InvalidInput(format!("loop at vertex {u}")));
    }
    Ok((u.min(v), u.max(v)))
}

fn check_no_duplicates(edges: &[(Vertex, Vertex)]) -> Result<()> {
    let mut sorted = edges.to_vec();
    sorted.sort_unstable();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(Error::InvalidInput(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
    }
    Ok(())
}

/// A generated temporal instance with its query endpoints and, when the
/// generator knows them, the exhaustive departure candidates for the
/// fastest-duration sweep.
#[derive(Debug, Clone)]
pub struct TemporalInstance {
    pub graph: TemporalGraph,
    pub source: Vertex,
    pub target: Vertex,
    pub candidates: Vec<Time>,
}

/// Gadget vertex numbering: source 1, target 2, then the vertex copies in
/// block-contiguous layers.
fn layer_vertex(n: u32, layer: u32, v: Vertex) -> Vertex {
    2 + (layer - 1) * n + v
}

fn cap(x: Option<i64>) -> Result<i64> {
    x.ok_or_else(|| Error::Capacity("generator parameters overflow 64-bit times".into()))
}

/// Negative-triangle gadget: the fastest source-target duration is below
/// `2T` exactly when the weighted graph has a triangle of negative total
/// weight. Weights are doubled internally so every derived delay is an
/// integer; the sign of triangle sums is unaffected. Returns the instance
/// and the threshold `T`.
pub fn gen_negative_triangle_instance(g: &WeightedGraph) -> Result<(TemporalInstance, Time)> {
    let n = g.n() as i64;
    let m = g.edges().len() as i64;
    let scaled: Vec<(Vertex, Vertex, i64)> = g
        .edges()
        .iter()
        .map(|&(u, v, w)| Ok((u, v, cap(w.checked_mul(2))?)))
        .collect::<Result<_>>()?;
    let wmax = scaled.iter().map(|&(_, _, w)| w.abs()).max().unwrap_or(0);
    let t_bound = cap(2i64.checked_mul(n).and_then(|x| x.checked_mul(wmax)))?;
    let horizon = cap(2i64.checked_mul(m).and_then(|x| x.checked_mul(t_bound)))?;

    let mut h = TemporalGraph::new(2 + 3 * g.n(), false)?;
    let (s, t) = (1, 2);
    for &(u, v, w) in &scaled {
        let mid_delay = t_bound / 2 + w;
        h.add_edge(layer_vertex(g.n(), 1, u), layer_vertex(g.n(), 2, v), 0, horizon, mid_delay)?;
        h.add_edge(layer_vertex(g.n(), 2, u), layer_vertex(g.n(), 3, v), 0, horizon, mid_delay)?;
    }
    let mut candidates = Vec::with_capacity(scaled.len());
    for (i, &(u, v, w)) in scaled.iter().enumerate() {
        let at = cap((2 * i as i64).checked_mul(t_bound))?;
        let endpoint_delay = (t_bound + w) / 2;
        h.add_edge(s, layer_vertex(g.n(), 1, u), at, at, endpoint_delay)?;
        h.add_edge(layer_vertex(g.n(), 3, v), t, at, cap(at.checked_add(2 * t_bound))?, endpoint_delay)?;
        candidates.push(at);
    }
    Ok((
        TemporalInstance {
            graph: h,
            source: s,
            target: t,
            candidates,
        },
        t_bound,
    ))
}

/// Uniform delay-one triangle gadget: the fastest source-target duration
/// equals 4 exactly when the graph has a triangle. Returns the instance
/// and the departure spacing `N`.
pub fn gen_triangle_delay_one(g: &SimpleGraph) -> Result<(TemporalInstance, Time)> {
    let (instance, spacing) = triangle_gadget(g, 1, false)?;
    Ok((instance, spacing))
}

/// Directed zero-delay triangle gadget: a source-target duration of 3 is
/// achievable exactly when the graph has a triangle. All underlying edges
/// point forward through the layers.
pub fn gen_triangle_directed_zero(g: &SimpleGraph) -> Result<TemporalInstance> {
    let (instance, _) = triangle_gadget(g, 0, true)?;
    Ok(instance)
}

fn triangle_gadget(g: &SimpleGraph, delay: Time, directed: bool) -> Result<(TemporalInstance, Time)> {
    const SPACING: i64 = 10;
    let n = g.n();
    let window_end = cap((n as i64).checked_mul(SPACING).and_then(|x| x.checked_add(3)))?;
    let mut h = TemporalGraph::new(2 + 3 * n, directed)?;
    let (s, t) = (1, 2);
    for &(u, v) in g.edges() {
        h.add_edge(layer_vertex(n, 1, u), layer_vertex(n, 2, v), 0, window_end, delay)?;
        h.add_edge(layer_vertex(n, 2, u), layer_vertex(n, 3, v), 0, window_end, delay)?;
    }
    let mut candidates = Vec::with_capacity(n as usize);
    for v in 1..=n {
        let at = v as i64 * SPACING;
        h.add_edge(s, layer_vertex(n, 1, v), at, at, delay)?;
        candidates.push(at);
    }
    let adj = g.neighbors();
    for v in 1..=n {
        for &u in &adj[v as usize] {
            let at = u as i64 * SPACING + 3;
            h.add_edge(layer_vertex(n, 3, v), t, at, at, delay)?;
        }
    }
    Ok((
        TemporalInstance {
            graph: h,
            source: s,
            target: t,
            candidates,
        },
        SPACING,
    ))
}

/// Shortest-path gadget: some temporal source-target path uses at most
/// `n + 4` edges exactly when the graph has a triangle. All delays are
/// zero; returns the instance and the threshold `n + 4`.
pub fn gen_shortest_instance(g: &SimpleGraph) -> Result<(TemporalInstance, u32)> {
    let n = g.n();
    let horizon = n as i64;
    let mut h = TemporalGraph::new(2 + 4 * n, false)?;
    let (s, t) = (1, 2);
    // chains through the first and fourth copies, in vertex order
    for layer in [1, 4] {
        for i in 1..n {
            h.add_edge(
                layer_vertex(n, layer, i),
                layer_vertex(n, layer, i + 1),
                1,
                horizon,
                0,
            )?;
        }
    }
    h.add_edge(s, layer_vertex(n, 1, n), 1, horizon, 0)?;
    h.add_edge(t, layer_vertex(n, 4, 1), 1, horizon, 0)?;
    for &(i, j) in g.edges() {
        h.add_edge(layer_vertex(n, 2, i), layer_vertex(n, 3, j), 1, horizon, 0)?;
        let at = i as i64;
        h.add_edge(layer_vertex(n, 1, i), layer_vertex(n, 2, j), at, at, 0)?;
        h.add_edge(layer_vertex(n, 3, j), layer_vertex(n, 4, i), at, at, 0)?;
    }
    Ok((
        TemporalInstance {
            graph: h,
            source: s,
            target: t,
            candidates: Vec::new(),
        },
        n + 4,
    ))
}

/// Brute force over all vertex triples.
pub fn detect_triangle(g: &SimpleGraph) -> bool {
    let n = g.n() as usize;
    let mut adj = vec![false; (n + 1) * (n + 1)];
    for &(u, v) in g.edges() {
        adj[u as usize * (n + 1) + v as usize] = true;
        adj[v as usize * (n + 1) + u as usize] = true;
    }
    for u in 1..=n {
        for v in u + 1..=n {
            if !adj[u * (n + 1) + v] {
                continue;
            }
            for w in v + 1..=n {
                if adj[v * (n + 1) + w] && adj[u * (n + 1) + w] {
                    return true;
                }
            }
        }
    }
    false
}

/// Brute force over all vertex triples, summing edge weights.
pub fn detect_negative_triangle(g: &WeightedGraph) -> bool {
    let n = g.n() as usize;
    let mut weight = vec![None; (n + 1) * (n + 1)];
    for &(u, v, w) in g.edges() {
        weight[u as usize * (n + 1) + v as usize] = Some(w);
        weight[v as usize * (n + 1) + u as usize] = Some(w);
    }
    for u in 1..=n {
        for v in u + 1..=n {
            let Some(wuv) = weight[u * (n + 1) + v] else {
                continue;
            };
            for w in v + 1..=n {
                if let (Some(wvw), Some(wuw)) =
                    (weight[v * (n + 1) + w], weight[u * (n + 1) + w])
                {
                    if wuv + wvw + wuw < 0 {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Seeded random undirected temporal graph: uniform endpoints, uniform
/// presence intervals inside `[0, time_max]`, delays zero or small.
pub fn gen_random_temporal(
    n: u32,
    records: usize,
    time_max: Time,
    zero_delay: bool,
    seed: u64,
) -> Result<TemporalGraph> {
    if n < 2 {
        return Err(Error::InvalidInput(
            "random temporal graphs need at least 2 vertices".into(),
        ));
    }
    if time_max < 0 {
        return Err(Error::InvalidInput("time_max must be non-negative".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = TemporalGraph::new(n, false)?;
    for _ in 0..records {
        let u = rng.random_range(1..=n);
        let v = loop {
            let v = rng.random_range(1..=n);
            if v != u {
                break v;
            }
        };
        let a = rng.random_range(0..=time_max);
        let b = rng.random_range(0..=time_max);
        let delay = if zero_delay { 0 } else { rng.random_range(0..=3) };
        g.add_edge(u, v, a.min(b), a.max(b), delay)?;
    }
    Ok(g)
}

/// Seeded Erdos-Renyi simple graph, for round-trip test corpora.
pub fn random_simple_graph(n: u32, edge_prob: f64, seed: u64) -> SimpleGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.random_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph { n, edges }
}

/// Seeded random weighted graph with weights uniform in `[-wmax, wmax]`.
pub fn random_weighted_graph(n: u32, edge_prob: f64, wmax: i64, seed: u64) -> WeightedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.random_bool(edge_prob) {
                edges.push((u, v, rng.random_range(-wmax..=wmax)));
            }
        }
    }
    WeightedGraph { n, edges }
}
