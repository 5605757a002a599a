//! Text instance format.
//!
//! Header line `tg <n> <records> <directed|undirected>`, then one line per
//! presence: `u v t1 t2 d`, whitespace-separated decimal integers with
//! 1-based vertices. Lines starting with `#` and blank lines are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::TemporalGraph;

pub fn parse(text: &str) -> Result<TemporalGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line_no, header) = lines
        .next()
        .ok_or_else(|| Error::Parse { line: 1, msg: "missing header".into() })?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let bad_header = |msg: &str| Error::Parse { line: line_no, msg: msg.into() };
    if fields.len() != 4 || fields[0] != "tg" {
        return Err(bad_header("expected `tg <n> <records> <directed|undirected>`"));
    }
    let n: u32 = fields[1].parse().map_err(|_| bad_header("bad vertex count"))?;
    let records: usize = fields[2].parse().map_err(|_| bad_header("bad record count"))?;
    let directed = match fields[3] {
        "directed" => true,
        "undirected" => false,
        _ => return Err(bad_header("orientation must be `directed` or `undirected`")),
    };
    let mut g = TemporalGraph::new(n, directed).map_err(|e| Error::Parse {
        line: line_no,
        msg: e.to_string(),
    })?;

    let mut seen = 0usize;
    for (line_no, line) in lines {
        let nums: std::result::Result<Vec<i64>, _> =
            line.split_whitespace().map(str::parse::<i64>).collect();
        let bad = |msg: String| Error::Parse { line: line_no, msg };
        let nums = nums.map_err(|_| bad("expected `u v t1 t2 d`".into()))?;
        if nums.len() != 5 {
            return Err(bad(format!("expected 5 fields, found {}", nums.len())));
        }
        let (u, v) = (
            u32::try_from(nums[0]).map_err(|_| bad("bad tail vertex".into()))?,
            u32::try_from(nums[1]).map_err(|_| bad("bad head vertex".into()))?,
        );
        seen += 1;
        if seen > records {
            return Err(bad(format!("more than the declared {records} records")));
        }
        g.add_edge(u, v, nums[2], nums[3], nums[4])
            .map_err(|e| bad(e.to_string()))?;
    }
    if seen != records {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            msg: format!("header declares {records} records, found {seen}"),
        });
    }
    Ok(g)
}

pub fn serialize(g: &TemporalGraph) -> String {
    let mut out = String::new();
    let orientation = if g.directed() { "directed" } else { "undirected" };
    writeln!(out, "tg {} {} {}", g.n(), g.record_count(), orientation).unwrap();
    for e in g.edges() {
        writeln!(out, "{} {} {} {} {}", e.tail, e.head, e.start, e.end, e.delay).unwrap();
    }
    out
}
