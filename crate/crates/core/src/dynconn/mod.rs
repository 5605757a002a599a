//! Fully-dynamic connectivity over a multigraph on a fixed vertex set.
//!
//! Holm–de Lichtenberg–Thorup edge levels over Euler tour forests: every
//! edge carries a level, forest `i` spans the graph restricted to edges of
//! level at least `i`, and deletions search for replacements level by
//! level, pushing edges upward to pay for future searches. Updates run in
//! amortized polylogarithmic time, component queries in logarithmic time.
//!
//! Before a deletion pays for the full level-raising search it probes a
//! handful of incident non-tree edges; on non-adversarial inputs a
//! replacement is usually among them, which keeps edges at low levels and
//! the forest hierarchy shallow.
//!
//! Edges are identified by caller-chosen handles, so parallel edges are
//! first-class: deleting one handle of a parallel pair leaves its twin in
//! place.

mod ett;

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Vertex;
use ett::Forest;

/// Non-tree candidates probed before a full replacement search.
const SAMPLE_CAP: usize = 16;

struct EdgeSlot {
    u: Vertex,
    v: Vertex,
    level: u32,
    tree: bool,
}

pub struct DynConn {
    n: u32,
    forests: Vec<Forest>,
    slot_of: HashMap<u64, u32>,
    slots: Vec<EdgeSlot>,
    free_slots: Vec<u32>,
}

impl DynConn {
    /// A connectivity structure over `n` isolated vertices.
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("vertex count must be at least 1".into()));
        }
        Ok(DynConn {
            n,
            forests: vec![Forest::new(n)],
            slot_of: HashMap::new(),
            slots: Vec::new(),
            free_slots: Vec::new(),
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v == 0 || v > self.n {
            return Err(Error::InvalidInput(format!(
                "vertex {v} out of range [1, {}]",
                self.n
            )));
        }
        Ok(())
    }

    /// Canonical id of `u`'s component: the smallest vertex id in it.
    /// Always in `[1, n]`, equal for two vertices iff they are connected,
    /// and constant between structural updates.
    pub fn rep(&mut self, u: Vertex) -> Result<Vertex> {
        self.check_vertex(u)?;
        Ok(self.forests[0].component_min(u))
    }

    pub fn connected(&mut self, u: Vertex, v: Vertex) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.forests[0].connected(u, v))
    }

    /// Inserts an edge under a fresh handle.
    pub fn insert(&mut self, u: Vertex, v: Vertex, handle: u64) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidInput(format!("loop at vertex {u}")));
        }
        if self.slot_of.contains_key(&handle) {
            return Err(Error::Usage(format!("edge handle {handle} already present")));
        }
        let slot = match self.free_slots.pop() {
            Some(s) => {
                self.slots[s as usize] = EdgeSlot { u, v, level: 0, tree: false };
                s
            }
            None => {
                self.slots.push(EdgeSlot { u, v, level: 0, tree: false });
                (self.slots.len() - 1) as u32
            }
        };
        self.slot_of.insert(handle, slot);
        if self.forests[0].connected(u, v) {
            self.forests[0].nontree_insert(u, slot);
            self.forests[0].nontree_insert(v, slot);
        } else {
            self.slots[slot as usize].tree = true;
            self.forests[0].link_tree(u, v, slot, true);
        }
        Ok(())
    }

    /// Deletes the edge behind `handle`. If it was a spanning-tree edge, a
    /// replacement is searched and installed when one exists.
    pub fn delete(&mut self, handle: u64) -> Result<()> {
        let slot = self
            .slot_of
            .remove(&handle)
            .ok_or_else(|| Error::Usage(format!("unknown edge handle {handle}")))?;
        let e = &self.slots[slot as usize];
        if e.tree {
            self.delete_tree_edge(slot);
        } else {
            let (u, v, level) = (e.u, e.v, e.level);
            let f = &mut self.forests[level as usize];
            f.nontree_remove(u, slot);
            f.nontree_remove(v, slot);
        }
        self.free_slots.push(slot);
        Ok(())
    }

    fn ensure_level(&mut self, level: usize) {
        while self.forests.len() <= level {
            self.forests.push(Forest::new(self.n));
        }
    }

    /// Installs `slot` as the tree edge reconnecting the two sides at
    /// level `i`: it leaves the non-tree registry and joins forests
    /// `0..=i`.
    fn promote(&mut self, slot: u32, i: usize) {
        let e = &self.slots[slot as usize];
        let (u, v) = (e.u, e.v);
        self.forests[i].nontree_remove(u, slot);
        self.forests[i].nontree_remove(v, slot);
        self.slots[slot as usize].tree = true;
        for j in 0..=i {
            self.forests[j].link_tree(u, v, slot, j == i);
        }
    }

    fn delete_tree_edge(&mut self, slot: u32) {
        let (u, v, top) = {
            let e = &self.slots[slot as usize];
            (e.u, e.v, e.level as usize)
        };
        for i in 0..=top {
            self.forests[i].cut_tree(slot);
        }
        for i in (0..=top).rev() {
            let su = self.forests[i].component_size(u);
            let sv = self.forests[i].component_size(v);
            let (x, y) = if su <= sv { (u, v) } else { (v, u) };

            // cheap probe first: a few non-tree edges off one flagged
            // vertex, tested without any level changes
            if let Some(a) = self.forests[i].find_nontree_vertex(x) {
                let mut sample = [0u32; SAMPLE_CAP];
                let list = self.forests[i].nontree_list(a);
                let k = list.len().min(SAMPLE_CAP);
                sample[..k].copy_from_slice(&list[..k]);
                for &cand in &sample[..k] {
                    let e = &self.slots[cand as usize];
                    let b = if e.u == a { e.v } else { e.u };
                    if self.forests[i].connected(b, y) {
                        self.promote(cand, i);
                        return;
                    }
                }
            }

            // Pay for the search: move the smaller side's level-i tree
            // edges one level up, where components are at most half the
            // size.
            while let Some(s) = self.forests[i].take_level_edge(x) {
                let e = &mut self.slots[s as usize];
                e.level = i as u32 + 1;
                let (eu, ev) = (e.u, e.v);
                self.ensure_level(i + 1);
                self.forests[i + 1].link_tree(eu, ev, s, true);
            }

            // Scan level-i non-tree edges incident to the smaller side. An
            // edge crossing to the other side is the replacement; edges
            // inside the side move up a level.
            while let Some(a) = self.forests[i].find_nontree_vertex(x) {
                while let Some(s) = self.forests[i].nontree_pop(a) {
                    let e = &self.slots[s as usize];
                    let (eu, ev) = (e.u, e.v);
                    let b = if eu == a { ev } else { eu };
                    self.forests[i].nontree_remove(b, s);
                    if self.forests[i].connected(b, y) {
                        self.slots[s as usize].tree = true;
                        for j in 0..=i {
                            self.forests[j].link_tree(eu, ev, s, j == i);
                        }
                        return;
                    }
                    self.slots[s as usize].level = i as u32 + 1;
                    self.ensure_level(i + 1);
                    self.forests[i + 1].nontree_insert(eu, s);
                    self.forests[i + 1].nontree_insert(ev, s);
                }
            }
        }
    }
}
