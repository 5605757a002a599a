//! Euler tour trees over an arena of splay nodes.
//!
//! Each forest stores one tour sequence per spanning tree: a self-loop node
//! per vertex and two arc nodes per tree edge. Splay trees keep the
//! sequences balanced in the amortized sense; subtree aggregates (loop
//! count, minimum vertex id, search flags) ride along with rotations.
//!
//! Edges are identified by dense slot indices assigned by the level
//! structure, so per-edge lookups are plain array indexing.

pub const NIL: u32 = u32::MAX;

/// Arc node carrying an edge whose level equals this forest's level.
pub const OWN_LEVEL: u32 = 1;
const SUB_LEVEL: u32 = 2;
/// Loop node whose vertex has non-tree edges registered at this level.
pub const OWN_NONTREE: u32 = 4;
const SUB_NONTREE: u32 = 8;
const OWN_MASK: u32 = OWN_LEVEL | OWN_NONTREE;
const SUB_MASK: u32 = SUB_LEVEL | SUB_NONTREE;

#[derive(Clone)]
struct Node {
    parent: u32,
    left: u32,
    right: u32,
    /// vertex id for self-loop nodes, 0 for arc nodes
    vertex: u32,
    /// edge slot for arc nodes
    slot: u32,
    /// self-loop nodes in this subtree
    loops: u32,
    /// minimum vertex id in this subtree, u32::MAX if none
    min_vertex: u32,
    flags: u32,
}

impl Node {
    fn new_loop(vertex: u32) -> Self {
        Node {
            parent: NIL,
            left: NIL,
            right: NIL,
            vertex,
            slot: NIL,
            loops: 1,
            min_vertex: vertex,
            flags: 0,
        }
    }
}

/// One level of the spanning-forest hierarchy: the Euler tours of its
/// trees plus the non-tree edge registry for the level.
pub struct Forest {
    nodes: Vec<Node>,
    free: Vec<u32>,
    /// vertex (1-based) -> its self-loop node
    loop_of: Vec<u32>,
    /// edge slot -> its two arc nodes, (NIL, NIL) when not a tree edge here
    arcs: Vec<(u32, u32)>,
    /// vertex -> non-tree edge slots registered here
    nontree: Vec<Vec<u32>>,
}

impl Forest {
    pub fn new(n: u32) -> Self {
        let mut nodes = Vec::with_capacity(n as usize + 1);
        let mut loop_of = Vec::with_capacity(n as usize + 1);
        loop_of.push(NIL); // vertex ids are 1-based
        for v in 1..=n {
            loop_of.push(nodes.len() as u32);
            nodes.push(Node::new_loop(v));
        }
        Forest {
            nodes,
            free: Vec::new(),
            loop_of,
            arcs: Vec::new(),
            nontree: vec![Vec::new(); n as usize + 1],
        }
    }

    fn alloc_arc(&mut self, slot: u32, own_level: bool) -> u32 {
        let flags = if own_level { OWN_LEVEL | SUB_LEVEL } else { 0 };
        let node = Node {
            parent: NIL,
            left: NIL,
            right: NIL,
            vertex: 0,
            slot,
            loops: 0,
            min_vertex: u32::MAX,
            flags,
        };
        if let Some(i) = self.free.pop() {
            self.nodes[i as usize] = node;
            i
        } else {
            self.nodes.push(node);
            (self.nodes.len() - 1) as u32
        }
    }

    fn pull_up(&mut self, x: u32) {
        let n = &self.nodes[x as usize];
        let (l, r) = (n.left, n.right);
        let is_loop = n.vertex != 0;
        let mut loops = is_loop as u32;
        let mut minv = if is_loop { n.vertex } else { u32::MAX };
        let own = n.flags & OWN_MASK;
        let mut sub = own << 1;
        for c in [l, r] {
            if c != NIL {
                let cn = &self.nodes[c as usize];
                loops += cn.loops;
                minv = minv.min(cn.min_vertex);
                sub |= cn.flags & SUB_MASK;
            }
        }
        let n = &mut self.nodes[x as usize];
        n.loops = loops;
        n.min_vertex = minv;
        n.flags = own | sub;
    }

    fn rotate(&mut self, x: u32) {
        let p = self.nodes[x as usize].parent;
        let g = self.nodes[p as usize].parent;
        // x takes over p's subtree, so it inherits p's aggregates wholesale
        let (p_loops, p_min, p_sub) = {
            let pn = &self.nodes[p as usize];
            (pn.loops, pn.min_vertex, pn.flags & SUB_MASK)
        };
        let x_is_left = self.nodes[p as usize].left == x;
        let inner = if x_is_left {
            let inner = self.nodes[x as usize].right;
            self.nodes[p as usize].left = inner;
            self.nodes[x as usize].right = p;
            inner
        } else {
            let inner = self.nodes[x as usize].left;
            self.nodes[p as usize].right = inner;
            self.nodes[x as usize].left = p;
            inner
        };
        if inner != NIL {
            self.nodes[inner as usize].parent = p;
        }
        self.nodes[p as usize].parent = x;
        self.nodes[x as usize].parent = g;
        if g != NIL {
            if self.nodes[g as usize].left == p {
                self.nodes[g as usize].left = x;
            } else {
                self.nodes[g as usize].right = x;
            }
        }
        self.pull_up(p);
        let xn = &mut self.nodes[x as usize];
        xn.loops = p_loops;
        xn.min_vertex = p_min;
        xn.flags = (xn.flags & OWN_MASK) | p_sub;
    }

    fn splay(&mut self, x: u32) {
        loop {
            let p = self.nodes[x as usize].parent;
            if p == NIL {
                return;
            }
            let g = self.nodes[p as usize].parent;
            if g == NIL {
                self.rotate(x);
                return;
            }
            if (self.nodes[g as usize].left == p) == (self.nodes[p as usize].left == x) {
                self.rotate(p);
                self.rotate(x);
            } else {
                self.rotate(x);
                self.rotate(x);
            }
        }
    }

    fn root_of(&self, mut x: u32) -> u32 {
        while self.nodes[x as usize].parent != NIL {
            x = self.nodes[x as usize].parent;
        }
        x
    }

    fn detach_left(&mut self, x: u32) -> u32 {
        let l = self.nodes[x as usize].left;
        if l != NIL {
            self.nodes[l as usize].parent = NIL;
            self.nodes[x as usize].left = NIL;
            self.pull_up(x);
        }
        l
    }

    fn detach_right(&mut self, x: u32) -> u32 {
        let r = self.nodes[x as usize].right;
        if r != NIL {
            self.nodes[r as usize].parent = NIL;
            self.nodes[x as usize].right = NIL;
            self.pull_up(x);
        }
        r
    }

    /// Concatenates the sequences rooted at `a` and `b`; either may be NIL.
    fn concat(&mut self, a: u32, b: u32) -> u32 {
        if a == NIL {
            return b;
        }
        if b == NIL {
            return a;
        }
        let mut r = a;
        while self.nodes[r as usize].right != NIL {
            r = self.nodes[r as usize].right;
        }
        self.splay(r);
        self.nodes[r as usize].right = b;
        self.nodes[b as usize].parent = r;
        self.pull_up(r);
        r
    }

    /// Rotates the tour so it starts at `x`.
    fn reroot_seq(&mut self, x: u32) -> u32 {
        self.splay(x);
        let l = self.detach_left(x);
        self.concat(x, l)
    }

    fn connected_nodes(&mut self, a: u32, b: u32) -> bool {
        if a == b {
            return true;
        }
        self.splay(a);
        self.splay(b);
        self.nodes[a as usize].parent != NIL
    }

    pub fn connected(&mut self, u: u32, v: u32) -> bool {
        let (a, b) = (self.loop_of[u as usize], self.loop_of[v as usize]);
        self.connected_nodes(a, b)
    }

    /// Number of vertices in `u`'s component.
    pub fn component_size(&mut self, u: u32) -> u32 {
        let x = self.loop_of[u as usize];
        self.splay(x);
        self.nodes[x as usize].loops
    }

    /// Minimum vertex id in `u`'s component. Stable between structural
    /// updates regardless of splay activity.
    pub fn component_min(&mut self, u: u32) -> u32 {
        let x = self.loop_of[u as usize];
        self.splay(x);
        self.nodes[x as usize].min_vertex
    }

    fn ensure_slot(&mut self, slot: u32) {
        if self.arcs.len() <= slot as usize {
            self.arcs.resize(slot as usize + 1, (NIL, NIL));
        }
    }

    /// Joins the trees of `u` and `v` with a tree edge. The endpoints must
    /// be in different trees.
    pub fn link_tree(&mut self, u: u32, v: u32, slot: u32, own_level: bool) {
        let lu = self.loop_of[u as usize];
        let lv = self.loop_of[v as usize];
        debug_assert!(!self.connected_nodes(lu, lv), "link would close a cycle");
        let auv = self.alloc_arc(slot, own_level);
        let avu = self.alloc_arc(slot, false);
        let tu = self.reroot_seq(lu);
        let tv = self.reroot_seq(lv);
        let t = self.concat(tu, auv);
        let t = self.concat(t, tv);
        self.concat(t, avu);
        self.ensure_slot(slot);
        self.arcs[slot as usize] = (auv, avu);
    }

    /// Removes a tree edge, splitting its tour into the two sides.
    pub fn cut_tree(&mut self, slot: u32) {
        let (a1, a2) = std::mem::replace(&mut self.arcs[slot as usize], (NIL, NIL));
        debug_assert!(a1 != NIL, "cut of unknown tree edge");
        self.splay(a1);
        let l = self.detach_left(a1);
        let r = self.detach_right(a1);
        let a2_in_l = l != NIL && self.root_of(a2) == l;
        self.splay(a2);
        let p = self.detach_left(a2);
        let q = self.detach_right(a2);
        if a2_in_l {
            // sequence was P [a2] Q [a1] R: outside P ++ R, inside Q
            self.concat(p, r);
        } else {
            // sequence was L [a1] P [a2] Q: outside L ++ Q, inside P
            self.concat(l, q);
        }
        self.free.push(a1);
        self.free.push(a2);
    }

    fn set_own_flag(&mut self, x: u32, bit: u32, on: bool) {
        self.splay(x);
        if on {
            self.nodes[x as usize].flags |= bit;
        } else {
            self.nodes[x as usize].flags &= !bit;
        }
        self.pull_up(x);
    }

    /// Finds a node carrying `own` somewhere in `u`'s component.
    fn find_flagged(&mut self, u: u32, own: u32) -> Option<u32> {
        let sub = own << 1;
        let mut x = self.loop_of[u as usize];
        self.splay(x);
        if self.nodes[x as usize].flags & sub == 0 {
            return None;
        }
        loop {
            let n = &self.nodes[x as usize];
            if n.flags & own != 0 {
                return Some(x);
            }
            let l = n.left;
            if l != NIL && self.nodes[l as usize].flags & sub != 0 {
                x = l;
            } else {
                x = n.right;
            }
        }
    }

    /// Pops one tree edge of this forest's own level out of `u`'s
    /// component: clears its marker and returns its slot.
    pub fn take_level_edge(&mut self, u: u32) -> Option<u32> {
        let x = self.find_flagged(u, OWN_LEVEL)?;
        self.set_own_flag(x, OWN_LEVEL, false);
        Some(self.nodes[x as usize].slot)
    }

    /// Some vertex in `u`'s component with non-tree edges at this level.
    pub fn find_nontree_vertex(&mut self, u: u32) -> Option<u32> {
        let x = self.find_flagged(u, OWN_NONTREE)?;
        Some(self.nodes[x as usize].vertex)
    }

    pub fn nontree_list(&self, v: u32) -> &[u32] {
        &self.nontree[v as usize]
    }

    pub fn nontree_insert(&mut self, v: u32, slot: u32) {
        let list = &mut self.nontree[v as usize];
        list.push(slot);
        if list.len() == 1 {
            let x = self.loop_of[v as usize];
            self.set_own_flag(x, OWN_NONTREE, true);
        }
    }

    pub fn nontree_remove(&mut self, v: u32, slot: u32) {
        let list = &mut self.nontree[v as usize];
        if let Some(i) = list.iter().position(|&s| s == slot) {
            list.swap_remove(i);
            if list.is_empty() {
                let x = self.loop_of[v as usize];
                self.set_own_flag(x, OWN_NONTREE, false);
            }
        }
    }

    pub fn nontree_pop(&mut self, v: u32) -> Option<u32> {
        let list = &mut self.nontree[v as usize];
        let slot = list.pop()?;
        if list.is_empty() {
            let x = self.loop_of[v as usize];
            self.set_own_flag(x, OWN_NONTREE, false);
        }
        Some(slot)
    }
}
