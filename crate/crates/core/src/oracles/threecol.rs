//! Exact 3-colorability.
//!
//! Preprocessing shrinks the graph without changing the answer:
//! *peeling* removes any vertex with at most two remaining neighbors (it can
//! always be colored last), and *merging* identifies two non-adjacent
//! vertices that share an adjacent pair of common neighbors (the pair burns
//! the other two colors, so both must take the third in every proper
//! 3-coloring). The reduced core is solved by a propagating backtracker:
//! domains are 3-bit masks, forced singletons cascade through a queue,
//! branching picks a most-constrained vertex, and symmetry is broken by
//! pinning vertex 0 to color 1 and its smallest neighbor to color 2.

use super::Ticker;
use crate::graph::Graph;
use std::collections::{BTreeMap, BTreeSet, VecDeque};

const ALL: u8 = 0b111;

/// Answer-preserving reducer. Vertices leave the live graph in two ways:
/// peeled vertices are re-colored greedily in reverse order at the end, and
/// merged vertices inherit the color of their class representative.
struct Prep {
    adj: Vec<BTreeSet<u32>>,
    alive: Vec<bool>,
    parent: Vec<u32>,
    /// (vertex, its live neighbors at peel time), in peel order.
    peeled: Vec<(u32, Vec<u32>)>,
}

impl Prep {
    fn new(g: &Graph) -> Self {
        let n = g.n() as usize;
        let mut adj: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); n];
        for (u, v) in g.edges() {
            adj[u as usize].insert(v);
            adj[v as usize].insert(u);
        }
        Prep {
            adj,
            alive: vec![true; n],
            parent: (0..g.n()).collect(),
            peeled: Vec::new(),
        }
    }

    fn find(&mut self, v: u32) -> u32 {
        let mut v = v;
        while self.parent[v as usize] != v {
            let p = self.parent[v as usize];
            self.parent[v as usize] = self.parent[p as usize];
            v = p;
        }
        v
    }

    /// Removes every live vertex with at most two live neighbors, to fixpoint.
    fn peel(&mut self) {
        let mut queue: VecDeque<u32> = (0..self.alive.len() as u32).collect();
        while let Some(v) = queue.pop_front() {
            if !self.alive[v as usize] || self.adj[v as usize].len() > 2 {
                continue;
            }
            let nbs: Vec<u32> = self.adj[v as usize].iter().copied().collect();
            self.alive[v as usize] = false;
            self.adj[v as usize].clear();
            for &w in &nbs {
                self.adj[w as usize].remove(&v);
                queue.push_back(w);
            }
            self.peeled.push((v, nbs));
        }
    }

    /// Finds one mergeable pair: non-adjacent `u, v` with common neighbors
    /// `p ~ q`. Merges `v` into `u` and reports success.
    fn merge_once(&mut self) -> bool {
        for p in 0..self.alive.len() as u32 {
            if !self.alive[p as usize] {
                continue;
            }
            let p_nbs: Vec<u32> = self.adj[p as usize].iter().copied().collect();
            for &q in &p_nbs {
                if q <= p {
                    continue;
                }
                let common: Vec<u32> = self.adj[p as usize]
                    .intersection(&self.adj[q as usize])
                    .copied()
                    .collect();
                for (i, &u) in common.iter().enumerate() {
                    for &v in &common[i + 1..] {
                        if !self.adj[u as usize].contains(&v) {
                            self.contract(u, v);
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    /// Moves all of `v`'s edges onto `u` and retires `v`. Callers guarantee
    /// `u` and `v` are live and non-adjacent, so no self-loop can arise.
    fn contract(&mut self, u: u32, v: u32) {
        debug_assert!(self.alive[u as usize] && self.alive[v as usize]);
        debug_assert!(!self.adj[u as usize].contains(&v));
        let v_nbs: Vec<u32> = self.adj[v as usize].iter().copied().collect();
        for &w in &v_nbs {
            self.adj[w as usize].remove(&v);
            if w != u {
                self.adj[w as usize].insert(u);
                self.adj[u as usize].insert(w);
            }
        }
        self.adj[v as usize].clear();
        self.alive[v as usize] = false;
        self.parent[v as usize] = u;
    }

    fn run(&mut self) {
        loop {
            self.peel();
            if !self.merge_once() {
                break;
            }
        }
    }
}

struct Solver<'a> {
    adj: Vec<Vec<u32>>,
    dom: Vec<u8>,
    trail: Vec<(u32, u8)>,
    t: &'a mut Ticker,
}

impl<'a> Solver<'a> {
    fn set_domain(&mut self, v: u32, dom: u8) {
        self.trail.push((v, self.dom[v as usize]));
        self.dom[v as usize] = dom;
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (v, d) = self.trail.pop().unwrap();
            self.dom[v as usize] = d;
        }
    }

    /// Propagates singleton domains starting from `seed`; false on conflict.
    fn propagate(&mut self, seed: u32) -> bool {
        let mut queue = VecDeque::from([seed]);
        while let Some(v) = queue.pop_front() {
            let mask = self.dom[v as usize];
            debug_assert_eq!(mask.count_ones(), 1);
            for i in 0..self.adj[v as usize].len() {
                let w = self.adj[v as usize][i];
                let old = self.dom[w as usize];
                if old & mask == 0 {
                    continue;
                }
                let new = old & !mask;
                if new == 0 {
                    return false;
                }
                self.set_domain(w, new);
                if new.count_ones() == 1 {
                    queue.push_back(w);
                }
            }
        }
        true
    }

    /// Unassigned vertex with the smallest domain, ties to the smallest id.
    fn pick(&self) -> Option<u32> {
        let mut best: Option<(u32, u32)> = None;
        for v in 0..self.dom.len() as u32 {
            let k = self.dom[v as usize].count_ones();
            if k > 1 && best.map_or(true, |(bk, _)| k < bk) {
                best = Some((k, v));
                if k == 2 {
                    break;
                }
            }
        }
        best.map(|(_, v)| v)
    }

    fn solve(&mut self) -> Option<bool> {
        if !self.t.tick() {
            return None;
        }
        let v = match self.pick() {
            None => return Some(true),
            Some(v) => v,
        };
        let choices = self.dom[v as usize];
        for bit in 0..3 {
            let m = 1u8 << bit;
            if choices & m == 0 {
                continue;
            }
            let mark = self.trail.len();
            self.set_domain(v, m);
            if self.propagate(v) {
                match self.solve() {
                    Some(true) => return Some(true),
                    Some(false) => {}
                    None => return None,
                }
            }
            self.undo_to(mark);
        }
        Some(false)
    }
}

/// Solves the irreducible core (compactly relabeled); `None` = budget
/// exhausted; `Some(None)` = not 3-colorable; otherwise colors with 1..=3.
fn solve_core(adj: Vec<Vec<u32>>, t: &mut Ticker) -> Option<Option<Vec<u8>>> {
    let n = adj.len();
    if n == 0 {
        return Some(Some(Vec::new()));
    }
    let mut s = Solver {
        adj,
        dom: vec![ALL; n],
        trail: Vec::new(),
        t,
    };
    s.set_domain(0, 0b001);
    if !s.propagate(0) {
        return Some(None);
    }
    if let Some(&w) = s.adj[0].first() {
        if s.dom[w as usize] & 0b010 == 0 {
            return Some(None);
        }
        if s.dom[w as usize] != 0b010 {
            s.set_domain(w, 0b010);
            if !s.propagate(w) {
                return Some(None);
            }
        }
    }
    match s.solve() {
        None => None,
        Some(false) => Some(None),
        Some(true) => {
            let colors: Vec<u8> = s
                .dom
                .iter()
                .map(|&d| {
                    debug_assert_eq!(d.count_ones(), 1);
                    d.trailing_zeros() as u8 + 1
                })
                .collect();
            Some(Some(colors))
        }
    }
}

/// `None` = budget exhausted; `Some(None)` = not 3-colorable; otherwise one
/// proper coloring with colors 1..=3.
pub(super) fn three_coloring(g: &Graph, t: &mut Ticker) -> Option<Option<Vec<u8>>> {
    let n = g.n() as usize;
    if n == 0 {
        return Some(Some(Vec::new()));
    }
    let mut prep = Prep::new(g);
    prep.run();

    // Compact the live core and solve it.
    let live: Vec<u32> = (0..g.n()).filter(|&v| prep.alive[v as usize]).collect();
    let index: BTreeMap<u32, u32> = live
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i as u32))
        .collect();
    let core_adj: Vec<Vec<u32>> = live
        .iter()
        .map(|&v| prep.adj[v as usize].iter().map(|w| index[w]).collect())
        .collect();
    let core_colors = match solve_core(core_adj, t)? {
        None => return Some(None),
        Some(c) => c,
    };

    // Expand: core colors first, then peeled vertices in reverse order, each
    // taking the smallest color unused by its recorded neighbors; merged
    // vertices read their representative's color. At most two distinct
    // neighbor colors exist at each pop, so a third color is always free.
    let mut color_of: BTreeMap<u32, u8> = live
        .iter()
        .map(|&v| (v, core_colors[index[&v] as usize]))
        .collect();
    let peeled = std::mem::take(&mut prep.peeled);
    for (v, nbs) in peeled.into_iter().rev() {
        let mut used = [false; 4];
        for w in nbs {
            let rep = prep.find(w);
            let c = color_of[&rep];
            used[c as usize] = true;
        }
        let c = (1..=3).find(|&c| !used[c as usize]).expect("a color is free");
        color_of.insert(v, c);
    }
    let colors: Vec<u8> = (0..g.n())
        .map(|v| {
            let rep = prep.find(v);
            color_of[&rep]
        })
        .collect();
    debug_assert!(g.edges().all(|(u, v)| colors[u as usize] != colors[v as usize]));
    Some(Some(colors))
}
