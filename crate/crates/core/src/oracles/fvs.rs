//! Exact minimum feedback vertex set.
//!
//! The solver kernelizes on a multigraph (self-loops force their vertex;
//! degree ≤ 1 vertices vanish; degree-2 vertices contract, with parallel
//! edges capped at multiplicity 2), splits what is left into connected
//! components, and runs iterative-deepening search per component, branching
//! over the vertices of a shortest cycle. Structured instances collapse
//! almost entirely in the kernel, so the search only ever sees small cores.

use super::Ticker;
use crate::graph::Graph;
use std::collections::{BTreeMap, BTreeSet, VecDeque};

#[derive(Clone)]
struct Multi {
    adj: Vec<BTreeMap<u32, u8>>,
    selfloop: Vec<bool>,
    alive: Vec<bool>,
}

impl Multi {
    fn from_graph(g: &Graph) -> Self {
        let n = g.n() as usize;
        let mut adj: Vec<BTreeMap<u32, u8>> = vec![BTreeMap::new(); n];
        for (u, v) in g.edges() {
            adj[u as usize].insert(v, 1);
            adj[v as usize].insert(u, 1);
        }
        Multi {
            adj,
            selfloop: vec![false; n],
            alive: vec![true; n],
        }
    }

    fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].values().map(|&m| m as usize).sum()
    }

    fn delete(&mut self, v: u32, touched: &mut VecDeque<u32>) {
        self.alive[v as usize] = false;
        self.selfloop[v as usize] = false;
        let nbs: Vec<u32> = self.adj[v as usize].keys().copied().collect();
        for w in nbs {
            self.adj[w as usize].remove(&v);
            touched.push_back(w);
        }
        self.adj[v as usize].clear();
    }

    fn add_edge_capped(&mut self, a: u32, b: u32) {
        if a == b {
            self.selfloop[a as usize] = true;
            return;
        }
        let m = self.adj[a as usize].entry(b).or_insert(0);
        *m = (*m + 1).min(2);
        let m = self.adj[b as usize].entry(a).or_insert(0);
        *m = (*m + 1).min(2);
    }

    /// Applies all safe rules to fixpoint; appends forced solution vertices.
    fn kernelize(&mut self, forced: &mut Vec<u32>) {
        let mut queue: VecDeque<u32> = (0..self.alive.len() as u32).collect();
        while let Some(v) = queue.pop_front() {
            if !self.alive[v as usize] {
                continue;
            }
            if self.selfloop[v as usize] {
                forced.push(v);
                self.delete(v, &mut queue);
                continue;
            }
            let d = self.degree(v);
            if d <= 1 {
                self.delete(v, &mut queue);
                continue;
            }
            // Doubled-edge domination: if v's three edge slots are a doubled
            // edge to y plus one single edge, every cycle through v enters or
            // leaves via y. Some optimum therefore avoids v, and the 2-cycle
            // {v,y} then pins y into the solution.
            if d == 3 {
                if let Some((&y, _)) = self.adj[v as usize].iter().find(|(_, &m)| m == 2) {
                    forced.push(y);
                    self.delete(y, &mut queue);
                    continue;
                }
            }
            if d == 2 {
                let nbs: Vec<(u32, u8)> = self.adj[v as usize]
                    .iter()
                    .map(|(&w, &m)| (w, m))
                    .collect();
                if nbs.len() == 1 {
                    // Two parallel edges to one neighbor: that 2-cycle is v's
                    // only cycle, and the neighbor covers at least as much.
                    let u = nbs[0].0;
                    forced.push(u);
                    self.delete(u, &mut queue);
                    queue.push_back(v);
                } else {
                    let (a, b) = (nbs[0].0, nbs[1].0);
                    self.delete(v, &mut queue);
                    self.add_edge_capped(a, b);
                    queue.push_back(a);
                    queue.push_back(b);
                }
            }
        }
    }

    fn alive_components(&self) -> Vec<Vec<u32>> {
        let n = self.alive.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if !self.alive[s] || seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut st = vec![s as u32];
            seen[s] = true;
            while let Some(u) = st.pop() {
                comp.push(u);
                for &w in self.adj[u as usize].keys() {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        st.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    fn restrict_to(&self, comp: &[u32]) -> Multi {
        let keep: BTreeSet<u32> = comp.iter().copied().collect();
        let mut m = self.clone();
        for v in 0..m.alive.len() as u32 {
            if m.alive[v as usize] && !keep.contains(&v) {
                m.alive[v as usize] = false;
                m.adj[v as usize].clear();
                m.selfloop[v as usize] = false;
            }
        }
        for v in comp {
            let others: Vec<u32> = m.adj[*v as usize]
                .keys()
                .copied()
                .filter(|w| !keep.contains(w))
                .collect();
            for w in others {
                m.adj[*v as usize].remove(&w);
            }
        }
        m
    }

    fn has_edges(&self) -> bool {
        self.alive
            .iter()
            .enumerate()
            .any(|(v, &a)| a && (!self.adj[v].is_empty() || self.selfloop[v]))
    }

    /// A shortest simple cycle: a parallel pair if one exists, else the best
    /// over per-edge BFS (remove the edge, find the shortest path back).
    fn shortest_cycle(&self) -> Option<Vec<u32>> {
        for v in 0..self.alive.len() as u32 {
            if !self.alive[v as usize] {
                continue;
            }
            if let Some((&w, _)) = self.adj[v as usize].iter().find(|(_, &m)| m >= 2) {
                return Some(vec![v.min(w), v.max(w)]);
            }
        }
        let mut best: Option<Vec<u32>> = None;
        let mut edges: Vec<(u32, u32)> = Vec::new();
        for v in 0..self.alive.len() as u32 {
            if self.alive[v as usize] {
                for &w in self.adj[v as usize].keys() {
                    if v < w {
                        edges.push((v, w));
                    }
                }
            }
        }
        for &(u, w) in &edges {
            // Shortest u→w path avoiding the edge u–w itself.
            let mut parent: BTreeMap<u32, u32> = BTreeMap::new();
            let mut q = VecDeque::from([u]);
            parent.insert(u, u);
            'bfs: while let Some(x) = q.pop_front() {
                for &y in self.adj[x as usize].keys() {
                    if x == u && y == w {
                        continue;
                    }
                    if !parent.contains_key(&y) {
                        parent.insert(y, x);
                        if y == w {
                            break 'bfs;
                        }
                        q.push_back(y);
                    }
                }
            }
            if let Some(_) = parent.get(&w) {
                let mut path = vec![w];
                let mut cur = w;
                while cur != u {
                    cur = parent[&cur];
                    path.push(cur);
                }
                if best.as_ref().map_or(true, |b| path.len() < b.len()) {
                    best = Some(path);
                }
            }
        }
        best
    }
}

pub(super) fn min_feedback_vertex_set(
    g: &Graph,
    t: &mut Ticker,
) -> Option<(usize, BTreeSet<u32>)> {
    let mut m = Multi::from_graph(g);
    let mut forced: Vec<u32> = Vec::new();
    m.kernelize(&mut forced);
    let mut solution: BTreeSet<u32> = forced.iter().copied().collect();
    for comp in m.alive_components() {
        let sub = m.restrict_to(&comp);
        if !sub.has_edges() {
            continue;
        }
        let take = solve_component(&sub, &comp, t)?;
        solution.extend(take);
    }
    if t.exceeded() {
        return None;
    }
    debug_assert!(g.is_forest_after_removal(&solution));
    Some((solution.len(), solution))
}

fn solve_component(sub: &Multi, comp: &[u32], t: &mut Ticker) -> Option<Vec<u32>> {
    for k in 1..=comp.len() {
        if let Some(sol) = bounded_search(sub.clone(), k, t) {
            return Some(sol);
        }
        if t.exceeded() {
            return None;
        }
    }
    unreachable!("taking every vertex of a component is always a feedback set")
}

fn bounded_search(mut m: Multi, k: usize, t: &mut Ticker) -> Option<Vec<u32>> {
    if !t.tick() {
        return None;
    }
    let mut forced: Vec<u32> = Vec::new();
    m.kernelize(&mut forced);
    if forced.len() > k {
        return None;
    }
    if !m.has_edges() {
        return Some(forced);
    }
    let budget = k - forced.len();
    if budget == 0 {
        return None;
    }
    let cycle = m.shortest_cycle().expect("edges remain after kernel");
    for x in cycle {
        let mut m2 = m.clone();
        let mut junk = VecDeque::new();
        m2.delete(x, &mut junk);
        if let Some(mut sol) = bounded_search(m2, budget - 1, t) {
            sol.push(x);
            sol.extend(forced);
            return Some(sol);
        }
        if t.exceeded() {
            return None;
        }
    }
    None
}
