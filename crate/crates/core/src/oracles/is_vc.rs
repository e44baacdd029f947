//! Exact maximum independent set and minimum vertex cover.
//!
//! The solver first applies exact reductions to a fixpoint, all journaled so
//! the witness can be replayed afterwards:
//!
//! * degree 0/1 vertices are taken outright;
//! * a degree-2 vertex with adjacent neighbors is taken (its neighborhood is
//!   a clique, so nothing better exists);
//! * a degree-2 vertex with non-adjacent neighbors is *folded*: the optimum
//!   either takes the middle or both ends, so the trio merges into one
//!   vertex and banks +1 either way;
//! * a vertex whose closed neighborhood contains a neighbor's closed
//!   neighborhood is dropped (the neighbor is never the worse pick).
//!
//! What survives splits into connected components; bipartite components go
//! through maximum matching and the alternating-reachability cover
//! construction, the rest through branch-and-bound on a maximum-degree
//! vertex, bounded by a greedy clique cover (every clique contributes at
//! most one vertex to an independent set).
//!
//! Minimum vertex cover is the exact complement: τ = n − α with cover
//! V ∖ S, so both problems share one engine.

use super::Ticker;
use crate::graph::Graph;
use std::collections::{BTreeMap, BTreeSet, VecDeque};

pub(super) fn max_independent_set(
    g: &Graph,
    t: &mut Ticker,
) -> Option<(usize, BTreeSet<u32>)> {
    let mut engine = Engine::new(g);
    engine.reduce();
    let mut total = engine.gain;
    let mut set: BTreeSet<u32> = BTreeSet::new();
    for comp in engine.components() {
        let (a, s) = engine.solve_component(&comp, t)?;
        total += a;
        set.extend(s);
    }
    // Replay the root reductions around the assembled component solutions.
    engine.replay_into(&mut set);
    debug_assert_eq!(set.len(), total);
    debug_assert!(g
        .edges()
        .all(|(u, v)| !(set.contains(&u) && set.contains(&v))));
    Some((total, set))
}

pub(super) fn min_vertex_cover(g: &Graph, t: &mut Ticker) -> Option<(usize, BTreeSet<u32>)> {
    let (alpha, is) = max_independent_set(g, t)?;
    let cover: BTreeSet<u32> = (0..g.n()).filter(|v| !is.contains(v)).collect();
    Some((g.n() as usize - alpha, cover))
}

/// One journaled step. `Take` marks a vertex for the final set; `Delete`
/// and `Fold` edit the live graph and know how to undo themselves.
enum Op {
    Take(u32),
    Delete { v: u32, nbs: Vec<u32> },
    Fold { v: u32, a: u32, b: u32, added_to_a: Vec<u32>, b_nbs: Vec<u32> },
}

struct Engine {
    adj: Vec<BTreeSet<u32>>,
    alive: Vec<bool>,
    n_alive: usize,
    ops: Vec<Op>,
    /// Banked set size along the current journal: one per `Take`, one per
    /// `Fold` (which yields the middle or the extra end when replayed).
    gain: usize,
}

impl Engine {
    fn new(g: &Graph) -> Self {
        let n = g.n() as usize;
        let mut adj: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); n];
        for (u, v) in g.edges() {
            adj[u as usize].insert(v);
            adj[v as usize].insert(u);
        }
        Engine {
            adj,
            alive: vec![true; n],
            n_alive: n,
            ops: Vec::new(),
            gain: 0,
        }
    }

    fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    fn delete(&mut self, v: u32) {
        debug_assert!(self.alive[v as usize]);
        let nbs: Vec<u32> = self.adj[v as usize].iter().copied().collect();
        for &w in &nbs {
            self.adj[w as usize].remove(&v);
        }
        self.adj[v as usize].clear();
        self.alive[v as usize] = false;
        self.n_alive -= 1;
        self.ops.push(Op::Delete { v, nbs });
    }

    fn take(&mut self, v: u32) {
        self.ops.push(Op::Take(v));
        self.gain += 1;
        let nbs: Vec<u32> = self.adj[v as usize].iter().copied().collect();
        self.delete(v);
        for w in nbs {
            if self.alive[w as usize] {
                self.delete(w);
            }
        }
    }

    /// Folds degree-2 vertex `v` with non-adjacent neighbors `a < b`: `b`'s
    /// edges move onto `a`, `v` and `b` disappear, and +1 is banked. At
    /// replay, `a` chosen means "take both ends"; `a` not chosen means the
    /// middle was free.
    fn fold(&mut self, v: u32, a: u32, b: u32) {
        debug_assert!(!self.adj[a as usize].contains(&b));
        // Remove v first so its stub edges don't travel.
        let nbs: Vec<u32> = self.adj[v as usize].iter().copied().collect();
        debug_assert_eq!(nbs, vec![a.min(b), a.max(b)]);
        for &w in &nbs {
            self.adj[w as usize].remove(&v);
        }
        self.adj[v as usize].clear();
        self.alive[v as usize] = false;

        let b_nbs: Vec<u32> = self.adj[b as usize].iter().copied().collect();
        let mut added_to_a: Vec<u32> = Vec::new();
        for &w in &b_nbs {
            self.adj[w as usize].remove(&b);
            if w != a && self.adj[a as usize].insert(w) {
                self.adj[w as usize].insert(a);
                added_to_a.push(w);
            }
        }
        self.adj[b as usize].clear();
        self.alive[b as usize] = false;
        self.n_alive -= 2;
        self.gain += 1;
        self.ops.push(Op::Fold { v, a, b, added_to_a, b_nbs });
    }

    fn undo_to(&mut self, mark: usize) {
        while self.ops.len() > mark {
            match self.ops.pop().unwrap() {
                Op::Take(_) => {
                    self.gain -= 1;
                }
                Op::Delete { v, nbs } => {
                    self.alive[v as usize] = true;
                    self.n_alive += 1;
                    for w in nbs {
                        self.adj[w as usize].insert(v);
                        self.adj[v as usize].insert(w);
                    }
                }
                Op::Fold { v, a, b, added_to_a, b_nbs } => {
                    for &w in &added_to_a {
                        self.adj[w as usize].remove(&a);
                        self.adj[a as usize].remove(&w);
                    }
                    self.alive[b as usize] = true;
                    for &w in &b_nbs {
                        self.adj[w as usize].insert(b);
                        self.adj[b as usize].insert(w);
                    }
                    self.alive[v as usize] = true;
                    self.adj[v as usize].insert(a);
                    self.adj[v as usize].insert(b);
                    self.adj[a as usize].insert(v);
                    self.adj[b as usize].insert(v);
                    self.n_alive += 2;
                    self.gain -= 1;
                }
            }
        }
    }

    /// Walks the journal backwards, growing `set` into a valid independent
    /// set of the pre-journal graph.
    fn replay_into(&self, set: &mut BTreeSet<u32>) {
        for op in self.ops.iter().rev() {
            match op {
                Op::Take(v) => {
                    set.insert(*v);
                }
                Op::Delete { .. } => {}
                Op::Fold { v, a, b, .. } => {
                    if set.contains(a) {
                        set.insert(*b);
                    } else {
                        set.insert(*v);
                    }
                }
            }
        }
    }

    /// Applies all reductions to a fixpoint.
    fn reduce(&mut self) {
        let mut queue: VecDeque<u32> = (0..self.alive.len() as u32).collect();
        loop {
            while let Some(v) = queue.pop_front() {
                if !self.alive[v as usize] {
                    continue;
                }
                match self.degree(v) {
                    0 => self.take(v),
                    1 => {
                        let touched = self.neighborhood_frontier(v);
                        self.take(v);
                        queue.extend(touched);
                    }
                    2 => {
                        let mut it = self.adj[v as usize].iter();
                        let (a, b) = (*it.next().unwrap(), *it.next().unwrap());
                        if self.adj[a as usize].contains(&b) {
                            let touched = self.neighborhood_frontier(v);
                            self.take(v);
                            queue.extend(touched);
                        } else {
                            self.fold(v, a, b);
                            queue.push_back(a);
                            queue.extend(self.adj[a as usize].iter().copied());
                        }
                    }
                    _ => {}
                }
            }
            if !self.dominate_once(&mut queue) {
                return;
            }
        }
    }

    /// Vertices two steps out from `v`: their degrees change when `N[v]`
    /// goes away, so they must be revisited.
    fn neighborhood_frontier(&self, v: u32) -> Vec<u32> {
        let mut out = Vec::new();
        for &w in &self.adj[v as usize] {
            out.extend(self.adj[w as usize].iter().copied());
        }
        out
    }

    /// Finds one dominated vertex (a neighbor's closed neighborhood inside
    /// its own) and deletes it. Returns whether anything fired.
    fn dominate_once(&mut self, queue: &mut VecDeque<u32>) -> bool {
        for u in 0..self.alive.len() as u32 {
            if !self.alive[u as usize] {
                continue;
            }
            for &v in &self.adj[u as usize] {
                if self.degree(u) > self.degree(v) {
                    continue;
                }
                // N[u] ⊆ N[v] ⟺ every neighbor of u besides v neighbors v.
                if self.adj[u as usize]
                    .iter()
                    .all(|&w| w == v || self.adj[v as usize].contains(&w))
                {
                    let nbs: Vec<u32> = self.adj[v as usize].iter().copied().collect();
                    self.delete(v);
                    queue.extend(nbs);
                    return true;
                }
            }
        }
        false
    }

    /// Connected components of the live graph, each sorted ascending.
    fn components(&self) -> Vec<Vec<u32>> {
        let n = self.alive.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if !self.alive[s] || seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s as u32];
            let mut stack = vec![s as u32];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u as usize] {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Two-colors one component; `None` when an odd cycle exists.
    fn bipartition_of(&self, comp: &[u32]) -> Option<BTreeMap<u32, u8>> {
        let mut side: BTreeMap<u32, u8> = BTreeMap::new();
        let mut queue = VecDeque::from([comp[0]]);
        side.insert(comp[0], 0);
        while let Some(u) = queue.pop_front() {
            let s = side[&u];
            for &w in &self.adj[u as usize] {
                match side.get(&w) {
                    None => {
                        side.insert(w, 1 - s);
                        queue.push_back(w);
                    }
                    Some(&t) if t == s => return None,
                    _ => {}
                }
            }
        }
        Some(side)
    }

    fn solve_component(
        &mut self,
        comp: &[u32],
        t: &mut Ticker,
    ) -> Option<(usize, BTreeSet<u32>)> {
        if let Some(side) = self.bipartition_of(comp) {
            return Some(self.bipartite_max_is(comp, &side));
        }
        let mark = self.ops.len();
        let base_gain = self.gain;
        let mut bb = Branch {
            engine: self,
            best: 0,
            best_set: BTreeSet::new(),
            comp: comp.to_vec(),
            mark0: mark,
        };
        bb.dfs(base_gain, t);
        bb.engine.undo_to(mark);
        if t.exceeded() {
            return None;
        }
        let (best, best_set) = (bb.best, bb.best_set);
        Some((best, best_set))
    }

    /// Kőnig route: maximum matching by augmenting paths, minimum cover from
    /// final alternating reachability, independent set as its complement.
    fn bipartite_max_is(
        &self,
        comp: &[u32],
        side: &BTreeMap<u32, u8>,
    ) -> (usize, BTreeSet<u32>) {
        let index: BTreeMap<u32, usize> =
            comp.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let n = comp.len();
        let adj: Vec<Vec<usize>> = comp
            .iter()
            .map(|&v| self.adj[v as usize].iter().map(|w| index[w]).collect())
            .collect();
        let left: Vec<usize> = (0..n).filter(|&i| side[&comp[i]] == 0).collect();
        let mut matched: Vec<Option<usize>> = vec![None; n];

        fn try_augment(
            u: usize,
            adj: &[Vec<usize>],
            matched: &mut Vec<Option<usize>>,
            visited: &mut Vec<bool>,
        ) -> bool {
            for &w in &adj[u] {
                if visited[w] {
                    continue;
                }
                visited[w] = true;
                if matched[w].is_none() || try_augment(matched[w].unwrap(), adj, matched, visited)
                {
                    matched[w] = Some(u);
                    matched[u] = Some(w);
                    return true;
                }
            }
            false
        }

        for &u in &left {
            if matched[u].is_none() {
                let mut visited = vec![false; n];
                try_augment(u, &adj, &mut matched, &mut visited);
            }
        }

        // Alternating reachability from unmatched left vertices: Z. The
        // minimum cover is (left ∖ Z) ∪ (right ∩ Z); the IS is the rest.
        let mut in_z = vec![false; n];
        let mut stack: Vec<usize> = left
            .iter()
            .copied()
            .filter(|&u| matched[u].is_none())
            .collect();
        for &u in &stack {
            in_z[u] = true;
        }
        while let Some(u) = stack.pop() {
            if side[&comp[u]] == 0 {
                for &w in &adj[u] {
                    if matched[u] != Some(w) && !in_z[w] {
                        in_z[w] = true;
                        stack.push(w);
                    }
                }
            } else if let Some(w) = matched[u] {
                if !in_z[w] {
                    in_z[w] = true;
                    stack.push(w);
                }
            }
        }
        let is: BTreeSet<u32> = (0..n)
            .filter(|&i| {
                if side[&comp[i]] == 0 {
                    in_z[i]
                } else {
                    !in_z[i]
                }
            })
            .map(|i| comp[i])
            .collect();
        (is.len(), is)
    }
}

/// Branch-and-bound over one non-bipartite component, reusing the engine's
/// journal for state and witnesses.
struct Branch<'a> {
    engine: &'a mut Engine,
    best: usize,
    best_set: BTreeSet<u32>,
    comp: Vec<u32>,
    /// Journal length when this component's search began; leaf witnesses
    /// replay exactly the suffix above this mark.
    mark0: usize,
}

impl<'a> Branch<'a> {
    /// Upper bound on what the live part of the component can still add:
    /// the smaller of a greedy clique cover and n − (greedy matching).
    fn upper_bound(&self) -> usize {
        let mut cliques: Vec<Vec<u32>> = Vec::new();
        let mut live = 0usize;
        let mut matched: BTreeSet<u32> = BTreeSet::new();
        let mut matching = 0usize;
        for &v in &self.comp {
            if !self.engine.alive[v as usize] {
                continue;
            }
            live += 1;
            match cliques
                .iter_mut()
                .find(|cl| cl.iter().all(|&u| self.engine.adj[v as usize].contains(&u)))
            {
                Some(cl) => cl.push(v),
                None => cliques.push(vec![v]),
            }
            if !matched.contains(&v) {
                if let Some(&w) = self.engine.adj[v as usize]
                    .iter()
                    .find(|w| !matched.contains(w))
                {
                    matched.insert(v);
                    matched.insert(w);
                    matching += 1;
                }
            }
        }
        cliques.len().min(live - matching)
    }

    fn live_max_degree_vertex(&self) -> Option<u32> {
        let mut best: Option<(usize, u32)> = None;
        for &v in &self.comp {
            if !self.engine.alive[v as usize] {
                continue;
            }
            let d = self.engine.degree(v);
            if best.map_or(true, |(bd, _)| d > bd) {
                best = Some((d, v));
            }
        }
        best.map(|(_, v)| v)
    }

    fn component_exhausted(&self) -> bool {
        self.comp.iter().all(|&v| !self.engine.alive[v as usize])
    }

    fn dfs(&mut self, base_gain: usize, t: &mut Ticker) {
        if !t.tick() {
            return;
        }
        let mark = self.engine.ops.len();
        // Local reductions: branching re-exposes low-degree structure.
        self.reduce_component();
        let here = self.engine.gain - base_gain;
        if self.component_exhausted() {
            if here > self.best {
                self.best = here;
                let mut set = BTreeSet::new();
                // Replay only this component's suffix of the journal; the
                // root portion is replayed once, after all components.
                for op in self.engine.ops[self.mark0..].iter().rev() {
                    match op {
                        Op::Take(v) => {
                            set.insert(*v);
                        }
                        Op::Delete { .. } => {}
                        Op::Fold { v, a, b, .. } => {
                            if set.contains(a) {
                                set.insert(*b);
                            } else {
                                set.insert(*v);
                            }
                        }
                    }
                }
                self.best_set = set;
            }
            self.engine.undo_to(mark);
            return;
        }
        if here + self.upper_bound() <= self.best {
            self.engine.undo_to(mark);
            return;
        }
        let v = self.live_max_degree_vertex().expect("live vertex exists");

        // Branch 1: v in the set.
        let m2 = self.engine.ops.len();
        self.engine.take(v);
        self.dfs(base_gain, t);
        self.engine.undo_to(m2);
        if t.exceeded() {
            self.engine.undo_to(mark);
            return;
        }
        // Branch 2: v out.
        let m3 = self.engine.ops.len();
        self.engine.delete(v);
        self.dfs(base_gain, t);
        self.engine.undo_to(m3);

        self.engine.undo_to(mark);
    }

    fn reduce_component(&mut self) {
        let mut queue: VecDeque<u32> = self
            .comp
            .iter()
            .copied()
            .filter(|&v| self.engine.alive[v as usize])
            .collect();
        while let Some(v) = queue.pop_front() {
            if !self.engine.alive[v as usize] {
                continue;
            }
            match self.engine.degree(v) {
                0 => self.engine.take(v),
                1 => {
                    let touched = self.engine.neighborhood_frontier(v);
                    self.engine.take(v);
                    queue.extend(touched);
                }
                2 => {
                    let mut it = self.engine.adj[v as usize].iter();
                    let (a, b) = (*it.next().unwrap(), *it.next().unwrap());
                    if self.engine.adj[a as usize].contains(&b) {
                        let touched = self.engine.neighborhood_frontier(v);
                        self.engine.take(v);
                        queue.extend(touched);
                    } else {
                        self.engine.fold(v, a, b);
                        queue.push_back(a);
                        queue.extend(self.engine.adj[a as usize].iter().copied());
                    }
                }
                _ => {}
            }
        }
    }
}
