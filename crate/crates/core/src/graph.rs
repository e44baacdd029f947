//! Simple undirected graphs with dense ids, edge surgery, small forbidden
//! pattern search, and solution checking for the six vertex problems.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge not found: ({0}, {1})")]
    EdgeNotFound(u32, u32),
    #[error("solution kind mismatch for {0:?}")]
    SolutionKind(Problem),
    #[error("vertex {0} out of range (n = {1})")]
    VertexRange(u32, u32),
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
}

/// An undirected simple graph on vertices `0..n`. Edges are stored once,
/// smaller endpoint first; that normalized order is also the canonical
/// iteration and serialization order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: u32,
    edges: BTreeSet<(u32, u32)>,
}

fn norm(u: u32, v: u32) -> (u32, u32) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    pub fn new(n: u32) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn from_edges(n: u32, edges: &[(u32, u32)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Appends an isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> u32 {
        self.n += 1;
        self.n - 1
    }

    /// Adds an edge; panics on self-loops or out-of-range ids (construction
    /// bugs). Adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: u32, v: u32) {
        self.try_add_edge(u, v).unwrap();
    }

    pub fn try_add_edge(&mut self, u: u32, v: u32) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if u >= self.n {
            return Err(GraphError::VertexRange(u, self.n));
        }
        if v >= self.n {
            return Err(GraphError::VertexRange(v, self.n));
        }
        self.edges.insert(norm(u, v));
        Ok(())
    }

    pub fn remove_edge(&mut self, u: u32, v: u32) -> Result<(), GraphError> {
        if self.edges.remove(&norm(u, v)) {
            Ok(())
        } else {
            Err(GraphError::EdgeNotFound(u, v))
        }
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        u != v && self.edges.contains(&norm(u, v))
    }

    /// Edges in normalized ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.edges.iter().copied()
    }

    /// Sorted adjacency lists, built fresh; callers in hot loops should call
    /// once and reuse.
    pub fn adj(&self) -> Vec<Vec<u32>> {
        let mut adj = vec![Vec::new(); self.n as usize];
        for &(u, v) in &self.edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    pub fn degree(&self, u: u32) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == u || b == u)
            .count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n as usize];
        for &(u, v) in &self.edges {
            d[u as usize] += 1;
            d[v as usize] += 1;
        }
        d
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let adj = self.adj();
        let mut seen = vec![false; self.n as usize];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s as usize] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([s]);
            seen[s as usize] = true;
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &adj[u as usize] {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Acyclicity via union-find over the edge list.
    pub fn is_forest(&self) -> bool {
        let mut parent: Vec<u32> = (0..self.n).collect();
        fn find(parent: &mut [u32], mut x: u32) -> u32 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        for &(u, v) in &self.edges {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                return false;
            }
            parent[ru as usize] = rv;
        }
        true
    }

    /// Is the graph minus `removed` a forest?
    pub fn is_forest_after_removal(&self, removed: &BTreeSet<u32>) -> bool {
        let mut parent: Vec<u32> = (0..self.n).collect();
        fn find(parent: &mut [u32], mut x: u32) -> u32 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        for &(u, v) in &self.edges {
            if removed.contains(&u) || removed.contains(&v) {
                continue;
            }
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                return false;
            }
            parent[ru as usize] = rv;
        }
        true
    }

    /// Two-coloring if the graph is bipartite: `sides[v] ∈ {0,1}`.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let adj = self.adj();
        let mut side = vec![u8::MAX; self.n as usize];
        for s in 0..self.n as usize {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    let w = w as usize;
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    /// Replaces edge `e` by a path through `t` fresh vertices. New ids are
    /// `n, n+1, …, n+t−1`, in path order starting from the smaller endpoint
    /// of `e`. Returns the new graph and the new ids.
    pub fn subdivide_edge(
        &self,
        e: (u32, u32),
        t: usize,
    ) -> Result<(Graph, Vec<u32>), GraphError> {
        let (u, v) = norm(e.0, e.1);
        if !self.edges.contains(&(u, v)) {
            return Err(GraphError::EdgeNotFound(e.0, e.1));
        }
        let mut g = self.clone();
        if t == 0 {
            return Ok((g, Vec::new()));
        }
        g.edges.remove(&(u, v));
        let new_ids: Vec<u32> = (self.n..self.n + t as u32).collect();
        g.n += t as u32;
        let mut prev = u;
        for &w in &new_ids {
            g.edges.insert(norm(prev, w));
            prev = w;
        }
        g.edges.insert(norm(prev, v));
        Ok((g, new_ids))
    }
}

/// Small fixed patterns whose absence characterizes the proximity classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Pattern {
    C3,
    K4,
    K23,
}

/// One subgraph occurrence, reported once up to pattern automorphism:
/// * `C3` / `K4`: sorted vertex triple / quadruple,
/// * `K23`: two-side sorted, then three-side sorted.
pub type Occurrence = (Pattern, Vec<u32>);

/// Exhaustive subgraph (not induced) search for the given patterns.
pub fn find_forbidden_subgraphs(g: &Graph, patterns: &BTreeSet<Pattern>) -> Vec<Occurrence> {
    let mut out: BTreeSet<Occurrence> = BTreeSet::new();
    let adj = g.adj();
    let want_c3 = patterns.contains(&Pattern::C3);
    let want_k4 = patterns.contains(&Pattern::K4);
    let want_k23 = patterns.contains(&Pattern::K23);

    if want_c3 || want_k4 {
        for (u, v) in g.edges() {
            // Common neighbors w > v give each triangle u < v < w exactly once.
            let common: Vec<u32> = intersect_sorted(&adj[u as usize], &adj[v as usize]);
            for &w in common.iter().filter(|&&w| w > v) {
                if want_c3 {
                    out.insert((Pattern::C3, vec![u, v, w]));
                }
                if want_k4 {
                    for &x in common.iter().filter(|&&x| x > w) {
                        if g.has_edge(w, x) {
                            out.insert((Pattern::K4, vec![u, v, w, x]));
                        }
                    }
                }
            }
        }
    }

    if want_k23 {
        // For each vertex w, register w under each pair of its neighbors; a
        // pair with ≥ 3 registered vertices spans K2,3s.
        let mut pair_hits: BTreeMap<(u32, u32), Vec<u32>> = BTreeMap::new();
        for w in 0..g.n() {
            let nb = &adj[w as usize];
            for i in 0..nb.len() {
                for j in i + 1..nb.len() {
                    pair_hits.entry((nb[i], nb[j])).or_default().push(w);
                }
            }
        }
        for ((a, b), hits) in pair_hits {
            if hits.len() < 3 {
                continue;
            }
            let mut hits = hits;
            hits.sort_unstable();
            for i in 0..hits.len() {
                for j in i + 1..hits.len() {
                    for k in j + 1..hits.len() {
                        out.insert((Pattern::K23, vec![a, b, hits[i], hits[j], hits[k]]));
                    }
                }
            }
        }
    }

    out.into_iter().collect()
}

fn intersect_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// The six vertex problems handled by solvers, reductions, and checking.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Problem {
    ThreeColoring,
    IndependentSet,
    DominatingSet,
    FeedbackVertexSet,
    HamiltonianCycle,
    VertexCover,
}

/// A candidate solution; which variant is legal depends on the problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    /// For IS / VC / DS / FVS.
    VertexSet(BTreeSet<u32>),
    /// Total map `vertex → {1,2,3}`, indexed by vertex id.
    Coloring(Vec<u8>),
    /// Visiting order of a Hamiltonian cycle: a permutation of `0..n`.
    CycleOrder(Vec<u32>),
}

/// Validates `s` against `problem` on `g`. With a budget `k`, additionally
/// requires `|X| ≤ k` for VC/DS/FVS and `|X| ≥ k` for IS; the budget is
/// ignored for the two unbudgeted problems.
pub fn check_solution(
    problem: Problem,
    g: &Graph,
    s: &Solution,
    budget: Option<usize>,
) -> Result<bool, GraphError> {
    match (problem, s) {
        (Problem::IndependentSet, Solution::VertexSet(x)) => {
            if !vertex_set_in_range(g, x) {
                return Ok(false);
            }
            let independent = g
                .edges()
                .all(|(u, v)| !(x.contains(&u) && x.contains(&v)));
            Ok(independent && budget.map_or(true, |k| x.len() >= k))
        }
        (Problem::VertexCover, Solution::VertexSet(x)) => {
            if !vertex_set_in_range(g, x) {
                return Ok(false);
            }
            let covers = g.edges().all(|(u, v)| x.contains(&u) || x.contains(&v));
            Ok(covers && budget.map_or(true, |k| x.len() <= k))
        }
        (Problem::DominatingSet, Solution::VertexSet(x)) => {
            if !vertex_set_in_range(g, x) {
                return Ok(false);
            }
            let mut dominated = vec![false; g.n() as usize];
            for &v in x {
                dominated[v as usize] = true;
            }
            for (u, v) in g.edges() {
                if x.contains(&u) {
                    dominated[v as usize] = true;
                }
                if x.contains(&v) {
                    dominated[u as usize] = true;
                }
            }
            Ok(dominated.iter().all(|&d| d) && budget.map_or(true, |k| x.len() <= k))
        }
        (Problem::FeedbackVertexSet, Solution::VertexSet(x)) => {
            if !vertex_set_in_range(g, x) {
                return Ok(false);
            }
            Ok(g.is_forest_after_removal(x) && budget.map_or(true, |k| x.len() <= k))
        }
        (Problem::ThreeColoring, Solution::Coloring(c)) => {
            if c.len() != g.n() as usize || c.iter().any(|&col| !(1..=3).contains(&col)) {
                return Ok(false);
            }
            Ok(g.edges().all(|(u, v)| c[u as usize] != c[v as usize]))
        }
        (Problem::HamiltonianCycle, Solution::CycleOrder(order)) => {
            let n = g.n() as usize;
            if order.len() != n || n < 3 {
                return Ok(false);
            }
            let mut seen = vec![false; n];
            for &v in order {
                if v >= g.n() || seen[v as usize] {
                    return Ok(false);
                }
                seen[v as usize] = true;
            }
            Ok((0..n).all(|i| g.has_edge(order[i], order[(i + 1) % n])))
        }
        (p, _) => Err(GraphError::SolutionKind(p)),
    }
}

fn vertex_set_in_range(g: &Graph, x: &BTreeSet<u32>) -> bool {
    x.iter().all(|&v| v < g.n())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: u32) -> Graph {
        let edges: Vec<(u32, u32)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn complete(n: u32) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    #[test]
    fn subdivision_basics() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let (h, ids) = g.subdivide_edge((0, 1), 1).unwrap();
        assert_eq!(ids, vec![2]);
        assert_eq!(h.n(), 3);
        assert!(h.has_edge(0, 2) && h.has_edge(2, 1) && !h.has_edge(0, 1));

        let tri = cycle(3);
        let (h, ids) = tri.subdivide_edge((2, 0), 2).unwrap();
        assert_eq!(ids, vec![3, 4]);
        assert_eq!(h.n(), 5);
        assert_eq!(h.m(), 5);
        // Path order from the smaller endpoint 0: 0–3–4–2.
        assert!(h.has_edge(0, 3) && h.has_edge(3, 4) && h.has_edge(4, 2));
        assert!(h.degrees().iter().all(|&d| d == 2)); // C5

        let (same, ids) = tri.subdivide_edge((0, 1), 0).unwrap();
        assert!(ids.is_empty());
        assert_eq!(same, tri);

        assert_eq!(
            tri.subdivide_edge((0, 4), 1).unwrap_err(),
            GraphError::EdgeNotFound(0, 4)
        );
    }

    #[test]
    fn subdivision_counts() {
        let g = complete(5);
        for t in 0..4 {
            let (h, ids) = g.subdivide_edge((1, 3), t).unwrap();
            assert_eq!(ids.len(), t);
            assert_eq!(h.n(), g.n() + t as u32);
            assert_eq!(h.m(), g.m() + t);
        }
    }

    #[test]
    fn pattern_search_small_cases() {
        let all: BTreeSet<Pattern> = [Pattern::C3, Pattern::K4, Pattern::K23].into();
        let k4 = complete(4);
        let occ = find_forbidden_subgraphs(&k4, &all);
        assert!(occ.contains(&(Pattern::K4, vec![0, 1, 2, 3])));
        assert_eq!(
            occ.iter().filter(|(p, _)| *p == Pattern::K4).count(),
            1
        );
        assert_eq!(occ.iter().filter(|(p, _)| *p == Pattern::C3).count(), 4);

        let c6 = cycle(6);
        assert!(find_forbidden_subgraphs(&c6, &all).is_empty());

        // K2,3 with 2-side {0,1}, 3-side {2,3,4}.
        let k23 = Graph::from_edges(
            5,
            &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
        )
        .unwrap();
        let occ = find_forbidden_subgraphs(&k23, &all);
        assert_eq!(occ, vec![(Pattern::K23, vec![0, 1, 2, 3, 4])]);
    }

    // Reference implementation: check all ordered tuples.
    fn naive_patterns(g: &Graph) -> BTreeSet<Occurrence> {
        let n = g.n();
        let mut out = BTreeSet::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                        out.insert((Pattern::C3, vec![a, b, c]));
                    }
                    for d in c + 1..n {
                        let quad = [a, b, c, d];
                        if quad
                            .iter()
                            .enumerate()
                            .all(|(i, &u)| quad[i + 1..].iter().all(|&v| g.has_edge(u, v)))
                        {
                            out.insert((Pattern::K4, vec![a, b, c, d]));
                        }
                    }
                }
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                for c in 0..n {
                    for d in c + 1..n {
                        for e in d + 1..n {
                            let three = [c, d, e];
                            if three.contains(&a) || three.contains(&b) {
                                continue;
                            }
                            if three
                                .iter()
                                .all(|&w| g.has_edge(a, w) && g.has_edge(b, w))
                            {
                                out.insert((Pattern::K23, vec![a, b, c, d, e]));
                            }
                        }
                    }
                }
            }
        }
        out
    }

    #[test]
    fn pattern_search_matches_naive_enumeration() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xf0bd);
        let all: BTreeSet<Pattern> = [Pattern::C3, Pattern::K4, Pattern::K23].into();
        for _ in 0..200 {
            let n = rng.gen_range(1..=8u32);
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.45) {
                        g.add_edge(u, v);
                    }
                }
            }
            let fast: BTreeSet<Occurrence> =
                find_forbidden_subgraphs(&g, &all).into_iter().collect();
            assert_eq!(fast, naive_patterns(&g));
        }
    }

    #[test]
    fn solution_checking() {
        let c5 = cycle(5);
        let is = Solution::VertexSet([0, 2].into());
        assert_eq!(
            check_solution(Problem::IndependentSet, &c5, &is, Some(2)),
            Ok(true)
        );
        assert_eq!(
            check_solution(Problem::IndependentSet, &c5, &is, Some(3)),
            Ok(false)
        );
        let not_is = Solution::VertexSet([0, 1].into());
        assert_eq!(
            check_solution(Problem::IndependentSet, &c5, &not_is, None),
            Ok(false)
        );

        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let order = Solution::CycleOrder(vec![0, 1, 2, 3]);
        assert_eq!(
            check_solution(Problem::HamiltonianCycle, &star, &order, None),
            Ok(false)
        );
        assert_eq!(
            check_solution(Problem::HamiltonianCycle, &cycle(4), &order, None),
            Ok(true)
        );

        // Removing v2 from {v1v2, v1v4, v2v3, v2v4} leaves one edge: a forest.
        let g = Graph::from_edges(4, &[(0, 1), (0, 3), (1, 2), (1, 3)]).unwrap();
        let fvs = Solution::VertexSet([1].into());
        assert_eq!(
            check_solution(Problem::FeedbackVertexSet, &g, &fvs, Some(1)),
            Ok(true)
        );
        assert_eq!(
            check_solution(Problem::FeedbackVertexSet, &g, &Solution::VertexSet([2].into()), Some(1)),
            Ok(false)
        );

        let col = Solution::Coloring(vec![1, 2, 1, 2, 3]);
        assert_eq!(
            check_solution(Problem::ThreeColoring, &c5, &col, None),
            Ok(true)
        );
        let bad = Solution::Coloring(vec![1, 2, 1, 2, 1]);
        assert_eq!(
            check_solution(Problem::ThreeColoring, &c5, &bad, None),
            Ok(false)
        );

        let ds = Solution::VertexSet([0, 2].into());
        assert_eq!(
            check_solution(Problem::DominatingSet, &c5, &ds, Some(2)),
            Ok(true)
        );
        let vc = Solution::VertexSet([0, 1, 3].into());
        assert_eq!(
            check_solution(Problem::VertexCover, &c5, &vc, Some(3)),
            Ok(true)
        );
        assert_eq!(
            check_solution(Problem::VertexCover, &c5, &Solution::VertexSet([0, 1].into()), None),
            Ok(false)
        );

        assert_eq!(
            check_solution(Problem::HamiltonianCycle, &c5, &is, None),
            Err(GraphError::SolutionKind(Problem::HamiltonianCycle))
        );
    }

    #[test]
    fn structure_helpers() {
        assert!(cycle(4).bipartition().is_some());
        assert!(cycle(5).bipartition().is_none());
        assert!(!cycle(5).is_forest());
        assert!(cycle(5).is_forest_after_removal(&[3].into()));
        let mut g = Graph::new(4);
        g.add_edge(0, 1);
        g.add_edge(2, 3);
        assert!(!g.is_connected());
        assert_eq!(g.components(), vec![vec![0, 1], vec![2, 3]]);
        assert!(g.is_forest());
    }
}
