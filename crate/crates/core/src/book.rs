//! 2-page book embeddings of planar graphs with maximum degree ≤ 4, plus the
//! length/height/order annotations the constructions consume.
//!
//! A book embedding places all vertices on a line (the spine) and assigns
//! every edge to one of two half-planes (pages) so that edges on the same
//! page do not interleave. Interleaving is a purely combinatorial condition
//! on spine positions: edges `{v_i,v_j}` and `{v_k,v_l}` clash iff
//! `i < k < j < l`.

use crate::graph::Graph;
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum BookError {
    #[error("degree bound: vertex {0} has degree {1} > 4")]
    DegreeBound(u32, usize),
    #[error("search exhausted: no 2-page embedding found")]
    SearchExhausted,
    #[error("coverage mismatch: {0}")]
    Coverage(String),
    #[error("invalid embedding: edges {0:?} and {1:?} interleave on page {2}")]
    Interleaving((u32, u32), (u32, u32), u8),
}

/// A 2-page book embedding: the spine order and a page (1 or 2) per edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BookEmbedding {
    /// `order[p]` is the vertex at spine position `p`.
    pub order: Vec<u32>,
    /// Page assignment, keyed by normalized edge.
    pub page: BTreeMap<(u32, u32), u8>,
}

impl BookEmbedding {
    /// Spine position of every vertex: `positions()[v as usize]`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![usize::MAX; self.order.len()];
        for (p, &v) in self.order.iter().enumerate() {
            pos[v as usize] = p;
        }
        pos
    }

    pub fn page_of(&self, u: u32, v: u32) -> Option<u8> {
        self.page
            .get(&(u.min(v), u.max(v)))
            .copied()
    }
}

fn interleave(a: (usize, usize), b: (usize, usize)) -> bool {
    let (i, j) = a;
    let (k, l) = b;
    (i < k && k < j && j < l) || (k < i && i < l && l < j)
}

/// Checks validity. `Ok(None)` means valid; `Ok(Some((e, f, page)))` reports
/// the first (smallest by edge order) same-page interleaving pair.
pub fn validate_book_embedding(
    g: &Graph,
    be: &BookEmbedding,
) -> Result<Option<((u32, u32), (u32, u32), u8)>, BookError> {
    if be.order.len() != g.n() as usize {
        return Err(BookError::Coverage(format!(
            "spine has {} entries for {} vertices",
            be.order.len(),
            g.n()
        )));
    }
    let mut seen = vec![false; g.n() as usize];
    for &v in &be.order {
        if v >= g.n() || seen[v as usize] {
            return Err(BookError::Coverage(format!(
                "spine is not a permutation (vertex {v})"
            )));
        }
        seen[v as usize] = true;
    }
    let edges: Vec<(u32, u32)> = g.edges().collect();
    if be.page.len() != edges.len() {
        return Err(BookError::Coverage(format!(
            "page map covers {} edges, graph has {}",
            be.page.len(),
            edges.len()
        )));
    }
    for e in &edges {
        match be.page.get(e) {
            Some(1) | Some(2) => {}
            Some(p) => {
                return Err(BookError::Coverage(format!(
                    "edge {e:?} assigned invalid page {p}"
                )))
            }
            None => {
                return Err(BookError::Coverage(format!("edge {e:?} has no page")))
            }
        }
    }
    let pos = be.positions();
    let span = |e: (u32, u32)| -> (usize, usize) {
        let (a, b) = (pos[e.0 as usize], pos[e.1 as usize]);
        (a.min(b), a.max(b))
    };
    for (x, &e) in edges.iter().enumerate() {
        for &f in &edges[x + 1..] {
            let (pe, pf) = (be.page[&e], be.page[&f]);
            if pe == pf && interleave(span(e), span(f)) {
                return Ok(Some((e, f, pe)));
            }
        }
    }
    Ok(None)
}

/// Union-find with parity for incremental two-colorability of the
/// edge-conflict graph.
struct ParityDsu {
    parent: Vec<usize>,
    parity: Vec<u8>,
}

impl ParityDsu {
    fn new(n: usize) -> Self {
        ParityDsu {
            parent: (0..n).collect(),
            parity: vec![0; n],
        }
    }

    /// Returns (root, parity of x relative to root).
    fn find(&mut self, x: usize) -> (usize, u8) {
        if self.parent[x] == x {
            return (x, 0);
        }
        let (root, par) = self.find(self.parent[x]);
        self.parent[x] = root;
        self.parity[x] ^= par;
        (root, self.parity[x])
    }

    /// Constrains x and y to differ; false if that contradicts prior merges.
    fn must_differ(&mut self, x: usize, y: usize) -> bool {
        let (rx, px) = self.find(x);
        let (ry, py) = self.find(y);
        if rx == ry {
            return px != py;
        }
        self.parent[rx] = ry;
        self.parity[rx] = px ^ py ^ 1;
        true
    }
}

/// Is the conflict graph over the currently closed chords two-colorable?
fn chords_two_colorable(chords: &[(usize, usize)]) -> bool {
    let mut dsu = ParityDsu::new(chords.len());
    for a in 0..chords.len() {
        for b in a + 1..chords.len() {
            if interleave(chords[a], chords[b]) && !dsu.must_differ(a, b) {
                return false;
            }
        }
    }
    true
}

const SEARCH_BUDGET: u64 = 20_000_000;

/// Computes a canonical 2-page book embedding.
///
/// Deterministic tie-breaking: connected components are laid consecutively on
/// the spine ordered by smallest member; within a component the spine is the
/// lexicographically smallest feasible order starting at the smallest member
/// (rotating a book embedding preserves validity, so anchoring the first
/// vertex loses nothing); the page vector is then the lexicographically
/// smallest feasible one (first edge of every conflict component on page 1).
pub fn compute_book_embedding(g: &Graph) -> Result<BookEmbedding, BookError> {
    if let Some((v, d)) = g
        .degrees()
        .iter()
        .enumerate()
        .find(|(_, &d)| d > 4)
        .map(|(v, &d)| (v as u32, d))
    {
        return Err(BookError::DegreeBound(v, d));
    }

    let pos_of = |order: &[u32]| {
        let mut pos = vec![usize::MAX; g.n() as usize];
        for (p, &v) in order.iter().enumerate() {
            pos[v as usize] = p;
        }
        pos
    };

    let mut order: Vec<u32> = Vec::with_capacity(g.n() as usize);
    let adj = g.adj();
    let mut budget = SEARCH_BUDGET;
    for comp in g.components() {
        // Lex-smallest feasible order for this component, anchored at its
        // smallest member. Chord positions are global spine positions, but
        // chords never span components, so feasibility checks stay local.
        let base = order.clone();
        let found = extend_component(&base, &comp, &adj, &mut budget);
        match found {
            Some(full) => order = full,
            None => {
                return Err(BookError::SearchExhausted);
            }
        }
    }

    // Lex-smallest page vector: scan edges ascending; an unassigned edge
    // roots its conflict component with page 1 and propagation fixes the rest.
    let pos = pos_of(&order);
    let edges: Vec<(u32, u32)> = g.edges().collect();
    let span: Vec<(usize, usize)> = edges
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (pos[u as usize], pos[v as usize]);
            (a.min(b), a.max(b))
        })
        .collect();
    let mut page = vec![0u8; edges.len()];
    for start in 0..edges.len() {
        if page[start] != 0 {
            continue;
        }
        page[start] = 1;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for y in 0..edges.len() {
                if interleave(span[x], span[y]) {
                    if page[y] == 0 {
                        page[y] = 3 - page[x];
                        stack.push(y);
                    } else if page[y] == page[x] {
                        return Err(BookError::SearchExhausted);
                    }
                }
            }
        }
    }
    let page_map: BTreeMap<(u32, u32), u8> =
        edges.into_iter().zip(page).collect();
    Ok(BookEmbedding {
        order,
        page: page_map,
    })
}

/// Depth-first lexicographic search appending `comp`'s vertices to `base`.
fn extend_component(
    base: &[u32],
    comp: &[u32],
    adj: &[Vec<u32>],
    budget: &mut u64,
) -> Option<Vec<u32>> {
    let mut order = base.to_vec();
    order.push(comp[0]); // anchor: smallest member first
    let rest: Vec<u32> = comp[1..].to_vec();
    let mut used: BTreeSet<u32> = BTreeSet::new();
    dfs(&mut order, &rest, &mut used, adj, budget)
}

fn dfs(
    order: &mut Vec<u32>,
    rest: &[u32],
    used: &mut BTreeSet<u32>,
    adj: &[Vec<u32>],
    budget: &mut u64,
) -> Option<Vec<u32>> {
    if used.len() == rest.len() {
        return Some(order.clone());
    }
    for &v in rest {
        if used.contains(&v) {
            continue;
        }
        if *budget == 0 {
            return None;
        }
        *budget -= 1;
        order.push(v);
        if closed_chords_feasible(order, adj) {
            used.insert(v);
            if let Some(full) = dfs(order, rest, used, adj, budget) {
                return Some(full);
            }
            used.remove(&v);
        }
        order.pop();
    }
    None
}

fn closed_chords_feasible(order: &[u32], adj: &[Vec<u32>]) -> bool {
    let mut pos: BTreeMap<u32, usize> = BTreeMap::new();
    for (p, &v) in order.iter().enumerate() {
        pos.insert(v, p);
    }
    let mut chords: Vec<(usize, usize)> = Vec::new();
    for (&v, &p) in &pos {
        for &w in &adj[v as usize] {
            if let Some(&q) = pos.get(&w) {
                if p < q {
                    chords.push((p, q));
                }
            }
        }
    }
    chords_two_colorable(&chords)
}

/// Length, height, per-vertex page heights, and per-vertex edge orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BookAnnotations {
    pub length: BTreeMap<(u32, u32), usize>,
    pub height: BTreeMap<(u32, u32), usize>,
    /// `(vertex, page) → max height of its edges on that page` (0 if none).
    pub vheight: BTreeMap<(u32, u8), usize>,
    /// `(vertex, page) → incident edges ordered nearest-left … farthest-left,
    /// then farthest-right … nearest-right` along the spine.
    pub edge_order: BTreeMap<(u32, u8), Vec<(u32, u32)>>,
}

impl BookAnnotations {
    pub fn length(&self, u: u32, v: u32) -> usize {
        self.length[&(u.min(v), u.max(v))]
    }
    pub fn height(&self, u: u32, v: u32) -> usize {
        self.height[&(u.min(v), u.max(v))]
    }
    pub fn vheight(&self, v: u32, page: u8) -> usize {
        self.vheight.get(&(v, page)).copied().unwrap_or(0)
    }
    pub fn edge_order(&self, v: u32, page: u8) -> &[(u32, u32)] {
        self.edge_order
            .get(&(v, page))
            .map(|v| v.as_slice())
            .unwrap_or(&[])
    }
}

/// Derives all annotations; rejects invalid embeddings.
pub fn annotate(g: &Graph, be: &BookEmbedding) -> Result<BookAnnotations, BookError> {
    if let Some((e, f, p)) = validate_book_embedding(g, be)? {
        return Err(BookError::Interleaving(e, f, p));
    }
    let pos = be.positions();
    let span = |e: (u32, u32)| -> (usize, usize) {
        let (a, b) = (pos[e.0 as usize], pos[e.1 as usize]);
        (a.min(b), a.max(b))
    };

    let mut length: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    for e in g.edges() {
        let (i, j) = span(e);
        length.insert(e, j - i);
    }

    // Height: an edge's interior is every same-page edge within its spine
    // interval; those are strictly shorter, so increasing-length order is a
    // valid evaluation order for the recurrence.
    let mut by_len: Vec<(u32, u32)> = g.edges().collect();
    by_len.sort_by_key(|&e| length[&e]);
    let mut height: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    for &e in &by_len {
        let (i, j) = span(e);
        let pe = be.page[&e];
        let mut best = 0usize;
        for (&f, &h) in &height {
            if be.page[&f] != pe || f == e {
                continue;
            }
            let (k, l) = span(f);
            if i <= k && l <= j {
                best = best.max(h);
            }
        }
        height.insert(e, 1 + best);
    }

    let mut vheight: BTreeMap<(u32, u8), usize> = BTreeMap::new();
    let mut edge_order: BTreeMap<(u32, u8), Vec<(u32, u32)>> = BTreeMap::new();
    for v in 0..g.n() {
        for r in [1u8, 2u8] {
            vheight.insert((v, r), 0);
            edge_order.insert((v, r), Vec::new());
        }
    }
    for (&e, &h) in &height {
        for v in [e.0, e.1] {
            let r = be.page[&e];
            let slot = vheight.get_mut(&(v, r)).unwrap();
            *slot = (*slot).max(h);
        }
    }
    for v in 0..g.n() {
        for r in [1u8, 2u8] {
            let mut left: Vec<(u32, u32)> = Vec::new();
            let mut right: Vec<(u32, u32)> = Vec::new();
            for e in g.edges().filter(|&(a, b)| a == v || b == v) {
                if be.page[&e] != r {
                    continue;
                }
                let other = if e.0 == v { e.1 } else { e.0 };
                if pos[other as usize] < pos[v as usize] {
                    left.push(e);
                } else {
                    right.push(e);
                }
            }
            // Nearest-left … farthest-left: descending other-position.
            left.sort_by_key(|&(a, b)| {
                std::cmp::Reverse(pos[if a == v { b } else { a } as usize])
            });
            // Farthest-right … nearest-right: descending other-position.
            right.sort_by_key(|&(a, b)| {
                std::cmp::Reverse(pos[if a == v { b } else { a } as usize])
            });
            left.extend(right);
            edge_order.insert((v, r), left);
        }
    }

    Ok(BookAnnotations {
        length,
        height,
        vheight,
        edge_order,
    })
}
