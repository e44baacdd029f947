//! Reusable building blocks for the graph constructions: small labeled graphs
//! ("blueprints") that carry their own local plane coordinates, named ports for
//! attachment, and metadata describing their shape.
//!
//! A blueprint is a device with a known contract: a coloring path propagates
//! color constraints end to end, a filler cycle occupies one lattice cell while
//! contributing a fixed amount to the relevant optimum, a buffer raises the
//! feedback vertex number by exactly four, and the larger vertex gadgets encode
//! degrees of an input vertex. The larger constructions splice these blueprints
//! into a shared plane drawing.

use std::collections::BTreeMap;

use crate::geom::{rat, ratq, Point, Rational};
use crate::graph::Graph;

pub mod fvs;
pub mod hc;

pub use fvs::fvs_vertex_gadget;
pub use hc::{
    attach_permissible_cycle, hc_vertex_gadget, ladder_edge_labels, ladder_path,
    permissible_ladder_edges,
};

/// Errors raised by blueprint constructors and the cycle-attachment operation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GadgetError {
    /// `coloring_path` needs at least one diamond.
    #[error("coloring path requires at least one diamond (got k = 0)")]
    EmptyColoringPath,
    /// `filler_cycle` supports exactly the pairs (8, IndependentSet) and
    /// (12, DominatingSet).
    #[error("unsupported filler cycle: length {len} for {problem}")]
    UnsupportedFiller { len: usize, problem: &'static str },
    /// `fvs_vertex_gadget` requires outlet counts summing to four.
    #[error("vertex gadget outlet counts must sum to 4 (got a = {a}, b = {b})")]
    OutletSum { a: usize, b: usize },
    /// `ladder_path` requires both arm lengths to be at least two.
    #[error("ladder arms must both have length >= 2 (got k1 = {k1}, k2 = {k2})")]
    LadderArms { k1: usize, k2: usize },
    /// `hc_vertex_gadget` supports exactly the splits (3,0), (2,1), (1,2), (0,3).
    #[error("cycle vertex gadget outlet split must be one of (3,0), (2,1), (1,2), (0,3) (got ({top}, {bottom}))")]
    OutletSplit { top: usize, bottom: usize },
    /// The edge named as attachment site is not present in the host graph.
    #[error("attachment edge ({0}, {1}) is not an edge of the host graph")]
    EdgeNotInHost(u32, u32),
    /// Attached cycles must have at least four vertices.
    #[error("attached cycle must have at least 4 vertices (got k = {0})")]
    CycleTooShort(usize),
    /// A planned extra attachment names a ring position outside `3..=k-2`.
    /// Positions 1 and k carry the two anchor edges and must keep degree
    /// exactly three, which also forces positions 2 and k-1 to stay at
    /// degree two.
    #[error("attachment position {pos} outside the allowed ring range 3..={max}")]
    AttachmentPosition { pos: usize, max: usize },
    /// A planned extra attachment names a vertex not in the host graph.
    #[error("attachment target {0} is not a vertex of the host graph")]
    AttachmentTarget(u32),
    /// The same (ring position, host vertex) attachment was requested twice.
    #[error("duplicate attachment of ring position {0} to host vertex {1}")]
    DuplicateAttachment(usize, u32),
    /// Violates the ring degree condition: a ring vertex of degree three or
    /// more would be adjacent on the ring to another such vertex.
    #[error("ring positions {0} and {1} would both have degree >= 3 but are ring-adjacent")]
    AdjacentBranchPositions(usize, usize),
}

/// A small labeled graph with local plane coordinates.
///
/// * `graph` — the combinatorial structure;
/// * `ports` — named attachment points (vertex ids), e.g. `"start"`,
///   `"outlet_top_2"`, `"outer_left"`, `"connector_top"`, `"end1a"`;
/// * `coords` — a position for every vertex, pairwise distinct;
/// * `meta` — shape descriptors such as the blueprint kind and its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetBlueprint {
    pub graph: Graph,
    pub ports: BTreeMap<String, u32>,
    pub coords: BTreeMap<u32, Point>,
    pub meta: BTreeMap<String, String>,
}

impl GadgetBlueprint {
    /// Looks up a port, panicking with the port name when absent. Ports are
    /// part of each constructor's contract, so a miss is a programming error.
    pub fn port(&self, name: &str) -> u32 {
        match self.ports.get(name) {
            Some(&v) => v,
            None => panic!("blueprint has no port named {name:?}"),
        }
    }

    /// Checks the structural invariants every blueprint promises: all port and
    /// coordinate ids are in range, every vertex has exactly one coordinate,
    /// and no two vertices share a position.
    pub fn validate(&self) -> Result<(), String> {
        let n = self.graph.n() as u32;
        for (name, &v) in &self.ports {
            if v >= n {
                return Err(format!("port {name:?} names vertex {v} out of range"));
            }
        }
        if self.coords.len() != n as usize {
            return Err(format!(
                "expected {n} coordinates, found {}",
                self.coords.len()
            ));
        }
        let mut seen: BTreeMap<(String, String), u32> = BTreeMap::new();
        for (&v, p) in &self.coords {
            if v >= n {
                return Err(format!("coordinate for vertex {v} out of range"));
            }
            let key = (p.x.to_string(), p.y.to_string());
            if let Some(&w) = seen.get(&key) {
                return Err(format!("vertices {w} and {v} share position {p:?}"));
            }
            seen.insert(key, v);
        }
        Ok(())
    }
}

/// Incremental builder shared by the blueprint constructors and the larger
/// constructions: tracks the graph and the coordinate of each vertex.
#[derive(Debug, Clone)]
pub(crate) struct BlueprintBuilder {
    pub graph: Graph,
    pub coords: BTreeMap<u32, Point>,
}

impl BlueprintBuilder {
    pub fn new() -> Self {
        Self {
            graph: Graph::new(0),
            coords: BTreeMap::new(),
        }
    }

    /// Adds a vertex at the given position.
    pub fn add(&mut self, p: Point) -> u32 {
        let v = self.graph.add_vertex();
        self.coords.insert(v, p);
        v
    }

    pub fn edge(&mut self, u: u32, v: u32) {
        self.graph.add_edge(u, v);
    }

    /// Connects `u` and `v` through one fresh vertex placed at `mid`,
    /// returning the fresh vertex.
    pub fn sub_edge(&mut self, u: u32, v: u32, mid: Point) -> u32 {
        let m = self.add(mid);
        self.graph.add_edge(u, m);
        self.graph.add_edge(m, v);
        m
    }

    /// Splices a whole blueprint into this builder, translated by the integer
    /// offset `(dx, dy)`. Returns the blueprint's ports mapped to the new ids.
    pub fn splice(&mut self, bp: &GadgetBlueprint, dx: i64, dy: i64) -> BTreeMap<String, u32> {
        let base = self.graph.n() as u32;
        for v in 0..bp.graph.n() as u32 {
            let p = &bp.coords[&v];
            let q = Point::new(&p.x + rat(dx), &p.y + rat(dy));
            let w = self.add(q);
            debug_assert_eq!(w, base + v);
        }
        for (u, v) in bp.graph.edges() {
            self.graph.add_edge(base + u, base + v);
        }
        bp.ports
            .iter()
            .map(|(name, &v)| (name.clone(), base + v))
            .collect()
    }

    pub fn finish(self, ports: BTreeMap<String, u32>, meta: BTreeMap<String, String>) -> GadgetBlueprint {
        for (name, &v) in &ports {
            assert!(v < self.graph.n(), "port {name:?} out of range");
        }
        GadgetBlueprint {
            graph: self.graph,
            ports,
            coords: self.coords,
            meta,
        }
    }
}

pub(crate) fn meta_of(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

/// A chain of `k` triangle diamonds used to propagate a color constraint.
///
/// Vertices: a spine `u^1_0, …, u^1_k` (ids `0, 3, 6, …, 3k`) where diamond
/// `i` inserts a pair `u^2_i` (id `3i−2`) and `u^3_i` (id `3i−1`) with the five
/// edges `{u^1_{i−1},u^2_i}`, `{u^1_{i−1},u^3_i}`, `{u^2_i,u^3_i}`,
/// `{u^2_i,u^1_i}`, `{u^3_i,u^1_i}`. In every proper 3-coloring of a diamond
/// the pair takes the two colors different from `c(u^1_{i−1})`, which forces
/// `c(u^1_i) = c(u^1_{i−1})`; by induction the spine is monochromatic, so the
/// chain transports one color from `start` to `end`.
///
/// Ports: `start` (= `u^1_0`), `end` (= `u^1_k`), `center_i` for the spine,
/// `left_i` / `right_i` for each diamond's pair.
///
/// Local coordinates: spine at `(2i, 0)`, pairs at `(2i−1, ±1)`.
pub fn coloring_path(k: usize) -> Result<GadgetBlueprint, GadgetError> {
    if k == 0 {
        return Err(GadgetError::EmptyColoringPath);
    }
    let mut b = BlueprintBuilder::new();
    let mut ports = BTreeMap::new();
    let start = b.add(Point::ints(0, 0));
    ports.insert("start".to_string(), start);
    ports.insert("center_0".to_string(), start);
    let mut prev = start;
    for i in 1..=k as i64 {
        let left = b.add(Point::ints(2 * i - 1, 1));
        let right = b.add(Point::ints(2 * i - 1, -1));
        let spine = b.add(Point::ints(2 * i, 0));
        b.edge(prev, left);
        b.edge(prev, right);
        b.edge(left, right);
        b.edge(left, spine);
        b.edge(right, spine);
        ports.insert(format!("left_{i}"), left);
        ports.insert(format!("right_{i}"), right);
        ports.insert(format!("center_{i}"), spine);
        prev = spine;
    }
    ports.insert("end".to_string(), prev);
    let meta = meta_of(&[("kind", "coloring_path".into()), ("k", k.to_string())]);
    Ok(b.finish(ports, meta))
}

/// A filler cycle occupying one lattice cell.
///
/// * `(8, IndependentSet)` — an 8-cycle whose independence number is exactly
///   four; its four connector vertices (top, left, bottom, right) are pairwise
///   non-adjacent, and local coordinates put the connectors on the axes at
///   distance 1 with the remaining vertices on the diagonals at `(±1/2, ±1/2)`.
/// * `(12, DominatingSet)` — a 12-cycle whose domination number is exactly
///   four; connectors top, right, bottom, left sit on the axes and each side
///   carries two intermediate vertices at thirds, tracing a diamond.
///
/// Ports: `connector_top`, `connector_right`, `connector_bottom`,
/// `connector_left`.
pub fn filler_cycle(len: usize, problem: crate::Problem) -> Result<GadgetBlueprint, GadgetError> {
    use crate::Problem::{DominatingSet, IndependentSet};
    let mut b = BlueprintBuilder::new();
    let mut ports = BTreeMap::new();
    match (len, problem) {
        (8, IndependentSet) => {
            // Ids clockwise from the top; connectors at even ids.
            let coords: [Point; 8] = [
                Point::ints(0, 1),
                Point::quads(-1, 2, 1, 2),
                Point::ints(-1, 0),
                Point::quads(-1, 2, -1, 2),
                Point::ints(0, -1),
                Point::quads(1, 2, -1, 2),
                Point::ints(1, 0),
                Point::quads(1, 2, 1, 2),
            ];
            let ids: Vec<u32> = coords.iter().map(|p| b.add(p.clone())).collect();
            for i in 0..8 {
                b.edge(ids[i], ids[(i + 1) % 8]);
            }
            ports.insert("connector_top".into(), ids[0]);
            ports.insert("connector_left".into(), ids[2]);
            ports.insert("connector_bottom".into(), ids[4]);
            ports.insert("connector_right".into(), ids[6]);
        }
        (12, DominatingSet) => {
            // Ids clockwise from the top; connectors at ids 0, 3, 6, 9.
            let coords: [Point; 12] = [
                Point::ints(0, 1),
                Point::quads(1, 3, 2, 3),
                Point::quads(2, 3, 1, 3),
                Point::ints(1, 0),
                Point::quads(2, 3, -1, 3),
                Point::quads(1, 3, -2, 3),
                Point::ints(0, -1),
                Point::quads(-1, 3, -2, 3),
                Point::quads(-2, 3, -1, 3),
                Point::ints(-1, 0),
                Point::quads(-2, 3, 1, 3),
                Point::quads(-1, 3, 2, 3),
            ];
            let ids: Vec<u32> = coords.iter().map(|p| b.add(p.clone())).collect();
            for i in 0..12 {
                b.edge(ids[i], ids[(i + 1) % 12]);
            }
            ports.insert("connector_top".into(), ids[0]);
            ports.insert("connector_right".into(), ids[3]);
            ports.insert("connector_bottom".into(), ids[6]);
            ports.insert("connector_left".into(), ids[9]);
        }
        _ => {
            return Err(GadgetError::UnsupportedFiller {
                len,
                problem: match problem {
                    IndependentSet => "independent set",
                    DominatingSet => "dominating set",
                    _ => "this problem",
                },
            })
        }
    }
    let meta = meta_of(&[
        ("kind", "filler_cycle".into()),
        ("len", len.to_string()),
        ("problem", format!("{problem:?}")),
    ]);
    Ok(b.finish(ports, meta))
}

/// The four inner degree-4 vertices of a buffer, in petal order
/// (top, right, bottom, left).
pub fn buffer_in_tips() -> [u32; 4] {
    [3, 7, 11, 15]
}

/// The four vertex-disjoint 4-cycles ("petals") of a buffer, each listed in
/// cyclic order.
pub fn buffer_petals() -> [[u32; 4]; 4] {
    [
        [0, 1, 3, 2],
        [4, 5, 7, 6],
        [8, 9, 11, 10],
        [12, 13, 15, 14],
    ]
}

/// A 20-vertex, 24-edge graph whose feedback vertex number is exactly four.
///
/// Four diamond "petals" point along the axes; each petal is a 4-cycle
/// `outer – side – in – side` whose `in` vertex has degree four, and the four
/// `in` vertices are linked through four degree-2 "mid" vertices forming an
/// inner ring. Properties:
///
/// * it contains four vertex-disjoint cycles (the petals), so any feedback
///   vertex set needs at least four vertices;
/// * removing the four `in` vertices leaves a forest, so four suffice;
/// * exactly four vertices have degree four (the `in` vertices);
/// * in the intended use, each `outer` port receives at most one external
///   edge, which keeps the feedback vertex number additive.
///
/// Ports: `outer_top`, `outer_right`, `outer_bottom`, `outer_left` at local
/// positions `(0, 2/5)`, `(2/5, 0)`, `(0, −2/5)`, `(−2/5, 0)` — i.e. at
/// `(±4ε, 0)`, `(0, ±4ε)` for the construction scale `ε = 1/10`.
pub fn buffer() -> GadgetBlueprint {
    let mut b = BlueprintBuilder::new();
    // Per petal: outer, side_a, side_b, in. Units of 1/40.
    // Petal order: top (+y), right (+x), bottom (−y), left (−x).
    let petal = |b: &mut BlueprintBuilder, pts: [(i64, i64); 4]| -> [u32; 4] {
        let ids = [
            b.add(Point::quads(pts[0].0, 40, pts[0].1, 40)),
            b.add(Point::quads(pts[1].0, 40, pts[1].1, 40)),
            b.add(Point::quads(pts[2].0, 40, pts[2].1, 40)),
            b.add(Point::quads(pts[3].0, 40, pts[3].1, 40)),
        ];
        b.edge(ids[0], ids[1]);
        b.edge(ids[0], ids[2]);
        b.edge(ids[1], ids[3]);
        b.edge(ids[2], ids[3]);
        ids
    };
    let top = petal(&mut b, [(0, 16), (-4, 12), (4, 12), (0, 8)]);
    let right = petal(&mut b, [(16, 0), (12, 4), (12, -4), (8, 0)]);
    let bottom = petal(&mut b, [(0, -16), (4, -12), (-4, -12), (0, -8)]);
    let left = petal(&mut b, [(-16, 0), (-12, -4), (-12, 4), (-8, 0)]);
    // Inner ring: mids between consecutive in-tips.
    let mid_ne = b.add(Point::quads(4, 40, 4, 40));
    let mid_se = b.add(Point::quads(4, 40, -4, 40));
    let mid_sw = b.add(Point::quads(-4, 40, -4, 40));
    let mid_nw = b.add(Point::quads(-4, 40, 4, 40));
    b.edge(top[3], mid_ne);
    b.edge(mid_ne, right[3]);
    b.edge(right[3], mid_se);
    b.edge(mid_se, bottom[3]);
    b.edge(bottom[3], mid_sw);
    b.edge(mid_sw, left[3]);
    b.edge(left[3], mid_nw);
    b.edge(mid_nw, top[3]);
    let mut ports = BTreeMap::new();
    ports.insert("outer_top".into(), top[0]);
    ports.insert("outer_right".into(), right[0]);
    ports.insert("outer_bottom".into(), bottom[0]);
    ports.insert("outer_left".into(), left[0]);
    let meta = meta_of(&[
        ("kind", "buffer".into()),
        ("fvs", "4".into()),
        ("epsilon", "1/10".into()),
    ]);
    b.finish(ports, meta)
}

/// Scale used throughout the plane constructions: intermediate offsets are
/// multiples of `ε = 1/10` unless a caller overrides it.
pub fn default_epsilon() -> Rational {
    ratq(1, 10)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Problem, Solution};
    use crate::oracles::{exact_solve, Budget};
    use std::collections::BTreeSet;

    #[test]
    fn coloring_path_rejects_zero() {
        assert_eq!(coloring_path(0), Err(GadgetError::EmptyColoringPath));
    }

    #[test]
    fn coloring_path_k1_shape() {
        let bp = coloring_path(1).unwrap();
        bp.validate().unwrap();
        assert_eq!(bp.graph.n(), 4);
        assert_eq!(bp.graph.m(), 5);
        // Complete graph on four vertices minus the start–end pair.
        let (s, e) = (bp.port("start"), bp.port("end"));
        assert!(!bp.graph.has_edge(s, e));
        for u in 0..4u32 {
            for v in (u + 1)..4u32 {
                if (u, v) != (s.min(e), s.max(e)) {
                    assert!(bp.graph.has_edge(u, v), "expected edge ({u},{v})");
                }
            }
        }
    }

    #[test]
    fn coloring_path_k3_shape() {
        let bp = coloring_path(3).unwrap();
        bp.validate().unwrap();
        assert_eq!(bp.graph.n(), 10);
        assert_eq!(bp.graph.m(), 15);
        assert_eq!(bp.port("center_0"), bp.port("start"));
        assert_eq!(bp.port("center_3"), bp.port("end"));
    }

    /// Every proper 3-coloring gives the two spine ends the same color.
    #[test]
    fn coloring_path_k2_propagates() {
        let bp = coloring_path(2).unwrap();
        let g = &bp.graph;
        let n = g.n() as usize;
        let (s, e) = (bp.port("start") as usize, bp.port("end") as usize);
        let adj = g.adj();
        let mut coloring = vec![0u8; n];
        let mut found = 0usize;
        // Exhaustive enumeration over 3^7 colorings.
        fn rec(
            i: usize,
            n: usize,
            adj: &[Vec<u32>],
            coloring: &mut Vec<u8>,
            s: usize,
            e: usize,
            found: &mut usize,
        ) {
            if i == n {
                *found += 1;
                assert_eq!(coloring[s], coloring[e]);
                return;
            }
            'next: for c in 0..3u8 {
                for &w in &adj[i] {
                    if (w as usize) < i && coloring[w as usize] == c {
                        continue 'next;
                    }
                }
                coloring[i] = c;
                rec(i + 1, n, adj, coloring, s, e, found);
            }
        }
        rec(0, n, &adj, &mut coloring, s, e, &mut found);
        assert!(found > 0, "the diamond chain must be 3-colorable");
    }

    #[test]
    fn filler_cycle_rejects_other_shapes() {
        assert!(filler_cycle(8, Problem::DominatingSet).is_err());
        assert!(filler_cycle(12, Problem::IndependentSet).is_err());
        assert!(filler_cycle(10, Problem::IndependentSet).is_err());
        assert!(filler_cycle(12, Problem::VertexCover).is_err());
    }

    #[test]
    fn filler_c8_independence_four() {
        let bp = filler_cycle(8, Problem::IndependentSet).unwrap();
        bp.validate().unwrap();
        assert_eq!(bp.graph.n(), 8);
        assert_eq!(bp.graph.m(), 8);
        let w = exact_solve(Problem::IndependentSet, &bp.graph, Budget::unlimited());
        assert_eq!(w.exact_size(), Some(4));
        // Connectors pairwise non-adjacent.
        let conns = [
            bp.port("connector_top"),
            bp.port("connector_left"),
            bp.port("connector_bottom"),
            bp.port("connector_right"),
        ];
        for i in 0..4 {
            for j in (i + 1)..4 {
                assert!(!bp.graph.has_edge(conns[i], conns[j]));
            }
        }
        // The connector set itself is independent and maximum.
        let sol = Solution::VertexSet(conns.iter().copied().collect::<BTreeSet<_>>());
        assert!(crate::graph::check_solution(
            Problem::IndependentSet,
            &bp.graph,
            &sol,
            Some(4)
        )
        .unwrap());
    }

    #[test]
    fn filler_c12_domination_four() {
        let bp = filler_cycle(12, Problem::DominatingSet).unwrap();
        bp.validate().unwrap();
        assert_eq!(bp.graph.n(), 12);
        assert_eq!(bp.graph.m(), 12);
        let w = exact_solve(Problem::DominatingSet, &bp.graph, Budget::unlimited());
        assert_eq!(w.exact_size(), Some(4));
    }

    #[test]
    fn buffer_shape_and_feedback_number() {
        let bp = buffer();
        bp.validate().unwrap();
        assert_eq!(bp.graph.n(), 20);
        assert_eq!(bp.graph.m(), 24);
        // Exactly four vertices of degree four; everything else degree two.
        let degs = bp.graph.degrees();
        let four: Vec<u32> = (0..20u32).filter(|&v| degs[v as usize] == 4).collect();
        assert_eq!(four, buffer_in_tips().to_vec());
        assert!(degs.iter().all(|&d| d == 2 || d == 4));
        // Feedback vertex number exactly four (small enough to solve directly).
        let w = exact_solve(Problem::FeedbackVertexSet, &bp.graph, Budget::unlimited());
        assert_eq!(w.exact_size(), Some(4));
        // The four petals are vertex-disjoint cycles of the graph.
        let mut used: BTreeSet<u32> = BTreeSet::new();
        for petal in buffer_petals() {
            for i in 0..4 {
                assert!(used.insert(petal[i]), "petals must be disjoint");
                assert!(bp.graph.has_edge(petal[i], petal[(i + 1) % 4]));
            }
        }
        // Removing the in-tips leaves a forest.
        let tips: BTreeSet<u32> = buffer_in_tips().iter().copied().collect();
        assert!(bp.graph.is_forest_after_removal(&tips));
        // Port positions: (0, ±2/5) and (±2/5, 0).
        let two_fifths = ratq(2, 5);
        let top = &bp.coords[&bp.port("outer_top")];
        assert_eq!((top.x.clone(), top.y.clone()), (rat(0), two_fifths.clone()));
        let right = &bp.coords[&bp.port("outer_right")];
        assert_eq!(
            (right.x.clone(), right.y.clone()),
            (two_fifths.clone(), rat(0))
        );
    }

    /// The buffer keeps its feedback number additive when each outer port
    /// gains one external neighbor: attach all four ports to fresh pendant
    /// vertices and to a small host cycle, then recheck.
    #[test]
    fn buffer_additivity_smoke() {
        let bp = buffer();
        let mut g = bp.graph.clone();
        // Host: a triangle (feedback number 1).
        let a = g.add_vertex();
        let b = g.add_vertex();
        let c = g.add_vertex();
        g.add_edge(a, b);
        g.add_edge(b, c);
        g.add_edge(a, c);
        g.add_edge(bp.port("outer_top"), a);
        g.add_edge(bp.port("outer_right"), b);
        let w = exact_solve(Problem::FeedbackVertexSet, &g, Budget::unlimited());
        assert_eq!(w.exact_size(), Some(5));
    }
}
