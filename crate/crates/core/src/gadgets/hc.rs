//! Building blocks for the Hamiltonicity reduction: ladder paths (edge
//! connectors), 2×10 grid hubs (vertex stand-ins), and a ring-attachment
//! operation that extends a graph without changing whether it is
//! Hamiltonian.

use std::collections::{BTreeMap, BTreeSet};

use super::{meta_of, BlueprintBuilder, GadgetBlueprint, GadgetError};
use crate::geom::Point;
use crate::Graph;

/// Vertex-id layout of a ladder path with arm length `k1` and middle length
/// `k2`. The first arm is the rail pair `u1`/`tu1`, the middle section is the
/// row pair `u2`/`tu2`, the second arm is `u3`/`tu3`, and `w(1)..=w(7)` are
/// the switch vertices joining the middle section to the second arm.
#[derive(Clone, Copy)]
pub(crate) struct LadderIds {
    pub k1: u32,
    pub k2: u32,
}

impl LadderIds {
    pub fn new(k1: usize, k2: usize) -> Self {
        Self {
            k1: k1 as u32,
            k2: k2 as u32,
        }
    }

    pub fn u1(self, r: u32) -> u32 {
        r
    }
    pub fn tu1(self, r: u32) -> u32 {
        self.k1 + r
    }
    pub fn u2(self, r: u32) -> u32 {
        2 * self.k1 + r
    }
    pub fn tu2(self, r: u32) -> u32 {
        2 * self.k1 + self.k2 + r
    }
    pub fn u3(self, r: u32) -> u32 {
        2 * self.k1 + 2 * self.k2 + r
    }
    pub fn tu3(self, r: u32) -> u32 {
        3 * self.k1 + 2 * self.k2 + r
    }
    /// Switch vertex, `t` in `1..=7`.
    pub fn w(self, t: u32) -> u32 {
        4 * self.k1 + 2 * self.k2 + t - 1
    }
    pub fn n(self) -> u32 {
        4 * self.k1 + 2 * self.k2 + 7
    }

    /// Vertices of the first half: both first-arm rails, both middle rows,
    /// and the two switch vertices closest to the middle section.
    pub fn first_half(self) -> BTreeSet<u32> {
        let mut s = BTreeSet::new();
        for r in 0..self.k1 {
            s.insert(self.u1(r));
            s.insert(self.tu1(r));
        }
        for r in 0..self.k2 {
            s.insert(self.u2(r));
            s.insert(self.tu2(r));
        }
        s.insert(self.w(1));
        s.insert(self.w(2));
        s
    }

    /// Vertices of the second half: both second-arm rails and the four
    /// switch vertices closest to them.
    pub fn second_half(self) -> BTreeSet<u32> {
        let mut s = BTreeSet::new();
        for r in 0..self.k1 {
            s.insert(self.u3(r));
            s.insert(self.tu3(r));
        }
        for t in 4..=7 {
            s.insert(self.w(t));
        }
        s
    }

    /// The transitional vertex sitting between the two halves.
    pub fn transitional(self) -> u32 {
        self.w(3)
    }
}

/// Every edge of the ladder together with its structural label.
///
/// * `"inside"` — one boundary walk: the `u1` rail, the first arm's top
///   rung, the corner into the `u2` row, the `u2` row itself, the second
///   arm's top rung, and the `u3` rail;
/// * `"outside"` — the opposite boundary walk: the `tu1` rail, the corner
///   into the `tu2` row, the `tu2` row, and the `tu3` rail;
/// * `"rung"` — all remaining rungs between rail partners;
/// * `"switch"` — the nine edges among `w1..w7` plus the four edges
///   connecting the switch to the middle rows and the second arm.
fn ladder_labeled_edges(ids: LadderIds) -> Vec<(u32, u32, &'static str)> {
    let (k1, k2) = (ids.k1, ids.k2);
    let mut out = Vec::new();
    for r in 0..k1 - 1 {
        out.push((ids.u1(r), ids.u1(r + 1), "inside"));
        out.push((ids.tu1(r), ids.tu1(r + 1), "outside"));
    }
    for r in 0..k1 {
        let label = if r == k1 - 1 { "inside" } else { "rung" };
        out.push((ids.u1(r), ids.tu1(r), label));
    }
    out.push((ids.tu1(k1 - 1), ids.u2(0), "inside"));
    out.push((ids.tu1(k1 - 2), ids.tu2(0), "outside"));
    for r in 0..k2 - 1 {
        out.push((ids.u2(r), ids.u2(r + 1), "inside"));
        out.push((ids.tu2(r), ids.tu2(r + 1), "outside"));
    }
    for r in 0..k2 {
        out.push((ids.u2(r), ids.tu2(r), "rung"));
    }
    out.push((ids.u2(k2 - 1), ids.w(1), "switch"));
    out.push((ids.tu2(k2 - 1), ids.w(2), "switch"));
    for &(a, b) in &[
        (1, 2),
        (1, 3),
        (2, 3),
        (3, 4),
        (3, 5),
        (4, 5),
        (4, 6),
        (5, 7),
        (6, 7),
    ] {
        out.push((ids.w(a), ids.w(b), "switch"));
    }
    out.push((ids.w(6), ids.tu3(k1 - 1), "switch"));
    out.push((ids.w(7), ids.tu3(k1 - 2), "switch"));
    for r in 0..k1 - 1 {
        out.push((ids.u3(r), ids.u3(r + 1), "inside"));
        out.push((ids.tu3(r), ids.tu3(r + 1), "outside"));
    }
    for r in 0..k1 {
        let label = if r == k1 - 1 { "inside" } else { "rung" };
        out.push((ids.u3(r), ids.tu3(r), label));
    }
    out
}

/// A ladder path: two `2×k1` grid arms joined through a `2×k2` grid middle
/// section and a seven-vertex switch, on `4·k1 + 2·k2 + 7` vertices with
/// `6·k1 + 3·k2 + 9` edges.
///
/// The two vertices `end1a`/`end1b` (ports) form the open end of the first
/// arm and `end2a`/`end2b` the open end of the second arm; hosts connect to
/// the ladder only through these four vertices. Local unit-distance
/// coordinates place the first arm on columns 0 and 1, the middle rows at
/// heights `k1` and `k1+1`, the switch between them, and the second arm on
/// columns `k2+5` and `k2+6`.
///
/// Each edge's label (`inside`, `outside`, `rung`, `switch`) is recorded in
/// `meta` under `label_{u}_{v}` and is also available via
/// [`ladder_edge_labels`].
///
/// The structural property that makes ladders useful as edge connectors:
/// in any host that attaches only the four end vertices (one host edge
/// each), a Hamiltonian cycle either *traverses* the ladder (one path
/// through all its vertices, from one end pair to the other) or *covers* it
/// (one path through each half, each returning to that half's end pair,
/// with the transitional vertex picked up by exactly one half). This
/// dichotomy is enforced by the switch adjacency and verified by
/// enumeration in the tests.
pub fn ladder_path(k1: usize, k2: usize) -> Result<GadgetBlueprint, GadgetError> {
    if k1 < 2 || k2 < 2 {
        return Err(GadgetError::LadderArms { k1, k2 });
    }
    let ids = LadderIds::new(k1, k2);
    let (k1i, k2i) = (k1 as i64, k2 as i64);
    let mut b = BlueprintBuilder::new();
    for r in 0..k1i {
        b.add(Point::ints(0, r + 2));
    }
    for r in 0..k1i {
        b.add(Point::ints(1, r + 2));
    }
    for r in 0..k2i {
        b.add(Point::ints(2 + r, k1i + 1));
    }
    for r in 0..k2i {
        b.add(Point::ints(2 + r, k1i));
    }
    for r in 0..k1i {
        b.add(Point::ints(k2i + 6, r + 2));
    }
    for r in 0..k1i {
        b.add(Point::ints(k2i + 5, r + 2));
    }
    b.add(Point::quads(k2i + 2, 1, 3 * k1i + 2, 3)); // w1
    b.add(Point::quads(k2i + 2, 1, 3 * k1i + 1, 3)); // w2
    b.add(Point::quads(2 * k2i + 5, 2, 2 * k1i + 1, 2)); // w3
    b.add(Point::quads(k2i + 3, 1, 3 * k1i + 2, 3)); // w4
    b.add(Point::quads(k2i + 3, 1, 3 * k1i + 1, 3)); // w5
    b.add(Point::ints(k2i + 4, k1i + 1)); // w6
    b.add(Point::ints(k2i + 4, k1i)); // w7
    debug_assert_eq!(b.graph.n(), ids.n());

    let mut meta = meta_of(&[
        ("kind", "ladder_path".into()),
        ("k1", k1.to_string()),
        ("k2", k2.to_string()),
    ]);
    for (u, v, label) in ladder_labeled_edges(ids) {
        b.edge(u, v);
        let (lo, hi) = (u.min(v), u.max(v));
        meta.insert(format!("label_{lo}_{hi}"), label.to_string());
    }

    let ports = [
        ("end1a", ids.u1(0)),
        ("end1b", ids.tu1(0)),
        ("end2a", ids.u3(0)),
        ("end2b", ids.tu3(0)),
    ]
    .into_iter()
    .map(|(s, v)| (s.to_string(), v))
    .collect();
    Ok(b.finish(ports, meta))
}

/// The label of every ladder edge, keyed by the normalized vertex pair.
/// Same labels as stored in the blueprint's `meta`.
pub fn ladder_edge_labels(
    k1: usize,
    k2: usize,
) -> Result<BTreeMap<(u32, u32), &'static str>, GadgetError> {
    if k1 < 2 || k2 < 2 {
        return Err(GadgetError::LadderArms { k1, k2 });
    }
    Ok(ladder_labeled_edges(LadderIds::new(k1, k2))
        .into_iter()
        .map(|(u, v, l)| ((u.min(v), u.max(v)), l))
        .collect())
}

/// Four rail edges of the ladder that are safe anchors for later ring
/// attachments: whenever a host graph embedding the ladder (through its four
/// end vertices only) is Hamiltonian, each returned edge lies on *some*
/// Hamiltonian cycle. Two of the edges are labeled `inside` and two
/// `outside`, and all four connect an even rail position `j` to `j+1`.
///
/// For arms of length at least 4 the four edges sit on the `u1` rail and the
/// `tu2` row; shorter arms substitute a `u3`-rail edge (for `k1 < 4`) or a
/// `tu1`-rail edge (for `k2 < 4`), which are certified by a different
/// traversal family of the same ladder.
pub fn permissible_ladder_edges(
    k1: usize,
    k2: usize,
) -> Result<Vec<(u32, u32)>, GadgetError> {
    if k1 < 2 || k2 < 2 {
        return Err(GadgetError::LadderArms { k1, k2 });
    }
    let ids = LadderIds::new(k1, k2);
    let inside2 = if k1 >= 4 {
        (ids.u1(2), ids.u1(3))
    } else {
        (ids.u3(0), ids.u3(1))
    };
    let outside2 = if k2 >= 4 {
        (ids.tu2(2), ids.tu2(3))
    } else {
        (ids.tu1(0), ids.tu1(1))
    };
    Ok(vec![
        (ids.u1(0), ids.u1(1)),
        inside2,
        (ids.tu2(0), ids.tu2(1)),
        outside2,
    ])
}

/// The bare 2×10 grid underlying every vertex hub. Vertex at column `c`
/// (0..10) and row `r` (0..2) has id `2c + r`.
pub(crate) fn hub_grid() -> Graph {
    let mut g = Graph::new(20);
    for c in 0..10u32 {
        g.add_edge(2 * c, 2 * c + 1);
        if c < 9 {
            g.add_edge(2 * c, 2 * (c + 1));
            g.add_edge(2 * c + 1, 2 * (c + 1) + 1);
        }
    }
    g
}

/// The two grid vertices forming outlet `slot` (0 = left, 1 = middle,
/// 2 = right) given each outlet's side (`true` = top row).
pub(crate) fn hub_outlet(sides: &[bool; 3], slot: usize) -> (u32, u32) {
    let col = [0u32, 4, 8][slot];
    let row = if sides[slot] { 1 } else { 0 };
    (2 * col + row, 2 * (col + 1) + row)
}

/// Splits the vertex set of `g` into two vertex-disjoint paths, the first
/// joining `first.0` to `first.1` and the second `second.0` to `second.1`,
/// together visiting every vertex exactly once. Returns the two paths in
/// vertex order, or `None` when no such split exists.
///
/// This is the shape a global cycle takes inside a vertex hub: two of the
/// three attached connectors contribute one endpoint each (they are passed
/// through), the third contributes both endpoints of one path pair (it is
/// covered), and the grid interior must be swallowed by the two path
/// segments between those four endpoints.
pub(crate) fn two_path_partition(
    g: &Graph,
    first: (u32, u32),
    second: (u32, u32),
) -> Option<(Vec<u32>, Vec<u32>)> {
    let n = g.n() as usize;
    let adj = g.adj();
    let mut distinct = BTreeSet::new();
    for &v in &[first.0, first.1, second.0, second.1] {
        if v >= g.n() || !distinct.insert(v) {
            return None;
        }
    }

    fn complement_path(
        adj: &[Vec<u32>],
        taken: &[bool],
        from: u32,
        to: u32,
    ) -> Option<Vec<u32>> {
        let free = taken.iter().filter(|b| !**b).count();
        let mut used = taken.to_vec();
        let mut path = vec![from];
        used[from as usize] = true;
        fn go(
            adj: &[Vec<u32>],
            used: &mut [bool],
            path: &mut Vec<u32>,
            to: u32,
            free: usize,
        ) -> bool {
            let cur = *path.last().unwrap();
            if path.len() == free {
                return cur == to;
            }
            for &w in &adj[cur as usize] {
                if used[w as usize] || (w == to && path.len() + 1 != free) {
                    continue;
                }
                used[w as usize] = true;
                path.push(w);
                if go(adj, used, path, to, free) {
                    return true;
                }
                path.pop();
                used[w as usize] = false;
            }
            false
        }
        if go(&adj.to_vec(), &mut used, &mut path, to, free) {
            Some(path)
        } else {
            None
        }
    }

    fn walk(
        adj: &[Vec<u32>],
        on_path: &mut [bool],
        path: &mut Vec<u32>,
        target: u32,
        second: (u32, u32),
    ) -> Option<(Vec<u32>, Vec<u32>)> {
        let cur = *path.last().unwrap();
        if cur == target {
            return complement_path(adj, on_path, second.0, second.1)
                .map(|p2| (path.clone(), p2));
        }
        for &w in &adj[cur as usize] {
            if on_path[w as usize] || w == second.0 || w == second.1 {
                continue;
            }
            on_path[w as usize] = true;
            path.push(w);
            if let Some(r) = walk(adj, on_path, path, target, second) {
                return Some(r);
            }
            path.pop();
            on_path[w as usize] = false;
        }
        None
    }

    let mut on_path = vec![false; n];
    on_path[first.0 as usize] = true;
    let mut path = vec![first.0];
    walk(&adj, &mut on_path, &mut path, first.1, second)
}

/// All endpoint-column pairs `(column at slot s, column at slot t)` for
/// which the hub grid splits into two paths consistent with slots `s` and
/// `t` being passed through and the remaining slot being covered. Checked
/// exhaustively over all endpoint choices and both ways of pairing the
/// passed-through endpoints with the covered outlet's two vertices.
pub(crate) fn hub_traversal_columns(
    sides: &[bool; 3],
    s: usize,
    t: usize,
) -> BTreeSet<(u32, u32)> {
    let grid = hub_grid();
    let covered = 3 - s - t;
    let (d1, d2) = hub_outlet(sides, covered);
    let (sa, sb) = hub_outlet(sides, s);
    let (ta, tb) = hub_outlet(sides, t);
    let mut out = BTreeSet::new();
    for &ts in &[sa, sb] {
        for &tt in &[ta, tb] {
            if two_path_partition(&grid, (ts, d1), (tt, d2)).is_some()
                || two_path_partition(&grid, (ts, d2), (tt, d1)).is_some()
            {
                out.insert((ts / 2, tt / 2));
            }
        }
    }
    out
}

/// A vertex hub: the 2×10 grid with three designated outlets at column
/// pairs (0,1), (4,5), (8,9), each on the top or bottom row. `top` of them
/// sit on the top row and `bottom` on the bottom row (`top + bottom = 3`);
/// the mixed splits put the minority-side outlet at the right, and the
/// splits (1,2)/(0,3) are the vertical mirror images of (2,1)/(3,0).
///
/// Ports `outlet_{left,middle,right}_{a,b}` name the two grid vertices of
/// each outlet. `meta` records each outlet's side and, under
/// `traversals_{left_middle,left_right,middle_right}`, the exhaustively
/// computed endpoint-column pairs for which the grid supports a two-path
/// split when those two outlets are passed through and the third is
/// covered (see [`hub_traversal_columns`]); each such entry being non-empty
/// certifies that a cycle can pass through the hub in that configuration.
pub fn hc_vertex_gadget(top: usize, bottom: usize) -> Result<GadgetBlueprint, GadgetError> {
    let sides: [bool; 3] = match (top, bottom) {
        (3, 0) => [true, true, true],
        (2, 1) => [true, true, false],
        (1, 2) => [false, false, true],
        (0, 3) => [false, false, false],
        _ => return Err(GadgetError::OutletSplit { top, bottom }),
    };
    let mut b = BlueprintBuilder::new();
    for c in 0..10i64 {
        for r in 0..2i64 {
            b.add(Point::ints(c, r));
        }
    }
    let grid = hub_grid();
    for (u, v) in grid.edges() {
        b.edge(u, v);
    }

    let mut ports = BTreeMap::new();
    let mut meta = meta_of(&[
        ("kind", "hc_vertex_gadget".into()),
        ("top", top.to_string()),
        ("bottom", bottom.to_string()),
    ]);
    for (slot, name) in [(0usize, "left"), (1, "middle"), (2, "right")] {
        let (a, bb) = hub_outlet(&sides, slot);
        ports.insert(format!("outlet_{name}_a"), a);
        ports.insert(format!("outlet_{name}_b"), bb);
        meta.insert(
            format!("side_{name}"),
            if sides[slot] { "top" } else { "bottom" }.to_string(),
        );
    }
    for (s, t, name) in [
        (0usize, 1usize, "left_middle"),
        (0, 2, "left_right"),
        (1, 2, "middle_right"),
    ] {
        let combos = hub_traversal_columns(&sides, s, t);
        let text = combos
            .iter()
            .map(|(a, c)| format!("{a}:{c}"))
            .collect::<Vec<_>>()
            .join(";");
        meta.insert(format!("traversals_{name}"), text);
    }
    Ok(b.finish(ports, meta))
}

/// Attaches a ring of `k` fresh vertices `v_1, …, v_k` to the host along the
/// host edge `e = {u1, u2}`:
///
/// * the fresh vertices induce exactly the cycle `v_1 – v_2 – … – v_k – v_1`;
/// * no edge between two host vertices is added or removed;
/// * `v_1` is joined to `u1` and `v_k` to `u2`, giving both ends degree
///   exactly three;
/// * `plan` lists extra joints `(ring position, host vertex)`; positions are
///   1-based, restricted to `3..=k-2`, and no two occupied positions may be
///   ring-adjacent, so every ring vertex of degree ≥ 3 has two degree-2 ring
///   neighbors.
///
/// Under these conditions the extension preserves Hamiltonicity in both
/// directions whenever `e` lies on some Hamiltonian cycle of every
/// Hamiltonian host: a cycle through `e` detours through the ring
/// (`u1 – v_1 – … – v_k – u2`), and conversely the degree discipline forces
/// any Hamiltonian cycle of the extension to cross the ring in one such
/// sweep. Returns the extended graph together with the ring edges
/// `{v_i, v_{i+1}}` for `1 ≤ i < k`, each of which is again a safe anchor
/// for further attachments.
pub fn attach_permissible_cycle(
    g: &Graph,
    e: (u32, u32),
    k: usize,
    plan: &[(usize, u32)],
) -> Result<(Graph, Vec<(u32, u32)>), GadgetError> {
    let (u1, u2) = e;
    if u1 >= g.n() || u2 >= g.n() || !g.has_edge(u1, u2) {
        return Err(GadgetError::EdgeNotInHost(u1, u2));
    }
    if k < 4 {
        return Err(GadgetError::CycleTooShort(k));
    }
    let n = g.n();
    let mut seen = BTreeSet::new();
    for &(pos, w) in plan {
        if pos < 3 || pos > k - 2 {
            return Err(GadgetError::AttachmentPosition { pos, max: k - 2 });
        }
        if w >= n {
            return Err(GadgetError::AttachmentTarget(w));
        }
        if !seen.insert((pos, w)) {
            return Err(GadgetError::DuplicateAttachment(pos, w));
        }
    }
    let positions: BTreeSet<usize> = plan.iter().map(|&(p, _)| p).collect();
    let mut prev: Option<usize> = None;
    for &p in &positions {
        if let Some(q) = prev {
            if p == q + 1 {
                return Err(GadgetError::AdjacentBranchPositions(q, p));
            }
        }
        prev = Some(p);
    }

    let mut out = g.clone();
    let ring: Vec<u32> = (0..k).map(|_| out.add_vertex()).collect();
    for t in 0..k {
        out.add_edge(ring[t], ring[(t + 1) % k]);
    }
    out.add_edge(ring[0], u1);
    out.add_edge(ring[k - 1], u2);
    for &(pos, w) in plan {
        out.add_edge(ring[pos - 1], w);
    }
    let new_anchors = (0..k - 1).map(|t| (ring[t], ring[t + 1])).collect();
    Ok((out, new_anchors))
}
