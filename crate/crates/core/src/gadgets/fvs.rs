//! Degree-encoding vertex gadget for the feedback-vertex-set construction.
//!
//! The gadget tiles a 9×7 block of unit lattice cells centered on a hub. Every
//! cell holds either a single vertex or a [`buffer`](super::buffer): the hub
//! and a tree of routing cells lead to `a` outlet cells on the top row and `b`
//! on the bottom row (`a + b = 4`), and all remaining cells hold buffers. Any
//! two orthogonally adjacent cells are connected through one midpoint vertex
//! placed halfway between them, joining their facing connecting vertices; for
//! a buffer the connecting vertices are its four outer ports, for a single
//! vertex the cell's vertex plays all four roles.
//!
//! Because the routing cells form a tree and every buffer port carries at most
//! one external edge, the gadget's feedback vertex number is exactly four times
//! its buffer count: the buffers contribute four vertex-disjoint cycles each,
//! and deleting every buffer's four degree-4 inner vertices leaves a forest
//! (with those vertices gone, no path crosses a buffer, so no cycle survives).

use std::collections::BTreeMap;

use super::{buffer, meta_of, BlueprintBuilder, GadgetBlueprint, GadgetError};
use crate::geom::Point;

/// Horizontal offsets of the outlet cells on one side of the block, given how
/// many outlets that side carries. Offsets are relative to the hub column and
/// listed left to right.
pub(crate) fn outlet_offsets(count: usize, top: bool) -> &'static [i64] {
    match (count, top) {
        (4, _) => &[-4, -2, 0, 2],
        (3, _) => &[-3, 0, 3],
        (2, true) => &[-3, 0],
        (2, false) => &[0, 3],
        (1, _) => &[0],
        (0, _) => &[],
        _ => unreachable!("outlet counts are at most four"),
    }
}

/// One routing spoke: the chain of cells from the hub to an outlet, hub side
/// first, followed by the outlet cell itself.
type Spoke = (Vec<(i64, i64)>, (i64, i64));

/// The routing tree for each gadget shape. Spokes are vertex-disjoint and the
/// only orthogonal adjacencies among single cells are consecutive cells of one
/// spoke — otherwise the midpoint connections would close a cycle through the
/// tree and break the feedback-number accounting.
fn spokes(a: usize, b: usize) -> Vec<Spoke> {
    // Straight spokes reused by several shapes.
    let west_to = |y_turn: i64| -> Vec<(i64, i64)> {
        vec![(-1, 0), (-2, 0), (-3, 0), (-3, y_turn), (-3, 2 * y_turn)]
    };
    let east_to = |y_turn: i64| -> Vec<(i64, i64)> {
        vec![(1, 0), (2, 0), (3, 0), (3, y_turn), (3, 2 * y_turn)]
    };
    let north: Vec<(i64, i64)> = vec![(0, 1), (0, 2)];
    let south: Vec<(i64, i64)> = vec![(0, -1), (0, -2)];
    match (a, b) {
        (3, 1) => vec![
            (west_to(1), (-3, 3)),
            (north.clone(), (0, 3)),
            (east_to(1), (3, 3)),
            (south.clone(), (0, -3)),
        ],
        (2, 2) => vec![
            (west_to(1), (-3, 3)),
            (north.clone(), (0, 3)),
            (south.clone(), (0, -3)),
            (east_to(-1), (3, -3)),
        ],
        (1, 3) => vec![
            (north.clone(), (0, 3)),
            (west_to(-1), (-3, -3)),
            (south.clone(), (0, -3)),
            (east_to(-1), (3, -3)),
        ],
        (4, 0) | (0, 4) => {
            let s = if a == 4 { 1i64 } else { -1 };
            // Two short hooks, one straight spoke, and one spoke that wraps
            // around the far flank to reach the outermost outlet.
            let hook_w = vec![(-1, 0), (-2, 0), (-2, s), (-2, 2 * s)];
            let hook_e = vec![(1, 0), (2, 0), (2, s), (2, 2 * s)];
            let straight = vec![(0, s), (0, 2 * s)];
            let around = vec![
                (0, -s),
                (0, -2 * s),
                (-1, -2 * s),
                (-2, -2 * s),
                (-3, -2 * s),
                (-4, -2 * s),
                (-4, -s),
                (-4, 0),
                (-4, s),
                (-4, 2 * s),
            ];
            vec![
                (around, (-4, 3 * s)),
                (hook_w, (-2, 3 * s)),
                (straight, (0, 3 * s)),
                (hook_e, (2, 3 * s)),
            ]
        }
        _ => unreachable!("callers validate the shape"),
    }
}

/// What occupies one lattice cell of the block.
#[derive(Clone, Copy)]
enum Cell {
    /// A single vertex serving as all four connecting vertices.
    Single(u32),
    /// A buffer; fields are its outer ports (top, bottom, left, right).
    Buffer(u32, u32, u32, u32),
}

impl Cell {
    fn facing(self, dir: Dir) -> u32 {
        match self {
            Cell::Single(v) => v,
            Cell::Buffer(t, b, l, r) => match dir {
                Dir::Up => t,
                Dir::Down => b,
                Dir::Left => l,
                Dir::Right => r,
            },
        }
    }
}

#[derive(Clone, Copy)]
enum Dir {
    Up,
    Down,
    Left,
    Right,
}

/// Builds an `(a, b)`-vertex gadget: `a` outlets along the top row, `b` along
/// the bottom, `a + b = 4`. See the module documentation for the structure.
///
/// Ports:
/// * `center` — the hub;
/// * `outlet_top_r` / `outlet_bottom_r` — the `r`-th outlet from the left on
///   each side, `r` starting at 1;
/// * `face_top_i` / `face_bottom_i` (`i = 0..9`, left to right) and
///   `face_left_i` / `face_right_i` (`i = 0..7`, bottom to top) — the outward
///   connecting vertex of each boundary cell, for splicing the gadget into a
///   larger drawing.
///
/// Metadata: `kind`, `a`, `b`, `buffers` (count), `buffer_bases`
/// (comma-separated first vertex id of each spliced buffer),
/// `outlet_top_offsets` / `outlet_bottom_offsets` (hub-relative columns).
pub fn fvs_vertex_gadget(a: usize, b: usize) -> Result<GadgetBlueprint, GadgetError> {
    if a + b != 4 {
        return Err(GadgetError::OutletSum { a, b });
    }
    Ok(build(a, b).0)
}

/// Internal assembly; also returns the spliced buffers' base ids for tests.
pub(crate) fn build(a: usize, b: usize) -> (GadgetBlueprint, Vec<u32>) {
    let plan = spokes(a, b);
    // Classify cells.
    let mut single_cells: BTreeMap<(i64, i64), ()> = BTreeMap::new();
    single_cells.insert((0, 0), ());
    for (cells, outlet) in &plan {
        for &c in cells {
            assert!(
                single_cells.insert(c, ()).is_none(),
                "routing cells must not overlap"
            );
        }
        assert!(single_cells.insert(*outlet, ()).is_none());
    }
    let buffer_bp = buffer();
    let mut builder = BlueprintBuilder::new();
    let mut cells: BTreeMap<(i64, i64), Cell> = BTreeMap::new();
    let mut buffer_bases: Vec<u32> = Vec::new();
    // Reading order: top row to bottom row, left to right.
    for y in (-3..=3).rev() {
        for x in -4..=4 {
            let cell = if single_cells.contains_key(&(x, y)) {
                Cell::Single(builder.add(Point::ints(x, y)))
            } else {
                let base = builder.graph.n() as u32;
                let ports = builder.splice(&buffer_bp, x, y);
                buffer_bases.push(base);
                Cell::Buffer(
                    ports["outer_top"],
                    ports["outer_bottom"],
                    ports["outer_left"],
                    ports["outer_right"],
                )
            };
            cells.insert((x, y), cell);
        }
    }
    // Connect every orthogonally adjacent pair of cells through one midpoint
    // vertex joining their facing connecting vertices.
    for y in (-3..=3).rev() {
        for x in -4..=4 {
            if x < 4 {
                let u = cells[&(x, y)].facing(Dir::Right);
                let v = cells[&(x + 1, y)].facing(Dir::Left);
                builder.sub_edge(u, v, Point::quads(2 * x + 1, 2, y, 1));
            }
            if y > -3 {
                let u = cells[&(x, y)].facing(Dir::Down);
                let v = cells[&(x, y - 1)].facing(Dir::Up);
                builder.sub_edge(u, v, Point::quads(x, 1, 2 * y - 1, 2));
            }
        }
    }
    // Ports.
    let mut ports: BTreeMap<String, u32> = BTreeMap::new();
    let single_at = |c: (i64, i64)| -> u32 {
        match cells[&c] {
            Cell::Single(v) => v,
            Cell::Buffer(..) => unreachable!("expected a single-vertex cell"),
        }
    };
    ports.insert("center".into(), single_at((0, 0)));
    for (r, &dx) in outlet_offsets(a, true).iter().enumerate() {
        ports.insert(format!("outlet_top_{}", r + 1), single_at((dx, 3)));
    }
    for (r, &dx) in outlet_offsets(b, false).iter().enumerate() {
        ports.insert(format!("outlet_bottom_{}", r + 1), single_at((dx, -3)));
    }
    for x in -4..=4 {
        ports.insert(
            format!("face_top_{}", x + 4),
            cells[&(x, 3)].facing(Dir::Up),
        );
        ports.insert(
            format!("face_bottom_{}", x + 4),
            cells[&(x, -3)].facing(Dir::Down),
        );
    }
    for y in -3..=3 {
        ports.insert(
            format!("face_left_{}", y + 3),
            cells[&(-4, y)].facing(Dir::Left),
        );
        ports.insert(
            format!("face_right_{}", y + 3),
            cells[&(4, y)].facing(Dir::Right),
        );
    }
    let meta = meta_of(&[
        ("kind", "fvs_vertex_gadget".into()),
        ("a", a.to_string()),
        ("b", b.to_string()),
        ("buffers", buffer_bases.len().to_string()),
        (
            "buffer_bases",
            buffer_bases
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(","),
        ),
        (
            "outlet_top_offsets",
            outlet_offsets(a, true)
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(","),
        ),
        (
            "outlet_bottom_offsets",
            outlet_offsets(b, false)
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(","),
        ),
    ]);
    (builder.finish(ports, meta), buffer_bases)
}
