//! Frozen geometry of the hole-free reduction: where vertex gadgets, edge
//! cells and face slots sit on the output board.
//!
//! The input honeycomb lattice maps into the output cell plane by an exact
//! similarity (scale² = 28/3 per unit edge, a small rotation); its integer
//! form is frozen here as the two translations `T1`, `T2` — the images of
//! the honeycomb translation basis (1,1), (2,−1) — plus per-entity offset
//! templates. A unit cell of the translation lattice holds 28 output cells:
//! two 6-cell vertex gadgets, three edge cells, and one 13-cell face slot,
//! and these offsets tile the plane exactly. The derivation is re-checked
//! from first principles (ℚ[√3] arithmetic) in this module's tests.

use crate::hch::corner_color;
use crate::hexgrid::Cell;

/// Output image of the honeycomb basis vector (1, 1).
pub(crate) const T1: (i64, i64) = (2, 4);
/// Output image of the honeycomb basis vector (2, −1).
pub(crate) const T2: (i64, i64) = (6, -2);

/// Cells of the gadget of a color-0 ("down") vertex, relative to its base:
/// inner triple, then outer triple. Access i pairs inner[i] with outer[i].
pub(crate) const DOWN_CELLS: [(i64, i64); 6] =
    [(0, 0), (0, 1), (-1, 1), (1, 0), (-1, 2), (-1, 0)];
/// Cells of the gadget of a color-1 ("up") vertex at the same lattice base.
pub(crate) const UP_CELLS: [(i64, i64); 6] =
    [(2, 1), (3, 1), (2, 2), (3, 0), (3, 2), (1, 2)];

/// Input-lattice offset from a vertex to the face its access i points at.
pub(crate) const DOWN_ACCESS_FACE: [(i64, i64); 3] = [(1, -1), (0, 1), (-1, 0)];
pub(crate) const UP_ACCESS_FACE: [(i64, i64); 3] = [(0, -1), (1, 0), (-1, 1)];

/// Honeycomb edge directions out of a color-0 vertex.
pub(crate) const EDGE_DIRS: [(i64, i64); 3] = [(1, 0), (0, -1), (-1, 1)];
/// Edge-cell offsets (relative to the down endpoint's base), per direction.
pub(crate) const E_OFFSETS: [(i64, i64); 3] = [(1, 1), (0, -1), (-2, 2)];

/// The six gadget cells form a 6-cycle; these are index orders into
/// DOWN_CELLS / UP_CELLS walking it once.
pub(crate) const DOWN_CYCLE: [usize; 6] = [1, 3, 0, 5, 2, 4];
pub(crate) const UP_CYCLE: [usize; 6] = [0, 3, 1, 4, 2, 5];

/// Cycle edge (as a cell-index pair) that an edge cell is adjacent to,
/// per edge direction, on the down and up endpoint gadgets respectively.
pub(crate) const DOWN_E_PAIR: [(usize, usize); 3] = [(1, 3), (0, 5), (2, 4)];
pub(crate) const UP_E_PAIR: [(usize, usize); 3] = [(0, 5), (2, 4), (1, 3)];

/// Face slot template, for the face at input cell (0, 1): center cell,
/// the six ring cells κ₁ by direction, and the six corner cells κ.
pub(crate) const H_CENTER: (i64, i64) = (-1, 4);
pub(crate) const KAPPA: [(i64, i64); 6] =
    [(0, 2), (1, 3), (0, 5), (-2, 6), (-3, 5), (-2, 3)];
pub(crate) const KAPPA1: [(i64, i64); 6] =
    [(-1, 3), (0, 3), (0, 4), (-1, 5), (-2, 5), (-2, 4)];

/// Input vertex around a face, by direction (even = down, odd = up). The
/// access of that vertex pointing back at the face has index 1, 2, 2, 0,
/// 0, 1 respectively; the direction-table test re-derives this pairing.
pub(crate) const VERTEX_AT_DIR: [(i64, i64); 6] =
    [(0, -1), (1, -1), (1, 0), (0, 1), (-1, 1), (-1, 0)];

/// Base output cell of the lattice point a·T1 + b·T2.
pub(crate) fn lattice_point(a: i64, b: i64) -> Cell {
    Cell::new(T1.0 * a + T2.0 * b, T1.1 * a + T2.1 * b)
}

/// Inverse of [`lattice_point`], when the cell is on the lattice.
pub(crate) fn lattice_div(x: i64, y: i64) -> Option<(i64, i64)> {
    let na = x + 3 * y;
    let nb = 2 * x - y;
    if na % 14 == 0 && nb % 14 == 0 {
        Some((na / 14, nb / 14))
    } else {
        None
    }
}

/// Lattice coordinates of a honeycomb vertex, and whether it is "up"
/// (color 1). The vertex is `a·(1,1) + b·(2,−1)` plus (1, 0) when up.
pub(crate) fn decompose_vertex(v: Cell) -> (i64, i64, bool) {
    let color = corner_color(v);
    debug_assert_ne!(color, 2);
    let base = if color == 1 { Cell::new(v.q - 1, v.r) } else { v };
    let b = (base.q - base.r) / 3;
    let a = (base.q + 2 * base.r) / 3;
    debug_assert_eq!((a + 2 * b, a - b), (base.q, base.r));
    (a, b, color == 1)
}

/// The honeycomb vertex at lattice cell (a, b), down or up.
pub(crate) fn input_vertex(a: i64, b: i64, up: bool) -> Cell {
    Cell::new(a + 2 * b + i64::from(up), a - b)
}

/// Lattice coordinates of a face center (a color-2 input cell).
pub(crate) fn face_lattice(f: Cell) -> (i64, i64) {
    debug_assert_eq!(corner_color(f), 2);
    let (q, r) = (f.q, f.r - 1);
    let (a, b) = ((q + 2 * r) / 3, (q - r) / 3);
    debug_assert_eq!((a + 2 * b, a - b + 1), (f.q, f.r));
    (a, b)
}

/// The face center at lattice cell (a, b).
pub(crate) fn face_at(a: i64, b: i64) -> Cell {
    Cell::new(a + 2 * b, a - b + 1)
}

fn offset_from(base: Cell, off: (i64, i64)) -> Cell {
    base.translate(off.0, off.1)
}

/// The six output cells of a vertex's gadget: inner triple, outer triple.
pub(crate) fn gadget_cells(v: Cell) -> [Cell; 6] {
    let (a, b, up) = decompose_vertex(v);
    let base = lattice_point(a, b);
    let tmpl = if up { &UP_CELLS } else { &DOWN_CELLS };
    tmpl.map(|off| offset_from(base, off))
}

/// The 6-cycle walk of a vertex's gadget cells.
pub(crate) fn gadget_cycle(v: Cell) -> [Cell; 6] {
    let cells = gadget_cells(v);
    let order = if corner_color(v) == 1 { &UP_CYCLE } else { &DOWN_CYCLE };
    order.map(|i| cells[i])
}

/// The output edge cell of honeycomb edge (u, w), with the direction index
/// as seen from the down endpoint.
pub(crate) fn edge_cell(u: Cell, w: Cell) -> (Cell, usize) {
    let (down, upv) = if corner_color(u) == 0 { (u, w) } else { (w, u) };
    debug_assert_eq!(corner_color(down), 0);
    debug_assert_eq!(corner_color(upv), 1);
    let d = (upv.q - down.q, upv.r - down.r);
    let k = EDGE_DIRS
        .iter()
        .position(|&e| e == d)
        .expect("endpoints are not honeycomb-adjacent");
    let (a, b, _) = decompose_vertex(down);
    (offset_from(lattice_point(a, b), E_OFFSETS[k]), k)
}

/// All 13 output cells of a face's slot: center, ring, corners.
pub(crate) fn slot_cells(f: Cell) -> [Cell; 13] {
    let (a, b) = face_lattice(f);
    let base = lattice_point(a, b);
    let mut out = [Cell::new(0, 0); 13];
    out[0] = offset_from(base, H_CENTER);
    for d in 0..6 {
        out[1 + d] = offset_from(base, KAPPA1[d]);
        out[7 + d] = offset_from(base, KAPPA[d]);
    }
    out
}

pub(crate) fn slot_center(f: Cell) -> Cell {
    let (a, b) = face_lattice(f);
    offset_from(lattice_point(a, b), H_CENTER)
}

pub(crate) fn kappa(f: Cell, d: usize) -> Cell {
    let (a, b) = face_lattice(f);
    offset_from(lattice_point(a, b), KAPPA[d % 6])
}

pub(crate) fn kappa1(f: Cell, d: usize) -> Cell {
    let (a, b) = face_lattice(f);
    offset_from(lattice_point(a, b), KAPPA1[d % 6])
}

/// The slot path of face `f` entered from direction `d`: starts on κ_d
/// (next to the inner access cell at d), ends on κ_{d+5} (next to the outer
/// one), and covers all 13 slot cells.
pub(crate) fn h_basepath(f: Cell, d: usize) -> Vec<Cell> {
    let mut path = Vec::with_capacity(13);
    path.push(kappa(f, d));
    path.push(kappa1(f, d));
    path.push(slot_center(f));
    for i in 1..6 {
        path.push(kappa1(f, d + i));
        path.push(kappa(f, d + i));
    }
    path
}

/// What role an output cell plays, derived from the 28-offset tiling.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum CellRole {
    /// k-th cell of the gadget of this input vertex.
    Vertex { vertex: Cell, slot: usize },
    /// Edge cell of the input edge (down, up).
    Edge { down: Cell, up: Cell },
    /// k-th cell of the slot of this input face (0 = center, 1–6 = ring,
    /// 7–12 = corners).
    Face { face: Cell, slot: usize },
}

pub(crate) fn cell_role(z: Cell) -> CellRole {
    for (k, off) in DOWN_CELLS.iter().enumerate() {
        if let Some((a, b)) = lattice_div(z.q - off.0, z.r - off.1) {
            return CellRole::Vertex { vertex: input_vertex(a, b, false), slot: k };
        }
    }
    for (k, off) in UP_CELLS.iter().enumerate() {
        if let Some((a, b)) = lattice_div(z.q - off.0, z.r - off.1) {
            return CellRole::Vertex { vertex: input_vertex(a, b, true), slot: k };
        }
    }
    for (k, off) in E_OFFSETS.iter().enumerate() {
        if let Some((a, b)) = lattice_div(z.q - off.0, z.r - off.1) {
            let down = input_vertex(a, b, false);
            let up = Cell::new(down.q + EDGE_DIRS[k].0, down.r + EDGE_DIRS[k].1);
            return CellRole::Edge { down, up };
        }
    }
    if let Some((a, b)) = lattice_div(z.q - H_CENTER.0, z.r - H_CENTER.1) {
        return CellRole::Face { face: face_at(a, b), slot: 0 };
    }
    for d in 0..6 {
        if let Some((a, b)) = lattice_div(z.q - KAPPA1[d].0, z.r - KAPPA1[d].1) {
            return CellRole::Face { face: face_at(a, b), slot: 1 + d };
        }
        if let Some((a, b)) = lattice_div(z.q - KAPPA[d].0, z.r - KAPPA[d].1) {
            return CellRole::Face { face: face_at(a, b), slot: 7 + d };
        }
    }
    unreachable!("the 28 offsets tile the output plane")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hexgrid::{are_adjacent, ball, QSqrt3};
    use num_rational::Rational64;

    fn plane(c: Cell) -> (QSqrt3, QSqrt3) {
        let p = c.to_plane();
        (p.x, p.y)
    }

    /// The frozen translations are the image of the honeycomb basis under
    /// the exact similarity x ↦ M·x with M = [[3, −√3/3], [√3/3, 3]]:
    /// scale² = 28/3, rotation arctan(1/(3√3)).
    #[test]
    fn lattice_translations_match_the_exact_similarity() {
        let third_sqrt3 = QSqrt3::new(Rational64::new(0, 1), Rational64::new(1, 3));
        let m11 = QSqrt3::from_int(3);
        let m12 = -third_sqrt3;
        let m21 = third_sqrt3;
        let m22 = QSqrt3::from_int(3);
        for (basis, image) in [((1i64, 1i64), T1), ((2, -1), T2)] {
            let (x, y) = plane(Cell::new(basis.0, basis.1));
            let (ix, iy) = plane(Cell::new(image.0, image.1));
            assert_eq!(m11 * x + m12 * y, ix);
            assert_eq!(m21 * x + m22 * y, iy);
        }
    }

    /// Adjacent gadgets sit at squared distance 28 (in plane units where a
    /// lattice step is √3): the centroid displacement per honeycomb edge.
    #[test]
    fn gadget_centroid_displacement_squared_is_twenty_eight() {
        let down = Cell::new(0, 0);
        let third = QSqrt3::new(Rational64::new(1, 3), Rational64::new(0, 1));
        let centroid = |cells: &[Cell]| {
            let mut x = QSqrt3::from_int(0);
            let mut y = QSqrt3::from_int(0);
            for &c in cells {
                let (cx, cy) = plane(c);
                x = x + cx;
                y = y + cy;
            }
            (x * third, y * third)
        };
        for &dir in &EDGE_DIRS {
            let up = Cell::new(down.q + dir.0, down.r + dir.1);
            let dc = centroid(&gadget_cells(down)[..3]);
            let uc = centroid(&gadget_cells(up)[..3]);
            let (dx, dy) = (uc.0 - dc.0, uc.1 - dc.1);
            assert_eq!(dx * dx + dy * dy, QSqrt3::from_int(28));
        }
    }

    /// Every output cell decomposes into exactly one of the 28 offsets plus
    /// a lattice translation.
    #[test]
    fn the_twenty_eight_offsets_tile_the_plane() {
        let mut offsets: Vec<(i64, i64)> = Vec::new();
        offsets.extend(DOWN_CELLS);
        offsets.extend(UP_CELLS);
        offsets.extend(E_OFFSETS);
        offsets.push(H_CENTER);
        offsets.extend(KAPPA1);
        offsets.extend(KAPPA);
        assert_eq!(offsets.len(), 28);
        for z in ball(Cell::new(0, 0), 12).iter() {
            let matches = offsets
                .iter()
                .filter(|o| lattice_div(z.q - o.0, z.r - o.1).is_some())
                .count();
            assert_eq!(matches, 1, "cell {z:?} matched {matches} offsets");
        }
    }

    #[test]
    fn gadget_cycles_and_accesses_are_consistent() {
        for v in [Cell::new(0, 0), Cell::new(1, 0), Cell::new(4, -2), Cell::new(-2, 1)] {
            let cells = gadget_cells(v);
            let cycle = gadget_cycle(v);
            for i in 0..6 {
                assert!(are_adjacent(cycle[i], cycle[(i + 1) % 6]), "gadget cycle break");
            }
            // access pairs are cycle edges; edge-cell pairs are the others
            for i in 0..3 {
                assert!(are_adjacent(cells[i], cells[3 + i]), "access pair not adjacent");
            }
            // each outer cell is adjacent to exactly two inner cells
            for outer in &cells[3..] {
                let n = cells[..3].iter().filter(|i| are_adjacent(**i, *outer)).count();
                assert_eq!(n, 2);
            }
        }
    }

    #[test]
    fn edge_cells_touch_two_cells_of_each_endpoint_gadget() {
        let down = Cell::new(0, 0);
        for (k, &dir) in EDGE_DIRS.iter().enumerate() {
            let up = Cell::new(down.q + dir.0, down.r + dir.1);
            let (e, kk) = edge_cell(down, up);
            assert_eq!(k, kk);
            let dcells = gadget_cells(down);
            let ucells = gadget_cells(up);
            let dtouch: Vec<usize> =
                (0..6).filter(|&i| are_adjacent(e, dcells[i])).collect();
            let utouch: Vec<usize> =
                (0..6).filter(|&i| are_adjacent(e, ucells[i])).collect();
            let (d0, d1) = DOWN_E_PAIR[k];
            let (u0, u1) = UP_E_PAIR[k];
            assert_eq!(dtouch, {
                let mut v = vec![d0, d1];
                v.sort_unstable();
                v
            });
            assert_eq!(utouch, {
                let mut v = vec![u0, u1];
                v.sort_unstable();
                v
            });
            // and the pairs are consecutive on the gadget cycles
            let dcycle = gadget_cycle(down);
            let pos = |cyc: &[Cell; 6], c: Cell| cyc.iter().position(|&x| x == c).unwrap();
            let (p0, p1) = (pos(&dcycle, dcells[d0]), pos(&dcycle, dcells[d1]));
            assert_eq!((p0 as i64 - p1 as i64).rem_euclid(6).min((p1 as i64 - p0 as i64).rem_euclid(6)), 1);
            // edge cell is adjacent to nothing else of either gadget
            assert_eq!(dtouch.len() + utouch.len(), 4);
        }
    }

    #[test]
    fn slot_paths_cover_and_connect_for_every_direction() {
        // a face center well inside positive coordinates and one negative
        for f in [Cell::new(0, 1), Cell::new(2, 0), Cell::new(-1, 0)] {
            let slot: Vec<Cell> = slot_cells(f).to_vec();
            assert_eq!(slot.len(), 13);
            for d in 0..6 {
                let path = h_basepath(f, d);
                assert_eq!(path.len(), 13);
                let mut sorted = path.clone();
                sorted.sort();
                let mut expect = slot.clone();
                expect.sort();
                assert_eq!(sorted, expect, "path must cover the slot");
                for w in path.windows(2) {
                    assert!(are_adjacent(w[0], w[1]), "slot path break at {w:?}");
                }
                assert_eq!(path[0], kappa(f, d));
                assert_eq!(path[12], kappa(f, d + 5));
            }
        }
    }

    /// Around every face: the vertex at direction d exists at the right
    /// orientation, its designated access points back at the face, the κ
    /// cell touches the access's inner cell and κ_{d−1} its outer cell, and
    /// the ring cell κ₁ touches the outer cell.
    #[test]
    fn direction_table_is_coherent() {
        for f in [Cell::new(0, 1), Cell::new(3, 1), Cell::new(-4, 3)] {
            for d in 0..6 {
                let v = Cell::new(f.q + VERTEX_AT_DIR[d].0, f.r + VERTEX_AT_DIR[d].1);
                let up = corner_color(v) == 1;
                assert_eq!(up, d % 2 == 1, "orientation alternates around the face");
                let table = if up { &UP_ACCESS_FACE } else { &DOWN_ACCESS_FACE };
                let pointing: Vec<usize> = (0..3)
                    .filter(|&i| Cell::new(v.q + table[i].0, v.r + table[i].1) == f)
                    .collect();
                assert_eq!(pointing.len(), 1, "exactly one access points at the face");
                let ai = pointing[0];
                let cells = gadget_cells(v);
                let (inner, outer) = (cells[ai], cells[3 + ai]);
                assert!(are_adjacent(kappa(f, d), inner), "κ_d touches the inner cell");
                assert!(are_adjacent(kappa(f, d + 5), outer), "κ_(d−1) touches the outer cell");
                assert!(are_adjacent(kappa1(f, d), outer), "κ₁_d touches the outer cell");
            }
        }
    }

    #[test]
    fn cell_roles_invert_the_placement() {
        let down = Cell::new(3, 0);
        for (k, c) in gadget_cells(down).into_iter().enumerate() {
            assert_eq!(cell_role(c), CellRole::Vertex { vertex: down, slot: k });
        }
        let up = Cell::new(1, 0);
        for (k, c) in gadget_cells(up).into_iter().enumerate() {
            assert_eq!(cell_role(c), CellRole::Vertex { vertex: up, slot: k });
        }
        let (e, _) = edge_cell(Cell::new(0, 0), Cell::new(1, 0));
        assert_eq!(
            cell_role(e),
            CellRole::Edge { down: Cell::new(0, 0), up: Cell::new(1, 0) }
        );
        let f = Cell::new(0, 1);
        for (k, c) in slot_cells(f).into_iter().enumerate() {
            assert_eq!(cell_role(c), CellRole::Face { face: f, slot: k });
        }
    }
}
