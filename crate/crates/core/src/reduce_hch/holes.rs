//! Analysis of the holes left between placed gadgets, and construction of
//! a Hamiltonian path through each hole.
//!
//! A hole (finite component of the board's complement) decomposes into
//! complete footprints of absent input entities: 6-cell v-components of
//! absent vertices, 13-cell slots of faces, and single cells of absent
//! edges. The v- and h-components form a connected bipartite graph; a path
//! covering the hole is assembled along a BFS spanning tree of it, splicing
//! component base paths into each other and absorbing edge cells into the
//! v-component they are assigned to.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::hch::corner_color;
use crate::hexgrid::{are_adjacent, Cell, CellSet};

use super::geometry::{
    cell_role, gadget_cells, gadget_cycle, h_basepath, kappa, kappa1, slot_cells, CellRole,
    DOWN_E_PAIR, EDGE_DIRS, UP_E_PAIR, VERTEX_AT_DIR,
};
use super::{GadgetIndex, MalformedHole, ReduceError};

/// A way into a hole: the adjacent cell pair (inner, outer) of a present
/// vertex's gadget whose access points at the hole's slot at `face`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Access {
    /// Present input vertex providing the access.
    pub vertex: Cell,
    /// Face of the hole the access points at.
    pub face: Cell,
    /// Gadget cell on the inner triple.
    pub inner: Cell,
    /// Gadget cell on the outer triple, adjacent to `inner`.
    pub outer: Cell,
    /// Direction of `vertex` around `face`.
    pub(crate) dir: usize,
}

impl Access {
    /// Sort key realizing "leftmost access wins": the smaller exact plane
    /// position of its two cells, compared by x then y.
    fn plane_key(&self) -> crate::hexgrid::PlanePoint {
        self.inner.to_plane().min(self.outer.to_plane())
    }
}

/// Classification of one hole's cells and its component structure.
#[derive(Clone, Debug)]
pub struct HoleAnalysis {
    cells: CellSet,
    v_components: BTreeMap<Cell, CellSet>,
    h_components: BTreeMap<Cell, CellSet>,
    edge_cells: BTreeMap<Cell, (Cell, Cell)>,
    attachment: BTreeMap<Cell, Cell>,
    component_edges: BTreeSet<(Cell, Cell)>,
    accesses: Vec<Access>,
}

impl HoleAnalysis {
    /// The hole's cells.
    pub fn cells(&self) -> &CellSet {
        &self.cells
    }

    /// Absent vertices whose complete 6-cell gadget footprint lies in the
    /// hole, with those cells.
    pub fn v_components(&self) -> &BTreeMap<Cell, CellSet> {
        &self.v_components
    }

    /// Faces whose complete 13-cell slot lies in the hole, with those cells.
    pub fn h_components(&self) -> &BTreeMap<Cell, CellSet> {
        &self.h_components
    }

    /// Edge cells of absent edges, keyed by board cell, with the input edge.
    pub fn edge_cells(&self) -> &BTreeMap<Cell, (Cell, Cell)> {
        &self.edge_cells
    }

    /// Assignment of each edge cell to the absent endpoint (v-component)
    /// that absorbs it; the lexicographically smaller one when both qualify.
    pub fn attachment(&self) -> &BTreeMap<Cell, Cell> {
        &self.attachment
    }

    /// Edges (vertex, face) of the bipartite component graph.
    pub fn component_edges(&self) -> &BTreeSet<(Cell, Cell)> {
        &self.component_edges
    }

    /// All accesses of present gadgets into this hole, leftmost first.
    pub fn adjacent_accesses(&self) -> &[Access] {
        &self.accesses
    }

    /// The leftmost access; the one the reduction threads the hole through.
    pub fn canonical_access(&self) -> &Access {
        &self.accesses[0]
    }
}

/// Classify a hole of the placed board and build its component structure.
pub fn analyze_hole(hole: &CellSet, index: &GadgetIndex) -> Result<HoleAnalysis, ReduceError> {
    let mut v_components: BTreeMap<Cell, CellSet> = BTreeMap::new();
    let mut h_components: BTreeMap<Cell, CellSet> = BTreeMap::new();
    let mut edge_cells: BTreeMap<Cell, (Cell, Cell)> = BTreeMap::new();
    for z in hole.iter() {
        match cell_role(z) {
            CellRole::Vertex { vertex, .. } => {
                if index.gadget(vertex).is_some() {
                    return Err(MalformedHole::PresentEntity { cell: z }.into());
                }
                v_components.entry(vertex).or_default().insert(z);
            }
            CellRole::Edge { down, up } => {
                if index.edge_cell_map().contains_key(&z) {
                    return Err(MalformedHole::PresentEntity { cell: z }.into());
                }
                edge_cells.insert(z, (down, up));
            }
            CellRole::Face { face, .. } => {
                h_components.entry(face).or_default().insert(z);
            }
        }
    }
    for (&v, cells) in &v_components {
        if !gadget_cells(v).iter().all(|c| cells.contains(c)) {
            return Err(MalformedHole::VertexComponentIncomplete { vertex: v, cells: cells.len() }
                .into());
        }
    }
    for (&f, cells) in &h_components {
        if !slot_cells(f).iter().all(|c| cells.contains(c)) {
            return Err(
                MalformedHole::FaceComponentIncomplete { face: f, cells: cells.len() }.into()
            );
        }
    }
    if h_components.is_empty() {
        return Err(MalformedHole::NoFaceComponent.into());
    }

    let mut attachment = BTreeMap::new();
    for (&z, &(down, up)) in &edge_cells {
        let host = [down, up].into_iter().filter(|x| v_components.contains_key(x)).min();
        match host {
            Some(w) => {
                attachment.insert(z, w);
            }
            None => return Err(MalformedHole::UnattachedEdgeCell { cell: z }.into()),
        }
    }

    let mut component_edges = BTreeSet::new();
    for &f in h_components.keys() {
        for &(dq, dr) in &VERTEX_AT_DIR {
            let w = f.translate(dq, dr);
            if v_components.contains_key(&w) {
                component_edges.insert((w, f));
            }
        }
    }

    // The component graph must be connected: flood it from any face.
    let mut seen_v: BTreeSet<Cell> = BTreeSet::new();
    let mut seen_h: BTreeSet<Cell> = BTreeSet::new();
    let mut queue = VecDeque::new();
    let start = *h_components.keys().next().expect("checked nonempty");
    seen_h.insert(start);
    queue.push_back((false, start));
    while let Some((is_vertex, key)) = queue.pop_front() {
        for &(w, f) in &component_edges {
            if is_vertex && w == key && seen_h.insert(f) {
                queue.push_back((false, f));
            }
            if !is_vertex && f == key && seen_v.insert(w) {
                queue.push_back((true, w));
            }
        }
    }
    if seen_v.len() != v_components.len() || seen_h.len() != h_components.len() {
        return Err(MalformedHole::DisconnectedComponentGraph.into());
    }

    let mut accesses = Vec::new();
    for gadget in index.gadgets() {
        for i in 0..3 {
            let f = gadget.access_face(i);
            if h_components.contains_key(&f) {
                let dir = VERTEX_AT_DIR
                    .iter()
                    .position(|&(dq, dr)| f.translate(dq, dr) == gadget.vertex())
                    .expect("access vertex surrounds its face");
                let (inner, outer) = gadget.accesses()[i];
                accesses.push(Access { vertex: gadget.vertex(), face: f, inner, outer, dir });
            }
        }
    }
    if accesses.is_empty() {
        return Err(MalformedHole::NoAccess.into());
    }
    accesses.sort_by_key(Access::plane_key);

    Ok(HoleAnalysis {
        cells: hole.clone(),
        v_components,
        h_components,
        edge_cells,
        attachment,
        component_edges,
        accesses,
    })
}

/// A path through all cells of one hole, bracketed by an access.
#[derive(Clone, Debug)]
pub struct HolePath {
    access: Access,
    cells: Vec<Cell>,
}

impl HolePath {
    /// The hole's cells in traversal order. The first cell is adjacent to
    /// the access's inner cell, the last to its outer cell.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn access(&self) -> &Access {
        &self.access
    }

    /// The forced-successor pairs realizing this traversal: access inner
    /// cell to path start, each consecutive path pair, path end to access
    /// outer cell.
    pub fn links(&self) -> Vec<(Cell, Cell)> {
        let mut out = Vec::with_capacity(self.cells.len() + 1);
        out.push((self.access.inner, self.cells[0]));
        out.extend(self.cells.windows(2).map(|w| (w[0], w[1])));
        out.push((*self.cells.last().expect("nonempty"), self.access.outer));
        out
    }
}

struct PathBuilder {
    /// Faces' child vertices and vertices' child faces in the BFS tree.
    child_v: BTreeMap<Cell, Vec<Cell>>,
    child_h: BTreeMap<Cell, Vec<Cell>>,
    /// Edge cells absorbed by each vertex, with the gadget cell pair they
    /// sit next to.
    absorbed: BTreeMap<Cell, Vec<(Cell, Cell, Cell)>>,
}

impl PathBuilder {
    fn face_path(&self, f: Cell, entry_dir: usize) -> Vec<Cell> {
        let mut path = h_basepath(f, entry_dir);
        if let Some(children) = self.child_v.get(&f) {
            for &w in children {
                let d = VERTEX_AT_DIR
                    .iter()
                    .position(|&(dq, dr)| f.translate(dq, dr) == w)
                    .expect("child vertex surrounds its parent face");
                debug_assert_ne!(d, entry_dir, "entry direction is a present vertex");
                let seq = self.vertex_path(w, f);
                splice(&mut path, kappa1(f, d), kappa(f, d), seq);
            }
        }
        path
    }

    fn vertex_path(&self, w: Cell, parent_face: Cell) -> Vec<Cell> {
        let cells = gadget_cells(w);
        let ai = (0..3)
            .find(|&i| super::access_face_of(w, i) == parent_face)
            .expect("parent face touches the vertex");
        let (inner, outer) = (cells[ai], cells[3 + ai]);
        let cyc = gadget_cycle(w);
        let po = cyc.iter().position(|&c| c == outer).expect("outer on cycle");
        // Walk the 6-cycle from the outer cell the long way round to the
        // inner one (they are cycle-adjacent).
        let step = if cyc[(po + 1) % 6] == inner { 5 } else { 1 };
        let mut seq: Vec<Cell> = (0..6).map(|j| cyc[(po + step * j) % 6]).collect();
        debug_assert_eq!(seq[5], inner);
        if let Some(absorbed) = self.absorbed.get(&w) {
            for &(e, x, y) in absorbed {
                splice(&mut seq, x, y, vec![e]);
            }
        }
        if let Some(children) = self.child_h.get(&w) {
            for &g in children {
                let ci = (0..3)
                    .find(|&i| super::access_face_of(w, i) == g)
                    .expect("child face touches the vertex");
                let d = VERTEX_AT_DIR
                    .iter()
                    .position(|&(dq, dr)| g.translate(dq, dr) == w)
                    .expect("vertex surrounds its child face");
                let cseq = self.face_path(g, d);
                splice(&mut seq, cells[ci], cells[3 + ci], cseq);
            }
        }
        seq
    }
}

/// Insert `mid` between the adjacent occurrence of `first` and `second` in
/// `seq`. `mid` is oriented so that its head follows `first`; if the pair
/// occurs as (second, first), `mid` is reversed.
fn splice(seq: &mut Vec<Cell>, first: Cell, second: Cell, mut mid: Vec<Cell>) {
    let i = (0..seq.len() - 1)
        .find(|&i| {
            (seq[i] == first && seq[i + 1] == second)
                || (seq[i] == second && seq[i + 1] == first)
        })
        .expect("splice pair must be consecutive");
    if seq[i] == second {
        mid.reverse();
    }
    seq.splice(i + 1..i + 1, mid);
}

/// Build the Hamiltonian path of a hole starting next to the given access.
pub fn hole_path(a: &HoleAnalysis, alpha: &Access) -> Result<HolePath, ReduceError> {
    if !a.h_components.contains_key(&alpha.face) {
        return Err(ReduceError::NoAdjacentHComponent);
    }

    // BFS spanning tree of the component graph rooted at the access's face,
    // children in lexicographic order.
    let mut h_adj: BTreeMap<Cell, Vec<Cell>> = BTreeMap::new();
    let mut v_adj: BTreeMap<Cell, Vec<Cell>> = BTreeMap::new();
    for &(w, f) in &a.component_edges {
        h_adj.entry(f).or_default().push(w);
        v_adj.entry(w).or_default().push(f);
    }
    for children in h_adj.values_mut().chain(v_adj.values_mut()) {
        children.sort_unstable();
    }
    let mut child_v: BTreeMap<Cell, Vec<Cell>> = BTreeMap::new();
    let mut child_h: BTreeMap<Cell, Vec<Cell>> = BTreeMap::new();
    let mut seen_v: BTreeSet<Cell> = BTreeSet::new();
    let mut seen_h: BTreeSet<Cell> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen_h.insert(alpha.face);
    queue.push_back((false, alpha.face));
    while let Some((is_vertex, key)) = queue.pop_front() {
        if is_vertex {
            for &f in v_adj.get(&key).into_iter().flatten() {
                if seen_h.insert(f) {
                    child_h.entry(key).or_default().push(f);
                    queue.push_back((false, f));
                }
            }
        } else {
            for &w in h_adj.get(&key).into_iter().flatten() {
                if seen_v.insert(w) {
                    child_v.entry(key).or_default().push(w);
                    queue.push_back((true, w));
                }
            }
        }
    }
    debug_assert_eq!(seen_v.len(), a.v_components.len());
    debug_assert_eq!(seen_h.len(), a.h_components.len());

    let mut absorbed: BTreeMap<Cell, Vec<(Cell, Cell, Cell)>> = BTreeMap::new();
    for (&e, &w) in &a.attachment {
        let (down, up) = a.edge_cells[&e];
        let k = EDGE_DIRS
            .iter()
            .position(|&(dq, dr)| down.translate(dq, dr) == up)
            .expect("edge endpoints are adjacent");
        let pair = if w == down { DOWN_E_PAIR[k] } else { UP_E_PAIR[k] };
        debug_assert_eq!(corner_color(w) == 1, w == up);
        let cells = gadget_cells(w);
        absorbed.entry(w).or_default().push((e, cells[pair.0], cells[pair.1]));
    }

    let builder = PathBuilder { child_v, child_h, absorbed };
    let path = builder.face_path(alpha.face, alpha.dir);

    // The assembly is checked outright: it must cover the hole exactly once,
    // step between adjacent cells, and end next to the access cells.
    assert_eq!(path.len(), a.cells.len(), "hole path must cover the hole");
    let distinct: BTreeSet<Cell> = path.iter().copied().collect();
    assert_eq!(distinct.len(), path.len(), "hole path repeats a cell");
    assert!(path.iter().all(|c| a.cells.contains(c)), "hole path leaves the hole");
    assert!(path.windows(2).all(|w| are_adjacent(w[0], w[1])), "hole path breaks adjacency");
    assert!(are_adjacent(path[0], alpha.inner), "path start must touch the inner access cell");
    assert!(
        are_adjacent(*path.last().expect("nonempty"), alpha.outer),
        "path end must touch the outer access cell"
    );

    Ok(HolePath { access: *alpha, cells: path })
}

#[cfg(test)]
mod tests {
    use super::super::tests::faces_graph;
    use super::super::{place_gadgets, place_gadgets_unchecked, reduce_no_holes};
    use super::*;
    use crate::hch::{unit_hexagon, HoneycombGraph};
    use crate::hexgrid::ball;

    fn hexagon_analysis() -> (CellSet, GadgetIndex, HoleAnalysis) {
        let (tau, index) = place_gadgets(&unit_hexagon(Cell::new(0, 1))).unwrap();
        let holes = tau.holes();
        assert_eq!(holes.len(), 1);
        let analysis = analyze_hole(&holes[0], &index).unwrap();
        (tau, index, analysis)
    }

    #[test]
    fn hexagon_hole_is_one_slot_with_six_accesses() {
        let (_, _, a) = hexagon_analysis();
        assert_eq!(a.cells().len(), 13);
        assert!(a.v_components().is_empty());
        assert!(a.edge_cells().is_empty());
        assert_eq!(a.h_components().len(), 1);
        assert!(a.h_components().contains_key(&Cell::new(0, 1)));
        assert_eq!(a.adjacent_accesses().len(), 6);
        let alpha = a.canonical_access();
        assert_eq!(alpha.vertex, Cell::new(-1, 1));
        assert_eq!(alpha.face, Cell::new(0, 1));
        assert_eq!(alpha.inner, Cell::new(-3, 3));
        assert_eq!(alpha.outer, Cell::new(-3, 4));
    }

    #[test]
    fn hexagon_hole_path_runs_between_the_access_cells() {
        let (_, _, a) = hexagon_analysis();
        let alpha = a.canonical_access();
        let path = hole_path(&a, alpha).unwrap();
        assert_eq!(path.cells().len(), 13);
        assert_eq!(path.cells()[0], Cell::new(-2, 3));
        assert_eq!(path.cells()[12], Cell::new(-3, 5));
        assert_eq!(path.access(), alpha);
        let links = path.links();
        assert_eq!(links.len(), 14);
        assert_eq!(links[0], (alpha.inner, Cell::new(-2, 3)));
        assert_eq!(links[13], (Cell::new(-3, 5), alpha.outer));
    }

    /// Exhaustive enumeration of Hamiltonian paths on a hole's cells from a
    /// neighbor of `from` to a neighbor of `to`, independent of the
    /// template-based construction.
    fn all_hole_paths(cells: &CellSet, from: Cell, to: Cell) -> Vec<Vec<Cell>> {
        fn extend(
            cells: &CellSet,
            to: Cell,
            path: &mut Vec<Cell>,
            used: &mut BTreeSet<Cell>,
            out: &mut Vec<Vec<Cell>>,
        ) {
            let last = *path.last().unwrap();
            if path.len() == cells.len() {
                if are_adjacent(last, to) {
                    out.push(path.clone());
                }
                return;
            }
            for nb in cells.neighbors_in(last) {
                if used.insert(nb) {
                    path.push(nb);
                    extend(cells, to, path, used, out);
                    path.pop();
                    used.remove(&nb);
                }
            }
        }
        let mut out = Vec::new();
        for start in cells.iter().filter(|&c| are_adjacent(c, from)) {
            let mut path = vec![start];
            let mut used = BTreeSet::from([start]);
            extend(cells, to, &mut path, &mut used, &mut out);
        }
        out
    }

    #[test]
    fn hexagon_hole_path_matches_an_independent_enumeration() {
        let (_, _, a) = hexagon_analysis();
        for alpha in a.adjacent_accesses() {
            let path = hole_path(&a, alpha).unwrap();
            let all = all_hole_paths(a.cells(), alpha.inner, alpha.outer);
            assert!(!all.is_empty());
            assert!(all.contains(&path.cells().to_vec()));
        }
    }

    #[test]
    fn ring_hole_spans_a_vertex_component_and_three_slots() {
        let faces = [Cell::new(0, 1), Cell::new(-1, 0), Cell::new(1, -1)];
        let h = faces_graph(&faces, &[Cell::new(0, 0)]);
        assert_eq!(h.vertex_count(), 12);
        let (tau, index) = place_gadgets(&h).unwrap();
        let holes = tau.holes();
        assert_eq!(holes.len(), 1);
        assert_eq!(holes[0].len(), 48);
        let a = analyze_hole(&holes[0], &index).unwrap();
        assert_eq!(a.v_components().keys().copied().collect::<Vec<_>>(), [Cell::new(0, 0)]);
        assert_eq!(a.h_components().len(), 3);
        assert_eq!(a.edge_cells().len(), 3);
        assert!(a.attachment().values().all(|&w| w == Cell::new(0, 0)));
        assert_eq!(a.component_edges().len(), 3);
        assert_eq!(a.adjacent_accesses().len(), 15);
        let path = hole_path(&a, a.canonical_access()).unwrap();
        assert_eq!(path.links().len(), 49);

        let g = reduce_no_holes(&h).unwrap();
        assert_eq!(g.n(), 132);
        assert!(g.is_hole_free());
        assert_eq!(g.links().len(), 49);
    }

    /// Six petal rings around an absent center ring: the hole nests slots
    /// inside vertex walks inside the central slot, and six of its edge
    /// cells sit between two absent endpoints.
    #[test]
    fn flower_hole_nests_components_and_splits_shared_edge_cells() {
        let petals = [
            Cell::new(1, 2),
            Cell::new(2, 0),
            Cell::new(1, -1),
            Cell::new(-1, 0),
            Cell::new(-2, 2),
            Cell::new(-1, 3),
        ];
        let center: Vec<Cell> = Cell::new(0, 1).neighbors().into_iter().collect();
        let h = faces_graph(&petals, &center);
        assert_eq!(h.vertex_count(), 18);
        assert_eq!(h.edges().len(), 18);
        let (tau, index) = place_gadgets(&h).unwrap();
        let holes = tau.holes();
        assert_eq!(holes.len(), 1);
        assert_eq!(holes[0].len(), 139);
        let a = analyze_hole(&holes[0], &index).unwrap();
        assert_eq!(a.v_components().len(), 6);
        assert_eq!(a.h_components().len(), 7);
        assert_eq!(a.edge_cells().len(), 12);
        let mut shared = 0;
        for (e, &(down, up)) in a.edge_cells() {
            let both = a.v_components().contains_key(&down) && a.v_components().contains_key(&up);
            if both {
                shared += 1;
                assert_eq!(a.attachment()[e], down.min(up));
            }
        }
        assert_eq!(shared, 6);
        assert_eq!(a.adjacent_accesses().len(), 24);
        for alpha in a.adjacent_accesses() {
            hole_path(&a, alpha).unwrap();
        }

        let g = reduce_no_holes(&h).unwrap();
        assert_eq!(g.n(), 265);
        assert!(g.is_hole_free());
        assert_eq!(g.links().len(), 140);
    }

    #[test]
    fn tampered_holes_are_rejected() {
        let (_, index, a) = hexagon_analysis();
        let slot = a.cells();

        let mut chipped = slot.clone();
        chipped.remove(&slot.iter().next().unwrap());
        match analyze_hole(&chipped, &index) {
            Err(ReduceError::MalformedHole(MalformedHole::FaceComponentIncomplete {
                face, ..
            })) => assert_eq!(face, Cell::new(0, 1)),
            other => panic!("expected an incomplete slot, got {other:?}"),
        }

        let mut contaminated = slot.clone();
        contaminated.insert(Cell::new(-3, 3));
        match analyze_hole(&contaminated, &index) {
            Err(ReduceError::MalformedHole(MalformedHole::PresentEntity { cell })) => {
                assert_eq!(cell, Cell::new(-3, 3));
            }
            other => panic!("expected a present-entity rejection, got {other:?}"),
        }

        let (stray, _) = super::super::geometry::edge_cell(Cell::new(0, 0), Cell::new(0, -1));
        let mut lone_edge = CellSet::new();
        lone_edge.insert(stray);
        match analyze_hole(&lone_edge, &index) {
            Err(ReduceError::MalformedHole(MalformedHole::NoFaceComponent)) => {}
            other => panic!("expected a missing face component, got {other:?}"),
        }

        let mut dangling = slot.clone();
        dangling.insert(stray);
        match analyze_hole(&dangling, &index) {
            Err(ReduceError::MalformedHole(MalformedHole::UnattachedEdgeCell { cell })) => {
                assert_eq!(cell, stray);
            }
            other => panic!("expected an unattached edge cell, got {other:?}"),
        }

        let mut split = slot.clone();
        for c in slot_cells(Cell::new(3, 1)) {
            split.insert(c);
        }
        match analyze_hole(&split, &index) {
            Err(ReduceError::MalformedHole(MalformedHole::DisconnectedComponentGraph)) => {}
            other => panic!("expected a disconnected component graph, got {other:?}"),
        }
    }

    #[test]
    fn incomplete_vertex_footprints_are_rejected() {
        let faces = [Cell::new(0, 1), Cell::new(-1, 0), Cell::new(1, -1)];
        let h = faces_graph(&faces, &[Cell::new(0, 0)]);
        let (tau, index) = place_gadgets(&h).unwrap();
        let mut hole = tau.holes().remove(0);
        hole.remove(&gadget_cells(Cell::new(0, 0))[0]);
        match analyze_hole(&hole, &index) {
            Err(ReduceError::MalformedHole(MalformedHole::VertexComponentIncomplete {
                vertex,
                cells,
            })) => {
                assert_eq!(vertex, Cell::new(0, 0));
                assert_eq!(cells, 5);
            }
            other => panic!("expected an incomplete vertex footprint, got {other:?}"),
        }
    }

    #[test]
    fn unreachable_slots_have_no_access() {
        let mut pair = CellSet::new();
        pair.insert(Cell::new(0, 0));
        pair.insert(Cell::new(1, 0));
        let h = HoneycombGraph::new(pair).unwrap();
        let (_, index) = place_gadgets_unchecked(&h);
        let mut far_slot = CellSet::new();
        for c in slot_cells(Cell::new(3, 1)) {
            far_slot.insert(c);
        }
        match analyze_hole(&far_slot, &index) {
            Err(ReduceError::MalformedHole(MalformedHole::NoAccess)) => {}
            other => panic!("expected a no-access rejection, got {other:?}"),
        }
    }

    #[test]
    fn paths_require_the_access_to_touch_the_hole() {
        let (_, _, a) = hexagon_analysis();
        let fake = Access {
            vertex: Cell::new(0, 0),
            face: Cell::new(3, 1),
            inner: Cell::new(0, 0),
            outer: Cell::new(1, 0),
            dir: 0,
        };
        match hole_path(&a, &fake) {
            Err(ReduceError::NoAdjacentHComponent) => {}
            other => panic!("expected a rejected access, got {other:?}"),
        }
    }

    /// The access order is a total order on plane positions, independent of
    /// the cell coordinates that generate them.
    #[test]
    fn accesses_are_sorted_leftmost_first() {
        let (_, _, a) = hexagon_analysis();
        let keys: Vec<_> = a.adjacent_accesses().iter().map(Access::plane_key).collect();
        assert!(keys.windows(2).all(|w| w[0] <= w[1]));
        let leftmost = a
            .adjacent_accesses()
            .iter()
            .map(|acc| acc.inner.to_plane().min(acc.outer.to_plane()))
            .min()
            .unwrap();
        assert_eq!(a.canonical_access().plane_key(), leftmost);
    }

    /// `ball` sanity for the suite's fixtures: every hole lies strictly
    /// inside the placed board's bounding ball.
    #[test]
    fn holes_stay_inside_the_board_region() {
        let (tau, _, a) = hexagon_analysis();
        let region = ball(Cell::new(0, 1), 12);
        assert!(a.cells().iter().all(|c| region.contains(&c) && !tau.contains(&c)));
    }
}
