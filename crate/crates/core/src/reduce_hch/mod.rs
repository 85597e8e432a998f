//! Reductions from honeycomb Hamiltonian-cycle instances to games.
//!
//! Two constructions are provided. [`reduce_simple`] keeps the vertex set
//! itself as the board, so the board usually has holes. [`reduce_no_holes`]
//! replaces every vertex by a 6-cell triangular gadget, every edge by one
//! connecting cell, and then fills each hole of that placement, threading a
//! forced path through it; the result is a hole-free game that is solvable
//! iff the input has a Hamiltonian cycle. [`prime_game`] is the compressed
//! variant of the latter: holes stay unfilled and each collapses to a
//! single forced link across its canonical access.

mod geometry;
mod holes;

pub use holes::{analyze_hole, hole_path, Access, HoleAnalysis, HolePath};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::game::Game;
use crate::hch::{validate_hch, HchDefect, HoneycombGraph};
use crate::hexgrid::{Cell, CellSet};

use geometry::{
    edge_cell, gadget_cells, DOWN_ACCESS_FACE, UP_ACCESS_FACE,
};

/// Why a reduction could not be carried out.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ReduceError {
    /// The input failed honeycomb validation.
    InvalidHch(Vec<HchDefect>),
    /// A hole of the placement does not decompose as expected.
    MalformedHole(MalformedHole),
    /// The access handed to the path builder does not point at a slot of
    /// the hole.
    NoAdjacentHComponent,
    /// No degree-2 vertex offers an access free of forced links, so the
    /// endpoints 1 and n cannot be placed.
    NoFreeAccess,
}

/// Ways a hole can fail to decompose into complete entity footprints.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MalformedHole {
    /// A hole cell belongs to an entity that is present on the board.
    PresentEntity { cell: Cell },
    /// An absent vertex's footprint reaches the hole only partially.
    VertexComponentIncomplete { vertex: Cell, cells: usize },
    /// A face slot reaches the hole only partially.
    FaceComponentIncomplete { face: Cell, cells: usize },
    /// The hole contains no face slot at all.
    NoFaceComponent,
    /// An edge cell in the hole has no absent endpoint to attach to.
    UnattachedEdgeCell { cell: Cell },
    /// The v- and h-components of the hole do not form one connected graph.
    DisconnectedComponentGraph,
    /// No present gadget access points into the hole.
    NoAccess,
}

impl From<MalformedHole> for ReduceError {
    fn from(m: MalformedHole) -> ReduceError {
        ReduceError::MalformedHole(m)
    }
}

impl fmt::Display for MalformedHole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MalformedHole::PresentEntity { cell } => {
                write!(f, "hole cell {cell} belongs to a present entity")
            }
            MalformedHole::VertexComponentIncomplete { vertex, cells } => {
                write!(f, "vertex component at {vertex} has {cells} of 6 cells")
            }
            MalformedHole::FaceComponentIncomplete { face, cells } => {
                write!(f, "face component at {face} has {cells} of 13 cells")
            }
            MalformedHole::NoFaceComponent => write!(f, "hole contains no face slot"),
            MalformedHole::UnattachedEdgeCell { cell } => {
                write!(f, "edge cell {cell} has no absent endpoint")
            }
            MalformedHole::DisconnectedComponentGraph => {
                write!(f, "hole components do not form one connected graph")
            }
            MalformedHole::NoAccess => write!(f, "no gadget access points into the hole"),
        }
    }
}

impl fmt::Display for ReduceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReduceError::InvalidHch(defects) => {
                write!(f, "input is not a valid honeycomb graph ({} defects)", defects.len())
            }
            ReduceError::MalformedHole(m) => write!(f, "malformed hole: {m}"),
            ReduceError::NoAdjacentHComponent => {
                write!(f, "access does not point at a slot of the hole")
            }
            ReduceError::NoFreeAccess => {
                write!(f, "no link-free access on a degree-2 vertex")
            }
        }
    }
}

impl std::error::Error for ReduceError {}

/// The face that access `i` of vertex `v` points at.
pub(crate) fn access_face_of(v: Cell, i: usize) -> Cell {
    let off = if crate::hch::corner_color(v) == 1 {
        UP_ACCESS_FACE[i]
    } else {
        DOWN_ACCESS_FACE[i]
    };
    v.translate(off.0, off.1)
}

/// The 6-cell triangular footprint standing in for one input vertex.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct VertexGadget {
    vertex: Cell,
    cells: [Cell; 6],
}

impl VertexGadget {
    pub(crate) fn new(vertex: Cell) -> VertexGadget {
        VertexGadget { vertex, cells: gadget_cells(vertex) }
    }

    /// The input vertex this gadget stands for.
    pub fn vertex(&self) -> Cell {
        self.vertex
    }

    /// Board cells: inner triple first, then the outer triple. Outer cell i
    /// is adjacent to inner cells i and (i+2) mod 3.
    pub fn cells(&self) -> &[Cell; 6] {
        &self.cells
    }

    /// The three accesses as (inner, outer) adjacent cell pairs.
    pub fn accesses(&self) -> [(Cell, Cell); 3] {
        [
            (self.cells[0], self.cells[3]),
            (self.cells[1], self.cells[4]),
            (self.cells[2], self.cells[5]),
        ]
    }

    /// The face access `i` points at.
    pub fn access_face(&self, i: usize) -> Cell {
        access_face_of(self.vertex, i)
    }

    /// The access pointing at `face`, if the vertex touches it.
    pub fn access_toward(&self, face: Cell) -> Option<(Cell, Cell)> {
        (0..3).find(|&i| self.access_face(i) == face).map(|i| self.accesses()[i])
    }
}

/// Lookup structure over a placement: which board cell realizes what.
#[derive(Clone, Debug, Default)]
pub struct GadgetIndex {
    gadgets: BTreeMap<Cell, VertexGadget>,
    edge_cells: BTreeMap<Cell, (Cell, Cell)>,
}

impl GadgetIndex {
    /// The gadget of an input vertex, if that vertex is present.
    pub fn gadget(&self, v: Cell) -> Option<&VertexGadget> {
        self.gadgets.get(&v)
    }

    /// All gadgets, in input vertex order.
    pub fn gadgets(&self) -> impl Iterator<Item = &VertexGadget> {
        self.gadgets.values()
    }

    /// Map from each placed edge cell to its input edge (down, up).
    pub fn edge_cell_map(&self) -> &BTreeMap<Cell, (Cell, Cell)> {
        &self.edge_cells
    }
}

/// Identity reduction: the board is the vertex set itself, with 1 and n
/// placed on a degree-2 vertex and one of its neighbors.
pub fn reduce_simple(h: &HoneycombGraph) -> Result<Game, ReduceError> {
    validate_hch(h).map_err(ReduceError::InvalidHch)?;
    let n = h.vertex_count();
    let t = h
        .vertices()
        .iter()
        .find(|&v| h.degree(v) == 2)
        .expect("a valid honeycomb graph has a degree-2 vertex");
    let t2 = h.neighbors(t).into_iter().min().expect("degree-2 vertex has neighbors");
    let mut clues = BTreeMap::new();
    clues.insert(t, 1);
    clues.insert(t2, n);
    Ok(Game::new(h.vertices().clone(), clues, &[]).expect("vertex set forms a valid game"))
}

/// Place the vertex gadgets and edge cells of a validated input.
pub fn place_gadgets(h: &HoneycombGraph) -> Result<(CellSet, GadgetIndex), ReduceError> {
    validate_hch(h).map_err(ReduceError::InvalidHch)?;
    Ok(place_gadgets_unchecked(h))
}

pub(crate) fn place_gadgets_unchecked(h: &HoneycombGraph) -> (CellSet, GadgetIndex) {
    let mut tau = CellSet::new();
    let mut index = GadgetIndex::default();
    for v in h.vertices().iter() {
        let gadget = VertexGadget::new(v);
        for &c in gadget.cells() {
            let fresh = tau.insert(c);
            debug_assert!(fresh, "gadget footprints never overlap");
        }
        index.gadgets.insert(v, gadget);
    }
    for (u, w) in h.edges() {
        let (e, _) = edge_cell(u, w);
        let fresh = tau.insert(e);
        debug_assert!(fresh, "edge cells never overlap gadgets");
        index.edge_cells.insert(e, (u.min(w), u.max(w)));
    }
    (tau, index)
}

/// Pick the first access of a degree-2 vertex whose both cells avoid
/// `used`, scanning vertices lexicographically.
fn free_access(h: &HoneycombGraph, index: &GadgetIndex, used: &BTreeSet<Cell>) -> Option<(Cell, Cell)> {
    for v in h.vertices().iter() {
        if h.degree(v) != 2 {
            continue;
        }
        let gadget = index.gadget(v).expect("present vertex has a gadget");
        for (t, t2) in gadget.accesses() {
            if !used.contains(&t) && !used.contains(&t2) {
                return Some((t, t2));
            }
        }
    }
    None
}

/// Full reduction to a hole-free game: gadgets plus filled holes, each hole
/// traversed by a forced path starting and ending at its canonical access.
pub fn reduce_no_holes(h: &HoneycombGraph) -> Result<Game, ReduceError> {
    validate_hch(h).map_err(ReduceError::InvalidHch)?;
    let (tau_gadgets, index) = place_gadgets_unchecked(h);
    let mut tau = tau_gadgets.clone();
    let mut links: Vec<(Cell, Cell)> = Vec::new();
    for hole in tau_gadgets.holes() {
        let analysis = analyze_hole(&hole, &index)?;
        let alpha = *analysis.canonical_access();
        let path = hole_path(&analysis, &alpha)?;
        links.extend(path.links());
        for c in hole.iter() {
            tau.insert(c);
        }
    }
    let n = tau.len();
    let used: BTreeSet<Cell> = links.iter().flat_map(|&(a, b)| [a, b]).collect();
    let (t, t2) = free_access(h, &index, &used).ok_or(ReduceError::NoFreeAccess)?;
    let mut clues = BTreeMap::new();
    clues.insert(t, 1);
    clues.insert(t2, n);
    Ok(Game::new(tau, clues, &links).expect("placement yields a valid game"))
}

/// Compressed reduction: the board is the gadget placement alone, and each
/// hole is represented by a single link across its canonical access.
pub fn prime_game(h: &HoneycombGraph) -> Result<Game, ReduceError> {
    validate_hch(h).map_err(ReduceError::InvalidHch)?;
    let (tau, index) = place_gadgets_unchecked(h);
    let mut links: Vec<(Cell, Cell)> = Vec::new();
    for hole in tau.holes() {
        let analysis = analyze_hole(&hole, &index)?;
        let alpha = analysis.canonical_access();
        links.push((alpha.inner, alpha.outer));
    }
    let n = tau.len();
    let used: BTreeSet<Cell> = links.iter().flat_map(|&(a, b)| [a, b]).collect();
    let (t, t2) = free_access(h, &index, &used).ok_or(ReduceError::NoFreeAccess)?;
    let mut clues = BTreeMap::new();
    clues.insert(t, 1);
    clues.insert(t2, n);
    Ok(Game::new(tau, clues, &links).expect("placement yields a valid game"))
}
