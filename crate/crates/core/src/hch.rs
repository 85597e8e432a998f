//! Honeycomb (hexagonal grid) graphs: vertices are corners of the unit
//! hexagonal tiling, edges join corners one unit apart.
//!
//! Corners are encoded on the same axial lattice as [`crate::hexgrid`]:
//! a cell (q, r) is a corner iff its color (q − r) mod 3 is 0 or 1 (color 2
//! cells are face centers). Two corners are one unit apart exactly when the
//! corresponding cells are lattice-adjacent, so honeycomb adjacency is the
//! induced hexgrid adjacency — no geometry is needed beyond the encoding.
//!
//! The module provides validity checking, a brute-force Hamiltonian-cycle
//! oracle for small instances, and exhaustive small-instance enumeration,
//! all used to cross-validate the reduction compilers.

use crate::hexgrid::{Cell, CellSet};
use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

/// Color of a lattice cell under the 3-coloring that separates the two
/// corner classes (0, 1) from face centers (2).
pub fn corner_color(c: Cell) -> u8 {
    (c.q - c.r).rem_euclid(3) as u8
}

/// A cell that is not a corner of the hexagonal tiling.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct NotACorner(pub Cell);

impl fmt::Display for NotACorner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cell ({}, {}) is a face center, not a corner", self.0.q, self.0.r)
    }
}

impl std::error::Error for NotACorner {}

/// An induced subgraph of the honeycomb lattice.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HoneycombGraph {
    vertices: CellSet,
}

impl HoneycombGraph {
    pub fn new(vertices: CellSet) -> Result<HoneycombGraph, NotACorner> {
        if let Some(bad) = vertices.iter().find(|&v| corner_color(v) == 2) {
            return Err(NotACorner(bad));
        }
        Ok(HoneycombGraph { vertices })
    }

    pub fn vertices(&self) -> &CellSet {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains(&self, v: Cell) -> bool {
        self.vertices.contains(&v)
    }

    pub fn degree(&self, v: Cell) -> usize {
        self.vertices.degree(v)
    }

    pub fn neighbors(&self, v: Cell) -> Vec<Cell> {
        self.vertices.neighbors_in(v)
    }

    /// All edges as normalized (smaller, larger) pairs.
    pub fn edges(&self) -> Vec<(Cell, Cell)> {
        let mut out = Vec::new();
        for v in self.vertices.iter() {
            for w in self.vertices.neighbors_in(v) {
                if v < w {
                    out.push((v, w));
                }
            }
        }
        out
    }

    /// Translate by a color-preserving lattice vector.
    pub fn translated(&self, dq: i64, dr: i64) -> HoneycombGraph {
        assert_eq!(
            (dq - dr).rem_euclid(3),
            0,
            "only color-preserving translations keep corners on corners"
        );
        HoneycombGraph {
            vertices: self.vertices.iter().map(|v| v.translate(dq, dr)).collect(),
        }
    }

    /// Rotate 60° counterclockwise about a face center (a color-2 cell).
    /// This swaps the two corner colors and preserves adjacency.
    pub fn rotated60(&self, center: Cell) -> HoneycombGraph {
        assert_eq!(corner_color(center), 2, "rotation center must be a face center");
        let vertices: CellSet = self
            .vertices
            .iter()
            .map(|v| {
                let (dq, dr) = (v.q - center.q, v.r - center.r);
                Cell::new(center.q - dr, center.r + dq + dr)
            })
            .collect();
        debug_assert!(vertices.iter().all(|v| corner_color(v) != 2));
        HoneycombGraph { vertices }
    }
}

/// The six corners of the face centered at a color-2 cell, a 6-cycle.
pub fn unit_hexagon(center: Cell) -> HoneycombGraph {
    assert_eq!(corner_color(center), 2, "a hexagon is centered on a face center");
    HoneycombGraph { vertices: center.neighbors().iter().copied().collect() }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HchDefect {
    /// A vertex of degree below two; such a graph has no Hamiltonian cycle
    /// and is not a legal reduction input.
    Degree1(Cell),
    Disconnected,
}

impl fmt::Display for HchDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HchDefect::Degree1(c) => {
                write!(f, "vertex ({}, {}) has degree below two", c.q, c.r)
            }
            HchDefect::Disconnected => write!(f, "the graph is not connected"),
        }
    }
}

/// Check that the graph is connected with all degrees in {2, 3}.
/// Degrees above three are impossible on the corner lattice.
pub fn validate_hch(h: &HoneycombGraph) -> Result<(), Vec<HchDefect>> {
    let mut defects = Vec::new();
    for v in h.vertices.iter() {
        let d = h.degree(v);
        debug_assert!(d <= 3);
        if d < 2 {
            defects.push(HchDefect::Degree1(v));
        }
    }
    if !h.vertices.is_connected() {
        defects.push(HchDefect::Disconnected);
    }
    if defects.is_empty() {
        Ok(())
    } else {
        Err(defects)
    }
}

/// Default vertex-count cap of the brute-force oracle.
pub const ORACLE_BUDGET: usize = 24;

/// The instance exceeds the oracle's vertex budget.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TooLarge {
    pub vertices: usize,
    pub budget: usize,
}

impl fmt::Display for TooLarge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} vertices exceed the oracle budget of {}", self.vertices, self.budget)
    }
}

impl std::error::Error for TooLarge {}

/// Exhaustive Hamiltonian-cycle search with the default budget.
pub fn hamiltonian_cycle_oracle(h: &HoneycombGraph) -> Result<Option<Vec<Cell>>, TooLarge> {
    hamiltonian_cycle_oracle_with_budget(h, ORACLE_BUDGET)
}

/// Exhaustive Hamiltonian-cycle search; `budget` caps the vertex count
/// (at most 64). Any returned cycle is verified edge-by-edge.
pub fn hamiltonian_cycle_oracle_with_budget(
    h: &HoneycombGraph,
    budget: usize,
) -> Result<Option<Vec<Cell>>, TooLarge> {
    assert!(budget <= 64, "the oracle uses 64-bit vertex masks");
    let n = h.vertex_count();
    if n > budget {
        return Err(TooLarge { vertices: n, budget });
    }
    if n == 0 {
        return Ok(None);
    }
    // a cycle alternates corner colors, so the classes must balance
    let color0 = h.vertices.iter().filter(|&v| corner_color(v) == 0).count();
    if color0 * 2 != n {
        return Ok(None);
    }
    let cells: Vec<Cell> = h.vertices.iter().collect();
    let index: HashMap<Cell, usize> =
        cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let adj: Vec<u64> = cells
        .iter()
        .map(|c| {
            h.neighbors(*c).iter().map(|nb| 1u64 << index[nb]).fold(0, |a, b| a | b)
        })
        .collect();
    if adj.iter().any(|&m| m.count_ones() < 2) {
        return Ok(None);
    }

    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut path = vec![0usize];
    let found = hc_dfs(&adj, full, &mut path, 1u64);
    if !found {
        return Ok(None);
    }
    let cycle: Vec<Cell> = path.iter().map(|&i| cells[i]).collect();
    assert!(is_hamiltonian_cycle(h, &cycle), "oracle produced an invalid cycle");
    Ok(Some(cycle))
}

fn hc_dfs(adj: &[u64], full: u64, path: &mut Vec<usize>, visited: u64) -> bool {
    let head = *path.last().unwrap();
    if visited == full {
        return adj[head] & 1 != 0; // close back to vertex 0
    }
    // all unvisited vertices must lie in one region touching head and start
    let unvisited = full & !visited;
    let seed = 1u64 << unvisited.trailing_zeros();
    let mut comp = seed;
    loop {
        let mut grown = comp;
        let mut rest = comp;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            grown |= adj[i] & unvisited;
        }
        if grown == comp {
            break;
        }
        comp = grown;
    }
    if comp != unvisited || adj[head] & unvisited == 0 || adj[0] & unvisited == 0 {
        return false;
    }

    let mut cands = adj[head] & unvisited;
    while cands != 0 {
        let next = cands.trailing_zeros() as usize;
        cands &= cands - 1;
        path.push(next);
        if hc_dfs(adj, full, path, visited | (1u64 << next)) {
            return true;
        }
        path.pop();
    }
    false
}

/// Does `cycle` visit every vertex exactly once along edges, closing up?
pub fn is_hamiltonian_cycle(h: &HoneycombGraph, cycle: &[Cell]) -> bool {
    if cycle.len() != h.vertex_count() || cycle.is_empty() {
        return false;
    }
    let distinct: BTreeSet<Cell> = cycle.iter().copied().collect();
    if distinct.len() != cycle.len() || !cycle.iter().all(|&v| h.contains(v)) {
        return false;
    }
    (0..cycle.len()).all(|i| {
        let a = cycle[i];
        let b = cycle[(i + 1) % cycle.len()];
        h.neighbors(a).contains(&b)
    })
}

/// All connected honeycomb graphs with degrees in {2, 3} and at most
/// `max_v` vertices, one representative per translation class.
///
/// Enumeration grows connected vertex sets from a fixed anchor with the
/// standard untried-frontier scheme, so each anchored set is visited exactly
/// once and no global deduplication store is needed. The anchor is pinned as
/// the lexicographically smallest color-0 vertex; every graph that passes
/// the degree filter has an edge, hence a color-0 vertex, so each
/// translation class is emitted exactly once, in canonical position.
pub fn enumerate_small(max_v: usize) -> Vec<HoneycombGraph> {
    assert!(max_v <= 18, "enumeration is exponential; keep instances small");
    let mut out = Vec::new();
    if max_v < 2 {
        return out;
    }
    let origin = Cell::new(0, 0);
    let mut en = Enumerator {
        max_v,
        set: vec![origin],
        deg: HashMap::from([(origin, 0)]),
        low_degree: 1, // the lone anchor has degree 0
        seen: HashSet::from([origin]),
        out: &mut out,
    };
    let untried: Vec<Cell> = origin
        .neighbors()
        .iter()
        .copied()
        .filter(|&c| en.admissible(c))
        .collect();
    en.seen.extend(untried.iter().copied());
    en.grow(untried);
    out
}

struct Enumerator<'a> {
    max_v: usize,
    set: Vec<Cell>,
    /// Induced degree of every cell in `set`.
    deg: HashMap<Cell, u32>,
    /// Cells in `set` with degree below two.
    low_degree: usize,
    /// Cells ever offered as candidates on the current recursion path.
    seen: HashSet<Cell>,
    out: &'a mut Vec<HoneycombGraph>,
}

impl Enumerator<'_> {
    /// Corner cells only, and no color-0 cell below the anchor — this pins
    /// the anchor as the lex-least color-0 vertex of every emitted set.
    fn admissible(&self, c: Cell) -> bool {
        match corner_color(c) {
            0 => c > Cell::new(0, 0),
            1 => true,
            _ => false,
        }
    }

    fn push(&mut self, c: Cell) {
        let mut d = 0;
        for nb in c.neighbors() {
            if let Some(nd) = self.deg.get_mut(&nb) {
                if *nd == 1 {
                    self.low_degree -= 1;
                }
                *nd += 1;
                d += 1;
            }
        }
        if d < 2 {
            self.low_degree += 1;
        }
        self.deg.insert(c, d);
        self.set.push(c);
    }

    fn pop(&mut self) {
        let c = self.set.pop().unwrap();
        let d = self.deg.remove(&c).unwrap();
        if d < 2 {
            self.low_degree -= 1;
        }
        for nb in c.neighbors() {
            if let Some(nd) = self.deg.get_mut(&nb) {
                *nd -= 1;
                if *nd == 1 {
                    self.low_degree += 1;
                }
            }
        }
    }

    fn grow(&mut self, mut untried: Vec<Cell>) {
        if self.low_degree == 0 && self.set.len() >= 2 {
            let vertices: CellSet = self.set.iter().copied().collect();
            self.out.push(HoneycombGraph { vertices });
        }
        if self.set.len() == self.max_v {
            return;
        }
        while !untried.is_empty() {
            let c = untried.remove(0);
            self.push(c);
            let added: Vec<Cell> = c
                .neighbors()
                .iter()
                .copied()
                .filter(|&nb| self.admissible(nb) && !self.seen.contains(&nb))
                .collect();
            self.seen.extend(added.iter().copied());
            let child_untried: Vec<Cell> =
                untried.iter().copied().chain(added.iter().copied()).collect();
            self.grow(child_untried);
            for nb in &added {
                self.seen.remove(nb);
            }
            self.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph_of(coords: &[(i64, i64)]) -> HoneycombGraph {
        HoneycombGraph::new(coords.iter().map(|&(q, r)| Cell::new(q, r)).collect()).unwrap()
    }

    #[test]
    fn colors_partition_the_lattice() {
        assert_eq!(corner_color(Cell::new(0, 0)), 0);
        assert_eq!(corner_color(Cell::new(1, 0)), 1);
        assert_eq!(corner_color(Cell::new(0, 1)), 2);
        // every edge of the lattice joins colors {0,1}, {1,2} or {2,0}
        for c in [Cell::new(0, 0), Cell::new(5, -3), Cell::new(-2, 7)] {
            for nb in c.neighbors() {
                assert_ne!(corner_color(c), corner_color(nb));
            }
        }
    }

    #[test]
    fn face_centers_are_rejected_as_vertices() {
        let bad: CellSet = [Cell::new(0, 0), Cell::new(0, 1)].into_iter().collect();
        assert_eq!(HoneycombGraph::new(bad), Err(NotACorner(Cell::new(0, 1))));
    }

    #[test]
    fn hexagon_is_valid_and_has_a_cycle() {
        let h = unit_hexagon(Cell::new(0, 1));
        assert_eq!(h.vertex_count(), 6);
        assert_eq!(validate_hch(&h), Ok(()));
        let cycle = hamiltonian_cycle_oracle(&h).unwrap().expect("a 6-cycle");
        assert!(is_hamiltonian_cycle(&h, &cycle));
    }

    #[test]
    fn two_vertex_path_has_degree_defects() {
        let h = graph_of(&[(0, 0), (1, 0)]);
        let defects = validate_hch(&h).unwrap_err();
        assert!(defects.contains(&HchDefect::Degree1(Cell::new(0, 0))));
        assert!(defects.contains(&HchDefect::Degree1(Cell::new(1, 0))));
    }

    #[test]
    fn disjoint_hexagons_are_disconnected() {
        let mut vertices: CellSet = unit_hexagon(Cell::new(0, 1)).vertices().clone();
        for v in unit_hexagon(Cell::new(9, 1)).vertices().iter() {
            vertices.insert(v);
        }
        let h = HoneycombGraph::new(vertices).unwrap();
        assert_eq!(validate_hch(&h), Err(vec![HchDefect::Disconnected]));
    }

    #[test]
    fn oracle_rejects_oversized_instances() {
        let h = unit_hexagon(Cell::new(0, 1));
        assert_eq!(
            hamiltonian_cycle_oracle_with_budget(&h, 5),
            Err(TooLarge { vertices: 6, budget: 5 })
        );
    }

    #[test]
    fn oracle_is_invariant_under_translation_and_rotation() {
        let graphs = enumerate_small(10);
        assert!(!graphs.is_empty());
        for h in &graphs {
            let base = hamiltonian_cycle_oracle(h).unwrap().is_some();
            let moved = h.translated(3, 0);
            assert_eq!(hamiltonian_cycle_oracle(&moved).unwrap().is_some(), base);
            let turned = h.rotated60(Cell::new(0, 1));
            assert_eq!(hamiltonian_cycle_oracle(&turned).unwrap().is_some(), base);
        }
    }

    #[test]
    fn six_vertices_admit_exactly_the_hexagon() {
        let graphs = enumerate_small(6);
        assert_eq!(graphs.len(), 1);
        let h = &graphs[0];
        assert_eq!(h.vertex_count(), 6);
        assert_eq!(validate_hch(h), Ok(()));
        assert!(h.vertices.iter().all(|v| h.degree(v) == 2));
    }

    #[test]
    fn enumerated_graphs_are_valid_and_duplicate_free() {
        let graphs = enumerate_small(9);
        let mut seen = HashSet::new();
        for h in &graphs {
            assert_eq!(validate_hch(h), Ok(()));
            let key: Vec<Cell> = h.vertices.iter().collect();
            assert!(seen.insert(key), "duplicate canonical form");
        }
    }

    /// The smallest honeycomb graphs without a Hamiltonian cycle have 12
    /// vertices; this one is a theta: two degree-3 vertices joined by three
    /// disjoint paths, each with interior vertices. A cycle would have to
    /// use exactly two of the paths and miss the third's interior.
    #[test]
    fn twelve_vertex_theta_has_no_cycle() {
        let h = graph_of(&[
            (0, -1),
            (0, 0),
            (0, 2),
            (0, 3),
            (1, -2),
            (1, 0),
            (1, 1),
            (1, 3),
            (2, -2),
            (2, -1),
            (2, 1),
            (2, 2),
        ]);
        assert_eq!(validate_hch(&h), Ok(()));
        let deg3 = h.vertices().iter().filter(|&v| h.degree(v) == 3).count();
        assert_eq!(deg3, 2);
        // the corner colors balance, so only exhaustive search decides this
        let color0 = h.vertices().iter().filter(|&v| corner_color(v) == 0).count();
        assert_eq!(color0 * 2, h.vertex_count());
        assert_eq!(hamiltonian_cycle_oracle(&h), Ok(None));
    }

    /// Frozen census of the enumeration: sizes up to 12 admit exactly these
    /// graph counts, and exactly three 12-vertex graphs lack a cycle (the
    /// thetas). Sizes 7–9 and 11 admit none at all.
    #[test]
    fn enumeration_census_up_to_twelve_is_stable() {
        let graphs = enumerate_small(12);
        let mut total = std::collections::BTreeMap::new();
        let mut acyclic = std::collections::BTreeMap::new();
        for h in &graphs {
            let n = h.vertex_count();
            *total.entry(n).or_insert(0usize) += 1;
            if hamiltonian_cycle_oracle(h).unwrap().is_none() {
                *acyclic.entry(n).or_insert(0usize) += 1;
            }
        }
        assert_eq!(total, std::collections::BTreeMap::from([(6, 1), (10, 3), (12, 5)]));
        assert_eq!(acyclic, std::collections::BTreeMap::from([(12, 3)]));
    }

    /// Re-enumerate by the obvious grow-and-deduplicate breadth-first method
    /// and compare: catches both missed and double-counted classes.
    #[test]
    fn enumeration_matches_naive_growth() {
        let by_redelmeier: BTreeSet<Vec<Cell>> = enumerate_small(10)
            .iter()
            .map(|h| h.vertices.iter().collect())
            .collect();

        fn canonical(set: &BTreeSet<Cell>) -> Vec<Cell> {
            let anchor = set
                .iter()
                .copied()
                .filter(|&c| corner_color(c) == 0)
                .min()
                .or_else(|| set.iter().copied().min())
                .unwrap();
            // color-preserving shift moving the anchor to its color's base
            let base = if corner_color(anchor) == 0 { Cell::new(0, 0) } else { Cell::new(1, 0) };
            let (dq, dr) = (base.q - anchor.q, base.r - anchor.r);
            let mut v: Vec<Cell> = set.iter().map(|c| c.translate(dq, dr)).collect();
            v.sort();
            v
        }

        let mut level: HashSet<Vec<Cell>> = HashSet::new();
        level.insert(canonical(&BTreeSet::from([Cell::new(0, 0)])));
        level.insert(canonical(&BTreeSet::from([Cell::new(1, 0)])));
        let mut good: BTreeSet<Vec<Cell>> = BTreeSet::new();
        for _size in 2..=10usize {
            let mut next: HashSet<Vec<Cell>> = HashSet::new();
            for rep in &level {
                let set: BTreeSet<Cell> = rep.iter().copied().collect();
                for &c in &set {
                    for nb in c.neighbors() {
                        if corner_color(nb) == 2 || set.contains(&nb) {
                            continue;
                        }
                        let mut bigger = set.clone();
                        bigger.insert(nb);
                        next.insert(canonical(&bigger));
                    }
                }
            }
            for rep in &next {
                let ok = rep.iter().all(|&v| {
                    let d = v.neighbors().iter().filter(|nb| rep.contains(nb)).count();
                    d == 2 || d == 3
                });
                if ok {
                    good.insert(rep.clone());
                }
            }
            level = next;
        }
        assert_eq!(by_redelmeier, good);
    }
}
