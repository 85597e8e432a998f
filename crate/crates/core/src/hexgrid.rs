//! Axial coordinates, adjacency, connectivity, and exact plane geometry for
//! the pointy-top hexagonal cell grid.
//!
//! Cells are indexed by axial coordinates `(q, r)`. The six neighbors of a
//! cell are obtained from the fixed deltas in [`NEIGHBOR_DELTAS`], listed
//! counterclockwise starting from east. Plane geometry is exact: cell centers
//! live in ℚ[√3] × ℚ[√3] (see [`QSqrt3`]), so adjacency and alignment facts
//! are checked by equality, never by floating-point tolerance.

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Axial neighbor offsets, counterclockwise starting from east.
///
/// With the plane embedding of [`Cell::to_plane`] (x right, y up) the six
/// directions are E, NE, NW, W, SW, SE in that order.
pub const NEIGHBOR_DELTAS: [(i64, i64); 6] =
    [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];

/// A cell of the infinite pointy-top hexagonal grid, in axial coordinates.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Cell {
    pub q: i64,
    pub r: i64,
}

impl Cell {
    pub const fn new(q: i64, r: i64) -> Cell {
        Cell { q, r }
    }

    /// The six neighbors, in the cyclic order of [`NEIGHBOR_DELTAS`].
    pub fn neighbors(self) -> [Cell; 6] {
        let mut out = [self; 6];
        for (i, (dq, dr)) in NEIGHBOR_DELTAS.iter().enumerate() {
            out[i] = Cell::new(self.q + dq, self.r + dr);
        }
        out
    }

    pub fn translate(self, dq: i64, dr: i64) -> Cell {
        Cell::new(self.q + dq, self.r + dr)
    }

    /// Grid distance: the minimum number of neighbor steps between two cells.
    pub fn hex_distance(self, other: Cell) -> i64 {
        let dq = self.q - other.q;
        let dr = self.r - other.r;
        (dq.abs() + dr.abs() + (dq + dr).abs()) / 2
    }

    /// Exact plane coordinates of the cell center for unit-side hexagons:
    /// `x = √3·(q + r/2)`, `y = (3/2)·r`.
    pub fn to_plane(self) -> PlanePoint {
        let half = Rational64::new(1, 2);
        PlanePoint {
            x: QSqrt3::new(
                Rational64::zero(),
                Rational64::from_integer(self.q) + half * Rational64::from_integer(self.r),
            ),
            y: QSqrt3::new(Rational64::new(3 * self.r, 2), Rational64::zero()),
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.q, self.r)
    }
}

/// True iff the two cells share an edge.
pub fn are_adjacent(a: Cell, b: Cell) -> bool {
    let (dq, dr) = (b.q - a.q, b.r - a.r);
    NEIGHBOR_DELTAS.contains(&(dq, dr))
}

/// An exact number of the form `a + b·√3` with rational `a`, `b`.
///
/// Since √3 is irrational the representation is unique, so derived equality
/// is numeric equality. Ordering is implemented numerically (not
/// lexicographically on the pair).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct QSqrt3 {
    pub a: Rational64,
    pub b: Rational64,
}

impl QSqrt3 {
    pub fn new(a: Rational64, b: Rational64) -> QSqrt3 {
        QSqrt3 { a, b }
    }

    pub fn from_int(n: i64) -> QSqrt3 {
        QSqrt3::new(Rational64::from_integer(n), Rational64::zero())
    }

    /// The value √3.
    pub fn sqrt3() -> QSqrt3 {
        QSqrt3::new(Rational64::zero(), Rational64::from_integer(1))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Numeric sign: -1, 0, or 1.
    pub fn signum(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let (a, b) = (self.a, self.b);
        if !a.is_negative() && !b.is_negative() {
            return 1;
        }
        if !a.is_positive() && !b.is_positive() {
            return -1;
        }
        // Mixed signs: a + b√3 > 0 ⟺ a² > 3b² when a > 0, ⟺ a² < 3b² when b > 0.
        let a2 = a * a;
        let b2 = b * b * Rational64::from_integer(3);
        if a.is_positive() {
            if a2 > b2 {
                1
            } else if a2 < b2 {
                -1
            } else {
                0
            }
        } else if b2 > a2 {
            1
        } else if b2 < a2 {
            -1
        } else {
            0
        }
    }

    pub fn to_f64(&self) -> f64 {
        let f = |r: Rational64| *r.numer() as f64 / *r.denom() as f64;
        f(self.a) + f(self.b) * 3f64.sqrt()
    }
}

impl Add for QSqrt3 {
    type Output = QSqrt3;
    fn add(self, rhs: QSqrt3) -> QSqrt3 {
        QSqrt3::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for QSqrt3 {
    type Output = QSqrt3;
    fn sub(self, rhs: QSqrt3) -> QSqrt3 {
        QSqrt3::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Mul for QSqrt3 {
    type Output = QSqrt3;
    fn mul(self, rhs: QSqrt3) -> QSqrt3 {
        // (a + b√3)(c + d√3) = (ac + 3bd) + (ad + bc)√3
        QSqrt3::new(
            self.a * rhs.a + Rational64::from_integer(3) * self.b * rhs.b,
            self.a * rhs.b + self.b * rhs.a,
        )
    }
}

impl Neg for QSqrt3 {
    type Output = QSqrt3;
    fn neg(self) -> QSqrt3 {
        QSqrt3::new(-self.a, -self.b)
    }
}

impl PartialOrd for QSqrt3 {
    fn partial_cmp(&self, other: &QSqrt3) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QSqrt3 {
    fn cmp(&self, other: &QSqrt3) -> Ordering {
        match (*self - *other).signum() {
            1 => Ordering::Greater,
            -1 => Ordering::Less,
            _ => Ordering::Equal,
        }
    }
}

/// An exact point of the plane, both coordinates in ℚ[√3].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PlanePoint {
    pub x: QSqrt3,
    pub y: QSqrt3,
}

impl PlanePoint {
    pub fn new(x: QSqrt3, y: QSqrt3) -> PlanePoint {
        PlanePoint { x, y }
    }

    /// Squared Euclidean distance, exact.
    pub fn dist_sq(&self, other: &PlanePoint) -> QSqrt3 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }
}

/// Corner offsets of a unit-side pointy hexagon relative to its center,
/// counterclockwise starting from the east-northeast corner.
pub fn corner_offsets() -> [PlanePoint; 6] {
    let h = Rational64::new(1, 2);
    let z = Rational64::zero();
    let one = Rational64::from_integer(1);
    let mk = |bx: Rational64, ay: Rational64| PlanePoint::new(QSqrt3::new(z, bx), QSqrt3::new(ay, z));
    [
        mk(h, h),
        mk(z, one),
        mk(-h, h),
        mk(-h, -h),
        mk(z, -one),
        mk(h, -h),
    ]
}

/// A finite set of cells, with the connectivity and hole structure of the
/// induced subgraph of the grid.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CellSet {
    cells: BTreeSet<Cell>,
}

impl CellSet {
    pub fn new() -> CellSet {
        CellSet::default()
    }

    pub fn insert(&mut self, c: Cell) -> bool {
        self.cells.insert(c)
    }

    pub fn remove(&mut self, c: &Cell) -> bool {
        self.cells.remove(c)
    }

    pub fn contains(&self, c: &Cell) -> bool {
        self.cells.contains(c)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Iterate in lexicographic `(q, r)` order.
    pub fn iter(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    pub fn first(&self) -> Option<Cell> {
        self.cells.iter().next().copied()
    }

    pub fn union(&self, other: &CellSet) -> CellSet {
        let mut out = self.clone();
        out.cells.extend(other.cells.iter().copied());
        out
    }

    /// Neighbors of `c` that belong to the set, in delta order.
    pub fn neighbors_in(&self, c: Cell) -> Vec<Cell> {
        c.neighbors().into_iter().filter(|n| self.contains(n)).collect()
    }

    /// Degree of `c` in the induced subgraph.
    pub fn degree(&self, c: Cell) -> usize {
        c.neighbors().iter().filter(|n| self.contains(n)).count()
    }

    /// Inclusive bounding box `(q_min, q_max, r_min, r_max)`; None when empty.
    pub fn bounding_box(&self) -> Option<(i64, i64, i64, i64)> {
        let mut it = self.cells.iter();
        let first = it.next()?;
        let (mut q0, mut q1, mut r0, mut r1) = (first.q, first.q, first.r, first.r);
        for c in it {
            q0 = q0.min(c.q);
            q1 = q1.max(c.q);
            r0 = r0.min(c.r);
            r1 = r1.max(c.r);
        }
        Some((q0, q1, r0, r1))
    }

    /// True iff the induced subgraph has exactly one connected component.
    /// The empty set counts as connected.
    pub fn is_connected(&self) -> bool {
        let Some(start) = self.first() else { return true };
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start);
        queue.push_back(start);
        while let Some(c) = queue.pop_front() {
            for n in c.neighbors() {
                if self.contains(&n) && seen.insert(n) {
                    queue.push_back(n);
                }
            }
        }
        seen.len() == self.len()
    }

    /// Connected components of the set, each as a `CellSet`, ordered by their
    /// smallest cell.
    pub fn components(&self) -> Vec<CellSet> {
        let mut unseen: BTreeSet<Cell> = self.cells.clone();
        let mut out = Vec::new();
        while let Some(&start) = unseen.iter().next() {
            let mut comp = CellSet::new();
            let mut queue = VecDeque::new();
            unseen.remove(&start);
            comp.insert(start);
            queue.push_back(start);
            while let Some(c) = queue.pop_front() {
                for n in c.neighbors() {
                    if unseen.remove(&n) {
                        comp.insert(n);
                        queue.push_back(n);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Every finite connected component of the grid complement of the set.
    ///
    /// Scans the bounding box expanded by one ring. The expanded ring lies
    /// wholly in the complement and is connected (consecutive perimeter cells
    /// of an axial rectangle are neighbors), and any complement path escaping
    /// the strict bounding box must step onto the ring, so complement cells
    /// in the box that the ring flood fill does not reach are exactly the
    /// cells of finite components.
    pub fn holes(&self) -> Vec<CellSet> {
        let Some((q0, q1, r0, r1)) = self.bounding_box() else { return Vec::new() };
        let (q0, q1, r0, r1) = (q0 - 1, q1 + 1, r0 - 1, r1 + 1);
        let in_box = |c: &Cell| c.q >= q0 && c.q <= q1 && c.r >= r0 && c.r <= r1;
        let start = Cell::new(q0, r0);
        let mut outside = BTreeSet::new();
        let mut queue = VecDeque::new();
        outside.insert(start);
        queue.push_back(start);
        while let Some(c) = queue.pop_front() {
            for n in c.neighbors() {
                if in_box(&n) && !self.contains(&n) && outside.insert(n) {
                    queue.push_back(n);
                }
            }
        }
        let mut enclosed = CellSet::new();
        for q in q0..=q1 {
            for r in r0..=r1 {
                let c = Cell::new(q, r);
                if !self.contains(&c) && !outside.contains(&c) {
                    enclosed.insert(c);
                }
            }
        }
        enclosed.components()
    }
}

impl FromIterator<Cell> for CellSet {
    fn from_iter<T: IntoIterator<Item = Cell>>(iter: T) -> CellSet {
        CellSet { cells: iter.into_iter().collect() }
    }
}

impl Extend<Cell> for CellSet {
    fn extend<T: IntoIterator<Item = Cell>>(&mut self, iter: T) {
        self.cells.extend(iter)
    }
}

impl<'a> IntoIterator for &'a CellSet {
    type Item = Cell;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, Cell>>;
    fn into_iter(self) -> Self::IntoIter {
        self.cells.iter().copied()
    }
}

/// All cells at grid distance ≤ `radius` from `center` (a hexagon of cells;
/// `1 + 3·radius·(radius+1)` of them).
pub fn ball(center: Cell, radius: i64) -> CellSet {
    let mut out = CellSet::new();
    for dq in -radius..=radius {
        for dr in (-radius).max(-dq - radius)..=radius.min(-dq + radius) {
            out.insert(center.translate(dq, dr));
        }
    }
    out
}
