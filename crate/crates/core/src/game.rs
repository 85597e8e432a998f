//! The Rikudo game triple (τ, m, p): construction with validation, solution
//! verification, hole-freeness, and the α-padding transformation.
//!
//! A game is a connected finite cell set τ, an injective partial clue map
//! m: τ → [n] with n = |τ|, and a set p of enforced adjacencies ("links",
//! drawn as diamonds in the newspaper puzzles). A solution is a bijective
//! numbering s: τ → [n] such that consecutive numbers sit on adjacent cells,
//! s extends m, and every link joins value-consecutive cells.

use crate::hexgrid::{are_adjacent, Cell, CellSet};
use num_rational::Rational64;
use num_traits::Signed;
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;

/// Normalize an unordered cell pair to (min, max) in lexicographic order.
pub fn norm_pair(a: Cell, b: Cell) -> (Cell, Cell) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// A validated Rikudo game.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Game {
    cells: CellSet,
    clues: BTreeMap<Cell, usize>,
    links: BTreeSet<(Cell, Cell)>,
}

/// Reasons a candidate (τ, m, p) triple is not a game.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GameError {
    EmptyBoard,
    Disconnected,
    ClueOutsideTau(Cell),
    ClueOutOfRange(Cell, usize),
    ClueNotInjective(usize),
    LinkOutsideTau(Cell),
    LinkNotAdjacent(Cell, Cell),
    DuplicateLink(Cell, Cell),
}

impl fmt::Display for GameError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GameError::EmptyBoard => write!(f, "game has no cells"),
            GameError::Disconnected => write!(f, "cell set is not connected"),
            GameError::ClueOutsideTau(c) => write!(f, "clue on cell {c} outside the board"),
            GameError::ClueOutOfRange(c, v) => write!(f, "clue {v} on cell {c} outside 1..=n"),
            GameError::ClueNotInjective(v) => write!(f, "clue value {v} used twice"),
            GameError::LinkOutsideTau(c) => write!(f, "link endpoint {c} outside the board"),
            GameError::LinkNotAdjacent(a, b) => write!(f, "link {a}-{b} joins non-adjacent cells"),
            GameError::DuplicateLink(a, b) => write!(f, "link {a}-{b} given twice"),
        }
    }
}

impl std::error::Error for GameError {}

impl Game {
    /// Validate and build a game from its parts.
    pub fn new(
        cells: CellSet,
        clues: BTreeMap<Cell, usize>,
        links: &[(Cell, Cell)],
    ) -> Result<Game, GameError> {
        if cells.is_empty() {
            return Err(GameError::EmptyBoard);
        }
        if !cells.is_connected() {
            return Err(GameError::Disconnected);
        }
        let n = cells.len();
        let mut seen_values = BTreeSet::new();
        for (&c, &v) in &clues {
            if !cells.contains(&c) {
                return Err(GameError::ClueOutsideTau(c));
            }
            if v < 1 || v > n {
                return Err(GameError::ClueOutOfRange(c, v));
            }
            if !seen_values.insert(v) {
                return Err(GameError::ClueNotInjective(v));
            }
        }
        let mut norm_links = BTreeSet::new();
        for &(a, b) in links {
            if !cells.contains(&a) {
                return Err(GameError::LinkOutsideTau(a));
            }
            if !cells.contains(&b) {
                return Err(GameError::LinkOutsideTau(b));
            }
            if !are_adjacent(a, b) {
                return Err(GameError::LinkNotAdjacent(a, b));
            }
            if !norm_links.insert(norm_pair(a, b)) {
                return Err(GameError::DuplicateLink(a, b));
            }
        }
        Ok(Game { cells, clues, links: norm_links })
    }

    /// Number of cells; the largest number to place.
    pub fn n(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &CellSet {
        &self.cells
    }

    pub fn clues(&self) -> &BTreeMap<Cell, usize> {
        &self.clues
    }

    pub fn links(&self) -> &BTreeSet<(Cell, Cell)> {
        &self.links
    }

    pub fn clue_at(&self, c: Cell) -> Option<usize> {
        self.clues.get(&c).copied()
    }

    /// Links incident to `c`, as the cells at the other end.
    pub fn link_partners(&self, c: Cell) -> Vec<Cell> {
        self.links
            .iter()
            .filter_map(|&(a, b)| {
                if a == c {
                    Some(b)
                } else if b == c {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    /// True iff the complement of τ has no finite component.
    pub fn is_hole_free(&self) -> bool {
        self.cells.holes().is_empty()
    }
}

/// Free-function spelling of [`Game::new`].
pub fn new_game(
    cells: CellSet,
    clues: BTreeMap<Cell, usize>,
    links: &[(Cell, Cell)],
) -> Result<Game, GameError> {
    Game::new(cells, clues, links)
}

/// A candidate numbering of a game's cells.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Solution {
    numbering: BTreeMap<Cell, usize>,
}

impl Solution {
    pub fn new(numbering: BTreeMap<Cell, usize>) -> Solution {
        Solution { numbering }
    }

    /// Build the numbering 1..=len along a cell path.
    pub fn from_path(path: &[Cell]) -> Solution {
        Solution {
            numbering: path.iter().enumerate().map(|(i, &c)| (c, i + 1)).collect(),
        }
    }

    pub fn numbering(&self) -> &BTreeMap<Cell, usize> {
        &self.numbering
    }

    pub fn number_at(&self, c: Cell) -> Option<usize> {
        self.numbering.get(&c).copied()
    }

    pub fn len(&self) -> usize {
        self.numbering.len()
    }

    pub fn is_empty(&self) -> bool {
        self.numbering.is_empty()
    }

    /// Cells ordered by their number. Meaningful once the numbering is
    /// bijective.
    pub fn path(&self) -> Vec<Cell> {
        let mut pairs: Vec<(usize, Cell)> =
            self.numbering.iter().map(|(&c, &v)| (v, c)).collect();
        pairs.sort();
        pairs.into_iter().map(|(_, c)| c).collect()
    }
}

/// Why a numbering fails to be a bijection τ → [n].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BijectionDefect {
    /// A board cell carries no number.
    MissingCell(Cell),
    /// A numbered cell lies outside the board.
    ExtraCell(Cell),
    /// A number outside 1..=n.
    OutOfRange { cell: Cell, number: usize },
    /// The same number on two cells.
    Duplicate { number: usize, first: Cell, second: Cell },
}

/// A verifiable defect of a candidate solution.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Violation {
    NotBijective(BijectionDefect),
    /// Cells numbered x and x+1 are not adjacent.
    BrokenPath { number: usize, from: Cell, to: Cell },
    /// A clued cell holds a different number.
    ClueMismatch { cell: Cell, expected: usize, got: usize },
    /// A linked pair does not hold consecutive numbers.
    LinkUnused { a: Cell, b: Cell },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotBijective(d) => match d {
                BijectionDefect::MissingCell(c) => write!(f, "cell {c} has no number"),
                BijectionDefect::ExtraCell(c) => write!(f, "numbered cell {c} is off the board"),
                BijectionDefect::OutOfRange { cell, number } => {
                    write!(f, "number {number} on {cell} is outside 1..=n")
                }
                BijectionDefect::Duplicate { number, first, second } => {
                    write!(f, "number {number} appears on both {first} and {second}")
                }
            },
            Violation::BrokenPath { number, from, to } => write!(
                f,
                "cells {from} and {to} hold consecutive numbers {number},{} but are not adjacent",
                number + 1
            ),
            Violation::ClueMismatch { cell, expected, got } => {
                write!(f, "cell {cell} is clued {expected} but holds {got}")
            }
            Violation::LinkUnused { a, b } => {
                write!(f, "linked cells {a}-{b} do not hold consecutive numbers")
            }
        }
    }
}

/// Check the three solution conditions; `Ok(())` or every violation found.
pub fn verify_solution(g: &Game, s: &Solution) -> Result<(), Vec<Violation>> {
    let n = g.n();
    let mut violations = Vec::new();

    let mut by_number: BTreeMap<usize, Cell> = BTreeMap::new();
    for (&c, &v) in s.numbering() {
        if !g.cells().contains(&c) {
            violations.push(Violation::NotBijective(BijectionDefect::ExtraCell(c)));
            continue;
        }
        if v < 1 || v > n {
            violations.push(Violation::NotBijective(BijectionDefect::OutOfRange {
                cell: c,
                number: v,
            }));
            continue;
        }
        if let Some(&prev) = by_number.get(&v) {
            violations.push(Violation::NotBijective(BijectionDefect::Duplicate {
                number: v,
                first: prev,
                second: c,
            }));
        } else {
            by_number.insert(v, c);
        }
    }
    for c in g.cells().iter() {
        if s.number_at(c).is_none() {
            violations.push(Violation::NotBijective(BijectionDefect::MissingCell(c)));
        }
    }

    if by_number.len() == n {
        for x in 1..n {
            let from = by_number[&x];
            let to = by_number[&(x + 1)];
            if !are_adjacent(from, to) {
                violations.push(Violation::BrokenPath { number: x, from, to });
            }
        }
    }

    for (&c, &expected) in g.clues() {
        if let Some(got) = s.number_at(c) {
            if got != expected {
                violations.push(Violation::ClueMismatch { cell: c, expected, got });
            }
        }
    }

    for &(a, b) in g.links() {
        match (s.number_at(a), s.number_at(b)) {
            (Some(va), Some(vb)) => {
                let diff = va.abs_diff(vb);
                if diff != 1 {
                    violations.push(Violation::LinkUnused { a, b });
                }
            }
            _ => violations.push(Violation::LinkUnused { a, b }),
        }
    }

    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

/// Why α-padding cannot be applied.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PadError {
    AlphaOutOfRange,
    /// No cell carries the clue n′ = |τ|.
    EndClueAbsent,
    /// The n′ cell has no neighbor in the infinite complement component.
    NoAttachmentSite,
}

impl fmt::Display for PadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PadError::AlphaOutOfRange => write!(f, "alpha must satisfy 0 < alpha <= 1"),
            PadError::EndClueAbsent => write!(f, "no cell is clued with n"),
            PadError::NoAttachmentSite => {
                write!(f, "the n-clued cell has no free neighbor outside all holes")
            }
        }
    }
}

impl std::error::Error for PadError {}

/// Append a fully-clued snake of `⌈n′/α⌉ − n′` cells to the cell clued
/// n′ = |τ|, numbering it n′+1, …, n.
///
/// The snake is a shortest path in the infinite complement component starting
/// at the attachment site (the smallest free neighbor of the n′ cell), so the
/// result is a valid game, and solvability is preserved in both directions:
/// a solution of `g` extends along the snake, and any solution of the padded
/// game restricts to one of `g` because the snake numbers are all clued.
pub fn pad_alpha(g: &Game, alpha: Rational64) -> Result<Game, PadError> {
    if !alpha.is_positive() || alpha > Rational64::from_integer(1) {
        return Err(PadError::AlphaOutOfRange);
    }
    let n_prime = g.n();
    let n = (Rational64::from_integer(n_prime as i64) / alpha).ceil().to_integer() as usize;
    let k = n - n_prime;
    if k == 0 {
        return Ok(g.clone());
    }

    let end_cell = g
        .clues()
        .iter()
        .find(|&(_, &v)| v == n_prime)
        .map(|(&c, _)| c)
        .ok_or(PadError::EndClueAbsent)?;

    let mut blocked: BTreeSet<Cell> = g.cells().iter().collect();
    for hole in g.cells().holes() {
        blocked.extend(hole.iter());
    }
    let start = end_cell
        .neighbors()
        .into_iter()
        .filter(|c| !blocked.contains(c))
        .min()
        .ok_or(PadError::NoAttachmentSite)?;

    // Breadth-first search in the free complement out to layer k-1; the
    // complement component is infinite, so every layer is nonempty.
    let mut pred: HashMap<Cell, Cell> = HashMap::new();
    let mut seen: HashSet<Cell> = HashSet::new();
    let mut layer = vec![start];
    seen.insert(start);
    for _ in 0..k - 1 {
        let mut next = Vec::new();
        for &c in &layer {
            for nb in c.neighbors() {
                if !blocked.contains(&nb) && seen.insert(nb) {
                    pred.insert(nb, c);
                    next.push(nb);
                }
            }
        }
        layer = next;
    }
    let target = layer.iter().copied().min().expect("complement layer is nonempty");
    let mut snake = vec![target];
    let mut cur = target;
    while let Some(&p) = pred.get(&cur) {
        snake.push(p);
        cur = p;
    }
    snake.reverse();
    debug_assert_eq!(snake.len(), k);
    debug_assert_eq!(snake[0], start);

    let mut cells = g.cells().clone();
    let mut clues = g.clues().clone();
    for (i, &c) in snake.iter().enumerate() {
        cells.insert(c);
        clues.insert(c, n_prime + 1 + i);
    }
    let links: Vec<(Cell, Cell)> = g.links().iter().copied().collect();
    Ok(Game::new(cells, clues, &links).expect("padded game is valid by construction"))
}
