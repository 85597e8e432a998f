//! Games made of several independently numbered paths that together cover a
//! cell set exactly.
//!
//! Each subpath fixes the cells of some of its numbers — always including 0
//! and the last — and the solver routes the unfixed stretches so that every
//! cell of the board is used by exactly one path. This is the exact-cover
//! search of the clue-dense solver, pooled across all subpaths.

use super::backtrack::RunResult;
use super::board::Board;
use super::routes::{routes_between, solve_cover, CoverProblem, MAX_INTERIOR};
use super::EnumerationStatus;
use crate::hexgrid::{Cell, CellSet};
use std::collections::{BTreeSet, HashMap};
use std::fmt;

/// One numbered path, given by its fixed numbers in increasing order.
/// The path visits numbers 0..=last and therefore covers last+1 cells.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subpath {
    clues: Vec<(u32, Cell)>,
}

impl Subpath {
    pub fn new(clues: Vec<(u32, Cell)>) -> Result<Subpath, MultiError> {
        if clues.is_empty() {
            return Err(MultiError::EmptySubpath);
        }
        if clues[0].0 != 0 {
            return Err(MultiError::MissingZeroClue);
        }
        if clues.windows(2).any(|w| w[1].0 <= w[0].0) {
            return Err(MultiError::UnsortedClues);
        }
        Ok(Subpath { clues })
    }

    pub fn clues(&self) -> &[(u32, Cell)] {
        &self.clues
    }

    /// Highest number on the path.
    pub fn last_number(&self) -> u32 {
        self.clues.last().unwrap().0
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MultiError {
    EmptySubpath,
    MissingZeroClue,
    UnsortedClues,
    ClueOutsideCells(Cell),
    DuplicateClueCell(Cell),
}

impl fmt::Display for MultiError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MultiError::EmptySubpath => write!(f, "a subpath has no fixed numbers"),
            MultiError::MissingZeroClue => write!(f, "a subpath does not fix number 0"),
            MultiError::UnsortedClues => {
                write!(f, "subpath numbers are not strictly increasing")
            }
            MultiError::ClueOutsideCells(c) => {
                write!(f, "fixed cell ({}, {}) is not on the board", c.q, c.r)
            }
            MultiError::DuplicateClueCell(c) => {
                write!(f, "cell ({}, {}) is fixed more than once", c.q, c.r)
            }
        }
    }
}

impl std::error::Error for MultiError {}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiGame {
    cells: CellSet,
    subpaths: Vec<Subpath>,
}

impl MultiGame {
    pub fn new(cells: CellSet, subpaths: Vec<Subpath>) -> Result<MultiGame, MultiError> {
        let mut seen = BTreeSet::new();
        for sp in &subpaths {
            for &(_, c) in sp.clues() {
                if !cells.contains(&c) {
                    return Err(MultiError::ClueOutsideCells(c));
                }
                if !seen.insert(c) {
                    return Err(MultiError::DuplicateClueCell(c));
                }
            }
        }
        Ok(MultiGame { cells, subpaths })
    }

    pub fn cells(&self) -> &CellSet {
        &self.cells
    }

    pub fn subpaths(&self) -> &[Subpath] {
        &self.subpaths
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MultiOutcome {
    /// One cell sequence per subpath, in subpath order.
    Found(Vec<Vec<Cell>>),
    Unsolvable,
    BudgetExceeded,
}

/// Visit solutions in deterministic order; `visit` returns true to stop.
/// Over-long unclued stretches are reported as `BudgetExceeded`.
pub fn for_each_multi_solution(
    mg: &MultiGame,
    budget: Option<u64>,
    visit: &mut dyn FnMut(&[Vec<Cell>]) -> bool,
) -> EnumerationStatus {
    let needed: u64 = mg.subpaths.iter().map(|s| s.last_number() as u64 + 1).sum();
    if needed != mg.cells.len() as u64 {
        return EnumerationStatus::Complete; // wrong cell count: nothing to visit
    }
    let b = Board::from_cell_set(&mg.cells);
    let index: HashMap<Cell, u32> =
        b.cells.iter().enumerate().map(|(i, &c)| (c, i as u32)).collect();

    let mut is_fixed = vec![false; b.n];
    for sp in &mg.subpaths {
        for &(_, c) in sp.clues() {
            is_fixed[index[&c] as usize] = true;
        }
    }
    let free_cells: Vec<u32> = (0..b.n as u32).filter(|&i| !is_fixed[i as usize]).collect();
    let mut free_index = vec![u32::MAX; b.n];
    for (fi, &c) in free_cells.iter().enumerate() {
        free_index[c as usize] = fi as u32;
    }

    // one cover gap per consecutive fixed pair, pooled across subpaths
    let mut gap_owner: Vec<(usize, usize)> = Vec::new(); // (subpath, clue position)
    let mut gaps: Vec<Vec<Vec<u32>>> = Vec::new();
    for (si, sp) in mg.subpaths.iter().enumerate() {
        for (pos, w) in sp.clues.windows(2).enumerate() {
            let interior = w[1].0 - w[0].0 - 1;
            if interior > MAX_INTERIOR {
                return EnumerationStatus::BudgetExceeded;
            }
            let routes = match routes_between(&b, &free_index, index[&w[0].1], index[&w[1].1], interior)
            {
                Some(r) => r,
                None => return EnumerationStatus::BudgetExceeded,
            };
            gap_owner.push((si, pos));
            gaps.push(routes);
        }
    }
    let problem = CoverProblem::new(free_cells.len(), gaps);

    let status = solve_cover(&problem, budget, &mut |choice| {
        let mut paths: Vec<Vec<Cell>> =
            mg.subpaths.iter().map(|sp| vec![sp.clues[0].1]).collect();
        // gaps were pushed subpath-major in clue order, so appends line up
        for (gi, &r) in choice.iter().enumerate() {
            let (si, pos) = gap_owner[gi];
            for &fc in problem.route(gi, r) {
                paths[si].push(b.cells[free_cells[fc as usize] as usize]);
            }
            paths[si].push(mg.subpaths[si].clues[pos + 1].1);
        }
        visit(&paths)
    });
    match status {
        RunResult::Exhausted => EnumerationStatus::Complete,
        RunResult::Stopped => EnumerationStatus::Stopped,
        RunResult::BudgetExceeded => EnumerationStatus::BudgetExceeded,
    }
}

pub fn solve_multi(mg: &MultiGame, budget: Option<u64>) -> MultiOutcome {
    let mut found: Option<Vec<Vec<Cell>>> = None;
    let status = for_each_multi_solution(mg, budget, &mut |paths| {
        found = Some(paths.to_vec());
        true
    });
    match (found, status) {
        (Some(p), _) => MultiOutcome::Found(p),
        (None, EnumerationStatus::BudgetExceeded) => MultiOutcome::BudgetExceeded,
        (None, _) => MultiOutcome::Unsolvable,
    }
}
