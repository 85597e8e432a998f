//! Polynomial decision procedure for 1-over-2 games (clues exactly on the
//! odd numbers): unit propagation over placement candidates, then 2-SAT on
//! the at-most-two remaining positions of each even number.
//!
//! Every even number 1 < x < n sits between two clued odd numbers, so its
//! cell must be a common free neighbor of two distinct cells — at most two
//! choices. When n is even its top number has only the n−1 anchor and may
//! briefly hold up to five candidates; the procedure branches on those
//! (a constant factor) before encoding.

use super::two_sat::{two_sat, Lit, TwoSatInstance};
use super::SolveOutcome;
use crate::game::{verify_solution, Game, Solution};
use crate::hexgrid::{are_adjacent, Cell};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Candidate cells per unplaced number, plus committed placements.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlacementCandidates {
    placed: BTreeMap<usize, Cell>,
    candidates: BTreeMap<usize, BTreeSet<Cell>>,
}

impl PlacementCandidates {
    pub fn placed(&self) -> &BTreeMap<usize, Cell> {
        &self.placed
    }

    pub fn candidates(&self) -> &BTreeMap<usize, BTreeSet<Cell>> {
        &self.candidates
    }
}

/// A candidate set emptied: no cell can host `number`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Contradiction {
    pub number: usize,
}

impl fmt::Display for Contradiction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "no remaining cell can host number {}", self.number)
    }
}

/// Candidate sets implied by the clues alone: an unplaced number may go on
/// any free cell adjacent to all of its placed value-neighbors (x−1, x+1).
pub fn initial_candidates(g: &Game) -> PlacementCandidates {
    let n = g.n();
    let placed: BTreeMap<usize, Cell> = g.clues().iter().map(|(&c, &v)| (v, c)).collect();
    let clued_cells: BTreeSet<Cell> = g.clues().keys().copied().collect();
    let mut candidates = BTreeMap::new();
    for x in 1..=n {
        if placed.contains_key(&x) {
            continue;
        }
        let anchors: Vec<Cell> = [x.checked_sub(1), Some(x + 1)]
            .into_iter()
            .flatten()
            .filter(|y| *y >= 1 && *y <= n)
            .filter_map(|y| placed.get(&y).copied())
            .collect();
        let cand: BTreeSet<Cell> = if anchors.is_empty() {
            g.cells().iter().filter(|c| !clued_cells.contains(c)).collect()
        } else {
            g.cells()
                .iter()
                .filter(|c| !clued_cells.contains(c))
                .filter(|c| anchors.iter().all(|a| are_adjacent(*a, *c)))
                .collect()
        };
        candidates.insert(x, cand);
    }
    PlacementCandidates { placed, candidates }
}

/// Commit every singleton candidate set to fixpoint. Committing a number
/// removes its cell from all other sets and re-intersects the candidate sets
/// of its value-neighbors with the cell's neighborhood.
pub fn unit_propagate(
    _g: &Game,
    pc: PlacementCandidates,
) -> Result<PlacementCandidates, Contradiction> {
    let mut pc = pc;
    loop {
        if let Some((&x, _)) = pc.candidates.iter().find(|(_, s)| s.is_empty()) {
            return Err(Contradiction { number: x });
        }
        let Some((&x, _)) = pc.candidates.iter().find(|(_, s)| s.len() == 1) else {
            return Ok(pc);
        };
        let cell = *pc.candidates.remove(&x).unwrap().iter().next().unwrap();
        pc.placed.insert(x, cell);
        for (&y, set) in pc.candidates.iter_mut() {
            set.remove(&cell);
            if y == x - 1 || y == x + 1 {
                set.retain(|c| are_adjacent(*c, cell));
            }
        }
    }
}

/// Which games the procedure accepts.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OneOverTwoError {
    /// dom(m) is not exactly the odd numbers in [n].
    NotOneOverTwo,
}

impl fmt::Display for OneOverTwoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "the clue domain is not exactly the odd numbers")
    }
}

impl std::error::Error for OneOverTwoError {}

/// Decide a 1-over-2 game in polynomial time.
pub fn solve_one_over_two(g: &Game) -> Result<SolveOutcome, OneOverTwoError> {
    let n = g.n();
    let odd_values: BTreeSet<usize> = (1..=n).step_by(2).collect();
    let clue_values: BTreeSet<usize> = g.clues().values().copied().collect();
    if clue_values != odd_values {
        return Err(OneOverTwoError::NotOneOverTwo);
    }

    // Links against the clues: two clued endpoints hold odd numbers, never
    // consecutive; two unclued endpoints will hold even numbers, never
    // consecutive. Only mixed links survive to the encoding.
    for &(a, b) in g.links() {
        match (g.clue_at(a), g.clue_at(b)) {
            (Some(x), Some(y)) => {
                if x.abs_diff(y) != 1 {
                    return Ok(SolveOutcome::Unsolvable);
                }
            }
            (None, None) => return Ok(SolveOutcome::Unsolvable),
            _ => {}
        }
    }

    let pc = match unit_propagate(g, initial_candidates(g)) {
        Ok(pc) => pc,
        Err(_) => return Ok(SolveOutcome::Unsolvable),
    };

    // n even and still open: its only anchor is n−1, so up to five
    // candidates remain; branch on them, a constant factor.
    let wide: Vec<(usize, Cell)> = pc
        .candidates
        .iter()
        .filter(|(_, s)| s.len() > 2)
        .flat_map(|(&x, s)| s.iter().map(move |&c| (x, c)))
        .collect();
    if let Some(&(x, _)) = wide.first() {
        debug_assert_eq!(x, n, "only the top number can have more than two candidates");
        for &(_, c) in &wide {
            let mut restricted = pc.clone();
            restricted.candidates.insert(x, BTreeSet::from([c]));
            let restricted = match unit_propagate(g, restricted) {
                Ok(p) => p,
                Err(_) => continue,
            };
            if let Some(s) = encode_and_solve(g, &restricted) {
                return Ok(SolveOutcome::Found(s));
            }
        }
        return Ok(SolveOutcome::Unsolvable);
    }

    match encode_and_solve(g, &pc) {
        Some(s) => Ok(SolveOutcome::Found(s)),
        None => Ok(SolveOutcome::Unsolvable),
    }
}

/// A literal about "number x sits on cell c", which may be decided already.
enum MaybeLit {
    Const(bool),
    L(Lit),
}

fn encode_and_solve(g: &Game, pc: &PlacementCandidates) -> Option<Solution> {
    // variable layout: numbers in ascending order, two variables each,
    // v_x^i ⟺ "x sits on its i-th candidate cell"
    let numbers: Vec<usize> = pc.candidates.keys().copied().collect();
    let var_of: BTreeMap<usize, usize> =
        numbers.iter().enumerate().map(|(i, &x)| (x, 2 * i)).collect();
    let cand_cells: BTreeMap<usize, Vec<Cell>> = pc
        .candidates
        .iter()
        .map(|(&x, s)| (x, s.iter().copied().collect::<Vec<Cell>>()))
        .collect();
    debug_assert!(cand_cells.values().all(|v| v.len() == 2));

    let lit_for = |x: usize, cell: Cell| -> MaybeLit {
        if x < 1 || x > g.n() {
            return MaybeLit::Const(false);
        }
        if let Some(&c) = pc.placed.get(&x) {
            return MaybeLit::Const(c == cell);
        }
        match cand_cells[&x].iter().position(|&c| c == cell) {
            Some(i) => MaybeLit::L(Lit::pos(var_of[&x] + i)),
            None => MaybeLit::Const(false),
        }
    };

    fn add_or(inst: &mut TwoSatInstance, unsat: &mut bool, a: MaybeLit, b: MaybeLit) {
        match (a, b) {
            (MaybeLit::Const(true), _) | (_, MaybeLit::Const(true)) => {}
            (MaybeLit::Const(false), MaybeLit::Const(false)) => *unsat = true,
            (MaybeLit::Const(false), MaybeLit::L(l))
            | (MaybeLit::L(l), MaybeLit::Const(false)) => inst.add_unit(l),
            (MaybeLit::L(a), MaybeLit::L(b)) => inst.add_clause(a, b),
        }
    }

    let mut inst = TwoSatInstance::new(2 * numbers.len());
    let mut unsat = false;

    for &x in &numbers {
        let v = var_of[&x];
        // at least one position, and at most one so extraction is direct
        inst.add_clause(Lit::pos(v), Lit::pos(v + 1));
        inst.add_clause(Lit::neg(v), Lit::neg(v + 1));
    }

    // numbers competing for a cell exclude each other
    let mut by_cell: BTreeMap<Cell, Vec<Lit>> = BTreeMap::new();
    for &x in &numbers {
        for (i, &c) in cand_cells[&x].iter().enumerate() {
            by_cell.entry(c).or_default().push(Lit::pos(var_of[&x] + i));
        }
    }
    for lits in by_cell.values() {
        for (i, &a) in lits.iter().enumerate() {
            for &b in &lits[i + 1..] {
                inst.add_clause(a.negated(), b.negated());
            }
        }
    }

    // links with one clued endpoint: the free endpoint hosts y−1 or y+1
    // (the competing-number exclusions above already forbid anything else
    // from landing there when one of these does)
    let placed_at: BTreeMap<Cell, usize> = pc.placed.iter().map(|(&x, &c)| (c, x)).collect();
    for &(a, b) in g.links() {
        let (na, nb) = (placed_at.get(&a).copied(), placed_at.get(&b).copied());
        match (na, nb) {
            (Some(x), Some(y)) => {
                if x.abs_diff(y) != 1 {
                    unsat = true;
                }
            }
            (Some(x), None) | (None, Some(x)) => {
                let free = if na.is_some() { b } else { a };
                let low = if x > 1 { lit_for(x - 1, free) } else { MaybeLit::Const(false) };
                let high = lit_for(x + 1, free);
                add_or(&mut inst, &mut unsat, low, high);
            }
            (None, None) => unsat = true,
        }
    }
    if unsat {
        return None;
    }

    let assignment = two_sat(&inst)?;
    let mut numbering: BTreeMap<Cell, usize> =
        pc.placed.iter().map(|(&x, &c)| (c, x)).collect();
    for &x in &numbers {
        let i = usize::from(!assignment[var_of[&x]]);
        numbering.insert(cand_cells[&x][i], x);
    }
    let solution = Solution::new(numbering);
    debug_assert_eq!(verify_solution(g, &solution), Ok(()));
    Some(solution)
}
