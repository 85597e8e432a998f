//! Solvers for the numbered-path game.
//!
//! [`solve`] decides a game and produces one solution. Clue-dense games
//! (every unclued stretch short) are routed to an exact-cover engine over
//! per-gap route choices; everything else runs the pruned backtracking
//! search. [`count_solutions`] and [`for_each_solution`] enumerate.
//!
//! Submodules: [`one_over_two`] is the polynomial procedure for games clued
//! exactly on the odd numbers, [`two_sat`] its satisfiability core,
//! [`multi`] solves boards covered by several independently numbered paths,
//! and [`harness`] generates seeded instances for cross-validation.

pub mod harness;
pub mod multi;
pub mod one_over_two;
pub mod two_sat;

mod backtrack;
mod board;
mod routes;

pub use one_over_two::solve_one_over_two;

use crate::game::{Game, Solution};
use crate::hexgrid::Cell;
use backtrack::{root_cells, RunResult, Searcher};
use board::Board;
use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, Ordering};

#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Node limit for the search; None means unlimited.
    pub node_budget: Option<u64>,
    /// Prune positions whose free cells are unreachable from the path head.
    pub connectivity_pruning: bool,
    /// Jump straight to a link partner when it is the only legal successor.
    pub forced_links: bool,
    /// Split the root branching across threads (decision mode only).
    pub parallel: bool,
}

impl Default for SearchConfig {
    fn default() -> SearchConfig {
        SearchConfig {
            node_budget: None,
            connectivity_pruning: true,
            forced_links: true,
            parallel: false,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SolveOutcome {
    Found(Solution),
    Unsolvable,
    BudgetExceeded,
}

impl SolveOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self, SolveOutcome::Found(_))
    }
}

/// How an enumeration ended.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EnumerationStatus {
    /// Every solution was visited.
    Complete,
    /// The visitor asked to stop.
    Stopped,
    /// A budget ran out before the space was exhausted.
    BudgetExceeded,
}

fn enumeration_status(r: RunResult) -> EnumerationStatus {
    match r {
        RunResult::Exhausted => EnumerationStatus::Complete,
        RunResult::Stopped => EnumerationStatus::Stopped,
        RunResult::BudgetExceeded => EnumerationStatus::BudgetExceeded,
    }
}

fn solution_from_numbering(b: &Board, val_cell: &[u32]) -> Solution {
    let numbering: BTreeMap<Cell, usize> =
        (1..=b.n).map(|v| (b.cells[val_cell[v] as usize], v)).collect();
    Solution::new(numbering)
}

/// Decide a game, producing a solution when one exists.
pub fn solve(g: &Game, cfg: &SearchConfig) -> SolveOutcome {
    let b = Board::new(g);
    if let Some(plan) = routes::plan_game(&b) {
        let mut found = None;
        let status = plan.run(&b, cfg.node_budget, &mut |val_cell| {
            found = Some(solution_from_numbering(&b, val_cell));
            true
        });
        return outcome(found, status);
    }
    if cfg.parallel {
        let roots = root_cells(&b);
        if roots.len() > 1 {
            return solve_parallel(&b, cfg, &roots);
        }
    }
    let mut found = None;
    let mut searcher = Searcher::new(&b, cfg, None);
    let status = searcher.run(
        &mut |val_cell| {
            found = Some(solution_from_numbering(&b, val_cell));
            true
        },
        None,
    );
    outcome(found, status)
}

fn outcome(found: Option<Solution>, status: RunResult) -> SolveOutcome {
    match (found, status) {
        (Some(s), _) => SolveOutcome::Found(s),
        (None, RunResult::BudgetExceeded) => SolveOutcome::BudgetExceeded,
        (None, _) => SolveOutcome::Unsolvable,
    }
}

fn solve_parallel(b: &Board, cfg: &SearchConfig, roots: &[u32]) -> SolveOutcome {
    let threads = std::thread::available_parallelism()
        .map(|p| p.get())
        .unwrap_or(1)
        .min(roots.len());
    if threads <= 1 {
        let mut found = None;
        let mut searcher = Searcher::new(b, cfg, None);
        let status = searcher.run(
            &mut |val_cell| {
                found = Some(solution_from_numbering(b, val_cell));
                true
            },
            None,
        );
        return outcome(found, status);
    }
    let chunks: Vec<Vec<u32>> = (0..threads)
        .map(|t| roots.iter().copied().skip(t).step_by(threads).collect())
        .collect();
    let stop = AtomicBool::new(false);
    let results: Vec<(Option<Solution>, RunResult)> = std::thread::scope(|s| {
        let handles: Vec<_> = chunks
            .iter()
            .map(|chunk| {
                let stop = &stop;
                s.spawn(move || {
                    let mut found = None;
                    let mut searcher = Searcher::new(b, cfg, Some(stop));
                    let status = searcher.run(
                        &mut |val_cell| {
                            found = Some(solution_from_numbering(b, val_cell));
                            stop.store(true, Ordering::Relaxed);
                            true
                        },
                        Some(chunk),
                    );
                    (found, status)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("search thread panicked")).collect()
    });
    let mut any_budget = false;
    for (found, status) in results {
        if let Some(s) = found {
            return SolveOutcome::Found(s);
        }
        any_budget |= status == RunResult::BudgetExceeded;
    }
    if any_budget {
        SolveOutcome::BudgetExceeded
    } else {
        SolveOutcome::Unsolvable
    }
}

/// Visit every solution in deterministic order; `visit` returns true to
/// stop early. Runs single-threaded regardless of `cfg.parallel`.
pub fn for_each_solution(
    g: &Game,
    cfg: &SearchConfig,
    visit: &mut dyn FnMut(&Solution) -> bool,
) -> EnumerationStatus {
    let b = Board::new(g);
    if let Some(plan) = routes::plan_game(&b) {
        let status = plan.run(&b, cfg.node_budget, &mut |val_cell| {
            visit(&solution_from_numbering(&b, val_cell))
        });
        return enumeration_status(status);
    }
    let mut searcher = Searcher::new(&b, cfg, None);
    let status = searcher
        .run(&mut |val_cell| visit(&solution_from_numbering(&b, val_cell)), None);
    enumeration_status(status)
}

/// Number of solutions, counting up to `cap` and then stopping.
pub fn count_solutions(g: &Game, cap: u64) -> u64 {
    assert!(cap >= 1, "cap must be positive");
    let mut count = 0;
    for_each_solution(g, &SearchConfig::default(), &mut |_| {
        count += 1;
        count >= cap
    });
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{new_game, verify_solution};
    use crate::hexgrid::{ball, CellSet};

    fn line_game(len: i64, clues: &[(i64, usize)]) -> Game {
        let cells: CellSet = (0..len).map(|q| Cell::new(q, 0)).collect();
        let clues: BTreeMap<Cell, usize> =
            clues.iter().map(|&(q, v)| (Cell::new(q, 0), v)).collect();
        Game::new(cells, clues, &[]).unwrap()
    }

    #[test]
    fn solves_a_line_with_end_clues() {
        let g = line_game(6, &[(0, 1), (5, 6)]);
        match solve(&g, &SearchConfig::default()) {
            SolveOutcome::Found(s) => assert_eq!(verify_solution(&g, &s), Ok(())),
            other => panic!("expected Found, got {other:?}"),
        }
    }

    #[test]
    fn reversed_end_clues_are_unsolvable() {
        // 1 in the middle of a line: the path cannot cover both sides
        let g = line_game(5, &[(2, 1)]);
        assert_eq!(solve(&g, &SearchConfig::default()), SolveOutcome::Unsolvable);
    }

    #[test]
    fn counts_hamiltonian_paths_of_a_small_ball() {
        // unclued 7-cell ball: counts must match the factorial oracle
        let cells = ball(Cell::new(0, 0), 1);
        let g = new_game(cells, BTreeMap::new(), &[]).unwrap();
        let fast = count_solutions(&g, u64::MAX);
        let slow = harness::permutation_oracle_count(&g);
        assert_eq!(fast, slow);
        assert!(fast > 0);
    }

    #[test]
    fn clue_dense_games_use_the_cover_engine_and_agree() {
        for seed in 0..40u64 {
            let n = 8 + (seed as usize % 12);
            let g = harness::random_snake_game(n, 3, seed);
            let got = solve(&g, &SearchConfig::default());
            match got {
                SolveOutcome::Found(s) => assert_eq!(verify_solution(&g, &s), Ok(())),
                other => panic!("snake seed {seed} must be solvable, got {other:?}"),
            }
        }
    }

    #[test]
    fn sparse_and_dense_modes_agree_on_decisions() {
        for seed in 0..40u64 {
            let n = 5 + (seed as usize % 4);
            let g = harness::random_blob_game(n, 3, seed);
            let fast = solve(&g, &SearchConfig::default()).is_found();
            let slow = harness::permutation_oracle_count(&g) > 0;
            assert_eq!(fast, slow, "decision mismatch on blob seed {seed}");
        }
    }

    #[test]
    fn budget_zero_reports_exceeded_on_a_real_search() {
        let cells = ball(Cell::new(0, 0), 2);
        let g = new_game(cells, BTreeMap::new(), &[]).unwrap();
        let cfg = SearchConfig { node_budget: Some(0), ..SearchConfig::default() };
        assert_eq!(solve(&g, &cfg), SolveOutcome::BudgetExceeded);
    }

    #[test]
    fn parallel_decision_matches_sequential() {
        let cells = ball(Cell::new(0, 0), 2);
        let g = new_game(cells, BTreeMap::new(), &[]).unwrap();
        let seq = solve(&g, &SearchConfig::default()).is_found();
        let par = solve(
            &g,
            &SearchConfig { parallel: true, ..SearchConfig::default() },
        );
        assert_eq!(par.is_found(), seq);
        if let SolveOutcome::Found(s) = par {
            assert_eq!(verify_solution(&g, &s), Ok(()));
        }
    }

    #[test]
    fn links_are_respected_by_both_engines() {
        // 4-cell line, link (1,2): solutions must pass straight through
        let cells: CellSet = (0..4).map(|q| Cell::new(q, 0)).collect();
        let links = [(Cell::new(1, 0), Cell::new(2, 0))];
        let g = Game::new(cells.clone(), BTreeMap::new(), &links).unwrap();
        let mut solutions = Vec::new();
        for_each_solution(&g, &SearchConfig::default(), &mut |s| {
            solutions.push(s.clone());
            false
        });
        assert!(!solutions.is_empty());
        for s in &solutions {
            assert_eq!(verify_solution(&g, s), Ok(()));
        }
        // clue-dense variant with the same link
        let clues = BTreeMap::from([(Cell::new(0, 0), 1), (Cell::new(3, 0), 4)]);
        let g2 = Game::new(cells, clues, &links).unwrap();
        match solve(&g2, &SearchConfig::default()) {
            SolveOutcome::Found(s) => assert_eq!(verify_solution(&g2, &s), Ok(())),
            other => panic!("expected Found, got {other:?}"),
        }
    }
}
