//! Seeded instance generators and a factorial-time oracle, used to
//! cross-validate the solvers on large random suites.

use crate::game::Game;
use crate::hexgrid::{are_adjacent, Cell, CellSet};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, HashSet};

/// A game whose solution is a random self-avoiding walk of length `n`, with
/// clues on every k-th value (1, k+1, 2k+1, …). Solvable by construction.
pub fn random_snake_game(n: usize, k: usize, seed: u64) -> Game {
    assert!(n >= 1 && k >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let path = random_walk(n, &mut rng);
    let clues: BTreeMap<Cell, usize> = (0..n).step_by(k).map(|i| (path[i], i + 1)).collect();
    let cells: CellSet = path.iter().copied().collect();
    Game::new(cells, clues, &[]).expect("walk games are valid")
}

/// A random connected blob of `n` cells with the clue values 1, k+1, 2k+1, …
/// scattered on uniformly random distinct cells. Often unsolvable; useful
/// for decision cross-checks.
pub fn random_blob_game(n: usize, k: usize, seed: u64) -> Game {
    assert!(n >= 1 && k >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut chosen = vec![Cell::new(0, 0)];
    let mut in_set: HashSet<Cell> = chosen.iter().copied().collect();
    let mut frontier: Vec<Cell> = Cell::new(0, 0).neighbors().to_vec();
    while chosen.len() < n {
        let i = rng.gen_range(0..frontier.len());
        let c = frontier.swap_remove(i);
        if !in_set.insert(c) {
            continue;
        }
        chosen.push(c);
        frontier.extend(c.neighbors().iter().copied().filter(|x| !in_set.contains(x)));
    }
    let mut shuffled = chosen.clone();
    shuffled.shuffle(&mut rng);
    let clues: BTreeMap<Cell, usize> =
        (0..n).step_by(k).map(|i| (shuffled[i / k], i + 1)).collect();
    Game::new(chosen.into_iter().collect(), clues, &[]).expect("blob games are valid")
}

fn random_walk(n: usize, rng: &mut ChaCha8Rng) -> Vec<Cell> {
    loop {
        let mut path = vec![Cell::new(0, 0)];
        let mut used: HashSet<Cell> = path.iter().copied().collect();
        let mut attempts = 0usize;
        while path.len() < n && attempts < 64 * n {
            attempts += 1;
            let head = *path.last().unwrap();
            let free: Vec<Cell> =
                head.neighbors().iter().copied().filter(|c| !used.contains(c)).collect();
            if free.is_empty() {
                // walked into a pocket: back out a little and try again
                let pop = rng.gen_range(1..=3.min(path.len() - 1));
                for _ in 0..pop {
                    used.remove(&path.pop().unwrap());
                }
                continue;
            }
            let next = free[rng.gen_range(0..free.len())];
            used.insert(next);
            path.push(next);
        }
        if path.len() == n {
            return path;
        }
    }
}

/// Count solutions by checking all n! assignments. For tiny games only.
pub fn permutation_oracle_count(g: &Game) -> u64 {
    let n = g.n();
    assert!(n <= 8, "the factorial oracle is for games of at most 8 cells");
    let cells: Vec<Cell> = g.cells().iter().collect();
    let clue_at: Vec<Option<usize>> =
        cells.iter().map(|c| g.clue_at(*c)).collect();
    let index: BTreeMap<Cell, usize> =
        cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let links: Vec<(usize, usize)> =
        g.links().iter().map(|&(a, b)| (index[&a], index[&b])).collect();
    let mut adj = vec![vec![false; n]; n];
    for (i, &a) in cells.iter().enumerate() {
        for (j, &b) in cells.iter().enumerate() {
            adj[i][j] = are_adjacent(a, b);
        }
    }

    // arr[v-1] = index of the cell holding value v
    let mut inv = vec![0usize; n];
    let check = |arr: &[usize], inv: &mut [usize]| -> bool {
        for w in arr.windows(2) {
            if !adj[w[0]][w[1]] {
                return false;
            }
        }
        for (pos, &ci) in arr.iter().enumerate() {
            if let Some(v) = clue_at[ci] {
                if v != pos + 1 {
                    return false;
                }
            }
            inv[ci] = pos;
        }
        links.iter().all(|&(a, b)| inv[a].abs_diff(inv[b]) == 1)
    };

    let mut arr: Vec<usize> = (0..n).collect();
    let mut count = 0u64;
    if check(&arr, &mut inv) {
        count += 1;
    }
    // Heap's algorithm, iterative form
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                arr.swap(0, i);
            } else {
                arr.swap(c[i], i);
            }
            if check(&arr, &mut inv) {
                count += 1;
            }
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::verify_solution;
    use crate::solver::{solve, SearchConfig, SolveOutcome};

    #[test]
    fn snake_games_are_reproducible_and_solvable() {
        let a = random_snake_game(12, 2, 7);
        let b = random_snake_game(12, 2, 7);
        assert_eq!(a, b);
        match solve(&a, &SearchConfig::default()) {
            SolveOutcome::Found(s) => assert_eq!(verify_solution(&a, &s), Ok(())),
            other => panic!("expected Found, got {other:?}"),
        }
    }

    #[test]
    fn blob_games_are_reproducible_and_valid() {
        let a = random_blob_game(10, 2, 3);
        let b = random_blob_game(10, 2, 3);
        assert_eq!(a, b);
        assert_eq!(a.n(), 10);
        assert_eq!(a.clues().len(), 5);
    }

    #[test]
    fn oracle_counts_a_triangle() {
        // three mutually adjacent cells, no clues: all 3! orders are paths
        let cells: CellSet =
            [(0, 0), (1, 0), (0, 1)].iter().map(|&(q, r)| Cell::new(q, r)).collect();
        let g = Game::new(cells, BTreeMap::new(), &[]).unwrap();
        assert_eq!(permutation_oracle_count(&g), 6);
    }

    #[test]
    fn oracle_respects_clues_and_links() {
        let cells: CellSet = (0..4).map(|q| Cell::new(q, 0)).collect();
        let clues = BTreeMap::from([(Cell::new(0, 0), 1)]);
        let g = Game::new(cells.clone(), clues.clone(), &[]).unwrap();
        assert_eq!(permutation_oracle_count(&g), 1);
        let links = [(Cell::new(1, 0), Cell::new(2, 0))];
        let g2 = Game::new(cells, clues, &links).unwrap();
        assert_eq!(permutation_oracle_count(&g2), 1);
    }
}
