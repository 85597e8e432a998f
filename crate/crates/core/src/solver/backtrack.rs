//! Exhaustive backtracking over the path 1..n, with the pruning rules that
//! make reduction-sized games tractable: forced link transitions, next-clue
//! distance bounds, and free-region connectivity.

use super::board::Board;
use super::SearchConfig;
use std::sync::atomic::{AtomicBool, Ordering};

pub(crate) const UNSET: u32 = u32::MAX;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum RunResult {
    /// Search space exhausted; the visitor saw every solution.
    Exhausted,
    /// The visitor asked to stop.
    Stopped,
    BudgetExceeded,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Flow {
    Continue,
    Stop,
    Budget,
}

pub(crate) struct Searcher<'a> {
    b: &'a Board,
    connectivity: bool,
    forced_links: bool,
    budget: Option<u64>,
    nodes: u64,
    stop_flag: Option<&'a AtomicBool>,
    /// value -> cell index; slot 0 unused.
    val_cell: Vec<u32>,
    /// cell index -> value (0 = free).
    cell_val: Vec<u32>,
    free_count: usize,
    flood_mark: Vec<u32>,
    flood_epoch: u32,
    flood_stack: Vec<u32>,
}

impl<'a> Searcher<'a> {
    pub fn new(b: &'a Board, cfg: &SearchConfig, stop_flag: Option<&'a AtomicBool>) -> Searcher<'a> {
        Searcher {
            b,
            connectivity: cfg.connectivity_pruning,
            forced_links: cfg.forced_links,
            budget: cfg.node_budget,
            nodes: 0,
            stop_flag,
            val_cell: vec![UNSET; b.n + 1],
            cell_val: vec![0; b.n],
            free_count: b.n,
            flood_mark: vec![0; b.n],
            flood_epoch: 0,
            flood_stack: Vec::with_capacity(b.n),
        }
    }

    /// Run the search, reporting every completed numbering to `visit`
    /// (value -> cell index, slot 0 unused). `visit` returns true to stop.
    pub fn run(&mut self, visit: &mut dyn FnMut(&[u32]) -> bool, roots: Option<&[u32]>) -> RunResult {
        if !self.b.clue_distances_feasible() || self.b.parity_unsolvable() {
            return RunResult::Exhausted;
        }
        let flow = match self.b.cell_of[1] {
            Some(c1) => self.try_place(1, c1, visit),
            None => {
                let root_list: Vec<u32> = match roots {
                    Some(r) => r.to_vec(),
                    None => (0..self.b.n as u32).collect(),
                };
                let mut flow = Flow::Continue;
                for c in root_list {
                    if self.b.value_at[c as usize].is_none() {
                        flow = self.try_place(1, c, visit);
                        if flow != Flow::Continue {
                            break;
                        }
                    }
                }
                flow
            }
        };
        match flow {
            Flow::Continue => RunResult::Exhausted,
            Flow::Stop => RunResult::Stopped,
            Flow::Budget => RunResult::BudgetExceeded,
        }
    }

    fn try_place(&mut self, v: u32, cell: u32, visit: &mut dyn FnMut(&[u32]) -> bool) -> Flow {
        debug_assert_eq!(self.cell_val[cell as usize], 0);
        // A valued link partner must hold v-1 (v+1 is not placed yet,
        // and values are placed in increasing order).
        for &p in &self.b.link_partners[cell as usize] {
            let pv = self.cell_val[p as usize];
            if pv != 0 && pv != v - 1 {
                return Flow::Continue;
            }
        }
        self.cell_val[cell as usize] = v;
        self.val_cell[v as usize] = cell;
        self.free_count -= 1;

        let flow = if self.connectivity && self.free_count > 0 && !self.free_region_ok(cell) {
            Flow::Continue
        } else {
            self.extend(v, cell, visit)
        };

        self.cell_val[cell as usize] = 0;
        self.val_cell[v as usize] = UNSET;
        self.free_count += 1;
        flow
    }

    fn extend(&mut self, v: u32, head: u32, visit: &mut dyn FnMut(&[u32]) -> bool) -> Flow {
        self.nodes += 1;
        if let Some(budget) = self.budget {
            if self.nodes > budget {
                return Flow::Budget;
            }
        }
        if let Some(flag) = self.stop_flag {
            if flag.load(Ordering::Relaxed) {
                return Flow::Stop;
            }
        }
        if v as usize == self.b.n {
            return if visit(&self.val_cell) { Flow::Stop } else { Flow::Continue };
        }
        let next = v + 1;

        // Unvalued link partners of the head must receive v+1.
        let mut forced: Option<u32> = None;
        if self.forced_links {
            for &p in &self.b.link_partners[head as usize] {
                if self.cell_val[p as usize] == 0 {
                    if forced.is_some() {
                        return Flow::Continue; // two cells both demand v+1
                    }
                    forced = Some(p);
                }
            }
        }

        let next_clue = self.b.next_clue_after(v);
        let dist_ok = |cand: u32, b: &Board| match next_clue {
            Some(y) => {
                if y == next {
                    true
                } else {
                    let target = b.cell_of[y as usize].unwrap();
                    b.hex_dist(cand, target) <= y - next
                }
            }
            None => true,
        };

        if let Some(target) = self.b.cell_of[next as usize] {
            // next value is clued: the only candidate is its cell
            if self.cell_val[target as usize] != 0
                || !self.b.adj[head as usize].contains(&target)
            {
                return Flow::Continue;
            }
            if let Some(f) = forced {
                if f != target {
                    return Flow::Continue;
                }
            }
            return self.try_place(next, target, visit);
        }

        let candidates: Vec<u32> = match forced {
            Some(f) => {
                if self.cell_val[f as usize] == 0
                    && self.b.value_at[f as usize].is_none()
                    && self.b.adj[head as usize].contains(&f)
                    && dist_ok(f, self.b)
                {
                    vec![f]
                } else {
                    Vec::new()
                }
            }
            None => self.b.adj[head as usize]
                .iter()
                .copied()
                .filter(|&c| {
                    self.cell_val[c as usize] == 0
                        && self.b.value_at[c as usize].is_none()
                        && dist_ok(c, self.b)
                })
                .collect(),
        };
        for cand in candidates {
            let flow = self.try_place(next, cand, visit);
            if flow != Flow::Continue {
                return flow;
            }
        }
        Flow::Continue
    }

    /// After placing the head, every free cell must be reachable from the
    /// head through free cells; otherwise the remaining path cannot cover
    /// them.
    fn free_region_ok(&mut self, head: u32) -> bool {
        self.flood_epoch += 1;
        let epoch = self.flood_epoch;
        let mut reached = 0usize;
        self.flood_stack.clear();
        self.flood_stack.push(head);
        self.flood_mark[head as usize] = epoch;
        while let Some(c) = self.flood_stack.pop() {
            for &nb in &self.b.adj[c as usize] {
                if self.cell_val[nb as usize] == 0 && self.flood_mark[nb as usize] != epoch {
                    self.flood_mark[nb as usize] = epoch;
                    self.flood_stack.push(nb);
                    reached += 1;
                }
            }
        }
        reached == self.free_count
    }
}

/// Root candidate cells for value 1, used to split a parallel search.
pub(crate) fn root_cells(b: &Board) -> Vec<u32> {
    match b.cell_of[1] {
        Some(c) => vec![c],
        None => (0..b.n as u32).filter(|&c| b.value_at[c as usize].is_none()).collect(),
    }
}
