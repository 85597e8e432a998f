//! Route-cover engine for clue-dense games.
//!
//! When every stretch of unclued numbers is short, the game decomposes into
//! independent "gaps" between consecutive clued values. Each gap has a small
//! set of candidate routes (simple paths through free cells); a solution is
//! exactly a choice of one route per gap such that the chosen interiors
//! partition the free cells. That is an exact-cover problem, solved here by
//! propagation (forced gaps, dead cells) plus fewest-routes-first branching.
//! Unlike sequential backtracking, a contradiction is noticed at the tightest
//! gap rather than thousands of placements later.

use super::backtrack::RunResult;
use super::board::Board;

/// Longest gap interior the planner will enumerate.
pub(crate) const MAX_INTERIOR: u32 = 8;
/// Route-count guard per gap; beyond this the planner declines the game.
pub(crate) const MAX_ROUTES_PER_GAP: usize = 100_000;

/// A maximal stretch of unclued values, delimited by clued anchors (or the
/// path ends).
struct Segment {
    /// Value of the first interior cell.
    first_value: u32,
    start_anchor: Option<u32>,
    end_anchor: Option<u32>,
    interior: u32,
}

pub(crate) struct GamePlan {
    /// Free (unclued) cells, as board indices; route cells index into this.
    free_cells: Vec<u32>,
    segments: Vec<Segment>,
    problem: CoverProblem,
}

/// Build the gap decomposition of a game, or decline when it is not
/// clue-dense enough (no clues, an over-long gap, or a route explosion).
pub(crate) fn plan_game(b: &Board) -> Option<GamePlan> {
    if b.clue_values.is_empty() {
        return None;
    }
    let n = b.n as u32;
    let mut segments = Vec::new();
    let first = b.clue_values[0];
    if first > 1 {
        segments.push(Segment {
            first_value: 1,
            start_anchor: None,
            end_anchor: Some(b.cell_of[first as usize].unwrap()),
            interior: first - 1,
        });
    }
    for w in b.clue_values.windows(2) {
        let (v0, v1) = (w[0], w[1]);
        if v1 > v0 + 1 {
            segments.push(Segment {
                first_value: v0 + 1,
                start_anchor: Some(b.cell_of[v0 as usize].unwrap()),
                end_anchor: Some(b.cell_of[v1 as usize].unwrap()),
                interior: v1 - v0 - 1,
            });
        } else {
            // adjacent clued values: a zero-interior gap enforcing adjacency
            segments.push(Segment {
                first_value: v1,
                start_anchor: Some(b.cell_of[v0 as usize].unwrap()),
                end_anchor: Some(b.cell_of[v1 as usize].unwrap()),
                interior: 0,
            });
        }
    }
    let last = *b.clue_values.last().unwrap();
    if last < n {
        segments.push(Segment {
            first_value: last + 1,
            start_anchor: Some(b.cell_of[last as usize].unwrap()),
            end_anchor: None,
            interior: n - last,
        });
    }
    if segments.iter().any(|s| s.interior > MAX_INTERIOR) {
        return None;
    }

    let free_cells: Vec<u32> =
        (0..b.n as u32).filter(|&c| b.value_at[c as usize].is_none()).collect();
    let mut free_index = vec![u32::MAX; b.n];
    for (fi, &c) in free_cells.iter().enumerate() {
        free_index[c as usize] = fi as u32;
    }

    let mut gaps = Vec::with_capacity(segments.len());
    for seg in &segments {
        let routes = enumerate_routes(b, &free_index, seg)?;
        gaps.push(routes);
    }
    let problem = CoverProblem::new(free_cells.len(), gaps);
    Some(GamePlan { free_cells, segments, problem })
}

/// All candidate routes of a segment, as ordered lists of free-cell indices
/// in increasing-value order. Returns None on route-count overflow.
fn enumerate_routes(b: &Board, free_index: &[u32], seg: &Segment) -> Option<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    match (seg.start_anchor, seg.end_anchor) {
        (Some(a), Some(z)) => routes_between(b, free_index, a, z, seg.interior),
        (Some(a), None) => {
            let mut used = vec![false; b.n];
            let mut path = Vec::new();
            if !dfs_open(b, free_index, a, seg.interior, &mut used, &mut path, &mut out, false) {
                return None;
            }
            Some(out)
        }
        (None, Some(z)) => {
            // walk backwards from the anchor; reverse each found path
            let mut used = vec![false; b.n];
            let mut path = Vec::new();
            if !dfs_open(b, free_index, z, seg.interior, &mut used, &mut path, &mut out, true) {
                return None;
            }
            Some(out)
        }
        (None, None) => None, // no clues at all: not a routes-mode game
    }
}

/// All routes of `interior` free cells from next to `a` up to next to `z`,
/// in increasing-value order. None on route-count overflow.
pub(crate) fn routes_between(
    b: &Board,
    free_index: &[u32],
    a: u32,
    z: u32,
    interior: u32,
) -> Option<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    if interior == 0 {
        if b.adj[a as usize].contains(&z) {
            out.push(Vec::new());
        }
        return Some(out);
    }
    let mut used = vec![false; b.n];
    let mut path = Vec::new();
    if !dfs_between(b, free_index, a, z, interior, &mut used, &mut path, &mut out) {
        return None;
    }
    Some(out)
}

fn dfs_between(
    b: &Board,
    free_index: &[u32],
    cur: u32,
    target: u32,
    remaining: u32,
    used: &mut [bool],
    path: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) -> bool {
    if remaining == 0 {
        if b.adj[cur as usize].contains(&target) {
            out.push(path.clone());
            if out.len() > MAX_ROUTES_PER_GAP {
                return false;
            }
        }
        return true;
    }
    for &nb in &b.adj[cur as usize] {
        if free_index[nb as usize] != u32::MAX
            && !used[nb as usize]
            && b.hex_dist(nb, target) <= remaining
        {
            used[nb as usize] = true;
            path.push(free_index[nb as usize]);
            let ok = dfs_between(b, free_index, nb, target, remaining - 1, used, path, out);
            path.pop();
            used[nb as usize] = false;
            if !ok {
                return false;
            }
        }
    }
    true
}

fn dfs_open(
    b: &Board,
    free_index: &[u32],
    cur: u32,
    remaining: u32,
    used: &mut [bool],
    path: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
    reversed: bool,
) -> bool {
    if remaining == 0 {
        let mut route = path.clone();
        if reversed {
            route.reverse();
        }
        out.push(route);
        return out.len() <= MAX_ROUTES_PER_GAP;
    }
    for &nb in &b.adj[cur as usize] {
        if free_index[nb as usize] != u32::MAX && !used[nb as usize] {
            used[nb as usize] = true;
            path.push(free_index[nb as usize]);
            let ok = dfs_open(b, free_index, nb, remaining - 1, used, path, out, reversed);
            path.pop();
            used[nb as usize] = false;
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Exact cover of free cells by one route per gap.
pub(crate) struct CoverProblem {
    num_free: usize,
    /// Candidate routes per gap; a route is a set of free-cell indices.
    gaps: Vec<Vec<Vec<u32>>>,
    /// (gap, route) pairs covering each free cell.
    users: Vec<Vec<(u32, u32)>>,
}

impl CoverProblem {
    pub fn new(num_free: usize, gaps: Vec<Vec<Vec<u32>>>) -> CoverProblem {
        let mut users = vec![Vec::new(); num_free];
        for (g, routes) in gaps.iter().enumerate() {
            for (r, route) in routes.iter().enumerate() {
                for &c in route {
                    users[c as usize].push((g as u32, r as u32));
                }
            }
        }
        CoverProblem { num_free, gaps, users }
    }

    pub fn total_interior(&self) -> usize {
        // all routes of one gap have equal length; use the first
        self.gaps.iter().map(|rs| rs.first().map_or(0, |r| r.len())).sum()
    }

    pub fn route(&self, gap: usize, r: u32) -> &[u32] {
        &self.gaps[gap][r as usize]
    }
}

enum Op {
    Kill(u32, u32),
    Cover(u32),
    Choose(u32),
}

struct CoverState<'a> {
    p: &'a CoverProblem,
    alive: Vec<Vec<bool>>,
    alive_count: Vec<usize>,
    chosen: Vec<Option<u32>>,
    num_chosen: usize,
    covered: Vec<bool>,
    live_cover: Vec<usize>,
    trail: Vec<Op>,
    forced: Vec<u32>,
    nodes: u64,
}

impl<'a> CoverState<'a> {
    fn new(p: &'a CoverProblem) -> CoverState<'a> {
        CoverState {
            p,
            alive: p.gaps.iter().map(|rs| vec![true; rs.len()]).collect(),
            alive_count: p.gaps.iter().map(|rs| rs.len()).collect(),
            chosen: vec![None; p.gaps.len()],
            num_chosen: 0,
            covered: vec![false; p.num_free],
            live_cover: p.users.iter().map(|u| u.len()).collect(),
            trail: Vec::new(),
            forced: Vec::new(),
            nodes: 0,
        }
    }

    fn kill(&mut self, g: u32, r: u32) -> bool {
        self.alive[g as usize][r as usize] = false;
        self.alive_count[g as usize] -= 1;
        self.trail.push(Op::Kill(g, r));
        let mut ok = true;
        for &c in &self.p.gaps[g as usize][r as usize] {
            if !self.covered[c as usize] {
                self.live_cover[c as usize] -= 1;
                if self.live_cover[c as usize] == 0 {
                    ok = false;
                }
            }
        }
        if self.chosen[g as usize].is_none() {
            match self.alive_count[g as usize] {
                0 => ok = false,
                1 => self.forced.push(g),
                _ => {}
            }
        }
        ok
    }

    fn choose(&mut self, g: u32, r: u32) -> bool {
        debug_assert!(self.alive[g as usize][r as usize]);
        debug_assert!(self.chosen[g as usize].is_none());
        self.chosen[g as usize] = Some(r);
        self.num_chosen += 1;
        self.trail.push(Op::Choose(g));
        let mut ok = true;
        // siblings become unavailable
        for r2 in 0..self.p.gaps[g as usize].len() as u32 {
            if r2 != r && self.alive[g as usize][r2 as usize] {
                ok &= self.kill(g, r2);
            }
        }
        // cover the chosen cells; routes through them die
        for i in 0..self.p.gaps[g as usize][r as usize].len() {
            let c = self.p.gaps[g as usize][r as usize][i];
            debug_assert!(!self.covered[c as usize]);
            self.covered[c as usize] = true;
            self.trail.push(Op::Cover(c));
            for j in 0..self.p.users[c as usize].len() {
                let (g2, r2) = self.p.users[c as usize][j];
                if (g2, r2) != (g, r) && self.alive[g2 as usize][r2 as usize] {
                    ok &= self.kill(g2, r2);
                }
            }
        }
        ok
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            match self.trail.pop().unwrap() {
                Op::Kill(g, r) => {
                    self.alive[g as usize][r as usize] = true;
                    self.alive_count[g as usize] += 1;
                    for &c in &self.p.gaps[g as usize][r as usize] {
                        if !self.covered[c as usize] {
                            self.live_cover[c as usize] += 1;
                        }
                    }
                }
                Op::Cover(c) => self.covered[c as usize] = false,
                Op::Choose(g) => {
                    self.chosen[g as usize] = None;
                    self.num_chosen -= 1;
                }
            }
        }
    }

    /// Drain the forced queue; false on contradiction.
    fn propagate(&mut self) -> bool {
        while let Some(g) = self.forced.pop() {
            if self.chosen[g as usize].is_some() {
                continue;
            }
            debug_assert_eq!(self.alive_count[g as usize], 1);
            let r = (0..self.p.gaps[g as usize].len() as u32)
                .find(|&r| self.alive[g as usize][r as usize])
                .unwrap();
            if !self.choose(g, r) {
                return false;
            }
        }
        true
    }

    fn descend(
        &mut self,
        budget: Option<u64>,
        visit: &mut dyn FnMut(&[u32]) -> bool,
    ) -> RunResult {
        if self.num_chosen == self.p.gaps.len() {
            let choice: Vec<u32> = self.chosen.iter().map(|c| c.unwrap()).collect();
            return if visit(&choice) { RunResult::Stopped } else { RunResult::Exhausted };
        }
        // fewest live routes first
        let g = (0..self.p.gaps.len() as u32)
            .filter(|&g| self.chosen[g as usize].is_none())
            .min_by_key(|&g| self.alive_count[g as usize])
            .unwrap();
        let routes: Vec<u32> = (0..self.p.gaps[g as usize].len() as u32)
            .filter(|&r| self.alive[g as usize][r as usize])
            .collect();
        for r in routes {
            self.nodes += 1;
            if let Some(b) = budget {
                if self.nodes > b {
                    return RunResult::BudgetExceeded;
                }
            }
            let mark = self.trail.len();
            self.forced.clear();
            let ok = self.choose(g, r) && self.propagate();
            let result = if ok { self.descend(budget, visit) } else { RunResult::Exhausted };
            self.undo_to(mark);
            self.forced.clear();
            match result {
                RunResult::Exhausted => {}
                other => return other,
            }
        }
        RunResult::Exhausted
    }
}

/// Enumerate exact covers; `visit` receives the chosen route index per gap
/// and returns true to stop. Deterministic order.
pub(crate) fn solve_cover(
    p: &CoverProblem,
    budget: Option<u64>,
    visit: &mut dyn FnMut(&[u32]) -> bool,
) -> RunResult {
    if p.total_interior() != p.num_free {
        return RunResult::Exhausted; // cannot cover: wrong cell count
    }
    let mut st = CoverState::new(p);
    for g in 0..p.gaps.len() {
        match st.alive_count[g] {
            0 => return RunResult::Exhausted,
            1 => st.forced.push(g as u32),
            _ => {}
        }
    }
    if st.live_cover.iter().any(|&c| c == 0) {
        return RunResult::Exhausted;
    }
    if !st.propagate() {
        return RunResult::Exhausted;
    }
    st.descend(budget, visit)
}

impl GamePlan {
    /// Run the cover search; `visit` receives the full numbering
    /// (value -> board cell index, slot 0 unused). Link constraints are
    /// checked here, so only genuine solutions reach the visitor.
    pub fn run(
        &self,
        b: &Board,
        budget: Option<u64>,
        visit: &mut dyn FnMut(&[u32]) -> bool,
    ) -> RunResult {
        let mut val_cell = vec![u32::MAX; b.n + 1];
        for &v in &b.clue_values {
            val_cell[v as usize] = b.cell_of[v as usize].unwrap();
        }
        let has_links = b.link_partners.iter().any(|l| !l.is_empty());
        solve_cover(&self.problem, budget, &mut |choice| {
            for (gi, &r) in choice.iter().enumerate() {
                let seg = &self.segments[gi];
                let cells = &self.problem.gaps[gi][r as usize];
                for (i, &fc) in cells.iter().enumerate() {
                    val_cell[(seg.first_value as usize) + i] = self.free_cells[fc as usize];
                }
            }
            if has_links {
                let mut cell_val = vec![0u32; b.n];
                for v in 1..=b.n as u32 {
                    cell_val[val_cell[v as usize] as usize] = v;
                }
                for (c, partners) in b.link_partners.iter().enumerate() {
                    for &p in partners {
                        if p as usize > c {
                            let d = cell_val[c].abs_diff(cell_val[p as usize]);
                            if d != 1 {
                                return false; // not a solution; keep searching
                            }
                        }
                    }
                }
            }
            visit(&val_cell)
        })
    }
}
