//! Indexed board representation shared by the solvers.
//!
//! Cells are numbered 0..n in lexicographic (q, r) order, so index order is
//! the deterministic tie-break order used everywhere.

use crate::game::Game;
use crate::hexgrid::{Cell, CellSet};
use std::collections::HashMap;

pub(crate) struct Board {
    pub n: usize,
    pub cells: Vec<Cell>,
    /// Neighbor indices per cell, ascending.
    pub adj: Vec<Vec<u32>>,
    /// Clue value at each cell, if any.
    pub value_at: Vec<Option<u32>>,
    /// Clue cell per value; slot 0 unused.
    pub cell_of: Vec<Option<u32>>,
    /// Link partners per cell.
    pub link_partners: Vec<Vec<u32>>,
    /// Clued values, ascending.
    pub clue_values: Vec<u32>,
}

impl Board {
    /// Index a bare cell set: adjacency only, no clues or links.
    pub fn from_cell_set(set: &CellSet) -> Board {
        let cells: Vec<Cell> = set.iter().collect();
        let n = cells.len();
        let index: HashMap<Cell, u32> =
            cells.iter().enumerate().map(|(i, &c)| (c, i as u32)).collect();
        let adj: Vec<Vec<u32>> = cells
            .iter()
            .map(|c| {
                let mut nbrs: Vec<u32> =
                    c.neighbors().iter().filter_map(|n| index.get(n).copied()).collect();
                nbrs.sort_unstable();
                nbrs
            })
            .collect();
        Board {
            n,
            cells,
            adj,
            value_at: vec![None; n],
            cell_of: vec![None; n + 1],
            link_partners: vec![Vec::new(); n],
            clue_values: Vec::new(),
        }
    }

    pub fn new(g: &Game) -> Board {
        let mut b = Board::from_cell_set(g.cells());
        let index: HashMap<Cell, u32> =
            b.cells.iter().enumerate().map(|(i, &c)| (c, i as u32)).collect();
        for (&c, &v) in g.clues() {
            let i = index[&c];
            b.value_at[i as usize] = Some(v as u32);
            b.cell_of[v] = Some(i);
            b.clue_values.push(v as u32);
        }
        b.clue_values.sort_unstable();
        for &(x, y) in g.links() {
            let (ix, iy) = (index[&x], index[&y]);
            b.link_partners[ix as usize].push(iy);
            b.link_partners[iy as usize].push(ix);
        }
        for l in &mut b.link_partners {
            l.sort_unstable();
        }
        b
    }

    /// Smallest clued value strictly greater than `v`.
    pub fn next_clue_after(&self, v: u32) -> Option<u32> {
        match self.clue_values.binary_search(&v) {
            Ok(i) => self.clue_values.get(i + 1).copied(),
            Err(i) => self.clue_values.get(i).copied(),
        }
    }

    pub fn hex_dist(&self, a: u32, b: u32) -> u32 {
        self.cells[a as usize].hex_distance(self.cells[b as usize]) as u32
    }

    /// Clued cells must be value-distance compatible pairwise; a violation
    /// proves unsolvability outright.
    pub fn clue_distances_feasible(&self) -> bool {
        for (i, &v1) in self.clue_values.iter().enumerate() {
            let c1 = self.cell_of[v1 as usize].unwrap();
            for &v2 in &self.clue_values[i + 1..] {
                let c2 = self.cell_of[v2 as usize].unwrap();
                if self.hex_dist(c1, c2) > v2 - v1 {
                    return false;
                }
            }
        }
        true
    }

    /// Two-color the board if bipartite and prove unsolvability from parity:
    /// a Hamiltonian path alternates colors, so clue parities must agree with
    /// colors and the color class sizes must match the odd/even value counts.
    /// Returns true only when the game is certainly unsolvable.
    pub fn parity_unsolvable(&self) -> bool {
        let n = self.n;
        if n == 0 {
            return false;
        }
        let mut color = vec![u8::MAX; n];
        color[0] = 0;
        let mut stack = vec![0u32];
        while let Some(i) = stack.pop() {
            let ci = color[i as usize];
            for &j in &self.adj[i as usize] {
                if color[j as usize] == u8::MAX {
                    color[j as usize] = 1 - ci;
                    stack.push(j);
                } else if color[j as usize] == ci {
                    return false; // odd cycle: no parity information
                }
            }
        }
        let count1 = color.iter().filter(|&&c| c == 1).count();
        let count0 = n - count1;
        let odd_count = n.div_ceil(2);
        if let Some(&v0) = self.clue_values.first() {
            let c0 = self.cell_of[v0 as usize].unwrap();
            let base = color[c0 as usize];
            for &v in &self.clue_values {
                let c = self.cell_of[v as usize].unwrap();
                if (color[c as usize] ^ base) as u32 != (v - v0) & 1 {
                    return true;
                }
            }
            // color class that hosts odd values
            let odd_color = base ^ (((v0 - 1) & 1) as u8);
            let odd_class = if odd_color == 0 { count0 } else { count1 };
            odd_class != odd_count
        } else if n % 2 == 0 {
            count0 != count1
        } else {
            count0.abs_diff(count1) != 1
        }
    }
}
