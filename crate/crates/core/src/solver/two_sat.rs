//! 2-SAT via the implication graph and strongly connected components.
//!
//! A clause (a ∨ b) contributes the implications ¬a → b and ¬b → a. The
//! instance is satisfiable iff no variable shares a strongly connected
//! component with its negation; a satisfying assignment reads the component
//! order off Tarjan's algorithm, which numbers components in reverse
//! topological order.

use std::fmt;

/// A literal: a variable index with a sign.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Lit {
    pub var: usize,
    pub positive: bool,
}

impl Lit {
    pub fn pos(var: usize) -> Lit {
        Lit { var, positive: true }
    }

    pub fn neg(var: usize) -> Lit {
        Lit { var, positive: false }
    }

    pub fn negated(self) -> Lit {
        Lit { var: self.var, positive: !self.positive }
    }

    /// Node index in the implication graph.
    fn node(self) -> usize {
        2 * self.var + usize::from(!self.positive)
    }
}

impl fmt::Display for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", if self.positive { "" } else { "¬" }, self.var)
    }
}

/// A conjunction of 2-literal clauses.
#[derive(Clone, Debug, Default)]
pub struct TwoSatInstance {
    num_vars: usize,
    clauses: Vec<(Lit, Lit)>,
}

impl TwoSatInstance {
    pub fn new(num_vars: usize) -> TwoSatInstance {
        TwoSatInstance { num_vars, clauses: Vec::new() }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[(Lit, Lit)] {
        &self.clauses
    }

    pub fn add_clause(&mut self, a: Lit, b: Lit) {
        assert!(a.var < self.num_vars && b.var < self.num_vars, "literal out of range");
        self.clauses.push((a, b));
    }

    /// Force a single literal, as the clause (a ∨ a).
    pub fn add_unit(&mut self, a: Lit) {
        self.add_clause(a, a);
    }

    /// True iff `assignment` satisfies every clause.
    pub fn eval(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|&(a, b)| {
            assignment[a.var] == a.positive || assignment[b.var] == b.positive
        })
    }
}

/// Decide the instance; `Some(assignment)` satisfies every clause.
pub fn two_sat(inst: &TwoSatInstance) -> Option<Vec<bool>> {
    let nodes = 2 * inst.num_vars;
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); nodes];
    for &(a, b) in &inst.clauses {
        adj[a.negated().node()].push(b.node() as u32);
        adj[b.negated().node()].push(a.node() as u32);
    }
    let comp = tarjan_components(&adj);
    let mut assignment = vec![false; inst.num_vars];
    for v in 0..inst.num_vars {
        let pos = comp[Lit::pos(v).node()];
        let neg = comp[Lit::neg(v).node()];
        if pos == neg {
            return None;
        }
        // Components are numbered sinks-first; the literal whose component
        // is closer to a sink is safe to set true.
        assignment[v] = pos < neg;
    }
    debug_assert!(inst.eval(&assignment));
    Some(assignment)
}

/// Iterative Tarjan; returns the component id per node, ids assigned in
/// completion order (every edge leaves a component of larger id).
fn tarjan_components(adj: &[Vec<u32>]) -> Vec<u32> {
    const UNSET: u32 = u32::MAX;
    let n = adj.len();
    let mut disc = vec![UNSET; n];
    let mut low = vec![0u32; n];
    let mut comp = vec![UNSET; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<u32> = Vec::new();
    let mut call: Vec<(u32, usize)> = Vec::new();
    let mut next_disc = 0u32;
    let mut next_comp = 0u32;

    for root in 0..n as u32 {
        if disc[root as usize] != UNSET {
            continue;
        }
        disc[root as usize] = next_disc;
        low[root as usize] = next_disc;
        next_disc += 1;
        stack.push(root);
        on_stack[root as usize] = true;
        call.push((root, 0));
        while let Some(&(v, ci)) = call.last() {
            if ci < adj[v as usize].len() {
                call.last_mut().unwrap().1 += 1;
                let w = adj[v as usize][ci];
                if disc[w as usize] == UNSET {
                    disc[w as usize] = next_disc;
                    low[w as usize] = next_disc;
                    next_disc += 1;
                    stack.push(w);
                    on_stack[w as usize] = true;
                    call.push((w, 0));
                } else if on_stack[w as usize] {
                    low[v as usize] = low[v as usize].min(disc[w as usize]);
                }
            } else {
                call.pop();
                if low[v as usize] == disc[v as usize] {
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w as usize] = false;
                        comp[w as usize] = next_comp;
                        if w == v {
                            break;
                        }
                    }
                    next_comp += 1;
                }
                if let Some(&(parent, _)) = call.last() {
                    low[parent as usize] = low[parent as usize].min(low[v as usize]);
                }
            }
        }
    }
    comp
}
