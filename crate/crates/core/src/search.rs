//! Backtracking search for red/blue edge colorings that avoid a family of
//! forbidden monochromatic edge sets.
//!
//! Each forbidden set is a clause "not all of these edges get color c". When
//! all but one edge of a clause carry `c`, the last edge is forced to the
//! other color. Edges that no longer occur in any live clause of one color
//! are given that color without branching.

use std::ops::ControlFlow;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use thiserror::Error;

use crate::coloring::Color;

/// Edge sets that must not be entirely red, and ones that must not be
/// entirely blue, over edges `0..edge_count`.
#[derive(Debug, Clone, Default)]
pub struct TwoColorProblem {
    pub edge_count: usize,
    pub no_all_red: Vec<Vec<usize>>,
    pub no_all_blue: Vec<Vec<usize>>,
}

/// How the next edge to branch on is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BranchOrder {
    /// Prefer edges in many nearly-complete clauses.
    #[default]
    MostConstrained,
    /// Edge index order, red before blue: the first solution found is the
    /// lexicographically least one.
    Lexicographic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum number of branching nodes per worker.
    pub budget: u64,
    pub threads: usize,
    pub order: BranchOrder,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: 100_000_000,
            threads: 1,
            order: BranchOrder::MostConstrained,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("search budget exhausted after {nodes} nodes")]
pub struct BudgetExceeded {
    pub nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub solution: Option<Vec<Color>>,
    pub nodes: u64,
}

struct Clause {
    edges: Vec<usize>,
    forbid: Color,
}

struct Solver<'a> {
    clauses: &'a [Clause],
    occ: &'a [Vec<usize>],
    assign: Vec<Option<Color>>,
    bad: Vec<usize>,
    good: Vec<usize>,
    /// Live (unsatisfied) clauses per edge, by forbidden color.
    live: Vec<[usize; 2]>,
    trail: Vec<usize>,
    queue: Vec<(usize, Color)>,
    nodes: u64,
    budget: u64,
    order: BranchOrder,
    pure: [bool; 2],
    cancel: Option<(&'a AtomicUsize, usize)>,
}

fn slot(c: Color) -> usize {
    match c {
        Color::Red => 0,
        Color::Blue => 1,
    }
}

enum Stop {
    Budget,
    Cancelled,
    Done,
}

impl<'a> Solver<'a> {
    fn new(clauses: &'a [Clause], occ: &'a [Vec<usize>], m: usize, opts: &SearchOptions, pure: [bool; 2]) -> Self {
        let mut live = vec![[0usize; 2]; m];
        for c in clauses {
            for &e in &c.edges {
                live[e][slot(c.forbid)] += 1;
            }
        }
        Solver {
            clauses,
            occ,
            assign: vec![None; m],
            bad: vec![0; clauses.len()],
            good: vec![0; clauses.len()],
            live,
            trail: Vec::new(),
            queue: Vec::new(),
            nodes: 0,
            budget: opts.budget,
            order: opts.order,
            pure,
            cancel: None,
        }
    }

    /// Assigns and updates counters; returns false on a violated clause.
    fn set(&mut self, e: usize, col: Color) -> bool {
        self.assign[e] = Some(col);
        self.trail.push(e);
        let mut ok = true;
        for &ci in &self.occ[e] {
            let c = &self.clauses[ci];
            if c.forbid == col {
                self.bad[ci] += 1;
                if self.good[ci] == 0 {
                    if self.bad[ci] == c.edges.len() {
                        ok = false;
                    } else if self.bad[ci] + 1 == c.edges.len() {
                        if let Some(&x) = c.edges.iter().find(|&&x| self.assign[x].is_none()) {
                            self.queue.push((x, col.other()));
                        }
                    }
                }
            } else {
                self.good[ci] += 1;
                if self.good[ci] == 1 {
                    for &x in &c.edges {
                        self.live[x][slot(c.forbid)] -= 1;
                    }
                }
            }
        }
        ok
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let e = self.trail.pop().unwrap();
            let col = self.assign[e].take().unwrap();
            for &ci in &self.occ[e] {
                let c = &self.clauses[ci];
                if c.forbid == col {
                    self.bad[ci] -= 1;
                } else {
                    if self.good[ci] == 1 {
                        for &x in &c.edges {
                            self.live[x][slot(c.forbid)] += 1;
                        }
                    }
                    self.good[ci] -= 1;
                }
            }
        }
    }

    /// Unit propagation plus pure-color assignment to a fixpoint.
    fn propagate(&mut self) -> bool {
        loop {
            while let Some((e, col)) = self.queue.pop() {
                match self.assign[e] {
                    Some(c) if c == col => {}
                    Some(_) => {
                        self.queue.clear();
                        return false;
                    }
                    None => {
                        if !self.set(e, col) {
                            self.queue.clear();
                            return false;
                        }
                    }
                }
            }
            let mut changed = false;
            for e in 0..self.assign.len() {
                if self.assign[e].is_some() {
                    continue;
                }
                if self.pure[0] && self.live[e][0] == 0 {
                    self.queue.push((e, Color::Red));
                    changed = true;
                } else if self.pure[1] && self.live[e][1] == 0 {
                    self.queue.push((e, Color::Blue));
                    changed = true;
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn pick(&self) -> Option<usize> {
        let free = (0..self.assign.len()).filter(|&e| self.assign[e].is_none());
        match self.order {
            BranchOrder::Lexicographic => free.min(),
            BranchOrder::MostConstrained => free.max_by_key(|&e| {
                let mut score = 0u64;
                for &ci in &self.occ[e] {
                    if self.good[ci] == 0 {
                        let open = self.clauses[ci].edges.len() - self.bad[ci];
                        score += 1u64 << (16 - open.min(16));
                    }
                }
                (score, std::cmp::Reverse(e))
            }),
        }
    }

    fn solution(&self) -> Vec<Color> {
        self.assign.iter().map(|c| c.expect("complete")).collect()
    }

    /// Depth-first search; `visit` sees each complete assignment.
    fn dfs(&mut self, visit: &mut dyn FnMut(&[Color]) -> ControlFlow<()>) -> Result<(), Stop> {
        let mark = self.trail.len();
        if !self.propagate() {
            self.undo_to(mark);
            return Ok(());
        }
        let Some(e) = self.pick() else {
            let sol = self.solution();
            self.undo_to(mark);
            return match visit(&sol) {
                ControlFlow::Break(()) => Err(Stop::Done),
                ControlFlow::Continue(()) => Ok(()),
            };
        };
        self.nodes += 1;
        if self.nodes > self.budget {
            self.undo_to(mark);
            return Err(Stop::Budget);
        }
        if let Some((best, me)) = self.cancel {
            if best.load(Ordering::Relaxed) < me {
                self.undo_to(mark);
                return Err(Stop::Cancelled);
            }
        }
        for col in [Color::Red, Color::Blue] {
            let inner = self.trail.len();
            self.queue.push((e, col));
            let r = self.dfs(visit);
            self.undo_to(inner);
            if r.is_err() {
                self.undo_to(mark);
                return r;
            }
        }
        self.undo_to(mark);
        Ok(())
    }
}

fn build(problem: &TwoColorProblem) -> (Vec<Clause>, Vec<Vec<usize>>) {
    let mut clauses = Vec::new();
    for (sets, forbid) in [(&problem.no_all_red, Color::Red), (&problem.no_all_blue, Color::Blue)] {
        for s in sets {
            clauses.push(Clause {
                edges: s.clone(),
                forbid,
            });
        }
    }
    let mut occ = vec![Vec::new(); problem.edge_count];
    for (i, c) in clauses.iter().enumerate() {
        for &e in &c.edges {
            occ[e].push(i);
        }
    }
    (clauses, occ)
}

fn pure_flags(order: BranchOrder) -> [bool; 2] {
    match order {
        BranchOrder::MostConstrained => [true, true],
        BranchOrder::Lexicographic => [true, false],
    }
}

/// Finds one admissible coloring, or proves there is none.
pub fn solve(problem: &TwoColorProblem, opts: &SearchOptions) -> Result<SearchOutcome, BudgetExceeded> {
    if problem.no_all_red.iter().chain(&problem.no_all_blue).any(Vec::is_empty) {
        // An empty clause can never be satisfied.
        return Ok(SearchOutcome {
            solution: None,
            nodes: 0,
        });
    }
    let (clauses, occ) = build(problem);
    if opts.threads > 1 {
        return solve_parallel(problem, &clauses, &occ, opts);
    }
    let mut s = Solver::new(&clauses, &occ, problem.edge_count, opts, pure_flags(opts.order));
    let mut found = None;
    let r = s.dfs(&mut |sol| {
        found = Some(sol.to_vec());
        ControlFlow::Break(())
    });
    match r {
        Err(Stop::Budget) => Err(BudgetExceeded { nodes: s.nodes }),
        _ => Ok(SearchOutcome {
            solution: found,
            nodes: s.nodes,
        }),
    }
}

/// Calls `visit` on every admissible coloring (no pure-color shortcuts).
pub fn for_each_solution(
    problem: &TwoColorProblem,
    budget: u64,
    mut visit: impl FnMut(&[Color]) -> ControlFlow<()>,
) -> Result<u64, BudgetExceeded> {
    if problem.no_all_red.iter().chain(&problem.no_all_blue).any(Vec::is_empty) {
        return Ok(0);
    }
    let (clauses, occ) = build(problem);
    let opts = SearchOptions {
        budget,
        threads: 1,
        order: BranchOrder::Lexicographic,
    };
    let mut s = Solver::new(&clauses, &occ, problem.edge_count, &opts, [false, false]);
    match s.dfs(&mut visit) {
        Err(Stop::Budget) => Err(BudgetExceeded { nodes: s.nodes }),
        _ => Ok(s.nodes),
    }
}

/// Outcome of one branch: a solution, none, or `Err` when the budget ran out.
type PrefixResult = Result<Option<Vec<Color>>, ()>;

/// Splits the tree at its top branching levels into ordered subproblems and
/// runs them on `threads` workers. The reported solution is the one from the
/// earliest subproblem that has one, as a serial search would find it.
fn solve_parallel(
    problem: &TwoColorProblem,
    clauses: &[Clause],
    occ: &[Vec<usize>],
    opts: &SearchOptions,
) -> Result<SearchOutcome, BudgetExceeded> {
    let depth = usize::BITS - (opts.threads - 1).leading_zeros();
    let pure = pure_flags(opts.order);
    let mut root = Solver::new(clauses, occ, problem.edge_count, opts, pure);
    let mut prefixes: Vec<Vec<(usize, Color)>> = Vec::new();
    split(&mut root, depth as usize, &mut Vec::new(), &mut prefixes);
    if prefixes.is_empty() {
        return Ok(SearchOutcome {
            solution: None,
            nodes: root.nodes,
        });
    }

    fn split(s: &mut Solver, depth: usize, path: &mut Vec<(usize, Color)>, out: &mut Vec<Vec<(usize, Color)>>) {
        let mark = s.trail.len();
        if !s.propagate() {
            s.undo_to(mark);
            return;
        }
        match s.pick() {
            None => out.push(path.clone()),
            Some(_) if depth == 0 => out.push(path.clone()),
            Some(e) => {
                for col in [Color::Red, Color::Blue] {
                    let inner = s.trail.len();
                    s.queue.push((e, col));
                    path.push((e, col));
                    split(s, depth - 1, path, out);
                    path.pop();
                    s.undo_to(inner);
                }
            }
        }
        s.undo_to(mark);
    }

    let best = AtomicUsize::new(usize::MAX);
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<PrefixResult>>> = Mutex::new(vec![None; prefixes.len()]);
    let nodes = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..opts.threads.min(prefixes.len()) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= prefixes.len() {
                    break;
                }
                if best.load(Ordering::SeqCst) < i {
                    continue;
                }
                let mut s = Solver::new(clauses, occ, problem.edge_count, opts, pure);
                s.cancel = Some((&best, i));
                // Replay the prefix level by level so the state matches the
                // serial search at the same node.
                s.propagate();
                for &(e, col) in &prefixes[i] {
                    s.queue.push((e, col));
                    s.propagate();
                }
                let mut found = None;
                let r = s.dfs(&mut |sol| {
                    found = Some(sol.to_vec());
                    ControlFlow::Break(())
                });
                nodes.fetch_add(s.nodes as usize, Ordering::SeqCst);
                let res = match r {
                    Err(Stop::Budget) => Some(Err(())),
                    Err(Stop::Cancelled) => None,
                    _ => Some(Ok(found.clone())),
                };
                if found.is_some() {
                    best.fetch_min(i, Ordering::SeqCst);
                }
                results.lock().unwrap()[i] = res;
            });
        }
    });
    let results = results.into_inner().unwrap();
    let total = nodes.load(Ordering::SeqCst) as u64 + root.nodes;
    let mut budget_hit = false;
    for r in results {
        match r {
            Some(Ok(Some(sol))) => {
                return Ok(SearchOutcome {
                    solution: Some(sol),
                    nodes: total,
                })
            }
            Some(Ok(None)) => {}
            Some(Err(())) => budget_hit = true,
            None => {}
        }
    }
    if budget_hit {
        Err(BudgetExceeded { nodes: total })
    } else {
        Ok(SearchOutcome {
            solution: None,
            nodes: total,
        })
    }
}
