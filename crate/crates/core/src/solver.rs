//! Exhaustive backtracking search for total colourings.
//!
//! Every element keeps a bitmask of candidate colours. Fixing an element
//! removes its colour from the eight elements it conflicts with. For each
//! vertex, the vertex and its four incident edges are pairwise in conflict
//! (a "star"); when the palette has exactly five colours each star must use
//! every colour once, so a colour left with a single place in a star is
//! forced there. Branching picks the undecided element with the fewest
//! candidates, ties going to the smallest `(kind, index)`.
//!
//! Symmetry reduction:
//! * `ColourPerm`: colours not yet used anywhere are interchangeable, so
//!   only the smallest of them is tried at each branch.
//! * `ColourPermPlusRotation`: additionally, by rotating any solution we may
//!   assume `v_0` lies in a vertex colour class of maximum size; the search
//!   prunes states where the class of `v_0` can no longer reach the size of
//!   some other class.
//!
//! Both rules keep at least one representative of every orbit, so an
//! exhausted search proves that no colouring exists.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::colouring::{Colour, TotalColouring};
use crate::error::{Error, Result};
use crate::graph::CirculantGraph;

/// Largest palette the solver accepts.
pub const MAX_PALETTE: Colour = 8;

/// Default node budget.
pub const DEFAULT_NODE_LIMIT: u64 = 1_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SymmetryLevel {
    None,
    ColourPerm,
    ColourPermPlusRotation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub k: Colour,
    /// Maximum number of decision nodes; 0 means unlimited.
    pub node_limit: u64,
    pub symmetry_level: SymmetryLevel,
    /// Prune states where some vertex colour class can no longer have the
    /// parity of `n`. Only applies when `k = 5`, the maximum degree plus
    /// one. Not allowed in certificates.
    pub parity_pruning: bool,
    pub worker_count: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            k: 5,
            node_limit: DEFAULT_NODE_LIMIT,
            symmetry_level: SymmetryLevel::ColourPermPlusRotation,
            parity_pruning: false,
            worker_count: 1,
        }
    }
}

impl SearchConfig {
    pub fn with_k(k: Colour) -> Self {
        Self { k, ..Self::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.k == 0 || self.k > MAX_PALETTE {
            return Err(Error::InvalidConfig(format!(
                "palette size {} outside 1..={MAX_PALETTE}",
                self.k
            )));
        }
        if self.worker_count == 0 {
            return Err(Error::InvalidConfig("worker_count must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    Found,
    ExhaustedNoSolution,
    LimitReached,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub colouring: Option<TotalColouring>,
    pub nodes_visited: u64,
    pub max_depth: usize,
}

/// Decides whether `g` has a total `cfg.k`-colouring.
///
/// The status and, for `Found`, the colouring (the first one in sequential
/// depth-first order) do not depend on `worker_count` as long as the search
/// finishes within the node limit.
pub fn search_total_colouring(g: &CirculantGraph, cfg: &SearchConfig) -> Result<SearchOutcome> {
    cfg.validate()?;
    let model = Model::new(g, cfg);
    let outcome = if cfg.worker_count == 1 {
        model.run_sequential()
    } else {
        model.run_parallel()
    };
    if let Some(c) = &outcome.colouring {
        let report = c.verify(g)?;
        assert!(report.is_proper(), "solver produced an improper colouring:\n{report}");
    }
    Ok(outcome)
}

type Domain = u8;

#[derive(Clone)]
struct State {
    domains: Vec<Domain>,
}

enum Flow {
    Found(State),
    Exhausted,
    Limit,
    Aborted,
}

struct Counters<'a> {
    nodes: &'a AtomicU64,
    max_depth: usize,
    /// Index of this subproblem and the shared "earliest found" index.
    ticket: Option<(usize, &'a AtomicUsize)>,
}

struct Model<'g> {
    graph: &'g CirculantGraph,
    n: usize,
    k: Colour,
    full: Domain,
    cfg: SearchConfig,
    stars: Vec<[usize; 5]>,
}

impl<'g> Model<'g> {
    fn new(graph: &'g CirculantGraph, cfg: &SearchConfig) -> Self {
        let n = graph.n();
        let stars = (0..n)
            .map(|v| {
                let mut star = [v; 5];
                for (slot, e) in star[1..].iter_mut().zip(graph.incident_edges(v)) {
                    *slot = graph.element_id(e);
                }
                star
            })
            .collect();
        Self {
            graph,
            n,
            k: cfg.k,
            full: ((1u16 << cfg.k) - 1) as Domain,
            cfg: cfg.clone(),
            stars,
        }
    }

    fn root(&self) -> Option<State> {
        let mut state = State {
            domains: vec![self.full; 3 * self.n],
        };
        self.propagate(&mut state, Vec::new()).then_some(state)
    }

    /// Fixes `id` to `colour` and propagates; false on contradiction.
    fn assign(&self, state: &mut State, id: usize, colour: Colour) -> bool {
        state.domains[id] = 1 << colour;
        self.propagate(state, vec![id])
    }

    fn propagate(&self, state: &mut State, mut queue: Vec<usize>) -> bool {
        let d = &mut state.domains;
        loop {
            while let Some(id) = queue.pop() {
                let bit = d[id];
                for &nb in self.graph.adjacent_ids(id) {
                    if d[nb] & bit != 0 {
                        d[nb] &= !bit;
                        match d[nb].count_ones() {
                            0 => return false,
                            1 => queue.push(nb),
                            _ => {}
                        }
                    }
                }
            }
            // Stars: five mutually conflicting elements.
            for star in &self.stars {
                let union = star.iter().fold(0, |m, &e| m | d[e]);
                if union.count_ones() < 5 {
                    return false;
                }
                if self.k != 5 {
                    continue;
                }
                for c in 0..self.k {
                    let bit = 1 << c;
                    let mut holders = star.iter().filter(|&&e| d[e] & bit != 0);
                    let Some(&first) = holders.next() else {
                        return false;
                    };
                    if holders.next().is_none() && d[first] != bit {
                        d[first] = bit;
                        queue.push(first);
                    }
                }
            }
            if queue.is_empty() {
                break;
            }
        }
        self.class_rules_hold(d)
    }

    fn class_rules_hold(&self, d: &[Domain]) -> bool {
        let rotation = self.cfg.symmetry_level == SymmetryLevel::ColourPermPlusRotation;
        let parity = self.cfg.parity_pruning && self.k == 5;
        if !rotation && !parity {
            return true;
        }
        let mut fixed = [0usize; MAX_PALETTE as usize];
        let mut open = [0usize; MAX_PALETTE as usize];
        for &dom in &d[..self.n] {
            if dom.count_ones() == 1 {
                fixed[dom.trailing_zeros() as usize] += 1;
            } else {
                for (c, slot) in open.iter_mut().enumerate().take(self.k as usize) {
                    *slot += (dom >> c & 1) as usize;
                }
            }
        }
        if rotation && d[0].count_ones() == 1 {
            let c0 = d[0].trailing_zeros() as usize;
            let reachable = fixed[c0] + open[c0];
            if fixed[..self.k as usize].iter().any(|&f| f > reachable) {
                return false;
            }
        }
        if parity {
            for c in 0..self.k as usize {
                if open[c] == 0 && fixed[c] % 2 != self.n % 2 {
                    return false;
                }
            }
        }
        true
    }

    /// Undecided element with fewest candidates, or `None` when complete.
    fn select(&self, state: &State) -> Option<usize> {
        let mut best: Option<(u32, usize)> = None;
        for (id, dom) in state.domains.iter().enumerate() {
            let size = dom.count_ones();
            if size > 1 && best.is_none_or(|(s, _)| size < s) {
                best = Some((size, id));
                if size == 2 {
                    break;
                }
            }
        }
        best.map(|(_, id)| id)
    }

    fn candidates(&self, state: &State, id: usize) -> Vec<Colour> {
        let dom = state.domains[id];
        let allowed = if self.cfg.symmetry_level == SymmetryLevel::None {
            dom
        } else {
            let used = state
                .domains
                .iter()
                .filter(|d| d.count_ones() == 1)
                .fold(0, |m, &d| m | d);
            let fresh = dom & !used;
            (dom & used) | (fresh & fresh.wrapping_neg())
        };
        (0..self.k).filter(|&c| allowed >> c & 1 != 0).collect()
    }

    /// Children of a node in search order; each counts as one visited node.
    fn children(&self, state: &State, id: usize, counters: &mut Counters) -> std::result::Result<Vec<State>, ()> {
        let mut out = Vec::new();
        for c in self.candidates(state, id) {
            if !self.tick(counters) {
                return Err(());
            }
            let mut child = state.clone();
            if self.assign(&mut child, id, c) {
                out.push(child);
            }
        }
        Ok(out)
    }

    fn tick(&self, counters: &Counters) -> bool {
        let visited = counters.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        self.cfg.node_limit == 0 || visited <= self.cfg.node_limit
    }

    fn dfs(&self, state: State, depth: usize, counters: &mut Counters) -> Flow {
        if let Some((mine, earliest)) = counters.ticket {
            if earliest.load(Ordering::Relaxed) < mine {
                return Flow::Aborted;
            }
        }
        let Some(id) = self.select(&state) else {
            return Flow::Found(state);
        };
        for c in self.candidates(&state, id) {
            if !self.tick(counters) {
                return Flow::Limit;
            }
            counters.max_depth = counters.max_depth.max(depth + 1);
            let mut child = state.clone();
            if !self.assign(&mut child, id, c) {
                continue;
            }
            match self.dfs(child, depth + 1, counters) {
                Flow::Exhausted => {}
                other => return other,
            }
        }
        Flow::Exhausted
    }

    fn finish(&self, flow: Flow, nodes: u64, max_depth: usize) -> SearchOutcome {
        let (status, colouring) = match flow {
            Flow::Found(state) => (SearchStatus::Found, Some(self.decode(&state))),
            Flow::Exhausted => (SearchStatus::ExhaustedNoSolution, None),
            Flow::Limit | Flow::Aborted => (SearchStatus::LimitReached, None),
        };
        SearchOutcome {
            status,
            colouring,
            nodes_visited: nodes.min(self.limit_cap()),
            max_depth,
        }
    }

    fn limit_cap(&self) -> u64 {
        if self.cfg.node_limit == 0 {
            u64::MAX
        } else {
            self.cfg.node_limit
        }
    }

    fn decode(&self, state: &State) -> TotalColouring {
        let colours: Vec<Colour> = state.domains.iter().map(|d| d.trailing_zeros() as Colour + 1).collect();
        let n = self.n;
        TotalColouring::new(
            self.k,
            colours[..n].to_vec(),
            colours[n..2 * n].to_vec(),
            colours[2 * n..].to_vec(),
        )
        .expect("decoded colouring is within the palette")
    }

    fn run_sequential(&self) -> SearchOutcome {
        let nodes = AtomicU64::new(0);
        let mut counters = Counters {
            nodes: &nodes,
            max_depth: 0,
            ticket: None,
        };
        let flow = match self.root() {
            Some(root) => self.dfs(root, 0, &mut counters),
            None => Flow::Exhausted,
        };
        self.finish(flow, nodes.load(Ordering::Relaxed), counters.max_depth)
    }

    /// Splits the tree into subproblems in depth-first order, hands them to
    /// the workers, and reports the earliest subproblem with a solution.
    fn run_parallel(&self) -> SearchOutcome {
        let nodes = AtomicU64::new(0);
        let workers = self.cfg.worker_count;
        let target = 8 * workers;
        let mut counters = Counters {
            nodes: &nodes,
            max_depth: 0,
            ticket: None,
        };

        // (state, depth); complete states stay in the frontier as they are.
        let mut frontier: Vec<(State, usize)> = self.root().into_iter().map(|s| (s, 0)).collect();
        let mut split_depth = 0;
        while frontier.len() < target && split_depth < 16 {
            let mut next = Vec::new();
            let mut grew = false;
            for (state, depth) in frontier {
                match self.select(&state) {
                    None => next.push((state, depth)),
                    Some(id) => {
                        grew = true;
                        match self.children(&state, id, &mut counters) {
                            Ok(children) => next.extend(children.into_iter().map(|c| (c, depth + 1))),
                            Err(()) => return self.finish(Flow::Limit, nodes.load(Ordering::Relaxed), split_depth + 1),
                        }
                    }
                }
            }
            frontier = next;
            split_depth += 1;
            if !grew {
                break;
            }
        }
        let max_depth = frontier.iter().map(|(_, d)| *d).max().unwrap_or(0);

        let jobs: Vec<Mutex<Option<(State, usize)>>> = frontier.into_iter().map(|j| Mutex::new(Some(j))).collect();
        let results: Vec<Mutex<Option<Flow>>> = (0..jobs.len()).map(|_| Mutex::new(None)).collect();
        let next_job = AtomicUsize::new(0);
        let earliest_found = AtomicUsize::new(usize::MAX);
        let deepest = AtomicUsize::new(max_depth);

        std::thread::scope(|scope| {
            for _ in 0..workers.min(jobs.len().max(1)) {
                scope.spawn(|| loop {
                    let i = next_job.fetch_add(1, Ordering::Relaxed);
                    if i >= jobs.len() {
                        break;
                    }
                    let (state, depth) = jobs[i].lock().unwrap().take().unwrap();
                    let flow = if earliest_found.load(Ordering::Relaxed) < i {
                        Flow::Aborted
                    } else {
                        let mut local = Counters {
                            nodes: &nodes,
                            max_depth: depth,
                            ticket: Some((i, &earliest_found)),
                        };
                        let flow = self.dfs(state, depth, &mut local);
                        deepest.fetch_max(local.max_depth, Ordering::Relaxed);
                        flow
                    };
                    if matches!(flow, Flow::Found(_)) {
                        earliest_found.fetch_min(i, Ordering::Relaxed);
                    }
                    *results[i].lock().unwrap() = Some(flow);
                });
            }
        });

        let mut verdict = Flow::Exhausted;
        for slot in results {
            match slot.into_inner().unwrap().expect("every job produces a result") {
                Flow::Exhausted => continue,
                other => {
                    verdict = other;
                    break;
                }
            }
        }
        self.finish(verdict, nodes.load(Ordering::Relaxed), deepest.load(Ordering::Relaxed))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(n: usize, k: Colour, level: SymmetryLevel) -> SearchOutcome {
        let g = CirculantGraph::c13(n).unwrap();
        let cfg = SearchConfig {
            k,
            symmetry_level: level,
            node_limit: 0,
            ..SearchConfig::default()
        };
        search_total_colouring(&g, &cfg).unwrap()
    }

    #[test]
    fn c7_has_no_five_colouring() {
        assert_eq!(
            run(7, 5, SymmetryLevel::ColourPermPlusRotation).status,
            SearchStatus::ExhaustedNoSolution
        );
    }

    #[test]
    fn c7_has_six_colouring() {
        let out = run(7, 6, SymmetryLevel::ColourPermPlusRotation);
        assert_eq!(out.status, SearchStatus::Found);
        assert_eq!(out.colouring.unwrap().k(), 6);
    }

    #[test]
    fn c9_five_colouring_verifies() {
        let g = CirculantGraph::c13(9).unwrap();
        let out = run(9, 5, SymmetryLevel::ColourPerm);
        assert_eq!(out.status, SearchStatus::Found);
        assert!(out.colouring.unwrap().verify(&g).unwrap().is_proper());
    }

    #[test]
    fn c12_has_no_five_colouring() {
        assert_eq!(
            run(12, 5, SymmetryLevel::ColourPermPlusRotation).status,
            SearchStatus::ExhaustedNoSolution
        );
    }

    #[test]
    fn small_palettes_fail_at_the_root() {
        let out = run(9, 4, SymmetryLevel::None);
        assert_eq!(out.status, SearchStatus::ExhaustedNoSolution);
        assert_eq!(out.nodes_visited, 0);
    }

    #[test]
    fn node_limit_fails_closed() {
        let g = CirculantGraph::c13(12).unwrap();
        let cfg = SearchConfig {
            node_limit: 3,
            ..SearchConfig::default()
        };
        let out = search_total_colouring(&g, &cfg).unwrap();
        assert_eq!(out.status, SearchStatus::LimitReached);
        assert!(out.colouring.is_none());
        assert_eq!(out.nodes_visited, 3);
    }

    #[test]
    fn invalid_configs() {
        let g = CirculantGraph::c13(9).unwrap();
        for cfg in [
            SearchConfig {
                k: 0,
                ..SearchConfig::default()
            },
            SearchConfig {
                k: 9,
                ..SearchConfig::default()
            },
            SearchConfig {
                worker_count: 0,
                ..SearchConfig::default()
            },
        ] {
            assert!(matches!(search_total_colouring(&g, &cfg), Err(Error::InvalidConfig(_))));
        }
    }

    #[test]
    fn workers_do_not_change_the_answer() {
        for (n, k) in [(9, 5), (10, 5), (11, 5), (7, 6), (12, 5), (14, 5)] {
            let g = CirculantGraph::c13(n).unwrap();
            let base = SearchConfig {
                k,
                ..SearchConfig::default()
            };
            let one = search_total_colouring(&g, &base).unwrap();
            for workers in [2, 3, 8] {
                let many = search_total_colouring(
                    &g,
                    &SearchConfig {
                        worker_count: workers,
                        ..base.clone()
                    },
                )
                .unwrap();
                assert_eq!(many.status, one.status, "n={n} k={k} workers={workers}");
                assert_eq!(many.colouring, one.colouring, "n={n} k={k} workers={workers}");
            }
        }
    }

    #[test]
    fn sequential_runs_repeat_exactly() {
        let a = run(12, 5, SymmetryLevel::ColourPerm);
        let b = run(12, 5, SymmetryLevel::ColourPerm);
        assert_eq!(
            (a.status, a.nodes_visited, a.max_depth),
            (b.status, b.nodes_visited, b.max_depth)
        );
    }
}
