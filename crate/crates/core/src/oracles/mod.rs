//! Exact solvers for the six problems, used as ground truth at desk scale.
//!
//! Every solver either finishes with a proven optimum (plus a verifying
//! witness where one exists) or reports that the configured budget ran out —
//! it never guesses. Budgets are counted in explored search nodes, which
//! keeps runs reproducible; an optional wall-clock limit can be layered on
//! top for command-line use.

mod ds;
mod fvs;
mod hc;
mod is_vc;
mod threecol;

pub use hc::enumerate_hamiltonian_cycles;

use crate::graph::{Graph, Problem, Solution};
use std::time::{Duration, Instant};

/// Search budget. `node_limit` is deterministic; `time_limit` is a
/// wall-clock safety net (checked coarsely).
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            node_limit: None,
            time_limit: None,
        }
    }

    pub fn nodes(n: u64) -> Self {
        Budget {
            node_limit: Some(n),
            time_limit: None,
        }
    }

    pub fn seconds(s: f64) -> Self {
        Budget {
            node_limit: None,
            time_limit: Some(Duration::from_secs_f64(s)),
        }
    }
}

pub(crate) struct Ticker {
    remaining: u64,
    deadline: Option<Instant>,
    coarse: u32,
    exceeded: bool,
}

impl Ticker {
    pub(crate) fn new(b: Budget) -> Self {
        Ticker {
            remaining: b.node_limit.unwrap_or(u64::MAX),
            deadline: b.time_limit.map(|d| Instant::now() + d),
            coarse: 0,
            exceeded: false,
        }
    }

    /// Accounts one search node; returns false once the budget is gone.
    pub(crate) fn tick(&mut self) -> bool {
        if self.exceeded {
            return false;
        }
        if self.remaining == 0 {
            self.exceeded = true;
            return false;
        }
        self.remaining -= 1;
        self.coarse = self.coarse.wrapping_add(1);
        if self.coarse % 4096 == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.exceeded = true;
                    return false;
                }
            }
        }
        true
    }

    pub(crate) fn exceeded(&self) -> bool {
        self.exceeded
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OptValue {
    Size(usize),
    Decision(bool),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleStatus {
    Exact,
    BudgetExceeded,
}

/// Solver result: a proven value with optional witness, or no claim at all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptimumWitness {
    pub value: Option<OptValue>,
    pub witness: Option<Solution>,
    pub status: OracleStatus,
}

impl OptimumWitness {
    fn exceeded() -> Self {
        OptimumWitness {
            value: None,
            witness: None,
            status: OracleStatus::BudgetExceeded,
        }
    }

    fn size(v: usize, w: Option<Solution>) -> Self {
        OptimumWitness {
            value: Some(OptValue::Size(v)),
            witness: w,
            status: OracleStatus::Exact,
        }
    }

    fn decision(v: bool, w: Option<Solution>) -> Self {
        OptimumWitness {
            value: Some(OptValue::Decision(v)),
            witness: w,
            status: OracleStatus::Exact,
        }
    }

    /// The proven set size, if the solve finished and was size-valued.
    pub fn exact_size(&self) -> Option<usize> {
        match (self.status, self.value) {
            (OracleStatus::Exact, Some(OptValue::Size(s))) => Some(s),
            _ => None,
        }
    }

    /// The proven yes/no answer, if the solve finished and was decision-valued.
    pub fn exact_decision(&self) -> Option<bool> {
        match (self.status, self.value) {
            (OracleStatus::Exact, Some(OptValue::Decision(d))) => Some(d),
            _ => None,
        }
    }
}

/// Solves `problem` on `g` exactly within `budget`.
pub fn exact_solve(problem: Problem, g: &Graph, budget: Budget) -> OptimumWitness {
    exact_solve_seeded(problem, g, budget, None)
}

/// Like [`exact_solve`], but a caller who already holds a candidate solution
/// may pass it as a warm start. The seed is validated before use and only
/// ever tightens the search; answers are identical with or without it, only
/// the work to prove them changes. Minimization by pruning currently profits
/// for dominating set; other problems ignore the seed.
pub(crate) fn exact_solve_seeded(
    problem: Problem,
    g: &Graph,
    budget: Budget,
    seed: Option<&Solution>,
) -> OptimumWitness {
    let mut t = Ticker::new(budget);
    match problem {
        Problem::IndependentSet => match is_vc::max_independent_set(g, &mut t) {
            Some((v, set)) => OptimumWitness::size(v, Some(Solution::VertexSet(set))),
            None => OptimumWitness::exceeded(),
        },
        Problem::VertexCover => match is_vc::min_vertex_cover(g, &mut t) {
            Some((v, set)) => OptimumWitness::size(v, Some(Solution::VertexSet(set))),
            None => OptimumWitness::exceeded(),
        },
        Problem::DominatingSet => {
            let seed_set = match seed {
                Some(Solution::VertexSet(s)) => Some(s),
                _ => None,
            };
            match ds::min_dominating_set_seeded(g, &mut t, seed_set) {
                Some((v, set)) => OptimumWitness::size(v, Some(Solution::VertexSet(set))),
                None => OptimumWitness::exceeded(),
            }
        }
        Problem::FeedbackVertexSet => match fvs::min_feedback_vertex_set(g, &mut t) {
            Some((v, set)) => OptimumWitness::size(v, Some(Solution::VertexSet(set))),
            None => OptimumWitness::exceeded(),
        },
        Problem::HamiltonianCycle => match hc::hamiltonian_cycle(g, &mut t) {
            Some(Some(order)) => OptimumWitness::decision(true, Some(Solution::CycleOrder(order))),
            Some(None) => OptimumWitness::decision(false, None),
            None => OptimumWitness::exceeded(),
        },
        Problem::ThreeColoring => match threecol::three_coloring(g, &mut t) {
            Some(Some(c)) => OptimumWitness::decision(true, Some(Solution::Coloring(c))),
            Some(None) => OptimumWitness::decision(false, None),
            None => OptimumWitness::exceeded(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::check_solution;
    use rand::{Rng, SeedableRng};
    use std::collections::BTreeSet;

    fn rng_for(tag: u64) -> rand_chacha::ChaCha8Rng {
        // PG_SEED perturbs every randomized suite for fresh sampling runs.
        let base = std::env::var("PG_SEED")
            .ok()
            .and_then(|s| s.parse::<u64>().ok())
            .unwrap_or(0);
        rand_chacha::ChaCha8Rng::seed_from_u64(base ^ tag)
    }

    fn random_graph(rng: &mut impl Rng, n: u32, p: f64) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    fn cycle(n: u32) -> Graph {
        Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    fn complete(n: u32) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    fn petersen() -> Graph {
        let mut g = Graph::new(10);
        for i in 0..5u32 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(i + 5, (i + 2) % 5 + 5);
        }
        g
    }

    // Subset-enumeration references for the four optimization problems.
    fn brute(problem: Problem, g: &Graph) -> usize {
        let n = g.n();
        assert!(n <= 16);
        let mut best = match problem {
            Problem::IndependentSet => 0usize,
            _ => n as usize,
        };
        for mask in 0u32..(1 << n) {
            let set: BTreeSet<u32> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let sol = Solution::VertexSet(set.clone());
            if check_solution(problem, g, &sol, None).unwrap() {
                best = match problem {
                    Problem::IndependentSet => best.max(set.len()),
                    _ => best.min(set.len()),
                };
            }
        }
        best
    }

    #[test]
    fn pinned_small_answers() {
        assert_eq!(
            exact_solve(Problem::IndependentSet, &cycle(5), Budget::unlimited()).exact_size(),
            Some(2)
        );
        assert_eq!(
            exact_solve(Problem::FeedbackVertexSet, &complete(4), Budget::unlimited()).exact_size(),
            Some(2)
        );
        assert_eq!(
            exact_solve(Problem::VertexCover, &complete(3), Budget::unlimited()).exact_size(),
            Some(2)
        );
        assert_eq!(
            exact_solve(Problem::HamiltonianCycle, &petersen(), Budget::unlimited())
                .exact_decision(),
            Some(false)
        );
        assert_eq!(
            exact_solve(Problem::ThreeColoring, &complete(4), Budget::unlimited())
                .exact_decision(),
            Some(false)
        );
        assert_eq!(
            exact_solve(Problem::ThreeColoring, &petersen(), Budget::unlimited())
                .exact_decision(),
            Some(true)
        );

        // γ = 1 with witness {1}: vertex 1 neighbors all others here.
        let g = Graph::from_edges(4, &[(0, 1), (0, 3), (1, 2), (1, 3)]).unwrap();
        let w = exact_solve(Problem::DominatingSet, &g, Budget::unlimited());
        assert_eq!(w.exact_size(), Some(1));
        assert_eq!(w.witness, Some(Solution::VertexSet([1].into())));
    }

    #[test]
    fn empty_and_tiny_inputs() {
        let empty = Graph::new(0);
        assert_eq!(
            exact_solve(Problem::IndependentSet, &empty, Budget::unlimited()).exact_size(),
            Some(0)
        );
        assert_eq!(
            exact_solve(Problem::DominatingSet, &empty, Budget::unlimited()).exact_size(),
            Some(0)
        );
        assert_eq!(
            exact_solve(Problem::HamiltonianCycle, &empty, Budget::unlimited()).exact_decision(),
            Some(false)
        );
        assert_eq!(
            exact_solve(Problem::ThreeColoring, &empty, Budget::unlimited()).exact_decision(),
            Some(true)
        );
        let lonely = Graph::new(2);
        assert_eq!(
            exact_solve(Problem::DominatingSet, &lonely, Budget::unlimited()).exact_size(),
            Some(2)
        );
        assert_eq!(
            exact_solve(Problem::HamiltonianCycle, &cycle(3), Budget::unlimited())
                .exact_decision(),
            Some(true)
        );
    }

    #[test]
    fn matches_brute_force_on_random_graphs() {
        let mut rng = rng_for(0x0bf);
        for round in 0..60 {
            let n = 2 + round % 7;
            let g = random_graph(&mut rng, n, 0.4);
            for p in [
                Problem::IndependentSet,
                Problem::VertexCover,
                Problem::DominatingSet,
                Problem::FeedbackVertexSet,
            ] {
                let w = exact_solve(p, &g, Budget::unlimited());
                assert_eq!(w.exact_size(), Some(brute(p, &g)), "{p:?} on {g:?}");
                let budget = match p {
                    Problem::IndependentSet => w.exact_size(),
                    _ => w.exact_size(),
                };
                assert_eq!(
                    check_solution(p, &g, w.witness.as_ref().unwrap(), budget),
                    Ok(true)
                );
            }
        }
    }

    #[test]
    fn decision_solvers_match_enumeration() {
        let mut rng = rng_for(0x0d5);
        for round in 0..40 {
            let n = 3 + round % 5;
            let g = random_graph(&mut rng, n, 0.5);
            let hc = exact_solve(Problem::HamiltonianCycle, &g, Budget::unlimited());
            let cycles = enumerate_hamiltonian_cycles(&g, 10_000);
            assert_eq!(hc.exact_decision(), Some(!cycles.is_empty()));
            if let Some(Solution::CycleOrder(_)) = hc.witness {
                assert_eq!(
                    check_solution(Problem::HamiltonianCycle, &g, hc.witness.as_ref().unwrap(), None),
                    Ok(true)
                );
            }

            let tc = exact_solve(Problem::ThreeColoring, &g, Budget::unlimited());
            let mut any = false;
            let nn = g.n() as usize;
            for mask in 0..3usize.pow(nn as u32) {
                let mut m = mask;
                let mut coloring = Vec::with_capacity(nn);
                for _ in 0..nn {
                    coloring.push((m % 3 + 1) as u8);
                    m /= 3;
                }
                if check_solution(Problem::ThreeColoring, &g, &Solution::Coloring(coloring), None)
                    .unwrap()
                {
                    any = true;
                    break;
                }
            }
            assert_eq!(tc.exact_decision(), Some(any));
            if let Some(w) = &tc.witness {
                assert_eq!(check_solution(Problem::ThreeColoring, &g, w, None), Ok(true));
            }
        }
    }

    #[test]
    fn complementarity_alpha_plus_tau() {
        let mut rng = rng_for(0x0a1);
        for round in 0..30 {
            let n = 1 + round % 10;
            let g = random_graph(&mut rng, n, 0.35);
            let a = exact_solve(Problem::IndependentSet, &g, Budget::unlimited())
                .exact_size()
                .unwrap();
            let t = exact_solve(Problem::VertexCover, &g, Budget::unlimited())
                .exact_size()
                .unwrap();
            assert_eq!(a + t, n as usize);
            // The cover answer must hold up against blind enumeration, not
            // just against the complement identity it is computed through.
            if n <= 10 {
                assert_eq!(t, brute(Problem::VertexCover, &g));
            }
        }
    }

    #[test]
    fn edge_addition_monotonicity() {
        let mut rng = rng_for(0x0e4);
        for _ in 0..25 {
            let n = rng.gen_range(3..=8u32);
            let g = random_graph(&mut rng, n, 0.3);
            let non_edges: Vec<(u32, u32)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| !g.has_edge(u, v))
                .collect();
            if non_edges.is_empty() {
                continue;
            }
            let pick = non_edges[rng.gen_range(0..non_edges.len())];
            let mut h = g.clone();
            h.add_edge(pick.0, pick.1);
            let size = |p: Problem, g: &Graph| {
                exact_solve(p, g, Budget::unlimited()).exact_size().unwrap()
            };
            assert!(size(Problem::IndependentSet, &h) <= size(Problem::IndependentSet, &g));
            assert!(size(Problem::VertexCover, &h) >= size(Problem::VertexCover, &g));
            assert!(size(Problem::DominatingSet, &h) <= size(Problem::DominatingSet, &g));
            assert!(
                size(Problem::FeedbackVertexSet, &h) >= size(Problem::FeedbackVertexSet, &g)
            );
        }
    }

    #[test]
    fn subdivision_identities() {
        let mut rng = rng_for(0x5d1);
        let mut tested = 0;
        while tested < 12 {
            let n = rng.gen_range(3..=9u32);
            let g = random_graph(&mut rng, n, 0.45);
            let edges: Vec<(u32, u32)> = g.edges().collect();
            if edges.is_empty() {
                continue;
            }
            tested += 1;
            let e = edges[rng.gen_range(0..edges.len())];
            let k = rng.gen_range(1..=2usize);
            let size = |p: Problem, g: &Graph| {
                exact_solve(p, g, Budget::unlimited()).exact_size().unwrap()
            };

            // 2k extra vertices on one edge add exactly k independent picks.
            let (g2k, _) = g.subdivide_edge(e, 2 * k).unwrap();
            assert_eq!(
                size(Problem::IndependentSet, &g2k),
                size(Problem::IndependentSet, &g) + k
            );

            // 3k extra vertices on one edge add exactly k dominators.
            let (g3k, _) = g.subdivide_edge(e, 3 * k).unwrap();
            assert_eq!(
                size(Problem::DominatingSet, &g3k),
                size(Problem::DominatingSet, &g) + k
            );

            // One subdivision never changes the feedback number.
            let (g1, _) = g.subdivide_edge(e, 1).unwrap();
            assert_eq!(
                size(Problem::FeedbackVertexSet, &g1),
                size(Problem::FeedbackVertexSet, &g)
            );
        }
    }

    #[test]
    fn budget_exhaustion_reports_no_claim() {
        let g = petersen();
        let w = exact_solve(Problem::HamiltonianCycle, &g, Budget::nodes(3));
        assert_eq!(w.status, OracleStatus::BudgetExceeded);
        assert_eq!(w.value, None);
        let w = exact_solve(Problem::DominatingSet, &g, Budget::nodes(1));
        assert_eq!(w.status, OracleStatus::BudgetExceeded);
    }

    #[test]
    fn k4_cycle_enumeration() {
        let cycles = enumerate_hamiltonian_cycles(&complete(4), 100);
        assert_eq!(cycles.len(), 3);
        for c in &cycles {
            assert_eq!(c[0], 0);
            assert!(c[1] < *c.last().unwrap());
        }
    }
}
