//! Hamiltonian cycle decision and enumeration.
//!
//! Both entry points share one backtracking core: extend a path from vertex
//! 0 in ascending neighbor order, pruning when some unvisited vertex has
//! fewer than two usable neighbors left or when the unvisited region (plus
//! the path ends) falls apart. The pruning rules only discard states that
//! cannot complete to any Hamiltonian cycle, so the same search enumerates
//! exhaustively.

use super::Ticker;
use crate::graph::Graph;
use std::collections::VecDeque;

struct Search<'a> {
    adj: Vec<Vec<u32>>,
    n: usize,
    visited: Vec<bool>,
    path: Vec<u32>,
    t: &'a mut Ticker,
}

impl<'a> Search<'a> {
    /// Counts neighbors of `v` that are unvisited or a path end.
    fn usable_degree(&self, v: u32, tail: u32) -> usize {
        self.adj[v as usize]
            .iter()
            .filter(|&&w| !self.visited[w as usize] || w == tail || w == 0)
            .count()
    }

    fn region_connected(&self, tail: u32) -> bool {
        // The unvisited vertices together with both path ends must form one
        // connected region, otherwise some stretch can never be reached.
        let mut need = 0usize;
        for v in 0..self.n {
            if !self.visited[v] {
                need += 1;
            }
        }
        if need == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut q = VecDeque::from([tail]);
        seen[tail as usize] = true;
        let mut reached = 0usize;
        let mut hit_zero = false;
        while let Some(u) = q.pop_front() {
            for &w in &self.adj[u as usize] {
                if w == 0 {
                    hit_zero = true;
                }
                if !seen[w as usize] && !self.visited[w as usize] {
                    seen[w as usize] = true;
                    reached += 1;
                    q.push_back(w);
                }
            }
        }
        reached == need && hit_zero
    }

    /// Returns false when the budget ran out; `found` returns false to stop.
    fn extend(&mut self, found: &mut dyn FnMut(&[u32]) -> bool) -> bool {
        if !self.t.tick() {
            return false;
        }
        let tail = *self.path.last().unwrap();
        if self.path.len() == self.n {
            if self.adj[tail as usize].contains(&0) && !found(&self.path) {
                return false;
            }
            return true;
        }
        for v in 0..self.n as u32 {
            if !self.visited[v as usize] && self.usable_degree(v, tail) < 2 {
                return true;
            }
        }
        if !self.region_connected(tail) {
            return true;
        }
        let nexts: Vec<u32> = self.adj[tail as usize]
            .iter()
            .copied()
            .filter(|&w| !self.visited[w as usize])
            .collect();
        for w in nexts {
            self.visited[w as usize] = true;
            self.path.push(w);
            let keep_going = self.extend(found);
            self.path.pop();
            self.visited[w as usize] = false;
            if !keep_going {
                return false;
            }
        }
        true
    }
}

fn run(g: &Graph, t: &mut Ticker, found: &mut dyn FnMut(&[u32]) -> bool) -> bool {
    let n = g.n() as usize;
    if n < 3 || g.degrees().iter().any(|&d| d < 2) || !g.is_connected() {
        return true;
    }
    let mut s = Search {
        adj: g.adj(),
        n,
        visited: vec![false; n],
        path: vec![0],
        t,
    };
    s.visited[0] = true;
    s.extend(found)
}

/// `None` = budget exhausted; `Some(None)` = no cycle; otherwise a witness
/// vertex order starting at 0.
pub(super) fn hamiltonian_cycle(g: &Graph, t: &mut Ticker) -> Option<Option<Vec<u32>>> {
    let mut hit: Option<Vec<u32>> = None;
    let completed = run(g, t, &mut |p| {
        hit = Some(p.to_vec());
        false
    });
    match hit {
        Some(cycle) => Some(Some(cycle)),
        None if completed && !t.exceeded() => Some(None),
        None => None,
    }
}

/// Every Hamiltonian cycle of `g`, each reported once in canonical form:
/// starting at vertex 0, with the smaller of the two neighbors of 0 second.
/// Stops after `cap` cycles. Intended for small gadget graphs.
pub fn enumerate_hamiltonian_cycles(g: &Graph, cap: usize) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = Vec::new();
    let mut t = Ticker::new(super::Budget::unlimited());
    run(g, &mut t, &mut |p| {
        if p[1] < p[p.len() - 1] {
            out.push(p.to_vec());
        }
        out.len() < cap
    });
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::Budget;

    #[test]
    fn cycles_and_non_cycles() {
        let mut t = Ticker::new(Budget::unlimited());
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(
            hamiltonian_cycle(&c5, &mut t).unwrap().unwrap(),
            vec![0, 1, 2, 3, 4]
        );

        // A path has endpoints of degree 1.
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(hamiltonian_cycle(&p4, &mut t).unwrap(), None);

        // Two triangles sharing a vertex: the cut vertex blocks any tour.
        let bowtie =
            Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(hamiltonian_cycle(&bowtie, &mut t).unwrap(), None);
    }

    #[test]
    fn enumeration_is_canonical_and_complete() {
        let mut k4 = Graph::new(4);
        for u in 0..4 {
            for w in u + 1..4 {
                k4.add_edge(u, w);
            }
        }
        let cycles = enumerate_hamiltonian_cycles(&k4, 100);
        assert_eq!(
            cycles,
            vec![vec![0, 1, 2, 3], vec![0, 1, 3, 2], vec![0, 2, 1, 3]]
        );

        // The cube graph has six Hamiltonian cycles.
        let cube = Graph::from_edges(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (0, 3),
                (4, 5),
                (5, 6),
                (6, 7),
                (4, 7),
                (0, 4),
                (1, 5),
                (2, 6),
                (3, 7),
            ],
        )
        .unwrap();
        assert_eq!(enumerate_hamiltonian_cycles(&cube, 100).len(), 6);
    }
}
