//! Circulant graphs `C_n(d1, d2)` and the element adjacency used by total
//! colourings.
//!
//! Elements are numbered densely: vertex `i` is element `i`, the short edge
//! `v_i v_{i+d1}` is element `n + i` and the long edge `v_i v_{i+d2}` is
//! element `2n + i`. This numbering coincides with the `(kind, index)` order
//! used everywhere else in the crate.

use std::fmt::{self, Write as _};

use crate::error::{Error, Result};

/// Largest order accepted by [`CirculantGraph::independence_number`].
pub const INDEPENDENCE_LIMIT: usize = 64;

/// Which track of a total colouring an element lives on.
///
/// `EdgeStep1` and `EdgeStep3` name the `d1` and `d2` edge classes; for the
/// `C_n(1,3)` family these are the steps 1 and 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ElementKind {
    Vertex,
    EdgeStep1,
    EdgeStep3,
}

/// A vertex or edge of a circulant graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element {
    pub kind: ElementKind,
    pub index: usize,
}

impl Element {
    pub fn vertex(index: usize) -> Self {
        Self {
            kind: ElementKind::Vertex,
            index,
        }
    }

    pub fn edge1(index: usize) -> Self {
        Self {
            kind: ElementKind::EdgeStep1,
            index,
        }
    }

    pub fn edge3(index: usize) -> Self {
        Self {
            kind: ElementKind::EdgeStep3,
            index,
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ElementKind::Vertex => write!(f, "v{}", self.index),
            ElementKind::EdgeStep1 => write!(f, "e1_{}", self.index),
            ElementKind::EdgeStep3 => write!(f, "e3_{}", self.index),
        }
    }
}

/// The 4-regular circulant graph `C_n(d1, d2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CirculantGraph {
    n: usize,
    d1: usize,
    d2: usize,
    /// Element adjacency, sorted, indexed by element id.
    neighbours: Vec<[usize; 8]>,
}

impl CirculantGraph {
    /// Builds `C_n(d1, d2)`; requires `1 <= d1 < d2 <= (n - 1) / 2`.
    pub fn new(n: usize, d1: usize, d2: usize) -> Result<Self> {
        if d1 < 1 || d1 >= d2 || n < 1 || d2 > (n - 1) / 2 {
            return Err(Error::InvalidGraph { n, d1, d2 });
        }
        let mut g = Self {
            n,
            d1,
            d2,
            neighbours: Vec::with_capacity(3 * n),
        };
        for id in 0..3 * n {
            let mut adj = [0usize; 8];
            for (slot, e) in adj.iter_mut().zip(g.compute_adjacent(g.element_at(id))) {
                *slot = g.element_id(e);
            }
            adj.sort_unstable();
            g.neighbours.push(adj);
        }
        Ok(g)
    }

    /// Builds `C_n(1, 3)`.
    pub fn c13(n: usize) -> Result<Self> {
        Self::new(n, 1, 3)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn offsets(&self) -> (usize, usize) {
        (self.d1, self.d2)
    }

    pub fn is_c13(&self) -> bool {
        self.d1 == 1 && self.d2 == 3
    }

    pub fn element_count(&self) -> usize {
        3 * self.n
    }

    pub fn edge_count(&self) -> usize {
        2 * self.n
    }

    /// Dense id of an element; see the module docs for the numbering.
    pub fn element_id(&self, e: Element) -> usize {
        debug_assert!(e.index < self.n);
        match e.kind {
            ElementKind::Vertex => e.index,
            ElementKind::EdgeStep1 => self.n + e.index,
            ElementKind::EdgeStep3 => 2 * self.n + e.index,
        }
    }

    pub fn element_at(&self, id: usize) -> Element {
        let (kind, index) = match id / self.n {
            0 => (ElementKind::Vertex, id),
            1 => (ElementKind::EdgeStep1, id - self.n),
            2 => (ElementKind::EdgeStep3, id - 2 * self.n),
            _ => panic!("element id {id} out of range for n = {}", self.n),
        };
        Element { kind, index }
    }

    pub fn contains(&self, e: Element) -> bool {
        e.index < self.n
    }

    /// Endpoints of an edge element, `None` for a vertex.
    pub fn endpoints(&self, e: Element) -> Option<(usize, usize)> {
        match e.kind {
            ElementKind::Vertex => None,
            ElementKind::EdgeStep1 => Some((e.index, (e.index + self.d1) % self.n)),
            ElementKind::EdgeStep3 => Some((e.index, (e.index + self.d2) % self.n)),
        }
    }

    /// The four vertex neighbours of `v`, as `[v+d1, v-d1, v+d2, v-d2]`.
    pub fn vertex_neighbours(&self, v: usize) -> [usize; 4] {
        let n = self.n;
        [
            (v + self.d1) % n,
            (v + n - self.d1) % n,
            (v + self.d2) % n,
            (v + n - self.d2) % n,
        ]
    }

    pub fn vertices_adjacent(&self, a: usize, b: usize) -> bool {
        self.vertex_neighbours(a).contains(&b)
    }

    /// The four edges incident with vertex `v`.
    pub fn incident_edges(&self, v: usize) -> [Element; 4] {
        let n = self.n;
        [
            Element::edge1(v),
            Element::edge1((v + n - self.d1) % n),
            Element::edge3(v),
            Element::edge3((v + n - self.d2) % n),
        ]
    }

    /// Elements that must receive a different colour from `e`: for a vertex
    /// its neighbours and incident edges, for an edge its endpoints and the
    /// edges sharing an endpoint with it. Never contains `e`.
    pub fn adjacent_elements(&self, e: Element) -> Vec<Element> {
        assert!(self.contains(e), "{e} is not an element of C_{}", self.n);
        self.neighbours[self.element_id(e)]
            .iter()
            .map(|&id| self.element_at(id))
            .collect()
    }

    /// Adjacency by dense element id (sorted).
    pub fn adjacent_ids(&self, id: usize) -> &[usize; 8] {
        &self.neighbours[id]
    }

    pub fn elements_adjacent(&self, a: Element, b: Element) -> bool {
        self.neighbours[self.element_id(a)]
            .binary_search(&self.element_id(b))
            .is_ok()
    }

    fn compute_adjacent(&self, e: Element) -> Vec<Element> {
        match self.endpoints(e) {
            None => {
                let mut out: Vec<Element> = self
                    .vertex_neighbours(e.index)
                    .into_iter()
                    .map(Element::vertex)
                    .collect();
                out.extend(self.incident_edges(e.index));
                out
            }
            Some((a, b)) => {
                let mut out = vec![Element::vertex(a), Element::vertex(b)];
                for v in [a, b] {
                    out.extend(self.incident_edges(v).into_iter().filter(|&f| f != e));
                }
                out
            }
        }
    }

    fn vertex_masks(&self) -> Vec<u64> {
        (0..self.n)
            .map(|v| self.vertex_neighbours(v).iter().fold(0u64, |m, &u| m | 1 << u))
            .collect()
    }

    /// Exact size of a maximum independent vertex set, by branch and bound.
    pub fn independence_number(&self) -> Result<usize> {
        if self.n > INDEPENDENCE_LIMIT {
            return Err(Error::SizeGuard {
                n: self.n,
                limit: INDEPENDENCE_LIMIT,
            });
        }
        let adj = self.vertex_masks();
        let all = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        let mut best = greedy_independent_set(&adj, all);
        mis_branch(&adj, all, 0, &mut best);
        Ok(best)
    }

    /// True iff the graph is `K_{4,4}`: bipartite with parts of size four and
    /// every cross pair adjacent.
    pub fn is_complete_bipartite_4_4(&self) -> bool {
        if self.n != 8 {
            return false;
        }
        let mut side = [None::<bool>; 8];
        side[0] = Some(false);
        let mut stack = vec![0usize];
        while let Some(v) = stack.pop() {
            let s = side[v].unwrap();
            for u in self.vertex_neighbours(v) {
                match side[u] {
                    None => {
                        side[u] = Some(!s);
                        stack.push(u);
                    }
                    Some(t) if t == s => return false,
                    Some(_) => {}
                }
            }
        }
        let left: Vec<usize> = (0..8).filter(|&v| side[v] == Some(false)).collect();
        let right: Vec<usize> = (0..8).filter(|&v| side[v] == Some(true)).collect();
        left.len() == 4
            && right.len() == 4
            && left
                .iter()
                .all(|&a| right.iter().all(|&b| self.vertices_adjacent(a, b)))
    }

    /// Graphviz rendering: vertices `v0..v{n-1}`, then the `d1` edges and the
    /// `d2` edges in index order.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph C{}_{}_{} {{", self.n, self.d1, self.d2);
        for v in 0..self.n {
            let _ = writeln!(out, "  v{v};");
        }
        for id in self.n..3 * self.n {
            let (a, b) = self.endpoints(self.element_at(id)).unwrap();
            let _ = writeln!(out, "  v{a} -- v{b};");
        }
        out.push_str("}\n");
        out
    }
}

fn greedy_independent_set(adj: &[u64], mut candidates: u64) -> usize {
    let mut size = 0;
    while candidates != 0 {
        // smallest remaining degree first
        let v = iter_bits(candidates)
            .min_by_key(|&v| (adj[v] & candidates).count_ones())
            .unwrap();
        candidates &= !(adj[v] | 1 << v);
        size += 1;
    }
    size
}

fn mis_branch(adj: &[u64], mut candidates: u64, mut taken: usize, best: &mut usize) {
    // Vertices with at most one remaining neighbour can always be taken.
    loop {
        let low = iter_bits(candidates).find(|&v| (adj[v] & candidates).count_ones() <= 1);
        match low {
            Some(v) => {
                candidates &= !(adj[v] | 1 << v);
                taken += 1;
            }
            None => break,
        }
    }
    if candidates == 0 {
        *best = (*best).max(taken);
        return;
    }
    if taken + upper_bound(adj, candidates) <= *best {
        return;
    }
    let v = iter_bits(candidates)
        .max_by_key(|&v| ((adj[v] & candidates).count_ones(), std::cmp::Reverse(v)))
        .unwrap();
    mis_branch(adj, candidates & !(adj[v] | 1 << v), taken + 1, best);
    mis_branch(adj, candidates & !(1 << v), taken, best);
}

/// `|P| - ceil(m / maxdeg)`: the complement of an independent set is a
/// vertex cover, and each cover vertex covers at most `maxdeg` edges.
fn upper_bound(adj: &[u64], candidates: u64) -> usize {
    let (mut degree_sum, mut max_degree) = (0usize, 0usize);
    for v in iter_bits(candidates) {
        let d = (adj[v] & candidates).count_ones() as usize;
        degree_sum += d;
        max_degree = max_degree.max(d);
    }
    let size = candidates.count_ones() as usize;
    if max_degree == 0 {
        return size;
    }
    let edges = degree_sum / 2;
    size - edges.div_ceil(max_degree)
}

fn iter_bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}
