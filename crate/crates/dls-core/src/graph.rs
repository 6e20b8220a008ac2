//! Bitset-backed simple graphs with exact metric and combinatorial invariants.
//!
//! Vertices are labeled `0..n-1` and each adjacency row is a single `u64`,
//! which caps the order at 64. All distance quantities (transmissions, Wiener
//! index, diameter, `R1`) are computed in integer arithmetic; floating point
//! only appears once matrices reach the eigensolver.

use crate::eigen::SymmetricMatrix;
use thiserror::Error;

/// Adjacency rows are machine words, so at most 64 vertices.
pub const MAX_VERTICES: usize = 64;

/// Exact chromatic number is only offered up to this order.
pub const CHROMATIC_CAP: usize = 32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count {0} exceeds the cap of {MAX_VERTICES}")]
    VertexCapExceeded(usize),
    #[error("edge endpoint {vertex} out of range for order {n}")]
    EndpointOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("edge ({0}, {1}) is not present")]
    EdgeAbsent(usize, usize),
    #[error("order {0} exceeds the exact chromatic-number cap of {CHROMATIC_CAP}")]
    ChromaticCapExceeded(usize),
    #[error("graph has no vertices")]
    Empty,
}

/// Simple undirected labeled graph.
///
/// Invariants: adjacency is symmetric, there are no self-loops, and rows only
/// use the low `n` bits.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::VertexCapExceeded(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list; duplicate edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::EndpointOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::EndpointOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.add_edge_unchecked(u, v);
        }
        Ok(g)
    }

    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Neighbor bitset of `v`.
    pub fn adj(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1u64 << v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut row = self.adj[u] >> (u + 1).min(63);
            // shifting by u+1 == 64 is UB-adjacent; row above vertex 62 is empty anyway
            if u + 1 >= 64 {
                row = 0;
            }
            let mut bits = row;
            while bits != 0 {
                let off = bits.trailing_zeros() as usize;
                out.push((u, u + 1 + off));
                bits &= bits - 1;
            }
        }
        out
    }

    fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Complement graph; an involution.
    pub fn complement(&self) -> Graph {
        let full = self.full_mask();
        let adj = (0..self.n)
            .map(|v| full & !self.adj[v] & !(1u64 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Removes an existing edge.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::EdgeAbsent(u, v));
        }
        let mut g = self.clone();
        g.adj[u] &= !(1u64 << v);
        g.adj[v] &= !(1u64 << u);
        Ok(g)
    }

    /// Component count plus a per-vertex component id.
    pub fn connected_components(&self) -> (usize, Vec<usize>) {
        let mut labels = vec![usize::MAX; self.n];
        let mut count = 0;
        for s in 0..self.n {
            if labels[s] != usize::MAX {
                continue;
            }
            let mut comp = 1u64 << s;
            loop {
                let mut next = 0u64;
                let mut bits = comp;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    next |= self.adj[v];
                }
                next &= !comp;
                if next == 0 {
                    break;
                }
                comp |= next;
            }
            let mut bits = comp;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                labels[v] = count;
            }
            count += 1;
        }
        (count, labels)
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.connected_components().0 == 1
    }

    /// BFS from every vertex; only defined for connected graphs.
    pub fn distance_summary(&self) -> Result<DistanceSummary, GraphError> {
        if self.n == 0 {
            return Err(GraphError::Empty);
        }
        let (components, _) = self.connected_components();
        if components != 1 {
            return Err(GraphError::Disconnected { components });
        }
        let n = self.n;
        let full = self.full_mask();
        let mut dist = vec![0u32; n * n];
        for s in 0..n {
            let mut visited = 1u64 << s;
            let mut frontier = visited;
            let mut d = 0u32;
            while visited != full {
                d += 1;
                let mut next = 0u64;
                let mut bits = frontier;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    next |= self.adj[v];
                }
                next &= !visited;
                debug_assert!(next != 0, "connected graph must keep expanding");
                let mut nb = next;
                while nb != 0 {
                    let v = nb.trailing_zeros() as usize;
                    nb &= nb - 1;
                    dist[s * n + v] = d;
                }
                visited |= next;
                frontier = next;
            }
        }
        let tr: Vec<u64> = (0..n)
            .map(|v| dist[v * n..(v + 1) * n].iter().map(|&d| d as u64).sum())
            .collect();
        let tr_max = *tr.iter().max().unwrap();
        let tr_min = *tr.iter().min().unwrap();
        let wiener = tr.iter().sum::<u64>() / 2;
        let diameter = dist.iter().copied().max().unwrap_or(0);
        let mut r1 = tr.iter().map(|&t| t * t).sum::<u64>();
        for u in 0..n {
            for v in (u + 1)..n {
                let d = dist[u * n + v] as u64;
                r1 += 2 * d * d;
            }
        }
        Ok(DistanceSummary {
            n,
            dist,
            tr,
            tr_max,
            tr_min,
            wiener,
            diameter,
            r1,
        })
    }

    /// Ordinary Laplacian `Diag(deg) - A`.
    pub fn laplacian_matrix(&self) -> SymmetricMatrix {
        let mut m = SymmetricMatrix::zeros(self.n);
        for v in 0..self.n {
            m.set(v, v, self.degree(v) as f64);
        }
        for (u, v) in self.edges() {
            m.set_sym(u, v, -1.0);
        }
        m
    }

    /// Exact independence number, computed as a maximum clique of the
    /// complement with a greedy-coloring pruning bound.
    pub fn independence_number(&self) -> usize {
        if self.n == 0 {
            return 0;
        }
        let comp = self.complement();
        let mut best = 0;
        clique_expand(&comp.adj, comp.full_mask(), 0, &mut best);
        best
    }

    /// Exact chromatic number by iterative deepening on a backtracking
    /// k-colorability test, seeded with a greedy clique lower bound.
    pub fn chromatic_number(&self) -> Result<usize, GraphError> {
        if self.n > CHROMATIC_CAP {
            return Err(GraphError::ChromaticCapExceeded(self.n));
        }
        if self.n == 0 {
            return Err(GraphError::Empty);
        }
        if self.edge_count() == 0 {
            return Ok(1);
        }
        let lb = self.greedy_clique_size().max(2);
        for k in lb..self.n {
            if self.is_k_colorable(k) {
                return Ok(k);
            }
        }
        Ok(self.n)
    }

    fn greedy_clique_size(&self) -> usize {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        let mut clique = 0u64;
        let mut size = 0;
        for v in order {
            if clique & !self.adj[v] == 0 {
                clique |= 1u64 << v;
                size += 1;
            }
        }
        size
    }

    /// Backtracking test, with the standard symmetry break of only allowing
    /// one fresh color at each step.
    pub fn is_k_colorable(&self, k: usize) -> bool {
        if k == 0 {
            return self.n == 0;
        }
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        let mut colors = vec![usize::MAX; self.n];
        self.color_rec(&order, 0, k, 0, &mut colors)
    }

    fn color_rec(
        &self,
        order: &[usize],
        idx: usize,
        k: usize,
        used: usize,
        colors: &mut [usize],
    ) -> bool {
        if idx == order.len() {
            return true;
        }
        let v = order[idx];
        let mut forbidden = 0u64;
        let mut nb = self.adj[v];
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if colors[u] != usize::MAX {
                forbidden |= 1u64 << colors[u];
            }
        }
        let limit = (used + 1).min(k);
        for c in 0..limit {
            if forbidden & (1u64 << c) != 0 {
                continue;
            }
            colors[v] = c;
            if self.color_rec(order, idx + 1, k, used.max(c + 1), colors) {
                return true;
            }
        }
        colors[v] = usize::MAX;
        false
    }
}

/// Tomita-style expansion: candidates in `p`, current clique size `size`.
fn clique_expand(adj: &[u64], p: u64, size: usize, best: &mut usize) {
    if p == 0 {
        if size > *best {
            *best = size;
        }
        return;
    }
    // Greedy coloring of the candidate set; color number bounds the clique.
    let mut order: Vec<(usize, usize)> = Vec::with_capacity(p.count_ones() as usize);
    let mut uncolored = p;
    let mut color = 0usize;
    while uncolored != 0 {
        color += 1;
        let mut candidates = uncolored;
        while candidates != 0 {
            let v = candidates.trailing_zeros() as usize;
            candidates &= !(1u64 << v);
            candidates &= !adj[v];
            uncolored &= !(1u64 << v);
            order.push((v, color));
        }
    }
    let mut remaining = p;
    for &(v, c) in order.iter().rev() {
        if size + c <= *best {
            return;
        }
        clique_expand(adj, remaining & adj[v], size + 1, best);
        remaining &= !(1u64 << v);
    }
}

/// Distance matrix of a connected graph together with the derived scalars.
#[derive(Clone, Debug)]
pub struct DistanceSummary {
    pub n: usize,
    dist: Vec<u32>,
    pub tr: Vec<u64>,
    pub tr_max: u64,
    pub tr_min: u64,
    pub wiener: u64,
    pub diameter: u32,
    /// `R1 = sum_i Tr(i)^2 + 2 * sum_{i<j} d_ij^2`.
    pub r1: u64,
}

impl DistanceSummary {
    pub fn dist(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn from_edge_list_examples() {
        let p4 = path(4);
        assert_eq!(p4.edge_count(), 3);
        assert!(p4.has_edge(1, 2) && p4.has_edge(2, 1));

        let k1 = Graph::from_edge_list(1, &[]).unwrap();
        assert_eq!(k1.n(), 1);
        assert_eq!(k1.edge_count(), 0);

        let k4 = complete(4);
        assert!((0..4).all(|v| k4.degree(v) == 3));
    }

    #[test]
    fn from_edge_list_rejections() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(GraphError::EndpointOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edge_list(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert!(Graph::empty(65).is_err());
    }

    #[test]
    fn complement_examples() {
        let k4 = complete(4);
        assert_eq!(k4.complement().edge_count(), 0);

        let p4 = path(4);
        let mut comp_edges = p4.complement().edges();
        comp_edges.sort();
        assert_eq!(comp_edges, vec![(0, 2), (0, 3), (1, 3)]);

        // star S4, center 0
        let s4 = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let c = s4.complement();
        assert_eq!(c.degree(0), 0);
        assert_eq!(c.edge_count(), 3); // K3 on {1,2,3}

        assert_eq!(p4.complement().complement(), p4);
    }

    #[test]
    fn connected_components_examples() {
        assert_eq!(path(4).connected_components().0, 1);
        let s4 = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(s4.complement().connected_components().0, 2);
        assert_eq!(Graph::empty(4).unwrap().connected_components().0, 4);
        let (_, labels) = s4.complement().connected_components();
        assert_eq!(labels[1], labels[2]);
        assert_ne!(labels[0], labels[1]);
    }

    #[test]
    fn distance_summary_k4() {
        let s = complete(4).distance_summary().unwrap();
        assert_eq!(s.tr, vec![3, 3, 3, 3]);
        assert_eq!(s.wiener, 6);
        assert_eq!(s.diameter, 1);
        assert_eq!(s.r1, 4 * 9 + 2 * 6);
    }

    #[test]
    fn distance_summary_p4() {
        let s = path(4).distance_summary().unwrap();
        assert_eq!(s.tr, vec![6, 4, 4, 6]);
        assert_eq!(s.wiener, 10);
        assert_eq!(s.diameter, 3);
    }

    #[test]
    fn distance_summary_c4() {
        let s = cycle(4).distance_summary().unwrap();
        assert_eq!(s.tr, vec![4, 4, 4, 4]);
        assert_eq!(s.wiener, 8);
        assert_eq!(s.diameter, 2);
    }

    #[test]
    fn distance_summary_rejects_disconnected() {
        let g = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            g.distance_summary().unwrap_err(),
            GraphError::Disconnected { components: 2 }
        );
    }

    #[test]
    fn independence_number_examples() {
        assert_eq!(complete(5).independence_number(), 1);
        // K_{3,2}
        let mut edges = Vec::new();
        for u in 0..3 {
            for v in 3..5 {
                edges.push((u, v));
            }
        }
        let k32 = Graph::from_edge_list(5, &edges).unwrap();
        assert_eq!(k32.independence_number(), 3);
        assert_eq!(path(4).independence_number(), 2);
    }

    #[test]
    fn chromatic_number_examples() {
        assert_eq!(complete(5).chromatic_number().unwrap(), 5);
        assert_eq!(cycle(4).chromatic_number().unwrap(), 2);
        // K_{2,2,2} octahedron
        let mut edges = Vec::new();
        for u in 0..6 {
            for v in (u + 1)..6 {
                if u / 2 != v / 2 {
                    edges.push((u, v));
                }
            }
        }
        let octa = Graph::from_edge_list(6, &edges).unwrap();
        assert_eq!(octa.chromatic_number().unwrap(), 3);
        assert_eq!(cycle(5).chromatic_number().unwrap(), 3);
    }

    #[test]
    fn laplacian_examples() {
        let k2 = complete(2);
        let l = k2.laplacian_matrix();
        assert_eq!(l.get(0, 0), 1.0);
        assert_eq!(l.get(0, 1), -1.0);

        let k3 = complete(3);
        let l = k3.laplacian_matrix();
        for i in 0..3 {
            let row_sum: f64 = (0..3).map(|j| l.get(i, j)).sum();
            assert_eq!(row_sum, 0.0);
        }
    }

    #[test]
    fn delete_edge_examples() {
        let k4me = complete(4).delete_edge(0, 1).unwrap();
        let mut degs: Vec<_> = (0..4).map(|v| k4me.degree(v)).collect();
        degs.sort();
        assert_eq!(degs, vec![2, 2, 3, 3]);

        assert_eq!(cycle(4).delete_edge(0, 1).unwrap().edge_count(), 3);
        assert!(cycle(4).delete_edge(0, 1).unwrap().is_connected());

        let broken = path(4).delete_edge(0, 1).unwrap();
        assert!(!broken.is_connected());

        assert_eq!(
            path(4).delete_edge(0, 2).unwrap_err(),
            GraphError::EdgeAbsent(0, 2)
        );
    }

    #[test]
    fn chromatic_cap_enforced() {
        let g = Graph::empty(33).unwrap();
        assert_eq!(
            g.chromatic_number().unwrap_err(),
            GraphError::ChromaticCapExceeded(33)
        );
    }
}
