//! Simple undirected graphs over contiguous vertex ids with bitset adjacency.

mod io;
mod iso;
mod set;

pub use io::{parse_graph, write_graph, ParseError};
pub use iso::find_isomorphism;
pub use set::VertexSet;

/// A finite simple undirected graph on vertices `0..n`.
///
/// Adjacency rows are bitsets so pair queries are O(1) and neighborhood
/// intersections are word-parallel. Optional text labels travel through
/// [`Graph::induced`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    rows: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl serde::Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Graph", 2)?;
        st.serialize_field("n", &self.n())?;
        st.serialize_field("edges", &self.edges().collect::<Vec<_>>())?;
        st.end()
    }
}

/// An induced subgraph together with the host id of each of its vertices.
#[derive(Clone, Debug)]
pub struct Induced {
    pub graph: Graph,
    /// `map[i]` is the host vertex that became vertex `i`.
    pub map: Vec<usize>,
}

impl Induced {
    /// Lifts a set of subgraph vertices back to host ids.
    pub fn lift_set(&self, s: &VertexSet, host_n: usize) -> VertexSet {
        VertexSet::from_iter(host_n, s.iter().map(|v| self.map[v]))
    }
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { rows: vec![VertexSet::new(n); n], labels: None }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0);
        }
        g
    }

    /// P4 on 0-1-2-3 plus vertex 4 adjacent to all of them.
    pub fn gem() -> Self {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)])
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n(), "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Adds the edge `uv`. Adding an existing edge is a no-op.
    ///
    /// Panics on a self-loop or an out-of-range id.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop on {u}");
        assert!(u < self.n() && v < self.n(), "edge ({u},{v}) out of range");
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u].remove(v);
        self.rows[v].remove(u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.n())
    }

    pub fn set<I: IntoIterator<Item = usize>>(&self, it: I) -> VertexSet {
        VertexSet::from_iter(self.n(), it)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.rows[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Vertices outside `s` with at least one neighbor in `s`.
    pub fn neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = self.empty_set();
        for v in s {
            out.union_with(&self.rows[v]);
        }
        out.difference_with(s);
        out
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            let mut rest = s.clone();
            rest.remove(v);
            rest.is_subset(&self.rows[v])
        })
    }

    pub fn is_stable(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.rows[v].is_disjoint(s))
    }

    /// Every vertex of `a` is adjacent to every vertex of `b`.
    pub fn is_complete_to(&self, a: &VertexSet, b: &VertexSet) -> bool {
        a.iter().all(|v| b.is_subset(&self.rows[v]))
    }

    /// No edge between `a` and `b`.
    pub fn is_anticomplete_to(&self, a: &VertexSet, b: &VertexSet) -> bool {
        a.iter().all(|v| self.rows[v].is_disjoint(b))
    }

    pub fn has_neighbor_in(&self, v: usize, s: &VertexSet) -> bool {
        self.rows[v].intersects(s)
    }

    /// Subgraph induced by `s`, re-indexed `0..|s|` in ascending host order.
    pub fn induced(&self, s: &VertexSet) -> Induced {
        let map = s.to_vec();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(map.len());
        for (i, &v) in map.iter().enumerate() {
            for w in self.rows[v].iter() {
                let j = index[w];
                if j != usize::MAX && j > i {
                    g.add_edge(i, j);
                }
            }
        }
        if let Some(labels) = &self.labels {
            g.labels = Some(map.iter().map(|&v| labels[v].clone()).collect());
        }
        Induced { graph: g, map }
    }

    /// Subgraph induced by the complement of `s`.
    pub fn without(&self, s: &VertexSet) -> Induced {
        self.induced(&s.complement())
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::new(n);
        for v in 0..n {
            let mut row = self.rows[v].complement();
            row.remove(v);
            g.rows[v] = row;
        }
        g.labels = self.labels.clone();
        g
    }

    /// Connected components of `G[s]`, ordered by least vertex.
    pub fn components_within(&self, s: &VertexSet) -> Vec<VertexSet> {
        let mut left = s.clone();
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::singleton(self.n(), start);
            let mut frontier = comp.clone();
            while !frontier.is_empty() {
                let mut next = self.neighborhood(&frontier);
                next.intersect_with(&left);
                next.difference_with(&comp);
                comp.union_with(&next);
                frontier = next;
            }
            left.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}
