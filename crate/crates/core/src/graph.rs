//! Simple undirected graphs with sorted adjacency lists.
//!
//! Vertex identifiers are dense and zero-based. Every constructor and
//! transformation keeps the graph simple: no self-loops, no parallel edges,
//! symmetric adjacency.

use crate::error::{Error, Result};

pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            labels: None,
        }
    }

    /// Build from an edge list, rejecting self-loops and duplicate edges.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            if !g.add_edge(u, v)? {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(g)
    }

    /// Build from adjacency lists that are already sorted, symmetric and
    /// loop-free. Callers vouch for that; debug builds re-check.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<VertexId>>) -> Self {
        let g = Graph { adj, labels: None };
        debug_assert!(g.validate().is_ok());
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            g.adj[u] = (0..n).filter(|&v| v != u).collect();
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Adds `{u, v}`. Returns `false` when the edge was already present.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<bool> {
        let n = self.adj.len();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: x,
                    count: n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(true)
            }
        }
    }

    /// Adds every missing edge among `vertices`.
    pub fn add_clique(&mut self, vertices: &[VertexId]) -> Result<()> {
        for (i, &u) in vertices.iter().enumerate() {
            for &v in &vertices[i + 1..] {
                self.add_edge(u, v)?;
            }
        }
        Ok(())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: VertexId) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn set_labels(&mut self, labels: Vec<String>) -> Result<()> {
        if labels.len() != self.adj.len() {
            return Err(Error::InvalidArgument(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.adj.len()
            )));
        }
        self.labels = Some(labels);
        Ok(())
    }

    /// Re-checks the structural invariants.
    pub fn validate(&self) -> Result<()> {
        let n = self.adj.len();
        for (u, ns) in self.adj.iter().enumerate() {
            for w in ns.windows(2) {
                if w[0] >= w[1] {
                    return Err(Error::DuplicateEdge(u, w[1]));
                }
            }
            for &v in ns {
                if v >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        count: n,
                    });
                }
                if v == u {
                    return Err(Error::SelfLoop(u));
                }
                if self.adj[v].binary_search(&u).is_err() {
                    return Err(Error::InvalidArgument(format!(
                        "asymmetric adjacency between {u} and {v}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Δ(G); zero for empty and edgeless graphs.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges()
            .all(|(u, v)| !sorted_intersect(&self.adj[u], &self.adj[v]))
    }

    /// Merges non-adjacent `a` and `b` into one vertex whose neighbourhood is
    /// the union of theirs. The merged vertex keeps `min(a, b)`; identifiers
    /// above `max(a, b)` shift down by one.
    pub fn identify_vertices(&self, a: VertexId, b: VertexId) -> Result<Graph> {
        let n = self.adj.len();
        for x in [a, b] {
            if x >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: x,
                    count: n,
                });
            }
        }
        if a == b {
            return Err(Error::IdentifySameVertex(a));
        }
        if self.has_edge(a, b) {
            return Err(Error::IdentifyAdjacent(a, b));
        }
        Ok(self.identify_pairs(&[(a, b)])?.0)
    }

    /// Identifies every pair in `pairs` at once (transitively). Each merged
    /// class takes the position of its smallest member and identifiers stay
    /// dense. Returns the quotient graph and the old-to-new vertex map.
    ///
    /// Fails if two vertices of one class are adjacent.
    pub fn identify_pairs(&self, pairs: &[(VertexId, VertexId)]) -> Result<(Graph, Vec<VertexId>)> {
        let n = self.adj.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(a, b) in pairs {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: x,
                        count: n,
                    });
                }
            }
            if a == b {
                return Err(Error::IdentifySameVertex(a));
            }
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                // Smaller root wins so each class root is its minimum member.
                let (lo, hi) = (ra.min(rb), ra.max(rb));
                parent[hi] = lo;
            }
        }
        let roots: Vec<usize> = (0..n).map(|v| find(&mut parent, v)).collect();
        let mut new_id = vec![usize::MAX; n];
        let mut count = 0;
        for v in 0..n {
            if roots[v] == v {
                new_id[v] = count;
                count += 1;
            }
        }
        let map: Vec<VertexId> = (0..n).map(|v| new_id[roots[v]]).collect();

        let mut out = Graph::new(count);
        for (u, v) in self.edges() {
            let (mu, mv) = (map[u], map[v]);
            if mu == mv {
                return Err(Error::IdentifyAdjacent(u, v));
            }
            out.add_edge(mu, mv)?;
        }
        if let Some(labels) = &self.labels {
            let mut merged: Vec<Vec<&str>> = vec![Vec::new(); count];
            for (v, l) in labels.iter().enumerate() {
                merged[map[v]].push(l);
            }
            out.labels = Some(merged.into_iter().map(|parts| parts.join("=")).collect());
        }
        Ok((out, map))
    }

    /// Adds a star on `1 + leaf_count` fresh vertices, disconnected from the
    /// existing graph. The hub is the first new vertex.
    pub fn append_disconnected_star(&self, leaf_count: usize) -> Result<Graph> {
        if leaf_count == 0 {
            return Err(Error::InvalidArgument(
                "star needs at least one leaf".into(),
            ));
        }
        let n = self.adj.len();
        let mut out = self.clone();
        out.adj.resize(n + 1 + leaf_count, Vec::new());
        for leaf in n + 1..n + 1 + leaf_count {
            out.add_edge(n, leaf)?;
        }
        if let Some(labels) = &mut out.labels {
            labels.push("star:hub".into());
            labels.extend((1..=leaf_count).map(|k| format!("star:leaf{k}")));
        }
        Ok(out)
    }
}

pub(crate) fn sorted_intersect(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn max_degree_examples() {
        assert_eq!(Graph::new(0).max_degree(), 0);
        assert_eq!(Graph::new(4).max_degree(), 0);
        assert_eq!(bowtie().max_degree(), 4);
        assert_eq!(Graph::complete(6).max_degree(), 5);
    }

    #[test]
    fn triangle_free_examples() {
        assert!(path(3).is_triangle_free());
        assert!(!bowtie().is_triangle_free());
        assert!(cycle(6).is_triangle_free());
        assert!(petersen().is_triangle_free());
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(matches!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(Error::SelfLoop(1))
        ));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        ));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, .. })
        ));
    }

    #[test]
    fn identify_two_edges_gives_path() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let h = g.identify_vertices(1, 2).unwrap();
        assert_eq!(h, path(3));
    }

    #[test]
    fn identify_two_triangles_gives_bowtie() {
        let h = two_triangles().identify_vertices(2, 3).unwrap();
        assert_eq!(h.vertex_count(), 5);
        assert_eq!(h.edge_count(), 6);
        assert_eq!(h.max_degree(), 4);
        assert_eq!(h.degree(2), 4);
        h.validate().unwrap();
    }

    #[test]
    fn identify_two_k4s() {
        let mut g = Graph::new(8);
        g.add_clique(&[0, 1, 2, 3]).unwrap();
        g.add_clique(&[4, 5, 6, 7]).unwrap();
        let h = g.identify_vertices(0, 4).unwrap();
        assert_eq!(h.vertex_count(), 7);
        assert_eq!(h.degree(0), 6);
        h.validate().unwrap();
    }

    #[test]
    fn identify_rejects_same_and_adjacent() {
        let g = bowtie();
        assert!(matches!(
            g.identify_vertices(1, 1),
            Err(Error::IdentifySameVertex(1))
        ));
        assert!(matches!(
            g.identify_vertices(0, 1),
            Err(Error::IdentifyAdjacent(0, 1))
        ));
    }

    #[test]
    fn identify_collapses_parallel_edges() {
        // 0-1 and 2-3 with 0~2, 1~3 merged: a single edge survives.
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let (h, map) = g.identify_pairs(&[(0, 2), (1, 3)]).unwrap();
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.edge_count(), 1);
        assert_eq!(map, vec![0, 1, 0, 1]);
    }

    #[test]
    fn identify_merges_labels() {
        let mut g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        g.set_labels(vec!["a".into(), "b".into(), "c".into(), "d".into()])
            .unwrap();
        let h = g.identify_vertices(1, 2).unwrap();
        assert_eq!(h.labels().unwrap(), &["a", "b=c", "d"]);
    }

    #[test]
    fn star_append() {
        let g = bowtie().append_disconnected_star(7).unwrap();
        assert_eq!(g.max_degree(), 7);
        assert_eq!(g.vertex_count(), 13);
        let e = Graph::new(0).append_disconnected_star(3).unwrap();
        assert_eq!(e.vertex_count(), 4);
        assert_eq!(e.max_degree(), 3);
        assert!(bowtie().append_disconnected_star(0).is_err());
    }
}
