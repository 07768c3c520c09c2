//! Simple undirected graphs and the traversal primitives everything else is built on.
//!
//! Ties are always broken towards the lowest vertex index: BFS queues are
//! seeded in ascending order, neighbour lists are sorted, centres and tree
//! roots are the lowest qualifying index.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// A simple undirected graph on `0..n`.
///
/// Edges are stored canonically as `(min, max)` and sorted; an edge's id is its
/// position in [`Graph::edges`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    adj_edge: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and out-of-range endpoints.
    pub fn from_edges(n: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        let mut g = Graph {
            adj: Vec::with_capacity(n),
            adj_edge: Vec::with_capacity(n),
            edges,
        };
        for list in adj.iter_mut() {
            list.sort_unstable();
            g.adj.push(list.iter().map(|&(w, _)| w).collect());
            g.adj_edge.push(list.iter().map(|&(_, e)| e).collect());
        }
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            adj_edge: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Neighbours of `v` paired with the id of the connecting edge.
    pub fn incident(&self, v: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj[v].iter().copied().zip(self.adj_edge[v].iter().copied())
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n() || v >= self.n() {
            return None;
        }
        self.adj[u]
            .binary_search(&v)
            .ok()
            .map(|pos| self.adj_edge[u][pos])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// δ(G); zero for the empty vertex set.
    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn pendants(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.degree(v) == 1).collect()
    }

    /// BFS distances from `src`; `None` marks unreachable vertices.
    pub fn distances_from(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[src] = Some(0);
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in self.neighbours(u) {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.distances_from(0).iter().all(Option::is_some)
    }

    /// Shortest `u`–`v` path; each step moves to the lowest-index neighbour one layer closer.
    pub fn shortest_path(&self, u: usize, v: usize) -> Option<Vec<usize>> {
        let dist = self.distances_from(v);
        dist[u]?;
        let mut path = vec![u];
        let mut cur = u;
        while cur != v {
            let d = dist[cur].unwrap();
            cur = *self
                .neighbours(cur)
                .iter()
                .find(|&&w| dist[w] == Some(d - 1))
                .expect("BFS layer predecessor");
            path.push(cur);
        }
        Some(path)
    }

    pub(crate) fn check_vertices(&self, set: &[usize]) -> Result<()> {
        match set.iter().find(|&&v| v >= self.n()) {
            Some(&v) => Err(Error::VertexOutOfRange { vertex: v, n: self.n() }),
            None => Ok(()),
        }
    }
}

/// Sorted, deduplicated copy of a vertex list.
pub(crate) fn normalize_set(set: &[usize]) -> Vec<usize> {
    let mut s = set.to_vec();
    s.sort_unstable();
    s.dedup();
    s
}

pub(crate) fn membership(n: usize, set: &[usize]) -> Vec<bool> {
    let mut mark = vec![false; n];
    for &v in set {
        mark[v] = true;
    }
    mark
}

/// BFS layering N^0(S), N^1(S), ... from a source set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerDecomposition {
    pub sources: Vec<usize>,
    /// `layers[k]` holds the vertices at distance exactly `k` from the sources, sorted.
    pub layers: Vec<Vec<usize>>,
    pub unreachable: Vec<usize>,
    dist: Vec<Option<usize>>,
    parent: Vec<Option<usize>>,
}

impl LayerDecomposition {
    /// N^k(S); empty beyond the last layer.
    pub fn layer(&self, k: usize) -> &[usize] {
        self.layers.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn distance(&self, v: usize) -> Option<usize> {
        self.dist[v]
    }

    /// Lowest-index neighbour of `v` in the previous layer.
    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    /// Shortest path from `v` back to the source set: `(v, ..., x0)` with `x0 ∈ S`.
    pub fn path_to_sources(&self, v: usize) -> Option<Vec<usize>> {
        self.dist[v]?;
        let mut path = vec![v];
        let mut cur = v;
        while let Some(p) = self.parent[cur] {
            path.push(p);
            cur = p;
        }
        Some(path)
    }

    /// Number of nonempty layers minus one (the eccentricity of S).
    pub fn depth(&self) -> usize {
        self.layers.len().saturating_sub(1)
    }
}

pub fn layers(g: &Graph, sources: &[usize]) -> Result<LayerDecomposition> {
    if sources.is_empty() {
        return Err(Error::EmptySet);
    }
    g.check_vertices(sources)?;
    let sources = normalize_set(sources);
    let n = g.n();
    let mut dist = vec![None; n];
    let mut parent = vec![None; n];
    let mut layers = vec![sources.clone()];
    for &s in &sources {
        dist[s] = Some(0);
    }
    loop {
        let k = layers.len();
        let mut next = Vec::new();
        for &u in layers.last().unwrap() {
            for &w in g.neighbours(u) {
                if dist[w].is_none() {
                    dist[w] = Some(k);
                    next.push(w);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        next.sort_unstable();
        for &w in &next {
            parent[w] = g
                .neighbours(w)
                .iter()
                .copied()
                .find(|&p| dist[p] == Some(k - 1));
        }
        layers.push(next);
    }
    let unreachable = (0..n).filter(|&v| dist[v].is_none()).collect();
    Ok(LayerDecomposition {
        sources,
        layers,
        unreachable,
        dist,
        parent,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Metrics {
    pub eccentricity: Vec<usize>,
    pub diameter: usize,
    pub radius: usize,
    /// Minimum-eccentricity vertex, lowest index on ties.
    pub centre: usize,
}

/// Eccentricities, diameter, radius and centre by BFS from every vertex.
pub fn metrics(g: &Graph) -> Result<Metrics> {
    if g.n() == 0 {
        return Err(Error::EmptySet);
    }
    let mut eccentricity = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let mut ecc = 0;
        for d in g.distances_from(v) {
            ecc = ecc.max(d.ok_or(Error::Disconnected("metrics"))?);
        }
        eccentricity.push(ecc);
    }
    let diameter = *eccentricity.iter().max().unwrap();
    let radius = *eccentricity.iter().min().unwrap();
    let centre = eccentricity.iter().position(|&e| e == radius).unwrap();
    Ok(Metrics {
        eccentricity,
        diameter,
        radius,
        centre,
    })
}

/// All bridges, as canonical `(u, v)` pairs in sorted order.
pub fn bridges(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.n();
    let mut order = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut out = Vec::new();
    let mut timer = 0;
    for root in 0..n {
        if order[root] != usize::MAX {
            continue;
        }
        // (vertex, edge id used to enter it, next neighbour position)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        order[root] = timer;
        low[root] = timer;
        timer += 1;
        while let Some(frame) = stack.last_mut() {
            let (v, via, pos) = *frame;
            if pos < g.degree(v) {
                frame.2 += 1;
                let w = g.adj[v][pos];
                let e = g.adj_edge[v][pos];
                if e == via {
                    continue;
                }
                if order[w] == usize::MAX {
                    order[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, e, 0));
                } else {
                    low[v] = low[v].min(order[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] > order[p] {
                        out.push(g.edges[via]);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Pendant vertices and the minimum degree.
pub fn pendant_and_degree_stats(g: &Graph) -> (Vec<usize>, usize) {
    (g.pendants(), g.min_degree())
}

/// An induced subgraph together with the relabelling in both directions.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// Local index → parent vertex (ascending, so relabelling preserves order).
    pub to_parent: Vec<usize>,
    pub from_parent: Vec<Option<usize>>,
}

pub fn induced_subgraph(g: &Graph, set: &[usize]) -> Result<InducedSubgraph> {
    g.check_vertices(set)?;
    let to_parent = normalize_set(set);
    let mut from_parent = vec![None; g.n()];
    for (i, &v) in to_parent.iter().enumerate() {
        from_parent[v] = Some(i);
    }
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter_map(|&(u, v)| Some((from_parent[u]?, from_parent[v]?)))
        .collect();
    let graph = Graph::from_edges(to_parent.len(), &edges)?;
    Ok(InducedSubgraph {
        graph,
        to_parent,
        from_parent,
    })
}

/// Spanning forest of the non-trivial components of G[S], 2-coloured by BFS depth.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningForestBipartition {
    pub forest_edges: Vec<(usize, usize)>,
    /// Even BFS depth.
    pub x: Vec<usize>,
    /// Odd BFS depth.
    pub y: Vec<usize>,
    /// Isolated vertices of G[S].
    pub z: Vec<usize>,
    /// For every vertex of X ∪ Y, one forest neighbour: its parent, or for a root its lowest child.
    pub partner: Vec<Option<usize>>,
}

/// Bipartition of the forest over a whole graph (used directly on auxiliary graphs).
pub(crate) fn forest_bipartition_whole(h: &Graph) -> SpanningForestBipartition {
    let n = h.n();
    let mut depth: Vec<Option<usize>> = vec![None; n];
    let mut partner = vec![None; n];
    let mut forest_edges = Vec::new();
    let (mut x, mut y, mut z) = (Vec::new(), Vec::new(), Vec::new());
    for root in 0..n {
        if depth[root].is_some() {
            continue;
        }
        if h.degree(root) == 0 {
            depth[root] = Some(0);
            z.push(root);
            continue;
        }
        depth[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let du = depth[u].unwrap();
            for &w in h.neighbours(u) {
                if depth[w].is_none() {
                    depth[w] = Some(du + 1);
                    partner[w] = Some(u);
                    if partner[u].is_none() {
                        partner[u] = Some(w);
                    }
                    forest_edges.push((u.min(w), u.max(w)));
                    queue.push_back(w);
                }
            }
        }
    }
    for v in 0..n {
        if h.degree(v) == 0 {
            continue;
        }
        if depth[v].unwrap().is_multiple_of(2) {
            x.push(v);
        } else {
            y.push(v);
        }
    }
    forest_edges.sort_unstable();
    SpanningForestBipartition {
        forest_edges,
        x,
        y,
        z,
        partner,
    }
}

pub fn spanning_forest_bipartition(g: &Graph, set: &[usize]) -> Result<SpanningForestBipartition> {
    let sub = induced_subgraph(g, set)?;
    let local = forest_bipartition_whole(&sub.graph);
    let map = |vs: Vec<usize>| -> Vec<usize> { vs.into_iter().map(|v| sub.to_parent[v]).collect() };
    let mut partner = vec![None; g.n()];
    for (i, p) in local.partner.iter().enumerate() {
        partner[sub.to_parent[i]] = p.map(|q| sub.to_parent[q]);
    }
    Ok(SpanningForestBipartition {
        forest_edges: local
            .forest_edges
            .into_iter()
            .map(|(u, v)| (sub.to_parent[u], sub.to_parent[v]))
            .collect(),
        x: map(local.x),
        y: map(local.y),
        z: map(local.z),
        partner,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(
            Graph::from_edges(2, &[(0, 1), (0, 1)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::from_edges(2, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(Graph::from_edges(3, &[(2, 2)]), Err(Error::SelfLoop(2)));
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn build_path_and_cycle() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let degrees: Vec<_> = (0..3).map(|v| p3.degree(v)).collect();
        assert_eq!(degrees, vec![1, 2, 1]);
        let c5 = cycle(5);
        assert!((0..5).all(|v| c5.degree(v) == 2));
        assert_eq!(c5.min_degree(), 2);
        assert_eq!(c5.edge_id(4, 0), Some(c5.edges().iter().position(|&e| e == (0, 4)).unwrap()));
    }

    #[test]
    fn layers_on_cycle_and_path() {
        let sizes: Vec<_> = layers(&cycle(6), &[0]).unwrap().layers.iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 2, 2, 1]);
        let l = layers(&path(4), &[0, 3]).unwrap();
        assert_eq!(l.layer(1), &[1, 2]);
        assert!(l.layer(2).is_empty());
        assert_eq!(layers(&path(4), &[]), Err(Error::EmptySet));
    }

    #[test]
    fn layer_parents_are_lowest_index() {
        let l = layers(&cycle(6), &[0]).unwrap();
        assert_eq!(l.parent(3), Some(2));
        assert_eq!(l.path_to_sources(3), Some(vec![3, 2, 1, 0]));
    }

    #[test]
    fn metrics_small_graphs() {
        let m = metrics(&cycle(5)).unwrap();
        assert_eq!((m.diameter, m.radius, m.centre), (2, 2, 0));
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let m = metrics(&k4).unwrap();
        assert_eq!((m.diameter, m.radius), (1, 1));
        let p5 = metrics(&path(5)).unwrap();
        assert_eq!((p5.diameter, p5.radius, p5.centre), (4, 2, 2));
        assert_eq!(
            metrics(&Graph::empty(2)),
            Err(Error::Disconnected("metrics"))
        );
    }

    #[test]
    fn bridges_tree_and_cycle() {
        assert_eq!(bridges(&path(4)), vec![(0, 1), (1, 2), (2, 3)]);
        assert!(bridges(&cycle(6)).is_empty());
        // two triangles joined by an edge
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(bridges(&g), vec![(2, 3)]);
    }

    #[test]
    fn pendant_stats() {
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(pendant_and_degree_stats(&star), (vec![1, 2, 3, 4], 1));
        assert_eq!(pendant_and_degree_stats(&cycle(5)), (vec![], 2));
    }

    #[test]
    fn forest_bipartition_cases() {
        // S induces 2K2
        let g = Graph::from_edges(5, &[(0, 1), (2, 3), (1, 2), (3, 4)]).unwrap();
        let f = spanning_forest_bipartition(&g, &[0, 1, 3, 4]).unwrap();
        assert!(f.z.is_empty());
        assert_eq!(f.x, vec![0, 3]);
        assert_eq!(f.y, vec![1, 4]);
        assert_eq!(f.partner[0], Some(1));
        assert_eq!(f.partner[4], Some(3));
        // independent set
        let f = spanning_forest_bipartition(&cycle(6), &[0, 2, 4]).unwrap();
        assert_eq!(f.z, vec![0, 2, 4]);
        assert!(f.x.is_empty() && f.y.is_empty() && f.forest_edges.is_empty());
    }

    #[test]
    fn induced_subgraph_relabels() {
        let sub = induced_subgraph(&cycle(6), &[2, 0, 1]).unwrap();
        assert_eq!(sub.graph, path(3));
        assert_eq!(sub.to_parent, vec![0, 1, 2]);
        let whole = induced_subgraph(&cycle(6), &[0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(whole.graph, cycle(6));
    }
}
