//! Dominating structures and colourings for special graph classes.
//!
//! Interval and circular-arc graphs are handled through an explicit
//! representation that is validated against the graph; threshold and chain
//! graphs through a witness (weights with a threshold, or a nesting order).

use crate::colouring::EdgeColouring;
use crate::domination::verify_domination;
use crate::error::{Error, Result};
use crate::graph::{bridges, induced_subgraph, layers, metrics, Graph};
use crate::rainbow::{extend_two_way, spanning_tree_colouring, RainbowColouring, Witness};
use crate::scalar::Scalar;

/// Largest family accepted by [`brute_force_min_cover`].
pub const BRUTE_FORCE_COVER_CAP: usize = 25;

/// Closed intervals `[left, right]`, one per vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct IntervalRepresentation<T> {
    intervals: Vec<(T, T)>,
    unit: bool,
}

impl<T: Scalar> IntervalRepresentation<T> {
    /// Validates `left ≤ right` and that the intersection graph is exactly `g`.
    pub fn new(g: &Graph, intervals: Vec<(T, T)>) -> Result<Self> {
        if intervals.len() != g.n() {
            return Err(Error::InvalidRepresentation(format!(
                "{} intervals for {} vertices",
                intervals.len(),
                g.n()
            )));
        }
        let rep = Self::unchecked(intervals)?;
        let h = rep.intersection_graph();
        if h.edges() != g.edges() {
            return Err(Error::InvalidRepresentation(mismatch(g, &h)));
        }
        Ok(rep)
    }

    fn unchecked(intervals: Vec<(T, T)>) -> Result<Self> {
        if let Some(v) = intervals.iter().position(|(l, r)| l > r) {
            return Err(Error::InvalidRepresentation(format!("interval {v} has left > right")));
        }
        let unit = intervals
            .first()
            .map(|&(l0, r0)| intervals.iter().all(|&(l, r)| r - l == r0 - l0))
            .unwrap_or(true);
        Ok(IntervalRepresentation { intervals, unit })
    }

    /// The graph and its representation from a bare interval list.
    pub fn with_graph(intervals: Vec<(T, T)>) -> Result<(Graph, Self)> {
        let rep = Self::unchecked(intervals)?;
        Ok((rep.intersection_graph(), rep))
    }

    pub fn intersection_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for (u, &(lu, ru)) in self.intervals.iter().enumerate() {
            for (v, &(lv, rv)) in self.intervals.iter().enumerate().skip(u + 1) {
                if lu <= rv && lv <= ru {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(self.intervals.len(), &edges).expect("pairs are simple")
    }

    pub fn intervals(&self) -> &[(T, T)] {
        &self.intervals
    }

    pub fn left(&self, v: usize) -> T {
        self.intervals[v].0
    }

    pub fn right(&self, v: usize) -> T {
        self.intervals[v].1
    }

    /// All intervals have the same length.
    pub fn is_unit(&self) -> bool {
        self.unit
    }
}

/// Closed arcs on a circle of circumference 1, `(start, end)` with both in
/// `[0, 1)`; `end < start` wraps through 0 and `start == end` is a single point.
#[derive(Clone, Debug, PartialEq)]
pub struct ArcRepresentation<T> {
    arcs: Vec<(T, T)>,
}

impl<T: Scalar> ArcRepresentation<T> {
    pub fn new(g: &Graph, arcs: Vec<(T, T)>) -> Result<Self> {
        if arcs.len() != g.n() {
            return Err(Error::InvalidRepresentation(format!(
                "{} arcs for {} vertices",
                arcs.len(),
                g.n()
            )));
        }
        let rep = Self::unchecked(arcs)?;
        let h = rep.intersection_graph();
        if h.edges() != g.edges() {
            return Err(Error::InvalidRepresentation(mismatch(g, &h)));
        }
        Ok(rep)
    }

    fn unchecked(arcs: Vec<(T, T)>) -> Result<Self> {
        let in_range = |p: T| p >= T::zero() && p < T::one();
        if let Some(v) = arcs.iter().position(|&(s, e)| !in_range(s) || !in_range(e)) {
            return Err(Error::InvalidRepresentation(format!("arc {v} has an endpoint outside [0, 1)")));
        }
        Ok(ArcRepresentation { arcs })
    }

    pub fn with_graph(arcs: Vec<(T, T)>) -> Result<(Graph, Self)> {
        let rep = Self::unchecked(arcs)?;
        Ok((rep.intersection_graph(), rep))
    }

    pub fn arcs(&self) -> &[(T, T)] {
        &self.arcs
    }

    pub fn intersection_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.arcs.len() {
            for v in u + 1..self.arcs.len() {
                if arc_contains(self.arcs[u], self.arcs[v].0) || arc_contains(self.arcs[v], self.arcs[u].0) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(self.arcs.len(), &edges).expect("pairs are simple")
    }

    /// The union of the arcs is the whole circle.
    pub fn covers_circle(&self) -> bool {
        covers(&self.arcs, &(0..self.arcs.len()).collect::<Vec<_>>())
    }
}

fn mismatch(g: &Graph, h: &Graph) -> String {
    for &(u, v) in g.edges() {
        if !h.has_edge(u, v) {
            return format!("edge ({u}, {v}) missing from the intersection graph");
        }
    }
    for &(u, v) in h.edges() {
        if !g.has_edge(u, v) {
            return format!("intersection ({u}, {v}) is not an edge");
        }
    }
    "edge sets differ".into()
}

fn arc_contains<T: Scalar>((s, e): (T, T), p: T) -> bool {
    if s <= e {
        s <= p && p <= e
    } else {
        p >= s || p <= e
    }
}

fn arc_length<T: Scalar>((s, e): (T, T)) -> T {
    if e >= s {
        e - s
    } else {
        e - s + T::one()
    }
}

/// Whether the chosen arcs cover the circle, by sampling every gap between
/// consecutive endpoints (an uncovered region is open, so contains such a midpoint).
fn covers<T: Scalar>(arcs: &[(T, T)], chosen: &[usize]) -> bool {
    let mut points: Vec<T> = chosen.iter().flat_map(|&i| [arcs[i].0, arcs[i].1]).collect();
    if points.is_empty() {
        return false;
    }
    points.sort_by(|a, b| a.partial_cmp(b).expect("comparable scalars"));
    points.dedup();
    let two = T::one() + T::one();
    let mut samples: Vec<T> = points.windows(2).map(|w| (w[0] + w[1]) / two).collect();
    let (first, last) = (points[0], *points.last().unwrap());
    let mut wrap = (last + first + T::one()) / two;
    if wrap >= T::one() {
        wrap = wrap - T::one();
    }
    samples.push(wrap);
    samples
        .iter()
        .all(|&p| chosen.iter().any(|&i| arc_contains(arcs[i], p)))
}

/// Shape of a dominating structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructureKind {
    Path,
    Cycle,
    Vertex,
    Edge,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominatingStructure {
    pub kind: StructureKind,
    /// Path or cycle order; consecutive vertices are adjacent.
    pub vertices: Vec<usize>,
    /// Path length, or the cycle's diameter.
    pub length: usize,
}

impl DominatingStructure {
    pub fn new(g: &Graph, kind: StructureKind, vertices: Vec<usize>) -> Result<Self> {
        let k = vertices.len();
        let length = match kind {
            StructureKind::Vertex if k == 1 => 0,
            StructureKind::Edge if k == 2 => 1,
            StructureKind::Path if k >= 1 => k - 1,
            StructureKind::Cycle if k >= 3 => k / 2,
            _ => {
                return Err(Error::InvalidCertificate(format!("{kind:?} with {k} vertices")));
            }
        };
        g.check_vertices(&vertices)?;
        let mut consecutive: Vec<(usize, usize)> = vertices.windows(2).map(|w| (w[0], w[1])).collect();
        if kind == StructureKind::Cycle {
            consecutive.push((vertices[k - 1], vertices[0]));
        }
        if let Some(&(u, v)) = consecutive.iter().find(|&&(u, v)| !g.has_edge(u, v)) {
            return Err(Error::InvalidCertificate(format!("consecutive vertices {u} and {v} are not adjacent")));
        }
        let mut sorted = vertices.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidCertificate("structure repeats a vertex".into()));
        }
        let cert = verify_domination(g, &vertices, 1)?;
        if !cert.k_step_dominating {
            return Err(Error::InvalidCertificate("structure does not dominate the graph".into()));
        }
        Ok(DominatingStructure { kind, vertices, length })
    }
}

fn is_complete(g: &Graph) -> bool {
    g.m() * 2 == g.n() * g.n().saturating_sub(1)
}

/// Dominating path of length at most diam − 2 in a connected, non-complete
/// interval graph; a complete graph yields the single vertex 0.
pub fn interval_dominating_path<T: Scalar>(g: &Graph, rep: &IntervalRepresentation<T>) -> Result<DominatingStructure> {
    if rep.intervals.len() != g.n() || rep.intersection_graph().edges() != g.edges() {
        return Err(Error::InvalidRepresentation("representation does not match the graph".into()));
    }
    if g.n() == 0 {
        return Err(Error::EmptySet);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected("interval dominating path"));
    }
    if is_complete(g) {
        return DominatingStructure::new(g, StructureKind::Vertex, vec![0]);
    }
    let smallest_right = rep.intervals.iter().map(|iv| iv.1).reduce(min_scalar).unwrap();
    let largest_left = rep.intervals.iter().map(|iv| iv.0).reduce(max_scalar).unwrap();
    // Clip the two end cliques onto the extreme points; adjacency is unchanged.
    let clipped: Vec<(T, T)> = rep
        .intervals
        .iter()
        .map(|&(l, r)| {
            let l = if l <= smallest_right { smallest_right } else { l };
            let r = if r >= largest_left { largest_left } else { r };
            (l, r)
        })
        .collect();
    let left_clique: Vec<usize> = (0..g.n()).filter(|&u| clipped[u].0 == smallest_right).collect();
    let right_clique: Vec<usize> = (0..g.n()).filter(|&u| clipped[u].1 == largest_left).collect();
    let lay = layers(g, &left_clique)?;
    let end = *right_clique
        .iter()
        .min_by_key(|&&y| (lay.distance(y).unwrap(), y))
        .unwrap();
    let mut path = lay.path_to_sources(end).unwrap();
    path.reverse();
    let s = DominatingStructure::new(g, StructureKind::Path, path)?;
    let diam = metrics(g)?.diameter;
    if s.length + 2 > diam {
        return Err(Error::InvalidCertificate(format!(
            "dominating path of length {} exceeds diameter {diam} minus 2",
            s.length
        )));
    }
    Ok(s)
}

fn min_scalar<T: Scalar>(a: T, b: T) -> T {
    if b < a {
        b
    } else {
        a
    }
}

fn max_scalar<T: Scalar>(a: T, b: T) -> T {
    if b > a {
        b
    } else {
        a
    }
}

/// Minimum circle cover by greedy farthest reach from every starting arc.
/// Returns the chosen arcs in circular order, or `None` if the arcs leave a gap.
pub fn min_circle_cover<T: Scalar>(rep: &ArcRepresentation<T>) -> Option<Vec<usize>> {
    let arcs = &rep.arcs;
    let n = arcs.len();
    let one = T::one();
    let mut best: Option<Vec<usize>> = None;
    for first in 0..n {
        let origin = arcs[first].0;
        // unrolled offsets relative to the starting arc's start
        let offset = |p: T| if p >= origin { p - origin } else { p - origin + one };
        let mut chosen = vec![first];
        let mut reach = arc_length(arcs[first]);
        while reach < one {
            let mut next: Option<(T, usize)> = None;
            for j in 0..n {
                let start = offset(arcs[j].0);
                let len = arc_length(arcs[j]);
                for shift in [T::zero(), one] {
                    // the arc also appears one turn earlier when it wraps past the origin
                    let s = start - shift;
                    let e = s + len;
                    if s <= reach && e > reach && next.is_none_or(|(b, _)| e > b) {
                        next = Some((e, j));
                    }
                }
            }
            let (e, j) = next?;
            reach = e;
            chosen.push(j);
            if best.as_ref().is_some_and(|b| chosen.len() >= b.len()) {
                break;
            }
        }
        if reach >= one && best.as_ref().is_none_or(|b| chosen.len() < b.len()) {
            best = Some(chosen);
        }
    }
    best
}

/// Smallest covering subfamily size by exhaustive search over subsets in
/// increasing size; independent of the greedy.
pub fn brute_force_min_cover<T: Scalar>(rep: &ArcRepresentation<T>) -> Result<Option<usize>> {
    let n = rep.arcs.len();
    if n > BRUTE_FORCE_COVER_CAP {
        return Err(Error::CapExceeded {
            what: "arcs",
            value: n,
            cap: BRUTE_FORCE_COVER_CAP,
        });
    }
    for size in 1..=n {
        let mut chosen: Vec<usize> = (0..size).collect();
        loop {
            if covers(&rep.arcs, &chosen) {
                return Ok(Some(size));
            }
            // next combination in lexicographic order
            let mut i = size;
            while i > 0 && chosen[i - 1] == n - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            chosen[i - 1] += 1;
            for j in i..size {
                chosen[j] = chosen[j - 1] + 1;
            }
        }
    }
    Ok(None)
}

/// Dominating cycle from a minimum circle cover; its diameter is at most diam(G).
/// A cover of two arcs is returned as an edge.
pub fn circular_arc_dominating_cycle<T: Scalar>(g: &Graph, rep: &ArcRepresentation<T>) -> Result<DominatingStructure> {
    if rep.arcs.len() != g.n() || rep.intersection_graph().edges() != g.edges() {
        return Err(Error::InvalidRepresentation("representation does not match the graph".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected("circular-arc dominating cycle"));
    }
    let cover = min_circle_cover(rep)
        .ok_or_else(|| Error::Hypothesis("interval-reducible: use interval_dominating_path".into()))?;
    let s = if cover.len() == 2 {
        DominatingStructure::new(g, StructureKind::Edge, cover)?
    } else {
        DominatingStructure::new(g, StructureKind::Cycle, cover)?
    };
    let diam = metrics(g)?.diameter;
    if s.length > diam {
        return Err(Error::InvalidCertificate(format!(
            "cover cycle diameter {} exceeds diam(G) = {diam}",
            s.length
        )));
    }
    Ok(s)
}

/// Certificate that a graph is threshold or chain.
#[derive(Clone, Debug, PartialEq)]
pub enum ClassWitness<T> {
    /// `u ~ v` exactly when `weights[u] + weights[v] ≥ threshold`.
    Threshold { weights: Vec<T>, threshold: T },
    /// One side `a_1..a_k` of a bipartition with `N(a_1) ⊆ ... ⊆ N(a_k)`.
    Chain { ordering: Vec<usize> },
}

/// Dominating vertex of a threshold graph or dominating edge of a chain graph.
pub fn threshold_or_chain_dominator<T: Scalar>(g: &Graph, witness: &ClassWitness<T>) -> Result<DominatingStructure> {
    if g.n() == 0 {
        return Err(Error::EmptySet);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected("threshold or chain dominator"));
    }
    match witness {
        ClassWitness::Threshold { weights, threshold } => {
            if weights.len() != g.n() {
                return Err(Error::InvalidCertificate(format!("{} weights for {} vertices", weights.len(), g.n())));
            }
            for u in 0..g.n() {
                for v in u + 1..g.n() {
                    if (weights[u] + weights[v] >= *threshold) != g.has_edge(u, v) {
                        return Err(Error::InvalidCertificate(format!("weights disagree with adjacency of {u} and {v}")));
                    }
                }
            }
            let mut top = 0;
            for v in 1..g.n() {
                if weights[v] > weights[top] {
                    top = v;
                }
            }
            DominatingStructure::new(g, StructureKind::Vertex, vec![top])
        }
        ClassWitness::Chain { ordering } => {
            g.check_vertices(ordering)?;
            if ordering.is_empty() {
                return Err(Error::EmptySet);
            }
            let mut side = vec![false; g.n()];
            for &a in ordering {
                if side[a] {
                    return Err(Error::InvalidCertificate(format!("vertex {a} repeated in the ordering")));
                }
                side[a] = true;
            }
            if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| side[u] == side[v]) {
                return Err(Error::InvalidCertificate(format!("edge ({u}, {v}) lies inside one side")));
            }
            for w in ordering.windows(2) {
                if let Some(&b) = g.neighbours(w[0]).iter().find(|&&b| !g.has_edge(w[1], b)) {
                    return Err(Error::InvalidCertificate(format!(
                        "neighbourhoods not nested: {b} is adjacent to {} but not {}",
                        w[0], w[1]
                    )));
                }
            }
            let last = *ordering.last().unwrap();
            let partner = g
                .neighbours(last)
                .iter()
                .copied()
                .min_by_key(|&b| (std::cmp::Reverse(g.degree(b)), b))
                .ok_or_else(|| Error::InvalidCertificate(format!("vertex {last} is isolated")))?;
            DominatingStructure::new(g, StructureKind::Edge, vec![last, partner])
        }
    }
}

/// Rainbow paths along a path or cycle of G[S].
struct SequenceWitness {
    order: Vec<usize>,
    position: Vec<usize>,
    cyclic: bool,
}

impl Witness for SequenceWitness {
    fn path(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        let (i, j) = (self.position[u], self.position[v]);
        let k = self.order.len();
        let forward = (j + k - i) % k;
        let steps: Vec<usize> = if !self.cyclic {
            if i <= j {
                (i..=j).collect()
            } else {
                (j..=i).rev().collect()
            }
        } else if forward <= k - forward {
            (0..=forward).map(|t| (i + t) % k).collect()
        } else {
            (0..=k - forward).map(|t| (i + k - t) % k).collect()
        };
        Ok(steps.into_iter().map(|t| self.order[t]).collect())
    }
}

/// Base colouring of G[S] for a structure: a path with distinct colours, a
/// cycle of length k with ⌈k/2⌉ colours repeating around it.
fn structure_base(g: &Graph, s: &DominatingStructure) -> Result<RainbowColouring> {
    let sub = induced_subgraph(g, &s.vertices)?;
    let order: Vec<usize> = s.vertices.iter().map(|&v| sub.from_parent[v].unwrap()).collect();
    let mut position = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let cyclic = s.kind == StructureKind::Cycle;
    let k = order.len();
    let period = if cyclic { k.div_ceil(2) } else { k.max(1) };
    let mut colours = vec![1u32; sub.graph.m()];
    let mut steps: Vec<(usize, usize)> = order.windows(2).map(|w| (w[0], w[1])).collect();
    if cyclic {
        steps.push((order[k - 1], order[0]));
    }
    for (i, &(a, b)) in steps.iter().enumerate() {
        colours[sub.graph.edge_id(a, b).unwrap()] = (i % period) as u32 + 1;
    }
    Ok(RainbowColouring {
        colouring: EdgeColouring::new(&sub.graph, colours)?,
        witness: Box::new(SequenceWitness { order, position, cyclic }),
    })
}

/// Colours a graph with minimum degree at least 2 from a dominating structure:
/// base colouring on the structure, then the +3 extension.
pub fn colouring_from_dominating_structure(g: &Graph, s: &DominatingStructure) -> Result<RainbowColouring> {
    if g.min_degree() < 2 {
        return Err(Error::Hypothesis(format!("minimum degree {} < 2", g.min_degree())));
    }
    let s = DominatingStructure::new(g, s.kind, s.vertices.clone())?;
    let cert = verify_domination(g, &s.vertices, 1)?;
    let base = structure_base(g, &s)?;
    let (colouring, scaffold) = extend_two_way(g, &cert, base)?;
    Ok(RainbowColouring {
        colouring,
        witness: Box::new(scaffold),
    })
}

/// Shortest paths in the union of the interval cliques.
struct CliqueUnionWitness {
    union: Graph,
}

impl Witness for CliqueUnionWitness {
    fn path(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        self.union.shortest_path(u, v).ok_or(Error::BrokenWitness(u, v))
    }
}

/// Colouring of a unit interval graph with δ ≥ 2 using exactly diam(G) colours.
///
/// Along a shortest path `x_1..x_k` from the leftmost to the rightmost interval,
/// the intervals containing `r(x_i)` form a clique; each edge takes the index of
/// the first clique containing both ends, and edges in no clique take colour 1.
pub fn unit_interval_colouring<T: Scalar>(g: &Graph, rep: &IntervalRepresentation<T>) -> Result<RainbowColouring> {
    if rep.intervals.len() != g.n() || rep.intersection_graph().edges() != g.edges() {
        return Err(Error::InvalidRepresentation("representation does not match the graph".into()));
    }
    if !rep.is_unit() {
        return Err(Error::Hypothesis("intervals do not all have the same length".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected("unit interval colouring"));
    }
    if g.n() < 2 || g.min_degree() < 2 {
        return Err(Error::Hypothesis(format!("minimum degree {} < 2", g.min_degree())));
    }
    let n = g.n();
    let leftmost = (0..n).reduce(|a, b| if rep.left(b) < rep.left(a) { b } else { a }).unwrap();
    let rightmost = (0..n).reduce(|a, b| if rep.right(b) > rep.right(a) { b } else { a }).unwrap();
    let spine = g.shortest_path(leftmost, rightmost).unwrap();
    let cliques: Vec<Vec<bool>> = spine[..spine.len() - 1]
        .iter()
        .map(|&x| (0..n).map(|u| rep.left(u) <= rep.right(x) && rep.right(x) <= rep.right(u)).collect())
        .collect();
    let mut colours = vec![1u32; g.m()];
    let mut union_edges = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if let Some(i) = cliques.iter().position(|c| c[u] && c[v]) {
            colours[e] = i as u32 + 1;
            union_edges.push((u, v));
        }
    }
    Ok(RainbowColouring {
        colouring: EdgeColouring::new(g, colours)?,
        witness: Box::new(CliqueUnionWitness {
            union: Graph::from_edges(n, &union_edges)?,
        }),
    })
}

/// Outcome of a chordality test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordalityCheck {
    pub chordal: bool,
    /// Reverse LexBFS order; a perfect elimination ordering when chordal.
    pub ordering: Vec<usize>,
    /// `(v, p, w)`: `p` and `w` are later neighbours of `v` in the ordering but
    /// not adjacent to each other.
    pub violation: Option<(usize, usize, usize)>,
}

fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut label: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| !done[v])
            .reduce(|a, b| if label[b] > label[a] { b } else { a })
            .unwrap();
        done[v] = true;
        order.push(v);
        for &w in g.neighbours(v) {
            if !done[w] {
                label[w].push(n - step);
            }
        }
    }
    order
}

/// LexBFS followed by a simpliciality check of the reversed order.
pub fn is_chordal(g: &Graph) -> ChordalityCheck {
    let mut ordering = lex_bfs(g);
    ordering.reverse();
    let mut rank = vec![0; g.n()];
    for (i, &v) in ordering.iter().enumerate() {
        rank[v] = i;
    }
    for &v in &ordering {
        let later: Vec<usize> = g.neighbours(v).iter().copied().filter(|&w| rank[w] > rank[v]).collect();
        if let Some(&p) = later.iter().min_by_key(|&&w| rank[w]) {
            if let Some(&w) = later.iter().find(|&&w| w != p && !g.has_edge(p, w)) {
                return ChordalityCheck {
                    chordal: false,
                    ordering,
                    violation: Some((v, p, w)),
                };
            }
        }
    }
    ChordalityCheck {
        chordal: true,
        ordering,
        violation: None,
    }
}

/// Result of peeling a bridge-less chordal graph by balls around a centre.
pub struct ChordalColouring {
    pub rainbow: RainbowColouring,
    pub centre: usize,
    pub radius: usize,
    /// Vertex sets of the balls of radius `0..=rad` around the centre.
    pub balls: Vec<Vec<usize>>,
}

impl std::fmt::Debug for ChordalColouring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ChordalColouring")
            .field("colours", &self.rainbow.colouring.count())
            .field("centre", &self.centre)
            .field("radius", &self.radius)
            .finish_non_exhaustive()
    }
}

/// Colouring of a bridge-less chordal graph with at most 3·rad(G) colours,
/// extending ball by ball from a central vertex.
pub fn chordal_radius_colouring(g: &Graph) -> Result<ChordalColouring> {
    let m = metrics(g)?;
    let check = is_chordal(g);
    if let Some((v, p, w)) = check.violation {
        return Err(Error::Hypothesis(format!(
            "not chordal: {v} has later neighbours {p} and {w} that are not adjacent"
        )));
    }
    if let Some(&(u, v)) = bridges(g).first() {
        return Err(Error::Hypothesis(format!("has a bridge ({u}, {v})")));
    }
    let lay = layers(g, &[m.centre])?;
    let mut balls = vec![vec![m.centre]];
    let mut current = spanning_tree_colouring(&Graph::empty(1))?;
    for l in 1..=m.radius {
        let mut ball: Vec<usize> = lay.layers[..=l].concat();
        ball.sort_unstable();
        let outer = induced_subgraph(g, &ball)?;
        if let Some(&(u, v)) = bridges(&outer.graph).first() {
            return Err(Error::Hypothesis(format!(
                "ball of radius {l} has a bridge ({}, {})",
                outer.to_parent[u], outer.to_parent[v]
            )));
        }
        let inner: Vec<usize> = balls[l - 1].iter().map(|&v| outer.from_parent[v].unwrap()).collect();
        let cert = verify_domination(&outer.graph, &inner, 1)?;
        let (colouring, scaffold) = extend_two_way(&outer.graph, &cert, current)?;
        current = RainbowColouring {
            colouring,
            witness: Box::new(scaffold),
        };
        balls.push(ball);
    }
    Ok(ChordalColouring {
        rainbow: current,
        centre: m.centre,
        radius: m.radius,
        balls,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::rainbow_connected;
    use crate::scalar::Rational;
    use num_rational::Ratio;

    fn r(p: i64, q: i64) -> Rational {
        Ratio::new(p, q)
    }

    fn int(v: i64) -> Rational {
        Ratio::from_integer(v)
    }

    fn fig2() -> Graph {
        let mut edges = vec![(0, 1)];
        for b in 2..12 {
            edges.push((0, b));
            edges.push((1, b));
        }
        Graph::from_edges(12, &edges).unwrap()
    }

    #[test]
    fn interval_validation() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let ok = vec![(int(0), int(1)), (int(1), int(2)), (int(2), int(3))];
        assert!(IntervalRepresentation::new(&g, ok).unwrap().is_unit());
        let bad = vec![(int(0), int(1)), (int(1), int(2)), (int(1), int(3))];
        assert!(matches!(IntervalRepresentation::new(&g, bad), Err(Error::InvalidRepresentation(_))));
        let reversed = vec![(int(1), int(0)), (int(1), int(2)), (int(2), int(3))];
        assert!(IntervalRepresentation::new(&g, reversed).is_err());
    }

    #[test]
    fn p5_dominating_path() {
        let ivs: Vec<_> = (0..5).map(|i| (int(i), int(i + 1))).collect();
        let (g, rep) = IntervalRepresentation::with_graph(ivs).unwrap();
        let s = interval_dominating_path(&g, &rep).unwrap();
        assert_eq!(s.kind, StructureKind::Path);
        assert_eq!(s.vertices, vec![1, 2, 3]);
        assert_eq!(s.length, 2);
    }

    #[test]
    fn complete_interval_graph_gives_vertex() {
        let (g, rep) = IntervalRepresentation::with_graph(vec![(int(0), int(2)), (int(1), int(3))]).unwrap();
        let s = interval_dominating_path(&g, &rep).unwrap();
        assert_eq!((s.kind, s.vertices.as_slice()), (StructureKind::Vertex, &[0][..]));
    }

    #[test]
    fn arc_intersections_wrap() {
        let arcs = vec![(r(9, 10), r(1, 10)), (r(0, 1), r(2, 10)), (r(5, 10), r(6, 10))];
        let (g, rep) = ArcRepresentation::with_graph(arcs).unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
        assert!(!rep.covers_circle());
    }

    #[test]
    fn forced_cover_is_whole_family() {
        // six arcs of length 1/6 + 1/60 starting at i/6
        let arcs: Vec<_> = (0..6)
            .map(|i| {
                let s = r(i, 6);
                let e = s + r(11, 60);
                (s, if e >= int(1) { e - int(1) } else { e })
            })
            .collect();
        let (g, rep) = ArcRepresentation::with_graph(arcs).unwrap();
        assert_eq!(min_circle_cover(&rep).unwrap().len(), 6);
        assert_eq!(brute_force_min_cover(&rep).unwrap(), Some(6));
        let s = circular_arc_dominating_cycle(&g, &rep).unwrap();
        assert_eq!((s.kind, s.length), (StructureKind::Cycle, 3));
        let col = colouring_from_dominating_structure(&g, &s).unwrap();
        assert_eq!(col.colouring.count(), 3);
        assert!(rainbow_connected(&g, &col.colouring).unwrap().rainbow_connected);
    }

    #[test]
    fn three_big_arcs_with_small_ones() {
        let mut arcs = vec![(r(0, 1), r(4, 10)), (r(3, 10), r(7, 10)), (r(6, 10), r(1, 10))];
        for i in 0..10 {
            let s = r(i, 10) + r(1, 100);
            arcs.push((s, s + r(1, 100)));
        }
        let (g, rep) = ArcRepresentation::with_graph(arcs).unwrap();
        assert_eq!(min_circle_cover(&rep).unwrap(), vec![0, 1, 2]);
        assert_eq!(brute_force_min_cover(&rep).unwrap(), Some(3));
        let s = circular_arc_dominating_cycle(&g, &rep).unwrap();
        assert_eq!(s.vertices.len(), 3);
    }

    #[test]
    fn gap_is_interval_reducible() {
        let (g, rep) = ArcRepresentation::with_graph(vec![(r(0, 1), r(1, 2)), (r(1, 4), r(3, 4))]).unwrap();
        let err = circular_arc_dominating_cycle(&g, &rep).unwrap_err();
        assert_eq!(err, Error::Hypothesis("interval-reducible: use interval_dominating_path".into()));
    }

    #[test]
    fn threshold_fig2() {
        let g = fig2();
        let mut weights = vec![int(0); 12];
        weights[0] = int(1);
        weights[1] = int(1);
        let w = ClassWitness::Threshold { weights, threshold: int(1) };
        let s = threshold_or_chain_dominator(&g, &w).unwrap();
        assert_eq!(s.vertices, vec![0]);
        let col = colouring_from_dominating_structure(&g, &s).unwrap();
        assert!(col.colouring.count() <= 3);
        assert!(rainbow_connected(&g, &col.colouring).unwrap().rainbow_connected);
        let wrong = ClassWitness::Threshold {
            weights: vec![int(1); 12],
            threshold: int(1),
        };
        assert!(threshold_or_chain_dominator(&g, &wrong).is_err());
    }

    #[test]
    fn star_as_threshold() {
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let w = ClassWitness::Threshold {
            weights: vec![1.0f64, 0.0, 0.0, 0.0, 0.0],
            threshold: 1.0,
        };
        assert_eq!(threshold_or_chain_dominator(&g, &w).unwrap().vertices, vec![0]);
    }

    #[test]
    fn chain_k2n() {
        let mut edges = Vec::new();
        for b in 2..12 {
            edges.push((0, b));
            edges.push((1, b));
        }
        let g = Graph::from_edges(12, &edges).unwrap();
        let w: ClassWitness<Rational> = ClassWitness::Chain { ordering: vec![0, 1] };
        let s = threshold_or_chain_dominator(&g, &w).unwrap();
        assert_eq!(s.kind, StructureKind::Edge);
        assert_eq!(s.vertices, vec![1, 2]);
        let col = colouring_from_dominating_structure(&g, &s).unwrap();
        assert!(col.colouring.count() <= 4);
        assert!(rainbow_connected(&g, &col.colouring).unwrap().rainbow_connected);
        let bad: ClassWitness<Rational> = ClassWitness::Chain { ordering: vec![0, 2] };
        assert!(threshold_or_chain_dominator(&g, &bad).is_err());
    }

    #[test]
    fn unit_interval_k4_and_chain_of_triples() {
        let ivs: Vec<_> = (0..4).map(|i| (r(i, 10), r(i, 10) + int(1))).collect();
        let (g, rep) = IntervalRepresentation::with_graph(ivs).unwrap();
        let col = unit_interval_colouring(&g, &rep).unwrap();
        assert_eq!(col.colouring.count(), 1);
        // intervals at 0, .4, .8, 1.6, 2.0, 2.4, 3.2, 3.6, 4.0
        let starts = [0, 4, 8, 16, 20, 24, 32, 36, 40];
        let ivs: Vec<_> = starts.iter().map(|&s| (r(s, 10), r(s, 10) + int(1))).collect();
        let (g, rep) = IntervalRepresentation::with_graph(ivs).unwrap();
        assert!(g.min_degree() >= 2);
        let diam = metrics(&g).unwrap().diameter;
        let col = unit_interval_colouring(&g, &rep).unwrap();
        assert_eq!(col.colouring.count() as usize, diam);
        assert!(rainbow_connected(&g, &col.colouring).unwrap().rainbow_connected);
    }

    #[test]
    fn chordality() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let check = is_chordal(&c4);
        assert!(!check.chordal);
        let (v, p, w) = check.violation.unwrap();
        assert!(c4.has_edge(v, p) && c4.has_edge(v, w) && !c4.has_edge(p, w));
        let tree = Graph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert!(is_chordal(&tree).chordal);
        assert!(is_chordal(&fig2()).chordal);
    }

    #[test]
    fn chordal_peel() {
        let g = fig2();
        let out = chordal_radius_colouring(&g).unwrap();
        assert_eq!(out.radius, 1);
        assert!(out.rainbow.colouring.count() <= 3);
        assert!(rainbow_connected(&g, &out.rainbow.colouring).unwrap().rainbow_connected);
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!(matches!(chordal_radius_colouring(&c4), Err(Error::Hypothesis(_))));
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let err = chordal_radius_colouring(&p3).unwrap_err();
        assert_eq!(err, Error::Hypothesis("has a bridge (0, 1)".into()));
    }

    #[test]
    fn chordal_radius_two() {
        // two Fig-2 gadgets glued at 11, a low-degree vertex of the first and a hub of the second
        let mut edges = vec![(0, 1), (11, 12)];
        for b in 2..12 {
            edges.push((0, b));
            edges.push((1, b));
        }
        for b in 13..23 {
            edges.push((11, b));
            edges.push((12, b));
        }
        let g = Graph::from_edges(23, &edges).unwrap();
        let out = chordal_radius_colouring(&g).unwrap();
        assert_eq!(out.radius, 2);
        assert!(out.rainbow.colouring.count() <= 3 * out.radius as u32);
        assert!(rainbow_connected(&g, &out.rainbow.colouring).unwrap().rainbow_connected);
        for ball in &out.balls {
            let sub = induced_subgraph(&g, ball).unwrap();
            assert!(bridges(&sub.graph).is_empty());
        }
    }
}
