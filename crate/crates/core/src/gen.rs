//! Deterministic graph families and seeded random instances.

use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classes::IntervalRepresentation;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::Rational;

const MAX_ATTEMPTS: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// Path x₁..x_{d−1} with two fans of four vertices at each end; diameter `d`.
    TwinFan { d: usize },
    /// Complete bipartite K₂,ₙ.
    K2n { n: usize },
    /// K₂,ₙ plus the edge joining the two vertices of the small side.
    K2nPlusEdge { n: usize },
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    /// Star with `n` leaves.
    Star { n: usize },
    RandomMinDegree { n: usize, delta: usize, seed: u64 },
    UnitIntervalRandom { n: usize, seed: u64 },
}

#[derive(Clone, Debug)]
pub struct Generated {
    pub graph: Graph,
    pub intervals: Option<IntervalRepresentation<Rational>>,
}

impl Generated {
    fn plain(graph: Graph) -> Self {
        Generated { graph, intervals: None }
    }
}

fn at_least(name: &str, value: usize, min: usize) -> Result<()> {
    if value < min {
        return Err(Error::Parameter(format!("{name} must be at least {min}, got {value}")));
    }
    Ok(())
}

pub fn generate(spec: FamilySpec) -> Result<Generated> {
    match spec {
        FamilySpec::TwinFan { d } => {
            at_least("d", d, 3)?;
            let (graph, rep) = IntervalRepresentation::with_graph(twin_fan_intervals(d))?;
            Ok(Generated {
                graph,
                intervals: Some(rep),
            })
        }
        FamilySpec::K2n { n } => {
            at_least("n", n, 3)?;
            Ok(Generated::plain(k2n(n, false)?))
        }
        FamilySpec::K2nPlusEdge { n } => {
            at_least("n", n, 3)?;
            Ok(Generated::plain(k2n(n, true)?))
        }
        FamilySpec::Path { n } => {
            at_least("n", n, 1)?;
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Ok(Generated::plain(Graph::from_edges(n, &edges)?))
        }
        FamilySpec::Cycle { n } => {
            at_least("n", n, 3)?;
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Ok(Generated::plain(Graph::from_edges(n, &edges)?))
        }
        FamilySpec::Complete { n } => {
            at_least("n", n, 1)?;
            let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            Ok(Generated::plain(Graph::from_edges(n, &edges)?))
        }
        FamilySpec::Star { n } => {
            at_least("n", n, 1)?;
            let edges: Vec<_> = (1..=n).map(|v| (0, v)).collect();
            Ok(Generated::plain(Graph::from_edges(n + 1, &edges)?))
        }
        FamilySpec::RandomMinDegree { n, delta, seed } => Ok(Generated::plain(random_min_degree(n, delta, seed)?)),
        FamilySpec::UnitIntervalRandom { n, seed } => {
            let (graph, rep) = unit_interval_random(n, seed)?;
            Ok(Generated {
                graph,
                intervals: Some(rep),
            })
        }
    }
}

fn k2n(n: usize, joined: bool) -> Result<Graph> {
    let mut edges = Vec::with_capacity(2 * n + 1);
    if joined {
        edges.push((0, 1));
    }
    for b in 2..n + 2 {
        edges.push((0, b));
        edges.push((1, b));
    }
    Graph::from_edges(n + 2, &edges)
}

/// Intervals for the twin fan: `x_i = [2i − 2, 2i]` for `i = 1..d−1`, then
/// the four left fan vertices inside `x_1` and the four right ones inside `x_{d−1}`.
pub fn twin_fan_intervals(d: usize) -> Vec<(Rational, Rational)> {
    let tenth = |k: i64| Ratio::new(k, 10);
    let int = |k: i64| Ratio::from_integer(k);
    let mut ivs: Vec<(Rational, Rational)> = (1..d as i64).map(|i| (int(2 * i - 2), int(2 * i))).collect();
    let fan = [(0, 2), (1, 3), (5, 7), (6, 8)];
    ivs.extend(fan.iter().map(|&(a, b)| (tenth(a), tenth(b))));
    let end = int(2 * (d as i64 - 1));
    ivs.extend(fan.iter().map(|&(a, b)| (end - tenth(b), end - tenth(a))));
    ivs
}

/// Seeded connected graph with minimum degree exactly `delta`: a random
/// recursive tree, then edges from deficient vertices until every degree
/// reaches `delta`. Attempts whose minimum overshoots are redrawn.
pub fn random_min_degree(n: usize, delta: usize, seed: u64) -> Result<Graph> {
    at_least("n", n, 2)?;
    at_least("delta", delta, 1)?;
    if delta >= n {
        return Err(Error::Parameter(format!("delta {delta} must be below n {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let mut adj = vec![vec![false; n]; n];
        let mut degree = vec![0usize; n];
        let mut edges = Vec::new();
        let mut link = |u: usize, v: usize, adj: &mut Vec<Vec<bool>>, degree: &mut Vec<usize>| {
            adj[u][v] = true;
            adj[v][u] = true;
            degree[u] += 1;
            degree[v] += 1;
            edges.push((u, v));
        };
        for i in 1..n {
            let parent = order[rng.gen_range(0..i)];
            link(order[i], parent, &mut adj, &mut degree);
        }
        loop {
            let deficient: Vec<usize> = (0..n).filter(|&v| degree[v] < delta).collect();
            let Some(&v) = deficient.choose(&mut rng) else {
                break;
            };
            let needy: Vec<usize> = deficient.iter().copied().filter(|&w| w != v && !adj[v][w]).collect();
            let w = match needy.choose(&mut rng) {
                Some(&w) => w,
                None => {
                    let free: Vec<usize> = (0..n).filter(|&w| w != v && !adj[v][w]).collect();
                    *free.choose(&mut rng).expect("delta < n leaves a non-neighbour")
                }
            };
            link(v, w, &mut adj, &mut degree);
        }
        if degree.iter().min() == Some(&delta) {
            return Graph::from_edges(n, &edges);
        }
    }
    Err(Error::Parameter(format!(
        "no graph with n = {n} and minimum degree exactly {delta} after {MAX_ATTEMPTS} attempts"
    )))
}

/// Seeded connected unit interval graph with minimum degree at least 2.
/// Left ends are multiples of 1/8 in `[0, n/4]`; draws are rejected until the
/// hypotheses hold.
pub fn unit_interval_random(n: usize, seed: u64) -> Result<(Graph, IntervalRepresentation<Rational>)> {
    at_least("n", n, 3)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let span = 2 * n as i64;
    for _ in 0..MAX_ATTEMPTS {
        let ivs: Vec<(Rational, Rational)> = (0..n)
            .map(|_| {
                let l = Ratio::new(rng.gen_range(0..=span), 8);
                (l, l + Ratio::from_integer(1))
            })
            .collect();
        let (g, rep) = IntervalRepresentation::with_graph(ivs)?;
        if g.is_connected() && g.min_degree() >= 2 {
            return Ok((g, rep));
        }
    }
    Err(Error::Parameter(format!(
        "no connected unit interval graph with minimum degree 2 on {n} vertices after {MAX_ATTEMPTS} attempts"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{bridges, metrics};

    #[test]
    fn twin_fan_shape() {
        let g = generate(FamilySpec::TwinFan { d: 4 }).unwrap().graph;
        assert_eq!(g.n(), 11);
        assert_eq!(g.min_degree(), 2);
        assert_eq!(metrics(&g).unwrap().diameter, 4);
        let g3 = generate(FamilySpec::TwinFan { d: 3 }).unwrap().graph;
        assert_eq!(g3.m(), 13);
        assert!(g3.has_edge(2, 3) && g3.has_edge(4, 5) && g3.has_edge(6, 7) && g3.has_edge(8, 9));
        assert!(generate(FamilySpec::TwinFan { d: 2 }).is_err());
    }

    #[test]
    fn k2n_plus_edge_shape() {
        let g = generate(FamilySpec::K2nPlusEdge { n: 10 }).unwrap().graph;
        assert_eq!((g.n(), g.m()), (12, 21));
        assert_eq!(metrics(&g).unwrap().radius, 1);
        assert!(bridges(&g).is_empty());
    }

    #[test]
    fn random_min_degree_is_reproducible() {
        let a = random_min_degree(30, 3, 7).unwrap();
        let b = random_min_degree(30, 3, 7).unwrap();
        assert_eq!(a, b);
        assert!(a.is_connected());
        assert_eq!(a.min_degree(), 3);
        assert_ne!(a, random_min_degree(30, 3, 8).unwrap());
        assert!(random_min_degree(5, 5, 0).is_err());
    }

    #[test]
    fn unit_interval_hypotheses() {
        let (g, rep) = unit_interval_random(30, 1).unwrap();
        assert!(rep.is_unit());
        assert!(g.is_connected() && g.min_degree() >= 2);
    }
}
