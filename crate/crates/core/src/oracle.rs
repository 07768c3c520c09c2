//! Independent checks: rainbow connectivity of a given colouring, and the exact
//! rainbow connection number of small graphs by exhaustive search.
//!
//! Nothing here depends on how a colouring was produced. The pair search walks
//! states `(vertex, set of colours used so far)`; a state is discarded when the
//! same vertex was already reached with a subset of its colours, which keeps the
//! search exact while pruning most of the state space.

use rayon::prelude::*;

use crate::colouring::EdgeColouring;
use crate::error::{Error, Result};
use crate::graph::{bridges, metrics, Graph};

/// Hard limit of the bit-set used for colour sets.
pub const MAX_COLOUR_CAP: usize = 128;
pub const DEFAULT_COLOUR_CAP: usize = 30;
pub const DEFAULT_EDGE_CAP: usize = 25;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub rainbow_connected: bool,
    /// Lexicographically first pair with no rainbow path.
    pub failing_pair: Option<(usize, usize)>,
    /// One rainbow path per pair `u < v`, when requested and the colouring passes.
    pub witnesses: Option<Vec<((usize, usize), Vec<usize>)>>,
    pub colours: u32,
}

impl VerificationReport {
    /// Single-line verdict: `true` or `false (u,v)`.
    pub fn verdict(&self) -> String {
        match self.failing_pair {
            None => "true".to_string(),
            Some((u, v)) => format!("false ({u},{v})"),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub colour_cap: usize,
    pub collect_witnesses: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            colour_cap: DEFAULT_COLOUR_CAP,
            collect_witnesses: false,
        }
    }
}

fn check_total(g: &Graph, col: &EdgeColouring) -> Result<()> {
    if col.colours().len() != g.m() || col.colours().contains(&0) {
        return Err(Error::InvalidColouring("colouring is not total over E(G)".into()));
    }
    Ok(())
}

/// Exact rainbow-connectivity check with the default colour cap.
pub fn rainbow_connected(g: &Graph, col: &EdgeColouring) -> Result<VerificationReport> {
    rainbow_connected_with(g, col, VerifyOptions::default())
}

pub fn rainbow_connected_with(
    g: &Graph,
    col: &EdgeColouring,
    opts: VerifyOptions,
) -> Result<VerificationReport> {
    check_total(g, col)?;
    let cap = opts.colour_cap.min(MAX_COLOUR_CAP);
    if col.count() as usize > cap {
        return Err(Error::CapExceeded {
            what: "colour count",
            value: col.count() as usize,
            cap,
        });
    }
    let n = g.n();
    let per_source: Vec<(Option<usize>, Vec<((usize, usize), Vec<usize>)>)> = (0..n)
        .into_par_iter()
        .map(|s| {
            let search = PairSearch::run(g, col, s, None);
            let failing = (s + 1..n).find(|&t| search.reached[t].is_none());
            let paths = if opts.collect_witnesses && failing.is_none() {
                (s + 1..n).map(|t| ((s, t), search.path_to(t).unwrap())).collect()
            } else {
                Vec::new()
            };
            (failing, paths)
        })
        .collect();
    let failing_pair = per_source
        .iter()
        .enumerate()
        .find_map(|(s, (f, _))| f.map(|t| (s, t)));
    let witnesses = (opts.collect_witnesses && failing_pair.is_none())
        .then(|| per_source.into_iter().flat_map(|(_, p)| p).collect());
    Ok(VerificationReport {
        rainbow_connected: failing_pair.is_none(),
        failing_pair,
        witnesses,
        colours: col.count(),
    })
}

/// Some rainbow `u`–`v` path, or `None` if there is none.
pub fn find_rainbow_path(g: &Graph, col: &EdgeColouring, u: usize, v: usize) -> Option<Vec<usize>> {
    if col.count() as usize > MAX_COLOUR_CAP {
        return None;
    }
    PairSearch::run(g, col, u, Some(v)).path_to(v)
}

/// True iff `path` is a simple path of `g` whose edges carry pairwise-distinct colours.
pub fn check_rainbow_path(g: &Graph, col: &EdgeColouring, path: &[usize]) -> bool {
    if path.is_empty() || path.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let mut seen_vertex = path.to_vec();
    seen_vertex.sort_unstable();
    if seen_vertex.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    let mut colours = Vec::with_capacity(path.len());
    for w in path.windows(2) {
        match col.colour_between(g, w[0], w[1]) {
            Some(c) => colours.push(c),
            None => return false,
        }
    }
    colours.sort_unstable();
    colours.windows(2).all(|w| w[0] != w[1])
}

/// Verifies a colouring from externally supplied paths; each is checked independently.
pub fn verify_with_witnesses<F>(g: &Graph, col: &EdgeColouring, witness: F) -> Result<VerificationReport>
where
    F: Fn(usize, usize) -> Option<Vec<usize>> + Sync,
{
    check_total(g, col)?;
    let n = g.n();
    let failing_pair = (0..n)
        .into_par_iter()
        .filter_map(|u| {
            (u + 1..n)
                .find(|&v| match witness(u, v) {
                    Some(p) => {
                        !(p.first() == Some(&u) && p.last() == Some(&v) && check_rainbow_path(g, col, &p))
                    }
                    None => true,
                })
                .map(|v| (u, v))
        })
        .min();
    Ok(VerificationReport {
        rainbow_connected: failing_pair.is_none(),
        failing_pair,
        witnesses: None,
        colours: col.count(),
    })
}

struct PairSearch {
    // (vertex, colour set, parent state)
    states: Vec<(usize, u128, usize)>,
    reached: Vec<Option<usize>>,
}

impl PairSearch {
    fn run(g: &Graph, col: &EdgeColouring, src: usize, target: Option<usize>) -> PairSearch {
        let n = g.n();
        let mut states = vec![(src, 0u128, usize::MAX)];
        let mut reached = vec![None; n];
        reached[src] = Some(0);
        let mut remaining = n - 1;
        let mut frontier_masks: Vec<Vec<u128>> = vec![Vec::new(); n];
        frontier_masks[src].push(0);
        let mut frontier = vec![0usize];
        let done = |reached: &Vec<Option<usize>>, remaining: usize| match target {
            Some(t) => reached[t].is_some(),
            None => remaining == 0,
        };
        while !frontier.is_empty() && !done(&reached, remaining) {
            let mut next = Vec::new();
            for &si in &frontier {
                let (v, mask, _) = states[si];
                for (w, e) in g.incident(v) {
                    let bit = 1u128 << (col.colour(e) - 1);
                    if mask & bit != 0 {
                        continue;
                    }
                    let m = mask | bit;
                    let seen = &mut frontier_masks[w];
                    if seen.iter().any(|&old| old & !m == 0) {
                        continue;
                    }
                    seen.retain(|&old| m & !old != 0);
                    seen.push(m);
                    states.push((w, m, si));
                    let id = states.len() - 1;
                    if reached[w].is_none() {
                        reached[w] = Some(id);
                        remaining -= 1;
                    }
                    next.push(id);
                }
            }
            frontier = next;
        }
        PairSearch { states, reached }
    }

    /// Walk back to the source, dropping any cycles so the result is a simple path.
    fn path_to(&self, t: usize) -> Option<Vec<usize>> {
        let mut walk = Vec::new();
        let mut cur = self.reached[t]?;
        while cur != usize::MAX {
            walk.push(self.states[cur].0);
            cur = self.states[cur].2;
        }
        walk.reverse();
        Some(shortcut_walk(&walk))
    }
}

/// Removes closed sub-walks; the surviving edges are a subset of the walk's edges.
pub(crate) fn shortcut_walk(walk: &[usize]) -> Vec<usize> {
    let mut path: Vec<usize> = Vec::with_capacity(walk.len());
    for &v in walk {
        if let Some(pos) = path.iter().position(|&p| p == v) {
            path.truncate(pos + 1);
        } else {
            path.push(v);
        }
    }
    path
}

#[derive(Clone, Copy, Debug)]
pub struct ExactLimits {
    pub edge_cap: usize,
}

impl Default for ExactLimits {
    fn default() -> Self {
        ExactLimits {
            edge_cap: DEFAULT_EDGE_CAP,
        }
    }
}

/// rc(G) by exhaustive search, starting from max(diam, #bridges).
pub fn exact_rc(g: &Graph, limits: ExactLimits) -> Result<usize> {
    if g.m() > limits.edge_cap {
        return Err(Error::CapExceeded {
            what: "edge count",
            value: g.m(),
            cap: limits.edge_cap,
        });
    }
    let lower = rc_lower_bound(g)?;
    let upper = g.n().saturating_sub(1);
    for c in lower..upper {
        if search_colouring(g, c).is_some() {
            return Ok(c);
        }
    }
    Ok(upper.max(lower))
}

/// max(diam(G), number of bridges): no two bridges (in particular no two
/// pendant edges) may share a colour, and every shortest path must be rainbow.
pub fn rc_lower_bound(g: &Graph) -> Result<usize> {
    let diam = metrics(g)?.diameter;
    Ok(diam.max(bridges(g).len()))
}

/// A rainbow colouring with at most `c` colours, if one exists.
pub fn rainbow_colouring_with(g: &Graph, c: usize, limits: ExactLimits) -> Result<Option<EdgeColouring>> {
    if g.m() > limits.edge_cap {
        return Err(Error::CapExceeded {
            what: "edge count",
            value: g.m(),
            cap: limits.edge_cap,
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected("rainbow colouring"));
    }
    Ok(search_colouring(g, c))
}

fn search_colouring(g: &Graph, c: usize) -> Option<EdgeColouring> {
    if g.n() <= 1 {
        return Some(EdgeColouring::new(g, Vec::new()).unwrap());
    }
    if c == 0 || c > 64 {
        return None;
    }
    let order = edge_order(g);
    let mut checker = Feasibility::new(g, c);
    let mut assignment = vec![0u32; g.m()];
    let mut found = None;
    enumerate_canonical(order.len(), c as u32, &mut |prefix: &[u32], complete: bool| {
        for (i, &colour) in prefix.iter().enumerate() {
            assignment[order[i]] = colour;
        }
        for &e in &order[prefix.len()..] {
            assignment[e] = 0;
        }
        if !checker.feasible(&assignment) {
            return Visit::Prune;
        }
        if complete {
            found = Some(assignment.clone());
            return Visit::Stop;
        }
        Visit::Continue
    });
    found.map(|col| EdgeColouring::new(g, col).unwrap())
}

/// Edges in BFS discovery order from vertex 0, so prefixes stay local.
fn edge_order(g: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.m());
    let mut taken = vec![false; g.m()];
    let dist = g.distances_from(0);
    let mut by_dist: Vec<usize> = (0..g.n()).collect();
    by_dist.sort_by_key(|&v| (dist[v], v));
    for v in by_dist {
        for (_, e) in g.incident(v) {
            if !taken[e] {
                taken[e] = true;
                order.push(e);
            }
        }
    }
    order
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Visit {
    Continue,
    Prune,
    Stop,
}

/// Depth-first walk over restricted-growth strings of length `m` with values in
/// `1..=c`: position `i` may use at most one more than the largest earlier value.
/// Each colouring up to colour permutation is visited exactly once. The callback
/// sees every prefix (including the empty one) and whether it is complete.
pub(crate) fn enumerate_canonical<F>(m: usize, c: u32, visit: &mut F)
where
    F: FnMut(&[u32], bool) -> Visit,
{
    fn rec<F: FnMut(&[u32], bool) -> Visit>(
        prefix: &mut Vec<u32>,
        max_used: u32,
        m: usize,
        c: u32,
        visit: &mut F,
    ) -> bool {
        match visit(prefix, prefix.len() == m) {
            Visit::Stop => return true,
            Visit::Prune => return false,
            Visit::Continue => {}
        }
        if prefix.len() == m {
            return false;
        }
        for colour in 1..=(max_used + 1).min(c) {
            prefix.push(colour);
            let stop = rec(prefix, max_used.max(colour), m, c, visit);
            prefix.pop();
            if stop {
                return true;
            }
        }
        false
    }
    rec(&mut Vec::with_capacity(m), 0, m, c, visit);
}

/// Number of canonical colourings of `m` edges with at most `c` colours.
pub fn count_canonical_colourings(m: usize, c: usize) -> u64 {
    let mut count = 0u64;
    enumerate_canonical(m, c as u32, &mut |_, complete| {
        if complete {
            count += 1;
        }
        Visit::Continue
    });
    count
}

/// Optimistic rainbow-connectivity test for partial colourings: uncoloured
/// edges are wildcards that may take any colour not yet on the path. A complete
/// colouring passes iff it is rainbow connected.
struct Feasibility<'a> {
    g: &'a Graph,
    c: u32,
    last_failure: usize,
    seen: Vec<Vec<(u64, u32)>>,
}

impl<'a> Feasibility<'a> {
    fn new(g: &'a Graph, c: usize) -> Self {
        Feasibility {
            g,
            c: c as u32,
            last_failure: 0,
            seen: vec![Vec::new(); g.n()],
        }
    }

    fn feasible(&mut self, assignment: &[u32]) -> bool {
        let n = self.g.n();
        if !self.reaches_all(self.last_failure, assignment) {
            return false;
        }
        for s in 0..n {
            if s != self.last_failure && !self.reaches_all(s, assignment) {
                self.last_failure = s;
                return false;
            }
        }
        true
    }

    fn reaches_all(&mut self, src: usize, assignment: &[u32]) -> bool {
        let n = self.g.n();
        for list in self.seen.iter_mut() {
            list.clear();
        }
        let mut reached = vec![false; n];
        reached[src] = true;
        let mut remaining = n - 1;
        self.seen[src].push((0, 0));
        let mut frontier = vec![(src, 0u64, 0u32)];
        while !frontier.is_empty() && remaining > 0 {
            let mut next = Vec::new();
            for &(v, mask, wild) in &frontier {
                let used = mask.count_ones() + wild;
                if used >= self.c {
                    continue;
                }
                for (w, e) in self.g.incident(v) {
                    let colour = assignment[e];
                    let (m, wl) = if colour == 0 {
                        (mask, wild + 1)
                    } else {
                        let bit = 1u64 << (colour - 1);
                        if mask & bit != 0 {
                            continue;
                        }
                        (mask | bit, wild)
                    };
                    let seen = &mut self.seen[w];
                    if seen.iter().any(|&(om, ow)| om & !m == 0 && ow <= wl) {
                        continue;
                    }
                    seen.retain(|&(om, ow)| !(m & !om == 0 && wl <= ow));
                    seen.push((m, wl));
                    if !reached[w] {
                        reached[w] = true;
                        remaining -= 1;
                    }
                    next.push((w, m, wl));
                }
            }
            frontier = next;
        }
        remaining == 0
    }
}
