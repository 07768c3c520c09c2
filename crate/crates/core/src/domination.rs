//! Connected k-step dominating sets: verification, the two-stage greedy for
//! two-way two-step domination, a 1-step greedy, and an exact small-n oracle.

use std::collections::VecDeque;
use std::fmt::Write as _;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::{layers, membership, metrics, normalize_set, Graph, LayerDecomposition};
use crate::scalar::{Rational, Scalar};

/// Largest order accepted by [`exact_min_cds`].
pub const EXACT_CDS_CAP: usize = 20;

/// Snapshot of the greedy after an iteration (index 0 is the initial state).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyStep {
    pub stage: u8,
    pub added: Vec<usize>,
    pub set_size: usize,
    /// |D ∪ N¹(D)|
    pub closed_size: usize,
    /// |N²(D)|
    pub second_layer: usize,
    /// |N³(D)|, zero once the set is two-step dominating.
    pub third_layer: usize,
}

#[derive(Clone, Debug)]
pub struct DominationCertificate {
    pub set: Vec<usize>,
    pub k: usize,
    pub layers: LayerDecomposition,
    pub connected: bool,
    pub k_step_dominating: bool,
    pub two_way: bool,
    /// Stage 1 iteration count (k₁), when produced by the greedy.
    pub stage1_iterations: Option<usize>,
    /// Stage 2 iteration count (k₂), when produced by the greedy.
    pub stage2_iterations: Option<usize>,
    pub trace: Vec<GreedyStep>,
}

impl DominationCertificate {
    /// Connected, k-step dominating and two-way.
    pub fn all_flags(&self) -> bool {
        self.connected && self.k_step_dominating && self.two_way
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    /// The size limit the greedy guarantees, with whether it holds.
    ///
    /// After stage 2 the limit is `3n/(δ+1) − 2`; after stage 1 alone it is
    /// `3(n − |N²(D)|)/(δ+1) − 2`. `None` for sets not produced by the greedy.
    pub fn size_bound(&self, g: &Graph) -> Option<(Rational, bool)> {
        let n = g.n() as i64;
        let denom = g.min_degree() as i64 + 1;
        let limit = if self.stage2_iterations.is_some() {
            Ratio::new(3 * n, denom) - 2
        } else if self.stage1_iterations.is_some() {
            let second = self.layers.layer(2).len() as i64;
            Ratio::new(3 * (n - second), denom) - 2
        } else {
            return None;
        };
        Some((limit, Ratio::from_integer(self.set.len() as i64) <= limit))
    }

    /// Text block: set, flags, k₁/k₂ (−1 when absent) and the size bound check.
    pub fn to_text(&self, g: &Graph) -> String {
        let mut out = String::new();
        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
        let iter = |x: Option<usize>| x.map_or("-1".to_string(), |v| v.to_string());
        writeln!(out, "k {}", self.k).unwrap();
        writeln!(out, "size {}", self.set.len()).unwrap();
        writeln!(out, "set {}", join(&self.set)).unwrap();
        writeln!(out, "connected {}", self.connected).unwrap();
        writeln!(out, "k_step_dominating {}", self.k_step_dominating).unwrap();
        writeln!(out, "two_way {}", self.two_way).unwrap();
        writeln!(out, "k1 {}", iter(self.stage1_iterations)).unwrap();
        writeln!(out, "k2 {}", iter(self.stage2_iterations)).unwrap();
        match self.size_bound(g) {
            Some((limit, holds)) => writeln!(out, "bound {} holds {}", limit.to_decimal(), holds).unwrap(),
            None => writeln!(out, "bound none").unwrap(),
        }
        out
    }
}

fn induces_connected(g: &Graph, set: &[usize]) -> bool {
    if set.is_empty() {
        return false;
    }
    let inside = membership(g.n(), set);
    let mut seen = vec![false; g.n()];
    let mut queue = VecDeque::from([set[0]]);
    seen[set[0]] = true;
    let mut count = 1;
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbours(u) {
            if inside[w] && !seen[w] {
                seen[w] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    count == set.len()
}

/// Computes every flag exactly; a bad set is reported through the flags, not an error.
pub fn verify_domination(g: &Graph, set: &[usize], k: usize) -> Result<DominationCertificate> {
    if !(1..=2).contains(&k) {
        return Err(Error::Parameter(format!("step parameter must be 1 or 2, got {k}")));
    }
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    g.check_vertices(set)?;
    if !g.is_connected() {
        return Err(Error::Disconnected("domination"));
    }
    let set = normalize_set(set);
    let lay = layers(g, &set)?;
    let connected = induces_connected(g, &set);
    let k_step_dominating = lay.layers.len() <= k + 1 && lay.unreachable.is_empty();
    let inside = membership(g.n(), &set);
    let mut two_way = g.pendants().iter().all(|&p| inside[p]);
    if k == 2 && two_way {
        let first = membership(g.n(), lay.layer(1));
        two_way = lay
            .layer(2)
            .iter()
            .all(|&v| g.neighbours(v).iter().filter(|&&w| first[w]).count() >= 2);
    }
    Ok(DominationCertificate {
        set,
        k,
        layers: lay,
        connected,
        k_step_dominating,
        two_way,
        stage1_iterations: None,
        stage2_iterations: None,
        trace: Vec::new(),
    })
}

fn snapshot(g: &Graph, set: &[usize], stage: u8, added: Vec<usize>) -> Result<(GreedyStep, LayerDecomposition)> {
    let lay = layers(g, set)?;
    let step = GreedyStep {
        stage,
        added,
        set_size: set.len(),
        closed_size: lay.layer(0).len() + lay.layer(1).len(),
        second_layer: lay.layer(2).len(),
        third_layer: lay.layers.iter().skip(3).map(Vec::len).sum(),
    };
    Ok((step, lay))
}

fn require_min_degree_two(g: &Graph) -> Result<()> {
    if g.min_degree() < 2 {
        return Err(Error::Hypothesis(format!(
            "minimum degree {} < 2; use the connected dominating set pipeline instead",
            g.min_degree()
        )));
    }
    Ok(())
}

/// Stage 1: grow a connected two-step dominating set from `seed`.
///
/// While some vertex `v` is at distance 3, add `v` and the two inner vertices of
/// a shortest `v`–D path. The lowest-index such `v` is taken each round.
pub fn two_step_greedy_stage1(g: &Graph, seed: usize) -> Result<DominationCertificate> {
    if g.n() == 0 {
        return Err(Error::EmptySet);
    }
    g.check_vertices(&[seed])?;
    if !g.is_connected() {
        return Err(Error::Disconnected("domination"));
    }
    require_min_degree_two(g)?;
    let mut set = vec![seed];
    let (step, mut lay) = snapshot(g, &set, 1, vec![seed])?;
    let mut trace = vec![step];
    let mut iterations = 0;
    while let Some(&v) = lay.layer(3).first() {
        let path = lay.path_to_sources(v).expect("reachable");
        let added = vec![path[0], path[1], path[2]];
        set.extend_from_slice(&added);
        set.sort_unstable();
        iterations += 1;
        let (step, next) = snapshot(g, &set, 1, added)?;
        trace.push(step);
        lay = next;
    }
    let mut cert = verify_domination(g, &set, 2)?;
    cert.stage1_iterations = Some(iterations);
    cert.trace = trace;
    Ok(cert)
}

/// Stage 2: make a stage-1 set two-way.
///
/// While some `v ∈ N²(D')` has at least δ−1 neighbours in `N²(D')`, add `v` and
/// the middle vertex of a shortest `v`–D' path; the lowest-index qualifying `v`
/// is taken each round.
pub fn two_way_augment_stage2(g: &Graph, stage1: &DominationCertificate) -> Result<DominationCertificate> {
    if g.n() < 4 {
        return Err(Error::Hypothesis(format!("order n = {} < 4", g.n())));
    }
    require_min_degree_two(g)?;
    if stage1.k != 2 || !stage1.connected || !stage1.k_step_dominating {
        return Err(Error::InvalidCertificate(
            "stage 2 needs a connected two-step dominating set".into(),
        ));
    }
    let delta = g.min_degree();
    let mut set = stage1.set.clone();
    let (step, mut lay) = snapshot(g, &set, 2, Vec::new())?;
    let mut trace = stage1.trace.clone();
    trace.push(step);
    let mut iterations = 0;
    loop {
        let second = membership(g.n(), lay.layer(2));
        let pick = lay.layer(2).iter().copied().find(|&v| {
            g.neighbours(v).iter().filter(|&&w| second[w]).count() + 1 >= delta
        });
        let Some(v) = pick else { break };
        let path = lay.path_to_sources(v).expect("reachable");
        let added = vec![path[0], path[1]];
        set.extend_from_slice(&added);
        set.sort_unstable();
        iterations += 1;
        let (step, next) = snapshot(g, &set, 2, added)?;
        trace.push(step);
        lay = next;
    }
    let mut cert = verify_domination(g, &set, 2)?;
    cert.stage1_iterations = stage1.stage1_iterations;
    cert.stage2_iterations = Some(iterations);
    cert.trace = trace;
    Ok(cert)
}

/// Both greedy stages seeded at the centre vertex.
pub fn two_step_greedy(g: &Graph) -> Result<DominationCertificate> {
    let centre = metrics(g)?.centre;
    let stage1 = two_step_greedy_stage1(g, centre)?;
    two_way_augment_stage2(g, &stage1)
}

/// A connected dominating set from the internal vertices of a BFS tree rooted
/// at the centre, pruned while it stays connected and dominating. With
/// `two_way`, all pendant vertices are added afterwards.
pub fn greedy_connected_dominating_set(g: &Graph, two_way: bool) -> Result<DominationCertificate> {
    if g.n() == 0 {
        return Err(Error::EmptySet);
    }
    if g.n() == 1 {
        return verify_domination(g, &[0], 1);
    }
    let centre = metrics(g)?.centre;
    let lay = layers(g, &[centre])?;
    let mut internal = vec![false; g.n()];
    for v in 0..g.n() {
        if let Some(p) = lay.parent(v) {
            internal[p] = true;
        }
    }
    let mut set: Vec<usize> = (0..g.n()).filter(|&v| internal[v]).collect();
    let dominates = |s: &[usize]| {
        let inside = membership(g.n(), s);
        (0..g.n()).all(|v| inside[v] || g.neighbours(v).iter().any(|&w| inside[w]))
    };
    for v in set.clone() {
        let trial: Vec<usize> = set.iter().copied().filter(|&w| w != v).collect();
        if !trial.is_empty() && induces_connected(g, &trial) && dominates(&trial) {
            set = trial;
        }
    }
    if two_way {
        set.extend(g.pendants());
        set = normalize_set(&set);
    }
    verify_domination(g, &set, 1)
}

/// Minimum connected k-step dominating set by enumeration in increasing size;
/// the lexicographically first minimum is returned.
pub fn exact_min_cds(g: &Graph, k: usize) -> Result<DominationCertificate> {
    if g.n() > EXACT_CDS_CAP {
        return Err(Error::CapExceeded {
            what: "vertex count",
            value: g.n(),
            cap: EXACT_CDS_CAP,
        });
    }
    if !(1..=2).contains(&k) {
        return Err(Error::Parameter(format!("step parameter must be 1 or 2, got {k}")));
    }
    if g.n() == 0 {
        return Err(Error::EmptySet);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected("domination"));
    }
    let n = g.n();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let closed: Vec<u32> = (0..n)
        .map(|v| g.neighbours(v).iter().fold(1u32 << v, |acc, &w| acc | 1 << w))
        .collect();
    let reach: Vec<u32> = if k == 1 {
        closed.clone()
    } else {
        (0..n)
            .map(|v| {
                let mut acc = 0;
                let mut bits = closed[v];
                while bits != 0 {
                    let u = bits.trailing_zeros() as usize;
                    acc |= closed[u];
                    bits &= bits - 1;
                }
                acc
            })
            .collect()
    };
    let connected = |mask: u32| {
        let start = mask & mask.wrapping_neg();
        let mut seen = start;
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0;
            let mut bits = frontier;
            while bits != 0 {
                let u = bits.trailing_zeros() as usize;
                next |= closed[u] & mask;
                bits &= bits - 1;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == mask
    };
    for size in 1..=n {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let mask = idx.iter().fold(0u32, |acc, &v| acc | 1 << v);
            let covered = idx.iter().fold(0u32, |acc, &v| acc | reach[v]);
            if covered == full && connected(mask) {
                return verify_domination(g, &idx, k);
            }
            // next combination in lexicographic order
            let mut i = size;
            while i > 0 && idx[i - 1] == n - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    unreachable!("the whole vertex set is a connected dominating set")
}
