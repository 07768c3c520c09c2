//! Rainbow colourings built outward from a connected dominating set.
//!
//! [`extend_two_way`] and [`extend_two_way_two_step`] take a rainbow colouring
//! of G[D] with `k` colours and colour the rest of the graph with at most three
//! (resp. six) fresh colours. Both return an [`ExtensionScaffold`] that records
//! the partition of the outside vertices and can reconstruct, for any pair, an
//! explicit rainbow path following the case analysis of the construction.
//!
//! Colour roles, with `k` the base colour count:
//!
//! | edges                           | colour                          |
//! |---------------------------------|---------------------------------|
//! | inside D                        | base                            |
//! | X–D / Y–D                       | k+1 / k+2                       |
//! | Z–D                             | one leg k+1, the others k+2     |
//! | inside N¹(D)                    | k+3                             |
//! | A–X / A–Y                       | k+3 / k+4                       |
//! | B–G'                            | one edge k+5, the others k+6    |
//!
//! In the one-step case N²(D) is empty, so only the first four rows apply.

use std::fmt;

use crate::colouring::{compaction, EdgeColouring};
use crate::domination::{greedy_connected_dominating_set, two_step_greedy, DominationCertificate};
use crate::error::{Error, Result};
use crate::graph::{forest_bipartition_whole, induced_subgraph, layers, metrics, Graph};
use crate::oracle::{self, VerificationReport, VerifyOptions};

/// Produces an explicit rainbow path between two vertices.
pub trait Witness: Send + Sync {
    fn path(&self, u: usize, v: usize) -> Result<Vec<usize>>;
}

/// An edge colouring together with a way of exhibiting its rainbow paths.
pub struct RainbowColouring {
    pub colouring: EdgeColouring,
    pub witness: Box<dyn Witness>,
}

impl fmt::Debug for RainbowColouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RainbowColouring")
            .field("colouring", &self.colouring)
            .finish_non_exhaustive()
    }
}

impl RainbowColouring {
    /// Wraps an arbitrary colouring; witnesses come from the exhaustive pair search.
    pub fn searched(g: &Graph, colouring: EdgeColouring) -> Self {
        let witness = Box::new(SearchWitness {
            graph: g.clone(),
            colouring: colouring.clone(),
        });
        RainbowColouring { colouring, witness }
    }
}

/// Witness by exhaustive search; works for any colouring within the bit-set cap.
pub struct SearchWitness {
    graph: Graph,
    colouring: EdgeColouring,
}

impl Witness for SearchWitness {
    fn path(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        oracle::find_rainbow_path(&self.graph, &self.colouring, u, v).ok_or(Error::BaseNotRainbow(u, v))
    }
}

/// Paths in a spanning tree whose edges all carry distinct colours.
pub struct TreeWitness {
    parent: Vec<Option<usize>>,
    depth: Vec<usize>,
}

impl Witness for TreeWitness {
    fn path(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        let (mut a, mut b) = (u, v);
        let (mut left, mut right) = (vec![a], vec![b]);
        while a != b {
            if self.depth[a] >= self.depth[b] {
                a = self.parent[a].ok_or(Error::BaseNotRainbow(u, v))?;
                left.push(a);
            } else {
                b = self.parent[b].ok_or(Error::BaseNotRainbow(u, v))?;
                right.push(b);
            }
        }
        right.pop();
        left.extend(right.into_iter().rev());
        Ok(left)
    }
}

/// Spanning-tree colouring: BFS tree from the centre, tree edges coloured
/// `1..n-1` in discovery order, all other edges colour 1.
pub fn spanning_tree_colouring(g: &Graph) -> Result<RainbowColouring> {
    if g.n() == 0 {
        return Err(Error::EmptySet);
    }
    let centre = metrics(g)?.centre;
    let lay = layers(g, &[centre])?;
    let mut colours = vec![1u32; g.m()];
    let mut parent = vec![None; g.n()];
    let mut depth = vec![0; g.n()];
    let mut next = 1;
    for layer in lay.layers.iter().skip(1) {
        for &v in layer {
            let p = lay.parent(v).expect("layered vertex has a parent");
            parent[v] = Some(p);
            depth[v] = lay.distance(v).unwrap();
            colours[g.edge_id(v, p).unwrap()] = next;
            next += 1;
        }
    }
    Ok(RainbowColouring {
        colouring: EdgeColouring::new(g, colours)?,
        witness: Box::new(TreeWitness { parent, depth }),
    })
}

/// Where an outside vertex sits in the construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Region {
    Dominating,
    X,
    Y,
    Z,
    A,
    B,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ExtendOptions {
    /// Check with the exhaustive verifier that the base rainbow-connects G[D].
    pub verify_base: bool,
}

/// Bookkeeping of an extension: the partition of V(G) and the chosen legs.
pub struct ExtensionScaffold {
    /// 1 for the +3 extension, 2 for the +6 extension.
    pub steps: usize,
    /// Colours used by the base colouring of G[D].
    pub base_colours: u32,
    pub dominating: Vec<usize>,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub z: Vec<usize>,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub region: Vec<Region>,
    /// Spanning-forest neighbour of each X/Y vertex, with the N²(D) vertex
    /// bridging them when the forest edge is not an edge of G.
    pub partner: Vec<Option<(usize, Option<usize>)>>,
    /// Colour of every edge before unused colours were compacted.
    pub raw_colours: Vec<u32>,
    /// Foot of the k+1 leg (X and Z vertices).
    pub foot_first: Vec<Option<usize>>,
    /// Foot of a k+2 leg (Y and Z vertices).
    pub foot_second: Vec<Option<usize>>,
    /// A vertex: lowest X neighbour (k+3) and lowest Y neighbour (k+4).
    pub a_legs: Vec<Option<(usize, usize)>>,
    /// B vertex: the k+5 neighbour in G' and one k+6 neighbour in G'.
    pub b_legs: Vec<Option<(usize, usize)>>,
    graph: Graph,
    colouring: EdgeColouring,
    base: Box<dyn Witness>,
    base_local: Vec<Option<usize>>,
}

impl fmt::Debug for ExtensionScaffold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ExtensionScaffold")
            .field("steps", &self.steps)
            .field("base_colours", &self.base_colours)
            .field("dominating", &self.dominating)
            .field("x", &self.x)
            .field("y", &self.y)
            .field("z", &self.z)
            .field("a", &self.a)
            .field("b", &self.b)
            .finish_non_exhaustive()
    }
}

/// Colouring of G from a connected two-way dominating set, with at most k+3 colours.
pub fn extend_two_way(
    g: &Graph,
    cert: &DominationCertificate,
    base: RainbowColouring,
) -> Result<(EdgeColouring, ExtensionScaffold)> {
    extend_two_way_with(g, cert, base, ExtendOptions::default())
}

pub fn extend_two_way_with(
    g: &Graph,
    cert: &DominationCertificate,
    base: RainbowColouring,
    opts: ExtendOptions,
) -> Result<(EdgeColouring, ExtensionScaffold)> {
    extend(g, cert, base, opts, 1)
}

/// Colouring of G from a connected two-way two-step dominating set, with at most k+6 colours.
pub fn extend_two_way_two_step(
    g: &Graph,
    cert: &DominationCertificate,
    base: RainbowColouring,
) -> Result<(EdgeColouring, ExtensionScaffold)> {
    extend_two_way_two_step_with(g, cert, base, ExtendOptions::default())
}

pub fn extend_two_way_two_step_with(
    g: &Graph,
    cert: &DominationCertificate,
    base: RainbowColouring,
    opts: ExtendOptions,
) -> Result<(EdgeColouring, ExtensionScaffold)> {
    extend(g, cert, base, opts, 2)
}

fn check_certificate(g: &Graph, cert: &DominationCertificate, steps: usize) -> Result<DominationCertificate> {
    if cert.k != steps {
        return Err(Error::InvalidCertificate(format!(
            "expected a {steps}-step certificate, got k = {}",
            cert.k
        )));
    }
    // recompute rather than trust the caller's flags
    let fresh = crate::domination::verify_domination(g, &cert.set, steps)?;
    for (flag, name) in [
        (fresh.connected, "connected"),
        (fresh.k_step_dominating, "dominating"),
        (fresh.two_way, "two_way"),
    ] {
        if !flag {
            return Err(Error::InvalidCertificate(format!("flag {name} is false")));
        }
    }
    Ok(fresh)
}

fn extend(
    g: &Graph,
    cert: &DominationCertificate,
    base: RainbowColouring,
    opts: ExtendOptions,
    steps: usize,
) -> Result<(EdgeColouring, ExtensionScaffold)> {
    let cert = check_certificate(g, cert, steps)?;
    let n = g.n();
    let sub = induced_subgraph(g, &cert.set)?;
    if base.colouring.colours().len() != sub.graph.m() {
        return Err(Error::InvalidColouring(format!(
            "base colours {} edges but G[D] has {}",
            base.colouring.colours().len(),
            sub.graph.m()
        )));
    }
    if opts.verify_base {
        let report = oracle::rainbow_connected_with(
            &sub.graph,
            &base.colouring,
            VerifyOptions {
                colour_cap: oracle::MAX_COLOUR_CAP,
                collect_witnesses: false,
            },
        )?;
        if let Some((u, v)) = report.failing_pair {
            return Err(Error::BaseNotRainbow(sub.to_parent[u], sub.to_parent[v]));
        }
    }
    let k = base.colouring.count();
    let first = cert.layers.layer(1).to_vec();
    let second = cert.layers.layer(2).to_vec();

    let mut region = vec![Region::Dominating; n];
    let mut first_local = vec![None; n];
    for (i, &v) in first.iter().enumerate() {
        first_local[v] = Some(i);
    }
    let in_second = crate::graph::membership(n, &second);

    // Auxiliary graph on N¹(D): adjacent in G, or sharing a neighbour in N²(D).
    let mut via: std::collections::HashMap<(usize, usize), Option<usize>> = Default::default();
    for &u in &first {
        for &w in g.neighbours(u) {
            if first_local[w].is_some() && u < w {
                via.insert((u, w), None);
            }
        }
    }
    for &z in &second {
        let feet: Vec<usize> = g.neighbours(z).iter().copied().filter(|&w| first_local[w].is_some()).collect();
        for (i, &p) in feet.iter().enumerate() {
            for &q in &feet[i + 1..] {
                via.entry((p, q)).or_insert(Some(z));
            }
        }
    }
    let aux_edges: Vec<(usize, usize)> = via
        .keys()
        .map(|&(p, q)| (first_local[p].unwrap(), first_local[q].unwrap()))
        .collect();
    let aux = Graph::from_edges(first.len(), &aux_edges)?;
    let forest = forest_bipartition_whole(&aux);
    let globalize = |vs: &[usize]| -> Vec<usize> { vs.iter().map(|&i| first[i]).collect() };
    let (x, y, z) = (globalize(&forest.x), globalize(&forest.y), globalize(&forest.z));
    for &v in &x {
        region[v] = Region::X;
    }
    for &v in &y {
        region[v] = Region::Y;
    }
    for &v in &z {
        region[v] = Region::Z;
    }
    let mut partner = vec![None; n];
    for (i, p) in forest.partner.iter().enumerate() {
        if let Some(j) = *p {
            let (u, w) = (first[i], first[j]);
            partner[u] = Some((w, via[&(u.min(w), u.max(w))]));
        }
    }

    let in_dom = crate::graph::membership(n, &cert.set);
    let mut foot_first = vec![None; n];
    let mut foot_second = vec![None; n];
    for &v in &first {
        let feet: Vec<usize> = g.neighbours(v).iter().copied().filter(|&w| in_dom[w]).collect();
        match region[v] {
            Region::X => foot_first[v] = Some(feet[0]),
            Region::Y => foot_second[v] = Some(feet[0]),
            Region::Z => {
                if feet.len() < 2 {
                    return Err(Error::InvalidCertificate(format!(
                        "vertex {v} has a single leg into D"
                    )));
                }
                foot_first[v] = Some(feet[0]);
                foot_second[v] = Some(feet[1]);
            }
            _ => unreachable!(),
        }
    }

    let mut a = Vec::new();
    let mut b = Vec::new();
    let mut a_legs = vec![None; n];
    for &v in &second {
        let lowest = |r: Region| g.neighbours(v).iter().copied().find(|&w| region[w] == r && first_local[w].is_some());
        match (lowest(Region::X), lowest(Region::Y)) {
            (Some(px), Some(py)) => {
                region[v] = Region::A;
                a_legs[v] = Some((px, py));
                a.push(v);
            }
            _ => {
                region[v] = Region::B;
                b.push(v);
            }
        }
    }
    let mut b_legs = vec![None; n];
    for &v in &b {
        let mut into_core = g
            .neighbours(v)
            .iter()
            .copied()
            .filter(|&w| region[w] != Region::B && !(in_second[w] && region[w] != Region::A));
        let main = into_core.next();
        let other = into_core.next();
        match (main, other) {
            (Some(p), Some(q)) => b_legs[v] = Some((p, q)),
            _ => {
                return Err(Error::InvalidCertificate(format!(
                    "vertex {v} has fewer than two neighbours in D ∪ N¹(D) ∪ A"
                )))
            }
        }
    }

    let mut raw = vec![0u32; g.m()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        raw[e] = match (region[u], region[v]) {
            (Region::Dominating, Region::Dominating) => {
                let (lu, lv) = (sub.from_parent[u].unwrap(), sub.from_parent[v].unwrap());
                base.colouring.colour(sub.graph.edge_id(lu, lv).unwrap())
            }
            (Region::Dominating, _) | (_, Region::Dominating) => {
                let (out, foot) = if region[u] == Region::Dominating { (v, u) } else { (u, v) };
                match region[out] {
                    Region::X => k + 1,
                    Region::Y => k + 2,
                    Region::Z if foot_first[out] == Some(foot) => k + 1,
                    Region::Z => k + 2,
                    _ => unreachable!("only N¹(D) touches D"),
                }
            }
            (Region::B, _) | (_, Region::B) => {
                let (bv, other) = if region[u] == Region::B { (u, v) } else { (v, u) };
                if b_legs[bv].map(|(main, _)| main) == Some(other) {
                    k + 5
                } else {
                    k + 6
                }
            }
            (Region::A, Region::Y) | (Region::Y, Region::A) => k + 4,
            // A–X, inside N¹(D), and A–A (not used by any witness path)
            _ => k + 3,
        };
    }
    let palette = compaction(&raw);
    let colouring = EdgeColouring::new(g, raw.iter().map(|&c| palette[c as usize]).collect())?;

    let scaffold = ExtensionScaffold {
        steps,
        base_colours: k,
        dominating: cert.set.clone(),
        x,
        y,
        z,
        a,
        b,
        region,
        partner,
        raw_colours: raw,
        foot_first,
        foot_second,
        a_legs,
        b_legs,
        graph: g.clone(),
        colouring: colouring.clone(),
        base: base.witness,
        base_local: sub.from_parent,
    };
    Ok((colouring, scaffold))
}

impl ExtensionScaffold {
    pub fn colouring(&self) -> &EdgeColouring {
        &self.colouring
    }

    fn base_path(&self, f: usize, g: usize) -> Result<Vec<usize>> {
        if f == g {
            return Ok(vec![f]);
        }
        let (lf, lg) = (self.base_local[f].unwrap(), self.base_local[g].unwrap());
        let local = self.base.path(lf, lg).map_err(|_| Error::BaseNotRainbow(f, g))?;
        Ok(local.into_iter().map(|i| self.dominating[i]).collect())
    }

    fn is_first(&self, v: usize) -> bool {
        matches!(self.region[v], Region::X | Region::Y | Region::Z)
    }

    /// X or Z vertex to Y or Z vertex: k+1 leg, base path, k+2 leg.
    fn cross(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        let mut p = vec![u];
        p.extend(self.base_path(self.foot_first[u].unwrap(), self.foot_second[v].unwrap())?);
        p.push(v);
        Ok(p)
    }

    /// Forest hop from an X/Y vertex to its partner: `[u, (bridge,) partner]`.
    fn hop(&self, u: usize) -> Vec<usize> {
        let (p, bridge) = self.partner[u].expect("X/Y vertex has a forest partner");
        let mut out = vec![u];
        out.extend(bridge);
        out.push(p);
        out
    }

    fn leg(&self, v: usize) -> usize {
        self.foot_first[v].or(self.foot_second[v]).unwrap()
    }

    /// Paths inside G' = G[D ∪ N¹(D) ∪ A], colours at most k+4.
    fn inner(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        use Region::*;
        if u == v {
            return Ok(vec![u]);
        }
        let (ru, rv) = (self.region[u], self.region[v]);
        let path = match (ru, rv) {
            (Dominating, Dominating) => self.base_path(u, v)?,
            (_, Dominating) if self.is_first(u) => {
                let mut p = vec![u];
                p.extend(self.base_path(self.leg(u), v)?);
                p
            }
            (X | Z, Y | Z) => self.cross(u, v)?,
            (X, X) => {
                let mut p = self.hop(u);
                let partner = *p.last().unwrap();
                let mut back = self.cross(v, partner)?;
                back.reverse();
                p.extend_from_slice(&back[1..]);
                p
            }
            (Y, Y) => {
                let mut p = self.hop(u);
                let partner = *p.last().unwrap();
                p.extend_from_slice(&self.cross(partner, v)?[1..]);
                p
            }
            (A, A) => {
                let (px, _) = self.a_legs[u].unwrap();
                let (_, qy) = self.a_legs[v].unwrap();
                let mut p = vec![u];
                p.extend(self.cross(px, qy)?);
                p.push(v);
                p
            }
            (A, _) => {
                let (px, py) = self.a_legs[u].unwrap();
                let step = if rv == Y { px } else { py };
                let mut p = vec![u];
                p.extend(self.inner(step, v)?);
                p
            }
            _ => {
                let mut p = self.inner(v, u)?;
                p.reverse();
                p
            }
        };
        Ok(path)
    }

    fn raw_path(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        use Region::*;
        match (self.region[u], self.region[v]) {
            (B, B) => {
                let (main, _) = self.b_legs[u].unwrap();
                let (_, other) = self.b_legs[v].unwrap();
                let mut p = vec![u];
                p.extend(self.inner(main, other)?);
                p.push(v);
                Ok(p)
            }
            (B, _) => {
                let (main, _) = self.b_legs[u].unwrap();
                let mut p = vec![u];
                p.extend(self.inner(main, v)?);
                Ok(p)
            }
            (_, B) => {
                let mut p = self.raw_path(v, u)?;
                p.reverse();
                Ok(p)
            }
            _ => self.inner(u, v),
        }
    }
}

impl Witness for ExtensionScaffold {
    fn path(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        let n = self.graph.n();
        if u >= n || v >= n {
            return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
        }
        let path = self.raw_path(u, v)?;
        if !oracle::check_rainbow_path(&self.graph, &self.colouring, &path) {
            return Err(Error::BrokenWitness(u, v));
        }
        Ok(path)
    }
}

/// Explicit rainbow `u`–`v` path under the scaffold's colouring, validated before return.
pub fn witness_path(scaffold: &ExtensionScaffold, u: usize, v: usize) -> Result<Vec<usize>> {
    scaffold.path(u, v)
}

/// Result of a colouring pipeline.
pub struct PipelineOutcome {
    pub algorithm: &'static str,
    pub colouring: EdgeColouring,
    pub certificate: Option<DominationCertificate>,
    pub witness: Box<dyn Witness>,
    /// Upper bound on the colour count guaranteed for this input.
    pub bound: usize,
    /// The requested pipeline's hypotheses failed and a fallback ran.
    pub fallback: bool,
}

impl fmt::Debug for PipelineOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PipelineOutcome")
            .field("algorithm", &self.algorithm)
            .field("colours", &self.colouring.count())
            .field("bound", &self.bound)
            .field("fallback", &self.fallback)
            .finish_non_exhaustive()
    }
}

impl PipelineOutcome {
    /// Exhaustive verification when the colour count is within `colour_cap`,
    /// otherwise every pair's witness path is checked independently.
    pub fn verify(&self, g: &Graph, colour_cap: usize) -> Result<VerificationReport> {
        verify_colouring(g, &self.colouring, self.witness.as_ref(), colour_cap)
    }
}

pub fn verify_colouring(
    g: &Graph,
    colouring: &EdgeColouring,
    witness: &dyn Witness,
    colour_cap: usize,
) -> Result<VerificationReport> {
    if colouring.count() as usize <= colour_cap.min(oracle::MAX_COLOUR_CAP) {
        oracle::rainbow_connected_with(
            g,
            colouring,
            VerifyOptions {
                colour_cap,
                collect_witnesses: false,
            },
        )
    } else {
        oracle::verify_with_witnesses(g, colouring, |u, v| witness.path(u, v).ok())
    }
}

fn trivial_outcome(g: &Graph, algorithm: &'static str) -> Result<PipelineOutcome> {
    let base = spanning_tree_colouring(g)?;
    Ok(PipelineOutcome {
        algorithm,
        colouring: base.colouring,
        certificate: None,
        witness: base.witness,
        bound: 0,
        fallback: false,
    })
}

/// Greedy connected two-way dominating set, spanning-tree colouring of G[D],
/// then the +3 extension: at most |D| + 2 colours.
pub fn pipeline_cds(g: &Graph) -> Result<PipelineOutcome> {
    pipeline_cds_with(g, ExtendOptions::default())
}

pub fn pipeline_cds_with(g: &Graph, opts: ExtendOptions) -> Result<PipelineOutcome> {
    if !g.is_connected() {
        return Err(Error::Disconnected("rainbow colouring"));
    }
    if g.n() <= 1 {
        return trivial_outcome(g, "cds");
    }
    let cert = greedy_connected_dominating_set(g, true)?;
    let sub = induced_subgraph(g, &cert.set)?;
    let base = spanning_tree_colouring(&sub.graph)?;
    let (colouring, scaffold) = extend_two_way_with(g, &cert, base, opts)?;
    Ok(PipelineOutcome {
        algorithm: "cds",
        colouring,
        bound: cert.len() + 2,
        certificate: Some(cert),
        witness: Box::new(scaffold),
        fallback: false,
    })
}

/// ⌊3n/(δ+1)⌋ + 3.
pub fn min_degree_bound(n: usize, delta: usize) -> usize {
    3 * n / (delta + 1) + 3
}

/// Two-stage greedy two-way two-step dominating set, spanning-tree colouring
/// of G[D'], then the +6 extension. Falls back to [`pipeline_cds`] when δ ≤ 1
/// or n < 4.
pub fn pipeline_mindeg(g: &Graph) -> Result<PipelineOutcome> {
    pipeline_mindeg_with(g, ExtendOptions::default())
}

pub fn pipeline_mindeg_with(g: &Graph, opts: ExtendOptions) -> Result<PipelineOutcome> {
    if !g.is_connected() {
        return Err(Error::Disconnected("rainbow colouring"));
    }
    if g.min_degree() <= 1 || g.n() < 4 {
        let mut out = pipeline_cds_with(g, opts)?;
        out.algorithm = "mindeg";
        out.fallback = true;
        return Ok(out);
    }
    let cert = two_step_greedy(g)?;
    let sub = induced_subgraph(g, &cert.set)?;
    let base = spanning_tree_colouring(&sub.graph)?;
    let (colouring, scaffold) = extend_two_way_two_step_with(g, &cert, base, opts)?;
    Ok(PipelineOutcome {
        algorithm: "mindeg",
        colouring,
        bound: min_degree_bound(g.n(), g.min_degree()),
        certificate: Some(cert),
        witness: Box::new(scaffold),
        fallback: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::verify_domination;
    use crate::oracle::rainbow_connected;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    fn all_witnesses_valid(g: &Graph, col: &EdgeColouring, w: &dyn Witness) {
        for u in 0..g.n() {
            for v in 0..g.n() {
                if u != v {
                    let p = w.path(u, v).unwrap();
                    assert_eq!((p[0], *p.last().unwrap()), (u, v));
                    assert!(oracle::check_rainbow_path(g, col, &p));
                }
            }
        }
    }

    #[test]
    fn spanning_tree_examples() {
        let p4 = spanning_tree_colouring(&path(4)).unwrap();
        let mut cs = p4.colouring.colours().to_vec();
        cs.sort_unstable();
        assert_eq!(cs, vec![1, 2, 3]);
        let k4 = spanning_tree_colouring(&complete(4)).unwrap();
        assert_eq!(k4.colouring.count(), 3);
        assert!(rainbow_connected(&complete(4), &k4.colouring).unwrap().rainbow_connected);
        let single = spanning_tree_colouring(&Graph::empty(1)).unwrap();
        assert_eq!(single.colouring.count(), 0);
        assert!(spanning_tree_colouring(&Graph::empty(2)).is_err());
        all_witnesses_valid(&complete(4), &k4.colouring, k4.witness.as_ref());
    }

    #[test]
    fn extension_with_whole_vertex_set_keeps_base() {
        let g = cycle(5);
        let cert = verify_domination(&g, &[0, 1, 2, 3, 4], 1).unwrap();
        let base = spanning_tree_colouring(&g).unwrap();
        let expected = base.colouring.clone();
        let (col, scaffold) = extend_two_way(&g, &cert, base).unwrap();
        assert_eq!(col, expected);
        assert!(scaffold.x.is_empty() && scaffold.y.is_empty() && scaffold.z.is_empty());
    }

    #[test]
    fn extension_on_c5() {
        let g = cycle(5);
        let cert = verify_domination(&g, &[0, 1, 2], 1).unwrap();
        let sub = induced_subgraph(&g, &cert.set).unwrap();
        let base = spanning_tree_colouring(&sub.graph).unwrap();
        let (col, scaffold) = extend_two_way(&g, &cert, base).unwrap();
        assert!(col.count() <= 5);
        assert!(rainbow_connected(&g, &col).unwrap().rainbow_connected);
        all_witnesses_valid(&g, &col, &scaffold);
    }

    #[test]
    fn extension_rejects_bad_certificate() {
        let g = cycle(5);
        let cert = verify_domination(&g, &[0, 1], 1).unwrap();
        let sub = induced_subgraph(&g, &cert.set).unwrap();
        let base = spanning_tree_colouring(&sub.graph).unwrap();
        assert!(matches!(extend_two_way(&g, &cert, base), Err(Error::InvalidCertificate(_))));
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let cert = verify_domination(&star, &[0], 1).unwrap();
        let base = spanning_tree_colouring(&Graph::empty(1)).unwrap();
        let err = extend_two_way(&star, &cert, base).unwrap_err();
        assert_eq!(err, Error::InvalidCertificate("flag two_way is false".into()));
    }

    #[test]
    fn debug_verification_catches_bad_base() {
        let g = cycle(6);
        let cert = verify_domination(&g, &[0, 1, 2, 3], 1).unwrap();
        let sub = induced_subgraph(&g, &cert.set).unwrap();
        // P4 with a repeated colour is not rainbow connected
        let bad = EdgeColouring::new(&sub.graph, vec![1, 1, 2]).unwrap();
        let base = RainbowColouring::searched(&sub.graph, bad);
        let err = extend_two_way_with(&g, &cert, base, ExtendOptions { verify_base: true }).unwrap_err();
        assert_eq!(err, Error::BaseNotRainbow(0, 2));
    }

    #[test]
    fn witness_reports_base_failure() {
        let g = cycle(6);
        let cert = verify_domination(&g, &[0, 1, 2, 3], 1).unwrap();
        let sub = induced_subgraph(&g, &cert.set).unwrap();
        let bad = EdgeColouring::new(&sub.graph, vec![1, 1, 2]).unwrap();
        let base = RainbowColouring::searched(&sub.graph, bad);
        let (_, scaffold) = extend_two_way(&g, &cert, base).unwrap();
        assert_eq!(witness_path(&scaffold, 0, 2), Err(Error::BaseNotRainbow(0, 2)));
    }

    #[test]
    fn z_vertices_with_shared_foot() {
        // 0 is the hub of D = {0, 1, 2}; 3 and 4 hang off 0 and 1 / 0 and 2
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (1, 3), (0, 4), (2, 4)]).unwrap();
        let cert = verify_domination(&g, &[0, 1, 2], 1).unwrap();
        let sub = induced_subgraph(&g, &cert.set).unwrap();
        let base = spanning_tree_colouring(&sub.graph).unwrap();
        let (col, scaffold) = extend_two_way(&g, &cert, base).unwrap();
        assert_eq!(scaffold.z, vec![3, 4]);
        assert_eq!(scaffold.foot_first[3], Some(0));
        assert_eq!(scaffold.foot_first[4], Some(0));
        let p = witness_path(&scaffold, 3, 4).unwrap();
        // k+1 leg of 3 to the shared foot 0, base path 0-2, k+2 leg of 4
        assert_eq!(p, vec![3, 0, 2, 4]);
        assert!(oracle::check_rainbow_path(&g, &col, &p));
    }

    #[test]
    fn two_step_on_c9() {
        let g = cycle(9);
        let out = pipeline_mindeg(&g).unwrap();
        assert!(!out.fallback);
        let d = out.certificate.as_ref().unwrap().len();
        assert!(out.colouring.count() as usize <= d - 1 + 6);
        assert!(out.colouring.count() as usize <= 12);
        assert!(rainbow_connected(&g, &out.colouring).unwrap().rainbow_connected);
        all_witnesses_valid(&g, &out.colouring, out.witness.as_ref());
    }

    #[test]
    fn two_step_whole_set_keeps_base() {
        let g = complete(5);
        let cert = verify_domination(&g, &[0, 1, 2, 3, 4], 2).unwrap();
        let base = spanning_tree_colouring(&g).unwrap();
        let expected = base.colouring.clone();
        let (col, _) = extend_two_way_two_step(&g, &cert, base).unwrap();
        assert_eq!(col, expected);
    }

    #[test]
    fn mindeg_on_complete_graph() {
        let out = pipeline_mindeg(&complete(5)).unwrap();
        assert_eq!(out.certificate.as_ref().unwrap().set.len(), 1);
        assert!(out.colouring.count() <= 6);
        assert!(rainbow_connected(&complete(5), &out.colouring).unwrap().rainbow_connected);
    }

    #[test]
    fn mindeg_falls_back_on_pendants() {
        let out = pipeline_mindeg(&path(6)).unwrap();
        assert!(out.fallback);
        assert!(rainbow_connected(&path(6), &out.colouring).unwrap().rainbow_connected);
        let out = pipeline_mindeg(&complete(3)).unwrap();
        assert!(out.fallback);
    }

    #[test]
    fn cds_on_complete_graph() {
        let out = pipeline_cds(&complete(4)).unwrap();
        assert!(out.colouring.count() <= 3);
        assert!(rainbow_connected(&complete(4), &out.colouring).unwrap().rainbow_connected);
    }
}
