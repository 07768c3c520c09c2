use crate::error::{Error, Result};
use crate::graph::Graph;

/// A total edge colouring with colours in `1..=count`.
///
/// Colours are indexed by edge id (position in [`Graph::edges`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColouring {
    colours: Vec<u32>,
    count: u32,
}

impl EdgeColouring {
    /// Wraps a per-edge colour vector; colours must be ≥ 1 and cover every edge.
    pub fn new(g: &Graph, colours: Vec<u32>) -> Result<Self> {
        if colours.len() != g.m() {
            return Err(Error::InvalidColouring(format!(
                "{} colours for {} edges",
                colours.len(),
                g.m()
            )));
        }
        if let Some(pos) = colours.iter().position(|&c| c == 0) {
            let (u, v) = g.edges()[pos];
            return Err(Error::InvalidColouring(format!("edge ({u}, {v}) uncoloured")));
        }
        let count = colours.iter().copied().max().unwrap_or(0);
        Ok(EdgeColouring { colours, count })
    }

    /// Builds from `(u, v, colour)` triples; every edge of `g` must appear exactly once.
    pub fn from_triples(g: &Graph, triples: &[(usize, usize, u32)]) -> Result<Self> {
        let mut colours = vec![0u32; g.m()];
        for &(u, v, c) in triples {
            let id = g.edge_id(u, v).ok_or_else(|| {
                Error::InvalidColouring(format!("({u}, {v}) is not an edge"))
            })?;
            if colours[id] != 0 {
                return Err(Error::InvalidColouring(format!("edge ({u}, {v}) coloured twice")));
            }
            if c == 0 {
                return Err(Error::InvalidColouring(format!("colour 0 on ({u}, {v})")));
            }
            colours[id] = c;
        }
        Self::new(g, colours)
    }

    /// Largest colour in use (the colour count once normalized).
    pub fn count(&self) -> u32 {
        self.count
    }

    pub fn colour(&self, edge_id: usize) -> u32 {
        self.colours[edge_id]
    }

    pub fn colours(&self) -> &[u32] {
        &self.colours
    }

    pub fn colour_between(&self, g: &Graph, u: usize, v: usize) -> Option<u32> {
        g.edge_id(u, v).map(|e| self.colours[e])
    }

    /// Distinct colours actually used.
    pub fn distinct(&self) -> usize {
        let mut seen: Vec<u32> = self.colours.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Relabels the used colours onto `1..=c` preserving their order.
    pub fn normalized(&self) -> EdgeColouring {
        let map = compaction(&self.colours);
        let colours: Vec<u32> = self.colours.iter().map(|&c| map[c as usize]).collect();
        let count = colours.iter().copied().max().unwrap_or(0);
        EdgeColouring { colours, count }
    }
}

/// Order-preserving map from used colours onto `1..`; index by raw colour.
pub(crate) fn compaction(raw: &[u32]) -> Vec<u32> {
    let top = raw.iter().copied().max().unwrap_or(0) as usize;
    let mut used = vec![false; top + 1];
    for &c in raw {
        used[c as usize] = true;
    }
    let mut map = vec![0u32; top + 1];
    let mut next = 0;
    for c in 1..=top {
        if used[c] {
            next += 1;
            map[c] = next;
        }
    }
    map
}
