//! Plain-text formats for graphs, colourings, interval and arc representations.
//!
//! Blank lines and lines starting with `#` are ignored everywhere. Parse errors
//! carry the 1-based line number in the original text.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::classes::{ArcRepresentation, IntervalRepresentation};
use crate::colouring::EdgeColouring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::Scalar;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            None
        } else {
            Some((i + 1, line.split_whitespace().collect()))
        }
    })
}

fn parse_error(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn fields<const N: usize>(line: usize, tokens: &[&str]) -> Result<()> {
    if tokens.len() != N {
        return Err(parse_error(line, format!("expected {N} fields, found {}", tokens.len())));
    }
    Ok(())
}

fn number<T: FromStr>(line: usize, token: &str) -> Result<T> {
    token
        .parse()
        .map_err(|_| parse_error(line, format!("not a non-negative integer: {token:?}")))
}

fn scalar<T: Scalar>(line: usize, token: &str) -> Result<T> {
    T::parse_decimal(token).ok_or_else(|| parse_error(line, format!("not a number: {token:?}")))
}

/// `n m` followed by `m` lines `u v`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or_else(|| parse_error(1, "missing header \"n m\""))?;
    fields::<2>(line, &header)?;
    let n: usize = number(line, header[0])?;
    let m: usize = number(line, header[1])?;
    let mut edges = Vec::with_capacity(m);
    let mut last_line = line;
    for (line, tokens) in lines {
        fields::<2>(line, &tokens)?;
        let (u, v): (usize, usize) = (number(line, tokens[0])?, number(line, tokens[1])?);
        if u >= n || v >= n {
            return Err(parse_error(line, format!("vertex {} out of range for n = {n}", u.max(v))));
        }
        if u == v {
            return Err(parse_error(line, format!("self-loop at {u}")));
        }
        edges.push((u, v));
        last_line = line;
        if edges.len() > m {
            return Err(parse_error(line, format!("more than the declared {m} edges")));
        }
    }
    if edges.len() != m {
        return Err(parse_error(last_line, format!("declared {m} edges, found {}", edges.len())));
    }
    let mut seen = std::collections::HashSet::new();
    for (i, &(u, v)) in edges.iter().enumerate() {
        if !seen.insert((u.min(v), u.max(v))) {
            let line = content_lines(text).nth(i + 1).map(|(l, _)| l).unwrap_or(0);
            return Err(parse_error(line, format!("duplicate edge ({u}, {v})")));
        }
    }
    Graph::from_edges(n, &edges)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// `c` followed by one line `u v colour` per edge of `g`.
pub fn parse_colouring(g: &Graph, text: &str) -> Result<EdgeColouring> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or_else(|| parse_error(1, "missing header \"c\""))?;
    fields::<1>(line, &header)?;
    let c: u32 = number(line, header[0])?;
    let mut colours = vec![0u32; g.m()];
    let mut last_line = line;
    for (line, tokens) in lines {
        fields::<3>(line, &tokens)?;
        let u: usize = number(line, tokens[0])?;
        let v: usize = number(line, tokens[1])?;
        let colour: u32 = number(line, tokens[2])?;
        let e = g
            .edge_id(u, v)
            .ok_or_else(|| parse_error(line, format!("({u}, {v}) is not an edge")))?;
        if colours[e] != 0 {
            return Err(parse_error(line, format!("edge ({u}, {v}) coloured twice")));
        }
        if colour == 0 || colour > c {
            return Err(parse_error(line, format!("colour {colour} outside 1..={c}")));
        }
        colours[e] = colour;
        last_line = line;
    }
    if let Some(e) = colours.iter().position(|&x| x == 0) {
        let (u, v) = g.edges()[e];
        return Err(parse_error(last_line, format!("edge ({u}, {v}) has no colour")));
    }
    let col = EdgeColouring::new(g, colours)?;
    if col.count() != c {
        return Err(parse_error(
            1,
            format!("header declares {c} colours but the largest is {}", col.count()),
        ));
    }
    Ok(col)
}

pub fn write_colouring(g: &Graph, col: &EdgeColouring) -> String {
    let mut out = format!("{}\n", col.count());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        writeln!(out, "{u} {v} {}", col.colour(e)).unwrap();
    }
    out
}

/// Lines `id a b`, every id in `0..n` exactly once (any order).
fn parse_pairs<T: Scalar>(text: &str, n: usize) -> Result<Vec<(T, T)>> {
    let mut slots: Vec<Option<(T, T)>> = vec![None; n];
    let mut last_line = 0;
    for (line, tokens) in content_lines(text) {
        fields::<3>(line, &tokens)?;
        let id: usize = number(line, tokens[0])?;
        if id >= n {
            return Err(parse_error(line, format!("id {id} out of range for n = {n}")));
        }
        if slots[id].is_some() {
            return Err(parse_error(line, format!("id {id} listed twice")));
        }
        slots[id] = Some((scalar(line, tokens[1])?, scalar(line, tokens[2])?));
        last_line = line;
    }
    slots
        .into_iter()
        .enumerate()
        .map(|(id, s)| s.ok_or_else(|| parse_error(last_line, format!("id {id} missing"))))
        .collect()
}

fn write_pairs<T: Scalar>(pairs: &[(T, T)]) -> String {
    let mut out = String::new();
    for (id, (a, b)) in pairs.iter().enumerate() {
        writeln!(out, "{id} {} {}", a.to_decimal(), b.to_decimal()).unwrap();
    }
    out
}

/// Interval file `id left right`, validated against `g`.
pub fn parse_intervals<T: Scalar>(g: &Graph, text: &str) -> Result<IntervalRepresentation<T>> {
    IntervalRepresentation::new(g, parse_pairs(text, g.n())?)
}

pub fn write_intervals<T: Scalar>(rep: &IntervalRepresentation<T>) -> String {
    write_pairs(rep.intervals())
}

/// Arc file `id start end`, validated against `g`.
pub fn parse_arcs<T: Scalar>(g: &Graph, text: &str) -> Result<ArcRepresentation<T>> {
    ArcRepresentation::new(g, parse_pairs(text, g.n())?)
}

pub fn write_arcs<T: Scalar>(rep: &ArcRepresentation<T>) -> String {
    write_pairs(rep.arcs())
}

/// Weight file `id weight`, one line per vertex.
pub fn parse_weights<T: Scalar>(text: &str, n: usize) -> Result<Vec<T>> {
    let mut slots: Vec<Option<T>> = vec![None; n];
    let mut last_line = 0;
    for (line, tokens) in content_lines(text) {
        fields::<2>(line, &tokens)?;
        let id: usize = number(line, tokens[0])?;
        if id >= n {
            return Err(parse_error(line, format!("id {id} out of range for n = {n}")));
        }
        if slots[id].is_some() {
            return Err(parse_error(line, format!("id {id} listed twice")));
        }
        slots[id] = Some(scalar(line, tokens[1])?);
        last_line = line;
    }
    slots
        .into_iter()
        .enumerate()
        .map(|(id, s)| s.ok_or_else(|| parse_error(last_line, format!("id {id} missing"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    #[test]
    fn graph_round_trip() {
        let text = "# a triangle\n3 3\n1 0\n\n2 1\n0 2\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(write_graph(&g), "3 3\n0 1\n0 2\n1 2\n");
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn graph_errors_carry_lines() {
        assert_eq!(
            parse_graph("3 2\n0 1\n0 5\n").unwrap_err(),
            Error::Parse {
                line: 3,
                msg: "vertex 5 out of range for n = 3".into()
            }
        );
        assert!(matches!(parse_graph("3 2\n0 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("3 2\n0 1\n1 0\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_graph("3 1\n0 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("3 1\n0 1 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph(""), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn colouring_round_trip() {
        let g = parse_graph("4 3\n0 1\n1 2\n2 3\n").unwrap();
        let text = "3\n2 3 3\n0 1 1\n1 2 2\n";
        let col = parse_colouring(&g, text).unwrap();
        let written = write_colouring(&g, &col);
        assert_eq!(written, "3\n0 1 1\n1 2 2\n2 3 3\n");
        assert_eq!(write_colouring(&g, &parse_colouring(&g, &written).unwrap()), written);
        assert!(matches!(parse_colouring(&g, "3\n0 1 1\n1 2 2\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_colouring(&g, "2\n0 1 1\n1 2 2\n2 3 3\n"), Err(Error::Parse { line: 4, .. })));
        assert!(matches!(parse_colouring(&g, "4\n0 1 1\n1 2 2\n2 3 3\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn intervals_round_trip() {
        let g = parse_graph("3 2\n0 1\n1 2\n").unwrap();
        let rep: IntervalRepresentation<Rational> = parse_intervals(&g, "2 2 3.5\n0 0 1\n1 0.5 2\n").unwrap();
        let text = write_intervals(&rep);
        assert_eq!(text, "0 0 1\n1 0.5 2\n2 2 3.5\n");
        assert_eq!(parse_intervals::<Rational>(&g, &text).unwrap(), rep);
        assert!(matches!(parse_intervals::<Rational>(&g, "0 0 1\n1 0.5 2\n"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_intervals::<Rational>(&g, "0 0 1\n1 5 6\n2 2 3\n"),
            Err(Error::InvalidRepresentation(_))
        ));
    }

    #[test]
    fn arcs_and_weights() {
        let g = parse_graph("2 1\n0 1\n").unwrap();
        let rep: ArcRepresentation<f64> = parse_arcs(&g, "0 0.9 0.1\n1 0.05 0.5\n").unwrap();
        assert_eq!(write_arcs(&rep), "0 0.9 0.1\n1 0.05 0.5\n");
        let w: Vec<Rational> = parse_weights("1 0\n0 1\n", 2).unwrap();
        assert_eq!(w[0], Rational::from_integer(1));
        assert!(parse_weights::<Rational>("0 1\n", 2).is_err());
    }
}
