//! Text formats for complexes and face lists.
//!
//! A pure complex is written as a `n <count> d <dim>` header followed by one
//! facet per line, vertices increasing and space separated. Face lists use
//! `n <count>` (or `n <count> t <card>` for a single cardinality).

use std::fmt;

use super::{FaceSetByCardinality, PureComplex};
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_face(line: usize, l: &str, n: usize) -> Result<VertexSet> {
    let mut prev = 0;
    let mut face = VertexSet::EMPTY;
    for tok in l.split_whitespace() {
        let v: usize = tok
            .parse()
            .map_err(|_| Error::parse(line, format!("bad vertex `{tok}`")))?;
        if v <= prev || v > n {
            return Err(Error::parse(
                line,
                format!("vertices must increase strictly within 1..={n}"),
            ));
        }
        face = face.with(v);
        prev = v;
    }
    Ok(face)
}

fn header_value(line: usize, toks: &[&str], key: &str, at: usize) -> Result<usize> {
    match (toks.get(at), toks.get(at + 1)) {
        (Some(k), Some(v)) if *k == key => v
            .parse()
            .map_err(|_| Error::parse(line, format!("bad value for `{key}`: `{v}`"))),
        _ => Err(Error::parse(line, format!("expected `{key} <value>` in header"))),
    }
}

impl PureComplex {
    pub fn parse(text: &str) -> Result<PureComplex> {
        let mut lines = content_lines(text);
        let (hl, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing `n <count> d <dim>` header"))?;
        let toks: Vec<&str> = header.split_whitespace().collect();
        if toks.len() != 4 {
            return Err(Error::parse(hl, "expected `n <count> d <dim>`"));
        }
        let n = header_value(hl, &toks, "n", 0)?;
        let d = header_value(hl, &toks, "d", 2)?;
        let mut facets = Vec::new();
        for (line, l) in lines {
            let f = parse_face(line, l, n)?;
            if f.len() != d + 1 {
                return Err(Error::parse(line, format!("facet must have {} vertices", d + 1)));
            }
            if facets.contains(&f) {
                return Err(Error::parse(line, format!("duplicate facet {f}")));
            }
            facets.push(f);
        }
        PureComplex::new(n, d, facets).map_err(|e| Error::parse(hl, e.to_string()))
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for PureComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {} d {}", self.n, self.d)?;
        for facet in &self.facets {
            writeln!(f, "{}", facet.to_line())?;
        }
        Ok(())
    }
}

impl FaceSetByCardinality {
    pub fn to_text(&self, n: usize) -> String {
        let mut out = format!("n {n} t {}\n", self.t);
        for f in &self.faces {
            out.push_str(&f.to_line());
            out.push('\n');
        }
        out
    }
}

/// `n <count>` header followed by one face per line.
pub fn write_face_list(n: usize, faces: &[VertexSet]) -> String {
    let mut out = format!("n {n}\n");
    for f in faces {
        out.push_str(&f.to_line());
        out.push('\n');
    }
    out
}

pub fn parse_face_list(text: &str) -> Result<(usize, Vec<VertexSet>)> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing `n <count>` header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    let n = header_value(hl, &toks, "n", 0)?;
    let mut faces = Vec::new();
    for (line, l) in lines {
        faces.push(parse_face(line, l, n)?);
    }
    Ok((n, faces))
}
