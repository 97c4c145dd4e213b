//! Edge-list text format.
//!
//! ```text
//! n 4
//! # comment
//! 1 2
//! 2 3
//! ```

use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

impl Graph {
    pub fn parse(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing `n <count>` header"))?;
        let mut parts = header.split_whitespace();
        let n = match (parts.next(), parts.next(), parts.next()) {
            (Some("n"), Some(count), None) => count
                .parse::<usize>()
                .map_err(|_| Error::parse(hline, format!("bad vertex count `{count}`")))?,
            _ => return Err(Error::parse(hline, "expected `n <count>`")),
        };
        let mut g = Graph::new(n).map_err(|e| Error::parse(hline, e.to_string()))?;
        for (line, l) in lines {
            let nums: Vec<&str> = l.split_whitespace().collect();
            if nums.len() != 2 {
                return Err(Error::parse(line, "expected an edge `u v`"));
            }
            let parse = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| Error::parse(line, format!("bad vertex `{s}`")))
            };
            let (u, v) = (parse(nums[0])?, parse(nums[1])?);
            if !(1 <= u && u < v && v <= n) {
                return Err(Error::parse(
                    line,
                    format!("edge `{u} {v}` must satisfy 1 <= u < v <= {n}"),
                ));
            }
            if g.has_edge(u, v) {
                return Err(Error::parse(line, format!("duplicate edge `{u} {v}`")));
            }
            g.add_edge(u, v).map_err(|e| Error::parse(line, e.to_string()))?;
        }
        Ok(g)
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {}", self.n())?;
        for (u, v) in self.edges() {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

impl FromStr for Graph {
    type Err = Error;
    fn from_str(s: &str) -> Result<Graph> {
        Graph::parse(s)
    }
}
