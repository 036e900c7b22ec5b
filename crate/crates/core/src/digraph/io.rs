//! The `p dgf` text format.
//!
//! ```text
//! # comment
//! p dgf 3 3
//! a 0 1
//! a 1 2
//! a 2 0
//! ```
//!
//! `#` lines and blank lines are ignored anywhere. Duplicate arcs are an
//! error. The writer emits arcs in ascending `(u, v)` order, so the output is
//! bit-exact for a given digraph value.

use std::fmt::Write as _;
use std::path::Path;

use super::{Digraph, Vertex};
use crate::coloring::Coloring;
use crate::{Error, Result};

fn fmt_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Format {
        line,
        msg: msg.into(),
    }
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| fmt_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| fmt_err(line, format!("bad {what} `{tok}`")))
}

pub fn parse_dgf(text: &str) -> Result<Digraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut d = Digraph::empty(0);
    let mut seen = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let mut toks = t.split_whitespace();
        match toks.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(fmt_err(line, "second header line"));
                }
                if toks.next() != Some("dgf") {
                    return Err(fmt_err(line, "expected `p dgf <n> <m>`"));
                }
                let n = parse_num(toks.next(), line, "order")?;
                let m = parse_num(toks.next(), line, "arc count")?;
                header = Some((n, m));
                d = Digraph::empty(n);
            }
            Some("a") => {
                let Some((n, _)) = header else {
                    return Err(fmt_err(line, "arc before header"));
                };
                let u = parse_num(toks.next(), line, "tail")?;
                let v = parse_num(toks.next(), line, "head")?;
                if u >= n || v >= n {
                    return Err(fmt_err(
                        line,
                        format!("arc ({u},{v}) out of range for order {n}"),
                    ));
                }
                if u == v {
                    return Err(fmt_err(line, format!("loop at {u}")));
                }
                if d.has_arc(u, v) {
                    return Err(fmt_err(line, format!("duplicate arc ({u},{v})")));
                }
                d.insert(u, v);
                seen += 1;
            }
            Some(tok) => return Err(fmt_err(line, format!("unexpected token `{tok}`"))),
            None => unreachable!(),
        }
        if toks.next().is_some() {
            return Err(fmt_err(line, "trailing tokens"));
        }
    }
    let Some((_, m)) = header else {
        return Err(fmt_err(0, "missing `p dgf` header"));
    };
    if seen != m {
        return Err(fmt_err(
            0,
            format!("header declares {m} arcs, found {seen}"),
        ));
    }
    Ok(d)
}

pub fn write_dgf(d: &Digraph) -> String {
    let mut s = format!("p dgf {} {}\n", d.order(), d.arc_count());
    for (u, v) in d.arcs() {
        let _ = writeln!(s, "a {u} {v}");
    }
    s
}

pub fn read_dgf_file(path: &Path) -> Result<Digraph> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })?;
    parse_dgf(&text)
}

/// Single-line census form: `g <n> <m> u v u v ...`.
pub fn write_inline(d: &Digraph) -> String {
    let mut s = format!("g {} {}", d.order(), d.arc_count());
    for (u, v) in d.arcs() {
        let _ = write!(s, " {u} {v}");
    }
    s
}

pub fn parse_inline(line: &str) -> Result<Digraph> {
    let mut toks = line.split_whitespace();
    if toks.next() != Some("g") {
        return Err(fmt_err(1, "expected `g <n> <m> ...`"));
    }
    let n = parse_num(toks.next(), 1, "order")?;
    let m = parse_num(toks.next(), 1, "arc count")?;
    let nums: Vec<Vertex> = toks
        .map(|t| {
            t.parse()
                .map_err(|_| fmt_err(1, format!("bad vertex `{t}`")))
        })
        .collect::<Result<_>>()?;
    if nums.len() != 2 * m {
        return Err(fmt_err(1, "arc list length does not match m"));
    }
    Digraph::new(n, nums.chunks(2).map(|c| (c[0], c[1])))
}

/// `c <v> <color>` lines, ascending `v`.
pub fn write_coloring(c: &Coloring) -> String {
    let mut s = String::new();
    for (v, col) in c.colors().iter().enumerate() {
        let _ = writeln!(s, "c {v} {col}");
    }
    s
}
