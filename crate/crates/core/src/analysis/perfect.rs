use std::fmt;

use super::is_directed_cycle;
use crate::coloring::{clique_number, dichromatic_number};
use crate::{Digraph, Error, Result, Vertex};

pub const SCAN_ORDER_LIMIT: usize = 10;
pub const BRUTEFORCE_ORDER_LIMIT: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessKind {
    FilledOddHole,
    FilledOddAntihole,
    InducedDirectedCycle,
}

impl fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WitnessKind::FilledOddHole => "filled-odd-hole",
            WitnessKind::FilledOddAntihole => "filled-odd-antihole",
            WitnessKind::InducedDirectedCycle => "induced-directed-cycle",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub kind: WitnessKind,
    pub vertices: Vec<Vertex>,
}

impl Witness {
    /// Re-checks the witness against its definition.
    pub fn is_valid(&self, d: &Digraph) -> bool {
        kind_of(&d.induced(&self.vertices)) == Some(self.kind)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerfectnessVerdict {
    pub perfect: bool,
    pub witness: Option<Witness>,
}

/// The first forbidden kind the digraph itself is, if any.
fn kind_of(h: &Digraph) -> Option<WitnessKind> {
    let n = h.order();
    if n >= 5 && n % 2 == 1 {
        let s = h.symmetric_part();
        if s.is_cycle() {
            return Some(WitnessKind::FilledOddHole);
        }
        if s.complement().is_cycle() {
            return Some(WitnessKind::FilledOddAntihole);
        }
    }
    if n >= 3 && is_directed_cycle(h) {
        return Some(WitnessKind::InducedDirectedCycle);
    }
    None
}

/// Looks for a filled odd hole, filled odd antihole, or induced directed
/// cycle of length ≥ 3. The witness is the lexicographically least vertex
/// subset carrying one of them.
pub fn forbidden_structure_scan(d: &Digraph) -> Result<PerfectnessVerdict> {
    let n = d.order();
    if n > SCAN_ORDER_LIMIT {
        return Err(Error::SizeLimitExceeded {
            what: "forbidden structure scan",
            order: n,
            limit: SCAN_ORDER_LIMIT,
        });
    }
    let mut cur = Vec::new();
    let witness = scan(d, 0, &mut cur);
    Ok(PerfectnessVerdict {
        perfect: witness.is_none(),
        witness,
    })
}

/// Depth-first over subsets in lexicographic order of sorted sequences.
fn scan(d: &Digraph, from: usize, cur: &mut Vec<Vertex>) -> Option<Witness> {
    for v in from..d.order() {
        cur.push(v);
        if let Some(kind) = kind_of(&d.induced(cur)) {
            return Some(Witness {
                kind,
                vertices: cur.clone(),
            });
        }
        if let Some(w) = scan(d, v + 1, cur) {
            return Some(w);
        }
        cur.pop();
    }
    None
}

/// Checks `χ(H) = ω(H)` for every induced subdigraph `H`.
pub fn is_perfect_bruteforce(d: &Digraph) -> Result<bool> {
    let n = d.order();
    if n > BRUTEFORCE_ORDER_LIMIT {
        return Err(Error::SizeLimitExceeded {
            what: "brute-force perfectness",
            order: n,
            limit: BRUTEFORCE_ORDER_LIMIT,
        });
    }
    for mask in 1u32..1 << n {
        let set: Vec<Vertex> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let h = d.induced(&set);
        if dichromatic_number(&h)? != clique_number(&h)? {
            return Ok(false);
        }
    }
    Ok(true)
}
