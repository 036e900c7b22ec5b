use std::fmt;

use super::Digraph;
use crate::{Error, Result};

/// Standard labeled families, vertices `0..n` in cyclic or path order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    BidirectedComplete(usize),
    DirectedCycle(usize),
    BidirectedCycle(usize),
    DirectedPath(usize),
}

impl Family {
    pub fn build(self) -> Result<Digraph> {
        match self {
            Family::BidirectedComplete(k) => {
                if k < 1 {
                    return Err(Error::BadParameter(
                        "bidirected complete needs k ≥ 1".into(),
                    ));
                }
                Ok(Digraph::complete(k))
            }
            Family::DirectedCycle(n) => {
                if n < 2 {
                    return Err(Error::BadParameter("directed cycle needs n ≥ 2".into()));
                }
                Digraph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
            }
            Family::BidirectedCycle(n) => {
                if n < 3 {
                    return Err(Error::BadParameter("bidirected cycle needs n ≥ 3".into()));
                }
                Digraph::new(n, (0..n).flat_map(|i| [(i, (i + 1) % n), ((i + 1) % n, i)]))
            }
            Family::DirectedPath(n) => {
                if n < 1 {
                    return Err(Error::BadParameter("directed path needs n ≥ 1".into()));
                }
                Digraph::new(n, (1..n).map(|i| (i - 1, i)))
            }
        }
    }
}

impl fmt::Display for Family {
    /// Script-language spelling (`bk 4`, `dc 3`, `bc 5`, `dp 2`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::BidirectedComplete(k) => write!(f, "bk {k}"),
            Family::DirectedCycle(n) => write!(f, "dc {n}"),
            Family::BidirectedCycle(n) => write!(f, "bc {n}"),
            Family::DirectedPath(n) => write!(f, "dp {n}"),
        }
    }
}
