use std::fmt;

use rayon::prelude::*;

use super::enumerate::{iso_classes, labeled_digraphs, DigraphClass};
use crate::coloring::{is_k_critical, is_k_dicolorable};
use crate::digraph::io::write_inline;
use crate::{Digraph, Error, Result};

/// Result of checking that no digon-free digraph on few vertices has `χ⃗ ≥ k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NkVerdict {
    pub k: usize,
    pub n_max: usize,
    /// One entry per order checked, up to the first witness.
    pub orders: Vec<OrderCheck>,
    /// `N(k) ≥ lower_bound`.
    pub lower_bound: usize,
    /// A `k`-critical digon-free digraph of order `lower_bound`, when found
    /// within `n_max`; it pins `N(k)` exactly.
    pub witness: Option<Digraph>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderCheck {
    pub order: usize,
    /// Tournaments checked: all labeled ones, or one per iso class.
    pub checked: u64,
    pub labeled: bool,
    pub all_colorable: bool,
}

impl NkVerdict {
    pub fn exact(&self) -> Option<usize> {
        self.witness.as_ref().map(Digraph::order)
    }
}

impl fmt::Display for NkVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# nk-check k={} n-max={}", self.k, self.n_max)?;
        for c in &self.orders {
            let what = if c.labeled { "labeled" } else { "classes" };
            let verdict = if c.all_colorable { "all" } else { "not-all" };
            writeln!(
                f,
                "order {} tournaments {} {what} {verdict} {}-dicolorable",
                c.order,
                c.checked,
                self.k - 1
            )?;
        }
        writeln!(f, "lower-bound N({}) >= {}", self.k, self.lower_bound)?;
        match &self.witness {
            Some(w) => writeln!(
                f,
                "witness N({}) = {} {}",
                self.k,
                w.order(),
                write_inline(w)
            ),
            None => writeln!(f, "witness none"),
        }
    }
}

/// The largest supported `n_max` per `k`.
const NK_ORDER_LIMIT: usize = 7;

/// Strips arcs from `d` (ascending order) while `χ⃗ ≥ k` survives.
fn shrink_to_critical(d: &Digraph, k: usize) -> Result<Digraph> {
    let mut cur = d.clone();
    let arcs: Vec<_> = d.arcs().collect();
    for (u, v) in arcs {
        let next = cur.without_arc(u, v);
        if !is_k_dicolorable(&next, k - 1)? {
            cur = next;
        }
    }
    Ok(cur)
}

/// Tournament reduction: every digon-free digraph is a spanning subdigraph
/// of a tournament and `χ⃗` is monotone, so if all tournaments on `n`
/// vertices are `(k−1)`-dicolorable then no digon-free digraph of order `n`
/// has `χ⃗ ≥ k`.
///
/// Orders up to 6 are checked over all labeled tournaments; order 7 over
/// tournament iso classes. The first order with a non-`(k−1)`-dicolorable
/// tournament yields a critical witness. Supported for `k ∈ {2, 3}`.
pub fn verify_nk_lower_bound(k: usize, n_max: usize) -> Result<NkVerdict> {
    if !(2..=3).contains(&k) {
        return Err(Error::SizeLimitExceeded {
            what: "N(k) verification (k)",
            order: k,
            limit: 3,
        });
    }
    if n_max > NK_ORDER_LIMIT {
        return Err(Error::SizeLimitExceeded {
            what: "N(k) verification",
            order: n_max,
            limit: NK_ORDER_LIMIT,
        });
    }
    let mut orders = Vec::new();
    let mut witness = None;
    for n in 1..=n_max {
        let (count, bad) = if n <= 6 {
            let all: Vec<Digraph> = labeled_digraphs(n, DigraphClass::Tournament)?.collect();
            let bad = all
                .par_iter()
                .find_first(|d| !is_k_dicolorable(d, k - 1).unwrap_or(true))
                .cloned();
            (all.len() as u64, bad)
        } else {
            let forms = iso_classes(n, DigraphClass::Tournament)?;
            let bad = forms
                .iter()
                .map(|f| f.to_digraph())
                .find(|d| !is_k_dicolorable(d, k - 1).unwrap_or(true));
            (forms.len() as u64, bad)
        };
        orders.push(OrderCheck {
            order: n,
            checked: count,
            labeled: n <= 6,
            all_colorable: bad.is_none(),
        });
        if let Some(t) = bad {
            let w = shrink_to_critical(&t, k)?;
            debug_assert!(is_k_critical(&w, k).unwrap_or(false));
            witness = Some(w);
            break;
        }
    }
    let lower_bound = witness.as_ref().map_or(n_max + 1, Digraph::order);
    Ok(NkVerdict {
        k,
        n_max,
        orders,
        lower_bound,
        witness,
    })
}

/// Slow cross-check: every labeled digon-free digraph on `n` vertices is
/// `(k−1)`-dicolorable.
pub fn all_digon_free_colorable(n: usize, k: usize) -> Result<bool> {
    if k < 2 {
        return Err(Error::BadParameter(format!(
            "k must be at least 2, got {k}"
        )));
    }
    let ok = labeled_digraphs(n, DigraphClass::DigonFree)?
        .par_bridge()
        .all(|d| is_k_dicolorable(&d, k - 1).unwrap_or(false));
    Ok(ok)
}
