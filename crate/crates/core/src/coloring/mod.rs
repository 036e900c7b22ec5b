//! Exact dicoloring.
//!
//! Every solver here works on single-word vertex masks, so orders above
//! [`SOLVER_ORDER_LIMIT`] are rejected with `SizeLimitExceeded`.

mod solver;

use crate::digraph::bits::mask_iter;
use crate::{Digraph, Error, Result, Vertex};

pub use solver::Feasibility;

/// Largest order the mask-based solvers accept.
pub const SOLVER_ORDER_LIMIT: usize = 64;

/// A total vertex → color map.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<usize>,
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Self {
        Coloring { colors }
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: Vertex) -> usize {
        self.colors[v]
    }

    /// `1 + max color`, or 0 for the empty coloring.
    pub fn num_colors(&self) -> usize {
        self.colors.iter().max().map_or(0, |&c| c + 1)
    }

    pub fn class(&self, c: usize) -> Vec<Vertex> {
        (0..self.colors.len())
            .filter(|&v| self.colors[v] == c)
            .collect()
    }
}

/// Per-vertex color lists for list-dicoloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListAssignment {
    lists: Vec<Vec<usize>>,
}

impl ListAssignment {
    /// Lists are sorted and deduplicated; every list must be non-empty.
    pub fn new(lists: Vec<Vec<usize>>) -> Result<Self> {
        let mut lists = lists;
        for (v, l) in lists.iter_mut().enumerate() {
            if l.is_empty() {
                return Err(Error::BadParameter(format!("empty list at vertex {v}")));
            }
            l.sort_unstable();
            l.dedup();
        }
        Ok(ListAssignment { lists })
    }

    pub fn list(&self, v: Vertex) -> &[usize] {
        &self.lists[v]
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }
}

pub(crate) fn check_solver_order(d: &Digraph) -> Result<()> {
    if d.order() > SOLVER_ORDER_LIMIT {
        return Err(Error::SizeLimitExceeded {
            what: "dicoloring solver",
            order: d.order(),
            limit: SOLVER_ORDER_LIMIT,
        });
    }
    Ok(())
}

/// Whether the vertices in `set` induce an acyclic subdigraph (order ≤ 64).
pub(crate) fn mask_is_acyclic(d: &Digraph, set: u64) -> bool {
    // Repeatedly strip sources.
    let mut rest = set;
    loop {
        let mut stripped = 0u64;
        for v in mask_iter(rest) {
            if d.in_mask(v) & rest == 0 {
                stripped |= 1 << v;
            }
        }
        if stripped == 0 {
            return rest == 0;
        }
        rest &= !stripped;
    }
}

pub fn is_valid_dicoloring(d: &Digraph, c: &Coloring) -> Result<bool> {
    if c.colors.len() < d.order() {
        return Err(Error::PartialColoring(c.colors.len()));
    }
    let k = c.num_colors();
    Ok((0..k).all(|col| d.induced(&c.class(col)).is_acyclic()))
}

/// First dicoloring with at most `k` colors in ascending search order.
pub fn find_k_dicoloring(d: &Digraph, k: usize) -> Result<Option<Coloring>> {
    find_k_dicoloring_with(d, k, Feasibility::Incremental)
}

pub fn find_k_dicoloring_with(
    d: &Digraph,
    k: usize,
    mode: Feasibility,
) -> Result<Option<Coloring>> {
    check_solver_order(d)?;
    Ok(solver::solve(d, k, mode))
}

pub fn is_k_dicolorable(d: &Digraph, k: usize) -> Result<bool> {
    Ok(find_k_dicoloring(d, k)?.is_some())
}

pub fn dichromatic_number(d: &Digraph) -> Result<usize> {
    check_solver_order(d)?;
    if d.order() == 0 {
        return Ok(0);
    }
    if d.is_acyclic() {
        return Ok(1);
    }
    let mut k = 2;
    while solver::solve(d, k, Feasibility::Incremental).is_none() {
        k += 1;
    }
    Ok(k)
}

/// Arc-deletion criticality test with an isolated-vertex guard.
pub fn is_k_critical(d: &Digraph, k: usize) -> Result<bool> {
    check_solver_order(d)?;
    let n = d.order();
    match k {
        0 => return Ok(n == 0),
        1 => return Ok(n == 1),
        _ => {}
    }
    if n == 0 || d.has_isolated_vertex() {
        return Ok(false);
    }
    if solver::solve(d, k - 1, Feasibility::Incremental).is_some()
        || solver::solve(d, k, Feasibility::Incremental).is_none()
    {
        return Ok(false);
    }
    for (u, v) in d.arcs() {
        if solver::solve(&d.without_arc(u, v), k - 1, Feasibility::Incremental).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Low vertices `d⁺ = d⁻ = k − 1` and the subdigraph they induce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowVertices {
    /// Ascending; vertex `i` of `sub` is `low[i]` in the original digraph.
    pub low: Vec<Vertex>,
    pub sub: Digraph,
}

pub fn low_vertex_subdigraph(d: &Digraph, k: usize) -> LowVertices {
    let low: Vec<Vertex> = (0..d.order())
        .filter(|&v| k >= 1 && d.out_degree(v) == k - 1 && d.in_degree(v) == k - 1)
        .collect();
    let sub = d.induced(&low);
    LowVertices { low, sub }
}

/// Exact list-dicoloring by backtracking (vertices and list colors ascending).
pub fn list_dicolorable(d: &Digraph, lists: &ListAssignment) -> Result<Option<Coloring>> {
    check_solver_order(d)?;
    if lists.len() != d.order() {
        return Err(Error::BadParameter(format!(
            "list assignment covers {} vertices, digraph has {}",
            lists.len(),
            d.order()
        )));
    }
    Ok(solver::solve_lists(d, lists))
}

/// Largest bidirected complete subdigraph, i.e. the clique number of `S(D)`.
pub fn clique_number(d: &Digraph) -> Result<usize> {
    Ok(max_clique(d)?.len())
}

/// Lexicographically least maximum clique of `S(D)`.
pub fn max_clique(d: &Digraph) -> Result<Vec<Vertex>> {
    check_solver_order(d)?;
    let n = d.order();
    let sym: Vec<u64> = (0..n).map(|v| d.out_mask(v) & d.in_mask(v)).collect();
    let mut best = Vec::new();
    let mut cur = Vec::new();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    grow_clique(&sym, all, &mut cur, &mut best);
    Ok(best)
}

fn grow_clique(sym: &[u64], cand: u64, cur: &mut Vec<Vertex>, best: &mut Vec<Vertex>) {
    if cur.len() > best.len() {
        *best = cur.clone();
    }
    let mut cand = cand;
    while cand != 0 {
        if cur.len() + cand.count_ones() as usize <= best.len() {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        cur.push(v);
        grow_clique(sym, cand & sym[v], cur, best);
        cur.pop();
    }
}
