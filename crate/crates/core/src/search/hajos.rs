use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::coloring::dichromatic_number;
use crate::constructions::{hajos_join, identify};
use crate::digraph::{canonical_labeling, CanonicalForm, Family, ISO_ORDER_LIMIT};
use crate::script::{Claim, Expr, JoinArgs, Script};
use crate::{Digraph, Error, Result, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Largest order of any generated digraph (at most the iso-engine limit).
    pub max_order: usize,
    /// Largest number of operations in one derivation chain.
    pub max_depth: usize,
    /// Largest number of distinct digraphs kept; reaching it stops the search.
    pub max_frontier: usize,
    /// Solver-check `χ⃗ ≥ k` on every dequeued digraph of order ≤ 8.
    pub spot_check: bool,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_order: 8,
            max_depth: 3,
            max_frontier: 20_000,
            spot_check: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LimitKind {
    MaxOrder,
    MaxDepth,
    MaxFrontier,
}

impl fmt::Display for LimitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LimitKind::MaxOrder => "max-order",
            LimitKind::MaxDepth => "max-depth",
            LimitKind::MaxFrontier => "max-frontier",
        })
    }
}

/// What a search that did not reach its target actually covered. This is a
/// statement about the searched space only, never a nonexistence proof.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotFoundReport {
    pub limits_hit: Vec<LimitKind>,
    pub visited: usize,
    pub depth_reached: usize,
}

impl fmt::Display for NotFoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "not-found visited {} depth {} limits",
            self.visited, self.depth_reached
        )?;
        if self.limits_hit.is_empty() {
            write!(f, " none (closure exhausted)")
        } else {
            for l in &self.limits_hit {
                write!(f, " {l}")?;
            }
            Ok(())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Script),
    NotFound(NotFoundReport),
}

/// How a visited digraph was produced.
#[derive(Debug)]
enum Origin {
    Axiom,
    Join(Arc<Node>, (Vertex, Vertex), Arc<Node>, (Vertex, Vertex)),
    Identify(Arc<Node>, Vertex, Vertex),
}

#[derive(Debug)]
struct Node {
    id: usize,
    d: Digraph,
    origin: Origin,
}

/// Writes the derivation of `node` into `script`, sharing repeated operands.
fn emit(node: &Node, script: &mut Script, names: &mut HashMap<usize, String>) -> String {
    if let Some(n) = names.get(&node.id) {
        return n.clone();
    }
    let name = format!("D{}", names.len());
    let expr = match &node.origin {
        Origin::Axiom => Expr::Axiom(Family::BidirectedComplete(node.d.order())),
        Origin::Join(a, (v1, u1), b, (v2, u2)) => {
            let left = emit(a, script, names);
            let right = emit(b, script, names);
            Expr::Hajos(JoinArgs {
                left,
                v1: *v1,
                u1: *u1,
                right,
                v2: *v2,
                u2: *u2,
            })
        }
        Origin::Identify(a, x, y) => Expr::Identify(emit(a, script, names), vec![*x, *y]),
    };
    script.push_step(name.clone(), expr);
    names.insert(node.id, name.clone());
    name
}

/// Candidate operations from `node`: identifications of independent pairs,
/// then Hajós joins with every earlier node (both operand orders). Arcs and
/// pairs are taken in ascending order.
fn expand(
    node: &Arc<Node>,
    pool: &[Arc<Node>],
    max_order: usize,
    order_hit: &mut bool,
) -> Vec<(Digraph, Origin)> {
    let d = &node.d;
    let n = d.order();
    let mut out = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            if !d.adjacent(x, y) {
                if let Ok(r) = identify(d, &[x, y]) {
                    out.push((r.result, Origin::Identify(node.clone(), x, y)));
                }
            }
        }
    }
    for other in pool {
        if n + other.d.order() - 1 > max_order {
            *order_hit = true;
            continue;
        }
        let pairs: [(&Arc<Node>, &Arc<Node>); 2] = [(node, other), (other, node)];
        for (i, (a, b)) in pairs.into_iter().enumerate() {
            if i == 1 && Arc::ptr_eq(a, b) {
                break;
            }
            for (u1, v1) in a.d.arcs() {
                for (v2, u2) in b.d.arcs() {
                    if let Ok(r) = hajos_join(&a.d, v1, u1, &b.d, v2, u2) {
                        out.push((
                            r.result,
                            Origin::Join(a.clone(), (v1, u1), b.clone(), (v2, u2)),
                        ));
                    }
                }
            }
        }
    }
    out
}

/// Breadth-first search, level by level, over the closure of `{K⃡ₖ}` under
/// Hajós joins and identification of independent pairs, deduplicated by
/// canonical form. A found derivation ends with a relabel to the target's
/// labels and a `chi >= k` check.
pub fn hajos_construct_search(
    target: &Digraph,
    k: usize,
    limits: SearchLimits,
) -> Result<SearchOutcome> {
    if k < 1 {
        return Err(Error::BadParameter("k must be at least 1".into()));
    }
    if limits.max_order > ISO_ORDER_LIMIT {
        return Err(Error::SizeLimitExceeded {
            what: "search max-order",
            order: limits.max_order,
            limit: ISO_ORDER_LIMIT,
        });
    }
    let chi = dichromatic_number(target)?;
    if chi < k {
        return Err(Error::TargetTooEasy { chi, k });
    }
    let (goal, goal_lab) = canonical_labeling(target)?;

    let mut visited: HashSet<CanonicalForm> = HashSet::new();
    let axiom = Arc::new(Node {
        id: 0,
        d: Digraph::complete(k),
        origin: Origin::Axiom,
    });
    let mut all = vec![axiom.clone()];
    let mut level = vec![axiom];
    visited.insert(canonical_labeling(&all[0].d)?.0);
    let mut hits = HashSet::new();
    let mut depth = 0;

    loop {
        for node in &level {
            if limits.spot_check && node.d.order() <= 8 && dichromatic_number(&node.d)? < k {
                return Err(Error::ConstructionFailed(format!(
                    "closure member {} has chromatic number below {k}",
                    node.id
                )));
            }
            let (form, lab) = canonical_labeling(&node.d)?;
            if form == goal {
                return Ok(SearchOutcome::Found(finish(node, &lab, &goal_lab, k)));
            }
        }
        if depth == limits.max_depth {
            if !level.is_empty() {
                hits.insert(LimitKind::MaxDepth);
            }
            break;
        }
        if level.is_empty() {
            break;
        }
        let expansions: Vec<(Vec<(Digraph, Origin)>, bool)> = level
            .par_iter()
            .map(|node| {
                let mut order_hit = false;
                let pool: Vec<Arc<Node>> =
                    all.iter().filter(|o| o.id <= node.id).cloned().collect();
                let out = expand(node, &pool, limits.max_order, &mut order_hit);
                (out, order_hit)
            })
            .collect();
        let mut next = Vec::new();
        let mut full = false;
        'outer: for (cands, order_hit) in expansions {
            if order_hit {
                hits.insert(LimitKind::MaxOrder);
            }
            for (d, origin) in cands {
                if d.order() > limits.max_order {
                    hits.insert(LimitKind::MaxOrder);
                    continue;
                }
                let form = canonical_labeling(&d)?.0;
                if visited.contains(&form) {
                    continue;
                }
                if visited.len() >= limits.max_frontier {
                    full = true;
                    break 'outer;
                }
                visited.insert(form);
                let node = Arc::new(Node {
                    id: all.len(),
                    d,
                    origin,
                });
                all.push(node.clone());
                next.push(node);
            }
        }
        depth += 1;
        level = next;
        if full {
            hits.insert(LimitKind::MaxFrontier);
            // the truncated level is still checked against the target
            for node in &level {
                let (form, lab) = canonical_labeling(&node.d)?;
                if form == goal {
                    return Ok(SearchOutcome::Found(finish(node, &lab, &goal_lab, k)));
                }
            }
            break;
        }
    }
    let mut limits_hit: Vec<LimitKind> = hits.into_iter().collect();
    limits_hit.sort_by_key(|l| *l as u8);
    Ok(SearchOutcome::NotFound(NotFoundReport {
        limits_hit,
        visited: visited.len(),
        depth_reached: depth,
    }))
}

/// Script for `node`, relabeled so it replays to the target exactly.
fn finish(node: &Node, lab: &[Vertex], goal_lab: &[Vertex], k: usize) -> Script {
    let mut script = Script::new();
    let mut names = HashMap::new();
    let last = emit(node, &mut script, &mut names);
    // node vertex x sits at canonical position lab[x], which is target vertex goal_inv[lab[x]]
    let mut goal_inv = vec![0; goal_lab.len()];
    for (v, &p) in goal_lab.iter().enumerate() {
        goal_inv[p] = v;
    }
    let perm: Vec<Vertex> = lab.iter().map(|&p| goal_inv[p]).collect();
    let final_name = if perm.iter().enumerate().all(|(i, &p)| i == p) {
        last
    } else {
        let name = format!("D{}", names.len());
        script.push_step(name.clone(), Expr::Relabel(last, perm));
        name
    };
    script.push_check(final_name, Claim::ChiAtLeast(k));
    script
}
