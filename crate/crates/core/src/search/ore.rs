//! Ore derivations of arbitrary digraphs with `χ⃗ ≥ k`.
//!
//! Two branches, following the constructive content of the Ore
//! characterization:
//!
//! * `D` contains a `K⃡ₖ` on `X`: start from `bk k` as `X`, add every other
//!   vertex as an isolated vertex (a bidirected Ore join with `K⃡ₖ + v`),
//!   then add every arc outside `X` with a bidirected Ore join against
//!   `K⃡ₖ + →v`, `K⃡ₖ + ←v` (one end in `X`) or `K⃡ₖ + a` (no end in `X`).
//! * otherwise take the lexicographically least `(u, v, w)` with `uv, vw ∉ A`
//!   and `uw ∈ A`, derive `D + uv` and `D + vw`, and recover `D` as
//!   `(D + uv, v, u) ▽°_id (D + vw, v, w)`.
//!
//! Results are memoized by canonical form, so isomorphic subproblems are
//! derived once and reused through a `relabel` step.

use std::collections::HashMap;

use crate::coloring::{dichromatic_number, max_clique};
use crate::constructions::{GadgetKind, GadgetLibrary, JoinKind};
use crate::digraph::{canonical_labeling, CanonicalForm, ISO_ORDER_LIMIT};
use crate::script::{Claim, Script, ScriptBuilder};
use crate::{Digraph, Error, Result, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OreLimits {
    /// Largest number of script steps.
    pub max_steps: usize,
    /// Largest number of distinct subproblems (recursion nodes).
    pub max_nodes: usize,
}

impl Default for OreLimits {
    fn default() -> Self {
        OreLimits {
            max_steps: 200_000,
            max_nodes: 20_000,
        }
    }
}

struct Gen {
    k: usize,
    b: ScriptBuilder,
    lib: GadgetLibrary,
    memo: HashMap<CanonicalForm, (String, Vec<Vertex>)>,
    nodes: usize,
    limits: OreLimits,
}

fn is_identity(perm: &[Vertex]) -> bool {
    perm.iter().enumerate().all(|(i, &p)| i == p)
}

fn invert(perm: &[Vertex]) -> Vec<Vertex> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

impl Gen {
    fn check_limits(&self) -> Result<()> {
        if self.b.script().steps.len() > self.limits.max_steps {
            return Err(Error::LimitExceeded(format!(
                "more than {} script steps",
                self.limits.max_steps
            )));
        }
        if self.nodes > self.limits.max_nodes {
            return Err(Error::LimitExceeded(format!(
                "more than {} subproblems",
                self.limits.max_nodes
            )));
        }
        Ok(())
    }

    /// Relabels binding `name` (vertex `x` of it is `to[x]` of the goal).
    fn relabel_to(&mut self, name: String, to: Vec<Vertex>) -> Result<String> {
        if is_identity(&to) {
            Ok(name)
        } else {
            self.b.relabel("R", &name, to)
        }
    }

    /// A binding equal to `d`.
    fn derive(&mut self, d: &Digraph, depth: usize) -> Result<String> {
        let n = d.order();
        assert!(
            depth <= n * n.saturating_sub(1),
            "recursion deeper than the arc count allows"
        );
        let canon = if n <= ISO_ORDER_LIMIT {
            Some(canonical_labeling(d)?)
        } else {
            None
        };
        if let Some((form, lab)) = &canon {
            if let Some((name, mlab)) = self.memo.get(form).cloned() {
                // binding vertex x has canonical position mlab[x], i.e. d vertex inv[mlab[x]]
                let inv = invert(lab);
                let to: Vec<Vertex> = mlab.iter().map(|&p| inv[p]).collect();
                return self.relabel_to(name, to);
            }
        }
        self.nodes += 1;
        self.check_limits()?;
        let clique = max_clique(d)?;
        let name = if clique.len() >= self.k {
            self.clique_branch(d, &clique[..self.k])?
        } else {
            self.triple_branch(d, depth)?
        };
        debug_assert_eq!(self.b.graph(&name), d);
        if let Some((form, lab)) = canon {
            self.memo.insert(form, (name.clone(), lab));
        }
        self.check_limits()?;
        Ok(name)
    }

    fn clique_branch(&mut self, d: &Digraph, x: &[Vertex]) -> Result<String> {
        let k = self.k;
        let n = d.order();
        let mut cur = self.lib.axiom(&mut self.b)?;
        // pos[v]: label of d-vertex v in `cur`
        let mut pos: Vec<Option<Vertex>> = vec![None; n];
        for (i, &v) in x.iter().enumerate() {
            pos[v] = Some(i);
        }
        let at = |pos: &[Option<Vertex>], v: Vertex| pos[v].expect("vertex already added");

        for v in (0..n).filter(|v| !x.contains(v)) {
            let z = self.lib.get(&mut self.b, GadgetKind::PlusIsolated)?;
            // X1 → 2, X2 → 3, ..., X_{k−1} → 1 restores the clique
            let map: Vec<(Vertex, Vertex)> = (1..k)
                .map(|i| (at(&pos, x[i]), if i == k - 1 { 1 } else { i + 1 }))
                .collect();
            let (name, r) = self.b.orejoin(
                "C",
                JoinKind::Bidirected,
                &cur,
                (at(&pos, x[0]), at(&pos, x[1])),
                &z,
                (0, 1),
                map,
            )?;
            for p in pos.iter_mut().flatten() {
                *p = r.map1[*p];
            }
            pos[v] = Some(r.map2[k]);
            cur = name;
        }

        let arcs: Vec<(Vertex, Vertex)> = d
            .arcs()
            .filter(|&(a, b)| !(x.contains(&a) && x.contains(&b)))
            .collect();
        for (a, b) in arcs {
            let (gadget, v1, u1, map) = if x.contains(&a) || x.contains(&b) {
                // one end `u` in X: join at (u, w), map the other end to the
                // gadget's pendant vertex and swap w, z
                let (u, other, kind) = if x.contains(&a) {
                    (a, b, GadgetKind::PlusOutVertex)
                } else {
                    (b, a, GadgetKind::PlusInVertex)
                };
                let rest: Vec<Vertex> = x.iter().copied().filter(|&y| y != u).collect();
                let (w, z) = (rest[0], rest[1]);
                let mut map = vec![(at(&pos, other), k), (at(&pos, w), 2), (at(&pos, z), 1)];
                map.extend(rest[2..].iter().zip(3..).map(|(&y, t)| (at(&pos, y), t)));
                (
                    self.lib.get(&mut self.b, kind)?,
                    at(&pos, u),
                    at(&pos, w),
                    map,
                )
            } else {
                let (x0, y, z) = (x[0], x[1], x[2]);
                let mut map = vec![
                    (at(&pos, a), k),
                    (at(&pos, b), k + 1),
                    (at(&pos, y), 2),
                    (at(&pos, z), 1),
                ];
                map.extend(x[3..].iter().zip(3..).map(|(&t, s)| (at(&pos, t), s)));
                (
                    self.lib.get(&mut self.b, GadgetKind::PlusArc)?,
                    at(&pos, x0),
                    at(&pos, y),
                    map,
                )
            };
            let (name, r) = self.b.orejoin(
                "C",
                JoinKind::Bidirected,
                &cur,
                (v1, u1),
                &gadget,
                (0, 1),
                map,
            )?;
            for p in pos.iter_mut().flatten() {
                *p = r.map1[*p];
            }
            cur = name;
        }

        let mut to = vec![0; n];
        for (v, p) in pos.iter().enumerate() {
            to[p.expect("all vertices added")] = v;
        }
        self.relabel_to(cur, to)
    }

    fn triple_branch(&mut self, d: &Digraph, depth: usize) -> Result<String> {
        let n = d.order();
        let triple = (0..n)
            .flat_map(|u| (0..n).flat_map(move |v| (0..n).map(move |w| (u, v, w))))
            .find(|&(u, v, w)| {
                u != v
                    && v != w
                    && u != w
                    && !d.has_arc(u, v)
                    && !d.has_arc(v, w)
                    && d.has_arc(u, w)
            });
        let Some((u, v, w)) = triple else {
            return Err(Error::PreconditionFailed(
                "non-adjacency is transitive but no bidirected clique of order k exists".into(),
            ));
        };
        let left = self.derive(&d.with_arc(u, v)?, depth + 1)?;
        let right = self.derive(&d.with_arc(v, w)?, depth + 1)?;
        let map: Vec<(Vertex, Vertex)> = (0..n).filter(|&t| t != v).map(|t| (t, t)).collect();
        let (name, r) =
            self.b
                .orejoin("O", JoinKind::Directed, &left, (v, u), &right, (v, w), map)?;
        let mut to = vec![0; n];
        for t in 0..n {
            to[r.map1[t]] = t;
        }
        self.relabel_to(name, to)
    }
}

/// An Ore-join script replaying exactly to `d` (labels included), ending
/// with `check NAME chi >= k`. Uses only `bk k`, `orejoin` and `relabel`.
pub fn ore_derivation(d: &Digraph, k: usize, limits: OreLimits) -> Result<Script> {
    if k < 3 {
        return Err(Error::PreconditionFailed(format!(
            "Ore derivations need k ≥ 3, got {k}"
        )));
    }
    let chi = dichromatic_number(d)?;
    if chi < k {
        return Err(Error::PreconditionFailed(format!(
            "chromatic number {chi} is below {k}"
        )));
    }
    let mut g = Gen {
        k,
        b: ScriptBuilder::new(),
        lib: GadgetLibrary::new(k)?,
        memo: HashMap::new(),
        nodes: 0,
        limits,
    };
    let name = g.derive(d, 0)?;
    if g.b.graph(&name) != d {
        return Err(Error::ConstructionFailed(
            "derivation does not replay to the input".into(),
        ));
    }
    g.b.check(&name, Claim::ChiAtLeast(k));
    Ok(g.b.into_script())
}
