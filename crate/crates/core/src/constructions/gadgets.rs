//! Gadget digraphs `K⃡ₖ + …` and explicit Ore-join derivations for them.
//!
//! Everything is derived from `bk k` by Ore joins only. The intermediate
//! pieces are
//!
//! * `P`: `K⃡ₖ` plus a vertex joined by a digon to one clique vertex `c`;
//! * `Y`: `K⃡ₖ` plus a vertex joined by digons to two clique vertices `a, b`;
//! * `T`: `K⃡ₖ` plus a digon triangle `{a, p, q}` hanging at `a`.
//!
//! `P` comes from `K⃡ₖ ▽̄° K⃡ₖ` (a clique plus a vertex seeing `k − 2` clique
//! vertices) followed by `k − 3` joins with `K⃡ₖ`, each removing one digon
//! from the extra vertex. The finished gadgets are relabeled to the fixed
//! labeling of [`gadget`].

use std::collections::HashMap;

use super::{JoinKind, JoinResult};
use crate::coloring::find_k_dicoloring;
use crate::digraph::{is_isomorphic, Family};
use crate::script::{Claim, Script, ScriptBuilder};
use crate::{Digraph, Error, Result, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GadgetKind {
    /// `K⃡ₖ` on `0..k`, vertices `k, k+1` and the arc `(k, k+1)`.
    PlusArc,
    /// `K⃡ₖ` plus vertex `k` and the arc `(0, k)`.
    PlusOutVertex,
    /// `K⃡ₖ` plus vertex `k` and the arc `(k, 0)`.
    PlusInVertex,
    /// `K⃡ₖ` plus an isolated vertex `k`.
    PlusIsolated,
}

pub fn gadget(kind: GadgetKind, k: usize) -> Result<Digraph> {
    if k < 3 {
        return Err(Error::BadParameter(format!("gadgets need k ≥ 3, got {k}")));
    }
    let kk = Digraph::complete(k);
    let clique = kk.arcs();
    match kind {
        GadgetKind::PlusArc => Digraph::new(k + 2, clique.chain([(k, k + 1)])),
        GadgetKind::PlusOutVertex => Digraph::new(k + 1, clique.chain([(0, k)])),
        GadgetKind::PlusInVertex => Digraph::new(k + 1, clique.chain([(k, 0)])),
        GadgetKind::PlusIsolated => Digraph::new(k + 1, clique),
    }
}

/// Vertex roles of an intermediate piece.
#[derive(Debug, Clone)]
struct Roles {
    clique: Vec<Vertex>,
    p: Vertex,
    q: Vertex,
    attach: Vec<Vertex>,
}

impl Roles {
    fn through(&self, m: &[Vertex]) -> Roles {
        Roles {
            clique: self.clique.iter().map(|&x| m[x]).collect(),
            p: m[self.p],
            q: m[self.q],
            attach: self.attach.iter().map(|&x| m[x]).collect(),
        }
    }

    /// Clique with `first` (and then `second`) moved to the front.
    fn clique_from(&self, first: Vertex, second: Option<Vertex>) -> Vec<Vertex> {
        let mut out = vec![first];
        out.extend(second);
        let rest: Vec<Vertex> = self
            .clique
            .iter()
            .copied()
            .filter(|x| !out.contains(x))
            .collect();
        out.extend(rest);
        out
    }
}

/// `a[i] ↦ b[(i + 1) mod len]`.
fn shifted(a: &[Vertex], b: &[Vertex]) -> Vec<(Vertex, Vertex)> {
    (0..a.len()).map(|i| (a[i], b[(i + 1) % b.len()])).collect()
}

fn zipped(a: &[Vertex], b: &[Vertex]) -> Vec<(Vertex, Vertex)> {
    a.iter().copied().zip(b.iter().copied()).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Piece {
    P,
    Y,
    T,
}

/// Lazily derives gadgets into a [`ScriptBuilder`], once per kind.
#[derive(Debug, Clone)]
pub struct GadgetLibrary {
    k: usize,
    axiom: Option<String>,
    pieces: HashMap<Piece, (String, Roles)>,
    done: HashMap<GadgetKind, String>,
}

impl GadgetLibrary {
    pub fn new(k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::BadParameter(format!("gadgets need k ≥ 3, got {k}")));
        }
        Ok(GadgetLibrary {
            k,
            axiom: None,
            pieces: HashMap::new(),
            done: HashMap::new(),
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The binding for `bk k`.
    pub fn axiom(&mut self, b: &mut ScriptBuilder) -> Result<String> {
        if let Some(n) = &self.axiom {
            return Ok(n.clone());
        }
        let n = b.axiom("K", Family::BidirectedComplete(self.k))?;
        self.axiom = Some(n.clone());
        Ok(n)
    }

    /// Name of a binding equal to `gadget(kind, k)`.
    pub fn get(&mut self, b: &mut ScriptBuilder, kind: GadgetKind) -> Result<String> {
        if let Some(n) = self.done.get(&kind) {
            return Ok(n.clone());
        }
        let name = match kind {
            GadgetKind::PlusIsolated => self.derive_isolated(b)?,
            GadgetKind::PlusOutVertex => self.derive_pendant_arc(b, true)?,
            GadgetKind::PlusInVertex => self.derive_pendant_arc(b, false)?,
            GadgetKind::PlusArc => self.derive_arc(b)?,
        };
        let want = gadget(kind, self.k)?;
        if *b.graph(&name) != want {
            return Err(Error::ConstructionFailed(format!(
                "{kind:?} derivation does not reproduce the gadget"
            )));
        }
        self.done.insert(kind, name.clone());
        Ok(name)
    }

    fn piece(&mut self, b: &mut ScriptBuilder, which: Piece) -> Result<(String, Roles)> {
        if let Some(x) = self.pieces.get(&which) {
            return Ok(x.clone());
        }
        let x = match which {
            Piece::P => self.derive_p(b)?,
            Piece::Y => self.derive_y(b)?,
            Piece::T => self.derive_t(b)?,
        };
        self.pieces.insert(which, x.clone());
        Ok(x)
    }

    fn derive_p(&mut self, b: &mut ScriptBuilder) -> Result<(String, Roles)> {
        let k = self.k;
        let kk = self.axiom(b)?;
        let all: Vec<Vertex> = (0..k).collect();
        // clique {1, 1', 2..k}, vertex 0 = 0' sees 2..k
        let (mut name, r) = b.orejoin(
            "H",
            JoinKind::Bidirected,
            &kk,
            (0, 1),
            &kk,
            (0, 1),
            zipped(&all[2..], &all[2..]),
        )?;
        let mut roles = Roles {
            clique: [r.map1[1], r.map2[1]]
                .into_iter()
                .chain(all[2..].iter().map(|&i| r.map1[i]))
                .collect(),
            p: r.map1[0],
            q: r.map1[0],
            attach: all[2..].iter().map(|&i| r.map1[i]).collect(),
        };
        while roles.attach.len() > 1 {
            let (c, s) = (roles.attach[0], roles.attach[1]);
            // drop the digon p–c; K⃡ₖ's vertex 1 lands on s so p keeps s
            let order = roles.clique_from(c, Some(s));
            let map = zipped(&order[1..], &all[1..]);
            let (n2, r) = b.orejoin(
                "H",
                JoinKind::Bidirected,
                &name,
                (c, roles.p),
                &kk,
                (0, 1),
                map,
            )?;
            name = n2;
            let mut next = roles.through(&r.map1);
            next.attach.remove(0);
            roles = next;
        }
        Ok((name, roles))
    }

    fn derive_y(&mut self, b: &mut ScriptBuilder) -> Result<(String, Roles)> {
        let (p, pr) = self.piece(b, Piece::P)?;
        let c = pr.attach[0];
        // x, y: the first two clique vertices other than c
        let rest: Vec<Vertex> = pr.clique.iter().copied().filter(|&v| v != c).collect();
        let (x, y) = (rest[0], rest[1]);
        let left = pr.clique_from(c, Some(y));
        let left: Vec<Vertex> = left.into_iter().filter(|&v| v != x).collect();
        let mut map = shifted(&left, &left);
        map.push((pr.p, pr.p));
        let (name, r) = b.orejoin("Y", JoinKind::Bidirected, &p, (x, y), &p, (x, y), map)?;
        let mut roles = pr.through(&r.map1);
        let b_vertex = r.map2[c];
        roles.attach.push(b_vertex);
        Ok((name, roles))
    }

    fn derive_t(&mut self, b: &mut ScriptBuilder) -> Result<(String, Roles)> {
        let (y, yr) = self.piece(b, Piece::Y)?;
        let (a, bv) = (yr.attach[0], yr.attach[1]);
        let order: Vec<Vertex> = yr
            .clique_from(a, None)
            .into_iter()
            .filter(|&v| v != bv)
            .collect();
        let (name, r) = b.orejoin(
            "T",
            JoinKind::Bidirected,
            &y,
            (bv, yr.p),
            &y,
            (bv, yr.p),
            zipped(&order, &order),
        )?;
        let mut roles = yr.through(&r.map1);
        roles.q = r.map2[yr.p];
        roles.attach = vec![r.map1[a]];
        Ok((name, roles))
    }

    fn relabel_standard(
        &self,
        b: &mut ScriptBuilder,
        hint: &str,
        name: &str,
        clique: &[Vertex],
        extra: &[Vertex],
    ) -> Result<String> {
        let n = b.graph(name).order();
        let mut perm = vec![usize::MAX; n];
        for (i, &v) in clique.iter().chain(extra).enumerate() {
            perm[v] = i;
        }
        if perm.contains(&usize::MAX) {
            return Err(Error::ConstructionFailed(format!(
                "{hint}: unexpected extra vertices"
            )));
        }
        b.relabel(hint, name, perm)
    }

    fn derive_isolated(&mut self, b: &mut ScriptBuilder) -> Result<String> {
        let (p, pr) = self.piece(b, Piece::P)?;
        let c = pr.attach[0];
        let order = pr.clique_from(c, None);
        let (name, r) = b.orejoin(
            "Zj",
            JoinKind::Bidirected,
            &p,
            (pr.p, c),
            &p,
            (pr.p, c),
            shifted(&order, &order),
        )?;
        let roles = pr.through(&r.map1);
        self.relabel_standard(b, "Z", &name, &roles.clique, &[roles.p])
    }

    /// `K⃡ₖ + v⃗` (`out`) or `K⃡ₖ + v⃖`.
    fn derive_pendant_arc(&mut self, b: &mut ScriptBuilder, out: bool) -> Result<String> {
        let (p, pr) = self.piece(b, Piece::P)?;
        let (y, yr) = self.piece(b, Piece::Y)?;
        let c = pr.attach[0];
        let (a, bv) = (yr.attach[0], yr.attach[1]);
        let pc = pr.clique_from(c, None);
        let yc = yr.clique_from(a, Some(bv));
        // directed step: the pendant digon of P absorbs one arc of Y's b-digon
        let (x1, m, roles): (String, Vertex, Roles) = if out {
            let (n, r) = b.orejoin(
                "Xo",
                JoinKind::Directed,
                &p,
                (pr.p, c),
                &y,
                (yr.p, bv),
                zipped(&pc, &yc),
            )?;
            (n, r.map2[yr.p], yr.through(&r.map2))
        } else {
            let (n, r) = b.orejoin(
                "Xi",
                JoinKind::Directed,
                &y,
                (yr.p, bv),
                &p,
                (pr.p, c),
                zipped(&yc, &pc),
            )?;
            (n, r.map1[yr.p], yr.through(&r.map1))
        };
        let (a, bv) = (roles.attach[0], roles.attach[1]);
        let xc = roles.clique_from(a, Some(bv));
        let (name, r) = b.orejoin(
            if out { "Go" } else { "Gi" },
            JoinKind::Bidirected,
            &x1,
            (m, a),
            &p,
            (pr.p, c),
            shifted(&xc, &pc),
        )?;
        let clique: Vec<Vertex> = roles
            .clique_from(bv, None)
            .iter()
            .map(|&v| r.map1[v])
            .collect();
        self.relabel_standard(
            b,
            if out { "Gout" } else { "Gin" },
            &name,
            &clique,
            &[r.map1[m]],
        )
    }

    fn derive_arc(&mut self, b: &mut ScriptBuilder) -> Result<String> {
        let (d1, pr) = self.piece(b, Piece::P)?;
        let (d2, tr) = self.piece(b, Piece::T)?;
        let (u, v1) = (pr.p, pr.attach[0]);
        let (a, u1, u2) = (tr.attach[0], tr.p, tr.q);
        let d1c = pr.clique_from(v1, None);
        let d2c = tr.clique_from(a, None);

        // (D1, u, v1) ▽° (D2, u2, u1) with v_i ↦ v'_i gives D2 − u2u1
        let (dp, r) = b.orejoin(
            "Dp",
            JoinKind::Directed,
            &d1,
            (u, v1),
            &d2,
            (u2, u1),
            zipped(&d1c, &d2c),
        )?;
        let star: Vec<Vertex> = d2c.iter().map(|&x| r.map2[x]).collect();
        let (u1, u2) = (r.map2[u1], r.map2[u2]);

        // (D′, u1, v*₁) ▽̄° (D1, u, v1) with v*ᵢ ↦ v_{i+1}
        let (dpp, r) = b.orejoin(
            "Dpp",
            JoinKind::Bidirected,
            &dp,
            (u1, star[0]),
            &d1,
            (u, v1),
            shifted(&star, &d1c),
        )?;
        let star: Vec<Vertex> = star.iter().map(|&x| r.map1[x]).collect();
        let (tail, u2) = (r.map1[u1], r.map1[u2]);

        // Last join: the first candidate is the literal parameter order; it
        // maps onto the join vertex and is rejected, so the swapped order
        // of the second operand's pair is used.
        let candidates = [(v1, u), (u, v1)];
        let mut last_err = None;
        for (gv, gu) in candidates {
            let attempt =
                ore_join_preview(b, &dpp, (u2, star[0]), &d1, (gv, gu), shifted(&star, &d1c));
            let r = match attempt {
                Ok(_) => {
                    b.orejoin(
                        "Gaj",
                        JoinKind::Bidirected,
                        &dpp,
                        (u2, star[0]),
                        &d1,
                        (gv, gu),
                        shifted(&star, &d1c),
                    )?
                    .1
                }
                Err(e) => {
                    last_err = Some(e);
                    continue;
                }
            };
            let name = b.script().final_name().unwrap().to_string();
            let clique: Vec<Vertex> = star.iter().map(|&x| r.map1[x]).collect();
            let extra = [r.map1[tail], r.map1[u2]];
            let want = gadget(GadgetKind::PlusArc, self.k)?;
            let got = b.graph(&name).clone();
            if got.order() == want.order() && is_isomorphic(&got, &want)? {
                return self.relabel_standard(b, "Ga", &name, &clique, &extra);
            }
        }
        Err(Error::ConstructionFailed(format!(
            "no parameter resolution reproduces K+a: {}",
            last_err.map(|e| e.to_string()).unwrap_or_default()
        )))
    }
}

fn ore_join_preview(
    b: &ScriptBuilder,
    left: &str,
    (v1, u1): (Vertex, Vertex),
    right: &str,
    (v2, u2): (Vertex, Vertex),
    map: Vec<(Vertex, Vertex)>,
) -> Result<JoinResult> {
    super::ore_join(
        JoinKind::Bidirected,
        b.graph(left),
        v1,
        u1,
        b.graph(right),
        v2,
        u2,
        &map,
    )
}

/// A standalone script deriving `gadget(kind, k)` from `bk k` by Ore joins.
///
/// The result is checked to equal the gadget; for `k ≤ 4` every intermediate
/// digraph is also checked to have `χ ≥ k`.
pub fn claim_gadget_derivation(kind: GadgetKind, k: usize) -> Result<Script> {
    let mut lib = GadgetLibrary::new(k)?;
    let mut b = ScriptBuilder::new();
    let name = lib.get(&mut b, kind)?;
    if k <= 4 {
        for step in &b.script().steps {
            let d = b.graph(&step.name);
            if find_k_dicoloring(d, k - 1)?.is_some() {
                return Err(Error::ConstructionFailed(format!(
                    "intermediate {} has χ < {k}",
                    step.name
                )));
            }
        }
    }
    b.check(&name, Claim::ChiAtLeast(k));
    Ok(b.into_script())
}
