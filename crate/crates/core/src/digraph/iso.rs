//! Brute-force isomorphism and canonical forms for small digraphs.
//!
//! The canonical form is the lexicographically least ascending arc sequence
//! over the relabelings reachable by the search below (not over all `n!`
//! relabelings; it is still an isomorphism invariant). The
//! search individualizes one vertex of the first non-singleton cell at a
//! time and refines by out/in neighbor color counts. Twins (vertices whose
//! transposition is an automorphism) are branched on only once per cell.

use super::{Digraph, Vertex};
use crate::{Error, Result};

/// Largest order accepted by the isomorphism engine.
pub const ISO_ORDER_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: u8,
    arcs: Vec<(u8, u8)>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.arcs.iter().map(|&(u, v)| (u as usize, v as usize))
    }

    /// The canonical representative itself.
    pub fn to_digraph(&self) -> Digraph {
        let mut d = Digraph::empty(self.order());
        for (u, v) in self.arcs() {
            d.insert(u, v);
        }
        d
    }
}

pub fn canonical_form(d: &Digraph) -> Result<CanonicalForm> {
    Ok(canonical_labeling(d)?.0)
}

/// Canonical form plus the labeling `lab` with `lab[v]` = canonical position of `v`.
pub fn canonical_labeling(d: &Digraph) -> Result<(CanonicalForm, Vec<Vertex>)> {
    let n = d.order();
    if n > ISO_ORDER_LIMIT {
        return Err(Error::SizeLimitExceeded {
            what: "isomorphism",
            order: n,
            limit: ISO_ORDER_LIMIT,
        });
    }
    let twins = twin_reps(d);
    let mut search = Search {
        d,
        twins,
        best: None,
    };
    let colors = vec![0u32; n];
    search.run(colors);
    let (rows, lab) = search.best.unwrap_or_default();
    let mut arcs = Vec::with_capacity(d.arc_count());
    for (i, row) in rows.iter().enumerate() {
        for j in 0..n {
            if row >> (15 - j) & 1 == 1 {
                arcs.push((i as u8, j as u8));
            }
        }
    }
    Ok((CanonicalForm { n: n as u8, arcs }, lab))
}

/// Vertex bijection `f` with `uv ∈ A(d1) ⟺ f(u)f(v) ∈ A(d2)`, if one exists.
pub fn find_isomorphism(d1: &Digraph, d2: &Digraph) -> Result<Option<Vec<Vertex>>> {
    if d1.order() != d2.order() || d1.arc_count() != d2.arc_count() {
        return Ok(None);
    }
    let (c1, lab1) = canonical_labeling(d1)?;
    let (c2, lab2) = canonical_labeling(d2)?;
    if c1 != c2 {
        return Ok(None);
    }
    let mut inv2 = vec![0; lab2.len()];
    for (v, &p) in lab2.iter().enumerate() {
        inv2[p] = v;
    }
    Ok(Some(lab1.iter().map(|&p| inv2[p]).collect()))
}

pub fn is_isomorphic(d1: &Digraph, d2: &Digraph) -> Result<bool> {
    Ok(find_isomorphism(d1, d2)?.is_some())
}

/// `rep[v]` = least vertex `u` such that swapping `u` and `v` is an automorphism.
fn twin_reps(d: &Digraph) -> Vec<Vertex> {
    let n = d.order();
    let mut rep: Vec<Vertex> = (0..n).collect();
    for v in 0..n {
        for u in 0..v {
            if rep[u] == u && is_twin(d, u, v) {
                rep[v] = u;
                break;
            }
        }
    }
    rep
}

fn is_twin(d: &Digraph, u: Vertex, v: Vertex) -> bool {
    if d.has_arc(u, v) != d.has_arc(v, u) {
        return false;
    }
    (0..d.order())
        .filter(|&w| w != u && w != v)
        .all(|w| d.has_arc(u, w) == d.has_arc(v, w) && d.has_arc(w, u) == d.has_arc(w, v))
}

struct Search<'a> {
    d: &'a Digraph,
    twins: Vec<Vertex>,
    best: Option<(Vec<u16>, Vec<Vertex>)>,
}

impl Search<'_> {
    fn run(&mut self, mut colors: Vec<u32>) {
        let n = self.d.order();
        refine(self.d, &mut colors);
        let cells = colors.iter().copied().max().map_or(0, |c| c as usize + 1);
        if cells == n {
            let lab: Vec<Vertex> = colors.iter().map(|&c| c as usize).collect();
            let mut rows = vec![0u16; n];
            for (u, v) in self.d.arcs() {
                rows[lab[u]] |= 1 << (15 - lab[v]);
            }
            // Larger row vector ⟺ lexicographically smaller arc sequence.
            let better = match &self.best {
                None => true,
                Some((b, _)) => rows > *b,
            };
            if better {
                self.best = Some((rows, lab));
            }
            return;
        }
        // first non-singleton cell
        let mut size = vec![0usize; cells];
        for &c in &colors {
            size[c as usize] += 1;
        }
        let target = size.iter().position(|&s| s > 1).unwrap() as u32;
        let members: Vec<Vertex> = (0..n).filter(|&v| colors[v] == target).collect();
        for &x in &members {
            if members
                .iter()
                .any(|&y| y < x && self.twins[y] == self.twins[x])
            {
                continue;
            }
            let next: Vec<u32> = colors
                .iter()
                .enumerate()
                .map(|(v, &c)| 2 * c + u32::from(v != x))
                .collect();
            self.run(next);
        }
    }
}

/// Refines `colors` to the coarsest equitable partition below it.
/// Output colors are dense ranks `0..cells`.
fn refine(d: &Digraph, colors: &mut [u32]) {
    let n = d.order();
    let mut prev_cells = usize::MAX;
    loop {
        let mut sigs: Vec<(u32, Vec<u32>, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut o: Vec<u32> = d.out_neighbors(v).map(|x| colors[x]).collect();
                let mut i: Vec<u32> = d.in_neighbors(v).map(|x| colors[x]).collect();
                o.sort_unstable();
                i.sort_unstable();
                (colors[v], o, i)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        for (v, sig) in sigs.drain(..).enumerate() {
            colors[v] = sorted.binary_search(&sig).unwrap() as u32;
        }
        if sorted.len() == prev_cells {
            return;
        }
        prev_cells = sorted.len();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::Family;

    #[test]
    fn cycle_vs_relabeling_and_transitive_tournament() {
        let c3 = Family::DirectedCycle(3).build().unwrap();
        let r = c3.relabel(&[2, 0, 1]).unwrap();
        assert!(is_isomorphic(&c3, &r).unwrap());
        let tt = Digraph::new(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        assert!(!is_isomorphic(&c3, &tt).unwrap());
        assert!(!is_isomorphic(&c3, &Digraph::complete(2)).unwrap());
    }

    #[test]
    fn isomorphism_mapping_is_valid() {
        let d = Digraph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 3)]).unwrap();
        let r = d.relabel(&[3, 1, 4, 0, 2]).unwrap();
        let f = find_isomorphism(&d, &r).unwrap().unwrap();
        for u in 0..5 {
            for v in 0..5 {
                assert_eq!(d.has_arc(u, v), r.has_arc(f[u], f[v]));
            }
        }
    }

    #[test]
    fn canonical_form_is_relabeling_invariant() {
        let d = Digraph::new(4, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 1)]).unwrap();
        let c = canonical_form(&d).unwrap();
        for perm in [[1, 2, 3, 0], [3, 2, 1, 0], [0, 2, 1, 3]] {
            assert_eq!(canonical_form(&d.relabel(&perm).unwrap()).unwrap(), c);
        }
        assert!(is_isomorphic(&c.to_digraph(), &d).unwrap());
    }

    #[test]
    fn size_limit() {
        let d = Digraph::complete(13);
        assert!(matches!(
            canonical_form(&d),
            Err(Error::SizeLimitExceeded { .. })
        ));
        // complete digraphs are handled by twin pruning
        assert!(canonical_form(&Digraph::complete(12)).is_ok());
        assert!(is_isomorphic(
            &Family::BidirectedCycle(12).build().unwrap(),
            &Family::BidirectedCycle(12)
                .build()
                .unwrap()
                .relabel(&[5, 3, 1, 0, 2, 4, 6, 7, 8, 9, 11, 10])
                .unwrap()
        )
        .is_ok());
    }
}
