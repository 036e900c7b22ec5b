//! Immutable loop-free digraphs on dense vertex indices `0..n`.

pub(crate) mod bits;
mod blocks;
mod family;
pub mod io;
mod iso;
mod undirected;

use std::fmt;

pub use blocks::{block_decomposition, BlockDecomposition};
pub use family::Family;
pub use iso::{
    canonical_form, canonical_labeling, find_isomorphism, is_isomorphic, CanonicalForm,
    ISO_ORDER_LIMIT,
};
pub use undirected::UndirectedGraph;

use crate::{Error, Result};

/// Vertex index, dense in `0..n` of the owning digraph.
pub type Vertex = usize;

/// A digraph with no loops and no parallel arcs. Opposite arcs are allowed.
///
/// Out- and in-adjacency are kept as dense bit rows, so arc membership is
/// O(1) and every iteration is in ascending order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    w: usize,
    m: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
}

/// Result of [`Digraph::degree_queries`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Degrees {
    pub out_degree: usize,
    pub in_degree: usize,
    pub out_neighbors: Vec<Vertex>,
    pub in_neighbors: Vec<Vertex>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Connectivity {
    pub weak: bool,
    pub strong: bool,
}

impl Digraph {
    /// Arcless digraph of order `n`.
    pub fn empty(n: usize) -> Self {
        let w = bits::words_for(n);
        Digraph {
            n,
            w,
            m: 0,
            out: vec![0; n * w],
            inn: vec![0; n * w],
        }
    }

    /// Builds a digraph from an arc list. Duplicate pairs collapse.
    pub fn new<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut d = Digraph::empty(n);
        for (u, v) in arcs {
            d.check_vertex(u)?;
            d.check_vertex(v)?;
            if u == v {
                return Err(Error::LoopArc(u));
            }
            d.insert(u, v);
        }
        Ok(d)
    }

    /// Bidirected complete digraph on `k` vertices.
    pub fn complete(k: usize) -> Self {
        let mut d = Digraph::empty(k);
        for u in 0..k {
            for v in 0..k {
                if u != v {
                    d.insert(u, v);
                }
            }
        }
        d
    }

    pub(crate) fn insert(&mut self, u: Vertex, v: Vertex) {
        debug_assert!(u != v && u < self.n && v < self.n);
        let w = self.w;
        if !bits::get(&self.out[u * w..(u + 1) * w], v) {
            bits::set(&mut self.out[u * w..(u + 1) * w], v);
            bits::set(&mut self.inn[v * w..(v + 1) * w], u);
            self.m += 1;
        }
    }

    pub(crate) fn remove(&mut self, u: Vertex, v: Vertex) {
        let w = self.w;
        if bits::get(&self.out[u * w..(u + 1) * w], v) {
            bits::clear(&mut self.out[u * w..(u + 1) * w], v);
            bits::clear(&mut self.inn[v * w..(v + 1) * w], u);
            self.m -= 1;
        }
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && bits::get(self.out_row(u), v)
    }

    /// `u` and `v` induce a digon.
    pub fn has_digon(&self, u: Vertex, v: Vertex) -> bool {
        self.has_arc(u, v) && self.has_arc(v, u)
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    #[inline]
    pub(crate) fn out_row(&self, v: Vertex) -> &[u64] {
        &self.out[v * self.w..(v + 1) * self.w]
    }

    #[inline]
    pub(crate) fn in_row(&self, v: Vertex) -> &[u64] {
        &self.inn[v * self.w..(v + 1) * self.w]
    }

    /// Out-neighborhood as a single-word mask. Only valid for order ≤ 64.
    #[inline]
    pub(crate) fn out_mask(&self, v: Vertex) -> u64 {
        debug_assert!(self.n <= 64);
        self.out[v]
    }

    #[inline]
    pub(crate) fn in_mask(&self, v: Vertex) -> u64 {
        debug_assert!(self.n <= 64);
        self.inn[v]
    }

    /// Arcs in ascending `(u, v)` order.
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| self.out_neighbors(u).map(move |v| (u, v)))
    }

    pub fn out_neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        bits::Ones::new(self.out_row(v))
    }

    pub fn in_neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        bits::Ones::new(self.in_row(v))
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        bits::count(self.out_row(v))
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        bits::count(self.in_row(v))
    }

    pub fn degree_queries(&self, v: Vertex) -> Result<Degrees> {
        self.check_vertex(v)?;
        let out_neighbors: Vec<_> = self.out_neighbors(v).collect();
        let in_neighbors: Vec<_> = self.in_neighbors(v).collect();
        Ok(Degrees {
            out_degree: out_neighbors.len(),
            in_degree: in_neighbors.len(),
            out_neighbors,
            in_neighbors,
        })
    }

    pub fn with_arc(&self, u: Vertex, v: Vertex) -> Result<Digraph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::LoopArc(u));
        }
        let mut d = self.clone();
        d.insert(u, v);
        Ok(d)
    }

    pub fn without_arc(&self, u: Vertex, v: Vertex) -> Digraph {
        let mut d = self.clone();
        if u < self.n && v < self.n {
            d.remove(u, v);
        }
        d
    }

    /// Induced subdigraph on `vertices`, relabeled by ascending original index.
    pub fn induced(&self, vertices: &[Vertex]) -> Digraph {
        let mut vs = vertices.to_vec();
        vs.sort_unstable();
        vs.dedup();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vs.iter().enumerate() {
            pos[v] = i;
        }
        let mut d = Digraph::empty(vs.len());
        for (i, &u) in vs.iter().enumerate() {
            for v in self.out_neighbors(u) {
                if pos[v] != usize::MAX {
                    d.insert(i, pos[v]);
                }
            }
        }
        d
    }

    pub fn remove_vertex(&self, v: Vertex) -> Digraph {
        let keep: Vec<_> = (0..self.n).filter(|&x| x != v).collect();
        self.induced(&keep)
    }

    /// Applies a relabeling: vertex `i` becomes `perm[i]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Digraph> {
        if perm.len() != self.n {
            return Err(Error::BadParameter(format!(
                "relabeling has length {}, digraph has order {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || seen[p] {
                return Err(Error::BadParameter(format!(
                    "relabeling {perm:?} is not a permutation"
                )));
            }
            seen[p] = true;
        }
        let mut d = Digraph::empty(self.n);
        for (u, v) in self.arcs() {
            d.insert(perm[u], perm[v]);
        }
        Ok(d)
    }

    pub fn is_digon_free(&self) -> bool {
        self.arcs().all(|(u, v)| !self.has_arc(v, u))
    }

    /// No directed cycle of length ≥ 2 (digons count).
    pub fn is_acyclic(&self) -> bool {
        let mut indeg: Vec<usize> = (0..self.n).map(|v| self.in_degree(v)).collect();
        let mut stack: Vec<_> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut removed = 0;
        while let Some(u) = stack.pop() {
            removed += 1;
            for v in self.out_neighbors(u) {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    stack.push(v);
                }
            }
        }
        removed == self.n
    }

    fn reach(&self, start: Vertex, forward: bool) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(u) = stack.pop() {
            let row = if forward {
                self.out_row(u)
            } else {
                self.in_row(u)
            };
            for v in bits::Ones::new(row) {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }

    pub fn is_weakly_connected(&self) -> bool {
        self.underlying().is_connected()
    }

    pub fn is_strongly_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.reach(0, true).iter().all(|&b| b) && self.reach(0, false).iter().all(|&b| b)
    }

    /// Weak and strong connectivity; the empty digraph and `K₁` are both.
    pub fn connectivity(&self) -> Connectivity {
        Connectivity {
            weak: self.is_weakly_connected(),
            strong: self.is_strongly_connected(),
        }
    }

    /// First ordered pair `(u, v)` with no directed `u`-`v` path, if any.
    pub fn unreachable_pair(&self) -> Option<(Vertex, Vertex)> {
        (0..self.n).find_map(|u| {
            let r = self.reach(u, true);
            r.iter().position(|&b| !b).map(|v| (u, v))
        })
    }

    /// Underlying simple graph `G(D)`.
    pub fn underlying(&self) -> UndirectedGraph {
        let mut g = UndirectedGraph::empty(self.n);
        for (u, v) in self.arcs() {
            g.insert(u, v);
        }
        g
    }

    /// Symmetric part `S(D)`: edges whose both arcs are present.
    pub fn symmetric_part(&self) -> UndirectedGraph {
        let mut g = UndirectedGraph::empty(self.n);
        for (u, v) in self.arcs() {
            if u < v && self.has_arc(v, u) {
                g.insert(u, v);
            }
        }
        g
    }

    pub fn complement(&self) -> Digraph {
        let mut d = Digraph::empty(self.n);
        for u in 0..self.n {
            for v in 0..self.n {
                if u != v && !self.has_arc(u, v) {
                    d.insert(u, v);
                }
            }
        }
        d
    }

    pub fn is_eulerian(&self) -> bool {
        (0..self.n).all(|v| self.out_degree(v) == self.in_degree(v))
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Digraph) -> Digraph {
        let n1 = self.n;
        let mut d = Digraph::empty(n1 + other.n);
        for (u, v) in self.arcs() {
            d.insert(u, v);
        }
        for (u, v) in other.arcs() {
            d.insert(u + n1, v + n1);
        }
        d
    }

    /// A vertex with neither in- nor out-neighbors.
    pub fn has_isolated_vertex(&self) -> bool {
        (0..self.n).any(|v| self.out_degree(v) == 0 && self.in_degree(v) == 0)
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, arcs=[", self.n)?;
        for (i, (u, v)) in self.arcs().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}>{v}")?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3() -> Digraph {
        Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn build_collapses_duplicates() {
        let d = Digraph::new(3, [(0, 1), (1, 2), (0, 1), (2, 0)]).unwrap();
        assert_eq!(d, c3());
        assert_eq!(d.arc_count(), 3);
        let digon = Digraph::new(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(digon, Digraph::complete(2));
    }

    #[test]
    fn build_errors() {
        assert_eq!(Digraph::new(1, [(0, 0)]), Err(Error::LoopArc(0)));
        assert!(matches!(
            Digraph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, .. })
        ));
    }

    #[test]
    fn degree_examples() {
        let d = c3().degree_queries(0).unwrap();
        assert_eq!(
            (d.out_degree, d.in_degree, d.out_neighbors, d.in_neighbors),
            (1, 1, vec![1], vec![2])
        );
        let k4 = Digraph::complete(4);
        for v in 0..4 {
            let d = k4.degree_queries(v).unwrap();
            let others: Vec<_> = (0..4).filter(|&x| x != v).collect();
            assert_eq!((d.out_degree, d.in_degree), (3, 3));
            assert_eq!(d.out_neighbors, others);
            assert_eq!(d.in_neighbors, others);
        }
        let a = Digraph::new(2, [(0, 1)])
            .unwrap()
            .degree_queries(1)
            .unwrap();
        assert_eq!((a.out_degree, a.in_degree), (0, 1));
        assert!(a.out_neighbors.is_empty());
        assert_eq!(a.in_neighbors, vec![0]);
        assert!(c3().degree_queries(3).is_err());
    }

    #[test]
    fn acyclicity() {
        assert!(Family::DirectedPath(4).build().unwrap().is_acyclic());
        assert!(!Digraph::complete(2).is_acyclic());
        assert!(!Family::DirectedCycle(5).build().unwrap().is_acyclic());
        assert!(Digraph::empty(0).is_acyclic());
    }

    #[test]
    fn derived_graphs() {
        let d = Digraph::new(2, [(0, 1)]).unwrap();
        assert_eq!(d.underlying().edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(d.symmetric_part().edge_count(), 0);
        assert_eq!(d.complement(), Digraph::new(2, [(1, 0)]).unwrap());
        let c5 = UndirectedGraph::cycle(5).unwrap();
        let bc5 = c5.bidirect();
        assert_eq!(bc5.arc_count(), 10);
        assert_eq!(bc5, Family::BidirectedCycle(5).build().unwrap());
        assert_eq!(
            Digraph::complete(3).symmetric_part(),
            UndirectedGraph::complete(3)
        );
    }

    #[test]
    fn connectivity_examples() {
        let path = Family::DirectedPath(3).build().unwrap();
        assert_eq!(
            c3().connectivity(),
            Connectivity {
                weak: true,
                strong: true
            }
        );
        assert_eq!(
            path.connectivity(),
            Connectivity {
                weak: true,
                strong: false
            }
        );
        let two = Digraph::complete(2).disjoint_union(&Digraph::complete(2));
        assert_eq!(
            two.connectivity(),
            Connectivity {
                weak: false,
                strong: false
            }
        );
        assert!(Digraph::empty(0).connectivity().strong);
        assert!(Digraph::empty(1).connectivity().weak);
        assert_eq!(path.unreachable_pair(), Some((1, 0)));
    }

    #[test]
    fn relabel_rejects_non_permutations() {
        assert!(c3().relabel(&[0, 0, 1]).is_err());
        assert!(c3().relabel(&[0, 1]).is_err());
        let r = c3().relabel(&[1, 2, 0]).unwrap();
        assert_eq!(r, Digraph::new(3, [(1, 2), (2, 0), (0, 1)]).unwrap());
    }

    #[test]
    fn induced_compacts_in_ascending_order() {
        let d = Digraph::complete(4).without_arc(1, 3);
        let h = d.induced(&[3, 1]);
        assert_eq!(h, Digraph::new(2, [(1, 0)]).unwrap());
    }

    #[test]
    fn large_orders_use_multiword_rows() {
        let n = 130;
        let d = Family::DirectedCycle(n).build().unwrap();
        assert_eq!(d.arc_count(), n);
        assert!(d.has_arc(129, 0));
        assert!(d.is_strongly_connected());
        assert_eq!(d.complement().complement(), d);
    }
}
