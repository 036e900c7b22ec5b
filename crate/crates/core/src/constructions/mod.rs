//! Joins, identification and the gadget digraphs.
//!
//! All operations fix labels deterministically:
//!
//! * Dirac join: `D1` keeps `0..n1`, `D2` shifts by `n1`.
//! * Hajós joins: `D1 − v1` takes `0..n1−1` ascending, the merged vertex is
//!   `n1 − 1`, `D2 − v2` follows from `n1` ascending.
//! * Identification: the merged vertex sits at `min(I)`, the rest compacts
//!   in ascending order.

mod gadgets;

use crate::{Digraph, Error, Result, Vertex};

pub use gadgets::{claim_gadget_derivation, gadget, GadgetKind, GadgetLibrary};

/// A constructed digraph plus where each operand vertex ended up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinResult {
    pub result: Digraph,
    pub map1: Vec<Vertex>,
    pub map2: Vec<Vertex>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum JoinKind {
    Directed,
    Bidirected,
}

pub fn dirac_join(d1: &Digraph, d2: &Digraph) -> JoinResult {
    let (n1, n2) = (d1.order(), d2.order());
    let mut d = d1.disjoint_union(d2);
    for u in 0..n1 {
        for v in n1..n1 + n2 {
            d.insert(u, v);
            d.insert(v, u);
        }
    }
    JoinResult {
        result: d,
        map1: (0..n1).collect(),
        map2: (n1..n1 + n2).collect(),
    }
}

fn join_maps(n1: usize, v1: Vertex, n2: usize, v2: Vertex) -> (Vec<Vertex>, Vec<Vertex>) {
    let merged = n1 - 1;
    let map1 = (0..n1)
        .map(|x| match x.cmp(&v1) {
            std::cmp::Ordering::Less => x,
            std::cmp::Ordering::Equal => merged,
            std::cmp::Ordering::Greater => x - 1,
        })
        .collect();
    let map2 = (0..n2)
        .map(|y| match y.cmp(&v2) {
            std::cmp::Ordering::Less => n1 + y,
            std::cmp::Ordering::Equal => merged,
            std::cmp::Ordering::Greater => n1 + y - 1,
        })
        .collect();
    (map1, map2)
}

fn check_pair(d: &Digraph, v: Vertex, u: Vertex) -> Result<()> {
    d.check_vertex(v)?;
    d.check_vertex(u)?;
    if u == v {
        return Err(Error::SameVertex(v));
    }
    Ok(())
}

fn merge(
    d1: &Digraph,
    skip1: &[(Vertex, Vertex)],
    v1: Vertex,
    d2: &Digraph,
    skip2: &[(Vertex, Vertex)],
    v2: Vertex,
    added: &[(Vertex, Vertex)],
) -> JoinResult {
    let (n1, n2) = (d1.order(), d2.order());
    let (map1, map2) = join_maps(n1, v1, n2, v2);
    let mut d = Digraph::empty(n1 + n2 - 1);
    for (x, y) in d1.arcs().filter(|a| !skip1.contains(a)) {
        d.insert(map1[x], map1[y]);
    }
    for (x, y) in d2.arcs().filter(|a| !skip2.contains(a)) {
        d.insert(map2[x], map2[y]);
    }
    for &(x, y) in added {
        d.insert(map1[x], map2[y]);
    }
    JoinResult {
        result: d,
        map1,
        map2,
    }
}

/// `(D1, v1, u1) ▽ (D2, v2, u2)`: drop `u1v1` and `v2u2`, merge `v1` with
/// `v2`, add `u1u2`.
pub fn hajos_join(
    d1: &Digraph,
    v1: Vertex,
    u1: Vertex,
    d2: &Digraph,
    v2: Vertex,
    u2: Vertex,
) -> Result<JoinResult> {
    check_pair(d1, v1, u1)?;
    check_pair(d2, v2, u2)?;
    if !d1.has_arc(u1, v1) {
        return Err(Error::MissingArc(u1, v1));
    }
    if !d2.has_arc(v2, u2) {
        return Err(Error::MissingArc(v2, u2));
    }
    let mut r = merge(d1, &[(u1, v1)], v1, d2, &[(v2, u2)], v2, &[]);
    r.result.insert(r.map1[u1], r.map2[u2]);
    Ok(r)
}

/// Bidirected Hajós join: both digons are removed and a digon `u1u2` added.
pub fn bidirected_hajos_join(
    d1: &Digraph,
    v1: Vertex,
    u1: Vertex,
    d2: &Digraph,
    v2: Vertex,
    u2: Vertex,
) -> Result<JoinResult> {
    check_pair(d1, v1, u1)?;
    check_pair(d2, v2, u2)?;
    if !d1.has_digon(u1, v1) {
        return Err(Error::MissingDigon(u1, v1));
    }
    if !d2.has_digon(v2, u2) {
        return Err(Error::MissingDigon(v2, u2));
    }
    let mut r = merge(
        d1,
        &[(u1, v1), (v1, u1)],
        v1,
        d2,
        &[(v2, u2), (u2, v2)],
        v2,
        &[],
    );
    let (a, b) = (r.map1[u1], r.map2[u2]);
    r.result.insert(a, b);
    r.result.insert(b, a);
    Ok(r)
}

pub fn join(
    kind: JoinKind,
    d1: &Digraph,
    v1: Vertex,
    u1: Vertex,
    d2: &Digraph,
    v2: Vertex,
    u2: Vertex,
) -> Result<JoinResult> {
    match kind {
        JoinKind::Directed => hajos_join(d1, v1, u1, d2, v2, u2),
        JoinKind::Bidirected => bidirected_hajos_join(d1, v1, u1, d2, v2, u2),
    }
}

/// Result of [`identify`]: `map[v]` is the new label of `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identified {
    pub result: Digraph,
    pub map: Vec<Vertex>,
}

/// `D/I`: merges the independent set `I` into one vertex at `min(I)`.
pub fn identify(d: &Digraph, set: &[Vertex]) -> Result<Identified> {
    let mut set = set.to_vec();
    set.sort_unstable();
    set.dedup();
    let Some(&keep) = set.first() else {
        return Err(Error::EmptySet);
    };
    for &x in &set {
        d.check_vertex(x)?;
    }
    for (i, &a) in set.iter().enumerate() {
        for &b in &set[i + 1..] {
            if d.adjacent(a, b) {
                return Err(Error::NotIndependent(a, b));
            }
        }
    }
    let n = d.order();
    let mut map = vec![0; n];
    let mut next = 0;
    for (v, slot) in map.iter_mut().enumerate() {
        if v != keep && set.binary_search(&v).is_ok() {
            continue;
        }
        *slot = next;
        next += 1;
    }
    for &x in &set[1..] {
        map[x] = map[keep];
    }
    let mut r = Digraph::empty(next);
    for (u, v) in d.arcs() {
        r.insert(map[u], map[v]);
    }
    Ok(Identified { result: r, map })
}

/// Ore join: the `kind` Hajós join followed by identifying `w` with `ι(w)`
/// for each pair of `iota`, in ascending order of `w`.
///
/// `iota` is a partial injection from `V(D1) − v1` to `V(D2) − v2` with
/// `ι(u1) ≠ u2`.
#[allow(clippy::too_many_arguments)]
pub fn ore_join(
    kind: JoinKind,
    d1: &Digraph,
    v1: Vertex,
    u1: Vertex,
    d2: &Digraph,
    v2: Vertex,
    u2: Vertex,
    iota: &[(Vertex, Vertex)],
) -> Result<JoinResult> {
    let mut pairs = iota.to_vec();
    pairs.sort_unstable();
    for (i, &(w, x)) in pairs.iter().enumerate() {
        if w >= d1.order() || x >= d2.order() {
            return Err(Error::BadBijection(format!("pair {w}->{x} out of range")));
        }
        if w == v1 || x == v2 {
            return Err(Error::BadBijection(format!(
                "pair {w}->{x} touches a join vertex"
            )));
        }
        if pairs[..i].iter().any(|&(w2, x2)| w2 == w || x2 == x) {
            return Err(Error::BadBijection(format!(
                "pair {w}->{x} is not injective"
            )));
        }
        if w == u1 && x == u2 {
            return Err(Error::BadBijection(format!("maps {u1} onto {u2}")));
        }
    }
    let JoinResult {
        result: mut d,
        mut map1,
        mut map2,
    } = join(kind, d1, v1, u1, d2, v2, u2)?;
    for &(w, x) in &pairs {
        let step = identify(&d, &[map1[w], map2[x]])?;
        d = step.result;
        for m in map1.iter_mut().chain(map2.iter_mut()) {
            *m = step.map[*m];
        }
    }
    Ok(JoinResult {
        result: d,
        map1,
        map2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::dichromatic_number;
    use crate::digraph::{is_isomorphic, Family};

    fn fam(f: Family) -> Digraph {
        f.build().unwrap()
    }

    #[test]
    fn dirac_examples() {
        let c3 = fam(Family::DirectedCycle(3));
        let r = dirac_join(&c3, &c3);
        assert_eq!((r.result.order(), r.result.arc_count()), (6, 24));
        assert_eq!(
            dirac_join(&Digraph::complete(2), &Digraph::complete(2)).result,
            Digraph::complete(4)
        );
        assert_eq!(dirac_join(&Digraph::empty(0), &c3).result, c3);
    }

    #[test]
    fn hajos_examples() {
        let c3 = fam(Family::DirectedCycle(3));
        // arc 2->0 in the first, 0->1 in the second
        let r = hajos_join(&c3, 0, 2, &c3, 0, 1).unwrap();
        assert_eq!((r.result.order(), r.result.arc_count()), (5, 5));
        assert!(is_isomorphic(&r.result, &fam(Family::DirectedCycle(5))).unwrap());

        let k4 = Digraph::complete(4);
        let r = hajos_join(&k4, 0, 1, &k4, 1, 0).unwrap();
        assert_eq!((r.result.order(), r.result.arc_count()), (7, 23));

        let r = hajos_join(&Digraph::complete(2), 0, 1, &Digraph::complete(2), 0, 1).unwrap();
        assert!(is_isomorphic(&r.result, &c3).unwrap());
        assert_eq!(r.map1, vec![1, 0]);
        assert_eq!(r.map2, vec![1, 2]);
    }

    #[test]
    fn hajos_errors() {
        let c3 = fam(Family::DirectedCycle(3));
        assert_eq!(
            hajos_join(&c3, 0, 1, &c3, 0, 1).unwrap_err(),
            Error::MissingArc(1, 0)
        );
        assert_eq!(
            hajos_join(&c3, 0, 0, &c3, 0, 1).unwrap_err(),
            Error::SameVertex(0)
        );
        assert_eq!(
            bidirected_hajos_join(&c3, 0, 2, &c3, 0, 1).unwrap_err(),
            Error::MissingDigon(2, 0)
        );
    }

    #[test]
    fn bidirected_examples() {
        let c4 = fam(Family::BidirectedCycle(4));
        let r = bidirected_hajos_join(&c4, 0, 1, &c4, 0, 1).unwrap();
        assert!(is_isomorphic(&r.result, &fam(Family::BidirectedCycle(7))).unwrap());

        let k3 = Digraph::complete(3);
        let r = bidirected_hajos_join(&k3, 0, 1, &k3, 0, 1).unwrap();
        assert_eq!(r.result.order(), 5);
        assert_eq!(dichromatic_number(&r.result).unwrap(), 3);

        let k2 = Digraph::complete(2);
        let r = bidirected_hajos_join(&k2, 0, 1, &k2, 0, 1).unwrap();
        assert_eq!(r.result, Digraph::new(3, [(0, 2), (2, 0)]).unwrap());
    }

    #[test]
    fn identify_examples() {
        let c4 = fam(Family::DirectedCycle(4));
        let r = identify(&c4, &[0, 2]).unwrap();
        assert_eq!(
            r.result,
            Digraph::new(3, [(0, 1), (1, 0), (0, 2), (2, 0)]).unwrap()
        );
        assert_eq!(r.map, vec![0, 1, 0, 2]);
        assert_eq!(identify(&c4, &[3]).unwrap().result, c4);
        let c3 = fam(Family::DirectedCycle(3));
        assert_eq!(
            identify(&c3, &[0, 1]).unwrap_err(),
            Error::NotIndependent(0, 1)
        );
        assert_eq!(identify(&c3, &[]).unwrap_err(), Error::EmptySet);
    }

    #[test]
    fn ore_join_with_empty_map_is_plain_join() {
        let k3 = Digraph::complete(3);
        for kind in [JoinKind::Directed, JoinKind::Bidirected] {
            assert_eq!(
                ore_join(kind, &k3, 0, 1, &k3, 0, 1, &[]).unwrap(),
                join(kind, &k3, 0, 1, &k3, 0, 1).unwrap()
            );
        }
    }

    #[test]
    fn ore_join_bijection_errors() {
        let k3 = Digraph::complete(3);
        let bad = |m: &[(usize, usize)]| ore_join(JoinKind::Bidirected, &k3, 0, 1, &k3, 0, 1, m);
        assert!(matches!(bad(&[(1, 1)]), Err(Error::BadBijection(_))));
        assert!(matches!(bad(&[(0, 2)]), Err(Error::BadBijection(_))));
        assert!(matches!(
            bad(&[(1, 2), (2, 2)]),
            Err(Error::BadBijection(_))
        ));
        assert!(matches!(bad(&[(5, 2)]), Err(Error::BadBijection(_))));
        // 1->2, 2->1 is the cyclic shift: K3 again plus nothing
        let r = bad(&[(1, 2), (2, 1)]).unwrap();
        assert!(is_isomorphic(&r.result, &k3).unwrap());
    }

    #[test]
    fn pendant_digon_join() {
        // D1 = K4 + pendant digon at v1; D2 = K4 + digon triangle at v1'.
        let k = 4;
        let d1 = Digraph::new(k + 1, Digraph::complete(k).arcs().chain([(0, k), (k, 0)])).unwrap();
        let (u1, u2) = (k, k + 1);
        let d2 = Digraph::new(
            k + 2,
            Digraph::complete(k).arcs().chain([
                (0, u1),
                (u1, 0),
                (0, u2),
                (u2, 0),
                (u1, u2),
                (u2, u1),
            ]),
        )
        .unwrap();
        let iota: Vec<_> = (0..k).map(|i| (i, i)).collect();
        let r = ore_join(JoinKind::Directed, &d1, k, 0, &d2, u2, u1, &iota).unwrap();
        assert!(is_isomorphic(&r.result, &d2.without_arc(u2, u1)).unwrap());
    }
}
