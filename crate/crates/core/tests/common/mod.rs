//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

use dicrit::Digraph;
use proptest::prelude::*;
use rand::Rng;

/// Kahn's algorithm on the subdigraph induced by `keep`.
pub fn acyclic_on(d: &Digraph, keep: &[bool]) -> bool {
    let n = d.order();
    let mut indeg = vec![0usize; n];
    for (u, v) in d.arcs() {
        if keep[u] && keep[v] {
            indeg[v] += 1;
        }
    }
    let mut stack: Vec<usize> = (0..n).filter(|&v| keep[v] && indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(u) = stack.pop() {
        seen += 1;
        for v in d.out_neighbors(u) {
            if keep[v] {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    stack.push(v);
                }
            }
        }
    }
    seen == keep.iter().filter(|&&b| b).count()
}

pub fn valid_coloring(d: &Digraph, colors: &[usize]) -> bool {
    let k = colors.iter().copied().max().map_or(0, |m| m + 1);
    (0..k).all(|c| {
        let keep: Vec<bool> = colors.iter().map(|&x| x == c).collect();
        acyclic_on(d, &keep)
    })
}

/// Every assignment in `0..k`, as a mixed-radix counter.
pub fn brute_colorable(d: &Digraph, k: usize) -> bool {
    let n = d.order();
    if n == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let mut colors = vec![0usize; n];
    loop {
        if valid_coloring(d, &colors) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            colors[i] += 1;
            if colors[i] < k {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

pub fn brute_chi(d: &Digraph) -> usize {
    (0..).find(|&k| brute_colorable(d, k)).unwrap()
}

/// Proper vertex coloring of the undirected graph with edges `edges`.
pub fn brute_graph_chi(n: usize, edges: &[(usize, usize)]) -> usize {
    (0..=n)
        .find(|&k| {
            if n == 0 {
                return true;
            }
            if k == 0 {
                return false;
            }
            let mut c = vec![0usize; n];
            loop {
                if edges.iter().all(|&(a, b)| c[a] != c[b]) {
                    return true;
                }
                let mut i = 0;
                loop {
                    if i == n {
                        return false;
                    }
                    c[i] += 1;
                    if c[i] < k {
                        break;
                    }
                    c[i] = 0;
                    i += 1;
                }
            }
        })
        .unwrap()
}

pub fn random_digraph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Digraph {
    let arcs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v)
        .filter(|_| rng.gen_bool(p))
        .collect();
    Digraph::new(n, arcs).unwrap()
}

/// Digraphs on `0..n` (`n ≤ max_n`) from an arc bitmask.
pub fn digraph_strategy(max_n: usize) -> impl Strategy<Value = Digraph> {
    (0..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n.saturating_sub(1)).prop_map(move |bits| {
            let pairs = (0..n)
                .flat_map(|u| (0..n).map(move |v| (u, v)))
                .filter(|&(u, v)| u != v);
            Digraph::new(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(a, _)| a)).unwrap()
        })
    })
}

pub fn permutation_strategy(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// A random Hajós-mode derivation: `bk k` axioms, then `steps` operations,
/// each a Hajós join of two earlier bindings (random arcs) or an
/// identification of a random independent pair of one binding.
pub fn random_hajos_script<R: Rng>(rng: &mut R, k: usize, steps: usize) -> dicrit::script::Script {
    use dicrit::constructions::{hajos_join, identify};
    use dicrit::digraph::Family;
    use dicrit::script::{Expr, JoinArgs, Script};

    let mut s = Script::new();
    let mut env: Vec<(String, Digraph)> = vec![("A0".into(), Digraph::complete(k))];
    s.push_step("A0", Expr::Axiom(Family::BidirectedComplete(k)));
    let mut done = 0;
    while done < steps {
        let name = format!("S{done}");
        let (a, da) = env[rng.gen_range(0..env.len())].clone();
        let pairs: Vec<(usize, usize)> = (0..da.order())
            .flat_map(|x| (x + 1..da.order()).map(move |y| (x, y)))
            .filter(|&(x, y)| !da.adjacent(x, y))
            .collect();
        if !pairs.is_empty() && rng.gen_bool(0.4) {
            let (x, y) = pairs[rng.gen_range(0..pairs.len())];
            let r = identify(&da, &[x, y]).unwrap();
            s.push_step(name.clone(), Expr::Identify(a, vec![x, y]));
            env.push((name, r.result));
        } else {
            if rng.gen_bool(0.3) {
                let fresh = format!("A{}", env.len());
                s.push_step(fresh.clone(), Expr::Axiom(Family::BidirectedComplete(k)));
                env.push((fresh, Digraph::complete(k)));
            }
            let (b, db) = env[rng.gen_range(0..env.len())].clone();
            let arcs1: Vec<_> = da.arcs().collect();
            let arcs2: Vec<_> = db.arcs().collect();
            let (u1, v1) = arcs1[rng.gen_range(0..arcs1.len())];
            let (v2, u2) = arcs2[rng.gen_range(0..arcs2.len())];
            let r = hajos_join(&da, v1, u1, &db, v2, u2).unwrap();
            s.push_step(
                name.clone(),
                Expr::Hajos(JoinArgs {
                    left: a,
                    v1,
                    u1,
                    right: b,
                    v2,
                    u2,
                }),
            );
            env.push((name, r.result));
        }
        done += 1;
    }
    s
}

/// Perfectness straight from the definition: every induced subdigraph has
/// dichromatic number equal to the clique number of its symmetric part.
pub fn brute_perfect(d: &Digraph) -> bool {
    let n = d.order();
    (1u32..1 << n).all(|mask| {
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let h = d.induced(&vs);
        brute_chi(&h) == brute_omega(&h)
    })
}

fn brute_omega(d: &Digraph) -> usize {
    let n = d.order();
    (0u32..1 << n)
        .filter(|&m| {
            (0..n).all(|u| {
                (0..n).all(|v| u == v || m >> u & 1 == 0 || m >> v & 1 == 0 || d.has_arc(u, v))
            })
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn weakly_connected(d: &Digraph) -> bool {
    let n = d.order();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for (v, s) in seen.iter_mut().enumerate() {
            if !*s && d.adjacent(u, v) {
                *s = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|b| b)
}

/// A connected digraph on 2..=max_n vertices with lists of size
/// `max(d⁺(v), d⁻(v))`; half the time every list is a prefix of the palette,
/// which is where non-colorable instances live.
pub fn degree_list_instance<R: Rng>(
    rng: &mut R,
    max_n: usize,
) -> (Digraph, dicrit::ListAssignment) {
    loop {
        let n = rng.gen_range(2..=max_n);
        let p = rng.gen_range(0.2..0.9);
        let d = random_digraph(rng, n, p);
        if !weakly_connected(&d) {
            continue;
        }
        let prefix = rng.gen_bool(0.5);
        let lists: Vec<Vec<usize>> = (0..n)
            .map(|v| {
                let s = d.out_degree(v).max(d.in_degree(v));
                if prefix {
                    (0..s).collect()
                } else {
                    let mut pool: Vec<usize> = (0..s + 2).collect();
                    for i in 0..s {
                        let j = rng.gen_range(i..pool.len());
                        pool.swap(i, j);
                    }
                    let mut l = pool[..s].to_vec();
                    l.sort();
                    l
                }
            })
            .collect();
        return (d, dicrit::ListAssignment::new(lists).unwrap());
    }
}

/// Eulerian with every block a directed cycle, bidirected clique or
/// bidirected odd cycle.
pub fn degree_list_obstruction(d: &Digraph) -> bool {
    use dicrit::analysis::{classify_block, BlockClass};
    use dicrit::digraph::block_decomposition;
    (0..d.order()).all(|v| d.out_degree(v) == d.in_degree(v))
        && block_decomposition(d).blocks.iter().all(|b| {
            matches!(
                classify_block(d, b).unwrap(),
                BlockClass::DirectedCycle(_)
                    | BlockClass::BidirectedComplete(_)
                    | BlockClass::BidirectedOddCycle(_)
            )
        })
}
