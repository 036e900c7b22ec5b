use super::{mask_is_acyclic, Coloring, ListAssignment};
use crate::Digraph;

/// How the solver decides whether a vertex may join a color class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Feasibility {
    /// Reachability from the new vertex's out-neighbors inside the class.
    Incremental,
    /// Re-run a full acyclicity test on the enlarged class.
    FullRecheck,
}

struct Masks {
    out: Vec<u64>,
    inn: Vec<u64>,
}

impl Masks {
    fn new(d: &Digraph) -> Self {
        let n = d.order();
        Masks {
            out: (0..n).map(|v| d.out_mask(v)).collect(),
            inn: (0..n).map(|v| d.in_mask(v)).collect(),
        }
    }

    /// `cls` is acyclic; does `cls ∪ {v}` contain a cycle through `v`?
    #[inline]
    fn closes_cycle(&self, v: usize, cls: u64) -> bool {
        let targets = self.inn[v] & cls;
        let mut frontier = self.out[v] & cls;
        if targets == 0 || frontier == 0 {
            return false;
        }
        let mut seen = frontier;
        while frontier != 0 {
            if seen & targets != 0 {
                return true;
            }
            let u = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let next = self.out[u] & cls & !seen;
            seen |= next;
            frontier |= next;
        }
        seen & targets != 0
    }
}

fn fits(d: &Digraph, m: &Masks, v: usize, cls: u64, mode: Feasibility) -> bool {
    match mode {
        Feasibility::Incremental => !m.closes_cycle(v, cls),
        Feasibility::FullRecheck => mask_is_acyclic(d, cls | 1 << v),
    }
}

pub(super) fn solve(d: &Digraph, k: usize, mode: Feasibility) -> Option<Coloring> {
    let n = d.order();
    if n == 0 {
        return Some(Coloring::new(Vec::new()));
    }
    if k == 0 {
        return None;
    }
    let m = Masks::new(d);
    let mut classes = vec![0u64; k.min(n)];
    let mut colors = vec![0usize; n];
    if assign(d, &m, mode, 0, 0, &mut classes, &mut colors) {
        Some(Coloring::new(colors))
    } else {
        None
    }
}

fn assign(
    d: &Digraph,
    m: &Masks,
    mode: Feasibility,
    v: usize,
    used: usize,
    classes: &mut [u64],
    colors: &mut [usize],
) -> bool {
    if v == colors.len() {
        return true;
    }
    // Colors beyond `used` are interchangeable: try only the first fresh one.
    let cap = classes.len().min(used + 1);
    for c in 0..cap {
        if !fits(d, m, v, classes[c], mode) {
            continue;
        }
        classes[c] |= 1 << v;
        colors[v] = c;
        if assign(d, m, mode, v + 1, used.max(c + 1), classes, colors) {
            return true;
        }
        classes[c] &= !(1 << v);
    }
    false
}

pub(super) fn solve_lists(d: &Digraph, lists: &ListAssignment) -> Option<Coloring> {
    let n = d.order();
    let mut palette: Vec<usize> = (0..n).flat_map(|v| lists.list(v).iter().copied()).collect();
    palette.sort_unstable();
    palette.dedup();
    // lists re-expressed as palette indices
    let idx: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            lists
                .list(v)
                .iter()
                .map(|c| palette.binary_search(c).unwrap())
                .collect()
        })
        .collect();
    let m = Masks::new(d);
    let mut classes = vec![0u64; palette.len()];
    let mut colors = vec![0usize; n];
    if assign_lists(&m, &idx, 0, &mut classes, &mut colors) {
        Some(Coloring::new(colors.iter().map(|&i| palette[i]).collect()))
    } else {
        None
    }
}

fn assign_lists(
    m: &Masks,
    idx: &[Vec<usize>],
    v: usize,
    classes: &mut [u64],
    colors: &mut [usize],
) -> bool {
    if v == colors.len() {
        return true;
    }
    for &c in &idx[v] {
        if m.closes_cycle(v, classes[c]) {
            continue;
        }
        classes[c] |= 1 << v;
        colors[v] = c;
        if assign_lists(m, idx, v + 1, classes, colors) {
            return true;
        }
        classes[c] &= !(1 << v);
    }
    false
}
