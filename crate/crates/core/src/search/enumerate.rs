use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::digraph::{canonical_form, CanonicalForm};
use crate::{Digraph, Error, Result};

/// Which digraphs to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DigraphClass {
    General,
    DigonFree,
    /// Digon-free with every pair adjacent.
    Tournament,
}

impl DigraphClass {
    pub fn order_limit(self) -> usize {
        match self {
            DigraphClass::General | DigraphClass::DigonFree => 6,
            DigraphClass::Tournament => 7,
        }
    }

    /// Arc states of one vertex pair `i < j`: bit 0 is `i→j`, bit 1 is `j→i`.
    fn pair_states(self) -> &'static [u8] {
        match self {
            DigraphClass::General => &[0, 1, 2, 3],
            DigraphClass::DigonFree => &[0, 1, 2],
            DigraphClass::Tournament => &[1, 2],
        }
    }

    pub(crate) fn check(self, n: usize) -> Result<()> {
        if n > self.order_limit() {
            return Err(Error::SizeLimitExceeded {
                what: "enumeration",
                order: n,
                limit: self.order_limit(),
            });
        }
        Ok(())
    }
}

/// Mixed-radix walk over the labeled digraphs of a class, pairs in
/// lexicographic order, the last pair varying fastest.
struct Labeled {
    n: usize,
    pairs: Vec<(usize, usize)>,
    states: &'static [u8],
    digits: Vec<usize>,
    done: bool,
}

impl Iterator for Labeled {
    type Item = Digraph;

    fn next(&mut self) -> Option<Digraph> {
        if self.done {
            return None;
        }
        let mut d = Digraph::empty(self.n);
        for (&(i, j), &s) in self.pairs.iter().zip(&self.digits) {
            let s = self.states[s];
            if s & 1 != 0 {
                d.insert(i, j);
            }
            if s & 2 != 0 {
                d.insert(j, i);
            }
        }
        self.done = true;
        for digit in self.digits.iter_mut().rev() {
            *digit += 1;
            if *digit < self.states.len() {
                self.done = false;
                break;
            }
            *digit = 0;
        }
        Some(d)
    }
}

/// Every labeled digraph of the class on `0..n`, in a fixed order.
pub fn labeled_digraphs(
    n: usize,
    class: DigraphClass,
) -> Result<impl Iterator<Item = Digraph> + Send> {
    class.check(n)?;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    Ok(Labeled {
        n,
        digits: vec![0; pairs.len()],
        pairs,
        states: class.pair_states(),
        done: false,
    })
}

/// All one-vertex extensions of `base` within `class`: vertex `n` is appended
/// and joined to each old vertex in every allowed state.
pub(crate) fn extensions(
    base: &Digraph,
    class: DigraphClass,
) -> impl Iterator<Item = Digraph> + '_ {
    let m = base.order();
    let states = class.pair_states();
    let total = states.len().pow(m as u32);
    (0..total).map(move |mut code| {
        let mut d = Digraph::empty(m + 1);
        for (u, v) in base.arcs() {
            d.insert(u, v);
        }
        for i in 0..m {
            let s = states[code % states.len()];
            code /= states.len();
            if s & 1 != 0 {
                d.insert(i, m);
            }
            if s & 2 != 0 {
                d.insert(m, i);
            }
        }
        d
    })
}

/// Canonical forms of all iso classes of order `n`, sorted.
pub(crate) fn iso_classes(n: usize, class: DigraphClass) -> Result<Vec<CanonicalForm>> {
    class.check(n)?;
    let mut level = vec![canonical_form(&Digraph::empty(0))?];
    for _ in 0..n {
        level = extend_level(&level, class, |_| true)?.into_iter().collect();
    }
    Ok(level)
}

/// Canonical forms of the extensions of `level` accepted by `keep`.
pub(crate) fn extend_level<F>(
    level: &[CanonicalForm],
    class: DigraphClass,
    keep: F,
) -> Result<BTreeSet<CanonicalForm>>
where
    F: Fn(&Digraph) -> bool + Sync,
{
    let parts: Vec<Result<BTreeSet<CanonicalForm>>> = level
        .par_iter()
        .map(|f| {
            let base = f.to_digraph();
            let mut out = BTreeSet::new();
            for d in extensions(&base, class) {
                if keep(&d) {
                    out.insert(canonical_form(&d)?);
                }
            }
            Ok(out)
        })
        .collect();
    let mut all = BTreeSet::new();
    for p in parts {
        all.extend(p?);
    }
    Ok(all)
}

/// Enumerates the digraphs of `class` on `n` vertices, either every labeled
/// one or one canonical representative per isomorphism class (sorted by
/// canonical form).
pub fn enumerate_digraphs(
    n: usize,
    class: DigraphClass,
    up_to_iso: bool,
) -> Result<Box<dyn Iterator<Item = Digraph> + Send>> {
    if up_to_iso {
        let forms = iso_classes(n, class)?;
        Ok(Box::new(forms.into_iter().map(|f| f.to_digraph())))
    } else {
        Ok(Box::new(labeled_digraphs(n, class)?))
    }
}
