use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use super::enumerate::{extend_level, iso_classes, DigraphClass};
use crate::coloring::is_k_critical;
use crate::digraph::canonical_form;
use crate::digraph::io::write_inline;
use crate::{Digraph, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub n_max: usize,
    pub k: usize,
    pub digon_free: bool,
    /// Canonical representatives, sorted by order then canonical form.
    pub found: Vec<Digraph>,
    /// `(order, count)` for every order `0..=n_max`.
    pub counts: Vec<(usize, usize)>,
    /// Candidates examined (one unit per labeled extension tested).
    pub work_units: u64,
}

impl fmt::Display for CensusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "# census k={} n-max={} digon-free={}",
            self.k, self.n_max, self.digon_free
        )?;
        for (n, c) in &self.counts {
            writeln!(f, "# order {n} count {c}")?;
        }
        writeln!(f, "# total {} work {}", self.found.len(), self.work_units)?;
        for d in &self.found {
            writeln!(f, "{}", write_inline(d))?;
        }
        Ok(())
    }
}

/// Cheap necessary conditions for `k`-criticality (`k ≥ 2`): minimum in- and
/// out-degree `k − 1` and strong connectivity.
fn may_be_critical(d: &Digraph, k: usize) -> bool {
    (0..d.order()).all(|v| d.out_degree(v) + 1 >= k && d.in_degree(v) + 1 >= k)
        && d.is_strongly_connected()
}

/// All `k`-critical digraphs on at most `n_max` vertices, up to isomorphism.
///
/// Order `n` is generated by extending every iso class of order `n − 1`
/// by one vertex; the criticality test runs before canonicalization.
pub fn critical_census(n_max: usize, k: usize, digon_free: bool) -> Result<CensusReport> {
    let class = if digon_free {
        DigraphClass::DigonFree
    } else {
        DigraphClass::General
    };
    class.check(n_max)?;
    let work = AtomicU64::new(0);
    let mut found = Vec::new();
    let mut counts = Vec::new();
    for n in 0..=n_max {
        let here: Vec<Digraph> = if n == 0 {
            let e = Digraph::empty(0);
            if is_k_critical(&e, k)? {
                vec![e]
            } else {
                vec![]
            }
        } else {
            let below = iso_classes(n - 1, class)?;
            let forms = extend_level(&below, class, |d| {
                work.fetch_add(1, Ordering::Relaxed);
                (k < 2 || may_be_critical(d, k)) && is_k_critical(d, k).unwrap_or(false)
            })?;
            forms.into_iter().map(|f| f.to_digraph()).collect()
        };
        counts.push((n, here.len()));
        found.extend(here);
    }
    debug_assert!(found.iter().all(|d| canonical_form(d)
        .map(|f| f.to_digraph() == *d)
        .unwrap_or(false)));
    Ok(CensusReport {
        n_max,
        k,
        digon_free,
        found,
        counts,
        work_units: work.into_inner(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{is_isomorphic, Family};

    #[test]
    fn crit2_small_is_cycles() {
        let r = critical_census(4, 2, false).unwrap();
        assert_eq!(r.found.len(), 3);
        for (d, n) in r.found.iter().zip(2..) {
            assert!(is_isomorphic(d, &Family::DirectedCycle(n).build().unwrap()).unwrap());
        }
    }

    #[test]
    fn crit3_contains_k3_and_crit5_empty() {
        let r = critical_census(4, 3, false).unwrap();
        assert!(r.found.contains(&Digraph::complete(3)));
        assert!(r.found.iter().all(|d| is_k_critical(d, 3).unwrap()));
        assert!(critical_census(4, 5, false).unwrap().found.is_empty());
        let r = critical_census(3, 1, false).unwrap();
        assert_eq!(r.found, vec![Digraph::empty(1)]);
    }

    #[test]
    fn report_format() {
        let r = critical_census(3, 2, false).unwrap();
        let s = r.to_string();
        assert!(s.starts_with("# census k=2 n-max=3 digon-free=false\n"));
        assert!(s.contains("# total 2"));
        assert_eq!(s.lines().filter(|l| l.starts_with("g ")).count(), 2);
    }
}
