//! Enumeration and search: small digraphs up to isomorphism, censuses of
//! critical digraphs, `N(k)` checks, bounded Hajós-construction search and
//! the Ore-derivation generator.
//!
//! Parallel work runs on the global rayon pool; every result is sorted or
//! merged in a fixed order, so output does not depend on the thread count.

mod census;
mod enumerate;
mod hajos;
mod nk;
mod ore;

pub use census::{critical_census, CensusReport};
pub use enumerate::{enumerate_digraphs, labeled_digraphs, DigraphClass};
pub use hajos::{hajos_construct_search, LimitKind, NotFoundReport, SearchLimits, SearchOutcome};
pub use nk::{all_digon_free_colorable, verify_nk_lower_bound, NkVerdict, OrderCheck};
pub use ore::{ore_derivation, OreLimits};
