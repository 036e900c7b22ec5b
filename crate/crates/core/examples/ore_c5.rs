use dicrit::digraph::Family;
use dicrit::search::{ore_derivation, OreLimits};

fn main() {
    let c5 = Family::BidirectedCycle(5).build().unwrap();
    let s = ore_derivation(&c5, 3, OreLimits::default()).unwrap();
    println!("{s}");
}
