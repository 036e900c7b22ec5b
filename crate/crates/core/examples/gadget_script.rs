//! Prints the Ore-join derivation of `K⃡ₖ + a`.
use dicrit::constructions::{claim_gadget_derivation, GadgetKind};

fn main() {
    let k = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    print!(
        "{}",
        claim_gadget_derivation(GadgetKind::PlusArc, k).unwrap()
    );
}
