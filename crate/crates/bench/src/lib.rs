//! Workloads shared by the criterion benches.

use divgraph_core::{AssocKind, AtomKind, EnumOptions, Lab, Result};

/// Rings spanning the shapes the library handles: cyclic, product and
/// polynomial quotient.
pub const RINGS: [&str; 4] = [
    "Zmod(32)",
    "Prod(Zmod(4),Zmod(4))",
    "PolyQ(Zmod(4),x^2)",
    "PolyQ(Zmod(2),x^3)",
];

/// Build a ring and classify every element.
pub fn classify(spec: &str) -> Result<usize> {
    let lab = Lab::from_spec(spec)?;
    Ok(lab.profiles().iter().filter(|p| p.irreducible).count())
}

/// Every divisor graph of every non-unit, with its pseudo-clique number.
pub fn all_graphs(lab: &Lab) -> Result<u64> {
    let mut total = 0;
    for x in lab.ring().non_unit_list() {
        for alpha in AtomKind::ALL {
            for beta in AssocKind::ALL {
                let g = lab.graph(x, alpha, beta)?;
                total += g.pseudo_clique_number().finite().unwrap_or(1);
            }
        }
    }
    Ok(total)
}

/// Capped enumeration of every non-unit's irreducible factorizations.
pub fn enumerate_all(lab: &Lab, cap: usize) -> Result<usize> {
    let mut total = 0;
    for x in lab.ring().non_unit_list() {
        let e = lab.enumerate(
            x,
            AtomKind::Irreducible,
            AssocKind::Assoc,
            EnumOptions::capped(cap),
        )?;
        total += e.factorizations.len();
    }
    Ok(total)
}
