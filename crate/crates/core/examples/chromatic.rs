//! Chromatic polynomial, its series numerator h_G, the decomposition of z h_G
//! and the partial-sum inequalities for a few small graphs.

use hstar_decomp::decomp::{graph_decomposition, inequality_report, InequalityMode};
use hstar_decomp::{Budget, Graph};

fn main() -> hstar_decomp::Result<()> {
    let graphs = [
        ("K3", Graph::complete(3)),
        ("path on 4", Graph::path(4)),
        ("4-cycle", Graph::cycle(4)),
        ("K4 minus an edge", Graph::new(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)])?),
    ];
    for (name, g) in graphs {
        let d = g.len();
        let chi = g.chromatic_polynomial();
        assert_eq!(chi, g.chromatic_via_orientations(&Budget::default())?);
        let dec = graph_decomposition(&g)?;
        println!("{name}: chi(n) = {chi}");
        println!("  h_G = {} ({} acyclic orientations)", dec.numerator, dec.acyclic_orientations);
        println!("  a   = {}\n  b   = {}", dec.a, dec.b);
        for mode in [InequalityMode::Theorem, InequalityMode::Conjecture] {
            let values: Vec<String> = inequality_report(&dec.numerator, d, mode)
                .iter()
                .map(|t| format!("i={}: {}", t.i, t.value))
                .collect();
            println!("  {mode:?} partial sums: {}", values.join(", "));
        }
    }
    Ok(())
}
