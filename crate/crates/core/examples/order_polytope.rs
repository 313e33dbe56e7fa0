//! Three independent computations of the h*-polynomial of an order polytope.

use hstar_decomp::polynomial::f_to_h;
use hstar_decomp::{Budget, LatticePolytope, Poset};

fn main() -> hstar_decomp::Result<()> {
    let budget = Budget::default();
    // the "N" poset: 1 < 3, 2 < 3, 2 < 4
    let n_poset = Poset::new(4, &[(1, 3), (2, 3), (2, 4)])?;
    let posets = [("chain of 3", Poset::chain(3)), ("antichain of 3", Poset::antichain(3)), ("N", n_poset)];
    for (name, p) in posets {
        let d = p.len();
        let descents = p.descent_h_star();
        let counts = LatticePolytope::order(p.clone()).h_star(&budget)?;
        let chains = f_to_h(&p.ideal_chain_f_vector(&budget)?, d)?;
        println!("{name}: {} linear extensions", p.linear_extensions().count());
        println!("  order polynomial  {}", p.order_polynomial(false, &budget)?);
        println!("  h* from descents  {descents}");
        println!("  h* from counts    {counts}");
        println!("  h* from chains    {chains}");
        assert!(descents == counts && counts == chains);
    }
    Ok(())
}
