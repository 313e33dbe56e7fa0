//! Ehrhart polynomial, h*-polynomial and reciprocity for a few lattice polytopes.

use hstar_decomp::ehrhart::open_numerator;
use hstar_decomp::polynomial::expand_series;
use hstar_decomp::{Budget, LatticePolytope};

fn main() -> hstar_decomp::Result<()> {
    let budget = Budget::default();
    let polytopes = [
        ("triangle with legs 2", LatticePolytope::simplex(vec![vec![0, 0], vec![2, 0], vec![0, 2]])?),
        ("2 * unit 3-simplex", LatticePolytope::dilated_standard_simplex(3, 2)?),
        ("unit 3-cube", LatticePolytope::dilated_cube(3, 1)?),
        ("Reeve tetrahedron, r = 3", LatticePolytope::simplex(vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 3]])?),
    ];
    for (name, p) in &polytopes {
        let d = p.dim();
        let ehrhart = p.ehrhart_polynomial(&budget)?;
        let h = p.h_star(&budget)?;
        let h_open = open_numerator(&h, d)?;
        println!("{name}");
        println!("  L(n)   = {ehrhart}");
        println!("  h*     = {h}");
        println!("  h_open = {h_open}");
        let predicted = expand_series(&h_open, d, 4);
        let counted: Vec<u64> = (0..=4).map(|n| p.count_points(n, true, &budget)).collect::<Result<_, _>>()?;
        println!("  interior points of nP, n = 0..4: {counted:?} (series: {predicted:?})");
    }
    Ok(())
}
