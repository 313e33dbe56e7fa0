//! Symmetric decompositions of Ehrhart numerators and of open-polytope numerators.

use hstar_decomp::decomp::{open_decomposition, stapledon_pair};
use hstar_decomp::{Budget, IntPolynomial, LatticePolytope};

fn main() -> hstar_decomp::Result<()> {
    let triangle = LatticePolytope::simplex(vec![vec![0, 0], vec![2, 0], vec![0, 2]])?;
    let h = triangle.h_star(&Budget::default())?;
    let pair = stapledon_pair(&h, 2, true)?;
    println!("h* = {h}, d = 2, s = {}, l = {}", pair.s, pair.l);
    println!("  (1 + ... + z^{}) h* = a* + z^{} b*", pair.l - 1, pair.l);
    println!("  a* = {}\n  b* = {}", pair.a, pair.b);

    let open = open_decomposition(&h, 2)?;
    println!("  h_P = {} = a_P - b_P", open.numerator());
    println!("  a_P = {}\n  b_P = {}", open.a, open.b);

    // a polynomial that is not an h*-polynomial is reported, not accepted
    let bogus = IntPolynomial::from_i64s(&[1, -1]);
    match stapledon_pair(&bogus, 1, true) {
        Ok(_) => println!("unexpectedly nonnegative"),
        Err(e) => println!("{bogus}: {e}"),
    }
    Ok(())
}
