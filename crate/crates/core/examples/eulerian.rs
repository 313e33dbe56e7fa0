//! The unit cube is the order polytope of an antichain; its h*-polynomial is
//! the Eulerian row, and its open numerator splits with a = 0.

use hstar_decomp::decomp::conjectured_split;
use hstar_decomp::ehrhart::open_numerator;
use hstar_decomp::Poset;

fn main() -> hstar_decomp::Result<()> {
    for d in 1..=7 {
        let h = Poset::antichain(d).descent_h_star();
        let p = open_numerator(&h, d)?.div_z().expect("open numerator vanishes at 0");
        let split = conjectured_split(&p, d)?;
        let row: Vec<String> = h.coeffs().iter().map(ToString::to_string).collect();
        println!("d = {d}: A(d, k) = [{}], a = {}, b = h*: {}", row.join(", "), split.a, split.b == h);
    }
    Ok(())
}
