//! `h_Pi = a_Pi + z b_Pi` for every poset read from the command line, or for
//! all labeled posets on four elements.
//!
//!     cargo run --example order_decomposition -- examples/data/chain2.poset

use hstar_decomp::decomp::order_decomposition;
use hstar_decomp::harness::enumerate_labeled_posets;
use hstar_decomp::Poset;

fn main() -> hstar_decomp::Result<()> {
    let files: Vec<String> = std::env::args().skip(1).collect();
    if files.is_empty() {
        for p in enumerate_labeled_posets(4, 4)? {
            let dec = order_decomposition(&p.descent_h_star(), 4)?;
            assert!(dec.signs_hold() && dec.is_symmetric());
        }
        println!("219 posets on 4 elements: all splits have -a_Pi >= 0 and b_Pi >= 0");
        return Ok(());
    }
    for f in files {
        let p = Poset::parse(&std::fs::read_to_string(&f)?)?;
        let h = p.descent_h_star();
        let dec = order_decomposition(&h, p.len())?;
        println!("{f}: h* = {h}");
        println!("  h_Pi = {}\n  a_Pi = {}\n  b_Pi = {}", dec.numerator(), dec.a, dec.b);
        println!("  signs hold: {}", dec.signs_hold());
    }
    Ok(())
}
