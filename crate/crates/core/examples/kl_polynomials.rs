//! Nontrivial Kazhdan-Lusztig polynomials of a group, with mu-coefficients,
//! R-polynomials and the inverse family.
//!
//! cargo run --example kl_polynomials -- B3

use std::sync::Arc;

use schubert_kl::{KlTable, WeylGroup};

fn main() -> schubert_kl::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "A3".to_string());
    let g = Arc::new(WeylGroup::new(name.parse()?)?);
    let kl = KlTable::new(g.clone());

    println!("nontrivial P_v,w in {name}:");
    let mut count = 0;
    for w in g.elements() {
        for (v, p) in kl.kl_column(w) {
            if !p.is_one() {
                count += 1;
                let mu = if v != w { kl.mu(v, w)? } else { 0 };
                println!(
                    "  P([{}], [{}]) = {p}   mu = {mu}",
                    g.format_word(v),
                    g.format_word(w)
                );
            }
        }
    }
    println!("{count} pairs with P != 1");

    let e = g.identity();
    let w0 = g.longest_element();
    println!("\nR(e, s1) = {}", kl.r_polynomial(e, g.generator(1)?)?);
    println!("R(e, w0) = {}", kl.r_polynomial(e, w0)?);
    println!("Q(e, w0) = {}", kl.inverse_kl(e, w0)?);
    Ok(())
}
