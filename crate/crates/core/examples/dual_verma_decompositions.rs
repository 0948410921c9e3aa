//! Composition multiplicities [M(w) : L(y)] in both characteristics, side
//! by side. In characteristic p every dual Verma module is multiplicity
//! free; in characteristic zero the multiplicities are Q_{y,w}(1).
//!
//! cargo run --example dual_verma_decompositions -- A3

use std::sync::Arc;

use schubert_kl::kgroup::{dualverma_in_simple_char0, dualverma_in_simple_charp};
use schubert_kl::{KlTable, WeylGroup};

fn main() -> schubert_kl::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "A3".to_string());
    let g = Arc::new(WeylGroup::new(name.parse()?)?);
    let kl = KlTable::new(g.clone());

    for w in g.elements() {
        let p = dualverma_in_simple_charp(&g, w);
        let zero = dualverma_in_simple_char0(&kl, w);
        assert!(p.terms().all(|(_, c)| c == 1));
        if !p.terms().eq(zero.terms()) {
            println!("[M({})]", g.format_word(w));
            println!("  char p: {}", p.render(&g));
            println!("  char 0: {}", zero.render(&g));
        }
    }
    println!("\nall other dual Verma modules decompose identically in both characteristics");
    Ok(())
}
