//! For the Schubert divisor X(s1 s2 s3 s2 s1) in the flag variety of SL4:
//! its KL column, the simple module L(w) in the dual Verma basis, and the
//! local cohomology module H^1 in the simple basis in characteristic zero,
//! which splits into two simple constituents. In positive characteristic
//! the same local cohomology module is simple.
//!
//! cargo run --example sl4_nonsimplicity

use std::sync::Arc;

use schubert_kl::kgroup::{
    localcoh_class, localcoh_divisor_class_char0, simple_in_dualverma_char0,
};
use schubert_kl::{KlTable, Regime, WeylGroup};

fn main() -> schubert_kl::Result<()> {
    let g = Arc::new(WeylGroup::new("A3".parse()?)?);
    let kl = KlTable::new(g.clone());
    let w = g.parse_word("1 2 3 2 1")?;

    println!(
        "X(w), w = [{}], codimension {}",
        g.format_word(w),
        6 - g.length(w)
    );
    for (v, p) in kl.kl_column(w) {
        println!("  P([{}], w) = {p}", g.format_word(v));
    }

    println!(
        "\n[L(w)] in char 0 = {}",
        simple_in_dualverma_char0(&kl, w).render(&g)
    );
    println!(
        "\n[H^1_X(w)(O_X)] in char 0 = {}",
        localcoh_divisor_class_char0(&kl, w)?.render(&g)
    );
    println!(
        "[H^1_X(w)(O_X)] in char p = {}",
        localcoh_class(&kl, w, Regime::CharP)?.render(&g)
    );
    Ok(())
}
