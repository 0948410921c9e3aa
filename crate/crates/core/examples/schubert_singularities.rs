//! Scans a group for rationally singular Schubert varieties and prints the
//! maximal components of each singular locus. In type A the verdict is
//! cross-checked against 3412/4231 pattern avoidance.
//!
//! cargo run --example schubert_singularities -- A4

use std::sync::Arc;

use schubert_kl::schubert::{
    one_line_permutation, pattern_avoidance_smooth_type_a, schubert_datum,
};
use schubert_kl::{KlTable, WeylGroup};

fn main() -> schubert_kl::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "A3".to_string());
    let g = Arc::new(WeylGroup::new(name.parse()?)?);
    let kl = KlTable::new(g.clone());

    let mut singular = 0;
    for w in g.elements() {
        let d = schubert_datum(&kl, w);
        if let Ok(smooth) = pattern_avoidance_smooth_type_a(&g, w) {
            assert_eq!(smooth, d.rationally_smooth);
        }
        if d.rationally_smooth {
            continue;
        }
        singular += 1;
        let locus: Vec<String> = d
            .singular_locus_maximals
            .iter()
            .map(|&v| format!("[{}]", g.format_word(v)))
            .collect();
        let perm = one_line_permutation(&g, w)
            .map(|p| format!(" one-line {p:?}"))
            .unwrap_or_default();
        println!(
            "X({}) dim {} codim {}{perm}: singular along {}",
            g.format_word(w),
            d.dim,
            d.codim,
            locus.join(" ")
        );
    }
    println!(
        "\n{singular} of {} Schubert varieties in {name} are rationally singular",
        g.order()
    );
    Ok(())
}
