//! Builds every small Weyl group, then shows lengths, descents and
//! parabolic coset representatives.
//!
//! cargo run --example weyl_groups

use schubert_kl::{ParabolicSubset, Side, WeylGroup};

fn main() -> schubert_kl::Result<()> {
    println!(
        "{:<4} {:>8} {:>8} {:>14}",
        "type", "order", "l(w0)", "positive roots"
    );
    for name in [
        "A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4", "E6",
    ] {
        let g = WeylGroup::new(name.parse()?)?;
        println!(
            "{:<4} {:>8} {:>8} {:>14}",
            name,
            g.order(),
            g.length(g.longest_element()),
            g.positive_roots().len()
        );
    }

    let g = WeylGroup::new("A3".parse()?)?;
    let w = g.parse_word("2 1 2 3")?;
    println!("\nin A3, 2 1 2 3 normalizes to [{}]", g.format_word(w));
    println!("  length {}", g.length(w));
    println!("  left descents {:?}", g.descents(w, Side::Left));
    println!("  right descents {:?}", g.descents(w, Side::Right));
    println!("  inverse [{}]", g.format_word(g.inverse(w)));

    let j = ParabolicSubset::new(&g, [2, 3])?;
    println!("\nminimal representatives of w W_J for J = {{2, 3}}:");
    let mut reps: Vec<_> = g.elements().map(|x| g.min_coset_rep(x, &j)).collect();
    reps.sort();
    reps.dedup();
    for r in reps {
        println!("  [{}]", g.format_word(r));
    }
    Ok(())
}
