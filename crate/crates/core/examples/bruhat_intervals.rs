//! Bruhat intervals and the alternating-sign identity on them.
//!
//! cargo run --example bruhat_intervals

use schubert_kl::kgroup::verma_identity_check;
use schubert_kl::WeylGroup;

fn main() -> schubert_kl::Result<()> {
    let g = WeylGroup::new("A3".parse()?)?;
    let top = g.parse_word("1 2 3 2 1")?;

    println!("lower interval of [1 2 3 2 1] by length:");
    let lower = g.lower_set(top);
    for len in 0..=g.length(top) {
        let layer: Vec<String> = lower
            .iter()
            .filter(|&&z| g.length(z) == len)
            .map(|&z| format!("[{}]", g.format_word(z)))
            .collect();
        println!("  {len}: {}", layer.join(" "));
    }

    println!("\ncover relations inside [e, 1 3]:");
    let interval = g.interval(g.identity(), g.parse_word("1 3")?)?;
    for &a in &interval {
        for &b in &interval {
            if g.length(b) == g.length(a) + 1 && g.bruhat_leq(a, b)? {
                println!("  [{}] < [{}]", g.format_word(a), g.format_word(b));
            }
        }
    }

    let mut pairs = 0;
    for x in g.elements() {
        for y in g.elements() {
            if g.bruhat_leq(x, y)? {
                assert!(verma_identity_check(&g, x, y)?);
                pairs += 1;
            }
        }
    }
    println!("\nalternating interval sums vanish off the diagonal on all {pairs} comparable pairs");
    Ok(())
}
