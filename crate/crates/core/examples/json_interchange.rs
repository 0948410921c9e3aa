//! JSON forms of polynomials and Grothendieck-group classes.
//!
//! cargo run --example json_interchange

use std::sync::Arc;

use schubert_kl::kgroup::{localcoh_divisor_class_char0, simple_in_dualverma_charp};
use schubert_kl::{KGClass, KlTable, Polynomial, WeylGroup};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = Arc::new(WeylGroup::new("A3".parse()?)?);
    let kl = KlTable::new(g.clone());
    let w = g.parse_word("1 2 3 2 1")?;

    let p = kl.kl(g.identity(), w)?;
    let text = serde_json::to_string(&p)?;
    println!("P(e, w) = {p} -> {text}");
    assert_eq!(serde_json::from_str::<Polynomial>(&text)?, p);

    for class in [
        localcoh_divisor_class_char0(&kl, w)?,
        simple_in_dualverma_charp(&g, g.parse_word("1 3")?),
    ] {
        let json = class.to_json(&g);
        println!(
            "{}\n{}\n",
            class.render(&g),
            serde_json::to_string_pretty(&json)?
        );
        assert_eq!(KGClass::from_json(&g, &json.to_string())?, class);
    }
    Ok(())
}
