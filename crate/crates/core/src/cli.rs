//! Command-line front end. Every command renders its full output into a
//! string before anything is printed, so a failing command prints nothing
//! to standard out.

use std::fmt::Write as _;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::cartan::CartanType;
use crate::coxeter::{Element, ParabolicSubset, Side, WeylGroup, DEFAULT_ENUMERATION_CAP};
use crate::demo::run_paper_demo;
use crate::error::{Error, Result};
use crate::kgroup::{
    dualverma_in_simple, gc_complex_terms, localcoh_class, simple_in_dualverma,
    verma_identity_check, KGClass, Regime,
};
use crate::kl::KlTable;
use crate::poly::Polynomial;
use crate::schubert::{one_line_permutation, schubert_datum, SchubertReport};

/// Environment variable overriding the enumeration cap (`none` disables it).
pub const ENUM_CAP_ENV: &str = "SCHUBERT_KL_ENUM_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Markdown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Object {
    /// The simple module L(w) in the dual Verma basis.
    Simple,
    /// The dual Verma module M(w) in the simple basis.
    Dualverma,
    /// Local cohomology with support X(w) in the simple basis.
    Localcoh,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DemoName {
    Paper,
}

#[derive(Debug, Parser)]
#[command(
    name = "schubert-kl",
    version,
    about = "Weyl groups, Kazhdan-Lusztig polynomials and D-module decompositions on flag varieties",
    after_help = "Elements are words of 1-based generator indices, e.g. \"1 2 3 2 1\"; \"\" or \"e\" is the identity."
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Characteristic of the base field: 0 or a prime (any prime behaves alike).
    #[arg(long = "char", global = true, default_value = "0")]
    pub characteristic: String,

    /// Allow groups of any order.
    #[arg(long, global = true)]
    pub no_enum_cap: bool,

    /// Largest group order to enumerate, or `none`.
    #[arg(long, global = true, env = ENUM_CAP_ENV)]
    pub enum_cap: Option<String>,

    /// Run a built-in reproduction instead of a subcommand.
    #[arg(long, value_enum)]
    pub demo: Option<DemoName>,

    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Order, longest length and generator count.
    Group { cartan: String },
    /// Every element with its length and reduced word.
    Elements { cartan: String },
    /// Kazhdan-Lusztig polynomial P_{v,w}.
    Kl {
        cartan: String,
        v: String,
        w: String,
    },
    /// Top coefficient mu(v, w).
    Mu {
        cartan: String,
        v: String,
        w: String,
    },
    /// Inverse Kazhdan-Lusztig polynomial Q_{v,w}.
    InverseKl {
        cartan: String,
        v: String,
        w: String,
    },
    /// R-polynomial R_{v,w}.
    RPoly {
        cartan: String,
        v: String,
        w: String,
    },
    /// Bruhat comparison v <= w.
    Bruhat {
        cartan: String,
        v: String,
        w: String,
    },
    /// The Bruhat interval [v, w].
    Interval {
        cartan: String,
        v: String,
        w: String,
    },
    /// Left and right descent sets.
    Descents { cartan: String, w: String },
    /// Product a * b.
    Multiply {
        cartan: String,
        a: String,
        b: String,
    },
    /// Inverse of an element.
    Inverse { cartan: String, w: String },
    /// Shortest element of the coset w W_J.
    Coset {
        cartan: String,
        w: String,
        j: String,
    },
    /// Grothendieck-group decomposition of L(w), M(w) or local cohomology.
    Decompose {
        cartan: String,
        w: String,
        #[arg(long, value_enum)]
        object: Object,
    },
    /// Dimension, codimension and singular locus of X(w).
    Smoothness { cartan: String, w: String },
    /// Terms of the Grothendieck-Cousin complex for X(w).
    Gc { cartan: String, w: String },
    /// Verma's alternating interval identity for x <= y.
    Verma {
        cartan: String,
        x: String,
        y: String,
    },
    /// Built-in reproduction report.
    Demo { name: DemoName },
}

/// Rendered output and whether the command's checks succeeded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub success: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output {
            text,
            success: true,
        }
    }
}

struct Session {
    format: Format,
    regime: Regime,
    cap: Option<u64>,
}

impl Session {
    fn table(&self, cartan: &str) -> Result<KlTable> {
        let cartan: CartanType = cartan.parse()?;
        Ok(KlTable::new(Arc::new(WeylGroup::with_cap(
            cartan, self.cap,
        )?)))
    }
}

fn resolve_cap(cli: &Cli) -> Result<Option<u64>> {
    if cli.no_enum_cap {
        return Ok(None);
    }
    match cli.enum_cap.as_deref().map(str::trim) {
        None => Ok(Some(DEFAULT_ENUMERATION_CAP)),
        Some("none") | Some("off") => Ok(None),
        Some(s) => s.parse().map(Some).map_err(|_| Error::EnumerationCap {
            cartan: "(any)".into(),
            order: format!("cap '{s}' is not a number"),
            cap: DEFAULT_ENUMERATION_CAP,
        }),
    }
}

pub fn run(cli: &Cli) -> Result<Output> {
    let session = Session {
        format: cli.format,
        regime: Regime::from_characteristic(&cli.characteristic)?,
        cap: resolve_cap(cli)?,
    };
    let command = match (&cli.command, cli.demo) {
        (Some(c), _) => c,
        (None, Some(name)) => return demo(&session, name),
        (None, None) => {
            return Err(Error::Usage(
                "no command given (try --help or --demo paper)".into(),
            ))
        }
    };
    let f = session.format;
    match command {
        Command::Group { cartan } => {
            let kl = session.table(cartan)?;
            let g = kl.group();
            let longest = g.length(g.longest_element());
            Ok(Output::ok(match f {
                Format::Text => format!(
                    "{}: order {}, generators {}, longest element length {}, positive roots {}",
                    g.cartan(),
                    g.order(),
                    g.rank(),
                    longest,
                    g.positive_roots().len()
                ),
                Format::Json => json!({
                    "type": g.cartan().to_string(),
                    "order": g.order(),
                    "generators": g.rank(),
                    "longest_length": longest,
                    "positive_roots": g.positive_roots().len(),
                })
                .to_string(),
                Format::Markdown => format!(
                    "| type | order | generators | longest length | positive roots |\n|---|---|---|---|---|\n| {} | {} | {} | {} | {} |",
                    g.cartan(),
                    g.order(),
                    g.rank(),
                    longest,
                    g.positive_roots().len()
                ),
            }))
        }
        Command::Elements { cartan } => {
            let kl = session.table(cartan)?;
            let g = kl.group();
            let rows: Vec<(usize, String, Option<Vec<usize>>)> = g
                .elements()
                .map(|e| {
                    (
                        g.length(e),
                        g.format_word(e),
                        one_line_permutation(g, e).ok(),
                    )
                })
                .collect();
            Ok(Output::ok(match f {
                Format::Json => {
                    let items: Vec<_> = g
                        .elements()
                        .zip(&rows)
                        .map(|(e, (len, _, perm))| json!({"word": g.word(e), "length": len, "one_line": perm}))
                        .collect();
                    serde_json::Value::from(items).to_string()
                }
                Format::Text | Format::Markdown => {
                    let mut out = String::new();
                    if f == Format::Markdown {
                        out.push_str("| length | word | one-line |\n|---|---|---|\n");
                    }
                    for (len, word, perm) in &rows {
                        let perm = perm.as_ref().map(|p| concat(p)).unwrap_or_default();
                        if f == Format::Markdown {
                            let _ = writeln!(out, "| {len} | {word} | {perm} |");
                        } else {
                            let _ = writeln!(out, "{len}\t{word}\t{perm}");
                        }
                    }
                    out.trim_end().to_string()
                }
            }))
        }
        Command::Kl { cartan, v, w } => {
            poly_command(&session, cartan, v, w, "P", |kl, v, w| kl.kl(v, w))
        }
        Command::InverseKl { cartan, v, w } => {
            poly_command(&session, cartan, v, w, "Q", |kl, v, w| kl.inverse_kl(v, w))
        }
        Command::RPoly { cartan, v, w } => poly_command(&session, cartan, v, w, "R", |kl, v, w| {
            kl.r_polynomial(v, w)
        }),
        Command::Mu { cartan, v, w } => {
            let kl = session.table(cartan)?;
            let (ve, we) = (kl.group().parse_word(v)?, kl.group().parse_word(w)?);
            let mu = kl.mu(ve, we)?;
            Ok(Output::ok(scalar(f, "mu", mu.to_string(), json!(mu))))
        }
        Command::Bruhat { cartan, v, w } => {
            let kl = session.table(cartan)?;
            let g = kl.group();
            let leq = g.bruhat_leq(g.parse_word(v)?, g.parse_word(w)?)?;
            Ok(Output::ok(scalar(f, "v <= w", leq.to_string(), json!(leq))))
        }
        Command::Interval { cartan, v, w } => {
            let kl = session.table(cartan)?;
            let g = kl.group();
            let interval = g.interval(g.parse_word(v)?, g.parse_word(w)?)?;
            Ok(Output::ok(element_list(f, g, &interval)))
        }
        Command::Descents { cartan, w } => {
            let kl = session.table(cartan)?;
            let g = kl.group();
            let e = g.parse_word(w)?;
            let (left, right) = (g.descents(e, Side::Left), g.descents(e, Side::Right));
            Ok(Output::ok(match f {
                Format::Json => json!({"left": left, "right": right}).to_string(),
                Format::Text => format!(
                    "left: {{{}}}\nright: {{{}}}",
                    join(&left, ", "),
                    join(&right, ", ")
                ),
                Format::Markdown => format!(
                    "| side | descents |\n|---|---|\n| left | {} |\n| right | {} |",
                    join(&left, ", "),
                    join(&right, ", ")
                ),
            }))
        }
        Command::Multiply { cartan, a, b } => {
            let kl = session.table(cartan)?;
            let g = kl.group();
            let p = g.multiply(g.parse_word(a)?, g.parse_word(b)?)?;
            Ok(Output::ok(element_list(f, g, &[p])))
        }
        Command::Inverse { cartan, w } => {
            let kl = session.table(cartan)?;
            let g = kl.group();
            let inv = g.inverse(g.parse_word(w)?);
            Ok(Output::ok(element_list(f, g, &[inv])))
        }
        Command::Coset { cartan, w, j } => {
            let kl = session.table(cartan)?;
            let g = kl.group();
            let subset = ParabolicSubset::new(g, crate::coxeter::parse_word(j)?)?;
            let rep = g.min_coset_rep(g.parse_word(w)?, &subset);
            Ok(Output::ok(element_list(f, g, &[rep])))
        }
        Command::Decompose { cartan, w, object } => {
            let kl = session.table(cartan)?;
            let e = kl.group().parse_word(w)?;
            let class = match object {
                Object::Simple => simple_in_dualverma(&kl, e, session.regime),
                Object::Dualverma => dualverma_in_simple(&kl, e, session.regime),
                Object::Localcoh => localcoh_class(&kl, e, session.regime)?,
            };
            Ok(Output::ok(render_class(f, kl.group(), &class)))
        }
        Command::Smoothness { cartan, w } => {
            let kl = session.table(cartan)?;
            let g = kl.group();
            let datum = schubert_datum(&kl, g.parse_word(w)?);
            let report = SchubertReport::new(g, &datum);
            Ok(Output::ok(render_smoothness(f, g, &report)))
        }
        Command::Gc { cartan, w } => {
            let kl = session.table(cartan)?;
            let g = kl.group();
            let degrees = gc_complex_terms(g, g.parse_word(w)?);
            Ok(Output::ok(render_gc(f, g, &degrees)))
        }
        Command::Verma { cartan, x, y } => {
            let kl = session.table(cartan)?;
            let g = kl.group();
            let holds = verma_identity_check(g, g.parse_word(x)?, g.parse_word(y)?)?;
            Ok(Output::ok(scalar(
                f,
                "Verma identity",
                holds.to_string(),
                json!(holds),
            )))
        }
        Command::Demo { name } => demo(&session, *name),
    }
}

fn demo(session: &Session, _name: DemoName) -> Result<Output> {
    let report = run_paper_demo()?;
    let text = match session.format {
        Format::Text => report.to_string(),
        Format::Json => serde_json::to_string_pretty(&report).expect("report serializes"),
        Format::Markdown => {
            let mut out = String::from("| check | result | detail |\n|---|---|---|\n");
            for c in &report.checks {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(out, "| {} | {tag} | {} |", c.name, c.detail);
            }
            out.trim_end().to_string()
        }
    };
    Ok(Output {
        text,
        success: report.all_passed(),
    })
}

fn poly_command(
    session: &Session,
    cartan: &str,
    v: &str,
    w: &str,
    symbol: &str,
    compute: impl Fn(&KlTable, Element, Element) -> Result<Polynomial>,
) -> Result<Output> {
    let kl = session.table(cartan)?;
    let g = kl.group();
    let (ve, we) = (g.parse_word(v)?, g.parse_word(w)?);
    let p = compute(&kl, ve, we)?;
    Ok(Output::ok(match session.format {
        Format::Text => p.to_string(),
        Format::Json => serde_json::to_string(&p).expect("polynomial serializes"),
        Format::Markdown => format!(
            "| v | w | {symbol}_v,w |\n|---|---|---|\n| {} | {} | {p} |",
            g.format_word(ve),
            g.format_word(we)
        ),
    }))
}

fn scalar(f: Format, label: &str, text: String, value: serde_json::Value) -> String {
    match f {
        Format::Text => text,
        Format::Json => value.to_string(),
        Format::Markdown => format!("| {label} |\n|---|\n| {text} |"),
    }
}

fn element_list(f: Format, g: &WeylGroup, elements: &[Element]) -> String {
    match f {
        Format::Json => {
            let words: Vec<_> = elements.iter().map(|&e| g.word(e)).collect();
            json!(words).to_string()
        }
        Format::Text => elements
            .iter()
            .map(|&e| format!("[{}]", g.format_word(e)))
            .collect::<Vec<_>>()
            .join(" "),
        Format::Markdown => {
            let mut out = String::from("| word | length |\n|---|---|\n");
            for &e in elements {
                let _ = writeln!(out, "| {} | {} |", g.format_word(e), g.length(e));
            }
            out.trim_end().to_string()
        }
    }
}

fn render_class(f: Format, g: &WeylGroup, class: &KGClass) -> String {
    match f {
        Format::Text => class.render(g),
        Format::Json => class.to_json(g).to_string(),
        Format::Markdown => {
            let letter = match class.basis() {
                crate::kgroup::Basis::M => "M",
                crate::kgroup::Basis::L => "L",
            };
            let mut out = format!(
                "| class (char {}) | coefficient |\n|---|---|\n",
                class.regime()
            );
            for (e, c) in class.display_terms(g) {
                let _ = writeln!(out, "| [{letter}({})] | {c} |", g.format_word(e));
            }
            out.trim_end().to_string()
        }
    }
}

fn render_smoothness(f: Format, g: &WeylGroup, r: &SchubertReport) -> String {
    let word = g.format_word(g.from_word(&r.word).expect("report word"));
    let maximals: Vec<String> = r
        .singular_locus_maximals
        .iter()
        .map(|v| format!("[{}]", word_text(v)))
        .collect();
    let verdict = if r.rationally_smooth {
        "rationally smooth".to_string()
    } else {
        format!(
            "rationally singular; singular locus maximals: {}",
            maximals.join(" ")
        )
    };
    let type_a = match (&r.one_line, r.smooth_by_pattern_avoidance) {
        (Some(perm), Some(smooth)) => Some(format!(
            "one-line {}; {} by 3412/4231 pattern avoidance (type A: smooth iff rationally smooth)",
            concat(perm),
            if smooth { "smooth" } else { "singular" }
        )),
        _ => None,
    };
    match f {
        Format::Json => serde_json::to_string(r).expect("report serializes"),
        Format::Text => {
            let mut out = format!("X({word}): dim {}, codim {}; {verdict}", r.dim, r.codim);
            if let Some(extra) = type_a {
                let _ = write!(out, "\n{extra}");
            }
            out
        }
        Format::Markdown => {
            let mut out = format!(
                "| w | dim | codim | rationally smooth | singular locus maximals |\n|---|---|---|---|---|\n| {word} | {} | {} | {} | {} |",
                r.dim,
                r.codim,
                r.rationally_smooth,
                maximals.join(" ")
            );
            if let Some(extra) = type_a {
                let _ = write!(out, "\n\n{extra}");
            }
            out
        }
    }
}

fn render_gc(f: Format, g: &WeylGroup, degrees: &[Vec<Element>]) -> String {
    let cells = |ys: &[Element]| {
        ys.iter()
            .map(|&y| format!("[{}]", g.format_word(y)))
            .collect::<Vec<_>>()
            .join(", ")
    };
    match f {
        Format::Json => {
            let items: Vec<_> = degrees
                .iter()
                .enumerate()
                .map(|(i, ys)| {
                    let words: Vec<_> = ys.iter().map(|&y| g.word(y)).collect();
                    json!({"degree": i, "terms": words})
                })
                .collect();
            serde_json::Value::from(items).to_string()
        }
        Format::Text => degrees
            .iter()
            .enumerate()
            .map(|(i, ys)| format!("{i}: {{{}}}", cells(ys)))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Markdown => {
            let mut out = String::from("| degree | terms M(y) |\n|---|---|\n");
            for (i, ys) in degrees.iter().enumerate() {
                let _ = writeln!(out, "| {i} | {} |", cells(ys));
            }
            out.trim_end().to_string()
        }
    }
}

fn word_text(word: &[usize]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        join(word, " ")
    }
}

fn join(items: &[usize], sep: &str) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn concat(perm: &[usize]) -> String {
    let sep = if perm.iter().any(|&x| x > 9) { " " } else { "" };
    join(perm, sep)
}
