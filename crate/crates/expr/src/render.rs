//! Deterministic text rendering that the parser reads back.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::expr::Expr;
use crate::poly::{Gen, Mono, Poly, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Plain,
    Json,
}

pub fn render_expr(e: &Expr, format: RenderFormat) -> String {
    match format {
        RenderFormat::Plain => render_plain(e),
        RenderFormat::Json => render_json(e),
    }
}

/// The plain rendering as a JSON string literal.
pub fn render_json(e: &Expr) -> String {
    serde_json::to_string(&render_plain(e)).expect("strings serialize")
}

fn gen_text(g: &Gen) -> String {
    match g {
        Gen::Sym(s) => s.to_string(),
        Gen::Atom(a) => format!("{}({})", a.func.name(), render_plain(&a.arg)),
    }
}

/// Display rank: symbols alphabetically, then atoms by their text.
fn gen_key(g: &Gen) -> (bool, String) {
    (matches!(g, Gen::Atom(_)), gen_text(g))
}

struct DisplayTerm {
    degree: u32,
    exps: Vec<u32>,
    factors: Vec<(String, u32)>,
    coeff: BigInt,
}

fn display_terms(terms: Vec<(Mono, BigInt)>) -> Vec<DisplayTerm> {
    let mut keys: Vec<(bool, String)> = Vec::new();
    let mut gens: Vec<Gen> = Vec::new();
    for (m, _) in &terms {
        for (g, _) in m.factors() {
            if !gens.contains(g) {
                keys.push(gen_key(g));
                gens.push(g.clone());
            }
        }
    }
    let mut order: Vec<usize> = (0..gens.len()).collect();
    order.sort_by(|a, b| keys[*a].cmp(&keys[*b]));
    let mut out: Vec<DisplayTerm> = terms
        .into_iter()
        .map(|(m, coeff)| {
            let exps: Vec<u32> = order.iter().map(|&i| m.exponent(&gens[i])).collect();
            let factors = order
                .iter()
                .zip(&exps)
                .filter(|(_, e)| **e > 0)
                .map(|(&i, e)| (keys[i].1.clone(), *e))
                .collect();
            DisplayTerm {
                degree: m.degree(),
                exps,
                factors,
                coeff,
            }
        })
        .collect();
    out.sort_by(|a, b| match b.degree.cmp(&a.degree) {
        Ordering::Equal => b.exps.cmp(&a.exps),
        o => o,
    });
    out
}

fn term_text(t: &DisplayTerm) -> String {
    let body = t
        .factors
        .iter()
        .map(|(s, e)| if *e == 1 { s.clone() } else { format!("{s}^{e}") })
        .collect::<Vec<_>>()
        .join("*");
    if body.is_empty() {
        return t.coeff.to_string();
    }
    if t.coeff.is_one() {
        body
    } else if (-t.coeff.clone()).is_one() {
        format!("-{body}")
    } else {
        format!("{}*{body}", t.coeff)
    }
}

fn sum_text(terms: &[DisplayTerm]) -> String {
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        let s = term_text(t);
        if i == 0 {
            out.push_str(&s);
        } else if let Some(rest) = s.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&s);
        }
    }
    out
}

fn scaled_integer_terms(p: &Poly, k: &BigInt, content: &Rat) -> Vec<(Mono, BigInt)> {
    p.terms()
        .map(|(m, c)| {
            let v = c / content * Rat::from_integer(k.clone());
            debug_assert!(v.is_integer());
            (m.clone(), v.to_integer())
        })
        .collect()
}

/// Plain rendering: `num` or `num/den` with integer coefficients.
pub fn render_plain(e: &Expr) -> String {
    let num = e.numerator();
    let den = e.denominator();
    if num.is_zero() {
        return "0".to_string();
    }
    let a = num.rational_content();
    let b = den.rational_content();
    let ratio = &a / &b;
    let (p, q) = (ratio.numer().clone(), ratio.denom().clone());
    let top = display_terms(scaled_integer_terms(num, &p, &a));
    let bottom = display_terms(scaled_integer_terms(den, &q, &b));
    let top_text = sum_text(&top);
    if bottom.len() == 1 && bottom[0].factors.is_empty() && bottom[0].coeff.is_one() {
        return top_text;
    }
    let top_text = if top.len() > 1 {
        format!("({top_text})")
    } else {
        top_text
    };
    let simple_bottom = bottom.len() == 1
        && !bottom[0].coeff.is_negative()
        && (bottom[0].factors.is_empty()
            || (bottom[0].coeff.is_one() && bottom[0].factors.len() == 1));
    let bottom_text = sum_text(&bottom);
    if simple_bottom {
        format!("{top_text}/{bottom_text}")
    } else {
        format!("{top_text}/({bottom_text})")
    }
}
