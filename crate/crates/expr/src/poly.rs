//! Sparse multivariate polynomials over Q.
//!
//! Generators are either plain symbols (coordinates and parameters) or
//! transcendental atoms wrapping a sub-expression. Monomials are stored with
//! their generators in descending order and compared lexicographically, which
//! makes the last key of the term map the leading term.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::expr::Expr;

pub type Rat = BigRational;

/// Transcendental functions admitted as opaque generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Func {
    Exp,
    Sinh,
    Cosh,
    Log,
}

impl Func {
    pub fn name(self) -> &'static str {
        match self {
            Func::Exp => "exp",
            Func::Sinh => "sinh",
            Func::Cosh => "cosh",
            Func::Log => "log",
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        match name {
            "exp" => Some(Func::Exp),
            "sinh" => Some(Func::Sinh),
            "cosh" => Some(Func::Cosh),
            "log" => Some(Func::Log),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Atom {
    pub func: Func,
    pub arg: Expr,
}

/// A polynomial generator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Gen {
    Sym(Arc<str>),
    Atom(Arc<Atom>),
}

impl Gen {
    pub fn sym(name: &str) -> Gen {
        Gen::Sym(Arc::from(name))
    }

    pub fn atom(func: Func, arg: Expr) -> Gen {
        Gen::Atom(Arc::new(Atom { func, arg }))
    }

    pub fn as_atom(&self) -> Option<&Atom> {
        match self {
            Gen::Atom(a) => Some(a),
            Gen::Sym(_) => None,
        }
    }

    pub fn is_cosh(&self) -> bool {
        matches!(self, Gen::Atom(a) if a.func == Func::Cosh)
    }
}

/// Power product; generators strictly descending, exponents nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Mono(Vec<(Gen, u32)>);

impl Mono {
    pub fn one() -> Mono {
        Mono(Vec::new())
    }

    pub fn gen(g: Gen, e: u32) -> Mono {
        if e == 0 {
            Mono::one()
        } else {
            Mono(vec![(g, e)])
        }
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(Gen, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, g: &Gen) -> u32 {
        self.0
            .iter()
            .find(|(h, _)| h == g)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, ea) = &self.0[i];
            let (b, eb) = &other.0[j];
            match a.cmp(b) {
                Ordering::Greater => {
                    out.push((a.clone(), *ea));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b.clone(), *eb));
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a.clone(), ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Mono(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Mono) -> Option<Mono> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for (g, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 > *g {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == *g {
                let f = other.0[j].1;
                if f > *e {
                    return None;
                }
                if e - f > 0 {
                    out.push((g.clone(), e - f));
                }
                j += 1;
            } else {
                out.push((g.clone(), *e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Mono(out))
    }

    /// Componentwise minimum of exponents.
    pub fn gcd(&self, other: &Mono) -> Mono {
        let mut out = Vec::new();
        for (g, e) in &self.0 {
            let f = other.exponent(g);
            if f > 0 {
                out.push((g.clone(), (*e).min(f)));
            }
        }
        Mono(out)
    }

    /// Removes generator `g`, returning its exponent and the remaining monomial.
    pub fn split_off(&self, g: &Gen) -> (u32, Mono) {
        let mut rest = Vec::with_capacity(self.0.len());
        let mut exp = 0;
        for (h, e) in &self.0 {
            if h == g {
                exp = *e;
            } else {
                rest.push((h.clone(), *e));
            }
        }
        (exp, Mono(rest))
    }

    fn from_sorted(v: Vec<(Gen, u32)>) -> Mono {
        Mono(v)
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Mono {
    // pure lex with the greatest generator most significant
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.0.iter();
        let mut b = other.0.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((ga, ea)), Some((gb, eb))) => {
                    let c = ga.cmp(gb).then(ea.cmp(eb));
                    if c != Ordering::Equal {
                        return c;
                    }
                }
            }
        }
    }
}

/// Polynomial with rational coefficients; no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Poly {
    terms: BTreeMap<Mono, Rat>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn one() -> Poly {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::one(), c);
        }
        Poly { terms }
    }

    pub fn gen(g: Gen) -> Poly {
        Poly::term(Mono::gen(g, 1), Rat::one())
    }

    pub fn term(m: Mono, c: Rat) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn leading(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Rat {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(Rat::zero)
    }

    fn add_term(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let (mut big, small) = if self.len() >= other.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (m, c) in &small.terms {
            big.add_term(m.clone(), c.clone());
        }
        big
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn scale(&self, k: &Rat) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Mono, k: &Rat) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        // multiplying by a monomial preserves the term order
        Poly {
            terms: self.terms.iter().map(|(n, c)| (n.mul(m), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            for (n, d) in &other.terms {
                out.add_term(m.mul(n), c * d);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// All generators occurring in the polynomial (atoms not entered).
    pub fn gens(&self) -> BTreeSet<Gen> {
        let mut out = BTreeSet::new();
        for m in self.terms.keys() {
            for (g, _) in m.factors() {
                out.insert(g.clone());
            }
        }
        out
    }

    pub fn main_gen(&self) -> Option<Gen> {
        self.terms
            .keys()
            .filter_map(|m| m.factors().first().map(|(g, _)| g))
            .max()
            .cloned()
    }

    pub fn degree_in(&self, g: &Gen) -> u32 {
        self.terms.keys().map(|m| m.exponent(g)).max().unwrap_or(0)
    }

    /// View as a univariate polynomial in `g`.
    pub fn coeffs_in(&self, g: &Gen) -> BTreeMap<u32, Poly> {
        let mut out: BTreeMap<u32, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(g);
            out.entry(e).or_default().add_term(rest, c.clone());
        }
        out
    }

    pub fn from_coeffs_in(g: &Gen, coeffs: &BTreeMap<u32, Poly>) -> Poly {
        let mut out = Poly::zero();
        for (e, p) in coeffs {
            let xe = Mono::gen(g.clone(), *e);
            for (m, c) in &p.terms {
                out.add_term(m.mul(&xe), c.clone());
            }
        }
        out
    }

    /// Partial derivative with respect to a generator treated as independent.
    pub fn partial(&self, g: &Gen) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(g);
            if e == 0 {
                continue;
            }
            let (_, rest) = m.split_off(g);
            let m2 = rest.mul(&Mono::gen(g.clone(), e - 1));
            out.add_term(m2, c * Rat::from_integer(BigInt::from(e)));
        }
        out
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    /// Exact division; `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if let Some(c) = d.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        let (lm, lc) = d.leading().map(|(m, c)| (m.clone(), c.clone()))?;
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((rm, rc)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
            let qm = rm.div(&lm)?;
            let qc = rc / &lc;
            rem = rem.sub(&d.mul_term(&qm, &qc));
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Greatest common divisor, normalized to leading coefficient one.
    pub fn gcd(&self, other: &Poly) -> Poly {
        gcd(self, other)
    }

    /// Rational content: the positive rational `c` such that `self / c` has
    /// coprime integer coefficients.
    pub fn rational_content(&self) -> Rat {
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        if num_gcd.is_zero() {
            return Rat::one();
        }
        Rat::new(num_gcd, den_lcm)
    }

    /// Integer coefficients after dividing by the rational content.
    pub fn integer_terms(&self) -> Vec<(Mono, BigInt)> {
        let content = self.rational_content();
        self.terms
            .iter()
            .map(|(m, c)| {
                let v = c / &content;
                debug_assert!(v.is_integer());
                (m.clone(), v.to_integer())
            })
            .collect()
    }

    /// Integer polynomial with coprime coefficients and positive leading
    /// coefficient, proportional to `self`.
    pub fn integer_primitive(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut k = self.rational_content().recip();
        if self.leading_sign_negative() {
            k = -k;
        }
        self.scale(&k)
    }

    pub fn leading_sign_negative(&self) -> bool {
        self.leading().is_some_and(|(_, c)| c.is_negative())
    }

    pub fn map_monos(&self, mut f: impl FnMut(&Mono, &Rat) -> Poly) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            out = out.add(&f(m, c));
        }
        out
    }
}

fn mono_content(p: &Poly) -> Mono {
    let mut it = p.terms.keys();
    let mut g = match it.next() {
        Some(m) => m.clone(),
        None => return Mono::one(),
    };
    for m in it {
        if g.is_one() {
            break;
        }
        g = g.gcd(m);
    }
    g
}

type UPoly = BTreeMap<u32, Poly>;

fn u_degree(p: &UPoly) -> u32 {
    p.keys().next_back().copied().unwrap_or(0)
}

fn u_lc(p: &UPoly) -> &Poly {
    p.values().next_back().expect("nonzero univariate polynomial")
}

fn u_content(p: &UPoly) -> Poly {
    let mut g = Poly::zero();
    for c in p.values() {
        g = gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Primitive part, also cleared of rational content so that pseudo-remainder
/// coefficients stay small integers.
fn u_primitive(p: &UPoly) -> UPoly {
    let c = u_content(p);
    let mut out: UPoly = p
        .iter()
        .map(|(e, q)| (*e, q.exact_div(&c).expect("content divides every coefficient")))
        .collect();
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::one();
    for q in out.values() {
        for c in q.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
    }
    if !num_gcd.is_zero() {
        let k = Rat::new(den_lcm, num_gcd);
        if !k.is_one() {
            for q in out.values_mut() {
                *q = q.scale(&k);
            }
        }
    }
    out
}

fn u_prem(f: &UPoly, g: &UPoly) -> UPoly {
    let dg = u_degree(g);
    let lg = u_lc(g).clone();
    let mut r = f.clone();
    while !r.is_empty() && u_degree(&r) >= dg {
        let dr = u_degree(&r);
        let lr = u_lc(&r).clone();
        let mut next: UPoly = BTreeMap::new();
        for (e, c) in &r {
            let v = c.mul(&lg);
            if !v.is_zero() {
                next.insert(*e, v);
            }
        }
        for (e, c) in g {
            let k = e + dr - dg;
            let v = next
                .get(&k)
                .cloned()
                .unwrap_or_default()
                .sub(&c.mul(&lr));
            if v.is_zero() {
                next.remove(&k);
            } else {
                next.insert(k, v);
            }
        }
        r = next;
    }
    r
}

fn max_norm(p: &Poly) -> BigInt {
    p.terms.values().map(|c| c.numer().abs()).max().unwrap_or_default()
}

/// Substitutes the integer `v` for `x`.
fn eval_at(p: &Poly, x: &Gen, v: &BigInt) -> Poly {
    let mut out = Poly::zero();
    for (m, c) in &p.terms {
        let (e, rest) = m.split_off(x);
        out.add_term(rest, c * Rat::from_integer(num_traits::pow(v.clone(), e as usize)));
    }
    out
}

/// Symmetric residue of `c` modulo `m`, in `(-m/2, m/2]`.
fn symmetric_mod(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

/// Undoes the evaluation `x = xi` by reading coefficients as symmetric
/// base-`xi` digits.
fn xi_adic(gamma: &Poly, x: &Gen, xi: &BigInt) -> Poly {
    let mut out = Poly::zero();
    let mut rest = gamma.clone();
    let mut e = 0u32;
    while !rest.is_zero() {
        let mut digit = Poly::zero();
        for (m, c) in &rest.terms {
            digit.add_term(m.clone(), Rat::from_integer(symmetric_mod(&c.to_integer(), xi)));
        }
        let xe = Mono::gen(x.clone(), e);
        for (m, c) in &digit.terms {
            out.add_term(m.mul(&xe), c.clone());
        }
        rest = rest.sub(&digit).scale(&Rat::from_integer(xi.clone()).recip());
        e += 1;
    }
    out
}

/// Heuristic gcd of primitive integer polynomials (Char, Geddes and
/// Gonnet). Returns `None` when the evaluation points grow too large.
fn heuristic_gcd(a: &Poly, b: &Poly) -> Option<Poly> {
    if a.is_zero() {
        return Some(b.clone());
    }
    if b.is_zero() {
        return Some(a.clone());
    }
    let x = match a.main_gen().max(b.main_gen()) {
        None => {
            let g = a.leading_coeff().numer().gcd(b.leading_coeff().numer());
            return Some(Poly::constant(Rat::from_integer(g)));
        }
        Some(x) => x,
    };
    // the content gcd of the evaluated images is part of the answer
    let content = a.rational_content().numer().gcd(b.rational_content().numer());
    let (a, b) = (&a.integer_primitive(), &b.integer_primitive());
    let deg = a.degree_in(&x).max(b.degree_in(&x)) as u64;
    let mut xi: BigInt = max_norm(a).min(max_norm(b)) * 2 + 29;
    for _ in 0..6 {
        if xi.bits() * deg.max(1) > 200_000 {
            return None;
        }
        if let Some(gamma) = heuristic_gcd(&eval_at(a, &x, &xi), &eval_at(b, &x, &xi)) {
            let g = xi_adic(&gamma, &x, &xi).integer_primitive();
            if !g.is_zero() && a.exact_div(&g).is_some() && b.exact_div(&g).is_some() {
                return Some(g.scale(&Rat::from_integer(content)));
            }
        }
        xi = xi * 73794 / 27011;
    }
    None
}

/// Multivariate gcd by recursion on the greatest generator with a primitive
/// pseudo-remainder sequence.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if a.len() == 1 || b.len() == 1 {
        let m = mono_content(a).gcd(&mono_content(b));
        return Poly::term(m, Rat::one());
    }
    if a == b {
        return a.monic();
    }
    // one side often divides the other outright
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if large.exact_div(small).is_some() {
        return small.monic();
    }
    let (ia, ib) = (a.integer_primitive(), b.integer_primitive());
    if let Some(g) = heuristic_gcd(&ia, &ib) {
        return g.monic();
    }
    let (ga, gb) = (a.gens(), b.gens());
    // a generator absent from one side only contributes through the content
    if let Some(x) = gb.difference(&ga).next() {
        return gcd(a, &u_content(&b.coeffs_in(x)));
    }
    if let Some(x) = ga.difference(&gb).next() {
        return gcd(&u_content(&a.coeffs_in(x)), b);
    }
    let x = ga
        .iter()
        .min_by_key(|g| a.degree_in(g).max(b.degree_in(g)))
        .cloned()
        .expect("non-constant");
    let da = a.degree_in(&x);
    let db = b.degree_in(&x);
    let ua = a.coeffs_in(&x);
    let ub = b.coeffs_in(&x);
    let c = gcd(&u_content(&ua), &u_content(&ub));
    let pa = u_primitive(&ua);
    let pb = u_primitive(&ub);
    let (mut f, mut g) = if da >= db { (pa, pb) } else { (pb, pa) };
    loop {
        let r = u_prem(&f, &g);
        if r.is_empty() {
            break;
        }
        if u_degree(&r) == 0 {
            g = BTreeMap::from([(0, Poly::one())]);
            break;
        }
        f = g;
        g = u_primitive(&r);
    }
    let g = Poly::from_coeffs_in(&x, &u_primitive(&g));
    g.mul(&c).monic()
}

/// Builds a monomial from generator/exponent pairs in any order.
pub fn mono_from_pairs(mut pairs: Vec<(Gen, u32)>) -> Mono {
    pairs.retain(|(_, e)| *e > 0);
    pairs.sort_by(|a, b| b.0.cmp(&a.0));
    let mut out: Vec<(Gen, u32)> = Vec::with_capacity(pairs.len());
    for (g, e) in pairs {
        match out.last_mut() {
            Some((h, f)) if *h == g => *f += e,
            _ => out.push((g, e)),
        }
    }
    Mono::from_sorted(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Poly {
        Poly::gen(Gen::sym("x"))
    }
    fn y() -> Poly {
        Poly::gen(Gen::sym("y"))
    }
    fn k(n: i64) -> Poly {
        Poly::constant(Rat::from_integer(n.into()))
    }

    #[test]
    fn gcd_of_difference_of_squares() {
        let a = x().mul(&x()).sub(&y().mul(&y()));
        let b = x().sub(&y());
        let g = gcd(&a, &b);
        assert_eq!(g, x().sub(&y()).monic());
        assert_eq!(a.exact_div(&g).unwrap().mul(&g), a);
    }

    #[test]
    fn gcd_multivariate_common_factor() {
        let f = x().mul(&y()).add(&k(1));
        let a = f.mul(&x().add(&k(2)));
        let b = f.mul(&y().sub(&k(3))).mul(&x());
        assert_eq!(gcd(&a, &b), f.monic());
    }

    #[test]
    fn gcd_coprime() {
        let a = x().add(&k(1));
        let b = x().sub(&k(1));
        assert!(gcd(&a, &b).is_one());
    }

    #[test]
    fn exact_division_detects_non_divisibility() {
        let a = x().add(&k(1));
        assert!(a.exact_div(&x()).is_none());
        let p = x().mul(&y()).add(&x());
        assert_eq!(p.exact_div(&x()).unwrap(), y().add(&k(1)));
    }

    #[test]
    fn lex_order_puts_greatest_generator_first() {
        let p = x().add(&y().mul(&y()));
        let (m, _) = p.leading().unwrap();
        assert_eq!(m.exponent(&Gen::sym("y")), 2);
    }
}
