//! Canonical rational functions over Q with transcendental atoms.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::ExprError;
use crate::poly::{mono_from_pairs, Func, Gen, Mono, Poly, Rat};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Frac {
    num: Poly,
    den: Poly,
}

/// Exact scalar: a reduced fraction `num / den` in canonical form.
///
/// Canonical means: no `cosh^k` with `k >= 2` anywhere, no cosh atom in the
/// denominator, numerator and denominator coprime, denominator with leading
/// coefficient one. Structural equality is therefore semantic equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Expr(Arc<Frac>);

impl Expr {
    fn has_cosh(&self) -> bool {
        self.0.num.gens().iter().any(Gen::is_cosh)
    }

    fn from_parts_unchecked(num: Poly, den: Poly) -> Expr {
        Expr(Arc::new(Frac { num, den }))
    }

    /// Builds `num / den` and brings it to canonical form.
    pub fn from_fraction(num: Poly, den: Poly) -> Result<Expr, ExprError> {
        normalize(num, den)
    }

    pub fn from_poly(p: Poly) -> Expr {
        normalize(p, Poly::one()).expect("denominator is one")
    }

    pub fn zero() -> Expr {
        Expr::from_parts_unchecked(Poly::zero(), Poly::one())
    }

    pub fn one() -> Expr {
        Expr::from_parts_unchecked(Poly::one(), Poly::one())
    }

    pub fn int(n: i64) -> Expr {
        Expr::rat(Rat::from_integer(BigInt::from(n)))
    }

    pub fn rat(c: Rat) -> Expr {
        Expr::from_parts_unchecked(Poly::constant(c), Poly::one())
    }

    /// `n / d`; panics if `d == 0`.
    pub fn frac(n: i64, d: i64) -> Expr {
        assert!(d != 0, "zero denominator");
        Expr::rat(Rat::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn symbol(name: &str) -> Expr {
        Expr::from_parts_unchecked(Poly::gen(Gen::sym(name)), Poly::one())
    }

    /// Applies a transcendental function, with the built-in evaluations at
    /// 0 and 1 and the parity rules for sinh and cosh.
    pub fn apply(func: Func, arg: Expr) -> Result<Expr, ExprError> {
        match func {
            Func::Exp if arg.is_literal_zero() => return Ok(Expr::one()),
            Func::Sinh if arg.is_literal_zero() => return Ok(Expr::zero()),
            Func::Cosh if arg.is_literal_zero() => return Ok(Expr::one()),
            Func::Log if arg.is_literal_zero() => {
                return Err(ExprError::Domain("log(0)".to_string()))
            }
            Func::Log if arg.is_one() => return Ok(Expr::zero()),
            _ => {}
        }
        if matches!(func, Func::Sinh | Func::Cosh) && arg.0.num.leading_sign_negative() {
            let inner = Expr::apply(func, -arg)?;
            return Ok(if func == Func::Sinh { -inner } else { inner });
        }
        Ok(Expr::from_poly(Poly::gen(Gen::atom(func, arg))))
    }

    pub fn exp(arg: Expr) -> Expr {
        Expr::apply(Func::Exp, arg).expect("exp is total")
    }

    pub fn sinh(arg: Expr) -> Expr {
        Expr::apply(Func::Sinh, arg).expect("sinh is total")
    }

    pub fn cosh(arg: Expr) -> Expr {
        Expr::apply(Func::Cosh, arg).expect("cosh is total")
    }

    pub fn log(arg: Expr) -> Result<Expr, ExprError> {
        Expr::apply(Func::Log, arg)
    }

    pub fn numerator(&self) -> &Poly {
        &self.0.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.0.den
    }

    pub fn is_literal_zero(&self) -> bool {
        self.0.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.num.is_one() && self.0.den.is_one()
    }

    pub fn as_rational(&self) -> Option<Rat> {
        if self.0.den.is_one() {
            self.0.num.as_constant()
        } else {
            None
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_rational().is_some()
    }

    pub fn is_polynomial(&self) -> bool {
        self.0.den.is_one()
    }

    /// Generators of numerator and denominator (atoms not entered).
    pub fn gens(&self) -> BTreeSet<Gen> {
        let mut g = self.0.num.gens();
        g.extend(self.0.den.gens());
        g
    }

    /// Every symbol name, including those inside atom arguments.
    pub fn symbols(&self) -> BTreeSet<Arc<str>> {
        let mut out = BTreeSet::new();
        self.collect_symbols(&mut out);
        out
    }

    fn collect_symbols(&self, out: &mut BTreeSet<Arc<str>>) {
        for g in self.gens() {
            match g {
                Gen::Sym(s) => {
                    out.insert(s);
                }
                Gen::Atom(a) => a.arg.collect_symbols(out),
            }
        }
    }

    pub fn has_atoms(&self) -> bool {
        self.gens().iter().any(|g| matches!(g, Gen::Atom(_)))
    }

    pub fn try_div(&self, other: &Expr) -> Result<Expr, ExprError> {
        if other.is_literal_zero() {
            return Err(ExprError::DivisionByZero);
        }
        if let Some(c) = other.as_rational() {
            return Ok(self.scale(&c.recip()));
        }
        normalize(
            self.0.num.mul(&other.0.den),
            self.0.den.mul(&other.0.num),
        )
    }

    pub fn inv(&self) -> Result<Expr, ExprError> {
        Expr::one().try_div(self)
    }

    pub fn scale(&self, c: &Rat) -> Expr {
        if c.is_zero() {
            return Expr::zero();
        }
        Expr::from_parts_unchecked(self.0.num.scale(c), self.0.den.clone())
    }

    pub fn pow(&self, e: i64) -> Result<Expr, ExprError> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let e = u32::try_from(e).map_err(|_| ExprError::Overflow)?;
        if e == 0 {
            return Ok(Expr::one());
        }
        Ok(normalize(self.0.num.pow(e), self.0.den.pow(e)).expect("nonzero power of denominator"))
    }

    /// Partial derivative with respect to a symbol; every other symbol is
    /// treated as independent.
    pub fn derivative(&self, var: &str) -> Expr {
        let target = Gen::sym(var);
        let mut dn = Expr::zero();
        let mut dd = Expr::zero();
        for g in self.gens() {
            let dg = gen_derivative(&g, &target);
            if dg.is_literal_zero() {
                continue;
            }
            let pn = self.0.num.partial(&g);
            if !pn.is_zero() {
                dn = &dn + &(&Expr::from_poly(pn) * &dg);
            }
            let pd = self.0.den.partial(&g);
            if !pd.is_zero() {
                dd = &dd + &(&Expr::from_poly(pd) * &dg);
            }
        }
        if dd.is_literal_zero() {
            return dn.scale_poly_inverse(&self.0.den);
        }
        let n = Expr::from_poly(self.0.num.clone());
        let d = Expr::from_poly(self.0.den.clone());
        let top = &(&dn * &d) - &(&n * &dd);
        top.try_div(&(&d * &d)).expect("squared denominator is nonzero")
    }

    fn scale_poly_inverse(&self, den: &Poly) -> Expr {
        if den.is_one() {
            return self.clone();
        }
        normalize(self.0.num.clone(), self.0.den.mul(den)).expect("nonzero denominator")
    }

    /// Simultaneous substitution of symbols; atoms are rebuilt from their
    /// substituted arguments.
    pub fn substitute(&self, bindings: &BTreeMap<String, Expr>) -> Result<Expr, ExprError> {
        if bindings.is_empty() {
            return Ok(self.clone());
        }
        let mut cache: BTreeMap<Gen, Expr> = BTreeMap::new();
        for g in self.gens() {
            let v = match &g {
                Gen::Sym(s) => match bindings.get(s.as_ref()) {
                    Some(v) => v.clone(),
                    None => Expr::from_poly(Poly::gen(g.clone())),
                },
                Gen::Atom(a) => Expr::apply(a.func, a.arg.substitute(bindings)?)?,
            };
            cache.insert(g, v);
        }
        let num = eval_poly(&self.0.num, &cache);
        let den = eval_poly(&self.0.den, &cache);
        num.try_div(&den)
    }

    /// Exact value at a rational point, when every atom argument lands on a
    /// point where the function value is rational (exp/sinh/cosh at 0, log
    /// at 1) and the denominator does not vanish.
    pub fn eval_rational(&self, point: &BTreeMap<Arc<str>, Rat>) -> Option<Rat> {
        let mut values: BTreeMap<Gen, Rat> = BTreeMap::new();
        for g in self.gens() {
            let v = match &g {
                Gen::Sym(s) => point.get(s)?.clone(),
                Gen::Atom(a) => {
                    let arg = a.arg.eval_rational(point)?;
                    match a.func {
                        Func::Exp | Func::Cosh if arg.is_zero() => Rat::one(),
                        Func::Sinh if arg.is_zero() => Rat::zero(),
                        Func::Log if arg.is_one() => Rat::zero(),
                        _ => return None,
                    }
                }
            };
            values.insert(g, v);
        }
        let den = eval_poly_rat(&self.0.den, &values);
        if den.is_zero() {
            return None;
        }
        Some(eval_poly_rat(&self.0.num, &values) / den)
    }

    /// Negative when the leading numerator coefficient is negative.
    pub fn leading_sign_negative(&self) -> bool {
        self.0.num.leading_sign_negative()
    }
}

fn gen_derivative(g: &Gen, target: &Gen) -> Expr {
    match g {
        Gen::Sym(_) => {
            if g == target {
                Expr::one()
            } else {
                Expr::zero()
            }
        }
        Gen::Atom(a) => {
            let da = match target {
                Gen::Sym(s) => a.arg.derivative(s),
                Gen::Atom(_) => Expr::zero(),
            };
            if da.is_literal_zero() {
                return Expr::zero();
            }
            let outer = match a.func {
                Func::Exp => Expr::exp(a.arg.clone()),
                Func::Sinh => Expr::cosh(a.arg.clone()),
                Func::Cosh => Expr::sinh(a.arg.clone()),
                Func::Log => a.arg.inv().expect("log argument is nonzero"),
            };
            &outer * &da
        }
    }
}

fn eval_poly(p: &Poly, values: &BTreeMap<Gen, Expr>) -> Expr {
    let mut acc = Expr::zero();
    for (m, c) in p.terms() {
        let mut t = Expr::rat(c.clone());
        for (g, e) in m.factors() {
            let v = &values[g];
            t = &t * &v.pow(i64::from(*e)).expect("nonnegative power");
        }
        acc = &acc + &t;
    }
    acc
}

fn eval_poly_rat(p: &Poly, values: &BTreeMap<Gen, Rat>) -> Rat {
    let mut acc = Rat::zero();
    for (m, c) in p.terms() {
        let mut t = c.clone();
        for (g, e) in m.factors() {
            t *= num_traits::pow(values[g].clone(), *e as usize);
        }
        acc += t;
    }
    acc
}

/// Replaces every `cosh(a)^k`, `k >= 2`, using `cosh^2 = 1 + sinh^2`.
fn reduce_hyperbolic(p: &Poly) -> Poly {
    let needs = p
        .terms()
        .any(|(m, _)| m.factors().iter().any(|(g, e)| *e >= 2 && g.is_cosh()));
    if !needs {
        return p.clone();
    }
    p.map_monos(|m, c| {
        let mut kept = Vec::new();
        let mut factor = Poly::one();
        for (g, e) in m.factors() {
            if g.is_cosh() && *e >= 2 {
                let a = g.as_atom().expect("cosh atom");
                let s = Poly::gen(Gen::atom(Func::Sinh, a.arg.clone()));
                let one_plus_s2 = Poly::one().add(&s.mul(&s));
                factor = factor.mul(&one_plus_s2.pow(e / 2));
                if e % 2 == 1 {
                    kept.push((g.clone(), 1));
                }
            } else {
                kept.push((g.clone(), *e));
            }
        }
        factor.mul_term(&mono_from_pairs(kept), c)
    })
}

fn normalize(num: Poly, den: Poly) -> Result<Expr, ExprError> {
    let mut num = reduce_hyperbolic(&num);
    let mut den = reduce_hyperbolic(&den);
    if den.is_zero() {
        return Err(ExprError::DivisionByZero);
    }
    if num.is_zero() {
        return Ok(Expr::zero());
    }
    // clear cosh atoms from the denominator with the conjugate
    while let Some(c) = den.gens().into_iter().find(|g| g.is_cosh()) {
        let parts = den.coeffs_in(&c);
        let p0 = parts.get(&0).cloned().unwrap_or_default();
        let p1 = parts.get(&1).cloned().unwrap_or_default();
        let conj = p0.sub(&p1.mul_term(&Mono::gen(c.clone(), 1), &Rat::one()));
        den = reduce_hyperbolic(&den.mul(&conj));
        num = reduce_hyperbolic(&num.mul(&conj));
        if den.is_zero() {
            return Err(ExprError::DivisionByZero);
        }
    }
    if num.is_zero() {
        return Ok(Expr::zero());
    }
    if !den.is_constant() {
        let g = num.gcd(&den);
        if !g.is_one() {
            num = num.exact_div(&g).expect("gcd divides numerator");
            den = den.exact_div(&g).expect("gcd divides denominator");
        }
    }
    let lc = den.leading_coeff();
    if !lc.is_one() {
        let inv = lc.recip();
        num = num.scale(&inv);
        den = den.scale(&inv);
    }
    Ok(Expr::from_parts_unchecked(num, den))
}

impl Default for Expr {
    fn default() -> Self {
        Expr::zero()
    }
}

impl From<i64> for Expr {
    fn from(n: i64) -> Self {
        Expr::int(n)
    }
}

impl<'a> Add<&'a Expr> for &'a Expr {
    type Output = Expr;
    fn add(self, rhs: &'a Expr) -> Expr {
        if self.is_literal_zero() {
            return rhs.clone();
        }
        if rhs.is_literal_zero() {
            return self.clone();
        }
        if self.0.den == rhs.0.den {
            return normalize(self.0.num.add(&rhs.0.num), self.0.den.clone())
                .expect("nonzero denominator");
        }
        if rhs.0.den.is_one() {
            return normalize(self.0.num.add(&rhs.0.num.mul(&self.0.den)), self.0.den.clone())
                .expect("nonzero denominator");
        }
        if self.0.den.is_one() {
            return normalize(self.0.num.mul(&rhs.0.den).add(&rhs.0.num), rhs.0.den.clone())
                .expect("nonzero denominator");
        }
        if !self.has_cosh() && !rhs.has_cosh() {
            return henrici_add(&self.0, &rhs.0);
        }
        let num = self.0.num.mul(&rhs.0.den).add(&rhs.0.num.mul(&self.0.den));
        normalize(num, self.0.den.mul(&rhs.0.den)).expect("nonzero denominator")
    }
}

/// `a/b + c/d` for reduced cosh-free fractions: only the common part of
/// the denominators can cancel.
fn henrici_add(x: &Frac, y: &Frac) -> Expr {
    let g = x.den.gcd(&y.den);
    let (b1, d1) = if g.is_one() {
        (x.den.clone(), y.den.clone())
    } else {
        (
            x.den.exact_div(&g).expect("gcd divides"),
            y.den.exact_div(&g).expect("gcd divides"),
        )
    };
    let mut num = x.num.mul(&d1).add(&y.num.mul(&b1));
    if num.is_zero() {
        return Expr::zero();
    }
    let mut den = b1.mul(&y.den);
    if !g.is_one() {
        let h = num.gcd(&g);
        if !h.is_one() {
            num = num.exact_div(&h).expect("gcd divides");
            den = den.exact_div(&h).expect("gcd divides");
        }
    }
    finish(num, den)
}

/// `(a/b)(c/d)` for reduced cosh-free fractions by cross cancellation.
fn henrici_mul(x: &Frac, y: &Frac) -> Expr {
    let g1 = x.num.gcd(&y.den);
    let g2 = y.num.gcd(&x.den);
    let div = |p: &Poly, g: &Poly| if g.is_one() { p.clone() } else { p.exact_div(g).expect("gcd divides") };
    let num = div(&x.num, &g1).mul(&div(&y.num, &g2));
    let den = div(&x.den, &g2).mul(&div(&y.den, &g1));
    finish(num, den)
}

/// Makes the denominator monic; the fraction must already be reduced.
fn finish(mut num: Poly, mut den: Poly) -> Expr {
    let lc = den.leading_coeff();
    if !lc.is_one() {
        let inv = lc.recip();
        num = num.scale(&inv);
        den = den.scale(&inv);
    }
    Expr::from_parts_unchecked(num, den)
}

impl<'a> Sub<&'a Expr> for &'a Expr {
    type Output = Expr;
    fn sub(self, rhs: &'a Expr) -> Expr {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Expr> for &'a Expr {
    type Output = Expr;
    fn mul(self, rhs: &'a Expr) -> Expr {
        if self.is_literal_zero() || rhs.is_literal_zero() {
            return Expr::zero();
        }
        if let Some(c) = self.as_rational() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.as_rational() {
            return self.scale(&c);
        }
        if !self.has_cosh() && !rhs.has_cosh() {
            return henrici_mul(&self.0, &rhs.0);
        }
        normalize(self.0.num.mul(&rhs.0.num), self.0.den.mul(&rhs.0.den))
            .expect("nonzero denominator")
    }
}

impl Neg for &Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr::from_parts_unchecked(self.0.num.neg(), self.0.den.clone())
    }
}

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Expr> for Expr {
            type Output = Expr;
            fn $m(self, rhs: Expr) -> Expr {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Expr> for Expr {
            type Output = Expr;
            fn $m(self, rhs: &'a Expr) -> Expr {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Expr> for &'a Expr {
            type Output = Expr;
            fn $m(self, rhs: Expr) -> Expr {
                self.$m(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl std::iter::Sum for Expr {
    fn sum<I: Iterator<Item = Expr>>(iter: I) -> Expr {
        iter.fold(Expr::zero(), |a, b| &a + &b)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::render::render_plain(self))
    }
}

impl fmt::Debug for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Expr({})", crate::render::render_plain(self))
    }
}
