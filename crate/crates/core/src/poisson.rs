//! Polynomials on the cotangent fibers and their canonical Poisson bracket.

use std::collections::BTreeMap;
use std::fmt;

use sublorentz_expr::{Chart, Expr, Rat};

use crate::calculus::VectorField;
use crate::contact::ContactApparatus;
use crate::error::CoreError;
use crate::frame::Frame;
use crate::invariants::StructureFunctions;

/// Polynomial in three fiber variables with `Expr` coefficients. Zero
/// coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FiberPolynomial {
    terms: BTreeMap<[u32; 3], Expr>,
}

impl FiberPolynomial {
    pub fn zero() -> FiberPolynomial {
        FiberPolynomial::default()
    }

    pub fn constant(c: Expr) -> FiberPolynomial {
        FiberPolynomial::zero().with_term([0, 0, 0], c)
    }

    /// The fiber variable with index `i`.
    pub fn var(i: usize) -> FiberPolynomial {
        let mut e = [0; 3];
        e[i] = 1;
        FiberPolynomial::zero().with_term(e, Expr::one())
    }

    /// `sum c_i p_i`.
    pub fn linear(c: &[Expr; 3]) -> FiberPolynomial {
        let mut out = FiberPolynomial::zero();
        for (i, ci) in c.iter().enumerate() {
            let mut e = [0; 3];
            e[i] = 1;
            out.add_term(e, ci.clone());
        }
        out
    }

    /// `h_X(lambda) = <lambda, X>` in canonical momenta.
    pub fn from_field(x: &VectorField) -> FiberPolynomial {
        FiberPolynomial::linear(x.components())
    }

    fn with_term(mut self, e: [u32; 3], c: Expr) -> FiberPolynomial {
        self.add_term(e, c);
        self
    }

    fn add_term(&mut self, e: [u32; 3], c: Expr) {
        if c.is_literal_zero() {
            return;
        }
        let sum = match self.terms.remove(&e) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_literal_zero() {
            self.terms.insert(e, sum);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 3], &Expr)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: [u32; 3]) -> Expr {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &FiberPolynomial) -> FiberPolynomial {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> FiberPolynomial {
        self.map(|c| -c)
    }

    pub fn sub(&self, other: &FiberPolynomial) -> FiberPolynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, f: &Expr) -> FiberPolynomial {
        self.map(|c| f * c)
    }

    fn map(&self, f: impl Fn(&Expr) -> Expr) -> FiberPolynomial {
        let mut out = FiberPolynomial::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, f(c));
        }
        out
    }

    pub fn mul(&self, other: &FiberPolynomial) -> FiberPolynomial {
        let mut out = FiberPolynomial::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term([a[0] + b[0], a[1] + b[1], a[2] + b[2]], ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> FiberPolynomial {
        (0..n).fold(FiberPolynomial::constant(Expr::one()), |acc, _| acc.mul(self))
    }

    /// Derivative in the fiber variable `i`.
    pub fn fiber_derivative(&self, i: usize) -> FiberPolynomial {
        let mut out = FiberPolynomial::zero();
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut d = *e;
            d[i] -= 1;
            out.add_term(d, c.scale(&Rat::from_integer(e[i].into())));
        }
        out
    }

    /// Derivative of the coefficients in a base coordinate.
    pub fn base_derivative(&self, chart: &Chart, var: &str) -> Result<FiberPolynomial, CoreError> {
        let mut out = FiberPolynomial::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, chart.differentiate(c, var)?);
        }
        Ok(out)
    }

    /// Replaces variable `i` by `subs[i]` throughout.
    pub fn compose(&self, subs: &[FiberPolynomial; 3]) -> FiberPolynomial {
        let mut out = FiberPolynomial::zero();
        for (e, c) in &self.terms {
            let t = (0..3).fold(FiberPolynomial::constant(c.clone()), |acc, i| acc.mul(&subs[i].pow(e[i])));
            out = out.add(&t);
        }
        out
    }

    /// Renders with the given variable names.
    pub fn render(&self, names: [&str; 3]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono: Vec<String> = (0..3)
                    .filter(|&i| e[i] > 0)
                    .map(|i| match e[i] {
                        1 => names[i].to_string(),
                        k => format!("{}^{k}", names[i]),
                    })
                    .collect();
                if mono.is_empty() {
                    format!("{c}")
                } else {
                    format!("({c})*{}", mono.join("*"))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Display for FiberPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(["p1", "p2", "p3"]))
    }
}

/// `{F, G} = sum_i dF/dp_i dG/dx_i - dF/dx_i dG/dp_i`, the sign for which
/// `{h_X, h_Y} = h_[X,Y]`.
pub fn poisson_bracket(
    f: &FiberPolynomial,
    g: &FiberPolynomial,
    chart: &Chart,
) -> Result<FiberPolynomial, CoreError> {
    let mut out = FiberPolynomial::zero();
    for i in 0..3 {
        let var = chart.coordinates()[i].clone();
        let a = f.fiber_derivative(i).mul(&g.base_derivative(chart, &var)?);
        let b = f.base_derivative(chart, &var)?.mul(&g.fiber_derivative(i));
        out = out.add(&a).sub(&b);
    }
    Ok(out)
}

/// The quadratic form `-c011 h1^2 + (c021 - c012) h1 h2 + c022 h2^2` in
/// frame momenta (h0, h1, h2).
pub fn reeb_bracket_form(sf: &StructureFunctions) -> FiberPolynomial {
    let h1 = FiberPolynomial::var(1);
    let h2 = FiberPolynomial::var(2);
    h1.pow(2)
        .scale(&-&sf.c011)
        .add(&h1.mul(&h2).scale(&(&sf.c021 - &sf.c012)))
        .add(&h2.pow(2).scale(&sf.c022))
}

/// Computes `{h, h0}` for `h = -h1^2/2 + h2^2/2` in canonical momenta,
/// rewrites it in frame momenta and subtracts [`reeb_bracket_form`].
pub fn reeb_bracket_residual(
    frame: &Frame,
    apparatus: &ContactApparatus,
    sf: &StructureFunctions,
) -> Result<FiberPolynomial, CoreError> {
    let chart = &frame.chart;
    let half = Expr::frac(1, 2);
    let h0 = FiberPolynomial::from_field(&apparatus.x0);
    let h1 = FiberPolynomial::from_field(&frame.x1);
    let h2 = FiberPolynomial::from_field(&frame.x2);
    let h = h2.pow(2).sub(&h1.pow(2)).scale(&half);
    let bracket = poisson_bracket(&h, &h0, chart)?;
    // p_j = sum_i h_i nu_i(d/dx_j)
    let subs: [FiberPolynomial; 3] = std::array::from_fn(|j| {
        let c: [Expr; 3] = std::array::from_fn(|i| apparatus.coframe[i].coefficients()[j].clone());
        FiberPolynomial::linear(&c)
    });
    Ok(bracket.compose(&subs).sub(&reeb_bracket_form(sf)))
}
