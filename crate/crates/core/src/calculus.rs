//! Vector fields and differential forms on a three-dimensional chart.

use std::fmt;

use sublorentz_expr::{is_zero, Chart, Expr, Truth};

use crate::error::CoreError;

/// Components along the coordinate fields of the chart.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VectorField(pub [Expr; 3]);

impl VectorField {
    pub fn new(a: Expr, b: Expr, c: Expr) -> VectorField {
        VectorField([a, b, c])
    }

    pub fn zero() -> VectorField {
        VectorField([Expr::zero(), Expr::zero(), Expr::zero()])
    }

    /// The coordinate field along the `i`-th coordinate.
    pub fn basis(i: usize) -> VectorField {
        let mut v = VectorField::zero();
        v.0[i] = Expr::one();
        v
    }

    pub fn from_components(v: Vec<Expr>) -> Result<VectorField, CoreError> {
        let arr: [Expr; 3] = v
            .try_into()
            .map_err(|v: Vec<Expr>| CoreError::Dimension(v.len()))?;
        Ok(VectorField(arr))
    }

    pub fn components(&self) -> &[Expr; 3] {
        &self.0
    }

    pub fn get(&self, i: usize) -> &Expr {
        &self.0[i]
    }

    /// Directional derivative `X(f)`.
    pub fn apply(&self, f: &Expr, chart: &Chart) -> Expr {
        let mut acc = Expr::zero();
        for (k, c) in self.0.iter().enumerate() {
            if c.is_literal_zero() {
                continue;
            }
            let d = f.derivative(&chart.coordinates()[k]);
            if !d.is_literal_zero() {
                acc = &acc + &(c * &d);
            }
        }
        acc
    }

    /// `[self, other]^k = self(other^k) - other(self^k)`.
    pub fn bracket(&self, other: &VectorField, chart: &Chart) -> VectorField {
        VectorField(std::array::from_fn(|k| {
            &self.apply(&other.0[k], chart) - &other.apply(&self.0[k], chart)
        }))
    }

    pub fn add(&self, other: &VectorField) -> VectorField {
        VectorField(std::array::from_fn(|k| &self.0[k] + &other.0[k]))
    }

    pub fn sub(&self, other: &VectorField) -> VectorField {
        VectorField(std::array::from_fn(|k| &self.0[k] - &other.0[k]))
    }

    pub fn scale(&self, f: &Expr) -> VectorField {
        VectorField(std::array::from_fn(|k| f * &self.0[k]))
    }

    pub fn neg(&self) -> VectorField {
        VectorField(std::array::from_fn(|k| -&self.0[k]))
    }

    pub fn is_zero(&self) -> Truth {
        Truth::all(self.0.iter().map(is_zero))
    }

    /// Linear combination `sum coeffs[i] * fields[i]`.
    pub fn combination(coeffs: &[Expr], fields: &[&VectorField]) -> VectorField {
        let mut acc = VectorField::zero();
        for (c, f) in coeffs.iter().zip(fields) {
            if !c.is_literal_zero() {
                acc = acc.add(&f.scale(c));
            }
        }
        acc
    }

    /// Renders as `a*d/dx + b*d/dy + ...`, parseable as a vector field.
    pub fn render(&self, chart: &Chart) -> String {
        let mut parts = Vec::new();
        for (k, c) in self.0.iter().enumerate() {
            if c.is_literal_zero() {
                continue;
            }
            let basis = format!("d/d{}", chart.coordinates()[k]);
            let text = c.to_string();
            if c.is_one() {
                parts.push(basis);
            } else if text == "-1" {
                parts.push(format!("-{basis}"));
            } else if is_atomic(&text) {
                parts.push(format!("{text}*{basis}"));
            } else {
                parts.push(format!("({text})*{basis}"));
            }
        }
        if parts.is_empty() {
            return "0".to_string();
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            match p.strip_prefix('-') {
                Some(rest) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                None => {
                    out.push_str(" + ");
                    out.push_str(p);
                }
            }
        }
        out
    }
}

/// True when the rendering is a single product without a division.
fn is_atomic(text: &str) -> bool {
    let body = text.strip_prefix('-').unwrap_or(text);
    !body.contains([' ', '/'])
}

pub fn lie_bracket(x: &VectorField, y: &VectorField, chart: &Chart) -> VectorField {
    x.bracket(y, chart)
}

pub fn apply_field(x: &VectorField, f: &Expr, chart: &Chart) -> Expr {
    x.apply(f, chart)
}

/// Increasing index sets of size `p` in {0, 1, 2}.
fn index_sets(p: usize) -> &'static [&'static [usize]] {
    match p {
        0 => &[&[]],
        1 => &[&[0], &[1], &[2]],
        2 => &[&[0, 1], &[0, 2], &[1, 2]],
        3 => &[&[0, 1, 2]],
        _ => &[],
    }
}

/// Sorts an index list, returning the permutation sign, or `None` on a repeat.
fn sort_with_sign(idx: &[usize]) -> Option<(Vec<usize>, i64)> {
    let mut v = idx.to_vec();
    let mut sign = 1;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] == v[j + 1] {
                return None;
            }
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, sign))
}

/// A differential `p`-form with coefficients on `dx_I`, `I` increasing.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Form {
    degree: usize,
    coeffs: Vec<Expr>,
}

impl Form {
    pub fn zero(degree: usize) -> Form {
        assert!(degree <= 3, "degree above 3 on a 3-dimensional chart");
        Form {
            degree,
            coeffs: vec![Expr::zero(); index_sets(degree).len()],
        }
    }

    pub fn function(f: Expr) -> Form {
        Form {
            degree: 0,
            coeffs: vec![f],
        }
    }

    pub fn one_form(c: [Expr; 3]) -> Form {
        Form {
            degree: 1,
            coeffs: c.to_vec(),
        }
    }

    /// The coordinate differential `dx_i`.
    pub fn dx(i: usize) -> Form {
        let mut f = Form::zero(1);
        f.coeffs[i] = Expr::one();
        f
    }

    /// Two-form from coefficients on dx^dy, dx^dz, dy^dz.
    pub fn two_form(c: [Expr; 3]) -> Form {
        Form {
            degree: 2,
            coeffs: c.to_vec(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficients(&self) -> &[Expr] {
        &self.coeffs
    }

    /// Coefficient of `dx_{idx[0]} ^ ... `, with the sign of the permutation.
    pub fn coeff(&self, idx: &[usize]) -> Expr {
        assert_eq!(idx.len(), self.degree, "index arity");
        match sort_with_sign(idx) {
            None => Expr::zero(),
            Some((sorted, sign)) => {
                let pos = index_sets(self.degree)
                    .iter()
                    .position(|s| *s == sorted.as_slice())
                    .expect("index within chart");
                if sign < 0 {
                    -&self.coeffs[pos]
                } else {
                    self.coeffs[pos].clone()
                }
            }
        }
    }

    fn add_at(&mut self, idx: &[usize], value: Expr) {
        if let Some((sorted, sign)) = sort_with_sign(idx) {
            let pos = index_sets(self.degree)
                .iter()
                .position(|s| *s == sorted.as_slice())
                .expect("index within chart");
            let v = if sign < 0 { -value } else { value };
            self.coeffs[pos] = &self.coeffs[pos] + &v;
        }
    }

    pub fn add(&self, other: &Form) -> Form {
        assert_eq!(self.degree, other.degree, "degree mismatch");
        Form {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Form) -> Form {
        self.add(&other.scale(&Expr::int(-1)))
    }

    pub fn scale(&self, f: &Expr) -> Form {
        Form {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|c| f * c).collect(),
        }
    }

    pub fn is_zero(&self) -> Truth {
        Truth::all(self.coeffs.iter().map(is_zero))
    }

    /// Exterior derivative.
    pub fn d(&self, chart: &Chart) -> Form {
        if self.degree == 3 {
            return Form::zero(3);
        }
        let mut out = Form::zero(self.degree + 1);
        for (set, c) in index_sets(self.degree).iter().zip(&self.coeffs) {
            if c.is_literal_zero() {
                continue;
            }
            for k in 0..3 {
                if set.contains(&k) {
                    continue;
                }
                let dc = c.derivative(&chart.coordinates()[k]);
                if dc.is_literal_zero() {
                    continue;
                }
                let mut idx = vec![k];
                idx.extend_from_slice(set);
                out.add_at(&idx, dc);
            }
        }
        out
    }

    pub fn wedge(&self, other: &Form) -> Form {
        let degree = self.degree + other.degree;
        if degree > 3 {
            return Form::zero(3);
        }
        let mut out = Form::zero(degree);
        for (i, a) in index_sets(self.degree).iter().zip(&self.coeffs) {
            if a.is_literal_zero() {
                continue;
            }
            for (j, b) in index_sets(other.degree).iter().zip(&other.coeffs) {
                if b.is_literal_zero() {
                    continue;
                }
                let mut idx = i.to_vec();
                idx.extend_from_slice(j);
                out.add_at(&idx, a * b);
            }
        }
        out
    }

    /// Multilinear evaluation on `degree` vector fields; no 1/p! factor, so
    /// `(dx^dy)(d/dx, d/dy) = 1`.
    pub fn eval(&self, fields: &[&VectorField]) -> Result<Expr, CoreError> {
        if fields.len() != self.degree {
            return Err(CoreError::Arity {
                expected: self.degree,
                found: fields.len(),
            });
        }
        let mut acc = Expr::zero();
        for (set, c) in index_sets(self.degree).iter().zip(&self.coeffs) {
            if c.is_literal_zero() {
                continue;
            }
            let minor: Vec<Vec<Expr>> = set
                .iter()
                .map(|&row| fields.iter().map(|f| f.0[row].clone()).collect())
                .collect();
            acc = &acc + &(c * &crate::matrix::det(&minor));
        }
        Ok(acc)
    }

    /// Value on a single field; panics unless the form has degree one.
    pub fn pair(&self, x: &VectorField) -> Expr {
        assert_eq!(self.degree, 1, "pairing needs a 1-form");
        self.coeffs
            .iter()
            .zip(&x.0)
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Renders as `a*dx + b*dy^dz ...` in increasing index order.
    pub fn render(&self, chart: &Chart) -> String {
        let mut parts = Vec::new();
        for (set, c) in index_sets(self.degree).iter().zip(&self.coeffs) {
            if c.is_literal_zero() {
                continue;
            }
            let basis = set
                .iter()
                .map(|&i| format!("d{}", chart.coordinates()[i]))
                .collect::<Vec<_>>()
                .join("^");
            let text = c.to_string();
            if basis.is_empty() {
                parts.push(text);
            } else if c.is_one() {
                parts.push(basis);
            } else if text == "-1" {
                parts.push(format!("-{basis}"));
            } else if is_atomic(&text) {
                parts.push(format!("{text}*{basis}"));
            } else {
                parts.push(format!("({text})*{basis}"));
            }
        }
        if parts.is_empty() {
            return "0".to_string();
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            match p.strip_prefix('-') {
                Some(rest) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                None => {
                    out.push_str(" + ");
                    out.push_str(p);
                }
            }
        }
        out
    }
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use sublorentz_expr::{parse_expr, parse_vector_field};

    fn chart() -> Chart {
        Chart::standard()
    }

    fn field(s: &str) -> VectorField {
        VectorField::from_components(parse_vector_field(s, &chart()).unwrap()).unwrap()
    }

    fn e(s: &str) -> Expr {
        parse_expr(s, &chart()).unwrap()
    }

    #[test]
    fn heisenberg_bracket() {
        let a = field("d/dy + (x/2)*d/dz");
        let b = field("d/dx - (y/2)*d/dz");
        assert_eq!(a.bracket(&b, &chart()), VectorField::new(e("0"), e("0"), e("-1")));
        assert_eq!(a.bracket(&a, &chart()).is_zero(), Truth::True);
    }

    #[test]
    fn martinet_bracket() {
        let x1 = field("d/dx + (1/2)*y^2*d/dz");
        let x2 = field("d/dy - (1/2)*x*y*d/dz");
        let b = x2.bracket(&x1, &chart());
        assert_eq!(b, VectorField::new(e("0"), e("0"), e("3*y/2")));
    }

    #[test]
    fn apply_examples() {
        let x2 = field("d/dy - (1/2)*x*y*d/dz");
        assert_eq!(x2.apply(&e("1/y"), &chart()), e("-1/y^2"));
        assert_eq!(field("d/dx").apply(&e("x*y"), &chart()), e("y"));
    }

    #[test]
    fn exterior_derivative_examples() {
        let c = chart();
        assert_eq!(Form::dx(0).d(&c).is_zero(), Truth::True);
        let a = Form::one_form([e("0"), e("x"), e("0")]);
        assert_eq!(a.d(&c), Form::dx(0).wedge(&Form::dx(1)));
    }

    #[test]
    fn wedge_evaluation_convention() {
        let w = Form::dx(0).wedge(&Form::dx(1));
        let v = w.eval(&[&VectorField::basis(0), &VectorField::basis(1)]).unwrap();
        assert!(v.is_one());
        let v = w.eval(&[&VectorField::basis(1), &VectorField::basis(0)]).unwrap();
        assert_eq!(v, Expr::int(-1));
        assert!(w.eval(&[&VectorField::basis(0)]).is_err());
    }

    #[test]
    fn render_round_trips() {
        let c = chart();
        let x = field("d/dx - (y/2)*d/dz + (x+1)/3*d/dy");
        let back = field(&x.render(&c));
        assert_eq!(back, x);
        assert_eq!(VectorField::zero().render(&c), "0");
    }
}
