//! Contact sub-Lorentzian structure of a second-order ODE `u'' = Q(x, u, p)`.

use sublorentz_expr::{is_zero, parse_expr, Chart, Expr, Truth};

use crate::calculus::{Form, VectorField};
use crate::error::CoreError;
use crate::frame::Frame;
use crate::invariants::metric_norm;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OdeStructure {
    pub q: Expr,
    /// `du - p dx`, `dp - Q dx`, `dx`.
    pub forms: [Form; 3],
    /// Total-derivative field `d/dx + p d/du + Q d/dp`.
    pub n1: VectorField,
    /// `d/dp`.
    pub n2: VectorField,
    /// Representative `X1 = (N1 + N2)/2`, `X2 = (N1 - N2)/2`.
    pub frame: Frame,
}

/// Chart (x, u, p).
pub fn ode_chart() -> Chart {
    Chart::new(["x", "u", "p"], []).expect("valid chart")
}

pub fn parse_ode(q: &str) -> Result<OdeStructure, CoreError> {
    let chart = ode_chart();
    Ok(build_from_ode(parse_expr(q, &chart)?))
}

pub fn build_from_ode(q: Expr) -> OdeStructure {
    let chart = ode_chart();
    let p = Expr::symbol("p");
    let forms = [
        Form::one_form([-&p, Expr::one(), Expr::zero()]),
        Form::one_form([-&q, Expr::zero(), Expr::one()]),
        Form::dx(0),
    ];
    let n1 = VectorField::new(Expr::one(), p, q.clone());
    let n2 = VectorField::basis(2);
    let half = Expr::frac(1, 2);
    let frame = Frame {
        chart,
        x1: n1.add(&n2).scale(&half),
        x2: n1.sub(&n2).scale(&half),
    };
    OdeStructure {
        q,
        forms,
        n1,
        n2,
        frame,
    }
}

impl OdeStructure {
    /// The null-line assertions, each as a named zero test.
    pub fn verify_null_bundles(&self) -> Vec<(&'static str, Truth)> {
        let [w1, w2, w3] = &self.forms;
        let (x1, x2) = (&self.frame.x1, &self.frame.x2);
        let sum = x1.add(x2);
        let diff = x1.sub(x2);
        let one = Expr::one();
        let contact = w1.wedge(&w1.d(&self.frame.chart));
        vec![
            ("omega1(X1) = 0", is_zero(&w1.pair(x1))),
            ("omega1(X2) = 0", is_zero(&w1.pair(x2))),
            ("X1 + X2 = N1", sum.sub(&self.n1).is_zero()),
            ("X1 - X2 = N2", diff.sub(&self.n2).is_zero()),
            ("omega1(N1) = omega2(N1) = 0", is_zero(&w1.pair(&self.n1)).and(is_zero(&w2.pair(&self.n1)))),
            ("omega1(N2) = omega3(N2) = 0", is_zero(&w1.pair(&self.n2)).and(is_zero(&w3.pair(&self.n2)))),
            ("g(X1 + X2, X1 + X2) = 0", is_zero(&metric_norm(&[one.clone(), one.clone()]))),
            ("g(X1 - X2, X1 - X2) = 0", is_zero(&metric_norm(&[one.clone(), -&one]))),
            ("omega1 ^ domega1 != 0", contact.is_zero().not()),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::analyze_frame;

    #[test]
    fn free_particle_frame() {
        let s = parse_ode("0").unwrap();
        let c = ode_chart();
        let expected = Frame::parse(c.clone(), "(1/2)*d/dx + (p/2)*d/du + (1/2)*d/dp", "(1/2)*d/dx + (p/2)*d/du - (1/2)*d/dp").unwrap();
        assert_eq!(s.frame, expected);
        assert!(s.verify_null_bundles().iter().all(|(_, t)| t.is_true()));
        let (_, _, inv) = analyze_frame(&s.frame).unwrap();
        assert!(inv.kappa.is_constant());
    }

    #[test]
    fn rigid_example_completes() {
        let s = parse_ode("(1 + 2*x)*exp(u) + (x + x^2)*exp(u)*p").unwrap();
        assert!(s.verify_null_bundles().iter().all(|(_, t)| t.is_true()));
        analyze_frame(&s.frame).unwrap();
    }
}
