//! Normalized contact form, Reeb field and dual coframe of a frame.

use std::collections::BTreeSet;

use sublorentz_expr::poly::Poly;
use sublorentz_expr::{is_zero, Expr, Truth};

use crate::calculus::{Form, VectorField};
use crate::error::CoreError;
use crate::frame::Frame;
use crate::matrix::{det, inverse3, solve3, Singularity};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContactApparatus {
    pub omega: Form,
    pub x0: VectorField,
    /// Rows dual to (X0, X1, X2).
    pub coframe: [Form; 3],
    /// Expressions whose zero sets are excluded from the domain.
    pub excluded: Vec<Expr>,
}

fn singular(s: Singularity, what: &str) -> CoreError {
    match s {
        Singularity::Singular => CoreError::SingularSystem(what.to_string()),
        Singularity::Undecided => CoreError::IndeterminateDomain(what.to_string()),
    }
}

fn rows(fields: &[&VectorField]) -> Vec<Vec<Expr>> {
    fields.iter().map(|f| f.0.to_vec()).collect()
}

/// The 1-form with `w(X1) = w(X2) = 0` and `dw(X1, X2) = w([X2, X1]) = 1`.
pub fn normalized_contact_form(frame: &Frame) -> Result<Form, CoreError> {
    let b = frame.bracket(&frame.x2, &frame.x1);
    let m = rows(&[&frame.x1, &frame.x2, &b]);
    match is_zero(&det(&m)) {
        Truth::True => return Err(CoreError::DegenerateFrame),
        Truth::Unknown => {
            return Err(CoreError::IndeterminateDomain(
                "det[X1, X2, [X2,X1]]".to_string(),
            ))
        }
        Truth::False => {}
    }
    let w = solve3(&m, &[Expr::zero(), Expr::zero(), Expr::one()])
        .map_err(|s| singular(s, "contact form system"))?;
    Ok(Form::one_form(w))
}

/// The unique field with `w(X0) = 1`, `dw(X0, X1) = dw(X0, X2) = 0`.
pub fn reeb_field(omega: &Form, frame: &Frame) -> Result<VectorField, CoreError> {
    let dw = omega.d(&frame.chart);
    let row = |x: &VectorField| -> Result<Vec<Expr>, CoreError> {
        (0..3)
            .map(|k| dw.eval(&[&VectorField::basis(k), x]))
            .collect()
    };
    let m = vec![omega.coefficients().to_vec(), row(&frame.x1)?, row(&frame.x2)?];
    let v = solve3(&m, &[Expr::one(), Expr::zero(), Expr::zero()])
        .map_err(|s| singular(s, "Reeb system"))?;
    Ok(VectorField(v))
}

/// Rows of the inverse of `[X0 | X1 | X2]`, so that `nu_i(X_j) = delta_ij`.
pub fn dual_coframe(
    x0: &VectorField,
    x1: &VectorField,
    x2: &VectorField,
) -> Result<[Form; 3], CoreError> {
    let cols = rows(&[x0, x1, x2]);
    let m = crate::matrix::transpose(&cols);
    let inv = inverse3(&m).map_err(|s| singular(s, "coframe matrix"))?;
    Ok(std::array::from_fn(|i| {
        Form::one_form(std::array::from_fn(|k| inv[i][k].clone()))
    }))
}

/// `det[X1 | X2 | [X1, X2]]` with positive leading coefficient.
pub fn contact_locus(frame: &Frame) -> Expr {
    let b = frame.bracket(&frame.x1, &frame.x2);
    let d = det(&rows(&[&frame.x1, &frame.x2, &b]));
    if d.leading_sign_negative() {
        -d
    } else {
        d
    }
}

/// Monic squarefree part: the zero set without multiplicities.
fn zero_set(p: &Poly) -> Poly {
    let g = p.gens().iter().fold(p.clone(), |g, x| g.gcd(&p.partial(x)));
    p.exact_div(&g).expect("gcd divides").monic()
}

fn denominators(e: &Expr, out: &mut BTreeSet<Expr>) {
    let den = e.denominator();
    if !den.is_constant() {
        out.insert(Expr::from_poly(zero_set(den)));
    }
}

/// Builds the full apparatus for a coordinate frame.
pub fn build_apparatus(frame: &Frame) -> Result<ContactApparatus, CoreError> {
    let omega = normalized_contact_form(frame)?;
    let x0 = reeb_field(&omega, frame)?;
    let coframe = dual_coframe(&x0, &frame.x1, &frame.x2)?;
    let mut loci = BTreeSet::new();
    for c in omega.coefficients() {
        denominators(c, &mut loci);
    }
    for c in x0.components() {
        denominators(c, &mut loci);
    }
    for nu in &coframe {
        for c in nu.coefficients() {
            denominators(c, &mut loci);
        }
    }
    let locus = contact_locus(frame);
    if !locus.numerator().is_constant() {
        loci.insert(Expr::from_poly(zero_set(locus.numerator())));
    }
    Ok(ContactApparatus {
        omega,
        x0,
        coframe,
        excluded: loci.into_iter().collect(),
    })
}

impl ContactApparatus {
    /// The seven defining identities, each as a named zero test.
    pub fn identity_checks(&self, frame: &Frame) -> Vec<(&'static str, Truth)> {
        let c = &frame.chart;
        let w = &self.omega;
        let dw = w.d(c);
        let eval2 = |a: &VectorField, b: &VectorField| dw.eval(&[a, b]).expect("2-form on 2 fields");
        let mut out = vec![
            ("omega(X1) = 0", is_zero(&w.pair(&frame.x1))),
            ("omega(X2) = 0", is_zero(&w.pair(&frame.x2))),
            (
                "domega(X1,X2) = 1",
                is_zero(&(&eval2(&frame.x1, &frame.x2) - &Expr::one())),
            ),
            ("omega(X0) = 1", is_zero(&(&w.pair(&self.x0) - &Expr::one()))),
            ("domega(X0,X1) = 0", is_zero(&eval2(&self.x0, &frame.x1))),
            ("domega(X0,X2) = 0", is_zero(&eval2(&self.x0, &frame.x2))),
        ];
        let fields = [&self.x0, &frame.x1, &frame.x2];
        let mut duality = Truth::True;
        for (i, nu) in self.coframe.iter().enumerate() {
            for (j, x) in fields.iter().enumerate() {
                let expected = if i == j { Expr::one() } else { Expr::zero() };
                duality = duality.and(is_zero(&(&nu.pair(x) - &expected)));
            }
        }
        out.push(("nu_i(X_j) = delta_ij", duality));
        out
    }

    /// `d nu0 - nu1 ^ nu2`, which vanishes identically.
    pub fn dnu0_residual(&self, frame: &Frame) -> Form {
        let c = &frame.chart;
        self.coframe[0]
            .d(c)
            .sub(&self.coframe[1].wedge(&self.coframe[2]))
    }
}
