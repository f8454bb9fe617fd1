//! Finite-dimensional Lie algebras given by structure constants.

use std::collections::BTreeMap;

use sublorentz_expr::{is_zero, parse_expr, Chart, Expr, Rat, Truth};

use crate::error::CoreError;
use crate::fixtures::KAPPA;
use crate::frame::AbstractStructure;
use crate::invariants::{analyze_abstract, Invariants, StructureFunctions};
use crate::matrix::{det, Matrix};

/// `[e_i, e_j] = sum_k c[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    pub name: String,
    pub labels: Vec<String>,
    pub params: Vec<String>,
    c: Vec<Vec<Vec<Expr>>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiResidual {
    pub indices: [usize; 3],
    pub component: usize,
    pub value: Expr,
}

/// Numbers of positive, negative and zero eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KillingData {
    pub matrix: Matrix,
    pub det: Expr,
    /// Present when every entry is a rational constant.
    pub inertia: Option<Inertia>,
}

fn param_chart(params: &[String], extra: &[String]) -> Result<Chart, CoreError> {
    Ok(Chart::standard().with_params(params.iter().chain(extra).cloned())?)
}

/// Splits a linear expression in `vars` into its coefficients, rejecting
/// anything nonlinear or non-constant.
fn linear_coefficients(e: &Expr, vars: &[String], params: &[String]) -> Result<Vec<Expr>, CoreError> {
    let coeffs: Vec<Expr> = vars.iter().map(|v| e.derivative(v)).collect();
    let mut rest = e.clone();
    for (v, c) in vars.iter().zip(&coeffs) {
        rest = &rest - &(c * &Expr::symbol(v));
        if let Some(s) = c.symbols().into_iter().find(|s| !params.iter().any(|p| p == s.as_ref())) {
            return Err(CoreError::NonConstant(format!("coefficient {c} depends on '{s}'")));
        }
    }
    if !rest.is_literal_zero() {
        return Err(CoreError::InvalidEquation(format!("'{e}' is not linear in the basis")));
    }
    Ok(coeffs)
}

impl LieAlgebra {
    /// The abelian algebra on the given labels.
    pub fn new(name: &str, labels: &[&str], params: &[&str]) -> LieAlgebra {
        let n = labels.len();
        LieAlgebra {
            name: name.to_string(),
            labels: labels.iter().map(|s| s.to_string()).collect(),
            params: params.iter().map(|s| s.to_string()).collect(),
            c: vec![vec![vec![Expr::zero(); n]; n]; n],
        }
    }

    /// Builds an algebra from entries `(a, b, rhs)` meaning `[a, b] = rhs`,
    /// with `rhs` a linear combination of labels such as `-k*e2`.
    pub fn from_brackets(
        name: &str,
        labels: &[&str],
        params: &[&str],
        table: &[(&str, &str, &str)],
    ) -> Result<LieAlgebra, CoreError> {
        let mut alg = LieAlgebra::new(name, labels, params);
        let chart = param_chart(&alg.params, &alg.labels)?;
        for (a, b, rhs) in table {
            let i = alg.index(a)?;
            let j = alg.index(b)?;
            let e = parse_expr(rhs, &chart)?;
            let coeffs = linear_coefficients(&e, &alg.labels, &alg.params)?;
            alg.set_bracket(i, j, coeffs)?;
        }
        Ok(alg)
    }

    pub fn index(&self, label: &str) -> Result<usize, CoreError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| CoreError::InvalidEquation(format!("unknown basis element '{label}'")))
    }

    /// Sets `[e_i, e_j]` and `[e_j, e_i]` together.
    pub fn set_bracket(&mut self, i: usize, j: usize, value: Vec<Expr>) -> Result<(), CoreError> {
        if i == j {
            return Err(CoreError::InvalidEquation(format!("[{0},{0}] must vanish", self.labels[i])));
        }
        self.c[j][i] = value.iter().map(|v| -v).collect();
        self.c[i][j] = value;
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Expr {
        &self.c[i][j][k]
    }

    pub fn bracket(&self, i: usize, j: usize) -> &[Expr] {
        &self.c[i][j]
    }

    /// Bracket of two coefficient vectors.
    pub fn bracket_vec(&self, u: &[Expr], v: &[Expr]) -> Vec<Expr> {
        let n = self.dim();
        let mut out = vec![Expr::zero(); n];
        for i in 0..n {
            if u[i].is_literal_zero() {
                continue;
            }
            for j in 0..n {
                if v[j].is_literal_zero() {
                    continue;
                }
                let f = &u[i] * &v[j];
                for k in 0..n {
                    if !self.c[i][j][k].is_literal_zero() {
                        out[k] = &out[k] + &(&f * &self.c[i][j][k]);
                    }
                }
            }
        }
        out
    }

    fn basis(&self, i: usize) -> Vec<Expr> {
        (0..self.dim())
            .map(|k| if k == i { Expr::one() } else { Expr::zero() })
            .collect()
    }

    /// Entries `c[i][j][k] + c[j][i][k]` that fail to vanish.
    pub fn antisymmetry_residuals(&self) -> Vec<([usize; 3], Expr)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    let r = &self.c[i][j][k] + &self.c[j][i][k];
                    if !r.is_literal_zero() {
                        out.push(([i, j, k], r));
                    }
                }
            }
        }
        out
    }

    /// Nonvanishing components of `[a,[b,c]] + [b,[c,a]] + [c,[a,b]]` over
    /// basis triples `a < b < c`.
    pub fn jacobi_residuals(&self) -> Vec<JacobiResidual> {
        let n = self.dim();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let (ea, eb, ec) = (self.basis(a), self.basis(b), self.basis(c));
                    let t1 = self.bracket_vec(&ea, &self.bracket_vec(&eb, &ec));
                    let t2 = self.bracket_vec(&eb, &self.bracket_vec(&ec, &ea));
                    let t3 = self.bracket_vec(&ec, &self.bracket_vec(&ea, &eb));
                    for k in 0..n {
                        let v = &(&t1[k] + &t2[k]) + &t3[k];
                        if is_zero(&v) != Truth::True {
                            out.push(JacobiResidual {
                                indices: [a, b, c],
                                component: k,
                                value: v,
                            });
                        }
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad_{e_i}`: entry `[k][j]` is `c[i][j][k]`.
    pub fn ad_matrix(&self, i: usize) -> Matrix {
        let n = self.dim();
        (0..n)
            .map(|k| (0..n).map(|j| self.c[i][j][k].clone()).collect())
            .collect()
    }

    /// `K(e_i, e_j) = tr(ad_i ad_j)`.
    pub fn killing_matrix(&self) -> Matrix {
        let n = self.dim();
        let ads: Vec<Matrix> = (0..n).map(|i| self.ad_matrix(i)).collect();
        let mut k = vec![vec![Expr::zero(); n]; n];
        for i in 0..n {
            for j in i..n {
                let mut tr = Expr::zero();
                for a in 0..n {
                    for b in 0..n {
                        if !ads[i][a][b].is_literal_zero() && !ads[j][b][a].is_literal_zero() {
                            tr = &tr + &(&ads[i][a][b] * &ads[j][b][a]);
                        }
                    }
                }
                k[i][j] = tr.clone();
                k[j][i] = tr;
            }
        }
        k
    }

    pub fn killing_form(&self) -> KillingData {
        let matrix = self.killing_matrix();
        KillingData {
            det: det(&matrix),
            inertia: inertia(&matrix),
            matrix,
        }
    }

    /// Nonvanishing `K([x,y],z) + K(y,[x,z])` over basis triples.
    pub fn ad_invariance_residuals(&self, k: &Matrix) -> Vec<([usize; 3], Expr)> {
        let n = self.dim();
        let form = |u: &[Expr], v: &[Expr]| -> Expr {
            let mut acc = Expr::zero();
            for i in 0..n {
                for j in 0..n {
                    if !u[i].is_literal_zero() && !v[j].is_literal_zero() {
                        acc = &acc + &(&(&u[i] * &k[i][j]) * &v[j]);
                    }
                }
            }
            acc
        };
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (ex, ey, ez) = (self.basis(x), self.basis(y), self.basis(z));
                    let r = &form(&self.bracket_vec(&ex, &ey), &ez) + &form(&ey, &self.bracket_vec(&ex, &ez));
                    if is_zero(&r) != Truth::True {
                        out.push(([x, y, z], r));
                    }
                }
            }
        }
        out
    }

    /// Whether the linear map with columns `t[.][j] = T(e_j)` preserves
    /// all brackets.
    pub fn is_automorphism(&self, t: &Matrix) -> Truth {
        let n = self.dim();
        let image = |v: &[Expr]| -> Vec<Expr> {
            (0..n)
                .map(|r| (0..n).map(|c| &t[r][c] * &v[c]).sum())
                .collect()
        };
        let col = |j: usize| -> Vec<Expr> { (0..n).map(|r| t[r][j].clone()).collect() };
        let mut verdict = Truth::True;
        for i in 0..n {
            for j in i + 1..n {
                let lhs = image(&self.c[i][j]);
                let rhs = self.bracket_vec(&col(i), &col(j));
                for k in 0..n {
                    verdict = verdict.and(is_zero(&(&lhs[k] - &rhs[k])));
                }
            }
        }
        verdict
    }

    /// Replaces a parameter by a value.
    pub fn with_param(&self, name: &str, value: &Expr) -> Result<LieAlgebra, CoreError> {
        let bindings = BTreeMap::from([(name.to_string(), value.clone())]);
        let mut out = self.clone();
        for plane in &mut out.c {
            for row in plane {
                for v in row {
                    *v = v.substitute(&bindings)?;
                }
            }
        }
        out.params.retain(|p| p != name);
        Ok(out)
    }

    /// Nonzero brackets `[e_i, e_j]` with `i < j`, rendered.
    pub fn bracket_table(&self) -> Vec<(String, String)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.c[i][j].iter().all(|v| v.is_literal_zero()) {
                    continue;
                }
                out.push((
                    format!("[{},{}]", self.labels[i], self.labels[j]),
                    render_combination(&self.c[i][j], &self.labels),
                ));
            }
        }
        out
    }
}

/// Renders `sum c_k label_k`.
pub fn render_combination(c: &[Expr], labels: &[String]) -> String {
    let mut out = String::new();
    for (v, l) in c.iter().zip(labels) {
        if v.is_literal_zero() {
            continue;
        }
        let (neg, mag) = if v.leading_sign_negative() { (true, -v) } else { (false, v.clone()) };
        let term = if mag.is_one() {
            l.clone()
        } else {
            let s = mag.to_string();
            if s.contains(' ') {
                format!("({s})*{l}")
            } else {
                format!("{s}*{l}")
            }
        };
        match (out.is_empty(), neg) {
            (true, false) => out.push_str(&term),
            (true, true) => out.push_str(&format!("-{term}")),
            (false, false) => out.push_str(&format!(" + {term}")),
            (false, true) => out.push_str(&format!(" - {term}")),
        }
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

/// Exact inertia of a symmetric matrix with rational entries, by
/// congruence diagonalization.
pub fn inertia(m: &Matrix) -> Option<Inertia> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m
        .iter()
        .map(|row| row.iter().map(|v| v.as_rational()).collect::<Option<Vec<_>>>())
        .collect::<Option<_>>()?;
    let zero = Rat::from_integer(0.into());
    let mut diag = Vec::with_capacity(n);
    for k in 0..n {
        if a[k][k] == zero {
            if let Some(p) = (k + 1..n).find(|&p| a[p][p] != zero) {
                a.swap(k, p);
                for row in a.iter_mut() {
                    row.swap(k, p);
                }
            } else if let Some(p) = (k + 1..n).find(|&p| a[k][p] != zero) {
                // e_k <- e_k + e_p gives diagonal 2 a_kp
                for c in 0..n {
                    let v = a[p][c].clone();
                    a[k][c] += v;
                }
                for r in 0..n {
                    let v = a[r][p].clone();
                    a[r][k] += v;
                }
            }
        }
        let pivot = a[k][k].clone();
        diag.push(pivot.clone());
        if pivot == zero {
            continue;
        }
        for r in k + 1..n {
            if a[r][k] == zero {
                continue;
            }
            let f = &a[r][k] / &pivot;
            for c in k..n {
                let v = &f * &a[k][c];
                a[r][c] -= v;
            }
            for c in k..n {
                let v = &f * &a[c][k];
                a[c][r] -= v;
            }
        }
    }
    Some(Inertia {
        positive: diag.iter().filter(|d| **d > zero).count(),
        negative: diag.iter().filter(|d| **d < zero).count(),
        zero: diag.iter().filter(|d| **d == zero).count(),
    })
}

/// Replaces every `A^B` with `A`, `B` basis labels by a placeholder symbol
/// and records the index pair.
fn replace_wedges(rhs: &str, labels: &[String]) -> Result<(String, Vec<(String, usize, usize)>), CoreError> {
    let chars: Vec<char> = rhs.chars().collect();
    let ident_at = |start: usize| -> (String, usize) {
        let mut end = start;
        while end < chars.len() && (chars[end].is_alphanumeric() || chars[end] == '_') {
            end += 1;
        }
        (chars[start..end].iter().collect(), end)
    };
    let skip_ws = |mut i: usize| {
        while i < chars.len() && chars[i].is_whitespace() {
            i += 1;
        }
        i
    };
    let mut out = String::new();
    let mut wedges = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        if !(ch.is_alphabetic() || ch == '_') {
            if ch.is_ascii_digit() {
                let (num, end) = ident_at(i);
                out.push_str(&num);
                i = end;
            } else {
                out.push(ch);
                i += 1;
            }
            continue;
        }
        let (name, end) = ident_at(i);
        let Some(a) = labels.iter().position(|l| *l == name) else {
            out.push_str(&name);
            i = end;
            continue;
        };
        let caret = skip_ws(end);
        if caret >= chars.len() || chars[caret] != '^' {
            return Err(CoreError::InvalidEquation(format!("'{name}' must appear in a wedge product")));
        }
        let start = skip_ws(caret + 1);
        let (other, end2) = ident_at(start);
        let Some(b) = labels.iter().position(|l| *l == other) else {
            return Err(CoreError::InvalidEquation(format!("'{name}^{other}' is not a wedge of basis forms")));
        };
        if a == b {
            return Err(CoreError::InvalidEquation(format!("'{name}^{name}' vanishes identically")));
        }
        let sym = format!("wedge_{a}_{b}");
        out.push_str(&sym);
        wedges.push((sym, a, b));
        i = end2;
    }
    Ok((out, wedges))
}

/// Lie algebra dual to a constant coframe with the given exterior
/// derivatives. Each line reads `dA = c*B^C + ...`; with
/// `dw(X, Y) = -w([X, Y])` the constants are `c^k_ij = -coefficient of
/// w^i ^ w^j in dw^k`.
pub fn dualize_structure_equations(
    name: &str,
    labels: &[&str],
    params: &[&str],
    equations: &str,
) -> Result<LieAlgebra, CoreError> {
    let mut alg = LieAlgebra::new(name, labels, params);
    let n = alg.dim();
    for line in equations.lines().map(str::trim).filter(|l| !l.is_empty()) {
        let (lhs, rhs) = line
            .split_once('=')
            .ok_or_else(|| CoreError::InvalidEquation(format!("missing '=' in '{line}'")))?;
        let k = lhs
            .trim()
            .strip_prefix('d')
            .ok_or_else(|| CoreError::InvalidEquation(format!("left side '{lhs}' must read dA")))
            .and_then(|l| alg.index(l.trim()))?;
        let (text, wedges) = replace_wedges(rhs, &alg.labels)?;
        let syms: Vec<String> = {
            let mut s: Vec<String> = wedges.iter().map(|w| w.0.clone()).collect();
            s.sort();
            s.dedup();
            s
        };
        let chart = param_chart(&alg.params, &syms)?;
        let e = parse_expr(&text, &chart)?;
        let coeffs = linear_coefficients(&e, &syms, &alg.params)?;
        for (sym, coef) in syms.iter().zip(coeffs) {
            let (_, i, j) = wedges.iter().find(|w| &w.0 == sym).expect("symbol recorded");
            let (i, j) = (*i, *j);
            alg.c[i][j][k] = &alg.c[i][j][k] - &coef;
            alg.c[j][i][k] = &alg.c[j][i][k] + &coef;
        }
    }
    debug_assert!(alg.c.iter().all(|p| p.len() == n));
    Ok(alg)
}

pub const CONFORMAL_LABELS: [&str; 8] = ["T1", "T2", "T3", "P1", "P2", "P3", "P4", "O"];

/// Structure equations of the conformal symmetry group.
pub const CONFORMAL_EQUATIONS: &str = "
dT1 = P1^T1 + P2^T2 + P3^T3
dT2 = P1^T2 + P2^T1 + P4^T3
dT3 = 2*P1^T3 - T1^T2
dP1 = 1/2*P4^T1 - 1/2*P3^T2 - O^T3
dP2 = 3/2*P4^T2 - 3/2*P3^T1
dP3 = P3^P1 - P4^P2 - O^T1
dP4 = P4^P1 - P3^P2 - O^T2
dO = 2*O^P1 - P4^P3
";

pub const ISOMETRY_LABELS: [&str; 4] = ["T1", "T2", "T3", "Pi"];

/// Structure equations of the isometry group, with curvature `k`.
pub const ISOMETRY_EQUATIONS: &str = "
dT1 = Pi^T2
dT2 = Pi^T1
dT3 = T2^T1
dPi = k*T2^T1
";

/// The Killing matrix of the conformal algebra used as reference, in the basis
/// dual to (T1, T2, T3, P1, P2, P3, P4, O).
pub fn reference_conformal_killing() -> Matrix {
    let mut k = vec![vec![Expr::zero(); 8]; 8];
    for (i, j, v) in [(0, 6, -7), (1, 5, 6), (2, 7, 6), (3, 3, 12), (4, 4, 4)] {
        k[i][j] = Expr::int(v);
        k[j][i] = Expr::int(v);
    }
    k
}

pub const REFERENCE_CONFORMAL_KILLING_DET: i64 = -3048192;

pub const CATALOG: [&str; 6] = ["heisenberg", "sl2_e", "sl2_n", "sl2_f", "isometry4", "conformal8"];

pub fn catalog_algebra(name: &str) -> Result<LieAlgebra, CoreError> {
    let e3 = ["e0", "e1", "e2"];
    match name {
        "heisenberg" => LieAlgebra::from_brackets(name, &e3, &[], &[("e2", "e1", "e0")]),
        "sl2_e" => LieAlgebra::from_brackets(
            name,
            &e3,
            &[KAPPA],
            &[("e2", "e1", "e0"), ("e1", "e0", "-k*e2"), ("e2", "e0", "-k*e1")],
        ),
        "sl2_n" => LieAlgebra::from_brackets(
            name,
            &["n0", "n1", "n2"],
            &[KAPPA],
            &[("n2", "n1", "n0"), ("n1", "n0", "k*n1"), ("n2", "n0", "-k*n2")],
        ),
        "sl2_f" => LieAlgebra::from_brackets(
            name,
            &["f0", "f1", "f2"],
            &[],
            &[("f2", "f1", "f0"), ("f1", "f0", "f2"), ("f2", "f0", "f1")],
        ),
        "isometry4" => LieAlgebra::from_brackets(
            name,
            &["e1", "e2", "e3", "e4"],
            &[],
            &[("e1", "e2", "e3"), ("e4", "e1", "e2"), ("e4", "e2", "e1")],
        ),
        "conformal8" => dualize_structure_equations(name, &CONFORMAL_LABELS, &[], CONFORMAL_EQUATIONS),
        _ => Err(CoreError::UnknownAlgebra(name.to_string())),
    }
}

/// Basis roles (X1, X2, X0) for the three-dimensional catalog entries that
/// carry a contact marking.
pub fn default_marking(name: &str) -> Option<[usize; 3]> {
    match name {
        "heisenberg" | "sl2_e" | "sl2_n" | "sl2_f" => Some([1, 2, 0]),
        _ => None,
    }
}

/// Reads the structure functions off a marked three-dimensional algebra
/// and computes its invariants.
pub fn constant_mode_invariants(
    alg: &LieAlgebra,
    marked: [usize; 3],
) -> Result<(StructureFunctions, Invariants), CoreError> {
    if alg.dim() != 3 {
        return Err(CoreError::BracketPatternViolation(format!(
            "dimension {} instead of 3",
            alg.dim()
        )));
    }
    let [x1, x2, x0] = marked;
    let coeff = |i: usize, j: usize, k: usize| alg.structure_constant(i, j, k).clone();
    let label = |i: usize| &alg.labels[i];
    for (a, b) in [(x1, x0), (x2, x0)] {
        let v = coeff(a, b, x0);
        if is_zero(&v) != Truth::True {
            return Err(CoreError::BracketPatternViolation(format!(
                "[{},{}] has {} coefficient {v}",
                label(a),
                label(b),
                label(x0)
            )));
        }
    }
    let v = coeff(x2, x1, x0);
    if is_zero(&(&v - &Expr::one())) != Truth::True {
        return Err(CoreError::BracketPatternViolation(format!(
            "[{},{}] has {} coefficient {v}",
            label(x2),
            label(x1),
            label(x0)
        )));
    }
    let sf = StructureFunctions {
        c011: coeff(x1, x0, x1),
        c012: coeff(x1, x0, x2),
        c021: coeff(x2, x0, x1),
        c022: coeff(x2, x0, x2),
        c121: coeff(x2, x1, x1),
        c122: coeff(x2, x1, x2),
    };
    let st = AbstractStructure::new(alg.params.clone(), sf)?;
    let inv = analyze_abstract(&st)?;
    Ok((st.sf, inv))
}

/// The checkable conditions identifying an 8-dimensional algebra as sl3:
/// dimension, Jacobi, nondegenerate Killing form and split inertia.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl3Evidence {
    pub dimension: usize,
    pub jacobi: bool,
    pub det_nonzero: bool,
    pub inertia: Option<Inertia>,
}

impl Sl3Evidence {
    pub fn holds(&self) -> bool {
        self.dimension == 8
            && self.jacobi
            && self.det_nonzero
            && self.inertia
                == Some(Inertia {
                    positive: 5,
                    negative: 3,
                    zero: 0,
                })
    }
}

pub fn sl3_evidence(alg: &LieAlgebra) -> Sl3Evidence {
    let k = alg.killing_form();
    Sl3Evidence {
        dimension: alg.dim(),
        jacobi: alg.jacobi_residuals().is_empty(),
        det_nonzero: is_zero(&k.det) == Truth::False,
        inertia: k.inertia,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k() -> Expr {
        Expr::symbol(KAPPA)
    }

    #[test]
    fn sl2_killing_values() {
        let alg = catalog_algebra("sl2_e").unwrap();
        assert!(alg.jacobi_residuals().is_empty());
        let km = alg.killing_matrix();
        assert_eq!(km[1][1], &Expr::int(2) * &k());
        assert_eq!(km[2][2], &Expr::int(-2) * &k());
        assert_eq!(km[0][0], &Expr::int(2) * &(&k() * &k()));
        assert!(km[0][1].is_literal_zero() && km[1][2].is_literal_zero());
        assert!(alg.ad_invariance_residuals(&km).is_empty());
    }

    #[test]
    fn heisenberg_is_nilpotent() {
        let alg = catalog_algebra("heisenberg").unwrap();
        assert!(alg.killing_matrix().iter().flatten().all(|v| v.is_literal_zero()));
        let (sf, inv) = constant_mode_invariants(&alg, [1, 2, 0]).unwrap();
        assert_eq!(sf, StructureFunctions::zero());
        assert!(inv.chi.is_literal_zero() && inv.kappa.is_literal_zero());
    }

    #[test]
    fn single_equation_dualizes_to_heisenberg() {
        let alg = dualize_structure_equations("h", &["e0", "e1", "e2"], &[], "de0 = e1^e2").unwrap();
        assert_eq!(alg, catalog_algebra("heisenberg").unwrap().renamed("h"));
    }

    impl LieAlgebra {
        fn renamed(mut self, name: &str) -> LieAlgebra {
            self.name = name.to_string();
            self
        }
    }

    #[test]
    fn dualization_reproduces_structure_function_brackets() {
        // dnu1 = c011 nu0^nu1 + ..., dnu2 = ..., with sample constants
        let eqs = "
            dX0 = X1^X2
            dX1 = 2*X0^X1 + 3*X0^X2 + 5*X1^X2
            dX2 = 7*X0^X1 - 2*X0^X2 + 11*X1^X2
        ";
        let alg = dualize_structure_equations("s", &["X0", "X1", "X2"], &[], eqs).unwrap();
        let (sf, _) = constant_mode_invariants(&alg, [1, 2, 0]).unwrap();
        let ints = |v: [i64; 6]| StructureFunctions::from_array(v.map(Expr::int));
        assert_eq!(sf, ints([2, 7, 3, -2, 5, 11]));
    }

    #[test]
    fn sl2_f_automorphism_and_form() {
        let alg = catalog_algebra("sl2_f").unwrap();
        let km = alg.killing_matrix();
        let b: Vec<Expr> = (0..3).map(|i| km[i][i].scale(&Rat::new(1.into(), 2.into()))).collect();
        assert_eq!(b, vec![Expr::int(1), Expr::int(-1), Expr::int(1)]);
        let i = |v: i64| Expr::int(v);
        // T f0 = f2, T f1 = -f1, T f2 = f0; columns are images
        let t = vec![vec![i(0), i(0), i(1)], vec![i(0), i(-1), i(0)], vec![i(1), i(0), i(0)]];
        assert_eq!(alg.is_automorphism(&t), Truth::True);
        let tkt = crate::matrix::mul(&crate::matrix::mul(&crate::matrix::transpose(&t), &km), &t);
        assert_eq!(tkt, km);
    }

    #[test]
    fn marking_violations() {
        let alg = catalog_algebra("sl2_e").unwrap();
        assert!(matches!(
            constant_mode_invariants(&alg, [0, 1, 2]),
            Err(CoreError::BracketPatternViolation(_))
        ));
        let alg4 = catalog_algebra("isometry4").unwrap();
        assert!(constant_mode_invariants(&alg4, [0, 1, 2]).is_err());
    }

    #[test]
    fn jacobi_negative_control() {
        let mut alg = catalog_algebra("isometry4").unwrap();
        assert!(alg.jacobi_residuals().is_empty());
        let mut v = alg.bracket(0, 1).to_vec();
        v[0] = Expr::int(1);
        alg.set_bracket(0, 1, v).unwrap();
        assert!(!alg.jacobi_residuals().is_empty());
    }

    #[test]
    fn inertia_of_small_forms() {
        let i = |v: i64| Expr::int(v);
        let hyperbolic = vec![vec![i(0), i(1)], vec![i(1), i(0)]];
        assert_eq!(
            inertia(&hyperbolic),
            Some(Inertia {
                positive: 1,
                negative: 1,
                zero: 0
            })
        );
        let reference = reference_conformal_killing();
        assert_eq!(det(&reference), Expr::int(REFERENCE_CONFORMAL_KILLING_DET));
        assert_eq!(
            inertia(&reference),
            Some(Inertia {
                positive: 5,
                negative: 3,
                zero: 0
            })
        );
    }

    #[test]
    fn combination_rendering() {
        let labels: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        assert_eq!(render_combination(&[Expr::int(-1), Expr::int(0), -k()], &labels), "-a - k*c");
        assert_eq!(render_combination(&[Expr::zero(), Expr::zero(), Expr::zero()], &labels), "0");
    }
}
