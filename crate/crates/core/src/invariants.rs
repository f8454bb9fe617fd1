//! Structure functions, the invariants h~, chi, kappa and their laws.

use std::fmt;

use sublorentz_expr::{is_zero, Expr, Truth};

use crate::calculus::Form;
use crate::contact::{build_apparatus, ContactApparatus};
use crate::error::CoreError;
use crate::frame::{AbstractStructure, Frame};

pub type Mat2 = [[Expr; 2]; 2];

/// Coefficients of the frame brackets:
/// `[X1,X0] = c011 X1 + c012 X2`, `[X2,X0] = c021 X1 + c022 X2`,
/// `[X2,X1] = c121 X1 + c122 X2 + X0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureFunctions {
    pub c011: Expr,
    pub c012: Expr,
    pub c021: Expr,
    pub c022: Expr,
    pub c121: Expr,
    pub c122: Expr,
}

impl StructureFunctions {
    pub const NAMES: [&'static str; 6] = ["c011", "c012", "c021", "c022", "c121", "c122"];

    pub fn from_array(c: [Expr; 6]) -> StructureFunctions {
        let [c011, c012, c021, c022, c121, c122] = c;
        StructureFunctions {
            c011,
            c012,
            c021,
            c022,
            c121,
            c122,
        }
    }

    pub fn zero() -> StructureFunctions {
        StructureFunctions::from_array(std::array::from_fn(|_| Expr::zero()))
    }

    pub fn as_array(&self) -> [&Expr; 6] {
        [
            &self.c011, &self.c012, &self.c021, &self.c022, &self.c121, &self.c122,
        ]
    }

    /// `c011 + c022`, which must vanish.
    pub fn trace(&self) -> Expr {
        &self.c011 + &self.c022
    }

    /// Half the antisymmetric part, `(c021 - c012) / 2`.
    fn half_skew(&self) -> Expr {
        (&self.c021 - &self.c012).scale(&half())
    }
}

fn half() -> sublorentz_expr::Rat {
    sublorentz_expr::Rat::new(1.into(), 2.into())
}

/// Where derivatives of scalar functions come from.
#[derive(Clone, Copy)]
pub enum Setting<'a> {
    Coordinate {
        frame: &'a Frame,
        apparatus: &'a ContactApparatus,
    },
    /// Constant structure functions; every derivative vanishes.
    Abstract,
}

impl Setting<'_> {
    /// `X_i(f)` for `i` in {0, 1, 2}.
    pub fn apply(&self, i: usize, f: &Expr) -> Expr {
        match self {
            Setting::Abstract => Expr::zero(),
            Setting::Coordinate { frame, apparatus } => {
                let x = match i {
                    0 => &apparatus.x0,
                    1 => &frame.x1,
                    2 => &frame.x2,
                    _ => panic!("frame index {i}"),
                };
                frame.apply(x, f)
            }
        }
    }
}

fn require_zero(e: &Expr, what: &str) -> Result<bool, CoreError> {
    match is_zero(e) {
        Truth::True => Ok(true),
        Truth::False => Ok(false),
        Truth::Unknown => Err(CoreError::Indeterminate(format!("{what}: {e}"))),
    }
}

/// Expands the frame brackets in the frame (X0, X1, X2) via the coframe.
pub fn structure_functions(
    frame: &Frame,
    apparatus: &ContactApparatus,
) -> Result<StructureFunctions, CoreError> {
    let x0 = &apparatus.x0;
    let [nu0, nu1, nu2] = &apparatus.coframe;
    let b10 = frame.bracket(&frame.x1, x0);
    let b20 = frame.bracket(&frame.x2, x0);
    let b21 = frame.bracket(&frame.x2, &frame.x1);
    for (name, b) in [("[X1,X0]", &b10), ("[X2,X0]", &b20)] {
        let v = nu0.pair(b);
        if !require_zero(&v, &format!("X0 component of {name}"))? {
            return Err(CoreError::NonHorizontalBracket {
                bracket: name.to_string(),
                component: v.to_string(),
            });
        }
    }
    let v = &nu0.pair(&b21) - &Expr::one();
    if !require_zero(&v, "X0 coefficient of [X2,X1] minus one")? {
        return Err(CoreError::BracketPatternViolation(format!(
            "[X2,X1] has X0 coefficient {}",
            nu0.pair(&b21)
        )));
    }
    let sf = StructureFunctions {
        c011: nu1.pair(&b10),
        c012: nu2.pair(&b10),
        c021: nu1.pair(&b20),
        c022: nu2.pair(&b20),
        c121: nu1.pair(&b21),
        c122: nu2.pair(&b21),
    };
    check_trace(&sf)?;
    Ok(sf)
}

pub fn check_trace(sf: &StructureFunctions) -> Result<(), CoreError> {
    let t = sf.trace();
    if require_zero(&t, "c011 + c022")? {
        Ok(())
    } else {
        Err(CoreError::TraceViolation(t.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invariants {
    /// Operator matrix in the basis (X1, X2).
    pub h_tilde: Mat2,
    /// The symmetric bilinear form `g(h~ v, w)`.
    pub h_bar: Mat2,
    pub chi: Expr,
    pub kappa: Expr,
}

pub fn h_tilde(sf: &StructureFunctions) -> Mat2 {
    let b = sf.half_skew();
    [[sf.c011.clone(), b.clone()], [-b, sf.c022.clone()]]
}

/// Metric sign flip of the first row of h~: `g = diag(-1, 1)`.
pub fn h_bar(sf: &StructureFunctions) -> Mat2 {
    let b = sf.half_skew();
    [[-&sf.c011, -&b], [-b, sf.c022.clone()]]
}

pub fn chi(sf: &StructureFunctions) -> Expr {
    let b = sf.half_skew();
    &(&b * &b) - &(&sf.c011 * &sf.c011)
}

pub fn kappa(sf: &StructureFunctions, setting: &Setting) -> Expr {
    let derivs = &setting.apply(2, &sf.c121) + &setting.apply(1, &sf.c122);
    let squares = &(&sf.c122 * &sf.c122) - &(&sf.c121 * &sf.c121);
    let sym = (&sf.c012 + &sf.c021).scale(&half());
    &(&derivs + &squares) - &sym
}

pub fn compute_invariants(sf: &StructureFunctions, setting: &Setting) -> Invariants {
    Invariants {
        h_tilde: h_tilde(sf),
        h_bar: h_bar(sf),
        chi: chi(sf),
        kappa: kappa(sf, setting),
    }
}

pub fn mat2_is_zero(m: &Mat2) -> Truth {
    Truth::all(m.iter().flatten().map(is_zero))
}

pub fn mat2_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    std::array::from_fn(|i| std::array::from_fn(|j| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j])))
}

pub fn mat2_scale(a: &Mat2, f: &Expr) -> Mat2 {
    std::array::from_fn(|i| std::array::from_fn(|j| f * &a[i][j]))
}

pub fn mat2_sub(a: &Mat2, b: &Mat2) -> Mat2 {
    std::array::from_fn(|i| std::array::from_fn(|j| &a[i][j] - &b[i][j]))
}

impl Invariants {
    pub fn h_tilde_is_zero(&self) -> Truth {
        mat2_is_zero(&self.h_tilde)
    }
}

/// Result of the eta-form identity check for structures with h~ = 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaCheck {
    /// Coefficients of eta on (nu0, nu1, nu2).
    pub eta: [Expr; 3],
    /// eta in coordinates, when a chart is available.
    pub eta_form: Option<Form>,
    /// Components of `d eta - d kappa ^ nu0`.
    pub residual: Vec<Expr>,
    /// The two first-order identities between c, c121, c122.
    pub first_order: [Expr; 2],
    pub holds: Truth,
}

/// `d(sum a_k nu_k)` for constant `a_k` on the (nu0^nu1, nu0^nu2, nu1^nu2)
/// basis, from the coframe structure equations.
pub fn abstract_d(a: &[Expr; 3], sf: &StructureFunctions) -> [Expr; 3] {
    let dnu = [
        [Expr::zero(), Expr::zero(), Expr::one()],
        [sf.c011.clone(), sf.c021.clone(), sf.c121.clone()],
        [sf.c012.clone(), sf.c022.clone(), sf.c122.clone()],
    ];
    std::array::from_fn(|j| (0..3).map(|k| &a[k] * &dnu[k][j]).sum())
}

pub fn eta_check(
    sf: &StructureFunctions,
    inv: &Invariants,
    setting: &Setting,
) -> Result<EtaCheck, CoreError> {
    match inv.h_tilde_is_zero() {
        Truth::True => {}
        Truth::False => return Err(CoreError::HTildeNonzero),
        Truth::Unknown => return Err(CoreError::Indeterminate("h~ = 0".into())),
    }
    let c = sf.c021.clone();
    let eta = [&inv.kappa + &c, sf.c121.clone(), -&sf.c122];
    let first_order = [
        &(&(-setting.apply(1, &c)) - &(&c * &sf.c122)) + &setting.apply(0, &sf.c121),
        &(&setting.apply(2, &c) - &(&c * &sf.c121)) + &setting.apply(0, &sf.c122),
    ];
    let (eta_form, residual) = match setting {
        Setting::Abstract => (None, abstract_d(&eta, sf).to_vec()),
        Setting::Coordinate { frame, apparatus } => {
            let chart = &frame.chart;
            let [nu0, nu1, nu2] = &apparatus.coframe;
            let form = nu0
                .scale(&eta[0])
                .add(&nu1.scale(&eta[1]))
                .add(&nu2.scale(&eta[2]));
            let dk = Form::function(inv.kappa.clone()).d(chart);
            let r = form.d(chart).sub(&dk.wedge(nu0));
            (Some(form), r.coefficients().to_vec())
        }
    };
    let holds = Truth::all(residual.iter().chain(first_order.iter()).map(is_zero));
    Ok(EtaCheck {
        eta,
        eta_form,
        residual,
        first_order,
        holds,
    })
}

/// Kernel direction of h~ when chi = 0 and h~ != 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NullKernel {
    /// Coefficients (a, b) of the direction a X1 + b X2.
    Direction([Expr; 2]),
    None(&'static str),
}

pub fn null_kernel_bundle(sf: &StructureFunctions, inv: &Invariants) -> Result<NullKernel, CoreError> {
    match is_zero(&inv.chi) {
        Truth::Unknown => return Err(CoreError::Indeterminate("chi = 0".into())),
        Truth::False => return Ok(NullKernel::None("chi is not zero")),
        Truth::True => {}
    }
    match inv.h_tilde_is_zero() {
        Truth::Unknown => return Err(CoreError::Indeterminate("h~ = 0".into())),
        Truth::True => return Ok(NullKernel::None("h~ is zero")),
        Truth::False => {}
    }
    let b = sf.half_skew();
    if require_zero(&(&sf.c011 - &b), "c011 - (c021 - c012)/2")? {
        return Ok(NullKernel::Direction([Expr::one(), Expr::int(-1)]));
    }
    if require_zero(&(&sf.c011 + &b), "c011 + (c021 - c012)/2")? {
        return Ok(NullKernel::Direction([Expr::one(), Expr::one()]));
    }
    // chi = 0 forces one of the branches; reaching here means the trace
    // condition failed upstream
    Err(CoreError::TraceViolation(sf.trace().to_string()))
}

/// `g(v, v)` for v = a X1 + b X2.
pub fn metric_norm(v: &[Expr; 2]) -> Expr {
    &(&v[1] * &v[1]) - &(&v[0] * &v[0])
}

pub fn apply_mat2(m: &Mat2, v: &[Expr; 2]) -> [Expr; 2] {
    std::array::from_fn(|i| &(&m[i][0] * &v[0]) + &(&m[i][1] * &v[1]))
}

/// `Y1 = X1 cosh t + X2 sinh t`, `Y2 = X1 sinh t + X2 cosh t`.
pub fn hyperbolic_rotate(frame: &Frame, theta: &Expr) -> Frame {
    let ch = Expr::cosh(theta.clone());
    let sh = Expr::sinh(theta.clone());
    let y1 = frame.x1.scale(&ch).add(&frame.x2.scale(&sh));
    let y2 = frame.x1.scale(&sh).add(&frame.x2.scale(&ch));
    Frame {
        chart: frame.chart.clone(),
        x1: y1,
        x2: y2,
    }
}

/// Structure functions of the rotated frame predicted from the originals,
/// given the derivatives `X0(t), X1(t), X2(t)`.
pub fn rotated_structure_functions(
    sf: &StructureFunctions,
    theta: &Expr,
    dtheta: &[Expr; 3],
) -> StructureFunctions {
    let ch = Expr::cosh(theta.clone());
    let sh = Expr::sinh(theta.clone());
    let ch2 = &ch * &ch;
    let sh2 = &sh * &sh;
    let shch = &sh * &ch;
    let StructureFunctions {
        c011,
        c012,
        c021,
        c022,
        c121,
        c122,
    } = sf;
    let [t0, t1, t2] = dtheta;
    StructureFunctions {
        c011: &(&(c011 * &ch2) - &(c022 * &sh2)) + &(&(c021 - c012) * &shch),
        c012: &(&(&(c012 * &ch2) - &(c021 * &sh2)) + &(&(c022 - c011) * &shch)) - t0,
        c021: &(&(&(c021 * &ch2) - &(c012 * &sh2)) + &(&(c011 - c022) * &shch)) - t0,
        c022: &(&(&(c012 - c021) * &shch) + &(c022 * &ch2)) - &(c011 * &sh2),
        c121: &(&(c121 - t1) * &ch) - &(&(t2 + c122) * &sh),
        c122: &(&(t1 - c121) * &sh) + &(&(t2 + c122) * &ch),
    }
}

/// Rotation of a constant structure by a constant angle.
pub fn rotate_abstract(s: &AbstractStructure, theta: &Expr) -> Result<AbstractStructure, CoreError> {
    let zero = [Expr::zero(), Expr::zero(), Expr::zero()];
    AbstractStructure::new(s.params.clone(), rotated_structure_functions(&s.sf, theta, &zero))
}

/// `X1' = s X1`, `X2' = s X2`.
pub fn dilate(frame: &Frame, s: &Expr) -> Frame {
    Frame {
        chart: frame.chart.clone(),
        x1: frame.x1.scale(s),
        x2: frame.x2.scale(s),
    }
}

/// Constant structure after `X_i' = s X_i`: the Reeb field becomes
/// `s^2 X0`, so `c0jk' = s^2 c0jk` and `c12k' = s c12k`.
pub fn dilate_abstract(st: &AbstractStructure, s: &Expr) -> AbstractStructure {
    let s2 = s * s;
    let sf = &st.sf;
    AbstractStructure {
        params: st.params.clone(),
        sf: StructureFunctions {
            c011: &s2 * &sf.c011,
            c012: &s2 * &sf.c012,
            c021: &s2 * &sf.c021,
            c022: &s2 * &sf.c022,
            c121: s * &sf.c121,
            c122: s * &sf.c122,
        },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Label {
    Heisenberg,
    SL2Cover,
    NullKernelCase,
    Generic,
    Undecided,
    /// Coordinate mode with h~ = 0: the Reeb field is an infinitesimal
    /// isometry; group-level identification needs the abstract mode.
    ReebIsometry,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Label::Heisenberg => "Heisenberg",
            Label::SL2Cover => "SL2Cover",
            Label::NullKernelCase => "NullKernelCase",
            Label::Generic => "Generic",
            Label::Undecided => "Undecided",
            Label::ReebIsometry => "ReebIsometry",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Coordinate,
    Abstract,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub label: Label,
    pub kappa: Expr,
    /// Zero test of kappa, reported with the coordinate-mode label.
    pub kappa_zero: Truth,
    pub direction: Option<[Expr; 2]>,
    pub reason: String,
}

pub fn classify(sf: &StructureFunctions, inv: &Invariants, mode: Mode) -> Classification {
    let h0 = inv.h_tilde_is_zero();
    let k0 = is_zero(&inv.kappa);
    let c0 = is_zero(&inv.chi);
    let mk = |label, reason: &str, direction| Classification {
        label,
        kappa: inv.kappa.clone(),
        kappa_zero: k0,
        direction,
        reason: reason.to_string(),
    };
    match h0 {
        Truth::Unknown => return mk(Label::Undecided, "h~ = 0 undecided", None),
        Truth::True => {
            return match (mode, k0) {
                (Mode::Coordinate, _) => mk(Label::ReebIsometry, "h~ = 0 pointwise", None),
                (Mode::Abstract, Truth::True) => mk(Label::Heisenberg, "h~ = 0, kappa = 0", None),
                (Mode::Abstract, Truth::False) => mk(Label::SL2Cover, "h~ = 0, kappa != 0", None),
                (Mode::Abstract, Truth::Unknown) => mk(Label::Undecided, "kappa = 0 undecided", None),
            }
        }
        Truth::False => {}
    }
    match c0 {
        Truth::Unknown => mk(Label::Undecided, "chi = 0 undecided", None),
        Truth::False => mk(Label::Generic, "chi != 0", None),
        Truth::True => match null_kernel_bundle(sf, inv) {
            Ok(NullKernel::Direction(v)) => mk(Label::NullKernelCase, "chi = 0, h~ != 0", Some(v)),
            Ok(NullKernel::None(r)) => mk(Label::Undecided, r, None),
            Err(_) => mk(Label::Undecided, "kernel branch undecided", None),
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaReport {
    /// `X1(t) - c121`, `X2(t) + c122`, `X0(t) - (kappa + c)`.
    pub residuals: [Expr; 3],
    pub rotated: StructureFunctions,
    /// Rotated brackets against the normal form
    /// `[Y1,X0] = -kappa Y2`, `[Y2,X0] = -kappa Y1`, `[Y2,Y1] = X0`.
    pub normal_form: Truth,
}

/// Checks that `theta` rotates an h~ = 0 structure into normal form.
pub fn verify_normalizing_theta(
    sf: &StructureFunctions,
    inv: &Invariants,
    setting: &Setting,
    theta: &Expr,
) -> Result<ThetaReport, CoreError> {
    match inv.h_tilde_is_zero() {
        Truth::True => {}
        Truth::False => return Err(CoreError::HTildeNonzero),
        Truth::Unknown => return Err(CoreError::Indeterminate("h~ = 0".into())),
    }
    let c = &sf.c021;
    let residuals = [
        &setting.apply(1, theta) - &sf.c121,
        &setting.apply(2, theta) + &sf.c122,
        &setting.apply(0, theta) - &(&inv.kappa + c),
    ];
    let verdict = Truth::all(residuals.iter().map(is_zero));
    match verdict {
        Truth::True => {}
        Truth::False => {
            return Err(CoreError::ThetaInvalid(
                residuals.iter().map(|r| r.to_string()).collect(),
            ))
        }
        Truth::Unknown => return Err(CoreError::Indeterminate("theta residuals".into())),
    }
    let rotated = match setting {
        Setting::Abstract => {
            let zero = [Expr::zero(), Expr::zero(), Expr::zero()];
            rotated_structure_functions(sf, theta, &zero)
        }
        Setting::Coordinate { frame, .. } => {
            let r = hyperbolic_rotate(frame, theta);
            let app = build_apparatus(&r)?;
            structure_functions(&r, &app)?
        }
    };
    let k = &inv.kappa;
    let normal_form = Truth::all([
        is_zero(&rotated.c011),
        is_zero(&rotated.c022),
        is_zero(&(&rotated.c012 + k)),
        is_zero(&(&rotated.c021 + k)),
        is_zero(&rotated.c121),
        is_zero(&rotated.c122),
    ]);
    Ok(ThetaReport {
        residuals,
        rotated,
        normal_form,
    })
}

/// Full coordinate pipeline: apparatus, structure functions, invariants.
pub fn analyze_frame(
    frame: &Frame,
) -> Result<(ContactApparatus, StructureFunctions, Invariants), CoreError> {
    let app = build_apparatus(frame)?;
    let sf = structure_functions(frame, &app)?;
    let inv = compute_invariants(
        &sf,
        &Setting::Coordinate {
            frame,
            apparatus: &app,
        },
    );
    Ok((app, sf, inv))
}

/// Invariants of a constant structure.
pub fn analyze_abstract(st: &AbstractStructure) -> Result<Invariants, CoreError> {
    check_trace(&st.sf)?;
    Ok(compute_invariants(&st.sf, &Setting::Abstract))
}

impl fmt::Display for StructureFunctions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = Self::NAMES
            .iter()
            .zip(self.as_array())
            .map(|(n, v)| format!("{n} = {v}"))
            .collect();
        f.write_str(&parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use sublorentz_expr::{parse_expr, Chart};

    fn e(s: &str) -> Expr {
        parse_expr(s, &Chart::standard().with_params(["k", "s"]).unwrap()).unwrap()
    }

    #[test]
    fn martinet_invariants() {
        let (_, sf, inv) = analyze_frame(&fixtures::martinet_frame()).unwrap();
        assert_eq!(sf.c121, e("1/y"));
        assert_eq!(sf.c021, e("1/y^2"));
        for c in [&sf.c011, &sf.c012, &sf.c022, &sf.c122] {
            assert!(c.is_literal_zero());
        }
        assert_eq!(inv.chi, e("1/(4*y^4)"));
        assert_eq!(inv.kappa, e("-5/(2*y^2)"));
        assert_eq!(inv.h_tilde, [[e("0"), e("1/(2*y^2)")], [e("-1/(2*y^2)"), e("0")]]);
        let c = classify(&sf, &inv, Mode::Coordinate);
        assert_eq!(c.label, Label::Generic);
    }

    #[test]
    fn heisenberg_is_flat() {
        let (_, sf, inv) = analyze_frame(&fixtures::heisenberg_frame()).unwrap();
        assert!(sf.as_array().iter().all(|c| c.is_literal_zero()));
        assert!(inv.chi.is_literal_zero() && inv.kappa.is_literal_zero());
        assert_eq!(classify(&sf, &inv, Mode::Coordinate).label, Label::ReebIsometry);
        assert_eq!(classify(&sf, &inv, Mode::Abstract).label, Label::Heisenberg);
    }

    #[test]
    fn sl2_fixtures() {
        let st = fixtures::sl2_orthonormal();
        let inv = analyze_abstract(&st).unwrap();
        assert_eq!(inv.h_tilde_is_zero(), Truth::True);
        assert_eq!(inv.kappa, e("k"));
        let null = fixtures::sl2_null();
        let inv = analyze_abstract(&null).unwrap();
        assert_eq!(inv.h_tilde, [[e("k"), e("0")], [e("0"), e("-k")]]);
        assert_eq!(inv.chi, e("-k^2"));
    }

    #[test]
    fn null_kernel_branches() {
        let mut sf = StructureFunctions::zero();
        sf.c011 = e("1");
        sf.c022 = e("-1");
        sf.c021 = e("2");
        let inv = compute_invariants(&sf, &Setting::Abstract);
        let v = match null_kernel_bundle(&sf, &inv).unwrap() {
            NullKernel::Direction(v) => v,
            other => panic!("{other:?}"),
        };
        assert_eq!(v, [e("1"), e("-1")]);
        assert_eq!(apply_mat2(&inv.h_tilde, &v), [e("0"), e("0")]);
        assert!(metric_norm(&v).is_literal_zero());
        sf.c021 = e("-2");
        let inv = compute_invariants(&sf, &Setting::Abstract);
        assert_eq!(
            null_kernel_bundle(&sf, &inv).unwrap(),
            NullKernel::Direction([e("1"), e("1")])
        );
    }

    #[test]
    fn eta_identity_on_sl2_and_heisenberg() {
        let st = fixtures::sl2_orthonormal();
        let inv = analyze_abstract(&st).unwrap();
        let r = eta_check(&st.sf, &inv, &Setting::Abstract).unwrap();
        assert_eq!(r.holds, Truth::True);
        assert!(r.eta.iter().all(|c| c.is_literal_zero()));

        let f = fixtures::heisenberg_frame();
        let (app, sf, inv) = analyze_frame(&f).unwrap();
        let setting = Setting::Coordinate {
            frame: &f,
            apparatus: &app,
        };
        assert_eq!(eta_check(&sf, &inv, &setting).unwrap().holds, Truth::True);

        let m = fixtures::martinet_frame();
        let (app, sf, inv) = analyze_frame(&m).unwrap();
        let setting = Setting::Coordinate {
            frame: &m,
            apparatus: &app,
        };
        assert_eq!(eta_check(&sf, &inv, &setting), Err(CoreError::HTildeNonzero));
    }

    #[test]
    fn normalizing_theta() {
        let f = fixtures::heisenberg_frame();
        let (app, sf, inv) = analyze_frame(&f).unwrap();
        let setting = Setting::Coordinate {
            frame: &f,
            apparatus: &app,
        };
        let ok = verify_normalizing_theta(&sf, &inv, &setting, &e("0")).unwrap();
        assert_eq!(ok.normal_form, Truth::True);
        assert!(matches!(
            verify_normalizing_theta(&sf, &inv, &setting, &e("x")),
            Err(CoreError::ThetaInvalid(_))
        ));
        let st = fixtures::sl2_orthonormal();
        let inv = analyze_abstract(&st).unwrap();
        let ok = verify_normalizing_theta(&st.sf, &inv, &Setting::Abstract, &e("0")).unwrap();
        assert_eq!(ok.normal_form, Truth::True);
    }

    #[test]
    fn rotation_by_zero_is_identity() {
        let f = fixtures::martinet_frame();
        assert_eq!(hyperbolic_rotate(&f, &Expr::zero()), f);
    }

    #[test]
    fn rotated_heisenberg_keeps_kappa() {
        let f = fixtures::heisenberg_frame();
        let r = hyperbolic_rotate(&f, &e("x*y"));
        let (_, _, inv) = analyze_frame(&r).unwrap();
        assert!(inv.kappa.is_literal_zero());
    }
}
