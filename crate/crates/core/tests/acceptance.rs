//! Acceptance suite: one PASS/FAIL line per criterion, with the individual
//! checks listed underneath. All comparisons are exact (zero tolerance):
//! a check passes only when the difference normalizes to the zero
//! expression. Randomized parts use fixed seeds.

mod common;

use std::process::ExitCode;

use common::Gen;
use sublorentz_core::contact::contact_locus;
use sublorentz_core::fixtures;
use sublorentz_core::invariants::{
    classify, dilate, eta_check, hyperbolic_rotate, mat2_is_zero,
    mat2_mul, mat2_scale, mat2_sub, rotated_structure_functions, structure_functions, Label, Mat2,
    Mode, Setting,
};
use sublorentz_core::lie_algebra::{
    catalog_algebra, constant_mode_invariants, default_marking, dualize_structure_equations, inertia,
    reference_conformal_killing, CONFORMAL_EQUATIONS, CONFORMAL_LABELS, ISOMETRY_EQUATIONS,
    ISOMETRY_LABELS, REFERENCE_CONFORMAL_KILLING_DET,
};
use sublorentz_core::ode::parse_ode;
use sublorentz_core::poisson::{poisson_bracket, reeb_bracket_residual, FiberPolynomial};
use sublorentz_core::symmetry::{
    binomial_identity_check, conformal_factor, restricted_lie_derivative, ConformalVerdict, Field,
    Geometry,
};
use sublorentz_core::{analyze_abstract, analyze_frame, AbstractStructure, Form, Frame, VectorField};
use sublorentz_expr::{is_zero, parse_expr, parse_vector_field, render_plain, simplify, Chart, Expr, Truth};

const RANDOM_CASES: usize = 100;
const POISSON_FRAMES: usize = 20;

struct Criterion {
    id: u32,
    title: &'static str,
    checks: Vec<(String, bool)>,
    notes: Vec<String>,
}

impl Criterion {
    fn new(id: u32, title: &'static str) -> Criterion {
        Criterion {
            id,
            title,
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, name: impl Into<String>, ok: bool) {
        self.checks.push((name.into(), ok));
    }

    /// Records an observation that does not enter the verdict.
    fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    fn passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }

    fn print(&self) {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        println!("criterion {:>2} [tolerance: exact] {}: {verdict}", self.id, self.title);
        for (name, ok) in &self.checks {
            println!("    {} {name}", if *ok { "ok  " } else { "FAIL" });
        }
        for n in &self.notes {
            println!("    note {n}");
        }
    }
}

fn chart() -> Chart {
    Chart::standard().with_params(["k", "s"]).unwrap()
}

fn e(s: &str) -> Expr {
    parse_expr(s, &chart()).unwrap()
}

fn zero(x: &Expr) -> bool {
    is_zero(x) == Truth::True
}

fn same(a: &Expr, b: &Expr) -> bool {
    zero(&(a - b))
}

fn same_mat(a: &Mat2, b: &Mat2) -> bool {
    mat2_is_zero(&mat2_sub(a, b)) == Truth::True
}

fn mat(a: &str, b: &str, c: &str, d: &str) -> Mat2 {
    [[e(a), e(b)], [e(c), e(d)]]
}

fn field(s: &str) -> VectorField {
    VectorField::from_components(parse_vector_field(s, &Chart::standard()).unwrap()).unwrap()
}

fn martinet_golden() -> Criterion {
    let mut c = Criterion::new(1, "Martinet golden values");
    let f = fixtures::martinet_frame();
    let (app, sf, inv) = analyze_frame(&f).unwrap();
    c.check(
        "omega = (2/(3y))dz - (y/3)dx + (x/3)dy",
        app.omega == Form::one_form([e("-y/3"), e("x/3"), e("2/(3*y)")]),
    );
    c.check("X0 = -(1/y)d/dx + y d/dz", app.x0 == VectorField::new(e("-1/y"), e("0"), e("y")));
    let b21 = f.bracket(&f.x2, &f.x1);
    c.check(
        "[X2,X1] = (1/y)X1 + X0",
        b21.sub(&f.x1.scale(&e("1/y")).add(&app.x0)).is_zero() == Truth::True,
    );
    c.check("[X1,X0] = 0", f.bracket(&f.x1, &app.x0).is_zero() == Truth::True);
    c.check(
        "[X2,X0] = (1/y^2)X1",
        f.bracket(&f.x2, &app.x0).sub(&f.x1.scale(&e("1/y^2"))).is_zero() == Truth::True,
    );
    c.check(
        "structure functions c121 = 1/y, c021 = 1/y^2, others 0",
        sf.c121 == e("1/y")
            && sf.c021 == e("1/y^2")
            && [&sf.c011, &sf.c012, &sf.c022, &sf.c122].iter().all(|v| v.is_literal_zero()),
    );
    c.check(
        "h~ = [[0, 1/(2y^2)], [-1/(2y^2), 0]]",
        inv.h_tilde == mat("0", "1/(2*y^2)", "-1/(2*y^2)", "0"),
    );
    c.check("chi = 1/(4y^4)", inv.chi == e("1/(4*y^4)"));
    c.check("kappa = -5/(2y^2)", inv.kappa == e("-5/(2*y^2)"));
    let locus = contact_locus(&f);
    let ratio = locus.try_div(&e("y")).unwrap();
    c.check("contact locus proportional to y", ratio.is_constant() && !ratio.is_literal_zero());
    c
}

fn heisenberg_golden() -> Criterion {
    let mut c = Criterion::new(2, "Heisenberg golden values");
    let (_, sf, inv) = analyze_frame(&fixtures::heisenberg_frame()).unwrap();
    c.check(
        "coordinate frame: six structure functions 0",
        sf.as_array().iter().all(|v| v.is_literal_zero()),
    );
    c.check(
        "coordinate frame: h~ = 0, chi = 0, kappa = 0",
        inv.h_tilde_is_zero() == Truth::True && inv.chi.is_literal_zero() && inv.kappa.is_literal_zero(),
    );
    let st = fixtures::heisenberg_abstract();
    let inv = analyze_abstract(&st).unwrap();
    c.check(
        "abstract: classification Heisenberg",
        classify(&st.sf, &inv, Mode::Abstract).label == Label::Heisenberg,
    );
    let alg = catalog_algebra("heisenberg").unwrap();
    let (sf, inv) = constant_mode_invariants(&alg, [1, 2, 0]).unwrap();
    c.check(
        "algebra [X2,X1] = X0: h~ = 0, chi = 0, kappa = 0, Heisenberg",
        inv.h_tilde_is_zero() == Truth::True
            && inv.chi.is_literal_zero()
            && inv.kappa.is_literal_zero()
            && classify(&sf, &inv, Mode::Abstract).label == Label::Heisenberg,
    );
    c
}

fn sl2_fixtures() -> Criterion {
    let mut c = Criterion::new(3, "sl2 fixtures");
    let k = e("k");
    let st = fixtures::sl2_orthonormal();
    let inv = analyze_abstract(&st).unwrap();
    c.check("orthonormal marking: h~ = 0", inv.h_tilde_is_zero() == Truth::True);
    c.check("orthonormal marking: kappa recovered as k", inv.kappa == k);
    c.check(
        "orthonormal marking, symbolic k: SL2Cover",
        classify(&st.sf, &inv, Mode::Abstract).label == Label::SL2Cover,
    );
    for v in ["1", "-2", "3/5"] {
        let st = fixtures::sl2_orthonormal_at(&e(v));
        let inv = analyze_abstract(&st).unwrap();
        c.check(
            format!("orthonormal marking, k = {v}: SL2Cover with kappa = {v}"),
            classify(&st.sf, &inv, Mode::Abstract).label == Label::SL2Cover && inv.kappa == e(v),
        );
    }
    let st = fixtures::sl2_null();
    let inv = analyze_abstract(&st).unwrap();
    c.check("null marking: h~ = k diag(1,-1)", inv.h_tilde == mat("k", "0", "0", "-k"));
    c.check("null marking: chi = -k^2", inv.chi == e("-k^2"));
    for (name, expected) in [("sl2_e", mat("0", "0", "0", "0")), ("sl2_n", mat("k", "0", "0", "-k"))] {
        let alg = catalog_algebra(name).unwrap();
        let (_, inv) = constant_mode_invariants(&alg, default_marking(name).unwrap()).unwrap();
        c.check(
            format!("{name} marked (X1,X2,X0): h~ = {}", if name == "sl2_e" { "0" } else { "k diag(1,-1)" }),
            inv.h_tilde == expected,
        );
    }
    let km = catalog_algebra("sl2_e").unwrap().killing_matrix();
    c.check("K(e1,e1) = 2k", km[1][1] == e("2*k"));
    c.check("K(e2,e2) = -2k", km[2][2] == e("-2*k"));
    c.check("K(e0,e0) = 2k^2", km[0][0] == e("2*k^2"));
    c.check(
        "Killing off-diagonals 0",
        (0..3).all(|i| (0..3).all(|j| i == j || km[i][j].is_literal_zero())),
    );
    c
}

fn conformal_algebra() -> Criterion {
    let mut c = Criterion::new(4, "conformal and isometry algebras from structure equations");
    let alg = dualize_structure_equations("conformal8", &CONFORMAL_LABELS, &[], CONFORMAL_EQUATIONS).unwrap();
    c.check("dimension 8", alg.dim() == 8);
    let jac = alg.jacobi_residuals();
    c.check(format!("Jacobi residuals all 0 ({} nonzero)", jac.len()), jac.is_empty());
    let kd = alg.killing_form();
    let reference = reference_conformal_killing();
    let mut mismatches = Vec::new();
    for i in 0..8 {
        for j in i..8 {
            if kd.matrix[i][j] != reference[i][j] {
                mismatches.push(format!(
                    "K[{i}][{j}] computed {} reference {}",
                    kd.matrix[i][j], reference[i][j]
                ));
            }
        }
    }
    c.check(
        format!(
            "Killing matrix matches the reference matrix entrywise{}",
            if mismatches.is_empty() { String::new() } else { format!(" ({})", mismatches.join("; ")) }
        ),
        mismatches.is_empty(),
    );
    c.check(
        format!("det K = {REFERENCE_CONFORMAL_KILLING_DET} (computed {})", kd.det),
        kd.det == Expr::int(REFERENCE_CONFORMAL_KILLING_DET),
    );
    let reference_inertia = inertia(&reference);
    c.check(
        format!("inertia {:?} equals that of the reference matrix {:?}", kd.inertia, reference_inertia),
        kd.inertia.is_some() && kd.inertia == reference_inertia,
    );
    c.check(
        "ad-invariance of the computed Killing form",
        alg.ad_invariance_residuals(&kd.matrix).is_empty(),
    );

    let iso = dualize_structure_equations("isometry", &ISOMETRY_LABELS, &["k"], ISOMETRY_EQUATIONS)
        .unwrap()
        .with_param("k", &Expr::zero())
        .unwrap();
    let table: Vec<String> = iso.bracket_table().iter().map(|(l, r)| format!("{l} = {r}")).collect();
    let expected = catalog_algebra("isometry4").unwrap();
    let exact = (0..4).all(|i| (0..4).all(|j| iso.bracket(i, j) == expected.bracket(i, j)));
    c.check(
        format!(
            "isometry equations at k = 0 give [e1,e2]=e3, [e4,e1]=e2, [e4,e2]=e1 (got {})",
            table.join(", ")
        ),
        exact,
    );
    c.check("isometry algebra Jacobi-valid", iso.jacobi_residuals().is_empty());
    // the sign flip e4 -> -e4 maps one table to the other
    let i = |v: i64| Expr::int(v);
    let flip = vec![
        vec![i(1), i(0), i(0), i(0)],
        vec![i(0), i(1), i(0), i(0)],
        vec![i(0), i(0), i(1), i(0)],
        vec![i(0), i(0), i(0), i(-1)],
    ];
    let flipped = (0..4).all(|a| {
        (0..4).all(|b| {
            let sa = if a == 3 { -1 } else { 1 };
            let sb = if b == 3 { -1 } else { 1 };
            let lhs: Vec<Expr> = iso.bracket(a, b).iter().enumerate().map(|(k, v)| &(v * &flip[k][k]) * &i(sa * sb)).collect();
            lhs == expected.bracket(a, b)
        })
    });
    c.note(format!("isometry table agrees with the reference table after e4 -> -e4: {flipped}"));
    c
}

fn rotation_residuals(
    frame: &Frame,
    theta: &Expr,
) -> Result<(bool, bool, bool), sublorentz_core::CoreError> {
    let (app, sf, inv) = analyze_frame(frame)?;
    let setting = Setting::Coordinate {
        frame,
        apparatus: &app,
    };
    let dtheta = [setting.apply(0, theta), setting.apply(1, theta), setting.apply(2, theta)];
    let rotated = hyperbolic_rotate(frame, theta);
    let (_, rsf, rinv) = analyze_frame(&rotated)?;
    let kappa_ok = same(&rinv.kappa, &inv.kappa);
    let ch = Expr::cosh(theta.clone());
    let sh = Expr::sinh(theta.clone());
    let r: Mat2 = [[ch.clone(), sh.clone()], [sh.clone(), ch.clone()]];
    let r_inv: Mat2 = [[ch.clone(), -&sh], [-&sh, ch]];
    let conj = mat2_mul(&mat2_mul(&r_inv, &inv.h_tilde), &r);
    let cov_ok = same_mat(&rinv.h_tilde, &conj);
    let predicted = rotated_structure_functions(&sf, theta, &dtheta);
    let formula_ok = predicted
        .as_array()
        .iter()
        .zip(rsf.as_array())
        .all(|(a, b)| same(a, b));
    Ok((kappa_ok, cov_ok, formula_ok))
}

fn invariance_suites() -> Criterion {
    let mut c = Criterion::new(5, "invariance property suites (seed-pinned, randomized)");
    let mut g = Gen::new(5);
    let mut trace_ok = 0;
    for _ in 0..RANDOM_CASES {
        let f = g.contact_frame();
        let app = sublorentz_core::build_apparatus(&f).unwrap();
        if let Ok(sf) = structure_functions(&f, &app) {
            if zero(&sf.trace()) {
                trace_ok += 1;
            }
        }
    }
    c.check(
        format!("trace identity c011 + c022 = 0 on {trace_ok}/{RANDOM_CASES} random polynomial frames"),
        trace_ok == RANDOM_CASES,
    );

    for (name, frame) in [
        ("Heisenberg", fixtures::heisenberg_frame()),
        ("Martinet", fixtures::martinet_frame()),
    ] {
        let mut g = Gen::new(if name == "Heisenberg" { 51 } else { 52 });
        let (mut k_ok, mut cov_ok, mut formula_ok) = (0, 0, 0);
        for _ in 0..RANDOM_CASES {
            let theta = g.poly(&["x", "y", "z"], 2, 2);
            if let Ok((a, b, f)) = rotation_residuals(&frame, &theta) {
                k_ok += a as usize;
                cov_ok += b as usize;
                formula_ok += f as usize;
            }
        }
        c.check(
            format!("{name}: kappa invariant under {k_ok}/{RANDOM_CASES} random polynomial rotations"),
            k_ok == RANDOM_CASES,
        );
        c.check(
            format!("{name}: h~' = R^-1 h~ R for {cov_ok}/{RANDOM_CASES} rotations"),
            cov_ok == RANDOM_CASES,
        );
        c.check(
            format!("{name}: rotated structure functions match the closed formulas for {formula_ok}/{RANDOM_CASES}"),
            formula_ok == RANDOM_CASES,
        );
    }

    let s = e("s");
    let s2 = &s * &s;
    let mut g = Gen::new(53);
    let (mut chi_ok, mut kappa_ok, mut h_ok, mut chi4, mut h2) = (0, 0, 0, 0, 0);
    let mut frames = vec![fixtures::martinet_frame(), fixtures::heisenberg_frame()];
    while frames.len() < RANDOM_CASES {
        frames.push(g.contact_frame());
    }
    for f in &frames {
        let (_, _, inv) = analyze_frame(f).unwrap();
        let (_, _, dinv) = analyze_frame(&dilate(f, &s)).unwrap();
        chi_ok += same(&dinv.chi, &(&s2 * &inv.chi)) as usize;
        kappa_ok += same(&dinv.kappa, &(&s2 * &inv.kappa)) as usize;
        h_ok += same_mat(&dinv.h_tilde, &mat2_scale(&inv.h_tilde, &s)) as usize;
        chi4 += same(&dinv.chi, &(&(&s2 * &s2) * &inv.chi)) as usize;
        h2 += same_mat(&dinv.h_tilde, &mat2_scale(&inv.h_tilde, &s2)) as usize;
    }
    let n = frames.len();
    c.check(format!("dilation: chi' = s^2 chi on {chi_ok}/{n} frames"), chi_ok == n);
    c.check(format!("dilation: kappa' = s^2 kappa on {kappa_ok}/{n} frames"), kappa_ok == n);
    c.check(format!("dilation: h~' = s h~ on {h_ok}/{n} frames"), h_ok == n);
    c.note(format!("dilation: chi' = s^4 chi on {chi4}/{n}, h~' = s^2 h~ on {h2}/{n}"));
    c
}

struct Fixture {
    name: String,
    frame: Option<(Frame, sublorentz_core::ContactApparatus)>,
    sf: sublorentz_core::StructureFunctions,
    inv: sublorentz_core::Invariants,
}

impl Fixture {
    fn geometry(&self) -> Geometry<'_> {
        match &self.frame {
            Some((frame, apparatus)) => Geometry::Coordinate { frame, apparatus },
            None => Geometry::Abstract { sf: &self.sf },
        }
    }
}

fn all_fixtures() -> Vec<Fixture> {
    let mut out = Vec::new();
    for (name, f) in [
        ("Heisenberg frame", fixtures::heisenberg_frame()),
        ("Martinet frame", fixtures::martinet_frame()),
    ] {
        let (app, sf, inv) = analyze_frame(&f).unwrap();
        out.push(Fixture {
            name: name.to_string(),
            frame: Some((f, app)),
            sf,
            inv,
        });
    }
    for name in ["heisenberg", "sl2_e", "sl2_n", "sl2_f"] {
        let alg = catalog_algebra(name).unwrap();
        let (sf, inv) = constant_mode_invariants(&alg, default_marking(name).unwrap()).unwrap();
        out.push(Fixture {
            name: format!("{name} algebra"),
            frame: None,
            sf,
            inv,
        });
    }
    out
}

fn symmetry_suite() -> Criterion {
    let mut c = Criterion::new(6, "symmetry suite");
    for fx in all_fixtures() {
        let geom = fx.geometry();
        let verdict = conformal_factor(&Field::reeb(), &geom).unwrap();
        let isometry = verdict == ConformalVerdict::Isometry;
        let h_zero = fx.inv.h_tilde_is_zero() == Truth::True;
        c.check(
            format!("{}: X0 isometry ({isometry}) iff h~ = 0 ({h_zero})", fx.name),
            isometry == h_zero,
        );
        let l = restricted_lie_derivative(&Field::reeb(), &geom, 1).unwrap();
        c.check(
            format!("{}: restricted Lie derivative of g along X0 = 2 h-bar", fx.name),
            same_mat(&l, &mat2_scale(&fx.inv.h_bar, &Expr::int(2))),
        );
    }
    let f = fixtures::heisenberg_frame();
    let (app, _, _) = analyze_frame(&f).unwrap();
    let geom = Geometry::Coordinate {
        frame: &f,
        apparatus: &app,
    };
    let boost = Field::Coordinate(field("y*d/dx + x*d/dy"));
    let dil = Field::Coordinate(field("x*d/dx + y*d/dy + 2*z*d/dz"));
    let bv = conformal_factor(&boost, &geom).unwrap();
    c.check(format!("Heisenberg boost y d/dx + x d/dy: {bv}"), bv == ConformalVerdict::Isometry);
    let dv = conformal_factor(&dil, &geom).unwrap();
    c.check(
        format!("Heisenberg dilation x d/dx + y d/dy + 2z d/dz: {dv}"),
        dv == ConformalVerdict::Conformal(Expr::int(2)),
    );
    for (name, z) in [("boost", &boost), ("dilation", &dil)] {
        for n in [2, 3] {
            let r = binomial_identity_check(z, &geom, n).unwrap();
            let rendered: Vec<String> = r.iter().map(|v| v.to_string()).collect();
            c.check(
                format!("{name}, n = {n}: binomial bracket residuals [{}] all 0", rendered.join(", ")),
                r.iter().all(zero),
            );
        }
    }
    c
}

fn identity_suite() -> Criterion {
    let mut c = Criterion::new(7, "identities for h~ = 0 structures");
    let f = fixtures::heisenberg_frame();
    let (app, sf, inv) = analyze_frame(&f).unwrap();
    let setting = Setting::Coordinate {
        frame: &f,
        apparatus: &app,
    };
    let r = eta_check(&sf, &inv, &setting).unwrap();
    c.check("Heisenberg frame: first-order identities", r.first_order.iter().all(zero));
    c.check("Heisenberg frame: d eta = d kappa ^ nu0", r.residual.iter().all(zero));
    let abstract_cases: Vec<(&str, AbstractStructure)> = vec![
        ("Heisenberg algebra", fixtures::heisenberg_abstract()),
        ("sl2 orthonormal, symbolic k", fixtures::sl2_orthonormal()),
        ("sl2 orthonormal, k = 2", fixtures::sl2_orthonormal_at(&Expr::int(2))),
    ];
    for (name, st) in abstract_cases {
        let inv = analyze_abstract(&st).unwrap();
        let r = eta_check(&st.sf, &inv, &Setting::Abstract).unwrap();
        c.check(format!("{name}: first-order identities"), r.first_order.iter().all(zero));
        c.check(format!("{name}: d eta = d kappa ^ nu0"), r.residual.iter().all(zero));
    }
    c
}

fn poisson_suite() -> Criterion {
    let mut c = Criterion::new(8, "Poisson bracket {h, h0} in frame momenta");
    for (name, f) in [
        ("Heisenberg", fixtures::heisenberg_frame()),
        ("Martinet", fixtures::martinet_frame()),
    ] {
        let (app, sf, _) = analyze_frame(&f).unwrap();
        let r = reeb_bracket_residual(&f, &app, &sf).unwrap();
        c.check(format!("{name}: residual {r}"), r.is_zero());
    }
    let mut g = Gen::new(8);
    let mut ok = 0;
    for _ in 0..POISSON_FRAMES {
        let f = g.contact_frame();
        let (app, sf, _) = analyze_frame(&f).unwrap();
        ok += reeb_bracket_residual(&f, &app, &sf).unwrap().is_zero() as usize;
    }
    c.check(
        format!("random polynomial frames: residual 0 on {ok}/{POISSON_FRAMES}"),
        ok == POISSON_FRAMES,
    );
    c
}

fn ode_suite() -> Criterion {
    let mut c = Criterion::new(9, "second-order ODE bridge");
    for q in ["0", "x*p", "(1 + 2*x)*exp(u) + (x + x^2)*exp(u)*p"] {
        let s = parse_ode(q).unwrap();
        let failed: Vec<&str> = s
            .verify_null_bundles()
            .into_iter()
            .filter(|(_, t)| *t != Truth::True)
            .map(|(n, _)| n)
            .collect();
        c.check(
            format!("Q = {q}: null-bundle assertions{}", if failed.is_empty() { String::new() } else { format!(" (failed: {})", failed.join(", ")) }),
            failed.is_empty(),
        );
        let run = analyze_frame(&s.frame);
        c.check(format!("Q = {q}: invariants pipeline completes"), run.is_ok());
        if let Ok((_, _, inv)) = run {
            c.note(format!("Q = {q}: chi = {}, kappa = {}", inv.chi, inv.kappa));
        }
    }
    c
}

fn kernel_suite() -> Criterion {
    let mut c = Criterion::new(10, "kernel suite (seed-pinned, randomized)");
    let chart = Chart::standard();
    let mut g = Gen::new(10);
    let exprs: Vec<Expr> = (0..RANDOM_CASES).map(|_| g.expr()).collect();
    let idem = exprs.iter().filter(|x| simplify(&simplify(x)) == simplify(x)).count();
    c.check(format!("simplify idempotent on {idem}/{RANDOM_CASES}"), idem == RANDOM_CASES);
    let round = exprs
        .iter()
        .filter(|x| parse_expr(&render_plain(x), &chart).ok().as_ref() == Some(*x))
        .count();
    c.check(format!("parse(render(e)) = e on {round}/{RANDOM_CASES}"), round == RANDOM_CASES);
    let fields: Vec<VectorField> = (0..RANDOM_CASES).map(|_| g.field()).collect();
    let vround = fields
        .iter()
        .filter(|v| {
            parse_vector_field(&v.render(&chart), &chart)
                .ok()
                .and_then(|p| VectorField::from_components(p).ok())
                .as_ref()
                == Some(*v)
        })
        .count();
    c.check(format!("vector-field render/parse round trip on {vround}/{RANDOM_CASES}"), vround == RANDOM_CASES);

    let dd0 = exprs
        .iter()
        .filter(|f| Form::function((*f).clone()).d(&chart).d(&chart).is_zero() == Truth::True)
        .count();
    c.check(format!("d(d f) = 0 on {dd0}/{RANDOM_CASES} functions"), dd0 == RANDOM_CASES);
    let dd1 = (0..RANDOM_CASES)
        .filter(|_| {
            let w = Form::one_form([g.expr(), g.expr(), g.expr()]);
            w.d(&chart).d(&chart).is_zero() == Truth::True
        })
        .count();
    c.check(format!("d(d w) = 0 on {dd1}/{RANDOM_CASES} one-forms"), dd1 == RANDOM_CASES);

    let mut jac = 0;
    let mut pois = 0;
    for _ in 0..RANDOM_CASES {
        let (x, y, z) = (g.field(), g.field(), g.field());
        let b = |a: &VectorField, b: &VectorField| a.bracket(b, &chart);
        let sum = b(&x, &b(&y, &z)).add(&b(&y, &b(&z, &x))).add(&b(&z, &b(&x, &y)));
        jac += (sum.is_zero() == Truth::True) as usize;
        let lhs = poisson_bracket(&FiberPolynomial::from_field(&x), &FiberPolynomial::from_field(&y), &chart).unwrap();
        pois += (lhs == FiberPolynomial::from_field(&b(&x, &y))) as usize;
    }
    c.check(format!("Jacobi identity for vector fields on {jac}/{RANDOM_CASES}"), jac == RANDOM_CASES);
    c.check(format!("{{h_X, h_Y}} = h_[X,Y] on {pois}/{RANDOM_CASES}"), pois == RANDOM_CASES);
    c
}

fn main() -> ExitCode {
    let suites: [fn() -> Criterion; 10] = [
        martinet_golden,
        heisenberg_golden,
        sl2_fixtures,
        conformal_algebra,
        invariance_suites,
        symmetry_suite,
        identity_suite,
        poisson_suite,
        ode_suite,
        kernel_suite,
    ];
    let criteria: Vec<Criterion> = suites
        .iter()
        .map(|run| {
            let c = run();
            c.print();
            c
        })
        .collect();
    let failed: Vec<u32> = criteria.iter().filter(|c| !c.passed()).map(|c| c.id).collect();
    println!(
        "acceptance: {}/{} criteria pass{}",
        criteria.len() - failed.len(),
        criteria.len(),
        if failed.is_empty() {
            String::new()
        } else {
            format!("; failing: {failed:?}")
        }
    );
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
