//! One function per subcommand, each producing a [`Report`].

use std::path::Path;

use serde_json::{json, Value};
use sublorentz_core::contact::ContactApparatus;
use sublorentz_core::invariants::{
    analyze_abstract, analyze_frame, classify, dilate, dilate_abstract, eta_check, hyperbolic_rotate,
    mat2_is_zero, mat2_mul, mat2_scale, mat2_sub, rotate_abstract, rotated_structure_functions,
    Classification, Invariants, Mat2, Mode, Setting, StructureFunctions,
};
use sublorentz_core::lie_algebra::{
    catalog_algebra, constant_mode_invariants, default_marking, reference_conformal_killing, sl3_evidence,
    Inertia, LieAlgebra, CATALOG, REFERENCE_CONFORMAL_KILLING_DET,
};
use sublorentz_core::poisson::reeb_bracket_residual;
use sublorentz_core::symmetry::{
    binomial_identity_check, conformal_factor, preserves_distribution, reeb_isometry_sides,
    restricted_lie_derivative, ConformalVerdict, Field, Geometry,
};
use sublorentz_core::{
    parse_structure_file, AbstractStructure, CoreError, Frame, Structure, StructureDefinition,
};
use sublorentz_expr::{is_zero, parse_expr, Chart, Expr, Truth};

use crate::error::CliError;
use crate::report::Report;

/// Structure files shipped with the binary, usable in place of a path.
pub const BUILTIN_FILES: [(&str, &str); 2] = [
    ("heisenberg", include_str!("../fixtures/heisenberg.toml")),
    ("martinet", include_str!("../fixtures/martinet.toml")),
];

/// Reads a structure file, falling back to the built-in files by name.
pub fn load(source: &str) -> Result<StructureDefinition, CliError> {
    let text = if Path::new(source).exists() {
        std::fs::read_to_string(source).map_err(|e| CliError::Input(format!("{source}: {e}")))?
    } else {
        match BUILTIN_FILES.iter().find(|(n, _)| *n == source) {
            Some((_, text)) => text.to_string(),
            None => return Err(CliError::Input(format!("{source}: no such file or built-in structure"))),
        }
    };
    parse_structure_file(&text).map_err(|e| CliError::from(e).context(source))
}

fn s(e: &Expr) -> Value {
    Value::String(e.to_string())
}

fn mat(m: &Mat2) -> Value {
    json!([[s(&m[0][0]), s(&m[0][1])], [s(&m[1][0]), s(&m[1][1])]])
}

fn rows(m: &[Vec<Expr>]) -> Value {
    Value::Array(m.iter().map(|r| Value::Array(r.iter().map(s).collect())).collect())
}

fn sf_value(sf: &StructureFunctions) -> Value {
    let mut map = serde_json::Map::new();
    for (n, v) in StructureFunctions::NAMES.iter().zip(sf.as_array()) {
        map.insert(n.to_string(), s(v));
    }
    Value::Object(map)
}

fn invariants_value(inv: &Invariants) -> Value {
    json!({
        "h_tilde": mat(&inv.h_tilde),
        "h_bar": mat(&inv.h_bar),
        "chi": s(&inv.chi),
        "kappa": s(&inv.kappa),
    })
}

fn classification_value(c: &Classification) -> Value {
    json!({
        "label": c.label.to_string(),
        "reason": c.reason,
        "kappa_zero": truth_str(c.kappa_zero),
        "direction": c.direction.as_ref().map(|d| vec![s(&d[0]), s(&d[1])]),
    })
}

fn inertia_value(i: &Option<Inertia>) -> Value {
    match i {
        Some(i) => json!({"positive": i.positive, "negative": i.negative, "zero": i.zero}),
        None => Value::Null,
    }
}

fn truth_str(t: Truth) -> &'static str {
    match t {
        Truth::True => "true",
        Truth::False => "false",
        Truth::Unknown => "unknown",
    }
}

fn all_zero<'a>(items: impl IntoIterator<Item = &'a Expr>) -> Truth {
    Truth::all(items.into_iter().map(is_zero))
}

fn mat_eq(a: &Mat2, b: &Mat2) -> Truth {
    mat2_is_zero(&mat2_sub(a, b))
}

/// Everything computed for one structure.
struct Analysis {
    frame: Option<(Frame, ContactApparatus)>,
    sf: StructureFunctions,
    inv: Invariants,
}

impl Analysis {
    fn of(structure: &Structure) -> Result<Analysis, CliError> {
        Ok(match structure {
            Structure::Coordinate(frame) => {
                let (app, sf, inv) = analyze_frame(frame)?;
                Analysis {
                    frame: Some((frame.clone(), app)),
                    sf,
                    inv,
                }
            }
            Structure::Abstract(st) => Analysis {
                frame: None,
                inv: analyze_abstract(st)?,
                sf: st.sf.clone(),
            },
        })
    }

    fn setting(&self) -> Setting<'_> {
        match &self.frame {
            Some((frame, apparatus)) => Setting::Coordinate { frame, apparatus },
            None => Setting::Abstract,
        }
    }

    fn geometry(&self) -> Geometry<'_> {
        match &self.frame {
            Some((frame, apparatus)) => Geometry::Coordinate { frame, apparatus },
            None => Geometry::Abstract { sf: &self.sf },
        }
    }

    fn mode(&self) -> Mode {
        if self.frame.is_some() {
            Mode::Coordinate
        } else {
            Mode::Abstract
        }
    }

    fn classification(&self) -> Classification {
        classify(&self.sf, &self.inv, self.mode())
    }

    fn describe(&self, r: &mut Report) {
        match &self.frame {
            Some((frame, app)) => {
                r.set("mode", "coordinate");
                r.set("chart", frame.chart.coordinates().to_vec());
                r.set("frame", json!({"X1": frame.x1.render(&frame.chart), "X2": frame.x2.render(&frame.chart)}));
                r.set(
                    "apparatus",
                    json!({
                        "omega": app.omega.render(&frame.chart),
                        "X0": app.x0.render(&frame.chart),
                        "coframe": app.coframe.iter().map(|f| f.render(&frame.chart)).collect::<Vec<_>>(),
                        "excluded": app.excluded.iter().map(s).collect::<Vec<_>>(),
                    }),
                );
            }
            None => r.set("mode", "abstract"),
        }
        r.set("structure_functions", sf_value(&self.sf));
        r.set("invariants", invariants_value(&self.inv));
        r.set("classification", classification_value(&self.classification()));
    }

    /// Both sides of "X0 is an isometry iff h~ = 0" agree.
    fn reeb_equivalence(&self) -> Result<Truth, CliError> {
        Ok(match reeb_isometry_sides(&self.geometry(), &self.inv.h_tilde)? {
            (Truth::Unknown, _) | (_, Truth::Unknown) => Truth::Unknown,
            (a, b) => Truth::from_bool(a == b),
        })
    }

    /// Identity checks that hold for every structure.
    fn core_checks(&self, r: &mut Report) -> Result<(), CliError> {
        if let Some((frame, app)) = &self.frame {
            for (name, t) in app.identity_checks(frame) {
                r.check(name, t);
            }
            r.check("d nu0 = nu1 ^ nu2", app.dnu0_residual(frame).is_zero());
            let residual = reeb_bracket_residual(frame, app, &self.sf)?;
            r.check(
                "{h, h0} matches -c011 h1^2 + (c021 - c012) h1 h2 + c022 h2^2",
                Truth::all(residual.terms().map(|(_, c)| is_zero(c))),
            );
        }
        r.check("c011 + c022 = 0", is_zero(&self.sf.trace()));
        r.check("X0 is an isometry iff h~ = 0", self.reeb_equivalence()?);
        if self.inv.h_tilde_is_zero() == Truth::True {
            let eta = eta_check(&self.sf, &self.inv, &self.setting())?;
            r.check("first-order identities for h~ = 0", all_zero(&eta.first_order));
            r.check("d eta = d kappa ^ nu0", all_zero(&eta.residual));
        }
        Ok(())
    }
}

fn symmetry_entries(a: &Analysis, fields: &[(String, Field)], r: &mut Report, with_checks: bool) -> Result<(), CliError> {
    let geom = a.geometry();
    let mut out = Vec::new();
    for (text, z) in fields {
        let preserved = preserves_distribution(z, &geom)?;
        let mut entry = serde_json::Map::new();
        entry.insert("field".into(), text.clone().into());
        entry.insert("preserves_distribution".into(), truth_str(preserved).into());
        let verdict = match preserved {
            Truth::True => conformal_factor(z, &geom)?,
            Truth::False => ConformalVerdict::Neither,
            Truth::Unknown => ConformalVerdict::Unknown,
        };
        entry.insert("verdict".into(), verdict.to_string().into());
        if preserved == Truth::True {
            entry.insert("lie_derivative".into(), mat(&restricted_lie_derivative(z, &geom, 1)?));
        }
        if with_checks {
            match &verdict {
                ConformalVerdict::Unknown => r.check(format!("{text}: verdict decided"), Truth::Unknown),
                ConformalVerdict::Isometry | ConformalVerdict::Conformal(_) => {
                    for n in [2, 3] {
                        let res = binomial_identity_check(z, &geom, n)?;
                        r.check(format!("{text}: binomial bracket identity, n = {n}"), all_zero(&res));
                        entry.insert(format!("binomial_residual_n{n}"), Value::Array(res.iter().map(s).collect()));
                    }
                }
                ConformalVerdict::Neither => {}
            }
        }
        out.push(Value::Object(entry));
    }
    r.set("symmetries", out);
    Ok(())
}

pub fn analyze(source: &str) -> Result<Report, CliError> {
    let def = load(source)?;
    let a = Analysis::of(&def.structure)?;
    let mut r = Report::new("analyze");
    r.set("input", source);
    a.describe(&mut r);
    a.core_checks(&mut r)?;
    if !def.symmetries.is_empty() {
        symmetry_entries(&a, &def.symmetries, &mut r, false)?;
    }
    Ok(r)
}

pub fn classify_cmd(source: &str) -> Result<Report, CliError> {
    let def = load(source)?;
    let a = Analysis::of(&def.structure)?;
    let c = a.classification();
    let mut r = Report::new("classify");
    r.set("input", source);
    r.set("mode", if a.frame.is_some() { "coordinate" } else { "abstract" });
    r.set("invariants", invariants_value(&a.inv));
    r.set("classification", classification_value(&c));
    r.check("c011 + c022 = 0", is_zero(&a.sf.trace()));
    let decided = match c.label {
        sublorentz_core::Label::Undecided => Truth::Unknown,
        _ => Truth::True,
    };
    r.check("classification decided", decided);
    Ok(r)
}

pub fn symmetry(source: &str) -> Result<Report, CliError> {
    let def = load(source)?;
    if def.symmetries.is_empty() {
        return Err(CoreError::MissingSection("symmetry".into()).into());
    }
    let a = Analysis::of(&def.structure)?;
    let mut r = Report::new("symmetry");
    r.set("input", source);
    r.set("mode", if a.frame.is_some() { "coordinate" } else { "abstract" });
    r.set("h_tilde", mat(&a.inv.h_tilde));
    symmetry_entries(&a, &def.symmetries, &mut r, true)?;
    r.check("X0 is an isometry iff h~ = 0", a.reeb_equivalence()?);
    Ok(r)
}

/// Parses a transform argument, declaring bare unknown identifiers as
/// parameters.
fn transform_expr(text: &str, chart: &Chart) -> Result<(Expr, Chart), CliError> {
    let ident = !text.is_empty()
        && text.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !text.starts_with(|c: char| c.is_ascii_digit());
    let chart = if ident && !chart.is_declared(text) {
        chart.with_params([text])?
    } else {
        chart.clone()
    };
    Ok((parse_expr(text, &chart)?, chart))
}

fn pick(flag: Option<&str>, file: &Option<Expr>, what: &str) -> Result<Option<String>, CliError> {
    match (flag, file) {
        (Some(t), _) => Ok(Some(t.to_string())),
        (None, Some(e)) => Ok(Some(e.to_string())),
        (None, None) => Err(CliError::Input(format!("no {what}: pass --{what} or set transform.{what}"))),
    }
}

fn structure_chart(st: &Structure) -> Chart {
    match st {
        Structure::Coordinate(f) => f.chart.clone(),
        Structure::Abstract(a) => a.chart(),
    }
}

pub fn rotate(source: &str, theta: Option<&str>) -> Result<Report, CliError> {
    let def = load(source)?;
    let text = pick(theta, &def.theta, "theta")?.expect("picked");
    let (theta, _) = transform_expr(&text, &structure_chart(&def.structure))?;
    let a = Analysis::of(&def.structure)?;
    let mut r = Report::new("rotate");
    r.set("input", source);
    r.set("theta", s(&theta));
    let rotated = match &def.structure {
        Structure::Coordinate(frame) => {
            let rf = hyperbolic_rotate(frame, &theta);
            r.set("rotated_frame", json!({"X1": rf.x1.render(&rf.chart), "X2": rf.x2.render(&rf.chart)}));
            Structure::Coordinate(rf)
        }
        Structure::Abstract(st) => Structure::Abstract(rotate_abstract(st, &theta)?),
    };
    let b = Analysis::of(&rotated)?;
    r.set("structure_functions", sf_value(&a.sf));
    r.set("rotated_structure_functions", sf_value(&b.sf));
    r.set("invariants", invariants_value(&a.inv));
    r.set("rotated_invariants", invariants_value(&b.inv));
    r.check("kappa' = kappa", is_zero(&(&b.inv.kappa - &a.inv.kappa)));
    let ch = Expr::cosh(theta.clone());
    let sh = Expr::sinh(theta.clone());
    let rot: Mat2 = [[ch.clone(), sh.clone()], [sh.clone(), ch.clone()]];
    let rot_inv: Mat2 = [[ch.clone(), -&sh], [-&sh, ch]];
    let conj = mat2_mul(&mat2_mul(&rot_inv, &a.inv.h_tilde), &rot);
    r.check("h~' = R^-1 h~ R", mat_eq(&b.inv.h_tilde, &conj));
    let setting = a.setting();
    let dtheta = [setting.apply(0, &theta), setting.apply(1, &theta), setting.apply(2, &theta)];
    let predicted = rotated_structure_functions(&a.sf, &theta, &dtheta);
    let diffs: Vec<Expr> = predicted
        .as_array()
        .iter()
        .zip(b.sf.as_array())
        .map(|(p, q)| *p - q)
        .collect();
    r.check("rotated structure functions match the closed formulas", all_zero(&diffs));
    Ok(r)
}

fn ratio(new: &Expr, old: &Expr) -> Value {
    if old.is_literal_zero() {
        Value::Null
    } else {
        new.try_div(old).map(|q| s(&q)).unwrap_or(Value::Null)
    }
}

pub fn dilate_cmd(source: &str, scale: Option<&str>) -> Result<Report, CliError> {
    let def = load(source)?;
    let text = pick(scale, &def.scale, "scale")?.expect("picked");
    let (scale, chart) = transform_expr(&text, &structure_chart(&def.structure))?;
    let base = match def.structure {
        Structure::Coordinate(f) => Structure::Coordinate(Frame { chart, ..f }),
        Structure::Abstract(st) => {
            let mut params = st.params.clone();
            params.extend(chart.params().iter().filter(|p| !st.params.contains(p)).cloned());
            Structure::Abstract(AbstractStructure::new(params, st.sf)?)
        }
    };
    let a = Analysis::of(&base)?;
    let dilated = match &base {
        Structure::Coordinate(f) => Structure::Coordinate(dilate(f, &scale)),
        Structure::Abstract(st) => Structure::Abstract(dilate_abstract(st, &scale)),
    };
    let b = Analysis::of(&dilated)?;
    let mut r = Report::new("dilate");
    r.set("input", source);
    r.set("scale", s(&scale));
    if let Structure::Coordinate(f) = &dilated {
        r.set("dilated_frame", json!({"X1": f.x1.render(&f.chart), "X2": f.x2.render(&f.chart)}));
    }
    r.set("invariants", invariants_value(&a.inv));
    r.set("dilated_invariants", invariants_value(&b.inv));
    r.set(
        "ratios",
        json!({
            "chi": ratio(&b.inv.chi, &a.inv.chi),
            "kappa": ratio(&b.inv.kappa, &a.inv.kappa),
        }),
    );
    let s2 = &scale * &scale;
    let s4 = &s2 * &s2;
    r.check("kappa' = s^2 kappa", is_zero(&(&b.inv.kappa - &(&s2 * &a.inv.kappa))));
    r.check("chi' = s^4 chi", is_zero(&(&b.inv.chi - &(&s4 * &a.inv.chi))));
    r.check("h~' = s^2 h~", mat_eq(&b.inv.h_tilde, &mat2_scale(&a.inv.h_tilde, &s2)));
    Ok(r)
}

fn jacobi_truth(alg: &LieAlgebra) -> Truth {
    Truth::all(alg.jacobi_residuals().iter().map(|j| is_zero(&j.value)))
}

pub fn algebra(name: &str, kappa: Option<&str>) -> Result<Report, CliError> {
    let mut alg = catalog_algebra(name)?;
    if let Some(k) = kappa {
        if !alg.params.iter().any(|p| p == sublorentz_core::fixtures::KAPPA) {
            return Err(CliError::Input(format!("algebra '{name}' has no parameter k")));
        }
        let value = parse_expr(k, &Chart::standard())?;
        if value.as_rational().is_none() {
            return Err(CliError::Input(format!("--kappa must be a rational number, got '{k}'")));
        }
        alg = alg.with_param(sublorentz_core::fixtures::KAPPA, &value)?;
    }
    let mut r = Report::new("algebra");
    r.set("name", name);
    r.set("dimension", alg.dim());
    r.set("basis", alg.labels.clone());
    r.set("params", alg.params.clone());
    r.set(
        "brackets",
        alg.bracket_table().into_iter().map(|(k, v)| format!("{k} = {v}")).collect::<Vec<_>>(),
    );
    let jacobi = jacobi_truth(&alg);
    r.set("jacobi", crate::report::Status::from(jacobi).as_str());
    let killing = alg.killing_form();
    r.set("killing_matrix", rows(&killing.matrix));
    r.set("killing_det", s(&killing.det));
    r.set("killing_inertia", inertia_value(&killing.inertia));
    r.check("Jacobi identity", jacobi);
    let invariance = alg.ad_invariance_residuals(&killing.matrix);
    r.check(
        "Killing form is ad-invariant",
        Truth::all(invariance.iter().map(|(_, v)| is_zero(v))),
    );
    if let Some(marking) = default_marking(name) {
        let (sf, inv) = constant_mode_invariants(&alg, marking)?;
        r.set(
            "marking",
            json!({"X1": alg.labels[marking[0]], "X2": alg.labels[marking[1]], "X0": alg.labels[marking[2]]}),
        );
        r.set("structure_functions", sf_value(&sf));
        r.set("invariants", invariants_value(&inv));
        r.set("classification", classification_value(&classify(&sf, &inv, Mode::Abstract)));
    }
    if name == "conformal8" {
        let ev = sl3_evidence(&alg);
        r.set(
            "sl3_evidence",
            json!({
                "dimension": ev.dimension,
                "jacobi": ev.jacobi,
                "det_nonzero": ev.det_nonzero,
                "inertia": inertia_value(&ev.inertia),
            }),
        );
        r.check("dimension 8, Jacobi, nondegenerate Killing form, inertia (5, 3, 0)", Truth::from_bool(ev.holds()));
        let reference = reference_conformal_killing();
        r.set("reference_killing_det", REFERENCE_CONFORMAL_KILLING_DET);
        let entries = killing.matrix.iter().flatten().zip(reference.iter().flatten());
        r.check("Killing matrix equals the reference matrix", Truth::all(entries.map(|(a, b)| is_zero(&(a - b)))));
        r.check(
            format!("det K = {REFERENCE_CONFORMAL_KILLING_DET}"),
            is_zero(&(&killing.det - &Expr::int(REFERENCE_CONFORMAL_KILLING_DET))),
        );
    }
    Ok(r)
}

pub fn ode(q: &str) -> Result<Report, CliError> {
    let st = sublorentz_core::ode::parse_ode(q)?;
    let chart = &st.frame.chart;
    let mut r = Report::new("ode");
    r.set("Q", s(&st.q));
    r.set("chart", chart.coordinates().to_vec());
    r.set("forms", st.forms.iter().map(|f| f.render(chart)).collect::<Vec<_>>());
    r.set("null_fields", json!({"N1": st.n1.render(chart), "N2": st.n2.render(chart)}));
    for (name, t) in st.verify_null_bundles() {
        r.check(name, t);
    }
    let a = Analysis::of(&Structure::Coordinate(st.frame.clone()))?;
    a.describe(&mut r);
    r.check("c011 + c022 = 0", is_zero(&a.sf.trace()));
    Ok(r)
}

pub fn catalog() -> Result<Report, CliError> {
    let mut r = Report::new("catalog");
    let mut structures = Vec::new();
    for (name, text) in BUILTIN_FILES {
        let def = parse_structure_file(text)?;
        if let Structure::Coordinate(f) = &def.structure {
            structures.push(json!({
                "name": name,
                "X1": f.x1.render(&f.chart),
                "X2": f.x2.render(&f.chart),
            }));
        }
    }
    r.set("structures", structures);
    let mut algebras = Vec::new();
    for name in CATALOG {
        let alg = catalog_algebra(name)?;
        algebras.push(json!({
            "name": name,
            "dimension": alg.dim(),
            "params": alg.params,
            "contact_marking": default_marking(name).is_some(),
        }));
    }
    r.set("algebras", algebras);
    Ok(r)
}
