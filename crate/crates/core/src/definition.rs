//! Structure files: TOML with sections `[chart]`, `[params]`, `[frame]` or
//! `[algebra]`, `[symmetry]` and `[transform]`.

use sublorentz_expr::{parse_expr, parse_vector_field, Chart, Expr};
use toml::{Table, Value};

use crate::calculus::VectorField;
use crate::error::CoreError;
use crate::frame::{AbstractStructure, Frame, Structure};
use crate::invariants::StructureFunctions;
use crate::symmetry::Field;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureDefinition {
    pub chart: Chart,
    pub structure: Structure,
    /// Candidate symmetries with their source text.
    pub symmetries: Vec<(String, Field)>,
    pub theta: Option<Expr>,
    pub scale: Option<Expr>,
}

const SECTIONS: [&str; 6] = ["chart", "params", "frame", "algebra", "symmetry", "transform"];

fn invalid(msg: impl Into<String>) -> CoreError {
    CoreError::InvalidFile(msg.into())
}

fn section<'a>(doc: &'a Table, name: &str) -> Result<Option<&'a Table>, CoreError> {
    match doc.get(name) {
        None => Ok(None),
        Some(Value::Table(t)) => Ok(Some(t)),
        Some(_) => Err(invalid(format!("[{name}] must be a table"))),
    }
}

fn check_keys(t: &Table, name: &str, allowed: &[&str]) -> Result<(), CoreError> {
    match t.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(invalid(format!("unknown key '{k}' in [{name}]"))),
        None => Ok(()),
    }
}

fn string_list(t: &Table, section: &str, key: &str) -> Result<Vec<String>, CoreError> {
    match t.get(key) {
        None => Ok(Vec::new()),
        Some(Value::Array(items)) => items
            .iter()
            .map(|v| {
                v.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| invalid(format!("{section}.{key} must hold strings")))
            })
            .collect(),
        Some(_) => Err(invalid(format!("{section}.{key} must be an array of strings"))),
    }
}

/// A scalar given as a string or a number.
fn expr_value(v: &Value, what: &str, chart: &Chart) -> Result<Expr, CoreError> {
    match v {
        Value::String(s) => Ok(parse_expr(s, chart)?),
        Value::Integer(n) => Ok(Expr::int(*n)),
        _ => Err(invalid(format!("{what} must be a string or an integer"))),
    }
}

fn frame_string<'a>(t: &'a Table, key: &str) -> Result<&'a str, CoreError> {
    t.get(key)
        .ok_or_else(|| invalid(format!("[frame] needs {key}")))?
        .as_str()
        .ok_or_else(|| invalid(format!("frame.{key} must be a string")))
}

/// Parses `a*X0 + b*X1 + c*X2` into frame coefficients.
fn frame_combination(text: &str, chart: &Chart) -> Result<[Expr; 3], CoreError> {
    let names = ["X0", "X1", "X2"];
    let ext = chart.with_params(names)?;
    let e = parse_expr(text, &ext)?;
    let coeffs: [Expr; 3] = names.map(|n| e.derivative(n));
    let mut rest = e.clone();
    for (n, c) in names.iter().zip(&coeffs) {
        rest = &rest - &(c * &Expr::symbol(n));
        if c.symbols().iter().any(|s| names.contains(&s.as_ref())) {
            return Err(invalid(format!("'{text}' is not linear in X0, X1, X2")));
        }
    }
    if !rest.is_literal_zero() {
        return Err(invalid(format!("'{text}' is not a combination of X0, X1, X2")));
    }
    Ok(coeffs)
}

fn parse_field(text: &str, chart: &Chart, coordinate_mode: bool) -> Result<Field, CoreError> {
    if coordinate_mode {
        if let Ok(v) = parse_vector_field(text, chart) {
            return Ok(Field::Coordinate(VectorField::from_components(v)?));
        }
    }
    if chart.is_declared("X0") || chart.is_declared("X1") || chart.is_declared("X2") {
        return Err(invalid("X0, X1, X2 are reserved for frame combinations"));
    }
    match frame_combination(text, chart) {
        Ok(c) => Ok(Field::Frame(c)),
        Err(e) if coordinate_mode => {
            // report the vector-field error, which is the primary syntax
            parse_vector_field(text, chart).map(|_| ()).map_err(CoreError::from)?;
            Err(e)
        }
        Err(e) => Err(e),
    }
}

pub fn parse_structure_file(text: &str) -> Result<StructureDefinition, CoreError> {
    let doc: Table = text.parse().map_err(|e: toml::de::Error| invalid(e.message().to_string()))?;
    if let Some(k) = doc.keys().find(|k| !SECTIONS.contains(&k.as_str())) {
        return Err(invalid(format!("unknown section [{k}]")));
    }
    let coords = match section(&doc, "chart")? {
        Some(t) => {
            check_keys(t, "chart", &["coordinates"])?;
            string_list(t, "chart", "coordinates")?
        }
        None => Vec::new(),
    };
    let coords = if coords.is_empty() {
        vec!["x".to_string(), "y".to_string(), "z".to_string()]
    } else {
        coords
    };
    let params = match section(&doc, "params")? {
        Some(t) => {
            check_keys(t, "params", &["names"])?;
            string_list(t, "params", "names")?
        }
        None => Vec::new(),
    };
    let chart = Chart::new(coords, params.clone())?;
    let structure = match (section(&doc, "frame")?, section(&doc, "algebra")?) {
        (Some(_), Some(_)) => return Err(CoreError::DuplicateMode),
        (None, None) => return Err(CoreError::MissingSection("frame] or [algebra".into())),
        (Some(t), None) => {
            check_keys(t, "frame", &["X1", "X2"])?;
            Structure::Coordinate(Frame::parse(chart.clone(), frame_string(t, "X1")?, frame_string(t, "X2")?)?)
        }
        (None, Some(t)) => {
            check_keys(t, "algebra", &StructureFunctions::NAMES)?;
            let values = StructureFunctions::NAMES
                .iter()
                .map(|n| {
                    let v = t.get(*n).ok_or_else(|| invalid(format!("[algebra] needs {n}")))?;
                    expr_value(v, &format!("algebra.{n}"), &chart)
                })
                .collect::<Result<Vec<_>, _>>()?;
            let sf = StructureFunctions::from_array(values.try_into().expect("six names"));
            Structure::Abstract(AbstractStructure::new(params, sf)?)
        }
    };
    let coordinate_mode = matches!(structure, Structure::Coordinate(_));
    let symmetries = match section(&doc, "symmetry")? {
        Some(t) => {
            check_keys(t, "symmetry", &["fields"])?;
            string_list(t, "symmetry", "fields")?
                .into_iter()
                .map(|s| parse_field(&s, &chart, coordinate_mode).map(|f| (s, f)))
                .collect::<Result<_, _>>()?
        }
        None => Vec::new(),
    };
    let (theta, scale) = match section(&doc, "transform")? {
        Some(t) => {
            check_keys(t, "transform", &["theta", "scale"])?;
            let get = |k: &str| t.get(k).map(|v| expr_value(v, &format!("transform.{k}"), &chart)).transpose();
            (get("theta")?, get("scale")?)
        }
        None => (None, None),
    };
    Ok(StructureDefinition {
        chart,
        structure,
        symmetries,
        theta,
        scale,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coordinate_file() {
        let d = parse_structure_file(
            r#"
            # Heisenberg
            [chart]
            coordinates = ["x", "y", "z"]
            [frame]
            X1 = "d/dx - (y/2)*d/dz"
            X2 = "d/dy + (x/2)*d/dz"
            [symmetry]
            fields = ["y*d/dx + x*d/dy", "X0"]
            [transform]
            theta = "x"
            "#,
        )
        .unwrap();
        assert!(matches!(d.structure, Structure::Coordinate(_)));
        assert!(matches!(d.symmetries[0].1, Field::Coordinate(_)));
        assert_eq!(d.symmetries[1].1, Field::reeb());
        assert_eq!(d.theta, Some(Expr::symbol("x")));
    }

    #[test]
    fn algebra_file() {
        let d = parse_structure_file(
            r#"
            [params]
            names = ["k"]
            [algebra]
            c011 = 0
            c012 = "-k"
            c021 = "-k"
            c022 = 0
            c121 = 0
            c122 = 0
            "#,
        )
        .unwrap();
        assert_eq!(d.structure, Structure::Abstract(crate::fixtures::sl2_orthonormal()));
    }

    #[test]
    fn mode_errors() {
        let both = "[frame]\nX1 = \"d/dx\"\nX2 = \"d/dy\"\n[algebra]\nc011 = 0\n";
        assert_eq!(parse_structure_file(both), Err(CoreError::DuplicateMode));
        assert!(matches!(parse_structure_file("[chart]\n"), Err(CoreError::MissingSection(_))));
        let nonconst = "[algebra]\nc011 = \"x\"\nc012 = 0\nc021 = 0\nc022 = 0\nc121 = 0\nc122 = 0\n";
        assert!(matches!(parse_structure_file(nonconst), Err(CoreError::NonConstant(_))));
        assert!(matches!(parse_structure_file("[bogus]\n"), Err(CoreError::InvalidFile(_))));
    }
}
