//! Coordinate charts: ordered coordinates plus constant parameters.

use crate::error::ExprError;
use crate::expr::Expr;
use crate::poly::Func;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chart {
    coordinates: Vec<String>,
    params: Vec<String>,
}

fn valid_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Chart {
    pub fn new<S: Into<String>>(
        coordinates: impl IntoIterator<Item = S>,
        params: impl IntoIterator<Item = S>,
    ) -> Result<Chart, ExprError> {
        let coordinates: Vec<String> = coordinates.into_iter().map(Into::into).collect();
        let params: Vec<String> = params.into_iter().map(Into::into).collect();
        if coordinates.is_empty() {
            return Err(ExprError::InvalidChart("no coordinates".into()));
        }
        let mut seen = std::collections::BTreeSet::new();
        for name in coordinates.iter().chain(&params) {
            if !valid_identifier(name) {
                return Err(ExprError::InvalidChart(format!("'{name}' is not an identifier")));
            }
            if Func::from_name(name).is_some() {
                return Err(ExprError::InvalidChart(format!("'{name}' is a function name")));
            }
            if !seen.insert(name.as_str()) {
                return Err(ExprError::InvalidChart(format!("'{name}' declared twice")));
            }
        }
        Ok(Chart {
            coordinates,
            params,
        })
    }

    /// Coordinates x, y, z and no parameters.
    pub fn standard() -> Chart {
        Chart::new(["x", "y", "z"], []).expect("valid chart")
    }

    pub fn with_params<S: Into<String>>(
        &self,
        params: impl IntoIterator<Item = S>,
    ) -> Result<Chart, ExprError> {
        let mut all: Vec<String> = self.params.clone();
        all.extend(params.into_iter().map(Into::into));
        Chart::new(self.coordinates.clone(), all)
    }

    pub fn coordinates(&self) -> &[String] {
        &self.coordinates
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn dim(&self) -> usize {
        self.coordinates.len()
    }

    pub fn coordinate_index(&self, name: &str) -> Option<usize> {
        self.coordinates.iter().position(|c| c == name)
    }

    pub fn is_coordinate(&self, name: &str) -> bool {
        self.coordinate_index(name).is_some()
    }

    pub fn is_param(&self, name: &str) -> bool {
        self.params.iter().any(|p| p == name)
    }

    pub fn is_declared(&self, name: &str) -> bool {
        self.is_coordinate(name) || self.is_param(name)
    }

    pub fn coordinate(&self, i: usize) -> Expr {
        Expr::symbol(&self.coordinates[i])
    }

    /// Partial derivative along a chart coordinate.
    pub fn differentiate(&self, e: &Expr, var: &str) -> Result<Expr, ExprError> {
        if !self.is_coordinate(var) {
            return Err(ExprError::UnknownSymbol(var.to_string()));
        }
        Ok(e.derivative(var))
    }
}

impl Default for Chart {
    fn default() -> Self {
        Chart::standard()
    }
}
