//! Orthonormal frames: coordinate vector fields or constant structure data.

use sublorentz_expr::{Chart, Expr};

use crate::calculus::VectorField;
use crate::error::CoreError;
use crate::invariants::StructureFunctions;

/// Orthonormal frame on a chart; `x1` timelike, `x2` spacelike.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    pub chart: Chart,
    pub x1: VectorField,
    pub x2: VectorField,
}

impl Frame {
    pub fn new(chart: Chart, x1: VectorField, x2: VectorField) -> Result<Frame, CoreError> {
        if chart.dim() != 3 {
            return Err(CoreError::Dimension(chart.dim()));
        }
        Ok(Frame { chart, x1, x2 })
    }

    /// Frame from vector-field strings such as `d/dx + y*d/dz`.
    pub fn parse(chart: Chart, x1: &str, x2: &str) -> Result<Frame, CoreError> {
        let a = VectorField::from_components(sublorentz_expr::parse_vector_field(x1, &chart)?)?;
        let b = VectorField::from_components(sublorentz_expr::parse_vector_field(x2, &chart)?)?;
        Frame::new(chart, a, b)
    }

    pub fn bracket(&self, a: &VectorField, b: &VectorField) -> VectorField {
        a.bracket(b, &self.chart)
    }

    pub fn apply(&self, x: &VectorField, f: &Expr) -> Expr {
        x.apply(f, &self.chart)
    }
}

/// Left-invariant structure given by constant structure functions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbstractStructure {
    pub params: Vec<String>,
    pub sf: StructureFunctions,
}

impl AbstractStructure {
    pub fn new(params: Vec<String>, sf: StructureFunctions) -> Result<AbstractStructure, CoreError> {
        for c in sf.as_array() {
            if let Some(s) = c.symbols().iter().find(|s| !params.iter().any(|p| p == s.as_ref())) {
                return Err(CoreError::NonConstant(format!("{c} depends on '{s}'")));
            }
        }
        Ok(AbstractStructure { params, sf })
    }

    /// Chart carrying only the declared parameters (coordinates unused).
    pub fn chart(&self) -> Chart {
        Chart::standard()
            .with_params(self.params.iter().cloned())
            .expect("parameters validated at parse time")
    }
}

/// Either input mode of a structure definition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    Coordinate(Frame),
    Abstract(AbstractStructure),
}
