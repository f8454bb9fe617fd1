//! Exact symbolic scalars for exterior calculus on a single chart.
//!
//! An [`Expr`] is a rational function over Q in chart coordinates and
//! parameters, extended by the opaque atoms `exp`, `sinh`, `cosh` and `log`
//! with the relation `cosh^2 = 1 + sinh^2`. Values are kept in a canonical
//! form, so `==` decides equality of normal forms.

mod chart;
mod error;
mod expr;
mod parser;
pub mod poly;
mod render;
mod zero;

use std::collections::BTreeMap;

pub use chart::Chart;
pub use error::ExprError;
pub use expr::Expr;
pub use parser::{parse_expr, parse_vector_field};
pub use poly::{Func, Rat};
pub use render::{render_expr, render_json, render_plain, RenderFormat};
pub use zero::{is_zero, Truth};

/// Canonical normal form. Values are canonical on construction, so this is
/// the identity on the representation.
pub fn simplify(e: &Expr) -> Expr {
    e.clone()
}

/// Partial derivative along a chart coordinate.
pub fn differentiate(e: &Expr, var: &str, chart: &Chart) -> Result<Expr, ExprError> {
    chart.differentiate(e, var)
}

/// Simultaneous substitution; bindings must name declared symbols.
pub fn substitute(
    e: &Expr,
    bindings: &BTreeMap<String, Expr>,
    chart: &Chart,
) -> Result<Expr, ExprError> {
    if let Some(name) = bindings.keys().find(|k| !chart.is_declared(k)) {
        return Err(ExprError::UnknownSymbol(name.clone()));
    }
    e.substitute(bindings)
}
