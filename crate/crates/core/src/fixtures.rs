//! Built-in structures used by the catalog, the CLI and the tests.

use sublorentz_expr::{parse_expr, Chart, Expr};

use crate::frame::{AbstractStructure, Frame};
use crate::invariants::StructureFunctions;

/// Name of the curvature parameter in the constant sl2 structures.
pub const KAPPA: &str = "k";

/// `X1 = d/dx + y^2/2 d/dz`, `X2 = d/dy - x y/2 d/dz`; contact off `y = 0`.
pub fn martinet_frame() -> Frame {
    Frame::parse(Chart::standard(), "d/dx + (1/2)*y^2*d/dz", "d/dy - (1/2)*x*y*d/dz")
        .expect("valid fixture")
}

/// `X1 = d/dx - y/2 d/dz`, `X2 = d/dy + x/2 d/dz`.
pub fn heisenberg_frame() -> Frame {
    Frame::parse(Chart::standard(), "d/dx - (y/2)*d/dz", "d/dy + (x/2)*d/dz")
        .expect("valid fixture")
}

fn constant(params: &[&str], values: [&str; 6]) -> AbstractStructure {
    let chart = Chart::standard()
        .with_params(params.iter().copied())
        .expect("valid parameters");
    let sf = StructureFunctions::from_array(values.map(|v| parse_expr(v, &chart).expect("valid constant")));
    AbstractStructure::new(params.iter().map(|s| s.to_string()).collect(), sf)
        .expect("constant structure")
}

/// All structure functions zero.
pub fn heisenberg_abstract() -> AbstractStructure {
    constant(&[], ["0", "0", "0", "0", "0", "0"])
}

/// `[Y1,X0] = -k Y2`, `[Y2,X0] = -k Y1`, `[Y2,Y1] = X0`.
pub fn sl2_orthonormal() -> AbstractStructure {
    constant(&[KAPPA], ["0", "-k", "-k", "0", "0", "0"])
}

/// `[n1,n0] = k n1`, `[n2,n0] = -k n2`, `[n2,n1] = n0`.
pub fn sl2_null() -> AbstractStructure {
    constant(&[KAPPA], ["k", "0", "0", "-k", "0", "0"])
}

/// The orthonormal sl2 structure at a fixed kappa.
pub fn sl2_orthonormal_at(kappa: &Expr) -> AbstractStructure {
    let k = -kappa;
    AbstractStructure::new(
        Vec::new(),
        StructureFunctions::from_array([
            Expr::zero(),
            k.clone(),
            k,
            Expr::zero(),
            Expr::zero(),
            Expr::zero(),
        ]),
    )
    .expect("constant structure")
}
