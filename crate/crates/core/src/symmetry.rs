//! Infinitesimal isometries and conformal fields of the frame metric.
//!
//! Fields are handled through their brackets with the frame, expressed on
//! (X0, X1, X2). The metric on the distribution is `g = diag(-1, 1)` in the
//! basis (X1, X2).

use sublorentz_expr::{is_zero, Expr, Truth};

use crate::calculus::VectorField;
use crate::contact::ContactApparatus;
use crate::error::CoreError;
use crate::frame::Frame;
use crate::invariants::{Mat2, StructureFunctions};

/// Coefficients on (X0, X1, X2).
pub type FrameVector = [Expr; 3];

/// A candidate symmetry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Field {
    /// Components along the coordinate fields (coordinate mode only).
    Coordinate(VectorField),
    /// Combination of the frame fields; constant in the abstract mode.
    Frame(FrameVector),
}

impl Field {
    pub fn reeb() -> Field {
        Field::Frame([Expr::one(), Expr::zero(), Expr::zero()])
    }
}

#[derive(Clone, Copy)]
pub enum Geometry<'a> {
    Coordinate {
        frame: &'a Frame,
        apparatus: &'a ContactApparatus,
    },
    Abstract {
        sf: &'a StructureFunctions,
    },
}

fn zero3() -> FrameVector {
    [Expr::zero(), Expr::zero(), Expr::zero()]
}

/// `[X_j, X_i]` on (X0, X1, X2) from the structure functions.
pub fn frame_bracket(sf: &StructureFunctions, j: usize, i: usize) -> FrameVector {
    let table = |a: usize, b: usize| -> Option<FrameVector> {
        match (a, b) {
            (1, 0) => Some([Expr::zero(), sf.c011.clone(), sf.c012.clone()]),
            (2, 0) => Some([Expr::zero(), sf.c021.clone(), sf.c022.clone()]),
            (2, 1) => Some([Expr::one(), sf.c121.clone(), sf.c122.clone()]),
            _ => None,
        }
    };
    if let Some(v) = table(j, i) {
        return v;
    }
    if let Some(v) = table(i, j) {
        return v.map(|e| -e);
    }
    zero3()
}

impl Geometry<'_> {
    fn frame_fields(&self) -> Option<[&VectorField; 3]> {
        match self {
            Geometry::Coordinate { frame, apparatus } => Some([&apparatus.x0, &frame.x1, &frame.x2]),
            Geometry::Abstract { .. } => None,
        }
    }

    fn to_coordinates(&self, z: &Field) -> Result<VectorField, CoreError> {
        let fields = self
            .frame_fields()
            .ok_or(CoreError::WrongMode("a coordinate frame"))?;
        Ok(match z {
            Field::Coordinate(v) => v.clone(),
            Field::Frame(c) => VectorField::combination(c, &fields),
        })
    }

    /// Expands a coordinate field on (X0, X1, X2).
    fn expand(&self, v: &VectorField) -> FrameVector {
        match self {
            Geometry::Coordinate { apparatus, .. } => {
                std::array::from_fn(|i| apparatus.coframe[i].pair(v))
            }
            Geometry::Abstract { .. } => unreachable!("no coordinates in the abstract mode"),
        }
    }

    /// `Z(f)`; zero for constants in the abstract mode.
    pub fn apply(&self, z: &Field, f: &Expr) -> Result<Expr, CoreError> {
        match self {
            Geometry::Abstract { .. } => match z {
                Field::Frame(_) => Ok(Expr::zero()),
                Field::Coordinate(_) => Err(CoreError::WrongMode("a coordinate frame")),
            },
            Geometry::Coordinate { frame, .. } => Ok(frame.apply(&self.to_coordinates(z)?, f)),
        }
    }

    /// `[Z, X_i]` on (X0, X1, X2).
    pub fn ad(&self, z: &Field, i: usize) -> Result<FrameVector, CoreError> {
        match self {
            Geometry::Abstract { sf } => match z {
                Field::Coordinate(_) => Err(CoreError::WrongMode("a coordinate frame")),
                Field::Frame(c) => {
                    let mut acc = zero3();
                    for (j, cj) in c.iter().enumerate() {
                        if cj.is_literal_zero() {
                            continue;
                        }
                        let b = frame_bracket(sf, j, i);
                        for k in 0..3 {
                            acc[k] = &acc[k] + &(cj * &b[k]);
                        }
                    }
                    Ok(acc)
                }
            },
            Geometry::Coordinate { frame, .. } => {
                let zc = self.to_coordinates(z)?;
                let xi = self.frame_fields().expect("coordinate mode")[i];
                Ok(self.expand(&frame.bracket(&zc, xi)))
            }
        }
    }

    /// `[Z, U]` for `U = sum u_i X_i`.
    pub fn ad_vector(&self, z: &Field, u: &FrameVector) -> Result<FrameVector, CoreError> {
        let mut acc = zero3();
        for (i, ui) in u.iter().enumerate() {
            if ui.is_literal_zero() {
                continue;
            }
            let zu = self.apply(z, ui)?;
            acc[i] = &acc[i] + &zu;
            let b = self.ad(z, i)?;
            for k in 0..3 {
                acc[k] = &acc[k] + &(ui * &b[k]);
            }
        }
        Ok(acc)
    }
}

/// Whether `ad_Z` maps the distribution into itself.
pub fn preserves_distribution(z: &Field, geom: &Geometry) -> Result<Truth, CoreError> {
    let a = geom.ad(z, 1)?;
    let b = geom.ad(z, 2)?;
    Ok(is_zero(&a[0]).and(is_zero(&b[0])))
}

fn require_preserved(z: &Field, geom: &Geometry) -> Result<(), CoreError> {
    match preserves_distribution(z, geom)? {
        Truth::True => Ok(()),
        Truth::False => Err(CoreError::DistributionNotPreserved),
        Truth::Unknown => Err(CoreError::Indeterminate(
            "X0 components of [Z, X1], [Z, X2]".into(),
        )),
    }
}

pub fn metric() -> Mat2 {
    [[Expr::int(-1), Expr::zero()], [Expr::zero(), Expr::one()]]
}

/// Iterated restricted Lie derivative `L^l_Z g` on (X1, X2).
pub fn restricted_lie_derivative(z: &Field, geom: &Geometry, order: usize) -> Result<Mat2, CoreError> {
    require_preserved(z, geom)?;
    let rows = [geom.ad(z, 1)?, geom.ad(z, 2)?];
    // a[i][k] = nu_k([Z, X_i]) for i, k in {1, 2}
    let a: Mat2 = std::array::from_fn(|i| std::array::from_fn(|k| rows[i][k + 1].clone()));
    let mut t = metric();
    for _ in 0..order {
        let prev = t.clone();
        t = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let mut v = geom.apply(z, &prev[i][j]).expect("mode checked by ad");
                for k in 0..2 {
                    v = &v - &(&a[i][k] * &prev[k][j]);
                    v = &v - &(&a[j][k] * &prev[i][k]);
                }
                v
            })
        });
    }
    Ok(t)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConformalVerdict {
    Isometry,
    Conformal(Expr),
    Neither,
    Unknown,
}

impl std::fmt::Display for ConformalVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ConformalVerdict::Isometry => f.write_str("isometry"),
            ConformalVerdict::Conformal(mu) => write!(f, "conformal, mu={mu}"),
            ConformalVerdict::Neither => f.write_str("neither"),
            ConformalVerdict::Unknown => f.write_str("unknown"),
        }
    }
}

/// Classifies `L_Z g = mu g`.
pub fn conformal_factor(z: &Field, geom: &Geometry) -> Result<ConformalVerdict, CoreError> {
    let l = restricted_lie_derivative(z, geom, 1)?;
    let proportional = is_zero(&l[0][1]).and(is_zero(&(&l[0][0] + &l[1][1])));
    match proportional {
        Truth::False => return Ok(ConformalVerdict::Neither),
        Truth::Unknown => return Ok(ConformalVerdict::Unknown),
        Truth::True => {}
    }
    let mu = l[1][1].clone();
    Ok(match is_zero(&mu) {
        Truth::True => ConformalVerdict::Isometry,
        Truth::False => ConformalVerdict::Conformal(mu),
        Truth::Unknown => ConformalVerdict::Unknown,
    })
}

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

fn g(u: &FrameVector, v: &FrameVector) -> Expr {
    &(&u[2] * &v[2]) - &(&u[1] * &v[1])
}

/// `sum_k C(n,k) g(ad_Z^k X, ad_Z^(n-k) Y)` for the pairs
/// (X1,X1), (X1,X2), (X2,X2).
pub fn binomial_identity_check(z: &Field, geom: &Geometry, n: usize) -> Result<[Expr; 3], CoreError> {
    require_preserved(z, geom)?;
    let mut powers: [Vec<FrameVector>; 2] = [Vec::new(), Vec::new()];
    for (slot, i) in [1usize, 2].iter().enumerate() {
        let mut u = zero3();
        u[*i] = Expr::one();
        powers[slot].push(u.clone());
        for _ in 0..n {
            u = geom.ad_vector(z, &u)?;
            match is_zero(&u[0]) {
                Truth::True => {}
                Truth::False => return Err(CoreError::DistributionNotPreserved),
                Truth::Unknown => {
                    return Err(CoreError::Indeterminate("X0 component of ad_Z^k X".into()))
                }
            }
            powers[slot].push(u.clone());
        }
    }
    let sum = |a: usize, b: usize| -> Expr {
        (0..=n)
            .map(|k| g(&powers[a][k], &powers[b][n - k]).scale(&sublorentz_expr::Rat::from_integer(binomial(n, k).into())))
            .sum()
    };
    Ok([sum(0, 0), sum(0, 1), sum(1, 1)])
}

/// The Reeb field is an isometry exactly when h~ vanishes; returns both
/// sides of the equivalence.
pub fn reeb_isometry_sides(geom: &Geometry, h_tilde: &Mat2) -> Result<(Truth, Truth), CoreError> {
    let verdict = conformal_factor(&Field::reeb(), geom)?;
    let lhs = match verdict {
        ConformalVerdict::Isometry => Truth::True,
        ConformalVerdict::Unknown => Truth::Unknown,
        _ => Truth::False,
    };
    Ok((lhs, crate::invariants::mat2_is_zero(h_tilde)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::invariants::{analyze_frame, mat2_scale};
    use sublorentz_expr::{parse_expr, parse_vector_field, Chart};

    fn e(s: &str) -> Expr {
        parse_expr(s, &Chart::standard()).unwrap()
    }

    fn coord(s: &str) -> Field {
        Field::Coordinate(VectorField::from_components(parse_vector_field(s, &Chart::standard()).unwrap()).unwrap())
    }

    #[test]
    fn heisenberg_fields() {
        let f = fixtures::heisenberg_frame();
        let (app, _, _) = analyze_frame(&f).unwrap();
        let geom = Geometry::Coordinate {
            frame: &f,
            apparatus: &app,
        };
        let boost = coord("y*d/dx + x*d/dy");
        assert_eq!(preserves_distribution(&boost, &geom).unwrap(), Truth::True);
        assert_eq!(conformal_factor(&boost, &geom).unwrap(), ConformalVerdict::Isometry);
        let dil = coord("x*d/dx + y*d/dy + 2*z*d/dz");
        assert_eq!(
            restricted_lie_derivative(&dil, &geom, 1).unwrap(),
            mat2_scale(&metric(), &e("2"))
        );
        assert_eq!(conformal_factor(&dil, &geom).unwrap(), ConformalVerdict::Conformal(e("2")));
        let bad = coord("z*d/dx");
        assert_eq!(preserves_distribution(&bad, &geom).unwrap(), Truth::False);
        assert_eq!(conformal_factor(&bad, &geom), Err(CoreError::DistributionNotPreserved));
        for n in [2, 3] {
            let r = binomial_identity_check(&boost, &geom, n).unwrap();
            assert!(r.iter().all(|x| x.is_literal_zero()));
        }
    }

    #[test]
    fn dilation_binomial_residuals() {
        let f = fixtures::heisenberg_frame();
        let (app, _, _) = analyze_frame(&f).unwrap();
        let geom = Geometry::Coordinate {
            frame: &f,
            apparatus: &app,
        };
        let dil = coord("x*d/dx + y*d/dy + 2*z*d/dz");
        // [Z, X_i] = -X_i, so the sum is (-2)^n g(X_i, X_j)
        assert_eq!(binomial_identity_check(&dil, &geom, 2).unwrap(), [e("-4"), e("0"), e("4")]);
    }

    #[test]
    fn martinet_reeb_derivative_is_twice_h_bar() {
        let f = fixtures::martinet_frame();
        let (app, _, inv) = analyze_frame(&f).unwrap();
        let geom = Geometry::Coordinate {
            frame: &f,
            apparatus: &app,
        };
        let l = restricted_lie_derivative(&Field::reeb(), &geom, 1).unwrap();
        assert_eq!(l, mat2_scale(&inv.h_bar, &e("2")));
        assert_eq!(l[0][1], e("-1/y^2"));
        assert_eq!(conformal_factor(&Field::reeb(), &geom).unwrap(), ConformalVerdict::Neither);
    }

    #[test]
    fn abstract_reeb_field() {
        let st = fixtures::sl2_orthonormal();
        let geom = Geometry::Abstract { sf: &st.sf };
        assert_eq!(conformal_factor(&Field::reeb(), &geom).unwrap(), ConformalVerdict::Isometry);
        let st = fixtures::sl2_null();
        let geom = Geometry::Abstract { sf: &st.sf };
        assert_eq!(conformal_factor(&Field::reeb(), &geom).unwrap(), ConformalVerdict::Neither);
    }
}
