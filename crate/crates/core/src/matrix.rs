//! Small dense matrices over `Expr`.

use sublorentz_expr::{is_zero, Expr, Truth};

pub type Matrix = Vec<Vec<Expr>>;

/// Determinant; cofactor expansion up to 3x3, elimination beyond.
pub fn det(m: &[Vec<Expr>]) -> Expr {
    let n = m.len();
    match n {
        0 => Expr::one(),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        3 => {
            let minor = |a: usize, b: usize, c: usize, d: usize| {
                &(&m[1][a] * &m[2][b]) - &(&m[1][c] * &m[2][d])
            };
            let t0 = &m[0][0] * &minor(1, 2, 2, 1);
            let t1 = &m[0][1] * &minor(0, 2, 2, 0);
            let t2 = &m[0][2] * &minor(0, 1, 1, 0);
            &(&t0 - &t1) + &t2
        }
        _ => det_elimination(m),
    }
}

fn det_elimination(m: &[Vec<Expr>]) -> Expr {
    let n = m.len();
    let mut a: Matrix = m.to_vec();
    let mut result = Expr::one();
    for col in 0..n {
        let pivot = match (col..n).find(|&r| !a[r][col].is_literal_zero()) {
            Some(p) => p,
            None => return Expr::zero(),
        };
        if pivot != col {
            a.swap(pivot, col);
            result = -result;
        }
        let p = a[col][col].clone();
        result = &result * &p;
        for r in col + 1..n {
            if a[r][col].is_literal_zero() {
                continue;
            }
            let factor = a[r][col].try_div(&p).expect("pivot is nonzero");
            for c in col..n {
                let v = &a[r][c] - &(&factor * &a[col][c]);
                a[r][c] = v;
            }
        }
    }
    result
}

pub fn transpose(m: &[Vec<Expr>]) -> Matrix {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

pub fn mul(a: &[Vec<Expr>], b: &[Vec<Expr>]) -> Matrix {
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| &row[k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Expr::one() } else { Expr::zero() })
                .collect()
        })
        .collect()
}

/// Why an inverse could not be formed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Singularity {
    /// The determinant normalizes to zero.
    Singular,
    /// The determinant could not be decided.
    Undecided,
}

/// Inverse of a 3x3 matrix via the adjugate; the determinant must be
/// decidably nonzero.
pub fn inverse3(m: &[Vec<Expr>]) -> Result<Matrix, Singularity> {
    assert_eq!(m.len(), 3, "3x3 matrix expected");
    let d = det(m);
    match is_zero(&d) {
        Truth::True => return Err(Singularity::Singular),
        Truth::Unknown => return Err(Singularity::Undecided),
        Truth::False => {}
    }
    let inv_d = d.inv().expect("nonzero determinant");
    let cof = |i: usize, j: usize| {
        let rows: Vec<usize> = (0..3).filter(|&r| r != i).collect();
        let cols: Vec<usize> = (0..3).filter(|&c| c != j).collect();
        let v = &(&m[rows[0]][cols[0]] * &m[rows[1]][cols[1]])
            - &(&m[rows[0]][cols[1]] * &m[rows[1]][cols[0]]);
        if (i + j) % 2 == 1 {
            -v
        } else {
            v
        }
    };
    // inverse = adj / det, adj[i][j] = cofactor(j, i)
    Ok((0..3)
        .map(|i| (0..3).map(|j| &cof(j, i) * &inv_d).collect())
        .collect())
}

/// Solves `m * x = rhs` for a 3x3 system.
pub fn solve3(m: &[Vec<Expr>], rhs: &[Expr; 3]) -> Result<[Expr; 3], Singularity> {
    let inv = inverse3(m)?;
    Ok(std::array::from_fn(|i| {
        (0..3).map(|k| &inv[i][k] * &rhs[k]).sum()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|&v| Expr::int(v)).collect())
            .collect()
    }

    fn det_by_minors(a: &Matrix) -> Expr {
        if a.len() == 1 {
            return a[0][0].clone();
        }
        let mut acc = Expr::zero();
        for j in 0..a.len() {
            let minor: Matrix = a[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != j)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let term = &a[0][j] * &det_by_minors(&minor);
            acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    #[test]
    fn elimination_agrees_with_cofactor_expansion() {
        let a = m(&[&[0, -1, 0, 3, 1], &[1, 4, 2, 0, 0], &[0, 1, 5, -2, 2], &[3, 0, 1, 1, -1], &[2, 2, 0, 1, 7]]);
        assert_eq!(det(&a), det_by_minors(&a));
        let a = m(&[&[2, 1], &[4, 3]]);
        assert_eq!(det(&a), Expr::int(2));
    }

    #[test]
    fn inverse_times_matrix_is_identity() {
        let a = m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let inv = inverse3(&a).unwrap();
        assert_eq!(mul(&inv, &a), identity(3));
        let s = m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(inverse3(&s), Err(Singularity::Singular));
    }
}
