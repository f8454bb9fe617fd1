//! Seeded generators shared by the integration tests.

#![allow(dead_code)]

use proptest::prelude::Rng;
use proptest::test_runner::{RngAlgorithm, TestRng};
use sublorentz_core::{Frame, VectorField};
use sublorentz_expr::{Chart, Expr};

pub struct Gen(TestRng);

impl Gen {
    pub fn new(seed: u8) -> Gen {
        Gen(TestRng::from_seed(RngAlgorithm::ChaCha, &[seed; 32]))
    }

    /// Uniform in `lo..=hi`.
    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.0.next_u64() % (hi - lo + 1) as u64) as i64
    }

    pub fn coin(&mut self) -> bool {
        self.0.next_u64() & 1 == 1
    }

    /// Monomial in x, y, z of total degree at most `deg`.
    pub fn monomial(&mut self, vars: &[&str], deg: i64) -> Expr {
        let mut m = Expr::one();
        for _ in 0..self.int(0, deg) {
            let v = vars[self.int(0, vars.len() as i64 - 1) as usize];
            m = &m * &Expr::symbol(v);
        }
        m
    }

    /// Sum of up to `terms` small-integer multiples of monomials.
    pub fn poly(&mut self, vars: &[&str], deg: i64, terms: i64) -> Expr {
        let mut p = Expr::zero();
        for _ in 0..self.int(1, terms) {
            let c = match self.int(-3, 3) {
                0 => 1,
                c => c,
            };
            p = &p + &(&Expr::int(c) * &self.monomial(vars, deg));
        }
        p
    }

    /// `X1 = d/dx + A d/dz`, `X2 = d/dy + B d/dz` with polynomial `A`, `B`,
    /// resampled until contact.
    pub fn contact_frame(&mut self) -> Frame {
        let chart = Chart::standard();
        loop {
            let a = self.poly(&["x", "y", "z"], 2, 3);
            let b = self.poly(&["x", "y", "z"], 2, 3);
            let f = Frame::new(
                chart.clone(),
                VectorField::new(Expr::one(), Expr::zero(), a),
                VectorField::new(Expr::zero(), Expr::one(), b),
            )
            .expect("three coordinates");
            if !sublorentz_core::contact::contact_locus(&f).is_literal_zero() {
                return f;
            }
        }
    }

    /// Polynomial vector field in x, y, z.
    pub fn field(&mut self) -> VectorField {
        let vars = ["x", "y", "z"];
        VectorField::new(self.poly(&vars, 2, 2), self.poly(&vars, 2, 2), self.poly(&vars, 2, 2))
    }

    /// Random expression mixing polynomials, quotients and exp/sinh/cosh.
    pub fn expr(&mut self) -> Expr {
        let vars = ["x", "y", "z"];
        let p = self.poly(&vars, 2, 3);
        match self.int(0, 4) {
            0 => p,
            1 => {
                let q = self.poly(&vars, 1, 2);
                match p.try_div(&q) {
                    Ok(v) => v,
                    Err(_) => p,
                }
            }
            2 => &p * &Expr::exp(self.poly(&vars, 1, 2)),
            3 => &p + &Expr::sinh(self.poly(&vars, 1, 2)),
            _ => &p * &Expr::cosh(self.poly(&vars, 1, 1)),
        }
    }
}
