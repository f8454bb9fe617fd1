//! Three-valued zero test.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::expr::Expr;
use crate::poly::Rat;

/// Outcome of a decision that may be out of reach for the kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Truth {
    True,
    False,
    Unknown,
}

impl Truth {
    pub fn from_bool(b: bool) -> Truth {
        if b {
            Truth::True
        } else {
            Truth::False
        }
    }

    pub fn is_true(self) -> bool {
        self == Truth::True
    }

    pub fn is_false(self) -> bool {
        self == Truth::False
    }

    pub fn is_unknown(self) -> bool {
        self == Truth::Unknown
    }

    pub fn not(self) -> Truth {
        match self {
            Truth::True => Truth::False,
            Truth::False => Truth::True,
            Truth::Unknown => Truth::Unknown,
        }
    }

    pub fn and(self, other: Truth) -> Truth {
        match (self, other) {
            (Truth::False, _) | (_, Truth::False) => Truth::False,
            (Truth::True, Truth::True) => Truth::True,
            _ => Truth::Unknown,
        }
    }

    pub fn or(self, other: Truth) -> Truth {
        self.not().and(other.not()).not()
    }

    pub fn all(items: impl IntoIterator<Item = Truth>) -> Truth {
        items.into_iter().fold(Truth::True, Truth::and)
    }
}

const SAMPLE_POOL: [(i64, i64); 12] = [
    (0, 1),
    (1, 1),
    (0, 1),
    (-1, 1),
    (2, 1),
    (0, 1),
    (1, 2),
    (-3, 1),
    (0, 1),
    (5, 3),
    (-2, 7),
    (3, 1),
];
const SAMPLE_POINTS: u64 = 96;

fn sample_points(names: &[Arc<str>]) -> impl Iterator<Item = BTreeMap<Arc<str>, Rat>> + '_ {
    (0..SAMPLE_POINTS).map(move |i| {
        names
            .iter()
            .enumerate()
            .map(|(j, name)| {
                let idx = if i == 0 {
                    0
                } else if i == 1 {
                    1
                } else {
                    // fixed linear congruential mixing; reproducible across runs
                    let h = (i
                        .wrapping_mul(6364136223846793005)
                        .wrapping_add((j as u64 + 1).wrapping_mul(1442695040888963407)))
                        >> 33;
                    (h % SAMPLE_POOL.len() as u64) as usize
                };
                let (n, d) = SAMPLE_POOL[idx];
                (name.clone(), Rat::new(BigInt::from(n), BigInt::from(d)))
            })
            .collect()
    })
}

/// `True` only for the zero normal form, `False` when the function is
/// provably nonzero, `Unknown` otherwise.
pub fn is_zero(e: &Expr) -> Truth {
    if e.is_literal_zero() {
        return Truth::True;
    }
    if !e.has_atoms() {
        return Truth::False;
    }
    let names: Vec<Arc<str>> = e.symbols().into_iter().collect();
    for point in sample_points(&names) {
        if let Some(v) = e.eval_rational(&point) {
            if !v.is_zero() {
                return Truth::False;
            }
        }
    }
    Truth::Unknown
}
