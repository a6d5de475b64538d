use std::sync::Arc;

use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Polynomial, Rational, Ring};
use crate::Error;

/// An invertible linear change of coordinates fixing the origin. Row i gives
/// the linear form substituted for variable i.
#[derive(Debug, Clone, PartialEq)]
pub struct Frame {
    matrix: Vec<Vec<Rational>>,
    seed: Option<u64>,
}

impl Frame {
    pub fn identity(n: usize) -> Frame {
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                    .collect()
            })
            .collect();
        Frame { matrix, seed: None }
    }

    pub fn from_matrix(matrix: Vec<Vec<Rational>>) -> Result<Frame, Error> {
        let n = matrix.len();
        if n == 0 || matrix.iter().any(|row| row.len() != n) {
            return Err(Error::Input("frame matrix must be square".into()));
        }
        let f = Frame { matrix, seed: None };
        if f.try_inverse().is_none() {
            return Err(Error::SingularFrame);
        }
        Ok(f)
    }

    /// Seeded random frame with small integer entries in [-bound, bound],
    /// retried until invertible.
    pub fn random(n: usize, seed: u64, bound: i64) -> Frame {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let matrix: Vec<Vec<Rational>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| Rational::from_integer(rng.gen_range(-bound..=bound).into()))
                        .collect()
                })
                .collect();
            let f = Frame {
                matrix,
                seed: Some(seed),
            };
            if f.try_inverse().is_some() {
                return f;
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.matrix
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, e)| if i == j { e.is_one() } else { e.is_zero() })
        })
    }

    /// Gauss-Jordan inverse; `None` when singular.
    fn try_inverse(&self) -> Option<Vec<Vec<Rational>>> {
        let n = self.dim();
        let mut a = self.matrix.clone();
        let mut inv = Frame::identity(n).matrix;
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].clone();
            for j in 0..n {
                a[col][j] /= &p;
                inv[col][j] /= &p;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let factor = a[r][col].clone();
                    for j in 0..n {
                        let t = &a[col][j] * &factor;
                        a[r][j] -= t;
                        let t = &inv[col][j] * &factor;
                        inv[r][j] -= t;
                    }
                }
            }
        }
        Some(inv)
    }

    pub fn inverse(&self) -> Frame {
        Frame {
            matrix: self.try_inverse().expect("frame invariant: invertible"),
            seed: self.seed,
        }
    }

    /// Composition: (self.compose(other)).apply(f) == other.apply(self.apply(f)).
    pub fn compose(&self, other: &Frame) -> Frame {
        let n = self.dim();
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n)
                            .map(|k| &self.matrix[i][k] * &other.matrix[k][j])
                            .sum()
                    })
                    .collect()
            })
            .collect();
        Frame { matrix, seed: None }
    }

    /// Substitutes variable i by the linear form of row i.
    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        if self.is_identity() {
            return f.clone();
        }
        let ring = f.ring();
        let images: Vec<Polynomial> = self
            .matrix
            .iter()
            .map(|row| linear_form(ring, row))
            .collect();
        f.substitute(&images)
    }

    /// Matrix-vector product.
    pub fn apply_point(&self, p: &[Rational]) -> Vec<Rational> {
        self.matrix
            .iter()
            .map(|row| row.iter().zip(p).map(|(a, b)| a * b).sum())
            .collect()
    }
}

fn linear_form(ring: &Arc<Ring>, row: &[Rational]) -> Polynomial {
    let mut acc = Polynomial::zero(ring);
    for (j, c) in row.iter().enumerate() {
        if !c.is_zero() {
            acc = &acc + &Polynomial::var(ring, j).scale(c);
        }
    }
    acc
}
