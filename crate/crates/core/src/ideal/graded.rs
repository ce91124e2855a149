//! Degree-by-degree linear algebra for homogeneous ideals.
//!
//! The degree-`d` piece of `I = (g_1, ..., g_s)` is spanned by `m * g_k` for
//! monomials `m` of degree `d - deg g_k`. Row-reducing those vectors gives
//! `dim (R/I)_d` and decides membership of homogeneous polynomials. Nothing
//! here touches Gröbner bases, so it serves as an independent check on them.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::{monomials_of_degree, HilbertSeries, IdealError};
use crate::polynomial::{Monomial, QPoly};

pub struct GradedIdeal {
    n: usize,
    gens: Vec<QPoly>,
}

/// Row echelon form over `Q`, kept incrementally.
struct Echelon {
    /// Pivot column -> normalized row with a 1 at the pivot.
    rows: Vec<(usize, Vec<BigRational>)>,
}

impl Echelon {
    fn new() -> Self {
        Self { rows: Vec::new() }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current rows; returns the residue.
    fn residue(&self, mut v: Vec<BigRational>) -> Vec<BigRational> {
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let factor = v[*pivot].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &factor * r;
                }
            }
        }
        v
    }

    /// Adds `v` to the span; returns whether the rank grew.
    fn insert(&mut self, v: Vec<BigRational>) -> bool {
        let mut v = self.residue(v);
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[pivot].recip();
        for x in v.iter_mut() {
            *x *= &inv;
        }
        // Keep existing rows reduced at the new pivot so residue() stays a
        // single pass.
        for (_, row) in self.rows.iter_mut() {
            if !row[pivot].is_zero() {
                let factor = row[pivot].clone();
                for (x, y) in row.iter_mut().zip(&v) {
                    if !y.is_zero() {
                        *x -= &factor * y;
                    }
                }
            }
        }
        self.rows.push((pivot, v));
        true
    }
}

impl GradedIdeal {
    /// All generators must be homogeneous.
    pub fn new(gens: &[QPoly], n: usize) -> Result<Self, IdealError> {
        for (index, g) in gens.iter().enumerate() {
            if !g.is_homogeneous() {
                return Err(IdealError::NotHomogeneous { index });
            }
            if g.max_var() > n {
                return Err(IdealError::VariableOutOfRange {
                    found: g.max_var(),
                    n,
                });
            }
        }
        Ok(Self {
            n,
            gens: gens.iter().filter(|g| !g.is_zero()).cloned().collect(),
        })
    }

    fn slice(&self, d: u32) -> (HashMap<Monomial, usize>, Echelon) {
        let basis = monomials_of_degree(self.n, d);
        let index: HashMap<Monomial, usize> =
            basis.into_iter().enumerate().map(|(k, m)| (m, k)).collect();
        let mut ech = Echelon::new();
        for g in &self.gens {
            let gd = g.degree().expect("nonzero");
            if gd > d {
                continue;
            }
            for m in monomials_of_degree(self.n, d - gd) {
                let row = to_vector(&g.mul_monomial(&m), &index);
                ech.insert(row);
                if ech.rank() == index.len() {
                    return (index, ech);
                }
            }
        }
        (index, ech)
    }

    /// `dim (R/I)_d`.
    pub fn quotient_dimension(&self, d: u32) -> usize {
        let (index, ech) = self.slice(d);
        index.len() - ech.rank()
    }

    /// Membership, tested one homogeneous component at a time.
    pub fn contains(&self, f: &QPoly) -> bool {
        f.homogeneous_components().into_iter().all(|(d, part)| {
            let (index, ech) = self.slice(d);
            ech.residue(to_vector(&part, &index))
                .iter()
                .all(Zero::is_zero)
        })
    }

    /// Graded dimensions up to the first vanishing degree; `None` if no
    /// degree up to `max_degree` vanishes.
    pub fn hilbert_series(&self, max_degree: u32) -> Option<HilbertSeries> {
        let mut coeffs = Vec::new();
        for d in 0..=max_degree {
            let dim = self.quotient_dimension(d);
            if dim == 0 {
                return Some(HilbertSeries::from_coefficients(coeffs));
            }
            coeffs.push(dim as u64);
        }
        None
    }
}

fn to_vector(p: &QPoly, index: &HashMap<Monomial, usize>) -> Vec<BigRational> {
    let mut v = vec![BigRational::zero(); index.len()];
    for (m, c) in p.terms() {
        v[index[m]] = c.clone();
    }
    v
}
