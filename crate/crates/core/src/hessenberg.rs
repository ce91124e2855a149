//! Hessenberg functions, their diagrams and corners, the generator
//! polynomials `f_{i,j}`, the permutations `w_k^{(i,j)}`, and the Schubert
//! cell intersection criterion for regular nilpotent Hessenberg varieties.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use thiserror::Error;

use crate::permutation::Permutation;
use crate::polynomial::ZPoly;
use crate::report::{run_sweep, CaseFailure, VerificationReport};
use crate::schubert::schubert;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HessenbergError {
    #[error("a Hessenberg function needs at least one value")]
    Empty,
    #[error("h({j}) = {value} is outside 1..={n}")]
    OutOfRange { j: usize, value: usize, n: usize },
    #[error("h({j}) = {value} is below the diagonal (need h(j) >= j)")]
    BelowDiagonal { j: usize, value: usize },
    #[error("not weakly increasing: h({j}) = {prev} > h({next_j}) = {next}", next_j = .j + 1)]
    NotIncreasing { j: usize, prev: usize, next: usize },
    #[error("malformed Hessenberg function text {0:?}; expected e.g. \"(3,3,4,5,5)\"")]
    Parse(String),
    #[error("index pair (i,j) = ({i},{j}) violates {constraint}")]
    InvalidIndices {
        i: usize,
        j: usize,
        constraint: &'static str,
    },
    #[error("k = {k} outside 1..={max}")]
    InvalidK { k: usize, max: usize },
    #[error("({i},{j}) is not a corner of {h}")]
    NotACorner { i: usize, j: usize, h: String },
    #[error("corner ({i},{j}) lies on the diagonal and cannot be removed")]
    DiagonalCorner { i: usize, j: usize },
}

/// A weakly increasing `h: [n] -> [n]` with `h(j) >= j`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HessenbergFunction {
    values: Vec<usize>,
}

/// Box `(i, j)` (row `i`, column `j`) of a Hessenberg diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Corner {
    pub i: usize,
    pub j: usize,
}

impl fmt::Display for Corner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

impl HessenbergFunction {
    pub fn new(values: Vec<usize>) -> Result<Self, HessenbergError> {
        let n = values.len();
        if n == 0 {
            return Err(HessenbergError::Empty);
        }
        for (k, &value) in values.iter().enumerate() {
            let j = k + 1;
            if value == 0 || value > n {
                return Err(HessenbergError::OutOfRange { j, value, n });
            }
            if value < j {
                return Err(HessenbergError::BelowDiagonal { j, value });
            }
        }
        if let Some((k, w)) = values.windows(2).enumerate().find(|(_, w)| w[0] > w[1]) {
            return Err(HessenbergError::NotIncreasing {
                j: k + 1,
                prev: w[0],
                next: w[1],
            });
        }
        Ok(Self { values })
    }

    /// `h(j) = j`: the smallest Hessenberg function.
    pub fn diagonal(n: usize) -> Result<Self, HessenbergError> {
        Self::new((1..=n).collect())
    }

    /// `h(j) = n`: the whole flag variety.
    pub fn full(n: usize) -> Result<Self, HessenbergError> {
        Self::new(vec![n; n])
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `h(j)` for 1-based `j`.
    pub fn value(&self, j: usize) -> usize {
        self.values[j - 1]
    }

    /// Box `(i, j)` is shaded iff `i <= h(j)`; boxes off the grid are not.
    pub fn is_shaded(&self, i: usize, j: usize) -> bool {
        (1..=self.n()).contains(&i) && (1..=self.n()).contains(&j) && i <= self.value(j)
    }

    /// Complex dimension `Σ (h(j) - j)` of the variety.
    pub fn dimension(&self) -> usize {
        self.values
            .iter()
            .enumerate()
            .map(|(k, &v)| v - (k + 1))
            .sum()
    }

    pub fn is_corner(&self, c: Corner) -> bool {
        (1..=self.n()).contains(&c.j)
            && self.value(c.j) == c.i
            && (c.j == 1 || self.value(c.j - 1) < c.i)
    }

    /// Corners sorted by column: `h(j) = i` and `j = 1` or `h(j-1) < i`.
    pub fn corners(&self) -> Vec<Corner> {
        (1..=self.n())
            .map(|j| Corner {
                i: self.value(j),
                j,
            })
            .filter(|&c| self.is_corner(c))
            .collect()
    }

    /// Corners strictly below the diagonal.
    pub fn removable_corners(&self) -> Vec<Corner> {
        self.corners().into_iter().filter(|c| c.i > c.j).collect()
    }

    /// `h'` obtained by removing corner `(i, j)`, i.e. `h'(j) = i - 1`.
    pub fn remove_corner(&self, c: Corner) -> Result<Self, HessenbergError> {
        if !self.is_corner(c) {
            return Err(HessenbergError::NotACorner {
                i: c.i,
                j: c.j,
                h: self.to_string(),
            });
        }
        if c.i == c.j {
            return Err(HessenbergError::DiagonalCorner { i: c.i, j: c.j });
        }
        let mut values = self.values.clone();
        values[c.j - 1] -= 1;
        Self::new(values)
    }

    /// Generators `f_{h(1),1}, ..., f_{h(n),n}` of the cohomology presentation.
    pub fn ideal_generators(&self) -> Vec<ZPoly> {
        self.values
            .iter()
            .enumerate()
            .map(|(k, &i)| f_poly(i, k + 1).expect("h(j) >= j"))
            .collect()
    }

    /// The `n x n` diagram, row `i` top to bottom, `#` for shaded boxes.
    pub fn render_grid(&self) -> String {
        let n = self.n();
        (1..=n)
            .map(|i| {
                (1..=n)
                    .map(|j| if self.is_shaded(i, j) { '#' } else { '.' })
                    .collect::<String>()
            })
            .join("\n")
    }

    /// Whether the variety meets the Schubert cell of `w`: for every `r`
    /// with `w(r) >= 2`, `w^{-1}(w(r) - 1) <= h(r)`. Positions with
    /// `w(r) = 1` impose nothing.
    ///
    /// # Panics
    ///
    /// If the degree of `w` differs from `n`.
    pub fn cell_intersects(&self, w: &Permutation) -> bool {
        assert_eq!(w.degree(), self.n(), "permutation degree must equal n");
        let inv = w.inverse();
        (1..=self.n()).all(|r| {
            let v = w.apply(r);
            v < 2 || inv.apply(v - 1) <= self.value(r)
        })
    }

    /// Minimal-length permutations whose cell meets the variety of `h` but
    /// not that of `h'`, where `h'` removes corner `c`. Brute force over
    /// `S_n`.
    pub fn minimal_missing(&self, c: Corner) -> Result<BTreeSet<Permutation>, HessenbergError> {
        let smaller = self.remove_corner(c)?;
        let missing: Vec<Permutation> = Permutation::all(self.n())
            .filter(|w| self.cell_intersects(w) && !smaller.cell_intersects(w))
            .collect();
        let min = missing.iter().map(Permutation::length).min();
        Ok(missing
            .into_iter()
            .filter(|w| Some(w.length()) == min)
            .collect())
    }

    /// Every Hessenberg function on `[n]`, lexicographically by value tuple.
    pub fn enumerate(n: usize) -> HessenbergIter {
        HessenbergIter {
            n,
            next: (n > 0).then(|| (1..=n).collect()),
        }
    }
}

pub struct HessenbergIter {
    n: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for HessenbergIter {
    type Item = HessenbergFunction;

    fn next(&mut self) -> Option<HessenbergFunction> {
        let current = self.next.take()?;
        // Successor: bump the rightmost value below n, then lower everything
        // after it to the least admissible values.
        if let Some(pos) = current.iter().rposition(|&v| v < self.n) {
            let mut succ = current.clone();
            succ[pos] += 1;
            for k in pos + 1..self.n {
                succ[k] = succ[k - 1].max(k + 1);
            }
            self.next = Some(succ);
        }
        Some(HessenbergFunction { values: current })
    }
}

impl fmt::Display for HessenbergFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.values.iter().join(","))
    }
}

impl fmt::Debug for HessenbergFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for HessenbergFunction {
    type Err = HessenbergError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|rest| rest.strip_suffix(')'))
            .ok_or_else(|| HessenbergError::Parse(s.to_string()))?;
        let values = inner
            .split(',')
            .map(|tok| tok.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| HessenbergError::Parse(s.to_string()))?;
        Self::new(values)
    }
}

/// `f_{i,j} = Σ_{k=1}^{j} (Π_{l=j+1}^{i} (x_k - x_l)) x_k`, for `1 <= j <= i`.
pub fn f_poly(i: usize, j: usize) -> Result<ZPoly, HessenbergError> {
    if j == 0 || j > i {
        return Err(HessenbergError::InvalidIndices {
            i,
            j,
            constraint: "1 <= j <= i",
        });
    }
    Ok((1..=j)
        .map(|k| {
            let xk = ZPoly::var(k);
            (j + 1..=i).fold(xk.clone(), |acc, l| &acc * &(&xk - &ZPoly::var(l)))
        })
        .sum())
}

/// `w_k^{(i,j)} = (s_{i-k} s_{i-k-1} ... s_j)(s_{i-k+1} ... s_{i-1})` in `S_i`;
/// the second factor is empty when `k = 1`.
pub fn w_kij(i: usize, j: usize, k: usize) -> Result<Permutation, HessenbergError> {
    if j == 0 || j >= i {
        return Err(HessenbergError::InvalidIndices {
            i,
            j,
            constraint: "1 <= j < i",
        });
    }
    if k == 0 || k > i - j {
        return Err(HessenbergError::InvalidK { k, max: i - j });
    }
    let word: Vec<usize> = (j..=i - k).rev().chain(i - k + 1..i).collect();
    Ok(Permutation::from_word(&word, i).expect("indices lie in 1..i"))
}

/// `Σ_{k=1}^{i-j} (-1)^{k-1} 𝔖_{w_k^{(i,j)}}`.
pub fn alternating_schubert_sum(i: usize, j: usize) -> Result<ZPoly, HessenbergError> {
    w_kij(i, j, 1)?;
    let mut total = ZPoly::zero();
    for k in 1..=i - j {
        let term = schubert(&w_kij(i, j, k)?);
        if k % 2 == 1 {
            total += &term;
        } else {
            total -= &term;
        }
    }
    Ok(total)
}

/// `f_{i,j}` obtained from `F_n = f_{n,1}` by divided differences:
/// `∂_1, ..., ∂_{j-1}` in that order, then `∂_n, ∂_{n-1}, ..., ∂_{i+1}`, and a
/// sign `(-1)^{n-i}`.
pub fn f_via_chain(i: usize, j: usize, n: usize) -> Result<ZPoly, HessenbergError> {
    if j == 0 || j > i || i > n {
        return Err(HessenbergError::InvalidIndices {
            i,
            j,
            constraint: "1 <= j <= i <= n",
        });
    }
    let top = f_poly(n, 1)?;
    let chain = (1..j).chain((i + 1..=n).rev());
    let result = top.divided_differences(chain);
    Ok(if (n - i) % 2 == 1 { -result } else { result })
}

/// Checks `f_{i-1,j} = Σ_k (-1)^{k-1} 𝔖_{w_k^{(i,j)}}` for all `1 <= j < i <= n`.
pub fn verify_theorem(n: usize) -> VerificationReport {
    let cases: Vec<(usize, usize)> = (2..=n).flat_map(|i| (1..i).map(move |j| (i, j))).collect();
    run_sweep("theorem", n, cases, |&(i, j)| {
        let expected = f_poly(i - 1, j).expect("j <= i - 1");
        let actual = alternating_schubert_sum(i, j).expect("j < i");
        if expected == actual {
            Vec::new()
        } else {
            vec![CaseFailure::new(
                format!("(i,j)=({i},{j})"),
                expected,
                actual,
            )]
        }
    })
}
