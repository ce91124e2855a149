//! Permutations of `{1, ..., n}` in one-line notation.
//!
//! Products are read right to left: `(u * v)(i) = u(v(i))`. With that
//! convention `w * s_i` swaps positions `i` and `i + 1` of `w`, and
//! `w * t_{pq}` swaps positions `p` and `q`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermutationError {
    #[error("degree must be at least 1")]
    InvalidDegree,
    #[error("not a permutation of 1..={n}: {images:?}")]
    NotBijective { images: Vec<usize>, n: usize },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("index {index} out of range for degree {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("transposition needs 1 <= p < q <= n, got p={p}, q={q}, n={n}")]
    InvalidTransposition { p: usize, q: usize, n: usize },
    #[error("cannot embed degree {from} into smaller degree {to}")]
    EmbedTooSmall { from: usize, to: usize },
    #[error("malformed permutation text {0:?}; expected e.g. \"[3,1,2]\"")]
    Parse(String),
}

/// An element of `S_n`. `images[k]` holds `w(k + 1)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its one-line notation (values are 1-based).
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermutationError> {
        let n = images.len();
        if n == 0 {
            return Err(PermutationError::InvalidDegree);
        }
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(PermutationError::NotBijective { images, n });
            }
            seen[v - 1] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Result<Self, PermutationError> {
        if n == 0 {
            return Err(PermutationError::InvalidDegree);
        }
        Ok(Self {
            images: (1..=n).collect(),
        })
    }

    /// The simple transposition `s_r` of `S_n`.
    pub fn simple(r: usize, n: usize) -> Result<Self, PermutationError> {
        if r == 0 || r >= n {
            return Err(PermutationError::IndexOutOfRange { index: r, n });
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(r - 1, r);
        Ok(Self { images })
    }

    /// The transposition `t_{pq}` exchanging the values `p` and `q`.
    pub fn transposition(p: usize, q: usize, n: usize) -> Result<Self, PermutationError> {
        if p == 0 || p >= q || q > n {
            return Err(PermutationError::InvalidTransposition { p, q, n });
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(p - 1, q - 1);
        Ok(Self { images })
    }

    /// The longest element `w_0 = [n, n-1, ..., 1]`.
    pub fn longest(n: usize) -> Result<Self, PermutationError> {
        if n == 0 {
            return Err(PermutationError::InvalidDegree);
        }
        Ok(Self {
            images: (1..=n).rev().collect(),
        })
    }

    /// All of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n).permutations(n).map(|images| Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `w(i)` for a 1-based position `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermutationError> {
        if self.degree() != other.degree() {
            return Err(PermutationError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&v| self.images[v - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (pos, &v) in self.images.iter().enumerate() {
            images[v - 1] = pos + 1;
        }
        Permutation { images }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.images;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&v| v < w[i]).count())
            .sum()
    }

    /// `w * s_i`, i.e. `w` with positions `i` and `i + 1` swapped.
    pub fn mul_simple(&self, i: usize) -> Result<Permutation, PermutationError> {
        if i == 0 || i >= self.degree() {
            return Err(PermutationError::IndexOutOfRange {
                index: i,
                n: self.degree(),
            });
        }
        let mut images = self.images.clone();
        images.swap(i - 1, i);
        Ok(Permutation { images })
    }

    /// `w * t_{pq}`, i.e. `w` with positions `p` and `q` swapped.
    pub fn mul_transposition(&self, p: usize, q: usize) -> Result<Permutation, PermutationError> {
        let n = self.degree();
        if p == 0 || p >= q || q > n {
            return Err(PermutationError::InvalidTransposition { p, q, n });
        }
        let mut images = self.images.clone();
        images.swap(p - 1, q - 1);
        Ok(Permutation { images })
    }

    /// True iff `w(i) > w(i + 1)`.
    pub fn has_descent(&self, i: usize) -> bool {
        i >= 1 && i < self.degree() && self.images[i - 1] > self.images[i]
    }

    pub fn descents(&self) -> impl Iterator<Item = usize> + '_ {
        (1..self.degree()).filter(|&i| self.has_descent(i))
    }

    /// A reduced word `i_1, ..., i_r` with `s_{i_1} * ... * s_{i_r} = w` and
    /// `r = length(w)`.
    ///
    /// Built by repeatedly removing the smallest descent on the right, so the
    /// result is a deterministic function of `w`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut current = self.images.clone();
        let mut word = Vec::with_capacity(self.length());
        while let Some(i) =
            (0..current.len().saturating_sub(1)).find(|&k| current[k] > current[k + 1])
        {
            current.swap(i, i + 1);
            word.push(i + 1);
        }
        word.reverse();
        word
    }

    /// Product `s_{i_1} * ... * s_{i_r}` in `S_n`.
    pub fn from_word(word: &[usize], n: usize) -> Result<Permutation, PermutationError> {
        let mut w = Permutation::identity(n)?;
        for &i in word {
            w = w.mul_simple(i)?;
        }
        Ok(w)
    }

    /// The image `w^{(m)}` of `w` under `S_n -> S_m`, fixing `n+1, ..., m`.
    pub fn embed(&self, m: usize) -> Result<Permutation, PermutationError> {
        let n = self.degree();
        if m < n {
            return Err(PermutationError::EmbedTooSmall { from: n, to: m });
        }
        let mut images = self.images.clone();
        images.extend(n + 1..=m);
        Ok(Permutation { images })
    }

    /// One-line notation with trailing fixed points removed. Two permutations
    /// related by `embed` share the same stable form; the identity maps to
    /// the empty slice.
    pub fn stable_images(&self) -> &[usize] {
        let mut end = self.images.len();
        while end > 0 && self.images[end - 1] == end {
            end -= 1;
        }
        &self.images[..end]
    }

    /// Equality up to embedding into a common degree.
    pub fn stable_eq(&self, other: &Permutation) -> bool {
        self.stable_images() == other.stable_images()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images.iter().join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = PermutationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|rest| rest.strip_suffix(']'))
            .ok_or_else(|| PermutationError::Parse(s.to_string()))?;
        let images = inner
            .split(',')
            .map(|tok| tok.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PermutationError::Parse(s.to_string()))?;
        Permutation::from_images(images)
    }
}
