use std::fmt;

/// A monomial `x_1^{e_1} * x_2^{e_2} * ...` in an open-ended set of variables.
///
/// Exponents are stored densely by variable index with trailing zeros
/// trimmed, so every monomial has exactly one representation. The derived
/// ordering compares total degree first and then exponents of `x1, x2, ...`
/// lexicographically: graded lexicographic order with `x1 > x2 > ...`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    degree: u32,
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    /// The variable `x_i` (1-based).
    pub fn var(i: usize) -> Self {
        Self::var_pow(i, 1)
    }

    pub fn var_pow(i: usize, e: u32) -> Self {
        assert!(i >= 1, "variables are indexed from 1");
        if e == 0 {
            return Self::one();
        }
        let mut exps = vec![0; i];
        exps[i - 1] = e;
        Self { degree: e, exps }
    }

    /// Builds a monomial from the exponents of `x1, x2, ...`.
    pub fn from_exponents(exps: &[u32]) -> Self {
        let mut exps = exps.to_vec();
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Self {
            degree: exps.iter().sum(),
            exps,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Exponent of `x_i`.
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// Exponents of `x1, ..., x_k` where `k` is the largest variable present.
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Largest variable index with a positive exponent, 0 for the constant.
    pub fn max_var(&self) -> usize {
        self.exps.len()
    }

    /// `(index, exponent)` pairs with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, &e)| (k + 1, e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.exps.len() >= other.exps.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut exps = long.exps.clone();
        for (e, s) in exps.iter_mut().zip(&short.exps) {
            *e += s;
        }
        Monomial {
            degree: self.degree + other.degree,
            exps,
        }
    }

    /// True iff `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree
            && self.exps.len() <= other.exps.len()
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut exps = self.exps.clone();
        for (e, o) in exps.iter_mut().zip(&other.exps) {
            *e -= o;
        }
        Some(Monomial::from_exponents(&exps))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let len = self.exps.len().max(other.exps.len());
        let exps: Vec<u32> = (1..=len)
            .map(|i| self.exponent(i).max(other.exponent(i)))
            .collect();
        Monomial::from_exponents(&exps)
    }

    /// No variable appears in both.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Exchanges the exponents of `x_i` and `x_{i+1}`.
    pub fn swap(&self, i: usize) -> Monomial {
        assert!(i >= 1, "variables are indexed from 1");
        let (a, b) = (self.exponent(i), self.exponent(i + 1));
        if a == b {
            return self.clone();
        }
        let mut exps = self.exps.clone();
        if exps.len() < i + 1 {
            exps.resize(i + 1, 0);
        }
        exps[i - 1] = b;
        exps[i] = a;
        Monomial::from_exponents(&exps)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, e) in self.support() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn grlex_order() {
        // degree dominates
        assert!(m(&[0, 0, 2]) > m(&[1]));
        // x1 > x2 > x3 within a degree
        assert!(m(&[1]) > m(&[0, 1]));
        assert!(m(&[0, 1]) > m(&[0, 0, 1]));
        assert!(m(&[2, 1]) > m(&[2, 0, 1]));
        assert!(m(&[1, 1]) < m(&[2]));
        assert_eq!(m(&[1, 0, 0]), m(&[1]));
    }

    #[test]
    fn division_and_lcm() {
        let a = m(&[2, 1]);
        let b = m(&[1, 0, 3]);
        assert!(m(&[1]).divides(&a));
        assert!(!b.divides(&a));
        assert_eq!(a.div(&m(&[1, 1])), Some(m(&[1])));
        assert_eq!(a.div(&b), None);
        assert_eq!(a.lcm(&b), m(&[2, 1, 3]));
        assert!(m(&[0, 2]).is_coprime(&m(&[1, 0, 1])));
        assert!(!a.is_coprime(&b));
        assert_eq!(a.mul(&b), m(&[3, 1, 3]));
    }

    #[test]
    fn swap_trims() {
        assert_eq!(m(&[0, 1]).swap(1), m(&[1]));
        assert_eq!(m(&[1]).swap(1), m(&[0, 1]));
        assert_eq!(m(&[2, 0, 5]).swap(3), m(&[2, 0, 0, 5]));
        assert_eq!(m(&[1, 1]).swap(1), m(&[1, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(Monomial::one().to_string(), "1");
        assert_eq!(m(&[2, 1]).to_string(), "x1^2*x2");
        assert_eq!(m(&[0, 0, 1]).to_string(), "x3");
    }
}
