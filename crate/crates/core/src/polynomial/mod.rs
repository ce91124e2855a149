//! Sparse multivariate polynomials with exact coefficients, the variable swap
//! `s_i` and the divided difference operator `∂_i`.

mod monomial;
mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use monomial::Monomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("not divisible by x{index} - x{next}; remainder {remainder}", next = .index + 1)]
    NotDivisible { index: usize, remainder: String },
    #[error("no value assigned to x{0}")]
    MissingVariable(usize),
}

/// Exact coefficient ring: integers or rationals.
pub trait Coefficient:
    Clone
    + Eq
    + Signed
    + fmt::Display
    + fmt::Debug
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + Send
    + Sync
    + 'static
{
    fn from_integer(n: BigInt) -> Self;
    fn to_rational(&self) -> BigRational;
    /// Parses an unsigned literal, `"12"` or (for rationals) `"3/4"`.
    fn parse_literal(num: &str, den: Option<&str>) -> Option<Self>;
}

impl Coefficient for BigInt {
    fn from_integer(n: BigInt) -> Self {
        n
    }

    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }

    fn parse_literal(num: &str, den: Option<&str>) -> Option<Self> {
        let n: BigInt = num.parse().ok()?;
        match den {
            None => Some(n),
            Some(d) => {
                let d: BigInt = d.parse().ok()?;
                if d.is_zero() || !(&n % &d).is_zero() {
                    None
                } else {
                    Some(n / d)
                }
            }
        }
    }
}

impl Coefficient for BigRational {
    fn from_integer(n: BigInt) -> Self {
        BigRational::from_integer(n)
    }

    fn to_rational(&self) -> BigRational {
        self.clone()
    }

    fn parse_literal(num: &str, den: Option<&str>) -> Option<Self> {
        let n: BigInt = num.parse().ok()?;
        let d: BigInt = match den {
            Some(d) => d.parse().ok()?,
            None => BigInt::one(),
        };
        if d.is_zero() {
            None
        } else {
            Some(BigRational::new(n, d))
        }
    }
}

/// Integer polynomials, used for Schubert and Hessenberg generator work.
pub type ZPoly = Polynomial<BigInt>;
/// Rational polynomials, used by the ideal machinery.
pub type QPoly = Polynomial<BigRational>;

/// A polynomial as a map from monomials to nonzero coefficients. The map is
/// kept canonical, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Polynomial<C> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coefficient> Polynomial<C> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn term(c: C, m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    /// The variable `x_i`.
    pub fn var(i: usize) -> Self {
        Self::term(C::one(), Monomial::var(i))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&C> {
        self.terms.get(m)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.last_key_value()
    }

    /// Removes and returns the leading term.
    pub fn pop_leading(&mut self) -> Option<(Monomial, C)> {
        self.terms.pop_last()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    /// Zero counts as homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn homogeneous_components(&self) -> BTreeMap<u32, Self> {
        let mut out: BTreeMap<u32, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree())
                .or_insert_with(Self::zero)
                .terms
                .insert(m.clone(), c.clone());
        }
        out
    }

    /// Largest variable index occurring, 0 for constants.
    pub fn max_var(&self) -> usize {
        self.terms.keys().map(Monomial::max_var).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self -= c * m * g`, in place.
    pub fn sub_scaled(&mut self, c: &C, m: &Monomial, g: &Self) {
        for (gm, gc) in &g.terms {
            let coeff = -(c.clone() * gc.clone());
            self.add_term(m.mul(gm), coeff);
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    pub fn to_rational(&self) -> QPoly {
        self.map_coeffs(C::to_rational)
    }

    /// `s_i(f)`: the result of exchanging `x_i` and `x_{i+1}`.
    pub fn swap_vars(&self, i: usize) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.swap(i), c.clone()))
                .collect(),
        }
    }

    /// Exact quotient of `self` by `x_i - x_{i+1}`.
    ///
    /// The divisor's leading monomial in grlex is `x_i`, so each step cancels
    /// the current leading term `c * t * x_i` and adds back `c * t * x_{i+1}`,
    /// which is strictly smaller. Leading terms free of `x_i` are the
    /// remainder.
    pub fn exact_divide_linear(&self, i: usize) -> Result<Self, PolyError> {
        assert!(i >= 1, "variables are indexed from 1");
        let mut work = self.terms.clone();
        let mut quotient = Self::zero();
        let mut remainder = Self::zero();
        let xi = Monomial::var(i);
        let next = Monomial::var(i + 1);
        while let Some((m, c)) = work.pop_last() {
            match m.div(&xi) {
                Some(t) => {
                    let shifted = t.mul(&next);
                    quotient.add_term(t, c.clone());
                    let mut tail = Self { terms: work };
                    tail.add_term(shifted, c);
                    work = tail.terms;
                }
                None => remainder.add_term(m, c),
            }
        }
        if remainder.is_zero() {
            Ok(quotient)
        } else {
            Err(PolyError::NotDivisible {
                index: i,
                remainder: remainder.to_string(),
            })
        }
    }

    /// The divided difference `∂_i(f) = (f - s_i(f)) / (x_i - x_{i+1})`.
    ///
    /// # Panics
    ///
    /// If the exact division leaves a remainder, which cannot happen for a
    /// correct arithmetic core.
    pub fn divided_difference(&self, i: usize) -> Self {
        let numerator = self - &self.swap_vars(i);
        match numerator.exact_divide_linear(i) {
            Ok(q) => q,
            Err(e) => panic!("divided difference ∂_{i} lost exactness: {e}"),
        }
    }

    /// Applies `∂_{i_1}` first, then `∂_{i_2}`, and so on.
    pub fn divided_differences(&self, indices: impl IntoIterator<Item = usize>) -> Self {
        indices
            .into_iter()
            .fold(self.clone(), |acc, i| acc.divided_difference(i))
    }

    /// Exact substitution of rational values for the variables.
    pub fn evaluate(&self, point: &BTreeMap<usize, BigRational>) -> Result<BigRational, PolyError> {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut value = c.to_rational();
            for (i, e) in m.support() {
                let x = point.get(&i).ok_or(PolyError::MissingVariable(i))?;
                value *= num_traits::pow(x.clone(), e as usize);
            }
            total += value;
        }
        Ok(total)
    }

    /// True iff every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
}

impl<C: Coefficient> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (k, sign) {
                (0, "-") => f.write_str("-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<C: Coefficient> std::str::FromStr for Polynomial<C> {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse::parse(s)
    }
}

impl<C: Coefficient> AddAssign<&Polynomial<C>> for Polynomial<C> {
    fn add_assign(&mut self, rhs: &Polynomial<C>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl<C: Coefficient> SubAssign<&Polynomial<C>> for Polynomial<C> {
    fn sub_assign(&mut self, rhs: &Polynomial<C>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl<C: Coefficient> Add for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn add(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coefficient> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn sub(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Coefficient> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn mul(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = Polynomial::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.mul(b), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Coefficient> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn neg(self) -> Polynomial<C> {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl<C: Coefficient> Add for Polynomial<C> {
    type Output = Polynomial<C>;

    fn add(mut self, rhs: Polynomial<C>) -> Polynomial<C> {
        self += &rhs;
        self
    }
}

impl<C: Coefficient> Sub for Polynomial<C> {
    type Output = Polynomial<C>;

    fn sub(mut self, rhs: Polynomial<C>) -> Polynomial<C> {
        self -= &rhs;
        self
    }
}

impl<C: Coefficient> Mul for Polynomial<C> {
    type Output = Polynomial<C>;

    fn mul(self, rhs: Polynomial<C>) -> Polynomial<C> {
        &self * &rhs
    }
}

impl<C: Coefficient> Neg for Polynomial<C> {
    type Output = Polynomial<C>;

    fn neg(self) -> Polynomial<C> {
        -&self
    }
}

impl<C: Coefficient> std::iter::Sum for Polynomial<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| acc + p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(s: &str) -> ZPoly {
        s.parse().unwrap()
    }

    fn x(i: usize) -> ZPoly {
        ZPoly::var(i)
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn arb_poly() -> impl Strategy<Value = ZPoly> {
        prop::collection::vec((prop::collection::vec(0u32..4, 0..5), -9i64..10), 0..20).prop_map(
            |terms| {
                ZPoly::from_terms(
                    terms
                        .into_iter()
                        .map(|(e, c)| (Monomial::from_exponents(&e), BigInt::from(c))),
                )
            },
        )
    }

    #[test]
    fn arithmetic_examples() {
        assert!((&x(1) + &(-&x(1))).is_zero());
        let f21 = &(&x(1) - &x(2)) * &x(1);
        assert_eq!(f21, z("x1^2 - x1*x2"));
        assert_eq!(z("2*x1").scale(&BigInt::from(-3)), z("-6*x1"));
        assert_eq!(x(1).scale(&BigInt::zero()), ZPoly::zero());
        assert_eq!(z("x1 + 1").pow(2), z("x1^2 + 2*x1 + 1"));
    }

    #[test]
    fn swap_examples() {
        assert_eq!(x(1).swap_vars(1), x(2));
        assert_eq!(z("x1*x2").swap_vars(1), z("x1*x2"));
        assert_eq!(z("x3^2 + x2").swap_vars(2), z("x2^2 + x3"));
    }

    #[test]
    fn divided_difference_examples() {
        assert_eq!(x(1).divided_difference(1), ZPoly::one());
        assert!(z("x1*x2").divided_difference(1).is_zero());
        assert_eq!(z("x1^2*x2").divided_difference(2), z("x1^2"));
        assert!(ZPoly::one().divided_difference(3).is_zero());
        assert_eq!(x(3).divided_difference(3), ZPoly::one());
    }

    #[test]
    fn exact_division_examples() {
        assert_eq!(z("x1 - x2").exact_divide_linear(1).unwrap(), ZPoly::one());
        assert_eq!(
            z("x1^2 - x2^2").exact_divide_linear(1).unwrap(),
            z("x1 + x2")
        );
        let err = z("x1*x3").exact_divide_linear(1).unwrap_err();
        assert!(matches!(err, PolyError::NotDivisible { index: 1, .. }));
        assert!(z("x2 - x3").exact_divide_linear(1).is_err());
        assert_eq!(
            z("x2^3 - x3^3").exact_divide_linear(2).unwrap(),
            z("x2^2 + x2*x3 + x3^2")
        );
    }

    #[test]
    fn evaluate_examples() {
        let point: BTreeMap<usize, BigRational> = [(1, q(2)), (2, q(3))].into();
        assert_eq!(z("x1^2 - x1*x2").evaluate(&point).unwrap(), q(-2));
        assert_eq!(ZPoly::zero().evaluate(&BTreeMap::new()).unwrap(), q(0));
        assert_eq!(
            z("x3 + 1").evaluate(&point),
            Err(PolyError::MissingVariable(3))
        );
    }

    #[test]
    fn degree_bookkeeping() {
        let f = z("x1^2*x3 - x2^3 + x1");
        assert!(!f.is_homogeneous());
        assert_eq!(f.degree(), Some(3));
        assert_eq!(f.homogeneous_components().len(), 2);
        assert_eq!(f.max_var(), 3);
        assert!(ZPoly::zero().is_homogeneous());
        assert_eq!(ZPoly::zero().degree(), None);
    }

    #[test]
    fn rational_coefficients() {
        let f: QPoly = "3/2*x1 - 1/3".parse().unwrap();
        assert_eq!(f.to_string(), "3/2*x1 - 1/3");
        assert_eq!(
            z("2*x1 + 2")
                .to_rational()
                .scale(&BigRational::new(1.into(), 2.into())),
            "x1 + 1".parse().unwrap()
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn mul_commutes(f in arb_poly(), g in arb_poly()) {
            prop_assert_eq!(&f * &g, &g * &f);
        }

        #[test]
        fn swap_is_involution(f in arb_poly(), i in 1usize..5) {
            prop_assert_eq!(f.swap_vars(i).swap_vars(i), f);
        }

        #[test]
        fn exact_division_inverts_multiplication(f in arb_poly(), i in 1usize..5) {
            let lin = &ZPoly::var(i) - &ZPoly::var(i + 1);
            prop_assert_eq!((&f * &lin).exact_divide_linear(i).unwrap(), f);
        }

        #[test]
        fn leibniz_rule(f in arb_poly(), g in arb_poly(), i in 1usize..4) {
            let lhs = (&f * &g).divided_difference(i);
            let rhs = &(&f.divided_difference(i) * &g) + &(&f.swap_vars(i) * &g.divided_difference(i));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn text_round_trip(f in arb_poly()) {
            let text = f.to_string();
            prop_assert_eq!(text.parse::<ZPoly>().unwrap(), f);
        }
    }
}
