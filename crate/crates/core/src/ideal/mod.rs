//! Ideals in `Q[x1, ..., xn]` under graded lexicographic order: reduced
//! Gröbner bases by Buchberger's algorithm, normal forms, membership, and
//! Hilbert series of zero-dimensional quotients.

pub mod graded;

use std::collections::VecDeque;
use std::fmt;

use itertools::Itertools;
use num_traits::One;
use thiserror::Error;

use crate::hessenberg::HessenbergFunction;
use crate::polynomial::{Monomial, PolyError, QPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("polynomial uses x{found} but the ring has only {n} variables")]
    VariableOutOfRange { found: usize, n: usize },
    #[error("quotient is not finite-dimensional: no leading term is a pure power of x{0}")]
    NotZeroDimensional(usize),
    #[error("generator {index} is not homogeneous")]
    NotHomogeneous { index: usize },
    #[error("ideal file line {line}: {message}")]
    File { line: usize, message: String },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A reduced Gröbner basis in grlex with `x1 > x2 > ... > xn`. Generators
/// are monic and sorted by leading monomial, largest first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    generators: Vec<QPoly>,
    n: usize,
}

fn leading_monomial(p: &QPoly) -> &Monomial {
    p.leading_term().expect("basis elements are nonzero").0
}

fn monic(p: QPoly) -> QPoly {
    let lc = p.leading_term().expect("nonzero").1.clone();
    if lc.is_one() {
        p
    } else {
        p.scale(&lc.recip())
    }
}

/// Full reduction of `f` by `divisors`: the remainder has no term divisible
/// by any divisor's leading monomial.
fn reduce(f: &QPoly, divisors: &[QPoly]) -> QPoly {
    let mut work = f.clone();
    let mut remainder = QPoly::zero();
    while let Some((m, c)) = work.pop_leading() {
        let hit = divisors.iter().find_map(|g| {
            let (gm, gc) = g.leading_term()?;
            m.div(gm).map(|t| (g, t, gc))
        });
        match hit {
            Some((g, t, gc)) => {
                // The leading terms cancel; put the popped term back only
                // through the subtraction of everything below it.
                let factor = c / gc.clone();
                let mut tail = g.clone();
                tail.pop_leading();
                work.sub_scaled(&factor, &t, &tail);
            }
            None => remainder.add_term(m, c),
        }
    }
    remainder
}

fn s_polynomial(f: &QPoly, g: &QPoly) -> QPoly {
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let lcm = fm.lcm(gm);
    let left = f
        .mul_monomial(&lcm.div(fm).expect("lcm"))
        .scale(&fc.recip());
    let right = g
        .mul_monomial(&lcm.div(gm).expect("lcm"))
        .scale(&gc.recip());
    &left - &right
}

/// Reduced Gröbner basis of the ideal generated by `gens` in `n` variables.
///
/// Buchberger's algorithm with the product criterion: pairs whose leading
/// monomials are coprime are skipped, since their S-polynomial always
/// reduces to zero.
pub fn groebner(gens: &[QPoly], n: usize) -> Result<GroebnerBasis, IdealError> {
    for g in gens {
        if g.max_var() > n {
            return Err(IdealError::VariableOutOfRange {
                found: g.max_var(),
                n,
            });
        }
    }
    let mut basis: Vec<QPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .cloned()
        .map(monic)
        .collect();
    let mut pairs: VecDeque<(usize, usize)> = (0..basis.len()).tuple_combinations().collect();
    while let Some((a, b)) = pairs.pop_front() {
        if leading_monomial(&basis[a]).is_coprime(leading_monomial(&basis[b])) {
            continue;
        }
        let r = reduce(&s_polynomial(&basis[a], &basis[b]), &basis);
        if !r.is_zero() {
            let k = basis.len();
            basis.push(monic(r));
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    Ok(GroebnerBasis {
        generators: interreduce(basis),
        n,
    })
}

/// Drops generators whose leading monomial is a multiple of another's, then
/// tail-reduces the rest against each other.
fn interreduce(basis: Vec<QPoly>) -> Vec<QPoly> {
    let mut minimal: Vec<QPoly> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let gm = leading_monomial(g);
        let redundant = basis.iter().enumerate().any(|(l, h)| {
            let hm = leading_monomial(h);
            l != k && hm.divides(gm) && (hm != gm || l < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced: Vec<QPoly> = (0..minimal.len())
        .map(|k| {
            let mut g = minimal[k].clone();
            let (lm, lc) = g.pop_leading().expect("nonzero");
            let others: Vec<QPoly> = minimal
                .iter()
                .enumerate()
                .filter(|&(l, _)| l != k)
                .map(|(_, h)| h.clone())
                .collect();
            let mut out = reduce(&g, &others);
            out.add_term(lm, lc);
            monic(out)
        })
        .collect();
    reduced.sort_by(|a, b| leading_monomial(b).cmp(leading_monomial(a)));
    reduced
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[QPoly] {
        &self.generators
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators
            .iter()
            .map(|g| leading_monomial(g).clone())
            .collect()
    }

    /// True iff the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(|g| leading_monomial(g).is_one())
    }

    /// The unique remainder of `f` modulo the ideal.
    pub fn normal_form(&self, f: &QPoly) -> QPoly {
        reduce(f, &self.generators)
    }

    pub fn contains(&self, f: &QPoly) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Buchberger's criterion: every S-polynomial reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        self.generators
            .iter()
            .tuple_combinations()
            .all(|(f, g)| self.normal_form(&s_polynomial(f, g)).is_zero())
    }

    /// Monic generators, and no generator has a term divisible by another
    /// generator's leading monomial.
    pub fn is_reduced(&self) -> bool {
        let lms = self.leading_monomials();
        self.generators.iter().enumerate().all(|(k, g)| {
            g.leading_term().is_some_and(|(_, c)| c.is_one())
                && g.terms().all(|(m, _)| {
                    lms.iter()
                        .enumerate()
                        .all(|(l, lm)| l == k || !lm.divides(m))
                })
        })
    }

    /// Monomials of degree `d` not divisible by any leading monomial.
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        let lms = self.leading_monomials();
        monomials_of_degree(self.n, d)
            .into_iter()
            .filter(|m| !lms.iter().any(|lm| lm.divides(m)))
            .collect()
    }

    /// Standard monomial counts by degree. The quotient must be finite
    /// dimensional: every variable needs a pure power among the leading
    /// monomials.
    pub fn hilbert_series(&self) -> Result<HilbertSeries, IdealError> {
        if self.is_unit() {
            return Ok(HilbertSeries::default());
        }
        let lms = self.leading_monomials();
        for k in 1..=self.n {
            let pure = lms
                .iter()
                .any(|m| m.exponent(k) == m.degree() && m.degree() > 0);
            if !pure {
                return Err(IdealError::NotZeroDimensional(k));
            }
        }
        let mut coeffs = Vec::new();
        for d in 0.. {
            let count = self.standard_monomials(d).len() as u64;
            if count == 0 {
                break;
            }
            coeffs.push(count);
        }
        Ok(HilbertSeries { coeffs })
    }
}

/// All monomials of total degree `d` in `x1, ..., xn`, descending grlex.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn fill(n: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(left);
            out.push(Monomial::from_exponents(prefix));
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            fill(n, left - e, prefix, out);
            prefix.pop();
        }
    }
    if n == 0 {
        return if d == 0 {
            vec![Monomial::one()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    fill(n, d, &mut Vec::with_capacity(n), &mut out);
    out
}

/// A Hilbert polynomial in `q`, stored as coefficients from degree 0 up.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HilbertSeries {
    coeffs: Vec<u64>,
}

impl HilbertSeries {
    pub fn from_coefficients(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coeffs
    }

    /// Top degree; `None` for the zero series.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Dimension of the whole quotient.
    pub fn total(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    /// Coefficient list as `[c0,c1,...]`.
    pub fn to_list(&self) -> String {
        format!("[{}]", self.coeffs.iter().join(","))
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(d, &c)| match (d, c) {
                (0, c) => c.to_string(),
                (1, 1) => "q".to_string(),
                (1, c) => format!("{c}q"),
                (d, 1) => format!("q^{d}"),
                (d, c) => format!("{c}q^{d}"),
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// Gröbner basis of `(f_{h(1),1}, ..., f_{h(n),n})`.
pub fn hessenberg_ideal(h: &HessenbergFunction) -> GroebnerBasis {
    let gens: Vec<QPoly> = h
        .ideal_generators()
        .iter()
        .map(|g| g.to_rational())
        .collect();
    groebner(&gens, h.n()).expect("generators use only x1..xn")
}

/// Graded dimensions of `Q[x1..xn] / (f_{h(1),1}, ..., f_{h(n),n})`.
pub fn hilbert_series(h: &HessenbergFunction) -> HilbertSeries {
    hessenberg_ideal(h)
        .hilbert_series()
        .expect("Hessenberg quotients are finite-dimensional")
}

/// Parses the ideal file format: a `vars: n` line, then one polynomial per
/// line. Blank lines and lines starting with `#` are skipped.
pub fn parse_ideal_file(text: &str) -> Result<(usize, Vec<QPoly>), IdealError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line, header) = lines.next().ok_or(IdealError::File {
        line: 1,
        message: "missing \"vars: n\" header".into(),
    })?;
    let n: usize = header
        .strip_prefix("vars:")
        .and_then(|rest| rest.trim().parse().ok())
        .ok_or_else(|| IdealError::File {
            line,
            message: format!("expected \"vars: n\", found {header:?}"),
        })?;
    let mut gens = Vec::new();
    for (line, text) in lines {
        let p: QPoly = text.parse().map_err(|e: PolyError| IdealError::File {
            line,
            message: e.to_string(),
        })?;
        if p.max_var() > n {
            return Err(IdealError::File {
                line,
                message: IdealError::VariableOutOfRange {
                    found: p.max_var(),
                    n,
                }
                .to_string(),
            });
        }
        gens.push(p);
    }
    Ok((n, gens))
}
