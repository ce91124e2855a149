//! Named identity sweeps with per-check size budgets.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use thiserror::Error;

use crate::hessenberg::{
    alternating_schubert_sum, f_poly, f_via_chain, verify_theorem, w_kij, Corner,
    HessenbergFunction,
};
use crate::ideal::graded::GradedIdeal;
use crate::ideal::{hessenberg_ideal, GroebnerBasis};
use crate::permutation::Permutation;
use crate::polynomial::{QPoly, ZPoly};
use crate::report::{run_sweep, CaseFailure, VerificationReport};
use crate::schubert::{monk_expand, schubert, schubert_simple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    Theorem,
    Ddo,
    Chain,
    Monk,
    Lemma42,
    Nonvanish,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown check {0:?}; expected one of theorem, ddo, chain, monk, lemma42, nonvanish")]
    UnknownCheck(String),
    #[error("{check} needs n >= {min}, got {n}")]
    TooSmall { check: Check, n: usize, min: usize },
    #[error(
        "{check} is budgeted for n <= {max}, got {n}; pass --unsupported-override to run anyway"
    )]
    OverBudget { check: Check, n: usize, max: usize },
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::Theorem,
        Check::Ddo,
        Check::Chain,
        Check::Monk,
        Check::Lemma42,
        Check::Nonvanish,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Theorem => "theorem",
            Check::Ddo => "ddo",
            Check::Chain => "chain",
            Check::Monk => "monk",
            Check::Lemma42 => "lemma42",
            Check::Nonvanish => "nonvanish",
        }
    }

    /// Largest supported `n`.
    pub fn budget(self) -> usize {
        match self {
            Check::Theorem | Check::Ddo | Check::Chain => 8,
            Check::Monk => 5,
            Check::Lemma42 => 6,
            Check::Nonvanish => 4,
        }
    }

    pub fn min_n(self) -> usize {
        match self {
            Check::Theorem => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| VerifyError::UnknownCheck(s.to_string()))
    }
}

/// Runs `check` at size `n` on the current rayon pool. Sizes past the budget
/// are refused unless `override_budget` is set.
pub fn run_check(
    check: Check,
    n: usize,
    override_budget: bool,
) -> Result<VerificationReport, VerifyError> {
    if n < check.min_n() {
        return Err(VerifyError::TooSmall {
            check,
            n,
            min: check.min_n(),
        });
    }
    if n > check.budget() && !override_budget {
        return Err(VerifyError::OverBudget {
            check,
            n,
            max: check.budget(),
        });
    }
    Ok(match check {
        Check::Theorem => verify_theorem(n),
        Check::Ddo => verify_ddo(n),
        Check::Chain => verify_chain(n),
        Check::Monk => verify_monk(n),
        Check::Lemma42 => verify_lemma42(n),
        Check::Nonvanish => verify_nonvanish(n),
    })
}

fn compare(case: impl FnOnce() -> String, expected: &ZPoly, actual: &ZPoly) -> Vec<CaseFailure> {
    if expected == actual {
        Vec::new()
    } else {
        vec![CaseFailure::new(case(), expected, actual)]
    }
}

/// `∂_j f_{i,j} = f_{i,j+1}` and `∂_i f_{i,j} = -f_{i-1,j}` for `1 <= j < i <= n`.
pub fn verify_ddo(n: usize) -> VerificationReport {
    let cases: Vec<(usize, usize)> = (2..=n).flat_map(|i| (1..i).map(move |j| (i, j))).collect();
    run_sweep("ddo", n, cases, |&(i, j)| {
        let f = f_poly(i, j).expect("j < i");
        let mut out = compare(
            || format!("d_{j} f_({i},{j})"),
            &f_poly(i, j + 1).expect("j + 1 <= i"),
            &f.divided_difference(j),
        );
        out.extend(compare(
            || format!("d_{i} f_({i},{j})"),
            &-f_poly(i - 1, j).expect("j <= i - 1"),
            &f.divided_difference(i),
        ));
        out
    })
}

/// `f_{i,j}` from the `∂` chain applied to `F_n`, for all `1 <= j <= i <= n`.
pub fn verify_chain(n: usize) -> VerificationReport {
    let cases: Vec<(usize, usize)> = (1..=n).flat_map(|i| (1..=i).map(move |j| (i, j))).collect();
    run_sweep("chain", n, cases, |&(i, j)| {
        compare(
            || format!("(i,j,n)=({i},{j},{n})"),
            &f_poly(i, j).expect("j <= i"),
            &f_via_chain(i, j, n).expect("j <= i <= n"),
        )
    })
}

/// `𝔖_{s_r} 𝔖_w` against Monk's expansion for every `w` in `S_n` and
/// `1 <= r < n`.
pub fn verify_monk(n: usize) -> VerificationReport {
    let cases: Vec<(Permutation, usize)> = Permutation::all(n).cartesian_product(1..n).collect();
    run_sweep("monk", n, cases, |(w, r)| {
        let product = &*schubert_simple(*r) * &*schubert(w);
        let sum = monk_expand(*r, w).expect("r >= 1").schubert_sum();
        compare(|| format!("w={w} r={r}"), &product, &sum)
    })
}

/// The `w_k^{(i,j)}`, embedded in `S_n`.
pub fn w_family(i: usize, j: usize, n: usize) -> BTreeSet<Permutation> {
    (1..=i - j)
        .map(|k| {
            w_kij(i, j, k)
                .expect("1 <= j < i")
                .embed(n)
                .expect("i <= n")
        })
        .collect()
}

fn format_set(set: &BTreeSet<Permutation>) -> String {
    format!("{{{}}}", set.iter().join(", "))
}

/// For each Hessenberg function on `[n]` and each corner with `i > j`, the
/// brute-force minimal missing cells equal `{w_k^{(i,j)}}`.
pub fn verify_lemma42(n: usize) -> VerificationReport {
    let cases: Vec<HessenbergFunction> = HessenbergFunction::enumerate(n).collect();
    run_sweep("lemma42", n, cases, |h| {
        h.removable_corners()
            .into_iter()
            .filter_map(|c| {
                let expected = w_family(c.i, c.j, n);
                let actual = h.minimal_missing(c).expect("removable corner");
                (expected != actual).then(|| {
                    CaseFailure::new(
                        format!("h={h} corner={c}"),
                        format_set(&expected),
                        format_set(&actual),
                    )
                })
            })
            .collect()
    })
}

fn rational(p: &ZPoly) -> QPoly {
    p.to_rational()
}

fn check_corner(h: &HessenbergFunction, basis: &GroebnerBasis, c: Corner) -> Vec<CaseFailure> {
    let label = |what: &str| format!("h={h} corner={c} {what}");
    let mut out = Vec::new();
    let smaller = h.remove_corner(c).expect("removable corner");
    let small_basis = hessenberg_ideal(&smaller);
    let f = rational(&f_poly(c.i - 1, c.j).expect("j < i"));
    if basis.contains(&f) {
        out.push(CaseFailure::new(
            label("f_(i-1,j) in h-ideal"),
            "nonzero normal form",
            basis.normal_form(&f),
        ));
    }
    if !small_basis.contains(&f) {
        out.push(CaseFailure::new(
            label("f_(i-1,j) in h'-ideal"),
            "0",
            small_basis.normal_form(&f),
        ));
    }
    let alt = rational(&alternating_schubert_sum(c.i, c.j).expect("j < i"));
    let nf = small_basis.normal_form(&alt);
    if !nf.is_zero() {
        out.push(CaseFailure::new(
            label("alternating sum mod h'-ideal"),
            "0",
            nf,
        ));
    }
    if h.n() <= 3 {
        let graded = graded_ideal(&smaller);
        let big = graded_ideal(h);
        if graded.contains(&f) != small_basis.contains(&f) || big.contains(&f) != basis.contains(&f)
        {
            out.push(CaseFailure::new(
                label("membership vs graded oracle"),
                "agreement",
                "disagreement",
            ));
        }
    }
    out
}

fn graded_ideal(h: &HessenbergFunction) -> GradedIdeal {
    let gens: Vec<QPoly> = h.ideal_generators().iter().map(rational).collect();
    GradedIdeal::new(&gens, h.n()).expect("generators are homogeneous")
}

/// For every Hessenberg function on `[n]`: the Hilbert series has top degree
/// `dim`, and for each corner with `i > j`, `f_{i-1,j}` is outside the
/// `h`-ideal, inside the `h'`-ideal, and the alternating Schubert sum reduces
/// to zero modulo the `h'`-ideal. For `n <= 3` the Gröbner answers are also
/// compared with degree-wise linear algebra.
pub fn verify_nonvanish(n: usize) -> VerificationReport {
    let cases: Vec<HessenbergFunction> = HessenbergFunction::enumerate(n).collect();
    run_sweep("nonvanish", n, cases, |h| {
        let basis = hessenberg_ideal(h);
        let mut out = Vec::new();
        match basis.hilbert_series() {
            Ok(series) => {
                if series.degree() != Some(h.dimension()) {
                    out.push(CaseFailure::new(
                        format!("h={h} hilbert degree"),
                        h.dimension(),
                        series.to_list(),
                    ));
                }
                if n <= 3 {
                    let oracle = graded_ideal(h).hilbert_series(h.dimension() as u32 + 1);
                    if oracle.as_ref() != Some(&series) {
                        out.push(CaseFailure::new(
                            format!("h={h} hilbert vs graded oracle"),
                            series.to_list(),
                            oracle.map_or("no vanishing degree".into(), |s| s.to_list()),
                        ));
                    }
                }
            }
            Err(e) => out.push(CaseFailure::new(format!("h={h} hilbert"), "a series", e)),
        }
        for c in h.removable_corners() {
            out.extend(check_corner(h, &basis, c));
        }
        out
    })
}
