//! Acceptance suite: one line per criterion, nonzero exit if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use schubhess::schubert::{schubert_along, schubert_simple, ChainRule};
use schubhess::verify::{verify_chain, verify_ddo, verify_lemma42, verify_nonvanish};
use schubhess::{
    monk_expand, schubert, verify_theorem, HessenbergFunction, Permutation, VerificationReport,
    ZPoly,
};

struct Outcome {
    ok: bool,
    detail: String,
}

impl Outcome {
    fn from_reports(reports: &[VerificationReport]) -> Self {
        let cases: usize = reports.iter().map(|r| r.cases).sum();
        let failed: Vec<String> = reports
            .iter()
            .filter(|r| !r.passed())
            .map(VerificationReport::summary)
            .collect();
        Outcome {
            ok: failed.is_empty(),
            detail: if failed.is_empty() {
                format!("{cases} cases")
            } else {
                failed.join("\n")
            },
        }
    }

    fn tally(label: &str, total: usize, failures: Vec<String>) -> Self {
        Outcome {
            ok: failures.is_empty(),
            detail: if failures.is_empty() {
                format!("{total} {label}")
            } else {
                format!(
                    "{} of {total} {label} failed: {}",
                    failures.len(),
                    failures.join("; ")
                )
            },
        }
    }
}

fn criterion_1() -> Outcome {
    let reports: Vec<_> = (2..=8).map(verify_theorem).collect();
    let mut out = Outcome::from_reports(&reports);
    let at_8 = reports.last().map_or(0, |r| r.cases);
    let total: usize = reports.iter().map(|r| r.cases).sum();
    if total != 84 || at_8 != 28 {
        out.ok = false;
        out.detail = format!("expected 84 cases (28 at n=8), ran {total} ({at_8} at n=8)");
    }
    out
}

fn criterion_2() -> Outcome {
    let mut reports = vec![verify_ddo(8)];
    reports.extend((1..=6).map(verify_chain));
    Outcome::from_reports(&reports)
}

fn criterion_3() -> Outcome {
    let mut failures = Vec::new();
    let mut identities = 0;
    for w in Permutation::all(5) {
        for r in 1..=5 {
            identities += 1;
            let product = &*schubert_simple(r) * &*schubert(&w);
            if product != monk_expand(r, &w).unwrap().schubert_sum() {
                failures.push(format!("w={w} r={r}"));
            }
        }
    }
    let mut rows = 0;
    for n in [4, 5] {
        for row in common::monk_case_table(n) {
            rows += 1;
            if row.listed != row.computed {
                failures.push(row.label);
            }
        }
        for (label, left, right) in common::monk_case_links(n) {
            rows += 1;
            if left != right {
                failures.push(label);
            }
        }
    }
    let mut out = Outcome::tally("checks", identities + rows, failures);
    out.detail = format!(
        "{identities} products on S_5 (r=1..5), {rows} case rows; {}",
        out.detail
    );
    out
}

/// Every reduced word of `u`, as sequences `b` with `u = s_{b1} ... s_{br}`.
fn reduced_words(u: &Permutation) -> Vec<Vec<usize>> {
    if u.length() == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in u.descents().collect::<Vec<_>>() {
        for mut word in reduced_words(&u.mul_simple(i).unwrap()) {
            word.push(i);
            out.push(word);
        }
    }
    out
}

fn criterion_4() -> Outcome {
    let mut failures = Vec::new();
    let mut checks = 0;
    let s5: Vec<Permutation> = Permutation::all(5).collect();
    // Descent rule.
    for w in &s5 {
        for i in 1..5 {
            checks += 1;
            let d = schubert(w).divided_difference(i);
            let expected = if w.has_descent(i) {
                (*schubert(&w.mul_simple(i).unwrap())).clone()
            } else {
                ZPoly::zero()
            };
            if d != expected {
                failures.push(format!("descent w={w} i={i}"));
            }
        }
    }
    // Every reduced word of w^{-1} w0 gives the same polynomial.
    let w0 = Permutation::longest(5).unwrap();
    let top = schubhess::schubert::top_schubert(5);
    let mut words = 0;
    for w in &s5 {
        let u = w.inverse().compose(&w0).unwrap();
        let reference = schubert_along(w, ChainRule::SmallestAscent);
        for word in reduced_words(&u) {
            words += 1;
            if top.divided_differences(word.iter().rev().copied()) != reference {
                failures.push(format!("word w={w} {word:?}"));
            }
        }
    }
    checks += words;
    // Stability: computing inside S_6 changes nothing.
    for w in Permutation::all(4) {
        checks += 1;
        let big = w.embed(6).unwrap();
        if schubert_along(&w, ChainRule::SmallestAscent)
            != schubert_along(&big, ChainRule::SmallestAscent)
        {
            failures.push(format!("stability w={w}"));
        }
    }
    for w in &s5 {
        checks += 1;
        let s = schubert(w);
        if !s.is_homogeneous() || s.degree() != Some(w.length() as u32) {
            failures.push(format!("homogeneity w={w}"));
        }
    }
    for w in Permutation::all(6) {
        checks += 1;
        if !schubert(&w).is_nonnegative() {
            failures.push(format!("nonnegativity w={w}"));
        }
    }
    let mut out = Outcome::tally("checks", checks, failures);
    out.detail = format!("{} ({words} reduced words)", out.detail);
    out
}

fn criterion_5() -> Outcome {
    let reports: Vec<_> = (2..=6).map(verify_lemma42).collect();
    let mut out = Outcome::from_reports(&reports);
    let corners: usize = (2..=6)
        .flat_map(HessenbergFunction::enumerate)
        .map(|h| h.removable_corners().len())
        .sum();
    if out.ok {
        out.detail = format!(
            "{} Hessenberg functions, {corners} corners",
            out.detail.replace(" cases", "")
        );
    }
    out
}

fn criterion_6() -> Outcome {
    let reports: Vec<_> = (1..=4).map(verify_nonvanish).collect();
    let mut out = Outcome::from_reports(&reports);
    let corners: usize = (1..=4)
        .flat_map(HessenbergFunction::enumerate)
        .map(|h| h.removable_corners().len())
        .sum();
    if out.ok {
        out.detail = format!(
            "{} Hessenberg functions, {corners} corners",
            out.detail.replace(" cases", "")
        );
    }
    out
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let vars = 6;
    let mut failures = Vec::new();
    for _ in 0..1000 {
        let f = common::random_poly(&mut rng, vars, 6);
        let i = rng.gen_range(1..vars);
        if !f.divided_differences([i, i]).is_zero() {
            failures.push(format!("d{i}^2 {f}"));
        }
    }
    for _ in 0..1000 {
        let f = common::random_poly(&mut rng, vars, 6);
        let i = rng.gen_range(1..vars - 1);
        if f.divided_differences([i, i + 1, i]) != f.divided_differences([i + 1, i, i + 1]) {
            failures.push(format!("braid {i} {f}"));
        }
    }
    for _ in 0..1000 {
        let f = common::random_poly(&mut rng, vars, 6);
        let i = rng.gen_range(1..vars - 2);
        let j = rng.gen_range(i + 2..vars);
        if f.divided_differences([i, j]) != f.divided_differences([j, i]) {
            failures.push(format!("commute {i},{j} {f}"));
        }
    }
    Outcome::tally("random polynomials", 3000, failures)
}

fn criterion_8() -> Outcome {
    let counts: Vec<usize> = (1..=6)
        .map(|n| HessenbergFunction::enumerate(n).count())
        .collect();
    Outcome {
        ok: counts == [1, 2, 5, 14, 42, 132],
        detail: format!("{counts:?}"),
    }
}

/// Name, optional runtime budget, check.
type Criterion = (&'static str, Option<Duration>, fn() -> Outcome);

fn main() -> ExitCode {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria: [Criterion; 8] = [
        ("theorem sweep n=2..8", secs(30), criterion_1),
        (
            "f_{i,j} divided differences (i<=8) and chain (n<=6)",
            secs(5),
            criterion_2,
        ),
        ("Monk soundness and case terms", secs(60), criterion_3),
        ("Schubert core properties", None, criterion_4),
        ("minimal missing cells n=2..6", secs(60), criterion_5),
        ("ideal and non-vanishing n<=4", secs(120), criterion_6),
        ("divided difference relations", None, criterion_7),
        ("Hessenberg enumeration counts", None, criterion_8),
    ];
    let mut all_ok = true;
    for (k, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let within = budget.is_none_or(|b| elapsed <= b);
        let ok = outcome.ok && within;
        all_ok &= ok;
        let limit = budget.map_or(String::new(), |b| format!(", budget {}s", b.as_secs()));
        println!(
            "{} criterion {}: {name}: {} [{:.2}s{limit}]",
            if ok { "PASS" } else { "FAIL" },
            k + 1,
            outcome.detail,
            elapsed.as_secs_f64(),
        );
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
