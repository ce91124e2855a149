#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use schubhess::{monk_expand, w_kij, Monomial, Permutation, ZPoly};

/// A random integer polynomial in `x1..x_vars`: up to `max_terms` terms,
/// exponents at most 3, coefficients in `-9..=9`.
pub fn random_poly(rng: &mut ChaCha8Rng, vars: usize, max_terms: usize) -> ZPoly {
    let terms = rng.gen_range(0..=max_terms);
    ZPoly::from_terms((0..terms).map(|_| {
        let exps: Vec<u32> = (0..vars).map(|_| rng.gen_range(0..=3)).collect();
        (
            Monomial::from_exponents(&exps),
            BigInt::from(rng.gen_range(-9..=9)),
        )
    }))
}

fn t(w: &Permutation, p: usize, q: usize) -> Permutation {
    w.mul_transposition(p, q).expect("valid transposition")
}

fn wk(i: usize, k: usize, n: usize) -> Permutation {
    w_kij(i, 1, k).unwrap().embed(n).unwrap()
}

/// One row of the three-case Monk table used to step from `n - 1` to `n`.
pub struct MonkRow {
    pub label: String,
    pub listed: BTreeSet<Permutation>,
    pub computed: BTreeSet<Permutation>,
}

/// `𝔖_{s_r} 𝔖_{w_k^{(n-1,1)}}` for `r = 1, n-2, n-1` and `1 <= k <= n-2`,
/// with the term sets written out by hand next to what Monk's rule produces.
/// Requires `n >= 4` so that `k = 1` and `k = n - 2` are distinct.
pub fn monk_case_table(n: usize) -> Vec<MonkRow> {
    assert!(n >= 4);
    let mut rows = Vec::new();
    for k in 1..=n - 2 {
        let w = wk(n - 1, k, n);
        let mut push = |case: &str, r: usize, listed: Vec<Permutation>| {
            let computed = monk_expand(r, &w).unwrap().terms;
            let computed = computed.into_iter().map(|p| trim_to(&p, n)).collect();
            rows.push(MonkRow {
                label: format!("n={n} case {case} k={k}"),
                listed: listed.into_iter().collect(),
                computed,
            });
        };
        // r = 1
        let listed = if k == 1 {
            vec![t(&w, 1, n)]
        } else {
            vec![t(&w, 1, n - k)]
        };
        push("(i)", 1, listed);
        // r = n - 2
        let listed = if k == 1 {
            vec![t(&w, 1, n), t(&w, n - 2, n - 1)]
        } else if k == n - 2 {
            vec![t(&w, n - 2, n)]
        } else {
            vec![t(&w, n - k - 1, n - 1), t(&w, n - 2, n)]
        };
        push("(ii)", n - 2, listed);
        // r = n - 1
        let listed = if k == 1 {
            vec![t(&w, 1, n), t(&w, n - 1, n)]
        } else {
            vec![t(&w, n - 2, n), t(&w, n - 1, n)]
        };
        push("(iii)", n - 1, listed);
    }
    rows
}

/// The permutation identities that glue the three cases together.
pub fn monk_case_links(n: usize) -> Vec<(String, Permutation, Permutation)> {
    let mut out = vec![(
        format!("n={n} w1 t(1,n)"),
        t(&wk(n - 1, 1, n), 1, n),
        wk(n, 1, n),
    )];
    for k in 1..=n - 2 {
        out.push((
            format!("n={n} w{k} t(n-1,n)"),
            t(&wk(n - 1, k, n), n - 1, n),
            wk(n, k + 1, n),
        ));
    }
    for k in 1..=n - 3 {
        out.push((
            format!("n={n} w{} t(1,n-k-1) = w{k} t(n-k-1,n-1)", k + 1),
            t(&wk(n - 1, k + 1, n), 1, n - k - 1),
            t(&wk(n - 1, k, n), n - k - 1, n - 1),
        ));
    }
    out
}

/// Restricts a permutation of degree `>= n` that fixes everything above `n`.
fn trim_to(p: &Permutation, n: usize) -> Permutation {
    assert!(p.images()[n..]
        .iter()
        .enumerate()
        .all(|(k, &v)| v == n + k + 1));
    Permutation::from_images(p.images()[..n].to_vec()).unwrap()
}
