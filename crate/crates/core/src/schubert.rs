//! Schubert polynomials from divided differences of the top class, and the
//! combinatorial side of Monk's rule.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigInt;
use thiserror::Error;

use crate::permutation::Permutation;
use crate::polynomial::{Monomial, ZPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchubertError {
    #[error("simple reflection index must be at least 1, got {0}")]
    InvalidIndex(usize),
}

/// `𝔖_{w_0} = x1^{n-1} x2^{n-2} ... x_{n-1}` for the longest element of `S_n`.
pub fn top_schubert(n: usize) -> ZPoly {
    let exps: Vec<u32> = (1..n).rev().map(|e| e as u32).collect();
    ZPoly::term(BigInt::from(1), Monomial::from_exponents(&exps))
}

/// Which ascent to climb through when walking from `w` up to `w_0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainRule {
    SmallestAscent,
    LargestAscent,
}

impl ChainRule {
    fn pick(self, images: &[usize]) -> Option<usize> {
        let ascents = (1..images.len()).filter(|&i| images[i - 1] < images[i]);
        match self {
            ChainRule::SmallestAscent => ascents.min(),
            ChainRule::LargestAscent => ascents.max(),
        }
    }
}

/// Indices `a_1, ..., a_k` with `w * s_{a_1} * ... * s_{a_k} = w_0`, each step
/// raising the length by one.
fn ascent_chain(images: &[usize], rule: ChainRule) -> Vec<usize> {
    let mut current = images.to_vec();
    let mut chain = Vec::new();
    while let Some(i) = rule.pick(&current) {
        current.swap(i - 1, i);
        chain.push(i);
    }
    chain
}

/// `𝔖_w` computed directly in the degree of `w`, without memoization.
///
/// Writes `w = w_0 s_{i_1} ... s_{i_r}` with length dropping by one at each
/// step and applies `∂_{i_1}` first. Different rules give different words;
/// the result must not depend on the choice.
pub fn schubert_along(w: &Permutation, rule: ChainRule) -> ZPoly {
    let chain = ascent_chain(w.images(), rule);
    top_schubert(w.degree()).divided_differences(chain.into_iter().rev())
}

/// A concurrent memo table for Schubert polynomials.
///
/// Keys are one-line notations with trailing fixed points stripped, so a
/// permutation and all of its embeddings share one entry. Values are
/// inserted with get-or-insert semantics: whichever thread stores first
/// wins, and every caller sees that stored `Arc`.
#[derive(Default)]
pub struct SchubertTable {
    cache: RwLock<HashMap<Vec<usize>, Arc<ZPoly>>>,
}

impl SchubertTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.cache.read().expect("schubert cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn lookup(&self, key: &[usize]) -> Option<Arc<ZPoly>> {
        self.cache
            .read()
            .expect("schubert cache poisoned")
            .get(key)
            .cloned()
    }

    fn store(&self, key: Vec<usize>, value: ZPoly) -> Arc<ZPoly> {
        self.cache
            .write()
            .expect("schubert cache poisoned")
            .entry(key)
            .or_insert_with(|| Arc::new(value))
            .clone()
    }

    /// `𝔖_w`, memoized.
    ///
    /// Climbs from `w` through smallest ascents until it meets a cached
    /// entry or `w_0`, then walks back down applying `∂_i`, caching every
    /// permutation passed on the way.
    pub fn get(&self, w: &Permutation) -> Arc<ZPoly> {
        let key = w.stable_images();
        if let Some(hit) = self.lookup(key) {
            return hit;
        }
        let m = key.len();
        if m == 0 {
            return self.store(Vec::new(), ZPoly::one());
        }
        // Climbing through an ascent never moves m into position m, so
        // every intermediate stays in stable form.
        let mut current = key.to_vec();
        let mut path: Vec<(Vec<usize>, usize)> = Vec::new();
        let mut poly = loop {
            if let Some(hit) = self.lookup(&current) {
                break (*hit).clone();
            }
            match ChainRule::SmallestAscent.pick(&current) {
                None => break top_schubert(m),
                Some(i) => {
                    let below = current.clone();
                    current.swap(i - 1, i);
                    path.push((below, i));
                }
            }
        };
        if path.is_empty() {
            return self.store(current, poly);
        }
        let mut stored = None;
        for (perm, i) in path.into_iter().rev() {
            poly = poly.divided_difference(i);
            stored = Some(self.store(perm, poly.clone()));
        }
        stored.expect("path is nonempty")
    }
}

static GLOBAL_TABLE: LazyLock<SchubertTable> = LazyLock::new(SchubertTable::new);

/// `𝔖_w` from the process-wide memo table.
pub fn schubert(w: &Permutation) -> Arc<ZPoly> {
    GLOBAL_TABLE.get(w)
}

/// `∂_i 𝔖_w`. Equals `𝔖_{w s_i}` when `w(i) > w(i+1)` and zero otherwise.
pub fn ddo_rule_check(w: &Permutation, i: usize) -> ZPoly {
    schubert(w).divided_difference(i)
}

/// The terms `w t_{pq}` of Monk's rule for `𝔖_{s_r} · 𝔖_w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonkExpansion {
    pub base: Permutation,
    pub index: usize,
    pub terms: BTreeSet<Permutation>,
}

impl MonkExpansion {
    /// `Σ 𝔖_{w t_{pq}}` over the expansion.
    pub fn schubert_sum(&self) -> ZPoly {
        self.terms.iter().map(|t| (*schubert(t)).clone()).sum()
    }
}

/// Monk's rule: all `w t_{pq}` with `p <= r < q`, `w(p) < w(q)`, and no
/// position strictly between `p` and `q` carrying a value strictly between
/// `w(p)` and `w(q)`.
///
/// `w` is first embedded into degree `m = max(n, r) + 1`. No admissible `q`
/// exceeds that: any `q > m` would have position `m` in between carrying the
/// value `m`, which lies strictly between `w(p) <= m - 1` and `w(q) = q`.
pub fn monk_expand(r: usize, w: &Permutation) -> Result<MonkExpansion, SchubertError> {
    if r == 0 {
        return Err(SchubertError::InvalidIndex(r));
    }
    let m = w.degree().max(r) + 1;
    let big = w.embed(m).expect("m exceeds the degree of w");
    let v = big.images();
    let mut terms = BTreeSet::new();
    for p in 1..=r {
        for q in r + 1..=m {
            let (lo, hi) = (v[p - 1], v[q - 1]);
            if lo < hi && !(p + 1..q).any(|i| lo < v[i - 1] && v[i - 1] < hi) {
                terms.insert(big.mul_transposition(p, q).expect("p < q <= m"));
            }
        }
    }
    Ok(MonkExpansion {
        base: w.clone(),
        index: r,
        terms,
    })
}

/// `𝔖_{s_r}`, which is `x1 + ... + x_r`.
pub fn schubert_simple(r: usize) -> Arc<ZPoly> {
    schubert(&Permutation::simple(r, r + 1).expect("r >= 1"))
}
