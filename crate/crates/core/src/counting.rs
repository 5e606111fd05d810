//! Exact counting series.
//!
//! `r_{n,k}` is the number of combinators of size `k` that normalize in
//! exactly `n` normal-order steps. Because each `R_n` is unambiguous,
//! `r_{n,k}` is the sum over productions of the number of size-`k` terms
//! each production generates, which [`Counter`] computes by dynamic
//! programming over trees. [`series_by_equation`] gets the same numbers a
//! second way, by solving the grammar's generating-function equation on
//! truncated power series.

use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::error::Result;
use crate::grammar::{GrammarStore, SCHEMA_VERSION};
use crate::tree::{Node, TreeArena, TreeId};

/// `c_0 ..= c_kmax`: the number of combinators of each size, from
/// `c_0 = 2` and `c_k = Σ_{i+j=k-1} c_i c_j`.
pub fn all_terms_coeffs(kmax: usize) -> Vec<BigUint> {
    let mut c: Vec<BigUint> = Vec::with_capacity(kmax + 1);
    c.push(BigUint::from(2u32));
    for k in 1..=kmax {
        let mut sum = BigUint::zero();
        for i in 0..k {
            sum += &c[i] * &c[k - 1 - i];
        }
        c.push(sum);
    }
    c
}

/// Occurrence counts of a production: applications, `C`s, and each `R_i`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProductionStats {
    pub applications: usize,
    pub c_occurrences: usize,
    /// `r_occurrences[i]` counts `R_i`.
    pub r_occurrences: Vec<usize>,
}

pub fn production_stats(arena: &TreeArena, tree: TreeId) -> ProductionStats {
    fn walk(arena: &TreeArena, t: TreeId, stats: &mut ProductionStats) {
        match arena.node(t) {
            Node::S | Node::K => {}
            Node::C => stats.c_occurrences += 1,
            Node::R(i) => {
                let i = i as usize;
                if stats.r_occurrences.len() <= i {
                    stats.r_occurrences.resize(i + 1, 0);
                }
                stats.r_occurrences[i] += 1;
            }
            Node::App(f, x) => {
                stats.applications += 1;
                walk(arena, f, stats);
                walk(arena, x, stats);
            }
        }
    }
    let mut stats = ProductionStats::default();
    walk(arena, tree, &mut stats);
    stats
}

/// Coefficients `r_{n,0} ..= r_{n,kmax}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    pub n: usize,
    pub coefficients: Vec<BigUint>,
}

#[derive(Serialize)]
struct SeriesJson {
    schema_version: u32,
    n: usize,
    kmax: usize,
    coefficients: Vec<String>,
}

impl Series {
    pub fn kmax(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// `n,k,r_nk` rows with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,k,r_nk\n");
        for (k, r) in self.coefficients.iter().enumerate() {
            let _ = writeln!(out, "{},{},{}", self.n, k, r);
        }
        out
    }

    /// Coefficients rendered as decimal strings so no precision is lost.
    pub fn to_json(&self) -> String {
        let doc = SeriesJson {
            schema_version: SCHEMA_VERSION,
            n: self.n,
            kmax: self.kmax(),
            coefficients: self.coefficients.iter().map(|c| c.to_string()).collect(),
        };
        serde_json::to_string_pretty(&doc).expect("series serializes")
    }
}

/// Memoized `#{x ∈ L(a) : |x| = k}` over a built store.
pub struct Counter<'s> {
    store: &'s GrammarStore,
    all_terms: Vec<BigUint>,
    memo: FxHashMap<(TreeId, usize), BigUint>,
}

impl<'s> Counter<'s> {
    pub fn new(store: &'s GrammarStore) -> Self {
        Counter {
            store,
            all_terms: all_terms_coeffs(0),
            memo: FxHashMap::default(),
        }
    }

    fn all_terms(&mut self, k: usize) -> BigUint {
        if self.all_terms.len() <= k {
            self.all_terms = all_terms_coeffs(k);
        }
        self.all_terms[k].clone()
    }

    /// Number of size-`k` terms generated by `a`.
    ///
    /// Self-references of `R_n` sit below at least one application, so
    /// `count(R_n, k)` only ever asks for `count(R_n, j)` with `j < k`.
    pub fn count_tree(&mut self, a: TreeId, k: usize) -> Result<BigUint> {
        let arena = self.store.arena();
        match arena.node(a) {
            Node::S | Node::K => {
                return Ok(if k == 0 {
                    BigUint::one()
                } else {
                    BigUint::zero()
                })
            }
            Node::C => return Ok(self.all_terms(k)),
            _ => {}
        }
        if k < arena.size(a) {
            return Ok(BigUint::zero());
        }
        if let Some(hit) = self.memo.get(&(a, k)) {
            return Ok(hit.clone());
        }
        let total = match arena.node(a) {
            Node::R(n) => {
                let grammar = self.store.grammar(n as usize)?;
                let mut sum = BigUint::zero();
                for &p in grammar.productions() {
                    sum += self.count_tree(p, k)?;
                }
                sum
            }
            Node::App(f, x) => {
                let (fmin, xmin) = (arena.size(f), arena.size(x));
                let mut sum = BigUint::zero();
                for i in fmin..=(k - 1 - xmin) {
                    let left = self.count_tree(f, i)?;
                    if left.is_zero() {
                        continue;
                    }
                    let right = self.count_tree(x, k - 1 - i)?;
                    sum += left * right;
                }
                sum
            }
            _ => unreachable!(),
        };
        self.memo.insert((a, k), total.clone());
        Ok(total)
    }

    /// `r_{n,0} ..= r_{n,kmax}`.
    pub fn series(&mut self, n: usize, kmax: usize) -> Result<Series> {
        self.store.grammar(n)?;
        let r = self
            .store
            .arena()
            .lookup(Node::R(n as u32))
            .expect("built grammars have interned nonterminals");
        let coefficients = (0..=kmax)
            .map(|k| self.count_tree(r, k))
            .collect::<Result<Vec<_>>>()?;
        Ok(Series { n, coefficients })
    }
}

/// `r_{n,k}` for one grammar, computed with a fresh [`Counter`].
pub fn series(store: &GrammarStore, n: usize, kmax: usize) -> Result<Series> {
    Counter::new(store).series(n, kmax)
}

type Poly = Vec<BigInt>;

fn poly_mul(a: &Poly, b: &Poly, len: usize) -> Poly {
    let mut out = vec![BigInt::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Normal forms by size from `N = 2 + 2zN + z²N²`.
pub fn normal_form_coeffs(kmax: usize) -> Vec<BigUint> {
    let mut n: Vec<BigUint> = vec![BigUint::from(2u32)];
    for k in 1..=kmax {
        let mut v = BigUint::from(2u32) * &n[k - 1];
        if k >= 2 {
            for i in 0..=k - 2 {
                v += &n[i] * &n[k - 2 - i];
            }
        }
        n.push(v);
    }
    n
}

/// `r_{n,0} ..= r_{n,kmax}` from the generating-function equation
/// `R_n = Σ_α z^{k(α)} C^{c(α)} Π_i R_i^{r_i(α)}`.
///
/// For `n >= 1` the productions mentioning `R_n` mention it exactly once, so
/// the equation is linear: `R_n · (1 - Σ_self z^k C^c Π_{i<n} R_i^{r_i}) =
/// Σ_Φ z^k C^c Π_{i<n} R_i^{r_i}`, and the left factor has constant term 1.
/// `R_0` comes from its own quadratic equation.
pub fn series_by_equation(store: &GrammarStore, n: usize, kmax: usize) -> Result<Vec<BigUint>> {
    let len = kmax + 1;
    let to_signed = |v: Vec<BigUint>| -> Poly { v.into_iter().map(BigInt::from).collect() };
    let all = to_signed(all_terms_coeffs(kmax));
    let mut known: Vec<Poly> = vec![to_signed(normal_form_coeffs(kmax))];
    store.grammar(n)?;

    for m in 1..=n {
        let grammar = store.grammar(m)?;
        let mut numerator = vec![BigInt::zero(); len];
        let mut self_part = vec![BigInt::zero(); len];
        for &p in grammar.productions() {
            let stats = production_stats(store.arena(), p);
            if stats.applications > kmax {
                continue;
            }
            let self_refs = stats.r_occurrences.get(m).copied().unwrap_or(0);
            assert!(self_refs <= 1, "nonlinear self-reference in R_{m}");
            let mut term = vec![BigInt::zero(); len];
            term[stats.applications] = BigInt::one();
            for _ in 0..stats.c_occurrences {
                term = poly_mul(&term, &all, len);
            }
            for (i, &count) in stats.r_occurrences.iter().enumerate().take(m) {
                for _ in 0..count {
                    term = poly_mul(&term, &known[i], len);
                }
            }
            let target = if self_refs == 1 {
                &mut self_part
            } else {
                &mut numerator
            };
            for (t, v) in target.iter_mut().zip(term) {
                *t += v;
            }
        }
        // R = numerator + R * self_part, solved coefficient by coefficient
        let mut r: Poly = Vec::with_capacity(len);
        for k in 0..len {
            let mut v = numerator[k].clone();
            for j in 1..=k {
                v += &self_part[j] * &r[k - j];
            }
            debug_assert!(self_part[0].is_zero());
            r.push(v);
        }
        known.push(r);
    }
    Ok(known
        .swap_remove(n)
        .into_iter()
        .map(|v| v.to_biguint().expect("counts are non-negative"))
        .collect())
}
