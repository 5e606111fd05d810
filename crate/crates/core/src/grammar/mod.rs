//! Construction of the reduction grammars `R_0, R_1, ...`.
//!
//! `R_n` generates exactly the combinators that reach normal form in `n`
//! normal-order steps. `R_0` is written down directly; `R_n` for `n >= 1`
//! consists of the short productions `S R_n`, `K R_n`, `S R_{n-i} R_i`,
//! `K R_{n-1} C`, plus the K- and S-expansions of every production of
//! `R_{n-1}`.
//!
//! A [`GrammarStore`] owns the tree arena, the grammars built so far, and
//! the memo tables for the rewriting relation, mesh sets and rewriting sets.

mod expand;
mod mesh;
mod relation;

use std::sync::Arc;

use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::term::Combinator;
use crate::tree::{TreeArena, TreeId};

/// Version tag carried by every JSON document this crate emits.
pub const SCHEMA_VERSION: u32 = 1;

/// Productions of one reduction grammar, canonically ordered and
/// duplicate-free.
#[derive(Clone, Debug)]
pub struct Grammar {
    index: usize,
    productions: Vec<TreeId>,
    constants: Vec<TreeId>,
    complex: Arc<[TreeId]>,
    by_shape: FxHashMap<(Combinator, usize), Arc<[TreeId]>>,
}

impl Grammar {
    fn new(index: usize, productions: Vec<TreeId>, arena: &TreeArena) -> Grammar {
        let mut constants = Vec::new();
        let mut complex = Vec::new();
        let mut by_shape: FxHashMap<(Combinator, usize), Vec<TreeId>> = FxHashMap::default();
        for &p in &productions {
            match arena.shape(p) {
                Some(shape) => {
                    complex.push(p);
                    by_shape.entry(shape).or_default().push(p);
                }
                None => constants.push(p),
            }
        }
        Grammar {
            index,
            productions,
            constants,
            complex: complex.into(),
            by_shape: by_shape.into_iter().map(|(k, v)| (k, v.into())).collect(),
        }
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn productions(&self) -> &[TreeId] {
        &self.productions
    }

    pub fn len(&self) -> usize {
        self.productions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.productions.is_empty()
    }

    /// Productions of size 0 (only `S` and `K` in `R_0`).
    pub fn constants(&self) -> &[TreeId] {
        &self.constants
    }

    pub(crate) fn complex(&self) -> Arc<[TreeId]> {
        self.complex.clone()
    }

    /// Productions with the given head and length.
    pub fn with_shape(&self, head: Combinator, length: usize) -> &[TreeId] {
        self.by_shape
            .get(&(head, length))
            .map(|v| &v[..])
            .unwrap_or(&[])
    }

    pub(crate) fn shape_class(&self, shape: (Combinator, usize)) -> Option<Arc<[TreeId]>> {
        self.by_shape.get(&shape).cloned()
    }
}

/// Structured dump of one grammar.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct GrammarDump {
    pub schema_version: u32,
    pub n: usize,
    pub count: usize,
    pub productions: Vec<String>,
}

#[derive(Default)]
struct Memo {
    rewrites: FxHashMap<(TreeId, TreeId), bool>,
    mesh: FxHashMap<(TreeId, TreeId), Arc<[TreeId]>>,
    rewriting: FxHashMap<(TreeId, TreeId), Arc<[TreeId]>>,
    potential: FxHashMap<usize, u64>,
}

/// Grammars `R_0 ..= R_N` plus the caches used to build and query them.
///
/// Grammars are only ever appended, in index order, and are not modified
/// afterwards.
#[derive(Default)]
pub struct GrammarStore {
    arena: TreeArena,
    grammars: Vec<Grammar>,
    memo: Memo,
}

impl GrammarStore {
    pub fn new() -> Self {
        Self::default()
    }

    /// Store with `R_0 ..= R_n` already built.
    pub fn with_grammars(n: usize) -> Result<Self> {
        let mut store = Self::new();
        store.reduction_grammar(n)?;
        Ok(store)
    }

    pub fn arena(&self) -> &TreeArena {
        &self.arena
    }

    pub fn arena_mut(&mut self) -> &mut TreeArena {
        &mut self.arena
    }

    /// Parse tree notation into this store's arena.
    pub fn tree(&mut self, text: &str) -> Result<TreeId> {
        self.arena.parse(text)
    }

    pub fn display(&self, id: TreeId) -> String {
        self.arena.display(id)
    }

    /// Number of grammars built so far.
    pub fn built(&self) -> usize {
        self.grammars.len()
    }

    pub fn grammar(&self, n: usize) -> Result<&Grammar> {
        self.grammars.get(n).ok_or(Error::MissingGrammar(n))
    }

    /// Build `R_n`, which must be the next grammar in index order. Asking
    /// for an already built grammar returns it.
    pub fn construct(&mut self, n: usize) -> Result<&Grammar> {
        let next = self.grammars.len();
        if n > next {
            return Err(Error::OutOfOrder {
                expected: next,
                requested: n,
            });
        }
        if n == next {
            let productions = self.build_productions(n)?;
            let grammar = Grammar::new(n, productions, &self.arena);
            self.grammars.push(grammar);
        }
        Ok(&self.grammars[n])
    }

    /// `R_n`, building `R_0 ..= R_n` first where needed.
    pub fn reduction_grammar(&mut self, n: usize) -> Result<&Grammar> {
        for i in self.grammars.len()..n {
            self.construct(i)?;
        }
        self.construct(n)
    }

    fn build_productions(&mut self, n: usize) -> Result<Vec<TreeId>> {
        let a = &mut self.arena;
        let (s, k, c) = (a.s(), a.k(), a.c());
        let mut prods = Vec::new();
        if n == 0 {
            let r0 = a.r(0);
            let s_r0 = a.app(s, r0);
            let k_r0 = a.app(k, r0);
            let s_r0_r0 = a.app(s_r0, r0);
            prods.extend([s, k, s_r0, k_r0, s_r0_r0]);
        } else {
            let rn = a.r(n);
            prods.push(a.app(s, rn));
            prods.push(a.app(k, rn));
            for i in 0..=n {
                let (left, right) = (a.r(n - i), a.r(i));
                prods.push(a.apply(s, &[left, right]));
            }
            let prev = a.r(n - 1);
            prods.push(a.apply(k, &[prev, c]));

            let previous = self.grammars[n - 1].productions.clone();
            for &p in &previous {
                prods.extend(self.k_expansions(p));
            }
            for &p in &previous {
                prods.extend(self.s_expansions(p)?);
            }
        }
        self.arena.canonicalize(&mut prods);
        Ok(prods)
    }

    /// Productions of `R_n` that do not mention `R_n`.
    pub fn phi_productions(&self, n: usize) -> Result<Vec<TreeId>> {
        let g = self.grammar(n)?;
        Ok(g.productions
            .iter()
            .copied()
            .filter(|&p| !self.arena.mentions(p, n))
            .collect())
    }

    /// One production per line in canonical order.
    pub fn dump_text(&self, n: usize) -> Result<String> {
        let mut out = String::new();
        for &p in self.grammar(n)?.productions() {
            out.push_str(&self.display(p));
            out.push('\n');
        }
        Ok(out)
    }

    pub fn dump(&self, n: usize) -> Result<GrammarDump> {
        let g = self.grammar(n)?;
        Ok(GrammarDump {
            schema_version: SCHEMA_VERSION,
            n,
            count: g.len(),
            productions: g.productions().iter().map(|&p| self.display(p)).collect(),
        })
    }
}
