//! Membership of concrete terms in tree languages, and step-count
//! classification through the reduction grammars.

use std::fmt;

use rustc_hash::FxHashMap;

use crate::error::Result;
use crate::grammar::GrammarStore;
use crate::term::{Combinator, Term};
use crate::tree::{Node, TreeId};

/// Answer to "how many normal-order steps does `x` need, if at most `max_n`?"
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Classification {
    InSteps(usize),
    NotWithin(usize),
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::InSteps(n) => write!(f, "InSteps({n})"),
            Classification::NotWithin(n) => write!(f, "NotWithin({n})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum TermNode {
    S,
    K,
    App(u32, u32),
}

#[derive(Clone, Copy)]
struct TermInfo {
    node: TermNode,
    head: Combinator,
    arity: u32,
}

/// Recursive matcher over a built [`GrammarStore`].
///
/// Terms are interned into a private table on entry so that the memo can be
/// keyed on `(tree, term)` ids. Each matcher owns its caches; several
/// matchers may share one store across threads.
pub struct Matcher<'s> {
    store: &'s GrammarStore,
    terms: Vec<TermInfo>,
    term_index: FxHashMap<TermNode, u32>,
    memo: FxHashMap<(TreeId, u32), bool>,
}

impl<'s> Matcher<'s> {
    pub fn new(store: &'s GrammarStore) -> Self {
        Matcher {
            store,
            terms: Vec::new(),
            term_index: FxHashMap::default(),
            memo: FxHashMap::default(),
        }
    }

    pub fn store(&self) -> &'s GrammarStore {
        self.store
    }

    fn intern(&mut self, x: &Term) -> u32 {
        let (node, head, arity) = match x {
            Term::S => (TermNode::S, Combinator::S, 0),
            Term::K => (TermNode::K, Combinator::K, 0),
            Term::App(_) => {
                let (f, a) = x.as_app().expect("application");
                let f = self.intern(f);
                let a = self.intern(a);
                let fi = self.terms[f as usize];
                (TermNode::App(f, a), fi.head, fi.arity + 1)
            }
        };
        if let Some(&id) = self.term_index.get(&node) {
            return id;
        }
        let id = self.terms.len() as u32;
        self.terms.push(TermInfo { node, head, arity });
        self.term_index.insert(node, id);
        id
    }

    /// `x ∈ L(a)`.
    pub fn generates(&mut self, a: TreeId, x: &Term) -> Result<bool> {
        let id = self.intern(x);
        self.matches(a, id)
    }

    fn matches(&mut self, a: TreeId, x: u32) -> Result<bool> {
        let term = self.terms[x as usize];
        let arena = self.store.arena();
        match arena.node(a) {
            Node::S => return Ok(term.node == TermNode::S),
            Node::K => return Ok(term.node == TermNode::K),
            Node::C => return Ok(true),
            _ => {}
        }
        if let Some(&hit) = self.memo.get(&(a, x)) {
            return Ok(hit);
        }
        let result = match arena.node(a) {
            Node::R(k) => {
                let grammar = self.store.grammar(k as usize)?;
                let candidates = match term.node {
                    TermNode::App(..) => grammar.with_shape(term.head, term.arity as usize),
                    _ => grammar.constants(),
                };
                let mut found = false;
                for &p in candidates {
                    if self.matches(p, x)? {
                        found = true;
                        break;
                    }
                }
                found
            }
            Node::App(f, r) => match term.node {
                TermNode::App(xf, xr) => self.matches(f, xf)? && self.matches(r, xr)?,
                _ => false,
            },
            _ => unreachable!(),
        };
        self.memo.insert((a, x), result);
        Ok(result)
    }

    /// `x ∈ L(R_n)`.
    pub fn in_grammar(&mut self, n: usize, x: &Term) -> Result<bool> {
        self.store.grammar(n)?;
        let id = self.intern(x);
        let r = self
            .store
            .arena()
            .lookup(Node::R(n as u32))
            .expect("built grammars have interned nonterminals");
        self.matches(r, id)
    }

    /// The unique `n <= max_n` with `x ∈ L(R_n)`, if any.
    pub fn classify(&mut self, x: &Term, max_n: usize) -> Result<Classification> {
        for n in 0..=max_n {
            if self.in_grammar(n, x)? {
                return Ok(Classification::InSteps(n));
            }
        }
        Ok(Classification::NotWithin(max_n))
    }

    /// Every `n <= max_n` with `x ∈ L(R_n)`; at most one for a correct
    /// family of grammars.
    pub fn memberships(&mut self, x: &Term, max_n: usize) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for n in 0..=max_n {
            if self.in_grammar(n, x)? {
                out.push(n);
            }
        }
        Ok(out)
    }

    /// Number of productions of `R_n` generating `x`.
    pub fn count_matching_productions(&mut self, n: usize, x: &Term) -> Result<usize> {
        let grammar = self.store.grammar(n)?;
        let id = self.intern(x);
        let candidates = if x.as_app().is_some() {
            grammar.with_shape(x.head(), x.arity())
        } else {
            grammar.constants()
        };
        let mut count = 0;
        for &p in candidates {
            if self.matches(p, id)? {
                count += 1;
            }
        }
        Ok(count)
    }
}
