//! The rewriting relation `a ⊵ b` and tree potential.
//!
//! `⊵` is the reflexive-transitive closure of grammar derivation extended by
//! `C ▷ R_n`. When `a ⊵ b`, every term generated by `b` is generated by `a`.

use super::GrammarStore;
use crate::error::Result;
use crate::tree::{Node, TreeId};

impl GrammarStore {
    /// Decide `a ⊵ b`.
    ///
    /// - `C` rewrites to everything.
    /// - A combinator rewrites only to itself.
    /// - An application rewrites to `b` iff `b` is an application whose
    ///   function and argument are rewritten to componentwise.
    /// - `R_k` rewrites to `b` iff `b = R_k` or some production of `R_k`
    ///   rewrites to `b`; only productions similar to `b` can.
    ///
    /// The recursion terminates because expanding `R_k` is always followed by
    /// descending into a strict subtree of `b`.
    pub fn rewrites(&mut self, a: TreeId, b: TreeId) -> Result<bool> {
        if a == b {
            return Ok(true);
        }
        match self.arena.node(a) {
            Node::C => return Ok(true),
            Node::S | Node::K => return Ok(false),
            _ => {}
        }
        if let Some(&hit) = self.memo.rewrites.get(&(a, b)) {
            return Ok(hit);
        }
        let result = match self.arena.node(a) {
            Node::R(k) => self.grammar_rewrites(k as usize, b)?,
            Node::App(..) => self.production_rewrites(a, b)?,
            _ => unreachable!(),
        };
        self.memo.rewrites.insert((a, b), result);
        Ok(result)
    }

    fn grammar_rewrites(&mut self, k: usize, b: TreeId) -> Result<bool> {
        let grammar = self.grammar(k)?;
        match self.arena.node(b) {
            Node::S | Node::K => Ok(grammar.constants().contains(&b)),
            Node::App(..) => {
                let Some(class) = self.arena.shape(b).and_then(|s| grammar.shape_class(s)) else {
                    return Ok(false);
                };
                for &p in class.iter() {
                    if self.production_rewrites(p, b)? {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
            _ => Ok(false),
        }
    }

    /// `a ⊵ b` for an application `a`, without memoizing the pair itself.
    fn production_rewrites(&mut self, a: TreeId, b: TreeId) -> Result<bool> {
        let (Node::App(f, x), Node::App(g, y)) = (self.arena.node(a), self.arena.node(b)) else {
            return Ok(false);
        };
        let same_shape = self.arena.shape(a) == self.arena.shape(b);
        if !same_shape && self.arena.is_normal(a) && self.arena.is_normal(b) {
            return Ok(false);
        }
        Ok(self.rewrites(f, g)? && self.rewrites(x, y)?)
    }

    /// Potential: 0 for `S`, `K`, `C`; `m + Σ ‖a_i‖` for `X a_1 ... a_m`;
    /// `1 + max ‖γ‖` over the productions `γ` of `R_n` not mentioning `R_n`.
    pub fn potential(&mut self, a: TreeId) -> Result<u64> {
        match self.arena.node(a) {
            Node::S | Node::K | Node::C => Ok(0),
            Node::R(n) => self.grammar_potential(n as usize),
            Node::App(f, x) => Ok(1 + self.potential(f)? + self.potential(x)?),
        }
    }

    fn grammar_potential(&mut self, n: usize) -> Result<u64> {
        if let Some(&p) = self.memo.potential.get(&n) {
            return Ok(p);
        }
        let mut best = 0;
        for gamma in self.phi_productions(n)? {
            best = best.max(self.potential(gamma)?);
        }
        let p = 1 + best;
        self.memo.potential.insert(n, p);
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn known_rewrites() {
        let mut store = GrammarStore::with_grammars(1).unwrap();
        let c = store.tree("C").unwrap();
        let s = store.tree("S").unwrap();
        let r0 = store.tree("R0").unwrap();
        let s_r0_c = store.tree("S R0 C").unwrap();
        let s_r0_r0 = store.tree("S R0 R0").unwrap();
        assert!(store.rewrites(c, s).unwrap());
        assert!(!store.rewrites(r0, s_r0_c).unwrap());
        assert!(!store.rewrites(s_r0_c, r0).unwrap());
        assert!(store.rewrites(r0, s_r0_r0).unwrap());
        assert!(store.rewrites(s_r0_c, s_r0_r0).unwrap());
        // constant productions of R_0
        assert!(store.rewrites(r0, s).unwrap());
        let r1 = store.tree("R1").unwrap();
        assert!(!store.rewrites(r1, s).unwrap());
        assert!(store.rewrites(c, r1).unwrap());
        assert!(!store.rewrites(r1, c).unwrap());
    }

    #[test]
    fn nested_grammar_rewrites() {
        let mut store = GrammarStore::with_grammars(1).unwrap();
        let r1 = store.tree("R1").unwrap();
        // K R0 C ∈ R_1, and K K S matches it after specialisation
        let kks = store.tree("K K S").unwrap();
        assert!(store.rewrites(r1, kks).unwrap());
        // S R1 is self-referencing: R1 ⊵ S (K K S)
        let s_kks = store.tree("S (K K S)").unwrap();
        assert!(store.rewrites(r1, s_kks).unwrap());
        let r0 = store.tree("R0").unwrap();
        assert!(!store.rewrites(r0, kks).unwrap());
    }

    #[test]
    fn missing_grammar() {
        let mut store = GrammarStore::with_grammars(0).unwrap();
        let r3 = store.tree("R3").unwrap();
        let sk = store.tree("S K").unwrap();
        assert_eq!(
            store.rewrites(r3, sk).unwrap_err(),
            Error::MissingGrammar(3)
        );
        assert_eq!(store.potential(r3).unwrap_err(), Error::MissingGrammar(3));
    }

    #[test]
    fn potential_examples() {
        let mut store = GrammarStore::with_grammars(2).unwrap();
        let r0 = store.tree("R0").unwrap();
        let s = store.tree("S").unwrap();
        let c = store.tree("C").unwrap();
        let t = store.tree("S R0 R0").unwrap();
        assert_eq!(store.potential(r0).unwrap(), 1);
        assert_eq!(store.potential(s).unwrap(), 0);
        assert_eq!(store.potential(c).unwrap(), 0);
        assert_eq!(store.potential(t).unwrap(), 4);
        let r1 = store.tree("R1").unwrap();
        let r2 = store.tree("R2").unwrap();
        let (p1, p2) = (store.potential(r1).unwrap(), store.potential(r2).unwrap());
        assert!(1 < p1 && p1 < p2);
    }
}
