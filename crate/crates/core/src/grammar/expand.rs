//! K- and S-expansions: productions whose terms contract their head redex
//! into the language of a given production.

use super::GrammarStore;
use crate::error::Result;
use crate::tree::{Node, TreeId};

impl GrammarStore {
    /// `K (X a_1 ... a_k) C a_{k+1} ... a_m` for `k = 0 .. m-1`, ascending.
    pub fn k_expansions(&mut self, production: TreeId) -> Vec<TreeId> {
        let (head, args) = self.arena.spine(production);
        if !matches!(self.arena.node(head), Node::S | Node::K) {
            return Vec::new();
        }
        let k = self.arena.k();
        let c = self.arena.c();
        (0..args.len())
            .map(|split| {
                let inner = self.arena.apply(head, &args[..split]);
                let prefix = self.arena.apply(k, &[inner, c]);
                self.arena.apply(prefix, &args[split..])
            })
            .collect()
    }

    /// `S (X a_1 ... a_k) φ_l φ_r a_{k+3} ... a_m` for `k = 0 .. m-2` and
    /// every `φ_l φ_r` in the rewriting set of `(a_{k+1}, a_{k+2})`.
    /// Ordered by `k`, then by the rewriting set's order.
    pub fn s_expansions(&mut self, production: TreeId) -> Result<Vec<TreeId>> {
        let (head, args) = self.arena.spine(production);
        if !matches!(self.arena.node(head), Node::S | Node::K) || args.len() < 2 {
            return Ok(Vec::new());
        }
        let s = self.arena.s();
        let mut out = Vec::new();
        for split in 0..args.len() - 1 {
            let pairs = self.rewriting_set(args[split], args[split + 1])?;
            if pairs.is_empty() {
                continue;
            }
            let inner = self.arena.apply(head, &args[..split]);
            let s_inner = self.arena.app(s, inner);
            for &pair in pairs.iter() {
                let Node::App(left, right) = self.arena.node(pair) else {
                    unreachable!("rewriting sets contain only applications");
                };
                let prefix = self.arena.apply(s_inner, &[left, right]);
                out.push(self.arena.apply(prefix, &args[split + 2..]));
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shown(store: &GrammarStore, trees: &[TreeId]) -> Vec<String> {
        trees.iter().map(|&t| store.display(t)).collect()
    }

    #[test]
    fn k_expansion_examples() {
        let mut store = GrammarStore::with_grammars(0).unwrap();
        let p = store.tree("S R0 R0").unwrap();
        let ks = store.k_expansions(p);
        assert_eq!(shown(&store, &ks), ["K S C R0 R0", "K (S R0) C R0"]);
        let s = store.tree("S").unwrap();
        assert!(store.k_expansions(s).is_empty());
        let k_r0 = store.tree("K R0").unwrap();
        let ks = store.k_expansions(k_r0);
        assert_eq!(shown(&store, &ks), ["K K C R0"]);
    }

    #[test]
    fn s_expansion_examples() {
        let mut store = GrammarStore::with_grammars(1).unwrap();
        let p = store.tree("S R0 R0").unwrap();
        let ss = store.s_expansions(p).unwrap();
        assert_eq!(
            shown(&store, &ss),
            ["S S S R0", "S S K R0", "S S (S R0) R0"]
        );

        let alpha = store.tree("S S S R0").unwrap();
        let ss = store.s_expansions(alpha).unwrap();
        let shown = shown(&store, &ss);
        assert!(shown.contains(&"S (S S) S S".to_string()), "{shown:?}");
        assert!(shown.contains(&"S (S S) K S".to_string()), "{shown:?}");

        let k_r0 = store.tree("K R0").unwrap();
        assert!(store.s_expansions(k_r0).unwrap().is_empty());
    }
}
