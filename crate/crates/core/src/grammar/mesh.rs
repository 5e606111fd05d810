//! Mesh sets and rewriting sets.

use std::sync::Arc;

use super::GrammarStore;
use crate::error::Result;
use crate::tree::{Node, TreeId};

impl GrammarStore {
    /// Trees `γ` with `a ⊵ γ` and `b ⊵ γ` that together partition
    /// `L(a) ∩ L(b)`, for non-rewritable `a`, `b`.
    ///
    /// Similar complex trees mesh position by position: a rewritable pair of
    /// arguments contributes the more specific side, a non-rewritable pair
    /// contributes its own mesh set, and the result is the Cartesian product
    /// of those candidates under the common head. A grammar `R_k` against a
    /// complex tree meshes each production of `R_k` with it. Every other
    /// combination is empty; this includes `R_i` against `R_j`, which never
    /// share a term when `i != j`.
    pub fn mesh_set(&mut self, a: TreeId, b: TreeId) -> Result<Arc<[TreeId]>> {
        if let Some(hit) = self.memo.mesh.get(&(a, b)) {
            return Ok(hit.clone());
        }
        let mut out = match (self.arena.node(a), self.arena.node(b)) {
            (Node::App(..), Node::App(..)) => self.mesh_similar(a, b)?,
            (Node::R(k), Node::App(..)) if self.arena.is_complex(b) => {
                let class = self.similar_productions(k as usize, b)?;
                let mut acc = Vec::new();
                for &p in class.iter() {
                    acc.extend(self.mesh_similar(p, b)?);
                }
                acc
            }
            (Node::App(..), Node::R(k)) if self.arena.is_complex(a) => {
                let class = self.similar_productions(k as usize, a)?;
                let mut acc = Vec::new();
                for &p in class.iter() {
                    acc.extend(self.mesh_similar(a, p)?);
                }
                acc
            }
            _ => Vec::new(),
        };
        self.arena.canonicalize(&mut out);
        let out: Arc<[TreeId]> = out.into();
        self.memo.mesh.insert((a, b), out.clone());
        Ok(out)
    }

    fn mesh_similar(&mut self, a: TreeId, b: TreeId) -> Result<Vec<TreeId>> {
        if !(self.arena.is_complex(a) && self.arena.is_complex(b) && self.arena.similar(a, b)) {
            return Ok(Vec::new());
        }
        let (head, a_args) = self.arena.spine(a);
        let (_, b_args) = self.arena.spine(b);
        let mut acc = vec![head];
        for (&x, &y) in a_args.iter().zip(&b_args) {
            let candidates: Vec<TreeId> = if self.rewrites(x, y)? {
                vec![y]
            } else if self.rewrites(y, x)? {
                vec![x]
            } else {
                self.mesh_set(x, y)?.to_vec()
            };
            if candidates.is_empty() {
                return Ok(Vec::new());
            }
            let mut next = Vec::with_capacity(acc.len() * candidates.len());
            for &prefix in &acc {
                for &c in &candidates {
                    next.push(self.arena.app(prefix, c));
                }
            }
            acc = next;
        }
        Ok(acc)
    }

    fn similar_productions(&self, k: usize, to: TreeId) -> Result<Arc<[TreeId]>> {
        let grammar = self.grammar(k)?;
        Ok(self
            .arena
            .shape(to)
            .and_then(|s| grammar.shape_class(s))
            .unwrap_or_else(|| Arc::from(Vec::new())))
    }

    /// Applications `φ_l φ_r` with `a ⊵ φ_r` and `b ⊵ φ_l φ_r`: the shapes
    /// that the pair `z`, `y z` of an `S`-redex can take when `z ∈ L(a)` and
    /// `y z ∈ L(b)`.
    pub fn rewriting_set(&mut self, a: TreeId, b: TreeId) -> Result<Arc<[TreeId]>> {
        if let Some(hit) = self.memo.rewriting.get(&(a, b)) {
            return Ok(hit.clone());
        }
        let mut out = match self.arena.node(b) {
            Node::R(k) => {
                let grammar = self.grammar(k as usize)?;
                let complex = grammar.complex();
                let mut acc = Vec::new();
                for &p in complex.iter() {
                    acc.extend(self.rewriting_set_uncached(a, p)?);
                }
                acc
            }
            _ => self.rewriting_set_uncached(a, b)?,
        };
        self.arena.canonicalize(&mut out);
        let out: Arc<[TreeId]> = out.into();
        self.memo.rewriting.insert((a, b), out.clone());
        Ok(out)
    }

    fn rewriting_set_uncached(&mut self, a: TreeId, b: TreeId) -> Result<Vec<TreeId>> {
        match self.arena.node(b) {
            Node::S | Node::K => Ok(Vec::new()),
            Node::C => {
                let c = self.arena.c();
                Ok(vec![self.arena.app(c, a)])
            }
            Node::R(_) => Ok(self.rewriting_set(a, b)?.to_vec()),
            // b = X b_1 ... b_m, with f = X b_1 ... b_{m-1}
            Node::App(f, last) => {
                if self.rewrites(a, last)? {
                    Ok(vec![b])
                } else if self.rewrites(last, a)? {
                    Ok(vec![self.arena.app(f, a)])
                } else {
                    let meshes = self.mesh_set(a, last)?;
                    Ok(meshes.iter().map(|&g| self.arena.app(f, g)).collect())
                }
            }
        }
    }
}
