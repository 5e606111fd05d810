//! Trees of the grammar term algebra: `S`, `K`, the nonterminal `C` of all
//! combinators, the reduction-grammar nonterminals `R_i`, and application.
//!
//! Trees are hash-consed into a [`TreeArena`], so a [`TreeId`] identifies a
//! tree structurally and memo tables can key on ids directly.

use std::cmp::Ordering;
use std::fmt::Write as _;

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::syntax::{self, Ast, Atom};
use crate::term::Combinator;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreeId(u32);

impl TreeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Node {
    S,
    K,
    C,
    R(u32),
    App(TreeId, TreeId),
}

#[derive(Clone, Copy, Debug)]
struct Info {
    node: Node,
    size: u32,
    /// Spine head when it is a combinator.
    head: Option<Combinator>,
    length: u32,
    degree: u32,
    normal: bool,
}

/// Hash-consing store for trees.
#[derive(Clone, Debug, Default)]
pub struct TreeArena {
    infos: Vec<Info>,
    index: FxHashMap<Node, TreeId>,
}

impl TreeArena {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.infos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.infos.is_empty()
    }

    pub fn intern(&mut self, node: Node) -> TreeId {
        if let Some(&id) = self.index.get(&node) {
            return id;
        }
        let info = match node {
            Node::S => Info::leaf(node, Some(Combinator::S), 0),
            Node::K => Info::leaf(node, Some(Combinator::K), 0),
            Node::C => Info::leaf(node, None, 0),
            Node::R(i) => Info::leaf(node, None, i + 1),
            Node::App(f, x) => {
                let fi = self.info(f);
                let xi = self.info(x);
                let fun_ok = match fi.node {
                    Node::S | Node::K => true,
                    Node::App(..) => fi.normal,
                    _ => false,
                };
                Info {
                    node,
                    size: fi.size + xi.size + 1,
                    head: fi.head,
                    length: if fi.head.is_some() { fi.length + 1 } else { 0 },
                    degree: fi.degree.max(xi.degree),
                    normal: fun_ok && xi.normal,
                }
            }
        };
        let id = TreeId(u32::try_from(self.infos.len()).expect("tree arena overflow"));
        self.infos.push(info);
        self.index.insert(node, id);
        id
    }

    /// Id of an already interned node, without inserting.
    pub fn lookup(&self, node: Node) -> Option<TreeId> {
        self.index.get(&node).copied()
    }

    fn info(&self, id: TreeId) -> &Info {
        &self.infos[id.index()]
    }

    pub fn node(&self, id: TreeId) -> Node {
        self.info(id).node
    }

    pub fn s(&mut self) -> TreeId {
        self.intern(Node::S)
    }

    pub fn k(&mut self) -> TreeId {
        self.intern(Node::K)
    }

    pub fn c(&mut self) -> TreeId {
        self.intern(Node::C)
    }

    pub fn r(&mut self, index: usize) -> TreeId {
        self.intern(Node::R(
            u32::try_from(index).expect("grammar index overflow"),
        ))
    }

    pub fn constant(&mut self, c: Combinator) -> TreeId {
        match c {
            Combinator::S => self.s(),
            Combinator::K => self.k(),
        }
    }

    pub fn app(&mut self, f: TreeId, x: TreeId) -> TreeId {
        self.intern(Node::App(f, x))
    }

    /// `head args[0] ... args[n-1]`.
    pub fn apply(&mut self, head: TreeId, args: &[TreeId]) -> TreeId {
        args.iter().fold(head, |acc, &a| self.app(acc, a))
    }

    /// Number of applications.
    pub fn size(&self, id: TreeId) -> usize {
        self.info(id).size as usize
    }

    /// `m` for a tree `X a_1 ... a_m` with `X` a combinator, otherwise 0.
    pub fn length(&self, id: TreeId) -> usize {
        self.info(id).length as usize
    }

    /// Least `n` such that no `R_i` with `i >= n` occurs.
    pub fn degree(&self, id: TreeId) -> usize {
        self.info(id).degree as usize
    }

    pub fn head(&self, id: TreeId) -> Option<Combinator> {
        self.info(id).head
    }

    pub fn is_normal(&self, id: TreeId) -> bool {
        self.info(id).normal
    }

    /// Normal and of positive size.
    pub fn is_complex(&self, id: TreeId) -> bool {
        let info = self.info(id);
        info.normal && info.size > 0
    }

    /// Same head combinator and same positive length. Constants are never
    /// similar to anything, themselves included.
    pub fn similar(&self, a: TreeId, b: TreeId) -> bool {
        let (ai, bi) = (self.info(a), self.info(b));
        ai.length > 0 && ai.head == bi.head && ai.length == bi.length
    }

    /// `(head, length)` class used to index grammar productions.
    pub fn shape(&self, id: TreeId) -> Option<(Combinator, usize)> {
        let info = self.info(id);
        match info.head {
            Some(c) if info.length > 0 => Some((c, info.length as usize)),
            _ => None,
        }
    }

    /// Left-spine decomposition `(head, [a_1, ..., a_m])`.
    pub fn spine(&self, id: TreeId) -> (TreeId, Vec<TreeId>) {
        let mut args = Vec::new();
        let mut cur = id;
        while let Node::App(f, x) = self.node(cur) {
            args.push(x);
            cur = f;
        }
        args.reverse();
        (cur, args)
    }

    /// Whether `R_index` occurs in the tree.
    pub fn mentions(&self, id: TreeId, index: usize) -> bool {
        let info = self.info(id);
        if (info.degree as usize) <= index {
            return false;
        }
        match info.node {
            Node::R(i) => i as usize == index,
            Node::App(f, x) => self.mentions(f, index) || self.mentions(x, index),
            _ => false,
        }
    }

    /// Canonical total order: `S < K < C < R_i < application`, grammars by
    /// index, applications lexicographically by (function, argument).
    pub fn cmp_trees(&self, a: TreeId, b: TreeId) -> Ordering {
        if a == b {
            return Ordering::Equal;
        }
        fn rank(n: Node) -> u8 {
            match n {
                Node::S => 0,
                Node::K => 1,
                Node::C => 2,
                Node::R(_) => 3,
                Node::App(..) => 4,
            }
        }
        match (self.node(a), self.node(b)) {
            (Node::R(i), Node::R(j)) => i.cmp(&j),
            (Node::App(f1, x1), Node::App(f2, x2)) => {
                self.cmp_trees(f1, f2).then_with(|| self.cmp_trees(x1, x2))
            }
            (n, m) => rank(n).cmp(&rank(m)),
        }
    }

    /// Sort canonically and drop duplicates.
    pub fn canonicalize(&self, trees: &mut Vec<TreeId>) {
        trees.sort_unstable_by(|&a, &b| self.cmp_trees(a, b));
        trees.dedup();
    }

    pub fn display(&self, id: TreeId) -> String {
        let mut out = String::new();
        self.write_tree(&mut out, id);
        out
    }

    fn write_tree(&self, out: &mut String, id: TreeId) {
        let (head, args) = self.spine(id);
        match self.node(head) {
            Node::S => out.push('S'),
            Node::K => out.push('K'),
            Node::C => out.push('C'),
            Node::R(i) => {
                let _ = write!(out, "R{i}");
            }
            Node::App(..) => unreachable!("spine head is a leaf"),
        }
        for a in args {
            out.push(' ');
            if matches!(self.node(a), Node::App(..)) {
                out.push('(');
                self.write_tree(out, a);
                out.push(')');
            } else {
                self.write_tree(out, a);
            }
        }
    }

    /// Parse tree notation (`S`, `K`, `C`, `R0`/`R_0`, juxtaposition).
    pub fn parse(&mut self, text: &str) -> Result<TreeId> {
        let ast = syntax::parse(text)?;
        Ok(self.intern_ast(&ast))
    }

    /// Like [`TreeArena::parse`] but rejects trees that are not normal.
    pub fn parse_normal(&mut self, text: &str) -> Result<TreeId> {
        let id = self.parse(text)?;
        if !self.is_normal(id) {
            return Err(Error::NotNormal(self.display(id)));
        }
        Ok(id)
    }

    fn intern_ast(&mut self, ast: &Ast) -> TreeId {
        match ast {
            Ast::Atom { atom, .. } => match *atom {
                Atom::S => self.s(),
                Atom::K => self.k(),
                Atom::C => self.c(),
                Atom::R(i) => self.intern(Node::R(i)),
            },
            Ast::App(f, x) => {
                let f = self.intern_ast(f);
                let x = self.intern_ast(x);
                self.app(f, x)
            }
        }
    }
}

impl Info {
    fn leaf(node: Node, head: Option<Combinator>, degree: u32) -> Info {
        Info {
            node,
            size: 0,
            head,
            length: 0,
            degree,
            normal: true,
        }
    }
}
