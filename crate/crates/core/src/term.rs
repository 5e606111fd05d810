//! Concrete SK-combinators and the normal-order reduction oracle.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::syntax::{self, Ast, Atom};

/// One of the two primitive combinators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Combinator {
    S,
    K,
}

impl fmt::Display for Combinator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Combinator::S => "S",
            Combinator::K => "K",
        })
    }
}

/// An SK-combinator.
///
/// Application nodes are reference counted, so clones are cheap and the
/// reducer can share the duplicated argument of an `S`-contraction.
#[derive(Clone)]
pub enum Term {
    S,
    K,
    App(Arc<Application>),
}

/// Application node with cached spine data.
pub struct Application {
    fun: Term,
    arg: Term,
    size: u64,
    head: Combinator,
    arity: usize,
    normal: bool,
}

impl Term {
    pub fn constant(c: Combinator) -> Term {
        match c {
            Combinator::S => Term::S,
            Combinator::K => Term::K,
        }
    }

    pub fn app(fun: Term, arg: Term) -> Term {
        let head = fun.head();
        let arity = fun.arity() + 1;
        let redex = match head {
            Combinator::K => arity >= 2,
            Combinator::S => arity >= 3,
        };
        let normal = !redex && fun.is_normal() && arg.is_normal();
        let size = fun.size().saturating_add(arg.size()).saturating_add(1);
        Term::App(Arc::new(Application {
            fun,
            arg,
            size,
            head,
            arity,
            normal,
        }))
    }

    /// `head args[0] ... args[n-1]`.
    pub fn apply(head: Term, args: impl IntoIterator<Item = Term>) -> Term {
        args.into_iter().fold(head, Term::app)
    }

    /// Number of applications (saturates at `u64::MAX`).
    pub fn size(&self) -> u64 {
        match self {
            Term::S | Term::K => 0,
            Term::App(a) => a.size,
        }
    }

    /// Combinator at the bottom of the left spine.
    pub fn head(&self) -> Combinator {
        match self {
            Term::S => Combinator::S,
            Term::K => Combinator::K,
            Term::App(a) => a.head,
        }
    }

    /// Number of spine arguments.
    pub fn arity(&self) -> usize {
        match self {
            Term::S | Term::K => 0,
            Term::App(a) => a.arity,
        }
    }

    /// True iff the term contains no redex.
    pub fn is_normal(&self) -> bool {
        match self {
            Term::S | Term::K => true,
            Term::App(a) => a.normal,
        }
    }

    pub fn as_app(&self) -> Option<(&Term, &Term)> {
        match self {
            Term::App(a) => Some((&a.fun, &a.arg)),
            _ => None,
        }
    }

    /// Spine arguments, left to right.
    pub fn args(&self) -> Vec<&Term> {
        let mut args = Vec::with_capacity(self.arity());
        let mut cur = self;
        while let Term::App(a) = cur {
            args.push(&a.arg);
            cur = &a.fun;
        }
        args.reverse();
        args
    }

    pub fn parse(text: &str) -> Result<Term> {
        from_ast(&syntax::parse(text)?)
    }
}

pub fn parse_term(text: &str) -> Result<Term> {
    Term::parse(text)
}

pub fn print_term(t: &Term) -> String {
    t.to_string()
}

fn from_ast(ast: &Ast) -> Result<Term> {
    match ast {
        Ast::Atom { atom: Atom::S, .. } => Ok(Term::S),
        Ast::Atom { atom: Atom::K, .. } => Ok(Term::K),
        Ast::Atom { atom, pos } => Err(Error::Syntax {
            pos: *pos,
            msg: format!(
                "`{}` is a grammar symbol, not a combinator",
                match atom {
                    Atom::C => "C".to_string(),
                    Atom::R(i) => format!("R{i}"),
                    _ => unreachable!(),
                }
            ),
        }),
        Ast::App(f, x) => Ok(Term::app(from_ast(f)?, from_ast(x)?)),
    }
}

impl PartialEq for Term {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Term::S, Term::S) | (Term::K, Term::K) => true,
            (Term::App(a), Term::App(b)) => {
                Arc::ptr_eq(a, b) || (a.size == b.size && a.fun == b.fun && a.arg == b.arg)
            }
            _ => false,
        }
    }
}

impl Eq for Term {}

impl Hash for Term {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Term::S => state.write_u8(0),
            Term::K => state.write_u8(1),
            Term::App(a) => {
                state.write_u8(2);
                a.fun.hash(state);
                a.arg.hash(state);
            }
        }
    }
}

/// `S < K < application`; applications compare by function, then argument.
impl Ord for Term {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Term::S, Term::S) | (Term::K, Term::K) => Ordering::Equal,
            (Term::S, _) => Ordering::Less,
            (_, Term::S) => Ordering::Greater,
            (Term::K, _) => Ordering::Less,
            (_, Term::K) => Ordering::Greater,
            (Term::App(a), Term::App(b)) => {
                if Arc::ptr_eq(a, b) {
                    return Ordering::Equal;
                }
                a.fun.cmp(&b.fun).then_with(|| a.arg.cmp(&b.arg))
            }
        }
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.head())?;
        for arg in self.args() {
            if arg.as_app().is_some() {
                write!(f, " ({arg})")?;
            } else {
                write!(f, " {arg}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Term({self})")
    }
}

/// All terms with exactly `size` applications, sorted by the [`Ord`] on terms.
pub fn enumerate_terms(size: usize) -> Vec<Term> {
    enumerate_up_to(size).pop().unwrap_or_default()
}

/// `result[k]` holds every term of size `k`, for `k <= max_size`.
pub fn enumerate_up_to(max_size: usize) -> Vec<Vec<Term>> {
    let mut by_size: Vec<Vec<Term>> = Vec::with_capacity(max_size + 1);
    by_size.push(vec![Term::S, Term::K]);
    for k in 1..=max_size {
        let mut terms = Vec::new();
        for left in 0..k {
            for l in &by_size[left] {
                for r in &by_size[k - 1 - left] {
                    terms.push(Term::app(l.clone(), r.clone()));
                }
            }
        }
        terms.sort();
        by_size.push(terms);
    }
    by_size
}

/// Contract the leftmost outermost redex, or `None` if `t` is normal.
///
/// Without a head redex the spine arguments are scanned left to right and
/// the first one that is not normal takes the step.
pub fn normal_order_step(t: &Term) -> Option<Term> {
    if t.is_normal() {
        return None;
    }
    let head = Term::constant(t.head());
    let args = t.args();
    match t.head() {
        Combinator::K if args.len() >= 2 => {
            let rest = args[2..].iter().map(|a| (*a).clone());
            Some(Term::apply(args[0].clone(), rest))
        }
        Combinator::S if args.len() >= 3 => {
            let (x, y, z) = (args[0].clone(), args[1].clone(), args[2].clone());
            let contracted = Term::app(Term::app(x, z.clone()), Term::app(y, z));
            let rest = args[3..].iter().map(|a| (*a).clone());
            Some(Term::apply(contracted, rest))
        }
        _ => {
            let i = args.iter().position(|a| !a.is_normal())?;
            let reduced = normal_order_step(args[i])?;
            let new_args = args.iter().enumerate().map(|(j, a)| {
                if j == i {
                    reduced.clone()
                } else {
                    (*a).clone()
                }
            });
            Some(Term::apply(head, new_args))
        }
    }
}

/// Outcome of running the reducer with a step budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Reduction {
    Normalized(usize),
    FuelExhausted,
}

/// Count normal-order steps to normal form, giving up after `fuel` steps.
pub fn reduce_count(t: &Term, fuel: usize) -> Reduction {
    let mut cur = t.clone();
    for steps in 0..=fuel {
        if cur.is_normal() {
            return Reduction::Normalized(steps);
        }
        if steps == fuel {
            break;
        }
        cur = normal_order_step(&cur).expect("non-normal term has a redex");
    }
    Reduction::FuelExhausted
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Term {
        Term::parse(s).unwrap()
    }

    #[test]
    fn parse_examples() {
        let sk_kk = Term::app(Term::app(Term::S, Term::K), Term::app(Term::K, Term::K));
        assert_eq!(t("S K (K K)"), sk_kk);
        assert_eq!(t("S"), Term::S);
        assert_eq!(t("((S K) K)"), t("S K K"));
        assert_eq!(t("SK(KK)"), sk_kk);
    }

    #[test]
    fn parse_rejects_grammar_symbols() {
        assert!(matches!(
            Term::parse("S C"),
            Err(Error::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            Term::parse("R0"),
            Err(Error::Syntax { pos: 0, .. })
        ));
        assert!(matches!(
            Term::parse("(S K"),
            Err(Error::Syntax { pos: 0, .. })
        ));
    }

    #[test]
    fn print_examples() {
        let sk_kk = Term::app(Term::app(Term::S, Term::K), Term::app(Term::K, Term::K));
        assert_eq!(print_term(&sk_kk), "S K (K K)");
        assert_eq!(print_term(&Term::S), "S");
        assert_eq!(
            print_term(&Term::app(Term::S, Term::app(Term::K, Term::K))),
            "S (K K)"
        );
    }

    #[test]
    fn enumeration_small() {
        assert_eq!(enumerate_terms(0), vec![Term::S, Term::K]);
        let one: Vec<String> = enumerate_terms(1).iter().map(|x| x.to_string()).collect();
        assert_eq!(one, ["S S", "S K", "K S", "K K"]);
        assert_eq!(enumerate_terms(3).len(), 80);
    }

    #[test]
    fn step_examples() {
        assert_eq!(normal_order_step(&t("K S K")), Some(t("S")));
        assert_eq!(normal_order_step(&t("S K K S")), Some(t("K S (K S)")));
        assert_eq!(normal_order_step(&t("S (K K S) K")), Some(t("S K K")));
        assert_eq!(normal_order_step(&t("S K K")), None);
    }

    #[test]
    fn leftmost_argument_first() {
        // both arguments are redexes; the left one goes first
        assert_eq!(
            normal_order_step(&t("S (K K K) (K S S)")),
            Some(t("S K (K S S)"))
        );
        // redex nested inside a normal-headed argument
        assert_eq!(normal_order_step(&t("K (S (K S K))")), Some(t("K (S S)")));
    }

    #[test]
    fn reduce_count_examples() {
        assert_eq!(reduce_count(&t("S"), 10), Reduction::Normalized(0));
        assert_eq!(reduce_count(&t("K S K"), 10), Reduction::Normalized(1));
        assert_eq!(reduce_count(&t("S K K S"), 10), Reduction::Normalized(2));
        assert_eq!(reduce_count(&t("S K K S"), 1), Reduction::FuelExhausted);
        assert_eq!(reduce_count(&t("S K K S"), 2), Reduction::Normalized(2));
    }

    #[test]
    fn omega_exhausts_fuel() {
        // S I I (S I I) with I = S K K
        let w = t("S (S K K) (S K K)");
        let omega = Term::app(w.clone(), w);
        assert_eq!(reduce_count(&omega, 64), Reduction::FuelExhausted);
    }

    #[test]
    fn k_step_shrinks_size() {
        for x in enumerate_up_to(4).into_iter().flatten() {
            if let Some(y) = normal_order_step(&x) {
                if x.head() == Combinator::K && x.arity() >= 2 {
                    assert!(y.size() < x.size(), "{x} -> {y}");
                }
                assert!(x.size() > 1);
            }
        }
    }
}
