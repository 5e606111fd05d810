//! Normal-order reduction grammars for SK combinatory logic.
//!
//! For every `n` the crate builds an unambiguous regular tree grammar `R_n`
//! generating exactly the SK-combinators that reach their normal form in
//! `n` normal-order reduction steps, and uses it to
//!
//! * decide how many steps a term needs (up to a bound) by grammar
//!   membership instead of reduction ([`membership`]),
//! * count terms of each size by number of steps, exactly ([`counting`]),
//! * cross-check everything against a brute-force reducer ([`verify`]).
//!
//! ```
//! use sk_grammars::{GrammarStore, Term, membership::{Matcher, Classification}};
//!
//! let store = GrammarStore::with_grammars(2).unwrap();
//! assert_eq!(store.grammar(1).unwrap().len(), 12);
//!
//! let mut matcher = Matcher::new(&store);
//! let x = Term::parse("S K K S").unwrap();
//! assert_eq!(matcher.classify(&x, 2).unwrap(), Classification::InSteps(2));
//! ```

pub mod cli;
pub mod counting;
pub mod error;
pub mod grammar;
pub mod membership;
mod syntax;
pub mod term;
pub mod tree;
pub mod verify;

pub use error::{Error, Result};
pub use grammar::{Grammar, GrammarDump, GrammarStore, SCHEMA_VERSION};
pub use term::{Combinator, Reduction, Term};
pub use tree::{Node, TreeArena, TreeId};
