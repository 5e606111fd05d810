use std::sync::LazyLock;

use proptest::prelude::*;
use sk_grammars::membership::{Classification, Matcher};
use sk_grammars::term::{print_term, reduce_count};
use sk_grammars::{GrammarStore, Reduction, Term, TreeArena};

static STORE: LazyLock<GrammarStore> = LazyLock::new(|| GrammarStore::with_grammars(3).unwrap());

fn term() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![Just(Term::S), Just(Term::K)];
    leaf.prop_recursive(10, 24, 2, |inner| {
        (inner.clone(), inner).prop_map(|(f, x)| Term::app(f, x))
    })
}

fn tree_text() -> impl Strategy<Value = String> {
    let leaf = prop_oneof![
        Just("S".to_string()),
        Just("K".to_string()),
        Just("C".to_string()),
        (0u32..3).prop_map(|i| format!("R{i}")),
    ];
    leaf.prop_recursive(6, 16, 2, |inner| {
        (inner.clone(), inner).prop_map(|(f, x)| format!("({f}) ({x})"))
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, ..ProptestConfig::default() })]

    #[test]
    fn term_print_parse_round_trip(t in term()) {
        let text = print_term(&t);
        prop_assert_eq!(Term::parse(&text).unwrap(), t.clone());
        prop_assert_eq!(text, t.to_string());
    }

    #[test]
    fn tree_display_parse_round_trip(text in tree_text()) {
        let mut arena = TreeArena::new();
        let id = arena.parse(&text).unwrap();
        let shown = arena.display(id);
        prop_assert_eq!(arena.parse(&shown).unwrap(), id);
    }

    #[test]
    fn rewriting_is_reflexive(text in tree_text()) {
        let mut store = GrammarStore::with_grammars(2).unwrap();
        let a = store.tree(&text).unwrap();
        prop_assert!(store.rewrites(a, a).unwrap());
    }

    #[test]
    fn similarity_is_symmetric(x in tree_text(), y in tree_text()) {
        let mut arena = TreeArena::new();
        let a = arena.parse(&x).unwrap();
        let b = arena.parse(&y).unwrap();
        prop_assert_eq!(arena.similar(a, b), arena.similar(b, a));
    }

    #[test]
    fn classification_agrees_with_reducer(t in term()) {
        let mut m = Matcher::new(&STORE);
        let by_grammar = m.classify(&t, 3).unwrap();
        let expected = match reduce_count(&t, 256) {
            Reduction::Normalized(n) if n <= 3 => Classification::InSteps(n),
            _ => Classification::NotWithin(3),
        };
        prop_assert_eq!(by_grammar, expected, "term {}", t);
    }

    #[test]
    fn normal_terms_need_zero_steps(t in term()) {
        let zero = reduce_count(&t, 1) == Reduction::Normalized(0);
        prop_assert_eq!(t.is_normal(), zero);
    }
}
