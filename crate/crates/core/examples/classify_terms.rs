// Decide how many normal-order steps a term needs by grammar membership
// alone, and compare with actually reducing it.
//
// ```text
// cargo run --release --example classify_terms
// ```

use sk_grammars::membership::{Classification, Matcher};
use sk_grammars::term::reduce_count;
use sk_grammars::{GrammarStore, Term};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let store = GrammarStore::with_grammars(3)?;
    let mut matcher = Matcher::new(&store);
    let terms = [
        "S",
        "K S K",
        "S K K S",
        "S (K S) (S K) K",
        "K (K K S) (S S)",
        "S (S K K) (S K K) (S (S K K) (S K K))",
    ];
    for text in terms {
        let x = Term::parse(text)?;
        let by_grammar = matcher.classify(&x, 3)?;
        let by_reduction = reduce_count(&x, 64);
        println!(
            "{text:<40} {:<14} reducer: {by_reduction:?}",
            by_grammar.to_string()
        );
    }
    assert_eq!(
        matcher.classify(&Term::parse("S K K S")?, 3)?,
        Classification::InSteps(2)
    );

    let r1 = store.arena().lookup(sk_grammars::Node::R(1)).unwrap();
    let x = Term::parse("K K K")?;
    println!("K K K in L(R_1): {}", matcher.generates(r1, &x)?);
    println!(
        "productions of R_1 generating it: {}",
        matcher.count_matching_productions(1, &x)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
