// Normal-order reduction of SK terms, one step at a time.
//
// ```text
// cargo run --example reduce_terms
// ```

use sk_grammars::term::{normal_order_step, reduce_count};
use sk_grammars::{Reduction, Term};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for text in ["K S K", "S K K S", "S (K K S) K", "S (K S) (S K) K"] {
        let mut t = Term::parse(text)?;
        let mut trace = vec![t.to_string()];
        while let Some(next) = normal_order_step(&t) {
            trace.push(next.to_string());
            t = next;
        }
        println!("{}", trace.join("  ->  "));
    }

    let step = normal_order_step(&Term::parse("S (K K S) K")?).unwrap();
    assert_eq!(step.to_string(), "S K K");
    assert_eq!(
        reduce_count(&Term::parse("S K K S")?, 10),
        Reduction::Normalized(2)
    );

    // S I I (S I I) with I = S K K reduces to itself and never stops.
    let omega = Term::parse("S (S K K) (S K K) (S (S K K) (S K K))")?;
    let outcome = reduce_count(&omega, 100);
    println!("{omega}: {outcome:?} after 100 steps");
    assert_eq!(outcome, Reduction::FuelExhausted);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
