// Build `R_0 ..= R_3` and look at their productions.
//
// ```text
// cargo run --release --example build_grammars
// ```

use sk_grammars::GrammarStore;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut store = GrammarStore::new();
    for n in 0..=3 {
        let g = store.reduction_grammar(n)?;
        println!("|R_{n}| = {}", g.len());
    }
    assert_eq!(store.grammar(3)?.len(), 625);

    print!("R_0:\n{}", store.dump_text(0)?);
    assert_eq!(store.dump_text(0)?, "S\nK\nS R0\nK R0\nS R0 R0\n");

    println!("R_1:");
    for &p in store.grammar(1)?.productions() {
        let a = store.arena();
        println!(
            "  {:<20} size {} length {} degree {}",
            store.display(p),
            a.size(p),
            a.length(p),
            a.degree(p)
        );
    }

    for n in 0..=3 {
        let r = store.tree(&format!("R{n}"))?;
        println!("potential of R_{n}: {}", store.potential(r)?);
    }

    let json = serde_json::to_string(&store.dump(1)?)?;
    println!("{json}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
