// Check every term of size at most 6 against the grammars `R_0 ..= R_3`.
//
// ```text
// cargo run --release --example exhaustive_verify
// ```

use sk_grammars::verify::{verify, VerifyConfig};
use sk_grammars::GrammarStore;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let config = VerifyConfig {
        max_size: 6,
        max_n: 3,
        fuel: 64,
        jobs: 4,
    };
    let store = GrammarStore::with_grammars(config.max_n)?;
    let report = verify(&store, config)?;
    print!("{}", report.render());
    assert_eq!(report.terms, 20134);
    assert!(report.is_ok());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
