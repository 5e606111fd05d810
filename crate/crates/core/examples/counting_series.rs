// Exact counts of terms by size and number of reduction steps.
//
// ```text
// cargo run --release --example counting_series
// ```

use sk_grammars::counting::{self, all_terms_coeffs, normal_form_coeffs, Counter};
use sk_grammars::GrammarStore;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let kmax = 12;
    let mut store = GrammarStore::with_grammars(3)?;
    let s_r0_r0 = store.tree("S R0 R0")?;

    let all = all_terms_coeffs(kmax);
    println!("all terms:     {}", join(&all));
    println!("normal forms:  {}", join(&normal_form_coeffs(kmax)));

    let mut counter = Counter::new(&store);
    for n in 0..=3 {
        let s = counter.series(n, kmax)?;
        println!("R_{n}:           {}", join(&s.coefficients));
        let check = counting::series_by_equation(&store, n, kmax)?;
        assert_eq!(check, s.coefficients);
    }

    println!(
        "terms of size 2 in S R0 R0: {}",
        counter.count_tree(s_r0_r0, 2)?
    );

    print!("{}", counting::series(&store, 1, 4)?.to_csv());
    Ok(())
}

fn join<T: std::fmt::Display>(xs: &[T]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
