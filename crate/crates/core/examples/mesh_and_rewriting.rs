// The rewriting relation, mesh sets, rewriting sets and the two kinds of
// expansion that drive grammar construction.
//
// ```text
// cargo run --example mesh_and_rewriting
// ```

use sk_grammars::{GrammarStore, TreeId};

fn show(store: &GrammarStore, trees: &[TreeId]) -> String {
    let parts: Vec<String> = trees.iter().map(|&t| store.display(t)).collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut store = GrammarStore::with_grammars(1)?;

    let r0 = store.tree("R0")?;
    let s_r0_r0 = store.tree("S R0 R0")?;
    let s_r0_c = store.tree("S R0 C")?;
    println!("R0 rewrites to S R0 R0: {}", store.rewrites(r0, s_r0_r0)?);
    println!("R0 rewrites to S R0 C: {}", store.rewrites(r0, s_r0_c)?);

    let a = store.tree("K C R0 S")?;
    let b = store.tree("K S (S R0 C) S")?;
    let m = store.mesh_set(a, b)?;
    println!("mesh(K C R0 S, K S (S R0 C) S) = {}", show(&store, &m));
    assert_eq!(show(&store, &m), "{K S (S R0 R0) S}");

    let m = store.mesh_set(r0, s_r0_c)?;
    println!("mesh(R0, S R0 C) = {}", show(&store, &m));

    let s = store.tree("S")?;
    let rs = store.rewriting_set(s, r0)?;
    println!("rewriting set (S, R0) = {}", show(&store, &rs));
    assert_eq!(show(&store, &rs), "{S S, K S, S R0 S}");

    let ks = store.k_expansions(s_r0_r0);
    println!("K-expansions of S R0 R0: {}", show(&store, &ks));
    let ss = store.s_expansions(s_r0_r0)?;
    println!("S-expansions of S R0 R0: {}", show(&store, &ss));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
