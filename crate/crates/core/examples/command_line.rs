// Drive the `skgram` command line in-process.
//
// ```text
// cargo run --example command_line
// ```

use sk_grammars::cli::run;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let commands: [&[&str]; 5] = [
        &["grammar", "--n", "0"],
        &["sizes", "--max-n", "2"],
        &["series", "--n", "1", "--kmax", "3"],
        &["classify", "--term", "S K K S", "--max-n", "3"],
        &["verify", "--max-size", "2", "--max-n", "1", "--fuel", "8"],
    ];
    for args in commands {
        let outcome = run(std::iter::once("skgram").chain(args.iter().copied()));
        println!("$ skgram {}   (exit {})", args.join(" "), outcome.code);
        print!("{}{}", outcome.stdout, outcome.stderr);
        assert_eq!(outcome.code, 0);
    }
    let bad = run(["skgram", "classify", "--term", "S (K"]);
    print!("{}", bad.stderr);
    assert_eq!(bad.code, 2);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
