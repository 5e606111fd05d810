mod reduce_terms {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/reduce_terms.rs"
    ));
}

#[test]
fn reduce_terms_example_runs() {
    reduce_terms::run_example().expect("reduce_terms example should run");
}

mod build_grammars {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/build_grammars.rs"
    ));
}

#[test]
fn build_grammars_example_runs() {
    build_grammars::run_example().expect("build_grammars example should run");
}

mod mesh_and_rewriting {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/mesh_and_rewriting.rs"
    ));
}

#[test]
fn mesh_and_rewriting_example_runs() {
    mesh_and_rewriting::run_example().expect("mesh_and_rewriting example should run");
}

mod classify_terms {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/classify_terms.rs"
    ));
}

#[test]
fn classify_terms_example_runs() {
    classify_terms::run_example().expect("classify_terms example should run");
}

mod counting_series {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/counting_series.rs"
    ));
}

#[test]
fn counting_series_example_runs() {
    counting_series::run_example().expect("counting_series example should run");
}

mod exhaustive_verify {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/exhaustive_verify.rs"
    ));
}

#[test]
fn exhaustive_verify_example_runs() {
    exhaustive_verify::run_example().expect("exhaustive_verify example should run");
}

mod command_line {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/command_line.rs"
    ));
}

#[test]
fn command_line_example_runs() {
    command_line::run_example().expect("command_line example should run");
}
