use std::env;
use std::path::PathBuf;

fn main() {
    let crate_dir = env::var("CARGO_MANIFEST_DIR").unwrap();
    let out = PathBuf::from(&crate_dir).join("include").join("permcycle.h");
    let config = cbindgen::Config {
        language: cbindgen::Language::C,
        include_guard: Some("PERMCYCLE_H".into()),
        cpp_compat: true,
        documentation: true,
        ..Default::default()
    };
    match cbindgen::Builder::new()
        .with_crate(&crate_dir)
        .with_config(config)
        .generate()
    {
        Ok(bindings) => {
            bindings.write_to_file(out);
        }
        // header generation must not break a plain `cargo build` (e.g.
        // when invoked by tooling that can't expand macros)
        Err(e) => println!("cargo:warning=cbindgen failed: {e}"),
    }
    println!("cargo:rerun-if-changed=src/lib.rs");
}
