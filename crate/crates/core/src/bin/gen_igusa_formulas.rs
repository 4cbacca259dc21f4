//! Regenerates `src/igusa/formulas.rs`.

fn main() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/src/igusa/formulas.rs");
    std::fs::write(path, isojac::igusa::generate::render()).expect("write formulas.rs");
    eprintln!("wrote {path}");
}
