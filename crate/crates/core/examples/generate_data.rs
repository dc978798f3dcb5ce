//! Writes every canned surface and one-variable problem to `data/`.
//!
//! `cargo run --example generate_data [-- OUT_DIR]`

use std::fs;
use std::path::PathBuf;

use expzero::catalog;

fn main() -> std::io::Result<()> {
    let root: PathBuf = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| "data".into());
    fs::create_dir_all(root.join("surfaces"))?;
    fs::create_dir_all(root.join("functions"))?;
    for s in catalog::surfaces() {
        let name = s.name.clone().expect("catalog surfaces are named");
        let path = root.join("surfaces").join(format!("{name}.json"));
        fs::write(&path, s.to_json_string() + "\n")?;
        println!("{}", path.display());
    }
    for f in catalog::functions() {
        let name = f.name.clone().expect("catalog functions are named");
        let path = root.join("functions").join(format!("{name}.json"));
        fs::write(&path, f.to_json_string() + "\n")?;
        println!("{}", path.display());
    }
    Ok(())
}
