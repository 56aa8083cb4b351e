//! Regenerate the JSON fixtures from the built-in catalog:
//! `cargo run -p dissect-core --example write_fixtures -- fixtures`

use dissect_core::catalog;
use dissect_core::tiling::save;
use std::path::PathBuf;

fn main() -> std::io::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "fixtures".into()));
    std::fs::create_dir_all(&dir)?;
    for (name, t) in catalog::fixtures() {
        std::fs::write(dir.join(format!("{name}.json")), save(&t))?;
    }
    Ok(())
}
