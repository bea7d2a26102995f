//! Regenerates the bundled `corpus/` directory from the built-in
//! constructions: graph6 for simple graphs, edge lists otherwise.
//!
//! cargo run -p nzflow --example write_corpus -- corpus

use std::path::PathBuf;

use nzflow::generate::corpus;
use nzflow::graph_core::{encode_edge_list, encode_graph6};

fn main() -> std::io::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "corpus".into()));
    std::fs::create_dir_all(&dir)?;
    for g in corpus::all() {
        let name = g.name().expect("corpus graphs are named").to_owned();
        let (file, text) = match encode_graph6(&g) {
            Ok(s) => (format!("{name}.g6"), s),
            Err(_) => (format!("{name}.edges"), encode_edge_list(&g)),
        };
        let text = if text.ends_with('\n') { text } else { text + "\n" };
        std::fs::write(dir.join(&file), text)?;
        println!("{file}");
    }
    Ok(())
}
