//! The full single-graph analysis document, as printed by `colorfix analyze`.

use colorfix::analysis::{analyze, AnalyzeOptions};
use colorfix::io::load_graph;

fn main() -> colorfix::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "fixture:fig1".into());
    let g = load_graph(&arg)?;
    let a = analyze(&g, &AnalyzeOptions::default())?;
    print!("{}", a.to_human());
    println!("{}", a.to_json().lines().take(12).collect::<Vec<_>>().join("\n"));
    Ok(())
}
