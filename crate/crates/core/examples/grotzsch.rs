//! The Grötzsch graph: triangle-free, 4-chromatic, nonplanar, and without
//! color fixations among small sides.

use colorfix::harness::{check_grotzsch, RunConfig};

fn main() -> colorfix::Result<()> {
    let report = check_grotzsch(&RunConfig::default())?;
    print!("{}", report.to_human());
    println!("{}", report.to_json());
    Ok(())
}
