//! Writes the graph6 corpora beyond the built-in enumeration range:
//! every graph on 8 vertices, and the connected alpha-critical graphs on
//! 8 and 9 vertices.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use alphacrit::canon::refined_canonical_code;
use alphacrit::enumerate::{enumerate_all, extend_by_vertex};
use alphacrit::{is_alpha_critical, to_graph6, Graph};

fn write_lines(path: &PathBuf, graphs: &[Graph]) -> std::io::Result<()> {
    let mut out = std::io::BufWriter::new(fs::File::create(path)?);
    for g in graphs {
        writeln!(out, "{}", to_graph6(g))?;
    }
    out.flush()
}

fn critical(graphs: &[Graph]) -> Vec<Graph> {
    graphs.iter().filter(|g| g.is_connected() && is_alpha_critical(g)).copied().collect()
}

fn main() -> std::io::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "crates/core/corpus".into()));
    fs::create_dir_all(&dir)?;
    let t = Instant::now();

    let seven = enumerate_all(7).expect("n = 7 is in range");
    let eight = extend_by_vertex(&seven, refined_canonical_code);
    let connected8 = eight.iter().filter(|g| g.is_connected()).count();
    eprintln!("n=8: {} graphs, {} connected ({:.1?})", eight.len(), connected8, t.elapsed());
    write_lines(&dir.join("graphs8.g6"), &eight)?;
    let crit8 = critical(&eight);
    eprintln!("n=8: {} connected alpha-critical", crit8.len());
    write_lines(&dir.join("alpha_critical8.g6"), &crit8)?;

    let nine = extend_by_vertex(&eight, refined_canonical_code);
    let connected9 = nine.iter().filter(|g| g.is_connected()).count();
    eprintln!("n=9: {} graphs, {} connected ({:.1?})", nine.len(), connected9, t.elapsed());
    let crit9 = critical(&nine);
    eprintln!("n=9: {} connected alpha-critical ({:.1?})", crit9.len(), t.elapsed());
    write_lines(&dir.join("alpha_critical9.g6"), &crit9)?;
    Ok(())
}
