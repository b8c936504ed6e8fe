//! The fixator taxonomy (lemmas 2 and 3) and the lemma 1 proxy over a corpus.

use colorfix::harness::{check_lemma1, check_lemma2_lemma3, CorpusSpec, Filter, RunConfig};

fn main() -> colorfix::Result<()> {
    let cfg = RunConfig::default();
    let corpus = || CorpusSpec::builtin(6).filter(Filter::Connected).filter(Filter::Chromatic(4));
    let r = check_lemma2_lemma3(corpus(), &cfg)?;
    println!("{} graphs scanned", r.scanned);
    for (class, count) in &r.counters {
        println!("  {class}: {count}");
    }
    println!("  findings: {}", r.findings.len());
    let r = check_lemma1(corpus(), &cfg)?;
    println!("lemma1 findings: {}", r.findings.len());
    for e in r.findings.iter().take(5) {
        println!("  {}  {}", e.graph6, e.detail);
    }
    Ok(())
}
