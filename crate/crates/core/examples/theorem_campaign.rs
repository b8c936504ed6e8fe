//! Corpus campaigns: theorem 1 and both directions of lemma 4 over every
//! 4-chromatic graph on at most 7 vertices.

use colorfix::harness::{check_lemma4, check_lemma5, check_theorem1, CorpusSpec, Direction, Filter, RunConfig};

fn main() -> colorfix::Result<()> {
    let cfg = RunConfig::default();
    let planar = || CorpusSpec::builtin(7).filter(Filter::Planar).filter(Filter::Chromatic(4));

    print!("{}", check_theorem1(planar(), &cfg)?.to_human());
    print!("{}", check_lemma5(planar(), &cfg)?.to_human());

    let converse = check_lemma4(CorpusSpec::builtin(7).filter(Filter::Chromatic(4)), Direction::Both, &cfg)?;
    print!("{}", converse.to_human());
    print!("{}", converse.to_csv());
    Ok(())
}
