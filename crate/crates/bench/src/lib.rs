//! Shared inputs for the criterion benches in `benches/`.

use fieldnorm::{generate_corpus, Corpus, SynthConfig};

/// A 22-field synthetic corpus of `institutions * papers` records.
pub fn corpus(institutions: usize, papers: usize) -> Corpus {
    generate_corpus(&SynthConfig::cross_field(1, 22, institutions, (papers, papers))).expect("valid config")
}
