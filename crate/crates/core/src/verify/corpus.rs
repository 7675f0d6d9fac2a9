use crate::algebra::{conjugation_q8, conjugation_s3, make_alexander, make_dihedral, make_trivial, FiniteQuandle};
use crate::homology::RackComplexBundle;

/// Default top degree for corpus computations.
pub const DEFAULT_MAX_DEGREE: usize = 4;

/// A named test quandle.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub quandle: FiniteQuandle,
}

/// trivial(1..3), dihedral(3..9), two Alexander quandles and the
/// conjugation quandles of S3 and Q8.
pub fn default_corpus() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for h in 1..=3 {
        out.push(CorpusEntry { name: format!("trivial({h})"), quandle: make_trivial(h) });
    }
    for n in 3..=9 {
        out.push(CorpusEntry { name: format!("dihedral({n})"), quandle: make_dihedral(n) });
    }
    for (n, t) in [(5, 2), (8, 3)] {
        let quandle = make_alexander(n, t).expect("t is a unit");
        out.push(CorpusEntry { name: format!("alexander({n},{t})"), quandle });
    }
    out.push(CorpusEntry { name: "conjugation(S3)".into(), quandle: conjugation_s3() });
    out.push(CorpusEntry { name: "conjugation(Q8)".into(), quandle: conjugation_q8() });
    out
}

/// The corpus with one shared complex bundle per entry, so that criteria
/// reuse each other's Smith forms.
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
    pub bundles: Vec<RackComplexBundle>,
    pub max_degree: usize,
}

impl Corpus {
    pub fn new(entries: Vec<CorpusEntry>, max_degree: usize) -> Self {
        let bundles = entries.iter().map(|e| RackComplexBundle::for_quandle(e.quandle.clone(), max_degree)).collect();
        Corpus { entries, bundles, max_degree }
    }

    pub fn default_corpus() -> Self {
        Self::new(default_corpus(), DEFAULT_MAX_DEGREE)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CorpusEntry, &RackComplexBundle)> {
        self.entries.iter().zip(&self.bundles)
    }
}
