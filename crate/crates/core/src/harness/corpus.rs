use std::path::Path;

use crate::error::{Error, Result};

/// Environment variable naming a corpus file used when none is given.
pub const CORPUS_ENV: &str = "DIVGRAPH_CORPUS";

/// An ordered list of ring specs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corpus {
    pub specs: Vec<String>,
}

impl Corpus {
    pub fn new(specs: impl IntoIterator<Item = impl Into<String>>) -> Corpus {
        Corpus {
            specs: specs.into_iter().map(Into::into).collect(),
        }
    }

    /// Fields, SPIRs, local rings with `M² = 0`, non-présimplifiable
    /// products and strongly associate rings, all of size at most 32.
    pub fn default_corpus() -> Corpus {
        let mut specs: Vec<String> = (2..=16)
            .chain([25, 27, 32])
            .map(|n| format!("Zmod({n})"))
            .collect();
        for (a, b) in [(2, 2), (2, 3), (2, 4), (3, 3), (4, 4)] {
            specs.push(format!("Prod(Zmod({a}),Zmod({b}))"));
        }
        for (n, m) in [
            (2, "x^2"),
            (2, "x^3"),
            (2, "x^2+x+1"),
            (3, "x^2+1"),
            (4, "x^2"),
        ] {
            specs.push(format!("PolyQ(Zmod({n}),{m})"));
        }
        Corpus { specs }
    }

    /// One spec per line; blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Corpus {
        Corpus::new(
            text.lines()
                .map(|l| l.split('#').next().unwrap_or("").trim())
                .filter(|l| !l.is_empty()),
        )
    }

    pub fn from_file(path: &Path) -> Result<Corpus> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
            path: path.display().to_string(),
            msg: e.to_string(),
        })?;
        Ok(Corpus::parse(&text))
    }

    /// The file named by `DIVGRAPH_CORPUS`, else the default corpus.
    pub fn from_env() -> Result<Corpus> {
        match std::env::var_os(CORPUS_ENV) {
            Some(p) if !p.is_empty() => Corpus::from_file(Path::new(&p)),
            _ => Ok(Corpus::default_corpus()),
        }
    }

    pub fn len(&self) -> usize {
        self.specs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.specs.is_empty()
    }
}

impl Default for Corpus {
    fn default() -> Self {
        Corpus::default_corpus()
    }
}
