use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("fence word: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FenceLetter {
    /// Connector with its black end on the lower strand.
    Sigma(usize),
    /// Connector with its black end on the upper strand.
    Tau(usize),
}

impl FenceLetter {
    pub fn index(self) -> usize {
        match self {
            FenceLetter::Sigma(i) | FenceLetter::Tau(i) => i,
        }
    }
}

impl fmt::Display for FenceLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FenceLetter::Sigma(i) => write!(f, "s{}", i),
            FenceLetter::Tau(i) => write!(f, "t{}", i),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FenceWord {
    pub k: usize,
    pub letters: Vec<FenceLetter>,
}

impl FenceWord {
    pub fn new(k: usize, letters: Vec<FenceLetter>) -> Result<FenceWord, WordError> {
        if k < 2 {
            return Err(WordError::Parse("at least two strands are needed".into()));
        }
        if let Some(l) = letters.iter().find(|l| l.index() == 0 || l.index() >= k) {
            return Err(WordError::Parse(format!("letter {} out of range for k = {}", l, k)));
        }
        Ok(FenceWord { k, letters })
    }

    /// Parses `k <int> <s<i>|t<i> ...>`; a `:` after the strand count is allowed.
    pub fn parse(text: &str) -> Result<FenceWord, WordError> {
        let mut toks = text.split_whitespace().filter(|t| *t != ":");
        let bad = |m: &str| WordError::Parse(m.to_string());
        if toks.next() != Some("k") {
            return Err(bad("expected a leading `k <int>`"));
        }
        let k = toks.next().and_then(|t| t.parse().ok()).ok_or_else(|| bad("expected a strand count"))?;
        let mut letters = Vec::new();
        for t in toks {
            let (kind, num) = t.split_at(1);
            let i: usize = num.parse().map_err(|_| bad(&format!("bad token `{}`", t)))?;
            letters.push(match kind {
                "s" => FenceLetter::Sigma(i),
                "t" => FenceLetter::Tau(i),
                _ => return Err(bad(&format!("bad token `{}`", t))),
            });
        }
        FenceWord::new(k, letters)
    }
}

impl fmt::Display for FenceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k {}", self.k)?;
        for l in &self.letters {
            write!(f, " {}", l)?;
        }
        Ok(())
    }
}
