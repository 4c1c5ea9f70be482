//! Offline sequence identification against an OEIS "stripped" dump.
//!
//! Data lines look like `A000045 ,0,1,1,2,3,5,8,13,`; lines starting with
//! `#` are comments. Lookups find the observed terms, or their negation, as
//! a consecutive run anywhere inside a sequence.

use std::collections::HashMap;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use num_bigint::BigInt;

/// Length of the term windows the index is keyed on.
pub const WINDOW: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OeisEntry {
    pub id: String,
    pub terms: Vec<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OeisMatch {
    pub id: String,
    /// 0-based position of the first matched term within the entry.
    pub offset: usize,
    pub negated: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum OeisError {
    #[error("cannot read OEIS data: {0}")]
    Io(#[from] std::io::Error),
    #[error("need at least {need} observed terms, got {got}")]
    TooFewTerms { got: usize, need: usize },
}

/// Immutable index over the well-formed lines of a stripped file.
#[derive(Debug, Clone, Default)]
pub struct OeisIndex {
    entries: Vec<OeisEntry>,
    windows: HashMap<Vec<BigInt>, Vec<(usize, usize)>>,
    malformed: usize,
}

fn valid_id(id: &str) -> bool {
    id.len() == 7 && id.starts_with('A') && id[1..].bytes().all(|b| b.is_ascii_digit())
}

/// Parses one data line; `None` if it does not follow the format.
fn parse_line(line: &str) -> Option<OeisEntry> {
    let (id, rest) = line.split_once(' ')?;
    if !valid_id(id) {
        return None;
    }
    let body = rest.trim().strip_prefix(',')?.strip_suffix(',')?;
    let terms = body
        .split(',')
        .map(|t| t.parse::<BigInt>().ok())
        .collect::<Option<Vec<_>>>()?;
    if terms.is_empty() {
        return None;
    }
    Some(OeisEntry {
        id: id.to_string(),
        terms,
    })
}

/// Reads a stripped file. Malformed lines are skipped and counted.
pub fn ingest_stripped<R: BufRead>(source: R) -> Result<OeisIndex, OeisError> {
    let mut entries = Vec::new();
    let mut malformed = 0;
    for line in source.lines() {
        let line = line?;
        let line = line.trim_end();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match parse_line(line) {
            Some(e) => entries.push(e),
            None => malformed += 1,
        }
    }
    Ok(OeisIndex::new(entries, malformed))
}

impl OeisIndex {
    fn new(mut entries: Vec<OeisEntry>, malformed: usize) -> Self {
        entries.sort_by(|a, b| a.id.cmp(&b.id));
        let mut windows: HashMap<Vec<BigInt>, Vec<(usize, usize)>> = HashMap::new();
        for (e, entry) in entries.iter().enumerate() {
            for (offset, w) in entry.terms.windows(WINDOW).enumerate() {
                windows.entry(w.to_vec()).or_default().push((e, offset));
            }
        }
        OeisIndex {
            entries,
            windows,
            malformed,
        }
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self, OeisError> {
        ingest_stripped(BufReader::new(File::open(path)?))
    }

    pub fn entries(&self) -> &[OeisEntry] {
        &self.entries
    }

    pub fn malformed(&self) -> usize {
        self.malformed
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// First offset of `pattern` inside each entry that contains it.
    fn find(&self, pattern: &[BigInt]) -> Vec<(usize, usize)> {
        let mut hits: Vec<(usize, usize)> = Vec::new();
        let mut record = |e: usize, offset: usize| match hits.iter_mut().find(|h| h.0 == e) {
            Some(h) => h.1 = h.1.min(offset),
            None => hits.push((e, offset)),
        };
        if pattern.len() >= WINDOW {
            let Some(candidates) = self.windows.get(&pattern[..WINDOW]) else {
                return hits;
            };
            for &(e, offset) in candidates {
                if self.entries[e].terms[offset..].starts_with(pattern) {
                    record(e, offset);
                }
            }
        } else {
            for (e, entry) in self.entries.iter().enumerate() {
                if let Some(offset) = entry
                    .terms
                    .windows(pattern.len())
                    .position(|w| w == pattern)
                {
                    record(e, offset);
                }
            }
        }
        hits
    }

    /// Entries containing `observed` or its negation as a consecutive run.
    ///
    /// Results are ordered by id, then unnegated before negated.
    pub fn lookup(
        &self,
        observed: &[BigInt],
        min_match: usize,
    ) -> Result<Vec<OeisMatch>, OeisError> {
        let need = min_match.max(1);
        if observed.len() < need {
            return Err(OeisError::TooFewTerms {
                got: observed.len(),
                need,
            });
        }
        let negated: Vec<BigInt> = observed.iter().map(|x| -x).collect();
        let mut out = Vec::new();
        for (pattern, flag) in [(observed, false), (negated.as_slice(), true)] {
            for (e, offset) in self.find(pattern) {
                out.push(OeisMatch {
                    id: self.entries[e].id.clone(),
                    offset,
                    negated: flag,
                });
            }
        }
        out.sort_by(|a, b| (&a.id, a.negated).cmp(&(&b.id, b.negated)));
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn parses_the_documented_examples() {
        let src = "A000045 ,0,1,1,2,3,5,8,13,\n# comment\nA00004 1,2,3\n";
        let idx = ingest_stripped(src.as_bytes()).unwrap();
        assert_eq!(idx.len(), 1);
        assert_eq!(idx.malformed(), 1);
        assert_eq!(idx.entries()[0].terms, ints(&[0, 1, 1, 2, 3, 5, 8, 13]));
    }

    #[test]
    fn rejects_broken_lines() {
        for bad in [
            "A000045 0,1,1,",
            "A000045 ,0,1,1",
            "A000045 ,,",
            "A000045 ,0,x,1,",
            "B000045 ,0,1,",
            "A0000451 ,0,1,",
            "A000045",
        ] {
            assert!(parse_line(bad).is_none(), "{bad}");
        }
        assert_eq!(parse_line("A000001 ,-3,").unwrap().terms, ints(&[-3]));
    }

    #[test]
    fn finds_first_offset_once_per_entry() {
        let idx = ingest_stripped("A000012 ,1,1,1,1,1,1,\nA000045 ,0,1,1,2,3,5,8,13,\n".as_bytes())
            .unwrap();
        let hits = idx.lookup(&ints(&[1, 1, 1, 1]), 4).unwrap();
        assert_eq!(
            hits,
            vec![OeisMatch {
                id: "A000012".into(),
                offset: 0,
                negated: false
            }]
        );
        let short = idx.lookup(&ints(&[1, 1]), 2).unwrap();
        assert_eq!(short.len(), 2);
        assert_eq!(short[1].offset, 1);
        assert!(matches!(
            idx.lookup(&ints(&[1, 2, 3]), 4),
            Err(OeisError::TooFewTerms { got: 3, need: 4 })
        ));
    }

    #[test]
    fn zero_runs_match_both_signs() {
        let idx = ingest_stripped("A000004 ,0,0,0,0,0,\n".as_bytes()).unwrap();
        let hits = idx.lookup(&ints(&[0, 0, 0, 0]), 4).unwrap();
        assert_eq!(
            hits.iter().map(|h| h.negated).collect::<Vec<_>>(),
            [false, true]
        );
    }
}
