//! Plain-text scramble files: a `scramble <egg-count>` header, then one egg
//! per line as space-separated vertex ids. `#` starts a comment.

use crate::error::{Error, Result};
use crate::scramble::Scramble;
use crate::vset::VertexSet;

pub fn parse_scramble(text: &str) -> Result<Vec<VertexSet>> {
    let mut count: Option<usize> = None;
    let mut eggs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let perr = |msg: String| Error::Parse { line, msg };
        let data = raw.split('#').next().unwrap_or("");
        let words: Vec<&str> = data.split_whitespace().collect();
        if words.is_empty() {
            continue;
        }
        match count {
            None => {
                if words.len() != 2 || words[0] != "scramble" {
                    return Err(perr("expected `scramble <egg-count>`".into()));
                }
                count = Some(words[1].parse().map_err(|_| perr(format!("bad egg count {:?}", words[1])))?);
            }
            Some(_) => {
                let mut egg = VertexSet::EMPTY;
                for w in words {
                    let v: usize = w.parse().map_err(|_| perr(format!("expected a vertex id, got {w:?}")))?;
                    if v >= 64 {
                        return Err(perr(format!("vertex id {v} out of range")));
                    }
                    egg.insert(v);
                }
                eggs.push(egg);
            }
        }
    }
    let count = count.ok_or(Error::Parse { line: 0, msg: "missing `scramble <egg-count>` header".into() })?;
    if count != eggs.len() {
        return Err(Error::Parse { line: 0, msg: format!("header says {count} eggs, found {}", eggs.len()) });
    }
    Ok(eggs)
}

pub fn write_scramble(s: &Scramble<'_>) -> String {
    let mut out = format!("scramble {}\n", s.size());
    for e in s.eggs() {
        let ids: Vec<String> = e.iter().map(|v| v.to_string()).collect();
        out.push_str(&ids.join(" "));
        out.push('\n');
    }
    out
}
