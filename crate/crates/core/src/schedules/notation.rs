//! Mode strings: `bs:` | `bp:` | `in:` followed by parenthesised, comma
//! separated 1-based indices; block-parallel o-blocks are wrapped in `{…}`.
//! Whitespace is insignificant.

use super::mode::{BlockParallelMode, BlockSequentialMode, IntricateMode, ModeFamily, UpdateMode};
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotationError {
    pub message: String,
    /// Byte offset inside the mode string.
    pub offset: usize,
}

/// Syntactically valid mode, not yet checked against a network size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawMode {
    pub family: ModeFamily,
    /// 0-based indices.
    pub groups: Vec<Vec<usize>>,
}

impl RawMode {
    pub fn validate(self, n: usize) -> Result<UpdateMode> {
        Ok(match self.family {
            ModeFamily::BlockSequential => BlockSequentialMode::new(self.groups, n)?.into(),
            ModeFamily::BlockParallel => BlockParallelMode::new(self.groups, n)?.into(),
            ModeFamily::Intricate => IntricateMode::new(self.groups, n)?.into(),
        })
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn err<T>(&self, message: impl Into<String>) -> std::result::Result<T, NotationError> {
        Err(NotationError {
            message: message.into(),
            offset: self.pos,
        })
    }

    fn expect(&mut self, want: char) -> std::result::Result<(), NotationError> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(c) => self.err(format!("expected `{want}`, found `{c}`")),
            None => self.err(format!("expected `{want}`, found end of input")),
        }
    }

    fn number(&mut self) -> std::result::Result<usize, NotationError> {
        self.skip_ws();
        let start = self.pos;
        let digits = self.text[start..]
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.text.len() - start);
        if digits == 0 {
            return self.err("expected an automaton index");
        }
        self.pos += digits;
        match self.text[start..self.pos].parse::<usize>() {
            Ok(v) if v >= 1 => Ok(v - 1),
            _ => Err(NotationError {
                message: "automaton indices start at 1".into(),
                offset: start,
            }),
        }
    }

    fn group(&mut self) -> std::result::Result<Vec<usize>, NotationError> {
        self.expect('(')?;
        let mut out = Vec::new();
        if self.peek() == Some(')') {
            return self.err("empty block");
        }
        loop {
            out.push(self.number()?);
            match self.peek() {
                Some(',') => self.pos += 1,
                Some(')') => {
                    self.pos += 1;
                    return Ok(out);
                }
                Some(c) => return self.err(format!("expected `,` or `)`, found `{c}`")),
                None => return self.err("unterminated block"),
            }
        }
    }

    fn groups(&mut self) -> std::result::Result<Vec<Vec<usize>>, NotationError> {
        let mut out = Vec::new();
        while self.peek() == Some('(') {
            out.push(self.group()?);
        }
        if out.is_empty() {
            return self.err("expected at least one `(…)` block");
        }
        Ok(out)
    }
}

pub fn parse_mode(text: &str) -> std::result::Result<RawMode, NotationError> {
    let mut cur = Cursor { text, pos: 0 };
    cur.skip_ws();
    let rest = &text[cur.pos..];
    let family = if rest.starts_with("bs") {
        ModeFamily::BlockSequential
    } else if rest.starts_with("bp") {
        ModeFamily::BlockParallel
    } else if rest.starts_with("in") {
        ModeFamily::Intricate
    } else {
        return cur.err("expected a `bs:`, `bp:` or `in:` prefix");
    };
    cur.pos += 2;
    cur.expect(':')?;
    let groups = if family == ModeFamily::BlockParallel {
        cur.expect('{')?;
        let g = cur.groups()?;
        cur.expect('}')?;
        g
    } else {
        cur.groups()?
    };
    if let Some(c) = cur.peek() {
        return cur.err(format!("unexpected `{c}` after mode"));
    }
    Ok(RawMode { family, groups })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_each_family() {
        let m = parse_mode("bp:{(1)(3,2)}").unwrap();
        assert_eq!(m.family, ModeFamily::BlockParallel);
        assert_eq!(m.groups, vec![vec![0], vec![2, 1]]);
        let m = parse_mode("in: (1,2,3,4) (3,4,5,6)").unwrap();
        assert_eq!(m.family, ModeFamily::Intricate);
        assert_eq!(m.groups.len(), 2);
    }

    #[test]
    fn reports_offsets() {
        assert_eq!(parse_mode("xx:(1)").unwrap_err().offset, 0);
        assert_eq!(parse_mode("bs:(1,)").unwrap_err().offset, 6);
        assert_eq!(parse_mode("bs:(0)").unwrap_err().offset, 4);
        assert!(parse_mode("bs:").is_err());
        assert!(parse_mode("bs:()").is_err());
        assert!(parse_mode("bp:(1)").is_err());
        assert!(parse_mode("bp:{(1)").is_err());
        assert!(parse_mode("bs:(1)x").is_err());
    }
}
