//! Line-based model format.
//!
//! ```text
//! network hae6 size 6
//! alias 1 Histone
//! 1: x3
//! 2: !x1
//! 3: x2 | x4
//! 4: !x3 & x6
//! 5: x4
//! 6: x5
//! mode intricate in:(1,2,3,4)(3,4,5,6)
//! ```
//!
//! `!` binds tighter than `&`, which binds tighter than `|`. `#` starts a
//! comment. Every automaton needs exactly one rule.

use std::collections::BTreeMap;
use std::fmt::Write;
use std::ops::Range;

use crate::error::{ParseError, ParseErrorKind, Result};
use crate::network::{BooleanNetwork, Expr};
use crate::schedules::{parse_mode, UpdateMode};
use crate::MAX_AUTOMATA;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedMode {
    pub name: String,
    pub mode: UpdateMode,
}

/// Byte ranges of the parsed items, empty for documents built in code.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SourceSpans {
    pub header: Option<Range<usize>>,
    /// Per automaton.
    pub rules: Vec<Range<usize>>,
    /// Per declared mode.
    pub modes: Vec<Range<usize>>,
    pub aliases: BTreeMap<usize, Range<usize>>,
}

#[derive(Debug, Clone)]
pub struct ModelDocument {
    pub network: BooleanNetwork,
    pub modes: Vec<NamedMode>,
    /// 0-based automaton index to display name.
    pub aliases: BTreeMap<usize, String>,
    pub spans: SourceSpans,
}

impl PartialEq for ModelDocument {
    fn eq(&self, other: &Self) -> bool {
        self.network == other.network && self.modes == other.modes && self.aliases == other.aliases
    }
}

impl ModelDocument {
    pub fn new(network: BooleanNetwork) -> Self {
        ModelDocument {
            network,
            modes: Vec::new(),
            aliases: BTreeMap::new(),
            spans: SourceSpans::default(),
        }
    }

    pub fn name(&self) -> &str {
        self.network.name()
    }

    pub fn mode(&self, name: &str) -> Option<&UpdateMode> {
        self.modes.iter().find(|m| m.name == name).map(|m| &m.mode)
    }

    /// Alias of automaton `i`, or `x{i+1}`.
    pub fn display_name(&self, i: usize) -> String {
        self.aliases
            .get(&i)
            .cloned()
            .unwrap_or_else(|| format!("x{}", i + 1))
    }
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.'))
}

/// Whitespace-separated words with absolute byte ranges.
fn words(line: &str, base: usize) -> Vec<(&str, Range<usize>)> {
    let mut out = Vec::new();
    let mut start = None;
    for (k, c) in line
        .char_indices()
        .chain(std::iter::once((line.len(), ' ')))
    {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((&line[s..k], base + s..base + k));
                start = None;
            }
            (false, None) => start = Some(k),
            _ => {}
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok {
    Not,
    And,
    Or,
    Open,
    Close,
    Var(usize),
    Const(bool),
}

struct ExprParser<'a> {
    source: &'a str,
    toks: Vec<(Tok, Range<usize>)>,
    pos: usize,
    end: usize,
}

impl<'a> ExprParser<'a> {
    fn new(
        source: &'a str,
        line: &str,
        base: usize,
        n: usize,
    ) -> std::result::Result<Self, ParseError> {
        let err = |kind, span| ParseError::at(kind, source, span);
        let bytes = line.as_bytes();
        let mut toks = Vec::new();
        let mut k = 0;
        while k < line.len() {
            let c = line[k..].chars().next().expect("in bounds");
            let start = k;
            let single = match c {
                '!' => Some(Tok::Not),
                '&' => Some(Tok::And),
                '|' => Some(Tok::Or),
                '(' => Some(Tok::Open),
                ')' => Some(Tok::Close),
                _ => None,
            };
            if c.is_whitespace() {
                k += c.len_utf8();
                continue;
            }
            if let Some(t) = single {
                k += 1;
                toks.push((t, base + start..base + k));
                continue;
            }
            // a maximal word of anything else
            k += c.len_utf8();
            while k < line.len() {
                let d = line[k..].chars().next().expect("in bounds");
                if d.is_whitespace() || "!&|()".contains(d) {
                    break;
                }
                k += d.len_utf8();
            }
            let word = &line[start..k];
            let span = base + start..base + k;
            let tok = match word {
                "0" => Tok::Const(false),
                "1" => Tok::Const(true),
                _ if bytes[start] == b'x'
                    && word.len() > 1
                    && word[1..].bytes().all(|b| b.is_ascii_digit()) =>
                {
                    match word[1..].parse::<usize>() {
                        Ok(v) if (1..=n).contains(&v) => Tok::Var(v - 1),
                        Ok(v) => return Err(err(ParseErrorKind::VariableOutOfRange(v), span)),
                        Err(_) => {
                            return Err(err(ParseErrorKind::VariableOutOfRange(usize::MAX), span))
                        }
                    }
                }
                _ => return Err(err(ParseErrorKind::UnknownToken(word.to_string()), span)),
            };
            toks.push((tok, span));
        }
        Ok(ExprParser {
            source,
            toks,
            pos: 0,
            end: base + line.len(),
        })
    }

    fn peek(&self) -> Option<Tok> {
        self.toks.get(self.pos).map(|t| t.0)
    }

    fn fail<T>(&self, what: &'static str) -> std::result::Result<T, ParseError> {
        let span = self
            .toks
            .get(self.pos)
            .map_or(self.end..self.end, |t| t.1.clone());
        Err(ParseError::at(
            ParseErrorKind::Expected(what),
            self.source,
            span,
        ))
    }

    fn parse(mut self) -> std::result::Result<Expr, ParseError> {
        let e = self.expr()?;
        if self.pos < self.toks.len() {
            return self.fail("`&`, `|` or end of line");
        }
        Ok(e)
    }

    fn expr(&mut self) -> std::result::Result<Expr, ParseError> {
        let mut e = self.term()?;
        while self.peek() == Some(Tok::Or) {
            self.pos += 1;
            e = Expr::Or(Box::new(e), Box::new(self.term()?));
        }
        Ok(e)
    }

    fn term(&mut self) -> std::result::Result<Expr, ParseError> {
        let mut e = self.factor()?;
        while self.peek() == Some(Tok::And) {
            self.pos += 1;
            e = Expr::And(Box::new(e), Box::new(self.factor()?));
        }
        Ok(e)
    }

    fn factor(&mut self) -> std::result::Result<Expr, ParseError> {
        match self.peek() {
            Some(Tok::Not) => {
                self.pos += 1;
                Ok(Expr::Not(Box::new(self.factor()?)))
            }
            Some(Tok::Var(i)) => {
                self.pos += 1;
                Ok(Expr::Var(i))
            }
            Some(Tok::Const(b)) => {
                self.pos += 1;
                Ok(Expr::Const(b))
            }
            Some(Tok::Open) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(Tok::Close) {
                    return self.fail("`)`");
                }
                self.pos += 1;
                Ok(e)
            }
            _ => self.fail("a variable, constant, `!` or `(`"),
        }
    }
}

struct Header {
    name: String,
    n: usize,
    span: Range<usize>,
}

pub fn parse_model(text: &str) -> Result<ModelDocument> {
    Ok(parse_document(text)?)
}

fn parse_document(text: &str) -> std::result::Result<ModelDocument, ParseError> {
    let err = |kind, span: Range<usize>| ParseError::at(kind, text, span);
    let mut header: Option<Header> = None;
    let mut rules: Vec<Option<(Expr, Range<usize>)>> = Vec::new();
    let mut modes: Vec<NamedMode> = Vec::new();
    let mut mode_spans = Vec::new();
    let mut aliases = BTreeMap::new();
    let mut alias_spans = BTreeMap::new();

    let mut base = 0;
    for raw in text.split_inclusive('\n') {
        let line_start = base;
        base += raw.len();
        let body = raw.split('#').next().unwrap_or("");
        let body = body.trim_end_matches(['\n', '\r']);
        let ws = words(body, line_start);
        let Some((first, first_span)) = ws.first().cloned() else {
            continue;
        };
        let line_span = first_span.start..line_start + body.trim_end().len();

        let Some(h) = &header else {
            if first != "network" {
                return Err(err(ParseErrorKind::MissingHeader, line_span));
            }
            let name = match ws.get(1) {
                Some((w, _)) if is_ident(w) => w.to_string(),
                Some((_, s)) => {
                    return Err(err(ParseErrorKind::Expected("a network name"), s.clone()))
                }
                None => {
                    return Err(err(
                        ParseErrorKind::Expected("a network name"),
                        line_span.end..line_span.end,
                    ))
                }
            };
            match ws.get(2) {
                Some((w, _)) if *w == "size" => {}
                Some((_, s)) => return Err(err(ParseErrorKind::Expected("`size`"), s.clone())),
                None => {
                    return Err(err(
                        ParseErrorKind::Expected("`size`"),
                        line_span.end..line_span.end,
                    ))
                }
            }
            let n = match ws.get(3) {
                Some((w, s)) => match w.parse::<usize>() {
                    Ok(v) if (1..=MAX_AUTOMATA).contains(&v) => v,
                    Ok(v) => return Err(err(ParseErrorKind::BadSize(v), s.clone())),
                    Err(_) => {
                        return Err(err(ParseErrorKind::Expected("an integer size"), s.clone()))
                    }
                },
                None => {
                    return Err(err(
                        ParseErrorKind::Expected("an integer size"),
                        line_span.end..line_span.end,
                    ))
                }
            };
            if let Some((w, s)) = ws.get(4) {
                return Err(err(ParseErrorKind::UnknownToken(w.to_string()), s.clone()));
            }
            rules = vec![None; n];
            header = Some(Header {
                name,
                n,
                span: line_span,
            });
            continue;
        };
        let n = h.n;

        match first {
            "mode" => {
                let (name, name_span) = match ws.get(1) {
                    Some((w, s)) if is_ident(w) => (w.to_string(), s.clone()),
                    Some((_, s)) => {
                        return Err(err(ParseErrorKind::Expected("a mode name"), s.clone()))
                    }
                    None => {
                        return Err(err(
                            ParseErrorKind::Expected("a mode name"),
                            line_span.end..line_span.end,
                        ))
                    }
                };
                let rest_rel = name_span.end - line_start;
                let rest = &body[rest_rel..];
                let lead = rest.len() - rest.trim_start().len();
                let mode_text = rest.trim();
                let mode_start = name_span.end + lead;
                let mode_span = mode_start..mode_start + mode_text.len();
                if mode_text.is_empty() {
                    return Err(err(ParseErrorKind::Expected("a mode string"), mode_span));
                }
                if modes.iter().any(|m| m.name == name) {
                    return Err(err(ParseErrorKind::DuplicateMode(name), name_span));
                }
                let raw = parse_mode(mode_text).map_err(|e| {
                    let at = (mode_start + e.offset).min(mode_span.end);
                    err(
                        ParseErrorKind::MalformedMode(e.message),
                        at..(at + 1).min(mode_span.end).max(at),
                    )
                })?;
                let mode = raw.validate(n).map_err(|e| {
                    err(
                        ParseErrorKind::MalformedMode(e.to_string()),
                        mode_span.clone(),
                    )
                })?;
                modes.push(NamedMode { name, mode });
                mode_spans.push(line_span);
            }
            "alias" => {
                let (idx, idx_span) = match ws.get(1) {
                    Some((w, s)) => match w.parse::<usize>() {
                        Ok(v) if (1..=n).contains(&v) => (v - 1, s.clone()),
                        Ok(v) => return Err(err(ParseErrorKind::RuleOutOfRange(v), s.clone())),
                        Err(_) => {
                            return Err(err(
                                ParseErrorKind::Expected("an automaton index"),
                                s.clone(),
                            ))
                        }
                    },
                    None => {
                        return Err(err(
                            ParseErrorKind::Expected("an automaton index"),
                            line_span.end..line_span.end,
                        ))
                    }
                };
                let name = match ws.get(2) {
                    Some((w, _)) if is_ident(w) => w.to_string(),
                    Some((_, s)) => {
                        return Err(err(ParseErrorKind::Expected("an alias name"), s.clone()))
                    }
                    None => {
                        return Err(err(
                            ParseErrorKind::Expected("an alias name"),
                            line_span.end..line_span.end,
                        ))
                    }
                };
                if let Some((w, s)) = ws.get(3) {
                    return Err(err(ParseErrorKind::UnknownToken(w.to_string()), s.clone()));
                }
                if aliases.insert(idx, name).is_some() {
                    return Err(err(ParseErrorKind::DuplicateAlias(idx + 1), idx_span));
                }
                alias_spans.insert(idx, line_span);
            }
            "network" => {
                return Err(err(
                    ParseErrorKind::Expected("a rule, `mode` or `alias` line"),
                    first_span,
                ));
            }
            _ if first.as_bytes()[0].is_ascii_digit() => {
                let rel = first_span.start - line_start;
                let digits = body[rel..].bytes().take_while(u8::is_ascii_digit).count();
                let idx_span = first_span.start..first_span.start + digits;
                let idx = body[rel..rel + digits]
                    .parse::<usize>()
                    .ok()
                    .filter(|v| (1..=n).contains(v))
                    .ok_or_else(|| {
                        let v = body[rel..rel + digits].parse().unwrap_or(usize::MAX);
                        err(ParseErrorKind::RuleOutOfRange(v), idx_span.clone())
                    })?;
                let after = &body[rel + digits..];
                let colon = after.len() - after.trim_start().len();
                if !after[colon..].starts_with(':') {
                    let at = idx_span.end + colon;
                    return Err(err(
                        ParseErrorKind::Expected("`:` after the rule index"),
                        at..at + 1,
                    ));
                }
                let expr_rel = rel + digits + colon + 1;
                let expr =
                    ExprParser::new(text, &body[expr_rel..], line_start + expr_rel, n)?.parse()?;
                if rules[idx - 1].is_some() {
                    return Err(err(ParseErrorKind::DuplicateRule(idx), idx_span));
                }
                rules[idx - 1] = Some((expr, line_span));
            }
            _ => {
                return Err(err(
                    ParseErrorKind::UnknownToken(first.to_string()),
                    first_span,
                ))
            }
        }
    }

    let Some(h) = header else {
        let end = text.len();
        return Err(err(ParseErrorKind::MissingHeader, end..end));
    };
    if let Some(i) = rules.iter().position(Option::is_none) {
        return Err(err(ParseErrorKind::MissingRule(i + 1), h.span));
    }
    let (exprs, rule_spans): (Vec<Expr>, Vec<Range<usize>>) = rules.into_iter().flatten().unzip();
    let network = BooleanNetwork::new(h.name, exprs).expect("rules validated against the size");
    Ok(ModelDocument {
        network,
        modes,
        aliases,
        spans: SourceSpans {
            header: Some(h.span),
            rules: rule_spans,
            modes: mode_spans,
            aliases: alias_spans,
        },
    })
}

/// Canonical text: header, aliases, rules in index order, modes in declaration order.
pub fn render_model(doc: &ModelDocument) -> String {
    let net = &doc.network;
    let mut out = String::new();
    let _ = writeln!(out, "network {} size {}", net.name(), net.size());
    for (i, name) in &doc.aliases {
        let _ = writeln!(out, "alias {} {}", i + 1, name);
    }
    for (i, f) in net.locals().iter().enumerate() {
        let _ = writeln!(out, "{}: {}", i + 1, f.expr());
    }
    for m in &doc.modes {
        let _ = writeln!(out, "mode {} {}", m.name, m.mode);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use rand::{Rng, SeedableRng};

    const PSI: &str = "\
# simplified regulatory network
network hae6 size 6
1: x3
2: !x1
3: x2 | x4
4: !x3 & x6   # repressed by 3
5: x4
6: x5
mode intricate in:(1,2,3,4)(3,4,5,6)
";

    fn parse_err(text: &str) -> ParseError {
        match parse_model(text) {
            Err(Error::Parse(e)) => e,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn parses_psi() {
        let doc = parse_model(PSI).unwrap();
        assert_eq!(doc.name(), "hae6");
        assert_eq!(doc.network.size(), 6);
        assert_eq!(doc.network.local(3).expr().to_string(), "!x3 & x6");
        assert_eq!(
            doc.mode("intricate").unwrap().to_string(),
            "in:(1,2,3,4)(3,4,5,6)"
        );
        assert_eq!(doc.spans.rules.len(), 6);
        assert_eq!(&PSI[doc.spans.rules[3].clone()], "4: !x3 & x6");
        // 000001 → f4 = 1
        assert!(doc.network.eval_local(3, 0b000001));
    }

    #[test]
    fn minimal_document() {
        let doc = parse_model("network t size 1\n1: x1").unwrap();
        assert_eq!(
            doc.network,
            BooleanNetwork::new("t", vec![Expr::var(0)]).unwrap()
        );
    }

    #[test]
    fn precedence() {
        let doc = parse_model("network p size 3\n1: !x1 | x2 & x3\n2: !(x1 | x2)\n3: 0 | 1 & x3")
            .unwrap();
        assert_eq!(
            doc.network.local(0).expr(),
            &(!Expr::var(0) | (Expr::var(1) & Expr::var(2)))
        );
        assert_eq!(doc.network.local(1).expr(), &!(Expr::var(0) | Expr::var(1)));
        assert_eq!(
            doc.network.local(2).expr(),
            &(Expr::Const(false) | (Expr::Const(true) & Expr::var(2)))
        );
    }

    #[test]
    fn error_locations() {
        let text = "network t size 6\n1: x1\n2: x9\n";
        let e = parse_err(text);
        assert_eq!(e.kind, ParseErrorKind::VariableOutOfRange(9));
        assert_eq!(&text[e.span.clone()], "x9");
        assert_eq!((e.line, e.column), (3, 4));

        let e = parse_err("network t size 2\n1: x1\n1: x2\n2: x1");
        assert_eq!(e.kind, ParseErrorKind::DuplicateRule(1));
        assert_eq!((e.line, e.column), (3, 1));

        let e = parse_err("network t size 2\n1: x1\n");
        assert_eq!(e.kind, ParseErrorKind::MissingRule(2));
        assert_eq!(e.line, 1);

        let text = "network t size 2\n1: x1 ^ x2\n2: x1";
        let e = parse_err(text);
        assert_eq!(e.kind, ParseErrorKind::UnknownToken("^".into()));
        assert_eq!(&text[e.span], "^");

        let text = "network t size 2\n1: x1\n2: x2\nmode m bs:(1,)(2)";
        let e = parse_err(text);
        assert!(matches!(e.kind, ParseErrorKind::MalformedMode(_)));
        assert_eq!(&text[e.span], ")");

        let e = parse_err("network t size 2\n1: x1\n2: x2\nmode m bs:(1)");
        assert!(matches!(e.kind, ParseErrorKind::MalformedMode(_)));

        assert_eq!(parse_err("1: x1").kind, ParseErrorKind::MissingHeader);
        assert_eq!(parse_err("").kind, ParseErrorKind::MissingHeader);
        assert_eq!(
            parse_err("network t size 0").kind,
            ParseErrorKind::BadSize(0)
        );
        assert_eq!(
            parse_err("network t size 2\n3: x1").kind,
            ParseErrorKind::RuleOutOfRange(3)
        );
        assert!(matches!(
            parse_err("network t size 1\n1: (x1").kind,
            ParseErrorKind::Expected(_)
        ));
        assert!(matches!(
            parse_err("network t size 1\n1 x1").kind,
            ParseErrorKind::Expected(_)
        ));
        assert!(matches!(
            parse_err("network t size 1\n1: x1 x1").kind,
            ParseErrorKind::Expected(_)
        ));
        assert_eq!(
            parse_err("network t size 1\n1: x1\nalias 1 a\nalias 1 b").kind,
            ParseErrorKind::DuplicateAlias(1)
        );
        assert_eq!(
            parse_err("network t size 1\n1: x1\nmode a bs:(1)\nmode a bs:(1)").kind,
            ParseErrorKind::DuplicateMode("a".into())
        );
        assert_eq!(
            parse_err("network t size 1\nrule 1: x1").kind,
            ParseErrorKind::UnknownToken("rule".into())
        );
    }

    #[test]
    fn spans_lie_inside_the_input() {
        let bad = [
            "network t size 6\n1: x1\n2: x9\n",
            "network t size 2\n1: x1 ^ x2\n2: x1",
            "network t size 2\n1: x1\n2: x2\nmode m bs:(1,)(2)",
            "network t size 2\n1: x1\n2: x2\nmode m bs:(1)(2",
            "network t size 2\n1: x1\n2: x2\nmode m ",
            "network t size 1\n1: (x1",
            "network t size 2\n1: x1\n",
            "network",
            "network t size",
        ];
        for text in bad {
            let e = parse_err(text);
            assert!(
                e.span.start <= e.span.end && e.span.end <= text.len(),
                "{text:?}: {e:?}"
            );
        }
    }

    #[test]
    fn round_trip_fixture() {
        let doc = parse_model(PSI).unwrap();
        let text = render_model(&doc);
        assert!(text.contains("mode intricate in:(1,2,3,4)(3,4,5,6)\n"));
        let again = parse_model(&text).unwrap();
        assert_eq!(again, doc);
        assert_eq!(render_model(&again), text);
    }

    fn random_expr(rng: &mut impl Rng, n: usize, depth: u32) -> Expr {
        match if depth == 0 {
            rng.gen_range(0..2)
        } else {
            rng.gen_range(0..5)
        } {
            0 => Expr::var(rng.gen_range(0..n)),
            1 => {
                if rng.gen_bool(0.2) {
                    Expr::Const(rng.gen())
                } else {
                    Expr::var(rng.gen_range(0..n))
                }
            }
            2 => !random_expr(rng, n, depth - 1),
            3 => random_expr(rng, n, depth - 1) & random_expr(rng, n, depth - 1),
            _ => random_expr(rng, n, depth - 1) | random_expr(rng, n, depth - 1),
        }
    }

    #[test]
    fn random_documents_round_trip() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for k in 0..100 {
            let n = rng.gen_range(1..=6);
            let exprs = (0..n).map(|_| random_expr(&mut rng, n, 3)).collect();
            let mut doc =
                ModelDocument::new(BooleanNetwork::new(format!("net{k}"), exprs).unwrap());
            if rng.gen_bool(0.5) {
                doc.aliases.insert(rng.gen_range(0..n), format!("g{k}"));
            }
            let perm: Vec<usize> = {
                let mut p: Vec<usize> = (0..n).collect();
                for i in (1..n).rev() {
                    p.swap(i, rng.gen_range(0..=i));
                }
                p
            };
            let cut = rng.gen_range(1..=n);
            let bs = crate::schedules::BlockSequentialMode::new(
                vec![perm[..cut].to_vec(), perm[cut..].to_vec()]
                    .into_iter()
                    .filter(|b| !b.is_empty())
                    .collect(),
                n,
            )
            .unwrap();
            doc.modes.push(NamedMode {
                name: "m".into(),
                mode: bs.into(),
            });
            let text = render_model(&doc);
            let parsed = parse_model(&text).unwrap();
            assert_eq!(parsed, doc, "{text}");
            assert_eq!(render_model(&parsed), text);
        }
    }
}
