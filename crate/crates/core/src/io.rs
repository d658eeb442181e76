//! Graph input formats.
//!
//! Edge list:
//!
//! ```text
//! # comment
//! K L [bn=<index>]
//! u v        (L lines, 0-based)
//! ```
//!
//! DOT subset: `graph [id] { a -- b -- c; d [bn=true]; }` with `//`, `#` and
//! `/* */` comments. Vertices are numbered in order of first appearance and
//! keep their DOT ids as labels. Attribute statements (`node [...]`,
//! `edge [...]`, `graph [...]`, `key=value`) are accepted and ignored apart
//! from `bn=true` on a node.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, ParseError, Result};
use crate::graph::Graph;

/// Parses either format, choosing DOT when the first token is `graph`,
/// `strict` or `digraph`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#') && !l.starts_with("//"));
    match first {
        Some(l) if ["graph", "strict", "digraph"].iter().any(|k| l.starts_with(k)) => parse_dot(text),
        _ => parse_edge_list(text),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, "missing header `K L [bn=<index>]`"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() < 2 || fields.len() > 3 {
        return Err(ParseError::new(header_line, "header must be `K L [bn=<index>]`").into());
    }
    let k = parse_usize(fields[0], header_line, "vertex count")?;
    let l = parse_usize(fields[1], header_line, "branch count")?;
    let base_node = match fields.get(2) {
        None => None,
        Some(f) => {
            let value = f
                .strip_prefix("bn=")
                .ok_or_else(|| ParseError::new(header_line, format!("unexpected header field `{f}`")))?;
            Some(parse_usize(value, header_line, "base node")?)
        }
    };

    let mut edges = Vec::with_capacity(l);
    let mut last_line = header_line;
    for (line, content) in lines {
        last_line = line;
        let parts: Vec<&str> = content.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(ParseError::new(line, format!("expected `u v`, got `{content}`")).into());
        }
        let u = parse_usize(parts[0], line, "vertex")?;
        let v = parse_usize(parts[1], line, "vertex")?;
        edges.push((u, v));
    }
    if edges.len() != l {
        return Err(ParseError::new(
            last_line,
            format!("header declares {l} branches but {} were listed", edges.len()),
        )
        .into());
    }
    Ok(Graph::new(k, edges, base_node)?)
}

fn parse_usize(s: &str, line: usize, what: &str) -> std::result::Result<usize, ParseError> {
    s.parse()
        .map_err(|_| ParseError::new(line, format!("invalid {what} `{s}`")))
}

/// Writes the edge-list format.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = match g.base_node() {
        Some(b) => format!("{} {} bn={}\n", g.vertex_count(), g.branch_count(), b),
        None => format!("{} {}\n", g.vertex_count(), g.branch_count()),
    };
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Id(String),
    EdgeOp,
    Arrow,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Eq,
    Semi,
    Comma,
}

fn tokenize(text: &str) -> std::result::Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let mut line = 1;
    while i < chars.len() {
        let c = chars[i];
        match c {
            '\n' => {
                line += 1;
                i += 1;
            }
            c if c.is_whitespace() => i += 1,
            '#' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
            }
            '/' if chars.get(i + 1) == Some(&'/') => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
            }
            '/' if chars.get(i + 1) == Some(&'*') => {
                let start = line;
                i += 2;
                loop {
                    match chars.get(i) {
                        None => return Err(ParseError::new(start, "unterminated comment")),
                        Some('*') if chars.get(i + 1) == Some(&'/') => {
                            i += 2;
                            break;
                        }
                        Some('\n') => {
                            line += 1;
                            i += 1;
                        }
                        Some(_) => i += 1,
                    }
                }
            }
            '-' if chars.get(i + 1) == Some(&'-') => {
                out.push((line, Tok::EdgeOp));
                i += 2;
            }
            '-' if chars.get(i + 1) == Some(&'>') => {
                out.push((line, Tok::Arrow));
                i += 2;
            }
            '{' | '}' | '[' | ']' | '=' | ';' | ',' => {
                let t = match c {
                    '{' => Tok::LBrace,
                    '}' => Tok::RBrace,
                    '[' => Tok::LBracket,
                    ']' => Tok::RBracket,
                    '=' => Tok::Eq,
                    ';' => Tok::Semi,
                    _ => Tok::Comma,
                };
                out.push((line, t));
                i += 1;
            }
            '"' => {
                let start = line;
                let mut s = String::new();
                i += 1;
                loop {
                    match chars.get(i) {
                        None => return Err(ParseError::new(start, "unterminated string")),
                        Some('"') => {
                            i += 1;
                            break;
                        }
                        Some('\\') if chars.get(i + 1) == Some(&'"') => {
                            s.push('"');
                            i += 2;
                        }
                        Some(&ch) => {
                            if ch == '\n' {
                                line += 1;
                            }
                            s.push(ch);
                            i += 1;
                        }
                    }
                }
                out.push((start, Tok::Id(s)));
            }
            c if c.is_alphanumeric() || c == '_' || c == '.' || c == '-' => {
                let mut s = String::new();
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '.')
                    || (i < chars.len() && chars[i] == '-' && s.is_empty())
                {
                    s.push(chars[i]);
                    i += 1;
                }
                out.push((line, Tok::Id(s)));
            }
            other => return Err(ParseError::new(line, format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct DotParser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    ids: HashMap<String, usize>,
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
    base_node: Option<(usize, usize)>,
}

impl DotParser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn line(&self) -> usize {
        self.toks
            .get(self.pos)
            .or_else(|| self.toks.last())
            .map_or(1, |(l, _)| *l)
    }

    fn next(&mut self) -> std::result::Result<Tok, ParseError> {
        let t = self
            .toks
            .get(self.pos)
            .map(|(_, t)| t.clone())
            .ok_or_else(|| ParseError::new(self.line(), "unexpected end of input"))?;
        self.pos += 1;
        Ok(t)
    }

    fn expect(&mut self, want: Tok, what: &str) -> std::result::Result<(), ParseError> {
        let line = self.line();
        match self.next()? {
            t if t == want => Ok(()),
            t => Err(ParseError::new(line, format!("expected {what}, found {t:?}"))),
        }
    }

    fn vertex(&mut self, id: String) -> usize {
        let next = self.labels.len();
        *self.ids.entry(id.clone()).or_insert_with(|| {
            self.labels.push(id);
            next
        })
    }

    /// `[k=v, k=v; ...]`; returns the pairs.
    fn attributes(&mut self) -> std::result::Result<Vec<(String, String)>, ParseError> {
        self.expect(Tok::LBracket, "`[`")?;
        let mut out = Vec::new();
        loop {
            let line = self.line();
            match self.next()? {
                Tok::RBracket => return Ok(out),
                Tok::Comma | Tok::Semi => {}
                Tok::Id(key) => {
                    if self.peek() == Some(&Tok::Eq) {
                        self.pos += 1;
                        let vline = self.line();
                        match self.next()? {
                            Tok::Id(value) => out.push((key, value)),
                            t => return Err(ParseError::new(vline, format!("expected attribute value, found {t:?}"))),
                        }
                    } else {
                        out.push((key, "true".into()));
                    }
                }
                t => return Err(ParseError::new(line, format!("unexpected {t:?} in attribute list"))),
            }
        }
    }

    fn parse(mut self) -> Result<Graph> {
        let line = self.line();
        let mut head = self.next()?;
        if head == Tok::Id("strict".into()) {
            head = self.next()?;
        }
        match head {
            Tok::Id(ref k) if k == "graph" => {}
            Tok::Id(ref k) if k == "digraph" => {
                return Err(ParseError::new(line, "directed graphs are not supported").into())
            }
            _ => return Err(ParseError::new(line, "expected `graph`").into()),
        }
        if let Some(Tok::Id(_)) = self.peek() {
            self.pos += 1;
        }
        self.expect(Tok::LBrace, "`{`")?;

        loop {
            let line = self.line();
            match self.next()? {
                Tok::RBrace => break,
                Tok::Semi | Tok::Comma => {}
                Tok::Id(id) => self.statement(id, line)?,
                t => return Err(ParseError::new(line, format!("unexpected {t:?}")).into()),
            }
        }
        if self.pos < self.toks.len() {
            return Err(ParseError::new(self.line(), "content after closing `}`").into());
        }
        if self.labels.is_empty() {
            return Err(ParseError::new(line, "graph has no vertices").into());
        }
        let bn = self.base_node.map(|(v, _)| v);
        Ok(Graph::new(self.labels.len(), self.edges, bn)?.with_labels(self.labels)?)
    }

    fn statement(&mut self, id: String, line: usize) -> Result<()> {
        if self.peek() == Some(&Tok::Eq) {
            // graph attribute `key = value`
            self.pos += 1;
            self.next()?;
            return Ok(());
        }
        if matches!(id.as_str(), "node" | "edge" | "graph") && self.peek() == Some(&Tok::LBracket) {
            self.attributes()?;
            return Ok(());
        }
        let mut chain = vec![self.vertex(id)];
        loop {
            match self.peek() {
                Some(Tok::EdgeOp) => {
                    self.pos += 1;
                    let l = self.line();
                    match self.next()? {
                        Tok::Id(next) => chain.push(self.vertex(next)),
                        t => return Err(ParseError::new(l, format!("expected vertex after `--`, found {t:?}")).into()),
                    }
                }
                Some(Tok::Arrow) => {
                    return Err(ParseError::new(self.line(), "directed edges are not supported").into());
                }
                _ => break,
            }
        }
        let attrs = if self.peek() == Some(&Tok::LBracket) {
            self.attributes()?
        } else {
            Vec::new()
        };
        if chain.len() == 1 {
            let marked = attrs
                .iter()
                .any(|(k, v)| k == "bn" && matches!(v.as_str(), "true" | "1" | "yes"));
            if marked {
                if let Some((_, first)) = self.base_node.filter(|&(b, _)| b != chain[0]) {
                    return Err(
                        ParseError::new(line, format!("second base node; first marked on line {first}")).into(),
                    );
                }
                self.base_node = Some((chain[0], line));
            }
        } else {
            self.edges.extend(chain.windows(2).map(|w| (w[0], w[1])));
        }
        Ok(())
    }
}

pub fn parse_dot(text: &str) -> Result<Graph> {
    let parser = DotParser {
        toks: tokenize(text).map_err(Error::from)?,
        pos: 0,
        ids: HashMap::new(),
        labels: Vec::new(),
        edges: Vec::new(),
        base_node: None,
    };
    parser.parse()
}
