//! Minimal line-oriented N-Triples reader and writer.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct SyntaxError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Node {
    Iri(String),
    Blank(String),
    Literal {
        value: String,
        lang: Option<String>,
        datatype: Option<String>,
    },
}

impl Node {
    pub fn as_iri(&self) -> Option<&str> {
        match self {
            Node::Iri(iri) => Some(iri),
            _ => None,
        }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::Iri(iri) => write!(f, "<{iri}>"),
            Node::Blank(label) => write!(f, "_:{label}"),
            Node::Literal {
                value,
                lang,
                datatype,
            } => {
                f.write_str("\"")?;
                for c in value.chars() {
                    match c {
                        '"' => f.write_str("\\\"")?,
                        '\\' => f.write_str("\\\\")?,
                        '\n' => f.write_str("\\n")?,
                        '\r' => f.write_str("\\r")?,
                        '\t' => f.write_str("\\t")?,
                        c => write!(f, "{c}")?,
                    }
                }
                f.write_str("\"")?;
                if let Some(lang) = lang {
                    write!(f, "@{lang}")?;
                } else if let Some(dt) = datatype {
                    write!(f, "^^<{dt}>")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triple {
    pub line: usize,
    pub subject: Node,
    pub predicate: String,
    pub object: Node,
}

/// Parses a whole document. Blank lines and `#` comment lines are skipped.
pub fn parse(input: &str) -> Result<Vec<Triple>, SyntaxError> {
    let mut out = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let line = idx + 1;
        let text = raw.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        out.push(parse_line(text, line)?);
    }
    Ok(out)
}

fn parse_line(text: &str, line: usize) -> Result<Triple, SyntaxError> {
    let err = |message: &str| SyntaxError {
        line,
        message: message.to_string(),
    };
    let mut cur = Cursor { rest: text, line };
    let subject = cur.node()?;
    if matches!(subject, Node::Literal { .. }) {
        return Err(err("literal in subject position"));
    }
    let predicate = match cur.node()? {
        Node::Iri(iri) => iri,
        _ => return Err(err("predicate must be an IRI")),
    };
    let object = cur.node()?;
    cur.skip_ws();
    if !cur.rest.starts_with('.') {
        return Err(err("expected '.' terminating the triple"));
    }
    cur.rest = &cur.rest[1..];
    cur.skip_ws();
    if !cur.rest.is_empty() && !cur.rest.starts_with('#') {
        return Err(err("trailing content after '.'"));
    }
    Ok(Triple {
        line,
        subject,
        predicate,
        object,
    })
}

struct Cursor<'a> {
    rest: &'a str,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn fail<T>(&self, message: impl Into<String>) -> Result<T, SyntaxError> {
        Err(SyntaxError {
            line: self.line,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        self.rest = self.rest.trim_start_matches([' ', '\t']);
    }

    fn node(&mut self) -> Result<Node, SyntaxError> {
        self.skip_ws();
        match self.rest.chars().next() {
            Some('<') => self.iri().map(Node::Iri),
            Some('_') => {
                let Some(body) = self.rest.strip_prefix("_:") else {
                    return self.fail("malformed blank node");
                };
                let end = body.find(|c: char| c.is_whitespace()).unwrap_or(body.len());
                if end == 0 {
                    return self.fail("empty blank node label");
                }
                let label = body[..end].to_string();
                self.rest = &body[end..];
                Ok(Node::Blank(label))
            }
            Some('"') => self.literal(),
            Some(c) => self.fail(format!("unexpected character '{c}'")),
            None => self.fail("unexpected end of line"),
        }
    }

    fn iri(&mut self) -> Result<String, SyntaxError> {
        let body = &self.rest[1..];
        let Some(end) = body.find('>') else {
            return self.fail("unterminated IRI");
        };
        let iri = &body[..end];
        if iri
            .chars()
            .any(|c| c.is_whitespace() || c == '<' || c == '"')
        {
            return self.fail(format!("invalid character in IRI <{iri}>"));
        }
        self.rest = &body[end + 1..];
        Ok(iri.to_string())
    }

    fn literal(&mut self) -> Result<Node, SyntaxError> {
        let mut value = String::new();
        let mut chars = self.rest[1..].char_indices();
        let close = loop {
            match chars.next() {
                None => return self.fail("unterminated literal"),
                Some((i, '"')) => break i,
                Some((_, '\\')) => match chars.next() {
                    Some((_, 'n')) => value.push('\n'),
                    Some((_, 't')) => value.push('\t'),
                    Some((_, 'r')) => value.push('\r'),
                    Some((_, 'b')) => value.push('\u{8}'),
                    Some((_, 'f')) => value.push('\u{c}'),
                    Some((_, '"')) => value.push('"'),
                    Some((_, '\'')) => value.push('\''),
                    Some((_, '\\')) => value.push('\\'),
                    Some((_, u @ ('u' | 'U'))) => {
                        let len = if u == 'u' { 4 } else { 8 };
                        let hex: String = chars.by_ref().take(len).map(|(_, c)| c).collect();
                        let decoded = u32::from_str_radix(&hex, 16)
                            .ok()
                            .filter(|_| hex.len() == len)
                            .and_then(char::from_u32);
                        match decoded {
                            Some(c) => value.push(c),
                            None => return self.fail(format!("bad escape \\{u}{hex}")),
                        }
                    }
                    _ => return self.fail("bad escape sequence in literal"),
                },
                Some((_, c)) => value.push(c),
            }
        };
        self.rest = &self.rest[1 + close + 1..];
        let mut lang = None;
        let mut datatype = None;
        if let Some(tag) = self.rest.strip_prefix('@') {
            let end = tag
                .find(|c: char| !(c.is_ascii_alphanumeric() || c == '-'))
                .unwrap_or(tag.len());
            if end == 0 {
                return self.fail("empty language tag");
            }
            lang = Some(tag[..end].to_ascii_lowercase());
            self.rest = &tag[end..];
        } else if let Some(dt) = self.rest.strip_prefix("^^") {
            self.rest = dt;
            if !self.rest.starts_with('<') {
                return self.fail("datatype must be an IRI");
            }
            datatype = Some(self.iri()?);
        }
        Ok(Node::Literal {
            value,
            lang,
            datatype,
        })
    }
}

/// Writes one triple in canonical form, with a trailing LF.
pub fn write_triple(out: &mut String, subject: &Node, predicate: &str, object: &Node) {
    use std::fmt::Write;
    let _ = writeln!(out, "{subject} <{predicate}> {object} .");
}
