//! RFC 8259 parser producing an annotated [`Document`].
//!
//! Parsing runs in two passes. The first builds a scratch tree with an
//! explicit stack (no recursion, so nesting depth is bounded only by memory)
//! and resolves repeated object keys: the last value wins and keeps the slot
//! of the key's first occurrence. The second pass flattens the scratch tree
//! into preorder and lets [`Document`] compute levels and sizes.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::document::{Document, Node, Payload};

/// Malformed input, with a 1-based line and column (counted in characters).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, thiserror::Error)]
#[error("{message} at line {line}, column {column}")]
pub struct ParseFailure {
    pub message: String,
    pub line: usize,
    pub column: usize,
}

impl ParseFailure {
    fn at(text: &str, offset: usize, message: impl Into<String>) -> Self {
        let before = &text[..offset];
        let line_start = before.rfind('\n').map_or(0, |i| i + 1);
        ParseFailure {
            message: message.into(),
            line: before.matches('\n').count() + 1,
            column: before[line_start..].chars().count() + 1,
        }
    }
}

/// Parses JSON text. Input must be valid UTF-8.
pub fn parse(input: impl AsRef<[u8]>) -> Result<Document, ParseFailure> {
    let bytes = input.as_ref();
    let text = match std::str::from_utf8(bytes) {
        Ok(text) => text,
        Err(err) => {
            let valid = std::str::from_utf8(&bytes[..err.valid_up_to()]).expect("valid prefix");
            return Err(ParseFailure::at(valid, valid.len(), "invalid UTF-8"));
        }
    };
    let scratch = Parser {
        text,
        bytes,
        pos: 0,
    }
    .run()?;
    Ok(flatten(scratch))
}

struct RawNode {
    payload: Payload,
    children: Vec<(Option<Box<str>>, usize)>,
}

struct Scratch {
    nodes: Vec<RawNode>,
    root: usize,
}

struct Frame {
    node: usize,
    is_object: bool,
    /// Member name awaiting its value.
    pending_key: Option<Box<str>>,
    /// Key → position in the node's children.
    slots: HashMap<Box<str>, usize>,
}

struct Parser<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

type PResult<T> = Result<T, ParseFailure>;

impl<'a> Parser<'a> {
    fn fail<T>(&self, message: impl Into<String>) -> PResult<T> {
        Err(ParseFailure::at(self.text, self.pos, message))
    }

    fn unexpected<T>(&self, expected: &str) -> PResult<T> {
        match self.text[self.pos..].chars().next() {
            None => self.fail(format!("unexpected end of input, expected {expected}")),
            Some(c) => self.fail(format!("unexpected character {c:?}, expected {expected}")),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while let Some(b' ' | b'\t' | b'\n' | b'\r') = self.peek() {
            self.pos += 1;
        }
    }

    fn run(mut self) -> PResult<Scratch> {
        let mut nodes: Vec<RawNode> = Vec::new();
        let mut stack: Vec<Frame> = Vec::new();

        'value: loop {
            self.skip_ws();
            let payload = match self.peek() {
                Some(b'{') => {
                    self.pos += 1;
                    nodes.push(RawNode {
                        payload: Payload::Object,
                        children: Vec::new(),
                    });
                    stack.push(Frame {
                        node: nodes.len() - 1,
                        is_object: true,
                        pending_key: None,
                        slots: HashMap::new(),
                    });
                    self.skip_ws();
                    if self.peek() == Some(b'}') {
                        self.pos += 1;
                        None
                    } else {
                        let key = self.member_key()?;
                        stack.last_mut().expect("just pushed").pending_key = Some(key);
                        continue 'value;
                    }
                }
                Some(b'[') => {
                    self.pos += 1;
                    nodes.push(RawNode {
                        payload: Payload::Array,
                        children: Vec::new(),
                    });
                    stack.push(Frame {
                        node: nodes.len() - 1,
                        is_object: false,
                        pending_key: None,
                        slots: HashMap::new(),
                    });
                    self.skip_ws();
                    if self.peek() == Some(b']') {
                        self.pos += 1;
                        None
                    } else {
                        continue 'value;
                    }
                }
                Some(b'"') => Some(Payload::String(self.string()?.into())),
                Some(b'-' | b'0'..=b'9') => Some(Payload::Number(self.number()?)),
                Some(b't') => Some(self.literal("true", Payload::Bool(true))?),
                Some(b'f') => Some(self.literal("false", Payload::Bool(false))?),
                Some(b'n') => Some(self.literal("null", Payload::Null)?),
                _ => return self.unexpected("a value"),
            };

            // `None` means a composite was closed right away and is on top of the stack.
            let mut done = match payload {
                Some(payload) => {
                    nodes.push(RawNode {
                        payload,
                        children: Vec::new(),
                    });
                    nodes.len() - 1
                }
                None => stack.pop().expect("composite frame").node,
            };

            loop {
                let Some(frame) = stack.last_mut() else {
                    self.skip_ws();
                    if self.pos != self.bytes.len() {
                        return self.unexpected("end of input");
                    }
                    return Ok(Scratch { nodes, root: done });
                };
                let children = &mut nodes[frame.node].children;
                match frame.pending_key.take() {
                    Some(key) => match frame.slots.get(&key) {
                        Some(&slot) => children[slot].1 = done,
                        None => {
                            frame.slots.insert(key.clone(), children.len());
                            children.push((Some(key), done));
                        }
                    },
                    None => children.push((None, done)),
                }

                self.skip_ws();
                let is_object = frame.is_object;
                match self.peek() {
                    Some(b',') => {
                        self.pos += 1;
                        if is_object {
                            self.skip_ws();
                            let key = self.member_key()?;
                            stack.last_mut().expect("frame").pending_key = Some(key);
                        }
                        continue 'value;
                    }
                    Some(b'}') if is_object => {
                        self.pos += 1;
                        done = stack.pop().expect("frame").node;
                    }
                    Some(b']') if !is_object => {
                        self.pos += 1;
                        done = stack.pop().expect("frame").node;
                    }
                    _ if is_object => return self.unexpected("',' or '}'"),
                    _ => return self.unexpected("',' or ']'"),
                }
            }
        }
    }

    /// Parses `"key"` followed by `:`.
    fn member_key(&mut self) -> PResult<Box<str>> {
        if self.peek() != Some(b'"') {
            return self.unexpected("a string key");
        }
        let key = self.string()?;
        self.skip_ws();
        if self.peek() != Some(b':') {
            return self.unexpected("':'");
        }
        self.pos += 1;
        Ok(key.into())
    }

    fn literal(&mut self, word: &str, payload: Payload) -> PResult<Payload> {
        if self.bytes[self.pos..].starts_with(word.as_bytes()) {
            self.pos += word.len();
            Ok(payload)
        } else {
            self.fail(format!("invalid literal, expected {word}"))
        }
    }

    fn digits(&mut self) -> usize {
        let start = self.pos;
        while let Some(b'0'..=b'9') = self.peek() {
            self.pos += 1;
        }
        self.pos - start
    }

    fn number(&mut self) -> PResult<f64> {
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        match self.peek() {
            Some(b'0') => self.pos += 1,
            Some(b'1'..=b'9') => {
                self.digits();
            }
            _ => return self.fail("invalid number, expected a digit"),
        }
        if self.peek() == Some(b'.') {
            self.pos += 1;
            if self.digits() == 0 {
                return self.fail("invalid number, expected a digit after '.'");
            }
        }
        if let Some(b'e' | b'E') = self.peek() {
            self.pos += 1;
            if let Some(b'+' | b'-') = self.peek() {
                self.pos += 1;
            }
            if self.digits() == 0 {
                return self.fail("invalid number, expected an exponent digit");
            }
        }
        let lexeme = &self.text[start..self.pos];
        let value: f64 = lexeme.parse().expect("grammar-checked number");
        if !value.is_finite() {
            self.pos = start;
            return self.fail("number out of range");
        }
        Ok(value)
    }

    fn hex4(&mut self) -> PResult<u16> {
        let Some(digits) = self.text.get(self.pos..self.pos + 4) else {
            return self.fail("invalid unicode escape");
        };
        if !digits.bytes().all(|b| b.is_ascii_hexdigit()) {
            return self.fail("invalid unicode escape");
        }
        self.pos += 4;
        Ok(u16::from_str_radix(digits, 16).expect("hex digits"))
    }

    fn string(&mut self) -> PResult<String> {
        debug_assert_eq!(self.peek(), Some(b'"'));
        self.pos += 1;
        let mut out = String::new();
        loop {
            let run_start = self.pos;
            while let Some(b) = self.peek() {
                if b == b'"' || b == b'\\' || b < 0x20 {
                    break;
                }
                self.pos += 1;
            }
            out.push_str(&self.text[run_start..self.pos]);
            match self.peek() {
                None => return self.fail("unterminated string"),
                Some(b'"') => {
                    self.pos += 1;
                    return Ok(out);
                }
                Some(b'\\') => {
                    self.pos += 1;
                    let escape = self.peek();
                    self.pos += 1;
                    match escape {
                        Some(b'"') => out.push('"'),
                        Some(b'\\') => out.push('\\'),
                        Some(b'/') => out.push('/'),
                        Some(b'b') => out.push('\u{08}'),
                        Some(b'f') => out.push('\u{0C}'),
                        Some(b'n') => out.push('\n'),
                        Some(b'r') => out.push('\r'),
                        Some(b't') => out.push('\t'),
                        Some(b'u') => {
                            let escape_start = self.pos - 2;
                            let unit = self.hex4()?;
                            let c = match unit {
                                0xD800..=0xDBFF => {
                                    if !self.bytes[self.pos..].starts_with(b"\\u") {
                                        self.pos = escape_start;
                                        return self.fail("lone surrogate in unicode escape");
                                    }
                                    self.pos += 2;
                                    let low = self.hex4()?;
                                    if !(0xDC00..=0xDFFF).contains(&low) {
                                        self.pos = escape_start;
                                        return self.fail("lone surrogate in unicode escape");
                                    }
                                    let code = 0x10000
                                        + ((u32::from(unit) - 0xD800) << 10)
                                        + (u32::from(low) - 0xDC00);
                                    char::from_u32(code).expect("valid surrogate pair")
                                }
                                0xDC00..=0xDFFF => {
                                    self.pos = escape_start;
                                    return self.fail("lone surrogate in unicode escape");
                                }
                                unit => char::from_u32(u32::from(unit)).expect("BMP scalar"),
                            };
                            out.push(c);
                        }
                        None => {
                            self.pos -= 1;
                            return self.fail("unterminated string");
                        }
                        Some(_) => {
                            self.pos -= 2;
                            return self.fail("invalid escape sequence");
                        }
                    }
                }
                Some(_) => return self.fail("control character in string"),
            }
        }
    }
}

/// A scratch node waiting for its preorder slot.
struct Pending {
    raw: usize,
    key: Option<Box<str>>,
    parent: Option<usize>,
    level: usize,
}

fn flatten(mut scratch: Scratch) -> Document {
    let mut nodes = Vec::new();
    let mut stack = vec![Pending {
        raw: scratch.root,
        key: None,
        parent: None,
        level: 0,
    }];
    while let Some(Pending {
        raw,
        key,
        parent,
        level,
    }) = stack.pop()
    {
        let index = nodes.len();
        let RawNode { payload, children } = std::mem::replace(
            &mut scratch.nodes[raw],
            RawNode {
                payload: Payload::Null,
                children: Vec::new(),
            },
        );
        nodes.push(Node {
            payload,
            key,
            parent,
            end: 0,
            level,
            size: 0,
        });
        for (child_key, child) in children.into_iter().rev() {
            stack.push(Pending {
                raw: child,
                key: child_key,
                parent: Some(index),
                level: level + 1,
            });
        }
    }
    Document::from_preorder(nodes)
}
