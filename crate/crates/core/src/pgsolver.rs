//! Reading and writing games in the PGSolver text format.
//!
//! ```text
//! parity <max-id>;
//! <id> <priority> <owner> <succ>(,<succ>)* ("name")? ;
//! ```
//!
//! Owner `0` is Even and `1` is Odd. Whitespace between tokens is free-form.

use std::fmt::Write;

use crate::game::{GameError, ParityGame, Player, Priority, Vertex};

/// Largest priority accepted in files.
pub const MAX_FILE_PRIORITY: u64 = i32::MAX as u64;

pub fn parse_pgsolver(input: &[u8]) -> Result<ParityGame, GameError> {
    let text = std::str::from_utf8(input).map_err(|e| {
        let line = 1 + input[..e.valid_up_to()]
            .iter()
            .filter(|&&b| b == b'\n')
            .count();
        GameError::Syntax {
            line,
            message: "input is not valid UTF-8".into(),
        }
    })?;
    Parser::new(text).parse()
}

/// Canonical text: header, then vertices and successors in ascending order.
pub fn serialize_pgsolver(game: &ParityGame) -> String {
    let mut out = String::new();
    writeln!(out, "parity {};", game.vertex_count() - 1).unwrap();
    for v in game.vertices() {
        let owner = match game.owner(v) {
            Player::Even => 0,
            Player::Odd => 1,
        };
        write!(out, "{v} {} {owner} ", game.priority(v)).unwrap();
        for (i, w) in game.successors(v).iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            write!(out, "{w}").unwrap();
        }
        if let Some(label) = game.label(v) {
            out.push_str(" \"");
            for c in label.chars() {
                if c == '"' || c == '\\' {
                    out.push('\\');
                }
                out.push(c);
            }
            out.push('"');
        }
        out.push_str(";\n");
    }
    out
}

struct Parser<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
}

struct Entry {
    line: usize,
    id: Vertex,
    priority: Priority,
    owner: Player,
    successors: Vec<Vertex>,
    label: Option<String>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            chars: text.chars().peekable(),
            line: 1,
        }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, GameError> {
        Err(GameError::Syntax {
            line: self.line,
            message: message.into(),
        })
    }

    fn skip_whitespace(&mut self) {
        while let Some(&c) = self.chars.peek() {
            if !c.is_whitespace() {
                break;
            }
            if c == '\n' {
                self.line += 1;
            }
            self.chars.next();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_whitespace();
        self.chars.peek().copied()
    }

    fn expect(&mut self, expected: char) -> Result<(), GameError> {
        match self.peek() {
            Some(c) if c == expected => {
                self.chars.next();
                Ok(())
            }
            Some(c) => self.error(format!("expected '{expected}', found '{c}'")),
            None => self.error(format!("expected '{expected}', found end of input")),
        }
    }

    fn number(&mut self, what: &str) -> Result<u64, GameError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {}
            Some(c) => return self.error(format!("expected {what}, found '{c}'")),
            None => return self.error(format!("expected {what}, found end of input")),
        }
        let mut value: u64 = 0;
        while let Some(&c) = self.chars.peek() {
            let Some(d) = c.to_digit(10) else { break };
            value = match value.checked_mul(10).and_then(|x| x.checked_add(d as u64)) {
                Some(x) => x,
                None => return self.error(format!("{what} is too large")),
            };
            self.chars.next();
        }
        Ok(value)
    }

    fn vertex_id(&mut self, what: &str) -> Result<Vertex, GameError> {
        let value = self.number(what)?;
        match Vertex::try_from(value) {
            Ok(v) => Ok(v),
            Err(_) => self.error(format!("{what} is too large")),
        }
    }

    fn word(&mut self) -> String {
        let mut word = String::new();
        while let Some(&c) = self.chars.peek() {
            if !c.is_ascii_alphabetic() {
                break;
            }
            word.push(c);
            self.chars.next();
        }
        word
    }

    fn quoted(&mut self) -> Result<String, GameError> {
        self.expect('"')?;
        let mut label = String::new();
        loop {
            match self.chars.next() {
                None => return self.error("unterminated vertex name"),
                Some('"') => return Ok(label),
                Some('\\') => match self.chars.next() {
                    Some(c) => label.push(c),
                    None => return self.error("unterminated vertex name"),
                },
                Some(c) => {
                    if c == '\n' {
                        self.line += 1;
                    }
                    label.push(c);
                }
            }
        }
    }

    fn entry(&mut self) -> Result<Entry, GameError> {
        let line = self.line;
        let id = self.vertex_id("vertex id")?;
        let priority = self.number("priority")?;
        if priority > MAX_FILE_PRIORITY {
            return self.error(format!(
                "priority {priority} exceeds the maximum {MAX_FILE_PRIORITY}"
            ));
        }
        let owner = match self.number("owner")? {
            0 => Player::Even,
            1 => Player::Odd,
            other => return self.error(format!("owner must be 0 or 1, found {other}")),
        };
        if self.peek() == Some(';') {
            return Err(GameError::NoSuccessors(id));
        }
        let mut successors = vec![self.vertex_id("successor")?];
        while self.peek() == Some(',') {
            self.chars.next();
            successors.push(self.vertex_id("successor")?);
        }
        let label = if self.peek() == Some('"') {
            Some(self.quoted()?)
        } else {
            None
        };
        self.expect(';')?;
        Ok(Entry {
            line,
            id,
            priority: priority as Priority,
            owner,
            successors,
            label,
        })
    }

    fn parse(mut self) -> Result<ParityGame, GameError> {
        if self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            let word = self.word();
            if word != "parity" {
                return self.error(format!("unexpected keyword '{word}'"));
            }
            // The declared maximum id is advisory; the vertex lines are authoritative.
            self.number("maximum vertex id")?;
            self.expect(';')?;
        }
        let mut entries: Vec<Option<Entry>> = Vec::new();
        while self.peek().is_some() {
            let entry = self.entry()?;
            if entry.id >= entries.len() {
                entries.resize_with(entry.id + 1, || None);
            }
            if entries[entry.id].is_some() {
                return Err(GameError::DuplicateVertex {
                    line: entry.line,
                    vertex: entry.id,
                });
            }
            let id = entry.id;
            entries[id] = Some(entry);
        }
        if entries.is_empty() {
            return Err(GameError::Empty);
        }
        let n = entries.len();
        let mut priority = Vec::with_capacity(n);
        let mut owner = Vec::with_capacity(n);
        let mut successors = Vec::with_capacity(n);
        let mut labels = Vec::with_capacity(n);
        for (v, entry) in entries.into_iter().enumerate() {
            let entry = entry.ok_or(GameError::MissingVertex(v))?;
            priority.push(entry.priority);
            owner.push(entry.owner);
            successors.push(entry.successors);
            labels.push(entry.label);
        }
        ParityGame::with_labels(priority, owner, successors, labels)
    }
}
