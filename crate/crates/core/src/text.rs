//! The ideal text format.
//!
//! A header line `vars: x, y` declares the variables; every following
//! nonempty line is one generator, written as `*`-separated factors with
//! optional `^` exponents (`x^2*y`), or `1` for the unit monomial. `#`
//! starts a comment, whitespace is ignored. Rendering an ideal and parsing
//! it back yields the identical canonical value.

use crate::context::VariableContext;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn err<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, column, message: message.into() })
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(pos) => &line[..pos],
        None => line,
    }
}

struct Tokens<'a> {
    rest: &'a str,
    line: usize,
    column: usize,
}

impl<'a> Tokens<'a> {
    fn new(text: &'a str, line: usize) -> Self {
        Self { rest: text, line, column: 1 }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.rest.chars().next() {
            if c.is_whitespace() {
                self.advance(c.len_utf8());
            } else {
                break;
            }
        }
    }

    fn advance(&mut self, bytes: usize) {
        self.column += self.rest[..bytes].chars().count();
        self.rest = &self.rest[bytes..];
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest.chars().next()
    }

    fn take_char(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.advance(c.len_utf8());
        Some(c)
    }

    fn take_identifier(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let mut len = 0;
        for (i, c) in self.rest.char_indices() {
            let ok = if i == 0 { c.is_ascii_alphabetic() || c == '_' } else { c.is_ascii_alphanumeric() || c == '_' };
            if !ok {
                break;
            }
            len = i + c.len_utf8();
        }
        if len == 0 {
            return None;
        }
        let name = &self.rest[..len];
        self.advance(len);
        Some(name)
    }

    fn take_number(&mut self) -> Result<u32, ParseError> {
        self.skip_ws();
        let (line, column) = (self.line, self.column);
        let len = self.rest.chars().take_while(|c| c.is_ascii_digit()).count();
        if len == 0 {
            return err(line, column, "expected an exponent");
        }
        let digits = &self.rest[..len];
        self.advance(len);
        digits.parse::<u32>().map_err(|_| ParseError {
            line,
            column,
            message: format!("exponent {digits} does not fit in 32 bits"),
        })
    }
}

fn parse_header(text: &str, line_no: usize) -> Result<VariableContext, ParseError> {
    let mut t = Tokens::new(text, line_no);
    match t.take_identifier() {
        Some("vars") => {}
        _ => return err(line_no, 1, "expected a `vars:` header line"),
    }
    if t.take_char() != Some(':') {
        return err(t.line, t.column, "expected `:` after `vars`");
    }
    let mut names = Vec::new();
    loop {
        let (line, column) = (t.line, t.column);
        match t.take_identifier() {
            Some(name) => names.push(name.to_string()),
            None => return err(line, column, "expected a variable name"),
        }
        match t.peek() {
            Some(',') => {
                t.take_char();
            }
            Some(c) => return err(t.line, t.column, format!("unexpected character {c:?}")),
            None => break,
        }
    }
    VariableContext::new(names).map_err(|e| ParseError {
        line: line_no,
        column: 1,
        message: e.to_string(),
    })
}

fn parse_generator(
    text: &str,
    line_no: usize,
    ctx: &VariableContext,
) -> Result<Monomial, ParseError> {
    let mut t = Tokens::new(text, line_no);
    if t.peek() == Some('1') {
        t.take_char();
        if let Some(c) = t.peek() {
            return err(t.line, t.column, format!("unexpected character {c:?} after `1`"));
        }
        return Ok(Monomial::one(ctx.arity()));
    }
    let mut exps = vec![0u32; ctx.arity()];
    loop {
        let (line, column) = (t.line, t.column);
        let name = match t.take_identifier() {
            Some(name) => name,
            None => return err(line, column, "expected a variable name"),
        };
        let index = match ctx.index_of(name) {
            Some(i) => i,
            None => return err(line, column, format!("unknown variable {name:?}")),
        };
        let exponent = if t.peek() == Some('^') {
            t.take_char();
            t.take_number()?
        } else {
            1
        };
        exps[index] = exps[index]
            .checked_add(exponent)
            .ok_or_else(|| ParseError { line, column, message: "exponent overflow".into() })?;
        match t.peek() {
            Some('*') => {
                t.take_char();
            }
            Some(c) => return err(t.line, t.column, format!("unexpected character {c:?}")),
            None => break,
        }
    }
    Ok(Monomial::new(exps))
}

/// Parses the text format into a canonical ideal.
pub fn parse_ideal(input: &str) -> Result<MonomialIdeal, ParseError> {
    let mut ctx: Option<VariableContext> = None;
    let mut gens = Vec::new();
    for (i, raw) in input.lines().enumerate() {
        let line_no = i + 1;
        let line = strip_comment(raw);
        if line.trim().is_empty() {
            continue;
        }
        match &ctx {
            None => ctx = Some(parse_header(line, line_no)?),
            Some(ctx) => gens.push(parse_generator(line, line_no, ctx)?),
        }
    }
    let ctx = match ctx {
        Some(ctx) => ctx,
        None => return err(1, 1, "missing `vars:` header"),
    };
    MonomialIdeal::new(ctx, gens).map_err(|e| ParseError {
        line: 1,
        column: 1,
        message: e.to_string(),
    })
}

/// Renders an ideal in the text format; `parse_ideal` inverts this exactly.
pub fn render_ideal(ideal: &MonomialIdeal) -> String {
    let mut out = format!("vars: {}\n", ideal.context().names().join(", "));
    for g in ideal.generators() {
        out.push_str(&ideal.context().render(g));
        out.push('\n');
    }
    out
}
