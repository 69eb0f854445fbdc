//! Ket-sum notation for four-qubit states.
//!
//! Grammar (whitespace is ignored between tokens):
//!
//! ```text
//! expr    := sign? term (sign term)*
//! term    := coeff? '|' label '>'
//! coeff   := factor (('*' | '/')? factor)*
//! factor  := number 'i'? | 'i' | 'sqrt' '(' number ')' | '(' scalar ')'
//! scalar  := sign? coeff (sign coeff)*        (no parentheses inside)
//! label   := four characters from {0,1}
//! ```
//!
//! Numbers are decimal literals with optional fraction and exponent
//! (`2`, `0.5`, `1e-7`). Juxtaposed factors multiply, so `2sqrt(2)|0000>`
//! and `1/sqrt(6)|0011>` are both accepted. Repeated labels accumulate.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::state::{index_label, label_index, PureState4};

/// A parsed ket sum before it is collapsed into an amplitude vector.
#[derive(Debug, Clone, PartialEq)]
pub struct KetExpression {
    pub terms: Vec<(Complex64, String)>,
}

impl KetExpression {
    pub fn parse(text: &str) -> Result<Self> {
        let mut p = Parser::new(text);
        let terms = p.expression()?;
        Ok(Self { terms })
    }

    pub fn to_state(&self) -> Result<PureState4> {
        PureState4::from_terms(self.terms.iter().map(|(c, l)| (*c, l.as_str())))
    }
}

pub fn parse_ket(text: &str) -> Result<PureState4> {
    KetExpression::parse(text)?.to_state()
}

/// Parses a bare complex scalar such as `1+2i`, `-0.5i` or `1/sqrt(3)`.
pub fn parse_complex(text: &str) -> Result<Complex64> {
    let mut p = Parser::new(text);
    let value = p.scalar(true)?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(value)
}

/// Formats a state as a ket sum that [`parse_ket`] reads back exactly.
///
/// Non-zero amplitude components round-trip bit for bit; the sign of a
/// zero component is not preserved. Non-finite amplitudes are not
/// representable.
pub fn format_ket(state: &PureState4) -> String {
    let mut out = String::new();
    for (idx, a) in state.amplitudes().iter().enumerate() {
        if *a == Complex64::new(0.0, 0.0) {
            continue;
        }
        let label = index_label(idx);
        let (negative, body) = if a.im == 0.0 {
            (a.re < 0.0, real_coeff(a.re.abs()))
        } else if a.re == 0.0 {
            (a.im < 0.0, format!("{:?}i", a.im.abs()))
        } else {
            let sign = if a.im < 0.0 { '-' } else { '+' };
            (false, format!("({:?}{sign}{:?}i)", a.re, a.im.abs()))
        };
        match (out.is_empty(), negative) {
            (true, false) => {}
            (true, true) => out.push('-'),
            (false, false) => out.push_str(" + "),
            (false, true) => out.push_str(" - "),
        }
        out.push_str(&body);
        out.push('|');
        out.push_str(&label);
        out.push('>');
    }
    if out.is_empty() {
        out.push_str("0|0000>");
    }
    out
}

fn real_coeff(x: f64) -> String {
    if x == 1.0 {
        String::new()
    } else {
        format!("{x:?}")
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Self { src, pos: 0 }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek_token(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek()
    }

    fn bump(&mut self) {
        if let Some(c) = self.peek() {
            self.pos += c.len_utf8();
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek_token() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn sign(&mut self) -> Option<f64> {
        match self.peek_token() {
            Some('+') => {
                self.bump();
                Some(1.0)
            }
            Some('-') => {
                self.bump();
                Some(-1.0)
            }
            _ => None,
        }
    }

    fn expression(&mut self) -> Result<Vec<(Complex64, String)>> {
        let mut terms = Vec::new();
        let mut sign = self.sign().unwrap_or(1.0);
        loop {
            let (coeff, label) = self.term()?;
            terms.push((coeff * sign, label));
            match self.peek_token() {
                None => return Ok(terms),
                Some('+') | Some('-') => sign = self.sign().expect("sign token"),
                Some(_) => return Err(self.error("expected '+', '-' or end of input")),
            }
        }
    }

    fn term(&mut self) -> Result<(Complex64, String)> {
        let coeff = match self.peek_token() {
            Some('|') => Complex64::new(1.0, 0.0),
            Some(_) => self.product(true)?,
            None => return Err(self.error("expected a term")),
        };
        if !self.eat('|') {
            return Err(self.error("expected '|' opening a basis ket"));
        }
        let start = self.pos;
        let close = self
            .rest()
            .find(['>', '⟩'])
            .ok_or_else(|| self.error("unterminated ket, expected '>'"))?;
        let label = self.src[start..start + close].trim();
        if label_index(label).is_none() {
            return Err(Error::BasisLabel {
                label: label.to_string(),
                position: start,
            });
        }
        self.pos = start + close;
        self.bump();
        Ok((coeff, label.to_string()))
    }

    /// `sign? coeff (sign coeff)*`; only valid inside parentheses or as a
    /// standalone scalar.
    fn scalar(&mut self, allow_parens: bool) -> Result<Complex64> {
        let mut total = Complex64::new(0.0, 0.0);
        let mut sign = self.sign().unwrap_or(1.0);
        loop {
            total += self.product(allow_parens)? * sign;
            match self.sign() {
                Some(s) => sign = s,
                None => return Ok(total),
            }
        }
    }

    fn product(&mut self, allow_parens: bool) -> Result<Complex64> {
        let mut value = self.factor(allow_parens)?;
        loop {
            match self.peek_token() {
                Some('*') => {
                    self.bump();
                    value *= self.factor(allow_parens)?;
                }
                Some('/') => {
                    self.bump();
                    let at = self.pos;
                    let d = self.factor(allow_parens)?;
                    if d == Complex64::new(0.0, 0.0) {
                        return Err(Error::Syntax {
                            position: at,
                            message: "division by zero".into(),
                        });
                    }
                    value /= d;
                }
                Some(c) if starts_factor(c, allow_parens) || self.rest().starts_with("sqrt") => {
                    value *= self.factor(allow_parens)?;
                }
                _ => return Ok(value),
            }
        }
    }

    fn factor(&mut self, allow_parens: bool) -> Result<Complex64> {
        match self.peek_token() {
            Some('(') if allow_parens => {
                self.bump();
                let v = self.scalar(false)?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(v)
            }
            Some('(') => Err(self.error("nested parentheses are not supported")),
            Some('i') => {
                self.bump();
                Ok(Complex64::new(0.0, 1.0))
            }
            Some('s') if self.rest().starts_with("sqrt") => {
                self.pos += 4;
                if !self.eat('(') {
                    return Err(self.error("expected '(' after sqrt"));
                }
                self.skip_ws();
                let at = self.pos;
                let n = self.number()?;
                if n < 0.0 {
                    return Err(Error::Syntax {
                        position: at,
                        message: "sqrt of a negative number".into(),
                    });
                }
                if !self.eat(')') {
                    return Err(self.error("expected ')' closing sqrt"));
                }
                Ok(Complex64::new(n.sqrt(), 0.0))
            }
            Some(c) if c.is_ascii_digit() || c == '.' => {
                let n = self.number()?;
                if self.peek() == Some('i') {
                    self.bump();
                    Ok(Complex64::new(0.0, n))
                } else {
                    Ok(Complex64::new(n, 0.0))
                }
            }
            Some(_) => Err(self.error("expected a number, 'i', 'sqrt(...)' or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn number(&mut self) -> Result<f64> {
        let bytes = self.rest().as_bytes();
        let mut len = 0;
        let digits = |from: usize| {
            bytes[from..]
                .iter()
                .take_while(|b| b.is_ascii_digit())
                .count()
        };
        len += digits(len);
        if bytes.get(len) == Some(&b'.') {
            len += 1;
            len += digits(len);
        }
        if len == 0 || (len == 1 && bytes[0] == b'.') {
            return Err(self.error("expected a number"));
        }
        if matches!(bytes.get(len), Some(b'e') | Some(b'E')) {
            let mut exp = len + 1;
            if matches!(bytes.get(exp), Some(b'+') | Some(b'-')) {
                exp += 1;
            }
            let d = digits(exp);
            if d == 0 {
                self.pos += len;
                return Err(self.error("malformed exponent"));
            }
            len = exp + d;
        }
        let lexeme = &self.rest()[..len];
        let value = lexeme
            .parse::<f64>()
            .map_err(|_| self.error(format!("invalid number `{lexeme}`")))?;
        self.pos += len;
        Ok(value)
    }
}

fn starts_factor(c: char, allow_parens: bool) -> bool {
    c.is_ascii_digit() || c == '.' || c == 'i' || (allow_parens && c == '(')
}
