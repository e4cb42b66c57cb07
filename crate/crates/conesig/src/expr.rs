//! Text form of cones.
//!
//! The grammar, shared by the command line tool and the report formats:
//!
//! ```text
//! expr   := term ("+" term)*
//! term   := [count "*"] factor
//! factor := "L" int | "R" int | "H" int "(" ("R"|"C"|"H"|"O") ")"
//! ```
//!
//! `L n` is the n-dimensional Lorentz cone, `R n` the n-dimensional orthant,
//! and `H n (F)` the cone of positive semidefinite Hermitian n x n matrices
//! over F. Whitespace is insignificant and letters are case-insensitive.
//! Parsing accepts the whole grammar, including degenerate sizes such as
//! "L2" or "H1(H)"; the result is canonicalized, so `parse_cone("L2")`
//! equals `parse_cone("R2")`. Anything outside the grammar is a parse error
//! carrying the byte position of the offending input.

use thiserror::Error;

use crate::cone::{Cone, ConeError, Factor, FactorKind};

/// Hard cap on how many factors an expression may expand to, guarding
/// against pathological inputs like "4000000000*L3" or "R4000000000".
pub const MAX_EXPANDED_FACTORS: usize = 1_000_000;

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum ExprError {
    #[error("parse error at byte {pos}: {message}")]
    Parse { pos: usize, message: String },
    #[error("expression expands to more than {MAX_EXPANDED_FACTORS} factors")]
    TooManyFactors,
    #[error(transparent)]
    Cone(#[from] ConeError),
}

/// Parses an expression and returns the canonical cone it denotes.
pub fn parse_cone(s: &str) -> Result<Cone, ExprError> {
    let mut scanner = Scanner { bytes: s.as_bytes(), pos: 0 };
    let mut raw: Vec<Factor> = Vec::new();
    loop {
        parse_term(&mut scanner, &mut raw)?;
        scanner.skip_ws();
        if scanner.at_end() {
            break;
        }
        scanner.expect(b'+', "expected '+' between terms")?;
    }
    Ok(Cone::canonicalize(raw)?)
}

impl std::str::FromStr for Cone {
    type Err = ExprError;

    fn from_str(s: &str) -> Result<Cone, ExprError> {
        parse_cone(s)
    }
}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Scanner<'_> {
    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.bytes.len()
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn error<T>(&self, message: &str) -> Result<T, ExprError> {
        Err(ExprError::Parse { pos: self.pos, message: message.to_string() })
    }

    fn expect(&mut self, byte: u8, message: &str) -> Result<(), ExprError> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            self.error(message)
        }
    }

    fn parse_u32(&mut self) -> Result<u32, ExprError> {
        self.skip_ws();
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(b) = self.peek().filter(u8::is_ascii_digit) {
            value = value * 10 + u64::from(b - b'0');
            if value > u64::from(u32::MAX) {
                return Err(ExprError::Parse {
                    pos: start,
                    message: "number too large".to_string(),
                });
            }
            self.pos += 1;
        }
        if self.pos == start {
            return self.error("expected a number");
        }
        Ok(value as u32)
    }
}

fn parse_term(scanner: &mut Scanner, raw: &mut Vec<Factor>) -> Result<(), ExprError> {
    scanner.skip_ws();
    let count = if scanner.peek().is_some_and(|b| b.is_ascii_digit()) {
        let count = scanner.parse_u32()?;
        scanner.skip_ws();
        scanner.expect(b'*', "expected '*' after repetition count")?;
        scanner.skip_ws();
        count
    } else {
        1
    };
    let Some(letter) = scanner.peek() else {
        return scanner.error("expected a factor (L, R, or H)");
    };
    scanner.pos += 1;
    match letter.to_ascii_uppercase() {
        b'L' => {
            let n = scanner.parse_u32()?;
            push_repeated(raw, Factor::lorentz(n), count)
        }
        b'R' => {
            let n = scanner.parse_u32()?;
            let rays = u64::from(count) * u64::from(n);
            if rays > MAX_EXPANDED_FACTORS as u64 {
                return Err(ExprError::TooManyFactors);
            }
            push_repeated(raw, Factor::lorentz(1), rays as u32)
        }
        b'H' => {
            let n = scanner.parse_u32()?;
            scanner.skip_ws();
            scanner.expect(b'(', "expected '(' after matrix size")?;
            scanner.skip_ws();
            let Some(field) = scanner.peek() else {
                return scanner.error("expected a field letter (R, C, H, or O)");
            };
            let kind = match field.to_ascii_uppercase() {
                b'R' => FactorKind::RealPsd,
                b'C' => FactorKind::ComplexPsd,
                b'H' => FactorKind::QuaternionPsd,
                b'O' => FactorKind::OctonionPsd,
                _ => return scanner.error("expected a field letter (R, C, H, or O)"),
            };
            scanner.pos += 1;
            scanner.skip_ws();
            scanner.expect(b')', "expected ')' after field letter")?;
            push_repeated(raw, Factor::new(kind, n), count)
        }
        _ => {
            scanner.pos -= 1;
            scanner.error("expected a factor (L, R, or H)")
        }
    }
}

fn push_repeated(raw: &mut Vec<Factor>, factor: Factor, count: u32) -> Result<(), ExprError> {
    let new_len = raw.len() as u64 + u64::from(count);
    if new_len > MAX_EXPANDED_FACTORS as u64 {
        return Err(ExprError::TooManyFactors);
    }
    raw.extend(std::iter::repeat_n(factor, count as usize));
    Ok(())
}
