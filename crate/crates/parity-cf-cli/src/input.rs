//! Parsing of the number argument accepted by every subcommand.
//!
//! Two shapes are understood:
//!
//! - an exact quadratic expression over the integers, such as `sqrt(2)`,
//!   `-1+sqrt(2)`, `(1+sqrt(5))/2`, `2*sqrt(3)/7` or `-5/3`;
//! - a decimal literal such as `0.4142135623`, treated as a verified digit
//!   prefix of an otherwise unknown number.
//!
//! Errors report the byte offset of the offending character.

use num::{BigInt, BigRational, One, Zero};
use parity_cf::{Error, QuadraticSurd};

/// A parsed number argument.
#[derive(Debug, Clone)]
pub enum NumberInput {
    /// An exact quadratic expression (possibly rational; rational values
    /// are rejected later by the routes that need an infinite expansion).
    Exact(QuadraticSurd),
    /// A decimal literal, kept verbatim.
    Decimal(String),
}

impl NumberInput {
    /// A rational close to the number, for plotting and labels.
    pub fn position_hint(&self) -> BigRational {
        match self {
            NumberInput::Exact(x) => decimal_to_rational(&x.to_decimal(24)),
            NumberInput::Decimal(s) => decimal_to_rational(s),
        }
    }
}

/// Parse a command-line number argument.
pub fn parse_number(s: &str) -> Result<NumberInput, Error> {
    if !s.contains("sqrt") && s.contains('.') {
        parse_decimal(s)
    } else {
        parse_quadratic(s)
    }
}

/// Turn a plain decimal literal into the rational it denotes exactly.
/// The input must already be validated.
fn decimal_to_rational(s: &str) -> BigRational {
    let (sign, digits) = match s.strip_prefix('-') {
        Some(rest) => (-BigInt::one(), rest),
        None => (BigInt::one(), s),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    let mut numer: BigInt = if int_part.is_empty() {
        BigInt::zero()
    } else {
        int_part.parse().expect("validated digits")
    };
    let mut denom = BigInt::one();
    for d in frac_part.bytes() {
        numer = numer * 10 + BigInt::from(d - b'0');
        denom *= 10;
    }
    BigRational::new(sign * numer, denom)
}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(s: &'a str) -> Scanner<'a> {
        Scanner {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ') | Some(b'\t')) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8, what: &str) -> Result<(), Error> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected {what}")))
        }
    }

    fn eat_keyword(&mut self, kw: &str) -> bool {
        if self.bytes[self.pos..].starts_with(kw.as_bytes()) {
            self.pos += kw.len();
            true
        } else {
            false
        }
    }

    fn uint(&mut self) -> Result<BigInt, Error> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a digit"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digits form an integer"))
    }
}

/// Validate a decimal literal: optional sign, digits, '.', digits.
fn parse_decimal(s: &str) -> Result<NumberInput, Error> {
    let mut sc = Scanner::new(s);
    sc.skip_ws();
    let start = sc.pos;
    sc.eat(b'-');
    sc.uint()?;
    sc.expect(b'.', "a decimal point")?;
    sc.uint()?;
    let end = sc.pos;
    sc.skip_ws();
    if sc.peek().is_some() {
        return Err(sc.error("unexpected trailing characters"));
    }
    let literal = std::str::from_utf8(&sc.bytes[start..end]).expect("checked ascii");
    Ok(NumberInput::Decimal(literal.to_string()))
}

/// Parse `(a ± b*sqrt(d))/c` and its abbreviations.
fn parse_quadratic(s: &str) -> Result<NumberInput, Error> {
    let mut sc = Scanner::new(s);
    sc.skip_ws();
    if sc.peek().is_none() {
        return Err(sc.error("empty input"));
    }
    let parenthesized = sc.eat(b'(');
    let (a, root, parts) = parse_sum(&mut sc)?;
    if parenthesized {
        sc.skip_ws();
        sc.expect(b')', "a closing ')'")?;
    }
    sc.skip_ws();
    let mut c = BigInt::one();
    if sc.peek() == Some(b'/') {
        if !parenthesized && parts > 1 {
            return Err(
                sc.error("ambiguous denominator; parenthesize the numerator, e.g. (1+sqrt(5))/2")
            );
        }
        sc.pos += 1;
        sc.skip_ws();
        let at = sc.pos;
        c = sc.uint()?;
        if c.is_zero() {
            return Err(Error::Parse {
                position: at,
                message: "denominator must be nonzero".into(),
            });
        }
    }
    sc.skip_ws();
    if sc.peek().is_some() {
        return Err(sc.error("unexpected trailing characters"));
    }
    let x = match root {
        Some((b, d)) => QuadraticSurd::new(a, b, c, d)?,
        // No square root present: a plain rational, with a placeholder
        // radicand to keep the constructor happy.
        None => QuadraticSurd::new(a, BigInt::zero(), c, BigInt::from(2))?,
    };
    Ok(NumberInput::Exact(x))
}

/// Integer part, optional `(coefficient, radicand)` root part, and the
/// number of terms seen.
type SumParts = (BigInt, Option<(BigInt, BigInt)>, usize);

/// Parse a signed sum of at most one integer term and one `sqrt` term.
fn parse_sum(sc: &mut Scanner) -> Result<SumParts, Error> {
    let mut a = BigInt::zero();
    let mut have_int = false;
    let mut root: Option<(BigInt, BigInt)> = None;
    let mut parts = 0usize;

    sc.skip_ws();
    let mut sign = if sc.eat(b'-') {
        -BigInt::one()
    } else {
        sc.eat(b'+');
        BigInt::one()
    };

    loop {
        sc.skip_ws();
        let term_at = sc.pos;
        if sc.eat_keyword("sqrt") {
            let d = parse_radicand(sc)?;
            if root.is_some() {
                return Err(Error::Parse {
                    position: term_at,
                    message: "more than one square-root term".into(),
                });
            }
            root = Some((sign.clone(), d));
        } else if sc.peek().is_some_and(|b| b.is_ascii_digit()) {
            let n = sc.uint()?;
            sc.skip_ws();
            if sc.eat(b'*') {
                sc.skip_ws();
                let kw_at = sc.pos;
                if !sc.eat_keyword("sqrt") {
                    return Err(Error::Parse {
                        position: kw_at,
                        message: "expected sqrt(...) after '*'".into(),
                    });
                }
                let d = parse_radicand(sc)?;
                if root.is_some() {
                    return Err(Error::Parse {
                        position: term_at,
                        message: "more than one square-root term".into(),
                    });
                }
                root = Some((sign.clone() * n, d));
            } else {
                if have_int {
                    return Err(Error::Parse {
                        position: term_at,
                        message: "more than one integer term".into(),
                    });
                }
                have_int = true;
                a = sign.clone() * n;
            }
        } else {
            return Err(sc.error("expected a number or sqrt(...)"));
        }
        parts += 1;

        sc.skip_ws();
        if sc.eat(b'+') {
            sign = BigInt::one();
        } else if sc.eat(b'-') {
            sign = -BigInt::one();
        } else {
            break;
        }
    }
    Ok((a, root, parts))
}

fn parse_radicand(sc: &mut Scanner) -> Result<BigInt, Error> {
    sc.skip_ws();
    sc.expect(b'(', "'(' after sqrt")?;
    sc.skip_ws();
    let d = sc.uint()?;
    sc.skip_ws();
    sc.expect(b')', "')' closing the radicand")?;
    Ok(d)
}
