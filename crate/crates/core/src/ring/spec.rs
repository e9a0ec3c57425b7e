//! Textual ring descriptions.
//!
//! A ring is written as a product of factors separated by `*` (or `×`):
//!
//! ```text
//! spec   := factor { ("*" | "×") factor }
//! factor := "Z" nat | "GF(" nat ")" | "Z" nat "[x]/(" poly ")"
//! poly   := term { "+" term }
//! term   := [coef] ["x" ["^" nat]]
//! ```
//!
//! Whitespace between tokens is ignored. The letter `x` is reserved for the
//! polynomial variable and is never accepted as a product separator.

use std::fmt;

use super::gf;

/// Largest exponent accepted in a polynomial term.
const MAX_EXPONENT: u64 = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpecError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("modulus {modulus} at position {position} must be at least 2")]
    ModulusTooSmall { position: usize, modulus: u64 },
    #[error("polynomial at position {position} is not monic of degree >= 1 after reduction mod {modulus}")]
    NonMonic { position: usize, modulus: u64 },
    #[error("GF({order}) at position {position}: order must be a prime power")]
    NotPrimePower { position: usize, order: u64 },
    #[error("GF({order}) at position {position}: no defining polynomial tabulated (orders up to 64 are supported)")]
    UnsupportedField { position: usize, order: u64 },
}

/// One factor `Z_n[x]/(f)`, or plain `Z_n` when `poly` is empty.
///
/// `poly` holds coefficients from the constant term upwards; when present it
/// is monic of degree at least 1 with every coefficient reduced mod `modulus`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FactorSpec {
    pub modulus: u64,
    pub poly: Vec<u64>,
}

impl FactorSpec {
    pub fn integers(modulus: u64) -> Self {
        FactorSpec {
            modulus,
            poly: Vec::new(),
        }
    }

    /// Number of coefficients in an element of this factor.
    pub fn degree(&self) -> usize {
        if self.poly.is_empty() {
            1
        } else {
            self.poly.len() - 1
        }
    }

    /// `modulus ^ degree`, or `None` on overflow.
    pub fn size(&self) -> Option<u64> {
        self.modulus.checked_pow(self.degree() as u32)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingSpec {
    pub factors: Vec<FactorSpec>,
}

impl RingSpec {
    pub fn parse(text: &str) -> Result<Self, SpecError> {
        parse_ring_spec(text)
    }

    /// Product of the factor sizes, or `None` on overflow.
    pub fn size(&self) -> Option<u64> {
        self.factors
            .iter()
            .try_fold(1u64, |acc, f| acc.checked_mul(f.size()?))
    }
}

impl std::str::FromStr for RingSpec {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_ring_spec(s)
    }
}

impl fmt::Display for FactorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_empty() {
            return write!(f, "Z{}", self.modulus);
        }
        if let Some(order) = gf::field_order_for(self.modulus, &self.poly) {
            return write!(f, "GF({order})");
        }
        write!(f, "Z{}[x]/({})", self.modulus, format_poly(&self.poly))
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

/// Formats a coefficient vector (constant term first) highest power first,
/// e.g. `[1, 0, 1]` as `x^2+1`.
pub fn format_poly(coeffs: &[u64]) -> String {
    let mut out = String::new();
    for (power, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push('+');
        }
        match (power, c) {
            (0, c) => out.push_str(&c.to_string()),
            (1, 1) => out.push('x'),
            (1, c) => out.push_str(&format!("{c}x")),
            (p, 1) => out.push_str(&format!("x^{p}")),
            (p, c) => out.push_str(&format!("{c}x^{p}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn parse_ring_spec(text: &str) -> Result<RingSpec, SpecError> {
    let mut parser = Parser::new(text);
    let mut factors = vec![parser.factor()?];
    loop {
        parser.skip_ws();
        match parser.peek() {
            None => break,
            Some('*') | Some('×') => {
                parser.bump();
                factors.push(parser.factor()?);
            }
            Some(c) => {
                return Err(
                    parser.syntax(format!("expected '*' or '×' between factors, found '{c}'"))
                )
            }
        }
    }
    Ok(RingSpec { factors })
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Self {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn syntax(&self, message: impl Into<String>) -> SpecError {
        SpecError::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn describe_next(&self) -> String {
        match self.peek() {
            Some(c) => format!("'{c}'"),
            None => "end of input".to_string(),
        }
    }

    fn expect(&mut self, want: char) -> Result<(), SpecError> {
        self.skip_ws();
        if self.peek() == Some(want) {
            self.bump();
            Ok(())
        } else {
            Err(self.syntax(format!("expected '{want}', found {}", self.describe_next())))
        }
    }

    fn expect_word(&mut self, word: &str) -> Result<(), SpecError> {
        for c in word.chars() {
            self.expect(c)?;
        }
        Ok(())
    }

    fn at_digit(&mut self) -> bool {
        self.skip_ws();
        self.peek().is_some_and(|c| c.is_ascii_digit())
    }

    fn nat(&mut self) -> Result<u64, SpecError> {
        self.skip_ws();
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(u64::from(d)))
                .ok_or_else(|| SpecError::Syntax {
                    position: start,
                    message: "number too large".to_string(),
                })?;
            self.bump();
        }
        if self.pos == start {
            return Err(self.syntax(format!("expected a number, found {}", self.describe_next())));
        }
        Ok(value)
    }

    fn factor(&mut self) -> Result<FactorSpec, SpecError> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some('Z') => {
                self.bump();
                let modulus = self.nat()?;
                if modulus < 2 {
                    return Err(SpecError::ModulusTooSmall {
                        position: start,
                        modulus,
                    });
                }
                self.skip_ws();
                if self.peek() != Some('[') {
                    return Ok(FactorSpec::integers(modulus));
                }
                self.expect_word("[x]/(")?;
                let poly_start = {
                    self.skip_ws();
                    self.pos
                };
                let raw = self.poly(modulus)?;
                self.expect(')')?;
                let poly = normalize_monic(raw, modulus).ok_or(SpecError::NonMonic {
                    position: poly_start,
                    modulus,
                })?;
                Ok(FactorSpec { modulus, poly })
            }
            Some('G') => {
                self.expect_word("GF(")?;
                let order = self.nat()?;
                self.expect(')')?;
                let (p, k) = gf::prime_power(order).ok_or(SpecError::NotPrimePower {
                    position: start,
                    order,
                })?;
                if k == 1 {
                    return Ok(FactorSpec::integers(p));
                }
                let poly = gf::defining_polynomial(p, k)
                    .ok_or(SpecError::UnsupportedField {
                        position: start,
                        order,
                    })?
                    .to_vec();
                Ok(FactorSpec { modulus: p, poly })
            }
            _ => Err(self.syntax(format!(
                "expected a factor ('Z' or 'GF('), found {}",
                self.describe_next()
            ))),
        }
    }

    /// Parses `term { "+" term }` and returns the coefficient vector reduced mod `modulus`.
    fn poly(&mut self, modulus: u64) -> Result<Vec<u64>, SpecError> {
        let mut coeffs: Vec<u64> = Vec::new();
        loop {
            let (coef, power) = self.term()?;
            let power = power as usize;
            if coeffs.len() <= power {
                coeffs.resize(power + 1, 0);
            }
            coeffs[power] = (coeffs[power] + coef % modulus) % modulus;
            self.skip_ws();
            if self.peek() == Some('+') {
                self.bump();
            } else {
                return Ok(coeffs);
            }
        }
    }

    fn term(&mut self) -> Result<(u64, u64), SpecError> {
        let coef = if self.at_digit() {
            Some(self.nat()?)
        } else {
            None
        };
        self.skip_ws();
        if self.peek() != Some('x') {
            return match coef {
                Some(c) => Ok((c, 0)),
                None => Err(self.syntax(format!(
                    "expected a polynomial term, found {}",
                    self.describe_next()
                ))),
            };
        }
        self.bump();
        self.skip_ws();
        let power = if self.peek() == Some('^') {
            self.bump();
            let at = self.pos;
            let p = self.nat()?;
            if p > MAX_EXPONENT {
                return Err(SpecError::Syntax {
                    position: at,
                    message: format!("exponent {p} exceeds {MAX_EXPONENT}"),
                });
            }
            p
        } else {
            1
        };
        Ok((coef.unwrap_or(1), power))
    }
}

/// Trims zero high coefficients; `None` unless the result is monic of degree >= 1.
fn normalize_monic(mut coeffs: Vec<u64>, modulus: u64) -> Option<Vec<u64>> {
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    if coeffs.len() < 2 || coeffs.last() != Some(&(1 % modulus)) {
        return None;
    }
    Some(coeffs)
}
