//! The repetition-notation template language for digit strings.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! pattern := '[' seq ']' '@' nat
//! seq     := item ('.' item)*
//! item    := nat | ident | '(' seq ')' '^' exp
//! exp     := nat | ident
//! ```
//!
//! A `nat` in item position is a literal digit, an `ident` is a digit
//! variable (bound through a separate digit-binding map), and `(seq)^exp`
//! repeats a block. `[1.(0)^k.8]@10` with `k = 1` expands to `1.0.8`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::radix::{DigitString, MAX_BASE, MIN_BASE};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("digit {digit} at byte {position} is not a base-{base} digit")]
    DigitTooLarge {
        position: usize,
        digit: u64,
        base: u32,
    },

    #[error("base {0} is out of range (want 2..=65536)")]
    BadBase(u64),

    #[error("identifier `{0}` is used both as a digit and as an exponent")]
    RoleConflict(String),

    #[error("exponent variable `{0}` is unbound")]
    UnboundExponent(String),

    #[error("digit variable `{0}` is unbound")]
    UnboundDigit(String),

    #[error("digit binding {name} = {value} is not a base-{base} digit")]
    DigitBindingTooLarge { name: String, value: u32, base: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Exponent {
    Const(u64),
    Var(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Item {
    /// A literal digit.
    Digit(u32),
    /// A digit bound by name at expansion time (the `a` of `[a.(0)^k.a]@10`).
    DigitVar(String),
    /// A block repeated `exponent` times.
    Group(Vec<Item>, Exponent),
}

/// Variable assignments for [`PatternTemplate::expand`]. Exponent and digit
/// variables live in separate namespaces which must not overlap.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Bindings {
    pub exponents: BTreeMap<String, u64>,
    pub digits: BTreeMap<String, u32>,
}

impl Bindings {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn exponent(mut self, name: &str, value: u64) -> Self {
        self.exponents.insert(name.to_owned(), value);
        self
    }

    pub fn digit(mut self, name: &str, value: u32) -> Self {
        self.digits.insert(name.to_owned(), value);
        self
    }
}

/// A parsed repetition-notation template. Immutable after parse; expansion
/// binds variables and yields a flat [`DigitString`] (possibly with leading
/// zeros, canonicalized on numeric use).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternTemplate {
    base: u32,
    items: Vec<Item>,
}

impl PatternTemplate {
    pub fn parse(text: &str) -> Result<Self, PatternError> {
        Parser::new(text).pattern()
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn items(&self) -> &[Item] {
        &self.items
    }

    /// Expand with every variable bound. Bound exponents may be zero; a zero
    /// exponent contributes nothing (legal inside a larger pattern, and the
    /// resulting string errors only if interpreted numerically while empty).
    pub fn expand(&self, bindings: &Bindings) -> Result<DigitString, PatternError> {
        let mut digits = Vec::new();
        expand_items(&self.items, self.base, bindings, &mut digits)?;
        Ok(DigitString::new(self.base, digits).expect("expansion digits validated against base"))
    }
}

fn expand_items(
    items: &[Item],
    base: u32,
    bindings: &Bindings,
    out: &mut Vec<u32>,
) -> Result<(), PatternError> {
    for item in items {
        match item {
            Item::Digit(d) => out.push(*d),
            Item::DigitVar(name) => {
                let value = *bindings
                    .digits
                    .get(name)
                    .ok_or_else(|| PatternError::UnboundDigit(name.clone()))?;
                if value >= base {
                    return Err(PatternError::DigitBindingTooLarge {
                        name: name.clone(),
                        value,
                        base,
                    });
                }
                out.push(value);
            }
            Item::Group(inner, exponent) => {
                let count = match exponent {
                    Exponent::Const(k) => *k,
                    Exponent::Var(name) => *bindings
                        .exponents
                        .get(name)
                        .ok_or_else(|| PatternError::UnboundExponent(name.clone()))?,
                };
                let mut block = Vec::new();
                expand_items(inner, base, bindings, &mut block)?;
                for _ in 0..count {
                    out.extend_from_slice(&block);
                }
            }
        }
    }
    Ok(())
}

impl fmt::Display for PatternTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        write_seq(f, &self.items)?;
        write!(f, "]@{}", self.base)
    }
}

fn write_seq(f: &mut fmt::Formatter<'_>, items: &[Item]) -> fmt::Result {
    for (i, item) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(".")?;
        }
        match item {
            Item::Digit(d) => write!(f, "{d}")?,
            Item::DigitVar(name) => f.write_str(name)?,
            Item::Group(inner, exponent) => {
                f.write_str("(")?;
                write_seq(f, inner)?;
                f.write_str(")^")?;
                match exponent {
                    Exponent::Const(k) => write!(f, "{k}")?,
                    Exponent::Var(name) => f.write_str(name)?,
                }
            }
        }
    }
    Ok(())
}

impl FromStr for PatternTemplate {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, PatternError> {
        PatternTemplate::parse(s)
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    // literal digits are range-checked once the trailing base is known
    pending_digits: Vec<(u64, usize)>,
    digit_vars: BTreeSet<String>,
    exponent_vars: BTreeSet<String>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
            pending_digits: Vec::new(),
            digit_vars: BTreeSet::new(),
            exponent_vars: BTreeSet::new(),
        }
    }

    fn pattern(mut self) -> Result<PatternTemplate, PatternError> {
        self.expect(b'[')?;
        let items = self.seq()?;
        self.expect(b']')?;
        self.expect(b'@')?;
        let (base, _) = self.nat()?;
        self.skip_ws();
        if self.pos != self.bytes.len() {
            return Err(self.syntax("trailing input after pattern"));
        }
        if base < u64::from(MIN_BASE) || base > u64::from(MAX_BASE) {
            return Err(PatternError::BadBase(base));
        }
        let base = base as u32;
        for &(digit, position) in &self.pending_digits {
            if digit >= u64::from(base) {
                return Err(PatternError::DigitTooLarge {
                    position,
                    digit,
                    base,
                });
            }
        }
        if let Some(name) = self.digit_vars.intersection(&self.exponent_vars).next() {
            return Err(PatternError::RoleConflict(name.clone()));
        }
        Ok(PatternTemplate { base, items })
    }

    fn seq(&mut self) -> Result<Vec<Item>, PatternError> {
        let mut items = vec![self.item()?];
        loop {
            self.skip_ws();
            if self.peek() == Some(b'.') {
                self.pos += 1;
                items.push(self.item()?);
            } else {
                return Ok(items);
            }
        }
    }

    fn item(&mut self) -> Result<Item, PatternError> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.seq()?;
                self.expect(b')')?;
                self.expect(b'^')?;
                let exponent = self.exponent()?;
                Ok(Item::Group(inner, exponent))
            }
            Some(c) if c.is_ascii_digit() => {
                let (digit, position) = self.nat()?;
                self.pending_digits.push((digit, position));
                // MAX_BASE fits u32, and the base check above caps digits
                Ok(Item::Digit(digit.min(u64::from(MAX_BASE)) as u32))
            }
            Some(c) if c.is_ascii_lowercase() => {
                let name = self.ident()?;
                self.digit_vars.insert(name.clone());
                Ok(Item::DigitVar(name))
            }
            _ => Err(self.syntax("expected digit, identifier or '('")),
        }
    }

    fn exponent(&mut self) -> Result<Exponent, PatternError> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(Exponent::Const(self.nat()?.0)),
            Some(c) if c.is_ascii_lowercase() => {
                let name = self.ident()?;
                self.exponent_vars.insert(name.clone());
                Ok(Exponent::Var(name))
            }
            _ => Err(self.syntax("expected exponent (number or identifier)")),
        }
    }

    fn nat(&mut self) -> Result<(u64, usize), PatternError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("expected a number"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        let value = text.parse().map_err(|_| PatternError::Syntax {
            position: start,
            message: format!("number {text} overflows"),
        })?;
        Ok((value, start))
    }

    fn ident(&mut self) -> Result<String, PatternError> {
        self.skip_ws();
        let start = self.pos;
        if !self.peek().is_some_and(|c| c.is_ascii_lowercase()) {
            return Err(self.syntax("expected an identifier"));
        }
        self.pos += 1;
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_lowercase() || c.is_ascii_digit())
        {
            self.pos += 1;
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("ascii identifier")
            .to_owned())
    }

    fn expect(&mut self, wanted: u8) -> Result<(), PatternError> {
        self.skip_ws();
        if self.peek() == Some(wanted) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.syntax(&format!("expected '{}'", wanted as char)))
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn syntax(&self, message: &str) -> PatternError {
        PatternError::Syntax {
            position: self.pos,
            message: message.to_owned(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radix;
    use num_bigint::BigUint;
    use proptest::prelude::*;

    #[test]
    fn parses_exponent_variable() {
        let t = PatternTemplate::parse("[1.(0)^k.8]@10").unwrap();
        assert_eq!(t.base(), 10);
        assert_eq!(
            t.items(),
            &[
                Item::Digit(1),
                Item::Group(vec![Item::Digit(0)], Exponent::Var("k".into())),
                Item::Digit(8),
            ]
        );
    }

    #[test]
    fn parses_group_block() {
        let t = PatternTemplate::parse("[(1.2)^k]@10").unwrap();
        assert_eq!(
            t.items(),
            &[Item::Group(
                vec![Item::Digit(1), Item::Digit(2)],
                Exponent::Var("k".into())
            )]
        );
    }

    #[test]
    fn rejects_digit_at_or_above_base() {
        assert_eq!(
            PatternTemplate::parse("[7]@5").unwrap_err(),
            PatternError::DigitTooLarge {
                position: 1,
                digit: 7,
                base: 5
            }
        );
    }

    #[test]
    fn rejects_role_conflict() {
        assert_eq!(
            PatternTemplate::parse("[a.(0)^a]@10").unwrap_err(),
            PatternError::RoleConflict("a".into())
        );
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = PatternTemplate::parse("[1.]@10").unwrap_err();
        assert!(matches!(err, PatternError::Syntax { position: 3, .. }), "{err}");
    }

    #[test]
    fn expansion_examples() {
        let t = PatternTemplate::parse("[1.(0)^k.8]@10").unwrap();
        let d = t.expand(&Bindings::new().exponent("k", 1)).unwrap();
        assert_eq!(d.digits(), &[1, 0, 8]);
        assert_eq!(d.value().unwrap(), BigUint::from(108u32));

        let t = PatternTemplate::parse("[(1.2)^k]@10").unwrap();
        let d = t.expand(&Bindings::new().exponent("k", 3)).unwrap();
        assert_eq!(d.value().unwrap(), BigUint::from(121212u32));

        let t = PatternTemplate::parse("[a.(0)^k.a]@10").unwrap();
        let d = t
            .expand(&Bindings::new().exponent("k", 2).digit("a", 3))
            .unwrap();
        assert_eq!(d.digits(), &[3, 0, 0, 3]);
    }

    #[test]
    fn expansion_errors() {
        let t = PatternTemplate::parse("[(1)^k]@10").unwrap();
        assert_eq!(
            t.expand(&Bindings::new()).unwrap_err(),
            PatternError::UnboundExponent("k".into())
        );
        let t = PatternTemplate::parse("[a]@10").unwrap();
        assert_eq!(
            t.expand(&Bindings::new()).unwrap_err(),
            PatternError::UnboundDigit("a".into())
        );
        assert_eq!(
            t.expand(&Bindings::new().digit("a", 12)).unwrap_err(),
            PatternError::DigitBindingTooLarge {
                name: "a".into(),
                value: 12,
                base: 10
            }
        );
        // exponent zero is legal; only numeric use of the empty result errors
        let t = PatternTemplate::parse("[(9)^0]@10").unwrap();
        let empty = t.expand(&Bindings::new()).unwrap();
        assert!(empty.is_empty());
        assert!(empty.value().is_err());
    }

    #[test]
    fn whitespace_is_insignificant() {
        let spaced = PatternTemplate::parse(" [ 1 . ( 0 ) ^ 3 . 8 ] @ 10 ").unwrap();
        let tight = PatternTemplate::parse("[1.(0)^3.8]@10").unwrap();
        assert_eq!(spaced, tight);
    }

    // strategy for structurally valid templates, used by the round-trip law
    fn arb_item(depth: u32) -> BoxedStrategy<Item> {
        let leaf = prop_oneof![
            (0u32..10).prop_map(Item::Digit),
            "[a-z][a-z0-9]{0,3}".prop_map(Item::DigitVar),
        ];
        if depth == 0 {
            return leaf.boxed();
        }
        let exponent = prop_oneof![
            (0u64..50).prop_map(Exponent::Const),
            // distinct alphabet from digit vars, so roles cannot collide
            "[q-z][0-9]{0,2}".prop_map(Exponent::Var),
        ];
        prop_oneof![
            leaf,
            (
                prop::collection::vec(arb_item(depth - 1), 1..4),
                exponent
            )
                .prop_map(|(items, e)| Item::Group(items, e)),
        ]
        .boxed()
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(
            items in prop::collection::vec(arb_item(2), 1..5),
        ) {
            // digit vars from [a-z]* may collide with exponent vars from
            // [q-z]*; skip those rare cases rather than constrain the render
            let t = PatternTemplate { base: 10, items };
            let rendered = t.to_string();
            match PatternTemplate::parse(&rendered) {
                Ok(parsed) => prop_assert_eq!(parsed, t),
                Err(PatternError::RoleConflict(_)) => {}
                Err(other) => return Err(TestCaseError::fail(other.to_string())),
            }
        }

        #[test]
        fn group_length_law(block in prop::collection::vec(0u32..10, 1..6), k in 0u64..40) {
            let t = PatternTemplate {
                base: 10,
                items: vec![Item::Group(
                    block.iter().copied().map(Item::Digit).collect(),
                    Exponent::Const(k),
                )],
            };
            let expanded = t.expand(&Bindings::new()).unwrap();
            prop_assert_eq!(expanded.len() as u64, k * block.len() as u64);
        }

        #[test]
        fn bracket_value_law(
            x in 1u64..1_000_000,
            y in 1u64..1_000_000,
            ell in 0u64..12,
            base in 2u32..=16,
        ) {
            // value of [x.(0)^ell.y] must match the concat homomorphism
            let bx = radix::from_natural(&BigUint::from(x), base).unwrap();
            let by = radix::from_natural(&BigUint::from(y), base).unwrap();
            let mut items: Vec<Item> =
                bx.digits().iter().map(|&d| Item::Digit(d)).collect();
            items.push(Item::Group(vec![Item::Digit(0)], Exponent::Const(ell)));
            items.extend(by.digits().iter().map(|&d| Item::Digit(d)));
            let t = PatternTemplate { base, items };
            let expanded = t.expand(&Bindings::new()).unwrap();
            let expected = BigUint::from(x)
                * BigUint::from(base).pow((ell + by.len() as u64) as u32)
                + BigUint::from(y);
            prop_assert_eq!(expanded.value().unwrap(), expected);
        }
    }
}
