//! Exact arithmetic in BS(1,q) = Z[1/q] ⋊ Z.
//!
//! An element is a pair `(r, m)` with `r = num / q^exp` and cursor `m`.
//! The product is `(r, m)(r', m') = (r + q^m r', m + m')`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{parse_err, Error, Result};

/// The base `q` of the group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupContext {
    q: u32,
}

impl GroupContext {
    pub fn new(q: u32) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidArgument(format!("base must be at least 2, got {q}")));
        }
        Ok(GroupContext { q })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement { num: BigInt::zero(), exp: 0, cursor: 0 }
    }

    pub fn generator(&self, g: Gen) -> GroupElement {
        match g {
            Gen::A => GroupElement { num: BigInt::one(), exp: 0, cursor: 0 },
            Gen::AInv => GroupElement { num: -BigInt::one(), exp: 0, cursor: 0 },
            Gen::T => GroupElement { num: BigInt::zero(), exp: 0, cursor: 1 },
            Gen::TInv => GroupElement { num: BigInt::zero(), exp: 0, cursor: -1 },
        }
    }

    /// Generator by its textual symbol (`a`, `a^-1`, `t`, `t^-1`).
    pub fn generator_by_name(&self, sym: &str) -> Result<GroupElement> {
        let w = GeneratorWord::from_text(sym)?;
        match w.tokens() {
            [g] => Ok(self.generator(*g)),
            _ => parse_err(format!("unknown generator {sym:?}")),
        }
    }

    fn pow(&self, e: u32) -> BigInt {
        num_traits::pow(BigInt::from(self.q), e as usize)
    }

    /// Builds `num * q^(-exp)` at the given cursor; `exp` may be negative.
    pub fn element(&self, num: BigInt, exp: i64, cursor: i64) -> GroupElement {
        let (num, exp) = if exp < 0 {
            (num * self.pow((-exp) as u32), 0u32)
        } else {
            (num, exp as u32)
        };
        self.normalize(num, exp, cursor)
    }

    pub fn integer(&self, n: impl Into<BigInt>, cursor: i64) -> GroupElement {
        self.element(n.into(), 0, cursor)
    }

    fn normalize(&self, mut num: BigInt, mut exp: u32, cursor: i64) -> GroupElement {
        if num.is_zero() {
            return GroupElement { num, exp: 0, cursor };
        }
        let q = BigInt::from(self.q);
        while exp > 0 {
            let (d, r) = num.div_rem(&q);
            if !r.is_zero() {
                break;
            }
            num = d;
            exp -= 1;
        }
        GroupElement { num, exp, cursor }
    }

    pub fn multiply(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        // value = g.num q^-g.exp + h.num q^(g.cursor - h.exp)
        let e1 = g.exp as i64;
        let e2 = h.exp as i64 - g.cursor;
        let big_e = e1.max(e2).max(0);
        let a = &g.num * self.pow((big_e - e1) as u32);
        let b = &h.num * self.pow((big_e - e2) as u32);
        self.normalize(a + b, big_e as u32, g.cursor + h.cursor)
    }

    pub fn inverse(&self, g: &GroupElement) -> GroupElement {
        self.element(-g.num.clone(), g.exp as i64 + g.cursor, -g.cursor)
    }

    pub fn eval_word(&self, w: &GeneratorWord) -> GroupElement {
        w.tokens()
            .iter()
            .fold(self.identity(), |acc, g| self.multiply(&acc, &self.generator(*g)))
    }

    /// `|r| <= q^e` for the value `r` of `g`, with `e` a possibly negative exponent.
    pub fn abs_le_power(&self, g: &GroupElement, e: i64) -> bool {
        // |num| / q^exp <= q^e  <=>  |num| <= q^(e + exp)
        let total = e + g.exp as i64;
        if total < 0 {
            return g.num.is_zero();
        }
        g.num.abs() <= self.pow(total as u32)
    }
}

/// Exact element `(num / q^exp, cursor)`, normalized so that `exp == 0` or `q ∤ num`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    num: BigInt,
    exp: u32,
    cursor: i64,
}

impl GroupElement {
    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn exp(&self) -> u32 {
        self.exp
    }

    pub fn cursor(&self) -> i64 {
        self.cursor
    }

    pub fn is_integer(&self) -> bool {
        self.exp == 0
    }

    pub fn is_identity(&self) -> bool {
        self.num.is_zero() && self.cursor == 0
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "({}, {})", self.num, self.cursor)
        } else {
            write!(f, "({}/q^{}, {})", self.num, self.exp, self.cursor)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    A,
    AInv,
    T,
    TInv,
}

impl Gen {
    pub const ALL: [Gen; 4] = [Gen::A, Gen::AInv, Gen::T, Gen::TInv];

    pub fn inverse(self) -> Gen {
        match self {
            Gen::A => Gen::AInv,
            Gen::AInv => Gen::A,
            Gen::T => Gen::TInv,
            Gen::TInv => Gen::T,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Gen::A => "a",
            Gen::AInv => "a^-1",
            Gen::T => "t",
            Gen::TInv => "t^-1",
        }
    }
}

/// A word over `{a, a^-1, t, t^-1}`; exponents are expanded when parsing.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorWord {
    tokens: Vec<Gen>,
}

impl GeneratorWord {
    pub fn new(tokens: Vec<Gen>) -> Self {
        GeneratorWord { tokens }
    }

    pub fn tokens(&self) -> &[Gen] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn inverse(&self) -> GeneratorWord {
        GeneratorWord { tokens: self.tokens.iter().rev().map(|g| g.inverse()).collect() }
    }

    pub fn concat(&self, other: &GeneratorWord) -> GeneratorWord {
        let mut tokens = self.tokens.clone();
        tokens.extend_from_slice(&other.tokens);
        GeneratorWord { tokens }
    }

    /// Parses tokens `a`, `t`, each with an optional `^<signed int>`, and the identity `1`.
    /// Whitespace between tokens is optional, so `tat` is accepted.
    pub fn from_text(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().collect();
        let mut i = 0;
        let mut tokens = Vec::new();
        while i < chars.len() {
            let c = chars[i];
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            let (pos, neg) = match c {
                'a' => (Gen::A, Gen::AInv),
                't' => (Gen::T, Gen::TInv),
                '1' => {
                    i += 1;
                    continue;
                }
                _ => return parse_err(format!("unexpected character {c:?} in generator word {s:?}")),
            };
            i += 1;
            let mut exp: i64 = 1;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let start = i;
                if i < chars.len() && (chars[i] == '-' || chars[i] == '+') {
                    i += 1;
                }
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let lit: String = chars[start..i].iter().collect();
                exp = lit
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent {lit:?} in {s:?}")))?;
            }
            let g = if exp < 0 { neg } else { pos };
            tokens.extend(std::iter::repeat(g).take(exp.unsigned_abs() as usize));
        }
        Ok(GeneratorWord { tokens })
    }

    pub fn to_text(&self) -> String {
        self.tokens.iter().map(|g| g.as_str()).collect::<Vec<_>>().join(" ")
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl std::str::FromStr for GeneratorWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        GeneratorWord::from_text(s)
    }
}
