//! Pointed expansions: base-q digit words with a radix marker and a cursor marker.
//!
//! Text format: a sign token `+` or `-`, then digit tokens most significant first.
//! A digit token is the decimal digit value followed by `r` when it carries the radix
//! point and `c` when it carries the cursor (`r` before `c`).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{parse_err, Error, Result};
use crate::group::{GroupContext, GroupElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }

    pub fn factor(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PeWord {
    pub sign: Sign,
    /// Most significant first.
    pub digits: Vec<u32>,
    pub radix_index: usize,
    pub cursor_index: usize,
}

impl PeWord {
    /// Parses the text format. Checks markers but neither digit range nor canonicity.
    pub fn from_text(s: &str) -> Result<Self> {
        let mut parts = s.split_whitespace();
        let sign = match parts.next() {
            Some("+") => Sign::Plus,
            Some("-") => Sign::Minus,
            Some(other) => return parse_err(format!("expected sign token, found {other:?}")),
            None => return parse_err("empty pointed expansion"),
        };
        let mut digits = Vec::new();
        let mut radix = None;
        let mut cursor = None;
        for (i, tok) in parts.enumerate() {
            let mut body = tok;
            let mut has_c = false;
            let mut has_r = false;
            if let Some(b) = body.strip_suffix('c') {
                has_c = true;
                body = b;
            }
            if let Some(b) = body.strip_suffix('r') {
                has_r = true;
                body = b;
            }
            if body.is_empty() || !body.chars().all(|c| c.is_ascii_digit()) {
                return parse_err(format!("bad digit token {tok:?}"));
            }
            let d: u32 = body.parse().map_err(|_| Error::Parse(format!("bad digit {tok:?}")))?;
            if has_r {
                if radix.is_some() {
                    return parse_err("duplicate radix marker");
                }
                radix = Some(i);
            }
            if has_c {
                if cursor.is_some() {
                    return parse_err("duplicate cursor marker");
                }
                cursor = Some(i);
            }
            digits.push(d);
        }
        match (radix, cursor) {
            (Some(radix_index), Some(cursor_index)) => {
                Ok(PeWord { sign, digits, radix_index, cursor_index })
            }
            (None, _) => parse_err("missing radix marker"),
            (_, None) => parse_err("missing cursor marker"),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::from(self.sign.as_str());
        for (i, d) in self.digits.iter().enumerate() {
            out.push(' ');
            out.push_str(&d.to_string());
            if i == self.radix_index {
                out.push('r');
            }
            if i == self.cursor_index {
                out.push('c');
            }
        }
        out
    }

    pub fn validate(&self, ctx: &GroupContext) -> Result<()> {
        if self.digits.is_empty() {
            return parse_err("no digits");
        }
        if self.radix_index >= self.digits.len() || self.cursor_index >= self.digits.len() {
            return parse_err("marker out of range");
        }
        if let Some(d) = self.digits.iter().find(|&&d| d >= ctx.q()) {
            return parse_err(format!("digit {d} out of range for base {}", ctx.q()));
        }
        Ok(())
    }

    fn is_zero_value(&self) -> bool {
        self.digits.iter().all(|&d| d == 0)
    }

    /// Shortest form: end digits are nonzero or marked, and zero carries `+`.
    pub fn is_canonical(&self) -> bool {
        let n = self.digits.len();
        if n == 0 {
            return false;
        }
        let keep = |i: usize| self.digits[i] != 0 || i == self.radix_index || i == self.cursor_index;
        keep(0) && keep(n - 1) && !(self.sign == Sign::Minus && self.is_zero_value())
    }

    /// Token indices over the pe alphabet (see [`token_count`]).
    pub fn tokens(&self) -> Vec<usize> {
        let mut out = vec![sign_token(self.sign)];
        for (i, &d) in self.digits.iter().enumerate() {
            out.push(digit_token(d, i == self.radix_index, i == self.cursor_index));
        }
        out
    }

    pub fn from_tokens(q: u32, toks: &[usize]) -> Result<Self> {
        let text = toks.iter().map(|&t| token_name(q, t)).collect::<Vec<_>>().join(" ");
        PeWord::from_text(&text)
    }
}

impl fmt::Display for PeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Size of the pe token alphabet: two sign tokens and four variants of each digit.
pub fn token_count(q: u32) -> usize {
    2 + 4 * q as usize
}

pub fn sign_token(s: Sign) -> usize {
    match s {
        Sign::Plus => 0,
        Sign::Minus => 1,
    }
}

pub fn digit_token(d: u32, radix: bool, cursor: bool) -> usize {
    2 + 4 * d as usize + radix as usize + 2 * cursor as usize
}

/// Decomposes a digit token into `(digit, radix, cursor)`; `None` for sign tokens.
pub fn token_digit(t: usize) -> Option<(u32, bool, bool)> {
    if t < 2 {
        return None;
    }
    let x = t - 2;
    Some(((x / 4) as u32, x & 1 == 1, x & 2 == 2))
}

pub fn token_name(_q: u32, t: usize) -> String {
    match token_digit(t) {
        None => if t == 0 { "+" } else { "-" }.to_string(),
        Some((d, r, c)) => {
            let mut s = d.to_string();
            if r {
                s.push('r');
            }
            if c {
                s.push('c');
            }
            s
        }
    }
}

pub fn token_names(q: u32) -> Vec<String> {
    (0..token_count(q)).map(|t| token_name(q, t)).collect()
}

/// Canonical pointed expansion of `g`.
pub fn encode(ctx: &GroupContext, g: &GroupElement) -> PeWord {
    let q = BigInt::from(ctx.q());
    let exp = g.exp() as i64;
    let m = g.cursor();
    let mut mag = g.num().abs();
    // least significant first, position of index j is j - exp
    let mut low_first = Vec::new();
    while !mag.is_zero() {
        let (d, r) = mag.div_rem(&q);
        low_first.push(r.to_u32().unwrap());
        mag = d;
    }
    let (mut lo, mut hi) = (0i64.min(m), 0i64.max(m));
    if !low_first.is_empty() {
        let first_nz = low_first.iter().position(|&d| d != 0).unwrap() as i64;
        lo = lo.min(first_nz - exp);
        hi = hi.max(low_first.len() as i64 - 1 - exp);
    }
    let digit_at = |pos: i64| -> u32 {
        let j = pos + exp;
        if j >= 0 && (j as usize) < low_first.len() {
            low_first[j as usize]
        } else {
            0
        }
    };
    let digits: Vec<u32> = (lo..=hi).rev().map(digit_at).collect();
    let sign = if g.num().is_negative() { Sign::Minus } else { Sign::Plus };
    PeWord { sign, digits, radix_index: hi as usize, cursor_index: (hi - m) as usize }
}

/// Inverse of [`encode`]; accepts padded words as well.
pub fn decode(ctx: &GroupContext, w: &PeWord) -> Result<GroupElement> {
    w.validate(ctx)?;
    let q = BigInt::from(ctx.q());
    let mut num = BigInt::zero();
    for &d in &w.digits {
        num = num * &q + BigInt::from(d);
    }
    if w.sign == Sign::Minus {
        num = -num;
    }
    let low_pos = w.radix_index as i64 - (w.digits.len() as i64 - 1);
    let cursor = w.radix_index as i64 - w.cursor_index as i64;
    Ok(ctx.element(num, -low_pos, cursor))
}

/// Strips removable zeros from both ends; zero gets sign `+`.
pub fn canonicalize(ctx: &GroupContext, raw: &PeWord) -> Result<PeWord> {
    raw.validate(ctx)?;
    let n = raw.digits.len();
    let keep = |i: usize| raw.digits[i] != 0 || i == raw.radix_index || i == raw.cursor_index;
    let start = (0..n).find(|&i| keep(i)).unwrap();
    let end = (0..n).rev().find(|&i| keep(i)).unwrap();
    let digits = raw.digits[start..=end].to_vec();
    let mut w = PeWord {
        sign: raw.sign,
        digits,
        radix_index: raw.radix_index - start,
        cursor_index: raw.cursor_index - start,
    };
    if w.is_zero_value() {
        w.sign = Sign::Plus;
    }
    Ok(w)
}
