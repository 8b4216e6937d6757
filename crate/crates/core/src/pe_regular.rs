//! PE-regular subsets of BS(1,q): regular languages of canonical pe words.

use std::fmt::Write as _;


use crate::automata::{alphabet, determinize_minimize, explore, live_states, Alphabet, Dfa, Nfa, Sym};
use crate::bs::parse_header;
use crate::columns::{renormalize, Column, ColumnSource, OutputMode};
use crate::error::{Error, Result};
use crate::group::{GroupContext, GroupElement};
use crate::pe::{self, digit_token, sign_token, token_digit, PeWord, Sign};

pub(crate) const STATE_LIMIT: usize = 4_000_000;

pub fn pe_alphabet(q: u32) -> Alphabet {
    alphabet(pe::token_names(q))
}

fn dig(d: u32, r: bool, c: bool) -> Sym {
    digit_token(d, r, c) as Sym
}

fn sgn(s: Sign) -> Sym {
    sign_token(s) as Sym
}

/// A PE-regular set, stored as the minimal DFA of its canonical pe words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeSet {
    ctx: GroupContext,
    dfa: Dfa,
}

impl PeSet {
    /// Restricts `dfa` to canonical pe words.
    pub fn new(ctx: GroupContext, dfa: Dfa) -> Result<Self> {
        if *dfa.alphabet() != pe_alphabet(ctx.q()) {
            return Err(Error::AlphabetMismatch);
        }
        let dfa = dfa.intersect(&universe_dfa(ctx.q()))?;
        Ok(PeSet { ctx, dfa })
    }

    pub fn ctx(&self) -> &GroupContext {
        &self.ctx
    }

    pub fn dfa(&self) -> &Dfa {
        &self.dfa
    }

    pub fn universe(ctx: GroupContext) -> Self {
        PeSet { ctx, dfa: universe_dfa(ctx.q()) }
    }

    pub fn empty(ctx: GroupContext) -> Self {
        PeSet { ctx, dfa: Dfa::empty(pe_alphabet(ctx.q())) }
    }

    pub fn singleton(ctx: GroupContext, g: &GroupElement) -> Self {
        Self::from_elements(ctx, std::slice::from_ref(g))
    }

    pub fn from_elements(ctx: GroupContext, gs: &[GroupElement]) -> Self {
        let mut nfa = Nfa::new(pe_alphabet(ctx.q()));
        let start = nfa.add_state(false);
        nfa.add_initial(start);
        for g in gs {
            let toks = pe::encode(&ctx, g).tokens();
            let mut cur = start;
            for (i, &t) in toks.iter().enumerate() {
                let next = nfa.add_state(i + 1 == toks.len());
                nfa.add_transition(cur, Some(t as Sym), next);
                cur = next;
            }
        }
        PeSet { ctx, dfa: determinize_minimize(&nfa) }
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        let toks: Vec<Sym> = pe::encode(&self.ctx, g).tokens().into_iter().map(|t| t as Sym).collect();
        self.dfa.accepts(&toks)
    }

    pub fn is_empty(&self) -> bool {
        self.dfa.is_empty()
    }

    /// Members whose pe word has at most `max_tokens` tokens, in length-lexicographic order.
    pub fn members(&self, max_tokens: usize) -> Vec<GroupElement> {
        self.dfa
            .enumerate(max_tokens)
            .iter()
            .map(|w| self.decode_tokens(w).expect("accepted words are valid pe words"))
            .collect()
    }

    pub fn decode_tokens(&self, w: &[Sym]) -> Result<GroupElement> {
        let toks: Vec<usize> = w.iter().map(|&t| t as usize).collect();
        let pw = PeWord::from_tokens(self.ctx.q(), &toks)?;
        pe::decode(&self.ctx, &pw)
    }

    /// Some member with a shortest pe word.
    pub fn witness(&self) -> Option<GroupElement> {
        self.dfa.shortest_word().map(|w| self.decode_tokens(&w).expect("accepted words are valid pe words"))
    }

    fn check(&self, other: &PeSet) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::BaseMismatch(self.ctx.q(), other.ctx.q()));
        }
        Ok(())
    }

    pub fn union(&self, other: &PeSet) -> Result<PeSet> {
        self.check(other)?;
        Ok(PeSet { ctx: self.ctx, dfa: self.dfa.union(&other.dfa)? })
    }

    pub fn intersect(&self, other: &PeSet) -> Result<PeSet> {
        self.check(other)?;
        Ok(PeSet { ctx: self.ctx, dfa: self.dfa.intersect(&other.dfa)? })
    }

    pub fn difference(&self, other: &PeSet) -> Result<PeSet> {
        self.check(other)?;
        Ok(PeSet { ctx: self.ctx, dfa: self.dfa.difference(&other.dfa)? })
    }

    pub fn complement(&self) -> PeSet {
        let u = universe_dfa(self.ctx.q());
        PeSet { ctx: self.ctx, dfa: self.dfa.complement(&u).expect("same alphabet") }
    }

    pub fn is_subset(&self, other: &PeSet) -> Result<bool> {
        self.check(other)?;
        self.dfa.includes_in(&other.dfa)
    }

    /// `{gh | g ∈ self, h ∈ other}`.
    pub fn product(&self, other: &PeSet) -> Result<PeSet> {
        self.check(other)?;
        let src = ProductSource::new(&self.dfa, &other.dfa);
        let dfa = renormalize(&src, self.ctx.q(), &OutputMode::Pe, STATE_LIMIT)?;
        PeSet::new(self.ctx, dfa)
    }

    /// `{g⁻¹ | g ∈ self}`: markers swap and the sign flips.
    pub fn inverse(&self) -> PeSet {
        let q = self.ctx.q();
        let k = pe::token_count(q);
        let perm: Vec<Sym> = (0..k)
            .map(|t| match token_digit(t) {
                None => (1 - t) as Sym,
                Some((d, r, c)) => dig(d, c, r),
            })
            .collect();
        let mut nfa = Nfa::new(pe_alphabet(q));
        for s in 0..self.dfa.num_states() as u32 {
            nfa.add_state(self.dfa.is_final(s));
        }
        nfa.add_initial(self.dfa.initial());
        for s in 0..self.dfa.num_states() as u32 {
            for x in 0..k as Sym {
                nfa.add_transition(s, Some(perm[x as usize]), self.dfa.step(s, x));
            }
        }
        let mapped = determinize_minimize(&nfa);
        PeSet { ctx: self.ctx, dfa: canonicalize_language(q, &mapped) }
    }

    pub fn left_multiply(&self, g: &GroupElement) -> Result<PeSet> {
        PeSet::singleton(self.ctx, g).product(self)
    }

    pub fn right_multiply(&self, g: &GroupElement) -> Result<PeSet> {
        self.product(&PeSet::singleton(self.ctx, g))
    }

    /// `pe(d·N)`.
    pub fn divisible(ctx: GroupContext, d: u64) -> Result<PeSet> {
        integer_mod_set(ctx, d, false)
    }

    /// `pe(d·Z)`.
    pub fn multiples_z(ctx: GroupContext, d: u64) -> Result<PeSet> {
        integer_mod_set(ctx, d, true)
    }

    pub fn nonneg(ctx: GroupContext) -> PeSet {
        integer_mod_set(ctx, 1, false).expect("d = 1")
    }

    pub fn all_integers(ctx: GroupContext) -> PeSet {
        integer_mod_set(ctx, 1, true).expect("d = 1")
    }

    pub fn nonpos(ctx: GroupContext) -> PeSet {
        Self::nonneg(ctx).inverse()
    }

    /// `pe({n ∈ N | n > b})`.
    pub fn above(ctx: GroupContext, b: u64) -> PeSet {
        let q = ctx.q() as u64;
        let mut bd = Vec::new();
        let mut x = b;
        loop {
            bd.push((x % q) as u32);
            x /= q;
            if x == 0 {
                break;
            }
        }
        bd.reverse();
        let len = bd.len();
        // state: 0 start, 1.. digits read (capped at len + 1) with comparison so far
        #[derive(Clone, PartialEq, Eq, Hash)]
        enum St {
            Start,
            Digits(usize, std::cmp::Ordering),
            Done(usize, std::cmp::Ordering),
        }
        let (nfa, _) = explore(
            pe_alphabet(ctx.q()),
            vec![St::Start],
            |s, out| match s {
                St::Start => out.push((Some(sgn(Sign::Plus)), St::Digits(0, std::cmp::Ordering::Equal))),
                St::Digits(i, ord) => {
                    for d in 0..ctx.q() {
                        let (ni, nord) = if *i >= len {
                            (len + 1, std::cmp::Ordering::Greater)
                        } else if *ord == std::cmp::Ordering::Equal {
                            (i + 1, d.cmp(&bd[*i]))
                        } else {
                            (i + 1, *ord)
                        };
                        out.push((Some(dig(d, false, false)), St::Digits(ni, nord)));
                        out.push((Some(dig(d, true, true)), St::Done(ni, nord)));
                    }
                }
                St::Done(..) => {}
            },
            |s| matches!(s, St::Done(i, ord) if *i > len || (*i == len && *ord == std::cmp::Ordering::Greater)),
            usize::MAX,
        )
        .expect("unbounded limit");
        PeSet::new(ctx, determinize_minimize(&nfa)).expect("pe alphabet")
    }

    /// `{(0, k)}`.
    pub fn shift_set(ctx: GroupContext, k: i64) -> PeSet {
        PeSet::singleton(ctx, &ctx.integer(0, k))
    }

    /// The pair `H_k = {(q^l − q^(l+k), 0) | l ∈ Z}` and its inverse set.
    pub fn pdiff_sets(ctx: GroupContext, k: usize) -> Result<(PeSet, PeSet)> {
        if k == 0 {
            return Err(Error::InvalidArgument("k must be positive".into()));
        }
        let build = |sign: Sign| {
            let top = ctx.q() - 1;
            // phase 0: leading zeros, 1..=k: inside the block, k+1: trailing zeros
            let (nfa, _) = explore(
                pe_alphabet(ctx.q()),
                vec![(usize::MAX, false)],
                |&(phase, marked), out| {
                    if phase == usize::MAX {
                        out.push((Some(sgn(sign)), (0, false)));
                        return;
                    }
                    let mut push = |d: u32, next: usize| {
                        out.push((Some(dig(d, false, false)), (next, marked)));
                        if !marked {
                            out.push((Some(dig(d, true, true)), (next, true)));
                        }
                    };
                    if phase == 0 {
                        push(0, 0);
                    }
                    if phase < k {
                        push(top, phase + 1);
                    }
                    if phase == k || phase == k + 1 {
                        push(0, k + 1);
                    }
                },
                |&(phase, marked)| marked && phase != usize::MAX && phase >= k,
                usize::MAX,
            )
            .expect("unbounded limit");
            PeSet::new(ctx, determinize_minimize(&nfa)).expect("pe alphabet")
        };
        Ok((build(Sign::Minus), build(Sign::Plus)))
    }

    pub fn dump(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "pe q={}", self.ctx.q());
        out.push_str(&self.dfa.dump());
        out
    }

    pub fn parse(text: &str) -> Result<PeSet> {
        let trimmed = text.trim_start();
        let (header, rest) = trimmed.split_once('\n').unwrap_or((trimmed, ""));
        let q = parse_header(header.trim(), "pe")?;
        let ctx = GroupContext::new(q)?;
        let dfa = Dfa::parse(rest)?;
        PeSet::new(ctx, dfa)
    }
}

/// Minimal DFA of all canonical pe words in base `q`.
pub fn universe_dfa(q: u32) -> Dfa {
    #[derive(Clone, PartialEq, Eq, Hash)]
    struct U {
        stage: u8,
        minus: bool,
        r: bool,
        c: bool,
        nonzero: bool,
        last_ok: bool,
    }
    let start = U { stage: 0, minus: false, r: false, c: false, nonzero: false, last_ok: false };
    let (nfa, _) = explore(
        pe_alphabet(q),
        vec![start],
        |s, out| {
            if s.stage == 0 {
                for sign in [Sign::Plus, Sign::Minus] {
                    out.push((Some(sgn(sign)), U { stage: 1, minus: sign == Sign::Minus, ..s.clone() }));
                }
                return;
            }
            for d in 0..q {
                for (r, c) in [(false, false), (true, false), (false, true), (true, true)] {
                    if (r && s.r) || (c && s.c) {
                        continue;
                    }
                    let ok = d != 0 || r || c;
                    if s.stage == 1 && !ok {
                        continue;
                    }
                    out.push((
                        Some(dig(d, r, c)),
                        U { stage: 2, minus: s.minus, r: s.r || r, c: s.c || c, nonzero: s.nonzero || d != 0, last_ok: ok },
                    ));
                }
            }
        },
        |s| s.stage == 2 && s.r && s.c && s.last_ok && (!s.minus || s.nonzero),
        usize::MAX,
    )
    .expect("unbounded limit");
    determinize_minimize(&nfa)
}

/// Replaces every pe word (possibly padded, possibly a signed zero) by its
/// canonical form, then restricts to canonical words.
pub fn canonicalize_language(q: u32, dfa: &Dfa) -> Dfa {
    let zero = dig(0, false, false);
    // phase 0 before sign, 1 leading zeros, 2 body, 3 trailing zeros
    let (nfa, _) = explore(
        pe_alphabet(q),
        vec![(dfa.initial(), 0u8, false)],
        |&(s, phase, zero_fix), out| match phase {
            0 => {
                for sign in [Sign::Plus, Sign::Minus] {
                    let t = dfa.step(s, sgn(sign));
                    out.push((Some(sgn(sign)), (t, 1, false)));
                    if sign == Sign::Minus {
                        out.push((Some(sgn(Sign::Plus)), (t, 1, true)));
                    }
                }
            }
            1 => {
                out.push((None, (dfa.step(s, zero), 1, zero_fix)));
                out.push((None, (s, 2, zero_fix)));
            }
            2 => {
                for x in 2..pe::token_count(q) as Sym {
                    if zero_fix && token_digit(x as usize).unwrap().0 != 0 {
                        continue;
                    }
                    out.push((Some(x), (dfa.step(s, x), 2, zero_fix)));
                }
                out.push((None, (s, 3, zero_fix)));
            }
            _ => out.push((None, (dfa.step(s, zero), 3, zero_fix))),
        },
        |&(s, phase, _)| phase >= 2 && dfa.is_final(s),
        usize::MAX,
    )
    .expect("unbounded limit");
    determinize_minimize(&nfa).intersect(&universe_dfa(q)).expect("pe alphabet")
}

fn integer_mod_set(ctx: GroupContext, d: u64, signed: bool) -> Result<PeSet> {
    if d == 0 {
        return Err(Error::InvalidArgument("modulus must be positive".into()));
    }
    let q = ctx.q() as u64;
    // None: before sign; Some((rem, done))
    let (nfa, _) = explore(
        pe_alphabet(ctx.q()),
        vec![None],
        |s: &Option<(u64, bool)>, out| match *s {
            None => {
                out.push((Some(sgn(Sign::Plus)), Some((0, false))));
                if signed {
                    out.push((Some(sgn(Sign::Minus)), Some((0, false))));
                }
            }
            Some((rem, false)) => {
                for x in 0..ctx.q() {
                    let r2 = ((rem as u128 * q as u128 + x as u128) % d as u128) as u64;
                    out.push((Some(dig(x, false, false)), Some((r2, false))));
                    out.push((Some(dig(x, true, true)), Some((r2, true))));
                }
            }
            Some((_, true)) => {}
        },
        |s| *s == Some((0, true)),
        STATE_LIMIT,
    )?;
    PeSet::new(ctx, determinize_minimize(&nfa))
}

/// Symbol index of the digit triple `(d1, d2, d3)` over `B_q³`.
pub fn triple_symbol(q: u32, d: (i32, i32, i32)) -> Sym {
    let w = 2 * q as i32 - 1;
    let off = q as i32 - 1;
    (((d.0 + off) * w + (d.1 + off)) * w + (d.2 + off)) as Sym
}

/// Signed-digit addition automaton over `B_q³`, most significant digit first:
/// accepts aligned triples whose third track is the sum of the first two.
pub fn addition_transducer(ctx: &GroupContext) -> Dfa {
    let q = ctx.q() as i32;
    let digits: Vec<i32> = (-(q - 1)..q).collect();
    let mut names = Vec::new();
    for &a in &digits {
        for &b in &digits {
            for &c in &digits {
                names.push(format!("{a},{b},{c}"));
            }
        }
    }
    // state: s + 2 for pending difference s in [-2, 2]; 5 is the sink
    let k = names.len();
    let mut trans = vec![5u32; 6 * k];
    for s in -2..=2i32 {
        for &a in &digits {
            for &b in &digits {
                for &c in &digits {
                    let t = q * s + a + b - c;
                    if t.abs() <= 2 {
                        trans[(s + 2) as usize * k + triple_symbol(q as u32, (a, b, c)) as usize] = (t + 2) as u32;
                    }
                }
            }
        }
    }
    let finals = vec![false, false, true, false, false, false];
    crate::automata::minimize(&Dfa::from_parts(alphabet(names), trans, 2, finals).expect("well-formed table"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Track {
    Pre,
    Run(u32, Sign),
    Post,
}

/// Two pe tracks aligned so that the radix of the second sits at the cursor of the first.
struct ProductSource<'a> {
    a: &'a Dfa,
    b: &'a Dfa,
    live_a: Vec<bool>,
    live_b: Vec<bool>,
    q: u32,
}

impl<'a> ProductSource<'a> {
    fn new(a: &'a Dfa, b: &'a Dfa) -> Self {
        let q = ((a.num_symbols() - 2) / 4) as u32;
        ProductSource { a, b, live_a: live_states(a), live_b: live_states(b), q }
    }

    /// Digit options of one track for the next column: `(value, r, c, next)`.
    fn options(&self, t: Track, d: &Dfa, live: &[bool]) -> Vec<(i64, bool, bool, Track)> {
        match t {
            Track::Pre | Track::Post => vec![(0, false, false, t)],
            Track::Run(s, sign) => {
                let mut v = Vec::new();
                for x in 2..pe::token_count(self.q) {
                    let n = d.step(s, x as Sym);
                    if live[n as usize] {
                        let (dg, r, c) = token_digit(x).unwrap();
                        v.push((sign.factor() * dg as i64, r, c, Track::Run(n, sign)));
                    }
                }
                v
            }
        }
    }
}

impl ColumnSource for ProductSource<'_> {
    type State = (Track, Track);

    fn initial_states(&self) -> Vec<(Track, Track)> {
        vec![(Track::Pre, Track::Pre)]
    }

    fn successors(&self, &(t1, t2): &(Track, Track), out: &mut Vec<(Option<Column>, (Track, Track))>) {
        let eps = |t: Track, d: &Dfa, live: &[bool]| -> Vec<Track> {
            match t {
                Track::Pre => [Sign::Plus, Sign::Minus]
                    .into_iter()
                    .filter_map(|s| {
                        let n = d.step(d.initial(), sgn(s));
                        live[n as usize].then_some(Track::Run(n, s))
                    })
                    .collect(),
                Track::Run(s, _) if d.is_final(s) => vec![Track::Post],
                _ => vec![],
            }
        };
        for n in eps(t1, self.a, &self.live_a) {
            out.push((None, (n, t2)));
        }
        for n in eps(t2, self.b, &self.live_b) {
            out.push((None, (t1, n)));
        }
        if !matches!(t1, Track::Run(..)) && !matches!(t2, Track::Run(..)) {
            return;
        }
        for (v1, r1, c1, n1) in self.options(t1, self.a, &self.live_a) {
            for &(v2, r2, c2, n2) in &self.options(t2, self.b, &self.live_b) {
                if c1 != r2 {
                    continue;
                }
                out.push((Some(Column { value: v1 + v2, radix: r1, cursor: c2, mask: 0 }), (n1, n2)));
            }
        }
    }

    fn is_final(&self, s: &(Track, Track)) -> bool {
        *s == (Track::Post, Track::Post)
    }

    fn max_abs_value(&self) -> i64 {
        2 * (self.q as i64 - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn ctx(q: u32) -> GroupContext {
        GroupContext::new(q).unwrap()
    }

    fn texts(s: &PeSet, n: usize) -> Vec<String> {
        s.dfa().enumerate(n).iter().map(|w| s.dfa().word_to_text(w)).collect()
    }

    fn accepts_text(s: &PeSet, t: &str) -> bool {
        let toks: Vec<Sym> = PeWord::from_text(t).unwrap().tokens().into_iter().map(|x| x as Sym).collect();
        s.dfa().accepts(&toks)
    }

    #[test]
    fn universe_examples() {
        let u = PeSet::universe(ctx(2));
        assert!(u.contains(&ctx(2).identity()));
        assert!(accepts_text(&u, "+ 0c 1 1r"));
        assert!(!accepts_text(&u, "+ 0 1rc"));
        assert!(!accepts_text(&u, "- 0rc"));
        assert!(!u.dfa().accepts(&[0, dig(1, false, true), dig(1, true, true)]));
        // canonical words with at most 2 tokens: "+ 0rc" and "± drc" for d != 0
        assert_eq!(texts(&u, 2), vec!["+ 0rc", "+ 1rc", "- 1rc"]);
    }

    #[test]
    fn boolean_examples() {
        let c = ctx(2);
        let a = PeSet::from_elements(c, &[c.integer(1, 0), c.integer(2, 1)]);
        let b = PeSet::singleton(c, &c.integer(2, 1));
        assert_eq!(a.intersect(&b).unwrap(), b);
        assert_eq!(a.difference(&b).unwrap(), PeSet::singleton(c, &c.integer(1, 0)));
        assert_eq!(a.complement().complement(), a);
        assert_eq!(a.intersect(&PeSet::universe(c)).unwrap(), a);
        assert_eq!(a.union(&PeSet::universe(ctx(3))), Err(Error::BaseMismatch(2, 3)));
    }

    #[test]
    fn addition_examples() {
        let c = ctx(2);
        let add = addition_transducer(&c);
        assert!(add.accepts(&[triple_symbol(2, (0, 0, 0)), triple_symbol(2, (1, -1, 0)), triple_symbol(2, (0, 0, 0))]));
        assert!(add.accepts(&[triple_symbol(2, (1, -1, 0)), triple_symbol(2, (0, 1, 1))]));
        assert!(!add.accepts(&[triple_symbol(2, (1, 0, 0))]));
        assert!(add.accepts(&[]));
    }

    #[test]
    fn product_examples() {
        let c = ctx(2);
        let s = |g: GroupElement| PeSet::singleton(c, &g);
        assert_eq!(s(c.integer(1, 0)).product(&s(c.integer(0, 1))).unwrap(), s(c.integer(1, 1)));
        assert_eq!(s(c.integer(0, 1)).product(&s(c.integer(1, 0))).unwrap(), s(c.integer(2, 1)));
        let g = c.element(BigInt::from(-5), 2, 3);
        let h = c.element(BigInt::from(7), -1, -2);
        assert_eq!(s(g.clone()).product(&s(h.clone())).unwrap(), s(c.multiply(&g, &h)));
    }

    #[test]
    fn inverse_examples() {
        let c = ctx(2);
        let g = c.integer(3, 2);
        assert_eq!(PeSet::singleton(c, &g).inverse(), PeSet::singleton(c, &c.inverse(&g)));
        assert_eq!(PeSet::universe(c).inverse(), PeSet::universe(c));
        let z = PeSet::singleton(c, &c.integer(0, 4));
        assert_eq!(z.inverse(), PeSet::singleton(c, &c.integer(0, -4)));
    }

    #[test]
    fn integer_predicates() {
        let c = ctx(2);
        let d3 = PeSet::divisible(c, 3).unwrap();
        for (n, inside) in [(0, true), (3, true), (6, true), (1, false), (2, false), (4, false), (-3, false)] {
            assert_eq!(d3.contains(&c.integer(n, 0)), inside, "{n}");
        }
        assert!(!d3.contains(&c.integer(3, 1)));
        let a7 = PeSet::above(c, 7);
        assert!(a7.contains(&c.integer(8, 0)));
        assert!(!a7.contains(&c.integer(7, 0)));
        assert!(!a7.contains(&c.integer(0, 0)));
        assert!(PeSet::above(c, 0).contains(&c.integer(1, 0)));
        assert_eq!(PeSet::divisible(c, 1).unwrap().intersect(&PeSet::nonneg(c)).unwrap(), PeSet::nonneg(c));
        assert!(PeSet::nonpos(c).contains(&c.integer(-5, 0)));
        assert!(PeSet::nonpos(c).contains(&c.identity()));
        assert!(!PeSet::nonpos(c).contains(&c.integer(5, 0)));
        assert!(PeSet::multiples_z(c, 3).unwrap().contains(&c.integer(-6, 0)));
        assert!(PeSet::divisible(c, 0).is_err());
    }

    #[test]
    fn pdiff_examples() {
        let c = ctx(2);
        let (h1, h1i) = PeSet::pdiff_sets(c, 1).unwrap();
        assert!(h1.contains(&c.integer(-1, 0)));
        assert!(h1.contains(&c.element(BigInt::from(-1), 1, 0)));
        assert!(!h1.contains(&c.integer(-3, 0)));
        assert_eq!(h1i, h1.inverse());
        let (h2, h2i) = PeSet::pdiff_sets(c, 2).unwrap();
        assert!(h2.contains(&c.integer(-3, 0)));
        assert!(accepts_text(&h2, "- 1 1rc"));
        assert_eq!(h2i, h2.inverse());
        assert!(PeSet::pdiff_sets(c, 0).is_err());
    }

    #[test]
    fn dump_round_trip() {
        let c = ctx(3);
        let s = PeSet::divisible(c, 2).unwrap();
        let text = s.dump();
        assert!(text.starts_with("pe q=3\ndfa\n"));
        assert_eq!(PeSet::parse(&text).unwrap(), s);
    }
}
