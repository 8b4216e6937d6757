//! Reduction from DFA intersection nonemptiness to identity membership.
//!
//! The tape is split into `n` tracks (cells `x ≡ i mod n`). Track `i` receives a
//! word of `1·f(L(D_i))·1`, written one cell at a time with `a^g t^n`. The final
//! phase subtracts `1, g_1, ..., g_s, 1` from each block of `n` consecutive
//! cells, so the tape can only return to zero when all tracks carry the same
//! aligned word.

use std::collections::HashMap;

use crate::automata::{alphabet, Dfa};
use crate::bs::{BsAutomaton, BsEdge};
use crate::error::{Error, Result};
use crate::group::{Gen, GeneratorWord, GroupContext};

fn bad(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Parses `dfa alphabet=x,y` followed by `state <name> [initial] [final]` and
/// `edge <src> <dst> <sym>` lines. Missing transitions go to a rejecting sink.
pub fn parse_dfa(text: &str) -> Result<Dfa> {
    let mut lines = text.lines().map(|l| l.split('#').next().unwrap().trim()).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| bad("empty dfa file"))?;
    let syms: Vec<String> = header
        .strip_prefix("dfa")
        .and_then(|r| r.trim().strip_prefix("alphabet="))
        .ok_or_else(|| bad(format!("bad dfa header: {header}")))?
        .split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect();
    if syms.is_empty() {
        return Err(bad("empty alphabet"));
    }
    let mut names: HashMap<String, u32> = HashMap::new();
    let mut finals = Vec::new();
    let mut initial = None;
    let mut edges = Vec::new();
    for line in lines {
        let parts: Vec<&str> = line.split_whitespace().collect();
        match parts[0] {
            "state" if parts.len() >= 2 => {
                if names.contains_key(parts[1]) {
                    return Err(bad(format!("duplicate state {}", parts[1])));
                }
                let id = finals.len() as u32;
                names.insert(parts[1].to_string(), id);
                finals.push(false);
                for flag in &parts[2..] {
                    match *flag {
                        "initial" => {
                            if initial.replace(id).is_some() {
                                return Err(bad("more than one initial state"));
                            }
                        }
                        "final" => finals[id as usize] = true,
                        other => return Err(bad(format!("unknown flag {other}"))),
                    }
                }
            }
            "edge" if parts.len() == 4 => edges.push((parts[1], parts[2], parts[3])),
            _ => return Err(bad(format!("bad line: {line}"))),
        }
    }
    let initial = initial.ok_or_else(|| bad("no initial state"))?;
    let n = finals.len();
    let k = syms.len();
    let sink = n as u32;
    let mut trans = vec![u32::MAX; (n + 1) * k];
    for (src, dst, sym) in edges {
        let s = *names.get(src).ok_or_else(|| bad(format!("unknown state {src}")))?;
        let d = *names.get(dst).ok_or_else(|| bad(format!("unknown state {dst}")))?;
        let x = syms.iter().position(|y| y == sym).ok_or_else(|| bad(format!("unknown symbol {sym}")))?;
        let slot = &mut trans[s as usize * k + x];
        if *slot != u32::MAX && *slot != d {
            return Err(bad(format!("nondeterministic edge {src} {sym}")));
        }
        *slot = d;
    }
    for t in trans.iter_mut() {
        if *t == u32::MAX {
            *t = sink;
        }
    }
    finals.push(false);
    Dfa::from_parts(alphabet(syms), trans, initial, finals)
}

/// Digits `f(γ)` of the `j`-th symbol: `j` in binary with `ℓ = ⌈log₂|Γ|⌉` digits.
pub fn symbol_code(j: usize, nsyms: usize) -> Vec<u32> {
    let width = (usize::BITS - (nsyms - 1).leading_zeros()) as usize;
    (0..width).rev().map(|b| ((j >> b) & 1) as u32).collect()
}

fn word(parts: &[(Gen, usize)]) -> GeneratorWord {
    GeneratorWord::new(parts.iter().flat_map(|&(g, e)| std::iter::repeat(g).take(e)).collect())
}

struct Builder {
    states: Vec<String>,
    edges: Vec<BsEdge>,
}

impl Builder {
    fn state(&mut self, name: String) -> usize {
        self.states.push(name);
        self.states.len() - 1
    }

    fn edge(&mut self, src: usize, dst: usize, label: GeneratorWord) {
        self.edges.push(BsEdge { src, dst, label });
    }

    /// Digit words written one cell apart on a track.
    fn path(&mut self, src: usize, dst: usize, digits: &[u32], n: usize, prefix: &str) {
        let mut cur = src;
        for (j, &g) in digits.iter().enumerate() {
            let next = if j + 1 == digits.len() { dst } else { self.state(format!("{prefix}_{j}")) };
            self.edge(cur, next, word(&[(Gen::A, g as usize), (Gen::T, n)]));
            cur = next;
        }
    }
}

/// Subtracting `g` from `n` consecutive cells, moving up after each.
pub fn removal_word(g: u32, n: usize) -> GeneratorWord {
    let one = word(&[(Gen::AInv, g as usize), (Gen::T, 1)]);
    (0..n).fold(GeneratorWord::new(Vec::new()), |acc, _| acc.concat(&one))
}

/// Automaton accepting the identity iff the DFAs have a common word.
pub fn reduce(dfas: &[Dfa], ctx: GroupContext) -> Result<BsAutomaton> {
    let n = dfas.len();
    if n == 0 {
        return Err(Error::InvalidArgument("no automata".into()));
    }
    let sigma = dfas[0].alphabet().clone();
    if sigma.len() < 2 {
        return Err(Error::InvalidArgument("alphabet needs at least two symbols".into()));
    }
    if dfas.iter().any(|d| *d.alphabet() != sigma) {
        return Err(Error::AlphabetMismatch);
    }
    let codes: Vec<Vec<u32>> = (0..sigma.len()).map(|j| symbol_code(j, sigma.len())).collect();
    let mut b = Builder { states: Vec::new(), edges: Vec::new() };
    let step = GeneratorWord::new(vec![Gen::T]);
    let jump = word(&[(Gen::T, n)]);
    let jump_back = word(&[(Gen::TInv, n)]);
    let mut prev = b.state("start".into());
    for (i, d) in dfas.iter().enumerate() {
        // guess a cell of the next track
        let entry = b.state(format!("track{i}"));
        b.edge(prev, entry, step.clone());
        b.edge(entry, entry, jump.clone());
        b.edge(entry, entry, jump_back.clone());
        let useful = useful_states(d);
        let sim: Vec<Option<usize>> =
            (0..d.num_states()).map(|u| useful[u].then(|| b.state(format!("d{i}_{u}")))).collect();
        let exit = b.state(format!("track{i}_end"));
        if let Some(s0) = sim[d.initial() as usize] {
            b.path(entry, s0, &[1], n, &format!("d{i}_open"));
            for u in 0..d.num_states() {
                let Some(su) = sim[u] else { continue };
                for (x, code) in codes.iter().enumerate() {
                    if let Some(sv) = sim[d.step(u as u32, x as u32) as usize] {
                        b.path(su, sv, code, n, &format!("d{i}_{u}_{x}"));
                    }
                }
                if d.is_final(u as u32) {
                    b.path(su, exit, &[1], n, &format!("d{i}_close{u}"));
                }
            }
        }
        prev = exit;
    }
    // back to track 1, then subtract 1 g_1 ... g_s 1 blockwise
    let guess = b.state("erase".into());
    b.edge(prev, guess, step.clone());
    b.edge(guess, guess, jump.clone());
    b.edge(guess, guess, jump_back);
    let body = b.state("erase_body".into());
    b.edge(guess, body, removal_word(1, n));
    for g in 0..ctx.q() {
        b.edge(body, body, removal_word(g, n));
    }
    let done = b.state("done".into());
    b.edge(body, done, removal_word(1, n));
    b.edge(done, done, step);
    b.edge(done, done, GeneratorWord::new(vec![Gen::TInv]));
    BsAutomaton::new(ctx, b.states, b.edges, 0, done)
}

/// States that are reachable and can reach a final state.
fn useful_states(d: &Dfa) -> Vec<bool> {
    let live = crate::automata::live_states(d);
    let mut reach = vec![false; d.num_states()];
    let mut stack = vec![d.initial()];
    reach[d.initial() as usize] = true;
    while let Some(s) = stack.pop() {
        for x in 0..d.num_symbols() as u32 {
            let t = d.step(s, x);
            if !reach[t as usize] {
                reach[t as usize] = true;
                stack.push(t);
            }
        }
    }
    (0..d.num_states()).map(|s| reach[s] && live[s]).collect()
}

/// Whether all DFAs accept a common word (product construction).
pub fn intersection_nonempty(dfas: &[Dfa]) -> Result<bool> {
    let mut acc = dfas.first().ok_or_else(|| Error::InvalidArgument("no automata".into()))?.clone();
    for d in &dfas[1..] {
        acc = acc.intersect(d)?;
    }
    Ok(!acc.is_empty())
}
