//! Succinct automata: states are bit vectors `v1..vn`, and the transitions on
//! each letter are given by a propositional formula over the current bits
//! `vi` and the next bits `vi'`.

use std::collections::{HashMap, HashSet};

use crate::automata::{alphabet, Alphabet, Nfa, Sym};
use crate::error::{Error, Result};

pub type NodeId = u32;

/// Default bound on `n` for [`SuccinctAutomaton::expand`].
pub const EXPAND_LIMIT: u32 = 16;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Node {
    Const(bool),
    /// Bit `index` (0-based) of the current or the next state.
    Var { index: u32, primed: bool },
    Not(NodeId),
    And(Vec<NodeId>),
    Or(Vec<NodeId>),
}

/// Formula DAG with shared subterms.
#[derive(Debug, Clone, Default)]
pub struct Circuit {
    nodes: Vec<Node>,
    index: HashMap<Node, NodeId>,
}

impl Circuit {
    pub fn new() -> Self {
        Circuit::default()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, id: NodeId) -> &Node {
        &self.nodes[id as usize]
    }

    fn intern(&mut self, n: Node) -> NodeId {
        if let Some(&id) = self.index.get(&n) {
            return id;
        }
        let id = self.nodes.len() as NodeId;
        self.nodes.push(n.clone());
        self.index.insert(n, id);
        id
    }

    pub fn konst(&mut self, b: bool) -> NodeId {
        self.intern(Node::Const(b))
    }

    pub fn var(&mut self, index: u32, primed: bool) -> NodeId {
        self.intern(Node::Var { index, primed })
    }

    fn as_const(&self, id: NodeId) -> Option<bool> {
        match self.nodes[id as usize] {
            Node::Const(b) => Some(b),
            _ => None,
        }
    }

    pub fn not(&mut self, a: NodeId) -> NodeId {
        match self.nodes[a as usize] {
            Node::Const(b) => self.konst(!b),
            Node::Not(x) => x,
            _ => self.intern(Node::Not(a)),
        }
    }

    fn junction(&mut self, args: Vec<NodeId>, conj: bool) -> NodeId {
        let mut kept = Vec::with_capacity(args.len());
        for a in args {
            match self.as_const(a) {
                Some(b) if b == conj => {}
                Some(_) => return self.konst(!conj),
                None => {
                    if !kept.contains(&a) {
                        kept.push(a);
                    }
                }
            }
        }
        match kept.len() {
            0 => self.konst(conj),
            1 => kept[0],
            _ => self.intern(if conj { Node::And(kept) } else { Node::Or(kept) }),
        }
    }

    pub fn and(&mut self, args: Vec<NodeId>) -> NodeId {
        self.junction(args, true)
    }

    pub fn or(&mut self, args: Vec<NodeId>) -> NodeId {
        self.junction(args, false)
    }

    pub fn xor(&mut self, a: NodeId, b: NodeId) -> NodeId {
        let na = self.not(a);
        let nb = self.not(b);
        let l = self.and(vec![a, nb]);
        let r = self.and(vec![na, b]);
        self.or(vec![l, r])
    }

    pub fn iff(&mut self, a: NodeId, b: NodeId) -> NodeId {
        let x = self.xor(a, b);
        self.not(x)
    }

    fn reachable(&self, root: NodeId) -> Vec<NodeId> {
        let mut seen = HashSet::new();
        let mut stack = vec![root];
        let mut out = Vec::new();
        while let Some(x) = stack.pop() {
            if !seen.insert(x) {
                continue;
            }
            out.push(x);
            match &self.nodes[x as usize] {
                Node::Not(a) => stack.push(*a),
                Node::And(v) | Node::Or(v) => stack.extend(v),
                _ => {}
            }
        }
        out
    }

    /// Number of distinct subformulas.
    pub fn size(&self, root: NodeId) -> usize {
        self.reachable(root).len()
    }

    /// Largest variable index occurring in the formula.
    pub fn max_var(&self, root: NodeId) -> Option<u32> {
        self.reachable(root)
            .into_iter()
            .filter_map(|x| match self.nodes[x as usize] {
                Node::Var { index, .. } => Some(index),
                _ => None,
            })
            .max()
    }

    /// Three-valued evaluation: primed bits outside `assigned` are unknown.
    fn eval(&self, x: NodeId, cur: u64, next: u64, assigned: u64, memo: &mut [u8]) -> Option<bool> {
        let m = memo[x as usize];
        if m != 0 {
            return [None, Some(false), Some(true)][m as usize - 1];
        }
        let v = match &self.nodes[x as usize] {
            Node::Const(b) => Some(*b),
            Node::Var { index, primed: false } => Some(cur >> index & 1 == 1),
            Node::Var { index, primed: true } => (assigned >> index & 1 == 1).then_some(next >> index & 1 == 1),
            Node::Not(a) => self.eval(*a, cur, next, assigned, memo).map(|b| !b),
            Node::And(args) | Node::Or(args) => {
                let conj = matches!(self.nodes[x as usize], Node::And(_));
                let mut unknown = false;
                let mut decided = None;
                for &a in args {
                    match self.eval(a, cur, next, assigned, memo) {
                        Some(b) if b != conj => {
                            decided = Some(b);
                            break;
                        }
                        Some(_) => {}
                        None => unknown = true,
                    }
                }
                decided.or(if unknown { None } else { Some(conj) })
            }
        };
        memo[x as usize] = match v {
            None => 1,
            Some(false) => 2,
            Some(true) => 3,
        };
        v
    }

    pub fn to_text(&self, root: NodeId) -> String {
        match &self.nodes[root as usize] {
            Node::Const(b) => b.to_string(),
            Node::Var { index, primed } => format!("v{}{}", index + 1, if *primed { "'" } else { "" }),
            Node::Not(a) => format!("!{}", self.atom_text(*a)),
            Node::And(args) => args.iter().map(|&a| self.atom_text(a)).collect::<Vec<_>>().join(" & "),
            Node::Or(args) => args.iter().map(|&a| self.atom_text(a)).collect::<Vec<_>>().join(" | "),
        }
    }

    fn atom_text(&self, x: NodeId) -> String {
        match self.nodes[x as usize] {
            Node::And(_) | Node::Or(_) => format!("({})", self.to_text(x)),
            _ => self.to_text(x),
        }
    }

    /// Parses `&`, `|`, `!`, parentheses, `true`, `false`, `vi` and `vi'`.
    pub fn parse(&mut self, text: &str) -> Result<NodeId> {
        let toks = lex(text)?;
        let mut p = FormulaParser { toks: &toks, pos: 0, circuit: self };
        let root = p.or()?;
        if p.pos != toks.len() {
            return Err(Error::Parse(format!("trailing input in formula {text:?}")));
        }
        Ok(root)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    LParen,
    RParen,
    And,
    Or,
    Not,
    Const(bool),
    Var(u32, bool),
}

fn lex(text: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        i += 1;
        match c {
            ' ' | '\t' => {}
            '(' => out.push(Tok::LParen),
            ')' => out.push(Tok::RParen),
            '&' => out.push(Tok::And),
            '|' => out.push(Tok::Or),
            '!' => out.push(Tok::Not),
            'v' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let idx: u32 = chars[start..i]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad variable in {text:?}")))?;
                if idx == 0 {
                    return Err(Error::Parse("variables are numbered from 1".into()));
                }
                let primed = i < chars.len() && chars[i] == '\'';
                if primed {
                    i += 1;
                }
                out.push(Tok::Var(idx - 1, primed));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i - 1;
                while i < chars.len() && chars[i].is_ascii_alphabetic() {
                    i += 1;
                }
                match chars[start..i].iter().collect::<String>().as_str() {
                    "true" => out.push(Tok::Const(true)),
                    "false" => out.push(Tok::Const(false)),
                    w => return Err(Error::Parse(format!("unknown word {w:?} in formula"))),
                }
            }
            _ => return Err(Error::Parse(format!("unexpected {c:?} in formula"))),
        }
    }
    Ok(out)
}

struct FormulaParser<'a> {
    toks: &'a [Tok],
    pos: usize,
    circuit: &'a mut Circuit,
}

impl FormulaParser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn or(&mut self) -> Result<NodeId> {
        let mut args = vec![self.and()?];
        while self.peek() == Some(&Tok::Or) {
            self.pos += 1;
            args.push(self.and()?);
        }
        Ok(self.circuit.or(args))
    }

    fn and(&mut self) -> Result<NodeId> {
        let mut args = vec![self.unary()?];
        while self.peek() == Some(&Tok::And) {
            self.pos += 1;
            args.push(self.unary()?);
        }
        Ok(self.circuit.and(args))
    }

    fn unary(&mut self) -> Result<NodeId> {
        let tok = self.peek().cloned().ok_or_else(|| Error::Parse("formula ends early".into()))?;
        self.pos += 1;
        match tok {
            Tok::Not => {
                let a = self.unary()?;
                Ok(self.circuit.not(a))
            }
            Tok::LParen => {
                let a = self.or()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(Error::Parse("missing ')'".into()));
                }
                self.pos += 1;
                Ok(a)
            }
            Tok::Const(b) => Ok(self.circuit.konst(b)),
            Tok::Var(i, p) => Ok(self.circuit.var(i, p)),
            t => Err(Error::Parse(format!("unexpected {t:?} in formula"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuccinctAutomaton {
    bits: u32,
    alphabet: Alphabet,
    circuit: Circuit,
    phi: Vec<NodeId>,
    phi_eps: NodeId,
    p0: u64,
    pf: u64,
}

impl SuccinctAutomaton {
    pub fn new(bits: u32, alphabet: Alphabet, circuit: Circuit, phi: Vec<NodeId>, phi_eps: NodeId, p0: u64, pf: u64) -> Result<Self> {
        if bits == 0 || bits > 63 {
            return Err(Error::InvalidArgument(format!("bit length {bits} outside 1..=63")));
        }
        if phi.len() != alphabet.len() {
            return Err(Error::InvalidArgument("one formula per letter is required".into()));
        }
        if alphabet.iter().any(|s| s == "eps") {
            return Err(Error::InvalidArgument("\"eps\" is reserved".into()));
        }
        if p0 >> bits != 0 || pf >> bits != 0 {
            return Err(Error::InvalidArgument("p0 and pf must fit in the bit length".into()));
        }
        for &root in phi.iter().chain([&phi_eps]) {
            if circuit.max_var(root).is_some_and(|i| i >= bits) {
                return Err(Error::InvalidArgument(format!("formula {} uses undeclared variables", circuit.to_text(root))));
            }
        }
        Ok(SuccinctAutomaton { bits, alphabet, circuit, phi, phi_eps, p0, pf })
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn circuit(&self) -> &Circuit {
        &self.circuit
    }

    pub fn initial(&self) -> u64 {
        self.p0
    }

    pub fn final_state(&self) -> u64 {
        self.pf
    }

    pub fn formula(&self, sym: Option<Sym>) -> NodeId {
        match sym {
            Some(x) => self.phi[x as usize],
            None => self.phi_eps,
        }
    }

    /// `n + Σ|φ_x|`, counting distinct subformulas of each formula.
    pub fn size(&self) -> usize {
        self.bits as usize + self.phi.iter().chain([&self.phi_eps]).map(|&r| self.circuit.size(r)).sum::<usize>()
    }

    /// States `p'` with `φ_x(p, p')`, by assigning the next-state bits one at a
    /// time and cutting branches the partial assignment already falsifies.
    pub fn successors(&self, p: u64, sym: Option<Sym>) -> Vec<u64> {
        let root = self.formula(sym);
        let mut memo = vec![0u8; self.circuit.len()];
        let mut out = Vec::new();
        self.extend(root, p, 0, 0, &mut memo, &mut out);
        out
    }

    fn extend(&self, root: NodeId, p: u64, i: u32, next: u64, memo: &mut [u8], out: &mut Vec<u64>) {
        memo.fill(0);
        let assigned = (1u64 << i) - 1;
        match self.circuit.eval(root, p, next, assigned, memo) {
            Some(false) => {}
            Some(true) => {
                let free = self.bits - i;
                for high in 0..1u64 << free {
                    out.push(next | high << i);
                }
            }
            None => {
                self.extend(root, p, i + 1, next, memo, out);
                self.extend(root, p, i + 1, next | 1 << i, memo, out);
            }
        }
    }

    /// Explicit NFA on all `2^n` states.
    pub fn expand(&self, limit: u32) -> Result<Nfa> {
        if self.bits > limit {
            return Err(Error::LimitExceeded(format!("{} state bits exceed the expansion limit {limit}", self.bits)));
        }
        let mut nfa = Nfa::new(self.alphabet.clone());
        let n = 1u64 << self.bits;
        for s in 0..n {
            nfa.add_state(s == self.pf);
        }
        nfa.add_initial(self.p0 as u32);
        let syms = (0..self.alphabet.len() as Sym).map(Some).chain([None]);
        for sym in syms {
            for s in 0..n {
                for t in self.successors(s, sym) {
                    nfa.add_transition(s as u32, sym, t as u32);
                }
            }
        }
        Ok(nfa)
    }

    fn closure(&self, set: &mut HashSet<u64>) {
        let mut stack: Vec<u64> = set.iter().copied().collect();
        while let Some(s) = stack.pop() {
            for t in self.successors(s, None) {
                if set.insert(t) {
                    stack.push(t);
                }
            }
        }
    }

    /// Membership by tracking the set of reachable bit vectors.
    pub fn otf_membership(&self, word: &[Sym]) -> bool {
        let mut cur: HashSet<u64> = HashSet::from([self.p0]);
        self.closure(&mut cur);
        for &x in word {
            let mut next = HashSet::new();
            for &s in &cur {
                next.extend(self.successors(s, Some(x)));
            }
            self.closure(&mut next);
            if next.is_empty() {
                return false;
            }
            cur = next;
        }
        cur.contains(&self.pf)
    }

    pub fn bits_text(&self, v: u64) -> String {
        (0..self.bits).map(|i| if v >> i & 1 == 1 { '1' } else { '0' }).collect()
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("succinct n={} alphabet={}\n", self.bits, self.alphabet.join(","));
        for (x, &root) in self.phi.iter().enumerate() {
            out += &format!("phi {} := {}\n", self.alphabet[x], self.circuit.to_text(root));
        }
        out += &format!("phi eps := {}\n", self.circuit.to_text(self.phi_eps));
        out += &format!("p0={} pf={}\n", self.bits_text(self.p0), self.bits_text(self.pf));
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(|l| l.split('#').next().unwrap().trim()).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty succinct file".into()))?;
        let mut bits = None;
        let mut syms: Option<Vec<String>> = None;
        let mut words = header.split_whitespace();
        if words.next() != Some("succinct") {
            return Err(Error::Parse(format!("bad header {header:?}")));
        }
        for w in words {
            if let Some(v) = w.strip_prefix("n=") {
                bits = Some(v.parse::<u32>().map_err(|_| Error::Parse(format!("bad bit length {v:?}")))?);
            } else if let Some(v) = w.strip_prefix("alphabet=") {
                syms = Some(v.split(',').filter(|s| !s.is_empty()).map(str::to_string).collect());
            } else {
                return Err(Error::Parse(format!("unknown header field {w:?}")));
            }
        }
        let bits = bits.ok_or_else(|| Error::Parse("missing n=".into()))?;
        let syms = syms.ok_or_else(|| Error::Parse("missing alphabet=".into()))?;
        let mut circuit = Circuit::new();
        let mut phi: Vec<Option<NodeId>> = vec![None; syms.len()];
        let mut phi_eps = None;
        let mut ends = None;
        for line in lines {
            if let Some(rest) = line.strip_prefix("phi ") {
                let (sym, formula) = rest.split_once(":=").ok_or_else(|| Error::Parse(format!("bad line {line:?}")))?;
                let root = circuit.parse(formula.trim())?;
                let slot = match sym.trim() {
                    "eps" => &mut phi_eps,
                    s => {
                        let x = syms.iter().position(|y| y == s).ok_or_else(|| Error::Parse(format!("unknown letter {s:?}")))?;
                        &mut phi[x]
                    }
                };
                if slot.replace(root).is_some() {
                    return Err(Error::Parse(format!("duplicate formula for {}", sym.trim())));
                }
            } else if line.starts_with("p0=") {
                let mut p0 = None;
                let mut pf = None;
                for w in line.split_whitespace() {
                    let (key, v) = w.split_once('=').ok_or_else(|| Error::Parse(format!("bad field {w:?}")))?;
                    let value = parse_bits(v, bits)?;
                    match key {
                        "p0" => p0 = Some(value),
                        "pf" => pf = Some(value),
                        _ => return Err(Error::Parse(format!("unknown field {key:?}"))),
                    }
                }
                ends = Some((p0.ok_or_else(|| Error::Parse("missing p0".into()))?, pf.ok_or_else(|| Error::Parse("missing pf".into()))?));
            } else {
                return Err(Error::Parse(format!("bad line {line:?}")));
            }
        }
        let (p0, pf) = ends.ok_or_else(|| Error::Parse("missing p0/pf line".into()))?;
        let falsum = circuit.konst(false);
        let phi = phi.into_iter().map(|r| r.unwrap_or(falsum)).collect();
        let phi_eps = phi_eps.unwrap_or(falsum);
        SuccinctAutomaton::new(bits, alphabet(syms), circuit, phi, phi_eps, p0, pf)
    }
}

fn parse_bits(s: &str, bits: u32) -> Result<u64> {
    if s.len() != bits as usize {
        return Err(Error::Parse(format!("bit string {s:?} does not have length {bits}")));
    }
    s.chars().enumerate().try_fold(0u64, |acc, (i, c)| match c {
        '0' => Ok(acc),
        '1' => Ok(acc | 1 << i),
        _ => Err(Error::Parse(format!("bad bit string {s:?}"))),
    })
}

fn bit_width(max: u64) -> u32 {
    (u64::BITS - max.leading_zeros()).max(1)
}

fn cube(c: &mut Circuit, bits: u32, value: u64, primed: bool, out: &mut Vec<NodeId>) {
    for i in 0..bits {
        let v = c.var(i, primed);
        out.push(if value >> i & 1 == 1 { v } else { c.not(v) });
    }
}

/// Binary state encoding of a trimmed NFA; `φ_x` is the disjunction of the
/// edge cubes. Fresh states merge several initial or final states.
pub fn nfa_to_succinct(nfa: &Nfa) -> SuccinctAutomaton {
    let n = nfa.num_states();
    let mut fwd = vec![false; n];
    let mut stack: Vec<u32> = nfa.initials().to_vec();
    for &s in &stack {
        fwd[s as usize] = true;
    }
    while let Some(s) = stack.pop() {
        for &(_, d) in nfa.transitions(s) {
            if !fwd[d as usize] {
                fwd[d as usize] = true;
                stack.push(d);
            }
        }
    }
    let mut preds = vec![Vec::new(); n];
    for s in 0..n as u32 {
        for &(_, d) in nfa.transitions(s) {
            preds[d as usize].push(s);
        }
    }
    let mut bwd = vec![false; n];
    let mut stack: Vec<u32> = (0..n as u32).filter(|&s| nfa.is_final(s)).collect();
    for &s in &stack {
        bwd[s as usize] = true;
    }
    while let Some(s) = stack.pop() {
        for &p in &preds[s as usize] {
            if !bwd[p as usize] {
                bwd[p as usize] = true;
                stack.push(p);
            }
        }
    }
    let mut id = vec![u64::MAX; n];
    let mut count = 0u64;
    for s in 0..n {
        if fwd[s] && bwd[s] {
            id[s] = count;
            count += 1;
        }
    }
    let mut edges: Vec<(u64, Option<Sym>, u64)> = Vec::new();
    for s in 0..n as u32 {
        if id[s as usize] == u64::MAX {
            continue;
        }
        for &(x, d) in nfa.transitions(s) {
            if id[d as usize] != u64::MAX {
                edges.push((id[s as usize], x, id[d as usize]));
            }
        }
    }
    let inits: Vec<u64> = nfa.initials().iter().map(|&s| id[s as usize]).filter(|&i| i != u64::MAX).collect();
    let finals: Vec<u64> = (0..n as u32).filter(|&s| nfa.is_final(s)).map(|s| id[s as usize]).filter(|&i| i != u64::MAX).collect();
    let p0 = if inits.len() == 1 {
        inits[0]
    } else {
        count += 1;
        for &i in &inits {
            edges.push((count - 1, None, i));
        }
        count - 1
    };
    let pf = if finals.len() == 1 {
        finals[0]
    } else {
        count += 1;
        for &f in &finals {
            edges.push((f, None, count - 1));
        }
        count - 1
    };
    let bits = bit_width(count - 1);
    let mut c = Circuit::new();
    let mut per_sym: Vec<Vec<NodeId>> = vec![Vec::new(); nfa.alphabet().len() + 1];
    for (s, x, d) in edges {
        let mut lits = Vec::new();
        cube(&mut c, bits, s, false, &mut lits);
        cube(&mut c, bits, d, true, &mut lits);
        let conj = c.and(lits);
        per_sym[x.map_or(nfa.alphabet().len(), |x| x as usize)].push(conj);
    }
    let mut roots: Vec<NodeId> = per_sym.into_iter().map(|v| c.or(v)).collect();
    let phi_eps = roots.pop().unwrap();
    SuccinctAutomaton::new(bits, nfa.alphabet().clone(), c, roots, phi_eps, p0, pf).expect("encoding fits")
}

/// Little-endian bit vectors over circuit nodes.
struct Bv<'c> {
    c: &'c mut Circuit,
}

impl Bv<'_> {
    fn vars(&mut self, width: u32, primed: bool) -> Vec<NodeId> {
        (0..width).map(|i| self.c.var(i, primed)).collect()
    }

    fn konst(&mut self, v: u64, width: u32) -> Vec<NodeId> {
        (0..width).map(|i| self.c.konst(v >> i & 1 == 1)).collect()
    }

    fn bit(&mut self, a: &[NodeId], i: usize) -> NodeId {
        a.get(i).copied().unwrap_or_else(|| self.c.konst(false))
    }

    fn add(&mut self, a: &[NodeId], b: &[NodeId]) -> Vec<NodeId> {
        let w = a.len().max(b.len());
        let mut carry = self.c.konst(false);
        let mut out = Vec::with_capacity(w + 1);
        for i in 0..w {
            let (x, y) = (self.bit(a, i), self.bit(b, i));
            let xy = self.c.xor(x, y);
            out.push(self.c.xor(xy, carry));
            let both = self.c.and(vec![x, y]);
            let prop = self.c.and(vec![xy, carry]);
            carry = self.c.or(vec![both, prop]);
        }
        out.push(carry);
        out
    }

    fn mul_const(&mut self, a: &[NodeId], k: u64) -> Vec<NodeId> {
        let mut acc = self.konst(0, 1);
        for j in 0..u64::BITS {
            if k >> j & 1 == 1 {
                let f = self.c.konst(false);
                let shifted: Vec<NodeId> = std::iter::repeat(f).take(j as usize).chain(a.iter().copied()).collect();
                acc = self.add(&acc, &shifted);
            }
        }
        acc
    }

    fn eq(&mut self, a: &[NodeId], b: &[NodeId]) -> NodeId {
        let w = a.len().max(b.len());
        let lits = (0..w)
            .map(|i| {
                let (x, y) = (self.bit(a, i), self.bit(b, i));
                self.c.iff(x, y)
            })
            .collect();
        self.c.and(lits)
    }

    fn lt(&mut self, a: &[NodeId], b: &[NodeId]) -> NodeId {
        let mut lt = self.c.konst(false);
        for i in 0..a.len().max(b.len()) {
            let (x, y) = (self.bit(a, i), self.bit(b, i));
            let nx = self.c.not(x);
            let here = self.c.and(vec![nx, y]);
            let same = self.c.iff(x, y);
            let below = self.c.and(vec![same, lt]);
            lt = self.c.or(vec![here, below]);
        }
        lt
    }
}

/// Digit words (most significant first, letters `0..q-1`) whose value is
/// divisible by `d`, and those whose value exceeds `b`. States are the
/// remainder and the value clipped at `b + 1`.
pub fn succinct_int_predicates(d: u64, b: u64, q: u32) -> Result<(SuccinctAutomaton, SuccinctAutomaton)> {
    if d == 0 {
        return Err(Error::InvalidArgument("modulus must be positive".into()));
    }
    if q < 2 {
        return Err(Error::InvalidArgument("base must be at least 2".into()));
    }
    if b >= 1 << 62 || d >= 1 << 62 {
        return Err(Error::InvalidArgument("bound too large".into()));
    }
    let digits = alphabet((0..q).map(|x| x.to_string()));

    let w = bit_width(d - 1);
    let mut c = Circuit::new();
    let mut bv = Bv { c: &mut c };
    let r = bv.vars(w, false);
    let r2 = bv.vars(w, true);
    let dk = bv.konst(d, w + 1);
    let lt_r = bv.lt(&r, &dk);
    let lt_r2 = bv.lt(&r2, &dk);
    let qr = bv.mul_const(&r, q as u64);
    let mut phi = Vec::new();
    for x in 0..q as u64 {
        let xk = bv.konst(x, bit_width(x));
        let lhs = bv.add(&qr, &xk);
        // q·r + x = r' + j·d for some j < q
        let cases = (0..q as u64)
            .map(|j| {
                let jd = bv.konst(j * d, bit_width(j * d));
                let rhs = bv.add(&r2, &jd);
                bv.eq(&lhs, &rhs)
            })
            .collect();
        let some = bv.c.or(cases);
        phi.push(bv.c.and(vec![lt_r, lt_r2, some]));
    }
    let eps = c.konst(false);
    let modulus = SuccinctAutomaton::new(w, digits.clone(), c, phi, eps, 0, 0)?;

    let cap = b + 1;
    let w = bit_width(cap);
    let mut c = Circuit::new();
    let mut bv = Bv { c: &mut c };
    let v = bv.vars(w, false);
    let v2 = bv.vars(w, true);
    let capk = bv.konst(cap, w);
    let over = bv.lt(&capk, &v);
    let valid = bv.c.not(over);
    let qv = bv.mul_const(&v, q as u64);
    let mut phi = Vec::new();
    for x in 0..q as u64 {
        let xk = bv.konst(x, bit_width(x));
        let s = bv.add(&qv, &xk);
        let below = bv.lt(&s, &capk);
        let at_cap = bv.eq(&v2, &capk);
        let exact = bv.eq(&v2, &s);
        let clipped = bv.c.not(below);
        let l = bv.c.and(vec![clipped, at_cap]);
        let r = bv.c.and(vec![below, exact]);
        let step = bv.c.or(vec![l, r]);
        phi.push(bv.c.and(vec![valid, step]));
    }
    let eps = c.konst(false);
    let threshold = SuccinctAutomaton::new(w, digits, c, phi, eps, 0, cap)?;
    Ok((modulus, threshold))
}

/// Digit word of `n` in base `q` (most significant first), as letters of
/// the alphabet of [`succinct_int_predicates`].
pub fn digit_word(mut n: u64, q: u32) -> Vec<Sym> {
    let mut out = Vec::new();
    while n > 0 {
        out.push((n % q as u64) as Sym);
        n /= q as u64;
    }
    out.reverse();
    out
}
