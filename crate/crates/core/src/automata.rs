//! Finite automata and letter-aligned transducers over finite alphabets.
//!
//! Symbols are indices into a shared alphabet of printable names. Minimal DFAs are
//! numbered in breadth-first order from the initial state, so two minimal DFAs for
//! the same language over the same alphabet are structurally equal.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;
use std::hash::Hash;
use std::sync::Arc;

use crate::error::{parse_err, Error, Result};

pub type Sym = u32;
pub type Alphabet = Arc<Vec<String>>;

pub fn alphabet<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Alphabet {
    Arc::new(names.into_iter().map(Into::into).collect())
}

/// Nondeterministic automaton with ε-transitions (`None` labels).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    trans: Vec<Vec<(Option<Sym>, u32)>>,
    initials: Vec<u32>,
    finals: Vec<bool>,
}

impl Nfa {
    pub fn new(alphabet: Alphabet) -> Self {
        Nfa { alphabet, trans: Vec::new(), initials: Vec::new(), finals: Vec::new() }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.trans.len()
    }

    pub fn add_state(&mut self, is_final: bool) -> u32 {
        self.trans.push(Vec::new());
        self.finals.push(is_final);
        (self.trans.len() - 1) as u32
    }

    pub fn add_initial(&mut self, s: u32) {
        if !self.initials.contains(&s) {
            self.initials.push(s);
        }
    }

    pub fn set_final(&mut self, s: u32, f: bool) {
        self.finals[s as usize] = f;
    }

    pub fn add_transition(&mut self, src: u32, sym: Option<Sym>, dst: u32) {
        debug_assert!(sym.map_or(true, |x| (x as usize) < self.alphabet.len()));
        self.trans[src as usize].push((sym, dst));
    }

    pub fn initials(&self) -> &[u32] {
        &self.initials
    }

    pub fn is_final(&self, s: u32) -> bool {
        self.finals[s as usize]
    }

    pub fn transitions(&self, s: u32) -> &[(Option<Sym>, u32)] {
        &self.trans[s as usize]
    }

    fn closure(&self, set: &mut Vec<u32>, mark: &mut [bool]) {
        let mut stack: Vec<u32> = set.clone();
        while let Some(s) = stack.pop() {
            for &(sym, d) in &self.trans[s as usize] {
                if sym.is_none() && !mark[d as usize] {
                    mark[d as usize] = true;
                    set.push(d);
                    stack.push(d);
                }
            }
        }
    }

    pub fn accepts(&self, word: &[Sym]) -> bool {
        let n = self.num_states();
        let mut mark = vec![false; n];
        let mut cur: Vec<u32> = Vec::new();
        for &i in &self.initials {
            if !mark[i as usize] {
                mark[i as usize] = true;
                cur.push(i);
            }
        }
        self.closure(&mut cur, &mut mark);
        for &x in word {
            let mut mark = vec![false; n];
            let mut next = Vec::new();
            for &s in &cur {
                for &(sym, d) in &self.trans[s as usize] {
                    if sym == Some(x) && !mark[d as usize] {
                        mark[d as usize] = true;
                        next.push(d);
                    }
                }
            }
            self.closure(&mut next, &mut mark);
            cur = next;
        }
        cur.iter().any(|&s| self.finals[s as usize])
    }

    /// Reversed automaton (initial and final roles swapped).
    pub fn reversed(&self) -> Nfa {
        let mut r = Nfa::new(self.alphabet.clone());
        for s in 0..self.num_states() {
            r.add_state(self.initials.contains(&(s as u32)));
        }
        for (s, ts) in self.trans.iter().enumerate() {
            for &(sym, d) in ts {
                r.add_transition(d, sym, s as u32);
            }
        }
        for (s, &f) in self.finals.iter().enumerate() {
            if f {
                r.add_initial(s as u32);
            }
        }
        r
    }

    pub fn dump(&self) -> String {
        let mut out = String::from("nfa\n");
        let _ = writeln!(out, "alphabet {}", self.alphabet.join(" "));
        let _ = writeln!(out, "states {}", self.num_states());
        let mut inits = self.initials.clone();
        inits.sort_unstable();
        let _ = writeln!(out, "initial {}", join_nums(&inits));
        let finals: Vec<u32> = (0..self.num_states() as u32).filter(|&s| self.is_final(s)).collect();
        let _ = writeln!(out, "final {}", join_nums(&finals));
        let mut lines: Vec<(u32, Option<Sym>, u32)> = Vec::new();
        for (s, ts) in self.trans.iter().enumerate() {
            for &(sym, d) in ts {
                lines.push((s as u32, sym, d));
            }
        }
        lines.sort_unstable();
        lines.dedup();
        for (s, sym, d) in lines {
            let name = sym.map_or("<eps>", |x| self.alphabet[x as usize].as_str());
            let _ = writeln!(out, "{s} {name} {d}");
        }
        out
    }
}

fn join_nums(v: &[u32]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Complete deterministic automaton.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dfa {
    alphabet: Alphabet,
    trans: Vec<u32>,
    initial: u32,
    finals: Vec<bool>,
}

impl Dfa {
    /// Builds from a flat transition table (`states * |alphabet|`).
    pub fn from_parts(alphabet: Alphabet, trans: Vec<u32>, initial: u32, finals: Vec<bool>) -> Result<Self> {
        let k = alphabet.len();
        if k == 0 || trans.len() != finals.len() * k || (initial as usize) >= finals.len() {
            return Err(Error::InvalidArgument("malformed transition table".into()));
        }
        if trans.iter().any(|&d| (d as usize) >= finals.len()) {
            return Err(Error::InvalidArgument("transition to undeclared state".into()));
        }
        Ok(Dfa { alphabet, trans, initial, finals })
    }

    /// One-state automaton accepting nothing.
    pub fn empty(alphabet: Alphabet) -> Self {
        let k = alphabet.len();
        Dfa { alphabet, trans: vec![0; k], initial: 0, finals: vec![false] }
    }

    /// One-state automaton accepting every word.
    pub fn all(alphabet: Alphabet) -> Self {
        let k = alphabet.len();
        Dfa { alphabet, trans: vec![0; k], initial: 0, finals: vec![true] }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.finals.len()
    }

    pub fn num_symbols(&self) -> usize {
        self.alphabet.len()
    }

    pub fn initial(&self) -> u32 {
        self.initial
    }

    pub fn is_final(&self, s: u32) -> bool {
        self.finals[s as usize]
    }

    /// Flat transition table, `states * |alphabet|` entries.
    pub fn table(&self) -> &[u32] {
        &self.trans
    }

    pub fn step(&self, s: u32, x: Sym) -> u32 {
        self.trans[s as usize * self.alphabet.len() + x as usize]
    }

    pub fn run(&self, word: &[Sym]) -> u32 {
        word.iter().fold(self.initial, |s, &x| self.step(s, x))
    }

    pub fn accepts(&self, word: &[Sym]) -> bool {
        self.is_final(self.run(word))
    }

    pub fn to_nfa(&self) -> Nfa {
        let mut n = Nfa::new(self.alphabet.clone());
        for s in 0..self.num_states() {
            n.add_state(self.finals[s]);
        }
        for s in 0..self.num_states() as u32 {
            for x in 0..self.num_symbols() as Sym {
                n.add_transition(s, Some(x), self.step(s, x));
            }
        }
        n.add_initial(self.initial);
        n
    }

    fn check_alphabet(&self, other: &Dfa) -> Result<()> {
        if self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    /// Reachable product, minimized, with acceptance combined by `f`.
    pub fn product(&self, other: &Dfa, f: impl Fn(bool, bool) -> bool) -> Result<Dfa> {
        self.check_alphabet(other)?;
        let k = self.num_symbols();
        let mut index: HashMap<(u32, u32), u32> = HashMap::new();
        let mut pairs = vec![(self.initial, other.initial)];
        index.insert(pairs[0], 0);
        let mut trans = Vec::new();
        let mut i = 0;
        while i < pairs.len() {
            let (a, b) = pairs[i];
            for x in 0..k as Sym {
                let p = (self.step(a, x), other.step(b, x));
                let next = pairs.len() as u32;
                let id = *index.entry(p).or_insert_with(|| {
                    pairs.push(p);
                    next
                });
                trans.push(id);
            }
            i += 1;
        }
        let finals = pairs.iter().map(|&(a, b)| f(self.is_final(a), other.is_final(b))).collect();
        Ok(minimize(&Dfa { alphabet: self.alphabet.clone(), trans, initial: 0, finals }))
    }

    pub fn union(&self, other: &Dfa) -> Result<Dfa> {
        self.product(other, |a, b| a || b)
    }

    pub fn intersect(&self, other: &Dfa) -> Result<Dfa> {
        self.product(other, |a, b| a && b)
    }

    pub fn difference(&self, other: &Dfa) -> Result<Dfa> {
        self.product(other, |a, b| a && !b)
    }

    /// `universe \ L(self)`.
    pub fn complement(&self, universe: &Dfa) -> Result<Dfa> {
        universe.difference(self)
    }

    /// A length-lexicographically least word of `L(self) \ L(other)`, if any.
    pub fn inclusion_counterexample(&self, other: &Dfa) -> Result<Option<Vec<Sym>>> {
        Ok(self.difference(other)?.shortest_word())
    }

    pub fn includes_in(&self, other: &Dfa) -> Result<bool> {
        Ok(self.inclusion_counterexample(other)?.is_none())
    }

    pub fn equivalent(&self, other: &Dfa) -> Result<bool> {
        Ok(self.includes_in(other)? && other.includes_in(self)?)
    }

    pub fn is_empty(&self) -> bool {
        self.shortest_word().is_none()
    }

    /// Minimum-length accepted word, ties broken lexicographically.
    pub fn shortest_word(&self) -> Option<Vec<Sym>> {
        let n = self.num_states();
        let mut parent: Vec<Option<(u32, Sym)>> = vec![None; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        seen[self.initial as usize] = true;
        queue.push_back(self.initial);
        while let Some(s) = queue.pop_front() {
            if self.is_final(s) {
                let mut word = Vec::new();
                let mut cur = s;
                while let Some((p, x)) = parent[cur as usize] {
                    word.push(x);
                    cur = p;
                }
                word.reverse();
                return Some(word);
            }
            for x in 0..self.num_symbols() as Sym {
                let d = self.step(s, x);
                if !seen[d as usize] {
                    seen[d as usize] = true;
                    parent[d as usize] = Some((s, x));
                    queue.push_back(d);
                }
            }
        }
        None
    }

    /// Minimum number of steps from each state to a final state.
    fn distance_to_final(&self) -> Vec<Option<usize>> {
        let n = self.num_states();
        let mut rev: Vec<Vec<u32>> = vec![Vec::new(); n];
        for s in 0..n as u32 {
            for x in 0..self.num_symbols() as Sym {
                rev[self.step(s, x) as usize].push(s);
            }
        }
        let mut dist = vec![None; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            if self.finals[s] {
                dist[s] = Some(0);
                queue.push_back(s as u32);
            }
        }
        while let Some(s) = queue.pop_front() {
            let d = dist[s as usize].unwrap();
            for &p in &rev[s as usize] {
                if dist[p as usize].is_none() {
                    dist[p as usize] = Some(d + 1);
                    queue.push_back(p);
                }
            }
        }
        dist
    }

    /// Accepted words of length at most `max_len`, in length-lexicographic order.
    pub fn enumerate(&self, max_len: usize) -> Vec<Vec<Sym>> {
        let dist = self.distance_to_final();
        let mut out = Vec::new();
        let mut word = Vec::new();
        for len in 0..=max_len {
            self.enum_rec(self.initial, len, &dist, &mut word, &mut out);
        }
        out
    }

    fn enum_rec(&self, s: u32, left: usize, dist: &[Option<usize>], word: &mut Vec<Sym>, out: &mut Vec<Vec<Sym>>) {
        match dist[s as usize] {
            Some(d) if d <= left => {}
            _ => return,
        }
        if left == 0 {
            out.push(word.clone());
            return;
        }
        for x in 0..self.num_symbols() as Sym {
            word.push(x);
            self.enum_rec(self.step(s, x), left - 1, dist, word, out);
            word.pop();
        }
    }

    pub fn word_to_text(&self, word: &[Sym]) -> String {
        word.iter().map(|&x| self.alphabet[x as usize].as_str()).collect::<Vec<_>>().join(" ")
    }

    pub fn word_from_names(&self, names: &[&str]) -> Result<Vec<Sym>> {
        names
            .iter()
            .map(|n| {
                self.alphabet
                    .iter()
                    .position(|a| a == n)
                    .map(|i| i as Sym)
                    .ok_or_else(|| Error::Parse(format!("unknown symbol {n:?}")))
            })
            .collect()
    }

    /// Stable text dump: header, alphabet, state count, initial, finals, sorted transitions.
    pub fn dump(&self) -> String {
        let mut out = String::from("dfa\n");
        let _ = writeln!(out, "alphabet {}", self.alphabet.join(" "));
        let _ = writeln!(out, "states {}", self.num_states());
        let _ = writeln!(out, "initial {}", self.initial);
        let finals: Vec<u32> = (0..self.num_states() as u32).filter(|&s| self.is_final(s)).collect();
        let _ = writeln!(out, "final {}", join_nums(&finals));
        for s in 0..self.num_states() as u32 {
            for x in 0..self.num_symbols() as Sym {
                let _ = writeln!(out, "{s} {} {}", self.alphabet[x as usize], self.step(s, x));
            }
        }
        out
    }

    /// Parses [`Dfa::dump`] output; missing transitions go to a fresh rejecting sink.
    pub fn parse(text: &str) -> Result<Dfa> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        if lines.next() != Some("dfa") {
            return parse_err("expected 'dfa' header");
        }
        let mut field = |name: &str| -> Result<Vec<String>> {
            let line = lines.next().ok_or_else(|| Error::Parse(format!("missing {name} line")))?;
            let mut parts = line.split_whitespace();
            if parts.next() != Some(name) {
                return parse_err(format!("expected {name} line, found {line:?}"));
            }
            Ok(parts.map(String::from).collect())
        };
        let names = field("alphabet")?;
        let nstates: usize = field("states")?
            .first()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Parse("bad state count".into()))?;
        let initial: u32 = field("initial")?
            .first()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Parse("bad initial state".into()))?;
        let final_list = field("final")?;
        let alpha = alphabet(names);
        let k = alpha.len();
        let sink = nstates as u32;
        let mut trans = vec![sink; (nstates + 1) * k];
        let mut finals = vec![false; nstates + 1];
        for f in final_list {
            let f: usize = f.parse().map_err(|_| Error::Parse(format!("bad final state {f:?}")))?;
            if f >= nstates {
                return parse_err("final state out of range");
            }
            finals[f] = true;
        }
        for line in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 3 {
                return parse_err(format!("bad transition line {line:?}"));
            }
            let s: usize = parts[0].parse().map_err(|_| Error::Parse(format!("bad state in {line:?}")))?;
            let d: u32 = parts[2].parse().map_err(|_| Error::Parse(format!("bad state in {line:?}")))?;
            let x = alpha
                .iter()
                .position(|a| a == parts[1])
                .ok_or_else(|| Error::Parse(format!("unknown symbol {:?}", parts[1])))?;
            if s >= nstates || d as usize >= nstates {
                return parse_err(format!("state out of range in {line:?}"));
            }
            trans[s * k + x] = d;
        }
        if initial as usize >= nstates {
            return parse_err("initial state out of range");
        }
        Ok(minimize(&Dfa { alphabet: alpha, trans, initial, finals }))
    }
}

/// States of a complete DFA from which a final state is reachable.
pub fn live_states(d: &Dfa) -> Vec<bool> {
    let n = d.num_states();
    let mut rev: Vec<Vec<u32>> = vec![Vec::new(); n];
    for s in 0..n as u32 {
        for x in 0..d.num_symbols() as Sym {
            rev[d.step(s, x) as usize].push(s);
        }
    }
    let mut live: Vec<bool> = (0..n as u32).map(|s| d.is_final(s)).collect();
    let mut stack: Vec<u32> = (0..n as u32).filter(|&s| live[s as usize]).collect();
    while let Some(s) = stack.pop() {
        for &p in &rev[s as usize] {
            if !live[p as usize] {
                live[p as usize] = true;
                stack.push(p);
            }
        }
    }
    live
}

/// Subset construction; also returns the NFA state set behind each DFA state.
pub fn subset_construction(nfa: &Nfa) -> (Dfa, Vec<Vec<u32>>) {
    let n = nfa.num_states();
    let k = nfa.alphabet.len();
    let mut by_sym: Vec<Vec<(Sym, u32)>> = vec![Vec::new(); n];
    let mut eps: Vec<Vec<u32>> = vec![Vec::new(); n];
    for s in 0..n {
        for &(sym, d) in &nfa.trans[s] {
            match sym {
                Some(x) => by_sym[s].push((x, d)),
                None => eps[s].push(d),
            }
        }
        by_sym[s].sort_unstable();
        by_sym[s].dedup();
    }
    let mut mark = vec![u32::MAX; n];
    let mut stamp = 0u32;
    let close = |set: &mut Vec<u32>, mark: &mut Vec<u32>, stamp: u32| {
        let mut stack = set.clone();
        while let Some(s) = stack.pop() {
            for &d in &eps[s as usize] {
                if mark[d as usize] != stamp {
                    mark[d as usize] = stamp;
                    set.push(d);
                    stack.push(d);
                }
            }
        }
        set.sort_unstable();
    };
    let mut start: Vec<u32> = Vec::new();
    for &i in &nfa.initials {
        if mark[i as usize] != stamp {
            mark[i as usize] = stamp;
            start.push(i);
        }
    }
    close(&mut start, &mut mark, stamp);
    let mut index: HashMap<Vec<u32>, u32> = HashMap::new();
    let mut subsets = vec![start.clone()];
    index.insert(start, 0);
    let mut trans: Vec<u32> = Vec::new();
    let mut buckets: Vec<Vec<u32>> = vec![Vec::new(); k];
    let mut i = 0;
    while i < subsets.len() {
        for b in buckets.iter_mut() {
            b.clear();
        }
        for &s in &subsets[i] {
            for &(x, d) in &by_sym[s as usize] {
                buckets[x as usize].push(d);
            }
        }
        for x in 0..k {
            stamp += 1;
            let mut set: Vec<u32> = Vec::with_capacity(buckets[x].len());
            for &d in &buckets[x] {
                if mark[d as usize] != stamp {
                    mark[d as usize] = stamp;
                    set.push(d);
                }
            }
            close(&mut set, &mut mark, stamp);
            let next = subsets.len() as u32;
            let id = match index.get(&set) {
                Some(&id) => id,
                None => {
                    index.insert(set.clone(), next);
                    subsets.push(set);
                    next
                }
            };
            trans.push(id);
        }
        i += 1;
    }
    let finals = subsets.iter().map(|set| set.iter().any(|&s| nfa.finals[s as usize])).collect();
    (Dfa { alphabet: nfa.alphabet.clone(), trans, initial: 0, finals }, subsets)
}

pub fn determinize(nfa: &Nfa) -> Dfa {
    subset_construction(nfa).0
}

/// Minimal complete DFA, numbered canonically.
pub fn minimize(dfa: &Dfa) -> Dfa {
    let k = dfa.num_symbols();
    // restrict to reachable states
    let n0 = dfa.num_states();
    let mut order = vec![dfa.initial];
    let mut seen = vec![false; n0];
    seen[dfa.initial as usize] = true;
    let mut i = 0;
    while i < order.len() {
        let s = order[i];
        for x in 0..k as Sym {
            let d = dfa.step(s, x);
            if !seen[d as usize] {
                seen[d as usize] = true;
                order.push(d);
            }
        }
        i += 1;
    }
    let mut local = vec![u32::MAX; n0];
    for (j, &s) in order.iter().enumerate() {
        local[s as usize] = j as u32;
    }
    let n = order.len();
    let succ: Vec<u32> = order
        .iter()
        .flat_map(|&s| (0..k as Sym).map(move |x| (s, x)))
        .map(|(s, x)| local[dfa.step(s, x) as usize])
        .collect();
    // Moore refinement
    let mut class: Vec<u32> = order.iter().map(|&s| dfa.is_final(s) as u32).collect();
    let mut nclasses = {
        let mut v = class.clone();
        v.sort_unstable();
        v.dedup();
        v.len()
    };
    loop {
        let mut sig_index: HashMap<Vec<u32>, u32> = HashMap::new();
        let mut next = vec![0u32; n];
        let mut sig = Vec::with_capacity(k + 1);
        for s in 0..n {
            sig.clear();
            sig.push(class[s]);
            for x in 0..k {
                sig.push(class[succ[s * k + x] as usize]);
            }
            let len = sig_index.len() as u32;
            next[s] = *sig_index.entry(sig.clone()).or_insert(len);
        }
        let count = sig_index.len();
        class = next;
        if count == nclasses {
            break;
        }
        nclasses = count;
    }
    // canonical numbering by BFS over classes
    let mut rep = vec![u32::MAX; nclasses];
    for s in 0..n {
        if rep[class[s] as usize] == u32::MAX {
            rep[class[s] as usize] = s as u32;
        }
    }
    let mut canon = vec![u32::MAX; nclasses];
    let mut queue = vec![class[0]];
    canon[class[0] as usize] = 0;
    let mut i = 0;
    while i < queue.len() {
        let c = queue[i];
        let s = rep[c as usize] as usize;
        for x in 0..k {
            let d = class[succ[s * k + x] as usize];
            if canon[d as usize] == u32::MAX {
                canon[d as usize] = queue.len() as u32;
                queue.push(d);
            }
        }
        i += 1;
    }
    let mut trans = vec![0u32; nclasses * k];
    let mut finals = vec![false; nclasses];
    for &c in &queue {
        let s = rep[c as usize] as usize;
        let cs = canon[c as usize] as usize;
        finals[cs] = dfa.is_final(order[s]);
        for x in 0..k {
            trans[cs * k + x] = canon[class[succ[s * k + x] as usize] as usize];
        }
    }
    Dfa { alphabet: dfa.alphabet.clone(), trans, initial: 0, finals }
}

pub fn determinize_minimize(nfa: &Nfa) -> Dfa {
    minimize(&determinize(nfa))
}

/// Builds an NFA by exploring an implicit state space from `inits`.
///
/// `succ` pushes labelled successors; the result also lists the explored states
/// in index order. Fails once more than `limit` states are discovered.
pub fn explore<S, F, G>(alphabet: Alphabet, inits: Vec<S>, mut succ: F, is_final: G, limit: usize) -> Result<(Nfa, Vec<S>)>
where
    S: Hash + Eq + Clone,
    F: FnMut(&S, &mut Vec<(Option<Sym>, S)>),
    G: Fn(&S) -> bool,
{
    let mut nfa = Nfa::new(alphabet);
    let mut index: HashMap<S, u32> = HashMap::new();
    let mut states: Vec<S> = Vec::new();
    for s in inits {
        let id = match index.get(&s) {
            Some(&id) => id,
            None => {
                let id = nfa.add_state(is_final(&s));
                index.insert(s.clone(), id);
                states.push(s);
                id
            }
        };
        nfa.add_initial(id);
    }
    let mut buf = Vec::new();
    let mut i = 0;
    while i < states.len() {
        buf.clear();
        let cur = states[i].clone();
        succ(&cur, &mut buf);
        for (sym, t) in buf.drain(..) {
            let id = match index.get(&t) {
                Some(&id) => id,
                None => {
                    if states.len() >= limit {
                        return Err(Error::LimitExceeded(format!("more than {limit} automaton states")));
                    }
                    let id = nfa.add_state(is_final(&t));
                    index.insert(t.clone(), id);
                    states.push(t);
                    id
                }
            };
            nfa.add_transition(i as u32, sym, id);
        }
        i += 1;
    }
    Ok((nfa, states))
}

/// Letter-aligned transducer; `None` on either tape is the padding blank.
#[derive(Debug, Clone)]
pub struct Transducer {
    input: Alphabet,
    output: Alphabet,
    trans: Vec<Vec<(Option<Sym>, Option<Sym>, u32)>>,
    initials: Vec<u32>,
    finals: Vec<bool>,
}

impl Transducer {
    pub fn new(input: Alphabet, output: Alphabet) -> Self {
        Transducer { input, output, trans: Vec::new(), initials: Vec::new(), finals: Vec::new() }
    }

    pub fn add_state(&mut self, is_final: bool) -> u32 {
        self.trans.push(Vec::new());
        self.finals.push(is_final);
        (self.trans.len() - 1) as u32
    }

    pub fn add_initial(&mut self, s: u32) {
        self.initials.push(s);
    }

    /// Adds a letter pair; the pair of two blanks is rejected.
    pub fn add_transition(&mut self, src: u32, input: Option<Sym>, output: Option<Sym>, dst: u32) -> Result<()> {
        if input.is_none() && output.is_none() {
            return Err(Error::InvalidArgument("blank on both tapes".into()));
        }
        self.trans[src as usize].push((input, output, dst));
        Ok(())
    }

    /// Same-alphabet identity relation.
    pub fn identity(alpha: Alphabet) -> Self {
        let mut t = Transducer::new(alpha.clone(), alpha.clone());
        let s = t.add_state(true);
        t.add_initial(s);
        for x in 0..alpha.len() as Sym {
            t.trans[0].push((Some(x), Some(x), s));
        }
        t
    }

    /// Image of `l` under the relation: `{v | ∃u ∈ L(l), (u, v) ∈ T}`.
    pub fn apply(&self, l: &Dfa) -> Result<Dfa> {
        if *l.alphabet() != self.input {
            return Err(Error::AlphabetMismatch);
        }
        let inits: Vec<(u32, u32)> = self.initials.iter().map(|&s| (s, l.initial())).collect();
        let (nfa, _) = explore(
            self.output.clone(),
            inits,
            |&(s, q), out| {
                for &(i, o, d) in &self.trans[s as usize] {
                    let q2 = match i {
                        Some(x) => l.step(q, x),
                        None => q,
                    };
                    out.push((o, (d, q2)));
                }
            },
            |&(s, q)| self.finals[s as usize] && l.is_final(q),
            usize::MAX,
        )?;
        Ok(determinize_minimize(&nfa))
    }

    /// Whether the pair `(u, v)` is in the relation (brute-force check for tests).
    pub fn relates(&self, u: &[Sym], v: &[Sym]) -> bool {
        let mut seen = std::collections::HashSet::new();
        let mut stack: Vec<(u32, usize, usize)> = self.initials.iter().map(|&s| (s, 0, 0)).collect();
        while let Some((s, i, j)) = stack.pop() {
            if !seen.insert((s, i, j)) {
                continue;
            }
            if i == u.len() && j == v.len() && self.finals[s as usize] {
                return true;
            }
            for &(a, b, d) in &self.trans[s as usize] {
                let ni = match a {
                    Some(x) if i < u.len() && u[i] == x => i + 1,
                    Some(_) => continue,
                    None => i,
                };
                let nj = match b {
                    Some(y) if j < v.len() && v[j] == y => j + 1,
                    Some(_) => continue,
                    None => j,
                };
                stack.push((d, ni, nj));
            }
        }
        false
    }
}

pub fn apply_transducer(t: &Transducer, l: &Dfa) -> Result<Dfa> {
    t.apply(l)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bin() -> Alphabet {
        alphabet(["0", "1"])
    }

    /// (0|1)*1 as an NFA.
    fn ends_in_one() -> Nfa {
        let mut n = Nfa::new(bin());
        let a = n.add_state(false);
        let b = n.add_state(true);
        n.add_initial(a);
        n.add_transition(a, Some(0), a);
        n.add_transition(a, Some(1), a);
        n.add_transition(a, Some(1), b);
        n
    }

    fn star_of(sym: Sym) -> Dfa {
        let mut n = Nfa::new(bin());
        let a = n.add_state(true);
        n.add_initial(a);
        n.add_transition(a, Some(sym), a);
        determinize_minimize(&n)
    }

    /// 0*1
    fn zeros_then_one() -> Dfa {
        let mut n = Nfa::new(bin());
        let a = n.add_state(false);
        let b = n.add_state(true);
        n.add_initial(a);
        n.add_transition(a, Some(0), a);
        n.add_transition(a, Some(1), b);
        determinize_minimize(&n)
    }

    #[test]
    fn determinize_examples() {
        let d = determinize_minimize(&ends_in_one());
        assert_eq!(d.num_states(), 2);
        let empty = determinize_minimize(&Nfa::new(bin()));
        assert_eq!(empty.num_states(), 1);
        assert!(empty.is_empty());
        let mut n = ends_in_one();
        let u = n.add_state(true);
        n.add_transition(u, Some(0), u);
        assert_eq!(determinize_minimize(&n), d);
    }

    #[test]
    fn boolean_examples() {
        let z = star_of(0);
        let o = star_of(1);
        let i = z.intersect(&o).unwrap();
        assert_eq!(i.enumerate(3), vec![Vec::<Sym>::new()]);
        assert_eq!(z.union(&Dfa::empty(bin())).unwrap(), z);
        let all = Dfa::all(bin());
        let d = all.difference(&z).unwrap();
        assert!(d.accepts(&[1, 0]));
        assert!(!d.accepts(&[0, 0]));
        assert_eq!(z.complement(&all).unwrap(), d);
    }

    #[test]
    fn inclusion_examples() {
        let z = star_of(0);
        let all = Dfa::all(bin());
        assert!(z.includes_in(&all).unwrap());
        assert_eq!(all.inclusion_counterexample(&z).unwrap(), Some(vec![1]));
        let mut n = Nfa::new(bin());
        let a = n.add_state(false);
        let b = n.add_state(false);
        let c = n.add_state(true);
        n.add_initial(a);
        n.add_transition(a, None, b);
        n.add_transition(b, Some(0), b);
        n.add_transition(b, Some(1), c);
        assert!(determinize_minimize(&n).equivalent(&zeros_then_one()).unwrap());
        assert_eq!(z.product(&Dfa::all(alphabet(["x"])), |a, _| a), Err(Error::AlphabetMismatch));
    }

    #[test]
    fn enumerate_examples() {
        let d = zeros_then_one();
        assert_eq!(d.enumerate(2), vec![vec![1], vec![0, 1]]);
        assert!(Dfa::empty(bin()).enumerate(4).is_empty());
        let eps = star_of(0).intersect(&star_of(1)).unwrap();
        assert_eq!(eps.enumerate(0), vec![Vec::<Sym>::new()]);
    }

    #[test]
    fn emptiness_examples() {
        assert!(Dfa::empty(bin()).is_empty());
        assert_eq!(zeros_then_one().shortest_word(), Some(vec![1]));
        let mut n = Nfa::new(bin());
        let a = n.add_state(false);
        let b = n.add_state(true);
        n.add_initial(a);
        n.add_transition(a, Some(1), b);
        n.add_transition(b, Some(1), b);
        let ones = determinize_minimize(&n);
        assert!(star_of(0).intersect(&ones).unwrap().is_empty());
    }

    #[test]
    fn transducer_examples() {
        let l = zeros_then_one();
        assert_eq!(Transducer::identity(bin()).apply(&l).unwrap(), l);
        // erase every 1
        let mut t = Transducer::new(bin(), bin());
        let s = t.add_state(true);
        t.add_initial(s);
        t.add_transition(s, Some(0), Some(0), s).unwrap();
        t.add_transition(s, Some(1), None, s).unwrap();
        let mut n = Nfa::new(bin());
        let a = n.add_state(false);
        let b = n.add_state(true);
        n.add_initial(a);
        n.add_transition(a, Some(0), a);
        n.add_transition(a, Some(1), b);
        n.add_transition(b, Some(0), b);
        let img = t.apply(&determinize_minimize(&n)).unwrap();
        assert_eq!(img, star_of(0));
        // append a 1
        let mut t = Transducer::new(bin(), bin());
        let s0 = t.add_state(false);
        let s1 = t.add_state(true);
        t.add_initial(s0);
        t.add_transition(s0, Some(0), Some(0), s0).unwrap();
        t.add_transition(s0, Some(1), Some(1), s0).unwrap();
        t.add_transition(s0, None, Some(1), s1).unwrap();
        let eps = star_of(0).intersect(&star_of(1)).unwrap();
        assert_eq!(t.apply(&eps).unwrap().enumerate(3), vec![vec![1]]);
        assert!(t.add_transition(s0, None, None, s1).is_err());
    }

    #[test]
    fn dump_round_trip() {
        let d = zeros_then_one();
        let text = d.dump();
        assert_eq!(Dfa::parse(&text).unwrap(), d);
        assert!(text.starts_with("dfa\nalphabet 0 1\nstates 3\n"));
        assert!(ends_in_one().dump().contains("0 1 1"));
    }
}
