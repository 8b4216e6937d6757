//! Automata over BS(1,q): file format, edge normalization, runs and state views.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;

use crate::error::{parse_err, Error, Result};
use crate::group::{Gen, GeneratorWord, GroupContext, GroupElement};
use crate::pe::{self, PeWord};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BsEdge {
    pub src: usize,
    pub dst: usize,
    pub label: GeneratorWord,
}

/// Automaton with generator-word labels, one initial and one final state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BsAutomaton {
    ctx: GroupContext,
    states: Vec<String>,
    edges: Vec<BsEdge>,
    initial: usize,
    final_state: usize,
}

fn valid_state_name(name: &str) -> bool {
    let first = name.chars().next();
    matches!(first, Some(c) if c.is_alphabetic() || c == '_')
        && !name.chars().any(|c| c.is_whitespace() || c == '#')
}

impl BsAutomaton {
    pub fn new(ctx: GroupContext, states: Vec<String>, edges: Vec<BsEdge>, initial: usize, final_state: usize) -> Result<Self> {
        let n = states.len();
        if initial >= n || final_state >= n || edges.iter().any(|e| e.src >= n || e.dst >= n) {
            return Err(Error::InvalidArgument("state index out of range".into()));
        }
        let mut seen = HashSet::new();
        for s in &states {
            if !valid_state_name(s) {
                return Err(Error::InvalidArgument(format!("bad state name {s:?}")));
            }
            if !seen.insert(s.as_str()) {
                return Err(Error::InvalidArgument(format!("duplicate state {s:?}")));
            }
        }
        Ok(BsAutomaton { ctx, states, edges, initial, final_state })
    }

    pub fn ctx(&self) -> &GroupContext {
        &self.ctx
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn edges(&self) -> &[BsEdge] {
        &self.edges
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn final_state(&self) -> usize {
        self.final_state
    }

    pub fn state_index(&self, name: &str) -> Option<usize> {
        self.states.iter().position(|s| s == name)
    }

    /// State indices sorted by name; the block order of state views.
    pub fn state_order(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.num_states()).collect();
        v.sort_by(|&a, &b| self.states[a].cmp(&self.states[b]));
        v
    }

    pub fn is_normalized(&self) -> bool {
        self.edges.iter().all(|e| e.label.len() == 1)
    }

    /// Parses the `bs q=<int>` format. Several final states are merged into a fresh one.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap().trim())
            .filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
        let q = parse_header(header, "bs")?;
        let ctx = GroupContext::new(q)?;
        let mut states: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut initials = Vec::new();
        let mut finals = Vec::new();
        let mut edges = Vec::new();
        for line in lines {
            let mut parts = line.split_whitespace();
            match parts.next() {
                Some("state") => {
                    let name = parts.next().ok_or_else(|| Error::Parse("state without name".into()))?;
                    if !valid_state_name(name) {
                        return parse_err(format!("bad state name {name:?}"));
                    }
                    if index.contains_key(name) {
                        return parse_err(format!("duplicate state {name:?}"));
                    }
                    let id = states.len();
                    index.insert(name.to_string(), id);
                    states.push(name.to_string());
                    for flag in parts {
                        match flag {
                            "initial" => initials.push(id),
                            "final" => finals.push(id),
                            other => return parse_err(format!("unknown state flag {other:?}")),
                        }
                    }
                }
                Some("edge") => {
                    let mut lookup = |what: &str| -> Result<usize> {
                        let name = parts.next().ok_or_else(|| Error::Parse(format!("edge without {what}")))?;
                        index.get(name).copied().ok_or_else(|| Error::Parse(format!("unknown state {name:?}")))
                    };
                    let src = lookup("source")?;
                    let dst = lookup("target")?;
                    let rest: Vec<&str> = parts.collect();
                    if rest.is_empty() {
                        return parse_err("edge without label");
                    }
                    let label = GeneratorWord::from_text(&rest.join(" "))?;
                    edges.push(BsEdge { src, dst, label });
                }
                Some(other) => return parse_err(format!("unexpected line starting with {other:?}")),
                None => {}
            }
        }
        let initial = match initials.as_slice() {
            [i] => *i,
            [] => return parse_err("no initial state"),
            _ => return parse_err("more than one initial state"),
        };
        let final_state = match finals.as_slice() {
            [f] => *f,
            _ => {
                let name = fresh_name(&states, "final");
                let id = states.len();
                states.push(name);
                for &f in &finals {
                    edges.push(BsEdge { src: f, dst: id, label: GeneratorWord::default() });
                }
                id
            }
        };
        Ok(BsAutomaton { ctx, states, edges, initial, final_state })
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "bs q={}", self.ctx.q());
        for (i, s) in self.states.iter().enumerate() {
            out.push_str("state ");
            out.push_str(s);
            if i == self.initial {
                out.push_str(" initial");
            }
            if i == self.final_state {
                out.push_str(" final");
            }
            out.push('\n');
        }
        for e in &self.edges {
            let label = if e.label.is_empty() { "1".to_string() } else { e.label.to_text() };
            let _ = writeln!(out, "edge {} {} {}", self.states[e.src], self.states[e.dst], label);
        }
        out
    }

    /// Single-generator edges only: identity labels become the detour `t t^-1`
    /// and words are split through fresh states.
    pub fn normalize_edges(&self) -> BsAutomaton {
        let mut word_edges: Vec<(usize, GeneratorWord, usize)> = Vec::new();
        let mut seen: HashSet<(usize, GeneratorWord, usize)> = HashSet::new();
        for e in &self.edges {
            let label = if e.label.is_empty() { GeneratorWord::new(vec![Gen::T, Gen::TInv]) } else { e.label.clone() };
            let key = (e.src, label, e.dst);
            if seen.insert(key.clone()) {
                word_edges.push(key);
            }
        }
        let mut states = self.states.clone();
        let mut edges = Vec::new();
        for (idx, (src, label, dst)) in word_edges.into_iter().enumerate() {
            let toks = label.tokens();
            let mut cur = src;
            for (j, &g) in toks.iter().enumerate() {
                let next = if j + 1 == toks.len() {
                    dst
                } else {
                    let name = fresh_name(&states, &format!("{}_{}_{}", self.states[src], idx, j + 1));
                    states.push(name);
                    states.len() - 1
                };
                edges.push(BsEdge { src: cur, dst: next, label: GeneratorWord::new(vec![g]) });
                cur = next;
            }
        }
        BsAutomaton { ctx: self.ctx, states, edges, initial: self.initial, final_state: self.final_state }
    }

    /// Runs read backwards: edges reversed with inverted labels, initial and final swapped.
    pub fn reversed(&self) -> BsAutomaton {
        let edges = self.edges.iter().map(|e| BsEdge { src: e.dst, dst: e.src, label: e.label.inverse() }).collect();
        BsAutomaton { ctx: self.ctx, states: self.states.clone(), edges, initial: self.final_state, final_state: self.initial }
    }

    /// Removes states that lie on no path from the initial to the final state
    /// (the two endpoints are always kept).
    pub fn trim(&self) -> BsAutomaton {
        let n = self.num_states();
        let reach = |start: usize, fwd: bool| {
            let mut seen = vec![false; n];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for e in &self.edges {
                    let (a, b) = if fwd { (e.src, e.dst) } else { (e.dst, e.src) };
                    if a == x && !seen[b] {
                        seen[b] = true;
                        stack.push(b);
                    }
                }
            }
            seen
        };
        let f = reach(self.initial, true);
        let b = reach(self.final_state, false);
        let keep: Vec<bool> = (0..n).map(|s| (f[s] && b[s]) || s == self.initial || s == self.final_state).collect();
        let mut map = vec![usize::MAX; n];
        let mut states = Vec::new();
        for s in 0..n {
            if keep[s] {
                map[s] = states.len();
                states.push(self.states[s].clone());
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| f[e.src] && b[e.src] && f[e.dst] && b[e.dst])
            .map(|e| BsEdge { src: map[e.src], dst: map[e.dst], label: e.label.clone() })
            .collect();
        BsAutomaton { ctx: self.ctx, states, edges, initial: map[self.initial], final_state: map[self.final_state] }
    }

    /// Position-changing moves; each `a^±1` edge becomes `(±1, +1)(0, -1)` through a fresh state.
    pub fn split_moves(&self) -> Result<MoveAutomaton> {
        if !self.is_normalized() {
            return Err(Error::InvalidArgument("split_moves needs single-generator edges".into()));
        }
        let n = self.num_states();
        let mut num_states = n;
        let mut edges = Vec::new();
        for e in &self.edges {
            match e.label.tokens()[0] {
                Gen::T => edges.push(MoveEdge { src: e.src, digit: 0, dir: 1, dst: e.dst }),
                Gen::TInv => edges.push(MoveEdge { src: e.src, digit: 0, dir: -1, dst: e.dst }),
                g => {
                    let mid = num_states;
                    num_states += 1;
                    let digit = if g == Gen::A { 1 } else { -1 };
                    edges.push(MoveEdge { src: e.src, digit, dir: 1, dst: mid });
                    edges.push(MoveEdge { src: mid, digit: 0, dir: -1, dst: e.dst });
                }
            }
        }
        Ok(MoveAutomaton {
            ctx: self.ctx,
            num_states,
            num_original: n,
            edges,
            initial: self.initial,
            final_state: self.final_state,
        })
    }

    pub fn check_run(&self, run: &Run) -> Result<()> {
        let mut cur = run.start;
        if cur >= self.num_states() {
            return Err(Error::NotAPath);
        }
        for &e in &run.edges {
            match self.edges.get(e) {
                Some(edge) if edge.src == cur => cur = edge.dst,
                _ => return Err(Error::NotAPath),
            }
        }
        Ok(())
    }

    pub fn run_end(&self, run: &Run) -> usize {
        run.edges.last().map_or(run.start, |&e| self.edges[e].dst)
    }

    pub fn run_label(&self, run: &Run) -> GeneratorWord {
        run.edges
            .iter()
            .fold(GeneratorWord::default(), |acc, &e| acc.concat(&self.edges[e].label))
    }

    pub fn run_metrics(&self, run: &Run) -> Result<RunMetrics> {
        self.check_run(run)?;
        let mut g = self.ctx.identity();
        let mut counts: HashMap<i64, usize> = HashMap::new();
        counts.insert(0, 1);
        let (mut pmax, mut pmin) = (0i64, 0i64);
        for &e in &run.edges {
            g = self.ctx.multiply(&g, &self.ctx.eval_word(&self.edges[e].label));
            let p = g.cursor();
            *counts.entry(p).or_insert(0) += 1;
            pmax = pmax.max(p);
            pmin = pmin.min(p);
        }
        let thickness = counts.values().copied().max().unwrap_or(1);
        Ok(RunMetrics { pos: g.cursor(), production: g, pmax, pmin, thickness })
    }

    /// Runs from `p` to `p2` with at most `max_len` edges passing the filters,
    /// in depth-first order over edge indices.
    pub fn enumerate_runs(&self, p: usize, p2: usize, max_len: usize, variant: RunVariant, max_thickness: Option<usize>) -> Vec<Run> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        let mut counts: HashMap<i64, usize> = HashMap::new();
        counts.insert(0, 1);
        let ctx = self.ctx;
        let labels: Vec<GroupElement> = self.edges.iter().map(|e| ctx.eval_word(&e.label)).collect();
        let mut st = EnumState { path: &mut path, counts: &mut counts, out: &mut out };
        self.enum_rec(p, p2, 0, 0, max_len, variant, max_thickness, &labels, &mut st, p);
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn enum_rec(
        &self,
        cur: usize,
        target: usize,
        pos: i64,
        pmin: i64,
        max_len: usize,
        variant: RunVariant,
        max_thickness: Option<usize>,
        labels: &[GroupElement],
        st: &mut EnumState<'_>,
        start: usize,
    ) {
        if cur == target {
            let ok = match variant {
                RunVariant::All => true,
                RunVariant::Returning => pos == 0,
                RunVariant::ReturningLeft => pos == 0 && pmin == 0,
            };
            if ok {
                st.out.push(Run { start, edges: st.path.clone() });
            }
        }
        if st.path.len() == max_len {
            return;
        }
        for (i, e) in self.edges.iter().enumerate() {
            if e.src != cur {
                continue;
            }
            let np = pos + labels[i].cursor();
            let c = st.counts.entry(np).or_insert(0);
            *c += 1;
            let over = max_thickness.is_some_and(|k| *c > k);
            if !over {
                st.path.push(i);
                self.enum_rec(e.dst, target, np, pmin.min(np), max_len, variant, max_thickness, labels, st, start);
                st.path.pop();
            }
            *st.counts.get_mut(&np).unwrap() -= 1;
        }
    }

    /// State view of a run: padded pe digits of the production, each with the
    /// set of states seen at that position.
    pub fn state_view(&self, run: &Run) -> Result<StateView> {
        self.check_run(run)?;
        let mut g = self.ctx.identity();
        let mut visits: BTreeMap<i64, Vec<bool>> = BTreeMap::new();
        let n = self.num_states();
        visits.entry(0).or_insert_with(|| vec![false; n])[run.start] = true;
        for &e in &run.edges {
            g = self.ctx.multiply(&g, &self.ctx.eval_word(&self.edges[e].label));
            visits.entry(g.cursor()).or_insert_with(|| vec![false; n])[self.edges[e].dst] = true;
        }
        Ok(StateView::build(&self.ctx, &g, &visits, &self.state_order()))
    }
}

struct EnumState<'a> {
    path: &'a mut Vec<usize>,
    counts: &'a mut HashMap<i64, usize>,
    out: &'a mut Vec<Run>,
}

pub(crate) fn parse_header(line: &str, kind: &str) -> Result<u32> {
    let mut parts = line.split_whitespace();
    if parts.next() != Some(kind) {
        return parse_err(format!("expected '{kind} q=<int>' header"));
    }
    let q = parts
        .next()
        .and_then(|s| s.strip_prefix("q="))
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Parse(format!("expected '{kind} q=<int>' header")))?;
    if parts.next().is_some() {
        return parse_err("trailing text in header");
    }
    Ok(q)
}

fn fresh_name(existing: &[String], base: &str) -> String {
    let mut name = base.to_string();
    while existing.iter().any(|s| *s == name) {
        name.push('\'');
    }
    name
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RunVariant {
    All,
    Returning,
    ReturningLeft,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Run {
    pub start: usize,
    pub edges: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunMetrics {
    pub production: GroupElement,
    pub pos: i64,
    pub pmax: i64,
    pub pmin: i64,
    pub thickness: usize,
}

/// Move `(digit, dir)`: add `digit * q^m` at cursor `m`, then move by `dir`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MoveEdge {
    pub src: usize,
    pub digit: i8,
    pub dir: i8,
    pub dst: usize,
}

/// Result of [`BsAutomaton::split_moves`]. States `0..num_original` are the
/// original ones, the rest are intermediate states of split `a^±1` edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveAutomaton {
    pub ctx: GroupContext,
    pub num_states: usize,
    pub num_original: usize,
    pub edges: Vec<MoveEdge>,
    pub initial: usize,
    pub final_state: usize,
}

impl MoveAutomaton {
    pub fn is_original(&self, s: usize) -> bool {
        s < self.num_original
    }

    /// The same automaton with generator-word labels.
    pub fn to_bs(&self) -> BsAutomaton {
        let states = (0..self.num_states).map(|i| format!("m{i}")).collect();
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let mut toks = Vec::new();
                match e.digit {
                    1 => toks.push(Gen::A),
                    -1 => toks.push(Gen::AInv),
                    _ => {}
                }
                toks.push(if e.dir > 0 { Gen::T } else { Gen::TInv });
                BsEdge { src: e.src, dst: e.dst, label: GeneratorWord::new(toks) }
            })
            .collect();
        BsAutomaton { ctx: self.ctx, states, edges, initial: self.initial, final_state: self.final_state }
    }
}

/// Padded pointed expansion with one visited-state block per digit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StateView {
    pub word: PeWord,
    /// Per digit, most significant first; states in name order.
    pub visited: Vec<Vec<bool>>,
}

impl StateView {
    /// `visits` maps positions to per-state flags (indexed by state id).
    pub fn build(ctx: &GroupContext, g: &GroupElement, visits: &BTreeMap<i64, Vec<bool>>, order: &[usize]) -> StateView {
        let canon = pe::encode(ctx, g);
        let hi_pe = canon.radix_index as i64;
        let lo_pe = hi_pe - (canon.digits.len() as i64 - 1);
        let hi = hi_pe.max(*visits.keys().next_back().unwrap_or(&0));
        let lo = lo_pe.min(*visits.keys().next().unwrap_or(&0));
        let mut digits = Vec::new();
        let mut visited = Vec::new();
        for pos in (lo..=hi).rev() {
            let d = if pos <= hi_pe && pos >= lo_pe { canon.digits[(hi_pe - pos) as usize] } else { 0 };
            digits.push(d);
            let flags = visits.get(&pos);
            visited.push(order.iter().map(|&s| flags.is_some_and(|f| f[s])).collect());
        }
        let word = PeWord {
            sign: canon.sign,
            digits,
            radix_index: hi as usize,
            cursor_index: (hi - g.cursor()) as usize,
        };
        StateView { word, visited }
    }

    /// Symbol indices over [`sv_alphabet`].
    pub fn tokens(&self, q: u32) -> Vec<u32> {
        let base = pe::token_count(q) as u32;
        let mut out = vec![pe::sign_token(self.word.sign) as u32];
        for (i, &d) in self.word.digits.iter().enumerate() {
            out.push(pe::digit_token(d, i == self.word.radix_index, i == self.word.cursor_index) as u32);
            for (j, &v) in self.visited[i].iter().enumerate() {
                out.push(base + 2 * j as u32 + (!v) as u32);
            }
        }
        out
    }
}

/// Pe tokens followed by `p` / `~p` for each state in name order.
pub fn sv_alphabet(q: u32, a: &BsAutomaton) -> Vec<String> {
    let mut names = pe::token_names(q);
    for s in a.state_order() {
        names.push(a.states()[s].clone());
        names.push(format!("~{}", a.states()[s]));
    }
    names
}

#[cfg(test)]
mod tests {
    use super::*;

    const CYCLES: &str = "bs q=2\nstate p0 initial final\nstate p1\nstate p2\nstate p3\n\
        edge p0 p0 t^-1\nedge p0 p1 a\nedge p1 p2 t\nedge p2 p3 a\nedge p3 p0 t\n";

    const TWISTED: &str = "bs q=2\nstate p1 initial\nstate p2\nstate p3 final\n\
        edge p1 p1 t^-2\nedge p2 p2 t^2\nedge p2 p2 tat\nedge p3 p3 t^-2\nedge p1 p2 1\nedge p2 p3 1\n";

    #[test]
    fn parse_fixtures() {
        let b = BsAutomaton::parse(CYCLES).unwrap();
        assert_eq!(b.num_states(), 4);
        assert_eq!(b.initial(), 0);
        assert_eq!(b.final_state(), 0);
        assert_eq!(BsAutomaton::parse(&b.serialize()).unwrap(), b);
        let a = BsAutomaton::parse(TWISTED).unwrap();
        assert_eq!(a.edges().len(), 6);
        assert!(a.edges()[4].label.is_empty());
        assert_eq!(BsAutomaton::parse(&a.serialize()).unwrap(), a);
        assert!(BsAutomaton::parse("bs q=2\nstate p initial final\nedge p p b\n").is_err());
        assert!(BsAutomaton::parse("bs q=2\nstate p initial final\nedge p x a\n").is_err());
    }

    #[test]
    fn multiple_finals_merged() {
        let a = BsAutomaton::parse("bs q=2\nstate p initial final\nstate r final\nedge p r a\n").unwrap();
        assert_eq!(a.num_states(), 3);
        assert_eq!(a.states()[a.final_state()], "final");
    }

    #[test]
    fn normalize_splits_words() {
        let a = BsAutomaton::parse("bs q=2\nstate p initial\nstate r final\nedge p r tat\n").unwrap();
        let n = a.normalize_edges();
        assert_eq!(n.num_states(), 4);
        assert_eq!(n.edges().len(), 3);
        assert!(n.is_normalized());
        let b = BsAutomaton::parse(CYCLES).unwrap();
        assert_eq!(b.normalize_edges(), b);
    }

    #[test]
    fn split_moves_examples() {
        let a = BsAutomaton::parse("bs q=2\nstate p initial\nstate r final\nedge p r a\n").unwrap();
        let m = a.split_moves().unwrap();
        assert_eq!(m.num_states, 3);
        assert_eq!(m.edges.len(), 2);
        let bs = m.to_bs();
        let run = Run { start: 0, edges: vec![0, 1] };
        assert_eq!(bs.run_metrics(&run).unwrap().production, a.ctx().integer(1, 0));
        let t = BsAutomaton::parse("bs q=2\nstate p initial\nstate r final\nedge p r t\n").unwrap();
        assert_eq!(t.split_moves().unwrap().edges, vec![MoveEdge { src: 0, digit: 0, dir: 1, dst: 1 }]);
        let e = BsAutomaton::parse("bs q=2\nstate p initial final\n").unwrap();
        assert!(e.split_moves().unwrap().edges.is_empty());
    }

    #[test]
    fn metrics_examples() {
        let b = BsAutomaton::parse(CYCLES).unwrap();
        let m = b.run_metrics(&Run { start: 0, edges: vec![1, 2, 3, 4] }).unwrap();
        assert_eq!(m.production, b.ctx().integer(3, 2));
        assert_eq!((m.pmax, m.pmin, m.thickness), (2, 0, 2));
        let m = b.run_metrics(&Run { start: 0, edges: vec![] }).unwrap();
        assert_eq!((m.production, m.pos, m.pmax, m.pmin, m.thickness), (b.ctx().identity(), 0, 0, 0, 1));
        assert_eq!(b.run_metrics(&Run { start: 0, edges: vec![2] }), Err(Error::NotAPath));
    }

    #[test]
    fn enumerate_examples() {
        let b = BsAutomaton::parse(CYCLES).unwrap();
        let runs = b.enumerate_runs(0, 0, 6, RunVariant::ReturningLeft, None);
        let prods: Vec<GroupElement> = runs.iter().map(|r| b.run_metrics(r).unwrap().production).collect();
        assert!(prods.contains(&b.ctx().integer(3, 0)));
        let thin = b.enumerate_runs(0, 0, 5, RunVariant::All, Some(1));
        assert!(thin.iter().all(|r| r.edges.iter().all(|&e| e == 0)));
        assert_eq!(thin.len(), 6);
        assert_eq!(b.enumerate_runs(0, 1, 0, RunVariant::All, None), vec![]);
        assert_eq!(b.enumerate_runs(0, 0, 0, RunVariant::All, None).len(), 1);
    }

    #[test]
    fn state_view_example() {
        let b = BsAutomaton::parse(CYCLES).unwrap();
        let sv = b.state_view(&Run { start: 0, edges: vec![1, 2, 3, 4] }).unwrap();
        assert_eq!(sv.word.to_text(), "+ 0c 1 1r");
        assert_eq!(sv.visited, vec![
            vec![true, false, false, false],
            vec![false, false, true, true],
            vec![true, true, false, false],
        ]);
    }
}
