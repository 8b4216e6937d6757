//! Column words and their renormalization into canonical pointed expansions.
//!
//! A column source is a lazily explored NFA that reads positions from the most
//! significant one down. Each column carries a signed value (any integer, not a
//! digit), the radix and cursor flags, and a mask of visited states. The
//! renormalizer guesses the sign of the total and the carries between columns,
//! and emits canonical digits.

use std::collections::HashMap;
use std::hash::Hash;

use crate::automata::{alphabet, determinize_minimize, live_states, minimize, subset_construction, Dfa, Nfa, Sym};
use crate::error::{Error, Result};
use crate::pe::{self, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Column {
    pub value: i64,
    pub radix: bool,
    pub cursor: bool,
    pub mask: u64,
}

impl Column {
    pub fn zero() -> Self {
        Column { value: 0, radix: false, cursor: false, mask: 0 }
    }
}

pub trait ColumnSource {
    type State: Clone + Eq + Hash;
    fn initial_states(&self) -> Vec<Self::State>;
    /// `None` labels are ε-moves.
    fn successors(&self, s: &Self::State, out: &mut Vec<(Option<Column>, Self::State)>);
    fn is_final(&self, s: &Self::State) -> bool;
    /// Bound on `|value|` over all columns.
    fn max_abs_value(&self) -> i64;
    /// Output language index of a final state (see [`renormalize_tagged`]).
    fn tag(&self, _s: &Self::State) -> usize {
        0
    }
}

/// Output alphabet of the renormalizer.
#[derive(Debug, Clone)]
pub enum OutputMode {
    /// Canonical pe words.
    Pe,
    /// State views: each digit is followed by one letter per slot; slot `j`
    /// reports bit `order[j]` of the column mask.
    StateView { order: Vec<usize>, names: Vec<String> },
}

impl OutputMode {
    fn slots(&self) -> usize {
        match self {
            OutputMode::Pe => 0,
            OutputMode::StateView { order, .. } => order.len(),
        }
    }

    pub fn alphabet_names(&self, q: u32) -> Vec<String> {
        let mut names = pe::token_names(q);
        if let OutputMode::StateView { names: states, .. } = self {
            for s in states {
                names.push(s.clone());
                names.push(format!("~{s}"));
            }
        }
        names
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Phase {
    Lead,
    Body,
    Trail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum RState {
    Start,
    Run { carry: i32, sign: Sign, phase: Phase, last_ok: bool, nonzero: bool, started: bool },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct OutCol {
    digit: u32,
    radix: bool,
    cursor: bool,
    mask: u64,
}

/// Converts a column source into a minimal DFA over pe tokens (or state-view letters).
pub fn renormalize<S: ColumnSource>(src: &S, q: u32, mode: &OutputMode, limit: usize) -> Result<Dfa> {
    Ok(renormalize_tagged(src, q, mode, limit, 1)?.pop().unwrap())
}

/// Deterministic column graph of a source, with the largest column value
/// reachable from each state. `tags[s]` is the set of tags accepted at `s`.
struct SourceGraph {
    initials: Vec<usize>,
    succ: Vec<Vec<(Option<Column>, usize)>>,
    finals: Vec<bool>,
    tags: Vec<u64>,
    future_max: Vec<i64>,
}

impl SourceGraph {
    fn explore<S: ColumnSource>(src: &S, limit: usize, ntags: usize, keep_mask: bool) -> Result<Self> {
        let mut index: HashMap<S::State, u32> = HashMap::new();
        let mut states: Vec<S::State> = Vec::new();
        let mut cols: HashMap<Column, Sym> = HashMap::new();
        let mut col_list: Vec<Column> = Vec::new();
        let mut edges: Vec<Vec<(Option<Sym>, u32)>> = Vec::new();
        let mut initials = Vec::new();
        for s in src.initial_states() {
            let id = *index.entry(s.clone()).or_insert_with(|| {
                states.push(s);
                states.len() as u32 - 1
            });
            initials.push(id);
        }
        let mut buf = Vec::new();
        let mut i = 0;
        while i < states.len() {
            buf.clear();
            src.successors(&states[i], &mut buf);
            let mut row = Vec::with_capacity(buf.len());
            for (label, t) in buf.drain(..) {
                let id = match index.get(&t) {
                    Some(&id) => id,
                    None => {
                        if states.len() >= limit {
                            return Err(Error::LimitExceeded(format!("column source exceeded {limit} states")));
                        }
                        states.push(t.clone());
                        index.insert(t, states.len() as u32 - 1);
                        states.len() as u32 - 1
                    }
                };
                let sym = label.map(|mut c| {
                    if !keep_mask {
                        c.mask = 0;
                    }
                    *cols.entry(c).or_insert_with(|| {
                        col_list.push(c);
                        col_list.len() as Sym - 1
                    })
                });
                row.push((sym, id));
            }
            edges.push(row);
            i += 1;
        }
        // columns, then one marker symbol per tag leading to an accepting sink
        let ncols = col_list.len();
        let names: Vec<String> = (0..ncols + ntags).map(|j| j.to_string()).collect();
        let mut nfa = Nfa::new(alphabet(names));
        for _ in 0..states.len() {
            nfa.add_state(false);
        }
        let sink = nfa.add_state(true);
        for &s in &initials {
            nfa.add_initial(s);
        }
        for (s, row) in edges.iter().enumerate() {
            for &(sym, t) in row {
                nfa.add_transition(s as u32, sym, t);
            }
            if src.is_final(&states[s]) {
                let tag = src.tag(&states[s]);
                if tag < ntags {
                    nfa.add_transition(s as u32, Some((ncols + tag) as Sym), sink);
                }
            }
        }
        drop(index);
        drop(states);
        let dfa = determinize_minimize(&nfa);
        let n = dfa.num_states();
        let live = live_states(&dfa);
        let mut succ = vec![Vec::new(); n];
        let mut tags = vec![0u64; n];
        for s in 0..n {
            if !live[s] {
                continue;
            }
            for (x, &c) in col_list.iter().enumerate() {
                let t = dfa.step(s as u32, x as Sym) as usize;
                if live[t] {
                    succ[s].push((Some(c), t));
                }
            }
            for tag in 0..ntags {
                if dfa.is_final(dfa.step(s as u32, (ncols + tag) as Sym)) {
                    tags[s] |= 1 << tag;
                }
            }
        }
        let finals: Vec<bool> = tags.iter().map(|&m| m != 0).collect();
        let initials = if live[dfa.initial() as usize] { vec![dfa.initial() as usize] } else { Vec::new() };
        let mut pred: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut future_max = vec![0i64; n];
        for (s, row) in succ.iter().enumerate() {
            for &(label, t) in row {
                pred[t].push(s);
                if let Some(c) = label {
                    future_max[s] = future_max[s].max(c.value.abs());
                }
            }
        }
        let mut work: Vec<usize> = (0..n).collect();
        while let Some(t) = work.pop() {
            for &s in &pred[t] {
                if future_max[s] < future_max[t] {
                    future_max[s] = future_max[t];
                    work.push(s);
                }
            }
        }
        Ok(SourceGraph { initials, succ, finals, tags, future_max })
    }
}

/// One DFA per tag: the words produced by paths ending in final states with that tag.
pub fn renormalize_tagged<S: ColumnSource>(src: &S, q: u32, mode: &OutputMode, limit: usize, ntags: usize) -> Result<Vec<Dfa>> {
    let qi = q as i64;
    let sv = matches!(mode, OutputMode::StateView { .. });
    let slots = mode.slots();
    let pe_count = pe::token_count(q) as Sym;
    let order: Vec<usize> = match mode {
        OutputMode::Pe => Vec::new(),
        OutputMode::StateView { order, .. } => order.clone(),
    };
    let names = mode.alphabet_names(q);
    if ntags > 64 {
        return Err(Error::InvalidArgument(format!("{ntags} tags; at most 64 are supported")));
    }
    let graph = SourceGraph::explore(src, limit, ntags, true)?;
    let bounds: Vec<i64> = graph.future_max.iter().map(|&v| (v + qi - 2) / (qi - 1) + 1).collect();
    let mut nfa = Nfa::new(alphabet(names));
    let mut index: HashMap<(usize, RState), u32> = HashMap::new();
    let mut states: Vec<(usize, RState)> = Vec::new();
    let mut ids: Vec<u32> = Vec::new();
    let mut chains: HashMap<(u32, OutCol), u32> = HashMap::new();
    let mut tags: Vec<u64> = Vec::new();

    let is_final = |s: usize, r: &RState| -> bool {
        match *r {
            RState::Start => false,
            RState::Run { carry, sign, phase, last_ok, nonzero, .. } => {
                carry == 0
                    && (sign == Sign::Plus || nonzero)
                    && match phase {
                        Phase::Lead => false,
                        Phase::Body => last_ok,
                        Phase::Trail => true,
                    }
                    && graph.finals[s]
            }
        }
    };

    macro_rules! intern {
        ($key:expr) => {{
            let key = $key;
            match index.get(&key) {
                Some(&id) => id,
                None => {
                    if states.len() >= limit {
                        return Err(Error::LimitExceeded(format!("renormalizer exceeded {limit} states")));
                    }
                    let f = is_final(key.0, &key.1);
                    let id = nfa.add_state(f);
                    tags.resize(id as usize, 0);
                    tags.push(if f { graph.tags[key.0] } else { 0 });
                    index.insert(key, id);
                    states.push(key);
                    ids.push(id);
                    id
                }
            }
        }};
    }

    for &s in &graph.initials {
        let id = intern!((s, RState::Start));
        nfa.add_initial(id);
    }
    let mut moves: Vec<(Option<OutCol>, Option<Sym>, usize, RState)> = Vec::new();
    let mut i = 0;
    while i < states.len() {
        let (s, r) = states[i];
        moves.clear();
        match r {
            RState::Start => {
                for sign in [Sign::Plus, Sign::Minus] {
                    let run = RState::Run { carry: 0, sign, phase: Phase::Lead, last_ok: false, nonzero: false, started: false };
                    moves.push((None, Some(pe::sign_token(sign) as Sym), s, run));
                }
            }
            RState::Run { carry, sign, phase, last_ok, nonzero, started } => {
                let mut cols: Vec<(Column, usize, bool)> = Vec::new();
                for &(label, t) in &graph.succ[s] {
                    match label {
                        None => moves.push((None, None, t, r)),
                        Some(c) => cols.push((c, t, true)),
                    }
                }
                if !started {
                    cols.push((Column::zero(), s, false));
                }
                for (col, t, real) in cols {
                    for o in 0..qi {
                        let c_in = o - sign.factor() * col.value + qi * carry as i64;
                        if c_in.abs() > bounds[t] {
                            continue;
                        }
                        let keep = o != 0 || col.radix || col.cursor || (sv && col.mask != 0);
                        let out = OutCol { digit: o as u32, radix: col.radix, cursor: col.cursor, mask: if sv { col.mask } else { 0 } };
                        let next = |phase: Phase, last_ok: bool| RState::Run {
                            carry: c_in as i32,
                            sign,
                            phase,
                            last_ok,
                            nonzero: nonzero || o != 0,
                            started: started || real,
                        };
                        match phase {
                            Phase::Lead => {
                                if keep {
                                    moves.push((Some(out), None, t, next(Phase::Body, true)));
                                } else {
                                    moves.push((None, None, t, next(Phase::Lead, false)));
                                }
                            }
                            Phase::Body => {
                                moves.push((Some(out), None, t, next(Phase::Body, keep)));
                                if !keep && last_ok {
                                    moves.push((None, None, t, next(Phase::Trail, true)));
                                }
                            }
                            Phase::Trail => {
                                if !keep {
                                    moves.push((None, None, t, next(Phase::Trail, true)));
                                }
                            }
                        }
                    }
                }
            }
        }
        for (out, sym, t, r2) in moves.drain(..) {
            let dst = intern!((t, r2));
            match out {
                None => nfa.add_transition(ids[i], sym, dst),
                Some(col) => {
                    let tok = pe::digit_token(col.digit, col.radix, col.cursor) as Sym;
                    if slots == 0 {
                        nfa.add_transition(ids[i], Some(tok), dst);
                    } else {
                        let head = match chains.get(&(dst, col)) {
                            Some(&h) => h,
                            None => {
                                let mut next = dst;
                                for j in (0..slots).rev() {
                                    let letter = pe_count + 2 * j as Sym + ((col.mask >> order[j]) & 1 == 0) as Sym;
                                    let c = nfa.add_state(false);
                                    nfa.add_transition(c, Some(letter), next);
                                    next = c;
                                }
                                chains.insert((dst, col), next);
                                next
                            }
                        };
                        nfa.add_transition(ids[i], Some(tok), head);
                    }
                }
            }
        }
        i += 1;
    }
    let (dfa, subsets) = subset_construction(&nfa);
    tags.resize(nfa.num_states(), 0);
    let out = (0..ntags)
        .map(|t| {
            let finals: Vec<bool> = subsets.iter().map(|set| set.iter().any(|&x| tags[x as usize] >> t & 1 == 1)).collect();
            let d = Dfa::from_parts(dfa.alphabet().clone(), dfa.table().to_vec(), dfa.initial(), finals).expect("same shape");
            minimize(&d)
        })
        .collect();
    Ok(out)
}
