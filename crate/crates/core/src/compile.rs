//! Compilation of BS(1,q) automata into PE-regular sets.
//!
//! Runs are read column by column (one column per position, most significant
//! first). The state between two columns is the crossing sequence at the
//! boundary: the edges of the split-move automaton that cross it, in time
//! order. Thin runs have short crossing sequences, so this gives a finite
//! automaton over columns, which the renormalizer turns into pe words or state
//! views. Stars of returning-left cycles are added as extra digit tracks
//! anchored at a column where their state is visited.
//!
//! [`compile`] grows a per-vertex visit bound `c` and stops as soon as the
//! computed sets `X_p` (productions of bounded runs from the initial state to
//! `p`, with stars inserted) contain the identity at the initial state and are
//! closed under every edge. Every element of `X_p` is realized by a run, and
//! closure shows that every run is covered, so the answer is exact. The bound
//! `c = k` with `k = |Q| + 2|Q|²` always suffices by the decomposition of runs
//! into a `k`-thin run and `k`-thin returning-left cycles.

use std::cell::RefCell;
use std::collections::{HashMap, HashSet};
use std::rc::Rc;

use num_traits::ToPrimitive;

use crate::automata::{determinize_minimize, live_states, Dfa, Nfa, Sym};
use crate::bs::{BsAutomaton, BsEdge, MoveAutomaton, RunVariant};
use crate::columns::{renormalize, renormalize_tagged, Column, ColumnSource, OutputMode};
use crate::error::{Error, Result};
use crate::group::{GroupContext, GroupElement};
use crate::pe::{self, token_digit, Sign};
use crate::pe_regular::{canonicalize_language, pe_alphabet, PeSet, STATE_LIMIT};

pub fn thickness_bound(nstates: usize) -> usize {
    nstates + 2 * nstates * nstates
}

/// `(k(n²+1), 2k(n²+1), 3k(n²+1))`: shortest left-run, magnitude exponent and
/// four-runs budgets.
pub fn run_length_bounds(n: usize, k: usize) -> (usize, usize, usize) {
    let b = k * (n * n + 1);
    (b, 2 * b, 3 * b)
}

/// Visit limits per position: at most `k` visits of original states, and at
/// most `per_vertex` visits of each single original state when set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThinLimits {
    pub k: usize,
    pub per_vertex: Option<usize>,
}

impl ThinLimits {
    pub fn thickness(k: usize) -> Self {
        ThinLimits { k, per_vertex: None }
    }
}

const NO_END: u16 = u16::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct ThinState {
    cross: Vec<u16>,
    radix_done: bool,
    cursor_done: bool,
    end: u16,
}

#[derive(Debug, Clone)]
pub(crate) struct ThinColumn {
    value: i64,
    radix: bool,
    cursor: bool,
    mask: u64,
    next: ThinState,
}

/// Column automaton of the thin runs of a split-move automaton.
pub(crate) struct ThinRuns<'a> {
    m: &'a MoveAutomaton,
    start: usize,
    target: Option<usize>,
    variant: RunVariant,
    limits: ThinLimits,
    up_edges: Vec<u16>,
    down_from: Vec<Vec<u16>>,
    below: BelowPaths,
    cache: RefCell<HashMap<ThinState, Rc<Vec<ThinColumn>>>>,
}

/// Path relations used to discard crossing sequences no run can complete below a boundary.
struct BelowPaths {
    n: usize,
    /// Net displacement 0, never above the start.
    flat: Vec<bool>,
    /// Never above the end.
    rising: Vec<bool>,
    /// Never above the start.
    falling: Vec<bool>,
}

impl BelowPaths {
    fn new(m: &MoveAutomaton) -> Self {
        let n = m.num_states;
        let mut flat = vec![false; n * n];
        for x in 0..n {
            flat[x * n + x] = true;
        }
        let downs: Vec<(usize, usize)> = m.edges.iter().filter(|e| e.dir < 0).map(|e| (e.src, e.dst)).collect();
        let ups: Vec<(usize, usize)> = m.edges.iter().filter(|e| e.dir > 0).map(|e| (e.src, e.dst)).collect();
        loop {
            let mut changed = false;
            for &(x, x2) in &downs {
                for &(y2, y) in &ups {
                    if flat[x2 * n + y2] && !flat[x * n + y] {
                        flat[x * n + y] = true;
                        changed = true;
                    }
                }
            }
            changed |= close(&mut flat, n);
            if !changed {
                break;
            }
        }
        // S (up S)* and S (down S)*
        let extend = |steps: &[(usize, usize)]| {
            let mut r = flat.clone();
            loop {
                let mut changed = false;
                for x in 0..n {
                    for &(y, y2) in steps {
                        if r[x * n + y] {
                            for z in 0..n {
                                if flat[y2 * n + z] && !r[x * n + z] {
                                    r[x * n + z] = true;
                                    changed = true;
                                }
                            }
                        }
                    }
                }
                if !changed {
                    return r;
                }
            }
        };
        let rising = extend(&ups);
        let falling = extend(&downs);
        BelowPaths { n, flat, rising, falling }
    }
}

fn close(r: &mut [bool], n: usize) -> bool {
    let mut changed = false;
    for y in 0..n {
        for x in 0..n {
            if r[x * n + y] {
                for z in 0..n {
                    if r[y * n + z] && !r[x * n + z] {
                        r[x * n + z] = true;
                        changed = true;
                    }
                }
            }
        }
    }
    changed
}

impl<'a> ThinRuns<'a> {
    pub(crate) fn new(m: &'a MoveAutomaton, start: usize, target: Option<usize>, variant: RunVariant, limits: ThinLimits) -> Self {
        let mut down_from = vec![Vec::new(); m.num_states];
        let mut up_edges = Vec::new();
        for (i, e) in m.edges.iter().enumerate() {
            if e.dir > 0 {
                up_edges.push(i as u16);
            } else {
                down_from[e.src].push(i as u16);
            }
        }
        ThinRuns { m, start, target, variant, limits, up_edges, down_from, below: BelowPaths::new(m), cache: RefCell::new(HashMap::new()) }
    }

    fn initial(&self) -> ThinState {
        ThinState { cross: Vec::new(), radix_done: false, cursor_done: false, end: NO_END }
    }

    fn is_final(&self, s: &ThinState) -> bool {
        s.cross.is_empty() && s.radix_done && s.cursor_done
    }

    fn max_abs_value(&self) -> i64 {
        let n = self.m.num_original;
        let orig = match self.limits.per_vertex {
            Some(c) => (c * n).min(self.limits.k),
            None => self.limits.k,
        };
        (2 * orig) as i64
    }

    fn columns(&self, s: &ThinState) -> Rc<Vec<ThinColumn>> {
        if let Some(v) = self.cache.borrow().get(s) {
            return v.clone();
        }
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        for start_here in [false, true] {
            if start_here && s.radix_done {
                continue;
            }
            for end_here in [false, true] {
                if end_here && s.cursor_done {
                    continue;
                }
                if self.variant != RunVariant::All && start_here != end_here {
                    continue;
                }
                let mut dfs = ColumnDfs {
                    runs: self,
                    a: &s.cross,
                    start_here,
                    end_here,
                    cursor_done: s.cursor_done,
                    counts: vec![0; self.m.num_states],
                    orig: 0,
                    total: 0,
                    b: Vec::new(),
                    d: 0,
                    mask: 0,
                    found: Vec::new(),
                };
                if start_here {
                    dfs.visit(self.start, 0);
                } else if s.radix_done {
                    dfs.above(0);
                } else {
                    dfs.below(0);
                }
                for (d, mask, b, end) in dfs.found {
                    let next = ThinState {
                        cross: b,
                        radix_done: s.radix_done || start_here,
                        cursor_done: s.cursor_done || end_here,
                        end: if end_here { end } else { s.end },
                    };
                    if seen.insert((d, start_here, end_here, mask, next.clone())) {
                        out.push(ThinColumn { value: d, radix: start_here, cursor: end_here, mask, next });
                    }
                }
            }
        }
        let rc = Rc::new(out);
        self.cache.borrow_mut().insert(s.clone(), rc.clone());
        rc
    }
}

/// Enumerates the ways a run can pass through one position, given the
/// crossings `a` of the boundary above it.
struct ColumnDfs<'r, 'a> {
    runs: &'r ThinRuns<'a>,
    a: &'r [u16],
    start_here: bool,
    end_here: bool,
    cursor_done: bool,
    counts: Vec<usize>,
    orig: usize,
    total: usize,
    b: Vec<u16>,
    d: i64,
    mask: u64,
    found: Vec<(i64, u64, Vec<u16>, u16)>,
}

impl ColumnDfs<'_, '_> {
    fn visit(&mut self, s: usize, i: usize) {
        let m = self.runs.m;
        let lim = self.runs.limits;
        let original = m.is_original(s);
        self.counts[s] += 1;
        self.total += 1;
        if original {
            self.orig += 1;
        }
        let ok = self.total <= 2 * lim.k
            && self.orig <= lim.k
            && !lim.per_vertex.is_some_and(|c| self.counts[s] > c);
        if ok {
            let old_mask = self.mask;
            if original {
                self.mask |= 1 << s;
            }
            // leave upwards through the next recorded crossing
            if i < self.a.len() {
                let e = m.edges[self.a[i] as usize];
                if e.dir > 0 && e.src == s {
                    self.d += e.digit as i64;
                    self.above(i + 1);
                    self.d -= e.digit as i64;
                }
            }
            // leave downwards
            for idx in 0..self.runs.down_from[s].len() {
                let eid = self.runs.down_from[s][idx];
                let e = m.edges[eid as usize];
                self.b.push(eid);
                self.d += e.digit as i64;
                self.below(i);
                self.d -= e.digit as i64;
                self.b.pop();
            }
            // end here
            if self.end_here && i == self.a.len() && original && self.runs.target.map_or(true, |t| t == s) {
                let left_ok = !(self.runs.variant == RunVariant::ReturningLeft && !self.b.is_empty());
                if left_ok {
                    self.found.push((self.d, self.mask, self.b.clone(), s as u16));
                }
            }
            self.mask = old_mask;
        }
        self.counts[s] -= 1;
        self.total -= 1;
        if original {
            self.orig -= 1;
        }
    }

    fn above(&mut self, i: usize) {
        if i < self.a.len() {
            let e = self.runs.m.edges[self.a[i] as usize];
            if e.dir < 0 {
                self.visit(e.dst, i + 1);
            }
        } else if self.cursor_done {
            self.record();
        }
    }

    fn below(&mut self, i: usize) {
        let runs = self.runs;
        let bp = &runs.below;
        // state the run is in when it first moves below, or the start
        let entry = self.b.last().map(|&e| runs.m.edges[e as usize].dst);
        if i == self.a.len() && !self.cursor_done && !self.end_here {
            let ok = match entry {
                None => true,
                Some(x) => (0..runs.m.num_original)
                    .any(|y| runs.target.map_or(true, |t| t == y) && bp.falling[x * bp.n + y]),
            };
            if ok {
                self.record();
            }
        }
        for idx in 0..runs.up_edges.len() {
            let eid = runs.up_edges[idx];
            let e = runs.m.edges[eid as usize];
            let ok = match entry {
                None => bp.rising[runs.start * bp.n + e.src],
                Some(x) => bp.flat[x * bp.n + e.src],
            };
            if !ok {
                continue;
            }
            let dst = e.dst;
            self.b.push(eid);
            self.visit(dst, i);
            self.b.pop();
        }
    }

    fn record(&mut self) {
        if self.runs.variant == RunVariant::ReturningLeft && self.start_here && !self.b.is_empty() {
            return;
        }
        self.found.push((self.d, self.mask, self.b.clone(), NO_END));
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) enum TrackPhase {
    Pending,
    Running(u32, Sign),
    Done,
}

/// Star language of one state, read as an extra digit track.
pub(crate) struct StarTrack {
    state: usize,
    dfa: Dfa,
    live: Vec<bool>,
}

impl StarTrack {
    pub(crate) fn new(state: usize, set: &PeSet) -> Self {
        StarTrack { state, dfa: set.dfa().clone(), live: live_states(set.dfa()) }
    }
}

/// Thin runs plus star tracks whose radix digit sits on a column visiting their state.
pub(crate) struct FusedSource<'a> {
    thin: ThinRuns<'a>,
    tracks: Vec<StarTrack>,
    q: u32,
}

type FusedState = (ThinState, Vec<TrackPhase>);

impl FusedSource<'_> {
    fn combos(&self, col: &ThinColumn, phases: &[TrackPhase], j: usize, acc: i64, cur: &mut Vec<TrackPhase>, out: &mut Vec<(Option<Column>, FusedState)>) {
        if j == self.tracks.len() {
            out.push((
                Some(Column { value: col.value + acc, radix: col.radix, cursor: col.cursor, mask: col.mask }),
                (col.next.clone(), cur.clone()),
            ));
            return;
        }
        let t = &self.tracks[j];
        match phases[j] {
            TrackPhase::Pending | TrackPhase::Done => {
                cur.push(phases[j]);
                self.combos(col, phases, j + 1, acc, cur, out);
                cur.pop();
            }
            TrackPhase::Running(s, sign) => {
                for x in 2..pe::token_count(self.q) {
                    let n = t.dfa.step(s, x as Sym);
                    if !t.live[n as usize] {
                        continue;
                    }
                    let (dg, r, c) = token_digit(x).unwrap();
                    let next = if r || c {
                        if !(r && c && col.mask >> t.state & 1 == 1 && t.dfa.is_final(n)) {
                            continue;
                        }
                        TrackPhase::Done
                    } else {
                        TrackPhase::Running(n, sign)
                    };
                    cur.push(next);
                    self.combos(col, phases, j + 1, acc + sign.factor() * dg as i64, cur, out);
                    cur.pop();
                }
            }
        }
    }
}

impl ColumnSource for FusedSource<'_> {
    type State = FusedState;

    fn initial_states(&self) -> Vec<FusedState> {
        vec![(self.thin.initial(), vec![TrackPhase::Pending; self.tracks.len()])]
    }

    fn successors(&self, (ts, phases): &FusedState, out: &mut Vec<(Option<Column>, FusedState)>) {
        for (j, t) in self.tracks.iter().enumerate() {
            if phases[j] == TrackPhase::Pending {
                for sign in [Sign::Plus, Sign::Minus] {
                    let n = t.dfa.step(t.dfa.initial(), pe::sign_token(sign) as Sym);
                    if t.live[n as usize] {
                        let mut p = phases.clone();
                        p[j] = TrackPhase::Running(n, sign);
                        out.push((None, (ts.clone(), p)));
                    }
                }
            }
        }
        let cols = self.thin.columns(ts);
        let mut cur = Vec::with_capacity(self.tracks.len());
        for col in cols.iter() {
            self.combos(col, phases, 0, 0, &mut cur, out);
        }
    }

    fn is_final(&self, (ts, phases): &FusedState) -> bool {
        self.thin.is_final(ts) && phases.iter().all(|p| !matches!(p, TrackPhase::Running(..)))
    }

    fn max_abs_value(&self) -> i64 {
        self.thin.max_abs_value() + self.tracks.len() as i64 * (self.q as i64 - 1)
    }

    fn tag(&self, (ts, _): &FusedState) -> usize {
        match self.thin.target {
            Some(_) => 0,
            None => ts.end as usize,
        }
    }
}

fn moves_of(a: &BsAutomaton) -> Result<MoveAutomaton> {
    if a.num_states() > 64 {
        return Err(Error::LimitExceeded(format!("{} states; at most 64 are supported", a.num_states())));
    }
    a.split_moves()
}

/// State views of the `k`-thin runs from `p` to `p2` of the given variant.
#[derive(Debug, Clone)]
pub struct ThinRunLang {
    pub variant: RunVariant,
    pub start: usize,
    pub end: usize,
    pub k: usize,
    /// Over [`crate::bs::sv_alphabet`].
    pub dfa: Dfa,
}

fn sv_mode(a: &BsAutomaton) -> OutputMode {
    let order = a.state_order();
    let names = order.iter().map(|&s| a.states()[s].clone()).collect();
    OutputMode::StateView { order, names }
}

pub fn thin_run_automaton(a: &BsAutomaton, p: usize, p2: usize, k: usize, variant: RunVariant) -> Result<ThinRunLang> {
    thin_run_automaton_with(a, p, p2, ThinLimits::thickness(k), variant)
}

pub fn thin_run_automaton_with(a: &BsAutomaton, p: usize, p2: usize, limits: ThinLimits, variant: RunVariant) -> Result<ThinRunLang> {
    if limits.k < 1 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    let m = moves_of(a)?;
    let src = FusedSource { thin: ThinRuns::new(&m, p, Some(p2), variant, limits), tracks: Vec::new(), q: a.ctx().q() };
    let dfa = renormalize(&src, a.ctx().q(), &sv_mode(a), STATE_LIMIT)?;
    Ok(ThinRunLang { variant, start: p, end: p2, k: limits.k, dfa })
}

/// Productions of the thin runs from `p` to `p2`, as pe words.
pub fn thin_run_productions(a: &BsAutomaton, p: usize, p2: usize, limits: ThinLimits, variant: RunVariant) -> Result<PeSet> {
    let m = moves_of(a)?;
    let src = FusedSource { thin: ThinRuns::new(&m, p, Some(p2), variant, limits), tracks: Vec::new(), q: a.ctx().q() };
    let dfa = renormalize(&src, a.ctx().q(), &OutputMode::Pe, STATE_LIMIT)?;
    PeSet::new(*a.ctx(), dfa)
}

/// Erases the state blocks of a state-view language.
pub fn sv_to_pe(ctx: &GroupContext, t: &ThinRunLang) -> Result<PeSet> {
    let q = ctx.q();
    let k = pe::token_count(q) as Sym;
    let d = &t.dfa;
    let mut nfa = Nfa::new(pe_alphabet(q));
    for s in 0..d.num_states() as u32 {
        nfa.add_state(d.is_final(s));
    }
    nfa.add_initial(d.initial());
    for s in 0..d.num_states() as u32 {
        for x in 0..d.num_symbols() as Sym {
            let label = if x < k { Some(x) } else { None };
            nfa.add_transition(s, label, d.step(s, x));
        }
    }
    let projected = determinize_minimize(&nfa);
    Ok(PeSet::new(*ctx, canonicalize_language(q, &projected))?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignCase {
    Nonneg,
    Nonpos,
    Mixed,
}

/// `S*` for a set `S` of integer cycle productions.
#[derive(Debug, Clone)]
pub struct IntCycleSet {
    pub sign_case: SignCase,
    pub gcd: u64,
    /// Bound `B ≥ F(S)` (0 in the mixed case).
    pub bound: u128,
    /// Multiples of `gcd` of the right sign missing from `S*`, by absolute value.
    pub gaps: Vec<u64>,
    pub pe_set: PeSet,
}

impl IntCycleSet {
    /// Largest gap (0 when there is none).
    pub fn frobenius(&self) -> u64 {
        self.gaps.last().copied().unwrap_or(0)
    }

    /// Members of `S*` up to the bound, by absolute value.
    pub fn exceptional_set(&self) -> Vec<u64> {
        let b = self.bound as u64;
        (0..=b / self.gcd).map(|i| i * self.gcd).filter(|n| self.gaps.binary_search(n).is_err()).collect()
    }
}

fn prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn abs_u64(g: &GroupElement) -> Result<u64> {
    if !g.is_integer() || g.cursor() != 0 {
        return Err(Error::InvalidArgument(format!("cycle production {g} is not an integer")));
    }
    g.num()
        .magnitude()
        .to_u64()
        .ok_or_else(|| Error::LimitExceeded(format!("cycle production {g} too large")))
}

/// Star of a set of integers given as a PeSet, by the gcd and Frobenius bound method.
pub fn star_of_integers(s: &PeSet, budget: u128) -> Result<IntCycleSet> {
    let ctx = *s.ctx();
    let zero = PeSet::singleton(ctx, &ctx.identity());
    let s = s.difference(&zero)?;
    if s.is_empty() {
        return Err(Error::EmptyCycleSet);
    }
    let positive = !s.intersect(&PeSet::above(ctx, 0))?.is_empty();
    let negative = !s.intersect(&PeSet::nonpos(ctx))?.is_empty();
    let sign_case = match (positive, negative) {
        (true, true) => SignCase::Mixed,
        (true, false) => SignCase::Nonneg,
        _ => SignCase::Nonpos,
    };
    // work with |S| when one-signed, with S itself in the mixed case
    let base = if sign_case == SignCase::Nonpos { s.inverse() } else { s.clone() };
    let multiples = |d: u64| if sign_case == SignCase::Mixed { PeSet::multiples_z(ctx, d) } else { PeSet::divisible(ctx, d) };
    let r = abs_u64(&base.witness().expect("nonempty"))?;
    let mut gcd = 1u64;
    let mut witnesses = vec![r];
    for (p, e) in prime_factors(r) {
        let mut d = 0;
        let mut pd = 1u64;
        while d < e && base.is_subset(&multiples(pd * p)?)? {
            d += 1;
            pd *= p;
        }
        gcd *= pd;
        let outside = base.difference(&multiples(pd * p)?)?;
        witnesses.push(abs_u64(&outside.witness().expect("d is maximal"))?);
    }
    if sign_case == SignCase::Mixed {
        return Ok(IntCycleSet { sign_case, gcd, bound: 0, gaps: Vec::new(), pe_set: PeSet::multiples_z(ctx, gcd)? });
    }
    let top = *witnesses.iter().max().unwrap() as u128;
    let bound = top * top;
    if bound > budget {
        return Err(Error::BudgetExceeded { gcd, bound, limit: budget });
    }
    let b = bound as usize;
    let members: Vec<u64> = (1..=b as u64).filter(|&n| base.contains(&ctx.integer(n, 0))).collect();
    let reach = monoid_upto(&members, b);
    let gaps: Vec<u64> = (0..=b as u64).filter(|&n| n % gcd == 0 && !reach[n as usize]).collect();
    let gap_elems: Vec<GroupElement> = gaps.iter().map(|&n| ctx.integer(n, 0)).collect();
    let mut pe_set = PeSet::divisible(ctx, gcd)?.difference(&PeSet::from_elements(ctx, &gap_elems))?;
    if sign_case == SignCase::Nonpos {
        pe_set = pe_set.inverse();
    }
    Ok(IntCycleSet { sign_case, gcd, bound, gaps, pe_set })
}

/// Membership table of the monoid generated by `members` on `0..=bound`.
pub fn monoid_upto(members: &[u64], bound: usize) -> Vec<bool> {
    let mut reach = vec![false; bound + 1];
    reach[0] = true;
    let mut gens: Vec<usize> = Vec::new();
    let mut is_member = vec![false; bound + 1];
    for &m in members {
        if (m as usize) <= bound {
            is_member[m as usize] = true;
        }
    }
    for n in 1..=bound {
        if gens.iter().any(|&g| g <= n && reach[n - g]) {
            reach[n] = true;
        } else if is_member[n] {
            reach[n] = true;
            gens.push(n);
        }
    }
    reach
}

/// Cycle productions at `p`: returning-left thin runs from `p` to `p`.
pub fn left_cycles(a: &BsAutomaton, p: usize, limits: ThinLimits) -> Result<PeSet> {
    thin_run_productions(a, p, p, limits, RunVariant::ReturningLeft)
}

pub fn left_cycle_star(a: &BsAutomaton, p: usize, limits: ThinLimits, budget: u128) -> Result<IntCycleSet> {
    star_of_integers(&left_cycles(a, p, limits)?, budget)
}

#[derive(Debug, Clone)]
pub struct CompileOptions {
    /// Largest per-vertex bound tried before giving up (capped at `k`).
    pub max_rounds: usize,
    pub budget_limit: u128,
}

impl Default for CompileOptions {
    fn default() -> Self {
        CompileOptions { max_rounds: 8, budget_limit: 1_000_000 }
    }
}

#[derive(Debug, Clone)]
pub struct StarInfo {
    pub state: String,
    pub sign_case: Option<SignCase>,
    pub gcd: u64,
    pub bound: u128,
}

#[derive(Debug, Clone, Default)]
pub struct CompileStats {
    /// Strongly connected components compiled separately.
    pub components: usize,
    pub normalized_states: usize,
    pub move_states: usize,
    pub k: usize,
    /// Per-vertex bound at which the result was certified.
    pub rounds: usize,
    pub stars: Vec<StarInfo>,
    pub result_states: usize,
}

impl CompileStats {
    fn absorb(&mut self, s: CompileStats) {
        self.components += 1;
        self.normalized_states += s.normalized_states;
        self.move_states += s.move_states;
        self.k = self.k.max(s.k);
        self.rounds = self.rounds.max(s.rounds);
        self.stars.extend(s.stars);
    }
}

pub fn compile(a: &BsAutomaton) -> Result<PeSet> {
    Ok(compile_with(a, &CompileOptions::default())?.0)
}

/// Sets `X_p` for the first `ntags` states, for one per-vertex bound.
pub(crate) fn bounded_reach(n: &BsAutomaton, m: &MoveAutomaton, c: usize, k: usize, tracks: Vec<StarTrack>, ntags: usize) -> Result<Vec<PeSet>> {
    let ctx = *n.ctx();
    let limits = ThinLimits { k, per_vertex: Some(c) };
    let src = FusedSource { thin: ThinRuns::new(m, n.initial(), None, RunVariant::All, limits), tracks, q: ctx.q() };
    let dfas = renormalize_tagged(&src, ctx.q(), &OutputMode::Pe, STATE_LIMIT, ntags)?;
    dfas.into_iter().map(|d| PeSet::new(ctx, d)).collect()
}

/// Whether `sets` contains the identity at `initial` and is closed under the labelled edges.
pub(crate) fn closed_under_edges(ctx: &GroupContext, initial: usize, edges: &[(usize, GroupElement, usize)], sets: &[PeSet]) -> Result<bool> {
    if !sets[initial].contains(&ctx.identity()) {
        return Ok(false);
    }
    for (src, g, dst) in edges {
        if !sets[*src].right_multiply(g)?.is_subset(&sets[*dst])? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn compile_with(a: &BsAutomaton, opts: &CompileOptions) -> Result<(PeSet, CompileStats)> {
    let t = a.trim();
    let ctx = *t.ctx();
    let comps = components(&t);
    let mut flow = Flow::new(&t);
    let mut stats = CompileStats::default();
    for comp in &comps {
        flow.advance(&t, comp, opts, &mut stats)?;
    }
    let result = flow.reach[t.final_state()].clone().unwrap_or_else(|| PeSet::empty(ctx));
    stats.result_states = result.dfa().num_states();
    Ok((result, stats))
}

/// Whether `g` lies in the subset accepted by `a`.
///
/// Agrees with `compile_with(a, opts)?.0.contains(g)`. The strongly connected
/// components are consumed from both ends, always on the side whose pending
/// sets are smaller, and the two halves meet on the edges crossing the cut.
pub fn membership_with(a: &BsAutomaton, g: &GroupElement, opts: &CompileOptions) -> Result<bool> {
    let t = a.trim();
    let ctx = *t.ctx();
    let comps = components(&t);
    if comps.len() < 3 {
        return Ok(compile_with(a, opts)?.0.contains(g));
    }
    let r = t.reversed();
    let mut fwd = Flow::new(&t);
    let mut bwd = Flow::new(&r);
    let mut stats = CompileStats::default();
    let (mut i, mut j) = (0, comps.len());
    while i < j {
        let pending = |flow: &Flow, comp: &[usize]| comp.iter().filter_map(|&s| flow.into[s].as_ref()).map(|x| x.dfa().num_states()).sum::<usize>();
        if pending(&fwd, &comps[i]) <= pending(&bwd, &comps[j - 1]) {
            fwd.advance(&t, &comps[i], opts, &mut stats)?;
            i += 1;
        } else {
            bwd.advance(&r, &comps[j - 1], opts, &mut stats)?;
            j -= 1;
        }
    }
    // g = f·[e]·b with b⁻¹ in the reversed reach set of e's target
    let mut side = vec![false; t.num_states()];
    for comp in &comps[i..] {
        for &s in comp {
            side[s] = true;
        }
    }
    for e in t.edges() {
        if side[e.src] || !side[e.dst] {
            continue;
        }
        let (Some(f), Some(b)) = (&fwd.reach[e.src], &bwd.reach[e.dst]) else { continue };
        let left = f.right_multiply(&ctx.eval_word(&e.label))?;
        let right = if g.is_identity() { b.clone() } else { b.left_multiply(g)? };
        if !left.intersect(&right)?.is_empty() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Reach sets propagated through components in topological order.
struct Flow {
    /// Productions of runs entering a state from an earlier component.
    into: Vec<Option<PeSet>>,
    reach: Vec<Option<PeSet>>,
}

impl Flow {
    fn new(t: &BsAutomaton) -> Self {
        let ctx = *t.ctx();
        let mut into = vec![None; t.num_states()];
        into[t.initial()] = Some(PeSet::singleton(ctx, &ctx.identity()));
        Flow { into, reach: vec![None; t.num_states()] }
    }

    fn advance(&mut self, t: &BsAutomaton, comp: &[usize], opts: &CompileOptions, stats: &mut CompileStats) -> Result<()> {
        let ctx = *t.ctx();
        let n = t.num_states();
        let mut local = vec![usize::MAX; n];
        for (i, &s) in comp.iter().enumerate() {
            local[s] = i;
        }
        let inner: Vec<BsEdge> = t
            .edges()
            .iter()
            .filter(|e| local[e.src] != usize::MAX && local[e.dst] != usize::MAX)
            .map(|e| BsEdge { src: local[e.src], dst: local[e.dst], label: e.label.clone() })
            .collect();
        for &u in comp {
            let Some(entry) = self.into[u].clone() else { continue };
            let sets = if inner.is_empty() {
                vec![PeSet::singleton(ctx, &ctx.identity())]
            } else {
                let names = comp.iter().map(|&s| t.states()[s].clone()).collect();
                let sub = BsAutomaton::new(ctx, names, inner.clone(), local[u], local[u])?;
                let edges: Vec<_> = inner.iter().map(|e| (e.src, ctx.eval_word(&e.label), e.dst)).collect();
                let (sets, s) = combine_keyed(&sub.normalize_edges(), comp.len(), &edges, opts)?;
                stats.absorb(s);
                sets
            };
            for (i, &v) in comp.iter().enumerate() {
                let add = entry.product(&sets[i])?;
                self.reach[v] = Some(match self.reach[v].take() {
                    Some(r) => r.union(&add)?,
                    None => add,
                });
            }
        }
        for e in t.edges() {
            if local[e.src] != usize::MAX && local[e.dst] == usize::MAX {
                if let Some(r) = &self.reach[e.src] {
                    let add = r.right_multiply(&ctx.eval_word(&e.label))?;
                    self.into[e.dst] = Some(match self.into[e.dst].take() {
                        Some(x) => x.union(&add)?,
                        None => add,
                    });
                }
            }
        }
        Ok(())
    }
}

/// Strongly connected components in topological order.
fn components(a: &BsAutomaton) -> Vec<Vec<usize>> {
    let n = a.num_states();
    let mut fwd = vec![Vec::new(); n];
    let mut bwd = vec![Vec::new(); n];
    for e in a.edges() {
        fwd[e.src].push(e.dst);
        bwd[e.dst].push(e.src);
    }
    // Kosaraju: finishing order on the graph, then sweeps on the reverse
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut stack = vec![(root, 0)];
        while let Some((v, i)) = stack.pop() {
            if i < fwd[v].len() {
                stack.push((v, i + 1));
                let w = fwd[v][i];
                if !seen[w] {
                    seen[w] = true;
                    stack.push((w, 0));
                }
            } else {
                order.push(v);
            }
        }
    }
    let mut comp_of = vec![usize::MAX; n];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for &root in order.iter().rev() {
        if comp_of[root] != usize::MAX {
            continue;
        }
        let id = out.len();
        comp_of[root] = id;
        let mut members = vec![root];
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for &w in &bwd[v] {
                if comp_of[w] == usize::MAX {
                    comp_of[w] = id;
                    members.push(w);
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// Thickness cap of round `c`, growing up to `k`.
pub fn round_thickness(c: usize, k: usize) -> usize {
    (2 * c + 2).min(k)
}

/// Compiles a normalized automaton.
pub fn combine(n: &BsAutomaton, opts: &CompileOptions) -> Result<(PeSet, CompileStats)> {
    if !n.is_normalized() {
        return Err(Error::InvalidArgument("automaton is not normalized".into()));
    }
    let ctx = n.ctx();
    let edges: Vec<_> = n.edges().iter().map(|e| (e.src, ctx.eval_word(&e.label), e.dst)).collect();
    let (mut sets, mut stats) = combine_keyed(n, n.num_states(), &edges, opts)?;
    let result = sets.swap_remove(n.final_state());
    stats.components = 1;
    stats.result_states = result.dfa().num_states();
    Ok((result, stats))
}

/// Certifies sets for the states `0..keys`, closed under `edges` between them.
fn combine_keyed(n: &BsAutomaton, keys: usize, edges: &[(usize, GroupElement, usize)], opts: &CompileOptions) -> Result<(Vec<PeSet>, CompileStats)> {
    let m = moves_of(n)?;
    let k = thickness_bound(n.num_states());
    let mut stats = CompileStats {
        components: 1,
        normalized_states: n.num_states(),
        move_states: m.num_states,
        k,
        rounds: 0,
        stars: Vec::new(),
        result_states: 0,
    };
    let mut stars: Vec<Option<PeSet>> = Vec::new();
    let mut star_bound = (0, 0);
    for c in 1..=opts.max_rounds.min(k) {
        // cycles always visit their base vertex twice
        let pv = c.max(2);
        let kc = round_thickness(c, k);
        if (pv, kc) != star_bound {
            star_bound = (pv, kc);
            stars.clear();
            stats.stars.clear();
            for p in 0..n.num_states() {
                let name = n.states()[p].clone();
                let r = left_cycle_star(n, p, ThinLimits { k: kc, per_vertex: Some(pv) }, opts.budget_limit);
                match r {
                    Ok(star) => {
                        stats.stars.push(StarInfo { state: name, sign_case: Some(star.sign_case), gcd: star.gcd, bound: star.bound });
                        stars.push(Some(star.pe_set));
                    }
                    Err(Error::EmptyCycleSet) => {
                        stats.stars.push(StarInfo { state: name, sign_case: None, gcd: 0, bound: 0 });
                        stars.push(None);
                    }
                    Err(e) => return Err(e),
                }
            }
        }
        // cycles at the start first, since they can be prepended to any run
        let at_start: Vec<usize> = stars[n.initial()].iter().map(|_| n.initial()).collect();
        let all: Vec<usize> = (0..n.num_states()).filter(|&p| stars[p].is_some()).collect();
        let mut choices = vec![at_start];
        if all != choices[0] {
            choices.push(all);
        }
        for chosen in choices {
            let tracks = chosen.iter().map(|&p| StarTrack::new(p, stars[p].as_ref().unwrap())).collect();
            let sets = bounded_reach(n, &m, c, kc, tracks, keys)?;
            if closed_under_edges(n.ctx(), n.initial(), edges, &sets)? {
                stats.rounds = c;
                return Ok((sets, stats));
            }
        }
    }
    Err(Error::LimitExceeded(format!("no closed approximation up to per-vertex bound {}", opts.max_rounds.min(k))))
}
