//! Brute-force references: bounded run search, integer sumsets and window
//! comparisons against compiled sets.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::bs::{BsAutomaton, RunVariant, StateView};
use crate::group::{GroupContext, GroupElement};
use crate::pe;
use crate::pe_regular::PeSet;

/// Productions of all accepting runs with at most `max_run_len` edges.
pub fn reachable_elements(a: &BsAutomaton, max_run_len: usize) -> BTreeSet<GroupElement> {
    let ctx = a.ctx();
    let labels: Vec<GroupElement> = a.edges().iter().map(|e| ctx.eval_word(&e.label)).collect();
    let mut out = BTreeSet::new();
    let mut seen: HashSet<(usize, GroupElement)> = HashSet::new();
    let mut layer = vec![(a.initial(), ctx.identity())];
    seen.insert(layer[0].clone());
    for step in 0..=max_run_len {
        for (s, g) in &layer {
            if *s == a.final_state() {
                out.insert(g.clone());
            }
        }
        if step == max_run_len {
            break;
        }
        let mut next = Vec::new();
        for (s, g) in &layer {
            for (e, h) in a.edges().iter().zip(&labels) {
                if e.src == *s {
                    let key = (e.dst, ctx.multiply(g, h));
                    if seen.insert(key.clone()) {
                        next.push(key);
                    }
                }
            }
        }
        layer = next;
    }
    out
}

/// Whether some accepting run with at most `max_run_len` edges produces `g`.
///
/// Meets in the middle: forward layers from `(initial, 1)` and backward
/// layers from `(final, g)`, each of half the length.
pub fn witness_search(a: &BsAutomaton, g: &GroupElement, max_run_len: usize) -> bool {
    let ctx = a.ctx();
    let labels: Vec<GroupElement> = a.edges().iter().map(|e| ctx.eval_word(&e.label)).collect();
    let inverses: Vec<GroupElement> = labels.iter().map(|h| ctx.inverse(h)).collect();
    let grow = |start: (usize, GroupElement), steps: usize, forward: bool| {
        let mut seen: HashSet<(usize, GroupElement)> = HashSet::new();
        seen.insert(start.clone());
        let mut layer = vec![start];
        for _ in 0..steps {
            let mut next = Vec::new();
            for (s, x) in &layer {
                for (i, e) in a.edges().iter().enumerate() {
                    let key = if forward && e.src == *s {
                        (e.dst, ctx.multiply(x, &labels[i]))
                    } else if !forward && e.dst == *s {
                        (e.src, ctx.multiply(x, &inverses[i]))
                    } else {
                        continue;
                    };
                    if seen.insert(key.clone()) {
                        next.push(key);
                    }
                }
            }
            layer = next;
        }
        seen
    };
    let fwd = grow((a.initial(), ctx.identity()), max_run_len.div_ceil(2), true);
    let bwd = grow((a.final_state(), g.clone()), max_run_len / 2, false);
    let (small, large) = if fwd.len() <= bwd.len() { (&fwd, &bwd) } else { (&bwd, &fwd) };
    small.iter().any(|x| large.contains(x))
}

/// Membership table of the submonoid generated by `s` on `0..=limit`.
pub fn sumset_star(s: &[u64], limit: usize) -> Vec<bool> {
    let mut table = vec![false; limit + 1];
    table[0] = true;
    for n in 1..=limit {
        table[n] = s.iter().any(|&x| x >= 1 && x as usize <= n && table[n - x as usize]);
    }
    table
}

/// Smallest integer part `m` such that `m + 2^-1 + ... + 2^-n` is a sum of
/// `k ≤ max_terms` elements `1 + 2^-d` with `1 ≤ d ≤ max_exp`.
pub fn smallest_integer_part(n: u32, max_terms: u32, max_exp: u32) -> Option<u64> {
    let scale = 1u64 << max_exp;
    let target_frac = scale - (scale >> n);
    let mut best: Option<u64> = None;
    // nondecreasing exponent sequences
    fn go(k: u32, from: u32, max_terms: u32, max_exp: u32, frac_sum: u64, scale: u64, target: u64, best: &mut Option<u64>) {
        if k > 0 {
            let total = k as u64 * scale + frac_sum;
            if total % scale == target {
                let m = total / scale;
                if best.map_or(true, |b| m < b) {
                    *best = Some(m);
                }
            }
        }
        if k == max_terms {
            return;
        }
        for d in from..=max_exp {
            go(k + 1, d, max_terms, max_exp, frac_sum + (scale >> d), scale, target, best);
        }
    }
    go(0, 1, max_terms, max_exp, 0, scale, target_frac, &mut best);
    best
}

/// Checks that the smallest integer part paired with `2^-1 + ... + 2^-n` is
/// `n` for every `n ≤ n_max`, searching sums of up to 8 terms with exponents up to 8.
pub fn iteration_counterexample_check(n_max: u32) -> bool {
    (1..=n_max).all(|n| smallest_integer_part(n, 8, 8) == Some(n as u64))
}

/// Token count of the canonical pe word of `g`.
pub fn pe_len(ctx: &GroupContext, g: &GroupElement) -> usize {
    1 + pe::encode(ctx, g).digits.len()
}

/// Elements with at most `max_tokens` pe tokens reached by at most `max_run`
/// steps, compared against a compiled set.
#[derive(Debug, Clone)]
pub struct WindowReport {
    pub ctx: GroupContext,
    pub fixture: String,
    pub max_pe_len: usize,
    pub max_run: usize,
    pub only_in_compiled: Vec<GroupElement>,
    pub only_in_oracle: Vec<GroupElement>,
    pub agreement_count: usize,
}

impl WindowReport {
    pub fn passed(&self) -> bool {
        self.only_in_compiled.is_empty() && self.only_in_oracle.is_empty()
    }
}

impl fmt::Display for WindowReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "fixture {}", self.fixture)?;
        writeln!(f, "max_pe_len {}", self.max_pe_len)?;
        writeln!(f, "max_run {}", self.max_run)?;
        writeln!(f, "agreement {}", self.agreement_count)?;
        let list = |v: &[GroupElement]| v.iter().map(|g| pe::encode(&self.ctx, g).to_text()).collect::<Vec<_>>().join("; ");
        writeln!(f, "only_in_compiled {} [{}]", self.only_in_compiled.len(), list(&self.only_in_compiled))?;
        writeln!(f, "only_in_oracle {} [{}]", self.only_in_oracle.len(), list(&self.only_in_oracle))?;
        write!(f, "result {}", if self.passed() { "pass" } else { "fail" })
    }
}

pub fn window_check(fixture: &str, a: &BsAutomaton, compiled: &PeSet, max_run: usize, max_pe_len: usize) -> WindowReport {
    let oracle: BTreeSet<GroupElement> = reachable_elements(a, max_run).into_iter().filter(|g| pe_len(a.ctx(), g) <= max_pe_len).collect();
    let comp: BTreeSet<GroupElement> = compiled.members(max_pe_len).into_iter().collect();
    WindowReport {
        ctx: *a.ctx(),
        fixture: fixture.to_string(),
        max_pe_len,
        max_run,
        only_in_compiled: comp.difference(&oracle).cloned().collect(),
        only_in_oracle: oracle.difference(&comp).cloned().collect(),
        agreement_count: comp.intersection(&oracle).count(),
    }
}

/// State views (as token words) of the runs `p → p2` of the given variant with
/// at most `max_len` edges and thickness at most `k`.
pub fn thin_state_views(a: &BsAutomaton, p: usize, p2: usize, k: usize, variant: RunVariant, max_len: usize) -> BTreeSet<Vec<u32>> {
    let q = a.ctx().q();
    a.enumerate_runs(p, p2, max_len, variant, Some(k))
        .iter()
        .map(|r| StateView::tokens(&a.state_view(r).expect("enumerated runs are valid"), q))
        .collect()
}

/// Largest `|[ρ]|` over runs, compared against `q^(2ℓ)`; returns the violating runs' lengths.
pub fn magnitude_violations(a: &BsAutomaton, max_len: usize) -> Vec<(usize, usize, GroupElement)> {
    let ctx = a.ctx();
    let mut out = Vec::new();
    for p in 0..a.num_states() {
        for r in a.enumerate_runs(p, p, max_len, RunVariant::ReturningLeft, None) {
            let g = ctx.eval_word(&a.run_label(&r));
            let len = r.edges.len();
            if !ctx.abs_le_power(&g, 2 * len as i64) {
                out.push((p, len, g));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const CYCLES: &str = "bs q=2\nstate p0 initial final\nstate p1\nstate p2\nstate p3\n\
        edge p0 p0 t^-1\nedge p0 p1 a\nedge p1 p2 t\nedge p2 p3 a\nedge p3 p0 t\n";

    #[test]
    fn reachable_cycles() {
        let b = BsAutomaton::parse(CYCLES).unwrap();
        let c = *b.ctx();
        let r = reachable_elements(&b, 6);
        for g in [c.integer(3, 2), c.integer(3, 0), c.identity()] {
            assert!(r.contains(&g), "{g}");
        }
        for j in 0..=6 {
            assert!(r.contains(&c.integer(0, -j)));
        }
        assert!(!r.contains(&c.integer(1, 0)));
        assert!(!r.contains(&c.integer(2, 0)));
        assert_eq!(reachable_elements(&b, 0).into_iter().collect::<Vec<_>>(), vec![c.identity()]);
    }

    #[test]
    fn witnesses_cycles() {
        let b = BsAutomaton::parse(CYCLES).unwrap();
        let c = *b.ctx();
        assert!(witness_search(&b, &c.integer(3, 0), 6));
        assert!(!witness_search(&b, &c.integer(3, 0), 5));
        assert!(witness_search(&b, &c.integer(27, 0), 18));
        assert!(!witness_search(&b, &c.integer(1, 0), 16));
        assert!(witness_search(&b, &c.identity(), 0));
    }

    #[test]
    fn sumsets() {
        let t = sumset_star(&[3, 5], 10);
        let yes: Vec<usize> = (0..=10).filter(|&i| t[i]).collect();
        assert_eq!(yes, vec![0, 3, 5, 6, 8, 9, 10]);
        assert_eq!(sumset_star(&[], 5), vec![true, false, false, false, false, false]);
        assert!(sumset_star(&[1], 5).iter().all(|&b| b));
    }

    #[test]
    fn smallest_integer_examples() {
        assert_eq!(smallest_integer_part(1, 8, 8), Some(1));
        assert_eq!(smallest_integer_part(3, 8, 8), Some(3));
        assert!(iteration_counterexample_check(6));
    }

    #[test]
    fn pe_lengths() {
        let c = GroupContext::new(2).unwrap();
        assert_eq!(pe_len(&c, &c.identity()), 2);
        assert_eq!(pe_len(&c, &c.integer(27, 0)), 6);
    }
}
