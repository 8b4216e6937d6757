//! Decision procedures on rational and PE-regular subsets.

use std::fmt;

use crate::bs::{BsAutomaton, BsEdge};
use crate::compile::{compile, membership_with, CompileOptions};
use crate::error::{Error, Result};
use crate::group::{GeneratorWord, GroupContext};
use crate::pe_regular::PeSet;

/// Whether the element spelled by `w` lies in the subset accepted by `a`.
pub fn rational_membership(a: &BsAutomaton, w: &GeneratorWord) -> Result<bool> {
    membership_with(a, &a.ctx().eval_word(w), &CompileOptions::default())
}

/// Membership test for one fixed subset, compiled once.
#[derive(Debug, Clone)]
pub struct FixedSubsetMatcher {
    set: PeSet,
}

impl FixedSubsetMatcher {
    pub fn new(set: PeSet) -> Self {
        FixedSubsetMatcher { set }
    }

    pub fn from_automaton(a: &BsAutomaton) -> Result<Self> {
        Ok(FixedSubsetMatcher { set: compile(a)? })
    }

    pub fn set(&self) -> &PeSet {
        &self.set
    }

    pub fn accepts(&self, w: &GeneratorWord) -> bool {
        self.set.contains(&self.set.ctx().eval_word(w))
    }
}

/// `S·h ⊆ S` and `S·h⁻¹ ⊆ S` for `h = (0,k)` and every `h = (q^ℓ − q^(ℓ+k), 0)`.
pub fn is_k_periodic(r: &PeSet, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::InvalidArgument("period must be positive".into()));
    }
    let ctx = *r.ctx();
    let shift = PeSet::shift_set(ctx, k as i64);
    let (h, h_inv) = PeSet::pdiff_sets(ctx, k)?;
    for m in [shift.clone(), shift.inverse(), h, h_inv] {
        if !r.product(&m)?.is_subset(r)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecognizabilityVerdict {
    Recognizable(usize),
    /// No period up to the bound; inconclusive.
    NotPeriodicUpTo(usize),
}

impl fmt::Display for RecognizabilityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RecognizabilityVerdict::Recognizable(k) => write!(f, "recognizable period {k}"),
            RecognizabilityVerdict::NotPeriodicUpTo(k) => write!(f, "inconclusive: no period up to {k}"),
        }
    }
}

/// Default search bound: the state count of the minimal DFA.
pub fn default_k_max(r: &PeSet) -> usize {
    r.dfa().num_states().max(1)
}

pub fn is_recognizable_bounded(r: &PeSet, k_max: usize) -> Result<RecognizabilityVerdict> {
    if k_max == 0 {
        return Err(Error::InvalidArgument("k_max must be positive".into()));
    }
    for k in 1..=k_max {
        if is_k_periodic(r, k)? {
            return Ok(RecognizabilityVerdict::Recognizable(k));
        }
    }
    Ok(RecognizabilityVerdict::NotPeriodicUpTo(k_max))
}

/// One state, one loop per generator and per inverse.
pub fn subgroup_automaton(ctx: GroupContext, gens: &[GeneratorWord]) -> Result<BsAutomaton> {
    if gens.is_empty() {
        return Err(Error::InvalidArgument("no generators".into()));
    }
    let mut edges = Vec::new();
    for g in gens {
        edges.push(BsEdge { src: 0, dst: 0, label: g.clone() });
        edges.push(BsEdge { src: 0, dst: 0, label: g.inverse() });
    }
    BsAutomaton::new(ctx, vec!["h".into()], edges, 0, 0)
}

pub fn has_finite_index_bounded(ctx: GroupContext, gens: &[GeneratorWord], k_max: usize) -> Result<RecognizabilityVerdict> {
    is_recognizable_bounded(&compile(&subgroup_automaton(ctx, gens)?)?, k_max)
}
