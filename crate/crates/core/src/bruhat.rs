//! Bruhat order, subexpressions and distinguished subexpressions.
//!
//! A word `(i_1, ..., i_r)` for `w = s_{i_1} ⋯ s_{i_r}` is consumed from the
//! right: stage `k` multiplies on the left by the letter at position
//! `r - k`, so the stages run `w_0 = e, w_1 ∈ {e, s_{i_r}}, ...` and the
//! all-apply sequence ends at `w` itself.

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::weyl::{ElemId, WeylGroup, Word};

/// The full Bruhat order of a group as a dense matrix of down-sets.
#[derive(Debug, Clone)]
pub struct BruhatOrder {
    below: Vec<FixedBitSet>,
}

impl BruhatOrder {
    /// Evaluates the descent recursion for every pair: with `s b < b`,
    /// `a <= b` iff `min(a, s a) <= s b`. Rows are filled in id order, which
    /// is length order, so `s b` is always finished before `b`.
    pub fn build(group: &WeylGroup) -> Self {
        let n = group.len();
        let mut below: Vec<FixedBitSet> = Vec::with_capacity(n);
        for b in group.ids() {
            let mut row = FixedBitSet::with_capacity(n);
            if b == ElemId::IDENTITY {
                row.insert(0);
            } else {
                let s = (0..group.rank())
                    .find(|&i| group.is_left_descent(i, b))
                    .expect("non-identity element has a left descent");
                let sb = group.lmul(s, b);
                let prev = &below[sb.index()];
                for a in group.ids() {
                    let sa = group.lmul(s, a);
                    let m = if group.length(sa) < group.length(a) { sa } else { a };
                    if prev.contains(m.index()) {
                        row.insert(a.index());
                    }
                }
            }
            below.push(row);
        }
        BruhatOrder { below }
    }

    pub fn leq(&self, a: ElemId, b: ElemId) -> bool {
        self.below[b.index()].contains(a.index())
    }

    /// `{a : a <= b}` as a bitset over element ids.
    pub fn down_set(&self, b: ElemId) -> &FixedBitSet {
        &self.below[b.index()]
    }

    pub fn comparable_pairs(&self) -> usize {
        self.below.iter().map(|row| row.count_ones(..)).sum()
    }
}

impl WeylGroup {
    /// The Bruhat order matrix, built on first use and shared afterwards.
    pub fn bruhat(&self) -> &BruhatOrder {
        self.bruhat.get_or_init(|| BruhatOrder::build(self))
    }

    pub fn bruhat_leq(&self, a: ElemId, b: ElemId) -> bool {
        self.bruhat().leq(a, b)
    }

    pub fn bruhat_lt(&self, a: ElemId, b: ElemId) -> bool {
        a != b && self.bruhat_leq(a, b)
    }
}

/// A stage sequence `(w_0, ..., w_r)` along a reduced word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subexpression {
    word: Word,
    stages: Vec<ElemId>,
}

impl Subexpression {
    /// Checks `w_0 = e` and `w_k w_{k-1}^{-1} ∈ {e, s_k}` at every stage.
    pub fn new(group: &WeylGroup, word: Word, stages: Vec<ElemId>) -> Result<Self> {
        if stages.len() != word.len() + 1 {
            return Err(Error::domain(format!(
                "{} stages for a word of length {}",
                stages.len(),
                word.len()
            )));
        }
        if stages[0] != ElemId::IDENTITY {
            return Err(Error::domain("first stage must be the identity"));
        }
        for k in 1..stages.len() {
            let s = stage_letter(&word, k);
            let (prev, cur) = (stages[k - 1], stages[k]);
            if cur != prev && cur != group.lmul(s, prev) {
                return Err(Error::domain(format!(
                    "stage {k} is neither w_{{k-1}} nor s{} w_{{k-1}}",
                    s + 1
                )));
            }
        }
        Ok(Subexpression { word, stages })
    }

    /// Builds the stage sequence from per-stage apply/stay choices.
    pub fn from_choices(group: &WeylGroup, word: Word, apply: &[bool]) -> Result<Self> {
        if apply.len() != word.len() {
            return Err(Error::domain("one choice per letter required"));
        }
        let mut stages = vec![ElemId::IDENTITY];
        for (k, &a) in apply.iter().enumerate() {
            let prev = stages[k];
            stages.push(if a { group.lmul(stage_letter(&word, k + 1), prev) } else { prev });
        }
        Ok(Subexpression { word, stages })
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn stages(&self) -> &[ElemId] {
        &self.stages
    }

    pub fn endpoint(&self) -> ElemId {
        *self.stages.last().expect("at least one stage")
    }

    /// `true` at stage `k` (0-based) when the letter was applied.
    pub fn choices(&self) -> Vec<bool> {
        self.stages.windows(2).map(|p| p[0] != p[1]).collect()
    }

    /// 0-based letter used at stage `k` (1-based).
    pub fn letter(&self, k: usize) -> usize {
        stage_letter(&self.word, k)
    }
}

fn stage_letter(word: &Word, k: usize) -> usize {
    word.letters()[word.len() - k] as usize
}

fn require_reduced(group: &WeylGroup, word: &Word) -> Result<()> {
    if !group.is_reduced(word)? {
        return Err(Error::domain(format!("word ({word}) is not reduced")));
    }
    Ok(())
}

/// All `w'` reachable as a subexpression of the word: the subword products.
pub fn subexpression_endpoints(group: &WeylGroup, word: &Word) -> Result<BTreeSet<ElemId>> {
    require_reduced(group, word)?;
    let mut current = BTreeSet::from([ElemId::IDENTITY]);
    for k in 1..=word.len() {
        let s = stage_letter(word, k);
        let applied: Vec<ElemId> = current.iter().map(|&w| group.lmul(s, w)).collect();
        current.extend(applied);
    }
    Ok(current)
}

/// `w_k <= s_k w_{k-1}` at every stage.
pub fn is_distinguished(group: &WeylGroup, sub: &Subexpression) -> Result<bool> {
    // Re-validate so hand-built values cannot smuggle in malformed stages.
    let sub = Subexpression::new(group, sub.word.clone(), sub.stages.clone())?;
    Ok((1..sub.stages.len()).all(|k| distinguished_step(group, sub.letter(k), sub.stages[k - 1], sub.stages[k])))
}

fn distinguished_step(group: &WeylGroup, s: usize, prev: ElemId, cur: ElemId) -> bool {
    group.bruhat_leq(cur, group.lmul(s, prev))
}

/// Every distinguished subexpression of the word, in apply-before-stay order.
pub fn distinguished_subexpressions(group: &WeylGroup, word: &Word) -> Result<Vec<Subexpression>> {
    require_reduced(group, word)?;
    let mut out = Vec::new();
    let mut stages = vec![ElemId::IDENTITY];
    walk_distinguished(group, word, &mut stages, &mut |st| {
        out.push(Subexpression { word: word.clone(), stages: st.to_vec() });
        false
    });
    Ok(out)
}

/// Endpoints of the distinguished subexpressions.
pub fn distinguished_endpoints(group: &WeylGroup, word: &Word) -> Result<BTreeSet<ElemId>> {
    require_reduced(group, word)?;
    let mut out = BTreeSet::new();
    let mut stages = vec![ElemId::IDENTITY];
    walk_distinguished(group, word, &mut stages, &mut |st| {
        out.insert(*st.last().unwrap());
        false
    });
    Ok(out)
}

/// The first distinguished subexpression ending at `target`, exploring
/// "apply" before "stay" at every stage.
pub fn find_distinguished(group: &WeylGroup, word: &Word, target: ElemId) -> Result<Subexpression> {
    require_reduced(group, word)?;
    let top = group.evaluate(word)?;
    if !group.bruhat_leq(target, top) {
        return Err(Error::NotComparable {
            lower: group.format(target),
            upper: group.format(top),
        });
    }

    // prefix[m] = s_{i_1} ⋯ s_{i_m}, the part of the word still unread when
    // m letters remain.
    let mut prefix = vec![ElemId::IDENTITY];
    for &i in word.letters() {
        prefix.push(group.rmul(*prefix.last().unwrap(), i as usize));
    }

    let mut found = None;
    let mut stages = vec![ElemId::IDENTITY];
    walk_pruned(group, word, &prefix, target, &mut stages, &mut found);
    let stages = found.expect("a distinguished subexpression exists for every w' <= w");
    Ok(Subexpression { word: word.clone(), stages })
}

fn walk_distinguished(
    group: &WeylGroup,
    word: &Word,
    stages: &mut Vec<ElemId>,
    visit: &mut dyn FnMut(&[ElemId]) -> bool,
) -> bool {
    let k = stages.len();
    if k == word.len() + 1 {
        return visit(stages);
    }
    let s = stage_letter(word, k);
    let prev = stages[k - 1];
    for next in [group.lmul(s, prev), prev] {
        if distinguished_step(group, s, prev, next) {
            stages.push(next);
            let stop = walk_distinguished(group, word, stages, visit);
            stages.pop();
            if stop {
                return true;
            }
        }
    }
    false
}

fn walk_pruned(
    group: &WeylGroup,
    word: &Word,
    prefix: &[ElemId],
    target: ElemId,
    stages: &mut Vec<ElemId>,
    found: &mut Option<Vec<ElemId>>,
) {
    let k = stages.len();
    let prev = stages[k - 1];
    if k == word.len() + 1 {
        if prev == target {
            *found = Some(stages.clone());
        }
        return;
    }
    // Any completion is x · prev with x a subword of the unread prefix, so
    // target · prev⁻¹ must lie below that prefix.
    let remaining = prefix[word.len() - (k - 1)];
    if !group.bruhat_leq(group.mul(target, group.inv(prev)), remaining) {
        return;
    }
    let s = stage_letter(word, k);
    for next in [group.lmul(s, prev), prev] {
        if found.is_some() {
            return;
        }
        if distinguished_step(group, s, prev, next) {
            stages.push(next);
            walk_pruned(group, word, prefix, target, stages, found);
            stages.pop();
        }
    }
}
