//! Parabolic subgroups, S-parts, minimal double-coset representatives and
//! the order-reversing bijection `Ω_{S,T}: W_{S,T} → W_{S,θ(T)}`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::root_system::SimpleSubset;
use crate::weyl::{ElemId, WeylGroup};

impl WeylGroup {
    /// Minimal element of the coset `W(S) w`: strip left descents in `S`.
    pub fn s_part_right(&self, w: ElemId, subset: SimpleSubset) -> ElemId {
        let mut w = w;
        while let Some(i) = subset.iter().find(|&i| self.is_left_descent(i, w)) {
            w = self.lmul(i, w);
        }
        w
    }

    /// Minimal element of the coset `w W(S)`: strip right descents in `S`.
    pub fn s_part_left(&self, w: ElemId, subset: SimpleSubset) -> ElemId {
        let mut w = w;
        while let Some(i) = subset.iter().find(|&i| self.is_right_descent(w, i)) {
            w = self.rmul(w, i);
        }
        w
    }

    /// Minimal element of `W(S) w W(T)`: first the minimum of `w W(T)`,
    /// then the minimum of `W(S)` times that.
    pub fn min_double_rep(&self, w: ElemId, s: SimpleSubset, t: SimpleSubset) -> ElemId {
        self.s_part_right(self.s_part_left(w, t), s)
    }

    /// `w` has no left descent in `S` and no right descent in `T`.
    pub fn is_min_double_rep(&self, w: ElemId, s: SimpleSubset, t: SimpleSubset) -> bool {
        s.iter().all(|i| !self.is_left_descent(i, w)) && t.iter().all(|i| !self.is_right_descent(w, i))
    }

    /// The whole double coset `W(S) w W(T)`, by closure under the generators.
    pub fn double_coset(&self, w: ElemId, s: SimpleSubset, t: SimpleSubset) -> BTreeSet<ElemId> {
        let mut seen = BTreeSet::from([w]);
        let mut stack = vec![w];
        while let Some(x) = stack.pop() {
            let left = s.iter().map(|i| self.lmul(i, x));
            let right = t.iter().map(|i| self.rmul(x, i));
            for y in left.chain(right).collect::<Vec<_>>() {
                if seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        seen
    }

    /// `w_{o,T}`: the minimal element of `W(T) w_o`.
    pub fn w_o_t(&self, t: SimpleSubset) -> ElemId {
        self.s_part_right(self.longest(), t)
    }

    /// `θ(T) = {-w_o(α) : α ∈ T}`.
    pub fn theta_subset(&self, t: SimpleSubset) -> SimpleSubset {
        let perm = self.root_system().theta_on_simple();
        SimpleSubset::from_indices(t.iter().map(|i| perm[i]))
    }

    /// `Ω_{S,T}(u)`: minimal representative of `W(S) u w_{o,T} W(θ(T))`.
    pub fn omega(&self, u: ElemId, s: SimpleSubset, t: SimpleSubset) -> Result<ElemId> {
        if !self.is_min_double_rep(u, s, t) {
            return Err(Error::domain(format!(
                "{} is not a minimal representative of W({s})\\W/W({t})",
                self.format(u)
            )));
        }
        let x = self.mul(u, self.w_o_t(t));
        Ok(self.min_double_rep(x, s, self.theta_subset(t)))
    }

    /// Elements with a given minimal double-coset representative, grouped:
    /// `reps[k]` and the size of its double coset.
    fn double_coset_partition(&self, s: SimpleSubset, t: SimpleSubset) -> Vec<(ElemId, usize)> {
        let mut counts = vec![0usize; self.len()];
        for w in self.ids() {
            counts[self.min_double_rep(w, s, t).index()] += 1;
        }
        self.ids().filter(|r| counts[r.index()] > 0).map(|r| (r, counts[r.index()])).collect()
    }
}

/// `W_{S,T}` in a fixed enumeration `u_1, ..., u_r`, with `Ω` values.
///
/// Representatives are ordered by length, ties broken by the canonical
/// reduced word, so `u_i <= u_j` implies `i <= j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleCosetTable {
    s: SimpleSubset,
    t: SimpleSubset,
    theta_t: SimpleSubset,
    w_o_t: ElemId,
    reps: Vec<ElemId>,
    coset_sizes: Vec<usize>,
    omega: Vec<ElemId>,
}

impl DoubleCosetTable {
    pub fn build(group: &WeylGroup, s: SimpleSubset, t: SimpleSubset) -> Result<Self> {
        let full = SimpleSubset::full(group.rank());
        if !s.is_subset_of(full) || !t.is_subset_of(full) {
            return Err(Error::config(format!("subsets {s} / {t} exceed rank {}", group.rank())));
        }
        let mut parts = group.double_coset_partition(s, t);
        parts.sort_by(|a, b| {
            (group.length(a.0), group.word(a.0)).cmp(&(group.length(b.0), group.word(b.0)))
        });
        let reps: Vec<ElemId> = parts.iter().map(|p| p.0).collect();
        let coset_sizes = parts.iter().map(|p| p.1).collect();
        let omega = reps
            .iter()
            .map(|&u| group.omega(u, s, t))
            .collect::<Result<Vec<_>>>()?;
        Ok(DoubleCosetTable {
            s,
            t,
            theta_t: group.theta_subset(t),
            w_o_t: group.w_o_t(t),
            reps,
            coset_sizes,
            omega,
        })
    }

    pub fn s(&self) -> SimpleSubset {
        self.s
    }

    pub fn t(&self) -> SimpleSubset {
        self.t
    }

    pub fn theta_t(&self) -> SimpleSubset {
        self.theta_t
    }

    pub fn w_o_t(&self) -> ElemId {
        self.w_o_t
    }

    /// `u_1, ..., u_r` (0-based here).
    pub fn reps(&self) -> &[ElemId] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// `|W(S) u_i W(T)|`.
    pub fn coset_sizes(&self) -> &[usize] {
        &self.coset_sizes
    }

    /// `Ω(u_i)`, an element of `W_{S,θ(T)}`.
    pub fn omega(&self) -> &[ElemId] {
        &self.omega
    }

    pub fn position(&self, u: ElemId) -> Option<usize> {
        self.reps.iter().position(|&r| r == u)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{CartanKind, RootSystem};
    use crate::weyl::Word;

    fn group(kind: CartanKind, rank: usize) -> WeylGroup {
        WeylGroup::enumerate(RootSystem::build(kind, rank).unwrap()).unwrap()
    }

    fn w(g: &WeylGroup, s: &str) -> ElemId {
        g.evaluate(&Word::parse(s, g.rank()).unwrap()).unwrap()
    }

    fn sub(ix: &[usize]) -> SimpleSubset {
        SimpleSubset::from_indices(ix.iter().copied())
    }

    #[test]
    fn s_part_examples() {
        let g = group(CartanKind::A, 2);
        for x in g.ids() {
            assert_eq!(g.s_part_right(x, SimpleSubset::EMPTY), x);
        }
        assert_eq!(g.s_part_right(w(&g, "1,2"), sub(&[0])), w(&g, "2"));
        assert_eq!(g.s_part_right(w(&g, "1"), sub(&[0])), ElemId::IDENTITY);
        assert_eq!(g.s_part_left(w(&g, "1,2"), sub(&[1])), w(&g, "1"));
    }

    #[test]
    fn min_double_rep_examples() {
        let g = group(CartanKind::A, 2);
        assert_eq!(g.min_double_rep(w(&g, "2,1"), SimpleSubset::EMPTY, SimpleSubset::EMPTY), w(&g, "2,1"));
        assert_eq!(g.min_double_rep(g.longest(), sub(&[0]), sub(&[1])), w(&g, "2,1"));
        assert_eq!(g.min_double_rep(w(&g, "1,2"), sub(&[0]), sub(&[1])), ElemId::IDENTITY);
    }

    #[test]
    fn min_double_rep_matches_scan() {
        for (kind, rank) in [(CartanKind::A, 3), (CartanKind::B, 3), (CartanKind::G2, 2)] {
            let g = group(kind, rank);
            for s in SimpleSubset::all(rank) {
                for t in SimpleSubset::all(rank) {
                    for x in g.ids() {
                        let scan = g
                            .double_coset(x, s, t)
                            .into_iter()
                            .min_by_key(|&y| g.length(y))
                            .unwrap();
                        assert_eq!(g.min_double_rep(x, s, t), scan);
                    }
                }
            }
        }
    }

    #[test]
    fn tables_a2() {
        let g = group(CartanKind::A, 2);
        let all = DoubleCosetTable::build(&g, SimpleSubset::EMPTY, SimpleSubset::EMPTY).unwrap();
        assert_eq!(all.len(), 6);

        let t12 = DoubleCosetTable::build(&g, sub(&[0]), sub(&[1])).unwrap();
        assert_eq!(t12.reps(), &[ElemId::IDENTITY, w(&g, "2,1")]);
        assert_eq!(t12.coset_sizes(), &[4, 2]);
        assert_eq!(t12.omega(), &[w(&g, "2"), ElemId::IDENTITY]);

        let t11 = DoubleCosetTable::build(&g, sub(&[0]), sub(&[0])).unwrap();
        assert_eq!(t11.reps(), &[ElemId::IDENTITY, w(&g, "2")]);
    }

    #[test]
    fn w_o_t_examples() {
        let g = group(CartanKind::A, 2);
        assert_eq!(g.w_o_t(SimpleSubset::EMPTY), g.longest());
        assert_eq!(g.w_o_t(SimpleSubset::full(2)), ElemId::IDENTITY);
        assert_eq!(g.w_o_t(sub(&[1])), w(&g, "1,2"));
        for t in SimpleSubset::all(2) {
            assert_eq!(g.mul(g.longest_in(t), g.w_o_t(t)), g.longest());
        }
    }

    #[test]
    fn theta_subset_examples() {
        let a2 = group(CartanKind::A, 2);
        assert_eq!(a2.theta_subset(sub(&[0])), sub(&[1]));
        assert_eq!(a2.theta_subset(SimpleSubset::EMPTY), SimpleSubset::EMPTY);
        let b2 = group(CartanKind::B, 2);
        for t in SimpleSubset::all(2) {
            assert_eq!(b2.theta_subset(t), t);
        }
    }

    #[test]
    fn omega_examples() {
        let a1 = group(CartanKind::A, 1);
        let e = SimpleSubset::EMPTY;
        assert_eq!(a1.omega(ElemId::IDENTITY, e, e).unwrap(), a1.simple(0));
        assert_eq!(a1.omega(a1.simple(0), e, e).unwrap(), ElemId::IDENTITY);

        let a2 = group(CartanKind::A, 2);
        let full = SimpleSubset::full(2);
        let t = DoubleCosetTable::build(&a2, full, full).unwrap();
        assert_eq!(t.reps(), &[ElemId::IDENTITY]);
        assert_eq!(t.omega(), &[ElemId::IDENTITY]);

        assert!(matches!(a2.omega(w(&a2, "1,2"), sub(&[0]), sub(&[1])), Err(Error::Domain(_))));
    }

    #[test]
    fn partition_sizes_sum_to_order() {
        let g = group(CartanKind::B, 3);
        for s in SimpleSubset::all(3) {
            for t in SimpleSubset::all(3) {
                let table = DoubleCosetTable::build(&g, s, t).unwrap();
                assert_eq!(table.coset_sizes().iter().sum::<usize>(), g.len());
                for (&u, &size) in table.reps().iter().zip(table.coset_sizes()) {
                    assert_eq!(g.double_coset(u, s, t).len(), size);
                }
            }
        }
    }
}
