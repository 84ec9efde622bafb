//! A finite-field model for `G = GL_n(F_q)`: `B` is upper triangular, `B⁻`
//! lower triangular, and `W = S_n` acts by permutation matrices.
//!
//! Cells are read off rank profiles. For `g ∈ B ẇ B` the southwest blocks
//! give `rank g[i.., ..j] = #{k < j : w(k) >= i}`; for `g ∈ B ẇ' B⁻` the
//! southeast blocks give `rank g[i.., j..] = #{k >= j : w'(k) >= i}`.

mod matrix;
mod perm;

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use matrix::{FqMatrix, SUPPORTED_PRIMES};
pub use perm::Perm;

use crate::error::{Error, Result};
use crate::orbit::Side;
use crate::root_system::{CartanKind, RootSystem, SimpleSubset};
use crate::weyl::{ElemId, WeylGroup};

/// Largest `q^(n²)` a full sweep will enumerate.
pub const MAX_SWEEP: u64 = 20_000;

/// The symmetric group `S_n` as the Weyl group of `A_{n-1}`.
pub fn symmetric_group(n: usize) -> Result<WeylGroup> {
    if !(2..=4).contains(&n) {
        return Err(Error::config(format!("matrix size {n} outside 2..=4")));
    }
    WeylGroup::enumerate(RootSystem::build(CartanKind::A, n - 1)?)
}

/// `w` with `g ∈ B ẇ B`.
pub fn cell_bwb(g: &FqMatrix) -> Result<Perm> {
    let n = g.n();
    let c = rank_profile(g, |i, j| g.block_rank(i..n, 0..j));
    decode(g, |i, j| c[i][j + 1] + c[i + 1][j] - c[i][j] - c[i + 1][j + 1])
}

/// `w'` with `g ∈ B ẇ' B⁻`.
pub fn cell_bwb_minus(g: &FqMatrix) -> Result<Perm> {
    let n = g.n();
    let c = rank_profile(g, |i, j| g.block_rank(i..n, j..n));
    decode(g, |i, j| c[i][j] + c[i + 1][j + 1] - c[i][j + 1] - c[i + 1][j])
}

fn rank_profile(g: &FqMatrix, rank: impl Fn(usize, usize) -> usize) -> Vec<Vec<i64>> {
    let n = g.n();
    (0..=n).map(|i| (0..=n).map(|j| rank(i, j) as i64).collect()).collect()
}

fn decode(g: &FqMatrix, indicator: impl Fn(usize, usize) -> i64) -> Result<Perm> {
    if !g.is_invertible() {
        return Err(Error::domain(format!("{g:?} is singular")));
    }
    let n = g.n();
    let mut images = Vec::with_capacity(n);
    for j in 0..n {
        let rows: Vec<usize> = (0..n).filter(|&i| indicator(i, j) == 1).collect();
        match rows.as_slice() {
            [i] => images.push(*i as u8),
            _ => return Err(Error::domain(format!("rank profile of {g:?} is not a permutation"))),
        }
    }
    Perm::from_images(images)
}

/// The label in `W_{S,T}` of the `P × Q` (or `P × Q⁻`) double coset of `g`.
pub fn parabolic_label(
    group: &WeylGroup,
    g: &FqMatrix,
    s: SimpleSubset,
    t: SimpleSubset,
    side: Side,
) -> Result<ElemId> {
    let w = match side {
        Side::Q => cell_bwb(g)?,
        Side::QMinus => cell_bwb_minus(g)?,
    };
    Ok(group.min_double_rep(w.to_elem(group)?, s, t))
}

/// A cell pair `(w, w')` with the number of `g` in `B ẇ B ∩ B ẇ' B⁻`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCount {
    pub w: String,
    pub w_prime: String,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellSize {
    pub w: String,
    pub bwb: u64,
    pub bwb_minus: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParabolicCheck {
    pub s: Vec<usize>,
    pub t: Vec<usize>,
    pub realized: usize,
    pub expected: usize,
    /// `(u, u')` with `u' <= u` but `P u Q ∩ P u' Q⁻` empty.
    pub missing: Vec<(String, String)>,
    /// `(u, u')` realized although `u' ≰ u`.
    pub unexpected: Vec<(String, String)>,
}

impl ParabolicCheck {
    pub fn passed(&self) -> bool {
        self.missing.is_empty() && self.unexpected.is_empty()
    }
}

/// Result of sweeping all of `GL_n(F_q)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RichardsonReport {
    pub n: usize,
    pub q: u8,
    pub gl_order: u64,
    pub pairs: Vec<PairCount>,
    pub expected_pairs: usize,
    pub missing: Vec<(String, String)>,
    pub unexpected: Vec<(String, String)>,
    pub cells: Vec<CellSize>,
    pub parabolic: Vec<ParabolicCheck>,
}

impl RichardsonReport {
    pub fn borel_ok(&self) -> bool {
        self.missing.is_empty() && self.unexpected.is_empty()
    }

    pub fn passed(&self) -> bool {
        self.borel_ok() && self.parabolic.iter().all(ParabolicCheck::passed)
    }
}

/// Classifies every `g ∈ GL_n(F_q)` by its pair of cells and checks that
/// `B ẇ B ∩ B ẇ' B⁻` is nonempty exactly when `w' <= w`, then the same for
/// every pair of standard parabolics.
pub fn verify_richardson(n: usize, q: u8) -> Result<RichardsonReport> {
    matrix::check_params(n, q)?;
    let total = (q as u64).checked_pow((n * n) as u32).filter(|&t| t <= MAX_SWEEP);
    let Some(total) = total else {
        return Err(Error::Capacity { what: format!("sweep of {n}x{n} matrices over F_{q}"), cap: MAX_SWEEP as usize });
    };
    let group = symmetric_group(n)?;
    let order = group.len();
    let perms: Vec<Perm> = group.ids().map(|w| Perm::from_elem(&group, w)).collect();
    let index: HashMap<&Perm, usize> = perms.iter().enumerate().map(|(i, p)| (p, i)).collect();

    let counts = (0..total)
        .into_par_iter()
        .fold(
            || vec![0u64; order * order],
            |mut acc, idx| {
                let g = FqMatrix::from_index(n, q, idx);
                if let (Ok(w), Ok(wp)) = (cell_bwb(&g), cell_bwb_minus(&g)) {
                    acc[index[&w] * order + index[&wp]] += 1;
                }
                acc
            },
        )
        .reduce(
            || vec![0u64; order * order],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );

    let realized = |w: usize, wp: usize| counts[w * order + wp] > 0;
    let label = |w: usize| perms[w].to_string();
    let mut pairs = Vec::new();
    let mut missing = Vec::new();
    let mut unexpected = Vec::new();
    let mut expected_pairs = 0;
    for w in group.ids() {
        for wp in group.ids() {
            let expected = group.bruhat_leq(wp, w);
            expected_pairs += expected as usize;
            let (a, b) = (w.index(), wp.index());
            if realized(a, b) {
                pairs.push(PairCount { w: label(a), w_prime: label(b), count: counts[a * order + b] });
            }
            match (expected, realized(a, b)) {
                (true, false) => missing.push((label(a), label(b))),
                (false, true) => unexpected.push((label(a), label(b))),
                _ => {}
            }
        }
    }

    let cells = (0..order)
        .map(|w| CellSize {
            w: label(w),
            bwb: (0..order).map(|wp| counts[w * order + wp]).sum(),
            bwb_minus: (0..order).map(|v| counts[v * order + w]).sum(),
        })
        .collect();

    let rank = n - 1;
    let mut parabolic = Vec::new();
    for s in SimpleSubset::all(rank) {
        for t in SimpleSubset::all(rank) {
            let mut seen = BTreeSet::new();
            for w in group.ids() {
                for wp in group.ids() {
                    if realized(w.index(), wp.index()) {
                        seen.insert((group.min_double_rep(w, s, t), group.min_double_rep(wp, s, t)));
                    }
                }
            }
            let reps: BTreeSet<ElemId> = group.ids().map(|w| group.min_double_rep(w, s, t)).collect();
            let mut check = ParabolicCheck {
                s: s.labels(),
                t: t.labels(),
                realized: seen.len(),
                expected: 0,
                missing: Vec::new(),
                unexpected: Vec::new(),
            };
            for &u in &reps {
                for &up in &reps {
                    let expected = group.bruhat_leq(up, u);
                    check.expected += expected as usize;
                    let got = seen.contains(&(u, up));
                    let pair = || (group.format(u), group.format(up));
                    match (expected, got) {
                        (true, false) => check.missing.push(pair()),
                        (false, true) => check.unexpected.push(pair()),
                        _ => {}
                    }
                }
            }
            parabolic.push(check);
        }
    }

    Ok(RichardsonReport {
        n,
        q,
        gl_order: counts.iter().sum(),
        pairs,
        expected_pairs,
        missing,
        unexpected,
        cells,
        parabolic,
    })
}

/// An explicit `g ∈ B ẇ B ∩ B ẇ' B⁻`, built along a distinguished
/// subexpression for `w'` of the canonical reduced word of `w`.
///
/// Stage by stage, `g ← ṡ g` where the subexpression applies `s` and
/// `g ← (I + E_{i+1,i}) g` where it stays.
pub fn witness(group: &WeylGroup, w: ElemId, w_prime: ElemId, q: u8) -> Result<FqMatrix> {
    let ty = group.cartan_type();
    if ty.kind() != CartanKind::A {
        return Err(Error::domain(format!("witnesses live in GL_n, not W({ty})")));
    }
    let n = ty.rank() + 1;
    matrix::check_params(n, q)?;
    let word = group.word(w).clone();
    let sub = crate::bruhat::find_distinguished(group, &word, w_prime)?;
    let choices = sub.choices();
    let mut g = FqMatrix::identity(n, q);
    for (k, &apply) in choices.iter().enumerate() {
        let i = sub.letter(k + 1);
        let step = if apply {
            FqMatrix::permutation(&Perm::from_elem(group, group.simple(i)), q)
        } else {
            FqMatrix::elementary(n, q, i + 1, i)
        };
        g = step.mul(&g);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_invertible(n: usize, q: u8) -> Vec<FqMatrix> {
        let total = (q as u64).pow((n * n) as u32);
        (0..total).map(|i| FqMatrix::from_index(n, q, i)).filter(FqMatrix::is_invertible).collect()
    }

    #[test]
    fn gl2_f2_cells() {
        let g = FqMatrix::parse("01/11", 2).unwrap();
        assert_eq!(cell_bwb(&g).unwrap().to_string(), "2,1");
        assert_eq!(cell_bwb_minus(&g).unwrap().to_string(), "1,2");
        let ident = FqMatrix::identity(2, 2);
        assert_eq!(cell_bwb(&ident).unwrap(), Perm::identity(2));
        assert_eq!(cell_bwb_minus(&ident).unwrap(), Perm::identity(2));
        assert!(cell_bwb(&FqMatrix::parse("11/11", 2).unwrap()).is_err());
    }

    #[test]
    fn gl2_f2_report() {
        let r = verify_richardson(2, 2).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.gl_order, 6);
        let pairs: Vec<(&str, &str, u64)> =
            r.pairs.iter().map(|p| (p.w.as_str(), p.w_prime.as_str(), p.count)).collect();
        assert_eq!(pairs, vec![("1,2", "1,2", 2), ("2,1", "1,2", 2), ("2,1", "2,1", 2)]);
        let sizes: Vec<(u64, u64)> = r.cells.iter().map(|c| (c.bwb, c.bwb_minus)).collect();
        assert_eq!(sizes, vec![(2, 4), (4, 2)]);
    }

    #[test]
    fn gl3_f2_pairs() {
        let r = verify_richardson(3, 2).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.gl_order, 168);
        assert_eq!(r.pairs.len(), 19);
        assert_eq!(r.parabolic.len(), 16);
    }

    #[test]
    fn sweep_cap() {
        assert!(matches!(verify_richardson(4, 2), Err(Error::Capacity { .. })));
        assert!(matches!(verify_richardson(2, 4), Err(Error::Config(_))));
    }

    #[test]
    fn witnesses_land_in_both_cells() {
        for n in 2..=4 {
            let group = symmetric_group(n).unwrap();
            for w in group.ids() {
                for wp in group.ids() {
                    let res = witness(&group, w, wp, 2);
                    if !group.bruhat_leq(wp, w) {
                        assert!(matches!(res, Err(Error::NotComparable { .. })));
                        continue;
                    }
                    let g = res.unwrap();
                    assert_eq!(cell_bwb(&g).unwrap().to_elem(&group).unwrap(), w);
                    assert_eq!(cell_bwb_minus(&g).unwrap().to_elem(&group).unwrap(), wp);
                }
            }
        }
    }

    #[test]
    fn parabolic_label_fibres_partition() {
        let group = symmetric_group(3).unwrap();
        let mats = all_invertible(3, 2);
        for side in [Side::Q, Side::QMinus] {
            for s in SimpleSubset::all(2) {
                for t in SimpleSubset::all(2) {
                    let mut fibres: HashMap<ElemId, usize> = HashMap::new();
                    for g in &mats {
                        let u = parabolic_label(&group, g, s, t, side).unwrap();
                        assert!(group.is_min_double_rep(u, s, t));
                        *fibres.entry(u).or_default() += 1;
                    }
                    assert_eq!(fibres.values().sum::<usize>(), 168);
                }
            }
        }
    }

    #[test]
    fn parabolic_label_is_a_double_coset_invariant() {
        let group = symmetric_group(3).unwrap();
        let (s, t) = (SimpleSubset::parse("1", 2).unwrap(), SimpleSubset::parse("2", 2).unwrap());
        let perm_of = |i: usize| FqMatrix::permutation(&Perm::from_elem(&group, group.simple(i)), 3);
        let upper = FqMatrix::elementary(3, 3, 0, 2);
        let lower = FqMatrix::elementary(3, 3, 2, 0);
        for g in all_invertible(3, 3).iter().step_by(37) {
            for side in [Side::Q, Side::QMinus] {
                let label = parabolic_label(&group, g, s, t, side).unwrap();
                let right = match side {
                    Side::Q => upper.clone(),
                    Side::QMinus => lower.clone(),
                };
                for h in [perm_of(0).mul(g), upper.mul(g), g.mul(&perm_of(1)), g.mul(&right)] {
                    assert_eq!(parabolic_label(&group, &h, s, t, side).unwrap(), label);
                }
            }
        }
    }
}
