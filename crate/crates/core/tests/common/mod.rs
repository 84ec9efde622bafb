//! Brute-force oracles shared by the integration tests. Nothing here uses
//! the group tables, the Bruhat matrix, or the rank criteria of the crate:
//! elements are raw `WeylElem` values, lengths are Cayley-graph distances,
//! and the order is subword containment.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use bruhatkit::root_system::{CartanKind, CartanType, Root, RootSystem, SimpleSubset};
use bruhatkit::weyl::{WeylElem, Word};

pub struct Oracle {
    pub ty: CartanType,
    pub rs: RootSystem,
    pub elems: Vec<WeylElem>,
    length: HashMap<WeylElem, usize>,
    word: HashMap<WeylElem, Vec<u8>>,
    below: HashMap<WeylElem, HashSet<WeylElem>>,
}

impl Oracle {
    pub fn new(kind: CartanKind, rank: usize) -> Self {
        let rs = RootSystem::build(kind, rank).unwrap();
        let ty = rs.cartan_type();
        let e = WeylElem::identity(ty);
        let mut length = HashMap::from([(e, 0)]);
        let mut word = HashMap::from([(e, Vec::new())]);
        let mut elems = vec![e];
        let mut queue = VecDeque::from([e]);
        while let Some(w) = queue.pop_front() {
            for i in 0..rank {
                let x = w.mul_simple_right(i);
                if !length.contains_key(&x) {
                    length.insert(x, length[&w] + 1);
                    let mut wd = word[&w].clone();
                    wd.push(i as u8);
                    word.insert(x, wd);
                    elems.push(x);
                    queue.push_back(x);
                }
            }
        }
        Oracle { ty, rs, elems, length, word, below: HashMap::new() }
    }

    /// Also tabulates the Bruhat order by subwords of each element.
    pub fn with_order(kind: CartanKind, rank: usize) -> Self {
        let mut o = Self::new(kind, rank);
        for &w in &o.elems {
            o.below.insert(w, subword_endpoints(o.ty, &o.word[&w]));
        }
        o
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn length(&self, w: &WeylElem) -> usize {
        self.length[w]
    }

    /// A reduced word found by breadth-first search.
    pub fn word(&self, w: &WeylElem) -> Word {
        Word::new(self.word[w].clone())
    }

    pub fn leq(&self, v: &WeylElem, w: &WeylElem) -> bool {
        self.below[w].contains(v)
    }

    pub fn below(&self, w: &WeylElem) -> &HashSet<WeylElem> {
        &self.below[w]
    }

    pub fn mul(&self, a: &WeylElem, b: &WeylElem) -> WeylElem {
        a.try_mul(b).unwrap()
    }

    pub fn longest(&self) -> WeylElem {
        *self.elems.iter().max_by_key(|w| self.length[*w]).unwrap()
    }

    /// `W(S)` by closure under the generators in `S`.
    pub fn parabolic(&self, s: SimpleSubset) -> Vec<WeylElem> {
        let e = WeylElem::identity(self.ty);
        let mut seen = HashSet::from([e]);
        let mut queue = VecDeque::from([e]);
        while let Some(w) = queue.pop_front() {
            for i in s.iter() {
                let x = w.mul_simple_right(i);
                if seen.insert(x) {
                    queue.push_back(x);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// The unique shortest element of a set; panics if it is not unique.
    pub fn unique_min(&self, set: impl IntoIterator<Item = WeylElem>) -> WeylElem {
        let set: HashSet<WeylElem> = set.into_iter().collect();
        let m = set.iter().map(|w| self.length[w]).min().unwrap();
        let mins: Vec<&WeylElem> = set.iter().filter(|w| self.length[*w] == m).collect();
        assert_eq!(mins.len(), 1, "coset has {} minimal elements", mins.len());
        *mins[0]
    }

    /// Minimum of `W(S) w`.
    pub fn left_coset_min(&self, w: &WeylElem, s: SimpleSubset) -> WeylElem {
        self.unique_min(self.parabolic(s).iter().map(|x| self.mul(x, w)))
    }

    /// Minimum of `w W(T)`.
    pub fn right_coset_min(&self, w: &WeylElem, t: SimpleSubset) -> WeylElem {
        self.unique_min(self.parabolic(t).iter().map(|y| self.mul(w, y)))
    }

    pub fn double_coset(&self, w: &WeylElem, s: SimpleSubset, t: SimpleSubset) -> HashSet<WeylElem> {
        let ws = self.parabolic(s);
        let wt = self.parabolic(t);
        ws.iter().flat_map(|x| wt.iter().map(move |y| (x, y))).map(|(x, y)| self.mul(&self.mul(x, w), y)).collect()
    }

    pub fn double_min(&self, w: &WeylElem, s: SimpleSubset, t: SimpleSubset) -> WeylElem {
        self.unique_min(self.double_coset(w, s, t))
    }

    /// `w ↦ min W(S) w W(T)` for every `w`, one double coset at a time.
    pub fn double_min_map(&self, s: SimpleSubset, t: SimpleSubset) -> HashMap<WeylElem, WeylElem> {
        let mut out = HashMap::new();
        for w in &self.elems {
            if out.contains_key(w) {
                continue;
            }
            let coset = self.double_coset(w, s, t);
            let m = self.unique_min(coset.iter().copied());
            for x in coset {
                out.insert(x, m);
            }
        }
        out
    }

    /// `W_{S,T}`.
    pub fn double_reps(&self, s: SimpleSubset, t: SimpleSubset) -> HashSet<WeylElem> {
        self.elems.iter().map(|w| self.double_min(w, s, t)).collect()
    }

    /// `θ(T)`, with `θ(α) = -w_o(α)` located among the simple roots.
    pub fn theta_subset(&self, t: SimpleSubset) -> SimpleSubset {
        let wo = self.longest();
        SimpleSubset::from_indices(t.iter().map(|i| {
            let img = -wo.act(&Root::simple(i));
            (0..self.ty.rank()).find(|&j| Root::simple(j) == img).expect("θ preserves simple roots")
        }))
    }

    /// `w_{o,T}`: the minimum of `W(T) w_o`.
    pub fn w_o_t(&self, t: SimpleSubset) -> WeylElem {
        self.left_coset_min(&self.longest(), t)
    }

    pub fn omega(&self, u: &WeylElem, s: SimpleSubset, t: SimpleSubset) -> WeylElem {
        self.double_min(&self.mul(u, &self.w_o_t(t)), s, self.theta_subset(t))
    }

    /// Positive non-divisible roots outside the span of `T`.
    pub fn roots_uq(&self, t: SimpleSubset) -> Vec<Root> {
        let rank = self.ty.rank();
        self.rs
            .positive_nondivisible()
            .iter()
            .copied()
            .filter(|r| (0..rank).any(|i| r.0[i] != 0 && !t.contains(i)))
            .collect()
    }
}

/// Endpoints of all `2^r` subwords of a word.
pub fn subword_endpoints(ty: CartanType, word: &[u8]) -> HashSet<WeylElem> {
    let r = word.len();
    (0u32..1 << r)
        .map(|mask| {
            let sub: Vec<u8> = (0..r).filter(|k| mask >> k & 1 == 1).map(|k| word[k]).collect();
            WeylElem::evaluate(ty, &Word::new(sub)).unwrap()
        })
        .collect()
}

pub fn subsets(rank: usize) -> Vec<SimpleSubset> {
    SimpleSubset::all(rank).collect()
}

// ---- symmetric groups and GL_n(F_q) ----

/// All permutations of `0..n`, as 0-based images.
pub fn perms(n: usize) -> Vec<Vec<u8>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in perms(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, (n - 1) as u8);
            out.push(q);
        }
    }
    out
}

/// Tableau criterion: `v <= w` iff for every prefix length `i`, the sorted
/// prefix of `v` is entrywise at most the sorted prefix of `w`.
pub fn tableau_leq(v: &[u8], w: &[u8]) -> bool {
    (1..=v.len()).all(|i| {
        let mut a = v[..i].to_vec();
        let mut b = w[..i].to_vec();
        a.sort();
        b.sort();
        a.iter().zip(&b).all(|(x, y)| x <= y)
    })
}

/// The Weyl element of `A_{n-1}` acting as `p`, from a bubble-sort word.
pub fn perm_to_elem(ty: CartanType, p: &[u8]) -> WeylElem {
    let mut cur = p.to_vec();
    let mut letters = Vec::new();
    while let Some(j) = (0..cur.len() - 1).find(|&j| cur[j] > cur[j + 1]) {
        cur.swap(j, j + 1);
        letters.push(j as u8);
    }
    letters.reverse();
    WeylElem::evaluate(ty, &Word::new(letters)).unwrap()
}

pub type Mat = Vec<u8>;

pub fn mat_mul(a: &Mat, b: &Mat, n: usize, q: u8) -> Mat {
    let mut c = vec![0u8; n * n];
    for i in 0..n {
        for j in 0..n {
            let s: u32 = (0..n).map(|k| a[i * n + k] as u32 * b[k * n + j] as u32).sum();
            c[i * n + j] = (s % q as u32) as u8;
        }
    }
    c
}

pub fn perm_matrix(p: &[u8]) -> Mat {
    let n = p.len();
    let mut m = vec![0u8; n * n];
    for j in 0..n {
        m[p[j] as usize * n + j] = 1;
    }
    m
}

/// Determinant by the Leibniz formula.
pub fn det(m: &Mat, n: usize, q: u8) -> u8 {
    let mut acc: i64 = 0;
    for p in perms(n) {
        let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        let prod: i64 = (0..n).map(|i| m[i * n + p[i] as usize] as i64).product();
        acc += if inversions % 2 == 0 { prod } else { -prod };
    }
    acc.rem_euclid(q as i64) as u8
}

pub fn all_matrices(n: usize, q: u8) -> impl Iterator<Item = Mat> {
    let total = (q as u64).pow((n * n) as u32);
    (0..total).map(move |mut idx| {
        let mut m = vec![0u8; n * n];
        for slot in m.iter_mut() {
            *slot = (idx % q as u64) as u8;
            idx /= q as u64;
        }
        m
    })
}

pub fn gl(n: usize, q: u8) -> Vec<Mat> {
    all_matrices(n, q).filter(|m| det(m, n, q) != 0).collect()
}

/// Invertible triangular matrices: upper when `upper`, else lower.
pub fn borel(n: usize, q: u8, upper: bool) -> Vec<Mat> {
    all_matrices(n, q)
        .filter(|m| {
            (0..n).all(|i| {
                (0..n).all(|j| {
                    let outside = if upper { i > j } else { i < j };
                    if i == j {
                        m[i * n + j] != 0
                    } else {
                        !outside || m[i * n + j] == 0
                    }
                })
            })
        })
        .collect()
}

/// The cells `B ẇ B` (or `B ẇ B⁻`) by literally multiplying out, as a map
/// from matrix to permutation. Panics if two cells overlap.
pub fn product_cells(n: usize, q: u8, opposite: bool) -> HashMap<Mat, Vec<u8>> {
    let b = borel(n, q, true);
    let right = if opposite { borel(n, q, false) } else { b.clone() };
    let mut cells: HashMap<Mat, Vec<u8>> = HashMap::new();
    for p in perms(n) {
        let pm = perm_matrix(&p);
        for x in &b {
            let xp = mat_mul(x, &pm, n, q);
            for y in &right {
                let g = mat_mul(&xp, y, n, q);
                if let Some(prev) = cells.insert(g.clone(), p.clone()) {
                    assert_eq!(prev, p, "cells of {prev:?} and {p:?} overlap at {g:?}");
                }
            }
        }
    }
    cells
}
