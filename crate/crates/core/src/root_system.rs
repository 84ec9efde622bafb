//! Finite root systems in simple-root coordinates.
//!
//! Every root is stored as its integer coordinate vector with respect to the
//! simple roots `α_1, ..., α_n` (Bourbaki numbering). The inner product is
//! supplied per type as a symmetric Gram matrix on the simple roots, so all
//! reflections are exact integer operations.
//!
//! The non-reduced type `BC_n` is the union of the `B_n` and `C_n` root
//! vectors: the `B_n` system together with `2β` for every short `β`. Its
//! non-divisible part is `B_n`, which also carries the Weyl group.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weyl::WeylElem;

/// Largest rank any supported type reaches (`A_5`).
pub const MAX_RANK: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanKind {
    A,
    B,
    C,
    D,
    G2,
    F4,
    BC,
}

impl CartanKind {
    /// Inclusive rank bounds supported for this type.
    pub fn rank_bounds(self) -> (usize, usize) {
        match self {
            CartanKind::A => (1, 5),
            CartanKind::B | CartanKind::C => (2, 4),
            CartanKind::D => (4, 4),
            CartanKind::G2 => (2, 2),
            CartanKind::F4 => (4, 4),
            CartanKind::BC => (1, 3),
        }
    }

    pub fn is_reduced(self) -> bool {
        self != CartanKind::BC
    }
}

impl fmt::Display for CartanKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CartanKind::A => "A",
            CartanKind::B => "B",
            CartanKind::C => "C",
            CartanKind::D => "D",
            CartanKind::G2 => "G2",
            CartanKind::F4 => "F4",
            CartanKind::BC => "BC",
        };
        f.write_str(s)
    }
}

impl FromStr for CartanKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(CartanKind::A),
            "B" => Ok(CartanKind::B),
            "C" => Ok(CartanKind::C),
            "D" => Ok(CartanKind::D),
            "G" | "G2" => Ok(CartanKind::G2),
            "F" | "F4" => Ok(CartanKind::F4),
            "BC" => Ok(CartanKind::BC),
            other => Err(Error::config(format!("unknown Cartan type {other:?}"))),
        }
    }
}

/// A Cartan type together with its rank, e.g. `B_3`.
///
/// This is also the tag carried by every [`WeylElem`], so elements of
/// different groups can never be multiplied together by accident.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    kind: CartanKind,
    rank: u8,
}

impl CartanType {
    pub fn new(kind: CartanKind, rank: usize) -> Result<Self> {
        let (lo, hi) = kind.rank_bounds();
        if rank < lo || rank > hi {
            return Err(Error::config(format!(
                "type {kind} is supported for ranks {lo}..={hi}, got {rank}"
            )));
        }
        Ok(CartanType { kind, rank: rank as u8 })
    }

    pub fn kind(self) -> CartanKind {
        self.kind
    }

    pub fn rank(self) -> usize {
        self.rank as usize
    }

    /// Inner product `(α_i, α_j)` of two simple roots (0-based indices).
    pub fn gram(self, i: usize, j: usize) -> i32 {
        let n = self.rank();
        debug_assert!(i < n && j < n);
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        let adjacent = j == i + 1;
        match self.kind {
            CartanKind::A => match (i == j, adjacent) {
                (true, _) => 2,
                (_, true) => -1,
                _ => 0,
            },
            // long roots have norm 4, the last simple root is short (norm 2)
            CartanKind::B | CartanKind::BC => {
                if i == j {
                    if i == n - 1 {
                        2
                    } else {
                        4
                    }
                } else if adjacent {
                    -2
                } else {
                    0
                }
            }
            // short roots have norm 2, the last simple root is long (norm 4)
            CartanKind::C => {
                if i == j {
                    if i == n - 1 {
                        4
                    } else {
                        2
                    }
                } else if adjacent && j == n - 1 {
                    -2
                } else if adjacent {
                    -1
                } else {
                    0
                }
            }
            // α_2 is the branch node
            CartanKind::D => match (i, j) {
                _ if i == j => 2,
                (0, 1) | (1, 2) | (1, 3) => -1,
                _ => 0,
            },
            CartanKind::G2 => match (i, j) {
                (0, 0) => 2,
                (1, 1) => 6,
                _ => -3,
            },
            CartanKind::F4 => match (i, j) {
                (0, 0) | (1, 1) => 4,
                (2, 2) | (3, 3) => 2,
                (0, 1) | (1, 2) => -2,
                (2, 3) => -1,
                _ => 0,
            },
        }
    }

    /// Cartan integer `<α_i, α_j^∨> = 2(α_i, α_j) / (α_j, α_j)`.
    pub fn cartan(self, i: usize, j: usize) -> i32 {
        2 * self.gram(i, j) / self.gram(j, j)
    }

    /// `(β, γ)` for arbitrary vectors in simple-root coordinates.
    pub fn inner(self, beta: &Root, gamma: &Root) -> i32 {
        let n = self.rank();
        let mut acc = 0;
        for i in 0..n {
            if beta.0[i] == 0 {
                continue;
            }
            for j in 0..n {
                acc += beta.0[i] as i32 * gamma.0[j] as i32 * self.gram(i, j);
            }
        }
        acc
    }

    /// `<β, α^∨> = 2(β, α) / (α, α)`; integral whenever `α` is a root.
    pub fn coroot_pairing(self, beta: &Root, alpha: &Root) -> i32 {
        let num = 2 * self.inner(beta, alpha);
        let den = self.inner(alpha, alpha);
        debug_assert!(den > 0 && num % den == 0, "non-integral pairing");
        num / den
    }

    /// `s_α(β) = β - <β, α^∨> α`.
    pub fn reflect(self, alpha: &Root, beta: &Root) -> Root {
        let c = self.coroot_pairing(beta, alpha);
        *beta - alpha.scaled(c)
    }

    /// Reflection in the `i`-th simple root, using the Cartan integers only.
    pub fn simple_reflect(self, i: usize, beta: &Root) -> Root {
        let n = self.rank();
        let c: i32 = (0..n).map(|k| beta.0[k] as i32 * self.cartan(k, i)).sum();
        let mut out = *beta;
        out.0[i] = (out.0[i] as i32 - c) as i8;
        out
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            CartanKind::G2 | CartanKind::F4 => write!(f, "{}", self.kind),
            k => write!(f, "{}{}", k, self.rank),
        }
    }
}

/// A vector in simple-root coordinates. Unused trailing coordinates are zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Root(pub [i8; MAX_RANK]);

impl Root {
    pub const ZERO: Root = Root([0; MAX_RANK]);

    pub fn simple(i: usize) -> Root {
        let mut c = [0; MAX_RANK];
        c[i] = 1;
        Root(c)
    }

    pub fn from_coords(coords: &[i32]) -> Result<Root> {
        if coords.len() > MAX_RANK {
            return Err(Error::domain(format!("{} coordinates exceed rank bound", coords.len())));
        }
        let mut c = [0; MAX_RANK];
        for (slot, &x) in c.iter_mut().zip(coords) {
            *slot = i8::try_from(x).map_err(|_| Error::domain(format!("coordinate {x} out of range")))?;
        }
        Ok(Root(c))
    }

    pub fn coords(&self, rank: usize) -> Vec<i32> {
        self.0[..rank].iter().map(|&x| x as i32).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Nonzero with all coordinates nonnegative.
    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&x| x <= 0)
    }

    pub fn height(&self) -> i32 {
        self.0.iter().map(|&x| x as i32).sum()
    }

    pub fn scaled(&self, k: i32) -> Root {
        Root(self.0.map(|x| (x as i32 * k) as i8))
    }

    /// `self / 2` if every coordinate is even.
    pub fn halved(&self) -> Option<Root> {
        self.0.iter().all(|x| x % 2 == 0).then(|| Root(self.0.map(|x| x / 2)))
    }

    /// Whether the support lies inside `subset`.
    pub fn supported_in(&self, subset: SimpleSubset) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| x == 0 || subset.contains(i))
    }
}

impl Add for Root {
    type Output = Root;
    fn add(self, rhs: Root) -> Root {
        let mut c = self.0;
        for (a, b) in c.iter_mut().zip(rhs.0) {
            *a += b;
        }
        Root(c)
    }
}

impl Sub for Root {
    type Output = Root;
    fn sub(self, rhs: Root) -> Root {
        self + (-rhs)
    }
}

impl Neg for Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(self.0.map(|x| -x))
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.0.iter().rposition(|&x| x != 0).map_or(1, |p| p + 1);
        write!(f, "{:?}", &self.0[..last])
    }
}

/// A subset `S` of the simple roots, as a bitmask over 0-based indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SimpleSubset(u16);

impl SimpleSubset {
    pub const EMPTY: SimpleSubset = SimpleSubset(0);

    pub fn full(rank: usize) -> Self {
        SimpleSubset(((1u32 << rank) - 1) as u16)
    }

    pub fn from_bits(bits: u16) -> Self {
        SimpleSubset(bits)
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    /// From 0-based indices.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        SimpleSubset(indices.into_iter().fold(0, |m, i| m | (1 << i)))
    }

    /// Parses a comma-separated list of 1-based indices, e.g. `"1,3"`.
    /// The empty string is the empty subset.
    pub fn parse(s: &str, rank: usize) -> Result<Self> {
        let mut bits = 0u16;
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let i: usize = tok
                .parse()
                .map_err(|_| Error::config(format!("bad simple-root index {tok:?}")))?;
            if i == 0 || i > rank {
                return Err(Error::config(format!("simple-root index {i} outside 1..={rank}")));
            }
            bits |= 1 << (i - 1);
        }
        Ok(SimpleSubset(bits))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset_of(self, other: SimpleSubset) -> bool {
        self.0 & !other.0 == 0
    }

    /// 0-based indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..16).filter(move |&i| self.contains(i))
    }

    /// 1-based indices, the form used in all external output.
    pub fn labels(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }

    /// All `2^rank` subsets in bitmask order.
    pub fn all(rank: usize) -> impl Iterator<Item = SimpleSubset> {
        (0..(1u32 << rank)).map(|b| SimpleSubset(b as u16))
    }
}

impl fmt::Debug for SimpleSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.labels().into_iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for SimpleSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A finite, possibly non-reduced, root system with a fixed base.
#[derive(Debug, Clone)]
pub struct RootSystem {
    ty: CartanType,
    simple: Vec<Root>,
    roots: Vec<Root>,
    positive: Vec<Root>,
    nondivisible: Vec<Root>,
    positive_nd: Vec<Root>,
    lookup: HashSet<Root>,
}

impl RootSystem {
    pub fn build(kind: CartanKind, rank: usize) -> Result<Self> {
        Self::from_type(CartanType::new(kind, rank)?)
    }

    pub fn from_type(ty: CartanType) -> Result<Self> {
        let n = ty.rank();
        let simple: Vec<Root> = (0..n).map(Root::simple).collect();

        // Reflection closure of the base gives the reduced part.
        let mut seen: HashSet<Root> = simple.iter().copied().collect();
        let mut queue: VecDeque<Root> = simple.iter().copied().collect();
        while let Some(beta) = queue.pop_front() {
            for i in 0..n {
                let img = ty.simple_reflect(i, &beta);
                if seen.insert(img) {
                    queue.push_back(img);
                }
            }
        }

        if ty.kind() == CartanKind::BC {
            let short = (0..n).map(|i| ty.gram(i, i)).min().unwrap_or(0);
            let doubled: Vec<Root> = seen
                .iter()
                .filter(|b| ty.inner(b, b) == short)
                .map(|b| b.scaled(2))
                .collect();
            seen.extend(doubled);
        }

        let mut roots: Vec<Root> = seen.iter().copied().collect();
        if let Some(bad) = roots.iter().find(|r| !r.is_positive() && !r.is_negative()) {
            return Err(Error::domain(format!("{bad:?} has mixed-sign coordinates")));
        }
        let key = |r: &Root| (r.height().abs(), r.is_negative(), r.0.map(|x| x.abs()));
        roots.sort_by_key(key);

        let positive: Vec<Root> = roots.iter().copied().filter(Root::is_positive).collect();
        let nondivisible: Vec<Root> = roots
            .iter()
            .copied()
            .filter(|r| r.halved().is_none_or(|h| !seen.contains(&h)))
            .collect();
        let positive_nd = nondivisible.iter().copied().filter(Root::is_positive).collect();

        Ok(RootSystem {
            ty,
            simple,
            roots,
            positive,
            nondivisible,
            positive_nd,
            lookup: seen,
        })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    pub fn simple_roots(&self) -> &[Root] {
        &self.simple
    }

    /// All roots `R`, positives first in order of height.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    /// `R_nd`: roots `α` such that `α/2` is not a root.
    pub fn nondivisible_roots(&self) -> &[Root] {
        &self.nondivisible
    }

    /// `R⁺_nd`.
    pub fn positive_nondivisible(&self) -> &[Root] {
        &self.positive_nd
    }

    pub fn is_root(&self, r: &Root) -> bool {
        self.lookup.contains(r)
    }

    /// `θ(α) = -w_o(α)`.
    pub fn theta(&self, alpha: &Root) -> Result<Root> {
        if !self.is_root(alpha) {
            return Err(Error::domain(format!("{alpha:?} is not a root of {}", self.ty)));
        }
        Ok(-WeylElem::longest(self.ty).act(alpha))
    }

    /// The permutation of simple-root indices induced by `θ`.
    pub fn theta_on_simple(&self) -> Vec<usize> {
        let w_o = WeylElem::longest(self.ty);
        (0..self.rank())
            .map(|i| {
                let img = -w_o.act(&self.simple[i]);
                self.simple
                    .iter()
                    .position(|s| *s == img)
                    .expect("-w_o permutes the simple roots")
            })
            .collect()
    }

    /// `R_{nd,S}`: non-divisible roots in the integer span of `S`.
    pub fn span_subsystem(&self, subset: SimpleSubset) -> Vec<Root> {
        self.nondivisible.iter().copied().filter(|r| r.supported_in(subset)).collect()
    }

    /// Coordinates of `r` truncated to this rank.
    pub fn coords(&self, r: &Root) -> Vec<i32> {
        r.coords(self.rank())
    }
}
