use std::fmt;

use crate::error::{Error, Result};
use crate::root_system::{CartanKind, Root};
use crate::weyl::{ElemId, WeylGroup, WeylElem};

/// A permutation of `{0, ..., n-1}`, written 1-based in one-line notation.
///
/// `s_i` of type `A_{n-1}` is the transposition `(i, i+1)`, and
/// `w(ε_j) = ε_{w(j)}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u8).collect())
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            let x = x as usize;
            if x >= images.len() || seen[x] {
                return Err(Error::domain(format!("{images:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Perm(images))
    }

    /// One-line notation with 1-based values, e.g. `"2,3,1"`.
    pub fn parse(s: &str) -> Result<Self> {
        let images = s
            .split(',')
            .map(|t| {
                let v: u8 = t
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse(format!("bad permutation entry {t:?}")))?;
                v.checked_sub(1).ok_or_else(|| Error::parse("permutation entries are 1-based"))
            })
            .collect::<Result<Vec<u8>>>()?;
        Self::from_images(images)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn image(&self, j: usize) -> usize {
        self.0[j] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    /// The Weyl element acting on `ε`-coordinates as this permutation.
    pub fn to_elem(&self, group: &WeylGroup) -> Result<ElemId> {
        let n = self.len();
        let ty = group.cartan_type();
        if ty.kind() != CartanKind::A || ty.rank() + 1 != n {
            return Err(Error::domain(format!("permutation of {n} letters is not in W({ty})")));
        }
        // w(α_i) = ε_{w(i)} - ε_{w(i+1)}
        let mut w = WeylElem::identity(ty);
        let mut images = Vec::with_capacity(n - 1);
        for i in 0..n - 1 {
            images.push(eps_difference(self.image(i), self.image(i + 1)));
        }
        // Walk down to the identity by right descents, recording the word.
        let mut cur = images;
        let mut letters = Vec::new();
        while let Some(j) = (0..n - 1).find(|&j| cur[j].is_negative()) {
            letters.push(j);
            cur = right_mul_images(&cur, j, ty);
        }
        for &j in letters.iter().rev() {
            w = w.mul_simple_right(j);
        }
        group.id_of(&w).ok_or_else(|| Error::domain("permutation outside the enumerated group"))
    }

    pub fn from_elem(group: &WeylGroup, w: ElemId) -> Self {
        let n = group.rank() + 1;
        let mut images: Vec<u8> = (0..n as u8).collect();
        // s_{i_1} ⋯ s_{i_r} as a composition of functions
        for &i in group.word(w).letters() {
            images.swap(i as usize, i as usize + 1);
        }
        Perm(images)
    }
}

fn eps_difference(a: usize, b: usize) -> Root {
    let mut r = Root::ZERO;
    let (lo, hi, sign) = if a < b { (a, b, 1) } else { (b, a, -1) };
    for k in lo..hi {
        r.0[k] = sign;
    }
    r
}

fn right_mul_images(images: &[Root], i: usize, ty: crate::root_system::CartanType) -> Vec<Root> {
    let wi = images[i];
    images
        .iter()
        .enumerate()
        .map(|(j, img)| *img - wi.scaled(ty.cartan(j, i)))
        .collect()
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", x + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}
