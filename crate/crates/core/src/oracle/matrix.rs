use std::fmt;

use crate::error::{Error, Result};

use super::perm::Perm;

/// Primes the oracle works over.
pub const SUPPORTED_PRIMES: [u8; 3] = [2, 3, 5];

/// An `n × n` matrix over `F_q`, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FqMatrix {
    n: usize,
    q: u8,
    entries: Vec<u8>,
}

impl FqMatrix {
    pub fn new(n: usize, q: u8, entries: Vec<u8>) -> Result<Self> {
        check_params(n, q)?;
        if entries.len() != n * n {
            return Err(Error::domain(format!("{} entries for a {n}x{n} matrix", entries.len())));
        }
        if let Some(x) = entries.iter().find(|&&x| x >= q) {
            return Err(Error::domain(format!("entry {x} is not reduced mod {q}")));
        }
        Ok(FqMatrix { n, q, entries })
    }

    /// Parses rows of digits separated by `/` or whitespace, e.g. `"01/11"`.
    pub fn parse(s: &str, q: u8) -> Result<Self> {
        let rows: Vec<&str> = s.split(|c: char| c == '/' || c.is_whitespace()).filter(|r| !r.is_empty()).collect();
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in &rows {
            if row.chars().count() != n {
                return Err(Error::parse(format!("row {row:?} does not have {n} digits")));
            }
            for c in row.chars() {
                let d = c.to_digit(10).ok_or_else(|| Error::parse(format!("bad digit {c:?}")))?;
                entries.push(d as u8);
            }
        }
        Self::new(n, q, entries)
    }

    pub fn identity(n: usize, q: u8) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        FqMatrix { n, q, entries }
    }

    /// The permutation matrix with `e_j ↦ e_{w(j)}`.
    pub fn permutation(w: &Perm, q: u8) -> Self {
        let n = w.len();
        let mut entries = vec![0; n * n];
        for j in 0..n {
            entries[w.image(j) * n + j] = 1;
        }
        FqMatrix { n, q, entries }
    }

    /// `I + E_{row,col}` (0-based).
    pub fn elementary(n: usize, q: u8, row: usize, col: usize) -> Self {
        let mut m = Self::identity(n, q);
        m.entries[row * n + col] = (m.entries[row * n + col] + 1) % q;
        m
    }

    /// The `index`-th matrix in base-`q` order of its row-major entries.
    pub(crate) fn from_index(n: usize, q: u8, mut index: u64) -> Self {
        let mut entries = vec![0; n * n];
        for slot in entries.iter_mut().rev() {
            *slot = (index % q as u64) as u8;
            index /= q as u64;
        }
        FqMatrix { n, q, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn mul(&self, rhs: &FqMatrix) -> FqMatrix {
        assert_eq!((self.n, self.q), (rhs.n, rhs.q), "shape or field mismatch");
        let n = self.n;
        let q = self.q as u32;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u32;
                for k in 0..n {
                    acc += self.get(i, k) as u32 * rhs.get(k, j) as u32;
                }
                entries[i * n + j] = (acc % q) as u8;
            }
        }
        FqMatrix { n, q: self.q, entries }
    }

    /// Rank of the block `rows × cols` by Gaussian elimination over `F_q`.
    pub fn block_rank(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> usize {
        let q = self.q as u32;
        let mut m: Vec<Vec<u32>> = rows
            .map(|i| cols.clone().map(|j| self.get(i, j) as u32).collect())
            .collect();
        let width = cols.len();
        let mut rank = 0;
        for c in 0..width {
            let Some(p) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
                continue;
            };
            m.swap(rank, p);
            let inv = inverse_mod(m[rank][c], q);
            for x in m[rank].iter_mut() {
                *x = *x * inv % q;
            }
            for r in 0..m.len() {
                if r != rank && m[r][c] != 0 {
                    let f = m[r][c];
                    for k in 0..width {
                        m[r][k] = (m[r][k] + q * q - f * m[rank][k] % q) % q;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn rank(&self) -> usize {
        self.block_rank(0..self.n, 0..self.n)
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.n
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == 0))
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.get(i, j) == 0))
    }
}

pub(crate) fn check_params(n: usize, q: u8) -> Result<()> {
    if !(2..=4).contains(&n) {
        return Err(Error::config(format!("matrix size {n} outside 2..=4")));
    }
    if !SUPPORTED_PRIMES.contains(&q) {
        return Err(Error::config(format!("field size {q} is not one of {SUPPORTED_PRIMES:?}")));
    }
    Ok(())
}

fn inverse_mod(a: u32, q: u32) -> u32 {
    // Fermat: a^(q-2)
    let mut out = 1;
    for _ in 0..q - 2 {
        out = out * a % q;
    }
    out
}

/// Rows of digits, one row per line.
impl fmt::Display for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            if i > 0 {
                writeln!(f)?;
            }
            for j in 0..self.n {
                write!(f, "{}", self.get(i, j))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        write!(f, "F{}[{}]", self.q, rows.join("/"))
    }
}
