//! Weyl group elements, reduced words, and the frozen enumeration table.

use std::collections::HashMap;
use std::fmt;
use std::ops::Mul;
use std::sync::OnceLock;

use crate::bruhat::BruhatOrder;
use crate::error::{Error, Result};
use crate::root_system::{CartanType, Root, RootSystem, SimpleSubset, MAX_RANK};

/// Default bound on the number of elements [`WeylGroup::enumerate`] will
/// produce. `F_4` (1152 elements) is the largest supported group.
pub const DEFAULT_MAX_GROUP: usize = 2000;

/// A Weyl group element, stored as the images `w(α_i)` of the simple roots.
///
/// Equality and hashing are `O(rank)`; everything else (action on roots,
/// products, descents) is derived from the images and the Cartan integers
/// of the tag.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeylElem {
    ty: CartanType,
    images: [Root; MAX_RANK],
}

impl WeylElem {
    pub fn identity(ty: CartanType) -> Self {
        let mut images = [Root::ZERO; MAX_RANK];
        for (i, img) in images.iter_mut().enumerate().take(ty.rank()) {
            *img = Root::simple(i);
        }
        WeylElem { ty, images }
    }

    /// The simple reflection `s_i` for a 0-based index `i`.
    pub fn simple_reflection(ty: CartanType, i: usize) -> Result<Self> {
        if i >= ty.rank() {
            return Err(Error::domain(format!(
                "simple reflection index {} outside 1..={}",
                i + 1,
                ty.rank()
            )));
        }
        Ok(Self::identity(ty).mul_simple_right(i))
    }

    /// Product `s_{i_1} ⋯ s_{i_r}` of a word.
    pub fn evaluate(ty: CartanType, word: &Word) -> Result<Self> {
        let mut w = Self::identity(ty);
        for &i in word.letters() {
            let i = i as usize;
            if i >= ty.rank() {
                return Err(Error::domain(format!("letter {} outside 1..={}", i + 1, ty.rank())));
            }
            w = w.mul_simple_right(i);
        }
        Ok(w)
    }

    /// The longest element `w_o`, reached by climbing through non-descents.
    pub fn longest(ty: CartanType) -> Self {
        let mut w = Self::identity(ty);
        while let Some(i) = (0..ty.rank()).find(|&i| w.images[i].is_positive()) {
            w = w.mul_simple_right(i);
        }
        w
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    pub fn image(&self, i: usize) -> Root {
        self.images[i]
    }

    pub fn images(&self) -> &[Root] {
        &self.images[..self.ty.rank()]
    }

    /// `w(β)`, extended linearly from the simple-root images.
    pub fn act(&self, beta: &Root) -> Root {
        let mut out = Root::ZERO;
        for (k, img) in self.images().iter().enumerate() {
            if beta.0[k] != 0 {
                out = out + img.scaled(beta.0[k] as i32);
            }
        }
        out
    }

    /// `w · s_i`.
    pub fn mul_simple_right(&self, i: usize) -> Self {
        // (w s_i)(α_j) = w(α_j) - <α_j, α_i^∨> w(α_i)
        let mut images = self.images;
        let wi = self.images[i];
        for (j, img) in images.iter_mut().enumerate().take(self.ty.rank()) {
            let c = self.ty.cartan(j, i);
            if c != 0 {
                *img = *img - wi.scaled(c);
            }
        }
        WeylElem { ty: self.ty, images }
    }

    /// `s_i · w`.
    pub fn mul_simple_left(&self, i: usize) -> Self {
        let mut images = self.images;
        for img in images.iter_mut().take(self.ty.rank()) {
            *img = self.ty.simple_reflect(i, img);
        }
        WeylElem { ty: self.ty, images }
    }

    /// `w s_i < w`, i.e. `w(α_i) < 0`.
    pub fn is_right_descent(&self, i: usize) -> bool {
        self.images[i].is_negative()
    }

    pub fn try_mul(&self, rhs: &WeylElem) -> Result<WeylElem> {
        if self.ty != rhs.ty {
            return Err(Error::domain(format!(
                "cannot multiply elements of {} and {}",
                self.ty, rhs.ty
            )));
        }
        let mut images = [Root::ZERO; MAX_RANK];
        for (j, img) in images.iter_mut().enumerate().take(self.ty.rank()) {
            *img = self.act(&rhs.images[j]);
        }
        Ok(WeylElem { ty: self.ty, images })
    }

    pub fn inverse(&self) -> WeylElem {
        // w s_{j_1} ⋯ s_{j_k} = e  ⇒  w⁻¹ = s_{j_1} ⋯ s_{j_k}
        let mut cur = *self;
        let mut inv = Self::identity(self.ty);
        while let Some(j) = (0..self.ty.rank()).find(|&j| cur.is_right_descent(j)) {
            cur = cur.mul_simple_right(j);
            inv = inv.mul_simple_right(j);
        }
        inv
    }

    /// `ℓ(w) = |{α ∈ R⁺_nd : w(α) < 0}|`.
    pub fn length(&self, rs: &RootSystem) -> usize {
        debug_assert_eq!(rs.cartan_type(), self.ty);
        rs.positive_nondivisible().iter().filter(|a| self.act(a).is_negative()).count()
    }

    /// The lexicographically least reduced word, built by repeatedly
    /// stripping the smallest left descent.
    pub fn canonical_reduced_word(&self) -> Word {
        // s_i w < w iff w⁻¹(α_i) < 0, so track v = w⁻¹ and strip right descents of v.
        let mut v = self.inverse();
        let mut letters = Vec::new();
        while let Some(i) = (0..self.ty.rank()).find(|&i| v.is_right_descent(i)) {
            letters.push(i as u8);
            v = v.mul_simple_right(i);
        }
        Word(letters)
    }
}

impl Mul for WeylElem {
    type Output = WeylElem;

    /// Panics if the operands belong to different groups; see [`WeylElem::try_mul`].
    fn mul(self, rhs: WeylElem) -> WeylElem {
        self.try_mul(&rhs).expect("mixed root systems")
    }
}

impl fmt::Debug for WeylElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W{}[{}]", self.ty, self.canonical_reduced_word())
    }
}

/// A word in the simple reflections. Letters are 0-based internally and
/// 1-based in every textual form; the word `(i_1, ..., i_r)` stands for the
/// product `s_{i_1} ⋯ s_{i_r}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Parses comma-separated 1-based indices; `""` and `"e"` are the empty word.
    pub fn parse(s: &str, rank: usize) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "e" {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        for tok in s.split(',').map(str::trim) {
            let i: usize = tok
                .parse()
                .map_err(|_| Error::parse(format!("bad letter {tok:?} in word {s:?}")))?;
            if i == 0 || i > rank {
                return Err(Error::config(format!("letter {i} outside 1..={rank}")));
            }
            letters.push((i - 1) as u8);
        }
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Handle to an element of a [`WeylGroup`] table.
///
/// Ids are assigned in BFS order from the identity, so they are
/// nondecreasing in length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemId(pub u32);

impl ElemId {
    pub const IDENTITY: ElemId = ElemId(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// The full, frozen enumeration of a Weyl group with its Cayley tables.
pub struct WeylGroup {
    system: RootSystem,
    elems: Vec<WeylElem>,
    index: HashMap<WeylElem, ElemId>,
    lengths: Vec<u16>,
    left: Vec<[u32; MAX_RANK]>,
    right: Vec<[u32; MAX_RANK]>,
    inverse: Vec<ElemId>,
    words: Vec<Word>,
    longest: ElemId,
    pub(crate) bruhat: OnceLock<BruhatOrder>,
}

impl WeylGroup {
    pub fn enumerate(system: RootSystem) -> Result<Self> {
        Self::enumerate_with_cap(system, DEFAULT_MAX_GROUP)
    }

    /// BFS closure of the identity under right multiplication by simple
    /// reflections, refusing to grow past `cap` elements.
    pub fn enumerate_with_cap(system: RootSystem, cap: usize) -> Result<Self> {
        let ty = system.cartan_type();
        let n = ty.rank();
        let id = WeylElem::identity(ty);

        let mut elems = vec![id];
        let mut index = HashMap::from([(id, ElemId(0))]);
        let mut lengths = vec![0u16];
        let mut right = Vec::new();
        let mut head = 0;
        while head < elems.len() {
            let w = elems[head];
            let mut row = [u32::MAX; MAX_RANK];
            for (i, slot) in row.iter_mut().enumerate().take(n) {
                let ws = w.mul_simple_right(i);
                let next = *index.entry(ws).or_insert_with(|| {
                    elems.push(ws);
                    lengths.push(lengths[head] + 1);
                    ElemId((elems.len() - 1) as u32)
                });
                *slot = next.0;
            }
            if elems.len() > cap {
                return Err(Error::Capacity {
                    what: format!("Weyl group of {ty}"),
                    cap,
                });
            }
            right.push(row);
            head += 1;
        }

        let left: Vec<[u32; MAX_RANK]> = elems
            .iter()
            .map(|w| {
                let mut row = [u32::MAX; MAX_RANK];
                for (i, slot) in row.iter_mut().enumerate().take(n) {
                    *slot = index[&w.mul_simple_left(i)].0;
                }
                row
            })
            .collect();

        let inverse = elems.iter().map(|w| index[&w.inverse()]).collect();

        // Smallest left descent first; ids are in length order so the
        // shorter element's word is already known.
        let mut words: Vec<Word> = Vec::with_capacity(elems.len());
        words.push(Word::empty());
        for k in 1..elems.len() {
            let i = (0..n)
                .find(|&i| lengths[left[k][i] as usize] < lengths[k])
                .expect("non-identity element has a left descent");
            let mut letters = vec![i as u8];
            letters.extend_from_slice(words[left[k][i] as usize].letters());
            words.push(Word(letters));
        }

        let longest = index[&WeylElem::longest(ty)];

        Ok(WeylGroup {
            system,
            elems,
            index,
            lengths,
            left,
            right,
            inverse,
            words,
            longest,
            bruhat: OnceLock::new(),
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.system
    }

    pub fn cartan_type(&self) -> CartanType {
        self.system.cartan_type()
    }

    pub fn rank(&self) -> usize {
        self.system.rank()
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn ids(&self) -> impl DoubleEndedIterator<Item = ElemId> + ExactSizeIterator {
        (0..self.elems.len() as u32).map(ElemId)
    }

    pub fn elem(&self, id: ElemId) -> &WeylElem {
        &self.elems[id.index()]
    }

    pub fn id_of(&self, w: &WeylElem) -> Option<ElemId> {
        self.index.get(w).copied()
    }

    pub fn identity(&self) -> ElemId {
        ElemId::IDENTITY
    }

    pub fn simple(&self, i: usize) -> ElemId {
        ElemId(self.right[0][i])
    }

    pub fn longest(&self) -> ElemId {
        self.longest
    }

    pub fn length(&self, w: ElemId) -> usize {
        self.lengths[w.index()] as usize
    }

    /// `s_i · w`.
    pub fn lmul(&self, i: usize, w: ElemId) -> ElemId {
        ElemId(self.left[w.index()][i])
    }

    /// `w · s_i`.
    pub fn rmul(&self, w: ElemId, i: usize) -> ElemId {
        ElemId(self.right[w.index()][i])
    }

    pub fn mul(&self, a: ElemId, b: ElemId) -> ElemId {
        self.word(b).letters().iter().fold(a, |acc, &i| self.rmul(acc, i as usize))
    }

    pub fn inv(&self, w: ElemId) -> ElemId {
        self.inverse[w.index()]
    }

    pub fn is_left_descent(&self, i: usize, w: ElemId) -> bool {
        self.length(self.lmul(i, w)) < self.length(w)
    }

    pub fn is_right_descent(&self, w: ElemId, i: usize) -> bool {
        self.length(self.rmul(w, i)) < self.length(w)
    }

    /// The canonical (lexicographically least) reduced word.
    pub fn word(&self, w: ElemId) -> &Word {
        &self.words[w.index()]
    }

    pub fn evaluate(&self, word: &Word) -> Result<ElemId> {
        let mut w = ElemId::IDENTITY;
        for &i in word.letters() {
            if i as usize >= self.rank() {
                return Err(Error::domain(format!("letter {} outside 1..={}", i + 1, self.rank())));
            }
            w = self.rmul(w, i as usize);
        }
        Ok(w)
    }

    pub fn is_reduced(&self, word: &Word) -> Result<bool> {
        Ok(self.length(self.evaluate(word)?) == word.len())
    }

    pub fn act(&self, w: ElemId, beta: &Root) -> Root {
        self.elem(w).act(beta)
    }

    /// Elements of the parabolic subgroup `W(S)`, in id order.
    pub fn parabolic_subgroup(&self, subset: SimpleSubset) -> Vec<ElemId> {
        let mut seen = vec![false; self.len()];
        seen[0] = true;
        let mut out = vec![ElemId::IDENTITY];
        let mut head = 0;
        while head < out.len() {
            let w = out[head];
            for i in subset.iter() {
                let ws = self.rmul(w, i);
                if !seen[ws.index()] {
                    seen[ws.index()] = true;
                    out.push(ws);
                }
            }
            head += 1;
        }
        out.sort();
        out
    }

    /// Whether `w ∈ W(S)`: its canonical word only uses letters from `S`.
    pub fn in_parabolic(&self, w: ElemId, subset: SimpleSubset) -> bool {
        self.word(w).letters().iter().all(|&i| subset.contains(i as usize))
    }

    /// The longest element of `W(S)`.
    pub fn longest_in(&self, subset: SimpleSubset) -> ElemId {
        let mut w = ElemId::IDENTITY;
        while let Some(i) = subset.iter().find(|&i| !self.is_right_descent(w, i)) {
            w = self.rmul(w, i);
        }
        w
    }

    pub fn format(&self, w: ElemId) -> String {
        if w == ElemId::IDENTITY {
            "e".to_string()
        } else {
            let word = self.word(w);
            word.letters().iter().map(|i| format!("s{}", i + 1)).collect()
        }
    }
}

impl fmt::Debug for WeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeylGroup")
            .field("type", &self.cartan_type())
            .field("order", &self.len())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::CartanKind;

    fn group(kind: CartanKind, rank: usize) -> WeylGroup {
        WeylGroup::enumerate(RootSystem::build(kind, rank).unwrap()).unwrap()
    }

    fn r(c: &[i32]) -> Root {
        Root::from_coords(c).unwrap()
    }

    #[test]
    fn simple_reflection_examples() {
        let a1 = CartanType::new(CartanKind::A, 1).unwrap();
        let s = WeylElem::simple_reflection(a1, 0).unwrap();
        assert_ne!(s, WeylElem::identity(a1));
        assert_eq!(s.act(&r(&[1])), r(&[-1]));

        let a2 = CartanType::new(CartanKind::A, 2).unwrap();
        let s1 = WeylElem::simple_reflection(a2, 0).unwrap();
        assert_eq!(s1.act(&r(&[0, 1])), r(&[1, 1]));

        // B_2: α_1 long, α_2 short
        let b2 = CartanType::new(CartanKind::B, 2).unwrap();
        let s_short = WeylElem::simple_reflection(b2, 1).unwrap();
        assert_eq!(s_short.act(&r(&[1, 0])), r(&[1, 2]));

        assert!(WeylElem::simple_reflection(a2, 2).is_err());
    }

    #[test]
    fn products_and_braids() {
        let a2 = CartanType::new(CartanKind::A, 2).unwrap();
        let rs = RootSystem::from_type(a2).unwrap();
        let s1 = WeylElem::simple_reflection(a2, 0).unwrap();
        let s2 = WeylElem::simple_reflection(a2, 1).unwrap();
        assert_eq!((s1 * s2).length(&rs), 2);
        assert_eq!(s1 * s2 * s1, s2 * s1 * s2);
        let w = s1 * s2;
        assert_eq!(w * w.inverse(), WeylElem::identity(a2));

        let b2 = CartanType::new(CartanKind::B, 2).unwrap();
        let t = WeylElem::identity(b2);
        assert!(matches!(s1.try_mul(&t), Err(Error::Domain(_))));
    }

    #[test]
    fn lengths_of_longest() {
        let a2 = RootSystem::build(CartanKind::A, 2).unwrap();
        let b2 = RootSystem::build(CartanKind::B, 2).unwrap();
        let bc2 = RootSystem::build(CartanKind::BC, 2).unwrap();
        assert_eq!(WeylElem::identity(a2.cartan_type()).length(&a2), 0);
        assert_eq!(WeylElem::longest(a2.cartan_type()).length(&a2), 3);
        assert_eq!(WeylElem::longest(b2.cartan_type()).length(&b2), 4);
        assert_eq!(WeylElem::longest(bc2.cartan_type()).length(&bc2), 4);
    }

    #[test]
    fn canonical_words() {
        let a2 = CartanType::new(CartanKind::A, 2).unwrap();
        assert!(WeylElem::identity(a2).canonical_reduced_word().is_empty());
        assert_eq!(WeylElem::longest(a2).canonical_reduced_word(), Word::new(vec![0, 1, 0]));
        let s2s1 = WeylElem::evaluate(a2, &Word::new(vec![1, 0])).unwrap();
        assert_eq!(s2s1.canonical_reduced_word(), Word::new(vec![1, 0]));
    }

    #[test]
    fn enumeration_orders() {
        assert_eq!(group(CartanKind::A, 1).len(), 2);
        assert_eq!(group(CartanKind::A, 3).len(), 24);
        assert_eq!(group(CartanKind::G2, 2).len(), 12);
        assert_eq!(group(CartanKind::BC, 2).len(), 8);
        assert_eq!(group(CartanKind::D, 4).len(), 192);
    }

    #[test]
    fn enumeration_cap() {
        let rs = RootSystem::build(CartanKind::A, 3).unwrap();
        assert!(matches!(WeylGroup::enumerate_with_cap(rs, 10), Err(Error::Capacity { .. })));
    }

    #[test]
    fn table_agrees_with_elements() {
        for (kind, rank) in [(CartanKind::A, 3), (CartanKind::B, 3), (CartanKind::G2, 2), (CartanKind::BC, 2)] {
            let g = group(kind, rank);
            let rs = g.root_system();
            for w in g.ids() {
                let e = g.elem(w);
                assert_eq!(g.length(w), e.length(rs));
                assert_eq!(g.word(w), &e.canonical_reduced_word());
                assert_eq!(g.evaluate(g.word(w)).unwrap(), w);
                assert_eq!(g.mul(w, g.inv(w)), ElemId::IDENTITY);
            }
            assert_eq!(g.length(g.longest()), rs.positive_nondivisible().len());
        }
    }

    #[test]
    fn longest_in_subsets() {
        let g = group(CartanKind::A, 2);
        assert_eq!(g.longest_in(SimpleSubset::EMPTY), ElemId::IDENTITY);
        assert_eq!(g.longest_in(SimpleSubset::from_indices([0])), g.simple(0));
        assert_eq!(g.longest_in(SimpleSubset::full(2)), g.longest());
        assert_eq!(g.format(g.longest()), "s1s2s1");
    }

    #[test]
    fn word_parse_and_display() {
        let w = Word::parse("1,2,1", 2).unwrap();
        assert_eq!(w.to_string(), "1,2,1");
        assert!(Word::parse("e", 2).unwrap().is_empty());
        assert!(Word::parse("3", 2).is_err());
        assert!(Word::parse("x", 2).is_err());
    }
}
