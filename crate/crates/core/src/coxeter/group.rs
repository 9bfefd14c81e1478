use std::collections::{HashMap, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;
use rand::Rng;

use super::index_set::IndexSet;
use super::root_system::{self, DiagramType};
use crate::error::{Error, Result};

/// A word in the simple reflections, 1-based generator indices.
pub type Word = Vec<usize>;

/// An element of a [`WeylGroup`].
///
/// Elements are handles into the immutable tables of the group that created
/// them. Handles are numbered in increasing `(length, canonical word)` order,
/// so the derived `Ord` is the graded lexicographic order on normal forms.
/// Mixing handles from different groups is a logic error.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement(u32);

impl WeylElement {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A finite simply-laced Weyl group with exact normal forms.
///
/// Construction enumerates the group in its integer reflection
/// representation (simple-root coordinates) and precomputes:
/// multiplication by generators on both sides, canonical words (the
/// lexicographically least reduced word), lengths, inverses, and the full
/// Bruhat order table. Everything is immutable afterwards, so a group can be
/// shared across threads freely.
pub struct WeylGroup {
    diagram: DiagramType,
    rank: usize,
    cartan: Vec<Vec<i32>>,
    positive_roots: Vec<Vec<i32>>,
    matrices: Vec<Vec<i32>>,
    words: Vec<Word>,
    lengths: Vec<usize>,
    left: Vec<Vec<u32>>,
    right: Vec<Vec<u32>>,
    inverse: Vec<u32>,
    lookup: HashMap<Vec<i32>, u32>,
    // below[y] holds every x with x <= y.
    below: Vec<FixedBitSet>,
}

impl fmt::Debug for WeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeylGroup")
            .field("type", &self.diagram)
            .field("rank", &self.rank)
            .field("order", &self.order())
            .finish()
    }
}

impl WeylGroup {
    /// Builds the group for a supported `(type, rank)`.
    pub fn new(diagram: DiagramType, rank: usize) -> Result<Self> {
        if !root_system::is_supported(diagram, rank) {
            return Err(Error::validation(format!(
                "{diagram}_{rank} is not supported (A_1..A_5 and D_4 only)"
            )));
        }
        let cartan = root_system::cartan_matrix(diagram, rank)?;
        let positive_roots = root_system::positive_roots(&cartan);
        let gens: Vec<Vec<i32>> = (1..=rank)
            .map(|i| root_system::simple_reflection(&cartan, i))
            .collect();

        // Breadth-first enumeration; BFS distance along right multiplication
        // is the length.
        let identity = {
            let mut m = vec![0; rank * rank];
            for r in 0..rank {
                m[r * rank + r] = 1;
            }
            m
        };
        let mut mats = vec![identity.clone()];
        let mut dist = vec![0usize];
        let mut ids: HashMap<Vec<i32>, usize> = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(g) = queue.pop_front() {
            for s in &gens {
                let h = mat_mul(&mats[g], s, rank);
                if !ids.contains_key(&h) {
                    ids.insert(h.clone(), mats.len());
                    mats.push(h);
                    dist.push(dist[g] + 1);
                    queue.push_back(mats.len() - 1);
                }
            }
        }
        let order = mats.len();
        let expected = root_system::group_order_formula(diagram, rank);
        if order as u64 != expected {
            return Err(Error::Consistency(format!(
                "enumerated {order} elements but the order formula gives {expected}"
            )));
        }

        let left_raw: Vec<Vec<usize>> = gens
            .iter()
            .map(|s| (0..order).map(|g| ids[&mat_mul(s, &mats[g], rank)]).collect())
            .collect();

        // Canonical words: strip the smallest left descent, shortest first.
        let mut by_len: Vec<usize> = (0..order).collect();
        by_len.sort_by_key(|&g| dist[g]);
        let mut raw_words: Vec<Word> = vec![Vec::new(); order];
        for &g in &by_len {
            if dist[g] == 0 {
                continue;
            }
            let i = (0..rank)
                .find(|&i| dist[left_raw[i][g]] < dist[g])
                .expect("nonidentity element has a left descent");
            let mut word = vec![i + 1];
            word.extend_from_slice(&raw_words[left_raw[i][g]]);
            raw_words[g] = word;
        }

        // Renumber by (length, canonical word).
        let mut perm: Vec<usize> = (0..order).collect();
        perm.sort_by(|&a, &b| (dist[a], &raw_words[a]).cmp(&(dist[b], &raw_words[b])));
        let mut new_id = vec![0u32; order];
        for (new, &old) in perm.iter().enumerate() {
            new_id[old] = new as u32;
        }

        let matrices: Vec<Vec<i32>> = perm.iter().map(|&g| mats[g].clone()).collect();
        let words: Vec<Word> = perm.iter().map(|&g| raw_words[g].clone()).collect();
        let lengths: Vec<usize> = perm.iter().map(|&g| dist[g]).collect();
        let lookup: HashMap<Vec<i32>, u32> = matrices
            .iter()
            .enumerate()
            .map(|(k, m)| (m.clone(), k as u32))
            .collect();
        let left: Vec<Vec<u32>> = left_raw
            .iter()
            .map(|row| perm.iter().map(|&g| new_id[row[g]]).collect())
            .collect();
        let right: Vec<Vec<u32>> = (0..rank)
            .map(|i| {
                matrices
                    .iter()
                    .map(|m| lookup[&mat_mul(m, &gens[i], rank)])
                    .collect()
            })
            .collect();
        let mut group = WeylGroup {
            diagram,
            rank,
            cartan,
            positive_roots,
            matrices,
            words,
            lengths,
            left,
            right,
            inverse: Vec::new(),
            lookup,
            below: Vec::new(),
        };
        // The inverse reads the canonical word backwards.
        group.inverse = (0..order)
            .map(|k| {
                let mut w: Word = group.words[k].clone();
                w.reverse();
                group.eval_word_unchecked(&w).0
            })
            .collect();
        group.below = group.bruhat_table();
        Ok(group)
    }

    /// Parses the diagram letter and builds the group.
    pub fn build(diagram: &str, rank: usize) -> Result<Self> {
        WeylGroup::new(diagram.parse()?, rank)
    }

    fn bruhat_table(&self) -> Vec<FixedBitSet> {
        let order = self.order();
        let mut below: Vec<FixedBitSet> = vec![FixedBitSet::with_capacity(order); order];
        // Handles are sorted by length, so every y·s with s a right descent
        // has a smaller handle than y.
        for y in 0..order {
            if y == 0 {
                below[0].insert(0);
                continue;
            }
            let s = (0..self.rank)
                .find(|&i| self.lengths[self.right[i][y] as usize] < self.lengths[y])
                .expect("nonidentity element has a right descent");
            let ys = self.right[s][y] as usize;
            let mut row = FixedBitSet::with_capacity(order);
            for x in 0..order {
                let xs = self.right[s][x] as usize;
                let member = if self.lengths[xs] < self.lengths[x] {
                    below[ys].contains(xs)
                } else {
                    below[ys].contains(x)
                };
                if member {
                    row.insert(x);
                }
            }
            below[y] = row;
        }
        below
    }

    pub fn diagram(&self) -> DiagramType {
        self.diagram
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Vec<i32>] {
        &self.positive_roots
    }

    pub fn order(&self) -> usize {
        self.words.len()
    }

    /// The full generator index set `I`.
    pub fn generators(&self) -> IndexSet {
        IndexSet::full(self.rank)
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement(0)
    }

    pub fn elements(&self) -> impl Iterator<Item = WeylElement> + '_ {
        (0..self.order() as u32).map(WeylElement)
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> WeylElement {
        WeylElement(rng.gen_range(0..self.order() as u32))
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if (1..=self.rank).contains(&i) {
            Ok(())
        } else {
            Err(Error::validation(format!(
                "generator index {i} out of range 1..={}",
                self.rank
            )))
        }
    }

    /// Validates an index list and turns it into a set.
    pub fn index_set(&self, indices: &[usize]) -> Result<IndexSet> {
        for &i in indices {
            self.check_index(i)?;
        }
        Ok(indices.iter().copied().collect())
    }

    pub fn generator(&self, i: usize) -> Result<WeylElement> {
        self.check_index(i)?;
        Ok(WeylElement(self.left[i - 1][0]))
    }

    fn eval_word_unchecked(&self, word: &[usize]) -> WeylElement {
        word.iter()
            .fold(self.identity(), |acc, &i| self.right_mul_unchecked(acc, i))
    }

    /// Product `s_{i_1} ⋯ s_{i_m}`; the word need not be reduced.
    pub fn element(&self, word: &[usize]) -> Result<WeylElement> {
        for &i in word {
            self.check_index(i)?;
        }
        Ok(self.eval_word_unchecked(word))
    }

    /// Like [`WeylGroup::element`] but additionally requires the word to be
    /// reduced.
    pub fn element_reduced(&self, word: &[usize]) -> Result<WeylElement> {
        let x = self.element(word)?;
        if self.length(x) != word.len() {
            return Err(Error::validation(format!("word {word:?} is not reduced")));
        }
        Ok(x)
    }

    pub fn is_reduced(&self, word: &[usize]) -> Result<bool> {
        Ok(self.length(self.element(word)?) == word.len())
    }

    /// Canonical (lexicographically least) reduced word.
    pub fn word(&self, x: WeylElement) -> &[usize] {
        &self.words[x.index()]
    }

    pub fn length(&self, x: WeylElement) -> usize {
        self.lengths[x.index()]
    }

    /// Row-major matrix of `x` in the reflection representation on
    /// simple-root coordinates.
    pub fn root_action(&self, x: WeylElement) -> &[i32] {
        &self.matrices[x.index()]
    }

    /// Looks an element up by its reflection-representation matrix.
    pub fn from_root_action(&self, matrix: &[i32]) -> Option<WeylElement> {
        self.lookup.get(matrix).map(|&k| WeylElement(k))
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversion_count(&self, x: WeylElement) -> usize {
        let m = self.root_action(x);
        self.positive_roots
            .iter()
            .filter(|root| root_system::apply(m, root).iter().all(|&c| c <= 0))
            .count()
    }

    fn right_mul_unchecked(&self, x: WeylElement, i: usize) -> WeylElement {
        WeylElement(self.right[i - 1][x.index()])
    }

    fn left_mul_unchecked(&self, i: usize, x: WeylElement) -> WeylElement {
        WeylElement(self.left[i - 1][x.index()])
    }

    /// `s_i · x`. Panics on an out-of-range index.
    pub fn left_mul(&self, i: usize, x: WeylElement) -> WeylElement {
        assert!((1..=self.rank).contains(&i), "generator index {i} out of range");
        self.left_mul_unchecked(i, x)
    }

    /// `x · s_i`. Panics on an out-of-range index.
    pub fn right_mul(&self, x: WeylElement, i: usize) -> WeylElement {
        assert!((1..=self.rank).contains(&i), "generator index {i} out of range");
        self.right_mul_unchecked(x, i)
    }

    pub fn mul(&self, x: WeylElement, y: WeylElement) -> WeylElement {
        self.word(y)
            .iter()
            .fold(x, |acc, &i| self.right_mul_unchecked(acc, i))
    }

    pub fn inverse(&self, x: WeylElement) -> WeylElement {
        WeylElement(self.inverse[x.index()])
    }

    /// Bruhat order, read from the precomputed table.
    pub fn bruhat_leq(&self, x: WeylElement, y: WeylElement) -> bool {
        self.below[y.index()].contains(x.index())
    }

    /// `{i : s_i x < x}`.
    pub fn left_descents(&self, x: WeylElement) -> IndexSet {
        (1..=self.rank)
            .filter(|&i| self.length(self.left_mul_unchecked(i, x)) < self.length(x))
            .collect()
    }

    /// `{i : x s_i < x}`.
    pub fn right_descents(&self, x: WeylElement) -> IndexSet {
        (1..=self.rank)
            .filter(|&i| self.length(self.right_mul_unchecked(x, i)) < self.length(x))
            .collect()
    }

    pub fn descents(&self, x: WeylElement) -> (IndexSet, IndexSet) {
        (self.left_descents(x), self.right_descents(x))
    }

    /// Letters of any reduced word of `x`.
    pub fn support(&self, x: WeylElement) -> IndexSet {
        self.word(x).iter().copied().collect()
    }

    /// Longest element `w_H` of the parabolic subgroup `W_H`.
    pub fn longest_element(&self, h: IndexSet) -> WeylElement {
        let mut w = self.identity();
        while let Some(i) = h
            .iter()
            .filter(|&i| i <= self.rank)
            .find(|&i| self.length(self.right_mul_unchecked(w, i)) > self.length(w))
        {
            w = self.right_mul_unchecked(w, i);
        }
        w
    }

    /// `w_I`.
    pub fn longest(&self) -> WeylElement {
        WeylElement(self.order() as u32 - 1)
    }

    /// Elements of `W_H`, i.e. those whose support lies in `H`.
    pub fn parabolic_subgroup(&self, h: IndexSet) -> Vec<WeylElement> {
        self.elements()
            .filter(|&x| self.support(x).is_subset(h))
            .collect()
    }

    /// `s_i * w`: the larger of `w` and `s_i w`.
    pub fn hecke_star(&self, i: usize, w: WeylElement) -> WeylElement {
        let sw = self.left_mul(i, w);
        if self.length(sw) > self.length(w) {
            sw
        } else {
            w
        }
    }

    /// `s_i ∘ v`: the smaller of `v` and `s_i v`.
    pub fn hecke_circ(&self, i: usize, v: WeylElement) -> WeylElement {
        let sv = self.left_mul(i, v);
        if self.length(sv) < self.length(v) {
            sv
        } else {
            v
        }
    }

    /// `s_{i_1} * (s_{i_2} * ( ⋯ * w))` for a word, rightmost letter first.
    pub fn star_word(&self, word: &[usize], w: WeylElement) -> WeylElement {
        word.iter().rev().fold(w, |acc, &i| self.hecke_star(i, acc))
    }

    /// `s_{i_1} ∘ (s_{i_2} ∘ ( ⋯ ∘ v))` for a word, rightmost letter first.
    pub fn circ_word(&self, word: &[usize], v: WeylElement) -> WeylElement {
        word.iter().rev().fold(v, |acc, &i| self.hecke_circ(i, acc))
    }

    /// `r * w` using the canonical word of `r`.
    pub fn star(&self, r: WeylElement, w: WeylElement) -> WeylElement {
        self.star_word(self.word(r), w)
    }

    /// `r ∘ v` using the canonical word of `r`.
    pub fn circ(&self, r: WeylElement, v: WeylElement) -> WeylElement {
        self.circ_word(self.word(r), v)
    }

    /// Splits `w = min_rep · tail` with `min_rep ∈ W^H` and `tail ∈ W_H`.
    pub fn coset_factorize(&self, w: WeylElement, h: IndexSet) -> (WeylElement, WeylElement) {
        let mut min_rep = w;
        let mut tail = self.identity();
        while let Some(i) = h
            .iter()
            .filter(|&i| i <= self.rank)
            .find(|&i| self.length(self.right_mul_unchecked(min_rep, i)) < self.length(min_rep))
        {
            min_rep = self.right_mul_unchecked(min_rep, i);
            tail = self.left_mul_unchecked(i, tail);
        }
        (min_rep, tail)
    }

    /// `(v, w) ↦ (w·w_I, v·w_I)`, the order-reversing involution on cell
    /// labels.
    pub fn w0_dual(&self, v: WeylElement, w: WeylElement) -> Result<(WeylElement, WeylElement)> {
        if !self.bruhat_leq(v, w) {
            return Err(Error::validation(format!(
                "label ({:?}, {:?}) does not satisfy v <= w",
                self.word(v),
                self.word(w)
            )));
        }
        let w0 = self.longest();
        Ok((self.mul(w, w0), self.mul(v, w0)))
    }

    /// Every reduced word of `x`, in lexicographic order.
    pub fn reduced_words(&self, x: WeylElement) -> Vec<Word> {
        if x == self.identity() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for i in self.left_descents(x).iter() {
            for mut tail in self.reduced_words(self.left_mul_unchecked(i, x)) {
                tail.insert(0, i);
                out.push(tail);
            }
        }
        out
    }

    /// A uniformly chosen reduced word of `x` built letter by letter.
    pub fn random_reduced_word<R: Rng + ?Sized>(&self, x: WeylElement, rng: &mut R) -> Word {
        let mut word = Vec::with_capacity(self.length(x));
        let mut cur = x;
        while cur != self.identity() {
            let d = self.left_descents(cur).to_vec();
            let i = d[rng.gen_range(0..d.len())];
            word.push(i);
            cur = self.left_mul_unchecked(i, cur);
        }
        word
    }

    /// Every pair `(v, w)` with `v <= w`.
    pub fn bruhat_pairs(&self) -> impl Iterator<Item = (WeylElement, WeylElement)> + '_ {
        self.elements().flat_map(move |w| {
            self.below[w.index()]
                .ones()
                .map(move |v| (WeylElement(v as u32), w))
        })
    }

    /// Number of elements below `w`.
    pub fn interval_size(&self, w: WeylElement) -> usize {
        self.below[w.index()].count_ones(..)
    }
}

fn mat_mul(a: &[i32], b: &[i32], n: usize) -> Vec<i32> {
    let mut out = vec![0; n * n];
    for r in 0..n {
        for k in 0..n {
            let x = a[r * n + k];
            if x == 0 {
                continue;
            }
            for c in 0..n {
                out[r * n + c] += x * b[k * n + c];
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(rank: usize) -> WeylGroup {
        WeylGroup::new(DiagramType::A, rank).unwrap()
    }

    #[test]
    fn orders_and_longest_lengths() {
        let a1 = a(1);
        assert_eq!(a1.order(), 2);
        assert_eq!(a1.positive_roots().len(), 1);
        let a3 = a(3);
        assert_eq!(a3.order(), 24);
        assert_eq!(a3.length(a3.longest()), 6);
        let d4 = WeylGroup::build("D", 4).unwrap();
        assert_eq!(d4.order(), 192);
        assert_eq!(d4.length(d4.longest()), 12);
    }

    #[test]
    fn unsupported_rejected() {
        assert!(matches!(WeylGroup::build("A", 6), Err(Error::Validation(_))));
        assert!(matches!(WeylGroup::build("D", 5), Err(Error::Validation(_))));
        assert!(matches!(WeylGroup::build("E", 6), Err(Error::Validation(_))));
        assert!(WeylGroup::build("A", 0).is_err());
    }

    #[test]
    fn word_to_element_examples() {
        let g = a(2);
        assert_eq!(g.element(&[]).unwrap(), g.identity());
        assert_eq!(g.element(&[1, 1]).unwrap(), g.identity());
        let x = g.element(&[1, 2, 1]).unwrap();
        let y = g.element(&[2, 1, 2]).unwrap();
        assert_eq!(x, y);
        assert_eq!(g.root_action(x), g.root_action(y));
        assert_eq!(g.length(x), 3);
        assert_eq!(g.word(x), &[1, 2, 1]);
        assert!(g.element(&[3]).is_err());
        assert!(g.element(&[0]).is_err());
    }

    #[test]
    fn canonical_word_is_least_reduced_word() {
        for g in [a(3), WeylGroup::build("D", 4).unwrap()] {
            for x in g.elements().filter(|&x| g.length(x) <= 7) {
                let words = g.reduced_words(x);
                assert_eq!(words.iter().min().unwrap().as_slice(), g.word(x));
            }
        }
    }

    #[test]
    fn lengths_agree_with_inversions() {
        for g in [a(4), WeylGroup::build("D", 4).unwrap()] {
            for x in g.elements() {
                assert_eq!(g.length(x), g.inversion_count(x));
                assert_eq!(g.length(x), g.word(x).len());
            }
        }
    }

    #[test]
    fn bruhat_examples() {
        let g = a(2);
        let s1 = g.generator(1).unwrap();
        let s2 = g.generator(2).unwrap();
        for w in g.elements() {
            assert!(g.bruhat_leq(g.identity(), w));
        }
        assert!(!g.bruhat_leq(s1, s2));
        let w = g.element(&[1, 2]).unwrap();
        assert!(g.bruhat_leq(s1, w));
        let w0 = g.longest();
        assert!(g.bruhat_leq(g.mul(w, w0), g.mul(s1, w0)));
        // 19 Bruhat pairs in S_3.
        assert_eq!(g.bruhat_pairs().count(), 19);
    }

    #[test]
    fn descent_examples() {
        let g = a(2);
        assert_eq!(g.descents(g.identity()), (IndexSet::EMPTY, IndexSet::EMPTY));
        let full = g.generators();
        assert_eq!(g.descents(g.longest()), (full, full));
        let x = g.element(&[1, 2]).unwrap();
        assert_eq!(g.left_descents(x).to_vec(), vec![1]);
        assert_eq!(g.right_descents(x).to_vec(), vec![2]);
    }

    #[test]
    fn support_examples() {
        let g = a(3);
        assert!(g.support(g.identity()).is_empty());
        assert_eq!(g.support(g.element(&[1, 3]).unwrap()).to_vec(), vec![1, 3]);
        assert_eq!(g.support(g.longest()), g.generators());
    }

    #[test]
    fn longest_element_examples() {
        let g = a(3);
        assert_eq!(g.longest_element(IndexSet::EMPTY), g.identity());
        let h = g.index_set(&[1, 2]).unwrap();
        let wh = g.longest_element(h);
        assert_eq!(g.word(wh), &[1, 2, 1]);
        assert_eq!(g.length(g.longest_element(g.generators())), 6);
        assert_eq!(g.longest_element(g.generators()), g.longest());
    }

    #[test]
    fn hecke_examples() {
        let g = a(2);
        let e = g.identity();
        let s1 = g.generator(1).unwrap();
        assert_eq!(g.hecke_star(1, e), s1);
        assert_eq!(g.hecke_circ(1, e), e);
        assert_eq!(g.hecke_star(1, s1), s1);
        let x = g.element(&[2, 1]).unwrap();
        assert_eq!(g.word(g.hecke_star(1, x)), &[1, 2, 1]);
        let y = g.element(&[1, 2]).unwrap();
        assert_eq!(g.word(g.hecke_circ(1, y)), &[2]);
    }

    #[test]
    fn coset_factorize_examples() {
        let g = a(2);
        let h = g.index_set(&[2]).unwrap();
        assert_eq!(g.coset_factorize(g.identity(), h), (g.identity(), g.identity()));
        let (m, t) = g.coset_factorize(g.element(&[1, 2, 1]).unwrap(), h);
        assert_eq!((g.word(m), g.word(t)), (&[2usize, 1][..], &[2usize][..]));
        let (m, t) = g.coset_factorize(g.element(&[1, 2]).unwrap(), h);
        assert_eq!((g.word(m), g.word(t)), (&[1usize][..], &[2usize][..]));
    }

    #[test]
    fn w0_dual_examples() {
        let g = a(2);
        let e = g.identity();
        let w0 = g.longest();
        assert_eq!(g.w0_dual(e, w0).unwrap(), (e, w0));
        assert_eq!(g.w0_dual(w0, w0).unwrap(), (e, e));
        let (v, w) = g
            .w0_dual(g.element(&[1]).unwrap(), g.element(&[1, 2]).unwrap())
            .unwrap();
        // [1,2]·w_I = s2, [1]·w_I = s2 s1.
        assert_eq!((g.word(v), g.word(w)), (&[2usize][..], &[2usize, 1][..]));
        assert!(g.w0_dual(g.generator(1).unwrap(), g.generator(2).unwrap()).is_err());
    }

    #[test]
    fn inverse_and_multiplication() {
        let g = WeylGroup::build("D", 4).unwrap();
        for x in g.elements() {
            assert_eq!(g.mul(x, g.inverse(x)), g.identity());
            assert_eq!(g.length(g.inverse(x)), g.length(x));
        }
    }
}
