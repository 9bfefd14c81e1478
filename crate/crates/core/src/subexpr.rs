//! Positive subexpressions of a reduced word.
//!
//! Given `v <= w` and a reduced word `i_1 … i_m` of `w`, there is exactly one
//! choice `t_k ∈ {s_{i_k}, 1}` whose product is `v`, whose prefix products
//! increase weakly in Bruhat order, and whose every prefix `p` satisfies
//! `p <= p·s_{i_{k+1}}`. The letters with `t_k = 1` carry the positive
//! parameters of the cell chart, so their count is `|w| - |v|`.

use serde::Serialize;

use crate::coxeter::{WeylElement, WeylGroup, Word};
use crate::error::{Error, Result};

/// The distinguished choice sequence for `(v, w, word)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PositiveSubexpression {
    pub word: Word,
    /// `true` where `t_k = s_{i_k}` (taken), `false` where `t_k = 1`.
    pub mask: Vec<bool>,
}

impl PositiveSubexpression {
    /// `t_1, …, t_m` as group elements.
    pub fn t_sequence(&self, group: &WeylGroup) -> Vec<WeylElement> {
        self.word
            .iter()
            .zip(&self.mask)
            .map(|(&i, &taken)| {
                if taken {
                    group.left_mul(i, group.identity())
                } else {
                    group.identity()
                }
            })
            .collect()
    }

    /// Letters with `t_k = 1`.
    pub fn skipped(&self) -> usize {
        self.mask.iter().filter(|&&t| !t).count()
    }

    /// The 0/1 form used in JSON output.
    pub fn mask_bits(&self) -> Vec<u8> {
        self.mask.iter().map(|&t| u8::from(t)).collect()
    }
}

fn check_inputs(group: &WeylGroup, v: WeylElement, w: WeylElement, word: &[usize]) -> Result<()> {
    let x = group.element(word)?;
    if x != w || group.length(w) != word.len() {
        return Err(Error::validation(format!(
            "{word:?} is not a reduced word for {:?}",
            group.word(w)
        )));
    }
    if !group.bruhat_leq(v, w) {
        return Err(Error::validation(format!(
            "{:?} is not below {:?} in Bruhat order",
            group.word(v),
            group.word(w)
        )));
    }
    Ok(())
}

/// Checks the defining conditions literally for one mask.
pub fn satisfies_conditions(
    group: &WeylGroup,
    v: WeylElement,
    word: &[usize],
    mask: &[bool],
) -> bool {
    debug_assert_eq!(word.len(), mask.len());
    let mut prefix = group.identity();
    for (&i, &taken) in word.iter().zip(mask) {
        if !group.bruhat_leq(prefix, group.right_mul(prefix, i)) {
            return false;
        }
        let next = if taken {
            group.right_mul(prefix, i)
        } else {
            prefix
        };
        if !group.bruhat_leq(prefix, next) {
            return false;
        }
        prefix = next;
    }
    prefix == v
}

/// Computes the positive subexpression right to left and re-verifies it.
///
/// Walking from the right end with a running target (initially `v`), a
/// letter is taken exactly when it shortens the target. The result is then
/// checked against [`satisfies_conditions`].
pub fn positive_subexpression(
    group: &WeylGroup,
    v: WeylElement,
    w: WeylElement,
    word: &[usize],
) -> Result<PositiveSubexpression> {
    check_inputs(group, v, w, word)?;
    let mut mask = vec![false; word.len()];
    let mut target = v;
    for (k, &i) in word.iter().enumerate().rev() {
        let shorter = group.right_mul(target, i);
        if group.length(shorter) < group.length(target) {
            mask[k] = true;
            target = shorter;
        }
    }
    if target != group.identity() || !satisfies_conditions(group, v, word, &mask) {
        return Err(Error::Consistency(format!(
            "greedy subexpression for v={:?} in {word:?} fails the defining conditions",
            group.word(v)
        )));
    }
    Ok(PositiveSubexpression {
        word: word.to_vec(),
        mask,
    })
}

/// Every mask satisfying the defining conditions, by exhaustive scan over
/// `2^m` candidates.
pub fn brute_force_subexpression(
    group: &WeylGroup,
    v: WeylElement,
    w: WeylElement,
    word: &[usize],
) -> Result<Vec<Vec<bool>>> {
    check_inputs(group, v, w, word)?;
    let m = word.len();
    if m > 20 {
        return Err(Error::Resource(format!("2^{m} masks is too many to scan")));
    }
    Ok((0u32..(1 << m))
        .map(|bits| (0..m).map(|k| bits & (1 << k) != 0).collect::<Vec<bool>>())
        .filter(|mask| satisfies_conditions(group, v, word, mask))
        .collect())
}

/// Whether `t_1 = 1`, for a word whose first letter is a left descent of `w`.
///
/// Both the subexpression and the Bruhat predicate `v <= s_{i_1} w` are
/// evaluated; a disagreement is reported as a consistency error.
pub fn t1_criterion(
    group: &WeylGroup,
    v: WeylElement,
    w: WeylElement,
    word: &[usize],
) -> Result<bool> {
    let Some(&first) = word.first() else {
        return Err(Error::validation("t1 criterion needs a nonempty word"));
    };
    group.element(word)?;
    let sw = group.left_mul(first, w);
    if !group.bruhat_leq(sw, w) {
        return Err(Error::validation(format!(
            "s_{first} is not a left descent of {:?}",
            group.word(w)
        )));
    }
    let sub = positive_subexpression(group, v, w, word)?;
    let t1_trivial = !sub.mask[0];
    let predicate = group.bruhat_leq(v, sw);
    if t1_trivial != predicate {
        return Err(Error::Consistency(format!(
            "t1 = 1 is {t1_trivial} but v <= s_i1 w is {predicate}"
        )));
    }
    Ok(predicate)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> WeylGroup {
        WeylGroup::build("A", 2).unwrap()
    }

    #[test]
    fn all_taken_when_v_equals_w() {
        let g = a2();
        let w = g.longest();
        for word in g.reduced_words(w) {
            let sub = positive_subexpression(&g, w, w, &word).unwrap();
            assert!(sub.mask.iter().all(|&t| t));
        }
    }

    #[test]
    fn all_skipped_when_v_is_identity() {
        let g = a2();
        let w = g.element(&[1, 2]).unwrap();
        let sub = positive_subexpression(&g, g.identity(), w, &[1, 2]).unwrap();
        assert_eq!(sub.mask, vec![false, false]);
        assert_eq!(sub.skipped(), 2);
    }

    #[test]
    fn a2_example_mask() {
        let g = a2();
        let v = g.generator(1).unwrap();
        let w = g.longest();
        let sub = positive_subexpression(&g, v, w, &[1, 2, 1]).unwrap();
        assert_eq!(sub.mask_bits(), vec![0, 0, 1]);
        let all = brute_force_subexpression(&g, v, w, &[1, 2, 1]).unwrap();
        assert_eq!(all, vec![vec![false, false, true]]);
        let t = sub.t_sequence(&g);
        assert_eq!(g.mul(g.mul(t[0], t[1]), t[2]), v);
    }

    #[test]
    fn t1_examples() {
        let g = a2();
        let w = g.longest();
        assert!(t1_criterion(&g, g.identity(), w, &[1, 2, 1]).unwrap());
        assert!(!t1_criterion(&g, w, w, &[1, 2, 1]).unwrap());
        // s1 <= s2 s1, and the mask (skip, skip, take) has t1 = 1.
        assert!(t1_criterion(&g, g.generator(1).unwrap(), w, &[1, 2, 1]).unwrap());
    }

    #[test]
    fn rejects_bad_inputs() {
        let g = a2();
        let s1 = g.generator(1).unwrap();
        let s2 = g.generator(2).unwrap();
        assert!(matches!(
            positive_subexpression(&g, s1, s2, &[2]),
            Err(Error::Validation(_))
        ));
        assert!(matches!(
            positive_subexpression(&g, s1, s1, &[1, 2, 2]),
            Err(Error::Validation(_))
        ));
        assert!(t1_criterion(&g, g.identity(), s1, &[]).is_err());
    }
}
