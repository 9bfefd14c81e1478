//! Brute-force reference implementations used to cross-check the fast paths.
//!
//! Nothing here touches the Bruhat table: the subword oracle works purely
//! from words and group multiplication.

use std::collections::HashSet;

use super::{WeylElement, WeylGroup};

/// All products of subwords of `word` (`2^m` of them, with repetition
/// removed).
pub fn subword_products(group: &WeylGroup, word: &[usize]) -> HashSet<WeylElement> {
    let m = word.len();
    assert!(m <= 24, "subword enumeration over {m} letters is too large");
    let mut out = HashSet::new();
    for mask in 0u32..(1 << m) {
        let mut x = group.identity();
        for (k, &i) in word.iter().enumerate() {
            if mask & (1 << k) != 0 {
                x = group.right_mul(x, i);
            }
        }
        out.insert(x);
    }
    out
}

/// `x <= y` by the subword property: `x` is the product of a subword of a
/// reduced word of `y`.
pub fn bruhat_leq_subword(group: &WeylGroup, x: WeylElement, y: WeylElement) -> bool {
    let word = group.word(y);
    let m = word.len();
    (0u32..(1 << m)).any(|mask| {
        let mut p = group.identity();
        let mut len = 0;
        for (k, &i) in word.iter().enumerate() {
            if mask & (1 << k) != 0 {
                p = group.right_mul(p, i);
                len += 1;
            }
        }
        // Only reduced subwords count; length bookkeeping keeps this honest.
        len == group.length(x) && p == x
    })
}
