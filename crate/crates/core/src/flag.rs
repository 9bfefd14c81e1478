//! Cells of totally nonnegative partial flag manifolds.
//!
//! For `H ⊆ I` a cell is labelled by a triple `(a, b, c)` with
//! `a ∈ w_I·W^H`, `b ∈ W^H`, `c ∈ W_H` and `a <= bc`. Two other coordinate
//! systems are in use: `(r, t) = α(a, b, c) = (a, bc)` and
//! `(r', t') = α'(a, b, c) = (a·c⁻¹, b)`. Every label carries all three.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::coxeter::{IndexSet, WeylElement, WeylGroup};
use crate::error::{Error, Result};
use crate::springer::{x_side_set, y_side_set, PieceLabel};

/// One of the three coordinate forms of a flag cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlagCoords {
    Rt(WeylElement, WeylElement),
    Rpt(WeylElement, WeylElement),
    Abc(WeylElement, WeylElement, WeylElement),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FlagCellLabel {
    pub h: IndexSet,
    pub r: WeylElement,
    pub t: WeylElement,
    pub r_prime: WeylElement,
    pub t_prime: WeylElement,
    pub a: WeylElement,
    pub b: WeylElement,
    pub c: WeylElement,
    pub dim: usize,
}

impl FlagCellLabel {
    pub fn rt(&self) -> (WeylElement, WeylElement) {
        (self.r, self.t)
    }

    pub fn rpt(&self) -> (WeylElement, WeylElement) {
        (self.r_prime, self.t_prime)
    }

    pub fn abc(&self) -> (WeylElement, WeylElement, WeylElement) {
        (self.a, self.b, self.c)
    }

    pub fn sort_key<'g>(&self, group: &'g WeylGroup) -> (usize, &'g [usize], &'g [usize]) {
        (self.dim, group.word(self.r), group.word(self.t))
    }
}

/// `W^H`: elements with no right descent in `H`.
pub fn minimal_reps(group: &WeylGroup, h: IndexSet) -> Vec<WeylElement> {
    group
        .elements()
        .filter(|&w| group.right_descents(w).is_disjoint(h))
        .collect()
}

/// `w_I·W^H`: the longest elements of the cosets `wW_H`.
pub fn maximal_reps(group: &WeylGroup, h: IndexSet) -> Vec<WeylElement> {
    let w0 = group.longest();
    let mut out: Vec<WeylElement> = minimal_reps(group, h)
        .into_iter()
        .map(|x| group.mul(w0, x))
        .collect();
    out.sort();
    out
}

fn is_min_rep(group: &WeylGroup, w: WeylElement, h: IndexSet) -> bool {
    group.right_descents(w).is_disjoint(h)
}

fn is_max_rep(group: &WeylGroup, w: WeylElement, h: IndexSet) -> bool {
    h.is_subset(group.right_descents(w))
}

fn check_h(group: &WeylGroup, h: IndexSet) -> Result<()> {
    if !h.is_subset(group.generators()) {
        return Err(Error::validation(format!(
            "H = {h} is not inside {}",
            group.generators()
        )));
    }
    Ok(())
}

fn words(group: &WeylGroup, xs: &[WeylElement]) -> String {
    let parts: Vec<String> = xs.iter().map(|&x| format!("{:?}", group.word(x))).collect();
    parts.join(", ")
}

fn from_abc(
    group: &WeylGroup,
    h: IndexSet,
    a: WeylElement,
    b: WeylElement,
    c: WeylElement,
) -> Result<FlagCellLabel> {
    if !is_max_rep(group, a, h) {
        return Err(Error::validation(format!(
            "a = {:?} is not in w_I·W^H",
            group.word(a)
        )));
    }
    if !is_min_rep(group, b, h) {
        return Err(Error::validation(format!(
            "b = {:?} is not in W^H",
            group.word(b)
        )));
    }
    if !group.support(c).is_subset(h) {
        return Err(Error::validation(format!(
            "c = {:?} is not in W_H",
            group.word(c)
        )));
    }
    let t = group.mul(b, c);
    let r_prime = group.mul(a, group.inverse(c));
    let forward = group.bruhat_leq(a, t);
    if forward != group.bruhat_leq(r_prime, b) {
        return Err(Error::Consistency(format!(
            "a <= bc and a·c⁻¹ <= b disagree for ({})",
            words(group, &[a, b, c])
        )));
    }
    if !forward {
        return Err(Error::validation(format!(
            "triple ({}) violates a <= bc",
            words(group, &[a, b, c])
        )));
    }
    let dim = group.length(t) - group.length(a);
    debug_assert_eq!(dim, group.length(b) - group.length(r_prime));
    Ok(FlagCellLabel {
        h,
        r: a,
        t,
        r_prime,
        t_prime: b,
        a,
        b,
        c,
        dim,
    })
}

/// Fills in all three coordinate forms from any one of them.
pub fn convert_label(group: &WeylGroup, h: IndexSet, coords: FlagCoords) -> Result<FlagCellLabel> {
    check_h(group, h)?;
    match coords {
        FlagCoords::Abc(a, b, c) => from_abc(group, h, a, b, c),
        FlagCoords::Rt(r, t) => {
            if !is_max_rep(group, r, h) {
                return Err(Error::validation(format!(
                    "r = {:?} is not in w_I·W^H",
                    group.word(r)
                )));
            }
            let (b, c) = group.coset_factorize(t, h);
            from_abc(group, h, r, b, c)
        }
        FlagCoords::Rpt(r_prime, t_prime) => {
            if !is_min_rep(group, t_prime, h) {
                return Err(Error::validation(format!(
                    "t' = {:?} is not in W^H",
                    group.word(t_prime)
                )));
            }
            if !group.bruhat_leq(r_prime, t_prime) {
                return Err(Error::validation(format!(
                    "r' = {:?} is not below t' = {:?}",
                    group.word(r_prime),
                    group.word(t_prime)
                )));
            }
            let w0r = group.mul(group.longest(), r_prime);
            let (_, tail) = group.coset_factorize(w0r, h);
            let c = group.inverse(tail);
            from_abc(group, h, group.mul(r_prime, c), t_prime, c)
        }
    }
}

/// Every label of `Z_{H;J,J'}`, in `(dim, r-word, t-word)` order.
pub fn enumerate_zh(
    group: &WeylGroup,
    h: IndexSet,
    j: IndexSet,
    jp: IndexSet,
) -> Result<Vec<FlagCellLabel>> {
    check_h(group, h)?;
    if !j.is_subset(group.generators()) || !jp.is_subset(group.generators()) {
        return Err(Error::validation(format!("index sets {j}, {jp} out of range")));
    }
    if !j.is_disjoint(jp) {
        return Err(Error::validation(format!("index sets {j} and {jp} intersect")));
    }
    let mut out = Vec::new();
    for r in maximal_reps(group, h) {
        for t in group.elements().filter(|&t| group.bruhat_leq(r, t)) {
            if !j.is_subset(y_side_set(group, r, t)) {
                continue;
            }
            let label = convert_label(group, h, FlagCoords::Rt(r, t))?;
            if jp.is_subset(x_side_set(group, label.r_prime, label.t_prime)) {
                out.push(label);
            }
        }
    }
    out.sort_by(|x, y| x.sort_key(group).cmp(&y.sort_key(group)));
    Ok(out)
}

/// Flag cells of one piece.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagAtlas {
    pub h: IndexSet,
    pub piece: PieceLabel,
    pub cells: Vec<FlagCellLabel>,
    pub dim_histogram: BTreeMap<usize, usize>,
}

impl FlagAtlas {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

/// The zero-dimensional witness `r' = w_J·w_{J∩H}`, `r = r'·w_H`.
pub fn zero_dim_witness(group: &WeylGroup, h: IndexSet, j: IndexSet) -> (WeylElement, WeylElement) {
    let r_prime = group.mul(
        group.longest_element(j),
        group.longest_element(j.intersection(h)),
    );
    (group.mul(r_prime, group.longest_element(h)), r_prime)
}

/// Cells of the partial-flag fibre of a piece, with zero-dimensional cells
/// checked against their descent description and the standard witness.
pub fn flag_atlas(group: &WeylGroup, h: IndexSet, piece: PieceLabel) -> Result<FlagAtlas> {
    let (j, jp) = piece.supports(group);
    let cells = enumerate_zh(group, h, j, jp)?;
    let wh = group.longest_element(h);
    let mut predicted: Vec<WeylElement> = minimal_reps(group, h)
        .into_iter()
        .filter(|&rp| {
            let r = group.mul(rp, wh);
            j.iter()
                .all(|i| group.bruhat_leq(group.left_mul(i, r), r))
                && jp
                    .iter()
                    .all(|k| group.bruhat_leq(rp, group.left_mul(k, rp)))
        })
        .collect();
    predicted.sort();
    let mut found: Vec<WeylElement> = cells
        .iter()
        .filter(|c| c.dim == 0)
        .map(|c| {
            debug_assert!(c.r == c.t && c.r_prime == c.t_prime);
            c.r_prime
        })
        .collect();
    found.sort();
    if found != predicted {
        return Err(Error::Consistency(format!(
            "zero-dimensional flag cells for H = {h}, J = {j}, J' = {jp} disagree with the descent description"
        )));
    }
    let (wr, wrp) = zero_dim_witness(group, h, j);
    if !cells
        .iter()
        .any(|c| c.dim == 0 && c.r == wr && c.r_prime == wrp)
    {
        return Err(Error::Consistency(format!(
            "zero-dimensional witness missing for H = {h}, J = {j}"
        )));
    }
    let mut dim_histogram = BTreeMap::new();
    for c in &cells {
        *dim_histogram.entry(c.dim).or_insert(0) += 1;
    }
    Ok(FlagAtlas {
        h,
        piece,
        cells,
        dim_histogram,
    })
}

/// The two condition sets attached to a flag cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FlagXi {
    /// `{i : s_i t <= t, r ≰ s_i t}`.
    pub y_side: IndexSet,
    /// `{j : r' <= s_j r', s_j r' ≰ t'}`.
    pub x_side: IndexSet,
}

impl FlagXi {
    pub fn contains(&self, group: &WeylGroup, z: WeylElement, z_prime: WeylElement) -> bool {
        group.support(z).is_subset(self.y_side) && group.support(z_prime).is_subset(self.x_side)
    }
}

pub fn flag_xi(group: &WeylGroup, label: &FlagCellLabel) -> FlagXi {
    FlagXi {
        y_side: y_side_set(group, label.r, label.t),
        x_side: x_side_set(group, label.r_prime, label.t_prime),
    }
}

/// `(r, s)` acting on a flag cell: `s` by `*` on `t`, then `r` by `∘` on
/// `r'`, reconverting coordinates after each step.
pub fn act_flag_cell(
    group: &WeylGroup,
    r: WeylElement,
    s: WeylElement,
    label: &FlagCellLabel,
) -> Result<FlagCellLabel> {
    let h = label.h;
    let after_s = convert_label(group, h, FlagCoords::Rt(label.r, group.star(s, label.t)))?;
    convert_label(
        group,
        h,
        FlagCoords::Rpt(group.circ(r, after_s.r_prime), after_s.t_prime),
    )
}

/// Same as [`act_flag_cell`] with the `r` step applied first.
pub fn act_flag_cell_r_first(
    group: &WeylGroup,
    r: WeylElement,
    s: WeylElement,
    label: &FlagCellLabel,
) -> Result<FlagCellLabel> {
    let h = label.h;
    let after_r = convert_label(
        group,
        h,
        FlagCoords::Rpt(group.circ(r, label.r_prime), label.t_prime),
    )?;
    convert_label(group, h, FlagCoords::Rt(after_r.r, group.star(s, after_r.t)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::springer::{enumerate_z, piece_of, springer_atlas, xi_sets};

    fn grp(t: &str, r: usize) -> WeylGroup {
        WeylGroup::build(t, r).unwrap()
    }

    fn el(g: &WeylGroup, w: &[usize]) -> WeylElement {
        g.element(w).unwrap()
    }

    #[test]
    fn minimal_reps_examples() {
        let g = grp("A", 2);
        assert_eq!(minimal_reps(&g, IndexSet::EMPTY).len(), 6);
        assert_eq!(minimal_reps(&g, g.generators()), vec![g.identity()]);
        let h = g.index_set(&[2]).unwrap();
        assert_eq!(
            minimal_reps(&g, h),
            vec![g.identity(), el(&g, &[1]), el(&g, &[2, 1])]
        );
        let mut max = maximal_reps(&g, h);
        max.sort_by_key(|&x| g.length(x));
        assert_eq!(max, vec![el(&g, &[2]), el(&g, &[1, 2]), el(&g, &[1, 2, 1])]);
        let g = grp("A", 3);
        for h in g.generators().subsets() {
            let wh = g.parabolic_subgroup(h).len();
            assert_eq!(minimal_reps(&g, h).len() * wh, g.order());
        }
    }

    #[test]
    fn convert_examples() {
        let g = grp("A", 2);
        let h = g.index_set(&[2]).unwrap();
        let l = convert_label(&g, h, FlagCoords::Rt(el(&g, &[1, 2]), el(&g, &[1, 2]))).unwrap();
        assert_eq!(l.abc(), (el(&g, &[1, 2]), el(&g, &[1]), el(&g, &[2])));
        assert_eq!(l.rpt(), (el(&g, &[1]), el(&g, &[1])));
        let w0 = g.longest();
        let l = convert_label(&g, h, FlagCoords::Rt(w0, w0)).unwrap();
        assert_eq!(l.abc(), (w0, el(&g, &[2, 1]), el(&g, &[2])));
        assert_eq!(l.rpt(), (el(&g, &[2, 1]), el(&g, &[2, 1])));
        assert!(convert_label(&g, h, FlagCoords::Rt(el(&g, &[1]), w0)).is_err());
        assert!(convert_label(&g, h, FlagCoords::Rpt(g.identity(), el(&g, &[2]))).is_err());
    }

    #[test]
    fn round_trips_in_a3() {
        let g = grp("A", 3);
        for h in g.generators().subsets() {
            let maxr = maximal_reps(&g, h);
            let wh: Vec<_> = g.parabolic_subgroup(h);
            let mut count = 0;
            for &r in &maxr {
                for t in g.elements().filter(|&t| g.bruhat_leq(r, t)) {
                    let l = convert_label(&g, h, FlagCoords::Rt(r, t)).unwrap();
                    assert_eq!(l.rt(), (r, t));
                    let back = convert_label(&g, h, FlagCoords::Rpt(l.r_prime, l.t_prime)).unwrap();
                    assert_eq!(back, l);
                    let again = convert_label(&g, h, FlagCoords::Abc(l.a, l.b, l.c)).unwrap();
                    assert_eq!(again, l);
                    assert_eq!(
                        g.length(l.t) - g.length(l.r),
                        g.length(l.t_prime) - g.length(l.r_prime)
                    );
                    count += 1;
                }
            }
            // The triple set has the same size as 𝒵 and as 𝒵'.
            let mut triples = 0;
            for &a in &maxr {
                for b in minimal_reps(&g, h) {
                    for &c in &wh {
                        let fwd = g.bruhat_leq(a, g.mul(b, c));
                        assert_eq!(fwd, g.bruhat_leq(g.mul(a, g.inverse(c)), b));
                        triples += usize::from(fwd);
                    }
                }
            }
            let zprime = g
                .elements()
                .flat_map(|rp| minimal_reps(&g, h).into_iter().map(move |tp| (rp, tp)))
                .filter(|&(rp, tp)| g.bruhat_leq(rp, tp))
                .count();
            assert_eq!(count, triples);
            assert_eq!(count, zprime);
        }
    }

    #[test]
    fn zh_examples() {
        let g = grp("A", 2);
        let h = g.index_set(&[2]).unwrap();
        let j = g.index_set(&[1]).unwrap();
        let cells = enumerate_zh(&g, h, j, IndexSet::EMPTY).unwrap();
        let rt: Vec<_> = cells.iter().map(|c| (c.rt(), c.dim)).collect();
        assert_eq!(
            rt,
            vec![
                ((el(&g, &[1, 2]), el(&g, &[1, 2])), 0),
                ((g.longest(), g.longest()), 0),
                ((el(&g, &[1, 2]), g.longest()), 1),
            ]
        );
        let atlas = flag_atlas(&g, h, piece_of(&g, &[1], &[]).unwrap()).unwrap();
        assert_eq!(atlas.cells, cells);
    }

    #[test]
    fn empty_h_degenerates_to_springer() {
        for (t, r) in [("A", 2), ("A", 3)] {
            let g = grp(t, r);
            for j in g.generators().subsets() {
                for jp in g.generators().difference(j).subsets() {
                    let flag = enumerate_zh(&g, IndexSet::EMPTY, j, jp).unwrap();
                    let spr = enumerate_z(&g, j, jp).unwrap();
                    let a: Vec<_> = flag.iter().map(|c| (c.r, c.t, c.dim)).collect();
                    let b: Vec<_> = spr.iter().map(|c| (c.v, c.w, c.dim)).collect();
                    assert_eq!(a, b);
                    for c in &flag {
                        assert_eq!(c.rt(), c.rpt());
                        let xi = xi_sets(&g, c.r, c.t).unwrap();
                        let fx = flag_xi(&g, c);
                        assert_eq!((fx.y_side, fx.x_side), (xi.h, xi.h_prime));
                    }
                }
            }
        }
    }

    #[test]
    fn flag_atlases_in_a3() {
        let g = grp("A", 3);
        for h in g.generators().subsets() {
            for j in g.generators().subsets() {
                for jp in g.generators().difference(j).subsets() {
                    let piece =
                        PieceLabel::new(&g, g.longest_element(j), g.longest_element(jp)).unwrap();
                    let atlas = flag_atlas(&g, h, piece).unwrap();
                    assert!(!atlas.is_empty());
                }
            }
        }
        let h = g.index_set(&[3]).unwrap();
        let piece = piece_of(&g, &[1, 2, 1], &[]).unwrap();
        let atlas = flag_atlas(&g, h, piece).unwrap();
        let j = g.index_set(&[1, 2]).unwrap();
        let (wr, wrp) = zero_dim_witness(&g, h, j);
        assert!(atlas.cells.iter().any(|c| c.r == wr && c.r_prime == wrp));
        // Full-H atlas of the trivial piece is every flag cell.
        let all = flag_atlas(&g, IndexSet::EMPTY, piece_of(&g, &[], &[]).unwrap()).unwrap();
        assert_eq!(all.len(), springer_atlas(&g, piece_of(&g, &[], &[]).unwrap()).unwrap().len());
    }

    #[test]
    fn flag_xi_examples() {
        let g = grp("A", 2);
        let h = g.index_set(&[2]).unwrap();
        let l = convert_label(&g, h, FlagCoords::Rt(el(&g, &[1, 2]), el(&g, &[1, 2]))).unwrap();
        let xi = flag_xi(&g, &l);
        assert_eq!((xi.y_side.to_vec(), xi.x_side.to_vec()), (vec![1], vec![2]));
        assert!(xi.contains(&g, el(&g, &[1]), el(&g, &[2])));
        assert!(!xi.contains(&g, el(&g, &[2]), g.identity()));
        let top = convert_label(&g, h, FlagCoords::Rt(el(&g, &[2]), g.longest())).unwrap();
        let xi = flag_xi(&g, &top);
        assert!(xi.y_side.is_empty() && xi.x_side.is_empty());
    }

    #[test]
    fn flag_action_examples() {
        let g = grp("A", 2);
        let h = g.index_set(&[2]).unwrap();
        let e = g.identity();
        let l = convert_label(&g, h, FlagCoords::Rt(el(&g, &[1, 2]), el(&g, &[1, 2]))).unwrap();
        assert_eq!(act_flag_cell(&g, e, e, &l).unwrap(), l);
        assert_eq!(act_flag_cell(&g, e, el(&g, &[1]), &l).unwrap(), l);
        let moved = act_flag_cell(&g, e, el(&g, &[2]), &l).unwrap();
        assert_eq!(moved.rt(), (el(&g, &[1, 2]), g.longest()));
    }

    #[test]
    fn flag_action_order_and_degeneration() {
        let g = grp("A", 3);
        let elements: Vec<_> = g.elements().collect();
        for h in g.generators().subsets() {
            for r in maximal_reps(&g, h) {
                for t in g.elements().filter(|&t| g.bruhat_leq(r, t)) {
                    let l = convert_label(&g, h, FlagCoords::Rt(r, t)).unwrap();
                    for &x in elements.iter().step_by(5) {
                        for &y in elements.iter().step_by(7) {
                            let a = act_flag_cell(&g, x, y, &l).unwrap();
                            let b = act_flag_cell_r_first(&g, x, y, &l).unwrap();
                            assert_eq!(a, b);
                            if h.is_empty() {
                                assert_eq!((a.r, a.t), (g.circ(x, r), g.star(y, t)));
                            }
                        }
                    }
                }
            }
        }
    }
}
