//! Property suites shared by the `selftest` command and the test targets.

use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use crate::adjoint::CheckResult;
use crate::coxeter::{oracle, IndexSet, WeylElement, WeylGroup};
use crate::error::{Error, Result};
use crate::flag::{convert_label, enumerate_zh, flag_atlas, zero_dim_witness, FlagCoords};
use crate::parabolic::{
    self, assemble_tnn, borel_chart_check, conjugation_check, eigen_split, minor_positivity,
    parabolic_of, random_invertible, random_tnn_word, random_tp_word, sl2_section_inverse,
    sl2_section_solve, Positivity, Tolerances,
};
use crate::springer::{
    act_cell_words, enumerate_z, in_z, piece_of, springer_atlas, CellLabel, PieceLabel,
};
use crate::subexpr::{brute_force_subexpression, positive_subexpression};
use crate::{adjoint, springer};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

impl FromStr for Level {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(Level::Quick),
            "full" => Ok(Level::Full),
            other => Err(Error::validation(format!(
                "unknown self-test level {other:?}; expected quick or full"
            ))),
        }
    }
}

fn label(group: &WeylGroup) -> String {
    format!("{}_{}", group.diagram(), group.rank())
}

fn words(group: &WeylGroup, x: WeylElement) -> String {
    format!("{:?}", group.word(x))
}

/// Keeps the first few failure messages and counts the rest.
#[derive(Default)]
struct Failures {
    shown: Vec<String>,
    total: usize,
}

impl Failures {
    fn push(&mut self, msg: impl FnOnce() -> String) {
        self.total += 1;
        if self.shown.len() < 5 {
            self.shown.push(msg());
        }
    }

    fn finish(mut self, name: &str, ok: String) -> CheckResult {
        if self.total > self.shown.len() {
            self.shown.push(format!("{} more", self.total - self.shown.len()));
        }
        CheckResult::new(name, self.shown, ok)
    }
}

/// Bruhat order against the subword criterion, inverses, and the `w_0`
/// duality being an involution on Bruhat pairs.
pub fn coxeter_laws(group: &WeylGroup) -> CheckResult {
    let mut f = Failures::default();
    let elements: Vec<WeylElement> = group.elements().collect();
    for &x in &elements {
        if group.mul(x, group.inverse(x)) != group.identity() {
            f.push(|| format!("x·x⁻¹ ≠ e for {}", words(group, x)));
        }
        for &y in &elements {
            if group.bruhat_leq(x, y) != oracle::bruhat_leq_subword(group, x, y) {
                f.push(|| format!("Bruhat table disagrees with subwords at ({}, {})", words(group, x), words(group, y)));
            }
        }
    }
    for (v, w) in group.bruhat_pairs() {
        match group.w0_dual(v, w).and_then(|(a, b)| group.w0_dual(a, b)) {
            Ok(back) if back == (v, w) => {}
            _ => f.push(|| format!("w0 duality is not an involution at ({}, {})", words(group, v), words(group, w))),
        }
    }
    f.finish(
        &format!("coxeter laws {}", label(group)),
        format!("{} elements, Bruhat table = subword criterion", elements.len()),
    )
}

/// Idempotence, braid and commutation relations for `*` and `∘`,
/// exhaustively over all elements.
pub fn hecke_laws(group: &WeylGroup) -> CheckResult {
    let mut f = Failures::default();
    let rank = group.rank();
    for w in group.elements() {
        for i in 1..=rank {
            if group.hecke_star(i, group.hecke_star(i, w)) != group.hecke_star(i, w) {
                f.push(|| format!("s{i} * is not idempotent at {}", words(group, w)));
            }
            if group.hecke_circ(i, group.hecke_circ(i, w)) != group.hecke_circ(i, w) {
                f.push(|| format!("s{i} ∘ is not idempotent at {}", words(group, w)));
            }
            for j in i + 1..=rank {
                let m = if group.cartan()[i - 1][j - 1] == 0 { 2 } else { 3 };
                let alt = |a: usize, b: usize| -> Vec<usize> {
                    (0..m).map(|k| if k % 2 == 0 { a } else { b }).collect()
                };
                let (left, right) = (alt(i, j), alt(j, i));
                if group.star_word(&left, w) != group.star_word(&right, w) {
                    f.push(|| format!("* relation of order {m} fails for ({i},{j}) at {}", words(group, w)));
                }
                if group.circ_word(&left, w) != group.circ_word(&right, w) {
                    f.push(|| format!("∘ relation of order {m} fails for ({i},{j}) at {}", words(group, w)));
                }
            }
        }
    }
    f.finish(
        &format!("hecke laws {}", label(group)),
        "idempotence, braid and commutation relations hold".into(),
    )
}

/// `act_cell` evaluated through random reduced words of `r` and `s`
/// agrees with the canonical-word evaluation.
pub fn act_cell_word_independence(group: &WeylGroup, samples: usize, seed: u64) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(WeylElement, WeylElement)> = group.bruhat_pairs().collect();
    let mut f = Failures::default();
    for _ in 0..samples {
        let (v, w) = pairs[rng.gen_range(0..pairs.len())];
        let cell = CellLabel::new(group, v, w).expect("Bruhat pair");
        let r = group.random_element(&mut rng);
        let s = group.random_element(&mut rng);
        let canonical = springer::act_cell(group, r, s, cell);
        let rw = group.random_reduced_word(r, &mut rng);
        let sw = group.random_reduced_word(s, &mut rng);
        match act_cell_words(group, &rw, &sw, cell) {
            Ok(c) if c == canonical => {}
            _ => f.push(|| format!("act_cell depends on the words {rw:?}, {sw:?}")),
        }
    }
    f.finish(
        &format!("act_cell word independence {}", label(group)),
        format!("{samples} random instances"),
    )
}

fn check_subexpression(
    group: &WeylGroup,
    v: WeylElement,
    w: WeylElement,
    word: &[usize],
    f: &mut Failures,
) {
    let greedy = positive_subexpression(group, v, w, word);
    let brute = brute_force_subexpression(group, v, w, word);
    match (greedy, brute) {
        (Ok(g), Ok(b)) if b.len() == 1 && b[0] == g.mask => {}
        (g, b) => f.push(|| {
            format!(
                "v={}, word={word:?}: greedy {:?}, oracle {:?}",
                words(group, v),
                g.map(|s| s.mask),
                b
            )
        }),
    }
}

/// Uniqueness of the positive subexpression for every Bruhat pair and
/// every reduced word.
pub fn subexpression_exhaustive(group: &WeylGroup) -> CheckResult {
    let mut f = Failures::default();
    let mut cases = 0;
    for w in group.elements() {
        let reduced = group.reduced_words(w);
        for v in group.elements().filter(|&v| group.bruhat_leq(v, w)) {
            for word in &reduced {
                check_subexpression(group, v, w, word, &mut f);
                cases += 1;
            }
        }
    }
    f.finish(
        &format!("positive subexpressions {} exhaustive", label(group)),
        format!("{cases} (v, w, word) triples, one mask each, greedy = oracle"),
    )
}

/// As [`subexpression_exhaustive`] on random triples.
pub fn subexpression_sampled(group: &WeylGroup, samples: usize, seed: u64) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(WeylElement, WeylElement)> = group.bruhat_pairs().collect();
    let mut f = Failures::default();
    for _ in 0..samples {
        let (v, w) = pairs[rng.gen_range(0..pairs.len())];
        let word = group.random_reduced_word(w, &mut rng);
        check_subexpression(group, v, w, &word, &mut f);
    }
    f.finish(
        &format!("positive subexpressions {} sampled", label(group)),
        format!("{samples} random triples, one mask each, greedy = oracle"),
    )
}

/// Every disjoint pair `(J, J')` of subsets of `I`.
pub fn disjoint_subset_pairs(group: &WeylGroup) -> Vec<(IndexSet, IndexSet)> {
    let all = group.generators();
    all.subsets()
        .flat_map(|j| all.difference(j).subsets().map(move |jp| (j, jp)))
        .collect()
}

/// `(v, w) ∈ Z_{J,J'}` iff `(w·w_I, v·w_I) ∈ Z_{J',J}`, exhaustively.
pub fn springer_duality(group: &WeylGroup) -> CheckResult {
    let mut f = Failures::default();
    let pairs: Vec<(WeylElement, WeylElement)> = group.bruhat_pairs().collect();
    let dual: Vec<(WeylElement, WeylElement)> = pairs
        .iter()
        .map(|&(v, w)| group.w0_dual(v, w).expect("Bruhat pair"))
        .collect();
    let contexts = disjoint_subset_pairs(group);
    for &(j, jp) in &contexts {
        for (&(v, w), &(a, b)) in pairs.iter().zip(&dual) {
            if in_z(group, v, w, j, jp) != in_z(group, a, b, jp, j) {
                f.push(|| format!("duality fails at J={j}, J'={jp}, ({}, {})", words(group, v), words(group, w)));
            }
        }
    }
    f.finish(
        &format!("duality {}", label(group)),
        format!("{} index-set pairs × {} Bruhat pairs", contexts.len(), pairs.len()),
    )
}

/// A piece `(w_J, w_J')` for every disjoint `(J, J')`, with its atlas
/// built and its zero-dimensional cells checked.
pub fn springer_atlases(group: &WeylGroup) -> CheckResult {
    let mut f = Failures::default();
    let contexts = disjoint_subset_pairs(group);
    for &(j, jp) in &contexts {
        let piece = PieceLabel {
            z: group.longest_element(j),
            z_prime: group.longest_element(jp),
        };
        match springer_atlas(group, piece) {
            Ok(a) if !a.is_empty() => {}
            Ok(_) => f.push(|| format!("empty atlas for J={j}, J'={jp}")),
            Err(e) => f.push(|| format!("J={j}, J'={jp}: {e}")),
        }
    }
    f.finish(
        &format!("springer atlases {}", label(group)),
        format!("{} pieces, all nonempty with the predicted points", contexts.len()),
    )
}

/// Coordinate round trips for every `H`, the `H = ∅` degeneration, and
/// the zero-dimensional witness in every flag atlas.
pub fn flag_suite(group: &WeylGroup) -> CheckResult {
    let mut f = Failures::default();
    let mut labels = 0;
    let contexts = disjoint_subset_pairs(group);
    for h in group.generators().subsets() {
        let all = match enumerate_zh(group, h, IndexSet::EMPTY, IndexSet::EMPTY) {
            Ok(v) => v,
            Err(e) => {
                f.push(|| format!("H={h}: {e}"));
                continue;
            }
        };
        for c in &all {
            labels += 1;
            let forms = [
                FlagCoords::Rt(c.r, c.t),
                FlagCoords::Rpt(c.r_prime, c.t_prime),
                FlagCoords::Abc(c.a, c.b, c.c),
            ];
            for form in forms {
                if convert_label(group, h, form).as_ref() != Ok(c) {
                    f.push(|| format!("round trip fails for H={h}, {form:?}"));
                }
            }
        }
        for &(j, jp) in &contexts {
            let piece = PieceLabel {
                z: group.longest_element(j),
                z_prime: group.longest_element(jp),
            };
            match flag_atlas(group, h, piece) {
                Ok(atlas) => {
                    let (wr, wrp) = zero_dim_witness(group, h, j);
                    if !atlas.cells.iter().any(|c| c.dim == 0 && c.r == wr && c.r_prime == wrp) {
                        f.push(|| format!("witness missing for H={h}, J={j}, J'={jp}"));
                    }
                    if h.is_empty() {
                        let spr = enumerate_z(group, j, jp).unwrap_or_default();
                        let a: Vec<_> = atlas.cells.iter().map(|c| (c.r, c.t, c.dim)).collect();
                        let b: Vec<_> = spr.iter().map(|c| (c.v, c.w, c.dim)).collect();
                        if a != b {
                            f.push(|| format!("H=∅ atlas differs from Z for J={j}, J'={jp}"));
                        }
                    }
                }
                Err(e) => f.push(|| format!("H={h}, J={j}, J'={jp}: {e}")),
            }
        }
    }
    f.finish(
        &format!("flag cells {}", label(group)),
        format!("{labels} labels round trip; witnesses present; H=∅ matches Z"),
    )
}

/// The cell counts of the pieces `(w_J, e)` and `(w_J, s_n)` in type A.
pub fn family_counts(group: &WeylGroup) -> CheckResult {
    let n = group.rank();
    let j: Vec<usize> = (1..n).collect();
    let mut f = Failures::default();
    let expect = [(vec![], n + 1, n), (vec![n], n, n - 1)];
    for (x_word, zero, one) in expect {
        match piece_of(group, group.word(group.longest_element(j.iter().copied().collect())), &x_word)
            .and_then(|p| springer_atlas(group, p))
        {
            Ok(a) => {
                let got: Vec<(usize, usize)> = a.dim_histogram.iter().map(|(&d, &c)| (d, c)).collect();
                if got != vec![(0, zero), (1, one)] {
                    f.push(|| format!("x-word {x_word:?}: histogram {got:?}"));
                }
            }
            Err(e) => f.push(|| e.to_string()),
        }
    }
    f.finish(
        &format!("(w_J, e) family counts {}", label(group)),
        format!("{} + {} and {} + {} cells", n + 1, n, n, n - 1),
    )
}

/// Random generator words: total nonnegativity, positive spectrum and
/// agreement of the two constructions of `P_g`.
pub fn tnn_sampling(n: usize, samples: usize, seed: u64, tol: &Tolerances) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut f = Failures::default();
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let len = rng.gen_range(0..10);
        let word = random_tnn_word(n, len, &mut rng);
        let result = assemble_tnn(n, &word).and_then(|g| {
            if minor_positivity(&g.entries) == Positivity::Neither {
                return Err(Error::verification("a product of generators has a negative minor"));
            }
            let split = eigen_split(&g, tol)?;
            if split.eigenvalues().iter().any(|&x| x <= 0.0) {
                return Err(Error::verification("nonpositive eigenvalue"));
            }
            parabolic_of(&g, tol)
        });
        match result {
            Ok(p) => worst = worst.max(p.construction_distance),
            Err(e) => f.push(|| format!("{}: {e}", display_word(&word))),
        }
    }
    f.finish(
        &format!("TNN sampling SL_{n}"),
        format!("{samples} words; max construction distance {worst:.2e}"),
    )
}

/// Totally positive samples pass the Borel chart check.
pub fn tp_sampling(n: usize, samples: usize, seed: u64, tol: &Tolerances) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut f = Failures::default();
    let mut min_pluecker = f64::INFINITY;
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let extra = rng.gen_range(0..4);
        let word = random_tp_word(n, extra, &mut rng);
        match assemble_tnn(n, &word).and_then(|g| borel_chart_check(&g, tol)) {
            Ok(r) => {
                min_pluecker = min_pluecker.min(r.min_normalized_pluecker);
                worst = worst.max(r.construction_distance);
            }
            Err(e) => f.push(|| format!("{}: {e}", display_word(&word))),
        }
    }
    f.finish(
        &format!("Borel chart SL_{n}"),
        format!(
            "{samples} totally positive samples; min normalized Plücker {min_pluecker:.2e}; max construction distance {worst:.2e}"
        ),
    )
}

/// Flags move by `h` under conjugation by random integer `h`.
pub fn conjugation_sampling(n: usize, samples: usize, seed: u64, tol: &Tolerances) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut f = Failures::default();
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let word = random_tp_word(n, 1, &mut rng);
        let h = random_invertible(n, &mut rng);
        match assemble_tnn(n, &word).and_then(|g| conjugation_check(&g, &h, tol)) {
            Ok(d) => worst = worst.max(d),
            Err(e) => f.push(|| format!("{}: {e}", display_word(&word))),
        }
    }
    f.finish(
        &format!("conjugation equivariance SL_{n}"),
        format!("{samples} samples; max flag distance {worst:.2e}"),
    )
}

/// The SL₂ section at fixed points and its round trip.
pub fn sl2_suite(samples: usize, seed: u64) -> CheckResult {
    let mut f = Failures::default();
    match sl2_section_solve(1.0, 1.0, 1.0) {
        Ok(s) if (s.epsilon - (2f64.sqrt() - 1.0)).abs() <= 1e-10 => {}
        other => f.push(|| format!("ε(1,1,1) = {other:?}")),
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let z = 10f64.powf(rng.gen_range(-2.0..2.0));
        let b = 10f64.powf(rng.gen_range(-2.0..2.0));
        let c = 10f64.powf(rng.gen_range(-2.0..2.0));
        let back = sl2_section_solve(z, b, c).and_then(|s| sl2_section_inverse(s.a, s.b, s.c, s.d));
        match back {
            Ok((z2, b2, c2, _))
                if (b2 - b).abs() <= 1e-10 * b.max(1.0)
                    && (c2 - c).abs() <= 1e-10 * c.max(1.0)
                    && (z2 - z).abs() <= 1e-9 * z.max(1.0) => {}
            other => f.push(|| format!("round trip of ({z}, {b}, {c}) gave {other:?}")),
        }
    }
    f.finish("SL_2 section", format!("ε(1,1,1) = √2 − 1; {samples} round trips"))
}

fn display_word(word: &[parabolic::Generator]) -> String {
    word.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(",")
}

fn groups(specs: &[(&str, usize)]) -> Result<Vec<WeylGroup>> {
    specs.iter().map(|&(t, r)| WeylGroup::build(t, r)).collect()
}

/// Runs every suite of a level.
pub fn run(level: Level) -> Result<Vec<CheckResult>> {
    let tol = Tolerances::default();
    let mut out = Vec::new();
    let small = groups(&[("A", 1), ("A", 2)])?;
    for g in &small {
        out.push(coxeter_laws(g));
        out.push(hecke_laws(g));
        out.push(subexpression_exhaustive(g));
        out.push(springer_duality(g));
        out.push(springer_atlases(g));
        out.push(flag_suite(g));
    }
    out.push(family_counts(&small[1]));
    out.extend(adjoint::verify(&small[1])?);
    out.push(sl2_suite(100, 1));
    if level == Level::Full {
        let big = groups(&[("A", 3), ("D", 4)])?;
        for g in &big {
            out.push(coxeter_laws(g));
            out.push(hecke_laws(g));
            out.push(act_cell_word_independence(g, 200, 2));
            out.push(subexpression_sampled(g, 300, 3));
            out.push(springer_duality(g));
            out.push(springer_atlases(g));
        }
        out.push(subexpression_exhaustive(&big[0]));
        out.push(flag_suite(&big[0]));
        for g in groups(&[("A", 3), ("A", 4)])? {
            out.push(family_counts(&g));
        }
        for n in 2..=4 {
            out.push(tnn_sampling(n, 100, 10 + n as u64, &tol));
        }
        for n in 2..=3 {
            out.push(tp_sampling(n, 100, 20 + n as u64, &tol));
            out.push(conjugation_sampling(n, 20, 30 + n as u64, &tol));
        }
    }
    Ok(out)
}
