//! JSON documents for atlases, and comparison against stored golden files.
//!
//! Two kinds of golden file exist. A *transcribed* file lists cell labels
//! as compact digit strings (`"132"` for `s_1 s_3 s_2`), copied by hand from
//! a printed table, with individually flagged suspect entries. A
//! *regenerated* file is an [`AtlasDocument`] written by this crate. A
//! difference against the first kind is a transcription mismatch; a
//! difference against the second kind is a regression.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::coxeter::{WeylElement, WeylGroup, Word};
use crate::error::{Error, Result};
use crate::flag::FlagAtlas;
use crate::springer::CellAtlas;

pub const ATLAS_SCHEMA: &str = "tnn-springer/atlas/1";
pub const FLAG_ATLAS_SCHEMA: &str = "tnn-springer/flag-atlas/1";
pub const TRANSCRIPTION_SCHEMA: &str = "tnn-springer/transcription/1";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Parses a word such as `"1,3"`, `"1 3"` or `""`; `"-"` is the identity.
pub fn parse_word(s: &str) -> Result<Word> {
    let s = s.trim();
    if s.is_empty() || s == "-" {
        return Ok(Vec::new());
    }
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::validation(format!("{t:?} is not a generator index")))
        })
        .collect()
}

/// Parses a compact digit word like `"2132"`; `"-"` and `""` are the
/// identity.
pub fn parse_compact_word(s: &str) -> Result<Word> {
    let s = s.trim();
    if s.is_empty() || s == "-" {
        return Ok(Vec::new());
    }
    s.chars()
        .map(|c| {
            c.to_digit(10)
                .map(|d| d as usize)
                .ok_or_else(|| Error::validation(format!("{c:?} in {s:?} is not a digit")))
        })
        .collect()
}

pub fn compact_word(word: &[usize]) -> String {
    if word.is_empty() {
        return "-".into();
    }
    word.iter().map(|i| i.to_string()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Context {
    #[serde(rename = "type")]
    pub diagram: String,
    pub rank: usize,
}

impl Context {
    pub fn of(group: &WeylGroup) -> Context {
        Context { diagram: group.diagram().to_string(), rank: group.rank() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PieceDoc {
    pub y_word: Word,
    pub x_word: Word,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellDoc {
    pub v: Word,
    pub w: Word,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagCellDoc {
    pub rt: [Word; 2],
    pub rpt: [Word; 2],
    pub abc: [Word; 3],
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasDocument<C> {
    pub schema: String,
    pub tool_version: String,
    pub context: Context,
    #[serde(rename = "H", default, skip_serializing_if = "Option::is_none")]
    pub h: Option<Vec<usize>>,
    pub piece: PieceDoc,
    pub cells: Vec<C>,
    pub dim_histogram: BTreeMap<usize, usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub golden_diff: Option<GoldenDiff>,
}

impl<C: Serialize> AtlasDocument<C> {
    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }
}

fn word_of(group: &WeylGroup, x: WeylElement) -> Word {
    group.word(x).to_vec()
}

fn piece_doc(group: &WeylGroup, z: WeylElement, z_prime: WeylElement) -> PieceDoc {
    PieceDoc { y_word: word_of(group, z), x_word: word_of(group, z_prime) }
}

pub fn atlas_document(group: &WeylGroup, atlas: &CellAtlas) -> AtlasDocument<CellDoc> {
    AtlasDocument {
        schema: ATLAS_SCHEMA.into(),
        tool_version: TOOL_VERSION.into(),
        context: Context::of(group),
        h: None,
        piece: piece_doc(group, atlas.piece.z, atlas.piece.z_prime),
        cells: atlas
            .cells
            .iter()
            .map(|c| CellDoc { v: word_of(group, c.v), w: word_of(group, c.w), dim: c.dim })
            .collect(),
        dim_histogram: atlas.dim_histogram.clone(),
        golden_diff: None,
    }
}

pub fn flag_atlas_document(group: &WeylGroup, atlas: &FlagAtlas) -> AtlasDocument<FlagCellDoc> {
    let w = |x| word_of(group, x);
    AtlasDocument {
        schema: FLAG_ATLAS_SCHEMA.into(),
        tool_version: TOOL_VERSION.into(),
        context: Context::of(group),
        h: Some(atlas.h.to_vec()),
        piece: piece_doc(group, atlas.piece.z, atlas.piece.z_prime),
        cells: atlas
            .cells
            .iter()
            .map(|c| FlagCellDoc {
                rt: [w(c.r), w(c.t)],
                rpt: [w(c.r_prime), w(c.t_prime)],
                abc: [w(c.a), w(c.b), w(c.c)],
                dim: c.dim,
            })
            .collect(),
        dim_histogram: atlas.dim_histogram.clone(),
        golden_diff: None,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SuspectKind {
    /// The printed list omits a label that belongs.
    Missing,
    /// The printed list contains a label that does not belong.
    Spurious,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuspectEntry {
    pub pair: [String; 2],
    pub kind: SuspectKind,
    pub note: String,
}

/// A hand-transcribed label list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transcription {
    pub schema: String,
    pub context: Context,
    pub piece: PieceDoc,
    pub source: String,
    pub pairs: Vec<[String; 2]>,
    #[serde(default)]
    pub claimed_histogram: BTreeMap<usize, usize>,
    #[serde(default)]
    pub suspect: Vec<SuspectEntry>,
    #[serde(default)]
    pub note: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiffClass {
    TranscriptionMismatch,
    Regression,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiffSide {
    /// Computed but absent from the golden file.
    OnlyComputed,
    /// In the golden file but not computed.
    OnlyGolden,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffEntry {
    pub v: String,
    pub w: String,
    pub side: DiffSide,
    /// Whether the golden file flags this entry as a suspect transcription.
    pub flagged: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenDiff {
    pub golden: String,
    pub class: DiffClass,
    pub matches: bool,
    pub entries: Vec<DiffEntry>,
    pub unflagged: usize,
}

impl GoldenDiff {
    /// No mismatches outside the flagged suspect entries.
    pub fn acceptable(&self) -> bool {
        self.unflagged == 0
    }
}

/// A loaded golden file of either kind.
#[derive(Clone, Debug)]
pub enum Golden {
    Transcribed(Transcription),
    Regenerated(AtlasDocument<CellDoc>),
}

pub fn load_golden(path: &Path) -> Result<Golden> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::validation(format!("cannot read {}: {e}", path.display())))?;
    parse_golden(&text)
}

pub fn parse_golden(text: &str) -> Result<Golden> {
    let bad = |e: serde_json::Error| Error::validation(format!("malformed golden file: {e}"));
    let value: serde_json::Value = serde_json::from_str(text).map_err(bad)?;
    match value.get("schema").and_then(|s| s.as_str()) {
        Some(TRANSCRIPTION_SCHEMA) => Ok(Golden::Transcribed(serde_json::from_value(value).map_err(bad)?)),
        Some(ATLAS_SCHEMA) => Ok(Golden::Regenerated(serde_json::from_value(value).map_err(bad)?)),
        other => Err(Error::validation(format!("unknown golden schema {other:?}"))),
    }
}

type PairSet = BTreeSet<(WeylElement, WeylElement)>;

fn pair_elements(group: &WeylGroup, v: &[usize], w: &[usize]) -> Result<(WeylElement, WeylElement)> {
    Ok((group.element(v)?, group.element(w)?))
}

fn check_context(group: &WeylGroup, atlas: &CellAtlas, context: &Context, piece: &PieceDoc) -> Result<()> {
    if *context != Context::of(group) {
        return Err(Error::validation(format!(
            "golden file is for {}_{}, not {}_{}",
            context.diagram,
            context.rank,
            group.diagram(),
            group.rank()
        )));
    }
    let (z, zp) = pair_elements(group, &piece.y_word, &piece.x_word)?;
    if (z, zp) != (atlas.piece.z, atlas.piece.z_prime) {
        return Err(Error::validation("golden file is for a different piece"));
    }
    Ok(())
}

fn build_diff(
    group: &WeylGroup,
    computed: &PairSet,
    golden: &PairSet,
    flagged: &PairSet,
    name: &str,
    class: DiffClass,
) -> GoldenDiff {
    let entry = |&(v, w): &(WeylElement, WeylElement), side| DiffEntry {
        v: compact_word(group.word(v)),
        w: compact_word(group.word(w)),
        side,
        flagged: flagged.contains(&(v, w)),
    };
    let mut entries: Vec<DiffEntry> = computed
        .difference(golden)
        .map(|p| entry(p, DiffSide::OnlyComputed))
        .chain(golden.difference(computed).map(|p| entry(p, DiffSide::OnlyGolden)))
        .collect();
    entries.sort_by(|a, b| (a.side as u8, &a.v, &a.w).cmp(&(b.side as u8, &b.v, &b.w)));
    let unflagged = entries.iter().filter(|e| !e.flagged).count();
    GoldenDiff {
        golden: name.into(),
        class,
        matches: entries.is_empty(),
        entries,
        unflagged,
    }
}

fn computed_pairs(atlas: &CellAtlas) -> PairSet {
    atlas.cells.iter().map(|c| (c.v, c.w)).collect()
}

/// Compares an atlas with a transcribed list, after canonicalizing both
/// sides to group elements.
pub fn diff_transcription(
    group: &WeylGroup,
    atlas: &CellAtlas,
    t: &Transcription,
    name: &str,
) -> Result<GoldenDiff> {
    check_context(group, atlas, &t.context, &t.piece)?;
    let parse = |pair: &[String; 2]| -> Result<(WeylElement, WeylElement)> {
        pair_elements(group, &parse_compact_word(&pair[0])?, &parse_compact_word(&pair[1])?)
    };
    let golden: PairSet = t.pairs.iter().map(parse).collect::<Result<_>>()?;
    let flagged: PairSet = t.suspect.iter().map(|s| parse(&s.pair)).collect::<Result<_>>()?;
    Ok(build_diff(
        group,
        &computed_pairs(atlas),
        &golden,
        &flagged,
        name,
        DiffClass::TranscriptionMismatch,
    ))
}

/// Compares an atlas with a previously regenerated document.
pub fn diff_regenerated(
    group: &WeylGroup,
    atlas: &CellAtlas,
    doc: &AtlasDocument<CellDoc>,
    name: &str,
) -> Result<GoldenDiff> {
    check_context(group, atlas, &doc.context, &doc.piece)?;
    let golden: PairSet = doc
        .cells
        .iter()
        .map(|c| pair_elements(group, &c.v, &c.w))
        .collect::<Result<_>>()?;
    Ok(build_diff(
        group,
        &computed_pairs(atlas),
        &golden,
        &PairSet::new(),
        name,
        DiffClass::Regression,
    ))
}

pub fn diff_golden(group: &WeylGroup, atlas: &CellAtlas, golden: &Golden, name: &str) -> Result<GoldenDiff> {
    match golden {
        Golden::Transcribed(t) => diff_transcription(group, atlas, t, name),
        Golden::Regenerated(d) => diff_regenerated(group, atlas, d, name),
    }
}

/// Directory holding the golden files shipped with the crate.
pub fn golden_dir() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/golden"))
}
