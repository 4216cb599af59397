//! Five-matrix generation trees for both families.
//!
//! Every primitive 120° triple is `N · v` or its `(a, c, b)` swap for
//! exactly one word `N = N_{p1}⋯N_{pk}` over the five generators and one
//! seed `v ∈ {(7,5,3), (13,7,8)}`. The 60° tree is the same tree pulled
//! back through `S`: generators `Mᵢ = S⁻¹ Nᵢ S`, seeds `S⁻¹ v`, and
//! twin `(a, b, b − c)` in place of the swap.

use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::bijection::{apply_matrix, conjugate, deconjugate, S};
use crate::error::{Error, Result};
use crate::matrix::GenMatrix;
use crate::params::{swap_120, twin_60};
use crate::triple::{is_member, is_primitive, member_family, Family, Triple};

pub const M1: GenMatrix = GenMatrix::new([[7, -6, 6], [8, -7, 7], [4, -4, 3]]);
pub const M2: GenMatrix = GenMatrix::new([[7, 6, -6], [8, 7, -7], [4, 3, -4]]);
pub const M3: GenMatrix = GenMatrix::new([[7, 6, 0], [8, 7, 0], [4, 3, 1]]);
/// `S⁻¹ · N4 · S`
pub const M4: GenMatrix = GenMatrix::new([[7, 0, 6], [8, 0, 7], [4, 1, 3]]);
/// `S⁻¹ · N5 · S`
pub const M5: GenMatrix = GenMatrix::new([[7, 0, -6], [8, 0, -7], [4, 1, -4]]);

pub const N1: GenMatrix = GenMatrix::new([[7, 0, -6], [4, -1, -4], [4, 1, -3]]);
pub const N2: GenMatrix = GenMatrix::new([[7, 0, 6], [4, -1, 3], [4, 1, 4]]);
pub const N3: GenMatrix = GenMatrix::new([[7, 6, 6], [4, 4, 3], [4, 3, 4]]);
pub const N4: GenMatrix = GenMatrix::new([[7, 6, 0], [4, 4, 1], [4, 3, -1]]);
pub const N5: GenMatrix = GenMatrix::new([[7, -6, 0], [4, -3, 1], [4, -4, -1]]);

/// Published variants that disagree with the reconciled constants.
pub mod printed {
    use super::*;

    /// Fourth and fifth generators as displayed alongside M1..M3; they
    /// repeat M1 and M2.
    pub const M4_DISPLAY: GenMatrix = M1;
    pub const M5_DISPLAY: GenMatrix = M2;
    /// Fourth and fifth generators as used in the conjugation computation.
    pub const M4_CONJUGATION: GenMatrix = GenMatrix::new([[7, 0, -6], [8, 0, -7], [4, 1, 3]]);
    pub const M5_CONJUGATION: GenMatrix = GenMatrix::new([[7, 0, -6], [8, 0, -7], [4, 1, -4]]);
    /// N2 as displayed in the tree statement (entry (1,3) negated).
    pub const N2_STATEMENT: GenMatrix = GenMatrix::new([[7, 0, -6], [4, -1, 3], [4, 1, 4]]);
    /// Second 60° seed as displayed next to the generators.
    pub const SEED2_DISPLAY: [i64; 3] = [13, 15, 17];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SeedId {
    /// (7,8,5) for 60°, (7,5,3) for 120°
    S1,
    /// (13,15,7) for 60°, (13,7,8) for 120°
    S2,
}

impl SeedId {
    fn index(self) -> usize {
        match self {
            SeedId::S1 => 0,
            SeedId::S2 => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SeedId::S1 => "S1",
            SeedId::S2 => "S2",
        }
    }
}

impl fmt::Display for SeedId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Names one tree node: a seed, generator letters in `1..=5` (the first
/// letter is the outermost factor, applied last), and whether the
/// twin/swap of the node is meant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DerivationWord {
    pub seed: SeedId,
    pub letters: Vec<u8>,
    pub twin: bool,
}

impl DerivationWord {
    pub fn new(seed: SeedId, letters: Vec<u8>, twin: bool) -> Self {
        Self { seed, letters, twin }
    }

    /// Letters as a digit string, e.g. `"53"`; empty for a seed.
    pub fn letters_string(&self) -> String {
        self.letters.iter().map(|l| char::from(b'0' + l)).collect()
    }
}

/// Generators and seeds of one family's tree, with cached inverses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixSet {
    pub family: Family,
    pub generators: [GenMatrix; 5],
    pub seeds: [Triple; 2],
    inverses: [GenMatrix; 5],
}

impl MatrixSet {
    pub fn new(family: Family, generators: [GenMatrix; 5], seeds: [Triple; 2]) -> Result<Self> {
        let mut inverses = [GenMatrix::IDENTITY; 5];
        for (inv, g) in inverses.iter_mut().zip(&generators) {
            *inv = g
                .inverse()?
                .ok_or_else(|| Error::NotInFamily(format!("generator {g} is not unimodular")))?;
        }
        Ok(Self { family, generators, seeds, inverses })
    }

    pub fn seed(&self, id: SeedId) -> Triple {
        self.seeds[id.index()]
    }

    pub fn generator(&self, letter: u8) -> Option<&GenMatrix> {
        letter.checked_sub(1).and_then(|i| self.generators.get(i as usize))
    }

    /// The twin (60°) or swap (120°) partner of a tree node.
    pub fn partner(&self, t: Triple) -> Result<Triple> {
        match self.family {
            Family::Sixty => twin_60(t),
            Family::OneTwenty => Ok(swap_120(t)),
        }
    }

    /// Undoes [`MatrixSet::partner`].
    fn unpartner(&self, t: Triple) -> Result<Option<Triple>> {
        match self.family {
            Family::Sixty => Ok(if t.b() > t.c() && is_member(Family::Sixty, t)? {
                Some(twin_60(t)?)
            } else {
                None
            }),
            Family::OneTwenty => Ok(Some(swap_120(t))),
        }
    }

    /// Unimodular generators that map both seeds to primitive members.
    pub fn check(&self) -> std::result::Result<(), String> {
        for (i, g) in self.generators.iter().enumerate() {
            let det = g.det().map_err(|e| e.to_string())?;
            if det.abs() != 1 {
                return Err(format!("{} generator {} has det {det}", self.family, i + 1));
            }
            for seed in &self.seeds {
                let ok = apply_matrix(g, *seed)
                    .and_then(|x| is_primitive(self.family, x))
                    .unwrap_or(false);
                if !ok {
                    return Err(format!("{} generator {} breaks seed {seed}", self.family, i + 1));
                }
            }
        }
        for seed in &self.seeds {
            if !is_primitive(self.family, *seed).unwrap_or(false) {
                return Err(format!("{} seed {seed} is not primitive", self.family));
            }
        }
        Ok(())
    }
}

fn triple(a: i64, b: i64, c: i64) -> Triple {
    Triple::new(a, b, c).expect("positive constant")
}

fn build_sets() -> std::result::Result<(MatrixSet, MatrixSet), String> {
    let n = [N1, N2, N3, N4, N5];
    let sub = MatrixSet::new(Family::OneTwenty, n, [triple(7, 5, 3), triple(13, 7, 8)])
        .map_err(|e| e.to_string())?;
    let mut m = [M1, M2, M3, M4, M5];
    for i in 3..5 {
        let derived = deconjugate(&n[i]).map_err(|e| e.to_string())?;
        if derived != m[i] {
            return Err(format!("M{} constant disagrees with S^-1 N{} S = {derived}", i + 1, i + 1));
        }
        m[i] = derived;
    }
    for i in 0..5 {
        if conjugate(&m[i]).map_err(|e| e.to_string())? != n[i] {
            return Err(format!("S M{} S^-1 != N{}", i + 1, i + 1));
        }
    }
    let sixty = MatrixSet::new(Family::Sixty, m, [triple(7, 8, 5), triple(13, 15, 7)])
        .map_err(|e| e.to_string())?;
    for (x, y) in sixty.seeds.iter().zip(&sub.seeds) {
        if apply_matrix(&S, *x).ok() != Some(*y) {
            return Err(format!("S does not map seed {x} to {y}"));
        }
    }
    sixty.check()?;
    sub.check()?;
    Ok((sixty, sub))
}

/// The reconciled generator sets `(60°, 120°)`.
///
/// Built and self-checked on first use; a failed check is a broken build
/// and panics.
pub fn canonical_matrix_sets() -> (&'static MatrixSet, &'static MatrixSet) {
    static SETS: OnceLock<(MatrixSet, MatrixSet)> = OnceLock::new();
    let (s, u) = SETS.get_or_init(|| match build_sets() {
        Ok(sets) => sets,
        Err(msg) => panic!("matrix self-check failed: {msg}"),
    });
    (s, u)
}

pub fn matrix_set(family: Family) -> &'static MatrixSet {
    let (sixty, sub) = canonical_matrix_sets();
    match family {
        Family::Sixty => sixty,
        Family::OneTwenty => sub,
    }
}

/// One published constant compared against its reconciled value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub item: &'static str,
    pub printed: String,
    pub reconciled: String,
    /// What was checked.
    pub test: &'static str,
    pub printed_passes: bool,
    pub reconciled_passes: bool,
}

fn maps_seeds_into(family: Family, g: &GenMatrix) -> bool {
    matrix_set(family).seeds.iter().all(|s| {
        apply_matrix(g, *s)
            .and_then(|x| is_primitive(family, x))
            .unwrap_or(false)
    })
}

/// Every place where the published constants disagree with each other,
/// and which variant survives the invariant checks.
pub fn reconciliation_report() -> Vec<Discrepancy> {
    use printed::*;
    let conj_is = |m: &GenMatrix, n: &GenMatrix| conjugate(m).map(|c| c == *n).unwrap_or(false);
    let seed2 = SEED2_DISPLAY;
    let seed2_ok = Triple::new(seed2[0], seed2[1], seed2[2])
        .and_then(|t| is_member(Family::Sixty, t))
        .unwrap_or(false);
    vec![
        Discrepancy {
            item: "M4 (display)",
            printed: M4_DISPLAY.to_string(),
            reconciled: M4.to_string(),
            test: "S M4 S^-1 == N4",
            printed_passes: conj_is(&M4_DISPLAY, &N4),
            reconciled_passes: conj_is(&M4, &N4),
        },
        Discrepancy {
            item: "M5 (display)",
            printed: M5_DISPLAY.to_string(),
            reconciled: M5.to_string(),
            test: "S M5 S^-1 == N5",
            printed_passes: conj_is(&M5_DISPLAY, &N5),
            reconciled_passes: conj_is(&M5, &N5),
        },
        Discrepancy {
            item: "M4 (conjugation computation)",
            printed: M4_CONJUGATION.to_string(),
            reconciled: M4.to_string(),
            test: "S M4 S^-1 == N4",
            printed_passes: conj_is(&M4_CONJUGATION, &N4),
            reconciled_passes: conj_is(&M4, &N4),
        },
        Discrepancy {
            item: "M5 (conjugation computation)",
            printed: M5_CONJUGATION.to_string(),
            reconciled: M5.to_string(),
            test: "S M5 S^-1 == N5",
            printed_passes: conj_is(&M5_CONJUGATION, &N5),
            reconciled_passes: conj_is(&M5, &N5),
        },
        Discrepancy {
            item: "N2 (statement)",
            printed: N2_STATEMENT.to_string(),
            reconciled: N2.to_string(),
            test: "maps both 120-degree seeds to primitive 120-degree triples",
            printed_passes: maps_seeds_into(Family::OneTwenty, &N2_STATEMENT),
            reconciled_passes: maps_seeds_into(Family::OneTwenty, &N2),
        },
        Discrepancy {
            item: "second 60-degree seed (display)",
            printed: format!("({}, {}, {})", seed2[0], seed2[1], seed2[2]),
            reconciled: matrix_set(Family::Sixty).seeds[1].to_string(),
            test: "a^2 = b^2 + c^2 - bc",
            printed_passes: seed2_ok,
            reconciled_passes: is_member(Family::Sixty, matrix_set(Family::Sixty).seeds[1])
                .unwrap_or(false),
        },
    ]
}

/// The node a word designates, before any twin/swap.
fn apply_letters(set: &MatrixSet, seed: SeedId, letters: &[u8]) -> Result<Triple> {
    let mut v = set.seed(seed);
    for &letter in letters.iter().rev() {
        let g = set
            .generator(letter)
            .ok_or_else(|| Error::NotInFamily(format!("letter {letter} is not in 1..=5")))?;
        v = apply_matrix(g, v)?;
    }
    Ok(v)
}

/// Evaluates `G_{p1}·(G_{p2}·(⋯·v))`, then the twin/swap if flagged.
pub fn apply_word(w: &DerivationWord, family: Family) -> Result<Triple> {
    let set = matrix_set(family);
    let node = apply_letters(set, w.seed, &w.letters)?;
    if w.twin {
        set.partner(node)
    } else {
        Ok(node)
    }
}

/// An enumerated triple. `word` is `None` only for the equilateral
/// prelude `(1, 1, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    pub triple: Triple,
    pub word: Option<DerivationWord>,
}

/// Breadth-first walk of one family's tree, pruned at `a > max_a`.
///
/// Order: seeds S1 then S2, children by letter 1..5, level by level.
/// With twins enabled each partner follows its base node immediately.
pub struct TreeEnumerator {
    set: &'static MatrixSet,
    max_a: i64,
    twins: bool,
    prelude: Option<Triple>,
    queue: VecDeque<(Triple, DerivationWord)>,
    pending: Option<TreeNode>,
    failed: bool,
}

impl TreeEnumerator {
    pub fn new(family: Family, max_a: i64) -> Result<Self> {
        if max_a < 1 {
            return Err(Error::InvalidBound(max_a));
        }
        let set = matrix_set(family);
        let queue = [SeedId::S1, SeedId::S2]
            .into_iter()
            .map(|id| (set.seed(id), DerivationWord::new(id, Vec::new(), false)))
            .filter(|(t, _)| t.a() <= max_a)
            .collect();
        Ok(Self {
            set,
            max_a,
            twins: false,
            prelude: None,
            queue,
            pending: None,
            failed: false,
        })
    }

    pub fn with_twins(mut self, twins: bool) -> Self {
        self.twins = twins;
        self
    }

    /// Emit `(1, 1, 1)` first. Only meaningful for the 60° family.
    pub fn with_equilateral(mut self, include: bool) -> Self {
        self.prelude = (include && self.set.family == Family::Sixty)
            .then(|| triple(1, 1, 1));
        self
    }

    fn expand(&mut self, parent: Triple, word: &DerivationWord) -> Result<()> {
        for (i, g) in self.set.generators.iter().enumerate() {
            let child = apply_matrix(g, parent)?;
            assert!(child.a() > parent.a(), "generator {} does not grow a at {parent}", i + 1);
            if child.a() <= self.max_a {
                let mut letters = Vec::with_capacity(word.letters.len() + 1);
                letters.push(i as u8 + 1);
                letters.extend_from_slice(&word.letters);
                self.queue.push_back((child, DerivationWord::new(word.seed, letters, false)));
            }
        }
        Ok(())
    }
}

impl Iterator for TreeEnumerator {
    type Item = Result<TreeNode>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        if let Some(t) = self.prelude.take() {
            return Some(Ok(TreeNode { triple: t, word: None }));
        }
        if let Some(node) = self.pending.take() {
            return Some(Ok(node));
        }
        let (t, word) = self.queue.pop_front()?;
        let step = (|| {
            self.expand(t, &word)?;
            if self.twins {
                let partner = self.set.partner(t)?;
                let mut w = word.clone();
                w.twin = true;
                self.pending = Some(TreeNode { triple: partner, word: Some(w) });
            }
            Ok(())
        })();
        match step {
            Ok(()) => Some(Ok(TreeNode { triple: t, word: Some(word) })),
            Err(e) => {
                self.failed = true;
                Some(Err(e))
            }
        }
    }
}

/// Collects `TreeEnumerator::new(family, max_a).with_twins(include_twins)`.
pub fn enumerate(family: Family, max_a: i64, include_twins: bool) -> Result<Vec<TreeNode>> {
    TreeEnumerator::new(family, max_a)?.with_twins(include_twins).collect()
}

fn descend(set: &MatrixSet, t: Triple) -> Result<Option<(SeedId, Vec<u8>)>> {
    for id in [SeedId::S1, SeedId::S2] {
        if set.seed(id) == t {
            return Ok(Some((id, Vec::new())));
        }
    }
    for (i, inv) in set.inverses.iter().enumerate() {
        let raw = inv.mul_triple(t)?;
        let Ok(parent) = Triple::new(raw[0], raw[1], raw[2]) else {
            continue;
        };
        if parent.a() >= t.a() || !is_member(set.family, parent)? {
            continue;
        }
        if let Some((seed, mut letters)) = descend(set, parent)? {
            letters.insert(0, i as u8 + 1);
            return Ok(Some((seed, letters)));
        }
    }
    Ok(None)
}

/// The word for `t` within `family`'s tree, or `None` if `t` is a member
/// that the tree does not produce (non-primitive, `(1, 1, 1)`, or a 60°
/// triple with `b ≤ c`).
pub fn derive_word_in(family: Family, t: Triple) -> Result<Option<DerivationWord>> {
    if !is_member(family, t)? {
        return Err(Error::NotInFamily(format!("{t} is not a {family}-degree triple")));
    }
    if !is_primitive(family, t)? {
        return Ok(None);
    }
    let set = matrix_set(family);
    if family == Family::Sixty && t.b() <= t.c() {
        return Ok(None);
    }
    if let Some((seed, letters)) = descend(set, t)? {
        return Ok(Some(DerivationWord::new(seed, letters, false)));
    }
    if let Some(base) = set.unpartner(t)? {
        if let Some((seed, letters)) = descend(set, base)? {
            return Ok(Some(DerivationWord::new(seed, letters, true)));
        }
    }
    Ok(None)
}

/// [`derive_word_in`] with the family read off the membership forms.
pub fn derive_word(t: Triple) -> Result<Option<DerivationWord>> {
    match member_family(t)? {
        Some(family) => derive_word_in(family, t),
        None => Err(Error::NotInFamily(format!("{t} satisfies neither form"))),
    }
}
