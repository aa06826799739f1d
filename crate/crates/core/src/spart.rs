//! Superpartition combinatorics: validation, sectors, the core partitions
//! Λ^[k], dominance order, diagrams, box statistics and fermionic cores.
//!
//! A superpartition is a quadruple of constituent partitions
//! (Λ̄̂; Λ̃; Λ̂; Λˢ). The constituent split is authoritative; the flattened
//! "marked list" used for diagrams is derived from it by sorting parts in
//! decreasing order with ties broken by block position. Zeros are stored
//! explicitly in the first three blocks and contribute to the length; the
//! symmetric block Λˢ has strictly positive parts.
//!
//! Under a σ-variant (see [`Variant`]) the three fermionic blocks carry
//! permuted decorations; the block that carries the φθ doublet admits
//! repeated parts while the φ-only and θ-only blocks must have distinct
//! parts.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

use crate::exact::Rat;

/// Errors from superpartition construction and queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpartError {
    #[error("block {0} is not weakly decreasing")]
    NotWeaklyDecreasing(usize),
    #[error("repeated part in block {0} (distinct parts required)")]
    RepeatedPart(usize),
    #[error("zero part in the symmetric block")]
    ZeroInSymmetricBlock,
    #[error("superpartitions belong to different sectors")]
    SectorMismatch,
    #[error("length {len} exceeds the number of variables {n}")]
    TooLong { len: usize, n: usize },
    #[error("cell ({0},{1}) outside the diagram")]
    CellOutsideDiagram(usize, usize),
    #[error("fermionic core not contained in Λ^[3] at row {0}")]
    CoreNotContained(usize),
    #[error("invalid label: {0}")]
    BadLabel(String),
}

/// Decoration carried by one of the first three blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decor {
    /// φ_iθ_i doublet (symmetrized block, repeats allowed)
    Doublet,
    /// lone φ_i (antisymmetrized block, distinct parts)
    Phi,
    /// lone θ_i (antisymmetrized block, distinct parts)
    Theta,
}

/// Assignment of decorations to the three fermionic block positions.
///
/// `SAA` is the construction used throughout; `ASA` and `AAS` are the
/// alternative prescribed symmetries. The two remaining permutations are
/// φ↔θ mirror images and are accepted as well.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Variant {
    pub decor: [Decor; 3],
}

impl Variant {
    pub const SAA: Variant = Variant {
        decor: [Decor::Doublet, Decor::Phi, Decor::Theta],
    };
    pub const ASA: Variant = Variant {
        decor: [Decor::Phi, Decor::Doublet, Decor::Theta],
    };
    pub const AAS: Variant = Variant {
        decor: [Decor::Phi, Decor::Theta, Decor::Doublet],
    };

    /// Position of the doublet-decorated block.
    pub fn doublet_block(&self) -> usize {
        self.decor
            .iter()
            .position(|d| *d == Decor::Doublet)
            .unwrap()
    }

    pub fn name(&self) -> &'static str {
        match self.decor {
            [Decor::Doublet, Decor::Phi, Decor::Theta] => "SAA",
            [Decor::Phi, Decor::Doublet, Decor::Theta] => "ASA",
            [Decor::Phi, Decor::Theta, Decor::Doublet] => "AAS",
            [Decor::Doublet, Decor::Theta, Decor::Phi] => "SAA'",
            [Decor::Theta, Decor::Doublet, Decor::Phi] => "ASA'",
            [Decor::Theta, Decor::Phi, Decor::Doublet] => "AAS'",
            _ => unreachable!(),
        }
    }
}

impl FromStr for Variant {
    type Err = SpartError;
    fn from_str(s: &str) -> Result<Self, SpartError> {
        match s.to_ascii_uppercase().as_str() {
            "SAA" => Ok(Variant::SAA),
            "ASA" => Ok(Variant::ASA),
            "AAS" => Ok(Variant::AAS),
            other => Err(SpartError::BadLabel(format!("unknown variant {other}"))),
        }
    }
}

/// An ordinary partition: weakly decreasing nonnegative parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, SpartError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SpartError::NotWeaklyDecreasing(0));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// The i-th part (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of rows with part ≥ j (the conjugate part λ'_j), j ≥ 1.
    pub fn conjugate_part(&self, j: usize) -> usize {
        self.0.iter().filter(|&&p| p as usize >= j).count()
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && row <= self.0.len() && col <= self.0[row - 1] as usize
    }

    /// Cells (row, col) of the diagram, 1-based, row-major.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, &p) in self.0.iter().enumerate() {
            for j in 1..=p as usize {
                out.push((i + 1, j));
            }
        }
        out
    }

    /// Multiplicity of the part `v`.
    pub fn multiplicity(&self, v: u32) -> usize {
        self.0.iter().filter(|&&p| p == v).count()
    }
}

/// The named cell statistic for [`arm_leg`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellStat {
    Arm,
    Leg,
    Coarm,
    Coleg,
}

/// Arm a(s)=λ_i−j, leg ℓ(s)=λ'_j−i, co-arm a'(s)=j−1, co-leg ℓ'(s)=i−1
/// for a cell s=(i,j) inside the diagram of λ.
pub fn arm_leg(lambda: &Partition, s: (usize, usize), stat: CellStat) -> Result<i64, SpartError> {
    let (i, j) = s;
    if !lambda.contains_cell(i, j) {
        return Err(SpartError::CellOutsideDiagram(i, j));
    }
    Ok(match stat {
        CellStat::Arm => lambda.part(i - 1) as i64 - j as i64,
        CellStat::Leg => lambda.conjugate_part(j) as i64 - i as i64,
        CellStat::Coarm => j as i64 - 1,
        CellStat::Coleg => i as i64 - 1,
    })
}

/// Dominance comparison of two partitions of equal weight.
/// `None` means incomparable (or unequal weight).
pub fn dominance_partitions(a: &[u32], b: &[u32]) -> Option<Ordering> {
    let wa: u64 = a.iter().map(|&x| x as u64).sum();
    let wb: u64 = b.iter().map(|&x| x as u64).sum();
    if wa != wb {
        return None;
    }
    let len = a.len().max(b.len());
    let mut sa = 0i64;
    let mut sb = 0i64;
    let mut seen = Ordering::Equal;
    for k in 0..len {
        sa += *a.get(k).unwrap_or(&0) as i64;
        sb += *b.get(k).unwrap_or(&0) as i64;
        match (seen, sa.cmp(&sb)) {
            (_, Ordering::Equal) => {}
            (Ordering::Equal, c) => seen = c,
            (Ordering::Greater, Ordering::Less) | (Ordering::Less, Ordering::Greater) => {
                return None;
            }
            _ => {}
        }
    }
    Some(seen)
}

/// The fermionic sector (n | m₁, m₂, m₃): bosonic degree plus the three
/// block lengths in position order. For the SAA variant the positions are
/// (m̄̂, m̃, m̂).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Sector {
    pub n: u32,
    pub m: [usize; 3],
}

impl Sector {
    pub fn new(n: u32, m: [usize; 3]) -> Self {
        Sector { n, m }
    }

    /// Partial sum M_k = m₁ + … + m_k (M₀ = 0).
    pub fn partial(&self, k: usize) -> usize {
        self.m[..k].iter().sum()
    }

    pub fn m1(&self) -> usize {
        self.partial(1)
    }

    pub fn m2(&self) -> usize {
        self.partial(2)
    }

    pub fn m3(&self) -> usize {
        self.partial(3)
    }
}

impl fmt::Display for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{},{},{}", self.n, self.m[0], self.m[1], self.m[2])
    }
}

impl FromStr for Sector {
    type Err = SpartError;
    fn from_str(s: &str) -> Result<Self, SpartError> {
        let bad = || SpartError::BadLabel(format!("sector '{s}', expected n|a,b,c"));
        let (n, ms) = s.split_once('|').ok_or_else(bad)?;
        let n = n.trim().parse().map_err(|_| bad())?;
        let parts: Vec<usize> = ms
            .split(',')
            .map(|x| x.trim().parse().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        if parts.len() != 3 {
            return Err(bad());
        }
        Ok(Sector::new(n, [parts[0], parts[1], parts[2]]))
    }
}

/// A superpartition: four constituent partitions with per-block validation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SuperPartition {
    blocks: [Vec<u32>; 4],
}

/// One row of the flattened marked list: a part together with its block of
/// origin (0..=2 fermionic, 3 symmetric).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MarkedRow {
    pub part: u32,
    pub block: usize,
}

impl SuperPartition {
    /// Validates raw integer lists as a superpartition for the SAA variant.
    pub fn validate(
        lbd: Vec<u32>,
        lt: Vec<u32>,
        lh: Vec<u32>,
        ls: Vec<u32>,
    ) -> Result<Self, SpartError> {
        Self::validate_for([lbd, lt, lh, ls], Variant::SAA)
    }

    /// Validates the four blocks for an arbitrary variant.
    pub fn validate_for(blocks: [Vec<u32>; 4], variant: Variant) -> Result<Self, SpartError> {
        for (b, block) in blocks.iter().enumerate().take(3) {
            if block.windows(2).any(|w| w[0] < w[1]) {
                return Err(SpartError::NotWeaklyDecreasing(b));
            }
            if variant.decor[b] != Decor::Doublet && block.windows(2).any(|w| w[0] == w[1]) {
                return Err(SpartError::RepeatedPart(b));
            }
        }
        if blocks[3].windows(2).any(|w| w[0] < w[1]) {
            return Err(SpartError::NotWeaklyDecreasing(3));
        }
        if blocks[3].contains(&0) {
            return Err(SpartError::ZeroInSymmetricBlock);
        }
        Ok(SuperPartition { blocks })
    }

    pub fn empty() -> Self {
        SuperPartition {
            blocks: [vec![], vec![], vec![], vec![]],
        }
    }

    pub fn block(&self, b: usize) -> &[u32] {
        &self.blocks[b]
    }

    /// Λ̄̂ (meaningful for the SAA variant).
    pub fn lbd(&self) -> &[u32] {
        &self.blocks[0]
    }

    /// Λ̃
    pub fn lt(&self) -> &[u32] {
        &self.blocks[1]
    }

    /// Λ̂
    pub fn lh(&self) -> &[u32] {
        &self.blocks[2]
    }

    /// Λˢ
    pub fn ls(&self) -> &[u32] {
        &self.blocks[3]
    }

    pub fn length(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Bosonic degree |Λ|.
    pub fn weight(&self) -> u32 {
        self.blocks.iter().flatten().sum()
    }

    pub fn sector(&self) -> Sector {
        Sector::new(
            self.weight(),
            [
                self.blocks[0].len(),
                self.blocks[1].len(),
                self.blocks[2].len(),
            ],
        )
    }

    /// The composition form (blocks concatenated, symmetric block padded
    /// with zeros to total length `n`).
    pub fn composition(&self, n: usize) -> Result<Vec<u32>, SpartError> {
        let len = self.length();
        if len > n {
            return Err(SpartError::TooLong { len, n });
        }
        let mut out = Vec::with_capacity(n);
        for b in &self.blocks {
            out.extend_from_slice(b);
        }
        out.resize(n, 0);
        Ok(out)
    }

    /// Core partition Λ^[k]: add 1 to the first M_k entries of the
    /// composition form, sort decreasingly and drop zeros (k = 0..=3).
    pub fn core_partition(&self, k: usize) -> Vec<u32> {
        assert!(k <= 3);
        let mk = self.sector().partial(k);
        let mut parts: Vec<u32> = Vec::with_capacity(self.length());
        for b in &self.blocks {
            parts.extend_from_slice(b);
        }
        for p in parts.iter_mut().take(mk) {
            *p += 1;
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        parts
    }

    pub fn core_quadruple(&self) -> [Vec<u32>; 4] {
        [
            self.core_partition(0),
            self.core_partition(1),
            self.core_partition(2),
            self.core_partition(3),
        ]
    }

    /// Rows of the diagram: parts sorted decreasingly, ties broken by
    /// block position.
    pub fn marked_rows(&self) -> Vec<MarkedRow> {
        let mut rows: Vec<MarkedRow> = Vec::with_capacity(self.length());
        for (b, block) in self.blocks.iter().enumerate() {
            for &part in block {
                rows.push(MarkedRow { part, block: b });
            }
        }
        rows.sort_by(|a, b| b.part.cmp(&a.part).then(a.block.cmp(&b.block)));
        rows
    }

    /// Permutes the first three constituents by σ (Appendix-style
    /// relabeling). The result is validated for the target variant.
    pub fn sigma_permute(
        &self,
        sigma: [usize; 3],
        target: Variant,
    ) -> Result<SuperPartition, SpartError> {
        let blocks = [
            self.blocks[sigma[0]].clone(),
            self.blocks[sigma[1]].clone(),
            self.blocks[sigma[2]].clone(),
            self.blocks[3].clone(),
        ];
        SuperPartition::validate_for(blocks, target)
    }
}

/// Four-way dominance verdict on superpartitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dominance {
    Greater,
    Less,
    Equal,
    Incomparable,
}

/// Λ ≥ Ω iff Λ^[k] ≥ Ω^[k] in partition dominance for every k = 0..=3.
pub fn dominance_compare(a: &SuperPartition, b: &SuperPartition) -> Result<Dominance, SpartError> {
    if a.sector() != b.sector() {
        return Err(SpartError::SectorMismatch);
    }
    let mut seen = Ordering::Equal;
    for k in 0..=3 {
        match dominance_partitions(&a.core_partition(k), &b.core_partition(k)) {
            None => return Ok(Dominance::Incomparable),
            Some(Ordering::Equal) => {}
            Some(c) => {
                if seen == Ordering::Equal {
                    seen = c;
                } else if seen != c {
                    return Ok(Dominance::Incomparable);
                }
            }
        }
    }
    Ok(match seen {
        Ordering::Equal => Dominance::Equal,
        Ordering::Greater => Dominance::Greater,
        Ordering::Less => Dominance::Less,
    })
}

/// Lexicographic comparison of the core quadruples; a linear extension of
/// dominance used as the deterministic sector order (greater first).
pub fn sector_order_key_cmp(a: &SuperPartition, b: &SuperPartition) -> Ordering {
    for k in 0..=3 {
        let ca = a.core_partition(k);
        let cb = b.core_partition(k);
        let len = ca.len().max(cb.len());
        for i in 0..len {
            let x = ca.get(i).unwrap_or(&0);
            let y = cb.get(i).unwrap_or(&0);
            match x.cmp(y) {
                Ordering::Equal => {}
                c => return c.reverse(),
            }
        }
    }
    // cores determine the superpartition within a sector; fall back to the
    // raw blocks only for cross-sector stability
    a.blocks.cmp(&b.blocks)
}

fn partitions_bounded(
    n: u32,
    max_part: u32,
    max_len: usize,
    out: &mut Vec<Vec<u32>>,
    cur: &mut Vec<u32>,
) {
    if n == 0 {
        out.push(cur.clone());
        return;
    }
    if max_len == 0 {
        return;
    }
    let hi = max_part.min(n);
    for p in (1..=hi).rev() {
        cur.push(p);
        partitions_bounded(n - p, p, max_len - 1, out, cur);
        cur.pop();
    }
}

/// Partitions of n into at most `max_len` positive parts.
pub fn partitions_with_max_len(n: u32, max_len: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    partitions_bounded(n, n, max_len, &mut out, &mut cur);
    out
}

/// Weakly decreasing sequences of exact length `len` (zeros allowed)
/// summing to n.
fn weakly_decreasing_exact(n: u32, len: usize) -> Vec<Vec<u32>> {
    partitions_with_max_len(n, len)
        .into_iter()
        .map(|mut p| {
            p.resize(len, 0);
            p
        })
        .collect()
}

/// Strictly decreasing sequences of exact length `len` (one final zero
/// allowed) summing to n. Obtained by adding the staircase
/// (len−1, …, 1, 0) to a weakly decreasing sequence.
fn strictly_decreasing_exact(n: u32, len: usize) -> Vec<Vec<u32>> {
    if len == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let stair: u32 = (len as u32) * (len as u32 - 1) / 2;
    if n < stair {
        return vec![];
    }
    weakly_decreasing_exact(n - stair, len)
        .into_iter()
        .map(|p| {
            p.iter()
                .enumerate()
                .map(|(i, &x)| x + (len - 1 - i) as u32)
                .collect()
        })
        .collect()
}

/// All superpartitions of the sector with length ≤ N, in the deterministic
/// sector order (dominance-greater first).
pub fn list_sector(
    sector: Sector,
    n_vars: usize,
    variant: Variant,
) -> Result<Vec<SuperPartition>, SpartError> {
    let m3 = sector.m3();
    if n_vars < m3 {
        return Err(SpartError::TooLong {
            len: m3,
            n: n_vars,
        });
    }
    let max_ls = n_vars - m3;
    let mut out = Vec::new();
    let n = sector.n;
    for n0 in 0..=n {
        for n1 in 0..=(n - n0) {
            for n2 in 0..=(n - n0 - n1) {
                let n3 = n - n0 - n1 - n2;
                let gen = |idx: usize, nb: u32| -> Vec<Vec<u32>> {
                    if variant.decor[idx] == Decor::Doublet {
                        weakly_decreasing_exact(nb, sector.m[idx])
                    } else {
                        strictly_decreasing_exact(nb, sector.m[idx])
                    }
                };
                for b0 in gen(0, n0) {
                    for b1 in gen(1, n1) {
                        for b2 in gen(2, n2) {
                            for b3 in partitions_with_max_len(n3, max_ls) {
                                if let Ok(sp) = SuperPartition::validate_for(
                                    [b0.clone(), b1.clone(), b2.clone(), b3],
                                    variant,
                                ) {
                                    out.push(sp);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out.sort_by(sector_order_key_cmp);
    out.dedup();
    Ok(out)
}

/// The box partition of the diagram of Λ^[0]: fermionic boxes plus the
/// four bosonic classes B₀..B₃ (rows ending with a box, or with the
/// circle of block 1, 2, 3 respectively).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxClasses {
    pub fermionic: BTreeSet<(usize, usize)>,
    pub b: [BTreeSet<(usize, usize)>; 4],
}

/// Classifies the boxes of the diagram of Λ^[0].
///
/// A box is fermionic when its row ends with a lone-fermion circle (φ or
/// θ) and its column contains a circle of the same kind. Bosonic boxes
/// fall into B_k according to the block of their row (B₀ for unmarked
/// rows).
pub fn box_classes(sp: &SuperPartition, variant: Variant) -> BoxClasses {
    let rows = sp.marked_rows();
    // circles in column j come from rows with part = j−1
    let circle_in_column = |j: usize, d: Decor| -> bool {
        rows.iter()
            .any(|r| r.block < 3 && r.part as usize + 1 == j && variant.decor[r.block] == d)
    };
    let mut classes = BoxClasses {
        fermionic: BTreeSet::new(),
        b: [
            BTreeSet::new(),
            BTreeSet::new(),
            BTreeSet::new(),
            BTreeSet::new(),
        ],
    };
    for (i, row) in rows.iter().enumerate() {
        let fermionic_row = row.block < 3 && variant.decor[row.block] != Decor::Doublet;
        for j in 1..=row.part as usize {
            let cell = (i + 1, j);
            if fermionic_row && circle_in_column(j, variant.decor[row.block]) {
                classes.fermionic.insert(cell);
            } else {
                let k = if row.block == 3 { 0 } else { row.block + 1 };
                classes.b[k].insert(cell);
            }
        }
    }
    classes
}

/// The fermionic core δ_{m̃,m̂} = (m̃,…,1) ∪ (m̂,…,1) (multiset union).
pub fn fermionic_core(m_t: usize, m_h: usize) -> Partition {
    let mut parts: Vec<u32> = (1..=m_t as u32).chain(1..=m_h as u32).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).unwrap()
}

/// The cells of ΔΛ = Λ^[3] / δ_{m̃,m̂}. Errors when the core is not
/// contained in Λ^[3], naming the offending row.
pub fn skew_delta(
    sp: &SuperPartition,
    variant: Variant,
) -> Result<BTreeSet<(usize, usize)>, SpartError> {
    let mut lens = Vec::new();
    for b in 0..3 {
        if variant.decor[b] != Decor::Doublet {
            lens.push(sp.block(b).len());
        }
    }
    let delta = fermionic_core(lens[0], lens[1]);
    let lam3 = sp.core_partition(3);
    for (i, &d) in delta.parts().iter().enumerate() {
        if lam3.get(i).copied().unwrap_or(0) < d {
            return Err(SpartError::CoreNotContained(i + 1));
        }
    }
    let mut out = BTreeSet::new();
    for (i, &p) in lam3.iter().enumerate() {
        let skip = delta.part(i) as usize;
        for j in (skip + 1)..=(p as usize) {
            out.insert((i + 1, j));
        }
    }
    Ok(out)
}

/// Text diagram with circle glyphs (⊘ doublet, ⊖ φ, ◯ θ), one marked row
/// per line.
pub fn render_diagram(sp: &SuperPartition, variant: Variant) -> String {
    let mut out = String::new();
    for row in sp.marked_rows() {
        for _ in 0..row.part {
            out.push('□');
        }
        if row.block < 3 {
            out.push(match variant.decor[row.block] {
                Decor::Doublet => '⊘',
                Decor::Phi => '⊖',
                Decor::Theta => '◯',
            });
        }
        out.push('\n');
    }
    out
}

/// f_λ = n_λ(0)!·n_λ(1)!⋯ (the part 0 counted only when `with_zeros`).
pub fn f_multiplicities(parts: &[u32], with_zeros: bool) -> Rat {
    let mut acc = Rat::one();
    let mut seen = BTreeSet::new();
    for &p in parts {
        if p == 0 && !with_zeros {
            continue;
        }
        if seen.insert(p) {
            let mult = parts.iter().filter(|&&q| q == p).count() as u64;
            acc = &acc * &Rat::factorial(mult);
        }
    }
    acc
}

/// z_λ = ∏ i^{n_λ(i)} n_λ(i)! over the positive parts.
pub fn z_lambda(parts: &[u32]) -> Rat {
    let mut acc = Rat::one();
    let mut seen = BTreeSet::new();
    for &p in parts {
        if p == 0 {
            continue;
        }
        if seen.insert(p) {
            let mult = parts.iter().filter(|&&q| q == p).count() as u64;
            let mut pw = Rat::one();
            for _ in 0..mult {
                pw = &pw * &Rat::from(p as i64);
            }
            acc = &acc * &(&pw * &Rat::factorial(mult));
        }
    }
    acc
}

/// ξ_λ = ∏ n_λ(i)! with zeros counted.
pub fn xi_lambda(parts: &[u32]) -> Rat {
    f_multiplicities(parts, true)
}

impl fmt::Display for SuperPartition {
    /// The standard parenthesized form, e.g. `(3,2,2,0,0;1,0;3,1;2,1,1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (b, block) in self.blocks.iter().enumerate() {
            if b > 0 {
                write!(f, ";")?;
            }
            for (i, p) in block.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", p)?;
            }
        }
        write!(f, ")")
    }
}

impl FromStr for SuperPartition {
    type Err = SpartError;

    /// Parses the parenthesized semicolon form; validates as SAA.
    fn from_str(s: &str) -> Result<Self, SpartError> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| SpartError::BadLabel(format!("missing parentheses in '{s}'")))?;
        let blocks: Vec<&str> = inner.split(';').collect();
        if blocks.len() != 4 {
            return Err(SpartError::BadLabel(format!(
                "expected four ';'-separated blocks in '{s}'"
            )));
        }
        let mut parsed: Vec<Vec<u32>> = Vec::with_capacity(4);
        for b in blocks {
            let b = b.trim();
            if b.is_empty() {
                parsed.push(vec![]);
                continue;
            }
            let parts: Result<Vec<u32>, _> = b
                .split(',')
                .map(|x| {
                    x.trim()
                        .parse::<u32>()
                        .map_err(|_| SpartError::BadLabel(format!("bad part '{x}' in '{s}'")))
                })
                .collect();
            parsed.push(parts?);
        }
        let mut it = parsed.into_iter();
        SuperPartition::validate(
            it.next().unwrap(),
            it.next().unwrap(),
            it.next().unwrap(),
            it.next().unwrap(),
        )
    }
}
