//! Stage data for the two filtered commutative algebras attached to the
//! chain-with-symmetry family: the span of `{1, S, e_1, ..., e_n}` and the
//! span of the matched point-mass crossed generators. Each stage is a finite
//! list of minimal projections verified symbolically (orthogonal, idempotent,
//! self-adjoint, summing to the stage unit); consecutive stages give an
//! inclusion matrix, and the stage ledger tracks which generators never split
//! again.
//!
//! All arithmetic happens in the rational span of the family relations:
//! `S^2 = 1`, `S e_n = e_n S = e_n`, `e_n e_m = e_min(n,m)`.

use std::collections::BTreeMap;

use num::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{rat, rat_int, Rat};

/// Basis symbol of the chain-with-symmetry group algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ChainSym {
    One,
    S,
    E(u32),
}

impl ChainSym {
    fn mul(self, other: ChainSym) -> ChainSym {
        use ChainSym::*;
        match (self, other) {
            (One, x) | (x, One) => x,
            (S, S) => One,
            (S, E(n)) | (E(n), S) => E(n),
            (E(n), E(m)) => E(n.min(m)),
        }
    }

    fn is_idempotent(self) -> bool {
        !matches!(self, ChainSym::S)
    }
}

/// A rational combination of basis symbols; the A-variant stage algebra.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ChainAlg {
    terms: BTreeMap<ChainSym, Rat>,
}

impl ChainAlg {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(sym: ChainSym) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(sym, rat_int(1));
        Self { terms }
    }

    pub fn scaled(sym: ChainSym, c: Rat) -> Self {
        let mut out = Self::zero();
        out.add_term(sym, c);
        out
    }

    fn add_term(&mut self, sym: ChainSym, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(sym).or_insert_with(|| rat_int(0));
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&sym);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(*s, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(*s, -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.mul(*b), ca.clone() * cb.clone());
            }
        }
        out
    }

    /// Every basis symbol is self-adjoint and coefficients are rational, so
    /// the involution is the identity.
    pub fn star(&self) -> Self {
        self.clone()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_projection(&self) -> bool {
        self.mul(self) == *self && self.star() == *self
    }
}

/// Basis symbol of the crossed stage algebra: a point mass paired with a
/// group element. The first component must be an idempotent symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CrossedSym {
    pub mass: ChainSym,
    pub g: ChainSym,
}

impl CrossedSym {
    /// `(eps_e x g)(eps_f x h) = [f <= g* g][g f g* = e] (eps_e x g h)`.
    fn mul(self, other: CrossedSym) -> Option<CrossedSym> {
        let gsg = self.g.mul(self.g); // g* = g on this basis
        let f_below = other.mass.mul(gsg) == other.mass;
        let conj = self.g.mul(other.mass).mul(self.g);
        if f_below && conj == self.mass {
            Some(CrossedSym {
                mass: self.mass,
                g: self.g.mul(other.g),
            })
        } else {
            None
        }
    }

    fn star(self) -> Option<CrossedSym> {
        let ggs = self.g.mul(self.g);
        if self.mass.mul(ggs) != self.mass {
            return None;
        }
        Some(CrossedSym {
            mass: self.g.mul(self.mass).mul(self.g),
            g: self.g,
        })
    }
}

/// A rational combination of crossed symbols; the B-variant stage algebra.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CrossedAlg {
    terms: BTreeMap<CrossedSym, Rat>,
}

impl CrossedAlg {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn scaled(mass: ChainSym, g: ChainSym, c: Rat) -> Self {
        assert!(mass.is_idempotent());
        let mut out = Self::zero();
        out.add_term(CrossedSym { mass, g }, c);
        out
    }

    fn add_term(&mut self, sym: CrossedSym, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(sym).or_insert_with(|| rat_int(0));
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&sym);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(*s, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(*s, -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some(p) = a.mul(*b) {
                    out.add_term(p, ca.clone() * cb.clone());
                }
            }
        }
        out
    }

    pub fn star(&self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            if let Some(s) = a.star() {
                out.add_term(s, ca.clone());
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_projection(&self) -> bool {
        self.mul(self) == *self && self.star() == *self
    }
}

/// Which filtered algebra a stage belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// Stages generated by the family elements themselves.
    A,
    /// Stages generated by the matched point-mass crossed generators.
    B,
}

impl Variant {
    pub fn parse(s: &str) -> Result<Variant> {
        match s {
            "A" | "a" => Ok(Variant::A),
            "B" | "b" => Ok(Variant::B),
            other => Err(Error::InvalidInput(format!(
                "variant must be A or B, got `{other}`"
            ))),
        }
    }
}

enum StageAlg {
    A(Vec<ChainAlg>),
    B(Vec<CrossedAlg>),
}

/// One stage: its level, the names of its minimal projections, and the
/// verification that they are orthogonal projections summing to the unit.
pub struct BratteliStage {
    pub level: u32,
    pub names: Vec<String>,
    pub rank: usize,
    pub verified: bool,
    alg: StageAlg,
}

/// Minimal projections of the stage, in the canonical listing order.
pub fn stage(variant: Variant, level: u32) -> BratteliStage {
    let n = level;
    match variant {
        Variant::A => {
            let half = rat(1, 2);
            let minus = ChainAlg::scaled(ChainSym::One, half.clone())
                .sub(&ChainAlg::scaled(ChainSym::S, half.clone()));
            let mut names = vec!["(1-S)/2".to_string()];
            let mut projections = vec![minus];
            for k in 1..=n {
                if k == 1 {
                    names.push("e1".into());
                    projections.push(ChainAlg::basis(ChainSym::E(1)));
                } else {
                    names.push(format!("e{k}-e{}", k - 1));
                    projections.push(
                        ChainAlg::basis(ChainSym::E(k)).sub(&ChainAlg::basis(ChainSym::E(k - 1))),
                    );
                }
            }
            let plus = ChainAlg::scaled(ChainSym::One, half.clone())
                .add(&ChainAlg::scaled(ChainSym::S, half));
            if n == 0 {
                names.push("(1+S)/2".into());
                projections.push(plus);
            } else {
                names.push(format!("(1+S)/2-e{n}"));
                projections.push(plus.sub(&ChainAlg::basis(ChainSym::E(n))));
            }
            let unit = ChainAlg::basis(ChainSym::One);
            let verified = verify_stage_a(&projections, &unit);
            BratteliStage {
                level,
                rank: projections.len(),
                names,
                verified,
                alg: StageAlg::A(projections),
            }
        }
        Variant::B => {
            let half = rat(1, 2);
            let minus = CrossedAlg::scaled(ChainSym::One, ChainSym::One, half.clone()).sub(
                &CrossedAlg::scaled(ChainSym::One, ChainSym::S, half.clone()),
            );
            let plus = CrossedAlg::scaled(ChainSym::One, ChainSym::One, half.clone()).add(
                &CrossedAlg::scaled(ChainSym::One, ChainSym::S, half),
            );
            let mut names = vec!["eps[1]x(1-S)/2".to_string(), "eps[1]x(1+S)/2".to_string()];
            let mut projections = vec![minus, plus];
            for k in 1..=n {
                names.push(format!("eps[e{k}]xe{k}"));
                projections.push(CrossedAlg::scaled(
                    ChainSym::E(k),
                    ChainSym::E(k),
                    rat_int(1),
                ));
            }
            let mut unit = CrossedAlg::scaled(ChainSym::One, ChainSym::One, rat_int(1));
            for k in 1..=n {
                unit = unit.add(&CrossedAlg::scaled(ChainSym::E(k), ChainSym::E(k), rat_int(1)));
            }
            let verified = verify_stage_b(&projections, &unit);
            BratteliStage {
                level,
                rank: projections.len(),
                names,
                verified,
                alg: StageAlg::B(projections),
            }
        }
    }
}

fn verify_stage_a(projections: &[ChainAlg], unit: &ChainAlg) -> bool {
    let mut sum = ChainAlg::zero();
    for (i, p) in projections.iter().enumerate() {
        if !p.is_projection() {
            return false;
        }
        sum = sum.add(p);
        for q in &projections[i + 1..] {
            if !p.mul(q).is_zero() {
                return false;
            }
        }
    }
    sum == *unit
}

fn verify_stage_b(projections: &[CrossedAlg], unit: &CrossedAlg) -> bool {
    let mut sum = CrossedAlg::zero();
    for (i, p) in projections.iter().enumerate() {
        if !p.is_projection() {
            return false;
        }
        sum = sum.add(p);
        for q in &projections[i + 1..] {
            if !p.mul(q).is_zero() {
                return false;
            }
        }
    }
    sum == *unit
}

/// The multiplicity matrix of one stage inside the next: rows are stage-`n`
/// minimal projections, columns stage-`n+1` ones, and the entry is one when
/// the row projection dominates the column projection. The decomposition
/// `p = sum of dominated q` is verified symbolically.
pub struct InclusionMatrix {
    pub from_level: u32,
    pub matrix: Vec<Vec<u32>>,
    pub verified: bool,
}

impl InclusionMatrix {
    pub fn row_sums(&self) -> Vec<u32> {
        self.matrix.iter().map(|r| r.iter().sum()).collect()
    }

    /// Indices of rows decomposing into more than one next-stage projection.
    pub fn splitting_rows(&self) -> Vec<usize> {
        self.row_sums()
            .iter()
            .enumerate()
            .filter(|(_, s)| **s >= 2)
            .map(|(i, _)| i)
            .collect()
    }
}

pub fn inclusion(variant: Variant, level: u32) -> InclusionMatrix {
    let lower = stage(variant, level);
    let upper = stage(variant, level + 1);
    let (matrix, verified) = match (&lower.alg, &upper.alg) {
        (StageAlg::A(ps), StageAlg::A(qs)) => {
            let matrix: Vec<Vec<u32>> = ps
                .iter()
                .map(|p| qs.iter().map(|q| u32::from(p.mul(q) == *q)).collect())
                .collect();
            let verified = ps.iter().zip(&matrix).all(|(p, row)| {
                let mut rebuilt = ChainAlg::zero();
                for (q, &m) in qs.iter().zip(row) {
                    if m == 1 {
                        rebuilt = rebuilt.add(q);
                    }
                }
                rebuilt == *p
            });
            (matrix, verified)
        }
        (StageAlg::B(ps), StageAlg::B(qs)) => {
            let matrix: Vec<Vec<u32>> = ps
                .iter()
                .map(|p| qs.iter().map(|q| u32::from(p.mul(q) == *q)).collect())
                .collect();
            let verified = ps.iter().zip(&matrix).all(|(p, row)| {
                let mut rebuilt = CrossedAlg::zero();
                for (q, &m) in qs.iter().zip(row) {
                    if m == 1 {
                        rebuilt = rebuilt.add(q);
                    }
                }
                rebuilt == *p
            });
            (matrix, verified)
        }
        _ => unreachable!(),
    };
    InclusionMatrix {
        from_level: level,
        matrix,
        verified,
    }
}

#[derive(Debug, Serialize)]
pub struct StageSummary {
    pub level: u32,
    pub rank: usize,
    pub minimal_projections: Vec<String>,
    pub verified: bool,
}

#[derive(Debug, Serialize)]
pub struct InclusionSummary {
    pub from_level: u32,
    pub matrix: Vec<Vec<u32>>,
    pub splitting_rows: Vec<String>,
    pub verified: bool,
}

#[derive(Debug, Serialize)]
pub struct StableGenerator {
    pub first_level: u32,
    pub name: String,
}

#[derive(Debug, Serialize)]
pub struct K0Report {
    pub variant: String,
    pub stages: Vec<StageSummary>,
    pub inclusions: Vec<InclusionSummary>,
    /// Generators whose class maps to a single minimal projection at every
    /// later stage: the free summands of the limit.
    pub stable_generators: Vec<StableGenerator>,
    /// Whether a class keeps splitting at every level; when present the
    /// limit carries a distinguished unit-related class beyond the free part.
    pub perpetually_splitting_class: Option<String>,
    pub all_verified: bool,
}

/// Stage-by-stage description of the limit ordered group: ranks, inclusion
/// matrices, the ledger of generators that stay minimal forever, and the
/// flag for a class that never stops splitting.
pub fn k0_colimit_description(variant: Variant, levels: u32) -> K0Report {
    let stages: Vec<BratteliStage> = (0..=levels).map(|n| stage(variant, n)).collect();
    let inclusions: Vec<InclusionMatrix> = (0..levels).map(|n| inclusion(variant, n)).collect();
    let mut all_verified = stages.iter().all(|s| s.verified)
        && inclusions.iter().all(|m| m.verified);

    // follow each generator forward: stable when every remaining step keeps
    // it a single minimal projection; a generator first appearing at the
    // last examined stage has no forward evidence and stays off the ledger
    let mut stable = Vec::new();
    for (n, st) in stages.iter().enumerate() {
        if inclusions[n..].is_empty() {
            continue;
        }
        for (i, name) in st.names.iter().enumerate() {
            // only record a generator at its first appearance
            if n > 0 {
                let prev = &inclusions[n - 1];
                if prev.matrix.iter().any(|row| {
                    row[i] == 1 && row.iter().sum::<u32>() == 1
                }) {
                    continue; // carried over unchanged from the previous stage
                }
            }
            let mut idx = i;
            let mut splits = false;
            for m in &inclusions[n..] {
                let row = &m.matrix[idx];
                let hits: Vec<usize> = row
                    .iter()
                    .enumerate()
                    .filter(|(_, &v)| v == 1)
                    .map(|(j, _)| j)
                    .collect();
                if hits.len() != 1 {
                    splits = true;
                    break;
                }
                idx = hits[0];
            }
            if !splits {
                stable.push(StableGenerator {
                    first_level: n as u32,
                    name: name.clone(),
                });
            }
        }
    }

    // a perpetually splitting class: start at stage 0 and check that every
    // level splits some descendant of it
    let mut perpetual: Option<String> = None;
    if levels >= 1 {
        'outer: for (i, name) in stages[0].names.iter().enumerate() {
            let mut front = vec![i];
            for m in &inclusions {
                let mut split_here = false;
                let mut next = Vec::new();
                for &idx in &front {
                    let row = &m.matrix[idx];
                    let hits: Vec<usize> = row
                        .iter()
                        .enumerate()
                        .filter(|(_, &v)| v == 1)
                        .map(|(j, _)| j)
                        .collect();
                    split_here |= hits.len() >= 2;
                    next.extend(hits);
                }
                if !split_here {
                    continue 'outer;
                }
                next.sort_unstable();
                next.dedup();
                front = next;
            }
            perpetual = Some(name.clone());
            break;
        }
    }

    if levels == 0 {
        // a single stage degenerates gracefully: no inclusions to verify
        all_verified = stages.iter().all(|s| s.verified);
    }

    K0Report {
        variant: match variant {
            Variant::A => "A".into(),
            Variant::B => "B".into(),
        },
        stages: stages
            .iter()
            .map(|s| StageSummary {
                level: s.level,
                rank: s.rank,
                minimal_projections: s.names.clone(),
                verified: s.verified,
            })
            .collect(),
        inclusions: inclusions
            .iter()
            .map(|m| InclusionSummary {
                from_level: m.from_level,
                splitting_rows: m
                    .splitting_rows()
                    .into_iter()
                    .map(|i| stages[m.from_level as usize].names[i].clone())
                    .collect(),
                matrix: m.matrix.clone(),
                verified: m.verified,
            })
            .collect(),
        stable_generators: stable,
        perpetually_splitting_class: perpetual,
        all_verified,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_zero_stage_is_the_two_sign_projections() {
        let st = stage(Variant::A, 0);
        assert_eq!(st.rank, 2);
        assert_eq!(st.names, vec!["(1-S)/2", "(1+S)/2"]);
        assert!(st.verified);

        let st = stage(Variant::B, 0);
        assert_eq!(st.rank, 2);
        assert!(st.verified);
    }

    #[test]
    fn stage_ranks_grow_by_one() {
        for variant in [Variant::A, Variant::B] {
            for n in 0..=30u32 {
                let st = stage(variant, n);
                assert_eq!(st.rank as u32, n + 2, "{variant:?} level {n}");
                assert!(st.verified, "{variant:?} level {n}");
            }
        }
    }

    #[test]
    fn first_inclusion_splits_only_the_plus_projection() {
        let inc = inclusion(Variant::A, 0);
        assert!(inc.verified);
        // (1-S)/2 stays put; (1+S)/2 = e1 + ((1+S)/2 - e1)
        assert_eq!(inc.matrix, vec![vec![1, 0, 0], vec![0, 1, 1]]);
    }

    #[test]
    fn splitting_pattern_of_the_two_variants() {
        for n in 0..12u32 {
            let a = inclusion(Variant::A, n);
            assert!(a.verified);
            let sums = a.row_sums();
            assert_eq!(sums.iter().filter(|&&s| s == 2).count(), 1, "level {n}");
            assert!(sums.iter().all(|&s| s == 1 || s == 2));

            let b = inclusion(Variant::B, n);
            assert!(b.verified);
            assert!(b.row_sums().iter().all(|&s| s == 1), "level {n}");
        }
    }

    #[test]
    fn the_minus_projection_never_splits() {
        // compose the inclusions and watch the first row stay a single one
        let mut idx = 0usize;
        for n in 0..20u32 {
            let inc = inclusion(Variant::A, n);
            let row = &inc.matrix[idx];
            let hits: Vec<usize> = row
                .iter()
                .enumerate()
                .filter(|(_, &v)| v == 1)
                .map(|(j, _)| j)
                .collect();
            assert_eq!(hits.len(), 1, "level {n}");
            idx = hits[0];
            assert_eq!(idx, 0, "the isolated class keeps the first slot");
        }
    }

    #[test]
    fn ledger_shapes() {
        let a = k0_colimit_description(Variant::A, 12);
        assert!(a.all_verified);
        assert_eq!(a.stages.len(), 13);
        assert_eq!(a.inclusions.len(), 12);
        for (n, st) in a.stages.iter().enumerate() {
            assert_eq!(st.rank, n + 2);
        }
        assert_eq!(a.perpetually_splitting_class.as_deref(), Some("(1+S)/2"));
        assert!(a
            .stable_generators
            .iter()
            .any(|g| g.name == "(1-S)/2" && g.first_level == 0));
        // chain increments enter the ledger as they appear
        assert!(a.stable_generators.iter().any(|g| g.name == "e1"));
        assert!(a.stable_generators.iter().any(|g| g.name == "e5-e4"));
        // the top remainder never stabilizes
        assert!(!a
            .stable_generators
            .iter()
            .any(|g| g.name.starts_with("(1+S)/2")));

        let b = k0_colimit_description(Variant::B, 12);
        assert!(b.all_verified);
        assert!(b.perpetually_splitting_class.is_none());
        // every stage generator with forward evidence is stable: the two
        // sign projections plus one chain generator per non-final level
        let expected = 2 + 11;
        assert_eq!(b.stable_generators.len(), expected);
    }

    #[test]
    fn single_stage_report_degenerates_gracefully() {
        let r = k0_colimit_description(Variant::A, 0);
        assert_eq!(r.stages.len(), 1);
        assert!(r.inclusions.is_empty());
        assert!(r.all_verified);
    }

    #[test]
    fn crossed_symbol_arithmetic_matches_the_action() {
        // the plus sign projection is orthogonal to every chain generator
        let plus = CrossedAlg::scaled(ChainSym::One, ChainSym::One, rat(1, 2)).add(
            &CrossedAlg::scaled(ChainSym::One, ChainSym::S, rat(1, 2)),
        );
        for k in 1..=8u32 {
            let yk = CrossedAlg::scaled(ChainSym::E(k), ChainSym::E(k), rat_int(1));
            assert!(plus.mul(&yk).is_zero());
            assert!(yk.mul(&plus).is_zero());
        }
        assert!(plus.is_projection());
    }
}
