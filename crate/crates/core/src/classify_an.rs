//! Torsion pairs over linear A-type quivers and their part partitions.
//!
//! The left decomposition peels a torsion pair `(T, F)` in stages. Stage 0
//! collects the vertices whose indecomposable projective lies in `T` and
//! removes them from the support, which cuts `T` down to the modules living
//! on what is left. Stage 1 does the same with injectives in `F`, and the
//! stages alternate until one comes back empty. The removed vertex sets form
//! a one-type partition and what remains is the residual pair. The right
//! decomposition starts with injectives in `F` instead and yields a two-type
//! partition. Assembly runs the stages backwards.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::an::{Interval, LinearCategory};
use crate::category::{cogen_closure, everything, gen_closure, span, Subcategory};
use crate::error::{Error, Result};
use crate::oracle::{catalan, enumerate_torsion_pairs_bruteforce};
use crate::partition::{check_partition, enumerate_partitions, PartPartition, PartitionKind};
use crate::quiver::Vertex;
use crate::torsion::{check_torsion_pair, ext_injectives_in, ext_projectives_in, NTorsionPair, TorsionPair};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// Which modules a stage inspects.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StageKind {
    Projective,
    Injective,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stage {
    pub stage: usize,
    pub vertices: BTreeSet<Vertex>,
    pub side: StageKind,
}

/// A torsion pair on the modules supported on `support`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Residual {
    pub support: BTreeSet<Vertex>,
    #[serde(flatten)]
    pub pair: TorsionPair<Interval>,
}

impl Residual {
    pub fn empty() -> Self {
        Residual { support: BTreeSet::new(), pair: TorsionPair::new(Subcategory::new(), Subcategory::new()) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub side: Side,
    pub partition: PartPartition,
    pub residual: Residual,
    pub trace: Vec<Stage>,
}

fn stage_kind(side: Side, stage: usize) -> StageKind {
    if (stage % 2 == 0) == (side == Side::Left) {
        StageKind::Projective
    } else {
        StageKind::Injective
    }
}

fn validated(cat: &LinearCategory, tp: &TorsionPair<Interval>) -> Result<()> {
    cat.check_all(tp.torsion.iter().chain(tp.free.iter()))?;
    check_torsion_pair(cat, &everything(cat), tp)
}

fn decompose(cat: &LinearCategory, tp: &TorsionPair<Interval>, side: Side) -> Result<Decomposition> {
    validated(cat, tp)?;
    let mut support = cat.vertices().clone();
    let mut torsion = tp.torsion.clone();
    let mut free = tp.free.clone();
    let mut parts = Vec::new();
    let mut trace = Vec::new();
    for stage in 0.. {
        let here = cat.restrict(&support)?;
        let kind = stage_kind(side, stage);
        let delta: BTreeSet<Vertex> = support
            .iter()
            .copied()
            .filter(|&v| match kind {
                StageKind::Projective => torsion.contains(&here.projective_at(v).unwrap()),
                StageKind::Injective => free.contains(&here.injective_at(v).unwrap()),
            })
            .collect();
        if delta.is_empty() && stage > 0 {
            break;
        }
        support = support.difference(&delta).copied().collect();
        match kind {
            StageKind::Projective => torsion = cat.restrict_support(&torsion, &support),
            StageKind::Injective => free = cat.restrict_support(&free, &support),
        }
        parts.push(delta.clone());
        trace.push(Stage { stage, vertices: delta, side: kind });
    }
    debug_assert_eq!(cat.restrict_support(&torsion, &support), torsion);
    debug_assert_eq!(cat.restrict_support(&free, &support), free);

    let (strong, plain) = match side {
        Side::Left => (PartitionKind::Strong1, PartitionKind::Plain1),
        Side::Right => (PartitionKind::Strong2, PartitionKind::Plain2),
    };
    let complete = support.is_empty();
    let mut partition = PartPartition { parts, kind: strong, complete };
    if check_partition(cat.quiver(), &partition).is_err() {
        partition.kind = plain;
    }
    Ok(Decomposition {
        side,
        partition,
        residual: Residual { support, pair: TorsionPair::new(torsion, free) },
        trace,
    })
}

/// Stage-by-stage decomposition starting from projectives in `T`.
pub fn decompose_left(cat: &LinearCategory, tp: &TorsionPair<Interval>) -> Result<Decomposition> {
    decompose(cat, tp, Side::Left)
}

/// Stage-by-stage decomposition starting from injectives in `F`.
pub fn decompose_right(cat: &LinearCategory, tp: &TorsionPair<Interval>) -> Result<Decomposition> {
    decompose(cat, tp, Side::Right)
}

/// Whether a torsion pair on the residual support has no projective in its
/// torsion class and no injective in its free class.
fn check_residual(cat: &LinearCategory, residual: &Residual) -> Result<()> {
    let here = cat.restrict(&residual.support)?;
    let pair = &residual.pair;
    here.check_all(pair.torsion.iter().chain(pair.free.iter()))?;
    check_torsion_pair(&here, &everything(&here), pair)?;
    if let Some(p) = here.projectives().iter().find(|p| pair.torsion.contains(p)) {
        return Err(Error::ResidualNotStable(format!("projective {p} is torsion")));
    }
    if let Some(i) = here.injectives().iter().find(|i| pair.free.contains(i)) {
        return Err(Error::ResidualNotStable(format!("injective {i} is free")));
    }
    Ok(())
}

/// The n-torsion pair built from a partition and residual:
/// `(Gen P_a, Gen P_c, ..., T', F', ..., Cogen I_d, Cogen I_b)` where the
/// `P` parts come from projective stages and the `I` parts from injective
/// stages, each taken over the support remaining at that stage.
pub fn stage_ntp(
    cat: &LinearCategory,
    partition: &PartPartition,
    residual: &Residual,
    side: Side,
) -> Result<NTorsionPair<Interval>> {
    let expected_kinds = match side {
        Side::Left => [PartitionKind::Plain1, PartitionKind::Strong1],
        Side::Right => [PartitionKind::Plain2, PartitionKind::Strong2],
    };
    if !expected_kinds.contains(&partition.kind) {
        return Err(Error::InvalidPartition {
            kind: partition.kind.to_string(),
            reason: format!("{side:?} assembly needs the matching partition type"),
        });
    }
    check_partition(cat.quiver(), partition)?;
    let leftover: BTreeSet<Vertex> = cat.vertices().difference(&partition.union()).copied().collect();
    if leftover != residual.support {
        return Err(Error::AmbientMismatch(format!(
            "residual support {:?} differs from the uncovered vertices {:?}",
            residual.support, leftover
        )));
    }
    check_residual(cat, residual)?;

    let mut support = cat.vertices().clone();
    let mut generated = Vec::new();
    let mut cogenerated = Vec::new();
    for (stage, delta) in partition.parts.iter().enumerate() {
        let here = cat.restrict(&support)?;
        match stage_kind(side, stage) {
            StageKind::Projective => {
                let tops: Subcategory<Interval> = delta.iter().map(|&v| here.projective_at(v)).collect::<Result<_>>()?;
                generated.push(gen_closure(cat, &tops));
            }
            StageKind::Injective => {
                let socles: Subcategory<Interval> =
                    delta.iter().map(|&v| here.injective_at(v)).collect::<Result<_>>()?;
                cogenerated.push(cogen_closure(cat, &socles));
            }
        }
        support = support.difference(delta).copied().collect();
    }
    let mut parts = generated;
    parts.push(residual.pair.torsion.clone());
    parts.push(residual.pair.free.clone());
    parts.extend(cogenerated.into_iter().rev());
    Ok(NTorsionPair { parts })
}

fn assemble_side(cat: &LinearCategory, partition: &PartPartition, residual: &Residual, side: Side) -> Result<TorsionPair<Interval>> {
    let ntp = stage_ntp(cat, partition, residual, side)?;
    let generated = partition
        .parts
        .iter()
        .enumerate()
        .filter(|(stage, _)| stage_kind(side, *stage) == StageKind::Projective)
        .count();
    let cut = generated + 1;
    Ok(TorsionPair::new(span(cat, &ntp.parts[..cut]), span(cat, &ntp.parts[cut..])))
}

/// Inverse of [`decompose_left`].
pub fn assemble(cat: &LinearCategory, partition: &PartPartition, residual: &Residual) -> Result<TorsionPair<Interval>> {
    assemble_side(cat, partition, residual, Side::Left)
}

/// Inverse of [`decompose_right`].
pub fn assemble_right(cat: &LinearCategory, partition: &PartPartition, residual: &Residual) -> Result<TorsionPair<Interval>> {
    assemble_side(cat, partition, residual, Side::Right)
}

/// Whether the left and right decompositions leave the same residual pair.
pub fn residuals_agree(cat: &LinearCategory, tp: &TorsionPair<Interval>) -> Result<bool> {
    Ok(decompose_left(cat, tp)?.residual == decompose_right(cat, tp)?.residual)
}

/// Torsion pair of a complete one-type partition.
pub fn partition_to_tp(cat: &LinearCategory, partition: &PartPartition) -> Result<TorsionPair<Interval>> {
    if !partition.complete {
        return Err(Error::InvalidPartition {
            kind: partition.kind.to_string(),
            reason: "partition must cover every vertex".into(),
        });
    }
    assemble(cat, partition, &Residual::empty())
}

/// Torsion pair of a complete two-type partition.
pub fn partition_to_tp_right(cat: &LinearCategory, partition: &PartPartition) -> Result<TorsionPair<Interval>> {
    if !partition.complete {
        return Err(Error::InvalidPartition {
            kind: partition.kind.to_string(),
            reason: "partition must cover every vertex".into(),
        });
    }
    assemble_right(cat, partition, &Residual::empty())
}

pub fn tp_to_partition(cat: &LinearCategory, tp: &TorsionPair<Interval>) -> Result<PartPartition> {
    Ok(decompose_left(cat, tp)?.partition)
}

/// All torsion pairs of the category, one per complete strong one-type
/// partition, sorted.
pub fn enumerate_torsion_pairs(cat: &LinearCategory) -> Result<Vec<TorsionPair<Interval>>> {
    let mut pairs: Vec<_> = enumerate_partitions(cat.quiver(), PartitionKind::Strong1, true)
        .iter()
        .map(|s| partition_to_tp(cat, s))
        .collect::<Result<_>>()?;
    pairs.sort();
    Ok(pairs)
}

/// Number of torsion pairs of `linear_an(n)`, the Catalan number `C_{n+1}`.
pub fn count_torsion_pairs(n: u32) -> Result<u128> {
    if n == 0 {
        return Err(Error::ZeroSize(0));
    }
    catalan(n + 1).ok_or(Error::BoundExceeded { what: "n", value: n.into(), bound: 64 })
}

/// The three independent counts behind [`count_torsion_pairs`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub n: u32,
    pub formula: u128,
    pub partitions: usize,
    pub brute_force: usize,
    /// Partitions map injectively onto exactly the brute-forced pairs.
    pub bijection: bool,
}

impl CountReport {
    pub fn consistent(&self) -> bool {
        self.bijection && self.formula == self.partitions as u128 && self.partitions == self.brute_force
    }
}

pub fn verify_count(n: u32, max_n: u32) -> Result<CountReport> {
    let formula = count_torsion_pairs(n)?;
    let brute = enumerate_torsion_pairs_bruteforce(n, max_n)?;
    let cat = LinearCategory::linear(n)?;
    let partitions = enumerate_partitions(cat.quiver(), PartitionKind::Strong1, true);
    let mut image: Vec<TorsionPair<Interval>> =
        partitions.iter().map(|s| partition_to_tp(&cat, s)).collect::<Result<_>>()?;
    image.sort();
    let injective = image.windows(2).all(|w| w[0] != w[1]);
    Ok(CountReport {
        n,
        formula,
        partitions: partitions.len(),
        brute_force: brute.len(),
        bijection: injective && image == brute,
    })
}

/// Minimal generators of `T` among its Ext-projectives and minimal
/// cogenerators of `F` among its Ext-injectives.
pub fn generators(cat: &LinearCategory, tp: &TorsionPair<Interval>) -> Result<(Subcategory<Interval>, Subcategory<Interval>)> {
    validated(cat, tp)?;
    let projective = ext_projectives_in(cat, &tp.torsion, &tp.torsion);
    let injective = ext_injectives_in(cat, &tp.free, &tp.free);
    let generating = projective.filter(|x| {
        !projective
            .iter()
            .any(|y| y != x && gen_closure(cat, &[*y].into_iter().collect()).contains(x))
    });
    let cogenerating = injective.filter(|x| {
        !injective
            .iter()
            .any(|y| y != x && cogen_closure(cat, &[*y].into_iter().collect()).contains(x))
    });
    Ok((generating, cogenerating))
}

/// All injectives lie in `T`. Cross-checked against the first vertex of
/// every chain lying in the first part of the left decomposition.
pub fn is_tilting_induced(cat: &LinearCategory, tp: &TorsionPair<Interval>) -> Result<bool> {
    let by_modules = cat.injectives().iter().all(|i| tp.torsion.contains(i));
    let first = &decompose_left(cat, tp)?.partition.parts[0];
    let by_partition = cat.chains().iter().all(|c| first.contains(&c[0]));
    assert_eq!(by_modules, by_partition, "tilting characterizations disagree");
    Ok(by_modules)
}

/// All projectives lie in `F`. Cross-checked against the last vertex of
/// every chain lying in the first part of the right decomposition.
pub fn is_cotilting_induced(cat: &LinearCategory, tp: &TorsionPair<Interval>) -> Result<bool> {
    let by_modules = cat.projectives().iter().all(|p| tp.free.contains(p));
    let first = &decompose_right(cat, tp)?.partition.parts[0];
    let by_partition = cat.chains().iter().all(|c| first.contains(c.last().unwrap()));
    assert_eq!(by_modules, by_partition, "cotilting characterizations disagree");
    Ok(by_modules)
}
