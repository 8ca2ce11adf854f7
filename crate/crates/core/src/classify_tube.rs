//! Torsion pairs of a tube.
//!
//! Every torsion pair of the rank-`n` tube has one of two forms, indexed by
//! a nonempty vertex set `delta`:
//!
//! 1. torsion class `coray(delta) ⊕ T'` and free class `F'`, with `(T', F')`
//!    a torsion pair on the linear quiver left after deleting `delta` from
//!    the cycle in which every projective is free;
//! 2. torsion class `T'` and free class `F' ⊕ ray(delta)`, where every
//!    injective of the residual quiver is torsion.
//!
//! The residual pair is stored as the tail of its partition: a form-1 datum
//! keeps the parts after the empty first part of the residual's one-type
//! partition, and a form-2 datum does the same with the two-type partition.
//! Prepending `delta` to that tail gives a complete strong partition of the
//! cycle, which is the partition-indexed view of the same datum.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::an::{Interval, LinearCategory};
use crate::category::Subcategory;
use crate::classify_an::{
    decompose_left, decompose_right, enumerate_torsion_pairs, is_cotilting_induced, is_tilting_induced,
    partition_to_tp, partition_to_tp_right,
};
use crate::error::{Error, Result};
use crate::partition::{check_partition, enumerate_partitions, PartPartition, PartitionKind};
use crate::quiver::{Quiver, Vertex};
use crate::torsion::TorsionPair;
use crate::tube::{coray, ray, wrap, Tube, TubeModule, TubeSubcategory};

/// Which of the two forms a tube torsion pair takes. Serialized as `1` or `2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum TubeKind {
    /// Coray in the torsion class.
    Coray,
    /// Ray in the free class.
    Ray,
}

impl TryFrom<u8> for TubeKind {
    type Error = String;
    fn try_from(v: u8) -> std::result::Result<Self, String> {
        match v {
            1 => Ok(TubeKind::Coray),
            2 => Ok(TubeKind::Ray),
            other => Err(format!("tube pair kind must be 1 or 2, got {other}")),
        }
    }
}

impl From<TubeKind> for u8 {
    fn from(k: TubeKind) -> u8 {
        match k {
            TubeKind::Coray => 1,
            TubeKind::Ray => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TubeTorsionPair {
    pub rank: u32,
    pub kind: TubeKind,
    pub delta: BTreeSet<Vertex>,
    pub residual_partition: Vec<BTreeSet<Vertex>>,
}

impl fmt::Display for TubeTorsionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rank {} kind {} delta {:?} residual {:?}", self.rank, u8::from(self.kind), self.delta, self.residual_partition)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Membership {
    Torsion,
    Free,
    /// Indecomposables with nonzero torsion part and nonzero free quotient.
    Neither,
}

/// The linear quiver left after deleting `delta` from the cycle.
pub fn residual_category(rank: u32, delta: &BTreeSet<Vertex>) -> Result<LinearCategory> {
    let cycle = Quiver::cyclic_an(rank)?;
    if delta.is_empty() {
        return Err(Error::InvalidTubeDatum("delta is empty".into()));
    }
    if let Some(v) = delta.iter().find(|v| !cycle.vertices().contains(v)) {
        return Err(Error::UnknownVertex(*v));
    }
    LinearCategory::new(cycle.without(delta))
}

/// The tube module with the same top and socle as a residual interval.
pub fn embed(rank: u32, x: &Interval) -> TubeModule {
    let length = wrap(i64::from(x.top) - i64::from(x.socle) + 1, rank);
    TubeModule::new(x.socle, length)
}

fn residual_kind(kind: TubeKind) -> PartitionKind {
    match kind {
        TubeKind::Coray => PartitionKind::Strong1,
        TubeKind::Ray => PartitionKind::Strong2,
    }
}

/// The torsion pair on the residual quiver encoded by `data`.
pub fn residual_pair(data: &TubeTorsionPair) -> Result<(LinearCategory, TorsionPair<Interval>)> {
    let cat = residual_category(data.rank, &data.delta)?;
    let mut parts = vec![BTreeSet::new()];
    parts.extend(data.residual_partition.iter().cloned());
    let partition = PartPartition { parts, kind: residual_kind(data.kind), complete: true };
    let tp = match data.kind {
        TubeKind::Coray => partition_to_tp(&cat, &partition),
        TubeKind::Ray => partition_to_tp_right(&cat, &partition),
    }
    .map_err(|e| Error::InvalidTubeDatum(e.to_string()))?;
    let induced = match data.kind {
        TubeKind::Coray => is_cotilting_induced(&cat, &tp)?,
        TubeKind::Ray => is_tilting_induced(&cat, &tp)?,
    };
    if !induced {
        return Err(Error::InvalidTubeDatum("residual pair has the wrong tilting type".into()));
    }
    Ok((cat, tp))
}

/// Descriptors of the torsion and free classes.
pub fn tube_pair_descriptors(data: &TubeTorsionPair) -> Result<(TubeSubcategory, TubeSubcategory)> {
    let (_, tp) = residual_pair(data)?;
    let lift = |s: &Subcategory<Interval>| -> BTreeSet<TubeModule> { s.iter().map(|x| embed(data.rank, x)).collect() };
    let (t, f) = (lift(&tp.torsion), lift(&tp.free));
    Ok(match data.kind {
        TubeKind::Coray => (
            coray(data.rank, data.delta.clone()).with_finite(t),
            TubeSubcategory::finite(data.rank, f),
        ),
        TubeKind::Ray => (
            TubeSubcategory::finite(data.rank, t),
            ray(data.rank, data.delta.clone()).with_finite(f),
        ),
    })
}

pub fn tube_membership(data: &TubeTorsionPair, x: &TubeModule) -> Result<Membership> {
    Tube::new(data.rank)?.check(x)?;
    let (t, f) = tube_pair_descriptors(data)?;
    Ok(if t.contains(x) {
        Membership::Torsion
    } else if f.contains(x) {
        Membership::Free
    } else {
        Membership::Neither
    })
}

/// Tops of infinitely many torsion modules and socles of infinitely many
/// free modules. At least one of the two sets is nonempty.
pub fn check_l_r(data: &TubeTorsionPair) -> Result<(BTreeSet<Vertex>, BTreeSet<Vertex>)> {
    let (t, f) = tube_pair_descriptors(data)?;
    let l = t.l_r_sets().0;
    let r = f.l_r_sets().1;
    if l.is_empty() && r.is_empty() {
        return Err(Error::InvalidTubeDatum("both infinite sets are empty".into()));
    }
    Ok((l, r))
}

fn nonempty_subsets(rank: u32) -> Vec<BTreeSet<Vertex>> {
    let mut out: Vec<BTreeSet<Vertex>> = (1u64..1 << rank)
        .map(|mask| (1..=rank).filter(|v| mask >> (v - 1) & 1 == 1).collect())
        .collect();
    out.sort();
    out
}

/// Membership pattern over all modules of length up to `2 * rank + 2`.
pub fn signature(data: &TubeTorsionPair) -> Result<Vec<Membership>> {
    let tube = Tube::new(data.rank)?;
    let (t, f) = tube_pair_descriptors(data)?;
    Ok(tube
        .up_to(2 * data.rank + 2)
        .iter()
        .map(|x| {
            if t.contains(x) {
                Membership::Torsion
            } else if f.contains(x) {
                Membership::Free
            } else {
                Membership::Neither
            }
        })
        .collect())
}

/// Every torsion pair of the rank-`rank` tube, by kind and residual pair.
pub fn enumerate_tube_tps(rank: u32) -> Result<Vec<TubeTorsionPair>> {
    Tube::new(rank)?;
    let mut out = Vec::new();
    for delta in nonempty_subsets(rank) {
        let cat = residual_category(rank, &delta)?;
        for tp in enumerate_torsion_pairs(&cat)? {
            if is_cotilting_induced(&cat, &tp)? {
                let parts = decompose_left(&cat, &tp)?.partition.parts;
                debug_assert!(parts[0].is_empty());
                out.push(TubeTorsionPair {
                    rank,
                    kind: TubeKind::Coray,
                    delta: delta.clone(),
                    residual_partition: parts[1..].to_vec(),
                });
            }
            if is_tilting_induced(&cat, &tp)? {
                let parts = decompose_right(&cat, &tp)?.partition.parts;
                debug_assert!(parts[0].is_empty());
                out.push(TubeTorsionPair {
                    rank,
                    kind: TubeKind::Ray,
                    delta: delta.clone(),
                    residual_partition: parts[1..].to_vec(),
                });
            }
        }
    }
    out.sort();
    // Two data describing the same pair would agree on every length.
    let mut seen = BTreeSet::new();
    let mut unique = Vec::with_capacity(out.len());
    for data in out {
        if seen.insert(signature(&data)?) {
            unique.push(data);
        }
    }
    Ok(unique)
}

/// The datum of a complete strong partition of the cycle with nonempty
/// first part: one-type partitions give form 1, two-type give form 2.
pub fn partition_to_tube_tp(rank: u32, partition: &PartPartition) -> Result<TubeTorsionPair> {
    let cycle = Quiver::cyclic_an(rank)?;
    let kind = match partition.kind {
        PartitionKind::Strong1 => TubeKind::Coray,
        PartitionKind::Strong2 => TubeKind::Ray,
        other => {
            return Err(Error::InvalidPartition { kind: other.to_string(), reason: "tube pairs need a strong partition".into() })
        }
    };
    check_partition(&cycle, partition)?;
    if !partition.complete {
        return Err(Error::InvalidPartition { kind: partition.kind.to_string(), reason: "partition must be complete".into() });
    }
    if partition.parts[0].is_empty() {
        return Err(Error::InvalidPartition { kind: partition.kind.to_string(), reason: "first part must be nonempty".into() });
    }
    let data = TubeTorsionPair {
        rank,
        kind,
        delta: partition.parts[0].clone(),
        residual_partition: partition.parts[1..].to_vec(),
    };
    residual_pair(&data)?;
    Ok(data)
}

/// Every torsion pair of the tube, by complete strong partitions of the cycle.
pub fn enumerate_tube_tps_by_partition(rank: u32) -> Result<Vec<TubeTorsionPair>> {
    let cycle = Quiver::cyclic_an(rank)?;
    let mut out = Vec::new();
    for kind in [PartitionKind::Strong1, PartitionKind::Strong2] {
        for s in enumerate_partitions(&cycle, kind, true) {
            if !s.parts[0].is_empty() {
                out.push(partition_to_tube_tp(rank, &s)?);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// One connected component of a module category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Component {
    Linear(LinearCategory),
    Tube(u32),
}

/// A torsion pair on one component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComponentPair {
    Linear(TorsionPair<Interval>),
    Tube(TubeTorsionPair),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComponentObject {
    Linear(Interval),
    Tube(TubeModule),
}

/// A torsion pair on a direct sum of components, one pair per component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombinedPair {
    pub components: Vec<ComponentPair>,
}

pub fn combine_components(per_component: Vec<ComponentPair>) -> CombinedPair {
    CombinedPair { components: per_component }
}

impl CombinedPair {
    pub fn membership(&self, component: usize, x: &ComponentObject) -> Result<Membership> {
        let pair = self
            .components
            .get(component)
            .ok_or(Error::IndexOutOfRange { index: component, len: self.components.len() })?;
        match (pair, x) {
            (ComponentPair::Linear(tp), ComponentObject::Linear(m)) => Ok(if tp.torsion.contains(m) {
                Membership::Torsion
            } else if tp.free.contains(m) {
                Membership::Free
            } else {
                Membership::Neither
            }),
            (ComponentPair::Tube(data), ComponentObject::Tube(m)) => tube_membership(data, m),
            _ => Err(Error::AmbientMismatch(format!("object does not live on component {component}"))),
        }
    }
}

/// All torsion pairs of a direct sum: the product of the per-component lists.
pub fn enumerate_combined(components: &[Component]) -> Result<Vec<CombinedPair>> {
    let mut lists = Vec::with_capacity(components.len());
    for c in components {
        lists.push(match c {
            Component::Linear(cat) => enumerate_torsion_pairs(cat)?.into_iter().map(ComponentPair::Linear).collect::<Vec<_>>(),
            Component::Tube(rank) => enumerate_tube_tps(*rank)?.into_iter().map(ComponentPair::Tube).collect(),
        });
    }
    let mut out = vec![Vec::new()];
    for list in &lists {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<ComponentPair>| {
                list.iter().map(move |p| {
                    let mut next = prefix.clone();
                    next.push(p.clone());
                    next
                })
            })
            .collect();
    }
    Ok(out.into_iter().map(combine_components).collect())
}
