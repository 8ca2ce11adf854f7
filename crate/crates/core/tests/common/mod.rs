#![allow(dead_code)]

use std::collections::BTreeSet;

use torsionkit::category::span;
use torsionkit::classify_an::{enumerate_torsion_pairs, Residual};
use torsionkit::torsion::{ext_injectives_in, ext_projectives_in, filtration};
use torsionkit::partition::{enumerate_partitions, PartPartition, PartitionKind};
use torsionkit::{Interval, LinearCategory, Subcategory, TorsionPair, TorsionSeries, Vertex};

pub fn iv(top: Vertex, socle: Vertex) -> Interval {
    Interval::new(top, socle)
}

pub fn set(xs: &[(Vertex, Vertex)]) -> Subcategory<Interval> {
    xs.iter().map(|&p| Interval::from(p)).collect()
}

pub fn linear(n: u32) -> LinearCategory {
    LinearCategory::linear(n).unwrap()
}

pub fn pairs(cat: &LinearCategory) -> Vec<TorsionPair<Interval>> {
    enumerate_torsion_pairs(cat).unwrap()
}

/// Torsion pairs with no projective in the torsion class and no injective
/// in the free class.
pub fn stable_pairs(cat: &LinearCategory) -> Vec<TorsionPair<Interval>> {
    pairs(cat)
        .into_iter()
        .filter(|tp| {
            cat.projectives().iter().all(|p| !tp.torsion.contains(p))
                && cat.injectives().iter().all(|i| !tp.free.contains(i))
        })
        .collect()
}

/// Every partition of the given kinds together with every stable residual
/// pair on its uncovered vertices.
pub fn partition_inputs(cat: &LinearCategory, kind: PartitionKind) -> Vec<(PartPartition, Residual)> {
    let mut out = Vec::new();
    for complete in [true, false] {
        for s in enumerate_partitions(cat.quiver(), kind, complete) {
            let support: BTreeSet<Vertex> = cat.vertices().difference(&s.union()).copied().collect();
            if support.is_empty() {
                out.push((s, Residual::empty()));
                continue;
            }
            let here = cat.restrict(&support).unwrap();
            for pair in stable_pairs(&here) {
                out.push((s.clone(), Residual { support: support.clone(), pair }));
            }
        }
    }
    out
}

/// Weakly nested chains of torsion pairs with `1..=max_len` members.
pub fn chains(all: &[TorsionPair<Interval>], max_len: usize) -> Vec<TorsionSeries<Interval>> {
    fn grow(
        all: &[TorsionPair<Interval>],
        max_len: usize,
        current: &mut Vec<TorsionPair<Interval>>,
        out: &mut Vec<TorsionSeries<Interval>>,
    ) {
        if !current.is_empty() {
            out.push(TorsionSeries { pairs: current.clone() });
        }
        if current.len() == max_len {
            return;
        }
        for tp in all {
            if current.last().map_or(true, |last| last.torsion.is_subset(&tp.torsion)) {
                current.push(tp.clone());
                grow(all, max_len, current, out);
                current.pop();
            }
        }
    }
    let mut out = Vec::new();
    grow(all, max_len, &mut Vec::new(), &mut out);
    out
}

/// The last nonzero factor of each projective is Ext-projective in the
/// span of its part and the later ones, and these are all such objects.
/// Dually for injectives and first factors.
pub fn ext_projective_bijection(cat: &LinearCategory, parts: &[Subcategory<Interval>]) -> Result<(), String> {
    let n = cat.vertices().len();
    let tails: Vec<Subcategory<Interval>> = (0..parts.len()).map(|i| span(cat, &parts[i..])).collect();
    let heads: Vec<Subcategory<Interval>> = (0..parts.len()).map(|i| span(cat, &parts[..=i])).collect();

    let mut image = BTreeSet::new();
    for p in cat.projectives() {
        let f = filtration(cat, parts, &p).ok_or_else(|| format!("no filtration of {p}"))?;
        let (i, x) = f.factors.iter().enumerate().rev().find_map(|(i, s)| s.map(|x| (i, x))).expect("nonzero");
        image.insert((i, x));
    }
    let target: BTreeSet<(usize, Interval)> = parts
        .iter()
        .enumerate()
        .flat_map(|(i, part)| ext_projectives_in(cat, part, &tails[i]).into_iter().map(move |x| (i, x)))
        .collect();
    if image.len() != n || image != target {
        return Err(format!("projective map hits {} objects, {} Ext-projectives exist, n = {n}", image.len(), target.len()));
    }

    let mut coimage = BTreeSet::new();
    for inj in cat.injectives() {
        let f = filtration(cat, parts, &inj).ok_or_else(|| format!("no filtration of {inj}"))?;
        let (j, y) = f.factors.iter().enumerate().find_map(|(j, s)| s.map(|y| (j, y))).expect("nonzero");
        coimage.insert((j, y));
    }
    let cotarget: BTreeSet<(usize, Interval)> = parts
        .iter()
        .enumerate()
        .flat_map(|(j, part)| ext_injectives_in(cat, part, &heads[j]).into_iter().map(move |y| (j, y)))
        .collect();
    if coimage.len() != n || coimage != cotarget {
        return Err(format!("injective map hits {} objects, {} Ext-injectives exist, n = {n}", coimage.len(), cotarget.len()));
    }
    Ok(())
}
