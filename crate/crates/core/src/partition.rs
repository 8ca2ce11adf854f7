//! Ordered part partitions of the vertex set of a quiver and the four
//! families of conditions they can satisfy.
//!
//! A partition is a list `(D_0, D_1, ..., D_m)` of disjoint vertex sets in
//! which only `D_0` may be empty. Write `R_k` for the full subquiver on the
//! vertices outside `D_0, ..., D_{k-1}`.
//!
//! * strong one-type: for `k >= 1`, `D_k` contains the sinks of `R_k` when
//!   `k` is odd and the sources of `R_k` when `k` is even.
//! * strong two-type: the same with sinks and sources exchanged.
//! * plain one-type: for `k >= 2` every vertex of `D_k` is joined to some
//!   vertex of `D_{k-1}` by a path inside `R_{k-1}`, running from `D_k` to
//!   `D_{k-1}` when `k` is even and from `D_{k-1}` to `D_k` when `k` is odd.
//! * plain two-type: the same with the path directions exchanged.
//!
//! `D_1` carries no path condition.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::{Quiver, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PartitionKind {
    #[serde(rename = "plain1")]
    Plain1,
    #[serde(rename = "plain2")]
    Plain2,
    #[serde(rename = "strong1")]
    Strong1,
    #[serde(rename = "strong2")]
    Strong2,
}

impl PartitionKind {
    fn one_type(self) -> bool {
        matches!(self, PartitionKind::Plain1 | PartitionKind::Strong1)
    }

    fn strong(self) -> bool {
        matches!(self, PartitionKind::Strong1 | PartitionKind::Strong2)
    }
}

impl fmt::Display for PartitionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            PartitionKind::Plain1 => "plain one-type",
            PartitionKind::Plain2 => "plain two-type",
            PartitionKind::Strong1 => "strong one-type",
            PartitionKind::Strong2 => "strong two-type",
        };
        f.write_str(name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PartPartition {
    pub parts: Vec<BTreeSet<Vertex>>,
    pub kind: PartitionKind,
    pub complete: bool,
}

impl PartPartition {
    /// Builds a partition from vertex lists, rejecting repeated vertices and
    /// empty parts after the first.
    pub fn new(parts: Vec<Vec<Vertex>>, kind: PartitionKind, complete: bool) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut sets = Vec::with_capacity(parts.len());
        for (i, part) in parts.into_iter().enumerate() {
            if i > 0 && part.is_empty() {
                return Err(Error::MalformedPartition(format!("part {i} is empty")));
            }
            for &v in &part {
                if !seen.insert(v) {
                    return Err(Error::MalformedPartition(format!("vertex {v} appears twice")));
                }
            }
            sets.push(part.into_iter().collect());
        }
        if sets.is_empty() {
            return Err(Error::MalformedPartition("no parts".into()));
        }
        Ok(PartPartition { parts: sets, kind, complete })
    }

    pub fn union(&self) -> BTreeSet<Vertex> {
        self.parts.iter().flatten().copied().collect()
    }

    /// Parts as sorted vertex lists, the key used for ordering output.
    pub fn key(&self) -> Vec<Vec<Vertex>> {
        self.parts.iter().map(|p| p.iter().copied().collect()).collect()
    }
}

impl fmt::Display for PartPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .parts
            .iter()
            .map(|p| format!("{{{}}}", p.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

fn structural_check(q: &Quiver, s: &PartPartition) -> Result<()> {
    if s.parts.is_empty() {
        return Err(Error::MalformedPartition("no parts".into()));
    }
    let mut seen = BTreeSet::new();
    for (i, part) in s.parts.iter().enumerate() {
        if i > 0 && part.is_empty() {
            return Err(Error::MalformedPartition(format!("part {i} is empty")));
        }
        for &v in part {
            if !q.vertices().contains(&v) {
                return Err(Error::UnknownVertex(v));
            }
            if !seen.insert(v) {
                return Err(Error::MalformedPartition(format!("vertex {v} appears twice")));
            }
        }
    }
    Ok(())
}

/// Checks the condition on part `k >= 1` given the parts before it.
fn part_ok(q: &Quiver, kind: PartitionKind, earlier: &[BTreeSet<Vertex>], part: &BTreeSet<Vertex>) -> bool {
    let k = earlier.len();
    if k == 0 {
        return true;
    }
    let used: BTreeSet<Vertex> = earlier.iter().flatten().copied().collect();
    let residual = q.without(&used);
    if kind.strong() {
        let want_sinks = (k % 2 == 1) == kind.one_type();
        let required = if want_sinks { residual.sinks() } else { residual.sources() };
        return required.is_subset(part);
    }
    if k == 1 {
        return true;
    }
    let before: BTreeSet<Vertex> = earlier[..k - 1].iter().flatten().copied().collect();
    let region = q.without(&before);
    let previous = &earlier[k - 1];
    // One-type: even parts reach back into the previous part, odd parts are
    // reached from it. Two-type reverses both.
    let towards_previous = (k % 2 == 0) == kind.one_type();
    part.iter().all(|&v| {
        if towards_previous {
            let reach = region.reachable_from(v);
            previous.iter().any(|w| reach.contains(w))
        } else {
            previous.iter().any(|&w| region.path_exists(w, v))
        }
    })
}

/// Whether `s` satisfies the conditions of its declared kind on `q` and its
/// completeness flag matches. Malformed partitions are errors.
pub fn validate_partition(q: &Quiver, s: &PartPartition) -> Result<bool> {
    structural_check(q, s)?;
    if s.complete != (s.union() == *q.vertices()) {
        return Ok(false);
    }
    Ok((1..s.parts.len()).all(|k| part_ok(q, s.kind, &s.parts[..k], &s.parts[k])))
}

/// Like [`validate_partition`] but with a descriptive error.
pub fn check_partition(q: &Quiver, s: &PartPartition) -> Result<()> {
    structural_check(q, s)?;
    let covered = s.union() == *q.vertices();
    if s.complete != covered {
        return Err(Error::InvalidPartition {
            kind: s.kind.to_string(),
            reason: format!("declared complete = {} but the parts cover all vertices = {covered}", s.complete),
        });
    }
    for k in 1..s.parts.len() {
        if !part_ok(q, s.kind, &s.parts[..k], &s.parts[k]) {
            return Err(Error::InvalidPartition { kind: s.kind.to_string(), reason: format!("part {k} fails") });
        }
    }
    Ok(())
}

fn subsets(pool: &[Vertex]) -> impl Iterator<Item = BTreeSet<Vertex>> + '_ {
    (0u64..1 << pool.len()).map(move |mask| {
        pool.iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect()
    })
}

/// Every valid partition of the given kind, sorted by parts.
pub fn enumerate_partitions(q: &Quiver, kind: PartitionKind, complete: bool) -> Vec<PartPartition> {
    fn extend(
        q: &Quiver,
        kind: PartitionKind,
        complete: bool,
        parts: &mut Vec<BTreeSet<Vertex>>,
        out: &mut Vec<PartPartition>,
    ) {
        let used: BTreeSet<Vertex> = parts.iter().flatten().copied().collect();
        let remaining: Vec<Vertex> = q.vertices().difference(&used).copied().collect();
        if remaining.is_empty() == complete {
            out.push(PartPartition { parts: parts.clone(), kind, complete });
        }
        if remaining.is_empty() {
            return;
        }
        for next in subsets(&remaining).filter(|p| !p.is_empty()) {
            if part_ok(q, kind, parts, &next) {
                parts.push(next);
                extend(q, kind, complete, parts, out);
                parts.pop();
            }
        }
    }

    let pool: Vec<Vertex> = q.vertices().iter().copied().collect();
    let mut out = Vec::new();
    for first in subsets(&pool) {
        let mut parts = vec![first];
        extend(q, kind, complete, &mut parts, &mut out);
    }
    out.sort_by_key(PartPartition::key);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[&[Vertex]], kind: PartitionKind, complete: bool) -> PartPartition {
        PartPartition::new(parts.iter().map(|x| x.to_vec()).collect(), kind, complete).unwrap()
    }

    #[test]
    fn strong_examples_a2() {
        let q = Quiver::linear_an(2).unwrap();
        assert!(validate_partition(&q, &p(&[&[1, 2]], PartitionKind::Strong1, true)).unwrap());
        assert!(validate_partition(&q, &p(&[&[], &[1, 2]], PartitionKind::Strong1, true)).unwrap());
        assert!(validate_partition(&q, &p(&[&[1], &[2]], PartitionKind::Strong1, true)).unwrap());
        assert!(!validate_partition(&q, &p(&[&[], &[1], &[2]], PartitionKind::Strong1, true)).unwrap());
        assert!(!validate_partition(&q, &p(&[&[1]], PartitionKind::Strong1, true)).unwrap());
    }

    #[test]
    fn malformed() {
        let q = Quiver::linear_an(2).unwrap();
        assert!(PartPartition::new(vec![vec![2], vec![2]], PartitionKind::Strong1, true).is_err());
        assert!(PartPartition::new(vec![vec![], vec![]], PartitionKind::Strong1, true).is_err());
        let stray = PartPartition { parts: vec![[3].into()], kind: PartitionKind::Plain1, complete: false };
        assert_eq!(validate_partition(&q, &stray), Err(Error::UnknownVertex(3)));
    }

    #[test]
    fn catalan_counts() {
        let want = [2, 5, 14, 42, 132];
        for (n, &c) in (1..=5).zip(&want) {
            let q = Quiver::linear_an(n).unwrap();
            assert_eq!(enumerate_partitions(&q, PartitionKind::Strong1, true).len(), c, "n = {n}");
        }
    }

    #[test]
    fn a1_partitions() {
        let q = Quiver::linear_an(1).unwrap();
        let keys: Vec<_> = enumerate_partitions(&q, PartitionKind::Strong1, true).iter().map(|s| s.key()).collect();
        assert_eq!(keys, vec![vec![vec![], vec![1]], vec![vec![1]]]);
    }

    #[test]
    fn json_form() {
        let s = p(&[&[], &[2], &[1]], PartitionKind::Strong1, true);
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"{"parts":[[],[2],[1]],"kind":"strong1","complete":true}"#);
        assert_eq!(serde_json::from_str::<PartPartition>(&text).unwrap(), s);
    }

    #[test]
    fn plain_path_conditions() {
        let q = Quiver::linear_an(3).unwrap();
        // D_2 = {1} reaches D_1 = {2}; D_3 = {3} is not reached from {1}
        // once 2 is removed.
        assert!(!validate_partition(&q, &p(&[&[], &[2], &[1], &[3]], PartitionKind::Plain1, true)).unwrap());
        assert!(validate_partition(&q, &p(&[&[], &[3], &[1, 2]], PartitionKind::Plain1, true)).unwrap());
    }
}
