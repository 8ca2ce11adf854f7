//! The tube of rank `n`: finite-dimensional nilpotent representations of
//! the cyclic quiver on `n` vertices.
//!
//! `U(s, l)` is the uniserial module with socle `S_s` and length `l`. Its
//! composition factors climb `s, s+1, ..., s+l-1` (mod `n`), so the top is
//! `S_{s+l-1}`. Infinite subcategories are handled through descriptors that
//! combine a ray or coray with finitely many extra modules.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::category::{Category, Subcategory};
use crate::error::{Error, Result};
use crate::quiver::Vertex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TubeModule {
    pub socle: Vertex,
    pub length: u32,
}

impl TubeModule {
    pub fn new(socle: Vertex, length: u32) -> Self {
        TubeModule { socle, length }
    }
}

impl fmt::Display for TubeModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "U({},{})", self.socle, self.length)
    }
}

/// Reduces an arbitrary integer to a vertex label in `1..=rank`.
pub fn wrap(v: i64, rank: u32) -> Vertex {
    (v - 1).rem_euclid(i64::from(rank)) as Vertex + 1
}

/// The tube of a fixed rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Tube {
    rank: u32,
}

impl Tube {
    pub fn new(rank: u32) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroSize(rank));
        }
        Ok(Tube { rank })
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn check(&self, x: &TubeModule) -> Result<()> {
        if x.length == 0 || x.socle == 0 || x.socle > self.rank {
            return Err(Error::UnknownObject(x.to_string()));
        }
        Ok(())
    }

    pub fn top(&self, x: &TubeModule) -> Vertex {
        wrap(i64::from(x.socle) + i64::from(x.length) - 1, self.rank)
    }

    /// Vertices of the composition factors counted with multiplicity.
    pub fn dim_vector(&self, x: &TubeModule) -> Vec<u32> {
        let mut dims = vec![0; self.rank as usize];
        for k in 0..x.length {
            dims[(wrap(i64::from(x.socle) + i64::from(k), self.rank) - 1) as usize] += 1;
        }
        dims
    }

    /// Number of `l` in `1..=min(len x, len y)` such that the length-`l`
    /// quotient of `x` is the length-`l` submodule of `y`.
    pub fn hom_dim(&self, x: &TubeModule, y: &TubeModule) -> usize {
        let n = i64::from(self.rank);
        (1..=x.length.min(y.length))
            .filter(|&l| {
                (i64::from(x.socle) + i64::from(x.length) - i64::from(l) - i64::from(y.socle)).rem_euclid(n) == 0
            })
            .count()
    }

    /// `tau U(s,l) = U(s-1,l)`.
    pub fn tau(&self, x: &TubeModule) -> TubeModule {
        TubeModule::new(wrap(i64::from(x.socle) - 1, self.rank), x.length)
    }

    pub fn tau_inv(&self, x: &TubeModule) -> TubeModule {
        TubeModule::new(wrap(i64::from(x.socle) + 1, self.rank), x.length)
    }

    /// Auslander-Reiten formula; the tube has no projectives.
    pub fn ext_dim(&self, x: &TubeModule, y: &TubeModule) -> usize {
        self.hom_dim(y, &self.tau(x))
    }

    pub fn submodules(&self, x: &TubeModule) -> Vec<TubeModule> {
        (1..=x.length).map(|l| TubeModule::new(x.socle, l)).collect()
    }

    pub fn quotients(&self, x: &TubeModule) -> Vec<TubeModule> {
        (1..=x.length)
            .map(|l| TubeModule::new(wrap(i64::from(x.socle) + i64::from(x.length - l), self.rank), l))
            .collect()
    }

    /// All modules with length at most `cap`, ordered by length then socle.
    pub fn up_to(&self, cap: u32) -> Vec<TubeModule> {
        (1..=cap)
            .flat_map(|l| (1..=self.rank).map(move |s| TubeModule::new(s, l)))
            .collect()
    }
}

/// Rank-checked entry points mirroring the methods on [`Tube`].
pub fn hom_dim_tube(rank: u32, x: &TubeModule, y: &TubeModule) -> Result<usize> {
    let tube = Tube::new(rank)?;
    tube.check(x)?;
    tube.check(y)?;
    Ok(tube.hom_dim(x, y))
}

pub fn ext_dim_tube(rank: u32, x: &TubeModule, y: &TubeModule) -> Result<usize> {
    let tube = Tube::new(rank)?;
    tube.check(x)?;
    tube.check(y)?;
    Ok(tube.ext_dim(x, y))
}

/// The finite model of the tube cut off above a length.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TruncatedTube {
    tube: Tube,
    cap: u32,
}

impl TruncatedTube {
    pub fn new(rank: u32, cap: u32) -> Result<Self> {
        if cap == 0 {
            return Err(Error::ZeroCap);
        }
        Ok(TruncatedTube { tube: Tube::new(rank)?, cap })
    }

    pub fn tube(&self) -> &Tube {
        &self.tube
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }
}

impl Category for TruncatedTube {
    type Obj = TubeModule;

    fn objects(&self) -> Vec<TubeModule> {
        self.tube.up_to(self.cap)
    }

    fn hom_dim(&self, x: &TubeModule, y: &TubeModule) -> usize {
        self.tube.hom_dim(x, y)
    }

    fn ext_dim(&self, x: &TubeModule, y: &TubeModule) -> usize {
        self.tube.ext_dim(x, y)
    }

    fn submodules(&self, x: &TubeModule) -> Vec<TubeModule> {
        self.tube.submodules(x)
    }

    fn quotients(&self, x: &TubeModule) -> Vec<TubeModule> {
        self.tube.quotients(x)
    }

    fn quotient_by(&self, x: &TubeModule, sub: &TubeModule) -> Option<TubeModule> {
        assert!(sub.socle == x.socle && sub.length <= x.length, "{sub} is not a submodule of {x}");
        (sub.length < x.length).then(|| {
            TubeModule::new(
                wrap(i64::from(x.socle) + i64::from(sub.length), self.tube.rank),
                x.length - sub.length,
            )
        })
    }

    fn glue(&self, top: &TubeModule, sub: &TubeModule) -> Option<TubeModule> {
        let fits = top.socle == wrap(i64::from(sub.socle) + i64::from(sub.length), self.tube.rank);
        let length = top.length + sub.length;
        (fits && length <= self.cap).then(|| TubeModule::new(sub.socle, length))
    }
}

/// Shape of a possibly infinite subcategory of the tube.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum DescriptorKind {
    #[serde(rename = "finite")]
    Finite,
    /// Modules whose top lies in `delta`, plus the finite part.
    #[serde(rename = "coray+finite")]
    CorayFinite,
    /// Modules whose socle lies in `delta`, plus the finite part.
    #[serde(rename = "ray+finite")]
    RayFinite,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TubeSubcategory {
    pub rank: u32,
    pub kind: DescriptorKind,
    pub delta: BTreeSet<Vertex>,
    pub finite: BTreeSet<TubeModule>,
}

impl TubeSubcategory {
    pub fn finite(rank: u32, finite: BTreeSet<TubeModule>) -> Self {
        TubeSubcategory { rank, kind: DescriptorKind::Finite, delta: BTreeSet::new(), finite }
    }

    pub fn coray(rank: u32, delta: BTreeSet<Vertex>) -> Self {
        TubeSubcategory { rank, kind: DescriptorKind::CorayFinite, delta, finite: BTreeSet::new() }
    }

    pub fn ray(rank: u32, delta: BTreeSet<Vertex>) -> Self {
        TubeSubcategory { rank, kind: DescriptorKind::RayFinite, delta, finite: BTreeSet::new() }
    }

    pub fn with_finite(mut self, extra: impl IntoIterator<Item = TubeModule>) -> Self {
        self.finite.extend(extra);
        self
    }

    pub fn contains(&self, x: &TubeModule) -> bool {
        let tube = Tube { rank: self.rank };
        self.finite.contains(x)
            || match self.kind {
                DescriptorKind::Finite => false,
                DescriptorKind::CorayFinite => self.delta.contains(&tube.top(x)),
                DescriptorKind::RayFinite => self.delta.contains(&x.socle),
            }
    }

    /// Members of length at most `cap`.
    pub fn truncate(&self, cap: u32) -> Result<Subcategory<TubeModule>> {
        if cap == 0 {
            return Err(Error::ZeroCap);
        }
        Ok(Tube::new(self.rank)?.up_to(cap).into_iter().filter(|x| self.contains(x)).collect())
    }

    /// Vertices that are the top, respectively the socle, of infinitely
    /// many members.
    pub fn l_r_sets(&self) -> (BTreeSet<Vertex>, BTreeSet<Vertex>) {
        let all: BTreeSet<Vertex> = (1..=self.rank).collect();
        match self.kind {
            _ if self.delta.is_empty() => (BTreeSet::new(), BTreeSet::new()),
            DescriptorKind::Finite => (BTreeSet::new(), BTreeSet::new()),
            DescriptorKind::CorayFinite => (self.delta.clone(), all),
            DescriptorKind::RayFinite => (all, self.delta.clone()),
        }
    }
}

pub fn ray(rank: u32, delta: BTreeSet<Vertex>) -> TubeSubcategory {
    TubeSubcategory::ray(rank, delta)
}

pub fn coray(rank: u32, delta: BTreeSet<Vertex>) -> TubeSubcategory {
    TubeSubcategory::coray(rank, delta)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(s: Vertex, l: u32) -> TubeModule {
        TubeModule::new(s, l)
    }

    fn set(v: &[Vertex]) -> BTreeSet<Vertex> {
        v.iter().copied().collect()
    }

    #[test]
    fn tops() {
        let t = Tube::new(3).unwrap();
        assert_eq!(t.top(&u(1, 1)), 1);
        assert_eq!(t.top(&u(2, 2)), 3);
        assert_eq!(t.top(&u(3, 2)), 1);
        assert_eq!(t.top(&u(2, 7)), 2);
    }

    #[test]
    fn hom_examples() {
        assert_eq!(hom_dim_tube(1, &u(1, 1), &u(1, 1)).unwrap(), 1);
        assert_eq!(hom_dim_tube(2, &u(1, 2), &u(2, 2)).unwrap(), 1);
        assert_eq!(hom_dim_tube(2, &u(1, 1), &u(2, 1)).unwrap(), 0);
        assert_eq!(hom_dim_tube(1, &u(1, 3), &u(1, 2)).unwrap(), 2);
        assert!(hom_dim_tube(2, &u(3, 1), &u(1, 1)).is_err());
    }

    #[test]
    fn ext_examples() {
        assert_eq!(ext_dim_tube(1, &u(1, 1), &u(1, 1)).unwrap(), 1);
        assert_eq!(ext_dim_tube(2, &u(1, 1), &u(1, 1)).unwrap(), 0);
        // The extension of S_1 by S_3 is U(3,2), whose top is 1.
        let t = Tube::new(3).unwrap();
        assert_eq!(t.ext_dim(&u(1, 1), &u(3, 1)), 1);
        assert_eq!(t.top(&u(3, 2)), 1);
    }

    #[test]
    fn tau_preserves_length_and_cycles() {
        let t = Tube::new(2).unwrap();
        assert_eq!(t.tau(&u(1, 3)), u(2, 3));
        let t3 = Tube::new(3).unwrap();
        let x = u(2, 4);
        assert_eq!(t3.tau(&t3.tau(&t3.tau(&x))), x);
        assert_eq!(t3.tau_inv(&t3.tau(&x)), x);
    }

    #[test]
    fn truncation() {
        let d = coray(2, set(&[1]));
        let got: Vec<_> = d.truncate(2).unwrap().into_iter().collect();
        assert_eq!(got, vec![u(1, 1), u(2, 2)]);
        assert_eq!(d.truncate(0), Err(Error::ZeroCap));
        let r = ray(2, set(&[1, 2]));
        assert_eq!(r.truncate(3).unwrap().len(), 6);
    }

    #[test]
    fn l_r() {
        let d = coray(2, set(&[1]));
        assert_eq!(d.l_r_sets(), (set(&[1]), set(&[1, 2])));
        let r = ray(2, set(&[1, 2]));
        assert_eq!(r.l_r_sets().1, set(&[1, 2]));
        let f = TubeSubcategory::finite(2, [u(1, 1)].into_iter().collect());
        assert_eq!(f.l_r_sets(), (set(&[]), set(&[])));
    }

    #[test]
    fn truncated_model() {
        let m = TruncatedTube::new(2, 3).unwrap();
        assert_eq!(m.objects().len(), 6);
        assert_eq!(m.glue(&u(2, 1), &u(1, 1)), Some(u(1, 2)));
        assert_eq!(m.glue(&u(1, 1), &u(1, 1)), None);
        assert_eq!(m.glue(&u(1, 2), &u(2, 2)), None);
        assert_eq!(m.quotient_by(&u(1, 3), &u(1, 1)), Some(u(2, 2)));
        assert_eq!(m.quotients(&u(1, 3)), vec![u(1, 1), u(2, 2), u(1, 3)]);
    }

    #[test]
    fn descriptor_json() {
        let d = coray(2, set(&[1])).with_finite([u(2, 1)]);
        let text = serde_json::to_string(&d).unwrap();
        assert_eq!(
            text,
            r#"{"rank":2,"kind":"coray+finite","delta":[1],"finite":[{"socle":2,"length":1}]}"#
        );
        assert_eq!(serde_json::from_str::<TubeSubcategory>(&text).unwrap(), d);
    }
}
