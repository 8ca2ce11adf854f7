//! Modules over a disjoint union of linearly oriented A-type quivers.
//!
//! Every indecomposable is an interval module: the vertices of one chain
//! from position `i` to position `j`, with identity maps along the arrows.
//! The first vertex is the top and the last is the socle, so over
//! `linear_an(n)` the interval `[a,b]` has top `S_a` and socle `S_b`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::category::{Category, Subcategory};
use crate::error::{Error, Result};
use crate::oracle::euler_form;
use crate::quiver::{Quiver, Vertex};

/// Interval module given by its top and socle vertices. Serialized as the
/// pair `[top, socle]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(Vertex, Vertex)", into = "(Vertex, Vertex)")]
pub struct Interval {
    pub top: Vertex,
    pub socle: Vertex,
}

impl Interval {
    pub fn new(top: Vertex, socle: Vertex) -> Self {
        Interval { top, socle }
    }
}

impl From<(Vertex, Vertex)> for Interval {
    fn from((top, socle): (Vertex, Vertex)) -> Self {
        Interval { top, socle }
    }
}

impl From<Interval> for (Vertex, Vertex) {
    fn from(x: Interval) -> Self {
        (x.top, x.socle)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.top, self.socle)
    }
}

pub type DimVector = BTreeMap<Vertex, i64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCategory {
    quiver: Quiver,
    chains: Vec<Vec<Vertex>>,
    position: BTreeMap<Vertex, (usize, usize)>,
}

impl LinearCategory {
    pub fn new(quiver: Quiver) -> Result<Self> {
        let chains = quiver.chains()?;
        let position = chains
            .iter()
            .enumerate()
            .flat_map(|(c, chain)| chain.iter().enumerate().map(move |(i, &v)| (v, (c, i))))
            .collect();
        Ok(LinearCategory { quiver, chains, position })
    }

    /// Modules over `linear_an(n)`.
    pub fn linear(n: u32) -> Result<Self> {
        LinearCategory::new(Quiver::linear_an(n)?)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn chains(&self) -> &[Vec<Vertex>] {
        &self.chains
    }

    pub fn vertices(&self) -> &BTreeSet<Vertex> {
        self.quiver.vertices()
    }

    /// The category of the full subquiver on `keep`.
    pub fn restrict(&self, keep: &BTreeSet<Vertex>) -> Result<Self> {
        LinearCategory::new(self.quiver.subquiver(keep)?)
    }

    fn locate(&self, x: &Interval) -> Option<(usize, usize, usize)> {
        let &(c, i) = self.position.get(&x.top)?;
        let &(d, j) = self.position.get(&x.socle)?;
        (c == d && i <= j).then_some((c, i, j))
    }

    fn span(&self, x: &Interval) -> (usize, usize, usize) {
        self.locate(x).unwrap_or_else(|| panic!("{x} is not a module of this category"))
    }

    fn interval(&self, chain: usize, i: usize, j: usize) -> Interval {
        Interval::new(self.chains[chain][i], self.chains[chain][j])
    }

    pub fn contains(&self, x: &Interval) -> bool {
        self.locate(x).is_some()
    }

    pub fn check(&self, x: &Interval) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::UnknownObject(x.to_string()))
        }
    }

    pub fn check_all<'a>(&self, xs: impl IntoIterator<Item = &'a Interval>) -> Result<()> {
        xs.into_iter().try_for_each(|x| self.check(x))
    }

    pub fn support(&self, x: &Interval) -> BTreeSet<Vertex> {
        let (c, i, j) = self.span(x);
        self.chains[c][i..=j].iter().copied().collect()
    }

    pub fn dim_vector(&self, x: &Interval) -> DimVector {
        let support = self.support(x);
        self.vertices()
            .iter()
            .map(|&v| (v, i64::from(support.contains(&v))))
            .collect()
    }

    /// All intervals, `n(n+1)/2` for each chain of length `n`.
    pub fn indecomposables(&self) -> Vec<Interval> {
        let mut all: Vec<Interval> = self
            .chains
            .iter()
            .enumerate()
            .flat_map(|(c, chain)| {
                (0..chain.len()).flat_map(move |i| (i..chain.len()).map(move |j| (c, i, j)))
            })
            .map(|(c, i, j)| self.interval(c, i, j))
            .collect();
        all.sort();
        all
    }

    /// Indecomposable projective with top at `v`.
    pub fn projective_at(&self, v: Vertex) -> Result<Interval> {
        let &(c, i) = self.position.get(&v).ok_or(Error::UnknownVertex(v))?;
        Ok(self.interval(c, i, self.chains[c].len() - 1))
    }

    /// Indecomposable injective with socle at `v`.
    pub fn injective_at(&self, v: Vertex) -> Result<Interval> {
        let &(c, j) = self.position.get(&v).ok_or(Error::UnknownVertex(v))?;
        Ok(self.interval(c, 0, j))
    }

    pub fn projectives(&self) -> Vec<Interval> {
        self.vertices().iter().map(|&v| self.projective_at(v).unwrap()).collect()
    }

    pub fn injectives(&self) -> Vec<Interval> {
        self.vertices().iter().map(|&v| self.injective_at(v).unwrap()).collect()
    }

    /// Auslander-Reiten translate; `None` for projectives.
    pub fn tau(&self, x: &Interval) -> Option<Interval> {
        let (c, i, j) = self.span(x);
        (j + 1 < self.chains[c].len()).then(|| self.interval(c, i + 1, j + 1))
    }

    /// Inverse translate; `None` for injectives.
    pub fn tau_inv(&self, x: &Interval) -> Option<Interval> {
        let (c, i, j) = self.span(x);
        (i > 0).then(|| self.interval(c, i - 1, j - 1))
    }

    /// Members of `m` supported inside `keep`.
    pub fn restrict_support(&self, m: &Subcategory<Interval>, keep: &BTreeSet<Vertex>) -> Subcategory<Interval> {
        m.filter(|x| self.support(x).is_subset(keep))
    }

    pub fn euler(&self, x: &Interval, y: &Interval) -> i64 {
        euler_form(&self.dim_vector(x), &self.dim_vector(y), &self.quiver)
            .expect("linear quivers are acyclic")
    }
}

impl Category for LinearCategory {
    type Obj = Interval;

    fn objects(&self) -> Vec<Interval> {
        self.indecomposables()
    }

    /// One exactly when `y`'s top lies between `x`'s top and `y`'s socle,
    /// and `y`'s socle lies between that and `x`'s socle.
    fn hom_dim(&self, x: &Interval, y: &Interval) -> usize {
        let (c, a, b) = self.span(x);
        let (d, p, q) = self.span(y);
        usize::from(c == d && p <= a && a <= q && q <= b)
    }

    fn ext_dim(&self, x: &Interval, y: &Interval) -> usize {
        let (c, a, b) = self.span(x);
        let (d, p, q) = self.span(y);
        let ext = usize::from(c == d && a < p && p <= b + 1 && b < q);
        debug_assert_eq!(
            ext as i64,
            self.hom_dim(x, y) as i64 - self.euler(x, y),
            "ext rule disagrees with the Euler form on {x}, {y}"
        );
        ext
    }

    fn submodules(&self, x: &Interval) -> Vec<Interval> {
        let (c, i, j) = self.span(x);
        (i..=j).rev().map(|k| self.interval(c, k, j)).collect()
    }

    fn quotients(&self, x: &Interval) -> Vec<Interval> {
        let (c, i, j) = self.span(x);
        (i..=j).map(|k| self.interval(c, i, k)).collect()
    }

    fn quotient_by(&self, x: &Interval, sub: &Interval) -> Option<Interval> {
        let (c, i, j) = self.span(x);
        let (d, k, l) = self.span(sub);
        assert!(c == d && l == j && i <= k, "{sub} is not a submodule of {x}");
        (k > i).then(|| self.interval(c, i, k - 1))
    }

    fn glue(&self, top: &Interval, sub: &Interval) -> Option<Interval> {
        let (c, i, j) = self.span(top);
        let (d, k, l) = self.span(sub);
        (c == d && k == j + 1).then(|| self.interval(c, i, l))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{cogen_closure, extension_closure, gen_closure};

    fn iv(a: Vertex, b: Vertex) -> Interval {
        Interval::new(a, b)
    }

    fn sub(xs: &[(Vertex, Vertex)]) -> Subcategory<Interval> {
        xs.iter().map(|&p| Interval::from(p)).collect()
    }

    #[test]
    fn interval_counts() {
        for n in 1..=6 {
            let cat = LinearCategory::linear(n).unwrap();
            assert_eq!(cat.indecomposables().len() as u32, n * (n + 1) / 2);
        }
        let a3 = LinearCategory::linear(3).unwrap();
        let union = a3.restrict(&[1, 3].into_iter().collect()).unwrap();
        assert_eq!(union.indecomposables(), vec![iv(1, 1), iv(3, 3)]);
    }

    #[test]
    fn hom_examples() {
        let cat = LinearCategory::linear(3).unwrap();
        assert_eq!(cat.hom_dim(&iv(1, 1), &iv(1, 2)), 0);
        assert_eq!(cat.hom_dim(&iv(3, 3), &iv(1, 1)), 0);
        assert_eq!(cat.hom_dim(&iv(2, 3), &iv(1, 2)), 1);
        assert_eq!(cat.hom_dim(&iv(1, 2), &iv(1, 2)), 1);
        let a2 = LinearCategory::linear(2).unwrap();
        // [1,2] -> [1,1] is the quotient map, [2,2] -> [1,2] the inclusion.
        assert_eq!(a2.hom_dim(&iv(1, 2), &iv(1, 1)), 1);
        assert_eq!(a2.hom_dim(&iv(2, 2), &iv(1, 2)), 1);
    }

    #[test]
    fn ext_examples() {
        let a2 = LinearCategory::linear(2).unwrap();
        assert_eq!(a2.ext_dim(&iv(1, 1), &iv(2, 2)), 1);
        assert_eq!(a2.ext_dim(&iv(2, 2), &iv(1, 1)), 0);
        let a3 = LinearCategory::linear(3).unwrap();
        // Non-split 0 -> [2,3] -> [1,3] + [2,2] -> [1,2] -> 0.
        assert_eq!(a3.ext_dim(&iv(1, 2), &iv(2, 3)), 1);
    }

    #[test]
    fn projectives_injectives_tau() {
        let a4 = LinearCategory::linear(4).unwrap();
        assert_eq!(a4.projectives(), vec![iv(1, 4), iv(2, 4), iv(3, 4), iv(4, 4)]);
        assert_eq!(a4.injectives(), vec![iv(1, 1), iv(1, 2), iv(1, 3), iv(1, 4)]);
        assert_eq!(a4.tau(&iv(1, 2)), Some(iv(2, 3)));
        assert_eq!(a4.tau(&iv(2, 4)), None);
        assert_eq!(a4.tau_inv(&iv(2, 3)), Some(iv(1, 2)));
        assert_eq!(a4.tau_inv(&iv(1, 3)), None);
        let union = a4.restrict(&[1, 2, 4].into_iter().collect()).unwrap();
        assert_eq!(union.projectives(), vec![iv(1, 2), iv(2, 2), iv(4, 4)]);
    }

    #[test]
    fn closures() {
        let a3 = LinearCategory::linear(3).unwrap();
        assert_eq!(gen_closure(&a3, &sub(&[(1, 3)])), sub(&[(1, 1), (1, 2), (1, 3)]));
        assert_eq!(cogen_closure(&a3, &sub(&[(1, 3)])), sub(&[(3, 3), (2, 3), (1, 3)]));
        assert_eq!(
            extension_closure(&a3, &sub(&[(1, 1), (2, 2), (3, 3)])),
            sub(&[(1, 1), (2, 2), (3, 3), (1, 2), (2, 3), (1, 3)])
        );
        assert_eq!(extension_closure(&a3, &sub(&[(1, 2), (2, 3)])), sub(&[(1, 2), (2, 3)]));
    }

    #[test]
    fn support_restriction() {
        let a3 = LinearCategory::linear(3).unwrap();
        let all: Subcategory<Interval> = a3.indecomposables().into_iter().collect();
        let kept = a3.restrict_support(&all, &[2, 3].into_iter().collect());
        assert_eq!(kept, sub(&[(2, 2), (2, 3), (3, 3)]));
    }

    #[test]
    fn serialization() {
        assert_eq!(serde_json::to_string(&iv(1, 2)).unwrap(), "[1,2]");
        let s = sub(&[(2, 2), (1, 1)]);
        assert_eq!(serde_json::to_string(&s).unwrap(), "[[1,1],[2,2]]");
    }

    #[test]
    fn cyclic_residual_orientation() {
        let c = Quiver::cyclic_an(4).unwrap();
        let cat = LinearCategory::new(c.without(&[1].into_iter().collect())).unwrap();
        assert_eq!(cat.chains(), &[vec![4, 3, 2]]);
        assert_eq!(cat.projective_at(4).unwrap(), iv(4, 2));
        assert_eq!(cat.injective_at(2).unwrap(), iv(4, 2));
    }
}
