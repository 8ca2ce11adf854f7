//! The finite category interface shared by the A-type and truncated tube
//! models, plus the closure operations that only need that interface.

use std::collections::BTreeSet;
use std::fmt::{Debug, Display};
use std::hash::Hash;

use serde::{Deserialize, Serialize};

/// A Krull-Schmidt category with finitely many indecomposables, all of
/// them uniserial. Objects are the indecomposables; the zero object is
/// represented by `None` wherever it can occur.
pub trait Category {
    type Obj: Clone + Ord + Hash + Debug + Display;

    /// All indecomposables of the model in a fixed order.
    fn objects(&self) -> Vec<Self::Obj>;

    fn hom_dim(&self, x: &Self::Obj, y: &Self::Obj) -> usize;

    fn ext_dim(&self, x: &Self::Obj, y: &Self::Obj) -> usize;

    /// Nonzero submodules of `x` from the socle up to `x` itself.
    fn submodules(&self, x: &Self::Obj) -> Vec<Self::Obj>;

    /// Nonzero quotients of `x` from the top up to `x` itself.
    fn quotients(&self, x: &Self::Obj) -> Vec<Self::Obj>;

    /// `x / sub` where `sub` is a nonzero submodule of `x`.
    fn quotient_by(&self, x: &Self::Obj, sub: &Self::Obj) -> Option<Self::Obj>;

    /// The uniserial module with submodule `sub` and quotient `top`, when
    /// the two glue and the result is in the model.
    fn glue(&self, top: &Self::Obj, sub: &Self::Obj) -> Option<Self::Obj>;
}

/// A full additive subcategory, recorded by its indecomposables.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Subcategory<O: Ord>(BTreeSet<O>);

impl<O: Ord + Clone> Subcategory<O> {
    pub fn new() -> Self {
        Subcategory(BTreeSet::new())
    }

    pub fn contains(&self, x: &O) -> bool {
        self.0.contains(x)
    }

    pub fn insert(&mut self, x: O) -> bool {
        self.0.insert(x)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::collections::btree_set::Iter<'_, O> {
        self.0.iter()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.0.intersection(&other.0).cloned().collect()
    }

    pub fn union(&self, other: &Self) -> Self {
        self.0.union(&other.0).cloned().collect()
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.0.difference(&other.0).cloned().collect()
    }

    pub fn filter(&self, mut keep: impl FnMut(&O) -> bool) -> Self {
        self.0.iter().filter(|x| keep(x)).cloned().collect()
    }

    pub fn as_set(&self) -> &BTreeSet<O> {
        &self.0
    }

    pub fn into_set(self) -> BTreeSet<O> {
        self.0
    }
}

impl<O: Ord + Clone> Default for Subcategory<O> {
    fn default() -> Self {
        Subcategory::new()
    }
}

impl<O: Ord> FromIterator<O> for Subcategory<O> {
    fn from_iter<I: IntoIterator<Item = O>>(iter: I) -> Self {
        Subcategory(iter.into_iter().collect())
    }
}

impl<O: Ord> IntoIterator for Subcategory<O> {
    type Item = O;
    type IntoIter = std::collections::btree_set::IntoIter<O>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a, O: Ord> IntoIterator for &'a Subcategory<O> {
    type Item = &'a O;
    type IntoIter = std::collections::btree_set::Iter<'a, O>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl<O: Ord> From<BTreeSet<O>> for Subcategory<O> {
    fn from(set: BTreeSet<O>) -> Self {
        Subcategory(set)
    }
}

/// Every object of the model as a subcategory.
pub fn everything<C: Category>(cat: &C) -> Subcategory<C::Obj> {
    cat.objects().into_iter().collect()
}

/// Indecomposable quotients of members of `m`.
pub fn gen_closure<C: Category>(cat: &C, m: &Subcategory<C::Obj>) -> Subcategory<C::Obj> {
    m.iter().flat_map(|x| cat.quotients(x)).collect()
}

/// Indecomposable submodules of members of `m`.
pub fn cogen_closure<C: Category>(cat: &C, m: &Subcategory<C::Obj>) -> Subcategory<C::Obj> {
    m.iter().flat_map(|x| cat.submodules(x)).collect()
}

/// Least set containing `m` that is closed under gluing a member on top of
/// another member.
pub fn extension_closure<C: Category>(cat: &C, m: &Subcategory<C::Obj>) -> Subcategory<C::Obj> {
    let mut closed = m.clone();
    loop {
        let members: Vec<C::Obj> = closed.iter().cloned().collect();
        let mut grew = false;
        for top in &members {
            for sub in &members {
                if let Some(e) = cat.glue(top, sub) {
                    grew |= closed.insert(e);
                }
            }
        }
        if !grew {
            return closed;
        }
    }
}

/// Extension closure of the union of several subcategories.
pub fn span<'a, C: Category + 'a>(
    cat: &C,
    parts: impl IntoIterator<Item = &'a Subcategory<C::Obj>>,
) -> Subcategory<C::Obj>
where
    C::Obj: 'a,
{
    let union: Subcategory<C::Obj> = parts.into_iter().flat_map(|p| p.iter().cloned()).collect();
    extension_closure(cat, &union)
}
