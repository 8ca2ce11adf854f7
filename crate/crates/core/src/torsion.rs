//! Torsion pairs, n-torsion pairs and the operations relating them, over
//! any [`Category`] model.
//!
//! An n-torsion pair is a tuple of `n + 1` subcategories `(C_1, ..., C_{n+1})`
//! with `Hom(C_i, C_j) = 0` for `i < j` such that every object has a
//! filtration whose factors run through `C_1, ..., C_{n+1}` in order. Parts
//! may be empty. Part indices in this module are zero-based.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::category::{everything, span, Category, Subcategory};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(bound(serialize = "O: Serialize", deserialize = "O: Deserialize<'de>"))]
pub struct TorsionPair<O: Ord> {
    pub torsion: Subcategory<O>,
    pub free: Subcategory<O>,
}

impl<O: Ord + Clone> TorsionPair<O> {
    pub fn new(torsion: Subcategory<O>, free: Subcategory<O>) -> Self {
        TorsionPair { torsion, free }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(bound(serialize = "O: Serialize", deserialize = "O: Deserialize<'de>"))]
pub struct NTorsionPair<O: Ord> {
    pub parts: Vec<Subcategory<O>>,
}

/// Torsion pairs `(T_1, F_1), ..., (T_n, F_n)` with `T_1 ⊆ ... ⊆ T_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound(serialize = "O: Serialize", deserialize = "O: Deserialize<'de>"))]
pub struct TorsionSeries<O: Ord> {
    pub pairs: Vec<TorsionPair<O>>,
}

/// Why a candidate pair fails the torsion-pair axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairViolation<O> {
    /// An object of the pair lies outside the ambient category.
    OutsideAmbient(O),
    /// A nonzero map from a torsion object to a free one.
    Hom { torsion: O, free: O },
    /// An ambient object with no short exact sequence `T -> X -> F`.
    NoCanonicalSequence(O),
}

impl<O: fmt::Display> fmt::Display for PairViolation<O> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairViolation::OutsideAmbient(x) => write!(f, "{x} is outside the ambient category"),
            PairViolation::Hom { torsion, free } => {
                write!(f, "orthogonality fails: Hom({torsion}, {free}) != 0")
            }
            PairViolation::NoCanonicalSequence(x) => {
                write!(f, "canonical sequence fails: {x} has no torsion-free decomposition")
            }
        }
    }
}

/// Why a tuple of parts fails to be an n-torsion pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NtpViolation<O> {
    OutsideAmbient(O),
    Hom { earlier: usize, later: usize, from: O, to: O },
    NoFiltration(O),
}

impl<O: fmt::Display> fmt::Display for NtpViolation<O> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NtpViolation::OutsideAmbient(x) => write!(f, "{x} is outside the ambient category"),
            NtpViolation::Hom { earlier, later, from, to } => write!(
                f,
                "orthogonality fails: Hom({from}, {to}) != 0 with {from} in part {earlier} and {to} in part {later}"
            ),
            NtpViolation::NoFiltration(x) => write!(f, "{x} has no filtration by the parts in order"),
        }
    }
}

/// `{M : Hom(M, N) = 0 for all N in d}`.
pub fn perp_left<C: Category>(cat: &C, d: &Subcategory<C::Obj>) -> Subcategory<C::Obj> {
    cat.objects()
        .into_iter()
        .filter(|m| d.iter().all(|n| cat.hom_dim(m, n) == 0))
        .collect()
}

/// `{N : Hom(M, N) = 0 for all M in d}`.
pub fn perp_right<C: Category>(cat: &C, d: &Subcategory<C::Obj>) -> Subcategory<C::Obj> {
    cat.objects()
        .into_iter()
        .filter(|n| d.iter().all(|m| cat.hom_dim(m, n) == 0))
        .collect()
}

/// Largest submodule of `x` lying in `t`, if any is nonzero.
pub fn torsion_submodule<C: Category>(cat: &C, t: &Subcategory<C::Obj>, x: &C::Obj) -> Option<C::Obj> {
    cat.submodules(x).into_iter().rev().find(|s| t.contains(s))
}

/// Checks that `(t, f)` is a torsion pair on `ambient`: `Hom(t, f) = 0` and
/// every ambient object is an extension of a member of `f` by one of `t`.
pub fn is_torsion_pair<C: Category>(
    cat: &C,
    ambient: &Subcategory<C::Obj>,
    t: &Subcategory<C::Obj>,
    f: &Subcategory<C::Obj>,
) -> std::result::Result<(), PairViolation<C::Obj>> {
    if let Some(x) = t.iter().chain(f.iter()).find(|x| !ambient.contains(x)) {
        return Err(PairViolation::OutsideAmbient(x.clone()));
    }
    for x in t {
        if let Some(y) = f.iter().find(|y| cat.hom_dim(x, y) != 0) {
            return Err(PairViolation::Hom { torsion: x.clone(), free: y.clone() });
        }
    }
    for x in ambient {
        let zero_sub = std::iter::once(None);
        let mut cuts = zero_sub.chain(cat.submodules(x).into_iter().map(Some));
        let ok = cuts.any(|sub| {
            let sub_ok = sub.as_ref().map_or(true, |s| t.contains(s));
            let quotient = match &sub {
                None => Some(x.clone()),
                Some(s) => cat.quotient_by(x, s),
            };
            sub_ok && quotient.map_or(true, |q| f.contains(&q))
        });
        if !ok {
            return Err(PairViolation::NoCanonicalSequence(x.clone()));
        }
    }
    Ok(())
}

pub fn check_torsion_pair<C: Category>(
    cat: &C,
    ambient: &Subcategory<C::Obj>,
    tp: &TorsionPair<C::Obj>,
) -> Result<()> {
    is_torsion_pair(cat, ambient, &tp.torsion, &tp.free).map_err(|v| Error::NotTorsionPair(v.to_string()))
}

/// A filtration `0 = X_0 ⊆ X_1 ⊆ ... ⊆ X_{k} = X` indexed by the parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration<O> {
    /// `chain[i]` is `X_i`; `None` is the zero module.
    pub chain: Vec<Option<O>>,
    /// `factors[i]` is `X_{i+1} / X_i`, lying in part `i` or zero.
    pub factors: Vec<Option<O>>,
}

/// The filtration of `x` whose factors lie in the parts in order, if one
/// exists. For an n-torsion pair it exists and is unique.
pub fn filtration<C: Category>(cat: &C, parts: &[Subcategory<C::Obj>], x: &C::Obj) -> Option<Filtration<C::Obj>> {
    let subs = cat.submodules(x);
    let len = subs.len();
    let sub_at = |k: usize| (k > 0).then(|| subs[k - 1].clone());
    // Factor between the submodules at chain positions j <= k.
    let factor = |j: usize, k: usize| -> Option<C::Obj> {
        if j == k {
            None
        } else if j == 0 {
            Some(subs[k - 1].clone())
        } else {
            cat.quotient_by(&subs[k - 1], &subs[j - 1])
        }
    };
    let fits = |part: &Subcategory<C::Obj>, j: usize, k: usize| factor(j, k).map_or(true, |q| part.contains(&q));

    // reach[i][k]: after i parts the filtration can stand at position k.
    let mut reach = vec![vec![false; len + 1]; parts.len() + 1];
    reach[0][0] = true;
    for (i, part) in parts.iter().enumerate() {
        for j in 0..=len {
            if reach[i][j] {
                for (k, slot) in reach[i + 1].iter_mut().enumerate().skip(j) {
                    if fits(part, j, k) {
                        *slot = true;
                    }
                }
            }
        }
    }
    if !reach[parts.len()][len] {
        return None;
    }
    let mut positions = vec![len];
    let mut k = len;
    for i in (0..parts.len()).rev() {
        let j = (0..=k).find(|&j| reach[i][j] && fits(&parts[i], j, k)).expect("reachable");
        positions.push(j);
        k = j;
    }
    positions.reverse();
    Some(Filtration {
        chain: positions.iter().map(|&p| sub_at(p)).collect(),
        factors: positions.windows(2).map(|w| factor(w[0], w[1])).collect(),
    })
}

/// Checks the n-torsion pair conditions for `parts` on `ambient`.
pub fn is_ntp<C: Category>(
    cat: &C,
    ambient: &Subcategory<C::Obj>,
    parts: &[Subcategory<C::Obj>],
) -> std::result::Result<(), NtpViolation<C::Obj>> {
    for part in parts {
        if let Some(x) = part.iter().find(|x| !ambient.contains(x)) {
            return Err(NtpViolation::OutsideAmbient(x.clone()));
        }
    }
    for (i, earlier) in parts.iter().enumerate() {
        for (j, later) in parts.iter().enumerate().skip(i + 1) {
            for x in earlier {
                if let Some(y) = later.iter().find(|y| cat.hom_dim(x, y) != 0) {
                    return Err(NtpViolation::Hom { earlier: i, later: j, from: x.clone(), to: y.clone() });
                }
            }
        }
    }
    match ambient.iter().find(|x| filtration(cat, parts, x).is_none()) {
        Some(x) => Err(NtpViolation::NoFiltration(x.clone())),
        None => Ok(()),
    }
}

pub fn check_ntp<C: Category>(cat: &C, ambient: &Subcategory<C::Obj>, parts: &[Subcategory<C::Obj>]) -> Result<()> {
    is_ntp(cat, ambient, parts).map_err(|v| Error::NotNTorsionPair(v.to_string()))
}

/// `(T_1, F_1 ∩ T_2, ..., F_{n-1} ∩ T_n, F_n)`.
pub fn series_to_ntp<O: Ord + Clone>(series: &TorsionSeries<O>) -> Result<NTorsionPair<O>> {
    let pairs = &series.pairs;
    if pairs.is_empty() {
        return Err(Error::NotNested(0));
    }
    for (i, w) in pairs.windows(2).enumerate() {
        if !w[0].torsion.is_subset(&w[1].torsion) {
            return Err(Error::NotNested(i));
        }
    }
    let mut parts = vec![pairs[0].torsion.clone()];
    parts.extend(pairs.windows(2).map(|w| w[0].free.intersection(&w[1].torsion)));
    parts.push(pairs[pairs.len() - 1].free.clone());
    Ok(NTorsionPair { parts })
}

/// `(T_i, F_i) = (<C_1..C_i>, <C_{i+1}..C_{n+1}>)` for `i = 1..n`.
pub fn ntp_to_series<C: Category>(cat: &C, ntp: &NTorsionPair<C::Obj>) -> Result<TorsionSeries<C::Obj>> {
    check_ntp(cat, &everything(cat), &ntp.parts)?;
    let k = ntp.parts.len();
    let pairs = (1..k)
        .map(|i| TorsionPair::new(span(cat, &ntp.parts[..i]), span(cat, &ntp.parts[i..])))
        .collect();
    Ok(TorsionSeries { pairs })
}

/// Splits each member of `d` along its canonical sequence: the torsion
/// submodules and the free quotients, zeros dropped.
pub fn decompose_along<C: Category>(
    cat: &C,
    tp: &TorsionPair<C::Obj>,
    d: &Subcategory<C::Obj>,
) -> (Subcategory<C::Obj>, Subcategory<C::Obj>) {
    let mut torsion = Subcategory::new();
    let mut free = Subcategory::new();
    for m in d {
        match torsion_submodule(cat, &tp.torsion, m) {
            Some(t) => {
                if let Some(q) = cat.quotient_by(m, &t) {
                    free.insert(q);
                }
                torsion.insert(t);
            }
            None => {
                free.insert(m.clone());
            }
        }
    }
    (torsion, free)
}

/// Replaces part `index` by the parts of `sub`, which must form an
/// n-torsion pair on that part.
pub fn refine<C: Category>(
    cat: &C,
    ntp: &NTorsionPair<C::Obj>,
    index: usize,
    sub: &NTorsionPair<C::Obj>,
) -> Result<NTorsionPair<C::Obj>> {
    let target = ntp
        .parts
        .get(index)
        .ok_or(Error::IndexOutOfRange { index, len: ntp.parts.len() })?;
    is_ntp(cat, target, &sub.parts).map_err(|v| Error::AmbientMismatch(v.to_string()))?;
    let mut parts = ntp.parts[..index].to_vec();
    parts.extend(sub.parts.iter().cloned());
    parts.extend(ntp.parts[index + 1..].iter().cloned());
    Ok(NTorsionPair { parts })
}

/// Replaces parts `start..=start + extra` by the extension closure of their
/// union.
pub fn merge_parts<C: Category>(
    cat: &C,
    ntp: &NTorsionPair<C::Obj>,
    start: usize,
    extra: usize,
) -> Result<NTorsionPair<C::Obj>> {
    let end = start + extra;
    if end >= ntp.parts.len() {
        return Err(Error::IndexOutOfRange { index: end, len: ntp.parts.len() });
    }
    let mut parts = ntp.parts[..start].to_vec();
    parts.push(span(cat, &ntp.parts[start..=end]));
    parts.extend(ntp.parts[end + 1..].iter().cloned());
    Ok(NTorsionPair { parts })
}

/// Completes parts whose prefix and suffix closures form torsion pairs to
/// the unique n-torsion pair containing them part by part.
pub fn complete_defect<C: Category>(cat: &C, parts: &[Subcategory<C::Obj>]) -> Result<NTorsionPair<C::Obj>> {
    let all = everything(cat);
    let k = parts.len();
    if k == 0 {
        return Err(Error::NotNTorsionPair("no parts".into()));
    }
    let mut torsion = vec![Subcategory::new()];
    let mut free = vec![all.clone()];
    for i in 1..k {
        let t = span(cat, &parts[..i]);
        let f = span(cat, &parts[i..]);
        is_torsion_pair(cat, &all, &t, &f)
            .map_err(|v| Error::NotTorsionPair(format!("cut after part {}: {v}", i - 1)))?;
        torsion.push(t);
        free.push(f);
    }
    torsion.push(all.clone());
    free.push(Subcategory::new());
    let parts = (1..=k).map(|i| free[i - 1].intersection(&torsion[i])).collect();
    Ok(NTorsionPair { parts })
}

/// `(T', F') ↦ (<T_1, T'>, <F', F_2>)` for a torsion pair `(T', F')` on
/// `F_1 ∩ T_2`.
pub fn interval_bijection_f<C: Category>(
    cat: &C,
    outer: (&TorsionPair<C::Obj>, &TorsionPair<C::Obj>),
    inner: &TorsionPair<C::Obj>,
) -> Result<TorsionPair<C::Obj>> {
    let (first, second) = outer;
    if !first.torsion.is_subset(&second.torsion) {
        return Err(Error::NotNested(0));
    }
    let window = first.free.intersection(&second.torsion);
    is_torsion_pair(cat, &window, &inner.torsion, &inner.free).map_err(|v| Error::AmbientMismatch(v.to_string()))?;
    Ok(TorsionPair::new(
        span(cat, [&first.torsion, &inner.torsion]),
        span(cat, [&inner.free, &second.free]),
    ))
}

/// `(T_3, F_3) ↦ (T_3 ∩ F_1, F_3 ∩ T_2)` for `T_1 ⊆ T_3 ⊆ T_2`.
pub fn interval_bijection_g<O: Ord + Clone>(
    outer: (&TorsionPair<O>, &TorsionPair<O>),
    middle: &TorsionPair<O>,
) -> Result<TorsionPair<O>> {
    let (first, second) = outer;
    if !first.torsion.is_subset(&middle.torsion) {
        return Err(Error::NotNested(0));
    }
    if !middle.torsion.is_subset(&second.torsion) {
        return Err(Error::NotNested(1));
    }
    Ok(TorsionPair::new(
        middle.torsion.intersection(&first.free),
        middle.free.intersection(&second.torsion),
    ))
}

/// Members `x` of `members` with `Ext(x, y) = 0` for every `y` in `within`.
pub fn ext_projectives_in<C: Category>(
    cat: &C,
    members: &Subcategory<C::Obj>,
    within: &Subcategory<C::Obj>,
) -> Subcategory<C::Obj> {
    members.filter(|x| within.iter().all(|y| cat.ext_dim(x, y) == 0))
}

/// Members `x` of `members` with `Ext(y, x) = 0` for every `y` in `within`.
pub fn ext_injectives_in<C: Category>(
    cat: &C,
    members: &Subcategory<C::Obj>,
    within: &Subcategory<C::Obj>,
) -> Subcategory<C::Obj> {
    members.filter(|x| within.iter().all(|y| cat.ext_dim(y, x) == 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::an::{Interval, LinearCategory};

    fn s(xs: &[(u32, u32)]) -> Subcategory<Interval> {
        xs.iter().map(|&p| Interval::from(p)).collect()
    }

    fn a2() -> LinearCategory {
        LinearCategory::linear(2).unwrap()
    }

    #[test]
    fn perpendiculars() {
        let cat = a2();
        assert_eq!(perp_right(&cat, &s(&[(2, 2)])), s(&[(1, 1)]));
        assert_eq!(perp_left(&cat, &s(&[(1, 1)])), s(&[(2, 2)]));
        assert_eq!(perp_right(&cat, &everything(&cat)), s(&[]));
    }

    #[test]
    fn torsion_pair_examples() {
        let cat = a2();
        let all = everything(&cat);
        assert!(is_torsion_pair(&cat, &all, &s(&[(2, 2)]), &s(&[(1, 1)])).is_ok());
        assert_eq!(
            is_torsion_pair(&cat, &all, &s(&[(1, 2)]), &s(&[(1, 1)])),
            Err(PairViolation::Hom { torsion: Interval::new(1, 2), free: Interval::new(1, 1) })
        );
        assert!(matches!(
            is_torsion_pair(&cat, &all, &s(&[(1, 1)]), &s(&[(2, 2)])),
            Err(PairViolation::NoCanonicalSequence(_))
        ));
    }

    #[test]
    fn alpha_beta_example() {
        let cat = a2();
        let series = TorsionSeries {
            pairs: vec![
                TorsionPair::new(s(&[(2, 2)]), s(&[(1, 1)])),
                TorsionPair::new(s(&[(1, 1), (1, 2), (2, 2)]), s(&[])),
            ],
        };
        let ntp = series_to_ntp(&series).unwrap();
        assert_eq!(ntp.parts, vec![s(&[(2, 2)]), s(&[(1, 1)]), s(&[])]);
        assert_eq!(ntp_to_series(&cat, &ntp).unwrap(), series);
    }

    #[test]
    fn ntp_examples() {
        let cat = a2();
        let all = everything(&cat);
        assert!(is_ntp(&cat, &all, &[s(&[(2, 2)]), s(&[(1, 1)]), s(&[])]).is_ok());
        assert_eq!(
            is_ntp(&cat, &all, &[s(&[(1, 1)]), s(&[(2, 2)])]),
            Err(NtpViolation::NoFiltration(Interval::new(1, 2)))
        );
    }

    #[test]
    fn filtration_example() {
        let cat = a2();
        let parts = [s(&[(2, 2)]), s(&[(1, 1)]), s(&[])];
        let f = filtration(&cat, &parts, &Interval::new(1, 2)).unwrap();
        assert_eq!(f.factors, vec![Some(Interval::new(2, 2)), Some(Interval::new(1, 1)), None]);
        assert_eq!(f.chain.last().unwrap(), &Some(Interval::new(1, 2)));
    }

    #[test]
    fn merge_example() {
        let cat = a2();
        let ntp = NTorsionPair { parts: vec![s(&[(2, 2)]), s(&[(1, 1)]), s(&[])] };
        let merged = merge_parts(&cat, &ntp, 0, 1).unwrap();
        assert_eq!(merged.parts, vec![s(&[(1, 1), (1, 2), (2, 2)]), s(&[])]);
        assert!(merge_parts(&cat, &ntp, 2, 1).is_err());
    }

    #[test]
    fn decompose_along_example() {
        let cat = a2();
        let tp = TorsionPair::new(s(&[(2, 2)]), s(&[(1, 1)]));
        let (t, f) = decompose_along(&cat, &tp, &s(&[(1, 2)]));
        assert_eq!((t, f), (s(&[(2, 2)]), s(&[(1, 1)])));
    }

    #[test]
    fn defect_completion() {
        let cat = a2();
        let done = complete_defect(&cat, &[s(&[(1, 1), (2, 2)]), s(&[])]).unwrap();
        assert_eq!(done.parts, vec![s(&[(1, 1), (1, 2), (2, 2)]), s(&[])]);
        // The cut after the first part is ({[2,2]}, 0), which misses [1,2].
        assert!(complete_defect(&cat, &[s(&[(2, 2)]), s(&[]), s(&[])]).is_err());
    }

    #[test]
    fn ext_projectives_of_everything() {
        let cat = a2();
        let all = everything(&cat);
        assert_eq!(ext_projectives_in(&cat, &all, &all), s(&[(1, 2), (2, 2)]));
        assert_eq!(ext_injectives_in(&cat, &all, &all), s(&[(1, 1), (1, 2)]));
    }
}
