//! Independent checks built from explicit representations and exact
//! rational linear algebra.
//!
//! Nothing here uses the closed-form Hom and Ext rules of the category
//! models. Hom spaces are kernels of the commutativity system
//! `f_t X_a = Y_a f_s` over all arrows `a: s -> t`, and `Ext^1` is the
//! cokernel of the same map, which is valid for representations of a quiver
//! without relations and for the nilpotent representations of a cycle.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::an::{DimVector, Interval, LinearCategory};
use crate::category::Subcategory;
use crate::classify_tube::{tube_pair_descriptors, TubeTorsionPair};
use crate::error::{Error, Result};
use crate::quiver::{Quiver, Vertex};
use crate::torsion::TorsionPair;
use crate::tube::{wrap, Tube, TubeModule};

/// `<d, e> = sum_v d_v e_v - sum_{a: s -> t} d_s e_t` for an acyclic quiver.
pub fn euler_form(d: &DimVector, e: &DimVector, q: &Quiver) -> Result<i64> {
    if !q.is_acyclic() {
        return Err(Error::Cyclic);
    }
    let at = |m: &DimVector, v: Vertex| m.get(&v).copied().unwrap_or(0);
    let diagonal: i64 = q.vertices().iter().map(|&v| at(d, v) * at(e, v)).sum();
    let arrows: i64 = q.arrows().iter().map(|&(s, t)| at(d, s) * at(e, t)).sum();
    Ok(diagonal - arrows)
}

/// Rank of a dense rational matrix by Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][c].recip();
        for x in rows[rank].iter_mut() {
            *x *= &inv;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let factor = rows[r][c].clone();
                let pivot = rows[rank][c..cols].to_vec();
                for (x, p) in rows[r][c..cols].iter_mut().zip(&pivot) {
                    *x -= &factor * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// A representation: a basis size at each vertex and a matrix per arrow,
/// stored as `rows = dim at head`, `cols = dim at tail`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub dims: BTreeMap<Vertex, usize>,
    pub maps: Vec<Vec<Vec<i64>>>,
}

impl Representation {
    fn zero_maps(q: &Quiver, dims: &BTreeMap<Vertex, usize>) -> Vec<Vec<Vec<i64>>> {
        q.arrows().iter().map(|(s, t)| vec![vec![0; dims[s]]; dims[t]]).collect()
    }

    /// Interval module of a linear quiver: one basis vector on each vertex
    /// of the path from `top` to `socle`, identities along it.
    pub fn interval(q: &Quiver, x: &Interval) -> Result<Self> {
        let path = q
            .chains()?
            .into_iter()
            .find_map(|chain| {
                let i = chain.iter().position(|&v| v == x.top)?;
                let j = chain.iter().position(|&v| v == x.socle)?;
                (i <= j).then(|| chain[i..=j].to_vec())
            })
            .ok_or_else(|| Error::UnknownObject(x.to_string()))?;
        let support: BTreeSet<Vertex> = path.into_iter().collect();
        let dims: BTreeMap<Vertex, usize> =
            q.vertices().iter().map(|&v| (v, usize::from(support.contains(&v)))).collect();
        let mut maps = Self::zero_maps(q, &dims);
        for (a, (s, t)) in q.arrows().iter().enumerate() {
            if support.contains(s) && support.contains(t) {
                maps[a][0][0] = 1;
            }
        }
        Ok(Representation { dims, maps })
    }

    /// `U(s,l)` on `cyclic_an(rank)`: basis `e_0, ..., e_{l-1}` with `e_k` at
    /// vertex `s+k`, each arrow sending `e_k` to `e_{k-1}` and `e_0` to zero.
    pub fn tube(rank: u32, x: &TubeModule) -> Result<Self> {
        let tube = Tube::new(rank)?;
        tube.check(x)?;
        let q = Quiver::cyclic_an(rank)?;
        let vertex_of = |k: u32| wrap(i64::from(x.socle) + i64::from(k), rank);
        // Index of each basis vector within its vertex space.
        let mut dims: BTreeMap<Vertex, usize> = q.vertices().iter().map(|&v| (v, 0)).collect();
        let mut slot = Vec::with_capacity(x.length as usize);
        for k in 0..x.length {
            let d = dims.get_mut(&vertex_of(k)).unwrap();
            slot.push(*d);
            *d += 1;
        }
        let mut maps = Self::zero_maps(&q, &dims);
        for (a, &(s, t)) in q.arrows().iter().enumerate() {
            for k in 1..x.length {
                if vertex_of(k) == s && vertex_of(k - 1) == t {
                    maps[a][slot[k as usize - 1]][slot[k as usize]] = 1;
                }
            }
        }
        Ok(Representation { dims, maps })
    }
}

/// The linear map `(f_v) ↦ (f_t X_a - Y_a f_s)_a` as a matrix, together with
/// the dimensions of its source and target.
fn commutativity_system(q: &Quiver, x: &Representation, y: &Representation) -> (Vec<Vec<BigRational>>, usize, usize) {
    // Unknowns: entries of f_v, a dim_y(v) x dim_x(v) matrix per vertex.
    let mut offset = BTreeMap::new();
    let mut unknowns = 0;
    for &v in q.vertices() {
        offset.insert(v, unknowns);
        unknowns += y.dims[&v] * x.dims[&v];
    }
    let var = |v: Vertex, r: usize, c: usize| offset[&v] + r * x.dims[&v] + c;
    let mut rows = Vec::new();
    for (a, &(s, t)) in q.arrows().iter().enumerate() {
        let (xa, ya) = (&x.maps[a], &y.maps[a]);
        // Entry (r, c) of f_t X_a - Y_a f_s, an element of Hom(X_s, Y_t).
        for r in 0..y.dims[&t] {
            for c in 0..x.dims[&s] {
                let mut row = vec![BigRational::zero(); unknowns];
                for k in 0..x.dims[&t] {
                    if xa[k][c] != 0 {
                        row[var(t, r, k)] += BigRational::from_integer(BigInt::from(xa[k][c]));
                    }
                }
                for k in 0..y.dims[&s] {
                    if ya[r][k] != 0 {
                        row[var(s, k, c)] -= BigRational::from_integer(BigInt::from(ya[r][k]));
                    }
                }
                rows.push(row);
            }
        }
    }
    let equations = rows.len();
    (rows, unknowns, equations)
}

pub fn hom_dim_matrix(q: &Quiver, x: &Representation, y: &Representation) -> usize {
    let (rows, unknowns, _) = commutativity_system(q, x, y);
    unknowns - rank(rows)
}

pub fn ext_dim_matrix(q: &Quiver, x: &Representation, y: &Representation) -> usize {
    let (rows, unknowns, equations) = commutativity_system(q, x, y);
    let hom = unknowns - rank(rows);
    equations - (unknowns - hom)
}

/// Hom and Ext tables over a list of representations.
pub struct Tables {
    pub hom: Vec<Vec<usize>>,
    pub ext: Vec<Vec<usize>>,
}

pub fn tables(q: &Quiver, reps: &[Representation]) -> Tables {
    let hom = reps.iter().map(|x| reps.iter().map(|y| hom_dim_matrix(q, x, y)).collect()).collect();
    let ext = reps.iter().map(|x| reps.iter().map(|y| ext_dim_matrix(q, x, y)).collect()).collect();
    Tables { hom, ext }
}

pub const DEFAULT_MAX_N: u32 = 6;
pub const DEFAULT_MAX_CAP: u32 = 8;

/// Every torsion pair of `linear_an(n)`, found by scanning the
/// quotient-closed sets `T` and keeping those with `T = ⊥(T^⊥)`, where both
/// perpendiculars use matrix Hom dimensions.
pub fn enumerate_torsion_pairs_bruteforce(n: u32, max_n: u32) -> Result<Vec<TorsionPair<Interval>>> {
    if n > max_n {
        return Err(Error::BoundExceeded { what: "n", value: n.into(), bound: max_n.into() });
    }
    let q = Quiver::linear_an(n)?;
    let objects = LinearCategory::new(q.clone())?.indecomposables();
    let reps: Vec<Representation> = objects.iter().map(|x| Representation::interval(&q, x)).collect::<Result<_>>()?;
    let hom: Vec<Vec<bool>> = reps
        .iter()
        .map(|x| reps.iter().map(|y| hom_dim_matrix(&q, x, y) > 0).collect())
        .collect();
    let index: BTreeMap<Interval, usize> = objects.iter().enumerate().map(|(i, x)| (*x, i)).collect();

    // Quotients of [a,b] are [a,c] with c <= b, so a quotient-closed set is
    // a choice of longest member (or none) for each top.
    let mut choices: Vec<Vec<Option<u32>>> = Vec::new();
    for a in 1..=n {
        let mut row = vec![None];
        row.extend((a..=n).map(Some));
        choices.push(row);
    }
    let mut out = Vec::new();
    let mut pick = vec![0usize; n as usize];
    let index = &index;
    loop {
        let members: Vec<usize> = (1..=n)
            .filter_map(|a| choices[a as usize - 1][pick[a as usize - 1]].map(|b| (a, b)))
            .flat_map(|(a, b)| (a..=b).map(move |c| index[&Interval::new(a, c)]))
            .collect();
        let mut in_t = vec![false; objects.len()];
        for &i in &members {
            in_t[i] = true;
        }
        let free: Vec<usize> = (0..objects.len()).filter(|&j| members.iter().all(|&i| !hom[i][j])).collect();
        let closed: Vec<usize> = (0..objects.len()).filter(|&i| free.iter().all(|&j| !hom[i][j])).collect();
        if closed.iter().all(|&i| in_t[i]) && closed.len() == members.len() {
            out.push(TorsionPair::new(
                members.iter().map(|&i| objects[i]).collect(),
                free.iter().map(|&j| objects[j]).collect(),
            ));
        }
        // Odometer step.
        let mut k = 0;
        loop {
            if k == pick.len() {
                out.sort();
                return Ok(out);
            }
            pick[k] += 1;
            if pick[k] < choices[k].len() {
                break;
            }
            pick[k] = 0;
            k += 1;
        }
    }
}

/// Torsion pairs of the tube truncated at `cap`, as pairs of member sets.
///
/// The truncation is the module category of the cyclic path algebra modulo
/// paths of length `cap`, so its torsion classes are exactly the sets
/// `⊥(S^⊥)`. Every subset `S` is scanned with bitmasks over matrix Hom.
pub fn enumerate_truncated_tube_pairs(rank: u32, cap: u32, max_objects: u32) -> Result<Vec<TorsionPair<TubeModule>>> {
    if cap == 0 {
        return Err(Error::ZeroCap);
    }
    let size = rank.saturating_mul(cap);
    if size > max_objects.min(40) {
        return Err(Error::BoundExceeded { what: "rank * cap", value: size.into(), bound: max_objects.into() });
    }
    let tube = Tube::new(rank)?;
    let q = Quiver::cyclic_an(rank)?;
    let objects = tube.up_to(cap);
    let reps: Vec<Representation> = objects.iter().map(|x| Representation::tube(rank, x)).collect::<Result<_>>()?;
    let count = objects.len();
    let mut hom_out = vec![0u64; count];
    for (i, x) in reps.iter().enumerate() {
        for (j, y) in reps.iter().enumerate() {
            if hom_dim_matrix(&q, x, y) > 0 {
                hom_out[i] |= 1 << j;
            }
        }
    }
    let full: u64 = (1 << count) - 1;
    let mut found = BTreeSet::new();
    for s in 0..=full {
        let reached = (0..count).filter(|i| s >> i & 1 == 1).fold(0u64, |acc, i| acc | hom_out[i]);
        let free = full & !reached;
        let torsion = (0..count).filter(|&i| hom_out[i] & free == 0).fold(0u64, |acc, i| acc | 1 << i);
        found.insert((torsion, free));
    }
    let pick = |mask: u64| -> Subcategory<TubeModule> { (0..count).filter(|i| mask >> i & 1 == 1).map(|i| objects[i]).collect() };
    Ok(found.into_iter().map(|(t, f)| TorsionPair::new(pick(t), pick(f))).collect())
}

/// Where a tube classification datum breaks once truncated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TruncatedViolation {
    Hom { torsion: TubeModule, free: TubeModule },
    NoCanonicalSequence(TubeModule),
}

/// Orthogonality between the truncated torsion and free parts, and a
/// canonical sequence for every module of length below `cap`. Hom is taken
/// from the matrix computation.
pub fn check_tube_tp_truncated(data: &TubeTorsionPair, cap: u32) -> Result<std::result::Result<(), TruncatedViolation>> {
    if cap < 2 {
        return Err(Error::ZeroCap);
    }
    let (torsion, free) = tube_pair_descriptors(data)?;
    let q = Quiver::cyclic_an(data.rank)?;
    let tube = Tube::new(data.rank)?;
    let t_members = torsion.truncate(cap)?;
    let f_members = free.truncate(cap)?;
    let rep = |x: &TubeModule| Representation::tube(data.rank, x);
    for x in &t_members {
        let rx = rep(x)?;
        for y in &f_members {
            if hom_dim_matrix(&q, &rx, &rep(y)?) != 0 {
                return Ok(Err(TruncatedViolation::Hom { torsion: *x, free: *y }));
            }
        }
    }
    for x in tube.up_to(cap - 1) {
        // Submodules of U(s,l) are U(s,k); the quotient by U(s,k) is
        // U(s+k, l-k).
        let ok = (0..=x.length).any(|k| {
            let sub_ok = k == 0 || torsion.contains(&TubeModule::new(x.socle, k));
            let quot_ok = k == x.length
                || free.contains(&TubeModule::new(wrap(i64::from(x.socle) + i64::from(k), data.rank), x.length - k));
            sub_ok && quot_ok
        });
        if !ok {
            return Ok(Err(TruncatedViolation::NoCanonicalSequence(x)));
        }
    }
    Ok(Ok(()))
}

/// The n-th Catalan number, `None` on overflow.
pub fn catalan(n: u32) -> Option<u128> {
    let mut c: u128 = 1;
    for k in 0..n {
        let k = u128::from(k);
        c = c.checked_mul(2 * (2 * k + 1))? / (k + 2);
    }
    Some(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tube::TubeModule;

    fn r(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    #[test]
    fn rank_small() {
        assert_eq!(rank(vec![vec![r(1), r(2)], vec![r(2), r(4)]]), 1);
        assert_eq!(rank(vec![vec![r(0), r(1)], vec![r(1), r(0)]]), 2);
        assert_eq!(rank(vec![]), 0);
    }

    #[test]
    fn euler_examples() {
        let q = Quiver::linear_an(2).unwrap();
        let d: DimVector = [(1, 1), (2, 0)].into_iter().collect();
        let e: DimVector = [(1, 0), (2, 1)].into_iter().collect();
        assert_eq!(euler_form(&d, &e, &q).unwrap(), -1);
        assert_eq!(euler_form(&e, &d, &q).unwrap(), 0);
        assert_eq!(euler_form(&d, &d, &Quiver::cyclic_an(2).unwrap()), Err(Error::Cyclic));
    }

    #[test]
    fn matrix_hom_on_a2() {
        let q = Quiver::linear_an(2).unwrap();
        let rep = |a, b| Representation::interval(&q, &Interval::new(a, b)).unwrap();
        assert_eq!(hom_dim_matrix(&q, &rep(1, 2), &rep(1, 1)), 1);
        assert_eq!(hom_dim_matrix(&q, &rep(1, 1), &rep(1, 2)), 0);
        assert_eq!(ext_dim_matrix(&q, &rep(1, 1), &rep(2, 2)), 1);
        assert_eq!(ext_dim_matrix(&q, &rep(2, 2), &rep(1, 1)), 0);
    }

    #[test]
    fn matrix_on_tubes() {
        let q1 = Quiver::cyclic_an(1).unwrap();
        let s = Representation::tube(1, &TubeModule::new(1, 1)).unwrap();
        assert_eq!(hom_dim_matrix(&q1, &s, &s), 1);
        assert_eq!(ext_dim_matrix(&q1, &s, &s), 1);
        let q2 = Quiver::cyclic_an(2).unwrap();
        let s1 = Representation::tube(2, &TubeModule::new(1, 1)).unwrap();
        assert_eq!(ext_dim_matrix(&q2, &s1, &s1), 0);
    }

    #[test]
    fn brute_force_counts() {
        let want = [2, 5, 14, 42];
        for (n, &c) in (1..=4).zip(&want) {
            assert_eq!(enumerate_torsion_pairs_bruteforce(n, DEFAULT_MAX_N).unwrap().len(), c);
        }
        assert!(matches!(enumerate_torsion_pairs_bruteforce(7, 6), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn catalan_numbers() {
        let got: Vec<u128> = (0..8).map(|n| catalan(n).unwrap()).collect();
        assert_eq!(got, vec![1, 1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn truncated_rank_one() {
        for cap in 1..=4 {
            assert_eq!(enumerate_truncated_tube_pairs(1, cap, 20).unwrap().len(), 2);
        }
    }
}
