mod common;

use std::collections::BTreeSet;

use common::{linear, pairs, partition_inputs, stable_pairs};
use torsionkit::category::everything;
use torsionkit::classify_an::{
    assemble_right, count_torsion_pairs, decompose_left, decompose_right, is_cotilting_induced, is_tilting_induced,
    partition_to_tp, partition_to_tp_right, tp_to_partition, verify_count,
};
use torsionkit::classify_tube::{
    combine_components, enumerate_combined, enumerate_tube_tps, partition_to_tube_tp, signature, tube_membership,
    tube_pair_descriptors, Component, ComponentObject, ComponentPair, Membership,
};
use torsionkit::oracle::{
    catalan, enumerate_torsion_pairs_bruteforce, enumerate_truncated_tube_pairs, hom_dim_matrix, Representation,
    DEFAULT_MAX_N,
};
use torsionkit::partition::{enumerate_partitions, PartPartition, PartitionKind};
use torsionkit::{Quiver, Subcategory, TorsionPair, Tube, TubeKind, TubeModule};

#[test]
fn formula_matches_catalan() {
    for n in 1..=12 {
        assert_eq!(count_torsion_pairs(n).unwrap(), catalan(n + 1).unwrap());
    }
    for n in 1..=6 {
        assert!(verify_count(n, DEFAULT_MAX_N).unwrap().consistent(), "n = {n}");
    }
}

#[test]
fn no_stable_pairs_on_linear_quivers() {
    for m in 1..=5 {
        let cat = linear(m);
        let stable = enumerate_torsion_pairs_bruteforce(m, DEFAULT_MAX_N)
            .unwrap()
            .into_iter()
            .filter(|tp| {
                cat.projectives().iter().all(|p| !tp.torsion.contains(p))
                    && cat.injectives().iter().all(|i| !tp.free.contains(i))
            })
            .count();
        assert_eq!(stable, 0, "m = {m}");
    }
}

#[test]
fn plain_and_strong_complete_partitions_agree() {
    for n in 1..=5 {
        let q = Quiver::linear_an(n).unwrap();
        for (plain, strong) in [(PartitionKind::Plain1, PartitionKind::Strong1), (PartitionKind::Plain2, PartitionKind::Strong2)] {
            let keys = |kind| enumerate_partitions(&q, kind, true).iter().map(PartPartition::key).collect::<BTreeSet<_>>();
            assert_eq!(keys(plain), keys(strong), "n = {n}");
        }
    }
}

#[test]
fn right_side_round_trips() {
    for n in 1..=5 {
        let cat = linear(n);
        let all = pairs(&cat);
        for tp in &all {
            let d = decompose_right(&cat, tp).unwrap();
            assert_eq!(&assemble_right(&cat, &d.partition, &d.residual).unwrap(), tp);
        }
        let mut image = BTreeSet::new();
        for (s, r) in partition_inputs(&cat, PartitionKind::Strong2) {
            let tp = assemble_right(&cat, &s, &r).unwrap();
            let d = decompose_right(&cat, &tp).unwrap();
            assert_eq!((d.partition.parts, d.residual), (s.parts.clone(), r));
            image.insert(tp);
        }
        assert_eq!(image.len(), all.len());

        let two_type = enumerate_partitions(cat.quiver(), PartitionKind::Strong2, true);
        let mut from_right: Vec<TorsionPair<_>> = two_type.iter().map(|s| partition_to_tp_right(&cat, s).unwrap()).collect();
        from_right.sort();
        assert_eq!(from_right, all);
    }
}

#[test]
fn decompositions_cover_every_vertex() {
    for n in 1..=5 {
        let cat = linear(n);
        assert!(stable_pairs(&cat).is_empty());
        for tp in pairs(&cat) {
            for d in [decompose_left(&cat, &tp).unwrap(), decompose_right(&cat, &tp).unwrap()] {
                assert!(d.partition.complete);
                assert!(d.residual.support.is_empty());
                assert_eq!(d.trace.len(), d.partition.parts.len());
            }
            let s = tp_to_partition(&cat, &tp).unwrap();
            assert_eq!(partition_to_tp(&cat, &s).unwrap(), tp);
        }
    }
}

#[test]
fn tilting_counts() {
    // Tilting-induced pairs on A_m correspond to all pairs on A_{m-1}.
    for m in 1..=5 {
        let cat = linear(m);
        let all = pairs(&cat);
        let tilting = all.iter().filter(|tp| is_tilting_induced(&cat, tp).unwrap()).count();
        let cotilting = all.iter().filter(|tp| is_cotilting_induced(&cat, tp).unwrap()).count();
        let want = catalan(m).unwrap() as usize;
        assert_eq!((tilting, cotilting), (want, want), "m = {m}");
    }
}

#[test]
fn tilting_on_disjoint_unions_is_componentwise() {
    let q = Quiver::linear_an(5).unwrap().subquiver(&[1, 2, 4, 5].into_iter().collect()).unwrap();
    let cat = torsionkit::LinearCategory::new(q).unwrap();
    let all = pairs(&cat);
    assert_eq!(all.len(), 25);
    let tilting = all.iter().filter(|tp| is_tilting_induced(&cat, tp).unwrap()).count();
    assert_eq!(tilting, 4);
}

#[test]
fn tube_hom_matches_matrices() {
    for rank in 1..=3 {
        let tube = Tube::new(rank).unwrap();
        let q = Quiver::cyclic_an(rank).unwrap();
        let modules = tube.up_to(6);
        let reps: Vec<Representation> = modules.iter().map(|x| Representation::tube(rank, x).unwrap()).collect();
        for (x, rx) in modules.iter().zip(&reps) {
            for (y, ry) in modules.iter().zip(&reps) {
                assert_eq!(tube.hom_dim(x, y), hom_dim_matrix(&q, rx, ry), "rank {rank}: Hom({x}, {y})");
                assert_eq!(tube.ext_dim(x, y), tube.hom_dim(y, &tube.tau(x)));
            }
        }
    }
}

#[test]
fn truncations_match_brute_force() {
    for rank in 1..=3u32 {
        let data = enumerate_tube_tps(rank).unwrap();
        for cap in rank.max(2)..=6 {
            if rank * cap > 18 {
                continue;
            }
            let brute: BTreeSet<TorsionPair<TubeModule>> =
                enumerate_truncated_tube_pairs(rank, cap, 40).unwrap().into_iter().collect();
            let truncated: BTreeSet<TorsionPair<TubeModule>> = data
                .iter()
                .map(|d| {
                    let (t, f) = tube_pair_descriptors(d).unwrap();
                    TorsionPair::new(t.truncate(cap).unwrap(), f.truncate(cap).unwrap())
                })
                .collect();
            assert_eq!(truncated, brute, "rank {rank}, cap {cap}");
        }
    }
}

#[test]
fn descriptors_are_closed() {
    for rank in 1..=3 {
        let tube = Tube::new(rank).unwrap();
        for d in enumerate_tube_tps(rank).unwrap() {
            let (t, f) = tube_pair_descriptors(&d).unwrap();
            for x in tube.up_to(8) {
                if t.contains(&x) {
                    assert!(tube.quotients(&x).iter().all(|q| t.contains(q)), "{d}: {x}");
                }
                if f.contains(&x) {
                    assert!(tube.submodules(&x).iter().all(|s| f.contains(s)), "{d}: {x}");
                }
                assert!(!(t.contains(&x) && f.contains(&x)));
            }
        }
    }
}

#[test]
fn signatures_are_distinct() {
    for rank in 1..=3 {
        let data = enumerate_tube_tps(rank).unwrap();
        let signatures: BTreeSet<Vec<Membership>> = data.iter().map(|d| signature(d).unwrap()).collect();
        assert_eq!(signatures.len(), data.len());
    }
}

#[test]
fn rank_two_partition_example() {
    let s = PartPartition::new(vec![vec![1], vec![2]], PartitionKind::Strong1, true).unwrap();
    let d = partition_to_tube_tp(2, &s).unwrap();
    assert_eq!(d.kind, TubeKind::Coray);
    let tube = Tube::new(2).unwrap();
    for x in tube.up_to(6) {
        let expected = if tube.top(&x) == 1 {
            Membership::Torsion
        } else if x == TubeModule::new(2, 1) {
            Membership::Free
        } else {
            Membership::Neither
        };
        assert_eq!(tube_membership(&d, &x).unwrap(), expected, "{x}");
    }
}

#[test]
fn combined_counts_are_products() {
    let components = [Component::Tube(1), Component::Tube(1)];
    assert_eq!(enumerate_combined(&components).unwrap().len(), 4);
    let a2 = linear(2);
    let mixed = [Component::Linear(a2.clone()), Component::Tube(2), Component::Tube(1)];
    assert_eq!(enumerate_combined(&mixed).unwrap().len(), 5 * 6 * 2);

    let rank_one = enumerate_tube_tps(1).unwrap();
    let pair = combine_components(vec![ComponentPair::Tube(rank_one[0].clone()), ComponentPair::Tube(rank_one[1].clone())]);
    let s = ComponentObject::Tube(TubeModule::new(1, 1));
    assert_ne!(pair.membership(0, &s).unwrap(), pair.membership(1, &s).unwrap());

    let whole = everything(&a2);
    let linear_pair = ComponentPair::Linear(TorsionPair::new(whole, Subcategory::new()));
    let single = combine_components(vec![linear_pair]);
    let x = ComponentObject::Linear(common::iv(1, 2));
    assert_eq!(single.membership(0, &x).unwrap(), Membership::Torsion);
}
