//! Structural properties of the decomposition machinery, exercised over a
//! battery of small Dynkin quivers with randomized inputs.

mod common;

use common::{alternate_orientation, descriptor_quiver, path_orientations};
use proptest::prelude::*;
use rigidq_core::engine::Engine;
use rigidq_core::euler::euler_form;
use rigidq_core::quiver::Quiver;
use rigidq_core::roots::hom_dim;
use rigidq_core::typea::{all_intervals, EdgeDir, TypeAQuiver};
use rigidq_core::DimVec;
use std::collections::BTreeSet;
use std::sync::OnceLock;

fn battery() -> &'static Vec<Engine> {
    static CELL: OnceLock<Vec<Engine>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut quivers = Vec::new();
        quivers.extend(path_orientations(2));
        quivers.extend(path_orientations(3));
        quivers.extend(path_orientations(4));
        let d4 = descriptor_quiver("D4");
        quivers.push(alternate_orientation(&d4));
        quivers.push(d4);
        quivers.push(descriptor_quiver("D5"));
        quivers.push(descriptor_quiver("E6"));
        quivers.into_iter().map(|q| Engine::new(q).unwrap()).collect()
    })
}

fn arb_case(max_entry: i64) -> impl Strategy<Value = (usize, Vec<i64>)> {
    (0..battery().len()).prop_flat_map(move |qi| {
        let n = battery()[qi].quiver().vertex_count();
        (Just(qi), proptest::collection::vec(0..=max_entry, n))
    })
}

proptest! {
    #[test]
    fn euler_form_is_bilinear_in_both_arguments(
        (qi, a) in arb_case(5),
        scale in -3i64..=3,
    ) {
        let engine = &battery()[qi];
        let q = engine.quiver();
        let n = q.vertex_count();
        // Mix signs so linearity is tested off the positive cone.
        let b = DimVec::new(a.iter().map(|x| 2 - x).collect());
        let c = DimVec::new(a.iter().rev().cloned().collect());
        let a = DimVec::new(a);
        let combo = b.checked_add_scaled(scale, &a).unwrap();
        prop_assert_eq!(
            euler_form(q, &combo, &c).unwrap(),
            scale * euler_form(q, &a, &c).unwrap() + euler_form(q, &b, &c).unwrap()
        );
        let combo_r = c.checked_add_scaled(scale, &b).unwrap();
        prop_assert_eq!(
            euler_form(q, &a, &combo_r).unwrap(),
            scale * euler_form(q, &a, &b).unwrap() + euler_form(q, &a, &c).unwrap()
        );
        prop_assert_eq!(euler_form(q, &DimVec::zeros(n), &a).unwrap(), 0);
    }

    #[test]
    fn every_root_has_unit_self_pairing(qi in 0..battery().len()) {
        let engine = &battery()[qi];
        for alpha in engine.roots().roots() {
            prop_assert_eq!(engine.euler().quadratic(alpha), 1);
        }
    }

    #[test]
    fn sub_and_quot_sets_obey_their_bounds(
        qi in 0..battery().len(),
        pick in 0usize..10_000,
    ) {
        let engine = &battery()[qi];
        let roots = engine.roots().roots();
        let alpha = &roots[pick % roots.len()];
        let sets = engine.sub_quot(alpha).unwrap();
        for e in sets.subs.iter().chain(sets.quots.iter()) {
            prop_assert!(!e.is_zero());
            prop_assert!(e.is_nonnegative());
            prop_assert!(e.leq(alpha));
        }
        prop_assert!(sets.subs.contains(alpha));
        prop_assert!(sets.quots.contains(alpha));
        // Kernel and image of the same inclusion: subs and quots pair up
        // through complementation in alpha.
        let subs_z: BTreeSet<DimVec> = sets
            .subs
            .iter()
            .cloned()
            .chain([DimVec::zeros(alpha.len())])
            .collect();
        let quots_complement: BTreeSet<DimVec> = sets
            .quots
            .iter()
            .cloned()
            .chain([DimVec::zeros(alpha.len())])
            .map(|q| alpha.checked_sub(&q).unwrap())
            .collect();
        prop_assert_eq!(subs_z, quots_complement);
    }

    #[test]
    fn generic_hom_dominates_the_form_and_scales_linearly(
        (qi, d) in arb_case(5),
        (extra_qi, extra) in arb_case(3),
        factor in 0i64..=4,
    ) {
        let engine = &battery()[qi];
        let d = DimVec::new(d);
        for alpha in engine.roots().roots() {
            let h = engine.hom_root_to(alpha, &d).unwrap();
            prop_assert!(h >= engine.euler().form(alpha, &d));
            prop_assert_eq!(engine.hom_root_to(alpha, alpha).unwrap(), 1);
            // A max of linear forms is positively homogeneous and
            // subadditive. It is not monotone: enlarging d can push every
            // quotient form down, see 1->2<-3->4 with alpha = d = e_3 and
            // then d + e_4.
            let scaled = DimVec::zeros(d.len()).checked_add_scaled(factor, &d).unwrap();
            prop_assert_eq!(engine.hom_root_to(alpha, &scaled).unwrap(), factor * h);
            if extra_qi == qi {
                let extra = DimVec::new(extra.clone());
                let h_extra = engine.hom_root_to(alpha, &extra).unwrap();
                let joint = engine
                    .hom_root_to(alpha, &d.checked_add(&extra).unwrap())
                    .unwrap();
                prop_assert!(joint <= h + h_extra);
            }
        }
    }

    #[test]
    fn decomposition_sums_to_d_with_no_extensions(
        (qi, d) in arb_case(6),
    ) {
        let engine = &battery()[qi];
        let d = DimVec::new(d);
        let m = engine.rigid(&d).unwrap();
        let report = engine.check(&d, &m).unwrap();
        prop_assert!(report.sum_ok, "sum {} != {}", report.achieved_sum, d);
        prop_assert!(report.ext_free, "witness {:?}", report.ext_witness);
        if !report.support_bound_ok {
            eprintln!(
                "support of size {} exceeds the vertex count on {:?}, d = {}",
                report.support_size,
                engine.quiver(),
                d
            );
        }
    }

    #[test]
    fn generic_hom_agrees_with_the_decomposition_route(
        (qi, d) in arb_case(5),
    ) {
        let engine = &battery()[qi];
        let d = DimVec::new(d);
        let m = engine.rigid(&d).unwrap();
        for alpha in engine.roots().roots() {
            let direct = engine.hom_root_to(alpha, &d).unwrap();
            let through_summands: i64 = m
                .iter()
                .map(|(beta, &mult)| mult * hom_dim(engine.euler(), alpha, beta))
                .sum();
            prop_assert_eq!(direct, through_summands, "alpha = {}", alpha);
        }
    }

    #[test]
    fn decomposition_respects_disjoint_unions(
        (qi, d1) in arb_case(4),
        (qj, d2) in arb_case(4),
    ) {
        let left = &battery()[qi];
        let right = &battery()[qj];
        let union = left.quiver().disjoint_union(right.quiver());
        let engine = Engine::new(union).unwrap();
        let (n1, n2) = (d1.len(), d2.len());
        let mut joint = d1.clone();
        joint.extend_from_slice(&d2);
        let m = engine.rigid(&DimVec::new(joint)).unwrap();
        let m1 = left.rigid(&DimVec::new(d1)).unwrap();
        let m2 = right.rigid(&DimVec::new(d2)).unwrap();
        let mut expected = rigidq_core::MultiplicityFunction::new();
        for (alpha, &mult) in &m1 {
            let mut v = alpha.entries().to_vec();
            v.extend(std::iter::repeat(0).take(n2));
            expected.insert(DimVec::new(v), mult);
        }
        for (alpha, &mult) in &m2 {
            let mut v = vec![0; n1];
            v.extend_from_slice(alpha.entries());
            expected.insert(DimVec::new(v), mult);
        }
        prop_assert_eq!(m, expected);
    }

    #[test]
    fn growing_d_by_a_summand_usually_adds_one_copy(
        (qi, d) in arb_case(4),
    ) {
        let engine = &battery()[qi];
        let d = DimVec::new(d);
        let m = engine.rigid(&d).unwrap();
        if let Some((alpha, _)) = m.iter().next() {
            let bigger = d.checked_add(alpha).unwrap();
            let m_big = engine.rigid(&bigger).unwrap();
            if bigger.total() <= rigidq_core::BRUTE_FORCE_DEFAULT_BOUND {
                prop_assert_eq!(&m_big, &engine.brute_force(&bigger, None).unwrap());
            }
            let mut bumped = m.clone();
            *bumped.entry(alpha.clone()).or_insert(0) += 1;
            if m_big != bumped {
                eprintln!(
                    "adding summand {} to d = {} rearranged the decomposition",
                    alpha, d
                );
            }
        }
    }
}

/// Independent enumeration of the arrow-closed subsets of an interval,
/// the combinatorial description of sub and quotient dimension vectors of
/// interval indecomposables in type A.
fn closed_subset_vectors(
    taq: &TypeAQuiver,
    i: usize,
    j: usize,
    successors: bool,
) -> BTreeSet<DimVec> {
    let n = taq.n();
    let width = j - i + 1;
    let mut out = BTreeSet::new();
    for mask in 1u32..1 << width {
        let contains = |v: usize| mask >> (v - i) & 1 == 1;
        let mut ok = true;
        for v in i..j {
            // Edge between v and v+1; arrow direction decides which
            // endpoint must follow the other into the subset.
            let (from, to) = match taq.orientation()[v - 1] {
                EdgeDir::Right => (v, v + 1),
                EdgeDir::Left => (v + 1, v),
            };
            let (from, to) = if successors { (from, to) } else { (to, from) };
            if contains(from) && !contains(to) {
                ok = false;
                break;
            }
        }
        if ok {
            let v: Vec<i64> = (1..=n)
                .map(|k| i64::from(k >= i && k <= j && contains(k)))
                .collect();
            out.insert(DimVec::new(v));
        }
    }
    out
}

#[test]
fn type_a_sub_quot_sets_are_the_closed_subsets() {
    for n in 2..=5usize {
        for mask in 0u32..1 << (n - 1) {
            let orient: Vec<EdgeDir> = (0..n - 1)
                .map(|k| {
                    if mask >> k & 1 == 0 {
                        EdgeDir::Right
                    } else {
                        EdgeDir::Left
                    }
                })
                .collect();
            let taq = TypeAQuiver::new(n, orient).unwrap();
            let engine = Engine::new(taq.quiver().clone()).unwrap();
            for iv in all_intervals(n) {
                let alpha = iv.vector(n);
                let sets = engine.sub_quot(&alpha).unwrap();
                let subs: BTreeSet<DimVec> = sets.subs.iter().cloned().collect();
                let quots: BTreeSet<DimVec> = sets.quots.iter().cloned().collect();
                assert_eq!(
                    subs,
                    closed_subset_vectors(&taq, iv.i, iv.j, true),
                    "subs for n={n} mask={mask:b} interval=({},{})",
                    iv.i,
                    iv.j
                );
                assert_eq!(
                    quots,
                    closed_subset_vectors(&taq, iv.i, iv.j, false),
                    "quots for n={n} mask={mask:b} interval=({},{})",
                    iv.i,
                    iv.j
                );
            }
        }
    }
}

#[test]
fn oracle_agreement_extends_to_e6() {
    let engine = Engine::new(descriptor_quiver("E6")).unwrap();
    for d in common::dimvecs_up_to(6, 10) {
        assert_eq!(
            engine.rigid(&d).unwrap(),
            engine.brute_force(&d, None).unwrap(),
            "d = {d}"
        );
    }
}

#[test]
fn battery_euler_matrices_are_unimodular() {
    for engine in battery() {
        assert_eq!(engine.euler().det().abs(), 1, "{:?}", engine.quiver());
    }
}

#[test]
fn root_lists_are_sorted_and_duplicate_free() {
    for engine in battery() {
        let roots = engine.roots().roots();
        for w in roots.windows(2) {
            assert!(w[0] < w[1]);
        }
        for (k, alpha) in roots.iter().enumerate() {
            assert_eq!(engine.roots().index_of(alpha), Some(k));
        }
    }
}

#[test]
fn relabeled_quivers_share_root_counts() {
    // A quiver given with scrambled vertex names classifies onto the same
    // diagram and produces the same number of roots.
    let scrambled = Quiver::new(5, &[(3, 5), (5, 1), (1, 4), (4, 2)]).unwrap();
    let standard = descriptor_quiver("A5");
    assert_eq!(
        Engine::new(scrambled).unwrap().roots().len(),
        Engine::new(standard).unwrap().roots().len()
    );
}
