mod common;

use std::f64::consts::FRAC_PI_2;

use cayley_pst::spectra::{character_sums, CharacterIndex};
use cayley_pst::walk::adjacency_matrix;
use cayley_pst::{
    character_value, characterize_pst, detect_pst_numeric, integral_spectrum, is_periodic_numeric, reduce_to_4m,
    transition_matrix, AbelianGroup, ConnectionSet, GroupElement, Verdict,
};
use common::{brute_power_closed, inverse_orbits, involutions, multiples, presentations_of_order, sylow2_cyclic};
use num_complex::Complex64;
use proptest::prelude::*;

fn small_group() -> impl Strategy<Value = AbelianGroup> {
    (2u64..=40)
        .prop_flat_map(|n| {
            let options = presentations_of_order(n);
            (0..options.len()).prop_map(move |i| options[i].clone())
        })
        .prop_map(|f| AbelianGroup::new(f).unwrap())
}

fn cyclic_sylow_group() -> impl Strategy<Value = AbelianGroup> {
    small_group().prop_filter("cyclic Sylow-2", |g| sylow2_cyclic(g.factors()))
}

/// A random inverse-closed subset, chosen orbit by orbit.
fn with_symmetric_set(g: impl Strategy<Value = AbelianGroup>) -> impl Strategy<Value = ConnectionSet> {
    g.prop_flat_map(|g| {
        let orbits = inverse_orbits(&g);
        proptest::collection::vec(any::<bool>(), orbits.len()).prop_map(move |picks| {
            let elems = orbits.iter().zip(picks).filter(|(_, p)| *p).flat_map(|(o, _)| o.iter().cloned());
            ConnectionSet::new(&g, elems).unwrap()
        })
    })
}

/// A random union of power classes.
fn with_power_closed_set(g: impl Strategy<Value = AbelianGroup>) -> impl Strategy<Value = ConnectionSet> {
    g.prop_flat_map(|g| {
        let classes: Vec<_> = g.power_classes().into_iter().filter(|p| !p.key.is_identity()).collect();
        proptest::collection::vec(any::<bool>(), classes.len()).prop_map(move |picks| {
            let chosen = classes.iter().zip(picks).filter(|(_, p)| *p).map(|(c, _)| c);
            ConnectionSet::from_classes(&g, chosen)
        })
    })
}

fn element_of(g: &AbelianGroup, seed: usize) -> GroupElement {
    g.element_at(seed % g.size())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_laws(g in small_group(), i in any::<usize>(), j in any::<usize>(), k in any::<usize>()) {
        let (x, y, z) = (element_of(&g, i), element_of(&g, j), element_of(&g, k));
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert!((&x - &x).is_identity());
        prop_assert_eq!(multiples(&x).len() as u64, x.order());
        prop_assert_eq!(g.index_of(&x), i % g.size());
    }

    #[test]
    fn power_classes_partition_the_group(g in small_group()) {
        let classes = g.power_classes();
        let total: usize = classes.iter().map(|c| c.members.len()).sum();
        prop_assert_eq!(total, g.size());
        for class in &classes {
            prop_assert!(brute_power_closed(&class.members));
            let span = multiples(&class.key);
            for m in &class.members {
                prop_assert_eq!(&multiples(m), &span);
            }
        }
    }

    #[test]
    fn characters_are_homomorphisms(g in small_group(), i in any::<usize>(), j in any::<usize>(), k in any::<usize>()) {
        let chi = CharacterIndex::new(&g, element_of(&g, k).coords().to_vec()).unwrap();
        let (x, y) = (element_of(&g, i), element_of(&g, j));
        let lhs = character_value(&chi, &(&x + &y)).unwrap();
        let rhs = character_value(&chi, &x).unwrap() * character_value(&chi, &y).unwrap();
        prop_assert!((lhs - rhs).norm() < 1e-12);
        prop_assert!((character_value(&chi, &x).unwrap().norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn characters_are_eigenvectors(c in with_symmetric_set(small_group()), k in any::<usize>()) {
        let g = c.group();
        let chi = CharacterIndex::new(g, element_of(g, k).coords().to_vec()).unwrap();
        let v: Vec<Complex64> = g.elements().map(|x| character_value(&chi, &x).unwrap()).collect();
        let eigen = character_sums(&c)[k % g.size()];
        let a = adjacency_matrix(&c);
        for row in 0..g.size() {
            let av: Complex64 = (0..g.size()).map(|col| v[col] * a[[row, col]]).sum();
            prop_assert!((av - eigen * v[row]).norm() < 1e-9);
        }
    }

    #[test]
    fn integral_iff_power_closed(c in with_symmetric_set(small_group())) {
        let closed = brute_power_closed(c.elements());
        prop_assert_eq!(c.is_power_closed(), closed);
        prop_assert_eq!(integral_spectrum(&c).is_ok(), closed);
    }

    #[test]
    fn transfer_is_symmetric_and_monogamous(c in with_symmetric_set(small_group()), t in 0.0f64..7.0) {
        let u = transition_matrix(&c, t);
        let x = u.entries();
        let n = x.nrows();
        for i in 0..n {
            let strong: Vec<usize> = (0..n).filter(|&j| j != i && x[[i, j]].norm() > 1.0 - 1e-6).collect();
            prop_assert!(strong.len() <= 1);
            for j in strong {
                prop_assert!(x[[j, i]].norm() > 1.0 - 1e-6);
            }
        }
    }

    #[test]
    fn transfer_forces_integrality(c in with_symmetric_set(small_group())) {
        if let Ok(Some(hit)) = detect_pst_numeric(&c, FRAC_PI_2, 1e-6) {
            prop_assert!(brute_power_closed(c.elements()));
            prop_assert!((&hit.target + &hit.target).is_identity());
            if sylow2_cyclic(c.group().factors()) {
                prop_assert_eq!(involutions(c.group()), vec![hit.target.clone()]);
            }
        }
    }

    #[test]
    fn theorem_matches_the_walk(c in with_power_closed_set(cyclic_sylow_group())) {
        let report = characterize_pst(&c);
        let numeric = detect_pst_numeric(&c, FRAC_PI_2, 1e-6).unwrap();
        prop_assert_eq!(report.verdict == Verdict::Pst, numeric.is_some());
        prop_assert_eq!(report.target(), numeric.as_ref().map(|h| &h.target));
    }

    #[test]
    fn reduction_preserves_the_verdict(c in with_power_closed_set(cyclic_sylow_group())) {
        prop_assume!(c.group().two_adic_valuation() >= 2);
        let (sub, reduced) = reduce_to_4m(&c).unwrap();
        prop_assert_eq!(sub.group().order(), 4 * c.group().odd_part());
        prop_assert_eq!(characterize_pst(&c).verdict, characterize_pst(&reduced).verdict);
        for g in reduced.iter() {
            prop_assert!(c.contains(&sub.embed(g).unwrap()));
        }
    }

    #[test]
    fn high_two_parts_are_periodic(c in with_power_closed_set(cyclic_sylow_group())) {
        for (k, part) in c.partition_by_two_part() {
            if k >= 3 && !part.is_empty() {
                prop_assert!(is_periodic_numeric(&part, FRAC_PI_2, 1e-9));
            }
        }
    }

    #[test]
    fn set_literals_round_trip(c in with_symmetric_set(small_group())) {
        let back = ConnectionSet::parse(c.group(), &c.to_string()).unwrap();
        prop_assert_eq!(&back, &c);
        let json = serde_json::to_string(&c).unwrap();
        prop_assert_eq!(ConnectionSet::from_json(c.group(), &json).unwrap(), c);
    }
}
