//! Property tests over randomly generated ideals, systems, and clutters.

use proptest::collection::vec;
use proptest::prelude::*;

use nmi_core::{
    closure_membership, lp_max, power_membership, Budget, Clutter, IdealKind, LpSolution,
    MonomialIdeal, QMatrix, QVector,
};

fn small_ideal() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=4)
        .prop_flat_map(|s| vec(vec(0u64..=3, s), 1..=5).prop_map(move |gens| (s, gens)))
        .prop_map(|(s, gens)| MonomialIdeal::new(s, gens).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generators_form_an_antichain(ideal in small_ideal()) {
        for g in ideal.gens() {
            for h in ideal.gens() {
                prop_assert!(g == h || !nmi_core::divides(g, h));
            }
        }
    }

    #[test]
    fn product_is_commutative(a in small_ideal(), b in small_ideal()) {
        prop_assume!(a.num_vars() == b.num_vars());
        prop_assert_eq!(a.product(&b).unwrap(), b.product(&a).unwrap());
    }

    #[test]
    fn dual_star_is_an_involution(
        s in 2usize..=5,
        picks in vec(vec(any::<bool>(), 5), 1..=5),
    ) {
        let gens: Vec<Vec<u64>> = picks
            .iter()
            .map(|row| (0..s).map(|i| u64::from(row[i % row.len()])).collect())
            // A full-support generator complements to 1 and collapses the dual.
            .filter(|g: &Vec<u64>| g.contains(&0) && g.contains(&1))
            .collect();
        prop_assume!(!gens.is_empty());
        let ideal = MonomialIdeal::new(s, gens).unwrap();
        prop_assume!(ideal.kind() == IdealKind::Proper);
        let dual = ideal.dual_star().unwrap();
        prop_assume!(dual.kind() == IdealKind::Proper);
        prop_assert_eq!(dual.dual_star().unwrap(), ideal);
    }

    #[test]
    fn integer_membership_implies_lp_membership(
        ideal in small_ideal(),
        a in vec(0u64..=6, 4),
        n in 1u64..=3,
    ) {
        prop_assume!(ideal.kind() == IdealKind::Proper);
        let a = a[..ideal.num_vars()].to_vec();
        if power_membership(&ideal, &a, n).is_some() {
            prop_assert!(closure_membership(&ideal, &a, n).unwrap().member);
        }
    }

    #[test]
    fn power_generators_lie_in_the_closure(ideal in small_ideal(), n in 1u64..=2) {
        prop_assume!(ideal.kind() == IdealKind::Proper);
        let power = ideal.pow(n).unwrap();
        for g in power.gens() {
            prop_assert!(closure_membership(&ideal, g, n).unwrap().member);
        }
    }

    #[test]
    fn lp_certificates_verify(
        rows in vec(vec(0i64..=4, 4), 1..=4),
        b_entries in vec(-2i64..=4, 4),
        c_entries in vec(0i64..=4, 4),
    ) {
        let m = rows.len();
        let a = QMatrix::from_int_rows(&rows).unwrap();
        let b = QVector::from_ints(&b_entries[..m]);
        let c = QVector::from_ints(&c_entries[..4]);
        match lp_max(&a, &b, &c).unwrap() {
            LpSolution::Optimal { value, primal, dual } => {
                prop_assert!(primal.is_nonnegative());
                prop_assert!(a.mul_vec(&primal).le(&b));
                prop_assert!(dual.is_nonnegative());
                prop_assert!(a.vec_mul(&dual).ge(&c));
                prop_assert_eq!(c.dot(&primal), value.clone());
                prop_assert_eq!(b.dot(&dual), value);
            }
            LpSolution::Infeasible { farkas } => {
                prop_assert!(farkas.is_nonnegative());
                prop_assert!(a.vec_mul(&farkas).is_nonnegative());
                prop_assert!(farkas.dot(&b) < nmi_core::rat_int(0));
            }
            LpSolution::Unbounded => {}
        }
    }

    #[test]
    fn blocker_involution(
        n in 1usize..=5,
        raw in vec(vec(any::<bool>(), 5), 0..=6),
    ) {
        let mut kept: Vec<Vec<usize>> = Vec::new();
        'outer: for row in &raw {
            let edge: Vec<usize> = (0..n).filter(|&i| row[i % row.len()]).collect();
            if edge.is_empty() {
                continue;
            }
            let em: u64 = edge.iter().fold(0, |m, &v| m | 1 << v);
            for k in &kept {
                let km: u64 = k.iter().fold(0, |m, &v| m | 1 << v);
                if km & em == km || km & em == em {
                    continue 'outer;
                }
            }
            kept.push(edge);
        }
        let c = Clutter::new(n, kept).unwrap();
        prop_assert_eq!(c.blocker().blocker(), c);
    }
}

/// The normality verdict is independent of generator order and duplication.
#[test]
fn normality_is_representation_independent() {
    let budget = Budget::default();
    let a = MonomialIdeal::new(
        3,
        vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 1]],
    )
    .unwrap();
    let b = MonomialIdeal::new(3, vec![vec![1, 0, 1], vec![1, 1, 0], vec![0, 1, 1]]).unwrap();
    assert_eq!(a, b);
    assert_eq!(
        nmi_core::normality_via_rees(&a, &budget).unwrap().normal,
        nmi_core::normality_via_rees(&b, &budget).unwrap().normal
    );
}
