use proptest::prelude::*;

use ncsym::combinatorics::{Permutation, SetPartition};
use ncsym::ncsym::{NcBasis, NcExpr};
use ncsym::nsym::{NSymBasis, NSymExpr};
use ncsym::Q;

const BASES: [NcBasis; 4] = [NcBasis::M, NcBasis::P, NcBasis::E, NcBasis::H];

fn set_partition(n: usize) -> impl Strategy<Value = SetPartition> {
    (0..SetPartition::all(n).len()).prop_map(move |i| SetPartition::all(n)[i].clone())
}

fn expr(n: usize) -> impl Strategy<Value = NcExpr> {
    (0..4usize, prop::collection::vec((set_partition(n), -5i64..6), 1..4)).prop_map(|(b, ts)| {
        ts.into_iter().fold(NcExpr::zero(BASES[b]), |acc, (pi, c)| {
            acc.add(&NcExpr::single(BASES[b], pi).scale(&Q::from_integer(c.into()))).unwrap()
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Permutation::new(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn basis_round_trip(f in expr(4), t in 0..4usize) {
        let g = f.convert(BASES[t]).unwrap();
        prop_assert_eq!(g.convert(f.basis()).unwrap(), f);
    }

    #[test]
    fn conversion_agrees_with_monomial_oracle(f in expr(3), t in 0..4usize) {
        let g = f.convert(BASES[t]).unwrap();
        prop_assert_eq!(g.oracle_expand(3).unwrap(), f.oracle_expand(3).unwrap());
    }

    #[test]
    fn omega_is_an_involution(f in expr(4)) {
        let back = f.omega().unwrap().omega().unwrap();
        prop_assert!(back.equals(&f).unwrap());
    }

    #[test]
    fn delta_action_is_a_group_action(f in expr(4), a in permutation(4), b in permutation(4)) {
        let lhs = f.delta_action(&b).unwrap().delta_action(&a).unwrap();
        let rhs = f.delta_action(&a.compose(&b).unwrap()).unwrap();
        prop_assert!(lhs.equals(&rhs).unwrap());
    }

    #[test]
    fn rho_is_multiplicative(f in expr(2), g in expr(2)) {
        let lhs = f.product(&g).unwrap().rho().unwrap();
        let rhs = f.rho().unwrap().product(&g.rho().unwrap()).unwrap();
        prop_assert!(lhs.equals(&rhs).unwrap());
    }

    #[test]
    fn text_and_json_round_trip(f in expr(4)) {
        prop_assert_eq!(NcExpr::from_json(&f.to_json()).unwrap(), f.clone());
        if !f.is_zero() {
            prop_assert_eq!(f.to_string().parse::<NcExpr>().unwrap(), f);
        }
    }

    #[test]
    fn nsym_ribbons_round_trip(n in 1usize..6, seed in any::<u64>()) {
        let comps = ncsym::combinatorics::Composition::all(n);
        let a = comps[(seed as usize) % comps.len()].clone();
        let r = NSymExpr::single(NSymBasis::R, a);
        let h = r.to_h();
        prop_assert!(h.convert(NSymBasis::R).unwrap().equals(&r).unwrap());
        prop_assert!(h.convert(NSymBasis::Immaculate).unwrap().to_h().equals(&h).unwrap());
    }
}
