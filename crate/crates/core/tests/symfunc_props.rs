use deltacat::exact::RatFunc;
use deltacat::symfunc::{partitions, pleth_scale, Basis, Partition, SymFunc};
use proptest::prelude::*;

const BASES: [Basis; 5] = [Basis::M, Basis::E, Basis::H, Basis::P, Basis::S];

fn homogeneous(deg: usize) -> impl Strategy<Value = SymFunc> {
    let parts = partitions(deg);
    let n = parts.len();
    (prop::sample::select(BASES.to_vec()), prop::collection::vec(-3i64..4, n)).prop_map(move |(b, cs)| {
        SymFunc::from_terms(b, parts.iter().cloned().zip(cs.into_iter().map(RatFunc::from_i64)))
    })
}

fn symfunc() -> impl Strategy<Value = SymFunc> {
    (0usize..5).prop_flat_map(homogeneous)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn basis_roundtrips(f in symfunc(), target in prop::sample::select(BASES.to_vec())) {
        let g = f.convert(target).unwrap();
        prop_assert_eq!(g.basis(), target);
        prop_assert!(g.convert(f.basis()).unwrap().equals(&f));
        prop_assert_eq!(g.to_s(), f.to_s());
    }

    #[test]
    fn omega_is_an_isometric_involution(f in homogeneous(4), g in homogeneous(4)) {
        prop_assert!(f.omega().omega().equals(&f));
        prop_assert_eq!(f.hall_inner(&g), g.hall_inner(&f));
        prop_assert_eq!(f.omega().hall_inner(&g.omega()), f.hall_inner(&g));
    }

    #[test]
    fn products_are_commutative_and_omega_multiplicative(f in homogeneous(2), g in homogeneous(3)) {
        prop_assert!(f.mul(&g).equals(&g.mul(&f)));
        prop_assert!(f.mul(&g).omega().equals(&f.omega().mul(&g.omega())));
    }

    #[test]
    fn skewing_is_adjoint_to_multiplication(f in homogeneous(2), g in homogeneous(1), h in homogeneous(3)) {
        prop_assert_eq!(SymFunc::perp(&g, &h).hall_inner(&f), h.hall_inner(&g.mul(&f)));
    }

    #[test]
    fn scaling_alphabets_is_multiplicative(f in homogeneous(2), g in homogeneous(2), a in 1i32..3, b in 0i32..3) {
        let c = RatFunc::monomial(a, 0).sub(&RatFunc::monomial(0, b));
        let lhs = pleth_scale(&f.mul(&g), &c, false);
        let rhs = pleth_scale(&f, &c, false).mul(&pleth_scale(&g, &c, false));
        prop_assert!(lhs.equals(&rhs));
        prop_assert!(pleth_scale(&f, &RatFunc::from_i64(-1), true).equals(&f.omega()));
    }
}

#[test]
fn schur_basis_is_orthonormal() {
    for n in 0..=5 {
        let ps = partitions(n);
        for a in &ps {
            for b in &ps {
                let v = SymFunc::s(a.parts()).hall_inner(&SymFunc::s(b.parts()));
                assert_eq!(v.is_one(), a == b);
                assert!(a == b || v.is_zero());
            }
        }
    }
}

#[test]
fn hook_coefficients_agree() {
    let f = SymFunc::h(2).mul(&SymFunc::e(2)).add(&SymFunc::p(4));
    for k in -1..5 {
        assert_eq!(f.hook_coefficient(k, 4), f.hook_coefficient_alternating(k, 4));
    }
    assert!(SymFunc::one(Basis::S).hook_coefficient(-1, 0).is_one());
    assert_eq!(Partition::hook(1, 4), Partition::new(vec![2, 1, 1]));
}
