use deltacat::exact::{BigInt, BigRational, IntPoly, Mono, RatFunc};
use deltacat::macdonald::{c_alpha, creation_b, dual_b, from_htilde, htilde, htilde_table, nabla, star_inner, to_htilde};
use deltacat::symfunc::{partitions, Basis, Composition, Partition, SymFunc};
use proptest::prelude::*;

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec())
}

fn poly(terms: &[(i32, i32, i64)]) -> RatFunc {
    RatFunc::from_int_poly(IntPoly::from_terms(
        terms.iter().map(|&(a, b, c)| (Mono::new(a, b), BigInt::from(c))),
    ))
}

/// Number of standard Young tableaux, by the hook length formula.
fn syt(lam: &Partition) -> BigInt {
    let n = lam.size();
    let mut num: BigInt = (1..=n).map(BigInt::from).product();
    for (i, j) in lam.cells() {
        num /= BigInt::from(lam.arm(i, j) + lam.leg(i, j) + 1);
    }
    num
}

#[test]
fn pinned_small_values() {
    assert_eq!(htilde(&p(&[2])).to_string(), "s[2] + q*s[1,1]");
    assert_eq!(htilde(&p(&[1, 1])).to_string(), "s[2] + t*s[1,1]");
    assert!(c_alpha(&Composition::new(vec![1]).unwrap()).equals(&SymFunc::e(1)));
    let c2 = c_alpha(&Composition::new(vec![2]).unwrap());
    assert!(c2.equals(&SymFunc::h(2).scale(&RatFunc::q().inv().unwrap().neg())));
    let e2 = nabla(&SymFunc::e(2), 1);
    assert_eq!(e2.to_s().coeff(&p(&[1, 1])), poly(&[(1, 0, 1), (0, 1, 1)]));
    let c11 = nabla(&c_alpha(&Composition::new(vec![1, 1]).unwrap()), 1);
    assert_eq!(c11.to_s().coeff(&p(&[1, 1])), RatFunc::q());
    let c2n = nabla(&c2, 1);
    assert_eq!(c2n.to_s().coeff(&p(&[1, 1])), RatFunc::t());
}

#[test]
fn htilde_specializations() {
    let one = BigRational::from_integer(BigInt::from(1));
    for n in 1..=6 {
        let table = htilde_table(n);
        for mu in &table.parts {
            // q = t = 1 gives h_1^n
            for lam in &table.parts {
                assert_eq!(table.entry(lam, mu).eval(&one, &one).unwrap(), BigRational::from_integer(syt(lam)));
            }
            // the sign-representation coefficient is q^{n(μ')} t^{n(μ)}
            let corner = table.entry(&Partition::new(vec![1; n]), mu);
            assert_eq!(corner, RatFunc::monomial(mu.conjugate().n_stat() as i32, mu.n_stat() as i32));
            // conjugation swaps q and t
            for lam in &table.parts {
                let entry = table.entry(lam, mu);
                let swapped = IntPoly::from_terms(entry.numerator().terms().iter().map(|(m, c)| (Mono::new(m.t, m.q), c.clone())));
                assert_eq!(RatFunc::from_int_poly(swapped), table.entry(lam, &mu.conjugate()));
            }
        }
    }
}

#[test]
fn star_pairing_is_diagonal_on_degree_three() {
    for a in partitions(3) {
        for b in partitions(3) {
            let v = star_inner(&htilde(&a), &htilde(&b));
            assert_eq!(v.is_zero(), a != b);
        }
    }
}

fn homogeneous(deg: usize) -> impl Strategy<Value = SymFunc> {
    let parts = partitions(deg);
    let n = parts.len();
    prop::collection::vec(-2i64..3, n)
        .prop_map(move |cs| SymFunc::from_terms(Basis::S, parts.iter().cloned().zip(cs.into_iter().map(RatFunc::from_i64))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn htilde_expansion_roundtrip(f in (1usize..5).prop_flat_map(homogeneous)) {
        prop_assert!(from_htilde(&to_htilde(&f)).equals(&f));
        prop_assert!(nabla(&nabla(&f, 1), -1).equals(&f));
    }

    #[test]
    fn creation_operators_are_adjoint(f in homogeneous(2), g in homogeneous(3)) {
        prop_assert_eq!(star_inner(&creation_b(1, &f), &g), star_inner(&f, &dual_b(1, &g)));
    }
}
