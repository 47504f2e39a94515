//! Worked values checked through the public API, independent of the
//! unit tests inside each module.

use num_bigint::BigInt;
use unimodal_core::combinat::{partitions_of, Partition, Permutation};
use unimodal_core::oracle::{self, kreweras_coefficient, unimodal_product, ProductShape};
use unimodal_core::ring::{int, rat, QPoly, Rational, XyPoly};
use unimodal_core::symfunc::{
    complete_h, hook_schur, plethysm, scalar_product, specialize, witt_ell, witt_product, Specialization, SymSeries,
};
use unimodal_core::theorems::{
    bl_sum, c_value, cycle_count_table, no_k_cycle_series, order_divides_series, theorem1_series, theoremq_series,
    u_alpha, u_alpha_q, witt_specialization,
};

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

#[test]
fn c_values_match_brute_force() {
    let formula: Vec<BigInt> = (1..=10).map(|n| c_value(n).unwrap()).collect();
    let brute: Vec<BigInt> = (1..=10).map(|n| oracle::transitive_count(n).unwrap().into()).collect();
    assert_eq!(formula, brute);
    assert_eq!(formula[..6], [1, 1, 1, 2, 3, 5].map(BigInt::from));
}

#[test]
fn small_cycle_counts() {
    assert_eq!(u_alpha(&p(&[1])).unwrap(), 1.into());
    assert_eq!(u_alpha(&p(&[2, 1])).unwrap(), 2.into());
    assert_eq!(u_alpha(&p(&[4])).unwrap(), 2.into());
    assert_eq!(u_alpha_q(&p(&[2])).unwrap(), QPoly::from_ints(&[0, 1]));
    assert_eq!(u_alpha_q(&p(&[2, 1])).unwrap(), QPoly::from_ints(&[0, 1, 1]));
    assert_eq!(u_alpha_q(&p(&[2, 2])).unwrap(), QPoly::from_ints(&[0, 0, 0, 1]));
}

#[test]
fn table_for_four() {
    let t = cycle_count_table(4).unwrap();
    assert_eq!(t.total(), 8);
    assert_eq!(t, oracle::tabulate(4).unwrap());
    let order: Vec<Partition> = t.entries().keys().cloned().collect();
    assert_eq!(order, partitions_of(4));
}

#[test]
fn signed_sums() {
    assert_eq!(bl_sum(&p(&[3])).unwrap(), (-1).into());
    assert_eq!(bl_sum(&p(&[2, 1])).unwrap(), 0.into());
    assert_eq!(bl_sum(&p(&[2, 2])).unwrap(), (-1).into());
}

#[test]
fn scalar_product_against_oracle() {
    // only 132 has type (2,1) and shape (2,1)
    let s = scalar_product(&hook_schur(3, 1, 3).unwrap(), &witt_product(&p(&[2, 1]), 3).unwrap());
    assert_eq!(s, int(1));
}

#[test]
fn specializations() {
    let l22 = plethysm(&complete_h(2, 4).unwrap(), &witt_ell(2, 4).unwrap()).unwrap();
    assert_eq!(specialize(&l22, Specialization::OneMinusQ), QPoly::from_ints(&[0, 0, 0, -1, 1]));
    for n in 1..=8 {
        let at_t = specialize(&complete_h(n, n).unwrap(), Specialization::PowersOfT);
        let at_one = at_t.eval(&int(1));
        let direct: Rational = partitions_of(n).iter().map(|a| Rational::new(1.into(), a.z_value())).sum();
        assert_eq!(at_one, direct);
    }
    assert_eq!(witt_specialization(1).unwrap().poly(), &QPoly::from_ints(&[1, -1]));
    assert_eq!(witt_specialization(4).unwrap().poly(), &QPoly::from_ints(&[0, -1, 2, -1]));
}

#[test]
fn theorem1_low_degree() {
    let s = theorem1_series(2).unwrap();
    let expected = SymSeries::from_terms(
        [(p(&[]), int(1)), (p(&[1]), int(2)), (p(&[1, 1]), int(2)), (p(&[2]), int(2))],
        2,
    );
    assert_eq!(s, expected);
    let s = theorem1_series(8).unwrap();
    for n in 1..=8 {
        assert_eq!(s.coeff(&p(&[n])), Rational::from_integer(c_value(n).unwrap() * 2));
    }
}

#[test]
fn theoremq_low_degree() {
    let s = theoremq_series(4).unwrap();
    assert_eq!(s.coeff(&p(&[1])), QPoly::from_ints(&[1, -1]));
    assert_eq!(s.coeff(&p(&[2, 2])), QPoly::from_ints(&[0, 0, 0, -1, 1]));
}

#[test]
fn corollary_sequences() {
    let d = no_k_cycle_series(1, 6).unwrap();
    let got: Vec<Rational> = (1..=6).map(|n| d.coeff(n)).collect();
    assert_eq!(got, [0, 1, 1, 3, 5, 11].map(int));
    assert_eq!(no_k_cycle_series(2, 2).unwrap().coeff(2), int(1));
    let o = order_divides_series(2, 4).unwrap();
    assert_eq!((1..=4).map(|n| o.coeff(n)).collect::<Vec<_>>(), [1, 2, 3, 4].map(int));
    let id = order_divides_series(1, 9).unwrap();
    assert!((1..=9).all(|n| id.coeff(n) == int(1)));
}

#[test]
fn product_in_s2() {
    let prod = unimodal_product(2).unwrap();
    let xy = XyPoly::x() * XyPoly::y();
    assert_eq!(prod.coeff(&perm("12")), XyPoly::one() + xy);
    assert_eq!(prod.coeff(&perm("21")), XyPoly::x() + XyPoly::y());
}

#[test]
fn product_shapes() {
    let prod = unimodal_product(5).unwrap();
    // (1,2,2) has two internal parts of size 2
    let sigma = perm("51423");
    assert_eq!(sigma.descent_composition().parts(), &[1, 2, 2]);
    assert_eq!(oracle::classify_product_shape(&sigma.descent_composition()), ProductShape::Other);
    assert!(prod.coeff(&sigma).is_zero());
    assert!(kreweras_coefficient(&sigma).is_zero());
    // the identity has n factorizations
    let id = prod.coeff(&Permutation::identity(5));
    assert_eq!(id.eval(&int(1), &int(1)), int(5));
    assert_eq!(id.eval(&rat(1, 2), &int(2)), kreweras_coefficient(&Permutation::identity(5)).eval(&rat(1, 2), &int(2)));
}
