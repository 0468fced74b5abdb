use kacpoly::exactalg::{monomials_up_to, rat, weight};
use kacpoly::partitions::{p_stat, pairing};
use kacpoly::{BigRat, MultiSeries, Partition, QPoly, QRational};
use proptest::prelude::*;

type Series = MultiSeries<BigRat>;

const NVARS: usize = 2;
const BOUND: u32 = 5;

/// Series with constant term 1 and small integer coefficients elsewhere.
fn unit_series() -> impl Strategy<Value = Series> {
    let slots = monomials_up_to(NVARS, BOUND).len() - 1;
    prop::collection::vec(-3i64..=3, slots).prop_map(|cs| {
        let mut terms = vec![(vec![0; NVARS], rat(1, 1))];
        for (m, c) in monomials_up_to(NVARS, BOUND).into_iter().skip(1).zip(cs) {
            terms.push((m, rat(c, 1)));
        }
        Series::from_terms(NVARS, BOUND, terms)
    })
}

fn small_poly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-4i64..=4, 1..5).prop_map(|c| QPoly::from_ints(&c))
}

/// `(1 - q^k)` products, so denominators look like the ones Hua series produce.
fn cyclotomic_den() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(1usize..4, 0..3)
        .prop_map(|ks| ks.into_iter().fold(QPoly::one(), |acc, k| &acc * &(&QPoly::one() - &QPoly::q_pow(k))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn evaluation_is_multiplicative(
        (n1, d1, n2, d2) in (small_poly(), cyclotomic_den(), small_poly(), cyclotomic_den()),
        x in (-5i64..=5, 2i64..=7),
    ) {
        let f = QRational::new(n1, d1).unwrap();
        let g = QRational::new(n2, d2).unwrap();
        let x = rat(x.0, x.1);
        // ±1 are the only rational roots of the (1 - q^k) denominators
        prop_assume!(&x * &x != rat(1, 1));
        let lhs = (&f * &g).eval_at(&x).unwrap();
        prop_assert_eq!(lhs, f.eval_at(&x).unwrap() * g.eval_at(&x).unwrap());
        prop_assert_eq!((&f + &g).eval_at(&x).unwrap(), f.eval_at(&x).unwrap() + g.eval_at(&x).unwrap());
    }

    #[test]
    fn plethystic_log_is_additive(f in unit_series(), g in unit_series()) {
        let lhs = (&f * &g).plethystic_log().unwrap();
        let rhs = &f.plethystic_log().unwrap() + &g.plethystic_log().unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn plethystic_log_of_products(cs in prop::collection::vec(-3i64..=3, monomials_up_to(NVARS, BOUND).len() - 1)) {
        // Log Π_w (1 - x^w)^{-c_w} = Σ_w c_w x^w
        let one = Series::one(NVARS, BOUND);
        let mut product = one.clone();
        let mut expected = Series::zero(NVARS, BOUND);
        for (m, c) in monomials_up_to(NVARS, BOUND).into_iter().skip(1).zip(cs) {
            let x_m = Series::monomial(NVARS, BOUND, m.clone(), rat(1, 1));
            product = &product * &(&one - &x_m).pow_int(-c).unwrap();
            expected.add_term(m, rat(c, 1));
        }
        prop_assert_eq!(product.plethystic_log().unwrap(), expected);
    }

    #[test]
    fn adams_operations_compose(f in unit_series(), d in 1u32..4, e in 1u32..4) {
        prop_assert_eq!(f.adams(d).adams(e), f.adams(d * e));
        let bounded = f.adams(d);
        prop_assert!(bounded.terms().all(|(m, _)| weight(m) <= BOUND));
    }

    #[test]
    fn exp_inverts_log(f in unit_series()) {
        prop_assert_eq!(f.log().unwrap().exp().unwrap(), f.clone());
        let g = &f - &Series::one(NVARS, BOUND);
        prop_assert_eq!(g.exp().unwrap().log().unwrap(), g);
    }

    #[test]
    fn rational_powers(f in unit_series(), p in -4i64..=4, r in 1i64..=4) {
        let root = f.pow(&rat(p, r)).unwrap();
        prop_assert_eq!(root.pow_int(r).unwrap(), f.pow_int(p).unwrap());
        prop_assert_eq!(&f * &f.inverse().unwrap(), Series::one(NVARS, BOUND));
    }
}

#[test]
fn pairing_is_sum_of_squared_conjugate_parts() {
    for lambda in Partition::all_up_to(10) {
        let conj: u64 = lambda.conjugate().parts().iter().map(|&c| u64::from(c) * u64::from(c)).sum();
        assert_eq!(pairing(&lambda.to_mult()), conj, "λ = {lambda}");
    }
}

#[test]
fn dilation_scales_pairing_and_statistics() {
    for lambda in Partition::all_up_to(6).into_iter().filter(|l| !l.is_empty()) {
        let m = lambda.to_mult();
        for n in 1..=3u32 {
            let dilated = m.dilate(n);
            assert_eq!(pairing(&dilated), u64::from(n) * pairing(&m));
            for i in 1..=lambda.largest_part() as usize {
                assert_eq!(p_stat(n as usize * i, &dilated), u64::from(n) * p_stat(i, &m));
            }
        }
    }
}
