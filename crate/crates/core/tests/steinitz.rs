use centra::steinitz::{evaluate, multiply, subfield_contains, Evaluated, Exponent, SteinitzNumber};
use centra::Error;
use proptest::prelude::*;

const PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

fn exponent() -> impl Strategy<Value = Exponent> {
    prop_oneof![4 => (0u32..5).prop_map(Exponent::Finite), 1 => Just(Exponent::Infinite)]
}

fn steinitz() -> impl Strategy<Value = SteinitzNumber> {
    prop::collection::vec(exponent(), PRIMES.len())
        .prop_map(|es| SteinitzNumber::from_parts(PRIMES.iter().copied().zip(es)).unwrap())
}

/// Integer divisibility, independent of factorization.
fn int_divides(m: u64, n: u64) -> bool {
    n.is_multiple_of(m)
}

proptest! {
    #[test]
    fn divisibility_is_a_partial_order(a in steinitz(), b in steinitz(), c in steinitz()) {
        prop_assert!(a.divides(&a));
        if a.divides(&b) && b.divides(&a) {
            prop_assert_eq!(&a, &b);
        }
        if a.divides(&b) && b.divides(&c) {
            prop_assert!(a.divides(&c));
        }
    }

    #[test]
    fn gcd_and_lcm_form_a_lattice(a in steinitz(), b in steinitz(), c in steinitz()) {
        let g = a.gcd(&b);
        let l = a.lcm(&b);
        prop_assert!(g.divides(&a) && g.divides(&b));
        prop_assert!(a.divides(&l) && b.divides(&l));
        if c.divides(&a) && c.divides(&b) {
            prop_assert!(c.divides(&g));
        }
        if a.divides(&c) && b.divides(&c) {
            prop_assert!(l.divides(&c));
        }
        prop_assert_eq!(a.gcd(&a.lcm(&b)), a.clone());
        prop_assert_eq!(a.lcm(&a.gcd(&b)), a.clone());
        prop_assert_eq!(g, b.gcd(&a));
        prop_assert_eq!(a.gcd(&a), a.clone());
    }

    #[test]
    fn text_round_trips(a in steinitz()) {
        let back: SteinitzNumber = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn naturals_embed_as_an_order_embedding(m in 1u64..2000, n in 1u64..2000) {
        let (sm, sn) = (SteinitzNumber::from_natural(m).unwrap(), SteinitzNumber::from_natural(n).unwrap());
        prop_assert_eq!(sm.divides(&sn), int_divides(m, n));
        prop_assert_eq!(multiply(&sm, &sn), SteinitzNumber::from_natural(m * n).unwrap());
        prop_assert!(sm.is_finite());
    }

    #[test]
    fn subfields_follow_divisibility(q in prop::sample::select(vec![2u64, 3, 4, 8, 9, 25]), a in steinitz(), b in steinitz()) {
        prop_assert_eq!(subfield_contains(q, &a, &b).unwrap(), a.divides(&b));
        prop_assert!(subfield_contains(q, &a, &a).unwrap());
    }
}

#[test]
fn examples() {
    assert_eq!(SteinitzNumber::from_natural(1).unwrap().support().count(), 0);
    let twelve: Vec<_> = SteinitzNumber::from_natural(12).unwrap().support().collect();
    assert_eq!(twelve, vec![(2, Exponent::Finite(2)), (3, Exponent::Finite(1))]);
    let p: Vec<_> = SteinitzNumber::from_natural(97).unwrap().support().collect();
    assert_eq!(p, vec![(97, Exponent::Finite(1))]);

    let two_inf = SteinitzNumber::from_parts([(2, Exponent::Infinite)]).unwrap();
    for k in [1, 5, 64, u32::MAX] {
        assert!(SteinitzNumber::from_parts([(2, Exponent::Finite(k))]).unwrap().divides(&two_inf));
    }
    assert!(!two_inf.divides(&SteinitzNumber::from_natural(32).unwrap()));
    assert!(!two_inf.is_finite());

    let four = SteinitzNumber::from_natural(2).unwrap();
    let eight = SteinitzNumber::from_natural(3).unwrap();
    assert!(subfield_contains(2, &four, &two_inf).unwrap());
    assert!(!subfield_contains(2, &eight, &two_inf).unwrap());
    assert!(matches!(subfield_contains(12, &four, &four), Err(Error::NotPrimePower(12))));
    assert!(SteinitzNumber::from_parts([(4, Exponent::Finite(1))]).is_err());
}

#[test]
fn expressions() {
    assert_eq!(evaluate("2^3 | 2^inf").unwrap(), Evaluated::Truth(true));
    assert_eq!(evaluate("lcm(2^inf * 3, 3^2 * 5)").unwrap().to_string(), "2^inf * 3^2 * 5^1");
    assert_eq!(evaluate("subfield(2, 2, 2^inf)").unwrap().to_string(), "true");
    assert_eq!(evaluate("  1 ").unwrap().to_string(), "1");
    assert!(matches!(evaluate("gcd(2, )"), Err(Error::Parse { .. })));
    assert!(evaluate("subfield(6, 1, 1)").is_err());
}
