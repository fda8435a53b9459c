//! Structural invariants of the field layer and the sparse polynomial
//! representation, checked exhaustively on small fields and by property
//! testing on randomized inputs.

use proptest::prelude::*;
use rayon::prelude::*;

use permcycle::{divisors, euler_phi, Field, FieldRef, SparsePoly};

fn odd_prime_powers(limit: u64) -> Vec<u64> {
    (3..=limit)
        .step_by(2)
        .filter(|&q| permcycle::field::factorize(q).len() == 1)
        .collect()
}

#[test]
fn encoding_round_trips_exhaustively() {
    for q in odd_prime_powers(2000) {
        let f = Field::from_order(q).unwrap();
        for x in 0..q {
            let coeffs = f.decode(x);
            assert_eq!(coeffs.len(), f.k() as usize);
            assert_eq!(f.encode(&coeffs), x, "q = {q}");
        }
    }
}

#[test]
fn element_orders_divide_group_order() {
    odd_prime_powers(2000).par_iter().for_each(|&q| {
        let f = Field::from_order(q).unwrap();
        for x in 1..q {
            let ord = f.element_order(x).unwrap();
            assert_eq!((q - 1) % ord, 0, "q = {q}, x = {x}");
            assert_eq!(f.pow(x, ord), 1);
        }
    });
}

#[test]
fn order_classes_partition_the_group() {
    odd_prime_powers(2000).par_iter().for_each(|&q| {
        let f = Field::from_order(q).unwrap();
        let mut total = 0;
        for m in divisors(q - 1) {
            let elems = f.elements_of_order(m);
            assert_eq!(elems.len() as u64, euler_phi(m), "q = {q}, m = {m}");
            for &x in &elems {
                assert_eq!(f.element_order(x).unwrap(), m);
            }
            total += elems.len() as u64;
        }
        assert_eq!(total, q - 1);
    });
}

#[test]
fn discrete_log_inverts_exponentiation() {
    odd_prime_powers(2000).par_iter().for_each(|&q| {
        let f = Field::from_order(q).unwrap();
        let g = f.generator();
        for e in 0..(q - 1) {
            assert_eq!(f.discrete_log(f.pow(g, e)).unwrap(), e, "q = {q}");
        }
    });
}

#[test]
fn generator_is_deterministic() {
    for q in odd_prime_powers(500) {
        let a = Field::from_order(q).unwrap();
        let b = Field::from_order(q).unwrap();
        assert_eq!(a.generator(), b.generator());
        assert_eq!(a.modulus(), b.modulus());
        assert_eq!(a.element_order(a.generator()).unwrap(), q - 1);
    }
}

#[test]
fn inverses_multiply_to_one() {
    odd_prime_powers(2000).par_iter().for_each(|&q| {
        let f = Field::from_order(q).unwrap();
        for x in 1..q {
            assert_eq!(f.mul(x, f.inv(x).unwrap()), 1, "q = {q}, x = {x}");
        }
        assert!(f.inv(0).is_err());
    });
}

fn sample_field() -> impl Strategy<Value = FieldRef> {
    let qs = odd_prime_powers(500);
    (0..qs.len()).prop_map(move |i| Field::from_order(qs[i]).unwrap())
}

fn poly_in(f: FieldRef) -> impl Strategy<Value = SparsePoly> {
    let q = f.q();
    proptest::collection::vec((0u64..3 * q, 0u64..q), 0..8)
        .prop_map(move |raw| SparsePoly::new(f.clone(), raw))
}

proptest! {
    #[test]
    fn parse_inverts_format(p in sample_field().prop_flat_map(poly_in)) {
        let text = p.to_string();
        let back = SparsePoly::parse(p.field().clone(), &text).unwrap();
        prop_assert_eq!(&back, &p);
    }

    #[test]
    fn canonicalization_is_idempotent(p in sample_field().prop_flat_map(poly_in)) {
        let again = SparsePoly::new(p.field().clone(), p.terms().iter().copied());
        prop_assert_eq!(&again, &p);
        // exponents strictly descending, no zero coefficients
        for w in p.terms().windows(2) {
            prop_assert!(w[0].0 > w[1].0);
        }
        prop_assert!(p.terms().iter().all(|&(_, c)| c != 0));
    }

    #[test]
    fn formally_equal_polys_agree_pointwise(
        (p, shift) in sample_field()
            .prop_flat_map(|f| (poly_in(f), 0u64..4))
    ) {
        let f = p.field().clone();
        let q = f.q();
        // rebuild with exponents bumped by multiples of the group order;
        // x^(e + (q-1)) agrees with x^e away from 0, and evaluation maps
        // exponents on nonzero inputs through e mod (q-1)
        let bumped = SparsePoly::new(
            f.clone(),
            p.terms().iter().map(|&(e, c)| {
                if e == 0 { (e, c) } else { (e + shift * (q - 1), c) }
            }),
        );
        for x in 1..q.min(64) {
            prop_assert_eq!(p.evaluate(x), bumped.evaluate(x));
        }
    }
}
