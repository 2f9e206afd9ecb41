use mincode::{Elem, Field, Fq};
use proptest::prelude::*;

fn fields() -> Vec<Field> {
    [(2u64, 1u32, 6u32), (3, 1, 4), (2, 2, 3), (5, 1, 2), (3, 2, 2), (7, 1, 3)]
        .iter()
        .map(|&(p, s, m)| Field::new(p, s, m, None).unwrap())
        .collect()
}

proptest! {
    #[test]
    fn ring_axioms(idx in 0usize..6, a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let f = &fields()[idx];
        let pick = |x: u64| f.elements().nth((x % f.order()) as usize).unwrap();
        let (a, b, c) = (pick(a), pick(b), pick(c));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), Elem::ZERO);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE);
        }
    }

    #[test]
    fn trace_is_linear_and_frobenius_fixed(idx in 0usize..6, a in any::<u64>(), b in any::<u64>(), c in any::<u32>()) {
        let f = &fields()[idx];
        let pick = |x: u64| f.elements().nth((x % f.order()) as usize).unwrap();
        let (a, b) = (pick(a), pick(b));
        let lam = f.subfield_element(c % f.q() as u32).unwrap();
        prop_assert_eq!(f.trace(f.add(a, b)), f.add(f.trace(a), f.trace(b)));
        prop_assert_eq!(f.trace(f.mul(lam, a)), f.mul(lam, f.trace(a)));
        prop_assert!(f.in_subfield(f.trace(a)));
        prop_assert_eq!(f.trace(f.frobenius(a)), f.trace(a));
        prop_assert_eq!(f.frobenius(lam), lam);
    }
}

#[test]
fn symbol_arithmetic_matches_subfield() {
    for f in fields() {
        let fq = Fq::from_field(&f).unwrap();
        for x in fq.symbols() {
            for y in fq.symbols() {
                let (ex, ey) = (f.subfield_element(x as u32).unwrap(), f.subfield_element(y as u32).unwrap());
                assert_eq!(f.subfield_element(fq.add(x, y) as u32).unwrap(), f.add(ex, ey));
                assert_eq!(f.subfield_element(fq.mul(x, y) as u32).unwrap(), f.mul(ex, ey));
            }
        }
    }
}

#[test]
fn primitive_element_has_full_order() {
    for f in fields() {
        assert_eq!(f.multiplicative_order(f.primitive()), Some(f.order() - 1));
    }
}
