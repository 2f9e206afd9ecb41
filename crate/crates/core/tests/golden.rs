mod common;

use std::collections::BTreeSet;

use common::{sets, symbols_of, words};
use mincode::lincode::{condensed_code, cyclic_code, shorten_once, weight_distribution};
use mincode::minimality::{is_minimal_code_exhaustive, minimal_codewords};
use mincode::sss::{access_structure, access_structure_trace, dictator_prediction};
use mincode::{Field, Method, Verdict};

const BINARY_SETS: &str = include_str!("fixtures/c2_6_3_sets.json");
const TERNARY_SETS: &str = include_str!("fixtures/c3_4_2_sets.json");
const SHORTENED: &str = include_str!("fixtures/c2_6_3_shortened_words.json");
const CONDENSED: &str = include_str!("fixtures/c3_4_2_condensed_words.json");

// alpha as printed for the ternary lists is a root of x^4 + 2x^3 + x^2 + x + 2.
const TERNARY_MODULUS: [u32; 5] = [2, 1, 1, 2, 1];

#[test]
fn binary_access_structure() {
    let f = Field::new(2, 1, 6, None).unwrap();
    let a = access_structure(&cyclic_code(&f, 3).unwrap()).unwrap();
    let got: BTreeSet<Vec<usize>> = a.sets.iter().cloned().collect();
    assert_eq!(got, sets(BINARY_SETS));
    assert_eq!(a.count(), 32);
    assert!(a.dictators.is_empty());
    assert_eq!(a.frequency.len(), 20);
    assert!(a.frequency.values().all(|&f| f == 16));
    assert_eq!(access_structure_trace(&f, 3).unwrap(), a);
}

#[test]
fn ternary_access_structure() {
    let f = Field::new(3, 1, 4, None).unwrap();
    let code = cyclic_code(&f, 2).unwrap();
    let a = access_structure(&code).unwrap();
    let got: BTreeSet<Vec<usize>> = a.sets.iter().cloned().collect();
    assert_eq!(got, sets(TERNARY_SETS));
    assert_eq!(a.dictators, vec![20]);
    assert_eq!(a.frequency[&20], 27);
    assert_eq!(a.frequency.values().filter(|&&f| f == 18).count(), 38);
    assert_eq!(dictator_prediction(3, 2, &code), a.dictators);
}

#[test]
fn shortened_binary_minimal_words() {
    let f = Field::new(2, 1, 6, None).unwrap();
    let s = shorten_once(&cyclic_code(&f, 3).unwrap()).unwrap();
    assert_eq!((s.n(), s.k()), (20, 5));
    assert!(is_minimal_code_exhaustive(&s).unwrap().is_minimal());
    assert_eq!(symbols_of(&minimal_codewords(&s).unwrap()), words(SHORTENED));
    let a = access_structure(&s).unwrap();
    assert_eq!(a.count(), 16);
    assert!(a.dictators.is_empty());
}

#[test]
fn condensed_ternary_words() {
    let f = Field::new(3, 1, 4, Some(&TERNARY_MODULUS)).unwrap();
    let c = condensed_code(&f, 2).unwrap();
    assert_eq!((c.n(), c.k(), c.q()), (20, 4, 3));
    let cert = is_minimal_code_exhaustive(&c).unwrap();
    assert_eq!(cert.verdict, Verdict::Minimal);
    assert_eq!(symbols_of(&minimal_codewords(&c).unwrap()), words(CONDENSED));
    let a = access_structure(&c).unwrap();
    assert_eq!(a.count(), 27);
    assert!(a.dictators.is_empty());

    // The same field also reproduces the 27 sets.
    let full: BTreeSet<Vec<usize>> = access_structure(&cyclic_code(&f, 2).unwrap()).unwrap().sets.into_iter().collect();
    assert_eq!(full, sets(TERNARY_SETS));
}

#[test]
fn default_field_condensed_code_is_equivalent() {
    let f = Field::new(3, 1, 4, None).unwrap();
    let alt = Field::new(3, 1, 4, Some(&TERNARY_MODULUS)).unwrap();
    let c = condensed_code(&f, 2).unwrap();
    let d = condensed_code(&alt, 2).unwrap();
    assert_eq!(weight_distribution(&c).unwrap(), weight_distribution(&d).unwrap());
    let cert = is_minimal_code_exhaustive(&c).unwrap();
    assert!(cert.is_minimal());
    assert_ne!(cert.method, Method::OneWeight);
    assert_eq!(minimal_codewords(&c).unwrap().len(), 27);
}
