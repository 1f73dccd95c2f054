mod common;

use common::alphabet;
use proptest::prelude::*;
use spo_tableau::insertion::{product, spo_insert, OneRowWord};
use spo_tableau::reverse::decompose_with_sequence;
use spo_tableau::tableau::{Alphabet, Entry, Tableau};

fn assert_clean(violations: Vec<String>) {
    assert!(violations.is_empty(), "{} violations, first: {}", violations.len(), violations[0]);
}

#[test]
fn weights_multiply_and_intermediates_stay_valid() {
    assert_clean(common::product_weights_and_validity(4, 3, alphabet(2, 1)));
    assert_clean(common::product_weights_and_validity(3, 2, alphabet(1, 2)));
}

#[test]
fn single_insertions_preserve_weight() {
    assert_clean(common::insertion_weights(4, alphabet(2, 1)));
    assert_clean(common::insertion_weights(3, alphabet(2, 2)));
}

#[test]
fn routes_are_connected_and_end_at_the_new_box() {
    assert_clean(common::route_geometry(4, alphabet(2, 1)));
}

#[test]
fn consecutive_circled_insertions() {
    assert_clean(common::circled_pairs(3, alphabet(2, 2)));
    assert_clean(common::circled_pairs(4, alphabet(1, 2)));
}

#[test]
fn consecutive_symplectic_insertions() {
    assert_clean(common::symplectic_pairs(4, alphabet(2, 1)));
}

#[test]
fn circled_then_symplectic_insertion() {
    assert_clean(common::circled_then_symplectic(4, alphabet(2, 1)));
}

#[test]
fn cancellations_come_first() {
    assert_clean(common::cancellations_form_initial_strip(4, 3, alphabet(2, 1)));
}

#[test]
fn first_row_never_shrinks_after_circled_growth() {
    assert_clean(common::first_row_preserved(4, alphabet(2, 1)));
}

#[test]
fn cancelled_boxes_sit_in_distinct_columns() {
    assert_clean(common::cancelled_columns(4, alphabet(2, 1)));
}

fn letter(a: Alphabet) -> impl Strategy<Value = Entry> {
    prop::sample::select(a.letters())
}

/// A random tableau built by inserting letters into the empty tableau.
fn tableau(a: Alphabet) -> impl Strategy<Value = Tableau> {
    prop::collection::vec(letter(a), 0..8).prop_map(move |letters| {
        letters
            .into_iter()
            .fold(Tableau::empty(a), |t, x| spo_insert(&t, x).expect("valid letter").0)
    })
}

fn word(a: Alphabet) -> impl Strategy<Value = OneRowWord> {
    prop::collection::vec(letter(a), 0..5).prop_filter_map("not a one-row word", |mut v| {
        v.sort();
        OneRowWord::new(v).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn roundtrip_beyond_the_exhaustive_range(
        (t, u) in (tableau(alphabet(3, 2)), word(alphabet(3, 2)))
    ) {
        let (s, seq) = product(&t, &u).unwrap();
        prop_assert!(s.validate_spo());
        let a = t.alphabet();
        let expected = u.entries().iter().fold(t.weight(), |w, x| w.checked_mul(&x.weight(a)).unwrap());
        prop_assert_eq!(s.weight(), expected);
        let (t2, u2) = decompose_with_sequence(&s, &seq).unwrap();
        prop_assert_eq!(t2, t);
        prop_assert_eq!(u2, u);
    }
}
