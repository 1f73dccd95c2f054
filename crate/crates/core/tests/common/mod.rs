//! Exhaustive checkers shared by the integration suites. Each returns the
//! list of violations found, empty on success.

#![allow(dead_code)]

use spo_tableau::insertion::{product_traced, spo_insert, Outcome};
use spo_tableau::pieri::one_row_words;
use spo_tableau::shape::{Box, Partition};
use spo_tableau::tableau::{enumerate_spo_tableaux, enumerate_symplectic_tableaux, Alphabet, Entry, Tableau};

pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    fn rec(left: usize, cap: usize, parts: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition::new(parts.clone()).unwrap());
            return;
        }
        for p in (1..=cap.min(left)).rev() {
            parts.push(p);
            rec(left - p, p, parts, out);
            parts.pop();
        }
    }
    let mut out = Vec::new();
    for size in 0..=n {
        rec(size, size, &mut Vec::new(), &mut out);
    }
    out
}

pub fn alphabet(m: u32, n: u32) -> Alphabet {
    Alphabet::new(m, n).unwrap()
}

pub fn tableaux_up_to(size: usize, a: Alphabet) -> Vec<Tableau> {
    partitions_up_to(size)
        .iter()
        .flat_map(|p| enumerate_spo_tableaux(p, a).collect::<Vec<_>>())
        .collect()
}

fn added(outcome: Outcome) -> Option<Box> {
    match outcome {
        Outcome::AddedBox(b) => Some(b),
        Outcome::CancelledBox(_) => None,
    }
}

fn removed(outcome: Outcome) -> Option<Box> {
    match outcome {
        Outcome::CancelledBox(b) => Some(b),
        Outcome::AddedBox(_) => None,
    }
}

fn weakly_above_strictly_right(second: Box, first: Box) -> bool {
    second.row <= first.row && second.col > first.col
}

/// `wt(T · U) = wt(T) · wt(U)` and every intermediate tableau is valid.
pub fn product_weights_and_validity(size: usize, k: usize, a: Alphabet) -> Vec<String> {
    let mut bad = Vec::new();
    let words: Vec<_> = (0..=k).flat_map(|j| one_row_words(j, a)).collect();
    for t in tableaux_up_to(size, a) {
        for u in &words {
            let (s, seq, trace) = product_traced(&t, u).unwrap();
            let mut w = t.weight();
            for e in u.entries() {
                w = w.checked_mul(&e.weight(a)).unwrap();
            }
            if s.weight() != w {
                bad.push(format!("weight: {t} · {u} = {s}"));
            }
            for (x, step, _) in &trace.steps {
                if !step.validate_spo() {
                    bad.push(format!("invalid intermediate after {x}: {t} · {u} -> {step}"));
                }
            }
            if seq.validate().is_err() || seq.nu != s.shape() || seq.lambda != t.shape() {
                bad.push(format!("shape record {seq} for {t} · {u}"));
            }
        }
    }
    bad
}

/// Single-letter insertion multiplies weights, including cancellations.
pub fn insertion_weights(size: usize, a: Alphabet) -> Vec<String> {
    let mut bad = Vec::new();
    for t in tableaux_up_to(size, a) {
        for x in a.letters() {
            let (s, tr) = spo_insert(&t, x).unwrap();
            if s.weight() != t.weight().checked_mul(&x.weight(a)).unwrap() {
                bad.push(format!("{x} into {t}"));
            }
            let grew = s.size() == t.size() + 1;
            if grew == tr.outcome.is_cancellation() || (!grew && s.size() + 1 != t.size()) {
                bad.push(format!("size change {x} into {t}: {} -> {}", t.size(), s.size()));
            }
        }
    }
    bad
}

/// Row-insertion routes of `B₀` letters go down one row at a time and never
/// move right.
pub fn route_geometry(size: usize, a: Alphabet) -> Vec<String> {
    let mut bad = Vec::new();
    for t in tableaux_up_to(size, a) {
        for x in a.b0_letters() {
            let (_, tr) = spo_insert(&t, x).unwrap();
            for w in tr.bump_route.windows(2) {
                if w[1].row != w[0].row + 1 || w[1].col > w[0].col {
                    bad.push(format!("route {:?} for {x} into {t}", tr.bump_route));
                    break;
                }
            }
            if let Some(first) = tr.bump_route.first() {
                if first.row != 1 {
                    bad.push(format!("route for {x} into {t} starts in row {}", first.row));
                }
            }
        }
    }
    bad
}

/// Two circled letters `x1 > x2` inserted in that order: the second new box
/// is weakly above and strictly right of the first.
pub fn circled_pairs(size: usize, a: Alphabet) -> Vec<String> {
    let mut bad = Vec::new();
    let circled: Vec<Entry> = (1..=a.n).map(Entry::Circled).collect();
    for t in tableaux_up_to(size, a) {
        for &x1 in &circled {
            for &x2 in circled.iter().filter(|&&x2| x2 < x1) {
                let (u, tr1) = spo_insert(&t, x1).unwrap();
                let (_, tr2) = spo_insert(&u, x2).unwrap();
                let (s1, s2) = (added(tr1.outcome).unwrap(), added(tr2.outcome).unwrap());
                if !weakly_above_strictly_right(s2, s1) {
                    bad.push(format!("{x1} then {x2} into {t}: {s1} then {s2}"));
                }
            }
        }
    }
    bad
}

/// Two non-cancelling `B₀` letters `x1 <= x2`: both the new boxes and the
/// final boxes of the row routes move weakly up and strictly right.
pub fn symplectic_pairs(size: usize, a: Alphabet) -> Vec<String> {
    let mut bad = Vec::new();
    let letters = a.b0_letters();
    for t in tableaux_up_to(size, a) {
        for &x1 in &letters {
            let (u, tr1) = spo_insert(&t, x1).unwrap();
            if tr1.outcome.is_cancellation() {
                continue;
            }
            for &x2 in letters.iter().filter(|&&x2| x2 >= x1) {
                let (_, tr2) = spo_insert(&u, x2).unwrap();
                if tr2.outcome.is_cancellation() {
                    continue;
                }
                let (s1, s2) = (added(tr1.outcome).unwrap(), added(tr2.outcome).unwrap());
                if !weakly_above_strictly_right(s2, s1) {
                    bad.push(format!("new boxes: {x1} then {x2} into {t}: {s1} then {s2}"));
                }
                match (tr1.final_route_box(), tr2.final_route_box()) {
                    (Some(r1), Some(r2)) if !weakly_above_strictly_right(r2, r1) => {
                        bad.push(format!("routes: {x1} then {x2} into {t}: {r1} then {r2}"));
                    }
                    (None, _) | (_, None) => bad.push(format!("missing route: {x1} then {x2} into {t}")),
                    _ => {}
                }
            }
        }
    }
    bad
}

/// A circled letter then a non-cancelling `B₀` letter: the second new box is
/// weakly above and strictly right of the first.
pub fn circled_then_symplectic(size: usize, a: Alphabet) -> Vec<String> {
    let mut bad = Vec::new();
    for t in tableaux_up_to(size, a) {
        for x in (1..=a.n).map(Entry::Circled) {
            let (u, tr1) = spo_insert(&t, x).unwrap();
            let s1 = added(tr1.outcome).unwrap();
            for y in a.b0_letters() {
                let (_, tr2) = spo_insert(&u, y).unwrap();
                if let Some(s2) = added(tr2.outcome) {
                    if !weakly_above_strictly_right(s2, s1) {
                        bad.push(format!("{x} then {y} into {t}: {s1} then {s2}"));
                    }
                }
            }
        }
    }
    bad
}

/// In the `B₀` phase of a product the cancelling letters form an initial
/// segment of the word.
pub fn cancellations_form_initial_strip(size: usize, k: usize, a: Alphabet) -> Vec<String> {
    let mut bad = Vec::new();
    let words: Vec<_> = (0..=k).flat_map(|j| one_row_words(j, a)).collect();
    for t in tableaux_up_to(size, a) {
        for u in &words {
            let (_, _, trace) = product_traced(&t, u).unwrap();
            let flags: Vec<bool> = trace
                .steps
                .iter()
                .filter(|(x, _, _)| x.is_b0())
                .map(|(_, _, tr)| tr.outcome.is_cancellation())
                .collect();
            if flags.windows(2).any(|w| !w[0] && w[1]) {
                bad.push(format!("{t} · {u}: cancellation pattern {flags:?}"));
            }
        }
    }
    bad
}

/// A cancellation right after a circled letter lengthened row one does not
/// shorten row one.
pub fn first_row_preserved(size: usize, a: Alphabet) -> Vec<String> {
    let mut bad = Vec::new();
    for t in tableaux_up_to(size, a) {
        for x in (1..=a.n).map(Entry::Circled) {
            let (u, tr1) = spo_insert(&t, x).unwrap();
            if added(tr1.outcome).map(|b| b.row) != Some(1) {
                continue;
            }
            for y in a.b0_letters() {
                let (s, tr2) = spo_insert(&u, y).unwrap();
                if tr2.outcome.is_cancellation() && s.shape().part(1) != u.shape().part(1) {
                    bad.push(format!("{x} then {y} into {t}"));
                }
            }
        }
    }
    bad
}

/// Two consecutive cancellations by `x1 <= x2` remove boxes in different
/// columns. For symplectic tableaux the second box is also weakly below and
/// strictly left of the first.
pub fn cancelled_columns(size: usize, a: Alphabet) -> Vec<String> {
    let mut bad = Vec::new();
    let letters = a.b0_letters();
    for t in tableaux_up_to(size, a) {
        let symplectic = t.entries().all(|e| e.is_b0());
        for &x1 in &letters {
            let (u, tr1) = spo_insert(&t, x1).unwrap();
            let Some(r1) = removed(tr1.outcome) else { continue };
            for &x2 in letters.iter().filter(|&&x2| x2 >= x1) {
                let (_, tr2) = spo_insert(&u, x2).unwrap();
                let Some(r2) = removed(tr2.outcome) else { continue };
                if r1.col == r2.col {
                    bad.push(format!("{x1} then {x2} into {t}: both remove column {}", r1.col));
                }
                if symplectic && !(r2.row >= r1.row && r2.col < r1.col) {
                    bad.push(format!("symplectic {x1} then {x2} into {t}: {r1} then {r2}"));
                }
            }
        }
    }
    bad
}

/// Every symplectic tableau of `size` or fewer boxes over `1..m`.
pub fn symplectic_up_to(size: usize, m: u32) -> Vec<Tableau> {
    partitions_up_to(size)
        .iter()
        .flat_map(|p| enumerate_symplectic_tableaux(p, m).collect::<Vec<_>>())
        .collect()
}
