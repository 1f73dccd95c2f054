//! Forward algorithms: jeu de taquin slides, spo-insertion of a single letter
//! and the product of a tableau with a one-row tableau.
//!
//! Letters of `B₀` are row-inserted. When `i` is about to replace `ī` in row
//! `i` the `ī` is deleted instead (a cancellation) and the resulting hole is
//! slid to an outer corner. Letters of `B₁` are column-inserted, and a `B₀`
//! letter that displaces a `B₁` letter hands the displaced letter over to
//! column insertion in the next column.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::shape::{Box, Partition, SkewShape};
use crate::tableau::{Alphabet, Entry, PuncturedTableau, Tableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Outcome {
    /// The insertion grew the shape by this box.
    AddedBox(Box),
    /// A cancellation shrank the shape; this box was deleted.
    CancelledBox(Box),
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::AddedBox(b) => write!(f, "added {b}"),
            Outcome::CancelledBox(b) => write!(f, "cancelled {b}"),
        }
    }
}

impl Outcome {
    pub fn is_cancellation(self) -> bool {
        matches!(self, Outcome::CancelledBox(_))
    }

    pub fn cell(self) -> Box {
        match self {
            Outcome::AddedBox(b) | Outcome::CancelledBox(b) => b,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InsertionTrace {
    pub outcome: Outcome,
    /// Boxes receiving a `B₀` letter during row insertion, the last one being
    /// where the final `B₀` letter landed. Empty for `B₁` letters and for
    /// cancellations.
    pub bump_route: Vec<Box>,
    /// Boxes receiving a `B₁` letter during column insertion.
    pub column_route: Vec<Box>,
    /// Positions of the hole from the cancelled box to the deleted corner.
    pub jdt_path: Vec<Box>,
}

impl InsertionTrace {
    pub fn final_route_box(&self) -> Option<Box> {
        self.bump_route.last().copied()
    }
}

/// One forward jeu de taquin move.
pub fn forward_slide(mut p: PuncturedTableau) -> Result<PuncturedTableau> {
    let h = p.hole;
    let right = Box::new(h.row, h.col + 1);
    let below = Box::new(h.row + 1, h.col);
    let a = p.get(right);
    let b = p.get(below);
    let from = match (a, b) {
        (None, None) => return Err(Error::HoleAtCorner(h)),
        (Some(_), None) => right,
        (None, Some(_)) => below,
        (Some(a), Some(b)) => {
            if a < b || (a == b && a.is_b1()) {
                right
            } else {
                below
            }
        }
    };
    p.rows[h.row - 1][h.col - 1] = p.rows[from.row - 1][from.col - 1].take();
    p.hole = from;
    Ok(p)
}

/// Slides the hole until it reaches an outer corner, then deletes that box.
pub fn slide_to_corner(mut p: PuncturedTableau) -> Result<(Tableau, Vec<Box>)> {
    let mut path = vec![p.hole];
    while !p.is_hole_at_corner() {
        p = forward_slide(p)?;
        path.push(p.hole);
    }
    Ok((p.remove_hole()?, path))
}

fn check_letter(a: Alphabet, x: Entry) -> Result<()> {
    if x.is_valid_for(a) {
        Ok(())
    } else {
        Err(Error::EntryOutOfRange {
            entry: x.token(),
            m: a.m,
            n: a.n,
        })
    }
}

/// Inserts one letter: `T ← x` for `x ∈ B₀`, `x → T` for `x ∈ B₁`.
pub fn spo_insert(t: &Tableau, x: Entry) -> Result<(Tableau, InsertionTrace)> {
    if !t.validate_spo() {
        return Err(Error::InvalidTableau);
    }
    check_letter(t.alphabet(), x)?;
    insert_unchecked(t.clone(), x)
}

enum Mode {
    Row(usize),
    Col(usize),
}

fn insert_unchecked(t: Tableau, x: Entry) -> Result<(Tableau, InsertionTrace)> {
    let alphabet = t.alphabet();
    let mut rows = t.into_rows();
    let mut bump_route = Vec::new();
    let mut column_route = Vec::new();
    let mut carry = x;
    let mut mode = if x.is_b0() { Mode::Row(0) } else { Mode::Col(0) };

    let added = loop {
        match mode {
            Mode::Row(r) => {
                if r == rows.len() {
                    rows.push(vec![carry]);
                    let b = Box::new(r + 1, 1);
                    bump_route.push(b);
                    break b;
                }
                let row = &mut rows[r];
                let Some(p) = row.iter().position(|&y| y > carry) else {
                    row.push(carry);
                    let b = Box::new(r + 1, row.len());
                    bump_route.push(b);
                    break b;
                };
                let y = row[p];
                let i = (r + 1) as u32;
                if carry == Entry::Unbarred(i) && y == Entry::Barred(i) {
                    return cancel(rows, alphabet, Box::new(r + 1, p + 1), column_route);
                }
                row[p] = carry;
                bump_route.push(Box::new(r + 1, p + 1));
                carry = y;
                mode = if y.is_b0() { Mode::Row(r + 1) } else { Mode::Col(p + 1) };
            }
            Mode::Col(c) => {
                let height = rows.iter().take_while(|row| row.len() > c).count();
                match (0..height).find(|&i| rows[i][c] > carry) {
                    Some(i) => {
                        let y = rows[i][c];
                        rows[i][c] = carry;
                        column_route.push(Box::new(i + 1, c + 1));
                        carry = y;
                        mode = Mode::Col(c + 1);
                    }
                    None => {
                        if height == rows.len() {
                            if c != 0 {
                                return Err(Error::InvalidTableau);
                            }
                            rows.push(vec![carry]);
                        } else {
                            if rows[height].len() != c {
                                return Err(Error::InvalidTableau);
                            }
                            rows[height].push(carry);
                        }
                        let b = Box::new(height + 1, c + 1);
                        column_route.push(b);
                        break b;
                    }
                }
            }
        }
    };

    let trace = InsertionTrace {
        outcome: Outcome::AddedBox(added),
        bump_route,
        column_route,
        jdt_path: Vec::new(),
    };
    Ok((Tableau::from_rows_unchecked(rows, alphabet), trace))
}

fn cancel(
    rows: Vec<Vec<Entry>>,
    alphabet: Alphabet,
    at: Box,
    column_route: Vec<Box>,
) -> Result<(Tableau, InsertionTrace)> {
    let t = Tableau::from_rows_unchecked(rows, alphabet);
    let (t, jdt_path) = slide_to_corner(PuncturedTableau::new(&t, at)?)?;
    let corner = *jdt_path.last().expect("path starts at the hole");
    let trace = InsertionTrace {
        outcome: Outcome::CancelledBox(corner),
        bump_route: Vec::new(),
        column_route,
        jdt_path,
    };
    Ok((t, trace))
}

/// A one-row spo-tableau: weakly increasing `B₀` letters followed by strictly
/// increasing `B₁` letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OneRowWord {
    entries: Vec<Entry>,
}

impl OneRowWord {
    pub fn new(entries: Vec<Entry>) -> Result<Self> {
        let split = entries.iter().take_while(|e| e.is_b0()).count();
        let (b0, b1) = entries.split_at(split);
        if b1.iter().any(|e| e.is_b0()) {
            return Err(Error::MalformedWord("B0 letters must precede circled letters".into()));
        }
        if b0.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::MalformedWord("B0 letters must be weakly increasing".into()));
        }
        if b1.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::MalformedWord("circled letters must be strictly increasing".into()));
        }
        Ok(OneRowWord { entries })
    }

    pub fn empty() -> Self {
        OneRowWord { entries: Vec::new() }
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn b0_part(&self) -> &[Entry] {
        let split = self.entries.iter().take_while(|e| e.is_b0()).count();
        &self.entries[..split]
    }

    pub fn b1_part(&self) -> &[Entry] {
        let split = self.entries.iter().take_while(|e| e.is_b0()).count();
        &self.entries[split..]
    }

    pub fn parse(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() || trimmed == "-" {
            return Ok(Self::empty());
        }
        let mut entries = Vec::new();
        let mut offset = 0;
        for tok in s.split([' ', ',']) {
            if !tok.is_empty() {
                entries.push(Entry::parse_token(tok, offset)?);
            }
            offset += tok.len() + 1;
        }
        Self::new(entries)
    }
}

impl fmt::Display for OneRowWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("-");
        }
        let toks: Vec<String> = self.entries.iter().map(|e| e.token()).collect();
        f.write_str(&toks.join(" "))
    }
}

impl Serialize for OneRowWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries.serialize(s)
    }
}

/// Shape record `(λ, μ°, μ⁻, ν)` of a product: `μ°` after the circled
/// additions, `μ⁻` after the cancellations, `ν` at the end.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SpoSequence {
    pub lambda: Partition,
    pub mu_circ: Partition,
    pub mu_minus: Partition,
    pub nu: Partition,
}

fn strip(outer: &Partition, inner: &Partition, what: &str) -> Result<SkewShape> {
    let s = SkewShape::new(outer.clone(), inner.clone())
        .map_err(|_| Error::InvalidSequence(format!("{what}: {inner} is not inside {outer}")))?;
    if !s.is_horizontal_strip() {
        return Err(Error::InvalidSequence(format!("{what}: {s} is not a horizontal strip")));
    }
    Ok(s)
}

impl SpoSequence {
    pub fn new(lambda: Partition, mu_circ: Partition, mu_minus: Partition, nu: Partition) -> Result<Self> {
        let seq = SpoSequence {
            lambda,
            mu_circ,
            mu_minus,
            nu,
        };
        seq.validate()?;
        Ok(seq)
    }

    /// Number of circled letters.
    pub fn m1(&self) -> usize {
        self.mu_circ.size() - self.lambda.size()
    }

    /// Number of cancellations.
    pub fn ell(&self) -> usize {
        self.mu_circ.size() - self.mu_minus.size()
    }

    /// Number of non-cancelling `B₀` letters.
    pub fn m2(&self) -> usize {
        self.nu.size() - self.mu_minus.size()
    }

    pub fn k(&self) -> usize {
        self.m1() + self.ell() + self.m2()
    }

    pub fn validate(&self) -> Result<()> {
        let added = strip(&self.mu_circ, &self.lambda, "μ°/λ")?;
        strip(&self.mu_circ, &self.mu_minus, "μ°/μ⁻")?;
        let grown = strip(&self.nu, &self.mu_minus, "ν/μ⁻")?;
        // A cancellation never shortens a first row that gained a circled letter.
        if self.lambda.part(1) != self.mu_circ.part(1) && self.mu_circ.part(1) != self.mu_minus.part(1) {
            return Err(Error::InvalidSequence(
                "first row grew during circled additions and shrank during cancellations".into(),
            ));
        }
        let rightmost_added = added.boxes().iter().map(|b| b.col).max();
        let leftmost_grown = grown.boxes().iter().map(|b| b.col).min();
        if let (Some(r), Some(l)) = (rightmost_added, leftmost_grown) {
            if l <= r {
                return Err(Error::InvalidSequence(format!(
                    "leftmost box of ν/μ⁻ (column {l}) is not right of the rightmost box of μ°/λ (column {r})"
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for SpoSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{};{};{}", self.lambda, self.mu_circ, self.mu_minus, self.nu)
    }
}

/// Full record of a product, keeping every intermediate insertion.
#[derive(Clone, Debug)]
pub struct ProductTrace {
    pub steps: Vec<(Entry, Tableau, InsertionTrace)>,
}

/// `T · U`: the circled letters of `U` are column-inserted largest first,
/// then the `B₀` letters are row-inserted in increasing order.
pub fn product(t: &Tableau, u: &OneRowWord) -> Result<(Tableau, SpoSequence)> {
    product_traced(t, u).map(|(t, seq, _)| (t, seq))
}

pub fn product_traced(t: &Tableau, u: &OneRowWord) -> Result<(Tableau, SpoSequence, ProductTrace)> {
    if !t.validate_spo() {
        return Err(Error::InvalidTableau);
    }
    for &e in u.entries() {
        check_letter(t.alphabet(), e)?;
    }
    let lambda = t.shape();
    let mut current = t.clone();
    let mut steps = Vec::with_capacity(u.len());
    for &b in u.b1_part().iter().rev() {
        let (next, trace) = insert_unchecked(current, b)?;
        steps.push((b, next.clone(), trace));
        current = next;
    }
    let mu_circ = current.shape();
    let mut mu_minus = mu_circ.clone();
    for &a in u.b0_part() {
        let (next, trace) = insert_unchecked(current, a)?;
        if trace.outcome.is_cancellation() {
            mu_minus = next.shape();
        }
        steps.push((a, next.clone(), trace));
        current = next;
    }
    let seq = SpoSequence {
        lambda,
        mu_circ,
        mu_minus,
        nu: current.shape(),
    };
    Ok((current, seq, ProductTrace { steps }))
}
