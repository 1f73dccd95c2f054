//! Decomposing an spo-tableau `S` as a product `T · U`.
//!
//! Given the shape record `(λ, μ°, μ⁻, ν)` the three insertion stages are
//! undone in reverse order: the `B₀` additions by reverse bumping from the
//! boxes of `ν/μ⁻`, the cancellations by reverse sliding a hole back to where
//! a barred letter was deleted, and the circled additions by reverse column
//! bumping from the boxes of `μ°/λ`. Every decomposition is re-multiplied
//! and compared against the input, so an inconsistent sequence is reported
//! rather than repaired.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::insertion::{product, OneRowWord, SpoSequence};
use crate::pieri::sp_to_spo;
use crate::shape::{Box, Partition, SkewShape};
use crate::tableau::{rows_are_spo, Alphabet, Entry, Tableau};

/// `(λ, μ, ν)` with `μ ⊆ λ`, `μ ⊆ ν` and both skews horizontal strips.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SpTriple {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
}

impl SpTriple {
    pub fn new(lambda: Partition, mu: Partition, nu: Partition) -> Result<Self> {
        for (outer, name) in [(&lambda, "λ/μ"), (&nu, "ν/μ")] {
            let s = SkewShape::new(outer.clone(), mu.clone())
                .map_err(|_| Error::InvalidTriple(format!("{name}: {mu} is not inside {outer}")))?;
            if !s.is_horizontal_strip() {
                return Err(Error::InvalidTriple(format!("{name} = {s} is not a horizontal strip")));
            }
        }
        Ok(SpTriple { lambda, mu, nu })
    }

    /// `|λ/μ|`
    pub fn ell(&self) -> usize {
        self.lambda.size() - self.mu.size()
    }

    /// `|ν/μ|`
    pub fn k_minus_ell(&self) -> usize {
        self.nu.size() - self.mu.size()
    }

    pub fn k(&self) -> usize {
        self.ell() + self.k_minus_ell()
    }
}

impl fmt::Display for SpTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{};{}", self.lambda, self.mu, self.nu)
    }
}

/// One stage of a decomposition, for display.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionStep {
    pub stage: &'static str,
    pub exited: Option<Entry>,
    pub tableau: Tableau,
}

type Rows = Vec<Vec<Entry>>;

fn rows_shape(rows: &Rows) -> Partition {
    Partition::from_row_lengths(rows.iter().map(Vec::len))
}

/// Moves `carry`, sitting at `pos` (already vacated), up through the rows for
/// `B₀` letters and leftwards through the columns for `B₁` letters until it
/// leaves row one or column one.
fn reverse_bump(rows: &mut Rows, mut carry: Entry, mut pos: Box) -> Result<Entry> {
    loop {
        if carry.is_b0() {
            if pos.row == 1 {
                return Ok(carry);
            }
            let row = &mut rows[pos.row - 2];
            let Some(p) = row.iter().rposition(|&e| e < carry) else {
                return Err(Error::Inconsistent(format!("no entry below {carry} in row {}", pos.row - 1)));
            };
            std::mem::swap(&mut row[p], &mut carry);
            pos = Box::new(pos.row - 1, p + 1);
        } else {
            if pos.col == 1 {
                return Ok(carry);
            }
            let c = pos.col - 2;
            let height = rows.iter().take_while(|r| r.len() > c).count();
            let Some(i) = (0..height).rev().find(|&i| rows[i][c] < carry) else {
                return Err(Error::Inconsistent(format!("no entry below {carry} in column {}", pos.col - 1)));
            };
            std::mem::swap(&mut rows[i][c], &mut carry);
            pos = Box::new(i + 1, c + 1);
        }
    }
}

fn unbump_rows(rows: &mut Rows, b: Box) -> Result<Entry> {
    if !rows_shape(rows).is_outer_corner(b) {
        return Err(Error::NotOuterCorner(b));
    }
    let x = rows[b.row - 1].pop().expect("corner exists");
    if rows[b.row - 1].is_empty() {
        rows.pop();
    }
    reverse_bump(rows, x, b)
}

/// Removes the entry at the outer corner `b` and reverse-bumps it out of the
/// tableau. Returns the reduced tableau and the letter that left.
pub fn unbump(s: &Tableau, b: Box) -> Result<(Tableau, Entry)> {
    let mut rows = s.rows().to_vec();
    let x = unbump_rows(&mut rows, b)?;
    Ok((Tableau::from_rows_unchecked(rows, s.alphabet()), x))
}

/// Boxes of `outer/inner`, rightmost first.
fn rightmost_first(outer: &Partition, inner: &Partition) -> Result<Vec<Box>> {
    let mut boxes = SkewShape::new(outer.clone(), inner.clone())?.boxes();
    boxes.sort_by(|a, b| b.col.cmp(&a.col).then(a.row.cmp(&b.row)));
    Ok(boxes)
}

type Grid = Vec<Vec<Option<Entry>>>;

/// One reverse jeu de taquin move; `None` once the hole sits at (1,1).
fn reverse_slide(grid: &mut Grid, hole: Box) -> Option<Box> {
    let at = |b: Box| -> Option<Entry> {
        if b.row == 0 || b.col == 0 {
            return None;
        }
        grid.get(b.row - 1)?.get(b.col - 1).copied().flatten()
    };
    let left_box = Box::new(hole.row, hole.col.wrapping_sub(1));
    let up_box = Box::new(hole.row.wrapping_sub(1), hole.col);
    let from = match (at(left_box), at(up_box)) {
        (None, None) => return None,
        (Some(_), None) => left_box,
        (None, Some(_)) => up_box,
        (Some(l), Some(u)) => {
            if l > u || (l == u && l.is_b1()) {
                left_box
            } else {
                up_box
            }
        }
    };
    grid[hole.row - 1][hole.col - 1] = grid[from.row - 1][from.col - 1].take();
    Some(from)
}

fn filled(grid: &Grid) -> Rows {
    grid.iter().map(|r| r.iter().map(|e| e.expect("filled")).collect()).collect()
}

/// A place along the reverse path where a barred letter could have been
/// deleted: the tableau with `ī` restored, the letter pushed out of row one,
/// and the box that held `ī`.
#[derive(Clone, Debug)]
pub struct CancellationSite {
    pub restored: Box,
    pub exited: Entry,
    pub tableau: Tableau,
}

/// All sites along the reverse slide path of a hole added at `corner` where
/// placing `r̄` (r = row) gives a valid tableau and `r̄` would be the first
/// barred `r` in its row. Ordered from the corner towards (1,1).
pub fn cancellation_sites(s: &Tableau, corner: Box) -> Result<Vec<CancellationSite>> {
    let a = s.alphabet();
    let mut grid: Grid = s.rows().iter().map(|r| r.iter().copied().map(Some).collect()).collect();
    if corner.row == grid.len() + 1 {
        grid.push(Vec::new());
    }
    let shape = s.shape();
    if corner.row > grid.len() || shape.part(corner.row) + 1 != corner.col || shape.part(corner.row - 1) < corner.col {
        return Err(Error::Inconsistent(format!("{corner} cannot be added to {shape}")));
    }
    grid[corner.row - 1].push(None);

    let mut sites = Vec::new();
    let mut hole = corner;
    loop {
        let r = hole.row as u32;
        let left = if hole.col > 1 { grid[hole.row - 1][hole.col - 2] } else { None };
        if r <= a.m && left != Some(Entry::Barred(r)) {
            let mut trial = grid.clone();
            trial[hole.row - 1][hole.col - 1] = Some(Entry::Barred(r));
            let mut rows = filled(&trial);
            if rows_are_spo(&rows, a) {
                // A site is feasible only if `r` can leave through row one.
                if let Ok(exited) = reverse_bump(&mut rows, Entry::Unbarred(r), hole) {
                    sites.push(CancellationSite {
                        restored: hole,
                        exited,
                        tableau: Tableau::from_rows_unchecked(rows, a),
                    });
                }
            }
        }
        match reverse_slide(&mut grid, hole) {
            Some(next) => hole = next,
            None => break,
        }
    }
    Ok(sites)
}

/// Undoes `ell = |μ°/μ⁻|` cancellations: each box of `μ°/μ⁻`, leftmost
/// first, enters as a hole that is reverse-slid to the highest site where a
/// barred letter can be restored; the matching unbarred letter is then
/// reverse-bumped out of row one. Returns the tableau of shape `μ°` and the
/// exited letters in exit order.
pub fn reverse_cancellation(s: &Tableau, mu_circ: &Partition) -> Result<(Tableau, Vec<Entry>)> {
    reverse_cancellation_steps(s, mu_circ).map(|(t, letters, _)| (t, letters))
}

fn reverse_cancellation_steps(
    s: &Tableau,
    mu_circ: &Partition,
) -> Result<(Tableau, Vec<Entry>, Vec<DecompositionStep>)> {
    let skew = SkewShape::new(mu_circ.clone(), s.shape())
        .map_err(|_| Error::Inconsistent(format!("{} is not inside μ° = {mu_circ}", s.shape())))?;
    if !skew.is_horizontal_strip() {
        return Err(Error::Inconsistent(format!("{skew} is not a horizontal strip")));
    }
    let mut boxes = skew.boxes();
    boxes.sort_by_key(|b| b.col);
    let mut current = s.clone();
    let mut letters = Vec::with_capacity(boxes.len());
    let mut steps = Vec::new();
    for b in boxes {
        let sites = cancellation_sites(&current, b)?;
        // The highest site is the last one reached by the reverse path.
        let Some(site) = sites.into_iter().next_back() else {
            return Err(Error::Inconsistent(format!("no barred letter can be restored for the hole at {b}")));
        };
        letters.push(site.exited);
        current = site.tableau;
        steps.push(DecompositionStep {
            stage: "cancellation",
            exited: Some(site.exited),
            tableau: current.clone(),
        });
    }
    Ok((current, letters, steps))
}

/// Undoes the circled additions: boxes of `shape(s)/λ`, rightmost first, are
/// reverse column-bumped until a circled letter leaves column one.
pub fn strip_b1_additions(s: &Tableau, lambda: &Partition) -> Result<(Tableau, Vec<Entry>)> {
    strip_b1_steps(s, lambda).map(|(t, letters, _)| (t, letters))
}

fn strip_b1_steps(s: &Tableau, lambda: &Partition) -> Result<(Tableau, Vec<Entry>, Vec<DecompositionStep>)> {
    let shape = s.shape();
    let skew = SkewShape::new(shape.clone(), lambda.clone())
        .map_err(|_| Error::Inconsistent(format!("λ = {lambda} is not inside {shape}")))?;
    if !skew.is_horizontal_strip() {
        return Err(Error::Inconsistent(format!("{skew} is not a horizontal strip")));
    }
    let mut rows = s.rows().to_vec();
    let mut letters = Vec::new();
    let mut steps = Vec::new();
    for b in rightmost_first(&shape, lambda)? {
        let x = rows[b.row - 1][b.col - 1];
        if x.is_b0() {
            return Err(Error::Inconsistent(format!("box {b} of μ°/λ holds {x}, not a circled letter")));
        }
        let out = unbump_rows(&mut rows, b)?;
        if out.is_b0() {
            return Err(Error::Inconsistent(format!("stripping {b} pushed out {out}")));
        }
        letters.push(out);
        steps.push(DecompositionStep {
            stage: "circled",
            exited: Some(out),
            tableau: Tableau::from_rows_unchecked(rows.clone(), s.alphabet()),
        });
    }
    Ok((Tableau::from_rows_unchecked(rows, s.alphabet()), letters, steps))
}

/// Result of a decomposition with its stage-by-stage record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub tableau: Tableau,
    pub word: OneRowWord,
    pub sequence: SpoSequence,
    pub steps: Vec<DecompositionStep>,
}

/// Splits `s` into `(T, U)` with `T · U = s` recording `seq`.
pub fn decompose_with_sequence(s: &Tableau, seq: &SpoSequence) -> Result<(Tableau, OneRowWord)> {
    decompose_traced(s, seq).map(|d| (d.tableau, d.word))
}

pub fn decompose_traced(s: &Tableau, seq: &SpoSequence) -> Result<Decomposition> {
    seq.validate()?;
    if !s.validate_spo() {
        return Err(Error::InvalidTableau);
    }
    if s.shape() != seq.nu {
        return Err(Error::Inconsistent(format!("tableau has shape {}, sequence ends at {}", s.shape(), seq.nu)));
    }
    let mut steps = Vec::new();
    let mut rows = s.rows().to_vec();
    let mut b0_exits = Vec::new();
    for b in rightmost_first(&seq.nu, &seq.mu_minus)? {
        let out = unbump_rows(&mut rows, b)?;
        if out.is_b1() {
            return Err(Error::Inconsistent(format!("undoing the addition at {b} pushed out {out}")));
        }
        b0_exits.push(out);
        steps.push(DecompositionStep {
            stage: "addition",
            exited: Some(out),
            tableau: Tableau::from_rows_unchecked(rows.clone(), s.alphabet()),
        });
    }
    let reduced = Tableau::from_rows_unchecked(rows, s.alphabet());
    let (grown, cancelled, cancel_steps) = reverse_cancellation_steps(&reduced, &seq.mu_circ)?;
    steps.extend(cancel_steps);
    b0_exits.extend(cancelled);
    let (t, circled, strip_steps) = strip_b1_steps(&grown, &seq.lambda)?;
    steps.extend(strip_steps);

    b0_exits.reverse();
    b0_exits.extend(circled);
    let word = OneRowWord::new(b0_exits).map_err(|e| Error::Inconsistent(format!("exited letters: {e}")))?;
    let (again, seq_again) = product(&t, &word)?;
    if &again != s || &seq_again != seq {
        return Err(Error::Inconsistent(format!("{seq} is not the shape record of this tableau")));
    }
    Ok(Decomposition {
        tableau: t,
        word,
        sequence: seq.clone(),
        steps,
    })
}

/// Number of non-cancelling `B₀` letters implied by `(s, triple)`: trial
/// reverse bumps from the rightmost boxes of `ν/μ` until `k - ℓ` letters
/// have left or a circled letter leaves column one.
pub fn infer_m2(s: &Tableau, triple: &SpTriple) -> Result<usize> {
    if s.shape() != triple.nu {
        return Err(Error::Inconsistent(format!("tableau has shape {}, triple ends at {}", s.shape(), triple.nu)));
    }
    let mut rows = s.rows().to_vec();
    let mut m2 = 0;
    for _ in 0..triple.k_minus_ell() {
        let shape = rows_shape(&rows);
        let b = *rightmost_first(&shape, &triple.mu)?.first().expect("k - ℓ boxes remain");
        if unbump_rows(&mut rows, b)?.is_b1() {
            break;
        }
        m2 += 1;
    }
    Ok(m2)
}

pub fn decompose_with_triple(s: &Tableau, triple: &SpTriple) -> Result<(Tableau, OneRowWord)> {
    decompose_with_triple_traced(s, triple).map(|d| (d.tableau, d.word))
}

pub fn decompose_with_triple_traced(s: &Tableau, triple: &SpTriple) -> Result<Decomposition> {
    let m2 = infer_m2(s, triple)?;
    let m1 = triple.k_minus_ell() - m2;
    let seq = sp_to_spo(triple, m1)?;
    decompose_traced(s, &seq)
}

/// Helper for tests and the CLI: alphabet of a tableau pair.
pub fn same_alphabet(a: &Tableau, b: &Tableau) -> Option<Alphabet> {
    (a.alphabet() == b.alphabet()).then(|| a.alphabet())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::insertion::spo_insert;
    use crate::partition;

    fn tab(s: &str, m: u32, n: u32) -> Tableau {
        Tableau::parse(s, Alphabet::new(m, n).unwrap()).unwrap()
    }

    #[test]
    fn triple_needs_two_strips() {
        assert!(SpTriple::new(partition![2, 2], partition![1, 1], partition![2, 2]).is_err());
        let t = SpTriple::new(partition![2, 1], partition![2], partition![3, 1]).unwrap();
        assert_eq!((t.ell(), t.k_minus_ell(), t.k()), (1, 2, 3));
        assert_eq!(t.to_string(), "2,1;2;3,1");
    }

    #[test]
    fn circled_letters_leave_through_column_one() {
        let s = tab("1o 2o ; 2o", 1, 2);
        let (t, x) = unbump(&s, Box::new(1, 2)).unwrap();
        assert_eq!(x, Entry::Circled(1));
        assert_eq!(t, tab("2o ; 2o", 1, 2));
    }

    #[test]
    fn unbump_undoes_insertion() {
        let t = tab("1 2 2b ; 2 3 4 ; 3b 1o ; 1o 2o", 4, 2);
        for x in t.alphabet().letters() {
            let (s, trace) = spo_insert(&t, x).unwrap();
            if let crate::insertion::Outcome::AddedBox(b) = trace.outcome {
                assert_eq!(unbump(&s, b).unwrap(), (t.clone(), x), "{x}");
            }
        }
    }

    #[test]
    fn sites_for_a_first_column_hole() {
        // Restoring 1̄ at (1,1) then pushing 1 out of row one.
        let s = tab("2", 2, 0);
        let sites = cancellation_sites(&s, Box::new(2, 1)).unwrap();
        let highest = sites.last().unwrap();
        assert_eq!(highest.restored, Box::new(1, 1));
        assert_eq!(highest.exited, Entry::Unbarred(1));
        assert_eq!(highest.tableau, tab("1b ; 2", 2, 0));
    }

    #[test]
    fn corner_must_be_addable() {
        assert!(cancellation_sites(&tab("1 2", 2, 0), Box::new(2, 2)).is_err());
    }

    #[test]
    fn strip_rejects_plain_letters() {
        assert!(strip_b1_additions(&tab("1 2", 2, 0), &partition![1]).is_err());
    }

    #[test]
    fn infer_m2_checks_the_shape() {
        let t = SpTriple::new(partition![1], partition![1], partition![2]).unwrap();
        assert!(infer_m2(&tab("1", 1, 0), &t).is_err());
        assert_eq!(infer_m2(&tab("1 1", 1, 0), &t).unwrap(), 1);
    }
}
