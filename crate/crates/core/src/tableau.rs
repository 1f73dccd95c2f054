//! The ordered alphabet `1 < 1̄ < 2 < 2̄ < … < m < m̄ < 1° < … < n°`, tableau
//! storage, validation and exhaustive enumeration.
//!
//! Letters `1..m` and their barred versions form the symplectic part `B₀`;
//! circled letters form the odd part `B₁`. An spo-tableau has its `B₀` entries
//! on a sub-diagram that is a semistandard symplectic tableau (King's row
//! condition: row `i` holds entries `>= i`), and its `B₁` entries on the
//! complementary skew diagram, strictly increasing along rows and weakly
//! increasing down columns.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::characters::LaurentMonomial;
use crate::error::{Error, Result};
use crate::shape::{Box, Partition, SkewShape};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Entry {
    Unbarred(u32),
    Barred(u32),
    Circled(u32),
}

impl Entry {
    /// Position in the chain `1 < 1̄ < … < m̄ < 1° < … < n°`, starting at 0.
    pub fn rank(self, m: u32) -> u32 {
        match self {
            Entry::Unbarred(i) => 2 * i - 2,
            Entry::Barred(i) => 2 * i - 1,
            Entry::Circled(j) => 2 * m + j - 1,
        }
    }

    /// Rank-compatible key that does not depend on `m`.
    fn key(self) -> (u8, u32) {
        match self {
            Entry::Unbarred(i) => (0, 2 * i),
            Entry::Barred(i) => (0, 2 * i + 1),
            Entry::Circled(j) => (1, j),
        }
    }

    pub fn is_b0(self) -> bool {
        !self.is_b1()
    }

    pub fn is_b1(self) -> bool {
        matches!(self, Entry::Circled(_))
    }

    pub fn index(self) -> u32 {
        match self {
            Entry::Unbarred(i) | Entry::Barred(i) | Entry::Circled(i) => i,
        }
    }

    pub fn is_valid_for(self, a: Alphabet) -> bool {
        match self {
            Entry::Unbarred(i) | Entry::Barred(i) => (1..=a.m).contains(&i),
            Entry::Circled(j) => (1..=a.n).contains(&j),
        }
    }

    /// Weight contribution of one occurrence of this letter.
    pub fn weight(self, a: Alphabet) -> LaurentMonomial {
        let mut w = LaurentMonomial::one(a.m as usize, a.n as usize);
        match self {
            Entry::Unbarred(i) => w.x[i as usize - 1] += 1,
            Entry::Barred(i) => w.x[i as usize - 1] -= 1,
            Entry::Circled(j) => w.y[j as usize - 1] += 1,
        }
        w
    }

    /// The token form used on the command line: `3`, `3b`, `3o`.
    pub fn token(self) -> String {
        match self {
            Entry::Unbarred(i) => format!("{i}"),
            Entry::Barred(i) => format!("{i}b"),
            Entry::Circled(j) => format!("{j}o"),
        }
    }

    pub fn parse_token(tok: &str, position: usize) -> Result<Entry> {
        let (digits, ctor): (&str, fn(u32) -> Entry) = if let Some(d) = tok.strip_suffix('b') {
            (d, Entry::Barred)
        } else if let Some(d) = tok.strip_suffix('o') {
            (d, Entry::Circled)
        } else {
            (tok, Entry::Unbarred)
        };
        match digits.parse::<u32>() {
            Ok(i) if i >= 1 => Ok(ctor(i)),
            _ => Err(Error::parse(tok, position, "expected an entry like `3`, `3b` or `3o`")),
        }
    }
}

impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token())
    }
}

impl Serialize for Entry {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.token())
    }
}

/// `m` symplectic letters (with bars) and `n` circled letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Alphabet {
    pub m: u32,
    pub n: u32,
}

impl Alphabet {
    pub fn new(m: u32, n: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::BadAlphabet);
        }
        Ok(Alphabet { m, n })
    }

    /// All letters in increasing order.
    pub fn letters(self) -> Vec<Entry> {
        let mut v = self.b0_letters();
        v.extend((1..=self.n).map(Entry::Circled));
        v
    }

    pub fn b0_letters(self) -> Vec<Entry> {
        (1..=self.m)
            .flat_map(|i| [Entry::Unbarred(i), Entry::Barred(i)])
            .collect()
    }

    pub fn size(self) -> u32 {
        2 * self.m + self.n
    }

    fn check(self, e: Entry) -> Result<()> {
        if e.is_valid_for(self) {
            Ok(())
        } else {
            Err(Error::EntryOutOfRange {
                entry: e.token(),
                m: self.m,
                n: self.n,
            })
        }
    }
}

/// A filling of a Young diagram by letters of an [`Alphabet`]. Construction
/// checks the shape and the alphabet only; use [`Tableau::validate_spo`] for
/// the tableau conditions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    rows: Vec<Vec<Entry>>,
    alphabet: Alphabet,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<Entry>>, alphabet: Alphabet) -> Result<Self> {
        let mut rows = rows;
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        let lengths: Vec<usize> = rows.iter().map(Vec::len).collect();
        if lengths.windows(2).any(|w| w[0] < w[1]) || lengths.contains(&0) {
            return Err(Error::RaggedRows(lengths));
        }
        for e in rows.iter().flatten() {
            alphabet.check(*e)?;
        }
        Ok(Tableau { rows, alphabet })
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Tableau {
            rows: Vec::new(),
            alphabet,
        }
    }

    /// Rows that are already known to form a diagram over the alphabet.
    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<Entry>>, alphabet: Alphabet) -> Self {
        debug_assert!(Tableau::new(rows.clone(), alphabet).is_ok());
        Tableau { rows, alphabet }
    }

    pub fn rows(&self) -> &[Vec<Entry>] {
        &self.rows
    }

    pub(crate) fn into_rows(self) -> Vec<Vec<Entry>> {
        self.rows
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn shape(&self) -> Partition {
        Partition::from_row_lengths(self.rows.iter().map(Vec::len))
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn get(&self, b: Box) -> Option<Entry> {
        self.rows.get(b.row.checked_sub(1)?)?.get(b.col.checked_sub(1)?).copied()
    }

    pub fn entries(&self) -> impl Iterator<Item = Entry> + '_ {
        self.rows.iter().flatten().copied()
    }

    /// Shape of the `B₀` portion, recomputed on every call. Only meaningful
    /// when the `B₀` entries occupy a prefix of each row.
    pub fn b0_shape(&self) -> Partition {
        Partition::from_row_lengths(self.rows.iter().map(|r| r.iter().take_while(|e| e.is_b0()).count()))
    }

    pub fn validate_spo(&self) -> bool {
        rows_are_spo(&self.rows, self.alphabet)
    }

    /// Semistandard with King's row condition; errors on circled entries.
    pub fn validate_symplectic(&self) -> Result<bool> {
        if self.entries().any(Entry::is_b1) {
            return Err(Error::CircledEntry);
        }
        Ok(rows_are_spo(&self.rows, self.alphabet))
    }

    pub fn weight(&self) -> LaurentMonomial {
        let a = self.alphabet;
        let mut w = LaurentMonomial::one(a.m as usize, a.n as usize);
        for e in self.entries() {
            match e {
                Entry::Unbarred(i) => w.x[i as usize - 1] += 1,
                Entry::Barred(i) => w.x[i as usize - 1] -= 1,
                Entry::Circled(j) => w.y[j as usize - 1] += 1,
            }
        }
        w
    }

    /// Parses `1b 2 5 ; 3 4b 1o ; 4 5o ; 2o`. `-` or the empty string is the
    /// empty tableau.
    pub fn parse(s: &str, alphabet: Alphabet) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() || trimmed == "-" {
            return Ok(Tableau::empty(alphabet));
        }
        let mut rows = Vec::new();
        let mut offset = 0;
        for row_text in s.split(';') {
            let mut row = Vec::new();
            let mut local = 0;
            for tok in row_text.split(' ') {
                if !tok.is_empty() {
                    let e = Entry::parse_token(tok, offset + local)?;
                    if !e.is_valid_for(alphabet) {
                        return Err(Error::parse(tok, offset + local, format!("entry outside alphabet m={}, n={}", alphabet.m, alphabet.n)));
                    }
                    row.push(e);
                }
                local += tok.len() + 1;
            }
            if row.is_empty() {
                return Err(Error::parse(row_text, offset, "empty row"));
            }
            rows.push(row);
            offset += row_text.len() + 1;
        }
        Tableau::new(rows, alphabet)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("-");
        }
        let text: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|e| e.token()).collect::<Vec<_>>().join(" "))
            .collect();
        f.write_str(&text.join(" ; "))
    }
}

impl Serialize for Tableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

/// Local conditions between a cell and its left and upper neighbors. Checking
/// these for every cell of a diagram is equivalent to the spo conditions.
pub(crate) fn spo_cell_ok(row: usize, e: Entry, left: Option<Entry>, up: Option<Entry>) -> bool {
    if e.is_b0() {
        // King's condition: row i only holds letters >= i.
        if (e.index() as usize) < row {
            return false;
        }
        let left_ok = left.is_none_or(|l| l.is_b0() && l <= e);
        let up_ok = up.is_none_or(|u| u.is_b0() && u < e);
        left_ok && up_ok
    } else {
        let left_ok = left.is_none_or(|l| l.is_b0() || l < e);
        let up_ok = up.is_none_or(|u| u.is_b0() || u <= e);
        left_ok && up_ok
    }
}

pub(crate) fn rows_are_spo(rows: &[Vec<Entry>], a: Alphabet) -> bool {
    if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
        return false;
    }
    for (r, row) in rows.iter().enumerate() {
        for (c, &e) in row.iter().enumerate() {
            if !e.is_valid_for(a) {
                return false;
            }
            let left = c.checked_sub(1).map(|cc| row[cc]);
            let up = r.checked_sub(1).map(|rr| rows[rr][c]);
            if !spo_cell_ok(r + 1, e, left, up) {
                return false;
            }
        }
    }
    true
}

/// A tableau with the entry of one box removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PuncturedTableau {
    pub(crate) rows: Vec<Vec<Option<Entry>>>,
    pub(crate) hole: Box,
    pub(crate) alphabet: Alphabet,
}

impl PuncturedTableau {
    pub fn new(t: &Tableau, hole: Box) -> Result<Self> {
        if t.get(hole).is_none() {
            return Err(Error::OutsideShape(hole));
        }
        let mut rows: Vec<Vec<Option<Entry>>> =
            t.rows.iter().map(|r| r.iter().copied().map(Some).collect()).collect();
        rows[hole.row - 1][hole.col - 1] = None;
        Ok(PuncturedTableau {
            rows,
            hole,
            alphabet: t.alphabet,
        })
    }

    pub fn hole(&self) -> Box {
        self.hole
    }

    pub fn shape(&self) -> Partition {
        Partition::from_row_lengths(self.rows.iter().map(Vec::len))
    }

    pub fn get(&self, b: Box) -> Option<Entry> {
        *self.rows.get(b.row.checked_sub(1)?)?.get(b.col.checked_sub(1)?)?
    }

    pub fn is_hole_at_corner(&self) -> bool {
        self.shape().is_outer_corner(self.hole)
    }

    /// Fills the hole, producing an ordinary tableau.
    pub fn fill(mut self, e: Entry) -> Result<Tableau> {
        self.alphabet.check(e)?;
        self.rows[self.hole.row - 1][self.hole.col - 1] = Some(e);
        let rows = self.rows.into_iter().map(|r| r.into_iter().map(|e| e.expect("single hole")).collect()).collect();
        Tableau::new(rows, self.alphabet)
    }

    /// Deletes the hole box; it must be an outer corner.
    pub fn remove_hole(mut self) -> Result<Tableau> {
        if !self.is_hole_at_corner() {
            return Err(Error::NotOuterCorner(self.hole));
        }
        self.rows[self.hole.row - 1].pop();
        if self.rows[self.hole.row - 1].is_empty() {
            self.rows.pop();
        }
        let rows = self.rows.into_iter().map(|r| r.into_iter().map(|e| e.expect("single hole")).collect()).collect();
        Tableau::new(rows, self.alphabet)
    }
}

impl fmt::Display for PuncturedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| e.map_or_else(|| "_".to_string(), Entry::token))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        f.write_str(&text.join(" ; "))
    }
}

/// A filling of a skew diagram; `rows[i]` holds the cells of row `i + 1`
/// that lie in the skew shape, left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewTableau {
    pub shape: SkewShape,
    pub rows: Vec<Vec<Entry>>,
}

impl SkewTableau {
    pub fn weight(&self, a: Alphabet) -> LaurentMonomial {
        let mut w = LaurentMonomial::one(a.m as usize, a.n as usize);
        for e in self.rows.iter().flatten() {
            let ew = e.weight(a);
            w = w.checked_mul(&ew).expect("same alphabet");
        }
        w
    }
}

/// Backtracking over cells in row-major order. `allowed` sees the partial
/// grid and only ever inspects the left and upper neighbors of a cell, which
/// are always filled before the cell itself.
struct CellFiller<F> {
    cells: Vec<Box>,
    letters: Vec<Entry>,
    grid: Vec<Vec<Option<Entry>>>,
    next: Vec<usize>,
    depth: usize,
    done: bool,
    allowed: F,
}

impl<F> CellFiller<F>
where
    F: Fn(&[Vec<Option<Entry>>], Box, Entry) -> bool,
{
    fn new(outer: &Partition, cells: Vec<Box>, letters: Vec<Entry>, allowed: F) -> Self {
        let grid = outer.parts().iter().map(|&len| vec![None; len]).collect();
        let next = vec![0; cells.len()];
        CellFiller {
            cells,
            letters,
            grid,
            next,
            depth: 0,
            done: false,
            allowed,
        }
    }
}

impl<F> Iterator for CellFiller<F>
where
    F: Fn(&[Vec<Option<Entry>>], Box, Entry) -> bool,
{
    type Item = Vec<Vec<Option<Entry>>>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        if self.cells.is_empty() {
            self.done = true;
            return Some(self.grid.clone());
        }
        loop {
            let d = self.depth;
            let cell = self.cells[d];
            let mut placed = false;
            while self.next[d] < self.letters.len() {
                let letter = self.letters[self.next[d]];
                self.next[d] += 1;
                if (self.allowed)(&self.grid, cell, letter) {
                    self.grid[cell.row - 1][cell.col - 1] = Some(letter);
                    placed = true;
                    break;
                }
            }
            if placed {
                if d + 1 == self.cells.len() {
                    return Some(self.grid.clone());
                }
                self.depth += 1;
                self.next[d + 1] = 0;
            } else {
                self.grid[cell.row - 1][cell.col - 1] = None;
                if d == 0 {
                    self.done = true;
                    return None;
                }
                self.depth -= 1;
            }
        }
    }
}

fn neighbor(grid: &[Vec<Option<Entry>>], row: usize, col: usize) -> Option<Entry> {
    if row == 0 || col == 0 {
        return None;
    }
    grid.get(row - 1)?.get(col - 1).copied().flatten()
}

fn full_rows(grid: Vec<Vec<Option<Entry>>>) -> Vec<Vec<Entry>> {
    grid.into_iter().map(|r| r.into_iter().map(|e| e.expect("filled")).collect()).collect()
}

/// Every spo-tableau of the given shape. Shapes that admit none (a column
/// too long for the alphabet) yield an empty stream.
pub fn enumerate_spo_tableaux(shape: &Partition, a: Alphabet) -> impl Iterator<Item = Tableau> {
    let cells = SkewShape::new(shape.clone(), Partition::empty()).expect("contains empty").boxes();
    let filler = CellFiller::new(shape, cells, a.letters(), |grid, b, e| {
        spo_cell_ok(b.row, e, neighbor(grid, b.row, b.col - 1), neighbor(grid, b.row - 1, b.col))
    });
    filler.map(move |g| Tableau::from_rows_unchecked(full_rows(g), a))
}

/// Every semistandard symplectic tableau of the given shape over `1..m`.
pub fn enumerate_symplectic_tableaux(shape: &Partition, m: u32) -> impl Iterator<Item = Tableau> {
    let a = Alphabet { m: m.max(1), n: 0 };
    let cells = SkewShape::new(shape.clone(), Partition::empty()).expect("contains empty").boxes();
    let filler = CellFiller::new(shape, cells, a.b0_letters(), |grid, b, e| {
        spo_cell_ok(b.row, e, neighbor(grid, b.row, b.col - 1), neighbor(grid, b.row - 1, b.col))
    });
    filler.map(move |g| Tableau::from_rows_unchecked(full_rows(g), a))
}

/// Fillings of a skew shape by `1°..n°`, strictly increasing along rows and
/// weakly increasing down columns. These are transposes of semistandard
/// fillings of the conjugate skew shape.
pub fn enumerate_skew_rowstrict(shape: &SkewShape, n: u32) -> impl Iterator<Item = SkewTableau> {
    let cells = shape.boxes();
    let letters: Vec<Entry> = (1..=n).map(Entry::Circled).collect();
    let outer = shape.outer().clone();
    let inner = shape.inner().clone();
    let filler = CellFiller::new(&outer, cells, letters, move |grid, b, e| {
        let in_skew = |r: usize, c: usize| r >= 1 && c > inner.part(r);
        let left = if b.col > 1 && in_skew(b.row, b.col - 1) { neighbor(grid, b.row, b.col - 1) } else { None };
        let up = if b.row > 1 && in_skew(b.row - 1, b.col) { neighbor(grid, b.row - 1, b.col) } else { None };
        left.is_none_or(|l| l < e) && up.is_none_or(|u| u <= e)
    });
    let shape = shape.clone();
    filler.map(move |g| SkewTableau {
        shape: shape.clone(),
        rows: g.into_iter().map(|r| r.into_iter().flatten().collect()).collect(),
    })
}

/// Semistandard (weak rows, strict columns) fillings by `1..n`, returned as
/// rows of circled letters so they share the `y` variables.
pub fn enumerate_semistandard(shape: &Partition, n: u32) -> impl Iterator<Item = Vec<Vec<Entry>>> {
    let cells = SkewShape::new(shape.clone(), Partition::empty()).expect("contains empty").boxes();
    let letters: Vec<Entry> = (1..=n).map(Entry::Circled).collect();
    let filler = CellFiller::new(shape, cells, letters, |grid, b, e| {
        neighbor(grid, b.row, b.col - 1).is_none_or(|l| l <= e) && neighbor(grid, b.row - 1, b.col).is_none_or(|u| u < e)
    });
    filler.map(full_rows)
}
