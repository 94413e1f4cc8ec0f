//! Tableaux models: `T(lambda)` for dominant `lambda` and the marginally large
//! tableaux model `T(infinity)`.
//!
//! A tableau is stored as its rows, top row first.  Its reading word lists the
//! columns from left to right, each column read from bottom to top; the
//! crystal operators act on that word by the tensor product rule and the
//! result is refilled into the same shape.
//!
//! A tableau with exactly `n` rows (the tableau height of the type) is *large*
//! when row `i` contains more letters `i` than row `i + 1` has boxes, and
//! *marginally large* when it contains exactly one more.  Adding or removing a
//! basic column `1, ..., h` preserves the class of a large tableau in
//! `T(infinity)`; every class has a unique marginally large member.

use crate::cartan::{CartanType, Weight};
use crate::crystal::CrystalElement;
use crate::error::{CrystalError, Result};
use crate::letters::{check_letter, Letter};
use crate::tensor::{raise_to_highest, word_e, word_epsilon, word_f, word_phi, word_weight};

/// An element of `T(lambda)`, where `lambda` is determined by the shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    ct: CartanType,
    rows: Vec<Vec<Letter>>,
}

impl Tableau {
    /// Builds and validates a tableau.  The rows must form a partition shape
    /// of at most `n` rows and the tableau must lie in `T(lambda)` for the
    /// weight `lambda` of its shape.
    pub fn from_rows(ct: CartanType, rows: Vec<Vec<Letter>>) -> Result<Tableau> {
        let t = Tableau::from_rows_unchecked(ct, rows)?;
        t.check_membership()?;
        Ok(t)
    }

    /// Builds a tableau after checking only letters and shape.
    pub(crate) fn from_rows_unchecked(ct: CartanType, rows: Vec<Vec<Letter>>) -> Result<Tableau> {
        if rows.len() > ct.height() {
            return Err(CrystalError::invalid(format!(
                "a tableau of type {ct} has at most {} rows",
                ct.height()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(CrystalError::invalid("empty row in tableau"));
            }
            if i > 0 && row.len() > rows[i - 1].len() {
                return Err(CrystalError::invalid("row lengths must weakly decrease"));
            }
            for &x in row {
                check_letter(ct, x)?;
            }
        }
        Ok(Tableau { ct, rows })
    }

    /// Juxtaposes columns (each listed top to bottom), checking only letters
    /// and shape.
    pub(crate) fn from_columns_unchecked(
        ct: CartanType,
        columns: &[Vec<Letter>],
    ) -> Result<Tableau> {
        let height = columns.first().map_or(0, |c| c.len());
        let mut rows: Vec<Vec<Letter>> = vec![Vec::new(); height];
        for col in columns {
            if col.len() > rows.len() {
                return Err(CrystalError::invalid("column heights must weakly decrease"));
            }
            for (i, &x) in col.iter().enumerate() {
                rows[i].push(x);
            }
        }
        Tableau::from_rows_unchecked(ct, rows)
    }

    /// The highest weight tableau `T_lambda`: row `i` filled with `i`.
    pub fn highest(ct: CartanType, lambda: &Weight) -> Result<Tableau> {
        let counts = ct.column_counts(lambda)?;
        let n = ct.height();
        let mut rows = Vec::new();
        for i in 1..=n {
            let len: usize = counts[i - 1..].iter().sum();
            if len == 0 {
                break;
            }
            rows.push(vec![Letter(i as i32); len]);
        }
        Ok(Tableau { ct, rows })
    }

    /// Rebuilds a tableau of the given row lengths from a reading word.
    pub fn from_word(ct: CartanType, row_lengths: &[usize], word: &[Letter]) -> Tableau {
        let mut rows: Vec<Vec<Letter>> =
            row_lengths.iter().map(|&l| Vec::with_capacity(l)).collect();
        let width = row_lengths.first().copied().unwrap_or(0);
        let mut pos = 0;
        for j in 0..width {
            let h = row_lengths.iter().filter(|&&l| l > j).count();
            for i in (0..h).rev() {
                rows[i].push(word[pos + (h - 1 - i)]);
            }
            pos += h;
        }
        assert_eq!(pos, word.len(), "word length does not match shape");
        Tableau { ct, rows }
    }

    fn check_membership(&self) -> Result<()> {
        let lambda = self.shape_weight();
        let top = Tableau::highest(self.ct, &lambda)?;
        let (hw, _) = raise_to_highest(self.ct, &self.reading_word());
        if hw != top.reading_word() {
            return Err(CrystalError::invalid(format!(
                "rows {:?} do not form a tableau of T({lambda}) in type {}",
                self.rows_as_values(),
                self.ct
            )));
        }
        Ok(())
    }

    fn rows_as_values(&self) -> Vec<Vec<i32>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|x| x.0).collect())
            .collect()
    }

    /// The Cartan type.
    pub fn cartan_type(&self) -> CartanType {
        self.ct
    }

    /// The rows, top row first.
    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    /// Row lengths.
    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.len()).collect()
    }

    /// The highest weight `lambda` of the ambient `T(lambda)`.
    pub fn shape_weight(&self) -> Weight {
        self.ct.shape_weight(&self.shape())
    }

    /// Columns from left to right, each listed from top to bottom.
    pub fn columns(&self) -> Vec<Vec<Letter>> {
        let width = self.rows.first().map_or(0, |r| r.len());
        (0..width)
            .map(|j| {
                self.rows
                    .iter()
                    .take_while(|r| r.len() > j)
                    .map(|r| r[j])
                    .collect()
            })
            .collect()
    }

    /// Builds a tableau by juxtaposing columns (each listed top to bottom).
    pub fn from_columns(ct: CartanType, columns: &[Vec<Letter>]) -> Result<Tableau> {
        let height = columns.first().map_or(0, |c| c.len());
        let mut rows: Vec<Vec<Letter>> = vec![Vec::new(); height];
        for (j, col) in columns.iter().enumerate() {
            if j > 0 && col.len() > columns[j - 1].len() {
                return Err(CrystalError::invalid("column heights must weakly decrease"));
            }
            for (i, &x) in col.iter().enumerate() {
                rows[i].push(x);
            }
        }
        Tableau::from_rows(ct, rows)
    }

    /// Reading word: columns left to right, each read bottom to top.
    pub fn reading_word(&self) -> Vec<Letter> {
        let mut word = Vec::new();
        for col in self.columns() {
            word.extend(col.iter().rev());
        }
        word
    }

    fn refill(&self, word: &[Letter]) -> Tableau {
        Tableau::from_word(self.ct, &self.shape(), word)
    }

    /// Whether this is the highest weight tableau of its shape.
    pub fn is_highest_weight(&self) -> bool {
        self.ct
            .nodes()
            .all(|a| word_epsilon(self.ct, a, &self.reading_word()) == 0)
    }

    /// Number of letters `i` in row `i` (1-based), i.e. the length of the
    /// leading run of a large tableau.
    fn leading_count(&self, i: usize) -> usize {
        self.rows
            .get(i - 1)
            .map_or(0, |r| r.iter().filter(|x| x.0 == i as i32).count())
    }

    /// Excess `(#i in row i) - (length of row i+1) - 1` for each row `i`.
    fn excesses(&self) -> Vec<i64> {
        let n = self.ct.height();
        (1..=n)
            .map(|i| {
                let next = self.rows.get(i).map_or(0, |r| r.len());
                self.leading_count(i) as i64 - next as i64 - 1
            })
            .collect()
    }

    /// Whether the tableau is large (all `n` rows present, every excess >= 0).
    pub fn is_large(&self) -> bool {
        self.rows.len() == self.ct.height() && self.excesses().iter().all(|&d| d >= 0)
    }

    /// Whether the tableau is marginally large.
    pub fn is_marginally_large(&self) -> bool {
        self.rows.len() == self.ct.height() && self.excesses().iter().all(|&d| d == 0)
    }

    fn insert_basic_column(&mut self, h: usize) {
        while self.rows.len() < h {
            self.rows.push(Vec::new());
        }
        for i in 1..=h {
            self.rows[i - 1].insert(0, Letter(i as i32));
        }
    }

    fn remove_basic_column(&mut self, h: usize) {
        for i in 1..=h {
            let x = self.rows[i - 1].remove(0);
            assert_eq!(x.0, i as i32, "removed entry is not part of a basic column");
        }
    }

    /// Adds and removes basic columns until the tableau is marginally large.
    fn normalize(&mut self) {
        let n = self.ct.height();
        for r in 1..=n {
            let d = self.excesses()[r - 1];
            for _ in 0..(-d).max(0) {
                self.insert_basic_column(r);
            }
            for _ in 0..d.max(0) {
                self.remove_basic_column(r);
            }
        }
        debug_assert!(self.is_marginally_large());
    }
}

impl CrystalElement for Tableau {
    fn cartan_type(&self) -> CartanType {
        self.ct
    }

    fn e(&self, a: usize) -> Option<Self> {
        word_e(self.ct, a, &self.reading_word()).map(|w| self.refill(&w))
    }

    fn f(&self, a: usize) -> Option<Self> {
        word_f(self.ct, a, &self.reading_word()).map(|w| self.refill(&w))
    }

    fn epsilon(&self, a: usize) -> i64 {
        word_epsilon(self.ct, a, &self.reading_word()) as i64
    }

    fn phi(&self, a: usize) -> i64 {
        word_phi(self.ct, a, &self.reading_word()) as i64
    }

    fn weight(&self) -> Weight {
        word_weight(self.ct, &self.reading_word())
    }
}

/// A marginally large tableau, representing an element of `T(infinity)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mlt {
    t: Tableau,
}

impl Mlt {
    /// The ground state: row `i` holds `n + 1 - i` copies of `i`.
    pub fn ground(ct: CartanType) -> Mlt {
        let n = ct.height();
        let rows = (1..=n).map(|i| vec![Letter(i as i32); n + 1 - i]).collect();
        Mlt {
            t: Tableau { ct, rows },
        }
    }

    /// Validates rows as a marginally large tableau.
    pub fn from_rows(ct: CartanType, rows: Vec<Vec<Letter>>) -> Result<Mlt> {
        let t = Tableau::from_rows_unchecked(ct, rows)?;
        if t.rows.len() != ct.height() {
            return Err(CrystalError::invalid(format!(
                "a marginally large tableau of type {ct} has exactly {} rows",
                ct.height()
            )));
        }
        if !t.is_marginally_large() {
            return Err(CrystalError::invalid(
                "tableau is not marginally large: row i must hold exactly one more letter i than row i+1 has boxes",
            ));
        }
        t.check_membership()?;
        Ok(Mlt { t })
    }

    /// The marginally large representative of the class of a large tableau.
    pub fn from_large(t: &Tableau) -> Result<Mlt> {
        if !t.is_large() {
            return Err(CrystalError::invalid("tableau is not large"));
        }
        let mut t = t.clone();
        t.normalize();
        Ok(Mlt { t })
    }

    /// The underlying tableau, an element of `T(lambda_T)`.
    pub fn tableau(&self) -> &Tableau {
        &self.t
    }

    /// The Cartan type.
    pub fn cartan_type(&self) -> CartanType {
        self.t.ct
    }

    /// Rows, top row first.
    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.t.rows
    }

    /// Whether this is the ground state.
    pub fn is_ground(&self) -> bool {
        *self == Mlt::ground(self.t.ct)
    }

    /// Height of the basic column that must be added before applying `f_a`.
    fn column_for_node(&self, a: usize) -> usize {
        a.min(self.t.ct.height())
    }
}

impl CrystalElement for Mlt {
    fn cartan_type(&self) -> CartanType {
        self.t.ct
    }

    fn e(&self, a: usize) -> Option<Self> {
        let mut t = self.t.e(a)?;
        t.normalize();
        Some(Mlt { t })
    }

    fn f(&self, a: usize) -> Option<Self> {
        // A basic column keeps the class and guarantees f_a does not vanish.
        let mut big = self.t.clone();
        big.insert_basic_column(self.column_for_node(a));
        let mut t = big.f(a).expect("f_a vanished on a large tableau");
        t.normalize();
        Some(Mlt { t })
    }

    fn epsilon(&self, a: usize) -> i64 {
        self.t.epsilon(a)
    }

    fn phi(&self, a: usize) -> i64 {
        self.epsilon(a) + self.weight().at(a)
    }

    fn weight(&self) -> Weight {
        &self.t.weight() - &self.t.shape_weight()
    }
}

/// Counts the segments of one row (maximal runs of equal letters).
pub(crate) fn row_segments(row: &[Letter]) -> Vec<(Letter, usize)> {
    let mut out: Vec<(Letter, usize)> = Vec::new();
    for &x in row {
        match out.last_mut() {
            Some((y, k)) if *y == x => *k += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}
