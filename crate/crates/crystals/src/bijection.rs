//! The bijection `Phi` between rigged configurations and tensor products of
//! columns, and the induced isomorphisms `Psi: RC(infinity) -> T(infinity)`
//! and `Xi: T(infinity) -> RC(infinity)`.
//!
//! A rigged configuration in `RC(lambda)` is read as an element of `RC(B)`
//! where `B` is the tensor product of columns whose weights add up to
//! `lambda`, tallest columns first.  The step [`delta`] removes one letter
//! from the leftmost column: it walks the crystal graph of the vector
//! representation starting at the letter `r` (the column height), removing
//! one box from a singular string at every edge.  [`delta_inv`] adds the
//! letter back by walking the same path in reverse.
//!
//! Selection rules:
//!
//! * `delta` chooses, at each node, the shortest singular string whose length
//!   is at least the original length of the previously chosen string;
//! * `delta_inv` chooses the longest singular string whose length is at most
//!   the original length of the previously chosen string, or adds a new
//!   string of length one when there is none.
//!
//! Singularity is always judged with the vacancy numbers of the configuration
//! the step starts from.  Afterwards the vector `L` is updated, vacancy
//! numbers are recomputed, changed strings are made singular and all other
//! riggings are kept.

use crate::cartan::{CartanType, Family, Weight};
use crate::error::{CrystalError, Result};
use crate::letters::{check_letter, Letter};
use crate::rigged::{canonicalize, vacancy_number, RcModel, RiggedConfiguration, RiggedString};
use crate::tableaux::{Mlt, Tableau};

/// Columns of a tensor product, leftmost factor first, each listed from top
/// to bottom.
pub type ColumnList = Vec<Vec<Letter>>;

/// Working copy of a configuration during one step of the bijection.
struct Work {
    ct: CartanType,
    l: Vec<i64>,
    nu: Vec<Vec<RiggedString>>,
    /// Vacancy numbers at the start of the step, indexed like `nu`.
    vac: Vec<Vec<i64>>,
    changed: Vec<Vec<bool>>,
}

impl Work {
    fn new(rc: &RiggedConfiguration, l: Vec<i64>) -> Work {
        let ct = rc.cartan_type();
        let nu = rc.nu().to_vec();
        let vac = ct
            .nodes()
            .map(|a| {
                nu[a - 1]
                    .iter()
                    .map(|s| vacancy_number(ct, &l, &nu, a, s.len))
                    .collect()
            })
            .collect();
        let changed = nu.iter().map(|p| vec![false; p.len()]).collect();
        Work {
            ct,
            l,
            nu,
            vac,
            changed,
        }
    }

    fn len(&self, a: usize, k: usize) -> usize {
        self.nu[a - 1][k].len
    }

    fn is_singular(&self, a: usize, k: usize) -> bool {
        !self.changed[a - 1][k] && self.nu[a - 1][k].rig == self.vac[a - 1][k]
    }

    fn is_quasi_singular(&self, a: usize, k: usize) -> bool {
        !self.changed[a - 1][k] && self.nu[a - 1][k].rig == self.vac[a - 1][k] - 1
    }

    /// The shortest singular string of `nu^(a)` of length at least `min_len`,
    /// skipping `exclude`.
    fn shortest_singular(&self, a: usize, min_len: usize, exclude: Option<usize>) -> Option<usize> {
        (0..self.nu[a - 1].len())
            .rev()
            .find(|&k| Some(k) != exclude && self.len(a, k) >= min_len && self.is_singular(a, k))
    }

    /// Removes `count` boxes from a string and marks it as changed.
    fn remove(&mut self, a: usize, k: usize, count: usize) {
        self.nu[a - 1][k].len -= count;
        self.changed[a - 1][k] = true;
    }

    /// Adds `count` boxes to a string and marks it as changed.
    fn grow(&mut self, a: usize, k: usize, count: usize) {
        self.nu[a - 1][k].len += count;
        self.changed[a - 1][k] = true;
    }

    /// Appends a changed string of the given length, returning its index.
    fn push(&mut self, a: usize, len: usize) -> usize {
        self.nu[a - 1].push(RiggedString::new(len, 0));
        self.vac[a - 1].push(0);
        self.changed[a - 1].push(true);
        self.nu[a - 1].len() - 1
    }

    /// Adds a box to the longest unchanged singular string of length at most
    /// `cap`, or a new string of length one.  Returns the index of the string
    /// and its length before the box was added.
    fn insert(&mut self, a: usize, cap: usize) -> (usize, usize) {
        let found = if cap > 0 {
            (0..self.nu[a - 1].len()).find(|&k| self.len(a, k) <= cap && self.is_singular(a, k))
        } else {
            None
        };
        match found {
            Some(k) => {
                let old = self.len(a, k);
                self.grow(a, k, 1);
                (k, old)
            }
            None => (self.push(a, 1), 0),
        }
    }

    /// Updates `L`, recomputes vacancy numbers and makes every changed string
    /// singular, except `quasi`, which is made quasi-singular.
    fn finish(mut self, dl: &Weight, quasi: Option<(usize, usize)>) -> Result<RiggedConfiguration> {
        for (x, d) in self.l.iter_mut().zip(&dl.0) {
            *x += d;
        }
        if self.l.iter().any(|&x| x < 0) {
            return Err(CrystalError::invalid(
                "no column of the requested height remains",
            ));
        }
        let snapshot = self.nu.clone();
        for a in self.ct.nodes() {
            for (k, s) in self.nu[a - 1].iter_mut().enumerate() {
                if self.changed[a - 1][k] && s.len > 0 {
                    s.rig = vacancy_number(self.ct, &self.l, &snapshot, a, s.len);
                    if quasi == Some((a, k)) {
                        s.rig -= 1;
                    }
                }
            }
        }
        canonicalize(&mut self.nu);
        RiggedConfiguration::from_parts_unchecked(
            self.ct,
            RcModel::HighestWeight(Weight(self.l)),
            self.nu,
        )
    }
}

/// Change of `L` when a column of height `r` loses its bottom letter.
fn column_step(ct: CartanType, r: usize) -> Weight {
    let mut w = -&ct.column_weight(r);
    if r > 1 {
        w += &ct.column_weight(r - 1);
    }
    w
}

fn lambda_of(rc: &RiggedConfiguration, what: &str) -> Result<Vec<i64>> {
    match rc.model() {
        RcModel::HighestWeight(l) => Ok(l.0.clone()),
        RcModel::Infinity => Err(CrystalError::invalid(format!(
            "{what} needs a rigged configuration with a highest weight"
        ))),
    }
}

fn check_row(ct: CartanType, r: usize) -> Result<()> {
    if r == 0 || r > ct.height() {
        return Err(CrystalError::invalid(format!(
            "row {r} is out of range for type {ct} (columns have height at most {})",
            ct.height()
        )));
    }
    Ok(())
}

/// Walks `nodes` choosing shortest singular strings; returns the node where
/// no string was found, if any.
fn walk_forward(
    w: &Work,
    nodes: impl Iterator<Item = usize>,
    last: &mut usize,
    chosen: &mut [Option<usize>],
) -> Option<usize> {
    for a in nodes {
        match w.shortest_singular(a, *last, None) {
            Some(k) => {
                *last = w.len(a, k);
                chosen[a - 1] = Some(k);
            }
            None => return Some(a),
        }
    }
    None
}

/// Walks back down from node `top` to node 1.  At nodes `a >= r` the string
/// chosen on the way up is not eligible again.  Returns the barred letter.
fn walk_back(
    w: &Work,
    top: usize,
    r: usize,
    last: &mut usize,
    up: &[Option<usize>],
    down: &mut [Option<usize>],
) -> Letter {
    for a in (1..=top).rev() {
        let exclude = if a >= r { up[a - 1] } else { None };
        match w.shortest_singular(a, *last, exclude) {
            Some(k) => {
                *last = w.len(a, k);
                down[a - 1] = Some(k);
            }
            None => return Letter(-(a as i32 + 1)),
        }
    }
    Letter(-1)
}

fn remove_all(w: &mut Work, chosen: &[Option<usize>]) {
    for (i, k) in chosen.iter().enumerate() {
        if let Some(k) = *k {
            w.remove(i + 1, k, 1);
        }
    }
}

/// Type `A_n`: walk `r, r+1, ..., n`.
fn delta_a(w: &mut Work, r: usize) -> Result<(Letter, Option<(usize, usize)>)> {
    let n = w.ct.rank();
    let mut up = vec![None; n];
    let mut last = 0;
    let stop = walk_forward(w, r..=n, &mut last, &mut up);
    remove_all(w, &up);
    Ok((Letter(stop.unwrap_or(n + 1) as i32), None))
}

/// Type `C_n` (affine type `A_{2n-1}^{(2)}`): up to node `n`, then back down.
fn delta_c(w: &mut Work, r: usize) -> Result<(Letter, Option<(usize, usize)>)> {
    let n = w.ct.rank();
    let mut up = vec![None; n];
    let mut down = vec![None; n];
    let mut last = 0;
    let b = match walk_forward(w, r..=n, &mut last, &mut up) {
        Some(a) => Letter(a as i32),
        None => walk_back(w, n - 1, r, &mut last, &up, &mut down),
    };
    remove_all(w, &up);
    remove_all(w, &down);
    Ok((b, None))
}

/// Type `D_{n+1}` (affine type `D_{n+1}^{(1)}`): up to node `n-1`, then the
/// two spin nodes `n` and `n+1`, then back down.
fn delta_d(w: &mut Work, r: usize) -> Result<(Letter, Option<(usize, usize)>)> {
    let rank = w.ct.rank();
    let n = rank - 1;
    let mut up = vec![None; rank];
    let mut down = vec![None; rank];
    let mut last = 0;
    let b = if let Some(a) = walk_forward(w, r..n, &mut last, &mut up) {
        Letter(a as i32)
    } else {
        let left = w.shortest_singular(n, last, None);
        let right = w.shortest_singular(n + 1, last, None);
        up[n - 1] = left;
        up[n] = right;
        match (left, right) {
            (None, None) => Letter(n as i32),
            (Some(_), None) => Letter(n as i32 + 1),
            (None, Some(_)) => Letter(-(n as i32 + 1)),
            (Some(k), Some(j)) => {
                last = w.len(n, k).max(w.len(n + 1, j));
                walk_back(w, n - 1, r, &mut last, &up, &mut down)
            }
        }
    };
    remove_all(w, &up);
    remove_all(w, &down);
    Ok((b, None))
}

/// Type `B_n` (affine type `D_{n+1}^{(2)}`): up to node `n-1`, then the
/// singular/quasi-singular rules at node `n`, then back down.
fn delta_b(w: &mut Work, r: usize) -> Result<(Letter, Option<(usize, usize)>)> {
    let n = w.ct.rank();
    let mut up = vec![None; n];
    let mut last = 0;
    if let Some(a) = walk_forward(w, r..n, &mut last, &mut up) {
        remove_all(w, &up);
        return Ok((Letter(a as i32), None));
    }
    // Node n: the shortest admissible string that is singular (case S) or,
    // before that, quasi-singular (case Q).
    let mut case_s = None;
    let mut case_q = None;
    for k in (0..w.nu[n - 1].len()).rev() {
        let len = w.len(n, k);
        if len < last {
            continue;
        }
        if w.is_singular(n, k) {
            if len == 1 {
                return Err(CrystalError::invalid(
                    "a singular string of length one at the last node yields the empty letter, \
                     which does not occur in these crystals",
                ));
            }
            case_s = Some(k);
            last = len;
            break;
        }
        if case_q.is_none()
            && w.is_quasi_singular(n, k)
            && !(0..w.nu[n - 1].len()).any(|j| w.len(n, j) == len && w.is_singular(n, j))
        {
            case_q = Some(k);
            last = len + 1;
        }
    }
    let Some(s) = case_s else {
        remove_all(w, &up);
        if let Some(q) = case_q {
            w.remove(n, q, 1);
            return Ok((Letter(0), None));
        }
        return Ok((Letter(n as i32), None));
    };
    // Back down; when the previous length equals the original length of the
    // string chosen on the way up, that string loses a second box.
    let mut twice = vec![false; n];
    let mut down = vec![None; n];
    let mut b = Letter(-1);
    for a in (1..n).rev() {
        if a >= r && up[a - 1].is_some_and(|k| w.len(a, k) == last) {
            twice[a - 1] = true;
            continue;
        }
        match w.shortest_singular(a, last, None) {
            Some(k) => {
                last = w.len(a, k);
                down[a - 1] = Some(k);
            }
            None => {
                b = Letter(-(a as i32 + 1));
                break;
            }
        }
    }
    for a in 1..n {
        if let Some(k) = up[a - 1] {
            w.remove(a, k, if twice[a - 1] { 2 } else { 1 });
        }
        if let Some(k) = down[a - 1] {
            w.remove(a, k, 1);
        }
    }
    let quasi = match case_q {
        Some(q) => {
            w.remove(n, q, 1);
            w.remove(n, s, 1);
            Some((n, s))
        }
        None => {
            w.remove(n, s, 2);
            None
        }
    };
    Ok((b, quasi))
}

/// One step `delta'` of the bijection: removes the bottom letter of the
/// leftmost column, which has height `r`, and returns the new configuration
/// (whose `L` has lost that letter) together with the letter.
pub fn delta(rc: &RiggedConfiguration, r: usize) -> Result<(RiggedConfiguration, Letter)> {
    let ct = rc.cartan_type();
    ct.require_bijection("the bijection")?;
    check_row(ct, r)?;
    let l = lambda_of(rc, "delta")?;
    let cw = ct.column_weight(r);
    if l.iter().zip(&cw.0).any(|(x, c)| x < c) {
        return Err(CrystalError::invalid(format!(
            "no column of height {r} remains"
        )));
    }
    let mut w = Work::new(rc, l);
    let (b, quasi) = match ct.family() {
        Family::A => delta_a(&mut w, r)?,
        Family::B => delta_b(&mut w, r)?,
        Family::C => delta_c(&mut w, r)?,
        Family::D => delta_d(&mut w, r)?,
        Family::G => unreachable!("checked by require_bijection"),
    };
    Ok((w.finish(&column_step(ct, r), quasi)?, b))
}

/// Inserts along `nodes` with a shared cap, returning the final cap.
fn insert_path(w: &mut Work, nodes: impl Iterator<Item = usize>, mut cap: usize) -> usize {
    for a in nodes {
        cap = w.insert(a, cap).1;
    }
    cap
}

fn unreachable_letter(b: Letter, r: usize) -> CrystalError {
    CrystalError::invalid(format!(
        "letter {b} cannot be the bottom of a column of height {r}"
    ))
}

/// Inverse of [`delta`]: puts the letter `b` back as the bottom entry of a
/// column of height `r` (whose upper `r - 1` entries are already present).
pub fn delta_inv(rc: &RiggedConfiguration, b: Letter, r: usize) -> Result<RiggedConfiguration> {
    let ct = rc.cartan_type();
    ct.require_bijection("the bijection")?;
    check_row(ct, r)?;
    check_letter(ct, b)?;
    if r > 1
        && ct
            .column_weight(r - 1)
            .0
            .iter()
            .zip(&lambda_of(rc, "delta_inv")?)
            .any(|(c, x)| x < c)
    {
        return Err(CrystalError::invalid(format!(
            "no column of height {} to extend",
            r - 1
        )));
    }
    let mut w = Work::new(rc, lambda_of(rc, "delta_inv")?);
    let rank = ct.rank();
    let v = b.value();
    let mut quasi = None;
    if v > 0 {
        // Unbarred letters: insert at nodes v-1, v-2, ..., r.
        let v = v as usize;
        if v < r {
            return Err(unreachable_letter(b, r));
        }
        insert_path(&mut w, (r..v).rev(), usize::MAX);
    } else {
        match ct.family() {
            Family::A | Family::G => return Err(unreachable_letter(b, r)),
            Family::C => {
                let k = (-v) as usize;
                let cap = insert_path(&mut w, k..=rank, usize::MAX);
                insert_path(&mut w, (r..rank).rev(), cap);
            }
            Family::D => {
                let n = rank - 1;
                if v == -(rank as i32) {
                    let cap = insert_path(&mut w, std::iter::once(n + 1), usize::MAX);
                    insert_path(&mut w, (r..n).rev(), cap);
                } else {
                    let k = (-v) as usize;
                    let cap = insert_path(&mut w, k..n, usize::MAX);
                    let c1 = w.insert(n, cap).1;
                    let c2 = w.insert(n + 1, cap).1;
                    insert_path(&mut w, (r..n).rev(), c1.min(c2));
                }
            }
            Family::B => {
                let n = rank;
                if v == 0 {
                    let (k, _) = w.insert(n, usize::MAX);
                    let cap = w.len(n, k) - 1;
                    insert_path(&mut w, (r..n).rev(), cap);
                    quasi = Some((n, k));
                } else {
                    quasi = delta_inv_b_barred(&mut w, (-v) as usize, r);
                }
            }
        }
    }
    w.finish(&-&column_step(ct, r), quasi)
}

/// `delta_inv` for a barred letter `\bar k` in type `B_n`.
fn delta_inv_b_barred(w: &mut Work, k: usize, r: usize) -> Option<(usize, usize)> {
    let n = w.ct.rank();
    let mut cap = usize::MAX;
    let mut up: Vec<Option<(usize, usize)>> = vec![None; n];
    for a in k..n {
        let (idx, old) = w.insert(a, cap);
        up[a - 1] = Some((idx, old));
        cap = old;
    }
    // Node n: the longest admissible string; a quasi-singular one gains a box
    // and the search goes on, a singular one gains two boxes (one if a
    // quasi-singular string was met first).
    let mut q_seen = false;
    let mut quasi = None;
    let mut found = false;
    for i in 0..w.nu[n - 1].len() {
        if w.len(n, i) > cap {
            continue;
        }
        if w.is_singular(n, i) {
            cap = w.len(n, i);
            if q_seen {
                w.grow(n, i, 1);
                quasi = Some((n, i));
            } else {
                w.grow(n, i, 2);
            }
            found = true;
            break;
        }
        if !q_seen && w.is_quasi_singular(n, i) {
            q_seen = true;
            w.grow(n, i, 1);
        }
    }
    if !found {
        cap = 0;
        if q_seen {
            let i = w.push(n, 1);
            quasi = Some((n, i));
        } else {
            w.push(n, 2);
        }
    }
    for a in (r..n).rev() {
        match up[a - 1] {
            Some((idx, old)) if old == cap => w.grow(a, idx, 1),
            _ => cap = w.insert(a, cap).1,
        }
    }
    quasi
}

/// Column heights of the factors of `B^{lambda}`, tallest first.
pub fn factor_heights(ct: CartanType, lambda: &Weight) -> Result<Vec<usize>> {
    let counts = ct.column_counts(lambda)?;
    Ok((1..=ct.height())
        .rev()
        .flat_map(|h| std::iter::repeat_n(h, counts[h - 1]))
        .collect())
}

/// `Phi`: sends an element of `RC(lambda)` to the tensor product of columns
/// `B^{lambda}`.
pub fn phi(rc: &RiggedConfiguration) -> Result<ColumnList> {
    let ct = rc.cartan_type();
    ct.require_bijection("the bijection")?;
    let lambda = Weight(lambda_of(rc, "phi")?);
    let mut cur = rc.clone();
    let mut columns = Vec::new();
    for h in factor_heights(ct, &lambda)? {
        let mut col = Vec::with_capacity(h);
        for r in (1..=h).rev() {
            let (next, b) = delta(&cur, r)?;
            col.push(b);
            cur = next;
        }
        col.reverse();
        columns.push(col);
    }
    if !cur.is_empty() {
        return Err(CrystalError::invalid(
            "rigged configuration is not in the domain of the bijection",
        ));
    }
    Ok(columns)
}

/// `Phi^{-1}`: builds the rigged configuration of a tensor product of
/// columns, processing factors from right to left and each column from top
/// to bottom.  The result lies in `RC(lambda)` where `lambda` is the sum of
/// the column weights.
pub fn phi_inv(ct: CartanType, columns: &[Vec<Letter>]) -> Result<RiggedConfiguration> {
    ct.require_bijection("the bijection")?;
    for (j, col) in columns.iter().enumerate() {
        check_row(ct, col.len())?;
        if j > 0 && col.len() > columns[j - 1].len() {
            return Err(CrystalError::invalid("column heights must weakly decrease"));
        }
    }
    let mut cur = RiggedConfiguration::empty(ct, RcModel::HighestWeight(ct.zero_weight()))?;
    for col in columns.iter().rev() {
        for (i, &x) in col.iter().enumerate() {
            cur = delta_inv(&cur, x, i + 1)?;
        }
    }
    if !cur.is_valid() || phi(&cur)? != columns {
        return Err(CrystalError::invalid(
            "columns are not in the image of the bijection",
        ));
    }
    Ok(cur)
}

/// The weight `lambda_nu`: the smallest weight in the tableau range for
/// which every string has nonnegative vacancy slack, namely
/// `sum_h (|nu^(h)| + 1) * (weight of a column of height h)`, with both spin
/// nodes contributing through their larger partition in type `D`.
pub fn lambda_nu(rc: &RiggedConfiguration) -> Weight {
    let ct = rc.cartan_type();
    let n = ct.height();
    let mut lambda = ct.zero_weight();
    for h in 1..=n {
        let mut size = rc.size(h);
        if ct.family() == Family::D && h == n {
            size = size.max(rc.size(n + 1));
        }
        lambda += &ct.column_weight(h).scaled(size as i64 + 1);
    }
    lambda
}

/// `Psi: RC(infinity) -> T(infinity)`.
pub fn psi(rc: &RiggedConfiguration) -> Result<Mlt> {
    let ct = rc.cartan_type();
    ct.require_bijection("Psi")?;
    if *rc.model() != RcModel::Infinity {
        return Err(CrystalError::invalid("Psi is defined on RC(infinity)"));
    }
    let lifted = rc.with_model(RcModel::HighestWeight(lambda_nu(rc)))?;
    let columns = phi(&lifted)?;
    let t = Tableau::from_columns_unchecked(ct, &columns)?;
    Mlt::from_large(&t)
}

/// `Xi: T(infinity) -> RC(infinity)`, the inverse of [`psi`].
pub fn xi(t: &Mlt) -> Result<RiggedConfiguration> {
    let ct = t.cartan_type();
    ct.require_bijection("Xi")?;
    phi_inv(ct, &t.tableau().columns())?.with_model(RcModel::Infinity)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::CrystalElement;

    fn ct(s: &str) -> CartanType {
        s.parse().unwrap()
    }

    fn part(v: &[(usize, i64)]) -> Vec<RiggedString> {
        v.iter().map(|&(l, r)| RiggedString::new(l, r)).collect()
    }

    fn rc_hw(t: &str, l: &[i64], nu: Vec<Vec<RiggedString>>) -> RiggedConfiguration {
        RiggedConfiguration::from_parts_unchecked(
            ct(t),
            RcModel::HighestWeight(Weight(l.to_vec())),
            nu,
        )
        .unwrap()
    }

    #[test]
    fn empty_configuration_gives_basic_columns() {
        for (t, lambda) in [
            ("A3", vec![1, 1, 1]),
            ("B3", vec![1, 0, 2]),
            ("C3", vec![0, 2, 1]),
            ("D4", vec![1, 0, 1, 1]),
        ] {
            let top =
                RiggedConfiguration::empty(ct(t), RcModel::HighestWeight(Weight(lambda.clone())))
                    .unwrap();
            let cols = phi(&top).unwrap();
            for col in &cols {
                let expect: Vec<Letter> = (1..=col.len() as i32).map(Letter).collect();
                assert_eq!(col, &expect, "{t}");
            }
            assert_eq!(phi_inv(ct(t), &cols).unwrap(), top);
        }
    }

    #[test]
    fn single_letter_steps_in_type_a() {
        // One box in nu^(1) and nu^(2) with L = Lambda_1: the letter 3.
        let rc = rc_hw(
            "A3",
            &[1, 0, 0],
            vec![part(&[(1, 0)]), part(&[(1, -1)]), vec![]],
        );
        let (rest, b) = delta(&rc, 1).unwrap();
        assert_eq!(b, Letter(3));
        assert!(rest.is_empty());
        assert_eq!(delta_inv(&rest, Letter(3), 1).unwrap(), rc);
    }

    #[test]
    fn delta_inv_inverts_delta_on_lowered_elements() {
        for (t, lambda) in [
            ("A2", vec![1, 1]),
            ("B2", vec![1, 2]),
            ("C2", vec![1, 1]),
            ("D4", vec![1, 0, 1, 1]),
            ("B3", vec![0, 1, 2]),
        ] {
            let top =
                RiggedConfiguration::empty(ct(t), RcModel::HighestWeight(Weight(lambda))).unwrap();
            let mut frontier = vec![top];
            for _ in 0..4 {
                let mut next = Vec::new();
                for x in &frontier {
                    let cols = phi(x).unwrap();
                    assert_eq!(&phi_inv(ct(t), &cols).unwrap(), x, "{t} {x}");
                    for a in ct(t).nodes() {
                        if let Some(y) = x.f(a) {
                            next.push(y);
                        }
                    }
                }
                frontier = next;
            }
        }
    }
}
