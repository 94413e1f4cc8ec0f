//! Statistics on the two models of `B(infinity)` and `B(lambda)`.
//!
//! * [`seg`] counts segments of a marginally large tableau.
//! * [`rpt`] is its translation to rigged configurations through `delta`.
//! * [`diff`] measures how far a rigged configuration is from losing
//!   validity at a node.
//! * [`rem`] measures how many fundamental weights can be removed before an
//!   element vanishes under projection.
//!
//! The main identities are `rpt = seg . Psi` and `diff_a = rem_a . Psi`.

use std::collections::BTreeSet;

use crate::bijection::{delta, lambda_nu};
use crate::cartan::{CartanType, Family, Weight};
use crate::crystal::CrystalElement;
use crate::error::{CrystalError, Result};
use crate::letters::Letter;
use crate::rigged::{RcModel, RiggedConfiguration};
use crate::tableaux::{row_segments, Mlt, Tableau};

/// `seg'`: the number of segments of the tableau that are not the leading
/// run of letters `i` in row `i`, i.e. all segments minus the height.
pub fn seg_prime(t: &Mlt) -> usize {
    let total: usize = t.rows().iter().map(|r| row_segments(r).len()).sum();
    total - t.rows().len()
}

/// The segment statistic on marginally large tableaux.
pub fn seg(t: &Mlt) -> usize {
    let ct = t.cartan_type();
    let base = seg_prime(t) as i64;
    let has = |row: &[Letter], x: i32| row.contains(&Letter(x));
    let correction: i64 = match ct.family() {
        Family::A | Family::C => 0,
        Family::B => {
            -(t.rows()
                .iter()
                .enumerate()
                .filter(|(i, row)| has(row, 0) && has(row, -(*i as i32 + 1)))
                .count() as i64)
        }
        Family::D => {
            let top = ct.rank() as i32;
            t.rows()
                .iter()
                .enumerate()
                .filter(|(i, row)| has(row, -(*i as i32 + 1)) && !has(row, top) && !has(row, -top))
                .count() as i64
        }
        Family::G => {
            let first = &t.rows()[0];
            -i64::from(has(first, 0) && has(first, -1))
        }
    };
    (base + correction) as usize
}

/// Letters produced by the recursive computation of [`rpt`]: entry `r - 1`
/// holds `b^(r)`, the first letters returned by the applications of
/// `delta_(r)`.
pub fn rpt_letters(rc: &RiggedConfiguration) -> Result<Vec<Vec<Letter>>> {
    let ct = rc.cartan_type();
    ct.require_bijection("rpt")?;
    if *rc.model() != RcModel::Infinity {
        return Err(CrystalError::invalid("rpt is defined on RC(infinity)"));
    }
    let n = ct.height();
    let mut lambda = lambda_nu(rc);
    let mut cur = rc.with_model(RcModel::HighestWeight(lambda.clone()))?;
    let mut out = vec![Vec::new(); n];
    for r in (1..=n).rev() {
        let cw = ct.column_weight(r);
        let columns = ct.column_counts(&lambda)?[r - 1];
        // Basic columns of height r that can be dropped without making a
        // string of nu^(r) invalid.
        let step = cw.0.iter().copied().max().unwrap_or(1);
        let nodes: Vec<usize> = (0..cw.0.len())
            .filter(|&i| cw.0[i] != 0)
            .map(|i| i + 1)
            .collect();
        let slack = nodes
            .iter()
            .flat_map(|&a| cur.part(a).iter().map(move |s| (a, s)))
            .map(|(a, s)| cur.vacancy(a, s.len) - s.rig)
            .min();
        let basic = match slack {
            Some(x) => ((x / step) as usize).min(columns),
            None => columns,
        };
        lambda -= &cw.scaled(basic as i64);
        cur = cur.with_model(RcModel::HighestWeight(lambda.clone()))?;
        for _ in basic..columns {
            let (mut next, b) = delta(&cur, r)?;
            for h in (1..r).rev() {
                next = delta(&next, h)?.0;
            }
            out[r - 1].push(b);
            cur = next;
        }
        lambda -= &cw.scaled((columns - basic) as i64);
    }
    if !cur.is_empty() {
        return Err(CrystalError::invalid(
            "rpt did not exhaust the configuration",
        ));
    }
    Ok(out)
}

/// The repeat statistic on `RC(infinity)`.
pub fn rpt(rc: &RiggedConfiguration) -> Result<usize> {
    let ct = rc.cartan_type();
    let letters = rpt_letters(rc)?;
    let mut s: i64 = 0;
    for (i, b) in letters.iter().enumerate() {
        let r = i as i32 + 1;
        let distinct: BTreeSet<Letter> = b.iter().copied().collect();
        s += distinct.len() as i64;
        let has = |x: i32| distinct.contains(&Letter(x));
        match ct.family() {
            Family::B if has(0) && has(-r) => s -= 1,
            Family::D => {
                let top = ct.rank() as i32;
                if has(-r) && !has(top) && !has(-top) {
                    s += 1;
                }
            }
            _ => {}
        }
    }
    Ok(s as usize)
}

/// `min_i (p_i^(a) - max J_i^(a))` over the lengths occurring in `nu^(a)`,
/// using the vacancy numbers of the configuration's own model; `None` when
/// `nu^(a)` is empty.
pub fn diff_raw(rc: &RiggedConfiguration, a: usize) -> Option<i64> {
    rc.part(a)
        .iter()
        .map(|s| rc.vacancy(a, s.len) - s.rig)
        .min()
}

/// The difference statistic at node `a`.
///
/// In `RC(lambda)` this is the largest `c` with the configuration still
/// valid in `RC(lambda - c Lambda_a)`: the raw difference capped by
/// `<h_a, lambda>`.  In `RC(infinity)` it is the smallest `<h_a, lambda>` for
/// which the configuration is valid in `RC(lambda)`.
pub fn diff(rc: &RiggedConfiguration, a: usize) -> i64 {
    let raw = diff_raw(rc, a);
    match rc.model() {
        RcModel::HighestWeight(lambda) => raw.map_or(lambda.at(a), |d| d.min(lambda.at(a))),
        RcModel::Infinity => raw.map_or(0, |d| (-d).max(0)),
    }
}

/// [`diff`] at every node.
pub fn diff_all(rc: &RiggedConfiguration) -> Vec<i64> {
    rc.cartan_type().nodes().map(|a| diff(rc, a)).collect()
}

/// Whether the lowering path `path` (applied in order) survives from the
/// highest weight element of `B(lambda)`, realized as `RC(lambda)`.
fn survives(ct: CartanType, lambda: &Weight, path: &[usize]) -> bool {
    if !lambda.is_dominant() {
        return false;
    }
    let Ok(hw) = RiggedConfiguration::empty(ct, RcModel::HighestWeight(lambda.clone())) else {
        return false;
    };
    let ops: Vec<(bool, usize)> = path.iter().map(|&a| (true, a)).collect();
    hw.apply_ops(&ops).is_some()
}

/// The lowering path from the highest weight element to `x`.
fn lowering_path<T: CrystalElement>(x: &T) -> (T, Vec<usize>) {
    let (hw, mut path) = x.raise();
    path.reverse();
    (hw, path)
}

/// `rem_a` on a highest weight crystal: the largest `c` such that the
/// element is nonzero under the projection to `B(lambda - c Lambda_a)`.
/// `lambda` is the highest weight of the component containing `x`.
pub fn rem_highest<T: CrystalElement>(x: &T, a: usize) -> i64 {
    let ct = x.cartan_type();
    let (hw, path) = lowering_path(x);
    let lambda = hw.weight();
    let fa = ct.fundamental(a);
    (0..=lambda.at(a))
        .rev()
        .find(|&c| survives(ct, &(&lambda - &fa.scaled(c)), &path))
        .unwrap_or(0)
}

/// `rem_a` on `B(infinity)`: `<h_a, lambda>` for the smallest `lambda` such
/// that the element is nonzero under the projection onto `B(lambda)`.
pub fn rem_infinity<T: CrystalElement>(x: &T, a: usize) -> i64 {
    let ct = x.cartan_type();
    let (_, path) = lowering_path(x);
    let big = path.len() as i64;
    let mut lambda = Weight(vec![big; ct.rank()]);
    (0..=big)
        .find(|&c| {
            lambda.0[a - 1] = c;
            survives(ct, &lambda, &path)
        })
        .expect("a weight with every coefficient at least the depth always survives")
}

/// [`rem_highest`] at every node.
pub fn rem_all_highest<T: CrystalElement>(x: &T) -> Vec<i64> {
    x.cartan_type().nodes().map(|a| rem_highest(x, a)).collect()
}

/// [`rem_infinity`] at every node.
pub fn rem_all_infinity<T: CrystalElement>(x: &T) -> Vec<i64> {
    x.cartan_type()
        .nodes()
        .map(|a| rem_infinity(x, a))
        .collect()
}

/// `rem_a` on a tableau of `T(lambda)` read as the number of basic columns
/// of height `a` that can be deleted, sliding the rest of their rows left,
/// while leaving a semistandard tableau of the same type.  Only meaningful
/// when no column has full height in types `B` and `D`.
pub fn removable_basic_columns(t: &Tableau, a: usize) -> usize {
    let ct = t.cartan_type();
    (1..)
        .take_while(|&k| {
            let mut rows: Vec<Vec<Letter>> = t.rows().to_vec();
            if rows.len() < a {
                return false;
            }
            for (i, row) in rows.iter_mut().enumerate().take(a) {
                // Letters i sit at the start of row i, so dropping k of them
                // and sliding left is the same as dropping the first k.
                let target = Letter(i as i32 + 1);
                if row.iter().take_while(|&&x| x == target).count() < k {
                    return false;
                }
                row.drain(..k);
            }
            if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
                return false;
            }
            while rows.last().is_some_and(|r| r.is_empty()) {
                rows.pop();
            }
            Tableau::from_rows(ct, rows).is_ok()
        })
        .last()
        .unwrap_or(0)
}
