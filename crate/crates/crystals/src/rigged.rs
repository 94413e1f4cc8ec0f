//! Rigged configurations: the models `RC(infinity)` and `RC(lambda)`.
//!
//! A rigged configuration is a tuple of partitions `nu^(a)`, one per Dynkin
//! node, whose parts (strings) carry integer labels called riggings.  The
//! vacancy number of a string of length `i` in `nu^(a)` is
//!
//! ```text
//! p_i^(a) = L^(a) - sum_b A[a][b] sum_j min(i, j) m_j^(b)
//! ```
//!
//! where `m_j^(b)` counts strings of length `j` in `nu^(b)` and `L` is zero for
//! `RC(infinity)` and equals `lambda` for `RC(lambda)`.  The colabel of a
//! string is its vacancy number minus its rigging.  A string is singular when
//! its rigging equals its vacancy number.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::{CartanType, Weight};
use crate::crystal::CrystalElement;
use crate::error::{CrystalError, Result};

/// One string of a rigged partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RiggedString {
    /// Length of the string (a part of the partition).
    pub len: usize,
    /// Its rigging.
    pub rig: i64,
}

impl RiggedString {
    /// Shorthand constructor.
    pub fn new(len: usize, rig: i64) -> Self {
        RiggedString { len, rig }
    }
}

/// Which crystal a rigged configuration belongs to.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RcModel {
    /// `RC(infinity)`, with `L = 0`.
    Infinity,
    /// `RC(lambda)`, with `L = lambda`.
    HighestWeight(Weight),
}

/// `sum_j min(i, j) m_j` over the strings of one partition.
pub fn q_sum(part: &[RiggedString], i: usize) -> i64 {
    part.iter().map(|s| s.len.min(i) as i64).sum()
}

/// Vacancy number `p_i^(a)` for explicit `L` and partitions.
pub fn vacancy_number(
    ct: CartanType,
    l: &[i64],
    nu: &[Vec<RiggedString>],
    a: usize,
    i: usize,
) -> i64 {
    let mut p = l[a - 1];
    for b in ct.nodes() {
        let m = ct.entry(a, b);
        if m != 0 {
            p -= m * q_sum(&nu[b - 1], i);
        }
    }
    p
}

/// Sorts every partition by decreasing length, then decreasing rigging.
pub fn canonicalize(nu: &mut [Vec<RiggedString>]) {
    for part in nu.iter_mut() {
        part.retain(|s| s.len > 0);
        part.sort_by(|x, y| y.cmp(x));
    }
}

/// An element of `RC(infinity)` or `RC(lambda)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RiggedConfiguration {
    ct: CartanType,
    model: RcModel,
    nu: Vec<Vec<RiggedString>>,
}

impl RiggedConfiguration {
    /// The empty rigged configuration, the highest weight element.
    pub fn empty(ct: CartanType, model: RcModel) -> Result<Self> {
        if let RcModel::HighestWeight(lambda) = &model {
            ct.check_weight(lambda)?;
            if !lambda.is_dominant() {
                return Err(CrystalError::invalid(format!(
                    "weight {lambda} is not dominant"
                )));
            }
        }
        Ok(RiggedConfiguration {
            ct,
            model,
            nu: vec![Vec::new(); ct.rank()],
        })
    }

    /// Builds a rigged configuration from its partitions and validates it:
    /// lengths must be positive, the element must lie in the component of the
    /// empty configuration and, for `RC(lambda)`, every rigging must be at
    /// most its vacancy number.
    pub fn new(ct: CartanType, model: RcModel, nu: Vec<Vec<RiggedString>>) -> Result<Self> {
        let rc = Self::from_parts_unchecked(ct, model, nu)?;
        rc.check_membership()?;
        Ok(rc)
    }

    /// Builds a rigged configuration without the membership check.
    pub fn from_parts_unchecked(
        ct: CartanType,
        model: RcModel,
        mut nu: Vec<Vec<RiggedString>>,
    ) -> Result<Self> {
        if nu.len() != ct.rank() {
            return Err(CrystalError::invalid(format!(
                "type {ct} needs {} partitions, got {}",
                ct.rank(),
                nu.len()
            )));
        }
        if nu.iter().flatten().any(|s| s.len == 0) {
            return Err(CrystalError::invalid("strings must have positive length"));
        }
        let empty = Self::empty(ct, model)?;
        canonicalize(&mut nu);
        Ok(RiggedConfiguration { nu, ..empty })
    }

    fn check_membership(&self) -> Result<()> {
        if !self.is_valid() {
            return Err(CrystalError::invalid(
                "a rigging exceeds its vacancy number",
            ));
        }
        // Raise to the top, then replay the path downwards: the element lies in
        // the crystal exactly when this reproduces it.
        let (top, path) = self.raise();
        let rebuilt = if top.is_empty() {
            path.iter().rev().try_fold(top, |x, &a| x.f(a))
        } else {
            None
        };
        if rebuilt.as_ref() != Some(self) {
            return Err(CrystalError::invalid(
                "rigged configuration is not in the component of the empty configuration",
            ));
        }
        Ok(())
    }

    /// The Cartan type.
    pub fn cartan_type(&self) -> CartanType {
        self.ct
    }

    /// The model (infinity or highest weight).
    pub fn model(&self) -> &RcModel {
        &self.model
    }

    /// The partitions, one per node, each sorted by decreasing length.
    pub fn nu(&self) -> &[Vec<RiggedString>] {
        &self.nu
    }

    /// The partition `nu^(a)`.
    pub fn part(&self, a: usize) -> &[RiggedString] {
        &self.nu[a - 1]
    }

    /// Whether all partitions are empty.
    pub fn is_empty(&self) -> bool {
        self.nu.iter().all(|p| p.is_empty())
    }

    /// Number of boxes of `nu^(a)`.
    pub fn size(&self, a: usize) -> usize {
        self.nu[a - 1].iter().map(|s| s.len).sum()
    }

    /// The vector `L` entering the vacancy numbers.
    pub fn l_vector(&self) -> Vec<i64> {
        match &self.model {
            RcModel::Infinity => vec![0; self.ct.rank()],
            RcModel::HighestWeight(lambda) => lambda.0.clone(),
        }
    }

    /// Vacancy number `p_i^(a)`.
    pub fn vacancy(&self, a: usize, i: usize) -> i64 {
        vacancy_number(self.ct, &self.l_vector(), &self.nu, a, i)
    }

    /// Vacancy number with `L = 0`, regardless of the model.
    pub fn vacancy_infinity(&self, a: usize, i: usize) -> i64 {
        vacancy_number(self.ct, &vec![0; self.ct.rank()], &self.nu, a, i)
    }

    /// Every rigging is at most its vacancy number (always true in the
    /// infinity model, where no such bound is imposed).
    pub fn is_valid(&self) -> bool {
        match self.model {
            RcModel::Infinity => true,
            RcModel::HighestWeight(_) => self.is_valid_for(&self.l_vector()),
        }
    }

    /// Whether every rigging is at most the vacancy number computed with the
    /// given `L`.
    pub fn is_valid_for(&self, l: &[i64]) -> bool {
        self.ct.nodes().all(|a| {
            self.nu[a - 1]
                .iter()
                .all(|s| s.rig <= vacancy_number(self.ct, l, &self.nu, a, s.len))
        })
    }

    /// The same partitions and riggings, viewed in another model.
    pub fn with_model(&self, model: RcModel) -> Result<RiggedConfiguration> {
        let empty = Self::empty(self.ct, model)?;
        Ok(RiggedConfiguration {
            nu: self.nu.clone(),
            ..empty
        })
    }

    /// Applies a change at node `a` and restores all other colabels.
    fn modify<F>(&self, a: usize, change: F) -> RiggedConfiguration
    where
        F: FnOnce(&mut Vec<RiggedString>) -> usize,
    {
        let l = self.l_vector();
        let mut nu = self.nu.clone();
        // Remember old vacancies of every string, keyed by position.
        let old: Vec<Vec<i64>> = self
            .ct
            .nodes()
            .map(|b| {
                nu[b - 1]
                    .iter()
                    .map(|s| vacancy_number(self.ct, &l, &self.nu, b, s.len))
                    .collect()
            })
            .collect();
        let changed = change(&mut nu[a - 1]);
        let new_nu = nu.clone();
        for b in self.ct.nodes() {
            for (k, s) in nu[b - 1].iter_mut().enumerate() {
                if b == a && k == changed {
                    continue;
                }
                let p_new = vacancy_number(self.ct, &l, &new_nu, b, s.len);
                s.rig += p_new - old[b - 1][k];
            }
        }
        canonicalize(&mut nu);
        RiggedConfiguration {
            ct: self.ct,
            model: self.model.clone(),
            nu,
        }
    }

    /// Lowering operator `f_a` of the infinity model (no validity check).
    fn f_infinity(&self, a: usize) -> RiggedConfiguration {
        // The longest string whose rigging is minimal and non-positive.
        let part = &self.nu[a - 1];
        let min_rig = part.iter().map(|s| s.rig).min().unwrap_or(1);
        let target = if min_rig <= 0 {
            part.iter()
                .enumerate()
                .filter(|(_, s)| s.rig == min_rig)
                .max_by_key(|(k, s)| (s.len, std::cmp::Reverse(*k)))
                .map(|(k, _)| k)
        } else {
            None
        };
        self.modify(a, |p| match target {
            Some(k) => {
                p[k].len += 1;
                p[k].rig -= 1;
                k
            }
            None => {
                p.push(RiggedString::new(1, -1));
                p.len() - 1
            }
        })
    }

    /// Raising operator `e_a` of the infinity model.
    fn e_infinity(&self, a: usize) -> Option<RiggedConfiguration> {
        // The shortest string whose rigging is minimal and negative.
        let part = &self.nu[a - 1];
        let min_rig = part.iter().map(|s| s.rig).min()?;
        if min_rig >= 0 {
            return None;
        }
        let k = part
            .iter()
            .enumerate()
            .filter(|(_, s)| s.rig == min_rig)
            .min_by_key(|(k, s)| (s.len, *k))
            .map(|(k, _)| k)?;
        Some(self.modify(a, |p| {
            p[k].len -= 1;
            p[k].rig += 1;
            k
        }))
    }

    /// Human-readable rendering: one line per string, `vacancy[ ][ ]rigging`.
    pub fn pretty(&self) -> String {
        let mut out = String::new();
        for a in self.ct.nodes() {
            if self.nu[a - 1].is_empty() {
                out.push_str("(/)\n");
            }
            for s in &self.nu[a - 1] {
                out.push_str(&format!(
                    "{}{}{}\n",
                    self.vacancy(a, s.len),
                    "[ ]".repeat(s.len),
                    s.rig
                ));
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for RiggedConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .nu
            .iter()
            .map(|p| {
                let s: Vec<String> = p.iter().map(|s| format!("{}:{}", s.len, s.rig)).collect();
                format!("[{}]", s.join(" "))
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl CrystalElement for RiggedConfiguration {
    fn cartan_type(&self) -> CartanType {
        self.ct
    }

    fn e(&self, a: usize) -> Option<Self> {
        self.e_infinity(a)
    }

    fn f(&self, a: usize) -> Option<Self> {
        let y = self.f_infinity(a);
        y.is_valid().then_some(y)
    }

    fn epsilon(&self, a: usize) -> i64 {
        let m = self.nu[a - 1].iter().map(|s| s.rig).min().unwrap_or(0);
        -m.min(0)
    }

    fn phi(&self, a: usize) -> i64 {
        self.epsilon(a) + self.weight().at(a)
    }

    fn weight(&self) -> Weight {
        let mut w = match &self.model {
            RcModel::Infinity => self.ct.zero_weight(),
            RcModel::HighestWeight(lambda) => lambda.clone(),
        };
        for b in self.ct.nodes() {
            w -= &self.ct.simple_root(b).scaled(self.size(b) as i64);
        }
        w
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ct(s: &str) -> CartanType {
        s.parse().unwrap()
    }

    fn rc_inf(t: &str) -> RiggedConfiguration {
        RiggedConfiguration::empty(ct(t), RcModel::Infinity).unwrap()
    }

    fn strings(v: &[(usize, i64)]) -> Vec<RiggedString> {
        v.iter().map(|&(l, r)| RiggedString::new(l, r)).collect()
    }

    #[test]
    fn first_lowering_adds_a_box_with_rigging_minus_one() {
        let x = rc_inf("A2").f(1).unwrap();
        assert_eq!(x.part(1), &strings(&[(1, -1)])[..]);
        assert_eq!(x.vacancy(1, 1), -2);
        assert_eq!(x.part(2), &[][..]);
        assert_eq!(x.epsilon(1), 1);
        assert_eq!(x.e(1).unwrap(), rc_inf("A2"));
    }

    #[test]
    fn colabels_are_preserved_at_neighbouring_nodes() {
        // f_2 then f_1 in A_2: the string of nu^(2) keeps its colabel.
        let x = rc_inf("A2").f(2).unwrap();
        let (p_before, r_before) = (x.vacancy(2, 1), x.part(2)[0].rig);
        let y = x.f(1).unwrap();
        assert_eq!(y.vacancy(2, 1) - y.part(2)[0].rig, p_before - r_before);
        assert_eq!(y.part(1), &strings(&[(1, -1)])[..]);
    }

    #[test]
    fn lowering_in_highest_weight_model_respects_lambda() {
        let lambda = Weight(vec![1, 0]);
        let top = RiggedConfiguration::empty(ct("A2"), RcModel::HighestWeight(lambda)).unwrap();
        assert!(top.f(2).is_none());
        let x = top.f(1).unwrap();
        assert!(x.f(1).is_none());
        let y = x.f(2).unwrap();
        assert!(y.f(2).is_none());
        assert!(y.f(1).is_none());
        assert_eq!(top.phi(1), 1);
        assert_eq!(y.weight(), Weight(vec![0, -1]));
    }

    #[test]
    fn membership_check() {
        let ok = RiggedConfiguration::new(
            ct("A2"),
            RcModel::Infinity,
            vec![strings(&[(1, -1)]), vec![]],
        );
        assert!(ok.is_ok());
        let bad = RiggedConfiguration::new(
            ct("A2"),
            RcModel::Infinity,
            vec![strings(&[(1, 0)]), vec![]],
        );
        assert!(bad.is_err());
        let over = RiggedConfiguration::new(
            ct("A2"),
            RcModel::HighestWeight(Weight(vec![1, 0])),
            vec![strings(&[(1, 0)]), vec![]],
        );
        assert!(over.is_err());
    }

    /// `(lengths, vacancy, rigging)` per node, one string per node.
    fn single_strings(x: &RiggedConfiguration) -> Vec<(usize, i64, i64)> {
        x.nu()
            .iter()
            .enumerate()
            .map(|(k, p)| {
                assert_eq!(p.len(), 1);
                (p[0].len, x.vacancy(k + 1, p[0].len), p[0].rig)
            })
            .collect()
    }

    #[test]
    fn a5_example_and_its_neighbours() {
        let mut x = rc_inf("A5");
        for a in [3, 2, 1, 2, 5, 4, 5] {
            x = x.f(a).unwrap();
        }
        assert_eq!(
            single_strings(&x),
            vec![(1, -1, -1), (2, -2, -1), (1, 0, 1), (1, 0, -1), (2, -3, -1)]
        );
        let a5 = ct("A5");
        let mut wt = a5.zero_weight();
        for (b, c) in [(1, 1), (2, 2), (3, 1), (4, 1), (5, 2)] {
            wt -= &a5.simple_root(b).scaled(c);
        }
        assert_eq!(x.weight(), wt);
        assert_eq!(
            single_strings(&x.e(2).unwrap()),
            vec![(1, -1, -1), (1, 0, 0), (1, 0, 1), (1, 0, -1), (2, -3, -1)]
        );
        assert_eq!(
            single_strings(&x.f(2).unwrap()),
            vec![(1, -1, -1), (3, -4, -2), (1, 0, 1), (1, 0, -1), (2, -3, -1)]
        );
    }

    #[test]
    fn vacancy_numbers_by_hand_in_type_b() {
        // B_2 with nu^(1) = (1), nu^(2) = (2): A[1][2] = -1, A[2][1] = -2.
        let nu = vec![strings(&[(1, 0)]), strings(&[(2, 0)])];
        let t = ct("B2");
        assert_eq!(vacancy_number(t, &[0, 0], &nu, 1, 1), -2 + 1);
        assert_eq!(vacancy_number(t, &[0, 0], &nu, 2, 1), -2 + 2);
        assert_eq!(vacancy_number(t, &[0, 0], &nu, 2, 2), -4 + 2);
    }
}
