//! Cartan types, weights in the fundamental-weight basis, root data and the
//! Weyl dimension formula.
//!
//! Nodes are numbered from 1.  The entry `A[i][j]` is `<h_i, alpha_j>`, so the
//! simple root `alpha_j` written in the basis of fundamental weights is the
//! `j`-th column of the Cartan matrix.
//!
//! Orientation of the non-simply-laced families:
//!
//! * `B_n`: `A[n][n-1] = -2`, `A[n-1][n] = -1` (`alpha_n` is short).
//! * `C_n`: `A[n-1][n] = -2`, `A[n][n-1] = -1` (`alpha_n` is long).
//! * `G_2`: `A[1][2] = -3`, `A[2][1] = -1` (`alpha_1` is short).
//!
//! `D_{n+1}` has `n + 1` nodes; the spin nodes `n` and `n + 1` are both
//! attached to node `n - 1`.

use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use crate::error::{CrystalError, Result};

/// The five supported Cartan families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// A finite Cartan type, written as the family letter followed by the rank.
///
/// The rank is the number of Dynkin nodes, so `D4` is `D_{n+1}` with `n = 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    /// Builds a Cartan type, rejecting ranks the family does not admit.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(CrystalError::invalid(format!(
                "rank {rank} is not allowed for family {family}"
            )));
        }
        Ok(CartanType { family, rank })
    }

    /// The Cartan family.
    pub fn family(&self) -> Family {
        self.family
    }

    /// Number of Dynkin nodes.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Iterator over the node labels `1..=rank`.
    pub fn nodes(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.rank
    }

    /// Maximal column height of a tableau, which is also the number of rows of
    /// a marginally large tableau.  For `D_{n+1}` this is `n`.
    pub fn height(&self) -> usize {
        match self.family {
            Family::D => self.rank - 1,
            _ => self.rank,
        }
    }

    /// Whether the rigged configuration bijection is available.
    pub fn has_bijection(&self) -> bool {
        self.family != Family::G
    }

    /// Fails with [`CrystalError::Unsupported`] for `G_2`.
    pub fn require_bijection(&self, what: &str) -> Result<()> {
        if self.has_bijection() {
            Ok(())
        } else {
            Err(CrystalError::unsupported(format!(
                "{what} is not available for type {self}"
            )))
        }
    }

    /// The Cartan matrix entry `<h_i, alpha_j>` for nodes `i, j` (1-based).
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        assert!(
            (1..=self.rank).contains(&i) && (1..=self.rank).contains(&j),
            "node out of range"
        );
        if i == j {
            return 2;
        }
        let n = self.rank;
        match self.family {
            Family::A => adjacent_chain(i, j),
            Family::B => {
                if i == n && j == n - 1 {
                    -2
                } else {
                    adjacent_chain(i, j)
                }
            }
            Family::C => {
                if i == n - 1 && j == n {
                    -2
                } else {
                    adjacent_chain(i, j)
                }
            }
            Family::D => {
                let (lo, hi) = (i.min(j), i.max(j));
                if hi == n {
                    if lo == n - 2 {
                        -1
                    } else {
                        0
                    }
                } else {
                    adjacent_chain(i, j)
                }
            }
            Family::G => {
                if i == 1 {
                    -3
                } else {
                    -1
                }
            }
        }
    }

    /// The full Cartan matrix, indexed from 0.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.nodes()
            .map(|i| self.nodes().map(|j| self.entry(i, j)).collect())
            .collect()
    }

    /// The simple root `alpha_a` in the fundamental-weight basis.
    pub fn simple_root(&self, a: usize) -> Weight {
        Weight(self.nodes().map(|i| self.entry(i, a)).collect())
    }

    /// Integers `d_i` with `d_i A[i][j] = d_j A[j][i]`, so that
    /// `(alpha_i, alpha_i) = 2 d_i`.
    pub fn symmetrizer(&self) -> Vec<i64> {
        let n = self.rank;
        match self.family {
            Family::A | Family::D => vec![1; n],
            Family::B => (1..=n).map(|i| if i == n { 1 } else { 2 }).collect(),
            Family::C => (1..=n).map(|i| if i == n { 2 } else { 1 }).collect(),
            Family::G => vec![1, 3],
        }
    }

    /// The zero weight.
    pub fn zero_weight(&self) -> Weight {
        Weight(vec![0; self.rank])
    }

    /// The fundamental weight `Lambda_a`.
    pub fn fundamental(&self, a: usize) -> Weight {
        let mut w = self.zero_weight();
        w.0[a - 1] = 1;
        w
    }

    /// Weight of the basic column `1, 2, ..., h` of height `h`.
    ///
    /// This is `Lambda_h` except for the tallest column in types `B_n`
    /// (`2 Lambda_n`) and `D_{n+1}` (`Lambda_n + Lambda_{n+1}`).
    pub fn column_weight(&self, h: usize) -> Weight {
        assert!(
            (1..=self.height()).contains(&h),
            "column height out of range"
        );
        let n = self.height();
        let mut w = self.zero_weight();
        match self.family {
            Family::B if h == n => w.0[n - 1] = 2,
            Family::D if h == n => {
                w.0[n - 1] = 1;
                w.0[n] = 1;
            }
            _ => w.0[h - 1] = 1,
        }
        w
    }

    /// Number of columns of each height `1..=height()` of a tableau of
    /// highest weight `lambda`.  Fails when `lambda` is not dominant or is not
    /// a sum of column weights (odd `Lambda_n` coefficient in type `B`,
    /// unequal spin coefficients in type `D`).
    pub fn column_counts(&self, lambda: &Weight) -> Result<Vec<usize>> {
        self.check_weight(lambda)?;
        if !lambda.is_dominant() {
            return Err(CrystalError::invalid(format!(
                "weight {lambda} is not dominant"
            )));
        }
        let n = self.height();
        let mut counts: Vec<usize> = (0..n).map(|i| lambda.0[i] as usize).collect();
        match self.family {
            Family::B => {
                if lambda.0[n - 1] % 2 != 0 {
                    return Err(CrystalError::invalid(format!(
                        "weight {lambda} has an odd coefficient on the spin node and has no tableau model"
                    )));
                }
                counts[n - 1] /= 2;
            }
            Family::D if lambda.0[n - 1] != lambda.0[n] => {
                return Err(CrystalError::invalid(format!(
                    "weight {lambda} has unequal spin coefficients and has no tableau model"
                )));
            }
            _ => {}
        }
        Ok(counts)
    }

    /// Weight of a tableau shape given by its row lengths.
    pub fn shape_weight(&self, row_lengths: &[usize]) -> Weight {
        let mut w = self.zero_weight();
        for h in 1..=row_lengths.len() {
            let next = row_lengths.get(h).copied().unwrap_or(0);
            let count = row_lengths[h - 1] - next;
            w += &self.column_weight(h).scaled(count as i64);
        }
        w
    }

    /// Checks that a weight has one coordinate per node.
    pub fn check_weight(&self, lambda: &Weight) -> Result<()> {
        if lambda.0.len() != self.rank {
            return Err(CrystalError::invalid(format!(
                "weight {lambda} has {} coordinates but type {self} has rank {}",
                lambda.0.len(),
                self.rank
            )));
        }
        Ok(())
    }

    /// Positive roots written in the basis of simple roots, sorted by height.
    pub fn positive_roots(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut roots: Vec<Vec<i64>> = Vec::new();
        let mut known: HashSet<Vec<i64>> = HashSet::new();
        let mut layer: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut r = vec![0; n];
                r[i] = 1;
                r
            })
            .collect();
        while !layer.is_empty() {
            for r in &layer {
                known.insert(r.clone());
            }
            roots.extend(layer.iter().cloned());
            let mut next: Vec<Vec<i64>> = Vec::new();
            for beta in &layer {
                for i in 0..n {
                    // Length q of the alpha_i string below beta.
                    let mut q = 0;
                    let mut down = beta.clone();
                    loop {
                        down[i] -= 1;
                        if known.contains(&down) {
                            q += 1;
                        } else {
                            break;
                        }
                    }
                    let pairing: i64 = (0..n).map(|j| beta[j] * self.entry(i + 1, j + 1)).sum();
                    if q - pairing > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if !known.contains(&up) && !next.contains(&up) {
                            next.push(up);
                        }
                    }
                }
            }
            layer = next;
        }
        roots
    }

    /// Dimension of the irreducible module of highest weight `lambda`.
    pub fn weyl_dimension(&self, lambda: &Weight) -> Result<u128> {
        self.check_weight(lambda)?;
        if !lambda.is_dominant() {
            return Err(CrystalError::invalid(format!(
                "weight {lambda} is not dominant"
            )));
        }
        let d = self.symmetrizer();
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        for root in self.positive_roots() {
            let top: i64 = (0..self.rank)
                .map(|i| root[i] * d[i] * (lambda.0[i] + 1))
                .sum();
            let bottom: i64 = (0..self.rank).map(|i| root[i] * d[i]).sum();
            num *= top as u128;
            den *= bottom as u128;
            let g = gcd(num, den);
            num /= g;
            den /= g;
        }
        debug_assert_eq!(den, 1);
        Ok(num / den)
    }
}

fn adjacent_chain(i: usize, j: usize) -> i64 {
    if i.abs_diff(j) == 1 {
        -1
    } else {
        0
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = CrystalError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('G') => Family::G,
            _ => return Err(CrystalError::parse(format!("unknown Cartan type '{s}'"))),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| CrystalError::parse(format!("bad rank in Cartan type '{s}'")))?;
        CartanType::new(family, rank)
    }
}

/// A weight written in the basis of fundamental weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    /// `<h_a, self>` for a 1-based node `a`.
    pub fn at(&self, a: usize) -> i64 {
        self.0[a - 1]
    }

    /// All coordinates are non-negative.
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// Multiplies every coordinate by `k`.
    pub fn scaled(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|c| c * k).collect())
    }

    /// Sum of the coordinates.
    pub fn level(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Weight {
    type Err = CrystalError;

    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .map(|p| {
                p.trim()
                    .parse::<i64>()
                    .map_err(|_| CrystalError::parse(format!("bad weight '{s}'")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

impl AddAssign<&Weight> for Weight {
    fn add_assign(&mut self, rhs: &Weight) {
        assert_eq!(self.0.len(), rhs.0.len(), "weight rank mismatch");
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl SubAssign<&Weight> for Weight {
    fn sub_assign(&mut self, rhs: &Weight) {
        assert_eq!(self.0.len(), rhs.0.len(), "weight rank mismatch");
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
    }
}

impl Add<&Weight> for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        let mut w = self.clone();
        w += rhs;
        w
    }
}

impl Sub<&Weight> for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        let mut w = self.clone();
        w -= rhs;
        w
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scaled(-1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ct(s: &str) -> CartanType {
        s.parse().unwrap()
    }

    #[test]
    fn parses_and_prints_types() {
        for s in ["A1", "A3", "B2", "C4", "D4", "D5", "G2"] {
            assert_eq!(ct(s).to_string(), s);
        }
        assert!("D3".parse::<CartanType>().is_err());
        assert!("G3".parse::<CartanType>().is_err());
        assert!("E6".parse::<CartanType>().is_err());
        assert!("B".parse::<CartanType>().is_err());
    }

    #[test]
    fn orientation_of_non_simply_laced_types() {
        let b3 = ct("B3");
        assert_eq!(b3.entry(3, 2), -2);
        assert_eq!(b3.entry(2, 3), -1);
        let c3 = ct("C3");
        assert_eq!(c3.entry(2, 3), -2);
        assert_eq!(c3.entry(3, 2), -1);
        let g2 = ct("G2");
        assert_eq!(g2.entry(1, 2), -3);
        assert_eq!(g2.entry(2, 1), -1);
    }

    #[test]
    fn d_type_spin_nodes_hang_off_node_n_minus_one() {
        let d5 = ct("D5");
        assert_eq!(d5.height(), 4);
        assert_eq!(d5.entry(3, 4), -1);
        assert_eq!(d5.entry(3, 5), -1);
        assert_eq!(d5.entry(4, 5), 0);
        assert_eq!(d5.entry(2, 5), 0);
    }

    #[test]
    fn symmetrizer_symmetrizes() {
        for s in ["A4", "B3", "C3", "D5", "G2"] {
            let t = ct(s);
            let d = t.symmetrizer();
            for i in t.nodes() {
                for j in t.nodes() {
                    assert_eq!(d[i - 1] * t.entry(i, j), d[j - 1] * t.entry(j, i));
                }
            }
        }
    }

    #[test]
    fn number_of_positive_roots() {
        let expect = [
            ("A3", 6),
            ("A4", 10),
            ("B3", 9),
            ("C3", 9),
            ("D4", 12),
            ("D5", 20),
            ("G2", 6),
        ];
        for (s, k) in expect {
            assert_eq!(ct(s).positive_roots().len(), k, "{s}");
        }
    }

    #[test]
    fn fundamental_representation_dimensions() {
        let w = |s: &str| s.parse::<Weight>().unwrap();
        assert_eq!(ct("A3").weyl_dimension(&w("1,0,0")).unwrap(), 4);
        assert_eq!(ct("A3").weyl_dimension(&w("0,1,0")).unwrap(), 6);
        assert_eq!(ct("B3").weyl_dimension(&w("1,0,0")).unwrap(), 7);
        assert_eq!(ct("B3").weyl_dimension(&w("0,0,1")).unwrap(), 8);
        assert_eq!(ct("C3").weyl_dimension(&w("1,0,0")).unwrap(), 6);
        assert_eq!(ct("C3").weyl_dimension(&w("0,0,1")).unwrap(), 14);
        assert_eq!(ct("D4").weyl_dimension(&w("1,0,0,0")).unwrap(), 8);
        assert_eq!(ct("D4").weyl_dimension(&w("0,1,0,0")).unwrap(), 28);
        assert_eq!(ct("G2").weyl_dimension(&w("1,0")).unwrap(), 7);
        assert_eq!(ct("G2").weyl_dimension(&w("0,1")).unwrap(), 14);
        assert_eq!(ct("B2").weyl_dimension(&w("1,2")).unwrap(), 35);
    }

    #[test]
    fn column_weights_and_shapes() {
        let b3 = ct("B3");
        assert_eq!(b3.column_weight(3), Weight(vec![0, 0, 2]));
        assert_eq!(b3.shape_weight(&[3, 2, 1]), Weight(vec![1, 1, 2]));
        assert!(b3.column_counts(&Weight(vec![0, 0, 1])).is_err());
        let d4 = ct("D4");
        assert_eq!(d4.column_weight(3), Weight(vec![0, 0, 1, 1]));
        assert_eq!(
            d4.column_counts(&Weight(vec![1, 0, 2, 2])).unwrap(),
            vec![1, 0, 2]
        );
        assert!(d4.column_counts(&Weight(vec![0, 0, 1, 0])).is_err());
    }

    #[test]
    fn weight_round_trips_through_text() {
        let w: Weight = "1, -2,0".parse().unwrap();
        assert_eq!(w, Weight(vec![1, -2, 0]));
        assert_eq!(w.to_string(), "1,-2,0");
        assert!("1,x".parse::<Weight>().is_err());
    }
}
