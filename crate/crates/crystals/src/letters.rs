//! Letters of the crystal of the vector representation `B(Lambda_1)`.
//!
//! A letter is stored as a signed integer: `i` for an unbarred letter, `-i`
//! for the barred letter `i-bar`, and `0` for the letter `0` of types `B` and
//! `G`.  In type `D_{n+1}` the letters `n+1` and `-(n+1)` are incomparable in
//! the alphabet order.
//!
//! Crystal edges, with `n` the tableau height of the type:
//!
//! * `A_n`: `i --i--> i+1`.
//! * `B_n`: `i --i--> i+1`, `n --n--> 0 --n--> n-bar`, `(i+1)-bar --i--> i-bar`.
//! * `C_n`: `i --i--> i+1`, `n --n--> n-bar`, `(i+1)-bar --i--> i-bar`.
//! * `D_{n+1}`: `i --i--> i+1` for `i < n`, then `n --n--> n+1`,
//!   `n --(n+1)--> (n+1)-bar`, `n+1 --(n+1)--> n-bar`,
//!   `(n+1)-bar --n--> n-bar`, and `(i+1)-bar --i--> i-bar` for `i < n`.
//! * `G_2`: `1 --1--> 2 --2--> 3 --1--> 0 --1--> 3-bar --2--> 2-bar --1--> 1-bar`.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::cartan::{CartanType, Family, Weight};
use crate::error::{CrystalError, Result};

/// A letter of the vector representation crystal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(pub i32);

impl Letter {
    /// The underlying signed value.
    pub fn value(self) -> i32 {
        self.0
    }

    /// Whether the letter is barred.
    pub fn is_barred(self) -> bool {
        self.0 < 0
    }

    /// The barred partner (`0` is its own partner).
    pub fn bar(self) -> Letter {
        Letter(-self.0)
    }

    /// Absolute value of the letter.
    pub fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Letter {
    type Err = CrystalError;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .parse::<i32>()
            .map(Letter)
            .map_err(|_| CrystalError::parse(format!("bad letter '{s}'")))
    }
}

/// The alphabet in increasing order.  In type `D_{n+1}` the incomparable pair
/// `n+1`, `(n+1)-bar` is listed in that order.
pub fn alphabet(ct: CartanType) -> Vec<Letter> {
    let n = ct.height() as i32;
    let mut out: Vec<i32> = Vec::new();
    match ct.family() {
        Family::A => out.extend(1..=n + 1),
        Family::B => {
            out.extend(1..=n);
            out.push(0);
            out.extend((1..=n).rev().map(|i| -i));
        }
        Family::C => {
            out.extend(1..=n);
            out.extend((1..=n).rev().map(|i| -i));
        }
        Family::D => {
            out.extend(1..=n + 1);
            out.extend((1..=n + 1).rev().map(|i| -i));
        }
        Family::G => out.extend([1, 2, 3, 0, -3, -2, -1]),
    }
    out.into_iter().map(Letter).collect()
}

/// Whether `x` belongs to the alphabet of `ct`.
pub fn is_letter(ct: CartanType, x: Letter) -> bool {
    position(ct, x).is_some()
}

/// Position of `x` in the alphabet order.  The two incomparable letters of
/// type `D` share a position.
pub fn position(ct: CartanType, x: Letter) -> Option<usize> {
    let n = ct.height() as i32;
    let v = x.0;
    let pos = match ct.family() {
        Family::A => (1..=n + 1).contains(&v).then(|| v as usize - 1),
        Family::B => {
            if (1..=n).contains(&v) {
                Some(v as usize - 1)
            } else if v == 0 {
                Some(n as usize)
            } else if (-n..=-1).contains(&v) {
                Some((2 * n + 1 + v) as usize)
            } else {
                None
            }
        }
        Family::C => {
            if (1..=n).contains(&v) {
                Some(v as usize - 1)
            } else if (-n..=-1).contains(&v) {
                Some((2 * n + v) as usize)
            } else {
                None
            }
        }
        Family::D => {
            if (1..=n + 1).contains(&v) {
                Some(v as usize - 1)
            } else if v == -(n + 1) {
                Some(n as usize)
            } else if (-n..=-1).contains(&v) {
                Some((2 * n + 1 + v) as usize)
            } else {
                None
            }
        }
        Family::G => [1, 2, 3, 0, -3, -2, -1].iter().position(|&y| y == v),
    };
    pos
}

/// Strict alphabet order `x < y`.  Incomparable letters compare as neither.
pub fn precedes(ct: CartanType, x: Letter, y: Letter) -> bool {
    match (position(ct, x), position(ct, y)) {
        (Some(p), Some(q)) => p < q,
        _ => false,
    }
}

/// Weak alphabet order `x <= y`: equal, or strictly smaller.
pub fn precedes_eq(ct: CartanType, x: Letter, y: Letter) -> bool {
    x == y || precedes(ct, x, y)
}

/// The crystal operator `f_a` on a single letter.
pub fn letter_f(ct: CartanType, a: usize, x: Letter) -> Option<Letter> {
    let n = ct.height() as i32;
    let a = a as i32;
    let v = x.0;
    let out = match ct.family() {
        Family::A => (v == a).then_some(a + 1),
        Family::B | Family::C => {
            if a < n {
                if v == a {
                    Some(a + 1)
                } else if v == -(a + 1) {
                    Some(-a)
                } else {
                    None
                }
            } else if ct.family() == Family::B {
                match v {
                    _ if v == n => Some(0),
                    0 => Some(-n),
                    _ => None,
                }
            } else {
                (v == n).then_some(-n)
            }
        }
        Family::D => {
            if a < n {
                if v == a {
                    Some(a + 1)
                } else if v == -(a + 1) {
                    Some(-a)
                } else {
                    None
                }
            } else if a == n {
                if v == n {
                    Some(n + 1)
                } else if v == -(n + 1) {
                    Some(-n)
                } else {
                    None
                }
            } else if v == n {
                Some(-(n + 1))
            } else if v == n + 1 {
                Some(-n)
            } else {
                None
            }
        }
        Family::G => match (a, v) {
            (1, 1) => Some(2),
            (1, 3) => Some(0),
            (1, 0) => Some(-3),
            (1, -2) => Some(-1),
            (2, 2) => Some(3),
            (2, -3) => Some(-2),
            _ => None,
        },
    };
    out.map(Letter)
}

/// The crystal operator `e_a` on a single letter.
pub fn letter_e(ct: CartanType, a: usize, x: Letter) -> Option<Letter> {
    let n = ct.height() as i32;
    let a = a as i32;
    let v = x.0;
    let out = match ct.family() {
        Family::A => (v == a + 1).then_some(a),
        Family::B | Family::C => {
            if a < n {
                if v == a + 1 {
                    Some(a)
                } else if v == -a {
                    Some(-(a + 1))
                } else {
                    None
                }
            } else if ct.family() == Family::B {
                match v {
                    0 => Some(n),
                    _ if v == -n => Some(0),
                    _ => None,
                }
            } else {
                (v == -n).then_some(n)
            }
        }
        Family::D => {
            if a < n {
                if v == a + 1 {
                    Some(a)
                } else if v == -a {
                    Some(-(a + 1))
                } else {
                    None
                }
            } else if a == n {
                if v == n + 1 {
                    Some(n)
                } else if v == -n {
                    Some(-(n + 1))
                } else {
                    None
                }
            } else if v == -(n + 1) {
                Some(n)
            } else if v == -n {
                Some(n + 1)
            } else {
                None
            }
        }
        Family::G => match (a, v) {
            (1, 2) => Some(1),
            (1, 0) => Some(3),
            (1, -3) => Some(0),
            (1, -1) => Some(-2),
            (2, 3) => Some(2),
            (2, -2) => Some(-3),
            _ => None,
        },
    };
    out.map(Letter)
}

/// Length of the `e_a` string through `x`.
pub fn letter_epsilon(ct: CartanType, a: usize, x: Letter) -> usize {
    let mut k = 0;
    let mut cur = x;
    while let Some(y) = letter_e(ct, a, cur) {
        k += 1;
        cur = y;
    }
    k
}

/// Length of the `f_a` string through `x`.
pub fn letter_phi(ct: CartanType, a: usize, x: Letter) -> usize {
    let mut k = 0;
    let mut cur = x;
    while let Some(y) = letter_f(ct, a, cur) {
        k += 1;
        cur = y;
    }
    k
}

thread_local! {
    static WEIGHTS: RefCell<HashMap<CartanType, HashMap<Letter, Weight>>> = RefCell::new(HashMap::new());
}

fn weight_table(ct: CartanType) -> HashMap<Letter, Weight> {
    // Telescoping from wt(1) = Lambda_1: wt(f_a x) = wt(x) - alpha_a.
    let mut table: HashMap<Letter, Weight> = HashMap::new();
    table.insert(Letter(1), ct.fundamental(1));
    let mut stack = vec![Letter(1)];
    while let Some(x) = stack.pop() {
        let wx = table[&x].clone();
        for a in ct.nodes() {
            if let Some(y) = letter_f(ct, a, x) {
                if let std::collections::hash_map::Entry::Vacant(e) = table.entry(y) {
                    e.insert(&wx - &ct.simple_root(a));
                    stack.push(y);
                }
            }
        }
    }
    table
}

/// Weight of a letter in the fundamental-weight basis.
pub fn letter_weight(ct: CartanType, x: Letter) -> Weight {
    WEIGHTS.with(|cell| {
        let mut map = cell.borrow_mut();
        let table = map.entry(ct).or_insert_with(|| weight_table(ct));
        table
            .get(&x)
            .cloned()
            .unwrap_or_else(|| panic!("{x} is not a letter of type {ct}"))
    })
}

/// Checks that `x` belongs to the alphabet.
pub fn check_letter(ct: CartanType, x: Letter) -> Result<()> {
    if is_letter(ct, x) {
        Ok(())
    } else {
        Err(CrystalError::invalid(format!(
            "{x} is not a letter of type {ct}"
        )))
    }
}
