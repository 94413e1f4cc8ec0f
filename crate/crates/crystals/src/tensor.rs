//! Crystal operators on words, that is, on tensor products of letters.
//!
//! A word `x_1 x_2 ... x_k` stands for `x_1 (x) x_2 (x) ... (x) x_k`.  For two
//! factors `L (x) R`, `f_a` acts on `L` when `eps_a(L) >= phi_a(R)` and on `R`
//! otherwise, while `e_a` acts on `L` when `eps_a(L) > phi_a(R)` and on `R`
//! otherwise.  This is the mirror image of Kashiwara's original convention.
//!
//! Equivalently, each letter contributes `phi_a` plus signs followed by
//! `eps_a` minus signs; every `-` cancels against the nearest uncancelled `+`
//! to its right; `f_a` then changes the letter carrying the rightmost
//! surviving `+` and `e_a` the letter carrying the leftmost surviving `-`.

use crate::cartan::{CartanType, Weight};
use crate::letters::{letter_e, letter_epsilon, letter_f, letter_phi, letter_weight, Letter};

/// Positions of the uncancelled minus and plus signs of a word, left to right.
fn reduced_signature(ct: CartanType, a: usize, word: &[Letter]) -> (Vec<usize>, Vec<usize>) {
    let mut minus: Vec<usize> = Vec::new();
    let mut plus: Vec<usize> = Vec::new();
    for (pos, &x) in word.iter().enumerate() {
        for _ in 0..letter_phi(ct, a, x) {
            if minus.pop().is_none() {
                plus.push(pos);
            }
        }
        for _ in 0..letter_epsilon(ct, a, x) {
            minus.push(pos);
        }
    }
    (minus, plus)
}

/// `eps_a` of a word.
pub fn word_epsilon(ct: CartanType, a: usize, word: &[Letter]) -> usize {
    reduced_signature(ct, a, word).0.len()
}

/// `phi_a` of a word.
pub fn word_phi(ct: CartanType, a: usize, word: &[Letter]) -> usize {
    reduced_signature(ct, a, word).1.len()
}

/// `f_a` of a word, or `None` when it vanishes.
pub fn word_f(ct: CartanType, a: usize, word: &[Letter]) -> Option<Vec<Letter>> {
    let (_, plus) = reduced_signature(ct, a, word);
    let &pos = plus.last()?;
    let mut out = word.to_vec();
    out[pos] = letter_f(ct, a, word[pos]).expect("plus sign on a letter without f");
    Some(out)
}

/// `e_a` of a word, or `None` when it vanishes.
pub fn word_e(ct: CartanType, a: usize, word: &[Letter]) -> Option<Vec<Letter>> {
    let (minus, _) = reduced_signature(ct, a, word);
    let &pos = minus.first()?;
    let mut out = word.to_vec();
    out[pos] = letter_e(ct, a, word[pos]).expect("minus sign on a letter without e");
    Some(out)
}

/// Weight of a word: the sum of its letter weights.
pub fn word_weight(ct: CartanType, word: &[Letter]) -> Weight {
    let mut w = ct.zero_weight();
    for &x in word {
        w += &letter_weight(ct, x);
    }
    w
}

/// Raises a word to a highest weight word, returning it together with the
/// sequence of nodes used (in the order they were applied).
pub fn raise_to_highest(ct: CartanType, word: &[Letter]) -> (Vec<Letter>, Vec<usize>) {
    let mut cur = word.to_vec();
    let mut path = Vec::new();
    'outer: loop {
        for a in ct.nodes() {
            if let Some(next) = word_e(ct, a, &cur) {
                cur = next;
                path.push(a);
                continue 'outer;
            }
        }
        return (cur, path);
    }
}
