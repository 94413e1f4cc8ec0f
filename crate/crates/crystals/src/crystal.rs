//! The abstract crystal interface shared by all models, plus a checker for
//! the crystal axioms.

use std::hash::Hash;

use crate::cartan::{CartanType, Weight};

/// An element of a (Kashiwara) crystal.
pub trait CrystalElement: Clone + Eq + Hash {
    /// Cartan type of the ambient crystal.
    fn cartan_type(&self) -> CartanType;
    /// Raising operator; `None` stands for the zero element.
    fn e(&self, a: usize) -> Option<Self>;
    /// Lowering operator; `None` stands for the zero element.
    fn f(&self, a: usize) -> Option<Self>;
    /// The function `eps_a`.
    fn epsilon(&self, a: usize) -> i64;
    /// The function `phi_a`.
    fn phi(&self, a: usize) -> i64;
    /// The weight.
    fn weight(&self) -> Weight;

    /// Applies a sequence of operators given as `(is_f, node)` pairs, left to
    /// right, stopping at zero.
    fn apply_ops(&self, ops: &[(bool, usize)]) -> Option<Self> {
        let mut cur = self.clone();
        for &(is_f, a) in ops {
            cur = if is_f { cur.f(a)? } else { cur.e(a)? };
        }
        Some(cur)
    }

    /// Raises to the highest weight element of the component, returning the
    /// nodes used in order of application.
    fn raise(&self) -> (Self, Vec<usize>) {
        let ct = self.cartan_type();
        let mut cur = self.clone();
        let mut path = Vec::new();
        'outer: loop {
            for a in ct.nodes() {
                if let Some(next) = cur.e(a) {
                    cur = next;
                    path.push(a);
                    continue 'outer;
                }
            }
            return (cur, path);
        }
    }
}

/// Which string-length identities hold in a model.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normality {
    /// Highest weight crystals: `eps` and `phi` both equal string lengths.
    Normal,
    /// `B(infinity)`: only `eps` is a string length; `f` never vanishes.
    Infinity,
}

/// Checks the crystal axioms at one element, returning a description of the
/// first violation found.
pub fn check_axioms_at<T: CrystalElement + std::fmt::Debug>(
    x: &T,
    normality: Normality,
) -> Result<(), String> {
    let ct = x.cartan_type();
    let wt = x.weight();
    for a in ct.nodes() {
        let (eps, phi) = (x.epsilon(a), x.phi(a));
        if phi - eps != wt.at(a) {
            return Err(format!("phi - eps != <h_{a}, wt> at {x:?}"));
        }
        let alpha = ct.simple_root(a);
        if let Some(y) = x.f(a) {
            if y.e(a).as_ref() != Some(x) {
                return Err(format!("e_{a} f_{a} x != x at {x:?}"));
            }
            if y.weight() != &wt - &alpha {
                return Err(format!("wt(f_{a} x) != wt(x) - alpha_{a} at {x:?}"));
            }
            if y.epsilon(a) != eps + 1 || y.phi(a) != phi - 1 {
                return Err(format!("eps/phi do not shift under f_{a} at {x:?}"));
            }
        } else if normality == Normality::Infinity {
            return Err(format!("f_{a} vanished in B(infinity) at {x:?}"));
        }
        if let Some(y) = x.e(a) {
            if y.f(a).as_ref() != Some(x) {
                return Err(format!("f_{a} e_{a} x != x at {x:?}"));
            }
            if y.weight() != &wt + &alpha {
                return Err(format!("wt(e_{a} x) != wt(x) + alpha_{a} at {x:?}"));
            }
        }
        // String lengths.
        let mut k = 0;
        let mut cur = x.clone();
        while let Some(y) = cur.e(a) {
            k += 1;
            cur = y;
        }
        if k != eps {
            return Err(format!("eps_{a} is not the e-string length at {x:?}"));
        }
        if normality == Normality::Normal {
            let mut k = 0;
            let mut cur = x.clone();
            while let Some(y) = cur.f(a) {
                k += 1;
                cur = y;
            }
            if k != phi {
                return Err(format!("phi_{a} is not the f-string length at {x:?}"));
            }
        }
    }
    Ok(())
}
