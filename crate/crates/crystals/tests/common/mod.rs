//! Suites shared by the integration tests and the acceptance report.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use crystals::bijection::{delta, delta_inv, phi, psi, xi};
use crystals::crystal::{check_axioms_at, Normality};
use crystals::graph::CrystalGraph;
use crystals::stats::{diff_all, rem_all_infinity, rpt, seg};
use crystals::{
    CartanType, CrystalElement, Letter, Mlt, RcModel, RiggedConfiguration, RiggedString, Tableau,
    Weight,
};

pub fn ct(s: &str) -> CartanType {
    s.parse().unwrap()
}

pub fn letters(v: &[i32]) -> Vec<Letter> {
    v.iter().map(|&x| Letter(x)).collect()
}

/// `(length, rigging, vacancy)` of every string, node by node.
pub type Shape = Vec<Vec<(usize, i64, i64)>>;

pub fn shape(x: &RiggedConfiguration) -> Shape {
    x.nu()
        .iter()
        .enumerate()
        .map(|(i, p)| {
            p.iter()
                .map(|s| (s.len, s.rig, x.vacancy(i + 1, s.len)))
                .collect()
        })
        .collect()
}

/// A configuration of `RC(L)` given by `(length, rigging)` pairs.
pub fn config(t: &str, l: &[i64], parts: &[&[(usize, i64)]]) -> RiggedConfiguration {
    let nu = parts
        .iter()
        .map(|p| {
            p.iter()
                .map(|&(len, rig)| RiggedString::new(len, rig))
                .collect()
        })
        .collect();
    RiggedConfiguration::from_parts_unchecked(ct(t), RcModel::HighestWeight(Weight(l.to_vec())), nu)
        .unwrap()
}

/// Runs `delta` with the given column heights, returning the letters and
/// the shapes after each step.  Each step is also undone with `delta_inv`.
pub fn chain(
    start: &RiggedConfiguration,
    rows: &[usize],
) -> Result<(Vec<Letter>, Vec<Shape>), String> {
    let mut cur = start.clone();
    let mut out = Vec::new();
    let mut shapes = Vec::new();
    for &r in rows {
        let (next, b) = delta(&cur, r).map_err(|e| e.to_string())?;
        if delta_inv(&next, b, r).map_err(|e| e.to_string())? != cur {
            return Err(format!("delta_inv does not undo delta at row {r}"));
        }
        out.push(b);
        shapes.push(shape(&next));
        cur = next;
    }
    Ok((out, shapes))
}

/// Starting configuration of the type `D_5^(2)` chain (type `B_4`, five
/// single boxes).
pub fn twisted_d5_start() -> RiggedConfiguration {
    config(
        "B4",
        &[5, 0, 0, 0],
        &[
            &[(2, 0), (1, 0), (1, 0)],
            &[(2, 0), (1, 0)],
            &[(2, 1)],
            &[(2, 0)],
        ],
    )
}

/// Starting configuration of the type `A_5^(2)` chain (type `C_3`, columns
/// of heights 1, 2 and 1).
pub fn twisted_a5_start() -> RiggedConfiguration {
    config(
        "C3",
        &[2, 1, 0],
        &[&[(1, 0), (1, 0)], &[(1, 1), (1, 0)], &[(1, 0)]],
    )
}

pub fn check_twisted_d5() -> Result<(), String> {
    let start = twisted_d5_start();
    let want_start: Shape = vec![
        vec![(2, 0, 0), (1, 0, 1), (1, 0, 1)],
        vec![(2, 0, 0), (1, 0, 0)],
        vec![(2, 1, 1)],
        vec![(2, 0, 0)],
    ];
    if shape(&start) != want_start {
        return Err(format!("start vacancies {:?}", shape(&start)));
    }
    let (word, shapes) = chain(&start, &[1, 1, 1, 1, 1])?;
    if word != letters(&[-1, 1, 3, 2, 1]) {
        return Err(format!("letters {word:?}"));
    }
    let want: Vec<Shape> = vec![
        vec![vec![(1, 0, 1), (1, 0, 1)], vec![(1, 0, 0)], vec![], vec![]],
        vec![vec![(1, 0, 0), (1, 0, 0)], vec![(1, 0, 0)], vec![], vec![]],
        vec![vec![(1, 0, 0)], vec![], vec![], vec![]],
        vec![vec![], vec![], vec![], vec![]],
        vec![vec![], vec![], vec![], vec![]],
    ];
    if shapes != want {
        return Err(format!("intermediates {shapes:?}"));
    }
    Ok(())
}

pub fn check_twisted_a5() -> Result<(), String> {
    let start = twisted_a5_start();
    let want_start: Shape = vec![
        vec![(1, 0, 0), (1, 0, 0)],
        vec![(1, 1, 1), (1, 0, 1)],
        vec![(1, 0, 0)],
    ];
    if shape(&start) != want_start {
        return Err(format!("start vacancies {:?}", shape(&start)));
    }
    let (word, shapes) = chain(&start, &[1, 2, 1, 1])?;
    // 3bar (x) column(2 over 3) (x) 1, read off one letter at a time.
    if word != letters(&[-3, 3, 2, 1]) {
        return Err(format!("letters {word:?}"));
    }
    let want: Vec<Shape> = vec![
        vec![vec![(1, 0, 0)], vec![(1, 0, 0)], vec![]],
        vec![vec![(1, 0, 0)], vec![], vec![]],
        vec![vec![], vec![], vec![]],
        vec![vec![], vec![], vec![]],
    ];
    if shapes != want {
        return Err(format!("intermediates {shapes:?}"));
    }
    Ok(())
}

pub fn a4_tableau() -> Mlt {
    let rows = vec![
        letters(&[1, 1, 1, 1, 1, 1, 1, 1, 3, 3]),
        letters(&[2, 2, 2, 2, 2, 2, 5]),
        letters(&[3, 3, 4, 5, 5]),
        letters(&[4]),
    ];
    Mlt::from_rows(ct("A4"), rows).unwrap()
}

pub fn check_a4_xi_psi() -> Result<(), String> {
    let t = a4_tableau();
    let x = xi(&t).map_err(|e| e.to_string())?;
    let want: Shape = vec![
        vec![(2, 0, -1)],
        vec![(2, -2, -2), (1, -1, -2)],
        vec![(4, 1, -2)],
        vec![(3, -3, -3)],
    ];
    if *x.model() != RcModel::Infinity || shape(&x) != want {
        return Err(format!("xi gave {x}"));
    }
    if psi(&x).map_err(|e| e.to_string())? != t {
        return Err("psi(xi(T)) != T".into());
    }
    Ok(())
}

pub fn check_a3_psi() -> Result<(), String> {
    let nu = vec![
        vec![RiggedString::new(2, -1)],
        vec![RiggedString::new(3, -1), RiggedString::new(1, -1)],
        vec![RiggedString::new(3, -1)],
    ];
    let x = RiggedConfiguration::new(ct("A3"), RcModel::Infinity, nu).map_err(|e| e.to_string())?;
    let t = psi(&x).map_err(|e| e.to_string())?;
    let want = [
        letters(&[1, 1, 1, 1, 1, 1, 1, 2, 3]),
        letters(&[2, 2, 2, 3, 4, 4]),
        letters(&[3, 4]),
    ];
    if t.rows() != &want[..] {
        return Err(format!("psi gave {:?}", t.rows()));
    }
    if xi(&t).map_err(|e| e.to_string())? != x {
        return Err("xi(psi(x)) != x".into());
    }
    Ok(())
}

pub fn check_rpt_example() -> Result<(), String> {
    let t = a4_tableau();
    let x = xi(&t).map_err(|e| e.to_string())?;
    let b = crystals::stats::rpt_letters(&x).map_err(|e| e.to_string())?;
    let want = vec![
        letters(&[3, 3]),
        letters(&[5]),
        letters(&[4, 5, 5]),
        letters(&[]),
    ];
    if b != want {
        return Err(format!("b sequences {b:?}"));
    }
    let r = rpt(&x).map_err(|e| e.to_string())?;
    if r != 4 || seg(&t) != 4 {
        return Err(format!("rpt {r}, seg {}", seg(&t)));
    }
    Ok(())
}

/// All dominant weights with `1 <= |lambda| <= level`.
pub fn weights_up_to(c: CartanType, level: i64) -> Vec<Weight> {
    let k = c.rank();
    let mut out = Vec::new();
    let mut v = vec![0i64; k];
    loop {
        let total: i64 = v.iter().sum();
        if (1..=level).contains(&total) {
            out.push(Weight(v.clone()));
        }
        let mut i = 0;
        while i < k && v[i] == level {
            v[i] = 0;
            i += 1;
        }
        if i == k {
            return out;
        }
        v[i] += 1;
    }
}

fn axioms_on<T: CrystalElement + std::fmt::Debug>(
    nodes: &[T],
    normality: Normality,
    bad: &mut Vec<String>,
) {
    for x in nodes {
        if let Err(e) = check_axioms_at(x, normality) {
            bad.push(e);
        }
    }
}

/// Axiom violations in both models of `B(infinity)` up to `depth` and of
/// every `B(lambda)` with `|lambda| <= level`.  Weights without a tableau
/// model (odd spin coefficient in type `B`, unequal spin coefficients in
/// type `D`) are checked in the rigged configuration model only.
pub fn axiom_violations(t: &str, depth: usize, level: i64) -> (usize, Vec<String>) {
    let c = ct(t);
    let mut bad = Vec::new();
    let mut checked = 0;
    let m = CrystalGraph::explore(Mlt::ground(c), Some(depth)).nodes;
    axioms_on(&m, Normality::Infinity, &mut bad);
    let r = CrystalGraph::explore(
        RiggedConfiguration::empty(c, RcModel::Infinity).unwrap(),
        Some(depth),
    )
    .nodes;
    axioms_on(&r, Normality::Infinity, &mut bad);
    checked += m.len() + r.len();
    for lambda in weights_up_to(c, level) {
        if c.column_counts(&lambda).is_ok() {
            let g = CrystalGraph::explore(Tableau::highest(c, &lambda).unwrap(), None).nodes;
            axioms_on(&g, Normality::Normal, &mut bad);
            checked += g.len();
        }
        let root = RiggedConfiguration::empty(c, RcModel::HighestWeight(lambda.clone())).unwrap();
        let g = CrystalGraph::explore(root, None).nodes;
        axioms_on(&g, Normality::Normal, &mut bad);
        checked += g.len();
    }
    (checked, bad)
}

/// Failures of `Psi`/`Xi` being inverse crystal isomorphisms on balls of
/// radius `depth` in both models.
pub fn isomorphism_problems(name: &str, depth: usize) -> Vec<String> {
    let c = ct(name);
    let mut problems = Vec::new();
    let rcs = CrystalGraph::explore(
        RiggedConfiguration::empty(c, RcModel::Infinity).unwrap(),
        Some(depth),
    );
    for x in &rcs.nodes {
        let t = match psi(x) {
            Ok(t) => t,
            Err(e) => {
                problems.push(format!("{name}: psi failed on {x}: {e}"));
                continue;
            }
        };
        match xi(&t) {
            Ok(y) if &y == x => {}
            Ok(y) => problems.push(format!("{name}: xi(psi({x})) = {y}")),
            Err(e) => problems.push(format!("{name}: xi failed on {:?}: {e}", t.rows())),
        }
        for a in c.nodes() {
            let lhs = x.f(a).map(|y| psi(&y).map_err(|e| e.to_string()));
            if lhs != t.f(a).map(Ok) {
                problems.push(format!("{name}: psi f{a} != f{a} psi at {x}"));
            }
            let lhs = x.e(a).map(|y| psi(&y).map_err(|e| e.to_string()));
            if lhs != t.e(a).map(Ok) {
                problems.push(format!("{name}: psi e{a} != e{a} psi at {x}"));
            }
        }
    }
    let mlts = CrystalGraph::explore(Mlt::ground(c), Some(depth));
    for t in &mlts.nodes {
        match xi(t).and_then(|x| psi(&x)) {
            Ok(u) if &u == t => {}
            other => problems.push(format!(
                "{name}: psi(xi(T)) != T for {:?}: {other:?}",
                t.rows()
            )),
        }
    }
    if rcs.len() != mlts.len() {
        problems.push(format!(
            "{name}: ball sizes differ: {} vs {}",
            rcs.len(),
            mlts.len()
        ));
    }
    problems
}

/// Pairs `(type, lambda)` used for the cardinality and graph checks.
pub fn cardinality_pairs() -> Vec<(&'static str, Vec<i64>)> {
    vec![
        ("A2", vec![1, 1]),
        ("A3", vec![1, 0, 1]),
        ("A3", vec![0, 2, 0]),
        ("A4", vec![0, 1, 1, 0]),
        ("B2", vec![1, 2]),
        ("B2", vec![2, 0]),
        ("B3", vec![0, 1, 0]),
        ("B3", vec![1, 0, 2]),
        ("C2", vec![1, 1]),
        ("C3", vec![0, 1, 0]),
        ("C3", vec![1, 0, 1]),
        ("D4", vec![0, 1, 0, 0]),
        ("D4", vec![1, 0, 1, 1]),
        ("D5", vec![0, 0, 1, 0, 0]),
        ("G2", vec![1, 0]),
        ("G2", vec![0, 1]),
        ("G2", vec![1, 1]),
    ]
}

/// `(|T(lambda)|, |RC(lambda)|, Weyl dimension)`.
pub fn cardinalities(t: &str, lambda: &[i64]) -> (usize, usize, u128) {
    let c = ct(t);
    let w = Weight(lambda.to_vec());
    let tab = CrystalGraph::explore(Tableau::highest(c, &w).unwrap(), None).len();
    let rc = CrystalGraph::explore(
        RiggedConfiguration::empty(c, RcModel::HighestWeight(w.clone())).unwrap(),
        None,
    )
    .len();
    (tab, rc, c.weyl_dimension(&w).unwrap())
}

/// Compares the graph of `RC(lambda)`, relabelled through `Phi` and read as
/// tableaux, with the graph of `T(lambda)`.
pub fn graph_mismatch(t: &str, lambda: &[i64]) -> Option<String> {
    let c = ct(t);
    let w = Weight(lambda.to_vec());
    let rc = CrystalGraph::explore(
        RiggedConfiguration::empty(c, RcModel::HighestWeight(w.clone())).unwrap(),
        None,
    );
    let tab = CrystalGraph::explore(Tableau::highest(c, &w).unwrap(), None);
    let mut image = Vec::with_capacity(rc.len());
    for x in &rc.nodes {
        match phi(x).and_then(|cols| Tableau::from_columns(c, &cols)) {
            Ok(y) => image.push(y),
            Err(e) => return Some(format!("{t} {w}: phi failed on {x}: {e}")),
        }
    }
    let index: HashMap<&Tableau, usize> =
        tab.nodes.iter().enumerate().map(|(i, y)| (y, i)).collect();
    let mut relabel = Vec::with_capacity(image.len());
    for y in &image {
        match index.get(y) {
            Some(&i) => relabel.push(i),
            None => return Some(format!("{t} {w}: {:?} is not in T(lambda)", y.rows())),
        }
    }
    if relabel.iter().collect::<HashSet<_>>().len() != tab.len() || relabel.len() != tab.len() {
        return Some(format!("{t} {w}: relabelling is not a bijection"));
    }
    if relabel[0] != 0 {
        return Some(format!(
            "{t} {w}: highest weight elements do not correspond"
        ));
    }
    let moved: HashSet<(usize, usize, usize)> = rc
        .edges
        .iter()
        .map(|&(s, d, a)| (relabel[s], relabel[d], a))
        .collect();
    let target: HashSet<(usize, usize, usize)> = tab.edges.iter().copied().collect();
    if moved != target {
        return Some(format!("{t} {w}: edge sets differ"));
    }
    None
}

/// Failures of `rpt = seg . Psi` and `diff_a = rem_a . Psi` on a ball of
/// `RC(infinity)`.
pub fn statistic_violations(t: &str, depth: usize) -> (usize, Vec<String>) {
    let root = RiggedConfiguration::empty(ct(t), RcModel::Infinity).unwrap();
    let nodes = CrystalGraph::explore(root, Some(depth)).nodes;
    let mut bad = Vec::new();
    for x in &nodes {
        let m = match psi(x) {
            Ok(m) => m,
            Err(e) => {
                bad.push(format!("{t} {x}: psi failed: {e}"));
                continue;
            }
        };
        match rpt(x) {
            Ok(r) if r == seg(&m) => {}
            other => bad.push(format!("{t} {x}: rpt {other:?} seg {}", seg(&m))),
        }
        let (d, e) = (diff_all(x), rem_all_infinity(&m));
        if d != e {
            bad.push(format!("{t} {x}: diff {d:?} rem {e:?}"));
        }
    }
    (nodes.len(), bad)
}
