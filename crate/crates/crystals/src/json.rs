//! JSON forms of the crystal elements.
//!
//! * Tableau: `{"type": "A3", "rows": [["1", "1", "3"], ["2"]]}`; a
//!   marginally large tableau adds `"model": "infinity"`.
//! * Rigged configuration: `{"type": "A5", "model": "infinity" |
//!   "highest_weight", "L": [...], "nu": [[{"len": 2, "rig": -1}], ...]}`
//!   where `L` is the highest weight (all zeros for `infinity`).  Vacancy
//!   numbers are never written.
//! * Column list: an array of columns, leftmost factor first, each an array
//!   of letters from top to bottom.
//!
//! Letters are written as signed integer strings; barred letters are
//! negative.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::bijection::ColumnList;
use crate::cartan::{CartanType, Weight};
use crate::crystal::CrystalElement;
use crate::error::{CrystalError, Result};
use crate::letters::Letter;
use crate::rigged::{RcModel, RiggedConfiguration, RiggedString};
use crate::tableaux::{Mlt, Tableau};

const INFINITY: &str = "infinity";
const HIGHEST_WEIGHT: &str = "highest_weight";

#[derive(Serialize, Deserialize)]
struct TableauWire {
    #[serde(rename = "type")]
    ct: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    model: Option<String>,
    rows: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct RcWire {
    #[serde(rename = "type")]
    ct: String,
    model: String,
    #[serde(rename = "L", default)]
    l: Option<Vec<i64>>,
    nu: Vec<Vec<RiggedString>>,
}

/// An element of one of the models, as read from JSON.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Element {
    /// A tableau of `T(lambda)`.
    Tableau(Tableau),
    /// A marginally large tableau of `T(infinity)`.
    Mlt(Mlt),
    /// A rigged configuration of `RC(lambda)` or `RC(infinity)`.
    Rc(RiggedConfiguration),
}

impl Element {
    /// The Cartan type.
    pub fn cartan_type(&self) -> CartanType {
        match self {
            Element::Tableau(t) => t.cartan_type(),
            Element::Mlt(t) => t.cartan_type(),
            Element::Rc(x) => x.cartan_type(),
        }
    }

    /// Applies `(is_f, node)` operators left to right; `None` when the
    /// result vanishes.
    pub fn apply_ops(&self, ops: &[(bool, usize)]) -> Option<Element> {
        Some(match self {
            Element::Tableau(t) => Element::Tableau(t.apply_ops(ops)?),
            Element::Mlt(t) => Element::Mlt(t.apply_ops(ops)?),
            Element::Rc(x) => Element::Rc(x.apply_ops(ops)?),
        })
    }

    /// The JSON form.
    pub fn to_json(&self) -> Value {
        match self {
            Element::Tableau(t) => tableau_to_json(t),
            Element::Mlt(t) => mlt_to_json(t),
            Element::Rc(x) => rc_to_json(x),
        }
    }
}

fn letter_strings(row: &[Letter]) -> Vec<String> {
    row.iter().map(|x| x.to_string()).collect()
}

fn parse_letters(row: &[String]) -> Result<Vec<Letter>> {
    row.iter().map(|s| s.parse()).collect()
}

fn parse_rows(rows: &[Vec<String>]) -> Result<Vec<Vec<Letter>>> {
    rows.iter().map(|r| parse_letters(r)).collect()
}

/// JSON form of a tableau of `T(lambda)`.
pub fn tableau_to_json(t: &Tableau) -> Value {
    let wire = TableauWire {
        ct: t.cartan_type().to_string(),
        model: None,
        rows: t.rows().iter().map(|r| letter_strings(r)).collect(),
    };
    serde_json::to_value(wire).expect("tableau serializes")
}

/// JSON form of a marginally large tableau.
pub fn mlt_to_json(t: &Mlt) -> Value {
    let wire = TableauWire {
        ct: t.cartan_type().to_string(),
        model: Some(INFINITY.to_string()),
        rows: t.rows().iter().map(|r| letter_strings(r)).collect(),
    };
    serde_json::to_value(wire).expect("tableau serializes")
}

/// JSON form of a rigged configuration.
pub fn rc_to_json(x: &RiggedConfiguration) -> Value {
    let ct = x.cartan_type();
    let (model, l) = match x.model() {
        RcModel::Infinity => (INFINITY, ct.zero_weight().0),
        RcModel::HighestWeight(lambda) => (HIGHEST_WEIGHT, lambda.0.clone()),
    };
    let wire = RcWire {
        ct: ct.to_string(),
        model: model.to_string(),
        l: Some(l),
        nu: x.nu().to_vec(),
    };
    serde_json::to_value(wire).expect("rigged configuration serializes")
}

/// JSON form of a tensor product of columns.
pub fn columns_to_json(columns: &[Vec<Letter>]) -> Value {
    let wire: Vec<Vec<String>> = columns.iter().map(|c| letter_strings(c)).collect();
    serde_json::to_value(wire).expect("columns serialize")
}

/// Reads a column list.
pub fn columns_from_json(v: &Value) -> Result<ColumnList> {
    let wire: Vec<Vec<String>> = serde_json::from_value(v.clone())
        .map_err(|e| CrystalError::parse(format!("column list: {e}")))?;
    parse_rows(&wire)
}

fn tableau_from_wire(wire: TableauWire) -> Result<Element> {
    let ct: CartanType = wire.ct.parse()?;
    let rows = parse_rows(&wire.rows)?;
    match wire.model.as_deref() {
        None => Ok(Element::Tableau(Tableau::from_rows(ct, rows)?)),
        Some(INFINITY) => Ok(Element::Mlt(Mlt::from_rows(ct, rows)?)),
        Some(other) => Err(CrystalError::parse(format!(
            "unknown tableau model {other:?}"
        ))),
    }
}

fn rc_from_wire(wire: RcWire) -> Result<Element> {
    let ct: CartanType = wire.ct.parse()?;
    let model = match wire.model.as_str() {
        INFINITY => RcModel::Infinity,
        HIGHEST_WEIGHT => {
            let l = wire
                .l
                .ok_or_else(|| CrystalError::parse("a highest weight configuration needs \"L\""))?;
            RcModel::HighestWeight(Weight(l))
        }
        other => {
            return Err(CrystalError::parse(format!(
                "unknown configuration model {other:?}"
            )))
        }
    };
    Ok(Element::Rc(RiggedConfiguration::new(ct, model, wire.nu)?))
}

/// Reads a tableau, marginally large tableau or rigged configuration.
pub fn element_from_json(v: &Value) -> Result<Element> {
    let obj = v
        .as_object()
        .ok_or_else(|| CrystalError::parse("expected a JSON object"))?;
    if obj.contains_key("rows") {
        let wire: TableauWire = serde_json::from_value(v.clone())
            .map_err(|e| CrystalError::parse(format!("tableau: {e}")))?;
        tableau_from_wire(wire)
    } else if obj.contains_key("nu") {
        let wire: RcWire = serde_json::from_value(v.clone())
            .map_err(|e| CrystalError::parse(format!("rigged configuration: {e}")))?;
        rc_from_wire(wire)
    } else {
        Err(CrystalError::parse(
            "expected a tableau (\"rows\") or a rigged configuration (\"nu\")",
        ))
    }
}

/// Reads an element from JSON text.
pub fn element_from_str(s: &str) -> Result<Element> {
    let v: Value =
        serde_json::from_str(s).map_err(|e| CrystalError::parse(format!("invalid JSON: {e}")))?;
    element_from_json(&v)
}
