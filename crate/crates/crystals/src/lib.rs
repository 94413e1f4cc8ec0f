//! Crystal bases of finite type, realized by marginally large tableaux and by
//! rigged configurations, together with the bijection relating the two models.
//!
//! Supported Cartan families are `A_n`, `B_n`, `C_n`, `D_{n+1}` and `G_2`.
//! The rigged configuration bijection and the statistics built on it are not
//! available in type `G_2`.

pub mod bijection;
pub mod cartan;
pub mod crystal;
pub mod error;
pub mod graph;
pub mod json;
pub mod letters;
pub mod rigged;
pub mod stats;
pub mod tableaux;
pub mod tensor;

pub use cartan::{CartanType, Family, Weight};
pub use crystal::CrystalElement;
pub use error::{CrystalError, Result};
pub use letters::Letter;
pub use rigged::{RcModel, RiggedConfiguration, RiggedString};
pub use tableaux::{Mlt, Tableau};
