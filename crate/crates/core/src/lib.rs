//! Symmetry parameters of finite trees.
//!
//! The crate computes the distinguishing number `D`, the fixing number `F`
//! and paint costs of trees by exact recursions on canonical codes, and
//! cross-checks them against exhaustive searches on small graphs. Around
//! those sit constructors for universal trees and named extremal trees,
//! eccentric-sequence bounds, a free-tree generator and the verification
//! campaigns that sweep all trees up to a given order.

pub mod brute;
pub mod campaign;
pub mod canon;
pub mod eccentric;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod io;
pub mod params;
pub mod universal;

pub use canon::CanonicalCode;
pub use eccentric::EccentricSequence;
pub use error::{Error, Result};
pub use graph::{Coloring, Graph, RootedTree, Tree};
pub use params::{distinguishing_number, fixing_number, SpiderProfile};
