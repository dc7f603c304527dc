//! Symmetric functions over ℚ(q,t): partitions, classical bases, the Hall
//! scalar product, plethysm and Ω expansions.

pub mod partition;
pub mod pleth;
pub mod series;
pub mod sf;
pub mod tables;

pub use partition::{compositions, partitions, Composition, Partition};
pub use pleth::{pleth, pleth_eval, pleth_eval_poly, pleth_scale, pleth_series, pleth_shift, VirtualAlphabet};
pub use series::{omega_series, OmegaKind};
pub use sf::SymFunc;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    M,
    E,
    H,
    P,
    S,
    Htilde,
}

impl Basis {
    pub fn letter(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::E => "e",
            Basis::H => "h",
            Basis::P => "p",
            Basis::S => "s",
            Basis::Htilde => "Ht",
        }
    }
}
