//! The modified Macdonald basis H̃ and the operators built on it.

pub mod creation;
pub mod hook;
pub mod htilde;
pub mod identities;
pub mod ops;
pub mod pieri;

pub use creation::{bc_relation_sides, c_alpha, creation_b, creation_c, dual_b, dual_c};
pub use hook::{hook_data, m_poly, HookData};
pub use htilde::{htilde, htilde_table, HtildeTable};
pub use ops::{apply_diagonal, delta, delta_h, delta_h_nabla, from_htilde, nabla, star_inner, to_htilde};
pub use pieri::{gen_pieri, pieri, pieri_sums, Direction, PieriData, PieriSum};
