//! The recursive pi / pi' pair construction and the group-theoretic tools it
//! recurses with: quotients, minimal normal subgroups, `O_pi`, complements
//! and lifts.

mod complement;
mod hom;
mod lift;
mod normal;
mod pair;

pub use complement::{is_complement, normal_hall_subgroups, schur_zassenhaus_complement};
pub use hom::{quotient, Epimorphism};
pub use lift::{lift_over_sylow, lift_pi_over_kernel, lift_pi_subgroup};
pub use normal::{minimal_normal_subgroups, o_pi};
pub use pair::{construct_pi_pair, sylow_generating_pair, PiPair};
