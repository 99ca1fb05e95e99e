//! Exhaustive verification of the local property and adversarial witness
//! finders.

mod attack;
mod extract;
mod verify;
mod witness;

pub use attack::{attack, attack_with_budget, AttackPattern};
pub use extract::{extract_from_monochromatic, plant_monochromatic};
pub use verify::{verify_local, LocalResult};
pub use witness::{clashes_for, Clash, ViolationWitness};
