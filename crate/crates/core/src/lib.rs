pub mod braid;
pub mod error;
pub mod families;
pub mod garside;
pub mod invariants;
pub mod laurent;
pub mod perm;
pub mod report;
pub mod satellite;
