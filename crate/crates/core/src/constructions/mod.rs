mod base;
mod catalog;
mod cone;
mod stack;
mod stuck;

pub use base::{find_base_case, find_stuck_complex, stuck_residue, BaseBudget, BaseCase, BaseStats, BaseStrategy};
pub use catalog::{catalog, catalog_complex, CatalogEntry, Claim, CATALOG_NAMES};
pub use cone::{cone_labels, double_cone, double_cone_certificate, lift_matching};
pub use stack::{stacking_certificate, stacking_move};
pub use stuck::{construct_stuck, refusal, verify, Construction, Outcome, Refusal, RefusalReason};
