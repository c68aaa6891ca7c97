//! Matrix realization of type `A` Chevalley groups: the oracle against which
//! the abstract constructions are checked.

pub mod bruhat;
pub mod commutator;
pub mod enumerate;
pub mod matrix;
pub mod realization;

pub use bruhat::{big_cell_factor, bruhat_decompose, invert_e_g, BruhatFactors};
pub use commutator::{commutator_constants, BivariateRing};
pub use enumerate::{enumerate_group, DEFAULT_GROUP_BUDGET};
pub use matrix::RingMatrix;
pub use realization::{Evaluator, SlnRealization};

use crate::arith::character::Character;
use crate::arith::cyclotomic::CyclotomicRing;
use crate::arith::field::FiniteField;
use crate::arith::group::PointedAbelianGroup;
use crate::arith::group_ring::{reduced_group_ring, ReducedGroupRing};
use crate::arith::monoid::{monoid_of_ring, RingSpec};
use crate::error::Result;
use crate::roots::RootSystem;

/// `e_N`, `e_G` with values in `Z[D, eps]` through `D -> Z[D, eps]`.
pub fn group_ring_evaluator(rs: &RootSystem, d: &PointedAbelianGroup) -> Result<Evaluator<ReducedGroupRing>> {
    let ring = reduced_group_ring(d);
    let units = d.elements().map(|g| ring.embed(g)).collect();
    Evaluator::new(SlnRealization::from_root_system(rs, ring)?, d, units)
}

/// Values in `Z[zeta_m]` through a character; `m` must be a multiple of the
/// exponent of `D`.
pub fn character_evaluator(rs: &RootSystem, chi: &Character, m: u64) -> Result<Evaluator<CyclotomicRing>> {
    let d = chi.group();
    if m == 0 || m % d.exponent().max(1) != 0 {
        return crate::error::invalid(format!("Z[zeta_{m}] does not contain the character values"));
    }
    let ring = CyclotomicRing::new(m);
    let units = d.elements().map(|g| chi.eval(g).to_cyclotomic(&ring)).collect();
    Evaluator::new(SlnRealization::from_root_system(rs, ring)?, d, units)
}

/// Values in `F_q`, with `D = F_q^*` pointed at `-1` (the monoid picture
/// `M = F_q`).
pub fn field_evaluator(rs: &RootSystem, field: &FiniteField) -> Result<Evaluator<FiniteField>> {
    let monoid = monoid_of_ring(&RingSpec::Field(field.clone()));
    let (d, embed) = monoid.as_finite()?.unit_group()?;
    let units = embed.iter().map(|&x| x as u32).collect();
    Evaluator::new(SlnRealization::from_root_system(rs, field.clone())?, &d, units)
}
