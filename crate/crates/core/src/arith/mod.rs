//! Exact arithmetic: finite fields, pointed abelian groups, group rings,
//! monoids with zero and characters.

pub mod adjunction;
pub mod character;
pub mod cyclotomic;
pub mod field;
pub mod group;
pub mod group_ring;
pub mod integers;
pub mod monoid;
pub mod ring;

pub use adjunction::{adjunction_check, AdjunctionReport};
pub use character::{characters, Character, RootOfUnity};
pub use cyclotomic::{CycloElem, CyclotomicRing};
pub use field::{gf_make, FieldElem, FiniteField};
pub use group::{group_make, hom_set, GroupElem, GroupHom, PointedAbelianGroup};
pub use group_ring::{reduced_group_ring, GroupRingElement, ReducedGroupRing};
pub use integers::{IntegerRing, IntegersMod};
pub use monoid::{adjoin_zero, monoid_of_ring, FiniteMonoid, MonoidElem, MonoidSource, MonoidWithZero, RingSpec};
pub use ring::Ring;
