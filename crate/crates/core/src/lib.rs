//! Finite-group workbench for automorphisms that satisfy polynomial identities.
//!
//! Groups are enumerated in full, either as permutation groups or from a
//! Cayley table. On top of that sit the soluble radical, Fitting subgroup and
//! Fitting height, automorphisms with their fixed points and identities, the
//! explicit bound functions, the constructions used as test instances, and a
//! catalog harness that checks every bound on each instance.
//!
//! ```
//! use fitbound::automorphism::Automorphism;
//! use fitbound::constructions::{poly, stock};
//!
//! let c7 = stock("C7").unwrap();
//! let phi = Automorphism::power_map(&c7, 2).unwrap();
//! assert!(phi.satisfies_ordered(&poly(&[-2, 1])));
//! assert_eq!(phi.fixed_point_count(), 1);
//! ```

pub mod arith;
pub mod automorphism;
pub mod bounds;
pub mod constructions;
pub mod field;
pub mod frobid;
pub mod group;
pub mod harness;
pub mod poly;
pub mod structure;
