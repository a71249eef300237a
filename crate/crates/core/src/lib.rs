//! Exact Young-diagram surgery and bilinear identities on Schur functions.
//!
//! The crate is `no_std` and needs only `alloc`. It covers
//!
//! * partitions, conjugation, μ-vectors and inner corners ([`partition`]),
//! * border-strip peeling and addition, corner shifts and pushes ([`strip`]),
//! * independent Schur polynomial oracles over exact rationals ([`schur`],
//!   [`verify`]),
//! * the generic Plücker row-exchange relation and the determinant-level
//!   derivation of the main identity ([`plucker`]),
//! * the identity families themselves ([`identity`], [`families`]).
//!
//! File formats, the command line and anything else that needs `std` live in
//! the companion `schurid` crate.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod error;
pub mod families;
pub mod identity;
pub mod linalg;
pub mod partition;
pub mod plucker;
pub mod schur;
pub mod strip;
pub mod verify;

pub use error::{Error, Result, StripViolation};
pub use families::{
    barred_identity, fulmek_kleber_identity, fulmek_kleber_via_main, gps_identity,
    main_identity, rectangle_identity, square_identity, square_identity_via_nu,
};
pub use identity::{conjugate_identity, Identity, Term};
pub use partition::{InnerCorner, MuVector, Partition};
pub use plucker::{derive_main_identity, plucker_expand, plucker_selftest, ExchangeData};
pub use schur::{BasisKind, EvalPoint, MonomialMap};
pub use strip::{Axis, PushMode, ShiftDir, StripSpec};
pub use verify::{verify_identity, VerificationReport};
