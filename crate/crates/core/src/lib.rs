//! Exact computations in the free Lie algebra on a symplectic space, the
//! surface Lie algebra `p = L(H)/<theta>`, its derivations, and the
//! `Sp(2g)`-modules they form.

pub mod claims;
pub mod free_lie;
pub mod johnson_calculus;
pub mod linalg;
pub mod magnus_twist;
pub mod report;
pub mod sp_rep;
pub mod surface_lie;
