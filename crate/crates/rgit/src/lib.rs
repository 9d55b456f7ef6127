//! Exact-arithmetic toolkit for stability questions about torus actions on
//! Grassmannians and SL(n) actions on point configurations: moment
//! polytopes, Hilbert-Mumford classification, wall-and-chamber structure of
//! the effective cone, relative semistable loci over forgetful and facet
//! maps, and polygon moduli.
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point in any computational path.

pub mod chambers;
pub mod error;
pub mod hull;
pub mod hyperplane;
pub mod json;
pub mod linalg;
pub mod lp;
pub mod moment;
pub mod partitions;
pub mod polygons;
pub mod polytope;
pub mod qvec;
pub mod rat;
pub mod relative;
pub mod render;
pub mod stability;

pub use error::{Error, Result};
pub use hyperplane::{Halfspace, Hyperplane};
pub use polytope::{Membership, Polytope};
pub use qvec::QVec;
pub use rat::Rat;
pub use stability::{StabilityClass, StabilityVerdict, WeightVector};
