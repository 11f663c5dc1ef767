//! Exact arithmetic in `Q(t)[s]/(s^2 - (1 - 4t))` with the derivation
//! `d/dt`. The Catalan generating function lives here as `(1 - s)/(2t)`,
//! which makes its differential equations checkable without truncation.

mod element;
mod poly;
mod ratfunc;

pub use element::{one_minus_4t, AlgebraicElement};
pub use poly::Polynomial;
pub use ratfunc::RationalFunction;

/// Default bound on polynomial degrees during symbolic verification.
pub const DEFAULT_DEGREE_CAP: usize = 4096;

macro_rules! forward_owned_ops {
    ($ty:ty) => {
        impl std::ops::Add<$ty> for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                &self + &rhs
            }
        }
        impl std::ops::Sub<$ty> for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                &self - &rhs
            }
        }
        impl std::ops::Mul<$ty> for $ty {
            type Output = $ty;
            fn mul(self, rhs: $ty) -> $ty {
                &self * &rhs
            }
        }
        impl std::ops::Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                -&self
            }
        }
    };
}

pub(crate) use forward_owned_ops;
