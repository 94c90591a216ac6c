//! Exact scalars: ℤ[v,v⁻¹], ℚ(v), ℚ[ħ], and quantum-integer combinatorics.

mod int;
mod laurent;
mod polyh;
mod quantum;
mod rational_v;

pub use int::Int;
pub use laurent::LaurentZ;
pub use polyh::PolyH;
pub use quantum::{angle, quantum_binom, quantum_factorial, quantum_int, v_pow_minus_one};
pub use rational_v::RationalV;

use serde_json::Value;
use std::fmt::{Debug, Display};

/// Commutative ring with exact (partial) division, used as coefficient ring
/// of sparse polynomials.
pub trait Ring: Clone + Debug + Display + PartialEq + Eq + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `Some(q)` with `self = q · o`, or `None` if no such `q` exists in the ring.
    fn div_exact(&self, o: &Self) -> Option<Self>;
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Option<Self>;
    /// True for units up to the ambiguity allowed by proportionality tests
    /// (ℚ^×·v^ℤ for the trigonometric rings, ℚ^× for ℚ[ħ]).
    fn is_unit_multiple(&self) -> bool;
    /// Inverse when `self` is a unit of the ring.
    fn inverse(&self) -> Option<Self>;
    /// A greatest common divisor (zero only when both inputs are zero).
    fn gcd(&self, o: &Self) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn add_assign(&mut self, o: &Self) {
        *self = Ring::add(self, o);
    }

    fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = Ring::mul(&acc, self);
        }
        acc
    }
}
