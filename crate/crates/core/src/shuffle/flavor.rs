use crate::polyvars::{LinearCoeff, LinearForm, Mono, SparsePoly, VarId};
use crate::roots::RootSystem;
use crate::scalars::{Int, LaurentZ, PolyH, RationalV, Ring};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt::Debug;
use std::hash::Hash;

/// Distinguishes the trigonometric (ℚ(v), multiplicative) and rational
/// (ℚ[ħ], additive) shuffle algebras.
pub trait Flavor: Copy + Clone + Debug + Send + Sync + 'static {
    /// Numerator coefficients.
    type C: LinearCoeff + Hash;
    /// Scalars appearing in expressions.
    type S: Ring + Hash;
    const NAME: &'static str;
    /// Leaf name in the expression language.
    const LEAF: &'static str;

    /// Numerator of the twisting factor between `x_a` (color `ca`) and
    /// `x_b` (color `cb`).
    fn cross(sys: &RootSystem, ca: usize, cb: usize, xa: VarId, xb: VarId) -> LinearForm;
    /// `x_a − x_b`.
    fn diff(xa: VarId, xb: VarId) -> LinearForm;
    /// Image of the `p`-th copy (1-based) in the wheel pattern for `(i, j)`.
    fn wheel_image(sys: &RootSystem, i: usize, j: usize, p: usize, xj: VarId) -> SparsePoly<Self::C>;
    /// Scalar as `(numerator, denominator)` over `C`.
    fn split(s: &Self::S) -> (Self::C, Self::C);
    fn embed(c: &Self::C) -> Self::S;
    /// `Some((p, q))` with `a/b = p/q` when `a/b` is a unit multiple
    /// (ℚ^×·v^ℤ or ℚ^×).
    fn unit_ratio(a: &Self::C, b: &Self::C) -> Option<(Self::C, Self::C)>;
    /// `v^t·x` (trigonometric) or `x + tħ/2` (rational).
    fn shifted(x: VarId, t: i32) -> SparsePoly<Self::C>;
    /// `a − v^t·b` or `a − b − tħ/2`, the form vanishing at `a = shifted(b, t)`.
    fn shift_form(a: VarId, t: i32, b: VarId) -> LinearForm;
    /// Integer-scalar multiple for averaging normalizations.
    fn from_int(n: i64) -> Self::C {
        Self::C::from_i64(n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Trig;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rat;

impl Flavor for Trig {
    type C = LaurentZ;
    type S = RationalV;
    const NAME: &'static str = "trigonometric";
    const LEAF: &'static str = "e";

    fn cross(sys: &RootSystem, ca: usize, cb: usize, xa: VarId, xb: VarId) -> LinearForm {
        LinearForm::trig(xa, LaurentZ::vpow(-sys.pairing(ca, cb)), xb)
    }

    fn diff(xa: VarId, xb: VarId) -> LinearForm {
        LinearForm::trig(xa, LaurentZ::one(), xb)
    }

    fn wheel_image(sys: &RootSystem, i: usize, j: usize, p: usize, xj: VarId) -> SparsePoly<LaurentZ> {
        let e = sys.d(i) * (-sys.a(i, j) - 2 * (p as i32 - 1));
        SparsePoly::term(Mono::var(xj, 1), LaurentZ::vpow(e))
    }

    fn shifted(x: VarId, t: i32) -> SparsePoly<LaurentZ> {
        SparsePoly::term(Mono::var(x, 1), LaurentZ::vpow(t))
    }

    fn shift_form(a: VarId, t: i32, b: VarId) -> LinearForm {
        LinearForm::trig(a, LaurentZ::vpow(t), b)
    }

    fn split(s: &RationalV) -> (LaurentZ, LaurentZ) {
        (s.numer().clone(), s.denom().clone())
    }

    fn embed(c: &LaurentZ) -> RationalV {
        RationalV::from_laurent(c.clone())
    }

    fn unit_ratio(a: &LaurentZ, b: &LaurentZ) -> Option<(LaurentZ, LaurentZ)> {
        if a.is_zero() || b.is_zero() {
            return None;
        }
        let (q, t) = RationalV::new(a.clone(), b.clone()).as_monomial()?;
        Some((
            LaurentZ::monomial(Int::from(q.numer().clone()), t),
            LaurentZ::constant(Int::from(q.denom().clone())),
        ))
    }
}

impl Flavor for Rat {
    type C = PolyH;
    type S = PolyH;
    const NAME: &'static str = "rational";
    const LEAF: &'static str = "y";

    fn cross(sys: &RootSystem, ca: usize, cb: usize, xa: VarId, xb: VarId) -> LinearForm {
        // x_a − x_b + (α_a, α_b)ħ/2
        let p = sys.pairing(ca, cb) as i64;
        LinearForm::rational(xa, xb, PolyH::from_ratio(-p, 2).mul(&PolyH::hbar()))
    }

    fn diff(xa: VarId, xb: VarId) -> LinearForm {
        LinearForm::rational(xa, xb, PolyH::zero())
    }

    fn wheel_image(sys: &RootSystem, i: usize, j: usize, p: usize, xj: VarId) -> SparsePoly<PolyH> {
        // x_j − (d_i a_ij / 2 + (p − 1) d_i) ħ
        let di = sys.d(i) as i64;
        let num = di * sys.a(i, j) as i64 + 2 * (p as i64 - 1) * di;
        let mut r = SparsePoly::var(xj);
        r.add_term(Mono::one(), PolyH::from_ratio(-num, 2).mul(&PolyH::hbar()));
        r
    }

    fn shifted(x: VarId, t: i32) -> SparsePoly<PolyH> {
        let mut r = SparsePoly::var(x);
        r.add_term(Mono::one(), PolyH::from_ratio(t as i64, 2).mul(&PolyH::hbar()));
        r
    }

    fn shift_form(a: VarId, t: i32, b: VarId) -> LinearForm {
        LinearForm::rational(a, b, PolyH::from_ratio(t as i64, 2).mul(&PolyH::hbar()))
    }

    fn split(s: &PolyH) -> (PolyH, PolyH) {
        (s.clone(), PolyH::one())
    }

    fn embed(c: &PolyH) -> PolyH {
        c.clone()
    }

    fn unit_ratio(a: &PolyH, b: &PolyH) -> Option<(PolyH, PolyH)> {
        if a.is_zero() || b.is_zero() {
            return None;
        }
        let la = a.coeffs().last()?;
        let lb = b.coeffs().last()?;
        let q: BigRational = la / lb;
        if q.is_zero() {
            return None;
        }
        (b.scale(&q) == *a).then(|| (PolyH::constant(q), PolyH::constant(BigRational::one())))
    }
}
