use super::{Int, LaurentZ, Ring};
use serde_json::{json, Value};
use std::fmt;

/// Element of ℚ(v) as a reduced fraction of Laurent polynomials.
///
/// Canonical form: numerator and denominator share no common factor, the
/// denominator has lowest exponent 0 and a positive leading coefficient.
#[derive(Clone, Eq, Hash)]
pub struct RationalV {
    num: LaurentZ,
    den: LaurentZ,
}

impl RationalV {
    pub fn new(num: LaurentZ, den: LaurentZ) -> Self {
        assert!(!den.is_zero(), "RationalV: zero denominator");
        Self::canon(num, den)
    }

    pub fn from_laurent(num: LaurentZ) -> Self {
        Self::canon(num, LaurentZ::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_laurent(LaurentZ::from_i64(n))
    }

    pub fn vpow(e: i32) -> Self {
        Self::from_laurent(LaurentZ::vpow(e))
    }

    fn canon(num: LaurentZ, den: LaurentZ) -> Self {
        if num.is_zero() {
            return RationalV { num, den: LaurentZ::one() };
        }
        let g = num.gcd(&den);
        let mut n = num.div_exact(&g).expect("gcd divides numerator");
        let mut d = den.div_exact(&g).expect("gcd divides denominator");
        let s = d.low_exp();
        n = n.shift(-s);
        d = d.shift(-s);
        if d.leading_coeff().signum() < 0 {
            n = n.neg();
            d = d.neg();
        }
        RationalV { num: n, den: d }
    }

    /// Re-canonicalization; idempotent on canonical values.
    pub fn canonicalize(&self) -> Self {
        Self::canon(self.num.clone(), self.den.clone())
    }

    pub fn numer(&self) -> &LaurentZ {
        &self.num
    }

    pub fn denom(&self) -> &LaurentZ {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::canon(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        RationalV { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::canon(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::canon(self.den.clone(), self.num.clone()))
        }
    }

    pub fn div(&self, o: &Self) -> Option<Self> {
        o.inv().map(|i| self.mul(&i))
    }

    /// Bar involution `v ↦ v⁻¹`.
    pub fn bar(&self) -> Self {
        Self::canon(self.num.bar(), self.den.bar())
    }

    /// `Some(L)` when the value lies in ℤ[v, v⁻¹].
    pub fn as_laurent(&self) -> Option<LaurentZ> {
        self.num.div_exact(&self.den)
    }

    /// `Some((c, t))` when the value equals `c · v^t` with `c ∈ ℚ^×`.
    pub fn as_monomial(&self) -> Option<(num_rational::BigRational, i32)> {
        let (a, ea) = self.num.as_monomial()?;
        let (b, eb) = self.den.as_monomial()?;
        Some((num_rational::BigRational::new(a.to_big(), b.to_big()), ea - eb))
    }
}

impl PartialEq for RationalV {
    fn eq(&self, o: &Self) -> bool {
        self.num.mul(&o.den) == o.num.mul(&self.den)
    }
}

impl Ring for RationalV {
    fn zero() -> Self {
        RationalV { num: LaurentZ::zero(), den: LaurentZ::one() }
    }
    fn one() -> Self {
        RationalV { num: LaurentZ::one(), den: LaurentZ::one() }
    }
    fn from_i64(n: i64) -> Self {
        RationalV::from_int(n)
    }
    fn is_zero(&self) -> bool {
        RationalV::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        RationalV::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        RationalV::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        RationalV::mul(self, o)
    }
    fn neg(&self) -> Self {
        RationalV::neg(self)
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        self.div(o)
    }
    fn to_json(&self) -> Value {
        json!({"num": self.num.to_json(), "den": self.den.to_json()})
    }
    fn from_json(v: &Value) -> Option<Self> {
        let num = LaurentZ::from_json(v.get("num")?)?;
        let den = LaurentZ::from_json(v.get("den")?)?;
        if den.is_zero() {
            return None;
        }
        Some(Self::canon(num, den))
    }
    fn is_unit_multiple(&self) -> bool {
        self.as_monomial().is_some()
    }
    fn inverse(&self) -> Option<Self> {
        self.inv()
    }
    fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() && o.is_zero() {
            Self::zero()
        } else {
            Self::one()
        }
    }
}

impl fmt::Display for RationalV {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalV {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl From<LaurentZ> for RationalV {
    fn from(l: LaurentZ) -> Self {
        RationalV::from_laurent(l)
    }
}

impl From<Int> for RationalV {
    fn from(n: Int) -> Self {
        RationalV::from_laurent(LaurentZ::constant(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        // (v^2 - 1) / (2v^3 + 2v^2) = (v - 1) / (2 v^2)... after shifting: lowest exp 0
        let num = LaurentZ::from_terms([(2, 1), (0, -1)]);
        let den = LaurentZ::from_terms([(3, -2), (2, -2)]);
        let r = RationalV::new(num, den);
        assert_eq!(r.denom().low_exp(), 0);
        assert!(r.denom().leading_coeff().signum() > 0);
        assert_eq!(r.denom(), &LaurentZ::from_i64(2));
        assert_eq!(r.numer(), &LaurentZ::from_terms([(-1, -1), (-2, 1)]));
        assert_eq!(r.canonicalize().numer(), r.numer());
    }
}
