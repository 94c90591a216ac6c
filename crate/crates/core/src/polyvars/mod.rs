//! Sparse multivariate Laurent polynomials in colored variables.

mod poly;
mod var;

pub use poly::SparsePoly;
pub use var::{Mono, VarId, VarKind};

use crate::error::Result;
use crate::scalars::{LaurentZ, PolyH, Ring};
use itertools::Itertools;

/// Every tuple `(σ_1, …, σ_m)` of permutations, `σ_i` acting on `1..=k_i`;
/// each permutation is given by its image list.
pub fn color_permutations(k: &[usize]) -> Vec<Vec<Vec<usize>>> {
    if k.is_empty() {
        return vec![vec![]];
    }
    k.iter().map(|&ki| (1..=ki).permutations(ki).collect::<Vec<_>>()).multi_cartesian_product().collect()
}

/// Linear form `x_left − c·x_right` (multiplicative) or
/// `x_left − x_right − shift` (additive).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearForm {
    Trig { left: VarId, coeff: LaurentZ, right: VarId },
    Rational { left: VarId, right: VarId, shift: PolyH },
}

impl LinearForm {
    pub fn trig(left: VarId, coeff: LaurentZ, right: VarId) -> Self {
        assert_ne!(left, right, "degenerate linear form");
        LinearForm::Trig { left, coeff, right }
    }

    pub fn rational(left: VarId, right: VarId, shift: PolyH) -> Self {
        assert_ne!(left, right, "degenerate linear form");
        LinearForm::Rational { left, right, shift }
    }

    pub fn left(&self) -> VarId {
        match self {
            LinearForm::Trig { left, .. } | LinearForm::Rational { left, .. } => *left,
        }
    }
}

/// Coefficient rings that can express a [`LinearForm`].
pub trait LinearCoeff: Ring {
    /// `(x_left, r)` with the form equal to `x_left − r`.
    fn linear_parts(form: &LinearForm) -> (VarId, SparsePoly<Self>);
}

impl LinearCoeff for LaurentZ {
    fn linear_parts(form: &LinearForm) -> (VarId, SparsePoly<Self>) {
        match form {
            LinearForm::Trig { left, coeff, right } => {
                (*left, SparsePoly::term(Mono::var(*right, 1), coeff.clone()))
            }
            LinearForm::Rational { .. } => panic!("additive form over ℤ[v,v⁻¹]"),
        }
    }
}

impl LinearCoeff for PolyH {
    fn linear_parts(form: &LinearForm) -> (VarId, SparsePoly<Self>) {
        match form {
            LinearForm::Rational { left, right, shift } => {
                let mut r = SparsePoly::var(*right);
                r.add_term(Mono::one(), shift.clone());
                (*left, r)
            }
            LinearForm::Trig { .. } => panic!("multiplicative form over ℚ[ħ]"),
        }
    }
}

impl LinearForm {
    pub fn to_poly<C: LinearCoeff>(&self) -> SparsePoly<C> {
        let (a, r) = C::linear_parts(self);
        SparsePoly::var(a).sub(&r)
    }
}

/// Divides `f` by each form in turn; the error names the first failing form.
pub fn div_by_forms<C: LinearCoeff>(f: &SparsePoly<C>, forms: &[LinearForm]) -> Result<SparsePoly<C>> {
    let mut cur = f.clone();
    for form in forms {
        let (a, r) = C::linear_parts(form);
        cur = cur.div_linear(a, &r)?;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use rustc_hash::FxHashMap;

    type P = SparsePoly<LaurentZ>;

    fn x(c: usize, r: usize) -> P {
        P::var(VarId::x(c, r))
    }

    fn vp(e: i32) -> LaurentZ {
        LaurentZ::vpow(e)
    }

    #[test]
    fn symmetrize_examples() {
        let f = x(1, 1);
        assert_eq!(f.symmetrize(&[2]).unwrap(), x(1, 1).add(&x(1, 2)));
        let s = x(1, 1).mul(&x(1, 2));
        assert_eq!(s.symmetrize(&[2]).unwrap(), s.scale(&LaurentZ::from_i64(2)));
        let t = x(1, 1).mul(&x(2, 1));
        assert_eq!(t.symmetrize(&[1, 1]).unwrap(), t);
        assert!(matches!(x(1, 3).symmetrize(&[2]), Err(Error::VariableOutOfRange(_))));
    }

    #[test]
    fn exact_div_examples() {
        let a = x(1, 1).mul(&x(1, 1)).sub(&x(1, 2).mul(&x(1, 2)));
        let b = x(1, 1).sub(&x(1, 2));
        assert_eq!(a.exact_div(&b).unwrap(), x(1, 1).add(&x(1, 2)));
        assert_eq!(a.exact_div(&P::one()).unwrap(), a);
        let f = P::binomial(VarId::x(1, 1), vp(2), VarId::x(1, 2)).mul(&b);
        let g = P::binomial(VarId::x(1, 1), vp(1), VarId::x(1, 2));
        assert!(matches!(f.exact_div(&g), Err(Error::NotDivisible { .. })));
        let form = LinearForm::trig(VarId::x(1, 1), vp(1), VarId::x(1, 2));
        assert!(div_by_forms(&f, &[form]).is_err());
        let form = LinearForm::trig(VarId::x(1, 1), vp(2), VarId::x(1, 2));
        assert_eq!(div_by_forms(&f, &[form]).unwrap(), b);
    }

    #[test]
    fn laurent_division() {
        let f = x(1, 1).mul(&P::var_pow(VarId::x(1, 2), -3));
        let g = x(1, 1).sub(&x(1, 2));
        let h = f.mul(&g);
        assert_eq!(h.exact_div(&g).unwrap(), f);
        assert_eq!(h.div_linear(VarId::x(1, 1), &x(1, 2)).unwrap(), f);
    }

    #[test]
    fn substitution_examples() {
        let w = VarId::w(1, 1);
        let mut m = FxHashMap::default();
        m.insert(VarId::x(1, 1), P::var(w));
        m.insert(VarId::x(2, 1), P::var(w));
        assert_eq!(x(1, 1).mul(&x(2, 1)).substitute(&m).unwrap(), P::var_pow(w, 2));
        let mut m2 = FxHashMap::default();
        m2.insert(VarId::x(1, 1), P::var(w));
        m2.insert(VarId::x(1, 2), P::term(Mono::var(w, 1), vp(2)));
        m2.insert(VarId::x(2, 1), P::var(w));
        assert_eq!(x(1, 2).substitute(&m2).unwrap(), P::term(Mono::var(w, 1), vp(2)));
        assert!(matches!(x(3, 1).substitute(&m2), Err(Error::Unassigned(_))));
        let inv = P::var_pow(VarId::x(1, 2), -1).substitute(&m2).unwrap();
        assert_eq!(inv, P::term(Mono::var(w, -1), vp(-2)));

        type H = SparsePoly<PolyH>;
        let mut m3 = FxHashMap::default();
        let mut img = H::var(w);
        img.add_term(Mono::one(), PolyH::from_ratio(-1, 2).mul(&PolyH::hbar()));
        m3.insert(VarId::x(2, 1), img);
        let sq = H::var_pow(VarId::x(2, 1), 2).substitute(&m3).unwrap();
        let mut expect = H::var_pow(w, 2);
        expect.add_term(Mono::var(w, 1), PolyH::hbar().neg());
        expect.add_term(Mono::one(), PolyH::hbar_pow(2).mul(&PolyH::from_ratio(1, 4)));
        assert_eq!(sq, expect);
    }

    #[test]
    fn json_round_trip() {
        let f = P::binomial(VarId::x(1, 1), vp(-3), VarId::w(2, 1)).mul(&P::var_pow(VarId::wp(1, 1), -2));
        assert_eq!(P::from_json(&f.to_json()), Some(f));
    }

    #[test]
    fn permutations_count() {
        assert_eq!(color_permutations(&[2, 3]).len(), 12);
        assert_eq!(color_permutations(&[]).len(), 1);
        assert_eq!(color_permutations(&[0, 1]).len(), 1);
    }
}
