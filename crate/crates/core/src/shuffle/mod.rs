//! Shuffle algebras: elements, the twisted symmetrized product, wheel
//! conditions, and the homomorphism Ψ from free expressions.

mod element;
mod expr;
mod flavor;
mod psi;
pub mod relations;

pub use element::{pole_forms, x_mono, ShuffleElement, WheelViolation};
pub use expr::FreeExpr;
pub use flavor::{Flavor, Rat, Trig};
pub use psi::ShuffleAlgebra;

use crate::roots::RootSystem;
use crate::scalars::{LaurentZ, PolyH};

/// `q` with `ζ_ij(z) = (z − q)/(z − 1)`, i.e. `q = v^{−(α_i,α_j)}`.
pub fn zeta(sys: &RootSystem, i: usize, j: usize) -> LaurentZ {
    LaurentZ::vpow(-sys.pairing(i, j))
}

/// Rational ζ̂-factor `1 + (α_i,α_j)ħ/(2z)`, returned as the coefficient of `1/z`.
pub fn hzeta(sys: &RootSystem, i: usize, j: usize) -> PolyH {
    PolyH::from_ratio(sys.pairing(i, j) as i64, 2).mul(&PolyH::hbar())
}

pub type TrigElement = ShuffleElement<Trig>;
pub type RatElement = ShuffleElement<Rat>;
pub type TrigExpr = FreeExpr<crate::scalars::RationalV>;
pub type RatExpr = FreeExpr<PolyH>;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyvars::{SparsePoly, VarId};
    use crate::roots::{CartanType, RootSystem};
    use crate::scalars::RationalV;

    type P = SparsePoly<LaurentZ>;

    fn x(c: usize, r: usize) -> P {
        P::var(VarId::x(c, r))
    }

    fn c3() -> ShuffleAlgebra<Trig> {
        ShuffleAlgebra::new(RootSystem::new(CartanType::C, 3).unwrap())
    }

    #[test]
    fn zeta_examples() {
        let s = RootSystem::new(CartanType::C, 3).unwrap();
        assert_eq!(zeta(&s, 1, 2), LaurentZ::v());
        assert_eq!(zeta(&s, 3, 3), LaurentZ::vpow(-4));
        assert_eq!(zeta(&s, 1, 3), LaurentZ::one());
        assert_eq!(hzeta(&s, 1, 2), PolyH::from_ratio(-1, 2).mul(&PolyH::hbar()));
        assert_eq!(hzeta(&s, 3, 3), PolyH::from_i64(2).mul(&PolyH::hbar()));
    }

    #[test]
    fn one_star_one() {
        let a = c3();
        let e = a.generator(1, 0);
        let p = a.star(&e, &e).unwrap();
        assert_eq!(p.num, P::constant(LaurentZ::from_terms([(0, 1), (-2, 1)])));
        assert_eq!(p.den, LaurentZ::one());
        let u = a.unit();
        assert_eq!(a.star(&u, &e).unwrap(), e);
        assert_eq!(a.star(&e, &u).unwrap(), e);
    }

    #[test]
    fn cross_color_product() {
        let a = c3();
        let p = a.star(&a.generator(1, 0), &a.generator(2, 0)).unwrap();
        assert_eq!(p.num, P::binomial(VarId::x(1, 1), LaurentZ::v(), VarId::x(2, 1)));
        let e = TrigExpr::comm(RationalV::vpow(1), TrigExpr::gen(1, 0), TrigExpr::gen(2, 0));
        let c = a.psi(&e).unwrap();
        assert_eq!(c.num, x(1, 1).scale(&LaurentZ::from_terms([(0, 1), (2, -1)])));
    }

    #[test]
    fn wheel_examples() {
        let a = c3();
        let f = TrigElement::new(vec![2, 1, 0], P::one());
        let w = f.wheel_violation(&a.sys).expect("constant violates");
        assert_eq!((w.i, w.j, w.copies.clone(), w.r), (1, 2, vec![1, 2], 1));
        assert_eq!(w.assignment, "x[1][1]=(v)*x[2][1], x[1][2]=(v^-1)*x[2][1]");
        let e = TrigExpr::prod(vec![TrigExpr::gen(1, 0), TrigExpr::gen(1, 0), TrigExpr::gen(2, 0)]);
        assert!(a.psi(&e).unwrap().wheel_check(&a.sys));
        assert!(TrigElement::new(vec![1, 1, 1], P::one()).wheel_check(&a.sys));
    }

    #[test]
    fn coset_and_full_agree() {
        let a = c3();
        let f = a.psi(&TrigExpr::prod(vec![TrigExpr::gen(1, 1), TrigExpr::gen(2, -1)])).unwrap();
        let g = a.psi(&TrigExpr::prod(vec![TrigExpr::gen(1, 0), TrigExpr::gen(3, 0)])).unwrap();
        assert_eq!(f.star(&g, &a.sys).unwrap(), f.star_full(&g, &a.sys).unwrap());
    }

    #[test]
    fn rational_products() {
        let s = RootSystem::new(CartanType::C, 3).unwrap();
        let a: ShuffleAlgebra<Rat> = ShuffleAlgebra::new(s);
        let e1 = a.generator(1, 0);
        let p = a.star(&e1, &e1).unwrap();
        assert_eq!(p.num, SparsePoly::constant(PolyH::from_i64(2)));
        let q = a.star(&e1, &a.generator(2, 0)).unwrap();
        let mut expect = SparsePoly::var(VarId::x(1, 1)).sub(&SparsePoly::var(VarId::x(2, 1)));
        expect.add_term(crate::polyvars::Mono::one(), PolyH::from_ratio(-1, 2).mul(&PolyH::hbar()));
        assert_eq!(q.num, expect);
    }

    #[test]
    fn relations_vanish_small() {
        let a = c3();
        for (i, j) in [(1, 2), (2, 3), (3, 2), (1, 1), (3, 3)] {
            let rel = relations::quadratic(&a.sys, i, j, 0, 1);
            assert!(a.psi(&rel).unwrap().is_zero(), "quadratic {i},{j}");
        }
        assert!(a.psi(&relations::serre(&a.sys, 1, 2, &[0, 1], 0)).unwrap().is_zero());
        assert!(a.psi(&relations::serre(&a.sys, 3, 2, &[0, 0], -1)).unwrap().is_zero());
        assert!(a.psi(&relations::serre(&a.sys, 2, 3, &[1, 0, -1], 0)).unwrap().is_zero());
        assert!(a.psi(&relations::serre(&a.sys, 1, 3, &[0], 0)).unwrap().is_zero());
    }
}
