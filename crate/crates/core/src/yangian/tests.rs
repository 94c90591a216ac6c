use super::*;
use crate::scalars::Ring;
use crate::roots::{pbwd_keys, CartanType, Sys};
use crate::shuffle::ShuffleAlgebra;
use crate::specmaps::{b_factor, canonical_split, step_one};
use rand::{Rng, SeedableRng};

fn sys(ty: CartanType, n: usize) -> Sys {
    RootSystem::new(ty, n).unwrap()
}

fn alg(s: &Sys) -> ShuffleAlgebra<Rat> {
    ShuffleAlgebra::new(s.clone())
}

#[test]
fn leaves_and_unit() {
    let s = sys(CartanType::C, 3);
    let a = alg(&s);
    let f = a.psi(&RatExpr::gen(2, 3)).unwrap();
    assert_eq!(f.num, P::var_pow(VarId::x(2, 1), 3));
    assert_eq!(a.psi(&RatExpr::prod(vec![])).unwrap(), a.unit());
    let n = s.simple_root(3).index;
    assert_eq!(yangian_tilde(&s, n, 2).unwrap(), RatExpr::gen(3, 2));
}

#[test]
fn star_examples() {
    let s = sys(CartanType::C, 3);
    let a = alg(&s);
    let one = a.generator(1, 0);
    let two = a.star(&one, &one).unwrap();
    assert_eq!(two.num.scale(&two.den.inverse().unwrap()), P::constant(PolyH::from_i64(2)));
    let f = a.star(&a.generator(1, 0), &a.generator(2, 0)).unwrap();
    let mut want = x(1, 1).sub(&x(2, 1));
    want.add_term(crate::polyvars::Mono::one(), PolyH::from_ratio(-1, 2).mul(&PolyH::hbar()));
    assert!(f.proportional(&RatElement::new(vec![1, 1, 0], want)).is_some(), "{f}");
}

fn check_closed(s: &Sys) {
    let a = alg(s);
    for r in s.roots() {
        for sv in 0..=2 {
            let got = a.psi(&yangian_tilde(s, r.index, sv).unwrap()).unwrap();
            let want = yangian_closed_form(s, r.index, sv).unwrap();
            assert!(got.proportional(&want).is_some(), "{} s={sv}: got {got}, want {want}", s.root_name(r));
        }
    }
}

#[test]
fn closed_forms() {
    check_closed(&sys(CartanType::C, 2));
    check_closed(&sys(CartanType::C, 3));
    check_closed(&sys(CartanType::D, 4));
}

#[test]
fn relations_vanish_c2() {
    let s = sys(CartanType::C, 2);
    let a = alg(&s);
    for i in 1..=2 {
        for j in 1..=2 {
            for r in 0..=1 {
                for t in 0..=1 {
                    assert!(a.psi(&quadratic(&s, i, j, r, t)).unwrap().is_zero(), "quadratic {i} {j} {r} {t}");
                }
            }
            if i != j && s.a(i, j) != 0 {
                let m = (1 - s.a(i, j)) as usize;
                let rs: Vec<i32> = (0..m as i32).collect();
                assert!(a.psi(&serre(&s, i, j, &rs, 1)).unwrap().is_zero(), "serre {i} {j}");
            }
        }
    }
}

#[test]
fn assignment_double_fold_c2() {
    // x11 ↦ w, x12 ↦ w′, x21 ↦ w′ − ħ, then w′ ↦ w + ħ.
    let s = sys(CartanType::C, 2);
    let r = s.parse_root("[1,2,1]").unwrap();
    let d = KostantPartition::single(&s, r.index, 1);
    let f = RatElement::new(vec![2, 1], x(1, 1).mul(&x(1, 2).pow(2)).mul(&x(2, 1).pow(3)));
    let img = phi_d(&s, &f, &d).unwrap();
    let w = |t: i64| {
        let mut p = P::var(VarId::w(r.index, 1));
        p.add_term(crate::polyvars::Mono::one(), PolyH::from_i64(t).mul(&PolyH::hbar()));
        p
    };
    let want = w(0).mul(&w(1).pow(2)).mul(&w(0).pow(3));
    assert_eq!(img.poly, want);
    assert_eq!(b_factor::<Rat>(&s, r).unwrap(), P::one());
}

/// Step-one images of every two-step D root vector against both sign
/// conventions for the rational `B` factor.
#[test]
fn d_rational_b_sign() {
    let s = sys(CartanType::D, 5);
    let a = alg(&s);
    for r in s.roots() {
        if !crate::specmaps::is_two_step(&s, r) {
            continue;
        }
        let RootTag::Fold { j, .. } = r.tag else { unreachable!() };
        let f = a.psi(&yangian_tilde(&s, r.index, 1).unwrap()).unwrap();
        let d = KostantPartition::single(&s, r.index, 1);
        let one = step_one(&s, &f, &d, &canonical_split(&s, &d)).unwrap();
        let (w, wp) = (VarId::w(r.index, 1), VarId::wp(r.index, 1));
        let form = |c: i64| {
            let mut p = P::var(w).sub(&P::var(wp));
            p.add_term(crate::polyvars::Mono::one(), PolyH::from_i64(c).mul(&PolyH::hbar()));
            p
        };
        let n = s.n as i64;
        let mut plus = P::one();
        let mut minus = P::one();
        for l in j as i64..=n - 2 {
            plus = plus.mul(&form(n - l - 2)).mul(&form(n - l));
            minus = minus.mul(&form(-(n - l - 2))).mul(&form(-(n - l)));
        }
        assert!(one.exact_div(&plus).is_ok(), "{}", s.root_name(r));
        assert!(one.exact_div(&minus).is_err(), "{}", s.root_name(r));
        assert_eq!(b_factor::<Rat>(&s, r).unwrap(), plus);
    }
}

#[test]
fn leading_shapes_random() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    for s in [sys(CartanType::C, 2), sys(CartanType::C, 3), sys(CartanType::D, 4)] {
        let a = alg(&s);
        for r in s.roots() {
            for sv in 0..=2 {
                let mut parts = vec![0; r.word.len()];
                for _ in 0..sv {
                    let p = rng.gen_range(0..parts.len());
                    parts[p] += 1;
                }
                let f = a.psi(&yangian_root_vector(&s, r.index, &parts).unwrap()).unwrap();
                let shape = leading_shape(&s, r.index, sv, &f).unwrap();
                assert!(shape.ok(), "{} parts {parts:?}: {shape:?}", s.root_name(r));
            }
        }
    }
}

#[test]
fn good_and_integral_examples() {
    for s in [sys(CartanType::C, 2), sys(CartanType::D, 4)] {
        let a = alg(&s);
        for i in 1..=s.n {
            assert!(is_good(&s, &a.generator(i, 1)).unwrap().member);
            assert!(!is_integral(&s, &a.generator(i, 0)).unwrap().member);
        }
        for r in s.roots() {
            for sv in 0..=1 {
                let f = a.psi(&bar(yangian_tilde(&s, r.index, sv).unwrap())).unwrap();
                let m = is_integral(&s, &f).unwrap();
                assert!(m.member, "{}: {m:?}", s.root_name(r));
            }
        }
    }
}

#[test]
fn monomials_good_c2() {
    let s = sys(CartanType::C, 2);
    let a = alg(&s);
    for (_, keys) in pbwd_keys(&s, &[2, 1], (0, 1)) {
        for h in keys {
            let f = a.psi(&yangian_monomial(&s, &h, false).unwrap()).unwrap();
            assert!(is_good(&s, &f).unwrap().member, "{}", h.name(&s));
            let g = a.psi(&yangian_monomial(&s, &h, true).unwrap()).unwrap();
            assert!(is_integral(&s, &g).unwrap().member, "{}", h.name(&s));
        }
    }
}
