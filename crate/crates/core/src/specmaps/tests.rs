use super::*;
use crate::polyvars::{Mono, VarId};
use crate::roots::{pbwd_keys, CartanType, PbwdKey, RootSystem, Sys};
use crate::rootvec::{root_vector, rtt_root_vector, RootVectorSpec, Sign};
use crate::scalars::{angle, quantum_int, LaurentZ};
use crate::shuffle::{Rat, ShuffleAlgebra, Trig, TrigElement, TrigExpr};
use rand::{Rng, SeedableRng};

type P = SparsePoly<LaurentZ>;

fn sys(ty: CartanType, n: usize) -> Sys {
    RootSystem::new(ty, n).unwrap()
}

fn root<'a>(s: &'a RootSystem, label: &str) -> &'a PositiveRoot {
    s.parse_root(label).unwrap()
}

fn w(b: usize, s: usize) -> P {
    P::var(VarId::w(b, s))
}

fn wp(b: usize, s: usize) -> P {
    P::var(VarId::wp(b, s))
}

fn vp(e: i32) -> LaurentZ {
    LaurentZ::vpow(e)
}

#[test]
fn assignment_c3_fold() {
    let s = sys(CartanType::C, 3);
    let r = root(&s, "[1,3,2]");
    let d = KostantPartition::single(&s, r.index, 1);
    let map = assignment::<Trig>(&s, &d, &canonical_split(&s, &d)).unwrap();
    let b = r.index;
    assert_eq!(map[&VarId::x(1, 1)], w(b, 1));
    assert_eq!(map[&VarId::x(2, 1)], w(b, 1).scale(&vp(-1)));
    assert_eq!(map[&VarId::x(2, 2)], w(b, 1).scale(&vp(-5)));
    assert_eq!(map[&VarId::x(3, 1)], w(b, 1).scale(&vp(-3)));
}

#[test]
fn b_factor_examples() {
    let c2 = sys(CartanType::C, 2);
    let r = root(&c2, "[1,2,1]");
    assert_eq!(b_factor::<Trig>(&c2, r).unwrap(), P::one());
    let d4 = sys(CartanType::D, 4);
    let r = root(&d4, "[1,4,2]");
    let i = r.index;
    let want = w(i, 1).sub(&wp(i, 1)).mul(&w(i, 1).sub(&wp(i, 1).scale(&vp(-4))));
    assert_eq!(b_factor::<Trig>(&d4, r).unwrap(), want);
    let c3 = sys(CartanType::C, 3);
    let r = root(&c3, "[1,3,1]");
    let i = r.index;
    let want = w(i, 1).sub(&wp(i, 1).scale(&vp(-2))).mul(&w(i, 1).sub(&wp(i, 1).scale(&vp(2))));
    assert_eq!(b_factor::<Trig>(&c3, r).unwrap(), want);
    assert!(matches!(b_factor::<Trig>(&c3, root(&c3, "[1,2]")), Err(Error::NotTwoStep(_))));
}

#[test]
fn table_examples() {
    let c3 = sys(CartanType::C, 3);
    assert_eq!(kappa(&c3, root(&c3, "[1,3,2]")), 4);
    let c2 = sys(CartanType::C, 2);
    assert_eq!(c_beta(&c2, root(&c2, "[1,2]")), angle(2));
    for s in [&c2, &c3] {
        for r in s.roots() {
            if let RootTag::DoubleFold { .. } = r.tag {
                assert_eq!(c_tilde(s, r).mul(&quantum_int(2, 1)), c_beta(s, r));
            } else {
                assert_eq!(c_tilde(s, r), c_beta(s, r));
            }
        }
    }
    let d4 = sys(CartanType::D, 4);
    for r in d4.roots() {
        assert_eq!(kappa(&d4, r), r.height() as i32 - 1);
        assert_eq!(c_beta(&d4, r), angle(1).pow(r.height() as u32 - 1));
        assert_eq!(c_tilde(&d4, r), c_beta(&d4, r));
    }
}

#[test]
fn g_examples() {
    let c3 = sys(CartanType::C, 3);
    for r in c3.roots() {
        let k = kappa(&c3, r);
        assert_eq!(g_poly(&c3, r, 1), P::term(Mono::var(VarId::w(r.index, 1), k), LaurentZ::one()));
    }
    let r = root(&c3, "[1,3]");
    let i = r.index;
    let f = |a: usize, b: usize| {
        w(i, a).sub(&w(i, b).scale(&vp(2))).pow(1).mul(&w(i, a).sub(&w(i, b).scale(&vp(4))))
    };
    let mono = P::term(Mono::from_pairs([(VarId::w(i, 1), 2), (VarId::w(i, 2), 2)]), LaurentZ::one());
    assert_eq!(g_poly(&c3, r, 2), mono.mul(&f(1, 2)).mul(&f(2, 1)));
    let d4 = sys(CartanType::D, 4);
    let r = root(&d4, "[1,3]");
    let i = r.index;
    let e = 2;
    let mono = P::term(Mono::from_pairs([(VarId::w(i, 1), e), (VarId::w(i, 2), e)]), LaurentZ::one());
    let want = mono
        .mul(&w(i, 1).sub(&w(i, 2).scale(&vp(2))).pow(2))
        .mul(&w(i, 2).sub(&w(i, 1).scale(&vp(2))).pow(2));
    assert_eq!(g_poly(&d4, r, 2), want);
}

#[test]
fn a_d_double_fold() {
    let c2 = sys(CartanType::C, 2);
    let d = KostantPartition::single(&c2, root(&c2, "[1,2,1]").index, 1);
    assert_eq!(a_d(&c2, &d), quantum_int(2, 1));
    let d4 = sys(CartanType::D, 4);
    let d = KostantPartition::single(&d4, root(&d4, "[1,4,2]").index, 2);
    assert_eq!(a_d(&d4, &d), LaurentZ::one());
}

#[test]
fn p_lambda_examples_and_rank_one_oracle() {
    let c2 = sys(CartanType::C, 2);
    let r1 = root(&c2, "[1]");
    let h = PbwdKey::new(vec![(r1.index, 5, 1)]);
    assert_eq!(p_lambda(&h, r1).unwrap(), P::term(Mono::var(VarId::w(r1.index, 1), 5), LaurentZ::one()));
    let h = PbwdKey::new(vec![(r1.index, 0, 2)]);
    assert_eq!(p_lambda(&h, r1).unwrap(), P::constant(LaurentZ::from_terms([(0, 1), (-2, 1)])));
    let c3 = sys(CartanType::C, 3);
    for (sy, label) in [(&c2, "[1]"), (&c2, "[2]"), (&c3, "[1,3,1]"), (&c3, "[2,3]")] {
        let r = root(sy, label);
        for modes in [vec![0, 1], vec![-1, 2], vec![0, 0, 1], vec![1, 1, 1], vec![-1, 0, 2]] {
            let h = PbwdKey::new(modes.iter().map(|&m| (r.index, m, 1)).collect());
            let got = p_lambda(&h, r).unwrap();
            let want = p_lambda_rank_one(&h.modes_on(r.index), r.v_exp(), r.index).unwrap();
            assert_eq!(got, want, "{label} {modes:?}");
        }
    }
}

#[test]
fn phi_double_fold_c2() {
    let s = sys(CartanType::C, 2);
    let alg: ShuffleAlgebra<Trig> = ShuffleAlgebra::new(s.clone());
    let r = root(&s, "[1,2,1]");
    let spec = RootVectorSpec::tilde_canonical(&s, r.index, 0, Sign::Plus).unwrap();
    let f = alg.psi(&root_vector(&s, &spec).unwrap()).unwrap();
    let d = KostantPartition::single(&s, r.index, 1);
    let img = phi_d(&s, &f, &d).unwrap();
    let want = SpecImage::<Trig> {
        poly: P::term(Mono::var(VarId::w(r.index, 1), 2), c_beta(&s, r)),
        den: LaurentZ::one(),
    };
    assert_eq!(c_beta(&s, r), angle(2).pow(2));
    assert!(img.proportional(&want), "{img}");
}

#[test]
fn phi_outside_kp_is_zero() {
    let s = sys(CartanType::C, 2);
    let f = TrigElement::generator(2, 1, 0);
    let d = KostantPartition::single(&s, root(&s, "[2]").index, 1);
    assert!(phi_d(&s, &f, &d).unwrap().is_zero());
}

/// Leading terms of random generic root vectors.
fn check_leading_random(s: &Sys, trials: usize, seed: u64) {
    let alg: ShuffleAlgebra<Trig> = ShuffleAlgebra::new(s.clone());
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    for r in s.roots() {
        let d = KostantPartition::single(s, r.index, 1);
        for _ in 0..trials {
            let sv = rng.gen_range(-1..=2);
            let spec = RootVectorSpec::random(s, r.index, sv, 1, &mut rng).unwrap();
            let f = alg.psi(&root_vector(s, &spec).unwrap()).unwrap();
            let img = phi_d(s, &f, &d).unwrap();
            let want = SpecImage::<Trig> {
                poly: P::term(Mono::var(VarId::w(r.index, 1), sv + kappa(s, r)), c_beta(s, r)),
                den: LaurentZ::one(),
            };
            assert!(img.proportional(&want), "{}: got {img}", spec.describe(s));
        }
    }
}

#[test]
fn leading_terms_small() {
    check_leading_random(&sys(CartanType::C, 2), 3, 1);
    check_leading_random(&sys(CartanType::C, 3), 2, 2);
    check_leading_random(&sys(CartanType::D, 4), 2, 3);
}

#[test]
fn split_independence_and_symmetry() {
    let s = sys(CartanType::C, 2);
    let ev = MonomialEvaluator::tilde(s.clone(), Sign::Plus);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
    use rand::seq::SliceRandom;
    for (d, keys) in pbwd_keys(&s, &[2, 2], (-1, 1)) {
        for h in keys.iter().take(4) {
            let f = ev.eval(h).unwrap();
            let base = phi_d(&s, &f, &d).unwrap();
            for (ri, m) in d.support() {
                let ks = vec![m as usize];
                let block: P = base.poly.map_vars(|v| if v.a() == ri { VarId::x(1, v.b()) } else { v });
                let only = block.vars().into_iter().all(|v| v.kind() == crate::polyvars::VarKind::X);
                if only {
                    assert!(block.is_symmetric(&ks));
                }
            }
            let mut order = canonical_split(&s, &d);
            for o in &mut order {
                o.shuffle(&mut rng);
            }
            let other = phi_d_split(&s, &f, &d, &order).unwrap();
            assert_eq!(base, other, "{}", h.name(&s));
        }
    }
}

#[test]
fn vertical_examples() {
    let c2 = sys(CartanType::C, 2);
    let r = root(&c2, "[2]");
    let i = r.index;
    let d = KostantPartition::single(&c2, i, 2);
    let g = w(i, 1).mul(&w(i, 2).pow(2));
    let z = |p: usize| P::var(VarId::z(i, p));
    let got = vertical_specialize(&c2, &g, &d, &vec![(i, vec![1, 1])]).unwrap();
    assert_eq!(got, z(1).scale(&vp(-4)).mul(&z(2).pow(2).scale(&vp(-8))));
    let got = vertical_specialize(&c2, &g, &d, &vec![(i, vec![2])]).unwrap();
    assert_eq!(got, z(1).pow(3).scale(&vp(-4 - 16)));
    let e = KostantPartition::zero(&c2);
    assert_eq!(vertical_specialize(&c2, &P::constant(vp(3)), &e, &vec![]).unwrap(), P::constant(vp(3)));
    assert!(matches!(
        vertical_specialize(&c2, &g, &d, &vec![(i, vec![1])]),
        Err(Error::CompositionMismatch(_))
    ));
    assert_eq!(compositions(3).len(), 4);
}

#[test]
fn cross_rank_one() {
    let c2 = sys(CartanType::C, 2);
    let alg: ShuffleAlgebra<Trig> = ShuffleAlgebra::new(c2.clone());
    let r = root(&c2, "[1]");
    let spec = RootVectorSpec::tilde_canonical(&c2, r.index, 0, Sign::Plus).unwrap();
    let e = rtt_root_vector(&c2, &spec).unwrap();
    let f = alg.psi(&TrigExpr::prod(vec![e.clone(), e.clone()])).unwrap();
    let d = KostantPartition::single(&c2, r.index, 2);
    let rep = cross_specialize(&c2, &f, &d, &vec![(r.index, vec![2])]).unwrap();
    assert_eq!(rep.factorial, quantum_int(2, 1));
    assert!(rep.divisible);
    let single = alg.psi(&e).unwrap();
    let rep = cross_specialize(&c2, &single, &KostantPartition::single(&c2, r.index, 1), &vec![(r.index, vec![1])]).unwrap();
    assert!(rep.divisible);
}

#[test]
fn membership_examples() {
    for s in [sys(CartanType::C, 2), sys(CartanType::D, 4)] {
        let alg: ShuffleAlgebra<Trig> = ShuffleAlgebra::new(s.clone());
        for i in 1..=s.n {
            assert!(lusztig_member(&s, &alg.generator(i, 2)).unwrap().member);
        }
        assert!(rtt_member(&s, &alg.unit()).unwrap().member);
        let half = TrigElement::with_den(vec![1; s.n].iter().map(|_| 0).collect(), P::one(), LaurentZ::from_i64(2));
        let bad = TrigElement::with_den(
            {
                let mut k = vec![0; s.n];
                k[0] = 1;
                k
            },
            P::var(VarId::x(1, 1)),
            LaurentZ::from_i64(2),
        );
        let _ = half;
        let m = lusztig_member(&s, &bad).unwrap();
        assert!(!m.member && m.witness.is_some());
    }
    let c2 = sys(CartanType::C, 2);
    let m = rtt_member(&c2, &TrigElement::generator(2, 2, 0)).unwrap();
    assert!(!m.member);
    assert_eq!(m.condition.as_deref(), Some("prefactor"));
}

#[test]
fn rtt_root_vectors_are_members() {
    for s in [sys(CartanType::C, 2), sys(CartanType::C, 3)] {
        let alg: ShuffleAlgebra<Trig> = ShuffleAlgebra::new(s.clone());
        for r in s.roots() {
            for sv in -1..=1 {
                let spec = RootVectorSpec::tilde_canonical(&s, r.index, sv, Sign::Plus).unwrap();
                let f = alg.psi(&rtt_root_vector(&s, &spec).unwrap()).unwrap();
                let m = rtt_member(&s, &f).unwrap();
                assert!(m.member, "{} s={sv}: {:?}", s.root_name(r), m);
            }
        }
    }
}

#[test]
fn vanishing_and_leading_c2() {
    let s = sys(CartanType::C, 2);
    let ev = MonomialEvaluator::tilde(s.clone(), Sign::Plus);
    for k in [[1u32, 1], [2, 1], [2, 2]] {
        let groups = pbwd_keys(&s, &k, (-1, 1));
        for (pos, (d, keys)) in groups.iter().enumerate() {
            for h in keys {
                for (dp, _) in &groups[..pos] {
                    assert!(verify_vanishing(&ev, h, dp).unwrap(), "{} at {}", h.name(&s), dp.name(&s));
                }
            }
            let rep = verify_leading_with(&ev, keys).unwrap();
            assert!(rep.ok(), "{} {:?}", d.name(&s), rep);
        }
    }
    let a = root(&s, "[1]").index;
    let b = root(&s, "[2]").index;
    let h1 = PbwdKey::new(vec![(a, 0, 1), (b, 1, 1)]);
    let h2 = PbwdKey::new(vec![(a, 1, 1), (b, -1, 1)]);
    assert!(verify_leading(&s, &h1, &h2).unwrap());
    assert!(verify_leading(&s, &h1, &h1).unwrap());
}

#[test]
fn rational_phi_runs() {
    // Two-step specialization of a rational element in type C.
    let s = sys(CartanType::C, 2);
    let alg: ShuffleAlgebra<Rat> = ShuffleAlgebra::new(s.clone());
    let f = alg.generator(1, 1);
    let d = KostantPartition::single(&s, root(&s, "[1]").index, 1);
    let img = phi_d(&s, &f, &d).unwrap();
    assert!(!img.is_zero());
}
