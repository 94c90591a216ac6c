//! Acceptance suite: one pass/fail line per criterion.
//!
//! Run a subset with `cargo test --test acceptance -- 4 5`.

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use shuffle_forge_core::polyvars::{Mono, SparsePoly, VarId};
use shuffle_forge_core::roots::{pbwd_keys, CartanType, KostantPartition, PbwdKey, RootSystem, RootTag, Sys};
use shuffle_forge_core::rootvec::{
    closed_form, divided_power, root_vector, rtt_root_vector, RootVectorSpec, Sign,
};
use shuffle_forge_core::scalars::{angle, quantum_int, LaurentZ, RationalV};
use shuffle_forge_core::shuffle::{relations, Rat, RatElement, ShuffleAlgebra, Trig, TrigElement, TrigExpr};
use shuffle_forge_core::specmaps::{
    c_beta, dim_report, kappa, lusztig_member, phi_d, rtt_member, verify_leading_with, verify_vanishing, DimSettings,
    MonomialEvaluator, SpecImage,
};
use shuffle_forge_core::yangian;
use std::time::Instant;

type P = SparsePoly<LaurentZ>;
type Outcome = Result<String, String>;

fn sys(ty: CartanType, n: usize) -> Sys {
    RootSystem::new(ty, n).unwrap()
}

fn desk_systems() -> Vec<Sys> {
    vec![sys(CartanType::C, 2), sys(CartanType::C, 3), sys(CartanType::D, 4)]
}

fn max_k() -> u32 {
    std::env::var("SHUFFLE_FORGE_MAX_K").ok().and_then(|s| s.parse().ok()).unwrap_or(6)
}

/// Collects failures from a parallel sweep and reports the first few.
fn verdict(label: &str, checks: usize, failures: Vec<String>) -> Outcome {
    if failures.is_empty() {
        Ok(format!("{checks} {label}"))
    } else {
        Err(format!("{}/{checks} {label} failed; first: {}", failures.len(), failures.iter().take(3).join(" | ")))
    }
}

/// Degree vectors `k ≠ 0` with `|k| ≤ max`.
fn degree_vectors(n: usize, max: u32) -> Vec<Vec<u32>> {
    (0..n)
        .map(|_| 0..=max)
        .multi_cartesian_product()
        .filter(|k| {
            let t: u32 = k.iter().sum();
            t > 0 && t <= max
        })
        .collect()
}

fn criterion_1() -> Outcome {
    let mut checks = 0;
    let mut failures = Vec::new();
    for s in desk_systems() {
        let alg: ShuffleAlgebra<Trig> = ShuffleAlgebra::new(s.clone());
        let mut exprs: Vec<(String, TrigExpr)> = Vec::new();
        for i in 1..=s.n {
            for j in 1..=s.n {
                for (r, t) in (-2..=2).cartesian_product(-2..=2) {
                    exprs.push((format!("{} quadratic i={i} j={j} r={r} s={t}", s.name()), relations::quadratic(&s, i, j, r, t)));
                }
                if i != j && s.a(i, j) != 0 {
                    let m = (1 - s.a(i, j)) as usize;
                    for rs in (0..m).map(|_| -2..=2).multi_cartesian_product() {
                        for t in -2..=2 {
                            exprs.push((format!("{} serre i={i} j={j} r={rs:?} s={t}", s.name()), relations::serre(&s, i, j, &rs, t)));
                        }
                    }
                }
            }
        }
        checks += exprs.len();
        failures.extend(exprs.par_iter().filter_map(|(name, e)| match alg.psi(e) {
            Ok(f) if f.is_zero() => None,
            Ok(f) => Some(format!("{name}: {f}")),
            Err(err) => Some(format!("{name}: {err}")),
        }).collect::<Vec<_>>());

        let ralg: ShuffleAlgebra<Rat> = ShuffleAlgebra::new(s.clone());
        let mut rexprs = Vec::new();
        for i in 1..=s.n {
            for j in 1..=s.n {
                for (r, t) in (0..=2).cartesian_product(0..=2) {
                    rexprs.push((format!("{} yangian quadratic i={i} j={j} r={r} s={t}", s.name()), yangian::quadratic(&s, i, j, r, t)));
                }
                if i != j && s.a(i, j) != 0 {
                    let m = (1 - s.a(i, j)) as usize;
                    for rs in (0..m).map(|_| 0..=2).multi_cartesian_product() {
                        for t in 0..=2 {
                            rexprs.push((format!("{} yangian serre i={i} j={j} r={rs:?} s={t}", s.name()), yangian::serre(&s, i, j, &rs, t)));
                        }
                    }
                }
            }
        }
        checks += rexprs.len();
        failures.extend(rexprs.par_iter().filter_map(|(name, e)| match ralg.psi(e) {
            Ok(f) if f.is_zero() => None,
            Ok(f) => Some(format!("{name}: {f}")),
            Err(err) => Some(format!("{name}: {err}")),
        }).collect::<Vec<_>>());
    }
    verdict("relations vanish", checks, failures)
}

/// Per-color modes in `{0,1}` on the colors of a root.
fn zero_one_modes(s: &RootSystem, root: usize) -> Vec<Vec<i32>> {
    let r = s.root(root);
    (0..s.n)
        .map(|c| if r.nu[c] > 0 { vec![0, 1] } else { vec![0] })
        .multi_cartesian_product()
        .collect()
}

fn criterion_2() -> Outcome {
    let mut checks = 0;
    let mut failures = Vec::new();
    for s in desk_systems() {
        let alg: ShuffleAlgebra<Trig> = ShuffleAlgebra::new(s.clone());
        let cases: Vec<_> = s
            .roots()
            .iter()
            .flat_map(|r| zero_one_modes(&s, r.index).into_iter().map(move |m| (r.index, m)))
            .cartesian_product([Sign::Plus, Sign::Minus])
            .collect();
        checks += cases.len();
        failures.extend(cases.par_iter().filter_map(|((root, modes), sign)| {
            let name = format!("{} {} {sign} modes {modes:?}", s.name(), s.root_name(s.root(*root)));
            let check = || -> shuffle_forge_core::Result<bool> {
                let spec = RootVectorSpec::tilde(&s, *root, modes, *sign)?;
                let got = alg.psi(&root_vector(&s, &spec)?)?;
                let want = closed_form(&s, *root, modes, *sign)?.to_element();
                Ok(got.proportional(&want).is_some())
            };
            match check() {
                Ok(true) => None,
                Ok(false) => Some(name),
                Err(e) => Some(format!("{name}: {e}")),
            }
        }).collect::<Vec<_>>());
    }
    verdict("closed forms match", checks, failures)
}

fn criterion_3() -> Outcome {
    let mut checks = 0;
    let mut failures = Vec::new();
    for (seed, s) in desk_systems().into_iter().enumerate() {
        let alg: ShuffleAlgebra<Trig> = ShuffleAlgebra::new(s.clone());
        let mut rng = ChaCha8Rng::seed_from_u64(300 + seed as u64);
        let mut specs = Vec::new();
        for r in s.roots() {
            for sv in -1..=2 {
                for _ in 0..20 {
                    specs.push(RootVectorSpec::random(&s, r.index, sv, 1, &mut rng).unwrap());
                }
            }
        }
        checks += specs.len();
        failures.extend(specs.par_iter().filter_map(|spec| {
            let r = s.root(spec.root);
            let d = KostantPartition::single(&s, r.index, 1);
            let f = alg.psi(&root_vector(&s, spec).unwrap()).unwrap();
            let img = phi_d(&s, &f, &d).unwrap();
            let want = SpecImage::<Trig> {
                poly: P::term(Mono::var(VarId::w(r.index, 1), spec.mode() + kappa(&s, r)), c_beta(&s, r)),
                den: LaurentZ::one(),
            };
            (!img.proportional(&want)).then(|| format!("{} {}: got {img}", s.name(), spec.describe(&s)))
        }).collect::<Vec<_>>());
    }
    verdict("leading terms", checks, failures)
}

/// Runs `f` on every degree vector of every desk system with a shared
/// evaluator that is cleared between degree vectors.
fn sweep_degrees(
    max: u32,
    mut f: impl FnMut(&Sys, &MonomialEvaluator, &[(KostantPartition, Vec<PbwdKey>)]) -> (usize, Vec<String>),
) -> (usize, Vec<String>) {
    let mut checks = 0;
    let mut failures = Vec::new();
    for s in desk_systems() {
        let ev = MonomialEvaluator::tilde(s.clone(), Sign::Plus);
        for k in degree_vectors(s.n, max) {
            let groups = pbwd_keys(&s, &k, (-1, 1));
            let (c, fl) = f(&s, &ev, &groups);
            checks += c;
            failures.extend(fl);
            ev.clear();
        }
    }
    (checks, failures)
}

fn criterion_4() -> Outcome {
    let (checks, failures) = sweep_degrees(5, |s, ev, groups| {
        let jobs: Vec<(usize, &PbwdKey)> =
            groups.iter().enumerate().flat_map(|(pos, (_, keys))| keys.iter().map(move |h| (pos, h))).collect();
        let count = jobs.iter().map(|(pos, _)| pos).sum();
        let fails = jobs
            .par_iter()
            .flat_map_iter(|&(pos, h)| {
                groups[..pos].iter().filter_map(move |(dp, _)| match verify_vanishing(ev, h, dp) {
                    Ok(true) => None,
                    Ok(false) => Some(format!("{} at {}", h.name(s), dp.name(s))),
                    Err(e) => Some(format!("{} at {}: {e}", h.name(s), dp.name(s))),
                })
            })
            .collect();
        (count, fails)
    });
    verdict("vanishing checks", checks, failures)
}

fn criterion_5() -> Outcome {
    let (checks, failures) = sweep_degrees(5, |s, ev, groups| {
        let fails = groups
            .par_iter()
            .filter_map(|(d, keys)| match verify_leading_with(ev, keys) {
                Ok(rep) if rep.ok() => None,
                Ok(rep) => Some(format!("{}: {:?}", d.name(s), rep.witness)),
                Err(e) => Some(format!("{}: {e}", d.name(s))),
            })
            .collect();
        (groups.len(), fails)
    });
    verdict("partitions with h-independent cofactors", checks, failures)
}

fn criterion_6() -> Outcome {
    let c2 = sys(CartanType::C, 2);
    let d4 = sys(CartanType::D, 4);
    let cases: Vec<(Sys, Vec<u32>)> = vec![
        (c2.clone(), vec![1, 1]),
        (c2.clone(), vec![2, 1]),
        (c2, vec![2, 2]),
        (d4, vec![1, 1, 1, 1]),
    ];
    let mut rows = 0;
    let mut failures = Vec::new();
    for (s, k) in cases {
        match dim_report(&s, &k, 0..=2, &DimSettings::default()) {
            Ok(table) => {
                for row in table {
                    rows += 1;
                    if !row.ok() {
                        failures.push(format!("{} {row:?}", s.name()));
                    }
                }
            }
            Err(e) => failures.push(format!("{} k={k:?}: {e}", s.name())),
        }
    }
    verdict("degree rows with equal dimension and full rank", rows, failures)
}

/// `(root, mode, p)` factors for the integral-form sweeps.
fn factors(s: &RootSystem, ps: &[u32]) -> Vec<(usize, i32, u32)> {
    s.roots().iter().flat_map(|r| (-1..=1).cartesian_product(ps.iter().copied()).map(move |(m, p)| (r.index, m, p))).collect()
}

fn size(s: &RootSystem, f: &(usize, i32, u32)) -> u32 {
    s.root(f.0).height() as u32 * f.2
}

/// Products of at most two factors with total size within the cap.
fn products(s: &RootSystem, fs: &[(usize, i32, u32)], cap: u32) -> Vec<Vec<(usize, i32, u32)>> {
    let mut out: Vec<Vec<_>> = fs.iter().filter(|f| size(s, f) <= cap).map(|f| vec![*f]).collect();
    for (a, b) in fs.iter().cartesian_product(fs.iter()) {
        if size(s, a) + size(s, b) <= cap {
            out.push(vec![*a, *b]);
        }
    }
    out
}

fn membership_sweep(
    s: &Sys,
    items: Vec<Vec<(usize, i32, u32)>>,
    build: impl Fn(&RootSystem, usize, i32, u32) -> TrigExpr + Sync,
    test: impl Fn(&RootSystem, &TrigElement) -> bool + Sync,
    label: &str,
) -> (usize, Vec<String>) {
    let alg: ShuffleAlgebra<Trig> = ShuffleAlgebra::new(s.clone());
    let fails = items
        .par_iter()
        .filter_map(|prod| {
            let e = TrigExpr::prod(prod.iter().map(|&(r, m, p)| build(s, r, m, p)).collect());
            let f = alg.psi(&e).unwrap();
            (!test(s, &f)).then(|| {
                let names = prod.iter().map(|&(r, m, p)| format!("{}^({p})_{m}", s.root(r).label())).join("·");
                format!("{} {label} {names}", s.name())
            })
        })
        .collect();
    (items.len(), fails)
}

fn criterion_7() -> Outcome {
    let cap = max_k();
    let mut checks = 0;
    let mut failures = Vec::new();
    for s in [sys(CartanType::C, 2), sys(CartanType::D, 4)] {
        let lus = products(&s, &factors(&s, &[1, 2]), cap);
        let (c, f) = membership_sweep(
            &s,
            lus,
            |s, r, m, p| divided_power(s, &RootVectorSpec::tilde_canonical(s, r, m, Sign::Plus).unwrap(), p).unwrap(),
            |s, f| lusztig_member(s, f).unwrap().member,
            "lusztig",
        );
        checks += c;
        failures.extend(f);
        let rtt = products(&s, &factors(&s, &[1]), cap);
        let (c, f) = membership_sweep(
            &s,
            rtt,
            |s, r, m, _| rtt_root_vector(s, &RootVectorSpec::tilde_canonical(s, r, m, Sign::Plus).unwrap()).unwrap(),
            |s, f| rtt_member(s, f).unwrap().member,
            "rtt",
        );
        checks += c;
        failures.extend(f);
    }

    // Negative controls must be rejected with a witness.
    let mut controls = Vec::new();
    for s in [sys(CartanType::C, 2), sys(CartanType::D, 4)] {
        let alg: ShuffleAlgebra<Trig> = ShuffleAlgebra::new(s.clone());
        for r in s.roots() {
            let spec = RootVectorSpec::tilde_canonical(&s, r.index, 0, Sign::Plus).unwrap();
            let bare = alg.psi(&root_vector(&s, &spec).unwrap()).unwrap();
            controls.push((format!("{} {} without ⟨1⟩", s.name(), r.label()), rtt_member(&s, &bare).unwrap()));
            if s.ty == CartanType::C && r.is_simple() && r.first() == s.n {
                let half = bare.scale(&RationalV::from_laurent(angle(1)));
                controls.push((format!("{} {} with ⟨1⟩ for ⟨2⟩", s.name(), r.label()), rtt_member(&s, &half).unwrap()));
            }
            if let RootTag::DoubleFold { .. } = r.tag {
                let e = divided_power(&s, &spec, 1).unwrap();
                let over = TrigExpr::scale(RationalV::new(LaurentZ::one(), quantum_int(2, 1)), e);
                let f = alg.psi(&over).unwrap();
                controls.push((format!("{} {} divided by an extra [2]", s.name(), r.label()), lusztig_member(&s, &f).unwrap()));
            }
        }
        let gen = alg.generator(1, 0);
        let half = gen.scale(&RationalV::new(LaurentZ::one(), LaurentZ::from_i64(2)));
        controls.push((format!("{} e(1,0)/2", s.name()), lusztig_member(&s, &half).unwrap()));
    }
    checks += controls.len();
    for (name, m) in controls {
        if m.member || m.witness.is_none() {
            failures.push(format!("negative control accepted: {name}"));
        }
    }
    let mut out = verdict("membership checks", checks, failures)?;
    out.push_str(&format!(" (|k| ≤ {cap})"));
    Ok(out)
}

fn criterion_8() -> Outcome {
    let mut checks = 0;
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(800);
    for s in desk_systems() {
        let alg: ShuffleAlgebra<Rat> = ShuffleAlgebra::new(s.clone());
        for r in s.roots() {
            for sv in 0..=2 {
                for _ in 0..3 {
                    let mut parts = vec![0; r.word.len()];
                    for _ in 0..sv {
                        let p = rng.gen_range(0..parts.len());
                        parts[p] += 1;
                    }
                    let f = alg.psi(&yangian::yangian_root_vector(&s, r.index, &parts).unwrap()).unwrap();
                    let shape = yangian::leading_shape(&s, r.index, sv, &f).unwrap();
                    checks += 1;
                    if !shape.ok() {
                        failures.push(format!("{} {} parts {parts:?}: {shape:?}", s.name(), r.label()));
                    }
                }
            }
        }

        let mut good: Vec<RatElement> = Vec::new();
        let mut integral: Vec<RatElement> = Vec::new();
        for k in degree_vectors(s.n, 4) {
            for (_, keys) in pbwd_keys(&s, &k, (0, 1)) {
                for h in keys {
                    let g = alg.psi(&yangian::yangian_monomial(&s, &h, false).unwrap()).unwrap();
                    let x = alg.psi(&yangian::yangian_monomial(&s, &h, true).unwrap()).unwrap();
                    checks += 2;
                    if !yangian::is_good(&s, &g).unwrap().member {
                        failures.push(format!("{} monomial {} not good", s.name(), h.name(&s)));
                    }
                    if !yangian::is_integral(&s, &x).unwrap().member {
                        failures.push(format!("{} X̄-monomial {} not integral", s.name(), h.name(&s)));
                    }
                    if k.iter().sum::<u32>() <= 2 {
                        good.push(g);
                        integral.push(x);
                    }
                }
            }
        }
        let pairs: Vec<(usize, usize)> = (0..good.len()).cartesian_product(0..good.len()).collect();
        let fails: Vec<String> = pairs
            .par_iter()
            .flat_map_iter(|&(a, b)| {
                let mut out = Vec::new();
                let g = alg.star(&good[a], &good[b]).unwrap();
                if !yangian::is_good(&s, &g).unwrap().member {
                    out.push(format!("{} good product {a}·{b}", s.name()));
                }
                let x = alg.star(&integral[a], &integral[b]).unwrap();
                if !yangian::is_integral(&s, &x).unwrap().member {
                    out.push(format!("{} integral product {a}·{b}", s.name()));
                }
                out
            })
            .collect();
        checks += 2 * pairs.len();
        failures.extend(fails);
    }
    verdict("yangian checks", checks, failures)
}

fn random_poly(rng: &mut ChaCha8Rng, k: &[usize], terms: usize) -> P {
    let mut p = P::zero();
    for _ in 0..terms {
        let mut pairs = Vec::new();
        for (c, &kc) in k.iter().enumerate() {
            for r in 1..=kc {
                let e = rng.gen_range(-1..=2);
                if e != 0 {
                    pairs.push((VarId::x(c + 1, r), e));
                }
            }
        }
        let coeff = LaurentZ::from_terms([(rng.gen_range(-2..=2), rng.gen_range(-3..=3i64))]);
        p.add_term(Mono::from_pairs(pairs), coeff);
    }
    p
}

fn random_element(rng: &mut ChaCha8Rng, n: usize) -> TrigElement {
    let mut k = vec![0u32; n];
    let total = rng.gen_range(1..=2);
    for _ in 0..total {
        k[rng.gen_range(0..n)] += 1;
    }
    let ks: Vec<usize> = k.iter().map(|&x| x as usize).collect();
    let f = random_poly(rng, &ks, 2).symmetrize(&ks).unwrap();
    TrigElement::new(k, f)
}

fn criterion_9() -> Outcome {
    let mut failures = Vec::new();
    let s = sys(CartanType::C, 2);
    let mut rng = ChaCha8Rng::seed_from_u64(900);
    let triples: Vec<_> = (0..200).map(|_| (0..3).map(|_| random_element(&mut rng, 2)).collect::<Vec<_>>()).collect();
    failures.extend(triples.par_iter().enumerate().filter_map(|(t, xs)| {
        let ab = xs[0].star(&xs[1], &s).unwrap();
        let bc = xs[1].star(&xs[2], &s).unwrap();
        let l = ab.star(&xs[2], &s).unwrap();
        let r = xs[0].star(&bc, &s).unwrap();
        let full = xs[0].star_full(&xs[1], &s).unwrap();
        let mut out = Vec::new();
        if !l.same_value(&r) {
            out.push(format!("associativity triple {t}"));
        }
        if !full.same_value(&ab) {
            out.push(format!("coset vs full symmetrization, triple {t}"));
        }
        (!out.is_empty()).then(|| out.join(", "))
    }).collect::<Vec<_>>());

    for case in 0..1000 {
        let n = rng.gen_range(1..=3);
        let k: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=3)).collect();
        let f = random_poly(&mut rng, &k, 3);
        let g = random_poly(&mut rng, &k, 2);
        let sym = f.symmetrize(&k).unwrap();
        let fact: i64 = k.iter().map(|&x| (1..=x as i64).product::<i64>()).product();
        if sym.symmetrize(&k).unwrap() != sym.scale(&LaurentZ::from_i64(fact)) || !sym.is_symmetric(&k) {
            failures.push(format!("symmetrize case {case}"));
        }
        if !g.is_zero() && f.mul(&g).exact_div(&g).as_ref() != Ok(&f) {
            failures.push(format!("exact_div case {case}"));
        }
    }
    verdict("kernel cases", 200 + 1000, failures)
}

fn main() {
    let wanted: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("relations map to zero", criterion_1),
        ("closed forms of signed root vectors", criterion_2),
        ("leading terms of root vectors", criterion_3),
        ("vanishing below the degree", criterion_4),
        ("factorization cofactors", criterion_5),
        ("PBWD and wheel-space dimensions", criterion_6),
        ("integral forms", criterion_7),
        ("Yangian valuations and closure", criterion_8),
        ("kernel properties", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let id = i + 1;
        if !wanted.is_empty() && !wanted.contains(&id) {
            continue;
        }
        let t = Instant::now();
        let result = std::panic::catch_unwind(run).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = t.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {id} PASS {name}: {detail} [{secs:.1}s]"),
            Err(detail) => {
                failed += 1;
                println!("criterion {id} FAIL {name}: {detail} [{secs:.1}s]");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
