use crate::error::Result;
use crate::polyvars::{LinearForm, Mono, SparsePoly, VarId, VarKind};
use crate::roots::{CartanType, KostantPartition, PbwdKey, PositiveRoot, RootSystem, RootTag};
use crate::scalars::{angle, quantum_int, v_pow_minus_one, LaurentZ};
use crate::shuffle::{ShuffleAlgebra, Trig};
use itertools::Itertools;

type P = SparsePoly<LaurentZ>;

/// Exponent `κ_β` of the leading `w`-power.
pub fn kappa(sys: &RootSystem, r: &PositiveRoot) -> i32 {
    let n = sys.n as i32;
    match (sys.ty, r.tag) {
        (CartanType::C, RootTag::Segment { i, j }) => (j - i) as i32,
        (CartanType::C, RootTag::ToN { i }) => n - i as i32,
        (CartanType::C, RootTag::Fold { i, j }) => 4 * n - i as i32 - 3 * j as i32 - 1,
        (CartanType::C, RootTag::DoubleFold { i }) => 2 * n - 2 * i as i32,
        _ => r.height() as i32 - 1,
    }
}

/// Leading constant `c_β`.
pub fn c_beta(sys: &RootSystem, r: &PositiveRoot) -> LaurentZ {
    let h = r.height() as u32;
    let n = sys.n as i32;
    let a1 = angle(1);
    match (sys.ty, r.tag) {
        (CartanType::C, RootTag::ToN { .. }) => a1.pow(h - 2).mul(&angle(2)),
        (CartanType::C, RootTag::Fold { j, .. }) => {
            let mut c = a1.pow(h - 3).mul(&angle(2));
            for l in j as i32..n {
                c = c.mul(&v_pow_minus_one(2 * n - 2 * l)).mul(&v_pow_minus_one(2 * n - 2 * l + 4));
            }
            c
        }
        (CartanType::C, RootTag::DoubleFold { .. }) => a1.pow(h - 3).mul(&angle(2).pow(2)),
        _ => a1.pow(h - 1),
    }
}

/// `c̃_β`: `c_β/[2]` for the type C root `[i,n,i]`, `c_β` otherwise.
pub fn c_tilde(sys: &RootSystem, r: &PositiveRoot) -> LaurentZ {
    let c = c_beta(sys, r);
    match (sys.ty, r.tag) {
        (CartanType::C, RootTag::DoubleFold { .. }) => c.div_exact(&quantum_int(2, 1)).expect("[2] divides ⟨2⟩"),
        _ => c,
    }
}

/// `G_β` as `∏_s w_s^κ · ∏_{s≠s′} ∏ (w_s − v^t w_{s′})^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GFactor {
    pub kappa: i32,
    /// Pairs `(t, m)`.
    pub cross: Vec<(i32, u32)>,
}

pub fn g_factor(sys: &RootSystem, r: &PositiveRoot) -> GFactor {
    let n = sys.n as i32;
    let h = r.height() as u32;
    let mut cross = Vec::new();
    match (sys.ty, r.tag) {
        (CartanType::C, RootTag::Segment { i, j }) => cross.push((2, (j - i) as u32)),
        (CartanType::C, RootTag::ToN { i }) => {
            cross.push((2, (n - i as i32 - 1) as u32));
            cross.push((4, 1));
        }
        (CartanType::C, RootTag::Fold { i, j }) => {
            let (i, j) = (i as i32, j as i32);
            cross.push((2, (2 * n - i - j - 1) as u32));
            cross.push((4, 1));
            for l in j..=n - 2 {
                cross.push((2 * n - 2 * l, 1));
            }
            for l in j..n {
                cross.push((2 * n - 2 * l + 4, 1));
            }
        }
        (CartanType::C, RootTag::DoubleFold { i }) => {
            let i = i as i32;
            cross.push((2, (2 * n - 2 * i - 1) as u32));
            cross.push((0, (n - i - 1) as u32));
            cross.push((4, (n - i) as u32));
        }
        (_, RootTag::Fold { j, .. }) if j as i32 <= n - 2 => {
            cross.push((2, h - 1));
            for l in j as i32..=n - 2 {
                cross.push((2 * n - 2 * l, 1));
                cross.push((2 * n - 2 * l - 4, 1));
            }
        }
        _ => cross.push((2, h - 1)),
    }
    cross.retain(|&(_, m)| m > 0);
    GFactor { kappa: kappa(sys, r), cross }
}

/// Monomial and linear factors of `G_β` on the block of root `r` with
/// `d` copies.
pub fn g_forms(sys: &RootSystem, r: &PositiveRoot, d: u32) -> (Mono, Vec<LinearForm>) {
    let g = g_factor(sys, r);
    let mono = Mono::from_pairs((1..=d as usize).map(|s| (VarId::w(r.index, s), g.kappa)));
    let mut forms = Vec::new();
    for s in 1..=d as usize {
        for s2 in 1..=d as usize {
            if s == s2 {
                continue;
            }
            for &(t, m) in &g.cross {
                for _ in 0..m {
                    forms.push(LinearForm::trig(VarId::w(r.index, s), LaurentZ::vpow(t), VarId::w(r.index, s2)));
                }
            }
        }
    }
    (mono, forms)
}

/// `G_β` expanded, as a polynomial in `w[β][1..=d]`.
pub fn g_poly(sys: &RootSystem, r: &PositiveRoot, d: u32) -> P {
    let (mono, forms) = g_forms(sys, r, d);
    let mut out = P::term(mono, LaurentZ::one());
    for f in forms {
        out = out.mul(&f.to_poly());
    }
    out
}

/// `A_d`: `[2]` per copy of `[i,n,i]` and the cyclotomic factors of
/// `[i,n,j]` in type C; `1` in type D.
pub fn a_d(sys: &RootSystem, d: &KostantPartition) -> LaurentZ {
    let n = sys.n as i32;
    let mut out = LaurentZ::one();
    if sys.ty != CartanType::C {
        return out;
    }
    for (ri, m) in d.support() {
        let f = match sys.root(ri).tag {
            RootTag::DoubleFold { .. } => quantum_int(2, 1),
            RootTag::Fold { j, .. } => {
                let j = j as i32;
                let mut f = v_pow_minus_one(2 * n - 2 * j + 4);
                for l in j..=n - 2 {
                    f = f.mul(&v_pow_minus_one(2 * n - 2 * l)).mul(&v_pow_minus_one(2 * n - 2 * l + 2));
                }
                f
            }
            _ => continue,
        };
        out = out.mul(&f.pow(m));
    }
    out
}

/// `P_λ` for the modes of `h` on root `r`, in `w[r][1..=d]`:
/// `Sym ∏ w_s^{r_s} ∏_{i<j} (w_i − v_β^{−2} w_j)/(w_i − w_j)`.
pub fn p_lambda(h: &PbwdKey, r: &PositiveRoot) -> Result<P> {
    let modes = h.modes_on(r.index);
    let d = modes.len();
    let w = |s: usize| VarId::w(r.index, s);
    let q = LaurentZ::vpow(-2 * r.v_exp());
    let mut base = P::term(Mono::from_pairs(modes.iter().enumerate().map(|(s, &e)| (w(s + 1), e))), LaurentZ::one());
    for a in 1..=d {
        for b in a + 1..=d {
            base = base.mul(&P::binomial(w(a), q.clone(), w(b)));
        }
    }
    let mut acc = P::zero();
    for perm in (1..=d).permutations(d) {
        let sign = perm.iter().tuple_combinations().filter(|(a, b)| a > b).count() % 2;
        let img = base.map_vars(|v| if v.a() == r.index && v.kind() == VarKind::W { w(perm[v.b() - 1]) } else { v });
        if sign == 0 {
            acc.add_assign(&img);
        } else {
            acc.add_assign(&img.neg());
        }
    }
    for a in 1..=d {
        for b in a + 1..=d {
            acc = acc.div_linear(w(a), &P::var(w(b)))?;
        }
    }
    Ok(acc)
}

/// Independent computation of `P_λ` as the rank-one shuffle product
/// `x^{r_1} ⋆ ⋯ ⋆ x^{r_d}`, renamed to `w[block][·]`; `v_exp` is 1 or 2.
pub fn p_lambda_rank_one(modes: &[i32], v_exp: i32, block: usize) -> Result<P> {
    let sys = RootSystem::new(CartanType::C, 2)?;
    let color = if v_exp == 2 { 2 } else { 1 };
    let alg: ShuffleAlgebra<Trig> = ShuffleAlgebra::new(sys);
    let items: Vec<_> = modes.iter().map(|&m| alg.generator(color, m)).collect();
    let prod = alg.product(&items)?;
    let num = prod.integral_numerator().expect("rank-one products are integral");
    Ok(num.map_vars(|v| VarId::w(block, v.b())))
}
