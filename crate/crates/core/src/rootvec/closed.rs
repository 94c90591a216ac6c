use super::Sign;
use crate::error::{Error, Result};
use crate::polyvars::{Mono, SparsePoly, VarId};
use crate::roots::{CartanType, RootSystem, RootTag};
use crate::scalars::{angle, LaurentZ};
use crate::shuffle::TrigElement;

type P = SparsePoly<LaurentZ>;

/// Factored numerator of the shuffle image of a signed preset, over the
/// pole denominator of the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormImage {
    pub k: Vec<u32>,
    pub prefactor: LaurentZ,
    pub monomial: Mono,
    /// Linear or quadratic bracket factor of the folded type C roots.
    pub bracket: Option<P>,
    pub q_factors: Vec<P>,
}

impl ClosedFormImage {
    pub fn numerator(&self) -> P {
        let mut out = P::term(self.monomial.clone(), self.prefactor.clone());
        if let Some(b) = &self.bracket {
            out = out.mul(b);
        }
        for q in &self.q_factors {
            out = out.mul(q);
        }
        out
    }

    pub fn to_element(&self) -> TrigElement {
        TrigElement::new(self.k.clone(), self.numerator())
    }
}

fn x(c: usize, r: usize) -> P {
    P::var(VarId::x(c, r))
}

fn c(a: i64, e: i32) -> LaurentZ {
    LaurentZ::from_terms([(e, a)])
}

/// `Q(x₁,x₂,y₁,y₂) = (1+v²)(x₁x₂+y₁y₂) − v(x₁+x₂)(y₁+y₂)` on colors `ℓ, ℓ+1`.
fn q_form(l: usize) -> P {
    let one_v2 = LaurentZ::from_terms([(0, 1), (2, 1)]);
    let xs = x(l, 1).add(&x(l, 2));
    let ys = x(l + 1, 1).add(&x(l + 1, 2));
    x(l, 1).mul(&x(l, 2)).add(&x(l + 1, 1).mul(&x(l + 1, 2))).scale(&one_v2).sub(&xs.mul(&ys).scale(&c(1, 1)))
}

/// `(v²x_{ℓ,1} − x_{ℓ,2})(v²x_{ℓ,2} − x_{ℓ,1})`.
fn d_pair(l: usize) -> P {
    let a = x(l, 1).scale(&c(1, 2)).sub(&x(l, 2));
    let b = x(l, 2).scale(&c(1, 2)).sub(&x(l, 1));
    a.mul(&b)
}

struct MonoBuilder(Vec<(VarId, i32)>);

impl MonoBuilder {
    fn one(&mut self, color: usize, e: i32) {
        self.0.push((VarId::x(color, 1), e));
    }
    fn both(&mut self, color: usize, e: i32) {
        self.0.push((VarId::x(color, 1), e));
        self.0.push((VarId::x(color, 2), e));
    }
    fn done(self) -> Mono {
        Mono::from_pairs(self.0)
    }
}

/// Closed-form image of the signed preset of root `root` with per-color
/// modes `modes` (as in [`super::RootVectorSpec::tilde`]).
pub fn closed_form(sys: &RootSystem, root: usize, modes: &[i32], sign: Sign) -> Result<ClosedFormImage> {
    let r = sys.roots().get(root).ok_or_else(|| Error::UnknownRoot(format!("index {root}")))?;
    if modes.len() != sys.n {
        return Err(Error::InvalidDecomposition(format!("expected {} per-color modes", sys.n)));
    }
    let n = sys.n;
    let s = |l: usize| modes[l - 1];
    let plus = sign == Sign::Plus;
    let a1 = angle(1);
    let a2 = angle(2);
    let mut m = MonoBuilder(Vec::new());
    let mut bracket = None;
    let mut q_factors = Vec::new();
    // Monomial of a chain through `colors`: shifted exponents on all but
    // the last (+) or all but the first (−) letter.
    let chain_mono = |m: &mut MonoBuilder, colors: &[usize]| {
        let last = colors.len() - 1;
        for (p, &l) in colors.iter().enumerate() {
            let bump = if plus { p != last } else { p != 0 };
            m.one(l, s(l) + bump as i32);
        }
    };
    let prefactor = match (sys.ty, r.tag) {
        (_, RootTag::Segment { i, j }) => {
            chain_mono(&mut m, &(i..=j).collect::<Vec<_>>());
            a1.pow((j - i) as u32)
        }
        (CartanType::C, RootTag::ToN { i }) => {
            chain_mono(&mut m, &(i..=n).collect::<Vec<_>>());
            a1.pow((n - i - 1) as u32).mul(&a2)
        }
        (CartanType::D, RootTag::ToN { i }) => {
            let mut colors: Vec<usize> = (i..=n - 2).collect();
            colors.push(n);
            chain_mono(&mut m, &colors);
            a1.pow((n - i - 1) as u32)
        }
        (CartanType::C, RootTag::Fold { i, j }) => {
            let one_v2 = LaurentZ::from_terms([(0, 1), (2, 1)]);
            let xj = x(j, 1).add(&x(j, 2));
            if plus {
                for l in i..j {
                    m.one(l, s(l) + 1);
                }
                m.both(j, s(j));
                for l in j + 1..n {
                    m.both(l, s(l) + 1);
                }
                m.one(n, s(n) + 1);
                let t = x(j, 1).mul(&x(j, 2)).scale(&one_v2).sub(&x(j - 1, 1).mul(&xj).scale(&c(1, 1)));
                bracket = Some(t);
            } else {
                m.one(i, s(i));
                for l in i + 1..j {
                    m.one(l, s(l) + 1);
                }
                for l in j..n {
                    m.both(l, s(l) + 1);
                }
                m.one(n, s(n) + 1);
                bracket = Some(x(j - 1, 1).scale(&one_v2).sub(&xj.scale(&c(1, 1))));
            }
            q_factors.extend((j..n - 1).map(q_form));
            a1.pow((2 * n - i - j - 1) as u32).mul(&a2)
        }
        (CartanType::C, RootTag::DoubleFold { i }) => {
            if plus {
                for l in i..n {
                    m.both(l, s(l) + 1);
                }
                m.one(n, s(n));
            } else {
                m.both(i, s(i));
                for l in i + 1..n {
                    m.both(l, s(l) + 1);
                }
                m.one(n, s(n) + 2);
            }
            q_factors.extend((i..n - 1).map(q_form));
            a1.pow((2 * n - 2 * i - 2) as u32).mul(&a2.pow(2))
        }
        (CartanType::D, RootTag::Fold { i, j }) if j == n - 1 => {
            if plus {
                for l in i..n - 2 {
                    m.one(l, s(l) + 1);
                }
                m.one(n - 2, s(n - 2) + 2);
                m.one(n - 1, s(n - 1));
                m.one(n, s(n));
            } else {
                m.one(i, s(i));
                for l in i + 1..=n - 2 {
                    m.one(l, s(l) + 1);
                }
                m.one(n - 1, s(n - 1) + 1);
                m.one(n, s(n) + 1);
            }
            a1.pow((n - i) as u32)
        }
        (CartanType::D, RootTag::Fold { i, j }) => {
            if plus {
                for l in i..j - 1 {
                    m.one(l, s(l) + 1);
                }
                m.one(j - 1, s(j - 1) + 2);
                m.both(j, s(j));
                for l in j + 1..=n - 2 {
                    m.both(l, s(l) + 1);
                }
            } else {
                m.one(i, s(i));
                for l in i + 1..j {
                    m.one(l, s(l) + 1);
                }
                for l in j..=n - 2 {
                    m.both(l, s(l) + 1);
                }
            }
            m.one(n - 1, s(n - 1) + 1);
            m.one(n, s(n) + 1);
            q_factors.extend((j..=n - 2).map(d_pair));
            a1.pow((2 * n - i - j - 1) as u32)
        }
        _ => return Err(Error::UnknownRoot(r.label().to_string())),
    };
    Ok(ClosedFormImage { k: r.nu.clone(), prefactor, monomial: m.done(), bracket, q_factors })
}
