use smallvec::SmallVec;
use std::cmp::Ordering;
use std::fmt;

/// Family a variable belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarKind {
    /// `x[color][copy]`, shuffle-algebra variables.
    X,
    /// `w[block][copy]`, specialization targets.
    W,
    /// `w'[block][copy]`, auxiliary targets of two-step specializations.
    Wp,
    /// `z[block][group]`, vertical-specialization targets.
    Z,
}

const SHIFT_KIND: u32 = 28;
const SHIFT_A: u32 = 14;
const MASK: u32 = (1 << SHIFT_A) - 1;

/// Packed variable identifier. The derived order is by kind, then first
/// index (color or block), then copy.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarId(u32);

impl VarId {
    pub fn new(kind: VarKind, a: usize, b: usize) -> Self {
        assert!(a <= MASK as usize && b <= MASK as usize, "variable index out of range");
        let k = match kind {
            VarKind::X => 0,
            VarKind::W => 1,
            VarKind::Wp => 2,
            VarKind::Z => 3,
        };
        VarId((k << SHIFT_KIND) | ((a as u32) << SHIFT_A) | b as u32)
    }

    pub fn x(color: usize, copy: usize) -> Self {
        Self::new(VarKind::X, color, copy)
    }

    pub fn w(block: usize, copy: usize) -> Self {
        Self::new(VarKind::W, block, copy)
    }

    pub fn wp(block: usize, copy: usize) -> Self {
        Self::new(VarKind::Wp, block, copy)
    }

    pub fn z(block: usize, group: usize) -> Self {
        Self::new(VarKind::Z, block, group)
    }

    pub fn kind(self) -> VarKind {
        match self.0 >> SHIFT_KIND {
            0 => VarKind::X,
            1 => VarKind::W,
            2 => VarKind::Wp,
            _ => VarKind::Z,
        }
    }

    /// Color (for `x`) or block index.
    pub fn a(self) -> usize {
        ((self.0 >> SHIFT_A) & MASK) as usize
    }

    /// Copy index.
    pub fn b(self) -> usize {
        (self.0 & MASK) as usize
    }

    pub fn name(self) -> String {
        let p = match self.kind() {
            VarKind::X => "x",
            VarKind::W => "w",
            VarKind::Wp => "w'",
            VarKind::Z => "z",
        };
        format!("{p}[{}][{}]", self.a(), self.b())
    }

    pub fn parse(s: &str) -> Option<Self> {
        let (kind, rest) = if let Some(r) = s.strip_prefix("w'") {
            (VarKind::Wp, r)
        } else if let Some(r) = s.strip_prefix('x') {
            (VarKind::X, r)
        } else if let Some(r) = s.strip_prefix('w') {
            (VarKind::W, r)
        } else if let Some(r) = s.strip_prefix('z') {
            (VarKind::Z, r)
        } else {
            return None;
        };
        let rest = rest.strip_prefix('[')?.strip_suffix(']')?;
        let (a, b) = rest.split_once("][")?;
        Some(Self::new(kind, a.parse().ok()?, b.parse().ok()?))
    }
}

impl fmt::Debug for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Laurent monomial: sorted `(variable, nonzero exponent)` pairs.
///
/// Ordered lexicographically with the smallest variable most significant,
/// which is a monomial order on polynomial monomials.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Mono(SmallVec<[(VarId, i32); 6]>);

impl Mono {
    pub fn one() -> Self {
        Mono(SmallVec::new())
    }

    pub fn var(v: VarId, e: i32) -> Self {
        if e == 0 {
            Self::one()
        } else {
            let mut s = SmallVec::new();
            s.push((v, e));
            Mono(s)
        }
    }

    /// Builds from arbitrary pairs; repeated variables add up.
    pub fn from_pairs<I: IntoIterator<Item = (VarId, i32)>>(pairs: I) -> Self {
        let mut v: SmallVec<[(VarId, i32); 6]> = pairs.into_iter().collect();
        v.sort_by_key(|p| p.0);
        let mut out: SmallVec<[(VarId, i32); 6]> = SmallVec::new();
        for (x, e) in v {
            match out.last_mut() {
                Some(l) if l.0 == x => l.1 += e,
                _ => out.push((x, e)),
            }
        }
        out.retain(|p| p.1 != 0);
        Mono(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pairs(&self) -> &[(VarId, i32)] {
        &self.0
    }

    pub fn exp(&self, v: VarId) -> i32 {
        match self.0.binary_search_by_key(&v, |p| p.0) {
            Ok(i) => self.0[i].1,
            Err(_) => 0,
        }
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|p| p.1 as i64).sum()
    }

    pub fn is_polynomial(&self) -> bool {
        self.0.iter().all(|p| p.1 > 0)
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        let (a, b) = (&self.0, &o.0);
        let mut out: SmallVec<[(VarId, i32); 6]> = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Mono(out)
    }

    pub fn inv(&self) -> Mono {
        Mono(self.0.iter().map(|&(v, e)| (v, -e)).collect())
    }

    pub fn pow(&self, k: i32) -> Mono {
        if k == 0 {
            return Self::one();
        }
        Mono(self.0.iter().map(|&(v, e)| (v, e * k)).collect())
    }

    /// `self / o` when every exponent of `o` is at most the matching one of
    /// `self` (divisibility among polynomial monomials).
    pub fn div_poly(&self, o: &Mono) -> Option<Mono> {
        let q = self.mul(&o.inv());
        q.is_polynomial().then_some(q)
    }

    /// Removes variable `v`, returning its exponent.
    pub fn split_off(&self, v: VarId) -> (i32, Mono) {
        match self.0.binary_search_by_key(&v, |p| p.0) {
            Ok(i) => {
                let mut r = self.0.clone();
                let (_, e) = r.remove(i);
                (e, Mono(r))
            }
            Err(_) => (0, self.clone()),
        }
    }

    /// Renames variables; the map must be injective on the support.
    pub fn map_vars(&self, f: impl Fn(VarId) -> VarId) -> Mono {
        let mut v: SmallVec<[(VarId, i32); 6]> = self.0.iter().map(|&(x, e)| (f(x), e)).collect();
        v.sort_by_key(|p| p.0);
        Mono(v)
    }

    /// Componentwise minimum of exponents (greatest common monomial divisor
    /// in the Laurent sense), over the variables of both.
    pub fn min_with(&self, o: &Mono) -> Mono {
        let mut out = SmallVec::new();
        let (a, b) = (&self.0, &o.0);
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let (v, ea, eb) = if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
                i += 1;
                (a[i - 1].0, a[i - 1].1, 0)
            } else if i >= a.len() || b[j].0 < a[i].0 {
                j += 1;
                (b[j - 1].0, 0, b[j - 1].1)
            } else {
                i += 1;
                j += 1;
                (a[i - 1].0, a[i - 1].1, b[j - 1].1)
            };
            let m = ea.min(eb);
            if m != 0 {
                out.push((v, m));
            }
        }
        Mono(out)
    }
}

impl Ord for Mono {
    fn cmp(&self, o: &Mono) -> Ordering {
        let (a, b) = (&self.0, &o.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(_, ea)), None) => return ea.cmp(&0),
                (None, Some(&(_, eb))) => return 0.cmp(&eb),
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => return ea.cmp(&0),
                    Ordering::Greater => return 0.cmp(&eb),
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Mono) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for &(v, e) in &self.0 {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn var_round_trip() {
        for v in [VarId::x(3, 2), VarId::w(7, 1), VarId::wp(1, 4), VarId::z(2, 9)] {
            assert_eq!(VarId::parse(&v.name()), Some(v));
        }
        assert!(VarId::x(1, 5) < VarId::x(2, 1));
        assert!(VarId::x(9, 9) < VarId::w(1, 1));
    }

    #[test]
    fn lex_order() {
        let x1 = VarId::x(1, 1);
        let x2 = VarId::x(1, 2);
        let a = Mono::var(x1, 1);
        let b = Mono::from_pairs([(x2, 5)]);
        assert!(a > b);
        assert!(Mono::one() < a);
        assert!(Mono::one() > Mono::var(x2, -1));
        let ab = a.mul(&b);
        assert!(ab > a);
        assert_eq!(ab.mul(&b.inv()), a);
    }
}
