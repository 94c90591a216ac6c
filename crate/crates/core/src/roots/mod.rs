//! Root-system data: Cartan matrices, positive roots as standard Lyndon
//! words in convex order, Kostant partitions and PBWD keys.

mod kostant;

pub use kostant::{keys_for_partition, kostant_partitions, kp_cmp, pbwd_keys, KostantPartition, PbwdKey};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanType {
    A,
    C,
    D,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CartanType::A => "A",
            CartanType::C => "C",
            CartanType::D => "D",
        })
    }
}

impl std::str::FromStr for CartanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(CartanType::A),
            "C" | "c" => Ok(CartanType::C),
            "D" | "d" => Ok(CartanType::D),
            _ => Err(Error::UnsupportedRank(s.to_string())),
        }
    }
}

/// Shape of a positive root. Indices are 1-based colors.
///
/// Type C: `Segment{i,j}` is `[i,j]` with `j < n` or the simple root `[n]`;
/// `ToN{i}` is `[i,n]` (`i < n`); `Fold{i,j}` is `[i,n,j]` (`i < j < n`);
/// `DoubleFold{i}` is `[i,n,i]`.
/// Type D: `Segment{i,j}` is `[i,j]` with `j ≤ n−1` or `[n]`; `ToN{i}` is
/// `[i,n]` (`i ≤ n−2`); `Fold{i,j}` is `[i,n,j]` (`i < j ≤ n−1`).
/// Type A only uses `Segment`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RootTag {
    Segment { i: usize, j: usize },
    ToN { i: usize },
    Fold { i: usize, j: usize },
    DoubleFold { i: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PositiveRoot {
    /// Position in the convex order (0-based).
    pub index: usize,
    pub tag: RootTag,
    /// Standard Lyndon word.
    pub word: Vec<usize>,
    /// Multiplicity of each simple root.
    pub nu: Vec<u32>,
    /// `(β, β)`.
    pub norm: i32,
    label: String,
}

impl PositiveRoot {
    pub fn height(&self) -> usize {
        self.word.len()
    }

    /// Exponent `t` with `v_β = v^t`.
    pub fn v_exp(&self) -> i32 {
        self.norm / 2
    }

    /// Bracket label such as `[1,3,2]`.
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn is_simple(&self) -> bool {
        self.word.len() == 1
    }

    /// First letter of the word.
    pub fn first(&self) -> usize {
        self.word[0]
    }
}

/// Cartan data of a finite root system together with its positive roots in
/// convex (lexicographic Lyndon) order.
#[derive(Debug)]
pub struct RootSystem {
    pub ty: CartanType,
    pub n: usize,
    cartan: Vec<Vec<i32>>,
    sym: Vec<i32>,
    roots: Vec<PositiveRoot>,
}

pub type Sys = Arc<RootSystem>;

impl RootSystem {
    /// Type C needs `n ≥ 2`, type D `n ≥ 4`, type A `n ≥ 1`.
    pub fn new(ty: CartanType, n: usize) -> Result<Sys> {
        let ok = match ty {
            CartanType::A => n >= 1,
            CartanType::C => n >= 2,
            CartanType::D => n >= 4,
        };
        if !ok || n > 64 {
            return Err(Error::UnsupportedRank(format!("{ty}{n}")));
        }
        let mut a = vec![vec![0i32; n]; n];
        for i in 0..n {
            a[i][i] = 2;
        }
        let mut sym = vec![1i32; n];
        let link = |a: &mut Vec<Vec<i32>>, i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match ty {
            CartanType::A => {
                for i in 0..n - 1 {
                    link(&mut a, i, i + 1);
                }
            }
            CartanType::C => {
                for i in 0..n - 1 {
                    link(&mut a, i, i + 1);
                }
                a[n - 2][n - 1] = -2;
                sym[n - 1] = 2;
            }
            CartanType::D => {
                for i in 0..n - 2 {
                    link(&mut a, i, i + 1);
                }
                link(&mut a, n - 3, n - 1);
            }
        }
        let mut sys = RootSystem { ty, n, cartan: a, sym, roots: Vec::new() };
        sys.roots = sys.build_roots();
        Ok(Arc::new(sys))
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.ty, self.n)
    }

    /// `a_{ij}` for 1-based colors.
    pub fn a(&self, i: usize, j: usize) -> i32 {
        self.cartan[i - 1][j - 1]
    }

    /// `d_i` with `(α_i, α_j) = d_i a_{ij}`.
    pub fn d(&self, i: usize) -> i32 {
        self.sym[i - 1]
    }

    pub fn pairing(&self, i: usize, j: usize) -> i32 {
        self.d(i) * self.a(i, j)
    }

    /// Distinct colors joined by an edge of the Dynkin diagram.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.a(i, j) != 0
    }

    pub fn roots(&self) -> &[PositiveRoot] {
        &self.roots
    }

    pub fn root(&self, idx: usize) -> &PositiveRoot {
        &self.roots[idx]
    }

    pub fn simple_root(&self, i: usize) -> &PositiveRoot {
        self.roots.iter().find(|r| r.word == [i]).expect("simple root")
    }

    pub fn find_by_tag(&self, tag: RootTag) -> Option<&PositiveRoot> {
        self.roots.iter().find(|r| r.tag == tag)
    }

    pub fn find_by_nu(&self, nu: &[u32]) -> Option<&PositiveRoot> {
        self.roots.iter().find(|r| r.nu == nu)
    }

    /// Full name such as `C3:[1,3,2]`.
    pub fn root_name(&self, r: &PositiveRoot) -> String {
        format!("{}:{}", self.name(), r.label)
    }

    /// Parses `[1,3,2]` or `C3:[1,3,2]` (the system prefix must match).
    pub fn parse_root(&self, s: &str) -> Result<&PositiveRoot> {
        let s = s.trim();
        let body = match s.split_once(':') {
            Some((sys, b)) => {
                if sys != self.name() {
                    return Err(Error::UnknownRoot(s.to_string()));
                }
                b
            }
            None => s,
        };
        let compact: String = body.chars().filter(|c| !c.is_whitespace()).collect();
        self.roots.iter().find(|r| r.label == compact).ok_or_else(|| Error::UnknownRoot(s.to_string()))
    }

    /// `(β, γ)` for coefficient vectors.
    pub fn form(&self, x: &[u32], y: &[u32]) -> i32 {
        let mut s = 0;
        for i in 0..self.n {
            for j in 0..self.n {
                s += x[i] as i32 * y[j] as i32 * self.pairing(i + 1, j + 1);
            }
        }
        s
    }

    fn make_root(&self, tag: RootTag) -> PositiveRoot {
        let n = self.n;
        let (word, label): (Vec<usize>, String) = match (self.ty, tag) {
            (_, RootTag::Segment { i, j }) => {
                let l = if i == j { format!("[{i}]") } else { format!("[{i},{j}]") };
                ((i..=j).collect(), l)
            }
            (CartanType::C, RootTag::ToN { i }) => ((i..=n).collect(), format!("[{i},{n}]")),
            (CartanType::D, RootTag::ToN { i }) => {
                let mut w: Vec<usize> = (i..=n - 2).collect();
                w.push(n);
                (w, format!("[{i},{n}]"))
            }
            (CartanType::C, RootTag::Fold { i, j }) => {
                let mut w: Vec<usize> = (i..=n).collect();
                w.extend((j..n).rev());
                (w, format!("[{i},{n},{j}]"))
            }
            (CartanType::D, RootTag::Fold { i, j }) => {
                let mut w: Vec<usize> = (i..=n - 2).collect();
                w.push(n);
                w.extend((j..n).rev());
                (w, format!("[{i},{n},{j}]"))
            }
            (CartanType::C, RootTag::DoubleFold { i }) => {
                let mut w: Vec<usize> = (i..n).collect();
                w.extend(i..n);
                w.push(n);
                (w, format!("[{i},{n},{i}]"))
            }
            _ => unreachable!("tag not valid for type"),
        };
        let mut nu = vec![0u32; n];
        for &c in &word {
            nu[c - 1] += 1;
        }
        let norm = self.form(&nu, &nu);
        PositiveRoot { index: 0, tag, word, nu, norm, label }
    }

    fn build_roots(&self) -> Vec<PositiveRoot> {
        let n = self.n;
        let mut tags = Vec::new();
        match self.ty {
            CartanType::A => {
                for i in 1..=n {
                    for j in i..=n {
                        tags.push(RootTag::Segment { i, j });
                    }
                }
            }
            CartanType::C => {
                for i in 1..n {
                    for j in i..n {
                        tags.push(RootTag::Segment { i, j });
                    }
                    tags.push(RootTag::ToN { i });
                    for j in i + 1..n {
                        tags.push(RootTag::Fold { i, j });
                    }
                    tags.push(RootTag::DoubleFold { i });
                }
                tags.push(RootTag::Segment { i: n, j: n });
            }
            CartanType::D => {
                for i in 1..n {
                    for j in i..n {
                        tags.push(RootTag::Segment { i, j });
                    }
                    if i <= n - 2 {
                        tags.push(RootTag::ToN { i });
                        for j in i + 1..n {
                            tags.push(RootTag::Fold { i, j });
                        }
                    }
                }
                tags.push(RootTag::Segment { i: n, j: n });
            }
        }
        let mut roots: Vec<PositiveRoot> = tags.into_iter().map(|t| self.make_root(t)).collect();
        roots.sort_by(|a, b| a.word.cmp(&b.word));
        for (k, r) in roots.iter_mut().enumerate() {
            r.index = k;
        }
        roots
    }

    /// Positive roots obtained by closing the simple roots under simple
    /// reflections; independent of the word-based construction.
    pub fn brute_force_roots(&self) -> Vec<Vec<u32>> {
        let n = self.n;
        let mut seen: std::collections::BTreeSet<Vec<i64>> = std::collections::BTreeSet::new();
        let mut stack: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut e = vec![0i64; n];
                e[i] = 1;
                e
            })
            .collect();
        while let Some(b) = stack.pop() {
            if !seen.insert(b.clone()) {
                continue;
            }
            for i in 0..n {
                let c: i64 = (0..n).map(|j| self.cartan[i][j] as i64 * b[j]).sum();
                let mut r = b.clone();
                r[i] -= c;
                if r.iter().all(|&x| x >= 0) && r.iter().any(|&x| x > 0) && !seen.contains(&r) {
                    stack.push(r);
                }
            }
        }
        seen.into_iter().map(|v| v.into_iter().map(|x| x as u32).collect()).collect()
    }
}

/// True for a word strictly smaller than each of its proper suffixes.
pub fn is_lyndon(w: &[usize]) -> bool {
    !w.is_empty() && (1..w.len()).all(|k| w < &w[k..])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(sys: &RootSystem) -> Vec<&str> {
        sys.roots().iter().map(|r| r.label()).collect()
    }

    #[test]
    fn c2_and_c3_order() {
        let c2 = RootSystem::new(CartanType::C, 2).unwrap();
        assert_eq!(labels(&c2), ["[1]", "[1,2,1]", "[1,2]", "[2]"]);
        let c3 = RootSystem::new(CartanType::C, 3).unwrap();
        assert_eq!(labels(&c3)[..6], ["[1]", "[1,2]", "[1,3,1]", "[1,3]", "[1,3,2]", "[2]"]);
        assert_eq!(c3.roots().len(), 9);
    }

    #[test]
    fn d4_order() {
        let d4 = RootSystem::new(CartanType::D, 4).unwrap();
        assert_eq!(d4.roots().len(), 12);
        let l = labels(&d4);
        let p = l.iter().position(|s| *s == "[1,4]").unwrap();
        assert_eq!(l[p..p + 3], ["[1,4]", "[1,4,3]", "[1,4,2]"]);
    }

    #[test]
    fn coefficients() {
        let c3 = RootSystem::new(CartanType::C, 3).unwrap();
        let r = c3.parse_root("[1,3,1]").unwrap();
        assert_eq!(r.word, [1, 2, 1, 2, 3]);
        assert_eq!(r.nu, [2, 2, 1]);
        assert_eq!(r.height(), 5);
        let n = c3.parse_root("C3:[3]").unwrap();
        assert_eq!(n.v_exp(), 2);
        let d4 = RootSystem::new(CartanType::D, 4).unwrap();
        let r = d4.parse_root("D4:[1,4,2]").unwrap();
        assert_eq!(r.word, [1, 2, 4, 3, 2]);
        assert_eq!(r.nu, [1, 2, 1, 1]);
        assert!(c3.parse_root("D4:[1]").is_err());
    }

    #[test]
    fn rank_limits() {
        assert!(RootSystem::new(CartanType::D, 3).is_err());
        assert!(RootSystem::new(CartanType::C, 1).is_err());
        assert!(RootSystem::new(CartanType::C, 2).is_ok());
    }

    #[test]
    fn symmetrized_cartan() {
        for (ty, n) in [(CartanType::C, 4), (CartanType::D, 5), (CartanType::A, 3)] {
            let s = RootSystem::new(ty, n).unwrap();
            for i in 1..=n {
                for j in 1..=n {
                    assert_eq!(s.pairing(i, j), s.pairing(j, i));
                }
            }
        }
    }
}
