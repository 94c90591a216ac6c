use crate::error::{Error, Result};
use crate::scalars::Ring;

/// Formal noncommutative expression over generators `e_{i,r}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FreeExpr<S> {
    Gen { color: usize, mode: i32 },
    Unit,
    Prod(Vec<FreeExpr<S>>),
    Sum(Vec<FreeExpr<S>>),
    Scale(S, Box<FreeExpr<S>>),
    /// `[a, b]_λ = a·b − λ·b·a`.
    Comm { lambda: S, left: Box<FreeExpr<S>>, right: Box<FreeExpr<S>> },
}

impl<S: Ring> FreeExpr<S> {
    pub fn gen(color: usize, mode: i32) -> Self {
        FreeExpr::Gen { color, mode }
    }

    pub fn prod(items: Vec<Self>) -> Self {
        match items.len() {
            0 => FreeExpr::Unit,
            1 => items.into_iter().next().unwrap(),
            _ => FreeExpr::Prod(items),
        }
    }

    pub fn sum(items: Vec<Self>) -> Self {
        FreeExpr::Sum(items)
    }

    pub fn scale(c: S, e: Self) -> Self {
        FreeExpr::Scale(c, Box::new(e))
    }

    pub fn comm(lambda: S, a: Self, b: Self) -> Self {
        FreeExpr::Comm { lambda, left: Box::new(a), right: Box::new(b) }
    }

    /// Plain commutator `[a, b]`.
    pub fn bracket(a: Self, b: Self) -> Self {
        Self::comm(S::one(), a, b)
    }

    pub fn pow(e: &Self, p: u32) -> Self {
        Self::prod(vec![e.clone(); p as usize])
    }

    /// Degree vector in `ℕ^n`; errors if a sum mixes gradings.
    pub fn grading(&self, n: usize) -> Result<Vec<u32>> {
        Ok(match self {
            FreeExpr::Gen { color, .. } => {
                if *color == 0 || *color > n {
                    return Err(Error::GradingMismatch(format!("color {color} outside 1..={n}")));
                }
                let mut k = vec![0; n];
                k[color - 1] = 1;
                k
            }
            FreeExpr::Unit => vec![0; n],
            FreeExpr::Prod(items) => {
                let mut k = vec![0; n];
                for it in items {
                    for (a, b) in k.iter_mut().zip(it.grading(n)?) {
                        *a += b;
                    }
                }
                k
            }
            FreeExpr::Sum(items) => {
                let mut out: Option<Vec<u32>> = None;
                for it in items {
                    let g = it.grading(n)?;
                    match &out {
                        Some(o) if *o != g => {
                            return Err(Error::GradingMismatch(format!("sum of {o:?} and {g:?}")));
                        }
                        _ => out = Some(g),
                    }
                }
                out.unwrap_or_else(|| vec![0; n])
            }
            FreeExpr::Scale(_, e) => e.grading(n)?,
            FreeExpr::Comm { left, right, .. } => {
                let a = left.grading(n)?;
                a.iter().zip(right.grading(n)?).map(|(x, y)| x + y).collect()
            }
        })
    }

    /// Renders the expression with leaf name `leaf` (`e` or `y`).
    ///
    /// Nested products, sums and scalings are parenthesized, so the output
    /// determines the tree up to the flattening done by the constructors.
    pub fn render(&self, leaf: &str) -> String {
        let mut s = String::new();
        self.write(&mut s, leaf, Slot::Top);
        s
    }

    fn write(&self, out: &mut String, leaf: &str, slot: Slot) {
        let wrap = match self {
            FreeExpr::Prod(_) | FreeExpr::Scale(..) => slot != Slot::Top && slot != Slot::Summand,
            FreeExpr::Sum(items) => slot != Slot::Top && !items.is_empty(),
            _ => false,
        };
        if wrap {
            out.push('(');
        }
        match self {
            FreeExpr::Gen { color, mode } => out.push_str(&format!("{leaf}({color},{mode})")),
            FreeExpr::Unit => out.push('1'),
            FreeExpr::Prod(items) => {
                for (i, it) in items.iter().enumerate() {
                    if i > 0 {
                        out.push('*');
                    }
                    it.write(out, leaf, Slot::Factor);
                }
            }
            FreeExpr::Sum(items) => {
                if items.is_empty() {
                    out.push('0');
                }
                for (i, it) in items.iter().enumerate() {
                    if i > 0 {
                        out.push('+');
                    }
                    it.write(out, leaf, Slot::Summand);
                }
            }
            FreeExpr::Scale(c, e) => {
                out.push_str(&format!("({c})*"));
                e.write(out, leaf, Slot::Factor);
            }
            FreeExpr::Comm { lambda, left, right } => {
                out.push_str(&format!("comm[{lambda}]("));
                left.write(out, leaf, Slot::Top);
                out.push(',');
                right.write(out, leaf, Slot::Top);
                out.push(')');
            }
        }
        if wrap {
            out.push(')');
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Slot {
    Top,
    Summand,
    Factor,
}
