use super::element::ShuffleElement;
use super::expr::FreeExpr;
use super::flavor::Flavor;
use crate::error::{Error, Result};
use crate::roots::Sys;
use rustc_hash::FxHashMap;
use std::sync::{Arc, Mutex};

type Elem<F> = ShuffleElement<F>;

/// Shuffle algebra over a root system, with a memo of Ψ images.
pub struct ShuffleAlgebra<F: Flavor> {
    pub sys: Sys,
    strict: bool,
    cache: Mutex<FxHashMap<FreeExpr<F::S>, Arc<Elem<F>>>>,
}

impl<F: Flavor> ShuffleAlgebra<F> {
    pub fn new(sys: Sys) -> Self {
        ShuffleAlgebra { sys, strict: false, cache: Mutex::new(FxHashMap::default()) }
    }

    /// Runs the wheel check on every product result.
    pub fn strict(mut self, on: bool) -> Self {
        self.strict = on;
        self
    }

    pub fn n(&self) -> usize {
        self.sys.n
    }

    pub fn unit(&self) -> Elem<F> {
        Elem::unit(self.n())
    }

    pub fn generator(&self, i: usize, r: i32) -> Elem<F> {
        Elem::generator(self.n(), i, r)
    }

    pub fn star(&self, a: &Elem<F>, b: &Elem<F>) -> Result<Elem<F>> {
        let out = a.star(b, &self.sys)?;
        if self.strict {
            if let Some(w) = out.wheel_violation(&self.sys) {
                return Err(Error::ExactDivisionFailure(format!("wheel condition fails in product: {w}")));
            }
        }
        Ok(out)
    }

    /// Left-to-right product of several elements.
    pub fn product(&self, items: &[Elem<F>]) -> Result<Elem<F>> {
        let mut acc = self.unit();
        for it in items {
            acc = self.star(&acc, it)?;
        }
        Ok(acc)
    }

    /// Ψ of an expression.
    pub fn psi(&self, e: &FreeExpr<F::S>) -> Result<Elem<F>> {
        Ok((*self.psi_arc(e)?).clone())
    }

    fn psi_arc(&self, e: &FreeExpr<F::S>) -> Result<Arc<Elem<F>>> {
        if let Some(hit) = self.cache.lock().unwrap().get(e) {
            return Ok(hit.clone());
        }
        let n = self.n();
        let out = match e {
            FreeExpr::Gen { color, mode } => {
                if *color == 0 || *color > n {
                    return Err(Error::GradingMismatch(format!("color {color} outside 1..={n}")));
                }
                Elem::generator(n, *color, *mode)
            }
            FreeExpr::Unit => self.unit(),
            FreeExpr::Prod(items) => {
                let mut acc = self.unit();
                for it in items {
                    let x = self.psi_arc(it)?;
                    acc = self.star(&acc, &x)?;
                }
                acc
            }
            FreeExpr::Sum(items) => {
                let k = e.grading(n)?;
                let mut acc = Elem::zero(k);
                for it in items {
                    let x = self.psi_arc(it)?;
                    acc = acc.add(&x)?;
                }
                acc
            }
            FreeExpr::Scale(c, inner) => self.psi_arc(inner)?.scale(c),
            FreeExpr::Comm { lambda, left, right } => {
                let a = self.psi_arc(left)?;
                let b = self.psi_arc(right)?;
                let ab = self.star(&a, &b)?;
                let ba = self.star(&b, &a)?;
                ab.sub(&ba.scale(lambda))?
            }
        };
        let out = Arc::new(out);
        self.cache.lock().unwrap().insert(e.clone(), out.clone());
        Ok(out)
    }

    pub fn clear_cache(&self) {
        self.cache.lock().unwrap().clear();
    }
}
