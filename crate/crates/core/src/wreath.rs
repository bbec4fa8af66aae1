//! Finite truncations `F wr Z/n` of the wreath product `F wr Z`.
//!
//! An element is a pair `(f, s)` with `f: Z/n -> F` and `s` in `Z/n`, and
//!
//! ```text
//! (f, s) * (g, r) = (i -> f(i) * g(i - s), s + r)
//! ```
//!
//! The shift `t = (1, 1)` conjugates the copy `F_i` onto `F_{i+1}`. Killing `t`
//! in a quotient identifies all copies, and since distinct copies commute the
//! image of `F` becomes abelian: the quotient by the normal closure of `t` is
//! `F / [F, F]`.

use crate::error::{Error, Result};
use crate::groups::{self, FiniteGroup, Group};

/// Default bound on the order of a wreath product.
pub const DEFAULT_BUDGET: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WreathElement {
    pub base: Vec<usize>,
    pub shift: usize,
}

/// `F wr Z/n`, with elements numbered `shift * |F|^n + sum_i base[i] * |F|^i`.
#[derive(Debug, Clone)]
pub struct WreathProduct {
    factor: FiniteGroup,
    copies: usize,
    base_order: usize,
    order: usize,
}

impl WreathProduct {
    pub fn new(factor: FiniteGroup, copies: usize, budget: usize) -> Result<Self> {
        if copies == 0 {
            return Err(Error::MissingData("a wreath product needs at least one copy"));
        }
        let order = (factor.order() as u128)
            .checked_pow(copies as u32)
            .and_then(|b| b.checked_mul(copies as u128));
        match order {
            Some(o) if o <= budget as u128 => Ok(WreathProduct {
                base_order: o as usize / copies,
                order: o as usize,
                factor,
                copies,
            }),
            Some(o) => Err(Error::BudgetExceeded { order: o, budget }),
            None => Err(Error::BudgetExceeded { order: u128::MAX, budget }),
        }
    }

    pub fn factor(&self) -> &FiniteGroup {
        &self.factor
    }

    pub fn copies(&self) -> usize {
        self.copies
    }

    pub fn element(&self, index: usize) -> WreathElement {
        let k = self.factor.order();
        let mut rest = index % self.base_order;
        let base = (0..self.copies)
            .map(|_| {
                let d = rest % k;
                rest /= k;
                d
            })
            .collect();
        WreathElement { base, shift: index / self.base_order }
    }

    pub fn index(&self, e: &WreathElement) -> usize {
        let k = self.factor.order();
        let base = e.base.iter().rev().fold(0, |acc, &d| acc * k + d);
        e.shift * self.base_order + base
    }

    /// The shift generator `t`.
    pub fn shift(&self) -> usize {
        self.index(&shift_element(self.copies))
    }

    /// `x` placed in copy `position`.
    pub fn in_copy(&self, x: usize, position: usize) -> usize {
        self.index(&copy_element(&self.factor, self.copies, x, position))
    }

    /// Generators of `F` in copy 0, followed by `t`.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens: Vec<usize> =
            self.factor.generators().into_iter().map(|x| self.in_copy(x, 0)).collect();
        gens.push(self.shift());
        gens
    }
}

impl Group for WreathProduct {
    fn order(&self) -> usize {
        self.order
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        let p = multiply(&self.factor, &self.element(a), &self.element(b));
        self.index(&p)
    }

    fn inv(&self, a: usize) -> usize {
        self.index(&invert(&self.factor, &self.element(a)))
    }
}

pub fn multiply(factor: &FiniteGroup, a: &WreathElement, b: &WreathElement) -> WreathElement {
    let n = a.base.len();
    let base = (0..n).map(|i| factor.mul(a.base[i], b.base[(i + n - a.shift) % n])).collect();
    WreathElement { base, shift: (a.shift + b.shift) % n }
}

/// `(f, s)^-1 = (i -> f(i + s)^-1, -s)`.
pub fn invert(factor: &FiniteGroup, a: &WreathElement) -> WreathElement {
    let n = a.base.len();
    let base = (0..n).map(|i| factor.inv(a.base[(i + a.shift) % n])).collect();
    WreathElement { base, shift: (n - a.shift) % n }
}

fn identity_element(copies: usize) -> WreathElement {
    WreathElement { base: vec![0; copies], shift: 0 }
}

fn shift_element(copies: usize) -> WreathElement {
    WreathElement { base: vec![0; copies], shift: 1 % copies }
}

fn copy_element(factor: &FiniteGroup, copies: usize, x: usize, position: usize) -> WreathElement {
    debug_assert!(x < factor.order());
    let mut e = identity_element(copies);
    e.base[position % copies] = x;
    e
}

/// `F wr Z/n` within [`DEFAULT_BUDGET`].
pub fn wreath_product(factor: &FiniteGroup, copies: usize) -> Result<WreathProduct> {
    WreathProduct::new(factor.clone(), copies, DEFAULT_BUDGET)
}

/// Checks that `[t x t^-1, y]` is trivial for all `x, y` in copy 0.
///
/// Works on elements directly, so no size budget applies.
pub fn meskin_identity_check(factor: &FiniteGroup, copies: usize) -> Result<bool> {
    if copies < 2 {
        return Err(Error::TrivialShift);
    }
    let t = shift_element(copies);
    let t_inv = invert(factor, &t);
    let identity = identity_element(copies);
    for x in 0..factor.order() {
        let x0 = copy_element(factor, copies, x, 0);
        let txt = multiply(factor, &multiply(factor, &t, &x0), &t_inv);
        let txt_inv = invert(factor, &txt);
        for y in 0..factor.order() {
            let y0 = copy_element(factor, copies, y, 0);
            let y0_inv = invert(factor, &y0);
            let c = multiply(
                factor,
                &multiply(factor, &multiply(factor, &txt, &y0), &txt_inv),
                &y0_inv,
            );
            if c != identity {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `(F wr Z/n) / <<t>>`, checked to be isomorphic to `F / [F, F]`.
pub fn quotient_by_shift(factor: &FiniteGroup, copies: usize) -> Result<FiniteGroup> {
    quotient_by_shift_with_budget(factor, copies, DEFAULT_BUDGET)
}

pub fn quotient_by_shift_with_budget(
    factor: &FiniteGroup,
    copies: usize,
    budget: usize,
) -> Result<FiniteGroup> {
    if copies < 2 {
        return Err(Error::TrivialShift);
    }
    let g = WreathProduct::new(factor.clone(), copies, budget)?;
    let closure = groups::normal_closure(&g, &g.generators(), &[g.shift()]);
    let q = groups::quotient(&g, &closure)?;
    let ab = factor.abelianization()?;
    if !q.is_abelian() {
        return Err(Error::Internal("quotient by the shift is not abelian".into()));
    }
    if q.order() * factor.derived_subgroup().len() != factor.order() {
        return Err(Error::Internal(format!(
            "quotient by the shift has order {}, expected |F/[F,F]| = {}",
            q.order(),
            ab.order()
        )));
    }
    if !groups::abelian_isomorphic(&q, &ab) {
        return Err(Error::Internal("quotient by the shift differs from F/[F,F]".into()));
    }
    Ok(q)
}
