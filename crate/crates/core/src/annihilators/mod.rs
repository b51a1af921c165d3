//! Ring-element annihilators of polynomial zero divisors.
//!
//! Given nonzero `f`, `g` over a ring with `f*g = 0`, this module produces
//! elements `l` with `l*g = 0` and `r` with `f*r = 0`: closed power formulas
//! on the constant and leading coefficients, and reduction procedures that
//! always return a nonzero `r` on one-sided Duo rings, together with a trace
//! of every reduction. An exhaustive scan serves as ground truth.

mod procedures;
mod trace;

use rayon::prelude::*;

pub use trace::{replay, AnnihilatorTrace, Method, Outcome, Step, StepKind};

use crate::error::{Error, Result};
use crate::ideal::left_ideal_generated_by;
use crate::poly::{
    left_annihilates, nonzero_coefficient_vectors, product_is_zero, right_annihilates, Polynomial,
};
use crate::properties::{is_left_duo, is_right_duo, is_semicommutative};
use crate::ring::{Elem, FiniteRing};

/// Which proof the left Duo procedure follows.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Variant {
    #[default]
    Alternative,
    Induction,
}

impl Variant {
    pub fn method(self) -> Method {
        match self {
            Variant::Alternative => Method::LeftDuoAlternative,
            Variant::Induction => Method::LeftDuoInduction,
        }
    }
}

/// Value of a power formula. Zero values are legitimate annihilators and are
/// reported as such.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FormulaValue {
    pub value: Elem,
    pub is_zero: bool,
}

impl FormulaValue {
    fn new(value: Elem) -> Self {
        FormulaValue {
            value,
            is_zero: value.is_zero(),
        }
    }
}

/// Annihilator computations over one ring, with its Duo flags cached.
pub struct AnnihilatorSolver<'r> {
    ring: &'r FiniteRing,
    semicommutative: bool,
    left_duo: bool,
    right_duo: bool,
}

impl<'r> AnnihilatorSolver<'r> {
    pub fn new(ring: &'r FiniteRing) -> Self {
        AnnihilatorSolver {
            ring,
            semicommutative: is_semicommutative(ring).holds(),
            left_duo: is_left_duo(ring).holds(),
            right_duo: is_right_duo(ring).holds(),
        }
    }

    pub fn ring(&self) -> &'r FiniteRing {
        self.ring
    }

    pub fn is_semicommutative(&self) -> bool {
        self.semicommutative
    }

    pub fn is_left_duo(&self) -> bool {
        self.left_duo
    }

    pub fn is_right_duo(&self) -> bool {
        self.right_duo
    }

    fn coeffs<'p>(&self, p: &'p Polynomial<'_>) -> Result<&'p [Elem]> {
        if !std::ptr::eq(p.ring(), self.ring) && p.ring() != self.ring {
            return Err(Error::RingMismatch);
        }
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(p.coeffs())
    }

    fn pair<'p>(
        &self,
        f: &'p Polynomial<'_>,
        g: &'p Polynomial<'_>,
    ) -> Result<(&'p [Elem], &'p [Elem])> {
        let (f, g) = (self.coeffs(f)?, self.coeffs(g)?);
        if !product_is_zero(self.ring, f, g) {
            return Err(Error::ProductNotZero);
        }
        Ok((f, g))
    }

    /// All `r` with `f*r = 0`, zero included, in index order.
    pub fn oracle_right_annihilators(&self, f: &Polynomial<'_>) -> Result<Vec<Elem>> {
        let f = self.coeffs(f)?;
        Ok(self
            .ring
            .elements()
            .filter(|&r| right_annihilates(self.ring, f, r))
            .collect())
    }

    pub fn verify_annihilation(&self, f: &Polynomial<'_>, r: Elem) -> bool {
        right_annihilates(self.ring, f.coeffs(), r)
    }

    pub fn verify_left(&self, l: Elem, g: &Polynomial<'_>) -> bool {
        left_annihilates(self.ring, l, g.coeffs())
    }

    /// `(a0^(n+1), am^(n+1))` with `n = deg g`; both kill `g` from the left
    /// on semi-commutative rings.
    pub fn left_power_annihilators(
        &self,
        f: &Polynomial<'_>,
        g: &Polynomial<'_>,
    ) -> Result<(FormulaValue, FormulaValue)> {
        let (fc, gc) = self.pair(f, g)?;
        if !self.semicommutative {
            return Err(Error::NotSemicommutative);
        }
        let e = gc.len() as u32;
        let low = self.ring.pow(fc[0], e);
        let high = self.ring.pow(fc[fc.len() - 1], e);
        for (name, l) in [("a0", low), ("am", high)] {
            if !left_annihilates(self.ring, l, gc) {
                return Err(Error::FormulaFailed(format!("{name}^{e}*g != 0")));
            }
        }
        Ok((FormulaValue::new(low), FormulaValue::new(high)))
    }

    /// `(b0^(m+1), bn^(m+1))` with `m = deg f`; both kill `f` from the right
    /// on one-sided Duo rings.
    pub fn right_power_annihilators(
        &self,
        f: &Polynomial<'_>,
        g: &Polynomial<'_>,
    ) -> Result<(FormulaValue, FormulaValue)> {
        let (fc, gc) = self.pair(f, g)?;
        if !self.left_duo && !self.right_duo {
            return Err(Error::NotOneSidedDuo);
        }
        let e = fc.len() as u32;
        let low = self.ring.pow(gc[0], e);
        let high = self.ring.pow(gc[gc.len() - 1], e);
        for (name, r) in [("b0", low), ("bn", high)] {
            if !right_annihilates(self.ring, fc, r) {
                return Err(Error::FormulaFailed(format!("f*{name}^{e} != 0")));
            }
        }
        Ok((FormulaValue::new(low), FormulaValue::new(high)))
    }

    /// `a0^(j+1)*b_j` for `j = 0..=deg g`; all zero on semi-commutative rings.
    pub fn left_power_ladder(&self, f: &Polynomial<'_>, g: &Polynomial<'_>) -> Vec<Elem> {
        let a0 = f.constant_term();
        g.coeffs()
            .iter()
            .enumerate()
            .map(|(j, &b)| self.ring.mul(self.ring.pow(a0, j as u32 + 1), b))
            .collect()
    }

    /// `a_k*b0^(k+1)` for `k = 0..=deg f`; all zero on one-sided Duo rings.
    pub fn right_power_ladder(&self, f: &Polynomial<'_>, g: &Polynomial<'_>) -> Vec<Elem> {
        let b0 = g.constant_term();
        f.coeffs()
            .iter()
            .enumerate()
            .map(|(k, &a)| self.ring.mul(a, self.ring.pow(b0, k as u32 + 1)))
            .collect()
    }

    /// Nonzero right annihilator of `f` inside the left ideal of `g`, for
    /// right Duo rings.
    pub fn right_duo_annihilator(
        &self,
        f: &Polynomial<'_>,
        g: &Polynomial<'_>,
    ) -> Result<AnnihilatorTrace> {
        let (fc, gc) = self.pair(f, g)?;
        if !self.right_duo {
            return Err(Error::NotRightDuo);
        }
        procedures::right_duo(self.ring, fc, gc)
    }

    /// Nonzero right annihilator of `f` inside the left ideal of `g`, for
    /// left Duo rings.
    pub fn left_duo_annihilator(
        &self,
        f: &Polynomial<'_>,
        g: &Polynomial<'_>,
        variant: Variant,
    ) -> Result<AnnihilatorTrace> {
        let (fc, gc) = self.pair(f, g)?;
        if !self.left_duo {
            return Err(Error::NotLeftDuo);
        }
        Ok(match variant {
            Variant::Alternative => procedures::left_duo_alternative(self.ring, fc, gc),
            Variant::Induction => procedures::left_duo_induction(self.ring, fc, gc),
        })
    }

    /// First nonzero right annihilator by exhaustive scan, preferring the
    /// left ideal of `g`.
    pub fn oracle_annihilator(
        &self,
        f: &Polynomial<'_>,
        g: &Polynomial<'_>,
    ) -> Result<AnnihilatorTrace> {
        let (fc, gc) = self.pair(f, g)?;
        Ok(procedures::oracle(self.ring, fc, gc))
    }

    /// Runs every procedure whose precondition the ring meets.
    pub fn all_procedures(
        &self,
        f: &Polynomial<'_>,
        g: &Polynomial<'_>,
    ) -> Result<Vec<AnnihilatorTrace>> {
        let mut out = Vec::new();
        if self.right_duo {
            out.push(self.right_duo_annihilator(f, g)?);
        }
        if self.left_duo {
            out.push(self.left_duo_annihilator(f, g, Variant::Alternative)?);
            out.push(self.left_duo_annihilator(f, g, Variant::Induction)?);
        }
        Ok(out)
    }
}

/// Outcome of running the procedures over every annihilating pair up to a
/// degree bound.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Certification {
    pub pairs: usize,
    pub runs: usize,
    /// Traces that stalled, returned nothing, or returned an element that is
    /// zero, not an annihilator, or outside the ideal of `g`.
    pub failures: Vec<AnnihilatorTrace>,
}

/// Checks one trace's answer against the original pair.
pub fn is_sound(ring: &FiniteRing, trace: &AnnihilatorTrace) -> bool {
    let Some(r) = trace.result() else {
        return false;
    };
    !trace.stalled()
        && !r.is_zero()
        && right_annihilates(ring, &trace.f, r)
        && left_ideal_generated_by(ring, &trace.g).is_ok_and(|i| i.contains(r))
}

/// Runs every applicable procedure on every pair `f*g = 0` with
/// `deg f <= max_f`, `deg g <= max_g`, in parallel over `f`.
pub fn certify(ring: &FiniteRing, max_f: usize, max_g: usize) -> Result<Certification> {
    let solver = AnnihilatorSolver::new(ring);
    let fs = nonzero_coefficient_vectors(ring, max_f);
    let gs = nonzero_coefficient_vectors(ring, max_g);
    let parts: Vec<Result<Certification>> = fs
        .par_iter()
        .map(|fc| {
            let mut part = Certification::default();
            let f = Polynomial::new(ring, fc.clone());
            for gc in gs.iter().filter(|gc| product_is_zero(ring, fc, gc)) {
                let g = Polynomial::new(ring, gc.clone());
                part.pairs += 1;
                for trace in solver.all_procedures(&f, &g)? {
                    part.runs += 1;
                    if !is_sound(ring, &trace) {
                        part.failures.push(trace);
                    }
                }
            }
            Ok(part)
        })
        .collect();
    let mut total = Certification::default();
    for part in parts {
        let part = part?;
        total.pairs += part.pairs;
        total.runs += part.runs;
        total.failures.extend(part.failures);
    }
    Ok(total)
}
