//! Bounded checks of the properties quantified over polynomial pairs.

use rayon::prelude::*;

use super::{McCoyBound, Verdict, Witness};
use crate::poly::{nonzero_coefficient_vectors, product_is_zero};
use crate::ring::FiniteRing;

fn has_nonzero_right_annihilator(r: &FiniteRing, f: &[crate::ring::Elem]) -> bool {
    r.nonzero_elements()
        .any(|x| f.iter().all(|&a| r.mul(a, x).is_zero()))
}

fn has_nonzero_left_annihilator(r: &FiniteRing, g: &[crate::ring::Elem]) -> bool {
    r.nonzero_elements()
        .any(|x| g.iter().all(|&b| r.mul(x, b).is_zero()))
}

/// Every nonzero `f` (deg <= m) killed on the right by a nonzero `g`
/// (deg <= n) has a nonzero ring element `r` with `f*r = 0`.
///
/// Only `f` without a nonzero right annihilator can fail, so those are the
/// only ones paired against every `g`.
pub fn is_right_mccoy_up_to(r: &FiniteRing, bound: McCoyBound) -> Verdict {
    let fs = nonzero_coefficient_vectors(r, bound.m());
    let gs = nonzero_coefficient_vectors(r, bound.n());
    let hit = fs.par_iter().find_map_first(|f| {
        if has_nonzero_right_annihilator(r, f) {
            return None;
        }
        gs.iter()
            .find(|g| product_is_zero(r, f, g))
            .map(|g| (f.clone(), g.clone()))
    });
    match hit {
        Some((f, g)) => Verdict::Fails(Witness::NoRightAnnihilator { f, g }),
        None => Verdict::HoldsUpTo(bound),
    }
}

/// Mirror of [`is_right_mccoy_up_to`]: `f*g = 0` gives a nonzero `r` with
/// `r*g = 0`.
pub fn is_left_mccoy_up_to(r: &FiniteRing, bound: McCoyBound) -> Verdict {
    let fs = nonzero_coefficient_vectors(r, bound.m());
    let gs = nonzero_coefficient_vectors(r, bound.n());
    let hit = gs.par_iter().find_map_first(|g| {
        if has_nonzero_left_annihilator(r, g) {
            return None;
        }
        fs.iter()
            .find(|f| product_is_zero(r, f, g))
            .map(|f| (f.clone(), g.clone()))
    });
    match hit {
        Some((f, g)) => Verdict::Fails(Witness::NoLeftAnnihilator { f, g }),
        None => Verdict::HoldsUpTo(bound),
    }
}

/// Both sides at the same bound.
pub fn is_mccoy_up_to(r: &FiniteRing, bound: McCoyBound) -> Verdict {
    match is_right_mccoy_up_to(r, bound) {
        Verdict::HoldsUpTo(_) => is_left_mccoy_up_to(r, bound),
        other => other,
    }
}

fn exact(v: Verdict) -> Verdict {
    match v {
        Verdict::HoldsUpTo(_) => Verdict::Holds,
        other => other,
    }
}

/// Linear McCoy on both sides; linear polynomials are exhausted, so this is
/// exact.
pub fn is_linearly_mccoy(r: &FiniteRing) -> Verdict {
    exact(is_mccoy_up_to(r, McCoyBound::LINEAR))
}

pub fn is_right_linearly_mccoy(r: &FiniteRing) -> Verdict {
    exact(is_right_mccoy_up_to(r, McCoyBound::LINEAR))
}

/// `f*g = 0` forces every coefficient product `a_i*b_j` to vanish.
pub fn is_armendariz_up_to(r: &FiniteRing, bound: McCoyBound) -> Verdict {
    let fs = nonzero_coefficient_vectors(r, bound.m());
    let gs = nonzero_coefficient_vectors(r, bound.n());
    let hit = fs.par_iter().find_map_first(|f| {
        gs.iter().find_map(|g| {
            if !product_is_zero(r, f, g) {
                return None;
            }
            f.iter().enumerate().find_map(|(i, &a)| {
                g.iter().position(|&b| !r.mul(a, b).is_zero()).map(|j| {
                    Witness::CoefficientProduct {
                        f: f.clone(),
                        g: g.clone(),
                        i,
                        j,
                    }
                })
            })
        })
    });
    match hit {
        Some(w) => Verdict::Fails(w),
        None => Verdict::HoldsUpTo(bound),
    }
}

pub fn is_linearly_armendariz(r: &FiniteRing) -> Verdict {
    exact(is_armendariz_up_to(r, McCoyBound::LINEAR))
}
