//! Test-side arithmetic written against the raw tables only, so library
//! results can be checked without trusting library polynomial or ideal code.
#![allow(dead_code)]

use std::collections::BTreeSet;

use ringlab::{Elem, FiniteRing};

pub fn mul(r: &FiniteRing, a: usize, b: usize) -> usize {
    r.mul(Elem::new(a), Elem::new(b)).index()
}

pub fn add(r: &FiniteRing, a: usize, b: usize) -> usize {
    r.add(Elem::new(a), Elem::new(b)).index()
}

/// Product coefficients, untrimmed.
pub fn poly_mul(r: &FiniteRing, f: &[usize], g: &[usize]) -> Vec<usize> {
    let mut out = vec![0; (f.len() + g.len()).saturating_sub(1)];
    for (i, &a) in f.iter().enumerate() {
        for (j, &b) in g.iter().enumerate() {
            out[i + j] = add(r, out[i + j], mul(r, a, b));
        }
    }
    out
}

pub fn is_zero(v: &[usize]) -> bool {
    v.iter().all(|&x| x == 0)
}

pub fn kills_right(r: &FiniteRing, f: &[usize], x: usize) -> bool {
    f.iter().all(|&a| mul(r, a, x) == 0)
}

pub fn kills_left(r: &FiniteRing, x: usize, g: &[usize]) -> bool {
    g.iter().all(|&b| mul(r, x, b) == 0)
}

/// `{x : f*x = 0}` by scanning.
pub fn right_annihilators(r: &FiniteRing, f: &[usize]) -> BTreeSet<usize> {
    (0..r.order()).filter(|&x| kills_right(r, f, x)).collect()
}

/// Left ideal generated by `gens`: the additive closure of `{s*g}`.
pub fn left_ideal(r: &FiniteRing, gens: &[usize]) -> BTreeSet<usize> {
    let mut set: BTreeSet<usize> = BTreeSet::from([0]);
    let products: BTreeSet<usize> = gens
        .iter()
        .flat_map(|&g| (0..r.order()).map(move |s| (s, g)))
        .map(|(s, g)| mul(r, s, g))
        .collect();
    loop {
        let next: BTreeSet<usize> = set
            .iter()
            .flat_map(|&x| products.iter().map(move |&p| (x, p)))
            .map(|(x, p)| add(r, x, p))
            .chain(set.iter().copied())
            .collect();
        if next == set {
            return set;
        }
        set = next;
    }
}

/// Every coefficient vector with nonzero leading term and degree at most
/// `d`, via a plain odometer.
pub fn polys(order: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for len in 1..=d + 1 {
        let mut v = vec![0; len];
        loop {
            if v[len - 1] != 0 {
                out.push(v.clone());
            }
            let mut i = 0;
            while i < len {
                v[i] += 1;
                if v[i] < order {
                    break;
                }
                v[i] = 0;
                i += 1;
            }
            if i == len {
                break;
            }
        }
    }
    out
}

pub fn pow(r: &FiniteRing, a: usize, e: u32) -> usize {
    (1..e).fold(a, |acc, _| mul(r, acc, a))
}

pub fn elems(v: &[usize]) -> Vec<Elem> {
    v.iter().map(|&x| Elem::new(x)).collect()
}

pub fn indices(v: &[Elem]) -> Vec<usize> {
    v.iter().map(|x| x.index()).collect()
}
