//! Exhaustive search for unital rings of small order.
//!
//! The additive group is fixed to each abelian group of the requested order.
//! Left distributivity forces every row of the multiplication table to be an
//! additive endomorphism; right distributivity forces `row(a+b) = row(a) +
//! row(b)`. Rows are assigned one at a time and partial tables violating the
//! second constraint are pruned. Surviving tables go through full validation
//! and are deduplicated up to isomorphism.

use super::iso::are_isomorphic;
use super::{Provenance, RingCorpus};
use crate::error::{Error, Result};
use crate::ring::FiniteRing;

pub const MAX_ENUMERATION_ORDER: usize = 4;

/// Addition tables of the abelian groups of the given order, cyclic first.
pub fn additive_groups(order: usize) -> Result<Vec<Vec<Vec<usize>>>> {
    if order == 0 {
        return Err(Error::InvalidArgument("order must be positive".into()));
    }
    if order > MAX_ENUMERATION_ORDER {
        return Err(Error::OrderTooLarge {
            order,
            max: MAX_ENUMERATION_ORDER,
        });
    }
    let cyclic = (0..order)
        .map(|a| (0..order).map(|b| (a + b) % order).collect())
        .collect();
    let mut groups = vec![cyclic];
    if order == 4 {
        groups.push((0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect());
    }
    Ok(groups)
}

fn endomorphisms(add: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let k = add.len();
    let mut out = Vec::new();
    let mut map = vec![0usize; k];
    let total = k.pow(k as u32 - 1);
    for code in 0..total {
        let mut c = code;
        for slot in map.iter_mut().skip(1) {
            *slot = c % k;
            c /= k;
        }
        let additive = (0..k).all(|x| (0..k).all(|y| map[add[x][y]] == add[map[x]][map[y]]));
        if additive {
            out.push(map.clone());
        }
    }
    out
}

fn search_rows(
    add: &[Vec<usize>],
    endos: &[Vec<usize>],
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    let k = add.len();
    let a = rows.len();
    if a == k {
        out.push(rows.clone());
        return;
    }
    for endo in endos {
        rows.push(endo.clone());
        let ok = (0..=a).all(|b| {
            (0..=a).all(|c| {
                let s = add[b][c];
                s > a || (0..k).all(|x| rows[s][x] == add[rows[b][x]][rows[c][x]])
            })
        });
        if ok {
            search_rows(add, endos, rows, out);
        }
        rows.pop();
    }
}

/// All unital rings of `order <= 4`, one per isomorphism class, named
/// `order<k>:<i>`.
pub fn enumerate_unital_rings(order: usize) -> Result<RingCorpus> {
    let mut classes: Vec<FiniteRing> = Vec::new();
    for add in additive_groups(order)? {
        let endos = endomorphisms(&add);
        let mut tables = Vec::new();
        let mut rows = vec![vec![0; order]];
        search_rows(&add, &endos, &mut rows, &mut tables);
        for mul in tables {
            let name = format!("order{order}:{}", classes.len());
            let Ok(ring) = FiniteRing::from_tables(name, &add, &mul, true) else {
                continue;
            };
            if !classes.iter().any(|c| are_isomorphic(c, &ring)) {
                classes.push(ring);
            }
        }
    }
    let mut corpus = RingCorpus::new();
    for ring in classes {
        corpus.push(ring, Provenance::Enumerated)?;
    }
    Ok(corpus)
}
