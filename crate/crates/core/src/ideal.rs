//! Ideal closure by worklist search.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::ring::{Elem, FiniteRing};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

/// A subset of a ring closed under addition, negation and multiplication
/// by ring elements on the given side.
///
/// The left ideal generated by the coefficients of a polynomial `g` is the
/// set `I_g` inside which the Duo procedures search for annihilators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    side: Side,
    members: Vec<Elem>,
    mask: Vec<bool>,
    generators: Vec<Elem>,
}

/// A left ideal; see [`Ideal`].
pub type LeftIdeal = Ideal;

impl Ideal {
    pub fn side(&self) -> Side {
        self.side
    }

    /// Members in ascending index order.
    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.mask.get(x.index()).copied().unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_subset_of(&self, other: &Ideal) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }
}

/// Smallest ideal on `side` containing `gens`.
pub fn ideal_generated_by(ring: &FiniteRing, gens: &[Elem], side: Side) -> Result<Ideal> {
    if !ring.is_unital() {
        return Err(Error::NonUnitalUnsupported);
    }
    for g in gens {
        ring.element(g.index())?;
    }
    let k = ring.order();
    let mut mask = vec![false; k];
    let mut members = Vec::with_capacity(k);
    mask[0] = true;
    members.push(Elem::ZERO);
    let mut queue: VecDeque<Elem> = gens.iter().copied().collect();
    while let Some(x) = queue.pop_front() {
        if mask[x.index()] {
            continue;
        }
        mask[x.index()] = true;
        members.push(x);
        let push = |y: Elem, queue: &mut VecDeque<Elem>| {
            if !mask[y.index()] {
                queue.push_back(y);
            }
        };
        for &m in &members {
            push(ring.add(x, m), &mut queue);
        }
        push(ring.neg(x), &mut queue);
        for s in ring.elements() {
            match side {
                Side::Left => push(ring.mul(s, x), &mut queue),
                Side::Right => push(ring.mul(x, s), &mut queue),
                Side::TwoSided => {
                    push(ring.mul(s, x), &mut queue);
                    push(ring.mul(x, s), &mut queue);
                }
            }
        }
    }
    members.sort_unstable();
    Ok(Ideal {
        side,
        members,
        mask,
        generators: gens.to_vec(),
    })
}

pub fn left_ideal_generated_by(ring: &FiniteRing, gens: &[Elem]) -> Result<Ideal> {
    ideal_generated_by(ring, gens, Side::Left)
}

pub fn right_ideal_generated_by(ring: &FiniteRing, gens: &[Elem]) -> Result<Ideal> {
    ideal_generated_by(ring, gens, Side::Right)
}

pub fn two_sided_ideal_generated_by(ring: &FiniteRing, gens: &[Elem]) -> Result<Ideal> {
    ideal_generated_by(ring, gens, Side::TwoSided)
}

/// True iff the ideal absorbs multiplication on both sides.
pub fn is_two_sided(ring: &FiniteRing, ideal: &Ideal) -> bool {
    ideal.members().iter().all(|&x| {
        ring.elements()
            .all(|s| ideal.contains(ring.mul(x, s)) && ideal.contains(ring.mul(s, x)))
    })
}

/// Every two-sided ideal of the ring, ordered by size then members.
///
/// Starts from the zero ideal and closes the family under joining with one
/// more element; every ideal is finitely generated, so all are reached.
pub fn all_two_sided_ideals(ring: &FiniteRing) -> Result<Vec<Ideal>> {
    let zero = two_sided_ideal_generated_by(ring, &[])?;
    let mut found = vec![zero];
    let mut next = 0;
    while next < found.len() {
        let base = found[next].clone();
        next += 1;
        for x in ring.elements() {
            if base.contains(x) {
                continue;
            }
            let mut gens = base.members().to_vec();
            gens.push(x);
            let joined = two_sided_ideal_generated_by(ring, &gens)?;
            if !found.iter().any(|i| i.members == joined.members) {
                found.push(joined);
            }
        }
    }
    for ideal in &mut found {
        ideal.generators = ideal.members.clone();
    }
    found.sort_by(|a, b| {
        a.members
            .len()
            .cmp(&b.members.len())
            .then_with(|| a.members.cmp(&b.members))
    });
    Ok(found)
}
