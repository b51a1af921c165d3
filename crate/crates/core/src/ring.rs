//! Finite rings given by explicit addition and multiplication tables.
//!
//! A [`FiniteRing`] is only ever built through validation: the additive table
//! must be an abelian group, multiplication must be associative and
//! distribute over addition on both sides. Element `0` is always the additive
//! identity; tables whose identity sits elsewhere are relabelled.

use std::fmt;

use crate::error::{Error, Result};

/// Largest order accepted by validation. Associativity is checked with a
/// cubic loop, so this keeps construction interactive.
pub const MAX_ORDER: usize = 256;

/// An element of a finite ring, identified by its table index.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);

    #[inline]
    pub fn new(index: usize) -> Self {
        Elem(index as u32)
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A validated finite ring. Immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteRing {
    name: String,
    order: usize,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    one: Option<Elem>,
}

/// Ring names are used as tokens in line-oriented reports, so they may not
/// contain whitespace.
pub fn validate_name(name: &str) -> Result<()> {
    if name.is_empty() || name.chars().any(|c| c.is_whitespace() || c.is_control()) {
        return Err(Error::InvalidName(name.to_string()));
    }
    Ok(())
}

impl FiniteRing {
    /// Validates raw tables and builds a ring.
    ///
    /// With `unital` set, a two-sided identity is searched for and its
    /// absence is an error. Without it the ring is treated as a ring without
    /// unity even if an identity happens to exist.
    pub fn from_tables(
        name: impl Into<String>,
        add: &[Vec<usize>],
        mul: &[Vec<usize>],
        unital: bool,
    ) -> Result<Self> {
        let name = name.into();
        validate_name(&name)?;
        let order = add.len();
        if order == 0 {
            return Err(Error::Shape("ring must have at least one element".into()));
        }
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order,
                max: MAX_ORDER,
            });
        }
        if mul.len() != order {
            return Err(Error::Shape(format!(
                "addition table has {} rows but multiplication table has {}",
                order,
                mul.len()
            )));
        }
        let mut add_flat = Vec::with_capacity(order * order);
        let mut mul_flat = Vec::with_capacity(order * order);
        for (table, flat, label) in [
            (add, &mut add_flat, "addition"),
            (mul, &mut mul_flat, "multiplication"),
        ] {
            for (row, entries) in table.iter().enumerate() {
                if entries.len() != order {
                    return Err(Error::Shape(format!(
                        "{label} row {row} has {} entries, expected {order}",
                        entries.len()
                    )));
                }
                for (col, &value) in entries.iter().enumerate() {
                    if value >= order {
                        return Err(Error::OutOfRange {
                            row,
                            col,
                            value,
                            order,
                        });
                    }
                    flat.push(Elem::new(value));
                }
            }
        }
        Self::from_flat(name, order, add_flat, mul_flat, unital)
    }

    /// Same as [`FiniteRing::from_tables`] but on row-major flat tables whose
    /// entries are already known to be in range.
    pub(crate) fn from_flat(
        name: String,
        order: usize,
        mut add: Vec<Elem>,
        mut mul: Vec<Elem>,
        unital: bool,
    ) -> Result<Self> {
        debug_assert_eq!(add.len(), order * order);
        debug_assert_eq!(mul.len(), order * order);

        let zero = (0..order)
            .find(|&z| {
                (0..order)
                    .all(|x| add[z * order + x].index() == x && add[x * order + z].index() == x)
            })
            .ok_or_else(|| Error::NotAGroup("no additive identity".into()))?;
        if zero != 0 {
            let mut perm: Vec<usize> = (0..order).collect();
            perm.swap(0, zero);
            add = relabel(&add, order, &perm);
            mul = relabel(&mul, order, &perm);
        }

        let at = |t: &[Elem], a: usize, b: usize| t[a * order + b].index();

        let mut neg = vec![Elem::ZERO; order];
        for (a, slot) in neg.iter_mut().enumerate() {
            for b in 0..order {
                if at(&add, a, b) != at(&add, b, a) {
                    return Err(Error::NotAGroup(format!("{a}+{b} != {b}+{a}")));
                }
            }
            let inv = (0..order)
                .find(|&b| at(&add, a, b) == 0)
                .ok_or_else(|| Error::NotAGroup(format!("element {a} has no additive inverse")))?;
            *slot = Elem::new(inv);
        }
        for a in 0..order {
            for b in 0..order {
                let ab = at(&add, a, b);
                for c in 0..order {
                    if at(&add, ab, c) != at(&add, a, at(&add, b, c)) {
                        return Err(Error::NotAGroup(format!(
                            "addition is not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }

        for a in 0..order {
            for b in 0..order {
                let ab = at(&mul, a, b);
                for c in 0..order {
                    if at(&mul, ab, c) != at(&mul, a, at(&mul, b, c)) {
                        return Err(Error::NotAssociative { a, b, c });
                    }
                }
            }
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    let bc = at(&add, b, c);
                    let left = at(&mul, a, bc);
                    let left_expected = at(&add, at(&mul, a, b), at(&mul, a, c));
                    let right = at(&mul, bc, a);
                    let right_expected = at(&add, at(&mul, b, a), at(&mul, c, a));
                    if left != left_expected || right != right_expected {
                        return Err(Error::NotDistributive { a, b, c });
                    }
                }
            }
        }
        for a in 0..order {
            if at(&mul, 0, a) != 0 || at(&mul, a, 0) != 0 {
                return Err(Error::ZeroNotAbsorbing(a));
            }
        }

        let one = if unital {
            let u = (0..order)
                .find(|&u| (0..order).all(|x| at(&mul, u, x) == x && at(&mul, x, u) == x))
                .ok_or(Error::NoUnity)?;
            Some(Elem::new(u))
        } else {
            None
        };

        Ok(FiniteRing {
            name,
            order,
            add,
            mul,
            neg,
            one,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Returns a copy of the ring under a different name.
    pub fn renamed(&self, name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        validate_name(&name)?;
        Ok(FiniteRing {
            name,
            ..self.clone()
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn one(&self) -> Option<Elem> {
        self.one
    }

    #[inline]
    pub fn is_unital(&self) -> bool {
        self.one.is_some()
    }

    pub fn elements(&self) -> impl DoubleEndedIterator<Item = Elem> + ExactSizeIterator + Clone {
        (0..self.order).map(Elem::new)
    }

    pub fn nonzero_elements(&self) -> impl DoubleEndedIterator<Item = Elem> + Clone {
        (1..self.order).map(Elem::new)
    }

    /// Checks an index and turns it into an element of this ring.
    pub fn element(&self, index: usize) -> Result<Elem> {
        if index < self.order {
            Ok(Elem::new(index))
        } else {
            Err(Error::ElementOutOfRange {
                index,
                order: self.order,
            })
        }
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a.index() * self.order + b.index()]
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a.index() * self.order + b.index()]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a.index()]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// `a` raised to the power `e` by repeated multiplication.
    ///
    /// Panics if `e == 0`; exponents start at one so that rings without
    /// unity are covered.
    pub fn pow(&self, a: Elem, e: u32) -> Elem {
        assert!(e >= 1, "exponent must be at least 1");
        let mut acc = a;
        for _ in 1..e {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// `a * b * c`, grouped left to right.
    #[inline]
    pub fn mul3(&self, a: Elem, b: Elem, c: Elem) -> Elem {
        self.mul(self.mul(a, b), c)
    }

    pub fn is_idempotent(&self, a: Elem) -> bool {
        self.mul(a, a) == a
    }

    /// True if some power of `a` vanishes. Powers of an element of a finite
    /// ring cycle within `order` steps.
    pub fn is_nilpotent(&self, a: Elem) -> bool {
        let mut p = a;
        for _ in 0..=self.order {
            if p.is_zero() {
                return true;
            }
            p = self.mul(p, a);
        }
        false
    }

    pub fn is_central(&self, a: Elem) -> bool {
        self.elements().all(|x| self.mul(a, x) == self.mul(x, a))
    }

    /// Row-major addition table as plain indices.
    pub fn add_table(&self) -> Vec<Vec<usize>> {
        self.table_rows(&self.add)
    }

    /// Row-major multiplication table as plain indices.
    pub fn mul_table(&self) -> Vec<Vec<usize>> {
        self.table_rows(&self.mul)
    }

    fn table_rows(&self, t: &[Elem]) -> Vec<Vec<usize>> {
        t.chunks(self.order)
            .map(|row| row.iter().map(|e| e.index()).collect())
            .collect()
    }
}

fn relabel(table: &[Elem], order: usize, perm: &[usize]) -> Vec<Elem> {
    let mut out = vec![Elem::ZERO; order * order];
    for a in 0..order {
        for b in 0..order {
            out[perm[a] * order + perm[b]] = Elem::new(perm[table[a * order + b].index()]);
        }
    }
    out
}

/// Builds a ring from closures over `0..order`. Used by the constructors in
/// the catalog, which describe arithmetic rather than tables.
pub(crate) fn ring_from_fn(
    name: String,
    order: usize,
    add: impl Fn(usize, usize) -> usize,
    mul: impl Fn(usize, usize) -> usize,
    unital: bool,
) -> Result<FiniteRing> {
    if order > MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order,
            max: MAX_ORDER,
        });
    }
    let mut add_flat = Vec::with_capacity(order * order);
    let mut mul_flat = Vec::with_capacity(order * order);
    for a in 0..order {
        for b in 0..order {
            add_flat.push(Elem::new(add(a, b)));
            mul_flat.push(Elem::new(mul(a, b)));
        }
    }
    FiniteRing::from_flat(name, order, add_flat, mul_flat, unital)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mod_tables(n: usize) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let add = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        let mul = (0..n)
            .map(|a| (0..n).map(|b| (a * b) % n).collect())
            .collect();
        (add, mul)
    }

    #[test]
    fn z4_validates_with_unity() {
        let (add, mul) = mod_tables(4);
        let r = FiniteRing::from_tables("Z4", &add, &mul, true).unwrap();
        assert_eq!(r.order(), 4);
        assert_eq!(r.one(), Some(Elem::new(1)));
        assert_eq!(r.mul(Elem::new(2), Elem::new(2)), Elem::ZERO);
        assert_eq!(r.pow(Elem::new(3), 2), Elem::new(1));
    }

    #[test]
    fn two_element_field() {
        let add = vec![vec![0, 1], vec![1, 0]];
        let mul = vec![vec![0, 0], vec![0, 1]];
        let r = FiniteRing::from_tables("Z2", &add, &mul, true).unwrap();
        assert_eq!(r.one(), Some(Elem::new(1)));
    }

    #[test]
    fn mismatched_multiplication_is_rejected() {
        let (add, _) = mod_tables(4);
        // Z3-shaped multiplication padded into a 4x4 table.
        let mul = vec![
            vec![0, 0, 0, 0],
            vec![0, 1, 2, 3],
            vec![0, 2, 1, 3],
            vec![0, 3, 3, 3],
        ];
        let err = FiniteRing::from_tables("bad", &add, &mul, true).unwrap_err();
        assert!(
            matches!(
                err,
                Error::NotDistributive { .. } | Error::NotAssociative { .. }
            ),
            "{err:?}"
        );
        let mul = vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 1]];
        assert!(matches!(
            FiniteRing::from_tables("bad", &add, &mul, true),
            Err(Error::Shape(_))
        ));
        let mut mul = mod_tables(4).1;
        mul[1][1] = 4;
        assert!(matches!(
            FiniteRing::from_tables("bad", &add, &mul, true),
            Err(Error::OutOfRange { value: 4, .. })
        ));
    }

    #[test]
    fn non_group_addition() {
        let add = vec![vec![0, 1], vec![1, 1]];
        let mul = vec![vec![0, 0], vec![0, 0]];
        assert!(matches!(
            FiniteRing::from_tables("x", &add, &mul, false),
            Err(Error::NotAGroup(_))
        ));
    }

    #[test]
    fn missing_unity() {
        // Z2 with zero multiplication.
        let add = vec![vec![0, 1], vec![1, 0]];
        let mul = vec![vec![0, 0], vec![0, 0]];
        assert_eq!(
            FiniteRing::from_tables("x", &add, &mul, true).unwrap_err(),
            Error::NoUnity
        );
        let r = FiniteRing::from_tables("x", &add, &mul, false).unwrap();
        assert!(!r.is_unital());
    }

    #[test]
    fn additive_identity_is_moved_to_zero() {
        // Z3 written with the identity stored at index 2: elements (2,0,1) <-> (0,1,2).
        // index i represents the residue (i + 1) mod 3.
        let rep = |i: usize| (i + 1) % 3;
        let idx = |v: usize| (v + 2) % 3;
        let add: Vec<Vec<usize>> = (0..3)
            .map(|a| (0..3).map(|b| idx((rep(a) + rep(b)) % 3)).collect())
            .collect();
        let mul: Vec<Vec<usize>> = (0..3)
            .map(|a| (0..3).map(|b| idx((rep(a) * rep(b)) % 3)).collect())
            .collect();
        let r = FiniteRing::from_tables("Z3", &add, &mul, true).unwrap();
        for x in r.elements() {
            assert_eq!(r.add(Elem::ZERO, x), x);
            assert_eq!(r.mul(Elem::ZERO, x), Elem::ZERO);
        }
        assert!(r.one().is_some());
    }

    #[test]
    fn names_with_whitespace_are_rejected() {
        let (add, mul) = mod_tables(2);
        assert!(matches!(
            FiniteRing::from_tables("a b", &add, &mul, true),
            Err(Error::InvalidName(_))
        ));
    }
}
