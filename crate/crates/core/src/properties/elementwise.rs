use super::{Verdict, Witness};
use crate::ideal::{
    all_two_sided_ideals, left_ideal_generated_by, right_ideal_generated_by, Ideal, Side,
};
use crate::ring::{Elem, FiniteRing};

/// Two-sided ideals are enumerated to compute the prime radical; beyond
/// this order the verdict is `unsupported`.
pub const TWO_PRIMAL_MAX_ORDER: usize = 16;

fn first<T>(iter: impl Iterator<Item = T>) -> Option<T> {
    iter.into_iter().next()
}

fn pairs(r: &FiniteRing) -> impl Iterator<Item = (Elem, Elem)> + '_ {
    r.elements()
        .flat_map(move |a| r.elements().map(move |b| (a, b)))
}

pub fn is_commutative(r: &FiniteRing) -> Verdict {
    match first(pairs(r).filter(|&(a, b)| r.mul(a, b) != r.mul(b, a))) {
        Some((a, b)) => Verdict::Fails(Witness::NonCommuting { a, b }),
        None => Verdict::Holds,
    }
}

fn one_sided_duo(r: &FiniteRing, side: Side) -> Verdict {
    if !r.is_unital() {
        return Verdict::Unsupported("requires_unity".into());
    }
    // With unity every one-sided ideal is a sum of principal ones, and sums
    // of two-sided ideals are two-sided.
    for a in r.elements() {
        let ideal = match side {
            Side::Left => left_ideal_generated_by(r, &[a]),
            _ => right_ideal_generated_by(r, &[a]),
        }
        .expect("unital ring");
        let across = |s: Elem| match side {
            Side::Left => r.mul(a, s),
            _ => r.mul(s, a),
        };
        if let Some(s) = r.elements().find(|&s| !ideal.contains(across(s))) {
            return Verdict::Fails(Witness::OutsidePrincipalIdeal { side, a, s });
        }
    }
    Verdict::Holds
}

/// Every left ideal is two-sided.
pub fn is_left_duo(r: &FiniteRing) -> Verdict {
    one_sided_duo(r, Side::Left)
}

/// Every right ideal is two-sided.
pub fn is_right_duo(r: &FiniteRing) -> Verdict {
    one_sided_duo(r, Side::Right)
}

pub fn is_duo(r: &FiniteRing) -> Verdict {
    match is_left_duo(r) {
        Verdict::Holds => is_right_duo(r),
        other => other,
    }
}

pub fn is_semicommutative(r: &FiniteRing) -> Verdict {
    let hit = pairs(r)
        .filter(|&(a, b)| r.mul(a, b).is_zero())
        .find_map(|(a, b)| {
            r.elements()
                .find(|&c| !r.mul3(a, c, b).is_zero())
                .map(|c| (a, b, c))
        });
    match hit {
        Some((a, b, c)) => Verdict::Fails(Witness::Semicommutative { a, b, c }),
        None => Verdict::Holds,
    }
}

pub fn is_reversible(r: &FiniteRing) -> Verdict {
    match first(pairs(r).filter(|&(a, b)| r.mul(a, b).is_zero() && !r.mul(b, a).is_zero())) {
        Some((a, b)) => Verdict::Fails(Witness::Reversible { a, b }),
        None => Verdict::Holds,
    }
}

/// `abc = 0` implies `acb = 0`. The remaining permutations are checked as
/// well, and a failure of the defining order `acb` is preferred as witness.
pub fn is_symmetric(r: &FiniteRing) -> Verdict {
    const ORDERS: [[u8; 3]; 5] = [[0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    for order in ORDERS {
        for (a, b) in pairs(r) {
            for c in r.elements() {
                let t = [a, b, c];
                let p = order.map(|i| t[i as usize]);
                if r.mul3(a, b, c).is_zero() && !r.mul3(p[0], p[1], p[2]).is_zero() {
                    return Verdict::Fails(Witness::Symmetric { a, b, c, order });
                }
            }
        }
    }
    Verdict::Holds
}

pub fn is_reduced(r: &FiniteRing) -> Verdict {
    match r.nonzero_elements().find(|&a| r.mul(a, a).is_zero()) {
        Some(a) => Verdict::Fails(Witness::Nilpotent { a }),
        None => Verdict::Holds,
    }
}

pub fn is_abelian(r: &FiniteRing) -> Verdict {
    let hit = r.elements().filter(|&e| r.is_idempotent(e)).find_map(|e| {
        r.elements()
            .find(|&x| r.mul(e, x) != r.mul(x, e))
            .map(|x| (e, x))
    });
    match hit {
        Some((e, x)) => Verdict::Fails(Witness::NonCentralIdempotent { e, r: x }),
        None => Verdict::Holds,
    }
}

pub fn is_dedekind_finite(r: &FiniteRing) -> Verdict {
    let Some(one) = r.one() else {
        return Verdict::Unsupported("requires_unity".into());
    };
    match first(pairs(r).filter(|&(a, b)| r.mul(a, b) == one && r.mul(b, a) != one)) {
        Some((a, b)) => Verdict::Fails(Witness::OneSidedInverse { a, b }),
        None => Verdict::Holds,
    }
}

/// A proper ideal `P` with `aRb ⊆ P` only when `a ∈ P` or `b ∈ P`.
pub(crate) fn is_prime_ideal(r: &FiniteRing, p: &Ideal) -> bool {
    if p.len() == r.order() {
        return false;
    }
    let outside: Vec<Elem> = r.elements().filter(|&x| !p.contains(x)).collect();
    outside.iter().all(|&a| {
        outside
            .iter()
            .all(|&b| r.elements().any(|s| !p.contains(r.mul3(a, s, b))))
    })
}

/// Prime ideals of the ring and their intersection.
pub fn prime_radical(r: &FiniteRing) -> crate::error::Result<(Vec<Ideal>, Vec<Elem>)> {
    let primes: Vec<Ideal> = all_two_sided_ideals(r)?
        .into_iter()
        .filter(|i| is_prime_ideal(r, i))
        .collect();
    let radical = r
        .elements()
        .filter(|&x| primes.iter().all(|p| p.contains(x)))
        .collect();
    Ok((primes, radical))
}

/// The prime radical equals the set of nilpotent elements.
pub fn is_two_primal(r: &FiniteRing) -> Verdict {
    if !r.is_unital() {
        return Verdict::Unsupported("requires_unity".into());
    }
    if r.order() > TWO_PRIMAL_MAX_ORDER {
        return Verdict::Unsupported(format!("order_exceeds_{TWO_PRIMAL_MAX_ORDER}"));
    }
    let (primes, radical) = prime_radical(r).expect("unital ring");
    // The prime radical is always nil, so only the other inclusion can fail.
    let hit = r
        .elements()
        .filter(|&x| r.is_nilpotent(x) && !radical.contains(&x))
        .find_map(|x| {
            primes
                .iter()
                .find(|p| !p.contains(x))
                .map(|p| (x, p.members().to_vec()))
        });
    match hit {
        Some((a, prime)) => Verdict::Fails(Witness::NilpotentOutsidePrime { a, prime }),
        None => Verdict::Holds,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{
        builtin, make_matrix_ring, make_skew_dual_gf4, make_zn, matrix_elem, MatrixShape,
    };

    fn e(i: usize) -> Elem {
        Elem::new(i)
    }

    fn m2z2() -> (FiniteRing, impl Fn(usize, usize) -> Elem) {
        let z2 = make_zn(2).unwrap();
        let m = make_matrix_ring(&z2, MatrixShape::Full2x2).unwrap();
        let unit = move |i: usize, j: usize| {
            let mut a = [0; 4];
            a[2 * (i - 1) + (j - 1)] = 1;
            matrix_elem(&z2, MatrixShape::Full2x2, a)
        };
        (m, unit)
    }

    #[test]
    fn commutativity() {
        assert_eq!(is_commutative(&make_zn(6).unwrap()), Verdict::Holds);
        assert_eq!(is_commutative(&make_zn(2).unwrap()), Verdict::Holds);
        let (m, unit) = m2z2();
        let v = is_commutative(&m);
        assert!(v.witness().unwrap().recheck(&m));
        // e12 * e21 = e11 but e21 * e12 = e22.
        assert!(Witness::NonCommuting {
            a: unit(1, 2),
            b: unit(2, 1)
        }
        .recheck(&m));
    }

    #[test]
    fn duo_examples() {
        for n in 2..=12 {
            let z = make_zn(n).unwrap();
            assert_eq!(is_duo(&z), Verdict::Holds, "Z{n}");
        }
        let (m, _) = m2z2();
        let l = is_left_duo(&m);
        let r = is_right_duo(&m);
        assert!(l.fails() && l.witness().unwrap().recheck(&m));
        assert!(r.fails() && r.witness().unwrap().recheck(&m));
        let u = builtin("U2Z2").unwrap();
        assert!(is_left_duo(&u).fails());
        assert!(is_right_duo(&u).fails());
    }

    #[test]
    fn skew_ring_is_duo() {
        let s = make_skew_dual_gf4();
        assert_eq!(is_left_duo(&s), Verdict::Holds);
        assert_eq!(is_right_duo(&s), Verdict::Holds);
        assert_eq!(is_semicommutative(&s), Verdict::Holds);
        assert!(is_commutative(&s).fails());
    }

    #[test]
    fn semicommutativity() {
        let (m, unit) = m2z2();
        let v = is_semicommutative(&m);
        assert!(v.witness().unwrap().recheck(&m));
        assert!(Witness::Semicommutative {
            a: unit(1, 2),
            b: unit(1, 2),
            c: unit(2, 1)
        }
        .recheck(&m));
        assert_eq!(
            is_semicommutative(&crate::catalog::make_trivial()),
            Verdict::Holds
        );
        assert_eq!(is_semicommutative(&make_zn(8).unwrap()), Verdict::Holds);
    }

    #[test]
    fn reducedness() {
        assert_eq!(is_reduced(&make_zn(6).unwrap()), Verdict::Holds);
        assert_eq!(
            is_reduced(&make_zn(4).unwrap()),
            Verdict::Fails(Witness::Nilpotent { a: e(2) })
        );
    }

    #[test]
    fn upper_triangular_is_not_abelian() {
        let z2 = make_zn(2).unwrap();
        let u = make_matrix_ring(&z2, MatrixShape::UpperTriangular2x2).unwrap();
        let e11 = matrix_elem(&z2, MatrixShape::UpperTriangular2x2, [1, 0, 0, 0]);
        let e12 = matrix_elem(&z2, MatrixShape::UpperTriangular2x2, [0, 1, 0, 0]);
        assert_ne!(u.mul(e11, e12), u.mul(e12, e11));
        assert!(is_abelian(&u).fails());
        assert!(Witness::NonCentralIdempotent { e: e11, r: e12 }.recheck(&u));
    }

    #[test]
    fn finite_rings_are_dedekind_finite() {
        for name in ["Z4", "Z12", "U2Z2", "M2Z2", "Z2xZ4", "F4skew"] {
            assert_eq!(
                is_dedekind_finite(&builtin(name).unwrap()),
                Verdict::Holds,
                "{name}"
            );
        }
    }

    #[test]
    fn symmetric_examples() {
        assert_eq!(is_symmetric(&make_zn(12).unwrap()), Verdict::Holds);
        let (m, _) = m2z2();
        let v = is_symmetric(&m);
        assert!(v.witness().unwrap().recheck(&m));
        assert!(matches!(
            v,
            Verdict::Fails(Witness::Symmetric {
                order: [0, 2, 1],
                ..
            })
        ));
    }

    #[test]
    fn two_primal_examples() {
        let z4 = make_zn(4).unwrap();
        assert_eq!(is_two_primal(&z4), Verdict::Holds);
        let (_, radical) = prime_radical(&z4).unwrap();
        assert_eq!(radical, vec![e(0), e(2)]);
        assert_eq!(is_two_primal(&make_zn(12).unwrap()), Verdict::Holds);
        let (m, _) = m2z2();
        let v = is_two_primal(&m);
        assert!(v.fails());
        assert!(v.witness().unwrap().recheck(&m));
        let (_, radical) = prime_radical(&m).unwrap();
        assert_eq!(radical, vec![e(0)]);
        assert!(matches!(
            is_two_primal(&make_zn(17).unwrap()),
            Verdict::Unsupported(_)
        ));
    }
}
