use crate::ring::{Elem, FiniteRing};

/// Per-element invariants preserved by ring isomorphisms; used to prune the
/// search.
fn signature(r: &FiniteRing, x: Elem) -> (usize, usize, bool, bool, bool) {
    let mut additive_order = 1;
    let mut acc = x;
    while !acc.is_zero() {
        acc = r.add(acc, x);
        additive_order += 1;
    }
    let annihilated_by = r.elements().filter(|&y| r.mul(y, x).is_zero()).count();
    (
        additive_order,
        annihilated_by,
        r.is_idempotent(x),
        r.is_nilpotent(x),
        Some(x) == r.one(),
    )
}

/// Finds a bijection `phi` with `phi(x+y) = phi(x)+phi(y)` and
/// `phi(xy) = phi(x)phi(y)`, by backtracking with partial-consistency checks.
/// `phi[i]` is the image of element `i`.
pub fn find_isomorphism(a: &FiniteRing, b: &FiniteRing) -> Option<Vec<Elem>> {
    if a.order() != b.order() || a.is_unital() != b.is_unital() {
        return None;
    }
    let k = a.order();
    let sig_a: Vec<_> = a.elements().map(|x| signature(a, x)).collect();
    let sig_b: Vec<_> = b.elements().map(|x| signature(b, x)).collect();
    let mut sorted_a = sig_a.clone();
    let mut sorted_b = sig_b.clone();
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return None;
    }

    let mut phi: Vec<Option<Elem>> = vec![None; k];
    let mut used = vec![false; k];
    phi[0] = Some(Elem::ZERO);
    used[0] = true;

    fn consistent(a: &FiniteRing, b: &FiniteRing, phi: &[Option<Elem>], x: Elem) -> bool {
        let px = phi[x.index()].expect("assigned");
        for y in a.elements() {
            let Some(py) = phi[y.index()] else { continue };
            for (s, t) in [
                (a.add(x, y), b.add(px, py)),
                (a.mul(x, y), b.mul(px, py)),
                (a.mul(y, x), b.mul(py, px)),
            ] {
                if let Some(ps) = phi[s.index()] {
                    if ps != t {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[allow(clippy::too_many_arguments)]
    fn search(
        a: &FiniteRing,
        b: &FiniteRing,
        sig_a: &[(usize, usize, bool, bool, bool)],
        sig_b: &[(usize, usize, bool, bool, bool)],
        phi: &mut Vec<Option<Elem>>,
        used: &mut Vec<bool>,
        next: usize,
    ) -> bool {
        if next == a.order() {
            return true;
        }
        let x = Elem::new(next);
        for y in b.elements() {
            if used[y.index()] || sig_a[next] != sig_b[y.index()] {
                continue;
            }
            phi[next] = Some(y);
            used[y.index()] = true;
            if consistent(a, b, phi, x) && search(a, b, sig_a, sig_b, phi, used, next + 1) {
                return true;
            }
            phi[next] = None;
            used[y.index()] = false;
        }
        false
    }

    if search(a, b, &sig_a, &sig_b, &mut phi, &mut used, 1) {
        Some(phi.into_iter().map(|p| p.expect("complete")).collect())
    } else {
        None
    }
}

pub fn are_isomorphic(a: &FiniteRing, b: &FiniteRing) -> bool {
    find_isomorphism(a, b).is_some()
}
