mod common;

use std::sync::OnceLock;

use proptest::prelude::*;

use common::*;
use ringlab::annihilators::{is_sound, replay, AnnihilatorSolver, AnnihilatorTrace};
use ringlab::catalog::{
    builtin, builtin_corpus, direct_product, extended_corpus, make_skew_dual_gf4,
};
use ringlab::ideal::{ideal_generated_by, is_two_sided, left_ideal_generated_by, Side};
use ringlab::poly::Polynomial;
use ringlab::properties::{self, evaluate_property, McCoyBound, Property};
use ringlab::{Elem, FiniteRing};

fn small_rings() -> Vec<FiniteRing> {
    extended_corpus()
        .rings()
        .iter()
        .filter(|r| r.order() <= 6)
        .cloned()
        .collect()
}

fn duo_rings() -> Vec<FiniteRing> {
    let mut out: Vec<FiniteRing> = builtin_corpus()
        .rings()
        .iter()
        .filter(|r| r.order() <= 8)
        .filter(|r| {
            let s = AnnihilatorSolver::new(r);
            s.is_left_duo() || s.is_right_duo()
        })
        .cloned()
        .collect();
    out.push(make_skew_dual_gf4());
    out
}

type Pair = (Vec<usize>, Vec<usize>);

/// Annihilating pairs of degree at most 2 on each one-sided Duo ring that has
/// any.
fn duo_pairs() -> &'static [(FiniteRing, Vec<Pair>)] {
    static PAIRS: OnceLock<Vec<(FiniteRing, Vec<Pair>)>> = OnceLock::new();
    PAIRS.get_or_init(|| {
        duo_rings()
            .into_iter()
            .map(|ring| {
                let ps = polys(ring.order(), 2);
                let pairs = ps
                    .iter()
                    .flat_map(|f| {
                        ps.iter()
                            .filter(|g| is_zero(&poly_mul(&ring, f, g)))
                            .map(|g| (f.clone(), g.clone()))
                    })
                    .collect();
                (ring, pairs)
            })
            .filter(|(_, pairs): &(FiniteRing, Vec<Pair>)| !pairs.is_empty())
            .collect()
    })
}

fn pick_pair(ri: usize, pi: usize) -> (&'static FiniteRing, &'static [usize], &'static [usize]) {
    let all = duo_pairs();
    let (ring, pairs) = &all[ri % all.len()];
    let (f, g) = &pairs[pi % pairs.len()];
    (ring, f, g)
}

fn coeffs(max_len: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..256, 1..=max_len)
}

fn reduce(v: &[usize], order: usize) -> Vec<usize> {
    v.iter().map(|c| c % order).collect()
}

fn p<'r>(ring: &'r FiniteRing, v: &[usize]) -> Polynomial<'r> {
    Polynomial::new(ring, elems(v))
}

fn same(a: &Polynomial<'_>, b: &Polynomial<'_>) -> bool {
    a.coeffs() == b.coeffs()
}

#[test]
fn ring_axioms_hold_exhaustively() {
    for ring in extended_corpus().rings().iter().filter(|r| r.order() <= 16) {
        let k = ring.order();
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    assert_eq!(
                        mul(ring, mul(ring, a, b), c),
                        mul(ring, a, mul(ring, b, c)),
                        "{}",
                        ring.name()
                    );
                    assert_eq!(
                        mul(ring, a, add(ring, b, c)),
                        add(ring, mul(ring, a, b), mul(ring, a, c))
                    );
                    assert_eq!(
                        mul(ring, add(ring, b, c), a),
                        add(ring, mul(ring, b, a), mul(ring, c, a))
                    );
                }
            }
        }
    }
}

#[test]
fn power_law() {
    for ring in builtin_corpus().rings() {
        let k = ring.order() as u32;
        for a in ring.elements() {
            for e1 in 1..=k {
                for e2 in 1..=k {
                    assert_eq!(
                        ring.pow(a, e1 + e2),
                        ring.mul(ring.pow(a, e1), ring.pow(a, e2))
                    );
                }
            }
            assert_eq!(ring.pow(a, 3).index(), pow(ring, a.index(), 3));
        }
    }
}

#[test]
fn left_ideals_match_additive_closure_and_are_idempotent() {
    for ring in builtin_corpus().rings().iter().filter(|r| r.order() <= 8) {
        for a in 0..ring.order() {
            for b in 0..ring.order() {
                let ideal = left_ideal_generated_by(ring, &elems(&[a, b])).unwrap();
                let members: Vec<usize> = indices(ideal.members());
                let oracle: Vec<usize> = left_ideal(ring, &[a, b]).into_iter().collect();
                assert_eq!(members, oracle, "{} <{a},{b}>", ring.name());
                let again = left_ideal_generated_by(ring, ideal.members()).unwrap();
                assert_eq!(again.members(), ideal.members());
            }
        }
    }
}

#[test]
fn commutative_left_ideals_are_two_sided() {
    for ring in builtin_corpus().rings() {
        if !properties::is_commutative(ring).holds() {
            continue;
        }
        for a in ring.elements() {
            let ideal = ideal_generated_by(ring, &[a], Side::Left).unwrap();
            assert!(is_two_sided(ring, &ideal), "{}", ring.name());
        }
    }
}

#[test]
fn direct_product_commutative_iff_factors_are() {
    let names = ["Z2", "Z3", "U2Z2", "order4:0"];
    for a in names {
        for b in names {
            let (ra, rb) = (builtin(a).unwrap(), builtin(b).unwrap());
            if ra.order() * rb.order() > 16 {
                continue;
            }
            let prod = direct_product(&ra, &rb).unwrap();
            let comm = |r: &FiniteRing| properties::is_commutative(r).holds();
            assert_eq!(comm(&prod), comm(&ra) && comm(&rb), "{a} x {b}");
        }
    }
}

#[test]
fn commutative_product_matches_naive_convolution() {
    for name in ["Z4", "Z6"] {
        let ring = builtin(name).unwrap();
        let ps = polys(ring.order(), 3);
        for f in ps.iter().step_by(7) {
            for g in ps.iter().step_by(11) {
                let lib = p(&ring, f).mul(&p(&ring, g)).unwrap();
                let mut naive = vec![0usize; f.len() + g.len() - 1];
                for (i, &a) in f.iter().enumerate() {
                    for (j, &b) in g.iter().enumerate() {
                        naive[i + j] = (naive[i + j] + a * b) % ring.order();
                    }
                }
                while naive.last() == Some(&0) {
                    naive.pop();
                }
                assert_eq!(indices(lib.coeffs()), naive);
            }
        }
    }
}

#[test]
fn duo_is_left_and_right_duo() {
    for ring in extended_corpus().rings() {
        let duo = evaluate_property(ring, Property::Duo, McCoyBound::default()).holds();
        let l = evaluate_property(ring, Property::LeftDuo, McCoyBound::default()).holds();
        let r = evaluate_property(ring, Property::RightDuo, McCoyBound::default()).holds();
        assert_eq!(duo, l && r, "{}", ring.name());
    }
}

#[test]
fn failing_verdicts_carry_rechecked_witnesses() {
    let bound = McCoyBound::new(1, 2).unwrap();
    for ring in extended_corpus().rings().iter().filter(|r| r.order() <= 16) {
        for property in Property::ALL {
            if let Some(w) = evaluate_property(ring, property, bound).witness() {
                assert!(w.recheck(ring), "{} {}", ring.name(), property.id());
            }
        }
    }
}

#[test]
fn bounded_verdicts_are_monotone() {
    let bounds: Vec<McCoyBound> = [(1, 1), (1, 2), (2, 1), (2, 2)]
        .iter()
        .map(|&(m, n)| McCoyBound::new(m, n).unwrap())
        .collect();
    for ring in extended_corpus().rings().iter().filter(|r| r.order() <= 8) {
        for property in [
            Property::RightMcCoy,
            Property::LeftMcCoy,
            Property::McCoy,
            Property::Armendariz,
        ] {
            let holds: Vec<bool> = bounds
                .iter()
                .map(|&b| !evaluate_property(ring, property, b).fails())
                .collect();
            // Holding at a larger bound implies holding at every smaller one.
            assert!(
                !holds[3] || holds.iter().all(|&h| h),
                "{} {}",
                ring.name(),
                property.id()
            );
            assert!(!holds[1] || holds[0]);
            assert!(!holds[2] || holds[0]);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn poly_mul_is_associative_and_distributive(
        ri in 0usize..64, f in coeffs(3), g in coeffs(3), h in coeffs(3)
    ) {
        let rings = small_rings();
        let ring = &rings[ri % rings.len()];
        let k = ring.order();
        let (f, g, h) = (p(ring, &reduce(&f, k)), p(ring, &reduce(&g, k)), p(ring, &reduce(&h, k)));
        let left = f.mul(&g).unwrap().mul(&h).unwrap();
        let right = f.mul(&g.mul(&h).unwrap()).unwrap();
        prop_assert!(same(&left, &right));
        let d1 = f.mul(&g.add(&h).unwrap()).unwrap();
        let d2 = f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap();
        prop_assert!(same(&d1, &d2));
        let d3 = g.add(&h).unwrap().mul(&f).unwrap();
        let d4 = g.mul(&f).unwrap().add(&h.mul(&f).unwrap()).unwrap();
        prop_assert!(same(&d3, &d4));
        prop_assert_eq!(indices(f.mul(&g).unwrap().coeffs()), {
            let mut v = poly_mul(ring, &indices(f.coeffs()), &indices(g.coeffs()));
            while v.last() == Some(&0) { v.pop(); }
            v
        });
    }

    #[test]
    fn strip_constant_reconstructs(ri in 0usize..64, f in coeffs(4)) {
        let rings = small_rings();
        let ring = &rings[ri % rings.len()];
        let f = p(ring, &reduce(&f, ring.order()));
        prop_assume!(!f.is_zero());
        let back = f.strip_constant().unwrap().shift_up().add(&Polynomial::constant(ring, f.constant_term())).unwrap();
        prop_assert!(same(&back, &f));
    }

    #[test]
    fn reversal_preserves_zero_products(ri in 0usize..64, pi in 0usize..1_000_000) {
        let (ring, f, g) = pick_pair(ri, pi);
        let (fp, gp) = (p(ring, f), p(ring, g));
        let fs = fp.window(f.len()).unwrap().reverse();
        let gs = gp.window(g.len()).unwrap().reverse();
        prop_assert!(fs.mul(&gs).unwrap().is_zero());
    }

    #[test]
    fn procedures_are_sound_and_replayable(ri in 0usize..64, pi in 0usize..1_000_000) {
        let (ring, f, g) = pick_pair(ri, pi);
        let solver = AnnihilatorSolver::new(ring);
        let oracle = right_annihilators(ring, f);
        for trace in solver.all_procedures(&p(ring, f), &p(ring, g)).unwrap() {
            let r = trace.result().expect("result");
            prop_assert!(r != Elem::new(0) && oracle.contains(&r.index()), "{}", trace);
            prop_assert!(left_ideal(ring, g).contains(&r.index()));
            prop_assert!(is_sound(ring, &trace));
            prop_assert!(replay(ring, &trace).is_ok());
            let parsed = AnnihilatorTrace::parse(&trace.to_string()).unwrap();
            prop_assert_eq!(&parsed, &trace);
        }
        // Coefficientwise ladders.
        if solver.is_semicommutative() {
            for (j, &b) in g.iter().enumerate() {
                prop_assert_eq!(mul(ring, pow(ring, f[0], j as u32 + 1), b), 0);
            }
        }
        if solver.is_left_duo() {
            for (k, &a) in f.iter().enumerate() {
                prop_assert_eq!(mul(ring, a, pow(ring, g[0], k as u32 + 1)), 0);
            }
        }
    }
}
