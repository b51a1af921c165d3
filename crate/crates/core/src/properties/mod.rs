//! Decision procedures for the ring properties appearing in the implication
//! diagram.
//!
//! Element-level properties are decided exactly by exhaustive loops.
//! Properties quantified over polynomials (McCoy, Armendariz) are decided up
//! to a [`McCoyBound`] on the degrees and reported as
//! [`Verdict::HoldsUpTo`]; a bounded failure is a genuine counterexample.

mod elementwise;
mod polynomial;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

pub use elementwise::{
    is_abelian, is_commutative, is_dedekind_finite, is_duo, is_left_duo, is_reduced, is_reversible,
    is_right_duo, is_semicommutative, is_symmetric, is_two_primal, prime_radical,
    TWO_PRIMAL_MAX_ORDER,
};
pub use polynomial::{
    is_armendariz_up_to, is_left_mccoy_up_to, is_linearly_armendariz, is_linearly_mccoy,
    is_mccoy_up_to, is_right_linearly_mccoy, is_right_mccoy_up_to,
};

use crate::error::{Error, Result};
use crate::ideal::{all_two_sided_ideals, left_ideal_generated_by, right_ideal_generated_by, Side};
use crate::poly::{format_coeffs, product_is_zero};
use crate::ring::{Elem, FiniteRing};

/// Degree bounds `deg f <= m`, `deg g <= n` for polynomial-quantified
/// properties.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct McCoyBound {
    m: usize,
    n: usize,
}

impl McCoyBound {
    pub const LINEAR: McCoyBound = McCoyBound { m: 1, n: 1 };

    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidArgument(format!(
                "McCoy bound ({m},{n}) must have m, n >= 1"
            )));
        }
        Ok(McCoyBound { m, n })
    }

    pub fn m(self) -> usize {
        self.m
    }

    pub fn n(self) -> usize {
        self.n
    }
}

impl Default for McCoyBound {
    fn default() -> Self {
        McCoyBound { m: 2, n: 2 }
    }
}

impl fmt::Display for McCoyBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.m, self.n)
    }
}

impl FromStr for McCoyBound {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("McCoy bound must look like `m,n`, got {s:?}"));
        let (m, n) = s.split_once(',').ok_or_else(bad)?;
        let m = m.trim().parse().map_err(|_| bad())?;
        let n = n.trim().parse().map_err(|_| bad())?;
        McCoyBound::new(m, n)
    }
}

/// A concrete counterexample to a property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `a*b != b*a`.
    NonCommuting { a: Elem, b: Elem },
    /// Left: `a*s` is outside the left ideal `Ra`. Right: `s*a` is outside `aR`.
    OutsidePrincipalIdeal { side: Side, a: Elem, s: Elem },
    /// `a*b = 0` but `a*c*b != 0`.
    Semicommutative { a: Elem, b: Elem, c: Elem },
    /// `a*b = 0` but `b*a != 0`.
    Reversible { a: Elem, b: Elem },
    /// `a*b*c = 0` but the product of the same elements in `order` is not.
    Symmetric {
        a: Elem,
        b: Elem,
        c: Elem,
        order: [u8; 3],
    },
    /// `a != 0` and `a*a = 0`.
    Nilpotent { a: Elem },
    /// `e` idempotent and `e*r != r*e`.
    NonCentralIdempotent { e: Elem, r: Elem },
    /// `a*b = 1` but `b*a != 1`.
    OneSidedInverse { a: Elem, b: Elem },
    /// `a` nilpotent and outside the prime ideal `prime`.
    NilpotentOutsidePrime { a: Elem, prime: Vec<Elem> },
    /// `f*g = 0` but `a_i*b_j != 0`.
    CoefficientProduct {
        f: Vec<Elem>,
        g: Vec<Elem>,
        i: usize,
        j: usize,
    },
    /// `f*g = 0` and no nonzero `r` has `f*r = 0`.
    NoRightAnnihilator { f: Vec<Elem>, g: Vec<Elem> },
    /// `f*g = 0` and no nonzero `r` has `r*g = 0`.
    NoLeftAnnihilator { f: Vec<Elem>, g: Vec<Elem> },
}

fn letters(order: [u8; 3]) -> String {
    order.iter().map(|&i| (b'a' + i) as char).collect()
}

impl Witness {
    /// Re-verifies the counterexample by direct arithmetic.
    pub fn recheck(&self, r: &FiniteRing) -> bool {
        match self {
            Witness::NonCommuting { a, b } => r.mul(*a, *b) != r.mul(*b, *a),
            Witness::OutsidePrincipalIdeal { side, a, s } => match side {
                Side::Left => {
                    left_ideal_generated_by(r, &[*a]).is_ok_and(|i| !i.contains(r.mul(*a, *s)))
                }
                Side::Right => {
                    right_ideal_generated_by(r, &[*a]).is_ok_and(|i| !i.contains(r.mul(*s, *a)))
                }
                Side::TwoSided => false,
            },
            Witness::Semicommutative { a, b, c } => {
                r.mul(*a, *b).is_zero() && !r.mul3(*a, *c, *b).is_zero()
            }
            Witness::Reversible { a, b } => r.mul(*a, *b).is_zero() && !r.mul(*b, *a).is_zero(),
            Witness::Symmetric { a, b, c, order } => {
                let t = [*a, *b, *c];
                let p = order.map(|i| t[i as usize]);
                r.mul3(*a, *b, *c).is_zero() && !r.mul3(p[0], p[1], p[2]).is_zero()
            }
            Witness::Nilpotent { a } => !a.is_zero() && r.mul(*a, *a).is_zero(),
            Witness::NonCentralIdempotent { e, r: x } => {
                r.is_idempotent(*e) && r.mul(*e, *x) != r.mul(*x, *e)
            }
            Witness::OneSidedInverse { a, b } => r
                .one()
                .is_some_and(|one| r.mul(*a, *b) == one && r.mul(*b, *a) != one),
            Witness::NilpotentOutsidePrime { a, prime } => {
                r.is_nilpotent(*a)
                    && !prime.contains(a)
                    && all_two_sided_ideals(r).is_ok_and(|ideals| {
                        ideals.iter().any(|i| {
                            i.members() == prime.as_slice() && elementwise::is_prime_ideal(r, i)
                        })
                    })
            }
            Witness::CoefficientProduct { f, g, i, j } => {
                !f.is_empty()
                    && !g.is_empty()
                    && product_is_zero(r, f, g)
                    && f.get(*i)
                        .zip(g.get(*j))
                        .is_some_and(|(&a, &b)| !r.mul(a, b).is_zero())
            }
            Witness::NoRightAnnihilator { f, g } => {
                !f.is_empty()
                    && !g.is_empty()
                    && product_is_zero(r, f, g)
                    && r.nonzero_elements()
                        .all(|x| f.iter().any(|&a| !r.mul(a, x).is_zero()))
            }
            Witness::NoLeftAnnihilator { f, g } => {
                !f.is_empty()
                    && !g.is_empty()
                    && product_is_zero(r, f, g)
                    && r.nonzero_elements()
                        .all(|x| g.iter().any(|&b| !r.mul(x, b).is_zero()))
            }
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("witness ")?;
        match self {
            Witness::NonCommuting { a, b }
            | Witness::Reversible { a, b }
            | Witness::OneSidedInverse { a, b } => {
                write!(f, "a={a} b={b}")
            }
            Witness::OutsidePrincipalIdeal { side, a, s } => {
                let side = match side {
                    Side::Left => "left",
                    Side::Right => "right",
                    Side::TwoSided => "two_sided",
                };
                write!(f, "side={side} a={a} s={s}")
            }
            Witness::Semicommutative { a, b, c } => write!(f, "a={a} b={b} c={c}"),
            Witness::Symmetric { a, b, c, order } => {
                write!(f, "a={a} b={b} c={c} order={}", letters(*order))
            }
            Witness::Nilpotent { a } => write!(f, "a={a}"),
            Witness::NonCentralIdempotent { e, r } => write!(f, "e={e} r={r}"),
            Witness::NilpotentOutsidePrime { a, prime } => {
                write!(f, "a={a} prime={}", format_coeffs(prime))
            }
            Witness::CoefficientProduct { f: p, g, i, j } => {
                write!(
                    f,
                    "f={} g={} i={i} j={j}",
                    format_coeffs(p),
                    format_coeffs(g)
                )
            }
            Witness::NoRightAnnihilator { f: p, g } | Witness::NoLeftAnnihilator { f: p, g } => {
                write!(f, "f={} g={}", format_coeffs(p), format_coeffs(g))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(Witness),
    /// No counterexample within the degree bound.
    HoldsUpTo(McCoyBound),
    Unsupported(String),
}

impl Verdict {
    /// True for [`Verdict::Holds`] and [`Verdict::HoldsUpTo`].
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds | Verdict::HoldsUpTo(_))
    }

    pub fn fails(&self) -> bool {
        matches!(self, Verdict::Fails(_))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Fails(w) => Some(w),
            _ => None,
        }
    }

    pub fn token(&self) -> String {
        match self {
            Verdict::Holds => "holds".into(),
            Verdict::Fails(_) => "fails".into(),
            Verdict::HoldsUpTo(b) => format!("holds_up_to({b})"),
            Verdict::Unsupported(_) => "unsupported".into(),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Fails(w) => write!(f, "fails {w}"),
            Verdict::Unsupported(reason) => write!(f, "unsupported reason={reason}"),
            other => f.write_str(&other.token()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    Commutative,
    Duo,
    LeftDuo,
    RightDuo,
    Semicommutative,
    TwoPrimal,
    Symmetric,
    Reversible,
    Abelian,
    DedekindFinite,
    Reduced,
    Armendariz,
    McCoy,
    RightMcCoy,
    LeftMcCoy,
    LinearlyArmendariz,
    LinearlyMcCoy,
    RightLinearlyMcCoy,
}

impl Property {
    pub const ALL: [Property; 18] = [
        Property::Commutative,
        Property::Duo,
        Property::LeftDuo,
        Property::RightDuo,
        Property::Semicommutative,
        Property::TwoPrimal,
        Property::Symmetric,
        Property::Reversible,
        Property::Abelian,
        Property::DedekindFinite,
        Property::Reduced,
        Property::Armendariz,
        Property::McCoy,
        Property::RightMcCoy,
        Property::LeftMcCoy,
        Property::LinearlyArmendariz,
        Property::LinearlyMcCoy,
        Property::RightLinearlyMcCoy,
    ];

    /// Token used in reports and on the command line.
    pub fn id(self) -> &'static str {
        match self {
            Property::Commutative => "commutative",
            Property::Duo => "duo",
            Property::LeftDuo => "left_duo",
            Property::RightDuo => "right_duo",
            Property::Semicommutative => "semicommutative",
            Property::TwoPrimal => "2_primal",
            Property::Symmetric => "symmetric",
            Property::Reversible => "reversible",
            Property::Abelian => "abelian",
            Property::DedekindFinite => "dedekind_finite",
            Property::Reduced => "reduced",
            Property::Armendariz => "armendariz",
            Property::McCoy => "mccoy",
            Property::RightMcCoy => "right_mccoy",
            Property::LeftMcCoy => "left_mccoy",
            Property::LinearlyArmendariz => "linearly_armendariz",
            Property::LinearlyMcCoy => "linearly_mccoy",
            Property::RightLinearlyMcCoy => "right_linearly_mccoy",
        }
    }

    /// Short label as drawn in the diagram.
    pub fn label(self) -> &'static str {
        match self {
            Property::Commutative => "comm.",
            Property::Duo => "Duo",
            Property::LeftDuo => "Left Duo",
            Property::RightDuo => "Right Duo",
            Property::Semicommutative => "s.c.",
            Property::TwoPrimal => "2-primal",
            Property::Symmetric => "symm.",
            Property::Reversible => "rev.",
            Property::Abelian => "Abelian",
            Property::DedekindFinite => "D. Finite",
            Property::Reduced => "red.",
            Property::Armendariz => "Arm.",
            Property::McCoy => "McCoy",
            Property::RightMcCoy => "Right McCoy",
            Property::LeftMcCoy => "Left McCoy",
            Property::LinearlyArmendariz => "lin. arm.",
            Property::LinearlyMcCoy => "lin. McCoy",
            Property::RightLinearlyMcCoy => "right lin. McCoy",
        }
    }

    /// Quantified over polynomials of unbounded degree, hence only decided up
    /// to a bound.
    pub fn is_bounded(self) -> bool {
        matches!(
            self,
            Property::Armendariz | Property::McCoy | Property::RightMcCoy | Property::LeftMcCoy
        )
    }

    pub fn from_id(id: &str) -> Option<Property> {
        Property::ALL.into_iter().find(|p| p.id() == id)
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Decides one property; polynomial-quantified ones use `bound`.
pub fn evaluate_property(ring: &FiniteRing, property: Property, bound: McCoyBound) -> Verdict {
    match property {
        Property::Commutative => is_commutative(ring),
        Property::Duo => is_duo(ring),
        Property::LeftDuo => is_left_duo(ring),
        Property::RightDuo => is_right_duo(ring),
        Property::Semicommutative => is_semicommutative(ring),
        Property::TwoPrimal => is_two_primal(ring),
        Property::Symmetric => is_symmetric(ring),
        Property::Reversible => is_reversible(ring),
        Property::Abelian => is_abelian(ring),
        Property::DedekindFinite => is_dedekind_finite(ring),
        Property::Reduced => is_reduced(ring),
        Property::Armendariz => is_armendariz_up_to(ring, bound),
        Property::McCoy => is_mccoy_up_to(ring, bound),
        Property::RightMcCoy => is_right_mccoy_up_to(ring, bound),
        Property::LeftMcCoy => is_left_mccoy_up_to(ring, bound),
        Property::LinearlyArmendariz => is_linearly_armendariz(ring),
        Property::LinearlyMcCoy => is_linearly_mccoy(ring),
        Property::RightLinearlyMcCoy => is_right_linearly_mccoy(ring),
    }
}

/// Verdicts for one ring, in the order the properties were requested.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub ring: String,
    pub verdicts: Vec<(Property, Verdict)>,
}

impl PropertyReport {
    pub fn verdict(&self, property: Property) -> Option<&Verdict> {
        self.verdicts
            .iter()
            .find(|(p, _)| *p == property)
            .map(|(_, v)| v)
    }

    pub fn any_failure(&self) -> bool {
        self.verdicts.iter().any(|(_, v)| v.fails())
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, v) in &self.verdicts {
            writeln!(f, "ring {} property {} verdict {}", self.ring, p.id(), v)?;
        }
        Ok(())
    }
}

/// Evaluates the requested properties, in parallel, preserving order.
pub fn evaluate(ring: &FiniteRing, properties: &[Property], bound: McCoyBound) -> PropertyReport {
    let verdicts = properties
        .par_iter()
        .map(|&p| (p, evaluate_property(ring, p, bound)))
        .collect();
    PropertyReport {
        ring: ring.name().to_string(),
        verdicts,
    }
}
