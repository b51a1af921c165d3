//! Dense polynomials over a finite, possibly noncommutative ring.
//!
//! Coefficients are stored low degree first and kept normalized: the last
//! stored coefficient is nonzero, and the zero polynomial is the empty
//! sequence with no degree. Products keep factor order, so the coefficient
//! of `x^j` in `f*g` is `sum_i a_i * b_{j-i}` with `a_i` on the left.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{Elem, FiniteRing};

#[derive(Clone, Debug)]
pub struct Polynomial<'r> {
    ring: &'r FiniteRing,
    coeffs: Vec<Elem>,
}

impl PartialEq for Polynomial<'_> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(self.ring, other.ring) && self.coeffs == other.coeffs
    }
}

impl Eq for Polynomial<'_> {}

fn same_ring(a: &FiniteRing, b: &FiniteRing) -> bool {
    std::ptr::eq(a, b) || a == b
}

/// Drops trailing zero coefficients.
pub fn normalize(coeffs: &mut Vec<Elem>) {
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
}

/// Convolution of coefficient slices into `out`, normalized.
pub fn convolve_into(ring: &FiniteRing, f: &[Elem], g: &[Elem], out: &mut Vec<Elem>) {
    out.clear();
    if f.is_empty() || g.is_empty() {
        return;
    }
    out.resize(f.len() + g.len() - 1, Elem::ZERO);
    for (i, &a) in f.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, &b) in g.iter().enumerate() {
            let p = ring.mul(a, b);
            out[i + j] = ring.add(out[i + j], p);
        }
    }
    normalize(out);
}

/// True iff `f*g = 0`, without materializing the product.
pub fn product_is_zero(ring: &FiniteRing, f: &[Elem], g: &[Elem]) -> bool {
    if f.is_empty() || g.is_empty() {
        return true;
    }
    for j in 0..f.len() + g.len() - 1 {
        let lo = j.saturating_sub(g.len() - 1);
        let hi = j.min(f.len() - 1);
        let mut acc = Elem::ZERO;
        for i in lo..=hi {
            acc = ring.add(acc, ring.mul(f[i], g[j - i]));
        }
        if !acc.is_zero() {
            return false;
        }
    }
    true
}

/// True iff every coefficient of `f` times `r` (on the right) vanishes.
#[inline]
pub fn right_annihilates(ring: &FiniteRing, f: &[Elem], r: Elem) -> bool {
    f.iter().all(|&a| ring.mul(a, r).is_zero())
}

/// True iff `l` times every coefficient of `g` (on the left) vanishes.
#[inline]
pub fn left_annihilates(ring: &FiniteRing, l: Elem, g: &[Elem]) -> bool {
    g.iter().all(|&b| ring.mul(l, b).is_zero())
}

/// All nonzero coefficient vectors of degree at most `max_degree`, in
/// base-`k` counting order with the constant term as the least significant
/// digit.
pub fn nonzero_coefficient_vectors(ring: &FiniteRing, max_degree: usize) -> Vec<Vec<Elem>> {
    let k = ring.order();
    let len = max_degree + 1;
    let total = k
        .checked_pow(len as u32)
        .expect("coefficient space too large");
    let mut out = Vec::with_capacity(total.saturating_sub(1));
    let mut digits = vec![0usize; len];
    for _ in 1..total {
        for d in digits.iter_mut() {
            *d += 1;
            if *d < k {
                break;
            }
            *d = 0;
        }
        let mut v: Vec<Elem> = digits.iter().map(|&d| Elem::new(d)).collect();
        normalize(&mut v);
        out.push(v);
    }
    out
}

pub fn format_coeffs(coeffs: &[Elem]) -> String {
    if coeffs.is_empty() {
        return "0".to_string();
    }
    coeffs
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl<'r> Polynomial<'r> {
    /// Builds a polynomial from coefficients (low degree first), normalizing.
    pub fn new(ring: &'r FiniteRing, mut coeffs: Vec<Elem>) -> Self {
        debug_assert!(coeffs.iter().all(|c| c.index() < ring.order()));
        normalize(&mut coeffs);
        Polynomial { ring, coeffs }
    }

    pub fn zero(ring: &'r FiniteRing) -> Self {
        Polynomial {
            ring,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(ring: &'r FiniteRing, c: Elem) -> Self {
        Self::new(ring, vec![c])
    }

    /// Checks every index against the ring order.
    pub fn from_indices(ring: &'r FiniteRing, indices: &[usize]) -> Result<Self> {
        let coeffs = indices
            .iter()
            .map(|&i| ring.element(i))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(ring, coeffs))
    }

    /// Parses a literal such as `2,2` (meaning `2 + 2x`); whitespace is
    /// ignored.
    pub fn parse(ring: &'r FiniteRing, literal: &str) -> Result<Self> {
        let cleaned: String = literal.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(Error::InvalidArgument("empty polynomial literal".into()));
        }
        let indices = cleaned
            .split(',')
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| {
                    Error::InvalidArgument(format!("invalid coefficient {tok:?} in {literal:?}"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_indices(ring, &indices)
    }

    pub fn ring(&self) -> &'r FiniteRing {
        self.ring
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    pub fn constant_term(&self) -> Elem {
        self.coeff(0)
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn leading(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(Elem::ZERO)
    }

    fn check_ring(&self, other: &Polynomial<'_>) -> Result<()> {
        if same_ring(self.ring, other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial<'_>) -> Result<Polynomial<'r>> {
        self.check_ring(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| self.ring.add(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(Polynomial::new(self.ring, coeffs))
    }

    pub fn mul(&self, other: &Polynomial<'_>) -> Result<Polynomial<'r>> {
        self.check_ring(other)?;
        let mut out = Vec::new();
        convolve_into(self.ring, &self.coeffs, &other.coeffs, &mut out);
        Ok(Polynomial {
            ring: self.ring,
            coeffs: out,
        })
    }

    /// `a * f`, coefficientwise.
    pub fn scale_left(&self, a: Elem) -> Polynomial<'r> {
        let coeffs = self.coeffs.iter().map(|&c| self.ring.mul(a, c)).collect();
        Polynomial::new(self.ring, coeffs)
    }

    /// `f * a`, coefficientwise.
    pub fn scale_right(&self, a: Elem) -> Polynomial<'r> {
        let coeffs = self.coeffs.iter().map(|&c| self.ring.mul(c, a)).collect();
        Polynomial::new(self.ring, coeffs)
    }

    /// `(f - a_0) / x`.
    pub fn strip_constant(&self) -> Result<Polynomial<'r>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Polynomial::new(self.ring, self.coeffs[1..].to_vec()))
    }

    /// `x * f`.
    pub fn shift_up(&self) -> Polynomial<'r> {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Elem::ZERO);
        coeffs.extend_from_slice(&self.coeffs);
        Polynomial {
            ring: self.ring,
            coeffs,
        }
    }

    /// Frames the polynomial in a window of `width` coefficient slots.
    pub fn window(&self, width: usize) -> Result<CoefficientWindow<'r>> {
        CoefficientWindow::new(self.clone(), width)
    }

    /// Reversal in the window of its own length, `x^m f(1/x)`.
    pub fn reversed(&self) -> Polynomial<'r> {
        CoefficientWindow::new(self.clone(), self.coeffs.len())
            .expect("own length always fits")
            .reverse()
    }

    /// `f * r = 0`.
    pub fn is_right_annihilated_by(&self, r: Elem) -> bool {
        right_annihilates(self.ring, &self.coeffs, r)
    }

    /// `l * f = 0`.
    pub fn is_left_annihilated_by(&self, l: Elem) -> bool {
        left_annihilates(self.ring, l, &self.coeffs)
    }
}

impl fmt::Display for Polynomial<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_coeffs(&self.coeffs))
    }
}

/// A polynomial viewed inside a fixed number of coefficient slots.
///
/// Reversal depends on the window, not on the stored degree: when zero
/// divisors make a product's top coefficients vanish, the product must be
/// reversed in the window `deg f + deg g + 1` for the reversal of `f*g` to
/// equal the product of the reversals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientWindow<'r> {
    poly: Polynomial<'r>,
    width: usize,
}

impl<'r> CoefficientWindow<'r> {
    pub fn new(poly: Polynomial<'r>, width: usize) -> Result<Self> {
        if width < poly.coeffs.len() {
            return Err(Error::WindowTooNarrow {
                width,
                len: poly.coeffs.len(),
            });
        }
        Ok(CoefficientWindow { poly, width })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn poly(&self) -> &Polynomial<'r> {
        &self.poly
    }

    /// Coefficients `c_0..c_{w-1}` become `c_{w-1}..c_0`, then normalized.
    pub fn reverse(&self) -> Polynomial<'r> {
        let coeffs = (0..self.width).rev().map(|i| self.poly.coeff(i)).collect();
        Polynomial::new(self.poly.ring, coeffs)
    }
}
