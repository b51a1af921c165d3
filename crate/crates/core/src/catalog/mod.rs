//! Ring constructors, the builtin registry and ring corpora.

mod enumerate;
mod iso;

use std::fs;
use std::path::Path;

pub use enumerate::{additive_groups, enumerate_unital_rings, MAX_ENUMERATION_ORDER};
pub use iso::{are_isomorphic, find_isomorphism};

use crate::error::{Error, Result};
use crate::format::load_ring;
use crate::properties::is_commutative;
use crate::ring::{ring_from_fn, Elem, FiniteRing, MAX_ORDER};

/// Integers modulo `n`; element `i` is the residue `i`.
pub fn make_zn(n: usize) -> Result<FiniteRing> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("Z_n needs n >= 2, got {n}")));
    }
    ring_from_fn(
        format!("Z{n}"),
        n,
        |a, b| (a + b) % n,
        |a, b| (a * b) % n,
        true,
    )
}

/// The zero ring, in which `0 = 1`.
pub fn make_trivial() -> FiniteRing {
    ring_from_fn("Z1".into(), 1, |_, _| 0, |_, _| 0, true).expect("zero ring is valid")
}

/// The field with four elements. Element `c0 + 2*c1` stands for `c0 + c1*w`
/// with `w^2 = w + 1`.
pub fn make_gf4() -> FiniteRing {
    ring_from_fn("F4".into(), 4, |a, b| a ^ b, gf4_mul, true).expect("GF(4) is valid")
}

fn gf4_mul(a: usize, b: usize) -> usize {
    let (a0, a1) = (a & 1, a >> 1);
    let (b0, b1) = (b & 1, b >> 1);
    let c0 = a0 & b0;
    let c1 = (a0 & b1) ^ (a1 & b0);
    let c2 = a1 & b1;
    (c0 ^ c2) | ((c1 ^ c2) << 1)
}

/// `F4[t; s]/(t^2)` with `s` the Frobenius map, so `t*c = c^2*t`.
///
/// Order 16, local, noncommutative, and both left and right Duo: its only
/// proper nonzero one-sided ideal is `F4*t`. Element `u + 4*v` stands for
/// `u + v*t` with `u, v` indices into [`make_gf4`].
pub fn make_skew_dual_gf4() -> FiniteRing {
    let frob = |c: usize| gf4_mul(c, c);
    ring_from_fn(
        "F4skew".into(),
        16,
        |a, b| a ^ b,
        |a, b| {
            let (u, v) = (a & 3, a >> 2);
            let (x, y) = (b & 3, b >> 2);
            let lo = gf4_mul(u, x);
            let hi = gf4_mul(u, y) ^ gf4_mul(v, frob(x));
            lo | (hi << 2)
        },
        true,
    )
    .expect("skew dual numbers are valid")
}

/// Truncated polynomials `Z_n[t]/(t^k)`. Element `sum c_i * n^i` stands
/// for `sum c_i t^i`.
pub fn make_truncated(n: usize, k: usize) -> Result<FiniteRing> {
    if n < 2 || k == 0 {
        return Err(Error::InvalidArgument(format!(
            "Z_n[t]/(t^k) needs n >= 2 and k >= 1, got n={n}, k={k}"
        )));
    }
    let order = (0..k).try_fold(1usize, |acc, _| {
        acc.checked_mul(n).filter(|&o| o <= MAX_ORDER)
    });
    let order = order.ok_or(Error::OrderTooLarge {
        order: n.saturating_pow(k as u32),
        max: MAX_ORDER,
    })?;
    let digits = move |mut x: usize| {
        let mut d = vec![0; k];
        for slot in d.iter_mut() {
            *slot = x % n;
            x /= n;
        }
        d
    };
    let pack = move |d: &[usize]| d.iter().rev().fold(0, |acc, &c| acc * n + c);
    ring_from_fn(
        format!("Z{n}[t]/(t^{k})"),
        order,
        |a, b| {
            let (a, b) = (digits(a), digits(b));
            pack(
                &a.iter()
                    .zip(&b)
                    .map(|(x, y)| (x + y) % n)
                    .collect::<Vec<_>>(),
            )
        },
        |a, b| {
            let (a, b) = (digits(a), digits(b));
            let mut c = vec![0; k];
            for i in 0..k {
                for j in 0..k - i {
                    c[i + j] = (c[i + j] + a[i] * b[j]) % n;
                }
            }
            pack(&c)
        },
        true,
    )
}

/// Componentwise product; element `(x, y)` has index `x * |b| + y`.
pub fn direct_product(a: &FiniteRing, b: &FiniteRing) -> Result<FiniteRing> {
    if a.is_unital() != b.is_unital() {
        return Err(Error::MixedUnitality);
    }
    let kb = b.order();
    let split = |i: usize| (Elem::new(i / kb), Elem::new(i % kb));
    ring_from_fn(
        format!("{}x{}", a.name(), b.name()),
        a.order() * kb,
        |x, y| {
            let ((x1, x2), (y1, y2)) = (split(x), split(y));
            a.add(x1, y1).index() * kb + b.add(x2, y2).index()
        },
        |x, y| {
            let ((x1, x2), (y1, y2)) = (split(x), split(y));
            a.mul(x1, y1).index() * kb + b.mul(x2, y2).index()
        },
        a.is_unital(),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixShape {
    Full2x2,
    UpperTriangular2x2,
}

/// Index of the matrix `[[m0, m1], [m2, m3]]` (entries are base indices).
///
/// Full matrices use `m0 + k*m1 + k^2*m2 + k^3*m3`; upper triangular ones
/// ignore `m2` and use `m0 + k*m1 + k^2*m3`.
pub fn matrix_elem(base: &FiniteRing, shape: MatrixShape, m: [usize; 4]) -> Elem {
    let k = base.order();
    match shape {
        MatrixShape::Full2x2 => Elem::new(m[0] + k * m[1] + k * k * m[2] + k * k * k * m[3]),
        MatrixShape::UpperTriangular2x2 => {
            debug_assert_eq!(m[2], 0, "upper triangular matrix with nonzero (2,1) entry");
            Elem::new(m[0] + k * m[1] + k * k * m[3])
        }
    }
}

fn matrix_entries(k: usize, shape: MatrixShape, i: usize) -> [Elem; 4] {
    match shape {
        MatrixShape::Full2x2 => {
            [i % k, (i / k) % k, (i / (k * k)) % k, i / (k * k * k)].map(Elem::new)
        }
        MatrixShape::UpperTriangular2x2 => [i % k, (i / k) % k, 0, i / (k * k)].map(Elem::new),
    }
}

/// 2x2 matrices (or upper triangular 2x2 matrices) over a commutative
/// unital base ring.
pub fn make_matrix_ring(base: &FiniteRing, shape: MatrixShape) -> Result<FiniteRing> {
    if !base.is_unital() || !is_commutative(base).holds() {
        return Err(Error::BaseNotCommutativeUnital);
    }
    let k = base.order();
    let (order, prefix) = match shape {
        MatrixShape::Full2x2 => (k.pow(4), "M2"),
        MatrixShape::UpperTriangular2x2 => (k.pow(3), "U2"),
    };
    let encode = |m: [Elem; 4]| matrix_elem(base, shape, m.map(Elem::index)).index();
    let r = base;
    ring_from_fn(
        format!("{prefix}{}", base.name()),
        order,
        |x, y| {
            let (a, b) = (matrix_entries(k, shape, x), matrix_entries(k, shape, y));
            encode([0, 1, 2, 3].map(|i| r.add(a[i], b[i])))
        },
        |x, y| {
            let (a, b) = (matrix_entries(k, shape, x), matrix_entries(k, shape, y));
            let dot = |p: Elem, q: Elem, s: Elem, t: Elem| r.add(r.mul(p, q), r.mul(s, t));
            encode([
                dot(a[0], b[0], a[1], b[2]),
                dot(a[0], b[1], a[1], b[3]),
                dot(a[2], b[0], a[3], b[2]),
                dot(a[2], b[1], a[3], b[3]),
            ])
        },
        true,
    )
}

/// Where a corpus entry came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Builtin,
    Enumerated,
    File,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Builtin => "builtin",
            Provenance::Enumerated => "enumerated",
            Provenance::File => "file",
        }
    }
}

/// A list of validated rings with unique names.
#[derive(Clone, Debug, Default)]
pub struct RingCorpus {
    rings: Vec<FiniteRing>,
    provenance: Vec<Provenance>,
}

impl RingCorpus {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, ring: FiniteRing, provenance: Provenance) -> Result<()> {
        if self.rings.iter().any(|r| r.name() == ring.name()) {
            return Err(Error::DuplicateName(ring.name().to_string()));
        }
        self.rings.push(ring);
        self.provenance.push(provenance);
        Ok(())
    }

    pub fn extend(&mut self, other: RingCorpus) -> Result<()> {
        for (ring, prov) in other.rings.into_iter().zip(other.provenance) {
            self.push(ring, prov)?;
        }
        Ok(())
    }

    pub fn rings(&self) -> &[FiniteRing] {
        &self.rings
    }

    pub fn iter(&self) -> impl Iterator<Item = (&FiniteRing, Provenance)> {
        self.rings.iter().zip(self.provenance.iter().copied())
    }

    pub fn len(&self) -> usize {
        self.rings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rings.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&FiniteRing> {
        self.rings.iter().find(|r| r.name() == name)
    }

    /// Every `.ring` file in a directory, in file-name order.
    pub fn load_dir(dir: &Path) -> Result<Self> {
        let io_err = |e: std::io::Error| Error::Io {
            path: dir.to_path_buf(),
            message: e.to_string(),
        };
        let mut paths: Vec<_> = fs::read_dir(dir)
            .map_err(io_err)?
            .map(|entry| entry.map(|e| e.path()))
            .collect::<std::result::Result<_, _>>()
            .map_err(io_err)?;
        paths.retain(|p| p.extension().is_some_and(|ext| ext == "ring"));
        paths.sort();
        let mut corpus = RingCorpus::new();
        for path in paths {
            corpus.push(load_ring(&path)?, Provenance::File)?;
        }
        Ok(corpus)
    }
}

/// Names accepted by [`builtin`] besides `Z<n>` and `order<k>:<i>`.
pub const NAMED_BUILTINS: &[&str] = &["Z1", "Z2xZ2", "Z2xZ4", "U2Z2", "M2Z2", "F4", "F4skew"];

/// Looks up a builtin ring by registry name.
///
/// `Z<n>` for any `n >= 2`, the names in [`NAMED_BUILTINS`], and
/// `Z<n>[t]/(t^<k>)`, and `order<k>:<i>` for the `i`-th unital ring of order `k <= 4` as listed by
/// [`enumerate_unital_rings`].
pub fn builtin(name: &str) -> Result<FiniteRing> {
    let z2 = || make_zn(2).expect("Z2");
    match name {
        "Z1" => return Ok(make_trivial()),
        "Z2xZ2" => return direct_product(&z2(), &z2()),
        "Z2xZ4" => return direct_product(&z2(), &make_zn(4)?),
        "U2Z2" => return make_matrix_ring(&z2(), MatrixShape::UpperTriangular2x2),
        "M2Z2" => return make_matrix_ring(&z2(), MatrixShape::Full2x2),
        "F4" => return Ok(make_gf4()),
        "F4skew" => return Ok(make_skew_dual_gf4()),
        _ => {}
    }
    if let Some(n) = name.strip_prefix('Z').and_then(|s| s.parse::<usize>().ok()) {
        if n >= 2 {
            return make_zn(n);
        }
    }
    if let Some((n, k)) = name
        .strip_prefix('Z')
        .and_then(|rest| rest.strip_suffix(')'))
        .and_then(|rest| rest.split_once("[t]/(t^"))
        .and_then(|(n, k)| Some((n.parse::<usize>().ok()?, k.parse::<usize>().ok()?)))
    {
        return make_truncated(n, k);
    }
    if let Some((order, index)) = name
        .strip_prefix("order")
        .and_then(|rest| rest.split_once(':'))
        .and_then(|(o, i)| Some((o.parse::<usize>().ok()?, i.parse::<usize>().ok()?)))
    {
        if (1..=MAX_ENUMERATION_ORDER).contains(&order) {
            let corpus = enumerate_unital_rings(order)?;
            if let Some(r) = corpus.rings().get(index) {
                return Ok(r.clone());
            }
        }
    }
    Err(Error::UnknownBuiltin(name.to_string()))
}

/// The corpus used for diagram runs: `Z2..Z12`, `Z2xZ2`, `Z2xZ4`, `U2Z2`,
/// `M2Z2` and the unital rings of order 4.
pub fn builtin_corpus() -> RingCorpus {
    let mut corpus = RingCorpus::new();
    let mut names: Vec<String> = (2..=12).map(|n| format!("Z{n}")).collect();
    names.extend(["Z2xZ2", "Z2xZ4", "U2Z2", "M2Z2"].map(String::from));
    for name in names {
        corpus
            .push(builtin(&name).expect("builtin ring"), Provenance::Builtin)
            .expect("builtin names are unique");
    }
    corpus
        .extend(enumerate_unital_rings(4).expect("order 4 enumeration"))
        .expect("enumerated names are unique");
    corpus
}

/// The builtin corpus plus rings that are useful beyond it: the field of
/// order 4, `Z2xZ3`, the noncommutative Duo ring `F4skew`, and
/// `Z4[t]/(t^2)`, a commutative ring that is not Armendariz.
pub fn extended_corpus() -> RingCorpus {
    let mut corpus = builtin_corpus();
    let z2xz3 = direct_product(&make_zn(2).expect("Z2"), &make_zn(3).expect("Z3")).expect("Z2xZ3");
    let truncated = make_truncated(4, 2).expect("Z4[t]/(t^2)");
    for ring in [make_gf4(), z2xz3, make_skew_dual_gf4(), truncated] {
        corpus
            .push(ring, Provenance::Builtin)
            .expect("extended names are unique");
    }
    corpus
}
