//! The reduction procedures producing a nonzero right annihilator of `f`
//! from a pair `f*g = 0`, and the replay that re-checks their traces.
//!
//! All searches scan element indices upwards and take the first match, so
//! runs are reproducible.

use super::trace::{AnnihilatorTrace, Method, Outcome, Step, StepKind};
use crate::error::{Error, Result};
use crate::ideal::left_ideal_generated_by;
use crate::poly::{normalize, right_annihilates};
use crate::ring::{Elem, FiniteRing};

pub(crate) fn strip(v: &[Elem]) -> Vec<Elem> {
    v.get(1..).unwrap_or_default().to_vec()
}

pub(crate) fn scale_left(ring: &FiniteRing, a: Elem, v: &[Elem]) -> Vec<Elem> {
    let mut out: Vec<Elem> = v.iter().map(|&x| ring.mul(a, x)).collect();
    normalize(&mut out);
    out
}

pub(crate) fn scale_right(ring: &FiniteRing, v: &[Elem], a: Elem) -> Vec<Elem> {
    let mut out: Vec<Elem> = v.iter().map(|&x| ring.mul(x, a)).collect();
    normalize(&mut out);
    out
}

fn first_nonzero(v: &[Elem]) -> Option<Elem> {
    v.iter().copied().find(|x| !x.is_zero())
}

fn constant(v: &[Elem]) -> Elem {
    v.first().copied().unwrap_or(Elem::ZERO)
}

fn ideal_of(ring: &FiniteRing, g: &[Elem]) -> Vec<Elem> {
    left_ideal_generated_by(ring, g)
        .map(|i| i.members().to_vec())
        .unwrap_or_default()
}

/// First nonzero right annihilator of `f` inside the left ideal of `g`,
/// else anywhere in the ring.
pub(crate) fn preferred_annihilator(ring: &FiniteRing, f: &[Elem], g: &[Elem]) -> Option<Elem> {
    let ideal = ideal_of(ring, g);
    ideal
        .iter()
        .copied()
        .chain(ring.nonzero_elements())
        .find(|&x| !x.is_zero() && right_annihilates(ring, f, x))
}

/// Smallest `k >= 1` with `a^k*b != 0 = a^(k+1)*b`, searched up to `|R|`.
pub(crate) fn nilpotency_step(ring: &FiniteRing, a: Elem, b: Elem) -> Option<(u32, Elem)> {
    let mut p = a;
    for k in 1..=ring.order() as u32 {
        let pb = ring.mul(p, b);
        if !pb.is_zero() && ring.mul(a, pb).is_zero() {
            return Some((k, p));
        }
        p = ring.mul(p, a);
    }
    None
}

struct Run<'a> {
    ring: &'a FiniteRing,
    f: Vec<Elem>,
    g: Vec<Elem>,
    steps: Vec<Step>,
    reductions: usize,
    cap: usize,
}

impl<'a> Run<'a> {
    fn new(ring: &'a FiniteRing, f: &[Elem], g: &[Elem]) -> Self {
        let cap = ring.order() * (f.len() + g.len());
        Run {
            ring,
            f: f.to_vec(),
            g: g.to_vec(),
            steps: Vec::new(),
            reductions: 0,
            cap,
        }
    }

    fn exhausted(&self) -> bool {
        self.reductions >= self.cap
    }

    fn record(&mut self, step: Step) {
        if !matches!(
            step.kind,
            StepKind::BaseF
                | StepKind::BaseG
                | StepKind::BaseLinear
                | StepKind::DegenerateG
                | StepKind::DegenerateF
                | StepKind::Lift
        ) {
            self.reductions += 1;
        }
        self.steps.push(step);
    }

    fn strip_f(&mut self, lift: Option<Elem>) {
        self.f = strip(&self.f);
        let mut step = Step::new(StepKind::StripF, &self.f, &self.g);
        step.witness = lift;
        self.record(step);
    }

    fn strip_g(&mut self) {
        self.g = strip(&self.g);
        self.record(Step::new(StepKind::StripG, &self.f, &self.g));
    }

    fn right_scale_g(&mut self, b0: Elem) {
        self.g = scale_right(self.ring, &self.g, b0);
        self.record(Step::new(StepKind::RightScaleG, &self.f, &self.g).witness(b0));
    }

    fn left_scale_f(&mut self, a0: Elem) {
        self.f = scale_left(self.ring, a0, &self.f);
        self.record(Step::new(StepKind::LeftScaleF, &self.f, &self.g).witness(a0));
    }

    fn marker(&mut self, kind: StepKind, witness: Option<Elem>, r: Option<Elem>) {
        let mut step = Step::new(kind, &self.f, &self.g);
        step.witness = witness;
        step.r = r;
        self.record(step);
    }

    /// Shared base cases of the left Duo procedures.
    fn base(&mut self) -> Option<Option<Elem>> {
        if self.f.len() == 1 {
            let r = first_nonzero(&self.g);
            self.marker(StepKind::BaseF, None, r);
            Some(r)
        } else if self.g.len() == 1 {
            let r = self.g[0];
            self.marker(StepKind::BaseG, None, Some(r));
            Some(Some(r))
        } else if self.f.len() <= 2 && self.g.len() <= 2 {
            let r = preferred_annihilator(self.ring, &self.f, &self.g);
            self.marker(StepKind::BaseLinear, None, r);
            Some(r)
        } else {
            None
        }
    }

    /// Accepts `candidate` if it is a nonzero annihilator of the input `f`
    /// in the ideal of the input `g`; otherwise falls back to the scan.
    fn finish(
        mut self,
        method: Method,
        f0: &[Elem],
        g0: &[Elem],
        candidate: Result<Elem, &str>,
    ) -> AnnihilatorTrace {
        let ring = self.ring;
        let reason = match candidate {
            Ok(r) if r.is_zero() => Some("zero_candidate"),
            Ok(r) if !right_annihilates(ring, f0, r) => Some("not_an_annihilator"),
            Ok(r) if !ideal_of(ring, g0).contains(&r) => Some("outside_ideal"),
            Ok(_) => None,
            Err(why) => Some(why),
        };
        let outcome = match (reason, candidate) {
            (None, Ok(r)) => Outcome::Found(r),
            _ => {
                let r = preferred_annihilator(ring, f0, g0);
                let mut step = Step::new(StepKind::FallbackOracle, &self.f, &self.g);
                step.r = r;
                step.reason = reason.map(str::to_string);
                self.steps.push(step);
                match r {
                    Some(r) => Outcome::Found(r),
                    None => Outcome::Failed("no_nonzero_annihilator".into()),
                }
            }
        };
        AnnihilatorTrace {
            method,
            f: f0.to_vec(),
            g: g0.to_vec(),
            steps: self.steps,
            outcome,
        }
    }
}

/// Induction on `deg f`. While `a0*g != 0`, `g` is replaced by `g*r` with
/// `a0^k*b_j = b_j*r`; once `a0*g = 0`, `a0` is stripped. At degree zero
/// the first nonzero coefficient of `g` annihilates `f`, and each strip is
/// undone by right multiplication with the stripped level's `b0`.
pub(crate) fn right_duo(ring: &FiniteRing, f0: &[Elem], g0: &[Elem]) -> Result<AnnihilatorTrace> {
    let mut run = Run::new(ring, f0, g0);
    let mut lifts = Vec::new();
    let candidate = loop {
        if run.f.len() == 1 {
            let r = first_nonzero(&run.g);
            run.marker(StepKind::BaseF, None, r);
            break r.ok_or("zero_g");
        }
        if run.exhausted() {
            break Err("guard");
        }
        let a0 = run.f[0];
        match run.g.iter().position(|&b| !ring.mul(a0, b).is_zero()) {
            None => {
                let b0 = run.g[0];
                lifts.push(b0);
                run.strip_f(Some(b0));
            }
            Some(j) => {
                let bj = run.g[j];
                let (k, p) = nilpotency_step(ring, a0, bj).ok_or(Error::ExponentNotFound {
                    coeff: j,
                    cap: ring.order(),
                })?;
                let target = ring.mul(p, bj);
                let r = ring
                    .elements()
                    .find(|&r| ring.mul(bj, r) == target)
                    .ok_or(Error::WitnessNotFound { j, k })?;
                run.g = scale_right(ring, &run.g, r);
                let mut step = Step::new(StepKind::DuoWitness, &run.f, &run.g).witness(r);
                step.k = Some(k);
                step.j = Some(j);
                run.record(step);
            }
        }
    };
    let candidate = candidate.map(|mut r| {
        for &b0 in lifts.iter().rev() {
            let lifted = ring.mul(r, b0);
            if !lifted.is_zero() {
                r = lifted;
            }
            run.marker(StepKind::Lift, Some(b0), Some(r));
        }
        r
    });
    Ok(run.finish(Method::RightDuo, f0, g0, candidate))
}

/// Strips `a0` and `b0` where they annihilate, otherwise replaces the pair
/// by `(a0*f, g*b0)`.
pub(crate) fn left_duo_alternative(
    ring: &FiniteRing,
    f0: &[Elem],
    g0: &[Elem],
) -> AnnihilatorTrace {
    let mut run = Run::new(ring, f0, g0);
    let candidate = loop {
        if let Some(r) = run.base() {
            break r.ok_or("no_candidate");
        }
        if run.exhausted() {
            break Err("guard");
        }
        let (a0, b0) = (run.f[0], run.g[0]);
        let a0g = scale_left(ring, a0, &run.g).is_empty();
        let fb0 = scale_right(ring, &run.f, b0).is_empty();
        match (a0g, fb0) {
            (true, true) => {
                run.strip_f(None);
                run.strip_g();
            }
            (true, false) => run.strip_f(None),
            (false, true) => run.strip_g(),
            (false, false) => {
                if scale_right(ring, &run.g, b0).is_empty() {
                    run.marker(StepKind::DegenerateG, Some(b0), Some(b0));
                    break Ok(b0);
                }
                if scale_left(ring, a0, &run.f).is_empty() {
                    run.marker(StepKind::DegenerateF, Some(a0), None);
                } else {
                    run.left_scale_f(a0);
                }
                run.right_scale_g(b0);
            }
        }
    };
    run.finish(Method::LeftDuoAlternative, f0, g0, candidate)
}

/// Lowers `deg f` first (strip `a0` or scale `g` by `b0`), then `deg g`
/// (strip `b0`, after scaling `f` by `a0` if needed).
pub(crate) fn left_duo_induction(ring: &FiniteRing, f0: &[Elem], g0: &[Elem]) -> AnnihilatorTrace {
    let mut run = Run::new(ring, f0, g0);
    let candidate = loop {
        if let Some(r) = run.base() {
            break r.ok_or("no_candidate");
        }
        if run.exhausted() {
            break Err("guard");
        }
        let (a0, b0) = (run.f[0], run.g[0]);
        if run.f.len() > 2 {
            if scale_left(ring, a0, &run.g).is_empty() {
                run.strip_f(None);
            } else if scale_right(ring, &run.g, b0).is_empty() {
                run.marker(StepKind::DegenerateG, Some(b0), Some(b0));
                break Ok(b0);
            } else {
                run.right_scale_g(b0);
            }
        } else if scale_right(ring, &run.f, b0).is_empty() {
            run.strip_g();
        } else if scale_left(ring, a0, &run.f).is_empty() {
            run.marker(StepKind::DegenerateF, Some(a0), None);
            break Err("degenerate_f");
        } else {
            run.left_scale_f(a0);
            run.strip_g();
        }
    };
    run.finish(Method::LeftDuoInduction, f0, g0, candidate)
}

pub(crate) fn oracle(ring: &FiniteRing, f0: &[Elem], g0: &[Elem]) -> AnnihilatorTrace {
    let outcome = match preferred_annihilator(ring, f0, g0) {
        Some(r) => Outcome::Found(r),
        None => Outcome::Failed("no_nonzero_annihilator".into()),
    };
    AnnihilatorTrace {
        method: Method::Oracle,
        f: f0.to_vec(),
        g: g0.to_vec(),
        steps: Vec::new(),
        outcome,
    }
}

fn mismatch(step: usize, message: impl Into<String>) -> Error {
    Error::ReplayMismatch {
        step,
        message: message.into(),
    }
}

pub(crate) fn replay_steps(ring: &FiniteRing, trace: &AnnihilatorTrace) -> Result<()> {
    if matches!(trace.method, Method::LeftPower | Method::RightPower) {
        return Err(Error::InvalidArgument(
            "formula methods do not produce traces".into(),
        ));
    }
    for &x in trace.f.iter().chain(&trace.g) {
        ring.element(x.index())?;
    }
    let (f0, g0) = (&trace.f, &trace.g);
    let (mut f, mut g) = (f0.clone(), g0.clone());
    let mut r: Option<Elem> = None;
    let mut lifts = Vec::new();
    for (i, step) in trace.steps.iter().enumerate() {
        let need_witness = || step.witness.ok_or_else(|| mismatch(i, "missing witness"));
        let mut expect_r = r;
        match step.kind {
            StepKind::StripF => {
                if f.len() < 2 {
                    return Err(mismatch(i, "strip_f on a constant"));
                }
                if let Some(w) = step.witness {
                    if w != constant(&g) {
                        return Err(mismatch(i, "lift factor is not b0"));
                    }
                    lifts.push(w);
                }
                f = strip(&f);
            }
            StepKind::StripG => {
                if g.len() < 2 {
                    return Err(mismatch(i, "strip_g on a constant"));
                }
                g = strip(&g);
            }
            StepKind::RightScaleG => {
                let w = need_witness()?;
                if w != constant(&g) {
                    return Err(mismatch(i, "scale factor is not b0"));
                }
                g = scale_right(ring, &g, w);
            }
            StepKind::LeftScaleF => {
                let w = need_witness()?;
                if w != constant(&f) {
                    return Err(mismatch(i, "scale factor is not a0"));
                }
                f = scale_left(ring, w, &f);
            }
            StepKind::DuoWitness => {
                let w = need_witness()?;
                let (k, j) = step
                    .k
                    .zip(step.j)
                    .ok_or_else(|| mismatch(i, "missing k or j"))?;
                let a0 = constant(&f);
                let bj = *g.get(j).ok_or_else(|| mismatch(i, "j out of range"))?;
                let lhs = ring.mul(ring.pow(a0, k.max(1)), bj);
                if k == 0 || lhs.is_zero() || !ring.mul(a0, lhs).is_zero() || lhs != ring.mul(bj, w)
                {
                    return Err(mismatch(i, "duo identity a0^k*b_j = b_j*r does not hold"));
                }
                g = scale_right(ring, &g, w);
            }
            StepKind::DegenerateG => {
                let w = need_witness()?;
                if w != constant(&g) || !scale_right(ring, &g, w).is_empty() {
                    return Err(mismatch(i, "g*b0 is not zero"));
                }
                expect_r = Some(w);
            }
            StepKind::DegenerateF => {
                let w = need_witness()?;
                if w != constant(&f) || !scale_left(ring, w, &f).is_empty() {
                    return Err(mismatch(i, "a0*f is not zero"));
                }
            }
            StepKind::BaseF => {
                if f.len() != 1 {
                    return Err(mismatch(i, "base_f needs deg f = 0"));
                }
                expect_r = first_nonzero(&g);
            }
            StepKind::BaseG => {
                if g.len() != 1 {
                    return Err(mismatch(i, "base_g needs deg g = 0"));
                }
                expect_r = Some(g[0]);
            }
            StepKind::BaseLinear => {
                if f.len() > 2 || g.len() > 2 {
                    return Err(mismatch(i, "base_linear needs degrees at most one"));
                }
                expect_r = preferred_annihilator(ring, &f, &g);
            }
            StepKind::Lift => {
                let b0 = lifts
                    .pop()
                    .ok_or_else(|| mismatch(i, "lift without strip"))?;
                if step.witness != Some(b0) {
                    return Err(mismatch(i, "lift factor differs from stripped b0"));
                }
                let cur = r.ok_or_else(|| mismatch(i, "lift before a base case"))?;
                let lifted = ring.mul(cur, b0);
                expect_r = Some(if lifted.is_zero() { cur } else { lifted });
            }
            StepKind::FallbackOracle => expect_r = preferred_annihilator(ring, f0, g0),
        }
        if step.f != f || step.g != g {
            return Err(mismatch(i, "recorded polynomials differ from re-execution"));
        }
        if step.r.is_some() || expect_r != r {
            if step.r != expect_r {
                return Err(mismatch(i, "recorded answer differs from re-execution"));
            }
            r = expect_r;
        }
    }
    let n = trace.steps.len();
    match (&trace.outcome, trace.method) {
        (Outcome::Found(x), _) if Some(*x) == r => Ok(()),
        (Outcome::Failed(_), Method::Oracle) | (Outcome::Found(_), Method::Oracle) => {
            if trace.outcome == oracle(ring, f0, g0).outcome {
                Ok(())
            } else {
                Err(mismatch(n, "oracle answer differs"))
            }
        }
        (Outcome::Failed(_), _) if r.is_none() => Ok(()),
        _ => Err(mismatch(n, "result differs from the last recorded answer")),
    }
}
