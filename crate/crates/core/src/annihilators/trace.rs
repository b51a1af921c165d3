//! Step records of an annihilator procedure and their text form.
//!
//! ```text
//! method right_duo
//! input f=2,2 g=2
//! step 0 strip_f f=2 g=2 witness=2
//! step 1 base_f f=2 g=2 r=2
//! step 2 lift f=2 g=2 witness=2 r=2
//! result 2
//! ```

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::poly::format_coeffs;
use crate::ring::{Elem, FiniteRing};

/// Which procedure produced a trace.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// `a0^(n+1)` and `am^(n+1)` as left annihilators of `g`.
    LeftPower,
    /// `b0^(m+1)` and `bn^(m+1)` as right annihilators of `f`.
    RightPower,
    /// Induction on `deg f` with Duo witnesses, for right Duo rings.
    RightDuo,
    /// Simultaneous scaling `a0*f`, `g*b0`, for left Duo rings.
    LeftDuoAlternative,
    /// Double induction on `(deg f, deg g)`, for left Duo rings.
    LeftDuoInduction,
    /// Exhaustive scan.
    Oracle,
}

impl Method {
    pub const ALL: [Method; 6] = [
        Method::LeftPower,
        Method::RightPower,
        Method::RightDuo,
        Method::LeftDuoAlternative,
        Method::LeftDuoInduction,
        Method::Oracle,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Method::LeftPower => "left_power",
            Method::RightPower => "right_power",
            Method::RightDuo => "right_duo",
            Method::LeftDuoAlternative => "left_duo_alternative",
            Method::LeftDuoInduction => "left_duo_induction",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.id() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown method {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StepKind {
    /// `f <- (f - a0)/x`.
    StripF,
    /// `g <- (g - b0)/x`.
    StripG,
    /// `g <- g*b0`.
    RightScaleG,
    /// `f <- a0*f`.
    LeftScaleF,
    /// `g <- g*r` where `a0^k*b_j = b_j*r`.
    DuoWitness,
    /// `g*b0 = 0`; `b0` is the answer.
    DegenerateG,
    /// `a0*f = 0`; marker only.
    DegenerateF,
    /// `deg f = 0`; first nonzero coefficient of `g`.
    BaseF,
    /// `deg g = 0`; the single coefficient of `g`.
    BaseG,
    /// Both degrees at most one; search inside the ideal of `g`.
    BaseLinear,
    /// Unwinds one `strip_f` of the right Duo procedure: `r <- r*b0` unless
    /// that is zero.
    Lift,
    /// The reduction stalled or produced an unsound candidate; the answer
    /// comes from the exhaustive scan.
    FallbackOracle,
}

impl StepKind {
    pub const ALL: [StepKind; 12] = [
        StepKind::StripF,
        StepKind::StripG,
        StepKind::RightScaleG,
        StepKind::LeftScaleF,
        StepKind::DuoWitness,
        StepKind::DegenerateG,
        StepKind::DegenerateF,
        StepKind::BaseF,
        StepKind::BaseG,
        StepKind::BaseLinear,
        StepKind::Lift,
        StepKind::FallbackOracle,
    ];

    pub fn id(self) -> &'static str {
        match self {
            StepKind::StripF => "strip_f",
            StepKind::StripG => "strip_g",
            StepKind::RightScaleG => "right_scale_g",
            StepKind::LeftScaleF => "left_scale_f",
            StepKind::DuoWitness => "duo_witness",
            StepKind::DegenerateG => "degenerate_g",
            StepKind::DegenerateF => "degenerate_f",
            StepKind::BaseF => "base_f",
            StepKind::BaseG => "base_g",
            StepKind::BaseLinear => "base_linear",
            StepKind::Lift => "lift",
            StepKind::FallbackOracle => "fallback_oracle",
        }
    }

    fn from_id(s: &str) -> Option<StepKind> {
        StepKind::ALL.into_iter().find(|k| k.id() == s)
    }
}

/// One reduction. `f` and `g` are the pair after the step; the pair before
/// it is the previous step's (or the input).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub kind: StepKind,
    pub f: Vec<Elem>,
    pub g: Vec<Elem>,
    pub witness: Option<Elem>,
    pub k: Option<u32>,
    pub j: Option<usize>,
    /// Running answer, present on steps that set it.
    pub r: Option<Elem>,
    /// Why the fallback fired.
    pub reason: Option<String>,
}

impl Step {
    pub(crate) fn new(kind: StepKind, f: &[Elem], g: &[Elem]) -> Self {
        Step {
            kind,
            f: f.to_vec(),
            g: g.to_vec(),
            witness: None,
            k: None,
            j: None,
            r: None,
            reason: None,
        }
    }

    pub(crate) fn witness(mut self, w: Elem) -> Self {
        self.witness = Some(w);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Found(Elem),
    Failed(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnihilatorTrace {
    pub method: Method,
    pub f: Vec<Elem>,
    pub g: Vec<Elem>,
    pub steps: Vec<Step>,
    pub outcome: Outcome,
}

impl AnnihilatorTrace {
    pub fn result(&self) -> Option<Elem> {
        match self.outcome {
            Outcome::Found(r) => Some(r),
            Outcome::Failed(_) => None,
        }
    }

    /// The reduction did not finish on its own.
    pub fn stalled(&self) -> bool {
        self.steps
            .iter()
            .any(|s| s.kind == StepKind::FallbackOracle)
    }

    /// The pair before step `idx`.
    pub fn before(&self, idx: usize) -> (&[Elem], &[Elem]) {
        match idx.checked_sub(1).and_then(|i| self.steps.get(i)) {
            Some(s) => (&s.f, &s.g),
            None => (&self.f, &self.g),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let perr = |line: usize, message: &str| Error::Parse {
            line: line + 1,
            message: message.to_string(),
        };
        let (n, method_line) = lines.next().ok_or_else(|| perr(0, "empty trace"))?;
        let method = method_line
            .strip_prefix("method ")
            .ok_or_else(|| perr(n, "expected `method <id>`"))?
            .parse::<Method>()
            .map_err(|e| perr(n, &e.to_string()))?;
        let (n, input_line) = lines
            .next()
            .ok_or_else(|| perr(n + 1, "missing input line"))?;
        let fields = input_line
            .strip_prefix("input ")
            .ok_or_else(|| perr(n, "expected `input f=.. g=..`"))?;
        let (f, g) = parse_pair(fields).map_err(|m| perr(n, &m))?;
        let mut steps = Vec::new();
        for (n, line) in lines {
            if let Some(rest) = line.strip_prefix("result ") {
                let r = rest
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| perr(n, "bad result element"))?;
                return Ok(AnnihilatorTrace {
                    method,
                    f,
                    g,
                    steps,
                    outcome: Outcome::Found(Elem::new(r)),
                });
            }
            if let Some(rest) = line.strip_prefix("failed ") {
                let outcome = Outcome::Failed(rest.trim().to_string());
                return Ok(AnnihilatorTrace {
                    method,
                    f,
                    g,
                    steps,
                    outcome,
                });
            }
            steps.push(parse_step(line, steps.len()).map_err(|m| perr(n, &m))?);
        }
        Err(perr(text.lines().count(), "missing result line"))
    }
}

fn parse_coeffs(s: &str) -> std::result::Result<Vec<Elem>, String> {
    if s == "0" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|c| {
            c.parse::<usize>()
                .map(Elem::new)
                .map_err(|_| format!("bad coefficient {c:?}"))
        })
        .collect()
}

fn parse_pair(fields: &str) -> std::result::Result<(Vec<Elem>, Vec<Elem>), String> {
    let mut it = fields.split_whitespace();
    let f = it
        .next()
        .and_then(|t| t.strip_prefix("f="))
        .ok_or("expected f=")?;
    let g = it
        .next()
        .and_then(|t| t.strip_prefix("g="))
        .ok_or("expected g=")?;
    Ok((parse_coeffs(f)?, parse_coeffs(g)?))
}

fn parse_step(line: &str, idx: usize) -> std::result::Result<Step, String> {
    let mut it = line.split_whitespace();
    if it.next() != Some("step") {
        return Err("expected `step`".into());
    }
    if it.next().and_then(|t| t.parse::<usize>().ok()) != Some(idx) {
        return Err(format!("expected step index {idx}"));
    }
    let kind = it
        .next()
        .and_then(StepKind::from_id)
        .ok_or("unknown step kind")?;
    let rest: Vec<&str> = it.collect();
    let (f, g) = parse_pair(&rest.join(" "))?;
    let mut step = Step::new(kind, &f, &g);
    for field in rest.iter().skip(2) {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| format!("bad field {field:?}"))?;
        let num = || {
            value
                .parse::<usize>()
                .map_err(|_| format!("bad value in {field:?}"))
        };
        match key {
            "witness" => step.witness = Some(Elem::new(num()?)),
            "k" => step.k = Some(num()? as u32),
            "j" => step.j = Some(num()?),
            "r" => step.r = Some(Elem::new(num()?)),
            "reason" => step.reason = Some(value.to_string()),
            _ => return Err(format!("unknown field {key:?}")),
        }
    }
    Ok(step)
}

impl fmt::Display for AnnihilatorTrace {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(out, "method {}", self.method)?;
        writeln!(
            out,
            "input f={} g={}",
            format_coeffs(&self.f),
            format_coeffs(&self.g)
        )?;
        for (i, s) in self.steps.iter().enumerate() {
            write!(
                out,
                "step {i} {} f={} g={}",
                s.kind.id(),
                format_coeffs(&s.f),
                format_coeffs(&s.g)
            )?;
            if let Some(w) = s.witness {
                write!(out, " witness={w}")?;
            }
            if let Some(k) = s.k {
                write!(out, " k={k}")?;
            }
            if let Some(j) = s.j {
                write!(out, " j={j}")?;
            }
            if let Some(r) = s.r {
                write!(out, " r={r}")?;
            }
            if let Some(reason) = &s.reason {
                write!(out, " reason={reason}")?;
            }
            writeln!(out)?;
        }
        match &self.outcome {
            Outcome::Found(r) => writeln!(out, "result {r}"),
            Outcome::Failed(reason) => writeln!(out, "failed {reason}"),
        }
    }
}

/// Checks a trace against the ring by re-executing every step from the
/// recorded input.
pub fn replay(ring: &FiniteRing, trace: &AnnihilatorTrace) -> Result<()> {
    super::procedures::replay_steps(ring, trace)
}
