//! The implication diagram between ring properties, checked against ring
//! corpora.
//!
//! Each arrow `P -> Q` claims that every ring with `P` has `Q`. A corpus
//! confirms nothing, but a ring where `P` holds and `Q` fails refutes the
//! arrow. Polynomial-quantified properties are evaluated up to a degree
//! bound; holding up to the bound counts as holding, and a bounded failure
//! is a genuine counterexample.

use std::fmt;

use rayon::prelude::*;

use crate::catalog::RingCorpus;
use crate::error::{Error, Result};
use crate::properties::{evaluate, McCoyBound, Property, PropertyReport, Verdict};

use Property::*;

/// Nodes in drawing order, row by row.
pub const DIAGRAM_NODES: [Property; 16] = [
    Commutative,
    Duo,
    Semicommutative,
    TwoPrimal,
    Symmetric,
    Reversible,
    LeftDuo,
    Abelian,
    DedekindFinite,
    Reduced,
    Armendariz,
    McCoy,
    RightMcCoy,
    LinearlyArmendariz,
    LinearlyMcCoy,
    RightLinearlyMcCoy,
];

/// Arrows in the order they are drawn.
pub const FROZEN_EDGES: [(Property, Property); 27] = [
    (Commutative, Duo),
    (Commutative, Symmetric),
    (Duo, LeftDuo),
    (Duo, Semicommutative),
    (Duo, McCoy),
    (LeftDuo, Semicommutative),
    (LeftDuo, McCoy),
    (LeftDuo, RightMcCoy),
    (TwoPrimal, DedekindFinite),
    (Symmetric, Reversible),
    (Reversible, Semicommutative),
    (Reversible, McCoy),
    (Semicommutative, Abelian),
    (Semicommutative, LinearlyMcCoy),
    (Semicommutative, TwoPrimal),
    (Abelian, DedekindFinite),
    (Reduced, Symmetric),
    (Reduced, Armendariz),
    (Armendariz, McCoy),
    (Armendariz, LinearlyArmendariz),
    (McCoy, RightMcCoy),
    (McCoy, LinearlyMcCoy),
    (RightMcCoy, RightLinearlyMcCoy),
    (LinearlyArmendariz, Abelian),
    (LinearlyArmendariz, LinearlyMcCoy),
    (LinearlyMcCoy, RightLinearlyMcCoy),
    (RightLinearlyMcCoy, DedekindFinite),
];

/// Pairs that are not arrows but are worth scanning for separating rings.
pub const EXTRA_HUNT_CANDIDATES: [(Property, Property); 3] = [
    (Semicommutative, RightMcCoy),
    (Abelian, Semicommutative),
    (Reduced, Commutative),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImplicationDiagram {
    nodes: Vec<Property>,
    edges: Vec<(Property, Property)>,
}

impl ImplicationDiagram {
    pub fn nodes(&self) -> &[Property] {
        &self.nodes
    }

    pub fn edges(&self) -> &[(Property, Property)] {
        &self.edges
    }

    pub fn has_edge(&self, from: Property, to: Property) -> bool {
        self.edges.contains(&(from, to))
    }

    /// Reverse arrows plus [`EXTRA_HUNT_CANDIDATES`], without duplicates.
    pub fn default_hunt_candidates(&self) -> Vec<(Property, Property)> {
        let mut out: Vec<(Property, Property)> = Vec::new();
        for pair in self
            .edges
            .iter()
            .map(|&(p, q)| (q, p))
            .chain(EXTRA_HUNT_CANDIDATES)
        {
            if !self.has_edge(pair.0, pair.1) && !out.contains(&pair) {
                out.push(pair);
            }
        }
        out
    }
}

pub fn builtin_diagram() -> ImplicationDiagram {
    ImplicationDiagram {
        nodes: DIAGRAM_NODES.to_vec(),
        edges: FROZEN_EDGES.to_vec(),
    }
}

/// Every property of [`Property::ALL`] on every ring of a corpus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerdictMatrix {
    pub bound: McCoyBound,
    pub rows: Vec<PropertyReport>,
}

impl VerdictMatrix {
    pub fn evaluate(corpus: &RingCorpus, bound: McCoyBound) -> Result<Self> {
        if corpus.rings().iter().any(|r| !r.is_unital()) {
            return Err(Error::NonUnitalUnsupported);
        }
        let rows = corpus
            .rings()
            .par_iter()
            .map(|ring| evaluate(ring, &Property::ALL, bound))
            .collect();
        Ok(VerdictMatrix { bound, rows })
    }

    fn verdict(row: &PropertyReport, p: Property) -> &Verdict {
        row.verdict(p).expect("matrix rows cover every property")
    }

    /// Verdict tokens as comma-separated values, one ring per line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("ring");
        for p in Property::ALL {
            out.push(',');
            out.push_str(p.id());
        }
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.ring);
            for p in Property::ALL {
                let cell = match Self::verdict(row, p) {
                    Verdict::Holds => "holds",
                    Verdict::HoldsUpTo(_) => "holds_up_to",
                    Verdict::Fails(_) => "fails",
                    Verdict::Unsupported(_) => "unsupported",
                };
                out.push(',');
                out.push_str(cell);
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgeStatus {
    /// `support` rings have the antecedent and none refutes the arrow.
    Consistent { support: usize },
    /// The antecedent holds on no ring.
    Vacuous,
    /// Rings where the antecedent holds and the consequent fails; the first
    /// is reported with its witness.
    Violated { rings: Vec<String>, support: usize },
}

impl EdgeStatus {
    pub fn token(&self) -> &'static str {
        match self {
            EdgeStatus::Consistent { .. } => "consistent",
            EdgeStatus::Vacuous => "vacuous",
            EdgeStatus::Violated { .. } => "violated",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeResult {
    pub from: Property,
    pub to: Property,
    pub status: EdgeStatus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramReport {
    pub matrix: VerdictMatrix,
    pub edges: Vec<EdgeResult>,
}

impl DiagramReport {
    pub fn violations(&self) -> usize {
        self.edges
            .iter()
            .filter(|e| matches!(e.status, EdgeStatus::Violated { .. }))
            .count()
    }

    pub fn edge(&self, from: Property, to: Property) -> Option<&EdgeResult> {
        self.edges.iter().find(|e| e.from == from && e.to == to)
    }

    fn count(&self, token: &str) -> usize {
        self.edges
            .iter()
            .filter(|e| e.status.token() == token)
            .count()
    }
}

fn separating_rings(matrix: &VerdictMatrix, p: Property, q: Property) -> (usize, Vec<String>) {
    let mut support = 0;
    let mut rings = Vec::new();
    for row in &matrix.rows {
        if VerdictMatrix::verdict(row, p).holds() {
            support += 1;
            if VerdictMatrix::verdict(row, q).fails() {
                rings.push(row.ring.clone());
            }
        }
    }
    (support, rings)
}

/// Evaluates every node on every ring and classifies every arrow.
pub fn check_diagram(
    diagram: &ImplicationDiagram,
    corpus: &RingCorpus,
    bound: McCoyBound,
) -> Result<DiagramReport> {
    let matrix = VerdictMatrix::evaluate(corpus, bound)?;
    let edges = diagram
        .edges()
        .iter()
        .map(|&(from, to)| {
            let (support, rings) = separating_rings(&matrix, from, to);
            let status = if !rings.is_empty() {
                EdgeStatus::Violated { rings, support }
            } else if support == 0 {
                EdgeStatus::Vacuous
            } else {
                EdgeStatus::Consistent { support }
            };
            EdgeResult { from, to, status }
        })
        .collect();
    Ok(DiagramReport { matrix, edges })
}

impl fmt::Display for DiagramReport {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nodes = builtin_diagram().nodes;
        for row in &self.matrix.rows {
            for &p in &nodes {
                writeln!(
                    out,
                    "ring {} property {} verdict {}",
                    row.ring,
                    p.id(),
                    VerdictMatrix::verdict(row, p)
                )?;
            }
        }
        for e in &self.edges {
            write!(
                out,
                "edge {} -> {} {}",
                e.from.id(),
                e.to.id(),
                e.status.token()
            )?;
            match &e.status {
                EdgeStatus::Violated { rings, support } => write!(
                    out,
                    " ring={} violations={} support={support}",
                    rings[0],
                    rings.len()
                )?,
                EdgeStatus::Consistent { support } => write!(out, " support={support}")?,
                EdgeStatus::Vacuous => {}
            }
            if e.from.is_bounded() || e.to.is_bounded() {
                write!(out, " bound={}", self.matrix.bound)?;
            }
            writeln!(out)?;
        }
        writeln!(
            out,
            "summary edges={} consistent={} vacuous={} violated={}",
            self.edges.len(),
            self.count("consistent"),
            self.count("vacuous"),
            self.violations()
        )
    }
}

/// Rings separating a pair that is not an arrow. An empty list means only
/// that this corpus has no such ring at this bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonImplication {
    pub from: Property,
    pub to: Property,
    pub rings: Vec<String>,
}

impl fmt::Display for NonImplication {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "hunt {} -> {}", self.from.id(), self.to.id())?;
        if self.rings.is_empty() {
            write!(out, " none")
        } else {
            write!(out, " separated rings={}", self.rings.join(","))
        }
    }
}

/// Scans the evaluated corpus for rings where `P` holds and `Q` fails.
pub fn hunt_nonimplications(
    diagram: &ImplicationDiagram,
    matrix: &VerdictMatrix,
    candidates: &[(Property, Property)],
) -> Result<Vec<NonImplication>> {
    candidates
        .iter()
        .map(|&(from, to)| {
            if diagram.has_edge(from, to) {
                return Err(Error::InvalidArgument(format!(
                    "{} -> {} is an arrow of the diagram",
                    from.id(),
                    to.id()
                )));
            }
            let (_, rings) = separating_rings(matrix, from, to);
            Ok(NonImplication { from, to, rings })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{builtin, make_zn, Provenance};

    fn corpus(names: &[&str]) -> RingCorpus {
        let mut c = RingCorpus::new();
        for n in names {
            c.push(builtin(n).unwrap(), Provenance::Builtin).unwrap();
        }
        c
    }

    #[test]
    fn frozen_edges_literal() {
        let labels: Vec<(&str, &str)> = builtin_diagram()
            .edges()
            .iter()
            .map(|(p, q)| (p.label(), q.label()))
            .collect();
        let expected = [
            ("comm.", "Duo"),
            ("comm.", "symm."),
            ("Duo", "Left Duo"),
            ("Duo", "s.c."),
            ("Duo", "McCoy"),
            ("Left Duo", "s.c."),
            ("Left Duo", "McCoy"),
            ("Left Duo", "Right McCoy"),
            ("2-primal", "D. Finite"),
            ("symm.", "rev."),
            ("rev.", "s.c."),
            ("rev.", "McCoy"),
            ("s.c.", "Abelian"),
            ("s.c.", "lin. McCoy"),
            ("s.c.", "2-primal"),
            ("Abelian", "D. Finite"),
            ("red.", "symm."),
            ("red.", "Arm."),
            ("Arm.", "McCoy"),
            ("Arm.", "lin. arm."),
            ("McCoy", "Right McCoy"),
            ("McCoy", "lin. McCoy"),
            ("Right McCoy", "right lin. McCoy"),
            ("lin. arm.", "Abelian"),
            ("lin. arm.", "lin. McCoy"),
            ("lin. McCoy", "right lin. McCoy"),
            ("right lin. McCoy", "D. Finite"),
        ];
        assert_eq!(labels, expected);
    }

    #[test]
    fn edges_are_acyclic_and_between_nodes() {
        let d = builtin_diagram();
        for &(p, q) in d.edges() {
            assert!(d.nodes().contains(&p) && d.nodes().contains(&q));
        }
        // Kahn's algorithm consumes every node.
        let mut indeg: Vec<usize> = d
            .nodes()
            .iter()
            .map(|n| d.edges().iter().filter(|e| e.1 == *n).count())
            .collect();
        let mut ready: Vec<usize> = (0..indeg.len()).filter(|&i| indeg[i] == 0).collect();
        let mut seen = 0;
        while let Some(i) = ready.pop() {
            seen += 1;
            for &(p, q) in d.edges() {
                if p == d.nodes()[i] {
                    let j = d.nodes().iter().position(|&n| n == q).unwrap();
                    indeg[j] -= 1;
                    if indeg[j] == 0 {
                        ready.push(j);
                    }
                }
            }
        }
        assert_eq!(seen, d.nodes().len());
    }

    #[test]
    fn membership_examples() {
        let d = builtin_diagram();
        assert!(d.has_edge(LeftDuo, RightMcCoy));
        assert!(d.has_edge(Duo, LeftDuo));
        assert!(!d.has_edge(Semicommutative, RightMcCoy));
        assert!(d
            .default_hunt_candidates()
            .contains(&(Semicommutative, RightMcCoy)));
        assert!(d
            .default_hunt_candidates()
            .iter()
            .all(|&(p, q)| !d.has_edge(p, q)));
    }

    #[test]
    fn single_ring_runs() {
        let d = builtin_diagram();
        let z4 = check_diagram(&d, &corpus(&["Z4"]), McCoyBound::LINEAR).unwrap();
        assert_eq!(z4.violations(), 0);
        assert!(matches!(
            z4.edge(Commutative, Duo).unwrap().status,
            EdgeStatus::Consistent { support: 1 }
        ));

        let m = check_diagram(&d, &corpus(&["M2Z2"]), McCoyBound::LINEAR).unwrap();
        assert_eq!(m.violations(), 0);
        for p in [Commutative, Duo, Semicommutative] {
            for e in m.edges.iter().filter(|e| e.from == p) {
                assert_eq!(e.status, EdgeStatus::Vacuous, "{:?}", e.from);
            }
        }
        assert!(m.matrix.rows[0].verdict(DedekindFinite).unwrap().holds());
    }

    #[test]
    fn violations_are_detected() {
        // A fake arrow from a property M2Z2 has to one it lacks.
        let d = ImplicationDiagram {
            nodes: vec![DedekindFinite, Commutative],
            edges: vec![(DedekindFinite, Commutative)],
        };
        let r = check_diagram(&d, &corpus(&["Z4", "M2Z2"]), McCoyBound::LINEAR).unwrap();
        assert_eq!(
            r.edges[0].status,
            EdgeStatus::Violated {
                rings: vec!["M2Z2".into()],
                support: 2
            }
        );
        assert!(r.to_string().contains(
            "edge dedekind_finite -> commutative violated ring=M2Z2 violations=1 support=2\n"
        ));
    }

    #[test]
    fn hunting_rejects_arrows() {
        let d = builtin_diagram();
        let mut c = RingCorpus::new();
        c.push(make_zn(4).unwrap(), Provenance::Builtin).unwrap();
        c.push(builtin("U2Z2").unwrap(), Provenance::Builtin)
            .unwrap();
        let m = VerdictMatrix::evaluate(&c, McCoyBound::LINEAR).unwrap();
        assert!(hunt_nonimplications(&d, &m, &[(Commutative, Duo)]).is_err());
        let found = hunt_nonimplications(&d, &m, &[(DedekindFinite, Abelian)]).unwrap();
        assert_eq!(found[0].rings, vec!["U2Z2".to_string()]);
        assert_eq!(
            found[0].to_string(),
            "hunt dedekind_finite -> abelian separated rings=U2Z2"
        );
    }

    #[test]
    fn csv_shape() {
        let m = VerdictMatrix::evaluate(&corpus(&["Z2", "Z4"]), McCoyBound::LINEAR).unwrap();
        let csv = m.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines.iter().all(|l| l.split(',').count() == 19));
        assert!(lines[2].starts_with("Z4,holds,"));
    }
}
