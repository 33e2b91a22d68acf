//! Reports: text for people, JSON for machines, DOT for the quiver.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::extension::HElem;
use crate::field::FieldSpec;
use crate::frobenius::FrobeniusReport;
use crate::pgroup::Component;
use crate::pipeline::{Instance, Verification};
use crate::quiver::{presentation_dimension, QuiverPresentation};
use crate::scalar::RootScalar;

/// A root of unity as `(order, exponent)` with its image in the field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scalar {
    pub order: u64,
    pub exponent: u64,
    pub field: String,
}

impl Scalar {
    pub fn new(z: &RootScalar, f: &FieldSpec) -> Scalar {
        let z = z.normalized();
        Scalar {
            order: z.order(),
            exponent: z.exponent(),
            field: f
                .embed(&z)
                .map_or_else(|e| format!("({e})"), |x| f.display(x)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldInfo {
    pub name: String,
    pub characteristic: u64,
    pub degree: u32,
    pub size: u64,
    /// Coefficients of the defining polynomial, constant term first.
    pub modulus: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupInfo {
    pub p: u64,
    pub components: Vec<Component>,
    pub p_order: u64,
    pub l_orders: Vec<u64>,
    pub l_order: u64,
    pub h_order: u64,
    pub center_order: u64,
    /// `|Z|`: the central subgroup is `μ_m`.
    pub m: u64,
    pub matrix_degree: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowChoice {
    pub kind: usize,
    pub vertex: usize,
    pub g: HElem,
}

/// The deterministic choices the presentation depends on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Choices {
    /// `φ₀` on the radical basis.
    pub phi0: Vec<Scalar>,
    /// Radical of the form, as elements of `L`.
    pub radical_basis: Vec<Vec<u64>>,
    pub radical_orders: Vec<u64>,
    /// `ξ_φ` exponents per vertex.
    pub xi: Vec<Vec<u64>>,
    pub g: Vec<ArrowChoice>,
    pub tau_search: Option<Vec<crate::frobenius::TauSearch>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dimensions {
    pub algebra: u64,
    pub expected_basic: u64,
    pub normal_form: Option<u64>,
    pub span: Option<u64>,
    pub matrix_part: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub passed: bool,
    pub first_failure: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PresentationReport {
    pub field: FieldInfo,
    pub group: GroupInfo,
    pub seed: u64,
    pub presentation: QuiverPresentation,
    /// `q_matrix[v][i][j]`: `a_j a_i = q a_i a_j` on paths from vertex `v`.
    pub q_matrix: Vec<Vec<Vec<Scalar>>>,
    pub power_lengths: Vec<u64>,
    pub choices: Choices,
    pub dimensions: Dimensions,
    pub verification: Option<Verification>,
    pub frobenius: Option<FrobeniusReport>,
    pub verdict: Verdict,
    pub scope: String,
}

pub const SCOPE: &str =
    "All identities are checked by exact arithmetic over the finite field named above. \
Statements over Witt vectors and lifts to characteristic zero are not reproduced.";

fn q_matrix(q: &QuiverPresentation, f: &FieldSpec) -> Vec<Vec<Vec<Scalar>>> {
    let r = q.arrow_types.len();
    let one = Scalar::new(&RootScalar::one(), f);
    let mut out = vec![vec![vec![one; r]; r]; q.vertices.len()];
    for c in &q.commutations {
        out[c.vertex][c.i][c.j] = Scalar::new(&c.q, f);
        out[c.vertex][c.j][c.i] = Scalar::new(&c.q.inv(), f);
    }
    out
}

/// Builds the report. `checks` runs verification and the Frobenius twist.
pub fn present(inst: &Instance, checks: bool) -> Result<PresentationReport> {
    let f = &*inst.field;
    let q = &inst.presentation;
    let h = &inst.h;
    let pg = &inst.problem.pg;
    let (verification, frobenius) = if checks {
        (Some(inst.verify()?), Some(inst.frobenius()?))
    } else {
        (None, None)
    };
    let mut first_failure = None;
    if let Some(Err(e)) = verification.as_ref().map(Verification::check) {
        first_failure = Some(format!("verify: {e}"));
    }
    if first_failure.is_none() {
        if let Some(Err(e)) = frobenius.as_ref().map(FrobeniusReport::check) {
            first_failure = Some(format!("frobenius: {e}"));
        }
    }
    let rad = inst.phis.radical();
    let choices = Choices {
        phi0: inst.phis.lambda.iter().map(|z| Scalar::new(z, f)).collect(),
        radical_basis: rad.basis.iter().map(|x| x.0.clone()).collect(),
        radical_orders: rad.orders.clone(),
        xi: inst.phis.xi.iter().map(|x| x.0.clone()).collect(),
        g: q.arrows
            .iter()
            .map(|a| ArrowChoice {
                kind: a.kind,
                vertex: a.source,
                g: a.g.clone(),
            })
            .collect(),
        tau_search: frobenius.as_ref().map(|r| r.tau_search.clone()),
    };
    Ok(PresentationReport {
        field: FieldInfo {
            name: f.name(),
            characteristic: f.characteristic(),
            degree: f.degree(),
            size: f.size(),
            modulus: f.modulus().to_vec(),
        },
        group: GroupInfo {
            p: pg.p,
            components: pg.components.clone(),
            p_order: pg.order(),
            l_orders: h.base().orders().to_vec(),
            l_order: h.base().order(),
            h_order: h.order(),
            center_order: h.center_order(),
            m: h.m(),
            matrix_degree: inst.matrix_degree(),
        },
        seed: inst.seed,
        presentation: q.clone(),
        q_matrix: q_matrix(q, f),
        power_lengths: q.arrow_types.iter().map(|t| pg.p.pow(t.exponent)).collect(),
        choices,
        dimensions: Dimensions {
            algebra: inst.ta.dim() as u64,
            expected_basic: inst.expected_basic_dimension(),
            normal_form: presentation_dimension(q),
            span: verification.as_ref().map(|v| v.relations.span_rank as u64),
            matrix_part: inst.mat.len() as u64,
        },
        verdict: Verdict {
            passed: first_failure.is_none(),
            first_failure,
        },
        verification,
        frobenius,
        scope: format!("{} Field: {}.", SCOPE, f.name()),
    })
}

impl PresentationReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Graphviz source; arrows are labelled `w_i`.
    pub fn to_dot(&self) -> String {
        let q = &self.presentation;
        let mut s = String::from("digraph quiver {\n  rankdir=LR;\n");
        for v in &q.vertices {
            let _ = writeln!(s, "  \"{}\";", v.label);
        }
        for a in &q.arrows {
            let _ = writeln!(
                s,
                "  \"{}\" -> \"{}\" [label=\"w_{}\"];",
                q.vertices[a.source].label,
                q.vertices[a.target].label,
                a.kind + 1
            );
        }
        s.push_str("}\n");
        s
    }

    pub fn to_text(&self) -> String {
        let q = &self.presentation;
        let g = &self.group;
        let mut s = String::new();
        let _ = writeln!(
            s,
            "field        {} (p = {}, degree {})",
            self.field.name, self.field.characteristic, self.field.degree
        );
        let comps: Vec<String> = g
            .components
            .iter()
            .map(|c| format!("(C_{}^{})", g.p.pow(c.exponent), c.rank))
            .collect();
        let _ = writeln!(s, "P            {} order {}", comps.join(" x "), g.p_order);
        let _ = writeln!(s, "L            {:?} order {}", g.l_orders, g.l_order);
        let _ = writeln!(
            s,
            "H            order {}, |Z(H)| = {}, m = {}, matrix degree {}",
            g.h_order, g.center_order, g.m, g.matrix_degree
        );
        let _ = writeln!(s, "seed         {}", self.seed);
        let _ = writeln!(s, "\nvertices     {}", q.vertices.len());
        for v in &q.vertices {
            let _ = writeln!(s, "  {}  epsilon {:?}  xi {:?}", v.label, v.epsilon, v.xi);
        }
        let _ = writeln!(s, "arrows       {}", q.arrows.len());
        for a in &q.arrows {
            let _ = writeln!(
                s,
                "  w_{}: {} -> {}  g = ({}, {:?})",
                a.kind + 1,
                q.vertices[a.source].label,
                q.vertices[a.target].label,
                a.g.z,
                a.g.x.0
            );
        }
        let _ = writeln!(s, "eigencharacters");
        for (i, t) in q.arrow_types.iter().enumerate() {
            let _ = writeln!(
                s,
                "  w_{}: psi {:?}, component {}, a^{} = 0",
                i + 1,
                t.psi,
                t.component + 1,
                self.power_lengths[i]
            );
        }
        if !q.commutations.is_empty() {
            let _ = writeln!(s, "commutation relations");
            for c in &q.commutations {
                let sc = &self.q_matrix[c.vertex][c.i][c.j];
                let _ = writeln!(
                    s,
                    "  at {}: w_{} w_{} = q w_{} w_{}, q = zeta_{}^{} = {}",
                    q.vertices[c.vertex].label,
                    c.j + 1,
                    c.i + 1,
                    c.i + 1,
                    c.j + 1,
                    sc.order,
                    sc.exponent,
                    sc.field
                );
            }
        }
        let d = &self.dimensions;
        let opt = |x: Option<u64>| x.map_or("-".to_string(), |v| v.to_string());
        let _ = writeln!(
            s,
            "\ndimensions   algebra {}, basic {} (normal form {}, span {}), matrix part {}",
            d.algebra,
            d.expected_basic,
            opt(d.normal_form),
            opt(d.span),
            d.matrix_part
        );
        if let Some(v) = &self.verification {
            let _ = writeln!(
                s,
                "verify       eigenbasis {}, matrix part {}, class-2 {}, relations {}, tensor {}",
                pass(v.eigenbasis.passed()),
                pass(v.matrix_part.passed()),
                pass(v.class2.passed()),
                pass(v.relations.passed()),
                pass(v.tensor.passed())
            );
        }
        if let Some(fr) = &self.frobenius {
            let _ = writeln!(
                s,
                "frobenius    tau {:?}, {} basis pairs, {}",
                fr.tau,
                fr.pairs_checked,
                pass(fr.passed())
            );
        }
        let _ = writeln!(
            s,
            "verdict      {}{}",
            pass(self.verdict.passed),
            self.verdict
                .first_failure
                .as_ref()
                .map_or(String::new(), |f| format!(" ({f})"))
        );
        let _ = writeln!(s, "\n{}", self.scope);
        s
    }
}

fn pass(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;
    use crate::pipeline::Options;
    use crate::problem::Problem;

    fn report(file: crate::problem::ProblemFile) -> PresentationReport {
        let inst = Instance::build(Problem::from_file(file).unwrap(), Options::default()).unwrap();
        present(&inst, true).unwrap()
    }

    #[test]
    fn quantum_plane_report() {
        let r = report(instances::quantum_plane());
        assert!(r.verdict.passed, "{:?}", r.verdict);
        assert_eq!(r.presentation.vertices.len(), 1);
        assert_eq!(r.q_matrix[0][0][1].order, 4);
        assert_eq!(r.dimensions.span, Some(25));
        assert_eq!(r.dimensions.matrix_part, 16);
        assert_eq!(r.dimensions.algebra, 400);
        let back = PresentationReport::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert!(r.to_dot().contains("label=\"w_2\""));
        assert!(r.to_text().contains("Witt"));
    }
}
