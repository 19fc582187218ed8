//! The canonical JSON document: every command emits (and `check` consumes)
//! this shape. Field order is fixed by the struct declarations, so repeated
//! runs produce byte-identical output.
//!
//! Conventions: rationals are "p/q" strings; integers are JSON numbers unless
//! their magnitude exceeds 53 bits, in which case they are exact decimal
//! strings.

use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use vinberg::obstruction::{CaseTag, ObstructionCertificate};
use vinberg::symmetry::SymmetryGroup;
use vinberg::{CoxeterDiagram, EdgeLabel, GramMatrix, Rat, RunReport, Verdict, VolumeReport, Witness};

/// Largest integer magnitude a JSON number can carry exactly.
const MAX_SAFE: i64 = (1 << 53) - 1;

/// An i64 serialized as a JSON number when safe, a decimal string otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Int(pub i64);

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.abs() <= MAX_SAFE {
            s.serialize_i64(self.0)
        } else {
            s.serialize_str(&self.0.to_string())
        }
    }
}

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(Int(v)),
            Raw::Str(s) => s.parse().map(Int).map_err(DeError::custom),
        }
    }
}

fn ints(v: &[i64]) -> Vec<Int> {
    v.iter().copied().map(Int).collect()
}

pub fn rat_string(r: Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormDoc {
    pub phi: Int,
    pub n: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootsDoc {
    /// Walls of the initial polyhedral angle come first.
    pub initial: usize,
    pub vectors: Vec<Vec<Int>>,
    pub norms: Vec<Int>,
    /// k0^2 / norm per root, as "p/q".
    pub priorities: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GramDoc {
    pub norms: Vec<Int>,
    pub entries: Vec<Vec<Int>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub i: usize,
    pub j: usize,
    /// "3", "4", "6", ... for finite labels; "heavy"; "dashed".
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramDoc {
    pub size: usize,
    pub edges: Vec<EdgeDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subset: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extensions: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VolumeDoc {
    pub finite: bool,
    pub compact: bool,
    pub cusps: usize,
    pub ordinary_vertices: Vec<Vec<usize>>,
    pub ideal_vertices: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryDoc {
    pub order: usize,
    pub name: String,
    pub generators: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cusp_orbits: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDoc {
    pub n: usize,
    pub case: String,
    pub parabolic: Vec<usize>,
    pub components: Vec<Vec<usize>>,
    pub rank: usize,
    pub required_rank: usize,
    pub span_generators: Vec<Vec<Int>>,
    pub restricted_gram: Vec<Vec<Int>>,
    pub isotropic: Vec<Int>,
    /// Squared length of a wall orthogonal to the obstruction.
    pub norm_identity: String,
    pub tail_dim: usize,
    pub needed_extension_rank: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Int>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetaDoc {
    pub schema: u32,
    pub tool: String,
    pub version: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunDocument {
    pub form: FormDoc,
    pub roots: Option<RootsDoc>,
    pub gram: GramDoc,
    pub diagram: DiagramDoc,
    pub volume: Option<VolumeDoc>,
    pub symmetry: Option<SymmetryDoc>,
    pub certificate: Option<CertificateDoc>,
    pub meta: MetaDoc,
}

pub fn meta(verdict: Option<&str>) -> MetaDoc {
    MetaDoc {
        schema: 1,
        tool: "vinberg".to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        verdict: verdict.map(|s| s.to_string()),
    }
}

pub fn label_string(l: EdgeLabel) -> String {
    match l {
        EdgeLabel::Finite(m) => m.to_string(),
        EdgeLabel::Heavy => "heavy".to_string(),
        EdgeLabel::Dashed => "dashed".to_string(),
    }
}

pub fn gram_doc(g: &GramMatrix) -> GramDoc {
    GramDoc {
        norms: ints(g.norms()),
        entries: g.rows().iter().map(|r| ints(r)).collect(),
    }
}

pub fn diagram_doc(d: &CoxeterDiagram) -> DiagramDoc {
    DiagramDoc {
        size: d.size(),
        edges: d
            .edges()
            .into_iter()
            .map(|(i, j, l)| EdgeDoc {
                i,
                j,
                label: label_string(l),
            })
            .collect(),
    }
}

pub fn volume_doc(v: &VolumeReport) -> VolumeDoc {
    VolumeDoc {
        finite: v.finite,
        compact: v.compact,
        cusps: v.cusps(),
        ordinary_vertices: v.ordinary_vertices.clone(),
        ideal_vertices: v.ideal_vertices.clone(),
        witness: v.witness.as_ref().map(|w| match w {
            Witness::NoVertices => WitnessDoc {
                kind: "no-vertices".to_string(),
                subset: None,
                extensions: None,
            },
            Witness::OpenEdge { subset, extensions } => WitnessDoc {
                kind: "open-edge".to_string(),
                subset: Some(subset.clone()),
                extensions: Some(*extensions),
            },
        }),
    }
}

pub fn symmetry_doc(s: &SymmetryGroup, cusp_orbits: Option<usize>) -> SymmetryDoc {
    SymmetryDoc {
        order: s.order(),
        name: s.name(),
        generators: s.generators.clone(),
        cusp_orbits,
    }
}

pub fn certificate_doc(c: &ObstructionCertificate) -> CertificateDoc {
    CertificateDoc {
        n: c.n,
        case: match c.case {
            CaseTag::N14 => "n=14",
            CaseTag::N15 => "n=15",
            CaseTag::N16 => "n=16",
            CaseTag::NGe17 => "n>=17",
        }
        .to_string(),
        parabolic: c.parabolic.clone(),
        components: c.components.iter().cloned().collect(),
        rank: c.rank,
        required_rank: c.required_rank,
        span_generators: c.span_generators.iter().map(|g| ints(g)).collect(),
        restricted_gram: c
            .restricted_gram
            .iter()
            .map(|r| r.iter().copied().map(Int).collect())
            .collect(),
        isotropic: ints(&c.isotropic),
        norm_identity: "3*(p - 2*q)^2 + sum_{i >= 15} k_i^2".to_string(),
        tail_dim: c.tail_dim,
        needed_extension_rank: c.needed_extension_rank,
        witness: c.witness.as_ref().map(|r| ints(r.coords())),
    }
}

pub fn roots_doc(report: &RunReport) -> RootsDoc {
    RootsDoc {
        initial: report.initial_count,
        vectors: report.roots.iter().map(|r| ints(r.coords())).collect(),
        norms: report.roots.iter().map(|r| Int(r.norm())).collect(),
        priorities: report.roots.iter().map(|r| rat_string(r.priority())).collect(),
    }
}

pub fn verdict_string(v: Verdict) -> &'static str {
    match v {
        Verdict::FiniteVolume => "finite-volume",
        Verdict::BudgetExhausted => "budget-exhausted",
    }
}

pub fn serialize(doc: &RunDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("document serializes");
    s.push('\n');
    s
}
