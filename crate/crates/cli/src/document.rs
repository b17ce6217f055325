//! The scenario file format.
//!
//! JSON with a strict schema: unknown keys are rejected and every rational
//! is a `"p/q"` string.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use folia_core::foliation::{CurveRecord, FoliatedScenario, Integrality, Kodaira, Metadata};
use folia_core::lattice::{DivisorClass, LatticeBase, SurfaceBase, SurfaceModel};
use folia_core::local::{EigenvalueValue, SingularityKind, SingularityRecord};
use folia_core::scalar::{fmt_ratio, parse_ratio};
use folia_core::{Rational, Scenario};

/// A rational on the wire.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Q(pub Rational);

impl From<Rational> for Q {
    fn from(r: Rational) -> Self {
        Q(r)
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_ratio(&self.0))
    }
}

impl Serialize for Q {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_ratio(&self.0))
    }
}

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_ratio::<BigInt>(&s).map(Q).map_err(D::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioDocument {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub surface: Option<SurfaceDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub curves: Vec<CurveDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k_foliation: Option<Vec<Q>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub singularities: Vec<SingularityDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<MetadataDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fibration: Option<FibrationDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expect: Option<Expectations>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceDoc {
    pub base: BaseDoc,
    pub blowups: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub enum BaseDoc {
    P2,
    #[serde(rename = "hirzebruch")]
    Hirzebruch(u32),
    #[serde(rename = "lattice")]
    Lattice(LatticeDoc),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeDoc {
    pub gram: Vec<Vec<i64>>,
    pub canonical: Vec<i64>,
    pub chi_top: i64,
    pub chi_structure: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveDoc {
    pub name: String,
    pub class: Vec<Q>,
    pub f_invariant: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SingularityDoc {
    pub id: String,
    pub kind: KindDoc,
    pub vanishing_order: u32,
    pub on_curves: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<u8>,
}

/// `{"eigenvalue": "p/q" | "nonrational"}` or `{"saddle_node": m, "bb"?: "p/q"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KindDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eigenvalue: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub saddle_node: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bb: Option<Q>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum KodairaDoc {
    #[serde(rename = "-infinity")]
    NegInfinity,
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = "1")]
    One,
    #[serde(rename = "2")]
    Two,
    #[serde(rename = "unknown")]
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IntegralityDoc {
    Yes,
    No,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MetadataDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p_g: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kodaira: Option<KodairaDoc>,
    pub algebraically_integral: IntegralityDoc,
    pub k_pseudo_effective: bool,
    pub relatively_minimal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FibrationDoc {
    pub genus: i64,
    pub k_f_sq: Q,
    pub e_f: Q,
    pub chi_f: Q,
    pub singular_fibers: Vec<FiberDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiberDoc {
    pub pa_reduced: i64,
    pub f_red_sq: i64,
    pub nodes: Vec<NodeDoc>,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub alpha: i64,
}

fn is_zero(x: &i64) -> bool {
    *x == 0
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NodeDoc {
    pub a: i64,
    pub b: i64,
    pub in_negative_part: bool,
}

/// Golden values, compared exactly against the pipeline.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expectations {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub singularity_count: Option<Q>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub negative_part: Option<BTreeMap<String, Q>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nef_part: Option<Vec<Q>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vol: Option<Q>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c1_sq: Option<Q>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c2: Option<Q>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi: Option<Q>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub slope: Option<Q>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p_g: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus_bound: Option<i64>,
    /// Bounds that must hold with equality.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equalities: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub status: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fired_rules: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modular: Option<ModularDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModularDoc {
    pub kappa: Q,
    pub delta: Q,
    pub chi: Q,
}

/// A parse failure with its location: `line:column` for syntax and schema
/// errors, a JSON path for reference errors.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{location}: {message}")]
pub struct ParseError {
    pub location: String,
    pub message: String,
}

impl ParseError {
    fn at(location: impl Into<String>, message: impl Into<String>) -> Self {
        ParseError {
            location: location.into(),
            message: message.into(),
        }
    }
}

/// Parse and check a scenario document.
pub fn parse_scenario(bytes: &[u8]) -> Result<ScenarioDocument, ParseError> {
    let doc: ScenarioDocument = serde_json::from_slice(bytes)
        .map_err(|e| ParseError::at(format!("line {}, column {}", e.line(), e.column()), e.to_string()))?;
    doc.to_scenario()?;
    Ok(doc)
}

/// Pretty JSON with a trailing newline.
pub fn serialize_scenario(doc: &ScenarioDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents always serialize");
    s.push('\n');
    s
}

fn class(v: &[Q]) -> DivisorClass<BigInt> {
    DivisorClass::new(v.iter().map(|q| q.0.clone()).collect())
}

fn wire_class(d: &DivisorClass<BigInt>) -> Vec<Q> {
    d.coeffs.iter().cloned().map(Q).collect()
}

impl ScenarioDocument {
    /// The foliated scenario, or `None` for a fibration-only document.
    pub fn to_scenario(&self) -> Result<Option<Scenario>, ParseError> {
        let (surface, k) = match (&self.surface, &self.k_foliation) {
            (None, None) => {
                if !self.curves.is_empty() || !self.singularities.is_empty() || self.metadata.is_some() {
                    return Err(ParseError::at("$", "curves, singularities and metadata need a surface"));
                }
                if self.fibration.is_none() {
                    return Err(ParseError::at("$", "document has neither a surface nor a fibration"));
                }
                return Ok(None);
            }
            (Some(_), None) => return Err(ParseError::at("$.k_foliation", "missing with a surface present")),
            (None, Some(_)) => return Err(ParseError::at("$.surface", "missing with k_foliation present")),
            (Some(s), Some(k)) => (s, k),
        };
        let base = match &surface.base {
            BaseDoc::P2 => SurfaceModel::p2(),
            BaseDoc::Hirzebruch(e) => SurfaceModel::hirzebruch(*e),
            BaseDoc::Lattice(l) => SurfaceModel::lattice(LatticeBase {
                gram: l.gram.clone(),
                canonical: l.canonical.clone(),
                chi_top: l.chi_top,
                chi_structure: l.chi_structure,
            })
            .map_err(|e| ParseError::at("$.surface.base.lattice", e.to_string()))?,
        };
        let model = base.blown_up(surface.blowups);
        let rank = model.rank();
        let check_len = |path: String, v: &[Q]| {
            if v.len() == rank {
                Ok(())
            } else {
                Err(ParseError::at(
                    path,
                    format!("class has length {} but the Picard rank is {rank}", v.len()),
                ))
            }
        };
        check_len("$.k_foliation".into(), k)?;

        let mut f = FoliatedScenario::new(model, class(k));
        let mut names = BTreeSet::new();
        for (i, c) in self.curves.iter().enumerate() {
            if !names.insert(c.name.as_str()) {
                return Err(ParseError::at(
                    format!("$.curves[{i}].name"),
                    format!("duplicate curve {:?}", c.name),
                ));
            }
            check_len(format!("$.curves[{i}].class"), &c.class)?;
            f.curves.push(CurveRecord {
                name: c.name.clone(),
                cls: class(&c.class),
                f_invariant: c.f_invariant,
                arithmetic_genus_hint: None,
            });
        }
        let mut ids = BTreeSet::new();
        for (i, s) in self.singularities.iter().enumerate() {
            let path = format!("$.singularities[{i}]");
            if !ids.insert(s.id.as_str()) {
                return Err(ParseError::at(
                    format!("{path}.id"),
                    format!("duplicate singularity {:?}", s.id),
                ));
            }
            for (j, c) in s.on_curves.iter().enumerate() {
                if !names.contains(c.as_str()) {
                    return Err(ParseError::at(
                        format!("{path}.on_curves[{j}]"),
                        format!("undeclared curve {c:?}"),
                    ));
                }
            }
            let kind = match (&s.kind.eigenvalue, s.kind.saddle_node, &s.kind.bb) {
                (Some(v), None, None) if v == "nonrational" => {
                    SingularityKind::NonDegenerate(EigenvalueValue::NonRational)
                }
                (Some(v), None, None) => {
                    let l = parse_ratio::<BigInt>(v)
                        .map_err(|e| ParseError::at(format!("{path}.kind.eigenvalue"), e.to_string()))?;
                    if l == Rational::from_integer(0.into()) {
                        return Err(ParseError::at(
                            format!("{path}.kind.eigenvalue"),
                            "eigenvalue 0 must be declared as a saddle-node",
                        ));
                    }
                    SingularityKind::NonDegenerate(EigenvalueValue::Rational(l))
                }
                (None, Some(m), bb) => SingularityKind::SaddleNode {
                    multiplicity: m,
                    bb_index: bb.as_ref().map(|q| q.0.clone()),
                },
                _ => {
                    return Err(ParseError::at(
                        format!("{path}.kind"),
                        "expected {\"eigenvalue\": ...} or {\"saddle_node\": m, \"bb\"?: ...}",
                    ))
                }
            };
            f.singularities.push(SingularityRecord {
                id: s.id.clone(),
                kind,
                vanishing_order: s.vanishing_order,
                incident_curves: s.on_curves.clone(),
                epsilon: s.epsilon,
            });
        }
        if let Some(m) = &self.metadata {
            f.metadata = Metadata {
                p_g: m.p_g,
                kodaira: m.kodaira.map(|k| match k {
                    KodairaDoc::NegInfinity => Kodaira::NegInfinity,
                    KodairaDoc::Zero => Kodaira::Zero,
                    KodairaDoc::One => Kodaira::One,
                    KodairaDoc::Two => Kodaira::Two,
                    KodairaDoc::Unknown => Kodaira::Unknown,
                }),
                algebraically_integral: match m.algebraically_integral {
                    IntegralityDoc::Yes => Integrality::Yes,
                    IntegralityDoc::No => Integrality::No,
                    IntegralityDoc::Unknown => Integrality::Unknown,
                },
                k_pseudo_effective: m.k_pseudo_effective,
                relatively_minimal: m.relatively_minimal,
            };
        }
        Ok(Some(f))
    }

    /// Encode a scenario. Blow-ups are counted on top of the base.
    pub fn from_scenario(name: impl Into<String>, f: &Scenario) -> Self {
        let base = match &f.surface.base {
            SurfaceBase::P2 => BaseDoc::P2,
            SurfaceBase::Hirzebruch(e) => BaseDoc::Hirzebruch(*e),
            SurfaceBase::Lattice(l) => BaseDoc::Lattice(LatticeDoc {
                gram: l.gram.clone(),
                canonical: l.canonical.clone(),
                chi_top: l.chi_top,
                chi_structure: l.chi_structure,
            }),
        };
        let md = &f.metadata;
        ScenarioDocument {
            name: name.into(),
            surface: Some(SurfaceDoc {
                base,
                blowups: f.surface.blowups.len(),
            }),
            curves: f
                .curves
                .iter()
                .map(|c| CurveDoc {
                    name: c.name.clone(),
                    class: wire_class(&c.cls),
                    f_invariant: c.f_invariant,
                })
                .collect(),
            k_foliation: Some(wire_class(&f.k_foliation)),
            singularities: f
                .singularities
                .iter()
                .map(|s| SingularityDoc {
                    id: s.id.clone(),
                    kind: match &s.kind {
                        SingularityKind::NonDegenerate(EigenvalueValue::Rational(l)) => KindDoc {
                            eigenvalue: Some(fmt_ratio(l)),
                            saddle_node: None,
                            bb: None,
                        },
                        SingularityKind::NonDegenerate(EigenvalueValue::NonRational) => KindDoc {
                            eigenvalue: Some("nonrational".into()),
                            saddle_node: None,
                            bb: None,
                        },
                        SingularityKind::SaddleNode { multiplicity, bb_index } => KindDoc {
                            eigenvalue: None,
                            saddle_node: Some(*multiplicity),
                            bb: bb_index.clone().map(Q),
                        },
                    },
                    vanishing_order: s.vanishing_order,
                    on_curves: s.incident_curves.clone(),
                    epsilon: s.epsilon,
                })
                .collect(),
            metadata: Some(MetadataDoc {
                p_g: md.p_g,
                kodaira: md.kodaira.map(|k| match k {
                    Kodaira::NegInfinity => KodairaDoc::NegInfinity,
                    Kodaira::Zero => KodairaDoc::Zero,
                    Kodaira::One => KodairaDoc::One,
                    Kodaira::Two => KodairaDoc::Two,
                    Kodaira::Unknown => KodairaDoc::Unknown,
                }),
                algebraically_integral: match md.algebraically_integral {
                    Integrality::Yes => IntegralityDoc::Yes,
                    Integrality::No => IntegralityDoc::No,
                    Integrality::Unknown => IntegralityDoc::Unknown,
                },
                k_pseudo_effective: md.k_pseudo_effective,
                relatively_minimal: md.relatively_minimal,
            }),
            fibration: None,
            expect: None,
        }
    }
}
