//! Serializable pipeline output with a stable schema.

use serde::{Deserialize, Serialize};

use crate::bbw::LabeledDiagram;
use crate::complex::SingularComplex;
use crate::weights::{Coord, SingularityProfile, Weight};

/// Top-level JSON document: singularity data plus optional diagram and
/// complex sections. Arrays are ordered by id.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonReport {
    pub n: usize,
    pub k: usize,
    pub l: usize,
    #[serde(rename = "S")]
    pub s_positions: Vec<usize>,
    #[serde(rename = "I")]
    pub repeated: Vec<Coord>,
    #[serde(rename = "J")]
    pub nonrepeated: Vec<Coord>,
    pub mu: Vec<Coord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relative: Option<RelativeSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complex: Option<ComplexSection>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RelativeSection {
    pub vertices: Vec<RelativeVertexEntry>,
    pub arrows: Vec<RelativeArrowEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RelativeVertexEntry {
    pub id: usize,
    pub g1: Vec<Coord>,
    pub g2: Vec<Coord>,
    pub g3: Vec<Coord>,
    pub p: usize,
    /// Cohomology degree, or null for vanishing direct images.
    pub label: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RelativeArrowEntry {
    pub src: usize,
    pub dst: usize,
    pub dir: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComplexSection {
    pub vertices: Vec<ComplexVertexEntry>,
    pub arrows: Vec<ComplexArrowEntry>,
    pub chain_spaces: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComplexVertexEntry {
    pub id: usize,
    pub base: usize,
    pub p: usize,
    pub q: usize,
    pub s: usize,
    pub pushed_weight: WeightPair,
    pub bundle_weight: WeightPair,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightPair {
    pub first: Vec<Coord>,
    pub second: Vec<Coord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComplexArrowEntry {
    pub src: usize,
    pub dst: usize,
    pub dir: usize,
    pub steps: usize,
    pub order: i64,
    pub standard: bool,
}

impl JsonReport {
    pub fn new(mu: &Weight, profile: &SingularityProfile) -> Self {
        JsonReport {
            n: profile.n(),
            k: profile.k(),
            l: profile.order(),
            s_positions: profile.positions().to_vec(),
            repeated: profile.repeated().to_vec(),
            nonrepeated: profile.nonrepeated().to_vec(),
            mu: mu.coords().to_vec(),
            relative: None,
            complex: None,
        }
    }

    pub fn with_relative(mut self, ld: &LabeledDiagram) -> Self {
        self.relative = Some(RelativeSection {
            vertices: ld
                .diagram
                .vertices
                .iter()
                .zip(&ld.labels)
                .enumerate()
                .map(|(id, (v, label))| RelativeVertexEntry {
                    id,
                    g1: v.g1.clone(),
                    g2: v.g2.clone(),
                    g3: v.g3.clone(),
                    p: v.p,
                    label: label.degree(),
                })
                .collect(),
            arrows: ld
                .diagram
                .arrows
                .iter()
                .map(|a| RelativeArrowEntry {
                    src: a.src,
                    dst: a.dst,
                    dir: a.direction,
                })
                .collect(),
        });
        self
    }

    pub fn with_complex(mut self, complex: &SingularComplex) -> Self {
        self.complex = Some(ComplexSection {
            vertices: complex
                .vertices
                .iter()
                .enumerate()
                .map(|(id, v)| ComplexVertexEntry {
                    id,
                    base: v.base,
                    p: v.p,
                    q: v.q,
                    s: v.s,
                    pushed_weight: WeightPair {
                        first: v.pushed_weight.first().to_vec(),
                        second: v.pushed_weight.second().to_vec(),
                    },
                    bundle_weight: WeightPair {
                        first: v.bundle_weight.first().to_vec(),
                        second: v.bundle_weight.second().to_vec(),
                    },
                })
                .collect(),
            arrows: complex
                .arrows
                .iter()
                .map(|a| ComplexArrowEntry {
                    src: a.src,
                    dst: a.dst,
                    dir: a.direction,
                    steps: a.steps,
                    order: a.order,
                    standard: a.standard,
                })
                .collect(),
            chain_spaces: complex.chain_spaces.clone(),
        });
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::Pipeline;

    #[test]
    fn json_round_trip_reconstructs_report() {
        let pipeline = Pipeline::run(
            Weight::new(vec![5, 5, 4, 3, 2, 2, 1, 0]).unwrap(),
            4,
        )
        .unwrap();
        let report = pipeline.json_report();
        let text = serde_json::to_string_pretty(&report).unwrap();
        let parsed: JsonReport = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed, report);
    }

    #[test]
    fn top_level_fields_match_example() {
        let pipeline = Pipeline::run(
            Weight::new(vec![5, 5, 4, 3, 2, 2, 1, 0]).unwrap(),
            4,
        )
        .unwrap();
        let report = pipeline.json_report();
        assert_eq!(report.l, 2);
        assert_eq!(report.s_positions, vec![1, 5]);
        let sizes: Vec<usize> = report
            .complex
            .as_ref()
            .unwrap()
            .chain_spaces
            .iter()
            .map(Vec::len)
            .collect();
        assert_eq!(sizes, vec![1, 1, 2, 1, 1]);
    }
}
