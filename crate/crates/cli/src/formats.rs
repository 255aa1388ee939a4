//! JSON document shapes read by the subcommands: sequence descriptions,
//! step sets, trees, and multisets. Ordinal-valued fields hold expression
//! strings in the surface syntax; small numbers may be written as JSON
//! numbers where noted.

use std::collections::BTreeSet;

use serde::Deserialize;

use ordcalc_core::{Multiplicity, OrdMultiset, Ordinal, Position, SeqDesc, Segment, StepSet};
use ordcalc_core::{TreeDesc, TreeMult};

use crate::parser::{parse_ordinal, ParseError};

/// An ordinal field: an expression string, or a bare number.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum OrdField {
    Number(u64),
    Text(String),
}

impl OrdField {
    fn to_ordinal(&self) -> Result<Ordinal, ParseError> {
        match self {
            OrdField::Number(n) => Ok(Ordinal::from_nat(*n)),
            OrdField::Text(s) => parse_ordinal(s),
        }
    }
}

#[derive(Debug, Deserialize)]
struct SequenceDoc {
    segments: Vec<SegmentDoc>,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
enum SegmentDoc {
    Explicit { values: Vec<OrdField> },
    Repeat { value: OrdField, length: OrdField },
}

pub fn sequence_from_str(text: &str) -> Result<SeqDesc, String> {
    let doc: SequenceDoc =
        serde_json::from_str(text).map_err(|e| format!("sequence file: {e}"))?;
    let mut segments = Vec::new();
    for seg in doc.segments {
        match seg {
            SegmentDoc::Explicit { values } => {
                let vs = values
                    .iter()
                    .map(|v| v.to_ordinal())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| format!("sequence file: {e}"))?;
                segments.push(Segment::Explicit(vs));
            }
            SegmentDoc::Repeat { value, length } => segments.push(Segment::Repeat {
                value: value.to_ordinal().map_err(|e| format!("sequence file: {e}"))?,
                length: length.to_ordinal().map_err(|e| format!("sequence file: {e}"))?,
            }),
        }
    }
    Ok(SeqDesc::new(segments))
}

#[derive(Debug, Deserialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
enum StepsDoc {
    AllNatural,
    AllOrdinary,
    Selected { natural_steps: Vec<StepDoc> },
}

#[derive(Debug, Deserialize)]
struct StepDoc {
    segment: usize,
    offset: OrdField,
}

pub fn steps_from_str(text: &str) -> Result<StepSet, String> {
    let doc: StepsDoc = serde_json::from_str(text).map_err(|e| format!("step file: {e}"))?;
    Ok(match doc {
        StepsDoc::AllNatural => StepSet::AllNatural,
        StepsDoc::AllOrdinary => StepSet::AllOrdinary,
        StepsDoc::Selected { natural_steps } => {
            let mut set = BTreeSet::new();
            for s in natural_steps {
                set.insert(Position {
                    segment: s.segment,
                    offset: s.offset.to_ordinal().map_err(|e| format!("step file: {e}"))?,
                });
            }
            StepSet::Selected(set)
        }
    })
}

#[derive(Debug, Deserialize)]
struct TreeDoc {
    #[serde(default)]
    children: Vec<ChildDoc>,
}

#[derive(Debug, Deserialize)]
struct ChildDoc {
    multiplicity: MultDoc,
    tree: TreeDoc,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum MultDoc {
    Number(u64),
    Symbol(String),
}

pub fn tree_from_str(text: &str) -> Result<TreeDesc, String> {
    let doc: TreeDoc = serde_json::from_str(text).map_err(|e| format!("tree file: {e}"))?;
    tree_from_doc(&doc)
}

fn tree_from_doc(doc: &TreeDoc) -> Result<TreeDesc, String> {
    let mut children = Vec::new();
    for c in &doc.children {
        let mult = match &c.multiplicity {
            MultDoc::Number(0) => return Err("tree file: multiplicity must be >= 1".into()),
            MultDoc::Number(n) => TreeMult::Finite(*n),
            MultDoc::Symbol(s) if s == "omega" => TreeMult::Omega,
            MultDoc::Symbol(s) => {
                return Err(format!("tree file: unknown multiplicity {s:?}"))
            }
        };
        children.push((tree_from_doc(&c.tree)?, mult));
    }
    Ok(TreeDesc::node(children))
}

#[derive(Debug, Deserialize)]
struct MultisetDoc {
    entries: Vec<EntryDoc>,
}

#[derive(Debug, Deserialize)]
struct EntryDoc {
    value: OrdField,
    multiplicity: MultDoc,
}

/// Multiset files: `{"entries":[{"value":"w1","multiplicity":"aleph1"}]}`;
/// multiplicities are positive integers, `"omega"` for the countable
/// cardinal, or `"alephK"` for the K-th uncountable one.
pub fn multiset_from_str(text: &str) -> Result<OrdMultiset, String> {
    let doc: MultisetDoc =
        serde_json::from_str(text).map_err(|e| format!("multiset file: {e}"))?;
    let mut entries = Vec::new();
    for e in &doc.entries {
        let v = e.value.to_ordinal().map_err(|e| format!("multiset file: {e}"))?;
        let m = match &e.multiplicity {
            MultDoc::Number(0) => return Err("multiset file: multiplicity must be >= 1".into()),
            MultDoc::Number(n) => Multiplicity::Finite(*n),
            MultDoc::Symbol(s) if s == "omega" => Multiplicity::Aleph(0),
            MultDoc::Symbol(s) => match s.strip_prefix("aleph").and_then(|k| k.parse::<u32>().ok())
            {
                Some(k) if k >= 1 => Multiplicity::Aleph(k),
                _ => return Err(format!("multiset file: unknown multiplicity {s:?}")),
            },
        };
        entries.push((v, m));
    }
    Ok(OrdMultiset::new(entries))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequence_doc() {
        let s = sequence_from_str(
            r#"{"segments":[{"kind":"explicit","values":["1","w"]},
                            {"kind":"repeat","value":"w1","length":"w"}]}"#,
        )
        .unwrap();
        assert_eq!(s.segments.len(), 2);
        assert_eq!(
            s.segments[1],
            Segment::Repeat { value: Ordinal::atom(1), length: Ordinal::omega() }
        );
        assert!(sequence_from_str(r#"{"segments":[{"kind":"explicit","values":["@"]}]}"#).is_err());
    }

    #[test]
    fn steps_doc() {
        let g = steps_from_str(r#"{"mode":"all-natural"}"#).unwrap();
        assert_eq!(g, StepSet::AllNatural);
        let g = steps_from_str(
            r#"{"mode":"selected","natural_steps":[{"segment":0,"offset":1},
                                                   {"segment":1,"offset":"w+1"}]}"#,
        )
        .unwrap();
        match g {
            StepSet::Selected(ps) => {
                assert!(ps.contains(&Position::new(0, 1u64)));
                assert_eq!(ps.len(), 2);
            }
            _ => panic!("expected selected"),
        }
    }

    #[test]
    fn tree_doc() {
        let t = tree_from_str(
            r#"{"children":[{"multiplicity":"omega","tree":{"children":[]}}]}"#,
        )
        .unwrap();
        assert_eq!(t.children.len(), 1);
        assert_eq!(t.children[0].1, TreeMult::Omega);
        assert!(tree_from_str(r#"{"children":[{"multiplicity":0,"tree":{}}]}"#).is_err());
    }

    #[test]
    fn multiset_doc() {
        let m = multiset_from_str(
            r#"{"entries":[{"value":"1","multiplicity":"aleph1"},
                           {"value":"w1","multiplicity":"omega"}]}"#,
        )
        .unwrap();
        assert_eq!(m.entries().len(), 2);
        assert!(multiset_from_str(r#"{"entries":[{"value":"1","multiplicity":"aleph"}]}"#).is_err());
    }
}
