//! Quivers, paths and algebra presentations.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ArrowId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
}

/// A finite quiver with ordered vertex and arrow lists. Declaration order is
/// the tie-break used by the degree-lex path order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<(String, String, String)>) -> Result<Quiver> {
        let mut seen = std::collections::BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.clone()) {
                return Err(Error::Parse(format!("duplicate vertex label {v}")));
            }
        }
        let find = |label: &str| -> Result<VertexId> {
            vertices
                .iter()
                .position(|v| v == label)
                .map(VertexId)
                .ok_or_else(|| Error::Parse(format!("unknown vertex {label}")))
        };
        let mut names = std::collections::BTreeSet::new();
        let mut arr = Vec::new();
        for (name, s, t) in arrows {
            if !names.insert(name.clone()) {
                return Err(Error::Parse(format!("duplicate arrow name {name}")));
            }
            arr.push(Arrow {
                name,
                source: find(&s)?,
                target: find(&t)?,
            });
        }
        Ok(Quiver {
            vertices,
            arrows: arr,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_label(&self, v: VertexId) -> &str {
        &self.vertices[v.0]
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        self.vertices.iter().position(|v| v == label).map(VertexId)
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a.0]
    }

    pub fn arrow_by_name(&self, name: &str) -> Option<ArrowId> {
        self.arrows.iter().position(|a| a.name == name).map(ArrowId)
    }

    pub fn arrows_from(&self, v: VertexId) -> impl Iterator<Item = ArrowId> + '_ {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.source == v)
            .map(|(i, _)| ArrowId(i))
    }

    /// The opposite quiver: same labels, every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }
}

/// A path written left to right: in the word `p·q` the target of `p` equals
/// the source of `q`. Length-zero paths are the vertex idempotents.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: VertexId,
    pub arrows: Vec<ArrowId>,
}

impl Path {
    pub fn trivial(v: VertexId) -> Path {
        Path {
            source: v,
            arrows: Vec::new(),
        }
    }

    pub fn from_arrows(quiver: &Quiver, arrows: &[ArrowId]) -> Result<Path> {
        if arrows.is_empty() {
            return Err(Error::Parse("empty arrow word needs a vertex".into()));
        }
        let source = quiver.arrow(arrows[0]).source;
        let mut at = source;
        for &a in arrows {
            if quiver.arrow(a).source != at {
                return Err(Error::MalformedRelation(format!(
                    "arrows do not compose left-to-right at {}",
                    quiver.arrow(a).name
                )));
            }
            at = quiver.arrow(a).target;
        }
        Ok(Path {
            source,
            arrows: arrows.to_vec(),
        })
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn target(&self, quiver: &Quiver) -> VertexId {
        self.arrows
            .last()
            .map(|&a| quiver.arrow(a).target)
            .unwrap_or(self.source)
    }

    /// Degree-lex comparison: length first, then arrow indices in
    /// declaration order.
    pub fn deglex_cmp(&self, other: &Path) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.source.cmp(&other.source))
    }

    pub fn display(&self, quiver: &Quiver) -> String {
        if self.is_trivial() {
            format!("e{}", quiver.vertex_label(self.source))
        } else {
            self.arrows
                .iter()
                .map(|&a| quiver.arrow(a).name.clone())
                .collect::<Vec<_>>()
                .join("")
        }
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

/// One term of a relation: a coefficient times a path given by arrow names.
#[derive(Debug, Clone)]
pub struct RelationTerm {
    pub coeff: Scalar,
    pub path: Path,
}

/// A relation is a linear combination of parallel paths of length >= 2.
#[derive(Debug, Clone)]
pub struct Relation {
    pub terms: Vec<RelationTerm>,
}

/// Presentation of a path algebra with relations.
#[derive(Debug, Clone)]
pub struct AlgebraPresentation {
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    pub field: FieldSpec,
}

impl AlgebraPresentation {
    pub fn new(quiver: Quiver, field: FieldSpec) -> AlgebraPresentation {
        AlgebraPresentation {
            quiver,
            relations: Vec::new(),
            field,
        }
    }

    /// Add a relation given as (coefficient, arrow-name word) pairs.
    pub fn add_relation(&mut self, terms: Vec<(Scalar, Vec<&str>)>) -> Result<()> {
        let mut rel = Vec::new();
        for (coeff, word) in terms {
            let arrows: Result<Vec<ArrowId>> = word
                .iter()
                .map(|n| {
                    self.quiver
                        .arrow_by_name(n)
                        .ok_or_else(|| Error::Parse(format!("unknown arrow {n}")))
                })
                .collect();
            let path = Path::from_arrows(&self.quiver, &arrows?)?;
            rel.push(RelationTerm { coeff, path });
        }
        self.push_relation(Relation { terms: rel })
    }

    /// Monomial relation: the given arrow word is zero.
    pub fn add_zero_relation(&mut self, word: Vec<&str>) -> Result<()> {
        self.add_relation(vec![(self.field.one(), word)])
    }

    pub fn push_relation(&mut self, rel: Relation) -> Result<()> {
        validate_relation(&self.quiver, &rel)?;
        self.relations.push(rel);
        Ok(())
    }

    /// The opposite presentation: arrows reversed, relation words reversed.
    pub fn opposite(&self) -> AlgebraPresentation {
        let quiver = self.quiver.opposite();
        let relations = self
            .relations
            .iter()
            .map(|rel| Relation {
                terms: rel
                    .terms
                    .iter()
                    .map(|t| {
                        let mut arrows = t.path.arrows.clone();
                        arrows.reverse();
                        let source = self.quiver.arrow(*t.path.arrows.last().unwrap()).target;
                        RelationTerm {
                            coeff: t.coeff.clone(),
                            path: Path { source, arrows },
                        }
                    })
                    .collect(),
            })
            .collect();
        AlgebraPresentation {
            quiver,
            relations,
            field: self.field,
        }
    }
}

fn validate_relation(quiver: &Quiver, rel: &Relation) -> Result<()> {
    if rel.terms.is_empty() {
        return Err(Error::MalformedRelation("empty relation".into()));
    }
    let src = rel.terms[0].path.source;
    let tgt = rel.terms[0].path.target(quiver);
    for t in &rel.terms {
        if t.path.len() < 2 {
            return Err(Error::MalformedRelation(
                "relation contains a path of length < 2".into(),
            ));
        }
        if t.path.source != src || t.path.target(quiver) != tgt {
            return Err(Error::MalformedRelation(
                "relation mixes non-parallel paths".into(),
            ));
        }
        if t.coeff.is_zero() {
            return Err(Error::MalformedRelation("zero coefficient term".into()));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_composition_convention() {
        let q = Quiver::new(
            vec!["1".into(), "2".into(), "3".into()],
            vec![
                ("a".into(), "1".into(), "2".into()),
                ("b".into(), "2".into(), "3".into()),
            ],
        )
        .unwrap();
        let ab = Path::from_arrows(&q, &[ArrowId(0), ArrowId(1)]).unwrap();
        assert_eq!(ab.source, VertexId(0));
        assert_eq!(ab.target(&q), VertexId(2));
        assert!(Path::from_arrows(&q, &[ArrowId(1), ArrowId(0)]).is_err());
    }

    #[test]
    fn relation_validation() {
        let q = Quiver::new(
            vec!["1".into(), "2".into()],
            vec![
                ("a".into(), "1".into(), "2".into()),
                ("b".into(), "2".into(), "1".into()),
            ],
        )
        .unwrap();
        let mut pres = AlgebraPresentation::new(q, FieldSpec::Rationals);
        assert!(pres.add_zero_relation(vec!["a", "b", "a"]).is_ok());
        assert!(pres.add_zero_relation(vec!["a"]).is_err());
        let one = FieldSpec::Rationals.one();
        // a·b (1→1) plus b·a (2→2) is not parallel
        assert!(pres
            .add_relation(vec![(one.clone(), vec!["a", "b"]), (one, vec!["b", "a"])])
            .is_err());
    }
}
