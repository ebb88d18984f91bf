//! Quivers, path words, and algebra presentations KQ/I.
//!
//! Composition convention: a path word lists arrow indices in composition
//! order, so `[a, b]` denotes "a after b" and is composable when
//! source(a) = target(b). A relation `ab` for 1 <-a- 2 <-b- 3 is the word
//! `[a, b]` with source 3 and target 1.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    /// 1-indexed vertex ids.
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub num_vertices: usize,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(num_vertices: usize, arrows: Vec<Arrow>) -> Self {
        Quiver {
            num_vertices,
            arrows,
        }
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Source vertex of a composition-order word (source of the last arrow).
    pub fn word_source(&self, word: &[usize]) -> usize {
        self.arrows[*word.last().expect("empty word has no source")].source
    }

    pub fn word_target(&self, word: &[usize]) -> usize {
        self.arrows[word[0]].target
    }

    pub fn word_is_composable(&self, word: &[usize]) -> bool {
        word.windows(2)
            .all(|w| self.arrows[w[0]].source == self.arrows[w[1]].target)
    }

    pub fn word_name(&self, word: &[usize]) -> String {
        word.iter()
            .map(|&a| self.arrows[a].name.as_str())
            .collect::<Vec<_>>()
            .join("*")
    }

    pub fn validate(&self) -> Result<()> {
        if self.num_vertices == 0 {
            return Err(Error::Invalid("quiver needs at least one vertex".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for a in &self.arrows {
            if a.name.is_empty() || !a.name.chars().next().unwrap().is_ascii_alphabetic() {
                return Err(Error::Invalid(format!(
                    "arrow name '{}' must start with a letter",
                    a.name
                )));
            }
            if !seen.insert(a.name.clone()) {
                return Err(Error::Invalid(format!("duplicate arrow name '{}'", a.name)));
            }
            if a.source == 0
                || a.source > self.num_vertices
                || a.target == 0
                || a.target > self.num_vertices
            {
                return Err(Error::Invalid(format!(
                    "arrow '{}' endpoints out of range 1..={}",
                    a.name, self.num_vertices
                )));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationTerm {
    pub coeff: i64,
    /// Arrow indices in composition order.
    pub word: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<RelationTerm>,
}

impl Relation {
    pub fn monomial(word: Vec<usize>) -> Self {
        Relation {
            terms: vec![RelationTerm { coeff: 1, word }],
        }
    }

    /// True when the relation is a single scalar multiple of one path.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].coeff != 0
    }

    pub fn display(&self, q: &Quiver) -> String {
        self.terms
            .iter()
            .map(|t| format!("{}*{}", t.coeff, q.word_name(&t.word)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// A quiver with admissible length-homogeneous relations; the input data for
/// building the finite-dimensional algebra KQ/I.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraPresentation {
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
}

impl AlgebraPresentation {
    pub fn new(quiver: Quiver, relations: Vec<Relation>) -> Self {
        AlgebraPresentation { quiver, relations }
    }

    /// Relations must be composable combinations of parallel paths of one
    /// common length >= 2.
    pub fn validate(&self) -> Result<()> {
        self.quiver.validate()?;
        for (k, rel) in self.relations.iter().enumerate() {
            if rel.terms.is_empty() {
                return Err(Error::Invalid(format!("relation {} has no terms", k + 1)));
            }
            for t in &rel.terms {
                if t.word.is_empty() {
                    return Err(Error::NotAdmissible(format!(
                        "relation {} contains a length-0 term",
                        k + 1
                    )));
                }
                for &a in &t.word {
                    if a >= self.quiver.arrows.len() {
                        return Err(Error::Invalid(format!(
                            "relation {} references unknown arrow",
                            k + 1
                        )));
                    }
                }
                if !self.quiver.word_is_composable(&t.word) {
                    return Err(Error::Invalid(format!(
                        "relation {} term '{}' is not composable",
                        k + 1,
                        self.quiver.word_name(&t.word)
                    )));
                }
            }
            let len = rel.terms[0].word.len();
            let src = self.quiver.word_source(&rel.terms[0].word);
            let tgt = self.quiver.word_target(&rel.terms[0].word);
            for t in &rel.terms {
                if t.word.len() != len
                    || self.quiver.word_source(&t.word) != src
                    || self.quiver.word_target(&t.word) != tgt
                {
                    return Err(Error::NonHomogeneousRelation(format!(
                        "relation {} mixes paths of different length or endpoints",
                        k + 1
                    )));
                }
            }
            if len < 2 {
                return Err(Error::NotAdmissible(format!(
                    "relation {} has length {} < 2",
                    k + 1,
                    len
                )));
            }
        }
        Ok(())
    }

    /// Maximal homogeneous relation length (0 when there are no relations).
    pub fn max_relation_length(&self) -> usize {
        self.relations
            .iter()
            .map(|r| r.terms[0].word.len())
            .max()
            .unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain_ab() -> AlgebraPresentation {
        // 1 <-a- 2 <-b- 3 with relation ab.
        let q = Quiver::new(
            3,
            vec![
                Arrow {
                    name: "a".into(),
                    source: 2,
                    target: 1,
                },
                Arrow {
                    name: "b".into(),
                    source: 3,
                    target: 2,
                },
            ],
        );
        AlgebraPresentation::new(q, vec![Relation::monomial(vec![0, 1])])
    }

    #[test]
    fn composition_order_convention() {
        let p = chain_ab();
        let w = vec![0usize, 1usize]; // a after b
        assert!(p.quiver.word_is_composable(&w));
        assert_eq!(p.quiver.word_source(&w), 3);
        assert_eq!(p.quiver.word_target(&w), 1);
        assert_eq!(p.quiver.word_name(&w), "a*b");
        assert!(!p.quiver.word_is_composable(&[1, 0]));
        assert!(p.validate().is_ok());
    }

    #[test]
    fn rejects_length_one_relation() {
        let mut p = chain_ab();
        p.relations.push(Relation::monomial(vec![0]));
        assert!(matches!(p.validate(), Err(Error::NotAdmissible(_))));
    }

    #[test]
    fn rejects_non_homogeneous_relation() {
        // 1 <-a- 2 <-b- 3 and 1 <-c- 3 direct: a*b and c are parallel but lengths differ
        let q = Quiver::new(
            3,
            vec![
                Arrow {
                    name: "a".into(),
                    source: 2,
                    target: 1,
                },
                Arrow {
                    name: "b".into(),
                    source: 3,
                    target: 2,
                },
                Arrow {
                    name: "c".into(),
                    source: 3,
                    target: 1,
                },
                Arrow {
                    name: "d".into(),
                    source: 3,
                    target: 2,
                },
            ],
        );
        // a*b + a*d is fine (same endpoints, same length)
        let ok = AlgebraPresentation::new(
            q.clone(),
            vec![Relation {
                terms: vec![
                    RelationTerm {
                        coeff: 1,
                        word: vec![0, 1],
                    },
                    RelationTerm {
                        coeff: -1,
                        word: vec![0, 3],
                    },
                ],
            }],
        );
        assert!(ok.validate().is_ok());
        let bad = AlgebraPresentation::new(
            q,
            vec![Relation {
                terms: vec![
                    RelationTerm {
                        coeff: 1,
                        word: vec![0, 1],
                    },
                    RelationTerm {
                        coeff: 1,
                        word: vec![2],
                    },
                ],
            }],
        );
        assert!(matches!(
            bad.validate(),
            Err(Error::NonHomogeneousRelation(_))
        ));
    }
}
