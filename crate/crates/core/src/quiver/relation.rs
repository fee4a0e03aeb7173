use super::graph::{Path, Quiver};
use crate::error::{Error, Result};
use crate::linalg::{Field, Scalar};

/// A generator of the relation ideal: a linear combination of non-trivial
/// paths that all run from `source` to `target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub source: usize,
    pub target: usize,
    pub terms: Vec<(Scalar, Path)>,
}

impl Relation {
    /// Validates homogeneity and non-triviality. Like terms are merged and
    /// zero coefficients dropped, keeping first-occurrence order.
    pub fn new(q: &Quiver, terms: Vec<(Scalar, Path)>) -> Result<Relation> {
        let Some((_, first)) = terms.first() else {
            return Err(Error::Invalid("relation with no terms".into()));
        };
        let (source, target) = (first.source, first.target);
        for (_, p) in &terms {
            if p.is_trivial() {
                return Err(Error::TrivialPathInRelation(q.path_word(p)));
            }
            if (p.source, p.target) != (source, target) {
                return Err(Error::NotHomogeneous(format!(
                    "`{}` runs {} -> {}, expected {} -> {}",
                    q.path_word(p),
                    q.vertex_label(p.source),
                    q.vertex_label(p.target),
                    q.vertex_label(source),
                    q.vertex_label(target)
                )));
            }
        }
        Ok(Relation {
            source,
            target,
            terms: combine(terms),
        })
    }

    /// Commutativity relation `p - q`.
    pub fn commutativity(q: &Quiver, field: Field, p: Path, r: Path) -> Result<Relation> {
        Relation::new(q, vec![(field.one(), p), (-field.one(), r)])
    }

    /// Builds from `(coefficient, arrow labels)` pairs over `field`.
    pub fn from_words(q: &Quiver, field: Field, terms: &[(i64, &[&str])]) -> Result<Relation> {
        let terms = terms
            .iter()
            .map(|(c, w)| Ok((field.from_i64(*c), q.path_from_labels(w)?)))
            .collect::<Result<Vec<_>>>()?;
        Relation::new(q, terms)
    }

    /// All terms cancelled.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient_sum(&self, field: Field) -> Scalar {
        self.terms
            .iter()
            .fold(field.zero(), |acc, (c, _)| &acc + c)
    }

    /// Human-readable form such as `a*b - c*d` or `2 a*b + 1/3 c`.
    pub fn display(&self, q: &Quiver) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (c, p)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if !mag.is_one() {
                out.push_str(&mag.to_string());
                out.push(' ');
            }
            out.push_str(&q.path_word(p));
        }
        out
    }
}

fn combine(terms: Vec<(Scalar, Path)>) -> Vec<(Scalar, Path)> {
    let mut out: Vec<(Scalar, Path)> = Vec::new();
    for (c, p) in terms {
        match out.iter_mut().find(|(_, q)| *q == p) {
            Some((acc, _)) => *acc += &c,
            None => out.push((c, p)),
        }
    }
    out.retain(|(c, _)| !c.is_zero());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Quiver {
        Quiver::build(
            &["1", "2", "3", "4"],
            &[("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")],
        )
        .unwrap()
    }

    #[test]
    fn commutativity_display() {
        let q = square();
        let r = Relation::from_words(&q, Field::Rational, &[(1, &["a", "b"]), (-1, &["c", "d"])])
            .unwrap();
        assert_eq!(r.display(&q), "a*b - c*d");
        assert!(r.coefficient_sum(Field::Rational).is_zero());
    }

    #[test]
    fn rejects_inhomogeneous_and_trivial() {
        let q = square();
        let e = Relation::from_words(&q, Field::Rational, &[(1, &["a", "b"]), (-1, &["c"])]);
        assert!(matches!(e, Err(Error::NotHomogeneous(_))));
        let t = Relation::new(&q, vec![(Field::Rational.one(), Path::trivial(0))]);
        assert!(matches!(t, Err(Error::TrivialPathInRelation(_))));
    }

    #[test]
    fn like_terms_cancel() {
        let q = square();
        let r = Relation::from_words(&q, Field::Rational, &[(1, &["a", "b"]), (-1, &["a", "b"])])
            .unwrap();
        assert!(r.is_zero());
    }
}
