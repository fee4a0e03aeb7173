use std::collections::BTreeMap;

use super::bounded::{BoundedComplex, ChainMap};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rep::{RepMorphism, Representation};

/// A complex of vector spaces together with its cohomology (zero
/// differentials) and chain maps in both directions that induce the identity
/// on cohomology.
#[derive(Debug, Clone)]
pub struct SplitWitness {
    pub homology: BoundedComplex,
    /// `H -> C`, picking cycle representatives.
    pub inclusion: ChainMap,
    /// `C -> H`, killing boundaries and a complement of the cycles.
    pub projection: ChainMap,
}

/// Splits a complex over a quiver with one vertex and no arrows.
pub fn split_vector_complex(c: &BoundedComplex) -> Result<SplitWitness> {
    let q = c.quiver();
    if q.vertex_count() != 1 || q.arrow_count() != 0 {
        return Err(Error::Invalid(
            "splitting needs a quiver with one vertex and no arrows".into(),
        ));
    }
    let field = c.field();
    let mut terms = BTreeMap::new();
    let mut inclusion = BTreeMap::new();
    let mut projection = BTreeMap::new();
    for i in c.degrees() {
        let h = c.strand_cohomology(0, i);
        let known = h.boundaries.hstack(&h.representatives);
        let basis = known.hstack(&known.complement());
        let inv = basis.inverse().expect("basis of the term");
        let pi = inv.block(h.boundaries.cols(), 0, h.dim(), inv.cols());
        let rep = Representation::new(c.quiver_arc(), field, vec![h.dim()], Vec::new())?;
        terms.insert(i, rep);
        inclusion.insert(i, RepMorphism { components: vec![h.representatives.clone()] });
        projection.insert(i, RepMorphism { components: vec![pi] });
    }
    let homology = BoundedComplex::from_degrees(c.quiver_arc(), field, terms, BTreeMap::new())?;
    Ok(SplitWitness {
        homology,
        inclusion: ChainMap::new(inclusion),
        projection: ChainMap::new(projection),
    })
}

impl SplitWitness {
    /// Both witnesses are chain maps and induce the identity on cohomology
    /// in both round trips.
    pub fn verify(&self, c: &BoundedComplex) -> bool {
        let h = &self.homology;
        if self.inclusion.check(h, c).is_err() || self.projection.check(c, h).is_err() {
            return false;
        }
        let on_h = self.projection.after(&self.inclusion);
        let on_c = self.inclusion.after(&self.projection);
        c.degrees().all(|i| {
            let n = h.dim_at(i, 0);
            let field = c.field();
            on_h.induced_at(h, h, 0, i) == Matrix::identity(field, n)
                && on_c.induced_at(c, c, 0, i) == Matrix::identity(field, n)
        })
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::linalg::Field;
    use crate::quiver::Quiver;

    const Q: Field = Field::Rational;

    fn point() -> Arc<Quiver> {
        Arc::new(Quiver::build(&["*"], &[]).unwrap())
    }

    fn space(q: &Arc<Quiver>, n: usize) -> Representation {
        Representation::new(q.clone(), Q, vec![n], Vec::new()).unwrap()
    }

    fn map(m: Matrix) -> RepMorphism {
        RepMorphism { components: vec![m] }
    }

    #[test]
    fn zero_differentials_split_trivially() {
        let q = point();
        let c = BoundedComplex::from_degrees(
            q.clone(),
            Q,
            BTreeMap::from([(0, space(&q, 2)), (1, space(&q, 1))]),
            BTreeMap::new(),
        )
        .unwrap();
        let w = split_vector_complex(&c).unwrap();
        assert_eq!(w.homology, c);
        assert!(w.verify(&c));
        assert_eq!(w.inclusion, ChainMap::identity(&c));
    }

    #[test]
    fn identity_complex_splits_to_zero() {
        let q = point();
        let k = space(&q, 1);
        let c = BoundedComplex::two_term(k.clone(), k.clone(), RepMorphism::identity(&k), 0).unwrap();
        let w = split_vector_complex(&c).unwrap();
        assert!(w.homology.is_zero());
        assert!(w.verify(&c));
    }

    #[test]
    fn four_term_round_trip() {
        let q = point();
        // k^2 -> k^3 -> k^3 -> k^1 with d∘d = 0
        let d0 = Matrix::from_i64(Q, &[&[1, 0], &[0, 0], &[2, 0]]);
        let d1 = Matrix::from_i64(Q, &[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]);
        let d2 = Matrix::from_i64(Q, &[&[0, 0, 1]]);
        assert!(d1.mul(&d0).is_zero() && d2.mul(&d1).is_zero());
        let c = BoundedComplex::new(
            q.clone(),
            Q,
            -1,
            vec![space(&q, 2), space(&q, 3), space(&q, 3), space(&q, 1)],
            vec![map(d0), map(d1), map(d2)],
        )
        .unwrap();
        let w = split_vector_complex(&c).unwrap();
        assert!(w.verify(&c));
        assert_eq!(w.homology.cohomology_at(0), c.cohomology_at(0));
    }

    #[test]
    fn arrows_rejected() {
        let q = Arc::new(Quiver::build(&["1", "2"], &[("a", "1", "2")]).unwrap());
        let c = BoundedComplex::zero(q, Q);
        assert!(split_vector_complex(&c).is_err());
    }
}
