use std::collections::BTreeSet;

use crate::complex::BoundedComplex;
use crate::error::{Error, Result};
use crate::quiver::Quiver;

/// A thick tensor ideal of `D(Q)`, recorded by the largest support its
/// members may have: the ideal is `{V : supp(V) ⊆ bound}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdealDescriptor {
    vertex_count: usize,
    bound: BTreeSet<usize>,
}

impl IdealDescriptor {
    pub fn new(vertex_count: usize, bound: impl IntoIterator<Item = usize>) -> Result<IdealDescriptor> {
        let bound: BTreeSet<usize> = bound.into_iter().collect();
        if let Some(&v) = bound.iter().find(|&&v| v >= vertex_count) {
            return Err(Error::UnknownVertex(v.to_string()));
        }
        Ok(IdealDescriptor { vertex_count, bound })
    }

    pub fn unit(vertex_count: usize) -> IdealDescriptor {
        IdealDescriptor {
            vertex_count,
            bound: (0..vertex_count).collect(),
        }
    }

    pub fn zero(vertex_count: usize) -> IdealDescriptor {
        IdealDescriptor {
            vertex_count,
            bound: BTreeSet::new(),
        }
    }

    /// `P_n = {V : H(V)_n = 0}`.
    pub fn prime_at(vertex_count: usize, n: usize) -> IdealDescriptor {
        IdealDescriptor {
            vertex_count,
            bound: (0..vertex_count).filter(|&v| v != n).collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn bound(&self) -> &BTreeSet<usize> {
        &self.bound
    }

    /// Vertices whose simple is not in the ideal.
    pub fn complement(&self) -> BTreeSet<usize> {
        (0..self.vertex_count).filter(|v| !self.bound.contains(v)).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.bound.len() == self.vertex_count
    }

    pub fn is_zero(&self) -> bool {
        self.bound.is_empty()
    }

    pub fn contains_support(&self, support: &BTreeSet<usize>) -> bool {
        support.is_subset(&self.bound)
    }

    pub fn contains(&self, v: &BoundedComplex) -> bool {
        self.contains_support(&v.support())
    }

    pub fn is_subideal_of(&self, other: &IdealDescriptor) -> bool {
        self.bound.is_subset(&other.bound)
    }

    /// A proper ideal is prime exactly when it misses a single simple:
    /// if `U(m), U(n)` are both outside, `U(m) ⊗ U(n) = 0` lies inside.
    pub fn is_prime(&self) -> Result<bool> {
        if self.is_unit() {
            return Err(Error::NotProper);
        }
        Ok(self.complement().len() == 1)
    }

    /// The only ideal strictly above `bound` with one more vertex is the
    /// unit ideal exactly when one vertex is missing.
    pub fn is_maximal(&self) -> Result<bool> {
        if self.is_unit() {
            return Err(Error::NotProper);
        }
        Ok((0..self.vertex_count)
            .filter(|v| !self.bound.contains(v))
            .all(|v| {
                let mut bigger = self.bound.clone();
                bigger.insert(v);
                bigger.len() == self.vertex_count
            }))
    }
}

/// The smallest thick tensor ideal containing the given objects.
pub fn ideal_of(q: &Quiver, objects: &[BoundedComplex]) -> IdealDescriptor {
    IdealDescriptor {
        vertex_count: q.vertex_count(),
        bound: objects.iter().flat_map(BoundedComplex::support).collect(),
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::linalg::Field;
    use crate::rep::Representation;

    #[test]
    fn unit_and_simples() {
        let q = Arc::new(Quiver::build(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap());
        let u = BoundedComplex::concentrated(Representation::unit(q.clone(), Field::Rational), 0);
        assert!(ideal_of(&q, std::slice::from_ref(&u)).is_unit());
        let s1 = BoundedComplex::concentrated(Representation::simple(q.clone(), Field::Rational, 1).unwrap(), 0);
        assert_eq!(ideal_of(&q, std::slice::from_ref(&s1)).bound(), &BTreeSet::from([1]));
        assert!(ideal_of(&q, &[]).is_zero());

        let p0 = IdealDescriptor::prime_at(3, 0);
        assert!(p0.contains(&s1));
        assert!(!p0.contains(&u));
        assert!(p0.is_prime().unwrap() && p0.is_maximal().unwrap());
        assert!(BoundedComplex::zero(q, Field::Rational).support().is_empty());
    }

    #[test]
    fn two_missing_vertices_not_prime() {
        let i = IdealDescriptor::new(3, [0]).unwrap();
        assert!(!i.is_prime().unwrap());
        assert!(!i.is_maximal().unwrap());
        assert!(matches!(IdealDescriptor::unit(3).is_prime(), Err(Error::NotProper)));
        assert!(IdealDescriptor::zero(1).is_prime().unwrap());
    }
}
