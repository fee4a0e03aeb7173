use std::sync::Arc;

use crate::complex::{BoundedComplex, GradedDims};
use crate::error::Result;
use crate::quiver::PathAlgebra;
use crate::rep::Representation;
use crate::spectrum::IdealDescriptor;

/// The point `F_n: V ↦ H(V)_n` of `D(Q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalPoint {
    pub vertex: usize,
}

impl RationalPoint {
    pub fn eval(&self, v: &BoundedComplex) -> GradedDims {
        v.eval_f(self.vertex)
    }
}

/// The points of `D(Q)` with the evidence that they are pairwise distinct
/// and that their kernels are the primes.
#[derive(Debug, Clone)]
pub struct PointsCertificate {
    pub points: Vec<RationalPoint>,
    pub labels: Vec<String>,
    /// `pattern[n][m] = dim F_n(U(m))`, summed over degrees.
    pub pattern: Vec<Vec<usize>>,
    /// `F_n(U) = k` in degree 0 for every `n`.
    pub unit_values: bool,
    /// `ker F_n`, read off the simples, equals `P_n`.
    pub kernels: Vec<IdealDescriptor>,
}

impl PointsCertificate {
    pub fn is_identity_pattern(&self) -> bool {
        self.pattern
            .iter()
            .enumerate()
            .all(|(n, row)| row.iter().enumerate().all(|(m, &d)| d == usize::from(n == m)))
    }

    pub fn kernels_are_primes(&self) -> bool {
        let count = self.points.len();
        self.kernels
            .iter()
            .enumerate()
            .all(|(n, k)| *k == IdealDescriptor::prime_at(count, n))
    }

    pub fn certified(&self) -> bool {
        self.unit_values && self.is_identity_pattern() && self.kernels_are_primes()
    }
}

pub fn rational_points(alg: &PathAlgebra) -> Result<PointsCertificate> {
    alg.require_tensor()?;
    let q = alg.quiver_arc();
    let n = q.vertex_count();
    let points: Vec<RationalPoint> = (0..n).map(|vertex| RationalPoint { vertex }).collect();
    let simples: Vec<BoundedComplex> = (0..n)
        .map(|m| Representation::simple(Arc::clone(&q), alg.field(), m).map(|s| BoundedComplex::concentrated(s, 0)))
        .collect::<Result<_>>()?;
    let unit = BoundedComplex::concentrated(Representation::unit(Arc::clone(&q), alg.field()), 0);
    let pattern: Vec<Vec<usize>> = points
        .iter()
        .map(|p| simples.iter().map(|s| p.eval(s).total()).collect())
        .collect();
    let unit_values = points.iter().all(|p| p.eval(&unit) == GradedDims::unit());
    let kernels = pattern
        .iter()
        .map(|row| {
            IdealDescriptor::new(n, row.iter().enumerate().filter(|&(_, &d)| d == 0).map(|(m, _)| m))
        })
        .collect::<Result<_>>()?;
    Ok(PointsCertificate {
        points,
        labels: q.vertices().to_vec(),
        pattern,
        unit_values,
        kernels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Field;
    use crate::quiver::Quiver;

    #[test]
    fn one_vertex_point_is_total_cohomology() {
        let alg = PathAlgebra::build(Quiver::build(&["*"], &[]).unwrap(), Field::Rational, vec![]).unwrap();
        let cert = rational_points(&alg).unwrap();
        assert_eq!(cert.points.len(), 1);
        assert!(cert.certified());
        let k = Representation::unit(alg.quiver_arc(), Field::Rational);
        let v = BoundedComplex::concentrated(k.direct_sum(&k).unwrap(), 0)
            .direct_sum(&BoundedComplex::concentrated(k, 3))
            .unwrap();
        assert_eq!(cert.points[0].eval(&v).total(), 3);
    }
}
