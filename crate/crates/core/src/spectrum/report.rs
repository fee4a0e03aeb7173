use std::collections::BTreeSet;
use std::sync::Arc;

use super::ideal::IdealDescriptor;
use super::sections::sheaf_sections;
use crate::complex::BoundedComplex;
use crate::error::Result;
use crate::quiver::{PathAlgebra, Quiver, QuiverMorphism};
use crate::rep::Representation;

/// A point of `Spc(D(Q))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point {
    pub vertex: usize,
    pub label: String,
    pub prime: IdealDescriptor,
}

/// The prime spectrum with the evidence that its topology is discrete.
#[derive(Debug, Clone)]
pub struct SpectrumReport {
    pub quiver: Arc<Quiver>,
    pub points: Vec<Point>,
    /// `open_singletons[n]`: the basic open `{P : W_n ∈ P}` for
    /// `W_n = ⊕_{m≠n} U(m)` is exactly `{P_n}`.
    pub open_singletons: Vec<bool>,
}

/// `Z(S)` for a finite object list, computed twice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedSet {
    /// `{P : S ∩ P = ∅}`, by membership tests.
    pub points: BTreeSet<usize>,
    /// `⋂_{V∈S} supp(V)`.
    pub from_supports: BTreeSet<usize>,
}

impl ClosedSet {
    pub fn agrees(&self) -> bool {
        self.points == self.from_supports
    }
}

impl SpectrumReport {
    pub fn is_discrete(&self) -> bool {
        self.open_singletons.iter().all(|&b| b)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn closed_set(&self, objects: &[BoundedComplex]) -> ClosedSet {
        let points = self
            .points
            .iter()
            .filter(|p| objects.iter().all(|v| !p.prime.contains(v)))
            .map(|p| p.vertex)
            .collect();
        let all: BTreeSet<usize> = (0..self.points.len()).collect();
        let from_supports = objects
            .iter()
            .fold(all, |acc, v| acc.intersection(&v.support()).copied().collect());
        ClosedSet {
            points,
            from_supports,
        }
    }

    /// Points whose prime contains `v`: the basic open set of `v`.
    pub fn open_of(&self, v: &BoundedComplex) -> BTreeSet<usize> {
        self.points
            .iter()
            .filter(|p| p.prime.contains(v))
            .map(|p| p.vertex)
            .collect()
    }
}

/// `Spc(D(Q))` for a finite ordered quiver with tensor relations.
pub fn spc(alg: &PathAlgebra) -> Result<SpectrumReport> {
    alg.require_tensor()?;
    let q = alg.quiver_arc();
    q.admissible_order()?;
    let n = q.vertex_count();
    let points: Vec<Point> = (0..n)
        .map(|v| Point {
            vertex: v,
            label: q.vertex_label(v).to_string(),
            prime: IdealDescriptor::prime_at(n, v),
        })
        .collect();
    let mut report = SpectrumReport {
        quiver: Arc::clone(&q),
        points,
        open_singletons: Vec::new(),
    };
    let simples: Vec<Representation> = (0..n)
        .map(|m| Representation::simple(Arc::clone(&q), alg.field(), m))
        .collect::<Result<_>>()?;
    report.open_singletons = (0..n)
        .map(|v| {
            let witness = simples
                .iter()
                .enumerate()
                .filter(|&(m, _)| m != v)
                .fold(Representation::zero(Arc::clone(&q), alg.field()), |acc, (_, s)| {
                    acc.direct_sum(s).expect("same quiver")
                });
            report.open_of(&BoundedComplex::concentrated(witness, 0)) == BTreeSet::from([v])
        })
        .collect();
    Ok(report)
}

/// The map `Spc(D(Q_i)) -> Spc(D(Q_j))` induced by restriction along
/// `g: Q_i -> Q_j`.
#[derive(Debug, Clone)]
pub struct SpectrumMap {
    /// `P_n ↦ P_{g(n)}`.
    pub point_map: Vec<usize>,
    /// For every `n`, the preimage of `P_n` under `g^*`, tested on simples of
    /// `Q_j`, is `P_{g(n)}`.
    pub verified: bool,
    pub injective: bool,
    pub surjective: bool,
    /// Sheaf sections over each target point and over its preimage have the
    /// same dimension.
    pub sheaves_match: bool,
}

impl SpectrumMap {
    pub fn is_bijective(&self) -> bool {
        self.injective && self.surjective
    }
}

pub fn induced_spectrum_map(g: &QuiverMorphism, source: &PathAlgebra, target: &PathAlgebra) -> Result<SpectrumMap> {
    let (qs, qt) = (source.quiver_arc(), target.quiver_arc());
    g.validate(&qs, &qt)?;
    let ns = qs.vertex_count();
    let nt = qt.vertex_count();
    let mut verified = true;
    for n in 0..ns {
        let prime = IdealDescriptor::prime_at(ns, n);
        let outside: BTreeSet<usize> = (0..nt)
            .filter(|&m| {
                let s = Representation::simple(Arc::clone(&qt), target.field(), m).expect("vertex");
                let pulled = s.pullback(g, Arc::clone(&qs)).expect("validated");
                !prime.contains(&BoundedComplex::concentrated(pulled, 0))
            })
            .collect();
        verified &= outside == BTreeSet::from([g.vertex_map[n]]);
    }
    let image: BTreeSet<usize> = g.vertex_map.iter().copied().collect();
    let mut sheaves_match = true;
    for m in 0..nt {
        let pre: Vec<usize> = (0..ns).filter(|&n| g.vertex_map[n] == m).collect();
        sheaves_match &= sheaf_sections(target, &[m])?.dim() == sheaf_sections(source, &pre)?.dim();
    }
    Ok(SpectrumMap {
        point_map: g.vertex_map.clone(),
        verified,
        injective: g.is_injective_on_vertices(),
        surjective: image.len() == nt,
        sheaves_match,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::linalg::Field;
    use crate::quiver::Relation;

    const Q: Field = Field::Rational;

    fn kronecker(i: usize) -> PathAlgebra {
        let arrows: Vec<(String, String, String)> = (0..i)
            .map(|k| (format!("a{k}"), "1".into(), "2".into()))
            .collect();
        PathAlgebra::build(Quiver::new(["1", "2"], arrows).unwrap(), Q, vec![]).unwrap()
    }

    #[test]
    fn kronecker_spectrum_is_two_points() {
        let r = spc(&kronecker(3)).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.is_discrete());
        let u = BoundedComplex::concentrated(Representation::unit(r.quiver.clone(), Q), 0);
        let z = r.closed_set(&[u]);
        assert!(z.agrees());
        assert_eq!(z.points, BTreeSet::from([0, 1]));
    }

    #[test]
    fn non_tensor_relations_refused() {
        let q = Quiver::build(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap();
        let r = Relation::from_words(&q, Q, &[(1, &["a", "b"])]).unwrap();
        let alg = PathAlgebra::build(q, Q, vec![r]).unwrap();
        assert!(matches!(spc(&alg), Err(Error::NotTensor { .. })));
    }

    #[test]
    fn kronecker_inclusion_is_bijective() {
        let (k2, k3) = (kronecker(2), kronecker(3));
        let g = QuiverMorphism::from_labels(k2.quiver(), k3.quiver(), &[("1", "1"), ("2", "2")], &[("a0", "a0"), ("a1", "a1")]).unwrap();
        let m = induced_spectrum_map(&g, &k2, &k3).unwrap();
        assert!(m.verified && m.is_bijective() && m.sheaves_match);

        let id = induced_spectrum_map(&QuiverMorphism::identity(k3.quiver()), &k3, &k3).unwrap();
        assert_eq!(id.point_map, [0, 1]);
    }

    #[test]
    fn vertex_inclusion_is_not_surjective() {
        let chain = PathAlgebra::build(
            Quiver::build(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap(),
            Q,
            vec![],
        )
        .unwrap();
        let point = PathAlgebra::build(Quiver::build(&["*"], &[]).unwrap(), Q, vec![]).unwrap();
        let g = QuiverMorphism::from_labels(point.quiver(), chain.quiver(), &[("*", "2")], &[]).unwrap();
        let m = induced_spectrum_map(&g, &point, &chain).unwrap();
        assert!(m.verified && m.injective && !m.surjective && !m.sheaves_match);
    }
}
