use std::sync::Arc;

use super::morphism::{sub_quotient, RepMorphism};
use super::representation::Representation;
use crate::error::Result;
use crate::linalg::Matrix;
use crate::quiver::{compatibility, PathAlgebra};

/// One step `K_ℓ ⊂ U` of the filtration of the unit.
#[derive(Debug, Clone)]
pub struct FiltrationStep {
    /// Vertex at position `ℓ` of the admissible order.
    pub vertex: usize,
    /// `K_ℓ`, spanned by the coordinates of `U` at positions `≥ ℓ`.
    pub k: Representation,
    /// Per-vertex basis of `K_ℓ` inside `U`.
    pub basis: Vec<Matrix>,
    /// `K_ℓ` equals the extension by zero of the unit of the suffix subquiver.
    pub is_extended_unit: bool,
    /// `K_ℓ` satisfies every relation.
    pub satisfies_relations: bool,
    /// The suffix subquiver is compatible with the relations.
    pub suffix_compatible: bool,
    /// `K_ℓ / K_{ℓ+1}`.
    pub quotient: Representation,
    /// Isomorphism `K_ℓ / K_{ℓ+1} -> U(ℓ)`, when one was found.
    pub quotient_iso: Option<RepMorphism>,
}

impl FiltrationStep {
    pub fn certified(&self) -> bool {
        self.is_extended_unit
            && self.satisfies_relations
            && self.suffix_compatible
            && self.quotient_iso.is_some()
    }
}

#[derive(Debug, Clone)]
pub struct Filtration {
    pub order: Vec<usize>,
    pub steps: Vec<FiltrationStep>,
    /// `K_{q+1}`, which must be zero.
    pub terminal: Representation,
}

impl Filtration {
    pub fn certified(&self) -> bool {
        self.terminal.is_zero() && self.steps.iter().all(FiltrationStep::certified)
    }
}

/// Builds `U = K_1 ⊃ K_2 ⊃ … ⊃ K_q ⊃ K_{q+1} = 0` along the admissible order
/// and certifies each step.
pub fn unit_filtration(alg: &PathAlgebra) -> Result<Filtration> {
    let quiver = alg.quiver_arc();
    let field = alg.field();
    let order = quiver.admissible_order()?;
    let n = order.len();
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let unit = Representation::unit(Arc::clone(&quiver), field);
    let span_from = |level: usize| -> Vec<Matrix> {
        (0..n)
            .map(|v| {
                if position[v] >= level {
                    Matrix::identity(field, 1)
                } else {
                    Matrix::zeros(field, 1, 0)
                }
            })
            .collect()
    };

    let mut steps = Vec::with_capacity(n);
    for (level, &vertex) in order.iter().enumerate() {
        let basis = span_from(level);
        let k = sub_quotient(&unit, &basis)?.sub;

        let suffix: Vec<usize> = order[level..].to_vec();
        let compat = compatibility(&quiver, field, alg.relations(), &suffix)?;
        let suffix_unit = Representation::unit(Arc::new(compat.subquiver.quiver.clone()), field);
        let extended = suffix_unit.extend_by_zero(&compat.subquiver, Arc::clone(&quiver))?;

        // K_{ℓ+1} inside K_ℓ: K_ℓ is 1-dimensional exactly at positions ≥ ℓ
        let inner: Vec<Matrix> = (0..n)
            .map(|v| {
                let d = k.dim(v);
                if position[v] > level {
                    Matrix::identity(field, d)
                } else {
                    Matrix::zeros(field, d, 0)
                }
            })
            .collect();
        let quotient = sub_quotient(&k, &inner)?.quotient;
        let simple = Representation::simple(Arc::clone(&quiver), field, vertex)?;
        let quotient_iso = (quotient.dims() == simple.dims())
            .then(|| RepMorphism::identity(&simple))
            .filter(|f| f.is_morphism(&quotient, &simple) && f.is_iso());

        steps.push(FiltrationStep {
            vertex,
            satisfies_relations: k.satisfies(alg.relations()),
            is_extended_unit: extended == k,
            suffix_compatible: compat.compatible,
            k,
            basis,
            quotient,
            quotient_iso,
        });
    }
    let terminal = sub_quotient(&unit, &span_from(n))?.sub;
    Ok(Filtration {
        order,
        steps,
        terminal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Field;
    use crate::quiver::{Quiver, Relation};

    #[test]
    fn square_filtration_is_certified() {
        let q = Quiver::build(
            &["1", "2", "3", "4"],
            &[("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")],
        )
        .unwrap();
        let r = Relation::from_words(&q, Field::Rational, &[(1, &["a", "b"]), (-1, &["c", "d"])])
            .unwrap();
        let alg = PathAlgebra::build(q, Field::Rational, vec![r]).unwrap();
        let f = unit_filtration(&alg).unwrap();
        assert!(f.certified());
        assert_eq!(f.steps[0].k, Representation::unit(alg.quiver_arc(), Field::Rational));
        assert_eq!(f.steps[1].k.dims(), [0, 1, 1, 1]);
        assert_eq!(f.steps[3].k.dims(), [0, 0, 0, 1]);
    }
}
