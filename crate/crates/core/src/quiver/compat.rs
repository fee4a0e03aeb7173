use super::algebra::PathAlgebra;
use super::graph::{Quiver, Subquiver};
use super::relation::Relation;
use crate::error::Result;
use crate::linalg::Field;

/// Relations seen from a full subquiver `Q'`.
#[derive(Debug, Clone)]
pub struct Compatibility {
    pub subquiver: Subquiver,
    /// Generators all of whose paths lie in `Q'` (on `Q'`).
    pub intersection: Vec<Relation>,
    /// Generators with every arrow outside `Q'` set to zero, zero results
    /// dropped (on `Q'`).
    pub reduced: Vec<Relation>,
    /// `reduced ⊆ (intersection)` as ideals of `kQ'`.
    pub compatible: bool,
}

impl Compatibility {
    pub fn intersection_display(&self) -> Vec<String> {
        self.intersection
            .iter()
            .map(|r| r.display(&self.subquiver.quiver))
            .collect()
    }

    pub fn reduced_display(&self) -> Vec<String> {
        self.reduced
            .iter()
            .map(|r| r.display(&self.subquiver.quiver))
            .collect()
    }
}

/// Computes `R ∩ Q'` and `R̄` for the full subquiver on `verts` and decides
/// whether every element of `R̄` lies in the ideal generated by `R ∩ Q'`.
pub fn compatibility(
    q: &Quiver,
    field: Field,
    relations: &[Relation],
    verts: &[usize],
) -> Result<Compatibility> {
    let sub = q.full_subquiver(verts)?;
    let mut intersection = Vec::new();
    let mut reduced = Vec::new();
    for r in relations {
        let local: Vec<_> = r
            .terms
            .iter()
            .map(|(c, p)| (c.clone(), sub.local_path(p)))
            .collect();
        let surviving: Vec<_> = local
            .iter()
            .filter_map(|(c, p)| p.clone().map(|p| (c.clone(), p)))
            .collect();
        if surviving.len() == local.len() && !surviving.is_empty() {
            intersection.push(Relation::new(&sub.quiver, surviving.clone())?);
        }
        if !surviving.is_empty() {
            let rbar = Relation::new(&sub.quiver, surviving)?;
            if !rbar.is_zero() {
                reduced.push(rbar);
            }
        }
    }
    let alg = PathAlgebra::build(sub.quiver.clone(), field, intersection.clone())?;
    let compatible = reduced
        .iter()
        .all(|r| alg.relation_element(r).iter().all(|x| x.is_zero()));
    Ok(Compatibility {
        subquiver: sub,
        intersection,
        reduced,
        compatible,
    })
}
