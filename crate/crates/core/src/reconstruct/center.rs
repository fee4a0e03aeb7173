use super::assemble::{flatten, ReconstructedAlgebra};
use crate::complex::{BoundedComplex, ChainMap};
use crate::error::Result;
use crate::linalg::{Matrix, Scalar, Vector};
use crate::quiver::PathAlgebra;
use crate::rep::{hom_space, RepMorphism, Representation};

/// `Z(A)`, `End(U)` and the map `z: End(U) -> Z(A)`.
#[derive(Debug, Clone)]
pub struct CenterReport {
    /// Basis of `Z(A)` in the coordinates of `A`.
    pub center: Vec<Vector>,
    pub end_unit: Vec<RepMorphism>,
    /// `z(φ)` for each basis element of `End(U)`.
    pub z_images: Vec<Vector>,
    pub components: usize,
    pub z_in_center: bool,
    pub z_multiplicative: bool,
    pub z_unital: bool,
    pub z_injective: bool,
}

impl CenterReport {
    pub fn dim(&self) -> usize {
        self.center.len()
    }

    pub fn certified(&self) -> bool {
        self.dim() == self.components
            && self.end_unit.len() == self.components
            && self.z_in_center
            && self.z_multiplicative
            && self.z_unital
            && self.z_injective
    }
}

fn central(a: &ReconstructedAlgebra, x: &[Scalar]) -> bool {
    (0..a.dim()).all(|j| {
        let b = a.basis_vector(j);
        a.mul(x, &b) == a.mul(&b, x)
    })
}

/// Solves `[x, b_j] = 0` for all `j`.
fn center_basis(a: &ReconstructedAlgebra) -> Vec<Vector> {
    let d = a.dim();
    let field = a.field;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for j in 0..d {
        for k in 0..d {
            // coefficient of b_k in x b_j - b_j x
            let row: Vec<_> = (0..d).map(|i| &a.table[i][j][k] - &a.table[j][i][k]).collect();
            if row.iter().any(|c| !c.is_zero()) {
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return (0..d).map(|i| a.basis_vector(i)).collect();
    }
    Matrix::from_rows(field, d, rows).expect("rectangular").kernel_basis()
}

/// `z(φ) = (F_n(Φ))_n` with `Φ_P = 1 ⊗ φ` on the probe `P = ⊕_j M_j`,
/// written in the basis of `A` by matching actions on the probe.
fn z_of(alg: &PathAlgebra, a: &ReconstructedAlgebra, probe: &BoundedComplex, phi: &RepMorphism) -> Vector {
    let field = a.field;
    let p = probe.term(0).expect("probe in degree 0");
    let big = RepMorphism::identity(p).tensor(phi);
    let chain = ChainMap::new([(0, big)].into_iter().collect());
    let nv = alg.quiver().vertex_count();
    let mut x = vec![field.zero(); a.dim()];
    for n in 0..nv {
        let target = chain.induced_at(probe, probe, n, 0);
        let range = alg.block(n, n);
        let rows = target.rows() * target.cols();
        let columns: Vec<Vector> = range.clone().map(|k| flatten(&a.probe_actions[k])).collect();
        let coords = Matrix::from_columns(field, rows, &columns)
            .solve_matrix(&Matrix::from_columns(field, rows, &[flatten(&target)]))
            .expect("F_n(Φ) is a natural endomorphism of F_n");
        for (r, k) in range.enumerate() {
            x[k] = coords[(r, 0)].clone();
        }
    }
    x
}

pub fn center_and_z(alg: &PathAlgebra, a: &ReconstructedAlgebra) -> Result<CenterReport> {
    let center = center_basis(a);
    let u = Representation::unit(alg.quiver_arc(), alg.field());
    let end_unit = hom_space(&u, &u)?;
    let probe = BoundedComplex::concentrated(Representation::regular(alg), 0);
    let z_images: Vec<Vector> = end_unit.iter().map(|f| z_of(alg, a, &probe, f)).collect();

    let z_in_center = z_images.iter().all(|x| central(a, x));
    let mut z_multiplicative = true;
    for (i, f) in end_unit.iter().enumerate() {
        for (j, g) in end_unit.iter().enumerate() {
            let fg = z_of(alg, a, &probe, &f.after(g));
            z_multiplicative &= fg == a.mul(&z_images[i], &z_images[j]);
        }
    }
    let z_unital = z_of(alg, a, &probe, &RepMorphism::identity(&u)) == a.unit();
    let z_injective = Matrix::from_columns(alg.field(), a.dim(), &z_images).rank() == z_images.len();
    Ok(CenterReport {
        center,
        end_unit,
        z_images,
        components: alg.quiver().component_count(),
        z_in_center,
        z_multiplicative,
        z_unital,
        z_injective,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Field;
    use crate::quiver::Quiver;
    use crate::reconstruct::assemble_a;

    #[test]
    fn center_counts_components() {
        let connected = Quiver::build(&["1", "2", "3"], &[("a", "1", "2"), ("b", "3", "2")]).unwrap();
        let split = Quiver::build(&["1", "2", "3", "4"], &[("a", "1", "2"), ("b", "3", "4")]).unwrap();
        for (q, expected) in [(connected, 1), (split, 2)] {
            let alg = PathAlgebra::build(q, Field::Rational, vec![]).unwrap();
            let a = assemble_a(&alg).unwrap();
            let c = center_and_z(&alg, &a).unwrap();
            assert_eq!(c.dim(), expected);
            assert!(c.certified());
        }
    }
}
