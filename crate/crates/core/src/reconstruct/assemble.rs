use std::sync::Arc;

use super::transform::{phi, psi, Transformation};
use crate::complex::BoundedComplex;
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Scalar, Vector};
use crate::quiver::{PathAlgebra, Quiver};
use crate::rep::Representation;

/// Dimension of `Hom(F_n, F_m)` found by both routes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockDims {
    pub n: usize,
    pub m: usize,
    /// `dim e_n Λ e_m` from the path-class basis.
    pub paths: usize,
    /// `dim Hom_Λ(M_m, M_n)` from the module-map solver.
    pub module_maps: usize,
}

/// `A(D(Q)) = ⊕_{n,m} Hom(F_n, F_m)` with product `α ∗ β = β ∘ α` for
/// composable pairs and zero otherwise.
#[derive(Debug, Clone)]
pub struct ReconstructedAlgebra {
    pub quiver: Arc<Quiver>,
    pub field: Field,
    /// `φ(b_i)` for every basis element `b_i` of `Λ`; index `i` of `A` is
    /// matched with index `i` of `Λ`.
    pub basis: Vec<Transformation>,
    pub labels: Vec<String>,
    pub blocks: Vec<BlockDims>,
    /// Matrix of `φ(b_i)` on `F_n` of the probe `⊕_j M_j` (degree 0).
    pub probe_actions: Vec<Matrix>,
    /// `table[i][j]` = coordinates of `φ(b_i) ∗ φ(b_j)`.
    pub table: Vec<Vec<Vector>>,
    /// `ψ(φ(p)) = p` on every basis element and `φ(ψ(f)) = f` on every
    /// module-map basis element.
    pub round_trip: bool,
    /// `table` equals the structure constants of `Λ`.
    pub isomorphic: bool,
}

impl ReconstructedAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        v
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = vec![self.field.zero(); self.dim()];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (k, c) in self.table[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &(&ab * c);
                    }
                }
            }
        }
        out
    }

    /// `Σ_n id_{F_n}`.
    pub fn unit(&self) -> Vector {
        let mut u = vec![self.field.zero(); self.dim()];
        for (i, t) in self.basis.iter().enumerate() {
            if t.from == t.to && self.probe_actions[i] == Matrix::identity(self.field, self.probe_actions[i].rows()) {
                u[i] = self.field.one();
            }
        }
        u
    }

    pub fn is_associative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| {
            (0..d).all(|j| {
                let ij = self.mul(&self.basis_vector(i), &self.basis_vector(j));
                (0..d).all(|k| {
                    let left = self.mul(&ij, &self.basis_vector(k));
                    let jk = self.mul(&self.basis_vector(j), &self.basis_vector(k));
                    left == self.mul(&self.basis_vector(i), &jk)
                })
            })
        })
    }

    pub fn is_unital(&self) -> bool {
        let u = self.unit();
        (0..self.dim()).all(|i| {
            let b = self.basis_vector(i);
            self.mul(&u, &b) == b && self.mul(&b, &u) == b
        })
    }
}

pub(super) fn flatten(m: &Matrix) -> Vector {
    m.to_rows().into_iter().flatten().collect()
}

/// Builds `A(D(Q))` and compares it with `Λ = kQ/(R)`.
pub fn assemble_a(alg: &PathAlgebra) -> Result<ReconstructedAlgebra> {
    alg.require_tensor()?;
    let q = alg.quiver_arc();
    let field = alg.field();
    let nv = q.vertex_count();
    let label = |v: usize| q.vertex_label(v).to_string();

    // Route 1 against route 2, and the φ/ψ round trip.
    let mut blocks = Vec::new();
    let mut round_trip = true;
    for n in 0..nv {
        for m in 0..nv {
            let maps = alg.module_hom_space(n, m);
            let dims = BlockDims {
                n,
                m,
                paths: alg.block_dim(n, m),
                module_maps: maps.len(),
            };
            if dims.paths != dims.module_maps {
                return Err(Error::Inconsistent {
                    n: label(n),
                    m: label(m),
                    detail: format!("{} path classes but {} module maps", dims.paths, dims.module_maps),
                });
            }
            blocks.push(dims);
            for k in alg.block(n, m) {
                let p = alg.basis_vector(k);
                round_trip &= psi(alg, &alg.left_multiplication(&p, n, m)) == p;
            }
            for f in &maps {
                let p = psi(alg, f);
                round_trip &= alg.left_multiplication(&p, n, m) == *f;
            }
        }
    }

    // Every basis element acting on the probe.
    let probe_rep = Representation::regular(alg);
    let probe = BoundedComplex::concentrated(probe_rep, 0);
    let mut basis = Vec::with_capacity(alg.dim());
    let mut probe_actions = Vec::with_capacity(alg.dim());
    for k in 0..alg.dim() {
        let (n, m) = alg.basis_block(k);
        let t = phi(alg, n, m, &alg.basis_vector(k))?;
        probe_actions.push(t.at(alg, &probe, 0)?);
        basis.push(t);
    }

    // Products: compose on the probe and read off coordinates within the
    // target block.
    let mut table = vec![vec![vec![field.zero(); alg.dim()]; alg.dim()]; alg.dim()];
    for n in 0..nv {
        for l in 0..nv {
            let target = alg.block(n, l);
            if target.is_empty() {
                continue;
            }
            let rows = probe_actions[target.start].rows() * probe_actions[target.start].cols();
            let columns: Vec<Vector> = target.clone().map(|k| flatten(&probe_actions[k])).collect();
            let span = Matrix::from_columns(field, rows, &columns);
            if span.rank() != target.len() {
                return Err(Error::Inconsistent {
                    n: label(n),
                    m: label(l),
                    detail: "the probe does not separate the basis".into(),
                });
            }
            let pairs: Vec<(usize, usize)> = (0..nv)
                .flat_map(|m| {
                    let second = alg.block(m, l);
                    alg.block(n, m).flat_map(move |i| second.clone().map(move |j| (i, j)))
                })
                .collect();
            // α ∗ β = β ∘ α
            let composites: Vec<Vector> = pairs
                .iter()
                .map(|&(i, j)| flatten(&probe_actions[j].mul(&probe_actions[i])))
                .collect();
            let coords = span
                .solve_matrix(&Matrix::from_columns(field, rows, &composites))
                .ok_or_else(|| Error::Inconsistent {
                    n: label(n),
                    m: label(l),
                    detail: "a composite leaves the block".into(),
                })?;
            for (c, &(i, j)) in pairs.iter().enumerate() {
                for (r, k) in target.clone().enumerate() {
                    table[i][j][k] = coords[(r, c)].clone();
                }
            }
        }
    }
    let isomorphic = table == alg.structure_table();
    Ok(ReconstructedAlgebra {
        quiver: q,
        field,
        labels: (0..alg.dim()).map(|k| alg.basis_word(k)).collect(),
        basis,
        blocks,
        probe_actions,
        table,
        round_trip,
        isomorphic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Relation;

    const Q: Field = Field::Rational;

    #[test]
    fn kronecker_reconstructs() {
        let q = Quiver::build(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2")]).unwrap();
        let alg = PathAlgebra::build(q, Q, vec![]).unwrap();
        let a = assemble_a(&alg).unwrap();
        assert_eq!(a.dim(), 4);
        assert!(a.round_trip && a.isomorphic);
        assert!(a.is_associative() && a.is_unital());
        assert_eq!(a.unit(), alg.one());
    }

    #[test]
    fn square_with_commutativity() {
        let q = Quiver::build(
            &["1", "2", "3", "4"],
            &[("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")],
        )
        .unwrap();
        let r = Relation::from_words(&q, Q, &[(1, &["a", "b"]), (-1, &["c", "d"])]).unwrap();
        let alg = PathAlgebra::build(q, Q, vec![r]).unwrap();
        let a = assemble_a(&alg).unwrap();
        assert_eq!(a.dim(), 9);
        assert!(a.round_trip && a.isomorphic);
        assert!(a.blocks.iter().all(|b| b.paths == b.module_maps));
    }

    #[test]
    fn discrete_quiver_gives_product_of_fields() {
        let alg = PathAlgebra::build(Quiver::build(&["x", "y", "z"], &[]).unwrap(), Q, vec![]).unwrap();
        let a = assemble_a(&alg).unwrap();
        assert_eq!(a.dim(), 3);
        assert!(a.isomorphic);
        for i in 0..3 {
            for j in 0..3 {
                let expected = if i == j { a.basis_vector(i) } else { vec![Q.zero(); 3] };
                assert_eq!(a.table[i][j], expected);
            }
        }
    }
}
