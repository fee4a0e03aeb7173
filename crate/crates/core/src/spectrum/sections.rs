use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Scalar, Vector};
use crate::quiver::{compatibility, PathAlgebra, Quiver};
use crate::rep::{hom_space, RepMorphism, Representation};

/// Sections over an open set of points, as an algebra of functions on the
/// open set: each basis element records its scalar at every vertex of the
/// open set (the unit's endomorphisms act on each one-dimensional `U_v` by
/// a scalar).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionAlgebra {
    pub field: Field,
    /// The open set, as sorted vertex indices.
    pub open: Vec<usize>,
    pub basis: Vec<String>,
    /// `|open| x dim`; column `j` lists the scalars of basis element `j`.
    pub values: Matrix,
    /// `table[i][j]` = coordinates of `b_i · b_j = b_i ∘ b_j`.
    pub table: Vec<Vec<Vector>>,
}

impl SectionAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The zero algebra over the empty open set.
    pub fn zero(field: Field) -> SectionAlgebra {
        SectionAlgebra {
            field,
            open: Vec::new(),
            basis: Vec::new(),
            values: Matrix::zeros(field, 0, 0),
            table: Vec::new(),
        }
    }

    /// `End(V)` with composition as product. `open` names the parent vertex
    /// of each vertex of `v`'s quiver; `v` must be the unit there.
    fn endomorphisms(v: &Representation, open: Vec<usize>, q: &Quiver) -> Result<SectionAlgebra> {
        let field = v.field();
        let basis = hom_space(v, v)?;
        let flat: Vec<Vector> = basis.iter().map(flatten).collect();
        let len = flat.first().map_or(0, Vec::len);
        let m = Matrix::from_columns(field, len, &flat);
        let mut table = Vec::with_capacity(basis.len());
        for a in &basis {
            let products: Vec<Vector> = basis.iter().map(|b| flatten(&a.after(b))).collect();
            let coords = m
                .solve_matrix(&Matrix::from_columns(field, len, &products))
                .expect("End(V) is closed under composition");
            table.push(coords.columns());
        }
        let values = Matrix::from_columns(
            field,
            open.len(),
            &basis
                .iter()
                .map(|f| f.components.iter().map(|c| c[(0, 0)].clone()).collect())
                .collect::<Vec<Vector>>(),
        );
        let labels = basis.iter().map(|f| support_label(f, &open, q)).collect();
        Ok(SectionAlgebra {
            field,
            open,
            basis: labels,
            values,
            table,
        })
    }

    /// Direct product of algebras on disjoint open sets.
    pub fn product(field: Field, parts: Vec<SectionAlgebra>) -> SectionAlgebra {
        let mut out = SectionAlgebra::zero(field);
        for p in parts {
            let (d0, d1) = (out.dim(), p.dim());
            let total = d0 + d1;
            let pad = |v: &Vector, shift: usize| -> Vector {
                let mut x = vec![field.zero(); total];
                for (k, s) in v.iter().enumerate() {
                    x[k + shift] = s.clone();
                }
                x
            };
            let mut table: Vec<Vec<Vector>> = Vec::with_capacity(total);
            for row in &out.table {
                let mut r: Vec<Vector> = row.iter().map(|v| pad(v, 0)).collect();
                r.extend((0..d1).map(|_| vec![field.zero(); total]));
                table.push(r);
            }
            for row in &p.table {
                let mut r: Vec<Vector> = (0..d0).map(|_| vec![field.zero(); total]).collect();
                r.extend(row.iter().map(|v| pad(v, d0)));
                table.push(r);
            }
            out.values = out.values.block_diag(&p.values);
            out.open.extend(p.open);
            out.basis.extend(p.basis);
            out.table = table;
        }
        out
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = vec![self.field.zero(); self.dim()];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
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

    pub fn is_commutative(&self) -> bool {
        (0..self.dim()).all(|i| (0..self.dim()).all(|j| self.table[i][j] == self.table[j][i]))
    }

    pub fn is_associative(&self) -> bool {
        let e = |i: usize| -> Vector {
            let mut v = vec![self.field.zero(); self.dim()];
            v[i] = self.field.one();
            v
        };
        (0..self.dim()).all(|i| {
            (0..self.dim()).all(|j| {
                (0..self.dim()).all(|k| {
                    self.mul(&self.mul(&e(i), &e(j)), &e(k)) == self.mul(&e(i), &self.mul(&e(j), &e(k)))
                })
            })
        })
    }

    /// The value vector of a section: its scalar at each vertex of the open set.
    pub fn evaluate(&self, x: &[Scalar]) -> Vector {
        self.values.mul_vec(x)
    }

    /// Every basis element is an idempotent supported on one vertex and
    /// products of distinct ones vanish: the algebra is `k^{⊕W}` with
    /// componentwise product.
    pub fn is_componentwise(&self) -> bool {
        let n = self.dim();
        n == self.open.len()
            && self.values.rank() == n
            && (0..n).all(|i| {
                (0..n).all(|j| {
                    let expected: Vector = (0..n)
                        .map(|k| if i == j && k == i { self.field.one() } else { self.field.zero() })
                        .collect();
                    self.table[i][j] == expected
                })
            })
    }

    /// Restriction to a smaller open set, as a matrix in the two bases.
    /// `None` when `target.open` is not contained in `self.open` or a
    /// restricted section is not a section of `target`.
    pub fn restriction_to(&self, target: &SectionAlgebra) -> Option<Matrix> {
        let rows: Option<Vec<usize>> = target
            .open
            .iter()
            .map(|v| self.open.iter().position(|w| w == v))
            .collect();
        let restricted = self.values.select_rows(&rows?);
        target.values.solve_matrix(&restricted)
    }

    /// Same dimension and structure constants (bases matched in order).
    pub fn same_structure(&self, other: &SectionAlgebra) -> bool {
        self.dim() == other.dim() && self.table == other.table
    }
}

fn flatten(f: &RepMorphism) -> Vector {
    f.components
        .iter()
        .flat_map(|m| m.to_rows().into_iter().flatten())
        .collect()
}

fn support_label(f: &RepMorphism, open: &[usize], q: &Quiver) -> String {
    let verts: Vec<&str> = f
        .components
        .iter()
        .zip(open)
        .filter(|(c, _)| !c.is_zero())
        .map(|(_, &v)| q.vertex_label(v))
        .collect();
    format!("1[{}]", verts.join(","))
}

fn sorted_open(q: &Quiver, w: &[usize]) -> Result<Vec<usize>> {
    let mut open = w.to_vec();
    open.sort_unstable();
    open.dedup();
    if let Some(&v) = open.iter().find(|&&v| v >= q.vertex_count()) {
        return Err(Error::UnknownVertex(v.to_string()));
    }
    Ok(open)
}

/// Sections of the structure sheaf over `W`: the product over `v ∈ W` of
/// `End(U)` on the one-vertex subquiver `{v}`.
pub fn sheaf_sections(alg: &PathAlgebra, w: &[usize]) -> Result<SectionAlgebra> {
    let q = alg.quiver();
    let open = sorted_open(q, w)?;
    let parts = open
        .iter()
        .map(|&v| {
            let sub = q.full_subquiver(&[v])?;
            let u = Representation::unit(Arc::new(sub.quiver), alg.field());
            SectionAlgebra::endomorphisms(&u, vec![v], q)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SectionAlgebra::product(alg.field(), parts))
}

/// Sections of the presheaf `W ↦ End(U_W)` computed on the full subquiver
/// `Q_W`. Refuses subquivers that are not compatible with the relations.
pub fn presheaf_sections(alg: &PathAlgebra, w: &[usize]) -> Result<SectionAlgebra> {
    let q = alg.quiver();
    let open = sorted_open(q, w)?;
    if open.is_empty() {
        return Ok(SectionAlgebra::zero(alg.field()));
    }
    let compat = compatibility(q, alg.field(), alg.relations(), &open)?;
    if !compat.compatible {
        return Err(Error::Incompatible {
            intersection: compat.intersection_display(),
            reduced: compat.reduced_display(),
        });
    }
    let sub_q = Arc::new(compat.subquiver.quiver.clone());
    let u = Representation::unit(sub_q, alg.field());
    debug_assert!(u.satisfies(&compat.intersection));
    SectionAlgebra::endomorphisms(&u, open, q)
}
