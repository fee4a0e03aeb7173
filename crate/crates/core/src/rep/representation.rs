use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};
use crate::quiver::{Path, PathAlgebra, Quiver, QuiverMorphism, Relation, Subquiver};

/// A finite-dimensional representation: a space `k^{dims[v]}` per vertex and
/// a `dims[t] x dims[s]` matrix per arrow `s -> t`, acting on column vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    quiver: Arc<Quiver>,
    field: Field,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl Representation {
    pub fn new(
        quiver: Arc<Quiver>,
        field: Field,
        dims: Vec<usize>,
        maps: Vec<Matrix>,
    ) -> Result<Representation> {
        if dims.len() != quiver.vertex_count() || maps.len() != quiver.arrow_count() {
            return Err(Error::DimensionMismatch(format!(
                "expected {} dimensions and {} arrow maps",
                quiver.vertex_count(),
                quiver.arrow_count()
            )));
        }
        for (a, m) in quiver.arrows().iter().zip(&maps) {
            if m.shape() != (dims[a.target], dims[a.source]) || m.field() != field {
                return Err(Error::DimensionMismatch(format!(
                    "arrow `{}` needs a {}x{} matrix over {field}, got {}x{}",
                    a.label,
                    dims[a.target],
                    dims[a.source],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Representation {
            quiver,
            field,
            dims,
            maps,
        })
    }

    pub fn zero(quiver: Arc<Quiver>, field: Field) -> Representation {
        let dims = vec![0; quiver.vertex_count()];
        let maps = vec![Matrix::zeros(field, 0, 0); quiver.arrow_count()];
        Representation {
            quiver,
            field,
            dims,
            maps,
        }
    }

    /// `k` at every vertex, identity on every arrow.
    pub fn unit(quiver: Arc<Quiver>, field: Field) -> Representation {
        let dims = vec![1; quiver.vertex_count()];
        let maps = vec![Matrix::identity(field, 1); quiver.arrow_count()];
        Representation {
            quiver,
            field,
            dims,
            maps,
        }
    }

    /// The simple representation `U(n)`: `k` at `n`, zero elsewhere.
    pub fn simple(quiver: Arc<Quiver>, field: Field, n: usize) -> Result<Representation> {
        if n >= quiver.vertex_count() {
            return Err(Error::UnknownVertex(n.to_string()));
        }
        let mut dims = vec![0; quiver.vertex_count()];
        dims[n] = 1;
        let maps = quiver
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(field, dims[a.target], dims[a.source]))
            .collect();
        Ok(Representation {
            quiver,
            field,
            dims,
            maps,
        })
    }

    /// The indecomposable projective `M_n = e_n Λ` as a representation.
    pub fn projective(alg: &PathAlgebra, n: usize) -> Representation {
        let (dims, maps) = alg.projective(n);
        Representation {
            quiver: alg.quiver_arc(),
            field: alg.field(),
            dims,
            maps,
        }
    }

    /// `⊕_j M_j`, the regular right module.
    pub fn regular(alg: &PathAlgebra) -> Representation {
        (0..alg.quiver().vertex_count())
            .map(|n| Representation::projective(alg, n))
            .reduce(|a, b| a.direct_sum(&b).expect("same quiver"))
            .unwrap_or_else(|| Representation::zero(alg.quiver_arc(), alg.field()))
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn quiver_arc(&self) -> Arc<Quiver> {
        Arc::clone(&self.quiver)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn arrow_map(&self, a: usize) -> &Matrix {
        &self.maps[a]
    }

    pub fn same_category(&self, other: &Representation) -> bool {
        self.field == other.field
            && (Arc::ptr_eq(&self.quiver, &other.quiver) || self.quiver == other.quiver)
    }

    fn require_same(&self, other: &Representation) -> Result<()> {
        if self.same_category(other) {
            Ok(())
        } else {
            Err(Error::QuiverMismatch)
        }
    }

    /// Action of a path: the product of its arrow matrices in reverse order.
    pub fn path_matrix(&self, p: &Path) -> Matrix {
        p.arrows.iter().fold(
            Matrix::identity(self.field, self.dims[p.source]),
            |acc, &a| self.maps[a].mul(&acc),
        )
    }

    pub fn relation_matrix(&self, r: &Relation) -> Matrix {
        r.terms.iter().fold(
            Matrix::zeros(self.field, self.dims[r.target], self.dims[r.source]),
            |acc, (c, p)| acc.add(&self.path_matrix(p).scale(c)),
        )
    }

    /// Every relation generator acts as zero.
    pub fn satisfies(&self, relations: &[Relation]) -> bool {
        self.check_relations(relations).is_ok()
    }

    pub fn check_relations(&self, relations: &[Relation]) -> Result<()> {
        for r in relations {
            if !self.relation_matrix(r).is_zero() {
                return Err(Error::RelationViolated(r.display(&self.quiver)));
            }
        }
        Ok(())
    }

    /// Vertex-wise tensor product; arrow maps are Kronecker products.
    pub fn tensor(&self, other: &Representation) -> Result<Representation> {
        self.require_same(other)?;
        Ok(Representation {
            quiver: self.quiver_arc(),
            field: self.field,
            dims: self.dims.iter().zip(&other.dims).map(|(a, b)| a * b).collect(),
            maps: self
                .maps
                .iter()
                .zip(&other.maps)
                .map(|(a, b)| a.kronecker(b))
                .collect(),
        })
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        self.require_same(other)?;
        Ok(Representation {
            quiver: self.quiver_arc(),
            field: self.field,
            dims: self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect(),
            maps: self
                .maps
                .iter()
                .zip(&other.maps)
                .map(|(a, b)| a.block_diag(b))
                .collect(),
        })
    }

    /// Restriction to a full subquiver.
    pub fn restrict(&self, sub: &Subquiver) -> Representation {
        Representation {
            quiver: Arc::new(sub.quiver.clone()),
            field: self.field,
            dims: sub.vertex_map.iter().map(|&v| self.dims[v]).collect(),
            maps: sub.arrow_map.iter().map(|&a| self.maps[a].clone()).collect(),
        }
    }

    /// Extension by zero from a full subquiver of `parent`.
    pub fn extend_by_zero(&self, sub: &Subquiver, parent: Arc<Quiver>) -> Result<Representation> {
        if *self.quiver != sub.quiver {
            return Err(Error::QuiverMismatch);
        }
        let mut dims = vec![0; parent.vertex_count()];
        for (local, &v) in sub.vertex_map.iter().enumerate() {
            dims[v] = self.dims[local];
        }
        let maps = parent
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arr)| match sub.local_arrow(a) {
                Some(local) => self.maps[local].clone(),
                None => Matrix::zeros(self.field, dims[arr.target], dims[arr.source]),
            })
            .collect();
        Ok(Representation {
            quiver: parent,
            field: self.field,
            dims,
            maps,
        })
    }

    /// Restriction along `g: source -> self.quiver()`: `(g^*V)_n = V_{g(n)}`.
    pub fn pullback(&self, g: &QuiverMorphism, source: Arc<Quiver>) -> Result<Representation> {
        g.validate(&source, &self.quiver)?;
        Ok(Representation {
            dims: g.vertex_map.iter().map(|&v| self.dims[v]).collect(),
            maps: g.arrow_map.iter().map(|&a| self.maps[a].clone()).collect(),
            quiver: source,
            field: self.field,
        })
    }

    /// `V ⊗ U(n)`: `V_n` at `n`, zero elsewhere.
    pub fn at_vertex(&self, n: usize) -> Representation {
        let s = Representation::simple(self.quiver_arc(), self.field, n).expect("valid vertex");
        self.tensor(&s).expect("same quiver")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn chain() -> Arc<Quiver> {
        Arc::new(Quiver::build(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap())
    }

    #[test]
    fn unit_and_simple_shapes() {
        let q = chain();
        let u = Representation::unit(q.clone(), Q);
        assert_eq!(u.dims(), [1, 1, 1]);
        assert!(u.maps().iter().all(|m| *m == Matrix::identity(Q, 1)));
        let s = Representation::simple(q.clone(), Q, 0).unwrap();
        assert_eq!(s.dims(), [1, 0, 0]);
        assert!(Representation::simple(q, Q, 7).is_err());
    }

    #[test]
    fn simples_multiply_like_idempotents() {
        let q = chain();
        let s: Vec<_> = (0..3)
            .map(|n| Representation::simple(q.clone(), Q, n).unwrap())
            .collect();
        assert_eq!(s[1].tensor(&s[1]).unwrap(), s[1]);
        assert!(s[0].tensor(&s[2]).unwrap().is_zero());
    }

    #[test]
    fn bad_shapes_rejected() {
        let q = chain();
        let m = Matrix::identity(Q, 2);
        let r = Representation::new(q, Q, vec![1, 1, 1], vec![m.clone(), m]);
        assert!(matches!(r, Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn path_matrix_is_reverse_product() {
        let q = chain();
        let a = Matrix::from_i64(Q, &[&[1, 2]]);
        let b = Matrix::from_i64(Q, &[&[3], &[4]]);
        let v = Representation::new(q.clone(), Q, vec![2, 1, 2], vec![a.clone(), b.clone()]).unwrap();
        let ab = q.path_from_labels(&["a", "b"]).unwrap();
        assert_eq!(v.path_matrix(&ab), b.mul(&a));
    }

    #[test]
    fn restriction_round_trip() {
        let q = chain();
        let sub = q.full_subquiver(&[1, 2]).unwrap();
        let u = Representation::unit(q.clone(), Q);
        let u_sub = Representation::unit(Arc::new(sub.quiver.clone()), Q);
        assert_eq!(u.restrict(&sub), u_sub);
        let ext = u_sub.extend_by_zero(&sub, q.clone()).unwrap();
        assert_eq!(ext.dims(), [0, 1, 1]);
        assert_ne!(ext, u);
        assert_eq!(ext.restrict(&sub), u_sub);
    }

    #[test]
    fn regular_module_of_chain() {
        let q = (*chain()).clone();
        let alg = PathAlgebra::build(q, Q, vec![]).unwrap();
        let reg = Representation::regular(&alg);
        // Λ e_j: paths ending at j
        assert_eq!(reg.dims(), [1, 2, 3]);
        assert_eq!(reg.total_dim(), alg.dim());
    }
}
