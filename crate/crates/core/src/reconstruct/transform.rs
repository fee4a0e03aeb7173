use crate::complex::BoundedComplex;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Vector};
use crate::quiver::{ModuleMap, PathAlgebra};
use crate::rep::Representation;

/// The natural transformation `φ(p): F_n -> F_m` of an element
/// `p ∈ e_n Λ e_m`: on a complex it acts on cohomology at `n` through the
/// composite arrow matrices of `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transformation {
    pub from: usize,
    pub to: usize,
    /// Coordinates of `p` in the algebra basis.
    pub element: Vector,
}

/// `φ(p)`. Fails if `p` has coordinates outside `e_n Λ e_m`.
pub fn phi(alg: &PathAlgebra, n: usize, m: usize, p: &[Scalar]) -> Result<Transformation> {
    let block = alg.block(n, m);
    if p.len() != alg.dim() {
        return Err(Error::DimensionMismatch(format!(
            "element has {} coordinates, algebra has dimension {}",
            p.len(),
            alg.dim()
        )));
    }
    if let Some(k) = (0..p.len()).find(|k| !block.contains(k) && !p[*k].is_zero()) {
        return Err(Error::NotHomogeneous(format!(
            "`{}` is not in e_{} Λ e_{}",
            alg.basis_word(k),
            alg.quiver().vertex_label(n),
            alg.quiver().vertex_label(m)
        )));
    }
    Ok(Transformation {
        from: n,
        to: m,
        element: p.to_vec(),
    })
}

/// `ψ(f) = f(e_m)` for `f: M_m -> M_n`, in full algebra coordinates.
pub fn psi(alg: &PathAlgebra, f: &ModuleMap) -> Vector {
    alg.embed_block(f.to, f.from, &f.at_idempotent(alg))
}

impl Transformation {
    /// The linear map `V_n -> V_m` of a representation.
    pub fn on_representation(&self, alg: &PathAlgebra, v: &Representation) -> Matrix {
        let mut out = Matrix::zeros(v.field(), v.dim(self.to), v.dim(self.from));
        for k in alg.block(self.from, self.to) {
            let c = &self.element[k];
            if !c.is_zero() {
                out = out.add(&v.path_matrix(alg.basis_path(k)).scale(c));
            }
        }
        out
    }

    /// `φ(p)_V` on `H^i(V)`, in the chosen cohomology bases. Certifies that
    /// the chain-level map sends cycles to cycles and boundaries to
    /// boundaries, so the result does not depend on the representatives.
    pub fn at(&self, alg: &PathAlgebra, v: &BoundedComplex, degree: i32) -> Result<Matrix> {
        let hs = v.strand_cohomology(self.from, degree);
        let ht = v.strand_cohomology(self.to, degree);
        let chain = match v.term(degree) {
            Some(t) => self.on_representation(alg, t),
            None => Matrix::zeros(v.field(), 0, 0),
        };
        let images = chain.mul(&hs.representatives);
        let classes = ht
            .classes(&images)
            .ok_or_else(|| Error::Invalid("a cycle is sent outside the cycles".into()))?;
        let on_boundaries = ht
            .classes(&chain.mul(&hs.boundaries))
            .ok_or_else(|| Error::Invalid("a boundary is sent outside the cycles".into()))?;
        if !on_boundaries.is_zero() {
            return Err(Error::Invalid("the induced map depends on representatives".into()));
        }
        Ok(classes)
    }
}
