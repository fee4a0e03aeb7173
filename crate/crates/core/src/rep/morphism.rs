use super::representation::Representation;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};
use crate::quiver::{intertwiners, Family};

/// A morphism of representations, one matrix per vertex. The source and
/// target are carried by the caller; [`RepMorphism::is_morphism`] checks the
/// naturality squares against a given pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepMorphism {
    pub components: Vec<Matrix>,
}

impl RepMorphism {
    pub fn identity(v: &Representation) -> RepMorphism {
        RepMorphism {
            components: v
                .dims()
                .iter()
                .map(|&d| Matrix::identity(v.field(), d))
                .collect(),
        }
    }

    pub fn zero(v: &Representation, w: &Representation) -> RepMorphism {
        RepMorphism {
            components: v
                .dims()
                .iter()
                .zip(w.dims())
                .map(|(&s, &t)| Matrix::zeros(v.field(), t, s))
                .collect(),
        }
    }

    /// Shapes match and `f_t V_a = W_a f_s` for every arrow `a: s -> t`.
    pub fn is_morphism(&self, v: &Representation, w: &Representation) -> bool {
        if !v.same_category(w) || self.components.len() != v.dims().len() {
            return false;
        }
        let shapes_ok = self
            .components
            .iter()
            .enumerate()
            .all(|(i, m)| m.shape() == (w.dim(i), v.dim(i)));
        shapes_ok
            && v.quiver().arrows().iter().enumerate().all(|(a, arr)| {
                self.components[arr.target].mul(v.arrow_map(a))
                    == w.arrow_map(a).mul(&self.components[arr.source])
            })
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &RepMorphism) -> RepMorphism {
        RepMorphism {
            components: self
                .components
                .iter()
                .zip(&first.components)
                .map(|(g, f)| g.mul(f))
                .collect(),
        }
    }

    pub fn add(&self, other: &RepMorphism) -> RepMorphism {
        RepMorphism {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> RepMorphism {
        RepMorphism {
            components: self.components.iter().map(|m| m.scale(c)).collect(),
        }
    }

    pub fn tensor(&self, other: &RepMorphism) -> RepMorphism {
        RepMorphism {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.kronecker(b))
                .collect(),
        }
    }

    pub fn direct_sum(&self, other: &RepMorphism) -> RepMorphism {
        RepMorphism {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.block_diag(b))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Matrix::is_zero)
    }

    pub fn is_iso(&self) -> bool {
        self.components
            .iter()
            .all(|m| m.rows() == m.cols() && m.rank() == m.rows())
    }
}

/// Basis of `Hom(v, w)`, solving all naturality squares as one linear system.
pub fn hom_space(v: &Representation, w: &Representation) -> Result<Vec<RepMorphism>> {
    if !v.same_category(w) {
        return Err(Error::QuiverMismatch);
    }
    let arrows: Vec<(usize, usize)> = v
        .quiver()
        .arrows()
        .iter()
        .map(|a| (a.source, a.target))
        .collect();
    Ok(intertwiners(
        v.field(),
        &arrows,
        Family {
            dims: v.dims(),
            maps: v.maps(),
        },
        Family {
            dims: w.dims(),
            maps: w.maps(),
        },
    )
    .into_iter()
    .map(|components| RepMorphism { components })
    .collect())
}

/// A subrepresentation with its quotient and the canonical maps.
#[derive(Debug, Clone)]
pub struct SubQuotient {
    pub sub: Representation,
    pub quotient: Representation,
    pub inclusion: RepMorphism,
    pub projection: RepMorphism,
}

/// Splits `v` along per-vertex subspaces, given by basis columns. Fails if
/// some arrow does not map the subspace at its source into the one at its
/// target.
pub fn sub_quotient(v: &Representation, subspaces: &[Matrix]) -> Result<SubQuotient> {
    let field = v.field();
    let q = v.quiver();
    if subspaces.len() != q.vertex_count() {
        return Err(Error::DimensionMismatch("one subspace per vertex".into()));
    }
    let mut bases = Vec::new();
    for (i, s) in subspaces.iter().enumerate() {
        if s.rows() != v.dim(i) {
            return Err(Error::DimensionMismatch(format!(
                "subspace at `{}` has ambient dimension {}, expected {}",
                q.vertex_label(i),
                s.rows(),
                v.dim(i)
            )));
        }
        bases.push(s.column_space());
    }
    let complements: Vec<Matrix> = bases.iter().map(Matrix::complement).collect();
    let projections: Vec<Matrix> = bases
        .iter()
        .zip(&complements)
        .map(|(s, c)| {
            let inv = s.hstack(c).inverse().expect("basis of the ambient space");
            inv.block(s.cols(), 0, c.cols(), inv.cols())
        })
        .collect();

    let mut sub_maps = Vec::new();
    let mut quo_maps = Vec::new();
    for (a, arr) in q.arrows().iter().enumerate() {
        let image = v.arrow_map(a).mul(&bases[arr.source]);
        let restricted = bases[arr.target]
            .solve_matrix(&image)
            .ok_or_else(|| Error::NotStable(arr.label.clone()))?;
        sub_maps.push(restricted);
        quo_maps.push(
            projections[arr.target]
                .mul(v.arrow_map(a))
                .mul(&complements[arr.source]),
        );
    }
    let sub = Representation::new(
        v.quiver_arc(),
        field,
        bases.iter().map(Matrix::cols).collect(),
        sub_maps,
    )?;
    let quotient = Representation::new(
        v.quiver_arc(),
        field,
        complements.iter().map(Matrix::cols).collect(),
        quo_maps,
    )?;
    Ok(SubQuotient {
        sub,
        quotient,
        inclusion: RepMorphism { components: bases },
        projection: RepMorphism {
            components: projections,
        },
    })
}
