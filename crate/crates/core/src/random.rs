//! Seeded random quivers, modules and complexes for property tests.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::BoundedComplex;
use crate::dsl::{ArrowDecl, QuiverSpec, RelationDecl};
use crate::error::Result;
use crate::linalg::{Field, Matrix, Scalar, Vector};
use crate::quiver::{Path, PathAlgebra, Quiver};
use crate::rep::{hom_space, sub_quotient, RepMorphism, Representation};

/// Largest path algebra a random quiver may produce.
pub const MAX_ALGEBRA_DIM: usize = 40;

pub struct Generator {
    rng: ChaCha8Rng,
    field: Field,
}

impl Generator {
    pub fn new(seed: u64) -> Generator {
        Generator::over(seed, Field::Rational)
    }

    pub fn over(seed: u64, field: Field) -> Generator {
        Generator {
            rng: ChaCha8Rng::seed_from_u64(seed),
            field,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// A small integer in `-2..=2`, read in the field.
    pub fn scalar(&mut self) -> Scalar {
        self.field.from_i64(self.rng.gen_range(-2..=2))
    }

    pub fn vector(&mut self, len: usize) -> Vector {
        (0..len).map(|_| self.scalar()).collect()
    }

    /// Vertices `1..=n`, arrows only from lower to higher labels, and a few
    /// commutativity relations `p - q` between parallel paths.
    pub fn ordered_quiver(&mut self, max_vertices: usize, max_arrows: usize) -> QuiverSpec {
        let n = self.rng.gen_range(1..=max_vertices.max(1));
        let vertices: Vec<String> = (1..=n).map(|v| v.to_string()).collect();
        let mut arrows = Vec::new();
        if n > 1 {
            for k in 0..self.rng.gen_range(0..=max_arrows) {
                let s = self.rng.gen_range(0..n - 1);
                let t = self.rng.gen_range(s + 1..n);
                arrows.push(ArrowDecl {
                    label: format!("a{k}"),
                    source: vertices[s].clone(),
                    target: vertices[t].clone(),
                });
            }
        }
        let mut spec = QuiverSpec {
            name: format!("random{n}"),
            field: self.field,
            vertices,
            arrows,
            relations: Vec::new(),
        };
        let paths = loop {
            let q = spec.quiver().expect("labels are distinct");
            let paths = q.enumerate_paths().expect("arrows increase");
            if paths.len() <= MAX_ALGEBRA_DIM {
                break paths;
            }
            spec.arrows.pop();
        };

        let q = spec.quiver().expect("labels are distinct");
        let mut pairs: Vec<(&Path, &Path)> = Vec::new();
        for (i, p) in paths.iter().enumerate() {
            for r in &paths[i + 1..] {
                if !p.is_trivial() && (p.source, p.target) == (r.source, r.target) {
                    pairs.push((p, r));
                }
            }
        }
        pairs.shuffle(&mut self.rng);
        let count = self.rng.gen_range(0..=2.min(pairs.len()));
        let word = |p: &Path| p.arrows.iter().map(|&a| q.arrow(a).label.clone()).collect::<Vec<_>>();
        spec.relations = pairs[..count]
            .iter()
            .map(|(p, r)| RelationDecl {
                terms: vec![(self.field.one(), word(p)), (-self.field.one(), word(r))],
            })
            .collect();
        spec
    }

    pub fn ordered_algebra(&mut self, max_vertices: usize, max_arrows: usize) -> PathAlgebra {
        self.ordered_quiver(max_vertices, max_arrows)
            .algebra()
            .expect("random quivers are ordered and their relations homogeneous")
    }

    fn vertex(&mut self, q: &Quiver) -> usize {
        self.rng.gen_range(0..q.vertex_count())
    }

    /// A module of total dimension at most `cap` (unless it is a simple or
    /// the unit, which may exceed a tiny cap).
    pub fn module(&mut self, alg: &PathAlgebra, cap: usize) -> Representation {
        let q = alg.quiver_arc();
        let n = self.vertex(&q);
        match self.rng.gen_range(0..5) {
            0 => Representation::simple(q, alg.field(), n).expect("vertex in range"),
            1 => Representation::unit(q, alg.field()),
            2 => {
                let p = Representation::projective(alg, n);
                if p.total_dim() <= cap {
                    p
                } else {
                    self.quotient_of_projective(alg, n, cap)
                }
            }
            3 => {
                let p = Representation::projective(alg, n);
                let w = self.vertex(&q);
                let x = self.vector(p.dim(w));
                let sub = sub_quotient(&p, &generated(alg, &p, &[(w, x)]))
                    .expect("generated subspaces are stable")
                    .sub;
                if sub.total_dim() <= cap {
                    sub
                } else {
                    self.quotient_of_projective(alg, n, cap)
                }
            }
            _ => self.quotient_of_projective(alg, n, cap),
        }
    }

    /// `P_n` modulo a random submodule, enlarged until the quotient fits
    /// in `cap` dimensions.
    pub fn quotient_of_projective(&mut self, alg: &PathAlgebra, n: usize, cap: usize) -> Representation {
        let p = Representation::projective(alg, n);
        let q = alg.quiver_arc();
        let mut gens: Vec<(usize, Vector)> = Vec::new();
        for _ in 0..self.rng.gen_range(0..=2) {
            let w = self.vertex(&q);
            if p.dim(w) > 0 {
                gens.push((w, self.vector(p.dim(w))));
            }
        }
        loop {
            let split = sub_quotient(&p, &generated(alg, &p, &gens)).expect("generated subspaces are stable");
            if split.quotient.total_dim() <= cap {
                return split.quotient;
            }
            let widest = (0..q.vertex_count())
                .max_by_key(|&w| (split.quotient.dim(w), w))
                .expect("nonempty quiver");
            for c in Matrix::identity(alg.field(), p.dim(widest)).columns() {
                gens.push((widest, c));
            }
        }
    }

    /// A random element of `Hom(v, w)`.
    pub fn morphism(&mut self, v: &Representation, w: &Representation) -> Result<RepMorphism> {
        let mut f = RepMorphism::zero(v, w);
        for g in hom_space(v, w)? {
            f = f.add(&g.scale(&self.scalar()));
        }
        Ok(f)
    }

    /// A direct sum of one or two pieces, each a module in one degree or a
    /// two-term complex `X -> Y`, with degrees in `-2..=2`.
    pub fn complex(&mut self, alg: &PathAlgebra, cap: usize) -> BoundedComplex {
        let mut out = BoundedComplex::zero(alg.quiver_arc(), alg.field());
        for _ in 0..self.rng.gen_range(1..=2) {
            let piece = if self.rng.gen_bool(0.5) {
                BoundedComplex::concentrated(self.module(alg, cap), self.rng.gen_range(-2..=2))
            } else {
                let x = self.module(alg, cap);
                let y = self.module(alg, cap);
                let f = self.morphism(&x, &y).expect("same category");
                BoundedComplex::two_term(x, y, f, self.rng.gen_range(-2..=1)).expect("a morphism is a complex")
            };
            out = out.direct_sum(&piece).expect("same category");
        }
        out
    }
}

/// The submodule of `p` generated by elements `x ∈ p_v`, one basis matrix
/// per vertex.
pub fn generated(alg: &PathAlgebra, p: &Representation, gens: &[(usize, Vector)]) -> Vec<Matrix> {
    let q: Arc<Quiver> = alg.quiver_arc();
    (0..q.vertex_count())
        .map(|w| {
            let columns: Vec<Vector> = gens
                .iter()
                .flat_map(|(v, x)| {
                    alg.block(*v, w)
                        .map(|k| p.path_matrix(alg.basis_path(k)).mul_vec(x))
                        .collect::<Vec<_>>()
                })
                .collect();
            Matrix::from_columns(alg.field(), p.dim(w), &columns)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_quiver() {
        let a = Generator::new(7).ordered_quiver(6, 10);
        let b = Generator::new(7).ordered_quiver(6, 10);
        assert_eq!(a, b);
    }

    #[test]
    fn random_objects_are_well_formed() {
        let mut g = Generator::new(11);
        for _ in 0..20 {
            let alg = g.ordered_algebra(6, 10);
            assert!(alg.dim() <= MAX_ALGEBRA_DIM);
            assert!(alg.require_tensor().is_ok());
            let m = g.module(&alg, 6);
            assert!(m.satisfies(alg.relations()));
            let c = g.complex(&alg, 4);
            assert!(c.satisfies(alg.relations()));
        }
    }
}
