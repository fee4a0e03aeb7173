//! The finite-dimensional algebra `kQ/(R)` of an ordered quiver with relations.
//!
//! Paths compose left to right: `p * q` is "traverse `p`, then `q`" and is
//! zero unless `p` ends where `q` starts. With this convention a
//! representation is a right module, and the projective `M_n = e_n Λ` is
//! spanned by the classes of paths leaving `n`.
//!
//! The relation ideal is computed by saturation: for every generator `r` and
//! every pair of paths `p, q` with `p * r * q` defined, the vector of
//! `p * r * q` in the path basis is added to the span. Acyclicity makes the
//! path set finite, so one pass suffices. Within each block `e_n Λ e_m` the
//! basis is chosen greedily: paths are scanned by length and then by arrow
//! labels, and a path is kept when it is independent of the ideal and the
//! paths kept before it.

use std::collections::{BTreeMap, HashMap};
use std::ops::Range;
use std::sync::Arc;

use super::graph::{Path, Quiver};
use super::intertwine::{intertwiners, Family};
use super::relation::Relation;
use crate::error::{Error, Result, TensorTest};
use crate::linalg::{Field, Matrix, Scalar, SparseEliminator, Vector};

/// Sparse coordinates in the algebra basis.
pub type Coords = Vec<(usize, Scalar)>;

#[derive(Debug, Clone)]
pub struct PathAlgebra {
    quiver: Arc<Quiver>,
    field: Field,
    relations: Vec<Relation>,
    paths: Vec<Path>,
    path_index: HashMap<Path, usize>,
    /// Normal form of each path, indexed like `paths`.
    normal_forms: Vec<Coords>,
    /// Path index of each basis element.
    basis: Vec<usize>,
    basis_block: Vec<(usize, usize)>,
    blocks: HashMap<(usize, usize), Range<usize>>,
    products: HashMap<(usize, usize), Coords>,
}

/// Outcome of the tensor-relations test for one relation set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorCheck {
    pub is_tensor: bool,
    pub witness: Option<TensorWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorWitness {
    pub relation: usize,
    pub display: String,
    pub test: TensorTest,
}

/// A right-module map `M_from -> M_to` between indecomposable projectives,
/// one matrix per vertex `j` (`e_to Λ e_j <- e_from Λ e_j`, block-local
/// coordinates).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleMap {
    pub from: usize,
    pub to: usize,
    pub components: Vec<Matrix>,
}

impl PathAlgebra {
    pub fn build(quiver: Quiver, field: Field, relations: Vec<Relation>) -> Result<PathAlgebra> {
        let paths = quiver.enumerate_paths()?;
        for r in &relations {
            for (c, p) in &r.terms {
                if c.field() != field {
                    return Err(Error::Invalid(format!(
                        "coefficient {c} is not in {field}"
                    )));
                }
                if p.is_trivial() || (p.source, p.target) != (r.source, r.target) {
                    return Err(Error::NotHomogeneous(r.display(&quiver)));
                }
            }
        }
        let path_index: HashMap<Path, usize> =
            paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();

        let mut path_blocks: BTreeMap<(usize, usize), Range<usize>> = BTreeMap::new();
        for (i, p) in paths.iter().enumerate() {
            path_blocks
                .entry((p.source, p.target))
                .and_modify(|r| r.end = i + 1)
                .or_insert(i..i + 1);
        }

        // ideal vectors p * r * q, keyed by block, in block-local coordinates
        let mut ideal: HashMap<(usize, usize), Vec<Coords>> = HashMap::new();
        for r in relations.iter().filter(|r| !r.is_zero()) {
            let lefts = paths.iter().filter(|p| p.target == r.source);
            for left in lefts {
                for right in paths.iter().filter(|q| q.source == r.target) {
                    let block = (left.source, right.target);
                    let base = path_blocks[&block].start;
                    let v: Coords = r
                        .terms
                        .iter()
                        .map(|(c, p)| {
                            let full = left.then(p).and_then(|x| x.then(right)).expect("composable");
                            (path_index[&full] - base, c.clone())
                        })
                        .collect();
                    ideal.entry(block).or_default().push(v);
                }
            }
        }

        let mut normal_forms: Vec<Coords> = vec![Vec::new(); paths.len()];
        let mut basis = Vec::new();
        let mut basis_block = Vec::new();
        let mut blocks = HashMap::new();
        for (&block, range) in &path_blocks {
            let n = range.len();
            let mut elim = SparseEliminator::new(field, n);
            let mut ideal_rows: Vec<Vector> = Vec::new();
            for v in ideal.remove(&block).unwrap_or_default() {
                if elim.push(v.iter().cloned()) {
                    let mut dense = vec![field.zero(); n];
                    for (i, c) in v {
                        dense[i] += &c;
                    }
                    ideal_rows.push(dense);
                }
            }
            let kept: Vec<usize> = (0..n)
                .filter(|&j| elim.push([(j, field.one())]))
                .collect();
            debug_assert_eq!(kept.len() + ideal_rows.len(), n);

            let start = basis.len();
            for &j in &kept {
                basis.push(range.start + j);
                basis_block.push(block);
            }
            blocks.insert(block, start..basis.len());

            // columns: kept unit vectors, then ideal vectors; invertible
            let mut columns: Vec<Vector> = kept
                .iter()
                .map(|&j| {
                    let mut e = vec![field.zero(); n];
                    e[j] = field.one();
                    e
                })
                .collect();
            columns.extend(ideal_rows);
            let inv = Matrix::from_columns(field, n, &columns)
                .inverse()
                .expect("kept paths complement the ideal");
            for j in 0..n {
                normal_forms[range.start + j] = (0..kept.len())
                    .filter(|&i| !inv[(i, j)].is_zero())
                    .map(|i| (start + i, inv[(i, j)].clone()))
                    .collect();
            }
        }

        let mut alg = PathAlgebra {
            quiver: Arc::new(quiver),
            field,
            relations,
            paths,
            path_index,
            normal_forms,
            basis,
            basis_block,
            blocks,
            products: HashMap::new(),
        };
        alg.products = alg.tabulate_products();
        Ok(alg)
    }

    fn tabulate_products(&self) -> HashMap<(usize, usize), Coords> {
        let mut out = HashMap::new();
        for (i, &pi) in self.basis.iter().enumerate() {
            let p = &self.paths[pi];
            let Some(right) = self.blocks_from(p.target) else {
                continue;
            };
            for j in right {
                let q = &self.paths[self.basis[j]];
                if let Some(pq) = p.then(q) {
                    out.insert((i, j), self.normal_forms[self.path_index[&pq]].clone());
                }
            }
        }
        out
    }

    /// Basis indices of every element starting at `v` (contiguous because
    /// the basis is sorted by source first).
    fn blocks_from(&self, v: usize) -> Option<Range<usize>> {
        let mut it = self
            .basis_block
            .iter()
            .enumerate()
            .filter(|(_, (s, _))| *s == v)
            .map(|(i, _)| i);
        let first = it.next()?;
        let last = it.next_back().unwrap_or(first);
        Some(first..last + 1)
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

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn basis_path(&self, i: usize) -> &Path {
        &self.paths[self.basis[i]]
    }

    pub fn basis_word(&self, i: usize) -> String {
        self.quiver.path_word(self.basis_path(i))
    }

    /// `(source, target)` of basis element `i`.
    pub fn basis_block(&self, i: usize) -> (usize, usize) {
        self.basis_block[i]
    }

    /// Basis indices spanning `e_n Λ e_m`.
    pub fn block(&self, n: usize, m: usize) -> Range<usize> {
        self.blocks.get(&(n, m)).cloned().unwrap_or(0..0)
    }

    pub fn block_dim(&self, n: usize, m: usize) -> usize {
        self.block(n, m).len()
    }

    pub fn zero(&self) -> Vector {
        vec![self.field.zero(); self.dim()]
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        let mut v = self.zero();
        v[i] = self.field.one();
        v
    }

    /// Basis index of the trivial path `e_n` (always a basis element).
    pub fn idempotent_index(&self, n: usize) -> usize {
        self.block(n, n).start
    }

    pub fn idempotent(&self, n: usize) -> Vector {
        self.basis_vector(self.idempotent_index(n))
    }

    pub fn one(&self) -> Vector {
        let mut v = self.zero();
        for n in 0..self.quiver.vertex_count() {
            v[self.idempotent_index(n)] = self.field.one();
        }
        v
    }

    /// The class of a path in basis coordinates.
    pub fn path_element(&self, p: &Path) -> Vector {
        let mut v = self.zero();
        if let Some(&i) = self.path_index.get(p) {
            for (k, c) in &self.normal_forms[i] {
                v[*k] = c.clone();
            }
        }
        v
    }

    pub fn relation_element(&self, r: &Relation) -> Vector {
        let mut v = self.zero();
        for (c, p) in &r.terms {
            for (k, x) in self.path_element(p).iter().enumerate() {
                if !x.is_zero() {
                    v[k] += &(c * x);
                }
            }
        }
        v
    }

    /// Structure constants of `b_i * b_j`; empty when the product vanishes.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        self.products.get(&(i, j)).map_or(&[], Vec::as_slice)
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = self.zero();
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (k, c) in self.product(i, j) {
                    out[*k] += &(&ab * c);
                }
            }
        }
        out
    }

    /// Dense structure-constant table: entry `[i][j]` is `b_i * b_j`.
    pub fn structure_table(&self) -> Vec<Vec<Vector>> {
        (0..self.dim())
            .map(|i| {
                (0..self.dim())
                    .map(|j| self.mul(&self.basis_vector(i), &self.basis_vector(j)))
                    .collect()
            })
            .collect()
    }

    /// Multiplication table of `Λ/J` in the basis of idempotent classes:
    /// entry `[n][m]` is the coefficient vector of `ē_n ē_m` over the `ē`.
    pub fn semisimple_quotient_table(&self) -> Vec<Vec<Vector>> {
        let n = self.quiver.vertex_count();
        let trivial: Vec<usize> = (0..n).map(|v| self.idempotent_index(v)).collect();
        (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        let prod = self.mul(&self.idempotent(a), &self.idempotent(b));
                        trivial.iter().map(|&t| prod[t].clone()).collect()
                    })
                    .collect()
            })
            .collect()
    }

    /// Decides whether the relations are tensor relations: every generator
    /// `r = Σ λ_i p_i` must satisfy `Σ λ_i = 0` (the unit representation
    /// kills it) and `Σ λ_i p_i ⊗ p_i = 0` in `Λ ⊗ Λ`.
    ///
    /// Why the second test is the right one: the diagonal `p -> p ⊗ p` is
    /// multiplicative on paths, so the representation `V ⊗ W` is obtained by
    /// pulling back the `kQ ⊗ kQ`-module `V ⊠ W` along it. If every
    /// generator maps into the ideal `(R) ⊗ kQ + kQ ⊗ (R)`, which is the kernel of
    /// `kQ ⊗ kQ -> Λ ⊗ Λ`, then so does the whole ideal, and `V ⊗ W`
    /// satisfies `R` whenever `V` and `W` do. Conversely, taking `V = W = Λ`
    /// (the regular module) and evaluating at `e_s ⊗ e_s` recovers the class
    /// of `Σ λ_i p_i ⊗ p_i`, so the test is necessary.
    pub fn tensor_check(&self) -> TensorCheck {
        for (idx, r) in self.relations.iter().enumerate() {
            let fail = |test| TensorCheck {
                is_tensor: false,
                witness: Some(TensorWitness {
                    relation: idx,
                    display: r.display(&self.quiver),
                    test,
                }),
            };
            if !r.coefficient_sum(self.field).is_zero() {
                return fail(TensorTest::Unit);
            }
            let mut diag: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
            for (c, p) in &r.terms {
                let v = self.path_element(p);
                let nz: Vec<(usize, &Scalar)> =
                    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
                for &(i, x) in &nz {
                    for &(j, y) in &nz {
                        let slot = diag.entry((i, j)).or_insert_with(|| self.field.zero());
                        *slot += &(&(c * x) * y);
                    }
                }
            }
            if diag.values().any(|x| !x.is_zero()) {
                return fail(TensorTest::Diagonal);
            }
        }
        TensorCheck {
            is_tensor: true,
            witness: None,
        }
    }

    /// [`PathAlgebra::tensor_check`] as a `Result`.
    pub fn require_tensor(&self) -> Result<()> {
        match self.tensor_check().witness {
            None => Ok(()),
            Some(w) => Err(Error::NotTensor {
                generator: w.display,
                test: w.test,
            }),
        }
    }

    /// Matrix of `x -> x * a` from `e_n Λ e_s` to `e_n Λ e_t` for an arrow
    /// `a: s -> t`, in block-local coordinates.
    pub fn right_action(&self, n: usize, arrow: usize) -> Matrix {
        let a = self.quiver.arrow(arrow);
        let src = self.block(n, a.source);
        let dst = self.block(n, a.target);
        let step = Path {
            source: a.source,
            target: a.target,
            arrows: vec![arrow],
        };
        let mut m = Matrix::zeros(self.field, dst.len(), src.len());
        for (col, b) in src.clone().enumerate() {
            let path = self.basis_path(b).then(&step).expect("composable");
            for (k, c) in &self.normal_forms[self.path_index[&path]] {
                m[(k - dst.start, col)] = c.clone();
            }
        }
        m
    }

    /// The projective `M_n = e_n Λ` as a quiver-shaped family: the space at
    /// vertex `j` is `e_n Λ e_j`, arrows act by right multiplication.
    pub fn projective(&self, n: usize) -> (Vec<usize>, Vec<Matrix>) {
        let dims = (0..self.quiver.vertex_count())
            .map(|j| self.block_dim(n, j))
            .collect();
        let maps = (0..self.quiver.arrow_count())
            .map(|a| self.right_action(n, a))
            .collect();
        (dims, maps)
    }

    /// Basis of `Hom_Λ(M_m, M_n)`, found by solving for all vertex-graded
    /// linear maps that commute with right multiplication by every arrow
    /// (the idempotents and arrows generate Λ, so this is the full module
    /// condition).
    pub fn module_hom_space(&self, n: usize, m: usize) -> Vec<ModuleMap> {
        let (dims_m, maps_m) = self.projective(m);
        let (dims_n, maps_n) = self.projective(n);
        let arrows: Vec<(usize, usize)> = self
            .quiver
            .arrows()
            .iter()
            .map(|a| (a.source, a.target))
            .collect();
        intertwiners(
            self.field,
            &arrows,
            Family {
                dims: &dims_m,
                maps: &maps_m,
            },
            Family {
                dims: &dims_n,
                maps: &maps_n,
            },
        )
        .into_iter()
        .map(|components| ModuleMap {
            from: m,
            to: n,
            components,
        })
        .collect()
    }

    /// Left multiplication by `p ∈ e_n Λ e_m`, as a module map `M_m -> M_n`.
    pub fn left_multiplication(&self, p: &[Scalar], n: usize, m: usize) -> ModuleMap {
        let components = (0..self.quiver.vertex_count())
            .map(|j| {
                let src = self.block(m, j);
                let dst = self.block(n, j);
                let mut mat = Matrix::zeros(self.field, dst.len(), src.len());
                for (col, b) in src.enumerate() {
                    let prod = self.mul(p, &self.basis_vector(b));
                    for (row, k) in dst.clone().enumerate() {
                        mat[(row, col)] = prod[k].clone();
                    }
                }
                mat
            })
            .collect();
        ModuleMap {
            from: m,
            to: n,
            components,
        }
    }

    /// Embeds block-local coordinates of `e_n Λ e_m` into the full basis.
    pub fn embed_block(&self, n: usize, m: usize, local: &[Scalar]) -> Vector {
        let range = self.block(n, m);
        assert_eq!(local.len(), range.len(), "block coordinate length");
        let mut v = self.zero();
        for (k, x) in range.zip(local) {
            v[k] = x.clone();
        }
        v
    }

    /// Restricts full coordinates to block `(n, m)`.
    pub fn block_coords(&self, n: usize, m: usize, v: &[Scalar]) -> Vector {
        v[self.block(n, m)].to_vec()
    }
}

impl ModuleMap {
    /// `f(e_from)`, an element of `e_to Λ e_from` in block-local coordinates.
    pub fn at_idempotent(&self, alg: &PathAlgebra) -> Vector {
        let e = vec![alg.field.one()];
        debug_assert_eq!(alg.block_dim(self.from, self.from), 1);
        self.components[self.from].mul_vec(&e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn kronecker(i: usize) -> Quiver {
        let arrows: Vec<(String, String, String)> = (0..i)
            .map(|k| (format!("a{k}"), "1".into(), "2".into()))
            .collect();
        Quiver::new(["1", "2"], arrows).unwrap()
    }

    fn square() -> (Quiver, Vec<Relation>) {
        let q = Quiver::build(
            &["1", "2", "3", "4"],
            &[("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")],
        )
        .unwrap();
        let r = Relation::from_words(&q, Q, &[(1, &["a", "b"]), (-1, &["c", "d"])]).unwrap();
        (q, vec![r])
    }

    #[test]
    fn kronecker_dimensions() {
        let alg = PathAlgebra::build(kronecker(2), Q, vec![]).unwrap();
        assert_eq!(alg.dim(), 4);
        assert_eq!(alg.block_dim(0, 1), 2);
        assert_eq!(alg.block_dim(1, 0), 0);
    }

    #[test]
    fn one_vertex_is_the_field() {
        let q = Quiver::build(&["v"], &[]).unwrap();
        let alg = PathAlgebra::build(q, Q, vec![]).unwrap();
        assert_eq!(alg.dim(), 1);
        assert_eq!(alg.mul(&alg.one(), &alg.one()), alg.one());
    }

    #[test]
    fn square_relation_identifies_paths() {
        let (q, rels) = square();
        let alg = PathAlgebra::build(q.clone(), Q, rels.clone()).unwrap();
        assert_eq!(alg.block_dim(0, 3), 1);
        assert_eq!(alg.dim(), 4 + 4 + 1);
        assert!(alg.relation_element(&rels[0]).iter().all(Scalar::is_zero));
        // greedy basis keeps a*b (earlier label) over c*d
        assert_eq!(alg.basis_word(alg.block(0, 3).start), "a*b");
        let ab = alg.path_element(&q.path_from_labels(&["a", "b"]).unwrap());
        let cd = alg.path_element(&q.path_from_labels(&["c", "d"]).unwrap());
        assert_eq!(ab, cd);
    }

    #[test]
    fn idempotents_are_orthogonal_and_sum_to_one() {
        let (q, rels) = square();
        let alg = PathAlgebra::build(q, Q, rels).unwrap();
        let n = alg.quiver().vertex_count();
        let mut sum = alg.zero();
        for a in 0..n {
            for b in 0..n {
                let prod = alg.mul(&alg.idempotent(a), &alg.idempotent(b));
                let expect = if a == b { alg.idempotent(a) } else { alg.zero() };
                assert_eq!(prod, expect);
            }
            for (s, x) in sum.iter_mut().zip(alg.idempotent(a)) {
                *s += &x;
            }
        }
        assert_eq!(sum, alg.one());
        for i in 0..alg.dim() {
            let b = alg.basis_vector(i);
            assert_eq!(alg.mul(&alg.one(), &b), b);
            assert_eq!(alg.mul(&b, &alg.one()), b);
        }
    }

    #[test]
    fn tensor_check_examples() {
        let (q, rels) = square();
        assert!(PathAlgebra::build(q, Q, rels).unwrap().tensor_check().is_tensor);

        let k = kronecker(2);
        let r = Relation::from_words(&k, Q, &[(1, &["a0"]), (-1, &["a1"])]).unwrap();
        assert!(PathAlgebra::build(k, Q, vec![r]).unwrap().tensor_check().is_tensor);

        let p = Quiver::build(&["1", "2", "4"], &[("a", "1", "2"), ("b", "2", "4")]).unwrap();
        let r = Relation::from_words(&p, Q, &[(1, &["a", "b"])]).unwrap();
        let alg = PathAlgebra::build(p, Q, vec![r]).unwrap();
        let check = alg.tensor_check();
        assert!(!check.is_tensor);
        assert_eq!(check.witness.unwrap().test, TensorTest::Unit);
        assert!(matches!(alg.require_tensor(), Err(Error::NotTensor { .. })));
    }

    #[test]
    fn diagonal_test_catches_zero_sum_non_tensor() {
        // a*b - 2 c*d + e*f on three parallel length-two routes sums to 0 but
        // does not survive the diagonal.
        let q = Quiver::build(
            &["1", "2", "3", "4", "5"],
            &[
                ("a", "1", "2"),
                ("b", "2", "5"),
                ("c", "1", "3"),
                ("d", "3", "5"),
                ("e", "1", "4"),
                ("f", "4", "5"),
            ],
        )
        .unwrap();
        let r = Relation::from_words(&q, Q, &[(1, &["a", "b"]), (-2, &["c", "d"]), (1, &["e", "f"])])
            .unwrap();
        let check = PathAlgebra::build(q, Q, vec![r]).unwrap().tensor_check();
        assert!(!check.is_tensor);
        assert_eq!(check.witness.unwrap().test, TensorTest::Diagonal);
    }

    #[test]
    fn module_homs_match_blocks() {
        let alg = PathAlgebra::build(kronecker(2), Q, vec![]).unwrap();
        assert_eq!(alg.module_hom_space(0, 1).len(), 2);
        assert_eq!(alg.module_hom_space(1, 0).len(), 0);
        assert_eq!(alg.module_hom_space(0, 0).len(), 1);
    }

    #[test]
    fn semisimple_quotient_is_diagonal() {
        let (q, rels) = square();
        let alg = PathAlgebra::build(q, Q, rels).unwrap();
        let t = alg.semisimple_quotient_table();
        for (a, row) in t.iter().enumerate() {
            for (b, v) in row.iter().enumerate() {
                for (c, x) in v.iter().enumerate() {
                    assert_eq!(x.is_one(), a == b && b == c);
                    assert!(x.is_zero() || x.is_one());
                }
            }
        }
    }

    #[test]
    fn rejects_cycles() {
        let q = Quiver::build(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).unwrap();
        assert!(matches!(
            PathAlgebra::build(q, Q, vec![]),
            Err(Error::NotOrdered { .. })
        ));
    }
}
