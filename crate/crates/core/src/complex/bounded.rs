use std::collections::{BTreeMap, BTreeSet};
use std::ops::RangeInclusive;
use std::sync::Arc;

use super::cohomology::StrandCohomology;
use super::graded::GradedDims;
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};
use crate::quiver::{Quiver, Relation};
use crate::rep::{RepMorphism, Representation};

/// A bounded cochain complex of representations,
/// `term^i --d^i--> term^{i+1}`, stored from degree `start` on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedComplex {
    quiver: Arc<Quiver>,
    field: Field,
    start: i32,
    terms: Vec<Representation>,
    differentials: Vec<RepMorphism>,
}

impl BoundedComplex {
    /// `terms[k]` sits in degree `start + k`; `differentials[k]` maps
    /// `terms[k]` to `terms[k + 1]`. Checks shapes, naturality and `d∘d = 0`.
    pub fn new(
        quiver: Arc<Quiver>,
        field: Field,
        start: i32,
        terms: Vec<Representation>,
        differentials: Vec<RepMorphism>,
    ) -> Result<BoundedComplex> {
        if differentials.len() != terms.len().saturating_sub(1) {
            return Err(Error::DimensionMismatch(format!(
                "{} terms need {} differentials, got {}",
                terms.len(),
                terms.len().saturating_sub(1),
                differentials.len()
            )));
        }
        let probe = Representation::zero(Arc::clone(&quiver), field);
        if terms.iter().any(|t| !t.same_category(&probe)) {
            return Err(Error::QuiverMismatch);
        }
        for (k, d) in differentials.iter().enumerate() {
            if !d.is_morphism(&terms[k], &terms[k + 1]) {
                return Err(Error::Invalid(format!(
                    "d^{} is not a morphism of representations",
                    start + k as i32
                )));
            }
        }
        for (k, pair) in differentials.windows(2).enumerate() {
            if !pair[1].after(&pair[0]).is_zero() {
                return Err(Error::NotComplex(start + k as i32));
            }
        }
        Ok(BoundedComplex {
            quiver,
            field,
            start,
            terms,
            differentials,
        })
    }

    /// Builds from sparse degree maps; missing terms are zero and missing
    /// differentials are zero maps.
    pub fn from_degrees(
        quiver: Arc<Quiver>,
        field: Field,
        terms: BTreeMap<i32, Representation>,
        differentials: BTreeMap<i32, RepMorphism>,
    ) -> Result<BoundedComplex> {
        let (Some(&lo), Some(&hi)) = (terms.keys().next(), terms.keys().next_back()) else {
            if differentials.is_empty() {
                return Ok(BoundedComplex::zero(quiver, field));
            }
            return Err(Error::Invalid("differentials given without terms".into()));
        };
        if let Some(&i) = differentials.keys().find(|&&i| i < lo || i >= hi) {
            return Err(Error::Invalid(format!("d^{i} has no source or target term")));
        }
        let zero = Representation::zero(Arc::clone(&quiver), field);
        let full: Vec<Representation> = (lo..=hi)
            .map(|i| terms.get(&i).cloned().unwrap_or_else(|| zero.clone()))
            .collect();
        let diffs = (lo..hi)
            .map(|i| {
                let k = (i - lo) as usize;
                differentials
                    .get(&i)
                    .cloned()
                    .unwrap_or_else(|| RepMorphism::zero(&full[k], &full[k + 1]))
            })
            .collect();
        BoundedComplex::new(quiver, field, lo, full, diffs)
    }

    pub fn zero(quiver: Arc<Quiver>, field: Field) -> BoundedComplex {
        BoundedComplex {
            quiver,
            field,
            start: 0,
            terms: Vec::new(),
            differentials: Vec::new(),
        }
    }

    /// `v` placed in a single degree.
    pub fn concentrated(v: Representation, degree: i32) -> BoundedComplex {
        BoundedComplex {
            quiver: v.quiver_arc(),
            field: v.field(),
            start: degree,
            terms: vec![v],
            differentials: Vec::new(),
        }
    }

    /// `source --f--> target` with `source` in `degree`.
    pub fn two_term(
        source: Representation,
        target: Representation,
        f: RepMorphism,
        degree: i32,
    ) -> Result<BoundedComplex> {
        BoundedComplex::new(source.quiver_arc(), source.field(), degree, vec![source, target], vec![f])
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

    /// Degrees with stored terms; empty for the zero complex.
    pub fn degrees(&self) -> RangeInclusive<i32> {
        self.start..=self.start + self.terms.len() as i32 - 1
    }

    fn index(&self, i: i32) -> Option<usize> {
        self.degrees().contains(&i).then(|| (i - self.start) as usize)
    }

    pub fn term(&self, i: i32) -> Option<&Representation> {
        self.index(i).map(|k| &self.terms[k])
    }

    /// The term in degree `i`, zero outside the stored range.
    pub fn term_or_zero(&self, i: i32) -> Representation {
        self.term(i)
            .cloned()
            .unwrap_or_else(|| Representation::zero(self.quiver_arc(), self.field))
    }

    pub fn differential(&self, i: i32) -> Option<&RepMorphism> {
        self.index(i).and_then(|k| self.differentials.get(k))
    }

    pub fn dim_at(&self, i: i32, v: usize) -> usize {
        self.term(i).map_or(0, |t| t.dim(v))
    }

    /// `d^i` at vertex `v`, as a `dim_at(i+1, v) x dim_at(i, v)` matrix.
    pub fn diff_at(&self, i: i32, v: usize) -> Matrix {
        match self.differential(i) {
            Some(d) => d.components[v].clone(),
            None => Matrix::zeros(self.field, self.dim_at(i + 1, v), self.dim_at(i, v)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(Representation::is_zero)
    }

    /// Drops zero terms at both ends.
    pub fn trimmed(&self) -> BoundedComplex {
        let Some(first) = self.terms.iter().position(|t| !t.is_zero()) else {
            return BoundedComplex::zero(self.quiver_arc(), self.field);
        };
        let last = self.terms.iter().rposition(|t| !t.is_zero()).unwrap_or(first);
        BoundedComplex {
            quiver: self.quiver_arc(),
            field: self.field,
            start: self.start + first as i32,
            terms: self.terms[first..=last].to_vec(),
            differentials: self.differentials[first..last].to_vec(),
        }
    }

    pub fn satisfies(&self, relations: &[Relation]) -> bool {
        self.terms.iter().all(|t| t.satisfies(relations))
    }

    pub fn strand_cohomology(&self, v: usize, i: i32) -> StrandCohomology {
        StrandCohomology::compute(self.dim_at(i, v), &self.diff_at(i - 1, v), &self.diff_at(i, v))
    }

    /// `H(V)_n`: graded dimensions of the cohomology of the strand at `n`.
    pub fn cohomology_at(&self, n: usize) -> GradedDims {
        let mut out = GradedDims::new();
        for i in self.degrees() {
            let ambient = self.dim_at(i, n);
            if ambient == 0 {
                continue;
            }
            let dim = ambient - self.diff_at(i, n).rank() - self.diff_at(i - 1, n).rank();
            out.set(i, dim);
        }
        out
    }

    /// `F_n(V) = RHom(M_n, V)`. Since `M_n` is projective this is the
    /// cohomology of the strand at `n`.
    pub fn eval_f(&self, n: usize) -> GradedDims {
        self.cohomology_at(n)
    }

    /// Vertices with nonzero cohomology in some degree.
    pub fn support(&self) -> BTreeSet<usize> {
        (0..self.quiver.vertex_count())
            .filter(|&n| !self.cohomology_at(n).is_zero())
            .collect()
    }

    pub fn is_acyclic(&self) -> bool {
        self.support().is_empty()
    }

    fn require_same(&self, other: &BoundedComplex) -> Result<()> {
        let same = self.field == other.field
            && (Arc::ptr_eq(&self.quiver, &other.quiver) || self.quiver == other.quiver);
        if same {
            Ok(())
        } else {
            Err(Error::QuiverMismatch)
        }
    }

    /// Builds a complex over `lo..=hi` from term and per-vertex differential
    /// constructors, then certifies it.
    fn assemble(
        &self,
        lo: i32,
        hi: i32,
        term: impl Fn(i32) -> Representation,
        diff: impl Fn(i32, usize) -> Matrix,
    ) -> Result<BoundedComplex> {
        if hi < lo {
            return Ok(BoundedComplex::zero(self.quiver_arc(), self.field));
        }
        let terms: Vec<Representation> = (lo..=hi).map(term).collect();
        let differentials = (lo..hi)
            .map(|i| RepMorphism {
                components: (0..self.quiver.vertex_count()).map(|v| diff(i, v)).collect(),
            })
            .collect();
        BoundedComplex::new(self.quiver_arc(), self.field, lo, terms, differentials)
    }

    /// Total tensor complex with `d(x⊗y) = dx⊗y + (-1)^{|x|} x⊗dy`. The
    /// summands of `(V⊗W)^k` are ordered by increasing degree of `V`.
    pub fn tensor(&self, other: &BoundedComplex) -> Result<BoundedComplex> {
        self.require_same(other)?;
        if self.terms.is_empty() || other.terms.is_empty() {
            return Ok(BoundedComplex::zero(self.quiver_arc(), self.field));
        }
        let (a, b) = (self.degrees(), other.degrees());
        let pairs = |k: i32| -> Vec<(i32, i32)> {
            a.clone()
                .filter(|i| b.contains(&(k - i)))
                .map(|i| (i, k - i))
                .collect()
        };
        // offset of summand (i, j) inside (V⊗W)^{i+j} at vertex v
        let offset = |i: i32, j: i32, v: usize| -> usize {
            pairs(i + j)
                .into_iter()
                .take_while(|&(p, _)| p < i)
                .map(|(p, q)| self.dim_at(p, v) * other.dim_at(q, v))
                .sum()
        };
        let dim = |k: i32, v: usize| -> usize {
            pairs(k)
                .into_iter()
                .map(|(p, q)| self.dim_at(p, v) * other.dim_at(q, v))
                .sum()
        };
        let field = self.field;
        self.assemble(
            a.start() + b.start(),
            a.end() + b.end(),
            |k| {
                pairs(k)
                    .into_iter()
                    .map(|(i, j)| {
                        self.term_or_zero(i)
                            .tensor(&other.term_or_zero(j))
                            .expect("same quiver")
                    })
                    .reduce(|x, y| x.direct_sum(&y).expect("same quiver"))
                    .expect("nonempty")
            },
            |k, v| {
                let mut m = Matrix::zeros(field, dim(k + 1, v), dim(k, v));
                for (i, j) in pairs(k) {
                    let (dv, dw) = (self.dim_at(i, v), other.dim_at(j, v));
                    if dv * dw == 0 {
                        continue;
                    }
                    let col = offset(i, j, v);
                    if a.contains(&(i + 1)) {
                        let block = self.diff_at(i, v).kronecker(&Matrix::identity(field, dw));
                        m.set_block(offset(i + 1, j, v), col, &block);
                    }
                    if b.contains(&(j + 1)) {
                        let mut block = Matrix::identity(field, dv).kronecker(&other.diff_at(j, v));
                        if i.rem_euclid(2) == 1 {
                            block = block.neg();
                        }
                        m.set_block(offset(i, j + 1, v), col, &block);
                    }
                }
                m
            },
        )
    }

    /// `V[j]`: `V[j]^i = V^{i+j}`, differentials multiplied by `(-1)^j`.
    pub fn shift(&self, j: i32) -> BoundedComplex {
        let sign = self.field.from_i64(if j.rem_euclid(2) == 0 { 1 } else { -1 });
        BoundedComplex {
            quiver: self.quiver_arc(),
            field: self.field,
            start: self.start - j,
            terms: self.terms.clone(),
            differentials: self.differentials.iter().map(|d| d.scale(&sign)).collect(),
        }
    }

    /// Degreewise direct sum.
    pub fn direct_sum(&self, other: &BoundedComplex) -> Result<BoundedComplex> {
        self.require_same(other)?;
        let (lo, hi) = span(&[self, other], 0);
        self.assemble(
            lo,
            hi,
            |i| self.term_or_zero(i).direct_sum(&other.term_or_zero(i)).expect("same quiver"),
            |i, v| self.diff_at(i, v).block_diag(&other.diff_at(i, v)),
        )
    }

    /// Mapping cone of `f: source -> target`: `term^i = source^{i+1} ⊕ target^i`
    /// with `d(x, y) = (-d x, f x + d y)`.
    pub fn cone(f: &ChainMap, source: &BoundedComplex, target: &BoundedComplex) -> Result<BoundedComplex> {
        source.require_same(target)?;
        f.check(source, target)?;
        let (lo, hi) = match (source.terms.is_empty(), target.terms.is_empty()) {
            (true, true) => (0, -1),
            (false, true) => (source.degrees().start() - 1, source.degrees().end() - 1),
            (true, false) => (*target.degrees().start(), *target.degrees().end()),
            (false, false) => (
                (source.degrees().start() - 1).min(*target.degrees().start()),
                (source.degrees().end() - 1).max(*target.degrees().end()),
            ),
        };
        let field = source.field;
        source.assemble(
            lo,
            hi,
            |i| {
                source
                    .term_or_zero(i + 1)
                    .direct_sum(&target.term_or_zero(i))
                    .expect("same quiver")
            },
            |i, v| {
                let (s0, s1) = (source.dim_at(i + 1, v), source.dim_at(i + 2, v));
                let (t0, t1) = (target.dim_at(i, v), target.dim_at(i + 1, v));
                let mut m = Matrix::zeros(field, s1 + t1, s0 + t0);
                m.set_block(0, 0, &source.diff_at(i + 1, v).neg());
                m.set_block(s1, 0, &f.component_at(i + 1, v, source, target));
                m.set_block(s1, s0, &target.diff_at(i, v));
                m
            },
        )
    }
}

fn span(cs: &[&BoundedComplex], pad: i32) -> (i32, i32) {
    let nonempty: Vec<_> = cs.iter().filter(|c| !c.terms.is_empty()).collect();
    if nonempty.is_empty() {
        return (0, -1);
    }
    let lo = nonempty.iter().map(|c| *c.degrees().start()).min().unwrap_or(0);
    let hi = nonempty.iter().map(|c| *c.degrees().end()).max().unwrap_or(-1);
    (lo - pad, hi + pad)
}

/// A chain map, one representation morphism per degree; absent degrees are
/// zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ChainMap {
    pub components: BTreeMap<i32, RepMorphism>,
}

impl ChainMap {
    pub fn new(components: BTreeMap<i32, RepMorphism>) -> ChainMap {
        ChainMap { components }
    }

    pub fn identity(c: &BoundedComplex) -> ChainMap {
        ChainMap {
            components: c
                .degrees()
                .zip(&c.terms)
                .map(|(i, t)| (i, RepMorphism::identity(t)))
                .collect(),
        }
    }

    /// Component in degree `i` at vertex `v`, zero when absent.
    pub fn component_at(&self, i: i32, v: usize, source: &BoundedComplex, target: &BoundedComplex) -> Matrix {
        match self.components.get(&i) {
            Some(f) => f.components[v].clone(),
            None => Matrix::zeros(source.field, target.dim_at(i, v), source.dim_at(i, v)),
        }
    }

    /// Each component is a morphism and `d f = f d` in every degree.
    pub fn check(&self, source: &BoundedComplex, target: &BoundedComplex) -> Result<()> {
        source.require_same(target)?;
        for (&i, f) in &self.components {
            if !f.is_morphism(&source.term_or_zero(i), &target.term_or_zero(i)) {
                return Err(Error::NotChainMap(i));
            }
        }
        let (lo, hi) = span(&[source, target], 1);
        for i in lo..=hi {
            for v in 0..source.quiver.vertex_count() {
                let left = target.diff_at(i, v).mul(&self.component_at(i, v, source, target));
                let right = self.component_at(i + 1, v, source, target).mul(&source.diff_at(i, v));
                if left != right {
                    return Err(Error::NotChainMap(i));
                }
            }
        }
        Ok(())
    }

    /// `self ∘ first`, where `first: a -> b` and `self: b -> c`.
    pub fn after(&self, first: &ChainMap) -> ChainMap {
        ChainMap {
            components: self
                .components
                .iter()
                .filter_map(|(i, g)| first.components.get(i).map(|f| (*i, g.after(f))))
                .collect(),
        }
    }

    /// Matrix of `H^i(f)_v` in the chosen cohomology bases.
    pub fn induced_at(&self, source: &BoundedComplex, target: &BoundedComplex, v: usize, i: i32) -> Matrix {
        let hs = source.strand_cohomology(v, i);
        let ht = target.strand_cohomology(v, i);
        let images = self
            .component_at(i, v, source, target)
            .mul(&hs.representatives);
        ht.classes(&images).expect("chain maps send cycles to cycles")
    }

    /// Induces isomorphisms on the cohomology of every vertex strand.
    pub fn is_quasi_iso(&self, source: &BoundedComplex, target: &BoundedComplex) -> bool {
        let (lo, hi) = span(&[source, target], 0);
        (lo..=hi).all(|i| {
            (0..source.quiver.vertex_count()).all(|v| {
                let m = self.induced_at(source, target, v, i);
                m.rows() == m.cols() && m.rank() == m.rows()
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::hom_space;

    const Q: Field = Field::Rational;

    fn a2() -> Arc<Quiver> {
        Arc::new(Quiver::build(&["1", "2"], &[("a", "1", "2")]).unwrap())
    }

    fn unit(q: &Arc<Quiver>) -> BoundedComplex {
        BoundedComplex::concentrated(Representation::unit(q.clone(), Q), 0)
    }

    #[test]
    fn unit_cohomology_and_support() {
        let q = a2();
        let u = unit(&q);
        for n in 0..2 {
            assert_eq!(u.cohomology_at(n), GradedDims::unit());
        }
        assert_eq!(u.support(), BTreeSet::from([0, 1]));
        let s = BoundedComplex::concentrated(Representation::simple(q, Q, 1).unwrap(), 0);
        assert_eq!(s.support(), BTreeSet::from([1]));
    }

    #[test]
    fn zero_map_between_simples() {
        let q = a2();
        let s = Representation::simple(q, Q, 0).unwrap();
        let c = BoundedComplex::two_term(s.clone(), s.clone(), RepMorphism::zero(&s, &s), 0).unwrap();
        let h = c.cohomology_at(0);
        assert_eq!((h.get(0), h.get(1)), (1, 1));
        assert!(c.cohomology_at(1).is_zero());
    }

    #[test]
    fn cone_of_identity_is_acyclic() {
        let q = a2();
        let u = unit(&q);
        let c = BoundedComplex::cone(&ChainMap::identity(&u), &u, &u).unwrap();
        assert_eq!(c.degrees(), -1..=0);
        assert!(c.is_acyclic());
    }

    #[test]
    fn non_chain_map_rejected() {
        let q = a2();
        let u = Representation::unit(q.clone(), Q);
        let c = BoundedComplex::two_term(u.clone(), u.clone(), RepMorphism::identity(&u), 0).unwrap();
        // identity in degree 0 only does not commute with d
        let f = ChainMap::new(BTreeMap::from([(0, RepMorphism::identity(&u))]));
        assert!(matches!(BoundedComplex::cone(&f, &c, &c), Err(Error::NotChainMap(_))));
    }

    #[test]
    fn d_squared_checked() {
        let q = a2();
        let u = Representation::unit(q.clone(), Q);
        let id = RepMorphism::identity(&u);
        let r = BoundedComplex::new(q, Q, 0, vec![u.clone(), u.clone(), u], vec![id.clone(), id]);
        assert!(matches!(r, Err(Error::NotComplex(0))));
    }

    #[test]
    fn shift_reindexes() {
        let q = a2();
        let s = Representation::simple(q, Q, 0).unwrap();
        let c = BoundedComplex::two_term(s.clone(), s.clone(), RepMorphism::zero(&s, &s), 2).unwrap();
        let sh = c.shift(1);
        assert_eq!(sh.cohomology_at(0), c.cohomology_at(0).shift(1));
        assert_eq!(sh.cohomology_at(0).get(1), 1);
    }

    #[test]
    fn tensor_with_unit_preserves_cohomology() {
        let q = a2();
        let u = Representation::unit(q.clone(), Q);
        let s0 = Representation::simple(q.clone(), Q, 0).unwrap();
        let f = hom_space(&u, &s0).unwrap().remove(0);
        let c = BoundedComplex::two_term(u, s0, f, -1).unwrap();
        let t = c.tensor(&unit(&q)).unwrap();
        assert_eq!(t.terms, c.terms);
        for n in 0..2 {
            assert_eq!(t.cohomology_at(n), c.cohomology_at(n));
        }
    }

    #[test]
    fn koszul_sign_keeps_d_squared_zero() {
        // (k -> k) ⊗ (k -> k) over one vertex, both with identity differential
        let q = Arc::new(Quiver::build(&["1"], &[]).unwrap());
        let k = Representation::unit(q.clone(), Q);
        let c = BoundedComplex::two_term(k.clone(), k.clone(), RepMorphism::identity(&k), 0).unwrap();
        let t = c.tensor(&c).unwrap();
        assert_eq!(t.degrees(), 0..=2);
        assert_eq!(t.dim_at(1, 0), 2);
        assert!(t.is_acyclic());
        assert_eq!(t.diff_at(0, 0), Matrix::from_i64(Q, &[&[1], &[1]]));
        // summands (0,1) then (1,0); the second picks up the sign
        assert_eq!(t.diff_at(1, 0), Matrix::from_i64(Q, &[&[1, -1]]));
    }

    #[test]
    fn direct_sum_support_is_union() {
        let q = a2();
        let a = BoundedComplex::concentrated(Representation::simple(q.clone(), Q, 0).unwrap(), 3);
        let b = BoundedComplex::concentrated(Representation::simple(q, Q, 1).unwrap(), -2);
        let s = a.direct_sum(&b).unwrap();
        assert_eq!(s.degrees(), -2..=3);
        assert_eq!(s.support(), BTreeSet::from([0, 1]));
        assert_eq!(s.trimmed().degrees(), -2..=3);
    }

    #[test]
    fn from_degrees_fills_gaps() {
        let q = a2();
        let u = Representation::unit(q.clone(), Q);
        let c = BoundedComplex::from_degrees(
            q,
            Q,
            BTreeMap::from([(-1, u.clone()), (1, u)]),
            BTreeMap::new(),
        )
        .unwrap();
        assert_eq!(c.degrees(), -1..=1);
        assert_eq!(c.cohomology_at(0).get(-1), 1);
        assert_eq!(c.cohomology_at(0).get(1), 1);
    }
}
