//! Solving naturality squares.
//!
//! Given two quiver-shaped families of linear maps (a vector space per vertex
//! and a matrix per arrow) this finds every family of vertex maps `f_v` with
//! `f_t * V_a = W_a * f_s` for each arrow `a: s -> t`. Both the hom spaces of
//! representations and the module maps between projectives reduce to this.

use crate::linalg::{Field, Matrix, SparseEliminator};

/// Shape of a quiver-indexed family of maps.
pub struct Family<'a> {
    pub dims: &'a [usize],
    pub maps: &'a [Matrix],
}

/// Returns a basis of all intertwiners `source -> target` as per-vertex
/// matrices (`target.dims[v] x source.dims[v]`).
pub fn intertwiners(
    field: Field,
    arrows: &[(usize, usize)],
    source: Family<'_>,
    target: Family<'_>,
) -> Vec<Vec<Matrix>> {
    let n = source.dims.len();
    assert_eq!(n, target.dims.len(), "vertex count mismatch");
    assert_eq!(arrows.len(), source.maps.len());
    assert_eq!(arrows.len(), target.maps.len());

    // unknown f_v[r][c] lives at offset[v] + r * source.dims[v] + c
    let mut offset = Vec::with_capacity(n + 1);
    let mut total = 0;
    for v in 0..n {
        offset.push(total);
        total += target.dims[v] * source.dims[v];
    }
    let var = |v: usize, r: usize, c: usize| offset[v] + r * source.dims[v] + c;

    let mut elim = SparseEliminator::new(field, total);
    for (a, &(s, t)) in arrows.iter().enumerate() {
        let va = &source.maps[a];
        let wa = &target.maps[a];
        debug_assert_eq!(va.shape(), (source.dims[t], source.dims[s]));
        debug_assert_eq!(wa.shape(), (target.dims[t], target.dims[s]));
        for r in 0..target.dims[t] {
            for c in 0..source.dims[s] {
                let mut eq = Vec::new();
                for k in 0..source.dims[t] {
                    let x = &va[(k, c)];
                    if !x.is_zero() {
                        eq.push((var(t, r, k), x.clone()));
                    }
                }
                for k in 0..target.dims[s] {
                    let x = &wa[(r, k)];
                    if !x.is_zero() {
                        eq.push((var(s, k, c), -x));
                    }
                }
                if !eq.is_empty() {
                    elim.push(eq);
                }
            }
        }
    }

    elim.kernel()
        .into_iter()
        .map(|v| {
            (0..n)
                .map(|x| {
                    let mut m = Matrix::zeros(field, target.dims[x], source.dims[x]);
                    for r in 0..target.dims[x] {
                        for c in 0..source.dims[x] {
                            m[(r, c)] = v[var(x, r, c)].clone();
                        }
                    }
                    m
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn endomorphisms_of_identity_arrow() {
        // k --1--> k : intertwiners are pairs (x, x)
        let q = Field::Rational;
        let one = Matrix::identity(q, 1);
        let maps = [one];
        let fam = || Family {
            dims: &[1, 1],
            maps: &maps,
        };
        let basis = intertwiners(q, &[(0, 1)], fam(), fam());
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0][0], basis[0][1]);
    }

    #[test]
    fn no_arrows_is_full_matrix_space() {
        let q = Field::Rational;
        let basis = intertwiners(
            q,
            &[],
            Family {
                dims: &[2, 1],
                maps: &[],
            },
            Family {
                dims: &[3, 0],
                maps: &[],
            },
        );
        assert_eq!(basis.len(), 6);
    }
}
