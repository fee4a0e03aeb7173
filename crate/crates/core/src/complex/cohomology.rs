use crate::linalg::Matrix;

/// Cohomology of one vertex strand in one degree, with chosen bases.
///
/// `boundaries` spans `im d^{i-1}`, `representatives` are cycles whose classes
/// form a basis of `H^i`; together they are a basis of `ker d^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrandCohomology {
    pub ambient: usize,
    pub boundaries: Matrix,
    pub representatives: Matrix,
}

impl StrandCohomology {
    /// `d_in: C^{i-1} -> C^i`, `d_out: C^i -> C^{i+1}`.
    pub fn compute(ambient: usize, d_in: &Matrix, d_out: &Matrix) -> StrandCohomology {
        debug_assert_eq!(d_in.rows(), ambient);
        debug_assert_eq!(d_out.cols(), ambient);
        let boundaries = d_in.column_space();
        let cycles = d_out.kernel_matrix();
        let joined = boundaries.hstack(&cycles);
        let picked: Vec<usize> = joined
            .rref()
            .pivots
            .into_iter()
            .filter(|&p| p >= boundaries.cols())
            .collect();
        let representatives = joined.select_columns(&picked);
        StrandCohomology {
            ambient,
            boundaries,
            representatives,
        }
    }

    pub fn dim(&self) -> usize {
        self.representatives.cols()
    }

    /// Coordinates of the classes of the given cycles (as columns) in the
    /// basis of representatives. `None` if some column is not a cycle.
    pub fn classes(&self, cycles: &Matrix) -> Option<Matrix> {
        let basis = self.boundaries.hstack(&self.representatives);
        let coords = basis.solve_matrix(cycles)?;
        Some(coords.block(self.boundaries.cols(), 0, self.dim(), cycles.cols()))
    }
}
