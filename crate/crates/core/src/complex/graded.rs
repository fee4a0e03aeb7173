use std::collections::BTreeMap;

/// A finitely supported graded vector space, recorded by dimension per degree.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GradedDims {
    dims: BTreeMap<i32, usize>,
}

impl GradedDims {
    pub fn new() -> GradedDims {
        GradedDims::default()
    }

    /// `k` in degree 0.
    pub fn unit() -> GradedDims {
        let mut g = GradedDims::new();
        g.set(0, 1);
        g
    }

    pub fn set(&mut self, degree: i32, dim: usize) {
        if dim == 0 {
            self.dims.remove(&degree);
        } else {
            self.dims.insert(degree, dim);
        }
    }

    pub fn get(&self, degree: i32) -> usize {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn total(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .map(|(&d, &n)| if d.rem_euclid(2) == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// Graded tensor product: dimensions convolve over degrees.
    pub fn tensor(&self, other: &GradedDims) -> GradedDims {
        let mut out = GradedDims::new();
        for (&i, &a) in &self.dims {
            for (&j, &b) in &other.dims {
                let cur = out.get(i + j);
                out.set(i + j, cur + a * b);
            }
        }
        out
    }

    /// Degree shift: `(self[j])^i = self^{i+j}`.
    pub fn shift(&self, j: i32) -> GradedDims {
        GradedDims {
            dims: self.dims.iter().map(|(&d, &n)| (d - j, n)).collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (i32, usize)> + '_ {
        self.dims.iter().map(|(&d, &n)| (d, n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tensor_convolves() {
        let mut a = GradedDims::new();
        a.set(0, 1);
        a.set(1, 2);
        let mut b = GradedDims::new();
        b.set(-1, 3);
        let t = a.tensor(&b);
        assert_eq!(t.get(-1), 3);
        assert_eq!(t.get(0), 6);
        assert_eq!(t.total(), 9);
        assert_eq!(t.euler_characteristic(), a.euler_characteristic() * b.euler_characteristic());
        assert!(a.tensor(&GradedDims::new()).is_zero());
    }
}
