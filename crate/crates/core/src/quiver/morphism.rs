use super::graph::Quiver;
use crate::error::{Error, Result};

/// A morphism of quivers `g: source -> target`, given by where each vertex
/// and each arrow goes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverMorphism {
    pub vertex_map: Vec<usize>,
    pub arrow_map: Vec<usize>,
}

impl QuiverMorphism {
    pub fn identity(q: &Quiver) -> QuiverMorphism {
        QuiverMorphism {
            vertex_map: (0..q.vertex_count()).collect(),
            arrow_map: (0..q.arrow_count()).collect(),
        }
    }

    /// Builds from label pairs, checking that arrows go to arrows between
    /// the images of their endpoints.
    pub fn from_labels(
        source: &Quiver,
        target: &Quiver,
        vertices: &[(&str, &str)],
        arrows: &[(&str, &str)],
    ) -> Result<QuiverMorphism> {
        let mut vertex_map = vec![usize::MAX; source.vertex_count()];
        for (s, t) in vertices {
            vertex_map[source.vertex_index(s)?] = target.vertex_index(t)?;
        }
        let mut arrow_map = vec![usize::MAX; source.arrow_count()];
        for (s, t) in arrows {
            arrow_map[source.arrow_index(s)?] = target.arrow_index(t)?;
        }
        let g = QuiverMorphism {
            vertex_map,
            arrow_map,
        };
        g.validate(source, target)?;
        Ok(g)
    }

    pub fn validate(&self, source: &Quiver, target: &Quiver) -> Result<()> {
        if self.vertex_map.len() != source.vertex_count() || self.arrow_map.len() != source.arrow_count() {
            return Err(Error::NotQuiverMorphism("every vertex and arrow needs an image".into()));
        }
        if let Some(v) = self.vertex_map.iter().position(|&t| t >= target.vertex_count()) {
            return Err(Error::NotQuiverMorphism(format!(
                "vertex `{}` has no image",
                source.vertex_label(v)
            )));
        }
        for (a, &b) in self.arrow_map.iter().enumerate() {
            let arr = source.arrow(a);
            if b >= target.arrow_count() {
                return Err(Error::NotQuiverMorphism(format!("arrow `{}` has no image", arr.label)));
            }
            let img = target.arrow(b);
            if img.source != self.vertex_map[arr.source] || img.target != self.vertex_map[arr.target] {
                return Err(Error::NotQuiverMorphism(format!(
                    "arrow `{}` is sent to `{}` with mismatched endpoints",
                    arr.label, img.label
                )));
            }
        }
        Ok(())
    }

    pub fn is_injective_on_vertices(&self) -> bool {
        let mut seen = self.vertex_map.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == self.vertex_map.len()
    }
}
