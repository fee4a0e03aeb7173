use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver. Vertices and arrows are addressed by their position in
/// declaration order; labels are unique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

/// A path in a quiver. An empty arrow list is the trivial path at `source`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self` followed by `next`, when `self` ends where `next` starts.
    pub fn then(&self, next: &Path) -> Option<Path> {
        if self.target != next.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&next.arrows);
        Some(Path {
            source: self.source,
            target: next.target,
            arrows,
        })
    }
}

impl Quiver {
    /// Builds a quiver from vertex labels and `(label, source, target)`
    /// arrow triples. Cycles are allowed here; [`Quiver::admissible_order`]
    /// rejects them.
    pub fn new<V, A>(vertices: V, arrows: A) -> Result<Quiver>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        A: IntoIterator<Item = (String, String, String)>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::Duplicate(v.clone()));
            }
        }
        let mut labels = BTreeSet::new();
        let mut out = Vec::new();
        for (label, s, t) in arrows {
            if !labels.insert(label.clone()) {
                return Err(Error::Duplicate(label));
            }
            let source = *index.get(&s).ok_or(Error::UnknownVertex(s))?;
            let target = *index.get(&t).ok_or(Error::UnknownVertex(t))?;
            out.push(Arrow {
                label,
                source,
                target,
            });
        }
        Ok(Quiver {
            vertices,
            arrows: out,
        })
    }

    /// Shorthand used throughout the tests: `Quiver::build(&["1","2"], &[("a","1","2")])`.
    pub fn build(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Quiver> {
        Quiver::new(
            vertices.iter().copied(),
            arrows
                .iter()
                .map(|(a, s, t)| (a.to_string(), s.to_string(), t.to_string())),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, label: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn arrow_index(&self, label: &str) -> Result<usize> {
        self.arrows
            .iter()
            .position(|a| a.label == label)
            .ok_or_else(|| Error::UnknownArrow(label.to_string()))
    }

    /// Resolves a list of arrow labels to a composable path.
    pub fn path_from_labels(&self, labels: &[&str]) -> Result<Path> {
        let Some((first, _)) = labels.split_first() else {
            return Err(Error::Invalid("empty arrow word".into()));
        };
        let mut path = Path::trivial(self.arrows[self.arrow_index(first)?].source);
        for l in labels {
            let a = self.arrow_index(l)?;
            if self.arrows[a].source != path.target {
                return Err(Error::NotComposable(labels.join("*")));
            }
            path.arrows.push(a);
            path.target = self.arrows[a].target;
        }
        Ok(path)
    }

    /// `e_v` for trivial paths, otherwise arrow labels joined by `*`.
    pub fn path_word(&self, p: &Path) -> String {
        if p.is_trivial() {
            format!("e_{}", self.vertices[p.source])
        } else {
            p.arrows
                .iter()
                .map(|&a| self.arrows[a].label.as_str())
                .collect::<Vec<_>>()
                .join("*")
        }
    }

    /// Topological order of the vertices, smallest declared index first among
    /// the available choices. Fails with a cycle witness otherwise.
    pub fn admissible_order(&self) -> Result<Vec<usize>> {
        let n = self.vertices.len();
        let mut indegree = vec![0usize; n];
        for a in &self.arrows {
            indegree[a.target] += 1;
        }
        let mut ready: BTreeSet<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for a in self.arrows.iter().filter(|a| a.source == v) {
                indegree[a.target] -= 1;
                if indegree[a.target] == 0 {
                    ready.insert(a.target);
                }
            }
        }
        if order.len() == n {
            return Ok(order);
        }
        Err(Error::NotOrdered {
            cycle: self
                .find_cycle(&indegree)
                .into_iter()
                .map(|v| self.vertices[v].clone())
                .collect(),
        })
    }

    /// Walks backwards along arrows among the vertices left over by Kahn's
    /// algorithm; every such vertex has a predecessor in the leftover set, so
    /// the walk must revisit a vertex.
    fn find_cycle(&self, indegree: &[usize]) -> Vec<usize> {
        let stuck: Vec<bool> = indegree.iter().map(|&d| d > 0).collect();
        let start = stuck.iter().position(|&s| s).expect("a stuck vertex");
        let mut seen = vec![usize::MAX; self.vertices.len()];
        let mut walk = vec![start];
        let mut v = start;
        loop {
            seen[v] = walk.len() - 1;
            let prev = self
                .arrows
                .iter()
                .find(|a| a.target == v && stuck[a.source])
                .expect("stuck vertex has a stuck predecessor")
                .source;
            if seen[prev] != usize::MAX {
                let mut cycle: Vec<usize> = walk[seen[prev]..].to_vec();
                cycle.reverse();
                cycle.push(cycle[0]);
                return cycle;
            }
            walk.push(prev);
            v = prev;
        }
    }

    pub fn is_ordered(&self) -> bool {
        self.admissible_order().is_ok()
    }

    /// Every path, trivial ones included, sorted by source, target, length
    /// and then arrow labels. Requires an ordered quiver.
    pub fn enumerate_paths(&self) -> Result<Vec<Path>> {
        let order = self.admissible_order()?;
        // paths_from[v] = all paths starting at v, built in reverse order
        let mut paths_from: Vec<Vec<Path>> = vec![Vec::new(); self.vertices.len()];
        for &v in order.iter().rev() {
            let mut ps = vec![Path::trivial(v)];
            for (ai, a) in self.arrows.iter().enumerate().filter(|(_, a)| a.source == v) {
                for tail in &paths_from[a.target] {
                    let mut arrows = vec![ai];
                    arrows.extend_from_slice(&tail.arrows);
                    ps.push(Path {
                        source: v,
                        target: tail.target,
                        arrows,
                    });
                }
            }
            paths_from[v] = ps;
        }
        let mut all: Vec<Path> = paths_from.into_iter().flatten().collect();
        all.sort_by(|p, q| self.path_order_key(p).cmp(&self.path_order_key(q)));
        Ok(all)
    }

    /// Sort key: `(source, target, length, arrow labels)`.
    pub fn path_order_key<'a>(&'a self, p: &Path) -> (usize, usize, usize, Vec<&'a str>) {
        (
            p.source,
            p.target,
            p.len(),
            p.arrows
                .iter()
                .map(|&a| self.arrows[a].label.as_str())
                .collect(),
        )
    }

    /// Connected components of the underlying undirected graph, as a
    /// component id per vertex (ids numbered by first vertex).
    pub fn components(&self) -> Vec<usize> {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for a in &self.arrows {
            let (r, s) = (find(&mut parent, a.source), find(&mut parent, a.target));
            if r != s {
                parent[r.max(s)] = r.min(s);
            }
        }
        let mut ids = HashMap::new();
        (0..n)
            .map(|v| {
                let root = find(&mut parent, v);
                let next = ids.len();
                *ids.entry(root).or_insert(next)
            })
            .collect()
    }

    pub fn component_count(&self) -> usize {
        self.components().into_iter().max().map_or(0, |m| m + 1)
    }

    /// The full subquiver on `verts`: every arrow with both ends in `verts`.
    pub fn full_subquiver(&self, verts: &[usize]) -> Result<Subquiver> {
        let mut keep = vec![false; self.vertices.len()];
        for &v in verts {
            if v >= keep.len() {
                return Err(Error::UnknownVertex(v.to_string()));
            }
            keep[v] = true;
        }
        let vertex_map: Vec<usize> = (0..self.vertices.len()).filter(|&v| keep[v]).collect();
        let arrow_map: Vec<usize> = (0..self.arrows.len())
            .filter(|&a| keep[self.arrows[a].source] && keep[self.arrows[a].target])
            .collect();
        let local = |v: usize| vertex_map.binary_search(&v).expect("kept vertex");
        let quiver = Quiver {
            vertices: vertex_map.iter().map(|&v| self.vertices[v].clone()).collect(),
            arrows: arrow_map
                .iter()
                .map(|&a| {
                    let arr = &self.arrows[a];
                    Arrow {
                        label: arr.label.clone(),
                        source: local(arr.source),
                        target: local(arr.target),
                    }
                })
                .collect(),
        };
        Ok(Subquiver {
            quiver,
            vertex_map,
            arrow_map,
        })
    }

    /// Same as [`Quiver::full_subquiver`] with vertices given by label.
    pub fn full_subquiver_by_labels(&self, labels: &[&str]) -> Result<Subquiver> {
        let verts = labels
            .iter()
            .map(|l| self.vertex_index(l))
            .collect::<Result<Vec<_>>>()?;
        self.full_subquiver(&verts)
    }
}

/// A full subquiver together with its inclusion into the parent quiver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subquiver {
    pub quiver: Quiver,
    /// Parent index of each subquiver vertex (increasing).
    pub vertex_map: Vec<usize>,
    /// Parent index of each subquiver arrow (increasing).
    pub arrow_map: Vec<usize>,
}

impl Subquiver {
    pub fn local_vertex(&self, parent: usize) -> Option<usize> {
        self.vertex_map.binary_search(&parent).ok()
    }

    pub fn local_arrow(&self, parent: usize) -> Option<usize> {
        self.arrow_map.binary_search(&parent).ok()
    }

    /// Transports a parent path into the subquiver, if all its arrows live there.
    pub fn local_path(&self, p: &Path) -> Option<Path> {
        Some(Path {
            source: self.local_vertex(p.source)?,
            target: self.local_vertex(p.target)?,
            arrows: p
                .arrows
                .iter()
                .map(|&a| self.local_arrow(a))
                .collect::<Option<Vec<_>>>()?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kronecker(i: usize) -> Quiver {
        let arrows: Vec<(String, String, String)> = (0..i)
            .map(|k| (format!("a{k}"), "1".into(), "2".into()))
            .collect();
        Quiver::new(["1", "2"], arrows).unwrap()
    }

    #[test]
    fn single_vertex_order() {
        let q = Quiver::build(&["v"], &[]).unwrap();
        assert_eq!(q.admissible_order().unwrap(), vec![0]);
    }

    #[test]
    fn respects_arrows_not_declaration_order() {
        let q = Quiver::build(&["c", "b", "a"], &[("x", "a", "b"), ("y", "b", "c")]).unwrap();
        assert_eq!(q.admissible_order().unwrap(), vec![2, 1, 0]);
    }

    #[test]
    fn two_cycle_is_rejected_with_witness() {
        let q = Quiver::build(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).unwrap();
        match q.admissible_order() {
            Err(Error::NotOrdered { cycle }) => {
                assert_eq!(cycle.first(), cycle.last());
                assert_eq!(cycle.len(), 3);
            }
            other => panic!("expected a cycle, got {other:?}"),
        }
    }

    #[test]
    fn loop_is_a_cycle() {
        let q = Quiver::build(&["1"], &[("a", "1", "1")]).unwrap();
        assert!(!q.is_ordered());
    }

    #[test]
    fn kronecker_paths() {
        let ps = kronecker(2).enumerate_paths().unwrap();
        let words: Vec<String> = ps.iter().map(|p| kronecker(2).path_word(p)).collect();
        assert_eq!(words, ["e_1", "a0", "a1", "e_2"]);
    }

    #[test]
    fn no_arrows_only_trivial_paths() {
        let q = Quiver::build(&["1", "2", "3"], &[]).unwrap();
        let ps = q.enumerate_paths().unwrap();
        assert_eq!(ps.len(), 3);
        assert!(ps.iter().all(Path::is_trivial));
    }

    #[test]
    fn duplicate_labels_rejected() {
        assert!(matches!(
            Quiver::build(&["1", "1"], &[]),
            Err(Error::Duplicate(_))
        ));
        assert!(matches!(
            Quiver::build(&["1", "2"], &[("a", "1", "2"), ("a", "1", "2")]),
            Err(Error::Duplicate(_))
        ));
    }

    #[test]
    fn components_of_disjoint_union() {
        let q = Quiver::build(&["1", "2", "3", "4"], &[("a", "1", "2"), ("b", "4", "3")]).unwrap();
        assert_eq!(q.components(), vec![0, 0, 1, 1]);
        assert_eq!(q.component_count(), 2);
    }

    #[test]
    fn square_full_subquiver() {
        let q = Quiver::build(
            &["1", "2", "3", "4"],
            &[("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")],
        )
        .unwrap();
        let sub = q.full_subquiver_by_labels(&["1", "2", "4"]).unwrap();
        let labels: Vec<&str> = sub.quiver.arrows().iter().map(|a| a.label.as_str()).collect();
        assert_eq!(labels, ["a", "b"]);
        assert_eq!(sub.vertex_map, vec![0, 1, 3]);

        let all = q.full_subquiver(&[0, 1, 2, 3]).unwrap();
        assert_eq!(all.quiver, q);

        let one = q.full_subquiver(&[2]).unwrap();
        assert_eq!(one.quiver.vertex_count(), 1);
        assert_eq!(one.quiver.arrow_count(), 0);

        assert!(q.full_subquiver(&[9]).is_err());
        assert!(q.full_subquiver_by_labels(&["x"]).is_err());
    }

    #[test]
    fn path_composition_convention() {
        let q = Quiver::build(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap();
        let a = q.path_from_labels(&["a"]).unwrap();
        let b = q.path_from_labels(&["b"]).unwrap();
        let ab = a.then(&b).unwrap();
        assert_eq!(q.path_word(&ab), "a*b");
        assert!(b.then(&a).is_none());
        assert_eq!(Path::trivial(0).then(&a), Some(a.clone()));
        assert!(q.path_from_labels(&["b", "a"]).is_err());
    }
}
