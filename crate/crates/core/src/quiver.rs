//! Finite quivers and paths.
//!
//! Paths compose left to right: `pq` means "first `p`, then `q`".

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertex_count: usize,
    arrows: Vec<Arrow>,
}

/// A path in a quiver. An empty arrow list is the trivial path at `source`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shape {
    Linear(usize),
    Cyclic(usize),
    NotNakayamaShape,
}

impl Shape {
    pub fn is_nakayama(self) -> bool {
        !matches!(self, Shape::NotNakayamaShape)
    }
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Concatenation `self` then `next`, or `None` when the endpoints do not meet.
    pub fn compose(&self, next: &Path) -> Option<Path> {
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

    /// True when `factor` occurs as a contiguous run of arrows in `self`.
    pub fn contains_factor(&self, factor: &[usize]) -> bool {
        if factor.is_empty() {
            return true;
        }
        self.arrows.windows(factor.len()).any(|w| w == factor)
    }
}

impl Quiver {
    pub fn new(vertex_count: usize, arrows: Vec<Arrow>) -> Result<Self, Error> {
        for (i, a) in arrows.iter().enumerate() {
            if a.source >= vertex_count || a.target >= vertex_count {
                return Err(Error::BadArrow { name: a.name.clone() });
            }
            if arrows[..i].iter().any(|b| b.name == a.name) {
                return Err(Error::DuplicateArrow { name: a.name.clone() });
            }
        }
        Ok(Quiver { vertex_count, arrows })
    }

    /// Quiver with arrows given as `(source, target)` pairs, named `a0, a1, ...`.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        let arrows = edges
            .iter()
            .enumerate()
            .map(|(i, &(source, target))| Arrow {
                name: alloc::format!("a{i}"),
                source,
                target,
            })
            .collect();
        Quiver::new(vertex_count, arrows)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, id: usize) -> &Arrow {
        &self.arrows[id]
    }

    pub fn arrow_id(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn arrow_path(&self, id: usize) -> Path {
        let a = &self.arrows[id];
        Path {
            source: a.source,
            target: a.target,
            arrows: vec![id],
        }
    }

    /// Builds the path through the given arrows, checking composability.
    pub fn path(&self, arrows: &[usize]) -> Option<Path> {
        let first = self.arrows.get(*arrows.first()?)?;
        let mut target = first.target;
        for &id in &arrows[1..] {
            let a = self.arrows.get(id)?;
            if a.source != target {
                return None;
            }
            target = a.target;
        }
        Some(Path {
            source: first.source,
            target,
            arrows: arrows.to_vec(),
        })
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.arrows.iter().filter(|a| a.source == v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.arrows.iter().filter(|a| a.target == v).count()
    }

    /// Connected components of the underlying undirected graph, each sorted,
    /// listed by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for a in &self.arrows {
            let (x, y) = (find(&mut parent, a.source), find(&mut parent, a.target));
            if x != y {
                parent[x.max(y)] = x.min(y);
            }
        }
        let mut comps: Vec<Vec<usize>> = Vec::new();
        let mut root_slot = vec![usize::MAX; n];
        for v in 0..n {
            let r = find(&mut parent, v);
            if root_slot[r] == usize::MAX {
                root_slot[r] = comps.len();
                comps.push(Vec::new());
            }
            comps[root_slot[r]].push(v);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// The full subquiver on `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Quiver {
        let mut slot = vec![usize::MAX; self.vertex_count];
        for (i, &v) in vertices.iter().enumerate() {
            slot[v] = i;
        }
        let arrows = self
            .arrows
            .iter()
            .filter(|a| slot[a.source] != usize::MAX && slot[a.target] != usize::MAX)
            .map(|a| Arrow {
                name: a.name.clone(),
                source: slot[a.source],
                target: slot[a.target],
            })
            .collect();
        Quiver {
            vertex_count: vertices.len(),
            arrows,
        }
    }

    /// Same quiver with every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertex_count: self.vertex_count,
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute_vertices(&self, perm: &[usize]) -> Quiver {
        assert_eq!(perm.len(), self.vertex_count);
        Quiver {
            vertex_count: self.vertex_count,
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: perm[a.source],
                    target: perm[a.target],
                })
                .collect(),
        }
    }

    /// Oriented line `0 -> 1 -> ... -> n-1` or oriented cycle, per the degree
    /// conditions; anything else is not the quiver of a Nakayama algebra.
    pub fn shape(&self) -> Result<Shape, Error> {
        if !self.is_connected() {
            return Err(Error::DisconnectedQuiver);
        }
        let n = self.vertex_count;
        let degrees_ok = |bound: usize| (0..n).all(|v| self.in_degree(v) <= bound && self.out_degree(v) <= bound);
        if !degrees_ok(1) {
            return Ok(Shape::NotNakayamaShape);
        }
        let m = self.arrows.len();
        if m == n && (0..n).all(|v| self.in_degree(v) == 1 && self.out_degree(v) == 1) {
            Ok(Shape::Cyclic(n))
        } else if m + 1 == n {
            Ok(Shape::Linear(n))
        } else {
            Ok(Shape::NotNakayamaShape)
        }
    }

    /// Vertices in the order visited by following arrows: from the unique
    /// source for a line, from `start` for a cycle. `None` for other shapes.
    pub fn nakayama_order(&self, start: usize) -> Option<Vec<usize>> {
        let first = match self.shape().ok()? {
            Shape::Linear(_) => (0..self.vertex_count).find(|&v| self.in_degree(v) == 0)?,
            Shape::Cyclic(_) => start,
            Shape::NotNakayamaShape => return None,
        };
        let mut order = vec![first];
        let mut v = first;
        while order.len() < self.vertex_count {
            v = self.arrows.iter().find(|a| a.source == v)?.target;
            order.push(v);
        }
        Some(order)
    }
}
