//! Monomial bound quiver algebras `KQ/I` with `I` generated by paths.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::quiver::{Path, Quiver};

/// Index of a basis path.
pub type PathId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Right,
    Left,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sides {
    Right,
    Left,
    Both,
}

impl Sides {
    fn includes(self, side: Side) -> bool {
        matches!(
            (self, side),
            (Sides::Both, _) | (Sides::Right, Side::Right) | (Sides::Left, Side::Left)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialAlgebra {
    quiver: Quiver,
    relations: Vec<Path>,
    /// Basis paths, sorted by (length, source, arrows). Path `v < n` is `e_v`.
    paths: Vec<Path>,
    index: BTreeMap<(usize, Vec<usize>), PathId>,
    /// Nonzero right extensions `p·a` as (arrow, path) pairs.
    right_ext: Vec<Vec<(usize, PathId)>>,
    /// Nonzero left extensions `a·p` as (arrow, path) pairs.
    left_ext: Vec<Vec<(usize, PathId)>>,
    by_source: Vec<Vec<PathId>>,
    by_target: Vec<Vec<PathId>>,
}

/// Drops duplicates and every word containing another word as a factor.
pub fn reduce_to_antichain(words: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut sorted: Vec<Vec<usize>> = words.to_vec();
    sorted.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    sorted.dedup();
    let mut kept: Vec<Vec<usize>> = Vec::new();
    for w in sorted {
        if !kept.iter().any(|k| contains_factor(&w, k)) {
            kept.push(w);
        }
    }
    kept.sort();
    kept
}

fn contains_factor(word: &[usize], factor: &[usize]) -> bool {
    factor.len() <= word.len() && word.windows(factor.len()).any(|w| w == factor)
}

fn has_forbidden_suffix(word: &[usize], forbidden: &BTreeSet<Vec<usize>>, max_len: usize) -> bool {
    (2..=max_len.min(word.len())).any(|l| forbidden.contains(&word[word.len() - l..]))
}

/// True iff only finitely many paths of `quiver` avoid every word in `forbidden`
/// as a contiguous factor.
///
/// Nodes of the search graph are clean paths of length `L - 1`, where `L` is the
/// longest forbidden word (at least 2); edges are single-arrow extensions that
/// stay clean. The set of clean paths is infinite iff that graph has a cycle.
pub fn is_admissible(quiver: &Quiver, forbidden: &[Vec<usize>]) -> bool {
    let max_len = forbidden.iter().map(Vec::len).max().unwrap_or(0).max(2);
    let window = max_len - 1;
    let set: BTreeSet<Vec<usize>> = forbidden.iter().cloned().collect();

    let mut out_arrows: Vec<Vec<usize>> = vec![Vec::new(); quiver.vertex_count()];
    for (id, a) in quiver.arrows().iter().enumerate() {
        out_arrows[a.source].push(id);
    }

    // Clean paths of length exactly `window`.
    let mut states: Vec<Vec<usize>> = (0..quiver.arrows().len()).map(|a| vec![a]).collect();
    for _ in 1..window {
        let mut next = Vec::new();
        for s in &states {
            let t = quiver.arrow(*s.last().unwrap()).target;
            for &a in &out_arrows[t] {
                let mut w = s.clone();
                w.push(a);
                if !has_forbidden_suffix(&w, &set, max_len) {
                    next.push(w);
                }
            }
        }
        states = next;
    }
    let ids: BTreeMap<Vec<usize>, usize> = states.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
    let succ: Vec<Vec<usize>> = states
        .iter()
        .map(|s| {
            let t = quiver.arrow(*s.last().unwrap()).target;
            out_arrows[t]
                .iter()
                .filter_map(|&a| {
                    let mut w = s.clone();
                    w.push(a);
                    if has_forbidden_suffix(&w, &set, max_len) {
                        None
                    } else {
                        ids.get(&w[1..]).copied()
                    }
                })
                .collect()
        })
        .collect();
    !has_cycle(&succ)
}

/// Iterative three-colour DFS.
fn has_cycle(succ: &[Vec<usize>]) -> bool {
    let n = succ.len();
    let mut colour = vec![0u8; n];
    for root in 0..n {
        if colour[root] != 0 {
            continue;
        }
        let mut stack = vec![(root, 0usize)];
        colour[root] = 1;
        while let Some((v, i)) = stack.last_mut() {
            if let Some(&w) = succ[*v].get(*i) {
                *i += 1;
                match colour[w] {
                    0 => {
                        colour[w] = 1;
                        stack.push((w, 0));
                    }
                    1 => return true,
                    _ => {}
                }
            } else {
                colour[*v] = 2;
                stack.pop();
            }
        }
    }
    false
}

impl MonomialAlgebra {
    /// Builds `KQ/I` from relation paths. The relation set is reduced to its
    /// factor-minimal generators.
    pub fn build(quiver: Quiver, relations: &[Path]) -> Result<Self, Error> {
        if !quiver.is_connected() {
            return Err(Error::DisconnectedQuiver);
        }
        let mut words = Vec::with_capacity(relations.len());
        for r in relations {
            if r.len() < 2 {
                return Err(Error::BadRelation(format!(
                    "relation {:?} has length {} < 2",
                    r.arrows,
                    r.len()
                )));
            }
            match quiver.path(&r.arrows) {
                Some(p) if p == *r => words.push(r.arrows.clone()),
                _ => {
                    return Err(Error::BadRelation(format!(
                        "{:?} is not a path of the quiver",
                        r.arrows
                    )))
                }
            }
        }
        Self::from_words(quiver, &words)
    }

    /// Like [`MonomialAlgebra::build`], with relations given as arrow-id words.
    pub fn from_words(quiver: Quiver, words: &[Vec<usize>]) -> Result<Self, Error> {
        if !quiver.is_connected() {
            return Err(Error::DisconnectedQuiver);
        }
        for w in words {
            if w.len() < 2 {
                return Err(Error::BadRelation(format!("relation {w:?} has length < 2")));
            }
            if quiver.path(w).is_none() {
                return Err(Error::BadRelation(format!("{w:?} is not a path of the quiver")));
            }
        }
        let reduced = reduce_to_antichain(words);
        if !is_admissible(&quiver, &reduced) {
            return Err(Error::NotAdmissible);
        }
        let relations: Vec<Path> = reduced.iter().map(|w| quiver.path(w).unwrap()).collect();
        Ok(Self::assemble(quiver, relations))
    }

    fn assemble(quiver: Quiver, relations: Vec<Path>) -> Self {
        let n = quiver.vertex_count();
        let forbidden: BTreeSet<Vec<usize>> = relations.iter().map(|r| r.arrows.clone()).collect();
        let max_len = relations.iter().map(Path::len).max().unwrap_or(0);

        let mut paths: Vec<Path> = (0..n).map(Path::trivial).collect();
        let mut frontier: Vec<Path> = paths.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for p in &frontier {
                for (id, a) in quiver.arrows().iter().enumerate() {
                    if a.source != p.target {
                        continue;
                    }
                    let mut arrows = p.arrows.clone();
                    arrows.push(id);
                    if has_forbidden_suffix(&arrows, &forbidden, max_len) {
                        continue;
                    }
                    next.push(Path {
                        source: p.source,
                        target: a.target,
                        arrows,
                    });
                }
            }
            next.sort_by(|a, b| (a.source, &a.arrows).cmp(&(b.source, &b.arrows)));
            paths.extend(next.iter().cloned());
            frontier = next;
        }

        let index: BTreeMap<(usize, Vec<usize>), PathId> = paths
            .iter()
            .enumerate()
            .map(|(i, p)| ((p.source, p.arrows.clone()), i))
            .collect();
        let mut right_ext = vec![Vec::new(); paths.len()];
        let mut left_ext = vec![Vec::new(); paths.len()];
        let mut by_source = vec![Vec::new(); n];
        let mut by_target = vec![Vec::new(); n];
        for (i, p) in paths.iter().enumerate() {
            by_source[p.source].push(i);
            by_target[p.target].push(i);
            for (id, a) in quiver.arrows().iter().enumerate() {
                if a.source == p.target {
                    let mut w = p.arrows.clone();
                    w.push(id);
                    if let Some(&j) = index.get(&(p.source, w)) {
                        right_ext[i].push((id, j));
                    }
                }
                if a.target == p.source {
                    let mut w = vec![id];
                    w.extend_from_slice(&p.arrows);
                    if let Some(&j) = index.get(&(a.source, w)) {
                        left_ext[i].push((id, j));
                    }
                }
            }
        }
        MonomialAlgebra {
            quiver,
            relations,
            paths,
            index,
            right_ext,
            left_ext,
            by_source,
            by_target,
        }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn relations(&self) -> &[Path] {
        &self.relations
    }

    pub fn relation_words(&self) -> Vec<Vec<usize>> {
        self.relations.iter().map(|r| r.arrows.clone()).collect()
    }

    pub fn dim(&self) -> usize {
        self.paths.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.paths
    }

    pub fn path(&self, id: PathId) -> &Path {
        &self.paths[id]
    }

    /// The id of a path, if it is nonzero in the algebra.
    pub fn path_id(&self, p: &Path) -> Option<PathId> {
        self.index.get(&(p.source, p.arrows.clone())).copied()
    }

    pub fn idempotent(&self, v: usize) -> PathId {
        v
    }

    /// Basis paths starting at `v`.
    pub fn paths_from(&self, v: usize) -> &[PathId] {
        &self.by_source[v]
    }

    /// Basis paths ending at `v`.
    pub fn paths_to(&self, v: usize) -> &[PathId] {
        &self.by_target[v]
    }

    /// Nonzero `p·a`, as (arrow, result) pairs.
    pub fn right_extensions(&self, p: PathId) -> &[(usize, PathId)] {
        &self.right_ext[p]
    }

    /// Nonzero `a·p`, as (arrow, result) pairs.
    pub fn left_extensions(&self, p: PathId) -> &[(usize, PathId)] {
        &self.left_ext[p]
    }

    /// `p·a` if nonzero.
    pub fn extend_right(&self, p: PathId, arrow: usize) -> Option<PathId> {
        self.right_ext[p].iter().find(|(a, _)| *a == arrow).map(|&(_, q)| q)
    }

    /// Product of two basis paths; `None` is zero.
    pub fn multiply(&self, p: PathId, q: PathId) -> Option<PathId> {
        let joined = self.paths[p].compose(&self.paths[q])?;
        self.path_id(&joined)
    }

    /// Opposite algebra: arrows reversed, relation words reversed.
    pub fn opposite(&self) -> MonomialAlgebra {
        let quiver = self.quiver.opposite();
        let relations: Vec<Path> = self
            .relations
            .iter()
            .map(|r| {
                let mut w = r.arrows.clone();
                w.reverse();
                quiver.path(&w).expect("reversed relation is a path")
            })
            .collect();
        let mut relations = relations;
        relations.sort_by(|a, b| a.arrows.cmp(&b.arrows));
        Self::assemble(quiver, relations)
    }

    /// Number of nonzero paths starting at `v` (right) or ending at `v` (left)
    /// that cannot be extended further on that side.
    pub fn maximal_path_count(&self, v: usize, side: Side) -> usize {
        match side {
            Side::Right => self.by_source[v]
                .iter()
                .filter(|&&p| self.right_ext[p].is_empty())
                .count(),
            Side::Left => self.by_target[v]
                .iter()
                .filter(|&&p| self.left_ext[p].is_empty())
                .count(),
        }
    }

    /// The indecomposable projective at `v` on `side` has simple socle iff
    /// there is exactly one maximal nonzero path at `v`.
    pub fn socle_criterion(&self, v: usize, side: Side) -> bool {
        self.maximal_path_count(v, side) == 1
    }

    pub fn is_qf2(&self, sides: Sides) -> bool {
        [Side::Right, Side::Left]
            .into_iter()
            .filter(|&s| sides.includes(s))
            .all(|s| (0..self.vertex_count()).all(|v| self.socle_criterion(v, s)))
    }

    /// Length of the longest nonzero path.
    pub fn loewy_bound(&self) -> usize {
        self.paths.last().map_or(0, Path::len)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn words(a: &MonomialAlgebra, ids: &[PathId]) -> Vec<Vec<usize>> {
        ids.iter().map(|&i| a.path(i).arrows.clone()).collect()
    }

    #[test]
    fn five_vertex_basis() {
        let a = fixtures::paper_example();
        assert_eq!(a.dim(), 11);
        // α1α4 and α2α3 are the only nonzero paths of length two.
        let long: Vec<_> = a
            .basis()
            .iter()
            .filter(|p| p.len() == 2)
            .map(|p| p.arrows.clone())
            .collect();
        assert_eq!(long, vec![vec![0, 3], vec![1, 2]]);
        assert_eq!(a.loewy_bound(), 2);
    }

    #[test]
    fn multiplication_on_five_vertex_example() {
        let a = fixtures::paper_example();
        let id = |w: &[usize]| a.path_id(&a.quiver().path(w).unwrap()).unwrap();
        let (a1, a3, a4) = (id(&[0]), id(&[2]), id(&[3]));
        assert_eq!(a.multiply(a1, a3), None);
        assert_eq!(a.multiply(a.idempotent(0), a1), Some(a1));
        assert_eq!(a.multiply(a1, a4), Some(id(&[0, 3])));
        assert_eq!(a.multiply(a3, a1), None);
    }

    #[test]
    fn loop_algebras() {
        let q = Quiver::from_edges(1, &[(0, 0)]).unwrap();
        let dual_numbers = MonomialAlgebra::from_words(q.clone(), &[vec![0, 0]]).unwrap();
        assert_eq!(dual_numbers.dim(), 2);
        assert_eq!(MonomialAlgebra::from_words(q, &[]), Err(Error::NotAdmissible));
    }

    #[test]
    fn rejects_bad_relations() {
        let q = Quiver::from_edges(2, &[(0, 1)]).unwrap();
        assert!(matches!(
            MonomialAlgebra::from_words(q.clone(), &[vec![0]]),
            Err(Error::BadRelation(_))
        ));
        assert!(matches!(
            MonomialAlgebra::from_words(q, &[vec![0, 0]]),
            Err(Error::BadRelation(_))
        ));
        let disconnected = Quiver::from_edges(2, &[]).unwrap();
        assert_eq!(
            MonomialAlgebra::from_words(disconnected, &[]),
            Err(Error::DisconnectedQuiver)
        );
    }

    #[test]
    fn relations_are_factor_reduced() {
        let q = Quiver::from_edges(1, &[(0, 0)]).unwrap();
        let a = MonomialAlgebra::from_words(q.clone(), &[vec![0, 0, 0], vec![0, 0]]).unwrap();
        let b = MonomialAlgebra::from_words(q, &[vec![0, 0]]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.relation_words(), vec![vec![0, 0]]);
    }

    #[test]
    fn opposite_of_five_vertex_example() {
        let a = fixtures::paper_example();
        let op = a.opposite();
        let edges: Vec<_> = op.quiver().arrows().iter().map(|x| (x.source, x.target)).collect();
        assert_eq!(edges, vec![(1, 0), (1, 2), (3, 1), (4, 1)]);
        // α3α1 and α4α2 in the opposite quiver.
        assert_eq!(op.relation_words(), vec![vec![2, 0], vec![3, 1]]);
        assert_eq!(op.opposite(), a);
    }

    #[test]
    fn opposite_of_small_algebras() {
        let q = Quiver::from_edges(1, &[(0, 0)]).unwrap();
        let d = MonomialAlgebra::from_words(q, &[vec![0, 0]]).unwrap();
        assert_eq!(d.opposite(), d);
        let a2 = MonomialAlgebra::from_words(Quiver::from_edges(2, &[(0, 1)]).unwrap(), &[]).unwrap();
        let op = a2.opposite();
        assert_eq!(op.quiver().arrow(0).source, 1);
        assert_eq!(op.quiver().arrow(0).target, 0);
    }

    #[test]
    fn socle_criterion_on_five_vertex_example() {
        let a = fixtures::paper_example();
        // Vertex 2 (index 1): maximal paths α3 and α4.
        assert_eq!(words(&a, a.paths_from(1)).len(), 3);
        assert!(!a.socle_criterion(1, Side::Right));
        assert!(a.socle_criterion(0, Side::Right));
        assert!(!a.is_qf2(Sides::Both));
        let point = MonomialAlgebra::from_words(Quiver::from_edges(1, &[]).unwrap(), &[]).unwrap();
        assert!(point.socle_criterion(0, Side::Right));
        assert!(point.is_qf2(Sides::Both));
    }

    #[test]
    fn left_qf2_matches_opposite_right() {
        let a = fixtures::paper_example();
        assert_eq!(a.is_qf2(Sides::Left), a.opposite().is_qf2(Sides::Right));
        // Two arrows into one vertex: right QF-2 only.
        let q = Quiver::from_edges(3, &[(0, 2), (1, 2)]).unwrap();
        let b = MonomialAlgebra::from_words(q, &[]).unwrap();
        assert!(b.is_qf2(Sides::Right));
        assert!(!b.is_qf2(Sides::Left));
    }

    #[test]
    fn admissibility_graph() {
        // Two-cycle with only `ab` forbidden: `ba` then dead end, so finite.
        let q = Quiver::from_edges(2, &[(0, 1), (1, 0)]).unwrap();
        assert!(is_admissible(&q, &[vec![0, 1]]));
        assert!(is_admissible(&q, &[vec![0, 1, 0]]));
        assert!(!is_admissible(&q, &[]));
        // Two loops with squares forbidden: `xyxy...` survives.
        let loops = Quiver::from_edges(1, &[(0, 0), (0, 0)]).unwrap();
        assert!(!is_admissible(&loops, &[vec![0, 0], vec![1, 1]]));
        assert!(is_admissible(&loops, &[vec![0, 0], vec![1, 1], vec![0, 1]]));
        // Acyclic quiver needs no relations.
        let line = Quiver::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(is_admissible(&line, &[]));
    }
}
