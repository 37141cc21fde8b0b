//! Exhaustive generation of small connected monomial algebras, one per
//! isomorphism class of presentation.
//!
//! Quivers are generated as multiplicity matrices and kept when they are the
//! lexicographically smallest matrix in their vertex-permutation orbit. For each
//! such quiver, relation sets are generated by include/exclude backtracking over
//! candidate paths (shortest first) and kept when they are the smallest set in
//! their orbit under the quiver's automorphism group, which acts by vertex
//! permutations composed with permutations of parallel arrows.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::monomial::{is_admissible, MonomialAlgebra};
use crate::quiver::Quiver;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CorpusBounds {
    pub max_vertices: usize,
    pub max_arrows: usize,
    pub max_relation_length: usize,
}

impl CorpusBounds {
    pub fn new(max_vertices: usize, max_arrows: usize, max_relation_length: usize) -> Result<Self, Error> {
        if max_vertices == 0 {
            return Err(Error::InvalidBounds("max_vertices must be at least 1".into()));
        }
        if max_relation_length < 2 {
            return Err(Error::InvalidBounds(format!(
                "max_relation_length must be at least 2, got {max_relation_length}"
            )));
        }
        Ok(CorpusBounds {
            max_vertices,
            max_arrows,
            max_relation_length,
        })
    }
}

impl Default for CorpusBounds {
    fn default() -> Self {
        CorpusBounds {
            max_vertices: 4,
            max_arrows: 5,
            max_relation_length: 3,
        }
    }
}

/// A lower bound on the number of algebras the corpus contains, from the
/// one-vertex quiver with `max_arrows` loops alone (saturating).
///
/// With `k` loops and relations of length 3, order the two-letter words
/// lexicographically and keep the words `xyz` with `xy < yz`: there are
/// `C(k, 2) (k + 1)` of them, any subset of them forms an acyclic transition
/// graph, so forbidding every other three-letter word gives an admissible
/// relation set. Distinct subsets give distinct sets and at most `k!` of them
/// are isomorphic. With relations of length 2 only, the words `xy` with
/// `x < y` play the same role, giving `2^C(k, 2) / k!`.
pub fn corpus_size_lower_bound(bounds: &CorpusBounds) -> u128 {
    let k = bounds.max_arrows as u128;
    let pairs = k * k.saturating_sub(1) / 2;
    let exponent = if bounds.max_relation_length >= 3 {
        pairs * (k + 1)
    } else {
        pairs
    };
    if exponent >= 127 {
        return u128::MAX;
    }
    let factorial: u128 = (1..=k).product();
    ((1u128 << exponent) / factorial).max(1)
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        // next_permutation
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

fn permuted_counts(counts: &[usize], n: usize, perm: &[usize]) -> Vec<usize> {
    let mut out = vec![0; n * n];
    for s in 0..n {
        for t in 0..n {
            out[perm[s] * n + perm[t]] = counts[s * n + t];
        }
    }
    out
}

fn quiver_from_counts(n: usize, counts: &[usize]) -> Quiver {
    let mut edges = Vec::new();
    for s in 0..n {
        for t in 0..n {
            for _ in 0..counts[s * n + t] {
                edges.push((s, t));
            }
        }
    }
    Quiver::from_edges(n, &edges).expect("endpoints in range")
}

fn compositions(cells: usize, total: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if prefix.len() + 1 == cells {
        prefix.push(total);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for k in (0..=total).rev() {
        prefix.push(k);
        compositions(cells, total - k, prefix, out);
        prefix.pop();
    }
}

/// Connected quivers up to isomorphism with `1..=max_vertices` vertices and
/// `0..=max_arrows` arrows, loops and parallel arrows included. Ordered by
/// vertex count, then arrow count, then multiplicity matrix.
pub fn quivers(max_vertices: usize, max_arrows: usize) -> Vec<Quiver> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        let perms = permutations(n);
        for m in 0..=max_arrows {
            let mut all = Vec::new();
            compositions(n * n, m, &mut Vec::new(), &mut all);
            all.sort();
            for counts in all {
                if perms.iter().any(|p| permuted_counts(&counts, n, p) < counts) {
                    continue;
                }
                let q = quiver_from_counts(n, &counts);
                if q.is_connected() {
                    out.push(q);
                }
            }
        }
    }
    out
}

/// Automorphisms of a quiver as arrow permutations (`g[a]` is the image of arrow `a`),
/// including the identity.
pub fn arrow_automorphisms(q: &Quiver) -> Vec<Vec<usize>> {
    let n = q.vertex_count();
    let classes = parallel_classes(q);
    let mut out = Vec::new();
    for perm in permutations(n) {
        // Vertex permutation must carry each class onto a class of equal size.
        let mut images = Vec::with_capacity(classes.len());
        let mut ok = true;
        for ((s, t), members) in &classes {
            match classes.iter().find(|((s2, t2), _)| *s2 == perm[*s] && *t2 == perm[*t]) {
                Some((_, target)) if target.len() == members.len() => images.push(target.clone()),
                _ => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        let mut partial = vec![vec![usize::MAX; q.arrows().len()]];
        for (((_, _), members), target) in classes.iter().zip(&images) {
            let mut next = Vec::new();
            for g in &partial {
                for p in permutations(members.len()) {
                    let mut h = g.clone();
                    for (i, &a) in members.iter().enumerate() {
                        h[a] = target[p[i]];
                    }
                    next.push(h);
                }
            }
            partial = next;
        }
        out.extend(partial);
    }
    out
}

/// Arrows grouped by (source, target), classes in order of first arrow.
fn parallel_classes(q: &Quiver) -> Vec<((usize, usize), Vec<usize>)> {
    let mut classes: Vec<((usize, usize), Vec<usize>)> = Vec::new();
    for (id, a) in q.arrows().iter().enumerate() {
        let key = (a.source, a.target);
        match classes.iter_mut().find(|(k, _)| *k == key) {
            Some((_, members)) => members.push(id),
            None => classes.push((key, vec![id])),
        }
    }
    classes
}

/// Arrow-id words of all paths with length in `2..=max_len`, shortest first,
/// then lexicographic.
pub fn candidate_relations(q: &Quiver, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<usize>> = (0..q.arrows().len()).map(|a| vec![a]).collect();
    for len in 2..=max_len {
        let mut next = Vec::new();
        for w in &layer {
            let t = q.arrow(*w.last().unwrap()).target;
            for (id, a) in q.arrows().iter().enumerate() {
                if a.source == t {
                    let mut x = w.clone();
                    x.push(id);
                    next.push(x);
                }
            }
        }
        next.sort();
        if len >= 2 {
            out.extend(next.iter().cloned());
        }
        layer = next;
    }
    out
}

fn contains_factor(word: &[usize], factor: &[usize]) -> bool {
    factor.len() <= word.len() && word.windows(factor.len()).any(|w| w == factor)
}

fn apply(g: &[usize], relations: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = relations.iter().map(|w| w.iter().map(|&a| g[a]).collect()).collect();
    out.sort();
    out
}

/// Calls `visit` with every admissible factor-antichain of relation words of
/// length `2..=max_len` on `q`, one per orbit of the automorphism group.
/// Each set is passed sorted.
pub fn for_each_relation_set(q: &Quiver, max_len: usize, mut visit: impl FnMut(&[Vec<usize>])) {
    let candidates = candidate_relations(q, max_len);
    let group = arrow_automorphisms(q);
    let mut chosen: Vec<Vec<usize>> = Vec::new();
    search(q, &candidates, 0, &mut chosen, &group, &mut visit);
}

fn search(
    q: &Quiver,
    candidates: &[Vec<usize>],
    start: usize,
    chosen: &mut Vec<Vec<usize>>,
    group: &[Vec<usize>],
    visit: &mut impl FnMut(&[Vec<usize>]),
) {
    // Remaining candidates that are still eligible as generators.
    let open: Vec<usize> = (start..candidates.len())
        .filter(|&i| !chosen.iter().any(|c| contains_factor(&candidates[i], c)))
        .collect();

    // Admissibility is monotone in the forbidden set; if even forbidding every
    // open candidate leaves infinitely many paths, no completion works.
    let mut everything = chosen.clone();
    everything.extend(open.iter().map(|&i| candidates[i].clone()));
    if !is_admissible(q, &everything) {
        return;
    }

    let Some(&next) = open.first() else {
        let mut sorted = chosen.clone();
        sorted.sort();
        if group.iter().all(|g| apply(g, &sorted) >= sorted) {
            visit(&sorted);
        }
        return;
    };
    chosen.push(candidates[next].clone());
    search(q, candidates, next + 1, chosen, group, visit);
    chosen.pop();
    search(q, candidates, next + 1, chosen, group, visit);
}

/// Every algebra on a single (canonical) quiver within the relation-length bound.
pub fn algebras_on(q: &Quiver, max_relation_length: usize) -> Vec<MonomialAlgebra> {
    let mut out = Vec::new();
    for_each_relation_set(q, max_relation_length, |rels| {
        out.push(MonomialAlgebra::from_words(q.clone(), rels).expect("admissible by construction"));
    });
    out
}

/// Streams the corpus in canonical order.
pub fn for_each_monomial_algebra(bounds: &CorpusBounds, mut visit: impl FnMut(MonomialAlgebra)) {
    for q in quivers(bounds.max_vertices, bounds.max_arrows) {
        for a in algebras_on(&q, bounds.max_relation_length) {
            visit(a);
        }
    }
}

pub fn enumerate_monomial_algebras(bounds: &CorpusBounds) -> Vec<MonomialAlgebra> {
    let mut out = Vec::new();
    for_each_monomial_algebra(bounds, |a| out.push(a));
    out
}

/// Encoding of the presentation that is minimal over all relabellings of
/// vertices and of parallel arrows. Equal encodings mean isomorphic presentations.
pub fn canonical_form(a: &MonomialAlgebra) -> Vec<u8> {
    let q = a.quiver();
    let n = q.vertex_count();
    let classes = parallel_classes(q);
    let words = a.relation_words();
    let mut best: Option<Vec<u8>> = None;
    for perm in permutations(n) {
        // Image classes keyed by permuted endpoints, sorted so arrows get a
        // canonical (source, target, slot) label.
        let mut keyed: Vec<((usize, usize), &Vec<usize>)> = classes
            .iter()
            .map(|((s, t), members)| ((perm[*s], perm[*t]), members))
            .collect();
        keyed.sort_by_key(|(k, _)| *k);
        let mut partial: Vec<Vec<(u8, u8, u8)>> = vec![vec![(0, 0, 0); q.arrows().len()]];
        for ((s, t), members) in &keyed {
            let mut next = Vec::new();
            for g in &partial {
                for p in permutations(members.len()) {
                    let mut h = g.clone();
                    for (i, &arrow) in members.iter().enumerate() {
                        h[arrow] = (*s as u8, *t as u8, p[i] as u8);
                    }
                    next.push(h);
                }
            }
            partial = next;
        }
        for label in partial {
            let mut arrows: Vec<(u8, u8, u8)> = label.clone();
            arrows.sort();
            let mut rels: Vec<Vec<(u8, u8, u8)>> =
                words.iter().map(|w| w.iter().map(|&x| label[x]).collect()).collect();
            rels.sort();
            let mut enc = Vec::with_capacity(4 + 3 * arrows.len() + 8 * rels.len());
            enc.push(n as u8);
            enc.push(arrows.len() as u8);
            for (s, t, k) in &arrows {
                enc.extend_from_slice(&[*s, *t, *k]);
            }
            enc.push(rels.len() as u8);
            for r in &rels {
                enc.push(r.len() as u8);
                for (s, t, k) in r {
                    enc.extend_from_slice(&[*s, *t, *k]);
                }
            }
            if best.as_ref().is_none_or(|b| enc < *b) {
                best = Some(enc);
            }
        }
    }
    best.unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(0).len(), 1);
        assert_eq!(permutations(4).len(), 24);
    }

    #[test]
    fn one_vertex_one_arrow_length_three() {
        let b = CorpusBounds::new(1, 1, 3).unwrap();
        let corpus = enumerate_monomial_algebras(&b);
        let dims: Vec<usize> = corpus.iter().map(MonomialAlgebra::dim).collect();
        // K, K[x]/x^2, K[x]/x^3.
        assert_eq!(dims, vec![1, 2, 3]);
    }

    #[test]
    fn arrowless_bounds() {
        let b = CorpusBounds::new(1, 0, 2).unwrap();
        assert_eq!(enumerate_monomial_algebras(&b).len(), 1);
    }

    #[test]
    fn bounds_validation() {
        assert!(CorpusBounds::new(0, 1, 2).is_err());
        assert!(CorpusBounds::new(1, 1, 1).is_err());
    }

    #[test]
    fn canonical_form_relabelling() {
        let a = fixtures::paper_example();
        let form = canonical_form(&a);
        let q = a.quiver().permute_vertices(&[3, 0, 4, 1, 2]);
        let b = MonomialAlgebra::from_words(q, &a.relation_words()).unwrap();
        assert_eq!(canonical_form(&b), form);

        let fwd = MonomialAlgebra::from_words(Quiver::from_edges(2, &[(0, 1)]).unwrap(), &[]).unwrap();
        let bwd = MonomialAlgebra::from_words(Quiver::from_edges(2, &[(1, 0)]).unwrap(), &[]).unwrap();
        assert_eq!(canonical_form(&fwd), canonical_form(&bwd));

        let q = Quiver::from_edges(1, &[(0, 0)]).unwrap();
        let x2 = MonomialAlgebra::from_words(q.clone(), &[vec![0, 0]]).unwrap();
        let x3 = MonomialAlgebra::from_words(q, &[vec![0, 0, 0]]).unwrap();
        assert_ne!(canonical_form(&x2), canonical_form(&x3));
    }

    #[test]
    fn parallel_arrows_are_interchangeable() {
        let q = Quiver::from_edges(1, &[(0, 0), (0, 0)]).unwrap();
        let a = MonomialAlgebra::from_words(q.clone(), &[vec![0, 0], vec![1, 1], vec![0, 1]]).unwrap();
        let b = MonomialAlgebra::from_words(q, &[vec![0, 0], vec![1, 1], vec![1, 0]]).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
    }

    #[test]
    fn lower_bounds_are_below_measured_sizes() {
        for (v, e, l) in [(1, 1, 3), (2, 2, 3), (1, 2, 2), (3, 3, 2)] {
            let b = CorpusBounds::new(v, e, l).unwrap();
            assert!(corpus_size_lower_bound(&b) <= enumerate_monomial_algebras(&b).len() as u128);
        }
        let stated = CorpusBounds::default();
        assert_eq!(corpus_size_lower_bound(&stated), (1u128 << 60) / 120);
    }

    #[test]
    fn small_quiver_counts() {
        // Connected quivers with two vertices and at most one arrow: only 0 -> 1.
        assert_eq!(quivers(2, 1).iter().filter(|q| q.vertex_count() == 2).count(), 1);
        // One vertex, up to two arrows: point, one loop, two loops.
        assert_eq!(quivers(1, 2).len(), 3);
    }
}
