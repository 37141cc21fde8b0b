#![allow(dead_code)]

use domdim_core::enumerate::{enumerate_monomial_algebras, CorpusBounds};
use domdim_core::{Arrow, MonomialAlgebra, Quiver};

pub fn corpus(v: usize, e: usize, l: usize) -> Vec<MonomialAlgebra> {
    enumerate_monomial_algebras(&CorpusBounds::new(v, e, l).unwrap())
}

/// The same algebra with vertex `v` renamed `vperm[v]` and the arrows listed
/// in the order `order` (new position `i` holds old arrow `order[i]`).
pub fn relabel(a: &MonomialAlgebra, vperm: &[usize], order: &[usize]) -> MonomialAlgebra {
    let q = a.quiver();
    let arrows: Vec<Arrow> = order
        .iter()
        .map(|&old| {
            let x = q.arrow(old);
            Arrow {
                name: x.name.clone(),
                source: vperm[x.source],
                target: vperm[x.target],
            }
        })
        .collect();
    let mut position = vec![0; order.len()];
    for (new, &old) in order.iter().enumerate() {
        position[old] = new;
    }
    let words: Vec<Vec<usize>> = a
        .relation_words()
        .iter()
        .map(|w| w.iter().map(|&x| position[x]).collect())
        .collect();
    MonomialAlgebra::from_words(Quiver::new(q.vertex_count(), arrows).unwrap(), &words).unwrap()
}

/// Rank by fraction-free elimination over the integers.
pub fn bareiss_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let (nr, nc) = (m.len(), m.first().map_or(0, Vec::len));
    let mut rank = 0;
    let mut prev = 1i128;
    for c in 0..nc {
        let Some(p) = (rank..nr).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..nr {
            for k in c + 1..nc {
                m[r][k] = (m[rank][c] * m[r][k] - m[r][c] * m[rank][k]) / prev;
            }
            m[r][c] = 0;
        }
        prev = m[rank][c];
        rank += 1;
    }
    rank
}

/// Composable arrow words of length `len` avoiding every relation as a factor.
pub fn brute_force_paths(a: &MonomialAlgebra, len: usize) -> Vec<Vec<usize>> {
    let q = a.quiver();
    let words = a.relation_words();
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &layer {
            for x in 0..q.arrows().len() {
                if w.last().is_some_and(|&y| q.arrow(y).target != q.arrow(x).source) {
                    continue;
                }
                let mut longer = w.clone();
                longer.push(x);
                if !words.iter().any(|r| longer.windows(r.len()).any(|f| f == r.as_slice())) {
                    next.push(longer);
                }
            }
        }
        layer = next;
    }
    layer
}
