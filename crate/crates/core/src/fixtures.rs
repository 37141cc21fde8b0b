//! Built-in algebras.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::monomial::MonomialAlgebra;
use crate::quiver::{Arrow, Quiver};

/// Five vertices, arrows `a1: 1->2`, `a2: 3->2`, `a3: 2->4`, `a4: 2->5`
/// (1-based labels), relations `a1 a3` and `a2 a4`. Monomial, dominant
/// dimension one, not Nakayama.
pub fn paper_example() -> MonomialAlgebra {
    let arrows: Vec<Arrow> = [("a1", 1, 2), ("a2", 3, 2), ("a3", 2, 4), ("a4", 2, 5)]
        .into_iter()
        .map(|(name, s, t)| Arrow {
            name: name.to_string(),
            source: s - 1,
            target: t - 1,
        })
        .collect();
    let quiver = Quiver::new(5, arrows).expect("valid quiver");
    MonomialAlgebra::from_words(quiver, &[vec![0, 2], vec![1, 3]]).expect("admissible")
}

/// `K[x]/(x^2)`.
pub fn dual_numbers() -> MonomialAlgebra {
    let quiver = Quiver::from_edges(1, &[(0, 0)]).expect("valid quiver");
    MonomialAlgebra::from_words(quiver, &[vec![0, 0]]).expect("admissible")
}

/// Path algebra of the oriented line with `n` vertices, no relations.
pub fn line(n: usize) -> MonomialAlgebra {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    let quiver = Quiver::from_edges(n, &edges).expect("valid quiver");
    MonomialAlgebra::from_words(quiver, &[]).expect("acyclic")
}

/// The field itself: one vertex, no arrows.
pub fn point() -> MonomialAlgebra {
    line(1)
}
