mod common;

use common::{bareiss_rank, brute_force_paths, corpus};
use domdim_core::homological::{dominant_dimension, is_selfinjective, DomDim, DEFAULT_CUTOFF};
use domdim_core::linalg::Matrix;
use domdim_core::repr::Representation;
use domdim_core::{fixtures, Fp, MonomialAlgebra, Rational, Side};
use proptest::prelude::*;

fn small_corpus() -> Vec<MonomialAlgebra> {
    let mut all = corpus(3, 3, 2);
    all.extend(corpus(2, 2, 3));
    all.push(fixtures::paper_example());
    all
}

#[test]
fn path_basis_matches_brute_force() {
    for a in small_corpus() {
        let top = a.loewy_bound();
        for len in 0..=top + 1 {
            let mut expected = brute_force_paths(&a, len);
            if len == 0 {
                expected = (0..a.vertex_count()).map(|_| Vec::new()).collect();
            }
            let mut got: Vec<Vec<usize>> = a
                .basis()
                .iter()
                .filter(|p| p.len() == len)
                .map(|p| p.arrows.to_vec())
                .collect();
            expected.sort();
            got.sort();
            assert_eq!(got, expected, "length {len} of {:?}", a.relation_words());
        }
    }
}

#[test]
fn yoneda_dimensions() {
    for a in small_corpus() {
        let n = a.vertex_count();
        let mut targets: Vec<Representation<'_, Rational>> = vec![Representation::regular(&a)];
        for v in 0..n {
            targets.push(Representation::injective(&a, v));
            targets.push(Representation::simple(&a, v));
        }
        for v in 0..n {
            let p = Representation::<Rational>::projective(&a, v);
            let i = Representation::<Rational>::injective(&a, v);
            for m in &targets {
                assert_eq!(p.hom_space(m).len(), m.dims()[v]);
                assert_eq!(m.hom_space(&i).len(), m.dims()[v]);
            }
        }
    }
}

#[test]
fn socle_of_projectives_is_spanned_by_maximal_paths() {
    for a in small_corpus() {
        let op = a.opposite();
        for v in 0..a.vertex_count() {
            let maximal: usize = a
                .paths_from(v)
                .iter()
                .filter(|&&p| a.right_extensions(p).is_empty())
                .count();
            let p = Representation::<Rational>::projective(&a, v);
            assert_eq!(p.socle_dims().iter().sum::<usize>(), maximal);
            assert_eq!(a.socle_criterion(v, Side::Right), maximal == 1);
            let left: usize = Representation::<Rational>::projective(&op, v).socle_dims().iter().sum();
            assert_eq!(a.socle_criterion(v, Side::Left), left == 1);
        }
    }
}

#[test]
fn injectives_are_duals_of_opposite_projectives() {
    for a in small_corpus() {
        let op = a.opposite();
        for v in 0..a.vertex_count() {
            let i = Representation::<Rational>::injective(&a, v);
            let d = Representation::<Rational>::projective(&op, v).dual(&a);
            assert_eq!(i.dims(), d.dims());
            assert!(i.is_isomorphic_local(&d));
            assert!(i.satisfies_relations());
        }
    }
}

#[test]
fn dominant_dimension_does_not_depend_on_the_field() {
    for a in small_corpus() {
        let q = dominant_dimension::<Rational>(&a, DEFAULT_CUTOFF);
        assert_eq!(dominant_dimension::<Fp<2>>(&a, DEFAULT_CUTOFF), q);
        assert_eq!(dominant_dimension::<Fp<101>>(&a, DEFAULT_CUTOFF), q);
    }
}

#[test]
fn dominant_dimension_zero_matches_first_term() {
    // domdim = 0 iff I(soc A) has a non-projective summand, read off the full module.
    for a in small_corpus() {
        let env = Representation::<Rational>::regular(&a).injective_envelope().unwrap();
        let first_projective = env.module.homological_status().unwrap().is_projective;
        let d = dominant_dimension::<Rational>(&a, DEFAULT_CUTOFF);
        assert_eq!(d == DomDim::Finite(0), !first_projective, "{:?}", a.relation_words());
        if is_selfinjective(&a) {
            assert_eq!(d, DomDim::Infinity);
        }
    }
}

proptest! {
    #[test]
    fn rank_agrees_with_integer_elimination(
        rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 1..6)
    ) {
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let m = Matrix::<Rational>::from_i64_rows(&refs);
        prop_assert_eq!(m.rank(), bareiss_rank(&rows));
        prop_assert_eq!(m.rank() + m.kernel().cols(), 5);
        prop_assert!(m.mul(&m.kernel()).is_zero());
        prop_assert!(Matrix::<Fp<7>>::from_i64_rows(&refs).rank() <= m.rank());
    }
}
