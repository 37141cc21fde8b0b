//! The worked five-vertex example as a summary record.

use serde::Serialize;

use domdim_core::homological::{
    base_algebra, dominant_dimension, double_centralizer_check, minimal_faithful_proj_inj, DomDim, DEFAULT_CUTOFF,
};
use domdim_core::nakayama::algebra_to_kupisch;
use domdim_core::{fixtures, MonomialAlgebra, Rational, Side, Sides};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub dim: usize,
    pub domdim: String,
    pub nakayama: bool,
    pub qf2_right: bool,
    /// 1-based vertices of the right minimal faithful projective-injective module.
    pub minimal_faithful_right: Option<Vec<usize>>,
    /// 1-based vertices of the left one, which define `f`.
    pub minimal_faithful_left: Option<Vec<usize>>,
    pub base_algebra_dim: Option<usize>,
    pub base_algebra_radical_dim: Option<usize>,
    pub base_algebra_components: Option<usize>,
    pub double_centraliser: bool,
}

fn one_based(v: Option<Vec<usize>>) -> Option<Vec<usize>> {
    v.map(|vs| vs.into_iter().map(|x| x + 1).collect())
}

pub fn summarize(a: &MonomialAlgebra) -> (Summary, DomDim) {
    let d = dominant_dimension::<Rational>(a, DEFAULT_CUTOFF);
    let base = base_algebra::<Rational>(a).ok();
    let summary = Summary {
        dim: a.dim(),
        domdim: d.to_string(),
        nakayama: algebra_to_kupisch(a).is_some(),
        qf2_right: a.is_qf2(Sides::Right),
        minimal_faithful_right: one_based(minimal_faithful_proj_inj(a, Side::Right)),
        minimal_faithful_left: one_based(minimal_faithful_proj_inj(a, Side::Left)),
        base_algebra_dim: base.as_ref().map(|b| b.dim()),
        base_algebra_radical_dim: base.as_ref().map(|b| b.radical_basis().len()),
        base_algebra_components: base.as_ref().map(|b| b.gabriel_quiver().components().len()),
        double_centraliser: double_centralizer_check::<Rational>(a).holds,
    };
    (summary, d)
}

pub fn paper_example() -> (Summary, DomDim) {
    summarize(&fixtures::paper_example())
}

impl Summary {
    /// `K x K` style description of a semisimple base algebra, else its dimension.
    pub fn base_description(&self) -> String {
        match (
            self.base_algebra_dim,
            self.base_algebra_radical_dim,
            self.base_algebra_components,
        ) {
            (Some(_), Some(0), Some(c)) => vec!["K"; c].join(" x "),
            (Some(d), _, _) => format!("dimension {d}"),
            _ => "none".to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example() {
        let (s, d) = paper_example();
        assert_eq!(d, DomDim::Finite(1));
        assert!(!s.nakayama);
        assert!(!s.qf2_right);
        assert_eq!(s.minimal_faithful_right, Some(vec![1, 3]));
        assert_eq!(s.minimal_faithful_left, Some(vec![4, 5]));
        assert_eq!(s.base_algebra_dim, Some(2));
        assert_eq!(s.base_description(), "K x K");
        assert!(!s.double_centraliser);
    }
}
