//! Minimal injective coresolutions, dominant dimension, the minimal faithful
//! projective-injective module, the base algebra `fAf` and the double
//! centraliser test.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::endo::BasicAlgebra;
use crate::error::Error;
use crate::field::Field;
use crate::linalg::Matrix;
use crate::monomial::{MonomialAlgebra, Side};
use crate::repr::{Morphism, Representation};

pub const DEFAULT_CUTOFF: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DomDim {
    Finite(usize),
    /// Every computed term was projective; the coresolution was cut off.
    AtLeast(usize),
    Infinity,
}

impl DomDim {
    /// `AtLeast(c)` answers from what was computed: true iff `c >= n`.
    pub fn at_least(self, n: usize) -> bool {
        match self {
            DomDim::Finite(k) | DomDim::AtLeast(k) => k >= n,
            DomDim::Infinity => true,
        }
    }
}

impl fmt::Display for DomDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomDim::Finite(k) => write!(f, "{k}"),
            DomDim::AtLeast(k) => write!(f, ">={k}"),
            DomDim::Infinity => write!(f, "infinity"),
        }
    }
}

/// `0 -> A -> I_0 -> I_1 -> ...`, with `embeddings[k]: Omega^{-k} A -> I_k`
/// and `cokernels[k] = I_k / Omega^{-k} A = Omega^{-(k+1)} A`.
/// `I_k` is the sum of `I(v)^{multiplicities[k][v]}`.
pub struct Coresolution<'a, F> {
    pub terms: Vec<Representation<'a, F>>,
    pub embeddings: Vec<Morphism<F>>,
    pub multiplicities: Vec<Vec<usize>>,
    /// One per term, except that a run stopped early by its caller omits the last.
    pub cokernels: Vec<Representation<'a, F>>,
    /// True when a cokernel vanished, so the listed terms are the whole coresolution.
    pub complete: bool,
    pub cutoff: usize,
}

impl<F: Field> Coresolution<'_, F> {
    pub fn projective_flags(&self) -> Vec<bool> {
        let Some(first) = self.terms.first() else {
            return Vec::new();
        };
        let projective = injective_is_projective(first.algebra());
        self.multiplicities
            .iter()
            .map(|m| m.iter().zip(&projective).all(|(&k, &p)| k == 0 || p))
            .collect()
    }
}

/// Per vertex, whether `I(v)` is projective.
fn injective_is_projective(a: &MonomialAlgebra) -> Vec<bool> {
    (0..a.vertex_count())
        .map(|v| {
            Representation::<crate::Rational>::injective(a, v)
                .homological_status()
                .is_ok_and(|s| s.is_projective)
        })
        .collect()
}

/// Coresolution of the regular module, stopped at a zero cokernel or after
/// `cutoff` terms.
pub fn injective_coresolution<F: Field>(a: &MonomialAlgebra, cutoff: usize) -> Coresolution<'_, F> {
    injective_coresolution_until(a, cutoff, |_| false)
}

/// As [`injective_coresolution`], but stops after the first term whose
/// multiplicities satisfy `stop`, without forming its cokernel.
fn injective_coresolution_until<'a, F: Field>(
    a: &'a MonomialAlgebra,
    cutoff: usize,
    stop: impl Fn(&[usize]) -> bool,
) -> Coresolution<'a, F> {
    let mut current = Representation::regular(a);
    let mut res = Coresolution {
        terms: Vec::new(),
        embeddings: Vec::new(),
        multiplicities: Vec::new(),
        cokernels: Vec::new(),
        complete: false,
        cutoff,
    };
    while res.terms.len() < cutoff {
        let env = current.injective_envelope().expect("nonzero by loop condition");
        let halt = stop(&env.multiplicities);
        res.multiplicities.push(env.multiplicities);
        if halt {
            res.terms.push(env.module);
            res.embeddings.push(env.embedding);
            break;
        }
        let cokernel = env.module.cokernel(&env.embedding).module;
        res.terms.push(env.module);
        res.embeddings.push(env.embedding);
        res.cokernels.push(cokernel.clone());
        if cokernel.is_zero() {
            res.complete = true;
            break;
        }
        current = cokernel;
    }
    res
}

pub fn is_selfinjective(a: &MonomialAlgebra) -> bool {
    projective_injective_vertices(a, Side::Right).len() == a.vertex_count()
}

/// Vertices whose indecomposable projective on `side` is also injective.
pub fn projective_injective_vertices(a: &MonomialAlgebra, side: Side) -> Vec<usize> {
    match side {
        Side::Right => (0..a.vertex_count())
            .filter(|&v| {
                Representation::<crate::Rational>::projective(a, v)
                    .homological_status()
                    .is_ok_and(|s| s.is_injective)
            })
            .collect(),
        Side::Left => projective_injective_vertices(&a.opposite(), Side::Right),
    }
}

pub fn dominant_dimension<F: Field>(a: &MonomialAlgebra, cutoff: usize) -> DomDim {
    if is_selfinjective(a) {
        return DomDim::Infinity;
    }
    let projective = injective_is_projective(a);
    // soc(A_A) is spanned by the paths with no nonzero right extension, which
    // gives the multiplicities of I_0 without building it.
    let mut first = vec![0; a.vertex_count()];
    for p in 0..a.dim() {
        if a.right_extensions(p).is_empty() {
            first[a.path(p).target] += 1;
        }
    }
    if first.iter().zip(&projective).any(|(&k, &p)| k > 0 && !p) {
        return DomDim::Finite(0);
    }
    let res = injective_coresolution_until::<F>(a, cutoff, |m| m.iter().zip(&projective).any(|(&k, &p)| k > 0 && !p));
    let flags = res.projective_flags();
    match flags.iter().position(|&p| !p) {
        Some(k) => DomDim::Finite(k),
        None if res.complete => DomDim::Infinity,
        None => DomDim::AtLeast(cutoff),
    }
}

/// The vertices of the minimal faithful projective-injective module on `side`,
/// or `None` when the sum of all projective-injectives is not faithful.
pub fn minimal_faithful_proj_inj(a: &MonomialAlgebra, side: Side) -> Option<Vec<usize>> {
    match side {
        Side::Right => {
            let vertices = projective_injective_vertices(a, Side::Right);
            if vertices.is_empty() {
                return None;
            }
            let parts: Vec<Representation<'_, crate::Rational>> =
                vertices.iter().map(|&v| Representation::projective(a, v)).collect();
            Representation::direct_sum(a, &parts).is_faithful().then_some(vertices)
        }
        Side::Left => minimal_faithful_proj_inj(&a.opposite(), Side::Right),
    }
}

/// `fAf` for the left minimal faithful projective-injective `Af`.
pub fn base_algebra<F: Field>(a: &MonomialAlgebra) -> Result<BasicAlgebra<F>, Error> {
    let vertices = minimal_faithful_proj_inj(a, Side::Left).ok_or(Error::DomDimZero)?;
    Ok(BasicAlgebra::from_path_subalgebra(a, &vertices))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DoubleCentralizer {
    pub holds: bool,
    /// `(dim A, dim End_{fAf}(Af))`; absent when there is no faithful
    /// projective-injective module.
    pub dims: Option<(usize, usize)>,
}

/// Compares `dim A` with the dimension of the commutant of the right
/// `fAf`-action on `Af`. Left multiplication embeds `A` in that commutant
/// because `Af` is faithful, so equal dimensions mean `A = End_{fAf}(Af)`.
pub fn double_centralizer_check<F: Field>(a: &MonomialAlgebra) -> DoubleCentralizer {
    let Some(vertices) = minimal_faithful_proj_inj(a, Side::Left) else {
        return DoubleCentralizer {
            holds: false,
            dims: None,
        };
    };
    // Af splits as the sum of A e_v over v in the support of f, and any
    // commuting map preserves each summand because e_v lies in fAf.
    let columns: Vec<Vec<usize>> = vertices.iter().map(|&v| a.paths_to(v).to_vec()).collect();
    let mut position = vec![usize::MAX; a.dim()];
    for col in &columns {
        for (k, &p) in col.iter().enumerate() {
            position[p] = k;
        }
    }
    let mut offset = vec![0; vertices.len() + 1];
    for (k, col) in columns.iter().enumerate() {
        offset[k + 1] = offset[k] + col.len() * col.len();
    }
    let unknowns = offset[vertices.len()];
    let var = |k: usize, r: usize, c: usize| offset[k] + r * columns[k].len() + c;

    // For b in e_v A e_w (v, w in the support), R_b: A e_v -> A e_w, p -> p b.
    // Require Phi_w R_b = R_b Phi_v.
    let mut rows: Vec<Vec<F>> = Vec::new();
    for (kv, &v) in vertices.iter().enumerate() {
        for (kw, &w) in vertices.iter().enumerate() {
            for &b in a.paths_from(v).iter().filter(|&&b| a.path(b).target == w) {
                let (dv, dw) = (columns[kv].len(), columns[kw].len());
                let mut rb = Matrix::<F>::zeros(dw, dv);
                for (c, &p) in columns[kv].iter().enumerate() {
                    if let Some(q) = a.multiply(p, b) {
                        rb[(position[q], c)] = F::one();
                    }
                }
                for r in 0..dw {
                    for c in 0..dv {
                        let mut eq = vec![F::zero(); unknowns];
                        for k in 0..dw {
                            let x = rb[(k, c)];
                            if !x.is_zero() {
                                eq[var(kw, r, k)] = eq[var(kw, r, k)] + x;
                            }
                        }
                        for k in 0..dv {
                            let x = rb[(r, k)];
                            if !x.is_zero() {
                                eq[var(kv, k, c)] = eq[var(kv, k, c)] - x;
                            }
                        }
                        if eq.iter().any(|x| !x.is_zero()) {
                            rows.push(eq);
                        }
                    }
                }
            }
        }
    }
    let rank = if rows.is_empty() {
        0
    } else {
        Matrix::from_rows(&rows).rank()
    };
    let dim_end = unknowns - rank;
    DoubleCentralizer {
        holds: dim_end == a.dim(),
        dims: Some((a.dim(), dim_end)),
    }
}

/// Dimension of `eAe` for the right minimal faithful projective-injective `eA`.
pub fn right_base_dim(a: &MonomialAlgebra) -> Option<usize> {
    let vertices = minimal_faithful_proj_inj(a, Side::Right)?;
    Some(
        (0..a.dim())
            .filter(|&p| {
                let path = a.path(p);
                vertices.contains(&path.source) && vertices.contains(&path.target)
            })
            .count(),
    )
}
