//! Right modules over a monomial algebra, as quiver representations.
//!
//! A right module `M` has vertex spaces `M_v = M e_v`; an arrow `a: i -> j`
//! acts by `M_i -> M_j`, `m -> m·a`. Maps are stored as `dim M_j x dim M_i`
//! matrices acting on column vectors, so the path `a1 a2` acts by `A2 * A1`.
//!
//! Simple modules are one-dimensional (the algebra is split basic), so the
//! multiplicities of indecomposable summands in envelopes and covers are read
//! off the dimension vectors of socles and tops.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::field::Field;
use crate::linalg::{Coordinates, Matrix, Splitting};
use crate::monomial::{MonomialAlgebra, PathId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModuleKind {
    Projective,
    Injective,
    Simple,
}

#[derive(Clone)]
pub struct Representation<'a, F> {
    algebra: &'a MonomialAlgebra,
    dims: Vec<usize>,
    maps: Vec<Matrix<F>>,
}

/// A module homomorphism, one matrix per vertex (`dim N_v x dim M_v`).
#[derive(Clone, PartialEq, Eq)]
pub struct Morphism<F> {
    pub blocks: Vec<Matrix<F>>,
}

impl<F: Field> fmt::Debug for Morphism<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.blocks).finish()
    }
}

#[derive(Clone)]
pub struct Submodule<'a, F> {
    pub module: Representation<'a, F>,
    pub inclusion: Morphism<F>,
}

#[derive(Clone)]
pub struct Quotient<'a, F> {
    pub module: Representation<'a, F>,
    pub projection: Morphism<F>,
}

/// Injective envelope `M -> ⊕_v I(v)^{m_v}`.
#[derive(Clone)]
pub struct Envelope<'a, F> {
    pub module: Representation<'a, F>,
    pub embedding: Morphism<F>,
    pub multiplicities: Vec<usize>,
}

/// Projective cover `⊕_v P(v)^{m_v} -> M`.
#[derive(Clone)]
pub struct Cover<'a, F> {
    pub module: Representation<'a, F>,
    pub projection: Morphism<F>,
    pub multiplicities: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HomologicalStatus {
    pub is_projective: bool,
    pub is_injective: bool,
}

impl<F: Field> fmt::Debug for Representation<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Representation")
            .field("dims", &self.dims)
            .field("maps", &self.maps)
            .finish()
    }
}

impl<F: Field> PartialEq for Representation<'_, F> {
    fn eq(&self, other: &Self) -> bool {
        core::ptr::eq(self.algebra, other.algebra) && self.dims == other.dims && self.maps == other.maps
    }
}

/// Paths starting at `v`, grouped by target vertex: the basis of `e_v A`.
pub fn projective_basis(a: &MonomialAlgebra, v: usize) -> Vec<Vec<PathId>> {
    let mut out = vec![Vec::new(); a.vertex_count()];
    for &p in a.paths_from(v) {
        out[a.path(p).target].push(p);
    }
    out
}

/// Paths ending at `v`, grouped by source vertex: the dual basis of `D(A e_v)`.
pub fn injective_basis(a: &MonomialAlgebra, v: usize) -> Vec<Vec<PathId>> {
    let mut out = vec![Vec::new(); a.vertex_count()];
    for &p in a.paths_to(v) {
        out[a.path(p).source].push(p);
    }
    out
}

fn positions(a: &MonomialAlgebra, basis: &[Vec<PathId>]) -> Vec<usize> {
    let mut pos = vec![usize::MAX; a.dim()];
    for group in basis {
        for (i, &p) in group.iter().enumerate() {
            pos[p] = i;
        }
    }
    pos
}

impl<F: Field> Morphism<F> {
    pub fn zero(source_dims: &[usize], target_dims: &[usize]) -> Self {
        Morphism {
            blocks: source_dims
                .iter()
                .zip(target_dims)
                .map(|(&s, &t)| Matrix::zeros(t, s))
                .collect(),
        }
    }

    pub fn identity(dims: &[usize]) -> Self {
        Morphism {
            blocks: dims.iter().map(|&d| Matrix::identity(d)).collect(),
        }
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &Morphism<F>) -> Morphism<F> {
        Morphism {
            blocks: self.blocks.iter().zip(&first.blocks).map(|(g, f)| g.mul(f)).collect(),
        }
    }

    pub fn add(&self, other: &Morphism<F>) -> Morphism<F> {
        Morphism {
            blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn scale(&self, s: F) -> Morphism<F> {
        Morphism {
            blocks: self.blocks.iter().map(|b| b.scale(s)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn is_injective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.rows())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.blocks.iter().all(Matrix::is_invertible)
    }

    /// All entries, vertex by vertex in row-major order.
    pub fn flatten(&self) -> Vec<F> {
        self.blocks.iter().flat_map(|b| b.entries().iter().copied()).collect()
    }

    pub fn rank_vector(&self) -> Vec<usize> {
        self.blocks.iter().map(Matrix::rank).collect()
    }
}

impl<'a, F: Field> Representation<'a, F> {
    /// Builds a representation and checks every relation acts by zero.
    pub fn new(algebra: &'a MonomialAlgebra, dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Option<Self> {
        let q = algebra.quiver();
        if dims.len() != q.vertex_count() || maps.len() != q.arrows().len() {
            return None;
        }
        for (a, m) in q.arrows().iter().zip(&maps) {
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] {
                return None;
            }
        }
        let rep = Representation { algebra, dims, maps };
        rep.satisfies_relations().then_some(rep)
    }

    pub fn zero(algebra: &'a MonomialAlgebra) -> Self {
        let dims = vec![0; algebra.vertex_count()];
        let maps = algebra.quiver().arrows().iter().map(|_| Matrix::zeros(0, 0)).collect();
        Representation { algebra, dims, maps }
    }

    pub fn algebra(&self) -> &'a MonomialAlgebra {
        self.algebra
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn map(&self, arrow: usize) -> &Matrix<F> {
        &self.maps[arrow]
    }

    pub fn satisfies_relations(&self) -> bool {
        self.algebra
            .relations()
            .iter()
            .all(|r| self.word_action(r.source, &r.arrows).is_zero())
    }

    fn word_action(&self, source: usize, arrows: &[usize]) -> Matrix<F> {
        let mut acc = Matrix::identity(self.dims[source]);
        for &a in arrows {
            acc = self.maps[a].mul(&acc);
        }
        acc
    }

    /// Matrix by which the basis path `p` acts, `M_{source} -> M_{target}`.
    pub fn path_action(&self, p: PathId) -> Matrix<F> {
        let path = self.algebra.path(p);
        self.word_action(path.source, &path.arrows)
    }

    /// Actions of every basis path, indexed by path id.
    pub fn path_actions(&self) -> Vec<Matrix<F>> {
        (0..self.algebra.dim()).map(|p| self.path_action(p)).collect()
    }

    pub fn standard(algebra: &'a MonomialAlgebra, kind: ModuleKind, v: usize) -> Self {
        match kind {
            ModuleKind::Projective => Self::projective(algebra, v),
            ModuleKind::Injective => Self::injective(algebra, v),
            ModuleKind::Simple => Self::simple(algebra, v),
        }
    }

    /// `e_v A`: paths from `v`, arrows acting by right concatenation.
    pub fn projective(algebra: &'a MonomialAlgebra, v: usize) -> Self {
        Self::truncated_projective(algebra, v, usize::MAX)
    }

    /// `e_v A / e_v J^len`: paths from `v` of length below `len`. Over a
    /// Nakayama algebra this is the uniserial module with top `S_v` and length `len`.
    pub fn truncated_projective(algebra: &'a MonomialAlgebra, v: usize, len: usize) -> Self {
        let mut basis = projective_basis(algebra, v);
        for group in &mut basis {
            group.retain(|&p| algebra.path(p).len() < len);
        }
        let pos = positions(algebra, &basis);
        let dims: Vec<usize> = basis.iter().map(Vec::len).collect();
        let maps = algebra
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(id, a)| {
                let mut m = Matrix::zeros(dims[a.target], dims[a.source]);
                for (col, &p) in basis[a.source].iter().enumerate() {
                    if let Some(q) = algebra.extend_right(p, id) {
                        if pos[q] != usize::MAX && algebra.path(q).len() < len {
                            m[(pos[q], col)] = F::one();
                        }
                    }
                }
                m
            })
            .collect();
        Representation { algebra, dims, maps }
    }

    /// `D(A e_v)`: duals `p*` of paths `p` ending at `v`, placed at the source of
    /// `p`; an arrow `a` sends `(a q)*` to `q*` and kills the rest.
    pub fn injective(algebra: &'a MonomialAlgebra, v: usize) -> Self {
        let basis = injective_basis(algebra, v);
        let pos = positions(algebra, &basis);
        let dims: Vec<usize> = basis.iter().map(Vec::len).collect();
        let maps = algebra
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(id, a)| {
                let mut m = Matrix::zeros(dims[a.target], dims[a.source]);
                for (col, &p) in basis[a.source].iter().enumerate() {
                    let path = algebra.path(p);
                    if path.arrows.first() == Some(&id) {
                        let rest = crate::quiver::Path {
                            source: a.target,
                            target: path.target,
                            arrows: path.arrows[1..].to_vec(),
                        };
                        let q = algebra.path_id(&rest).expect("factor of a nonzero path is nonzero");
                        m[(pos[q], col)] = F::one();
                    }
                }
                m
            })
            .collect();
        Representation { algebra, dims, maps }
    }

    pub fn simple(algebra: &'a MonomialAlgebra, v: usize) -> Self {
        let mut dims = vec![0; algebra.vertex_count()];
        dims[v] = 1;
        let maps = algebra
            .quiver()
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(dims[a.target], dims[a.source]))
            .collect();
        Representation { algebra, dims, maps }
    }

    /// The regular right module `A_A = ⊕_v e_v A`.
    pub fn regular(algebra: &'a MonomialAlgebra) -> Self {
        let parts: Vec<Self> = (0..algebra.vertex_count())
            .map(|v| Self::projective(algebra, v))
            .collect();
        Self::direct_sum(algebra, &parts)
    }

    pub fn direct_sum(algebra: &'a MonomialAlgebra, parts: &[Self]) -> Self {
        let n = algebra.vertex_count();
        let dims = (0..n).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let maps = (0..algebra.quiver().arrows().len())
            .map(|a| {
                let blocks: Vec<Matrix<F>> = parts.iter().map(|p| p.maps[a].clone()).collect();
                Matrix::direct_sum(&blocks)
            })
            .collect();
        Representation { algebra, dims, maps }
    }

    /// Submodule spanned at each vertex by the columns of `spanning[v]`
    /// (assumed closed under the arrow maps).
    pub fn submodule(&self, spanning: &[Matrix<F>]) -> Submodule<'a, F> {
        let bases: Vec<Matrix<F>> = spanning.iter().map(Matrix::column_basis).collect();
        let coords: Vec<Coordinates<F>> = bases.iter().map(Coordinates::new).collect();
        let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
        let maps = self
            .algebra
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(id, a)| {
                let image = self.maps[id].mul(&bases[a.source]);
                let cols: Vec<Vec<F>> = (0..image.cols())
                    .map(|c| coords[a.target].of(&image.column(c)))
                    .collect();
                Matrix::from_columns(dims[a.target], &cols)
            })
            .collect();
        Submodule {
            module: Representation {
                algebra: self.algebra,
                dims,
                maps,
            },
            inclusion: Morphism { blocks: bases },
        }
    }

    /// Quotient by the submodule spanned at each vertex by `spanning[v]`.
    pub fn quotient(&self, spanning: &[Matrix<F>]) -> Quotient<'a, F> {
        let splits: Vec<Splitting<F>> = spanning
            .iter()
            .zip(&self.dims)
            .map(|(s, &d)| Splitting::new(d, s))
            .collect();
        let projections: Vec<Matrix<F>> = splits.iter().map(Splitting::quotient_projection).collect();
        let dims: Vec<usize> = splits.iter().map(Splitting::codim).collect();
        let maps = self
            .algebra
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(id, a)| {
                projections[a.target]
                    .mul(&self.maps[id])
                    .mul(&splits[a.source].complement)
            })
            .collect();
        Quotient {
            module: Representation {
                algebra: self.algebra,
                dims,
                maps,
            },
            projection: Morphism { blocks: projections },
        }
    }

    /// Per vertex, the intersection of the kernels of all arrows leaving it.
    fn socle_spaces(&self) -> Vec<Matrix<F>> {
        let q = self.algebra.quiver();
        (0..q.vertex_count())
            .map(|v| {
                let mut stacked = Matrix::zeros(0, self.dims[v]);
                for (id, a) in q.arrows().iter().enumerate() {
                    if a.source == v {
                        stacked = stacked.vstack(&self.maps[id]);
                    }
                }
                stacked.kernel()
            })
            .collect()
    }

    /// Per vertex, the sum of the images of all arrows entering it.
    fn radical_spaces(&self) -> Vec<Matrix<F>> {
        let q = self.algebra.quiver();
        (0..q.vertex_count())
            .map(|v| {
                let mut joined = Matrix::zeros(self.dims[v], 0);
                for (id, a) in q.arrows().iter().enumerate() {
                    if a.target == v {
                        joined = joined.hstack(&self.maps[id]);
                    }
                }
                joined.column_basis()
            })
            .collect()
    }

    pub fn socle_dims(&self) -> Vec<usize> {
        self.socle_spaces().iter().map(Matrix::cols).collect()
    }

    pub fn top_dims(&self) -> Vec<usize> {
        self.radical_spaces()
            .iter()
            .zip(&self.dims)
            .map(|(r, &d)| d - r.cols())
            .collect()
    }

    pub fn socle(&self) -> Submodule<'a, F> {
        self.submodule(&self.socle_spaces())
    }

    pub fn radical(&self) -> Submodule<'a, F> {
        self.submodule(&self.radical_spaces())
    }

    pub fn top(&self) -> Quotient<'a, F> {
        self.quotient(&self.radical_spaces())
    }

    /// `M / soc(M)`; may be the zero module.
    pub fn mod_socle(&self) -> Representation<'a, F> {
        self.quotient(&self.socle_spaces()).module
    }

    /// Cokernel of a morphism into `self`.
    pub fn cokernel(&self, into_self: &Morphism<F>) -> Quotient<'a, F> {
        self.quotient(&into_self.blocks)
    }

    pub fn injective_envelope(&self) -> Result<Envelope<'a, F>, Error> {
        if self.is_zero() {
            return Err(Error::ZeroModule);
        }
        let a = self.algebra;
        let n = a.vertex_count();
        let socle = self.socle_spaces();
        let multiplicities: Vec<usize> = socle.iter().map(Matrix::cols).collect();
        let actions = self.path_actions();

        // Functionals on M_v restricting to a basis of soc(M)_v^*; each gives
        // a map M -> I(v), m -> sum over paths p ending at v of phi(m p) p*.
        let mut parts = Vec::new();
        let mut rows_per_vertex: Vec<Vec<Vec<F>>> = vec![Vec::new(); n];
        for v in 0..n {
            if multiplicities[v] == 0 {
                continue;
            }
            let functionals = Splitting::new(self.dims[v], &socle[v]).sub_coordinates();
            let basis = injective_basis(a, v);
            for k in 0..multiplicities[v] {
                let phi = Matrix::from_rows(&[functionals.row(k).to_vec()]);
                for (u, group) in basis.iter().enumerate() {
                    for &p in group {
                        rows_per_vertex[u].push(phi.mul(&actions[p]).row(0).to_vec());
                    }
                }
                parts.push(Self::injective(a, v));
            }
        }
        let module = Self::direct_sum(a, &parts);
        let blocks = (0..n)
            .map(|u| {
                if rows_per_vertex[u].is_empty() {
                    Matrix::zeros(0, self.dims[u])
                } else {
                    Matrix::from_rows(&rows_per_vertex[u])
                }
            })
            .collect();
        Ok(Envelope {
            module,
            embedding: Morphism { blocks },
            multiplicities,
        })
    }

    pub fn projective_cover(&self) -> Result<Cover<'a, F>, Error> {
        if self.is_zero() {
            return Err(Error::ZeroModule);
        }
        let a = self.algebra;
        let n = a.vertex_count();
        let radical = self.radical_spaces();
        let actions = self.path_actions();
        let mut multiplicities = vec![0; n];
        let mut parts = Vec::new();
        let mut cols_per_vertex: Vec<Vec<Vec<F>>> = vec![Vec::new(); n];
        for v in 0..n {
            let generators = Splitting::new(self.dims[v], &radical[v]).complement;
            multiplicities[v] = generators.cols();
            let basis = projective_basis(a, v);
            for k in 0..generators.cols() {
                let m = generators.column(k);
                for (w, group) in basis.iter().enumerate() {
                    for &p in group {
                        cols_per_vertex[w].push(actions[p].mul_vec(&m));
                    }
                }
                parts.push(Self::projective(a, v));
            }
        }
        let module = Self::direct_sum(a, &parts);
        let blocks = (0..n)
            .map(|w| Matrix::from_columns(self.dims[w], &cols_per_vertex[w]))
            .collect();
        Ok(Cover {
            module,
            projection: Morphism { blocks },
            multiplicities,
        })
    }

    pub fn homological_status(&self) -> Result<HomologicalStatus, Error> {
        if self.is_zero() {
            return Err(Error::ZeroModule);
        }
        let a = self.algebra;
        let total = self.total_dim();
        let cover: usize = self
            .top_dims()
            .iter()
            .enumerate()
            .map(|(v, &m)| m * a.paths_from(v).len())
            .sum();
        let envelope: usize = self
            .socle_dims()
            .iter()
            .enumerate()
            .map(|(v, &m)| m * a.paths_to(v).len())
            .sum();
        Ok(HomologicalStatus {
            is_projective: cover == total,
            is_injective: envelope == total,
        })
    }

    /// Basis of `Hom_A(self, other)`.
    pub fn hom_space(&self, other: &Representation<'_, F>) -> Vec<Morphism<F>> {
        let q = self.algebra.quiver();
        let n = q.vertex_count();
        let mut offset = vec![0; n + 1];
        for v in 0..n {
            offset[v + 1] = offset[v] + other.dims[v] * self.dims[v];
        }
        let unknowns = offset[n];
        // Variable for F_v[r][c] sits at offset[v] + r * dim M_v + c.
        let var = |v: usize, r: usize, c: usize| offset[v] + r * self.dims[v] + c;
        let mut rows: Vec<Vec<F>> = Vec::new();
        for (id, a) in q.arrows().iter().enumerate() {
            let (s, t) = (a.source, a.target);
            let (ma, na) = (&self.maps[id], &other.maps[id]);
            // (F_t M_a - N_a F_s)[r][c] = 0 for r < dim N_t, c < dim M_s.
            for r in 0..other.dims[t] {
                for c in 0..self.dims[s] {
                    let mut eq = vec![F::zero(); unknowns];
                    for k in 0..self.dims[t] {
                        let x = ma[(k, c)];
                        if !x.is_zero() {
                            eq[var(t, r, k)] = eq[var(t, r, k)] + x;
                        }
                    }
                    for k in 0..other.dims[s] {
                        let x = na[(r, k)];
                        if !x.is_zero() {
                            eq[var(s, k, c)] = eq[var(s, k, c)] - x;
                        }
                    }
                    if eq.iter().any(|x| !x.is_zero()) {
                        rows.push(eq);
                    }
                }
            }
        }
        let system = if rows.is_empty() {
            Matrix::zeros(0, unknowns)
        } else {
            Matrix::from_rows(&rows)
        };
        let kernel = system.kernel();
        (0..kernel.cols())
            .map(|k| Morphism {
                blocks: (0..n)
                    .map(|v| {
                        let mut m = Matrix::zeros(other.dims[v], self.dims[v]);
                        for r in 0..other.dims[v] {
                            for c in 0..self.dims[v] {
                                m[(r, c)] = kernel[(var(v, r, c), k)];
                            }
                        }
                        m
                    })
                    .collect(),
            })
            .collect()
    }

    /// True iff no nonzero element of `A` annihilates the module. Elements
    /// supported on different `e_u A e_w` act on different blocks, so this is
    /// independence of the path actions block by block.
    pub fn is_faithful(&self) -> bool {
        let a = self.algebra;
        let n = a.vertex_count();
        let actions = self.path_actions();
        for u in 0..n {
            for w in 0..n {
                let group: Vec<PathId> = a
                    .paths_from(u)
                    .iter()
                    .copied()
                    .filter(|&p| a.path(p).target == w)
                    .collect();
                if group.is_empty() {
                    continue;
                }
                let flat: Vec<Vec<F>> = group.iter().map(|&p| actions[p].entries().to_vec()).collect();
                let len = self.dims[u] * self.dims[w];
                if len == 0 || Matrix::from_columns(len, &flat).rank() < group.len() {
                    return false;
                }
            }
        }
        true
    }

    /// The dual `D(M)`, a right module over the opposite algebra.
    pub fn dual<'b>(&self, opposite: &'b MonomialAlgebra) -> Representation<'b, F> {
        Representation {
            algebra: opposite,
            dims: self.dims.clone(),
            maps: self.maps.iter().map(Matrix::transpose).collect(),
        }
    }

    /// True iff `self ≅ other`, for modules with local endomorphism rings
    /// (some composite `g ∘ f` of basis maps must be an automorphism).
    pub fn is_isomorphic_local(&self, other: &Representation<'_, F>) -> bool {
        if self.dims != other.dims {
            return false;
        }
        let there = self.hom_space(other);
        let back = other.hom_space(self);
        there.iter().any(|f| back.iter().any(|g| g.after(f).is_isomorphism()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::fixtures;

    type Rep<'a> = Representation<'a, Rational>;

    #[test]
    fn standard_modules_on_five_vertex_example() {
        let a = fixtures::paper_example();
        assert_eq!(Rep::projective(&a, 0).dims(), &[1, 1, 0, 0, 1]);
        assert_eq!(Rep::injective(&a, 3).dims(), &[0, 1, 1, 1, 0]);
        let s = Rep::simple(&a, 2);
        assert_eq!(s.dims(), &[0, 0, 1, 0, 0]);
        for m in [Rep::projective(&a, 1), Rep::injective(&a, 1), s] {
            assert!(m.satisfies_relations());
        }
    }

    #[test]
    fn socle_and_top() {
        let a = fixtures::paper_example();
        let p2 = Rep::projective(&a, 1);
        assert_eq!(p2.socle().module.dims(), &[0, 0, 0, 1, 1]);
        let s = Rep::simple(&a, 4);
        assert_eq!(s.socle().module.dims(), s.dims());
        assert_eq!(Rep::projective(&a, 0).top().module.dims(), &[1, 0, 0, 0, 0]);
    }

    #[test]
    fn envelopes() {
        let a = fixtures::paper_example();
        let env = Rep::simple(&a, 4).injective_envelope().unwrap();
        assert_eq!(env.module.total_dim(), 3);
        assert_eq!(env.multiplicities, vec![0, 0, 0, 0, 1]);
        assert!(env.embedding.is_injective());

        let i = Rep::injective(&a, 3);
        let env = i.injective_envelope().unwrap();
        assert_eq!(env.module.dims(), i.dims());
        assert!(env.embedding.is_isomorphism());

        let a2 = fixtures::line(2);
        let env = Rep::regular(&a2).injective_envelope().unwrap();
        assert_eq!(env.multiplicities, vec![0, 2]);
        assert_eq!(env.module.dims(), &[2, 2]);
        assert_eq!(Rep::zero(&a2).injective_envelope().err(), Some(Error::ZeroModule));
    }

    #[test]
    fn covers() {
        let a = fixtures::paper_example();
        let p = Rep::projective(&a, 2);
        let cover = p.projective_cover().unwrap();
        assert_eq!(cover.module.dims(), p.dims());
        assert!(cover.projection.is_isomorphism());

        let cover = Rep::simple(&a, 0).projective_cover().unwrap();
        assert_eq!(cover.module.total_dim(), 3);
        assert!(cover.projection.is_surjective());

        let a2 = fixtures::line(2);
        let i2 = Rep::injective(&a2, 1);
        assert_eq!(i2.dims(), &[1, 1]);
        let cover = i2.projective_cover().unwrap();
        assert_eq!(cover.multiplicities, vec![1, 0]);
        assert!(cover.projection.is_isomorphism());
    }

    #[test]
    fn status() {
        let a = fixtures::paper_example();
        let st = |m: &Rep| m.homological_status().unwrap();
        assert_eq!(
            st(&Rep::projective(&a, 0)),
            HomologicalStatus {
                is_projective: true,
                is_injective: true
            }
        );
        assert_eq!(
            st(&Rep::projective(&a, 1)),
            HomologicalStatus {
                is_projective: true,
                is_injective: false
            }
        );
        let k = fixtures::point();
        assert_eq!(
            st(&Rep::simple(&k, 0)),
            HomologicalStatus {
                is_projective: true,
                is_injective: true
            }
        );
    }

    #[test]
    fn quotient_by_socle() {
        let k = fixtures::point();
        assert!(Rep::simple(&k, 0).mod_socle().is_zero());
        let d = fixtures::dual_numbers();
        assert_eq!(Rep::projective(&d, 0).mod_socle().dims(), &[1]);
        let a3 = fixtures::line(3);
        let q = Rep::injective(&a3, 2).mod_socle();
        assert!(q.is_isomorphic_local(&Rep::injective(&a3, 1)));
    }

    #[test]
    fn hom_dimensions() {
        let a2 = fixtures::line(2);
        assert!(Rep::projective(&a2, 0).hom_space(&Rep::projective(&a2, 1)).is_empty());
        assert_eq!(Rep::projective(&a2, 1).hom_space(&Rep::projective(&a2, 0)).len(), 1);
        let a = fixtures::paper_example();
        for v in 0..5 {
            assert_eq!(Rep::simple(&a, v).hom_space(&Rep::simple(&a, v)).len(), 1);
        }
        for f in Rep::projective(&a, 1).hom_space(&Rep::injective(&a, 3)) {
            let (p, i) = (Rep::projective(&a, 1), Rep::injective(&a, 3));
            for (id, arrow) in a.quiver().arrows().iter().enumerate() {
                let lhs = f.blocks[arrow.target].mul(p.map(id));
                let rhs = i.map(id).mul(&f.blocks[arrow.source]);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn faithfulness() {
        let a = fixtures::paper_example();
        assert!(Rep::regular(&a).is_faithful());
        let m = Rep::direct_sum(&a, &[Rep::projective(&a, 0), Rep::projective(&a, 2)]);
        assert!(m.is_faithful());
        let a2 = fixtures::line(2);
        assert!(!Rep::simple(&a2, 0).is_faithful());
    }

    #[test]
    fn dual_swaps_projective_and_injective() {
        let a = fixtures::paper_example();
        let op = a.opposite();
        for v in 0..5 {
            let i = Rep::injective(&a, v);
            let d = i.dual(&op);
            assert!(d.satisfies_relations());
            assert!(d.homological_status().unwrap().is_projective);
        }
    }
}
