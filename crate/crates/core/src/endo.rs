//! Basic algebras given by structure constants: endomorphism algebras of
//! basic modules and idempotent subalgebras `fAf` of monomial algebras.
//!
//! Every basis element lies in a single block `e_i C e_j`. The basis consists
//! of the summand idempotents plus a basis of the radical, so the radical is
//! spanned by all non-idempotent basis elements.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::field::Field;
use crate::linalg::{Coordinates, Matrix, Splitting};
use crate::monomial::MonomialAlgebra;
use crate::nakayama::{KupischSeries, KupischShape};
use crate::quiver::{Quiver, Shape};
use crate::repr::{Morphism, Representation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicAlgebra<F> {
    summands: usize,
    tags: Vec<(usize, usize)>,
    identities: Vec<usize>,
    // Sparse product of basis elements x and y at x * dim + y.
    table: Vec<Vec<(usize, F)>>,
}

/// `End_B(M)` together with the morphism each basis element stands for.
/// The element tagged `(i, j)` is a map `M_j -> M_i`, so `e_i C = Hom(M, M_i)`
/// and the product `x y` is the composite "first `y`, then `x`".
#[derive(Clone)]
pub struct Endomorphisms<F> {
    pub algebra: BasicAlgebra<F>,
    pub representatives: Vec<Morphism<F>>,
}

impl<F: Field> BasicAlgebra<F> {
    /// `f A f` for `f` the sum of the idempotents at `vertices`; summand `k`
    /// corresponds to `vertices[k]` and a path from `s` to `t` sits in block `(s, t)`.
    pub fn from_path_subalgebra(a: &MonomialAlgebra, vertices: &[usize]) -> Self {
        let mut slot = vec![usize::MAX; a.vertex_count()];
        for (k, &v) in vertices.iter().enumerate() {
            slot[v] = k;
        }
        let chosen: Vec<usize> = (0..a.dim())
            .filter(|&p| {
                let path = a.path(p);
                slot[path.source] != usize::MAX && slot[path.target] != usize::MAX
            })
            .collect();
        let mut index = vec![usize::MAX; a.dim()];
        for (k, &p) in chosen.iter().enumerate() {
            index[p] = k;
        }
        let tags = chosen
            .iter()
            .map(|&p| (slot[a.path(p).source], slot[a.path(p).target]))
            .collect();
        let identities = vertices.iter().map(|&v| index[a.idempotent(v)]).collect();
        let dim = chosen.len();
        let mut table = vec![Vec::new(); dim * dim];
        for (x, &p) in chosen.iter().enumerate() {
            for (y, &q) in chosen.iter().enumerate() {
                if let Some(r) = a.multiply(p, q) {
                    table[x * dim + y] = vec![(index[r], F::one())];
                }
            }
        }
        BasicAlgebra {
            summands: vertices.len(),
            tags,
            identities,
            table,
        }
    }

    /// The monomial algebra itself, on its path basis.
    pub fn from_monomial(a: &MonomialAlgebra) -> Self {
        let all: Vec<usize> = (0..a.vertex_count()).collect();
        Self::from_path_subalgebra(a, &all)
    }

    pub fn summand_count(&self) -> usize {
        self.summands
    }

    pub fn dim(&self) -> usize {
        self.tags.len()
    }

    pub fn tag(&self, x: usize) -> (usize, usize) {
        self.tags[x]
    }

    pub fn identity(&self, i: usize) -> usize {
        self.identities[i]
    }

    pub fn is_radical(&self, x: usize) -> bool {
        !self.identities.contains(&x)
    }

    pub fn radical_basis(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&x| self.is_radical(x)).collect()
    }

    pub fn product(&self, x: usize, y: usize) -> &[(usize, F)] {
        &self.table[x * self.dim() + y]
    }

    pub fn mul(&self, u: &[F], v: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (x, &a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (y, &b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                for &(z, c) in self.product(x, y) {
                    out[z] = out[z] + a * b * c;
                }
            }
        }
        out
    }

    fn unit(&self, x: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim()];
        v[x] = F::one();
        v
    }

    /// Dimension of the block `e_i C e_j`.
    pub fn block_dim(&self, i: usize, j: usize) -> usize {
        self.tags.iter().filter(|&&t| t == (i, j)).count()
    }

    /// `dim e_i C`.
    pub fn row_dim(&self, i: usize) -> usize {
        self.tags.iter().filter(|t| t.0 == i).count()
    }

    /// `dim C e_j`.
    pub fn column_dim(&self, j: usize) -> usize {
        self.tags.iter().filter(|t| t.1 == j).count()
    }

    /// Associativity, unit and block laws, and closure of the radical.
    pub fn satisfies_axioms(&self) -> bool {
        let d = self.dim();
        for x in 0..d {
            for y in 0..d {
                let (i, j) = self.tags[x];
                let (k, l) = self.tags[y];
                let prod = self.product(x, y);
                if j != k && !prod.is_empty() {
                    return false;
                }
                if prod.iter().any(|&(z, _)| self.tags[z] != (i, l)) {
                    return false;
                }
                if self.is_radical(x)
                    && self.is_radical(y)
                    && prod.iter().any(|&(z, c)| !c.is_zero() && !self.is_radical(z))
                {
                    return false;
                }
            }
        }
        for (i, &e) in self.identities.iter().enumerate() {
            for x in 0..d {
                let (s, t) = self.tags[x];
                let left = self.mul(&self.unit(e), &self.unit(x));
                let right = self.mul(&self.unit(x), &self.unit(e));
                let expect = |hit: bool| if hit { self.unit(x) } else { vec![F::zero(); d] };
                if left != expect(s == i) || right != expect(t == i) {
                    return false;
                }
            }
        }
        for x in 0..d {
            for y in 0..d {
                let xy = self.mul(&self.unit(x), &self.unit(y));
                for z in 0..d {
                    if self.mul(&xy, &self.unit(z)) != self.mul(&self.unit(x), &self.mul(&self.unit(y), &self.unit(z)))
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Dimensions of `rad^1, rad^2, ...` down to zero; `None` if the radical
    /// is not nilpotent.
    pub fn radical_layers(&self) -> Option<Vec<usize>> {
        let rad: Vec<Vec<F>> = self.radical_basis().iter().map(|&x| self.unit(x)).collect();
        let mut power = rad.clone();
        let mut dims = Vec::new();
        loop {
            let m = span(self.dim(), &power);
            let r = m.cols();
            if r == 0 {
                return Some(dims);
            }
            if dims.last() == Some(&r) {
                return None;
            }
            dims.push(r);
            let basis: Vec<Vec<F>> = (0..r).map(|c| m.column(c)).collect();
            power = basis
                .iter()
                .flat_map(|u| rad.iter().map(move |v| (u, v)))
                .map(|(u, v)| self.mul(u, v))
                .collect();
        }
    }

    /// Radical basis elements that span a complement of `rad^2` in each
    /// block: representatives of `rad / rad^2`, which generate the radical
    /// as a left ideal and as a right ideal.
    pub fn arrow_representatives(&self) -> Vec<usize> {
        let n = self.summands;
        let members = self.block_members();
        let local = self.local_indices(&members);
        let mut squares: Vec<Vec<Vec<F>>> = vec![Vec::new(); n * n];
        for i in 0..n {
            for j in 0..n {
                for &x in members[i * n + j].iter().filter(|&&x| self.is_radical(x)) {
                    for l in 0..n {
                        for &y in members[j * n + l].iter().filter(|&&y| self.is_radical(y)) {
                            let prod = self.product(x, y);
                            if prod.is_empty() {
                                continue;
                            }
                            let mut v = vec![F::zero(); members[i * n + l].len()];
                            for &(z, c) in prod {
                                v[local[z]] = v[local[z]] + c;
                            }
                            squares[i * n + l].push(v);
                        }
                    }
                }
            }
        }
        let mut reps = Vec::new();
        for (b, block) in members.iter().enumerate() {
            let rad: Vec<usize> = block.iter().copied().filter(|&x| self.is_radical(x)).collect();
            if rad.is_empty() {
                continue;
            }
            let square = span(block.len(), &squares[b]);
            let units: Vec<Vec<F>> = rad
                .iter()
                .map(|&x| {
                    let mut v = vec![F::zero(); block.len()];
                    v[local[x]] = F::one();
                    v
                })
                .collect();
            let joined = square.hstack(&Matrix::from_columns(block.len(), &units));
            reps.extend(
                joined
                    .independent_columns()
                    .into_iter()
                    .filter(|&c| c >= square.cols())
                    .map(|c| rad[c - square.cols()]),
            );
        }
        reps.sort();
        reps
    }

    fn block_members(&self) -> Vec<Vec<usize>> {
        let n = self.summands;
        let mut members = vec![Vec::new(); n * n];
        for (x, &(i, j)) in self.tags.iter().enumerate() {
            members[i * n + j].push(x);
        }
        members
    }

    fn local_indices(&self, members: &[Vec<usize>]) -> Vec<usize> {
        let mut local = vec![0; self.dim()];
        for block in members {
            for (k, &x) in block.iter().enumerate() {
                local[x] = k;
            }
        }
        local
    }

    /// Arrows `i -> j` counted by `dim e_i (rad / rad^2) e_j`.
    pub fn gabriel_quiver(&self) -> Quiver {
        let edges: Vec<(usize, usize)> = self.arrow_representatives().iter().map(|&x| self.tags[x]).collect();
        Quiver::from_edges(self.summands, &edges).expect("endpoints in range")
    }

    /// Every connected component of the Gabriel quiver is a line or a cycle.
    pub fn is_nakayama(&self) -> bool {
        let q = self.gabriel_quiver();
        q.components()
            .iter()
            .all(|c| q.induced(c).shape().is_ok_and(Shape::is_nakayama))
    }

    /// Per block `(i, j)`, the dimension of the socle part of `e_i C` lying
    /// in `e_i C e_j` (`right`), or of `C e_j` lying in `e_i C e_j` (left).
    /// An element of the block is in the socle iff every arrow representative
    /// kills it on the relevant side.
    fn socle_blocks(&self, right: bool) -> Vec<usize> {
        let n = self.summands;
        let members = self.block_members();
        let local = self.local_indices(&members);
        let arrows = self.arrow_representatives();
        let mut out = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                let block = &members[i * n + j];
                if block.is_empty() {
                    continue;
                }
                let mut rows: Vec<Vec<F>> = Vec::new();
                for &a in &arrows {
                    let (s, t) = self.tags[a];
                    let (touches, target) = if right {
                        (s == j, i * n + t)
                    } else {
                        (t == i, s * n + j)
                    };
                    if !touches {
                        continue;
                    }
                    let mut m = vec![vec![F::zero(); block.len()]; members[target].len()];
                    for (c, &x) in block.iter().enumerate() {
                        let prod = if right { self.product(x, a) } else { self.product(a, x) };
                        for &(z, coeff) in prod {
                            m[local[z]][c] = m[local[z]][c] + coeff;
                        }
                    }
                    rows.extend(m);
                }
                let rank = if rows.is_empty() {
                    0
                } else {
                    Matrix::from_rows(&rows).rank()
                };
                out[i * n + j] = block.len() - rank;
            }
        }
        out
    }

    /// `dim soc(e_i C)` for each summand.
    pub fn right_socle_dims(&self) -> Vec<usize> {
        let n = self.summands;
        let blocks = self.socle_blocks(true);
        (0..n).map(|i| (0..n).map(|j| blocks[i * n + j]).sum()).collect()
    }

    /// `dim soc(C e_j)` for each summand.
    pub fn left_socle_dims(&self) -> Vec<usize> {
        let n = self.summands;
        let blocks = self.socle_blocks(false);
        (0..n).map(|j| (0..n).map(|i| blocks[i * n + j]).sum()).collect()
    }

    /// Every `e_i C` and every `C e_i` has a one-dimensional socle.
    pub fn is_qf2(&self) -> bool {
        self.right_socle_dims().iter().all(|&d| d == 1) && self.left_socle_dims().iter().all(|&d| d == 1)
    }

    /// Summands `i` for which `e_i C` is injective: its socle is a simple
    /// `S_j` and it has the dimension of the injective hull `D(C e_j)`.
    pub fn projective_injective_summands(&self) -> Vec<usize> {
        let n = self.summands;
        let blocks = self.socle_blocks(true);
        (0..n)
            .filter(|&i| {
                let row = &blocks[i * n..(i + 1) * n];
                row.iter().sum::<usize>() == 1
                    && row
                        .iter()
                        .position(|&d| d == 1)
                        .is_some_and(|j| self.row_dim(i) == self.column_dim(j))
            })
            .collect()
    }

    pub fn is_selfinjective(&self) -> bool {
        self.projective_injective_summands().len() == self.summands
    }

    /// Kupisch series of a connected Nakayama algebra: `c_i = dim e_i C` read
    /// along the arrows of the Gabriel quiver.
    pub fn kupisch_series(&self) -> Option<KupischSeries> {
        let q = self.gabriel_quiver();
        let shape = q.shape().ok()?;
        let n = q.vertex_count();
        let (kind, start) = match shape {
            Shape::Linear(_) => (KupischShape::Linear, (0..n).find(|&v| q.in_degree(v) == 0)?),
            Shape::Cyclic(_) => (KupischShape::Cyclic, 0),
            Shape::NotNakayamaShape => return None,
        };
        let order = q.nakayama_order(start)?;
        let lengths = order.iter().map(|&v| self.row_dim(v)).collect();
        KupischSeries::new(kind, lengths).ok().map(|k| k.canonical())
    }
}

fn span<F: Field>(dim: usize, vectors: &[Vec<F>]) -> Matrix<F> {
    Matrix::from_columns(dim, vectors).column_basis()
}

/// Scalar by which an endomorphism of a module with simple top acts on the
/// top (or on the socle, when only the socle is simple).
struct LocalFunctional<F> {
    vertex: usize,
    left: Vec<F>,
    right: Vec<F>,
}

impl<F: Field> LocalFunctional<F> {
    fn new(m: &Representation<'_, F>) -> Option<Self> {
        let top = m.top_dims();
        if top.iter().sum::<usize>() == 1 {
            let vertex = top.iter().position(|&d| d == 1)?;
            let split = Splitting::new(m.dims()[vertex], &m.radical().inclusion.blocks[vertex]);
            return Some(LocalFunctional {
                vertex,
                left: split.quotient_projection().row(0).to_vec(),
                right: split.complement.column(0),
            });
        }
        let socle = m.socle_dims();
        if socle.iter().sum::<usize>() == 1 {
            let vertex = socle.iter().position(|&d| d == 1)?;
            let inclusion = &m.socle().inclusion.blocks[vertex];
            let split = Splitting::new(m.dims()[vertex], inclusion);
            return Some(LocalFunctional {
                vertex,
                left: split.sub_coordinates().row(0).to_vec(),
                right: inclusion.column(0),
            });
        }
        None
    }

    fn eval(&self, f: &Morphism<F>) -> F {
        let image = f.blocks[self.vertex].mul_vec(&self.right);
        self.left
            .iter()
            .zip(&image)
            .fold(F::zero(), |acc, (&a, &b)| acc + a * b)
    }
}

/// `End_B(M)` for `M = ⊕ summands`, each indecomposable with a simple top or
/// a simple socle.
pub fn endomorphism_algebra<F: Field>(summands: &[Representation<'_, F>]) -> Result<Endomorphisms<F>, Error> {
    let k = summands.len();
    for i in 0..k {
        for j in i + 1..k {
            if summands[i].is_isomorphic_local(&summands[j]) {
                return Err(Error::NotBasic(i, j));
            }
        }
    }
    let mut tags = Vec::new();
    let mut reps: Vec<Morphism<F>> = Vec::new();
    let mut identities = vec![0; k];
    let mut block_ranges = vec![(0, 0); k * k];
    for i in 0..k {
        for j in 0..k {
            let start = reps.len();
            let homs = summands[j].hom_space(&summands[i]);
            if i == j {
                let lambda = LocalFunctional::new(&summands[i]).ok_or(Error::NotLocal(i))?;
                let values: Vec<F> = homs.iter().map(|f| lambda.eval(f)).collect();
                let pivot = values.iter().position(|v| !v.is_zero()).ok_or(Error::NotLocal(i))?;
                identities[i] = reps.len();
                reps.push(Morphism::identity(summands[i].dims()));
                for (t, f) in homs.iter().enumerate() {
                    if t != pivot {
                        let c = values[t] / values[pivot];
                        reps.push(f.add(&homs[pivot].scale(-c)));
                    }
                }
                if reps[start + 1..].iter().any(|f| f.is_isomorphism()) {
                    return Err(Error::NotLocal(i));
                }
            } else {
                reps.extend(homs);
            }
            tags.extend(core::iter::repeat_n((i, j), reps.len() - start));
            block_ranges[i * k + j] = (start, reps.len());
        }
    }
    let coords: Vec<Coordinates<F>> = block_ranges
        .iter()
        .map(|&(s, e)| {
            let cols: Vec<Vec<F>> = reps[s..e].iter().map(Morphism::flatten).collect();
            let len = cols.first().map_or(0, Vec::len);
            Coordinates::new(&Matrix::from_columns(len, &cols))
        })
        .collect();
    let dim = reps.len();
    let mut table = vec![Vec::new(); dim * dim];
    for x in 0..dim {
        for y in 0..dim {
            let (i, j) = tags[x];
            let (j2, l) = tags[y];
            if j != j2 {
                continue;
            }
            let composite = reps[x].after(&reps[y]);
            if composite.is_zero() {
                continue;
            }
            let (s, _) = block_ranges[i * k + l];
            let c = coords[i * k + l].of(&composite.flatten());
            table[x * dim + y] = c
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(t, &v)| (s + t, v))
                .collect();
        }
    }
    Ok(Endomorphisms {
        algebra: BasicAlgebra {
            summands: k,
            tags,
            identities,
            table,
        },
        representatives: reps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::fixtures;

    type Rep<'a> = Representation<'a, Rational>;

    #[test]
    fn auslander_algebra_of_dual_numbers() {
        let d = fixtures::dual_numbers();
        let p = Rep::projective(&d, 0);
        let s = Rep::simple(&d, 0);
        let end = endomorphism_algebra(&[p, s]).unwrap().algebra;
        assert_eq!(end.dim(), 5);
        assert!(end.satisfies_axioms());
        let q = end.gabriel_quiver();
        assert_eq!(q.arrows().len(), 2);
        assert_eq!(q.shape().unwrap(), Shape::Cyclic(2));
        assert!(end.is_nakayama());
        assert!(end.is_qf2());
        let ks = end.kupisch_series().unwrap();
        assert_eq!(ks.shape(), KupischShape::Cyclic);
        assert_eq!(ks.lengths(), &[3, 2]);
        assert_eq!(end.radical_layers(), Some(vec![3, 1]));
    }

    #[test]
    fn endomorphisms_of_regular_module() {
        let a = fixtures::line(3);
        let ps: Vec<Rep> = (0..3).map(|v| Rep::projective(&a, v)).collect();
        let end = endomorphism_algebra(&ps).unwrap().algebra;
        assert_eq!(end.dim(), a.dim());
        let ks = end.kupisch_series().unwrap();
        assert_eq!((ks.shape(), ks.lengths()), (KupischShape::Linear, &[3, 2, 1][..]));
    }

    #[test]
    fn repeated_summand_is_rejected() {
        let a = fixtures::line(2);
        let p = Rep::projective(&a, 0);
        let i = Rep::injective(&a, 1);
        assert_eq!(endomorphism_algebra(&[p, i]).err(), Some(Error::NotBasic(0, 1)));
    }

    #[test]
    fn path_subalgebras() {
        let a = fixtures::paper_example();
        let whole = BasicAlgebra::<Rational>::from_monomial(&a);
        assert_eq!(whole.dim(), 11);
        assert!(whole.satisfies_axioms());
        assert!(!whole.is_qf2());
        assert!(!whole.is_nakayama());
        assert_eq!(whole.gabriel_quiver().arrows().len(), 4);

        let base = BasicAlgebra::<Rational>::from_path_subalgebra(&a, &[3, 4]);
        assert_eq!(base.dim(), 2);
        assert!(base.gabriel_quiver().arrows().is_empty());
        assert!(base.is_nakayama());
        assert!(base.is_qf2());
        assert!(base.is_selfinjective());
        assert_eq!(base.kupisch_series(), None);
    }

    #[test]
    fn selfinjectivity() {
        let d = fixtures::dual_numbers();
        assert!(BasicAlgebra::<Rational>::from_monomial(&d).is_selfinjective());
        let a2 = fixtures::line(2);
        let c = BasicAlgebra::<Rational>::from_monomial(&a2);
        assert_eq!(c.projective_injective_summands(), vec![0]);
        assert!(!c.is_selfinjective());
    }
}
