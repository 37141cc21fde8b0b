//! Nakayama algebras through their Kupisch series, uniserial modules, and the
//! summand universes used for generator-cogenerators.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;
use crate::field::Field;
use crate::monomial::MonomialAlgebra;
use crate::quiver::{Quiver, Shape};
use crate::repr::Representation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KupischShape {
    Linear,
    Cyclic,
}

/// Lengths `c_i = dim e_i A` of the indecomposable projectives, listed along
/// the arrows `i -> i + 1` of a line or a cycle.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KupischSeries {
    shape: KupischShape,
    lengths: Vec<usize>,
}

impl KupischSeries {
    pub fn new(shape: KupischShape, lengths: Vec<usize>) -> Result<Self, Error> {
        let n = lengths.len();
        if n == 0 {
            return Err(Error::InvalidKupisch("empty series".into()));
        }
        match shape {
            KupischShape::Linear => {
                if lengths[n - 1] != 1 {
                    return Err(Error::InvalidKupisch("a linear series must end in 1".into()));
                }
                for i in 0..n - 1 {
                    if lengths[i] < 2 || lengths[i] > lengths[i + 1] + 1 {
                        return Err(Error::InvalidKupisch(format!(
                            "need 2 <= c_{i} <= c_{} + 1, got c_{i} = {}",
                            i + 1,
                            lengths[i]
                        )));
                    }
                }
            }
            KupischShape::Cyclic => {
                for i in 0..n {
                    let next = lengths[(i + 1) % n];
                    if lengths[i] < 2 || next + 1 < lengths[i] {
                        return Err(Error::InvalidKupisch(format!(
                            "need c_{i} >= 2 and c_{} >= c_{i} - 1, got c_{i} = {}",
                            (i + 1) % n,
                            lengths[i]
                        )));
                    }
                }
            }
        }
        Ok(KupischSeries { shape, lengths })
    }

    pub fn shape(&self) -> KupischShape {
        self.shape
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn vertex_count(&self) -> usize {
        self.lengths.len()
    }

    pub fn dim(&self) -> usize {
        self.lengths.iter().sum()
    }

    pub fn max_length(&self) -> usize {
        self.lengths.iter().copied().max().unwrap_or(0)
    }

    /// Representative of the rotation class: a cyclic series is rotated to its
    /// lexicographically largest rotation, so the cycle starts at a longest
    /// projective. Linear series are returned unchanged.
    pub fn canonical(&self) -> Self {
        match self.shape {
            KupischShape::Linear => self.clone(),
            KupischShape::Cyclic => {
                let n = self.lengths.len();
                let best = (0..n)
                    .map(|r| {
                        let mut l = self.lengths.clone();
                        l.rotate_left(r);
                        l
                    })
                    .max()
                    .expect("nonempty");
                KupischSeries {
                    shape: self.shape,
                    lengths: best,
                }
            }
        }
    }

    pub fn same_up_to_rotation(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }

    /// Constant cyclic series and the simple algebra `Linear [1]`.
    pub fn is_selfinjective(&self) -> bool {
        match self.shape {
            KupischShape::Linear => self.lengths.len() == 1,
            KupischShape::Cyclic => self.lengths.iter().all(|&c| c == self.lengths[0]),
        }
    }

    pub fn algebra(&self) -> MonomialAlgebra {
        kupisch_to_algebra(self)
    }

    fn next(&self, v: usize) -> Option<usize> {
        match self.shape {
            KupischShape::Linear => (v + 1 < self.lengths.len()).then_some(v + 1),
            KupischShape::Cyclic => Some((v + 1) % self.lengths.len()),
        }
    }

    /// Vertex reached from `v` by a path of length `k`.
    fn walk(&self, v: usize, k: usize) -> usize {
        (0..k).fold(v, |u, _| self.next(u).expect("walk stays inside the quiver"))
    }
}

impl fmt::Display for KupischSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shape = match self.shape {
            KupischShape::Linear => "linear",
            KupischShape::Cyclic => "cyclic",
        };
        write!(f, "{shape}:")?;
        for (i, c) in self.lengths.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for KupischSeries {
    type Err = Error;

    /// `linear:c0,c1,...,1` or `cyclic:c0,c1,...`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let (shape, rest) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| Error::InvalidKupisch(format!("expected `linear:` or `cyclic:` prefix in `{s}`")))?;
        let shape = match shape.trim() {
            "linear" => KupischShape::Linear,
            "cyclic" => KupischShape::Cyclic,
            other => return Err(Error::InvalidKupisch(format!("unknown shape `{other}`"))),
        };
        let lengths = rest
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .ok()
                    .filter(|&c| c > 0)
                    .ok_or_else(|| Error::InvalidKupisch(format!("`{}` is not a positive integer", t.trim())))
            })
            .collect::<Result<Vec<_>, _>>()?;
        KupischSeries::new(shape, lengths)
    }
}

/// The Nakayama algebra of a series: arrows `i -> i + 1` and, from each vertex,
/// the path of length `c_i` as a relation (when the quiver has one).
pub fn kupisch_to_algebra(ks: &KupischSeries) -> MonomialAlgebra {
    let n = ks.vertex_count();
    let edges: Vec<(usize, usize)> = (0..n).filter_map(|v| ks.next(v).map(|w| (v, w))).collect();
    let quiver = Quiver::from_edges(n, &edges).expect("endpoints in range");
    // Arrow ids coincide with source vertices.
    let words: Vec<Vec<usize>> = (0..n)
        .filter(|&v| match ks.shape {
            KupischShape::Linear => v + ks.lengths[v] < n,
            KupischShape::Cyclic => true,
        })
        .map(|v| (0..ks.lengths[v]).map(|k| ks.walk(v, k)).collect())
        .collect();
    MonomialAlgebra::from_words(quiver, &words).expect("valid Kupisch series give admissible relations")
}

/// Series of a monomial algebra on a line or cycle, listed from the source of
/// the line or from vertex 0 of the cycle; `None` for other quivers.
pub fn algebra_to_kupisch(a: &MonomialAlgebra) -> Option<KupischSeries> {
    let q = a.quiver();
    let shape = match q.shape().ok()? {
        Shape::Linear(_) => KupischShape::Linear,
        Shape::Cyclic(_) => KupischShape::Cyclic,
        Shape::NotNakayamaShape => return None,
    };
    let order = q.nakayama_order(0)?;
    let lengths = order.iter().map(|&v| a.paths_from(v).len()).collect();
    KupischSeries::new(shape, lengths).ok()
}

/// Vertex permutation taking the algebra's vertices to positions along the
/// series returned by [`algebra_to_kupisch`].
pub fn kupisch_order(a: &MonomialAlgebra) -> Option<Vec<usize>> {
    a.quiver().nakayama_order(0)
}

/// An indecomposable module over a Nakayama algebra given as `e_top A / e_top J^len`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Uniserial {
    pub top: usize,
    pub len: usize,
}

impl Uniserial {
    pub fn module<'a, F: Field>(&self, b: &'a MonomialAlgebra) -> Representation<'a, F> {
        Representation::truncated_projective(b, self.top, self.len)
    }

    /// Vertex of the simple socle.
    pub fn socle(&self, ks: &KupischSeries) -> usize {
        ks.walk(self.top, self.len - 1)
    }
}

impl fmt::Display for Uniserial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "top={},len={}", self.top + 1, self.len)
    }
}

/// Reads a module with simple top as a uniserial: its top vertex and its length.
pub fn identify_uniserial<F: Field>(m: &Representation<'_, F>) -> Option<Uniserial> {
    let top = m.top_dims();
    if top.iter().sum::<usize>() != 1 {
        return None;
    }
    let v = top.iter().position(|&d| d == 1)?;
    Some(Uniserial {
        top: v,
        len: m.total_dim(),
    })
}

/// Every indecomposable module: `(v, l)` for `1 <= l <= c_v`.
pub fn all_uniserials(b: &MonomialAlgebra) -> Result<Vec<Uniserial>, Error> {
    algebra_to_kupisch(b).ok_or(Error::NotNakayama)?;
    Ok((0..b.vertex_count())
        .flat_map(|v| (1..=b.paths_from(v).len()).map(move |len| Uniserial { top: v, len }))
        .collect())
}

pub fn projective_uniserials(b: &MonomialAlgebra) -> Vec<Uniserial> {
    (0..b.vertex_count())
        .map(|v| Uniserial {
            top: v,
            len: b.paths_from(v).len(),
        })
        .collect()
}

/// `I(v)` has length `dim A e_v`; its top is the source of the longest path into `v`.
pub fn injective_uniserials(b: &MonomialAlgebra) -> Vec<Uniserial> {
    (0..b.vertex_count())
        .map(|v| {
            let longest = b
                .paths_to(v)
                .iter()
                .map(|&p| b.path(p))
                .max_by_key(|p| p.len())
                .expect("trivial path");
            Uniserial {
                top: longest.source,
                len: b.paths_to(v).len(),
            }
        })
        .collect()
}

/// Distinct indecomposables among `P(v)`, `I(v)` and the nonzero `I(v)/soc`,
/// sorted by `(top, len)`.
pub fn allowed_summands(b: &MonomialAlgebra) -> Result<Vec<Uniserial>, Error> {
    algebra_to_kupisch(b).ok_or(Error::NotNakayama)?;
    let mut out = projective_uniserials(b);
    for i in injective_uniserials(b) {
        out.push(i);
        if i.len > 1 {
            out.push(Uniserial {
                top: i.top,
                len: i.len - 1,
            });
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Universe {
    /// Summands drawn from [`allowed_summands`].
    Allowed,
    /// Summands drawn from every indecomposable module.
    AllUniserials,
}

/// Basic generator-cogenerators with summands in the universe: all projectives
/// and injectives plus any subset of the remaining universe. Ordered by the
/// bitmask of optional summands; each module sorted by `(top, len)`.
pub fn gen_cogen_candidates(b: &MonomialAlgebra, universe: Universe) -> Result<Vec<Vec<Uniserial>>, Error> {
    let pool = match universe {
        Universe::Allowed => allowed_summands(b)?,
        Universe::AllUniserials => all_uniserials(b)?,
    };
    let mut required = projective_uniserials(b);
    required.extend(injective_uniserials(b));
    required.sort();
    required.dedup();
    let optional: Vec<Uniserial> = pool.into_iter().filter(|u| !required.contains(u)).collect();
    let mut out = Vec::with_capacity(1 << optional.len());
    for mask in 0u64..(1u64 << optional.len()) {
        let mut m = required.clone();
        m.extend(
            optional
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &u)| u),
        );
        m.sort();
        out.push(m);
    }
    Ok(out)
}

fn linear_series(n: usize, max_c: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    // Built right to left: c_{n-1} = 1, then c_i in 2..=c_{i+1}+1.
    if prefix.len() == n {
        let mut l = prefix.clone();
        l.reverse();
        out.push(l);
        return;
    }
    let range = match prefix.last() {
        None => 1..=1,
        Some(&next) => 2..=(next + 1).min(max_c),
    };
    for c in range {
        prefix.push(c);
        linear_series(n, max_c, prefix, out);
        prefix.pop();
    }
}

fn all_sequences(n: usize, lo: usize, hi: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                (lo..=hi).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    out
}

/// Every valid series with at most `max_n` vertices and lengths at most
/// `max_c`; cyclic ones once per rotation class, in canonical form. Sorted by
/// shape, vertex count, then lengths.
pub fn enumerate_kupisch(max_n: usize, max_c: usize) -> Vec<KupischSeries> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let mut seqs = Vec::new();
        if max_c >= 1 {
            linear_series(n, max_c, &mut Vec::new(), &mut seqs);
        }
        seqs.sort();
        out.extend(
            seqs.into_iter()
                .filter_map(|l| KupischSeries::new(KupischShape::Linear, l).ok()),
        );
    }
    for n in 1..=max_n {
        let mut seen: Vec<KupischSeries> = all_sequences(n, 2, max_c)
            .into_iter()
            .filter_map(|l| KupischSeries::new(KupischShape::Cyclic, l).ok())
            .filter(|k| k.canonical() == *k)
            .collect();
        seen.sort();
        out.extend(seen);
    }
    out
}

/// Renders a module as a `+`-joined list of uniserials.
pub fn describe(m: &[Uniserial]) -> String {
    m.iter().map(ToString::to_string).collect::<Vec<_>>().join(" + ")
}

/// Checks that the Nakayama algebra is numbered along its arrows (vertex `i`
/// has its arrow to `i + 1`), the numbering [`Uniserial::socle`] assumes.
pub fn is_in_standard_order(b: &MonomialAlgebra) -> bool {
    kupisch_order(b).is_some_and(|order| order.iter().enumerate().all(|(i, &v)| i == v))
}
