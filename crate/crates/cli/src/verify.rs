//! Exhaustive verification suites.
//!
//! Corpus suites (`main-theorem`, `qf2-chain`, `cross-checks`) run over every
//! monomial algebra within [`CorpusBounds`]; the Nakayama suites (`yamagata`,
//! `morita`) run over Kupisch series with at most `max_n` vertices and
//! lengths at most `max_c`. Each failed implication becomes a counterexample.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use domdim_core::endo::{endomorphism_algebra, Endomorphisms};
use domdim_core::enumerate::{self, canonical_form, CorpusBounds};
use domdim_core::homological::{
    base_algebra, dominant_dimension, double_centralizer_check, minimal_faithful_proj_inj, right_base_dim, DomDim,
    DEFAULT_CUTOFF,
};
use domdim_core::nakayama::{
    algebra_to_kupisch, allowed_summands, describe, enumerate_kupisch, gen_cogen_candidates, injective_uniserials,
    projective_uniserials, KupischSeries, Uniserial, Universe,
};
use domdim_core::repr::Representation;
use domdim_core::{MonomialAlgebra, Rational, Side, Sides};

use crate::format::render_inline;
use crate::report::VerificationReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, clap::ValueEnum)]
pub enum Suite {
    MainTheorem,
    Yamagata,
    Qf2Chain,
    Morita,
    CrossChecks,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::MainTheorem => "main-theorem",
            Suite::Yamagata => "yamagata",
            Suite::Qf2Chain => "qf2-chain",
            Suite::Morita => "morita",
            Suite::CrossChecks => "cross-checks",
        }
    }

    pub fn uses_corpus(self) -> bool {
        matches!(self, Suite::MainTheorem | Suite::Qf2Chain | Suite::CrossChecks)
    }
}

/// Names of the implications recorded in reports.
pub mod check {
    pub const DOMDIM2_NAKAYAMA: &str = "domdim >= 2 <=> Nakayama shape and domdim >= 2";
    pub const RECONSTRUCTION: &str = "Nakayama shape and domdim >= 2 => End_B(M) with B = fAf and M allowed";
    pub const DOMDIM1_FAITHFUL: &str = "domdim >= 1 <=> minimal faithful projective-injective exists";
    pub const DOMDIM2_DC: &str = "domdim >= 2 <=> double centraliser property";
    pub const DOMDIM_OPPOSITE: &str = "domdim(A) = domdim(opposite A)";
    pub const BASE_NAKAYAMA: &str = "domdim >= 1 => fAf componentwise Nakayama";
    pub const BASE_DIMS: &str = "domdim >= 1 => dim eAe = dim fAf";
    pub const DOMDIM2_QF2: &str = "domdim >= 2 => QF-2 on both sides";
    pub const QF2_NAKAYAMA: &str = "QF-2 on both sides => Nakayama shape";
    pub const SOCLE_ORACLE: &str = "socle criterion <=> projective has one-dimensional socle";
    pub const YAMAGATA: &str = "End_B(M) Nakayama <=> every summand allowed";
    pub const ENDO_QF2: &str = "End_B(M) is QF-2";
    pub const ENDO_PROJ_INJ: &str = "e_i End_B(M) projective-injective <=> M_i injective";
    pub const ENDO_DOMDIM: &str = "End_B(M) Nakayama => domdim >= 2";
    pub const KUPISCH_SETS: &str = "Kupisch series of End_B(M), M allowed = series with domdim >= 2";
    pub const MORITA_NAKAYAMA: &str = "B selfinjective, M = B + P/soc P choices => End_B(M) Nakayama";
    pub const MORITA_BASE: &str = "B selfinjective, M = B + P/soc P choices => base algebra selfinjective";
    pub const MORITA_DOMDIM: &str = "B selfinjective, M = B + P/soc P choices => domdim >= 2";
}

fn corpus_bounds_map(b: &CorpusBounds) -> BTreeMap<String, u64> {
    BTreeMap::from([
        ("max_vertices".to_string(), b.max_vertices as u64),
        ("max_arrows".to_string(), b.max_arrows as u64),
        ("max_relation_length".to_string(), b.max_relation_length as u64),
    ])
}

fn kupisch_bounds_map(max_n: usize, max_c: usize) -> BTreeMap<String, u64> {
    BTreeMap::from([("max_n".to_string(), max_n as u64), ("max_c".to_string(), max_c as u64)])
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn domdim_bucket(d: DomDim) -> &'static str {
    match d {
        DomDim::Finite(0) => "domdim=0",
        DomDim::Finite(1) => "domdim=1",
        DomDim::Infinity => "domdim=infinity",
        _ => "domdim>=2 finite",
    }
}

/// Modules of a list of uniserials over `b`.
pub fn modules<'a>(b: &'a MonomialAlgebra, m: &[Uniserial]) -> Vec<Representation<'a, Rational>> {
    m.iter().map(|u| u.module(b)).collect()
}

fn endo_of(b: &MonomialAlgebra, m: &[Uniserial]) -> Endomorphisms<Rational> {
    endomorphism_algebra(&modules(b, m)).expect("distinct uniserials have local endomorphism rings")
}

/// Whether a Nakayama algebra with dominant dimension at least two is
/// `End_B(M)` for its base algebra `B` and some generator-cogenerator `M`
/// with allowed summands.
pub fn reconstructs(a: &MonomialAlgebra) -> bool {
    let Some(target) = algebra_to_kupisch(a) else {
        return false;
    };
    let Ok(base) = base_algebra::<Rational>(a) else {
        return false;
    };
    let Some(series) = base.kupisch_series() else {
        return false;
    };
    let b = series.algebra();
    let Ok(candidates) = gen_cogen_candidates(&b, Universe::Allowed) else {
        return false;
    };
    candidates.iter().filter(|m| m.len() == target.vertex_count()).any(|m| {
        endo_of(&b, m)
            .algebra
            .kupisch_series()
            .is_some_and(|k| k.same_up_to_rotation(&target))
    })
}

struct Reports {
    by_suite: BTreeMap<Suite, VerificationReport>,
}

impl Reports {
    fn new(suites: &[Suite], bounds: &BTreeMap<String, u64>) -> Self {
        Reports {
            by_suite: suites
                .iter()
                .map(|&s| (s, VerificationReport::new(s.name(), bounds.clone())))
                .collect(),
        }
    }

    fn get(&mut self, s: Suite) -> Option<&mut VerificationReport> {
        self.by_suite.get_mut(&s)
    }
}

fn check_algebra(a: &MonomialAlgebra, reports: &mut Reports) {
    let d = dominant_dimension::<Rational>(a, DEFAULT_CUTOFF);
    let shape_ok = a.quiver().shape().is_ok_and(|s| s.is_nakayama());
    let culprit = |a: &MonomialAlgebra| (hex(&canonical_form(a)), render_inline(a));

    if let Some(r) = reports.get(Suite::MainTheorem) {
        r.bump("algebras");
        r.bump(domdim_bucket(d));
        if shape_ok {
            r.bump("nakayama shape");
        }
        if d.at_least(2) && shape_ok {
            r.bump("nakayama shape and domdim>=2");
        }
        if d.at_least(2) != (shape_ok && d.at_least(2)) {
            let (c, t) = culprit(a);
            r.fail(c, t, check::DOMDIM2_NAKAYAMA);
        }
        if shape_ok && d.at_least(2) {
            if reconstructs(a) {
                r.bump("reconstructed as End_B(M)");
            } else {
                let (c, t) = culprit(a);
                r.fail(c, t, check::RECONSTRUCTION);
            }
        }
    }

    if let Some(r) = reports.get(Suite::Qf2Chain) {
        r.bump("algebras");
        let op = a.opposite();
        let right = a.is_qf2(Sides::Right);
        let left = a.is_qf2(Sides::Left);
        let both = right && left;
        for (flag, key) in [(right, "qf2 right"), (left, "qf2 left"), (both, "qf2 both")] {
            if flag {
                r.bump(key);
            }
        }
        // Sidedness: how often one-sided QF-2 alone fails to force the shape.
        if right && !shape_ok {
            r.bump("qf2 right only, not Nakayama shape");
        }
        if left && !shape_ok {
            r.bump("qf2 left only, not Nakayama shape");
        }
        if d.at_least(2) && !both {
            let (c, t) = culprit(a);
            r.fail(c, t, check::DOMDIM2_QF2);
        }
        if both && !shape_ok {
            let (c, t) = culprit(a);
            r.fail(c, t, check::QF2_NAKAYAMA);
        }
        let mut agree = true;
        for v in 0..a.vertex_count() {
            let right_dim: usize = Representation::<Rational>::projective(a, v).socle_dims().iter().sum();
            let left_dim: usize = Representation::<Rational>::projective(&op, v).socle_dims().iter().sum();
            agree &= a.socle_criterion(v, Side::Right) == (right_dim == 1);
            agree &= a.socle_criterion(v, Side::Left) == (left_dim == 1);
        }
        if agree {
            r.bump("socle oracle agreements");
        } else {
            let (c, t) = culprit(a);
            r.fail(c, t, check::SOCLE_ORACLE);
        }
    }

    if let Some(r) = reports.get(Suite::CrossChecks) {
        r.bump("algebras");
        let left = minimal_faithful_proj_inj(a, Side::Left);
        let right = minimal_faithful_proj_inj(a, Side::Right);
        if d.at_least(1) != left.is_some() || d.at_least(1) != right.is_some() {
            let (c, t) = culprit(a);
            r.fail(c, t, check::DOMDIM1_FAITHFUL);
        }
        let dc = double_centralizer_check::<Rational>(a);
        if dc.holds {
            r.bump("double centraliser holds");
        }
        if d.at_least(2) != dc.holds {
            let (c, t) = culprit(a);
            r.fail(c, t, check::DOMDIM2_DC);
        }
        let d_op = dominant_dimension::<Rational>(&a.opposite(), DEFAULT_CUTOFF);
        if d != d_op {
            let (c, t) = culprit(a);
            r.fail(c, t, check::DOMDIM_OPPOSITE);
        }
        if d.at_least(1) {
            r.bump("domdim>=1");
            match base_algebra::<Rational>(a) {
                Ok(base) if base.is_nakayama() => {
                    r.bump("base algebra Nakayama");
                    if base.is_selfinjective() {
                        r.bump("base algebra selfinjective");
                    }
                }
                _ => {
                    let (c, t) = culprit(a);
                    r.fail(c, t, check::BASE_NAKAYAMA);
                }
            }
            let f_dim = base_algebra::<Rational>(a).map(|b| b.dim()).ok();
            if right_base_dim(a) != f_dim {
                let (c, t) = culprit(a);
                r.fail(c, t, check::BASE_DIMS);
            }
        }
    }
}

/// Runs the corpus suites among `suites` over every algebra within `bounds`.
/// Work is split by quiver; results are merged in enumeration order, so the
/// output does not depend on the number of worker threads.
pub fn run_corpus(bounds: &CorpusBounds, suites: &[Suite]) -> Vec<VerificationReport> {
    let suites: Vec<Suite> = suites.iter().copied().filter(|s| s.uses_corpus()).collect();
    let map = corpus_bounds_map(bounds);
    let quivers = enumerate::quivers(bounds.max_vertices, bounds.max_arrows);
    let partials: Vec<Reports> = quivers
        .par_iter()
        .map(|q| {
            let mut reports = Reports::new(&suites, &map);
            enumerate::for_each_relation_set(q, bounds.max_relation_length, |rels| {
                let a = MonomialAlgebra::from_words(q.clone(), rels).expect("enumerated sets are admissible");
                check_algebra(&a, &mut reports);
            });
            reports
        })
        .collect();
    let mut total = Reports::new(&suites, &map);
    for part in partials {
        for (s, r) in part.by_suite {
            total.by_suite.get_mut(&s).expect("same suites").absorb(r);
        }
    }
    total.by_suite.into_values().collect()
}

fn kupisch_culprit(ks: &KupischSeries, m: &[Uniserial]) -> (String, String) {
    (ks.to_string(), describe(m))
}

/// Generator-cogenerators from every indecomposable: the biconditional
/// between Nakayama endomorphism algebras and allowed summands, QF-2 of every
/// endomorphism algebra, the projective-injective correspondence, and the
/// equality of the Kupisch series produced by allowed modules with those of
/// dominant dimension at least two (both restricted to the same bounds).
pub fn run_yamagata(max_n: usize, max_c: usize) -> VerificationReport {
    let mut report = VerificationReport::new(Suite::Yamagata.name(), kupisch_bounds_map(max_n, max_c));
    let all_series = enumerate_kupisch(max_n, max_c);
    let partials: Vec<(VerificationReport, BTreeSet<KupischSeries>)> = all_series
        .par_iter()
        .map(|ks| {
            let mut r = VerificationReport::new(Suite::Yamagata.name(), BTreeMap::new());
            let mut produced = BTreeSet::new();
            let b = ks.algebra();
            let allowed = allowed_summands(&b).expect("Kupisch algebras are Nakayama");
            let injectives = injective_uniserials(&b);
            let candidates = gen_cogen_candidates(&b, Universe::AllUniserials).expect("Nakayama");
            r.bump("series");
            for m in &candidates {
                r.bump("modules");
                let all_allowed = m.iter().all(|u| allowed.contains(u));
                if all_allowed {
                    r.bump("modules with allowed summands");
                }
                let end = endo_of(&b, m).algebra;
                let nakayama = end.is_nakayama();
                if nakayama {
                    r.bump("Nakayama endomorphism algebras");
                }
                if nakayama != all_allowed {
                    let (c, t) = kupisch_culprit(ks, m);
                    r.fail(c, t, check::YAMAGATA);
                }
                if !end.is_qf2() {
                    let (c, t) = kupisch_culprit(ks, m);
                    r.fail(c, t, check::ENDO_QF2);
                }
                let expected: Vec<usize> = (0..m.len()).filter(|&i| injectives.contains(&m[i])).collect();
                if end.projective_injective_summands() != expected {
                    let (c, t) = kupisch_culprit(ks, m);
                    r.fail(c, t, check::ENDO_PROJ_INJ);
                }
                if nakayama {
                    match end.kupisch_series() {
                        Some(series) => {
                            let d = dominant_dimension::<Rational>(&series.algebra(), DEFAULT_CUTOFF);
                            if !d.at_least(2) {
                                let (c, t) = kupisch_culprit(ks, m);
                                r.fail(c, t, check::ENDO_DOMDIM);
                            }
                            if all_allowed {
                                produced.insert(series.canonical());
                            }
                        }
                        None => {
                            let (c, t) = kupisch_culprit(ks, m);
                            r.fail(c, t, check::ENDO_DOMDIM);
                        }
                    }
                }
            }
            (r, produced)
        })
        .collect();
    let mut produced = BTreeSet::new();
    for (r, p) in partials {
        report.absorb(r);
        produced.extend(p);
    }

    let within: BTreeSet<KupischSeries> = produced
        .iter()
        .filter(|k| k.vertex_count() <= max_n && k.max_length() <= max_c)
        .cloned()
        .collect();
    let target: BTreeSet<KupischSeries> = all_series
        .par_iter()
        .filter(|k| dominant_dimension::<Rational>(&k.algebra(), DEFAULT_CUTOFF).at_least(2))
        .map(KupischSeries::canonical)
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    report
        .counts
        .insert("endomorphism series (all sizes)".into(), produced.len() as u64);
    report
        .counts
        .insert("endomorphism series within bounds".into(), within.len() as u64);
    report
        .counts
        .insert("series with domdim>=2".into(), target.len() as u64);
    report.notes.push(format!(
        "series sets compared within n <= {max_n}, c <= {max_c}; symmetric difference {}",
        within.symmetric_difference(&target).count()
    ));
    for k in within.symmetric_difference(&target) {
        let side = if within.contains(k) {
            "only from End_B(M)"
        } else {
            "only with domdim >= 2"
        };
        report.fail(k.to_string(), side.to_string(), check::KUPISCH_SETS);
    }
    report
}

/// Selfinjective `B` and `M = B` plus any set of `P/soc P`.
pub fn run_morita(max_n: usize, max_c: usize) -> VerificationReport {
    let mut report = VerificationReport::new(Suite::Morita.name(), kupisch_bounds_map(max_n, max_c));
    let series: Vec<KupischSeries> = enumerate_kupisch(max_n, max_c)
        .into_iter()
        .filter(KupischSeries::is_selfinjective)
        .collect();
    let partials: Vec<VerificationReport> = series
        .par_iter()
        .map(|ks| {
            let mut r = VerificationReport::new(Suite::Morita.name(), BTreeMap::new());
            r.bump("selfinjective series");
            let b = ks.algebra();
            let projectives = projective_uniserials(&b);
            let quotients: Vec<Uniserial> = projectives
                .iter()
                .filter(|p| p.len > 1)
                .map(|p| Uniserial {
                    top: p.top,
                    len: p.len - 1,
                })
                .collect();
            for mask in 0u64..(1 << quotients.len()) {
                let mut m = projectives.clone();
                m.extend(
                    (0..quotients.len())
                        .filter(|k| mask >> k & 1 == 1)
                        .map(|k| quotients[k]),
                );
                m.sort();
                r.bump("modules");
                let end = endo_of(&b, &m).algebra;
                let series = end.kupisch_series().filter(|_| end.is_nakayama());
                let Some(series) = series else {
                    let (c, t) = kupisch_culprit(ks, &m);
                    r.fail(c, t, check::MORITA_NAKAYAMA);
                    continue;
                };
                let a = series.algebra();
                if !base_algebra::<Rational>(&a).is_ok_and(|f| f.is_selfinjective()) {
                    let (c, t) = kupisch_culprit(ks, &m);
                    r.fail(c, t, check::MORITA_BASE);
                }
                if !dominant_dimension::<Rational>(&a, DEFAULT_CUTOFF).at_least(2) {
                    let (c, t) = kupisch_culprit(ks, &m);
                    r.fail(c, t, check::MORITA_DOMDIM);
                }
            }
            r
        })
        .collect();
    for r in partials {
        report.absorb(r);
    }
    report
}

/// Default bounds for the Nakayama suites.
pub const DEFAULT_MAX_N: usize = 3;
pub const DEFAULT_MAX_C: usize = 4;

/// Corpora provably larger than this are refused unless forced.
pub const FEASIBLE_CORPUS: u128 = 50_000_000;

#[cfg(test)]
mod tests {
    use super::*;
    use domdim_core::fixtures;

    #[test]
    fn five_vertex_example_is_not_reconstructed() {
        assert!(!reconstructs(&fixtures::paper_example()));
    }

    #[test]
    fn nakayama_domdim_two_is_reconstructed() {
        let a = "cyclic:3,2".parse::<KupischSeries>().unwrap().algebra();
        assert!(reconstructs(&a));
    }

    #[test]
    fn tiny_corpus_passes() {
        let b = CorpusBounds::new(2, 2, 3).unwrap();
        let reports = run_corpus(&b, &[Suite::MainTheorem, Suite::Qf2Chain, Suite::CrossChecks]);
        assert_eq!(reports.len(), 3);
        for r in &reports {
            assert!(r.passed, "{}", r.to_json());
            assert_eq!(r.count("algebras"), 65);
        }
    }

    #[test]
    fn small_nakayama_suites_pass() {
        let y = run_yamagata(2, 3);
        assert!(y.passed, "{}", y.to_json());
        let m = run_morita(2, 3);
        assert!(m.passed, "{}", m.to_json());
    }
}
