//! Whole-crate verification sweeps, one report per headline property.
//!
//! Every check pits the engine against a second route to the same numbers:
//! a generating-function oracle against an enumerator, a pairing count
//! against a rewriting engine, a matrix algebra against a star product.
//! All arithmetic is exact; `quick` only trims sweep sizes.

use std::collections::BTreeMap;

use num::bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::character::character_series;
use crate::error::Error;
use crate::flow::{compose_delta_fock, delta_fock, spectral_flow_module, DeltaExpansion};
use crate::fock::{
    basis_weight_charge, graded_dimension, heisenberg_mode, monomial_from_shape, virasoro_mode,
    zhu_star, FockVector, PbwMonomial,
};
use crate::induced::{induce, o_action, vertex_weakly_interlocked, InducedVector};
use crate::modes::{dixmier_phi_zero_modes, Generator, ModeElement, ModeWord};
use crate::mta::{
    annihilator_word, circledast, contraction_constant, corrupted_unity, creator_word, matrix_iso,
    matrix_iso_inv, star, unity, verify_strong_unity, verify_strong_unity_against, zhu_structure,
    MtaElement, WeylMatrix,
};
use crate::oracles;
use crate::partitions::{bipartitions_of, count_bipartitions, Bipartition, Partition};
use crate::rational::{q_int, q_one, q_ratio, q_zero, Q};
use crate::weight::{
    classify_chain, cw_iso_check, submodule_lattice, weakly_interlocked, weyl_act, BoundaryStatus,
    ChainSlice, Family, SubSpace, WeightModuleSpec, WeightVector,
};
use crate::weyl::WeylElement;

/// Outcome of one verification sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub id: u32,
    pub name: &'static str,
    pub cases: u64,
    pub passed: bool,
    pub details: String,
}

impl CheckReport {
    pub fn summary_line(&self) -> String {
        format!(
            "criterion {:02} {:<24} {} [{} cases] {}",
            self.id,
            self.name,
            if self.passed { "PASS" } else { "FAIL" },
            self.cases,
            self.details
        )
    }
}

fn finish(
    id: u32,
    name: &'static str,
    cases: u64,
    coverage: String,
    failures: Vec<String>,
) -> CheckReport {
    let passed = failures.is_empty();
    let details = if passed {
        coverage
    } else {
        let shown: Vec<&String> = failures.iter().take(3).collect();
        format!(
            "{} failing case(s), e.g. {}",
            failures.len(),
            shown
                .iter()
                .map(|s| s.as_str())
                .collect::<Vec<_>>()
                .join("; ")
        )
    };
    CheckReport {
        id,
        name,
        cases,
        passed,
        details,
    }
}

fn guarded(
    id: u32,
    name: &'static str,
    f: impl FnOnce() -> Result<CheckReport, Error>,
) -> CheckReport {
    match f() {
        Ok(r) => r,
        Err(e) => CheckReport {
            id,
            name,
            cases: 0,
            passed: false,
            details: format!("aborted: {e}"),
        },
    }
}

/// Bipartition counts against the series oracle, plus a membership probe.
pub fn check_bipartition_counts(quick: bool) -> CheckReport {
    guarded(1, "bipartition-counts", || {
        let dmax = if quick { 12u32 } else { 20 };
        let series = oracles::bipartition_series(dmax);
        let mut cases = 0u64;
        let mut failures = Vec::new();
        for d in 0..=dmax {
            cases += 1;
            let enumerated = BigInt::from(count_bipartitions(d));
            if enumerated != series[d as usize] {
                failures.push(format!(
                    "degree {d}: enumerated {enumerated}, series {}",
                    series[d as usize]
                ));
            }
        }
        let list = bipartitions_of(10);
        let probe = Bipartition::new(
            Partition::new(vec![4, 1]),
            Partition::new(vec![2, 2, 1]),
        );
        cases += 2;
        if !list.contains(&probe) {
            failures.push(format!("{probe} missing from the degree-10 enumeration"));
        }
        let mut dedup = list.clone();
        dedup.sort();
        dedup.dedup();
        if dedup.len() != list.len() {
            failures.push("degree-10 enumeration repeats an entry".into());
        }
        Ok(finish(
            1,
            "bipartition-counts",
            cases,
            format!(
                "counts match prod (1-q^n)^-2 through degree {dmax}; top value {}",
                series[dmax as usize]
            ),
            failures,
        ))
    })
}

/// Character table against the graded-dimension enumerator.
pub fn check_character_table(quick: bool) -> CheckReport {
    guarded(2, "character-table", || {
        let (dmax, jwin) = if quick { (5u32, 5i64) } else { (8, 8) };
        let series = character_series(dmax, jwin)?;
        let mut cases = 0u64;
        let mut failures = Vec::new();
        for d in 0..=dmax {
            for j in -jwin..=jwin {
                cases += 1;
                let expected = BigInt::from(graded_dimension(d, j));
                let got = series.coefficient(d, j);
                if got != expected {
                    failures.push(format!("(q^{d}, z^{j}): series {got}, basis count {expected}"));
                }
            }
        }
        Ok(finish(
            2,
            "character-table",
            cases,
            format!("series coefficients match basis counts for weight <= {dmax}, |charge| <= {jwin}"),
            failures,
        ))
    })
}

/// Virasoro (central charge 2) and Heisenberg brackets on a basis section.
pub fn check_mode_brackets(quick: bool) -> CheckReport {
    guarded(3, "mode-brackets", || {
        let (dmax, rmax, range) = if quick {
            (3u32, 1usize, 2i64)
        } else {
            (5, 2, 3)
        };
        let central = |m: i64| q_ratio(m * m * m - m, 12) * q_int(2);
        let mut cases = 0u64;
        let mut failures = Vec::new();
        for d in 0..=dmax {
            for bp in bipartitions_of(d) {
                for r in 0..=rmax {
                    let v = FockVector::monomial(monomial_from_shape(&bp, r));
                    let mut lv = BTreeMap::new();
                    let mut jv = BTreeMap::new();
                    for n in -2 * range..=2 * range {
                        lv.insert(n, virasoro_mode(n, &v));
                        jv.insert(n, heisenberg_mode(n, &v));
                    }
                    let mut llv = BTreeMap::new();
                    let mut jjv = BTreeMap::new();
                    for m in -range..=range {
                        for n in -range..=range {
                            llv.insert((m, n), virasoro_mode(m, &lv[&n]));
                            jjv.insert((m, n), heisenberg_mode(m, &jv[&n]));
                        }
                    }
                    for m in -range..=range {
                        for n in -range..=range {
                            cases += 2;
                            let lhs = llv[&(m, n)].sub(&llv[&(n, m)]);
                            let mut rhs = lv[&(m + n)].scale(&q_int(m - n));
                            if m + n == 0 {
                                rhs = rhs.add(&v.scale(&central(m)));
                            }
                            if lhs != rhs {
                                failures.push(format!("[L({m}), L({n})] fails on {v}"));
                            }
                            let jlhs = jjv[&(m, n)].sub(&jjv[&(n, m)]);
                            let jrhs = if m + n == 0 {
                                v.scale(&q_int(-m))
                            } else {
                                FockVector::zero()
                            };
                            if jlhs != jrhs {
                                failures.push(format!("[J({m}), J({n})] fails on {v}"));
                            }
                        }
                    }
                }
            }
        }
        Ok(finish(
            3,
            "mode-brackets",
            cases,
            format!(
                "both bracket families hold on weight <= {dmax}, zero-mode exponent <= {rmax}, |m|, |n| <= {range}"
            ),
            failures,
        ))
    })
}

fn mta_diff_is_zero(x: &MtaElement, y: &MtaElement) -> bool {
    x.add(&y.scale(&-q_one())).is_zero()
}

/// Epsilon products against the contraction constants, and the matrix model.
pub fn check_mta_products(quick: bool) -> CheckReport {
    guarded(4, "mta-products", || {
        let dmax = if quick { 2u32 } else { 3 };
        let mut cases = 0u64;
        let mut failures = Vec::new();
        for d in 1..=dmax {
            let bps = bipartitions_of(d);
            let consts: Vec<Q> = bps
                .iter()
                .map(contraction_constant)
                .collect::<Result<_, _>>()?;
            for (pi, p) in bps.iter().enumerate() {
                for (qi, q) in bps.iter().enumerate() {
                    let x = MtaElement::epsilon(p.clone(), q.clone());
                    for (ri, r) in bps.iter().enumerate() {
                        for (si, s) in bps.iter().enumerate() {
                            cases += 1;
                            let y = MtaElement::epsilon(r.clone(), s.clone());
                            let prod = star(&x, &y)?;
                            let coeff = if qi == ri { consts[qi].clone() } else { q_zero() };
                            let expect =
                                MtaElement::epsilon(p.clone(), s.clone()).scale(&coeff);
                            if !mta_diff_is_zero(&prod, &expect) {
                                failures.push(format!(
                                    "eps[{p},{q}] * eps[{r},{s}] (indices {pi},{qi},{ri},{si})"
                                ));
                            }
                        }
                    }
                }
            }
            // faithful matrix model: unity goes to the identity matrix and
            // the basis round-trips through the isomorphism
            cases += 1;
            if matrix_iso(&unity(d)?)? != WeylMatrix::identity(bps.len()) {
                failures.push(format!("unity({d}) does not map to the identity matrix"));
            }
            for p in &bps {
                for q in &bps {
                    cases += 1;
                    let x = MtaElement::epsilon(p.clone(), q.clone());
                    let back = matrix_iso_inv(&matrix_iso(&x)?, d)?;
                    if !mta_diff_is_zero(&back, &x) {
                        failures.push(format!("round trip moves eps[{p},{q}]"));
                    }
                }
            }
        }
        // homomorphism on dense elements with nonscalar middles
        let bps = bipartitions_of(dmax);
        let cycle = [
            WeylElement::one(),
            WeylElement::gen_a(),
            WeylElement::gen_astar(),
        ];
        let mut x = MtaElement::zero(dmax, -(dmax as i64));
        let mut y = MtaElement::zero(dmax, -(dmax as i64));
        for (i, p) in bps.iter().enumerate() {
            for (j, q) in bps.iter().enumerate() {
                x.add_entry(p.clone(), q.clone(), cycle[(i + 2 * j) % 3].clone());
                y.add_entry(p.clone(), q.clone(), cycle[(2 * i + j) % 3].clone());
            }
        }
        cases += 1;
        if matrix_iso(&star(&x, &y)?)? != matrix_iso(&x)?.multiply(&matrix_iso(&y)?) {
            failures.push(format!("matrix model breaks on dense degree-{dmax} elements"));
        }
        // inverse round trip starting from the matrix side
        let n2 = bipartitions_of(2).len();
        let mut m = WeylMatrix::zero(n2);
        for i in 0..n2 {
            for j in 0..n2 {
                *m.entry_mut(i, j) = cycle[(i + j) % 3].clone();
            }
        }
        cases += 1;
        if matrix_iso(&matrix_iso_inv(&m, 2)?)? != m {
            failures.push("matrix-side round trip moves a dense degree-2 matrix".into());
        }
        Ok(finish(
            4,
            "mta-products",
            cases,
            format!("epsilon products, matrix model, and round trips agree through degree {dmax}"),
            failures,
        ))
    })
}

/// Unity elements: two-sided identity, strong identities, negative control.
pub fn check_unity(quick: bool) -> CheckReport {
    guarded(5, "unity", || {
        let (dmax, nm) = if quick { (3u32, 2u32) } else { (4, 3) };
        let mut cases = 0u64;
        let mut failures = Vec::new();
        for d in 1..=dmax {
            let u = unity(d)?;
            for p in bipartitions_of(d) {
                for q in bipartitions_of(d) {
                    cases += 2;
                    let x = MtaElement::epsilon(p.clone(), q.clone());
                    if !mta_diff_is_zero(&star(&u, &x)?, &x) {
                        failures.push(format!("left unity fails at degree {d} on eps[{p},{q}]"));
                    }
                    if !mta_diff_is_zero(&star(&x, &u)?, &x) {
                        failures.push(format!("right unity fails at degree {d} on eps[{p},{q}]"));
                    }
                }
            }
        }
        for n in 0..=nm {
            for m in 0..=nm {
                let rep = verify_strong_unity(n, m)?;
                cases += rep.cases;
                if !rep.passed {
                    failures.push(format!(
                        "strong unity fails for bidegree ({n}, -{m}): {}",
                        rep.failures.first().cloned().unwrap_or_default()
                    ));
                }
            }
        }
        // the deliberately broken diagonal must be caught
        cases += 1;
        let bad = corrupted_unity(2)?;
        let control = verify_strong_unity_against(&bad, &bad, 2, 2)?;
        if control.passed {
            failures.push("corrupted unity slipped through the strong-unity check".into());
        }
        Ok(finish(
            5,
            "unity",
            cases,
            format!(
                "two-sided identity through degree {dmax}, strong identities for n, m <= {nm}, negative control caught"
            ),
            failures,
        ))
    })
}

/// Zhu block sizes against the series oracle and frozen small values.
pub fn check_zhu_blocks(_quick: bool) -> CheckReport {
    guarded(6, "zhu-blocks", || {
        let mut cases = 0u64;
        let mut failures = Vec::new();
        let series = oracles::bipartition_series(4);
        for d in 0..=4u32 {
            cases += 1;
            let desc = zhu_structure(d);
            let expected: Vec<u64> = (0..=d as usize)
                .map(|j| u64::try_from(series[j].clone()).expect("small count"))
                .collect();
            if desc.blocks != expected {
                failures.push(format!("level {d}: blocks {:?}, series {:?}", desc.blocks, expected));
            }
            let total: u64 = expected.iter().map(|b| b * b).sum();
            if desc.total_rank != total {
                failures.push(format!(
                    "level {d}: total rank {}, expected {total}",
                    desc.total_rank
                ));
            }
        }
        cases += 2;
        let d1 = zhu_structure(1);
        if d1.blocks != vec![1, 2] || d1.total_rank != 5 {
            failures.push(format!("level 1: {:?} rank {}", d1.blocks, d1.total_rank));
        }
        let d4 = zhu_structure(4);
        if d4.blocks != vec![1, 2, 5, 10, 20] || d4.total_rank != 530 {
            failures.push(format!("level 4: {:?} rank {}", d4.blocks, d4.total_rank));
        }
        Ok(finish(
            6,
            "zhu-blocks",
            cases,
            "block sizes match the bipartition series for levels 0 through 4".into(),
            failures,
        ))
    })
}

fn gen_a_state() -> FockVector {
    FockVector::monomial(PbwMonomial::new(vec![-1], vec![]))
}

fn gen_astar_state() -> FockVector {
    FockVector::monomial(PbwMonomial::new(vec![], vec![0]))
}

/// The star product represented on the bottom level of every induced family.
pub fn check_zhu_representation(quick: bool) -> CheckReport {
    guarded(7, "zhu-representation", || {
        let window = if quick { 8u32 } else { 10 };
        let families = if quick {
            vec![Family::V, Family::WLambda(q_ratio(1, 2)), Family::W0Plus]
        } else {
            vec![
                Family::V,
                Family::ConjV,
                Family::WLambda(q_ratio(1, 2)),
                Family::W0Plus,
                Family::W0Minus,
            ]
        };
        let states = [
            ("a", gen_a_state()),
            ("a*", gen_astar_state()),
            ("J", FockVector::current_j()),
            ("w", FockVector::omega()),
        ];
        let mut cases = 0u64;
        let mut failures = Vec::new();
        for family in families {
            let label = family.label();
            let spec = WeightModuleSpec::new(family, window);
            let mid = (spec.domain_lo() + spec.domain_hi()) / 2;
            let m = induce(spec, 2)?;
            let commutator = zhu_star(&gen_a_state(), &gen_astar_state(), 0)?
                .sub(&zhu_star(&gen_astar_state(), &gen_a_state(), 0)?);
            for r in mid - 1..=mid + 1 {
                let x = InducedVector::level_zero(r);
                cases += 2;
                if o_action(&m, &commutator, &x)? != x {
                    failures.push(format!("[a, a*] star commutator is not 1 on {label} at {r}"));
                }
                if !o_action(&m, &FockVector::omega(), &x)?.is_zero() {
                    failures.push(format!("omega mode does not vanish on {label} at {r}"));
                }
                for (ul, u) in &states {
                    for (wl, w) in &states {
                        cases += 1;
                        let prod = zhu_star(u, w, 0)?;
                        let lhs = o_action(&m, &prod, &x)?;
                        let rhs = o_action(&m, u, &o_action(&m, w, &x)?)?;
                        if lhs != rhs {
                            failures.push(format!(
                                "o({ul} * {wl}) differs from o({ul})o({wl}) on {label} at {r}"
                            ));
                        }
                    }
                }
            }
        }
        Ok(finish(
            7,
            "zhu-representation",
            cases,
            format!(
                "star commutator acts as 1 and o is multiplicative on bottom levels, window {window}"
            ),
            failures,
        ))
    })
}

/// Weyl relation, aa* spectra, socle/radical shapes, conjugation bridge.
pub fn check_weight_classification(quick: bool) -> CheckReport {
    guarded(8, "weight-classification", || {
        let window = if quick { 8u32 } else { 12 };
        let iso_window = if quick { 6u32 } else { 8 };
        let lambdas: Vec<Q> = if quick {
            vec![q_ratio(1, 2)]
        } else {
            vec![q_ratio(1, 3), q_ratio(1, 2), q_ratio(2, 3)]
        };
        let families = vec![
            Family::V,
            Family::ConjV,
            Family::WLambda(q_ratio(1, 2)),
            Family::W0Plus,
            Family::W0Minus,
        ];
        let mut cases = 0u64;
        let mut failures = Vec::new();
        for family in &families {
            let label = family.label();
            let spec = WeightModuleSpec::new(family.clone(), window);
            for k in spec.domain_lo() + 1..=spec.domain_hi() - 1 {
                let x = WeightVector::monomial(k);
                let raised = weyl_act(&spec, crate::modes::GenKind::AStar, &x)?;
                let lowered = weyl_act(&spec, crate::modes::GenKind::A, &x)?;
                cases += 3;
                // canonical relation a a* - a* a = 1 on the interior
                let lhs = weyl_act(&spec, crate::modes::GenKind::A, &raised)?
                    .sub(&weyl_act(&spec, crate::modes::GenKind::AStar, &lowered)?);
                if lhs != x {
                    failures.push(format!("Weyl relation fails on {label} at exponent {k}"));
                }
                // aa* diagonal with the published eigenvalue
                let aa = weyl_act(&spec, crate::modes::GenKind::A, &raised)?;
                if aa != x.scale(&family.aa_star_eigenvalue(k)) {
                    failures.push(format!("aa* not diagonal on {label} at exponent {k}"));
                }
                // the lowering arrow vanishes exactly on the published zeros
                let low = weyl_act(&spec, family.lowering_kind(), &x)?;
                if low.is_zero() != family.lowering_zeros().contains(&k) {
                    failures.push(format!("lowering zero set wrong on {label} at exponent {k}"));
                }
            }
            let lat = submodule_lattice(&spec);
            cases += 1;
            if lat.boundary != BoundaryStatus::Clean {
                failures.push(format!("boundary not clean for {label}"));
            }
            match family {
                Family::W0Plus | Family::W0Minus => {
                    cases += 3;
                    let cut = match lat.socle {
                        SubSpace::UpSet { min_exponent } => min_exponent,
                        _ => {
                            failures.push(format!("socle of {label} is not a proper up-set"));
                            continue;
                        }
                    };
                    if lat.radical != lat.socle || lat.closed.len() != 3 {
                        failures.push(format!("lattice of {label} is not 0 < S < W"));
                    }
                    let sub_chain = ChainSlice {
                        killer: family.lowering_kind(),
                        eigs: (cut..=spec.domain_hi())
                            .map(|k| family.aa_star_eigenvalue(k))
                            .collect(),
                    };
                    let quot_chain = ChainSlice {
                        killer: family.raising_kind(),
                        eigs: (spec.domain_lo()..cut)
                            .rev()
                            .map(|k| family.aa_star_eigenvalue(k))
                            .collect(),
                    };
                    let (want_sub, want_quot) = match family {
                        Family::W0Plus => ("V", "cV"),
                        _ => ("cV", "V"),
                    };
                    if classify_chain(&sub_chain) != Some(want_sub) {
                        failures.push(format!("socle of {label} is not a copy of {want_sub}"));
                    }
                    if classify_chain(&quot_chain) != Some(want_quot) {
                        failures.push(format!(
                            "quotient of {label} by its socle is not a copy of {want_quot}"
                        ));
                    }
                }
                _ => {
                    cases += 1;
                    if lat.socle != SubSpace::Whole
                        || lat.radical != SubSpace::Zero
                        || lat.closed.len() != 2
                    {
                        failures.push(format!("{label} is not simple on the window"));
                    }
                }
            }
        }
        for lambda in &lambdas {
            let rep = cw_iso_check(lambda, iso_window)?;
            cases += rep.cases;
            if !rep.passed {
                failures.push(format!(
                    "conjugation bridge fails for offset {}: {}",
                    lambda,
                    rep.failures.first().cloned().unwrap_or_default()
                ));
            }
        }
        Ok(finish(
            8,
            "weight-classification",
            cases,
            format!(
                "relations, spectra, and lattice shapes verified on window {window}; bridge checked for {} offset(s)",
                lambdas.len()
            ),
            failures,
        ))
    })
}

/// The weakly-interlocked verdicts, on the base modules, their inductions,
/// and the spectral flows of those inductions.
pub fn check_interlock(quick: bool) -> CheckReport {
    guarded(9, "interlock", || {
        let window = 8u32;
        let mut cases = 0u64;
        let mut failures = Vec::new();
        let expectations = [
            (Family::V, true),
            (Family::ConjV, true),
            (Family::WLambda(q_ratio(1, 2)), true),
            (Family::W0Plus, false),
            (Family::W0Minus, false),
        ];
        for (family, expect) in &expectations {
            let label = family.label();
            let rep = weakly_interlocked(&WeightModuleSpec::new(family.clone(), window));
            cases += 1;
            if rep.weakly_interlocked != *expect {
                failures.push(format!(
                    "{label}: expected weakly interlocked = {expect}, got {}",
                    rep.weakly_interlocked
                ));
            }
            if !*expect && !rep.witness.contains("not isomorphic") {
                failures.push(format!("{label}: witness does not name the failing side"));
            }
        }
        // same verdicts through the induced construction
        let vertex = [
            (Family::V, true),
            (Family::W0Plus, false),
            (Family::W0Minus, false),
        ];
        let mut induced = Vec::new();
        for (family, expect) in &vertex {
            let label = family.label();
            let m = induce(WeightModuleSpec::new(family.clone(), 6), 2)?;
            let rep = vertex_weakly_interlocked(&m);
            cases += 1;
            if rep.weakly_interlocked != *expect || !rep.crosscheck_passed {
                failures.push(format!(
                    "induced {label}: verdict {} (crosscheck {})",
                    rep.weakly_interlocked, rep.crosscheck_passed
                ));
            }
            induced.push((label, m, *expect));
        }
        // and through every flow in the sampled range
        let ells: Vec<i64> = if quick {
            vec![-1, 1]
        } else {
            (-3..=3).filter(|l| *l != 0).collect()
        };
        for (label, m, expect) in &induced {
            for ell in &ells {
                let flowed = spectral_flow_module(m, *ell);
                let rep = vertex_weakly_interlocked(&flowed);
                cases += 1;
                if rep.weakly_interlocked != *expect || !rep.crosscheck_passed {
                    failures.push(format!(
                        "flow {ell} of induced {label}: verdict {} (crosscheck {})",
                        rep.weakly_interlocked, rep.crosscheck_passed
                    ));
                }
            }
        }
        Ok(finish(
            9,
            "interlock",
            cases,
            format!(
                "verdicts stable across base modules, inductions, and flows ell in {:?}",
                ells
            ),
            failures,
        ))
    })
}

fn fock_section(dmax: u32, jmax: i64) -> Vec<FockVector> {
    let mut out = Vec::new();
    for d in 0..=dmax {
        for j in -jmax..=jmax {
            for mono in basis_weight_charge(d, j) {
                out.push(FockVector::monomial(mono));
            }
        }
    }
    out
}

/// The delta operator: normalization, generator scaling, invertibility, and
/// the translation bracket.
pub fn check_delta_operator(quick: bool) -> CheckReport {
    guarded(10, "delta-operator", || {
        let ells: Vec<i64> = if quick {
            (-2..=2).collect()
        } else {
            (-3..=3).collect()
        };
        let (dinv, dbrk) = if quick { (3u32, 2u32) } else { (4, 3) };
        let inv_states = fock_section(dinv, dinv as i64);
        let brk_states = fock_section(dbrk, dbrk as i64);
        let mut cases = 0u64;
        let mut failures = Vec::new();
        for ell in &ells {
            let ell = *ell;
            cases += 3;
            if delta_fock(ell, &FockVector::vacuum())
                != DeltaExpansion::single(0, FockVector::vacuum())
            {
                failures.push(format!("delta({ell}) moves the vacuum"));
            }
            if delta_fock(ell, &gen_a_state())
                != DeltaExpansion::single(ell, gen_a_state())
            {
                failures.push(format!("delta({ell}) on a is not x^{ell} a"));
            }
            if delta_fock(ell, &gen_astar_state())
                != DeltaExpansion::single(-ell, gen_astar_state())
            {
                failures.push(format!("delta({ell}) on a* is not x^-{ell} a*"));
            }
            for v in &inv_states {
                cases += 1;
                let back = compose_delta_fock(-ell, &delta_fock(ell, v));
                if back != DeltaExpansion::single(0, v.clone()) {
                    failures.push(format!("delta({ell}) not inverted by delta({}) on {v}", -ell));
                }
            }
            for v in &brk_states {
                cases += 1;
                let dv = delta_fock(ell, v);
                let mut lhs = DeltaExpansion::zero();
                for (&p, w) in dv.terms() {
                    lhs.add_term(p, virasoro_mode(-1, w));
                }
                for (&p, w) in delta_fock(ell, &virasoro_mode(-1, v)).terms() {
                    lhs.add_term(p, w.scale(&-q_one()));
                }
                let mut rhs = DeltaExpansion::zero();
                for (&p, w) in dv.derivative().terms() {
                    rhs.add_term(p, w.scale(&-q_one()));
                }
                if lhs != rhs {
                    failures.push(format!("[T, delta({ell})] is not -d/dx delta on {v}"));
                }
            }
        }
        Ok(finish(
            10,
            "delta-operator",
            cases,
            format!(
                "identities hold for ell in {:?}; inverse on weight <= {dinv}, bracket on weight <= {dbrk}",
                ells
            ),
            failures,
        ))
    })
}

fn random_word(rng: &mut ChaCha8Rng, max_len: usize, idx: i64) -> ModeWord {
    let len = rng.gen_range(0..=max_len);
    let gens = (0..len)
        .map(|_| {
            let i = rng.gen_range(-idx..=idx);
            if rng.gen_bool(0.5) {
                Generator::a(i)
            } else {
                Generator::astar(i)
            }
        })
        .collect();
    ModeWord::new(gens)
}

fn random_element(rng: &mut ChaCha8Rng, words: usize, max_len: usize, idx: i64) -> ModeElement {
    let mut e = ModeElement::zero();
    for _ in 0..rng.gen_range(1..=words) {
        let num = rng.gen_range(1..=3i64) * if rng.gen_bool(0.5) { 1 } else { -1 };
        let den = rng.gen_range(1..=3i64);
        e.add_term(random_word(rng, max_len, idx), q_ratio(num, den));
    }
    e
}

fn random_zero_mode_element(rng: &mut ChaCha8Rng, max_len: usize) -> ModeElement {
    let len = rng.gen_range(1..=max_len);
    let gens = (0..len)
        .map(|_| {
            if rng.gen_bool(0.5) {
                Generator::a(0)
            } else {
                Generator::astar(0)
            }
        })
        .collect();
    ModeElement::from_word(ModeWord::new(gens))
}

/// Seeded randomized law suites plus the exhaustive Wick comparison.
pub fn check_property_suites(quick: bool) -> CheckReport {
    guarded(11, "property-suites", || {
        let scale = if quick { 1usize } else { 2 };
        let mut cases = 0u64;
        let mut failures = Vec::new();

        // normal ordering is idempotent
        let mut rng = ChaCha8Rng::seed_from_u64(0x0be7a_0001);
        for _ in 0..100 * scale {
            cases += 1;
            let e = ModeElement::from_word(random_word(&mut rng, 5, 3)).normal_order();
            if e.normal_order() != e {
                failures.push(format!("normal ordering not idempotent on {e}"));
            }
        }

        // multiplication is associative
        let mut rng = ChaCha8Rng::seed_from_u64(0x0be7a_0002);
        for _ in 0..30 * scale {
            cases += 1;
            let x = random_element(&mut rng, 2, 2, 2);
            let y = random_element(&mut rng, 2, 2, 2);
            let z = random_element(&mut rng, 2, 2, 2);
            if x.multiply(&y).multiply(&z) != x.multiply(&y.multiply(&z)) {
                failures.push("associativity fails on a random triple".into());
            }
        }

        // index shifts are multiplicative automorphisms composing additively;
        // the flow canonicalizes, so compare canonical representatives
        let mut rng = ChaCha8Rng::seed_from_u64(0x0be7a_0003);
        for _ in 0..30 * scale {
            cases += 3;
            let x = random_element(&mut rng, 2, 3, 3).normal_order();
            let y = random_element(&mut rng, 2, 3, 3).normal_order();
            let ell = rng.gen_range(-3..=3i64);
            let k = rng.gen_range(-3..=3i64);
            if x.multiply(&y).spectral_flow(ell) != x.spectral_flow(ell).multiply(&y.spectral_flow(ell)) {
                failures.push(format!("flow {ell} is not multiplicative"));
            }
            if x.spectral_flow(ell).spectral_flow(k) != x.spectral_flow(ell + k) {
                failures.push(format!("flows {ell} and {k} do not compose additively"));
            }
            if x.spectral_flow(ell).spectral_flow(-ell) != x {
                failures.push(format!("flow {ell} is not invertible"));
            }
        }

        // the zero-mode twist: multiplicative, and of order four
        let mut rng = ChaCha8Rng::seed_from_u64(0x0be7a_0004);
        for _ in 0..20 * scale {
            cases += 2;
            let x = random_zero_mode_element(&mut rng, 3).normal_order();
            let y = random_zero_mode_element(&mut rng, 3).normal_order();
            let num = rng.gen_range(1..=3i64);
            let den = rng.gen_range(1..=3i64);
            let lambda = q_ratio(num, den);
            let lhs = dixmier_phi_zero_modes(&x.multiply(&y), &lambda)?;
            let rhs = dixmier_phi_zero_modes(&x, &lambda)?
                .multiply(&dixmier_phi_zero_modes(&y, &lambda)?);
            if lhs != rhs {
                failures.push(format!("twist at {lambda} is not multiplicative"));
            }
            let mut four = x.clone();
            for _ in 0..4 {
                four = dixmier_phi_zero_modes(&four, &lambda)?;
            }
            if four != x {
                failures.push(format!("twist at {lambda} does not have order four"));
            }
        }
        cases += 1;
        if dixmier_phi_zero_modes(&ModeElement::from_generator(Generator::a(0)), &q_zero()).is_ok()
        {
            failures.push("twist accepted a zero parameter".into());
        }

        // contraction engine against the pairing-sum oracle, exhaustively
        let dmax = if quick { 3u32 } else { 4 };
        for d1 in 0..=dmax {
            for d2 in 0..=dmax {
                for beta in bipartitions_of(d1) {
                    for alpha in bipartitions_of(d2) {
                        cases += 1;
                        let ann = annihilator_word(&beta);
                        let cre = creator_word(&alpha);
                        let engine = circledast(&ann, &cre);
                        let oracle = oracles::wick_complete_contraction(&ann, &cre);
                        if !engine.sub(&WeylElement::scalar(oracle.clone())).is_zero() {
                            failures.push(format!(
                                "contraction of [{beta}] against [{alpha}]: engine {engine}, pairings {oracle}"
                            ));
                        }
                    }
                }
            }
        }
        Ok(finish(
            11,
            "property-suites",
            cases,
            format!(
                "seeded law suites clean; contraction engine matches pairing sums through degree {dmax}"
            ),
            failures,
        ))
    })
}

/// Runs every check in order. `quick` shrinks the sweeps for interactive use.
pub fn run_all(quick: bool) -> Vec<CheckReport> {
    vec![
        check_bipartition_counts(quick),
        check_character_table(quick),
        check_mode_brackets(quick),
        check_mta_products(quick),
        check_unity(quick),
        check_zhu_blocks(quick),
        check_zhu_representation(quick),
        check_weight_classification(quick),
        check_interlock(quick),
        check_delta_operator(quick),
        check_property_suites(quick),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_sweep_is_green() {
        for report in run_all(true) {
            assert!(report.passed, "{}", report.summary_line());
            assert!(report.cases > 0, "{} ran no cases", report.name);
        }
    }

    #[test]
    fn ids_are_sequential() {
        let ids: Vec<u32> = run_all(true).iter().map(|r| r.id).collect();
        assert_eq!(ids, (1..=11).collect::<Vec<u32>>());
    }
}
