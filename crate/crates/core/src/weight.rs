//! Weight modules over the zero-mode Weyl algebra: five families realized
//! on (Laurent) polynomial spaces `x^{k+lambda}`, with exact window-tracked
//! actions, socle/radical detection, and the weakly-interlocked test.
//!
//! Every family has one-dimensional `aa*`-eigenspaces, so each module is a
//! chain of lines connected by the raising and lowering generator. A
//! submodule is therefore a basis-supported up-set, and the whole lattice
//! is controlled by where the lowering coefficient vanishes. Those
//! coefficients are linear polynomials in the exponent, so their zero sets
//! are known exactly over all of the (infinite) exponent domain; the
//! windowed orbit computation is still run in full and cross-checked
//! against the analytic answer, and any disagreement is reported as an
//! inconclusive boundary instead of a guess.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::{One, Signed, Zero};

use crate::error::Error;
use crate::modes::GenKind;
use crate::rational::{format_q, q_int, q_one, q_zero, Q};
use crate::weyl::WeylElement;

/// The five weight-module families. `WLambda` carries an exact rational
/// exponent offset strictly between 0 and 1, which keeps it off the integer
/// lattice where the lowering coefficient could vanish.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    V,
    ConjV,
    WLambda(Q),
    W0Plus,
    W0Minus,
}

impl Family {
    /// `x^lambda` offset shared by every basis exponent.
    pub fn lambda(&self) -> Q {
        match self {
            Family::WLambda(l) => l.clone(),
            _ => q_zero(),
        }
    }

    /// Laurent families live on two-sided exponent windows; the polynomial
    /// families on `[0, window]`.
    pub fn is_laurent(&self) -> bool {
        matches!(
            self,
            Family::WLambda(_) | Family::W0Plus | Family::W0Minus
        )
    }

    /// In the conjugate orientation `a` multiplies and `a*` differentiates
    /// (with a sign); otherwise `a` differentiates and `a*` multiplies.
    pub fn is_conjugate_orientation(&self) -> bool {
        matches!(self, Family::ConjV | Family::W0Minus)
    }

    /// The generator that lowers the exponent.
    pub fn lowering_kind(&self) -> GenKind {
        if self.is_conjugate_orientation() {
            GenKind::AStar
        } else {
            GenKind::A
        }
    }

    /// The generator that raises the exponent (always with coefficient 1).
    pub fn raising_kind(&self) -> GenKind {
        if self.is_conjugate_orientation() {
            GenKind::A
        } else {
            GenKind::AStar
        }
    }

    /// Coefficient picked up when the lowering generator maps `x^{k+l}` to
    /// `x^{k-1+l}`.
    pub fn lowering_coefficient(&self, k: i64) -> Q {
        let v = q_int(k) + self.lambda();
        if self.is_conjugate_orientation() {
            -v
        } else {
            v
        }
    }

    /// Eigenvalue of the product `a a*` (raise first, then lower) on
    /// `x^{k+lambda}`.
    pub fn aa_star_eigenvalue(&self, k: i64) -> Q {
        if self.is_conjugate_orientation() {
            // a* a x^{k+l}: multiply to k+1, then -(k+1+l)? no: here a a*
            // means a after a*: a* differentiates DOWN, a multiplies UP
            -(q_int(k) + self.lambda())
        } else {
            q_int(k) + q_one() + self.lambda()
        }
    }

    pub fn label(&self) -> String {
        match self {
            Family::V => "V".into(),
            Family::ConjV => "cV".into(),
            Family::WLambda(l) => format!("W({})", format_q(l)),
            Family::W0Plus => "W0+".into(),
            Family::W0Minus => "W0-".into(),
        }
    }

    /// Exponent values where the lowering coefficient vanishes, over the
    /// whole integer lattice (not just a window). Linear in `k`, so the set
    /// has at most one point.
    pub fn lowering_zeros(&self) -> Vec<i64> {
        // k + lambda = 0 has an integer solution only for lambda = 0
        if self.lambda().is_zero() {
            vec![0]
        } else {
            vec![]
        }
    }
}

/// A family together with an exponent half-width for truncated computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightModuleSpec {
    pub family: Family,
    pub window: u32,
}

impl WeightModuleSpec {
    pub fn new(family: Family, window: u32) -> Self {
        WeightModuleSpec { family, window }
    }

    pub fn domain_lo(&self) -> i64 {
        if self.family.is_laurent() {
            -(self.window as i64)
        } else {
            0
        }
    }

    pub fn domain_hi(&self) -> i64 {
        self.window as i64
    }

    /// Whether `k` indexes a basis vector of the truncation.
    pub fn in_window(&self, k: i64) -> bool {
        k >= self.domain_lo() && k <= self.domain_hi()
    }

    /// True when exponent `k - 1` exists in the untruncated module.
    fn has_lower_neighbor(&self, k: i64) -> bool {
        self.family.is_laurent() || k > 0
    }
}

/// A finite combination of basis exponents; the monomial `k` stands for
/// `x^{k + lambda}`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightVector {
    terms: BTreeMap<i64, Q>,
}

impl WeightVector {
    pub fn zero() -> Self {
        WeightVector::default()
    }

    pub fn monomial(k: i64) -> Self {
        let mut v = WeightVector::zero();
        v.add_term(k, q_one());
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, k: i64) -> Q {
        self.terms.get(&k).cloned().unwrap_or_else(q_zero)
    }

    pub fn add_term(&mut self, k: i64, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &WeightVector) -> WeightVector {
        let mut out = self.clone();
        for (&k, c) in &other.terms {
            out.add_term(k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &WeightVector) -> WeightVector {
        self.add(&other.scale(&-q_one()))
    }

    pub fn scale(&self, c: &Q) -> WeightVector {
        let mut out = WeightVector::zero();
        if c.is_zero() {
            return out;
        }
        for (&k, v) in &self.terms {
            out.add_term(k, v * c);
        }
        out
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            let (sign, mag) = if c.is_negative() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            if mag.is_one() {
                write!(f, "x^{k}")?;
            } else {
                write!(f, "{} * x^{k}", format_q(&mag))?;
            }
        }
        Ok(())
    }
}

/// Action result with truncation bookkeeping: the in-window part plus flags
/// for terms that escaped through either edge with nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrackedVector {
    pub vector: WeightVector,
    pub leaked_low: bool,
    pub leaked_high: bool,
}

/// One Weyl generator applied to a weight vector, keeping what stays in the
/// window and flagging what leaves it.
pub fn weyl_act_tracked(spec: &WeightModuleSpec, kind: GenKind, v: &WeightVector) -> TrackedVector {
    let mut out = WeightVector::zero();
    let mut leaked_low = false;
    let mut leaked_high = false;
    for (&k, c) in v.terms() {
        debug_assert!(spec.in_window(k), "input exponent {k} outside window");
        if kind == spec.family.raising_kind() {
            if k + 1 > spec.domain_hi() {
                leaked_high = true;
            } else {
                out.add_term(k + 1, c.clone());
            }
        } else {
            let coeff = spec.family.lowering_coefficient(k);
            if coeff.is_zero() || !spec.has_lower_neighbor(k) {
                // has_lower_neighbor is false only at the polynomial bottom,
                // where the coefficient vanishes anyway
                continue;
            }
            if k - 1 < spec.domain_lo() {
                leaked_low = true;
            } else {
                out.add_term(k - 1, c * coeff);
            }
        }
    }
    TrackedVector {
        vector: out,
        leaked_low,
        leaked_high,
    }
}

/// Strict variant: any leakage is a window overflow error.
pub fn weyl_act(
    spec: &WeightModuleSpec,
    kind: GenKind,
    v: &WeightVector,
) -> Result<WeightVector, Error> {
    let t = weyl_act_tracked(spec, kind, v);
    if t.leaked_low || t.leaked_high {
        let exponent = v
            .terms()
            .map(|(&k, _)| k)
            .find(|&k| {
                if kind == spec.family.raising_kind() {
                    k + 1 > spec.domain_hi()
                } else {
                    !spec.family.lowering_coefficient(k).is_zero()
                        && spec.has_lower_neighbor(k)
                        && k - 1 < spec.domain_lo()
                }
            })
            .unwrap_or_default();
        return Err(Error::WindowOverflow {
            exponent,
            lo: spec.domain_lo(),
            hi: spec.domain_hi(),
        });
    }
    Ok(t.vector)
}

/// Applies a zero-mode Weyl element (`a*^i a^j` monomials) exactly; the `a`
/// factors act first.
pub fn apply_weyl_element(
    spec: &WeightModuleSpec,
    w: &WeylElement,
    v: &WeightVector,
) -> Result<WeightVector, Error> {
    let mut out = WeightVector::zero();
    for (&(i, j), c) in w.terms() {
        let mut acc = v.clone();
        for _ in 0..j {
            acc = weyl_act(spec, GenKind::A, &acc)?;
        }
        for _ in 0..i {
            acc = weyl_act(spec, GenKind::AStar, &acc)?;
        }
        out = out.add(&acc.scale(c));
    }
    Ok(out)
}

/// A basis-supported subspace closed under both generators: nothing, an
/// up-set of exponents, or everything.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubSpace {
    Zero,
    UpSet { min_exponent: i64 },
    Whole,
}

impl fmt::Display for SubSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubSpace::Zero => write!(f, "0"),
            SubSpace::UpSet { min_exponent } => {
                write!(f, "span{{x^k : k >= {min_exponent}}}")
            }
            SubSpace::Whole => write!(f, "whole module"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryStatus {
    Clean,
    InconclusiveAtBoundary,
}

/// The submodule lattice of one family, as found by the analytic zero-set
/// description and confirmed by windowed orbit generation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeReport {
    pub spec: WeightModuleSpec,
    pub closed: Vec<SubSpace>,
    pub socle: SubSpace,
    pub radical: SubSpace,
    pub boundary: BoundaryStatus,
}

/// Orbit closure of a single basis exponent under both generators inside
/// the window: returns the lowest exponent reached and whether the orbit
/// still pushed through the bottom edge.
pub(crate) fn windowed_closure(spec: &WeightModuleSpec, start: i64) -> (i64, bool) {
    let mut support: BTreeSet<i64> = BTreeSet::new();
    support.insert(start);
    let mut frontier = vec![start];
    let mut leaked_low = false;
    while let Some(e) = frontier.pop() {
        for kind in [GenKind::A, GenKind::AStar] {
            let t = weyl_act_tracked(spec, kind, &WeightVector::monomial(e));
            leaked_low |= t.leaked_low;
            for (&j, _) in t.vector.terms() {
                if support.insert(j) {
                    frontier.push(j);
                }
            }
        }
    }
    (*support.iter().next().unwrap(), leaked_low)
}

/// Computes the closed subspaces, socle and radical. The analytic route
/// lists the up-sets cut at lowering-coefficient zeros (or the polynomial
/// bottom); the windowed route regenerates every orbit inside the window
/// and must agree, otherwise the report is marked inconclusive.
pub fn submodule_lattice(spec: &WeightModuleSpec) -> LatticeReport {
    let lo = spec.domain_lo();
    let hi = spec.domain_hi();
    let mut boundary = if spec.window >= 2 {
        BoundaryStatus::Clean
    } else {
        BoundaryStatus::InconclusiveAtBoundary
    };

    // analytic cut points: zeros of the lowering coefficient, plus the
    // domain bottom for polynomial families
    let mut cuts: BTreeSet<i64> = spec
        .family
        .lowering_zeros()
        .into_iter()
        .filter(|&z| z >= lo && z <= hi)
        .collect();
    if !spec.family.is_laurent() {
        cuts.insert(0);
    }

    // windowed confirmation: each orbit must stop exactly at the analytic
    // cut below its start, or leak when there is none in the window
    for k in lo..=hi {
        let (min_reached, leaked) = windowed_closure(spec, k);
        let analytic_stop = cuts.iter().rev().find(|&&z| z <= k).copied();
        match analytic_stop {
            Some(z) => {
                if leaked || min_reached != z {
                    boundary = BoundaryStatus::InconclusiveAtBoundary;
                }
            }
            None => {
                // no cut in window below k: must leak out (Laurent) since
                // the chain continues
                if !leaked || min_reached != lo {
                    boundary = BoundaryStatus::InconclusiveAtBoundary;
                }
            }
        }
    }

    let mut closed = vec![SubSpace::Zero];
    let mut proper_upsets: Vec<i64> = Vec::new();
    for &z in &cuts {
        // an up-set starting at the polynomial bottom is the whole module
        if !spec.family.is_laurent() && z == 0 {
            continue;
        }
        proper_upsets.push(z);
        closed.push(SubSpace::UpSet { min_exponent: z });
    }
    closed.push(SubSpace::Whole);

    let socle = match proper_upsets.iter().max() {
        Some(&m) => SubSpace::UpSet { min_exponent: m },
        None => SubSpace::Whole,
    };
    let radical = match proper_upsets.iter().min() {
        Some(&m) => SubSpace::UpSet { min_exponent: m },
        None => SubSpace::Zero,
    };

    LatticeReport {
        spec: spec.clone(),
        closed,
        socle,
        radical,
        boundary,
    }
}

pub fn socle(spec: &WeightModuleSpec) -> (SubSpace, BoundaryStatus) {
    let lat = submodule_lattice(spec);
    (lat.socle, lat.boundary)
}

pub fn radical(spec: &WeightModuleSpec) -> (SubSpace, BoundaryStatus) {
    let lat = submodule_lattice(spec);
    (lat.radical, lat.boundary)
}

/// A subquotient presented as a chain of lines with one closed end: the
/// generator whose arrow vanishes at that end, and the `aa*` eigenvalues
/// listed walking from the closed end into the chain. For one-dimensional
/// weight spaces this is a complete isomorphism invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainSlice {
    pub killer: GenKind,
    pub eigs: Vec<Q>,
}

/// Subquotient payloads the interlock test compares.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SidePayload {
    ZeroSpace,
    /// A two-sided-infinite chain (Laurent whole module); only ever equal
    /// to the same module verbatim.
    OpenChain(String),
    Chain(ChainSlice),
}

fn sub_payload(spec: &WeightModuleSpec, s: &SubSpace) -> SidePayload {
    match s {
        SubSpace::Zero => SidePayload::ZeroSpace,
        SubSpace::UpSet { min_exponent } => {
            let eigs = (*min_exponent..=spec.domain_hi())
                .map(|k| spec.family.aa_star_eigenvalue(k))
                .collect();
            SidePayload::Chain(ChainSlice {
                killer: spec.family.lowering_kind(),
                eigs,
            })
        }
        SubSpace::Whole => {
            if spec.family.is_laurent() {
                SidePayload::OpenChain(spec.family.label())
            } else {
                let eigs = (0..=spec.domain_hi())
                    .map(|k| spec.family.aa_star_eigenvalue(k))
                    .collect();
                SidePayload::Chain(ChainSlice {
                    killer: spec.family.lowering_kind(),
                    eigs,
                })
            }
        }
    }
}

fn quotient_payload(spec: &WeightModuleSpec, by: &SubSpace) -> SidePayload {
    match by {
        SubSpace::Whole => SidePayload::ZeroSpace,
        SubSpace::Zero => sub_payload(spec, &SubSpace::Whole),
        SubSpace::UpSet { min_exponent } => {
            let top = min_exponent - 1;
            if top < spec.domain_lo() {
                return SidePayload::ZeroSpace;
            }
            // the raising arrow out of the top basis vector lands in the
            // killed up-set, so the quotient chain closes there
            let eigs = (spec.domain_lo()..=top)
                .rev()
                .map(|k| spec.family.aa_star_eigenvalue(k))
                .collect();
            SidePayload::Chain(ChainSlice {
                killer: spec.family.raising_kind(),
                eigs,
            })
        }
    }
}

/// Identifies a chain with one of the polynomial families when its data
/// matches exactly.
pub fn classify_chain(c: &ChainSlice) -> Option<&'static str> {
    let matches_arith = |start: i64, step: i64| {
        c.eigs
            .iter()
            .enumerate()
            .all(|(i, e)| *e == q_int(start + step * i as i64))
    };
    if c.killer == GenKind::A && matches_arith(1, 1) {
        return Some("V");
    }
    if c.killer == GenKind::AStar && matches_arith(0, -1) {
        return Some("cV");
    }
    None
}

fn describe_payload(p: &SidePayload) -> String {
    match p {
        SidePayload::ZeroSpace => "0".into(),
        SidePayload::OpenChain(l) => format!("two-sided chain {l}"),
        SidePayload::Chain(c) => {
            let gen = match c.killer {
                GenKind::A => "a",
                GenKind::AStar => "a*",
            };
            let head: Vec<String> = c.eigs.iter().take(3).map(format_q).collect();
            let label = classify_chain(c)
                .map(|l| format!("{l}: "))
                .unwrap_or_default();
            format!(
                "{label}chain closed under {gen}, aa*-eigenvalues [{}, ...]",
                head.join(", ")
            )
        }
    }
}

/// Exact comparison of two subquotient payloads. Chain eigenvalues are
/// linear in position, so agreement across a window of length >= 2 pins the
/// whole infinite chain; any mismatch is a conclusive obstruction.
fn payloads_isomorphic(a: &SidePayload, b: &SidePayload) -> (bool, String) {
    match (a, b) {
        (SidePayload::ZeroSpace, SidePayload::ZeroSpace) => (true, "both zero".into()),
        (SidePayload::OpenChain(x), SidePayload::OpenChain(y)) if x == y => {
            (true, format!("both are the whole module {x}"))
        }
        (SidePayload::Chain(x), SidePayload::Chain(y)) => {
            if x.killer != y.killer {
                return (
                    false,
                    format!(
                        "closed ends killed by different generators: {} vs {}",
                        describe_payload(a),
                        describe_payload(b)
                    ),
                );
            }
            let overlap = x.eigs.len().min(y.eigs.len());
            for i in 0..overlap {
                if x.eigs[i] != y.eigs[i] {
                    return (
                        false,
                        format!(
                            "aa*-eigenvalue mismatch at chain position {i}: {} vs {}",
                            format_q(&x.eigs[i]),
                            format_q(&y.eigs[i])
                        ),
                    );
                }
            }
            (
                true,
                format!("chains agree: {}", describe_payload(a)),
            )
        }
        _ => (
            false,
            format!("{} vs {}", describe_payload(a), describe_payload(b)),
        ),
    }
}

/// Result of the weakly-interlocked test: both quotient conditions with a
/// human-readable witness for whichever way it went.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterlockReport {
    pub family_label: String,
    pub window: u32,
    pub socle: SubSpace,
    pub radical: SubSpace,
    pub weakly_interlocked: bool,
    pub witness: String,
    pub boundary: BoundaryStatus,
}

/// Tests `W/Soc(W) ~ Rad(W)` and `W/Rad(W) ~ Soc(W)` on the windowed
/// truncation.
pub fn weakly_interlocked(spec: &WeightModuleSpec) -> InterlockReport {
    let lat = submodule_lattice(spec);
    let q_soc = quotient_payload(spec, &lat.socle);
    let p_rad = sub_payload(spec, &lat.radical);
    let (ok1, w1) = payloads_isomorphic(&q_soc, &p_rad);
    let q_rad = quotient_payload(spec, &lat.radical);
    let p_soc = sub_payload(spec, &lat.socle);
    let (ok2, w2) = payloads_isomorphic(&q_rad, &p_soc);
    let witness = if ok1 && ok2 {
        format!("W/Soc vs Rad: {w1}; W/Rad vs Soc: {w2}")
    } else if !ok1 {
        format!("W/Soc not isomorphic to Rad: {w1}")
    } else {
        format!("W/Rad not isomorphic to Soc: {w2}")
    };
    InterlockReport {
        family_label: spec.family.label(),
        window: spec.window,
        socle: lat.socle,
        radical: lat.radical,
        weakly_interlocked: ok1 && ok2,
        witness,
        boundary: lat.boundary,
    }
}

/// Verification of the conjugate-to-reflected identification: the map
/// `x^{k+l} -> (-1)^k (1+l)(2+l)...(k+l) x^{-(k+1+l)}` intertwines the
/// conjugate action on exponent offset `l` with the plain action on offset
/// `1-l`, extended to negative `k` by the same two-term recursion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CwIsoReport {
    pub lambda: Q,
    pub window: u32,
    pub cases: u64,
    pub passed: bool,
    pub failures: Vec<String>,
}

pub fn cw_iso_check(lambda: &Q, window: u32) -> Result<CwIsoReport, Error> {
    if lambda <= &q_zero() || lambda >= &q_one() {
        return Err(Error::Domain(format!(
            "offset must lie strictly between 0 and 1, got {}",
            format_q(lambda)
        )));
    }
    if window < 4 {
        return Err(Error::Domain("window too small to check anything".into()));
    }
    let n = window as i64;
    // source: conjugate orientation on offset lambda; target: plain
    // orientation on offset 1 - lambda (the reflected coset representative)
    let target = WeightModuleSpec::new(Family::WLambda(q_one() - lambda), window);

    // map coefficients by the recursion C_{k+1} = -(k+1+lambda) C_k, C_0 = 1
    let mut coeffs: BTreeMap<i64, Q> = BTreeMap::new();
    coeffs.insert(0, q_one());
    for k in 0..n {
        let c = coeffs[&k].clone();
        coeffs.insert(k + 1, -(q_int(k + 1) + lambda) * c);
    }
    for k in (-n..=-1).rev() {
        let c = coeffs[&(k + 1)].clone();
        // C_k = C_{k+1} / (-(k+1+lambda)), the denominator never vanishes
        coeffs.insert(k, c / (-(q_int(k + 1) + lambda)));
    }

    // phi(e_k) = C_k f_{-k-2}
    let phi = |k: i64| -> Option<WeightVector> {
        let m = -k - 2;
        if m < -n || m > n {
            return None;
        }
        Some(WeightVector::monomial(m).scale(&coeffs[&k]))
    };

    let mut cases = 0;
    let mut failures = Vec::new();
    for k in -n..=n {
        // source action of a: multiply, k -> k+1
        if k + 1 <= n {
            if let (Some(img_src), Some(img_k)) = (phi(k + 1), phi(k)) {
                let lhs = img_src;
                let rhs = weyl_act(&target, GenKind::A, &img_k)?;
                cases += 1;
                if lhs != rhs {
                    failures.push(format!("a-intertwining fails at k = {k}"));
                }
            }
        }
        // source action of a*: -(k+lambda) at k -> k-1
        if k - 1 >= -n {
            if let (Some(img_src), Some(img_k)) = (phi(k - 1), phi(k)) {
                let lhs = img_src.scale(&-(q_int(k) + lambda));
                let rhs = weyl_act(&target, GenKind::AStar, &img_k)?;
                cases += 1;
                if lhs != rhs {
                    failures.push(format!("a*-intertwining fails at k = {k}"));
                }
            }
        }
    }
    if cases == 0 {
        return Err(Error::Domain("empty intertwining check".into()));
    }
    Ok(CwIsoReport {
        lambda: lambda.clone(),
        window,
        cases,
        passed: failures.is_empty(),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q_ratio;

    fn all_specs(window: u32) -> Vec<WeightModuleSpec> {
        vec![
            WeightModuleSpec::new(Family::V, window),
            WeightModuleSpec::new(Family::ConjV, window),
            WeightModuleSpec::new(Family::WLambda(q_ratio(1, 2)), window),
            WeightModuleSpec::new(Family::WLambda(q_ratio(2, 5)), window),
            WeightModuleSpec::new(Family::W0Plus, window),
            WeightModuleSpec::new(Family::W0Minus, window),
        ]
    }

    #[test]
    fn action_examples() {
        let v = WeightModuleSpec::new(Family::V, 8);
        // a x^3 = 3 x^2
        assert_eq!(
            weyl_act(&v, GenKind::A, &WeightVector::monomial(3)).unwrap(),
            WeightVector::monomial(2).scale(&q_int(3))
        );
        // a* x^3 = x^4
        assert_eq!(
            weyl_act(&v, GenKind::AStar, &WeightVector::monomial(3)).unwrap(),
            WeightVector::monomial(4)
        );
        let cv = WeightModuleSpec::new(Family::ConjV, 8);
        // a* kills the constant in the conjugate orientation
        assert!(weyl_act(&cv, GenKind::AStar, &WeightVector::monomial(0))
            .unwrap()
            .is_zero());
        // a multiplies
        assert_eq!(
            weyl_act(&cv, GenKind::A, &WeightVector::monomial(2)).unwrap(),
            WeightVector::monomial(3)
        );
        let wl = WeightModuleSpec::new(Family::WLambda(q_ratio(1, 2)), 8);
        // a x^{1/2} = (1/2) x^{-1/2}
        assert_eq!(
            weyl_act(&wl, GenKind::A, &WeightVector::monomial(0)).unwrap(),
            WeightVector::monomial(-1).scale(&q_ratio(1, 2))
        );
    }

    #[test]
    fn window_overflow_is_loud() {
        let v = WeightModuleSpec::new(Family::V, 3);
        let top = WeightVector::monomial(3);
        assert!(weyl_act(&v, GenKind::AStar, &top).is_err());
        let t = weyl_act_tracked(&v, GenKind::AStar, &top);
        assert!(t.leaked_high && !t.leaked_low);
        assert!(t.vector.is_zero());
        let wl = WeightModuleSpec::new(Family::WLambda(q_ratio(1, 3)), 3);
        let bottom = WeightVector::monomial(-3);
        let t = weyl_act_tracked(&wl, GenKind::A, &bottom);
        assert!(t.leaked_low && !t.leaked_high);
    }

    #[test]
    fn weyl_relation_on_window_interior() {
        for spec in all_specs(6) {
            for k in spec.domain_lo() + 1..spec.domain_hi() {
                let v = WeightVector::monomial(k);
                let lhs = weyl_act(&spec, GenKind::A, &weyl_act(&spec, GenKind::AStar, &v).unwrap())
                    .unwrap()
                    .sub(
                        &weyl_act(&spec, GenKind::AStar, &weyl_act(&spec, GenKind::A, &v).unwrap())
                            .unwrap(),
                    );
                assert_eq!(lhs, v, "{} at k = {k}", spec.family.label());
            }
        }
    }

    #[test]
    fn aa_star_is_diagonal() {
        for spec in all_specs(6) {
            for k in spec.domain_lo() + 1..spec.domain_hi() {
                let v = WeightVector::monomial(k);
                let av = weyl_act(&spec, GenKind::AStar, &v).unwrap();
                let aav = weyl_act(&spec, GenKind::A, &av).unwrap();
                assert_eq!(
                    aav,
                    v.scale(&spec.family.aa_star_eigenvalue(k)),
                    "{} at k = {k}",
                    spec.family.label()
                );
            }
        }
    }

    #[test]
    fn eigenvalue_profiles_distinguish_the_polynomial_pair() {
        // V has spectrum {1, 2, 3, ...}; cV has {0, -1, -2, ...}
        for k in 0..6 {
            assert_eq!(Family::V.aa_star_eigenvalue(k), q_int(k + 1));
            assert_eq!(Family::ConjV.aa_star_eigenvalue(k), q_int(-k));
        }
    }

    #[test]
    fn zero_mode_weyl_elements_act() {
        let spec = WeightModuleSpec::new(Family::V, 8);
        // a* a on x^k gives k x^k: the charge operator
        let w = WeylElement::monomial(1, 1);
        for k in 0..6 {
            let got = apply_weyl_element(&spec, &w, &WeightVector::monomial(k)).unwrap();
            assert_eq!(got, WeightVector::monomial(k).scale(&q_int(k)));
        }
        let cv = WeightModuleSpec::new(Family::ConjV, 8);
        for k in 0..6 {
            let got = apply_weyl_element(&cv, &w, &WeightVector::monomial(k)).unwrap();
            assert_eq!(got, WeightVector::monomial(k).scale(&q_int(-(k + 1))));
        }
    }

    #[test]
    fn lattices_of_irreducible_families() {
        for family in [
            Family::V,
            Family::ConjV,
            Family::WLambda(q_ratio(1, 2)),
            Family::WLambda(q_ratio(2, 5)),
        ] {
            let lat = submodule_lattice(&WeightModuleSpec::new(family.clone(), 8));
            assert_eq!(lat.closed, vec![SubSpace::Zero, SubSpace::Whole], "{}", family.label());
            assert_eq!(lat.socle, SubSpace::Whole);
            assert_eq!(lat.radical, SubSpace::Zero);
            assert_eq!(lat.boundary, BoundaryStatus::Clean);
        }
    }

    #[test]
    fn lattices_of_the_reducible_pair() {
        for family in [Family::W0Plus, Family::W0Minus] {
            let lat = submodule_lattice(&WeightModuleSpec::new(family.clone(), 8));
            assert_eq!(
                lat.closed,
                vec![
                    SubSpace::Zero,
                    SubSpace::UpSet { min_exponent: 0 },
                    SubSpace::Whole
                ],
                "{}",
                family.label()
            );
            assert_eq!(lat.socle, SubSpace::UpSet { min_exponent: 0 });
            assert_eq!(lat.radical, SubSpace::UpSet { min_exponent: 0 });
            assert_eq!(lat.boundary, BoundaryStatus::Clean);
        }
    }

    #[test]
    fn socle_identification() {
        // Soc(W0+) carries the plain polynomial action; Soc(W0-) the
        // conjugate one
        let plus = WeightModuleSpec::new(Family::W0Plus, 8);
        let lat = submodule_lattice(&plus);
        if let SidePayload::Chain(c) = sub_payload(&plus, &lat.socle) {
            assert_eq!(classify_chain(&c), Some("V"));
        } else {
            panic!("expected a chain");
        }
        let minus = WeightModuleSpec::new(Family::W0Minus, 8);
        let lat = submodule_lattice(&minus);
        if let SidePayload::Chain(c) = sub_payload(&minus, &lat.socle) {
            assert_eq!(classify_chain(&c), Some("cV"));
        } else {
            panic!("expected a chain");
        }
    }

    #[test]
    fn quotients_swap_the_polynomial_pair() {
        let plus = WeightModuleSpec::new(Family::W0Plus, 8);
        let lat = submodule_lattice(&plus);
        if let SidePayload::Chain(c) = quotient_payload(&plus, &lat.socle) {
            assert_eq!(classify_chain(&c), Some("cV"));
        } else {
            panic!("expected a chain");
        }
        let minus = WeightModuleSpec::new(Family::W0Minus, 8);
        let lat = submodule_lattice(&minus);
        if let SidePayload::Chain(c) = quotient_payload(&minus, &lat.socle) {
            assert_eq!(classify_chain(&c), Some("V"));
        } else {
            panic!("expected a chain");
        }
    }

    #[test]
    fn interlock_verdicts() {
        for family in [
            Family::V,
            Family::ConjV,
            Family::WLambda(q_ratio(1, 2)),
        ] {
            let r = weakly_interlocked(&WeightModuleSpec::new(family.clone(), 8));
            assert!(r.weakly_interlocked, "{}: {}", family.label(), r.witness);
            assert_eq!(r.boundary, BoundaryStatus::Clean);
        }
        for family in [Family::W0Plus, Family::W0Minus] {
            let r = weakly_interlocked(&WeightModuleSpec::new(family.clone(), 8));
            assert!(!r.weakly_interlocked, "{}", family.label());
            assert_eq!(r.boundary, BoundaryStatus::Clean);
            assert!(
                r.witness.contains("eigenvalue mismatch") || r.witness.contains("different generators"),
                "witness should name the obstruction: {}",
                r.witness
            );
        }
    }

    #[test]
    fn tiny_window_is_inconclusive_not_wrong() {
        let lat = submodule_lattice(&WeightModuleSpec::new(Family::W0Plus, 1));
        assert_eq!(lat.boundary, BoundaryStatus::InconclusiveAtBoundary);
    }

    #[test]
    fn cw_iso_base_cases() {
        let r = cw_iso_check(&q_ratio(1, 2), 8).unwrap();
        assert!(r.passed, "{:?}", r.failures);
        // spot-check the coefficient values the recursion produces
        let l = q_ratio(1, 2);
        let c1 = -(q_int(1) + &l);
        assert_eq!(c1, q_ratio(-3, 2));
    }

    #[test]
    fn cw_iso_full_sweep() {
        for l in [q_ratio(1, 3), q_ratio(1, 2), q_ratio(2, 3)] {
            let r = cw_iso_check(&l, 8).unwrap();
            assert!(r.passed, "lambda = {}: {:?}", format_q(&l), r.failures);
            assert!(r.cases > 10);
        }
        assert!(cw_iso_check(&q_zero(), 8).is_err());
        assert!(cw_iso_check(&q_one(), 8).is_err());
        assert!(cw_iso_check(&q_ratio(1, 2), 2).is_err());
    }
}
