//! The Fock module over the mode algebra, its PBW basis, vertex operator
//! modes, the Virasoro and Heisenberg structure, and the Zhu products.
//!
//! PBW monomials have the shape `a(m_1)...a(m_k) a*(n_1)...a*(n_l) 1` with
//! every `m_i <= -1` and every `n_j <= 0`; the vacuum is killed by `a(m)`
//! for `m >= 0` and by `a*(n)` for `n >= 1`. The module is graded by weight
//! (eigenvalue of the conformal grading, sum of `-m_i` and `-n_j`) and by
//! charge (`l - k`). Weight spaces of fixed charge are finite dimensional,
//! but a fixed weight supports arbitrarily many `a*(0)` insertions, so any
//! whole-weight-space sweep in tests picks a finite section and says so.
//!
//! Vertex operator conventions, fixed once here and relied on everywhere:
//! the state `a(-1)1` has modes `a(n)`, the state `a*(0)1` has modes
//! `a*(n+1)`, and the vacuum has modes `delta_{n,-1} id`. Modes of composite
//! states are derived by the iterate (weak associativity) recursion, peeling
//! one creation mode at a time.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};

use crate::error::Error;
use crate::modes::{GenKind, Generator, ModeElement, ModeWord};
use crate::partitions::{bipartitions_of, Bipartition, Partition};
use crate::rational::{binomial, neg_one_pow, q_one, Q};

/// A PBW basis vector of the Fock module, stored as the multisets of mode
/// indices. Both lists are kept ascending.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PbwMonomial {
    a_parts: Vec<i64>,
    astar_parts: Vec<i64>,
}

impl PbwMonomial {
    /// Panics when an index is out of range; monomials are built by code,
    /// not parsed from input.
    pub fn new(mut a_parts: Vec<i64>, mut astar_parts: Vec<i64>) -> Self {
        assert!(a_parts.iter().all(|&m| m <= -1), "a-modes must have index <= -1");
        assert!(astar_parts.iter().all(|&n| n <= 0), "a*-modes must have index <= 0");
        a_parts.sort_unstable();
        astar_parts.sort_unstable();
        PbwMonomial { a_parts, astar_parts }
    }

    pub fn vacuum() -> Self {
        PbwMonomial::default()
    }

    pub fn a_parts(&self) -> &[i64] {
        &self.a_parts
    }

    pub fn astar_parts(&self) -> &[i64] {
        &self.astar_parts
    }

    pub fn weight(&self) -> i64 {
        let a: i64 = self.a_parts.iter().map(|m| -m).sum();
        let s: i64 = self.astar_parts.iter().map(|n| -n).sum();
        a + s
    }

    pub fn charge(&self) -> i64 {
        self.astar_parts.len() as i64 - self.a_parts.len() as i64
    }

    pub fn is_vacuum(&self) -> bool {
        self.a_parts.is_empty() && self.astar_parts.is_empty()
    }

    /// The creation word in canonical (normal) order.
    pub fn canonical_word(&self) -> Vec<Generator> {
        let mut gens: Vec<Generator> = self
            .a_parts
            .iter()
            .map(|&m| Generator::a(m))
            .chain(self.astar_parts.iter().map(|&n| Generator::astar(n)))
            .collect();
        gens.sort();
        gens
    }

    /// Reads a normal-ordered word with no vacuum annihilators back into a
    /// monomial. Callers must have dropped annihilating words already.
    #[cfg(test)]
    fn from_creation_word(word: &ModeWord) -> Self {
        let mut a_parts = Vec::new();
        let mut astar_parts = Vec::new();
        for g in word.generators() {
            match g.kind {
                GenKind::A => a_parts.push(g.index),
                GenKind::AStar => astar_parts.push(g.index),
            }
        }
        PbwMonomial::new(a_parts, astar_parts)
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_vacuum() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .a_parts
            .iter()
            .map(|&m| format!("a({m})"))
            .chain(self.astar_parts.iter().map(|&n| format!("a*({n})")))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A finite rational combination of PBW monomials.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FockVector {
    terms: BTreeMap<PbwMonomial, Q>,
}

impl FockVector {
    pub fn zero() -> Self {
        FockVector::default()
    }

    pub fn vacuum() -> Self {
        FockVector::monomial(PbwMonomial::vacuum())
    }

    pub fn monomial(m: PbwMonomial) -> Self {
        let mut v = FockVector::zero();
        v.add_term(m, q_one());
        v
    }

    /// The generating state `a(-1)1`.
    pub fn gen_a() -> Self {
        FockVector::monomial(PbwMonomial::new(vec![-1], vec![]))
    }

    /// The generating state `a*(0)1`.
    pub fn gen_astar() -> Self {
        FockVector::monomial(PbwMonomial::new(vec![], vec![0]))
    }

    /// The conformal vector `a(-1)a*(-1)1` (central charge 2).
    pub fn omega() -> Self {
        FockVector::monomial(PbwMonomial::new(vec![-1], vec![-1]))
    }

    /// The Heisenberg current `a(-1)a*(0)1`.
    pub fn current_j() -> Self {
        FockVector::monomial(PbwMonomial::new(vec![-1], vec![0]))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &Q)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn add(&self, other: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &FockVector) -> FockVector {
        self.add(&other.scale(&-q_one()))
    }

    pub fn scale(&self, c: &Q) -> FockVector {
        if c.is_zero() {
            return FockVector::zero();
        }
        let mut out = FockVector::zero();
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    /// Splits into bigraded components keyed by (weight, charge).
    pub fn bigrade(&self) -> BTreeMap<(i64, i64), FockVector> {
        let mut out: BTreeMap<(i64, i64), FockVector> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry((m.weight(), m.charge()))
                .or_default()
                .add_term(m.clone(), c.clone());
        }
        out
    }

    /// The common weight of all terms; errors when mixed. Zero reports 0.
    pub fn weight(&self) -> Result<i64, Error> {
        let mut ws = self.terms.keys().map(|m| m.weight());
        match ws.next() {
            None => Ok(0),
            Some(w) => {
                if ws.all(|x| x == w) {
                    Ok(w)
                } else {
                    Err(Error::NotHomogeneous(format!("{self}")))
                }
            }
        }
    }

    /// The common charge of all terms; errors when mixed.
    pub fn charge(&self) -> Result<i64, Error> {
        let mut cs = self.terms.keys().map(|m| m.charge());
        match cs.next() {
            None => Ok(0),
            Some(c) => {
                if cs.all(|x| x == c) {
                    Ok(c)
                } else {
                    Err(Error::NotHomogeneous(format!("{self}")))
                }
            }
        }
    }

    pub fn max_weight(&self) -> Option<i64> {
        self.terms.keys().map(|m| m.weight()).max()
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
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
            if m.is_vacuum() {
                write!(f, "{}", crate::rational::format_q(&mag))?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{} * {}", crate::rational::format_q(&mag), m)?;
            }
        }
        Ok(())
    }
}

/// A nonnegatively graded module with an action of the raw modes. The two
/// implementors are the Fock module itself and the generalized Verma
/// truncations; the vertex-mode recursion below is generic over this trait.
pub trait GradedModule {
    type Vector: Clone + PartialEq + fmt::Debug;

    fn zero_vector(&self) -> Self::Vector;
    fn is_zero(&self, v: &Self::Vector) -> bool;
    fn add_scaled(&self, acc: &mut Self::Vector, c: &Q, v: &Self::Vector);
    /// Largest grade among the terms of `v`; `None` for the zero vector.
    /// Gradation is by nonnegative integers, and a mode of degree `-d`
    /// (index `d`) kills anything of grade below `d`.
    fn max_degree(&self, v: &Self::Vector) -> Option<i64>;
    fn act_generator(&self, g: Generator, v: &Self::Vector) -> Result<Self::Vector, Error>;
}

/// The Fock module as a [`GradedModule`] carrier.
#[derive(Debug, Clone, Copy, Default)]
pub struct FockSpace;

impl FockSpace {
    /// Direct single-mode action on a monomial. Creation modes insert;
    /// annihilation modes contract against each matching occurrence and then
    /// die on the vacuum.
    fn act_on_monomial(&self, g: Generator, m: &PbwMonomial) -> FockVector {
        match g.kind {
            GenKind::A if g.index <= -1 => {
                let mut a = m.a_parts.to_vec();
                a.push(g.index);
                FockVector::monomial(PbwMonomial::new(a, m.astar_parts.to_vec()))
            }
            GenKind::AStar if g.index <= 0 => {
                let mut s = m.astar_parts.to_vec();
                s.push(g.index);
                FockVector::monomial(PbwMonomial::new(m.a_parts.to_vec(), s))
            }
            GenKind::A => {
                // a(m), m >= 0: bracket +1 against each a*(-m)
                let target = -g.index;
                let mult = m.astar_parts.iter().filter(|&&n| n == target).count();
                if mult == 0 {
                    return FockVector::zero();
                }
                let mut s = m.astar_parts.to_vec();
                let pos = s.iter().position(|&n| n == target).unwrap();
                s.remove(pos);
                FockVector::monomial(PbwMonomial::new(m.a_parts.to_vec(), s))
                    .scale(&Q::from_integer(mult.into()))
            }
            GenKind::AStar => {
                // a*(n), n >= 1: bracket -1 against each a(-n)
                let target = -g.index;
                let mult = m.a_parts.iter().filter(|&&x| x == target).count();
                if mult == 0 {
                    return FockVector::zero();
                }
                let mut a = m.a_parts.to_vec();
                let pos = a.iter().position(|&x| x == target).unwrap();
                a.remove(pos);
                FockVector::monomial(PbwMonomial::new(a, m.astar_parts.to_vec()))
                    .scale(&-Q::from_integer(mult.into()))
            }
        }
    }
}

impl GradedModule for FockSpace {
    type Vector = FockVector;

    fn zero_vector(&self) -> FockVector {
        FockVector::zero()
    }

    fn is_zero(&self, v: &FockVector) -> bool {
        v.is_zero()
    }

    fn add_scaled(&self, acc: &mut FockVector, c: &Q, v: &FockVector) {
        for (m, x) in &v.terms {
            acc.add_term(m.clone(), x * c);
        }
    }

    fn max_degree(&self, v: &FockVector) -> Option<i64> {
        v.max_weight()
    }

    fn act_generator(&self, g: Generator, v: &FockVector) -> Result<FockVector, Error> {
        let mut out = FockVector::zero();
        for (m, c) in &v.terms {
            let image = self.act_on_monomial(g, m);
            self.add_scaled(&mut out, c, &image);
        }
        Ok(out)
    }
}

/// Single-mode action `g . v` on the Fock module.
pub fn act(g: Generator, v: &FockVector) -> FockVector {
    FockSpace.act_generator(g, v).expect("fock action is total")
}

/// Applies a mode word left to right onto the module (rightmost letter acts
/// first, matching operator composition).
pub fn apply_word(w: &ModeWord, v: &FockVector) -> FockVector {
    let mut out = v.clone();
    for g in w.generators().iter().rev() {
        out = act(*g, &out);
    }
    out
}

/// Applies a mode element by linearity.
pub fn apply_element(e: &ModeElement, v: &FockVector) -> FockVector {
    let mut out = FockVector::zero();
    for (w, c) in e.terms() {
        out = out.add(&apply_word(w, v).scale(c));
    }
    out
}

/// The mode operator `g_i` attached to a generator species: the state
/// `a(-1)1` has modes `a(i)`, the state `a*(0)1` has modes `a*(i+1)`.
fn species_mode(kind: GenKind, i: i64) -> Generator {
    match kind {
        GenKind::A => Generator::a(i),
        GenKind::AStar => Generator::astar(i + 1),
    }
}

/// The `k`-th vertex operator mode of the state `u`, acting on `v` in any
/// graded module. `u_k` is built by peeling the leading creation mode of
/// each PBW word of `u` through the iterate relation
///
/// ```text
/// (g_(l) w)_k = sum_{i>=0} (-1)^i C(l,i) [ g_(l-i) w_(k+i) - (-1)^l w_(l+k-i) g_(i) ],
/// ```
///
/// whose two sums truncate by the grade bound of the module.
pub fn state_mode<M: GradedModule>(
    module: &M,
    u: &FockVector,
    k: i64,
    v: &M::Vector,
) -> Result<M::Vector, Error> {
    let mut out = module.zero_vector();
    for (mono, c) in u.terms() {
        let word = mono.canonical_word();
        let r = word_mode(module, &word, k, v)?;
        module.add_scaled(&mut out, c, &r);
    }
    Ok(out)
}

fn word_mode<M: GradedModule>(
    module: &M,
    word: &[Generator],
    k: i64,
    v: &M::Vector,
) -> Result<M::Vector, Error> {
    if word.is_empty() {
        return Ok(if k == -1 {
            v.clone()
        } else {
            module.zero_vector()
        });
    }
    let g = word[0];
    let rest = &word[1..];
    // the leading letter as a generator-state mode: a(m) = (a-state)_(m),
    // a*(n) = (a*-state)_(n-1); both give l <= -1 on PBW words
    let ell = match g.kind {
        GenKind::A => g.index,
        GenKind::AStar => g.index - 1,
    };
    debug_assert!(ell <= -1, "creation words only");
    let rest_wt: i64 = rest.iter().map(|h| h.degree()).sum();
    let mut out = module.zero_vector();
    let Some(dv) = module.max_degree(v) else {
        return Ok(out);
    };

    // sum 1: (-1)^i C(l,i) g_(l-i) (w_(k+i) v); w_(k+i) v dies above the
    // grade bound
    let imax = rest_wt + dv - 1 - k;
    let mut i: i64 = 0;
    while i <= imax {
        let t = word_mode(module, rest, k + i, v)?;
        if !module.is_zero(&t) {
            let s = module.act_generator(species_mode(g.kind, ell - i), &t)?;
            if !module.is_zero(&s) {
                let c = Q::from_integer(binomial(ell, i as u64) * neg_one_pow(i));
                module.add_scaled(&mut out, &c, &s);
            }
        }
        i += 1;
    }

    // sum 2: -(-1)^l (-1)^i C(l,i) w_(l+k-i) (g_(i) v); g_(i) v dies above
    // the grade bound
    for i in 0..=dv {
        let s = module.act_generator(species_mode(g.kind, i), v)?;
        if module.is_zero(&s) {
            continue;
        }
        let t = word_mode(module, rest, ell + k - i, &s)?;
        if module.is_zero(&t) {
            continue;
        }
        let c = Q::from_integer(binomial(ell, i as u64) * neg_one_pow(i) * -neg_one_pow(ell));
        module.add_scaled(&mut out, &c, &t);
    }
    Ok(out)
}

/// `u_k v` inside the Fock module itself.
pub fn vertex_mode(u: &FockVector, k: i64, v: &FockVector) -> FockVector {
    state_mode(&FockSpace, u, k, v).expect("fock modes are total")
}

/// Virasoro mode `L_n` (from the conformal vector, central charge 2).
pub fn virasoro_mode(n: i64, v: &FockVector) -> FockVector {
    vertex_mode(&FockVector::omega(), n + 1, v)
}

/// Heisenberg mode `J_n` (from the current `a(-1)a*(0)1`).
pub fn heisenberg_mode(n: i64, v: &FockVector) -> FockVector {
    vertex_mode(&FockVector::current_j(), n, v)
}

/// The translation operator `T u = u_(-2) 1`; coincides with `L_(-1)`.
pub fn translate(u: &FockVector) -> FockVector {
    vertex_mode(u, -2, &FockVector::vacuum())
}

/// The circle product at level `n >= 0`:
/// `u o_n v = sum_i C(wt u + n, i) u_(i - 2n - 2) v`.
pub fn zhu_circle(u: &FockVector, v: &FockVector, n: u32) -> Result<FockVector, Error> {
    let wt = u.weight()?;
    if wt < 0 {
        return Err(Error::Domain(format!("negative weight {wt}")));
    }
    let top = wt + n as i64;
    let mut out = FockVector::zero();
    for i in 0..=top {
        let c = Q::from_integer(binomial(top, i as u64));
        let term = vertex_mode(u, i - 2 * n as i64 - 2, v);
        FockSpace.add_scaled(&mut out, &c, &term);
    }
    Ok(out)
}

/// The star product at level `n >= 0`:
/// `u *_n v = sum_{m=0}^{n} (-1)^m C(m+n, n) sum_i C(wt u + n, i) u_(i-n-m-1) v`.
pub fn zhu_star(u: &FockVector, v: &FockVector, n: u32) -> Result<FockVector, Error> {
    let wt = u.weight()?;
    if wt < 0 {
        return Err(Error::Domain(format!("negative weight {wt}")));
    }
    let top = wt + n as i64;
    let mut out = FockVector::zero();
    for m in 0..=n as i64 {
        let outer = Q::from_integer(binomial(m + n as i64, n as u64) * neg_one_pow(m));
        for i in 0..=top {
            let c = &outer * Q::from_integer(binomial(top, i as u64));
            let term = vertex_mode(u, i - n as i64 - m - 1, v);
            FockSpace.add_scaled(&mut out, &c, &term);
        }
    }
    Ok(out)
}

/// Dimension of the weight-`d`, charge-`j` subspace, by direct enumeration
/// of PBW shapes: a bipartition `(alpha, beta)` of `d` (depths of the
/// strictly negative modes) plus `r = j + len(alpha) - len(beta)` copies of
/// `a*(0)`, admissible when `r >= 0`.
pub fn graded_dimension(d: u32, j: i64) -> u64 {
    bipartitions_of(d)
        .iter()
        .filter(|bp| j + bp.first.len() as i64 - bp.second.len() as i64 >= 0)
        .count() as u64
}

/// The monomial basis of the weight-`d`, charge-`j` subspace.
pub fn basis_weight_charge(d: u32, j: i64) -> Vec<PbwMonomial> {
    let mut out = Vec::new();
    for bp in bipartitions_of(d) {
        let r = j + bp.first.len() as i64 - bp.second.len() as i64;
        if r < 0 {
            continue;
        }
        out.push(monomial_from_shape(&bp, r as usize));
    }
    out
}

/// Builds the monomial with strictly negative depths given by `bp` and `r`
/// copies of `a*(0)`.
pub fn monomial_from_shape(bp: &Bipartition, r: usize) -> PbwMonomial {
    let a: Vec<i64> = bp.first.parts().iter().map(|&p| -(p as i64)).collect();
    let mut s: Vec<i64> = bp.second.parts().iter().map(|&p| -(p as i64)).collect();
    s.extend(std::iter::repeat(0).take(r));
    PbwMonomial::new(a, s)
}

/// The negative-depth shape and `a*(0)` multiplicity of a monomial.
pub fn shape_of_monomial(m: &PbwMonomial) -> (Bipartition, usize) {
    // ascending indices give descending depths, as Partition wants
    let first: Vec<u32> = m.a_parts.iter().map(|&x| (-x) as u32).collect();
    let nonzero: Vec<u32> = m
        .astar_parts
        .iter()
        .filter(|&&n| n < 0)
        .map(|&n| (-n) as u32)
        .collect();
    let r = m.astar_parts.iter().filter(|&&n| n == 0).count();
    (
        Bipartition::new(Partition::new(first), Partition::new(nonzero)),
        r,
    )
}
