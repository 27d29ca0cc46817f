//! The affinized rank-one Weyl algebra.
//!
//! Generators are modes `a(n)` and `a*(n)` for integer `n`, subject to
//!
//! ```text
//! [a(m), a*(n)] = delta_{m+n,0},   [a(m), a(n)] = [a*(m), a*(n)] = 0,
//! ```
//!
//! with the central element already specialized to 1. `a(n)` and `a*(n)`
//! both carry degree `-n`; `a` carries charge `-1` and `a*` charge `+1`.
//!
//! Normal ordering sorts a word by index, most negative leftmost. Ties at a
//! common index are resolved so that a word of index-zero modes reads
//! `a*(0)...a*(0) a(0)...a(0)`, and at a common nonzero index `a(n)` comes
//! before `a*(n)` (those two commute, so the choice is cosmetic). With this
//! order every annihilator of the vacuum ends up at the right end of a
//! canonical word, which keeps the Fock action a suffix check.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::rational::{format_q, parse_q, q_int, q_one, Q};
use crate::weyl::WeylElement;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GenKind {
    /// The mode family `a(n)`; charge -1.
    A,
    /// The mode family `a*(n)`; charge +1.
    AStar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Generator {
    pub kind: GenKind,
    pub index: i64,
}

impl Generator {
    pub fn a(index: i64) -> Self {
        Generator { kind: GenKind::A, index }
    }

    pub fn astar(index: i64) -> Self {
        Generator { kind: GenKind::AStar, index }
    }

    /// Degree of the mode; both families grade by `-index`.
    pub fn degree(&self) -> i64 {
        -self.index
    }

    pub fn charge(&self) -> i64 {
        match self.kind {
            GenKind::A => -1,
            GenKind::AStar => 1,
        }
    }

    /// True when the mode kills the Fock vacuum: `a(n)` for `n >= 0`,
    /// `a*(n)` for `n >= 1`.
    pub fn annihilates_vacuum(&self) -> bool {
        match self.kind {
            GenKind::A => self.index >= 0,
            GenKind::AStar => self.index >= 1,
        }
    }
}

impl PartialOrd for Generator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Generator {
    /// The canonical (normal-ordering) position: index ascending; at index 0
    /// `a*` precedes `a`; at a common nonzero index `a` precedes `a*`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.index.cmp(&other.index).then_with(|| {
            if self.kind == other.kind {
                return Ordering::Equal;
            }
            let a_first = self.index != 0;
            match (self.kind, a_first) {
                (GenKind::A, true) | (GenKind::AStar, false) => Ordering::Less,
                _ => Ordering::Greater,
            }
        })
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GenKind::A => write!(f, "a({})", self.index),
            GenKind::AStar => write!(f, "a*({})", self.index),
        }
    }
}

/// An ordered product of generators. The empty word is the algebra unit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ModeWord(Vec<Generator>);

impl ModeWord {
    pub fn new(gens: Vec<Generator>) -> Self {
        ModeWord(gens)
    }

    pub fn empty() -> Self {
        ModeWord(Vec::new())
    }

    pub fn generators(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(Generator::degree).sum()
    }

    pub fn charge(&self) -> i64 {
        self.0.iter().map(Generator::charge).sum()
    }

    pub fn concat(&self, other: &ModeWord) -> ModeWord {
        let mut gens = self.0.clone();
        gens.extend_from_slice(&other.0);
        ModeWord(gens)
    }

    /// Position of the first adjacent pair out of canonical order.
    fn first_inversion(&self) -> Option<usize> {
        self.0.windows(2).position(|w| w[0] > w[1])
    }

    pub fn is_normal_ordered(&self) -> bool {
        self.first_inversion().is_none()
    }
}

impl fmt::Display for ModeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// The scalar bracket `[g, h]` (always a multiple of the unit).
pub fn bracket(g: Generator, h: Generator) -> Q {
    if g.index + h.index != 0 {
        return Q::zero();
    }
    match (g.kind, h.kind) {
        (GenKind::A, GenKind::AStar) => q_one(),
        (GenKind::AStar, GenKind::A) => -q_one(),
        _ => Q::zero(),
    }
}

/// `[g, h]` as an element (a scalar multiple of the empty word).
pub fn commutator(g: Generator, h: Generator) -> ModeElement {
    ModeElement::scalar(bracket(g, h))
}

/// A finite rational combination of mode words. Not kept normal-ordered by
/// itself; call [`ModeElement::normal_order`] to canonicalize. Zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ModeElement {
    terms: BTreeMap<ModeWord, Q>,
}

impl ModeElement {
    pub fn zero() -> Self {
        ModeElement::default()
    }

    pub fn one() -> Self {
        ModeElement::scalar(q_one())
    }

    pub fn scalar(c: Q) -> Self {
        let mut e = ModeElement::zero();
        e.add_term(ModeWord::empty(), c);
        e
    }

    pub fn from_word(w: ModeWord) -> Self {
        let mut e = ModeElement::zero();
        e.add_term(w, q_one());
        e
    }

    pub fn from_generator(g: Generator) -> Self {
        ModeElement::from_word(ModeWord::new(vec![g]))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ModeWord, &Q)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &ModeWord) -> Q {
        self.terms.get(w).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, w: ModeWord, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    pub fn add(&self, other: &ModeElement) -> ModeElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &ModeElement) -> ModeElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ModeElement {
        self.scale(&-q_one())
    }

    pub fn scale(&self, c: &Q) -> ModeElement {
        if c.is_zero() {
            return ModeElement::zero();
        }
        let mut out = ModeElement::zero();
        for (w, v) in &self.terms {
            out.add_term(w.clone(), v * c);
        }
        out
    }

    /// If every word has the same degree, that degree (the zero element
    /// reports degree 0); otherwise an error.
    pub fn degree(&self) -> Result<i64, Error> {
        let mut degs = self.terms.keys().map(|w| w.degree());
        match degs.next() {
            None => Ok(0),
            Some(d) => {
                if degs.all(|e| e == d) {
                    Ok(d)
                } else {
                    Err(Error::NotHomogeneous(format!("{self}")))
                }
            }
        }
    }

    /// Rewrites every word into canonical order, emitting the contraction
    /// term for each adjacent transposition of a noncommuting pair. The
    /// worklist terminates because a swap lowers the inversion count and a
    /// contraction shortens the word.
    pub fn normal_order(&self) -> ModeElement {
        let mut out = ModeElement::zero();
        let mut work: Vec<(Vec<Generator>, Q)> = self
            .terms
            .iter()
            .map(|(w, c)| (w.generators().to_vec(), c.clone()))
            .collect();
        while let Some((gens, coeff)) = work.pop() {
            let word = ModeWord(gens);
            match word.first_inversion() {
                None => out.add_term(word, coeff),
                Some(i) => {
                    let gens = word.0;
                    let b = bracket(gens[i], gens[i + 1]);
                    let mut swapped = gens.clone();
                    swapped.swap(i, i + 1);
                    if !b.is_zero() {
                        let mut contracted = gens;
                        contracted.drain(i..=i + 1);
                        work.push((contracted, &coeff * b));
                    }
                    work.push((swapped, coeff));
                }
            }
        }
        out
    }

    /// Bilinear product followed by normal ordering.
    pub fn multiply(&self, other: &ModeElement) -> ModeElement {
        let mut raw = ModeElement::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                raw.add_term(w1.concat(w2), c1 * c2);
            }
        }
        raw.normal_order()
    }

    /// Spectral flow: `a(n) -> a(n + ell)`, `a*(n) -> a*(n - ell)`; an
    /// algebra automorphism for every integer `ell`. The result is
    /// re-canonicalized since shifting can reorder a word.
    pub fn spectral_flow(&self, ell: i64) -> ModeElement {
        let mut out = ModeElement::zero();
        for (w, c) in &self.terms {
            let gens = w
                .generators()
                .iter()
                .map(|g| match g.kind {
                    GenKind::A => Generator::a(g.index + ell),
                    GenKind::AStar => Generator::astar(g.index - ell),
                })
                .collect();
            out.add_term(ModeWord(gens), c.clone());
        }
        out.normal_order()
    }

    /// Projects a degree-zero element to the zero-mode Weyl algebra: normal
    /// order, then drop every word containing a mode of nonzero index. Errors
    /// unless the element is degree-homogeneous of degree 0.
    pub fn weyl_project(&self) -> Result<WeylElement, Error> {
        let d = self.degree()?;
        if d != 0 && !self.is_zero() {
            return Err(Error::NotHomogeneous(format!(
                "weyl_project needs degree 0, got {d}"
            )));
        }
        let mut out = WeylElement::zero();
        for (w, c) in self.normal_order().terms {
            if w.generators().iter().any(|g| g.index != 0) {
                continue;
            }
            // canonical index-zero block: a*(0)^i a(0)^j
            let i = w.generators().iter().filter(|g| g.kind == GenKind::AStar).count();
            let j = w.len() - i;
            out.add_term(i as u32, j as u32, c);
        }
        Ok(out)
    }
}

impl fmt::Display for ModeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
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
            if w.is_empty() {
                write!(f, "{}", format_q(&mag))?;
            } else if mag.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{} * {}", format_q(&mag), w)?;
            }
        }
        Ok(())
    }
}

/// Parses the textual syntax for words: `a(-3) a*(2)`.
pub fn parse_word(s: &str) -> Result<ModeWord, Error> {
    let mut p = Parser::new(s);
    let w = p.word()?;
    p.finish()?;
    w.ok_or_else(|| Error::Parse(format!("expected a word in `{s}`")))
}

/// Parses the textual syntax for elements: `1/2 * a(0) a*(0) + 2 * a(1) - 1`.
pub fn parse_element(s: &str) -> Result<ModeElement, Error> {
    let mut p = Parser::new(s);
    let e = p.element()?;
    p.finish()?;
    Ok(e)
}

struct Parser<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser { chars: s.chars().peekable() }
    }

    fn skip_ws(&mut self) {
        while matches!(self.chars.peek(), Some(c) if c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn finish(&mut self) -> Result<(), Error> {
        self.skip_ws();
        match self.chars.peek() {
            None => Ok(()),
            Some(c) => Err(Error::Parse(format!("unexpected `{c}`"))),
        }
    }

    fn element(&mut self) -> Result<ModeElement, Error> {
        let mut out = ModeElement::zero();
        let mut negate = false;
        self.skip_ws();
        if self.eat('-') {
            negate = true;
        } else {
            self.eat('+');
        }
        loop {
            let (coeff, word) = self.term()?;
            let c = if negate { -coeff } else { coeff };
            out.add_term(word, c);
            self.skip_ws();
            if self.eat('+') {
                negate = false;
            } else if self.eat('-') {
                negate = true;
            } else {
                break;
            }
        }
        Ok(out)
    }

    /// term := rational ['*' word] | word
    fn term(&mut self) -> Result<(Q, ModeWord), Error> {
        self.skip_ws();
        let coeff = if matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
            let c = self.rational()?;
            self.skip_ws();
            if self.eat('*') {
                let w = self
                    .word()?
                    .ok_or_else(|| Error::Parse("expected word after `*`".into()))?;
                return Ok((c, w));
            }
            return Ok((c, ModeWord::empty()));
        } else {
            q_one()
        };
        match self.word()? {
            Some(w) => Ok((coeff, w)),
            None => Err(Error::Parse("expected a coefficient or a word".into())),
        }
    }

    fn rational(&mut self) -> Result<Q, Error> {
        let mut s = String::new();
        while matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
            s.push(self.chars.next().unwrap());
        }
        self.skip_ws();
        if matches!(self.chars.peek(), Some('/')) {
            self.chars.next();
            self.skip_ws();
            s.push('/');
            while matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
                s.push(self.chars.next().unwrap());
            }
        }
        parse_q(&s)
    }

    fn word(&mut self) -> Result<Option<ModeWord>, Error> {
        let mut gens = Vec::new();
        loop {
            self.skip_ws();
            if !matches!(self.chars.peek(), Some('a')) {
                break;
            }
            self.chars.next();
            let kind = if self.eat('*') { GenKind::AStar } else { GenKind::A };
            if !self.eat('(') {
                return Err(Error::Parse("expected `(` after generator name".into()));
            }
            let mut digits = String::new();
            if matches!(self.chars.peek(), Some('-')) {
                digits.push(self.chars.next().unwrap());
            }
            while matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
                digits.push(self.chars.next().unwrap());
            }
            let index: i64 = digits
                .parse()
                .map_err(|_| Error::Parse(format!("bad index `{digits}`")))?;
            if !self.eat(')') {
                return Err(Error::Parse("expected `)` after index".into()));
            }
            gens.push(Generator { kind, index });
        }
        if gens.is_empty() {
            Ok(None)
        } else {
            Ok(Some(ModeWord(gens)))
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.chars.peek() == Some(&c) {
            self.chars.next();
            true
        } else {
            false
        }
    }
}

/// The Dixmier automorphism on zero modes lives in [`crate::weyl`]; this
/// lifts it to degree-zero mode words made of `a(0)`, `a*(0)` only.
pub fn dixmier_phi_zero_modes(e: &ModeElement, lambda: &Q) -> Result<ModeElement, Error> {
    let w = e.weyl_project()?;
    let image = w.dixmier_phi(lambda)?;
    Ok(image.to_mode_element())
}

/// Convenience: the element `c * 1` for an integer.
pub fn scalar_int(c: i64) -> ModeElement {
    ModeElement::scalar(q_int(c))
}
