//! The plain rank-one Weyl algebra on `a`, `a*` with `a a* - a* a = 1`,
//! realized inside the mode algebra as the index-zero modes. Elements are
//! stored on the canonical basis `a*^i a^j`.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};

use crate::error::Error;
use crate::modes::{Generator, ModeElement, ModeWord};
use crate::rational::{format_q, q_one, q_pow, Q};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeylElement {
    /// `(i, j) -> coefficient` for the monomial `a*^i a^j`.
    terms: BTreeMap<(u32, u32), Q>,
}

impl WeylElement {
    pub fn zero() -> Self {
        WeylElement::default()
    }

    pub fn one() -> Self {
        WeylElement::scalar(q_one())
    }

    pub fn scalar(c: Q) -> Self {
        let mut e = WeylElement::zero();
        e.add_term(0, 0, c);
        e
    }

    pub fn monomial(i: u32, j: u32) -> Self {
        let mut e = WeylElement::zero();
        e.add_term(i, j, q_one());
        e
    }

    /// The generator `a`.
    pub fn gen_a() -> Self {
        WeylElement::monomial(0, 1)
    }

    /// The generator `a*`.
    pub fn gen_astar() -> Self {
        WeylElement::monomial(1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Q {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Q)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((i, j)) {
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

    pub fn add(&self, other: &WeylElement) -> WeylElement {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &WeylElement) -> WeylElement {
        self.add(&other.scale(&-q_one()))
    }

    pub fn scale(&self, c: &Q) -> WeylElement {
        if c.is_zero() {
            return WeylElement::zero();
        }
        let mut out = WeylElement::zero();
        for (&(i, j), v) in &self.terms {
            out.add_term(i, j, v * c);
        }
        out
    }

    /// `Some(c)` when the element is the scalar `c` (including zero).
    pub fn as_scalar(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => {
                let (&(i, j), c) = self.terms.iter().next().unwrap();
                if i == 0 && j == 0 {
                    Some(c.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// Embeds into the mode algebra on index-zero modes.
    pub fn to_mode_element(&self) -> ModeElement {
        let mut out = ModeElement::zero();
        for (&(i, j), c) in &self.terms {
            let mut gens = Vec::with_capacity((i + j) as usize);
            for _ in 0..i {
                gens.push(Generator::astar(0));
            }
            for _ in 0..j {
                gens.push(Generator::a(0));
            }
            out.add_term(ModeWord::new(gens), c.clone());
        }
        out
    }

    /// Product, computed by the zero-mode rewriting kernel. The roundtrip is
    /// exact: zero-mode words normal-order to the `a*^i a^j` basis.
    pub fn multiply(&self, other: &WeylElement) -> WeylElement {
        self.to_mode_element()
            .multiply(&other.to_mode_element())
            .weyl_project()
            .expect("zero-mode product stays degree zero")
    }

    /// The Dixmier automorphism `a -> lambda a*`, `a* -> -lambda^{-1} a`
    /// for nonzero `lambda`. Squares to the parity involution, so it has
    /// order four.
    pub fn dixmier_phi(&self, lambda: &Q) -> Result<WeylElement, Error> {
        if lambda.is_zero() {
            return Err(Error::ZeroDixmierParameter);
        }
        let inv = lambda.recip();
        let mut out = WeylElement::zero();
        for (&(i, j), c) in &self.terms {
            // a*^i a^j -> (-1/lambda a)^i (lambda a*)^j
            let scalar = q_pow(&-inv.clone(), i as i64)? * q_pow(lambda, j as i64)?;
            let mut gens = Vec::with_capacity((i + j) as usize);
            for _ in 0..i {
                gens.push(Generator::a(0));
            }
            for _ in 0..j {
                gens.push(Generator::astar(0));
            }
            let word = ModeElement::from_word(ModeWord::new(gens));
            let reordered = word.weyl_project()?;
            out = out.add(&reordered.scale(&(c * scalar)));
        }
        Ok(out)
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j), c) in &self.terms {
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
            let mono = monomial_string(i, j);
            if mono.is_empty() {
                write!(f, "{}", format_q(&mag))?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{} {mono}", format_q(&mag))?;
            }
        }
        Ok(())
    }
}

fn monomial_string(i: u32, j: u32) -> String {
    let mut s = String::new();
    match i {
        0 => {}
        1 => s.push_str("a*"),
        _ => s.push_str(&format!("a*^{i}")),
    }
    if i > 0 && j > 0 {
        s.push(' ');
    }
    match j {
        0 => {}
        1 => s.push('a'),
        _ => s.push_str(&format!("a^{j}")),
    }
    s
}
