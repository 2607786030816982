//! The free associative `F₂`-algebra on generators `γ₁, γ₂, …`.
//!
//! A [`Monomial`] is a word `[i₁, …, i_s] = γ_{i₁} ⋯ γ_{i_s}` with every
//! index at least 1; the empty word is the unit. An [`Element`] is a finite
//! set of monomials, read as a mod-2 linear combination, so addition is
//! symmetric difference and multiplication concatenates words bilinearly.
//! Everything in this module is an immutable value and every operation is
//! pure.
//!
//! Besides the ring structure this module provides the weight splitting
//! (weight = number of odd indices; products add weights) and left
//! transduction: for a fixed nonempty word `μ`, any element `a` splits
//! uniquely as `a = a₀ + a*·μ` where no term of `a₀` ends in `μ`, and
//! `a ↦ a*` is the linear map implemented by [`Element::transduce`].
//! Transduction is what turns a vanishing sum `Σ aᵢbᵢ = 0` into an explicit
//! dependence of one `aⱼ` on the others ([`resolve_relation`]).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use crate::combinatorics::compositions_positive;
use crate::{Error, Result};

/// Length and degree of a homogeneous piece. Ordered lexicographically,
/// length first; this is the ordering used when a relation is resolved.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Bidegree {
    pub s: u32,
    pub d: u32,
}

impl Bidegree {
    pub fn new(s: u32, d: u32) -> Self {
        Bidegree { s, d }
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.s, self.d)
    }
}

/// A word `[i₁, …, i_s]` in the generators, `i_j ≥ 1`. The empty word is
/// the unit. `Ord` is lexicographic on the index sequence, which restricted
/// to a fixed bidegree is the canonical monomial ordering.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    indices: Vec<u32>,
}

impl Monomial {
    /// Builds a word from its indices. Panics if an index is zero; there is
    /// no generator `γ₀`.
    pub fn new(indices: Vec<u32>) -> Self {
        assert!(
            indices.iter().all(|&i| i >= 1),
            "generator indices must be >= 1"
        );
        Monomial { indices }
    }

    /// The empty word, i.e. the unit of the algebra.
    pub fn unit() -> Self {
        Monomial {
            indices: Vec::new(),
        }
    }

    /// The generator `γ_k`, a single-letter word.
    pub fn gamma(k: u32) -> Self {
        assert!(k >= 1, "generator indices must be >= 1");
        Monomial { indices: vec![k] }
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn is_unit(&self) -> bool {
        self.indices.is_empty()
    }

    /// Number of letters.
    pub fn length(&self) -> u32 {
        self.indices.len() as u32
    }

    /// Sum of the indices.
    pub fn degree(&self) -> u32 {
        self.indices.iter().sum()
    }

    pub fn bidegree(&self) -> Bidegree {
        Bidegree::new(self.length(), self.degree())
    }

    /// Number of odd indices.
    pub fn weight(&self) -> u32 {
        self.indices.iter().filter(|&&i| i % 2 == 1).count() as u32
    }

    /// Word concatenation, the product of monomials.
    pub fn concat(&self, other: &Monomial) -> Monomial {
        let mut indices = Vec::with_capacity(self.indices.len() + other.indices.len());
        indices.extend_from_slice(&self.indices);
        indices.extend_from_slice(&other.indices);
        Monomial { indices }
    }

    /// If `suffix` is a suffix of this word, the remaining prefix.
    pub fn strip_suffix(&self, suffix: &Monomial) -> Option<Monomial> {
        let n = self.indices.len().checked_sub(suffix.indices.len())?;
        if self.indices[n..] == suffix.indices[..] {
            Some(Monomial {
                indices: self.indices[..n].to_vec(),
            })
        } else {
            None
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, idx) in self.indices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{idx}")?;
        }
        write!(f, "]")
    }
}

/// A mod-2 linear combination of monomials, stored as the set of monomials
/// with coefficient 1. The zero element is the empty set.
#[derive(Clone, PartialEq, Eq, Default, Hash, Debug)]
pub struct Element {
    terms: BTreeSet<Monomial>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    /// The multiplicative unit, the singleton of the empty word.
    pub fn one() -> Self {
        Element::from(Monomial::unit())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing canonical order.
    pub fn terms(&self) -> impl Iterator<Item = &Monomial> + '_ {
        self.terms.iter()
    }

    /// Flips the coefficient of `m`: adding a monomial over `F₂`.
    pub fn toggle(&mut self, m: Monomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains(m)
    }

    /// Least term in the canonical order, if nonzero.
    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first()
    }

    /// The common bidegree of all terms, or `None` if zero or mixed.
    pub fn homogeneous_bidegree(&self) -> Option<Bidegree> {
        let mut it = self.terms.iter();
        let first = it.next()?.bidegree();
        it.all(|m| m.bidegree() == first).then_some(first)
    }

    /// Whether every term lies in `bidegree` (vacuously true for zero).
    pub fn is_homogeneous_at(&self, bidegree: Bidegree) -> bool {
        self.terms.iter().all(|m| m.bidegree() == bidegree)
    }

    /// Splits into homogeneous pieces; the pieces sum back to the element.
    pub fn bidegree_components(&self) -> BTreeMap<Bidegree, Element> {
        let mut out: BTreeMap<Bidegree, Element> = BTreeMap::new();
        for m in &self.terms {
            out.entry(m.bidegree()).or_default().toggle(m.clone());
        }
        out
    }

    /// The sum of the terms of weight exactly `k`.
    pub fn weight_component(&self, k: u32) -> Element {
        let terms = self
            .terms
            .iter()
            .filter(|m| m.weight() == k)
            .cloned()
            .collect();
        Element { terms }
    }

    /// Left transduction by a nonempty word `mu`: the unique `a*` with
    /// `a = a₀ + a*·mu` and no term of `a₀` ending in `mu`. Term by term,
    /// a word contributes its prefix when `mu` is a suffix and nothing
    /// otherwise.
    pub fn transduce(&self, mu: &Monomial) -> Element {
        assert!(!mu.is_unit(), "transduction requires a nonempty word");
        let mut out = Element::zero();
        for m in &self.terms {
            if let Some(prefix) = m.strip_suffix(mu) {
                out.toggle(prefix);
            }
        }
        out
    }
}

impl From<Monomial> for Element {
    fn from(m: Monomial) -> Self {
        let mut terms = BTreeSet::new();
        terms.insert(m);
        Element { terms }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, m) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl AddAssign<&Element> for Element {
    fn add_assign(&mut self, rhs: &Element) {
        for m in &rhs.terms {
            self.toggle(m.clone());
        }
    }
}

impl AddAssign for Element {
    fn add_assign(&mut self, rhs: Element) {
        for m in rhs.terms {
            self.toggle(m);
        }
    }
}

impl Add<&Element> for &Element {
    type Output = Element;

    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Element {
    type Output = Element;

    fn add(mut self, rhs: Element) -> Element {
        self += rhs;
        self
    }
}

impl Mul<&Element> for &Element {
    type Output = Element;

    fn mul(self, rhs: &Element) -> Element {
        let mut out = Element::zero();
        for a in &self.terms {
            for b in &rhs.terms {
                out.toggle(a.concat(b));
            }
        }
        out
    }
}

impl Mul for Element {
    type Output = Element;

    fn mul(self, rhs: Element) -> Element {
        &self * &rhs
    }
}

impl std::iter::Sum for Element {
    fn sum<I: Iterator<Item = Element>>(iter: I) -> Element {
        let mut acc = Element::zero();
        for e in iter {
            acc += e;
        }
        acc
    }
}

/// The canonical monomial basis of the bidegree-`(s, d)` piece: all words
/// of length `s` and degree `d` in lexicographic order. Empty when `d < s`
/// or when exactly one of `s`, `d` is zero; the `(0, 0)` basis is the unit.
pub fn monomial_basis(s: u32, d: u32) -> Vec<Monomial> {
    compositions_positive(d, s)
        .into_iter()
        .map(Monomial::new)
        .collect()
}

/// The outcome of [`resolve_relation`]: `pairs[pivot].0` equals the sum of
/// `pairs[i].0 * cofactors[i]` over the other indices.
#[derive(Clone, Debug)]
pub struct Dependence {
    pub pivot: usize,
    pub cofactors: BTreeMap<usize, Element>,
}

/// Given pairs `(aᵢ, bᵢ)` with `Σ aᵢ·bᵢ = 0`, every `bᵢ` nonzero and
/// homogeneous, produces an index `j` and cofactors `dᵢ` with
/// `aⱼ = Σ_{i≠j} aᵢ·dᵢ`.
///
/// The construction transduces the relation by one term of a `b` of least
/// bidegree: order the pairs so that a `bₙ` of lexicographically least
/// bidegree comes last (ties broken toward the largest input index), let
/// `μ` be the least monomial of `bₙ`, and take `dᵢ = bᵢ*`. Since `bₙ` is
/// homogeneous, `bₙ* = 1`, and transducing `Σ aᵢbᵢ = 0` leaves exactly the
/// claimed dependence.
pub fn resolve_relation(pairs: &[(Element, Element)]) -> Result<Dependence> {
    if pairs.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut bidegrees = Vec::with_capacity(pairs.len());
    for (index, (_, b)) in pairs.iter().enumerate() {
        if b.is_zero() {
            return Err(Error::ZeroRightFactor { index });
        }
        let bd = b
            .homogeneous_bidegree()
            .ok_or(Error::InhomogeneousFactor { index })?;
        bidegrees.push(bd);
    }
    let mut sum = Element::zero();
    for (a, b) in pairs {
        sum += a * b;
    }
    if !sum.is_zero() {
        return Err(Error::NonzeroRelationSum);
    }

    // Stable descending sort: the last slot gets the least bidegree, and
    // among equals the largest original index.
    let mut order: Vec<usize> = (0..pairs.len()).collect();
    order.sort_by(|&i, &j| bidegrees[j].cmp(&bidegrees[i]));
    let pivot = *order.last().expect("pairs is nonempty");

    let mu = pairs[pivot]
        .1
        .leading_monomial()
        .expect("pivot right factor is nonzero")
        .clone();
    debug_assert_eq!(pairs[pivot].1.transduce(&mu), Element::one());

    let cofactors = order[..order.len() - 1]
        .iter()
        .map(|&i| (i, pairs[i].1.transduce(&mu)))
        .collect();
    Ok(Dependence { pivot, cofactors })
}
