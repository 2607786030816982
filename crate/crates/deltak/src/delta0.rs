//! The explicit structure of `Δ(0) = ker Sq¹`.
//!
//! For `s ≥ 1` and `m_i ≥ 0`, the element
//! `σ(m₁, …, m_s) = [2m₁+2, …, 2m_s+2]Sq¹` lies in the kernel of `Sq¹`
//! (which acts as a differential), sits in bidegree
//! `(s, 2(m₁+⋯+m_s) + 2s − 1)`, and has weight 1. These elements freely
//! generate `Δ(0)`; there are `η(s, d)` of them in bidegree `(s, d)`, zero
//! for even `d` and `C((d−1)/2, s−1)` for odd `d`. Counting words in the
//! generators gives the recurrence computed by [`c_table`]:
//!
//! ```text
//! c(0,0) = 1,   c(s,0) = c(0,d) = 0 otherwise,
//! c(s,d) = Σ_{r=1..s} Σ_{a=1..d} η(r,a) · c(s−r, d−a),
//! ```
//!
//! with closed forms for `s ≤ 3` in [`closed_c`]. [`verify_s0`] confronts
//! the whole story with the linear algebra: per bidegree it checks that the
//! σ's land in the kernel, that they are independent in the predicted
//! number, and that products of σ's span the kernel exactly.

use std::collections::BTreeMap;

use crate::algebra::{Bidegree, Element, Monomial};
use crate::annihilated::BasisCache;
use crate::combinatorics::{binomial, compositions_nonneg};
use crate::steenrod::sq;
use crate::subspace::{span_dimension, SubspaceBasis};
use crate::{Error, Result};

/// `σ(m₁, …, m_s)`: the image of the all-even word `[2m₁+2, …, 2m_s+2]`
/// under `Sq¹`. Expanding the Cartan formula, it is the sum over `j` of the
/// words with the `j`-th entry lowered to `2m_j+1`.
pub fn sigma(ms: &[u32]) -> Result<Element> {
    if ms.is_empty() {
        return Err(Error::EmptyInput);
    }
    let word = Monomial::new(ms.iter().map(|&m| 2 * m + 2).collect());
    Ok(sq(&Element::from(word), 1))
}

/// Display form `sigma(m1,...,ms)` used in generator listings.
pub fn sigma_descriptor(ms: &[u32]) -> String {
    let parts: Vec<String> = ms.iter().map(|m| m.to_string()).collect();
    format!("sigma({})", parts.join(","))
}

/// Bidegree of `σ(ms)`: length `s`, degree `2Σm + 2s − 1`.
pub fn sigma_bidegree(ms: &[u32]) -> Bidegree {
    let s = ms.len() as u32;
    let total: u32 = ms.iter().sum();
    Bidegree::new(s, 2 * total + 2 * s - 1)
}

/// All descriptors `(m₁, …, m_s)` whose σ lands in bidegree `(s, d)`, in
/// lexicographic order: the compositions of `(d+1)/2 − s` into `s`
/// nonnegative parts. Empty when `d` is even or too small.
pub fn enumerate_sigma(s: u32, d: u32) -> Vec<Vec<u32>> {
    assert!(s >= 1, "sigma descriptors have length at least 1");
    if d.is_multiple_of(2) {
        return Vec::new();
    }
    let half = d.div_ceil(2);
    if half < s {
        return Vec::new();
    }
    compositions_nonneg(half - s, s)
}

/// The generator count `η(s, d)`: zero for even `d`, `C((d−1)/2, s−1)` for
/// odd `d`.
pub fn eta(s: u32, d: u32) -> Result<u64> {
    assert!(s >= 1, "eta is defined for length at least 1");
    if d.is_multiple_of(2) {
        return Ok(0);
    }
    binomial(((d - 1) / 2) as u64, (s - 1) as u64).ok_or(Error::Overflow)
}

/// A table of nonnegative counts indexed by bidegree; absent entries are 0.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct HilbertTable {
    entries: BTreeMap<Bidegree, u64>,
}

impl HilbertTable {
    pub fn new() -> Self {
        HilbertTable::default()
    }

    pub fn get(&self, s: u32, d: u32) -> u64 {
        self.entries
            .get(&Bidegree::new(s, d))
            .copied()
            .unwrap_or(0)
    }

    /// Stores a value; zeros are simply dropped.
    pub fn set(&mut self, s: u32, d: u32, value: u64) {
        if value == 0 {
            self.entries.remove(&Bidegree::new(s, d));
        } else {
            self.entries.insert(Bidegree::new(s, d), value);
        }
    }

    /// Nonzero entries in increasing bidegree order.
    pub fn iter(&self) -> impl Iterator<Item = (Bidegree, u64)> + '_ {
        self.entries.iter().map(|(&bd, &v)| (bd, v))
    }

    /// CSV rendering of the rectangle `s ≤ s_max`, `d ≤ d_max`: rows are
    /// lengths, columns are degrees, with a header row of degrees.
    pub fn to_csv(&self, s_max: u32, d_max: u32) -> String {
        let mut text = String::from("s");
        for d in 0..=d_max {
            text.push_str(&format!(",{d}"));
        }
        text.push('\n');
        for s in 0..=s_max {
            text.push_str(&s.to_string());
            for d in 0..=d_max {
                text.push_str(&format!(",{}", self.get(s, d)));
            }
            text.push('\n');
        }
        text
    }
}

/// The dimension table of `Δ(0)` predicted by the generator counts, via the
/// word-count recurrence. Detects `u64` overflow rather than wrapping.
pub fn c_table(s_max: u32, d_max: u32) -> Result<HilbertTable> {
    let mut table = HilbertTable::new();
    table.set(0, 0, 1);
    for s in 1..=s_max {
        for d in 1..=d_max {
            let mut total: u64 = 0;
            for r in 1..=s {
                for a in (1..=d).step_by(2) {
                    // Even a has eta = 0.
                    let count = eta(r, a)?;
                    if count == 0 {
                        continue;
                    }
                    let tail = table.get(s - r, d - a);
                    let prod = count.checked_mul(tail).ok_or(Error::Overflow)?;
                    total = total.checked_add(prod).ok_or(Error::Overflow)?;
                }
            }
            table.set(s, d, total);
        }
    }
    Ok(table)
}

/// Closed forms for the dimensions of `Δ(0)` at lengths 1, 2, 3, split on
/// the parity of `d`.
pub fn closed_c(s: u32, d: u32) -> Result<u64> {
    let d = d as u64;
    let even = d.is_multiple_of(2);
    match s {
        1 => Ok(if even { 0 } else { 1 }),
        2 => Ok(if even { d / 2 } else { (d - 1) / 2 }),
        3 => Ok(if even {
            if d == 0 {
                0
            } else {
                d * (d - 2) / 4
            }
        } else {
            (d - 1) * (d - 1) / 4
        }),
        _ => Err(Error::InvalidArgument(format!(
            "no closed formula for length {s}; lengths 1, 2, 3 are supported"
        ))),
    }
}

/// One bidegree of the σ-generator verification.
#[derive(Clone, Debug)]
pub struct S0Cell {
    pub s: u32,
    pub d: u32,
    /// σ's found in this bidegree.
    pub generator_count: usize,
    /// The predicted count η(s, d).
    pub expected_count: u64,
    /// Every σ is killed by Sq¹ and lies in the computed kernel.
    pub in_kernel: bool,
    /// The σ's are linearly independent.
    pub independent: bool,
    /// Products of σ's span the kernel exactly.
    pub span_matches: bool,
    pub span_dim: usize,
    pub kernel_dim: usize,
}

impl S0Cell {
    pub fn pass(&self) -> bool {
        self.in_kernel
            && self.independent
            && self.span_matches
            && self.generator_count as u64 == self.expected_count
    }
}

/// Result of [`verify_s0`] over a rectangle of bidegrees.
#[derive(Clone, Debug)]
pub struct S0Report {
    pub s_max: u32,
    pub d_max: u32,
    pub cells: Vec<S0Cell>,
}

impl S0Report {
    pub fn all_pass(&self) -> bool {
        self.cells.iter().all(S0Cell::pass)
    }

    pub fn first_failure(&self) -> Option<&S0Cell> {
        self.cells.iter().find(|c| !c.pass())
    }
}

/// Checks, for every bidegree in range, that the σ's belong to `ker Sq¹`,
/// that they are independent with count `η`, and that the span of all
/// products of σ's equals the kernel. The empty product (the unit) spans
/// the `(0, 0)` piece.
pub fn verify_s0(s_max: u32, d_max: u32, cache: &BasisCache) -> Result<S0Report> {
    // words[s][d] lists one element per word in the σ's of total bidegree
    // (s, d), built by splitting off the first factor.
    let mut words: Vec<Vec<Vec<Element>>> = vec![vec![Vec::new(); d_max as usize + 1]; s_max as usize + 1];
    words[0][0].push(Element::one());
    let mut sigmas: BTreeMap<(u32, u32), Vec<Element>> = BTreeMap::new();
    for s in 1..=s_max {
        for d in (1..=d_max).step_by(2) {
            let elems: Result<Vec<Element>> =
                enumerate_sigma(s, d).iter().map(|ms| sigma(ms)).collect();
            sigmas.insert((s, d), elems?);
        }
    }
    for s in 1..=s_max {
        for d in 1..=d_max {
            let mut list = Vec::new();
            for r in 1..=s {
                for a in (1..=d).step_by(2) {
                    let Some(firsts) = sigmas.get(&(r, a)) else {
                        continue;
                    };
                    for first in firsts {
                        for tail in &words[(s - r) as usize][(d - a) as usize] {
                            list.push(first * tail);
                        }
                    }
                }
            }
            words[s as usize][d as usize] = list;
        }
    }

    let mut cells = Vec::new();
    for s in 0..=s_max {
        for d in 0..=d_max {
            let ambient = Bidegree::new(s, d);
            let kernel = cache.delta_basis(0, s, d)?;
            let gens: &[Element] = match sigmas.get(&(s, d)) {
                Some(list) => list,
                None => &[],
            };
            let mut in_kernel = true;
            for g in gens {
                if !sq(g, 1).is_zero() || !kernel.member(g)? {
                    in_kernel = false;
                }
            }
            let expected_count = if s >= 1 { eta(s, d)? } else { 0 };
            let independent = span_dimension(gens, ambient)? == gens.len();
            let span = SubspaceBasis::from_spanning(ambient, &words[s as usize][d as usize])?;
            let span_matches = span == *kernel;
            cells.push(S0Cell {
                s,
                d,
                generator_count: gens.len(),
                expected_count,
                in_kernel,
                independent,
                span_matches,
                span_dim: span.dim(),
                kernel_dim: kernel.dim(),
            });
        }
    }
    Ok(S0Report {
        s_max,
        d_max,
        cells,
    })
}
