//! Degree-bounded certification that `Δ(k)` is a free associative algebra.
//!
//! Per bidegree, the decomposable part of `Δ(k)` is the span of products of
//! lower-bidegree elements; a minimal generating set contributes one
//! generator per dimension of the quotient. If the algebra were free on
//! those generators, its graded dimension would be the word count
//!
//! ```text
//! f(0,0) = 1,   f(s,d) = Σ g(r,a) · f(s−r, d−a)   over positive (r,a),
//! ```
//!
//! and `dim Δ(k)_{s,d} ≤ f(s,d)` always holds because words in the
//! generators span. [`certify_free`] extracts generator counts, runs the
//! inversion, and reports per-cell equality: all-equal over a rectangle
//! certifies that no relation is supported there.

use serde::Serialize;

use std::collections::BTreeMap;

use crate::algebra::{monomial_basis, Bidegree, Element};
use crate::annihilated::BasisCache;
use crate::delta0::HilbertTable;
use crate::subspace::{element_to_row, SpanAccumulator, SubspaceBasis};
use crate::{Error, Result};

/// Canonical basis of the decomposable subspace of `Δ(k)_{s,d}`: the span
/// of all products `Δ(k)_{r,a} · Δ(k)_{s−r,d−a}` over proper positive
/// splits. Two-factor products suffice, since longer products factor
/// through them.
pub fn decomposables(k: u32, s: u32, d: u32, cache: &BasisCache) -> Result<SubspaceBasis> {
    let ambient = Bidegree::new(s, d);
    let mut products: Vec<Element> = Vec::new();
    for r in 1..s {
        for a in 1..d {
            let left = cache.delta_basis(k, r, a)?;
            if left.dim() == 0 {
                continue;
            }
            let right = cache.delta_basis(k, s - r, d - a)?;
            if right.dim() == 0 {
                continue;
            }
            for u in left.vectors() {
                for v in right.vectors() {
                    products.push(u * v);
                }
            }
        }
    }
    SubspaceBasis::from_spanning(ambient, &products)
}

/// Minimal generators per bidegree: coset representatives of
/// `Δ(k)_{s,d}` modulo its decomposables, with counts `g(s,d)`.
#[derive(Clone, Debug)]
pub struct GeneratorTable {
    pub k: u32,
    entries: BTreeMap<Bidegree, Vec<Element>>,
}

impl GeneratorTable {
    pub fn representatives(&self, s: u32, d: u32) -> &[Element] {
        self.entries
            .get(&Bidegree::new(s, d))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn counts(&self) -> HilbertTable {
        let mut t = HilbertTable::new();
        for (bd, reps) in &self.entries {
            t.set(bd.s, bd.d, reps.len() as u64);
        }
        t
    }

    pub fn iter(&self) -> impl Iterator<Item = (Bidegree, &[Element])> + '_ {
        self.entries.iter().map(|(&bd, v)| (bd, v.as_slice()))
    }
}

struct CellAnalysis {
    dim: usize,
    dec_dim: usize,
    reps: Vec<Element>,
}

/// Greedy canonical complement: seed the span with the decomposables, then
/// walk the kernel basis in canonical order and keep what is new.
fn analyze_cell(k: u32, s: u32, d: u32, cache: &BasisCache) -> Result<CellAnalysis> {
    let ambient = Bidegree::new(s, d);
    let basis = monomial_basis(s, d);
    let delta = cache.delta_basis(k, s, d)?;
    let dec = decomposables(k, s, d, cache)?;
    let mut acc = SpanAccumulator::new(basis.len());
    for v in dec.vectors() {
        acc.insert(element_to_row(v, &basis, ambient)?);
    }
    let mut reps = Vec::new();
    for v in delta.vectors() {
        if acc.insert(element_to_row(v, &basis, ambient)?) {
            reps.push(v.clone());
        }
    }
    Ok(CellAnalysis {
        dim: delta.dim(),
        dec_dim: dec.dim(),
        reps,
    })
}

/// Extracts minimal generators of `Δ(k)` in every bidegree of the
/// rectangle. The unit is never a generator.
pub fn minimal_generators(
    k: u32,
    s_max: u32,
    d_max: u32,
    cache: &BasisCache,
) -> Result<GeneratorTable> {
    let mut entries = BTreeMap::new();
    for s in 1..=s_max {
        for d in 1..=d_max {
            let cell = analyze_cell(k, s, d, cache)?;
            if !cell.reps.is_empty() {
                entries.insert(Bidegree::new(s, d), cell.reps);
            }
        }
    }
    Ok(GeneratorTable { k, entries })
}

/// Graded dimension of the free algebra on generator counts `g`: word
/// counting by convolution on the first factor. Requires `g` to be
/// supported in strictly positive bidegrees (in particular `g(0,0) = 0`);
/// overflow is an error, not a wrap.
pub fn hilbert_inversion(g: &HilbertTable, s_max: u32, d_max: u32) -> Result<HilbertTable> {
    for (bd, value) in g.iter() {
        if (bd.s == 0 || bd.d == 0) && value != 0 {
            return Err(Error::InvalidArgument(format!(
                "generator count at {bd} must be zero"
            )));
        }
    }
    let mut f = HilbertTable::new();
    f.set(0, 0, 1);
    for s in 1..=s_max {
        for d in 1..=d_max {
            let mut total: u64 = 0;
            for r in 1..=s {
                for a in 1..=d {
                    let count = g.get(r, a);
                    if count == 0 {
                        continue;
                    }
                    let prod = count
                        .checked_mul(f.get(s - r, d - a))
                        .ok_or(Error::Overflow)?;
                    total = total.checked_add(prod).ok_or(Error::Overflow)?;
                }
            }
            f.set(s, d, total);
        }
    }
    Ok(f)
}

/// One bidegree of a freeness certificate.
#[derive(Clone, Debug, Serialize)]
pub struct FreenessCell {
    pub s: u32,
    pub d: u32,
    /// dim Δ(k) at this bidegree.
    pub dim: u64,
    /// Dimension of the decomposable subspace.
    pub dec: u64,
    /// Number of minimal generators, `dim − dec`.
    pub g: u64,
    /// Free-algebra word count predicted by the generator counts.
    pub f: u64,
    /// True iff `f == dim`.
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Bounds {
    pub s_max: u32,
    pub d_max: u32,
}

/// A degree-bounded freeness certificate: every cell passing means no
/// relation among the extracted generators is supported in the rectangle.
#[derive(Clone, Debug, Serialize)]
pub struct FreenessReport {
    pub k: u32,
    pub bounds: Bounds,
    pub cells: Vec<FreenessCell>,
}

impl FreenessReport {
    pub fn all_pass(&self) -> bool {
        self.cells.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&FreenessCell> {
        self.cells.iter().find(|c| !c.pass)
    }
}

/// Runs the whole certificate for `Δ(k)` over `s ≤ s_max`, `d ≤ d_max`.
pub fn certify_free(k: u32, s_max: u32, d_max: u32, cache: &BasisCache) -> Result<FreenessReport> {
    let mut g = HilbertTable::new();
    let mut analyzed: BTreeMap<(u32, u32), (u64, u64)> = BTreeMap::new();
    for s in 0..=s_max {
        for d in 0..=d_max {
            if s == 0 || d == 0 {
                let dim = u64::from(s == 0 && d == 0);
                analyzed.insert((s, d), (dim, 0));
                continue;
            }
            let cell = analyze_cell(k, s, d, cache)?;
            analyzed.insert((s, d), (cell.dim as u64, cell.dec_dim as u64));
            g.set(s, d, cell.reps.len() as u64);
        }
    }
    let f = hilbert_inversion(&g, s_max, d_max)?;
    let mut cells = Vec::new();
    for s in 0..=s_max {
        for d in 0..=d_max {
            let (dim, dec) = analyzed[&(s, d)];
            let predicted = f.get(s, d);
            cells.push(FreenessCell {
                s,
                d,
                dim,
                dec,
                g: g.get(s, d),
                f: predicted,
                pass: predicted == dim,
            });
        }
    }
    Ok(FreenessReport {
        k,
        bounds: Bounds { s_max, d_max },
        cells,
    })
}
