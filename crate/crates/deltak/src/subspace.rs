//! Subspaces of a bidegree piece, represented canonically.
//!
//! A [`SubspaceBasis`] holds homogeneous elements of one bidegree in reduced
//! echelon form with respect to the canonical monomial ordering: leading
//! monomials strictly increase and every leading monomial occurs in no
//! other basis vector. Two equal subspaces therefore have equal
//! representations, and `==` decides subspace equality.

use crate::algebra::{monomial_basis, Bidegree, Element, Monomial};
use crate::gf2::MatrixGf2;
use crate::{Error, Result};

const WORD_BITS: usize = 64;

pub(crate) fn words_for(cols: usize) -> usize {
    cols.div_ceil(WORD_BITS)
}

/// Coordinates of a homogeneous element with respect to the monomial basis
/// of the ambient bidegree, bit-packed. Fails when some term lies outside
/// the ambient bidegree.
pub(crate) fn element_to_row(
    e: &Element,
    basis: &[Monomial],
    ambient: Bidegree,
) -> Result<Vec<u64>> {
    let mut row = vec![0u64; words_for(basis.len())];
    for term in e.terms() {
        let Ok(i) = basis.binary_search(term) else {
            return Err(Error::NotHomogeneous { expected: ambient });
        };
        row[i / WORD_BITS] ^= 1 << (i % WORD_BITS);
    }
    Ok(row)
}

pub(crate) fn row_to_element(row: &[u64], basis: &[Monomial]) -> Element {
    let mut e = Element::zero();
    for (w, &word) in row.iter().enumerate() {
        let mut bits = word;
        while bits != 0 {
            let i = w * WORD_BITS + bits.trailing_zeros() as usize;
            e.toggle(basis[i].clone());
            bits &= bits - 1;
        }
    }
    e
}

/// A subspace of the bidegree-`(s, d)` piece, held as its canonical reduced
/// echelon basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubspaceBasis {
    ambient: Bidegree,
    vectors: Vec<Element>,
}

impl SubspaceBasis {
    /// The zero subspace.
    pub fn empty(ambient: Bidegree) -> Self {
        SubspaceBasis {
            ambient,
            vectors: Vec::new(),
        }
    }

    /// The whole bidegree piece; its canonical basis is the monomial basis.
    pub fn full(ambient: Bidegree) -> Self {
        let vectors = monomial_basis(ambient.s, ambient.d)
            .into_iter()
            .map(Element::from)
            .collect();
        SubspaceBasis { ambient, vectors }
    }

    /// Canonicalizes a spanning set. Every element must be homogeneous in
    /// `ambient`.
    pub fn from_spanning(ambient: Bidegree, spanning: &[Element]) -> Result<Self> {
        let basis = monomial_basis(ambient.s, ambient.d);
        let mut m = MatrixGf2::zero(spanning.len(), basis.len());
        for (r, e) in spanning.iter().enumerate() {
            let row = element_to_row(e, &basis, ambient)?;
            for (c, &word) in row.iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let col = c * WORD_BITS + bits.trailing_zeros() as usize;
                    m.set(r, col, true);
                    bits &= bits - 1;
                }
            }
        }
        let (rref, rank) = m.rref();
        Ok(Self::from_canonical_matrix(ambient, &rref, rank, &basis))
    }

    /// Reads rows of an already-reduced matrix back as elements. The rows
    /// must be a canonical echelon basis (as produced by `rref`/`kernel`).
    pub(crate) fn from_canonical_matrix(
        ambient: Bidegree,
        m: &MatrixGf2,
        rows: usize,
        basis: &[Monomial],
    ) -> Self {
        let vectors = (0..rows)
            .map(|r| row_to_element(m.row_words(r), basis))
            .collect();
        SubspaceBasis { ambient, vectors }
    }

    pub fn ambient(&self) -> Bidegree {
        self.ambient
    }

    /// Dimension of the ambient bidegree piece.
    pub fn ambient_dim(&self) -> usize {
        monomial_basis(self.ambient.s, self.ambient.d).len()
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Element] {
        &self.vectors
    }

    /// Whether `v` lies in the span. Rejects elements that are not
    /// homogeneous in the ambient bidegree; zero belongs to every subspace.
    pub fn member(&self, v: &Element) -> Result<bool> {
        if !v.is_homogeneous_at(self.ambient) {
            return Err(Error::NotHomogeneous {
                expected: self.ambient,
            });
        }
        let basis = monomial_basis(self.ambient.s, self.ambient.d);
        let mut row = element_to_row(v, &basis, self.ambient)?;
        for b in &self.vectors {
            let brow = element_to_row(b, &basis, self.ambient)?;
            let pivot = b
                .leading_monomial()
                .and_then(|m| basis.binary_search(m).ok())
                .expect("basis vectors are nonzero and homogeneous");
            if row[pivot / WORD_BITS] >> (pivot % WORD_BITS) & 1 == 1 {
                for (i, w) in brow.iter().enumerate() {
                    row[i] ^= w;
                }
            }
        }
        Ok(row.iter().all(|&w| w == 0))
    }
}

/// Dimension of the span of homogeneous elements of one bidegree.
pub fn span_dimension(vectors: &[Element], ambient: Bidegree) -> Result<usize> {
    Ok(SubspaceBasis::from_spanning(ambient, vectors)?.dim())
}

/// Incremental Gaussian accumulator: rows are kept in echelon (not
/// necessarily reduced) form, so membership and rank queries stay cheap
/// while vectors arrive one at a time.
pub struct SpanAccumulator {
    words: usize,
    // (pivot bit index, row), sorted by pivot.
    rows: Vec<(usize, Vec<u64>)>,
}

impl SpanAccumulator {
    pub fn new(ambient_dim: usize) -> Self {
        SpanAccumulator {
            words: words_for(ambient_dim),
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, row: &mut [u64]) {
        for (pivot, r) in &self.rows {
            if row[pivot / WORD_BITS] >> (pivot % WORD_BITS) & 1 == 1 {
                for (i, w) in r.iter().enumerate() {
                    row[i] ^= w;
                }
            }
        }
    }

    fn leading_bit(row: &[u64]) -> Option<usize> {
        row.iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * WORD_BITS + w.trailing_zeros() as usize)
    }

    /// Adds a vector; returns whether it enlarged the span.
    pub fn insert(&mut self, mut row: Vec<u64>) -> bool {
        debug_assert_eq!(row.len(), self.words);
        self.reduce(&mut row);
        match Self::leading_bit(&row) {
            None => false,
            Some(pivot) => {
                let at = self.rows.partition_point(|(p, _)| *p < pivot);
                self.rows.insert(at, (pivot, row));
                true
            }
        }
    }

    pub fn contains(&self, row: &[u64]) -> bool {
        let mut row = row.to_vec();
        self.reduce(&mut row);
        Self::leading_bit(&row).is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::steenrod::sq;

    fn e(monomials: &[&[u32]]) -> Element {
        let mut out = Element::zero();
        for idx in monomials {
            out.toggle(Monomial::new(idx.to_vec()));
        }
        out
    }

    #[test]
    fn span_dimension_examples() {
        let ambient = Bidegree::new(2, 3);
        let vs = vec![e(&[&[1, 2]]), e(&[&[2, 1]]), e(&[&[1, 2], &[2, 1]])];
        assert_eq!(span_dimension(&vs, ambient).unwrap(), 2);
        assert_eq!(span_dimension(&[], ambient).unwrap(), 0);
        let full: Vec<Element> = monomial_basis(2, 4).into_iter().map(Element::from).collect();
        assert_eq!(span_dimension(&full, Bidegree::new(2, 4)).unwrap(), 3);
    }

    #[test]
    fn span_dimension_rejects_mixed_input() {
        let vs = vec![e(&[&[1, 2], &[3]])];
        assert!(span_dimension(&vs, Bidegree::new(2, 3)).is_err());
    }

    #[test]
    fn member_examples() {
        let ambient = Bidegree::new(2, 3);
        let b = SubspaceBasis::from_spanning(ambient, &[e(&[&[1, 2], &[2, 1]])]).unwrap();
        assert!(b.member(&Element::zero()).unwrap());
        assert!(!b.member(&e(&[&[1, 2]])).unwrap());
        assert!(b.member(&e(&[&[1, 2], &[2, 1]])).unwrap());
        assert!(b.member(&e(&[&[3]])).is_err());
        // The image of [2,2] under the degree-lowering square lies in the
        // kernel it generates.
        let sigma00 = sq(&e(&[&[2, 2]]), 1);
        assert!(b.member(&sigma00).unwrap());
    }

    #[test]
    fn member_agrees_with_brute_force() {
        // Enumerate all combinations of the basis of a subspace and compare
        // against member() for every vector of the ambient space.
        let ambient = Bidegree::new(2, 9);
        let basis = monomial_basis(2, 9);
        assert_eq!(basis.len(), 8);
        // A 5-dimensional subspace from overlapping pairs of basis words.
        let spanning: Vec<Element> = (0..5)
            .map(|i| {
                let mut v = Element::zero();
                v.toggle(basis[i].clone());
                v.toggle(basis[i + 3].clone());
                v
            })
            .collect();
        let sub = SubspaceBasis::from_spanning(ambient, &spanning).unwrap();
        assert_eq!(sub.dim(), 5);
        let mut span: Vec<Element> = Vec::new();
        for mask in 0u32..1 << sub.dim() {
            let mut v = Element::zero();
            for (i, b) in sub.vectors().iter().enumerate() {
                if mask >> i & 1 == 1 {
                    v += b;
                }
            }
            span.push(v);
        }
        for mask in 0u32..1 << basis.len() {
            let mut v = Element::zero();
            for (i, m) in basis.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    v.toggle(m.clone());
                }
            }
            assert_eq!(sub.member(&v).unwrap(), span.contains(&v));
        }
    }

    #[test]
    fn canonical_form_is_representation_equality() {
        let ambient = Bidegree::new(2, 4);
        let s1 = vec![e(&[&[1, 3]]), e(&[&[1, 3], &[3, 1]])];
        let s2 = vec![e(&[&[3, 1]]), e(&[&[1, 3]])];
        let b1 = SubspaceBasis::from_spanning(ambient, &s1).unwrap();
        let b2 = SubspaceBasis::from_spanning(ambient, &s2).unwrap();
        assert_eq!(b1, b2);
        // Leading monomials strictly increase.
        let leads: Vec<_> = b1
            .vectors()
            .iter()
            .map(|v| v.leading_monomial().unwrap().clone())
            .collect();
        let mut sorted = leads.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(leads, sorted);
    }

    #[test]
    fn accumulator_tracks_rank() {
        let dim = 4;
        let mut acc = SpanAccumulator::new(dim);
        assert!(acc.insert(vec![0b0011]));
        assert!(acc.insert(vec![0b0110]));
        assert!(!acc.insert(vec![0b0101]));
        assert_eq!(acc.dim(), 2);
        assert!(acc.contains(&[0b0101]));
        assert!(!acc.contains(&[0b1000]));
    }
}
