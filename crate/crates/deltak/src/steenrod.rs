//! The right action of the Steenrod squares.
//!
//! On a single generator, `(γ_m)Sqᵏ = C(m−k, k) γ_{m−k}` mod 2 when
//! `m − k ≥ 1` and zero otherwise, with `Sq⁰` the identity; this is the
//! transpose of the squaring action `Sqᵏ xⁿ = C(n, k) x^{n+k}` on the
//! polynomial algebra `F₂[x]` (the cohomology side). See
//! [`crate::suites::check_action_oracle`] for the cross-check of the two
//! routes. On a word the action expands by the Cartan formula,
//! `(xy)Sqᵏ = Σ_{i+j=k} (x)Sqⁱ·(y)Sqʲ`, peeling the first letter; `Sqᵏ`
//! for `k > 0` kills the unit.
//!
//! Consequences used downstream: `Sq¹` is a differential, `(x)Sqᵏ = 0`
//! whenever `2k` exceeds the degree of `x` (instability), and each `Sqᵏ`
//! restricts to a linear map between bidegree pieces, realized as a
//! bit-packed matrix by [`sq_matrix`].

use crate::algebra::{monomial_basis, Element, Monomial};
use crate::combinatorics::binomial_is_odd;
use crate::gf2::MatrixGf2;

/// Action on a generator: `(γ_m)Sqᵏ`.
pub fn sq_generator(m: u32, k: u32) -> Element {
    assert!(m >= 1, "no generator of degree {m}");
    if k == 0 {
        return Element::from(Monomial::gamma(m));
    }
    if k >= m {
        // m − k < 1: the reduced homology has no classes below degree 1.
        return Element::zero();
    }
    if binomial_is_odd(m - k, k) {
        Element::from(Monomial::gamma(m - k))
    } else {
        Element::zero()
    }
}

fn sq_word(indices: &[u32], k: u32) -> Element {
    if k == 0 {
        return Element::from(Monomial::new(indices.to_vec()));
    }
    let Some((&head, tail)) = indices.split_first() else {
        // Positive squares kill the unit.
        return Element::zero();
    };
    let mut out = Element::zero();
    for j in 0..=k {
        let lead = sq_generator(head, j);
        if lead.is_zero() {
            continue;
        }
        let rest = sq_word(tail, k - j);
        if rest.is_zero() {
            continue;
        }
        out += &lead * &rest;
    }
    out
}

/// The right action `(a)Sqᵏ`, extended linearly over the terms of `a`.
pub fn sq(a: &Element, k: u32) -> Element {
    let mut out = Element::zero();
    for term in a.terms() {
        out += sq_word(term.indices(), k);
    }
    out
}

/// The matrix of `Sqᵏ : (s, d) → (s, d−k)` with rows indexed by the
/// canonical monomial basis of the source and columns by the target, so a
/// coordinate row vector maps by right multiplication. The matrix has zero
/// columns when the target bidegree is empty.
pub fn sq_matrix(s: u32, d: u32, k: u32) -> MatrixGf2 {
    let source = monomial_basis(s, d);
    let target = if d >= k {
        monomial_basis(s, d - k)
    } else {
        Vec::new()
    };
    let mut m = MatrixGf2::zero(source.len(), target.len());
    for (r, word) in source.iter().enumerate() {
        let image = sq_word(word.indices(), k);
        for t in image.terms() {
            let c = target
                .binary_search(t)
                .expect("image terms stay in the target bidegree");
            m.set(r, c, true);
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn e(monomials: &[&[u32]]) -> Element {
        let mut out = Element::zero();
        for idx in monomials {
            out.toggle(Monomial::new(idx.to_vec()));
        }
        out
    }

    #[test]
    fn generator_action_examples() {
        assert_eq!(sq_generator(2, 1), e(&[&[1]]));
        assert_eq!(sq_generator(3, 1), Element::zero());
        // Even degree: [2m+2]Sq¹ = [2m+1].
        for mp in 0..16u32 {
            assert_eq!(sq_generator(2 * mp + 2, 1), e(&[&[2 * mp + 1]]));
        }
        assert_eq!(sq_generator(5, 0), e(&[&[5]]));
        assert_eq!(sq_generator(1, 1), Element::zero());
        // C(2,2) = 1: [4]Sq² = [2].
        assert_eq!(sq_generator(4, 2), e(&[&[2]]));
    }

    #[test]
    fn cartan_on_words() {
        assert_eq!(sq(&e(&[&[2, 2]]), 1), e(&[&[1, 2], &[2, 1]]));
        let a = e(&[&[3, 1], &[2, 2], &[4]]);
        assert_eq!(sq(&a, 0), a);
        // All-even word: Sq¹ turns one factor odd at a time.
        assert_eq!(
            sq(&e(&[&[2, 4, 2]]), 1),
            e(&[&[1, 4, 2], &[2, 3, 2], &[2, 4, 1]])
        );
        assert_eq!(sq(&Element::one(), 1), Element::zero());
        assert_eq!(sq(&Element::one(), 0), Element::one());
    }

    #[test]
    fn matrix_examples() {
        let m = sq_matrix(1, 2, 1);
        assert_eq!((m.rows(), m.cols()), (1, 1));
        assert!(m.get(0, 0));

        let m = sq_matrix(1, 3, 1);
        assert_eq!((m.rows(), m.cols()), (1, 1));
        assert!(!m.get(0, 0));

        let m = sq_matrix(2, 2, 1);
        assert_eq!((m.rows(), m.cols()), (1, 0));
    }

    #[test]
    fn sq1_matrices_compose_to_zero() {
        for s in 1..=3u32 {
            for d in s..=10 {
                let first = sq_matrix(s, d + 1, 1);
                let second = sq_matrix(s, d, 1);
                // Row-vector convention: applying Sq¹ twice multiplies the
                // matrices in application order.
                assert!(first.mul(&second).is_zero(), "s={s} d={d}");
            }
        }
    }

    prop_compose! {
        fn arb_element()(ms in prop::collection::vec(prop::collection::vec(1u32..=4, 0..=3), 0..=3)) -> Element {
            let mut out = Element::zero();
            for indices in ms {
                out.toggle(Monomial::new(indices));
            }
            out
        }
    }

    proptest! {
        #[test]
        fn cartan_formula_on_products(a in arb_element(), b in arb_element(), k in 0u32..=8) {
            let lhs = sq(&(&a * &b), k);
            let mut rhs = Element::zero();
            for i in 0..=k {
                rhs += &sq(&a, i) * &sq(&b, k - i);
            }
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn action_is_linear(a in arb_element(), b in arb_element(), k in 0u32..=6) {
            prop_assert_eq!(sq(&(&a + &b), k), sq(&a, k) + sq(&b, k));
        }
    }
}
