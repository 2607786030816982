//! Compositions and binomial coefficients.

/// Binomial coefficient `C(n, k)` as an exact `u64`, or `None` on overflow.
/// Out-of-range arguments (`k > n`) give `Some(0)`.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 1..=k {
        // Exact at every step: acc * (n - k + i) is divisible by i.
        acc = acc.checked_mul(n - k + i)? / i;
    }
    Some(acc)
}

/// Parity of `C(n, k)`: odd iff the binary digits of `k` are a submask of
/// those of `n`, i.e. iff `k AND (n - k) == 0`.
pub fn binomial_is_odd(n: u32, k: u32) -> bool {
    k <= n && k & (n - k) == 0
}

/// All compositions of `total` into `parts` positive parts, in lexicographic
/// order. `(0, 0)` yields the single empty composition.
pub fn compositions_positive(total: u32, parts: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(parts as usize);
    fill_positive(total, parts, &mut prefix, &mut out);
    out
}

fn fill_positive(total: u32, parts: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if parts == 0 {
        if total == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    if total < parts {
        return;
    }
    // Largest admissible first entry leaves one unit for each later part.
    for first in 1..=total - (parts - 1) {
        prefix.push(first);
        fill_positive(total - first, parts - 1, prefix, out);
        prefix.pop();
    }
}

/// All compositions of `total` into `parts` nonnegative parts, in
/// lexicographic order.
pub fn compositions_nonneg(total: u32, parts: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(parts as usize);
    fill_nonneg(total, parts, &mut prefix, &mut out);
    out
}

fn fill_nonneg(total: u32, parts: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if parts == 0 {
        if total == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    if parts == 1 {
        prefix.push(total);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for first in 0..=total {
        prefix.push(first);
        fill_nonneg(total - first, parts - 1, prefix, out);
        prefix.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(0, 0), Some(1));
        assert_eq!(binomial(5, 2), Some(10));
        assert_eq!(binomial(2, 5), Some(0));
        assert_eq!(binomial(30, 15), Some(155117520));
        assert_eq!(binomial(200, 100), None); // far past u64
    }

    #[test]
    fn parity_matches_pascal_triangle() {
        // Pascal's rule mod 2 is XOR of the two parents.
        let mut row = vec![true];
        for n in 0..64u32 {
            for k in 0..=n {
                assert_eq!(binomial_is_odd(n, k), row[k as usize], "C({n},{k})");
            }
            let mut next = vec![true];
            for k in 1..=n as usize {
                next.push(row[k - 1] ^ row[k]);
            }
            next.push(true);
            row = next;
        }
    }

    #[test]
    fn positive_compositions_are_lexicographic_and_counted() {
        assert_eq!(
            compositions_positive(4, 2),
            vec![vec![1, 3], vec![2, 2], vec![3, 1]]
        );
        assert_eq!(compositions_positive(0, 0), vec![Vec::<u32>::new()]);
        assert_eq!(compositions_positive(2, 3), Vec::<Vec<u32>>::new());
        for d in 1..=10u32 {
            for s in 1..=d {
                let n = compositions_positive(d, s).len() as u64;
                assert_eq!(n, binomial(d as u64 - 1, s as u64 - 1).unwrap());
            }
        }
    }

    #[test]
    fn nonneg_compositions_are_lexicographic_and_counted() {
        assert_eq!(
            compositions_nonneg(1, 2),
            vec![vec![0, 1], vec![1, 0]]
        );
        for n in 0..=8u32 {
            for s in 1..=4 {
                let count = compositions_nonneg(n, s).len() as u64;
                assert_eq!(
                    count,
                    binomial((n + s - 1) as u64, (s - 1) as u64).unwrap()
                );
            }
        }
    }
}
