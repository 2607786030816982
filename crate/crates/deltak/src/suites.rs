//! Named verification suites, runnable from the command line.
//!
//! Each check returns `Ok(())` or a description of the first failure, so a
//! failing run names the offending bidegree or input. The checks are
//! deliberately redundant with the main computations: the action oracle
//! rebuilds the generator action from the polynomial-algebra side with an
//! independent binomial-parity routine, and the random checks use a fixed
//! seed so runs are reproducible.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{monomial_basis, resolve_relation, Element, Monomial};
use crate::annihilated::{image_sq1_basis, full_annihilated_basis, BasisCache};
use crate::combinatorics::binomial;
use crate::delta0::{c_table, closed_c, verify_s0};
use crate::steenrod::{sq, sq_generator};
use crate::{Error, Result};

/// The suites the command line knows about, in their canonical order.
pub const SUITE_NAMES: [&str; 9] = [
    "action-oracle",
    "instability",
    "sq1-differential",
    "ker-eq-im",
    "S0",
    "recurrence",
    "reduction-formula",
    "transduction",
    "adem-spot",
];

pub struct SuiteOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

type Check = std::result::Result<(), String>;

/// Parity of `C(n, k)` by Pascal's rule, kept independent of the submask
/// shortcut used by the production action.
struct PascalParity {
    rows: Vec<Vec<bool>>,
}

impl PascalParity {
    fn up_to(n_max: u32) -> Self {
        let mut rows: Vec<Vec<bool>> = vec![vec![true]];
        for n in 1..=n_max as usize {
            let prev = &rows[n - 1];
            let mut row = vec![true];
            for k in 1..n {
                row.push(prev[k - 1] ^ prev[k]);
            }
            row.push(true);
            rows.push(row);
        }
        PascalParity { rows }
    }

    fn is_odd(&self, n: u32, k: u32) -> bool {
        k <= n && self.rows[n as usize][k as usize]
    }
}

/// The generator action, rebuilt from the other side of the duality: on the
/// polynomial algebra `F₂[x]` the squares act by `Sqᵏ xⁿ = C(n, k) x^{n+k}`,
/// and the action on the degree-`m` homology generator is its transpose.
/// Agreement is checked for all `m ≤ m_max`, `k ≤ k_max`.
pub fn check_action_oracle(m_max: u32, k_max: u32) -> Check {
    let pascal = PascalParity::up_to(m_max);
    for m in 1..=m_max {
        for k in 0..=k_max {
            let mut expected = Element::zero();
            for n in 1..=m {
                // x^n contributes to x^m exactly when n + k = m and the
                // cohomology coefficient C(n, k) is odd.
                if n + k == m && pascal.is_odd(n, k) {
                    expected.toggle(Monomial::gamma(n));
                }
            }
            let got = sq_generator(m, k);
            if got != expected {
                return Err(format!(
                    "generator action disagrees with the transposed polynomial action at m={m} k={k}: {got} vs {expected}"
                ));
            }
        }
    }
    Ok(())
}

fn for_each_basis_word(d_max: u32, mut f: impl FnMut(u32, u32, &Monomial) -> Check) -> Check {
    for d in 0..=d_max {
        for s in 0..=d {
            if s == 0 && d > 0 {
                continue;
            }
            for word in &monomial_basis(s, d) {
                f(s, d, word)?;
            }
        }
    }
    Ok(())
}

/// `(x)Sqᵏ = 0` whenever `2k` exceeds the degree, on full monomial bases.
pub fn check_instability(d_max: u32) -> Check {
    for_each_basis_word(d_max, |s, d, word| {
        let x = Element::from(word.clone());
        for k in d / 2 + 1..=d + 1 {
            if !sq(&x, k).is_zero() {
                return Err(format!("({word})Sq{k} is nonzero at ({s},{d})"));
            }
        }
        Ok(())
    })
}

/// `Sq¹` composed with itself vanishes on full monomial bases.
pub fn check_sq1_differential(d_max: u32) -> Check {
    for_each_basis_word(d_max, |s, d, word| {
        let once = sq(&Element::from(word.clone()), 1);
        if !sq(&once, 1).is_zero() {
            return Err(format!("Sq1 Sq1 does not vanish on {word} at ({s},{d})"));
        }
        Ok(())
    })
}

/// The action factors through the relations of the Steenrod algebra:
/// `((x)Sq¹)Sq² = (x)Sq³` and `((x)Sq¹)Sq¹ = 0` on full bases.
pub fn check_adem_spot(d_max: u32) -> Check {
    for_each_basis_word(d_max, |s, d, word| {
        let x = Element::from(word.clone());
        let via_composite = sq(&sq(&x, 1), 2);
        if via_composite != sq(&x, 3) {
            return Err(format!(
                "((x)Sq1)Sq2 != (x)Sq3 for x = {word} at ({s},{d})"
            ));
        }
        if !sq(&sq(&x, 1), 1).is_zero() {
            return Err(format!("((x)Sq1)Sq1 != 0 for x = {word} at ({s},{d})"));
        }
        Ok(())
    })
}

/// `ker Sq¹ = im Sq¹` in every bidegree of the window, as canonical
/// subspaces.
pub fn check_ker_eq_im(s_max: u32, d_max: u32, cache: &BasisCache) -> Result<Check> {
    for s in 1..=s_max {
        for d in 0..=d_max {
            let kernel = cache.delta_basis(0, s, d)?;
            let image = image_sq1_basis(s, d)?;
            if *kernel != image {
                return Ok(Err(format!(
                    "ker Sq1 != im Sq1 at ({s},{d}): dim {} vs {}",
                    kernel.dim(),
                    image.dim()
                )));
            }
        }
    }
    Ok(Ok(()))
}

/// The recurrence dimensions match the computed kernels, and the closed
/// formulas for lengths 1..3 match the recurrence.
pub fn check_recurrence(s_max: u32, d_max: u32, cache: &BasisCache) -> Result<Check> {
    let c = c_table(s_max, d_max)?;
    for s in 0..=s_max {
        for d in 0..=d_max {
            let dim = cache.delta_dim(0, s, d)? as u64;
            if c.get(s, d) != dim {
                return Ok(Err(format!(
                    "recurrence value {} != kernel dimension {dim} at ({s},{d})",
                    c.get(s, d)
                )));
            }
        }
    }
    for s in 1..=s_max.min(3) {
        for d in 0..=d_max {
            let closed = closed_c(s, d)?;
            if closed != c.get(s, d) {
                return Ok(Err(format!(
                    "closed formula {closed} != recurrence {} at ({s},{d})",
                    c.get(s, d)
                )));
            }
        }
    }
    Ok(Ok(()))
}

/// `c(s,d) + c(s,d+1) = C(d, s−1)`, the ambient dimension.
pub fn check_reduction_formula(s_max: u32, d_max: u32) -> Result<Check> {
    let c = c_table(s_max, d_max + 1)?;
    for s in 1..=s_max {
        for d in 0..=d_max {
            let lhs = c.get(s, d) + c.get(s, d + 1);
            let rhs = binomial(d as u64, (s - 1) as u64).ok_or(Error::Overflow)?;
            if lhs != rhs {
                return Ok(Err(format!(
                    "c({s},{d}) + c({s},{d}+1) = {lhs} != C({d},{}) = {rhs}",
                    s - 1
                )));
            }
        }
    }
    Ok(Ok(()))
}

fn random_monomial(rng: &mut ChaCha8Rng, min_len: u32, max_len: u32, max_index: u32) -> Monomial {
    let len = rng.gen_range(min_len..=max_len);
    Monomial::new((0..len).map(|_| rng.gen_range(1..=max_index)).collect())
}

fn random_element(rng: &mut ChaCha8Rng, max_terms: u32) -> Element {
    let mut out = Element::zero();
    for _ in 0..rng.gen_range(0..=max_terms) {
        out.toggle(random_monomial(rng, 0, 4, 5));
    }
    out
}

fn random_homogeneous(rng: &mut ChaCha8Rng, s: u32, d: u32, nonzero: bool) -> Element {
    let basis = monomial_basis(s, d);
    assert!(!basis.is_empty(), "empty basis at ({s},{d})");
    loop {
        let mut out = Element::zero();
        for m in &basis {
            if rng.gen_bool(0.5) {
                out.toggle(m.clone());
            }
        }
        if !nonzero || !out.is_zero() {
            return out;
        }
    }
}

/// Transduction reconstruction on random `(a, μ)` pairs, and the
/// multiplicativity `(a·b)* = a·b*` on random homogeneous pairs with
/// `bidegree(b) ≥ bidegree(μ)` in the length-first order.
pub fn check_transduction(pairs: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for round in 0..pairs {
        let a = random_element(&mut rng, 5);
        let mu = random_monomial(&mut rng, 1, 3, 4);
        let star = a.transduce(&mu);
        let rest = &a + &(&star * &Element::from(mu.clone()));
        if !rest.transduce(&mu).is_zero() {
            return Err(format!(
                "round {round}: remainder of a = {a} still divisible by mu = {mu}"
            ));
        }
        if &rest + &(&star * &Element::from(mu.clone())) != a {
            return Err(format!("round {round}: reconstruction failed for a = {a}"));
        }
    }
    for round in 0..pairs {
        let mu = random_monomial(&mut rng, 1, 3, 4);
        let (s_mu, d_mu) = (mu.length(), mu.degree());
        let extra = rng.gen_range(0..=2u32);
        let (s_b, d_b) = if extra == 0 {
            (s_mu, d_mu + rng.gen_range(0..=3u32))
        } else {
            let s = s_mu + extra;
            (s, s.max(d_mu) + rng.gen_range(0..=3u32))
        };
        let b = random_homogeneous(&mut rng, s_b, d_b, false);
        let a = {
            let s = rng.gen_range(1..=2u32);
            let d = s + rng.gen_range(0..=3u32);
            random_homogeneous(&mut rng, s, d, false)
        };
        let lhs = (&a * &b).transduce(&mu);
        let rhs = &a * &b.transduce(&mu);
        if lhs != rhs {
            return Err(format!(
                "round {round}: (a b)* = {lhs} but a b* = {rhs} for mu = {mu}"
            ));
        }
    }
    Ok(())
}

/// Builds vanishing sums `x(yz) + (xy)z = 0` (optionally two of them glued
/// together), resolves them, and re-multiplies the reported dependence.
pub fn check_relations(count: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for round in 0..count {
        let mut pairs: Vec<(Element, Element)> = Vec::new();
        let blocks = 1 + round % 2;
        for _ in 0..blocks {
            let s = rng.gen_range(1..=2u32);
            let d_x = s + rng.gen_range(0..=2u32);
            let x = random_homogeneous(&mut rng, s, d_x, true);
            let d_y = rng.gen_range(1..=3u32);
            let y = random_homogeneous(&mut rng, 1, d_y, true);
            let d_z = rng.gen_range(1..=3u32);
            let z = random_homogeneous(&mut rng, 1, d_z, true);
            pairs.push((x.clone(), &y * &z));
            pairs.push((&x * &y, z));
        }
        // Deterministic shuffle.
        for i in (1..pairs.len()).rev() {
            let j = rng.gen_range(0..=i);
            pairs.swap(i, j);
        }
        let dep = match resolve_relation(&pairs) {
            Ok(dep) => dep,
            Err(e) => return Err(format!("round {round}: resolution failed: {e}")),
        };
        let mut recovered = Element::zero();
        for (i, cof) in &dep.cofactors {
            recovered += &pairs[*i].0 * cof;
        }
        if recovered != pairs[dep.pivot].0 {
            return Err(format!(
                "round {round}: dependence does not re-multiply to pair {}",
                dep.pivot
            ));
        }
    }
    Ok(())
}

/// The fully annihilated space equals `Δ(k)` whenever `d < 2^{k+2}`.
pub fn check_stabilization(k_max: u32, s_max: u32, d_max: u32, cache: &BasisCache) -> Result<Check> {
    for k in 0..=k_max {
        for s in 0..=s_max {
            for d in 0..=d_max {
                if u64::from(d) >= 1u64 << (k + 2) {
                    continue;
                }
                let full = full_annihilated_basis(s, d);
                let delta = cache.delta_basis(k, s, d)?;
                if full != *delta {
                    return Ok(Err(format!(
                        "fully annihilated space differs from level {k} at ({s},{d})"
                    )));
                }
            }
        }
    }
    Ok(Ok(()))
}

const TRANSDUCTION_PAIRS: usize = 1000;
const RANDOM_SEED: u64 = 0x5eed;

/// Runs one named suite at the given bounds. The action oracle has its own
/// built-in range (`m ≤ 32`, `k ≤ 16`), and the random suites run a fixed
/// number of seeded rounds.
pub fn run_suite(name: &str, s_max: u32, d_max: u32, cache: &BasisCache) -> Result<SuiteOutcome> {
    let check: Check = match name {
        "action-oracle" => check_action_oracle(32, 16),
        "instability" => check_instability(d_max),
        "sq1-differential" => check_sq1_differential(d_max),
        "ker-eq-im" => check_ker_eq_im(s_max, d_max, cache)?,
        "S0" => {
            let report = verify_s0(s_max, d_max, cache)?;
            match report.first_failure() {
                None => Ok(()),
                Some(cell) => Err(format!(
                    "sigma verification failed at ({},{}): {} generators, eta = {}, span {} vs kernel {}",
                    cell.s, cell.d, cell.generator_count, cell.expected_count,
                    cell.span_dim, cell.kernel_dim
                )),
            }
        }
        "recurrence" => check_recurrence(s_max, d_max, cache)?,
        "reduction-formula" => check_reduction_formula(s_max, d_max)?,
        "transduction" => check_transduction(TRANSDUCTION_PAIRS, RANDOM_SEED),
        "adem-spot" => check_adem_spot(d_max),
        other => {
            return Err(Error::InvalidArgument(format!(
                "unknown suite '{other}'; expected one of: {}",
                SUITE_NAMES.join(", ")
            )))
        }
    };
    Ok(SuiteOutcome {
        name: name.to_string(),
        passed: check.is_ok(),
        detail: check.err().unwrap_or_default(),
    })
}

/// Runs every named suite in canonical order.
pub fn run_all(s_max: u32, d_max: u32, cache: &BasisCache) -> Result<Vec<SuiteOutcome>> {
    SUITE_NAMES
        .iter()
        .map(|name| run_suite(name, s_max, d_max, cache))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_at_small_bounds() {
        let cache = BasisCache::in_memory();
        for outcome in run_all(3, 8, &cache).unwrap() {
            assert!(outcome.passed, "{}: {}", outcome.name, outcome.detail);
        }
    }

    #[test]
    fn unknown_suites_are_rejected() {
        let cache = BasisCache::in_memory();
        assert!(run_suite("no-such-suite", 2, 4, &cache).is_err());
    }

    #[test]
    fn relation_rounds_cover_the_four_term_case() {
        assert_eq!(check_relations(10, 7), Ok(()));
    }

    #[test]
    fn stabilization_holds_at_small_bounds() {
        let cache = BasisCache::in_memory();
        assert_eq!(check_stabilization(2, 2, 10, &cache).unwrap(), Ok(()));
    }
}
