//! The partially and fully annihilated subspaces of each bidegree piece.
//!
//! `Δ(k)_{s,d}` is the joint kernel of `Sq¹, Sq², Sq⁴, …, Sq^{2^k}` on the
//! bidegree-`(s, d)` piece. Instability makes the computation finite: a
//! square of degree more than `d/2` acts as zero there, so the fully
//! annihilated space (killed by every positive square) is the joint kernel
//! of `Sqʲ` for `j ≤ d/2`, and since the squares of 2-power degree generate
//! all of them under composition, intersecting over `j = 2^i ≤ d/2` gives
//! the same space. [`full_annihilated_basis`] computes both and insists
//! they agree. In particular `Δ(k)_{s,d}` already equals the fully
//! annihilated space once `d < 2^{k+2}`.
//!
//! [`BasisCache`] memoizes the `Δ(k)` bases per `(k, s, d)`, optionally
//! persisted as one JSON document per bidegree in the shared element
//! syntax.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

use crate::algebra::{monomial_basis, Bidegree};
use crate::gf2::MatrixGf2;
use crate::steenrod::sq_matrix;
use crate::subspace::SubspaceBasis;
use crate::text::parse_element;
use crate::{Error, Result};

/// Bumped whenever the cache document layout or the basis conventions
/// change; files written with another version are recomputed.
pub const CACHE_FORMAT_VERSION: u32 = 1;

/// Joint kernel of the squares `Sqʲ` for `j` in `squares`, inside `(s, d)`.
/// Squares with `2j > d` act as zero and may simply be omitted by the
/// caller.
fn kernel_of_squares(s: u32, d: u32, squares: &[u32]) -> SubspaceBasis {
    let ambient = Bidegree::new(s, d);
    let basis = monomial_basis(s, d);
    if basis.is_empty() {
        return SubspaceBasis::empty(ambient);
    }
    if squares.is_empty() {
        return SubspaceBasis::full(ambient);
    }
    // Row convention: x ↦ x·M, so the kernel of the map is the column
    // kernel of the transpose. One stacked elimination handles the whole
    // intersection.
    let transposed: Vec<MatrixGf2> = squares
        .iter()
        .map(|&j| sq_matrix(s, d, j).transpose())
        .collect();
    let refs: Vec<&MatrixGf2> = transposed.iter().collect();
    let stacked = MatrixGf2::stack(&refs);
    let kernel = stacked.kernel();
    let rows = kernel.rows();
    SubspaceBasis::from_canonical_matrix(ambient, &kernel, rows, &basis)
}

fn compute_delta_basis(k: u32, s: u32, d: u32) -> SubspaceBasis {
    assert!(k <= 30, "delta level {k} out of range");
    let mut squares = Vec::new();
    for i in 0..=k {
        let q = 1u32 << i;
        if 2 * q > d {
            break;
        }
        squares.push(q);
    }
    kernel_of_squares(s, d, &squares)
}

/// Canonical basis of the image of `Sq¹ : (s, d+1) → (s, d)`. The identity
/// `ker Sq¹ = im Sq¹` needs `s ≥ 1`, so length zero is rejected.
pub fn image_sq1_basis(s: u32, d: u32) -> Result<SubspaceBasis> {
    if s == 0 {
        return Err(Error::InvalidArgument(
            "the image of Sq1 is only taken for length s >= 1".into(),
        ));
    }
    let ambient = Bidegree::new(s, d);
    let basis = monomial_basis(s, d);
    // Rows span the image under the row convention.
    let (rref, rank) = sq_matrix(s, d + 1, 1).rref();
    Ok(SubspaceBasis::from_canonical_matrix(
        ambient, &rref, rank, &basis,
    ))
}

/// Canonical basis of the fully annihilated part of `(s, d)`: elements
/// killed by every `Sqʲ`, `j > 0`. Computed twice, over all `j ≤ d/2` and
/// over the 2-power degrees only, and the two answers are required to
/// agree.
pub fn full_annihilated_basis(s: u32, d: u32) -> SubspaceBasis {
    let all: Vec<u32> = (1..=d / 2).collect();
    let powers: Vec<u32> = std::iter::successors(Some(1u32), |q| q.checked_mul(2))
        .take_while(|&q| 2 * q <= d)
        .collect();
    let via_all = kernel_of_squares(s, d, &all);
    let via_powers = kernel_of_squares(s, d, &powers);
    assert_eq!(
        via_all, via_powers,
        "2-power squares must cut out the fully annihilated space at ({s},{d})"
    );
    via_all
}

#[derive(Serialize, Deserialize)]
struct CacheDocument {
    format_version: u32,
    k: u32,
    s: u32,
    d: u32,
    vectors: Vec<String>,
}

/// Memoized `Δ(k)` bases, keyed by `(k, s, d)`.
///
/// Reads are concurrent; insertion takes the write lock briefly. With a
/// cache directory configured, each basis is persisted as one JSON document
/// and picked up again on later runs; documents with a stale format version
/// or mismatched key are recomputed and rewritten.
pub struct BasisCache {
    dir: Option<PathBuf>,
    mem: RwLock<HashMap<(u32, u32, u32), Arc<SubspaceBasis>>>,
}

impl BasisCache {
    /// A purely in-memory cache.
    pub fn in_memory() -> Self {
        BasisCache {
            dir: None,
            mem: RwLock::new(HashMap::new()),
        }
    }

    /// A cache persisted under `dir`, created on first write.
    pub fn with_dir(dir: impl Into<PathBuf>) -> Self {
        BasisCache {
            dir: Some(dir.into()),
            mem: RwLock::new(HashMap::new()),
        }
    }

    fn file_path(dir: &Path, k: u32, s: u32, d: u32) -> PathBuf {
        dir.join(format!("delta_k{k}_s{s}_d{d}.json"))
    }

    fn load_from_disk(&self, k: u32, s: u32, d: u32) -> Option<SubspaceBasis> {
        let dir = self.dir.as_ref()?;
        let text = std::fs::read_to_string(Self::file_path(dir, k, s, d)).ok()?;
        let doc: CacheDocument = serde_json::from_str(&text).ok()?;
        if doc.format_version != CACHE_FORMAT_VERSION || (doc.k, doc.s, doc.d) != (k, s, d) {
            return None;
        }
        let ambient = Bidegree::new(s, d);
        let mut vectors = Vec::with_capacity(doc.vectors.len());
        for v in &doc.vectors {
            vectors.push(parse_element(v).ok()?);
        }
        SubspaceBasis::from_spanning(ambient, &vectors).ok()
    }

    fn store_to_disk(&self, k: u32, s: u32, d: u32, basis: &SubspaceBasis) -> Result<()> {
        let Some(dir) = self.dir.as_ref() else {
            return Ok(());
        };
        std::fs::create_dir_all(dir)?;
        let doc = CacheDocument {
            format_version: CACHE_FORMAT_VERSION,
            k,
            s,
            d,
            vectors: basis.vectors().iter().map(|v| v.to_string()).collect(),
        };
        let body = serde_json::to_string(&doc).expect("cache document serializes");
        let path = Self::file_path(dir, k, s, d);
        let tmp = dir.join(format!(
            "delta_k{k}_s{s}_d{d}.json.tmp.{}",
            std::process::id()
        ));
        std::fs::write(&tmp, body)?;
        std::fs::rename(&tmp, &path)?;
        Ok(())
    }

    /// The canonical basis of `Δ(k)_{s,d}`, computed at most once per key.
    pub fn delta_basis(&self, k: u32, s: u32, d: u32) -> Result<Arc<SubspaceBasis>> {
        if let Some(hit) = self.mem.read().expect("cache lock").get(&(k, s, d)) {
            return Ok(Arc::clone(hit));
        }
        let basis = match self.load_from_disk(k, s, d) {
            Some(basis) => basis,
            None => {
                let basis = compute_delta_basis(k, s, d);
                self.store_to_disk(k, s, d, &basis)?;
                basis
            }
        };
        let arc = Arc::new(basis);
        let mut guard = self.mem.write().expect("cache lock");
        let entry = guard.entry((k, s, d)).or_insert_with(|| Arc::clone(&arc));
        Ok(Arc::clone(entry))
    }

    pub fn delta_dim(&self, k: u32, s: u32, d: u32) -> Result<usize> {
        Ok(self.delta_basis(k, s, d)?.dim())
    }
}
