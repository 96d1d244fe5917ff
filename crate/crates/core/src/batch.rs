//! Data-parallel drivers for the embarrassingly parallel sweeps: batch
//! classification and validation, the Coxeter consistency sweep, the matrix
//! identity suite, and the tube round-trip grid.
//!
//! Every driver takes an [`ExecMode`]; with the `parallel` feature enabled
//! the parallel mode fans out over rayon, otherwise it falls back to the
//! sequential path. Results are bit-identical between the two modes.

use crate::arquiver::{validate, TranslationQuiver, ValidationReport};
use crate::coxeter::{coxeter, inverse_coxeter_combinatorial};
use crate::diagram::{classify, DiagramType, UndirectedGraph};
use crate::error::Result;
use crate::matrix::IntMatrix;
use crate::rng::{random_acyclic_quiver, SplitMix64};
use crate::translation::{
    a_family_slice, d_family_slice, e_family_slice, family_translation_matrix,
};
use crate::tubes::{coray_insertion, recognize_tube, stable_tube, TubeParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExecMode {
    Sequential,
    /// Rayon-backed when the `parallel` feature is on; otherwise identical
    /// to the sequential path.
    Parallel,
}

impl Default for ExecMode {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            ExecMode::Parallel
        } else {
            ExecMode::Sequential
        }
    }
}

/// Order-preserving map over a slice, parallel when requested and available.
pub fn map_items<T: Sync, U: Send>(
    mode: ExecMode,
    items: &[T],
    f: impl Fn(&T) -> U + Sync + Send,
) -> Vec<U> {
    match mode {
        ExecMode::Sequential => items.iter().map(f).collect(),
        ExecMode::Parallel => {
            #[cfg(feature = "parallel")]
            {
                use rayon::prelude::*;
                items.par_iter().map(f).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                items.iter().map(f).collect()
            }
        }
    }
}

pub fn classify_many(graphs: &[UndirectedGraph], mode: ExecMode) -> Vec<DiagramType> {
    map_items(mode, graphs, classify)
}

pub fn validate_many(windows: &[TranslationQuiver], mode: ExecMode) -> Vec<ValidationReport> {
    map_items(mode, windows, validate)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterSweepReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

/// Seeded sweep: for random acyclic loop-free quivers the combinatorial
/// inverse must equal the algebraic one and C * C^{-1} must be the identity.
pub fn coxeter_consistency_sweep(
    seed: u64,
    count: usize,
    max_vertices: usize,
    mode: ExecMode,
) -> CoxeterSweepReport {
    let mut rng = SplitMix64::new(seed);
    let quivers: Vec<_> = (0..count)
        .map(|_| random_acyclic_quiver(&mut rng, max_vertices))
        .collect();
    let outcomes = map_items(mode, &quivers, |q| -> Result<()> {
        let pair = coxeter(q)?;
        let comb = inverse_coxeter_combinatorial(q)?;
        if comb != pair.c_inv {
            return Err(crate::error::Error::Precondition(
                "combinatorial inverse differs".into(),
            ));
        }
        let n = q.vertex_count();
        if pair.c.checked_mul(&pair.c_inv)? != IntMatrix::identity(n) {
            return Err(crate::error::Error::Precondition(
                "C * C^{-1} is not the identity".into(),
            ));
        }
        Ok(())
    });
    let failures = outcomes
        .into_iter()
        .enumerate()
        .filter_map(|(i, r)| r.err().map(|e| format!("quiver {i}: {e}")))
        .collect();
    CoxeterSweepReport {
        checked: count,
        failures,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub pass: bool,
}

/// The translation-matrix identity suite, exact integer arithmetic.
pub fn identity_suite(mode: ExecMode) -> Vec<IdentityCheck> {
    let mut jobs: Vec<(String, Box<dyn Fn() -> bool + Send + Sync>)> = Vec::new();
    for n in 2..=8usize {
        jobs.push((
            format!("M_{n} * e_{n} = -e_1 (A family)"),
            Box::new(move || {
                let m = family_translation_matrix(a_family_slice(n));
                let prod = m.checked_mul(&IntMatrix::unit(n, n - 1)).unwrap();
                prod == -&IntMatrix::unit(n, 0)
            }),
        ));
    }
    for n in [4usize, 6, 8] {
        jobs.push((
            format!("M_{n}^{} = -Id (D family, even)", n - 1),
            Box::new(move || {
                let m = family_translation_matrix(d_family_slice(n));
                m.pow((n - 1) as u64) == -&IntMatrix::identity(n)
            }),
        ));
    }
    for n in [5usize, 7] {
        jobs.push((
            format!("M_{n}^{} = signed swap (D family, odd)", n - 1),
            Box::new(move || {
                let m = family_translation_matrix(d_family_slice(n));
                let p = m.pow((n - 1) as u64);
                let expected = IntMatrix::from_fn(n, n, |i, j| {
                    if i < n - 2 {
                        if i == j {
                            -1
                        } else {
                            0
                        }
                    } else if i == n - 2 {
                        if j == n - 1 {
                            -1
                        } else {
                            0
                        }
                    } else if j == n - 2 {
                        -1
                    } else {
                        0
                    }
                });
                p == expected
            }),
        ));
    }
    jobs.push((
        "M_6^6 * e_1 = -e_1 (E6)".into(),
        Box::new(|| {
            let m = family_translation_matrix(e_family_slice(6));
            m.pow(6).checked_mul(&IntMatrix::unit(6, 0)).unwrap() == -&IntMatrix::unit(6, 0)
        }),
    ));
    jobs.push((
        "M_7^9 = -Id (E7)".into(),
        Box::new(|| {
            let m = family_translation_matrix(e_family_slice(7));
            m.pow(9) == -&IntMatrix::identity(7)
        }),
    ));
    jobs.push((
        "M_8^15 = -Id (E8)".into(),
        Box::new(|| {
            let m = family_translation_matrix(e_family_slice(8));
            m.pow(15) == -&IntMatrix::identity(8)
        }),
    ));
    map_items(mode, &jobs, |(name, f)| IdentityCheck {
        name: name.clone(),
        pass: f(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TubeRoundTrip {
    pub rank: usize,
    pub insertion: usize,
    pub recovered: Option<TubeParams>,
    pub pass: bool,
}

/// Insert-and-recognize across a parameter grid.
pub fn tube_roundtrip_grid(
    ranks: std::ops::RangeInclusive<usize>,
    insertions: std::ops::RangeInclusive<usize>,
    height_of: impl Fn(usize) -> usize,
    mode: ExecMode,
) -> Vec<TubeRoundTrip> {
    let cases: Vec<(usize, usize, usize)> = ranks
        .flat_map(|r| insertions.clone().map(move |n| (r, n)))
        .map(|(r, n)| (r, n, height_of(n)))
        .collect();
    map_items(mode, &cases, |&(rank, insertion, height)| {
        let tube = stable_tube(rank, height);
        let mouth = tube.vertex(0).id.clone();
        let recovered = coray_insertion(&tube, &mouth, insertion)
            .ok()
            .and_then(|w| recognize_tube(&w));
        let pass = recovered
            .as_ref()
            .map(|p| p.rank == rank && p.insertions == vec![insertion])
            .unwrap_or(false);
        TubeRoundTrip {
            rank,
            insertion,
            recovered,
            pass,
        }
    })
}

/// Matrix power via repeated squaring where the squarings run through the
/// mode-aware multiply. Bit-identical to `IntMatrix::pow`.
pub fn pow_with_mode(m: &IntMatrix, k: u64, mode: ExecMode) -> IntMatrix {
    let n = m.rows();
    let mut result = IntMatrix::identity(n);
    let mut base = m.clone();
    let mut e = k;
    while e > 0 {
        if e & 1 == 1 {
            result = mul_with_mode(&result, &base, mode);
        }
        e >>= 1;
        if e > 0 {
            base = mul_with_mode(&base, &base, mode);
        }
    }
    result
}

/// Row-parallel exact multiply.
pub fn mul_with_mode(a: &IntMatrix, b: &IntMatrix, mode: ExecMode) -> IntMatrix {
    assert_eq!(a.cols(), b.rows());
    let rows: Vec<usize> = (0..a.rows()).collect();
    let data = map_items(mode, &rows, |&i| {
        let mut row = Vec::with_capacity(b.cols());
        for j in 0..b.cols() {
            let mut acc = num_bigint::BigInt::from(0);
            for k in 0..a.cols() {
                acc += a.get(i, k) * b.get(k, j);
            }
            row.push(acc);
        }
        row
    });
    let mut out = IntMatrix::zero(a.rows(), b.cols());
    for (i, row) in data.into_iter().enumerate() {
        for (j, v) in row.into_iter().enumerate() {
            out.set(i, j, v);
        }
    }
    out
}
