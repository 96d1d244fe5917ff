//! Coxeter matrices of acyclic quivers, their combinatorial inverses,
//! defect data for Euclidean quivers, and the translate-versus-Coxeter
//! residual on sectional slices.

use crate::arquiver::TranslationQuiver;
use crate::diagram::{cartan, classify};
use crate::error::{Error, Result};
use crate::matrix::{primitive_integer_vector, IntMatrix};
use crate::quiver::Quiver;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Coxeter matrix pair of an acyclic loop-free quiver: C with C i_j = -p_j
/// and its inverse with C^{-1} p_j = -i_j, where p_j and i_j are the
/// path-count dimension vectors of the projectives and injectives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterPair {
    pub c: IntMatrix,
    pub c_inv: IntMatrix,
}

pub fn coxeter(q: &Quiver) -> Result<CoxeterPair> {
    if q.has_loop() {
        return Err(Error::LoopPresent);
    }
    let counts = q.path_counts()?; // errors on cycles
    let n = q.vertex_count();
    // column j of P = dim of the projective at j = paths starting at j;
    // column j of I = paths ending at j
    let p = IntMatrix::from_fn(n, n, |i, j| counts[j][i] as i64);
    let i = IntMatrix::from_fn(n, n, |row, j| counts[row][j] as i64);
    // C * I = -P and C^{-1} * P = -I; both inverses are integral because the
    // path-count matrices are unitriangular in a topological order.
    let i_inv = i.int_inverse()?;
    let p_inv = p.int_inverse()?;
    let c = (-&p).checked_mul(&i_inv)?;
    let c_inv = (-&i).checked_mul(&p_inv)?;
    debug_assert_eq!(c.checked_mul(&c_inv)?, IntMatrix::identity(n));
    Ok(CoxeterPair { c, c_inv })
}

/// Entry-by-entry path-counting construction of C^{-1}:
/// c_ij = -#paths(e_i -> e_j) + sum over arrows e_j -> e_k of #paths(e_i -> e_k).
pub fn inverse_coxeter_combinatorial(q: &Quiver) -> Result<IntMatrix> {
    if q.has_loop() {
        return Err(Error::LoopPresent);
    }
    let counts = q.path_counts()?;
    let n = q.vertex_count();
    let mut m = IntMatrix::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            let mut entry = -(counts[i][j] as i64);
            for a in &q.arrows {
                if a.source == j {
                    entry += counts[i][a.target] as i64;
                }
            }
            m.set(i, j, BigInt::from(entry));
        }
    }
    Ok(m)
}

/// Dual combinatorial construction of C itself:
/// d_ij = -#paths(e_j -> e_i) + sum over arrows e_k -> e_j of #paths(e_k -> e_i).
pub fn coxeter_combinatorial(q: &Quiver) -> Result<IntMatrix> {
    if q.has_loop() {
        return Err(Error::LoopPresent);
    }
    let counts = q.path_counts()?;
    let n = q.vertex_count();
    let mut m = IntMatrix::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            let mut entry = -(counts[j][i] as i64);
            for a in &q.arrows {
                if a.target == j {
                    entry += counts[a.source][i] as i64;
                }
            }
            m.set(i, j, BigInt::from(entry));
        }
    }
    Ok(m)
}

/// Defect data of a Euclidean quiver: the minimal exponent d with
/// C^{-d} x - x = del(x) h for all x, the positive primitive radical
/// generator h, and the defect functional del as a row vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefectData {
    pub d: u32,
    pub h: Vec<BigInt>,
    pub del: Vec<BigInt>,
    pub coxeter: CoxeterPair,
}

pub const DEFECT_EXPONENT_CAP: u32 = 64;

pub fn defect(q: &Quiver) -> Result<DefectData> {
    let underlying = q.underlying_graph();
    let ty = classify(&underlying);
    if !ty.family.is_euclidean() {
        return Err(Error::NotEuclidean(format!(
            "underlying graph classifies as {}",
            ty.family
        )));
    }
    let pair = coxeter(q)?;
    let n = q.vertex_count();
    let ns = cartan(&underlying).to_rational().null_space();
    if ns.len() != 1 {
        return Err(Error::NotEuclidean("radical is not one-dimensional".into()));
    }
    let h = primitive_integer_vector(&ns[0]);
    if h.iter().any(|x| !x.is_positive()) {
        return Err(Error::NotEuclidean(
            "radical generator is not positive".into(),
        ));
    }
    let mut power = IntMatrix::identity(n);
    for d in 1..=DEFECT_EXPONENT_CAP {
        power = power.checked_mul(&pair.c_inv)?;
        let diff = &power - &IntMatrix::identity(n);
        if let Some(del) = factor_through_radical(&diff, &h) {
            let data = DefectData {
                d,
                h,
                del,
                coxeter: pair,
            };
            debug_assert!(defect_identity_holds(&data, n));
            return Ok(data);
        }
    }
    Err(Error::DefectNotFound(DEFECT_EXPONENT_CAP))
}

/// If every column of `m` is an integer multiple of `h`, return the row
/// vector of multipliers.
fn factor_through_radical(m: &IntMatrix, h: &[BigInt]) -> Option<Vec<BigInt>> {
    let n = h.len();
    let pivot = h.iter().position(|x| !x.is_zero())?;
    let mut del = Vec::with_capacity(n);
    for j in 0..n {
        let lead = m.get(pivot, j);
        let q = lead / &h[pivot];
        if &q * &h[pivot] != *lead {
            return None;
        }
        for i in 0..n {
            if m.get(i, j) != &(&q * &h[i]) {
                return None;
            }
        }
        del.push(q);
    }
    Some(del)
}

fn defect_identity_holds(data: &DefectData, n: usize) -> bool {
    let power = data.coxeter.c_inv.pow(u64::from(data.d));
    for j in 0..n {
        let e = IntMatrix::unit(n, j);
        let lhs = &power.checked_mul(&e).unwrap() - &e;
        for i in 0..n {
            if lhs.get(i, 0) != &(&data.del[j] * &data.h[i]) {
                return false;
            }
        }
    }
    true
}

impl DefectData {
    /// del(x) for a column vector x.
    pub fn del_of(&self, x: &[BigInt]) -> BigInt {
        self.del.iter().zip(x.iter()).map(|(d, v)| d * v).sum()
    }
}

/// tau_Omega(m) - C^{-1} m on a sectional slice of a window.
///
/// `sigma` lists window vertex ids; `m` is the matching length column vector.
/// Preconditions per the supporting theorem: no slice vertex projective, at
/// most one immediate predecessor inside the slice, the one-step mesh of
/// every slice vertex complete, and no multiple arrows inside the slice.
pub fn tau_coxeter_residual(
    window: &TranslationQuiver,
    sigma: &[String],
    m: &[i64],
) -> Result<Vec<BigInt>> {
    if sigma.len() != m.len() {
        return Err(Error::Dimension(format!(
            "{} slice vertices, {} lengths",
            sigma.len(),
            m.len()
        )));
    }
    let idx: Vec<usize> = sigma
        .iter()
        .map(|id| {
            window
                .vertex_idx(id)
                .ok_or_else(|| Error::UnknownVertex(id.clone()))
        })
        .collect::<Result<_>>()?;
    let in_sigma = |v: usize| idx.iter().position(|&w| w == v);

    let mut slice_quiver = Quiver::new();
    for id in sigma {
        slice_quiver.add_vertex(id, id)?;
    }
    for (pos, &v) in idx.iter().enumerate() {
        if window.vertex(v).is_projective {
            return Err(Error::Precondition(format!(
                "slice vertex `{}` is projective",
                sigma[pos]
            )));
        }
        if window.tau(v).is_none() || !window.vertex(v).mesh_complete {
            return Err(Error::Precondition(format!(
                "one-step mesh of slice vertex `{}` is not complete in the window",
                sigma[pos]
            )));
        }
        let mut inner_preds = 0;
        for (p, val) in window.predecessors(v) {
            if let Some(ppos) = in_sigma(p) {
                if val > 1 {
                    return Err(Error::Precondition(
                        "multiple arrows inside the slice".into(),
                    ));
                }
                inner_preds += 1;
                slice_quiver.add_arrow(&format!("a{ppos}_{pos}"), &sigma[ppos], &sigma[pos])?;
            }
        }
        if inner_preds > 1 {
            return Err(Error::Precondition(format!(
                "slice vertex `{}` has more than one immediate predecessor inside the slice",
                sigma[pos]
            )));
        }
    }

    let pair = coxeter(&slice_quiver)?;
    let n = sigma.len();
    let m_vec = IntMatrix::col_vec(m);
    let cm = pair.c_inv.checked_mul(&m_vec)?;
    let mut residual = Vec::with_capacity(n);
    for (pos, &v) in idx.iter().enumerate() {
        let t = window.tau(v).expect("checked above");
        let tau_len = window.vertex(t).jh_length().ok_or_else(|| {
            Error::Precondition(format!(
                "translate of `{}` carries no length data",
                sigma[pos]
            ))
        })?;
        residual.push(BigInt::from(tau_len) - cm.get(pos, 0));
    }
    Ok(residual)
}
