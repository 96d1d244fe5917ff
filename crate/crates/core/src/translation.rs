//! Translation matrices of full sectional slices, computed by symbolic
//! back-substitution through the meshes, plus the negative-unit scan used by
//! the Dynkin finiteness argument.

use crate::arquiver::{TranslationQuiver, Vertex};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use num_bigint::BigInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Express dim tau(X_j) in the slice basis.
    Left,
    /// Express dim tau^{-1}(X_j) in the slice basis (cotranslation matrix).
    Right,
}

/// Translation matrix of a slice: column j holds the coefficients of
/// dim tau(X_j) in the basis x_1..x_n given by `sigma`'s order.
///
/// Every predecessor of a slice vertex must be either a slice vertex or the
/// translate of one; otherwise the slice is not closed and the computation
/// fails. Back-substitution resolves translates in dependency order.
pub fn translation_matrix(
    window: &TranslationQuiver,
    sigma: &[String],
    direction: Direction,
) -> Result<IntMatrix> {
    match direction {
        Direction::Left => translation_matrix_left(window, sigma),
        Direction::Right => {
            let reversed = window.reversed();
            translation_matrix_left(&reversed, sigma)
        }
    }
}

fn translation_matrix_left(window: &TranslationQuiver, sigma: &[String]) -> Result<IntMatrix> {
    let n = sigma.len();
    let idx: Vec<usize> = sigma
        .iter()
        .map(|id| {
            window
                .vertex_idx(id)
                .ok_or_else(|| Error::UnknownVertex(id.clone()))
        })
        .collect::<Result<_>>()?;
    let pos_of = |v: usize| idx.iter().position(|&w| w == v);

    for (j, &v) in idx.iter().enumerate() {
        if window.tau(v).is_none() || !window.vertex(v).mesh_complete {
            return Err(Error::NotAClosedSlice(format!(
                "mesh of `{}` is not complete in the window",
                sigma[j]
            )));
        }
    }

    // resolved[j] = coefficients of dim tau(X_j) in the slice basis
    let mut resolved: Vec<Option<Vec<BigInt>>> = vec![None; n];
    let mut progress = true;
    while progress {
        progress = false;
        'next: for j in 0..n {
            if resolved[j].is_some() {
                continue;
            }
            let v = idx[j];
            let mut coeffs = vec![BigInt::from(0); n];
            // dim tau(X_j) = sum of middle terms - dim X_j
            coeffs[j] -= 1;
            for (p, val) in window.predecessors(v) {
                if let Some(k) = pos_of(p) {
                    coeffs[k] += BigInt::from(val);
                } else if let Some(w) = window.tau_inv(p) {
                    if let Some(k) = pos_of(w) {
                        match &resolved[k] {
                            Some(inner) => {
                                for (c, a) in coeffs.iter_mut().zip(inner.iter()) {
                                    *c += BigInt::from(val) * a;
                                }
                            }
                            None => continue 'next, // dependency not ready yet
                        }
                    } else {
                        return Err(Error::NotAClosedSlice(format!(
                            "predecessor `{}` of `{}` is neither in the slice nor a translate of it",
                            window.vertex(p).id,
                            sigma[j]
                        )));
                    }
                } else {
                    return Err(Error::NotAClosedSlice(format!(
                        "predecessor `{}` of `{}` is neither in the slice nor a translate of it",
                        window.vertex(p).id,
                        sigma[j]
                    )));
                }
            }
            resolved[j] = Some(coeffs);
            progress = true;
        }
    }
    if let Some(j) = resolved.iter().position(Option::is_none) {
        return Err(Error::NotAClosedSlice(format!(
            "circular mesh dependency at `{}`",
            sigma[j]
        )));
    }
    let mut m = IntMatrix::zero(n, n);
    for (j, coeffs) in resolved.into_iter().enumerate() {
        for (i, c) in coeffs.unwrap().into_iter().enumerate() {
            m.set(i, j, c);
        }
    }
    Ok(m)
}

/// First (k <= k_max, j, l) with M^k e_j = -e_l, scanning k ascending then
/// columns, or None. Default cap covers the worked identities with margin.
pub const DEFAULT_NEGATIVE_UNIT_CAP: u64 = 60;

pub fn check_no_negative_unit(m: &IntMatrix, k_max: u64) -> Option<(u64, usize, usize)> {
    let n = m.rows();
    let mut power = IntMatrix::identity(n);
    for k in 1..=k_max {
        power = power.checked_mul(m).expect("square");
        for j in 0..n {
            if let Some(l) = power.col_is_neg_unit(j) {
                return Some((k, j, l));
            }
        }
    }
    None
}

/// Arrow of a slice presentation, with valuation.
pub type SliceArrow = (usize, usize, u32);

/// Build the two-row window `tau(Sigma) -> Sigma` of a slice. `arrows` are
/// index pairs into `names` with valuations. The resulting window has every
/// slice mesh complete, so `translation_matrix` applies directly.
pub fn slice_window(names: &[&str], arrows: &[SliceArrow]) -> TranslationQuiver {
    let mut tq = TranslationQuiver::new();
    for name in names {
        let mut v = Vertex::new(format!("t_{name}"), format!("t{name}"));
        v.mesh_complete = false;
        tq.add_vertex(v).unwrap();
    }
    for name in names {
        tq.add_vertex(Vertex::new(name.to_string(), name.to_string()))
            .unwrap();
    }
    let n = names.len();
    for &(src, dst, val) in arrows {
        // slice arrows, their tau-translates, and the mesh arrows
        tq.add_arrow_idx(n + src, n + dst, val);
        tq.add_arrow_idx(src, dst, val);
        tq.add_arrow_idx(dst, n + src, val);
    }
    for j in 0..n {
        tq.set_tau_idx(n + j, j).unwrap();
    }
    tq
}

/// Slice names for the A_n orbit-graph slice: a chain X_n -> ... -> X_1.
pub fn a_family_slice(n: usize) -> (Vec<String>, Vec<SliceArrow>) {
    assert!(n >= 1);
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let arrows: Vec<SliceArrow> = (1..n).map(|i| (i, i - 1, 1)).collect();
    (names, arrows)
}

/// D_n slice: chain X_{n-2} -> ... -> X_1 with X_1 -> X_{n-1}, X_1 -> X_n.
pub fn d_family_slice(n: usize) -> (Vec<String>, Vec<SliceArrow>) {
    assert!(n >= 4);
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let mut arrows: Vec<SliceArrow> = (1..n - 2).map(|i| (i, i - 1, 1)).collect();
    arrows.push((0, n - 2, 1));
    arrows.push((0, n - 1, 1));
    (names, arrows)
}

/// E_n slice (n = 6, 7, 8): chain X_{n-3} -> ... -> X_1 with
/// X_1 -> X_{n-1} -> X_n and the pendant X_1 -> X_{n-2}.
pub fn e_family_slice(n: usize) -> (Vec<String>, Vec<SliceArrow>) {
    assert!((6..=8).contains(&n));
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let mut arrows: Vec<SliceArrow> = (1..n - 3).map(|i| (i, i - 1, 1)).collect();
    arrows.push((0, n - 2, 1));
    arrows.push((0, n - 3, 1));
    arrows.push((n - 2, n - 1, 1));
    (names, arrows)
}

/// Translation matrix of a generated family slice.
pub fn family_translation_matrix(slice: (Vec<String>, Vec<SliceArrow>)) -> IntMatrix {
    let (names, arrows) = slice;
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let window = slice_window(&refs, &arrows);
    translation_matrix(&window, &names, Direction::Left).expect("family slices are closed")
}

/// The hand-checked translation matrices of the orbit-graph theorem.
pub fn expected_a_matrix(n: usize) -> IntMatrix {
    IntMatrix::from_fn(n, n, |i, j| {
        if i == 0 {
            -1
        } else if i == j + 1 {
            1
        } else {
            0
        }
    })
}

pub fn expected_d_matrix(n: usize) -> IntMatrix {
    IntMatrix::from_fn(n, n, |i, j| {
        if i == 0 {
            1
        } else if i < n - 2 {
            i64::from(i == j + 1)
        } else if i == n - 2 {
            if j == n - 1 {
                0
            } else {
                -1
            }
        } else if j == n - 2 {
            0
        } else {
            -1
        }
    })
}

pub fn expected_e_matrix(n: usize) -> IntMatrix {
    IntMatrix::from_fn(n, n, |i, j| {
        if i == 0 {
            i64::from(j <= n - 2)
        } else if i < n - 3 {
            i64::from(i == j + 1)
        } else if i == n - 3 {
            if j <= n - 3 {
                -1
            } else {
                0
            }
        } else if i == n - 2 {
            i64::from(j == n - 1)
        } else if j == n - 3 {
            0
        } else {
            -1
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_family_matrices_match_display() {
        for n in 2..=8 {
            let m = family_translation_matrix(a_family_slice(n));
            assert_eq!(m, expected_a_matrix(n), "A slice n={n}");
        }
    }

    #[test]
    fn d_family_matrices_match_display() {
        for n in 4..=8 {
            let m = family_translation_matrix(d_family_slice(n));
            assert_eq!(m, expected_d_matrix(n), "D slice n={n}");
        }
    }

    #[test]
    fn e_family_matrices_match_display() {
        let expected6 = IntMatrix::from_rows(&[
            vec![1, 1, 1, 1, 1, 0],
            vec![1, 0, 0, 0, 0, 0],
            vec![0, 1, 0, 0, 0, 0],
            vec![-1, -1, -1, -1, 0, 0],
            vec![0, 0, 0, 0, 0, 1],
            vec![-1, -1, -1, 0, -1, -1],
        ]);
        assert_eq!(family_translation_matrix(e_family_slice(6)), expected6);
        assert_eq!(expected_e_matrix(6), expected6);

        let expected7 = IntMatrix::from_rows(&[
            vec![1, 1, 1, 1, 1, 1, 0],
            vec![1, 0, 0, 0, 0, 0, 0],
            vec![0, 1, 0, 0, 0, 0, 0],
            vec![0, 0, 1, 0, 0, 0, 0],
            vec![-1, -1, -1, -1, -1, 0, 0],
            vec![0, 0, 0, 0, 0, 0, 1],
            vec![-1, -1, -1, -1, 0, -1, -1],
        ]);
        assert_eq!(family_translation_matrix(e_family_slice(7)), expected7);
        assert_eq!(expected_e_matrix(7), expected7);

        let expected8 = IntMatrix::from_rows(&[
            vec![1, 1, 1, 1, 1, 1, 1, 0],
            vec![1, 0, 0, 0, 0, 0, 0, 0],
            vec![0, 1, 0, 0, 0, 0, 0, 0],
            vec![0, 0, 1, 0, 0, 0, 0, 0],
            vec![0, 0, 0, 1, 0, 0, 0, 0],
            vec![-1, -1, -1, -1, -1, -1, 0, 0],
            vec![0, 0, 0, 0, 0, 0, 0, 1],
            vec![-1, -1, -1, -1, -1, 0, -1, -1],
        ]);
        assert_eq!(family_translation_matrix(e_family_slice(8)), expected8);
        assert_eq!(expected_e_matrix(8), expected8);
    }

    #[test]
    fn worked_six_vertex_example() {
        // the double-arrowed star slice and its displayed matrix
        let names = vec![
            "x1".to_string(),
            "x2".into(),
            "x3".into(),
            "x4".into(),
            "x5".into(),
            "x6".into(),
        ];
        let arrows: Vec<SliceArrow> = vec![(1, 0, 2), (1, 2, 1), (3, 2, 1), (4, 2, 1), (2, 5, 1)];
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let window = slice_window(&refs, &arrows);
        let m = translation_matrix(&window, &names, Direction::Left).unwrap();
        let expected = IntMatrix::from_rows(&[
            vec![-1, -2, 0, 0, 0, 0],
            vec![2, 4, 1, 1, 1, 0],
            vec![0, 0, 0, 0, 0, 1],
            vec![0, 1, 1, 0, 1, 0],
            vec![0, 1, 1, 1, 0, 0],
            vec![0, -1, -1, -1, -1, -1],
        ]);
        assert_eq!(m, expected);
    }

    #[test]
    fn worked_example_from_knitted_component() {
        // knit the component leftward from the injectives, take the slice of
        // their translates, and recover the displayed matrix end to end
        use crate::knitting::{knit_hereditary, KnitDirection};
        let q = crate::quiver::parse_quiver(crate::fixtures::WORKED_SLICE_QV).unwrap();
        let window = knit_hereditary(&q, KnitDirection::LeftFromInjectives, 24).unwrap();
        let inj_ids = ["P_e1", "P_e2", "P_e3", "P_e4", "P_e5", "P_e6"];
        let sigma: Vec<String> = inj_ids
            .iter()
            .map(|id| {
                let v = window.vertex_idx(id).unwrap();
                assert!(window.vertex(v).is_ext_injective);
                let t = window.tau(v).expect("translate in window");
                window.vertex(t).id.clone()
            })
            .collect();
        let m = translation_matrix(&window, &sigma, Direction::Left).unwrap();
        let expected = IntMatrix::from_rows(&[
            vec![-1, -2, 0, 0, 0, 0],
            vec![2, 4, 1, 1, 1, 0],
            vec![0, 0, 0, 0, 0, 1],
            vec![0, 1, 1, 0, 1, 0],
            vec![0, 1, 1, 1, 0, 0],
            vec![0, -1, -1, -1, -1, -1],
        ]);
        assert_eq!(m, expected);
    }

    #[test]
    fn negative_unit_witnesses() {
        let m4 = family_translation_matrix(a_family_slice(4));
        assert_eq!(check_no_negative_unit(&m4, 1), Some((1, 3, 0)));
        let m6 = family_translation_matrix(e_family_slice(6));
        let (k, j, l) = check_no_negative_unit(&m6, 6).unwrap();
        assert!(k <= 6);
        let col = m6.pow(k);
        let mut e = IntMatrix::unit(6, l);
        e = -&e;
        assert_eq!(col.checked_mul(&IntMatrix::unit(6, j)).unwrap(), e);
        // the identity quoted for E6 holds as well
        let p6 = m6.pow(6);
        assert_eq!(
            p6.checked_mul(&IntMatrix::unit(6, 0)).unwrap(),
            -&IntMatrix::unit(6, 0)
        );
        assert_eq!(
            check_no_negative_unit(&IntMatrix::identity(4), DEFAULT_NEGATIVE_UNIT_CAP),
            None
        );
    }

    #[test]
    fn d4_cube_is_minus_identity() {
        let m4 = family_translation_matrix(d_family_slice(4));
        assert_eq!(m4.pow(3), -&IntMatrix::identity(4));
    }

    #[test]
    fn cotranslation_of_reversed_slice() {
        // on the two-row window, the cotranslation matrix of the reversed
        // window expresses the same data from the other side
        let (names, arrows) = a_family_slice(3);
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let window = slice_window(&refs, &arrows);
        let tau_names: Vec<String> = names.iter().map(|n| format!("t_{n}")).collect();
        let m = translation_matrix(&window, &tau_names, Direction::Right).unwrap();
        // tau^{-1}(t_xj) = xj: coefficients in the t-basis follow the meshes
        assert_eq!(m.rows(), 3);
        let left = translation_matrix(&window, &names, Direction::Left).unwrap();
        assert_eq!(&left * &m, IntMatrix::identity(3));
    }
}
