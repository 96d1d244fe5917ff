//! The built-in corpus of worked examples, shipped as interchange documents
//! and quiver presentations. Dimension vectors follow the modules' composition
//! series; every window passes `validate` with no findings (tested below).

use crate::arquiver::{parse_ar_quiver, TranslationQuiver};
use crate::error::{Error, Result};
use crate::quiver::{parse_quiver, Quiver};

/// Linear A3 quiver presentation.
pub const A3_QV: &str = "\
# path algebra of e1 -> e2 -> e3
vertices e1 e2 e3
arrows a:e1->e2 b:e2->e3
";

/// AR quiver of the linear A3 algebra: six vertices, closed component.
pub const A3_AR: &str = "\
arquiver
vertex p3 P3 0,0,1 - PM
vertex p2 P2 0,1,1 - PM
vertex p1 P1 1,1,1 - PIM
vertex s2 S2 0,1,0 - M
vertex i2 I2 1,1,0 - IM
vertex i1 I1 1,0,0 - IM
arrow p3 p2 1
arrow p2 p1 1
arrow p2 s2 1
arrow p1 i2 1
arrow s2 i2 1
arrow i2 i1 1
tau s2 p3
tau i2 p2
tau i1 s2
";

/// One loop on top of an arrow, with the loop squaring to zero.
pub const TWISTED_QV: &str = "\
vertices e1 e2
arrows a:e1->e2 b:e2->e2
relations b*b
";

/// Unrolled AR quiver of the twisted algebra; several isomorphism classes
/// occur at more than one vertex.
pub const TWISTED_AR: &str = "\
arquiver
vertex p1a P1 1,2 - PM
vertex i1a I1 1,0 - IM
vertex p2a P2 0,2 - PM
vertex i2a I2 2,2 - IM
vertex s2a S2 0,1 - -
vertex ya Y 1,2 - M
vertex xa X 1,1 - M
vertex s2b S2 0,1 - M
vertex xb X 1,1 - -
vertex s2c S2 0,1 - M
vertex yb Y 1,2 - M
vertex xc X 1,1 - M
vertex p2b P2 0,2 - PM
vertex i2b I2 2,2 - IM
vertex p1b P1 1,2 - PM
vertex i1b I1 1,0 - IM
arrow p1a i2a 1
arrow p2a p1a 1
arrow p2a ya 1
arrow i2a i1a 1
arrow i2a xa 1
arrow s2a p2a 1
arrow s2a xb 1
arrow ya i2a 1
arrow ya s2c 1
arrow xa yb 1
arrow s2b xc 1
arrow xb ya 1
arrow s2c xa 1
arrow s2c p2b 1
arrow yb s2b 1
arrow yb i2b 1
arrow p2b p1b 1
arrow p2b yb 1
arrow i2b i1b 1
arrow i2b xc 1
arrow p1b i2b 1
tau i1a p1a
tau i2a p2a
tau ya s2a
tau xa ya
tau s2b xa
tau s2c xb
tau yb s2c
tau xc yb
tau i2b p2b
tau i1b p1b
";

/// A four-vertex quasi-hereditary algebra and its standard modules.
pub const STANDARD_QV: &str = "\
vertices e1 e2 e3 e4
arrows f1:e1->e2 g1:e2->e1 f2:e2->e3 g2:e3->e2 f3:e3->e4 g3:e4->e3
relations g1*f1 - f2*g2, g2*f2 - f3*g3, g3*f3, f1*f2, f2*f3, g2*g1, g3*g2
";

/// The full AR quiver of the standard algebra, unrolled so every almost
/// split sequence appears at least once: 22 vertices, 19 distinct labels.
pub const STANDARD_AR: &str = "\
arquiver
vertex p1 P1 2,1,0,0 - PIM
vertex p4 P4 0,0,1,1 - PM
vertex d2 Delta2 1,1,0,0 - M
vertex nb2 Nabla2 1,1,0,0 - M
vertex i4 I4 0,0,1,1 - IM
vertex s3l S3 0,0,1,0 - -
vertex x X 1,1,1,1 - M
vertex s2 S2 0,1,0,0 - M
vertex y Y 1,1,1,1 - M
vertex s3r S3 0,0,1,0 - M
vertex n2l N2 1,1,1,0 - -
vertex m2 M2 1,1,1,0 - M
vertex n3 N3 0,1,1,1 - M
vertex m3 M3 0,1,1,1 - M
vertex n2r N2 1,1,1,0 - M
vertex s1l S1 1,0,0,0 - -
vertex nb3 Nabla3 0,1,1,0 - M
vertex s4 S4 0,0,0,1 - M
vertex d3 Delta3 0,1,1,0 - M
vertex s1r S1 1,0,0,0 - M
vertex p2 P2 1,2,1,0 - PIM
vertex p3 P3 0,1,2,1 - PIM
arrow p1 nb2 1
arrow p4 x 1
arrow d2 s2 1
arrow d2 p1 1
arrow nb2 y 1
arrow i4 s3r 1
arrow s3l m2 1
arrow s3l p4 1
arrow x n3 1
arrow x d2 1
arrow s2 m3 1
arrow s2 nb2 1
arrow y n2r 1
arrow y i4 1
arrow n2l p2 1
arrow n2l s1l 1
arrow n2l s3l 1
arrow m2 nb3 1
arrow m2 x 1
arrow n3 p3 1
arrow n3 s4 1
arrow n3 s2 1
arrow m3 d3 1
arrow m3 y 1
arrow n2r s1r 1
arrow n2r s3r 1
arrow s1l m2 1
arrow nb3 n3 1
arrow s4 m3 1
arrow d3 n2r 1
arrow p2 m2 1
arrow p3 m3 1
tau d2 p4
tau nb2 d2
tau i4 nb2
tau x s3l
tau s2 x
tau y s2
tau s3r y
tau m2 n2l
tau n3 m2
tau m3 n3
tau n2r m3
tau nb3 s1l
tau s4 nb3
tau d3 s4
tau s1r d3
";

/// AR quiver of the standard-filtered subcategory of the standard example.
pub const FDELTA_AR: &str = "\
arquiver
vertex p1 P1 2,1,0,0 - PIM
vertex p4l P4 0,0,1,1 - PM
vertex p4r P4 0,0,1,1 - PM
vertex d2 Delta2 1,1,0,0 - M
vertex n2 N2 1,1,1,0 - M
vertex xl X 1,1,1,1 - -
vertex xr X 1,1,1,1 - M
vertex d3 Delta3 0,1,1,0 - M
vertex s1 S1 1,0,0,0 - IM
vertex p2 P2 1,2,1,0 - PIM
vertex p3 P3 0,1,2,1 - PIM
arrow p1 n2 1
arrow p4l xl 1
arrow p4r xr 1
arrow d2 d3 1
arrow d2 p1 1
arrow n2 p2 1
arrow n2 s1 1
arrow n2 p4r 1
arrow xl p3 1
arrow xl d2 1
arrow d3 n2 1
arrow s1 xr 1
arrow p3 d3 1
arrow p2 xr 1
tau d2 p4l
tau n2 d2
tau xr n2
tau d3 xl
tau s1 d3
";

/// AR quiver of the Ext-orthogonal of T = P1 + P2 + P3 + Delta2.
pub const PERP_T_AR: &str = "\
arquiver
vertex p1l P1 2,1,0,0 - PIM
vertex p1r P1 2,1,0,0 - PIM
vertex p4 P4 0,0,1,1 - PM
vertex d2 Delta2 1,1,0,0 - IM
vertex d3l Delta3 0,1,1,0 - -
vertex d3r Delta3 0,1,1,0 - M
vertex x X 1,1,1,1 - M
vertex p2 P2 1,2,1,0 - PIM
vertex p3 P3 0,1,2,1 - PIM
arrow d2 p1r 1
arrow d2 d3r 1
arrow p4 x 1
arrow d3l p4 1
arrow d3l p2 1
arrow x p3 1
arrow x d2 1
arrow p2 x 1
arrow p3 d3r 1
arrow p1l p2 1
tau d2 p4
tau x d3l
tau d3r x
";

/// AR quiver of the smaller Ext-orthogonal of T' = P1 + P2 + P3 + Delta3.
/// This window is derived from the subcategory's module list, the
/// irreducible morphism P2 -> P3 and mesh additivity.
pub const PERP_T_PRIME_AR: &str = "\
arquiver
vertex p1 P1 2,1,0,0 - PIM
vertex d3l Delta3 0,1,1,0 - -
vertex d3r Delta3 0,1,1,0 - IM
vertex p4 P4 0,0,1,1 - PM
vertex p2 P2 1,2,1,0 - PIM
vertex p3 P3 0,1,2,1 - PIM
arrow d3l p2 1
arrow d3l p4 1
arrow p1 p2 1
arrow p2 p3 1
arrow p4 p3 1
arrow p3 d3r 1
tau d3r p4
";

/// D5 with the subspace-style orientation used for the worked example.
pub const D5_QV: &str = "\
vertices e1 e2 e3 e4 e5
arrows a:e1->e2 b:e2->e3 c:e3->e4 d:e3->e5
";

/// Full AR quiver of the D5 path algebra, 20 vertices. The translation
/// crosses at the fork: tau^3(I4) = P5 and tau^3(I5) = P4, as mesh
/// additivity with the composition series forces.
pub const D5_AR: &str = "\
arquiver
vertex p1 P1 1,1,1,1,1 - PM
vertex p2 P2 0,1,1,1,1 - PM
vertex p3 P3 0,0,1,1,1 - PM
vertex p4 P4 0,0,0,1,0 - PM
vertex p5 P5 0,0,0,0,1 - PM
vertex s3 S3 0,0,1,0,0 - M
vertex t2i2 t2I2 1,1,2,1,1 - M
vertex t2i3 t2I3 0,1,2,1,1 - M
vertex t2i4 t2I4 0,0,1,1,0 - M
vertex t2i5 t2I5 0,0,1,0,1 - M
vertex s2 S2 0,1,0,0,0 - M
vertex ti2 tI2 0,1,1,0,0 - M
vertex ti3 tI3 1,2,2,1,1 - M
vertex ti4 tI4 0,1,1,0,1 - M
vertex ti5 tI5 0,1,1,1,0 - M
vertex i1 I1 1,0,0,0,0 - IM
vertex i2 I2 1,1,0,0,0 - IM
vertex i3 I3 1,1,1,0,0 - IM
vertex i4 I4 1,1,1,1,0 - IM
vertex i5 I5 1,1,1,0,1 - IM
arrow p1 t2i2 1
arrow p2 p1 1
arrow p2 t2i3 1
arrow p3 p2 1
arrow p3 t2i4 1
arrow p3 t2i5 1
arrow p4 p3 1
arrow p5 p3 1
arrow s3 ti2 1
arrow t2i2 s3 1
arrow t2i2 ti3 1
arrow t2i3 t2i2 1
arrow t2i3 ti4 1
arrow t2i3 ti5 1
arrow t2i4 t2i3 1
arrow t2i5 t2i3 1
arrow s2 i2 1
arrow ti2 s2 1
arrow ti2 i3 1
arrow ti3 ti2 1
arrow ti3 i4 1
arrow ti3 i5 1
arrow ti4 ti3 1
arrow ti5 ti3 1
arrow i2 i1 1
arrow i3 i2 1
arrow i4 i3 1
arrow i5 i3 1
tau s3 p1
tau t2i2 p2
tau t2i3 p3
tau t2i4 p5
tau t2i5 p4
tau s2 s3
tau ti2 t2i2
tau ti3 t2i3
tau ti4 t2i4
tau ti5 t2i5
tau i1 s2
tau i2 ti2
tau i3 ti3
tau i4 ti4
tau i5 ti5
";

/// Kronecker quiver presentation, arrows e2 => e1.
pub const KRONECKER_QV: &str = "\
vertices e1 e2
arrows a:e2->e1 b:e2->e1
";

/// The standard-filtered subcategory of the Kronecker algebra: two
/// projective-injective vertices joined by a double arrow, all orbits finite.
pub const KRONECKER_FD_AR: &str = "\
arquiver
vertex p1 P1 1,0 - PIM
vertex p2 P2 2,1 - PIM
arrow p1 p2 2
";

/// add(P1 + I4) inside the standard example: two singleton components.
pub const TWO_SINGLETONS_AR: &str = "\
arquiver
vertex p1 P1 2,1,0,0 - PIM
vertex i4 I4 0,0,1,1 - PIM
";

/// Quiver presentation for the helical example: double arrow then an arrow,
/// with the lower composite zero.
pub const HELICAL_QV: &str = "\
vertices e1 e2 e3
arrows a:e1->e2 b:e1->e2 c:e2->e3
relations b*c
";

/// Window of the coray-tube component of the helical example, the shape of
/// (ZA_inf / tau)[x1, 1]. Labels name the vertices as translates of I3;
/// quasi-lengths serve as one-entry dimension vectors.
pub const HELICAL_AR: &str = "\
arquiver
vertex c1 I3 1 - IM
vertex x1 tI3 1 - M
vertex c2 t2I3 2 - M
vertex x2 t3I3 2 - M
vertex c3 t4I3 3 - M
vertex x3 t5I3 3 - M
vertex c4 t6I3 4 - -
vertex x4 t7I3 4 - -
arrow c1 x1 1
arrow c2 x2 1
arrow c3 x3 1
arrow c4 x4 1
arrow c2 c1 1
arrow c3 c2 1
arrow c4 c3 1
arrow x2 x1 1
arrow x3 x2 1
arrow x4 x3 1
arrow x1 c2 1
arrow x2 c3 1
arrow x3 c4 1
tau c1 x1
tau c2 x2
tau c3 x3
tau c4 x4
tau x1 c2
tau x2 c3
tau x3 c4
";

/// The six-vertex hereditary quiver of the worked translation-matrix
/// example: a double arrow into e2 and a star at e3.
pub const WORKED_SLICE_QV: &str = "\
vertices e1 e2 e3 e4 e5 e6
arrows a:e1->e2 b:e1->e2 c:e6->e3 d:e3->e2 f:e3->e4 g:e3->e5
";

pub const FIXTURE_NAMES: &[&str] = &[
    "a3.qv",
    "a3.ar",
    "twisted.qv",
    "twisted.ar",
    "standard.qv",
    "standard.ar",
    "fdelta.ar",
    "perp-t.ar",
    "perp-t-prime.ar",
    "d5.qv",
    "d5.ar",
    "kronecker.qv",
    "kronecker-fd.ar",
    "two-singletons.ar",
    "helical.qv",
    "helical.ar",
    "worked-slice.qv",
];

pub fn fixture_text(name: &str) -> Result<&'static str> {
    Ok(match name {
        "a3.qv" => A3_QV,
        "a3.ar" => A3_AR,
        "twisted.qv" => TWISTED_QV,
        "twisted.ar" => TWISTED_AR,
        "standard.qv" => STANDARD_QV,
        "standard.ar" => STANDARD_AR,
        "fdelta.ar" => FDELTA_AR,
        "perp-t.ar" => PERP_T_AR,
        "perp-t-prime.ar" => PERP_T_PRIME_AR,
        "d5.qv" => D5_QV,
        "d5.ar" => D5_AR,
        "kronecker.qv" => KRONECKER_QV,
        "kronecker-fd.ar" => KRONECKER_FD_AR,
        "two-singletons.ar" => TWO_SINGLETONS_AR,
        "helical.qv" => HELICAL_QV,
        "helical.ar" => HELICAL_AR,
        "worked-slice.qv" => WORKED_SLICE_QV,
        other => return Err(Error::UnknownFixture(other.to_string())),
    })
}

/// Load a window fixture, honouring an override directory when given (the
/// CLI wires `ARQKIT_FIXTURES` through here).
pub fn load_window(
    name: &str,
    override_dir: Option<&std::path::Path>,
) -> Result<TranslationQuiver> {
    let text = read_fixture(name, override_dir)?;
    parse_ar_quiver(&text)
}

pub fn load_quiver(name: &str, override_dir: Option<&std::path::Path>) -> Result<Quiver> {
    let text = read_fixture(name, override_dir)?;
    parse_quiver(&text)
}

fn read_fixture(name: &str, override_dir: Option<&std::path::Path>) -> Result<String> {
    if let Some(dir) = override_dir {
        let path = dir.join(name);
        if path.exists() {
            return std::fs::read_to_string(&path)
                .map_err(|e| Error::Io(format!("{}: {e}", path.display())));
        }
    }
    fixture_text(name).map(str::to_string)
}

/// All window fixtures, in registry order.
pub fn all_windows() -> Vec<(&'static str, TranslationQuiver)> {
    FIXTURE_NAMES
        .iter()
        .filter(|n| n.ends_with(".ar"))
        .map(|&n| (n, parse_ar_quiver(fixture_text(n).unwrap()).expect(n)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arquiver::validate;

    #[test]
    fn every_window_fixture_validates_clean() {
        for (name, window) in all_windows() {
            let report = validate(&window);
            assert!(report.is_clean(), "{name}: {report}");
        }
    }

    #[test]
    fn every_quiver_fixture_parses() {
        for name in FIXTURE_NAMES.iter().filter(|n| n.ends_with(".qv")) {
            let q = load_quiver(name, None).unwrap();
            assert!(q.vertex_count() > 0, "{name}");
        }
    }

    #[test]
    fn a3_shape() {
        let w = load_window("a3.ar", None).unwrap();
        assert_eq!(w.vertex_count(), 6);
        assert_eq!(w.arrows().len(), 6);
        assert_eq!((0..6).filter(|&v| w.tau(v).is_some()).count(), 3);
        assert_eq!(w.connected_components().len(), 1);
    }

    #[test]
    fn standard_example_labels() {
        let w = load_window("standard.ar", None).unwrap();
        assert_eq!(w.vertex_count(), 22);
        let mut labels: Vec<&str> = w.vertices().iter().map(|v| v.label.as_str()).collect();
        labels.sort_unstable();
        labels.dedup();
        assert_eq!(labels.len(), 19);
    }

    #[test]
    fn twisted_has_duplicate_labels() {
        let w = load_window("twisted.ar", None).unwrap();
        assert_eq!(w.vertex_count(), 16);
        let s2_count = w.vertices().iter().filter(|v| v.label == "S2").count();
        assert_eq!(s2_count, 3);
    }

    #[test]
    fn two_singleton_components() {
        let w = load_window("two-singletons.ar", None).unwrap();
        let comps = w.connected_components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.vertex_count() == 1));
    }

    #[test]
    fn roundtrip_identity_on_all_fixtures() {
        for (name, window) in all_windows() {
            let text = window.to_interchange();
            let again = parse_ar_quiver(&text).unwrap();
            assert_eq!(again.to_interchange(), text, "{name}");
        }
    }

    #[test]
    fn corrupting_a_dim_entry_breaks_additivity() {
        for (name, window) in all_windows() {
            // corrupt the first vertex that sits inside a complete mesh
            let Some(victim) = (0..window.vertex_count()).find(|&v| {
                window.vertex(v).dim_vector.is_some()
                    && window.tau(v).is_some()
                    && window.vertex(v).mesh_complete
            }) else {
                continue;
            };
            let mut bad = window.clone();
            let dims = bad.vertex_mut(victim).dim_vector.as_mut().unwrap();
            dims[0] += 1;
            let report = validate(&bad);
            assert!(
                report.has_rule("additivity"),
                "{name} should fail additivity"
            );
        }
    }
}
