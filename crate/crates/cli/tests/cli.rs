//! End-to-end behaviour of the binary: exit codes, fixture resolution, the
//! environment override, and the seeds pipeline.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_arqkit"))
}

#[test]
fn usage_errors_exit_2() {
    let out = bin().arg("no-such-subcommand").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["classify", "--bogus-flag"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn domain_errors_exit_1() {
    // cyclic quiver rejected by the Coxeter construction
    let dir = tempdir("arqkit-domain");
    let qv = dir.join("cyclic.qv");
    std::fs::write(&qv, "vertices 1 2; arrows a:1->2 b:2->1\n").unwrap();
    let out = bin()
        .args(["coxeter", "--quiver"])
        .arg(&qv)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("oriented cycle"), "{stderr}");
}

#[test]
fn validate_reports_and_fails_on_corruption() {
    let dir = tempdir("arqkit-validate");
    let good = bin().args(["validate", "a3.ar"]).output().unwrap();
    assert!(good.status.success());

    let text = String::from_utf8(
        bin()
            .args(["fixtures", "show", "a3.ar"])
            .output()
            .unwrap()
            .stdout,
    )
    .unwrap();
    let corrupted = text.replace("vertex s2 S2 0,1,0", "vertex s2 S2 9,1,0");
    let bad_path = dir.join("bad.ar");
    std::fs::write(&bad_path, corrupted).unwrap();
    let bad = bin().args(["validate"]).arg(&bad_path).output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
    let stdout = String::from_utf8_lossy(&bad.stdout);
    assert!(stdout.contains("additivity"), "{stdout}");
}

#[test]
fn fixtures_install_and_env_override() {
    let dir = tempdir("arqkit-fixtures");
    let out = bin()
        .args(["fixtures", "install", "--dir"])
        .arg(&dir)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(dir.join("standard.ar").exists());

    // an override directory shadows the bundled corpus by name
    let shadowed = dir.join("a3.qv");
    std::fs::write(&shadowed, "vertices z1 z2; arrows a:z1->z2\n").unwrap();
    let out = bin()
        .env("ARQKIT_FIXTURES", &dir)
        .args(["knit", "--quiver", "a3.qv", "--direction", "right"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    // two vertices knit to the three-vertex A2 component
    assert_eq!(stdout.matches("vertex ").count(), 3, "{stdout}");
}

#[test]
fn knit_from_seeds_pipeline() {
    let dir = tempdir("arqkit-seeds");
    let seeds = dir.join("seeds.txt");
    std::fs::write(
        &seeds,
        "\
arquiver
vertex a A 1,0 - PM
vertex b B 1,1 - M
arrow a b 1
project P2 0,1 - 1.1
",
    )
    .unwrap();
    let out = bin()
        .args(["knit", "--seeds"])
        .arg(&seeds)
        .args(["--cap", "8"])
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("ins_P2"), "{stdout}");
}

#[test]
fn knit_writes_output_file() {
    let dir = tempdir("arqkit-out");
    let out_path = dir.join("a3-knit.ar");
    let out = bin()
        .args([
            "knit",
            "--quiver",
            "a3.qv",
            "--direction",
            "right",
            "--cap",
            "16",
            "--out",
        ])
        .arg(&out_path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = std::fs::read_to_string(&out_path).unwrap();
    assert_eq!(text.matches("vertex ").count(), 6);
    // the emitted file round-trips through validate
    let check = bin().args(["validate"]).arg(&out_path).output().unwrap();
    assert!(check.status.success());
}

#[test]
fn subgraph_type_and_tree_type_reports() {
    let out = bin()
        .args(["subgraph-type", "helical.ar"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("A∞"), "{stdout}");

    let tube = String::from_utf8(
        bin()
            .args(["tube", "make", "--rank", "3", "--height", "5"])
            .output()
            .unwrap()
            .stdout,
    )
    .unwrap();
    let dir = tempdir("arqkit-tube");
    let path = dir.join("t.ar");
    std::fs::write(&path, tube).unwrap();
    let out = bin()
        .args(["tree-type"])
        .arg(&path)
        .args(["--base", "t0q1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("A(5)"), "{stdout}");
    assert!(stdout.contains("truncated: true"), "{stdout}");

    let out = bin()
        .args(["tube", "recognize"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(
        String::from_utf8_lossy(&out.stdout).contains("rank 3"),
        "tube recognize"
    );
}

#[test]
fn translation_matrix_on_d5_slice() {
    let out = bin()
        .args([
            "translation-matrix",
            "d5.ar",
            "--slice",
            "s3,t2i2,t2i3,t2i4,t2i5",
        ])
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert_eq!(stdout.lines().count(), 5, "{stdout}");
    // deterministic across runs
    let again = bin()
        .args([
            "translation-matrix",
            "d5.ar",
            "--slice",
            "s3,t2i2,t2i3,t2i4,t2i5",
        ])
        .output()
        .unwrap();
    assert_eq!(out.stdout, again.stdout);
}

fn tempdir(prefix: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("{prefix}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
