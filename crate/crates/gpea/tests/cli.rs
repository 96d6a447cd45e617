//! End-to-end command tests: file handling, exit codes, output shapes.

use std::path::PathBuf;

use gpea::cli;

fn run(args: &[&str]) -> (i32, String) {
    let argv: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    let mut buf = Vec::new();
    let code = cli::run(&argv, &mut buf);
    (code, String::from_utf8(buf).expect("utf8 output"))
}

fn write_model(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn validate_accepts_and_rejects() {
    let dir = tempfile::tempdir().unwrap();
    let good = write_model(&dir, "d4.gpea", "gpea 4\nsum 1 2 3\nsum 2 1 3\n");
    let (code, out) = run(&["gpea", "validate", good.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("valid model on 4 elements"));

    let bad = write_model(&dir, "bad.gpea", "gpea 2\nsum 1 1 0\n");
    let (code, out) = run(&["gpea", "validate", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(out.contains("GPEA4 at (1,1)"), "{out}");

    let (code, out) = run(&["gpea", "validate", bad.to_str().unwrap(), "--format", "machine"]);
    assert_eq!(code, 2);
    assert!(out.contains("record=violation axiom=GPEA4 witness=1,1"), "{out}");

    let (code, _) = run(&["gpea", "validate", "/no/such/file.gpea"]);
    assert_eq!(code, 2);
}

#[test]
fn info_and_exocenter_shapes() {
    let dir = tempfile::tempdir().unwrap();
    let d4 = write_model(&dir, "d4.gpea", "gpea 4\nlabels 0 a b 1\nsum 1 2 3\nsum 2 1 3\n");
    let (code, out) = run(&["gpea", "info", d4.to_str().unwrap(), "--format", "machine"]);
    assert_eq!(code, 0);
    assert!(
        out.contains("record=info n=4 pea=true top=3 commutative=true gex=4 center=0,1,2,3 unit=3 atoms=1,2"),
        "{out}"
    );
    let (code, out) = run(&["gpea", "exocenter", d4.to_str().unwrap(), "--format", "machine"]);
    assert_eq!(code, 0);
    assert!(out.contains("record=exocenter size=4"), "{out}");
    assert!(out.contains("record=exomap index=0 values=0,0,0,0 image=0"), "{out}");
}

#[test]
fn tdclose_examples() {
    let dir = tempfile::tempdir().unwrap();
    let v3 = write_model(&dir, "v3.gpea", "gpea 3\n");
    let (code, out) =
        run(&["gpea", "tdclose", v3.to_str().unwrap(), "--Q", "list:1,2", "--op", "gamma"]);
    assert_eq!(code, 0);
    assert!(out.contains("result: {0,1,2}"), "{out}");

    let d4 = write_model(&dir, "d4.gpea", "gpea 4\nsum 1 2 3\nsum 2 1 3\n");
    let (code, out) =
        run(&["gpea", "tdclose", d4.to_str().unwrap(), "--Q", "list:1", "--op", "prime"]);
    assert_eq!(code, 0);
    assert!(out.contains("result: {0,2}"), "{out}");
    let (code, out) =
        run(&["gpea", "tdclose", d4.to_str().unwrap(), "--Q", "list:1,2", "--op", "gamma"]);
    assert_eq!(code, 0);
    assert!(out.contains("result: {0,1,2,3}"), "{out}");
}

#[test]
fn decompose_fundamental_triples() {
    let dir = tempfile::tempdir().unwrap();
    let d4 = write_model(&dir, "d4.gpea", "gpea 4\nsum 1 2 3\nsum 2 1 3\n");
    let (code, out) = run(&["gpea", "decompose", d4.to_str().unwrap(), "--K", "all", "--format", "machine"]);
    assert_eq!(code, 0);
    // the typed part is everything: the identity map, then two zero maps
    assert!(out.contains("record=fundamental pi1=0,1,2,3 pi2=0,0,0,0 pi3=0,0,0,0"), "{out}");

    let v3 = write_model(&dir, "v3.gpea", "gpea 3\n");
    let (code, out) = run(&["gpea", "decompose", v3.to_str().unwrap(), "--K", "all", "--format", "machine"]);
    assert_eq!(code, 0);
    assert!(out.contains("record=fundamental pi1=0,0,0 pi2=0,1,2 pi3=0,0,0"), "{out}");

    // nested pair on the vee: K = {0} inside F = everything
    let (code, out) = run(&[
        "gpea", "decompose", v3.to_str().unwrap(), "--K", "list:0", "--F", "all", "--format", "machine",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("record=types piI=0,0,0 piII=0,1,2 piIII=0,0,0"), "{out}");

    // K not contained in F is a usage error
    let (code, _) = run(&[
        "gpea", "decompose", v3.to_str().unwrap(), "--K", "all", "--F", "list:0",
    ]);
    assert_eq!(code, 1);

    // a non-type-determining K is rejected without --close
    let (code, out) = run(&["gpea", "decompose", d4.to_str().unwrap(), "--K", "list:3"]);
    assert_eq!(code, 1);
    assert!(out.contains("not type-determining"), "{out}");
    let (code, out) = run(&[
        "gpea", "decompose", d4.to_str().unwrap(), "--K", "list:3", "--close",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("using its closure {0,1,2,3}"), "{out}");
}

#[test]
fn enumerate_counts() {
    let (code, out) = run(&["gpea", "enumerate", "--order", "3", "--format", "machine"]);
    assert_eq!(code, 0);
    assert!(out.contains("record=enumerate order=3 count=2"), "{out}");
    let (code, out) = run(&["gpea", "enumerate", "--order", "5", "--format", "machine"]);
    assert_eq!(code, 0);
    assert!(out.contains("record=enumerate order=5 count=13"), "{out}");
    // the cap guards the exhaustive search
    let (code, _) = run(&["gpea", "enumerate", "--order", "9"]);
    assert_eq!(code, 1);
}

#[test]
fn laws_on_a_file_and_selection() {
    let dir = tempfile::tempdir().unwrap();
    let d4 = write_model(&dir, "d4.gpea", "gpea 4\nsum 1 2 3\nsum 2 1 3\n");
    let (code, out) = run(&[
        "gpea", "laws", d4.to_str().unwrap(), "--law", "boolalg,EXCprop.iv", "--format", "machine",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("law=boolalg status=pass"), "{out}");
    assert!(out.contains("record=summary models=1 pass=2 fail=0"), "{out}");

    let (code, out) = run(&["gpea", "laws", d4.to_str().unwrap(), "--law", "no-such-law"]);
    assert_eq!(code, 1);
    assert!(out.contains("unknown law id"), "{out}");

    // both targets or neither is a usage error
    let (code, _) = run(&["gpea", "laws"]);
    assert_eq!(code, 1);
    let (code, _) = run(&["gpea", "laws", d4.to_str().unwrap(), "--corpus", "2"]);
    assert_eq!(code, 1);
}

#[test]
fn labels_resolve_in_specs() {
    let dir = tempfile::tempdir().unwrap();
    let d4 = write_model(&dir, "d4.gpea", "gpea 4\nlabels 0 a b 1\nsum 1 2 3\nsum 2 1 3\n");
    let (code, out) = run(&[
        "gpea", "tdclose", d4.to_str().unwrap(), "--Q", "labels:a,b", "--op", "gamma",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("result: {0,a,b,1}"), "{out}");
    let (code, _) = run(&[
        "gpea", "tdclose", d4.to_str().unwrap(), "--Q", "labels:zzz", "--op", "gamma",
    ]);
    assert_eq!(code, 1);
}

#[test]
fn seedless_flag_is_accepted() {
    let (code, out) = run(&["gpea", "enumerate", "--order", "2", "--seedless", "--format", "machine"]);
    assert_eq!(code, 0);
    assert!(out.contains("record=enumerate order=2 count=1"), "{out}");
}

#[test]
fn shipped_models_validate_and_pass_laws() {
    let root = concat!(env!("CARGO_MANIFEST_DIR"), "/../../models");
    for name in ["d4", "v3", "e3", "nc5", "cube8"] {
        let path = format!("{root}/{name}.gpea");
        let (code, out) = run(&["gpea", "validate", &path]);
        assert_eq!(code, 0, "{name}: {out}");
        let (code, out) = run(&["gpea", "laws", &path]);
        assert_eq!(code, 0, "{name}: {out}");
        assert!(out.contains("141 checks passed, 0 failed"), "{name}: {out}");
    }
}
