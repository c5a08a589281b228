use charclass::catalog::{
    build_builtin, build_hilb2, builtin_names, load_record, parse_record, record_to_toml,
    save_record,
};
use charclass::error::Error;
use charclass::exact::int;

const QUINTIC: &str = r#"
version = 1
name = "quintic3"
dim = 3
index = 0
hodge = [[1, 0, 0, 1], [0, 1, 101, 0], [0, 101, 1, 0], [1, 0, 0, 1]]

[ring]
kind = "projective"
degree = "5"

[tangent_total]
0 = "1"
1 = "0"
2 = "10"
3 = "-40"

[annotations]
simply_connected = true
kappa = "0"
"#;

#[test]
fn every_builtin_survives_a_file() {
    let dir = tempfile::tempdir().unwrap();
    for name in builtin_names().into_iter().map(|n| n.replace("(k)", "(4)")) {
        let r = build_builtin(&name).unwrap();
        let path = dir.path().join(format!("{name}.toml"));
        save_record(&r, &path).unwrap();
        assert_eq!(load_record(&path).unwrap(), r, "{name}");
    }
}

#[test]
fn hand_written_quintic() {
    let r = parse_record(QUINTIC, "quintic3.toml").unwrap();
    // (1+h)^5/(1+5h) integrated against h^3 = 5.
    assert_eq!(r.model.euler_number().unwrap(), int(-200));
    assert!(r.model.chern_class(1).is_zero());
    assert_eq!(r.betti(), Some(vec![1, 0, 1, 204, 1, 0, 1]));
    let with_derived = record_to_toml(&r).unwrap();
    assert!(with_derived.contains("euler = \"-200\""), "{with_derived}");
    assert_eq!(parse_record(&with_derived, "again").unwrap(), r);
}

#[test]
fn hodge_and_chern_disagreement_is_rejected() {
    let bad = QUINTIC.replace("101", "100");
    assert!(parse_record(&bad, "bad.toml").is_err());
}

#[test]
fn tampered_derived_number_is_rejected() {
    let text = record_to_toml(&build_builtin("hilb2_k3").unwrap()).unwrap();
    let bad = text.replace("euler = \"324\"", "euler = \"325\"");
    assert_ne!(bad, text);
    let err = parse_record(&bad, "hilb2.toml").unwrap_err();
    assert!(matches!(err, Error::Rejected(_)), "{err}");
}

#[test]
fn version_and_unknown_fields() {
    let future = QUINTIC.replace("version = 1", "version = 99");
    let err = parse_record(&future, "f.toml").unwrap_err().to_string();
    assert!(err.contains("version 99"), "{err}");

    let extra = QUINTIC.replace("[ring]", "[ring]\ncolour = \"red\"");
    let err = parse_record(&extra, "f.toml").unwrap_err().to_string();
    assert!(err.contains("colour"), "{err}");

    let missing = QUINTIC.replace("kind = \"projective\"\n", "");
    assert!(parse_record(&missing, "f.toml").is_err());
}

#[test]
fn load_reports_io_errors() {
    let dir = tempfile::tempdir().unwrap();
    assert!(matches!(
        load_record(&dir.path().join("absent.toml")),
        Err(Error::Io { .. })
    ));
}

#[test]
fn hilbert_square_needs_a_k_trivial_surface() {
    let w = build_builtin("kodaira_w_surface").unwrap();
    assert!(matches!(build_hilb2(&w), Err(Error::NotApplicable(_))));
    let c = build_builtin("cubic4").unwrap();
    assert!(matches!(build_hilb2(&c), Err(Error::NotASurface(_))));
}
