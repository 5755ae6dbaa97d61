//! Parser robustness: arbitrary input must come back as a typed error,
//! never a panic.

use proptest::prelude::*;

use eigenstrata_cli::ingest::{detect_format, parse_csv_str, parse_json_str, parse_phylip_str};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn csv_parser_never_panics(input in ".{0,256}") {
        let _ = parse_csv_str(&input);
    }

    #[test]
    fn json_parser_never_panics(input in ".{0,256}") {
        let _ = parse_json_str(&input);
    }

    #[test]
    fn phylip_parser_never_panics(input in ".{0,256}") {
        let _ = parse_phylip_str(&input);
    }

    #[test]
    fn detection_never_panics(input in ".{0,256}") {
        let _ = detect_format(std::path::Path::new("anything"), &input);
    }

    #[test]
    fn numeric_looking_csv_never_panics(
        rows in proptest::collection::vec(
            proptest::collection::vec(-1e300..1e300f64, 0..6),
            0..6,
        )
    ) {
        let text = rows
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join("\n");
        let _ = parse_csv_str(&text);
    }

    #[test]
    fn phylip_with_fuzzed_counts_never_panics(n in 0usize..40, body in ".{0,200}") {
        let _ = parse_phylip_str(&format!("{n}\n{body}"));
    }
}

#[test]
fn hostile_corpus_returns_errors() {
    let corpus = [
        "",
        "\n\n\n",
        ",",
        ",,,\n,,,",
        "[[",
        "{\"matrix\": [[1,2],[2,\"x\"]]}",
        "[[1,2],[3]]",
        "[]",
        "{\"names\": [\"A\"]}",
        "0\n",
        "2\nA 1\nB 1 0\n",
        "1e999,0\n0,1\n",
        "nan,0\n0,1\n",
        "inf,0\n0,1\n",
        "-,-\n-,-\n",
        "\u{0}\u{1}\u{2}",
        "5\nA 0 0 0 0 0\n",
    ];
    for input in corpus {
        assert!(parse_csv_str(input).is_err() || parse_json_str(input).is_err());
        // every parser must return, not panic
        let _ = parse_csv_str(input);
        let _ = parse_json_str(input);
        let _ = parse_phylip_str(input);
    }
}

#[test]
fn non_finite_values_are_typed_errors() {
    // "nan"/"inf" parse as f64 specials; matrix construction must reject them
    let err = parse_csv_str("nan,0\n0,1\n").unwrap_err();
    assert_eq!(err.code(), "not_finite");
    let err = parse_json_str("[[1e999,0],[0,1]]").unwrap_err();
    // serde_json rejects the literal before matrix construction
    assert!(err.code() == "parse_error" || err.code() == "not_finite");
}
