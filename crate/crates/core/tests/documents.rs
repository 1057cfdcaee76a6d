//! Input documents: every fixture parses, serializes and parses back to the
//! same splitting, and the seeded random families produce valid documents.

mod common;

use ggvol_core::interface::document::{parse_document, serialize_document};
use ggvol_core::interface::run::{run, Command, Format, RunConfig, Source};
use ggvol_core::{Caps, Error};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn fixtures_round_trip() {
    let caps = Caps::default();
    for (name, y) in common::fixtures() {
        let text = serialize_document(&y).unwrap();
        let back = parse_document(&text, &caps).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(back, y, "{name}");
        assert_eq!(serialize_document(&back).unwrap(), text, "{name}");
    }
}

#[test]
fn random_documents_parse() {
    let caps = Caps::default();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..50 {
        for text in [
            common::random_free_product(&mut rng),
            common::random_finite_amalgam(&mut rng),
            common::random_finite_hnn(&mut rng),
        ] {
            let y = parse_document(&text, &caps).unwrap_or_else(|e| panic!("{e}\n{text}"));
            assert!(y.complexity().unwrap() >= 1);
        }
    }
}

#[test]
fn missing_file_is_an_io_error() {
    let config = RunConfig::new(Command::Complexity, Source::File(common::fixture_dir().join("absent.toml")));
    assert!(matches!(run(&config), Err(Error::Io(_))));
}

#[test]
fn reduce_output_is_a_valid_document() {
    let mut config = RunConfig::new(Command::Reduce, Source::File(common::fixture_dir().join("free2.toml")));
    config.format = Format::Doc;
    let out = run(&config).unwrap();
    let v: serde_json::Value = serde_json::from_str(&out.text).unwrap();
    let reduced = parse_document(v["splitting"].as_str().unwrap(), &Caps::default()).unwrap();
    assert!(reduced.is_reduced().unwrap());
    assert_eq!(reduced.vertices().len(), 2);
}
