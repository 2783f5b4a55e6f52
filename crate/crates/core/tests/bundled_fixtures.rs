use std::path::{Path, PathBuf};

use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use pigen_core::bound::{read_bound_file, BoundInput};
use pigen_core::fixtures::derive_bound_input;
use pigen_core::groupfile::read_group_file;
use pigen_core::Limits;

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn bundled(name: &str) -> BoundInput {
    read_bound_file(fixtures().join(format!("bounds/{name}.json"))).unwrap()
}

fn column(input: &BoundInput, label: &str) -> Vec<u64> {
    let col = input.maximals.iter().find(|c| c.label == label).unwrap();
    col.values.iter().map(|v| u64::try_from(v).unwrap()).collect()
}

fn class_names(input: &BoundInput) -> Vec<&str> {
    input.classes.iter().map(|c| c.name.as_str()).collect()
}

// Columns below are transcribed from the GAP character table library
// (induced trivial characters of the maximal subgroups of odd index).

#[test]
fn m11_matches_library_table() {
    let m = bundled("m11");
    assert_eq!(
        class_names(&m),
        ["1A", "2A", "3A", "4A", "5A", "6A", "8A", "8B", "11A", "11B"]
    );
    let sizes: Vec<u64> = m.classes.iter().map(|c| u64::try_from(&c.size).unwrap()).collect();
    assert_eq!(sizes, [1, 165, 440, 990, 1584, 1320, 990, 990, 720, 720]);
    assert_eq!(column(&m, "M11"), [11, 3, 2, 3, 1, 0, 1, 1, 0, 0]);
    assert_eq!(column(&m, "M55"), [55, 7, 1, 3, 0, 1, 1, 1, 0, 0]);
    assert_eq!(column(&m, "M165"), [165, 13, 3, 1, 0, 1, 1, 1, 0, 0]);
}

#[test]
fn m12_matches_library_table() {
    let m = bundled("m12");
    assert_eq!(
        class_names(&m),
        ["1A", "2A", "2B", "3A", "3B", "4A", "4B", "5A", "6A", "6B", "8A", "8B", "10A", "11A", "11B"]
    );
    let mut cols = vec![column(&m, "M495a"), column(&m, "M495b")];
    cols.sort();
    let mut expected = vec![
        vec![495, 15, 31, 9, 0, 3, 3, 0, 0, 1, 1, 1, 0, 0, 0],
        vec![495, 35, 15, 0, 6, 3, 3, 0, 2, 0, 1, 1, 0, 0, 0],
    ];
    expected.sort();
    assert_eq!(cols, expected);
}

#[test]
fn j2_matches_library_table() {
    let j = bundled("j2");
    let sizes: Vec<u64> = j.classes.iter().map(|c| u64::try_from(&c.size).unwrap()).collect();
    assert_eq!(
        sizes,
        [
            1, 315, 2520, 560, 16800, 6300, 2016, 2016, 12096, 12096, 25200, 50400, 86400, 75600, 30240, 30240, 60480,
            60480, 50400, 40320, 40320
        ]
    );
    assert_eq!(
        column(&j, "M315"),
        [315, 11, 15, 45, 0, 7, 0, 0, 5, 5, 5, 0, 0, 1, 0, 0, 1, 1, 1, 0, 0]
    );
    assert_eq!(
        column(&j, "M525"),
        [525, 45, 5, 30, 6, 5, 0, 0, 0, 0, 6, 2, 0, 1, 0, 0, 0, 0, 2, 0, 0]
    );
    assert_eq!(j.normalizer_index, BigUint::from(3u32));
}

#[test]
fn mathieu_data_rederives_from_generators() {
    let limits = Limits::default();
    for (name, file) in [("M11", "m11"), ("M12", "m12")] {
        let g = read_group_file(fixtures().join(format!("sporadic/{file}.grp"))).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let d = derive_bound_input(name, &g, None, &mut rng, &limits).unwrap();
        assert_eq!(d.input, bundled(file), "{name}");
        assert_eq!(d.input.normalizer_index, BigUint::from(1u32));
    }
}

#[test]
fn j2_rederives_from_generators_and_supplied_maximals() {
    let limits = Limits {
        max_order: 1_000_000,
        ..Limits::default()
    };
    let read = |f: &str| read_group_file(fixtures().join(format!("sporadic/{f}.grp"))).unwrap();
    let g = read("j2");
    let supplied = vec![read("j2_max315"), read("j2_max525")];
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let d = derive_bound_input("J2", &g, Some(supplied), &mut rng, &limits).unwrap();
    assert_eq!(d.input, bundled("j2"));
}

#[test]
fn catalog_orders() {
    let expected: &[(&str, u64)] = &[
        ("a4", 12),
        ("a4xc3", 36),
        ("a5", 60),
        ("a5xc2", 120),
        ("a6", 360),
        ("c15", 15),
        ("c3wrc2", 18),
        ("c6", 6),
        ("d10", 10),
        ("d12", 12),
        ("d8", 8),
        ("f20", 20),
        ("f21", 21),
        ("psl211", 660),
        ("psl27", 168),
        ("psl28", 504),
        ("q8", 8),
        ("s3", 6),
        ("s3wrc2", 72),
        ("s3xs3", 36),
        ("s4", 24),
        ("s4wrc2", 1152),
        ("s5", 120),
        ("s6", 720),
        ("sl23", 24),
    ];
    for (name, order) in expected {
        let g = read_group_file(fixtures().join(format!("groups/{name}.grp"))).unwrap();
        assert_eq!(g.order(), BigUint::from(*order), "{name}");
    }
    let on_disk = std::fs::read_dir(fixtures().join("groups")).unwrap().count();
    assert_eq!(on_disk, expected.len());
}

#[test]
fn sporadic_orders() {
    for (name, order) in [
        ("m11", 7920u64),
        ("m12", 95040),
        ("j2", 604800),
        ("j2_max315", 1920),
        ("j2_max525", 1152),
    ] {
        let g = read_group_file(fixtures().join(format!("sporadic/{name}.grp"))).unwrap();
        assert_eq!(g.order(), BigUint::from(order), "{name}");
    }
}
