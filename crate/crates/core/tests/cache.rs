use std::fs;

use deltacat::macdonald::htilde_table;
use deltacat::verify::cache::{digest, serialize_table, table_file_name, TableCache, MANIFEST_FILE};
use deltacat::Error;

#[test]
fn cold_warm_and_tampered() {
    let dir = tempfile::tempdir().unwrap();
    let cache = TableCache::open(dir.path()).unwrap();

    let cold = cache.prepare(1..=4).unwrap();
    assert!(cold.warnings.is_empty());
    assert!(cold.loaded.is_empty());
    let manifest = cache.read_manifest().unwrap();
    assert_eq!(manifest.format, "1");
    assert_eq!(manifest.entries.len(), 4);
    for n in 1..=4 {
        let bytes = fs::read(dir.path().join(table_file_name(n))).unwrap();
        assert_eq!(manifest.entries[&n].sha256, digest(&bytes));
        // rebuilding reproduces the stored bytes
        assert_eq!(serialize_table(&htilde_table(n)), bytes);
    }

    let warm = cache.prepare(1..=4).unwrap();
    assert_eq!(warm.loaded, vec![1, 2, 3, 4]);
    assert!(warm.warnings.is_empty());

    let victim = dir.path().join(table_file_name(3));
    let mut bytes = fs::read(&victim).unwrap();
    let pos = bytes.iter().position(|&b| b == b'1').unwrap();
    bytes[pos] = b'2';
    fs::write(&victim, &bytes).unwrap();
    let tampered = cache.prepare(1..=4).unwrap();
    assert_eq!(tampered.loaded, vec![1, 2, 4]);
    assert_eq!(tampered.warnings.len(), 1);
    assert!(tampered.warnings[0].contains("htilde_3.json"));
    assert_eq!(fs::read(&victim).unwrap(), serialize_table(&htilde_table(3)));

    fs::remove_file(dir.path().join(table_file_name(2))).unwrap();
    let missing = cache.prepare(1..=4).unwrap();
    assert_eq!(missing.warnings.len(), 1);
    assert!(dir.path().join(table_file_name(2)).exists());
    let leftovers: Vec<_> = fs::read_dir(dir.path())
        .unwrap()
        .filter_map(|e| e.ok())
        .filter(|e| e.file_name().to_string_lossy().ends_with(".tmp"))
        .collect();
    assert!(leftovers.is_empty());
}

#[test]
fn errors_name_the_path() {
    let dir = tempfile::tempdir().unwrap();
    let cache = TableCache::open(dir.path()).unwrap();
    fs::write(dir.path().join(MANIFEST_FILE), "not json").unwrap();
    match cache.prepare(1..=1) {
        Err(Error::CacheFormat { path, .. }) => assert!(path.ends_with(MANIFEST_FILE)),
        other => panic!("expected a format error, got {other:?}"),
    }

    let file = dir.path().join("plain");
    fs::write(&file, "x").unwrap();
    match TableCache::open(file.join("sub")) {
        Err(Error::Io { path, .. }) => assert!(path.starts_with(&file)),
        other => panic!("expected an I/O error, got {:?}", other.err()),
    }
}
